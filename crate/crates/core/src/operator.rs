//! Linear operators on a truncated [`Ambient`] algebra.
//!
//! A [`Derivation`] is given by its images on generators and a parity; it is
//! extended to monomials by the signed Leibniz rule. Everything else
//! (compositions, commutators, left multiplications) is built as an [`Op`]
//! expression tree and evaluated term by term.

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::graded::{Ambient, GradedElement, Monomial};
use crate::report::ValidationReport;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
  Even,
  Odd,
}

impl Parity {
  pub fn is_odd(self) -> bool { self == Parity::Odd }

  pub fn combine(self, other: Parity) -> Parity { if self == other { Parity::Even } else { Parity::Odd } }
}

/// A graded derivation of the ambient algebra, determined by generator images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
  pub name: String,
  pub parity: Parity,
  /// Images of the odd generators (`θ^1..θ^n`, then the module's odd generators).
  pub odd_images: Vec<GradedElement>,
  /// Images of the even generators (`φ^1..φ^n`, then the module's even generators).
  pub even_images: Vec<GradedElement>,
}

impl Derivation {
  pub fn zero(amb: &Ambient, name: impl Into<String>, parity: Parity) -> Self {
    Self {
      name: name.into(),
      parity,
      odd_images: vec![GradedElement::zero(); amb.odd_len()],
      even_images: vec![GradedElement::zero(); amb.even_len()],
    }
  }

  /// `Σ a_r · D_r` over derivations of one parity.
  pub fn linear_combination(name: impl Into<String>, parts: &[(Scalar, &Derivation)]) -> Self {
    let first = parts.first().expect("at least one derivation").1;
    assert!(parts.iter().all(|(_, d)| d.parity == first.parity), "mixed parities in a derivation sum");
    let mut out = Self {
      name: name.into(),
      parity: first.parity,
      odd_images: vec![GradedElement::zero(); first.odd_images.len()],
      even_images: vec![GradedElement::zero(); first.even_images.len()],
    };
    for (a, d) in parts {
      for (acc, img) in out.odd_images.iter_mut().zip(&d.odd_images) {
        acc.add_scaled(img, a);
      }
      for (acc, img) in out.even_images.iter_mut().zip(&d.even_images) {
        acc.add_scaled(img, a);
      }
    }
    out
  }

  /// Signed Leibniz extension to one monomial.
  ///
  /// The monomial is read as `E · o_1 ⋯ o_r` with the even part `E` first and
  /// odd generators in increasing order; hitting `o_j` costs
  /// `(−1)^{parity · (j − 1)}`.
  pub fn apply_monomial(&self, amb: &Ambient, m: &Monomial) -> GradedElement {
    let mut out = GradedElement::zero();
    for (g, &e) in m.even.iter().enumerate() {
      if e == 0 || self.even_images[g].is_zero() {
        continue;
      }
      let mut rest = m.clone();
      rest.even[g] -= 1;
      let coef = Scalar::from_int(e as i64);
      for (im, c) in self.even_images[g].terms() {
        if let Some((prod, negative)) = amb.mul_monomials(im, &rest) {
          let c = c * &coef;
          out.add_term(prod, if negative { -c } else { c });
        }
      }
    }
    let mut prefix = Monomial { odd: 0, even: m.even.clone() };
    let mut position = 0u32;
    let mut remaining = m.odd;
    while remaining != 0 {
      let g = remaining.trailing_zeros() as usize;
      let bit = 1u64 << g;
      remaining &= !bit;
      let image = &self.odd_images[g];
      if !image.is_zero() {
        let suffix = Monomial { odd: remaining, even: smallvec::smallvec![0; m.even.len()] };
        let flip = self.parity.is_odd() && position % 2 == 1;
        for (im, c) in image.terms() {
          let Some((left, n1)) = amb.mul_monomials(&prefix, im) else { continue };
          let Some((prod, n2)) = amb.mul_monomials(&left, &suffix) else { continue };
          let negative = n1 ^ n2 ^ flip;
          out.add_term(prod, if negative { -c } else { c.clone() });
        }
      }
      prefix.odd |= bit;
      position += 1;
    }
    out
  }

  pub fn apply(&self, amb: &Ambient, x: &GradedElement) -> GradedElement {
    let mut out = GradedElement::zero();
    for (m, c) in x.terms() {
      out.add_scaled(&self.apply_monomial(amb, m), c);
    }
    out
  }
}

/// An operator expression.
#[derive(Clone, Debug)]
pub enum Op {
  Zero,
  Identity,
  Deriv(Arc<Derivation>),
  /// Left multiplication by a fixed element.
  LeftMul(GradedElement),
  /// `Compose(vec![A, B, C]) = A ∘ B ∘ C` (C applied first).
  Compose(Vec<Op>),
  Sum(Vec<(Scalar, Op)>),
}

impl Op {
  pub fn deriv(d: Derivation) -> Op { Op::Deriv(Arc::new(d)) }

  pub fn then(self, first: Op) -> Op { compose(self, first) }

  pub fn scaled(self, a: Scalar) -> Op { Op::Sum(vec![(a, self)]) }

  pub fn neg(self) -> Op { self.scaled(-Scalar::one()) }

  pub fn plus(self, other: Op) -> Op { Op::Sum(vec![(Scalar::one(), self), (Scalar::one(), other)]) }

  pub fn minus(self, other: Op) -> Op { Op::Sum(vec![(Scalar::one(), self), (-Scalar::one(), other)]) }

  pub fn apply(&self, amb: &Ambient, x: &GradedElement) -> GradedElement {
    if x.is_zero() {
      return GradedElement::zero();
    }
    match self {
      Op::Zero => GradedElement::zero(),
      Op::Identity => x.clone(),
      Op::Deriv(d) => d.apply(amb, x),
      Op::LeftMul(e) => amb.mul(e, x),
      Op::Compose(ops) => ops.iter().rev().fold(x.clone(), |acc, op| op.apply(amb, &acc)),
      Op::Sum(parts) => {
        let mut out = GradedElement::zero();
        for (a, op) in parts {
          if !a.is_zero() {
            out.add_scaled(&op.apply(amb, x), a);
          }
        }
        out
      },
    }
  }

  pub fn apply_monomial(&self, amb: &Ambient, m: &Monomial) -> GradedElement {
    self.apply(amb, &GradedElement::from_monomial(m.clone()))
  }
}

/// `outer ∘ inner`.
pub fn compose(outer: Op, inner: Op) -> Op { Op::Compose(vec![outer, inner]) }

/// `[P, Q] = PQ − QP`.
pub fn commutator(p: &Op, q: &Op) -> Op { compose(p.clone(), q.clone()).minus(compose(q.clone(), p.clone())) }

/// `{P, Q} = PQ + QP`.
pub fn anticommutator(p: &Op, q: &Op) -> Op { compose(p.clone(), q.clone()).plus(compose(q.clone(), p.clone())) }

/// Graded commutator: anticommutator when both are odd, commutator otherwise.
pub fn graded_commutator(p: &Op, p_parity: Parity, q: &Op, q_parity: Parity) -> Op {
  if p_parity.is_odd() && q_parity.is_odd() {
    anticommutator(p, q)
  } else {
    commutator(p, q)
  }
}

/// Compares `lhs` and `rhs` on every monomial in `basis`, recording each
/// nonzero residual under `rule`.
pub fn compare_on_basis(
  amb: &Ambient,
  report: &mut ValidationReport,
  rule: &str,
  lhs: &Op,
  rhs: &Op,
  basis: &[Monomial],
) {
  use rayon::prelude::*;
  let failures: Vec<(usize, GradedElement)> = basis
    .par_iter()
    .enumerate()
    .filter_map(|(idx, m)| {
      let residual = lhs.apply_monomial(amb, m).sub(&rhs.apply_monomial(amb, m));
      (!residual.is_zero()).then_some((idx, residual))
    })
    .collect();
  report.checked += basis.len();
  for (idx, residual) in failures {
    report.push(rule, display_monomial(amb, &basis[idx]), amb.display(&residual).to_string());
  }
}

/// Prints a monomial, using `1` for the unit.
pub fn display_monomial(amb: &Ambient, m: &Monomial) -> String {
  let text = amb.format_monomial(m);
  if text.is_empty() {
    "1".into()
  } else {
    text
  }
}

/// Records every monomial in `basis` on which `op` is nonzero.
pub fn expect_zero_on_basis(amb: &Ambient, report: &mut ValidationReport, rule: &str, op: &Op, basis: &[Monomial]) {
  compare_on_basis(amb, report, rule, op, &Op::Zero, basis)
}
