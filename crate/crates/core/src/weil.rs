//! The Weil algebra `W(g) = Λ(g*) ⊗ S(g*)` with contraction `i_k`,
//! differential `d_W` and Lie derivative `L_k`.
//!
//! Generator images:
//!
//! ```text
//! i_r θ^s = δ_r^s                      i_r φ^s = 0
//! d_W θ^i = −½ Σ_{j,k} c^i_{jk} θ^j θ^k + φ^i
//! d_W φ^i = −Σ_{j,k} c^i_{jk} θ^j φ^k
//! L_i θ^j = −Σ_k c^j_{ik} θ^k           L_i φ^j = −Σ_k c^j_{ik} φ^k
//! ```
//!
//! `L_k` is built from the explicit images above and the constructor checks
//! that they agree with `{d_W, i_k}` on every generator.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graded::{Ambient, Exponents, GradedElement, ModMono};
use crate::lie::LieAlgebraSpec;
use crate::operator::{anticommutator, commutator, compare_on_basis, expect_zero_on_basis, Derivation, Op, Parity};
use crate::report::ValidationReport;
use crate::scalar::Scalar;

/// A linear combination of monomials in local generator numbering.
pub type LocalElement = Vec<(ModMono, Scalar)>;

/// Images of every generator of a free graded-commutative algebra.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GeneratorImages {
  pub odd: Vec<LocalElement>,
  pub even: Vec<LocalElement>,
}

impl GeneratorImages {
  pub fn zero(odd: usize, even: usize) -> Self { Self { odd: vec![Vec::new(); odd], even: vec![Vec::new(); even] } }

  pub fn is_zero(&self) -> bool { self.odd.iter().chain(&self.even).all(Vec::is_empty) }
}

/// Deliberate formula corruptions, for negative controls.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum WeilMutation {
  #[default]
  None,
  /// Drops `φ^i` from `d_W θ^i`.
  DropPhiInDTheta,
}

/// The generator images of `d_W`, `i_k` and `L_k` with `θ^i` as odd generator
/// `i` and `φ^i` as even generator `i`.
#[derive(Clone, Debug)]
pub struct WeilImages {
  pub d: GeneratorImages,
  pub i: Vec<GeneratorImages>,
  pub l: Vec<GeneratorImages>,
}

fn local(n: usize, odd: &[usize], even: &[usize]) -> ModMono {
  let mut e: Exponents = smallvec::smallvec![0; n];
  for &k in even {
    e[k] += 1;
  }
  ModMono { odd: odd.iter().fold(0, |m, &k| m | (1 << k)), even: e }
}

fn push(out: &mut LocalElement, m: ModMono, c: Scalar) {
  if c.is_zero() {
    return;
  }
  if let Some(slot) = out.iter_mut().find(|(x, _)| *x == m) {
    slot.1 += &c;
  } else {
    out.push((m, c));
  }
  out.retain(|(_, c)| !c.is_zero());
}

pub fn weil_images(spec: &LieAlgebraSpec, mutation: WeilMutation) -> WeilImages {
  let n = spec.dim();
  let c = |i, j, k| Scalar::real(spec.c(i, j, k).clone());
  let mut d = GeneratorImages::zero(n, n);
  for i in 0..n {
    let mut img = LocalElement::new();
    let half = Scalar::from_ratio(-1, 2);
    for j in 0..n {
      for k in 0..n {
        if j == k {
          continue;
        }
        // θ^j θ^k = sign · θ^{min} θ^{max}
        let sign = if j < k { Scalar::one() } else { -Scalar::one() };
        push(&mut img, local(n, &[j, k], &[]), &(&half * &c(i, j, k)) * &sign);
      }
    }
    if mutation != WeilMutation::DropPhiInDTheta {
      push(&mut img, local(n, &[], &[i]), Scalar::one());
    }
    d.odd[i] = img;
    let mut img = LocalElement::new();
    for j in 0..n {
      for k in 0..n {
        push(&mut img, local(n, &[j], &[k]), -c(i, j, k));
      }
    }
    d.even[i] = img;
  }
  let i = (0..n)
    .map(|r| {
      let mut g = GeneratorImages::zero(n, n);
      g.odd[r] = vec![(local(n, &[], &[]), Scalar::one())];
      g
    })
    .collect();
  let l = (0..n)
    .map(|i| {
      let mut g = GeneratorImages::zero(n, n);
      for j in 0..n {
        for k in 0..n {
          push(&mut g.odd[j], local(n, &[k], &[]), -c(j, i, k));
          push(&mut g.even[j], local(n, &[], &[k]), -c(j, i, k));
        }
      }
      g
    })
    .collect();
  WeilImages { d, i, l }
}

/// Places generator images as a derivation of `amb` acting on the Weil factor.
pub fn weil_factor_derivation(amb: &Ambient, name: &str, parity: Parity, images: &GeneratorImages) -> Derivation {
  let n = amb.n();
  let mut d = Derivation::zero(amb, name, parity);
  let embed = |terms: &LocalElement| -> GradedElement {
    terms
      .iter()
      .map(|(m, c)| {
        let mut mono = amb.unit_monomial();
        mono.odd = m.odd;
        mono.even[..n].copy_from_slice(&m.even);
        (mono, c.clone())
      })
      .filter(|(m, _)| amb.admissible(m))
      .collect()
  };
  for g in 0..n {
    d.odd_images[g] = embed(&images.odd[g]);
    d.even_images[g] = embed(&images.even[g]);
  }
  d
}

/// Places module generator images as `1 ⊗ P` on `amb`.
pub fn module_factor_derivation(amb: &Ambient, name: &str, parity: Parity, images: &GeneratorImages) -> Derivation {
  let n = amb.n();
  let mut d = Derivation::zero(amb, name, parity);
  let embed = |terms: &LocalElement| -> GradedElement {
    terms.iter().map(|(m, c)| (amb.lift(m), c.clone())).filter(|(m, _)| amb.admissible(m)).collect()
  };
  for (a, img) in images.odd.iter().enumerate() {
    d.odd_images[n + a] = embed(img);
  }
  for (a, img) in images.even.iter().enumerate() {
    d.even_images[n + a] = embed(img);
  }
  d
}

#[derive(Clone, Debug)]
pub struct WeilAlgebra {
  spec: LieAlgebraSpec,
  amb: Ambient,
  mutation: WeilMutation,
  d: Derivation,
  i: Vec<Derivation>,
  l: Vec<Derivation>,
}

impl WeilAlgebra {
  pub fn new(spec: &LieAlgebraSpec, truncation: u32) -> Result<Self> {
    let w = Self::build(spec, truncation, WeilMutation::None)?;
    w.check_lie_derivative_images()?;
    Ok(w)
  }

  /// Builds with a formula mutation and skips the construction-time cross-check.
  pub fn with_mutation(spec: &LieAlgebraSpec, truncation: u32, mutation: WeilMutation) -> Result<Self> {
    Self::build(spec, truncation, mutation)
  }

  fn build(spec: &LieAlgebraSpec, truncation: u32, mutation: WeilMutation) -> Result<Self> {
    let amb = Ambient::weil(spec.dim(), truncation)?;
    let images = weil_images(spec, mutation);
    let d = weil_factor_derivation(&amb, "d_W", Parity::Odd, &images.d);
    let i = images.i.iter().enumerate().map(|(k, g)| weil_factor_derivation(&amb, &format!("i_{}", k + 1), Parity::Odd, g)).collect();
    let l = images.l.iter().enumerate().map(|(k, g)| weil_factor_derivation(&amb, &format!("L_{}", k + 1), Parity::Even, g)).collect();
    Ok(Self { spec: spec.clone(), amb, mutation, d, i, l })
  }

  fn check_lie_derivative_images(&self) -> Result<()> {
    if self.amb.truncation() < 2 {
      return Ok(());
    }
    let n = self.spec.dim();
    let generators: Vec<_> = (0..n).map(|k| self.amb.theta_monomial(k)).chain((0..n).map(|k| self.amb.phi_monomial(k))).collect();
    for k in 0..n {
      let mut report = ValidationReport::new("lie-derivative");
      let derived = anticommutator(&Op::deriv(self.d.clone()), &Op::deriv(self.i[k].clone()));
      compare_on_basis(&self.amb, &mut report, "L_k = {d_W, i_k}", &Op::deriv(self.l[k].clone()), &derived, &generators);
      if let Some(v) = report.violations.first() {
        return Err(Error::Invalid(format!("Lie derivative images disagree with {{d_W, i_{}}}: {v}", k + 1)));
      }
    }
    Ok(())
  }

  pub fn spec(&self) -> &LieAlgebraSpec { &self.spec }

  pub fn ambient(&self) -> &Ambient { &self.amb }

  pub fn mutation(&self) -> WeilMutation { self.mutation }

  pub fn d_w(&self, x: &GradedElement) -> GradedElement { self.d.apply(&self.amb, x) }

  pub fn contract(&self, k: usize, x: &GradedElement) -> GradedElement { self.i[k].apply(&self.amb, x) }

  pub fn lie_derivative(&self, k: usize, x: &GradedElement) -> GradedElement { self.l[k].apply(&self.amb, x) }

  pub fn d_op(&self) -> Op { Op::deriv(self.d.clone()) }

  pub fn i_op(&self, k: usize) -> Op { Op::deriv(self.i[k].clone()) }

  pub fn l_op(&self, k: usize) -> Op { Op::deriv(self.l[k].clone()) }

  /// All six identities on every basis monomial of degree ≤ `max_degree`, for all
  /// basis pairs `(e_j, e_k)`. Rebuilds with two degrees of headroom.
  pub fn check_identities(&self, max_degree: u32) -> Result<ValidationReport> {
    let w = Self::build(&self.spec, max_degree + 2, self.mutation)?;
    let basis = w.amb.basis_up_to(max_degree);
    let ops = CalculusOps {
      d: w.d_op(),
      i: (0..w.spec.dim()).map(|k| w.i_op(k)).collect(),
      l: (0..w.spec.dim()).map(|k| w.l_op(k)).collect(),
    };
    Ok(ops.check(&w.amb, &w.spec, &basis, "weil", "d_W"))
  }
}

/// `(d, ι_k, L_k)` for one of the Cartan-calculus identity suites.
pub(crate) struct CalculusOps {
  pub d: Op,
  pub i: Vec<Op>,
  pub l: Vec<Op>,
}

impl CalculusOps {
  /// `d² = 0`, `[L_j, d] = 0`, `{i_j, i_k} = 0`, `[L_j, i_k] = i_[e_j,e_k]`,
  /// `[L_j, L_k] = L_[e_j,e_k]`, `{d, i_k} = L_k`.
  pub fn check(&self, amb: &Ambient, spec: &LieAlgebraSpec, basis: &[crate::graded::Monomial], name: &str, d: &str) -> ValidationReport {
    let n = spec.dim();
    let mut report = ValidationReport::new(name);
    expect_zero_on_basis(amb, &mut report, &format!("{d}^2 = 0"), &crate::operator::compose(self.d.clone(), self.d.clone()), basis);
    let bracket_of = |ops: &[Op], j: usize, k: usize| -> Op {
      Op::Sum((0..n).filter(|&m| !spec.c(m, j, k).is_zero()).map(|m| (Scalar::real(spec.c(m, j, k).clone()), ops[m].clone())).collect())
    };
    for j in 0..n {
      expect_zero_on_basis(amb, &mut report, &format!("[L_{}, {d}] = 0", j + 1), &commutator(&self.l[j], &self.d), basis);
      compare_on_basis(amb, &mut report, &format!("{{{d}, i_{}}} = L_{}", j + 1, j + 1), &anticommutator(&self.d, &self.i[j]), &self.l[j], basis);
      for k in 0..n {
        let at = |rule: &str| format!("{rule} (X=e_{}, Y=e_{})", j + 1, k + 1);
        if j <= k {
          expect_zero_on_basis(amb, &mut report, &at("{i_X, i_Y} = 0"), &anticommutator(&self.i[j], &self.i[k]), basis);
        }
        compare_on_basis(amb, &mut report, &at("[L_X, i_Y] = i_[X,Y]"), &commutator(&self.l[j], &self.i[k]), &bracket_of(&self.i, j, k), basis);
        compare_on_basis(amb, &mut report, &at("[L_X, L_Y] = L_[X,Y]"), &commutator(&self.l[j], &self.l[k]), &bracket_of(&self.l, j, k), basis);
      }
    }
    report
  }
}

/// Convenience: the identity suite for a Lie algebra at `max_degree`.
pub fn check_weil_identities(spec: &LieAlgebraSpec, max_degree: u32) -> Result<ValidationReport> {
  WeilAlgebra::new(spec, max_degree + 2)?.check_identities(max_degree)
}
