//! The BRST operator `δ` on `W(g) ⊗ A` and the map `ψ = Π_k (1 − θ^k ⊗ ι̃_k)`.
//!
//! `δ` is built twice: term by term from the six-term formula, and as the
//! conjugate `e^{T} D e^{−T}` with `T = Σ_k θ^k ⊗ ι̃_k`. Since `ψ = e^{−T}`,
//! the second form is `ψ⁻¹ D ψ` and the square `ψ ∘ δ = D ∘ ψ` commutes.

use std::fmt;

use num_traits::{One, Zero};

use crate::cartan::{untwist, CartanModel, InvarianceMode, SignConvention};
use crate::error::Result;
use crate::gdga::GdgaInstance;
use crate::graded::GradedElement;
use crate::linalg::Span;
use crate::operator::{anticommutator, commutator, compare_on_basis, compose, expect_zero_on_basis, Op};
use crate::report::ValidationReport;
use crate::scalar::Scalar;
use crate::weilmodel::{BasicMode, TensorAlgebra};

/// Deliberate formula corruptions, for negative controls.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum DeltaMutation {
  #[default]
  None,
  /// Drops `½ Σ c^i_{jk} θ^j θ^k ⊗ ι̃_i`.
  DropHalfCTerm,
}

/// Which formula [`Brst::delta`] evaluates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum DeltaForm {
  /// The six-term formula with `−Σ_{j<k} θ^jθ^k (L̃_j ι̃_k − ι̃_j L̃_k)`.
  #[default]
  Verbatim,
  /// The expansion of `e^{T} D e^{−T}` (see [`Brst::delta_closed_form`]).
  ClosedForm,
}

impl DeltaForm {
  pub fn tag(self) -> &'static str {
    match self {
      DeltaForm::Verbatim => "verbatim",
      DeltaForm::ClosedForm => "closed",
    }
  }
}

#[derive(Clone, Debug)]
pub struct Brst {
  tensor: TensorAlgebra,
  mutation: DeltaMutation,
  form: DeltaForm,
}

impl Brst {
  pub fn new(module: &GdgaInstance, truncation: u32) -> Result<Self> { Ok(Self { tensor: TensorAlgebra::new(module, truncation)?, mutation: DeltaMutation::None, form: DeltaForm::Verbatim }) }

  pub fn with_mutation(mut self, mutation: DeltaMutation) -> Self {
    self.mutation = mutation;
    self
  }

  pub fn with_form(mut self, form: DeltaForm) -> Self {
    self.form = form;
    self
  }

  pub fn form(&self) -> DeltaForm { self.form }

  pub fn tensor(&self) -> &TensorAlgebra { &self.tensor }

  fn with_truncation(&self, truncation: u32) -> Result<Self> {
    Ok(Self { tensor: self.tensor.with_truncation(truncation)?, mutation: self.mutation, form: self.form })
  }

  /// `½ Σ c^i_{jk} θ^jθ^k ⊗ ι̃_i`, or nothing under [`DeltaMutation::DropHalfCTerm`].
  fn half_c_terms(&self) -> Vec<(Scalar, Op)> {
    if self.mutation == DeltaMutation::DropHalfCTerm {
      return Vec::new();
    }
    let t = &self.tensor;
    let n = t.n();
    let half = Scalar::from_ratio(1, 2);
    let mut parts = Vec::new();
    for i in 0..n {
      for j in 0..n {
        for k in 0..n {
          let c = t.lie().c(i, j, k);
          if !c.is_zero() {
            parts.push((&half * &Scalar::real(c.clone()), compose(self.left(self.theta_theta(j, k)), t.twisted_iota(i))));
          }
        }
      }
    }
    parts
  }

  fn left(&self, x: GradedElement) -> Op { Op::LeftMul(x) }

  fn theta_theta(&self, j: usize, k: usize) -> GradedElement {
    let a = self.tensor.ambient();
    a.mul(&a.theta(j), &a.theta(k))
  }

  /// `T = Σ_k θ^k ⊗ ι̃_k`.
  pub fn t_op(&self) -> Op {
    let t = &self.tensor;
    Op::Sum((0..t.n()).map(|k| (Scalar::one(), compose(self.left(t.ambient().theta(k)), t.twisted_iota(k)))).collect())
  }

  /// `δ` from the six-term formula.
  pub fn delta_verbatim(&self) -> Op {
    let t = &self.tensor;
    let amb = t.ambient();
    let n = t.n();
    let mut parts = vec![(Scalar::one(), t.d_w_op()), (Scalar::one(), t.module_d())];
    for i in 0..n {
      parts.push((Scalar::one(), compose(self.left(amb.theta(i)), t.twisted_lie(i))));
      parts.push((-Scalar::one(), compose(self.left(amb.phi(i)), t.twisted_iota(i))));
    }
    parts.extend(self.half_c_terms());
    for j in 0..n {
      for k in j + 1..n {
        let inner = compose(t.twisted_lie(j), t.twisted_iota(k)).minus(compose(t.twisted_iota(j), t.twisted_lie(k)));
        parts.push((-Scalar::one(), compose(self.left(self.theta_theta(j, k)), inner)));
      }
    }
    Op::Sum(parts)
  }

  /// The expansion of `e^{T} D e^{−T}`, which stops at second order:
  /// `D + Σθ^i L̃_i − Σφ^a ι̃_a + ½Σ c^i_{jk} θ^jθ^k ι̃_i + ½Σ_{a,k} θ^aθ^k [ι̃_k, L̃_a]`.
  pub fn delta_closed_form(&self) -> Op {
    let t = &self.tensor;
    let amb = t.ambient();
    let n = t.n();
    let half = Scalar::from_ratio(1, 2);
    let mut parts = vec![(Scalar::one(), t.d_total())];
    for i in 0..n {
      parts.push((Scalar::one(), compose(self.left(amb.theta(i)), t.twisted_lie(i))));
      parts.push((-Scalar::one(), compose(self.left(amb.phi(i)), t.twisted_iota(i))));
    }
    parts.extend(self.half_c_terms());
    for a in 0..n {
      for k in 0..n {
        if a != k || !t.lie().twist_is_zero() {
          parts.push((half.clone(), compose(self.left(self.theta_theta(a, k)), commutator(&t.twisted_iota(k), &t.twisted_lie(a)))));
        }
      }
    }
    Op::Sum(parts)
  }

  /// `δ = e^{T} D e^{−T} = ψ⁻¹ ∘ D ∘ ψ`.
  pub fn delta_conjugated(&self) -> Op { Op::Compose(vec![self.psi_inv(), self.tensor.d_total(), self.psi()]) }

  /// `δ` in the selected form (six-term by default).
  pub fn delta(&self) -> Op {
    match self.form {
      DeltaForm::Verbatim => self.delta_verbatim(),
      DeltaForm::ClosedForm => self.delta_closed_form(),
    }
  }

  fn factor(&self, k: usize, sign: Scalar) -> Op {
    let t = &self.tensor;
    Op::Sum(vec![(Scalar::one(), Op::Identity), (sign, compose(self.left(t.ambient().theta(k)), t.twisted_iota(k)))])
  }

  /// `Π_k (1 − θ^k ⊗ ι̃_k)` with factors in the given order (leftmost first).
  pub fn psi_ordered(&self, order: &[usize]) -> Op { Op::Compose(order.iter().map(|&k| self.factor(k, -Scalar::one())).collect()) }

  pub fn psi(&self) -> Op { self.psi_ordered(&(0..self.tensor.n()).collect::<Vec<_>>()) }

  /// `Π_k (1 + θ^k ⊗ ι̃_k)`.
  pub fn psi_inv(&self) -> Op { Op::Compose((0..self.tensor.n()).map(|k| self.factor(k, Scalar::one())).collect()) }

  /// `(−T)^m / m!`.
  pub fn exp_term(&self, m: usize) -> Op {
    let mut fact = Scalar::one();
    for r in 1..=m {
      fact = &fact * &Scalar::from_int(r as i64);
    }
    let coef = &(if m % 2 == 0 { Scalar::one() } else { -Scalar::one() }) * &fact.inv().expect("nonzero");
    Op::Compose(vec![self.t_op(); m]).scaled(coef)
  }

  /// `Σ_{m=0}^{terms} (−T)^m / m!`.
  pub fn psi_exp(&self, terms: usize) -> Op { Op::Sum((0..=terms).map(|m| (Scalar::one(), self.exp_term(m))).collect()) }

  pub fn delta_squared_check(&self, max_degree: u32) -> Result<ValidationReport> {
    let b = self.with_truncation(max_degree + 2)?;
    let amb = b.tensor.ambient();
    let d = b.delta();
    let mut report = ValidationReport::new("lemma4");
    expect_zero_on_basis(amb, &mut report, "delta^2 = 0", &compose(d.clone(), d), &amb.basis_up_to(max_degree));
    Ok(report)
  }

  /// `ψ⁻¹ψ = ψψ⁻¹ = 1`.
  pub fn psi_inverse_check(&self, max_degree: u32) -> Result<ValidationReport> {
    let b = self.with_truncation(max_degree)?;
    let amb = b.tensor.ambient();
    let basis = amb.basis_up_to(max_degree);
    let mut report = ValidationReport::new("psi-inverse");
    compare_on_basis(amb, &mut report, "psi_inv psi = 1", &compose(b.psi_inv(), b.psi()), &Op::Identity, &basis);
    compare_on_basis(amb, &mut report, "psi psi_inv = 1", &compose(b.psi(), b.psi_inv()), &Op::Identity, &basis);
    Ok(report)
  }

  /// Adjacent factor transpositions, the terminating exponential series and
  /// the vanishing of its `(n+1)`-th term.
  pub fn psi_forms_agree(&self, max_degree: u32) -> Result<ValidationReport> {
    let b = self.with_truncation(max_degree)?;
    let amb = b.tensor.ambient();
    let n = b.tensor.n();
    let basis = amb.basis_up_to(max_degree);
    let mut report = ValidationReport::new("lemma5");
    let product = b.psi();
    for k in 0..n.saturating_sub(1) {
      let mut order: Vec<usize> = (0..n).collect();
      order.swap(k, k + 1);
      compare_on_basis(amb, &mut report, &format!("swap factors {} and {}", k + 1, k + 2), &product, &b.psi_ordered(&order), &basis);
    }
    for k in 0..n {
      for l in k + 1..n {
        let (fk, fl) = (b.factor(k, -Scalar::one()), b.factor(l, -Scalar::one()));
        compare_on_basis(amb, &mut report, &format!("factors {} and {} commute", k + 1, l + 1), &compose(fk.clone(), fl.clone()), &compose(fl, fk), &basis);
      }
    }
    compare_on_basis(amb, &mut report, "psi = exp(-T)", &product, &b.psi_exp(n), &basis);
    expect_zero_on_basis(amb, &mut report, "T^(n+1) = 0", &b.exp_term(n + 1), &basis);
    Ok(report)
  }

  pub fn theorem1_check(&self, max_degree: u32) -> Result<Theorem1Report> {
    let b = self.with_truncation(max_degree + 1)?;
    let amb = b.tensor.ambient();
    let basis = amb.basis_up_to(max_degree);
    let (delta, psi, d) = (b.delta(), b.psi(), b.tensor.d_total());
    let mut square = ValidationReport::new("thm1");
    compare_on_basis(amb, &mut square, "psi delta = D psi", &compose(psi.clone(), delta.clone()), &compose(d.clone(), psi.clone()), &basis);
    let mut conjugation = ValidationReport::new("delta-forms");
    compare_on_basis(amb, &mut conjugation, &format!("delta ({}) = psi^-1 D psi", b.form.tag()), &delta, &b.delta_conjugated(), &basis);
    let mut reversed = ValidationReport::new("thm1-reversed");
    compare_on_basis(amb, &mut reversed, "delta psi = psi D", &compose(delta, psi.clone()), &compose(psi, d), &basis);
    Ok(Theorem1Report { square, conjugation, reversed })
  }

  /// ψ-images of invariant Cartan vectors are twisted-basic, plus the two
  /// operator identities behind it on every basis monomial of degree ≤ `max_degree`.
  pub fn theorem2_check(&self, max_degree: u32, mode: InvarianceMode) -> Result<ValidationReport> {
    let b = self.with_truncation(max_degree + 1)?;
    let t = &b.tensor;
    let amb = t.ambient();
    let n = t.n();
    let mut report = ValidationReport::new("thm2");
    let psi = b.psi();
    let cartan = CartanModel::from_tensor(t.clone(), SignConvention::Minus);
    let conditions = t.basic_conditions(BasicMode::TwistedPairs);
    for layer in cartan.invariant_subspace(max_degree, mode) {
      for alpha in layer {
        let image = psi.apply(amb, &alpha);
        for (idx, op) in conditions.iter().enumerate() {
          report.checked += 1;
          let r = op.apply(amb, &image);
          if !r.is_zero() {
            let which = if idx % 2 == 0 { "i" } else { "L" };
            report.push(format!("{which}~_{}(psi alpha) = 0", idx / 2 + 1), amb.display(&alpha).to_string(), amb.display(&r).to_string());
          }
        }
      }
    }
    let delta = b.delta();
    let theta_free = amb.theta_free_basis_up_to(max_degree);
    let basis = amb.basis_up_to(max_degree);
    for k in 0..n {
      let contraction = t.i_w_op(k).plus(t.twisted_iota(k));
      expect_zero_on_basis(amb, &mut report, &format!("(i_{k1} + iota~_{k1}) psi = 0 on theta-free", k1 = k + 1), &compose(contraction, psi.clone()), &theta_free);
      let lie = t.l_w_op(k).plus(t.twisted_lie(k));
      compare_on_basis(amb, &mut report, &format!("{{delta, i_{k1}}} = L_{k1} + L~_{k1}", k1 = k + 1), &anticommutator(&delta, &t.i_w_op(k)), &lie, &basis);
    }
    Ok(report)
  }

  /// Per-degree dimensions of the invariant Cartan subspace and of the
  /// twisted-basic subspace, and the rank of `ψ` between them.
  pub fn theorem3_check(&self, max_degree: u32, mode: InvarianceMode) -> Result<RankReport> {
    let b = self.with_truncation(max_degree)?;
    let t = &b.tensor;
    let amb = t.ambient();
    let cartan = CartanModel::from_tensor(t.clone(), SignConvention::Minus);
    let invariants = cartan.invariant_subspace(max_degree, mode);
    let basic = t.basic_subspace(max_degree, BasicMode::TwistedPairs);
    let inv_conditions = cartan.invariance_conditions(mode);
    let (psi, psi_inv) = (b.psi(), b.psi_inv());
    let mut rows = Vec::new();
    let mut report = ValidationReport::new("thm3");
    for d in 0..=max_degree as usize {
      let images: Vec<GradedElement> = invariants[d].iter().map(|a| psi.apply(amb, a)).collect();
      let target = Span::new(&basic.per_degree[d]);
      let mut all = basic.per_degree[d].clone();
      all.extend(images.iter().cloned());
      let joint = Span::new(&all);
      let rank = Span::new(&images).dim();
      let lands = joint.dim() == target.dim();
      report.checked += 1;
      if !lands {
        report.push("psi(invariant) is basic", format!("degree {d}"), format!("{} images escape", joint.dim() - target.dim()));
      }
      if invariants[d].len() != basic.per_degree[d].len() || rank != invariants[d].len() {
        report.push(
          "dim invariant = dim basic = rank psi",
          format!("degree {d}"),
          format!("{}/{}/{}", invariants[d].len(), basic.per_degree[d].len(), rank),
        );
      }
      for v in &basic.per_degree[d] {
        report.checked += 1;
        let back = psi_inv.apply(amb, v);
        if back.terms().any(|(m, _)| !amb.is_theta_free(m)) {
          report.push("psi^-1(basic) is theta-free", amb.display(v).to_string(), amb.display(&back).to_string());
        } else if inv_conditions.iter().any(|op| !op.apply(amb, &back).is_zero()) {
          report.push("psi^-1(basic) is invariant", amb.display(v).to_string(), amb.display(&back).to_string());
        }
      }
      rows.push(RankRow { degree: d as u32, cartan: invariants[d].len(), basic: basic.per_degree[d].len(), rank });
    }
    Ok(RankReport { rows, report })
  }

  /// With the twist set to zero: `d_C`, `δ` and `ψ` against the textbook
  /// Cartan differential, the operator `D + Σ θ^a L_a − Σ φ^a ι_a` and
  /// `exp(−Σ θ^a ι_a)`, each assembled from untwisted module operators.
  pub fn check_classical_limit(module: &GdgaInstance, max_degree: u32) -> Result<ValidationReport> {
    let untwisted = untwist(module)?;
    let mut report = CartanModel::check_classical_limit(&untwisted, max_degree)?;
    report.name = "classical".into();
    let b = Brst::new(&untwisted, max_degree + 1)?;
    let t = b.tensor();
    let amb = t.ambient();
    let n = t.n();
    let mut classical_delta = vec![(Scalar::one(), t.d_total())];
    for a in 0..n {
      classical_delta.push((Scalar::one(), compose(Op::LeftMul(amb.theta(a)), t.module_lie(a))));
      classical_delta.push((-Scalar::one(), compose(Op::LeftMul(amb.phi(a)), t.module_iota(a))));
    }
    let basis = amb.basis_up_to(max_degree);
    compare_on_basis(amb, &mut report, "delta(f=0) = D + theta L - phi iota", &b.delta(), &Op::Sum(classical_delta), &basis);
    let plain_t = Op::Sum((0..n).map(|a| (Scalar::one(), compose(Op::LeftMul(amb.theta(a)), t.module_iota(a)))).collect());
    let mut series = Vec::new();
    let mut power = Op::Identity;
    let mut fact = Scalar::one();
    for m in 0..=n {
      if m > 0 {
        power = compose(plain_t.clone(), power);
        fact = &fact * &Scalar::from_int(m as i64);
      }
      let sign = if m % 2 == 0 { Scalar::one() } else { -Scalar::one() };
      series.push((&sign * &fact.inv()?, power.clone()));
    }
    compare_on_basis(amb, &mut report, "psi(f=0) = exp(-theta iota)", &b.psi(), &Op::Sum(series), &basis);
    Ok(report)
  }
}

#[derive(Clone, Debug)]
pub struct Theorem1Report {
  /// `ψ ∘ δ = D ∘ ψ`.
  pub square: ValidationReport,
  /// Six-term `δ` against `ψ⁻¹ D ψ`.
  pub conjugation: ValidationReport,
  /// The reversed square `δ ∘ ψ = ψ ∘ D` (diagnostic).
  pub reversed: ValidationReport,
}

impl Theorem1Report {
  pub fn passed(&self) -> bool { self.square.passed() && self.conjugation.passed() }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankRow {
  pub degree: u32,
  pub cartan: usize,
  pub basic: usize,
  pub rank: usize,
}

#[derive(Clone, Debug)]
pub struct RankReport {
  pub rows: Vec<RankRow>,
  pub report: ValidationReport,
}

impl RankReport {
  pub fn passed(&self) -> bool { self.report.passed() }

  pub fn cartan_dims(&self) -> Vec<usize> { self.rows.iter().map(|r| r.cartan).collect() }

  pub fn basic_dims(&self) -> Vec<usize> { self.rows.iter().map(|r| r.basic).collect() }
}

/// `0:1/1 1:0/0 2:1/1 …` (degree: Cartan dim / basic dim).
impl fmt::Display for RankReport {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let parts: Vec<String> = self.rows.iter().map(|r| format!("{}:{}/{}", r.degree, r.cartan, r.basic)).collect();
    f.write_str(&parts.join(" "))
  }
}

#[cfg(test)]
mod tests {
  use super::*;
  use crate::gdga::LinearActionSpec;
  use crate::lie::LieAlgebraSpec;
  use crate::scalar::rational;

  fn rotation(g: i64) -> GdgaInstance {
    let lie = LieAlgebraSpec::abelian(1).with_scaled_identity_twist(rational(g, 1));
    GdgaInstance::polynomial_forms(&LinearActionSpec::plane_rotation(6), &lie).unwrap()
  }

  fn lift(b: &Brst, odd: u64, even: [u16; 2]) -> GradedElement {
    let m = crate::graded::ModMono { odd, even: even.into_iter().collect() };
    b.tensor().ambient().lift_element(&[(m, Scalar::one())])
  }

  #[test]
  fn delta_examples() {
    let b = Brst::new(&GdgaInstance::point(&LieAlgebraSpec::abelian(1)), 4).unwrap();
    let amb = b.tensor().ambient();
    assert_eq!(b.delta().apply(amb, &amb.theta(0)), amb.phi(0));
    assert!(b.delta().apply(amb, &amb.unit()).is_zero());
    // abelian(1) on ℝ², f = 0, term by term on 1⊗dx_1:
    // 1⊗d dx_1 = 0, θ^1⊗L_1 dx_1 = θ^1⊗dx_2, −φ^1⊗ι_1 dx_1 = −φ^1⊗x_2
    let b = Brst::new(&rotation(0), 4).unwrap();
    let amb = b.tensor().ambient();
    let expected = amb.mul(&amb.theta(0), &lift(&b, 2, [0, 0])).sub(&amb.mul(&amb.phi(0), &lift(&b, 0, [0, 1])));
    assert_eq!(b.delta().apply(amb, &lift(&b, 1, [0, 0])), expected);
  }

  #[test]
  fn psi_examples() {
    let b = Brst::new(&rotation(2), 4).unwrap();
    let amb = b.tensor().ambient();
    let x = amb.mul(&amb.phi(0), &lift(&b, 0, [1, 1]));
    assert_eq!(b.psi().apply(amb, &x), x);
    // ψ(1⊗dx_1) = 1⊗dx_1 − θ^1⊗ι̃_1 dx_1 = 1⊗dx_1 − (1 + 2√−1) θ^1⊗x_2
    let dx1 = lift(&b, 1, [0, 0]);
    let expected = dx1.sub(&amb.mul(&amb.theta(0), &lift(&b, 0, [0, 1])).scale(&Scalar::new(rational(1, 1), rational(2, 1))));
    assert_eq!(b.psi().apply(amb, &dx1), expected);
    assert!(b.psi_inverse_check(4).unwrap().passed());
  }

  #[test]
  fn delta_squares_to_zero_and_square_commutes_for_rotation() {
    for g in [0, 1] {
      let b = Brst::new(&rotation(g), 5).unwrap();
      assert!(b.delta_squared_check(4).unwrap().passed());
      let r = b.theorem1_check(4).unwrap();
      assert!(r.square.passed(), "{:?}", r.square.violations.first());
      assert!(r.conjugation.passed());
      assert!(!r.reversed.passed());
    }
  }

  /// On the point module every `ι̃` vanishes, so the mutation needs a
  /// nontrivial su(2)-module to be visible.
  #[test]
  fn closed_form_and_mutation_on_adjoint_su2() {
    let su2 = LieAlgebraSpec::su2();
    let m = GdgaInstance::polynomial_forms(&LinearActionSpec::adjoint(&su2, 3), &su2).unwrap();
    let b = Brst::new(&m, 3).unwrap().with_form(DeltaForm::ClosedForm);
    assert!(b.delta_squared_check(2).unwrap().passed());
    let r = b.theorem1_check(2).unwrap();
    assert!(r.square.passed() && r.conjugation.passed());
    let broken = b.with_mutation(DeltaMutation::DropHalfCTerm);
    assert!(!broken.delta_squared_check(2).unwrap().passed());
    assert!(!broken.theorem1_check(2).unwrap().square.passed());
  }

  #[test]
  fn six_term_formula_differs_from_conjugate_for_two_generators() {
    let lie = LieAlgebraSpec::abelian(2);
    let m = GdgaInstance::polynomial_forms(&LinearActionSpec::rotation_pair(3), &lie).unwrap();
    let r = Brst::new(&m, 3).unwrap().theorem1_check(2).unwrap();
    assert!(!r.conjugation.passed());
  }

  #[test]
  fn psi_forms_for_rotation_pair() {
    let lie = LieAlgebraSpec::abelian(2).with_scaled_identity_twist(rational(1, 1));
    let m = GdgaInstance::polynomial_forms(&LinearActionSpec::rotation_pair(6), &lie).unwrap();
    let r = Brst::new(&m, 5).unwrap().psi_forms_agree(5).unwrap();
    assert!(r.passed(), "{:?}", r.violations.first());
  }

  #[test]
  fn invariant_and_basic_dimensions() {
    let b = Brst::new(&GdgaInstance::point(&LieAlgebraSpec::abelian(1)), 6).unwrap();
    let r = b.theorem3_check(6, InvarianceMode::PerGenerator).unwrap();
    assert!(r.passed());
    assert_eq!(r.cartan_dims(), vec![1, 0, 1, 0, 1, 0, 1]);
    assert_eq!(r.to_string(), "0:1/1 1:0/0 2:1/1 3:0/0 4:1/1 5:0/0 6:1/1");
    let b = Brst::new(&GdgaInstance::point(&LieAlgebraSpec::su2()), 4).unwrap();
    let r = b.theorem3_check(4, InvarianceMode::PerGenerator).unwrap();
    assert!(r.passed());
    assert_eq!(r.basic_dims(), vec![1, 0, 0, 0, 1]);
  }

  #[test]
  fn psi_images_are_basic_for_twisted_rotation() {
    let b = Brst::new(&rotation(1), 4).unwrap();
    let r = b.theorem2_check(4, InvarianceMode::PerGenerator).unwrap();
    assert!(r.passed(), "{:?}", r.violations.first());
  }

  #[test]
  fn classical_limit_rotation() {
    assert!(Brst::check_classical_limit(&rotation(3), 4).unwrap().passed());
  }
}
