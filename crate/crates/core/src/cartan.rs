//! The twisted Cartan model on `S(g*) ⊗ A`.
//!
//! `d_C = 1⊗d + ε Σ_i φ^i ⊗ ι̃_i` with `ι̃_i = ι_i + √−1 Σ_j f_i^j ι_j` and
//! `ε = −1` (default) or `+1` for the opposite sign convention. Then
//! `d_C² = ε Σ_i φ^i ⊗ L̃_i`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gdga::GdgaInstance;
use crate::graded::GradedElement;
use crate::lie::LieVector;
use crate::operator::{compare_on_basis, compose, Op};
use crate::report::ValidationReport;
use crate::scalar::Scalar;
use crate::weilmodel::TensorAlgebra;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SignConvention {
  #[default]
  Minus,
  Plus,
}

impl SignConvention {
  pub fn epsilon(self) -> Scalar {
    match self {
      SignConvention::Minus => -Scalar::one(),
      SignConvention::Plus => Scalar::one(),
    }
  }

  pub fn tag(self) -> &'static str {
    match self {
      SignConvention::Minus => "minus",
      SignConvention::Plus => "plus",
    }
  }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum InvarianceMode {
  /// Kernel of the single operator `Σ_i φ^i ⊗ L̃_i`.
  PaperLiteral,
  /// Joint kernel of `L_k⊗1 + 1⊗L̃_k` over all `k`.
  #[default]
  PerGenerator,
}

impl InvarianceMode {
  pub fn tag(self) -> &'static str {
    match self {
      InvarianceMode::PaperLiteral => "paper",
      InvarianceMode::PerGenerator => "per-generator",
    }
  }
}

#[derive(Clone, Debug)]
pub struct CartanModel {
  tensor: TensorAlgebra,
  sign: SignConvention,
}

impl CartanModel {
  pub fn new(module: &GdgaInstance, truncation: u32, sign: SignConvention) -> Result<Self> {
    Ok(Self { tensor: TensorAlgebra::new(module, truncation)?, sign })
  }

  pub fn from_tensor(tensor: TensorAlgebra, sign: SignConvention) -> Self { Self { tensor, sign } }

  pub fn tensor(&self) -> &TensorAlgebra { &self.tensor }

  pub fn sign(&self) -> SignConvention { self.sign }

  fn with_truncation(&self, truncation: u32) -> Result<Self> { Ok(Self { tensor: self.tensor.with_truncation(truncation)?, sign: self.sign }) }

  fn phi_times(&self, i: usize, op: Op) -> Op { compose(Op::LeftMul(self.tensor.ambient().phi(i)), op) }

  /// `d_C` as an operator on the whole ambient (callers keep inputs θ-free).
  pub fn d_c_op(&self) -> Op {
    let t = &self.tensor;
    let mut parts = vec![(Scalar::one(), t.module_d())];
    for i in 0..t.n() {
      parts.push((self.sign.epsilon(), self.phi_times(i, t.twisted_iota(i))));
    }
    Op::Sum(parts)
  }

  /// `ε Σ_i φ^i ⊗ L̃_i`, the predicted value of `d_C²`.
  pub fn curvature_op(&self) -> Op {
    let t = &self.tensor;
    Op::Sum((0..t.n()).map(|i| (self.sign.epsilon(), self.phi_times(i, t.twisted_lie(i)))).collect())
  }

  fn require_theta_free(&self, x: &GradedElement) -> Result<()> {
    let amb = self.tensor.ambient();
    if let Some((m, _)) = x.terms().find(|(m, _)| !amb.is_theta_free(m)) {
      return Err(Error::Domain(format!("d_C input contains theta: {}", amb.format_monomial(m))));
    }
    Ok(())
  }

  pub fn d_c(&self, x: &GradedElement) -> Result<GradedElement> {
    self.require_theta_free(x)?;
    Ok(self.d_c_op().apply(self.tensor.ambient(), x))
  }

  /// Compares `d_C²` with `ε Σ φ^i ⊗ L̃_i` on every θ-free basis monomial of
  /// degree ≤ `max_degree`.
  pub fn d_c_squared_defect(&self, max_degree: u32) -> Result<ValidationReport> {
    let c = self.with_truncation(max_degree + 2)?;
    let amb = c.tensor.ambient();
    let d = c.d_c_op();
    let mut report = ValidationReport::new("lemma3");
    let rule = format!("d_C^2 = {}sum phi^i L~_i", if self.sign == SignConvention::Minus { "-" } else { "+" });
    compare_on_basis(amb, &mut report, &rule, &compose(d.clone(), d), &c.curvature_op(), &amb.theta_free_basis_up_to(max_degree));
    Ok(report)
  }

  pub fn invariance_conditions(&self, mode: InvarianceMode) -> Vec<Op> {
    let t = &self.tensor;
    match mode {
      InvarianceMode::PaperLiteral => vec![Op::Sum((0..t.n()).map(|i| (Scalar::one(), self.phi_times(i, t.twisted_lie(i)))).collect())],
      InvarianceMode::PerGenerator => (0..t.n()).map(|k| t.l_w_op(k).plus(t.twisted_lie(k))).collect(),
    }
  }

  /// Exact per-degree basis (index = degree) of the invariant θ-free subspace.
  pub fn invariant_subspace(&self, max_degree: u32, mode: InvarianceMode) -> Vec<Vec<GradedElement>> {
    // The literal operator raises degree by two; give it room.
    let c = if mode == InvarianceMode::PaperLiteral && self.tensor.ambient().truncation() < max_degree + 2 {
      self.with_truncation(max_degree + 2).expect("larger truncation")
    } else {
      self.clone()
    };
    let amb = c.tensor.ambient();
    let ops = c.invariance_conditions(mode);
    (0..=max_degree).map(|d| crate::linalg::joint_kernel(amb, &ops, &amb.theta_free_basis(d))).collect()
  }

  /// `d_C² = 0` on each invariant basis vector of degree ≤ `max_degree − 2`.
  pub fn check_square_zero_on_invariants(&self, max_degree: u32, mode: InvarianceMode) -> Result<ValidationReport> {
    let c = self.with_truncation(max_degree)?;
    let amb = c.tensor.ambient();
    let d = c.d_c_op();
    let mut report = ValidationReport::new("d_C^2 on invariants");
    for layer in c.invariant_subspace(max_degree.saturating_sub(2), mode) {
      for v in layer {
        report.checked += 1;
        let r = d.apply(amb, &d.apply(amb, &v));
        if !r.is_zero() {
          report.push("d_C^2 = 0 on invariants", amb.display(&v).to_string(), amb.display(&r).to_string());
        }
      }
    }
    Ok(report)
  }

  /// Substitutes `φ^i ↦ X^i`, landing in the module (a θ,φ-free element).
  pub fn evaluate_at(&self, x: &GradedElement, at: &LieVector) -> Result<GradedElement> {
    let t = &self.tensor;
    if at.dim() != t.n() {
      return Err(Error::DimensionMismatch { expected: t.n(), got: at.dim() });
    }
    self.require_theta_free(x)?;
    let amb = t.ambient();
    let mut out = GradedElement::zero();
    for (m, c) in x.terms() {
      let mut coef = c.clone();
      for (i, &e) in amb.phi_exponents(m).iter().enumerate() {
        for _ in 0..e {
          coef = &coef * &at.0[i];
        }
      }
      if coef.is_zero() {
        continue;
      }
      let mut rest = m.clone();
      rest.even[..t.n()].iter_mut().for_each(|e| *e = 0);
      out.add_term(rest, coef);
    }
    Ok(out)
  }

  /// `d + ε(ι_X + √−1 ι_Y)` on the module with `Y = f(X)`.
  pub fn evaluated_differential(&self, at: &LieVector) -> Result<Op> {
    let t = &self.tensor;
    let y = t.lie().twist_apply(at)?;
    let mut parts = vec![(Scalar::one(), t.module_d())];
    for k in 0..t.n() {
      let coef = &self.sign.epsilon() * &(&at.0[k] + &(&Scalar::i() * &y.0[k]));
      parts.push((coef, t.module_iota(k)));
    }
    Ok(Op::Sum(parts))
  }

  /// `evaluate_at(d_C x, X) = (d + ε(ι_X + √−1 ι_Y)) evaluate_at(x, X)` on every
  /// θ-free basis monomial of degree ≤ `max_degree`.
  pub fn check_evaluation(&self, max_degree: u32, at: &LieVector) -> Result<ValidationReport> {
    let c = self.with_truncation(max_degree + 1)?;
    let amb = c.tensor.ambient();
    let rhs_op = c.evaluated_differential(at)?;
    let mut report = ValidationReport::new("evaluation");
    for m in amb.theta_free_basis_up_to(max_degree) {
      report.checked += 1;
      let x = GradedElement::from_monomial(m.clone());
      let lhs = c.evaluate_at(&c.d_c(&x)?, at)?;
      let rhs = rhs_op.apply(amb, &c.evaluate_at(&x, at)?);
      if lhs != rhs {
        report.push("ev(d_C x) = (d - i_X - I i_Y) ev(x)", crate::operator::display_monomial(amb, &m), amb.display(&lhs.sub(&rhs)).to_string());
      }
    }
    Ok(report)
  }

  /// With the twist set to zero, `d_C` against the textbook `1⊗d − Σ φ^i ⊗ ι_i`
  /// built directly from the untwisted module contractions.
  pub fn check_classical_limit(module: &GdgaInstance, max_degree: u32) -> Result<ValidationReport> {
    let untwisted = untwist(module)?;
    let c = CartanModel::new(&untwisted, max_degree + 1, SignConvention::Minus)?;
    let t = c.tensor();
    let amb = t.ambient();
    let mut classical = vec![(Scalar::one(), t.module_d())];
    for i in 0..t.n() {
      classical.push((-Scalar::one(), compose(Op::LeftMul(amb.phi(i)), t.module_iota(i))));
    }
    let mut report = ValidationReport::new("classical cartan");
    compare_on_basis(amb, &mut report, "d_C(f=0) = d - sum phi^i iota_i", &c.d_c_op(), &Op::Sum(classical), &amb.theta_free_basis_up_to(max_degree));
    Ok(report)
  }
}

/// The same module with the twist matrix set to zero.
pub fn untwist(module: &GdgaInstance) -> Result<GdgaInstance> {
  let n = module.lie().dim();
  let lie = module.lie().clone().with_twist(vec![vec![crate::scalar::Rational::zero(); n]; n])?;
  Ok(module.with_lie(lie))
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

  fn mono(c: &CartanModel, odd: u64, even: [u16; 2]) -> GradedElement {
    let m = crate::graded::ModMono { odd, even: even.into_iter().collect() };
    c.tensor().ambient().lift_element(&[(m, Scalar::one())])
  }

  #[test]
  fn d_c_examples() {
    let c = CartanModel::new(&GdgaInstance::point(&LieAlgebraSpec::su2()), 4, SignConvention::Minus).unwrap();
    let amb = c.tensor().ambient();
    assert!(c.d_c(&amb.phi(0)).unwrap().is_zero());
    assert!(matches!(c.d_c(&amb.theta(0)), Err(Error::Domain(_))));
    for g in [0, 1, 3] {
      let c = CartanModel::new(&rotation(g), 4, SignConvention::Minus).unwrap();
      let amb = c.tensor().ambient();
      // d_C(1⊗dx_1) = −(1 + √−1 g) φ^1 ⊗ x_2
      let coef = -Scalar::new(rational(1, 1), rational(g, 1));
      let expected = amb.mul(&amb.phi(0), &mono(&c, 0, [0, 1])).scale(&coef);
      assert_eq!(c.d_c(&mono(&c, 1, [0, 0])).unwrap(), expected);
    }
  }

  #[test]
  fn curvature_identity_on_small_setups() {
    let su2 = LieAlgebraSpec::su2();
    let setups = [
      GdgaInstance::point(&LieAlgebraSpec::abelian(1)),
      rotation(0),
      rotation(2),
      GdgaInstance::weil_as_module_for(&su2, crate::weil::WeilMutation::None),
    ];
    for m in &setups {
      for sign in [SignConvention::Minus, SignConvention::Plus] {
        let r = CartanModel::new(m, 4, sign).unwrap().d_c_squared_defect(4).unwrap();
        assert!(r.passed(), "{:?}", r.violations.first());
      }
    }
  }

  #[test]
  fn invariant_subspace_examples() {
    let c = CartanModel::new(&GdgaInstance::point(&LieAlgebraSpec::abelian(2)), 4, SignConvention::Minus).unwrap();
    for mode in [InvarianceMode::PaperLiteral, InvarianceMode::PerGenerator] {
      let dims: Vec<usize> = c.invariant_subspace(4, mode).iter().map(Vec::len).collect();
      assert_eq!(dims, vec![1, 0, 2, 0, 3]);
    }
    let c = CartanModel::new(&GdgaInstance::point(&LieAlgebraSpec::su2()), 4, SignConvention::Minus).unwrap();
    let inv = c.invariant_subspace(4, InvarianceMode::PerGenerator);
    assert_eq!(inv.iter().map(Vec::len).collect::<Vec<_>>(), vec![1, 0, 0, 0, 1]);
    let casimir = c.tensor().ambient().parse("p1^2 + p2^2 + p3^2").unwrap();
    assert!(crate::linalg::Span::new(&inv[4]).contains(&casimir));
  }

  /// Rotation of ℝ² under `ℝ`: in degree 2 the invariants are `φ^1⊗(x_1²+x_2²)^k`
  /// (weight-capped), `1⊗dx_1 dx_2` and `1⊗(x_1²+x_2²)^k dx_1 dx_2`.
  #[test]
  fn rotation_invariants_degree_two() {
    let c = CartanModel::new(&rotation(0), 4, SignConvention::Minus).unwrap();
    let inv = c.invariant_subspace(2, InvarianceMode::PerGenerator);
    let amb = c.tensor().ambient();
    let span = crate::linalg::Span::new(&inv[2]);
    assert!(span.contains(&amb.phi(0)));
    let area = amb.mul(&mono(&c, 1, [0, 0]), &mono(&c, 2, [0, 0]));
    assert!(span.contains(&area));
    let r2 = mono(&c, 0, [2, 0]).add(&mono(&c, 0, [0, 2]));
    assert!(span.contains(&amb.mul(&amb.phi(0), &r2)));
    // weight cap 6: φ ⊗ r^{0,2,4,6}, dx dx ⊗ r^{0,2,4}
    assert_eq!(inv[2].len(), 7);
    assert!(c.check_square_zero_on_invariants(4, InvarianceMode::PerGenerator).unwrap().passed());
  }

  #[test]
  fn evaluation_intertwines() {
    let c = CartanModel::new(&rotation(0), 4, SignConvention::Minus).unwrap();
    let amb = c.tensor().ambient();
    let e1 = LieVector::basis(1, 0);
    assert_eq!(c.evaluate_at(&amb.phi(0), &e1).unwrap(), amb.unit());
    // ev(d_C(1⊗dx_1), e_1) = −x_2 = (d − ι_1) dx_1
    let dx1 = mono(&c, 1, [0, 0]);
    let lhs = c.evaluate_at(&c.d_c(&dx1).unwrap(), &e1).unwrap();
    assert_eq!(lhs, mono(&c, 0, [0, 1]).scale(&-Scalar::one()));
    assert_eq!(c.evaluated_differential(&e1).unwrap().apply(amb, &dx1), lhs);
    let x = LieVector(vec![Scalar::from_ratio(3, 2)]);
    let twisted = CartanModel::new(&rotation(2), 4, SignConvention::Minus).unwrap();
    assert!(twisted.check_evaluation(3, &x).unwrap().passed());
    assert!(twisted.evaluate_at(&amb.phi(0), &LieVector::zero(2)).is_err());
  }

  #[test]
  fn classical_limit() {
    assert!(CartanModel::check_classical_limit(&rotation(1), 4).unwrap().passed());
    let su2 = LieAlgebraSpec::su2();
    let adj = GdgaInstance::polynomial_forms(&LinearActionSpec::adjoint(&su2, 4), &su2).unwrap();
    assert!(CartanModel::check_classical_limit(&adj, 3).unwrap().passed());
  }
}
