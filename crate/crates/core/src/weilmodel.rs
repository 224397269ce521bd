//! The tensor algebra `W(g) ⊗ A` with `D = d_W⊗1 + 1⊗d`, `ĩ_k`, `L̃_k`,
//! their complexified versions and the basic subspace.
//!
//! Operators on the module factor are derivations on the module generators.
//! Because every `θ` precedes the module's odd generators in the ambient
//! ordering, `1⊗P` automatically picks up the Koszul sign `(−1)^{|P|·|w|}`
//! from the Weil factor `w`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::gdga::GdgaInstance;
use crate::graded::{Ambient, GradedElement};
use crate::lie::{LieAlgebraSpec, LieVector};
use crate::linalg::{joint_kernel, joint_kernel_on, Span};
use crate::operator::{anticommutator, compare_on_basis, Derivation, Op, Parity};
use crate::report::ValidationReport;
use crate::scalar::Scalar;
use crate::weil::{module_factor_derivation, weil_factor_derivation, weil_images, CalculusOps, WeilMutation};

/// Which pairs `(X, Y)` the basic condition quantifies over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum BasicMode {
  /// `X`, `Y` independent: the joint kernel of `ĩ_k`, `1⊗ι_k`, `L̃_k`, `1⊗L_k`.
  #[default]
  AllPairs,
  /// `Y = f(X)`: the joint kernel of `ĩ_k + 1⊗√−1 Σ_j f_k^j ι_j` and the matching `L̃`.
  TwistedPairs,
}

impl BasicMode {
  pub fn tag(self) -> &'static str {
    match self {
      BasicMode::AllPairs => "all-pairs",
      BasicMode::TwistedPairs => "twisted-pairs",
    }
  }
}

/// Per-degree basis vectors, index = degree.
#[derive(Clone, Debug, Default)]
pub struct BasicSubspaceBasis {
  pub per_degree: Vec<Vec<GradedElement>>,
}

impl BasicSubspaceBasis {
  pub fn dims(&self) -> Vec<usize> { self.per_degree.iter().map(Vec::len).collect() }
}

#[derive(Clone, Debug)]
pub struct TensorAlgebra {
  module: GdgaInstance,
  amb: Ambient,
  d_w: Derivation,
  i_w: Vec<Derivation>,
  l_w: Vec<Derivation>,
  d_m: Derivation,
  iota_m: Vec<Derivation>,
  lie_m: Vec<Derivation>,
}

fn combine(name: &str, parts: &[(Scalar, &Derivation)]) -> Op {
  let parts: Vec<_> = parts.iter().filter(|(c, _)| !c.is_zero()).cloned().collect();
  if parts.is_empty() {
    return Op::Zero;
  }
  Op::deriv(Derivation::linear_combination(name, &parts))
}

impl TensorAlgebra {
  pub fn new(module: &GdgaInstance, truncation: u32) -> Result<Self> {
    let lie = module.lie();
    let n = lie.dim();
    let amb = Ambient::new(n, module.layout().clone(), truncation)?;
    let w = weil_images(lie, WeilMutation::None);
    let d_w = weil_factor_derivation(&amb, "d_W", Parity::Odd, &w.d);
    let i_w = w.i.iter().map(|g| weil_factor_derivation(&amb, "i", Parity::Odd, g)).collect();
    let l_w = w.l.iter().map(|g| weil_factor_derivation(&amb, "L", Parity::Even, g)).collect();
    let d_m = module_factor_derivation(&amb, "d", Parity::Odd, module.d_images());
    let iota_m = (0..n).map(|k| module_factor_derivation(&amb, "iota", Parity::Odd, module.iota_images(k))).collect();
    let lie_m = (0..n).map(|k| module_factor_derivation(&amb, "Lie", Parity::Even, module.lie_images(k))).collect();
    Ok(Self { module: module.clone(), amb, d_w, i_w, l_w, d_m, iota_m, lie_m })
  }

  /// Same module at a different truncation.
  pub fn with_truncation(&self, truncation: u32) -> Result<Self> { Self::new(&self.module, truncation) }

  pub fn ambient(&self) -> &Ambient { &self.amb }

  pub fn module(&self) -> &GdgaInstance { &self.module }

  pub fn lie(&self) -> &LieAlgebraSpec { self.module.lie() }

  pub fn n(&self) -> usize { self.lie().dim() }

  fn one() -> Scalar { Scalar::from_int(1) }

  fn f(&self, k: usize, j: usize) -> Scalar { Scalar::real(self.lie().f(k, j).clone()) }

  pub fn d_w_op(&self) -> Op { Op::deriv(self.d_w.clone()) }

  pub fn i_w_op(&self, k: usize) -> Op { Op::deriv(self.i_w[k].clone()) }

  pub fn l_w_op(&self, k: usize) -> Op { Op::deriv(self.l_w[k].clone()) }

  /// `1⊗d`.
  pub fn module_d(&self) -> Op { Op::deriv(self.d_m.clone()) }

  /// `1⊗ι_k`.
  pub fn module_iota(&self, k: usize) -> Op { Op::deriv(self.iota_m[k].clone()) }

  /// `1⊗L_k`.
  pub fn module_lie(&self, k: usize) -> Op { Op::deriv(self.lie_m[k].clone()) }

  /// `D = d_W⊗1 + 1⊗d`.
  pub fn d_total(&self) -> Op { combine("D", &[(Self::one(), &self.d_w), (Self::one(), &self.d_m)]) }

  /// `ĩ_k = i_k⊗1 + 1⊗ι_k`.
  pub fn i_tilde(&self, k: usize) -> Op { combine("i~", &[(Self::one(), &self.i_w[k]), (Self::one(), &self.iota_m[k])]) }

  /// `L̃_k = L_k⊗1 + 1⊗L_k`.
  pub fn l_tilde(&self, k: usize) -> Op { combine("L~", &[(Self::one(), &self.l_w[k]), (Self::one(), &self.lie_m[k])]) }

  /// `1⊗(ι_k + √−1 Σ_j f_k^j ι_j)`.
  pub fn twisted_iota(&self, k: usize) -> Op {
    let mut parts = vec![(Self::one(), &self.iota_m[k])];
    parts.extend((0..self.n()).map(|j| (&Scalar::i() * &self.f(k, j), &self.iota_m[j])));
    combine("iota~", &parts)
  }

  /// `1⊗(L_k + √−1 Σ_j f_k^j L_j)`.
  pub fn twisted_lie(&self, k: usize) -> Op {
    let mut parts = vec![(Self::one(), &self.lie_m[k])];
    parts.extend((0..self.n()).map(|j| (&Scalar::i() * &self.f(k, j), &self.lie_m[j])));
    combine("Lie~", &parts)
  }

  fn check_vector(&self, v: &LieVector) -> Result<()> {
    if v.dim() != self.n() {
      return Err(Error::DimensionMismatch { expected: self.n(), got: v.dim() });
    }
    Ok(())
  }

  fn complexified(&self, name: &str, weil: &[Derivation], module: &[Derivation], x: &LieVector, y: &LieVector) -> Result<Op> {
    self.check_vector(x)?;
    self.check_vector(y)?;
    let mut parts: Vec<(Scalar, &Derivation)> = Vec::new();
    for k in 0..self.n() {
      parts.push((x.0[k].clone(), &weil[k]));
      parts.push((&x.0[k] + &(&Scalar::i() * &y.0[k]), &module[k]));
    }
    Ok(combine(name, &parts))
  }

  /// `ĩ_{X+√−1Y} = i_X⊗1 + 1⊗(ι_X + √−1 ι_Y)`.
  pub fn i_tilde_twisted(&self, x: &LieVector, y: &LieVector) -> Result<Op> { self.complexified("i~", &self.i_w, &self.iota_m, x, y) }

  /// `L̃_{X+√−1Y} = L_X⊗1 + 1⊗(L_X + √−1 L_Y)`.
  pub fn l_tilde_twisted(&self, x: &LieVector, y: &LieVector) -> Result<Op> { self.complexified("L~", &self.l_w, &self.lie_m, x, y) }

  /// The operator families whose joint kernel is the basic subspace.
  pub fn basic_conditions(&self, mode: BasicMode) -> Vec<Op> {
    let n = self.n();
    match mode {
      BasicMode::AllPairs => (0..n)
        .flat_map(|k| [self.i_tilde(k), self.module_iota(k), self.l_tilde(k), self.module_lie(k)])
        .collect(),
      BasicMode::TwistedPairs => (0..n)
        .flat_map(|k| {
          let e = LieVector::basis(n, k);
          let y = self.lie().twist_apply(&e).expect("dimension");
          [self.i_tilde_twisted(&e, &y).expect("dimension"), self.l_tilde_twisted(&e, &y).expect("dimension")]
        })
        .collect(),
    }
  }

  /// Exact per-degree basis of the basic subspace for degrees `0..=max_degree`.
  pub fn basic_subspace(&self, max_degree: u32, mode: BasicMode) -> BasicSubspaceBasis {
    let ops = self.basic_conditions(mode);
    let per_degree =
      (0..=max_degree.min(self.amb.truncation())).map(|d| joint_kernel(&self.amb, &ops, &self.amb.basis_of_degree(d))).collect();
    BasicSubspaceBasis { per_degree }
  }

  /// Joint kernel of `ĩ_{X+√−1Y}`, `L̃_{X+√−1Y}` over an explicit list of pairs.
  pub fn kernel_for_pairs(&self, degree: u32, pairs: &[(LieVector, LieVector)]) -> Result<Vec<GradedElement>> {
    let mut ops = Vec::new();
    for (x, y) in pairs {
      ops.push(self.i_tilde_twisted(x, y)?);
      ops.push(self.l_tilde_twisted(x, y)?);
    }
    Ok(joint_kernel(&self.amb, &ops, &self.amb.basis_of_degree(degree)))
  }

  /// The six tensor identities on every basis monomial of degree ≤ `max_degree`.
  pub fn check_identities(&self, max_degree: u32) -> Result<ValidationReport> {
    let t = self.with_truncation(max_degree + 2)?;
    let n = t.n();
    let ops = CalculusOps {
      d: t.d_total(),
      i: (0..n).map(|k| t.i_tilde(k)).collect(),
      l: (0..n).map(|k| t.l_tilde(k)).collect(),
    };
    Ok(ops.check(&t.amb, t.lie(), &t.amb.basis_up_to(max_degree), "tensor", "D"))
  }

  /// `{D, ĩ_{X+√−1Y}} = L̃_{X+√−1Y}` for every basis pair `(X, Y) = (e_j, e_k)`.
  pub fn check_complexified_cartan(&self, max_degree: u32) -> Result<ValidationReport> {
    let t = self.with_truncation(max_degree + 1)?;
    let n = t.n();
    let basis = t.amb.basis_up_to(max_degree);
    let d = t.d_total();
    let mut report = ValidationReport::new("complexified-cartan");
    for j in 0..n {
      for k in 0..n {
        let (x, y) = (LieVector::basis(n, j), LieVector::basis(n, k));
        let lhs = anticommutator(&d, &t.i_tilde_twisted(&x, &y)?);
        let rule = format!("{{D, i~(e_{} + I e_{})}} = L~(e_{} + I e_{})", j + 1, k + 1, j + 1, k + 1);
        compare_on_basis(&t.amb, &mut report, &rule, &lhs, &t.l_tilde_twisted(&x, &y)?, &basis);
      }
    }
    Ok(report)
  }

  /// `D` maps each basic vector of degree `< max_degree` into the basic span
  /// one degree up.
  pub fn check_basic_preserved(&self, max_degree: u32, mode: BasicMode) -> Result<ValidationReport> {
    let t = self.with_truncation(max_degree)?;
    let basic = t.basic_subspace(max_degree, mode);
    let d = t.d_total();
    let mut report = ValidationReport::new("basic-preserved");
    for deg in 0..max_degree as usize {
      let span = Span::new(&basic.per_degree[deg + 1]);
      for v in &basic.per_degree[deg] {
        report.checked += 1;
        let image = d.apply(&t.amb, v);
        if !span.contains(&image) {
          report.push("D(basic) is basic", t.amb.display(v).to_string(), t.amb.display(&image).to_string());
        }
      }
    }
    Ok(report)
  }

  /// Joint kernel of `ops` on the span of `vectors`.
  pub fn kernel_on(&self, ops: &[Op], vectors: &[GradedElement]) -> Vec<GradedElement> { joint_kernel_on(&self.amb, ops, vectors) }
}
