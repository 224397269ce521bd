//! Finite stand-ins for `Ω*(M)`: graded algebras `A` with `d`, `ι_k`, `L_k`
//! satisfying the Cartan calculus.
//!
//! Three instances are provided: the point, polynomial differential forms on
//! `ℝ^m` under a linear action, and `W(g)` acting on itself.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graded::{Ambient, Exponents, ModMono, ModuleLayout};
use crate::lie::LieAlgebraSpec;
use crate::operator::{compare_on_basis, Op, Parity};
use crate::report::ValidationReport;
use crate::scalar::{Rational, Scalar};
use crate::weil::{module_factor_derivation, weil_images, CalculusOps, GeneratorImages, LocalElement, WeilAlgebra, WeilMutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModuleKind {
  Point,
  PolynomialForms,
  WeilAsModule,
}

impl ModuleKind {
  pub fn tag(self) -> &'static str {
    match self {
      ModuleKind::Point => "point",
      ModuleKind::PolynomialForms => "polynomial_forms",
      ModuleKind::WeilAsModule => "weil",
    }
  }
}

/// A linear action of `g` on `ℝ^m`: one `m × m` matrix per basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearActionSpec {
  pub ambient_dim: usize,
  /// `rho[k][a][b]`: entry `(a, b)` of the matrix of `e_k`.
  pub rho: Vec<Vec<Vec<Rational>>>,
  /// Cap on polynomial weight (polynomial degree plus form degree).
  pub poly_cap: u32,
}

impl LinearActionSpec {
  /// `e_1` rotating `ℝ²`: `ρ(e_1) = [[0, −1], [1, 0]]`.
  pub fn plane_rotation(poly_cap: u32) -> Self {
    let q = |v: i64| Rational::from_integer(v.into());
    Self { ambient_dim: 2, rho: vec![vec![vec![q(0), q(-1)], vec![q(1), q(0)]]], poly_cap }
  }

  /// Two commuting generators on `ℝ²`: `ρ(e_1)` the rotation generator and
  /// `ρ(e_2)` the identity (radial scaling).
  pub fn rotation_pair(poly_cap: u32) -> Self {
    let q = |v: i64| Rational::from_integer(v.into());
    let mut spec = Self::plane_rotation(poly_cap);
    spec.rho.push(vec![vec![q(1), q(0)], vec![q(0), q(1)]]);
    spec
  }

  /// The adjoint representation `ρ(e_k)_{ab} = c^a_{kb}`.
  pub fn adjoint(spec: &LieAlgebraSpec, poly_cap: u32) -> Self {
    let n = spec.dim();
    let rho = (0..n).map(|k| (0..n).map(|a| (0..n).map(|b| spec.c(a, k, b).clone()).collect()).collect()).collect();
    Self { ambient_dim: n, rho, poly_cap }
  }

  /// Every `(j, k, a, b)` where `ρ([e_j, e_k]) ≠ [ρ(e_j), ρ(e_k)]`.
  pub fn homomorphism_report(&self, lie: &LieAlgebraSpec) -> ValidationReport {
    let n = lie.dim();
    let m = self.ambient_dim;
    let mut report = ValidationReport::new("representation");
    for j in 0..n {
      for k in 0..n {
        for a in 0..m {
          for b in 0..m {
            report.checked += 1;
            let lhs: Rational = (0..n).map(|i| lie.c(i, j, k) * &self.rho[i][a][b]).sum();
            let rhs: Rational =
              (0..m).map(|t| &self.rho[j][a][t] * &self.rho[k][t][b] - &self.rho[k][a][t] * &self.rho[j][t][b]).sum();
            if lhs != rhs {
              report.push(
                "rho([e_j,e_k]) = [rho(e_j), rho(e_k)]",
                format!("(j={},k={},a={},b={})", j + 1, k + 1, a + 1, b + 1),
                (lhs - rhs).to_string(),
              );
            }
          }
        }
      }
    }
    report
  }

  fn check_shape(&self, n: usize) -> Result<()> {
    if self.ambient_dim == 0 {
      return Err(Error::Invalid("ambient dimension must be positive".into()));
    }
    if self.rho.len() != n {
      return Err(Error::DimensionMismatch { expected: n, got: self.rho.len() });
    }
    for mat in &self.rho {
      if mat.len() != self.ambient_dim || mat.iter().any(|row| row.len() != self.ambient_dim) {
        return Err(Error::Invalid(format!("representation matrices must be {0}x{0}", self.ambient_dim)));
      }
    }
    Ok(())
  }
}

#[derive(Clone, Debug)]
pub struct GdgaInstance {
  kind: ModuleKind,
  lie: LieAlgebraSpec,
  layout: ModuleLayout,
  d: GeneratorImages,
  iota: Vec<GeneratorImages>,
  lie_derivative: Vec<GeneratorImages>,
}

impl GdgaInstance {
  /// `M = pt`: one basis element, every operator zero.
  pub fn point(lie: &LieAlgebraSpec) -> Self {
    let n = lie.dim();
    Self {
      kind: ModuleKind::Point,
      lie: lie.clone(),
      layout: ModuleLayout::point(),
      d: GeneratorImages::zero(0, 0),
      iota: vec![GeneratorImages::zero(0, 0); n],
      lie_derivative: vec![GeneratorImages::zero(0, 0); n],
    }
  }

  /// Polynomial forms on `ℝ^m`. Generators `x_a` (even, degree 0) and `dx_a`
  /// (odd, degree 1); `e_k` acts by the vector field `X_k = −Σ ρ(e_k)_{ab} x_b ∂_a`.
  pub fn polynomial_forms(spec: &LinearActionSpec, lie: &LieAlgebraSpec) -> Result<Self> {
    spec.check_shape(lie.dim())?;
    let report = spec.homomorphism_report(lie);
    if let Some(v) = report.violations.first() {
      return Err(Error::Invalid(format!("representation is not a Lie algebra homomorphism: {v}")));
    }
    Self::polynomial_forms_unchecked(spec, lie)
  }

  /// Same as [`GdgaInstance::polynomial_forms`] without the homomorphism check
  /// (for negative controls).
  pub fn polynomial_forms_unchecked(spec: &LinearActionSpec, lie: &LieAlgebraSpec) -> Result<Self> {
    spec.check_shape(lie.dim())?;
    let m = spec.ambient_dim;
    if lie.dim() + m > crate::graded::MAX_ODD_GENERATORS {
      return Err(Error::Invalid("too many generators".into()));
    }
    let x = |b: usize| {
      let mut e: Exponents = smallvec::smallvec![0; m];
      e[b] = 1;
      ModMono { odd: 0, even: e }
    };
    let dx = |b: usize| ModMono { odd: 1 << b, even: smallvec::smallvec![0; m] };
    let mut d = GeneratorImages::zero(m, m);
    for a in 0..m {
      d.even[a] = vec![(dx(a), Scalar::one())];
    }
    let mut iota = Vec::new();
    let mut lie_derivative = Vec::new();
    for mat in &spec.rho {
      let mut i = GeneratorImages::zero(m, m);
      let mut l = GeneratorImages::zero(m, m);
      for a in 0..m {
        let coeffs: Vec<(usize, Scalar)> =
          (0..m).filter(|&b| !mat[a][b].is_zero()).map(|b| (b, -Scalar::real(mat[a][b].clone()))).collect();
        i.odd[a] = coeffs.iter().map(|(b, c)| (x(*b), c.clone())).collect();
        l.even[a] = coeffs.iter().map(|(b, c)| (x(*b), c.clone())).collect();
        l.odd[a] = coeffs.iter().map(|(b, c)| (dx(*b), c.clone())).collect();
      }
      iota.push(i);
      lie_derivative.push(l);
    }
    Ok(Self {
      kind: ModuleKind::PolynomialForms,
      lie: lie.clone(),
      layout: ModuleLayout { odd_count: m, even_count: m, even_degree: 0, weight_cap: Some(spec.poly_cap) },
      d,
      iota,
      lie_derivative,
    })
  }

  /// `W(g)` as its own module, with `(d, ι, L) := (d_W, i, L)`.
  pub fn weil_as_module(weil: &WeilAlgebra) -> Self { Self::weil_as_module_for(weil.spec(), weil.mutation()) }

  pub fn weil_as_module_for(lie: &LieAlgebraSpec, mutation: WeilMutation) -> Self {
    let n = lie.dim();
    let images = weil_images(lie, mutation);
    Self {
      kind: ModuleKind::WeilAsModule,
      lie: lie.clone(),
      layout: ModuleLayout { odd_count: n, even_count: n, even_degree: 2, weight_cap: None },
      d: images.d,
      iota: images.i,
      lie_derivative: images.l,
    }
  }

  /// Same module with another Lie algebra spec of equal dimension (used to
  /// swap the twist matrix).
  pub fn with_lie(&self, lie: LieAlgebraSpec) -> Self {
    assert_eq!(lie.dim(), self.lie.dim(), "Lie algebra dimension must not change");
    Self { lie, ..self.clone() }
  }

  pub fn kind(&self) -> ModuleKind { self.kind }

  pub fn lie(&self) -> &LieAlgebraSpec { &self.lie }

  pub fn layout(&self) -> &ModuleLayout { &self.layout }

  pub fn d_images(&self) -> &GeneratorImages { &self.d }

  pub fn iota_images(&self, k: usize) -> &GeneratorImages { &self.iota[k] }

  pub fn lie_images(&self, k: usize) -> &GeneratorImages { &self.lie_derivative[k] }

  /// Module basis of degree `d`, canonical order.
  pub fn basis_of_degree(&self, d: u32) -> Vec<ModMono> { self.layout.basis_of_degree(d) }

  /// The module alone as an ambient (Weil rank 0) with its operators.
  fn standalone(&self, truncation: u32) -> Result<(Ambient, CalculusOps)> {
    // The Weil factor is kept at rank n but unused: basis elements are θ,φ-free.
    let amb = Ambient::new(self.lie.dim(), self.layout.clone(), truncation)?;
    let n = self.lie.dim();
    let ops = CalculusOps {
      d: Op::deriv(module_factor_derivation(&amb, "d", Parity::Odd, &self.d)),
      i: (0..n).map(|k| Op::deriv(module_factor_derivation(&amb, "iota", Parity::Odd, &self.iota[k]))).collect(),
      l: (0..n).map(|k| Op::deriv(module_factor_derivation(&amb, "L", Parity::Even, &self.lie_derivative[k]))).collect(),
    };
    Ok((amb, ops))
  }

  /// Applies `d`, `ι_k` or `L_k` to a module element.
  pub fn apply(&self, op: ModuleOp, x: &LocalElement) -> Result<LocalElement> {
    let max_degree = x.iter().map(|(m, _)| self.layout.degree(m)).max().unwrap_or(0) + 1;
    let (amb, ops) = self.standalone(max_degree)?;
    let op = match op {
      ModuleOp::D => &ops.d,
      ModuleOp::Iota(k) => &ops.i[k],
      ModuleOp::Lie(k) => &ops.l[k],
    };
    let image = op.apply(&amb, &amb.lift_element(x));
    Ok(image.terms().map(|(m, c)| (amb.module_part(m), c.clone())).collect())
  }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModuleOp {
  D,
  Iota(usize),
  Lie(usize),
}

/// Degree bookkeeping for generator images plus the Cartan-calculus identities
/// on every module basis element of degree ≤ `max_degree`.
pub fn check_gdga(instance: &GdgaInstance, max_degree: u32) -> Result<ValidationReport> {
  let (amb, ops) = instance.standalone(max_degree + 2)?;
  let basis: Vec<_> = amb.basis_up_to(max_degree).into_iter().filter(|m| amb.is_weil_unit(m)).collect();
  let mut report = ops.check(&amb, instance.lie(), &basis, "gdga", "d");
  let layout = instance.layout();
  let degree_check = |report: &mut ValidationReport, name: &str, images: &GeneratorImages, shift: i64| {
    let gens = images.odd.iter().map(|img| (img, 1i64)).chain(images.even.iter().map(|img| (img, layout.even_degree as i64)));
    for (idx, (img, gen_degree)) in gens.enumerate() {
      report.checked += 1;
      if let Some((m, _)) = img.iter().find(|(m, _)| layout.degree(m) as i64 != gen_degree + shift) {
        report.push(format!("{name} has degree {shift:+}"), format!("generator {idx}"), format!("{m:?}"));
      }
    }
  };
  degree_check(&mut report, "d", &instance.d, 1);
  for k in 0..instance.lie().dim() {
    degree_check(&mut report, &format!("iota_{}", k + 1), &instance.iota[k], -1);
    degree_check(&mut report, &format!("L_{}", k + 1), &instance.lie_derivative[k], 0);
  }
  // L_k must agree with {d, ι_k} on the generators themselves.
  let gens: Vec<_> = (0..layout.odd_count)
    .map(|a| amb.module_generator_odd(a))
    .chain((0..layout.even_count).map(|a| amb.module_generator_even(a)))
    .filter(|m| amb.degree(m) <= max_degree)
    .collect();
  for k in 0..instance.lie().dim() {
    compare_on_basis(
      &amb,
      &mut report,
      &format!("L_{} = {{d, iota_{}}} on generators", k + 1, k + 1),
      &ops.l[k],
      &crate::operator::anticommutator(&ops.d, &ops.i[k]),
      &gens,
    );
  }
  Ok(report)
}
