//! Lie algebra data: structure constants `c^i_{jk}` with `[e_j, e_k] = Σ_i c^i_{jk} e_i`,
//! and the twist matrix `f_i^j` that mixes contraction directions.
//!
//! Indices are zero-based in the API and one-based in every printed report.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::report::ValidationReport;
use crate::scalar::{Rational, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebraSpec {
  dim: usize,
  /// Dense `c^i_{jk}` at `i * n * n + j * n + k`.
  constants: Vec<Rational>,
  /// `twist[i][j] = f_i^j`.
  twist: Vec<Vec<Rational>>,
  name: String,
}

impl LieAlgebraSpec {
  /// Builds a spec from `(i, j, k, c^i_{jk})` entries.
  ///
  /// An entry with `j < k` also sets `c^i_{kj} = -c^i_{jk}`. Entries with
  /// `j >= k` are stored exactly as given, after all `j < k` entries, so an
  /// inconsistent table stays inconsistent and `validate` can locate it.
  pub fn from_constants(dim: usize, entries: &[(usize, usize, usize, Rational)]) -> Result<Self> {
    if dim == 0 {
      return Err(Error::Invalid("Lie algebra dimension must be positive".into()));
    }
    if dim > 16 {
      return Err(Error::Invalid(format!("dimension {dim} exceeds the supported maximum of 16")));
    }
    let mut constants = vec![Rational::zero(); dim * dim * dim];
    for (i, j, k, _) in entries {
      if *i >= dim || *j >= dim || *k >= dim {
        return Err(Error::Invalid(format!("structure constant index ({}, {}, {}) out of range", i + 1, j + 1, k + 1)));
      }
    }
    for (i, j, k, v) in entries.iter().filter(|e| e.1 < e.2) {
      constants[i * dim * dim + j * dim + k] = v.clone();
      constants[i * dim * dim + k * dim + j] = -v.clone();
    }
    for (i, j, k, v) in entries.iter().filter(|e| e.1 >= e.2) {
      constants[i * dim * dim + j * dim + k] = v.clone();
    }
    Ok(Self { dim, constants, twist: vec![vec![Rational::zero(); dim]; dim], name: "custom".into() })
  }

  pub fn abelian(dim: usize) -> Self {
    let mut spec = Self::from_constants(dim, &[]).expect("positive dimension");
    spec.name = format!("abelian({dim})");
    spec
  }

  /// su(2) with `c^i_{jk} = ε_{ijk}`.
  pub fn su2() -> Self {
    let one = Rational::one;
    let mut spec =
      Self::from_constants(3, &[(2, 0, 1, one()), (0, 1, 2, one()), (1, 0, 2, -one())]).expect("valid constants");
    spec.name = "su2".into();
    spec
  }

  /// Heisenberg algebra: `[e_1, e_2] = e_3`.
  pub fn heisenberg3() -> Self {
    let mut spec = Self::from_constants(3, &[(2, 0, 1, Rational::one())]).expect("valid constants");
    spec.name = "heisenberg3".into();
    spec
  }

  /// Looks up a bundled preset: `abelian(n)` / `abelianN`, `su2`, `so3`, `heisenberg3`.
  pub fn preset(name: &str) -> Result<Self> {
    let name = name.trim();
    match name {
      "su2" | "so3" => return Ok(Self::su2()),
      "heisenberg3" | "heisenberg" => return Ok(Self::heisenberg3()),
      _ => {},
    }
    if let Some(rest) = name.strip_prefix("abelian") {
      let digits = rest.trim_start_matches('(').trim_end_matches(')');
      if let Ok(dim) = digits.parse::<usize>() {
        if dim > 0 {
          return Ok(Self::abelian(dim));
        }
      }
    }
    Err(Error::Invalid(format!("unknown preset `{name}`")))
  }

  pub fn with_twist(mut self, twist: Vec<Vec<Rational>>) -> Result<Self> {
    if twist.len() != self.dim {
      return Err(Error::DimensionMismatch { expected: self.dim, got: twist.len() });
    }
    if let Some(row) = twist.iter().find(|row| row.len() != self.dim) {
      return Err(Error::DimensionMismatch { expected: self.dim, got: row.len() });
    }
    self.twist = twist;
    Ok(self)
  }

  /// Twist `f = scale · identity`.
  pub fn with_scaled_identity_twist(self, scale: Rational) -> Self {
    let n = self.dim;
    let twist =
      (0..n).map(|i| (0..n).map(|j| if i == j { scale.clone() } else { Rational::zero() }).collect()).collect();
    self.with_twist(twist).expect("square twist")
  }

  pub fn dim(&self) -> usize { self.dim }

  pub fn name(&self) -> &str { &self.name }

  /// `c^i_{jk}`.
  pub fn c(&self, i: usize, j: usize, k: usize) -> &Rational { &self.constants[i * self.dim * self.dim + j * self.dim + k] }

  /// `f_i^j`.
  pub fn f(&self, i: usize, j: usize) -> &Rational { &self.twist[i][j] }

  pub fn twist(&self) -> &[Vec<Rational>] { &self.twist }

  pub fn twist_is_zero(&self) -> bool { self.twist.iter().flatten().all(Zero::is_zero) }

  pub fn is_abelian(&self) -> bool { self.constants.iter().all(Zero::is_zero) }

  /// Every antisymmetry and Jacobi violation, with one-based indices.
  pub fn validate(&self) -> ValidationReport {
    let n = self.dim;
    let mut report = ValidationReport::new("lie");
    for i in 0..n {
      for j in 0..n {
        for k in j..n {
          report.checked += 1;
          let residual = self.c(i, j, k) + self.c(i, k, j);
          if !residual.is_zero() {
            report.push("antisymmetry c^i_jk = -c^i_kj", format!("({},{},{})", i + 1, j + 1, k + 1), residual.to_string());
          }
        }
      }
    }
    for i in 0..n {
      for j in 0..n {
        for k in 0..n {
          for l in 0..n {
            report.checked += 1;
            let residual: Rational = (0..n)
              .map(|m| {
                self.c(m, j, k) * self.c(i, m, l) + self.c(m, k, l) * self.c(i, m, j) + self.c(m, l, j) * self.c(i, m, k)
              })
              .sum();
            if !residual.is_zero() {
              report.push("jacobi", format!("({},{},{},{})", i + 1, j + 1, k + 1, l + 1), residual.to_string());
            }
          }
        }
      }
    }
    report
  }

  /// Reports every `(i, j, k)` where the twist fails to commute with `ad(e_i)`:
  /// `Σ_m (c^j_{im} f_m^k − f_j^m c^m_{ik}) ≠ 0`.
  pub fn twist_equivariance_check(&self) -> ValidationReport {
    let n = self.dim;
    let mut report = ValidationReport::new("twist-equivariance");
    for i in 0..n {
      for j in 0..n {
        for k in 0..n {
          report.checked += 1;
          let residual: Rational =
            (0..n).map(|m| self.c(j, i, m) * self.f(m, k) - self.f(j, m) * self.c(m, i, k)).sum();
          if !residual.is_zero() {
            report.push("[ad e_i, f] = 0", format!("({},{},{})", i + 1, j + 1, k + 1), residual.to_string());
          }
        }
      }
    }
    report
  }

  pub fn bracket(&self, x: &LieVector, y: &LieVector) -> Result<LieVector> {
    self.check_dim(x)?;
    self.check_dim(y)?;
    let n = self.dim;
    let coeffs = (0..n)
      .map(|i| {
        let mut acc = Scalar::zero();
        for j in 0..n {
          if x.0[j].is_zero() {
            continue;
          }
          for k in 0..n {
            let c = self.c(i, j, k);
            if !c.is_zero() && !y.0[k].is_zero() {
              acc += &(&(&x.0[j] * &y.0[k]) * &Scalar::real(c.clone()));
            }
          }
        }
        acc
      })
      .collect();
    Ok(LieVector(coeffs))
  }

  /// The twisted partner `Y^i = Σ_j f_j^i X^j`.
  pub fn twist_apply(&self, x: &LieVector) -> Result<LieVector> {
    self.check_dim(x)?;
    let n = self.dim;
    Ok(LieVector(
      (0..n).map(|i| (0..n).map(|j| &Scalar::real(self.f(j, i).clone()) * &x.0[j]).sum()).collect(),
    ))
  }

  fn check_dim(&self, x: &LieVector) -> Result<()> {
    if x.0.len() != self.dim {
      return Err(Error::DimensionMismatch { expected: self.dim, got: x.0.len() });
    }
    Ok(())
  }
}

/// `X = Σ_i X^i e_i` with possibly complex coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieVector(pub Vec<Scalar>);

impl LieVector {
  pub fn zero(dim: usize) -> Self { Self(vec![Scalar::zero(); dim]) }

  pub fn basis(dim: usize, k: usize) -> Self {
    let mut v = Self::zero(dim);
    v.0[k] = Scalar::one();
    v
  }

  pub fn dim(&self) -> usize { self.0.len() }

  pub fn is_zero(&self) -> bool { self.0.iter().all(Zero::is_zero) }

  pub fn scale(&self, a: &Scalar) -> Self { Self(self.0.iter().map(|x| a * x).collect()) }

  pub fn add(&self, other: &Self) -> Self { Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()) }
}
