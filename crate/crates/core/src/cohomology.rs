//! Per-degree matrices of a differential on a subspace, Betti tables, and
//! equivariant cohomology from either model.

use std::fmt::Write as _;

use num_traits::Zero;
use rayon::prelude::*;

use crate::brst::Brst;
use crate::cartan::{CartanModel, InvarianceMode, SignConvention};
use crate::error::{Error, Result};
use crate::gdga::GdgaInstance;
use crate::graded::{Ambient, GradedElement};
use crate::lie::LieAlgebraSpec;
use crate::linalg::{bareiss_rank, SparseVec, Solver};
use crate::operator::Op;
use crate::scalar::Scalar;
use crate::weil::WeilAlgebra;
use crate::weilmodel::{BasicMode, TensorAlgebra};

/// The matrix of a map from degree `degree` to `degree + 1`, column `j` being
/// the coordinates of the image of domain vector `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeMatrix {
  pub degree: u32,
  pub rows: usize,
  pub columns: Vec<SparseVec>,
}

impl DegreeMatrix {
  pub fn cols(&self) -> usize { self.columns.len() }

  pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
    let mut m = vec![vec![Scalar::zero(); self.cols()]; self.rows];
    for (j, col) in self.columns.iter().enumerate() {
      for (i, c) in col {
        m[*i][j] = c.clone();
      }
    }
    m
  }

  pub fn rank(&self) -> usize { if self.rows == 0 || self.cols() == 0 { 0 } else { bareiss_rank(&self.to_dense()) } }

  /// `self ∘ before` (apply `before` first).
  fn compose(&self, before: &DegreeMatrix) -> Vec<Vec<Scalar>> {
    let a = self.to_dense();
    before
      .columns
      .iter()
      .map(|col| (0..self.rows).map(|i| col.iter().map(|(k, c)| &a[i][*k] * c).sum()).collect())
      .collect()
  }
}

/// Coordinates of `op` applied to each domain vector in the codomain basis.
/// An image outside the codomain span is a structural error.
pub fn matrix_of(amb: &Ambient, op: &Op, domain: &[GradedElement], codomain: &[GradedElement], degree: u32) -> Result<DegreeMatrix> {
  let solver = Solver::new(codomain);
  let columns: Vec<Result<SparseVec>> = domain
    .par_iter()
    .map(|x| {
      let image = op.apply(amb, x);
      solver.solve(&image).ok_or_else(|| {
        Error::Structural(format!("image of {} escapes the degree-{} subspace: {}", amb.display(x), degree + 1, amb.display(&image)))
      })
    })
    .collect();
  Ok(DegreeMatrix { degree, rows: codomain.len(), columns: columns.into_iter().collect::<Result<_>>()? })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BettiRow {
  pub degree: u32,
  pub dim: usize,
  pub ker: usize,
  pub im: usize,
  pub betti: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
  pub rows: Vec<BettiRow>,
}

impl BettiTable {
  pub fn bettis(&self) -> Vec<usize> { self.rows.iter().map(|r| r.betti).collect() }

  pub fn to_tsv(&self) -> String {
    let mut out = String::from("degree\tdim\tker\tim\tbetti\n");
    for r in &self.rows {
      let _ = writeln!(out, "{}\t{}\t{}\t{}\t{}", r.degree, r.dim, r.ker, r.im, r.betti);
    }
    out
  }
}

/// `betti_d = dim ker M_d − rank M_{d−1}` for `d < matrices.len()`.
/// `matrices[d]` maps degree `d` to `d + 1`; the top degree is never reported.
pub fn betti(matrices: &[DegreeMatrix]) -> Result<BettiTable> {
  for pair in matrices.windows(2) {
    let product = pair[1].compose(&pair[0]);
    if product.iter().flatten().any(|c| !c.is_zero()) {
      return Err(Error::Structural(format!("not a complex: M_{} M_{} != 0", pair[1].degree, pair[0].degree)));
    }
  }
  let ranks: Vec<usize> = matrices.par_iter().map(DegreeMatrix::rank).collect();
  let rows = matrices
    .iter()
    .enumerate()
    .map(|(d, m)| {
      let ker = m.cols() - ranks[d];
      let im = if d == 0 { 0 } else { ranks[d - 1] };
      BettiRow { degree: d as u32, dim: m.cols(), ker, im, betti: ker - im }
    })
    .collect();
  Ok(BettiTable { rows })
}

/// Betti table of `op` on the graded subspace `spaces` (index = degree),
/// reporting degrees `0..spaces.len() − 1`.
pub fn complex_betti(amb: &Ambient, op: &Op, spaces: &[Vec<GradedElement>]) -> Result<BettiTable> {
  let matrices = (0..spaces.len().saturating_sub(1))
    .map(|d| matrix_of(amb, op, &spaces[d], &spaces[d + 1], d as u32))
    .collect::<Result<Vec<_>>>()?;
  betti(&matrices)
}

/// `(W(g), d_W)` in degrees `< top`.
pub fn weil_cohomology(spec: &LieAlgebraSpec, top: u32) -> Result<BettiTable> {
  let w = WeilAlgebra::new(spec, top)?;
  let amb = w.ambient();
  let spaces: Vec<Vec<GradedElement>> =
    (0..=top).map(|d| amb.basis_of_degree(d).into_iter().map(GradedElement::from_monomial).collect()).collect();
  complex_betti(amb, &w.d_op(), &spaces)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Model {
  /// `((S(g*) ⊗ A)^inv, d_C)`.
  Cartan(InvarianceMode),
  /// `((W(g) ⊗ A)_bas, D)`.
  WeilBasic(BasicMode),
}

impl Model {
  pub fn tag(self) -> String {
    match self {
      Model::Cartan(m) => format!("cartan/{}", m.tag()),
      Model::WeilBasic(m) => format!("weil/{}", m.tag()),
    }
  }
}

/// Equivariant cohomology in degrees `< top` from the chosen model.
pub fn equivariant_cohomology(module: &GdgaInstance, top: u32, model: Model, sign: SignConvention) -> Result<BettiTable> {
  match model {
    Model::Cartan(mode) => {
      let c = CartanModel::new(module, top, sign)?;
      let spaces = c.invariant_subspace(top, mode);
      complex_betti(c.tensor().ambient(), &c.d_c_op(), &spaces)
    },
    Model::WeilBasic(mode) => {
      let t = TensorAlgebra::new(module, top)?;
      let spaces = t.basic_subspace(top, mode).per_degree;
      complex_betti(t.ambient(), &t.d_total(), &spaces)
    },
  }
}

/// BRST cohomology `(W(g) ⊗ A, δ)` on the full algebra in degrees `< top`.
pub fn brst_cohomology(brst: &Brst, top: u32) -> Result<BettiTable> {
  let amb = brst.tensor().ambient();
  let spaces: Vec<Vec<GradedElement>> =
    (0..=top).map(|d| amb.basis_of_degree(d).into_iter().map(GradedElement::from_monomial).collect()).collect();
  complex_betti(amb, &brst.delta(), &spaces)
}
