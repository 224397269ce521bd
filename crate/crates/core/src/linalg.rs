//! Exact linear algebra over `ℚ(√−1)`.
//!
//! [`Echelon`] keeps a sparse reduced row echelon form and is used for
//! kernels, span membership and coordinate solves. [`bareiss_rank`] is the
//! fraction-free rank used for differentials; [`naive_rank`] is its oracle.

use std::collections::HashMap;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::graded::{Ambient, GradedElement, Monomial};
use crate::operator::Op;
use crate::scalar::Scalar;

/// Sparse vector: strictly increasing indices, no zero entries.
pub type SparseVec = Vec<(usize, Scalar)>;

/// `a − c·b`.
fn axpy(a: &SparseVec, c: &Scalar, b: &SparseVec) -> SparseVec {
  let mut out = Vec::with_capacity(a.len() + b.len());
  let (mut i, mut j) = (0, 0);
  while i < a.len() || j < b.len() {
    if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
      out.push(a[i].clone());
      i += 1;
    } else if i == a.len() || b[j].0 < a[i].0 {
      out.push((b[j].0, -(c * &b[j].1)));
      j += 1;
    } else {
      let v = &a[i].1 - &(c * &b[j].1);
      if !v.is_zero() {
        out.push((a[i].0, v));
      }
      i += 1;
      j += 1;
    }
  }
  out
}

fn entry(v: &SparseVec, col: usize) -> Option<&Scalar> { v.binary_search_by_key(&col, |e| e.0).ok().map(|k| &v[k].1) }

/// Reduced row echelon form, maintained under row insertion.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
  width: usize,
  rows: Vec<SparseVec>,
  /// pivot column → row index
  pivots: HashMap<usize, usize>,
}

impl Echelon {
  pub fn new(width: usize) -> Self { Self { width, ..Self::default() } }

  pub fn width(&self) -> usize { self.width }

  pub fn rank(&self) -> usize { self.rows.len() }

  /// Remainder of `v` after eliminating every pivot column.
  pub fn reduce(&self, v: &SparseVec) -> SparseVec {
    let hits: Vec<(usize, Scalar)> =
      v.iter().filter_map(|(c, x)| self.pivots.get(c).map(|&r| (r, x.clone()))).collect();
    let mut out = v.clone();
    for (r, x) in hits {
      out = axpy(&out, &x, &self.rows[r]);
    }
    out
  }

  pub fn contains(&self, v: &SparseVec) -> bool { self.reduce(v).is_empty() }

  /// Adds a row; returns whether the rank went up.
  pub fn insert(&mut self, v: &SparseVec) -> bool {
    let mut v = self.reduce(v);
    let Some((pivot, lead)) = v.first().cloned() else { return false };
    let inv = lead.inv().expect("nonzero pivot");
    for e in &mut v {
      e.1 = &e.1 * &inv;
    }
    for row in &mut self.rows {
      if let Some(x) = entry(row, pivot).cloned() {
        *row = axpy(row, &x, &v);
      }
    }
    self.pivots.insert(pivot, self.rows.len());
    self.rows.push(v);
    true
  }

  pub fn pivot_columns(&self) -> Vec<usize> {
    let mut p: Vec<usize> = self.pivots.keys().copied().collect();
    p.sort_unstable();
    p
  }

  /// Basis of `{x : row · x = 0 for every inserted row}`, one vector per free
  /// column in increasing order.
  pub fn nullspace(&self) -> Vec<SparseVec> {
    (0..self.width)
      .filter(|c| !self.pivots.contains_key(c))
      .map(|free| {
        let mut v: SparseVec = self
          .pivots
          .iter()
          .filter_map(|(&p, &r)| entry(&self.rows[r], free).map(|x| (p, -x.clone())))
          .collect();
        v.push((free, Scalar::one()));
        v.sort_by_key(|e| e.0);
        v
      })
      .collect()
  }
}

/// Rank by fraction-free elimination. Rows are scaled to Gaussian integers
/// first; every intermediate division is exact.
pub fn bareiss_rank(matrix: &[Vec<Scalar>]) -> usize {
  let mut m: Vec<Vec<Scalar>> = matrix
    .iter()
    .map(|row| {
      let l = row.iter().fold(num_bigint::BigInt::one(), |acc, x| num_integer::Integer::lcm(&acc, &x.denom_lcm()));
      let s = Scalar::real(crate::scalar::Rational::from_integer(l));
      row.iter().map(|x| x * &s).collect()
    })
    .collect();
  let rows = m.len();
  let cols = m.first().map_or(0, Vec::len);
  let mut prev = Scalar::one();
  let mut rank = 0;
  for col in 0..cols {
    if rank == rows {
      break;
    }
    let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else { continue };
    m.swap(rank, p);
    let pivot = m[rank][col].clone();
    let prev_inv = prev.inv().expect("nonzero previous pivot");
    for r in rank + 1..rows {
      let factor = m[r][col].clone();
      for c in col..cols {
        let v = &(&(&pivot * &m[r][c]) - &(&factor * &m[rank][c])) * &prev_inv;
        m[r][c] = v;
      }
    }
    prev = pivot;
    rank += 1;
  }
  rank
}

/// Plain Gaussian elimination with field division.
pub fn naive_rank(matrix: &[Vec<Scalar>]) -> usize {
  let mut e = Echelon::new(matrix.first().map_or(0, Vec::len));
  for row in matrix {
    let v: SparseVec = row.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect();
    e.insert(&v);
  }
  e.rank()
}

/// Coordinates of a [`GradedElement`] in a monomial basis, or the first
/// monomial outside it.
pub fn coordinates(index: &HashMap<Monomial, usize>, x: &GradedElement) -> Result<SparseVec, Monomial> {
  let mut v = Vec::with_capacity(x.len());
  for (m, c) in x.terms() {
    match index.get(m) {
      Some(&i) => v.push((i, c.clone())),
      None => return Err(m.clone()),
    }
  }
  v.sort_by_key(|e| e.0);
  Ok(v)
}

pub fn index_of(basis: &[Monomial]) -> HashMap<Monomial, usize> {
  basis.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect()
}

pub fn element_of(basis: &[Monomial], v: &SparseVec) -> GradedElement {
  v.iter().map(|(i, c)| (basis[*i].clone(), c.clone())).collect()
}

/// Joint kernel of `ops` on the span of `domain` monomials.
pub fn joint_kernel(amb: &Ambient, ops: &[Op], domain: &[Monomial]) -> Vec<GradedElement> {
  joint_kernel_on(amb, ops, &domain.iter().map(|m| GradedElement::from_monomial(m.clone())).collect::<Vec<_>>())
}

/// Joint kernel of `ops` restricted to the span of the linearly independent
/// vectors `domain`; results are combinations of `domain`.
pub fn joint_kernel_on(amb: &Ambient, ops: &[Op], domain: &[GradedElement]) -> Vec<GradedElement> {
  if domain.is_empty() {
    return Vec::new();
  }
  let images: Vec<Vec<GradedElement>> =
    domain.par_iter().map(|x| ops.iter().map(|op| op.apply(amb, x)).collect()).collect();
  let mut equations: HashMap<(usize, Monomial), SparseVec> = HashMap::new();
  for (col, per_op) in images.iter().enumerate() {
    for (o, img) in per_op.iter().enumerate() {
      for (m, c) in img.terms() {
        equations.entry((o, m.clone())).or_default().push((col, c.clone()));
      }
    }
  }
  let mut keys: Vec<_> = equations.keys().cloned().collect();
  keys.sort();
  let mut echelon = Echelon::new(domain.len());
  for key in keys {
    echelon.insert(&equations[&key]);
    if echelon.rank() == domain.len() {
      break;
    }
  }
  echelon
    .nullspace()
    .into_iter()
    .map(|v| {
      let mut out = GradedElement::zero();
      for (i, c) in &v {
        out.add_scaled(&domain[*i], c);
      }
      out
    })
    .collect()
}

/// Row echelon form of a list of elements, for span membership.
pub struct Span {
  index: HashMap<Monomial, usize>,
  echelon: Echelon,
}

impl Span {
  pub fn new(vectors: &[GradedElement]) -> Self {
    let mut monos: Vec<Monomial> = vectors.iter().flat_map(|v| v.terms().map(|(m, _)| m.clone())).collect();
    monos.sort();
    monos.dedup();
    let index = index_of(&monos);
    let mut echelon = Echelon::new(monos.len());
    for v in vectors {
      echelon.insert(&coordinates(&index, v).expect("indexed"));
    }
    Self { index, echelon }
  }

  pub fn dim(&self) -> usize { self.echelon.rank() }

  pub fn contains(&self, x: &GradedElement) -> bool {
    match coordinates(&self.index, x) {
      Ok(v) => self.echelon.contains(&v),
      Err(_) => false,
    }
  }
}

/// Coordinates with respect to a list of linearly independent elements.
pub struct Solver {
  index: HashMap<Monomial, usize>,
  width: usize,
  echelon: Echelon,
}

impl Solver {
  pub fn new(vectors: &[GradedElement]) -> Self {
    let mut monos: Vec<Monomial> = vectors.iter().flat_map(|v| v.terms().map(|(m, _)| m.clone())).collect();
    monos.sort();
    monos.dedup();
    let index = index_of(&monos);
    let width = monos.len();
    let mut echelon = Echelon::new(width + vectors.len());
    for (i, v) in vectors.iter().enumerate() {
      let mut row = coordinates(&index, v).expect("indexed");
      row.push((width + i, Scalar::one()));
      let independent = echelon.insert(&row);
      debug_assert!(independent);
    }
    Self { index, width, echelon }
  }

  /// `c` with `x = Σ c_i v_i`, or `None` when `x` is outside the span.
  pub fn solve(&self, x: &GradedElement) -> Option<SparseVec> {
    let v = coordinates(&self.index, x).ok()?;
    let r = self.echelon.reduce(&v);
    if r.first().is_some_and(|(c, _)| *c < self.width) {
      return None;
    }
    Some(r.into_iter().map(|(c, a)| (c - self.width, -a)).collect())
  }
}

#[cfg(test)]
mod tests {
  use super::*;
  use proptest::prelude::*;

  fn s(re: i64, im: i64) -> Scalar { Scalar::new(crate::scalar::rational(re, 1), crate::scalar::rational(im, 1)) }

  fn dense(rows: &[&[i64]]) -> Vec<Vec<Scalar>> { rows.iter().map(|r| r.iter().map(|&x| s(x, 0)).collect()).collect() }

  #[test]
  fn nullspace_of_small_matrix() {
    // x + y + z = 0, y − z = 0  ⇒  kernel spanned by (−2, 1, 1)
    let mut e = Echelon::new(3);
    e.insert(&vec![(0, s(1, 0)), (1, s(1, 0)), (2, s(1, 0))]);
    e.insert(&vec![(1, s(1, 0)), (2, s(-1, 0))]);
    assert_eq!(e.nullspace(), vec![vec![(0, s(-2, 0)), (1, s(1, 0)), (2, s(1, 0))]]);
    assert!(e.contains(&vec![(0, s(1, 0)), (1, s(2, 0))]));
  }

  #[test]
  fn solver_coordinates() {
    let amb = Ambient::weil(2, 4).unwrap();
    let a = amb.parse("t1 + t2").unwrap();
    let b = amb.parse("t2").unwrap();
    let solver = Solver::new(&[a, b]);
    let x = amb.parse("2*t1 - t2").unwrap();
    assert_eq!(solver.solve(&x), Some(vec![(0, s(2, 0)), (1, s(-3, 0))]));
    assert_eq!(solver.solve(&amb.phi(0)), None);
    assert_eq!(solver.solve(&GradedElement::zero()), Some(vec![]));
  }

  #[test]
  fn complex_rank() {
    // rows (1, i) and (i, −1) are proportional over ℚ(i)
    let m = vec![vec![s(1, 0), s(0, 1)], vec![s(0, 1), s(-1, 0)]];
    assert_eq!(bareiss_rank(&m), 1);
    assert_eq!(naive_rank(&m), 1);
    assert_eq!(bareiss_rank(&dense(&[&[1, 2], &[3, 4]])), 2);
    assert_eq!(bareiss_rank(&[]), 0);
  }

  fn scalar() -> impl Strategy<Value = Scalar> {
    (-3i64..=3, -3i64..=3, 1i64..=3).prop_map(|(a, b, d)| Scalar::new(crate::scalar::rational(a, d), crate::scalar::rational(b, d)))
  }

  proptest! {
    #[test]
    fn bareiss_matches_naive(rows in 0usize..6, cols in 1usize..6, seed in prop::collection::vec(scalar(), 36)) {
      let m: Vec<Vec<Scalar>> = (0..rows).map(|r| (0..cols).map(|c| seed[r * 6 + c].clone()).collect()).collect();
      prop_assert_eq!(bareiss_rank(&m), naive_rank(&m));
    }

    #[test]
    fn rank_plus_nullity(rows in 0usize..6, cols in 1usize..6, seed in prop::collection::vec(scalar(), 36)) {
      let mut e = Echelon::new(cols);
      for r in 0..rows {
        let v: SparseVec = (0..cols).filter(|&c| !seed[r * 6 + c].is_zero()).map(|c| (c, seed[r * 6 + c].clone())).collect();
        e.insert(&v);
      }
      let kernel = e.nullspace();
      prop_assert_eq!(e.rank() + kernel.len(), cols);
      for r in 0..rows {
        for k in &kernel {
          let dot: Scalar = k.iter().map(|(c, x)| x * &seed[r * 6 + c]).sum();
          prop_assert!(dot.is_zero());
        }
      }
    }
  }
}
