//! Randomized invariants across the public API.

use eqcoh::brst::Brst;
use eqcoh::cartan::{CartanModel, InvarianceMode, SignConvention};
use eqcoh::cohomology::{equivariant_cohomology, Model};
use eqcoh::gdga::{GdgaInstance, LinearActionSpec};
use eqcoh::graded::{Ambient, GradedElement};
use eqcoh::lie::{LieAlgebraSpec, LieVector};
use eqcoh::operator::Op;
use eqcoh::scalar::{rational, Rational, Scalar};
use eqcoh::weil::WeilAlgebra;
use eqcoh::weilmodel::{BasicMode, TensorAlgebra};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn ratio() -> impl Strategy<Value = Rational> { (-20i64..=20, 1i64..=9).prop_map(|(n, d)| rational(n, d)) }

fn scalar() -> impl Strategy<Value = Scalar> { (ratio(), ratio()).prop_map(|(re, im)| Scalar::new(re, im)) }

fn reduced(q: &Rational) -> bool { q.denom().is_positive() && q.numer().gcd(q.denom()).is_one() }

/// A homogeneous element of degree `d`: coefficient `coeffs[i % len]` on the i-th basis monomial.
fn element(amb: &Ambient, d: u32, coeffs: &[Scalar]) -> GradedElement {
  let mut x = GradedElement::zero();
  for (i, m) in amb.basis_of_degree(d).into_iter().enumerate() {
    x.add_term(m, coeffs[i % coeffs.len()].clone());
  }
  x
}

fn lie_vector(n: usize, coeffs: &[Scalar]) -> LieVector { LieVector(coeffs[..n].to_vec()) }

fn preset() -> impl Strategy<Value = LieAlgebraSpec> {
  prop_oneof![Just(LieAlgebraSpec::abelian(2)), Just(LieAlgebraSpec::su2()), Just(LieAlgebraSpec::heisenberg3())]
}

fn sign(deg: u32) -> Scalar { if deg % 2 == 0 { Scalar::one() } else { -Scalar::one() } }

proptest! {
  #![proptest_config(ProptestConfig::with_cases(64))]

  #[test]
  fn scalar_field_axioms(a in scalar(), b in scalar(), c in scalar()) {
    prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
    prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    prop_assert_eq!(&a + &b, &b + &a);
    prop_assert_eq!(&a * &b, &b * &a);
    prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    for x in [&a + &b, &a * &c, &a - &c] {
      prop_assert!(reduced(&x.re) && reduced(&x.im));
    }
    if !a.is_zero() {
      prop_assert_eq!(&a * &a.inv().unwrap(), Scalar::one());
    }
  }

  #[test]
  fn bracket_satisfies_jacobi(spec in preset(), c in prop::collection::vec(scalar(), 9)) {
    let (x, y, z) = (lie_vector(3, &c[0..3]), lie_vector(3, &c[3..6]), lie_vector(3, &c[6..9]));
    let spec = if spec.dim() == 3 { spec } else { LieAlgebraSpec::abelian(3) };
    let b = |u: &LieVector, v: &LieVector| spec.bracket(u, v).unwrap();
    let (p, q, r) = (b(&x, &b(&y, &z)), b(&y, &b(&z, &x)), b(&z, &b(&x, &y)));
    for k in 0..3 {
      prop_assert!((&(&p.0[k] + &q.0[k]) + &r.0[k]).is_zero());
    }
    prop_assert_eq!(b(&x, &y).0, b(&y, &x).0.iter().map(|v| -v).collect::<Vec<_>>());
  }

  #[test]
  fn twist_apply_is_linear(f in prop::collection::vec(ratio(), 9), c in prop::collection::vec(scalar(), 8)) {
    let twist = f.chunks(3).map(<[Rational]>::to_vec).collect();
    let spec = LieAlgebraSpec::su2().with_twist(twist).unwrap();
    let (x, y, a, b) = (lie_vector(3, &c[0..3]), lie_vector(3, &c[3..6]), &c[6], &c[7]);
    let combo = LieVector((0..3).map(|k| &(a * &x.0[k]) + &(b * &y.0[k])).collect());
    let (tx, ty) = (spec.twist_apply(&x).unwrap(), spec.twist_apply(&y).unwrap());
    let expected: Vec<Scalar> = (0..3).map(|k| &(a * &tx.0[k]) + &(b * &ty.0[k])).collect();
    prop_assert_eq!(spec.twist_apply(&combo).unwrap().0, expected);
  }

  /// Brute-force Jacobi over random sparse brackets on a 3-dimensional space.
  #[test]
  fn validate_matches_brute_force_jacobi(entries in prop::collection::vec((0usize..3, 0usize..3, 1usize..3, -1i64..=1), 0..5)) {
    let entries: Vec<(usize, usize, usize, Rational)> =
      entries.into_iter().map(|(i, j, dk, v)| (i, j, (j + dk).min(2), rational(v, 1))).filter(|e| e.1 < e.2).collect();
    let mut c = vec![vec![vec![Rational::zero(); 3]; 3]; 3];
    for (i, j, k, v) in &entries {
      c[*i][*j][*k] = v.clone();
      c[*i][*k][*j] = -v.clone();
    }
    let mut jacobi = true;
    for i in 0..3 {
      for j in 0..3 {
        for k in 0..3 {
          for m in 0..3 {
            let s: Rational = (0..3).map(|l| &c[l][j][k] * &c[i][m][l] + &c[l][k][m] * &c[i][j][l] + &c[l][m][j] * &c[i][k][l]).sum();
            jacobi &= s.is_zero();
          }
        }
      }
    }
    let spec = LieAlgebraSpec::from_constants(3, &entries).unwrap();
    prop_assert_eq!(spec.validate().passed(), jacobi);
  }

  #[test]
  fn product_is_graded_commutative_and_associative(
    degs in (0u32..3, 0u32..3, 0u32..3),
    c in prop::collection::vec(scalar(), 1..6),
  ) {
    let amb = Ambient::weil(3, 6).unwrap();
    let rot = c.iter().cloned().cycle().skip(1).take(c.len()).collect::<Vec<_>>();
    let (x, y, z) = (element(&amb, degs.0, &c), element(&amb, degs.1, &rot), element(&amb, degs.2, &c[..1]));
    prop_assert_eq!(amb.mul(&x, &y), amb.mul(&y, &x).scale(&sign(degs.0 * degs.1)));
    prop_assert_eq!(amb.mul(&amb.mul(&x, &y), &z), amb.mul(&x, &amb.mul(&y, &z)));
  }

  /// `D(xy) = D(x) y + (−1)^{|D||x|} x D(y)` for the Weil and module operators.
  #[test]
  fn derivations_obey_signed_leibniz(dx in 0u32..3, dy in 0u32..3, c in prop::collection::vec(scalar(), 1..5), k in 0usize..3) {
    let w = WeilAlgebra::new(&LieAlgebraSpec::su2(), 6).unwrap();
    let amb = w.ambient();
    let (x, y) = (element(amb, dx, &c), element(amb, dy, &c[c.len() - 1..]));
    for (op, odd) in [(w.d_op(), true), (w.i_op(k), true), (w.l_op(k), false)] {
      let lhs = op.apply(amb, &amb.mul(&x, &y));
      let s = if odd { sign(dx) } else { Scalar::one() };
      let rhs = amb.mul(&op.apply(amb, &x), &y).add(&amb.mul(&x, &op.apply(amb, &y)).scale(&s));
      prop_assert_eq!(lhs, rhs);
    }
  }

  #[test]
  fn polynomial_forms_d_squares_to_zero(deg in 0u32..4, c in prop::collection::vec(scalar(), 1..6)) {
    let lie = LieAlgebraSpec::abelian(1);
    let module = GdgaInstance::polynomial_forms(&LinearActionSpec::plane_rotation(6), &lie).unwrap();
    let t = TensorAlgebra::new(&module, 6).unwrap();
    let x = element(t.ambient(), deg, &c);
    let d = t.module_d();
    prop_assert!(d.apply(t.ambient(), &d.apply(t.ambient(), &x)).is_zero());
  }

  #[test]
  fn evaluation_intertwines_for_random_points(c in prop::collection::vec(scalar(), 3), g in -2i64..=2) {
    let lie = LieAlgebraSpec::abelian(1).with_scaled_identity_twist(rational(g, 1));
    let module = GdgaInstance::polynomial_forms(&LinearActionSpec::plane_rotation(6), &lie).unwrap();
    let c_model = CartanModel::new(&module, 4, SignConvention::Minus).unwrap();
    let at = LieVector(vec![Scalar::real(c[0].re.clone())]);
    prop_assert!(c_model.check_evaluation(3, &at).unwrap().passed());
    let su2 = GdgaInstance::polynomial_forms(&LinearActionSpec::adjoint(&LieAlgebraSpec::su2(), 4), &LieAlgebraSpec::su2()).unwrap();
    let real: Vec<Scalar> = c.iter().map(|s| Scalar::real(s.re.clone())).collect();
    let c_su2 = CartanModel::new(&su2, 3, SignConvention::Minus).unwrap();
    prop_assert!(c_su2.check_evaluation(2, &LieVector(real)).unwrap().passed());
  }
}

#[test]
fn leibniz_on_tensor_algebra_operators() {
  let module = GdgaInstance::polynomial_forms(&LinearActionSpec::plane_rotation(6), &LieAlgebraSpec::abelian(1)).unwrap();
  let t = TensorAlgebra::new(&module, 5).unwrap();
  let amb = t.ambient();
  let ops: [(Op, bool); 4] = [(t.d_total(), true), (t.i_tilde(0), true), (t.l_tilde(0), false), (t.module_iota(0), true)];
  for a in amb.basis_up_to(2) {
    for b in amb.basis_up_to(2) {
      let (x, y) = (GradedElement::from_monomial(a.clone()), GradedElement::from_monomial(b));
      for (op, odd) in &ops {
        let s = if *odd { sign(amb.degree(&a)) } else { Scalar::one() };
        let lhs = op.apply(amb, &amb.mul(&x, &y));
        let rhs = amb.mul(&op.apply(amb, &x), &y).add(&amb.mul(&x, &op.apply(amb, &y)).scale(&s));
        assert_eq!(lhs, rhs);
      }
    }
  }
}

/// Wherever ψ identifies the two subspaces, the two complexes have the same Betti numbers.
#[test]
fn cartan_and_weil_betti_agree_when_psi_identifies_them() {
  let circle = LieAlgebraSpec::abelian(1);
  let setups = [
    GdgaInstance::point(&circle),
    GdgaInstance::point(&circle.clone().with_scaled_identity_twist(rational(1, 1))),
    GdgaInstance::point(&LieAlgebraSpec::su2()),
    GdgaInstance::polynomial_forms(&LinearActionSpec::plane_rotation(6), &circle).unwrap(),
    GdgaInstance::polynomial_forms(&LinearActionSpec::plane_rotation(6), &circle.clone().with_scaled_identity_twist(rational(1, 1))).unwrap(),
  ];
  let top = 4;
  for module in &setups {
    let rank = Brst::new(module, top).unwrap().theorem3_check(top, InvarianceMode::PerGenerator).unwrap();
    assert!(rank.passed(), "{}", rank.report.summary_line());
    let cartan = equivariant_cohomology(module, top, Model::Cartan(InvarianceMode::PerGenerator), SignConvention::Minus).unwrap();
    let weil = equivariant_cohomology(module, top, Model::WeilBasic(BasicMode::TwistedPairs), SignConvention::Minus).unwrap();
    assert_eq!(cartan.bettis(), weil.bettis());
  }
}
