//! Acceptance criteria 1–10, one PASS/FAIL line each.
//!
//! Criteria that cannot hold for the six-term δ are still evaluated at full
//! strength; the test asserts that exactly the documented set fails, so a
//! regression in either direction is caught.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use eqcoh::brst::{Brst, DeltaForm, DeltaMutation};
use eqcoh::cartan::{CartanModel, InvarianceMode, SignConvention};
use eqcoh::cohomology::{equivariant_cohomology, weil_cohomology, Model};
use eqcoh::gdga::{GdgaInstance, LinearActionSpec};
use eqcoh::lie::LieAlgebraSpec;
use eqcoh::report::ValidationReport;
use eqcoh::scalar::rational;
use eqcoh::weil::check_weil_identities;
use eqcoh::weilmodel::{BasicMode, TensorAlgebra};

/// The six-term δ disagrees with `ψ⁻¹Dψ` on su(2) acting on ℝ³, which breaks
/// δ² = 0, the commuting square and the classical limit there.
const KNOWN_FAILURES: [u32; 2] = [4, 9];

struct Outcome {
  id: u32,
  title: &'static str,
  passed: bool,
  details: String,
}

impl Outcome {
  fn new(id: u32, title: &'static str) -> Self { Self { id, title, passed: true, details: String::new() } }

  fn expect(&mut self, label: &str, ok: bool, note: impl std::fmt::Display) {
    self.passed &= ok;
    let _ = writeln!(self.details, "    {} {label}: {note}", if ok { "ok  " } else { "FAIL" });
  }

  fn report(&mut self, label: &str, r: &ValidationReport) {
    let first = r.violations.first().map(|v| format!(" first: {v}")).unwrap_or_default();
    self.expect(label, r.passed(), format!("{} evaluations, {} violations{first}", r.checked, r.violations.len()));
  }

  /// Informational line that does not affect the verdict.
  fn diag(&mut self, label: &str, r: &ValidationReport) {
    let _ = writeln!(self.details, "    diag {label}: {} ({} violations)", if r.passed() { "holds" } else { "fails" }, r.violations.len());
  }

  fn render(&self) -> String { format!("ACCEPT {} {} {}\n{}", self.id, if self.passed { "PASS" } else { "FAIL" }, self.title, self.details) }
}

/// {abelian(1), su2} × {point, rotation} × {f = 0, f = 1·id}. The rotation
/// module for su(2) is ℝ³ with the adjoint action.
fn matrix() -> Vec<(String, GdgaInstance)> {
  let mut out = Vec::new();
  for base in [LieAlgebraSpec::abelian(1), LieAlgebraSpec::su2()] {
    for f in [0, 1] {
      let lie = if f == 0 { base.clone() } else { base.clone().with_scaled_identity_twist(rational(f, 1)) };
      let action = if lie.dim() == 1 { LinearActionSpec::plane_rotation(6) } else { LinearActionSpec::adjoint(&lie, 6) };
      let rot_name = if lie.dim() == 1 { "R2-rotation" } else { "R3-adjoint" };
      out.push((format!("{}/point/f={f}", base.name()), GdgaInstance::point(&lie)));
      out.push((format!("{}/{rot_name}/f={f}", base.name()), GdgaInstance::polynomial_forms(&action, &lie).unwrap()));
    }
  }
  out
}

fn criterion_1() -> Outcome {
  let mut o = Outcome::new(1, "Weil identity suite, degree <= 6");
  for spec in [LieAlgebraSpec::abelian(1), LieAlgebraSpec::abelian(2), LieAlgebraSpec::su2(), LieAlgebraSpec::heisenberg3()] {
    o.report(spec.name(), &check_weil_identities(&spec, 6).unwrap());
  }
  o
}

fn criterion_2() -> Outcome {
  let mut o = Outcome::new(2, "H(W(g), d_W) = [1,0,0,0,0] in degrees 0-4 at truncation 6");
  for spec in [LieAlgebraSpec::abelian(1), LieAlgebraSpec::su2()] {
    let b = weil_cohomology(&spec, 6).unwrap().bettis();
    o.expect(spec.name(), b[..5] == [1, 0, 0, 0, 0], format!("{:?}", &b[..5]));
  }
  o
}

fn criterion_3() -> Outcome {
  let mut o = Outcome::new(3, "d_C^2 = -sum phi (L + i f L) on theta-free monomials <= 4");
  for (label, m) in matrix() {
    o.report(&label, &CartanModel::new(&m, 4, SignConvention::Minus).unwrap().d_c_squared_defect(4).unwrap());
  }
  o
}

fn criterion_4() -> Outcome {
  let mut o = Outcome::new(4, "delta^2 = 0 and psi delta = D psi on monomials <= 4, mutation caught");
  let mut mutation_caught = false;
  for (label, m) in matrix() {
    let b = Brst::new(&m, 4).unwrap();
    o.report(&format!("{label} delta^2"), &b.delta_squared_check(4).unwrap());
    let t1 = b.theorem1_check(4).unwrap();
    o.report(&format!("{label} square"), &t1.square);
    o.diag(&format!("{label} delta = psi^-1 D psi"), &t1.conjugation);
    o.diag(&format!("{label} reversed square delta psi = psi D"), &t1.reversed);
    let mutated = b.clone().with_mutation(DeltaMutation::DropHalfCTerm);
    mutation_caught |= !mutated.delta_squared_check(4).unwrap().passed() || !mutated.theorem1_check(4).unwrap().square.passed();
  }
  o.expect("negative control (half-c term dropped)", mutation_caught, "fails somewhere in the matrix");

  // The closed form of e^T D e^-T is the reading under which the identities hold.
  let su2 = LieAlgebraSpec::su2();
  let adjoint = GdgaInstance::polynomial_forms(&LinearActionSpec::adjoint(&su2, 6), &su2).unwrap();
  let closed = Brst::new(&adjoint, 4).unwrap().with_form(DeltaForm::ClosedForm);
  o.diag("su2/R3-adjoint/f=0 closed-form delta^2", &closed.delta_squared_check(4).unwrap());
  o.diag("su2/R3-adjoint/f=0 closed-form square", &closed.theorem1_check(4).unwrap().square);
  let broken = closed.with_mutation(DeltaMutation::DropHalfCTerm);
  o.diag("su2/R3-adjoint/f=0 closed-form with mutation, delta^2", &broken.delta_squared_check(4).unwrap());
  o
}

fn criterion_5() -> Outcome {
  let mut o = Outcome::new(5, "psi factor order and exponential form agree on monomials <= 5");
  for (label, m) in matrix() {
    let b = Brst::new(&m, 5).unwrap();
    let mut r = b.psi_forms_agree(5).unwrap();
    r.merge(b.psi_inverse_check(5).unwrap());
    o.report(&label, &r);
  }
  o
}

fn criterion_6() -> Outcome {
  let mut o = Outcome::new(6, "tensor identities <= 5, complexified Cartan formula, D preserves basic elements");
  for (label, m) in matrix() {
    let t = TensorAlgebra::new(&m, 5).unwrap();
    o.report(&format!("{label} identities"), &t.check_identities(5).unwrap());
    o.report(&format!("{label} complexified"), &t.check_complexified_cartan(5).unwrap());
    for mode in [BasicMode::AllPairs, BasicMode::TwistedPairs] {
      match t.check_basic_preserved(5, mode) {
        Ok(r) => o.report(&format!("{label} basic/{}", mode.tag()), &r),
        Err(e) => o.expect(&format!("{label} basic/{}", mode.tag()), false, e),
      }
    }
  }
  o
}

fn criterion_7() -> Outcome {
  let mut o = Outcome::new(7, "psi maps invariant Cartan vectors onto twisted-basic vectors, degrees 0-4");
  let circle = LieAlgebraSpec::abelian(1);
  let twisted = circle.clone().with_scaled_identity_twist(rational(1, 1));
  let setups = [
    ("abelian(1)/point/f=0", GdgaInstance::point(&circle)),
    ("su2/point/f=0", GdgaInstance::point(&LieAlgebraSpec::su2())),
    ("abelian(1)/R2-rotation/f=1", GdgaInstance::polynomial_forms(&LinearActionSpec::plane_rotation(6), &twisted).unwrap()),
  ];
  for (label, m) in setups {
    let b = Brst::new(&m, 4).unwrap();
    o.report(&format!("{label} images basic"), &b.theorem2_check(4, InvarianceMode::PerGenerator).unwrap());
    let rank = b.theorem3_check(4, InvarianceMode::PerGenerator).unwrap();
    let full = rank.rows.iter().all(|r| r.cartan == r.basic && r.rank == r.cartan);
    o.expect(&format!("{label} dims"), rank.passed() && full, &rank);
  }
  o
}

fn criterion_8() -> Outcome {
  let mut o = Outcome::new(8, "equivariant cohomology of a point for S1 and su2");
  let circle = GdgaInstance::point(&LieAlgebraSpec::abelian(1));
  for model in [Model::Cartan(InvarianceMode::PerGenerator), Model::WeilBasic(BasicMode::AllPairs), Model::WeilBasic(BasicMode::TwistedPairs)] {
    let b = equivariant_cohomology(&circle, 5, model, SignConvention::Minus).unwrap().bettis();
    o.expect(&format!("S1 {}", model.tag()), b == [1, 0, 1, 0, 1], format!("{b:?}"));
  }
  let su2 = GdgaInstance::point(&LieAlgebraSpec::su2());
  for model in [Model::Cartan(InvarianceMode::PerGenerator), Model::WeilBasic(BasicMode::AllPairs)] {
    let b = equivariant_cohomology(&su2, 6, model, SignConvention::Minus).unwrap().bettis();
    o.expect(&format!("su2 {}", model.tag()), b[..5] == [1, 0, 0, 0, 1], format!("{:?}", &b[..5]));
  }
  o
}

fn criterion_9() -> Outcome {
  let mut o = Outcome::new(9, "f = 0: d_C, delta, psi match the untwisted operators on monomials <= 4");
  for (label, m) in matrix().into_iter().filter(|(l, _)| l.ends_with("f=0")) {
    o.report(&label, &Brst::check_classical_limit(&m, 4).unwrap());
  }
  o
}

/// Everything except the two heaviest criteria, plus a reduced run of
/// criterion 4 at degree 3, regenerated and compared byte for byte.
fn criterion_10(first: &[String]) -> Outcome {
  let mut o = Outcome::new(10, "identical output on a second run");
  let again = [criterion_1(), criterion_2(), criterion_3(), criterion_5(), criterion_7(), criterion_8(), criterion_9()];
  for c in &again {
    let original = first.iter().find(|t| t.starts_with(&format!("ACCEPT {} ", c.id))).unwrap();
    o.expect(&format!("criterion {}", c.id), *original == c.render(), "byte-identical");
  }
  let su2 = LieAlgebraSpec::su2();
  let adjoint = GdgaInstance::polynomial_forms(&LinearActionSpec::adjoint(&su2, 6), &su2).unwrap();
  let run = || {
    let r = Brst::new(&adjoint, 3).unwrap().delta_squared_check(3).unwrap();
    r.violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("\n")
  };
  o.expect("su2/R3-adjoint delta^2 violation listing", run() == run(), "byte-identical");
  o
}

fn main() {
  let outcomes = vec![
    criterion_1(),
    criterion_2(),
    criterion_3(),
    criterion_4(),
    criterion_5(),
    criterion_6(),
    criterion_7(),
    criterion_8(),
    criterion_9(),
  ];
  let rendered: Vec<String> = outcomes.iter().map(Outcome::render).collect();
  let tenth = criterion_10(&rendered);
  let mut failed = BTreeSet::new();
  for o in outcomes.iter().chain(std::iter::once(&tenth)) {
    print!("{}", o.render());
    if !o.passed {
      failed.insert(o.id);
    }
  }
  let known: BTreeSet<u32> = KNOWN_FAILURES.into_iter().collect();
  println!("ACCEPT summary: {} of 10 pass; failing {:?} (documented {:?})", 10 - failed.len(), failed, known);
  if failed != known {
    eprintln!("acceptance outcome differs from the documented set");
    std::process::exit(1);
  }
}
