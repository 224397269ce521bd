//! `eqcoh`: validate a configuration, run the identity checks, compute
//! equivariant cohomology, or apply a single operator to an element.

mod config;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use eqcoh::brst::{Brst, DeltaForm, DeltaMutation};
use eqcoh::cartan::{CartanModel, InvarianceMode, SignConvention};
use eqcoh::cohomology::{equivariant_cohomology, Model};
use eqcoh::error::Error;
use eqcoh::gdga::{check_gdga, GdgaInstance};
use eqcoh::lie::LieAlgebraSpec;
use eqcoh::report::ValidationReport;
use eqcoh::weil::{WeilAlgebra, WeilMutation};
use eqcoh::weilmodel::{BasicMode, TensorAlgebra};

use config::{BasicTag, InvarianceTag, ModuleTag, RunConfig, SignTag};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
  #[error("{0}")]
  Usage(String),
  #[error(transparent)]
  Core(#[from] Error),
}

impl CliError {
  fn exit_code(&self) -> u8 {
    match self {
      CliError::Core(Error::Structural(_)) => 1,
      _ => 2,
    }
  }
}

#[derive(Parser, Debug)]
#[command(name = "eqcoh", version, about = "Exact checks for twisted Cartan and Weil models")]
struct Cli {
  #[arg(long, global = true)]
  config: Option<PathBuf>,
  /// Truncation degree; overrides the config.
  #[arg(long, global = true)]
  degree: Option<u32>,
  #[arg(long, global = true, value_enum, default_value_t = ModelArg::Cartan)]
  model: ModelArg,
  #[arg(long, global = true)]
  invariance: Option<String>,
  #[arg(long, global = true)]
  basic: Option<String>,
  #[arg(long, global = true)]
  sign: Option<String>,
  #[arg(long, global = true)]
  tsv: bool,
  #[arg(long, global = true, value_enum, default_value_t = DeltaArg::Verbatim)]
  delta: DeltaArg,
  #[arg(long, global = true, hide = true, value_enum)]
  mutate: Vec<MutationArg>,
  #[command(subcommand)]
  command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
  /// Structure constants, module calculus and Weil identities.
  Validate,
  /// Run one named check, or all of them.
  Check {
    #[arg(value_enum)]
    which: CheckName,
  },
  /// Betti table of the chosen model.
  Cohomology,
  /// Apply an operator to an element written in the printing grammar.
  Apply {
    #[arg(value_enum)]
    map: MapArg,
    expr: String,
  },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModelArg {
  Cartan,
  Weil,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DeltaArg {
  Verbatim,
  Closed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MutationArg {
  /// Drop the `½ c θθ ι̃` term of δ.
  DeltaHalfC,
  /// Drop `φ` from `d_W θ`.
  WeilPhi,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CheckName {
  Lemma3,
  Lemma4,
  Lemma5,
  Lemma6,
  Lemma7,
  Lemma8,
  Thm1,
  Thm2,
  Thm3,
  All,
}

impl CheckName {
  const EACH: [CheckName; 9] = [
    CheckName::Lemma3,
    CheckName::Lemma4,
    CheckName::Lemma5,
    CheckName::Lemma6,
    CheckName::Lemma7,
    CheckName::Lemma8,
    CheckName::Thm1,
    CheckName::Thm2,
    CheckName::Thm3,
  ];

  fn name(self) -> &'static str {
    match self {
      CheckName::Lemma3 => "lemma3",
      CheckName::Lemma4 => "lemma4",
      CheckName::Lemma5 => "lemma5",
      CheckName::Lemma6 => "lemma6",
      CheckName::Lemma7 => "lemma7",
      CheckName::Lemma8 => "lemma8",
      CheckName::Thm1 => "thm1",
      CheckName::Thm2 => "thm2",
      CheckName::Thm3 => "thm3",
      CheckName::All => "all",
    }
  }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MapArg {
  Psi,
  PsiInv,
  #[value(name = "d_C")]
  DC,
  Delta,
  #[value(name = "D")]
  D,
}

/// Violations printed per failing report; the count on the CHECK line is complete.
const SHOWN_VIOLATIONS: usize = 5;

/// Everything a command needs, resolved from the config and the flags.
struct Setup {
  lie: LieAlgebraSpec,
  config: RunConfig,
  degree: u32,
  sign: SignConvention,
  invariance: InvarianceMode,
  basic: BasicMode,
  delta_form: DeltaForm,
  delta_mutation: DeltaMutation,
  weil_mutation: WeilMutation,
}

impl Setup {
  fn from_cli(cli: &Cli) -> Result<Self, CliError> {
    let path = cli.config.as_ref().ok_or_else(|| CliError::Usage("--config <path> is required".into()))?;
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let mut config = RunConfig::parse(&text)?;
    if let Some(s) = &cli.sign {
      config.sign_convention = SignTag::parse(s)?;
    }
    if let Some(s) = &cli.invariance {
      config.invariance = InvarianceTag::parse(s)?;
    }
    if let Some(s) = &cli.basic {
      config.basic = BasicTag::parse(s)?;
    }
    if let Some(d) = cli.degree {
      if d == 0 {
        return Err(CliError::Usage("--degree must be at least 1".into()));
      }
      config.truncation = d;
    }
    let lie = config.lie()?;
    Ok(Self {
      lie,
      degree: config.truncation,
      sign: config.sign_convention.into(),
      invariance: config.invariance.into(),
      basic: config.basic.into(),
      config,
      delta_form: match cli.delta {
        DeltaArg::Verbatim => DeltaForm::Verbatim,
        DeltaArg::Closed => DeltaForm::ClosedForm,
      },
      delta_mutation: if cli.mutate.contains(&MutationArg::DeltaHalfC) { DeltaMutation::DropHalfCTerm } else { DeltaMutation::None },
      weil_mutation: if cli.mutate.contains(&MutationArg::WeilPhi) { WeilMutation::DropPhiInDTheta } else { WeilMutation::None },
    })
  }

  fn module(&self) -> Result<GdgaInstance, CliError> {
    if self.config.module.kind == ModuleTag::Weil {
      return Ok(GdgaInstance::weil_as_module_for(&self.lie, self.weil_mutation));
    }
    self.config.module(&self.lie, true)
  }

  fn brst(&self, module: &GdgaInstance, truncation: u32) -> Result<Brst, CliError> {
    Ok(Brst::new(module, truncation)?.with_form(self.delta_form).with_mutation(self.delta_mutation))
  }
}

/// Output accumulated by a command, plus whether every check passed.
#[derive(Default)]
struct Outcome {
  text: String,
  passed: bool,
}

impl Outcome {
  fn passing() -> Self { Self { text: String::new(), passed: true } }

  fn report(&mut self, report: &ValidationReport) {
    let _ = writeln!(self.text, "{}", report.summary_line());
    for v in report.violations.iter().take(SHOWN_VIOLATIONS) {
      let _ = writeln!(self.text, "  {v}");
    }
    if report.violations.len() > SHOWN_VIOLATIONS {
      let _ = writeln!(self.text, "  ... {} more", report.violations.len() - SHOWN_VIOLATIONS);
    }
    self.passed &= report.passed();
  }

  /// A check that could not finish because an image left its subspace.
  fn structural(&mut self, name: &str, message: &str) {
    let _ = writeln!(self.text, "CHECK {name} fail 1\n  {message}");
    self.passed = false;
  }

  fn line(&mut self, line: impl AsRef<str>) {
    self.text.push_str(line.as_ref());
    self.text.push('\n');
  }
}

fn renamed(mut report: ValidationReport, name: &str) -> ValidationReport {
  report.name = name.into();
  report
}

fn cmd_validate(setup: &Setup) -> Result<Outcome, CliError> {
  let mut out = Outcome::passing();
  out.report(&setup.lie.validate());
  if setup.config.module.kind == ModuleTag::PolynomialForms {
    let action = setup.config.action(&setup.lie)?;
    out.report(&renamed(action.homomorphism_report(&setup.lie), "rep"));
  }
  let n = setup.degree;
  let module = match setup.config.module.kind {
    ModuleTag::PolynomialForms => setup.config.module(&setup.lie, false)?,
    _ => setup.module()?,
  };
  match check_gdga(&module, n) {
    Ok(r) => out.report(&renamed(r, "gdga")),
    Err(e) => out.structural("gdga", &e.to_string()),
  }
  // A broken bracket makes the Weil constructor refuse, which is itself the failure.
  match WeilAlgebra::with_mutation(&setup.lie, n + 2, setup.weil_mutation).and_then(|w| w.check_identities(n)) {
    Ok(r) => out.report(&renamed(r, "weil")),
    Err(e) => out.structural("weil", &e.to_string()),
  }
  Ok(out)
}

fn run_check(setup: &Setup, module: &GdgaInstance, which: CheckName, out: &mut Outcome) -> Result<(), CliError> {
  let n = setup.degree;
  let name = which.name();
  let result: Result<(), Error> = (|| {
    match which {
      CheckName::Lemma3 => {
        let c = CartanModel::new(module, n, setup.sign)?;
        let mut r = c.d_c_squared_defect(n)?;
        r.merge(c.check_square_zero_on_invariants(n, setup.invariance)?);
        out.report(&renamed(r, name));
      },
      CheckName::Lemma4 => out.report(&setup.brst(module, n).map_err(core)?.delta_squared_check(n)?),
      CheckName::Lemma5 => {
        let b = setup.brst(module, n).map_err(core)?;
        let mut r = b.psi_forms_agree(n)?;
        r.merge(b.psi_inverse_check(n)?);
        out.report(&r);
      },
      CheckName::Lemma6 => out.report(&renamed(TensorAlgebra::new(module, n)?.check_identities(n)?, name)),
      CheckName::Lemma7 => out.report(&renamed(TensorAlgebra::new(module, n)?.check_complexified_cartan(n)?, name)),
      CheckName::Lemma8 => out.report(&renamed(TensorAlgebra::new(module, n)?.check_basic_preserved(n, setup.basic)?, name)),
      CheckName::Thm1 => {
        let t = setup.brst(module, n).map_err(core)?.theorem1_check(n)?;
        let mut r = t.square.clone();
        r.merge(t.conjugation.clone());
        out.report(&r);
        out.line(format!(
          "DIAG thm1-reversed {} {}",
          if t.reversed.passed() { "pass" } else { "fail" },
          t.reversed.violations.len()
        ));
      },
      CheckName::Thm2 => out.report(&setup.brst(module, n).map_err(core)?.theorem2_check(n, setup.invariance)?),
      CheckName::Thm3 => {
        let r = setup.brst(module, n).map_err(core)?.theorem3_check(n, setup.invariance)?;
        out.line(format!("dims {r}"));
        out.report(&r.report);
      },
      CheckName::All => unreachable!("expanded by the caller"),
    }
    Ok(())
  })();
  match result {
    Ok(()) => Ok(()),
    Err(Error::Structural(msg)) => {
      out.structural(name, &msg);
      Ok(())
    },
    Err(e) => Err(e.into()),
  }
}

fn core(e: CliError) -> Error {
  match e {
    CliError::Core(e) => e,
    CliError::Usage(msg) => Error::Invalid(msg),
  }
}

fn cmd_check(setup: &Setup, which: CheckName) -> Result<Outcome, CliError> {
  let module = setup.module()?;
  let mut out = Outcome::passing();
  let names: Vec<CheckName> = if which == CheckName::All { CheckName::EACH.to_vec() } else { vec![which] };
  for name in names {
    run_check(setup, &module, name, &mut out)?;
  }
  Ok(out)
}

fn cmd_cohomology(setup: &Setup, model: ModelArg, tsv: bool) -> Result<Outcome, CliError> {
  let module = setup.module()?;
  let model = match model {
    ModelArg::Cartan => Model::Cartan(setup.invariance),
    ModelArg::Weil => Model::WeilBasic(setup.basic),
  };
  let table = equivariant_cohomology(&module, setup.degree, model, setup.sign)?;
  let mut out = Outcome::passing();
  if tsv {
    out.text = table.to_tsv();
  } else {
    out.line(format!("# model {} on {}, degrees 0..{} (top degree {} excluded)", model.tag(), setup.lie.name(), setup.degree.saturating_sub(1), setup.degree));
    for r in &table.rows {
      out.line(format!("H^{} = {}  (dim {}, ker {}, im {})", r.degree, r.betti, r.dim, r.ker, r.im));
    }
  }
  Ok(out)
}

fn cmd_apply(setup: &Setup, map: MapArg, expr: &str) -> Result<Outcome, CliError> {
  let module = setup.module()?;
  let b = setup.brst(&module, setup.degree)?;
  let amb = b.tensor().ambient();
  let x = amb.parse(expr)?;
  let image = match map {
    MapArg::Psi => b.psi().apply(amb, &x),
    MapArg::PsiInv => b.psi_inv().apply(amb, &x),
    MapArg::Delta => b.delta().apply(amb, &x),
    MapArg::D => b.tensor().d_total().apply(amb, &x),
    MapArg::DC => CartanModel::from_tensor(b.tensor().clone(), setup.sign).d_c(&x)?,
  };
  let mut out = Outcome::passing();
  out.line(amb.display(&image).to_string());
  Ok(out)
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
  let setup = Setup::from_cli(cli)?;
  match &cli.command {
    Command::Validate => cmd_validate(&setup),
    Command::Check { which } => cmd_check(&setup, *which),
    Command::Cohomology => cmd_cohomology(&setup, cli.model, cli.tsv),
    Command::Apply { map, expr } => cmd_apply(&setup, *map, expr),
  }
}

fn main() -> ExitCode {
  let cli = Cli::parse();
  match run(&cli) {
    Ok(out) => {
      print!("{}", out.text);
      ExitCode::from(if out.passed { 0 } else { 1 })
    },
    Err(e) => {
      eprintln!("error: {e}");
      ExitCode::from(e.exit_code())
    },
  }
}
