//! JSON run configuration. Every scalar is a rational string such as `"2/3"`;
//! floats are rejected.

use eqcoh::cartan::{InvarianceMode, SignConvention};
use eqcoh::gdga::{GdgaInstance, LinearActionSpec};
use eqcoh::lie::LieAlgebraSpec;
use eqcoh::scalar::{parse_rational, Rational};
use eqcoh::weilmodel::BasicMode;
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
  pub lie_algebra: LieBlock,
  #[serde(default)]
  pub module: ModuleBlock,
  #[serde(default = "default_truncation")]
  pub truncation: u32,
  #[serde(default)]
  pub sign_convention: SignTag,
  #[serde(default)]
  pub invariance: InvarianceTag,
  #[serde(default)]
  pub basic: BasicTag,
}

fn default_truncation() -> u32 { 4 }

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LieBlock {
  #[serde(default, skip_serializing_if = "Option::is_none")]
  pub preset: Option<String>,
  #[serde(default, skip_serializing_if = "Option::is_none")]
  pub dim: Option<usize>,
  /// `[i, j, k, "c"]`, one-based, meaning `c^i_{jk} = c`.
  #[serde(default, skip_serializing_if = "Vec::is_empty")]
  pub constants: Vec<(usize, usize, usize, String)>,
  /// `twist[i][j] = f_i^j`.
  #[serde(default, skip_serializing_if = "Option::is_none")]
  pub twist: Option<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleBlock {
  #[serde(rename = "type")]
  pub kind: ModuleTag,
  #[serde(default, skip_serializing_if = "Option::is_none")]
  pub ambient_dim: Option<usize>,
  #[serde(default, skip_serializing_if = "Option::is_none")]
  pub rep: Option<RepBlock>,
  #[serde(default, skip_serializing_if = "Option::is_none")]
  pub poly_cap: Option<u32>,
}

impl Default for ModuleBlock {
  fn default() -> Self { Self { kind: ModuleTag::Point, ambient_dim: None, rep: None, poly_cap: None } }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModuleTag {
  Point,
  PolynomialForms,
  Weil,
}

/// A named action (`rotation`, `rotation-pair`, `adjoint`) or explicit matrices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RepBlock {
  Named(String),
  Matrices(Vec<Vec<Vec<String>>>),
}

macro_rules! tag_enum {
  ($name:ident { $($variant:ident => $text:literal $(| $alias:literal)*),+ $(,)? } default $default:ident) => {
    #[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
    pub enum $name {
      $(#[serde(rename = $text $(, alias = $alias)*)] $variant,)+
    }
    impl $name {
      pub fn parse(text: &str) -> Result<Self, CliError> {
        match text {
          $($text $(| $alias)* => Ok(Self::$variant),)+
          other => Err(CliError::Usage(format!("unknown {} `{other}`", stringify!($name)))),
        }
      }
    }
    impl $name {
      #[allow(dead_code)]
      fn default_variant() -> Self { Self::$default }
    }
  };
}

tag_enum!(SignTag { Minus => "minus", Plus => "plus" } default Minus);
tag_enum!(InvarianceTag { PerGenerator => "per_generator" | "per-generator", PaperLiteral => "paper_literal" | "paper" } default PerGenerator);
tag_enum!(BasicTag { AllPairs => "all_pairs" | "all-pairs", TwistedPairs => "twisted_pairs" | "twisted-pairs" } default AllPairs);

impl Default for SignTag {
  fn default() -> Self { Self::default_variant() }
}

impl Default for InvarianceTag {
  fn default() -> Self { Self::default_variant() }
}

impl Default for BasicTag {
  fn default() -> Self { Self::default_variant() }
}

impl From<SignTag> for SignConvention {
  fn from(t: SignTag) -> Self {
    match t {
      SignTag::Minus => SignConvention::Minus,
      SignTag::Plus => SignConvention::Plus,
    }
  }
}

impl From<InvarianceTag> for InvarianceMode {
  fn from(t: InvarianceTag) -> Self {
    match t {
      InvarianceTag::PerGenerator => InvarianceMode::PerGenerator,
      InvarianceTag::PaperLiteral => InvarianceMode::PaperLiteral,
    }
  }
}

impl From<BasicTag> for BasicMode {
  fn from(t: BasicTag) -> Self {
    match t {
      BasicTag::AllPairs => BasicMode::AllPairs,
      BasicTag::TwistedPairs => BasicMode::TwistedPairs,
    }
  }
}

fn rational(text: &str) -> Result<Rational, CliError> { parse_rational(text).map_err(CliError::from) }

fn matrix(rows: &[Vec<String>]) -> Result<Vec<Vec<Rational>>, CliError> {
  rows.iter().map(|row| row.iter().map(|x| rational(x)).collect()).collect()
}

impl RunConfig {
  pub fn parse(text: &str) -> Result<Self, CliError> {
    let config: RunConfig = serde_json::from_str(text).map_err(|e| CliError::Usage(format!("config: {e}")))?;
    if config.truncation == 0 {
      return Err(CliError::Usage("config: truncation must be at least 1".into()));
    }
    Ok(config)
  }

  #[cfg_attr(not(test), allow(dead_code))]
  pub fn to_json(&self) -> String { serde_json::to_string_pretty(self).expect("serializable") }

  pub fn lie(&self) -> Result<LieAlgebraSpec, CliError> {
    let block = &self.lie_algebra;
    let spec = match (&block.preset, block.dim) {
      (Some(name), None) if block.constants.is_empty() => LieAlgebraSpec::preset(name)?,
      (None, Some(dim)) => {
        let mut entries = Vec::new();
        for (i, j, k, c) in &block.constants {
          if *i == 0 || *j == 0 || *k == 0 {
            return Err(CliError::Usage("config: structure constant indices are one-based".into()));
          }
          entries.push((i - 1, j - 1, k - 1, rational(c)?));
        }
        LieAlgebraSpec::from_constants(dim, &entries)?
      },
      _ => return Err(CliError::Usage("config: lie_algebra needs either `preset` or `dim` with `constants`".into())),
    };
    match &block.twist {
      Some(t) => Ok(spec.with_twist(matrix(t)?)?),
      None => Ok(spec),
    }
  }

  /// The action block as a [`LinearActionSpec`], if the module is polynomial forms.
  pub fn action(&self, lie: &LieAlgebraSpec) -> Result<LinearActionSpec, CliError> {
    let block = &self.module;
    let cap = block.poly_cap.unwrap_or(6);
    let spec = match &block.rep {
      Some(RepBlock::Named(name)) => match name.as_str() {
        "rotation" => LinearActionSpec::plane_rotation(cap),
        "rotation-pair" | "rotation_pair" => LinearActionSpec::rotation_pair(cap),
        "adjoint" => LinearActionSpec::adjoint(lie, cap),
        other => return Err(CliError::Usage(format!("config: unknown representation `{other}`"))),
      },
      Some(RepBlock::Matrices(ms)) => {
        let rho = ms.iter().map(|m| matrix(m)).collect::<Result<Vec<_>, _>>()?;
        let ambient_dim = block.ambient_dim.or_else(|| rho.first().map(Vec::len)).unwrap_or(0);
        LinearActionSpec { ambient_dim, rho, poly_cap: cap }
      },
      None => return Err(CliError::Usage("config: polynomial_forms needs `rep`".into())),
    };
    if let Some(m) = block.ambient_dim {
      if m != spec.ambient_dim {
        return Err(CliError::Usage(format!("config: ambient_dim {m} does not match the representation ({})", spec.ambient_dim)));
      }
    }
    Ok(spec)
  }

  pub fn module(&self, lie: &LieAlgebraSpec, checked: bool) -> Result<GdgaInstance, CliError> {
    Ok(match self.module.kind {
      ModuleTag::Point => GdgaInstance::point(lie),
      ModuleTag::Weil => GdgaInstance::weil_as_module_for(lie, eqcoh::weil::WeilMutation::None),
      ModuleTag::PolynomialForms => {
        let action = self.action(lie)?;
        if checked {
          GdgaInstance::polynomial_forms(&action, lie)?
        } else {
          GdgaInstance::polynomial_forms_unchecked(&action, lie)?
        }
      },
    })
  }
}

#[cfg(test)]
mod tests {
  use super::*;

  const SAMPLE: &str = r#"{
    "lie_algebra": { "dim": 1, "constants": [], "twist": [["1/2"]] },
    "module": { "type": "polynomial_forms", "ambient_dim": 2, "rep": [[["0", "-1"], ["1", "0"]]], "poly_cap": 5 },
    "truncation": 3,
    "sign_convention": "plus",
    "invariance": "paper_literal",
    "basic": "twisted_pairs"
  }"#;

  #[test]
  fn round_trip() {
    let c = RunConfig::parse(SAMPLE).unwrap();
    let again = RunConfig::parse(&c.to_json()).unwrap();
    assert_eq!(c, again);
    assert_eq!(again.to_json(), c.to_json());
    let lie = c.lie().unwrap();
    assert_eq!(lie.f(0, 0), &eqcoh::scalar::rational(1, 2));
    assert_eq!(c.action(&lie).unwrap(), LinearActionSpec::plane_rotation(5));
  }

  #[test]
  fn rejects_floats_and_bad_blocks() {
    assert!(RunConfig::parse(r#"{"lie_algebra": {"dim": 1, "twist": [[0.5]]}}"#).is_err());
    let c = RunConfig::parse(r#"{"lie_algebra": {"dim": 1, "twist": [["0.5"]]}}"#).unwrap();
    assert!(c.lie().is_err());
    assert!(RunConfig::parse(r#"{"lie_algebra": {"preset": "su2"}, "truncation": 0}"#).is_err());
    assert!(RunConfig::parse(r#"{"lie_algebra": {"preset": "su2"}, "extra": 1}"#).is_err());
    let both = RunConfig::parse(r#"{"lie_algebra": {"preset": "su2", "dim": 3}}"#).unwrap();
    assert!(both.lie().is_err());
  }
}
