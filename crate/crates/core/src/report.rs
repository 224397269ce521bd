//! Violation reports shared by every identity check.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
  /// The identity or condition that failed, e.g. `d_W^2 = 0`.
  pub rule: String,
  /// Where it failed: indices, monomial, basis vector.
  pub at: String,
  /// The nonzero residual, printed.
  pub residual: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
  pub name: String,
  /// Number of individual evaluations performed.
  pub checked: usize,
  pub violations: Vec<Violation>,
}

impl ValidationReport {
  pub fn new(name: impl Into<String>) -> Self { Self { name: name.into(), ..Self::default() } }

  pub fn passed(&self) -> bool { self.violations.is_empty() }

  pub fn push(&mut self, rule: impl Into<String>, at: impl Into<String>, residual: impl Into<String>) {
    self.violations.push(Violation { rule: rule.into(), at: at.into(), residual: residual.into() });
  }

  pub fn merge(&mut self, other: ValidationReport) {
    self.checked += other.checked;
    self.violations.extend(other.violations);
  }

  /// `CHECK <name> <pass|fail> <violations>`
  pub fn summary_line(&self) -> String {
    format!("CHECK {} {} {}", self.name, if self.passed() { "pass" } else { "fail" }, self.violations.len())
  }
}

impl fmt::Display for Violation {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "{} at {}: residual {}", self.rule, self.at, self.residual)
  }
}
