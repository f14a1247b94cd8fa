//! Pass/fail reporting for the verification suites.

use std::io::Write;
use std::time::Duration;

use crate::Result;

/// One named residual compared against its tolerance.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub residual: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub note: Option<String>,
}

impl Check {
    pub fn new(name: &str, residual: f64, tolerance: f64) -> Self {
        Self {
            name: name.to_string(),
            residual,
            tolerance,
            passed: residual.is_finite() && residual < tolerance,
            note: None,
        }
    }

    pub fn with_note(mut self, note: &str) -> Self {
        self.note = Some(note.to_string());
        self
    }

    /// Informational line: reported but never gates the overall status.
    pub fn info(name: &str, residual: f64, note: &str) -> Self {
        Self {
            name: name.to_string(),
            residual,
            tolerance: f64::INFINITY,
            passed: true,
            note: Some(note.to_string()),
        }
    }
}

/// Aggregate of checks for one command run.
#[derive(Debug, Clone)]
pub struct Report {
    pub command: String,
    pub dim: usize,
    pub checks: Vec<Check>,
    pub elapsed: Option<Duration>,
}

impl Report {
    pub fn new(command: &str, dim: usize) -> Self {
        Self {
            command: command.to_string(),
            dim,
            checks: Vec::new(),
            elapsed: None,
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = Check>) {
        self.checks.extend(checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed).count()
    }

    pub fn write_to(&self, out: &mut dyn Write) -> Result<()> {
        writeln!(out, "{} d={}", self.command, self.dim)?;
        for check in &self.checks {
            let status = if check.tolerance.is_infinite() {
                "INFO"
            } else if check.passed {
                "PASS"
            } else {
                "FAIL"
            };
            let mut line = format!(
                "[{status}] {:<28} residual={:.3e}",
                check.name, check.residual
            );
            if check.tolerance.is_finite() {
                line.push_str(&format!("  tol={:.1e}", check.tolerance));
            }
            if let Some(note) = &check.note {
                line.push_str(&format!("  ({note})"));
            }
            writeln!(out, "{line}")?;
        }
        let gated = self
            .checks
            .iter()
            .filter(|c| c.tolerance.is_finite())
            .count();
        writeln!(
            out,
            "{}: {} of {gated} checks passed",
            if self.passed() { "OK" } else { "FAILED" },
            gated - self.failures(),
        )?;
        if let Some(elapsed) = self.elapsed {
            writeln!(out, "# elapsed {:.3} s", elapsed.as_secs_f64())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_pass_fail() {
        assert!(Check::new("a", 1e-13, 1e-12).passed);
        assert!(!Check::new("b", 1e-11, 1e-12).passed);
        assert!(!Check::new("c", f64::NAN, 1e-12).passed);
    }

    #[test]
    fn report_status_is_conjunction() {
        let mut r = Report::new("test", 3);
        r.push(Check::new("a", 0.0, 1e-12));
        assert!(r.passed());
        r.push(Check::new("b", 1.0, 1e-12));
        assert!(!r.passed());
        assert_eq!(r.failures(), 1);
        // info lines never gate
        let mut r2 = Report::new("test", 3);
        r2.push(Check::info("scan", -0.5, "reported only"));
        assert!(r2.passed());
    }
}
