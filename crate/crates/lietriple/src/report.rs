//! Axiom check reports: per-axiom pass/fail with defect witnesses.

use crate::Q;

/// How many witnesses a checker collects per axiom.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum WitnessMode {
    /// Stop at the first failing basis tuple per axiom.
    #[default]
    First,
    /// Collect every failing basis tuple.
    All,
}

/// A failing basis tuple together with the nonzero defect it produces.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    /// Basis indices the axiom was instantiated at, in argument order.
    pub tuple: Vec<usize>,
    /// Value of (left side - right side) at that tuple.
    pub defect: Vec<Q>,
}

/// Outcome of a single labeled axiom.
#[derive(Clone, Debug, PartialEq)]
pub struct AxiomCheck {
    pub label: String,
    pub pass: bool,
    pub witnesses: Vec<Witness>,
}

/// Outcome of a full verification run. Failure is data, not an error.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn check(&self, label: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.label == label)
    }

    pub fn failed_labels(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.pass).map(|c| c.label.as_str()).collect()
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| !c.pass)
    }

    /// Merges another report in, prefixing its labels.
    pub fn absorb(&mut self, prefix: &str, other: AxiomReport) {
        for mut c in other.checks {
            c.label = format!("{prefix}:{}", c.label);
            self.checks.push(c);
        }
    }

    /// One-line summary such as `pass` or `fail [LY3, LY5]`.
    pub fn summary(&self) -> String {
        if self.all_pass() {
            "pass".to_owned()
        } else {
            format!("fail {:?}", self.failed_labels())
        }
    }
}

/// Incremental builder used by the checkers.
pub(crate) struct ReportBuilder {
    mode: WitnessMode,
    report: AxiomReport,
}

impl ReportBuilder {
    pub fn new(mode: WitnessMode) -> Self {
        ReportBuilder { mode, report: AxiomReport::default() }
    }

    /// Runs one axiom over an iterator of `(tuple, defect)` evaluations.
    /// A tuple is a witness when its defect is nonzero.
    pub fn axiom<I>(&mut self, label: &str, evaluations: I)
    where
        I: IntoIterator<Item = (Vec<usize>, Vec<Q>)>,
    {
        let mut witnesses = Vec::new();
        for (tuple, defect) in evaluations {
            if crate::exactla::vec_is_zero(&defect) {
                continue;
            }
            witnesses.push(Witness { tuple, defect });
            if self.mode == WitnessMode::First {
                break;
            }
        }
        self.report.checks.push(AxiomCheck {
            label: label.to_owned(),
            pass: witnesses.is_empty(),
            witnesses,
        });
    }

    /// Records a check that is true by construction (nothing to evaluate).
    pub fn structural(&mut self, label: &str) {
        self.report.checks.push(AxiomCheck {
            label: label.to_owned(),
            pass: true,
            witnesses: Vec::new(),
        });
    }

    pub fn push(&mut self, check: AxiomCheck) {
        self.report.checks.push(check);
    }

    pub fn absorb(&mut self, prefix: &str, other: AxiomReport) {
        self.report.absorb(prefix, other);
    }

    pub fn finish(self) -> AxiomReport {
        self.report
    }
}
