use serde::Serialize;

/// Outcome of an exhaustive check. Failure is data: the first counterexample
/// is recorded rather than raised.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub pass: bool,
    pub checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        Self { name: name.into(), pass: true, checked: 0, counterexample: None }
    }

    /// Records one case; keeps only the first failure.
    pub fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.pass {
            self.pass = false;
            self.counterexample = Some(describe());
        }
    }

    pub fn merge(mut self, other: &CheckReport) -> Self {
        self.checked += other.checked;
        if self.pass && !other.pass {
            self.pass = false;
            self.counterexample = other.counterexample.clone();
        }
        self
    }
}
