//! Outcomes of extensional checks over finite instances.

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum CheckOutcome {
    /// Every applicable instance satisfied the statement.
    Pass {
        instances: usize,
        #[serde(skip_serializing_if = "Option::is_none")]
        note: Option<String>,
    },
    Fail {
        witness: String,
    },
    Skipped {
        reason: String,
    },
}

impl CheckOutcome {
    pub fn skipped(reason: impl Into<String>) -> Self {
        CheckOutcome::Skipped { reason: reason.into() }
    }

    pub fn fail(witness: impl Into<String>) -> Self {
        CheckOutcome::Fail {
            witness: witness.into(),
        }
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, CheckOutcome::Pass { .. })
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, CheckOutcome::Fail { .. })
    }

    /// Short cell text: `pass(n)`, `FAIL`, `skip`.
    pub fn cell(&self) -> String {
        match self {
            CheckOutcome::Pass { instances, .. } => format!("pass({instances})"),
            CheckOutcome::Fail { .. } => "FAIL".into(),
            CheckOutcome::Skipped { .. } => "skip".into(),
        }
    }
}

/// Counts instances and keeps the first failure.
#[derive(Debug, Default)]
pub struct Tally {
    instances: usize,
    failure: Option<String>,
    notes: Vec<String>,
}

impl Tally {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records one instance; `witness` is only rendered on failure.
    pub fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(witness());
        }
    }

    pub fn failed(&self) -> bool {
        self.failure.is_some()
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn instances(&self) -> usize {
        self.instances
    }

    pub fn finish(self) -> CheckOutcome {
        match self.failure {
            Some(witness) => CheckOutcome::Fail { witness },
            None => CheckOutcome::Pass {
                instances: self.instances,
                note: if self.notes.is_empty() {
                    None
                } else {
                    Some(self.notes.join("; "))
                },
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_failure_is_kept() {
        let mut t = Tally::new();
        t.check(true, || unreachable!());
        t.check(false, || "a".into());
        t.check(false, || "b".into());
        assert_eq!(t.finish(), CheckOutcome::fail("a"));
    }

    #[test]
    fn json_shape() {
        let p = CheckOutcome::Pass {
            instances: 3,
            note: None,
        };
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"{"status":"pass","instances":3}"#);
        let s = CheckOutcome::skipped("cap");
        assert_eq!(
            serde_json::to_string(&s).unwrap(),
            r#"{"status":"skipped","reason":"cap"}"#
        );
    }
}
