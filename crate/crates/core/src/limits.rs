use crate::par::Exec;

/// Resource caps for the terminating-in-theory procedures, plus the
/// execution strategy for the data-parallel parts.
///
/// Exceeding a cap yields `Error::Inconclusive`, never a wrong answer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum reduction steps per standard-basis computation or normal form.
    pub max_steps: u64,
    /// Maximum truncation degree for Macaulay matrices and truncated series.
    pub max_degree: u32,
    /// Maximum `k` tried when checking `w^k ∈ I` for radical witnesses.
    pub max_radical_power: u32,
    pub exec: Exec,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_steps: 1_000_000,
            max_degree: 40,
            max_radical_power: 8,
            exec: Exec::default(),
        }
    }
}

impl Limits {
    pub fn with_max_steps(mut self, steps: u64) -> Self {
        self.max_steps = steps;
        self
    }

    pub fn with_exec(mut self, exec: Exec) -> Self {
        self.exec = exec;
        self
    }

    pub(crate) fn budget(&self, what: &'static str) -> Budget {
        Budget {
            left: self.max_steps,
            what,
        }
    }
}

/// Countdown of reduction steps.
pub(crate) struct Budget {
    left: u64,
    what: &'static str,
}

impl Budget {
    pub(crate) fn tick(&mut self) -> crate::error::Result<()> {
        if self.left == 0 {
            return Err(crate::error::Error::Inconclusive(format!(
                "step cap exceeded during {}",
                self.what
            )));
        }
        self.left -= 1;
        Ok(())
    }
}
