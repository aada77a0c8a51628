//! Wall-clock budgets.

use std::time::{Duration, Instant};

use pathpower_core::{Budget, Error};

/// Fails with [`Error::BudgetExhausted`] once a wall-clock deadline passes.
/// The clock is read every 256 units so charging stays cheap.
#[derive(Debug, Clone, Copy)]
pub struct Deadline {
    end: Option<Instant>,
    since_check: u64,
}

impl Deadline {
    pub fn after(timeout: Duration) -> Self {
        Self { end: Instant::now().checked_add(timeout), since_check: 0 }
    }

    /// `None` means no deadline.
    pub fn from_millis(ms: Option<u64>) -> Self {
        match ms {
            Some(ms) => Self::after(Duration::from_millis(ms)),
            None => Self::unlimited(),
        }
    }

    pub fn unlimited() -> Self {
        Self { end: None, since_check: 0 }
    }

    pub fn expired(&self) -> bool {
        self.end.is_some_and(|end| Instant::now() >= end)
    }
}

impl Budget for Deadline {
    fn charge(&mut self, units: u64) -> Result<(), Error> {
        let Some(end) = self.end else {
            return Ok(());
        };
        self.since_check += units;
        if self.since_check >= 256 {
            self.since_check = 0;
            if Instant::now() >= end {
                return Err(Error::BudgetExhausted);
            }
        }
        Ok(())
    }
}
