//! Work budgets for exhaustive searches.
//!
//! Searches charge one unit per visited node. Running out is reported as
//! [`Error::BudgetExhausted`], never as a verdict.

use crate::Error;

pub trait Budget {
    fn charge(&mut self, units: u64) -> Result<(), Error>;
}

impl<B: Budget + ?Sized> Budget for &mut B {
    fn charge(&mut self, units: u64) -> Result<(), Error> {
        (**self).charge(units)
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Unlimited;

impl Budget for Unlimited {
    #[inline]
    fn charge(&mut self, _units: u64) -> Result<(), Error> {
        Ok(())
    }
}

/// Deterministic budget counting search nodes.
#[derive(Debug, Clone, Copy)]
pub struct StepBudget {
    remaining: u64,
}

impl StepBudget {
    pub fn new(steps: u64) -> Self {
        Self { remaining: steps }
    }

    pub fn remaining(&self) -> u64 {
        self.remaining
    }
}

impl Budget for StepBudget {
    fn charge(&mut self, units: u64) -> Result<(), Error> {
        match self.remaining.checked_sub(units) {
            Some(r) => {
                self.remaining = r;
                Ok(())
            }
            None => {
                self.remaining = 0;
                Err(Error::BudgetExhausted)
            }
        }
    }
}
