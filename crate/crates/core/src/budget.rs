use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const DEFAULT_MAX_STATES: usize = 24;
pub const DEFAULT_MAX_EXHAUSTIVE_STATES: usize = 18;
pub const DEFAULT_MAX_NODES: usize = 1 << 24;

/// Limits shared by every search in the crate.
///
/// `max_states` guards searches over the whole power set, `max_exhaustive_states`
/// guards analyses that enumerate every subset and run a search per subset,
/// and `max_nodes` caps the visited set of any single search.
#[derive(Clone, Debug)]
pub struct Budget {
    pub max_states: usize,
    pub max_exhaustive_states: usize,
    pub max_nodes: usize,
    pub deadline: Option<Instant>,
    pub cancel: Option<Arc<AtomicBool>>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_states: DEFAULT_MAX_STATES,
            max_exhaustive_states: DEFAULT_MAX_EXHAUSTIVE_STATES,
            max_nodes: DEFAULT_MAX_NODES,
            deadline: None,
            cancel: None,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct BudgetSummary {
    pub max_states: usize,
    pub max_exhaustive_states: usize,
    pub max_nodes: usize,
}

impl Budget {
    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.deadline = Some(Instant::now() + limit);
        self
    }

    pub fn with_cancel(mut self, flag: Arc<AtomicBool>) -> Self {
        self.cancel = Some(flag);
        self
    }

    pub fn summary(&self) -> BudgetSummary {
        BudgetSummary {
            max_states: self.max_states,
            max_exhaustive_states: self.max_exhaustive_states,
            max_nodes: self.max_nodes,
        }
    }

    pub fn check_states(&self, n: usize, what: &str) -> Result<()> {
        if n > self.max_states {
            return Err(Error::Budget(format!(
                "{what}: {n} states exceed the power-set limit of {}",
                self.max_states
            )));
        }
        Ok(())
    }

    pub fn check_exhaustive(&self, n: usize, what: &str) -> Result<()> {
        if n > self.max_exhaustive_states {
            return Err(Error::Budget(format!(
                "{what}: exhaustive enumeration over {n} states exceeds the limit of {}; \
                 use sampling mode for a lower bound",
                self.max_exhaustive_states
            )));
        }
        Ok(())
    }

    pub fn check_interrupt(&self) -> Result<()> {
        if let Some(flag) = &self.cancel {
            if flag.load(Ordering::Relaxed) {
                return Err(Error::Budget("cancelled".into()));
            }
        }
        if let Some(deadline) = self.deadline {
            if Instant::now() >= deadline {
                return Err(Error::Budget("time budget exhausted".into()));
            }
        }
        Ok(())
    }

    pub(crate) fn meter(&self, what: &'static str) -> Meter<'_> {
        Meter {
            budget: self,
            what,
            nodes: 0,
        }
    }
}

/// Per-search node counter.
pub(crate) struct Meter<'a> {
    budget: &'a Budget,
    what: &'static str,
    nodes: usize,
}

impl Meter<'_> {
    pub fn charge(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes {
            return Err(Error::Budget(format!(
                "{}: more than {} nodes visited",
                self.what, self.budget.max_nodes
            )));
        }
        if self.nodes.is_multiple_of(4096) {
            self.budget.check_interrupt()?;
        }
        Ok(())
    }
}
