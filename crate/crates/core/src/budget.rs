//! Node budgets for the exhaustive searches.
//!
//! Every solver entry point takes a [`Budget`]; when the search tree grows past
//! `max_nodes` the operation stops with [`Error::BudgetExhausted`] instead of
//! silently returning a wrong or partial answer. One budget covers one
//! operation invocation (a single coloring search, or the handful of pinned
//! queries inside a sender check); `search_senders` interprets its budget as a
//! total across the whole search so runs stay bounded.

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: u64,
}

impl Budget {
    pub fn nodes(max_nodes: u64) -> Self {
        Budget { max_nodes }
    }

    pub(crate) fn meter(&self) -> Meter {
        Meter {
            limit: self.max_nodes,
            used: 0,
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_nodes: 10_000_000,
        }
    }
}

/// Running node counter for one budgeted operation.
#[derive(Debug)]
pub(crate) struct Meter {
    limit: u64,
    used: u64,
}

impl Meter {
    pub(crate) fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::BudgetExhausted { nodes: self.used })
        } else {
            Ok(())
        }
    }

    pub(crate) fn used(&self) -> u64 {
        self.used
    }
}
