//! Node budget for the exponential searches.

use thiserror::Error;

/// Default cap on search nodes per decision.
pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000;

/// Environment variable overriding [`DEFAULT_NODE_BUDGET`].
pub const NODE_BUDGET_ENV: &str = "FORESTNET_NODE_BUDGET";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("search budget of {limit} nodes exhausted")]
pub struct ResourceExhausted {
    pub limit: u64,
}

/// Counts search nodes and fails once the cap is reached.
#[derive(Debug, Clone)]
pub struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Self { limit, used: 0 }
    }

    /// The default cap, or the value of `FORESTNET_NODE_BUDGET` when it parses.
    pub fn from_env() -> Self {
        let limit = std::env::var(NODE_BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_NODE_BUDGET);
        Self::new(limit)
    }

    pub fn unlimited() -> Self {
        Self::new(u64::MAX)
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn tick(&mut self) -> Result<(), ResourceExhausted> {
        if self.used >= self.limit {
            return Err(ResourceExhausted { limit: self.limit });
        }
        self.used += 1;
        Ok(())
    }
}

/// Same as [`Budget::from_env`].
impl Default for Budget {
    fn default() -> Self {
        Self::from_env()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tick_stops_at_limit() {
        let mut b = Budget::new(2);
        assert!(b.tick().is_ok());
        assert!(b.tick().is_ok());
        assert_eq!(b.tick(), Err(ResourceExhausted { limit: 2 }));
        assert_eq!(b.used(), 2);
    }
}
