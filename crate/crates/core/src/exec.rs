//! Execution policy shared by the search entry points: budget caps and the
//! sequential/parallel switch.
//!
//! With `Parallelism::Rayon` (available under the `parallel` feature),
//! independent subtrees run on the ambient rayon pool, and their results are
//! merged in task order with exactly the same short-circuit rule a sequential
//! run applies. Values, node counts, and witnesses are therefore identical
//! across worker counts; only wall time changes.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parallelism {
    Sequential,
    #[cfg(feature = "parallel")]
    Rayon,
}

impl Default for Parallelism {
    fn default() -> Self {
        #[cfg(feature = "parallel")]
        {
            Parallelism::Rayon
        }
        #[cfg(not(feature = "parallel"))]
        {
            Parallelism::Sequential
        }
    }
}

impl Parallelism {
    pub fn is_parallel(&self) -> bool {
        !matches!(self, Parallelism::Sequential)
    }
}

/// Node-count and wall-clock caps. Exceeding either degrades a result to
/// bounds (never to a wrong value). Node caps are deterministic; wall-clock
/// caps are best-effort and off by default.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_nodes: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_wall_ms: Option<u64>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_nodes: Some(50_000_000),
            max_wall_ms: None,
        }
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget {
            max_nodes: None,
            max_wall_ms: None,
        }
    }

    pub fn with_nodes(max_nodes: u64) -> Self {
        Budget {
            max_nodes: Some(max_nodes),
            max_wall_ms: None,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ExecConfig {
    pub parallelism: Parallelism,
    pub budget: Budget,
}

impl ExecConfig {
    pub fn sequential() -> Self {
        ExecConfig {
            parallelism: Parallelism::Sequential,
            budget: Budget::default(),
        }
    }
}

/// Evaluates both closures, in parallel when requested, returning results in
/// argument order. Merging stays the caller's job so sequential-semantics
/// short-circuits remain explicit there.
pub fn join<A, B, RA, RB>(parallel: bool, a: A, b: B) -> (RA, RB)
where
    A: FnOnce() -> RA + Send,
    B: FnOnce() -> RB + Send,
    RA: Send,
    RB: Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        return rayon::join(a, b);
    }
    let _ = parallel;
    (a(), b())
}
