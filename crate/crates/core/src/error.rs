use thiserror::Error;

use crate::strategy::EquilibriumReport;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid valuation: {0}")]
    InvalidValuation(String),

    #[error("dimension mismatch: expected {expected} items, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("infeasible strategy space: {points} points cannot give every one of {items} items a positive count")]
    InfeasibleStrategySpace { items: usize, points: u64 },

    /// The profile-space scan ran out of budget. Equilibria confirmed before
    /// the budget was hit are carried along so callers can surface them as
    /// explicitly partial results.
    #[error("search budget exceeded: {evaluations} profile evaluations used (budget {budget}), {} equilibria confirmed so far", partial.len())]
    SearchBudgetExceeded {
        evaluations: u64,
        budget: u64,
        partial: Vec<EquilibriumReport>,
    },

    #[error("operation requires the discrete variant")]
    RequiresDiscrete,

    #[error("perturbation construction failed to converge")]
    ConstructionFailed,

    #[error("not applicable: {0}")]
    NotApplicable(String),
}
