//! Two-player division of divisible items with exact rational arithmetic.
//!
//! The crate implements the adjusted-winner procedure in two equivalent
//! formulations (the literal two-phase transfer process and the ordered
//! boundary form), certifiers for the fairness and efficiency properties an
//! allocation may satisfy, and strategic analysis of the procedure when the
//! players declare valuations that differ from their true ones: pure Nash
//! equilibrium enumeration for the discrete point-budget variant,
//! epsilon-equilibrium construction, informed tie-breaking, and welfare
//! degradation (price of anarchy) measurement.
//!
//! Every quantity is an exact rational. Tie detection and equitability are
//! exact comparisons; no floating point enters any decision.

pub mod allocation;
pub mod error;
pub mod fairness;
pub mod procedure;
pub mod rational;
pub mod strategy;
pub mod valuation;

pub use allocation::{Allocation, OrderedOutcome};
pub use error::Error;
pub use fairness::{
    fairness_report, is_envy_free, is_equitable, is_minimally_fractional, is_ordered,
    is_pareto_optimal, is_proportional, maxmin_allocation, maxmin_value,
    pareto_improving_exchange, social_welfare, ExchangeWitness, FairnessReport,
};
pub use procedure::{
    adjusted_winner, equitable_boundary, informed_tie_order, ratio_order,
    two_phase_adjusted_winner, Player, TieBreakRule,
};
pub use rational::{rat, Rational};
pub use strategy::{
    best_response, bob_target_value, construct_epsilon_nash, deviation_gaps,
    enumerate_pure_nash, enumerate_strategies, equilibrium_fairness_audit,
    improving_deviation_two_items, is_pure_nash, price_of_anarchy, strategy_count,
    AuditedEquilibrium, DeviationWitness, EpsilonNash, EquilibriumReport, FairnessViolation,
    Game, PoaOutcome, StrategyProfile, Variant,
};
pub use valuation::Valuation;
