//! Strategic play of the procedure: declared valuations need not match the
//! true ones, and the input becomes a strategy profile.
//!
//! In the discrete variant both players distribute an integer point budget,
//! so the strategy space is finite and pure Nash equilibria can be decided by
//! exhaustive scan. The continuous variant is certified instead of decided:
//! deviation gaps are measured against configurable discrete grids.

mod epsilon;
mod two_items;

pub use epsilon::{construct_epsilon_nash, EpsilonNash};
pub use two_items::improving_deviation_two_items;

use std::fmt;

use num::{Signed, Zero};

use crate::allocation::Allocation;
use crate::error::Error;
use crate::fairness::{fairness_report, FairnessReport};
use crate::procedure::{adjusted_winner, Player, TieBreakRule};
use crate::rational::Rational;
use crate::valuation::Valuation;

/// Discrete games hand each player `points` indivisible points to distribute;
/// continuous games allow any positive rational declarations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Variant {
    Discrete { points: u64 },
    Continuous,
}

/// A game: the players' true valuations, the strategy-space variant, and the
/// tie-breaking rule the procedure runs with.
#[derive(Clone, Debug, PartialEq)]
pub struct Game {
    truth_alice: Valuation,
    truth_bob: Valuation,
    variant: Variant,
    rule: TieBreakRule,
}

impl Game {
    /// An informed rule must carry exactly the designated player's true
    /// valuation; anything else is rejected. The refinement truth for the
    /// other player is filled in from the game when absent, so tie
    /// resolutions the designated player is indifferent about fall in the
    /// other player's favour.
    pub fn new(
        truth_alice: Valuation,
        truth_bob: Valuation,
        variant: Variant,
        mut rule: TieBreakRule,
    ) -> Result<Self, Error> {
        if truth_alice.len() != truth_bob.len() {
            return Err(Error::DimensionMismatch {
                expected: truth_alice.len(),
                found: truth_bob.len(),
            });
        }
        if let TieBreakRule::Informed {
            player,
            truth,
            other_truth,
        } = &mut rule
        {
            let by_player = |p: Player| match p {
                Player::Alice => &truth_alice,
                Player::Bob => &truth_bob,
            };
            if truth != by_player(*player) {
                return Err(Error::InvalidValuation(
                    "informed tie-breaking must carry the designated player's true valuation"
                        .into(),
                ));
            }
            match other_truth {
                Some(other) if other != by_player(player.other()) => {
                    return Err(Error::InvalidValuation(
                        "informed tie-breaking refinement must carry the other player's true valuation"
                            .into(),
                    ));
                }
                Some(_) => {}
                None => *other_truth = Some(by_player(player.other()).clone()),
            }
        }
        Ok(Self {
            truth_alice,
            truth_bob,
            variant,
            rule,
        })
    }

    pub fn items(&self) -> usize {
        self.truth_alice.len()
    }

    pub fn truth(&self, player: Player) -> &Valuation {
        match player {
            Player::Alice => &self.truth_alice,
            Player::Bob => &self.truth_bob,
        }
    }

    pub fn rule(&self) -> &TieBreakRule {
        &self.rule
    }

    pub fn variant(&self) -> &Variant {
        &self.variant
    }

    pub fn discrete_points(&self) -> Option<u64> {
        match self.variant {
            Variant::Discrete { points } => Some(points),
            Variant::Continuous => None,
        }
    }

    pub fn truthful_profile(&self) -> StrategyProfile {
        StrategyProfile {
            alice: self.truth_alice.clone(),
            bob: self.truth_bob.clone(),
        }
    }

    /// The allocation the procedure produces on a declared profile.
    pub fn outcome(&self, profile: &StrategyProfile) -> Allocation {
        adjusted_winner(&profile.alice, &profile.bob, &self.rule).0
    }

    /// True utilities of both players at a declared profile.
    pub fn true_utilities(&self, profile: &StrategyProfile) -> (Rational, Rational) {
        let w = self.outcome(profile);
        (
            self.truth_alice.utility(w.alice()).expect("same length"),
            self.truth_bob.utility(w.bob()).expect("same length"),
        )
    }
}

/// A pair of declared valuations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrategyProfile {
    pub alice: Valuation,
    pub bob: Valuation,
}

/// Verdict on one profile: the largest unilateral true-utility gains, the
/// fairness of the induced allocation measured at the TRUE valuations, and
/// its welfare. The profile is a pure Nash equilibrium exactly when both
/// gaps are zero.
#[derive(Clone, Debug, PartialEq)]
pub struct EquilibriumReport {
    pub profile: StrategyProfile,
    pub gap_alice: Rational,
    pub gap_bob: Rational,
    pub is_pure_nash: bool,
    pub fairness: FairnessReport,
    pub welfare: Rational,
}

/// A certified profitable unilateral deviation.
#[derive(Clone, Debug, PartialEq)]
pub struct DeviationWitness {
    pub player: Player,
    pub deviation: Valuation,
    pub gain: Rational,
}

/// A fairness-at-truth failure found when auditing equilibria.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FairnessViolation {
    EnvyAlice,
    EnvyBob,
    NotParetoOptimal,
}

impl fmt::Display for FairnessViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FairnessViolation::EnvyAlice => write!(f, "alice envies bob at true valuations"),
            FairnessViolation::EnvyBob => write!(f, "bob envies alice at true valuations"),
            FairnessViolation::NotParetoOptimal => {
                write!(f, "allocation is not pareto optimal at true valuations")
            }
        }
    }
}

/// An equilibrium together with any fairness violations it exhibits.
#[derive(Clone, Debug, PartialEq)]
pub struct AuditedEquilibrium {
    pub report: EquilibriumReport,
    pub violations: Vec<FairnessViolation>,
}

/// Welfare-degradation measurement: truthful welfare over the worst
/// equilibrium welfare, or a marker when no pure equilibrium exists.
#[derive(Clone, Debug, PartialEq)]
pub enum PoaOutcome {
    Ratio {
        truthful_welfare: Rational,
        worst_welfare: Rational,
        ratio: Rational,
    },
    NoPureNash {
        truthful_welfare: Rational,
    },
}

/// Iterator over all ways to distribute `points` across `items` slots with
/// every slot strictly positive, in ascending lexicographic order.
pub struct Compositions {
    parts: Option<Vec<u64>>,
}

impl Iterator for Compositions {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        let current = self.parts.clone()?;
        let parts = self.parts.as_mut().unwrap();
        let m = parts.len();
        let mut advanced = false;
        for i in (0..m.saturating_sub(1)).rev() {
            let tail: u64 = parts[i + 1..].iter().sum();
            // the tail can fund an increment when it holds more than its minimum
            if tail > (m - i - 1) as u64 {
                parts[i] += 1;
                for p in parts[i + 1..].iter_mut() {
                    *p = 1;
                }
                parts[m - 1] = tail - 1 - (m - i - 2) as u64;
                advanced = true;
                break;
            }
        }
        if !advanced {
            self.parts = None;
        }
        Some(current)
    }
}

/// All declarable valuations in the discrete variant: the compositions of
/// `points` into `items` positive parts, normalized. Deterministic ascending
/// lexicographic order; the count is `C(points−1, items−1)`.
pub fn enumerate_strategies(
    items: usize,
    points: u64,
) -> Result<impl Iterator<Item = Valuation>, Error> {
    if items == 0 || points < items as u64 {
        return Err(Error::InfeasibleStrategySpace { items, points });
    }
    let mut first = vec![1u64; items];
    first[items - 1] = points - items as u64 + 1;
    let compositions = Compositions { parts: Some(first) };
    Ok(compositions.map(|parts| Valuation::normalize(&parts).expect("parts are positive")))
}

/// Number of strategies in the discrete space, `C(points−1, items−1)`,
/// saturating at `u128::MAX`.
pub fn strategy_count(items: usize, points: u64) -> Result<u128, Error> {
    if items == 0 || points < items as u64 {
        return Err(Error::InfeasibleStrategySpace { items, points });
    }
    Ok(binomial(points - 1, items as u64 - 1))
}

fn binomial(n: u64, k: u64) -> u128 {
    let k = k.min(n - k.min(n));
    let mut result: u128 = 1;
    for i in 0..k {
        result = match result.checked_mul((n - i) as u128) {
            Some(r) => r / (i + 1) as u128,
            None => return u128::MAX,
        };
    }
    result
}

fn profile_for(player: Player, own: Valuation, opponent: Valuation) -> StrategyProfile {
    match player {
        Player::Alice => StrategyProfile {
            alice: own,
            bob: opponent,
        },
        Player::Bob => StrategyProfile {
            alice: opponent,
            bob: own,
        },
    }
}

/// Exhaustive best response in the discrete variant: the declaration
/// maximizing the player's true utility against the fixed opponent strategy.
/// Ties go to the earliest strategy in enumeration order.
pub fn best_response(
    game: &Game,
    player: Player,
    opponent_strategy: &Valuation,
) -> Result<(Valuation, Rational), Error> {
    let points = game.discrete_points().ok_or(Error::RequiresDiscrete)?;
    let mut best: Option<(Valuation, Rational)> = None;
    for candidate in enumerate_strategies(game.items(), points)? {
        let profile = profile_for(player, candidate.clone(), opponent_strategy.clone());
        let (ua, ub) = game.true_utilities(&profile);
        let value = match player {
            Player::Alice => ua,
            Player::Bob => ub,
        };
        match &best {
            Some((_, incumbent)) if value <= *incumbent => {}
            _ => best = Some((candidate, value)),
        }
    }
    Ok(best.expect("feasible spaces are non-empty"))
}

fn report_for(
    game: &Game,
    profile: &StrategyProfile,
    gap_alice: Rational,
    gap_bob: Rational,
) -> Result<EquilibriumReport, Error> {
    let w = game.outcome(profile);
    let fairness = fairness_report(game.truth(Player::Alice), game.truth(Player::Bob), &w)?;
    let welfare = fairness.social_welfare.clone();
    let is_pure_nash = gap_alice.is_zero() && gap_bob.is_zero();
    Ok(EquilibriumReport {
        profile: profile.clone(),
        gap_alice,
        gap_bob,
        is_pure_nash,
        fairness,
        welfare,
    })
}

/// Decides whether a discrete profile is a pure Nash equilibrium by scanning
/// both players' full strategy spaces. The report carries the exact deviation
/// gaps; when a gap is positive, the witnessing deviation comes along.
///
/// For continuous profiles use [`deviation_gaps`], which certifies against a
/// grid instead of deciding.
pub fn is_pure_nash(
    game: &Game,
    profile: &StrategyProfile,
) -> Result<(EquilibriumReport, Option<DeviationWitness>), Error> {
    let points = game.discrete_points().ok_or(Error::RequiresDiscrete)?;
    if profile.alice.len() != game.items() || profile.bob.len() != game.items() {
        return Err(Error::DimensionMismatch {
            expected: game.items(),
            found: profile.alice.len().max(profile.bob.len()),
        });
    }
    if !profile.alice.is_representable(points) || !profile.bob.is_representable(points) {
        return Err(Error::InvalidValuation(format!(
            "profile is not representable with {points} points"
        )));
    }
    let (ua, ub) = game.true_utilities(profile);
    let (best_a, value_a) = best_response(game, Player::Alice, &profile.bob)?;
    let (best_b, value_b) = best_response(game, Player::Bob, &profile.alice)?;
    let gap_alice = &value_a - &ua;
    let gap_bob = &value_b - &ub;
    debug_assert!(!gap_alice.is_negative() && !gap_bob.is_negative());

    let witness = if gap_alice.is_positive() {
        Some(DeviationWitness {
            player: Player::Alice,
            deviation: best_a,
            gain: gap_alice.clone(),
        })
    } else if gap_bob.is_positive() {
        Some(DeviationWitness {
            player: Player::Bob,
            deviation: best_b,
            gain: gap_bob.clone(),
        })
    } else {
        None
    };
    let report = report_for(game, profile, gap_alice, gap_bob)?;
    Ok((report, witness))
}

/// Lazily evaluated table of true utilities over the profile space, with a
/// hard cap on the number of procedure runs.
struct ProfileTable<'a> {
    game: &'a Game,
    strategies: &'a [Valuation],
    cells: Vec<Option<(Rational, Rational)>>,
    evaluations: u64,
    budget: u64,
}

impl<'a> ProfileTable<'a> {
    fn new(game: &'a Game, strategies: &'a [Valuation], budget: u64) -> Self {
        let n = strategies.len();
        Self {
            game,
            strategies,
            cells: vec![None; n * n],
            evaluations: 0,
            budget,
        }
    }

    fn utilities(&mut self, xi: usize, yi: usize) -> Result<(Rational, Rational), ()> {
        let idx = xi * self.strategies.len() + yi;
        if self.cells[idx].is_none() {
            if self.evaluations >= self.budget {
                return Err(());
            }
            self.evaluations += 1;
            let profile = StrategyProfile {
                alice: self.strategies[xi].clone(),
                bob: self.strategies[yi].clone(),
            };
            self.cells[idx] = Some(self.game.true_utilities(&profile));
        }
        Ok(self.cells[idx].clone().unwrap())
    }
}

/// Exhaustively enumerates the pure Nash equilibria of a discrete game, in
/// deterministic lexicographic profile order.
///
/// `budget` caps the number of profile evaluations (the space holds
/// `C(P−1,m−1)²` profiles). If the cap is hit, the error carries every
/// equilibrium confirmed up to that point, flagged as partial results.
pub fn enumerate_pure_nash(game: &Game, budget: u64) -> Result<Vec<EquilibriumReport>, Error> {
    let points = game.discrete_points().ok_or(Error::RequiresDiscrete)?;
    let strategies: Vec<Valuation> = enumerate_strategies(game.items(), points)?.collect();
    let n = strategies.len();
    let mut table = ProfileTable::new(game, &strategies, budget);
    let mut best_alice: Vec<Option<Rational>> = vec![None; n];
    let mut best_bob: Vec<Option<Rational>> = vec![None; n];
    let mut found: Vec<EquilibriumReport> = Vec::new();

    for xi in 0..n {
        for yi in 0..n {
            let mut step = || -> Result<Option<EquilibriumReport>, ()> {
                let (ua, ub) = table.utilities(xi, yi)?;
                if best_alice[yi].is_none() {
                    let mut best = None::<Rational>;
                    for xk in 0..n {
                        let (cand, _) = table.utilities(xk, yi)?;
                        if best.as_ref().map_or(true, |b| cand > *b) {
                            best = Some(cand);
                        }
                    }
                    best_alice[yi] = best;
                }
                if best_bob[xi].is_none() {
                    let mut best = None::<Rational>;
                    for yk in 0..n {
                        let (_, cand) = table.utilities(xi, yk)?;
                        if best.as_ref().map_or(true, |b| cand > *b) {
                            best = Some(cand);
                        }
                    }
                    best_bob[xi] = best;
                }
                let nash = ua == *best_alice[yi].as_ref().unwrap()
                    && ub == *best_bob[xi].as_ref().unwrap();
                if nash {
                    let profile = StrategyProfile {
                        alice: strategies[xi].clone(),
                        bob: strategies[yi].clone(),
                    };
                    let report =
                        report_for(table.game, &profile, Rational::zero(), Rational::zero())
                            .expect("dimensions verified");
                    return Ok(Some(report));
                }
                Ok(None)
            };
            match step() {
                Ok(Some(report)) => found.push(report),
                Ok(None) => {}
                Err(()) => {
                    return Err(Error::SearchBudgetExceeded {
                        evaluations: table.evaluations,
                        budget,
                        partial: found,
                    })
                }
            }
        }
    }
    Ok(found)
}

/// Measures both players' deviation gaps at a profile against the grid of
/// all strategies declarable with `grid_denominator` points. The gaps are
/// floored at zero; a profile is an `ε`-equilibrium with respect to the grid
/// when both gaps are at most `ε`.
pub fn deviation_gaps(
    truth_alice: &Valuation,
    truth_bob: &Valuation,
    rule: &TieBreakRule,
    profile: &StrategyProfile,
    grid_denominator: u64,
) -> Result<(Rational, Rational), Error> {
    let m = truth_alice.len();
    let current = adjusted_winner(&profile.alice, &profile.bob, rule).0;
    let ua = truth_alice.utility(current.alice())?;
    let ub = truth_bob.utility(current.bob())?;
    let mut gap_alice = Rational::zero();
    let mut gap_bob = Rational::zero();
    for candidate in enumerate_strategies(m, grid_denominator)? {
        let wa = adjusted_winner(&candidate, &profile.bob, rule).0;
        let da = truth_alice.utility(wa.alice())? - &ua;
        if da > gap_alice {
            gap_alice = da;
        }
        let wb = adjusted_winner(&profile.alice, &candidate, rule).0;
        let db = truth_bob.utility(wb.bob())? - &ub;
        if db > gap_bob {
            gap_bob = db;
        }
    }
    Ok((gap_alice, gap_bob))
}

/// The most Bob can truly be worth on his side of the boundary when both
/// declarations equal Alice's truth `a`, maximized over the tie orderings.
///
/// With every ratio tied, Bob's side always cuts off exactly half of the
/// declared mass, so the optimum is a fractional knapsack: fill Bob's side by
/// descending true-value density `b_j/a_j` until the `a`-mass reaches exactly
/// one half. Running the procedure under Bob-informed tie-breaking computes
/// precisely that.
pub fn bob_target_value(a: &Valuation, b: &Valuation) -> Rational {
    assert_eq!(a.len(), b.len(), "valuations must cover the same items");
    let rule = TieBreakRule::informed(Player::Bob, b.clone());
    let (alloc, _) = adjusted_winner(a, a, &rule);
    b.utility(alloc.bob()).expect("same length")
}

/// Truthful welfare over the worst pure-equilibrium welfare.
pub fn price_of_anarchy(game: &Game, budget: u64) -> Result<PoaOutcome, Error> {
    let truthful = game.outcome(&game.truthful_profile());
    let truthful_welfare = crate::fairness::social_welfare(
        game.truth(Player::Alice),
        game.truth(Player::Bob),
        &truthful,
    )?;
    let equilibria = enumerate_pure_nash(game, budget)?;
    let worst = equilibria.iter().map(|r| r.welfare.clone()).min();
    Ok(match worst {
        Some(worst_welfare) => PoaOutcome::Ratio {
            ratio: &truthful_welfare / &worst_welfare,
            truthful_welfare,
            worst_welfare,
        },
        None => PoaOutcome::NoPureNash { truthful_welfare },
    })
}

/// Derives the fairness violations of an already-built equilibrium report:
/// envy at true valuations under any rule, efficiency additionally under
/// informed tie-breaking.
pub fn audit_violations(rule: &TieBreakRule, report: &EquilibriumReport) -> Vec<FairnessViolation> {
    let mut violations = Vec::new();
    if !report.fairness.envy_free_alice {
        violations.push(FairnessViolation::EnvyAlice);
    }
    if !report.fairness.envy_free_bob {
        violations.push(FairnessViolation::EnvyBob);
    }
    if matches!(rule, TieBreakRule::Informed { .. }) && !report.fairness.pareto_optimal {
        violations.push(FairnessViolation::NotParetoOptimal);
    }
    violations
}

/// Enumerates the pure Nash equilibria and audits each against the
/// fairness-at-truth guarantees. A non-empty violation list contradicts the
/// guarantees and should be surfaced loudly.
pub fn equilibrium_fairness_audit(
    game: &Game,
    budget: u64,
) -> Result<Vec<AuditedEquilibrium>, Error> {
    let reports = enumerate_pure_nash(game, budget)?;
    Ok(reports
        .into_iter()
        .map(|report| {
            let violations = audit_violations(game.rule(), &report);
            AuditedEquilibrium { report, violations }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn v(points: &[u64]) -> Valuation {
        Valuation::normalize(points).unwrap()
    }

    fn lex_game(a: &[u64], b: &[u64], points: u64) -> Game {
        Game::new(
            v(a),
            v(b),
            Variant::Discrete { points },
            TieBreakRule::Lexicographic,
        )
        .unwrap()
    }

    fn informed_game(a: &[u64], b: &[u64], points: u64, player: Player) -> Game {
        let (ta, tb) = (v(a), v(b));
        let truth = match player {
            Player::Alice => ta.clone(),
            Player::Bob => tb.clone(),
        };
        Game::new(
            ta,
            tb,
            Variant::Discrete { points },
            TieBreakRule::informed(player, truth),
        )
        .unwrap()
    }

    #[test]
    fn compositions_of_three_points_over_two_items() {
        let all: Vec<Vec<u64>> = enumerate_strategies(2, 3)
            .unwrap()
            .map(|s| s.points().unwrap().to_vec())
            .collect();
        assert_eq!(all, vec![vec![1, 2], vec![2, 1]]);
    }

    #[test]
    fn composition_count_matches_the_binomial() {
        assert_eq!(strategy_count(4, 7).unwrap(), 20);
        assert_eq!(enumerate_strategies(4, 7).unwrap().count(), 20);
        let all: Vec<Vec<u64>> = enumerate_strategies(2, 2)
            .unwrap()
            .map(|s| s.points().unwrap().to_vec())
            .collect();
        assert_eq!(all, vec![vec![1, 1]]);
    }

    #[test]
    fn infeasible_spaces_are_rejected() {
        assert!(matches!(
            enumerate_strategies(3, 2).err(),
            Some(Error::InfeasibleStrategySpace { .. })
        ));
        assert!(matches!(
            strategy_count(3, 2).err(),
            Some(Error::InfeasibleStrategySpace { .. })
        ));
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let all: Vec<Vec<u64>> = enumerate_strategies(3, 5)
            .unwrap()
            .map(|s| s.points().unwrap().to_vec())
            .collect();
        assert_eq!(
            all,
            vec![
                vec![1, 1, 3],
                vec![1, 2, 2],
                vec![1, 3, 1],
                vec![2, 1, 2],
                vec![2, 2, 1],
                vec![3, 1, 1],
            ]
        );
    }

    #[test]
    fn truthful_best_response_against_identical_truths_is_half() {
        // envy-freeness in declared terms caps the response at one half
        let game = lex_game(&[1, 1, 2, 3], &[1, 1, 2, 3], 7);
        let (_, value) = best_response(&game, Player::Alice, &v(&[1, 1, 2, 3])).unwrap();
        assert_eq!(value, rat(1, 2));
    }

    #[test]
    fn singleton_space_best_response() {
        let game = lex_game(&[1, 1], &[1, 1], 2);
        let (strategy, _) = best_response(&game, Player::Bob, &v(&[1, 1])).unwrap();
        assert_eq!(strategy.points().unwrap(), &[1, 1]);
    }

    #[test]
    fn bobs_best_response_in_the_fifty_fifty_instance() {
        // Bob truly holds (60,40); against Alice's (50,50) under his own
        // informed tie-breaking, declaring (5,5) secures item 1 worth 3/5.
        let game = Game::new(
            v(&[50, 50]),
            v(&[60, 40]),
            Variant::Discrete { points: 10 },
            TieBreakRule::informed(Player::Bob, v(&[60, 40])),
        )
        .unwrap();
        let (strategy, value) = best_response(&game, Player::Bob, &v(&[50, 50])).unwrap();
        assert_eq!(value, rat(3, 5));
        assert_eq!(strategy.points().unwrap(), &[5, 5]);
    }

    #[test]
    fn truthful_play_is_not_stable_in_the_four_item_game() {
        let game = lex_game(&[1, 1, 2, 3], &[2, 3, 1, 1], 7);
        let (report, witness) = is_pure_nash(&game, &game.truthful_profile()).unwrap();
        assert!(!report.is_pure_nash);
        let witness = witness.expect("some positive gap exists");
        assert!(witness.gain.is_positive());
        // the witness gain is exactly the reported gap of the deviating player
        let gap = match witness.player {
            Player::Alice => &report.gap_alice,
            Player::Bob => &report.gap_bob,
        };
        assert_eq!(&witness.gain, gap);
    }

    #[test]
    fn mirrored_truth_profile_is_stable_under_bob_informed_ties() {
        let game = informed_game(&[1, 1, 2, 3], &[2, 3, 1, 1], 7, Player::Bob);
        let a = v(&[1, 1, 2, 3]);
        let profile = StrategyProfile {
            alice: a.clone(),
            bob: a,
        };
        let (report, witness) = is_pure_nash(&game, &profile).unwrap();
        assert!(report.is_pure_nash);
        assert_eq!(report.gap_alice, rat(0, 1));
        assert_eq!(report.gap_bob, rat(0, 1));
        assert!(witness.is_none());
    }

    #[test]
    fn singleton_space_is_trivially_stable() {
        let game = lex_game(&[1, 1], &[1, 1], 2);
        let profile = game.truthful_profile();
        let (report, _) = is_pure_nash(&game, &profile).unwrap();
        assert!(report.is_pure_nash);

        let found = enumerate_pure_nash(&game, 1_000).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].profile, profile);
    }

    #[test]
    fn unrepresentable_profiles_are_rejected() {
        let game = lex_game(&[1, 1], &[1, 1], 3);
        let profile = StrategyProfile {
            alice: v(&[1, 1]),
            bob: v(&[1, 2]),
        };
        assert!(matches!(
            is_pure_nash(&game, &profile),
            Err(Error::InvalidValuation(_))
        ));
    }

    #[test]
    fn enumeration_finds_the_mirrored_equilibrium_under_informed_ties() {
        let game = informed_game(&[1, 1, 2, 3], &[2, 3, 1, 1], 7, Player::Bob);
        let found = enumerate_pure_nash(&game, 1_000_000).unwrap();
        assert!(!found.is_empty());
        let a = v(&[1, 1, 2, 3]);
        assert!(found
            .iter()
            .any(|r| r.profile.alice == a && r.profile.bob == a));
    }

    #[test]
    fn budget_exhaustion_carries_partial_results() {
        let game = lex_game(&[1, 1, 2, 3], &[2, 3, 1, 1], 7);
        match enumerate_pure_nash(&game, 10) {
            Err(Error::SearchBudgetExceeded {
                evaluations,
                budget,
                partial,
            }) => {
                assert_eq!(budget, 10);
                assert_eq!(evaluations, 10);
                assert!(partial.is_empty());
            }
            other => panic!("expected budget exhaustion, got {other:?}"),
        }
    }

    #[test]
    fn bob_target_value_examples() {
        // identical valuations: any half split is worth exactly a half
        let a = v(&[1, 1, 2, 3]);
        assert_eq!(bob_target_value(&a, &a), rat(1, 2));

        // two items: Bob takes all of item 1, exactly half the declared mass
        let a2 = v(&[1, 1]);
        let b2 = Valuation::from_values(vec![rat(3, 5), rat(2, 5)]).unwrap();
        assert_eq!(bob_target_value(&a2, &b2), rat(3, 5));

        // greedy fill by hand: items 2 and 1 whole, then 3/4 of item 3
        let a4 = v(&[1, 1, 2, 3]);
        let b4 = v(&[2, 3, 1, 1]);
        assert_eq!(bob_target_value(&a4, &b4), rat(23, 28));
    }

    #[test]
    fn poa_of_a_singleton_game_is_one() {
        let game = lex_game(&[1, 1], &[1, 1], 2);
        match price_of_anarchy(&game, 1_000).unwrap() {
            PoaOutcome::Ratio { ratio, .. } => assert_eq!(ratio, rat(1, 1)),
            other => panic!("expected a ratio, got {other:?}"),
        }
    }

    #[test]
    fn poa_reports_missing_equilibria() {
        let game = lex_game(&[1, 1, 2, 3], &[2, 3, 1, 1], 7);
        match price_of_anarchy(&game, 1_000_000).unwrap() {
            PoaOutcome::NoPureNash { truthful_welfare } => {
                assert_eq!(truthful_welfare, rat(10, 7))
            }
            other => panic!("expected no pure equilibrium, got {other:?}"),
        }
    }

    #[test]
    fn audits_are_clean_under_informed_ties() {
        let game = informed_game(&[1, 1, 2, 3], &[2, 3, 1, 1], 7, Player::Bob);
        let audited = equilibrium_fairness_audit(&game, 1_000_000).unwrap();
        assert!(!audited.is_empty());
        assert!(audited.iter().all(|a| a.violations.is_empty()));
    }

    #[test]
    fn singleton_audit_is_trivially_clean() {
        let game = lex_game(&[1, 1], &[1, 1], 2);
        let audited = equilibrium_fairness_audit(&game, 1_000).unwrap();
        assert_eq!(audited.len(), 1);
        assert!(audited[0].violations.is_empty());
    }

    #[test]
    fn informed_rule_truth_must_match() {
        let result = Game::new(
            v(&[1, 1]),
            v(&[1, 2]),
            Variant::Discrete { points: 3 },
            TieBreakRule::informed(Player::Bob, v(&[2, 1])),
        );
        assert!(matches!(result, Err(Error::InvalidValuation(_))));
    }
}
