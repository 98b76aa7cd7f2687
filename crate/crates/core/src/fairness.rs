//! Certifiers for the properties an allocation may satisfy, and constructive
//! witnesses when efficiency fails.
//!
//! All checks are exact. The Pareto test is the pairwise ratio scan: an
//! allocation is not Pareto optimal exactly when some item Bob partly holds
//! has a strictly higher value ratio than some item Alice partly holds, in
//! which case an explicit utility-improving exchange exists and is returned.

use num::{One, Zero};

use crate::allocation::Allocation;
use crate::error::Error;
use crate::procedure::{adjusted_winner, TieBreakRule};
use crate::rational::{rat, Rational};
use crate::valuation::Valuation;

/// Everything the certifiers can say about one allocation, evaluated against
/// a fixed pair of valuations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FairnessReport {
    pub envy_free_alice: bool,
    pub envy_free_bob: bool,
    pub proportional_alice: bool,
    pub proportional_bob: bool,
    pub equitable: bool,
    pub pareto_optimal: bool,
    pub minimally_fractional: bool,
    pub social_welfare: Rational,
    /// The best achievable worst-off utility for this valuation pair.
    pub maxmin_value: Rational,
}

/// A mutually improving exchange certifying that an allocation is not Pareto
/// optimal: Bob hands `amount_to_alice` of `item_to_alice` to Alice, who
/// hands `amount_to_bob` of `item_to_bob` back. Applying it strictly raises
/// both players' true utilities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExchangeWitness {
    pub item_to_alice: usize,
    pub item_to_bob: usize,
    pub amount_to_alice: Rational,
    pub amount_to_bob: Rational,
}

impl ExchangeWitness {
    /// The allocation after the exchange.
    pub fn apply(&self, w: &Allocation) -> Allocation {
        let mut alice = w.alice().to_vec();
        alice[self.item_to_alice] += &self.amount_to_alice;
        alice[self.item_to_bob] -= &self.amount_to_bob;
        Allocation::from_alice_shares(alice).expect("witness amounts respect the holdings")
    }
}

fn check_dims(a: &Valuation, b: &Valuation, w: &Allocation) -> Result<(), Error> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            expected: a.len(),
            found: b.len(),
        });
    }
    if w.len() != a.len() {
        return Err(Error::DimensionMismatch {
            expected: a.len(),
            found: w.len(),
        });
    }
    Ok(())
}

/// Whether each player weakly prefers their own bundle to the other's, under
/// their own valuation. Returned as `(alice, bob)`.
pub fn is_envy_free(a: &Valuation, b: &Valuation, w: &Allocation) -> Result<(bool, bool), Error> {
    check_dims(a, b, w)?;
    let alice = a.utility(w.alice())? >= a.utility(w.bob())?;
    let bob = b.utility(w.bob())? >= b.utility(w.alice())?;
    Ok((alice, bob))
}

/// Whether each player receives at least half of their value for everything.
pub fn is_proportional(
    a: &Valuation,
    b: &Valuation,
    w: &Allocation,
) -> Result<(bool, bool), Error> {
    check_dims(a, b, w)?;
    let half = rat(1, 2);
    Ok((
        a.utility(w.alice())? >= half,
        b.utility(w.bob())? >= half,
    ))
}

/// Exact equality of the two players' utilities for their own bundles.
pub fn is_equitable(x: &Valuation, y: &Valuation, w: &Allocation) -> Result<bool, Error> {
    check_dims(x, y, w)?;
    Ok(x.utility(w.alice())? == y.utility(w.bob())?)
}

/// At most one item is split between the players.
pub fn is_minimally_fractional(w: &Allocation) -> bool {
    w.split_items().len() <= 1
}

/// Pairwise ratio scan: the allocation fails exactly when Bob holds part of
/// some item `i` and Alice part of some item `j` with `a_i·b_j > a_j·b_i`.
pub fn is_pareto_optimal(a: &Valuation, b: &Valuation, w: &Allocation) -> Result<bool, Error> {
    check_dims(a, b, w)?;
    Ok(pareto_violation(a, b, w).is_none())
}

fn pareto_violation(a: &Valuation, b: &Valuation, w: &Allocation) -> Option<(usize, usize)> {
    let m = a.len();
    for i in 0..m {
        if w.bob()[i].is_zero() {
            continue;
        }
        for j in 0..m {
            if i == j || w.alice()[j].is_zero() {
                continue;
            }
            if a.value(i) * b.value(j) > a.value(j) * b.value(i) {
                return Some((i, j));
            }
        }
    }
    None
}

/// Returns a strictly improving exchange when the allocation is not Pareto
/// optimal, or `None` when it is.
///
/// The witness is canonical: Bob offers his whole holding of the violating
/// item, the return transfer starts from the midpoint of the admissible open
/// interval, and both amounts are scaled down proportionally if the return
/// exceeds Alice's holding. Proportional scaling keeps the pair inside the
/// open interval, so both utility gains stay strictly positive.
pub fn pareto_improving_exchange(
    a: &Valuation,
    b: &Valuation,
    w: &Allocation,
) -> Result<Option<ExchangeWitness>, Error> {
    check_dims(a, b, w)?;
    let (i, j) = match pareto_violation(a, b, w) {
        Some(pair) => pair,
        None => return Ok(None),
    };

    let take = w.bob()[i].clone();
    let lower = b.value(i) / b.value(j) * &take;
    let upper = a.value(i) / a.value(j) * &take;
    let midpoint = (&lower + &upper) / rat(2, 1);

    let held = &w.alice()[j];
    let (amount_to_alice, amount_to_bob) = if &midpoint > held {
        let scale = held / &midpoint;
        (take * scale, held.clone())
    } else {
        (take, midpoint)
    };

    let witness = ExchangeWitness {
        item_to_alice: i,
        item_to_bob: j,
        amount_to_alice,
        amount_to_bob,
    };
    debug_assert!({
        let after = witness.apply(w);
        a.utility(after.alice()).unwrap() > a.utility(w.alice()).unwrap()
            && b.utility(after.bob()).unwrap() > b.utility(w.bob()).unwrap()
    });
    Ok(Some(witness))
}

/// Whether the allocation is reproduced by some ratio-sorted permutation with
/// a single boundary: every item fully held by Alice must have a declared
/// ratio at least that of the split item (if any), which in turn must be at
/// least that of every item fully held by Bob.
pub fn is_ordered(w: &Allocation, x: &Valuation, y: &Valuation) -> Result<bool, Error> {
    check_dims(x, y, w)?;
    let split = w.split_items();
    if split.len() > 1 {
        return Ok(false);
    }
    let ge = |i: usize, j: usize| x.value(i) * y.value(j) >= x.value(j) * y.value(i);
    let whole_alice: Vec<usize> = (0..w.len())
        .filter(|&i| w.alice()[i].is_one())
        .collect();
    let whole_bob: Vec<usize> = (0..w.len()).filter(|&i| w.alice()[i].is_zero()).collect();
    for &s in &whole_alice {
        for &t in &whole_bob {
            if !ge(s, t) {
                return Ok(false);
            }
        }
    }
    if let Some(&f) = split.first() {
        if whole_alice.iter().any(|&s| !ge(s, f)) || whole_bob.iter().any(|&t| !ge(f, t)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The largest achievable minimum utility over the two players. The
/// procedure's equitable outcome attains it, so the value is the common
/// utility of the truthful run.
pub fn maxmin_value(a: &Valuation, b: &Valuation) -> Rational {
    let (alloc, _) = adjusted_winner(a, b, &TieBreakRule::Lexicographic);
    a.utility(alloc.alice()).expect("same length")
}

/// An allocation attaining [`maxmin_value`], also minimally fractional.
pub fn maxmin_allocation(a: &Valuation, b: &Valuation) -> Allocation {
    adjusted_winner(a, b, &TieBreakRule::Lexicographic).0
}

/// Sum of the two players' true utilities for their own bundles.
pub fn social_welfare(a: &Valuation, b: &Valuation, w: &Allocation) -> Result<Rational, Error> {
    check_dims(a, b, w)?;
    Ok(a.utility(w.alice())? + b.utility(w.bob())?)
}

/// Runs every certifier against the allocation.
pub fn fairness_report(
    a: &Valuation,
    b: &Valuation,
    w: &Allocation,
) -> Result<FairnessReport, Error> {
    let (envy_free_alice, envy_free_bob) = is_envy_free(a, b, w)?;
    let (proportional_alice, proportional_bob) = is_proportional(a, b, w)?;
    Ok(FairnessReport {
        envy_free_alice,
        envy_free_bob,
        proportional_alice,
        proportional_bob,
        equitable: is_equitable(a, b, w)?,
        pareto_optimal: is_pareto_optimal(a, b, w)?,
        minimally_fractional: is_minimally_fractional(w),
        social_welfare: social_welfare(a, b, w)?,
        maxmin_value: maxmin_value(a, b),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::procedure::Player;

    fn v(points: &[u64]) -> Valuation {
        Valuation::normalize(points).unwrap()
    }

    fn shares(fracs: &[Rational]) -> Allocation {
        Allocation::from_alice_shares(fracs.to_vec()).unwrap()
    }

    #[test]
    fn envy_freeness_of_a_symmetric_split() {
        let a = v(&[1, 1]);
        let w = shares(&[rat(1, 1), rat(0, 1)]);
        assert_eq!(is_envy_free(&a, &a, &w).unwrap(), (true, true));
    }

    #[test]
    fn truthful_outcomes_are_envy_free() {
        let a = v(&[1, 1, 2, 3]);
        let b = v(&[2, 3, 1, 1]);
        let (w, _) = adjusted_winner(&a, &b, &TieBreakRule::Lexicographic);
        assert_eq!(is_envy_free(&a, &b, &w).unwrap(), (true, true));
    }

    #[test]
    fn a_starved_player_envies() {
        let a = v(&[99, 1]);
        let b = v(&[1, 1]);
        let w = shares(&[rat(0, 1), rat(1, 1)]);
        let (alice, _) = is_envy_free(&a, &b, &w).unwrap();
        assert!(!alice); // 1/100 < 99/100
    }

    #[test]
    fn equitability_cases() {
        let a = v(&[1, 1, 2, 3]);
        let b = v(&[2, 3, 1, 1]);
        let (w, _) = adjusted_winner(&a, &b, &TieBreakRule::Lexicographic);
        assert!(is_equitable(&a, &b, &w).unwrap());

        // Alice {3,4} / Bob {1,2} gives 5/7 each by hand.
        let w = shares(&[rat(0, 1), rat(0, 1), rat(1, 1), rat(1, 1)]);
        assert!(is_equitable(&a, &b, &w).unwrap());

        let empty = shares(&[rat(0, 1), rat(0, 1), rat(0, 1), rat(0, 1)]);
        assert!(!is_equitable(&a, &b, &empty).unwrap());
    }

    #[test]
    fn ordered_allocations_are_pareto_optimal() {
        let a = v(&[1, 1, 2, 3]);
        let b = v(&[2, 3, 1, 1]);
        let (w, _) = adjusted_winner(&a, &b, &TieBreakRule::Lexicographic);
        assert!(is_pareto_optimal(&a, &b, &w).unwrap());
        // every boundary position is efficient, not just the equitable one
        let all_to_alice = shares(&vec![rat(1, 1); 4]);
        assert!(is_pareto_optimal(&a, &b, &all_to_alice).unwrap());
    }

    #[test]
    fn a_crossed_swap_is_inefficient() {
        // (3/5)(3/5) > (2/5)(2/5) across the swapped pair
        let a = Valuation::from_values(vec![rat(3, 5), rat(2, 5)]).unwrap();
        let b = Valuation::from_values(vec![rat(2, 5), rat(3, 5)]).unwrap();
        let w = shares(&[rat(0, 1), rat(1, 1)]);
        assert!(!is_pareto_optimal(&a, &b, &w).unwrap());
    }

    #[test]
    fn identical_valuations_leave_nothing_to_gain() {
        let a = v(&[2, 5, 3]);
        let w = shares(&[rat(1, 2), rat(1, 4), rat(3, 4)]);
        assert!(is_pareto_optimal(&a, &a, &w).unwrap());
    }

    #[test]
    fn exchange_witness_raises_both_utilities() {
        let a = Valuation::from_values(vec![rat(3, 5), rat(2, 5)]).unwrap();
        let b = Valuation::from_values(vec![rat(2, 5), rat(3, 5)]).unwrap();
        let w = shares(&[rat(0, 1), rat(1, 1)]);
        let witness = pareto_improving_exchange(&a, &b, &w).unwrap().unwrap();
        assert_eq!(witness.item_to_alice, 0);
        assert_eq!(witness.item_to_bob, 1);
        // midpoint of (2/3, 3/2) is 13/12, clipped by scaling both amounts
        // down by 12/13: Alice receives 12/13 of item 1 for all of item 2.
        assert_eq!(witness.amount_to_alice, rat(12, 13));
        assert_eq!(witness.amount_to_bob, rat(1, 1));
        let after = witness.apply(&w);
        assert_eq!(a.utility(after.alice()).unwrap(), rat(36, 65));
        assert_eq!(b.utility(after.bob()).unwrap(), rat(41, 65));
        assert!(a.utility(after.alice()).unwrap() > rat(2, 5));
        assert!(b.utility(after.bob()).unwrap() > rat(2, 5));
    }

    #[test]
    fn no_witness_on_efficient_allocations() {
        let a = v(&[1, 1, 2, 3]);
        let b = v(&[2, 3, 1, 1]);
        let (w, _) = adjusted_winner(&a, &b, &TieBreakRule::Lexicographic);
        assert!(pareto_improving_exchange(&a, &b, &w).unwrap().is_none());
    }

    #[test]
    fn minimal_fractionality_counts_splits() {
        assert!(is_minimally_fractional(&shares(&[rat(1, 1), rat(0, 1)])));
        assert!(is_minimally_fractional(&shares(&[rat(1, 3), rat(0, 1)])));
        assert!(!is_minimally_fractional(&shares(&[rat(1, 2), rat(1, 2)])));
    }

    #[test]
    fn ordered_recognizes_boundary_allocations() {
        let x = v(&[1, 1, 2, 3]);
        let y = v(&[2, 3, 1, 1]);
        let all_to_alice = shares(&vec![rat(1, 1); 4]);
        assert!(is_ordered(&all_to_alice, &x, &y).unwrap());
        let (w, _) = adjusted_winner(&x, &y, &TieBreakRule::Lexicographic);
        assert!(is_ordered(&w, &x, &y).unwrap());

        let a = Valuation::from_values(vec![rat(3, 5), rat(2, 5)]).unwrap();
        let b = Valuation::from_values(vec![rat(2, 5), rat(3, 5)]).unwrap();
        let swapped = shares(&[rat(0, 1), rat(1, 1)]);
        assert!(!is_ordered(&swapped, &a, &b).unwrap());
    }

    #[test]
    fn maxmin_values_match_the_equitable_utility() {
        let a = v(&[1, 1, 2, 3]);
        let b = v(&[2, 3, 1, 1]);
        assert_eq!(maxmin_value(&a, &b), rat(5, 7));

        let a2 = v(&[4, 9]);
        assert_eq!(maxmin_value(&a2, &a2), rat(1, 2));

        let x = v(&[1, 1]);
        let y = Valuation::from_values(vec![rat(3, 5), rat(2, 5)]).unwrap();
        assert_eq!(maxmin_value(&x, &y), rat(6, 11));
        let alloc = maxmin_allocation(&x, &y);
        assert_eq!(x.utility(alloc.alice()).unwrap(), rat(6, 11));
    }

    #[test]
    fn welfare_of_the_two_item_instance() {
        let a = v(&[1, 1]);
        let b = Valuation::from_values(vec![rat(3, 5), rat(2, 5)]).unwrap();
        let (w, _) = adjusted_winner(&a, &b, &TieBreakRule::Lexicographic);
        assert_eq!(social_welfare(&a, &b, &w).unwrap(), rat(12, 11));

        // the integral split the other way round is worth 11/10
        let integral = shares(&[rat(0, 1), rat(1, 1)]);
        assert_eq!(social_welfare(&a, &b, &integral).unwrap(), rat(11, 10));

        let all_bob = shares(&[rat(0, 1), rat(0, 1)]);
        assert_eq!(social_welfare(&a, &b, &all_bob).unwrap(), rat(1, 1));
    }

    #[test]
    fn report_is_internally_consistent() {
        let a = v(&[1, 1]);
        let b = Valuation::from_values(vec![rat(3, 5), rat(2, 5)]).unwrap();
        let rule = TieBreakRule::informed(Player::Bob, b.clone());
        let (w, _) = adjusted_winner(&a, &b, &rule);
        let report = fairness_report(&a, &b, &w).unwrap();
        assert!(report.envy_free_alice && report.envy_free_bob);
        assert!(report.proportional_alice && report.proportional_bob);
        assert!(report.equitable && report.pareto_optimal && report.minimally_fractional);
        assert_eq!(report.social_welfare, rat(12, 11));
        assert_eq!(report.maxmin_value, rat(6, 11));
    }
}
