//! Construction of approximate equilibria with certified gap bounds.
//!
//! Alice plays her truth `a`; Bob plays a small zero-sum perturbation of `a`
//! whose ratios are strictly ordered by Bob's preferred arrangement, so the
//! boundary lands next to the split Bob would choose for himself. Shrinking
//! the perturbation step makes the outcome approach that target, and an exact
//! verification of all the closeness conditions certifies the gap bound.

use num::{BigInt, Integer, One, Signed, Zero};

use crate::error::Error;
use crate::procedure::{
    adjusted_winner, equitable_boundary, informed_tie_order, Player, TieBreakRule,
};
use crate::rational::{rat, Rational};
use crate::strategy::StrategyProfile;
use crate::valuation::Valuation;

/// An approximate equilibrium: the profile, the certified bound on either
/// player's unilateral true-utility gain, and a point budget under which both
/// declarations are exactly representable.
#[derive(Clone, Debug, PartialEq)]
pub struct EpsilonNash {
    pub profile: StrategyProfile,
    pub gap_bound: Rational,
    pub denominator: BigInt,
}

const MAX_HALVINGS: u32 = 256;

/// Builds a profile `(a, ã)` whose deviation gaps are at most `epsilon` for
/// both players.
///
/// The perturbation of the item at position `k` of Bob's preferred order is
/// `δ·a_k·(k − c)`, with `c` fixing the zero sum; relative perturbations then
/// grow strictly along the order, which pins the declared-ratio sort. The
/// step `δ` is halved until, verified exactly: every perturbation is small
/// enough, the ratios are strictly ordered, and the boundary still splits the
/// targeted item at a fraction close to Bob's target. All arithmetic is
/// rational from the start, so the final step is already rational and the
/// reported denominator makes both strategies representable as points.
pub fn construct_epsilon_nash(
    a: &Valuation,
    b: &Valuation,
    epsilon: &Rational,
) -> Result<EpsilonNash, Error> {
    assert_eq!(a.len(), b.len(), "valuations must cover the same items");
    if !epsilon.is_positive() {
        return Err(Error::InvalidValuation(
            "epsilon must be strictly positive".into(),
        ));
    }
    let m = a.len();
    let m_rat = rat(m as i64, 1);

    // Bob's preferred arrangement and the split he is aiming for.
    let order = informed_tie_order(a, a, b, Player::Bob);
    let (target_pos, target_split) = equitable_boundary(a, a, &order);
    let target_item = order[target_pos];

    // Perturbation shape: weight a_k·(k − c) at position k (1-based), with c
    // the value-weighted mean position so the weights sum to zero.
    let centre = order
        .iter()
        .enumerate()
        .fold(Rational::zero(), |acc, (k, &item)| {
            acc + rat(k as i64 + 1, 1) * a.value(item)
        });
    let weights: Vec<Rational> = order
        .iter()
        .enumerate()
        .map(|(k, &item)| a.value(item) * (rat(k as i64 + 1, 1) - &centre))
        .collect();

    let per_item_cap = if target_split.is_positive() {
        (epsilon / &m_rat).min(rat(2, 1) * &target_split * a.value(target_item) / &m_rat)
    } else {
        (epsilon / &m_rat).min(a.value(target_item) / &m_rat)
    };
    let split_cap = epsilon / b.value(target_item);

    let mut step = rat(1, 2);
    for _ in 0..MAX_HALVINGS {
        let perturbed = candidate(a, &order, &weights, &step);
        if let Some(bob_declaration) = perturbed {
            if verify(
                a,
                &bob_declaration,
                &order,
                target_pos,
                &target_split,
                &per_item_cap,
                &split_cap,
            ) {
                let denominator = common_denominator(a, &bob_declaration);
                return Ok(EpsilonNash {
                    profile: StrategyProfile {
                        alice: a.clone(),
                        bob: bob_declaration,
                    },
                    gap_bound: epsilon.clone(),
                    denominator,
                });
            }
        }
        step /= rat(2, 1);
    }
    Err(Error::ConstructionFailed)
}

/// The perturbed declaration, or `None` if a value would leave the positive
/// range at this step size.
fn candidate(
    a: &Valuation,
    order: &[usize],
    weights: &[Rational],
    step: &Rational,
) -> Option<Valuation> {
    let mut values = a.values().to_vec();
    let mut total_shift = Rational::zero();
    for (k, &item) in order.iter().enumerate() {
        let shift = step * &weights[k];
        total_shift += &shift;
        values[item] += shift;
        if !values[item].is_positive() {
            return None;
        }
    }
    debug_assert!(total_shift.is_zero(), "perturbations are zero-sum");
    Valuation::from_values(values).ok()
}

fn verify(
    a: &Valuation,
    bob: &Valuation,
    order: &[usize],
    target_pos: usize,
    target_split: &Rational,
    per_item_cap: &Rational,
    split_cap: &Rational,
) -> bool {
    // every perturbation strictly under the cap
    for i in 0..a.len() {
        let diff = a.value(i) - bob.value(i);
        if &diff.abs() >= per_item_cap {
            return false;
        }
    }
    // declared ratios a_j/ã_j strictly decreasing along the order
    for pair in order.windows(2) {
        let (i, j) = (pair[0], pair[1]);
        if a.value(i) * bob.value(j) <= a.value(j) * bob.value(i) {
            return false;
        }
    }
    // the boundary must stay on the targeted item, at a nearby fraction
    let (_, outcome) = adjusted_winner(a, bob, &TieBreakRule::Lexicographic);
    if outcome.permutation != order || outcome.boundary != target_pos {
        return false;
    }
    if target_split.is_positive() && !outcome.split.is_positive() {
        return false;
    }
    (&outcome.split - target_split).abs() < *split_cap
}

fn common_denominator(a: &Valuation, bob: &Valuation) -> BigInt {
    let mut denom = BigInt::one();
    for v in a.values().iter().chain(bob.values()) {
        denom = denom.lcm(v.denom());
    }
    denom
}
