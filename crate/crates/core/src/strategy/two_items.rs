//! Improving deviations for two-item instances with interleaved valuations.
//!
//! When `b_1 > a_1 > a_2 > b_2`, no profile of the continuous lexicographic
//! game is stable: whatever the players declare, one of them has a strictly
//! improving unilateral move. The generator below produces such a move by
//! case analysis on the declared first coordinates and verifies the gain
//! exactly before returning it.

use num::Signed;

use crate::error::Error;
use crate::procedure::{adjusted_winner, Player, TieBreakRule};
use crate::rational::rat;
use crate::strategy::{DeviationWitness, StrategyProfile};
use crate::valuation::Valuation;

/// Returns a strictly improving deviation from `profile` for one of the
/// players, with the gain verified exactly.
///
/// Requires two items valued `b_1 > a_1 > a_2 > b_2`, the lexicographic rule,
/// and continuous strategies; anything else is `NotApplicable`. The cases:
///
/// * differing declarations: Alice shrinks hers toward Bob's, moving the
///   boundary in her favour;
/// * equal declarations under one half: Bob outbids on item 1, staying under
///   one half, and captures it whole;
/// * equal declarations over one half: whichever player's stability bound is
///   strictly positive moves just inside it;
/// * equal declarations at exactly one half: Bob tilts toward item 1 by any
///   step under `(b_1 − b_2)/b_2`.
pub fn improving_deviation_two_items(
    a: &Valuation,
    b: &Valuation,
    profile: &StrategyProfile,
) -> Result<DeviationWitness, Error> {
    if a.len() != 2 || b.len() != 2 {
        return Err(Error::NotApplicable("exactly two items are required".into()));
    }
    if profile.alice.len() != 2 || profile.bob.len() != 2 {
        return Err(Error::NotApplicable(
            "profile must declare exactly two items".into(),
        ));
    }
    let (a1, a2) = (a.value(0), a.value(1));
    let (b1, b2) = (b.value(0), b.value(1));
    if !(b1 > a1 && a1 > a2 && a2 > b2) {
        return Err(Error::NotApplicable(
            "valuations must satisfy b1 > a1 > a2 > b2".into(),
        ));
    }

    let x = profile.alice.value(0).clone();
    let y = profile.bob.value(0).clone();
    let half = rat(1, 2);
    let one = rat(1, 1);

    let (player, first) = if x != y {
        // shrinking toward the opponent keeps the item order and moves the
        // boundary in Alice's favour
        (Player::Alice, (&x + &y) / rat(2, 1))
    } else if x < half {
        (Player::Bob, &x + (&half - &x) / rat(2, 1))
    } else if x > half {
        let bound_alice = rat(4, 1) * &x * (&x - a1) / (rat(2, 1) * &x - a1);
        let bound_bob = rat(4, 1) * &x * (b1 - &x) / (rat(2, 1) * &x - b1);
        let room = (&one - &x).min(rat(2, 1) * &x - &one);
        if bound_alice.is_positive() {
            (Player::Alice, &x - bound_alice.min(room) / rat(2, 1))
        } else {
            (Player::Bob, &x + bound_bob.min(room) / rat(2, 1))
        }
    } else {
        let bound = (b1 - b2) / b2;
        (Player::Bob, &half + bound.min(half.clone()) / rat(2, 1))
    };

    let deviation = Valuation::from_values(vec![first.clone(), &one - &first])
        .expect("case bounds keep the declaration strictly positive");

    let rule = TieBreakRule::Lexicographic;
    let before = adjusted_winner(&profile.alice, &profile.bob, &rule).0;
    let after = match player {
        Player::Alice => adjusted_winner(&deviation, &profile.bob, &rule).0,
        Player::Bob => adjusted_winner(&profile.alice, &deviation, &rule).0,
    };
    let truth = match player {
        Player::Alice => a,
        Player::Bob => b,
    };
    let (own_before, own_after) = match player {
        Player::Alice => (before.alice(), after.alice()),
        Player::Bob => (before.bob(), after.bob()),
    };
    let gain = truth.utility(own_after)? - truth.utility(own_before)?;
    assert!(
        gain.is_positive(),
        "case analysis guarantees a strict improvement"
    );
    Ok(DeviationWitness {
        player,
        deviation,
        gain,
    })
}
