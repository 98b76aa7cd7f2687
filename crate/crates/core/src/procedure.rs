//! The division procedure itself, in both of its formulations.
//!
//! Given declared valuations `x` (Alice) and `y` (Bob), the procedure sorts
//! the items by non-increasing ratio `x_i / y_i` and places a boundary so
//! that both players' declared utilities for their own sides are exactly
//! equal. At most one item is split. The literal two-phase formulation
//! (winner-take-all, then transfer until equitable) is provided alongside as
//! an independently coded route to the same allocation.

use std::cmp::Ordering;

use num::{One, Signed, Zero};

use crate::allocation::{Allocation, OrderedOutcome};
use crate::rational::Rational;
use crate::valuation::Valuation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Player {
    Alice,
    Bob,
}

impl Player {
    pub fn other(self) -> Self {
        match self {
            Player::Alice => Player::Bob,
            Player::Bob => Player::Alice,
        }
    }
}

impl std::fmt::Display for Player {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Player::Alice => write!(f, "alice"),
            Player::Bob => write!(f, "bob"),
        }
    }
}

/// How items with equal declared ratios are ordered.
///
/// `Informed` carries the designated player's true valuation: the rule is not
/// independent of the valuations, it arranges every tied run so that the
/// designated player's side of the boundary is worth as much as possible to
/// them.
///
/// `other_truth` optionally refines the choice among the designated player's
/// equally good orderings: when present, the one most valuable to the other
/// player is taken. On a finite point grid the other player cannot always
/// escape a hostile tie resolution by perturbing, so without the refinement
/// an equilibrium outcome can strand utility that an indifferent designated
/// player would happily concede. [`crate::strategy::Game`] fills the field in
/// automatically.
#[derive(Clone, Debug, PartialEq)]
pub enum TieBreakRule {
    Lexicographic,
    Informed {
        player: Player,
        truth: Valuation,
        other_truth: Option<Valuation>,
    },
}

impl TieBreakRule {
    /// Informed tie-breaking for `player` with no secondary refinement.
    pub fn informed(player: Player, truth: Valuation) -> Self {
        TieBreakRule::Informed {
            player,
            truth,
            other_truth: None,
        }
    }
}

/// Compares the declared ratios `x_i/y_i` and `x_j/y_j` by cross
/// multiplication, which stays exact and never forms the quotients.
fn ratio_cmp(x: &Valuation, y: &Valuation, i: usize, j: usize) -> Ordering {
    let lhs = x.value(i) * y.value(j);
    let rhs = x.value(j) * y.value(i);
    lhs.cmp(&rhs)
}

fn lexicographic_ratio_order(x: &Valuation, y: &Valuation) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..x.len()).collect();
    perm.sort_by(|&i, &j| ratio_cmp(x, y, j, i).then(i.cmp(&j)));
    perm
}

/// Sorts the items by non-increasing declared ratio, resolving ties according
/// to the rule: lexicographic puts lower indices first, informed delegates to
/// [`informed_tie_order`].
///
/// Panics if the valuations cover different numbers of items.
pub fn ratio_order(x: &Valuation, y: &Valuation, rule: &TieBreakRule) -> Vec<usize> {
    assert_eq!(x.len(), y.len(), "valuations must cover the same items");
    match rule {
        TieBreakRule::Lexicographic => lexicographic_ratio_order(x, y),
        TieBreakRule::Informed {
            player,
            truth,
            other_truth,
        } => informed_order_refined(x, y, truth, *player, other_truth.as_ref()),
    }
}

/// A ratio-consistent permutation that maximizes the designated player's true
/// utility of the resulting outcome.
///
/// Within a run of equal-ratio items the declared mass cut by the boundary is
/// independent of the run's internal order, so the designated player's side
/// fills like a fractional knapsack: sort the run by true value per unit of
/// declared mass, best items nearest that player's side. Runs that end up
/// wholly on one side are unaffected by their internal order, so the same
/// arrangement is applied everywhere. Ties in the density fall back to index
/// order, keeping the choice deterministic.
pub fn informed_tie_order(
    x: &Valuation,
    y: &Valuation,
    truth: &Valuation,
    player: Player,
) -> Vec<usize> {
    informed_order_refined(x, y, truth, player, None)
}

fn informed_order_refined(
    x: &Valuation,
    y: &Valuation,
    truth: &Valuation,
    player: Player,
    other_truth: Option<&Valuation>,
) -> Vec<usize> {
    assert_eq!(x.len(), y.len(), "valuations must cover the same items");
    assert_eq!(x.len(), truth.len(), "truth must cover the same items");
    if let Some(other) = other_truth {
        assert_eq!(x.len(), other.len(), "truth must cover the same items");
    }
    // true value per unit of declared mass: t_i / y_i versus t_j / y_j
    let density = |t: &Valuation, i: usize, j: usize| -> Ordering {
        let lhs = t.value(i) * y.value(j);
        let rhs = t.value(j) * y.value(i);
        lhs.cmp(&rhs)
    };
    // Alice's side is the left end, Bob's the right: each player's preferred
    // items drift toward their own side of any boundary.
    let toward = |p: Player, t: &Valuation, i: usize, j: usize| match p {
        Player::Alice => density(t, j, i),
        Player::Bob => density(t, i, j),
    };
    let mut perm: Vec<usize> = (0..x.len()).collect();
    perm.sort_by(|&i, &j| {
        ratio_cmp(x, y, j, i)
            .then_with(|| toward(player, truth, i, j))
            .then_with(|| match other_truth {
                Some(other) => toward(player.other(), other, i, j),
                None => Ordering::Equal,
            })
            .then(i.cmp(&j))
    });
    perm
}

/// Finds the unique boundary position and split fraction in `[0, 1)` at which
/// Alice's declared value of her prefix equals Bob's declared value of the
/// rest.
///
/// Alice's declared prefix value is strictly increasing and Bob's declared
/// suffix value strictly decreasing along the sweep (all values are strictly
/// positive), so the crossing exists and is unique; the half-open split range
/// makes the representation canonical.
pub fn equitable_boundary(x: &Valuation, y: &Valuation, perm: &[usize]) -> (usize, Rational) {
    assert_eq!(x.len(), y.len(), "valuations must cover the same items");
    assert_eq!(perm.len(), x.len(), "permutation must cover the items");
    let mut alice_prefix = Rational::zero();
    let mut bob_suffix = perm
        .iter()
        .fold(Rational::zero(), |acc, &i| acc + y.value(i));
    for (pos, &item) in perm.iter().enumerate() {
        // Split fraction solving  prefix + s·x_item = suffix − s·y_item.
        let split = (&bob_suffix - &alice_prefix) / (x.value(item) + y.value(item));
        if !split.is_negative() && split < Rational::one() {
            return (pos, split);
        }
        alice_prefix += x.value(item);
        bob_suffix -= y.value(item);
    }
    unreachable!("positive valuations always admit a boundary with split in [0,1)")
}

/// Runs the procedure in its boundary form: order the items by declared
/// ratio, then place the equitable boundary.
///
/// The outcome is equitable, envy-free, Pareto optimal, and minimally
/// fractional with respect to the declared valuations.
pub fn adjusted_winner(
    x: &Valuation,
    y: &Valuation,
    rule: &TieBreakRule,
) -> (Allocation, OrderedOutcome) {
    let permutation = ratio_order(x, y, rule);
    let (boundary, split) = equitable_boundary(x, y, &permutation);
    let outcome = OrderedOutcome {
        permutation,
        boundary,
        split,
    };
    (outcome.induced_allocation(), outcome)
}

/// The literal two-phase formulation.
///
/// Phase 1 hands every item to whichever player declared more for it, ties
/// going to Bob. Phase 2 transfers items (splitting at most one) from the
/// richer player to the poorer, least-contested first, until the declared
/// utilities are exactly equal. Whichever player leads after phase 1 is the
/// one who gives; the transfer direction mirrors accordingly.
///
/// Equals [`adjusted_winner`] on every input under the same tie handling;
/// the equivalence is exercised as a cross-check in the test suites.
pub fn two_phase_adjusted_winner(x: &Valuation, y: &Valuation, rule: &TieBreakRule) -> Allocation {
    assert_eq!(x.len(), y.len(), "valuations must cover the same items");
    let m = x.len();

    let mut alice: Vec<Rational> = (0..m)
        .map(|i| {
            if x.value(i) > y.value(i) {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
        .collect();

    let mut u_alice = x.utility(&alice).expect("same length");
    let mut u_bob = alice
        .iter()
        .enumerate()
        .filter(|(_, a)| a.is_zero())
        .fold(Rational::zero(), |acc, (i, _)| acc + y.value(i));

    let order = ratio_order(x, y, rule);
    if u_alice >= u_bob {
        // Alice leads: walk her items from the least favourable ratio upward.
        for &item in order.iter().rev() {
            if !alice[item].is_one() {
                continue;
            }
            if u_alice == u_bob {
                break;
            }
            let full_alice = &u_alice - x.value(item);
            let full_bob = &u_bob + y.value(item);
            if full_alice >= full_bob {
                alice[item] = Rational::zero();
                u_alice = full_alice;
                u_bob = full_bob;
            } else {
                // a fraction t handed over equalizes: u_a − t·x = u_b + t·y
                let t = (&u_alice - &u_bob) / (x.value(item) + y.value(item));
                alice[item] = Rational::one() - t;
                return Allocation::from_alice_shares(alice).expect("shares stay in range");
            }
        }
    } else {
        // Bob leads: mirror image, walking his items by decreasing ratio.
        for &item in order.iter() {
            if !alice[item].is_zero() {
                continue;
            }
            if u_alice == u_bob {
                break;
            }
            let full_bob = &u_bob - y.value(item);
            let full_alice = &u_alice + x.value(item);
            if full_bob >= full_alice {
                alice[item] = Rational::one();
                u_alice = full_alice;
                u_bob = full_bob;
            } else {
                let t = (&u_bob - &u_alice) / (x.value(item) + y.value(item));
                alice[item] = t;
                return Allocation::from_alice_shares(alice).expect("shares stay in range");
            }
        }
    }
    Allocation::from_alice_shares(alice).expect("shares stay in range")
}
