//! Fractional assignments of the items to the two players.

use num::{One, Signed, Zero};

use crate::error::Error;
use crate::rational::Rational;

/// An item-wise complementary split: `alice[i] + bob[i] == 1` for every item,
/// all entries in `[0, 1]`. Nothing is thrown away.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Allocation {
    alice: Vec<Rational>,
    bob: Vec<Rational>,
}

impl Allocation {
    pub fn new(alice: Vec<Rational>, bob: Vec<Rational>) -> Result<Self, Error> {
        if alice.len() != bob.len() {
            return Err(Error::DimensionMismatch {
                expected: alice.len(),
                found: bob.len(),
            });
        }
        for (a, b) in alice.iter().zip(&bob) {
            if a.is_negative() || b.is_negative() || !(a + b).is_one() {
                return Err(Error::InvalidValuation(
                    "allocation shares must lie in [0,1] and sum to 1 per item".into(),
                ));
            }
        }
        Ok(Self { alice, bob })
    }

    /// Builds the allocation from Alice's shares; Bob receives the rest.
    pub fn from_alice_shares(alice: Vec<Rational>) -> Result<Self, Error> {
        let bob: Vec<Rational> = alice.iter().map(|a| Rational::one() - a).collect();
        Self::new(alice, bob)
    }

    pub fn len(&self) -> usize {
        self.alice.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alice.is_empty()
    }

    pub fn alice(&self) -> &[Rational] {
        &self.alice
    }

    pub fn bob(&self) -> &[Rational] {
        &self.bob
    }

    /// Items held partly by both players.
    pub fn split_items(&self) -> Vec<usize> {
        self.alice
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero() && !a.is_one())
            .map(|(i, _)| i)
            .collect()
    }
}

/// The canonical boundary form of a procedure outcome: the items arranged by
/// non-increasing declared ratio, Alice taking everything left of a boundary.
///
/// Alice receives `permutation[..boundary]` in full plus `split` of
/// `permutation[boundary]`; Bob receives the rest. `split` lies in `[0, 1)`,
/// so a whole-prefix outcome is always written with a zero split at the first
/// item Bob fully owns, never with a full split at the previous one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedOutcome {
    pub permutation: Vec<usize>,
    pub boundary: usize,
    pub split: Rational,
}

impl OrderedOutcome {
    pub fn induced_allocation(&self) -> Allocation {
        let m = self.permutation.len();
        let mut alice = vec![Rational::zero(); m];
        for &item in &self.permutation[..self.boundary] {
            alice[item] = Rational::one();
        }
        alice[self.permutation[self.boundary]] = self.split.clone();
        Allocation::from_alice_shares(alice).expect("boundary form induces valid shares")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn complementary_shares_are_enforced() {
        assert!(Allocation::new(vec![rat(1, 2)], vec![rat(1, 2)]).is_ok());
        assert!(Allocation::new(vec![rat(1, 2)], vec![rat(1, 3)]).is_err());
        assert!(Allocation::new(vec![rat(3, 2)], vec![rat(-1, 2)]).is_err());
    }

    #[test]
    fn split_items_counts_fractional_entries() {
        let w = Allocation::from_alice_shares(vec![rat(1, 1), rat(1, 11), rat(0, 1)]).unwrap();
        assert_eq!(w.split_items(), vec![1]);
    }

    #[test]
    fn boundary_form_unrolls_to_shares() {
        let outcome = OrderedOutcome {
            permutation: vec![2, 0, 1],
            boundary: 1,
            split: rat(1, 3),
        };
        let w = outcome.induced_allocation();
        assert_eq!(w.alice(), &[rat(1, 3), rat(0, 1), rat(1, 1)][..]);
        assert_eq!(w.bob(), &[rat(2, 3), rat(1, 1), rat(0, 1)][..]);
    }
}
