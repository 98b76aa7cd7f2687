//! Per-item values normalized to a unit total.

use std::fmt;
use std::hash::{Hash, Hasher};

use num::{BigInt, One, Signed, Zero};

use crate::error::Error;
use crate::rational::Rational;

/// A player's values for the items: strictly positive rationals summing to
/// exactly one. The discrete variant additionally remembers the integer point
/// counts the values came from.
///
/// Equality and hashing look at the normalized values only, so the same point
/// vector at any positive scale yields equal valuations.
#[derive(Clone)]
pub struct Valuation {
    values: Vec<Rational>,
    points: Option<Vec<u64>>,
}

impl Valuation {
    /// Normalizes a vector of positive point counts. The resulting values are
    /// `points[i] / total`, with the total recorded as the point budget.
    pub fn normalize(points: &[u64]) -> Result<Self, Error> {
        if points.is_empty() {
            return Err(Error::InvalidValuation(
                "at least one item is required".into(),
            ));
        }
        if points.iter().any(|&p| p == 0) {
            return Err(Error::InvalidValuation(
                "every item needs a positive point count".into(),
            ));
        }
        let total = points
            .iter()
            .try_fold(0u64, |acc, &p| acc.checked_add(p))
            .ok_or_else(|| Error::InvalidValuation("point total overflows".into()))?;
        let values = points
            .iter()
            .map(|&p| Rational::new(BigInt::from(p), BigInt::from(total)))
            .collect();
        Ok(Self {
            values,
            points: Some(points.to_vec()),
        })
    }

    /// Builds a valuation from exact values, which must be strictly positive
    /// and sum to exactly one.
    pub fn from_values(values: Vec<Rational>) -> Result<Self, Error> {
        if values.is_empty() {
            return Err(Error::InvalidValuation(
                "at least one item is required".into(),
            ));
        }
        if values.iter().any(|v| !v.is_positive()) {
            return Err(Error::InvalidValuation(
                "every value must be strictly positive".into(),
            ));
        }
        let sum: Rational = values.iter().fold(Rational::zero(), |acc, v| acc + v);
        if !sum.is_one() {
            return Err(Error::InvalidValuation(format!(
                "values must sum to exactly 1, got {sum}"
            )));
        }
        Ok(Self {
            values,
            points: None,
        })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn value(&self, item: usize) -> &Rational {
        &self.values[item]
    }

    /// The point counts this valuation was normalized from, if any.
    pub fn points(&self) -> Option<&[u64]> {
        self.points.as_deref()
    }

    pub fn point_total(&self) -> Option<u64> {
        self.points.as_ref().map(|p| p.iter().sum())
    }

    /// Additive utility of a fractional bundle: the dot product of the values
    /// with the bundle's per-item fractions.
    pub fn utility(&self, bundle: &[Rational]) -> Result<Rational, Error> {
        if bundle.len() != self.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                found: bundle.len(),
            });
        }
        Ok(self
            .values
            .iter()
            .zip(bundle)
            .fold(Rational::zero(), |acc, (v, w)| acc + v * w))
    }

    /// True when every value is an integer multiple of `1/denominator`, i.e.
    /// the valuation can be declared with that many points.
    pub fn is_representable(&self, denominator: u64) -> bool {
        let d = BigInt::from(denominator);
        self.values.iter().all(|v| (v * &d).is_integer())
    }
}

impl PartialEq for Valuation {
    fn eq(&self, other: &Self) -> bool {
        self.values == other.values
    }
}

impl Eq for Valuation {}

impl Hash for Valuation {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.values.hash(state);
    }
}

impl fmt::Debug for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Valuation{self}")
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}
