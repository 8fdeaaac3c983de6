//! Over-rotation pairs of interval cycles and their forcing order.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::forcing::forced_cycles;
use crate::pattern::Pattern;
use crate::sharkovsky::compare_naturals;
use crate::Rational;

/// `(p, q)`: `q` the period, `p` half the number of sign changes of
/// `f(x) - x` along the orbit. Kept unreduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OverRotationPair {
    p: u64,
    q: u64,
}

impl OverRotationPair {
    pub fn new(p: u64, q: u64) -> Result<Self> {
        if q < 2 {
            return Err(Error::FixedPointHasNoPair);
        }
        if p == 0 || 2 * p > q {
            return Err(Error::InvalidArgument(format!("({p},{q}) needs 1 <= p <= q/2")));
        }
        Ok(OverRotationPair { p, q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// `p/q` in lowest terms.
    pub fn number(&self) -> Rational {
        Rational::new(BigInt::from(self.p), BigInt::from(self.q))
    }
}

impl fmt::Display for OverRotationPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// Outcome of comparing two over-rotation pairs in the forcing order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrpOrdering {
    AForcesB,
    BForcesA,
    Equal,
}

/// Counts sign changes of `σ(x) - x` along the orbit `x, σ(x), ..` cyclically.
fn sign_changes(pattern: &Pattern) -> usize {
    let orbit = pattern.orbit_from_one();
    let up: Vec<bool> = orbit.iter().map(|&x| pattern.image(x) > x).collect();
    let q = up.len();
    (0..q).filter(|&t| up[t] != up[(t + 1) % q]).count()
}

pub fn over_rotation_pair(pattern: &Pattern) -> Result<OverRotationPair> {
    if pattern.period() < 2 {
        return Err(Error::FixedPointHasNoPair);
    }
    let m = sign_changes(pattern);
    debug_assert!(m.is_multiple_of(2));
    OverRotationPair::new((m / 2) as u64, pattern.period() as u64)
}

pub fn over_rotation_number(pattern: &Pattern) -> Result<Rational> {
    over_rotation_pair(pattern).map(|pair| pair.number())
}

/// Forcing between over-rotation pairs: the smaller over-rotation number
/// forces the larger; on equal numbers with reduced denominator `k` the pair
/// whose `q/k` is Sharkovsky-greater forces the other.
pub fn orp_compare(a: OverRotationPair, b: OverRotationPair) -> OrpOrdering {
    let lhs = u128::from(a.p) * u128::from(b.q);
    let rhs = u128::from(b.p) * u128::from(a.q);
    match lhs.cmp(&rhs) {
        Ordering::Less => OrpOrdering::AForcesB,
        Ordering::Greater => OrpOrdering::BForcesA,
        Ordering::Equal => {
            let k = a.q / a.p.gcd(&a.q);
            match compare_naturals(a.q / k, b.q / k) {
                Ordering::Greater => OrpOrdering::AForcesB,
                Ordering::Less => OrpOrdering::BForcesA,
                Ordering::Equal => OrpOrdering::Equal,
            }
        }
    }
}

/// Over-rotation numbers of the cycles of period `2..=cap` forced by `pattern`.
pub fn over_rotation_spectrum(pattern: &Pattern, cap: usize) -> BTreeSet<Rational> {
    forced_cycles(pattern, cap)
        .iter()
        .filter(|p| p.period() >= 2)
        .map(|p| over_rotation_number(p).expect("period >= 2"))
        .collect()
}
