//! The Sharkovsky ordering of the natural numbers.
//!
//! ```text
//! 1 < 2 < 4 < 8 < ... < 2^k < ... < 2^inf
//!   ... < 7·2^k < 5·2^k < 3·2^k < ... < 7·2 < 5·2 < 3·2 < ... < 7 < 5 < 3
//! ```
//!
//! Every natural number is stored as `2^k · m` with `m` odd, so comparisons
//! never factor twice.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A natural number `n = 2^k · m` with `m` odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SharkovskyKey {
    k: u32,
    m: u64,
}

impl SharkovskyKey {
    /// Decomposes `n >= 1`.
    pub fn new(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("0 is not a natural number".into()));
        }
        let k = n.trailing_zeros();
        Ok(SharkovskyKey { k, m: n >> k })
    }

    pub fn exponent(&self) -> u32 {
        self.k
    }

    pub fn odd_part(&self) -> u64 {
        self.m
    }

    pub fn value(&self) -> u64 {
        self.m << self.k
    }

    pub fn is_power_of_two(&self) -> bool {
        self.m == 1
    }
}

/// An element of `N ∪ {2^inf}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SharkovskyElement {
    Finite(SharkovskyKey),
    TwoInfinity,
}

impl SharkovskyElement {
    pub fn finite(n: u64) -> Result<Self> {
        SharkovskyKey::new(n).map(SharkovskyElement::Finite)
    }

    pub fn value(&self) -> Option<u64> {
        match self {
            SharkovskyElement::Finite(key) => Some(key.value()),
            SharkovskyElement::TwoInfinity => None,
        }
    }
}

impl From<SharkovskyKey> for SharkovskyElement {
    fn from(key: SharkovskyKey) -> Self {
        SharkovskyElement::Finite(key)
    }
}

impl fmt::Display for SharkovskyElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SharkovskyElement::Finite(key) => write!(f, "{}", key.value()),
            SharkovskyElement::TwoInfinity => f.write_str("2inf"),
        }
    }
}

impl FromStr for SharkovskyElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("2inf") || s == "2^inf" || s == "2^∞" {
            return Ok(SharkovskyElement::TwoInfinity);
        }
        let n: u64 = s
            .parse()
            .map_err(|_| Error::Parse(format!("not a natural number or 2inf: {s:?}")))?;
        SharkovskyElement::finite(n)
    }
}

fn compare_keys(a: SharkovskyKey, b: SharkovskyKey) -> Ordering {
    match (a.m == 1, b.m == 1) {
        (true, true) => a.k.cmp(&b.k),
        (true, false) => Ordering::Less,
        (false, true) => Ordering::Greater,
        // Lower rows (larger k) sit below; inside a row larger odd parts sit below.
        (false, false) => b.k.cmp(&a.k).then(b.m.cmp(&a.m)),
    }
}

/// Compares two elements in the Sharkovsky ordering `<_s`.
pub fn sharkovsky_compare(a: SharkovskyElement, b: SharkovskyElement) -> Ordering {
    use SharkovskyElement::*;
    match (a, b) {
        (TwoInfinity, TwoInfinity) => Ordering::Equal,
        (TwoInfinity, Finite(key)) => {
            if key.is_power_of_two() {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        }
        (Finite(_), TwoInfinity) => sharkovsky_compare(b, a).reverse(),
        (Finite(x), Finite(y)) => compare_keys(x, y),
    }
}

impl PartialOrd for SharkovskyElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SharkovskyElement {
    fn cmp(&self, other: &Self) -> Ordering {
        sharkovsky_compare(*self, *other)
    }
}

/// Compares plain naturals (both must be >= 1).
pub fn compare_naturals(a: u64, b: u64) -> Ordering {
    let a = SharkovskyKey::new(a).expect("natural number");
    let b = SharkovskyKey::new(b).expect("natural number");
    compare_keys(a, b)
}

/// `S(n) ∩ [1, cap]` in ascending numeric order.
pub fn initial_segment(n: SharkovskyElement, cap: u64) -> Vec<u64> {
    (1..=cap)
        .filter(|&m| {
            let key = SharkovskyKey { k: m.trailing_zeros(), m: m >> m.trailing_zeros() };
            sharkovsky_compare(SharkovskyElement::Finite(key), n) != Ordering::Greater
        })
        .collect()
}

/// Finds an element `n` of `N ∪ {2^inf}` with `S(n) ∩ [1, cap] == set`.
///
/// The answer is only determined up to what the window `[1, cap]` can see, so
/// the smallest matching candidate is returned: a finite `n <= cap`, else
/// `2^inf` when the set is exactly the powers of two up to `cap`.
pub fn match_initial_segment(set: &[u64], cap: u64) -> Option<SharkovskyElement> {
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let candidates = (1..=cap)
        .map(|n| SharkovskyElement::finite(n).unwrap())
        .chain(std::iter::once(SharkovskyElement::TwoInfinity));
    candidates.into_iter().find(|&candidate| initial_segment(candidate, cap) == sorted)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(n: u64) -> SharkovskyElement {
        SharkovskyElement::finite(n).unwrap()
    }

    #[test]
    fn display_rows() {
        assert_eq!(sharkovsky_compare(el(2), el(3)), Ordering::Less);
        assert_eq!(sharkovsky_compare(el(6), el(7)), Ordering::Less);
        assert_eq!(sharkovsky_compare(el(12), el(10)), Ordering::Less);
        assert_eq!(sharkovsky_compare(el(5), el(3)), Ordering::Less);
        assert_eq!(sharkovsky_compare(el(1), el(2)), Ordering::Less);
        assert_eq!(sharkovsky_compare(el(9), el(9)), Ordering::Equal);
    }

    #[test]
    fn two_infinity_placement() {
        let inf = SharkovskyElement::TwoInfinity;
        for k in 0..40 {
            assert_eq!(sharkovsky_compare(el(1 << k), inf), Ordering::Less);
        }
        for n in [3u64, 6, 12, 5 << 20, 7] {
            assert_eq!(sharkovsky_compare(inf, el(n)), Ordering::Less);
        }
        assert_eq!(sharkovsky_compare(inf, inf), Ordering::Equal);
    }

    #[test]
    fn key_roundtrip() {
        for n in 1..=1000u64 {
            let key = SharkovskyKey::new(n).unwrap();
            assert_eq!(key.odd_part() % 2, 1);
            assert_eq!(key.value(), n);
        }
        assert!(SharkovskyKey::new(0).is_err());
    }

    #[test]
    fn segments() {
        assert_eq!(initial_segment(el(2), 10), vec![1, 2]);
        assert_eq!(initial_segment(SharkovskyElement::TwoInfinity, 20), vec![1, 2, 4, 8, 16]);
        assert_eq!(initial_segment(el(6), 12), vec![1, 2, 4, 6, 8, 10, 12]);
        assert_eq!(initial_segment(el(3), 7), (1..=7).collect::<Vec<_>>());
        assert_eq!(initial_segment(el(5), 6), vec![1, 2, 4, 5, 6]);
    }

    #[test]
    fn matching_segments() {
        assert_eq!(match_initial_segment(&[1, 2], 12), Some(el(2)));
        assert_eq!(match_initial_segment(&[1, 2, 4, 8], 12), Some(el(8)));
        assert_eq!(match_initial_segment(&[1, 2, 4, 8], 8), Some(el(8)));
        assert_eq!(match_initial_segment(&[1, 3], 12), None);
        let all: Vec<u64> = (1..=12).collect();
        assert_eq!(match_initial_segment(&all, 12), Some(el(3)));
    }

    #[test]
    fn parse_elements() {
        assert_eq!("2inf".parse::<SharkovskyElement>().unwrap(), SharkovskyElement::TwoInfinity);
        assert_eq!("12".parse::<SharkovskyElement>().unwrap(), el(12));
        assert!("0".parse::<SharkovskyElement>().is_err());
        assert!("x".parse::<SharkovskyElement>().is_err());
    }
}
