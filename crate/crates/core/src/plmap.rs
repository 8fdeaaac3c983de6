//! Piecewise-linear interval maps with exact rational data.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::pattern::Pattern;
use crate::Rational;

/// A continuous map affine on each `[x_i, x_{i+1}]` and constant outside
/// `[x_1, x_n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PLMap {
    breakpoints: Vec<Rational>,
    values: Vec<Rational>,
}

impl PLMap {
    pub fn new(breakpoints: Vec<Rational>, values: Vec<Rational>) -> Result<Self> {
        if breakpoints.is_empty() {
            return Err(Error::Empty);
        }
        if breakpoints.len() != values.len() {
            return Err(Error::InvalidArgument("breakpoint/value count mismatch".into()));
        }
        if breakpoints.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidBreakpoints);
        }
        Ok(PLMap { breakpoints, values })
    }

    pub fn breakpoints(&self) -> &[Rational] {
        &self.breakpoints
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let xs = &self.breakpoints;
        let n = xs.len();
        if x <= &xs[0] {
            return self.values[0].clone();
        }
        if x >= &xs[n - 1] {
            return self.values[n - 1].clone();
        }
        // first breakpoint strictly greater than x
        let j = xs.partition_point(|b| b <= x);
        let i = j - 1;
        let t = (x - &xs[i]) / (&xs[j] - &xs[i]);
        &self.values[i] + t * (&self.values[j] - &self.values[i])
    }

    /// Slope on `[x_i, x_{i+1}]` (0-based `i`).
    pub fn slope(&self, i: usize) -> Rational {
        (&self.values[i + 1] - &self.values[i]) / (&self.breakpoints[i + 1] - &self.breakpoints[i])
    }

    /// True when every breakpoint value stays inside `[x_1, x_n]`.
    pub fn is_self_map(&self) -> bool {
        let lo = &self.breakpoints[0];
        let hi = self.breakpoints.last().unwrap();
        self.values.iter().all(|v| v >= lo && v <= hi)
    }

    pub fn is_constant(&self) -> bool {
        self.values.iter().all(|v| (v - &self.values[0]).is_zero())
    }
}

/// The connect-the-dots map of a pattern: `x_i = i`, `f(x_i) = σ(i)`.
pub fn p_linear_map(pattern: &Pattern) -> PLMap {
    let int = |v: usize| Rational::from_integer((v as i64).into());
    PLMap {
        breakpoints: (1..=pattern.period()).map(int).collect(),
        values: pattern.images().iter().map(|&v| int(v)).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn connect_the_dots() {
        let two: Pattern = "2 1".parse().unwrap();
        let f = p_linear_map(&two);
        assert_eq!(f.breakpoints(), &[q(1, 1), q(2, 1)]);
        assert_eq!(f.values(), &[q(2, 1), q(1, 1)]);
        assert_eq!(f.eval(&q(3, 2)), q(3, 2));
        assert_eq!(f.eval(&q(5, 4)), q(7, 4));
        assert_eq!(f.eval(&q(-4, 1)), q(2, 1));

        let stefan: Pattern = "3 5 4 2 1".parse().unwrap();
        let f = p_linear_map(&stefan);
        assert_eq!(f.values(), &[3, 5, 4, 2, 1].map(|v| q(v, 1)));
        assert!(f.is_self_map());
        for i in 1..=5 {
            assert_eq!(f.eval(&q(i, 1)), q(stefan.image(i as usize) as i64, 1));
        }
        assert_eq!(f.slope(3), q(-1, 1));
    }

    #[test]
    fn the_cycle_is_a_cycle_with_its_pattern() {
        for p in crate::pattern::patterns_of_period(5) {
            let f = p_linear_map(&p);
            let mut x = q(1, 1);
            let mut orbit = Vec::new();
            for _ in 0..5 {
                orbit.push(x.clone());
                x = f.eval(&x);
            }
            assert_eq!(x, q(1, 1));
            assert_eq!(Pattern::from_orbit(&orbit).unwrap(), p);
        }
    }

    #[test]
    fn validation() {
        assert_eq!(PLMap::new(vec![], vec![]), Err(Error::Empty));
        assert_eq!(
            PLMap::new(vec![q(1, 1), q(1, 1)], vec![q(0, 1), q(0, 1)]),
            Err(Error::InvalidBreakpoints)
        );
        assert!(PLMap::new(vec![q(0, 1)], vec![q(0, 1), q(1, 1)]).is_err());
        let c = PLMap::new(vec![q(0, 1), q(1, 1)], vec![q(1, 2), q(1, 2)]).unwrap();
        assert!(c.is_constant());
    }
}
