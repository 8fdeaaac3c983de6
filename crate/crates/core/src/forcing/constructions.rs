//! Patterns realizing prescribed period sets.

use crate::error::{Error, Result};
use crate::pattern::Pattern;
use crate::plmap::{p_linear_map, PLMap};
use crate::sharkovsky::SharkovskyElement;

/// The Štefan cycle of odd period `m >= 3`, spiralling out from the centre
/// `c = (m+1)/2`:
/// `σ(c) = c+1`, `σ(c+j) = c-j`, `σ(c-j) = c+j+1` for `1 <= j < k`,
/// `σ(c+k) = c-k`, `σ(c-k) = c`, where `k = (m-1)/2`.
pub fn stefan_pattern(m: usize) -> Result<Pattern> {
    if m < 3 || m.is_multiple_of(2) {
        return Err(Error::InvalidStefanOrder(m));
    }
    let c = m.div_ceil(2);
    let k = (m - 1) / 2;
    let mut images = vec![0; m];
    let mut set = |i: usize, v: usize| images[i - 1] = v;
    set(c, c + 1);
    for j in 1..k {
        set(c + j, c - j);
        set(c - j, c + j + 1);
    }
    set(c + k, c - k);
    set(c - k, c);
    Pattern::new(images)
}

/// Period-doubling: the left half `{1..n}` is sent order-reversingly onto the
/// right half, and the right half follows `σ` back, so `f^2` restricted to
/// the left half is `σ`. Periods of the P-linear map become `{1}` plus twice
/// the old ones.
pub fn double_pattern(pattern: &Pattern) -> Pattern {
    let n = pattern.period();
    let mut images = vec![0; 2 * n];
    for i in 1..=n {
        images[i - 1] = 2 * n + 1 - i;
        images[2 * n - i] = pattern.image(i);
    }
    Pattern::new(images).expect("the halves alternate along one cycle")
}

/// `double^k(stefan(m))` for `n = 2^k m` with `m` odd and `> 1`, or
/// `double^k([1])` for `n = 2^k`.
pub fn realizing_pattern(n: SharkovskyElement) -> Result<Pattern> {
    let key = match n {
        SharkovskyElement::Finite(key) => key,
        SharkovskyElement::TwoInfinity => return Err(Error::TwoInfinityUnsupported),
    };
    let mut p = if key.is_power_of_two() {
        Pattern::fixed_point()
    } else {
        stefan_pattern(key.odd_part() as usize)?
    };
    for _ in 0..key.exponent() {
        p = double_pattern(&p);
    }
    Ok(p)
}

/// An interval map whose set of periods is exactly `S(n)`.
pub fn realize_period_set(n: SharkovskyElement) -> Result<PLMap> {
    realizing_pattern(n).map(|p| p_linear_map(&p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forcing::periods;
    use crate::pattern::patterns_of_period;
    use crate::sharkovsky::initial_segment;

    #[test]
    fn stefan_instances() {
        assert_eq!(stefan_pattern(3).unwrap().images(), &[2, 3, 1]);
        assert_eq!(stefan_pattern(5).unwrap().images(), &[3, 5, 4, 2, 1]);
        let seven = stefan_pattern(7).unwrap();
        assert_eq!(seven.images(), &[4, 7, 6, 5, 3, 2, 1]);
        assert_eq!(seven.orbit_from_one(), vec![1, 4, 5, 3, 6, 2, 7]);
        for m in (3..40).step_by(2) {
            assert_eq!(stefan_pattern(m).unwrap().period(), m);
        }
        assert_eq!(stefan_pattern(4), Err(Error::InvalidStefanOrder(4)));
        assert_eq!(stefan_pattern(1), Err(Error::InvalidStefanOrder(1)));
    }

    #[test]
    fn doubling() {
        assert_eq!(double_pattern(&Pattern::fixed_point()).images(), &[2, 1]);
        let four = double_pattern(&"2 1".parse().unwrap());
        assert_eq!(four.period(), 4);
        assert_eq!(periods(&four, 8), vec![1, 2, 4]);
        for n in 1..=5 {
            for p in patterns_of_period(n) {
                let d = double_pattern(&p);
                assert_eq!(d.period(), 2 * n);
                let mut expected = vec![1];
                expected.extend(periods(&p, 6).into_iter().map(|k| 2 * k));
                expected.sort();
                assert_eq!(periods(&d, 12), expected, "{p}");
            }
        }
    }

    #[test]
    fn realizations() {
        let el = |n| SharkovskyElement::finite(n).unwrap();
        assert_eq!(realizing_pattern(el(3)).unwrap().images(), &[2, 3, 1]);
        let four = realizing_pattern(el(4)).unwrap();
        assert_eq!(periods(&four, 10), vec![1, 2, 4]);
        let six = realizing_pattern(el(6)).unwrap();
        assert_eq!(six, double_pattern(&stefan_pattern(3).unwrap()));
        assert_eq!(periods(&six, 12), initial_segment(el(6), 12));
        assert_eq!(realize_period_set(SharkovskyElement::TwoInfinity), Err(Error::TwoInfinityUnsupported));
        let f = realize_period_set(el(3)).unwrap();
        assert_eq!(f.values().len(), 3);
    }
}
