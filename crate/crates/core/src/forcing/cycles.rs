//! Exact periodic orbits of P-linear maps.
//!
//! On the P-interval `[i, i+1]` the P-linear map is `x ↦ s_i x + c_i` with
//! integer `s_i = σ(i+1) - σ(i)` and `c_i`. Composing the branches along a
//! loop of length `L` gives an integer affine map `x ↦ a x + b` that sends the
//! points following the loop onto the first interval. Hence:
//!
//! * `|a| > 1`: a single fixed point `b / (1 - a)` that follows the loop;
//! * `a = 1`: the loop covers its first interval isometrically and every
//!   interior point has period `L` (all with the same pattern);
//! * `a = -1`: the midpoint is fixed, and every other interior point has
//!   period `2L` along the doubled loop.
//!
//! Every point of an orbit shares one denominator, so orbits are tracked as
//! integer numerators over a common denominator.

use std::collections::BTreeSet;
use std::ops::ControlFlow;
use std::sync::atomic::{AtomicBool, Ordering};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use rayon::prelude::*;

use super::loops::{walk_lyndon_loops_from, Loop};
use crate::markov::{markov_graph, TransitionMatrix};
use crate::pattern::Pattern;
use crate::Rational;

/// A periodic orbit with exact rational points.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ExactCycle {
    /// Dynamical order, starting from the leftmost point.
    pub points: Vec<Rational>,
    pub period: usize,
    pub pattern: Pattern,
}

trait OrbitInt: Clone + Ord + Integer + Signed + From<i64> + Send + Sync {
    fn to_big(&self) -> BigInt;
}

impl OrbitInt for i128 {
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl OrbitInt for BigInt {
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

/// The branch data of a P-linear map.
pub(crate) struct MarkovMap {
    pattern: Pattern,
    slope: Vec<i64>,
    intercept: Vec<i64>,
    matrix: TransitionMatrix,
}

struct Orbit<T> {
    numerators: Vec<T>,
    denominator: T,
}

impl MarkovMap {
    pub(crate) fn new(pattern: &Pattern) -> Self {
        let n = pattern.period();
        let img = |i: usize| pattern.image(i) as i64;
        let slope: Vec<i64> = (1..n).map(|i| img(i + 1) - img(i)).collect();
        let intercept = (1..n).map(|i| img(i) - slope[i - 1] * i as i64).collect();
        MarkovMap { pattern: pattern.clone(), slope, intercept, matrix: markov_graph(pattern) }
    }

    fn period(&self) -> usize {
        self.pattern.period()
    }

    /// Whether loops up to `max_len` are safe in `i128`.
    fn fits_i128(&self, max_len: usize) -> bool {
        let n = self.period() as f64;
        let steep = self.slope.iter().map(|s| s.unsigned_abs()).max().unwrap_or(1).max(2) as f64;
        (4.0 * n * n * n).log2() + max_len as f64 * steep.log2() + 2.0 < 120.0
    }

    fn compose<T: OrbitInt>(&self, word: &[usize]) -> (T, T) {
        let mut a = T::one();
        let mut b = T::zero();
        for &v in word {
            let s = T::from(self.slope[v]);
            a = s.clone() * a;
            b = s * b + T::from(self.intercept[v]);
        }
        (a, b)
    }

    /// The orbit of minimal period `word.len()` following `word`, if any.
    fn resolve<T: OrbitInt>(&self, word: &[usize]) -> Option<Orbit<T>> {
        let len = word.len();
        let root = Loop::new(word.to_vec()).root_len();
        let first = T::from(word[0] as i64 + 1);
        let (start, den) = if root == len {
            let (a, b) = self.compose::<T>(word);
            if a.is_one() {
                if !b.is_zero() {
                    return None;
                }
                (first * T::from(2) + T::one(), T::from(2))
            } else {
                let den = T::one() - a;
                if den.is_negative() {
                    (-b, -den)
                } else {
                    (b, den)
                }
            }
        } else if len == 2 * root {
            let (a, _) = self.compose::<T>(&word[..root]);
            if a != -T::one() {
                return None;
            }
            (first * T::from(4) + T::one(), T::from(4))
        } else {
            return None;
        };

        let mut numerators = Vec::with_capacity(len);
        let mut x = start.clone();
        for &v in word {
            let left = T::from(v as i64 + 1) * den.clone();
            if x < left || x > left + den.clone() {
                return None;
            }
            numerators.push(x.clone());
            x = T::from(self.slope[v]) * x + T::from(self.intercept[v]) * den.clone();
        }
        if x != start {
            return None;
        }
        if numerators[1..].contains(&start) {
            return None;
        }
        Some(Orbit { numerators, denominator: den })
    }

    fn cycle_of<T: OrbitInt>(&self, orbit: &Orbit<T>) -> ExactCycle {
        let pattern = Pattern::from_orbit(&orbit.numerators).expect("distinct orbit points");
        let den = orbit.denominator.to_big();
        let lead = (0..orbit.numerators.len())
            .min_by(|&a, &b| orbit.numerators[a].cmp(&orbit.numerators[b]))
            .unwrap();
        let n = orbit.numerators.len();
        let points = (0..n)
            .map(|i| Rational::new(orbit.numerators[(lead + i) % n].to_big(), den.clone()))
            .collect();
        ExactCycle { points, period: n, pattern }
    }

    fn own_cycle(&self) -> ExactCycle {
        let orbit = self.pattern.orbit_from_one();
        ExactCycle {
            points: orbit.iter().map(|&i| Rational::from_integer(BigInt::from(i))).collect(),
            period: self.period(),
            pattern: self.pattern.clone(),
        }
    }

    fn resolve_cycle(&self, word: &[usize]) -> Option<ExactCycle> {
        if self.fits_i128(word.len()) {
            self.resolve::<i128>(word).map(|o| self.cycle_of(&o))
        } else {
            self.resolve::<BigInt>(word).map(|o| self.cycle_of(&o))
        }
    }

    /// Calls `visit` for a representative of every cycle family of period
    /// `<= max_period`, other than the defining cycle itself. Parallel over
    /// the first vertex of each loop.
    fn collect_cycles<R, F>(&self, max_period: usize, visit: F) -> Vec<R>
    where
        R: Send,
        F: Fn(&ExactCycle) -> Option<R> + Sync,
    {
        (0..self.matrix.size())
            .into_par_iter()
            .flat_map_iter(|start| {
                let mut out = Vec::new();
                let mut doubled = Vec::with_capacity(2 * max_period);
                let _ = walk_lyndon_loops_from::<()>(&self.matrix, start, 1, max_period, &mut |w| {
                    if let Some(c) = self.resolve_cycle(w) {
                        out.extend(visit(&c));
                    }
                    if 2 * w.len() <= max_period {
                        doubled.clear();
                        doubled.extend_from_slice(w);
                        doubled.extend_from_slice(w);
                        if let Some(c) = self.resolve_cycle(&doubled) {
                            out.extend(visit(&c));
                        }
                    }
                    ControlFlow::Continue(())
                });
                out
            })
            .collect()
    }

    fn has_period(&self, len: usize) -> bool {
        if len == self.period() {
            return true;
        }
        let found = AtomicBool::new(false);
        (0..self.matrix.size()).into_par_iter().for_each(|start| {
            if found.load(Ordering::Relaxed) {
                return;
            }
            let probe = |w: &[usize], twice: bool| {
                if found.load(Ordering::Relaxed) {
                    return ControlFlow::Break(());
                }
                let word: Vec<usize> =
                    if twice { w.iter().chain(w.iter()).copied().collect() } else { w.to_vec() };
                if self.resolve_cycle(&word).is_some() {
                    found.store(true, Ordering::Relaxed);
                    return ControlFlow::Break(());
                }
                ControlFlow::Continue(())
            };
            let _ = walk_lyndon_loops_from(&self.matrix, start, len, len, &mut |w| probe(w, false));
            if len.is_multiple_of(2) {
                let half = len / 2;
                let _ =
                    walk_lyndon_loops_from(&self.matrix, start, half, half, &mut |w| probe(w, true));
            }
        });
        found.into_inner()
    }
}

/// The cycle of minimal period `loop.len()` whose itinerary through the
/// P-intervals of `pattern`'s P-linear map is exactly `lp`.
///
/// Loops whose composed branch has slope `1` bound a whole interval of such
/// cycles; the midpoint of the first P-interval is returned as representative.
/// A loop that is a square `u u` resolves only when the branch along `u` has
/// slope `-1`. Spurious loops and loops that only retrace a shorter orbit give
/// `None`.
pub fn resolve_loop(pattern: &Pattern, lp: &Loop) -> Option<ExactCycle> {
    let map = MarkovMap::new(pattern);
    if !lp.is_valid_in(&map.matrix) {
        return None;
    }
    map.resolve_cycle(lp.vertices())
}

/// One representative per cycle family of the P-linear map, periods up to
/// `max_period`, sorted and deduplicated. The defining cycle is included.
pub fn exact_cycles(pattern: &Pattern, max_period: usize) -> Vec<ExactCycle> {
    let map = MarkovMap::new(pattern);
    let mut set: BTreeSet<ExactCycle> =
        map.collect_cycles(max_period, |c| Some(c.clone())).into_iter().collect();
    if pattern.period() <= max_period {
        set.insert(map.own_cycle());
    }
    let mut out: Vec<ExactCycle> = set.into_iter().collect();
    out.sort_by(|a, b| a.period.cmp(&b.period).then_with(|| a.cmp(b)));
    out
}

/// Patterns of all cycles of period `<= max_period` of the P-linear map of
/// `pattern`, which are exactly the patterns it forces up to that period.
pub fn forced_cycles(pattern: &Pattern, max_period: usize) -> BTreeSet<Pattern> {
    let map = MarkovMap::new(pattern);
    let mut set: BTreeSet<Pattern> =
        map.collect_cycles(max_period, |c| Some(c.pattern.clone())).into_iter().collect();
    if pattern.period() <= max_period {
        set.insert(pattern.clone());
    }
    set
}

/// `a` forces `b`.
pub fn forces(a: &Pattern, b: &Pattern) -> bool {
    a == b || forced_cycles(a, b.period()).contains(b)
}

/// Minimal periods of all cycles of the P-linear map, up to `cap`.
pub fn periods(pattern: &Pattern, cap: usize) -> Vec<u64> {
    let map = MarkovMap::new(pattern);
    if pattern.period() == 1 {
        return if cap >= 1 { vec![1] } else { Vec::new() };
    }
    (1..=cap).filter(|&len| map.has_period(len)).map(|len| len as u64).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::patterns_of_period;
    use crate::plmap::p_linear_map;

    fn pat(s: &str) -> Pattern {
        s.parse().unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn two_cycle_fixed_point() {
        let c = resolve_loop(&pat("2 1"), &Loop::new(vec![0])).unwrap();
        assert_eq!(c.points, vec![q(3, 2)]);
        assert_eq!(c.period, 1);
        assert_eq!(c.pattern, Pattern::fixed_point());
        // the doubled loop is the family of 2-cycles {x, 3 - x}
        let c = resolve_loop(&pat("2 1"), &Loop::new(vec![0, 0])).unwrap();
        assert_eq!(c.points, vec![q(5, 4), q(7, 4)]);
        assert_eq!(c.pattern, pat("2 1"));
    }

    #[test]
    fn period_three_loops() {
        let p = pat("2 3 1");
        let c = resolve_loop(&p, &Loop::new(vec![1])).unwrap();
        assert_eq!(c.points, vec![q(7, 3)]);
        let c = resolve_loop(&p, &Loop::new(vec![0, 1, 1])).unwrap();
        assert_eq!(c.period, 3);
        // The loop (1 2 2) is P's own itinerary: the orbit is the 3-cycle
        // 1 -> 2 -> 3, whose first point lies on the boundary of I_1.
        assert_eq!(c.points, vec![q(1, 1), q(2, 1), q(3, 1)]);
        assert_eq!(c.pattern, p);
        // (1 1) is not a walk in the graph
        assert!(resolve_loop(&p, &Loop::new(vec![0])).is_none());
    }

    // Float oracle: scan a fine grid for points with |f^L(x) - x| small,
    // refine by bisection on f^L(x) - x, and round to the nearest fraction
    // with denominator |1 - a| for the loop's slope product a.
    #[test]
    fn float_orbit_search_agrees_on_period_three() {
        let p = pat("3 5 4 2 1");
        let f = |x: f64| {
            let i = (x.floor() as usize).clamp(1, 4);
            let (a, b) = (p.image(i) as f64, p.image(i + 1) as f64);
            a + (b - a) * (x - i as f64)
        };
        let f3 = |x: f64| f(f(f(x)));
        let mut roots = Vec::new();
        let steps = 40_000;
        for k in 0..steps {
            let (x0, x1) = (1.0 + 4.0 * k as f64 / steps as f64, 1.0 + 4.0 * (k + 1) as f64 / steps as f64);
            let (g0, g1) = (f3(x0) - x0, f3(x1) - x1);
            if g0 == 0.0 || g0 * g1 < 0.0 {
                roots.push(x0);
            }
        }
        // Stefan 5 has no period-3 orbit: every solution of f^3(x) = x is a fixed point.
        let fixed: Vec<f64> = roots.iter().map(|&x| f(x)).collect();
        for (x, fx) in roots.iter().zip(fixed) {
            assert!((x - fx).abs() < 1e-3, "{x} is not a fixed point");
        }
        assert!(!periods(&p, 5).contains(&3));
    }

    #[test]
    fn forced_sets() {
        let fixed = Pattern::fixed_point();
        let two = pat("2 1");
        let three = pat("2 3 1");
        assert_eq!(forced_cycles(&two, 2), BTreeSet::from([fixed.clone(), two.clone()]));
        assert_eq!(forced_cycles(&three, 2), BTreeSet::from([fixed.clone(), two.clone()]));
        assert!(forces(&three, &two));
        assert!(forces(&three, &three));
        assert!(!forces(&two, &three));
        assert_eq!(forced_cycles(&fixed, 5), BTreeSet::from([fixed]));
    }

    #[test]
    fn period_sets() {
        assert_eq!(periods(&pat("2 1"), 10), vec![1, 2]);
        assert_eq!(periods(&pat("2 3 1"), 10), (1..=10).collect::<Vec<_>>());
        assert_eq!(periods(&pat("3 5 4 2 1"), 10), vec![1, 2, 4, 5, 6, 7, 8, 9, 10]);
        assert_eq!(periods(&Pattern::fixed_point(), 10), vec![1]);
    }

    #[test]
    fn self_membership_and_exactness() {
        for n in 1..=5 {
            for p in patterns_of_period(n) {
                assert!(forced_cycles(&p, n).contains(&p), "{p}");
                let f = p_linear_map(&p);
                for c in exact_cycles(&p, 7) {
                    assert_eq!(c.points.len(), c.period);
                    for i in 0..c.period {
                        assert_eq!(f.eval(&c.points[i]), c.points[(i + 1) % c.period], "{p}");
                    }
                    assert_eq!(Pattern::from_orbit(&c.points).unwrap(), c.pattern);
                }
            }
        }
    }

    #[test]
    fn bigint_path_agrees_with_i128() {
        let map = MarkovMap::new(&pat("3 5 4 2 1"));
        for l in super::super::loops::enumerate_loops(&map.matrix, 8) {
            let small = map.resolve::<i128>(l.vertices()).map(|o| map.cycle_of(&o));
            let big = map.resolve::<BigInt>(l.vertices()).map(|o| map.cycle_of(&o));
            assert_eq!(small, big, "loop {l}");
        }
    }

    #[test]
    fn periods_match_cycle_enumeration() {
        for n in 2..=5 {
            for p in patterns_of_period(n) {
                let from_cycles: BTreeSet<u64> =
                    exact_cycles(&p, 8).iter().map(|c| c.period as u64).collect();
                let direct: BTreeSet<u64> = periods(&p, 8).into_iter().collect();
                assert_eq!(from_cycles, direct, "{p}");
            }
        }
    }
}
