//! Piecewise-linear lifts of degree-one circle maps.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::Rational;

/// A lift `F: R -> R` with `F(x + 1) = F(x) + 1`, affine between consecutive
/// breakpoints `0 <= t_1 < .. < t_n < 1` and on the wrap segment
/// `[t_n, t_1 + 1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftedCircleMap {
    breakpoints: Vec<Rational>,
    values: Vec<Rational>,
}

pub(crate) fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

fn floor(x: &Rational) -> Rational {
    x.floor()
}

impl LiftedCircleMap {
    pub fn new(breakpoints: Vec<Rational>, values: Vec<Rational>) -> Result<Self> {
        if breakpoints.is_empty() {
            return Err(Error::Empty);
        }
        if breakpoints.len() != values.len() {
            return Err(Error::InvalidArgument("breakpoint/value count mismatch".into()));
        }
        let in_range = breakpoints.iter().all(|t| *t >= Rational::zero() && *t < Rational::one());
        if !in_range || breakpoints.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidBreakpoints);
        }
        Ok(LiftedCircleMap { breakpoints, values })
    }

    /// Builds the lift from `(x, F(x))` nodes anywhere on the line; each node
    /// is moved into `[0, 1)` using the degree-one identity.
    pub fn from_nodes(nodes: impl IntoIterator<Item = (Rational, Rational)>) -> Result<Self> {
        let mut reduced: Vec<(Rational, Rational)> = nodes
            .into_iter()
            .map(|(x, y)| {
                let k = floor(&x);
                (&x - &k, y - k)
            })
            .collect();
        reduced.sort_by(|a, b| a.0.cmp(&b.0));
        reduced.dedup_by(|a, b| a.0 == b.0);
        let (breakpoints, values) = reduced.into_iter().unzip();
        Self::new(breakpoints, values)
    }

    /// `x ↦ x + shift` with a single breakpoint at 0.
    pub fn rigid(shift: Rational) -> Self {
        LiftedCircleMap { breakpoints: vec![Rational::zero()], values: vec![shift] }
    }

    pub fn breakpoints(&self) -> &[Rational] {
        &self.breakpoints
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// Window nodes `(t_1, F(t_1)) .. (t_n, F(t_n)), (t_1 + 1, F(t_1) + 1)`.
    pub(crate) fn window_nodes(&self) -> Vec<(Rational, Rational)> {
        let mut nodes: Vec<(Rational, Rational)> =
            self.breakpoints.iter().cloned().zip(self.values.iter().cloned()).collect();
        nodes.push((&self.breakpoints[0] + int(1), &self.values[0] + int(1)));
        nodes
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let t1 = &self.breakpoints[0];
        let k = floor(&(x - t1));
        let y = x - &k;
        let n = self.breakpoints.len();
        let j = self.breakpoints.partition_point(|b| b <= &y);
        let (x0, y0) = (&self.breakpoints[j - 1], &self.values[j - 1]);
        let (x1, y1) = if j < n {
            (self.breakpoints[j].clone(), self.values[j].clone())
        } else {
            (t1 + int(1), &self.values[0] + int(1))
        };
        y0 + (&y - x0) * (y1 - y0) / (x1 - x0) + k
    }

    /// `F + d`.
    pub fn translate(&self, d: i64) -> Self {
        LiftedCircleMap {
            breakpoints: self.breakpoints.clone(),
            values: self.values.iter().map(|v| v + int(d)).collect(),
        }
    }

    /// `x ↦ -F(-x)`, again a degree-one lift.
    pub fn reflect(&self) -> Self {
        Self::from_nodes(self.breakpoints.iter().zip(&self.values).map(|(t, v)| (-t, -v)))
            .expect("reflection of a valid lift")
    }

    pub fn is_nondecreasing(&self) -> bool {
        self.window_nodes().windows(2).all(|w| w[0].1 <= w[1].1)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Self) -> Self {
        let nodes = inner.window_nodes();
        let mut xs: BTreeSet<Rational> = inner.breakpoints.iter().cloned().collect();
        for w in nodes.windows(2) {
            let ((xa, ha), (xb, hb)) = (&w[0], &w[1]);
            if ha == hb {
                continue;
            }
            let (lo, hi) = if ha < hb { (ha, hb) } else { (hb, ha) };
            for t in &self.breakpoints {
                let mut k = (lo - t).ceil();
                while &(t + &k) <= hi {
                    let c = t + &k;
                    if &c > lo && &c < hi {
                        xs.insert(xa + (&c - ha) * (xb - xa) / (hb - ha));
                    }
                    k += int(1);
                }
            }
        }
        let composed = Self::from_nodes(xs.into_iter().map(|x| {
            let y = self.eval(&inner.eval(&x));
            (x, y)
        }))
        .expect("composition of valid lifts");
        composed.simplified()
    }

    /// Drops breakpoints where the lift is not actually bent.
    pub fn simplified(&self) -> Self {
        let n = self.breakpoints.len();
        if n == 1 {
            return self.clone();
        }
        let at = |i: isize| -> (Rational, Rational) {
            let k = i.div_euclid(n as isize);
            let r = i.rem_euclid(n as isize) as usize;
            let shift = int(k as i64);
            (&self.breakpoints[r] + &shift, &self.values[r] + &shift)
        };
        let mut keep = Vec::new();
        for i in 0..n as isize {
            let (p, c, nx) = (at(i - 1), at(i), at(i + 1));
            let cross = (&c.0 - &p.0) * (&nx.1 - &p.1) - (&c.1 - &p.1) * (&nx.0 - &p.0);
            if !cross.is_zero() {
                keep.push(i as usize);
            }
        }
        if keep.is_empty() {
            keep.push(0);
        }
        LiftedCircleMap {
            breakpoints: keep.iter().map(|&i| self.breakpoints[i].clone()).collect(),
            values: keep.iter().map(|&i| self.values[i].clone()).collect(),
        }
    }

    /// `F_u(x) = max { F(y) : y <= x }`.
    pub fn upper_envelope(&self) -> Self {
        let nodes = self.window_nodes();
        let n = nodes.len() - 1;
        // the window [t_1 - 1, t_1] contributes its node values minus one
        let mut c = nodes[..n].iter().map(|(_, y)| y - int(1)).fold(nodes[0].1.clone(), |m, y| {
            if y > m {
                y
            } else {
                m
            }
        });
        let mut out = vec![(nodes[0].0.clone(), c.clone())];
        for w in nodes.windows(2) {
            let ((xa, ya), (xb, yb)) = (&w[0], &w[1]);
            if yb <= &c {
                continue;
            }
            let start = if ya >= &c { xa.clone() } else { xa + (&c - ya) * (xb - xa) / (yb - ya) };
            out.push((start, c.clone()));
            out.push((xb.clone(), yb.clone()));
            c = yb.clone();
        }
        let end = &nodes[0].0 + int(1);
        out.retain(|(x, _)| x < &end);
        Self::from_nodes(out).expect("envelope of a valid lift").simplified()
    }

    /// `F_l(x) = min { F(y) : y >= x }`.
    pub fn lower_envelope(&self) -> Self {
        self.reflect().upper_envelope().reflect().simplified()
    }

    /// `(min, max)` of the displacement `F(x) - x`.
    pub fn displacement_range(&self) -> (Rational, Rational) {
        let mut it = self.breakpoints.iter().zip(&self.values).map(|(t, v)| v - t);
        let first = it.next().unwrap();
        it.fold((first.clone(), first), |(lo, hi), d| {
            let lo = if d < lo { d.clone() } else { lo };
            let hi = if d > hi { d } else { hi };
            (lo, hi)
        })
    }
}

/// Rotation number `(1/q) Σ (F(y) - y)` of a cycle of the projected map,
/// given by its points in `[0, 1)` in any order.
pub fn rotation_number_of_cycle(lift: &LiftedCircleMap, cycle_points: &[Rational]) -> Result<Rational> {
    let q = cycle_points.len();
    if q == 0 {
        return Err(Error::Empty);
    }
    if cycle_points.iter().any(|y| *y < Rational::zero() || *y >= Rational::one()) {
        return Err(Error::NotACycle);
    }
    let set: BTreeSet<&Rational> = cycle_points.iter().collect();
    if set.len() != q {
        return Err(Error::NotACycle);
    }
    let mut total = Rational::zero();
    let mut y = cycle_points[0].clone();
    for step in 1..=q {
        let fy = lift.eval(&y);
        total += &fy - &y;
        y = &fy - floor(&fy);
        if !set.contains(&y) || (y == cycle_points[0] && step < q) {
            return Err(Error::NotACycle);
        }
    }
    if y != cycle_points[0] {
        return Err(Error::NotACycle);
    }
    Ok(total / int(q as i64))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    pub(crate) fn tent() -> LiftedCircleMap {
        LiftedCircleMap::new(vec![q(0, 1), q(1, 2)], vec![q(0, 1), q(3, 2)]).unwrap()
    }

    #[test]
    fn evaluation() {
        let f = tent();
        assert_eq!(f.eval(&q(1, 4)), q(3, 4));
        assert_eq!(f.eval(&q(3, 4)), q(5, 4));
        assert_eq!(f.eval(&q(1, 1)), q(1, 1));
        assert_eq!(f.eval(&q(-3, 4)), q(-1, 4));
        assert_eq!(f.eval(&q(5, 2)), q(7, 2));
        let r = LiftedCircleMap::rigid(q(1, 3));
        assert_eq!(r.eval(&q(7, 5)), q(7, 5) + q(1, 3));
    }

    #[test]
    fn validation() {
        assert!(LiftedCircleMap::new(vec![q(1, 1)], vec![q(0, 1)]).is_err());
        assert!(LiftedCircleMap::new(vec![q(1, 2), q(1, 4)], vec![q(0, 1), q(0, 1)]).is_err());
        assert!(LiftedCircleMap::new(vec![], vec![]).is_err());
    }

    #[test]
    fn envelopes_of_tent() {
        let f = tent();
        let up = f.upper_envelope();
        assert!(up.is_nondecreasing());
        assert_eq!(up.eval(&q(0, 1)), q(1, 2));
        assert_eq!(up.eval(&q(1, 6)), q(1, 2));
        assert_eq!(up.eval(&q(1, 3)), q(1, 1));
        assert_eq!(up.eval(&q(3, 4)), q(3, 2));
        let low = f.lower_envelope();
        assert!(low.is_nondecreasing());
        assert_eq!(low.eval(&q(0, 1)), q(0, 1));
        assert_eq!(low.eval(&q(3, 4)), q(1, 1));
        assert_eq!(low.eval(&q(1, 4)), q(3, 4));
        // F_l <= F <= F_u on a grid
        for i in 0..=40 {
            let x = q(i, 40);
            assert!(low.eval(&x) <= f.eval(&x) && f.eval(&x) <= up.eval(&x));
        }
    }

    #[test]
    fn envelope_brute_force() {
        let f = LiftedCircleMap::new(
            vec![q(0, 1), q(1, 5), q(1, 2), q(3, 4)],
            vec![q(1, 3), q(-1, 2), q(7, 5), q(1, 4)],
        )
        .unwrap();
        let up = f.upper_envelope();
        let low = f.lower_envelope();
        let grid: Vec<Rational> = (-400..=800).map(|i| q(i, 400)).collect();
        for i in (400..800).step_by(7) {
            let x = &grid[i];
            let max = grid.iter().filter(|y| *y <= x).map(|y| f.eval(y)).max().unwrap();
            let min = grid.iter().filter(|y| *y >= x).map(|y| f.eval(y)).min().unwrap();
            assert_eq!(up.eval(x), max, "upper at {x}");
            assert_eq!(low.eval(x), min, "lower at {x}");
        }
    }

    #[test]
    fn composition() {
        let f = tent();
        let g = LiftedCircleMap::rigid(q(1, 3));
        let fg = f.compose(&g);
        let gf = g.compose(&f);
        for i in -10..=30 {
            let x = q(i, 17);
            assert_eq!(fg.eval(&x), f.eval(&g.eval(&x)));
            assert_eq!(gf.eval(&x), g.eval(&f.eval(&x)));
        }
        let ff = f.compose(&f);
        for i in 0..=50 {
            let x = q(i, 50);
            assert_eq!(ff.eval(&x), f.eval(&f.eval(&x)));
        }
    }

    #[test]
    fn cycle_rotation_numbers() {
        let f = LiftedCircleMap::rigid(q(1, 3));
        assert_eq!(rotation_number_of_cycle(&f, &[q(0, 1), q(1, 3), q(2, 3)]).unwrap(), q(1, 3));
        let f = LiftedCircleMap::rigid(q(1, 2));
        assert_eq!(rotation_number_of_cycle(&f, &[q(1, 2), q(0, 1)]).unwrap(), q(1, 2));
        let t = tent();
        assert_eq!(rotation_number_of_cycle(&t, &[q(0, 1)]).unwrap(), q(0, 1));
        assert_eq!(rotation_number_of_cycle(&t, &[q(1, 2)]).unwrap(), q(1, 1));
        assert_eq!(rotation_number_of_cycle(&t, &[q(1, 4)]), Err(Error::NotACycle));
        let f = LiftedCircleMap::rigid(q(1, 3));
        assert_eq!(rotation_number_of_cycle(&f, &[q(0, 1), q(1, 3)]), Err(Error::NotACycle));
        // F + d shifts the rotation number by d
        assert_eq!(
            rotation_number_of_cycle(&f.translate(2), &[q(0, 1), q(1, 3), q(2, 3)]).unwrap(),
            q(7, 3)
        );
    }
}
