//! Certified floating-point orbits of nondecreasing lifts.
//!
//! Each iterate is kept as an interval `[lo, hi]` of doubles, rounded
//! outward after every operation. Because the lift is nondecreasing, the image
//! of an interval lies between the images of its ends, so the true orbit never
//! leaves the tracked interval.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::circle::{int, LiftedCircleMap};
use crate::Rational;

fn down(r: &Rational) -> f64 {
    let mut x = r.to_f64().expect("finite rational");
    while Rational::from_float(x).is_none_or(|e| &e > r) {
        x = x.next_down();
    }
    x
}

fn up(r: &Rational) -> f64 {
    let mut x = r.to_f64().expect("finite rational");
    while Rational::from_float(x).is_none_or(|e| &e < r) {
        x = x.next_up();
    }
    x
}

/// One linear piece on `[t, t_next]` of the unit window, with every constant
/// stored as a pair of rounded bounds.
struct Piece {
    t: (f64, f64),
    v: (f64, f64),
    slope: (f64, f64),
    v_next: (f64, f64),
}

pub(crate) struct Orbit {
    pieces: Vec<Piece>,
}

impl Orbit {
    pub(crate) fn new(lift: &LiftedCircleMap) -> Self {
        // nodes over [0, 1], with both ends added
        let mut nodes: Vec<(Rational, Rational)> = Vec::new();
        for k in [-1i64, 0, 1] {
            for (t, v) in lift.breakpoints().iter().zip(lift.values()) {
                let t = t + int(k);
                if t > int(0) && t < int(1) {
                    nodes.push((t, v + int(k)));
                }
            }
        }
        nodes.sort();
        nodes.insert(0, (int(0), lift.eval(&int(0))));
        nodes.push((int(1), lift.eval(&int(1))));
        let pieces = nodes
            .windows(2)
            .map(|w| {
                let ((t0, v0), (t1, v1)) = (&w[0], &w[1]);
                let slope = (v1 - v0) / (t1 - t0);
                Piece {
                    t: (down(t0), up(t0)),
                    v: (down(v0), up(v0)),
                    slope: (down(&slope), up(&slope)),
                    v_next: (down(v1), up(v1)),
                }
            })
            .collect();
        Orbit { pieces }
    }

    /// A lower bound for `F(x)` over all `x >= lo`, for `lo` in `[0, 1]`.
    fn eval_down(&self, lo: f64) -> f64 {
        let i = self.pieces.partition_point(|p| p.t.1 <= lo).max(1) - 1;
        let p = &self.pieces[i];
        if p.t.1 > lo {
            // only the first piece can start above `lo`, and only when lo = 0
            return p.v.0;
        }
        let dx = (lo - p.t.1).next_down().max(0.0);
        let linear = ((p.slope.0 * dx).next_down() + p.v.0).next_down();
        // past the true end of the piece the next node value bounds instead
        linear.min(p.v_next.0).max(p.v.0)
    }

    /// An upper bound for `F(x)` over all `x <= hi`, for `hi` in `[0, 1]`.
    fn eval_up(&self, hi: f64) -> f64 {
        let i = self.pieces.partition_point(|p| p.t.0 <= hi).max(1) - 1;
        let p = &self.pieces[i];
        let dx = (hi - p.t.0).next_up().max(0.0);
        let linear = ((p.slope.1 * dx).next_up() + p.v.1).next_up();
        linear.min(p.v_next.1)
    }

    /// Uncertified `F^q(x) - x - p`, used only to pick points worth checking
    /// exactly.
    pub(crate) fn rough_displacement(&self, x: f64, q: u64, p: f64) -> f64 {
        let mut y = x;
        for _ in 0..q {
            let m = y.floor();
            let t = y - m;
            let i = self.pieces.partition_point(|p| p.t.0 <= t).max(1) - 1;
            let piece = &self.pieces[i];
            y = piece.v.0 + piece.slope.0 * (t - piece.t.0) + m;
        }
        y - x - p
    }

    /// Compares `F^q(0)` with the integer `p`, or `None` when rounding makes
    /// the comparison undecidable.
    pub(crate) fn compare(&self, q: u64, p: &BigInt) -> Option<Ordering> {
        let (mut shift, mut lo, mut hi) = (0i64, 0.0f64, 0.0f64);
        for _ in 0..q {
            let m = lo.floor();
            let (l, h) = ((lo - m).next_down().max(0.0), (hi - m).next_up());
            if h.is_nan() || h > 1.0 || !m.is_finite() {
                return None;
            }
            shift = shift.checked_add(m as i64)?;
            lo = self.eval_down(l);
            hi = self.eval_up(h);
        }
        let target = (p - BigInt::from(shift)).to_f64()?;
        if lo > target {
            Some(Ordering::Greater)
        } else if hi < target {
            Some(Ordering::Less)
        } else {
            None
        }
    }
}
