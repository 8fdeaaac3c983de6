//! Periodic orbits of degree-one circle maps.
//!
//! The window `[t_1, t_1 + 1]` is cut into the pieces `J_i` of the lift. A
//! letter `(i, k)` says the point lies in `J_i` and the next point is
//! `F(x) - k`. Along a word the composed branch is affine, so each admissible
//! word has either one candidate periodic point or a whole segment of them.

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::circle::{int, LiftedCircleMap};
use crate::forcing::walk_lyndon_loops_from;
use crate::markov::TransitionMatrix;
use crate::Rational;

/// A cycle of the projected circle map.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CircleCycle {
    /// Points in `[0, 1)` in dynamical order, starting from the smallest.
    pub points: Vec<Rational>,
    pub period: usize,
    pub rotation_number: Rational,
    /// Set when the cycle is one representative of a segment of cycles
    /// sharing the same itinerary.
    pub continuum: bool,
}

struct Piece {
    left: Rational,
    right: Rational,
    slope: Rational,
    intercept: Rational,
}

struct Letter {
    piece: usize,
    shift: BigInt,
}

struct CircleGraph {
    pieces: Vec<Piece>,
    letters: Vec<Letter>,
    matrix: TransitionMatrix,
}

impl CircleGraph {
    fn new(lift: &LiftedCircleMap) -> Self {
        let nodes = lift.window_nodes();
        let pieces: Vec<Piece> = nodes
            .windows(2)
            .map(|w| {
                let ((x0, y0), (x1, y1)) = (&w[0], &w[1]);
                let slope = (y1 - y0) / (x1 - x0);
                let intercept = y0 - &slope * x0;
                Piece { left: x0.clone(), right: x1.clone(), slope, intercept }
            })
            .collect();
        // admissible (piece, shift, next piece) triples
        let mut letters = Vec::new();
        let mut follow: Vec<Vec<usize>> = Vec::new();
        for (i, p) in pieces.iter().enumerate() {
            let a = &p.slope * &p.left + &p.intercept;
            let b = &p.slope * &p.right + &p.intercept;
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            let mut by_shift: BTreeMap<BigInt, Vec<usize>> = BTreeMap::new();
            for (j, target) in pieces.iter().enumerate() {
                let mut k = (&lo - &target.right).ceil().to_integer();
                let last = (&hi - &target.left).floor().to_integer();
                while k <= last {
                    by_shift.entry(k.clone()).or_default().push(j);
                    k += 1;
                }
            }
            for (shift, next) in by_shift {
                letters.push(Letter { piece: i, shift });
                follow.push(next);
            }
        }
        let mut matrix = TransitionMatrix::zeros(letters.len());
        for (a, next) in follow.iter().enumerate() {
            for (b, letter) in letters.iter().enumerate() {
                if next.contains(&letter.piece) {
                    matrix.set(a, b, 1);
                }
            }
        }
        CircleGraph { pieces, letters, matrix }
    }

    /// Candidate cycle for the word, checked exactly.
    fn resolve(&self, word: &[usize], doubled: bool) -> Option<CircleCycle> {
        // `x ↦ a x + b` after each prefix, and the set S = [lo, hi] of points
        // following the prefix
        let first = &self.pieces[self.letters[word[0]].piece];
        let (mut lo, mut hi) = (first.left.clone(), first.right.clone());
        let (mut a, mut b) = (Rational::one(), Rational::zero());
        let mut half = None;
        for (t, &l) in word.iter().enumerate() {
            let letter = &self.letters[l];
            let piece = &self.pieces[letter.piece];
            if !restrict(&a, &b, &piece.left, &piece.right, &mut lo, &mut hi) {
                return None;
            }
            b = &piece.slope * &b + &piece.intercept - Rational::from_integer(letter.shift.clone());
            a = &piece.slope * &a;
            if doubled && t + 1 == word.len() / 2 {
                half = Some((a.clone(), b.clone()));
            }
        }
        let (start, continuum) = if a != Rational::one() {
            (&b / (Rational::one() - &a), false)
        } else if !b.is_zero() {
            return None;
        } else if let Some((ha, hb)) = half {
            if ha != -Rational::one() {
                return None;
            }
            // the half word reverses orientation; avoid its fixed point
            let centre = hb / (Rational::one() - ha);
            (if lo != centre { lo.clone() } else { hi.clone() }, true)
        } else {
            (lo.clone(), true)
        };
        if start < lo || start > hi {
            return None;
        }
        self.trace(word, start, continuum)
            .or_else(|| if continuum { self.trace(word, (&lo + &hi) / int(2), true) } else { None })
    }

    fn trace(&self, word: &[usize], start: Rational, continuum: bool) -> Option<CircleCycle> {
        let mut x = start.clone();
        let mut turns = BigInt::zero();
        let mut orbit = Vec::with_capacity(word.len());
        for &l in word {
            let letter = &self.letters[l];
            let piece = &self.pieces[letter.piece];
            if x < piece.left || x > piece.right {
                return None;
            }
            orbit.push(&x - x.floor());
            x = &piece.slope * &x + &piece.intercept - Rational::from_integer(letter.shift.clone());
            turns += &letter.shift;
        }
        if x != start {
            return None;
        }
        let q = word.len();
        if (1..q).any(|t| orbit[t] == orbit[0]) {
            return None;
        }
        let smallest = (0..q).min_by(|&i, &j| orbit[i].cmp(&orbit[j])).unwrap();
        orbit.rotate_left(smallest);
        Some(CircleCycle {
            points: orbit,
            period: q,
            rotation_number: Rational::new(turns, BigInt::from(q)),
            continuum,
        })
    }
}

/// Intersects `[lo, hi]` with `{x : a x + b ∈ [left, right]}`.
fn restrict(a: &Rational, b: &Rational, left: &Rational, right: &Rational, lo: &mut Rational, hi: &mut Rational) -> bool {
    if a.is_zero() {
        return b >= left && b <= right;
    }
    let u = (left - b) / a;
    let v = (right - b) / a;
    let (u, v) = if u <= v { (u, v) } else { (v, u) };
    if u > *lo {
        *lo = u;
    }
    if v < *hi {
        *hi = v;
    }
    lo <= hi
}

/// Cycles of period `<= cap` of the projected map, one per point set; segments
/// of cycles sharing an itinerary are reported once and flagged.
pub fn enumerate_circle_cycles(lift: &LiftedCircleMap, cap: usize) -> Vec<CircleCycle> {
    let graph = CircleGraph::new(lift);
    let mut found: BTreeMap<Vec<Rational>, CircleCycle> = BTreeMap::new();
    let mut keep = |c: CircleCycle| {
        let mut key = c.points.clone();
        key.sort();
        // an endpoint of a segment of cycles can also resolve as an isolated
        // cycle through a neighbouring itinerary
        found
            .entry(key)
            .and_modify(|e| e.continuum |= c.continuum)
            .or_insert(c);
    };
    for start in 0..graph.letters.len() {
        let _ = walk_lyndon_loops_from::<()>(&graph.matrix, start, 1, cap, &mut |w| {
            if let Some(c) = graph.resolve(w, false) {
                keep(c);
            }
            if 2 * w.len() <= cap {
                let doubled = [w, w].concat();
                if let Some(c) = graph.resolve(&doubled, true) {
                    keep(c);
                }
            }
            ControlFlow::Continue(())
        });
    }
    let mut out: Vec<CircleCycle> = found.into_values().collect();
    out.sort_by(|a, b| {
        (a.period, &a.rotation_number, &a.points).cmp(&(b.period, &b.rotation_number, &b.points))
    });
    out
}
