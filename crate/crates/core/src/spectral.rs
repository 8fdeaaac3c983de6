//! Spectral radius of nonnegative integer matrices and pattern entropy.
//!
//! Two independent routes are provided. [`power_iteration`] runs a shifted
//! power method on each strongly connected block and stops on the
//! Collatz–Wielandt bracket. [`charpoly_spectral_radius`] builds the exact
//! characteristic polynomial and isolates its largest real root with a Sturm
//! sequence evaluated at dyadic rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;

use crate::error::{Error, Result};
use crate::markov::{markov_graph, TransitionMatrix};
use crate::pattern::Pattern;
use crate::Rational;

pub const POWER_TOLERANCE: f64 = 1e-12;
pub const POWER_MAX_ITERATIONS: usize = 200_000;
/// Matrices up to this size are cross-checked against the polynomial route.
pub const CROSS_CHECK_SIZE: usize = 8;

/// Characteristic polynomial `det(xI - A)`, coefficients in ascending degree.
///
/// Faddeev–LeVerrier in exact integer arithmetic; every division is exact.
pub fn characteristic_polynomial(m: &TransitionMatrix) -> Vec<BigInt> {
    let n = m.size();
    let a: Vec<Vec<BigInt>> =
        (0..n).map(|i| (0..n).map(|j| BigInt::from(m.get(i, j))).collect()).collect();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    // M_0 = 0; M_k = A M_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(A M_k) / k
    let mut mk: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        let mut next = mat_mul(&a, &mk);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        mk = next;
        let am = mat_mul(&a, &mk);
        let trace: BigInt = (0..n).map(|i| am[i][i].clone()).sum();
        let k_big = BigInt::from(k);
        debug_assert!((&trace % &k_big).is_zero());
        coeffs[n - k] = -(trace / k_big);
    }
    coeffs
}

fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                out[i][j] += &a[i][k] * &b[k][j];
            }
        }
    }
    out
}

type Poly = Vec<Rational>;

fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn derivative(p: &Poly) -> Poly {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
            .collect(),
    )
}

/// Returns (quotient, remainder) of `a / b`, `b` nonzero.
fn div_rem(a: &Poly, b: &Poly) -> (Poly, Poly) {
    let mut r = trim(a.clone());
    let db = b.len() - 1;
    let lead = b[db].clone();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![Rational::zero(); r.len() - db];
    while !r.is_empty() && r.len() > db {
        let shift = r.len() - 1 - db;
        let factor = r.last().unwrap() / &lead;
        for (i, c) in b.iter().enumerate() {
            r[shift + i] -= &factor * c;
        }
        q[shift] = factor;
        r.pop();
        r = trim(r);
    }
    (q, r)
}

fn gcd(a: &Poly, b: &Poly) -> Poly {
    let (mut a, mut b) = (trim(a.clone()), trim(b.clone()));
    while !b.is_empty() {
        let (_, r) = div_rem(&a, &b);
        a = b;
        b = r;
    }
    a
}

/// `num / 2^exp`.
#[derive(Clone)]
struct Dyadic {
    num: BigInt,
    exp: u64,
}

impl Dyadic {
    fn from_f64(x: f64) -> Option<Self> {
        let r = Rational::from_float(x)?;
        Some(Dyadic { num: r.numer().clone(), exp: r.denom().bits() - 1 })
    }

    fn midpoint(&self, other: &Dyadic) -> Dyadic {
        let exp = self.exp.max(other.exp);
        let num = (&self.num << (exp - self.exp)) + (&other.num << (exp - other.exp));
        Dyadic { num, exp: exp + 1 }
    }

    fn to_f64(&self) -> Option<f64> {
        Rational::new(self.num.clone(), BigInt::one() << self.exp).to_f64()
    }
}

/// Clears denominators; the positive factor keeps every sign.
fn integer_poly(p: &Poly) -> Vec<BigInt> {
    let l = p.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    p.iter().map(|c| (c * Rational::from_integer(l.clone())).to_integer()).collect()
}

/// Sign of `p(x)`, from `2^(exp deg) p(x)` evaluated in integers.
fn sign_at(p: &[BigInt], x: &Dyadic) -> i8 {
    let Some(d) = p.len().checked_sub(1) else { return 0 };
    let mut acc = p[d].clone();
    for i in (0..d).rev() {
        acc = acc * &x.num + (&p[i] << (x.exp * (d - i) as u64));
    }
    if acc.is_positive() {
        1
    } else if acc.is_negative() {
        -1
    } else {
        0
    }
}

fn sign_changes(seq: &[Vec<BigInt>], x: &Dyadic) -> usize {
    let mut changes = 0;
    let mut last = 0i8;
    for p in seq {
        let s = sign_at(p, x);
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

/// Largest real root of an integer polynomial, located inside `(lower, upper]`.
///
/// Returns `None` when there is no real root in that window.
pub fn largest_real_root(coeffs: &[BigInt], lower: f64, upper: f64) -> Option<f64> {
    let p: Poly = trim(coeffs.iter().map(|c| Rational::from_integer(c.clone())).collect());
    if p.len() <= 1 {
        return None;
    }
    // square-free part, then the Sturm chain
    let g = gcd(&p, &derivative(&p));
    let sf = if g.len() > 1 { div_rem(&p, &g).0 } else { p };
    let mut chain = vec![sf.clone(), derivative(&sf)];
    loop {
        let n = chain.len();
        let (_, r) = div_rem(&chain[n - 2], &chain[n - 1]);
        if r.is_empty() {
            break;
        }
        chain.push(r.into_iter().map(|c| -c).collect());
    }
    let chain: Vec<Vec<BigInt>> = chain.iter().map(integer_poly).collect();
    let sf = &chain[0];
    let top = Dyadic::from_f64(upper)?;
    let v_top = sign_changes(&chain, &top);
    let count_above = |x: &Dyadic| sign_changes(&chain, x).saturating_sub(v_top);

    let mut lo = Dyadic::from_f64(lower)?;
    let mut hi = top;
    if count_above(&lo) == 0 {
        return None;
    }
    // Sturm bisection until the largest root is the only one in (lo, hi]
    while count_above(&lo) > 1 {
        let mid = lo.midpoint(&hi);
        if count_above(&mid) >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    // then plain sign bisection: the root is simple and sf keeps one sign on
    // (root, hi]
    let above = sign_at(sf, &hi);
    if above == 0 {
        return hi.to_f64();
    }
    for _ in 0..64 {
        let mid = lo.midpoint(&hi);
        match sign_at(sf, &mid) {
            0 => return mid.to_f64(),
            v if v == above => hi = mid,
            _ => lo = mid,
        }
    }
    let mid = lo.midpoint(&hi);
    // integer roots (0 for nilpotent blocks, 1 for permutations) come out exact
    let x = mid.to_f64()?;
    let nearest = x.round();
    if (nearest - x).abs() < 1e-6 && sign_at(sf, &Dyadic::from_f64(nearest)?) == 0 {
        return Some(nearest);
    }
    Some(x)
}

/// Spectral radius from the exact characteristic polynomial.
pub fn charpoly_spectral_radius(m: &TransitionMatrix) -> f64 {
    if m.is_empty() {
        return 0.0;
    }
    let bound = (0..m.size()).map(|i| m.row(i).iter().sum::<u64>()).max().unwrap_or(0) as f64;
    let coeffs = characteristic_polynomial(m);
    // The Perron root is a nonnegative real eigenvalue not exceeding the max row sum.
    largest_real_root(&coeffs, -0.5, bound + 1.0).unwrap_or(0.0).max(0.0)
}

/// Spectral radius by power iteration on `B + I` for every irreducible block `B`.
pub fn power_iteration(m: &TransitionMatrix) -> Result<f64> {
    if m.is_empty() {
        return Ok(0.0);
    }
    let mut graph = DiGraph::<(), ()>::new();
    let nodes: Vec<_> = (0..m.size()).map(|_| graph.add_node(())).collect();
    for i in 0..m.size() {
        for j in m.successors(i) {
            graph.add_edge(nodes[i], nodes[j], ());
        }
    }
    let mut radius: f64 = 0.0;
    for component in tarjan_scc(&graph) {
        let idx: Vec<usize> = component.iter().map(|n| n.index()).collect();
        if idx.len() == 1 && m.get(idx[0], idx[0]) == 0 {
            continue;
        }
        radius = radius.max(irreducible_radius(m, &idx)?);
    }
    Ok(radius)
}

fn irreducible_radius(m: &TransitionMatrix, idx: &[usize]) -> Result<f64> {
    let k = idx.len();
    let block: Vec<Vec<f64>> = idx
        .iter()
        .map(|&i| {
            idx.iter().map(|&j| m.get(i, j) as f64 + if i == j { 1.0 } else { 0.0 }).collect()
        })
        .collect();
    let mut x = vec![1.0; k];
    for _ in 0..POWER_MAX_ITERATIONS {
        let y: Vec<f64> =
            block.iter().map(|row| row.iter().zip(&x).map(|(a, b)| a * b).sum()).collect();
        let (mut lo, mut hi) = (f64::INFINITY, 0.0f64);
        for (yi, xi) in y.iter().zip(&x) {
            let r = yi / xi;
            lo = lo.min(r);
            hi = hi.max(r);
        }
        if hi - lo <= POWER_TOLERANCE * hi.max(1.0) {
            return Ok(0.5 * (lo + hi) - 1.0);
        }
        let scale = y.iter().cloned().fold(0.0, f64::max);
        x = y.into_iter().map(|v| v / scale).collect();
    }
    Err(Error::NonConvergence(POWER_MAX_ITERATIONS))
}

/// Largest eigenvalue modulus of a nonnegative matrix.
///
/// Small matrices report the root of the exact characteristic polynomial,
/// cross-checked against power iteration; larger ones use power iteration,
/// with the polynomial as the fallback on non-convergence.
pub fn spectral_radius(m: &TransitionMatrix) -> f64 {
    if m.size() <= CROSS_CHECK_SIZE {
        let exact = charpoly_spectral_radius(m);
        if let Ok(v) = power_iteration(m) {
            debug_assert!((v - exact).abs() <= 1e-9, "power {v} vs polynomial {exact}");
        }
        return exact;
    }
    power_iteration(m).unwrap_or_else(|_| charpoly_spectral_radius(m))
}

/// Entropy of a pattern: log of the spectral radius of its Markov graph,
/// clamped to zero when the radius does not exceed one.
pub fn pattern_entropy(pattern: &Pattern) -> f64 {
    let rho = spectral_radius(&markov_graph(pattern));
    rho.max(1.0).ln()
}
