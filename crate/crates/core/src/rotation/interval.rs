//! Rotation intervals through monotone envelopes and Stern–Brocot search.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::circle::LiftedCircleMap;
use super::orbit::Orbit;
use crate::error::{Error, Result};
use crate::Rational;

/// Largest denominator the Stern–Brocot search will test.
pub const MAX_DENOMINATOR: u64 = 1_000_000;

/// A rotation number: exact when rational and found, otherwise a certified
/// enclosure `lower <= ρ <= upper`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Endpoint {
    Exact(Rational),
    Enclosure { lower: Rational, upper: Rational },
}

impl Endpoint {
    pub fn as_exact(&self) -> Option<&Rational> {
        match self {
            Endpoint::Exact(r) => Some(r),
            Endpoint::Enclosure { .. } => None,
        }
    }

    pub fn lower_bound(&self) -> &Rational {
        match self {
            Endpoint::Exact(r) => r,
            Endpoint::Enclosure { lower, .. } => lower,
        }
    }

    pub fn upper_bound(&self) -> &Rational {
        match self {
            Endpoint::Exact(r) => r,
            Endpoint::Enclosure { upper, .. } => upper,
        }
    }

    pub fn width(&self) -> Rational {
        self.upper_bound() - self.lower_bound()
    }
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Endpoint::Exact(r) => write!(f, "{r}"),
            Endpoint::Enclosure { lower, upper } => write!(f, "[{lower}, {upper}]"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationInterval {
    pub lower: Endpoint,
    pub upper: Endpoint,
}

impl RotationInterval {
    /// Membership up to the enclosure widths.
    pub fn contains(&self, r: &Rational) -> bool {
        r >= self.lower.lower_bound() && r <= self.upper.upper_bound()
    }
}

impl fmt::Display for RotationInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lower, self.upper)
    }
}

/// Size past which exact iterates are abandoned: nodes times the bit length
/// of their largest coordinate.
const EXACT_BUDGET: u64 = 1 << 14;

fn cost(g: &LiftedCircleMap) -> u64 {
    let bits = |r: &Rational| r.numer().bits().max(r.denom().bits());
    let widest = g.breakpoints().iter().chain(g.values()).map(bits).max().unwrap_or(0);
    g.breakpoints().len() as u64 * widest.max(1)
}

/// Largest denominator tried by `Search::certify`.
const CERTIFY_MAX_DENOMINATOR: u64 = 1024;

/// Grid on which `Search::certify` looks for a sign change.
const CERTIFY_GRID: i64 = 256;

/// Iterates of a lift, built by repeated squaring.
struct Powers {
    squares: Vec<LiftedCircleMap>,
}

impl Powers {
    fn new(base: &LiftedCircleMap) -> Self {
        Powers { squares: vec![base.clone()] }
    }

    /// `G^q`, or `None` once the iterates outgrow the exact budget.
    fn power(&mut self, q: u64) -> Option<LiftedCircleMap> {
        let mut result: Option<LiftedCircleMap> = None;
        let mut bit = 0;
        while q >> bit > 0 {
            if bit == self.squares.len() {
                let last = &self.squares[bit - 1];
                if cost(last) > EXACT_BUDGET {
                    return None;
                }
                let sq = last.compose(last);
                self.squares.push(sq);
            }
            if (q >> bit) & 1 == 1 {
                let sq = &self.squares[bit];
                result = Some(match result {
                    None => sq.clone(),
                    Some(r) if cost(&r) > EXACT_BUDGET => return None,
                    Some(r) => r.compose(sq),
                });
            }
            bit += 1;
        }
        result
    }
}

struct Search {
    lift: LiftedCircleMap,
    powers: Powers,
    orbit: Orbit,
    certified: Vec<(BigInt, u64)>,
    exact: bool,
    lower: Rational,
    upper: Rational,
}

impl Search {
    /// Compares ρ with `p/q`, tightening the displacement bounds on the way.
    /// `None` means the comparison could not be decided.
    ///
    /// For a nondecreasing lift `ρ = p/q` exactly when `G^q(x) - x - p` has a
    /// zero, and otherwise `ρ` lies strictly on the side of its sign. Once the
    /// exact iterates grow too large, the sign of `G^q(0) - p` along a
    /// certified orbit still places `ρ` weakly on one side.
    fn probe(&mut self, p: &BigInt, q: u64) -> Option<Ordering> {
        let g = match self.exact.then(|| self.powers.power(q)).flatten() {
            Some(g) => g,
            None => {
                self.exact = false;
                return self.orbit.compare(q, p);
            }
        };
        let (lo, hi) = g.displacement_range();
        let qq = Rational::from_integer(BigInt::from(q));
        let (blo, bhi) = (&lo / &qq, &hi / &qq);
        if blo > self.lower {
            self.lower = blo;
        }
        if bhi < self.upper {
            self.upper = bhi;
        }
        let p = Rational::from_integer(p.clone());
        Some(if hi < p {
            Ordering::Less
        } else if lo > p {
            Ordering::Greater
        } else {
            Ordering::Equal
        })
    }
}

impl Search {
    /// Proves `ρ = p/q` by finding rationals where `G^q(x) - x - p` takes
    /// both signs, evaluated exactly. Only used once exact iterates are out of
    /// budget; a failure proves nothing.
    fn certify(&mut self, p: &BigInt, q: u64) -> bool {
        if self.exact || q > CERTIFY_MAX_DENOMINATOR || self.certified.iter().any(|(a, b)| a == p && *b == q) {
            return false;
        }
        self.certified.push((p.clone(), q));
        let Some(pf) = p.to_f64() else { return false };
        let rough: Vec<f64> = (0..=CERTIFY_GRID)
            .map(|j| self.orbit.rough_displacement(j as f64 / CERTIFY_GRID as f64, q, pf))
            .collect();
        let exact = |j: usize| {
            let x = Rational::new(BigInt::from(j), BigInt::from(CERTIFY_GRID));
            let mut y = x.clone();
            for _ in 0..q {
                y = self.lift.eval(&y);
            }
            y - x - Rational::from_integer(p.clone())
        };
        // a sign change within rounding noise is no evidence of a zero
        let clear = |d: f64| d.abs() > 1e-9;
        let mut candidates: Vec<usize> = (0..rough.len() - 1)
            .filter(|&j| rough[j] * rough[j + 1] < 0.0 && clear(rough[j]) && clear(rough[j + 1]))
            .collect();
        candidates.truncate(4);
        candidates.into_iter().any(|j| {
            let (a, b) = (exact(j), exact(j + 1));
            a.is_zero() || b.is_zero() || (a.is_positive() != b.is_positive())
        })
    }
}

fn frac(p: &BigInt, q: u64) -> Rational {
    Rational::new(p.clone(), BigInt::from(q))
}

enum Step {
    /// `ρ` is this rational.
    Exact(Rational),
    /// Largest `k` that kept `ρ` on the wanted side, and whether the search
    /// can go on.
    Moved(u64, bool),
}

/// Largest `k` with `ρ` on side `want` of `(a + k b) / (aq + k bq)`, or the exact
/// hit. `k = 0` always qualifies.
fn advance(
    s: &mut Search,
    (a, aq): (&BigInt, u64),
    (b, bq): (&BigInt, u64),
    want: Ordering,
    max_den: u64,
) -> Step {
    let den = |k: u64| aq.checked_add(k.checked_mul(bq)?);
    let num = |k: u64| a + BigInt::from(k) * b;
    // the mediants run toward `b / bq`, which may itself be ρ
    if s.certify(b, bq) {
        return Step::Exact(frac(b, bq));
    }
    let mut good = 0u64;
    let mut step = 1u64;
    let bad = loop {
        let k = good + step;
        match den(k) {
            Some(d) if d <= max_den => match s.probe(&num(k), d) {
                Some(Ordering::Equal) => return Step::Exact(frac(&num(k), d)),
                Some(o) if o == want => {
                    good = k;
                    step *= 2;
                }
                Some(_) => break k,
                None => return Step::Moved(good, false),
            },
            _ => break k,
        }
    };
    let (mut lo, mut hi) = (good, bad);
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        match den(mid) {
            Some(d) if d <= max_den => match s.probe(&num(mid), d) {
                Some(Ordering::Equal) => return Step::Exact(frac(&num(mid), d)),
                Some(o) if o == want => lo = mid,
                Some(_) => hi = mid,
                None => return Step::Moved(lo, false),
            },
            _ => hi = mid,
        }
    }
    Step::Moved(lo, true)
}

/// Rotation number of a nondecreasing lift.
pub fn rotation_number(lift: &LiftedCircleMap, tolerance: f64) -> Result<Endpoint> {
    if !lift.is_nondecreasing() {
        return Err(Error::InvalidArgument("rotation number needs a nondecreasing lift".into()));
    }
    let tol = positive_tolerance(tolerance)?;
    let (lo, hi) = lift.displacement_range();
    if lo == hi {
        return Ok(Endpoint::Exact(lo));
    }
    let first = lo.ceil();
    if first <= hi {
        return Ok(Endpoint::Exact(first));
    }
    let a = lo.floor().to_integer();
    let mut s = Search {
        lift: lift.clone(),
        powers: Powers::new(lift),
        orbit: Orbit::new(lift),
        certified: Vec::new(),
        exact: true,
        lower: lo,
        upper: hi,
    };
    let (mut lp, mut lq) = (a.clone(), 1u64);
    let (mut rp, mut rq) = (a + 1, 1u64);
    loop {
        if Rational::new(BigInt::one(), BigInt::from(lq) * BigInt::from(rq)) <= tol {
            break;
        }
        if lq + rq > MAX_DENOMINATOR {
            break;
        }
        // past this denominator the bracket is already narrower than `tol`
        let enough = |other: u64, lq: u64, rq: u64| -> u64 {
            let d = (Rational::one() / (&tol * Rational::from_integer(BigInt::from(other)))).ceil();
            d.to_integer().try_into().unwrap_or(u64::MAX).max(lq + rq).min(MAX_DENOMINATOR)
        };
        let (k, more) = match advance(&mut s, (&lp, lq), (&rp, rq), Ordering::Greater, enough(rq, lq, rq)) {
            Step::Exact(exact) => return Ok(Endpoint::Exact(exact)),
            Step::Moved(k, more) => (k, more),
        };
        lp = &lp + BigInt::from(k) * &rp;
        lq += k * rq;
        if !more {
            break;
        }
        let (k, more) = match advance(&mut s, (&rp, rq), (&lp, lq), Ordering::Less, enough(lq, lq, rq)) {
            Step::Exact(exact) => return Ok(Endpoint::Exact(exact)),
            Step::Moved(k, more) => (k, more),
        };
        rp = &rp + BigInt::from(k) * &lp;
        rq += k * lq;
        if !more {
            break;
        }
    }
    let mut lower = frac(&lp, lq);
    let mut upper = frac(&rp, rq);
    if s.lower > lower {
        lower = s.lower;
    }
    if s.upper < upper {
        upper = s.upper;
    }
    if lower == upper {
        return Ok(Endpoint::Exact(lower));
    }
    Ok(Endpoint::Enclosure { lower, upper })
}

fn positive_tolerance(tolerance: f64) -> Result<Rational> {
    if tolerance.is_nan() || tolerance <= 0.0 || !tolerance.is_finite() {
        return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tolerance}")));
    }
    Ok(Rational::from_float(tolerance).expect("finite"))
}

/// `[ρ(F_l), ρ(F_u)]`, the set of rotation numbers of all orbits of the lift.
pub fn rotation_interval(lift: &LiftedCircleMap, tolerance: f64) -> Result<RotationInterval> {
    let lower = rotation_number(&lift.lower_envelope(), tolerance)?;
    let upper = rotation_number(&lift.upper_envelope(), tolerance)?;
    debug_assert!(lower.lower_bound() <= upper.upper_bound());
    Ok(RotationInterval { lower, upper })
}

/// Crude bounds `(G^n(0) - 1)/n <= ρ <= (G^n(0) + 1)/n` for a nondecreasing
/// lift, by plain iteration.
pub fn iteration_bounds(lift: &LiftedCircleMap, n: u64) -> (Rational, Rational) {
    let mut x = Rational::zero();
    for _ in 0..n {
        x = lift.eval(&x);
    }
    let nn = Rational::from_integer(BigInt::from(n));
    ((&x - Rational::one()) / &nn, (x + Rational::one()) / nn)
}
