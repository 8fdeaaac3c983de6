//! Sets of periods of degree-one circle maps with a given rotation interval.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::interval::{Endpoint, RotationInterval};
use crate::error::{Error, Result};
use crate::sharkovsky::{initial_segment, SharkovskyElement};
use crate::Rational;

fn exact(e: &Endpoint) -> Result<&Rational> {
    e.as_exact().ok_or(Error::InexactEndpoint)
}

/// `q·S(choice)` cut at `cap`, for an endpoint with reduced denominator `q`.
fn endpoint_term(r: &Rational, choice: SharkovskyElement, cap: u64) -> Result<Vec<u64>> {
    let q = r.denom().to_u64().ok_or(Error::Overflow)?;
    if q > cap {
        return Ok(Vec::new());
    }
    Ok(initial_segment(choice, cap / q).into_iter().map(|n| n * q).collect())
}

/// The periods `<= cap` of a map whose rotation interval is `interval`, with
/// Sharkovsky elements chosen for the two rational endpoints: all `q` with
/// some `p/q` strictly inside the interval, plus `q_i` times the initial
/// segment of each endpoint choice.
pub fn circle_period_set(
    interval: &RotationInterval,
    left_choice: SharkovskyElement,
    right_choice: SharkovskyElement,
    cap: u64,
) -> Result<Vec<u64>> {
    let lower = exact(&interval.lower)?;
    let upper = exact(&interval.upper)?;
    if lower > upper {
        return Err(Error::InvalidArgument(format!("empty interval [{lower}, {upper}]")));
    }
    if cap == 0 {
        return Err(Error::InvalidArgument("cap must be positive".into()));
    }
    let mut out = BTreeSet::new();
    for q in 1..=cap {
        let qq = Rational::from_integer(BigInt::from(q));
        let p = (lower * &qq).floor() + Rational::from_integer(BigInt::from(1));
        if p < upper * &qq {
            out.insert(q);
        }
    }
    out.extend(endpoint_term(lower, left_choice, cap)?);
    out.extend(endpoint_term(upper, right_choice, cap)?);
    Ok(out.into_iter().collect())
}
