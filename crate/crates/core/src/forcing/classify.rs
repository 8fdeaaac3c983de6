//! Primary and twist patterns, and minimal-entropy search.

use rayon::prelude::*;

use super::cycles::forced_cycles;
use crate::error::{Error, Result};
use crate::pattern::{patterns_of_period, Pattern};
use crate::rotation::{over_rotation_number, over_rotation_pair, OverRotationPair};
use crate::spectral::pattern_entropy;

/// Exhaustive pattern searches stop at this period.
pub const MAX_SEARCH_PERIOD: usize = 10;

/// Entropies closer than this count as ties.
const ENTROPY_TIE: f64 = 1e-12;

/// The class of patterns a minimal-entropy search runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Selector {
    Period(usize),
    OverRotation(OverRotationPair),
}

impl Selector {
    fn period(&self) -> usize {
        match self {
            Selector::Period(q) => *q,
            Selector::OverRotation(pair) => pair.q() as usize,
        }
    }
}

/// The pattern forces no other pattern of its own period.
pub fn is_primary(pattern: &Pattern) -> bool {
    let q = pattern.period();
    forced_cycles(pattern, q).iter().all(|b| b.period() != q || b == pattern)
}

/// No pattern of period `<= cap` forced by `pattern`, other than itself, has
/// the same over-rotation number. Fixed points have no over-rotation number
/// and count as twist.
pub fn is_twist_up_to(pattern: &Pattern, cap: usize) -> bool {
    let Ok(own) = over_rotation_number(pattern) else {
        return true;
    };
    forced_cycles(pattern, cap).iter().all(|b| {
        b == pattern || b.period() < 2 || over_rotation_number(b).expect("period >= 2") != own
    })
}

/// Searches all patterns of the selected period (and over-rotation pair) for
/// one of least entropy; ties go to the lexicographically smallest.
///
/// `period_bound` caps the searched period and may not exceed
/// [`MAX_SEARCH_PERIOD`]. Returns `Ok(None)` when the class is empty.
pub fn min_entropy_search(
    selector: Selector,
    period_bound: usize,
) -> Result<Option<(Pattern, f64)>> {
    let q = selector.period();
    if period_bound > MAX_SEARCH_PERIOD || q > period_bound {
        return Err(Error::InvalidArgument(format!(
            "period {q} exceeds the search bound {}",
            period_bound.min(MAX_SEARCH_PERIOD)
        )));
    }
    let scored: Vec<(Pattern, f64)> = patterns_of_period(q)
        .into_par_iter()
        .filter(|p| match selector {
            Selector::Period(_) => true,
            Selector::OverRotation(pair) => over_rotation_pair(p).ok() == Some(pair),
        })
        .map(|p| {
            let h = pattern_entropy(&p);
            (p, h)
        })
        .collect();
    let Some(best) = scored.iter().map(|(_, h)| *h).reduce(f64::min) else {
        return Ok(None);
    };
    Ok(scored
        .into_iter()
        .filter(|(_, h)| *h <= best + ENTROPY_TIE)
        .min_by(|a, b| a.0.cmp(&b.0)))
}
