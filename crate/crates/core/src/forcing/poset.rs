//! The forcing relation on all patterns up to a period.

use rayon::prelude::*;

use super::cycles::forced_cycles;
use crate::error::{Error, Result};
use crate::pattern::{patterns_of_period, Pattern};

pub const MAX_POSET_PERIOD: usize = 7;

/// Forcing restricted to the flip-canonical patterns of period `<= max_period`.
///
/// Edges are index pairs into `patterns`, `(a, b)` meaning `a` forces `b`,
/// without the reflexive pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForcingPoset {
    pub patterns: Vec<Pattern>,
    pub relation: Vec<(usize, usize)>,
    /// Covering pairs of the relation (its transitive reduction).
    pub covers: Vec<(usize, usize)>,
}

impl ForcingPoset {
    pub fn index_of(&self, p: &Pattern) -> Option<usize> {
        self.patterns.iter().position(|x| x == p)
    }

    pub fn forces(&self, a: usize, b: usize) -> bool {
        a == b || self.relation.binary_search(&(a, b)).is_ok()
    }
}

pub fn forcing_poset(max_period: usize) -> Result<ForcingPoset> {
    if max_period == 0 || max_period > MAX_POSET_PERIOD {
        return Err(Error::InvalidArgument(format!(
            "poset period must be in 1..={MAX_POSET_PERIOD}, got {max_period}"
        )));
    }
    let patterns: Vec<Pattern> = (1..=max_period).flat_map(patterns_of_period).collect();
    let relation: Vec<(usize, usize)> = patterns
        .par_iter()
        .enumerate()
        .flat_map_iter(|(a, pa)| {
            let forced = forced_cycles(pa, max_period);
            patterns
                .iter()
                .enumerate()
                .filter(move |(b, pb)| *b != a && forced.contains(pb))
                .map(move |(b, _)| (a, b))
                .collect::<Vec<_>>()
        })
        .collect();
    let mut relation = relation;
    relation.sort_unstable();
    let covers = transitive_reduction(patterns.len(), &relation);
    Ok(ForcingPoset { patterns, relation, covers })
}

/// Keeps `(a, b)` unless some `c` has `(a, c)` and `(c, b)`. Assumes the
/// relation is transitive and irreflexive.
pub fn transitive_reduction(size: usize, relation: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut adj = vec![vec![false; size]; size];
    for &(a, b) in relation {
        adj[a][b] = true;
    }
    let mut out: Vec<(usize, usize)> = relation
        .iter()
        .copied()
        .filter(|&(a, b)| !(0..size).any(|c| c != a && c != b && adj[a][c] && adj[c][b]))
        .collect();
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pat(s: &str) -> Pattern {
        s.parse().unwrap()
    }

    #[test]
    fn period_two() {
        let poset = forcing_poset(2).unwrap();
        assert_eq!(poset.patterns, vec![Pattern::fixed_point(), pat("2 1")]);
        assert_eq!(poset.relation, vec![(1, 0)]);
        assert_eq!(poset.covers, vec![(1, 0)]);
    }

    #[test]
    fn period_three() {
        let poset = forcing_poset(3).unwrap();
        let three = poset.index_of(&pat("2 3 1")).unwrap();
        let two = poset.index_of(&pat("2 1")).unwrap();
        let one = poset.index_of(&Pattern::fixed_point()).unwrap();
        assert!(poset.forces(three, two) && poset.forces(three, one));
        assert!(!poset.forces(two, three));
        assert_eq!(poset.covers, vec![(1, 0), (2, 1)]);
    }

    #[test]
    fn reduction_of_a_chain() {
        let rel = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        assert_eq!(transitive_reduction(4, &rel), vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn bounds() {
        assert!(forcing_poset(0).is_err());
        assert!(forcing_poset(8).is_err());
    }
}
