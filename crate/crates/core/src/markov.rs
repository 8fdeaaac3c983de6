//! Markov graphs of P-linear maps.

use std::fmt;

use crate::pattern::Pattern;

/// Square nonnegative integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TransitionMatrix {
    size: usize,
    entries: Vec<u64>,
}

impl TransitionMatrix {
    pub fn new(rows: Vec<Vec<u64>>) -> Self {
        let size = rows.len();
        assert!(rows.iter().all(|r| r.len() == size), "matrix must be square");
        TransitionMatrix { size, entries: rows.into_iter().flatten().collect() }
    }

    pub fn zeros(size: usize) -> Self {
        TransitionMatrix { size, entries: vec![0; size * size] }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size);
        for i in 0..size {
            m.set(i, i, 1);
        }
        m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.size + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.entries[i * self.size + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.entries[i * self.size..(i + 1) * self.size]
    }

    pub fn rows(&self) -> Vec<Vec<u64>> {
        (0..self.size).map(|i| self.row(i).to_vec()).collect()
    }

    /// Successors of vertex `i` (0-based).
    pub fn successors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(i).iter().enumerate().filter(|(_, &v)| v > 0).map(|(j, _)| j)
    }
}

impl fmt::Display for TransitionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.size {
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Covering matrix over the P-intervals `I_i = [i, i+1]`, `i = 1..n-1`:
/// `I_i` covers `I_j` iff `min(σ(i), σ(i+1)) <= j < max(σ(i), σ(i+1))`.
///
/// A period-1 pattern has no P-intervals and gives the empty matrix.
pub fn markov_graph(pattern: &Pattern) -> TransitionMatrix {
    let n = pattern.period();
    let size = n.saturating_sub(1);
    let mut m = TransitionMatrix::zeros(size);
    for i in 1..n {
        let (a, b) = (pattern.image(i), pattern.image(i + 1));
        let (lo, hi) = (a.min(b), a.max(b));
        for j in lo..hi {
            m.set(i - 1, j - 1, 1);
        }
    }
    m
}
