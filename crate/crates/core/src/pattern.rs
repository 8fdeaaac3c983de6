//! Cycle patterns: cyclic permutations of `{1..n}` modulo orientation flip.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::Rational;

/// A cyclic permutation `σ` of `{1..n}` stored as its image list
/// `σ(1) .. σ(n)`, normalized to the lexicographically smaller of `σ` and its
/// flip conjugate `ρ∘σ∘ρ` with `ρ(i) = n + 1 - i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pattern {
    images: Vec<usize>,
}

fn flip_images(images: &[usize]) -> Vec<usize> {
    let n = images.len();
    (1..=n).map(|i| n + 1 - images[n - i]).collect()
}

fn is_single_cycle(images: &[usize]) -> bool {
    let n = images.len();
    let mut x = 1;
    for step in 1..=n {
        x = images[x - 1];
        if x == 1 {
            return step == n;
        }
    }
    false
}

impl Pattern {
    /// Validates a 1-based image list and stores its flip-canonical form.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n || std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::NotAPermutation(n, format_images(&images)));
            }
        }
        if !is_single_cycle(&images) {
            return Err(Error::NotCyclic(format_images(&images)));
        }
        Ok(Self::canonical(images))
    }

    fn canonical(images: Vec<usize>) -> Self {
        let flipped = flip_images(&images);
        Pattern { images: images.min(flipped) }
    }

    /// The pattern of a cycle given in dynamical order `x, f(x), .., f^{n-1}(x)`.
    ///
    /// Points must be pairwise distinct.
    pub fn from_orbit<T: Ord>(orbit: &[T]) -> Result<Self> {
        let n = orbit.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| orbit[a].cmp(&orbit[b]));
        if order.windows(2).any(|w| orbit[w[0]] == orbit[w[1]]) {
            return Err(Error::UnsortedPoints);
        }
        let mut rank = vec![0; n];
        for (r, &t) in order.iter().enumerate() {
            rank[t] = r + 1;
        }
        let images = (0..n).map(|r| rank[(order[r] + 1) % n]).collect();
        Ok(Self::canonical(images))
    }

    /// The fixed-point pattern `[1]`.
    pub fn fixed_point() -> Self {
        Pattern { images: vec![1] }
    }

    pub fn period(&self) -> usize {
        self.images.len()
    }

    /// Image list `σ(1) .. σ(n)` (1-based values).
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `σ(i)` for 1-based `i`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// The flip conjugate, which is the same pattern but a different image list
    /// unless the permutation is flip-symmetric.
    pub fn flipped_images(&self) -> Vec<usize> {
        flip_images(&self.images)
    }

    /// `σ^{-1}(j)` for 1-based `j`.
    pub fn preimage(&self, j: usize) -> usize {
        self.images.iter().position(|&v| v == j).unwrap() + 1
    }

    /// Positions `1, σ(1), σ²(1), ..` in dynamical order.
    pub fn orbit_from_one(&self) -> Vec<usize> {
        let mut orbit = Vec::with_capacity(self.period());
        let mut x = 1;
        for _ in 0..self.period() {
            orbit.push(x);
            x = self.image(x);
        }
        orbit
    }
}

fn format_images(images: &[usize]) -> String {
    images.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_images(&self.images))
    }
}

impl FromStr for Pattern {
    type Err = Error;

    /// Parses `"σ(1) σ(2) .. σ(n)"`; commas and brackets are tolerated.
    fn from_str(s: &str) -> Result<Self> {
        let images = s
            .split(|c: char| c.is_whitespace() || c == ',' || c == '[' || c == ']')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad image {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Pattern::new(images)
    }
}

/// The pattern of a cycle given by ascending points and a 0-based successor map.
pub fn pattern_of_cycle(points: &[Rational], successor: &[usize]) -> Result<Pattern> {
    let n = points.len();
    if n == 0 {
        return Err(Error::Empty);
    }
    if successor.len() != n || successor.iter().any(|&s| s >= n) {
        return Err(Error::BadSuccessor);
    }
    if points.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::UnsortedPoints);
    }
    Pattern::new(successor.iter().map(|&s| s + 1).collect())
}

/// All flip-canonical patterns of period `n`, sorted.
pub fn patterns_of_period(n: usize) -> Vec<Pattern> {
    if n == 0 {
        return Vec::new();
    }
    if n <= 2 {
        return vec![Pattern::canonical((1..=n).rev().collect())];
    }
    // Cycle orders 1 -> c1 -> c2 -> .. -> 1, enumerated per second element in parallel.
    let mut out: Vec<Pattern> = (2..=n)
        .into_par_iter()
        .flat_map_iter(|first| {
            let mut rest: Vec<usize> = (2..=n).filter(|&v| v != first).collect();
            let mut found = Vec::new();
            each_permutation(&mut rest, 0, &mut |tail| {
                let mut images = vec![0; n];
                let mut prev = 1;
                for &v in std::iter::once(&first).chain(tail.iter()) {
                    images[prev - 1] = v;
                    prev = v;
                }
                images[prev - 1] = 1;
                if images <= flip_images(&images) {
                    found.push(Pattern { images });
                }
            });
            found
        })
        .collect();
    out.sort();
    out
}

fn each_permutation(items: &mut [usize], k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        each_permutation(items, k + 1, visit);
        items.swap(k, i);
    }
}
