use std::fmt;
use std::ops::ControlFlow;

use crate::markov::TransitionMatrix;

/// A closed walk in a Markov graph, stored as its least rotation.
///
/// Vertices are 0-based P-interval indices (`0` is `[1, 2]`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Loop {
    vertices: Vec<usize>,
}

impl Loop {
    /// Builds a loop from any rotation of its vertex sequence.
    pub fn new(vertices: Vec<usize>) -> Self {
        assert!(!vertices.is_empty(), "a loop needs at least one vertex");
        let n = vertices.len();
        let best = (0..n)
            .min_by(|&a, &b| {
                (0..n).map(|i| vertices[(a + i) % n]).cmp((0..n).map(|i| vertices[(b + i) % n]))
            })
            .unwrap();
        let vertices = (0..n).map(|i| vertices[(best + i) % n]).collect();
        Loop { vertices }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Length of the shortest word whose power is this loop.
    pub fn root_len(&self) -> usize {
        let n = self.len();
        (1..=n)
            .find(|&d| n.is_multiple_of(d) && (0..n).all(|i| self.vertices[i] == self.vertices[i % d]))
            .unwrap()
    }

    pub fn is_primitive(&self) -> bool {
        self.root_len() == self.len()
    }

    /// True when every cyclic step is an edge of `m`.
    pub fn is_valid_in(&self, m: &TransitionMatrix) -> bool {
        let n = self.len();
        self.vertices.iter().all(|&v| v < m.size())
            && (0..n).all(|i| m.get(self.vertices[i], self.vertices[(i + 1) % n]) > 0)
    }
}

impl fmt::Display for Loop {
    /// 1-based, e.g. `(1 2 2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.vertices.iter().map(|v| (v + 1).to_string()).collect();
        write!(f, "({})", parts.join(" "))
    }
}

/// Visits every Lyndon word of length `1..=max_len` that is a closed walk in
/// `m` and starts at `start`. The visitor may stop the walk early.
///
/// Words are grown as prenecklaces: appending a letter smaller than the one a
/// period back can never lead to a Lyndon word, so that branch is cut.
pub(crate) fn walk_lyndon_loops_from<B>(
    m: &TransitionMatrix,
    start: usize,
    min_len: usize,
    max_len: usize,
    visit: &mut impl FnMut(&[usize]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    let mut word = vec![start];
    let mut periods = vec![1usize];
    grow(m, &mut word, &mut periods, min_len, max_len, visit)
}

fn grow<B>(
    m: &TransitionMatrix,
    word: &mut Vec<usize>,
    periods: &mut Vec<usize>,
    min_len: usize,
    max_len: usize,
    visit: &mut impl FnMut(&[usize]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    let len = word.len();
    let p = *periods.last().unwrap();
    let last = word[len - 1];
    if p == len && len >= min_len && m.get(last, word[0]) > 0 {
        visit(word)?;
    }
    if len == max_len {
        return ControlFlow::Continue(());
    }
    let start = word[0];
    for next in m.successors(last) {
        if next < start {
            continue;
        }
        let reference = word[len - p];
        let new_p = match next.cmp(&reference) {
            std::cmp::Ordering::Less => continue,
            std::cmp::Ordering::Equal => p,
            std::cmp::Ordering::Greater => len + 1,
        };
        word.push(next);
        periods.push(new_p);
        let flow = grow(m, word, periods, min_len, max_len, visit);
        word.pop();
        periods.pop();
        flow?;
    }
    ControlFlow::Continue(())
}

/// All primitive loops of length at most `max_length`, each in least-rotation
/// form, sorted by length and then lexicographically. Repetitions of shorter
/// loops are excluded.
pub fn enumerate_loops(m: &TransitionMatrix, max_length: usize) -> Vec<Loop> {
    let mut out = Vec::new();
    for start in 0..m.size() {
        let _ = walk_lyndon_loops_from::<()>(m, start, 1, max_length, &mut |w| {
            out.push(Loop { vertices: w.to_vec() });
            ControlFlow::Continue(())
        });
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}
