//! Exact proper colorability by backtracking.
//!
//! Vertices are assigned in sequence order. The first vertex is fixed to
//! color 0 and a vertex may only open the next unused color, so each color
//! permutation class is explored once. An edge is checked when its
//! largest-index vertex is assigned.

use serde::Serialize;

use crate::coloring::{Color, Coloring};
use crate::error::{Error, Result};
use crate::hypergraph::DirectedHypergraph;

pub const DEFAULT_MAX_K: usize = 8;

struct Search<'a> {
    /// Edges (as vertex lists) keyed by their last vertex.
    closing: Vec<Vec<&'a [usize]>>,
    k: usize,
    colors: Vec<u8>,
}

impl Search<'_> {
    fn closes_mono(&self, v: usize) -> bool {
        let c = self.colors[v];
        self.closing[v]
            .iter()
            .any(|edge| edge.iter().all(|&x| self.colors[x] == c))
    }

    fn assign(&mut self, v: usize, used: usize) -> bool {
        if v == self.colors.len() {
            return true;
        }
        let limit = (used + 1).min(self.k);
        for c in 0..limit {
            self.colors[v] = c as u8;
            if !self.closes_mono(v) && self.assign(v + 1, used.max(c + 1)) {
                return true;
            }
        }
        false
    }
}

/// The first proper `k`-coloring in lexicographic order (with vertex 0 on
/// color 0 and colors opened in order), or `None` if there is none.
pub fn find_proper_coloring(h: &DirectedHypergraph, k: usize) -> Result<Option<Coloring>> {
    if k == 0 {
        return Err(Error::NoColors);
    }
    let sets: Vec<Vec<usize>> = h.edges().iter().map(|e| e.vertices()).collect();
    let mut closing = vec![Vec::new(); h.vertex_count()];
    for s in &sets {
        closing[*s.last().expect("edges are non-empty")].push(s.as_slice());
    }
    let mut search = Search {
        closing,
        k,
        colors: vec![0; h.vertex_count()],
    };
    if !search.assign(0, 0) {
        return Ok(None);
    }
    let colors = search.colors.into_iter().map(Color).collect();
    Ok(Some(Coloring::new(colors, k)?))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "lowercase")]
pub enum ChromaticResult {
    /// `chi` colors suffice and `chi - 1` do not; the witness uses exactly
    /// colors `0..chi`.
    Exact { chi: usize, witness: Coloring },
    /// No proper coloring with at most `max_k` colors.
    Exceeds { max_k: usize },
}

impl ChromaticResult {
    pub fn chi(&self) -> Option<usize> {
        match self {
            ChromaticResult::Exact { chi, .. } => Some(*chi),
            ChromaticResult::Exceeds { .. } => None,
        }
    }

    /// Whether the chromatic number is known to be at least `k`.
    pub fn at_least(&self, k: usize) -> bool {
        match self {
            ChromaticResult::Exact { chi, .. } => *chi >= k,
            ChromaticResult::Exceeds { max_k } => max_k + 1 >= k,
        }
    }
}

pub fn chromatic_number(h: &DirectedHypergraph, max_k: usize) -> Result<ChromaticResult> {
    for k in 1..=max_k {
        if let Some(witness) = find_proper_coloring(h, k)? {
            return Ok(ChromaticResult::Exact { chi: k, witness });
        }
    }
    Ok(ChromaticResult::Exceeds { max_k })
}
