//! Constructive proper colorings.
//!
//! Each algorithm works on a copy of the input (normalized, and for the
//! four-color algorithm augmented), records every vertex visit in a
//! [`RunTrace`] and returns a coloring of the full input vertex sequence.
//! [`audit`] replays a trace and checks the invariants the correctness
//! arguments rely on.

mod audit;
mod head_tail;
mod i0;
mod i0_r4;
mod one_head;
mod trace;

use std::fmt;
use std::str::FromStr;

use rand::seq::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub use audit::{audit, InvariantViolation};
pub use head_tail::color_head_tail_3;
pub use i0::{augment_i0, classify_head_star, color_i0_4, HeadStar};
pub use i0_r4::color_i0_r4_2;
pub use one_head::color_one_head;
pub use trace::{trace_to_text, Action, EdgeOrigin, RunTrace, TraceEvent};

use crate::coloring::{Color, Coloring};
use crate::error::{Error, Result};
use crate::hypergraph::{DirectedEdge, DirectedHypergraph};
use crate::pattern::{check_condition, Condition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Algorithm {
    /// Two colors for one-headed hypergraphs whose single-vertex
    /// intersections always involve a head.
    #[serde(rename = "one-head")]
    OneHead,
    /// Three colors when single-vertex intersections are head/head or
    /// tail/tail.
    #[serde(rename = "ht3")]
    HeadTail3,
    /// Four colors for 2→1 hypergraphs without two edges sharing only their
    /// head.
    #[serde(rename = "i0-4")]
    I0Four,
    /// Two colors for 2→1 hypergraphs whose single-vertex intersections are
    /// tail/tail.
    #[serde(rename = "i0r4-2")]
    I0R4Two,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [
        Algorithm::OneHead,
        Algorithm::HeadTail3,
        Algorithm::I0Four,
        Algorithm::I0R4Two,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Algorithm::OneHead => "one-head",
            Algorithm::HeadTail3 => "ht3",
            Algorithm::I0Four => "i0-4",
            Algorithm::I0R4Two => "i0r4-2",
        }
    }

    /// Number of colors the algorithm may use.
    pub fn colors(self) -> usize {
        match self {
            Algorithm::OneHead | Algorithm::I0R4Two => 2,
            Algorithm::HeadTail3 => 3,
            Algorithm::I0Four => 4,
        }
    }

    /// The intersection condition the algorithm needs.
    pub fn condition(self) -> Condition {
        match self {
            Algorithm::OneHead => Condition::OneHeadH1,
            Algorithm::HeadTail3 => Condition::R4Free,
            Algorithm::I0Four => Condition::I0Free,
            Algorithm::I0R4Two => Condition::I0R4Free,
        }
    }

    pub fn run(self, h: &DirectedHypergraph, opts: &RunOptions) -> Result<ColoringRun> {
        match self {
            Algorithm::OneHead => color_one_head(h, opts),
            Algorithm::HeadTail3 => color_head_tail_3(h, opts),
            Algorithm::I0Four => color_i0_4(h, opts),
            Algorithm::I0R4Two => color_i0_r4_2(h, opts),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.id() == s)
            .ok_or_else(|| format!("unknown algorithm {s:?} (expected one-head, ht3, i0-4 or i0r4-2)"))
    }
}

/// How the one-head algorithm resolves its free choices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TieBreak {
    /// Smallest edge index, then smallest vertex index.
    #[default]
    Smallest,
    /// Uniformly at random from a seeded generator.
    Seeded(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunOptions {
    /// Verify the intersection condition before running.
    pub checked: bool,
    pub ties: TieBreak,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            checked: true,
            ties: TieBreak::Smallest,
        }
    }
}

impl RunOptions {
    pub fn unchecked() -> Self {
        RunOptions {
            checked: false,
            ..Self::default()
        }
    }
}

/// The order in which vertices were visited. Fixed to the vertex sequence
/// except for the one-head algorithm, which builds it as it goes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct ProcessingOrder(Vec<usize>);

impl ProcessingOrder {
    pub fn identity(n: usize) -> Self {
        ProcessingOrder((0..n).collect())
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    /// `positions()[v]` is the step at which `v` was processed.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![usize::MAX; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    pub fn is_permutation(&self, n: usize) -> bool {
        let mut seen = vec![false; n];
        self.0.len() == n && self.0.iter().all(|&v| v < n && !std::mem::replace(&mut seen[v], true))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ColoringRun {
    pub algorithm: Algorithm,
    pub coloring: Coloring,
    pub trace: RunTrace,
    pub order: ProcessingOrder,
    /// The hypergraph the passes actually ran on.
    #[serde(skip)]
    pub working: DirectedHypergraph,
    pub edge_origin: Vec<EdgeOrigin>,
}

impl ColoringRun {
    pub fn trace_text(&self) -> String {
        trace_to_text(&self.trace, &self.working, &self.edge_origin)
    }
}

fn require_condition(h: &DirectedHypergraph, cond: Condition, opts: &RunOptions) -> Result<()> {
    if opts.checked {
        let report = check_condition(h, cond);
        if !report.avoided {
            return Err(Error::Precondition(Box::new(report)));
        }
    }
    Ok(())
}

fn require_shape(
    h: &DirectedHypergraph,
    expected: &'static str,
    ok: impl Fn(&DirectedEdge) -> bool,
) -> Result<()> {
    match h.edges().iter().position(|e| !ok(e)) {
        Some(edge) => Err(Error::EdgeShape { edge, expected }),
        None => Ok(()),
    }
}

fn input_origin(kept: &[usize]) -> Vec<EdgeOrigin> {
    kept.iter().map(|&i| EdgeOrigin::Input(i)).collect()
}

fn all_colored(colors: &[Color], e: &DirectedEdge, color: Color) -> bool {
    e.tail().iter().chain(e.head()).all(|&v| colors[v] == color)
}

/// Source of the one-head algorithm's arbitrary choices.
enum Chooser {
    Smallest,
    Random(Box<ChaCha8Rng>),
}

impl Chooser {
    fn new(ties: TieBreak) -> Self {
        match ties {
            TieBreak::Smallest => Chooser::Smallest,
            TieBreak::Seeded(seed) => Chooser::Random(Box::new(ChaCha8Rng::seed_from_u64(seed))),
        }
    }

    /// Picks from a non-empty, increasing candidate list.
    fn pick(&mut self, candidates: &[usize]) -> Option<usize> {
        match self {
            Chooser::Smallest => candidates.first().copied(),
            Chooser::Random(rng) => candidates.choose(rng.as_mut()).copied(),
        }
    }
}

/// Edges grouped by their largest vertex index.
fn edges_by_last_vertex(h: &DirectedHypergraph) -> Vec<Vec<usize>> {
    let mut by_last = vec![Vec::new(); h.vertex_count()];
    for (i, e) in h.edges().iter().enumerate() {
        by_last[e.last_vertex()].push(i);
    }
    by_last
}

fn incidence(h: &DirectedHypergraph) -> Vec<Vec<usize>> {
    let mut inc = vec![Vec::new(); h.vertex_count()];
    for (i, e) in h.edges().iter().enumerate() {
        for v in e.vertices() {
            inc[v].push(i);
        }
    }
    inc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algorithm_ids_round_trip() {
        for a in Algorithm::ALL {
            assert_eq!(a.id().parse::<Algorithm>().unwrap(), a);
        }
        assert!("two".parse::<Algorithm>().is_err());
    }

    #[test]
    fn processing_order_positions() {
        let o = ProcessingOrder(vec![2, 0, 1]);
        assert_eq!(o.positions(), vec![1, 2, 0]);
        assert!(o.is_permutation(3));
        assert!(!ProcessingOrder(vec![0, 0, 1]).is_permutation(3));
    }
}
