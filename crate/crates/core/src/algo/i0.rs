//! Four colors for 2→1 hypergraphs in which no two edges meet only in a
//! common head.

use serde::Serialize;

use super::{
    all_colored, require_condition, Action, ColoringRun, EdgeOrigin, ProcessingOrder, RunOptions,
    RunTrace,
};
use crate::coloring::{Color, Coloring};
use crate::error::{Error, Result};
use crate::hypergraph::{normalized_edge_indices, DirectedEdge, DirectedHypergraph};
use crate::pattern::{check_condition, shared_vertices, Condition, IntersectionProfile, PatternReport, Subject};
use crate::Algorithm;

/// Shape of the set of edges whose head is a given vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "case", content = "vertices", rename_all = "lowercase")]
pub enum HeadStar {
    Empty,
    /// Every edge of the star contains this vertex. The smallest such vertex
    /// is reported.
    Pivot(usize),
    /// Exactly the three edges `vw>u`, `wz>u`, `vz>u`, listed in vertex order.
    Triangle([usize; 3]),
}

fn head_star(h: &DirectedHypergraph, u: usize) -> Vec<usize> {
    h.edges()
        .iter()
        .enumerate()
        .filter(|(_, e)| e.head() == [u])
        .map(|(i, _)| i)
        .collect()
}

/// Classifies the head-star of `u` in an I0-free 2→1 hypergraph.
pub fn classify_head_star(h: &DirectedHypergraph, u: usize) -> Result<HeadStar> {
    h.require_two_to_one()?;
    if u >= h.vertex_count() {
        return Err(Error::UnknownVertex(format!("#{u}")));
    }
    let star = head_star(h, u);

    let mut witnesses = Vec::new();
    for (a, &i) in star.iter().enumerate() {
        for &j in &star[a + 1..] {
            let common = shared_vertices(&h.edges()[i], &h.edges()[j]);
            if common.len() == 1 {
                witnesses.push(IntersectionProfile { i, j, common });
            }
        }
    }
    if !witnesses.is_empty() {
        return Err(Error::Precondition(Box::new(PatternReport {
            subject: Subject::Condition(Condition::I0Free),
            avoided: false,
            witnesses,
        })));
    }

    let Some((&first, rest)) = star.split_first() else {
        return Ok(HeadStar::Empty);
    };
    let mut common: Vec<usize> = h.edges()[first].tail().to_vec();
    for &i in rest {
        let tail = h.edges()[i].tail();
        common.retain(|v| tail.contains(v));
    }
    if let Some(&pivot) = common.first() {
        return Ok(HeadStar::Pivot(pivot));
    }

    let mut covered: Vec<usize> = star.iter().flat_map(|&i| h.edges()[i].tail().to_vec()).collect();
    covered.sort_unstable();
    covered.dedup();
    if star.len() == 3 && covered.len() == 3 {
        return Ok(HeadStar::Triangle([covered[0], covered[1], covered[2]]));
    }
    Err(Error::HeadStar {
        vertex: h.name(u).to_string(),
        detail: format!(
            "{} edges with no common tail that do not form a triangle (repeated edges?)",
            star.len()
        ),
    })
}

/// Edges appended by [`augment_i0`], in order.
fn augmentation(h: &DirectedHypergraph) -> Result<Vec<DirectedEdge>> {
    h.require_two_to_one()?;
    let report = check_condition(h, Condition::I0Free);
    if !report.avoided {
        return Err(Error::Precondition(Box::new(report)));
    }
    let mut sets: Vec<Vec<usize>> = h.edges().iter().map(DirectedEdge::vertices).collect();
    sets.sort_unstable();
    if let Some(w) = sets.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::HeadStar {
            vertex: h.name(w[0][0]).to_string(),
            detail: "two edges share a vertex set".into(),
        });
    }

    let n = h.vertex_count();
    let mut added = Vec::new();
    for u in 0..n {
        let pivot = match classify_head_star(h, u)? {
            HeadStar::Triangle(_) => continue,
            HeadStar::Pivot(v) => v,
            HeadStar::Empty => match (0..n).find(|&v| v != u) {
                Some(v) => v,
                None => continue,
            },
        };
        for w in (0..n).filter(|&w| w != u && w != pivot) {
            let edge = DirectedEdge::two_to_one(pivot, w, u);
            if !h.edges().contains(&edge) {
                added.push(edge);
            }
        }
    }
    Ok(added)
}

/// Completes every non-triangle head-star to the full star around its pivot:
/// for head `u` with pivot `v`, all edges `vw>u`. An empty star takes the
/// smallest-index vertex other than `u` as pivot. New edges are appended
/// after the existing ones.
pub fn augment_i0(h: &DirectedHypergraph) -> Result<DirectedHypergraph> {
    let mut out = h.clone();
    for e in augmentation(h)? {
        out.push_edge_unchecked(e);
    }
    Ok(out)
}

/// Position (0, 1 or 2) of the head among the edge's vertices in index order.
fn head_rank(e: &DirectedEdge) -> usize {
    let head = e.head()[0];
    e.tail().iter().filter(|&&t| t < head).count()
}

/// Proper 4-coloring of an I0-free 2→1 hypergraph.
///
/// The input is normalized and augmented, then edges are grouped by whether
/// the head is the smallest, middle or largest vertex. Step 1 (ascending)
/// turns red the head of a blue edge whose head is last; step 2
/// (descending) turns green the head of an edge whose head is first and
/// that has no green vertex yet; step 3 (ascending) turns yellow the head of
/// a blue edge whose head is in the middle.
pub fn color_i0_4(h: &DirectedHypergraph, opts: &RunOptions) -> Result<ColoringRun> {
    h.require_two_to_one()?;
    require_condition(h, Algorithm::I0Four.condition(), opts)?;

    let kept = normalized_edge_indices(h);
    let mut working = h.edge_subset(&kept);
    // Nothing to color around: leave an edgeless input alone.
    let added = if kept.is_empty() {
        Vec::new()
    } else {
        augmentation(&working)?
    };
    let mut edge_origin: Vec<EdgeOrigin> = kept.iter().map(|&i| EdgeOrigin::Input(i)).collect();
    for (j, e) in added.into_iter().enumerate() {
        working.push_edge_unchecked(e);
        edge_origin.push(EdgeOrigin::Added(j));
    }

    let n = working.vertex_count();
    let edges = working.edges();
    // by_head[rank][v]: edges with head v whose head has that rank.
    let mut by_head = vec![vec![Vec::new(); n]; 3];
    for (i, e) in edges.iter().enumerate() {
        by_head[head_rank(e)][e.head()[0]].push(i);
    }

    let mut colors = vec![Color::BLUE; n];
    let mut trace = RunTrace::default();

    for v in 0..n {
        match by_head[2][v]
            .iter()
            .copied()
            .find(|&i| all_colored(&colors, &edges[i], Color::BLUE))
        {
            Some(i) => {
                colors[v] = Color::RED;
                trace.record(1, v, Action::ColoredRed, Some(i), None);
            }
            None => trace.record(1, v, Action::Kept, None, None),
        }
    }

    for v in (0..n).rev() {
        match by_head[0][v].iter().copied().find(|&i| {
            !edges[i]
                .vertices()
                .iter()
                .any(|&x| colors[x] == Color::GREEN)
        }) {
            Some(i) => {
                colors[v] = Color::GREEN;
                trace.record(2, v, Action::ColoredGreen, Some(i), None);
            }
            None => trace.record(2, v, Action::Kept, None, None),
        }
    }

    for v in 0..n {
        match by_head[1][v]
            .iter()
            .copied()
            .find(|&i| all_colored(&colors, &edges[i], Color::BLUE))
        {
            Some(i) => {
                colors[v] = Color::YELLOW;
                trace.record(3, v, Action::ColoredYellow, Some(i), None);
            }
            None => trace.record(3, v, Action::Kept, None, None),
        }
    }

    Ok(ColoringRun {
        algorithm: Algorithm::I0Four,
        coloring: Coloring::new(colors, 4)?,
        trace,
        order: ProcessingOrder::identity(n),
        edge_origin,
        working,
    })
}
