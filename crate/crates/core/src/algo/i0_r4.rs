use super::{all_colored, input_origin, require_condition, Action, ColoringRun, ProcessingOrder, RunOptions, RunTrace};
use crate::coloring::{Color, Coloring};
use crate::error::Result;
use crate::hypergraph::{normalized_edge_indices, DirectedHypergraph};
use crate::Algorithm;

/// Proper 2-coloring of a 2→1 hypergraph in which a vertex shared alone by
/// two edges is a tail of both. One ascending pass: a vertex turns red when
/// it heads an edge that is still entirely blue.
pub fn color_i0_r4_2(h: &DirectedHypergraph, opts: &RunOptions) -> Result<ColoringRun> {
    h.require_two_to_one()?;
    require_condition(h, Algorithm::I0R4Two.condition(), opts)?;

    let kept = normalized_edge_indices(h);
    let g = h.edge_subset(&kept);
    let n = g.vertex_count();
    let mut by_head = vec![Vec::new(); n];
    for (i, e) in g.edges().iter().enumerate() {
        by_head[e.head()[0]].push(i);
    }

    let mut colors = vec![Color::BLUE; n];
    let mut trace = RunTrace::default();
    for v in 0..n {
        match by_head[v]
            .iter()
            .copied()
            .find(|&i| all_colored(&colors, &g.edges()[i], Color::BLUE))
        {
            Some(i) => {
                colors[v] = Color::RED;
                trace.record(1, v, Action::ColoredRed, Some(i), None);
            }
            None => trace.record(1, v, Action::Kept, None, None),
        }
    }

    Ok(ColoringRun {
        algorithm: Algorithm::I0R4Two,
        coloring: Coloring::new(colors, 2)?,
        trace,
        order: ProcessingOrder::identity(n),
        edge_origin: input_origin(&kept),
        working: g,
    })
}
