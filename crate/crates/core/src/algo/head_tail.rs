use super::{
    all_colored, edges_by_last_vertex, input_origin, require_condition, require_shape, Action,
    ColoringRun, ProcessingOrder, RunOptions, RunTrace,
};
use crate::coloring::{Color, Coloring};
use crate::error::Result;
use crate::hypergraph::{normalized_edge_indices, DirectedHypergraph, Role};
use crate::Algorithm;

/// Proper 3-coloring when every edge has a head and a tail and a vertex
/// shared alone by two edges has the same role in both.
///
/// Edges are split by the role of their largest-index vertex. Pass 1 turns
/// a vertex red if it is the tail closing a still-blue edge; pass 2 turns a
/// vertex green if it is the head closing a still-blue edge.
pub fn color_head_tail_3(h: &DirectedHypergraph, opts: &RunOptions) -> Result<ColoringRun> {
    require_shape(h, "at least one head and one tail", |e| {
        !e.head().is_empty() && !e.tail().is_empty()
    })?;
    require_condition(h, Algorithm::HeadTail3.condition(), opts)?;

    let kept = normalized_edge_indices(h);
    let g = h.edge_subset(&kept);
    let edges = g.edges();
    let n = g.vertex_count();
    let by_last = edges_by_last_vertex(&g);
    let mut colors = vec![Color::BLUE; n];
    let mut trace = RunTrace::default();

    for (pass, closing_role, color, action) in [
        (1, Role::Tail, Color::RED, Action::ColoredRed),
        (2, Role::Head, Color::GREEN, Action::ColoredGreen),
    ] {
        for v in 0..n {
            let trigger = by_last[v].iter().copied().find(|&i| {
                edges[i].role_of(v) == Some(closing_role) && all_colored(&colors, &edges[i], Color::BLUE)
            });
            match trigger {
                Some(i) => {
                    colors[v] = color;
                    trace.record(pass, v, action, Some(i), None);
                }
                None => trace.record(pass, v, Action::Kept, None, None),
            }
        }
    }

    Ok(ColoringRun {
        algorithm: Algorithm::HeadTail3,
        coloring: Coloring::new(colors, 3)?,
        trace,
        order: ProcessingOrder::identity(n),
        edge_origin: input_origin(&kept),
        working: g,
    })
}
