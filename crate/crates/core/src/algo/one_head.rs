use super::{
    all_colored, incidence, input_origin, require_condition, require_shape, Action, Chooser,
    ColoringRun, ProcessingOrder, RunOptions, RunTrace,
};
use crate::coloring::{Color, Coloring};
use crate::error::Result;
use crate::hypergraph::{normalized_edge_indices, DirectedHypergraph};
use crate::Algorithm;

/// Proper 2-coloring of a one-headed hypergraph (one head, at least two
/// tails per edge) where a vertex that is the only common vertex of two
/// edges is the head of at least one of them.
///
/// All vertices start blue. The vertex being processed turns red when some
/// blue edge has it as a tail and all its tails already processed; if that
/// makes an edge entirely red, the previously processed vertex goes back to
/// blue. The next vertex is the head of the triggering edge when that head
/// is still unprocessed, otherwise a free choice.
pub fn color_one_head(h: &DirectedHypergraph, opts: &RunOptions) -> Result<ColoringRun> {
    require_shape(h, "one head, at least two tails", |e| {
        e.head().len() == 1 && e.tail().len() >= 2
    })?;
    require_condition(h, Algorithm::OneHead.condition(), opts)?;

    let kept = normalized_edge_indices(h);
    let g = h.edge_subset(&kept);
    let edges = g.edges();
    let n = g.vertex_count();
    let inc = incidence(&g);
    let mut chooser = Chooser::new(opts.ties);

    let mut colors = vec![Color::BLUE; n];
    let mut processed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut trace = RunTrace::default();

    let unprocessed = |processed: &[bool]| -> Vec<usize> {
        (0..n).filter(|&v| !processed[v]).collect()
    };

    let mut current = chooser.pick(&unprocessed(&processed));
    while let Some(v) = current {
        processed[v] = true;
        order.push(v);

        let qualifying: Vec<usize> = inc[v]
            .iter()
            .copied()
            .filter(|&i| {
                let e = &edges[i];
                e.role_of(v) == Some(crate::Role::Tail)
                    && all_colored(&colors, e, Color::BLUE)
                    && e.tail().iter().all(|&t| processed[t])
            })
            .collect();

        if qualifying.is_empty() {
            trace.record(0, v, Action::Kept, None, None);
            current = chooser.pick(&unprocessed(&processed));
            continue;
        }

        let with_fresh_head: Vec<usize> = qualifying
            .iter()
            .copied()
            .filter(|&i| !processed[edges[i].head()[0]])
            .collect();
        let trigger = if with_fresh_head.is_empty() {
            chooser.pick(&qualifying)
        } else {
            chooser.pick(&with_fresh_head)
        }
        .expect("non-empty candidate list");
        let head = edges[trigger].head()[0];
        let forced = (!processed[head]).then_some(head);

        colors[v] = Color::RED;
        trace.record(0, v, Action::ColoredRed, Some(trigger), forced);

        let red_edge = inc[v]
            .iter()
            .copied()
            .find(|&i| all_colored(&colors, &edges[i], Color::RED));
        if let (Some(red_edge), [.., prev, _]) = (red_edge, order.as_slice()) {
            colors[*prev] = Color::BLUE;
            trace.record(0, *prev, Action::RecoloredPreviousBlue, Some(red_edge), None);
        }

        current = match forced {
            Some(head) => Some(head),
            None => chooser.pick(&unprocessed(&processed)),
        };
    }

    Ok(ColoringRun {
        algorithm: Algorithm::OneHead,
        coloring: Coloring::new(colors, 2)?,
        trace,
        order: ProcessingOrder(order),
        edge_origin: input_origin(&kept),
        working: g,
    })
}
