//! Trace replay. Each check re-derives colors from the events alone and
//! tests them against the working hypergraph, without reusing the passes'
//! own bookkeeping.

use serde::Serialize;
use thiserror::Error;

use super::{Action, Algorithm, ColoringRun, TraceEvent};
use crate::coloring::Color;
use crate::hypergraph::{DirectedEdge, DirectedHypergraph, Role};

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
#[error("{}: {message}", step.map_or_else(|| "end of run".to_string(), |s| format!("step {s}")))]
pub struct InvariantViolation {
    pub step: Option<usize>,
    pub message: String,
}

type Audit = Result<(), InvariantViolation>;

fn fail<T>(step: Option<usize>, message: impl Into<String>) -> Result<T, InvariantViolation> {
    Err(InvariantViolation {
        step,
        message: message.into(),
    })
}

struct Replay<'a> {
    h: &'a DirectedHypergraph,
    colors: Vec<Color>,
    changes: Vec<usize>,
}

impl<'a> Replay<'a> {
    fn new(h: &'a DirectedHypergraph) -> Self {
        let n = h.vertex_count();
        Replay {
            h,
            colors: vec![Color::BLUE; n],
            changes: vec![0; n],
        }
    }

    fn is_mono(&self, e: &DirectedEdge, c: Color) -> bool {
        e.vertices().iter().all(|&v| self.colors[v] == c)
    }

    fn has(&self, e: &DirectedEdge, c: Color) -> bool {
        e.vertices().iter().any(|&v| self.colors[v] == c)
    }

    fn mono_edges(&self, c: Color) -> Vec<usize> {
        (0..self.h.edge_count())
            .filter(|&i| self.is_mono(&self.h.edges()[i], c))
            .collect()
    }

    fn apply(&mut self, ev: &TraceEvent) {
        if let Some(c) = ev.action.new_color() {
            if self.colors[ev.vertex] != c {
                self.changes[ev.vertex] += 1;
            }
            self.colors[ev.vertex] = c;
        }
    }

    fn describe(&self, i: usize) -> String {
        let e = &self.h.edges()[i];
        let names = |vs: &[usize]| vs.iter().map(|&v| self.h.name(v)).collect::<Vec<_>>().join(" ");
        format!("edge {i} ({} > {})", names(e.tail()), names(e.head()))
    }
}

/// Checks that the trace is well formed, reproduces the returned coloring,
/// ends in a proper coloring of the working hypergraph, and satisfies the
/// algorithm-specific invariants.
pub fn audit(run: &ColoringRun) -> Audit {
    let h = &run.working;
    let n = h.vertex_count();
    if run.coloring.len() != n {
        return fail(None, "coloring does not cover the working vertex set");
    }
    for (i, ev) in run.trace.events().iter().enumerate() {
        if ev.step != i {
            return fail(Some(ev.step), format!("event {i} carries step {}", ev.step));
        }
        if ev.vertex >= n || ev.next.is_some_and(|v| v >= n) {
            return fail(Some(ev.step), "vertex out of range");
        }
        if ev.edge.is_some_and(|e| e >= h.edge_count()) {
            return fail(Some(ev.step), "edge out of range");
        }
    }

    let replay = match run.algorithm {
        Algorithm::OneHead => audit_one_head(run)?,
        Algorithm::HeadTail3 => audit_passes(
            run,
            &[
                Pass::ascending(Action::ColoredRed),
                Pass::ascending(Action::ColoredGreen),
            ],
            head_tail_checks,
        )?,
        Algorithm::I0Four => audit_passes(
            run,
            &[
                Pass::ascending(Action::ColoredRed),
                Pass::descending(Action::ColoredGreen).overwriting(),
                Pass::ascending(Action::ColoredYellow),
            ],
            i0_four_checks,
        )?,
        Algorithm::I0R4Two => audit_passes(run, &[Pass::ascending(Action::ColoredRed)], |_, _| Ok(()))?,
    };

    if replay.colors != run.coloring.colors() {
        return fail(None, "replayed colors differ from the returned coloring");
    }
    if let Some(c) = replay.colors.iter().find(|c| c.index() >= run.algorithm.colors()) {
        return fail(None, format!("color {} exceeds the algorithm's palette", c.index()));
    }
    for c in 0..run.algorithm.colors() {
        if let Some(&i) = replay.mono_edges(Color(c as u8)).first() {
            return fail(None, format!("{} is monochromatic at the end", replay.describe(i)));
        }
    }
    Ok(())
}

fn named(c: Color) -> String {
    c.label().map_or_else(|| c.to_string(), str::to_string)
}

struct Pass {
    action: Action,
    descending: bool,
    /// Whether the pass may recolor vertices that are not blue.
    overwrites: bool,
}

impl Pass {
    fn ascending(action: Action) -> Self {
        Pass {
            action,
            descending: false,
            overwrites: false,
        }
    }

    fn descending(action: Action) -> Self {
        Pass {
            action,
            descending: true,
            overwrites: false,
        }
    }

    fn overwriting(self) -> Self {
        Pass {
            overwrites: true,
            ..self
        }
    }
}

/// Fixed-order passes: pass `p` (1-based) visits every vertex once in the
/// given direction, and may only introduce its own color on blue vertices.
/// `after_pass` runs once each pass is complete.
fn audit_passes<'a>(
    run: &'a ColoringRun,
    passes: &[Pass],
    after_pass: impl Fn(&Replay<'a>, usize) -> Audit,
) -> Result<Replay<'a>, InvariantViolation> {
    let h = &run.working;
    let n = h.vertex_count();
    let events = run.trace.events();
    if events.len() != n * passes.len() {
        return fail(None, format!("expected {} events, found {}", n * passes.len(), events.len()));
    }
    let mut replay = Replay::new(h);
    for (p, pass) in passes.iter().enumerate() {
        for (k, ev) in events[p * n..(p + 1) * n].iter().enumerate() {
            let expected_vertex = if pass.descending { n - 1 - k } else { k };
            let step = Some(ev.step);
            if ev.pass != p + 1 || ev.vertex != expected_vertex {
                return fail(step, format!("pass {} out of order", p + 1));
            }
            match ev.action {
                Action::Kept => {
                    if ev.edge.is_some() {
                        return fail(step, "kept vertex names a triggering edge");
                    }
                }
                a if a == pass.action => {
                    let Some(e) = ev.edge else {
                        return fail(step, "coloring without a triggering edge");
                    };
                    if !h.edges()[e].contains(ev.vertex) {
                        return fail(step, "triggering edge does not contain the vertex");
                    }
                    if replay.colors[ev.vertex] != Color::BLUE && !pass.overwrites {
                        return fail(step, "recolored a vertex that was not blue");
                    }
                }
                other => {
                    return fail(step, format!("{other} not allowed in pass {}", p + 1));
                }
            }
            replay.apply(ev);
        }
        after_pass(&replay, p + 1)?;
    }
    Ok(replay)
}

fn closing_role(e: &DirectedEdge) -> Role {
    e.role_of(e.last_vertex()).expect("last vertex is in the edge")
}

fn head_tail_checks(r: &Replay<'_>, pass: usize) -> Audit {
    let edges = r.h.edges();
    for (i, e) in edges.iter().enumerate() {
        // A head-closed edge that already holds red is never visited by pass 2.
        let covered = match (pass, closing_role(e)) {
            (1, Role::Tail) => r.has(e, Color::RED),
            (2, Role::Head) => r.has(e, Color::GREEN) || r.has(e, Color::RED),
            _ => true,
        };
        if !covered {
            return fail(None, format!("after pass {pass}: {} is still blue", r.describe(i)));
        }
    }
    for color in [Color::RED, Color::GREEN] {
        if let Some(&i) = r.mono_edges(color).first() {
            return fail(None, format!("after pass {pass}: {} is monochromatic {}", r.describe(i), named(color)));
        }
    }
    Ok(())
}

fn head_rank(e: &DirectedEdge) -> usize {
    let v = e.vertices();
    v.iter().position(|&x| x == e.head()[0]).expect("head is a vertex")
}

fn i0_four_checks(r: &Replay<'_>, pass: usize) -> Audit {
    let edges = r.h.edges();
    let msg = |i: usize, what: &str| format!("after step {pass}: {} {what}", r.describe(i));
    for (i, e) in edges.iter().enumerate() {
        let rank = head_rank(e);
        if rank == 2 && r.is_mono(e, Color::BLUE) {
            return fail(None, msg(i, "is blue and ends in its head"));
        }
        if pass >= 2 && rank == 0 && !r.has(e, Color::GREEN) {
            return fail(None, msg(i, "starts with its head and has no green vertex"));
        }
    }
    let forbidden: &[Color] = match pass {
        1 => &[Color::RED],
        2 => &[Color::RED, Color::GREEN],
        _ => &[Color::RED, Color::GREEN, Color::YELLOW, Color::BLUE],
    };
    for &c in forbidden {
        if let Some(&i) = r.mono_edges(c).first() {
            return fail(None, msg(i, &format!("is monochromatic {}", named(c))));
        }
    }
    Ok(())
}

/// Replay of the one-head run, checking at every event:
/// an edge that turns all red ends (in processing order) in its head, its
/// vertices were processed consecutively, one red step makes at most one
/// such edge, and no vertex changes color more than twice.
fn audit_one_head(run: &ColoringRun) -> Result<Replay<'_>, InvariantViolation> {
    let h = &run.working;
    let n = h.vertex_count();
    let edges = h.edges();
    if !run.order.is_permutation(n) {
        return Err(InvariantViolation {
            step: None,
            message: "processing order is not a permutation".into(),
        });
    }
    let order = run.order.vertices();
    let mut replay = Replay::new(h);
    let mut pos = vec![usize::MAX; n];
    let mut visited = 0usize;
    let mut forced: Option<usize> = None;
    // The all-red edge created by the last red step, awaiting its recolor.
    let mut pending_red: Option<usize> = None;

    let err = |step: usize, message: String| InvariantViolation {
        step: Some(step),
        message,
    };

    for ev in run.trace.events() {
        let step = ev.step;
        if ev.pass != 0 {
            return Err(err(step, "one-head events belong to pass 0".into()));
        }
        if ev.action.is_visit() {
            if pending_red.take().is_some() {
                return Err(err(step, "all-red edge left without recoloring".into()));
            }
            if visited >= n || order[visited] != ev.vertex {
                return Err(err(step, "visit does not follow the processing order".into()));
            }
            if let Some(f) = forced.take() {
                if f != ev.vertex {
                    return Err(err(step, format!("expected forced vertex {}", h.name(f))));
                }
            }
            pos[ev.vertex] = visited;
            visited += 1;
        }
        let v = ev.vertex;
        let processed = |x: usize| pos[x] != usize::MAX;
        let qualifies = |r: &Replay<'_>, e: &DirectedEdge| {
            e.role_of(v) == Some(Role::Tail) && r.is_mono(e, Color::BLUE) && e.tail().iter().all(|&t| processed(t))
        };

        match ev.action {
            Action::Kept => {
                if let Some(i) = (0..edges.len()).find(|&i| qualifies(&replay, &edges[i])) {
                    return Err(err(step, format!("kept {} although {} qualifies", h.name(v), replay.describe(i))));
                }
            }
            Action::ColoredRed => {
                let Some(t) = ev.edge.filter(|&i| qualifies(&replay, &edges[i])) else {
                    return Err(err(step, "red without a qualifying blue edge".into()));
                };
                let head = edges[t].head()[0];
                if ev.next.is_some() != !processed(head) || ev.next.is_some_and(|x| x != head) {
                    return Err(err(step, "forced next vertex does not match the trigger's head".into()));
                }
                let any_fresh = (0..edges.len())
                    .any(|i| qualifies(&replay, &edges[i]) && !processed(edges[i].head()[0]));
                if any_fresh && processed(head) {
                    return Err(err(step, "trigger ignores an edge with an unprocessed head".into()));
                }
                forced = ev.next;
                replay.apply(ev);

                let new_red: Vec<usize> = (0..edges.len())
                    .filter(|&i| edges[i].contains(v) && replay.is_mono(&edges[i], Color::RED))
                    .collect();
                if new_red.len() > 1 {
                    return Err(err(step, format!("{} all-red edges created at once", new_red.len())));
                }
                if let Some(&g) = new_red.first() {
                    let e = &edges[g];
                    let ps: Vec<usize> = e.vertices().iter().map(|&x| pos[x]).collect();
                    let last = e.vertices().into_iter().max_by_key(|&x| pos[x]).expect("non-empty");
                    if e.role_of(last) != Some(Role::Head) {
                        return Err(err(step, format!("{} turned red and ends in a tail", replay.describe(g))));
                    }
                    let (lo, hi) = (ps.iter().min().unwrap(), ps.iter().max().unwrap());
                    if hi - lo + 1 != ps.len() {
                        return Err(err(step, format!("{} turned red on non-consecutive vertices", replay.describe(g))));
                    }
                    pending_red = Some(g);
                }
            }
            Action::RecoloredPreviousBlue => {
                let Some(g) = pending_red.take() else {
                    return Err(err(step, "recolor without an all-red edge".into()));
                };
                if ev.edge != Some(g) {
                    return Err(err(step, "recolor names the wrong edge".into()));
                }
                if visited < 2 || order[visited - 2] != v {
                    return Err(err(step, "recolored vertex is not the previous one".into()));
                }
                replay.apply(ev);
                if let Some(&i) = replay.mono_edges(Color::RED).first() {
                    return Err(err(step, format!("{} still all red after recoloring", replay.describe(i))));
                }
            }
            other => return Err(err(step, format!("{other} is not a one-head action"))),
        }

        if let Some(x) = (0..n).find(|&x| replay.changes[x] > 2) {
            return Err(err(step, format!("{} changed color more than twice", h.name(x))));
        }
    }
    if pending_red.is_some() {
        return Err(InvariantViolation {
            step: None,
            message: "run ended with an all-red edge".into(),
        });
    }
    if visited != n {
        return Err(InvariantViolation {
            step: None,
            message: format!("{visited} of {n} vertices processed"),
        });
    }
    Ok(replay)
}
