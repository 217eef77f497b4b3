use std::fmt;

use serde::Serialize;

use crate::coloring::Color;
use crate::hypergraph::DirectedHypergraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Action {
    Kept,
    ColoredRed,
    RecoloredPreviousBlue,
    ColoredGreen,
    ColoredYellow,
}

impl Action {
    /// The color the vertex has after the event, if it changed.
    pub fn new_color(self) -> Option<Color> {
        match self {
            Action::Kept => None,
            Action::ColoredRed => Some(Color::RED),
            Action::RecoloredPreviousBlue => Some(Color::BLUE),
            Action::ColoredGreen => Some(Color::GREEN),
            Action::ColoredYellow => Some(Color::YELLOW),
        }
    }

    /// Whether the event is the visit of a vertex by a pass. The one-head
    /// recoloring of the previous vertex is a side effect, not a visit.
    pub fn is_visit(self) -> bool {
        self != Action::RecoloredPreviousBlue
    }

    pub fn name(self) -> &'static str {
        match self {
            Action::Kept => "kept",
            Action::ColoredRed => "colored-red",
            Action::RecoloredPreviousBlue => "recolored-previous-blue",
            Action::ColoredGreen => "colored-green",
            Action::ColoredYellow => "colored-yellow",
        }
    }
}

impl fmt::Display for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Edge and vertex indices refer to the run's working hypergraph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceEvent {
    pub step: usize,
    pub pass: usize,
    pub vertex: usize,
    pub action: Action,
    pub edge: Option<usize>,
    pub next: Option<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct RunTrace {
    events: Vec<TraceEvent>,
}

impl RunTrace {
    pub(crate) fn record(
        &mut self,
        pass: usize,
        vertex: usize,
        action: Action,
        edge: Option<usize>,
        next: Option<usize>,
    ) {
        let step = self.events.len();
        self.events.push(TraceEvent {
            step,
            pass,
            vertex,
            action,
            edge,
            next,
        });
    }

    pub fn events(&self) -> &[TraceEvent] {
        &self.events
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }
}

/// Where an edge of the working hypergraph came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeOrigin {
    /// Index into the input hypergraph.
    Input(usize),
    /// Edge added by head-star augmentation, numbered in order of addition.
    Added(usize),
}

impl fmt::Display for EdgeOrigin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeOrigin::Input(i) => write!(f, "{i}"),
            EdgeOrigin::Added(i) => write!(f, "+{i}"),
        }
    }
}

/// One line per event: `step pass vertex action edge next`, with `-` for
/// absent fields and edges numbered as in the input (`+j` for added edges).
pub fn trace_to_text(
    trace: &RunTrace,
    working: &DirectedHypergraph,
    origin: &[EdgeOrigin],
) -> String {
    let mut out = String::from("# step pass vertex action edge next\n");
    for ev in trace.events() {
        let edge = ev
            .edge
            .map_or_else(|| "-".to_string(), |e| origin[e].to_string());
        let next = ev.next.map_or("-", |v| working.name(v));
        out.push_str(&format!(
            "{} {} {} {} {} {}\n",
            ev.step,
            ev.pass,
            working.name(ev.vertex),
            ev.action,
            edge,
            next
        ));
    }
    out
}
