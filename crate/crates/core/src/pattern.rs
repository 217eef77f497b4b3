//! Pairwise edge intersections, the seven two-edge 2→1 patterns and the
//! intersection conditions built from them.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::{DirectedEdge, DirectedHypergraph, Role};

/// A vertex shared by two edges with its role in each.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SharedVertex {
    pub vertex: usize,
    pub first: Role,
    pub second: Role,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntersectionProfile {
    pub i: usize,
    pub j: usize,
    pub common: Vec<SharedVertex>,
}

impl IntersectionProfile {
    pub fn len(&self) -> usize {
        self.common.len()
    }

    pub fn is_empty(&self) -> bool {
        self.common.is_empty()
    }

    /// Role pairs, sorted, as seen from edge `i` first.
    fn signature(&self) -> Vec<(Role, Role)> {
        let mut sig: Vec<_> = self.common.iter().map(|s| (s.first, s.second)).collect();
        sig.sort_unstable();
        sig
    }

    fn swapped_signature(&self) -> Vec<(Role, Role)> {
        let mut sig: Vec<_> = self.common.iter().map(|s| (s.second, s.first)).collect();
        sig.sort_unstable();
        sig
    }

    /// `i j name:R/R ...` with roles as T or H.
    pub fn describe(&self, h: &DirectedHypergraph) -> String {
        let mut out = format!("{} {}", self.i, self.j);
        for s in &self.common {
            out.push_str(&format!(
                " {}:{}/{}",
                h.name(s.vertex),
                s.first.letter(),
                s.second.letter()
            ));
        }
        out
    }
}

/// Common vertices of two edges in increasing vertex order.
pub fn shared_vertices(a: &DirectedEdge, b: &DirectedEdge) -> Vec<SharedVertex> {
    a.vertices()
        .into_iter()
        .filter_map(|v| {
            b.role_of(v).map(|second| SharedVertex {
                vertex: v,
                first: a.role_of(v).expect("vertex taken from a"),
                second,
            })
        })
        .collect()
}

pub fn classify_intersection(h: &DirectedHypergraph, i: usize, j: usize) -> Result<IntersectionProfile> {
    if i >= j {
        return Err(Error::UnorderedPair(i, j));
    }
    let a = h.edge(i)?;
    let b = h.edge(j)?;
    Ok(IntersectionProfile {
        i,
        j,
        common: shared_vertices(a, b),
    })
}

fn all_pairs(h: &DirectedHypergraph) -> impl Iterator<Item = IntersectionProfile> + '_ {
    let m = h.edge_count();
    (0..m).flat_map(move |i| {
        (i + 1..m).map(move |j| IntersectionProfile {
            i,
            j,
            common: shared_vertices(&h.edges()[i], &h.edges()[j]),
        })
    })
}

/// The two-edge 2→1 hypergraphs studied as forbidden patterns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Pattern {
    H2,
    I1,
    R3,
    E,
    I0,
    H1,
    R4,
}

impl Pattern {
    pub const ALL: [Pattern; 7] = [
        Pattern::H2,
        Pattern::I1,
        Pattern::R3,
        Pattern::E,
        Pattern::I0,
        Pattern::H1,
        Pattern::R4,
    ];

    /// The pattern's edges written as `(tail, tail, head)` over letters.
    pub fn edges(self) -> [[&'static str; 3]; 2] {
        match self {
            Pattern::H2 => [["a", "b", "c"], ["a", "b", "d"]],
            Pattern::I1 => [["a", "b", "c"], ["a", "d", "c"]],
            Pattern::R3 => [["a", "b", "c"], ["b", "c", "d"]],
            Pattern::E => [["a", "b", "c"], ["d", "c", "b"]],
            Pattern::I0 => [["a", "b", "e"], ["c", "d", "e"]],
            Pattern::H1 => [["a", "b", "c"], ["a", "d", "e"]],
            Pattern::R4 => [["a", "b", "c"], ["c", "d", "e"]],
        }
    }

    pub fn hypergraph(self) -> DirectedHypergraph {
        let mut h = DirectedHypergraph::new();
        for [a, b, c] in self.edges() {
            h.add_edge_named(&[a, b], &[c]).expect("pattern edges are valid");
        }
        h
    }

    fn signature(self) -> Vec<(Role, Role)> {
        classify_intersection(&self.hypergraph(), 0, 1)
            .expect("patterns have two edges")
            .signature()
    }

    /// Whether the pair described by `profile` is an image of this pattern.
    pub fn matches(self, profile: &IntersectionProfile) -> bool {
        let sig = self.signature();
        profile.signature() == sig || profile.swapped_signature() == sig
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Pattern::H2 => "H2",
            Pattern::I1 => "I1",
            Pattern::R3 => "R3",
            Pattern::E => "E",
            Pattern::I0 => "I0",
            Pattern::H1 => "H1",
            Pattern::R4 => "R4",
        })
    }
}

impl FromStr for Pattern {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Pattern::ALL
            .into_iter()
            .find(|p| p.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown pattern {s:?} (expected one of H2 I1 R3 E I0 H1 R4)"))
    }
}

/// Conditions on pairs of edges meeting in one or two vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Condition {
    /// A vertex shared alone is a head of at least one of the two edges.
    #[serde(rename = "onehead-h1")]
    OneHeadH1,
    /// A vertex shared alone is a tail of at least one of the two edges.
    #[serde(rename = "i0-free")]
    I0Free,
    /// A vertex shared alone is a head of both or a tail of both.
    #[serde(rename = "r4-free")]
    R4Free,
    /// A vertex shared alone is a tail of both.
    #[serde(rename = "i0r4-free")]
    I0R4Free,
    /// No two edges share exactly one vertex.
    #[serde(rename = "lovasz")]
    Lovasz,
    /// Of two vertices shared by a pair, one is a head of one of the two edges.
    #[serde(rename = "h2-two-intersect")]
    H2TwoIntersect,
    /// Two edges sharing exactly two vertices both have those as their tails.
    #[serde(rename = "tails-only-2-intersect")]
    TailsOnly2Intersect,
}

impl Condition {
    pub const ALL: [Condition; 7] = [
        Condition::OneHeadH1,
        Condition::I0Free,
        Condition::R4Free,
        Condition::I0R4Free,
        Condition::Lovasz,
        Condition::H2TwoIntersect,
        Condition::TailsOnly2Intersect,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Condition::OneHeadH1 => "onehead-h1",
            Condition::I0Free => "i0-free",
            Condition::R4Free => "r4-free",
            Condition::I0R4Free => "i0r4-free",
            Condition::Lovasz => "lovasz",
            Condition::H2TwoIntersect => "h2-two-intersect",
            Condition::TailsOnly2Intersect => "tails-only-2-intersect",
        }
    }

    /// Whether the pair `(a, b)` breaks the condition.
    pub fn violated_by(self, a: &DirectedEdge, b: &DirectedEdge, common: &[SharedVertex]) -> bool {
        use Role::{Head, Tail};
        match (self, common) {
            (Condition::OneHeadH1, [s]) => s.first == Tail && s.second == Tail,
            (Condition::I0Free, [s]) => s.first == Head && s.second == Head,
            (Condition::R4Free, [s]) => s.first != s.second,
            (Condition::I0R4Free, [s]) => !(s.first == Tail && s.second == Tail),
            (Condition::Lovasz, [_]) => true,
            (Condition::H2TwoIntersect, [_, _]) => common
                .iter()
                .all(|s| s.first == Tail && s.second == Tail),
            (Condition::TailsOnly2Intersect, [_, _]) => {
                let shared: Vec<usize> = common.iter().map(|s| s.vertex).collect();
                a.tail() != shared.as_slice() || b.tail() != shared.as_slice()
            }
            _ => false,
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Condition {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Condition::ALL
            .into_iter()
            .find(|c| c.id() == s)
            .ok_or_else(|| {
                let ids: Vec<_> = Condition::ALL.iter().map(|c| c.id()).collect();
                format!("unknown condition {s:?} (expected one of {})", ids.join(" "))
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "id", rename_all = "lowercase")]
pub enum Subject {
    Pattern(Pattern),
    Condition(Condition),
}

impl fmt::Display for Subject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subject::Pattern(p) => write!(f, "pattern {p}"),
            Subject::Condition(c) => write!(f, "condition {c}"),
        }
    }
}

/// Outcome of a pattern or condition check. `avoided` holds exactly when
/// there are no witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PatternReport {
    pub subject: Subject,
    pub avoided: bool,
    pub witnesses: Vec<IntersectionProfile>,
}

impl PatternReport {
    fn from_witnesses(subject: Subject, witnesses: Vec<IntersectionProfile>) -> Self {
        PatternReport {
            subject,
            avoided: witnesses.is_empty(),
            witnesses,
        }
    }
}

impl fmt::Display for PatternReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = match (self.subject, self.avoided) {
            (Subject::Pattern(_), true) => "avoided",
            (Subject::Pattern(_), false) => "contained",
            (Subject::Condition(_), true) => "satisfied",
            (Subject::Condition(_), false) => "violated",
        };
        write!(f, "{} {verdict}", self.subject)?;
        if let Some(w) = self.witnesses.first() {
            write!(f, " (edges {} and {}", w.i, w.j)?;
            if self.witnesses.len() > 1 {
                write!(f, ", {} pairs in total", self.witnesses.len())?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Every pair of distinct edges that realizes `pattern`. Requires a 2→1
/// hypergraph.
pub fn contains_pattern(h: &DirectedHypergraph, pattern: Pattern) -> Result<PatternReport> {
    h.require_two_to_one()?;
    let sig = pattern.signature();
    let witnesses = all_pairs(h)
        .filter(|p| p.signature() == sig || p.swapped_signature() == sig)
        .collect();
    Ok(PatternReport::from_witnesses(Subject::Pattern(pattern), witnesses))
}

/// Every pair of edges breaking `cond`. Works on arbitrary directed
/// hypergraphs.
pub fn check_condition(h: &DirectedHypergraph, cond: Condition) -> PatternReport {
    let edges = h.edges();
    let witnesses = all_pairs(h)
        .filter(|p| cond.violated_by(&edges[p.i], &edges[p.j], &p.common))
        .collect();
    PatternReport::from_witnesses(Subject::Condition(cond), witnesses)
}

/// Whether adding `edge` to `h` keeps `cond` free of new violations.
pub fn compatible_with(h: &DirectedHypergraph, cond: Condition, edge: &DirectedEdge) -> bool {
    h.edges().iter().all(|e| {
        let common = shared_vertices(e, edge);
        !cond.violated_by(e, edge, &common)
    })
}
