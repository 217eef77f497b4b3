//! Directed hypergraphs over an ordered vertex sequence.
//!
//! Vertices are addressed by their position in the sequence. Every algorithm
//! in this crate that needs a vertex ordering uses this one, so a hypergraph
//! value fully determines a run.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// The part of an edge a vertex belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Tail,
    Head,
}

impl Role {
    pub fn letter(self) -> char {
        match self {
            Role::Tail => 'T',
            Role::Head => 'H',
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Role::Tail => "tail",
            Role::Head => "head",
        })
    }
}

/// An edge split into tail and head vertex sets, each kept sorted by vertex
/// index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DirectedEdge {
    tail: Vec<usize>,
    head: Vec<usize>,
}

impl DirectedEdge {
    pub fn tail(&self) -> &[usize] {
        &self.tail
    }

    pub fn head(&self) -> &[usize] {
        &self.head
    }

    pub fn len(&self) -> usize {
        self.tail.len() + self.head.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// All vertices of the edge in increasing index order.
    pub fn vertices(&self) -> Vec<usize> {
        let mut all = Vec::with_capacity(self.len());
        all.extend_from_slice(&self.tail);
        all.extend_from_slice(&self.head);
        all.sort_unstable();
        all
    }

    pub fn contains(&self, v: usize) -> bool {
        self.role_of(v).is_some()
    }

    pub fn role_of(&self, v: usize) -> Option<Role> {
        if self.tail.binary_search(&v).is_ok() {
            Some(Role::Tail)
        } else if self.head.binary_search(&v).is_ok() {
            Some(Role::Head)
        } else {
            None
        }
    }

    /// Largest vertex index in the edge.
    pub fn last_vertex(&self) -> usize {
        let t = self.tail.last().copied();
        let h = self.head.last().copied();
        t.max(h).expect("edges are non-empty")
    }

    /// The single head of a one-headed edge.
    pub fn single_head(&self) -> Option<usize> {
        match self.head.as_slice() {
            [h] => Some(*h),
            _ => None,
        }
    }

    pub fn is_two_to_one(&self) -> bool {
        self.tail.len() == 2 && self.head.len() == 1
    }

    fn remapped(&self, map: &[usize]) -> DirectedEdge {
        let mut tail: Vec<usize> = self.tail.iter().map(|&v| map[v]).collect();
        let mut head: Vec<usize> = self.head.iter().map(|&v| map[v]).collect();
        tail.sort_unstable();
        head.sort_unstable();
        DirectedEdge { tail, head }
    }
}

/// A vertex name is a non-empty token without whitespace or `#`, and is not
/// the separator `>`.
pub fn is_valid_name(name: &str) -> bool {
    !name.is_empty() && name != ">" && !name.contains('#') && !name.chars().any(char::is_whitespace)
}

#[derive(Debug, Clone, Default)]
pub struct DirectedHypergraph {
    names: Vec<String>,
    lookup: HashMap<String, usize>,
    edges: Vec<DirectedEdge>,
}

impl PartialEq for DirectedHypergraph {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.edges == other.edges
    }
}

impl Eq for DirectedHypergraph {}

impl DirectedHypergraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_vertices<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut h = Self::new();
        for name in names {
            h.add_vertex(name)?;
        }
        Ok(h)
    }

    /// Appends a vertex to the sequence and returns its index.
    pub fn add_vertex(&mut self, name: impl Into<String>) -> Result<usize> {
        let name = name.into();
        if !is_valid_name(&name) {
            return Err(Error::InvalidName(name));
        }
        if self.lookup.contains_key(&name) {
            return Err(Error::DuplicateVertex(name));
        }
        let index = self.names.len();
        self.lookup.insert(name.clone(), index);
        self.names.push(name);
        Ok(index)
    }

    fn vertex_or_insert(&mut self, name: &str) -> Result<usize> {
        match self.lookup.get(name) {
            Some(&v) => Ok(v),
            None => self.add_vertex(name),
        }
    }

    pub fn add_edge(&mut self, tail: &[usize], head: &[usize]) -> Result<usize> {
        let n = self.names.len();
        if let Some(&bad) = tail.iter().chain(head).find(|&&v| v >= n) {
            return Err(Error::UnknownVertex(format!("#{bad}")));
        }
        if tail.is_empty() && head.is_empty() {
            return Err(Error::EmptyEdge);
        }
        let mut tail = tail.to_vec();
        let mut head = head.to_vec();
        tail.sort_unstable();
        head.sort_unstable();
        for side in [&tail, &head] {
            if let Some(w) = side.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::RepeatedInEdge(self.names[w[0]].clone()));
            }
        }
        if let Some(&v) = tail.iter().find(|v| head.binary_search(v).is_ok()) {
            return Err(Error::HeadTailOverlap(self.names[v].clone()));
        }
        self.edges.push(DirectedEdge { tail, head });
        Ok(self.edges.len() - 1)
    }

    /// Adds an edge by vertex names, appending unknown names to the vertex
    /// sequence (tails first, then heads).
    pub fn add_edge_named<S: AsRef<str>>(&mut self, tail: &[S], head: &[S]) -> Result<usize> {
        let mut t = Vec::with_capacity(tail.len());
        for name in tail {
            t.push(self.vertex_or_insert(name.as_ref())?);
        }
        let mut hd = Vec::with_capacity(head.len());
        for name in head {
            hd.push(self.vertex_or_insert(name.as_ref())?);
        }
        self.add_edge(&t, &hd)
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.lookup.get(name).copied()
    }

    pub fn edges(&self) -> &[DirectedEdge] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> Result<&DirectedEdge> {
        self.edges.get(i).ok_or(Error::EdgeIndex {
            index: i,
            count: self.edges.len(),
        })
    }

    /// Index of the first edge that is not of the form `ab > c`.
    pub fn first_non_two_to_one(&self) -> Option<usize> {
        self.edges.iter().position(|e| !e.is_two_to_one())
    }

    pub fn is_two_to_one(&self) -> bool {
        self.first_non_two_to_one().is_none()
    }

    pub fn require_two_to_one(&self) -> Result<()> {
        match self.first_non_two_to_one() {
            Some(edge) => Err(Error::EdgeShape {
                edge,
                expected: "two tails, one head",
            }),
            None => Ok(()),
        }
    }

    /// Same vertex sequence, keeping only the listed edges in the given order.
    pub fn edge_subset(&self, keep: &[usize]) -> DirectedHypergraph {
        DirectedHypergraph {
            names: self.names.clone(),
            lookup: self.lookup.clone(),
            edges: keep.iter().map(|&i| self.edges[i].clone()).collect(),
        }
    }

    /// The same hypergraph with its vertex sequence rearranged: position `i` of
    /// the result holds old vertex `order[i]`.
    pub fn reordered(&self, order: &[usize]) -> Result<DirectedHypergraph> {
        let n = self.names.len();
        let mut new_index = vec![usize::MAX; n];
        if order.len() != n {
            return Err(Error::NotPermutation);
        }
        for (pos, &old) in order.iter().enumerate() {
            if old >= n || new_index[old] != usize::MAX {
                return Err(Error::NotPermutation);
            }
            new_index[old] = pos;
        }
        let mut out = DirectedHypergraph::new();
        for &old in order {
            out.add_vertex(self.names[old].clone())?;
        }
        out.edges = self.edges.iter().map(|e| e.remapped(&new_index)).collect();
        Ok(out)
    }

    pub(crate) fn push_edge_unchecked(&mut self, edge: DirectedEdge) {
        self.edges.push(edge);
    }
}

impl DirectedEdge {
    /// Unvalidated edge from unsorted parts.
    pub(crate) fn from_parts(tail: &[usize], head: &[usize]) -> DirectedEdge {
        let mut tail = tail.to_vec();
        let mut head = head.to_vec();
        tail.sort_unstable();
        head.sort_unstable();
        DirectedEdge { tail, head }
    }

    pub(crate) fn two_to_one(a: usize, b: usize, head: usize) -> DirectedEdge {
        let tail = if a < b { vec![a, b] } else { vec![b, a] };
        DirectedEdge {
            tail,
            head: vec![head],
        }
    }
}

fn is_subset(small: &[usize], big: &[usize]) -> bool {
    let mut it = big.iter();
    small.iter().all(|x| it.any(|y| y == x))
}

/// Indices of the edges kept by [`normalize`], in original order.
pub fn normalized_edge_indices(h: &DirectedHypergraph) -> Vec<usize> {
    let sets: Vec<Vec<usize>> = h.edges.iter().map(DirectedEdge::vertices).collect();
    (0..sets.len())
        .filter(|&j| {
            !sets.iter().enumerate().any(|(i, s)| {
                i != j
                    && s.len() <= sets[j].len()
                    && is_subset(s, &sets[j])
                    && (s.len() < sets[j].len() || i < j)
            })
        })
        .collect()
}

/// Drops every edge whose vertex set contains another edge's vertex set.
/// Among edges with equal vertex sets the first one survives. Roles are
/// ignored for the comparison.
pub fn normalize(h: &DirectedHypergraph) -> DirectedHypergraph {
    h.edge_subset(&normalized_edge_indices(h))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc_abcd() -> DirectedHypergraph {
        let mut h = DirectedHypergraph::new();
        h.add_edge_named(&["a", "b"], &["c"]).unwrap();
        h.add_edge_named(&["a", "d", "c"], &["b"]).unwrap();
        h
    }

    #[test]
    fn superset_edge_is_dropped() {
        let h = abc_abcd();
        let n = normalize(&h);
        assert_eq!(n.edge_count(), 1);
        assert_eq!(n.edges()[0], h.edges()[0]);
        assert_eq!(n.vertex_count(), 4);
    }

    #[test]
    fn superset_dropped_regardless_of_order() {
        let mut h = DirectedHypergraph::new();
        h.add_edge_named(&["a", "b", "d"], &["c"]).unwrap();
        h.add_edge_named(&["b"], &["c", "a"]).unwrap();
        assert_eq!(normalized_edge_indices(&h), vec![1]);
    }

    #[test]
    fn duplicates_keep_first() {
        let mut h = DirectedHypergraph::new();
        h.add_edge_named(&["a", "b"], &["c"]).unwrap();
        h.add_edge_named(&["c", "b"], &["a"]).unwrap();
        h.add_edge_named(&["a", "b"], &["c"]).unwrap();
        assert_eq!(normalized_edge_indices(&h), vec![0]);
    }

    #[test]
    fn overlap_and_empty_are_rejected() {
        let mut h = DirectedHypergraph::with_vertices(["a", "b"]).unwrap();
        assert_eq!(h.add_edge(&[0], &[0]), Err(Error::HeadTailOverlap("a".into())));
        assert_eq!(h.add_edge(&[], &[]), Err(Error::EmptyEdge));
        assert_eq!(h.add_edge(&[0, 0], &[1]), Err(Error::RepeatedInEdge("a".into())));
        assert!(h.add_edge(&[5], &[1]).is_err());
    }

    #[test]
    fn names_are_validated() {
        let mut h = DirectedHypergraph::new();
        for bad in ["", ">", "a#b", "a b", "x\t"] {
            assert_eq!(h.add_vertex(bad), Err(Error::InvalidName(bad.into())));
        }
        h.add_vertex("a>b").unwrap();
        assert_eq!(h.add_vertex("a>b"), Err(Error::DuplicateVertex("a>b".into())));
    }

    #[test]
    fn reorder_remaps_edges() {
        let h = abc_abcd();
        let r = h.reordered(&[3, 2, 1, 0]).unwrap();
        assert_eq!(r.names(), ["d", "c", "b", "a"]);
        let e = &r.edges()[0];
        assert_eq!(e.tail(), &[2, 3]);
        assert_eq!(e.head(), &[1]);
        assert!(h.reordered(&[0, 0, 1, 2]).is_err());
    }

    #[test]
    fn edge_queries() {
        let h = abc_abcd();
        let e = &h.edges()[1];
        assert_eq!(e.vertices(), vec![0, 1, 2, 3]);
        assert_eq!(e.role_of(1), Some(Role::Head));
        assert_eq!(e.role_of(3), Some(Role::Tail));
        assert_eq!(e.last_vertex(), 3);
        assert!(!e.is_two_to_one());
        assert_eq!(h.first_non_two_to_one(), Some(1));
    }
}
