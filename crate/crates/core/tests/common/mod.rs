#![allow(dead_code)]

//! Brute-force subhypergraph search over injective vertex maps, used to
//! check the pair-based pattern detector.

use std::collections::HashSet;

use dhcolor::{contains_pattern, DirectedHypergraph, Pattern};

/// Pattern edges as (tail, tail, head) over letters a..e.
fn pattern_edges(p: Pattern) -> [[char; 3]; 2] {
    match p {
        Pattern::H2 => [['a', 'b', 'c'], ['a', 'b', 'd']],
        Pattern::I1 => [['a', 'b', 'c'], ['a', 'd', 'c']],
        Pattern::R3 => [['a', 'b', 'c'], ['b', 'c', 'd']],
        Pattern::E => [['a', 'b', 'c'], ['d', 'c', 'b']],
        Pattern::I0 => [['a', 'b', 'e'], ['c', 'd', 'e']],
        Pattern::H1 => [['a', 'b', 'c'], ['a', 'd', 'e']],
        Pattern::R4 => [['a', 'b', 'c'], ['c', 'd', 'e']],
    }
}

pub type Triple = (usize, usize, usize);

pub fn key(a: usize, b: usize, head: usize) -> Triple {
    (a.min(b), a.max(b), head)
}

fn injective_maps(p: usize, n: usize, prefix: &mut Vec<usize>, out: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    if prefix.len() == p {
        return out(prefix);
    }
    for v in 0..n {
        if !prefix.contains(&v) {
            prefix.push(v);
            let found = injective_maps(p, n, prefix, out);
            prefix.pop();
            if found {
                return true;
            }
        }
    }
    false
}

/// Whether the edge set `edges` on `n` vertices contains `p` as a
/// subhypergraph.
pub fn oracle_contains(edges: &[Triple], n: usize, p: Pattern) -> bool {
    let set: HashSet<Triple> = edges.iter().copied().collect();
    let pe = pattern_edges(p);
    let letters = pe.iter().flatten().map(|c| (*c as u8 - b'a') as usize).max().unwrap() + 1;
    if letters > n {
        return false;
    }
    injective_maps(letters, n, &mut Vec::new(), &mut |phi| {
        pe.iter().all(|[a, b, h]| {
            let m = |c: &char| phi[(*c as u8 - b'a') as usize];
            set.contains(&key(m(a), m(b), m(h)))
        })
    })
}

fn all_triples(n: usize) -> Vec<Triple> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                out.push(key(b, c, a));
                out.push(key(a, c, b));
                out.push(key(a, b, c));
            }
        }
    }
    out
}

fn for_each_subset(items: &[Triple], max: usize, f: &mut dyn FnMut(&[Triple])) {
    fn rec(items: &[Triple], start: usize, max: usize, cur: &mut Vec<Triple>, f: &mut dyn FnMut(&[Triple])) {
        f(cur);
        if cur.len() == max {
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            rec(items, i + 1, max, cur, f);
            cur.pop();
        }
    }
    rec(items, 0, max, &mut Vec::new(), f);
}

fn build(n: usize, edges: &[Triple]) -> DirectedHypergraph {
    let mut h = DirectedHypergraph::with_vertices((0..n).map(|i| format!("x{i}"))).unwrap();
    for &(a, b, c) in edges {
        h.add_edge(&[a, b], &[c]).unwrap();
    }
    h
}

/// Returns the number of instances checked.
pub fn check_exhaustively(n: usize, max_edges: usize) -> usize {
    let triples = all_triples(n);
    let mut count = 0;
    for_each_subset(&triples, max_edges, &mut |edges| {
        count += 1;
        let h = build(n, edges);
        for p in Pattern::ALL {
            let report = contains_pattern(&h, p).unwrap();
            let mut expected = Vec::new();
            for i in 0..edges.len() {
                for j in i + 1..edges.len() {
                    if oracle_contains(&[edges[i], edges[j]], n, p) {
                        expected.push((i, j));
                    }
                }
            }
            let found: Vec<(usize, usize)> = report.witnesses.iter().map(|w| (w.i, w.j)).collect();
            assert_eq!(found, expected, "{p} on {edges:?}");
            assert_eq!(report.avoided, !oracle_contains(edges, n, p), "{p} on {edges:?}");
        }
    });
    count
}
