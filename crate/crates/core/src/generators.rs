//! Fixed example hypergraphs, the two high-chromatic towers and seeded
//! random instances.

use std::ops::RangeInclusive;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::{DirectedEdge, DirectedHypergraph};
use crate::pattern::{compatible_with, Condition};

pub const H2_TOWER_LIMIT: usize = 6;
pub const PERM_TOWER_LIMIT: usize = 3;

fn from_triples(triples: &[(usize, usize, usize)]) -> DirectedHypergraph {
    let mut h = DirectedHypergraph::with_vertices((1..=5).map(|i| format!("v{i}"))).unwrap();
    for &(a, b, c) in triples {
        h.add_edge(&[a - 1, b - 1], &[c - 1]).unwrap();
    }
    h
}

/// Five vertices, every triple an edge, no two edges meeting only in a
/// common head. Chromatic number 3.
pub fn paper_i() -> DirectedHypergraph {
    from_triples(&[
        (1, 2, 3),
        (2, 3, 4),
        (3, 4, 5),
        (4, 5, 1),
        (1, 5, 2),
        (1, 3, 4),
        (2, 4, 5),
        (3, 5, 1),
        (1, 4, 2),
        (2, 5, 3),
    ])
}

/// Five vertices, every triple an edge, every single shared vertex has the
/// same role in both edges. Chromatic number 3.
pub fn paper_r() -> DirectedHypergraph {
    from_triples(&[
        (2, 3, 1),
        (2, 4, 3),
        (3, 4, 5),
        (4, 5, 1),
        (1, 2, 5),
        (1, 4, 2),
        (3, 5, 2),
        (1, 3, 4),
        (2, 5, 4),
        (1, 5, 3),
    ])
}

fn base_edge() -> DirectedHypergraph {
    let mut h = DirectedHypergraph::new();
    h.add_edge_named(&["u1", "u2"], &["u3"]).unwrap();
    h
}

fn check_level(what: &'static str, k: usize, limit: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::Parameter {
            what,
            detail: format!("k = {k}, need k >= 2"),
        });
    }
    if k > limit {
        return Err(Error::Guard { what, value: k, limit });
    }
    Ok(())
}

/// Two disjoint copies of `h`, prefixed `a.` and `b.`, in that order.
fn doubled(h: &DirectedHypergraph) -> (DirectedHypergraph, usize) {
    let n = h.vertex_count();
    let mut out = DirectedHypergraph::new();
    for prefix in ["a.", "b."] {
        for name in h.names() {
            out.add_vertex(format!("{prefix}{name}")).unwrap();
        }
    }
    for offset in [0, n] {
        for e in h.edges() {
            let tail: Vec<usize> = e.tail().iter().map(|v| v + offset).collect();
            let head: Vec<usize> = e.head().iter().map(|v| v + offset).collect();
            out.add_edge(&tail, &head).unwrap();
        }
    }
    (out, n)
}

/// H2-free tower with chromatic number at least `k`, refusing `k` above
/// [`H2_TOWER_LIMIT`].
pub fn gen_h2_tower(k: usize) -> Result<DirectedHypergraph> {
    gen_h2_tower_with_limit(k, H2_TOWER_LIMIT)
}

pub fn gen_h2_tower_with_limit(k: usize, limit: usize) -> Result<DirectedHypergraph> {
    check_level("h2-tower level", k, limit)?;
    let mut h = base_edge();
    for level in 3..=k {
        let (mut next, n) = doubled(&h);
        let x = next.add_vertex(format!("x_{level}"))?;
        for a in 0..n {
            for b in n..2 * n {
                next.add_edge(&[a, b], &[x])?;
            }
        }
        h = next;
    }
    Ok(h)
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn one_line_word(sigma: &[usize]) -> String {
    let parts: Vec<String> = sigma.iter().map(|s| (s + 1).to_string()).collect();
    if sigma.len() < 10 {
        parts.concat()
    } else {
        parts.join("-")
    }
}

/// Tower in which any two edges meeting in two vertices share exactly their
/// tails. Chromatic number at least `k`; refuses `k` above
/// [`PERM_TOWER_LIMIT`].
pub fn gen_perm_tower(k: usize) -> Result<DirectedHypergraph> {
    gen_perm_tower_with_limit(k, PERM_TOWER_LIMIT)
}

pub fn gen_perm_tower_with_limit(k: usize, limit: usize) -> Result<DirectedHypergraph> {
    check_level("perm-tower level", k, limit)?;
    let mut h = base_edge();
    for level in 3..=k {
        let (mut next, n) = doubled(&h);
        let mut sigma: Vec<usize> = (0..n).collect();
        loop {
            let x = next.add_vertex(format!("x_{level}_{}", one_line_word(&sigma)))?;
            for (i, &s) in sigma.iter().enumerate() {
                next.add_edge(&[i, n + s], &[x])?;
            }
            if !next_permutation(&mut sigma) {
                break;
            }
        }
        h = next;
    }
    Ok(h)
}

/// Edge shape for [`gen_random_shaped`]: how many tails and heads to draw.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeShape {
    pub tails: RangeInclusive<usize>,
    pub heads: RangeInclusive<usize>,
}

impl EdgeShape {
    pub fn two_to_one() -> Self {
        EdgeShape {
            tails: 2..=2,
            heads: 1..=1,
        }
    }
}

/// Seeded rejection sampler: a random 2→1 edge is kept when its vertex set
/// is new and it keeps `cond` satisfied. Stops after `m` edges or `100 m`
/// draws.
pub fn gen_random(n: usize, m: usize, cond: Option<Condition>, seed: u64) -> Result<DirectedHypergraph> {
    gen_random_shaped(n, m, &EdgeShape::two_to_one(), cond, seed)
}

pub fn gen_random_shaped(
    n: usize,
    m: usize,
    shape: &EdgeShape,
    cond: Option<Condition>,
    seed: u64,
) -> Result<DirectedHypergraph> {
    let smallest = shape.tails.start() + shape.heads.start();
    if n < 3 || smallest > n || smallest == 0 || shape.tails.is_empty() || shape.heads.is_empty() {
        return Err(Error::Parameter {
            what: "random instance",
            detail: format!("n = {n} with tails {:?} and heads {:?}", shape.tails, shape.heads),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut h = DirectedHypergraph::with_vertices((1..=n).map(|i| format!("v{i}")))?;
    let mut seen = std::collections::HashSet::new();
    for _ in 0..m.saturating_mul(100) {
        if h.edge_count() == m {
            break;
        }
        let heads = rng.random_range(shape.heads.clone()).min(n - shape.tails.start());
        let tails = rng.random_range(shape.tails.clone()).min(n - heads);
        let picked = sample(&mut rng, n, tails + heads).into_vec();
        let (head, tail) = picked.split_at(heads);
        let edge = DirectedEdge::from_parts(tail, head);
        if seen.contains(&edge.vertices()) || !cond.is_none_or(|c| compatible_with(&h, c, &edge)) {
            continue;
        }
        seen.insert(edge.vertices());
        h.add_edge(edge.tail(), edge.head())?;
    }
    Ok(h)
}

/// A named generator invocation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GenSpec {
    PaperI,
    PaperR,
    H2Tower {
        k: usize,
    },
    PermTower {
        k: usize,
    },
    Random {
        n: usize,
        m: usize,
        cond: Option<Condition>,
        seed: u64,
    },
}

impl GenSpec {
    pub fn generate(&self) -> Result<DirectedHypergraph> {
        match *self {
            GenSpec::PaperI => Ok(paper_i()),
            GenSpec::PaperR => Ok(paper_r()),
            GenSpec::H2Tower { k } => gen_h2_tower(k),
            GenSpec::PermTower { k } => gen_perm_tower(k),
            GenSpec::Random { n, m, cond, seed } => gen_random(n, m, cond, seed),
        }
    }
}
