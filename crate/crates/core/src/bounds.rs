//! Edge-count bound for 3-uniform hypergraphs with a good coloring, and
//! good colorings induced from 2→1 directions.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::hypergraph::DirectedHypergraph;

/// `f(0) = f(1) = 1`, `f(n) = max over 1 <= k < n of C(k,2)(n-k) + f(n-k)`.
pub fn f_bound(n: usize) -> u64 {
    f_table(n)[n]
}

/// `f(0..=n)`.
pub fn f_table(n: usize) -> Vec<u64> {
    let mut f = vec![1u64; n + 1];
    for m in 2..=n {
        f[m] = (1..m)
            .map(|k| {
                let k64 = k as u64;
                k64 * (k64 - 1) / 2 * (m - k) as u64 + f[m - k]
            })
            .max()
            .unwrap();
    }
    f
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShadowColor {
    Blue,
    Red { from: usize, to: usize },
}

/// Red/blue coloring of the pairs covered by edges of a 3-uniform
/// hypergraph, red pairs carrying an orientation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoodColoring {
    pub hypergraph: DirectedHypergraph,
    /// Keyed by `(min, max)`.
    pub shadow: BTreeMap<(usize, usize), ShadowColor>,
}

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

impl GoodColoring {
    pub fn color_of(&self, u: usize, v: usize) -> Option<ShadowColor> {
        self.shadow.get(&key(u, v)).copied()
    }

    pub fn red_count(&self) -> usize {
        self.shadow.values().filter(|c| matches!(c, ShadowColor::Red { .. })).count()
    }
}

/// Whether every edge `{u, v, w}` has an apex `u` with `u→v`, `u→w` red and
/// `vw` blue. Edge roles are ignored.
pub fn verify_good_coloring(gc: &GoodColoring) -> Result<bool> {
    let h = &gc.hypergraph;
    let mut good = true;
    for (i, e) in h.edges().iter().enumerate() {
        let vs = e.vertices();
        let [a, b, c] = vs[..] else {
            return Err(Error::EdgeShape {
                edge: i,
                expected: "three vertices",
            });
        };
        for (u, v) in [(a, b), (a, c), (b, c)] {
            if gc.color_of(u, v).is_none() {
                return Err(Error::UncoloredShadowEdge {
                    u: h.name(u).to_string(),
                    v: h.name(v).to_string(),
                });
            }
        }
        let apex_ok = |u: usize, v: usize, w: usize| {
            gc.color_of(u, v) == Some(ShadowColor::Red { from: u, to: v })
                && gc.color_of(u, w) == Some(ShadowColor::Red { from: u, to: w })
                && gc.color_of(v, w) == Some(ShadowColor::Blue)
        };
        good &= apex_ok(a, b, c) || apex_ok(b, a, c) || apex_ok(c, a, b);
    }
    Ok(good)
}

/// Good coloring read off a 2→1 direction: the head is the apex, so
/// head–tail pairs are red pointing away from the head and the tail pair is
/// blue. Two edges that disagree on a pair give [`Error::RoleConflict`].
pub fn induce_good_coloring(h: &DirectedHypergraph) -> Result<GoodColoring> {
    h.require_two_to_one()?;
    let mut owner: BTreeMap<(usize, usize), (ShadowColor, usize)> = BTreeMap::new();
    for (i, e) in h.edges().iter().enumerate() {
        let (c, [a, b]) = (e.head()[0], [e.tail()[0], e.tail()[1]]);
        for (pair, color) in [
            (key(c, a), ShadowColor::Red { from: c, to: a }),
            (key(c, b), ShadowColor::Red { from: c, to: b }),
            (key(a, b), ShadowColor::Blue),
        ] {
            match owner.get(&pair) {
                Some(&(prev, first)) if prev != color => {
                    return Err(Error::RoleConflict {
                        u: h.name(pair.0).to_string(),
                        v: h.name(pair.1).to_string(),
                        first,
                        second: i,
                    });
                }
                Some(_) => {}
                None => {
                    owner.insert(pair, (color, i));
                }
            }
        }
    }
    Ok(GoodColoring {
        hypergraph: h.clone(),
        shadow: owner.into_iter().map(|(k, (c, _))| (k, c)).collect(),
    })
}
