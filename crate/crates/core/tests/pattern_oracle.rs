//! Pair-based pattern detection agrees with brute-force subhypergraph search
//! on every small 2→1 hypergraph.

mod common;

use common::{check_exhaustively, key, oracle_contains, Triple};
use dhcolor::Pattern;

#[test]
fn oracle_sanity() {
    for p in Pattern::ALL {
        let h = p.hypergraph();
        let edges: Vec<Triple> = h
            .edges()
            .iter()
            .map(|e| key(e.tail()[0], e.tail()[1], e.head()[0]))
            .collect();
        for q in Pattern::ALL {
            assert_eq!(oracle_contains(&edges, h.vertex_count(), q), p == q, "{p} vs {q}");
        }
    }
}

#[test]
fn exhaustive_five_vertices_four_edges() {
    let mut total = 0;
    for n in 3..=5 {
        total += check_exhaustively(n, 4);
    }
    assert_eq!(total, 1 + 3 + 3 + 1 + (1 + 12 + 66 + 220 + 495) + (1 + 30 + 435 + 4060 + 27405));
}
