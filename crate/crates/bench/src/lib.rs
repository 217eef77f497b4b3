//! Shared inputs for the criterion benches.

use dhcolor::generators::{gen_h2_tower, gen_perm_tower, gen_random, paper_i, paper_r};
use dhcolor::pattern::Condition;
use dhcolor::{Algorithm, DirectedHypergraph};

/// Fixed instances used by the solver benches, labelled for report ids.
pub fn solver_inputs() -> Vec<(&'static str, DirectedHypergraph)> {
    vec![
        ("paper-i", paper_i()),
        ("paper-r", paper_r()),
        ("h2-tower-3", gen_h2_tower(3).unwrap()),
        ("h2-tower-4", gen_h2_tower(4).unwrap()),
        ("perm-tower-3", gen_perm_tower(3).unwrap()),
    ]
}

/// Seeded random instances meeting the algorithm's own condition.
pub fn algorithm_inputs(algo: Algorithm, n: usize, count: usize) -> Vec<DirectedHypergraph> {
    let cond: Condition = algo.condition();
    (0..count as u64)
        .map(|seed| gen_random(n, 3 * n, Some(cond), seed).unwrap())
        .collect()
}
