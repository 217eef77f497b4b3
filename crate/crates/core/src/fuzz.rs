//! Randomized soundness checks for the coloring algorithms.
//!
//! Trial `t` is fully determined by `seed + t`: it draws an instance that
//! satisfies the algorithm's condition, runs the algorithm, and checks the
//! coloring against the input, the trace against [`audit`], and (for small
//! instances) the color count against the exact solver. Instances that
//! happen to avoid R3 and E are also checked against the edge bound.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algo::{audit, Algorithm, RunOptions, TieBreak};
use crate::bounds::{f_bound, induce_good_coloring, verify_good_coloring};
use crate::coloring::is_proper;
use crate::format::serialize;
use crate::generators::{gen_random_shaped, EdgeShape};
use crate::hypergraph::DirectedHypergraph;
use crate::pattern::{contains_pattern, Pattern};
use crate::solver::find_proper_coloring;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FuzzConfig {
    pub algorithm: Algorithm,
    pub trials: u64,
    pub n_min: usize,
    pub n_max: usize,
    pub seed: u64,
    /// Draw edges of varying size instead of 2→1 edges (one-head and ht3
    /// only).
    pub mixed: bool,
    /// Resolve the one-head algorithm's free choices at random.
    pub random_ties: bool,
    /// Cross-check with the exact solver up to this many vertices.
    pub solver_max_n: usize,
}

impl FuzzConfig {
    pub fn new(algorithm: Algorithm, trials: u64) -> Self {
        FuzzConfig {
            algorithm,
            trials,
            n_min: 3,
            n_max: 9,
            seed: 0,
            mixed: false,
            random_ties: false,
            solver_max_n: 8,
        }
    }

    pub fn shape(&self) -> EdgeShape {
        match (self.algorithm, self.mixed) {
            (Algorithm::OneHead, true) => EdgeShape {
                tails: 2..=5,
                heads: 1..=1,
            },
            (Algorithm::HeadTail3, true) => EdgeShape {
                tails: 1..=3,
                heads: 1..=3,
            },
            _ => EdgeShape::two_to_one(),
        }
    }

    /// The instance used by trial seed `seed`.
    pub fn instance(&self, seed: u64) -> crate::Result<DirectedHypergraph> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.random_range(self.n_min..=self.n_max.max(self.n_min));
        let m = rng.random_range(0..=3 * n);
        gen_random_shaped(n, m, &self.shape(), Some(self.algorithm.condition()), rng.random())
    }

    fn options(&self, seed: u64) -> RunOptions {
        RunOptions {
            checked: true,
            ties: if self.random_ties {
                TieBreak::Seeded(seed)
            } else {
                TieBreak::Smallest
            },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FailureKind {
    /// The generator failed or produced an instance the algorithm rejected.
    Instance,
    Improper,
    Invariant,
    /// The exact solver found no coloring with the algorithm's palette.
    Solver,
    /// An R3/E-free instance exceeded the edge bound or had no good coloring.
    Bound,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FuzzFailure {
    pub seed: u64,
    pub kind: FailureKind,
    pub detail: String,
    /// The offending instance in `.dhg` form.
    pub instance: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FuzzReport {
    pub algorithm: Algorithm,
    pub trials: u64,
    /// Sorted by seed.
    pub failures: Vec<FuzzFailure>,
    pub edges_total: u64,
    /// Instances that avoided R3 and E and were checked against the bound.
    pub bound_checked: u64,
}

impl FuzzReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

struct TrialOutcome {
    edges: u64,
    bound_checked: bool,
    failure: Option<FuzzFailure>,
}

fn run_trial(cfg: &FuzzConfig, seed: u64) -> TrialOutcome {
    let mut out = TrialOutcome {
        edges: 0,
        bound_checked: false,
        failure: None,
    };
    let fail = |kind, detail: String, h: Option<&DirectedHypergraph>| {
        Some(FuzzFailure {
            seed,
            kind,
            detail,
            instance: h.map(serialize).unwrap_or_default(),
        })
    };
    let h = match cfg.instance(seed) {
        Ok(h) => h,
        Err(e) => {
            out.failure = fail(FailureKind::Instance, e.to_string(), None);
            return out;
        }
    };
    out.edges = h.edge_count() as u64;

    if h.is_two_to_one()
        && contains_pattern(&h, Pattern::R3).is_ok_and(|r| r.avoided)
        && contains_pattern(&h, Pattern::E).is_ok_and(|r| r.avoided)
    {
        out.bound_checked = true;
        let limit = f_bound(h.vertex_count());
        let good = induce_good_coloring(&h).and_then(|gc| verify_good_coloring(&gc));
        if h.edge_count() as u64 > limit {
            out.failure = fail(FailureKind::Bound, format!("{} edges > f(n) = {limit}", h.edge_count()), Some(&h));
            return out;
        }
        if good != Ok(true) {
            out.failure = fail(FailureKind::Bound, format!("induced good coloring: {good:?}"), Some(&h));
            return out;
        }
    }

    let run = match cfg.algorithm.run(&h, &cfg.options(seed)) {
        Ok(run) => run,
        Err(e) => {
            out.failure = fail(FailureKind::Instance, e.to_string(), Some(&h));
            return out;
        }
    };
    match is_proper(&h, &run.coloring) {
        Ok(true) => {}
        other => {
            let mono = run.coloring.monochromatic_edges(&h).unwrap_or_default();
            out.failure = fail(
                FailureKind::Improper,
                format!("{other:?}, monochromatic edges {mono:?}"),
                Some(&h),
            );
            return out;
        }
    }
    if run.coloring.k() != cfg.algorithm.colors() {
        out.failure = fail(
            FailureKind::Improper,
            format!("palette {} instead of {}", run.coloring.k(), cfg.algorithm.colors()),
            Some(&h),
        );
        return out;
    }
    if let Err(v) = audit(&run) {
        out.failure = fail(FailureKind::Invariant, v.to_string(), Some(&h));
        return out;
    }
    if h.vertex_count() <= cfg.solver_max_n {
        match find_proper_coloring(&h, cfg.algorithm.colors()) {
            Ok(Some(_)) => {}
            other => out.failure = fail(FailureKind::Solver, format!("{other:?}"), Some(&h)),
        }
    }
    out
}

pub fn fuzz(cfg: &FuzzConfig) -> FuzzReport {
    let outcomes: Vec<TrialOutcome> = (0..cfg.trials)
        .into_par_iter()
        .map(|t| run_trial(cfg, cfg.seed.wrapping_add(t)))
        .collect();
    let mut failures: Vec<FuzzFailure> = Vec::new();
    let mut edges_total = 0;
    let mut bound_checked = 0;
    for o in outcomes {
        edges_total += o.edges;
        bound_checked += u64::from(o.bound_checked);
        failures.extend(o.failure);
    }
    failures.sort_by_key(|f| f.seed);
    FuzzReport {
        algorithm: cfg.algorithm,
        trials: cfg.trials,
        failures,
        edges_total,
        bound_checked,
    }
}
