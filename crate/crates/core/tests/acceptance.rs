//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line
//! with its measured runtime; the test fails if any criterion does.

mod common;

use std::io::Write;
use std::time::{Duration, Instant};

use dhcolor::generators::{gen_h2_tower, gen_perm_tower, paper_i, paper_r};
use dhcolor::pattern::Condition;
use dhcolor::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn chi(h: &DirectedHypergraph) -> Result<usize, String> {
    chromatic_number(h, 8)
        .map_err(|e| e.to_string())?
        .chi()
        .ok_or_else(|| "chromatic number above 8".to_string())
}

fn c1() -> Outcome {
    let i = paper_i();
    let x = chi(&i)?;
    ensure(x == 3, format!("chi(I) = {x}"))?;
    ensure(check_condition(&i, Condition::I0Free).avoided, "I violates i0-free")?;
    Ok("chi(I) = 3, i0-free".into())
}

fn c2() -> Outcome {
    let r = paper_r();
    let x = chi(&r)?;
    ensure(x == 3, format!("chi(R) = {x}"))?;
    ensure(contains_pattern(&r, Pattern::R4).map_err(|e| e.to_string())?.avoided, "R contains R4")?;
    Ok("chi(R) = 3, R4 avoided".into())
}

fn c3() -> Outcome {
    let (i, r) = (paper_i(), paper_r());
    let ht = Algorithm::HeadTail3.run(&r, &RunOptions::default()).map_err(|e| e.to_string())?;
    ensure(is_proper(&r, &ht.coloring).unwrap(), "ht3 coloring of R is not proper")?;
    ensure(ht.coloring.colors_used() <= 3, "ht3 used more than 3 colors")?;
    let four = Algorithm::I0Four.run(&i, &RunOptions::default()).map_err(|e| e.to_string())?;
    ensure(is_proper(&i, &four.coloring).unwrap(), "i0-4 coloring of I is not proper")?;
    ensure(four.coloring.colors_used() <= 4, "i0-4 used more than 4 colors")?;
    Ok(format!(
        "ht3(R) uses {} colors, i0-4(I) uses {}",
        ht.coloring.colors_used(),
        four.coloring.colors_used()
    ))
}

fn c4() -> Outcome {
    let mut parts = Vec::new();
    for (k, n, m) in [(3, 7, 11), (4, 15, 71)] {
        let h = gen_h2_tower(k).map_err(|e| e.to_string())?;
        ensure(
            (h.vertex_count(), h.edge_count()) == (n, m),
            format!("tower {k}: {} vertices, {} edges", h.vertex_count(), h.edge_count()),
        )?;
        let below = find_proper_coloring(&h, k - 1).map_err(|e| e.to_string())?;
        ensure(below.is_none(), format!("tower {k} has a proper {}-coloring", k - 1))?;
        ensure(contains_pattern(&h, Pattern::H2).unwrap().avoided, format!("tower {k} contains H2"))?;
        parts.push(format!("k={k}: {n}/{m}, chi >= {k}"));
    }
    Ok(parts.join("; "))
}

fn c5() -> Outcome {
    let h = gen_perm_tower(3).map_err(|e| e.to_string())?;
    ensure((h.vertex_count(), h.edge_count()) == (12, 20), "perm tower size")?;
    ensure(find_proper_coloring(&h, 2).unwrap().is_none(), "perm tower is 2-colorable")?;
    ensure(
        check_condition(&h, Condition::TailsOnly2Intersect).avoided,
        "perm tower violates tails-only-2-intersect",
    )?;
    Ok("12/20, chi >= 3, tails-only-2-intersect".into())
}

fn fuzz_summary(reports: &[FuzzReport]) -> Outcome {
    let mut parts = Vec::new();
    let mut bad = Vec::new();
    for r in reports {
        parts.push(format!("{} {} trials {} failures", r.algorithm, r.trials, r.failures.len()));
        if let Some(f) = r.failures.first() {
            bad.push(format!("{} seed {}: {:?} {}", r.algorithm, f.seed, f.kind, f.detail));
        }
    }
    ensure(bad.is_empty(), bad.join("; "))?;
    Ok(parts.join(", "))
}

fn c6(reports: &mut Vec<FuzzReport>) -> Outcome {
    for algo in Algorithm::ALL {
        let cfg = FuzzConfig::new(algo, 10_000);
        ensure(cfg.n_max <= 9, "n above 9")?;
        reports.push(fuzz(&cfg));
    }
    fuzz_summary(reports)
}

fn c7() -> Outcome {
    let mut cfg = FuzzConfig::new(Algorithm::OneHead, 10_000);
    cfg.mixed = true;
    let mixed = fuzz(&cfg);
    cfg.random_ties = true;
    cfg.seed = 1_000_000;
    let ties = fuzz(&cfg);
    fuzz_summary(&[mixed, ties]).map(|s| format!("tails 2-5: {s}"))
}

fn c8() -> Outcome {
    let count = common::check_exhaustively(4, 3);
    Ok(format!("{count} hypergraphs on 4 vertices, 7 patterns each"))
}

fn f_memo_free(n: usize) -> u64 {
    if n <= 1 {
        return 1;
    }
    (1..n)
        .map(|k| (k * (k - 1) / 2 * (n - k)) as u64 + f_memo_free(n - k))
        .max()
        .unwrap()
}

fn c9(reports: &[FuzzReport]) -> Outcome {
    ensure(f_bound(0) == 1, "f(0) != 1")?;
    for n in 0..=30 {
        let (a, b) = (f_bound(n), f_memo_free(n));
        ensure(a == b, format!("f({n}): table {a}, recursion {b}"))?;
    }
    let p = gen_perm_tower(3).unwrap();
    ensure(
        contains_pattern(&p, Pattern::R3).unwrap().avoided && contains_pattern(&p, Pattern::E).unwrap().avoided,
        "perm tower contains R3 or E",
    )?;
    ensure(p.edge_count() as u64 <= f_bound(12), "perm tower exceeds f(12)")?;
    // The fuzz harness checks |E| <= f(n) on every R3/E-free instance.
    ensure(reports.iter().all(|r| r.passed()), "fuzz reported failures")?;
    let checked: u64 = reports.iter().map(|r| r.bound_checked).sum();
    ensure(checked > 0, "no R3/E-free fuzz instances")?;
    Ok(format!("f(30) = {}, perm tower 20 <= {}, {checked} fuzz instances within bound", f_bound(30), f_bound(12)))
}

fn c10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut runs = 0;
    for (name, h) in [("I", paper_i()), ("R", paper_r())] {
        let applicable: Vec<Algorithm> = Algorithm::ALL
            .into_iter()
            .filter(|a| check_condition(&h, a.condition()).avoided)
            .collect();
        ensure(!applicable.is_empty(), format!("no algorithm applies to {name}"))?;
        for _ in 0..50 {
            let mut order: Vec<usize> = (0..h.vertex_count()).collect();
            order.shuffle(&mut rng);
            let g = h.reordered(&order).map_err(|e| e.to_string())?;
            for &a in &applicable {
                let run = a.run(&g, &RunOptions::default()).map_err(|e| format!("{a} on {name}: {e}"))?;
                ensure(is_proper(&g, &run.coloring).unwrap(), format!("{a} on {name} order {order:?}"))?;
                audit(&run).map_err(|e| format!("{a} on {name} order {order:?}: {e}"))?;
                runs += 1;
            }
        }
    }
    Ok(format!("{runs} runs over 50 orderings each"))
}

fn report(out: &mut impl Write, id: usize, limit: Duration, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let result = f();
    let took = start.elapsed();
    let (ok, detail) = match result {
        Ok(d) if took <= limit => (true, d),
        Ok(d) => (false, format!("{d}; took longer than {limit:?}")),
        Err(e) => (false, e),
    };
    let verdict = if ok { "PASS" } else { "FAIL" };
    writeln!(out, "criterion {id:>2}: {verdict} ({took:.2?}) {detail}").unwrap();
    ok
}

#[test]
fn acceptance() {
    // Written to the process stdout so the lines show up under capture too.
    let mut out = std::io::stdout().lock();
    let secs = Duration::from_secs;
    let mut fuzz_reports = Vec::new();
    let results = [
        report(&mut out, 1, secs(1), c1),
        report(&mut out, 2, secs(1), c2),
        report(&mut out, 3, secs(1), c3),
        report(&mut out, 4, secs(120), c4),
        report(&mut out, 5, secs(5), c5),
        report(&mut out, 6, secs(300), || c6(&mut fuzz_reports)),
        report(&mut out, 7, secs(300), c7),
        report(&mut out, 8, secs(60), c8),
        report(&mut out, 9, secs(60), || c9(&fuzz_reports)),
        report(&mut out, 10, secs(10), c10),
    ];
    let failed: Vec<usize> = (1..=10).filter(|&i| !results[i - 1]).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
