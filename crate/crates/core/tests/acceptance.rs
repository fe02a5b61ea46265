//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails.

mod common;

use std::io::Write;
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use loose_ramsey::coloring::{random_coloring, Color, Coloring};
use loose_ramsey::hypergraph::{attachment_set, Vertex};
use loose_ramsey::oracle::{find_monochromatic_loose_cycle, is_monochromatic_cycle};
use loose_ramsey::proof::{
    build_blue_paths, extract, find_good_configuration, ramsey_bound, step_lemma,
    validate_blue_paths, validate_configuration, BoundKind, BoundValue,
};
use loose_ramsey::witness::{extremal_coloring, verify_witness};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        pass,
        detail: detail.into(),
    }
}

/// Expected table entries, written from the closed forms.
fn expected_bounds() -> Vec<(BoundKind, usize, usize, BoundValue)> {
    use BoundKind::*;
    let exact = BoundValue::Exact;
    let mut rows = vec![(CycleCycle, 3, 3, exact(10)), (CycleCycle, 4, 4, exact(13))];
    for n in 3..=10 {
        rows.push((CycleCycle, n, 3, exact(3 * n + 1)));
    }
    for n in 5..=8 {
        for m in 4..n {
            rows.push((CycleCycle, n, m, exact(3 * n + (m - 1) / 2)));
        }
    }
    for n in [5, 7] {
        rows.push((CycleCycle, n, n, exact(3 * n + (n - 1) / 2)));
    }
    for n in [6, 8] {
        let lo = 3 * n + (n - 1) / 2;
        rows.push((CycleCycle, n, n, BoundValue::Interval { lo, hi: lo + 1 }));
    }
    for n in 4..=8 {
        for m in 3..=n {
            if n > m || n % 2 == 1 {
                rows.push((PathCycle, n, m, exact(3 * n + m.div_ceil(2))));
            }
            if n >= m + 2 || n % 2 == 1 {
                rows.push((PathPath, n, m, exact(3 * n + m.div_ceil(2))));
            }
        }
    }
    rows.push((PathCycle, 3, 3, exact(11)));
    rows.push((PathPath, 3, 3, exact(11)));
    rows
}

fn bound_table() -> Verdict {
    let t = Instant::now();
    let rows = expected_bounds();
    let wrong: Vec<String> = rows
        .iter()
        .filter_map(|&(kind, n, m, want)| match ramsey_bound(kind, n, m) {
            Ok(b) if b.value == want => None,
            Ok(b) => Some(format!("{}({n},{m})={} want {want}", kind.code(), b.value)),
            Err(e) => Some(format!("{}({n},{m}): {e}", kind.code())),
        })
        .collect();
    let elapsed = t.elapsed();
    let pass = wrong.is_empty() && elapsed < Duration::from_secs(1);
    verdict(
        pass,
        format!(
            "{} entries, {} wrong {:?}, {:.1?}",
            rows.len(),
            wrong.len(),
            wrong,
            elapsed
        ),
    )
}

fn witness_grid() -> Vec<(usize, usize)> {
    (3..=6).flat_map(|n| (3..=n).map(move |m| (n, m))).collect()
}

fn witness_suite() -> Verdict {
    let mut failures = Vec::new();
    let mut slowest = Duration::ZERO;
    for (n, m) in witness_grid() {
        let c = match extremal_coloring(4, n, m) {
            Ok(c) => c,
            Err(e) => {
                failures.push(format!("({n},{m}) {e}"));
                continue;
            }
        };
        let lower = ramsey_bound(BoundKind::CycleCycle, n, m).map(|b| b.value.lower());
        if lower != Ok(c.n_vertices() + 1) {
            failures.push(format!("({n},{m}) N={} bound {lower:?}", c.n_vertices()));
        }
        let t = Instant::now();
        let ok = verify_witness(&c, n, m);
        let dt = t.elapsed();
        slowest = slowest.max(dt);
        if !ok || dt > Duration::from_secs(60) {
            failures.push(format!("({n},{m}) verified={ok} in {dt:.1?}"));
        }
    }
    verdict(
        failures.is_empty(),
        format!(
            "{} pairs, slowest check {slowest:.1?}, failures {failures:?}",
            witness_grid().len()
        ),
    )
}

fn oracle_equivalence() -> Verdict {
    let mut disagreements = 0;
    let mut found = [0usize; 2];
    for seed in 0..200u64 {
        let p = [0.2, 0.5, 0.8][seed as usize % 3];
        let c = random_coloring(4, 9, p, seed).expect("valid parameters");
        for (slot, color) in [Color::Red, Color::Blue].into_iter().enumerate() {
            let fast = find_monochromatic_loose_cycle(&c, color, 3);
            let valid = fast
                .as_ref()
                .is_none_or(|cy| cy.len() == 3 && is_monochromatic_cycle(&c, color, cy));
            let naive = common::naive_has_cycle(&c, color, 3);
            if !valid || fast.is_some() != naive {
                disagreements += 1;
            }
            found[slot] += naive as usize;
        }
    }
    verdict(
        disagreements == 0,
        format!(
            "400 queries, {disagreements} disagreements (red found {}, blue found {})",
            found[0], found[1]
        ),
    )
}

/// The extremal coloring plus one vertex: all red, all blue, and seeded
/// random choices for the new edges.
fn adversarial(n: usize, m: usize) -> Vec<(String, Coloring)> {
    let base = extremal_coloring(4, n, m).expect("valid parameters");
    let mut out = vec![
        (
            "all-red".to_string(),
            base.with_added_vertex(|_| Color::Red).expect("fits"),
        ),
        (
            "all-blue".to_string(),
            base.with_added_vertex(|_| Color::Blue).expect("fits"),
        ),
    ];
    for seed in 0..3u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = base
            .with_added_vertex(|_| {
                if rng.gen_bool(0.5) {
                    Color::Red
                } else {
                    Color::Blue
                }
            })
            .expect("fits");
        out.push((format!("random-{seed}"), c));
    }
    out
}

struct ExtractStats {
    runs: usize,
    failures: Vec<String>,
    slowest: Duration,
    adversarial_runs: usize,
    adversarial_constructive: usize,
}

fn run_extract(
    c: &Coloring,
    n: usize,
    m: usize,
    label: &str,
    stats: &mut ExtractStats,
) -> Option<bool> {
    let t = Instant::now();
    let out = extract(c, n, m);
    let dt = t.elapsed();
    stats.runs += 1;
    stats.slowest = stats.slowest.max(dt);
    match out {
        Ok(out) => {
            let len = if out.color == Color::Red { n } else { m };
            if out.cycle.len() != len
                || !is_monochromatic_cycle(c, out.color, &out.cycle)
                || dt > Duration::from_secs(30)
            {
                stats.failures.push(format!(
                    "({n},{m}) {label}: invalid result or slow ({dt:.1?})"
                ));
            }
            Some(out.constructive)
        }
        Err(e) => {
            stats.failures.push(format!("({n},{m}) {label}: {e}"));
            None
        }
    }
}

fn extraction_totality() -> (Verdict, ExtractStats) {
    let mut stats = ExtractStats {
        runs: 0,
        failures: Vec::new(),
        slowest: Duration::ZERO,
        adversarial_runs: 0,
        adversarial_constructive: 0,
    };
    for (n, m, nv) in [(5, 4, 16), (5, 5, 17)] {
        for seed in 0..100u64 {
            let c = random_coloring(4, nv, 0.5, seed).expect("valid parameters");
            run_extract(&c, n, m, &format!("seed {seed}"), &mut stats);
        }
        for (label, c) in adversarial(n, m) {
            assert_eq!(c.n_vertices(), nv);
            stats.adversarial_runs += 1;
            if run_extract(&c, n, m, &label, &mut stats) == Some(true) {
                stats.adversarial_constructive += 1;
            }
        }
    }
    let v = verdict(
        stats.failures.is_empty(),
        format!(
            "{} runs, slowest {:.1?}, failures {:?}",
            stats.runs, stats.slowest, stats.failures
        ),
    );
    (v, stats)
}

fn construction_contracts() -> Verdict {
    let (mut instances, mut configs, mut bundles) = (0, 0, 0);
    let mut violations = Vec::new();
    for seed in 0..400u64 {
        if instances >= 60 {
            break;
        }
        let Some(inst) = common::block_instance(seed) else {
            continue;
        };
        instances += 1;
        let (c, p, w) = (&inst.coloring, &inst.path, &inst.reservoir);
        for i in 1..p.len() {
            let us: Vec<Option<Vertex>> = if i == 1 {
                vec![None]
            } else {
                attachment_set(p, i)
                    .expect("index in range")
                    .into_iter()
                    .map(Some)
                    .collect()
            };
            for u in us {
                configs += 1;
                match find_good_configuration(c, p, w, i, u) {
                    Ok(r) => {
                        if let Err(e) = validate_configuration(c, p, w, &r) {
                            violations.push(format!("seed {seed} i={i}: {e}"));
                        }
                    }
                    Err(e) => violations.push(format!("seed {seed} i={i} u={u:?}: {e}")),
                }
            }
        }
        if p.len() >= 2 {
            bundles += 1;
            match build_blue_paths(c, p, w) {
                Ok(r) => {
                    if let Err(e) = validate_blue_paths(c, p, w, &r) {
                        violations.push(format!("seed {seed} blue paths: {e}"));
                    }
                }
                Err(e) => violations.push(format!("seed {seed} blue paths: {e}")),
            }
        }
    }
    let pass = violations.is_empty() && instances >= 50 && bundles >= 50;
    verdict(
        pass,
        format!("{instances} instances, {configs} configurations, {bundles} path bundles, violations {violations:?}"),
    )
}

fn step_coverage(stats: &ExtractStats) -> Verdict {
    let mut failures = Vec::new();
    let mut runs = 0;
    for n in 5..=7 {
        for m in 3..=n {
            let (c, cycle, params) = common::planted_instance(n, m);
            runs += 1;
            match step_lemma(&c, &cycle, &params) {
                Ok(out) if out.constructive && !out.trace.used_fallback() => {
                    if out.cycle.len() != m || !is_monochromatic_cycle(&c, Color::Blue, &out.cycle)
                    {
                        failures.push(format!("({n},{m}) invalid cycle"));
                    }
                }
                Ok(_) => failures.push(format!("({n},{m}) fell back")),
                Err(e) => failures.push(format!("({n},{m}) {e}")),
            }
        }
    }
    verdict(
        failures.is_empty(),
        format!(
            "{runs} planted instances, fallbacks/failures {failures:?}; adversarial constructive rate {}/{}",
            stats.adversarial_constructive, stats.adversarial_runs
        ),
    )
}

fn negative_control() -> Verdict {
    let bin = env!("CARGO_BIN_EXE_loose-ramsey");
    let mut failures = Vec::new();
    for (n, m) in witness_grid() {
        let (n_s, m_s) = (n.to_string(), m.to_string());
        let witness = Command::new(bin)
            .args(["witness", "--n", &n_s, "--m", &m_s])
            .output()
            .expect("binary runs");
        let mut child = Command::new(bin)
            .args(["check", "-", "--n", &n_s, "--m", &m_s])
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .spawn()
            .expect("binary runs");
        child
            .stdin
            .take()
            .expect("piped")
            .write_all(&witness.stdout)
            .expect("write witness");
        let out = child.wait_with_output().expect("check finishes");
        let text = String::from_utf8_lossy(&out.stdout);
        if !witness.status.success() || out.status.code() != Some(0) || text.trim() != "witness-ok"
        {
            failures.push(format!("({n},{m}) {}", text.trim()));
        }
    }
    verdict(
        failures.is_empty(),
        format!(
            "{} witnesses checked by the binary, failures {failures:?}",
            witness_grid().len()
        ),
    )
}

fn main() {
    let mut results = vec![
        ("bound table", bound_table()),
        ("witness suite", witness_suite()),
        ("oracle equivalence", oracle_equivalence()),
    ];
    let (extraction, stats) = extraction_totality();
    results.push(("extraction totality", extraction));
    results.push(("configuration and blue-path contracts", construction_contracts()));
    results.push(("step coverage", step_coverage(&stats)));
    results.push(("negative control", negative_control()));
    let mut failed = 0;
    for (i, (name, v)) in results.iter().enumerate() {
        println!(
            "criterion {} {name}: {} ({})",
            i + 1,
            if v.pass { "PASS" } else { "FAIL" },
            v.detail
        );
        failed += usize::from(!v.pass);
    }
    if failed > 0 {
        eprintln!("{failed} criteria failed");
        std::process::exit(1);
    }
}
