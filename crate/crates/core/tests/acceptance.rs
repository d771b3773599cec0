//! Acceptance suite. Runs without the libtest harness so that the one
//! pass/fail line per criterion is always printed.

use std::time::{Duration, Instant};

use qschubert::combinatorics::{grassmannian_permutation, jd_string, label_string};
use qschubert::oracle::triple_integral_twostep;
use qschubert::puzzle::count_puzzles_str;
use qschubert::qh_typea::{gw_a, Engine};
use qschubert::verify::{self, SweepReport};
use qschubert::{Family, Partition, Result};

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

struct Outcome {
    id: usize,
    title: &'static str,
    passed: bool,
    detail: String,
    elapsed: Duration,
    limit: Option<Duration>,
}

fn run(id: usize, title: &'static str, limit: Option<Duration>, f: impl FnOnce() -> Result<(bool, String)>) -> Outcome {
    let start = Instant::now();
    let (mut passed, detail) = match f() {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    let elapsed = start.elapsed();
    if let Some(l) = limit {
        passed &= elapsed <= l;
    }
    Outcome { id, title, passed, detail, elapsed, limit }
}

fn sweeps(reports: Vec<Result<SweepReport>>) -> Result<(bool, String)> {
    let reports = reports.into_iter().collect::<Result<Vec<_>>>()?;
    let passed = reports.iter().all(SweepReport::passed);
    let mut lines: Vec<String> = reports.iter().map(|r| r.to_string()).collect();
    for r in &reports {
        lines.extend(r.samples.iter().take(3).map(|s| format!("    {s}")));
    }
    Ok((passed, lines.join("; ")))
}

fn line_on_g25() -> Result<(bool, String)> {
    let (lam, mu, nu) = (p("2,2"), p("2,1"), p("3,1"));
    let puzzles = count_puzzles_str("12012", "10212", "10221")?;
    let u = grassmannian_permutation(&lam, 2, 5, 1)?;
    let v = grassmannian_permutation(&mu, 2, 5, 1)?;
    let w = grassmannian_permutation(&nu, 2, 5, 1)?;
    let oracle = triple_integral_twostep(1, 3, 5, &u, &v, &w)?;
    let both = gw_a(2, 5, 1, &lam, &mu, &nu, Engine::Both)?;
    Ok((
        puzzles == 1 && oracle == 1 && both == 1,
        format!("puzzles {puzzles}, F(1,3;5) integral {oracle}, gw_a {both}"),
    ))
}

fn worked_strings() -> Result<(bool, String)> {
    let long = jd_string(&p("4,4,3,1"), 4, 9, 2)?.to_string();
    let short: Vec<String> = ["2,2", "2,1", "3,1"]
        .iter()
        .map(|s| jd_string(&p(s), 2, 5, 1).map(|j| j.to_string()))
        .collect::<Result<_>>()?;
    let w = grassmannian_permutation(&p("4,4,3,1"), 4, 9, 2)?;
    let via_perm = label_string(&w, 2, 6)?.to_string();
    Ok((
        long == "101202112" && via_perm == long && short == ["12012", "10212", "10221"],
        format!("J²(4,4,3,1) = {long}; G(2,5) strings {}", short.join("/")),
    ))
}

fn main() {
    let minute = Duration::from_secs(60);
    let outcomes = vec![
        run(1, "line count on G(2,5), both engines", Some(Duration::from_secs(1)), line_on_g25),
        run(2, "J-string examples", None, worked_strings),
        run(3, "puzzles vs Schubert polynomials, n ≤ 6", Some(10 * minute), || {
            sweeps(vec![verify::conjecture_sweep(1, 6)])
        }),
        run(4, "J-string / permutation coherence, n ≤ 8", None, || {
            sweeps(vec![verify::jstring_coherence(8)])
        }),
        run(5, "Yong vanishing, n ≤ 6", None, || sweeps(vec![verify::yong_sweep(6)])),
        run(6, "τ_n² = q, 2 ≤ n ≤ 6", None, || sweeps(vec![verify::tau_squared(2, 6)])),
        run(7, "commutativity and associativity", Some(10 * minute), || {
            sweeps(vec![
                verify::ring_axioms_a(5),
                verify::ring_axioms_iso(Family::C, 4),
                verify::ring_axioms_iso(Family::D, 4),
            ])
        }),
        run(8, "presentation relations, n ≤ 5", None, || {
            sweeps(vec![verify::relations_sweep(Family::C, 5), verify::relations_sweep(Family::D, 5)])
        }),
        run(9, "Pfaffian Giambelli in the quantum ring, n ≤ 5", None, || {
            sweeps(vec![verify::pfaffian_sweep(Family::C, 5), verify::pfaffian_sweep(Family::D, 5)])
        }),
        run(10, "degree-1 lift to LG(n+1,2n+2), n ≤ 4", None, || sweeps(vec![verify::lift_sweep(4)])),
        run(11, "classical reduction", None, || {
            sweeps(vec![
                verify::classical_iso(Family::C, 5, 12),
                verify::classical_iso(Family::D, 5, 12),
                verify::classical_a(6),
            ])
        }),
        run(12, "length vanishing, n ≤ 4", None, || {
            sweeps(vec![verify::length_vanishing(Family::C, 4), verify::length_vanishing(Family::D, 4)])
        }),
    ];

    let mut failed = Vec::new();
    for o in &outcomes {
        let status = if o.passed { "PASS" } else { "FAIL" };
        let limit = o.limit.map(|l| format!(", limit {:.0?}", l)).unwrap_or_default();
        println!("[{status}] criterion {:>2}: {} ({:.2?}{limit}): {}", o.id, o.title, o.elapsed, o.detail);
        if !o.passed {
            failed.push(o.id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all {} criteria passed", outcomes.len());
    } else {
        println!("acceptance: failed criteria {failed:?}");
        std::process::exit(1);
    }
}
