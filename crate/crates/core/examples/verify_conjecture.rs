//! Exhaustive comparison of puzzle counts with Schubert polynomial triple
//! integrals on every `F(a,b;n)` up to a chosen `n` (default 6).
//!
//! `cargo run --release --example verify_conjecture -- 7`

use std::time::Instant;

use qschubert::verify::conjecture_sweep;

fn main() -> qschubert::Result<()> {
    let max_n = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(6);
    for n in 1..=max_n {
        let start = Instant::now();
        let report = conjecture_sweep(n, n)?;
        println!("n = {n}: {report} in {:.2?}", start.elapsed());
        for s in &report.samples {
            println!("  {s}");
        }
        if !report.passed() {
            std::process::exit(3);
        }
    }
    Ok(())
}
