//! Counts and draws the two-step puzzles behind a quantum invariant of
//! `G(2,5)`, then tabulates every south boundary for one pair of sides.

use qschubert::combinatorics::jd_string;
use qschubert::puzzle::{PuzzleBoundary, PuzzleSolver};
use qschubert::Partition;

fn main() -> qschubert::Result<()> {
    let (k, n, d) = (2, 5, 1);
    let shapes: Vec<Partition> = ["2,2", "2,1", "3,1"].iter().map(|s| s.parse()).collect::<Result<_, _>>()?;
    let strings: Vec<_> = shapes.iter().map(|lam| jd_string(lam, k, n, d)).collect::<Result<_, _>>()?;
    println!("J-strings on G({k},{n}), d = {d}:");
    for (lam, s) in shapes.iter().zip(&strings) {
        println!("  {lam:<6} -> {s}");
    }

    let solver = PuzzleSolver::default();
    let boundary = PuzzleBoundary::new(strings[0].clone(), strings[1].clone(), strings[2].clone())?;
    let fillings = solver.fillings(&boundary);
    println!("\n{} puzzle(s):", fillings.len());
    for f in &fillings {
        println!("{}", f.render());
    }

    println!("all south sides for nw = {}, ne = {}:", strings[0], strings[1]);
    for (s, c) in solver.count_all_south(&strings[0], &strings[1]) {
        println!("  {s}  {c}");
    }
    Ok(())
}
