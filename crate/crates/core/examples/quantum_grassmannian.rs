//! Quantum multiplication in `QH*(G(k,n))`, with every coefficient
//! computed by both the puzzle rule and the Schubert polynomial oracle.
//!
//! `cargo run --example quantum_grassmannian -- 3 6`

use qschubert::qh_typea::{Engine, TypeARing};
use qschubert::{Family, Partition, QHExpansion};

fn main() -> qschubert::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (k, n) = match args[..] {
        [k, n] => (k, n),
        _ => (2, 5),
    };
    let ring = TypeARing::new(k, n, Engine::Both)?;
    let class = |lam: &Partition| QHExpansion::basis(Family::A, Some(k), n, lam.clone(), 0);
    let shapes = Partition::all_in_box(k, n - k);
    println!("QH*(G({k},{n})): products of the divisor class σ(1)");
    let divisor: Partition = "1".parse()?;
    for lam in &shapes {
        println!("  σ(1) * {} = {}", class(lam), ring.qproduct(&divisor, lam)?);
    }

    let top = Partition::new(vec![n - k; k])?;
    println!("\nthe point class squared: {}", ring.qproduct(&top, &top)?);

    let (lam, mu, nu) = ("2,2".parse()?, "2,1".parse()?, "3,1".parse()?);
    if (k, n) == (2, 5) {
        let d = ring.degree_for(&lam, &mu, &nu)?;
        println!(
            "lines meeting three Schubert varieties: ⟨{}, {}, {}⟩_{d} = {}",
            class(&lam),
            class(&mu),
            class(&nu),
            ring.gw(d, &lam, &mu, &nu)?
        );
    }
    Ok(())
}
