//! The independent oracles: Schubert polynomials with their products, and
//! Schur `Q`/`P`-function structure constants.

use qschubert::oracle::{QFunctionOracle, QpFamily, SchubertCalculus};
use qschubert::{Partition, Permutation};

fn main() -> qschubert::Result<()> {
    let calc = SchubertCalculus::new(4);
    for w in ["1,3,2,4", "2,3,1,4", "1,4,3,2"] {
        let w: Permutation = w.parse()?;
        println!("S_{w} = {}", calc.polynomial(&w));
    }
    let (u, v): (Permutation, Permutation) = ("1,3,2,4".parse()?, "2,3,1,4".parse()?);
    println!("\nS_{u} · S_{v}:");
    for (w, c) in calc.product(&u, &v)?.iter() {
        println!("  {c} S_{w}");
    }

    let oracle = QFunctionOracle::new();
    let (lam, mu): (Partition, Partition) = ("2,1".parse()?, "2".parse()?);
    for family in [QpFamily::Q, QpFamily::P] {
        println!("\n{family}{lam} · {family}{mu}:");
        for (nu, c) in oracle.product(family, &lam, &mu)?.iter() {
            println!("  {c} {family}{nu}");
        }
    }
    Ok(())
}
