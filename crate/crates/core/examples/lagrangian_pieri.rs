//! Quantum Pieri products in `QH*(LG(n,2n))`.

use qschubert::qh_isotropic::quantum_pieri;
use qschubert::{Family, QHExpansion, StrictPartition};

fn main() -> qschubert::Result<()> {
    let n = 3;
    println!("σ_λ * σ_k in QH*(LG({n},{}))", 2 * n);
    for lam in StrictPartition::all_in_dn(n) {
        for k in 1..=n {
            let prod = quantum_pieri(Family::C, n, &lam, k)?;
            let class = QHExpansion::basis(Family::C, None, n, lam.as_partition().clone(), 0);
            println!("  {class} * σ({k}) = {prod}");
        }
    }
    Ok(())
}
