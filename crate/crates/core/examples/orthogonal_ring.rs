//! Multiplication table of `QH*(OG(n+1,2n+2))` and a few identities that
//! hold in it.

use qschubert::qh_isotropic::IsotropicRing;
use qschubert::{Family, Partition};

fn main() -> qschubert::Result<()> {
    let n = 3;
    let ring = IsotropicRing::new(Family::D, n)?;
    let basis = ring.basis();
    println!("QH*(OG({},{})), q of degree {}", n + 1, 2 * n + 2, ring.rules().q_degree());
    for (i, lam) in basis.iter().enumerate() {
        for mu in &basis[i..] {
            if lam.is_empty() || mu.is_empty() {
                continue;
            }
            println!("  {} * {} = {}", ring.class(lam), ring.class(mu), ring.qproduct(lam, mu)?);
        }
    }

    let top = Partition::new(vec![n])?;
    println!("\nτ_{n}² = {}", ring.qproduct(&top, &top)?);
    for i in 1..=n {
        println!("relation {i}: {}", if ring.relation_defect(i)?.is_zero() { "holds" } else { "FAILS" });
    }
    Ok(())
}
