//! Quantum Giambelli: Schubert classes of `LG(n,2n)` and `OG(n+1,2n+2)` as
//! polynomials in the special classes, with the Pfaffian identity checked
//! in the quantum ring.

use qschubert::qh_isotropic::{expand_to_specials, two_row_specials, IsotropicRing};
use qschubert::{Family, StrictPartition};

fn main() -> qschubert::Result<()> {
    let n = 4;
    for family in [Family::C, Family::D] {
        let ring = IsotropicRing::new(family, n)?;
        println!("family {family}, n = {n}");
        println!("  two-row class (3,1): {}", two_row_specials(family, n, 3, 1));
        for lam in StrictPartition::all_in_dn(n) {
            let p = lam.as_partition();
            if p.len() < 3 {
                continue;
            }
            let defect = ring.pfaffian_defect(p)?;
            println!(
                "  {} = {}  [Pfaffian identity {}]",
                ring.class(p),
                expand_to_specials(family, n, &lam)?,
                if defect.is_zero() { "holds" } else { "FAILS" }
            );
        }
    }
    Ok(())
}
