use std::collections::BTreeMap;

use qschubert::combinatorics::{horizontal_strips_over, lr_coefficient, strip_components};
use qschubert::oracle::{QFunctionOracle, QpFamily, SchubertCalculus};
use qschubert::{Partition, Permutation, StrictPartition};

fn strict_up_to(weight: usize) -> Vec<Partition> {
    (0..=weight)
        .flat_map(StrictPartition::all_in_dn)
        .map(StrictPartition::into_partition)
        .filter(|p| p.weight() <= weight)
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// Products with a one-row class follow the strip rule: `2^N` for `Q`,
/// `2^{N′}` for `P`.
#[test]
fn q_and_p_pieri_from_strips() {
    let oracle = QFunctionOracle::new();
    for lam in strict_up_to(8) {
        for k in 1..=(10 - lam.weight()).min(6) {
            let row = Partition::new(vec![k]).unwrap();
            for family in [QpFamily::Q, QpFamily::P] {
                let mut expected = BTreeMap::new();
                for mu in horizontal_strips_over(&lam, k, usize::MAX) {
                    if !mu.is_strict() {
                        continue;
                    }
                    let comps = strip_components(&lam, &mu).unwrap();
                    let e = match family {
                        QpFamily::Q => comps.n(),
                        QpFamily::P => comps.n_prime().unwrap(),
                    };
                    expected.insert(mu, 1u64 << e);
                }
                let got = oracle.product(family, &lam, &row).unwrap();
                assert_eq!(*got, expected, "{family} {lam} · ({k})");
            }
        }
    }
}

#[test]
fn q_products_are_powers_of_two_times_p_products() {
    let oracle = QFunctionOracle::new();
    let shapes = strict_up_to(6);
    for lam in &shapes {
        for mu in &shapes {
            let q = oracle.product(QpFamily::Q, lam, mu).unwrap();
            let p = oracle.product(QpFamily::P, lam, mu).unwrap();
            assert_eq!(q.keys().collect::<Vec<_>>(), p.keys().collect::<Vec<_>>());
            for (nu, c) in q.iter() {
                let shift = lam.len() + mu.len() - nu.len();
                assert_eq!(*c, p[nu] << shift, "{lam} {mu} {nu}");
            }
        }
    }
}

/// `S_{s_r} · S_w = Σ S_{w t_{ij}}` over `i ≤ r < j` with a length gain of one.
#[test]
fn schubert_products_follow_monk() {
    let n = 5;
    let calc = SchubertCalculus::new(n + 1);
    for w in Permutation::all(n) {
        let w = w.embed(n + 1);
        for r in 1..n {
            let s = Permutation::identity(n + 1).swap_positions(r);
            let got = calc.product(&s, &w).unwrap();
            let mut expected = Vec::new();
            for i in 1..=r {
                for j in r + 1..=n + 1 {
                    let mut win = w.window().to_vec();
                    win.swap(i - 1, j - 1);
                    let v = Permutation::new(win).unwrap();
                    if v.length() == w.length() + 1 {
                        expected.push(v);
                    }
                }
            }
            expected.sort();
            let keys: Vec<Permutation> = got.keys().cloned().collect();
            assert_eq!(keys, expected, "s_{r} · {w}");
            assert!(got.values().all(|c| *c == 1.into()));
        }
    }
}

#[test]
fn grassmannian_constants_are_lr_coefficients() {
    let (k, n) = (3, 6);
    let calc = SchubertCalculus::new(n);
    let shapes = Partition::all_in_box(k, n - k);
    let perm = |lam: &Partition| qschubert::combinatorics::grassmannian_permutation(lam, k, n, 0).unwrap();
    for lam in &shapes {
        for mu in &shapes {
            for nu in &shapes {
                if lam.weight() + mu.weight() != nu.weight() {
                    continue;
                }
                let c = calc.structure_constant(&perm(lam), &perm(mu), &perm(nu)).unwrap();
                assert_eq!(c, lr_coefficient(lam, mu, nu), "{lam} {mu} {nu}");
            }
        }
    }
}
