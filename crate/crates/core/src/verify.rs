//! Exhaustive cross-check sweeps. Each sweep returns a [`SweepReport`];
//! work is spread over rayon threads and merged in a fixed order, so
//! reports do not depend on the thread count.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{
    grassmannian_permutation, jd_string, label_string, lr_coefficient, poincare_dual, Family, LabelString,
    Partition,
};
use crate::error::{Error, Result};
use crate::expansion::QHExpansion;
use crate::oracle::{QFunctionOracle, QpFamily, SchubertCalculus};
use crate::puzzle::PuzzleSolver;
use crate::qh_isotropic::{degree1_lift_integral, IsotropicRing};
use crate::qh_typea::{Engine, TypeARing};

const MAX_SAMPLES: usize = 10;

/// Outcome of one sweep: how many cases were checked, how many failed,
/// and a few failing cases.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub name: String,
    pub checked: u64,
    pub failed: u64,
    pub samples: Vec<String>,
}

impl SweepReport {
    pub fn new(name: impl Into<String>) -> Self {
        SweepReport { name: name.into(), ..Default::default() }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0 && self.checked > 0
    }

    pub fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.samples.len() < MAX_SAMPLES {
                self.samples.push(detail());
            }
        }
    }

    pub fn merge(&mut self, other: SweepReport) {
        self.checked += other.checked;
        self.failed += other.failed;
        for s in other.samples {
            if self.samples.len() < MAX_SAMPLES {
                self.samples.push(s);
            }
        }
    }

    fn merged(name: &str, parts: Vec<Result<SweepReport>>) -> Result<SweepReport> {
        let mut out = SweepReport::new(name);
        for p in parts {
            out.merge(p?);
        }
        Ok(out)
    }
}

impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "ok" } else { "FAILED" };
        write!(f, "{}: {status} ({} checked, {} failed)", self.name, self.checked, self.failed)?;
        for s in &self.samples {
            write!(f, "\n  {s}")?;
        }
        Ok(())
    }
}

/// Runs `f` on a dedicated pool with `threads` workers, or on the global
/// pool when `threads` is `None`.
pub fn with_threads<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match threads {
        None => Ok(f()),
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t.max(1))
                .build()
                .map_err(|e| Error::Inconsistent(format!("thread pool: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

fn flag_types(n: usize) -> Vec<(usize, usize)> {
    (0..=n).flat_map(|a| (a..=n).map(move |b| (a, b))).collect()
}

/// Puzzle counts against the Schubert polynomial triple integral for every
/// `F(a,b;n)` with `min_n ≤ n ≤ max_n` and every triple of 012-strings.
pub fn conjecture_sweep(min_n: usize, max_n: usize) -> Result<SweepReport> {
    let solver = PuzzleSolver::default();
    let mut parts = Vec::new();
    for n in min_n.max(1)..=max_n {
        let calc = SchubertCalculus::new(n);
        for (a, b) in flag_types(n) {
            let strings = LabelString::all_with_content([a, b - a, n - b]);
            let perms: Vec<_> = strings.iter().map(LabelString::to_permutation).collect();
            let chunk: Vec<Result<SweepReport>> = (0..strings.len())
                .into_par_iter()
                .map(|i| {
                    let mut rep = SweepReport::new("");
                    for j in 0..strings.len() {
                        let counts = solver.count_all_south(&strings[i], &strings[j]);
                        for (l, w) in strings.iter().enumerate() {
                            let puzzle = counts.get(w).copied().unwrap_or(0);
                            let oracle = calc.triple_integral_twostep(a, b, &perms[i], &perms[j], &perms[l])? as u128;
                            rep.record(puzzle == oracle, || {
                                format!("F({a},{b};{n}) {} {} {w}: puzzle {puzzle}, oracle {oracle}", strings[i], strings[j])
                            });
                        }
                    }
                    Ok(rep)
                })
                .collect();
            parts.extend(chunk);
        }
    }
    SweepReport::merged("puzzle rule vs Schubert polynomials", parts)
}

/// `J^d(λ)` equals the 012-string of `w_{λ,d}` on `F(k-d,k+d;n)`.
pub fn jstring_coherence(max_n: usize) -> Result<SweepReport> {
    let mut rep = SweepReport::new("J-string / permutation coherence");
    for n in 1..=max_n {
        for k in 0..=n {
            for lam in Partition::all_in_box(k, n - k) {
                for d in 0..=k.min(n - k) {
                    let j = jd_string(&lam, k, n, d)?;
                    let w = grassmannian_permutation(&lam, k, n, d)?;
                    let l = label_string(&w, k - d, k + d)?;
                    rep.record(j == l, || format!("G({k},{n}) λ={lam} d={d}: J={j}, label={l}"));
                }
            }
        }
    }
    Ok(rep)
}

/// Invariants with some `λ_d < d` vanish (engines run without the
/// shortcut), and `ℓ(w_{λ,d}) > |λ| - d²` exactly when `λ_d < d`.
pub fn yong_sweep(max_n: usize) -> Result<SweepReport> {
    let mut parts = Vec::new();
    for n in 1..=max_n {
        for k in 1..n {
            let ring = TypeARing::new(k, n, Engine::Both)?;
            let shapes = Partition::all_in_box(k, n - k);
            let dim = k * (n - k);
            let chunk: Vec<Result<SweepReport>> = (1..=k.min(n - k))
                .into_par_iter()
                .map(|d| {
                    let mut rep = SweepReport::new("");
                    for lam in &shapes {
                        let w = grassmannian_permutation(lam, k, n, d)?;
                        let long = w.length() as i64 > lam.weight() as i64 - (d * d) as i64;
                        let short = lam.part(d) < d;
                        rep.record(long == short, || {
                            format!("G({k},{n}) λ={lam} d={d}: ℓ(w)={}, λ_d={}", w.length(), lam.part(d))
                        });
                    }
                    for lam in &shapes {
                        for mu in &shapes {
                            for nu in &shapes {
                                if lam.weight() + mu.weight() + nu.weight() != dim + n * d {
                                    continue;
                                }
                                if [lam, mu, nu].iter().all(|x| x.part(d) >= d) {
                                    continue;
                                }
                                let v = ring.engine_value(d, lam, mu, nu)?;
                                rep.record(v == 0, || format!("G({k},{n}) d={d} {lam} {mu} {nu}: {v}"));
                            }
                        }
                    }
                    Ok(rep)
                })
                .collect();
            parts.extend(chunk);
        }
    }
    SweepReport::merged("Yong vanishing", parts)
}

/// `τ_n ∗ τ_n = q` in `QH*(OG(n+1,2n+2))`.
pub fn tau_squared(min_n: usize, max_n: usize) -> Result<SweepReport> {
    let mut rep = SweepReport::new("τ_n² = q");
    for n in min_n.max(1)..=max_n {
        let ring = IsotropicRing::new(Family::D, n)?;
        let top = Partition::new(vec![n])?;
        let prod = ring.qproduct(&top, &top)?;
        let expected = QHExpansion::basis(Family::D, None, n, Partition::empty(), 1);
        rep.record(*prod == expected, || format!("n={n}: τ_n² = {prod}"));
    }
    Ok(rep)
}

fn expansion_product(
    table: &BTreeMap<(Partition, Partition), QHExpansion>,
    x: &QHExpansion,
    y: &Partition,
    zero: QHExpansion,
) -> QHExpansion {
    let mut out = zero;
    for (lam, d, c) in x.iter() {
        out.add_scaled(&table[&(lam.clone(), y.clone())].shifted(d, 1), c);
    }
    out
}

/// Commutativity and associativity of `∗` on `QH*(G(k,n))`, every
/// `1 ≤ k < n ≤ max_n`, with both engines required to agree.
pub fn ring_axioms_a(max_n: usize) -> Result<SweepReport> {
    let mut parts = Vec::new();
    for n in 2..=max_n {
        for k in 1..n {
            let ring = TypeARing::new(k, n, Engine::Both)?;
            let shapes = Partition::all_in_box(k, n - k);
            let pairs: Vec<(Partition, Partition)> =
                shapes.iter().flat_map(|a| shapes.iter().map(move |b| (a.clone(), b.clone()))).collect();
            let products: Vec<Result<QHExpansion>> = pairs.par_iter().map(|(a, b)| ring.qproduct(a, b)).collect();
            let mut table = BTreeMap::new();
            for (key, prod) in pairs.into_iter().zip(products) {
                table.insert(key, prod?);
            }
            let zero = QHExpansion::zero(Family::A, Some(k), n);
            parts.push(Ok(axioms_report(&format!("G({k},{n})"), &shapes, &table, zero)));
        }
    }
    SweepReport::merged("ring axioms, type A", parts)
}

fn axioms_report(
    label: &str,
    shapes: &[Partition],
    table: &BTreeMap<(Partition, Partition), QHExpansion>,
    zero: QHExpansion,
) -> SweepReport {
    let mut rep = SweepReport::new("");
    for a in shapes {
        for b in shapes {
            let ab = &table[&(a.clone(), b.clone())];
            let ba = &table[&(b.clone(), a.clone())];
            rep.record(ab == ba, || format!("{label}: {a}∗{b} = {ab} but {b}∗{a} = {ba}"));
        }
    }
    for a in shapes {
        for b in shapes {
            let ab = &table[&(a.clone(), b.clone())];
            for c in shapes {
                let left = expansion_product(table, ab, c, zero.clone());
                let bc = &table[&(b.clone(), c.clone())];
                // a∗(b∗c) = (b∗c)∗a by commutativity, checked above
                let right = expansion_product(table, bc, a, zero.clone());
                rep.record(left == right, || format!("{label}: ({a}∗{b})∗{c} = {left}, {a}∗({b}∗{c}) = {right}"));
            }
        }
    }
    rep
}

/// Commutativity and associativity of `∗` for family `C` or `D`,
/// `1 ≤ n ≤ max_n`.
pub fn ring_axioms_iso(family: Family, max_n: usize) -> Result<SweepReport> {
    let mut parts = Vec::new();
    for n in 1..=max_n {
        let ring = IsotropicRing::new(family, n)?;
        let shapes = ring.basis();
        let pairs: Vec<(Partition, Partition)> =
            shapes.iter().flat_map(|a| shapes.iter().map(move |b| (a.clone(), b.clone()))).collect();
        let products: Vec<Result<QHExpansion>> =
            pairs.par_iter().map(|(a, b)| ring.qproduct(a, b).map(|p| (*p).clone())).collect();
        let mut table = BTreeMap::new();
        for (key, prod) in pairs.into_iter().zip(products) {
            table.insert(key, prod?);
        }
        let label = format!("{family} n={n}");
        parts.push(Ok(axioms_report(&label, &shapes, &table, ring.zero())));
    }
    SweepReport::merged(&format!("ring axioms, type {family}"), parts)
}

/// The presentation relations evaluate to zero, `1 ≤ n ≤ max_n`.
pub fn relations_sweep(family: Family, max_n: usize) -> Result<SweepReport> {
    let mut rep = SweepReport::new(format!("presentation relations, type {family}"));
    for n in 1..=max_n {
        let ring = IsotropicRing::new(family, n)?;
        for i in 1..=n {
            let defect = ring.relation_defect(i)?;
            rep.record(defect.is_zero(), || format!("n={n} i={i}: relation evaluates to {defect}"));
        }
    }
    Ok(rep)
}

/// The Pfaffian Laplace identity for every `λ ∈ D_n` with `ℓ(λ) ≥ 3`.
pub fn pfaffian_sweep(family: Family, max_n: usize) -> Result<SweepReport> {
    let mut parts = Vec::new();
    for n in 3..=max_n {
        let ring = IsotropicRing::new(family, n)?;
        let shapes: Vec<Partition> = ring.basis().into_iter().filter(|l| l.len() >= 3).collect();
        let chunk: Vec<Result<SweepReport>> = shapes
            .par_iter()
            .map(|lam| {
                let mut rep = SweepReport::new("");
                let defect = ring.pfaffian_defect(lam)?;
                rep.record(defect.is_zero(), || format!("n={n} λ={lam}: Laplace expansion minus σ_λ = {defect}"));
                Ok(rep)
            })
            .collect();
        parts.extend(chunk);
    }
    SweepReport::merged(&format!("Pfaffian Laplace identity, type {family}"), parts)
}

fn valid_triples(ring: &IsotropicRing, total: usize) -> Vec<(Partition, Partition, Partition)> {
    let shapes = ring.basis();
    let mut out = Vec::new();
    for a in &shapes {
        for b in &shapes {
            for c in &shapes {
                if a.weight() + b.weight() + c.weight() == total {
                    out.push((a.clone(), b.clone(), c.clone()));
                }
            }
        }
    }
    out
}

/// `⟨σ_λ,σ_μ,σ_ν⟩_1` on `LG(n,2n)` equals half the classical triple
/// intersection on `LG(n+1,2n+2)`, and that intersection is even.
pub fn lift_sweep(max_n: usize) -> Result<SweepReport> {
    let oracle = QFunctionOracle::new();
    let mut parts = Vec::new();
    for n in 1..=max_n {
        let ring = IsotropicRing::new(Family::C, n)?;
        let triples = valid_triples(&ring, ring.rules().dimension(1));
        let chunk: Vec<Result<SweepReport>> = triples
            .par_iter()
            .map(|(a, b, c)| {
                let mut rep = SweepReport::new("");
                let doubled = degree1_lift_integral(&oracle, n, a, b, c)?;
                let gw = ring.gw(1, a, b, c)?;
                rep.record(doubled % 2 == 0 && doubled / 2 == gw, || {
                    format!("n={n} {a} {b} {c}: quantum {gw}, LG({},{}) integral {doubled}", n + 1, 2 * n + 2)
                });
                Ok(rep)
            })
            .collect();
        parts.extend(chunk);
    }
    SweepReport::merged("degree-1 lift", parts)
}

/// The `q⁰` part of `σ_λ ∗ σ_μ` against Schur `Q`- (family `C`) or
/// `P`-function (family `D`) structure constants, `|λ|+|μ| ≤ max_weight`.
pub fn classical_iso(family: Family, max_n: usize, max_weight: usize) -> Result<SweepReport> {
    let oracle = QFunctionOracle::new();
    let qp = if family == Family::C { QpFamily::Q } else { QpFamily::P };
    let mut parts = Vec::new();
    for n in 1..=max_n {
        let ring = IsotropicRing::new(family, n)?;
        let shapes = ring.basis();
        let pairs: Vec<(Partition, Partition)> = shapes
            .iter()
            .flat_map(|a| shapes.iter().map(move |b| (a.clone(), b.clone())))
            .filter(|(a, b)| a.weight() + b.weight() <= max_weight)
            .collect();
        let chunk: Vec<Result<SweepReport>> = pairs
            .par_iter()
            .map(|(a, b)| {
                let mut rep = SweepReport::new("");
                let quantum = ring.qproduct(a, b)?.degree_part(0);
                let classical: BTreeMap<Partition, i64> = oracle
                    .product(qp, a, b)?
                    .iter()
                    .filter(|(nu, _)| nu.part(1) <= n)
                    .map(|(nu, &c)| (nu.clone(), c as i64))
                    .collect();
                rep.record(quantum == classical, || {
                    format!("{family} n={n} {a}∗{b}: q⁰ part {quantum:?}, oracle {classical:?}")
                });
                Ok(rep)
            })
            .collect();
        parts.extend(chunk);
    }
    SweepReport::merged(&format!("classical reduction, type {family}"), parts)
}

/// `⟨σ_λ, σ_μ, σ_ν⟩_0` on `G(k,n)` against Littlewood-Richardson numbers.
pub fn classical_a(max_n: usize) -> Result<SweepReport> {
    let mut parts = Vec::new();
    for n in 1..=max_n {
        for k in 1..n {
            let ring = TypeARing::new(k, n, Engine::Both)?;
            let shapes = Partition::all_in_box(k, n - k);
            let dim = k * (n - k);
            let chunk: Vec<Result<SweepReport>> = shapes
                .par_iter()
                .map(|lam| {
                    let mut rep = SweepReport::new("");
                    for mu in &shapes {
                        for nu in &shapes {
                            if lam.weight() + mu.weight() + nu.weight() != dim {
                                continue;
                            }
                            let gw = ring.gw(0, lam, mu, nu)?;
                            let dual = poincare_dual(Family::A, nu, k, n)?;
                            let lr = lr_coefficient(lam, mu, &dual);
                            rep.record(gw == lr, || format!("G({k},{n}) {lam} {mu} {nu}: gw {gw}, LR {lr}"));
                        }
                    }
                    Ok(rep)
                })
                .collect();
            parts.extend(chunk);
        }
    }
    SweepReport::merged("classical reduction, type A", parts)
}

/// Degree-`d` invariants with a class shorter than the family threshold
/// vanish when read off the quantum product directly.
pub fn length_vanishing(family: Family, max_n: usize) -> Result<SweepReport> {
    let mut parts = Vec::new();
    for n in 1..=max_n {
        let ring = IsotropicRing::new(family, n)?;
        let top = ring.rules().dimension(0);
        let mut d = 1;
        while ring.rules().dimension(d) <= 3 * top {
            let threshold = ring.rules().length_threshold(d);
            let triples: Vec<_> = valid_triples(&ring, ring.rules().dimension(d))
                .into_iter()
                .filter(|(a, b, c)| [a, b, c].iter().any(|x| x.len() < threshold))
                .collect();
            let chunk: Vec<Result<SweepReport>> = triples
                .par_iter()
                .map(|(a, b, c)| {
                    let mut rep = SweepReport::new("");
                    let v = ring.gw_from_product(d, a, b, c)?;
                    rep.record(v == 0, || format!("{family} n={n} d={d} {a} {b} {c}: {v}"));
                    Ok(rep)
                })
                .collect();
            parts.extend(chunk);
            d += 1;
        }
    }
    SweepReport::merged(&format!("length vanishing, type {family}"), parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweeps_pass() {
        assert!(conjecture_sweep(1, 3).unwrap().passed());
        assert!(jstring_coherence(4).unwrap().passed());
        assert!(tau_squared(2, 3).unwrap().passed());
        assert!(relations_sweep(Family::C, 3).unwrap().passed());
        assert!(relations_sweep(Family::D, 3).unwrap().passed());
    }

    #[test]
    fn reports_are_thread_independent() {
        let one = with_threads(Some(1), || conjecture_sweep(1, 4)).unwrap().unwrap();
        let four = with_threads(Some(4), || conjecture_sweep(1, 4)).unwrap().unwrap();
        assert_eq!(one, four);
    }
}
