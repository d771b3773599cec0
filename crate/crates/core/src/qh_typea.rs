//! Three-point invariants `⟨σ_λ, σ_μ, σ_ν⟩_d` of `G(k,n)` as classical
//! triple intersections on `F(k-d, k+d; n)`, evaluated either with the
//! Schubert polynomial oracle or by counting puzzles.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

use crate::combinatorics::{grassmannian_permutation, jd_string, poincare_dual, Family, LabelString, Partition};
use crate::error::{Error, Result};
use crate::expansion::QHExpansion;
use crate::oracle::SchubertCalculus;
use crate::puzzle::PuzzleSolver;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    Puzzle,
    #[default]
    Oracle,
    Both,
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Engine::Puzzle => "puzzle",
            Engine::Oracle => "oracle",
            Engine::Both => "both",
        })
    }
}

impl FromStr for Engine {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "puzzle" => Ok(Engine::Puzzle),
            "oracle" => Ok(Engine::Oracle),
            "both" => Ok(Engine::Both),
            other => Err(Error::InvalidString(format!("unknown engine {other:?}"))),
        }
    }
}

type SouthCounts = BTreeMap<LabelString, u128>;

/// `QH*(G(k,n))` with caches for Schubert products and puzzle counts.
#[derive(Debug)]
pub struct TypeARing {
    k: usize,
    n: usize,
    engine: Engine,
    calc: SchubertCalculus,
    solver: PuzzleSolver,
    south: Mutex<HashMap<(LabelString, LabelString), Arc<SouthCounts>>>,
}

impl TypeARing {
    pub fn new(k: usize, n: usize, engine: Engine) -> Result<Self> {
        if k > n {
            return Err(Error::ShapeOutOfRange(format!("k={k} exceeds n={n}")));
        }
        Ok(TypeARing {
            k,
            n,
            engine,
            calc: SchubertCalculus::new(n),
            solver: PuzzleSolver::default(),
            south: Mutex::new(HashMap::new()),
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn engine(&self) -> Engine {
        self.engine
    }

    /// `min(k, n-k)`, the largest degree that can contribute.
    pub fn max_degree(&self) -> usize {
        self.k.min(self.n - self.k)
    }

    fn check_shape(&self, lam: &Partition) -> Result<()> {
        if !lam.fits_box(self.k, self.n - self.k) {
            return Err(Error::ShapeOutOfRange(format!("{lam} does not fit a {}×{} box", self.k, self.n - self.k)));
        }
        Ok(())
    }

    /// The degree `d` with `|λ|+|μ|+|ν| = k(n-k) + nd`, if there is one.
    pub fn degree_for(&self, lam: &Partition, mu: &Partition, nu: &Partition) -> Result<usize> {
        let total = lam.weight() + mu.weight() + nu.weight();
        let dim = self.k * (self.n - self.k);
        if total < dim || !(total - dim).is_multiple_of(self.n.max(1)) {
            return Err(Error::DimensionCondition(format!(
                "|λ|+|μ|+|ν| = {total} is not k(n-k) + nd = {dim} + {}d",
                self.n
            )));
        }
        Ok((total - dim) / self.n.max(1))
    }

    /// `⟨σ_λ, σ_μ, σ_ν⟩_d`, using the degree bound and Yong's vanishing
    /// criterion before invoking an engine.
    pub fn gw(&self, d: usize, lam: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
        let total = lam.weight() + mu.weight() + nu.weight();
        let expected = self.k * (self.n - self.k) + self.n * d;
        if total != expected {
            return Err(Error::DimensionCondition(format!(
                "|λ|+|μ|+|ν| = {total} but k(n-k) + nd = {expected}"
            )));
        }
        for x in [lam, mu, nu] {
            self.check_shape(x)?;
        }
        if d > self.max_degree() {
            return Ok(0);
        }
        if d > 0 && [lam, mu, nu].iter().any(|x| x.part(d) < d) {
            return Ok(0);
        }
        self.engine_value(d, lam, mu, nu)
    }

    /// The selected engine on `F(k-d, k+d; n)` with no shortcuts.
    pub fn engine_value(&self, d: usize, lam: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
        match self.engine {
            Engine::Oracle => self.oracle_value(d, lam, mu, nu),
            Engine::Puzzle => self.puzzle_value(d, lam, mu, nu),
            Engine::Both => {
                let oracle = self.oracle_value(d, lam, mu, nu)?;
                let puzzle = self.puzzle_value(d, lam, mu, nu)?;
                if oracle != puzzle {
                    return Err(Error::EngineDisagreement { puzzle, oracle });
                }
                Ok(oracle)
            }
        }
    }

    /// `∫_{F(k-d,k+d;n)} [X_{w_{λ,d}}]·[X_{w_{μ,d}}]·[X_{w_{ν,d}}]`.
    pub fn oracle_value(&self, d: usize, lam: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
        let (k, n) = (self.k, self.n);
        let u = grassmannian_permutation(lam, k, n, d)?;
        let v = grassmannian_permutation(mu, k, n, d)?;
        let w = grassmannian_permutation(nu, k, n, d)?;
        self.calc.triple_integral_twostep(k - d, k + d, &u, &v, &w)
    }

    /// Number of puzzles with boundary `J^d(λ)`, `J^d(μ)`, `J^d(ν)`.
    pub fn puzzle_value(&self, d: usize, lam: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
        let (k, n) = (self.k, self.n);
        let a = jd_string(lam, k, n, d)?;
        let b = jd_string(mu, k, n, d)?;
        let c = jd_string(nu, k, n, d)?;
        let counts = self.south_counts(&a, &b);
        let count = counts.get(&c).copied().unwrap_or(0);
        u64::try_from(count).map_err(|_| Error::Inconsistent(format!("puzzle count {count} overflows u64")))
    }

    fn south_counts(&self, nw: &LabelString, ne: &LabelString) -> Arc<SouthCounts> {
        let key = (nw.clone(), ne.clone());
        if let Some(c) = self.south.lock().unwrap().get(&key) {
            return c.clone();
        }
        let counts = Arc::new(self.solver.count_all_south(nw, ne));
        self.south.lock().unwrap().insert(key, counts.clone());
        counts
    }

    /// `σ_λ ∗ σ_μ = Σ ⟨σ_λ, σ_μ, σ_{ν′}⟩_d σ_ν q^d`.
    pub fn qproduct(&self, lam: &Partition, mu: &Partition) -> Result<QHExpansion> {
        let (k, n) = (self.k, self.n);
        self.check_shape(lam)?;
        self.check_shape(mu)?;
        let mut out = QHExpansion::zero(Family::A, Some(k), n);
        let total = lam.weight() + mu.weight();
        for d in 0..=self.max_degree() {
            if n * d > total {
                break;
            }
            for nu in Partition::all_in_box(k, n - k) {
                if nu.weight() != total - n * d {
                    continue;
                }
                let dual = poincare_dual(Family::A, &nu, k, n)?;
                let c = self.gw(d, lam, mu, &dual)?;
                out.add_term(nu, d as u32, c as i64);
            }
        }
        Ok(out)
    }
}

/// `⟨σ_λ, σ_μ, σ_ν⟩_d` on `G(k,n)`.
pub fn gw_a(
    k: usize,
    n: usize,
    d: usize,
    lam: &Partition,
    mu: &Partition,
    nu: &Partition,
    engine: Engine,
) -> Result<u64> {
    TypeARing::new(k, n, engine)?.gw(d, lam, mu, nu)
}

/// `σ_λ ∗ σ_μ` in `QH*(G(k,n))`, using the oracle engine.
pub fn qproduct_a(k: usize, n: usize, lam: &Partition, mu: &Partition) -> Result<QHExpansion> {
    TypeARing::new(k, n, Engine::Oracle)?.qproduct(lam, mu)
}
