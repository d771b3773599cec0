//! Schur `Q`- and `P`-functions in finitely many variables.
//!
//! `q_k` is read off the generating function `∏ (1 + x_i t)/(1 - x_i t)`,
//! two-row functions come from
//! `Q_{i,j} = q_i q_j + 2 Σ_{k=1}^{j} (-1)^k q_{i+k} q_{j-k}`,
//! longer ones from the Pfaffian, and `P_λ = 2^{-ℓ(λ)} Q_λ`.
//!
//! A degree-`D` element of the ring spanned by the `Q_λ` is determined by
//! its restriction to `m` variables as soon as every strict partition of
//! `D` has at most `m` parts, so products are expanded in that many
//! variables.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::SparsePolynomial;
use super::schubert::to_count;
use crate::combinatorics::Partition;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QpFamily {
    Q,
    P,
}

impl fmt::Display for QpFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            QpFamily::Q => "Q",
            QpFamily::P => "P",
        })
    }
}

impl FromStr for QpFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "Q" | "q" => Ok(QpFamily::Q),
            "P" | "p" => Ok(QpFamily::P),
            other => Err(Error::Family(other.to_string())),
        }
    }
}

/// Smallest variable count that keeps degree-`degree` expansions exact.
pub fn variables_for_degree(degree: usize) -> usize {
    let mut m = 0;
    while (m + 1) * (m + 2) / 2 <= degree {
        m += 1;
    }
    m.max(1)
}

type ProductCache = HashMap<(QpFamily, Partition, Partition), Arc<BTreeMap<Partition, u64>>>;

#[derive(Debug, Default)]
pub struct QFunctionOracle {
    functions: Mutex<HashMap<(usize, Partition), Arc<SparsePolynomial>>>,
    products: Mutex<ProductCache>,
}

impl QFunctionOracle {
    pub fn new() -> Self {
        Self::default()
    }

    /// `q_k(x_1..x_m)`: every monomial of degree `k` with coefficient
    /// `2^{#variables present}`.
    pub fn q_special(m: usize, k: usize) -> SparsePolynomial {
        let mut out = SparsePolynomial::zero(m);
        fn rec(m: usize, left: usize, idx: usize, cur: &mut Vec<u8>, out: &mut SparsePolynomial) {
            if idx + 1 == m {
                cur[idx] = left as u8;
                let support = cur.iter().filter(|&&e| e > 0).count();
                out.add_term(cur.clone(), BigInt::one() << support);
                return;
            }
            for e in 0..=left {
                cur[idx] = e as u8;
                rec(m, left - e, idx + 1, cur, out);
            }
        }
        rec(m, k, 0, &mut vec![0; m], &mut out);
        out
    }

    fn two_row(m: usize, i: usize, j: usize) -> SparsePolynomial {
        let mut out = &Self::q_special(m, i) * &Self::q_special(m, j);
        for k in 1..=j {
            let term = &Self::q_special(m, i + k) * &Self::q_special(m, j - k);
            let sign = if k % 2 == 0 { 2 } else { -2 };
            out.add_scaled(&term, &BigInt::from(sign));
        }
        out
    }

    /// `Q_λ(x_1..x_m)` for strict `λ`.
    pub fn q_function(&self, m: usize, lam: &Partition) -> Result<Arc<SparsePolynomial>> {
        if !lam.is_strict() {
            return Err(Error::InvalidPartition(format!("{lam} is not strict")));
        }
        let key = (m, lam.clone());
        if let Some(f) = self.functions.lock().unwrap().get(&key) {
            return Ok(f.clone());
        }
        let parts = lam.parts();
        let f = match parts.len() {
            0 => SparsePolynomial::one(m),
            1 => Self::q_special(m, parts[0]),
            2 => Self::two_row(m, parts[0], parts[1]),
            len => {
                // Pfaffian expansion along the last row; odd length is
                // padded with a zero part.
                let r = len + len % 2;
                let last = if len % 2 == 0 { parts[len - 1] } else { 0 };
                let mut acc = SparsePolynomial::zero(m);
                for j in 0..r - 1 {
                    let pair = Self::two_row(m, parts[j], last);
                    let rest: Vec<usize> =
                        parts.iter().enumerate().filter(|&(i, _)| i != j && i != r - 1).map(|(_, &p)| p).collect();
                    let minor = self.q_function(m, &Partition::new(rest)?)?;
                    let sign = if j % 2 == 0 { 1 } else { -1 };
                    acc.add_scaled(&(&pair * &*minor), &BigInt::from(sign));
                }
                acc
            }
        };
        let f = Arc::new(f);
        self.functions.lock().unwrap().insert(key, f.clone());
        Ok(f)
    }

    /// `P_λ(x_1..x_m) = 2^{-ℓ(λ)} Q_λ`.
    pub fn p_function(&self, m: usize, lam: &Partition) -> Result<SparsePolynomial> {
        let q = self.q_function(m, lam)?;
        q.div_exact(&(BigInt::one() << lam.len()))
            .ok_or_else(|| Error::Inconsistent(format!("Q_{lam} not divisible by 2^ℓ")))
    }

    /// Expansion of a polynomial in the span of the `P_λ` by repeatedly
    /// removing the lexicographically largest monomial `x^κ`, `κ` strict.
    pub fn expand_in_p(&self, f: &SparsePolynomial) -> Result<BTreeMap<Partition, BigInt>> {
        let m = f.nvars();
        let mut rest = f.clone();
        let mut out = BTreeMap::new();
        while let Some((e, c)) = rest.leading_term(|a, b| a.cmp(b)).map(|(e, c)| (e.clone(), c.clone())) {
            let kappa = Partition::new(e.iter().map(|&x| x as usize).collect::<Vec<_>>())
                .ok()
                .filter(|k| k.is_strict())
                .ok_or_else(|| Error::Inconsistent(format!("leading exponent {e:?} is not strict")))?;
            let p = self.p_function(m, &kappa)?;
            rest.add_scaled(&p, &-c.clone());
            out.insert(kappa, c);
        }
        Ok(out)
    }

    /// Structure constants of `Q_λ Q_μ` (in the `Q` basis) or `P_λ P_μ`
    /// (in the `P` basis).
    pub fn product(&self, family: QpFamily, lam: &Partition, mu: &Partition) -> Result<Arc<BTreeMap<Partition, u64>>> {
        for x in [lam, mu] {
            if !x.is_strict() {
                return Err(Error::InvalidPartition(format!("{x} is not strict")));
            }
        }
        let key = if lam <= mu { (family, lam.clone(), mu.clone()) } else { (family, mu.clone(), lam.clone()) };
        if let Some(p) = self.products.lock().unwrap().get(&key) {
            return Ok(p.clone());
        }
        let m = variables_for_degree(lam.weight() + mu.weight());
        let f = &*self.q_function(m, lam)? * &*self.q_function(m, mu)?;
        let mut out = BTreeMap::new();
        for (kappa, c) in self.expand_in_p(&f)? {
            // Q_λ Q_μ = Σ c_κ P_κ; divide by 2^ℓ(κ) for the Q basis, or by
            // 2^{ℓ(λ)+ℓ(μ)} for P_λ P_μ in the P basis.
            let divisor = match family {
                QpFamily::Q => BigInt::one() << kappa.len(),
                QpFamily::P => BigInt::one() << (lam.len() + mu.len()),
            };
            if !(&c % &divisor).is_zero() {
                return Err(Error::Inconsistent(format!("non-integral coefficient for {kappa}")));
            }
            out.insert(kappa, to_count(&(c / divisor))?);
        }
        let out = Arc::new(out);
        self.products.lock().unwrap().insert(key, out.clone());
        Ok(out)
    }

    pub fn structure_constant(&self, family: QpFamily, lam: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
        if !nu.is_strict() {
            return Err(Error::InvalidPartition(format!("{nu} is not strict")));
        }
        if nu.weight() != lam.weight() + mu.weight() {
            return Ok(0);
        }
        Ok(self.product(family, lam, mu)?.get(nu).copied().unwrap_or(0))
    }
}

/// Coefficient of `Q_ν` in `Q_λ Q_μ` (family `Q`) or of `P_ν` in `P_λ P_μ`
/// (family `P`).
pub fn qp_structure_constant(family: QpFamily, lam: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    QFunctionOracle::new().structure_constant(family, lam, mu, nu)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn special_products() {
        assert_eq!(qp_structure_constant(QpFamily::Q, &p("1"), &p("1"), &p("2")).unwrap(), 2);
        assert_eq!(qp_structure_constant(QpFamily::P, &p("1"), &p("1"), &p("2")).unwrap(), 1);
        let o = QFunctionOracle::new();
        assert_eq!(o.structure_constant(QpFamily::Q, &p("2"), &p("1"), &p("3")).unwrap(), 2);
        assert_eq!(o.structure_constant(QpFamily::Q, &p("2"), &p("1"), &p("2,1")).unwrap(), 1);
        assert_eq!(o.structure_constant(QpFamily::P, &p("2"), &p("1"), &p("2,1")).unwrap(), 1);
        assert!(o.structure_constant(QpFamily::P, &p("1,1"), &p("1"), &p("2,1")).is_err());
    }

    #[test]
    fn unit() {
        let o = QFunctionOracle::new();
        for fam in [QpFamily::Q, QpFamily::P] {
            for lam in ["3,1", "2", "4,2,1"] {
                let prod = o.product(fam, &p(lam), &Partition::empty()).unwrap();
                assert_eq!(prod.len(), 1);
                assert_eq!(prod[&p(lam)], 1);
            }
        }
    }

    #[test]
    fn variable_count() {
        assert_eq!(variables_for_degree(0), 1);
        assert_eq!(variables_for_degree(2), 1);
        assert_eq!(variables_for_degree(3), 2);
        assert_eq!(variables_for_degree(12), 4);
        assert_eq!(variables_for_degree(15), 5);
    }

    #[test]
    fn extra_variables_do_not_change_constants() {
        let o = QFunctionOracle::new();
        let lam = p("3,1");
        let mu = p("2,1");
        let small = o.product(QpFamily::Q, &lam, &mu).unwrap();
        let m = 5;
        let f = &*o.q_function(m, &lam).unwrap() * &*o.q_function(m, &mu).unwrap();
        let big: BTreeMap<Partition, u64> = o
            .expand_in_p(&f)
            .unwrap()
            .into_iter()
            .map(|(k, c)| {
                let c = c / (BigInt::one() << k.len());
                (k, to_count(&c).unwrap())
            })
            .collect();
        assert_eq!(*small, big);
    }
}
