use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::poly::{Exponent, SparsePolynomial};
use crate::combinatorics::{check_two_step_descents, Permutation};
use crate::error::{Error, Result};

/// Schubert coefficients `c_{u,v}^w` indexed by `w`.
pub type SchubertExpansion = BTreeMap<Permutation, BigInt>;

/// Reverse lexicographic comparison: the last variable decides first and
/// the larger exponent wins. The Schubert polynomial `𝔖_w` has leading
/// monomial `x^{code(w)}` under this order.
pub fn revlex(a: &[u8], b: &[u8]) -> Ordering {
    a.iter().rev().cmp(b.iter().rev())
}

/// Schubert calculus on the full flag variety of `ℂ^n`.
///
/// Polynomials live in `ℤ[x_1..x_n]` modulo the ideal of symmetric
/// polynomials without constant term. Normal forms are taken against the
/// Gröbner basis `h_{n-i+1}(x_1..x_i)`, whose standard monomials are the
/// sub-staircase ones `x^a`, `a_i ≤ n - i`. Every `𝔖_w` with `w ∈ S_n` is
/// already in normal form, and the images of `𝔖_x` for `x ∉ S_n` vanish,
/// so expanding a normal form by leading-term elimination yields the
/// `S_n` part of the Schubert expansion.
///
/// All caches are behind mutexes and only ever memoize pure functions.
#[derive(Debug)]
pub struct SchubertCalculus {
    n: usize,
    polys: Mutex<HashMap<Permutation, Arc<SparsePolynomial>>>,
    normal_forms: Mutex<HashMap<Exponent, Arc<SparsePolynomial>>>,
    products: Mutex<HashMap<(Permutation, Permutation), Arc<SchubertExpansion>>>,
}

impl SchubertCalculus {
    pub fn new(n: usize) -> Self {
        SchubertCalculus {
            n,
            polys: Mutex::new(HashMap::new()),
            normal_forms: Mutex::new(HashMap::new()),
            products: Mutex::new(HashMap::new()),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn check(&self, w: &Permutation) -> Result<()> {
        if w.size() != self.n {
            return Err(Error::InvalidPermutation(format!("{w} is not in S_{}", self.n)));
        }
        Ok(())
    }

    /// `𝔖_w`, computed from `𝔖_{w₀} = x_1^{n-1} x_2^{n-2} ⋯` by divided
    /// differences: `𝔖_w = ∂_i 𝔖_{w s_i}` whenever `w(i) < w(i+1)`.
    pub fn polynomial(&self, w: &Permutation) -> Arc<SparsePolynomial> {
        assert_eq!(w.size(), self.n);
        if let Some(p) = self.polys.lock().unwrap().get(w) {
            return p.clone();
        }
        let n = self.n;
        let poly = match (1..n).find(|&i| w.at(i) < w.at(i + 1)) {
            None => {
                let staircase: Exponent = (0..n).map(|i| (n - 1 - i) as u8).collect();
                SparsePolynomial::monomial(staircase, 1)
            }
            Some(i) => self.polynomial(&w.swap_positions(i)).divided_difference(i - 1),
        };
        let poly = Arc::new(poly);
        self.polys.lock().unwrap().insert(w.clone(), poly.clone());
        poly
    }

    fn monomial_normal_form(&self, e: &[u8]) -> Arc<SparsePolynomial> {
        if let Some(p) = self.normal_forms.lock().unwrap().get(e) {
            return p.clone();
        }
        let n = self.n;
        // x_{t+1}^{n-t} is the leading monomial of h_{n-t}(x_1..x_{t+1}).
        let result = match (0..n).rev().find(|&t| e[t] as usize >= n - t) {
            None => SparsePolynomial::monomial(e.to_vec(), 1),
            Some(t) => {
                let degree = n - t;
                let mut base = e.to_vec();
                base[t] -= degree as u8;
                let mut acc = SparsePolynomial::zero(n);
                let mut comp = vec![0u8; t + 1];
                let minus_one = BigInt::from(-1);
                for_each_composition(degree, t + 1, &mut comp, 0, &mut |c| {
                    if c[t] as usize == degree {
                        return;
                    }
                    let mut f = base.clone();
                    for (fi, ci) in f.iter_mut().zip(c) {
                        *fi += ci;
                    }
                    acc.add_scaled(&self.monomial_normal_form(&f), &minus_one);
                });
                acc
            }
        };
        let result = Arc::new(result);
        self.normal_forms.lock().unwrap().insert(e.to_vec(), result.clone());
        result
    }

    /// Normal form modulo the symmetric ideal.
    pub fn normal_form(&self, p: &SparsePolynomial) -> SparsePolynomial {
        let mut out = SparsePolynomial::zero(self.n);
        for (e, c) in p.terms() {
            out.add_scaled(&self.monomial_normal_form(e), c);
        }
        out
    }

    /// Expands a normal-form polynomial in the Schubert basis of `S_n` by
    /// repeatedly subtracting the Schubert polynomial of the leading
    /// exponent.
    pub fn expand(&self, p: &SparsePolynomial) -> Result<SchubertExpansion> {
        let mut rest = self.normal_form(p);
        let mut out = SchubertExpansion::new();
        while let Some((e, c)) = rest.leading_term(revlex).map(|(e, c)| (e.clone(), c.clone())) {
            let code: Vec<usize> = e.iter().map(|&x| x as usize).collect();
            let x = Permutation::from_code(&code, self.n)
                .ok_or_else(|| Error::Inconsistent(format!("leading exponent {e:?} is not a code")))?;
            rest.add_scaled(&self.polynomial(&x), &-c.clone());
            out.insert(x, c);
        }
        Ok(out)
    }

    /// `𝔖_u 𝔖_v = Σ c_{u,v}^w 𝔖_w` restricted to `w ∈ S_n`.
    pub fn product(&self, u: &Permutation, v: &Permutation) -> Result<Arc<SchubertExpansion>> {
        self.check(u)?;
        self.check(v)?;
        let key = if u <= v { (u.clone(), v.clone()) } else { (v.clone(), u.clone()) };
        if let Some(e) = self.products.lock().unwrap().get(&key) {
            return Ok(e.clone());
        }
        let prod = &*self.polynomial(u) * &*self.polynomial(v);
        let expansion = Arc::new(self.expand(&prod)?);
        self.products.lock().unwrap().insert(key, expansion.clone());
        Ok(expansion)
    }

    pub fn structure_constant(&self, u: &Permutation, v: &Permutation, w: &Permutation) -> Result<u64> {
        self.check(w)?;
        let c = self.product(u, v)?.get(w).cloned().unwrap_or_else(BigInt::zero);
        to_count(&c)
    }

    /// `∫_{F(a,b;n)} [X_u]·[X_v]·[X_w]` for minimal coset representatives.
    pub fn triple_integral_twostep(
        &self,
        a: usize,
        b: usize,
        u: &Permutation,
        v: &Permutation,
        w: &Permutation,
    ) -> Result<u64> {
        for x in [u, v, w] {
            self.check(x)?;
            check_two_step_descents(x, a, b)?;
        }
        let n = self.n;
        let dim = (n - b) * b + (b - a) * a;
        if u.length() + v.length() + w.length() != dim {
            return Ok(0);
        }
        // The dual class on G/P is indexed by w₀ w w₀ᴾ, with w₀ᴾ the longest
        // element of S_a × S_{b-a} × S_{n-b}.
        let mut parabolic: Vec<usize> = Vec::with_capacity(n);
        for (lo, hi) in [(0, a), (a, b), (b, n)] {
            parabolic.extend((lo + 1..=hi).rev());
        }
        let w0p = Permutation::new(parabolic)?;
        let dual = Permutation::longest(n).compose(w).compose(&w0p);
        self.structure_constant(u, v, &dual)
    }
}

fn for_each_composition(total: usize, parts: usize, cur: &mut Vec<u8>, idx: usize, f: &mut dyn FnMut(&[u8])) {
    if idx + 1 == parts {
        cur[idx] = total as u8;
        f(cur);
        return;
    }
    for k in 0..=total {
        cur[idx] = k as u8;
        for_each_composition(total - k, parts, cur, idx + 1, f);
    }
}

pub(crate) fn to_count(c: &BigInt) -> Result<u64> {
    if c.is_negative() {
        return Err(Error::Inconsistent(format!("negative structure constant {c}")));
    }
    c.to_u64().ok_or_else(|| Error::Inconsistent(format!("structure constant {c} overflows u64")))
}

/// `c_{u,v}^w` for permutations in a common `S_N` (shorter windows are
/// embedded by fixing the extra points).
pub fn structure_constant_a(u: &Permutation, v: &Permutation, w: &Permutation) -> Result<u64> {
    let n = u.size().max(v.size()).max(w.size()).max(1);
    SchubertCalculus::new(n).structure_constant(&u.embed(n), &v.embed(n), &w.embed(n))
}

/// `∫_{F(a,b;n)} [X_u]·[X_v]·[X_w]`.
pub fn triple_integral_twostep(
    a: usize,
    b: usize,
    n: usize,
    u: &Permutation,
    v: &Permutation,
    w: &Permutation,
) -> Result<u64> {
    SchubertCalculus::new(n).triple_integral_twostep(a, b, u, v, w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn small_schubert_polynomials() {
        let calc = SchubertCalculus::new(3);
        assert_eq!(calc.polynomial(&p("(1,3,2)")).to_string(), "x1 + x2");
        assert_eq!(calc.polynomial(&p("(3,1,2)")).to_string(), "x1^2");
        assert_eq!(calc.polynomial(&p("(2,3,1)")).to_string(), "x1*x2");
        assert_eq!(calc.polynomial(&Permutation::identity(3)).to_string(), "1");
    }

    #[test]
    fn leading_monomial_is_the_code() {
        let calc = SchubertCalculus::new(5);
        for w in Permutation::all(5) {
            let poly = calc.polynomial(&w);
            let (e, c) = poly.leading_term(revlex).unwrap();
            let code: Vec<u8> = w.code().into_iter().map(|x| x as u8).collect();
            assert_eq!(e, &code, "{w}");
            assert_eq!(c, &BigInt::from(1));
            assert!(poly.terms().all(|(_, c)| c > &BigInt::zero()));
        }
    }

    #[test]
    fn structure_constant_examples() {
        assert_eq!(structure_constant_a(&p("(2,1,3)"), &p("(2,1,3)"), &p("(3,1,2)")).unwrap(), 1);
        assert_eq!(structure_constant_a(&p("(2,1,3)"), &p("(2,1,3)"), &p("(2,3,1)")).unwrap(), 0);
        // Monk: 𝔖_{s1} 𝔖_{s2} = 𝔖_{231} + 𝔖_{312}
        let calc = SchubertCalculus::new(3);
        let e = calc.product(&p("(2,1,3)"), &p("(1,3,2)")).unwrap();
        assert_eq!(e.len(), 2);
        assert_eq!(e[&p("(2,3,1)")], BigInt::from(1));
        assert_eq!(e[&p("(3,1,2)")], BigInt::from(1));
    }

    #[test]
    fn unit_and_commutativity() {
        let calc = SchubertCalculus::new(4);
        let all = Permutation::all(4);
        let id = Permutation::identity(4);
        for v in &all {
            for w in &all {
                assert_eq!(calc.structure_constant(&id, v, w).unwrap(), u64::from(v == w));
            }
        }
        for u in all.iter().step_by(5) {
            for v in all.iter().step_by(3) {
                assert_eq!(*calc.product(u, v).unwrap(), *calc.product(v, u).unwrap());
            }
        }
    }

    #[test]
    fn stable_under_embedding() {
        let small = SchubertCalculus::new(3);
        let big = SchubertCalculus::new(5);
        for u in Permutation::all(3) {
            for v in Permutation::all(3) {
                for w in Permutation::all(3) {
                    assert_eq!(
                        small.structure_constant(&u, &v, &w).unwrap(),
                        big.structure_constant(&u.embed(5), &v.embed(5), &w.embed(5)).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn twostep_point_against_fundamental_class() {
        let id = Permutation::identity(2);
        let s1 = p("(2,1)");
        assert_eq!(triple_integral_twostep(1, 2, 2, &id, &id, &s1).unwrap(), 1);
        assert_eq!(triple_integral_twostep(1, 2, 2, &id, &id, &id).unwrap(), 0);
        assert!(triple_integral_twostep(1, 1, 3, &p("(1,3,2)"), &id.embed(3), &id.embed(3)).is_err());
    }
}
