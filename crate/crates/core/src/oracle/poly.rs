use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Exponent = Vec<u8>;

/// Multivariate polynomial with arbitrary-precision integer coefficients.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparsePolynomial {
    nvars: usize,
    terms: HashMap<Exponent, BigInt>,
}

impl SparsePolynomial {
    pub fn zero(nvars: usize) -> Self {
        SparsePolynomial { nvars, terms: HashMap::new() }
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        SparsePolynomial::monomial(vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> Self {
        SparsePolynomial::constant(nvars, 1)
    }

    pub fn monomial(exponent: Exponent, c: impl Into<BigInt>) -> Self {
        let mut p = SparsePolynomial::zero(exponent.len());
        p.add_term(exponent, c.into());
        p
    }

    /// The variable `x_{i+1}` (0-based index `i`).
    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        SparsePolynomial::monomial(e, 1)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigInt)> {
        self.terms.iter()
    }

    /// Terms sorted by exponent, for deterministic output.
    pub fn sorted_terms(&self) -> Vec<(&Exponent, &BigInt)> {
        let mut t: Vec<_> = self.terms.iter().collect();
        t.sort_by(|a, b| b.0.cmp(a.0));
        t
    }

    pub fn coefficient(&self, exponent: &[u8]) -> BigInt {
        self.terms.get(exponent).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, exponent: Exponent, c: BigInt) {
        debug_assert_eq!(exponent.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exponent) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &SparsePolynomial, c: &BigInt) {
        for (e, v) in &other.terms {
            self.add_term(e.clone(), v * c);
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = SparsePolynomial::zero(self.nvars);
        out.add_scaled(self, c);
        out
    }

    /// Exact division of every coefficient; `None` if some coefficient is
    /// not divisible.
    pub fn div_exact(&self, c: &BigInt) -> Option<Self> {
        let mut out = SparsePolynomial::zero(self.nvars);
        for (e, v) in &self.terms {
            if !(v % c).is_zero() {
                return None;
            }
            out.terms.insert(e.clone(), v / c);
        }
        Some(out)
    }

    /// Largest term under `order`.
    pub fn leading_term(&self, order: impl Fn(&[u8], &[u8]) -> Ordering) -> Option<(&Exponent, &BigInt)> {
        self.terms.iter().max_by(|a, b| order(a.0, b.0))
    }

    /// Divided difference `∂_i f = (f - s_i f) / (x_i - x_{i+1})`, where
    /// `s_i` swaps `x_i` and `x_{i+1}` (0-based `i`).
    pub fn divided_difference(&self, i: usize) -> Self {
        let mut out = SparsePolynomial::zero(self.nvars);
        for (e, c) in &self.terms {
            let (p, q) = (e[i], e[i + 1]);
            match p.cmp(&q) {
                Ordering::Equal => {}
                Ordering::Greater => {
                    for j in 0..(p - q) {
                        let mut f = e.clone();
                        f[i] = p - 1 - j;
                        f[i + 1] = q + j;
                        out.add_term(f, c.clone());
                    }
                }
                Ordering::Less => {
                    for j in 0..(q - p) {
                        let mut f = e.clone();
                        f[i] = p + j;
                        f[i + 1] = q - 1 - j;
                        out.add_term(f, -c);
                    }
                }
            }
        }
        out
    }

    /// Constant term, i.e. the value at `x = 0`.
    pub fn constant_term(&self) -> BigInt {
        self.coefficient(&vec![0; self.nvars])
    }
}

impl AddAssign<&SparsePolynomial> for SparsePolynomial {
    fn add_assign(&mut self, rhs: &SparsePolynomial) {
        self.add_scaled(rhs, &BigInt::one());
    }
}

impl SubAssign<&SparsePolynomial> for SparsePolynomial {
    fn sub_assign(&mut self, rhs: &SparsePolynomial) {
        self.add_scaled(rhs, &-BigInt::one());
    }
}

impl Add for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn add(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn sub(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn neg(self) -> SparsePolynomial {
        self.scale(&-BigInt::one())
    }
}

impl Mul for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn mul(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = SparsePolynomial::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if k > 0 || c.is_negative() {
                write!(f, "{}{}", if k > 0 { " " } else { "" }, sign)?;
                if k > 0 {
                    f.write_str(" ")?;
                }
            }
            let mag = c.abs();
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| if p == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, p) })
                .collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{mag}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divided_difference_of_square() {
        // ∂_1 x1^2 = x1 + x2
        let p = SparsePolynomial::monomial(vec![2, 0], 1);
        let d = p.divided_difference(0);
        let expected = &SparsePolynomial::variable(2, 0) + &SparsePolynomial::variable(2, 1);
        assert_eq!(d, expected);
        // ∂_1 of a symmetric polynomial vanishes
        assert!(expected.divided_difference(0).is_zero());
    }

    #[test]
    fn arithmetic_cancels() {
        let x = SparsePolynomial::variable(3, 0);
        let y = SparsePolynomial::variable(3, 2);
        let s = &x + &y;
        let d = &(&s * &s) - &(&(&x * &x) + &(&y * &y));
        assert_eq!(d, SparsePolynomial::monomial(vec![1, 0, 1], 2));
        assert_eq!(d.to_string(), "2*x1*x3");
    }
}
