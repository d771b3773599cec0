use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(window: impl Into<Vec<usize>>) -> Result<Self> {
        let window = window.into();
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &v in &window {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!("{window:?}")));
            }
            seen[v] = true;
        }
        Ok(Permutation(window))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    /// The longest element `w₀ = (n, n-1, …, 1)`.
    pub fn longest(n: usize) -> Self {
        Permutation((1..=n).rev().collect())
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn window(&self) -> &[usize] {
        &self.0
    }

    /// `w(i)`, 1-indexed; fixed points beyond the window.
    pub fn at(&self, i: usize) -> usize {
        self.0.get(i - 1).copied().unwrap_or(i)
    }

    /// Inversion count.
    pub fn length(&self) -> usize {
        let w = &self.0;
        (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count()).sum()
    }

    /// Positions `i` with `w(i) > w(i+1)`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.0.len()).filter(|&i| self.0[i - 1] > self.0[i]).collect()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Self {
        let n = self.size().max(other.size());
        Permutation((1..=n).map(|i| self.at(other.at(i))).collect())
    }

    /// Right multiplication by the simple transposition `s_i`
    /// (swaps positions `i` and `i+1`).
    pub fn swap_positions(&self, i: usize) -> Self {
        let mut w = self.0.clone();
        w.swap(i - 1, i);
        Permutation(w)
    }

    /// Embeds into `S_m` for `m ≥ n` by fixing the new points.
    pub fn embed(&self, m: usize) -> Self {
        let mut w = self.0.clone();
        w.extend(self.0.len() + 1..=m.max(self.0.len()));
        Permutation(w)
    }

    /// Lehmer code: `c_i = #{j > i : w(j) < w(i)}`.
    pub fn code(&self) -> Vec<usize> {
        let w = &self.0;
        (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[j] < w[i]).count()).collect()
    }

    /// Inverse of [`Permutation::code`] in `S_n`; `None` unless
    /// `c_i ≤ n - i` for all `i`.
    pub fn from_code(code: &[usize], n: usize) -> Option<Self> {
        let mut remaining: Vec<usize> = (1..=n).collect();
        let mut w = Vec::with_capacity(n);
        for i in 0..n {
            let c = code.get(i).copied().unwrap_or(0);
            if c >= remaining.len() {
                return None;
            }
            w.push(remaining.remove(c));
        }
        if code.len() > n && code[n..].iter().any(|&c| c != 0) {
            return None;
        }
        Some(Permutation(w))
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        fn rec(n: usize, used: &mut Vec<bool>, cur: &mut Vec<usize>, out: &mut Vec<Permutation>) {
            if cur.len() == n {
                out.push(Permutation(cur.clone()));
                return;
            }
            for v in 1..=n {
                if !used[v] {
                    used[v] = true;
                    cur.push(v);
                    rec(n, used, cur, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(n, &mut vec![false; n + 1], &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        if t.is_empty() {
            return Ok(Permutation(Vec::new()));
        }
        let window = t
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| Error::InvalidPermutation(s.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(window)
    }
}

/// A signed permutation: absolute values form a permutation of `1..=n`,
/// each entry possibly barred.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedElement(Vec<(usize, bool)>);

impl SignedElement {
    pub fn new(entries: Vec<(usize, bool)>) -> Result<Self> {
        let abs: Vec<usize> = entries.iter().map(|e| e.0).collect();
        Permutation::new(abs)?;
        Ok(SignedElement(entries))
    }

    pub fn entries(&self) -> &[(usize, bool)] {
        &self.0
    }

    /// Entries as signed integers, barred values negative.
    pub fn signed_values(&self) -> Vec<i64> {
        self.0.iter().map(|&(v, bar)| if bar { -(v as i64) } else { v as i64 }).collect()
    }

    /// Inversions of the signed sequence plus the sum of barred values.
    pub fn length(&self) -> usize {
        let s = self.signed_values();
        let inversions: usize =
            (0..s.len()).map(|i| (i + 1..s.len()).filter(|&j| s[i] > s[j]).count()).sum();
        let barred: usize = self.0.iter().filter(|e| e.1).map(|e| e.0).sum();
        inversions + barred
    }
}

impl fmt::Display for SignedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> =
            self.0.iter().map(|&(v, bar)| if bar { format!("{v}\u{304}") } else { v.to_string() }).collect();
        write!(f, "({})", s.join(","))
    }
}
