use std::fmt;
use std::str::FromStr;

use crate::combinatorics::Permutation;
use crate::error::{Error, Result};

/// A string over `{0,1,2}` indexing a Schubert class of a two-step flag
/// variety `F(a,b;n)`: `a` zeros, `b-a` ones and `n-b` twos.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabelString(Vec<u8>);

impl LabelString {
    pub fn new(symbols: impl Into<Vec<u8>>) -> Result<Self> {
        let symbols = symbols.into();
        if let Some(bad) = symbols.iter().find(|&&s| s > 2) {
            return Err(Error::InvalidString(format!("symbol {bad} outside {{0,1,2}}")));
        }
        Ok(LabelString(symbols))
    }

    pub fn symbols(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Counts of `0`, `1`, `2`.
    pub fn content(&self) -> [usize; 3] {
        let mut c = [0; 3];
        for &s in &self.0 {
            c[s as usize] += 1;
        }
        c
    }

    /// The two-step flag variety `(a, b)` this string lives on.
    pub fn flag_type(&self) -> (usize, usize) {
        let [z, o, _] = self.content();
        (z, z + o)
    }

    /// Number of pairs `i < j` with `s_i > s_j`; the codimension of the
    /// Schubert variety.
    pub fn inversions(&self) -> usize {
        let s = &self.0;
        (0..s.len()).map(|i| (i + 1..s.len()).filter(|&j| s[i] > s[j]).count()).sum()
    }

    pub fn reversed(&self) -> Self {
        LabelString(self.0.iter().rev().copied().collect())
    }

    /// The minimal-length permutation `w` with `J(w) = self`: `w(1..a)`
    /// lists the positions of the zeros, then the ones, then the twos.
    pub fn to_permutation(&self) -> Permutation {
        let window: Vec<usize> = (0u8..3)
            .flat_map(|sym| self.0.iter().enumerate().filter(move |(_, &s)| s == sym).map(|(i, _)| i + 1))
            .collect();
        Permutation::new(window).expect("positions form a permutation")
    }

    /// All strings with the given content, in lexicographic order.
    pub fn all_with_content(content: [usize; 3]) -> Vec<LabelString> {
        fn rec(left: &mut [usize; 3], cur: &mut Vec<u8>, out: &mut Vec<LabelString>) {
            if left.iter().all(|&c| c == 0) {
                out.push(LabelString(cur.clone()));
                return;
            }
            for sym in 0..3 {
                if left[sym] > 0 {
                    left[sym] -= 1;
                    cur.push(sym as u8);
                    rec(left, cur, out);
                    cur.pop();
                    left[sym] += 1;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut content.clone(), &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for LabelString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.0 {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for LabelString {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let symbols = s
            .trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                '2' => Ok(2),
                _ => Err(Error::InvalidString(format!("{s:?}"))),
            })
            .collect::<Result<Vec<u8>>>()?;
        LabelString::new(symbols)
    }
}

/// Checks that `w` has descents only at positions in `{a, b}`.
pub fn check_two_step_descents(w: &Permutation, a: usize, b: usize) -> Result<()> {
    let n = w.size();
    if a > b || b > n {
        return Err(Error::Descent(format!("need 0 ≤ a ≤ b ≤ n, got a={a}, b={b}, n={n}")));
    }
    if let Some(i) = w.descents().into_iter().find(|&i| i != a && i != b) {
        return Err(Error::Descent(format!("{w} has a descent at {i}, outside {{{a},{b}}}")));
    }
    Ok(())
}

/// `J(w)`: position `w(p)` gets `0` for `p ≤ a`, `1` for `a < p ≤ b`
/// and `2` otherwise.
pub fn label_string(w: &Permutation, a: usize, b: usize) -> Result<LabelString> {
    check_two_step_descents(w, a, b)?;
    let mut symbols = vec![0u8; w.size()];
    for p in 1..=w.size() {
        symbols[w.at(p) - 1] = if p <= a {
            0
        } else if p <= b {
            1
        } else {
            2
        };
    }
    Ok(LabelString(symbols))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn label_string_examples() {
        assert_eq!(label_string(&w("(3,1,4,2,5)"), 1, 3).unwrap().to_string(), "12012");
        assert_eq!(label_string(&w("(2,1,4,3,5)"), 1, 3).unwrap().to_string(), "10212");
        assert_eq!(label_string(&Permutation::identity(3), 1, 2).unwrap().to_string(), "012");
        assert!(label_string(&w("(3,2,1)"), 1, 3).is_err());
    }

    #[test]
    fn to_permutation_inverts_label_string() {
        for s in LabelString::all_with_content([2, 1, 2]) {
            let perm = s.to_permutation();
            assert_eq!(label_string(&perm, 2, 3).unwrap(), s);
            assert_eq!(perm.length(), s.inversions());
        }
    }
}
