//! Indexing data attached to a Schubert class `σ_λ`: Grassmannian
//! permutations, the modified elements `w_{λ,d}`, their 012-strings and
//! Poincaré duals.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{LabelString, Partition, Permutation, SignedElement, StrictPartition};
use crate::error::{Error, Result};

/// Lie type of the Grassmannian: `A` for `G(k,n)`, `C` for `LG(n,2n)`,
/// `D` for `OG(n+1,2n+2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    C,
    D,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::A => "A",
            Family::C => "C",
            Family::D => "D",
        })
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            other => Err(Error::Family(other.to_string())),
        }
    }
}

fn check_box(lam: &Partition, k: usize, n: usize) -> Result<()> {
    if k > n || !lam.fits_box(k, n - k) {
        return Err(Error::ShapeOutOfRange(format!("{lam} does not fit a {k}×{} box", n.saturating_sub(k))));
    }
    Ok(())
}

fn check_degree(k: usize, n: usize, d: usize) -> Result<()> {
    if d > k.min(n - k) {
        return Err(Error::DegreeOutOfRange(format!("d={d} exceeds min(k, n-k) = {}", k.min(n - k))));
    }
    Ok(())
}

/// Poincaré dual index. Type A (with `k`): box complement rotated by 180°.
/// Types C/D (`k` ignored): set complement of the parts in `{1,…,n}`.
pub fn poincare_dual(family: Family, lam: &Partition, k: usize, n: usize) -> Result<Partition> {
    match family {
        Family::A => {
            check_box(lam, k, n)?;
            let r = n - k;
            let parts: Vec<usize> = (1..=k).map(|i| r - lam.part(k + 1 - i)).collect();
            Partition::new(parts)
        }
        Family::C | Family::D => {
            if !lam.is_strict() || lam.part(1) > n {
                return Err(Error::ShapeOutOfRange(format!("{lam} is not in D_{n}")));
            }
            let parts: Vec<usize> = (1..=n).rev().filter(|i| !lam.parts().contains(i)).collect();
            Partition::new(parts)
        }
    }
}

/// `w_λ` for `d = 0`, and `w_{λ,d}` (window `[k-d+1, k+d]` sorted) for
/// `d > 0`.
pub fn grassmannian_permutation(lam: &Partition, k: usize, n: usize, d: usize) -> Result<Permutation> {
    check_box(lam, k, n)?;
    check_degree(k, n, d)?;
    let mut window: Vec<usize> = (1..=k).map(|i| lam.part(k - i + 1) + i).collect();
    let rest: Vec<usize> = (1..=n).filter(|v| !window.contains(v)).collect();
    window.extend(rest);
    window[k - d..k + d].sort_unstable();
    Permutation::new(window)
}

/// `J^d(λ)` read off the border of `λ` inside the `k × (n-k)` rectangle,
/// lower-left to upper-right.
pub fn jd_string(lam: &Partition, k: usize, n: usize, d: usize) -> Result<LabelString> {
    check_box(lam, k, n)?;
    check_degree(k, n, d)?;
    let r = n - k;
    let mut symbols = Vec::with_capacity(n);
    let mut horizontal = 0;
    let mut vertical = 0;
    let mut push_horizontal = |symbols: &mut Vec<u8>, count: usize| {
        for _ in 0..count {
            horizontal += 1;
            symbols.push(if horizontal <= d { 1 } else { 2 });
        }
    };
    for i in (1..=k).rev() {
        push_horizontal(&mut symbols, lam.part(i) - lam.part(i + 1));
        vertical += 1;
        symbols.push(if vertical <= k - d { 0 } else { 1 });
    }
    push_horizontal(&mut symbols, r - lam.part(1));
    LabelString::new(symbols)
}

/// The type C element `w_{λ,d}` and the codimension `|λ| - d(d+1)/2` of
/// the corresponding Schubert variety in `IG(n-d, 2n)`.
pub fn type_c_element(lam: &StrictPartition, n: usize, d: usize) -> Result<(SignedElement, usize)> {
    if !lam.in_dn(n) {
        return Err(Error::ShapeOutOfRange(format!("{lam} is not in D_{n}")));
    }
    if d > lam.len() {
        return Err(Error::DegreeOutOfRange(format!("d={d} exceeds ℓ({lam}) = {}", lam.len())));
    }
    let complement = poincare_dual(Family::C, lam, 0, n)?;
    let mut entries: Vec<(usize, bool)> = lam.parts().iter().map(|&p| (p, true)).collect();
    entries.extend(complement.parts().iter().rev().map(|&p| (p, false)));
    let mut head: Vec<(usize, bool)> = entries[..d].iter().map(|&(v, _)| (v, false)).collect();
    head.sort_unstable();
    entries.splice(..d, head);
    let codim = lam.weight() - d * (d + 1) / 2;
    Ok((SignedElement::new(entries)?, codim))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::label_string;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn dual_examples() {
        assert_eq!(poincare_dual(Family::A, &p("3,1"), 2, 5).unwrap(), p("2"));
        assert_eq!(poincare_dual(Family::C, &p("3,1"), 0, 3).unwrap(), p("2"));
        assert!(poincare_dual(Family::A, &p("4"), 2, 5).is_err());
        assert!(poincare_dual(Family::D, &p("2,2"), 0, 3).is_err());
    }

    #[test]
    fn permutation_examples() {
        assert_eq!(grassmannian_permutation(&p("2,2"), 2, 5, 1).unwrap().to_string(), "(3,1,4,2,5)");
        assert_eq!(
            grassmannian_permutation(&p("4,4,3,1"), 4, 9, 2).unwrap().to_string(),
            "(2,5,1,3,7,8,4,6,9)"
        );
        assert_eq!(grassmannian_permutation(&p("-"), 3, 7, 0).unwrap(), Permutation::identity(7));
        assert!(grassmannian_permutation(&p("1"), 2, 4, 3).is_err());
    }

    #[test]
    fn jd_examples() {
        assert_eq!(jd_string(&p("4,4,3,1"), 4, 9, 2).unwrap().to_string(), "101202112");
        assert_eq!(jd_string(&p("3,1"), 2, 5, 1).unwrap().to_string(), "10221");
        assert_eq!(jd_string(&p("-"), 2, 4, 0).unwrap().to_string(), "0022");
        let w = grassmannian_permutation(&p("2,2"), 2, 5, 1).unwrap();
        assert_eq!(label_string(&w, 1, 3).unwrap(), jd_string(&p("2,2"), 2, 5, 1).unwrap());
    }

    #[test]
    fn type_c_examples() {
        let s = |x: &str| x.parse::<StrictPartition>().unwrap();
        let (e, c) = type_c_element(&s("2,1"), 2, 1).unwrap();
        assert_eq!((e.entries().to_vec(), c), (vec![(2, false), (1, true)], 2));
        let (e, c) = type_c_element(&s("2,1"), 2, 0).unwrap();
        assert_eq!((e.entries().to_vec(), c), (vec![(2, true), (1, true)], 3));
        let (e, c) = type_c_element(&s("3,1"), 3, 1).unwrap();
        assert_eq!((e.entries().to_vec(), c), (vec![(3, false), (1, true), (2, false)], 3));
        assert!(type_c_element(&s("3"), 3, 2).is_err());
    }
}
