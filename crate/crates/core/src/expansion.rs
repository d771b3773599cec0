use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::combinatorics::{Family, Partition};

/// An element `Σ c_{ν,d} σ_ν q^d` of a quantum cohomology ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QHExpansion {
    family: Family,
    k: Option<usize>,
    n: usize,
    terms: BTreeMap<(Partition, u32), i64>,
}

impl QHExpansion {
    pub fn zero(family: Family, k: Option<usize>, n: usize) -> Self {
        QHExpansion { family, k, n, terms: BTreeMap::new() }
    }

    pub fn basis(family: Family, k: Option<usize>, n: usize, lam: Partition, d: u32) -> Self {
        let mut e = Self::zero(family, k, n);
        e.add_term(lam, d, 1);
        e
    }

    pub fn unit(family: Family, k: Option<usize>, n: usize) -> Self {
        Self::basis(family, k, n, Partition::empty(), 0)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn k(&self) -> Option<usize> {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_term(&mut self, lam: Partition, d: u32, c: i64) {
        if c == 0 {
            return;
        }
        match self.terms.entry((lam, d)) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &QHExpansion, c: i64) {
        for ((lam, d), v) in &other.terms {
            self.add_term(lam.clone(), *d, v * c);
        }
    }

    /// Multiplies by `c q^e`.
    pub fn shifted(&self, e: u32, c: i64) -> Self {
        let mut out = Self::zero(self.family, self.k, self.n);
        for ((lam, d), v) in &self.terms {
            out.add_term(lam.clone(), d + e, v * c);
        }
        out
    }

    pub fn coefficient(&self, lam: &Partition, d: u32) -> i64 {
        self.terms.get(&(lam.clone(), d)).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms ordered by `q`-degree, then partition.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, u32, i64)> {
        let mut t: Vec<_> = self.terms.iter().map(|((lam, d), c)| (lam, *d, *c)).collect();
        t.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| b.0.cmp(a.0)));
        t.into_iter()
    }

    /// The `q^d` part as a map from partitions to coefficients.
    pub fn degree_part(&self, d: u32) -> BTreeMap<Partition, i64> {
        self.terms.iter().filter(|((_, e), _)| *e == d).map(|((lam, _), c)| (lam.clone(), *c)).collect()
    }

    fn symbol(&self) -> char {
        match self.family {
            Family::D => 'τ',
            _ => 'σ',
        }
    }
}

impl fmt::Display for QHExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let sym = self.symbol();
        for (i, (lam, d, c)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            } else if c < 0 {
                f.write_str("-")?;
            }
            let mag = c.unsigned_abs();
            let class = if lam.is_empty() { None } else { Some(format!("{sym}({lam})")) };
            let qpart = match d {
                0 => None,
                1 => Some("q".to_string()),
                _ => Some(format!("q^{d}")),
            };
            let body = match (class, qpart) {
                (None, None) => String::new(),
                (Some(c), None) => c,
                (None, Some(q)) => q,
                (Some(c), Some(q)) => format!("{c} {q}"),
            };
            match (mag, body.is_empty()) {
                (_, true) => write!(f, "{mag}")?,
                (1, false) => f.write_str(&body)?,
                (_, false) => write!(f, "{mag}{body}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn cancellation_and_display() {
        let mut e = QHExpansion::zero(Family::C, None, 3);
        e.add_term(p("3"), 0, 2);
        e.add_term(p("2,1"), 0, 1);
        e.add_term(p("-"), 1, 1);
        assert_eq!(e.to_string(), "2σ(3) + σ(2,1) + q");
        e.add_term(p("3"), 0, -2);
        assert_eq!(e.len(), 2);
        e.add_term(p("1"), 2, -3);
        assert_eq!(e.to_string(), "σ(2,1) + q - 3σ(1) q^2");
        assert_eq!(QHExpansion::zero(Family::A, Some(2), 4).to_string(), "0");
        assert_eq!(QHExpansion::unit(Family::D, None, 2).to_string(), "1");
    }
}
