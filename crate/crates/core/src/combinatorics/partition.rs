use std::collections::HashSet;
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. Zero parts are
/// stripped on construction, so `(2,0)` and `(2)` are the same value.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        let mut parts = parts.into();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// The `i`-th part, 1-indexed, with `λ_i = 0` past the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return usize::MAX;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_strict(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    /// Young diagram containment `self ⊆ outer`.
    pub fn is_contained_in(&self, outer: &Partition) -> bool {
        self.len() <= outer.len() && self.0.iter().zip(&outer.0).all(|(a, b)| a <= b)
    }

    pub fn fits_box(&self, rows: usize, cols: usize) -> bool {
        self.len() <= rows && self.part(1) <= cols
    }

    /// Partitions inside a `rows × cols` box, in lexicographic order.
    pub fn all_in_box(rows: usize, cols: usize) -> Vec<Partition> {
        fn rec(rows: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition(cur.clone()));
            if cur.len() == rows {
                return;
            }
            for p in 1..=max {
                cur.push(p);
                rec(rows, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(rows, cols, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    /// Boxes `(row, col)`, both 1-indexed.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| (i + 1, j)))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("-");
        }
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("cannot parse {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<String> for Partition {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Partition> for String {
    fn from(p: Partition) -> String {
        p.to_string()
    }
}

/// A strictly decreasing partition.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StrictPartition(Partition);

impl StrictPartition {
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        Partition::new(parts)?.try_into()
    }

    pub fn empty() -> Self {
        StrictPartition(Partition::empty())
    }

    pub fn as_partition(&self) -> &Partition {
        &self.0
    }

    pub fn into_partition(self) -> Partition {
        self.0
    }

    /// Membership in `D_n`: largest part at most `n`.
    pub fn in_dn(&self, n: usize) -> bool {
        self.0.part(1) <= n
    }

    /// All of `D_n`, ordered by weight then lexicographically.
    pub fn all_in_dn(n: usize) -> Vec<StrictPartition> {
        let mut out: Vec<StrictPartition> = (0u32..(1u32 << n))
            .map(|mask| {
                let parts: Vec<usize> = (1..=n).rev().filter(|i| mask & (1 << (i - 1)) != 0).collect();
                StrictPartition(Partition(parts))
            })
            .collect();
        out.sort_by(|a, b| a.weight().cmp(&b.weight()).then_with(|| a.cmp(b)));
        out
    }
}

impl Deref for StrictPartition {
    type Target = Partition;
    fn deref(&self) -> &Partition {
        &self.0
    }
}

impl TryFrom<Partition> for StrictPartition {
    type Error = Error;
    fn try_from(p: Partition) -> Result<Self> {
        if !p.is_strict() {
            return Err(Error::InvalidPartition(format!("{p} is not strict")));
        }
        Ok(StrictPartition(p))
    }
}

impl From<StrictPartition> for Partition {
    fn from(p: StrictPartition) -> Partition {
        p.0
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for StrictPartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        s.parse::<Partition>()?.try_into()
    }
}

/// Connected-component data of a skew diagram `outer / inner`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StripComponents {
    pub is_horizontal_strip: bool,
    pub total_components: usize,
    pub components_off_first_column: usize,
}

impl StripComponents {
    /// `N(inner, outer)`: components not meeting the first column.
    pub fn n(&self) -> usize {
        self.components_off_first_column
    }

    /// `N′(inner, outer)`: one less than the number of components.
    /// Undefined on an empty skew shape.
    pub fn n_prime(&self) -> Option<usize> {
        self.total_components.checked_sub(1)
    }
}

/// Boxes of `outer / inner` are connected when they share an edge or a
/// vertex.
pub fn strip_components(inner: &Partition, outer: &Partition) -> Result<StripComponents> {
    if !inner.is_contained_in(outer) {
        return Err(Error::NotContained { inner: inner.to_string(), outer: outer.to_string() });
    }
    let skew: Vec<(usize, usize)> = (1..=outer.len())
        .flat_map(|i| (inner.part(i) + 1..=outer.part(i)).map(move |j| (i, j)))
        .collect();
    let mut columns = HashSet::new();
    let is_horizontal_strip = skew.iter().all(|&(_, j)| columns.insert(j));

    let cells: HashSet<(usize, usize)> = skew.iter().copied().collect();
    let mut seen: HashSet<(usize, usize)> = HashSet::new();
    let mut total = 0;
    let mut off_first = 0;
    for &start in &skew {
        if !seen.insert(start) {
            continue;
        }
        total += 1;
        let mut meets_first_column = false;
        let mut stack = vec![start];
        while let Some((i, j)) = stack.pop() {
            meets_first_column |= j == 1;
            for di in -1i64..=1 {
                for dj in -1i64..=1 {
                    let ni = i as i64 + di;
                    let nj = j as i64 + dj;
                    if ni < 1 || nj < 1 {
                        continue;
                    }
                    let cell = (ni as usize, nj as usize);
                    if cells.contains(&cell) && seen.insert(cell) {
                        stack.push(cell);
                    }
                }
            }
        }
        if !meets_first_column {
            off_first += 1;
        }
    }
    Ok(StripComponents {
        is_horizontal_strip,
        total_components: total,
        components_off_first_column: off_first,
    })
}

/// `λ ∖ μ` with multiset semantics: each part of `μ` cancels one equal
/// part of `λ`.
pub fn multiset_difference(lam: &Partition, mu: &Partition) -> Result<Partition> {
    let mut rest = lam.parts().to_vec();
    for &p in mu.parts() {
        match rest.iter().position(|&x| x == p) {
            Some(i) => {
                rest.remove(i);
            }
            None => {
                return Err(Error::Multiplicity(format!("{mu} is not a sub-multiset of {lam}")));
            }
        }
    }
    Ok(Partition(rest))
}

/// All `ν ⊇ inner` with `ν/inner` a horizontal strip of `size` boxes and
/// `ν_1 ≤ max_first`.
pub fn horizontal_strips_over(inner: &Partition, size: usize, max_first: usize) -> Vec<Partition> {
    fn rec(
        inner: &Partition,
        row: usize,
        left: usize,
        max_first: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        let base = inner.part(row);
        let cap = if row == 1 { max_first } else { inner.part(row - 1) };
        if base == 0 && row > inner.len() + 1 {
            if left == 0 {
                out.push(Partition::new(cur.clone()).expect("interlacing keeps order"));
            }
            return;
        }
        if cap < base {
            return;
        }
        for add in 0..=(cap - base).min(left) {
            cur.push(base + add);
            rec(inner, row + 1, left - add, max_first, cur, out);
            cur.pop();
        }
    }
    if inner.part(1) > max_first {
        return Vec::new();
    }
    let mut out = Vec::new();
    rec(inner, 1, size, max_first, &mut Vec::new(), &mut out);
    out
}

/// All `ν ⊆ outer` with `outer/ν` a horizontal strip of `size` boxes.
pub fn horizontal_strips_under(outer: &Partition, size: usize) -> Vec<Partition> {
    fn rec(outer: &Partition, row: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if row > outer.len() {
            if left == 0 {
                out.push(Partition::new(cur.clone()).expect("interlacing keeps order"));
            }
            return;
        }
        let top = outer.part(row);
        let floor = outer.part(row + 1);
        for remove in 0..=(top - floor).min(left) {
            cur.push(top - remove);
            rec(outer, row + 1, left - remove, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(outer, 1, size, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn zero_parts_are_normalized() {
        assert_eq!(Partition::new(vec![2, 0]).unwrap(), p("2"));
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0, 1]).is_err());
        assert_eq!(p("-").to_string(), "-");
        assert_eq!(p("4,4,3,1").to_string(), "4,4,3,1");
    }

    #[test]
    fn strip_examples() {
        let c = strip_components(&p("2"), &p("3")).unwrap();
        assert_eq!((c.is_horizontal_strip, c.total_components, c.components_off_first_column), (true, 1, 1));
        let c = strip_components(&p("2,1"), &p("2,1")).unwrap();
        assert_eq!((c.is_horizontal_strip, c.total_components, c.components_off_first_column), (true, 0, 0));
        assert_eq!(c.n_prime(), None);
        // (2,1) touches (1,2) at a vertex, so the single component meets
        // the first column.
        let c = strip_components(&p("1"), &p("3,1")).unwrap();
        assert_eq!((c.is_horizontal_strip, c.total_components, c.components_off_first_column), (true, 1, 0));
        assert_eq!(c.n_prime(), Some(0));
        assert!(strip_components(&p("3"), &p("2,1")).is_err());
    }

    #[test]
    fn diagonal_touch_connects() {
        // (3,1)/(1): boxes (1,2),(1,3) and (2,1); (2,1) touches (1,2) at a vertex.
        let c = strip_components(&p("1"), &p("3,1")).unwrap();
        assert_eq!(c.total_components, 1);
        let c = strip_components(&p("2"), &p("3,1")).unwrap();
        assert_eq!(c.total_components, 2);
        assert_eq!(c.n(), 1);
        let c = strip_components(&p("-"), &p("1,1")).unwrap();
        assert!(!c.is_horizontal_strip);
    }

    #[test]
    fn multiset_examples() {
        assert_eq!(multiset_difference(&p("2,2,1"), &p("2")).unwrap(), p("2,1"));
        assert_eq!(multiset_difference(&p("2,2,1"), &p("2,2")).unwrap(), p("1"));
        assert_eq!(multiset_difference(&p("3,1"), &p("-")).unwrap(), p("3,1"));
        assert!(multiset_difference(&p("2,1"), &p("2,2")).is_err());
    }

    #[test]
    fn strips_over_and_under_agree_with_brute_force() {
        for outer in Partition::all_in_box(4, 4) {
            for inner in Partition::all_in_box(4, 4) {
                if !inner.is_contained_in(&outer) {
                    continue;
                }
                let c = strip_components(&inner, &outer).unwrap();
                let size = outer.weight() - inner.weight();
                let over = horizontal_strips_over(&inner, size, 4).contains(&outer);
                let under = horizontal_strips_under(&outer, size).contains(&inner);
                assert_eq!(over, c.is_horizontal_strip, "{inner} {outer}");
                assert_eq!(under, c.is_horizontal_strip, "{inner} {outer}");
            }
        }
    }

    #[test]
    fn dn_enumeration() {
        let d3 = StrictPartition::all_in_dn(3);
        assert_eq!(d3.len(), 8);
        assert_eq!(d3[0], StrictPartition::empty());
        assert_eq!(d3.last().unwrap().to_string(), "3,2,1");
    }
}
