//! Two-step puzzles: triangles of side `n` tiled by the piece catalog in
//! [`pieces`], with 012-strings on the north-west, north-east and south
//! sides read clockwise.
//!
//! The triangle is scanned row by row from the apex. Row `r` (0-based)
//! holds `r+1` up triangles and `r` down triangles; the only information
//! passed between rows is the labels on the `r+1` horizontal edges under
//! row `r`, so counts are memoized on that frontier.

mod filling;
pub mod pieces;

use std::collections::{BTreeMap, HashMap};

pub use filling::{boundary_from_rendering, PieceKind, PiecePlacement, PuzzleFilling};
pub use pieces::{Chirality, Label, TileTables};

use crate::combinatorics::LabelString;
use crate::error::{Error, Result};

/// The three boundary strings, each read clockwise: `nw` from the lower
/// left corner up to the apex, `ne` from the apex down to the lower right
/// corner, `s` from the lower right corner to the lower left corner.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PuzzleBoundary {
    pub nw: LabelString,
    pub ne: LabelString,
    pub s: LabelString,
}

impl PuzzleBoundary {
    pub fn new(nw: LabelString, ne: LabelString, s: LabelString) -> Result<Self> {
        if nw.content() != ne.content() || nw.content() != s.content() {
            return Err(Error::ContentMismatch(format!("{nw} / {ne} / {s}")));
        }
        Ok(PuzzleBoundary { nw, ne, s })
    }

    pub fn size(&self) -> usize {
        self.nw.len()
    }

    /// The same puzzle rotated by 120°: `(nw, ne, s) → (ne, s, nw)`.
    pub fn rotated(&self) -> Self {
        PuzzleBoundary { nw: self.ne.clone(), ne: self.s.clone(), s: self.nw.clone() }
    }
}

/// Tiles chosen for one row: up triangles as (left, right, bottom), down
/// triangles as (top, right, left).
#[derive(Clone, Debug, Default)]
struct RowTiles {
    up: Vec<[u8; 3]>,
    down: Vec<[u8; 3]>,
}

/// Puzzle counter for a fixed piece catalog.
#[derive(Clone, Debug)]
pub struct PuzzleSolver {
    tables: TileTables,
}

impl Default for PuzzleSolver {
    fn default() -> Self {
        PuzzleSolver::new(Chirality::Standard)
    }
}

impl PuzzleSolver {
    pub fn new(chirality: Chirality) -> Self {
        PuzzleSolver { tables: TileTables::new(chirality) }
    }

    pub fn tables(&self) -> &TileTables {
        &self.tables
    }

    /// Enumerates every way to fill row `top.len()` under the frontier
    /// `top`, given its left and right boundary labels.
    fn fill_row(&self, top: &[u8], left: u8, right: u8, visit: &mut dyn FnMut(&[u8], &RowTiles)) {
        let width = top.len() + 1;
        let mut bottoms = Vec::with_capacity(width);
        let mut tiles = RowTiles::default();
        self.fill_up(top, 0, left, right, &mut bottoms, &mut tiles, visit);
        debug_assert!(bottoms.is_empty());
    }

    #[allow(clippy::too_many_arguments)]
    fn fill_up(
        &self,
        top: &[u8],
        j: usize,
        left: u8,
        right: u8,
        bottoms: &mut Vec<u8>,
        tiles: &mut RowTiles,
        visit: &mut dyn FnMut(&[u8], &RowTiles),
    ) {
        let last = j == top.len();
        for &(r, b) in &self.tables.up[left as usize] {
            if last && r != right {
                continue;
            }
            bottoms.push(b);
            tiles.up.push([left, r, b]);
            if last {
                visit(bottoms, tiles);
            } else {
                let t = top[j];
                for &dr in &self.tables.down[t as usize][r as usize] {
                    tiles.down.push([t, dr, r]);
                    self.fill_up(top, j + 1, dr, right, bottoms, tiles, visit);
                    tiles.down.pop();
                }
            }
            tiles.up.pop();
            bottoms.pop();
        }
    }

    /// Number of puzzles completing rows `row..` below `frontier`.
    fn count_below(
        &self,
        nw: &[u8],
        ne: &[u8],
        south: &[u8],
        row: usize,
        frontier: &[u8],
        memo: &mut [HashMap<Vec<u8>, u128>],
    ) -> u128 {
        let n = nw.len();
        if row == n {
            return u128::from(frontier == south);
        }
        if let Some(&c) = memo[row].get(frontier) {
            return c;
        }
        let mut next: Vec<Vec<u8>> = Vec::new();
        self.fill_row(frontier, nw[n - 1 - row], ne[row], &mut |b, _| next.push(b.to_vec()));
        let total = next.iter().map(|b| self.count_below(nw, ne, south, row + 1, b, memo)).sum();
        memo[row].insert(frontier.to_vec(), total);
        total
    }

    pub fn count(&self, boundary: &PuzzleBoundary) -> u128 {
        let n = boundary.size();
        let south: Vec<u8> = boundary.s.reversed().symbols().to_vec();
        let mut memo = vec![HashMap::new(); n];
        self.count_below(boundary.nw.symbols(), boundary.ne.symbols(), &south, 0, &[], &mut memo)
    }

    /// All fillings, in a fixed depth-first order.
    pub fn fillings(&self, boundary: &PuzzleBoundary) -> Vec<PuzzleFilling> {
        let n = boundary.size();
        let nw = boundary.nw.symbols();
        let ne = boundary.ne.symbols();
        let south: Vec<u8> = boundary.s.reversed().symbols().to_vec();
        let mut memo = vec![HashMap::new(); n];
        if self.count_below(nw, ne, &south, 0, &[], &mut memo) == 0 {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut rows: Vec<RowTiles> = Vec::new();
        self.collect_rows(nw, ne, &south, &[], &mut memo, &mut rows, &mut out);
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn collect_rows(
        &self,
        nw: &[u8],
        ne: &[u8],
        south: &[u8],
        frontier: &[u8],
        memo: &mut [HashMap<Vec<u8>, u128>],
        rows: &mut Vec<RowTiles>,
        out: &mut Vec<PuzzleFilling>,
    ) {
        let n = nw.len();
        let row = rows.len();
        if row == n {
            if frontier == south {
                out.push(PuzzleFilling::from_rows(
                    rows.iter().map(|t| (t.up.clone(), t.down.clone())).collect(),
                ));
            }
            return;
        }
        let mut options: Vec<(Vec<u8>, RowTiles)> = Vec::new();
        self.fill_row(frontier, nw[n - 1 - row], ne[row], &mut |b, t| options.push((b.to_vec(), t.clone())));
        for (b, t) in options {
            if self.count_below(nw, ne, south, row + 1, &b, memo) == 0 {
                continue;
            }
            rows.push(t);
            self.collect_rows(nw, ne, south, &b, memo, rows, out);
            rows.pop();
        }
    }

    /// Counts for every south string at once, given `nw` and `ne`. Only
    /// south strings with a nonzero count appear.
    pub fn count_all_south(&self, nw: &LabelString, ne: &LabelString) -> BTreeMap<LabelString, u128> {
        let n = nw.len();
        let (nw, ne) = (nw.symbols(), ne.symbols());
        let mut layer: HashMap<Vec<u8>, u128> = HashMap::from([(Vec::new(), 1)]);
        for row in 0..n {
            let mut next: HashMap<Vec<u8>, u128> = HashMap::new();
            for (frontier, &c) in &layer {
                self.fill_row(frontier, nw[n - 1 - row], ne[row], &mut |b, _| {
                    *next.entry(b.to_vec()).or_insert(0) += c;
                });
            }
            layer = next;
        }
        let mut out = BTreeMap::new();
        for (bottom, c) in layer {
            if bottom.iter().all(|&l| l <= 2) {
                let s = LabelString::new(bottom.into_iter().rev().collect::<Vec<u8>>()).expect("pure labels");
                out.insert(s, c);
            }
        }
        out
    }
}

/// Counts puzzles with the given boundary; when `collect` is set the
/// explicit fillings are returned too.
pub fn count_puzzles(boundary: &PuzzleBoundary, collect: bool) -> Result<(u128, Option<Vec<PuzzleFilling>>)> {
    let solver = PuzzleSolver::default();
    if collect {
        let fillings = solver.fillings(boundary);
        Ok((fillings.len() as u128, Some(fillings)))
    } else {
        Ok((solver.count(boundary), None))
    }
}

/// Convenience wrapper over [`count_puzzles`] taking the strings as text.
pub fn count_puzzles_str(nw: &str, ne: &str, s: &str) -> Result<u128> {
    let b = PuzzleBoundary::new(nw.parse()?, ne.parse()?, s.parse()?)?;
    Ok(count_puzzles(&b, false)?.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn boundary(nw: &str, ne: &str, s: &str) -> PuzzleBoundary {
        PuzzleBoundary::new(nw.parse().unwrap(), ne.parse().unwrap(), s.parse().unwrap()).unwrap()
    }

    #[test]
    fn small_examples() {
        assert_eq!(count_puzzles_str("0", "0", "0").unwrap(), 1);
        assert_eq!(count_puzzles_str("01", "01", "10").unwrap(), 1);
        assert_eq!(count_puzzles_str("12012", "10212", "10221").unwrap(), 1);
    }

    #[test]
    fn content_mismatch_is_an_error() {
        assert!(matches!(
            PuzzleBoundary::new("01".parse().unwrap(), "01".parse().unwrap(), "11".parse().unwrap()),
            Err(Error::ContentMismatch(_))
        ));
    }

    #[test]
    fn collected_fillings_match_count() {
        let b = boundary("0112", "1012", "1102");
        let solver = PuzzleSolver::default();
        let fillings = solver.fillings(&b);
        assert_eq!(fillings.len() as u128, solver.count(&b));
        for f in &fillings {
            assert_eq!(f.boundary(), b);
        }
    }

    #[test]
    fn all_south_agrees_with_single_counts() {
        let solver = PuzzleSolver::default();
        let nw: LabelString = "1021".parse().unwrap();
        let ne: LabelString = "0121".parse().unwrap();
        let all = solver.count_all_south(&nw, &ne);
        for s in LabelString::all_with_content(nw.content()) {
            let c = solver.count(&PuzzleBoundary::new(nw.clone(), ne.clone(), s.clone()).unwrap());
            assert_eq!(all.get(&s).copied().unwrap_or(0), c, "{s}");
        }
    }
}
