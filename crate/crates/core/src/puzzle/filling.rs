use std::fmt;

use crate::combinatorics::LabelString;
use crate::error::{Error, Result};
use crate::puzzle::pieces::Label;
use crate::puzzle::PuzzleBoundary;

/// A complete tiling, stored per unit triangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PuzzleFilling {
    /// `up[r][j]` = (left, right, bottom) of the `j`-th up triangle in row `r`.
    up: Vec<Vec<[u8; 3]>>,
    /// `down[r][j]` = (top, right, left) of the down triangle between up
    /// triangles `j` and `j+1` of row `r`.
    down: Vec<Vec<[u8; 3]>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PieceKind {
    Triangle0,
    Triangle1,
    Triangle2,
    Rhombus01,
    Rhombus02,
    Rhombus12,
}

impl fmt::Display for PieceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PieceKind::Triangle0 => "tri0",
            PieceKind::Triangle1 => "tri1",
            PieceKind::Triangle2 => "tri2",
            PieceKind::Rhombus01 => "rh01",
            PieceKind::Rhombus02 => "rh02",
            PieceKind::Rhombus12 => "rh12",
        })
    }
}

/// One piece of a filling. For triangles `rotation` is 0 (pointing up) or
/// 1 (pointing down); for rhombi it is the direction of the cut edges
/// inside the piece: 0 horizontal, 1 `/`, 2 `\`. `column` counts unit
/// triangles from the left of the row (even: up, odd: down) and names the
/// piece's first triangle in reading order. `extension` is the number of
/// extra 2s (0/1 rhombus) or 0s (1/2 rhombus) on each long side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PiecePlacement {
    pub kind: PieceKind,
    pub rotation: u8,
    pub row: usize,
    pub column: usize,
    pub extension: usize,
}

impl fmt::Display for PiecePlacement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} {} {}", self.kind, self.rotation, self.row, self.column, self.extension)
    }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut root = x;
    while parent[root] != root {
        root = parent[root];
    }
    let mut cur = x;
    while parent[cur] != root {
        let next = parent[cur];
        parent[cur] = root;
        cur = next;
    }
    root
}

/// Up and down tiles of one row.
pub(crate) type TileRow = (Vec<[u8; 3]>, Vec<[u8; 3]>);

impl PuzzleFilling {
    pub(crate) fn from_rows(rows: Vec<TileRow>) -> Self {
        let (up, down) = rows.into_iter().unzip();
        PuzzleFilling { up, down }
    }

    pub fn size(&self) -> usize {
        self.up.len()
    }

    pub fn boundary(&self) -> PuzzleBoundary {
        let n = self.size();
        let nw: Vec<u8> = (0..n).rev().map(|r| self.up[r][0][0]).collect();
        let ne: Vec<u8> = (0..n).map(|r| self.up[r][r][1]).collect();
        let s: Vec<u8> = (0..n).rev().map(|j| self.up[n - 1][j][2]).collect();
        PuzzleBoundary {
            nw: LabelString::new(nw).expect("boundary labels are pure"),
            ne: LabelString::new(ne).expect("boundary labels are pure"),
            s: LabelString::new(s).expect("boundary labels are pure"),
        }
    }

    /// Groups unit triangles joined across composite edges into pieces.
    pub fn pieces(&self) -> Vec<PiecePlacement> {
        let n = self.size();
        // unit triangle (r, c): c even = up triangle c/2, odd = down triangle c/2
        let index = |r: usize, c: usize| r * r + c;
        let total = n * n;
        let mut parent: Vec<usize> = (0..total).collect();
        let mut joined_dir = vec![None; total];
        let union = |parent: &mut Vec<usize>, a: usize, b: usize| {
            let (ra, rb) = (find(parent, a), find(parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        };
        for r in 0..n {
            for j in 0..r {
                let d = self.down[r][j];
                if Label::from_index(d[0]).is_composite() {
                    union(&mut parent, index(r, 2 * j + 1), index(r - 1, 2 * j));
                    joined_dir[index(r, 2 * j + 1)] = Some(0u8);
                }
                if Label::from_index(d[2]).is_composite() {
                    union(&mut parent, index(r, 2 * j + 1), index(r, 2 * j));
                    joined_dir[index(r, 2 * j + 1)] = Some(2);
                }
                if Label::from_index(d[1]).is_composite() {
                    union(&mut parent, index(r, 2 * j + 1), index(r, 2 * j + 2));
                    joined_dir[index(r, 2 * j + 1)] = Some(1);
                }
            }
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<(usize, usize)>> = Default::default();
        for r in 0..n {
            for c in 0..=2 * r {
                groups.entry(find(&mut parent, index(r, c))).or_default().push((r, c));
            }
        }
        let mut out: Vec<PiecePlacement> = groups
            .into_values()
            .map(|cells| {
                let (row, column) = cells[0];
                let labels: Vec<u8> = cells
                    .iter()
                    .flat_map(|&(r, c)| if c % 2 == 0 { self.up[r][c / 2] } else { self.down[r][c / 2] })
                    .collect();
                let has = |l: Label| labels.contains(&(l as u8));
                if cells.len() == 1 {
                    let kind = match labels[0] {
                        0 => PieceKind::Triangle0,
                        1 => PieceKind::Triangle1,
                        _ => PieceKind::Triangle2,
                    };
                    return PiecePlacement { kind, rotation: (column % 2) as u8, row, column, extension: 0 };
                }
                let kind = if has(Label::OneZero) {
                    PieceKind::Rhombus01
                } else if has(Label::TwoZero) {
                    PieceKind::Rhombus02
                } else {
                    PieceKind::Rhombus12
                };
                let rotation = cells
                    .iter()
                    .find_map(|&(r, c)| joined_dir[index(r, c)])
                    .expect("a rhombus contains a down triangle joined to a neighbour");
                PiecePlacement { kind, rotation, row, column, extension: (cells.len() - 2) / 2 }
            })
            .collect();
        out.sort_by_key(|p| (p.row, p.column));
        out
    }

    /// Machine-readable dump: one piece per line, `kind rotation row column
    /// extension`.
    pub fn dump(&self) -> String {
        self.pieces().iter().map(|p| format!("{p}\n")).collect()
    }

    /// Monospace drawing of the labelled triangle. `*` marks lattice
    /// vertices; edge labels sit at edge midpoints, with `.` for the cut
    /// edges inside a piece.
    pub fn render(&self) -> String {
        let n = self.size();
        let width = 4 * n + 1;
        let glyph = |l: u8| Label::from_index(l).glyph();
        let mut lines: Vec<Vec<char>> = vec![vec![' '; width]; 2 * n + 1];
        lines[0][2 * n] = '*';
        for r in 0..n {
            let x0 = 2 * (n - 1 - r);
            for j in 0..=r {
                let [l, rt, b] = self.up[r][j];
                lines[1 + 2 * r][x0 + 4 * j + 1] = glyph(l);
                lines[1 + 2 * r][x0 + 4 * j + 3] = glyph(rt);
                lines[2 + 2 * r][x0 + 4 * j + 2] = glyph(b);
            }
            for j in 0..=r + 1 {
                lines[2 + 2 * r][x0 + 4 * j] = '*';
            }
        }
        lines
            .into_iter()
            .map(|l| {
                let s: String = l.into_iter().collect();
                format!("{}\n", s.trim_end())
            })
            .collect()
    }
}

impl fmt::Display for PuzzleFilling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Reads the boundary strings back off a [`PuzzleFilling::render`] drawing.
pub fn boundary_from_rendering(text: &str) -> Result<PuzzleBoundary> {
    let lines: Vec<Vec<char>> = text.lines().map(|l| l.chars().collect()).collect();
    if lines.len() < 3 || lines.len().is_multiple_of(2) {
        return Err(Error::InvalidString("not a puzzle rendering".into()));
    }
    let n = (lines.len() - 1) / 2;
    let at = |line: usize, x: usize| -> Result<u8> {
        match lines[line].get(x) {
            Some(c @ '0'..='2') => Ok(*c as u8 - b'0'),
            _ => Err(Error::InvalidString(format!("no boundary label at line {line}, column {x}"))),
        }
    };
    let mut nw = Vec::with_capacity(n);
    let mut ne = Vec::with_capacity(n);
    let mut s = Vec::with_capacity(n);
    for r in (0..n).rev() {
        nw.push(at(1 + 2 * r, 2 * (n - 1 - r) + 1)?);
    }
    for r in 0..n {
        ne.push(at(1 + 2 * r, 2 * (n - 1 - r) + 4 * r + 3)?);
    }
    for j in (0..n).rev() {
        s.push(at(2 * n, 4 * j + 2)?);
    }
    PuzzleBoundary::new(LabelString::new(nw)?, LabelString::new(ne)?, LabelString::new(s)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::puzzle::PuzzleSolver;

    #[test]
    fn single_triangle_rendering() {
        let b = PuzzleBoundary::new("0".parse().unwrap(), "0".parse().unwrap(), "0".parse().unwrap()).unwrap();
        let f = PuzzleSolver::default().fillings(&b).remove(0);
        assert_eq!(f.render(), "  *\n 0 0\n* 0 *\n");
        assert_eq!(f.dump(), "tri0 0 0 0 0\n");
    }

    #[test]
    fn rendering_round_trips_boundary() {
        let b = PuzzleBoundary::new(
            "12012".parse().unwrap(),
            "10212".parse().unwrap(),
            "10221".parse().unwrap(),
        )
        .unwrap();
        for f in PuzzleSolver::default().fillings(&b) {
            assert_eq!(boundary_from_rendering(&f.render()).unwrap(), b);
        }
    }
}
