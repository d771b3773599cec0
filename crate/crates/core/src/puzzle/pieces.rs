//! Unit-triangle form of the two-step puzzle pieces.
//!
//! The six pieces (three unit triangles, the 0/1 rhombus stretched by any
//! number of 2s, the 0/2 rhombus, and the 1/2 rhombus stretched by any
//! number of 0s) are cut along unit lattice lines. The cut edges carry
//! composite labels that never appear on the puzzle boundary:
//!
//! | label   | occurs inside                         |
//! |---------|---------------------------------------|
//! | `10`    | 0/1 rhombus                           |
//! | `20`    | 0/2 rhombus                           |
//! | `21`    | 1/2 rhombus                           |
//! | `2(10)` | 0/1 rhombus, along its run of 2s      |
//! | `(21)0` | 1/2 rhombus, along its run of 0s      |
//!
//! Each composite triangle reads `(x, y, xy)` clockwise. Gluing two of
//! them across a `10` edge gives the plain 0/1 rhombus; a `10` edge can
//! also meet a `(2, 10, 2(10))` triangle, which must be followed by another
//! one to close the `2(10)` edge, so the rhombus grows by one 2 on the top
//! and one on the bottom at a time. The 1/2 rhombus grows through `(21)0`
//! the same way.

use std::fmt;

/// Edge label. `0`–`2` are boundary labels, the rest occur only inside a
/// piece.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u8)]
pub enum Label {
    Zero = 0,
    One = 1,
    Two = 2,
    /// `10`
    OneZero = 3,
    /// `21`
    TwoOne = 4,
    /// `20`
    TwoZero = 5,
    /// `2(10)`
    TwoOneZero = 6,
    /// `(21)0`
    TwoOneThenZero = 7,
}

pub const LABEL_COUNT: usize = 8;

impl Label {
    pub const ALL: [Label; LABEL_COUNT] = [
        Label::Zero,
        Label::One,
        Label::Two,
        Label::OneZero,
        Label::TwoOne,
        Label::TwoZero,
        Label::TwoOneZero,
        Label::TwoOneThenZero,
    ];

    pub fn from_index(i: u8) -> Label {
        Label::ALL[i as usize]
    }

    pub fn is_composite(self) -> bool {
        (self as u8) > 2
    }

    /// Single-character form used in renderings.
    pub fn glyph(self) -> char {
        match self {
            Label::Zero => '0',
            Label::One => '1',
            Label::Two => '2',
            _ => '.',
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Label::Zero => "0",
            Label::One => "1",
            Label::Two => "2",
            Label::OneZero => "10",
            Label::TwoOne => "21",
            Label::TwoZero => "20",
            Label::TwoOneZero => "2(10)",
            Label::TwoOneThenZero => "(21)0",
        })
    }
}

/// Handedness of the composite triangles. Only one handedness reproduces
/// the flag-variety structure constants; the other is kept so tests can
/// show it fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Chirality {
    /// `(x, y, xy)` clockwise.
    Standard,
    /// `(y, x, xy)` clockwise.
    Mirrored,
}

/// Clockwise label triples for the allowed unit triangles.
pub fn triangle_triples(chirality: Chirality) -> Vec<[Label; 3]> {
    use Label::*;
    let mut out = vec![[Zero; 3], [One; 3], [Two; 3]];
    let composites = [
        (One, Zero, OneZero),
        (Two, Zero, TwoZero),
        (Two, One, TwoOne),
        (Two, OneZero, TwoOneZero),
        (TwoOne, Zero, TwoOneThenZero),
    ];
    for (x, y, xy) in composites {
        out.push(match chirality {
            Chirality::Standard => [x, y, xy],
            Chirality::Mirrored => [y, x, xy],
        });
    }
    out
}

/// Lookup tables for the row scan.
///
/// Up triangles are read clockwise as (left, right, bottom); down
/// triangles as (top, right, left). A piece may be rotated, so each
/// clockwise triple contributes all three cyclic shifts in both
/// orientations.
#[derive(Clone, Debug)]
pub struct TileTables {
    /// `up[left]` = allowed `(right, bottom)`.
    pub up: Vec<Vec<(u8, u8)>>,
    /// `down[top][left]` = allowed `right`.
    pub down: Vec<Vec<Vec<u8>>>,
}

impl TileTables {
    pub fn new(chirality: Chirality) -> Self {
        let mut up = vec![Vec::new(); LABEL_COUNT];
        let mut down = vec![vec![Vec::new(); LABEL_COUNT]; LABEL_COUNT];
        for t in triangle_triples(chirality) {
            for shift in 0..3 {
                let [a, b, c] = [t[shift], t[(shift + 1) % 3], t[(shift + 2) % 3]].map(|l| l as u8);
                // up: (left, right, bottom) = (a, b, c)
                if !up[a as usize].contains(&(b, c)) {
                    up[a as usize].push((b, c));
                }
                // down: (top, right, left) = (a, b, c)
                if !down[a as usize][c as usize].contains(&b) {
                    down[a as usize][c as usize].push(b);
                }
            }
        }
        TileTables { up, down }
    }

    pub fn is_up(&self, left: u8, right: u8, bottom: u8) -> bool {
        self.up[left as usize].contains(&(right, bottom))
    }

    pub fn is_down(&self, top: u8, right: u8, left: u8) -> bool {
        self.down[top as usize][left as usize].contains(&right)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_cover_rotations() {
        let t = TileTables::new(Chirality::Standard);
        // all-0 triangle in both orientations
        assert!(t.is_up(0, 0, 0));
        assert!(t.is_down(0, 0, 0));
        // (1, 0, 10) clockwise and its rotations
        assert!(t.is_up(1, 0, 3));
        assert!(t.is_up(0, 3, 1));
        assert!(t.is_down(3, 1, 0));
        // not its reflection
        assert!(!t.is_up(0, 1, 3));
    }

    #[test]
    fn composite_labels_are_internal() {
        assert!(!Label::Two.is_composite());
        assert!(Label::TwoOneZero.is_composite());
        assert_eq!(Label::TwoOneThenZero.to_string(), "(21)0");
    }
}
