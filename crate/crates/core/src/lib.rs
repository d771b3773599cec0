//! Exact three-point, genus-zero Gromov-Witten invariants on the type A
//! Grassmannian `G(k,n)`, the Lagrangian Grassmannian `LG(n,2n)` and the
//! orthogonal Grassmannian `OG(n+1,2n+2)`.
//!
//! Type A invariants are computed two ways: as a classical triple
//! intersection on the two-step flag variety `F(k-d,k+d;n)` (Schubert
//! polynomial oracle), and by counting two-step puzzles. The isotropic
//! families use quantum Pieri and Pfaffian Giambelli formulas, checked
//! against Schur `Q`/`P`-function arithmetic.

pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod expansion;
pub mod oracle;
pub mod puzzle;
pub mod qh_isotropic;
pub mod qh_typea;
pub mod verify;

pub use combinatorics::{Family, LabelString, Partition, Permutation, SignedElement, StrictPartition};
pub use error::{Error, Result};
pub use expansion::QHExpansion;
