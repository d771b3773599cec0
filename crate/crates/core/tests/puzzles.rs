use qschubert::combinatorics::{grassmannian_permutation, jd_string, label_string};
use qschubert::oracle::SchubertCalculus;
use qschubert::puzzle::{boundary_from_rendering, Chirality, PuzzleBoundary, PuzzleSolver};
use qschubert::{LabelString, Partition};

fn boundaries(content: [usize; 3]) -> Vec<LabelString> {
    LabelString::all_with_content(content)
}

fn contents(n: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 0..=n {
        for b in a..=n {
            out.push([a, b - a, n - b]);
        }
    }
    out
}

/// Puzzle counts against the Schubert polynomial oracle for every triple
/// of strings with the given content.
fn mismatches(solver: &PuzzleSolver, content: [usize; 3]) -> usize {
    let n: usize = content.iter().sum();
    let (a, b) = (content[0], content[0] + content[1]);
    let calc = SchubertCalculus::new(n);
    let strings = boundaries(content);
    let mut bad = 0;
    for nw in &strings {
        for ne in &strings {
            let counts = solver.count_all_south(nw, ne);
            for s in &strings {
                let c = counts.get(s).copied().unwrap_or(0);
                let (u, v, w) = (nw.to_permutation(), ne.to_permutation(), s.to_permutation());
                let expected = calc.triple_integral_twostep(a, b, &u, &v, &w).unwrap();
                if c != u128::from(expected) {
                    bad += 1;
                }
            }
        }
    }
    bad
}

#[test]
fn standard_pieces_match_oracle_through_n4() {
    let solver = PuzzleSolver::new(Chirality::Standard);
    for n in 1..=4 {
        for content in contents(n) {
            assert_eq!(mismatches(&solver, content), 0, "content {content:?}");
        }
    }
}

#[test]
fn mirrored_pieces_disagree_with_oracle() {
    let solver = PuzzleSolver::new(Chirality::Mirrored);
    let bad: usize = contents(4).into_iter().map(|c| mismatches(&solver, c)).sum();
    assert!(bad > 0);
}

#[test]
fn counts_are_rotation_invariant() {
    let solver = PuzzleSolver::default();
    for content in contents(4) {
        let strings = boundaries(content);
        for nw in &strings {
            for ne in &strings {
                for s in &strings {
                    let b = PuzzleBoundary::new(nw.clone(), ne.clone(), s.clone()).unwrap();
                    let c = solver.count(&b);
                    assert_eq!(c, solver.count(&b.rotated()), "{nw} {ne} {s}");
                }
            }
        }
    }
}

#[test]
fn fillings_round_trip_through_rendering() {
    let solver = PuzzleSolver::default();
    let b = PuzzleBoundary::new("12012".parse().unwrap(), "10212".parse().unwrap(), "10221".parse().unwrap()).unwrap();
    let fillings = solver.fillings(&b);
    assert_eq!(fillings.len(), 1);
    let f = &fillings[0];
    assert_eq!(f.boundary(), b);
    assert_eq!(boundary_from_rendering(&f.render()).unwrap(), b);
}

#[test]
fn jd_strings_label_grassmannian_permutations() {
    for n in 1..=7 {
        for k in 0..=n {
            for d in 0..=k.min(n - k) {
                for lam in Partition::all_in_box(k, n - k) {
                    let w = grassmannian_permutation(&lam, k, n, d).unwrap();
                    let j = jd_string(&lam, k, n, d).unwrap();
                    assert_eq!(label_string(&w, k - d, k + d).unwrap(), j);
                    assert_eq!(j.to_permutation(), w);
                }
            }
        }
    }
}
