use crate::combinatorics::Partition;

/// `c^ν_{λμ}`: the number of semistandard fillings of `ν/λ` with content
/// `μ` whose reverse reading word is a lattice word.
pub fn lr_coefficient(lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if !lam.is_contained_in(nu) || lam.weight() + mu.weight() != nu.weight() {
        return 0;
    }
    // cells in reading order: rows top to bottom, each right to left
    let cells: Vec<(usize, usize)> =
        (1..=nu.len()).flat_map(|i| (lam.part(i) + 1..=nu.part(i)).rev().map(move |j| (i, j))).collect();
    let mut filling = vec![vec![0usize; nu.part(1) + 2]; nu.len() + 2];
    let mut used = vec![0usize; mu.len() + 2];
    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        lam: &Partition,
        mu: &Partition,
        filling: &mut Vec<Vec<usize>>,
        used: &mut Vec<usize>,
    ) -> u64 {
        let Some(&(i, j)) = cells.get(idx) else {
            return 1;
        };
        let right = filling[i][j + 1];
        let above = if i > 1 && j > lam.part(i - 1) { filling[i - 1][j] } else { 0 };
        let mut total = 0;
        for v in (above + 1)..=mu.len() {
            if right != 0 && v > right {
                break;
            }
            if used[v] == mu.part(v) || (v > 1 && used[v] == used[v - 1]) {
                continue;
            }
            used[v] += 1;
            filling[i][j] = v;
            total += rec(idx + 1, cells, lam, mu, filling, used);
            filling[i][j] = 0;
            used[v] -= 1;
        }
        total
    }
    rec(0, &cells, lam, mu, &mut filling, &mut used)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn known_coefficients() {
        assert_eq!(lr_coefficient(&p("1"), &p("1"), &p("2")), 1);
        assert_eq!(lr_coefficient(&p("1"), &p("1"), &p("1,1")), 1);
        assert_eq!(lr_coefficient(&p("2,1"), &p("2,1"), &p("3,2,1")), 2);
        assert_eq!(lr_coefficient(&p("2,1"), &p("2,1"), &p("4,2")), 1);
        assert_eq!(lr_coefficient(&p("2"), &p("2"), &p("2,1,1")), 0);
        assert_eq!(lr_coefficient(&p("-"), &p("3,1"), &p("3,1")), 1);
    }
}
