//! Exact integer lattices: Hermite normal form for membership, Smith normal
//! form for the structure of the quotient.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Row-echelon basis of the lattice spanned by a set of integer rows.
#[derive(Clone, Debug)]
pub struct Hermite {
    ncols: usize,
    /// `(pivot column, row)`, pivot positive, entries left of it zero.
    rows: Vec<(usize, Vec<BigInt>)>,
}

fn to_big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn sub_multiple(target: &mut [BigInt], q: &BigInt, row: &[BigInt]) {
    for (t, r) in target.iter_mut().zip(row) {
        if !r.is_zero() {
            *t -= q * r;
        }
    }
}

impl Hermite {
    pub fn new(ncols: usize, generators: &[Vec<i64>]) -> Self {
        let mut pending: Vec<Vec<BigInt>> = generators
            .iter()
            .filter(|r| r.iter().any(|&x| x != 0))
            .map(|r| {
                assert_eq!(r.len(), ncols, "row length");
                to_big(r)
            })
            .collect();
        let mut rows = Vec::new();
        for col in 0..ncols {
            loop {
                let live: Vec<usize> = (0..pending.len()).filter(|&i| !pending[i][col].is_zero()).collect();
                if live.is_empty() {
                    break;
                }
                let pivot = *live
                    .iter()
                    .min_by(|&&i, &&j| pending[i][col].abs().cmp(&pending[j][col].abs()))
                    .unwrap();
                if live.len() == 1 {
                    let mut row = pending.swap_remove(pivot);
                    if row[col].is_negative() {
                        row.iter_mut().for_each(|x| *x = -&*x);
                    }
                    rows.push((col, row));
                    break;
                }
                let prow = pending[pivot].clone();
                for &i in &live {
                    if i != pivot {
                        let q = pending[i][col].div_floor(&prow[col]);
                        sub_multiple(&mut pending[i], &q, &prow);
                    }
                }
            }
            pending.retain(|r| r.iter().any(|x| !x.is_zero()));
        }
        Hermite { ncols, rows }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        assert_eq!(v.len(), self.ncols, "vector length");
        let mut v = to_big(v);
        for (col, row) in &self.rows {
            if v[*col].is_zero() {
                continue;
            }
            let (q, r) = v[*col].div_rem(&row[*col]);
            if !r.is_zero() {
                return false;
            }
            sub_multiple(&mut v, &q, row);
        }
        v.iter().all(|x| x.is_zero())
    }

    pub fn basis(&self) -> Vec<Vec<BigInt>> {
        self.rows.iter().map(|(_, r)| r.clone()).collect()
    }
}

/// Invariant factors `d_1 | d_2 | ...` of an integer matrix (nonzero ones
/// only). The cokernel of the row lattice in `Z^n` is
/// `Z/d_1 + ... + Z/d_r + Z^(n - r)`.
pub fn smith_invariants(matrix: &[Vec<BigInt>]) -> Vec<BigInt> {
    let mut a: Vec<Vec<BigInt>> = matrix.to_vec();
    let nrows = a.len();
    let ncols = a.first().map_or(0, |r| r.len());
    let mut out = Vec::new();
    let mut t = 0;
    while t < nrows.min(ncols) {
        // smallest nonzero entry of the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..nrows {
            for j in t..ncols {
                if !a[i][j].is_zero() && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        let p = a[t][t].clone();
        let mut clean = true;
        for i in t + 1..nrows {
            if !a[i][t].is_zero() {
                let q = a[i][t].div_floor(&p);
                let prow = a[t].clone();
                sub_multiple(&mut a[i], &q, &prow);
                clean &= a[i][t].is_zero();
            }
        }
        for j in t + 1..ncols {
            if !a[t][j].is_zero() {
                let q = a[t][j].div_floor(&p);
                for row in a.iter_mut() {
                    let pt = row[t].clone();
                    row[j] -= &q * pt;
                }
                clean &= a[t][j].is_zero();
            }
        }
        if !clean {
            continue;
        }
        // pivot must divide the rest of the block
        let bad = (t + 1..nrows).find(|&i| (t + 1..ncols).any(|j| !(&a[i][j] % &p).is_zero()));
        if let Some(i) = bad {
            let row = a[i].clone();
            for (x, y) in a[t].iter_mut().zip(row) {
                *x += y;
            }
            continue;
        }
        out.push(p.abs());
        t += 1;
    }
    out
}

/// Order of a finite cokernel, or `None` when it has a free part.
pub fn cokernel_order(matrix: &[Vec<BigInt>], ncols: usize) -> Option<BigInt> {
    let inv = smith_invariants(matrix);
    if inv.len() < ncols {
        return None;
    }
    Some(inv.iter().fold(BigInt::one(), |acc, d| acc * d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| to_big(r)).collect()
    }

    #[test]
    fn hermite_membership() {
        let h = Hermite::new(2, &[vec![2, 4], vec![0, 3]]);
        assert!(h.contains(&[2, 7]));
        assert!(h.contains(&[0, 0]));
        assert!(!h.contains(&[1, 0]));
        assert!(!h.contains(&[0, 1]));
        assert!(h.contains(&[4, 2]));
        assert_eq!(h.rank(), 2);
    }

    #[test]
    fn hermite_rank_deficient() {
        let h = Hermite::new(3, &[vec![1, 2, 3], vec![2, 4, 6], vec![0, 0, 0]]);
        assert_eq!(h.rank(), 1);
        assert!(h.contains(&[-3, -6, -9]));
        assert!(!h.contains(&[1, 2, 4]));
    }

    /// Full-rank 3x3 lattice: `v` is a member iff `v * adj(M)` is divisible by
    /// `det(M)` (Cramer's rule), checked against the Hermite route.
    #[test]
    fn hermite_matches_cramer() {
        let m = [[3i64, 1, 0], [0, 2, 4], [6, 0, -2]];
        let cof = |r: usize, c: usize| {
            let rows: Vec<usize> = (0..3).filter(|&i| i != r).collect();
            let cols: Vec<usize> = (0..3).filter(|&j| j != c).collect();
            let minor = m[rows[0]][cols[0]] * m[rows[1]][cols[1]] - m[rows[0]][cols[1]] * m[rows[1]][cols[0]];
            if (r + c).is_multiple_of(2) { minor } else { -minor }
        };
        let det: i64 = (0..3).map(|c| m[0][c] * cof(0, c)).sum();
        assert_eq!(det.abs(), 12);
        // c = v M^-1 = v adj(M) / det, adj(M)[i][j] = cof(j, i)
        let member = |v: &[i64]| (0..3).all(|j| (0..3).map(|i| v[i] * cof(j, i)).sum::<i64>() % det == 0);
        let h = Hermite::new(3, &m.iter().map(|r| r.to_vec()).collect::<Vec<_>>());
        let mut hits = 0;
        for x in -6..=6 {
            for y in -6..=6 {
                for z in -6..=6 {
                    let v = [x, y, z];
                    assert_eq!(h.contains(&v), member(&v), "{v:?}");
                    hits += member(&v) as usize;
                }
            }
        }
        assert!(hits > 1);
    }

    #[test]
    fn smith_examples() {
        assert_eq!(smith_invariants(&big(&[&[2, 4], &[6, 8]])), vec![BigInt::from(2), BigInt::from(4)]);
        assert_eq!(smith_invariants(&big(&[&[2, 0], &[0, 3]])), vec![BigInt::from(1), BigInt::from(6)]);
        assert_eq!(cokernel_order(&big(&[&[1, 0], &[0, 2]]), 2), Some(BigInt::from(2)));
        assert_eq!(cokernel_order(&big(&[&[1, 0]]), 2), None);
        assert!(smith_invariants(&big(&[&[0, 0]])).is_empty());
    }
}
