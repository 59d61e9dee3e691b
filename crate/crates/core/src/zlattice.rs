//! Sublattices of ℤ³ in Hermite normal form, used to identify commutator
//! subgroups that live inside the free abelian group M² = ⟨x², y², z²⟩.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// A sublattice of ℤ³ held as a row-reduced basis (row-style HNF: lower rows
/// have pivots further right, pivots positive, entries above a pivot reduced).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Lattice3 {
    rows: Vec<[BigInt; 3]>,
}

fn is_zero_row(r: &[BigInt; 3]) -> bool {
    r.iter().all(|x| x.is_zero())
}

impl Lattice3 {
    pub fn empty() -> Lattice3 {
        Lattice3 { rows: Vec::new() }
    }

    pub fn from_rows(rows: impl IntoIterator<Item = [BigInt; 3]>) -> Lattice3 {
        let mut l = Lattice3::empty();
        for r in rows {
            l.add_row(r);
        }
        l
    }

    pub fn from_i64_rows(rows: &[[i64; 3]]) -> Lattice3 {
        Lattice3::from_rows(rows.iter().map(|r| r.map(BigInt::from)))
    }

    /// The full lattice ℤ³.
    pub fn full() -> Lattice3 {
        Lattice3::from_i64_rows(&[[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    }

    pub fn rows(&self) -> &[[BigInt; 3]] {
        &self.rows
    }

    pub fn is_full(&self) -> bool {
        *self == Lattice3::full()
    }

    /// Inserts a generator and restores the canonical form.
    pub fn add_row(&mut self, row: [BigInt; 3]) {
        if is_zero_row(&row) {
            return;
        }
        self.rows.push(row);
        self.reduce();
    }

    pub fn contains(&self, row: &[BigInt; 3]) -> bool {
        let mut v = row.clone();
        for r in &self.rows {
            let p = pivot(r).unwrap();
            if !v[p].is_zero() {
                let q = &v[p] / &r[p];
                if (&v[p] % &r[p]).is_zero() {
                    for c in 0..3 {
                        v[c] = &v[c] - &q * &r[c];
                    }
                }
            }
        }
        is_zero_row(&v)
    }

    /// Euclidean row reduction to the canonical form. Cubic in the (tiny)
    /// number of rows; only called on handfuls of generators.
    fn reduce(&mut self) {
        let mut rows = std::mem::take(&mut self.rows);
        let mut out: Vec<[BigInt; 3]> = Vec::new();
        for col in 0..3 {
            loop {
                // gather rows whose leading nonzero entry is in this column
                rows.retain(|r| !is_zero_row(r));
                let mut idxs: Vec<usize> = (0..rows.len())
                    .filter(|&i| pivot(&rows[i]) == Some(col))
                    .collect();
                if idxs.len() <= 1 {
                    break;
                }
                // cancel the larger entry against the smaller
                idxs.sort_by(|&a, &b| rows[a][col].abs().cmp(&rows[b][col].abs()));
                let (small, big) = (idxs[0], idxs[1]);
                let q = &rows[big][col] / &rows[small][col];
                for c in 0..3 {
                    rows[big][c] = &rows[big][c] - &q * &rows[small][c];
                }
            }
            rows.retain(|r| !is_zero_row(r));
            if let Some(i) = (0..rows.len()).find(|&i| pivot(&rows[i]) == Some(col)) {
                let mut r = rows.remove(i);
                if r[col].is_negative() {
                    for c in r.iter_mut() {
                        *c = -std::mem::take(c);
                    }
                }
                out.push(r);
            }
        }
        // reduce entries above each pivot into [0, pivot)
        for i in (0..out.len()).rev() {
            let p = pivot(&out[i]).unwrap();
            for j in 0..i {
                let q = num_integer::Integer::div_floor(&out[j][p], &out[i][p]);
                if !q.is_zero() {
                    for c in 0..3 {
                        out[j][c] = &out[j][c] - &q * &out[i][c];
                    }
                }
            }
        }
        self.rows = out;
    }
}

fn pivot(r: &[BigInt; 3]) -> Option<usize> {
    r.iter().position(|x| !x.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_forms() {
        let a = Lattice3::from_i64_rows(&[[2, 0, 0], [0, 2, 0], [0, 0, 2], [1, 1, 0]]);
        let b = Lattice3::from_i64_rows(&[[1, 1, 0], [0, 2, 0], [0, 0, 2]]);
        assert_eq!(a, b);
        assert!(a.contains(&[3, 1, 0].map(BigInt::from)));
        assert!(!a.contains(&[1, 0, 0].map(BigInt::from)));
    }

    #[test]
    fn full_lattice() {
        let mut l = Lattice3::from_i64_rows(&[[2, 0, 0], [0, 1, 0]]);
        assert!(!l.is_full());
        l.add_row([1, 0, 1].map(BigInt::from));
        l.add_row([0, 0, 1].map(BigInt::from));
        assert!(l.is_full());
    }

    #[test]
    fn even_sum_lattice() {
        // x²z², x²y², y²z² generate the even-coordinate-sum sublattice
        let l = Lattice3::from_i64_rows(&[[1, 0, 1], [1, 1, 0], [0, 1, 1]]);
        assert!(l.contains(&[2, 0, 0].map(BigInt::from)));
        assert!(!l.contains(&[1, 0, 0].map(BigInt::from)));
        assert!(!l.is_full());
        let plus_doubles = Lattice3::from_i64_rows(&[
            [1, 0, 1],
            [1, 1, 0],
            [0, 1, 1],
            [2, 0, 0],
            [0, 2, 0],
            [0, 0, 2],
        ]);
        assert_eq!(l, plus_doubles);
    }

    #[test]
    fn ordering_of_insertion_is_immaterial() {
        let a = Lattice3::from_i64_rows(&[[3, 1, 2], [1, 4, 0], [0, 0, 5]]);
        let b = Lattice3::from_i64_rows(&[[0, 0, 5], [1, 4, 0], [3, 1, 2]]);
        assert_eq!(a, b);
    }
}
