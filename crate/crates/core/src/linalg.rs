//! Row-space membership over finite fields and integer lattices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::finring::{Elem, FiniteRing};

/// Reduced row echelon form over a finite field.
pub struct FieldEchelon {
    ring: FiniteRing,
    /// `(pivot column, row)` with the pivot entry equal to one.
    rows: Vec<(usize, Vec<Elem>)>,
}

impl FieldEchelon {
    /// Panics if `ring` is not a field.
    pub fn new(ring: &FiniteRing, rows: &[Vec<Elem>]) -> Self {
        assert!(ring.is_field(), "field echelon over a non-field");
        let mut e = FieldEchelon { ring: ring.clone(), rows: Vec::new() };
        for r in rows {
            e.insert(r.clone());
        }
        e
    }

    fn reduce(&self, mut v: Vec<Elem>) -> Vec<Elem> {
        let r = &self.ring;
        for (c, row) in &self.rows {
            let f = v[*c];
            if f != r.zero() {
                for (x, y) in v.iter_mut().zip(row) {
                    *x = r.sub(*x, r.mul(f, *y));
                }
            }
        }
        v
    }

    fn insert(&mut self, v: Vec<Elem>) {
        let r = self.ring.clone();
        let v = self.reduce(v);
        let Some(c) = v.iter().position(|&x| x != r.zero()) else { return };
        let inv = r.inverse(v[c]).expect("field");
        let v: Vec<Elem> = v.iter().map(|&x| r.mul(x, inv)).collect();
        for (_, row) in &mut self.rows {
            let f = row[c];
            if f != r.zero() {
                for (x, y) in row.iter_mut().zip(&v) {
                    *x = r.sub(*x, r.mul(f, *y));
                }
            }
        }
        self.rows.push((c, v));
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        self.reduce(v.to_vec()).iter().all(|&x| x == self.ring.zero())
    }
}

/// Hermite normal form of the lattice spanned by `rows` (upper triangular,
/// positive pivots, entries above each pivot reduced into `[0, pivot)`).
pub fn hermite(rows: &[Vec<BigInt>], ncols: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = rows.to_vec();
    let mut r = 0;
    for c in 0..ncols {
        loop {
            let pivot = (r..rows.len())
                .filter(|&i| !rows[i][c].is_zero())
                .min_by(|&i, &j| rows[i][c].abs().cmp(&rows[j][c].abs()));
            let Some(p) = pivot else { break };
            rows.swap(r, p);
            let mut clean = true;
            for i in r + 1..rows.len() {
                if rows[i][c].is_zero() {
                    continue;
                }
                let q = rows[i][c].div_floor(&rows[r][c]);
                let pivot_row = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                    *x -= &q * y;
                }
                if !rows[i][c].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if r < rows.len() && !rows[r][c].is_zero() {
            if rows[r][c].is_negative() {
                for x in rows[r].iter_mut() {
                    *x = -x.clone();
                }
            }
            let pivot_row = rows[r].clone();
            for row in rows.iter_mut().take(r) {
                let q = row[c].div_floor(&pivot_row[c]);
                if !q.is_zero() {
                    for (x, y) in row.iter_mut().zip(&pivot_row) {
                        *x -= &q * y;
                    }
                }
            }
            r += 1;
        }
    }
    rows.truncate(r);
    rows
}

/// Membership of `v` in the lattice whose Hermite form is `h`.
pub fn lattice_contains(h: &[Vec<BigInt>], v: &[BigInt]) -> bool {
    let mut v = v.to_vec();
    for row in h {
        let c = row.iter().position(|x| !x.is_zero()).expect("hermite rows are nonzero");
        if v[..c].iter().any(|x| !x.is_zero()) {
            return false;
        }
        if !v[c].is_multiple_of(&row[c]) {
            return false;
        }
        let q = &v[c] / &row[c];
        for (x, y) in v.iter_mut().zip(row) {
            *x -= &q * y;
        }
    }
    v.iter().all(Zero::is_zero)
}

/// Membership of `v` in the Z/n-submodule of `(Z/n)^k` spanned by `rows`.
pub fn zmod_span_contains(n: u32, rows: &[Vec<u32>], v: &[u32]) -> bool {
    let k = v.len();
    let mut lattice: Vec<Vec<BigInt>> =
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    for j in 0..k {
        let mut e = vec![BigInt::zero(); k];
        e[j] = BigInt::from(n);
        lattice.push(e);
    }
    let h = hermite(&lattice, k);
    lattice_contains(&h, &v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn hermite_of_small_lattice() {
        let h = hermite(&[ints(&[2, 4]), ints(&[3, 1])], 2);
        assert_eq!(h, vec![ints(&[1, 7]), ints(&[0, 10])]);
        assert!(lattice_contains(&h, &ints(&[5, 5])));
        assert!(!lattice_contains(&h, &ints(&[0, 5])));
    }

    #[test]
    fn zmod_span_needs_torsion_multiples() {
        // 2*(2,1) = (0,2) in (Z/4)^2
        assert!(zmod_span_contains(4, &[vec![2, 1]], &[0, 2]));
        assert!(!zmod_span_contains(4, &[vec![2, 1]], &[0, 1]));
        assert!(!zmod_span_contains(4, &[vec![2, 1]], &[1, 0]));
    }

    #[test]
    fn field_echelon_rank() {
        let f = FiniteRing::zmod(5).unwrap();
        let rows = vec![vec![Elem(1), Elem(2)], vec![Elem(2), Elem(4)]];
        let e = FieldEchelon::new(&f, &rows);
        assert_eq!(e.rank(), 1);
        assert!(e.contains(&[Elem(3), Elem(1)]));
        assert!(!e.contains(&[Elem(0), Elem(1)]));
    }
}
