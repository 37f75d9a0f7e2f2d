//! Exact dense linear algebra over `Q`.
//!
//! Forward elimination is fraction-free (Bareiss) on integer rows; kernels are
//! finished by rational back-substitution.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::monomial::Monomial;
use crate::Rational;

/// Dense rational matrix whose rows and columns are labelled by monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    pub row_labels: Vec<Monomial>,
    pub col_labels: Vec<Monomial>,
    pub entries: Vec<Vec<Rational>>,
}

impl RationalMatrix {
    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.col_labels.len()
    }

    pub fn rank(&self) -> usize {
        rank(&self.entries, self.cols())
    }

    pub fn transpose(&self) -> RationalMatrix {
        let entries = (0..self.cols())
            .map(|c| self.entries.iter().map(|row| row[c].clone()).collect())
            .collect();
        RationalMatrix {
            row_labels: self.col_labels.clone(),
            col_labels: self.row_labels.clone(),
            entries,
        }
    }

    /// `M v` for a coordinate vector indexed like the columns.
    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        self.entries
            .iter()
            .map(|row| row.iter().zip(v).fold(Rational::zero(), |acc, (a, b)| acc + a * b))
            .collect()
    }

    /// Tab-separated dump: column labels on the first line, row label first on each line.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for c in &self.col_labels {
            out.push('\t');
            out.push_str(&c.to_string());
        }
        out.push('\n');
        for (label, row) in self.row_labels.iter().zip(&self.entries) {
            out.push_str(&label.to_string());
            for a in row {
                out.push('\t');
                out.push_str(&format!("{}/{}", a.numer(), a.denom()));
            }
            out.push('\n');
        }
        out
    }
}

/// Clears denominators row by row.
pub fn integer_rows(rows: &[Vec<Rational>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, a| acc.lcm(a.denom()));
            row.iter().map(|a| a.numer() * (&l / a.denom())).collect()
        })
        .collect()
}

/// Row echelon form produced by [`bareiss`].
#[derive(Clone, Debug)]
pub struct Echelon {
    pub rows: Vec<Vec<BigInt>>,
    /// Pivot column of `rows[i]`, in elimination order.
    pub pivots: Vec<usize>,
}

/// Fraction-free forward elimination, choosing pivot columns in the sequence
/// `col_seq`. Zero rows are dropped from the result.
pub fn bareiss(mut a: Vec<Vec<BigInt>>, col_seq: &[usize]) -> Echelon {
    let m = a.len();
    let mut prev = BigInt::one();
    let mut r = 0;
    let mut pivots = Vec::new();
    for &c in col_seq {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (head, tail) = a.split_at_mut(r + 1);
        let piv_row = &head[r];
        let piv = &piv_row[c];
        for row in tail.iter_mut() {
            let f = row[c].clone();
            if f.is_zero() {
                if !prev.is_one() {
                    for x in row.iter_mut() {
                        if !x.is_zero() {
                            *x = &*x * piv / &prev;
                        }
                    }
                } else {
                    for x in row.iter_mut() {
                        if !x.is_zero() {
                            *x *= piv;
                        }
                    }
                }
                continue;
            }
            for (x, y) in row.iter_mut().zip(piv_row) {
                let v = &*x * piv - &f * y;
                *x = if prev.is_one() { v } else { v / &prev };
            }
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    Echelon { rows: a, pivots }
}

pub fn rank(rows: &[Vec<Rational>], ncols: usize) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let seq: Vec<usize> = (0..ncols).collect();
    bareiss(integer_rows(rows), &seq).pivots.len()
}

/// Basis of the right kernel `{v : M v = 0}` of an `m x ncols` matrix.
///
/// Pivots are taken in the column sequence `col_seq`; each basis vector has a
/// `1` in one free column and `0` in the other free columns.
pub fn kernel(rows: &[Vec<Rational>], ncols: usize, col_seq: &[usize]) -> Vec<Vec<Rational>> {
    let ech = if rows.is_empty() {
        Echelon {
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    } else {
        bareiss(integer_rows(rows), col_seq)
    };
    let mut is_pivot = vec![false; ncols];
    for &p in &ech.pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|&j| !is_pivot[j]) {
        let mut v = vec![Rational::zero(); ncols];
        v[free] = Rational::one();
        for (row, &p) in ech.rows.iter().zip(&ech.pivots).rev() {
            let mut s = Rational::zero();
            for (j, a) in row.iter().enumerate() {
                if j != p && !a.is_zero() && !v[j].is_zero() {
                    s += &v[j] * Rational::from_integer(a.clone());
                }
            }
            if !s.is_zero() {
                v[p] = -s / Rational::from_integer(row[p].clone());
            }
        }
        basis.push(v);
    }
    basis
}

/// Reduced row echelon form with pivots searched left to right; zero rows dropped,
/// every pivot normalized to 1.
pub fn rref(mut a: Vec<Vec<Rational>>) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let m = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..ncols {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let piv_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&piv_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn q(a: i64) -> Rational {
        Rational::from_integer(a.into())
    }

    fn mat(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
    }

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(rank(&mat(&[&[2, 1], &[1, 2]]), 2), 2);
        assert_eq!(rank(&mat(&[&[1, 2], &[2, 4]]), 2), 1);
        assert_eq!(rank(&mat(&[&[0, 0], &[0, 0]]), 2), 0);
        assert_eq!(rank(&[], 3), 0);
    }

    #[test]
    fn kernel_of_row_vector() {
        let k = kernel(&mat(&[&[1, 1]]), 2, &[0, 1]);
        assert_eq!(k, vec![vec![q(-1), q(1)]]);
        let k = kernel(&mat(&[&[1, 1]]), 2, &[1, 0]);
        assert_eq!(k, vec![vec![q(1), q(-1)]]);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = mat(&[&[1, 2, 3, 4], &[2, 4, 6, 9], &[0, 1, 0, 1]]);
        for seq in [[0, 1, 2, 3], [3, 2, 1, 0]] {
            let k = kernel(&m, 4, &seq);
            assert_eq!(k.len() + rank(&m, 4), 4);
            for v in &k {
                for row in &m {
                    let s = row.iter().zip(v).fold(Rational::zero(), |acc, (a, b)| acc + a * b);
                    assert!(s.is_zero());
                }
            }
        }
    }

    #[test]
    fn rational_rref() {
        let (r, p) = rref(mat(&[&[0, 2, 4], &[1, 1, 1], &[1, 2, 3]]));
        assert_eq!(p, vec![0, 1]);
        assert_eq!(r, mat(&[&[1, 0, -1], &[0, 1, 2]]));
    }

    #[test]
    fn bareiss_determinant_appears_as_last_pivot() {
        // For a nonsingular square matrix, the last Bareiss pivot is +-det.
        let m = vec![
            vec![BigInt::from(2), BigInt::from(1), BigInt::from(0)],
            vec![BigInt::from(1), BigInt::from(3), BigInt::from(1)],
            vec![BigInt::from(0), BigInt::from(1), BigInt::from(4)],
        ];
        let e = bareiss(m, &[0, 1, 2]);
        assert_eq!(e.pivots, vec![0, 1, 2]);
        assert_eq!(e.rows[2][2].abs(), BigInt::from(18));
    }

    #[test]
    fn tsv_dump_has_labels() {
        let m = RationalMatrix {
            row_labels: vec![Monomial::new(vec![1, 0])],
            col_labels: vec![Monomial::new(vec![1, 0]), Monomial::new(vec![0, 1])],
            entries: vec![vec![q(2), Rational::new(1.into(), 3.into())]],
        };
        assert_eq!(m.to_tsv(), "\tx1\tx2\nx1\t2/1\t1/3\n");
    }
}
