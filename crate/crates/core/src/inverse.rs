//! Catalecticant matrices and the graded pieces of `ann(G)`.
//!
//! `[ann(G)]_d` is the kernel of the pairing `R_d x R_{e-d} -> k`,
//! `(f, g) -> (f g) o G`, written in monomial bases sorted descending.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, RationalMatrix};
use crate::monomial::{binomial, dim_r, monomials_of_degree, Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::Rational;

/// A homogeneous subspace of `R_d` given by a basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedVectorSpace {
    pub degree: u32,
    pub basis: Vec<Polynomial>,
}

impl GradedVectorSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Checks linear independence of the basis by exact rank.
    pub fn is_independent(&self, n: usize) -> bool {
        let cols = monomials_of_degree(n, self.degree, MonomialOrder::DegRevLex);
        let rows: Vec<Vec<Rational>> = self
            .basis
            .iter()
            .map(|p| cols.iter().map(|m| p.coeff(m)).collect())
            .collect();
        linalg::rank(&rows, cols.len()) == self.basis.len()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HilbertFunction {
    pub values: Vec<u64>,
}

impl HilbertFunction {
    pub fn new(values: Vec<u64>) -> Self {
        HilbertFunction { values }
    }

    /// Value in degree `i`, zero past the stored range.
    pub fn at(&self, i: usize) -> u64 {
        self.values.get(i).copied().unwrap_or(0)
    }
}

/// The homogeneous degree of `g`, rejecting zero and mixed-degree input.
fn form_degree(g: &Polynomial) -> Result<u32> {
    g.homogeneous_degree()
        .ok_or_else(|| Error::Input("expected a nonzero homogeneous form".into()))
}

/// `Cat^d_{e-d}(G)`: rows labelled by `M_{e-d}`, columns by `M_d`, both descending,
/// with entry `(row * col) o G`.
pub fn catalecticant(g: &Polynomial, d: u32, order: MonomialOrder) -> Result<RationalMatrix> {
    let e = form_degree(g)?;
    if d > e {
        return Err(Error::Input(format!(
            "catalecticant degree {d} exceeds form degree {e}"
        )));
    }
    let n = g.nvars();
    let row_labels = monomials_of_degree(n, e - d, order);
    let col_labels = monomials_of_degree(n, d, order);
    let entries = row_labels
        .iter()
        .map(|r| {
            col_labels
                .iter()
                .map(|c| {
                    let m = r.mul(c);
                    let a = g.coeff(&m);
                    if a.is_zero() {
                        a
                    } else {
                        a * Rational::from_integer(m.factorial_product())
                    }
                })
                .collect()
        })
        .collect();
    Ok(RationalMatrix {
        row_labels,
        col_labels,
        entries,
    })
}

/// Kernel of `m` as polynomials in its column labels.
///
/// Pivots are placed on the smallest columns first; the kernel coordinates are
/// then brought to reduced echelon form with columns in descending order, so every
/// basis element is monic with a distinct leading monomial.
pub fn kernel_basis(m: &RationalMatrix) -> GradedVectorSpace {
    let ncols = m.cols();
    let degree = m.col_labels.first().map_or(0, Monomial::degree);
    let seq: Vec<usize> = (0..ncols).rev().collect();
    let raw = linalg::kernel(&m.entries, ncols, &seq);
    let (reduced, _) = linalg::rref(raw);
    let n = m.col_labels.first().map_or(0, Monomial::nvars);
    let basis = reduced
        .into_iter()
        .map(|v| {
            let terms = m.col_labels.iter().cloned().zip(v).filter(|(_, c)| !c.is_zero());
            Polynomial::from_terms(n, terms).expect("labels share a ring")
        })
        .collect();
    GradedVectorSpace { degree, basis }
}

/// `[ann(G)]_d`.
pub fn ann_graded_piece(g: &Polynomial, d: u32, order: MonomialOrder) -> Result<GradedVectorSpace> {
    Ok(kernel_basis(&catalecticant(g, d, order)?))
}

/// Leading monomials of the basis, in basis order.
pub fn initial_monomials(v: &GradedVectorSpace, order: MonomialOrder) -> Vec<Monomial> {
    v.basis
        .iter()
        .filter_map(|p| p.leading_monomial(order).cloned())
        .collect()
}

/// The Hilbert function of a compressed Gorenstein algebra of socle degree `e`.
pub fn compressed_hilbert(n: usize, e: u32) -> HilbertFunction {
    let values = (0..=e)
        .map(|i| {
            let k = if i <= e / 2 { i } else { e - i };
            binomial(n as u64 - 1 + k as u64, k as u64)
        })
        .collect();
    HilbertFunction { values }
}

/// Hilbert function of `R / ann(G)` on degrees `0..=e+1`.
pub fn hilbert_of_ann_quotient(g: &Polynomial, order: MonomialOrder) -> Result<HilbertFunction> {
    let e = form_degree(g)?;
    let mut values = Vec::with_capacity(e as usize + 2);
    for d in 0..=e {
        let cat = catalecticant(g, d, order)?;
        values.push(cat.rank() as u64);
    }
    values.push(0);
    Ok(HilbertFunction { values })
}

/// The segment `dim R_d - dim R_{e-d}` predicted for `[in(ann(G))]_d`.
pub fn expected_ann_dim(n: usize, e: u32, d: u32) -> u64 {
    if d > e {
        return dim_r(n, d);
    }
    dim_r(n, d).saturating_sub(dim_r(n, e - d))
}
