//! Monomials as exponent vectors and the three supported monomial orders.
//!
//! Variables are indexed `x1, ..., xn` in user-facing text and `0..n` in code.
//! Every order uses the precedence `x1 > x2 > ... > xn`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{check_dim, Error, Result};

/// A monomial `x1^a1 * ... * xn^an`, stored as its exponent vector.
///
/// The derived `Ord` compares exponent vectors lexicographically; it is only
/// used as a canonical storage key and is unrelated to [`MonomialOrder`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    /// The monomial `1` in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    /// The variable `x_{i+1}` (zero-based index `i`).
    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    /// `x_{i+1}^k`.
    pub fn var_pow(n: usize, i: usize, k: u32) -> Self {
        let mut e = vec![0; n];
        e[i] = k;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `true` iff `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if self.divides(other) {
            Some(Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect()))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// One-based index of the last variable dividing the monomial, 0 for `1`.
    pub fn max_var(&self) -> usize {
        self.0.iter().rposition(|&a| a > 0).map_or(0, |i| i + 1)
    }

    /// Product of the factorials of the exponents, i.e. `m o m` under differentiation.
    pub fn factorial_product(&self) -> num_bigint::BigInt {
        self.0
            .iter()
            .fold(num_bigint::BigInt::from(1u32), |acc, &a| acc * factorial(a))
    }

    pub(crate) fn exponents_mut(&mut self) -> &mut Vec<u32> {
        &mut self.0
    }
}

pub(crate) fn factorial(k: u32) -> num_bigint::BigInt {
    (2..=k).fold(num_bigint::BigInt::from(1u32), |acc, i| acc * i)
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &a) in self.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if a == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, a)?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    #[default]
    DegRevLex,
    Lex,
    DegLex,
}

impl MonomialOrder {
    pub const ALL: [MonomialOrder; 3] = [MonomialOrder::DegRevLex, MonomialOrder::Lex, MonomialOrder::DegLex];

    /// Compares two monomials of equal length. `Greater` means `a` is larger.
    pub fn compare(self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        check_dim(a.nvars(), b.nvars())?;
        Ok(self.cmp_unchecked(a, b))
    }

    pub(crate) fn cmp_unchecked(self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        match self {
            MonomialOrder::Lex => ea.cmp(eb),
            MonomialOrder::DegLex => a.degree().cmp(&b.degree()).then_with(|| ea.cmp(eb)),
            MonomialOrder::DegRevLex => a.degree().cmp(&b.degree()).then_with(|| {
                for (x, y) in ea.iter().zip(eb).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MonomialOrder::DegRevLex => "degrevlex",
            MonomialOrder::Lex => "lex",
            MonomialOrder::DegLex => "deglex",
        }
    }

    /// `true` for orders that refine total degree.
    pub fn is_graded(self) -> bool {
        !matches!(self, MonomialOrder::Lex)
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MonomialOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "degrevlex" | "grevlex" => Ok(MonomialOrder::DegRevLex),
            "lex" => Ok(MonomialOrder::Lex),
            "deglex" | "grlex" => Ok(MonomialOrder::DegLex),
            other => Err(Error::Parse(format!("unknown monomial order `{other}`"))),
        }
    }
}

/// Binomial coefficient with `binomial(a, b) = 0` for `b > a`.
pub fn binomial(a: u64, b: u64) -> u64 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: u128 = 1;
    for i in 0..b {
        acc = acc * (a - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// `dim_k R_d` for `R = k[x1..xn]`.
pub fn dim_r(n: usize, d: u32) -> u64 {
    if n == 0 {
        return u64::from(d == 0);
    }
    binomial(n as u64 + d as u64 - 1, d as u64)
}

/// All monomials of degree `d` in `n` variables, strictly descending in `order`.
pub fn monomials_of_degree(n: usize, d: u32, order: MonomialOrder) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(dim_r(n, d) as usize);
    let mut cur = vec![0u32; n];
    fill(&mut cur, 0, d, &mut out);
    out.sort_by(|a, b| order.cmp_unchecked(b, a));
    out
}

fn fill(cur: &mut Vec<u32>, i: usize, rem: u32, out: &mut Vec<Monomial>) {
    let n = cur.len();
    if n == 0 {
        if rem == 0 {
            out.push(Monomial(Vec::new()));
        }
        return;
    }
    if i == n - 1 {
        cur[i] = rem;
        out.push(Monomial(cur.clone()));
        cur[i] = 0;
        return;
    }
    for a in (0..=rem).rev() {
        cur[i] = a;
        fill(cur, i + 1, rem - a, out);
    }
    cur[i] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn degrevlex_examples() {
        let o = MonomialOrder::DegRevLex;
        assert_eq!(o.compare(&m(&[1, 1, 0]), &m(&[0, 2, 0])).unwrap(), Ordering::Greater);
        assert_eq!(o.compare(&m(&[0, 2, 0]), &m(&[1, 0, 1])).unwrap(), Ordering::Greater);
    }

    #[test]
    fn equal_monomials_compare_equal() {
        for o in MonomialOrder::ALL {
            assert_eq!(o.compare(&m(&[2, 0, 1]), &m(&[2, 0, 1])).unwrap(), Ordering::Equal);
        }
    }

    #[test]
    fn lex_ignores_degree() {
        let o = MonomialOrder::Lex;
        assert_eq!(o.compare(&m(&[1, 0]), &m(&[0, 5])).unwrap(), Ordering::Greater);
        assert_eq!(
            MonomialOrder::DegLex.compare(&m(&[1, 0]), &m(&[0, 5])).unwrap(),
            Ordering::Less
        );
    }

    #[test]
    fn compare_rejects_length_mismatch() {
        let err = MonomialOrder::Lex.compare(&m(&[1, 0]), &m(&[1])).unwrap_err();
        assert!(matches!(err, Error::Dimension { .. }));
    }

    #[test]
    fn degree_two_in_three_variables() {
        let got = monomials_of_degree(3, 2, MonomialOrder::DegRevLex);
        let want = vec![
            m(&[2, 0, 0]),
            m(&[1, 1, 0]),
            m(&[0, 2, 0]),
            m(&[1, 0, 1]),
            m(&[0, 1, 1]),
            m(&[0, 0, 2]),
        ];
        assert_eq!(got, want);
    }

    #[test]
    fn univariate_and_binary_lists() {
        for o in MonomialOrder::ALL {
            assert_eq!(monomials_of_degree(1, 5, o), vec![m(&[5])]);
        }
        let got = monomials_of_degree(2, 3, MonomialOrder::DegRevLex);
        assert_eq!(got, vec![m(&[3, 0]), m(&[2, 1]), m(&[1, 2]), m(&[0, 3])]);
    }

    #[test]
    fn binomial_boundaries() {
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(7, 0), 1);
        assert_eq!(binomial(13, 11), 78);
        assert_eq!(dim_r(3, 11), 78);
        assert_eq!(dim_r(3, 0), 1);
    }

    #[test]
    fn display_and_max_var() {
        assert_eq!(m(&[2, 0, 1]).to_string(), "x1^2*x3");
        assert_eq!(m(&[0, 0]).to_string(), "1");
        assert_eq!(m(&[2, 0, 1]).max_var(), 3);
        assert_eq!(m(&[0, 1, 0]).max_var(), 2);
    }

    #[test]
    fn order_names_parse() {
        for o in MonomialOrder::ALL {
            assert_eq!(o.name().parse::<MonomialOrder>().unwrap(), o);
        }
        assert!("revlex-ish".parse::<MonomialOrder>().is_err());
    }
}
