//! Named polynomial constructors: the divided-power rescaling `phi`, the products
//! `F_a`, complete symmetric forms and seeded random forms.

use num_bigint::BigInt;
use num_traits::One;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{monomials_of_degree, Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::Rational;

/// Seed for the deterministic PRNG stream behind random forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Seed(pub u64);

impl Seed {
    pub fn rng(self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.0)
    }

    /// An independent seed for sub-task `index` (trials, resamples, extra forms).
    pub fn derive(self, index: u64) -> Seed {
        let mut rng = self.rng();
        rng.set_stream(index.wrapping_add(1));
        Seed(rng.next_u64())
    }
}

pub const DEFAULT_COEFF_BOUND: u64 = 10_000;

/// Divides the coefficient of every term `x^i` by `i1! * ... * in!`.
pub fn phi(f: &Polynomial) -> Polynomial {
    let terms = f
        .terms()
        .map(|(m, c)| (m.clone(), c / Rational::from_integer(m.factorial_product())));
    Polynomial::from_terms(f.nvars(), terms).expect("same ring")
}

/// `(x1 - xn)^a1 * ... * (x_{n-1} - xn)^a_{n-1}`.
pub fn f_of(a: &[u32]) -> Result<Polynomial> {
    let n = a.len() + 1;
    if n < 2 {
        return Err(Error::Input("F_a needs at least two variables".into()));
    }
    let last = Polynomial::var(n, n - 1);
    let mut acc = Polynomial::one(n);
    for (i, &k) in a.iter().enumerate() {
        let lin = Polynomial::var(n, i).sub(&last)?;
        acc = acc.mul(&lin.pow(k))?;
    }
    Ok(acc)
}

/// The sum of all degree-`e` monomials in `n` variables.
pub fn complete_symmetric(n: usize, e: u32) -> Polynomial {
    let terms = monomials_of_degree(n, e, MonomialOrder::DegRevLex)
        .into_iter()
        .map(|m| (m, Rational::one()));
    Polynomial::from_terms(n, terms).expect("same ring")
}

/// A form of degree `e` with independent uniform integer coefficients in
/// `[-bound, bound] \ {0}`, deterministic in `seed`.
pub fn random_form(n: usize, e: u32, seed: Seed, bound: u64) -> Result<Polynomial> {
    if bound == 0 {
        return Err(Error::Input("coefficient bound must be at least 1".into()));
    }
    if bound > i64::MAX as u64 {
        return Err(Error::Input("coefficient bound too large".into()));
    }
    let b = bound as i64;
    let mut rng = seed.rng();
    let terms: Vec<_> = monomials_of_degree(n, e, MonomialOrder::DegRevLex)
        .into_iter()
        .map(|m| {
            let c = loop {
                let v: i64 = rng.gen_range(-b..=b);
                if v != 0 {
                    break v;
                }
            };
            (m, Rational::from_integer(BigInt::from(c)))
        })
        .collect();
    Polynomial::from_terms(n, terms)
}

/// `(c1*x1 + ... + cn*xn)^k * m` for integer `c`, used for explicit non-generic forms.
pub fn linear_power_times(coeffs: &[i64], k: u32, m: &Monomial) -> Result<Polynomial> {
    let n = coeffs.len();
    let lin = Polynomial::from_terms(
        n,
        coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| (Monomial::var(n, i), Rational::from_integer(c.into()))),
    )?;
    Ok(lin.pow(k).mul_monomial(m))
}
