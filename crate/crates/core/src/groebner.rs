//! Buchberger's algorithm over `Q`, Gröbner basis checks, and the explicit bases
//! of `ann(H_e)` built from `phi` and the products `F_a`.

use std::cmp::Ordering;
use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forms::{f_of, phi};
use crate::ideal::MonomialIdeal;
use crate::linalg;
use crate::monomial::{dim_r, monomials_of_degree, Monomial, MonomialOrder};
use crate::poly::{Polynomial, PolynomialJson};
use crate::Rational;

/// A primitive integer polynomial, terms sorted descending, positive leading
/// coefficient. Reductions run fraction-free on this representation.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Prim {
    n: usize,
    terms: Vec<(Monomial, BigInt)>,
}

impl Prim {
    /// Returns `(P, s)` with `P = s * p`.
    fn from_poly(p: &Polynomial, order: MonomialOrder) -> (Self, Rational) {
        let sorted = p.terms_sorted(order);
        let l = sorted.iter().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let terms = sorted
            .into_iter()
            .map(|(m, c)| (m.clone(), c.numer() * (&l / c.denom())))
            .collect();
        let mut prim = Prim { n: p.nvars(), terms };
        let k = prim.normalize();
        (prim, Rational::from_integer(l) / k)
    }

    /// Divides out the content and fixes the sign; returns the divisor used.
    fn normalize(&mut self) -> BigInt {
        let mut k = content(&self.terms);
        if self.terms.first().is_some_and(|(_, c)| c.is_negative()) {
            k = -k;
        }
        if !k.is_one() {
            for (_, c) in &mut self.terms {
                *c /= &k;
            }
        }
        k
    }

    fn monic_poly(&self) -> Polynomial {
        let lc = Rational::from_integer(self.terms[0].1.clone());
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), Rational::from_integer(c.clone()) / &lc));
        Polynomial::from_terms(self.n, terms).expect("same ring")
    }

    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn lc(&self) -> &BigInt {
        &self.terms[0].1
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Positive gcd of the coefficients, `1` for the empty list.
fn content(terms: &[(Monomial, BigInt)]) -> BigInt {
    let mut g = BigInt::zero();
    for (_, c) in terms {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    if g.is_zero() {
        BigInt::one()
    } else {
        g
    }
}

/// `s * a - c * m * b`, where both inputs are sorted descending.
fn sub_scaled(
    a: &[(Monomial, BigInt)],
    s: &BigInt,
    c: &BigInt,
    m: &Monomial,
    b: &[(Monomial, BigInt)],
    order: MonomialOrder,
) -> Vec<(Monomial, BigInt)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let scale = |x: &BigInt| if s.is_one() { x.clone() } else { x * s };
    let mut i = 0;
    let mut bi = b.iter().map(|(t, x)| (t.mul(m), x)).peekable();
    while i < a.len() || bi.peek().is_some() {
        let ord = match (a.get(i), bi.peek()) {
            (Some(x), Some(y)) => order.cmp_unchecked(&x.0, &y.0),
            (Some(_), None) => Ordering::Greater,
            (None, _) => Ordering::Less,
        };
        match ord {
            Ordering::Greater => {
                out.push((a[i].0.clone(), scale(&a[i].1)));
                i += 1;
            }
            Ordering::Less => {
                let (t, x) = bi.next().unwrap();
                out.push((t, -(c * x)));
            }
            Ordering::Equal => {
                let (t, x) = bi.next().unwrap();
                let v = scale(&a[i].1) - c * x;
                if !v.is_zero() {
                    out.push((t, v));
                }
                i += 1;
            }
        }
    }
    out
}

const CONTENT_INTERVAL: usize = 8;

/// Reduction of `f` by `basis`: repeatedly cancel the largest reducible term with
/// the first basis element whose leading monomial divides it. With `full` unset,
/// stops as soon as the leading term is irreducible.
///
/// Returns `(r, t)` where `r` is primitive and equals `t` times the remainder of `f`.
fn reduce(f: Prim, basis: &[Prim], order: MonomialOrder, full: bool) -> (Prim, Rational) {
    let n = f.n;
    let mut scale = Rational::one();
    let mut rem: Vec<(Monomial, BigInt)> = Vec::new();
    let mut p = f.terms;
    let mut start = 0;
    let mut steps = 0;
    while start < p.len() {
        let hit = basis
            .iter()
            .find_map(|g| g.lm().quotient_of(&p[start].0).map(|q| (g, q)));
        let Some((g, q)) = hit else {
            if !full {
                break;
            }
            start += 1;
            continue;
        };
        rem.extend(p.drain(..start));
        let gcd = g.lc().gcd(&p[0].1);
        let a = g.lc() / &gcd;
        let b = &p[0].1 / &gcd;
        p = sub_scaled(&p[1..], &a, &b, &q, &g.terms[1..], order);
        start = 0;
        if !a.is_one() {
            for (_, c) in &mut rem {
                *c *= &a;
            }
            scale *= Rational::from_integer(a);
        }
        steps += 1;
        if steps % CONTENT_INTERVAL == 0 {
            let k = content(&rem).gcd(&content(&p));
            if !k.is_one() {
                for (_, c) in rem.iter_mut().chain(p.iter_mut()) {
                    *c /= &k;
                }
                scale /= Rational::from_integer(k);
            }
        }
    }
    rem.extend(p);
    let mut r = Prim { n, terms: rem };
    let k = r.normalize();
    (r, scale / Rational::from_integer(k))
}

/// A nonzero multiple of the S-polynomial, before reduction.
fn s_poly_prim(f: &Prim, g: &Prim, order: MonomialOrder) -> Prim {
    let l = f.lm().lcm(g.lm());
    let mf = f.lm().quotient_of(&l).unwrap();
    let mg = g.lm().quotient_of(&l).unwrap();
    let gcd = f.lc().gcd(g.lc());
    let a = g.lc() / &gcd;
    let b = f.lc() / &gcd;
    let left: Vec<_> = f.terms[1..].iter().map(|(t, x)| (t.mul(&mf), x.clone())).collect();
    let terms = sub_scaled(&left, &a, &b, &mg, &g.terms[1..], order);
    let mut p = Prim { n: f.n, terms };
    p.normalize();
    p
}

/// Re-reduces the tails of elements that contain a multiple of the leading
/// monomial of the last element, keeping the basis tail-reduced. Leading
/// monomials are untouched.
fn tail_reduce_by_last(basis: &mut [Prim], order: MonomialOrder) {
    let Some((h, rest)) = basis.split_last() else { return };
    let hits: Vec<usize> = (0..rest.len())
        .filter(|&k| rest[k].terms[1..].iter().any(|(m, _)| h.lm().divides(m)))
        .collect();
    for k in hits {
        let g = &basis[k];
        let tail = Prim {
            n: g.n,
            terms: g.terms[1..].to_vec(),
        };
        let (head_m, head_c) = g.terms[0].clone();
        // No tail monomial of g is divisible by lm(g), so g may stay among the reducers.
        let (r, t) = reduce(tail, basis, order, true);
        // lt(g) + NF(tail) is proportional to t * lt(g) + r.
        let mut terms = Vec::with_capacity(r.terms.len() + 1);
        terms.push((head_m, head_c * t.numer()));
        terms.extend(r.terms.into_iter().map(|(m, c)| (m, c * t.denom())));
        let mut p = Prim { n: basis[k].n, terms };
        p.normalize();
        basis[k] = p;
    }
}

fn prim_basis(basis: &[Polynomial], order: MonomialOrder) -> Vec<Prim> {
    basis.iter().map(|g| Prim::from_poly(g, order).0).collect()
}

/// Remainder of `f` on division by `basis`.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], order: MonomialOrder) -> Result<Polynomial> {
    if basis.iter().any(Polynomial::is_zero) {
        return Err(Error::Input("division by the zero polynomial".into()));
    }
    if basis.iter().any(|g| g.nvars() != f.nvars()) {
        return Err(Error::Input("division across different rings".into()));
    }
    let (p, s) = Prim::from_poly(f, order);
    let (r, t) = reduce(p, &prim_basis(basis, order), order, true);
    let inv = (s * t).recip();
    let terms = r.terms.into_iter().map(|(m, c)| (m, Rational::from_integer(c) * &inv));
    Polynomial::from_terms(f.nvars(), terms)
}

/// `(L/lt f) f - (L/lt g) g` with `L = lcm(lm f, lm g)`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: MonomialOrder) -> Result<Polynomial> {
    let (Some((lf, cf)), Some((lg, cg))) = (f.leading_term(order), g.leading_term(order)) else {
        return Err(Error::Input("S-polynomial of the zero polynomial".into()));
    };
    let l = lf.lcm(lg);
    let a = f.mul_monomial(&lf.quotient_of(&l).unwrap()).scale(&cf.recip());
    let b = g.mul_monomial(&lg.quotient_of(&l).unwrap()).scale(&cg.recip());
    a.sub(&b)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub order: MonomialOrder,
    /// Monic elements, sorted by leading monomial descending.
    pub elems: Vec<Polynomial>,
    /// Set once every S-pair is known to reduce to zero.
    pub certified: bool,
    /// When set, the basis is only guaranteed up to this degree.
    pub degree_cap: Option<u32>,
}

impl GroebnerBasis {
    /// Wraps `elems` (made monic) and certifies it by S-pair reduction.
    pub fn from_elements(elems: Vec<Polynomial>, order: MonomialOrder) -> Result<Self> {
        if elems.iter().any(Polynomial::is_zero) {
            return Err(Error::Input("Gröbner basis elements must be nonzero".into()));
        }
        let certified = is_groebner_basis(&elems, order)?;
        Ok(GroebnerBasis {
            order,
            elems: sorted_monic(elems, order),
            certified,
            degree_cap: None,
        })
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elems
            .iter()
            .filter_map(|p| p.leading_monomial(self.order).cloned())
            .collect()
    }

    fn require_usable(&self) -> Result<()> {
        if self.certified || self.degree_cap.is_some() {
            Ok(())
        } else {
            Err(Error::Uncertified)
        }
    }

    pub fn to_json(&self) -> GroebnerBasisJson {
        GroebnerBasisJson {
            order: self.order,
            certified: self.certified,
            elems: self.elems.iter().map(Polynomial::to_json).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroebnerBasisJson {
    pub order: MonomialOrder,
    pub certified: bool,
    pub elems: Vec<PolynomialJson>,
}

fn sorted_monic(elems: Vec<Polynomial>, order: MonomialOrder) -> Vec<Polynomial> {
    let mut v: Vec<(usize, Polynomial)> = elems.into_iter().map(|p| p.monic(order)).enumerate().collect();
    v.sort_by(|(i, a), (j, b)| {
        let (la, lb) = (a.leading_monomial(order).unwrap(), b.leading_monomial(order).unwrap());
        order.cmp_unchecked(lb, la).then(i.cmp(j))
    });
    v.into_iter().map(|(_, p)| p).collect()
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Buchberger's algorithm with normal pair selection and the coprime and chain
/// criteria. With `degree_cap`, only pairs and inputs of degree at most the cap
/// are processed, which yields a basis valid in degrees `<= cap` for homogeneous
/// input.
pub fn buchberger(gens: &[Polynomial], order: MonomialOrder, degree_cap: Option<u32>) -> Result<GroebnerBasis> {
    let Some(first) = gens.first() else {
        return Err(Error::Input("no generators".into()));
    };
    let n = first.nvars();
    if gens.iter().any(|g| g.nvars() != n) {
        return Err(Error::Input("generators live in different rings".into()));
    }
    if gens.iter().any(Polynomial::is_zero) {
        return Err(Error::Input("generators must be nonzero".into()));
    }
    if degree_cap.is_some() && !gens.iter().all(Polynomial::is_homogeneous) {
        return Err(Error::Input(
            "degree-capped computation needs homogeneous generators".into(),
        ));
    }
    if degree_cap.is_some() && !order.is_graded() {
        return Err(Error::Input("degree-capped computation needs a graded order".into()));
    }

    let deg = |p: &Polynomial| p.total_degree().unwrap();
    let mut inputs: Vec<(u32, usize)> = gens.iter().enumerate().map(|(k, g)| (deg(g), k)).collect();
    inputs.sort();
    let mut inputs = inputs.into_iter().peekable();

    let mut basis: Vec<Prim> = Vec::new();
    let mut pending: Vec<Pair> = Vec::new();
    let mut in_pending: HashSet<(usize, usize)> = HashSet::new();
    let mut truncated = false;

    loop {
        // Lowest-degree pending pair; ties broken by the smaller lcm, then indices.
        let next_pair = pending
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.lcm
                    .degree()
                    .cmp(&b.lcm.degree())
                    .then_with(|| order.cmp_unchecked(&a.lcm, &b.lcm))
                    .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
            })
            .map(|(k, p)| (k, p.lcm.degree()));
        let next_input = inputs.peek().map(|&(d, _)| d);

        let candidate = match (next_pair, next_input) {
            (None, None) => break,
            (Some((k, pd)), Some(id)) if pd < id => Candidate::Pair(k),
            (Some((k, _)), None) => Candidate::Pair(k),
            _ => Candidate::Input(inputs.next().unwrap().1),
        };

        let h = match candidate {
            Candidate::Pair(k) => {
                let pair = pending.swap_remove(k);
                in_pending.remove(&(pair.i, pair.j));
                if degree_cap.is_some_and(|cap| pair.lcm.degree() > cap) {
                    truncated = true;
                    continue;
                }
                if chain_criterion(&pair, &basis, &in_pending) {
                    continue;
                }
                s_poly_prim(&basis[pair.i], &basis[pair.j], order)
            }
            Candidate::Input(k) => {
                if degree_cap.is_some_and(|cap| deg(&gens[k]) > cap) {
                    truncated = true;
                    continue;
                }
                Prim::from_poly(&gens[k], order).0
            }
        };

        let (h, _) = reduce(h, &basis, order, true);
        if h.is_zero() {
            continue;
        }
        let new = basis.len();
        for (i, g) in basis.iter().enumerate() {
            if g.lm().is_coprime(h.lm()) {
                continue;
            }
            pending.push(Pair {
                i,
                j: new,
                lcm: g.lm().lcm(h.lm()),
            });
            in_pending.insert((i, new));
        }
        basis.push(h);
        tail_reduce_by_last(&mut basis, order);
    }

    // Minimalize: drop elements whose leading monomial is divisible by another's.
    let lms: Vec<Monomial> = basis.iter().map(|g| g.lm().clone()).collect();
    let keep: Vec<Polynomial> = basis
        .iter()
        .enumerate()
        .filter(|(k, g)| {
            !lms.iter()
                .enumerate()
                .any(|(l, m)| l != *k && m.divides(g.lm()) && (m != g.lm() || l < *k))
        })
        .map(|(_, g)| g.monic_poly())
        .collect();

    Ok(GroebnerBasis {
        order,
        elems: sorted_monic(keep, order),
        certified: !truncated,
        degree_cap: degree_cap.filter(|_| truncated),
    })
}

enum Candidate {
    Pair(usize),
    Input(usize),
}

/// Buchberger's second criterion: some `g_k` with `lm(g_k) | lcm` whose pairs with
/// both `g_i` and `g_j` are already treated.
fn chain_criterion(pair: &Pair, basis: &[Prim], in_pending: &HashSet<(usize, usize)>) -> bool {
    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    basis.iter().enumerate().any(|(k, g)| {
        k != pair.i
            && k != pair.j
            && g.lm().divides(&pair.lcm)
            && !in_pending.contains(&key(pair.i, k))
            && !in_pending.contains(&key(pair.j, k))
    })
}

/// `true` iff every S-pair of `b` reduces to zero modulo `b`.
pub fn is_groebner_basis(b: &[Polynomial], order: MonomialOrder) -> Result<bool> {
    if b.iter().any(Polynomial::is_zero) {
        return Err(Error::Input("Gröbner basis elements must be nonzero".into()));
    }
    let sorted = prim_basis(b, order);
    let pairs: Vec<(usize, usize)> = (0..sorted.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    Ok(pairs.par_iter().all(|&(i, j)| {
        let (f, g) = (&sorted[i], &sorted[j]);
        f.lm().is_coprime(g.lm()) || reduce(s_poly_prim(f, g, order), &sorted, order, false).0.is_zero()
    }))
}

/// No support monomial of any element is divisible by another element's leading
/// monomial, and every element is monic.
pub fn is_reduced(b: &GroebnerBasis) -> Result<bool> {
    if !b.certified {
        return Err(Error::Uncertified);
    }
    let lms = b.leading_monomials();
    for (k, p) in b.elems.iter().enumerate() {
        if !p.leading_term(b.order).is_some_and(|(_, c)| c.is_one()) {
            return Ok(false);
        }
        for (m, _) in p.terms() {
            if lms.iter().enumerate().any(|(l, lm)| l != k && lm.divides(m)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Same test for elements that have not been made monic.
pub fn is_reduced_as_given(elems: &[Polynomial], order: MonomialOrder) -> Result<bool> {
    let monic = elems
        .iter()
        .all(|p| p.leading_term(order).is_some_and(|(_, c)| c.is_one()));
    let gb = GroebnerBasis::from_elements(elems.to_vec(), order)?;
    Ok(monic && is_reduced(&gb)?)
}

/// The monomial ideal generated by the leading monomials.
pub fn initial_ideal(b: &GroebnerBasis) -> Result<MonomialIdeal> {
    b.require_usable()?;
    let n = b.elems.first().map_or(0, Polynomial::nvars);
    MonomialIdeal::new(n, b.leading_monomials())
}

/// All `a` in `N^{n-1}` with `|a| = k`.
fn exponent_vectors(n: usize, k: u32) -> Vec<Vec<u32>> {
    monomials_of_degree(n - 1, k, MonomialOrder::DegRevLex)
        .into_iter()
        .map(|m| m.exponents().to_vec())
        .collect()
}

/// `phi(x_n^power * F_a)` in `n` variables.
pub fn phi_xn_f(n: usize, power: u32, a: &[u32]) -> Result<Polynomial> {
    let f = f_of(a)?.mul_monomial(&Monomial::var_pow(n, n - 1, power));
    Ok(phi(&f))
}

/// The explicit minimal Gröbner basis of `ann(H_e)` in degrevlex.
pub fn candidate_basis(n: usize, e: u32) -> Result<Vec<Polynomial>> {
    if n < 2 || e < 1 {
        return Err(Error::Input("candidate basis needs n >= 2 and e >= 1".into()));
    }
    let d = e / 2;
    let mut out = Vec::new();
    if e.is_multiple_of(2) {
        for a in exponent_vectors(n, d + 1) {
            out.push(phi(&f_of(&a)?));
        }
        for i in 0..=d {
            for a in exponent_vectors(n, d - i) {
                out.push(phi_xn_f(n, 2 * i + 1, &a)?);
            }
        }
    } else {
        for i in 0..=d + 1 {
            for a in exponent_vectors(n, d + 1 - i) {
                out.push(phi_xn_f(n, 2 * i, &a)?);
            }
        }
    }
    Ok(out)
}

/// The candidate basis with each degree-`(d+1)` element `phi(F_a)` (even `e`)
/// replaced by `phi(F_a) + sum_i a_i phi(xn F_{a - e_i})`.
pub fn reduced_candidate_basis(n: usize, e: u32) -> Result<Vec<Polynomial>> {
    let mut out = candidate_basis(n, e)?;
    if e % 2 == 1 {
        return Ok(out);
    }
    let d = e / 2;
    for (slot, a) in exponent_vectors(n, d + 1).into_iter().enumerate() {
        let mut p = out[slot].clone();
        for i in 0..n - 1 {
            if a[i] == 0 {
                continue;
            }
            let mut b = a.clone();
            b[i] -= 1;
            let term = phi_xn_f(n, 1, &b)?.scale(&Rational::from_integer(a[i].into()));
            p = p.add(&term)?;
        }
        out[slot] = p;
    }
    Ok(out)
}

/// Per-degree counts for a homogeneous polynomial ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeData {
    pub degree: u32,
    /// `dim I_q`.
    pub dim_ideal: u64,
    /// `dim R_1 I_{q-1}`.
    pub dim_linear_span: u64,
    /// `r_q = dim I_q - dim R_1 I_{q-1}`, the number of minimal generators in degree `q`.
    pub minimal_generators: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyIdealDegreeData {
    pub degrees: Vec<DegreeData>,
}

impl PolyIdealDegreeData {
    pub fn r(&self, q: u32) -> u64 {
        self.degrees
            .iter()
            .find(|d| d.degree == q)
            .map_or(0, |d| d.minimal_generators)
    }
}

/// A basis of `I_q`: one multiple `(mu / lm g) g` for each `mu` in `in(I)_q`.
pub fn degree_basis(b: &GroebnerBasis, q: u32) -> Result<Vec<Polynomial>> {
    b.require_usable()?;
    if let Some(cap) = b.degree_cap {
        if q > cap {
            return Err(Error::Input(format!("degree {q} is above the basis cap {cap}")));
        }
    }
    let n = b.elems.first().map_or(0, Polynomial::nvars);
    let lms = b.leading_monomials();
    let mut out = Vec::new();
    for mu in monomials_of_degree(n, q, b.order) {
        if let Some((k, m)) = lms
            .iter()
            .enumerate()
            .find_map(|(k, lm)| lm.quotient_of(&mu).map(|m| (k, m)))
        {
            out.push(b.elems[k].mul_monomial(&m));
        }
    }
    Ok(out)
}

/// Coordinates of homogeneous degree-`q` polynomials on `M_q`.
fn coordinates(polys: &[Polynomial], n: usize, q: u32) -> Vec<Vec<Rational>> {
    let cols = monomials_of_degree(n, q, MonomialOrder::DegRevLex);
    polys
        .iter()
        .map(|p| cols.iter().map(|m| p.coeff(m)).collect())
        .collect()
}

/// `{ x_j g : g in basis, j = 1..n }`.
pub fn linear_multiples(basis: &[Polynomial]) -> Vec<Polynomial> {
    basis
        .iter()
        .flat_map(|g| (0..g.nvars()).map(move |j| g.mul_monomial(&Monomial::var(g.nvars(), j))))
        .collect()
}

/// `dim span(polys)` for homogeneous polynomials of degree `q`.
pub fn span_dim(polys: &[Polynomial], n: usize, q: u32) -> u64 {
    linalg::rank(&coordinates(polys, n, q), dim_r(n, q) as usize) as u64
}

/// Degree-by-degree minimal generator counts of the ideal with basis `b`.
pub fn minimal_generator_counts_poly(b: &GroebnerBasis, up_to: u32) -> Result<PolyIdealDegreeData> {
    b.require_usable()?;
    let n = b.elems.first().map_or(0, Polynomial::nvars);
    let init = initial_ideal(b)?;
    let mut degrees = Vec::new();
    let mut prev: Vec<Polynomial> = Vec::new();
    for q in 0..=up_to {
        let dim_ideal = dim_r(n, q) - init.standard_monomials(q).len() as u64;
        let dim_linear_span = if q == 0 {
            0
        } else {
            span_dim(&linear_multiples(&prev), n, q)
        };
        degrees.push(DegreeData {
            degree: q,
            dim_ideal,
            dim_linear_span,
            minimal_generators: dim_ideal - dim_linear_span,
        });
        prev = degree_basis(b, q)?;
    }
    Ok(PolyIdealDegreeData { degrees })
}

/// `in(I)` computed degree by degree from the echelon form of the Macaulay
/// matrix `{ m f : deg(m f) = q }`, independent of Buchberger.
pub fn initial_ideal_by_linear_algebra(gens: &[Polynomial], order: MonomialOrder, up_to: u32) -> Result<MonomialIdeal> {
    let Some(first) = gens.first() else {
        return Err(Error::Input("no generators".into()));
    };
    let n = first.nvars();
    if !order.is_graded() || !gens.iter().all(|g| g.homogeneous_degree().is_some()) {
        return Err(Error::Input(
            "linear-algebra initial ideal needs nonzero forms and a graded order".into(),
        ));
    }
    let mut leading = Vec::new();
    for q in 0..=up_to {
        let cols = monomials_of_degree(n, q, order);
        let index: std::collections::HashMap<&Monomial, usize> = cols.iter().enumerate().map(|(k, m)| (m, k)).collect();
        let mut rows = Vec::new();
        for g in gens {
            let dg = g.homogeneous_degree().unwrap();
            if dg > q {
                continue;
            }
            for m in monomials_of_degree(n, q - dg, order) {
                let mut row = vec![Rational::zero(); cols.len()];
                for (t, c) in g.terms() {
                    row[index[&t.mul(&m)]] = c.clone();
                }
                rows.push(row);
            }
        }
        if rows.is_empty() {
            continue;
        }
        let seq: Vec<usize> = (0..cols.len()).collect();
        let ech = linalg::bareiss(linalg::integer_rows(&rows), &seq);
        leading.extend(ech.pivots.into_iter().map(|k| cols[k].clone()));
    }
    MonomialIdeal::new(n, leading)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::{complete_symmetric, random_form, Seed};
    use crate::ideal::predicted_in_ann;

    const O: MonomialOrder = MonomialOrder::DegRevLex;

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a.into(), b.into())
    }

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn poly(n: usize, terms: &[(&[u32], i64)]) -> Polynomial {
        Polynomial::from_terms(n, terms.iter().map(|(e, c)| (mono(e), q(*c, 1)))).unwrap()
    }

    #[test]
    fn normal_form_examples() {
        let g = poly(3, &[(&[1, 1, 0], 1), (&[0, 0, 2], -1)]);
        assert!(normal_form(&g, std::slice::from_ref(&g), O).unwrap().is_zero());
        let x1 = Polynomial::var(3, 0);
        assert!(normal_form(&poly(3, &[(&[1, 0, 2], 1)]), &[x1], O).unwrap().is_zero());
        let f = poly(3, &[(&[1, 1, 0], 1), (&[0, 2, 0], 1)]);
        assert_eq!(
            normal_form(&f, &[g], O).unwrap(),
            poly(3, &[(&[0, 2, 0], 1), (&[0, 0, 2], 1)])
        );
        assert!(normal_form(&f, &[Polynomial::zero(3)], O).is_err());
    }

    #[test]
    fn s_polynomial_examples() {
        let f = poly(3, &[(&[2, 0, 0], 1)]);
        let g = poly(3, &[(&[1, 1, 0], 1), (&[0, 0, 2], -1)]);
        assert!(s_polynomial(&g, &g, O).unwrap().is_zero());
        assert_eq!(s_polynomial(&f, &g, O).unwrap(), poly(3, &[(&[1, 0, 2], 1)]));
        assert!(s_polynomial(&f, &Polynomial::zero(3), O).is_err());

        let a = poly(3, &[(&[2, 0, 0], 1), (&[0, 1, 1], 3)]);
        let b = poly(3, &[(&[0, 2, 0], 2), (&[0, 0, 2], -1)]);
        let s = s_polynomial(&a, &b, O).unwrap();
        assert!(normal_form(&s, &[a, b], O).unwrap().is_zero());
    }

    #[test]
    fn is_groebner_basis_examples() {
        let f = poly(3, &[(&[2, 0, 0], 1)]);
        let g = poly(3, &[(&[1, 1, 0], 1), (&[0, 0, 2], -1)]);
        assert!(!is_groebner_basis(&[f.clone(), g.clone()], O).unwrap());
        assert!(is_groebner_basis(&[g], O).unwrap());
        let gb = buchberger(&[f, poly(3, &[(&[1, 1, 0], 1), (&[0, 0, 2], -1)])], O, None).unwrap();
        assert!(gb.certified);
        assert!(is_groebner_basis(&gb.elems, O).unwrap());
    }

    #[test]
    fn buchberger_single_and_candidate() {
        let gb = buchberger(&[Polynomial::var(2, 0)], O, None).unwrap();
        assert_eq!(gb.elems, vec![Polynomial::var(2, 0)]);

        let cand = candidate_basis(2, 3).unwrap();
        let gb = buchberger(&cand, O, None).unwrap();
        let want = GroebnerBasis::from_elements(cand, O).unwrap();
        assert_eq!(gb.elems, want.elems);
        assert!(want.certified);
        let again = buchberger(&gb.elems, O, None).unwrap();
        assert_eq!(again.elems, gb.elems);
    }

    #[test]
    fn candidate_basis_small_cases() {
        let c = candidate_basis(2, 3).unwrap();
        assert_eq!(c.len(), 3);
        let lms: Vec<_> = c.iter().map(|p| p.leading_monomial(O).unwrap().clone()).collect();
        assert_eq!(lms, vec![mono(&[2, 0]), mono(&[1, 2]), mono(&[0, 4])]);

        let c1 = candidate_basis(2, 1).unwrap();
        let x1_minus_x2 = poly(2, &[(&[1, 0], 1), (&[0, 1], -1)]);
        let half_x2_sq = Polynomial::term(mono(&[0, 2]), q(1, 2));
        assert_eq!(c1, vec![x1_minus_x2, half_x2_sq]);

        // |G_{2d+1}| = sum_i dim A_{d+1-i}
        let c = candidate_basis(3, 5).unwrap();
        assert_eq!(c.len(), 4 + 3 + 2 + 1);
    }

    #[test]
    fn candidate_elements_annihilate_h() {
        for n in 2..=3 {
            for e in 1..=5 {
                let h = complete_symmetric(n, e);
                for p in candidate_basis(n, e).unwrap() {
                    assert!(p.annihilates(&h).unwrap(), "n={n} e={e} p={p}");
                }
            }
        }
    }

    #[test]
    fn reduced_candidate_n2_e2() {
        let r = reduced_candidate_basis(2, 2).unwrap();
        let c = candidate_basis(2, 2).unwrap();
        let want = c[0].add(&c[1].scale(&q(2, 1))).unwrap();
        assert_eq!(r[0], want);
        assert_eq!(
            r[0],
            Polynomial::from_terms(2, vec![(mono(&[2, 0]), q(1, 2)), (mono(&[0, 2]), q(-1, 2))]).unwrap()
        );
        assert_eq!(reduced_candidate_basis(3, 5).unwrap(), candidate_basis(3, 5).unwrap());
    }

    #[test]
    fn reducedness_flags() {
        let c = GroebnerBasis::from_elements(candidate_basis(2, 4).unwrap(), O).unwrap();
        assert!(!is_reduced(&c).unwrap());
        let r = GroebnerBasis::from_elements(reduced_candidate_basis(2, 4).unwrap(), O).unwrap();
        assert!(is_reduced(&r).unwrap());
        let single = GroebnerBasis::from_elements(vec![poly(2, &[(&[1, 1], 1)])], O).unwrap();
        assert!(is_reduced(&single).unwrap());
        let unc = GroebnerBasis {
            order: O,
            elems: vec![],
            certified: false,
            degree_cap: None,
        };
        assert_eq!(is_reduced(&unc), Err(Error::Uncertified));
        assert!(!is_reduced_as_given(&candidate_basis(2, 3).unwrap(), O).unwrap());
    }

    #[test]
    fn initial_ideals() {
        for e in [3, 4] {
            let gb = GroebnerBasis::from_elements(candidate_basis(2, e).unwrap(), O).unwrap();
            assert_eq!(initial_ideal(&gb).unwrap(), predicted_in_ann(2, e).unwrap());
        }
        let gb = GroebnerBasis::from_elements(vec![poly(2, &[(&[1, 0], 1), (&[0, 1], -1)])], O).unwrap();
        assert_eq!(initial_ideal(&gb).unwrap().gens(), &[mono(&[1, 0])]);
        let unc = GroebnerBasis {
            order: O,
            elems: vec![],
            certified: false,
            degree_cap: None,
        };
        assert!(initial_ideal(&unc).is_err());
    }

    #[test]
    fn generator_counts_of_polynomial_ideals() {
        let gb = GroebnerBasis::from_elements(candidate_basis(2, 3).unwrap(), O).unwrap();
        let data = minimal_generator_counts_poly(&gb, 5).unwrap();
        // A codimension-two Gorenstein ideal is a complete intersection, here of degrees 2 and 3.
        assert_eq!((data.r(2), data.r(3), data.r(4), data.r(5)), (1, 1, 0, 0));

        let gb = GroebnerBasis::from_elements(candidate_basis(2, 4).unwrap(), O).unwrap();
        let data = minimal_generator_counts_poly(&gb, 7).unwrap();
        assert!((4..=7).all(|q| data.r(q) == 0));
        assert_eq!(data.r(3), 2);

        let gb = GroebnerBasis::from_elements(vec![Polynomial::var(2, 0)], O).unwrap();
        let data = minimal_generator_counts_poly(&gb, 4).unwrap();
        assert_eq!(data.r(1), 1);
        assert!((2..=4).all(|q| data.r(q) == 0));
    }

    #[test]
    fn capped_buchberger_matches_linear_algebra() {
        let n = 3;
        let gens: Vec<_> = (0..4).map(|k| random_form(n, 3, Seed(100 + k), 50).unwrap()).collect();
        let gb = buchberger(&gens, O, Some(5)).unwrap();
        let init = initial_ideal(&gb).unwrap();
        let oracle = initial_ideal_by_linear_algebra(&gens, O, 5).unwrap();
        assert_eq!(init, oracle);
        assert_eq!(init.gens().len(), 10);
        let mixed = vec![poly(2, &[(&[1, 0], 1), (&[0, 0], 1)])];
        assert!(buchberger(&mixed, O, Some(3)).is_err());
    }

    #[test]
    fn ideal_membership_via_normal_form() {
        let gens = candidate_basis(3, 3).unwrap();
        let gb = GroebnerBasis::from_elements(gens.clone(), O).unwrap();
        let combo = gens[0]
            .mul(&Polynomial::var(3, 2))
            .unwrap()
            .add(&gens[2].scale(&q(-7, 3)).mul(&Polynomial::var(3, 0)).unwrap())
            .unwrap();
        assert!(normal_form(&combo, &gb.elems, O).unwrap().is_zero());
        let outside = Polynomial::monomial(mono(&[0, 0, 1]));
        assert!(!normal_form(&outside, &gb.elems, O).unwrap().is_zero());
    }
}
