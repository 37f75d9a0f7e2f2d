//! Monomial ideals: revlex segments, stability predicates, Hilbert functions,
//! socle degree and the Lefschetz check for multiplication by `xn`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::inverse::HilbertFunction;
use crate::monomial::{monomials_of_degree, Monomial, MonomialOrder};

/// A monomial ideal stored by its minimal generators, by increasing degree and descending in degrevlex within a degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, discarding non-minimal generators.
    pub fn new(n: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        if let Some(bad) = all.iter().find(|m| m.nvars() != n) {
            return Err(Error::Dimension {
                expected: n,
                found: bad.nvars(),
            });
        }
        all.sort_by(|a, b| MonomialOrder::DegRevLex.cmp_unchecked(a, b));
        all.dedup();
        // Ascending degrevlex refines degree, so divisors are seen first.
        let mut min: Vec<Monomial> = Vec::new();
        for m in all {
            if !min.iter().any(|g| g.divides(&m)) {
                min.push(m);
            }
        }
        min.sort_by(|a, b| {
            a.degree()
                .cmp(&b.degree())
                .then(MonomialOrder::DegRevLex.cmp_unchecked(b, a))
        });
        Ok(MonomialIdeal { n, gens: min })
    }

    /// `m^d`, the ideal of all monomials of degree `d`.
    pub fn maximal_power(n: usize, d: u32) -> Self {
        MonomialIdeal {
            n,
            gens: monomials_of_degree(n, d, MonomialOrder::DegRevLex),
        }
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `true` iff every generator of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// Generators of `other` that are not in `self`.
    pub fn missing_from(&self, other: &MonomialIdeal) -> Vec<Monomial> {
        other.gens.iter().filter(|g| !self.contains(g)).cloned().collect()
    }

    /// `true` iff some power of every variable lies in the ideal.
    pub fn is_artinian(&self) -> bool {
        (0..self.n).all(|i| {
            self.gens
                .iter()
                .any(|g| g.exponents().iter().enumerate().all(|(j, &a)| j == i || a == 0))
        })
    }

    fn require_artinian(&self) -> Result<()> {
        if self.is_artinian() {
            Ok(())
        } else {
            Err(Error::Input("R/J is not Artinian".into()))
        }
    }

    /// Monomials of degree `d` in the ideal, descending in degrevlex.
    pub fn degree_piece(&self, d: u32) -> Vec<Monomial> {
        monomials_of_degree(self.n, d, MonomialOrder::DegRevLex)
            .into_iter()
            .filter(|m| self.contains(m))
            .collect()
    }

    /// Monomials of degree `d` outside the ideal, descending in degrevlex.
    pub fn standard_monomials(&self, d: u32) -> Vec<Monomial> {
        monomials_of_degree(self.n, d, MonomialOrder::DegRevLex)
            .into_iter()
            .filter(|m| !self.contains(m))
            .collect()
    }

    /// Closed under `m -> (xj/xi) m` for `j < i`; checked on generators.
    pub fn is_strongly_stable(&self) -> bool {
        self.gens.iter().all(|u| {
            (1..self.n).all(|i| {
                u.exponents()[i] == 0
                    || (0..i).all(|j| {
                        let mut moved = u.clone();
                        let e = moved.exponents_mut();
                        e[i] -= 1;
                        e[j] += 1;
                        self.contains(&moved)
                    })
            })
        })
    }

    /// Every monomial of the same degree preceding a minimal generator is in the ideal.
    pub fn is_weakly_revlex(&self, order: MonomialOrder) -> Result<bool> {
        if order != MonomialOrder::DegRevLex {
            return Err(Error::Input(
                "weakly reverse lexicographic is defined for degrevlex only".into(),
            ));
        }
        let mut by_degree: BTreeMap<u32, Vec<Monomial>> = BTreeMap::new();
        for g in &self.gens {
            by_degree.entry(g.degree()).or_default().push(g.clone());
        }
        for (d, gs) in by_degree {
            let all = monomials_of_degree(self.n, d, order);
            // Every generator must sit after a run of ideal members.
            let smallest = gs
                .iter()
                .map(|g| all.iter().position(|m| m == g).unwrap())
                .max()
                .unwrap();
            if !all[..smallest].iter().all(|m| self.contains(m)) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// For every degree `d <= up_to`, `J_d` is spanned by an initial degrevlex segment.
    pub fn is_revlex_ideal(&self, up_to: u32) -> bool {
        (0..=up_to).all(|d| {
            let all = monomials_of_degree(self.n, d, MonomialOrder::DegRevLex);
            let k = all.iter().take_while(|m| self.contains(m)).count();
            all[k..].iter().all(|m| !self.contains(m))
        })
    }

    pub fn hilbert_function(&self, up_to: u32) -> HilbertFunction {
        HilbertFunction::new((0..=up_to).map(|d| self.standard_monomials(d).len() as u64).collect())
    }

    /// Largest degree with a nonzero standard monomial.
    pub fn socle_degree(&self) -> Result<u32> {
        self.require_artinian()?;
        if self.gens.iter().any(Monomial::is_one) {
            return Err(Error::Input("the unit ideal has no socle".into()));
        }
        let mut d = 0;
        while !self.standard_monomials(d + 1).is_empty() {
            d += 1;
        }
        Ok(d)
    }

    /// Number of minimal generators in each degree.
    pub fn minimal_generator_counts(&self) -> BTreeMap<u32, usize> {
        let mut out = BTreeMap::new();
        for g in &self.gens {
            *out.entry(g.degree()).or_insert(0) += 1;
        }
        out
    }

    /// Whether `* xn^(e-2i) : B_i -> B_{e-i}` is bijective on the monomial bases of
    /// `B = R/J` for every `i < e/2`.
    pub fn lefschetz_check(&self, e: u32) -> Result<bool> {
        self.require_artinian()?;
        let last = self.n - 1;
        for i in 0..e.div_ceil(2) {
            let source = self.standard_monomials(i);
            let target = self.standard_monomials(e - i);
            if source.len() != target.len() {
                return Ok(false);
            }
            let shift = Monomial::var_pow(self.n, last, e - 2 * i);
            if source.iter().any(|m| self.contains(&m.mul(&shift))) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn to_json(&self) -> MonomialIdealJson {
        MonomialIdealJson {
            n: self.n,
            gens: self.gens.iter().map(|g| g.exponents().to_vec()).collect(),
        }
    }

    pub fn from_json(j: &MonomialIdealJson) -> Result<Self> {
        MonomialIdeal::new(j.n, j.gens.iter().map(|g| Monomial::new(g.clone())))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialIdealJson {
    pub n: usize,
    pub gens: Vec<Vec<u32>>,
}

/// The first `count` monomials of degree `d` in `order`.
pub fn revlex_segment(n: usize, d: u32, count: usize, order: MonomialOrder) -> Result<Vec<Monomial>> {
    let all = monomials_of_degree(n, d, order);
    if count > all.len() {
        return Err(Error::Input(format!(
            "segment of {count} exceeds dim R_{d} = {}",
            all.len()
        )));
    }
    Ok(all.into_iter().take(count).collect())
}

/// Degree-`j` monomials in `x1..x_{n-1}`, multiplied by `xn^k`.
fn a_times_xn(n: usize, j: u32, k: u32) -> impl Iterator<Item = Monomial> {
    monomials_of_degree(n - 1, j, MonomialOrder::DegRevLex)
        .into_iter()
        .map(move |m| {
            let mut e = m.exponents().to_vec();
            e.push(k);
            Monomial::new(e)
        })
}

/// The degrevlex initial ideal of `ann(G)` for a generic form `G` of degree `e`,
/// listed degree by degree from the known minimal monomial generators.
pub fn predicted_in_ann(n: usize, e: u32) -> Result<MonomialIdeal> {
    if n < 2 || e < 1 {
        return Err(Error::Input("predicted initial ideal needs n >= 2 and e >= 1".into()));
    }
    let d = e / 2;
    let mut gens = Vec::new();
    if e % 2 == 1 {
        for i in 0..=d + 1 {
            gens.extend(a_times_xn(n, d + 1 - i, 2 * i));
        }
    } else {
        gens.extend(a_times_xn(n, d + 1, 0));
        gens.extend(a_times_xn(n, d, 1));
        for i in 1..=d {
            gens.extend(a_times_xn(n, d - i, 2 * i + 1));
        }
    }
    MonomialIdeal::new(n, gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| mono(g))).unwrap()
    }

    #[test]
    fn constructor_minimalizes_and_sorts() {
        let j = ideal(2, &[&[1, 2], &[2, 0], &[3, 1], &[0, 4], &[2, 0]]);
        assert_eq!(j.gens(), &[mono(&[2, 0]), mono(&[1, 2]), mono(&[0, 4])]);
        assert!(MonomialIdeal::new(2, vec![mono(&[1, 0, 0])]).is_err());
    }

    #[test]
    fn segments() {
        let s = revlex_segment(3, 2, 3, MonomialOrder::DegRevLex).unwrap();
        assert_eq!(s, vec![mono(&[2, 0, 0]), mono(&[1, 1, 0]), mono(&[0, 2, 0])]);
        assert!(revlex_segment(3, 2, 0, MonomialOrder::DegRevLex).unwrap().is_empty());
        assert_eq!(revlex_segment(3, 2, 6, MonomialOrder::Lex).unwrap().len(), 6);
        assert!(revlex_segment(3, 2, 7, MonomialOrder::Lex).is_err());
    }

    #[test]
    fn predicted_examples() {
        assert_eq!(predicted_in_ann(2, 3).unwrap(), ideal(2, &[&[2, 0], &[1, 2], &[0, 4]]));
        assert_eq!(predicted_in_ann(2, 2).unwrap(), ideal(2, &[&[2, 0], &[1, 1], &[0, 3]]));
        assert_eq!(
            predicted_in_ann(3, 2).unwrap(),
            ideal(
                3,
                &[&[2, 0, 0], &[1, 1, 0], &[0, 2, 0], &[1, 0, 1], &[0, 1, 1], &[0, 0, 3]]
            )
        );
        assert!(predicted_in_ann(1, 3).is_err());
        assert!(predicted_in_ann(2, 0).is_err());
    }

    #[test]
    fn strong_stability() {
        assert!(MonomialIdeal::maximal_power(3, 3).is_strongly_stable());
        assert!(!ideal(2, &[&[0, 1]]).is_strongly_stable());
        assert!(predicted_in_ann(2, 3).unwrap().is_strongly_stable());
    }

    #[test]
    fn weak_revlex() {
        let o = MonomialOrder::DegRevLex;
        assert!(!ideal(2, &[&[0, 2]]).is_weakly_revlex(o).unwrap());
        assert!(MonomialIdeal::maximal_power(3, 4).is_weakly_revlex(o).unwrap());
        assert!(predicted_in_ann(3, 5).unwrap().is_weakly_revlex(o).unwrap());
        assert!(ideal(2, &[&[1, 0]]).is_weakly_revlex(MonomialOrder::Lex).is_err());
    }

    #[test]
    fn revlex_ideal() {
        assert!(predicted_in_ann(2, 3).unwrap().is_revlex_ideal(5));
        assert!(!ideal(2, &[&[1, 1]]).is_revlex_ideal(2));
        assert!(MonomialIdeal::maximal_power(3, 2).is_revlex_ideal(5));
    }

    #[test]
    fn hilbert_functions() {
        let j = predicted_in_ann(2, 3).unwrap();
        assert_eq!(j.hilbert_function(5).values, vec![1, 2, 2, 1, 0, 0]);
        assert_eq!(
            MonomialIdeal::maximal_power(2, 2).hilbert_function(3).values,
            vec![1, 2, 0, 0]
        );
        assert_eq!(ideal(2, &[&[0, 0]]).hilbert_function(2).values, vec![0, 0, 0]);
    }

    #[test]
    fn socle_degrees() {
        assert_eq!(predicted_in_ann(2, 3).unwrap().socle_degree().unwrap(), 3);
        assert_eq!(MonomialIdeal::maximal_power(3, 4).socle_degree().unwrap(), 3);
        assert!(ideal(2, &[&[2, 0]]).socle_degree().is_err());
    }

    #[test]
    fn generator_counts() {
        let c = predicted_in_ann(2, 3).unwrap().minimal_generator_counts();
        assert_eq!(c, BTreeMap::from([(2, 1), (3, 1), (4, 1)]));
        assert_eq!(
            MonomialIdeal::maximal_power(3, 4).minimal_generator_counts(),
            BTreeMap::from([(4, 15)])
        );
        let total: usize = predicted_in_ann(3, 4)
            .unwrap()
            .minimal_generator_counts()
            .values()
            .sum();
        assert_eq!(total, 10);
    }

    #[test]
    fn lefschetz_examples() {
        assert!(predicted_in_ann(2, 3).unwrap().lefschetz_check(3).unwrap());
        // B_0 -> B_2 under xn^2 lands in J = (x2).
        assert!(!ideal(2, &[&[0, 1], &[3, 0]]).lefschetz_check(2).unwrap());
        // R/m^d has no symmetric Hilbert function, so the check fails for e = 2d - 2.
        assert!(!MonomialIdeal::maximal_power(2, 3).lefschetz_check(4).unwrap());
        assert!(ideal(2, &[&[1, 0], &[0, 5]]).lefschetz_check(4).unwrap());
        assert!(ideal(2, &[&[0, 1]]).lefschetz_check(2).is_err());
    }

    #[test]
    fn json_round_trip() {
        let j = predicted_in_ann(3, 4).unwrap();
        let back = MonomialIdeal::from_json(&j.to_json()).unwrap();
        assert_eq!(back, j);
        assert_eq!(j.to_json().gens[0], vec![3, 0, 0]);
    }
}
