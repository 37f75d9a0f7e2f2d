#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::Rng;

use apolar::forms::Seed;
use apolar::monomial::{monomials_of_degree, MonomialOrder};
use apolar::{Monomial, MonomialIdeal};

/// Smallest strongly stable set of monomials containing `seeds`.
pub fn borel_closure(seeds: impl IntoIterator<Item = Monomial>) -> BTreeSet<Monomial> {
    let mut out = BTreeSet::new();
    let mut stack: Vec<Monomial> = seeds.into_iter().collect();
    while let Some(m) = stack.pop() {
        if !out.insert(m.clone()) {
            continue;
        }
        let e = m.exponents();
        for i in 1..e.len() {
            if e[i] == 0 {
                continue;
            }
            for j in 0..i {
                let mut f = e.to_vec();
                f[i] -= 1;
                f[j] += 1;
                stack.push(Monomial::new(f));
            }
        }
    }
    out
}

/// A random strongly stable Artinian ideal generated in degrees `>= d` that
/// contains every degree-`d` monomial prime to `x_n`.
pub fn random_hypothesis_ideal(n: usize, d: u32, seed: Seed) -> MonomialIdeal {
    let mut rng = seed.rng();
    let mut seeds: Vec<Monomial> = monomials_of_degree(n, d, MonomialOrder::DegRevLex)
        .into_iter()
        .filter(|m| m.exponents()[n - 1] == 0)
        .collect();
    let top = d + rng.gen_range(0..=4);
    for _ in 0..rng.gen_range(0..5) {
        let deg = rng.gen_range(d..=top);
        let mut e = vec![0u32; n];
        for _ in 0..deg {
            e[rng.gen_range(0..n)] += 1;
        }
        seeds.push(Monomial::new(e));
    }
    seeds.push(Monomial::var_pow(n, n - 1, top));
    MonomialIdeal::new(n, borel_closure(seeds)).unwrap()
}

/// A random strongly stable ideal with generators of degree `1..=max_deg`.
pub fn random_strongly_stable(n: usize, max_deg: u32, seed: Seed) -> MonomialIdeal {
    let mut rng = seed.rng();
    let seeds: Vec<Monomial> = (0..rng.gen_range(1..4))
        .map(|_| {
            let deg = rng.gen_range(1..=max_deg);
            let mut e = vec![0u32; n];
            for _ in 0..deg {
                e[rng.gen_range(0..n)] += 1;
            }
            Monomial::new(e)
        })
        .collect();
    MonomialIdeal::new(n, borel_closure(seeds)).unwrap()
}

/// A random monomial ideal with no stability assumption.
pub fn random_monomial_ideal(n: usize, max_deg: u32, seed: Seed) -> MonomialIdeal {
    let mut rng = seed.rng();
    let gens: Vec<Monomial> = (0..rng.gen_range(1..6))
        .map(|_| Monomial::new((0..n).map(|_| rng.gen_range(0..=max_deg)).collect()))
        .filter(|m| !m.is_one())
        .collect();
    let gens = if gens.is_empty() {
        vec![Monomial::var(n, 0)]
    } else {
        gens
    };
    MonomialIdeal::new(n, gens).unwrap()
}
