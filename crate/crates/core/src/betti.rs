//! Graded Betti numbers of `R/J` for monomial ideals `J`.
//!
//! Tables follow the Macaulay2 layout: entry `(p, q)` is `beta_{p,p+q}(R/J)`, so a
//! minimal generator of degree `j` shows up in row `q = j - 1` of column `1`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::linalg;
use crate::monomial::{binomial, Monomial};
use crate::Rational;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    /// `(p, q) -> beta_{p,p+q}`, zero entries omitted.
    pub entries: BTreeMap<(u32, u32), u64>,
    pub totals: BTreeMap<u32, u64>,
}

impl BettiTable {
    pub fn from_entries(entries: impl IntoIterator<Item = ((u32, u32), u64)>) -> Self {
        let mut t = BettiTable::default();
        for (k, v) in entries {
            if v > 0 {
                *t.entries.entry(k).or_insert(0) += v;
            }
        }
        for (&(p, _), &v) in &t.entries {
            *t.totals.entry(p).or_insert(0) += v;
        }
        t
    }

    pub fn get(&self, p: u32, q: u32) -> u64 {
        self.entries.get(&(p, q)).copied().unwrap_or(0)
    }

    pub fn total(&self, p: u32) -> u64 {
        self.totals.get(&p).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn rows(&self) -> Option<(u32, u32)> {
        let lo = self.entries.keys().map(|&(_, q)| q).min()?;
        let hi = self.entries.keys().map(|&(_, q)| q).max()?;
        Some((lo, hi))
    }

    pub fn max_p(&self) -> u32 {
        self.entries.keys().map(|&(p, _)| p).max().unwrap_or(0)
    }

    pub fn to_json(&self) -> BettiTableJson {
        BettiTableJson {
            totals: self.totals.clone(),
            entries: self
                .entries
                .iter()
                .map(|(&(p, q), &value)| BettiEntry { p, q, value })
                .collect(),
        }
    }

    pub fn from_json(j: &BettiTableJson) -> Result<Self> {
        let t = BettiTable::from_entries(j.entries.iter().map(|e| ((e.p, e.q), e.value)));
        let stated: BTreeMap<u32, u64> = j.totals.iter().filter(|(_, &v)| v > 0).map(|(&p, &v)| (p, v)).collect();
        if stated != t.totals {
            return Err(Error::Parse("Betti totals disagree with the entries".into()));
        }
        Ok(t)
    }

    /// Macaulay2-style text: a header of homological degrees, a `total:` row, then
    /// one row per `q` with `.` for zero.
    pub fn render_text(&self) -> String {
        let Some((lo, hi)) = self.rows() else {
            return "total: 0\n".to_string();
        };
        let ps: Vec<u32> = (1..=self.max_p()).collect();
        let mut rows: Vec<(String, Vec<String>)> = Vec::new();
        rows.push((String::new(), ps.iter().map(u32::to_string).collect()));
        rows.push(("total:".into(), ps.iter().map(|&p| self.total(p).to_string()).collect()));
        for q in lo..=hi {
            let cells = ps
                .iter()
                .map(|&p| match self.get(p, q) {
                    0 => ".".to_string(),
                    v => v.to_string(),
                })
                .collect();
            rows.push((format!("{q}:"), cells));
        }
        let label_w = rows.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
        let widths: Vec<usize> = (0..ps.len())
            .map(|c| rows.iter().map(|(_, r)| r[c].len()).max().unwrap_or(1))
            .collect();
        let mut out = String::new();
        for (label, cells) in &rows {
            let _ = write!(out, "{label:>label_w$}");
            for (cell, w) in cells.iter().zip(&widths) {
                let _ = write!(out, " {cell:>w$}");
            }
            out.push('\n');
        }
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.render_text(),
            Format::Json => serde_json::to_string_pretty(&self.to_json()).expect("serializable") + "\n",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Json,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            _ => Err(Error::Parse(format!("unknown format `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTableJson {
    pub totals: BTreeMap<u32, u64>,
    pub entries: Vec<BettiEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub p: u32,
    pub q: u32,
    pub value: u64,
}

/// The Eliahou–Kervaire numbers: a minimal generator `u` contributes
/// `binomial(m(u) - 1, p - 1)` to `beta_{p, p + deg u - 1}`, where `m(u)` is the
/// largest index of a variable dividing `u`.
pub fn ek_betti(j: &MonomialIdeal) -> Result<BettiTable> {
    if !j.is_strongly_stable() {
        return Err(Error::Precondition(
            "Eliahou–Kervaire numbers need a strongly stable ideal".into(),
        ));
    }
    if j.gens().iter().any(Monomial::is_one) {
        return Ok(BettiTable::default());
    }
    let mut entries = Vec::new();
    for u in j.gens() {
        let m = u.max_var() as u64;
        for p in 1..=m {
            entries.push(((p as u32, u.degree() - 1), binomial(m - 1, p - 1)));
        }
    }
    Ok(BettiTable::from_entries(entries))
}

/// `sum_{i=1}^{n} binomial(d+i-2, d-1) * binomial(i-1, p-1)`, the total Betti number
/// `beta_p(R/m^d)`. Zero for `p = 0` or `d = 0`.
pub fn betti_formula(n: usize, d: u32, p: u32) -> u64 {
    if p == 0 || d == 0 {
        return 0;
    }
    let (d, p) = (d as u64, p as u64);
    (1..=n as u64)
        .map(|i| binomial(d + i - 2, d - 1) * binomial(i - 1, p - 1))
        .sum()
}

/// Closed-form graded Betti numbers of `R/in(ann(G))` for a generic form `G` of
/// degree `e`, read off from the minimal generators of the predicted initial ideal.
pub fn graded_betti_in_ann_g(n: usize, e: u32) -> Result<BettiTable> {
    if n < 2 || e < 1 {
        return Err(Error::Input("graded Betti formula needs n >= 2 and e >= 1".into()));
    }
    let d = (e / 2) as u64;
    let nn = n as u64;
    let mut entries = Vec::new();
    for p in 1..=nn {
        // Generators of degree d + 1: every monomial prime to x_n, plus x_n A_d when e is even.
        let mut low: u64 = (1..nn).map(|i| binomial(d + i - 1, d) * binomial(i - 1, p - 1)).sum();
        if e.is_multiple_of(2) {
            low += binomial(d + nn - 2, d) * binomial(nn - 1, p - 1);
        }
        entries.push(((p as u32, d as u32), low));
        for j in d + 2..=e as u64 + 1 {
            let a = binomial(e as u64 + nn - 1 - j, nn - 2);
            entries.push(((p as u32, (j - 1) as u32), a * binomial(nn - 1, p - 1)));
        }
    }
    Ok(BettiTable::from_entries(entries))
}

/// Graded Betti numbers of `R/J` for an arbitrary monomial ideal, from the upper
/// Koszul simplicial complexes `K^a = { F : x^(a - F) in J }`:
/// `beta_{p,a}(R/J) = dim H~_{p-2}(K^a; Q)`.
pub fn koszul_betti(j: &MonomialIdeal) -> BettiTable {
    let n = j.nvars();
    if j.gens().is_empty() || j.gens().iter().any(Monomial::is_one) {
        return BettiTable::default();
    }
    let mut top = vec![0u32; n];
    for g in j.gens() {
        for (t, &x) in top.iter_mut().zip(g.exponents()) {
            *t = (*t).max(x);
        }
    }
    let mut entries = Vec::new();
    let mut a = vec![0u32; n];
    loop {
        let alpha = Monomial::new(a.clone());
        if j.contains(&alpha) {
            let deg = alpha.degree();
            for (s, h) in upper_koszul_homology(j, &a).into_iter().enumerate() {
                // Faces of size s carry H~_{s-1}, which is beta_{s+1}.
                if h > 0 {
                    let p = s as u32 + 1;
                    entries.push(((p, deg - p), h));
                }
            }
        }
        // Odometer over the box 0 <= a <= top.
        let mut k = 0;
        while k < n && a[k] == top[k] {
            a[k] = 0;
            k += 1;
        }
        if k == n {
            break;
        }
        a[k] += 1;
    }
    BettiTable::from_entries(entries)
}

/// Reduced homology dimensions of `K^a`, indexed by face size (`H~_{s-1}` at `s`).
fn upper_koszul_homology(j: &MonomialIdeal, a: &[u32]) -> Vec<u64> {
    let n = a.len();
    let in_complex = |mask: usize| {
        let mut b = a.to_vec();
        for (i, x) in b.iter_mut().enumerate() {
            if mask >> i & 1 == 1 {
                if *x == 0 {
                    return false;
                }
                *x -= 1;
            }
        }
        j.contains(&Monomial::new(b))
    };
    let mut by_size: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for mask in 0..1usize << n {
        if in_complex(mask) {
            by_size[mask.count_ones() as usize].push(mask);
        }
    }
    // rank of the boundary from size s to size s - 1
    let mut ranks = vec![0usize; n + 2];
    for s in 1..=n {
        if by_size[s].is_empty() || by_size[s - 1].is_empty() {
            continue;
        }
        let rows: Vec<Vec<Rational>> = by_size[s - 1]
            .iter()
            .map(|&lower| {
                by_size[s]
                    .iter()
                    .map(|&upper| {
                        if upper & lower != lower {
                            return Rational::from_integer(0.into());
                        }
                        let v = (upper ^ lower).trailing_zeros();
                        let before = (upper & ((1 << v) - 1)).count_ones();
                        Rational::from_integer(if before % 2 == 0 { 1.into() } else { (-1).into() })
                    })
                    .collect()
            })
            .collect();
        ranks[s] = linalg::rank(&rows, by_size[s].len());
    }
    (0..=n)
        .map(|s| (by_size[s].len() - ranks[s] - ranks[s + 1]) as u64)
        .collect()
}

/// Coefficients of `K(t) = 1 + sum (-1)^p beta_{p,p+q} t^{p+q}`.
pub fn k_polynomial_from_betti(t: &BettiTable) -> Vec<i64> {
    let top = t.entries.keys().map(|&(p, q)| (p + q) as usize).max().unwrap_or(0);
    let mut k = vec![0i64; top + 1];
    k[0] = 1;
    for (&(p, q), &v) in &t.entries {
        let sign = if p % 2 == 0 { 1 } else { -1 };
        k[(p + q) as usize] += sign * v as i64;
    }
    k
}

/// `HS(R/J)(t) * (1 - t)^n` truncated to degree `up_to`.
pub fn k_polynomial_from_hilbert(j: &MonomialIdeal, up_to: u32) -> Vec<i64> {
    let n = j.nvars() as u64;
    let hf = j.hilbert_function(up_to);
    (0..=up_to as u64)
        .map(|k| {
            (0..=k.min(n))
                .map(|i| {
                    let c = binomial(n, i) as i64 * hf.at((k - i) as usize) as i64;
                    if i % 2 == 0 {
                        c
                    } else {
                        -c
                    }
                })
                .sum()
        })
        .collect()
}

/// The K-polynomial read from `t` agrees with the one from the Hilbert function of `R/J`.
pub fn k_polynomial_consistent(j: &MonomialIdeal, t: &BettiTable) -> bool {
    if j.gens().iter().any(Monomial::is_one) {
        return t.is_empty();
    }
    let from_betti = k_polynomial_from_betti(t);
    let from_hf = k_polynomial_from_hilbert(j, from_betti.len() as u32 - 1);
    from_betti == from_hf
}
