//! Graded Betti numbers of cut ideals through Koszul homology.
//!
//! Pipeline: split off the linear forms of `I`, then cut `S'/I'` down to an
//! Artinian ring by `dim S'/I'` random linear forms. The cut is accepted only
//! when the Artinian quotient has length equal to the multiplicity of
//! `S'/I'`, which holds exactly when the forms are a regular sequence, so the
//! Betti numbers are unchanged. Koszul homology of the Artinian ring is a
//! finite computation. When no certified cut exists (non Cohen–Macaulay
//! quotients) the Koszul complex of `S'/I'` itself is used, degree by degree,
//! and the table is marked truncated.

use super::CutIdeal;
use crate::error::{Error, Result};
use crate::poly::{
    buchberger, buchberger_with, krull_dimension, normal_form, BuchbergerOptions, Echelon,
    GroebnerBasis, HilbertSeries, Monomial, PolyRing, Polynomial, PrimeField, TermOrder,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write;

pub const DEFAULT_SEED: u64 = 0x5eed;

/// Largest ring (after splitting off linear forms) for which a failed
/// reduction falls back to the full direct Koszul complex.
pub const DIRECT_MAX_VARS: usize = 12;

/// Minimal generator count per degree, with one minimal generating set drawn
/// from the reduced Gröbner basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalGenerators {
    pub by_degree: BTreeMap<u32, usize>,
    pub polys: Vec<Polynomial>,
}

impl MinimalGenerators {
    pub fn total(&self) -> usize {
        self.by_degree.values().sum()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.by_degree.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.by_degree.keys().next_back().copied()
    }
}

/// `β_{0,j}(I) = dim I_j / (S_1 I_{j-1})`, from normal forms of the degree-`j`
/// basis elements modulo a degree-truncated basis of the lower part.
pub fn minimal_generators(ideal: &CutIdeal) -> Result<MinimalGenerators> {
    minimal_generators_of(ideal.ring().ring(), ideal.gb())
}

pub(crate) fn minimal_generators_of(ring: &PolyRing, gb: &GroebnerBasis) -> Result<MinimalGenerators> {
    let mut by_degree = BTreeMap::new();
    let mut polys: Vec<Polynomial> = Vec::new();
    let degrees: BTreeSet<u32> = gb.generators().iter().filter_map(|g| g.degree()).collect();
    for d in degrees {
        if !gb.generators().iter().all(|g| g.is_homogeneous()) {
            return Err(Error::NotHomogeneous);
        }
        let lower = buchberger_with(ring, &polys, BuchbergerOptions { degree_bound: Some(d as u64) })?;
        let mut cols: HashMap<Monomial, usize> = HashMap::new();
        let mut rows = Vec::new();
        let candidates: Vec<&Polynomial> =
            gb.generators().iter().filter(|g| g.degree() == Some(d)).collect();
        for g in &candidates {
            let nf = normal_form(g, &lower)?;
            let row: Vec<(usize, u32)> = nf
                .terms()
                .iter()
                .map(|(m, c)| {
                    let n = cols.len();
                    (*cols.entry(m.clone()).or_insert(n), *c)
                })
                .collect();
            rows.push(row);
        }
        let mut ech = Echelon::new(*ring.field(), cols.len().max(1));
        let mut count = 0;
        for (g, row) in candidates.iter().zip(&rows) {
            if ech.insert(row) {
                polys.push((*g).clone());
                count += 1;
            }
        }
        if count > 0 {
            by_degree.insert(d, count);
        }
    }
    Ok(MinimalGenerators { by_degree, polys })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiOptions {
    /// Seed for the random linear forms of the Artinian reduction.
    pub seed: u64,
    /// Random reductions tried before falling back to the direct complex.
    pub attempts: usize,
    /// Homological bound for the direct complex (ideal convention).
    pub direct_i_max: Option<usize>,
    /// Largest `j - i` row of `S/I` explored by the direct complex.
    pub direct_max_row: usize,
    /// Stop at homological degree `i` (ideal convention); the table is then
    /// marked truncated.
    pub i_max: Option<usize>,
}

impl Default for BettiOptions {
    fn default() -> Self {
        BettiOptions {
            seed: DEFAULT_SEED,
            attempts: 4,
            direct_i_max: None,
            direct_max_row: 12,
            i_max: None,
        }
    }
}

/// How the Betti numbers were obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionReport {
    /// Independent linear forms in `I`, split off first.
    pub linear_forms: usize,
    /// Variables left after splitting them off.
    pub reduced_vars: usize,
    /// Krull dimension of the quotient.
    pub dimension: usize,
    /// Multiplicity of the quotient.
    pub multiplicity: i64,
    /// Length of the certified Artinian reduction, if one was found.
    pub artinian_length: Option<i64>,
    pub attempts: usize,
}

impl ReductionReport {
    pub fn certified(&self) -> bool {
        self.artinian_length == Some(self.multiplicity)
    }
}

/// Graded Betti numbers `β_{i,j}` of the ideal `I` (so `β_{0,j}` counts
/// minimal generators of degree `j`), over `F_p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    p: u32,
    nvars: usize,
    entries: BTreeMap<(usize, usize), u64>,
    truncated: bool,
    report: Option<ReductionReport>,
}

/// `(reg, projdim, mindeg, maxdeg)` of the ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Invariants {
    pub reg: usize,
    pub projdim: usize,
    pub mindeg: usize,
    pub maxdeg: usize,
}

impl BettiTable {
    /// From ideal-convention entries; zeros are dropped.
    pub fn from_entries(
        p: u32,
        nvars: usize,
        entries: impl IntoIterator<Item = ((usize, usize), u64)>,
        truncated: bool,
    ) -> BettiTable {
        BettiTable {
            p,
            nvars,
            entries: entries.into_iter().filter(|(_, v)| *v != 0).collect(),
            truncated,
            report: None,
        }
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<(usize, usize), u64> {
        &self.entries
    }

    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    pub fn report(&self) -> Option<&ReductionReport> {
        self.report.as_ref()
    }

    /// `β_i = Σ_j β_{i,j}` for `i = 0..=projdim`.
    pub fn totals(&self) -> Vec<u64> {
        let len = self.entries.keys().map(|k| k.0 + 1).max().unwrap_or(0);
        let mut t = vec![0; len];
        for (&(i, _), &v) in &self.entries {
            t[i] += v;
        }
        t
    }

    /// Totals of `S/I`, starting with `β_0 = 1`.
    pub fn quotient_totals(&self) -> Vec<u64> {
        std::iter::once(1).chain(self.totals()).collect()
    }

    /// `None` for the zero ideal.
    pub fn invariants(&self) -> Option<Invariants> {
        if self.entries.is_empty() {
            return None;
        }
        let reg = self.entries.keys().map(|&(i, j)| j - i).max()?;
        let projdim = self.entries.keys().map(|&(i, _)| i).max()?;
        let gens = self.entries.keys().filter(|k| k.0 == 0).map(|k| k.1);
        let mindeg = gens.clone().min()?;
        let maxdeg = gens.max()?;
        Some(Invariants {
            reg,
            projdim,
            mindeg,
            maxdeg,
        })
    }

    /// `depth S/I = #vars - projdim(S/I)`.
    pub fn depth(&self) -> usize {
        self.nvars - self.invariants().map_or(0, |inv| inv.projdim + 1)
    }

    /// Whether all entries sit on `j = i + d` for a single `d`.
    pub fn linear_strand(&self) -> Option<usize> {
        let ds: BTreeSet<usize> = self.entries.keys().map(|&(i, j)| j - i).collect();
        (ds.len() == 1).then(|| *ds.iter().next().unwrap())
    }

    /// Entrywise `self <= other`.
    pub fn dominated_by(&self, other: &BettiTable) -> bool {
        self.entries.iter().all(|(&(i, j), &v)| v <= other.get(i, j))
    }

    /// Betti diagram of `S/I`: column `i`, row `j - i`, `.` for zero.
    pub fn diagram(&self) -> String {
        let mut q: BTreeMap<(usize, usize), u64> = BTreeMap::new();
        q.insert((0, 0), 1);
        for (&(i, j), &v) in &self.entries {
            q.insert((i + 1, j), v);
        }
        let ncols = q.keys().map(|k| k.0).max().unwrap() + 1;
        let nrows = q.keys().map(|&(i, j)| j - i).max().unwrap() + 1;
        let totals = self.quotient_totals();
        let cell = |i: usize, r: usize| match q.get(&(i, i + r)) {
            Some(v) => v.to_string(),
            None => ".".to_string(),
        };
        let widths: Vec<usize> = (0..ncols)
            .map(|i| {
                let body = (0..nrows).map(|r| cell(i, r).len()).max().unwrap_or(1);
                body.max(totals[i].to_string().len()).max(i.to_string().len())
            })
            .collect();
        let label_w = "total:".len().max(format!("{}:", nrows - 1).len());
        let mut out = String::new();
        let line = |out: &mut String, label: &str, cells: Vec<String>| {
            write!(out, "{label:>label_w$}").unwrap();
            for (c, w) in cells.iter().zip(&widths) {
                write!(out, " {c:>w$}").unwrap();
            }
            out.push('\n');
        };
        line(&mut out, "", (0..ncols).map(|i| i.to_string()).collect());
        line(&mut out, "total:", totals.iter().map(|t| t.to_string()).collect());
        for r in 0..nrows {
            line(&mut out, &format!("{r}:"), (0..ncols).map(|i| cell(i, r)).collect());
        }
        out
    }

    /// `{graph, p, betti: [[i, j, value]], reg, projdim, mindeg, maxdeg, truncated}`.
    pub fn to_json(&self, graph: &str) -> Value {
        let inv = self.invariants();
        json!({
            "graph": graph,
            "p": self.p,
            "betti": self.entries.iter().map(|(&(i, j), &v)| json!([i, j, v])).collect::<Vec<_>>(),
            "reg": inv.map(|x| x.reg),
            "projdim": inv.map(|x| x.projdim),
            "mindeg": inv.map(|x| x.mindeg),
            "maxdeg": inv.map(|x| x.maxdeg),
            "truncated": self.truncated,
        })
    }
}

/// The ring `S'` left after splitting off linear forms, with `I'` in it.
struct Split {
    linear: usize,
    ring: PolyRing,
    gb: GroebnerBasis,
}

fn split_linear(ideal: &CutIdeal) -> Result<Split> {
    let ring = ideal.ring().ring();
    let gens = ideal.generators();
    let lead_vars: BTreeSet<usize> = gens
        .iter()
        .filter(|g| g.degree() == Some(1))
        .map(|g| g.leading_monomial().unwrap().support()[0])
        .collect();
    let keep: Vec<usize> = (0..ring.nvars()).filter(|v| !lead_vars.contains(v)).collect();
    let small = PolyRing::new(
        *ring.field(),
        keep.iter().map(|&i| ring.names()[i].clone()).collect(),
        TermOrder::degrevlex(),
    );
    let rest: Vec<Polynomial> = gens
        .iter()
        .filter(|g| g.degree() != Some(1))
        .map(|g| {
            // reduced basis: no other element mentions a linear leading variable
            debug_assert!(g
                .terms()
                .iter()
                .all(|(m, _)| lead_vars.iter().all(|&v| m.exponents()[v] == 0)));
            small.from_terms(g.terms().iter().map(|(m, c)| (m.permuted(&keep), *c)).collect())
        })
        .collect();
    let gb = buchberger(&small, &rest)?;
    Ok(Split {
        linear: lead_vars.len(),
        ring: small,
        gb,
    })
}

/// A graded quotient `T/J` with standard-monomial bases per degree.
struct Quotient {
    ring: PolyRing,
    gb: GroebnerBasis,
    basis: Vec<Vec<Monomial>>,
    index: Vec<HashMap<Monomial, usize>>,
}

impl Quotient {
    fn new(ring: PolyRing, gb: GroebnerBasis) -> Quotient {
        let one = Monomial::one(ring.nvars());
        let lms = gb.leading_monomials();
        let (basis, index) = if lms.iter().any(|m| m.is_one()) {
            (vec![vec![]], vec![HashMap::new()])
        } else {
            (vec![vec![one.clone()]], vec![HashMap::from([(one, 0)])])
        };
        Quotient {
            ring,
            gb,
            basis,
            index,
        }
    }

    /// Extends the bases through degree `d`.
    fn grow_to(&mut self, d: usize) {
        let n = self.ring.nvars();
        let lms = self.gb.leading_monomials();
        while self.basis.len() <= d {
            let prev = self.basis.last().unwrap();
            let mut next: BTreeSet<Vec<u16>> = BTreeSet::new();
            for m in prev {
                for v in 0..n {
                    let mm = m.mul(&Monomial::var(n, v));
                    if !lms.iter().any(|l| l.divides(&mm)) {
                        next.insert(mm.exponents().to_vec());
                    }
                }
            }
            let mut mons: Vec<Monomial> = next.into_iter().map(Monomial::from_exponents).collect();
            mons.sort_by(|a, b| self.ring.cmp(b, a));
            let idx = mons.iter().enumerate().map(|(k, m)| (m.clone(), k)).collect();
            self.basis.push(mons);
            self.index.push(idx);
        }
    }

    fn dim(&self, d: usize) -> usize {
        self.basis.get(d).map_or(0, |b| b.len())
    }

    fn top_degree(&self) -> Option<usize> {
        (0..self.basis.len()).rev().find(|&d| !self.basis[d].is_empty())
    }

    /// Coordinates of `x_v * basis[d][k]` in degree `d + 1`.
    fn times_var(&self, v: usize, d: usize, k: usize) -> Vec<(usize, u32)> {
        let n = self.ring.nvars();
        let m = self.basis[d][k].mul(&Monomial::var(n, v));
        if let Some(&c) = self.index[d + 1].get(&m) {
            return vec![(c, 1)];
        }
        let nf = normal_form(&self.ring.monomial(m), &self.gb).expect("same ring");
        nf.terms()
            .iter()
            .map(|(mm, c)| (self.index[d + 1][mm], *c))
            .collect()
    }
}

fn subsets_of_size(r: usize, i: usize) -> Vec<u32> {
    (0u32..1 << r).filter(|s| s.count_ones() as usize == i).collect()
}

/// `β_{i,j}` of the quotient (over the quotient ring's own polynomial ring)
/// for `i <= i_max` and `j - i <= max_row`; the bases must reach degree
/// `max_row + 1`.
fn koszul_quotient_betti(
    q: &mut Quotient,
    i_max: usize,
    max_row: usize,
) -> BTreeMap<(usize, usize), u64> {
    let r = q.ring.nvars();
    let field = *q.ring.field();
    q.grow_to(max_row + 1);
    let subsets: Vec<Vec<u32>> = (0..=r.min(i_max + 1)).map(|i| subsets_of_size(r, i)).collect();
    let pos: Vec<HashMap<u32, usize>> = subsets
        .iter()
        .map(|s| s.iter().enumerate().map(|(k, &m)| (m, k)).collect())
        .collect();
    let mut mult_cache: HashMap<(usize, usize, usize), Vec<(usize, u32)>> = HashMap::new();
    // rank of ∂: K_{i, i+a} -> K_{i-1, i+a}, i.e. ∧^i ⊗ A_a -> ∧^{i-1} ⊗ A_{a+1}
    let mut rank_of = |i: usize, a: usize| -> usize {
        if i == 0 || i > r || q.dim(a) == 0 || q.dim(a + 1) == 0 {
            return 0;
        }
        let (da, db) = (q.dim(a), q.dim(a + 1));
        let ncols = subsets[i - 1].len() * db;
        let mut ech = Echelon::new(field, ncols);
        for &s in &subsets[i] {
            for k in 0..da {
                let mut row = Vec::new();
                let mut sign = false;
                for v in 0..r {
                    if s >> v & 1 == 0 {
                        continue;
                    }
                    let target = pos[i - 1][&(s & !(1 << v))];
                    let prod = mult_cache
                        .entry((v, a, k))
                        .or_insert_with(|| q.times_var(v, a, k));
                    for &(c, val) in prod.iter() {
                        let val = if sign { field.neg(val) } else { val };
                        row.push((target * db + c, val));
                    }
                    sign = !sign;
                }
                ech.insert(&row);
            }
        }
        ech.rank()
    };
    let mut out = BTreeMap::new();
    for a in 0..=max_row {
        for i in 0..=r.min(i_max) {
            let dim = subsets[i].len() * q.dim(a);
            if dim == 0 {
                continue;
            }
            // ∂_{i,j} leaves K_i with source degree a; ∂_{i+1,j} arrives from K_{i+1} with degree a - 1
            let out_rank = rank_of(i, a);
            let in_rank = if a >= 1 { rank_of(i + 1, a - 1) } else { 0 };
            let b = dim - out_rank - in_rank;
            if b > 0 {
                out.insert((i, i + a), b as u64);
            }
        }
    }
    out
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, t| acc * (n - t) as u64 / (t + 1) as u64)
}

/// Tensoring with the Koszul complex on `l` linear forms.
fn convolve_linear(q: &BTreeMap<(usize, usize), u64>, l: usize) -> BTreeMap<(usize, usize), u64> {
    let mut out = BTreeMap::new();
    for (&(i, j), &v) in q {
        for k in 0..=l {
            *out.entry((i + k, j + k)).or_insert(0) += v * binomial(l, k);
        }
    }
    out
}

fn to_ideal_convention(q: &BTreeMap<(usize, usize), u64>) -> Vec<((usize, usize), u64)> {
    q.iter()
        .filter(|(&(i, _), _)| i >= 1)
        .map(|(&(i, j), &v)| ((i - 1, j), v))
        .collect()
}

/// Cuts `S'/I'` by `r = N' - dim` random linear forms: substitutes
/// `x_i -> Σ_k a_{ik} y_k` into the generators of `I'`.
fn artinian_reduction(
    ring: &PolyRing,
    gens: &[Polynomial],
    r: usize,
    rng: &mut ChaCha8Rng,
) -> Result<(PolyRing, GroebnerBasis)> {
    let field = ring.field();
    let p = field.characteristic();
    let target = PolyRing::new(
        *field,
        (1..=r).map(|k| format!("y{k}")).collect(),
        TermOrder::degrevlex(),
    );
    let images: Vec<Polynomial> = (0..ring.nvars())
        .map(|_| {
            target.from_terms(
                (0..r)
                    .map(|k| (Monomial::var(r, k), rng.gen_range(1..p)))
                    .collect(),
            )
        })
        .collect();
    let subst: Vec<Polynomial> = gens
        .iter()
        .map(|g| ring.substitute(g, &images, &target))
        .collect();
    let gb = buchberger(&target, &subst)?;
    Ok((target, gb))
}

pub fn graded_betti(ideal: &CutIdeal) -> Result<BettiTable> {
    graded_betti_with(ideal, &BettiOptions::default())
}

pub fn graded_betti_with(ideal: &CutIdeal, opts: &BettiOptions) -> Result<BettiTable> {
    let p = ideal.ring().ring().field().characteristic();
    let nvars = ideal.ring().nvars();
    let split = split_linear(ideal)?;
    let dimension = krull_dimension(&split.gb);
    let hs = HilbertSeries::of_basis(&split.gb);
    let mut report = ReductionReport {
        linear_forms: split.linear,
        reduced_vars: split.ring.nvars(),
        dimension,
        multiplicity: hs.multiplicity(),
        artinian_length: None,
        attempts: 0,
    };
    if split.gb.generators().is_empty() {
        report.artinian_length = Some(1);
        let q = BTreeMap::from([((0, 0), 1)]);
        let full = convolve_linear(&q, split.linear);
        let entries = to_ideal_convention(&full)
            .into_iter()
            .filter(|((i, _), _)| opts.i_max.map_or(true, |m| *i <= m));
        let truncated = opts.i_max.is_some_and(|m| m + 1 < split.linear);
        let mut t = BettiTable::from_entries(p, nvars, entries, truncated);
        t.report = Some(report);
        return Ok(t);
    }
    let mins = minimal_generators_of(&split.ring, &split.gb)?;
    let r = split.ring.nvars() - dimension;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..opts.attempts {
        report.attempts += 1;
        let (target, gb) = artinian_reduction(&split.ring, &mins.polys, r, &mut rng)?;
        if krull_dimension(&gb) != 0 {
            continue;
        }
        let length = HilbertSeries::of_basis(&gb).multiplicity();
        report.artinian_length = Some(length);
        if length != report.multiplicity {
            // length exceeds the multiplicity for every system of parameters
            // when the quotient is not Cohen-Macaulay; retrying cannot help
            break;
        }
        let mut q = Quotient::new(target, gb);
        q.grow_to(0);
        let mut d = 0;
        while q.dim(d) > 0 {
            d += 1;
            q.grow_to(d);
        }
        let top = q.top_degree().unwrap_or(0);
        let bound = opts.i_max.map_or(r, |i| (i + 1).min(r));
        let betti = koszul_quotient_betti(&mut q, bound, top);
        let full = convolve_linear(&betti, split.linear);
        let entries = to_ideal_convention(&full)
            .into_iter()
            .filter(|((i, _), _)| opts.i_max.map_or(true, |m| *i <= m));
        let truncated = opts.i_max.is_some_and(|m| m + 1 < nvars);
        let mut t = BettiTable::from_entries(p, nvars, entries, truncated);
        t.report = Some(report);
        return Ok(t);
    }
    let mut t = if split.ring.nvars() > DIRECT_MAX_VARS && opts.direct_i_max.is_none() {
        generators_only(&split, &mins, nvars)
    } else {
        direct(&split, opts)?
    };
    t.report = Some(report);
    Ok(t)
}

/// `β_0` alone, for rings too large for the direct complex.
fn generators_only(split: &Split, mins: &MinimalGenerators, nvars: usize) -> BettiTable {
    let mut entries: Vec<((usize, usize), u64)> = mins
        .by_degree
        .iter()
        .map(|(&d, &c)| ((0, d as usize), c as u64))
        .collect();
    entries.push(((0, 1), split.linear as u64));
    BettiTable::from_entries(split.ring.field().characteristic(), nvars, entries, true)
}

fn direct(split: &Split, opts: &BettiOptions) -> Result<BettiTable> {
    let n = split.ring.nvars();
    let i_max_q = opts.direct_i_max.map_or(n, |i| (i + 1).min(n));
    let mut q = Quotient::new(split.ring.clone(), split.gb.clone());
    let mut acc: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    let mut last_nonzero = 0;
    for row in 0..=opts.direct_max_row {
        let b = koszul_quotient_betti(&mut q, i_max_q, row);
        let this_row: Vec<_> = b.iter().filter(|(&(i, j), _)| j - i == row).collect();
        if this_row.is_empty() && row > last_nonzero {
            break;
        }
        for (&k, &v) in this_row {
            acc.insert(k, v);
            last_nonzero = row;
        }
    }
    let full = convolve_linear(&acc, split.linear);
    Ok(BettiTable::from_entries(
        split.ring.field().characteristic(),
        split.ring.nvars() + split.linear,
        to_ideal_convention(&full),
        true,
    ))
}

/// Koszul homology of `S/I` over `S` itself (no Artinian cut), for rows
/// `j - i <= max_row` of `S/I` and ideal degrees `i <= i_max`. Exact within
/// that window; intended as an independent cross-check at small size.
pub fn koszul_betti_direct(ideal: &CutIdeal, i_max: usize, max_row: usize) -> Result<BettiTable> {
    let ring = ideal.ring().ring().clone();
    let field: PrimeField = *ring.field();
    let n = ring.nvars();
    let mut q = Quotient::new(ring, ideal.gb().clone());
    let b = koszul_quotient_betti(&mut q, (i_max + 1).min(n), max_row);
    Ok(BettiTable::from_entries(field.characteristic(), n, to_ideal_convention(&b), true))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cutideal::cut_ideal;
    use crate::graph::parse_graph;
    use crate::poly::DEFAULT_PRIME;

    fn ideal(spec: &str) -> CutIdeal {
        cut_ideal(&parse_graph(spec).unwrap(), PrimeField::new(DEFAULT_PRIME).unwrap()).unwrap()
    }

    #[test]
    fn convolution_is_koszul_complex() {
        // S/(x) tensored with two more linear forms: Koszul on 3 forms
        let q = BTreeMap::from([((0, 0), 1), ((1, 1), 1)]);
        let c = convolve_linear(&q, 2);
        assert_eq!(c[&(0, 0)], 1);
        assert_eq!(c[&(1, 1)], 3);
        assert_eq!(c[&(2, 2)], 3);
        assert_eq!(c[&(3, 3)], 1);
    }

    #[test]
    fn principal_ideals() {
        let t = graded_betti(&ideal("K4")).unwrap();
        assert_eq!(t.entries(), &BTreeMap::from([((0, 4), 1)]));
        let inv = t.invariants().unwrap();
        assert_eq!((inv.reg, inv.projdim, inv.mindeg, inv.maxdeg), (4, 0, 4, 4));
        assert!(t.report().unwrap().certified());
        assert!(graded_betti(&ideal("K3")).unwrap().invariants().is_none());
    }

    #[test]
    fn diagram_layout() {
        let t = graded_betti(&ideal("K2#K1#K3")).unwrap();
        let expected = "       0 1 2 3\n\
                        total: 1 6 8 3\n    \
                        0: 1 . . .\n    \
                        1: . 6 8 3\n";
        assert_eq!(t.diagram(), expected);
    }
}
