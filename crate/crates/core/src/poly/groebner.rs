use super::{Monomial, OrderKind, PolyRing, Polynomial, TermOrder};
use crate::error::{Error, Result};
use std::collections::BTreeMap;

/// A Gröbner basis together with the ring (and hence order) it lives in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: PolyRing,
    generators: Vec<Polynomial>,
    reduced: bool,
    degree_bound: Option<u64>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn order(&self) -> &TermOrder {
        self.ring.order()
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn into_generators(self) -> Vec<Polynomial> {
        self.generators
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// Set when the basis was only completed up to this degree.
    pub fn degree_bound(&self) -> Option<u64> {
        self.degree_bound
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.generators
            .iter()
            .filter_map(|g| g.leading_monomial().cloned())
            .collect()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.generators
            .iter()
            .any(|g| g.leading_monomial().is_some_and(|m| m.is_one()))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(normal_form(f, self)?.is_zero())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BuchbergerOptions {
    /// Discard S-pairs whose lcm has (weighted) degree above this bound.
    /// For homogeneous input the result is a Gröbner basis up to that degree.
    pub degree_bound: Option<u64>,
}

/// Full reduction of `f` by `reducers`.
pub(crate) fn reduce(ring: &PolyRing, f: &Polynomial, reducers: &[&Polynomial]) -> Polynomial {
    let field = ring.field();
    let mut f = f.clone();
    let mut rem: Vec<(Monomial, u32)> = Vec::new();
    while let Some((lm, lc)) = f.terms().first().cloned() {
        match reducers
            .iter()
            .find(|g| g.leading_monomial().is_some_and(|gm| gm.divides(&lm)))
        {
            Some(g) => {
                let q = g.leading_monomial().unwrap().quotient_of(&lm);
                let c = match g.leading_coefficient() {
                    Some(1) => field.neg(lc),
                    Some(gc) => field.neg(field.mul(lc, field.inv(gc))),
                    None => unreachable!(),
                };
                f = ring.add_scaled(&f, g, c, Some(&q));
            }
            None => {
                rem.push((lm, lc));
                f = ring.from_sorted_tail(&f, 1);
            }
        }
    }
    ring.from_sorted_terms(rem)
}

pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial> {
    gb.ring.check(f)?;
    let reducers: Vec<&Polynomial> = gb.generators.iter().collect();
    Ok(reduce(&gb.ring, f, &reducers))
}

struct State<'r> {
    ring: &'r PolyRing,
    polys: Vec<Polynomial>,
    active: Vec<bool>,
    pairs: BTreeMap<(u64, usize, usize), Monomial>,
    bound: Option<u64>,
}

impl State<'_> {
    fn reducers(&self) -> Vec<&Polynomial> {
        self.polys
            .iter()
            .zip(&self.active)
            .filter(|(_, &a)| a)
            .map(|(p, _)| p)
            .collect()
    }

    fn lm(&self, i: usize) -> &Monomial {
        self.polys[i].leading_monomial().expect("nonzero")
    }

    /// Gebauer–Möller update with the new element `h`.
    fn insert(&mut self, h: Polynomial) {
        let hi = self.polys.len();
        let hm = h.leading_monomial().expect("nonzero").clone();
        self.polys.push(h);
        self.active.push(true);
        let order = self.ring.order();

        let cands: Vec<(usize, Monomial, bool)> = (0..hi)
            .filter(|&g| self.active[g])
            .map(|g| {
                let gm = self.lm(g);
                (g, hm.lcm(gm), hm.is_coprime(gm))
            })
            .collect();
        // Chain criterion among the new pairs: keep a pair unless another
        // new pair's lcm properly divides its lcm (first occurrence wins on ties).
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        for (k, (g, l, coprime)) in cands.iter().enumerate() {
            let dominated = cands.iter().enumerate().any(|(k2, (_, l2, _))| {
                k2 != k && l2.divides(l) && (l2 != l || k2 < k)
            });
            if *coprime || !dominated {
                kept.push((*g, l.clone(), *coprime));
            }
        }
        // Old pairs made redundant by `h`.
        let old: Vec<(u64, usize, usize)> = self.pairs.keys().cloned().collect();
        for key in old {
            let (_, i, j) = key;
            let l = &self.pairs[&key];
            if hm.divides(l) && hm.lcm(self.lm(i)) != *l && hm.lcm(self.lm(j)) != *l {
                self.pairs.remove(&key);
            }
        }
        for (g, l, coprime) in kept {
            if coprime {
                continue;
            }
            let deg = order.sugar(&l);
            if self.bound.is_some_and(|b| deg > b) {
                continue;
            }
            self.pairs.insert((deg, g, hi), l);
        }
        for g in 0..hi {
            if self.active[g] && hm.divides(self.lm(g)) {
                self.active[g] = false;
            }
        }
    }
}

pub fn buchberger(ring: &PolyRing, gens: &[Polynomial]) -> Result<GroebnerBasis> {
    buchberger_with(ring, gens, BuchbergerOptions::default())
}

pub fn buchberger_with(
    ring: &PolyRing,
    gens: &[Polynomial],
    opts: BuchbergerOptions,
) -> Result<GroebnerBasis> {
    for g in gens {
        ring.check(g)?;
    }
    let mut input: Vec<Polynomial> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .filter(|g| match opts.degree_bound {
            Some(b) => ring.order().sugar(g.leading_monomial().unwrap()) <= b,
            None => true,
        })
        .map(|g| ring.monic(&ring.adopt(g)))
        .collect();
    input.sort_by(|a, b| {
        ring.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
            .then_with(|| a.len().cmp(&b.len()))
    });
    let mut st = State {
        ring,
        polys: Vec::new(),
        active: Vec::new(),
        pairs: BTreeMap::new(),
        bound: opts.degree_bound,
    };
    for g in input {
        let h = reduce(ring, &g, &st.reducers());
        if !h.is_zero() {
            st.insert(ring.monic(&h));
        }
    }
    while let Some(((_, i, j), _)) = st.pairs.pop_first() {
        let s = ring.s_polynomial(&st.polys[i], &st.polys[j]);
        let h = reduce(ring, &s, &st.reducers());
        if !h.is_zero() {
            let h = ring.monic(&h);
            if h.leading_monomial().unwrap().is_one() {
                return Ok(GroebnerBasis {
                    ring: ring.clone(),
                    generators: vec![ring.one()],
                    reduced: true,
                    degree_bound: opts.degree_bound,
                });
            }
            st.insert(h);
        }
    }
    let basis: Vec<Polynomial> = st
        .polys
        .into_iter()
        .zip(st.active)
        .filter(|(_, a)| *a)
        .map(|(p, _)| p)
        .collect();
    Ok(GroebnerBasis {
        ring: ring.clone(),
        generators: interreduce(ring, basis),
        reduced: true,
        degree_bound: opts.degree_bound,
    })
}

/// Minimalises and tail-reduces a Gröbner basis; output sorted by decreasing
/// leading monomial.
fn interreduce(ring: &PolyRing, mut basis: Vec<Polynomial>) -> Vec<Polynomial> {
    basis.sort_by(|a, b| ring.cmp(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));
    let lms: Vec<Monomial> = basis.iter().map(|g| g.leading_monomial().unwrap().clone()).collect();
    let keep: Vec<bool> = (0..basis.len())
        .map(|i| !(0..basis.len()).any(|j| j != i && lms[j].divides(&lms[i]) && (lms[j] != lms[i] || j < i)))
        .collect();
    let minimal: Vec<Polynomial> = basis
        .into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(g, _)| g)
        .collect();
    (0..minimal.len())
        .map(|i| {
            let others: Vec<&Polynomial> = minimal
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, g)| g)
                .collect();
            let g = &minimal[i];
            let head = ring.from_sorted_terms(vec![g.terms()[0].clone()]);
            let tail = reduce(ring, &ring.from_sorted_tail(g, 1), &others);
            ring.add(&head, &tail)
        })
        .collect()
}

/// Whether every S-polynomial of `gens` reduces to zero.
pub fn is_groebner(ring: &PolyRing, gens: &[Polynomial]) -> bool {
    let monic: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).map(|g| ring.monic(g)).collect();
    let refs: Vec<&Polynomial> = monic.iter().collect();
    for i in 0..monic.len() {
        for j in i + 1..monic.len() {
            let s = ring.s_polynomial(&monic[i], &monic[j]);
            if !reduce(ring, &s, &refs).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Keeps the basis elements free of the first `k` variables and moves them
/// to the ring on the remaining variables (degrevlex).
pub fn eliminate(gb: &GroebnerBasis, k: usize) -> Result<GroebnerBasis> {
    let ring = gb.ring();
    if ring.order().kind != OrderKind::BlockElim(k) || k > ring.nvars() {
        return Err(Error::WrongOrder(k));
    }
    let small = PolyRing::new(
        *ring.field(),
        ring.names()[k..].to_vec(),
        TermOrder {
            kind: OrderKind::DegRevLex,
            weights: ring.order().weights.as_ref().map(|w| w[k..].to_vec()),
        },
    );
    let map: Vec<usize> = (k..ring.nvars()).collect();
    let generators = gb
        .generators
        .iter()
        .filter(|g| g.terms().iter().all(|(m, _)| m.exponents()[..k].iter().all(|&e| e == 0)))
        .map(|g| {
            small.from_sorted_terms(g.terms().iter().map(|(m, c)| (m.permuted(&map), *c)).collect())
        })
        .collect();
    Ok(GroebnerBasis {
        ring: small,
        generators,
        reduced: gb.reduced,
        degree_bound: gb.degree_bound,
    })
}

/// `I : m^∞` via an auxiliary variable `t`, the relation `t*m - 1` and
/// elimination of `t`. The result is a reduced basis in `ring`'s order.
pub fn saturate(ring: &PolyRing, gens: &[Polynomial], m: &Monomial) -> Result<GroebnerBasis> {
    if m.nvars() != ring.nvars() {
        return Err(Error::RingMismatch);
    }
    if m.is_one() {
        return buchberger(ring, gens);
    }
    let mut names = vec!["t".to_string()];
    names.extend(ring.names().iter().cloned());
    let big = PolyRing::new(*ring.field(), names, TermOrder::block_elim(1));
    let lift = |mono: &Monomial| {
        let mut e = vec![0u16];
        e.extend_from_slice(mono.exponents());
        Monomial::from_exponents(e)
    };
    let mut lifted: Vec<Polynomial> = Vec::with_capacity(gens.len() + 1);
    for g in gens {
        ring.check(g)?;
        lifted.push(big.from_terms(g.terms().iter().map(|(mm, c)| (lift(mm), *c)).collect()));
    }
    let tm = lift(m).mul(&Monomial::var(big.nvars(), 0));
    lifted.push(big.from_terms(vec![(tm, 1), (Monomial::one(big.nvars()), ring.field().neg(1))]));
    let gb = buchberger(&big, &lifted)?;
    let elim = eliminate(&gb, 1)?;
    if elim.ring().order() == ring.order() {
        return Ok(GroebnerBasis { ring: ring.clone(), ..elim });
    }
    buchberger(ring, &elim.generators)
}

/// `I : (x_{v1} ... x_{vk})^∞` for homogeneous `I`, one variable at a time:
/// in degrevlex with `x` last, dividing a Gröbner basis of `I` by the largest
/// power of `x` gives a Gröbner basis of `I : x^∞`.
pub fn saturate_by_variables(ring: &PolyRing, gens: &[Polynomial], vars: &[usize]) -> Result<GroebnerBasis> {
    let n = ring.nvars();
    for g in gens {
        ring.check(g)?;
        if !g.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
    }
    if vars.iter().any(|&v| v >= n) {
        return Err(Error::RingMismatch);
    }
    let mut current: Vec<Polynomial> = gens.to_vec();
    for &x in vars {
        // permutation putting x last; perm[new] = old
        let perm: Vec<usize> = (0..n).filter(|&i| i != x).chain([x]).collect();
        let mut inv = vec![0; n];
        for (new, &old) in perm.iter().enumerate() {
            inv[old] = new;
        }
        let prm = PolyRing::new(
            *ring.field(),
            perm.iter().map(|&i| ring.names()[i].clone()).collect(),
            TermOrder::degrevlex(),
        );
        let moved: Vec<Polynomial> = current
            .iter()
            .map(|g| prm.from_terms(g.terms().iter().map(|(m, c)| (m.permuted(&perm), *c)).collect()))
            .collect();
        let gb = buchberger(&prm, &moved)?;
        current = gb
            .generators
            .iter()
            .map(|g| {
                let k = g.terms().iter().map(|(m, _)| m.exponents()[n - 1]).min().unwrap_or(0);
                ring.from_terms(
                    g.terms()
                        .iter()
                        .map(|(m, c)| {
                            let mut e = m.exponents().to_vec();
                            e[n - 1] -= k;
                            (Monomial::from_exponents(e).permuted(&inv), *c)
                        })
                        .collect(),
                )
            })
            .collect();
    }
    buchberger(ring, &current)
}

/// Krull dimension of `R / I` from a Gröbner basis of `I`: the largest set of
/// variables containing the support of no leading monomial.
pub fn krull_dimension(gb: &GroebnerBasis) -> usize {
    if gb.is_unit_ideal() {
        return 0;
    }
    let supports: Vec<Vec<usize>> = gb.leading_monomials().iter().map(|m| m.support()).collect();
    gb.ring().nvars() - min_transversal(&supports, gb.ring().nvars())
}

/// Smallest set of indices meeting every set in `sets`.
fn min_transversal(sets: &[Vec<usize>], n: usize) -> usize {
    let mut best = n;
    let mut chosen = vec![false; n];
    transversal_rec(sets, &mut chosen, 0, &mut best);
    best
}

fn transversal_rec(sets: &[Vec<usize>], chosen: &mut [bool], size: usize, best: &mut usize) {
    if size >= *best {
        return;
    }
    let open = sets
        .iter()
        .filter(|s| !s.iter().any(|&v| chosen[v]))
        .min_by_key(|s| s.len());
    let Some(open) = open else {
        *best = size;
        return;
    };
    for &v in open {
        chosen[v] = true;
        transversal_rec(sets, chosen, size + 1, best);
        chosen[v] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::PrimeField;
    use proptest::prelude::*;

    fn ring(names: &[&str], order: TermOrder) -> PolyRing {
        PolyRing::new(
            PrimeField::new(32003).unwrap(),
            names.iter().map(|s| s.to_string()).collect(),
            order,
        )
    }

    fn p(r: &PolyRing, s: &str) -> Polynomial {
        r.parse(s).unwrap()
    }

    #[test]
    fn principal_ideal_is_its_own_basis() {
        let r = ring(&["x", "y", "z"], TermOrder::degrevlex());
        let f = p(&r, "3*x*y - 3*z^2");
        for order in [TermOrder::degrevlex(), TermOrder::lex()] {
            let rr = r.with_order(order);
            let gb = buchberger(&rr, &[rr.adopt(&f)]).unwrap();
            assert_eq!(gb.generators(), &[rr.monic(&rr.adopt(&f))]);
        }
    }

    #[test]
    fn twisted_cubic() {
        let r = ring(&["x", "y", "z", "w"], TermOrder::degrevlex());
        let gens = [p(&r, "x*z - y^2"), p(&r, "y*w - z^2"), p(&r, "x*w - y*z")];
        let gb = buchberger(&r, &gens).unwrap();
        assert_eq!(gb.generators().len(), 3);
        assert!(is_groebner(&r, gb.generators()));
        assert_eq!(krull_dimension(&gb), 2);
    }

    #[test]
    fn lex_basis_of_circle_and_line() {
        let r = ring(&["x", "y"], TermOrder::lex());
        let gb = buchberger(&r, &[p(&r, "x^2 + y^2 - 1"), p(&r, "x - y")]).unwrap();
        let shown: Vec<String> = gb.generators().iter().map(|g| r.format(g)).collect();
        assert_eq!(shown, vec!["x - y", "y^2 + 16001"]);
        assert_eq!(krull_dimension(&gb), 0);
    }

    #[test]
    fn unit_ideal() {
        let r = ring(&["x", "y"], TermOrder::degrevlex());
        let gb = buchberger(&r, &[p(&r, "x"), p(&r, "x + 1")]).unwrap();
        assert!(gb.is_unit_ideal());
        assert_eq!(krull_dimension(&gb), 0);
    }

    #[test]
    fn zero_ideal_has_full_dimension() {
        let r = ring(&["a", "b", "c", "d", "e"], TermOrder::degrevlex());
        let gb = buchberger(&r, &[]).unwrap();
        assert_eq!(krull_dimension(&gb), 5);
    }

    #[test]
    fn elimination_of_parametrisation() {
        // x = s^2, y = s^3 -> y^2 - x^3
        let r = ring(&["s", "x", "y"], TermOrder::block_elim(1));
        let gb = buchberger(&r, &[p(&r, "x - s^2"), p(&r, "y - s^3")]).unwrap();
        let e = eliminate(&gb, 1).unwrap();
        let shown: Vec<String> = e.generators().iter().map(|g| e.ring().format(g)).collect();
        assert_eq!(shown, vec!["x^3 - y^2"]);
        // no relation on y alone after eliminating x from <x - y^2>
        let r = ring(&["x", "y"], TermOrder::block_elim(1));
        let gb = buchberger(&r, &[p(&r, "x - y^2")]).unwrap();
        assert!(eliminate(&gb, 1).unwrap().generators().is_empty());
        assert_eq!(eliminate(&gb, 0), Err(Error::WrongOrder(0)));
    }

    #[test]
    fn saturation_strips_monomial_factor() {
        let r = ring(&["x", "y", "z"], TermOrder::degrevlex());
        let f = p(&r, "y^2 - z^2");
        let xf = r.mul(&r.var(0), &f);
        let sat = saturate(&r, &[xf.clone()], &Monomial::var(3, 0)).unwrap();
        assert_eq!(sat.generators(), &[f.clone()]);
        let sat2 = saturate_by_variables(&r, &[xf.clone()], &[0]).unwrap();
        assert_eq!(sat2.generators(), &[f]);
        assert!(sat.contains(&xf).unwrap());
        let same = saturate(&r, &[xf.clone()], &Monomial::one(3)).unwrap();
        assert_eq!(same.generators(), &[xf]);
    }

    #[test]
    fn truncated_basis() {
        let r = ring(&["x", "y", "z", "w"], TermOrder::degrevlex());
        let gens = [p(&r, "x*z - y^2"), p(&r, "y*w - z^2"), p(&r, "x*w - y*z")];
        let gb = buchberger_with(&r, &gens, BuchbergerOptions { degree_bound: Some(2) }).unwrap();
        assert_eq!(gb.degree_bound(), Some(2));
        assert!(gb.generators().iter().all(|g| g.degree() == Some(2)));
    }

    fn arb_binomials() -> impl Strategy<Value = Vec<(Vec<u16>, Vec<u16>)>> {
        let mono = proptest::collection::vec(0u16..3, 4);
        proptest::collection::vec((mono.clone(), mono), 1..4)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn basis_properties(bins in arb_binomials(), seed in 0usize..24) {
            let r = ring(&["a", "b", "c", "d"], TermOrder::degrevlex());
            let gens: Vec<Polynomial> = bins
                .into_iter()
                .map(|(u, v)| r.binomial(Monomial::from_exponents(u), Monomial::from_exponents(v)))
                .collect();
            let gb = buchberger(&r, &gens).unwrap();
            prop_assert!(is_groebner(&r, gb.generators()));
            for g in &gens {
                prop_assert!(gb.contains(g).unwrap());
            }
            for g in gb.generators() {
                prop_assert!(g.len() <= 2);
                prop_assert!(g.leading_coefficient() == Some(1));
                prop_assert!(g.len() < 2 || g.is_pure_binomial(r.field()));
            }
            // permuted input gives the same reduced basis
            let mut perm = gens.clone();
            perm.rotate_left(seed % gens.len().max(1));
            perm.reverse();
            let again = buchberger(&r, &perm).unwrap();
            prop_assert_eq!(again.generators(), gb.generators());
            // linearity of the normal form
            if gens.len() >= 2 {
                let (f, g) = (&gens[0], &gens[1]);
                let h = r.add(&r.mul(f, &r.var(2)), &r.scale(&r.var(3), 7));
                let nf = |x: &Polynomial| normal_form(x, &gb).unwrap();
                prop_assert_eq!(nf(&r.add(&h, g)), r.add(&nf(&h), &nf(g)));
                prop_assert_eq!(nf(&r.scale(&h, 5)), r.scale(&nf(&h), 5));
            }
        }
    }
}
