//! The cut ideal: kernel of the monomial map sending `q_A` to the product of
//! `s_e` over cut edges and `t_e` over uncut edges.

mod betti;
mod elimination;
mod lattice;

pub use betti::{
    graded_betti, graded_betti_with, koszul_betti_direct, minimal_generators, BettiOptions,
    BettiTable, Invariants, MinimalGenerators, ReductionReport, DEFAULT_SEED, DIRECT_MAX_VARS,
};
pub use elimination::{cut_ideal_elimination, MAX_ELIMINATION_VARS};
pub use lattice::{cut_ideal_lattice, lattice_kernel};

use crate::error::{Error, Result};
use crate::graph::{Graph, Partition};
use crate::poly::{
    krull_dimension, GroebnerBasis, Monomial, PolyRing, Polynomial, PrimeField, TermOrder,
};

/// Largest vertex count accepted by the ideal constructions (`2^(n-1)` ring
/// variables).
pub const MAX_IDEAL_VERTICES: usize = 6;

/// `2|E| x 2^(n-1)` 0/1 matrix whose column `A` is the multidegree `ε_A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentMatrix {
    rows: usize,
    columns: Vec<Vec<u8>>,
}

impl ExponentMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, j: usize) -> &[u8] {
        &self.columns[j]
    }

    pub fn entry(&self, i: usize, j: usize) -> u8 {
        self.columns[j][i]
    }

    /// `M * a` for an integer vector indexed by columns.
    pub fn apply(&self, a: &[i64]) -> Vec<i64> {
        let mut out = vec![0i64; self.rows];
        for (col, &x) in self.columns.iter().zip(a) {
            if x != 0 {
                for (o, &m) in out.iter_mut().zip(col) {
                    *o += m as i64 * x;
                }
            }
        }
        out
    }
}

/// The polynomial ring `S_G` with one variable per canonical partition, in
/// ascending bitmask order (`q_0` first), plus its gradings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutRing {
    graph: Graph,
    partitions: Vec<Partition>,
    ring: PolyRing,
    matrix: ExponentMatrix,
}

impl CutRing {
    pub fn new(graph: &Graph, field: PrimeField) -> Result<CutRing> {
        if graph.n() > MAX_IDEAL_VERTICES {
            return Err(Error::SizeGuard {
                what: "vertex count for cut ideal",
                actual: graph.n(),
                limit: MAX_IDEAL_VERTICES,
            });
        }
        let partitions = graph.partitions();
        let names = partitions.iter().map(|p| format!("q_{}", p.label())).collect();
        let ring = PolyRing::new(field, names, TermOrder::degrevlex());
        let m = graph.num_edges();
        let columns = partitions
            .iter()
            .map(|p| {
                let cut = graph.cut_vector(p).expect("partition of this graph").coords;
                let mut col = cut.clone();
                col.extend(cut.iter().map(|c| 1 - c));
                col
            })
            .collect();
        Ok(CutRing {
            graph: graph.clone(),
            partitions,
            ring,
            matrix: ExponentMatrix { rows: 2 * m, columns },
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.partitions.len()
    }

    pub fn matrix(&self) -> &ExponentMatrix {
        &self.matrix
    }

    pub fn variable_index(&self, p: &Partition) -> Option<usize> {
        self.partitions.iter().position(|q| q == p)
    }

    /// Variable for a vertex subset; subsets containing vertex 1 are replaced
    /// by their complement.
    pub fn variable(&self, subset: &[usize]) -> Result<usize> {
        let p = Partition::from_subset(self.graph.n(), subset)?;
        Ok(self.variable_index(&p).expect("every partition has a variable"))
    }

    /// `ε_A` of variable `k`.
    pub fn multidegree(&self, k: usize) -> &[u8] {
        self.matrix.column(k)
    }

    /// `(|Cut(A)|, 2|E| - |Cut(A)|)`.
    pub fn bidegree(&self, k: usize) -> (u32, u32) {
        let m = self.graph.num_edges();
        let s: u32 = self.matrix.column(k)[..m].iter().map(|&c| c as u32).sum();
        (s, 2 * m as u32 - s)
    }

    pub fn monomial_multidegree(&self, mono: &Monomial) -> Vec<i64> {
        let a: Vec<i64> = mono.exponents().iter().map(|&e| e as i64).collect();
        self.matrix.apply(&a)
    }

    pub fn monomial_bidegree(&self, mono: &Monomial) -> (u64, u64) {
        mono.exponents()
            .iter()
            .enumerate()
            .fold((0, 0), |(s, t), (k, &e)| {
                let (bs, bt) = self.bidegree(k);
                (s + bs as u64 * e as u64, t + bt as u64 * e as u64)
            })
    }

    /// Monomial built from vertex subsets, e.g. `[[1],[2]]` for `q_1 q_2`
    /// with canonicalisation of each subset.
    pub fn monomial_from_subsets(&self, subsets: &[&[usize]]) -> Result<Monomial> {
        let mut e = vec![0u32; self.nvars()];
        for s in subsets {
            e[self.variable(s)?] += 1;
        }
        Monomial::from_u32(&e)
    }

    /// Names of the target ring `R_G`: `s_ij` then `t_ij` in edge order.
    pub fn target_names(&self) -> Vec<String> {
        let e = self.graph.edges();
        let s = e.iter().map(|e| format!("s_{}{}", e.0, e.1));
        let t = e.iter().map(|e| format!("t_{}{}", e.0, e.1));
        s.chain(t).collect()
    }
}

/// `φ_G(q_A)` as an exponent vector over `s_e` (first `|E|`) and `t_e`.
pub fn phi_eval(g: &Graph, p: &Partition) -> Result<Monomial> {
    let cut = g.cut_vector(p)?.coords;
    let mut e: Vec<u16> = cut.iter().map(|&c| c as u16).collect();
    e.extend(cut.iter().map(|&c| 1 - c as u16));
    Ok(Monomial::from_exponents(e))
}

/// `φ` of a monomial in the cut ring.
pub fn phi_monomial(ring: &CutRing, m: &Monomial) -> Monomial {
    let d = ring.monomial_multidegree(m);
    Monomial::from_exponents(d.into_iter().map(|x| x as u16).collect())
}

/// Whether a pure binomial `c*(q^a - q^b)` lies in the kernel of `φ_G`.
pub fn kernel_membership(ring: &CutRing, b: &Polynomial) -> Result<bool> {
    ring.ring().check(b)?;
    let t = b.terms();
    let field = ring.ring().field();
    if t.len() != 2 || field.add(t[0].1, t[1].1) != 0 {
        return Err(Error::NotBinomial);
    }
    Ok(ring.monomial_multidegree(&t[0].0) == ring.monomial_multidegree(&t[1].0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provenance {
    Lattice,
    Elimination,
}

/// `I_G` with its reduced degrevlex Gröbner basis.
#[derive(Debug, Clone)]
pub struct CutIdeal {
    ring: CutRing,
    gb: GroebnerBasis,
    provenance: Provenance,
}

impl CutIdeal {
    pub(crate) fn new(ring: CutRing, gb: GroebnerBasis, provenance: Provenance) -> CutIdeal {
        CutIdeal {
            ring,
            gb,
            provenance,
        }
    }

    pub fn ring(&self) -> &CutRing {
        &self.ring
    }

    pub fn graph(&self) -> &Graph {
        self.ring.graph()
    }

    pub fn gb(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn generators(&self) -> &[Polynomial] {
        self.gb.generators()
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn is_zero(&self) -> bool {
        self.gb.generators().is_empty()
    }

    pub fn krull_dimension(&self) -> usize {
        krull_dimension(&self.gb)
    }

    pub fn height(&self) -> usize {
        self.ring.nvars() - self.krull_dimension()
    }

    /// `dim_K (I_G)_1`: the linear elements of a reduced degrevlex basis span
    /// the degree-one part.
    pub fn linear_dimension(&self) -> usize {
        self.generators().iter().filter(|g| g.degree() == Some(1)).count()
    }

    pub fn format_generators(&self) -> Vec<String> {
        self.generators().iter().map(|g| self.ring.ring().format(g)).collect()
    }

    /// Structural checks that must hold for any toric ideal computed here:
    /// pure binomials, multigraded homogeneity, no shared variable between
    /// the two monomials. Returns a description of the first violation.
    pub fn check_toric_shape(&self) -> std::result::Result<(), String> {
        let field = self.ring.ring().field();
        for g in self.generators() {
            let shown = self.ring.ring().format(g);
            if !g.is_pure_binomial(field) {
                return Err(format!("not a pure binomial: {shown}"));
            }
            let (u, v) = (&g.terms()[0].0, &g.terms()[1].0);
            if self.ring.monomial_multidegree(u) != self.ring.monomial_multidegree(v) {
                return Err(format!("not multihomogeneous: {shown}"));
            }
            if self.ring.monomial_bidegree(u) != self.ring.monomial_bidegree(v) {
                return Err(format!("not bihomogeneous: {shown}"));
            }
            if !u.is_coprime(v) {
                return Err(format!("monomials share a variable: {shown}"));
            }
        }
        Ok(())
    }
}

/// `I_G` by the default (lattice) route over `F_p`.
pub fn cut_ideal(g: &Graph, field: PrimeField) -> Result<CutIdeal> {
    cut_ideal_lattice(g, field)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;
    use crate::poly::DEFAULT_PRIME;

    fn field() -> PrimeField {
        PrimeField::new(DEFAULT_PRIME).unwrap()
    }

    fn cut_ring(spec: &str) -> CutRing {
        CutRing::new(&parse_graph(spec).unwrap(), field()).unwrap()
    }

    #[test]
    fn variables_and_gradings() {
        let r = cut_ring("P3");
        assert_eq!(r.ring().names(), &["q_0", "q_2", "q_3", "q_23"]);
        // empty side: all t-variables
        assert_eq!(r.multidegree(0), &[0, 0, 1, 1]);
        for k in 0..r.nvars() {
            let (s, t) = r.bidegree(k);
            assert_eq!(s + t, 4);
            assert_eq!(r.multidegree(k).iter().filter(|&&x| x == 1).count(), 2);
        }
        assert_eq!(r.variable(&[1, 2]).unwrap(), r.variable(&[3]).unwrap());
    }

    #[test]
    fn phi_of_small_partitions() {
        let g = parse_graph("P3").unwrap();
        let p = Partition::from_subset(3, &[2]).unwrap();
        // s_12 s_23
        assert_eq!(phi_eval(&g, &p).unwrap().exponents(), &[1, 1, 0, 0]);
        let e = Partition::from_subset(3, &[]).unwrap();
        assert_eq!(phi_eval(&g, &e).unwrap().exponents(), &[0, 0, 1, 1]);
    }

    #[test]
    fn k4_quartic_is_in_the_kernel() {
        let r = cut_ring("K4");
        let u = r.monomial_from_subsets(&[&[1], &[2], &[3], &[4]]).unwrap();
        let v = r.monomial_from_subsets(&[&[], &[1, 2], &[1, 3], &[1, 4]]).unwrap();
        assert_eq!(phi_monomial(&r, &u), phi_monomial(&r, &v));
        let f = r.ring().binomial(u, v);
        assert!(kernel_membership(&r, &f).unwrap());
        let bad = r.ring().var(0);
        assert_eq!(kernel_membership(&r, &bad), Err(Error::NotBinomial));
    }

    #[test]
    fn size_guard() {
        let g = parse_graph("K7").unwrap();
        assert!(matches!(CutRing::new(&g, field()), Err(Error::SizeGuard { .. })));
    }
}
