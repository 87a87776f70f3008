use super::{CutIdeal, CutRing, Provenance};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::{buchberger, eliminate, Monomial, OrderKind, PolyRing, PrimeField, TermOrder};

/// Guard on `2|E| + 2^(n-1)`, the variable count of the graph ring.
pub const MAX_ELIMINATION_VARS: usize = 34;

/// `I_G` as the elimination ideal of `<q_A - φ(q_A)>` in
/// `F_p[s, t, q]`, eliminating every `s` and `t` variable.
pub fn cut_ideal_elimination(g: &Graph, field: PrimeField) -> Result<CutIdeal> {
    let cr = CutRing::new(g, field)?;
    let m = g.num_edges();
    let nq = cr.nvars();
    let total = 2 * m + nq;
    if total > MAX_ELIMINATION_VARS {
        return Err(Error::SizeGuard {
            what: "variable count for elimination",
            actual: total,
            limit: MAX_ELIMINATION_VARS,
        });
    }
    let mut names = cr.target_names();
    names.extend(cr.ring().names().iter().cloned());
    // q_A has weight |E| so every q_A - φ(q_A) is homogeneous; the weights
    // never separate terms of a homogeneous polynomial, so the block order
    // still eliminates.
    let mut weights = vec![1u32; 2 * m];
    weights.extend(std::iter::repeat(m.max(1) as u32).take(nq));
    let order = TermOrder {
        kind: OrderKind::BlockElim(2 * m),
        weights: Some(weights),
    };
    let big = PolyRing::new(field, names, order);
    let gens: Vec<_> = (0..nq)
        .map(|k| {
            let mut q = vec![0u16; total];
            q[2 * m + k] = 1;
            let mut u: Vec<u16> = cr.multidegree(k).iter().map(|&x| x as u16).collect();
            u.resize(total, 0);
            big.binomial(Monomial::from_exponents(q), Monomial::from_exponents(u))
        })
        .collect();
    let gb = buchberger(&big, &gens)?;
    let elim = eliminate(&gb, 2 * m)?;
    let q = cr.ring();
    let moved: Vec<_> = elim.generators().iter().map(|f| q.adopt(f)).collect();
    let gb = buchberger(q, &moved)?;
    Ok(CutIdeal::new(cr, gb, Provenance::Elimination))
}
