use super::Monomial;
use std::cmp::Ordering;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    DegRevLex,
    Lex,
    /// Product order: degrevlex on the first `k` variables, ties broken by
    /// degrevlex on the rest. Eliminates the first `k` variables.
    BlockElim(usize),
}

/// A monomial order, optionally refined from a positive weight vector
/// (weighted degree compared first).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TermOrder {
    pub kind: OrderKind,
    pub weights: Option<Vec<u32>>,
}

impl TermOrder {
    pub fn degrevlex() -> TermOrder {
        TermOrder {
            kind: OrderKind::DegRevLex,
            weights: None,
        }
    }

    pub fn lex() -> TermOrder {
        TermOrder {
            kind: OrderKind::Lex,
            weights: None,
        }
    }

    pub fn block_elim(k: usize) -> TermOrder {
        TermOrder {
            kind: OrderKind::BlockElim(k),
            weights: None,
        }
    }

    /// Degree used for pair selection and truncation.
    pub fn sugar(&self, m: &Monomial) -> u64 {
        match &self.weights {
            Some(w) => m.weighted_degree(w),
            None => m.degree() as u64,
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        if let Some(w) = &self.weights {
            let c = a.weighted_degree(w).cmp(&b.weighted_degree(w));
            if c != Ordering::Equal {
                return c;
            }
        }
        let (x, y) = (a.exponents(), b.exponents());
        match self.kind {
            OrderKind::DegRevLex => a.degree().cmp(&b.degree()).then_with(|| revlex(x, y)),
            OrderKind::Lex => x.cmp(y),
            OrderKind::BlockElim(k) => {
                let k = k.min(x.len());
                degrevlex_slice(&x[..k], &y[..k]).then_with(|| degrevlex_slice(&x[k..], &y[k..]))
            }
        }
    }
}

fn revlex(x: &[u16], y: &[u16]) -> Ordering {
    for i in (0..x.len()).rev() {
        if x[i] != y[i] {
            return y[i].cmp(&x[i]);
        }
    }
    Ordering::Equal
}

fn degrevlex_slice(x: &[u16], y: &[u16]) -> Ordering {
    let dx: u32 = x.iter().map(|&e| e as u32).sum();
    let dy: u32 = y.iter().map(|&e| e as u32).sum();
    dx.cmp(&dy).then_with(|| revlex(x, y))
}
