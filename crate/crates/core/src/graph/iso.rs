//! Canonical labelling for small graphs by colour refinement followed by an
//! exhaustive search over orderings inside each colour class.

use super::{bit, Graph};
use crate::error::{Error, Result};

pub const MAX_ISO_VERTICES: usize = 10;

/// Isomorphism-invariant code of a graph. Two graphs are isomorphic iff
/// their canonical forms are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub n: usize,
    /// Row `k` lists the neighbours of canonical vertex `k+1` among the
    /// canonical vertices `1..=k`.
    pub rows: Vec<u32>,
}

impl CanonicalForm {
    pub fn to_graph(&self) -> Graph {
        let mut edges = Vec::new();
        for (k, &row) in self.rows.iter().enumerate() {
            for l in 0..k {
                if row >> l & 1 == 1 {
                    edges.push((l + 1, k + 1));
                }
            }
        }
        Graph::simple_from(self.n, edges)
    }
}

fn refine_colors(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut color: Vec<usize> = (1..=n).map(|v| g.degree(v)).collect();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (1..=n)
            .map(|v| {
                let mut nc: Vec<usize> = g.neighbors(v).iter().map(|&w| color[w - 1]).collect();
                nc.sort_unstable();
                (color[v - 1], nc)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs
            .iter()
            .map(|s| distinct.binary_search(s).unwrap())
            .collect();
        let old_classes = {
            let mut c = color.clone();
            c.sort_unstable();
            c.dedup();
            c.len()
        };
        if distinct.len() == old_classes {
            return next;
        }
        color = next;
    }
}

struct Search<'a> {
    g: &'a Graph,
    /// Colour class (as a vertex list) that canonical position `k` is drawn from.
    slot_class: Vec<usize>,
    classes: Vec<Vec<usize>>,
    used: u32,
    order: Vec<usize>,
    rows: Vec<u32>,
    best: Option<Vec<u32>>,
}

impl Search<'_> {
    fn run(&mut self, k: usize) {
        let n = self.g.n();
        if k == n {
            if self.best.as_ref().map_or(true, |b| self.rows > *b) {
                self.best = Some(self.rows.clone());
            }
            return;
        }
        let class = self.slot_class[k];
        for idx in 0..self.classes[class].len() {
            let v = self.classes[class][idx];
            if self.used & bit(v) != 0 {
                continue;
            }
            let row = self
                .order
                .iter()
                .enumerate()
                .filter(|(_, &w)| self.g.has_edge(v, w))
                .fold(0u32, |acc, (l, _)| acc | 1 << l);
            if let Some(best) = &self.best {
                // rows compare lexicographically; a smaller prefix can never win
                let prefix_cmp = self.rows[..k].cmp(&best[..k]).then(row.cmp(&best[k]));
                if prefix_cmp == std::cmp::Ordering::Less {
                    continue;
                }
            }
            self.used |= bit(v);
            self.order.push(v);
            self.rows.push(row);
            self.run(k + 1);
            self.rows.pop();
            self.order.pop();
            self.used &= !bit(v);
        }
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    if g.n() > MAX_ISO_VERTICES {
        return Err(Error::SizeGuard {
            what: "vertex count for isomorphism",
            actual: g.n(),
            limit: MAX_ISO_VERTICES,
        });
    }
    Ok(canonical_form_unchecked(g))
}

pub(crate) fn canonical_form_unchecked(g: &Graph) -> CanonicalForm {
    let color = refine_colors(g);
    let ncolors = color.iter().max().map_or(0, |m| m + 1);
    let mut classes = vec![Vec::new(); ncolors];
    for v in 1..=g.n() {
        classes[color[v - 1]].push(v);
    }
    let slot_class: Vec<usize> = classes
        .iter()
        .enumerate()
        .flat_map(|(c, vs)| std::iter::repeat(c).take(vs.len()))
        .collect();
    let mut s = Search {
        g,
        slot_class,
        classes,
        used: 0,
        order: Vec::with_capacity(g.n()),
        rows: Vec::with_capacity(g.n()),
        best: None,
    };
    s.run(0);
    CanonicalForm {
        n: g.n(),
        rows: s.best.unwrap_or_default(),
    }
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.n() != b.n() || a.num_edges() != b.num_edges() {
        return Ok(false);
    }
    let mut da: Vec<usize> = a.vertices().map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = b.vertices().map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}
