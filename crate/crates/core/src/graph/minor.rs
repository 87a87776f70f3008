use super::iso::{canonical_form_unchecked, CanonicalForm};
use super::{Graph, MAX_ISO_VERTICES};
use crate::error::{Error, Result};
use std::collections::{BTreeSet, HashMap, VecDeque};

pub const MAX_MINOR_VERTICES: usize = 8;

fn guard(g: &Graph, limit: usize, what: &'static str) -> Result<()> {
    if g.n() > limit {
        Err(Error::SizeGuard {
            what,
            actual: g.n(),
            limit,
        })
    } else {
        Ok(())
    }
}

/// Whether `h` is isomorphic to a graph obtained from `g` by deleting edges,
/// contracting edges and deleting isolated vertices.
pub fn has_minor(g: &Graph, h: &Graph) -> Result<bool> {
    guard(g, MAX_MINOR_VERTICES, "vertex count for minor search")?;
    guard(h, MAX_ISO_VERTICES, "vertex count for minor search")?;
    let target = canonical_form_unchecked(h);
    let mut memo = HashMap::new();
    Ok(minor_rec(g, h, &target, &mut memo))
}

fn minor_rec(
    g: &Graph,
    h: &Graph,
    target: &CanonicalForm,
    memo: &mut HashMap<CanonicalForm, bool>,
) -> bool {
    if g.n() < h.n() || g.num_edges() < h.num_edges() {
        return false;
    }
    let cf = canonical_form_unchecked(g);
    if let Some(&r) = memo.get(&cf) {
        return r;
    }
    let result = if g.n() == h.n() && g.num_edges() == h.num_edges() {
        cf == *target
    } else {
        minor_children(g, h).any(|child| minor_rec(&child, h, target, memo))
    };
    memo.insert(cf, result);
    result
}

fn minor_children<'a>(g: &'a Graph, h: &'a Graph) -> impl Iterator<Item = Graph> + 'a {
    let isolated = if g.n() > h.n() {
        g.isolated_vertices().first().map(|&v| {
            let keep: Vec<usize> = g.vertices().filter(|&w| w != v).collect();
            g.induced_subgraph(&keep).expect("nonempty")
        })
    } else {
        None
    };
    let edge_moves = g.edges().iter().flat_map(move |&e| {
        let del = (g.num_edges() > h.num_edges()).then(|| g.delete_edge(e).expect("edge"));
        let con = (g.n() > h.n()).then(|| g.contract_edge(e).expect("edge").0);
        del.into_iter().chain(con)
    });
    isolated.into_iter().chain(edge_moves)
}

/// Series-parallel recognition: repeatedly delete vertices of degree at most
/// one and suppress vertices of degree two. A graph has no `K4` minor iff
/// this empties it.
pub fn is_k4_minor_free(g: &Graph) -> bool {
    let n = g.n();
    let mut adj: Vec<u32> = (1..=n).map(|v| g.neighbor_mask(v)).collect();
    let mut alive: u32 = g.full_mask();
    loop {
        let pick = (0..n).find(|&i| alive >> i & 1 == 1 && adj[i].count_ones() <= 2);
        let Some(i) = pick else { break };
        let nb = adj[i];
        let ends: Vec<usize> = (0..n).filter(|&j| nb >> j & 1 == 1).collect();
        for &j in &ends {
            adj[j] &= !(1 << i);
        }
        if let [a, b] = ends[..] {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        adj[i] = 0;
        alive &= !(1 << i);
    }
    alive == 0
}

/// All isomorphism classes reachable from `g` by edge contractions and
/// neighbourhood-minor steps, `g` included.
pub fn combinatorial_retracts(g: &Graph) -> Result<BTreeSet<CanonicalForm>> {
    guard(g, MAX_MINOR_VERTICES, "vertex count for retract search")?;
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(canonical_form_unchecked(g));
    queue.push_back(g.clone());
    while let Some(cur) = queue.pop_front() {
        for next in retract_moves(&cur) {
            let cf = canonical_form_unchecked(&next);
            if seen.insert(cf) {
                queue.push_back(next);
            }
        }
    }
    Ok(seen)
}

pub(crate) fn retract_moves(g: &Graph) -> Vec<Graph> {
    let mut out: Vec<Graph> = g
        .edges()
        .iter()
        .map(|&e| g.contract_edge(e).expect("edge").0)
        .collect();
    let full = g.full_mask();
    for w in 1..full {
        if g.nm_witness_mask(w).is_some() {
            out.push(g.induced_on_mask(w));
        }
    }
    out
}

/// `true` iff no combinatorial retract of `g` is isomorphic to a forbidden graph.
pub fn is_crf(g: &Graph, forbidden: &[Graph]) -> Result<bool> {
    for h in forbidden {
        guard(h, MAX_ISO_VERTICES, "vertex count for retract search")?;
    }
    let retracts = combinatorial_retracts(g)?;
    Ok(forbidden
        .iter()
        .all(|h| !retracts.contains(&canonical_form_unchecked(h))))
}
