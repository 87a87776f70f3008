//! Named graphs and the text syntax for describing graphs.
//!
//! Accepted forms (whitespace is ignored):
//!
//! * explicit: `n=5; 1-2,2-3,3-4,4-5`
//! * families: `K4`, `C5`, `P3` (path on 3 vertices), `K1_3`, `K2_3`, `K5-e`
//! * fixed small graphs `G1` .. `G10`
//! * `2K2`: disjoint copies; `K2+P3`: disjoint union
//! * `K2#K1#K3`: gluing along a common induced subgraph, chained left to right

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

/// Edge lists of the ten unnamed graphs on five vertices.
const FIXED: [&[(usize, usize)]; 10] = [
    &[(1, 2), (1, 3), (1, 4), (2, 5)],
    &[(1, 2), (1, 3), (2, 3), (3, 4), (4, 5)],
    &[(1, 2), (1, 3), (2, 3), (3, 4), (2, 5)],
    &[(1, 2), (1, 3), (2, 3), (3, 4), (3, 5)],
    &[(1, 2), (1, 3), (1, 5), (3, 5), (2, 5), (4, 5)],
    &[(1, 2), (1, 3), (1, 5), (3, 5), (2, 5), (3, 4)],
    &[(1, 2), (1, 3), (1, 5), (3, 5), (2, 5), (4, 5), (3, 4)],
    &[(1, 3), (1, 5), (3, 5), (2, 5), (4, 5), (3, 4), (2, 3)],
    &[(1, 3), (1, 2), (3, 5), (2, 5), (2, 4), (4, 5), (3, 4)],
    &[(1, 3), (1, 2), (3, 5), (2, 5), (2, 4), (4, 5), (3, 4), (1, 4)],
];

pub fn complete(n: usize) -> Result<Graph> {
    Graph::new(n, (1..=n).flat_map(|i| ((i + 1)..=n).map(move |j| (i, j))))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Parse(format!("cycle needs at least 3 vertices, got {n}")));
    }
    Graph::new(n, (1..n).map(|i| (i, i + 1)).chain(std::iter::once((1, n))))
}

/// Path on `n` vertices.
pub fn path(n: usize) -> Result<Graph> {
    Graph::new(n, (1..n).map(|i| (i, i + 1)))
}

pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    Graph::new(a + b, (1..=a).flat_map(|i| ((a + 1)..=(a + b)).map(move |j| (i, j))))
}

/// `K_n` minus the edge `{1, n}`.
pub fn complete_minus_edge(n: usize) -> Result<Graph> {
    complete(n)?.delete_edge(super::Edge(1, n))
}

pub fn fixed(i: usize) -> Result<Graph> {
    let edges = FIXED
        .get(i.wrapping_sub(1))
        .ok_or_else(|| Error::Parse(format!("unknown graph G{i}")))?;
    Graph::new(5, edges.iter().copied())
}

pub fn parse_graph(spec: &str) -> Result<Graph> {
    let s: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse("empty graph description".into()));
    }
    if let Some(rest) = s.strip_prefix("n=") {
        return parse_explicit(rest);
    }
    let mut acc: Option<Graph> = None;
    for part in s.split('+') {
        let g = parse_glued(part)?;
        acc = Some(match acc {
            None => g,
            Some(a) => a.disjoint_union(&g)?,
        });
    }
    acc.ok_or_else(|| Error::Parse(spec.into()))
}

fn parse_explicit(rest: &str) -> Result<Graph> {
    let (n_str, edges_str) = rest.split_once(';').unwrap_or((rest, ""));
    let n: usize = n_str
        .parse()
        .map_err(|_| Error::Parse(format!("bad vertex count {n_str:?}")))?;
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(MAX_VERTICES));
    }
    let mut edges = Vec::new();
    for tok in edges_str.split(',').filter(|t| !t.is_empty()) {
        let (a, b) = tok
            .split_once('-')
            .ok_or_else(|| Error::Parse(format!("bad edge {tok:?}")))?;
        let a: usize = a.parse().map_err(|_| Error::Parse(format!("bad vertex {a:?}")))?;
        let b: usize = b.parse().map_err(|_| Error::Parse(format!("bad vertex {b:?}")))?;
        edges.push((a, b));
    }
    Graph::new(n, edges).map_err(|e| Error::Parse(e.to_string()))
}

fn parse_glued(part: &str) -> Result<Graph> {
    let pieces: Vec<&str> = part.split('#').collect();
    if pieces.len() % 2 == 0 {
        return Err(Error::Parse(format!("gluing needs G#H#G form: {part:?}")));
    }
    let mut acc = parse_atom(pieces[0])?;
    for pair in pieces[1..].chunks(2) {
        let h = parse_atom(pair[0])?;
        let next = parse_atom(pair[1])?;
        let e1 = first_embedding(&h, &acc)
            .ok_or_else(|| Error::Parse(format!("{} is not an induced subgraph", pair[0])))?;
        let e2 = first_embedding(&h, &next)
            .ok_or_else(|| Error::Parse(format!("{} is not an induced subgraph", pair[0])))?;
        acc = acc.clique_sum(&next, &e1, &e2)?;
    }
    Ok(acc)
}

fn parse_atom(atom: &str) -> Result<Graph> {
    let digits: String = atom.chars().take_while(|c| c.is_ascii_digit()).collect();
    if !digits.is_empty() {
        let copies: usize = digits.parse().map_err(|_| Error::Parse(atom.into()))?;
        if copies == 0 {
            return Err(Error::Parse(format!("zero copies in {atom:?}")));
        }
        let base = parse_named(&atom[digits.len()..])?;
        let mut g = base.clone();
        for _ in 1..copies {
            g = g.disjoint_union(&base)?;
        }
        return Ok(g);
    }
    parse_named(atom)
}

fn parse_named(name: &str) -> Result<Graph> {
    let bad = || Error::Parse(format!("unknown graph name {name:?}"));
    let num = |s: &str| -> Result<usize> { s.parse().map_err(|_| bad()) };
    let mut chars = name.chars();
    let head = chars.next().ok_or_else(bad)?;
    let tail = chars.as_str();
    match head {
        'K' => {
            if let Some(n) = tail.strip_suffix("-e") {
                complete_minus_edge(num(n)?)
            } else if let Some((a, b)) = tail.split_once('_') {
                complete_bipartite(num(a)?, num(b)?)
            } else {
                complete(num(tail)?)
            }
        }
        'C' => cycle(num(tail)?),
        'P' => path(num(tail)?),
        'G' => fixed(num(tail)?),
        _ => Err(bad()),
    }
}

/// Lexicographically first injective map `V(h) -> V(g)` whose image induces
/// exactly `h`.
pub(crate) fn first_embedding(h: &Graph, g: &Graph) -> Option<Vec<usize>> {
    fn extend(h: &Graph, g: &Graph, cur: &mut Vec<usize>) -> bool {
        let k = cur.len();
        if k == h.n() {
            return true;
        }
        for v in 1..=g.n() {
            if cur.contains(&v) {
                continue;
            }
            let ok = (0..k).all(|i| h.has_edge(i + 1, k + 1) == g.has_edge(cur[i], v));
            if ok {
                cur.push(v);
                if extend(h, g, cur) {
                    return true;
                }
                cur.pop();
            }
        }
        false
    }
    let mut cur = Vec::new();
    extend(h, g, &mut cur).then_some(cur)
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub graph: Graph,
}

/// The fixed list of named graphs used by the checks and the invariant table.
#[derive(Debug, Clone)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

/// Graphs without isolated vertices on at most five vertices with nonzero
/// cut ideal, ordered by vertex count and then edge count.
pub const TABLE_GRAPHS: [&str; 31] = [
    "P3", "2K2", "P4", "K1_3", "K2#K1#K3", "C4", "K4-e", "K4", "K2+P3", "K2+K3", "P5", "K1_4",
    "G1", "G2", "G3", "G4", "K2#K1#C4", "C5", "K3#K1#K3", "G5", "G6", "K3#K2#C4", "C4#P3#C4",
    "G7", "G8", "K2#K1#K4", "G9", "K3#K2#K4", "G10", "K5-e", "K5",
];

/// Small graphs outside the table: zero ideals and graphs with isolated vertices.
pub const EXTRA_GRAPHS: [&str; 7] = ["K2", "K3", "K2+K1", "K3+K1", "P3+K1", "K2+2K1", "K2+K1+K1+K1"];

impl Catalog {
    pub fn standard() -> Catalog {
        let entries = EXTRA_GRAPHS
            .iter()
            .chain(TABLE_GRAPHS.iter())
            .map(|&name| CatalogEntry {
                name,
                graph: parse_graph(name).expect("catalog names parse"),
            })
            .collect();
        Catalog { entries }
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn get(&self, name: &str) -> Option<&Graph> {
        self.entries.iter().find(|e| e.name == name).map(|e| &e.graph)
    }

    pub fn up_to(&self, max_n: usize) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.iter().filter(move |e| e.graph.n() <= max_n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{is_isomorphic, Edge};

    fn iso(a: &Graph, b: &str) -> bool {
        is_isomorphic(a, &parse_graph(b).unwrap()).unwrap()
    }

    #[test]
    fn explicit_syntax() {
        let g = parse_graph(" n=5; 1-2, 2-3,3-4 ,4-5").unwrap();
        assert!(iso(&g, "P5"));
        assert!(parse_graph("n=3; 1-4").is_err());
        assert!(parse_graph("n=x").is_err());
        assert!(parse_graph("Q7").is_err());
        assert!(parse_graph("").is_err());
    }

    #[test]
    fn table_edge_counts() {
        let expect = [
            2, 2, 3, 3, 4, 4, 5, 6, 3, 4, 4, 4, 4, 5, 5, 5, 5, 5, 6, 6, 6, 6, 6, 7, 7, 7, 7, 8, 8, 9,
            10,
        ];
        for (name, m) in TABLE_GRAPHS.iter().zip(expect) {
            let g = parse_graph(name).unwrap();
            assert_eq!(g.num_edges(), m, "{name}");
            assert!(g.isolated_vertices().is_empty(), "{name}");
        }
    }

    #[test]
    fn table_graphs_pairwise_non_isomorphic() {
        let gs: Vec<Graph> = TABLE_GRAPHS.iter().map(|n| parse_graph(n).unwrap()).collect();
        for i in 0..gs.len() {
            for j in (i + 1)..gs.len() {
                assert!(!is_isomorphic(&gs[i], &gs[j]).unwrap(), "{} {}", TABLE_GRAPHS[i], TABLE_GRAPHS[j]);
            }
        }
    }

    #[test]
    fn gluing_examples() {
        assert!(iso(&parse_graph("K2#K1#K3").unwrap(), "n=4;1-2,2-3,3-4,2-4"));
        assert!(iso(&parse_graph("C4#P3#C4").unwrap(), "K2_3"));
        assert!(iso(&parse_graph("2K2").unwrap(), "K2+K2"));
        // two gluings of a triangle and a path at one vertex
        let k3 = complete(3).unwrap();
        let p3 = path(3).unwrap();
        let end = k3.clique_sum(&p3, &[1], &[1]).unwrap();
        let mid = k3.clique_sum(&p3, &[1], &[2]).unwrap();
        assert!(!is_isomorphic(&end, &mid).unwrap());
        assert!(iso(&end, "G2"));
        assert!(iso(&mid, "G4"));
    }

    #[test]
    fn family_operations() {
        for n in 4..=7 {
            let (c, _) = cycle(n).unwrap().contract_edge(Edge(1, 2)).unwrap();
            assert!(is_isomorphic(&c, &cycle(n - 1).unwrap()).unwrap());
        }
        for n in 3..=7 {
            let (k, _) = complete(n).unwrap().contract_edge(Edge(2, 3)).unwrap();
            assert!(is_isomorphic(&k, &complete(n - 1).unwrap()).unwrap());
        }
        let (c3, _) = cycle(4).unwrap().contract_edge(Edge(1, 4)).unwrap();
        assert!(iso(&c3, "K3"));
        let p4 = cycle(4).unwrap().delete_edge(Edge(1, 4)).unwrap();
        assert!(iso(&p4, "P4"));
        assert!(iso(&path(3).unwrap().duplicate_vertex(1).unwrap(), "K1_3"));
        assert!(iso(&cycle(4).unwrap().duplicate_vertex(2).unwrap(), "K2_3"));
        // merging the degree-2 vertex of G6 with its pendant vertex gives K4
        let (k4, _) = fixed(6).unwrap().identify_vertices(2, 4).unwrap();
        assert!(iso(&k4, "K4"));
    }

    #[test]
    fn wheel_rim_is_not_neighborhood_minor() {
        let g10 = fixed(10).unwrap();
        assert_eq!(g10.degree(4), 4);
        assert_eq!(g10.neighborhood_minor_witness(&[1, 2, 3, 5]).unwrap(), None);
    }

    #[test]
    fn glued_parts_are_neighborhood_minors() {
        // K3 glued to C4 along an edge: both sides are neighbourhood-minors
        let g = parse_graph("K3#K2#C4").unwrap();
        assert!(g.neighborhood_minor_witness(&[1, 2, 3]).unwrap().is_some());
        assert!(g.neighborhood_minor_witness(&[1, 2, 4, 5]).unwrap().is_some());
    }
}
