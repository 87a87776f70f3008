use super::{affine_rank, cut_polytope, double_description, rank, FaceLattice, Rat};
use crate::error::{Error, Result};
use crate::graph::{parse_graph, Edge, Graph};
use serde_json::{json, Value};
use std::collections::{BTreeMap, BTreeSet};

/// Outcome of checking that contracting `edge` realises the smaller cut
/// polytope as the face `x_edge = 0` of the larger one, under
/// `β ↦ (β, 0, β restricted to the common-neighbour edges)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceMapReport {
    pub graph: String,
    pub edge: Edge,
    pub contracted: String,
    pub common_neighbors: Vec<usize>,
    /// Edges of the contracted graph in arranged coordinate order.
    pub source_order: Vec<Edge>,
    /// Edges of the original graph in arranged coordinate order.
    pub target_order: Vec<Edge>,
    pub source_vertices: usize,
    pub face_vertices: usize,
    /// `x_edge >= 0` holds on every vertex, so `x_edge = 0` cuts a face.
    pub face_valid: bool,
    /// The map sends vertices onto the face's vertices one to one.
    pub bijective: bool,
    /// The linear map has full column rank and the face has the source's
    /// dimension.
    pub affine_isomorphism: bool,
}

impl FaceMapReport {
    pub fn passed(&self) -> bool {
        self.face_valid && self.bijective && self.affine_isomorphism
    }

    pub fn to_json(&self) -> Value {
        let edges = |es: &[Edge]| es.iter().map(|e| format!("{}-{}", e.0, e.1)).collect::<Vec<_>>();
        json!({
            "graph": self.graph,
            "edge": format!("{}-{}", self.edge.0, self.edge.1),
            "contracted": self.contracted,
            "common_neighbors": self.common_neighbors,
            "source_order": edges(&self.source_order),
            "target_order": edges(&self.target_order),
            "source_vertices": self.source_vertices,
            "face_vertices": self.face_vertices,
            "face_valid": self.face_valid,
            "bijective": self.bijective,
            "affine_isomorphism": self.affine_isomorphism,
            "passed": self.passed(),
        })
    }
}

fn cut_vectors(g: &Graph) -> BTreeSet<Vec<u8>> {
    g.partitions()
        .iter()
        .map(|p| g.cut_vector(p).expect("own partition").coords)
        .collect()
}

pub fn contraction_face_map(g: &Graph, edge: Edge) -> Result<FaceMapReport> {
    let (small, relabel) = g.contract_edge(edge)?;
    let (u, v) = (edge.0, edge.1);
    let w = relabel[u];
    let common: Vec<usize> = g
        .neighbors(u)
        .into_iter()
        .filter(|&x| x != v && g.has_edge(v, x))
        .collect();
    let image = |e: &Edge| Edge::new(relabel[e.0], relabel[e.1]);
    let small_index = |e: Edge| {
        small
            .edge_index(e)
            .ok_or_else(|| Error::Arrangement(format!("{}-{} missing after contraction", e.0, e.1)))
    };

    // source: {w, v_i} first, then every other edge in the contracted
    // graph's own order; target: {u, v_i}, the matching edges, e, {v, v_i}
    let mut source_order: Vec<Edge> = common.iter().map(|&x| Edge::new(w, relabel[x])).collect();
    let mut target_order: Vec<Edge> = common.iter().map(|&x| Edge::new(u, x)).collect();
    let mut rest: Vec<(usize, Edge)> = Vec::new();
    for &e in g.edges() {
        let touches_common = common.iter().any(|&x| e == Edge::new(u, x) || e == Edge::new(v, x));
        if e == edge || touches_common {
            continue;
        }
        rest.push((small_index(image(&e))?, e));
    }
    rest.sort();
    for (k, e) in rest {
        source_order.push(small.edges()[k]);
        target_order.push(e);
    }
    target_order.push(edge);
    target_order.extend(common.iter().map(|&x| Edge::new(v, x)));
    let distinct: BTreeSet<&Edge> = source_order.iter().collect();
    if source_order.len() != small.num_edges() || distinct.len() != small.num_edges() {
        return Err(Error::Arrangement("contracted edges not covered exactly once".into()));
    }
    if target_order.len() != g.num_edges() {
        return Err(Error::Arrangement("original edges not covered exactly once".into()));
    }

    // linear map in native coordinates: column per contracted edge
    let m = g.num_edges();
    let p = common.len();
    let mut map = vec![vec![0u8; small.num_edges()]; m];
    for (pos, te) in target_order.iter().enumerate() {
        let src = if pos < source_order.len() {
            Some(source_order[pos])
        } else if pos == source_order.len() {
            None
        } else {
            Some(source_order[pos - source_order.len() - 1])
        };
        debug_assert!(pos <= source_order.len() || pos - source_order.len() - 1 < p);
        if let Some(se) = src {
            let row = g.edge_index(*te).expect("edge of g");
            map[row][small_index(se)?] = 1;
        }
    }
    let apply = |beta: &[u8]| -> Vec<u8> {
        map.iter()
            .map(|row| row.iter().zip(beta).map(|(a, b)| a * b).sum())
            .collect()
    };

    let e_idx = g.edge_index(edge).expect("checked edge");
    let big = cut_vectors(g);
    let face: BTreeSet<Vec<u8>> = big.iter().filter(|x| x[e_idx] == 0).cloned().collect();
    let source = cut_vectors(&small);
    let images: BTreeSet<Vec<u8>> = source.iter().map(|b| apply(b)).collect();
    let bijective = images.len() == source.len() && images == face;

    let rat = |x: &Vec<u8>| -> Vec<Rat> { x.iter().map(|&c| Rat::from_integer(c.into())).collect() };
    let face_pts: Vec<Vec<Rat>> = face.iter().map(rat).collect();
    let src_pts: Vec<Vec<Rat>> = source.iter().map(rat).collect();
    let map_rank = rank(map.iter().map(rat).collect());
    let affine_isomorphism = map_rank == small.num_edges()
        && affine_rank(&face_pts.iter().collect::<Vec<_>>())
            == affine_rank(&src_pts.iter().collect::<Vec<_>>());

    Ok(FaceMapReport {
        graph: g.to_dsl(),
        edge,
        contracted: small.to_dsl(),
        common_neighbors: common,
        source_order,
        target_order,
        source_vertices: source.len(),
        face_vertices: face.len(),
        // x_e >= 0 holds on 0/1 points; the face is the tight set
        face_valid: !face.is_empty() && big.iter().all(|x| x[e_idx] <= 1),
        bijective,
        affine_isomorphism,
    })
}

/// Why the square cut polytope of a 3-path is not a face of the cut polytope
/// of a 4-cycle: every 2-face of the latter has three vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OhsugiCertificate {
    pub square_dim: usize,
    pub square_vertices: usize,
    pub cycle_dim: usize,
    pub cycle_vertices: usize,
    pub cycle_facets: usize,
    pub cycle_f_vector: Vec<usize>,
    /// Vertex count of a 2-face mapped to how many 2-faces have it.
    pub two_face_vertex_counts: BTreeMap<usize, usize>,
    pub not_a_face: bool,
}

impl OhsugiCertificate {
    pub fn text(&self) -> String {
        let counts: Vec<String> = self
            .two_face_vertex_counts
            .iter()
            .map(|(k, v)| format!("{v} with {k} vertices"))
            .collect();
        format!(
            "cut polytope of P3: dim {}, {} vertices (a square)\n\
             cut polytope of C4: dim {}, {} vertices, {} facets, f-vector {:?}\n\
             2-faces of the C4 polytope: {}\n\
             an affine isomorphism preserves vertex counts, so no 2-face is a square\n\
             verdict: {}\n",
            self.square_dim,
            self.square_vertices,
            self.cycle_dim,
            self.cycle_vertices,
            self.cycle_facets,
            self.cycle_f_vector,
            counts.join(", "),
            if self.not_a_face { "not-a-face" } else { "undecided" },
        )
    }

    pub fn to_json(&self) -> Value {
        json!({
            "square": {"dim": self.square_dim, "vertices": self.square_vertices},
            "cycle": {
                "dim": self.cycle_dim,
                "vertices": self.cycle_vertices,
                "facets": self.cycle_facets,
                "f_vector": self.cycle_f_vector,
            },
            "two_face_vertex_counts": self.two_face_vertex_counts
                .iter()
                .map(|(k, v)| json!({"vertices": k, "faces": v}))
                .collect::<Vec<_>>(),
            "verdict": if self.not_a_face { "not-a-face" } else { "undecided" },
        })
    }
}

pub fn ohsugi_certificate() -> Result<OhsugiCertificate> {
    let square = cut_polytope(&parse_graph("P3")?)?;
    let cycle = cut_polytope(&parse_graph("C4")?)?;
    let h = double_description(&cycle)?;
    let lattice = FaceLattice::new(&cycle, &h);
    let hist = lattice.vertex_count_histogram(2);
    let square_dim = square.dimension();
    let not_a_face = square_dim == 2 && !hist.contains_key(&square.len());
    Ok(OhsugiCertificate {
        square_dim,
        square_vertices: square.len(),
        cycle_dim: cycle.dimension(),
        cycle_vertices: cycle.len(),
        cycle_facets: h.facets.len(),
        cycle_f_vector: lattice.f_vector(),
        two_face_vertex_counts: hist,
        not_a_face,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(spec: &str, a: usize, b: usize) -> FaceMapReport {
        contraction_face_map(&parse_graph(spec).unwrap(), Edge(a, b)).unwrap()
    }

    #[test]
    fn cycle_contraction() {
        let r = report("C4", 1, 2);
        assert!(r.passed());
        assert_eq!((r.source_vertices, r.face_vertices), (4, 4));
        assert!(r.common_neighbors.is_empty());
    }

    #[test]
    fn complete_graph_contraction_duplicates_common_edges() {
        let r = report("K4", 1, 2);
        assert!(r.passed());
        assert_eq!(r.common_neighbors, vec![3, 4]);
        assert_eq!(r.face_vertices, 4);
        assert_eq!(r.target_order.last(), Some(&Edge(2, 4)));
    }

    #[test]
    fn path_edge_is_a_segment_face() {
        let r = report("P3", 1, 2);
        assert!(r.passed());
        assert_eq!((r.source_vertices, r.face_vertices), (2, 2));
    }

    #[test]
    fn single_edge_contracts_to_a_point() {
        let r = report("K2", 1, 2);
        assert!(r.passed());
        assert_eq!(r.face_vertices, 1);
    }

    #[test]
    fn not_an_edge() {
        let g = parse_graph("P3").unwrap();
        assert!(contraction_face_map(&g, Edge(1, 3)).is_err());
    }

    #[test]
    fn certificate() {
        let c = ohsugi_certificate().unwrap();
        assert!(c.not_a_face);
        assert_eq!(c.two_face_vertex_counts, BTreeMap::from([(3, 32)]));
        assert!(c.text().contains("verdict: not-a-face"));
    }
}
