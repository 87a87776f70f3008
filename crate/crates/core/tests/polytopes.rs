use cutalg::graph::{parse_graph, Catalog};
use cutalg::polytope::{
    affine_rank, contraction_face_map, cut_polytope, double_description, FaceLattice, VPolytope,
};
use proptest::prelude::*;
use std::collections::BTreeSet;

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn four_cycle_is_the_cross_polytope() {
    let p = cut_polytope(&parse_graph("C4").unwrap()).unwrap();
    assert_eq!((p.len(), p.dimension()), (8, 4));
    let h = double_description(&p).unwrap();
    assert_eq!(h.facets.len(), 16);
    let l = FaceLattice::new(&p, &h);
    // d-dimensional cross polytope: f_k = 2^(k+1) C(d, k+1)
    let expect: Vec<usize> = (0..4).map(|k| (1 << (k + 1)) * binom(4, k + 1)).collect();
    assert_eq!(l.f_vector(), expect);
    assert!(l.faces_of_dim(2).iter().all(|f| f.vertices.len() == 3));
    assert!(l.is_closed_under_intersection());
}

#[test]
fn dimension_equals_edge_count() {
    for e in Catalog::standard().entries() {
        if e.graph.num_edges() == 0 {
            continue;
        }
        let p = cut_polytope(&e.graph).unwrap();
        assert_eq!(p.dimension(), e.graph.num_edges(), "{}", e.name);
    }
}

#[test]
fn vertex_count_bounds() {
    for e in Catalog::standard().entries() {
        let g = &e.graph;
        let p = cut_polytope(g).unwrap();
        let top = 1 << (g.n() - 1);
        assert!(g.num_edges() < p.len() && p.len() <= top, "{}", e.name);
        assert_eq!(p.len() == top, g.is_connected(), "{}", e.name);
    }
}

#[test]
fn round_trip_and_face_lattice_checks() {
    for e in Catalog::standard().entries() {
        if e.graph.num_edges() > 6 {
            continue;
        }
        let p = cut_polytope(&e.graph).unwrap();
        let h = double_description(&p).unwrap();
        assert!(h.equations.is_empty(), "{}", e.name);
        let mut back: Vec<_> = h.to_vertices().unwrap().vertices().to_vec();
        let mut orig: Vec<_> = p.vertices().to_vec();
        back.sort();
        orig.sort();
        assert_eq!(back, orig, "{}", e.name);
        let d = p.dimension();
        for facet in h.incidence(&p) {
            let pts: Vec<_> = facet.iter().map(|&i| &p.vertices()[i]).collect();
            assert_eq!(affine_rank(&pts), d - 1, "{}", e.name);
        }
        let l = FaceLattice::new(&p, &h);
        assert!(l.euler_holds(), "{}", e.name);
        assert!(l.is_closed_under_intersection(), "{}", e.name);
        assert_eq!(l.f_vector()[0], p.len(), "{}", e.name);
        assert_eq!(l.f_vector()[d - 1], h.facets.len(), "{}", e.name);
    }
}

#[test]
fn contraction_faces_over_the_catalog() {
    for e in Catalog::standard().up_to(5) {
        for &edge in e.graph.edges() {
            let r = contraction_face_map(&e.graph, edge).unwrap();
            assert!(r.passed(), "{} / {:?}: {r:?}", e.name, edge);
        }
    }
}

/// Strict vertices of the convex hull of planar points (monotone chain).
fn hull_2d(pts: &[(i64, i64)]) -> BTreeSet<(i64, i64)> {
    let mut p: Vec<_> = pts.to_vec();
    p.sort();
    p.dedup();
    if p.len() <= 2 {
        return p.into_iter().collect();
    }
    let cross = |o: (i64, i64), a: (i64, i64), b: (i64, i64)| {
        (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
    };
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &(i64, i64)>> =
            if pass == 0 { Box::new(p.iter()) } else { Box::new(p.iter().rev()) };
        for &q in iter {
            while hull.len() >= start + 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], q) <= 0 {
                hull.pop();
            }
            hull.push(q);
        }
        hull.pop();
    }
    hull.into_iter().collect()
}

proptest! {
    #[test]
    fn planar_hulls_match_monotone_chain(pts in proptest::collection::vec((-4i64..5, -4i64..5), 1..12)) {
        let expect = hull_2d(&pts);
        let flat: Vec<Vec<i64>> = pts.iter().map(|&(x, y)| vec![x, y]).collect();
        let p = VPolytope::from_integer_points(2, &flat).unwrap();
        let h = double_description(&p).unwrap();
        for v in p.vertices() {
            prop_assert!(h.contains(v));
        }
        let got: BTreeSet<(i64, i64)> = h.to_vertices().unwrap().vertices().iter().map(|v| {
            (v[0].to_integer().try_into().unwrap(), v[1].to_integer().try_into().unwrap())
        }).collect();
        let collinear = affine_rank(&p.vertices().iter().collect::<Vec<_>>()) < 2;
        if !collinear {
            prop_assert_eq!(&got, &expect);
        } else {
            // segment or point: the two extreme points along the line
            prop_assert!(got.len() <= 2 && got.is_subset(&pts.iter().copied().collect()));
        }
        let reduced: BTreeSet<(i64, i64)> = p.reduce_vertices().unwrap().vertices().iter().map(|v| {
            (v[0].to_integer().try_into().unwrap(), v[1].to_integer().try_into().unwrap())
        }).collect();
        prop_assert_eq!(reduced, got);
    }
}
