use cutalg::classify::{table1, Classifier, Move, RowStatus, Table1Options};
use cutalg::graph::{parse_graph, Catalog, Edge, Graph};
use cutalg::Error;
use proptest::prelude::*;
use std::collections::BTreeSet;

fn g(s: &str) -> Graph {
    parse_graph(s).unwrap()
}

fn nonempty(max_n: usize) -> impl Iterator<Item = (&'static str, Graph)> {
    let cat = Catalog::standard();
    let v: Vec<_> = cat
        .up_to(max_n)
        .filter(|e| e.graph.num_edges() > 0)
        .map(|e| (e.name, e.graph.clone()))
        .collect();
    v.into_iter()
}

#[test]
fn generator_level_checks_over_the_catalog() {
    let c = Classifier::default();
    for (name, graph) in nonempty(5) {
        let reports = [
            c.check_ideal_zero(&graph).unwrap(),
            c.check_linear_forms(&graph).unwrap(),
            c.check_complete_intersection(&graph).unwrap(),
            c.check_single_degree(&graph).unwrap(),
            c.check_n1(&graph).unwrap(),
        ];
        for r in reports {
            assert!(r.agree, "{name}: {}", r.line());
        }
    }
}

#[test]
fn resolution_checks_on_four_vertices() {
    let c = Classifier::default();
    for (name, graph) in nonempty(4) {
        for r in c.classify(&graph).unwrap() {
            assert!(r.agree, "{name}: {}", r.line());
        }
    }
    // several generator degrees settle these without a full table
    for name in ["K2#K1#K4", "K5"] {
        let r = c.check_linear_resolution(&g(name)).unwrap();
        assert!(r.agree, "{}", r.line());
    }
}

#[test]
fn theorem_examples() {
    let c = Classifier::default();
    let lf = c.check_linear_forms(&g("K2+P3")).unwrap();
    assert_eq!(lf.detail["linear_forms"], 8);
    assert_eq!(c.check_linear_forms(&g("2K2")).unwrap().detail["linear_forms"], 4);

    let ci = c.check_complete_intersection(&g("K5-e")).unwrap();
    assert_eq!((ci.detail["generators"].as_u64(), ci.detail["height"].as_u64()), (Some(35), Some(6)));
    assert!(ci.agree);
    let ci = c.check_complete_intersection(&g("K2#K1#K3")).unwrap();
    assert_eq!(ci.detail["generators"], 6);
    assert!(c.check_complete_intersection(&g("P3+K1")).unwrap().computed.starts_with("CI"));

    let sd = c.check_single_degree(&g("K2#K1#K4")).unwrap();
    assert_eq!(sd.detail["degrees"], serde_json::json!([2, 4]));
    let sd = c.check_single_degree(&g("K2+K3")).unwrap();
    assert_eq!(sd.detail["degrees"], serde_json::json!([1, 2]));

    let lr = c.check_linear_resolution(&g("K4")).unwrap();
    assert_eq!(lr.detail["linear"], true);
    let lr = c.check_linear_resolution(&g("C4")).unwrap();
    assert_eq!(lr.detail["linear"], false);

    for (name, n1) in [("P5", true), ("C4", false), ("K3#K1#K3", true)] {
        let r = c.check_n1(&g(name)).unwrap();
        assert_eq!(r.detail["n1"], n1, "{name}");
    }
    assert_eq!(c.check_n1(&g("P5")).unwrap().detail["retract_free"], true);

    let u = c.check_unicyclic_reg_bounds(&g("G2")).unwrap();
    assert_eq!((u.detail["reg"].as_u64(), u.detail["lower"].as_u64()), (Some(3), Some(3)));
    assert!(u.agree);
}

/// Every contraction and every neighbourhood-minor step of graphs on at most
/// four vertices.
fn moves(graph: &Graph) -> Vec<Move> {
    let mut out: Vec<Move> = graph.edges().iter().map(|&e| Move::Contraction(e)).collect();
    let n = graph.n();
    for mask in 1u32..(1 << n) - 1 {
        let w: Vec<usize> = (1..=n).filter(|v| mask >> (v - 1) & 1 == 1).collect();
        let edgeless = graph.induced_subgraph(&w).unwrap().num_edges() == 0;
        if !edgeless && graph.neighborhood_minor_witness(&w).unwrap().is_some() {
            out.push(Move::NeighborhoodMinor(w));
        }
    }
    out
}

#[test]
fn betti_numbers_do_not_grow_under_retracts() {
    let c = Classifier::default();
    let mut pairs = 0;
    for (name, graph) in nonempty(4) {
        for mv in moves(&graph) {
            let r = match c.check_betti_monotonicity(&graph, &mv) {
                Err(Error::NotApplicable(_)) => continue,
                other => other.unwrap(),
            };
            assert!(r.agree, "{name}: {}", r.line());
            assert_eq!(r.computed.split(' ').next(), Some("monotone"), "{name}: {}", r.line());
            pairs += 1;
        }
    }
    assert!(pairs > 100);
    let r = c
        .check_betti_monotonicity(&g("K2#K1#K3"), &Move::NeighborhoodMinor(vec![1, 2, 3]))
        .unwrap();
    assert_eq!(r.detail["generators"], serde_json::json!([6, 1]));
}

#[test]
fn deletion_breaks_projdim_monotonicity() {
    let c = Classifier::default();
    let r = c.check_betti_monotonicity(&g("C4"), &Move::Deletion(Edge(1, 4))).unwrap();
    assert_eq!(r.detail["projdim_monotone"], false);
    assert!(r.computed.contains("projdim 2 -> 3"), "{}", r.line());
    assert!(r.agree);
    let bad = c.check_betti_monotonicity(&g("P4"), &Move::NeighborhoodMinor(vec![1, 3]));
    assert!(matches!(bad, Err(Error::NotApplicable(_))));
}

#[test]
fn table_on_four_vertices_matches() {
    let rep = table1(&Table1Options::default()).unwrap();
    let names: Vec<_> = rep.rows.iter().map(|r| r.name).collect();
    assert_eq!(names, ["P3", "2K2", "P4", "K1_3", "K2#K1#K3", "C4", "K4-e", "K4"]);
    assert_eq!(rep.diff_count(), 0, "{}", rep.text());
    for row in &rep.rows {
        assert_eq!(row.status, RowStatus::Complete);
        assert_eq!(row.computed.cm, Some(true), "{}", row.name);
        // Cohen-Macaulay: projdim(I) = 2^(n-1) - |E| - 2
        let expect = (1 << (row.n - 1)) - row.edges - 2;
        assert_eq!(row.computed.projdim, Some(expect), "{}", row.name);
        assert_eq!(row.computed.height_bound, Some(true));
    }
    assert!(rep.text().ends_with("rows: 8, diffs: 0\n"));
}

#[test]
fn table_second_prime_agrees() {
    let opts = Table1Options {
        check_field: Some(cutalg::poly::PrimeField::new(101).unwrap()),
        ..Table1Options::default()
    };
    let rep = table1(&opts).unwrap();
    assert!(rep.rows.iter().all(|r| r.prime_check == Some((101, true))));
}

#[test]
fn five_vertex_generators_only_differ_on_two_figure_rows() {
    let opts = Table1Options {
        max_n: 5,
        ..Table1Options::default()
    };
    let rep = table1(&opts).unwrap();
    assert_eq!(rep.rows.len(), 31);
    let diffs: BTreeSet<(&str, &str)> = rep
        .rows
        .iter()
        .flat_map(|r| r.diffs.iter().map(move |d| (r.name, d.column)))
        .collect();
    assert_eq!(diffs, BTreeSet::from([("G9", "maxdeg"), ("G10", "maxdeg")]), "{}", rep.text());
    let k5 = rep.rows.iter().find(|r| r.name == "K5").unwrap();
    assert_eq!((k5.computed.mindeg, k5.computed.maxdeg), (Some(4), Some(6)));
    assert_eq!(k5.computed.cm, Some(false));
    let k5e = rep.rows.iter().find(|r| r.name == "K5-e").unwrap();
    assert_eq!(k5e.computed.generators, Some(35));
}

#[test]
#[ignore = "full five-vertex resolutions take minutes"]
fn five_vertex_full_table() {
    let opts = Table1Options {
        max_n: 5,
        slow: true,
        ..Table1Options::default()
    };
    let rep = table1(&opts).unwrap();
    let diffs: BTreeSet<(&str, &str)> = rep
        .rows
        .iter()
        .flat_map(|r| r.diffs.iter().map(move |d| (r.name, d.column)))
        .collect();
    let expected = BTreeSet::from([
        ("G9", "maxdeg"),
        ("G10", "maxdeg"),
        ("K3#K2#C4", "reg"),
        ("K3#K2#K4", "reg"),
    ]);
    assert_eq!(diffs, expected, "{}", rep.text());
}

fn graph_on_four() -> impl Strategy<Value = Graph> {
    proptest::collection::vec(any::<bool>(), 6).prop_filter_map("needs an edge", |bits| {
        let all = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];
        let edges: Vec<_> = all.iter().zip(&bits).filter(|(_, b)| **b).map(|(e, _)| *e).collect();
        (!edges.is_empty()).then(|| Graph::new(4, edges).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn every_applicable_check_agrees(graph in graph_on_four()) {
        let c = Classifier::default();
        for r in c.classify(&graph).unwrap() {
            prop_assert!(r.agree, "{}", r.line());
        }
    }

    #[test]
    fn quotient_projdim_bounds_height(graph in graph_on_four()) {
        let c = Classifier::default();
        let t = c.betti(&graph).unwrap();
        let height = (1usize << 3) - graph.num_edges() - 1;
        let pd = t.invariants().map_or(0, |x| x.projdim + 1);
        prop_assert!(pd >= height);
    }
}
