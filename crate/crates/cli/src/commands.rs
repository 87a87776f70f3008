use cutalg::classify::{table1, Classifier, Table1Options};
use cutalg::cutideal::{
    cut_ideal, cut_ideal_elimination, minimal_generators, BettiOptions,
};
use cutalg::graph::{canonical_form, combinatorial_retracts, parse_graph, Catalog, Edge, Graph};
use cutalg::poly::PrimeField;
use cutalg::polytope::{
    contraction_face_map, cut_polytope, double_description, ohsugi_certificate, FaceLattice,
};
use cutalg::{Error, Result};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::fmt::Write;
use std::time::Duration;

/// Settings shared by every command.
#[derive(Debug, Clone)]
pub struct Config {
    pub field: PrimeField,
    pub check_field: Option<PrimeField>,
    pub timeout: Option<Duration>,
    pub slow: bool,
    pub seed: u64,
}

impl Config {
    fn betti_options(&self) -> BettiOptions {
        BettiOptions {
            seed: self.seed,
            ..BettiOptions::default()
        }
    }
}

/// What a command produces, in both output formats.
pub struct Output {
    pub text: String,
    pub json: Value,
}

fn envelope(command: &str, mut body: Value) -> Value {
    let obj = body.as_object_mut().expect("object body");
    obj.insert("schema".into(), json!(1));
    obj.insert("command".into(), json!(command));
    body
}

fn degree_map(by_degree: &BTreeMap<u32, usize>) -> Value {
    by_degree.iter().map(|(d, c)| (d.to_string(), json!(c))).collect::<serde_json::Map<_, _>>().into()
}

fn degree_text(by_degree: &BTreeMap<u32, usize>) -> String {
    let parts: Vec<String> = by_degree.iter().map(|(d, c)| format!("{c} of degree {d}")).collect();
    if parts.is_empty() {
        "none".into()
    } else {
        parts.join(", ")
    }
}

pub fn ideal(spec: &str, cfg: &Config, elimination: bool) -> Result<Output> {
    let g = parse_graph(spec)?;
    let ideal = if elimination {
        cut_ideal_elimination(&g, cfg.field)?
    } else {
        cut_ideal(&g, cfg.field)?
    };
    let mins = minimal_generators(&ideal)?;
    let formula = (1usize << (g.n() - 1)) - g.num_edges() - 1;
    let gens = ideal.format_generators();
    let minimal: Vec<String> = mins.polys.iter().map(|p| ideal.ring().ring().format(p)).collect();
    let mut text = String::new();
    writeln!(text, "graph: {}", g.to_dsl()).unwrap();
    writeln!(text, "ring: {} variables over F_{}", ideal.ring().nvars(), cfg.field.characteristic()).unwrap();
    writeln!(text, "reduced Groebner basis ({}):", gens.len()).unwrap();
    for s in &gens {
        writeln!(text, "  {s}").unwrap();
    }
    writeln!(text, "minimal generators: {} ({})", mins.total(), degree_text(&mins.by_degree)).unwrap();
    for s in &minimal {
        writeln!(text, "  {s}").unwrap();
    }
    writeln!(text, "krull dimension: {} (|E| + 1 = {})", ideal.krull_dimension(), g.num_edges() + 1).unwrap();
    writeln!(
        text,
        "height: {} (2^(n-1) - |E| - 1 = {formula}){}",
        ideal.height(),
        if ideal.height() == formula { "" } else { " MISMATCH" }
    )
    .unwrap();
    let json = json!({
        "graph": g.to_dsl(),
        "p": cfg.field.characteristic(),
        "nvars": ideal.ring().nvars(),
        "variables": ideal.ring().ring().names(),
        "groebner_basis": gens,
        "minimal_generators": minimal,
        "generators_by_degree": degree_map(&mins.by_degree),
        "zero": ideal.is_zero(),
        "linear_forms": ideal.linear_dimension(),
        "krull_dimension": ideal.krull_dimension(),
        "height": ideal.height(),
        "height_formula": formula,
    });
    Ok(Output { text, json: envelope("ideal", json) })
}

pub fn betti(spec: &str, cfg: &Config) -> Result<Output> {
    let g = parse_graph(spec)?;
    let classifier = Classifier::with_options(cfg.field, cfg.betti_options());
    let t = classifier.betti(&g)?;
    let mut text = String::new();
    writeln!(text, "graph: {}", g.to_dsl()).unwrap();
    writeln!(text, "Betti diagram of S/I over F_{}:", cfg.field.characteristic()).unwrap();
    text.push_str(&t.diagram());
    if let Some(inv) = t.invariants().filter(|_| !t.is_truncated()) {
        writeln!(text, "projdim(I) = {}, reg(I) = {}", inv.projdim, inv.reg).unwrap();
    }
    if t.is_truncated() {
        writeln!(text, "truncated: only the columns shown were computed").unwrap();
    }
    let mut json = t.to_json(&g.to_dsl());
    if let Some(r) = t.report() {
        json["reduction"] = json!({
            "linear_forms": r.linear_forms,
            "reduced_vars": r.reduced_vars,
            "dimension": r.dimension,
            "multiplicity": r.multiplicity,
            "artinian_length": r.artinian_length,
            "certified": r.certified(),
        });
    }
    if let Some(f) = cfg.check_field {
        let other = Classifier::with_options(f, cfg.betti_options()).betti(&g)?;
        let same = other.entries() == t.entries();
        writeln!(text, "check over F_{}: {}", f.characteristic(), if same { "same table" } else { "tables differ" }).unwrap();
        json["prime_check"] = json!({"p": f.characteristic(), "agree": same});
    }
    Ok(Output { text, json: envelope("betti", json) })
}

pub fn polytope(spec: &str) -> Result<Output> {
    let g = parse_graph(spec)?;
    let p = cut_polytope(&g)?;
    let h = double_description(&p)?;
    let lattice = FaceLattice::new(&p, &h);
    let two_faces = lattice.vertex_count_histogram(2);
    let mut text = String::new();
    writeln!(text, "graph: {}", g.to_dsl()).unwrap();
    writeln!(text, "dimension: {}", p.dimension()).unwrap();
    writeln!(text, "vertices: {}", p.len()).unwrap();
    writeln!(text, "facets: {}", h.facets.len()).unwrap();
    writeln!(text, "f-vector: {:?}", lattice.f_vector()).unwrap();
    if p.dimension() >= 2 {
        let parts: Vec<String> = two_faces.iter().map(|(k, v)| format!("{v} with {k} vertices")).collect();
        writeln!(text, "2-faces: {}", parts.join(", ")).unwrap();
    }
    writeln!(text, "facet inequalities (normal . x <= rhs):").unwrap();
    for f in &h.facets {
        let normal: Vec<String> = f.normal.iter().map(|x| x.to_string()).collect();
        writeln!(text, "  [{}] <= {}", normal.join(", "), f.rhs).unwrap();
    }
    let mut json = p.to_json(Some(&h));
    json["graph"] = json!(g.to_dsl());
    json["f_vector"] = json!(lattice.f_vector());
    json["two_faces_by_vertex_count"] = two_faces
        .iter()
        .map(|(k, v)| json!({"vertices": k, "faces": v}))
        .collect();
    Ok(Output { text, json: envelope("polytope", json) })
}

pub fn retracts(spec: &str) -> Result<Output> {
    let g = parse_graph(spec)?;
    let found = combinatorial_retracts(&g)?;
    let catalog = Catalog::standard();
    let mut names = BTreeMap::new();
    for e in catalog.entries() {
        names.entry(canonical_form(&e.graph)?).or_insert(e.name);
    }
    let mut text = String::new();
    writeln!(text, "graph: {}", g.to_dsl()).unwrap();
    writeln!(text, "combinatorial retracts up to isomorphism: {}", found.len()).unwrap();
    let mut list = Vec::new();
    for cf in &found {
        let h = cf.to_graph();
        let name = names.get(cf).copied();
        writeln!(text, "  {}{}", h.to_dsl(), name.map_or(String::new(), |n| format!("  ({n})"))).unwrap();
        list.push(json!({"graph": h.to_dsl(), "name": name, "n": h.n(), "edges": h.num_edges()}));
    }
    Ok(Output {
        text,
        json: envelope("retracts", json!({"graph": g.to_dsl(), "retracts": list})),
    })
}

pub fn classify(spec: &str, cfg: &Config) -> Result<Output> {
    let g = parse_graph(spec)?;
    let classifier = Classifier::with_options(cfg.field, cfg.betti_options());
    let reports = classifier.classify(&g)?;
    let mut text = String::new();
    for r in &reports {
        writeln!(text, "{}", r.line()).unwrap();
    }
    let json = json!({
        "graph": g.to_dsl(),
        "p": cfg.field.characteristic(),
        "reports": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
        "all_agree": reports.iter().all(|r| r.agree),
    });
    Ok(Output { text, json: envelope("classify", json) })
}

pub fn table(max_n: usize, cfg: &Config) -> Result<Output> {
    let opts = Table1Options {
        max_n,
        slow: cfg.slow,
        timeout: cfg.timeout,
        field: cfg.field,
        check_field: cfg.check_field,
        seed: cfg.seed,
    };
    let rep = table1(&opts)?;
    let mut json = rep.to_json();
    json["p"] = json!(cfg.field.characteristic());
    json["max_n"] = json!(max_n);
    json["slow"] = json!(cfg.slow);
    Ok(Output { text: rep.text(), json: envelope("table1", json) })
}

pub fn certify_ohsugi() -> Result<Output> {
    let c = ohsugi_certificate()?;
    Ok(Output { text: c.text(), json: envelope("certify-ohsugi", c.to_json()) })
}

pub fn parse_edge(s: &str) -> Result<Edge> {
    let bad = || Error::Parse(format!("edge `{s}` is not of the form a-b"));
    let (a, b) = s.split_once('-').ok_or_else(bad)?;
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().parse().map_err(|_| bad())?;
    Ok(Edge::new(a, b))
}

pub fn certify_face_map(spec: &str, edge: &str) -> Result<Output> {
    let g: Graph = parse_graph(spec)?;
    let r = contraction_face_map(&g, parse_edge(edge)?)?;
    let order = |es: &[Edge]| es.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ");
    let mut text = String::new();
    writeln!(text, "graph: {}", r.graph).unwrap();
    writeln!(text, "contract {} -> {}", r.edge, r.contracted).unwrap();
    writeln!(text, "common neighbours: {:?}", r.common_neighbors).unwrap();
    writeln!(text, "source order: {}", order(&r.source_order)).unwrap();
    writeln!(text, "target order: {}", order(&r.target_order)).unwrap();
    writeln!(text, "vertices: {} -> face with {}", r.source_vertices, r.face_vertices).unwrap();
    writeln!(text, "face valid: {}", r.face_valid).unwrap();
    writeln!(text, "bijective on vertices: {}", r.bijective).unwrap();
    writeln!(text, "affine isomorphism: {}", r.affine_isomorphism).unwrap();
    writeln!(text, "verdict: {}", if r.passed() { "face" } else { "failed" }).unwrap();
    Ok(Output { text, json: envelope("certify-face-map", r.to_json()) })
}
