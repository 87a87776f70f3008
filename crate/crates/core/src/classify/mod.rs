//! Executable versions of the classification results: each check computes a
//! verdict from the ideal and compares it with what the theorem predicts.

mod reference;
mod table;

pub use reference::{reference_rows, RefReg, ReferenceRow};
pub use table::{table1, CellDiff, RowStatus, Table1Options, Table1Report, Table1Row};

use crate::cutideal::{
    cut_ideal, graded_betti_with, minimal_generators, BettiOptions, BettiTable, CutIdeal,
    MinimalGenerators,
};
use crate::error::{Error, Result};
use crate::graph::{canonical_form, is_crf, is_k4_minor_free, parse_graph, Edge, Graph};
use crate::poly::{PrimeField, DEFAULT_PRIME};
use serde_json::{json, Value};
use std::collections::BTreeSet;

/// Largest vertex count for which full Betti tables are attempted.
pub const MAX_BETTI_VERTICES: usize = 5;

/// One theorem checked on one graph.
#[derive(Debug, Clone, PartialEq)]
pub struct TheoremReport {
    pub theorem: &'static str,
    pub instance: String,
    pub computed: String,
    pub predicted: String,
    pub agree: bool,
    /// Extra data for the JSON form.
    pub detail: Value,
}

impl TheoremReport {
    pub fn line(&self) -> String {
        format!(
            "{} {} {}: computed {}; predicted {}",
            if self.agree { "PASS" } else { "FAIL" },
            self.theorem,
            self.instance,
            self.computed,
            self.predicted
        )
    }

    pub fn to_json(&self) -> Value {
        json!({
            "theorem": self.theorem,
            "instance": self.instance,
            "computed": self.computed,
            "predicted": self.predicted,
            "agree": self.agree,
            "detail": self.detail,
        })
    }
}

/// A step from `G` to a smaller graph `G'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Move {
    Contraction(Edge),
    /// Induced subgraph on `W`, which must admit a neighbourhood-minor witness.
    NeighborhoodMinor(Vec<usize>),
    /// Edge deletion, for which no monotonicity is claimed.
    Deletion(Edge),
}

impl Move {
    fn describe(&self) -> String {
        match self {
            Move::Contraction(e) => format!("contract {e}"),
            Move::NeighborhoodMinor(w) => {
                let w: Vec<String> = w.iter().map(|v| v.to_string()).collect();
                format!("restrict to {{{}}}", w.join(","))
            }
            Move::Deletion(e) => format!("delete {e}"),
        }
    }
}

fn named(name: &str) -> Graph {
    parse_graph(name).expect("built-in name")
}

fn iso_to_any(g: &Graph, names: &[&str]) -> Result<bool> {
    let cf = canonical_form(g)?;
    for n in names {
        if canonical_form(&named(n))? == cf {
            return Ok(true);
        }
    }
    Ok(false)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn degrees(m: &MinimalGenerators) -> BTreeSet<u32> {
    m.by_degree.keys().copied().collect()
}

fn fmt_degrees(d: &BTreeSet<u32>) -> String {
    if d.is_empty() {
        return "zero ideal".into();
    }
    let v: Vec<String> = d.iter().map(|x| x.to_string()).collect();
    format!("degrees {{{}}}", v.join(","))
}

/// The graph with its isolated vertices removed, if it has any edges.
fn without_isolated(g: &Graph) -> Result<Graph> {
    let keep: Vec<usize> = g.vertices().filter(|&v| g.degree(v) > 0).collect();
    if keep.is_empty() {
        return Err(Error::EdgelessGraph);
    }
    g.induced_subgraph(&keep)
}

/// Length of the unique cycle of a connected graph with `|E| = n`.
fn unicyclic_cycle_length(g: &Graph) -> Option<usize> {
    if !g.is_connected() || g.num_edges() != g.n() {
        return None;
    }
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut alive = vec![true; g.n()];
    loop {
        let Some(leaf) = (0..g.n()).find(|&i| alive[i] && deg[i] == 1) else {
            break;
        };
        alive[leaf] = false;
        for u in g.neighbors(leaf + 1) {
            if alive[u - 1] {
                deg[u - 1] -= 1;
            }
        }
    }
    Some(alive.iter().filter(|a| **a).count())
}

/// Largest `j - i` present, a lower bound on the regularity when truncated.
fn reg_lower_bound(t: &BettiTable) -> Option<usize> {
    t.entries().keys().map(|&(i, j)| j - i).max()
}

/// Runs the checks at a fixed prime.
#[derive(Debug, Clone)]
pub struct Classifier {
    field: PrimeField,
    opts: BettiOptions,
}

impl Default for Classifier {
    fn default() -> Self {
        Classifier::new(PrimeField::new(DEFAULT_PRIME).expect("default prime"))
    }
}

impl Classifier {
    pub fn new(field: PrimeField) -> Classifier {
        Classifier {
            field,
            opts: BettiOptions::default(),
        }
    }

    pub fn with_options(field: PrimeField, opts: BettiOptions) -> Classifier {
        Classifier { field, opts }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn ideal(&self, g: &Graph) -> Result<CutIdeal> {
        cut_ideal(g, self.field)
    }

    /// Full Betti table of `I_G`; may come back truncated.
    pub fn betti(&self, g: &Graph) -> Result<BettiTable> {
        if g.n() > MAX_BETTI_VERTICES {
            return Err(Error::SizeGuard {
                what: "vertex count for Betti tables",
                actual: g.n(),
                limit: MAX_BETTI_VERTICES,
            });
        }
        graded_betti_with(&self.ideal(g)?, &self.opts)
    }

    /// `β_0` and `β_1` only.
    pub fn first_syzygies(&self, g: &Graph) -> Result<BettiTable> {
        let opts = BettiOptions {
            i_max: Some(1),
            ..self.opts.clone()
        };
        graded_betti_with(&self.ideal(g)?, &opts)
    }

    fn require_edges(g: &Graph) -> Result<()> {
        if g.num_edges() == 0 {
            Err(Error::EdgelessGraph)
        } else {
            Ok(())
        }
    }

    pub fn check_ideal_zero(&self, g: &Graph) -> Result<TheoremReport> {
        Self::require_edges(g)?;
        let ideal = self.ideal(g)?;
        let computed = ideal.is_zero();
        let predicted = iso_to_any(g, &["K2", "K3"])?;
        let verdict = |z: bool| if z { "zero ideal" } else { "nonzero ideal" };
        Ok(TheoremReport {
            theorem: "ideal-zero",
            instance: g.to_dsl(),
            computed: verdict(computed).into(),
            predicted: format!("{} (K2 or K3: {})", verdict(predicted), yes_no(predicted)),
            agree: computed == predicted,
            detail: json!({"zero": computed, "k2_or_k3": predicted}),
        })
    }

    pub fn check_linear_forms(&self, g: &Graph) -> Result<TheoremReport> {
        Self::require_edges(g)?;
        let ideal = self.ideal(g)?;
        let count = ideal.linear_dimension();
        let comps = g.components();
        let disconnected = comps.len() > 1;
        // two components: 2^(n1 + n2 - 2) independent linear forms
        let expected = (comps.len() == 2).then(|| 1usize << (g.n() - 2));
        let agree = (count > 0) == disconnected && expected.map_or(true, |e| e == count);
        let predicted = match expected {
            Some(e) => format!("{e} (two components)"),
            None if disconnected => format!("nonzero ({} components)", comps.len()),
            None => "none (connected)".into(),
        };
        Ok(TheoremReport {
            theorem: "linear-forms",
            instance: g.to_dsl(),
            computed: format!("{count} linear forms"),
            predicted,
            agree,
            detail: json!({
                "linear_forms": count,
                "components": comps.len(),
                "expected": expected,
            }),
        })
    }

    pub fn check_complete_intersection(&self, g: &Graph) -> Result<TheoremReport> {
        Self::require_edges(g)?;
        let ideal = self.ideal(g)?;
        let mins = minimal_generators(&ideal)?;
        let height = ideal.height();
        let computed = mins.total() == height;
        let base = without_isolated(g)?;
        let predicted = iso_to_any(&base, &["K2", "K3", "P3", "2K2", "C4", "K4-e", "K4"])?;
        Ok(TheoremReport {
            theorem: "complete-intersection",
            instance: g.to_dsl(),
            computed: format!(
                "{} ({} generators, height {height})",
                if computed { "CI" } else { "not CI" },
                mins.total()
            ),
            predicted: if predicted { "CI" } else { "not CI" }.into(),
            agree: computed == predicted,
            detail: json!({
                "generators": mins.total(),
                "height": height,
                "isolated_vertices": g.isolated_vertices().len(),
            }),
        })
    }

    pub fn check_single_degree(&self, g: &Graph) -> Result<TheoremReport> {
        Self::require_edges(g)?;
        let mins = minimal_generators(&self.ideal(g)?)?;
        let degs = degrees(&mins);
        let complete = g.num_edges() == g.n() * (g.n() - 1) / 2;
        // None: zero ideal; Some(None): several degrees; Some(Some(d)): only d
        let predicted: Option<Option<u32>> = if iso_to_any(g, &["K2", "K3"])? {
            None
        } else if !g.is_connected() {
            let base = without_isolated(g)?;
            Some(iso_to_any(&base, &["K2", "K3"])?.then_some(1))
        } else if complete {
            Some((g.n() == 4).then_some(4))
        } else {
            Some(is_k4_minor_free(g).then_some(2))
        };
        let computed: Option<Option<u32>> = if degs.is_empty() {
            None
        } else if degs.len() == 1 {
            Some(degs.first().copied())
        } else {
            Some(None)
        };
        let describe = |p: &Option<Option<u32>>| match p {
            None => "zero ideal".to_string(),
            Some(None) => "several degrees".to_string(),
            Some(Some(d)) => format!("single degree {d}"),
        };
        Ok(TheoremReport {
            theorem: "single-degree",
            instance: g.to_dsl(),
            computed: format!("{} ({})", describe(&computed), fmt_degrees(&degs)),
            predicted: describe(&predicted),
            agree: computed == predicted,
            detail: json!({
                "degrees": degs,
                "k4_minor_free": is_k4_minor_free(g),
                "connected": g.is_connected(),
            }),
        })
    }

    /// Needs a connected graph and a full table, unless the generators
    /// already span several degrees.
    pub fn check_linear_resolution(&self, g: &Graph) -> Result<TheoremReport> {
        Self::require_edges(g)?;
        if !g.is_connected() {
            return Err(Error::NotApplicable("graph is disconnected".into()));
        }
        let t = self.betti(g)?;
        let gen_degrees: BTreeSet<usize> =
            t.entries().keys().filter(|k| k.0 == 0).map(|k| k.1).collect();
        let (linear, reg) = if !t.is_truncated() {
            let linear = t.linear_strand().filter(|&d| d >= 2);
            (linear.is_some(), t.invariants().map(|inv| inv.reg))
        } else if gen_degrees.len() > 1 && reg_lower_bound(&t) > Some(2) {
            (false, None)
        } else {
            return Err(Error::Incomplete("Betti table truncated".into()));
        };
        let predicted_linear = iso_to_any(g, &["P3", "K2#K1#K3", "K4"])?;
        let predicted_reg2 = iso_to_any(g, &["P3", "K2#K1#K3"])?;
        // a truncated table with reg > 2 already settles "reg = 2" negatively
        let reg2 = reg == Some(2);
        Ok(TheoremReport {
            theorem: "linear-resolution",
            instance: g.to_dsl(),
            computed: format!(
                "linear {}, reg {}",
                yes_no(linear),
                reg.map_or(format!(">= {}", reg_lower_bound(&t).unwrap_or(0)), |r| r.to_string())
            ),
            predicted: format!("linear {}, reg 2 {}", yes_no(predicted_linear), yes_no(predicted_reg2)),
            agree: linear == predicted_linear && reg2 == predicted_reg2,
            detail: json!({
                "linear": linear,
                "reg": reg,
                "truncated": t.is_truncated(),
            }),
        })
    }

    /// Checks only the implication N1 => retract-free; the converse is
    /// reported in the detail and never counted against agreement.
    pub fn check_n1(&self, g: &Graph) -> Result<TheoremReport> {
        Self::require_edges(g)?;
        let t = self.first_syzygies(g)?;
        let quadrics = !t.entries().is_empty()
            && t.entries().keys().filter(|k| k.0 == 0).all(|k| k.1 == 2);
        let n1 = quadrics && t.entries().keys().filter(|k| k.0 == 1).all(|k| k.1 == 3);
        let crf = is_crf(g, &[named("K4"), named("K4-e"), named("C4")])?;
        Ok(TheoremReport {
            theorem: "n1",
            instance: g.to_dsl(),
            computed: format!("N1 {}", yes_no(n1)),
            predicted: format!("N1 implies retract-free; retract-free {}", yes_no(crf)),
            agree: !n1 || crf,
            detail: json!({
                "n1": n1,
                "retract_free": crf,
                "converse_counterexample": crf && !n1,
            }),
        })
    }

    pub fn check_unicyclic_reg_bounds(&self, g: &Graph) -> Result<TheoremReport> {
        let m = unicyclic_cycle_length(g)
            .ok_or_else(|| Error::NotApplicable("not a connected unicyclic graph".into()))?;
        let t = self.betti(g)?;
        if t.is_truncated() {
            return Err(Error::Incomplete("Betti table truncated".into()));
        }
        // reg(I) = reg(S/I) + 1, which is 1 for the zero ideal
        let reg = t.invariants().map_or(1, |inv| inv.reg);
        let n = g.n();
        let (lo, hi) = (n - m + 1, n + 1);
        Ok(TheoremReport {
            theorem: "unicyclic-reg",
            instance: g.to_dsl(),
            computed: format!("reg {reg}"),
            predicted: format!("reg in [{lo}, {hi}] (n = {n}, cycle length {m})"),
            agree: lo <= reg && reg <= hi,
            detail: json!({"reg": reg, "n": n, "cycle": m, "lower": lo, "upper": hi}),
        })
    }

    pub fn check_betti_monotonicity(&self, g: &Graph, mv: &Move) -> Result<TheoremReport> {
        let small = match mv {
            Move::Contraction(e) => g.contract_edge(*e)?.0,
            Move::NeighborhoodMinor(w) => {
                if g.neighborhood_minor_witness(w)?.is_none() {
                    return Err(Error::NotApplicable("no neighbourhood-minor witness".into()));
                }
                g.induced_subgraph(w)?
            }
            Move::Deletion(e) => g.delete_edge(*e)?,
        };
        if small.num_edges() == 0 {
            return Err(Error::NotApplicable("minor has no edges".into()));
        }
        let big_t = self.betti(g)?;
        let small_t = self.betti(&small)?;
        if big_t.is_truncated() || small_t.is_truncated() {
            return Err(Error::Incomplete("Betti table truncated".into()));
        }
        let entrywise = small_t.dominated_by(&big_t);
        let mu = |t: &BettiTable| t.totals().first().copied().unwrap_or(0);
        let inv = |t: &BettiTable| t.invariants().map(|x| (x.reg, x.projdim));
        let (reg_ok, pd_ok) = match (inv(&small_t), inv(&big_t)) {
            (None, _) => (true, true),
            (Some(_), None) => (false, false),
            (Some(a), Some(b)) => (a.0 <= b.0, a.1 <= b.1),
        };
        let holds = entrywise && mu(&small_t) <= mu(&big_t) && reg_ok && pd_ok;
        let pd = |t: &BettiTable| t.invariants().map_or("-".to_string(), |x| x.projdim.to_string());
        let claimed = !matches!(mv, Move::Deletion(_));
        Ok(TheoremReport {
            theorem: "betti-monotonicity",
            instance: format!("{} / {}", g.to_dsl(), mv.describe()),
            computed: format!(
                "{} (projdim {} -> {})",
                if holds { "monotone" } else { "not monotone" },
                pd(&big_t),
                pd(&small_t)
            ),
            predicted: if claimed { "monotone" } else { "no claim for deletions" }.into(),
            agree: !claimed || holds,
            detail: json!({
                "minor": small.to_dsl(),
                "entrywise": entrywise,
                "generators": [mu(&big_t), mu(&small_t)],
                "reg_monotone": reg_ok,
                "projdim_monotone": pd_ok,
            }),
        })
    }

    /// Every check that applies to `g`, skipping those whose preconditions
    /// fail. Errors other than inapplicability are returned.
    pub fn classify(&self, g: &Graph) -> Result<Vec<TheoremReport>> {
        type Check = fn(&Classifier, &Graph) -> Result<TheoremReport>;
        let checks: [Check; 7] = [
            Classifier::check_ideal_zero,
            Classifier::check_linear_forms,
            Classifier::check_complete_intersection,
            Classifier::check_single_degree,
            Classifier::check_linear_resolution,
            Classifier::check_n1,
            Classifier::check_unicyclic_reg_bounds,
        ];
        let mut out = Vec::new();
        for check in checks {
            match check(self, g) {
                Ok(r) => out.push(r),
                Err(Error::NotApplicable(_)) => {}
                Err(e) => return Err(e),
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> Graph {
        parse_graph(s).unwrap()
    }

    #[test]
    fn cycle_lengths() {
        assert_eq!(unicyclic_cycle_length(&g("C4")), Some(4));
        assert_eq!(unicyclic_cycle_length(&g("K2#K1#K3")), Some(3));
        assert_eq!(unicyclic_cycle_length(&g("P4")), None);
        assert_eq!(unicyclic_cycle_length(&g("K4")), None);
    }

    #[test]
    fn report_lines() {
        let c = Classifier::default();
        let r = c.check_ideal_zero(&g("K3")).unwrap();
        assert!(r.agree);
        assert!(r.line().starts_with("PASS ideal-zero"));
        assert_eq!(r.to_json()["agree"], json!(true));
    }

    #[test]
    fn preconditions() {
        let c = Classifier::default();
        assert_eq!(c.check_ideal_zero(&Graph::empty(3).unwrap()), Err(Error::EdgelessGraph));
        assert!(matches!(c.check_linear_resolution(&g("2K2")), Err(Error::NotApplicable(_))));
        assert!(matches!(c.check_unicyclic_reg_bounds(&g("P4")), Err(Error::NotApplicable(_))));
    }
}
