use super::reference::{reference_rows, RefReg, ReferenceRow};
use crate::cutideal::{cut_ideal, graded_betti_with, BettiOptions, BettiTable, DEFAULT_SEED};
use crate::error::{Error, Result};
use crate::graph::{canonical_form, parse_graph, CanonicalForm, Graph};
use crate::poly::{PrimeField, DEFAULT_PRIME};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::fmt::Write;
use std::sync::mpsc;
use std::time::Duration;

#[derive(Debug, Clone)]
pub struct Table1Options {
    pub max_n: usize,
    /// Full Betti tables on five vertices; otherwise only `β_0`, `β_1` there.
    pub slow: bool,
    pub timeout: Option<Duration>,
    pub field: PrimeField,
    /// Recompute every row over this field and compare.
    pub check_field: Option<PrimeField>,
    pub seed: u64,
}

impl Default for Table1Options {
    fn default() -> Self {
        Table1Options {
            max_n: 4,
            slow: false,
            timeout: Some(Duration::from_secs(300)),
            field: PrimeField::new(DEFAULT_PRIME).expect("default prime"),
            check_field: None,
            seed: DEFAULT_SEED,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RowStatus {
    /// Full Betti table.
    Complete,
    /// Only the first two Betti columns, or a truncated table.
    Partial,
    TimedOut,
    Failed(String),
}

impl RowStatus {
    fn label(&self) -> String {
        match self {
            RowStatus::Complete => "complete".into(),
            RowStatus::Partial => "partial".into(),
            RowStatus::TimedOut => "timeout".into(),
            RowStatus::Failed(e) => format!("error: {e}"),
        }
    }
}

/// Computed cells; `None` where the computation did not reach them.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Computed {
    pub generators: Option<usize>,
    pub mindeg: Option<usize>,
    pub maxdeg: Option<usize>,
    pub projdim: Option<usize>,
    pub reg: Option<usize>,
    /// Lower bound from a truncated table.
    pub reg_at_least: Option<usize>,
    pub cm: Option<bool>,
    pub ci: Option<bool>,
    pub n1: Option<bool>,
    /// Last total Betti number equal to 1 on a CM row; necessary for
    /// Gorenstein, not sufficient.
    pub gorenstein_probe: Option<bool>,
    /// `projdim(S/I) >= height`.
    pub height_bound: Option<bool>,
}

impl Computed {
    fn comparable(&self) -> [Option<usize>; 7] {
        let b = |x: Option<bool>| x.map(usize::from);
        [self.mindeg, self.maxdeg, self.projdim, self.reg, b(self.cm), b(self.ci), b(self.n1)]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellDiff {
    pub column: &'static str,
    pub computed: String,
    pub reference: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table1Row {
    pub name: &'static str,
    pub n: usize,
    pub edges: usize,
    pub height: usize,
    /// Characteristic of the field used for the computed cells.
    pub prime: u32,
    pub computed: Computed,
    pub reference: ReferenceRow,
    pub diffs: Vec<CellDiff>,
    pub status: RowStatus,
    /// Second characteristic and whether it reproduced every computed cell.
    pub prime_check: Option<(u32, bool)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table1Report {
    pub rows: Vec<Table1Row>,
}

fn compute(g: &Graph, field: PrimeField, seed: u64, full: bool) -> Result<Computed> {
    let ideal = cut_ideal(g, field)?;
    let height = ideal.height();
    let opts = BettiOptions {
        seed,
        i_max: if full { None } else { Some(1) },
        ..BettiOptions::default()
    };
    let t: BettiTable = graded_betti_with(&ideal, &opts)?;
    let gens: BTreeMap<usize, u64> = t
        .entries()
        .iter()
        .filter(|(k, _)| k.0 == 0)
        .map(|(k, v)| (k.1, *v))
        .collect();
    let total = gens.values().sum::<u64>() as usize;
    let certified = t.report().is_some_and(|r| r.certified());
    let mut c = Computed {
        generators: Some(total),
        mindeg: gens.keys().next().copied(),
        maxdeg: gens.keys().next_back().copied(),
        ci: Some(total == height),
        ..Computed::default()
    };
    let quadrics = !gens.is_empty() && gens.keys().all(|&d| d == 2);
    c.n1 = if !quadrics {
        Some(false)
    } else if certified {
        Some(t.entries().keys().filter(|k| k.0 == 1).all(|k| k.1 == 3))
    } else {
        None
    };
    if !t.is_truncated() {
        let inv = t.invariants();
        let pd_quotient = inv.map_or(0, |x| x.projdim + 1);
        c.projdim = inv.map(|x| x.projdim);
        c.reg = inv.map(|x| x.reg);
        c.cm = Some(pd_quotient == height);
        c.height_bound = Some(pd_quotient >= height);
        c.gorenstein_probe = Some(pd_quotient == height && t.quotient_totals().last() == Some(&1));
    } else {
        c.reg_at_least = t.entries().keys().map(|&(i, j)| j - i).max();
        // an Artinian reduction longer than the multiplicity rules out CM
        if let Some(r) = t.report() {
            c.cm = r.artinian_length.map(|_| r.certified());
        }
    }
    Ok(c)
}

fn compute_with_timeout(
    g: &Graph,
    field: PrimeField,
    seed: u64,
    full: bool,
    timeout: Option<Duration>,
) -> std::result::Result<Computed, RowStatus> {
    let Some(limit) = timeout else {
        return compute(g, field, seed, full).map_err(|e| RowStatus::Failed(e.to_string()));
    };
    let (tx, rx) = mpsc::channel();
    let g = g.clone();
    // a timed-out worker is abandoned, not cancelled
    std::thread::spawn(move || {
        let _ = tx.send(compute(&g, field, seed, full));
    });
    match rx.recv_timeout(limit) {
        Ok(Ok(c)) => Ok(c),
        Ok(Err(e)) => Err(RowStatus::Failed(e.to_string())),
        Err(_) => Err(RowStatus::TimedOut),
    }
}

fn flag(b: bool) -> String {
    if b { "Y" } else { "N" }.into()
}

fn diffs(edges: usize, c: &Computed, r: &ReferenceRow) -> Vec<CellDiff> {
    let mut out = Vec::new();
    let mut num = |column, got: Option<usize>, want: usize| {
        if let Some(x) = got.filter(|&x| x != want) {
            out.push(CellDiff {
                column,
                computed: x.to_string(),
                reference: want.to_string(),
            });
        }
    };
    num("|E|", Some(edges), r.edges);
    num("mindeg", c.mindeg, r.mindeg);
    num("maxdeg", c.maxdeg, r.maxdeg);
    num("projdim", c.projdim, r.projdim);
    if let Some(x) = c.reg.filter(|&x| !r.reg.admits(x)) {
        out.push(CellDiff {
            column: "reg",
            computed: x.to_string(),
            reference: r.reg.to_string(),
        });
    }
    for (column, got, want) in [("CM", c.cm, r.cm), ("CI", c.ci, r.ci), ("N1", c.n1, r.n1)] {
        if let Some(x) = got.filter(|&x| x != want) {
            out.push(CellDiff {
                column,
                computed: flag(x),
                reference: flag(want),
            });
        }
    }
    out
}

/// Computes the published table for graphs on at most `opts.max_n`
/// vertices and diffs it cell by cell. Rows are processed in table order.
pub fn table1(opts: &Table1Options) -> Result<Table1Report> {
    let refs: BTreeMap<CanonicalForm, &ReferenceRow> = reference_rows()
        .iter()
        .map(|r| Ok((canonical_form(&parse_graph(r.name)?)?, r)))
        .collect::<Result<_>>()?;
    let mut rows = Vec::new();
    for r in reference_rows() {
        let g = parse_graph(r.name)?;
        if g.n() > opts.max_n {
            continue;
        }
        let reference = **refs
            .get(&canonical_form(&g)?)
            .ok_or_else(|| Error::Incomplete(format!("no reference row for {}", r.name)))?;
        let full = g.n() <= 4 || opts.slow;
        let first = compute_with_timeout(&g, opts.field, opts.seed, full, opts.timeout);
        let ideal_height = (1usize << (g.n() - 1)) - g.num_edges() - 1;
        let (computed, status) = match first {
            Ok(c) => {
                let status = if c.projdim.is_some() || c.generators == Some(0) {
                    RowStatus::Complete
                } else {
                    RowStatus::Partial
                };
                (c, status)
            }
            Err(s) => (Computed::default(), s),
        };
        let prime_check = match (opts.check_field, &status) {
            (Some(f), RowStatus::Complete | RowStatus::Partial) => {
                let again = compute_with_timeout(&g, f, opts.seed, full, opts.timeout);
                let same = again.is_ok_and(|c2| c2.comparable() == computed.comparable());
                Some((f.characteristic(), same))
            }
            _ => None,
        };
        rows.push(Table1Row {
            name: r.name,
            n: g.n(),
            edges: g.num_edges(),
            height: ideal_height,
            prime: opts.field.characteristic(),
            diffs: diffs(g.num_edges(), &computed, &reference),
            computed,
            reference,
            status,
            prime_check,
        });
    }
    Ok(Table1Report { rows })
}

impl Table1Report {
    pub fn diff_count(&self) -> usize {
        self.rows.iter().map(|r| r.diffs.len()).sum()
    }

    /// Aligned table; computed cells plain, cells not computed show the
    /// reference value in parentheses, differing cells carry a `*`.
    pub fn text(&self) -> String {
        let header = [
            "Graph", "|E|", "mindeg", "maxdeg", "projdim", "reg", "CM", "Nor", "Gor", "CI", "N1",
        ];
        let mut grid: Vec<Vec<String>> = vec![header.iter().map(|s| s.to_string()).collect()];
        for row in &self.rows {
            let c = &row.computed;
            let r = &row.reference;
            let differs = |col: &str| row.diffs.iter().any(|d| d.column == col);
            let cell = |col: &str, got: Option<String>, want: String| match got {
                Some(x) if differs(col) => format!("{x}*"),
                Some(x) => x,
                None => format!("({want})"),
            };
            let reg = match (c.reg, c.reg_at_least) {
                (Some(x), _) => Some(x.to_string()),
                (None, Some(b)) if matches!(r.reg, RefReg::AtLeast(_)) => Some(format!(">={b}")),
                _ => None,
            };
            grid.push(vec![
                row.name.to_string(),
                cell("|E|", Some(row.edges.to_string()), r.edges.to_string()),
                cell("mindeg", c.mindeg.map(|x| x.to_string()), r.mindeg.to_string()),
                cell("maxdeg", c.maxdeg.map(|x| x.to_string()), r.maxdeg.to_string()),
                cell("projdim", c.projdim.map(|x| x.to_string()), r.projdim.to_string()),
                cell("reg", reg, r.reg.to_string()),
                cell("CM", c.cm.map(flag), flag(r.cm)),
                format!("({})", flag(r.normal)),
                format!("({})", flag(r.gorenstein)),
                cell("CI", c.ci.map(flag), flag(r.ci)),
                cell("N1", c.n1.map(flag), flag(r.n1)),
            ]);
        }
        let widths: Vec<usize> = (0..header.len())
            .map(|k| grid.iter().map(|row| row[k].len()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for line in &grid {
            let cells: Vec<String> = line
                .iter()
                .zip(&widths)
                .enumerate()
                .map(|(k, (s, w))| if k == 0 { format!("{s:<w$}") } else { format!("{s:>w$}") })
                .collect();
            writeln!(out, "{}", cells.join("  ").trim_end()).unwrap();
        }
        for row in &self.rows {
            if row.status != RowStatus::Complete && row.status != RowStatus::Partial {
                writeln!(out, "{}: {}", row.name, row.status.label()).unwrap();
            }
            if let Some((p, false)) = row.prime_check {
                writeln!(out, "{}: cells differ over F_{p}", row.name).unwrap();
            }
            for d in &row.diffs {
                writeln!(
                    out,
                    "diff {} {}: computed {}, reference {}",
                    row.name, d.column, d.computed, d.reference
                )
                .unwrap();
            }
        }
        writeln!(out, "(x): reference value, not computed; x*: differs from the reference").unwrap();
        writeln!(out, "rows: {}, diffs: {}", self.rows.len(), self.diff_count()).unwrap();
        out
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let c = &row.computed;
                let r = &row.reference;
                json!({
                    "graph": row.name,
                    "n": row.n,
                    "edges": row.edges,
                    "height": row.height,
                    "p": row.prime,
                    "status": row.status.label(),
                    "computed": {
                        "generators": c.generators,
                        "mindeg": c.mindeg,
                        "maxdeg": c.maxdeg,
                        "projdim": c.projdim,
                        "reg": c.reg,
                        "reg_at_least": c.reg_at_least,
                        "cm": c.cm,
                        "ci": c.ci,
                        "n1": c.n1,
                        "gorenstein_probe": c.gorenstein_probe,
                    },
                    "reference": {
                        "edges": r.edges,
                        "mindeg": r.mindeg,
                        "maxdeg": r.maxdeg,
                        "projdim": r.projdim,
                        "reg": r.reg.to_string(),
                        "cm": r.cm,
                        "normal": r.normal,
                        "gorenstein": r.gorenstein,
                        "ci": r.ci,
                        "n1": r.n1,
                    },
                    "diffs": row.diffs.iter().map(|d| json!({
                        "column": d.column,
                        "computed": d.computed,
                        "reference": d.reference,
                    })).collect::<Vec<_>>(),
                    "prime_check": row.prime_check.map(|(p, ok)| json!({"p": p, "agree": ok})),
                })
            })
            .collect();
        json!({"rows": rows, "diffs": self.diff_count()})
    }
}
