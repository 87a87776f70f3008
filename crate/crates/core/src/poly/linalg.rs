use super::{FieldElem, PrimeField};
use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

/// Incremental row echelon form over `F_p` for sparse rows.
#[derive(Debug, Clone)]
pub struct Echelon {
    field: PrimeField,
    ncols: usize,
    /// leading column -> row with leading coefficient 1
    pivots: HashMap<usize, Vec<(usize, FieldElem)>>,
    work: Vec<FieldElem>,
}

impl Echelon {
    pub fn new(field: PrimeField, ncols: usize) -> Echelon {
        Echelon {
            field,
            ncols,
            pivots: HashMap::new(),
            work: vec![0; ncols],
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` (entries `(column, value)`) against the current pivots;
    /// returns whether it was independent, in which case it is kept.
    pub fn insert(&mut self, row: &[(usize, FieldElem)]) -> bool {
        let f = self.field;
        let mut heap = BinaryHeap::new();
        for &(c, v) in row {
            assert!(c < self.ncols, "column out of range");
            if v % f.characteristic() == 0 {
                continue;
            }
            if self.work[c] == 0 {
                heap.push(Reverse(c));
            }
            self.work[c] = f.add(self.work[c], v % f.characteristic());
        }
        let mut lead = None;
        let mut touched = Vec::new();
        while let Some(Reverse(c)) = heap.pop() {
            touched.push(c);
            let v = self.work[c];
            if v == 0 {
                continue;
            }
            match self.pivots.get(&c) {
                Some(prow) => {
                    let k = f.neg(v);
                    for &(pc, pv) in prow {
                        if self.work[pc] == 0 && pc != c {
                            heap.push(Reverse(pc));
                        }
                        self.work[pc] = f.add(self.work[pc], f.mul(k, pv));
                    }
                }
                None => {
                    lead = Some(c);
                    break;
                }
            }
        }
        let Some(lead) = lead else {
            for c in touched {
                self.work[c] = 0;
            }
            return false;
        };
        // collect the remainder: lead plus whatever is still queued
        let mut cols: Vec<usize> = heap.into_iter().map(|Reverse(c)| c).collect();
        cols.push(lead);
        cols.sort_unstable();
        cols.dedup();
        let inv = f.inv(self.work[lead]);
        let mut out = Vec::with_capacity(cols.len());
        for c in cols {
            let v = self.work[c];
            if v != 0 {
                out.push((c, f.mul(v, inv)));
            }
        }
        for c in touched {
            self.work[c] = 0;
        }
        for &(c, _) in &out {
            self.work[c] = 0;
        }
        self.pivots.insert(lead, out);
        true
    }
}

/// Rank over `F_p` of a sparse matrix given by rows.
pub fn rank(field: PrimeField, ncols: usize, rows: &[Vec<(usize, FieldElem)>]) -> usize {
    let mut e = Echelon::new(field, ncols);
    for r in rows {
        e.insert(r);
        if e.rank() == ncols {
            break;
        }
    }
    e.rank()
}
