//! Double description on integer cones `{y : r·y >= 0 for every row r}`.
//!
//! Rows are inserted one at a time. The cone is kept as a lineality basis
//! plus a list of extreme rays, each with the set of inserted rows it lies
//! on. Two rays on opposite sides of a new row are combined only when they
//! are adjacent, which is decided combinatorially: no third ray lies on every
//! row the pair shares.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

pub(crate) type IntVec = Vec<BigInt>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct RowSet(Vec<u64>);

impl RowSet {
    fn new(nrows: usize) -> RowSet {
        RowSet(vec![0; nrows.div_ceil(64).max(1)])
    }

    fn first(k: usize, nrows: usize) -> RowSet {
        let mut s = RowSet::new(nrows);
        for i in 0..k {
            s.insert(i);
        }
        s
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn and(&self, other: &RowSet) -> RowSet {
        RowSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn is_subset(&self, other: &RowSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Ray {
    pub v: IntVec,
    zeros: RowSet,
}

/// Generators of a polyhedral cone: `cone(rays) + span(lineality)`.
#[derive(Debug, Clone, Default)]
pub(crate) struct ConeGenerators {
    pub rays: Vec<IntVec>,
    pub lineality: Vec<IntVec>,
}

pub(crate) fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Divides by the gcd of the entries, keeping signs.
pub(crate) fn primitive(mut v: IntVec) -> IntVec {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && g != BigInt::from(1) {
        for x in &mut v {
            *x /= &g;
        }
    }
    v
}

/// `a*x - b*y`.
fn combine(a: &BigInt, x: &[BigInt], b: &BigInt, y: &[BigInt]) -> IntVec {
    primitive(x.iter().zip(y).map(|(p, q)| a * p - b * q).collect())
}

/// Minimal generators of `{y in Q^dim : r·y >= 0 for r in rows}`.
pub(crate) fn cone_generators(dim: usize, rows: &[IntVec]) -> ConeGenerators {
    let nrows = rows.len();
    let mut lineality: Vec<IntVec> = (0..dim)
        .map(|i| (0..dim).map(|j| BigInt::from((i == j) as i32)).collect())
        .collect();
    let mut rays: Vec<Ray> = Vec::new();
    for (k, row) in rows.iter().enumerate() {
        if let Some(idx) = lineality.iter().position(|l| !dot(row, l).is_zero()) {
            let mut l = lineality.remove(idx);
            let mut s = dot(row, &l);
            if s.is_negative() {
                l.iter_mut().for_each(|x| *x = -x.clone());
                s = -s;
            }
            for m in &mut lineality {
                let t = dot(row, m);
                if !t.is_zero() {
                    *m = combine(&s, m, &t, &l);
                }
            }
            for r in &mut rays {
                let t = dot(row, &r.v);
                if !t.is_zero() {
                    r.v = combine(&s, &r.v, &t, &l);
                }
                r.zeros.insert(k);
            }
            rays.push(Ray {
                v: l,
                zeros: RowSet::first(k, nrows),
            });
            continue;
        }
        let signs: Vec<BigInt> = rays.iter().map(|r| dot(row, &r.v)).collect();
        // rays on the new row's hyperplane need a common zero count this large
        // to span a two-dimensional face with a partner
        let need = dim.saturating_sub(lineality.len() + 2);
        let mut next: Vec<Ray> = Vec::new();
        for (i, r) in rays.iter().enumerate() {
            if !signs[i].is_negative() {
                let mut r = r.clone();
                if signs[i].is_zero() {
                    r.zeros.insert(k);
                }
                next.push(r);
            }
        }
        for (i, p) in rays.iter().enumerate().filter(|(i, _)| signs[*i].is_positive()) {
            for (j, n) in rays.iter().enumerate().filter(|(j, _)| signs[*j].is_negative()) {
                let common = p.zeros.and(&n.zeros);
                if common.len() < need {
                    continue;
                }
                let blocked = rays
                    .iter()
                    .enumerate()
                    .any(|(t, r)| t != i && t != j && common.is_subset(&r.zeros));
                if blocked {
                    continue;
                }
                let v = combine(&signs[i], &n.v, &signs[j], &p.v);
                let mut zeros = common;
                zeros.insert(k);
                next.push(Ray { v, zeros });
            }
        }
        rays = next;
    }
    ConeGenerators {
        rays: rays.into_iter().map(|r| r.v).collect(),
        lineality,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: &[i64]) -> IntVec {
        x.iter().map(|&a| BigInt::from(a)).collect()
    }

    #[test]
    fn positive_orthant() {
        let rows = vec![v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1])];
        let g = cone_generators(3, &rows);
        assert!(g.lineality.is_empty());
        let mut rays = g.rays;
        rays.sort();
        assert_eq!(rays, vec![v(&[0, 0, 1]), v(&[0, 1, 0]), v(&[1, 0, 0])]);
    }

    #[test]
    fn half_plane_keeps_lineality() {
        let g = cone_generators(2, &[v(&[1, 0])]);
        assert_eq!(g.lineality, vec![v(&[0, 1])]);
        assert_eq!(g.rays, vec![v(&[1, 0])]);
    }

    #[test]
    fn square_cone_has_four_rays() {
        // cone over the unit square: t >= 0 implied, 0 <= x, y <= t
        let rows = vec![v(&[0, 1, 0]), v(&[0, 0, 1]), v(&[1, -1, 0]), v(&[1, 0, -1])];
        let g = cone_generators(3, &rows);
        assert!(g.lineality.is_empty());
        let mut rays = g.rays;
        rays.sort();
        assert_eq!(rays, vec![v(&[1, 0, 0]), v(&[1, 0, 1]), v(&[1, 1, 0]), v(&[1, 1, 1])]);
    }

    #[test]
    fn primitive_keeps_sign() {
        assert_eq!(primitive(v(&[-4, 6, 0])), v(&[-2, 3, 0]));
        assert_eq!(primitive(v(&[0, 0])), v(&[0, 0]));
    }
}
