//! Exact polyhedral geometry for cut polytopes.

mod certificate;
mod dd;
mod faces;

pub use certificate::{contraction_face_map, ohsugi_certificate, FaceMapReport, OhsugiCertificate};
pub use faces::{Face, FaceLattice};

use crate::error::{Error, Result};
use crate::graph::Graph;
use dd::{cone_generators, primitive, IntVec};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};
use std::collections::BTreeSet;

pub type Rat = BigRational;

/// Guards for the double description.
pub const MAX_DD_DIM: usize = 8;
pub const MAX_DD_VERTICES: usize = 64;

/// Convex hull of finitely many distinct points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VPolytope {
    ambient: usize,
    vertices: Vec<Vec<Rat>>,
}

impl VPolytope {
    /// Points are deduplicated, keeping first occurrences in order.
    pub fn new(ambient: usize, points: Vec<Vec<Rat>>) -> Result<VPolytope> {
        if points.is_empty() {
            return Err(Error::InvalidPolytope("no points".into()));
        }
        if let Some(p) = points.iter().find(|p| p.len() != ambient) {
            return Err(Error::InvalidPolytope(format!(
                "point of length {} in ambient dimension {ambient}",
                p.len()
            )));
        }
        let mut seen = BTreeSet::new();
        let vertices = points.into_iter().filter(|p| seen.insert(p.clone())).collect();
        Ok(VPolytope { ambient, vertices })
    }

    pub fn from_integer_points(ambient: usize, points: &[Vec<i64>]) -> Result<VPolytope> {
        VPolytope::new(
            ambient,
            points
                .iter()
                .map(|p| p.iter().map(|&x| Rat::from_integer(x.into())).collect())
                .collect(),
        )
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn vertices(&self) -> &[Vec<Rat>] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Dimension of the affine hull.
    pub fn dimension(&self) -> usize {
        affine_rank(&self.vertices.iter().collect::<Vec<_>>())
    }

    /// Drops points that are not extreme.
    pub fn reduce_vertices(&self) -> Result<VPolytope> {
        let h = double_description(self)?;
        let keep: Vec<Vec<Rat>> = self
            .vertices
            .iter()
            .filter(|x| h.is_vertex(x))
            .cloned()
            .collect();
        VPolytope::new(self.ambient, keep)
    }

    pub fn to_json(&self, h: Option<&HPolytope>) -> Value {
        let mut v = json!({
            "dim": self.dimension(),
            "ambient_dim": self.ambient,
            "vertices": self.vertices.iter()
                .map(|p| p.iter().map(|x| x.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        });
        if let Some(h) = h {
            v["facets"] = h.facets.iter().map(Inequality::to_json).collect();
            v["equations"] = h.equations.iter().map(Inequality::to_json).collect();
        }
        v
    }
}

/// `normal · x <= rhs`, or `normal · x = rhs` when used as an equation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Inequality {
    pub normal: Vec<BigInt>,
    pub rhs: BigInt,
}

impl Inequality {
    pub fn value(&self, x: &[Rat]) -> Rat {
        self.normal
            .iter()
            .zip(x)
            .map(|(a, b)| Rat::from_integer(a.clone()) * b)
            .sum()
    }

    pub fn holds(&self, x: &[Rat]) -> bool {
        self.value(x) <= Rat::from_integer(self.rhs.clone())
    }

    pub fn is_tight(&self, x: &[Rat]) -> bool {
        self.value(x) == Rat::from_integer(self.rhs.clone())
    }

    fn to_json(&self) -> Value {
        let num = |x: &BigInt| x.to_i64().map_or_else(|| json!(x.to_string()), |v| json!(v));
        json!([self.normal.iter().map(num).collect::<Vec<_>>(), num(&self.rhs)])
    }

    /// From a dual-cone vector `(a0, a)` meaning `a0 + a·x >= 0`.
    fn from_dual(v: &[BigInt]) -> Inequality {
        Inequality {
            normal: v[1..].iter().map(|x| -x).collect(),
            rhs: v[0].clone(),
        }
    }

    /// Row `(rhs, -normal)`, so that `row·(1, x) >= 0` is the inequality.
    fn to_row(&self) -> IntVec {
        std::iter::once(self.rhs.clone())
            .chain(self.normal.iter().map(|x| -x))
            .collect()
    }

    /// Sign convention for equations: first nonzero entry positive.
    fn oriented(mut self) -> Inequality {
        let first = self.normal.iter().chain(std::iter::once(&self.rhs)).find(|x| !x.is_zero());
        if first.is_some_and(|x| x.is_negative()) {
            self.normal.iter_mut().for_each(|x| *x = -x.clone());
            self.rhs = -self.rhs;
        }
        self
    }
}

/// Irredundant inequality description together with the affine hull.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HPolytope {
    ambient: usize,
    pub equations: Vec<Inequality>,
    pub facets: Vec<Inequality>,
}

impl HPolytope {
    pub fn new(ambient: usize, equations: Vec<Inequality>, facets: Vec<Inequality>) -> HPolytope {
        HPolytope {
            ambient,
            equations,
            facets,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        self.equations.iter().all(|e| e.is_tight(x)) && self.facets.iter().all(|f| f.holds(x))
    }

    /// A point of the polytope is a vertex iff the tight constraints pin it
    /// down, i.e. their normals have full rank.
    pub fn is_vertex(&self, x: &[Rat]) -> bool {
        if !self.contains(x) {
            return false;
        }
        let rows: Vec<Vec<Rat>> = self
            .equations
            .iter()
            .chain(self.facets.iter().filter(|f| f.is_tight(x)))
            .map(|f| f.normal.iter().map(|a| Rat::from_integer(a.clone())).collect())
            .collect();
        rank(rows) == self.ambient
    }

    /// Vertex indices of `p` on each facet.
    pub fn incidence(&self, p: &VPolytope) -> Vec<BTreeSet<usize>> {
        self.facets
            .iter()
            .map(|f| {
                p.vertices()
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| f.is_tight(x))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect()
    }

    /// H to V by the same double description on the homogenised system.
    pub fn to_vertices(&self) -> Result<VPolytope> {
        let d = self.ambient;
        if d > MAX_DD_DIM {
            return Err(Error::SizeGuard {
                what: "polytope dimension",
                actual: d,
                limit: MAX_DD_DIM,
            });
        }
        let mut rows: Vec<IntVec> = vec![unit(d + 1, 0)];
        for e in &self.equations {
            let r = e.to_row();
            rows.push(r.iter().map(|x| -x).collect());
            rows.push(r);
        }
        rows.extend(self.facets.iter().map(Inequality::to_row));
        let g = cone_generators(d + 1, &rows);
        if !g.lineality.is_empty() || g.rays.iter().any(|r| r[0].is_zero()) {
            return Err(Error::InvalidPolytope("inequalities define an unbounded set".into()));
        }
        let mut pts: Vec<Vec<Rat>> = g
            .rays
            .iter()
            .map(|r| r[1..].iter().map(|x| Rat::new(x.clone(), r[0].clone())).collect())
            .collect();
        pts.sort();
        VPolytope::new(d, pts)
    }
}

fn unit(d: usize, i: usize) -> IntVec {
    (0..d).map(|j| BigInt::from((i == j) as i32)).collect()
}

/// V to H. Facet normals are primitive integer vectors; equations are
/// oriented with first nonzero entry positive.
pub fn double_description(p: &VPolytope) -> Result<HPolytope> {
    let d = p.ambient_dim();
    if d > MAX_DD_DIM {
        return Err(Error::SizeGuard {
            what: "polytope dimension",
            actual: d,
            limit: MAX_DD_DIM,
        });
    }
    if p.len() > MAX_DD_VERTICES {
        return Err(Error::SizeGuard {
            what: "vertex count",
            actual: p.len(),
            limit: MAX_DD_VERTICES,
        });
    }
    // homogenise each point to an integer row (L, L*x)
    let rows: Vec<IntVec> = p
        .vertices()
        .iter()
        .map(|x| {
            let l = x.iter().fold(BigInt::one(), |l, r| l.lcm(r.denom()));
            std::iter::once(l.clone())
                .chain(x.iter().map(|r| (r * Rat::from_integer(l.clone())).to_integer()))
                .collect()
        })
        .collect();
    let g = cone_generators(d + 1, &rows);
    let mut equations: Vec<Inequality> = echelon_basis(g.lineality)
        .into_iter()
        .map(|v| Inequality::from_dual(&v).oriented())
        .collect();
    equations.sort();
    let mut facets: Vec<Inequality> = g.rays.iter().map(|v| Inequality::from_dual(v)).collect();
    facets.sort();
    Ok(HPolytope {
        ambient: d,
        equations,
        facets,
    })
}

/// Reduced row echelon form of an integer basis, rows made primitive, so the
/// equation system is canonical.
fn echelon_basis(vs: Vec<IntVec>) -> Vec<IntVec> {
    let mut rows: Vec<Vec<Rat>> = vs
        .into_iter()
        .map(|v| v.into_iter().map(Rat::from_integer).collect())
        .collect();
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        rows[r].iter_mut().for_each(|x| *x *= &inv);
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let pr = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(pr) {
                    *x -= &f * y;
                }
            }
        }
        r += 1;
    }
    rows.into_iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
            primitive(row.iter().map(|x| (x * Rat::from_integer(l.clone())).to_integer()).collect())
        })
        .collect()
}

/// Rank over `Q`.
pub fn rank(mut rows: Vec<Vec<Rat>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        for i in r + 1..rows.len() {
            if !rows[i][c].is_zero() {
                let f = &rows[i][c] / &rows[r][c];
                let pr = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(pr) {
                    *x -= &f * y;
                }
            }
        }
        r += 1;
    }
    r
}

/// Dimension of the affine hull of a point set; `0` for one point, and by
/// convention `0` for none.
pub fn affine_rank(points: &[&Vec<Rat>]) -> usize {
    let Some((first, rest)) = points.split_first() else { return 0 };
    rank(
        rest.iter()
            .map(|p| p.iter().zip(first.iter()).map(|(a, b)| a - b).collect())
            .collect(),
    )
}

/// Convex hull of the distinct cut vectors of `g`.
pub fn cut_polytope(g: &Graph) -> Result<VPolytope> {
    if g.num_edges() == 0 {
        return Err(Error::EdgelessGraph);
    }
    let pts: Vec<Vec<i64>> = g
        .partitions()
        .iter()
        .map(|p| {
            let v = g.cut_vector(p).expect("own partition").coords;
            v.into_iter().map(i64::from).collect()
        })
        .collect();
    VPolytope::from_integer_points(g.num_edges(), &pts)
}
