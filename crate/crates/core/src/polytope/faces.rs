use super::{affine_rank, HPolytope, VPolytope};
use std::collections::{BTreeMap, BTreeSet};

/// A face as the set of polytope vertices it contains.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Face {
    pub vertices: BTreeSet<usize>,
    /// `-1` for the empty face.
    pub dim: i64,
}

/// All faces, from the empty face to the polytope itself.
#[derive(Debug, Clone)]
pub struct FaceLattice {
    dim: usize,
    faces: Vec<Face>,
}

impl FaceLattice {
    /// Faces are exactly the intersections of facet vertex sets, plus the
    /// polytope itself.
    pub fn new(p: &VPolytope, h: &HPolytope) -> FaceLattice {
        let incidence = h.incidence(p);
        let all: BTreeSet<usize> = (0..p.len()).collect();
        let mut seen: BTreeSet<BTreeSet<usize>> = BTreeSet::from([all.clone()]);
        let mut frontier: Vec<BTreeSet<usize>> = vec![all];
        while let Some(f) = frontier.pop() {
            for facet in &incidence {
                let g: BTreeSet<usize> = f.intersection(facet).copied().collect();
                if seen.insert(g.clone()) {
                    frontier.push(g);
                }
            }
        }
        let dim_of = |s: &BTreeSet<usize>| -> i64 {
            if s.is_empty() {
                -1
            } else {
                let pts: Vec<_> = s.iter().map(|&i| &p.vertices()[i]).collect();
                affine_rank(&pts) as i64
            }
        };
        let mut faces: Vec<Face> = seen
            .into_iter()
            .map(|vertices| Face {
                dim: dim_of(&vertices),
                vertices,
            })
            .collect();
        faces.sort_by(|a, b| (a.dim, &a.vertices).cmp(&(b.dim, &b.vertices)));
        FaceLattice {
            dim: p.dimension(),
            faces,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn faces_of_dim(&self, k: i64) -> Vec<&Face> {
        self.faces.iter().filter(|f| f.dim == k).collect()
    }

    /// `(f_0, ..., f_{d-1})`.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
        for f in &self.faces {
            *counts.entry(f.dim).or_default() += 1;
        }
        (0..self.dim as i64).map(|k| counts.get(&k).copied().unwrap_or(0)).collect()
    }

    /// Euler relation of the boundary sphere:
    /// `Σ (-1)^i f_i = 1 - (-1)^d`.
    pub fn euler_holds(&self) -> bool {
        let chi: i64 = self
            .f_vector()
            .iter()
            .enumerate()
            .map(|(i, &f)| if i % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum();
        chi == 1 - (-1i64).pow(self.dim as u32)
    }

    pub fn is_closed_under_intersection(&self) -> bool {
        let sets: BTreeSet<&BTreeSet<usize>> = self.faces.iter().map(|f| &f.vertices).collect();
        self.faces.iter().all(|a| {
            self.faces.iter().all(|b| {
                let i: BTreeSet<usize> = a.vertices.intersection(&b.vertices).copied().collect();
                sets.contains(&i)
            })
        })
    }

    /// Number of `k`-faces by vertex count.
    pub fn vertex_count_histogram(&self, k: i64) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for f in self.faces_of_dim(k) {
            *h.entry(f.vertices.len()).or_default() += 1;
        }
        h
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;
    use crate::polytope::{cut_polytope, double_description};

    fn lattice(spec: &str) -> FaceLattice {
        let p = cut_polytope(&parse_graph(spec).unwrap()).unwrap();
        let h = double_description(&p).unwrap();
        FaceLattice::new(&p, &h)
    }

    #[test]
    fn square() {
        let l = lattice("P3");
        assert_eq!(l.f_vector(), vec![4, 4]);
        assert!(l.euler_holds());
        assert_eq!(l.faces_of_dim(2).len(), 1);
        assert_eq!(l.faces_of_dim(-1).len(), 1);
    }

    #[test]
    fn simplex() {
        let l = lattice("K3");
        assert_eq!(l.f_vector(), vec![4, 6, 4]);
        assert!(l.is_closed_under_intersection());
    }
}
