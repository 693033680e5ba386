//! Finite simplicial complexes on small ground sets and their reduced
//! homology over the rationals.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::monomial::Variable;

/// Faces are bitmasks over `ground` (bit `k` is `ground[k]`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    ground: Vec<Variable>,
    faces: BTreeSet<u32>,
}

pub const MAX_GROUND: usize = 31;

impl SimplicialComplex {
    /// The complex generated by `facets` (closure under subsets).
    pub fn from_facets(ground: Vec<Variable>, facets: &[u32]) -> Self {
        assert!(ground.len() <= MAX_GROUND);
        let mut faces = BTreeSet::new();
        for &f in facets {
            let mut sub = f;
            loop {
                faces.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & f;
            }
        }
        SimplicialComplex { ground, faces }
    }

    /// Takes faces as given; callers must supply a downward-closed family.
    pub fn from_faces(ground: Vec<Variable>, faces: impl IntoIterator<Item = u32>) -> Self {
        assert!(ground.len() <= MAX_GROUND);
        SimplicialComplex {
            ground,
            faces: faces.into_iter().collect(),
        }
    }

    pub fn void(ground: Vec<Variable>) -> Self {
        SimplicialComplex::from_faces(ground, [])
    }

    pub fn ground(&self) -> &[Variable] {
        &self.ground
    }

    pub fn faces(&self) -> impl Iterator<Item = u32> + '_ {
        self.faces.iter().copied()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn contains(&self, face: u32) -> bool {
        self.faces.contains(&face)
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    /// Face as a list of ground variables.
    pub fn face_vertices(&self, face: u32) -> Vec<&Variable> {
        (0..self.ground.len())
            .filter(|k| face & (1 << k) != 0)
            .map(|k| &self.ground[k])
            .collect()
    }

    /// Dimension of the largest face; `-1` for `{∅}`, `None` when void.
    pub fn dimension(&self) -> Option<i32> {
        self.faces.iter().map(|f| f.count_ones() as i32 - 1).max()
    }

    pub fn is_downward_closed(&self) -> bool {
        self.faces.iter().all(|&f| {
            (0..self.ground.len())
                .filter(|k| f & (1 << k) != 0)
                .all(|k| self.faces.contains(&(f & !(1 << k))))
        })
    }

    /// Reduced homology ranks `(d, rank H̃_d)` for `d = -1 ..= dim`.
    pub fn reduced_homology(&self) -> Result<Vec<(i32, usize)>> {
        reduced_homology_ranks(self)
    }
}

/// Ranks of reduced homology over `Q`, computed from the simplicial
/// boundary matrices by exact integer elimination.
pub fn reduced_homology_ranks(c: &SimplicialComplex) -> Result<Vec<(i32, usize)>> {
    face_homology(c.ground.len(), c.faces()).ok_or(Error::VoidComplex)
}

/// Reduced homology of a downward-closed family of masks over `n` bits,
/// or `None` for the void family.
pub(crate) fn face_homology(n: usize, faces: impl IntoIterator<Item = u32>) -> Option<Vec<(i32, usize)>> {
    let faces: Vec<u32> = faces.into_iter().collect();
    let dim = faces.iter().map(|f| f.count_ones() as i32 - 1).max()?;
    // by_size[k] = faces with k vertices (dimension k - 1)
    let top = (dim + 1) as usize;
    let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); top + 1];
    for &f in &faces {
        by_size[f.count_ones() as usize].push(f);
    }
    let index: Vec<HashMap<u32, usize>> = by_size
        .iter()
        .map(|fs| fs.iter().enumerate().map(|(i, &f)| (f, i)).collect())
        .collect();

    // rank_of[k] = rank of ∂ from size-k faces to size-(k-1) faces
    let mut rank_of = vec![0usize; top + 2];
    for k in 1..=top {
        let rows = by_size[k - 1].len();
        let cols = by_size[k].len();
        if rows == 0 || cols == 0 {
            continue;
        }
        let mut m = IntMatrix::zeros(rows, cols);
        for (col, &f) in by_size[k].iter().enumerate() {
            let mut sign = 1i64;
            for bit in 0..n {
                if f & (1 << bit) == 0 {
                    continue;
                }
                let g = f & !(1 << bit);
                if let Some(&row) = index[k - 1].get(&g) {
                    m.set(row, col, sign);
                }
                sign = -sign;
            }
        }
        rank_of[k] = m.rank();
    }

    Some(
        (0..=top)
            .map(|k| {
                let chains = by_size[k].len();
                let ker = chains - if k >= 1 { rank_of[k] } else { 0 };
                let img = rank_of[k + 1];
                (k as i32 - 1, ker - img)
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ground(n: usize) -> Vec<Variable> {
        (1..=n).map(|i| Variable::new(format!("v{i}"))).collect()
    }

    fn nonzero(h: &[(i32, usize)]) -> Vec<(i32, usize)> {
        h.iter().copied().filter(|&(_, r)| r > 0).collect()
    }

    #[test]
    fn two_points() {
        let c = SimplicialComplex::from_facets(ground(2), &[0b01, 0b10]);
        assert!(c.is_downward_closed());
        assert_eq!(nonzero(&c.reduced_homology().unwrap()), vec![(0, 1)]);
    }

    #[test]
    fn triangle_boundary() {
        let c = SimplicialComplex::from_facets(ground(3), &[0b011, 0b110, 0b101]);
        assert_eq!(c.face_count(), 7);
        assert_eq!(nonzero(&c.reduced_homology().unwrap()), vec![(1, 1)]);
    }

    #[test]
    fn full_simplex_is_acyclic() {
        let c = SimplicialComplex::from_facets(ground(4), &[0b1111]);
        assert_eq!(c.face_count(), 16);
        assert!(nonzero(&c.reduced_homology().unwrap()).is_empty());
    }

    #[test]
    fn empty_face_only() {
        let c = SimplicialComplex::from_facets(ground(2), &[0]);
        assert_eq!(c.dimension(), Some(-1));
        assert_eq!(c.reduced_homology().unwrap(), vec![(-1, 1)]);
    }

    #[test]
    fn void_is_rejected() {
        let c = SimplicialComplex::void(ground(2));
        assert_eq!(c.reduced_homology(), Err(Error::VoidComplex));
    }

    #[test]
    fn octahedron_is_a_two_sphere() {
        // Cross-polytope on {1,2},{3,4},{5,6}: facets pick one of each pair.
        let mut facets = Vec::new();
        for a in [0b000001u32, 0b000010] {
            for b in [0b000100u32, 0b001000] {
                for c in [0b010000u32, 0b100000] {
                    facets.push(a | b | c);
                }
            }
        }
        let c = SimplicialComplex::from_facets(ground(6), &facets);
        assert_eq!(nonzero(&c.reduced_homology().unwrap()), vec![(2, 1)]);
    }

    #[test]
    fn not_closed_detected() {
        let c = SimplicialComplex::from_faces(ground(2), [0, 0b11]);
        assert!(!c.is_downward_closed());
    }
}
