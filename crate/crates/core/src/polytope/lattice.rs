//! Face lattice from vertex–facet incidences.
//!
//! A face is the set of vertices lying on a common set of facets; the
//! lattice is the closure of the facet vertex-sets under intersection.
//! Vertex and facet sets are stored as 64-bit masks (sizes are capped by
//! construction).

use num::Zero;

use crate::linalg::{vec_sub, QMat, QVec};
use crate::rational::Rat;

use super::Polytope;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    /// Dimension of the face.
    pub dim: usize,
    /// Bitmask over vertex indices.
    pub vertex_mask: u64,
    /// Sorted vertex indices.
    pub vertices: Vec<usize>,
    /// Bitmask over facet indices containing this face.
    pub facet_mask: u64,
}

impl Face {
    pub fn facet_indices(&self) -> Vec<usize> {
        (0..64).filter(|j| self.facet_mask >> j & 1 == 1).collect()
    }

    pub fn contains_face(&self, other: &Face) -> bool {
        other.vertex_mask & self.vertex_mask == other.vertex_mask
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceLattice {
    /// `faces_by_dim[k]` lists the k-dimensional faces; index `d` holds the
    /// polytope itself.
    pub faces_by_dim: Vec<Vec<Face>>,
}

impl FaceLattice {
    pub fn faces(&self, dim: usize) -> &[Face] {
        &self.faces_by_dim[dim]
    }

    pub fn edges(&self) -> &[Face] {
        self.faces(1)
    }

    pub fn num_faces(&self, dim: usize) -> usize {
        self.faces_by_dim[dim].len()
    }

    /// Faces of `face` of dimension `face.dim − 1`.
    pub fn subfaces<'a>(&'a self, face: &'a Face) -> impl Iterator<Item = &'a Face> {
        self.faces(face.dim - 1).iter().filter(|g| face.contains_face(g))
    }
}

pub(super) fn build_lattice(poly: &Polytope) -> FaceLattice {
    let d = poly.dim();
    let verts = poly.vertices();
    let facets = poly.facets();
    let n = verts.len();
    assert!(n <= 64 && facets.len() <= 64);

    // vertex masks per facet
    let facet_vmasks: Vec<u64> = facets
        .iter()
        .map(|f| {
            let mut mask = 0u64;
            for (i, v) in verts.iter().enumerate() {
                if f.eval(v).is_zero() {
                    mask |= 1 << i;
                }
            }
            mask
        })
        .collect();

    let all_mask: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };

    // closure under intersection
    let mut seen: std::collections::BTreeSet<u64> = std::collections::BTreeSet::new();
    seen.insert(all_mask);
    let mut queue: Vec<u64> = vec![all_mask];
    while let Some(s) = queue.pop() {
        for fm in &facet_vmasks {
            let t = s & fm;
            if t != 0 && seen.insert(t) {
                queue.push(t);
            }
        }
    }

    let mut faces_by_dim: Vec<Vec<Face>> = vec![Vec::new(); d + 1];
    for mask in seen {
        let vertices: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let dim = mask_affine_rank(&vertices, verts);
        let mut facet_mask = 0u64;
        for (j, fm) in facet_vmasks.iter().enumerate() {
            if mask & fm == mask {
                facet_mask |= 1 << j;
            }
        }
        faces_by_dim[dim].push(Face { dim, vertex_mask: mask, vertices, facet_mask });
    }
    for faces in &mut faces_by_dim {
        faces.sort_by_key(|f| f.vertex_mask);
    }

    debug_assert_eq!(faces_by_dim[d].len(), 1, "unique top face");
    debug_assert!(faces_by_dim[1].iter().all(|e| e.vertices.len() == 2), "edges have 2 endpoints");
    FaceLattice { faces_by_dim }
}

fn mask_affine_rank(indices: &[usize], verts: &[QVec]) -> usize {
    if indices.len() <= 1 {
        return 0;
    }
    let base = &verts[indices[0]];
    let rows: Vec<Vec<Rat>> =
        indices[1..].iter().map(|&i| vec_sub(&verts[i], base)).collect();
    QMat::from_rows(rows).rank()
}
