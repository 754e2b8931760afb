//! Exact convex polytopes with paired V- and H-representations.
//!
//! Conversions are enumeration-based (all `d`-subsets of vertices or
//! facets), which is trivially auditable and entirely sufficient at the
//! scales this crate targets (`d ≤ 6`, at most a few dozen vertices and
//! facets — limits are enforced). Both representations are validated
//! against each other on construction.

mod hull;
mod lattice;
mod triangulate;
mod ops;
mod edges;
mod orthoscheme;

pub use edges::EdgeFigure;
pub use lattice::{Face, FaceLattice};
pub use ops::{zonotope_from_generators, SymmetryReport};
pub use orthoscheme::{orthoscheme_decomposition, orthoscheme_forms, orthoscheme_polytope};

use std::sync::OnceLock;

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{dot, norm_sq, vec_scale, vec_sub, QMat, QVec};
use crate::linform::LinearForm;
use crate::ratfn::RatFn;
use crate::rational::Rat;

pub const MAX_DIM: usize = 6;
pub const MAX_VERTICES: usize = 64;
pub const MAX_FACETS: usize = 64;

/// Vertex description: a list of points whose convex hull is the polytope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VPolytope {
    pub dim: usize,
    pub vertices: Vec<QVec>,
}

/// Facet description: irredundant outward facet forms `L_F(x) ≥ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HPolytope {
    pub dim: usize,
    pub facets: Vec<LinearForm>,
}

/// A bounded convex polytope carrying both representations.
///
/// Vertices are stored lexicographically sorted and facets are stored as
/// content-1 integer forms in a fixed order, so structural equality of two
/// `Polytope`s is equality of point sets. A polytope whose points do not
/// affinely span the ambient space is kept vertex-only with
/// `full_dim = false`; such polytopes have no facet data and all canonical
/// forms attached to them vanish.
#[derive(Debug)]
pub struct Polytope {
    dim: usize,
    full_dim: bool,
    vertices: Vec<QVec>,
    facets: Vec<LinearForm>,
    lattice: OnceLock<FaceLattice>,
    omega_cache: OnceLock<RatFn>,
}

impl Clone for Polytope {
    fn clone(&self) -> Self {
        Polytope {
            dim: self.dim,
            full_dim: self.full_dim,
            vertices: self.vertices.clone(),
            facets: self.facets.clone(),
            lattice: self.lattice.clone(),
            omega_cache: self.omega_cache.clone(),
        }
    }
}

impl PartialEq for Polytope {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim
            && self.full_dim == other.full_dim
            && self.vertices == other.vertices
            && self.facets == other.facets
    }
}
impl Eq for Polytope {}

impl Polytope {
    /// Builds the polytope `conv(points)`. Redundant points are dropped;
    /// point sets that do not span the ambient space yield a
    /// lower-dimensional (vertex-only) polytope.
    pub fn from_points(dim: usize, points: Vec<QVec>) -> Result<Polytope> {
        if dim == 0 || dim > MAX_DIM {
            return Err(Error::SizeLimit(format!("ambient dimension {dim} (supported: 1..={MAX_DIM})")));
        }
        if points.is_empty() {
            return Err(Error::Representation("no points given".into()));
        }
        for p in &points {
            if p.len() != dim {
                return Err(Error::Dimension(format!(
                    "point of length {} in dimension {dim}",
                    p.len()
                )));
            }
        }
        let mut points = points;
        points.sort();
        points.dedup();

        if hull::affine_rank(&points) < dim {
            let vertices = hull::lower_dim_hull(dim, &points)?;
            return Ok(Polytope {
                dim,
                full_dim: false,
                vertices,
                facets: Vec::new(),
                lattice: OnceLock::new(),
                omega_cache: OnceLock::new(),
            });
        }

        let facets = hull::vrep_to_hrep(&points, dim)?;
        if facets.len() > MAX_FACETS {
            return Err(Error::SizeLimit(format!("{} facets (max {MAX_FACETS})", facets.len())));
        }
        let vertices = hull::filter_vertices(&points, &facets, dim);
        if vertices.len() > MAX_VERTICES {
            return Err(Error::SizeLimit(format!(
                "{} vertices (max {MAX_VERTICES})",
                vertices.len()
            )));
        }
        let poly = Polytope {
            dim,
            full_dim: true,
            vertices,
            facets,
            lattice: OnceLock::new(),
            omega_cache: OnceLock::new(),
        };
        poly.validate()?;
        Ok(poly)
    }

    /// Builds the polytope from outward facet inequalities. The system must
    /// describe a bounded, full-dimensional set and every inequality must
    /// support a facet.
    pub fn from_facets(dim: usize, facets: Vec<LinearForm>) -> Result<Polytope> {
        if dim == 0 || dim > MAX_DIM {
            return Err(Error::SizeLimit(format!("ambient dimension {dim} (supported: 1..={MAX_DIM})")));
        }
        if facets.len() > MAX_FACETS {
            return Err(Error::SizeLimit(format!("{} facets (max {MAX_FACETS})", facets.len())));
        }
        let mut canon: Vec<LinearForm> = Vec::with_capacity(facets.len());
        for f in facets {
            if f.dim() != dim {
                return Err(Error::Dimension("facet normal length mismatch".into()));
            }
            canon.push(f.canonical_positive().0);
        }
        canon.sort();
        let before = canon.len();
        canon.dedup();
        if canon.len() != before {
            return Err(Error::Representation("duplicate facet inequality".into()));
        }
        let points = hull::hrep_to_vrep(&canon, dim)?;
        if points.is_empty() {
            return Err(Error::Representation("inequality system has no vertices".into()));
        }
        if hull::affine_rank(&points) < dim {
            return Err(Error::Representation("inequality system has empty interior".into()));
        }
        let poly = Polytope::from_points(dim, points)?;
        if poly.facets != canon {
            return Err(Error::Representation(
                "inequality system is unbounded or contains redundant facets".into(),
            ));
        }
        Ok(poly)
    }

    /// Cross-validates the two representations.
    fn validate(&self) -> Result<()> {
        for v in &self.vertices {
            for f in &self.facets {
                if f.eval(v).is_negative() {
                    return Err(Error::Internal("vertex violates a facet inequality".into()));
                }
            }
        }
        for (j, f) in self.facets.iter().enumerate() {
            let incident: Vec<&QVec> =
                self.vertices.iter().filter(|v| f.eval(v).is_zero()).collect();
            if incident.len() < self.dim {
                return Err(Error::Representation(format!(
                    "facet {j} supported by fewer than d vertices"
                )));
            }
            if self.dim > 1 {
                let rows: Vec<QVec> =
                    incident[1..].iter().map(|v| vec_sub(v, incident[0])).collect();
                if QMat::from_rows(rows).rank() != self.dim - 1 {
                    return Err(Error::Representation(format!(
                        "facet {j} not supported by d affinely independent vertices"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_full_dim(&self) -> bool {
        self.full_dim
    }

    pub fn vertices(&self) -> &[QVec] {
        &self.vertices
    }

    pub fn facets(&self) -> &[LinearForm] {
        assert!(self.full_dim, "facets of a lower-dimensional polytope");
        &self.facets
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    pub fn vrep(&self) -> VPolytope {
        VPolytope { dim: self.dim, vertices: self.vertices.clone() }
    }

    pub fn hrep(&self) -> HPolytope {
        HPolytope { dim: self.dim, facets: self.facets().to_vec() }
    }

    /// The vertex centroid — interior for full-dimensional polytopes.
    pub fn centroid(&self) -> QVec {
        let n = Rat::from_integer(num::BigInt::from(self.vertices.len() as i64));
        let mut acc = vec![Rat::zero(); self.dim];
        for v in &self.vertices {
            for (a, x) in acc.iter_mut().zip(v) {
                *a += x;
            }
        }
        vec_scale(&acc, &(Rat::one() / n))
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        assert!(self.full_dim);
        self.facets.iter().all(|f| !f.eval(x).is_negative())
    }

    pub fn contains_strictly(&self, x: &[Rat]) -> bool {
        assert!(self.full_dim);
        self.facets.iter().all(|f| f.eval(x).is_positive())
    }

    /// The complete face lattice (built once, shared afterwards).
    pub fn lattice(&self) -> &FaceLattice {
        assert!(self.full_dim, "face lattice of a lower-dimensional polytope");
        self.lattice.get_or_init(|| lattice::build_lattice(self))
    }

    pub(crate) fn omega_cache(&self) -> &OnceLock<RatFn> {
        &self.omega_cache
    }

    /// All simplices of the deterministic placing triangulation (signs +1).
    pub fn triangulate(&self) -> Vec<SignedSimplex> {
        triangulate::triangulate(self)
    }

    /// Placing triangulation with a custom apex choice per face, used to
    /// cross-check that canonical forms do not depend on the triangulation.
    pub fn triangulate_with<F: FnMut(&[usize]) -> usize>(&self, picker: F) -> Vec<SignedSimplex> {
        triangulate::triangulate_with(self, picker)
    }

    /// Exact `d! · vol(P)` via the triangulation.
    pub fn volume_times_d_factorial(&self) -> Rat {
        if !self.full_dim {
            return Rat::zero();
        }
        self.triangulate()
            .iter()
            .map(|s| s.signed_volume_times_d_factorial().abs())
            .sum()
    }

    /// Per-edge metric data for the edge-decomposition identity.
    pub fn edge_figures(&self) -> Vec<EdgeFigure> {
        edges::edge_figures(self)
    }

    pub fn product(&self, other: &Polytope) -> Result<Polytope> {
        ops::product(self, other)
    }

    pub fn minkowski_sum(&self, other: &Polytope) -> Result<Polytope> {
        ops::minkowski_sum(self, other)
    }

    pub fn affine_image(&self, s: &QMat, t: &[Rat]) -> Result<Polytope> {
        ops::affine_image(self, s, t)
    }

    pub fn translate(&self, t: &[Rat]) -> Polytope {
        ops::translate(self, t)
    }

    pub fn dilate(&self, lambda: &Rat) -> Polytope {
        ops::dilate(self, lambda)
    }

    pub fn central_inversion(&self) -> Polytope {
        ops::central_inversion(self)
    }

    /// Orthogonal-coordinate projection keeping the listed coordinates.
    pub fn coordinate_projection(&self, keep: &[usize]) -> Result<Polytope> {
        ops::coordinate_projection(self, keep)
    }

    pub fn symmetry_tests(&self) -> SymmetryReport {
        ops::symmetry_tests(self)
    }

    /// Intersection with the halfspace `L ≥ 0`; `None` when the intersection
    /// has empty interior.
    pub fn halfspace_intersection(&self, form: &LinearForm) -> Result<Option<Polytope>> {
        ops::halfspace_intersection(self, form)
    }

    /// The facet as a full-dimensional polytope in an affine chart of its
    /// hyperplane (drop is affine-invariant, so any chart serves drop/degree
    /// computations). Returns the chart polytope.
    pub fn facet_as_polytope(&self, facet_idx: usize) -> Result<Polytope> {
        ops::facet_as_polytope(self, facet_idx)
    }

    /// The face spanned by the given lattice face, as a full-dimensional
    /// polytope in an affine chart.
    pub fn face_as_polytope(&self, face: &Face) -> Result<Polytope> {
        ops::face_as_polytope(self, face)
    }
}

/// A simplex with orientation sign; sign 0 marks a degenerate cell that
/// consumers skip.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedSimplex {
    pub vertices: Vec<QVec>,
    pub sign: i8,
}

impl SignedSimplex {
    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    /// `d! · vol` with the orientation sign of the vertex order (not the
    /// stored decomposition sign).
    pub fn signed_volume_times_d_factorial(&self) -> Rat {
        let d = self.dim();
        if d == 0 {
            return Rat::one();
        }
        let rows: Vec<QVec> =
            (1..=d).map(|i| vec_sub(&self.vertices[i], &self.vertices[0])).collect();
        QMat::from_rows(rows).det().expect("square matrix")
    }

    /// Outward facet forms of the simplex (one per omitted vertex, in vertex
    /// order). Fails on affinely dependent vertices.
    pub fn facet_forms(&self) -> Result<Vec<LinearForm>> {
        let d = self.dim();
        let mut forms = Vec::with_capacity(d + 1);
        for i in 0..=d {
            let others: Vec<&QVec> = self
                .vertices
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, v)| v)
                .collect();
            let rows: Vec<QVec> =
                others[1..].iter().map(|v| vec_sub(v, others[0])).collect();
            let normal = crate::linalg::hyperplane_normal(&rows, d)
                .ok_or_else(|| Error::Degenerate("affinely dependent simplex vertices".into()))?;
            let h = dot(&normal, others[0]);
            let at_opposite = dot(&normal, &self.vertices[i]);
            let (u, h) = if at_opposite > h {
                (crate::linalg::vec_neg(&normal), -h)
            } else if at_opposite < h {
                (normal, h)
            } else {
                return Err(Error::Degenerate("flat simplex".into()));
            };
            forms.push(LinearForm::new(h, u));
        }
        Ok(forms)
    }
}

/// Squared Euclidean length of a segment.
pub fn segment_sq_length(a: &[Rat], b: &[Rat]) -> Rat {
    norm_sq(&vec_sub(a, b))
}
