//! Geometric and combinatorial polytope operations.

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{vec_add, vec_scale, vec_sub, QMat, QVec};
use crate::linform::LinearForm;
use crate::rational::Rat;

use super::{hull, Polytope};

/// Cartesian product: vertices concatenate pairwise, facets lift with zero
/// padding.
pub(super) fn product(p: &Polytope, q: &Polytope) -> Result<Polytope> {
    if !p.is_full_dim() || !q.is_full_dim() {
        return Err(Error::Representation("product needs full-dimensional factors".into()));
    }
    let dim = p.dim() + q.dim();
    let mut points = Vec::with_capacity(p.num_vertices() * q.num_vertices());
    for v in p.vertices() {
        for w in q.vertices() {
            let mut x = v.clone();
            x.extend(w.iter().cloned());
            points.push(x);
        }
    }
    let mut facets = Vec::with_capacity(p.num_facets() + q.num_facets());
    for f in p.facets() {
        let mut u = f.u.clone();
        u.extend(std::iter::repeat(Rat::zero()).take(q.dim()));
        facets.push(LinearForm::new(f.h.clone(), u));
    }
    for f in q.facets() {
        let mut u = vec![Rat::zero(); p.dim()];
        u.extend(f.u.iter().cloned());
        facets.push(LinearForm::new(f.h.clone(), u));
    }
    assemble(dim, points, facets)
}

/// Minkowski sum via the hull of pairwise vertex sums. Inputs may be
/// lower-dimensional (segments, polygons in space, single points).
pub(super) fn minkowski_sum(p: &Polytope, q: &Polytope) -> Result<Polytope> {
    if p.dim() != q.dim() {
        return Err(Error::Dimension("Minkowski sum of different ambient dimensions".into()));
    }
    let mut points = Vec::with_capacity(p.num_vertices() * q.num_vertices());
    for v in p.vertices() {
        for w in q.vertices() {
            points.push(vec_add(v, w));
        }
    }
    Polytope::from_points(p.dim(), hull::dedup_points(points))
}

/// Image under `x ↦ Sx + t` for invertible `S`. Facets transform as
/// `(u, h) ↦ (S^{−T} u, h + ⟨S^{−T} u, t⟩)`.
pub(super) fn affine_image(p: &Polytope, s: &QMat, t: &[Rat]) -> Result<Polytope> {
    assert_eq!(s.rows, p.dim());
    assert_eq!(s.cols, p.dim());
    assert_eq!(t.len(), p.dim());
    let s_inv_t = s.inverse().map_err(|_| Error::Singular)?.transpose();
    let vertices: Vec<QVec> =
        p.vertices().iter().map(|v| vec_add(&s.mul_vec(v), t)).collect();
    if !p.is_full_dim() {
        return Polytope::from_points(p.dim(), vertices);
    }
    let facets: Vec<LinearForm> = p
        .facets()
        .iter()
        .map(|f| {
            let u = s_inv_t.mul_vec(&f.u);
            let h = &f.h + crate::linalg::dot(&u, t);
            LinearForm::new(h, u)
        })
        .collect();
    assemble(p.dim(), vertices, facets)
}

pub(super) fn translate(p: &Polytope, t: &[Rat]) -> Polytope {
    assert_eq!(t.len(), p.dim());
    let vertices: Vec<QVec> = p.vertices().iter().map(|v| vec_add(v, t)).collect();
    if !p.is_full_dim() {
        return Polytope::from_points(p.dim(), vertices).expect("translate keeps validity");
    }
    let facets: Vec<LinearForm> = p
        .facets()
        .iter()
        .map(|f| LinearForm::new(&f.h + crate::linalg::dot(&f.u, t), f.u.clone()))
        .collect();
    assemble(p.dim(), vertices, facets).expect("translate keeps validity")
}

pub(super) fn dilate(p: &Polytope, lambda: &Rat) -> Polytope {
    assert!(lambda.is_positive(), "dilation factor must be positive");
    let s = scaled_identity(p.dim(), lambda);
    affine_image(p, &s, &vec![Rat::zero(); p.dim()]).expect("dilation keeps validity")
}

pub(super) fn central_inversion(p: &Polytope) -> Polytope {
    let s = scaled_identity(p.dim(), &-Rat::one());
    affine_image(p, &s, &vec![Rat::zero(); p.dim()]).expect("inversion keeps validity")
}

fn scaled_identity(d: usize, lambda: &Rat) -> QMat {
    let mut m = QMat::zeros(d, d);
    for i in 0..d {
        *m.at_mut(i, i) = lambda.clone();
    }
    m
}

/// Projection onto the coordinate subspace spanned by `keep` (hull of the
/// projected vertices; may come out lower-dimensional).
pub(super) fn coordinate_projection(p: &Polytope, keep: &[usize]) -> Result<Polytope> {
    if keep.is_empty() || keep.iter().any(|&k| k >= p.dim()) {
        return Err(Error::Dimension("bad projection coordinates".into()));
    }
    let points: Vec<QVec> = p
        .vertices()
        .iter()
        .map(|v| keep.iter().map(|&k| v[k].clone()).collect())
        .collect();
    Polytope::from_points(keep.len(), hull::dedup_points(points))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymmetryReport {
    pub centrally_symmetric: bool,
    /// The combinatorial zonotope test: in dimension ≤ 2 central symmetry,
    /// in dimension ≥ 3 central symmetry of every 2-face.
    pub zonotope_combinatorial: bool,
}

pub(super) fn symmetry_tests(p: &Polytope) -> SymmetryReport {
    assert!(p.is_full_dim());
    let centrally_symmetric = point_set_centrally_symmetric(p.vertices());
    let zonotope_combinatorial = if p.dim() <= 2 {
        centrally_symmetric
    } else {
        p.lattice().faces(2).iter().all(|face| {
            let pts: Vec<QVec> =
                face.vertices.iter().map(|&i| p.vertices()[i].clone()).collect();
            point_set_centrally_symmetric(&pts)
        })
    };
    SymmetryReport { centrally_symmetric, zonotope_combinatorial }
}

/// Whether a point set maps onto itself under reflection through its
/// centroid.
fn point_set_centrally_symmetric(points: &[QVec]) -> bool {
    let n = Rat::from_integer(num::BigInt::from(points.len() as i64));
    let dim = points[0].len();
    let mut c = vec![Rat::zero(); dim];
    for v in points {
        for (a, x) in c.iter_mut().zip(v) {
            *a += x;
        }
    }
    // reflection through the centroid is v ↦ 2·(c/n) − v
    let two_c = vec_scale(&c, &(Rat::from_integer(num::BigInt::from(2)) / n));
    let set: std::collections::BTreeSet<QVec> = points.iter().cloned().collect();
    points.iter().all(|v| set.contains(&vec_sub(&two_c, v)))
}

/// Intersection with `{L ≥ 0}`; `None` when the result has empty interior.
pub(super) fn halfspace_intersection(
    p: &Polytope,
    form: &LinearForm,
) -> Result<Option<Polytope>> {
    assert!(p.is_full_dim());
    assert_eq!(form.dim(), p.dim());
    let mut forms: Vec<LinearForm> = p.facets().to_vec();
    forms.push(form.canonical_positive().0);
    forms.sort();
    forms.dedup();
    let points = hull::hrep_to_vrep(&forms, p.dim())?;
    if points.is_empty() || hull::affine_rank(&points) < p.dim() {
        return Ok(None);
    }
    Ok(Some(Polytope::from_points(p.dim(), points)?))
}

/// The facet as a full-dimensional polytope in an affine chart of its
/// hyperplane.
pub(super) fn facet_as_polytope(p: &Polytope, facet_idx: usize) -> Result<Polytope> {
    let f = &p.facets()[facet_idx];
    let pts: Vec<QVec> = p
        .vertices()
        .iter()
        .filter(|v| f.eval(v).is_zero())
        .cloned()
        .collect();
    chart_polytope(p.dim() - 1, &pts)
}

pub(super) fn face_as_polytope(p: &Polytope, face: &super::Face) -> Result<Polytope> {
    let pts: Vec<QVec> =
        face.vertices.iter().map(|&i| p.vertices()[i].clone()).collect();
    chart_polytope(face.dim, &pts)
}

/// Charts a point set spanning a k-dimensional affine subspace onto `R^k`
/// and hulls it there. The chart is affine (not isometric), which preserves
/// every affine invariant we evaluate on faces.
fn chart_polytope(k: usize, pts: &[QVec]) -> Result<Polytope> {
    if k == 0 {
        return Err(Error::Dimension("zero-dimensional chart".into()));
    }
    let base = &pts[0];
    let mut basis: Vec<QVec> = Vec::new();
    for p in &pts[1..] {
        let d = vec_sub(p, base);
        if d.iter().all(|c| c.is_zero()) {
            continue;
        }
        let mut rows = basis.clone();
        rows.push(d.clone());
        if QMat::from_rows(rows).rank() == basis.len() + 1 {
            basis.push(d);
        }
        if basis.len() == k {
            break;
        }
    }
    if basis.len() != k {
        return Err(Error::Degenerate("face does not span the expected dimension".into()));
    }
    let bmat = QMat::from_cols(basis);
    let gram = bmat.transpose().mul_mat(&bmat);
    let chart: Vec<QVec> = pts
        .iter()
        .map(|p| gram.solve(&bmat.transpose().mul_vec(&vec_sub(p, base))))
        .collect::<Result<_>>()?;
    Polytope::from_points(k, chart)
}

/// Minkowski sum of the segments `[0, g]` over the generators.
pub fn zonotope_from_generators(gens: &[QVec]) -> Result<Polytope> {
    if gens.is_empty() {
        return Err(Error::Representation("no generators".into()));
    }
    let dim = gens[0].len();
    let origin = vec![Rat::zero(); dim];
    let mut acc = Polytope::from_points(dim, vec![origin.clone()])?;
    for g in gens {
        if g.len() != dim {
            return Err(Error::Dimension("generator length mismatch".into()));
        }
        if g.iter().all(|c| c.is_zero()) {
            continue;
        }
        let seg = Polytope::from_points(dim, vec![origin.clone(), g.clone()])?;
        acc = acc.minkowski_sum(&seg)?;
    }
    Ok(acc)
}

/// Shared assembly path: sorts canonical data and validates the pair of
/// representations without re-running hull enumeration.
fn assemble(dim: usize, points: Vec<QVec>, facets: Vec<LinearForm>) -> Result<Polytope> {
    let mut vertices = hull::dedup_points(points);
    vertices.sort();
    let mut canon: Vec<LinearForm> = facets.iter().map(|f| f.canonical_positive().0).collect();
    canon.sort();
    canon.dedup();
    if vertices.len() > super::MAX_VERTICES || canon.len() > super::MAX_FACETS || dim > super::MAX_DIM {
        return Err(Error::SizeLimit("assembled polytope too large".into()));
    }
    let poly = Polytope {
        dim,
        full_dim: true,
        vertices,
        facets: canon,
        lattice: std::sync::OnceLock::new(),
        omega_cache: std::sync::OnceLock::new(),
    };
    poly.validate()?;
    Ok(poly)
}
