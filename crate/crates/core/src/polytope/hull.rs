//! Enumeration-based conversions between vertex and facet descriptions.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use num::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{dot, hyperplane_normal, vec_sub, QMat, QVec};
use crate::linform::LinearForm;
use crate::rational::Rat;

/// Rank of the affine span of a point set.
pub fn affine_rank(points: &[QVec]) -> usize {
    if points.len() <= 1 {
        return 0;
    }
    let rows: Vec<QVec> = points[1..].iter().map(|p| vec_sub(p, &points[0])).collect();
    QMat::from_rows(rows).rank()
}

/// Supporting hyperplanes found by enumerating `d`-subsets of the points.
/// Only full-dimensional inputs; every returned form satisfies `L ≥ 0` on
/// all points and defines a facet.
pub fn vrep_to_hrep(points: &[QVec], dim: usize) -> Result<Vec<LinearForm>> {
    let n = points.len();
    assert!(n >= dim + 1, "too few points for a full-dimensional hull");
    // candidate hyperplanes keyed by their sign-canonical form
    let mut candidates: BTreeSet<LinearForm> = BTreeSet::new();
    for subset in (0..n).combinations(dim) {
        let base = &points[subset[0]];
        let rows: Vec<QVec> =
            subset[1..].iter().map(|&i| vec_sub(&points[i], base)).collect();
        let Some(u) = hyperplane_normal(&rows, dim) else { continue };
        let h = dot(&u, base);
        let mut all = Vec::with_capacity(dim + 1);
        all.push(h);
        all.extend(u);
        let (canon, _) = lf_from_concat(&all).canonical_signed();
        candidates.insert(canon);
    }
    // keep the supporting ones, oriented outward
    let mut facets = Vec::new();
    for cand in candidates {
        let mut above = false;
        let mut below = false;
        for p in points {
            let v = cand.eval(p);
            if v.is_positive() {
                above = true;
            } else if v.is_negative() {
                below = true;
            }
            if above && below {
                break;
            }
        }
        match (above, below) {
            (true, true) => {}
            (false, true) => {
                // inside is on the negative side: flip orientation
                let flipped = LinearForm::new(-&cand.h, crate::linalg::vec_neg(&cand.u));
                facets.push(flipped.canonical_positive().0);
            }
            _ => {
                // all points on the nonnegative side (L ≥ 0 inside)
                facets.push(cand);
            }
        }
    }
    facets.sort();
    facets.dedup();
    if facets.len() < dim + 1 {
        return Err(Error::Internal("hull produced too few facets".into()));
    }
    Ok(facets)
}

fn lf_from_concat(all: &[Rat]) -> LinearForm {
    LinearForm::new(all[0].clone(), all[1..].to_vec())
}

/// Vertices of `{x : L_F(x) ≥ 0}` by enumerating `d`-subsets of the facets.
pub fn hrep_to_vrep(facets: &[LinearForm], dim: usize) -> Result<Vec<QVec>> {
    if facets.len() < dim + 1 {
        return Err(Error::Representation(
            "fewer than d+1 inequalities cannot bound a polytope".into(),
        ));
    }
    let mut found: BTreeSet<QVec> = BTreeSet::new();
    for subset in (0..facets.len()).combinations(dim) {
        let m = QMat::from_rows(subset.iter().map(|&j| facets[j].u.clone()).collect());
        let b: Vec<Rat> = subset.iter().map(|&j| facets[j].h.clone()).collect();
        let Ok(x) = m.solve(&b) else { continue };
        if facets.iter().all(|f| !f.eval(&x).is_negative()) {
            found.insert(x);
        }
    }
    Ok(found.into_iter().collect())
}

/// Keeps exactly the points that are vertices of the hull: those whose
/// incident facet normals span the whole space.
pub fn filter_vertices(points: &[QVec], facets: &[LinearForm], dim: usize) -> Vec<QVec> {
    points
        .iter()
        .filter(|p| {
            let incident: Vec<QVec> = facets
                .iter()
                .filter(|f| f.eval(p).is_zero())
                .map(|f| f.u.clone())
                .collect();
            incident.len() >= dim && QMat::from_rows(incident).rank() == dim
        })
        .cloned()
        .collect()
}

/// Hull vertices of a point set that spans only a proper affine subspace:
/// the set is charted onto its span, hulled there, and mapped back.
pub fn lower_dim_hull(dim: usize, points: &[QVec]) -> Result<Vec<QVec>> {
    let rank = affine_rank(points);
    debug_assert!(rank < dim);
    if rank == 0 {
        return Ok(vec![points[0].clone()]);
    }
    let base = points[0].clone();
    // independent difference directions as a chart basis
    let mut basis: Vec<QVec> = Vec::new();
    for p in &points[1..] {
        let d = vec_sub(p, &base);
        let mut rows = basis.clone();
        rows.push(d.clone());
        if QMat::from_rows(rows).rank() == basis.len() + 1 {
            basis.push(d);
        }
        if basis.len() == rank {
            break;
        }
    }
    // chart coordinates via the Gram system  (BᵀB)λ = Bᵀ(p − base)
    let bmat = QMat::from_cols(basis.clone());
    let gram = bmat.transpose().mul_mat(&bmat);
    let mut chart_points: Vec<QVec> = Vec::with_capacity(points.len());
    for p in points {
        let rhs = bmat.transpose().mul_vec(&vec_sub(p, &base));
        chart_points.push(gram.solve(&rhs)?);
    }
    let chart_vertices: Vec<QVec> = if rank == 0 {
        vec![Vec::new()]
    } else {
        let facets = vrep_to_hrep(&chart_points, rank)?;
        filter_vertices(&chart_points, &facets, rank)
    };
    // map back:  base + B·λ
    let mut out: BTreeSet<QVec> = BTreeSet::new();
    for lam in chart_vertices {
        let mut p = base.clone();
        for (b, l) in basis.iter().zip(&lam) {
            for (pi, bi) in p.iter_mut().zip(b) {
                *pi += bi * l;
            }
        }
        out.insert(p);
    }
    Ok(out.into_iter().collect())
}

/// Orthogonal projection of a point onto the affine hull of a point set.
pub fn project_onto_affine_hull(x: &[Rat], points: &[QVec]) -> Result<QVec> {
    let base = &points[0];
    let mut basis: Vec<QVec> = Vec::new();
    for p in &points[1..] {
        let d = vec_sub(p, base);
        if d.iter().all(|c| c.is_zero()) {
            continue;
        }
        let mut rows = basis.clone();
        rows.push(d.clone());
        if QMat::from_rows(rows).rank() == basis.len() + 1 {
            basis.push(d);
        }
    }
    if basis.is_empty() {
        return Ok(base.clone());
    }
    let bmat = QMat::from_cols(basis.clone());
    let gram = bmat.transpose().mul_mat(&bmat);
    let rhs = bmat.transpose().mul_vec(&vec_sub(x, base));
    let lam = gram.solve(&rhs)?;
    let mut p = base.clone();
    for (b, l) in basis.iter().zip(&lam) {
        for (pi, bi) in p.iter_mut().zip(b) {
            *pi += bi * l;
        }
    }
    Ok(p)
}

/// Deduplicates points, preserving set semantics.
pub fn dedup_points(points: Vec<QVec>) -> Vec<QVec> {
    let set: BTreeSet<QVec> = points.into_iter().collect();
    set.into_iter().collect()
}

/// Groups vertices by facet incidence, used by validation and tests.
pub fn incidence_map(points: &[QVec], facets: &[LinearForm]) -> BTreeMap<usize, Vec<usize>> {
    let mut map = BTreeMap::new();
    for (j, f) in facets.iter().enumerate() {
        let on: Vec<usize> = points
            .iter()
            .enumerate()
            .filter(|(_, p)| f.eval(p).is_zero())
            .map(|(i, _)| i)
            .collect();
        map.insert(j, on);
    }
    map
}
