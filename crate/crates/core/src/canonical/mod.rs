//! Canonical forms, adjoints, degree drops and the derived valuations.
//!
//! `omega` computes the canonical form of a polytope by triangulating and
//! summing simplex forms (the valuation property); `dual_volume_at` is the
//! independent oracle evaluating `d!·vol(P−x)°` through polarity, hull and
//! determinant volumes. The reduced form `Ω₀` and the higher coefficients
//! `Ω_s` come from the homogenized adjoint.

mod residue;

pub use residue::{facet_restriction, FacetRestriction};

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{norm_sq, QMat, QVec};
use crate::linform::LinearForm;
use crate::poly::MultiPoly;
use crate::polytope::Polytope;
use crate::ratfn::RatFn;
use crate::rational::{rat_sqrt, Rat};
use crate::series::series_coefficients_in_marker;

/// A canonical form together with the ambient data it was computed in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    pub value: RatFn,
    pub ambient_dim: usize,
    pub facet_count: usize,
}

impl CanonicalForm {
    pub fn zero(dim: usize) -> Self {
        CanonicalForm { value: RatFn::zero(dim), ambient_dim: dim, facet_count: 0 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Normalization {
    /// Adjoint of the stored content-1 integer facet normals.
    Raw,
    /// Adjoint after dividing each facet form by its Euclidean norm.
    UnitNormalEquivalent,
}

/// Adjoint polynomial with its degree bookkeeping.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjointReport {
    pub adjoint: MultiPoly,
    pub expected_degree: i64,
    pub actual_degree: i64,
    pub drop: u32,
    pub normalization: Normalization,
}

/// Homogenized adjoint in `(x₀, x)`, homogeneous of degree `m − d − 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomAdjoint {
    pub poly: MultiPoly,
    pub facet_count: usize,
    pub ambient_dim: usize,
}

/// Canonical form of a simplex given its `d+1` facet forms: constant
/// numerator `|det(u_i; h_i)|` over the product of the forms.
pub fn omega_simplex(forms: &[LinearForm]) -> Result<CanonicalForm> {
    let d = forms[0].dim();
    if forms.len() != d + 1 {
        return Err(Error::Dimension(format!(
            "a {d}-simplex needs {} facet forms, got {}",
            d + 1,
            forms.len()
        )));
    }
    let det = simplex_adjoint_det(forms)?;
    if det.is_zero() {
        return Err(Error::Degenerate("facet normals do not span a simplex".into()));
    }
    let value = RatFn::from_parts(MultiPoly::constant(d, det.abs()), forms.to_vec());
    Ok(CanonicalForm { value, ambient_dim: d, facet_count: d + 1 })
}

/// The signed `(d+1)×(d+1)` determinant with columns `(u_i, h_i)`.
pub fn simplex_adjoint_det(forms: &[LinearForm]) -> Result<Rat> {
    let d = forms[0].dim();
    if !forms.iter().all(|f| f.dim() == d) {
        return Err(Error::Dimension("mixed variable counts".into()));
    }
    let cols: Vec<QVec> = forms
        .iter()
        .map(|f| {
            let mut c = f.u.clone();
            c.push(f.h.clone());
            c
        })
        .collect();
    QMat::from_cols(cols).det()
}

/// Canonical form of a full-dimensional simplicial cone `{⟨x,u_i⟩ ≤ 0}`
/// given the `d` forms with vanishing height.
pub fn omega_cone(forms: &[LinearForm]) -> Result<CanonicalForm> {
    let d = forms[0].dim();
    if forms.len() != d {
        return Err(Error::Dimension(format!(
            "a {d}-cone needs {d} facet forms, got {}",
            forms.len()
        )));
    }
    if forms.iter().any(|f| !f.h.is_zero()) {
        return Err(Error::Domain("cone forms must have zero height".into()));
    }
    let det = QMat::from_cols(forms.iter().map(|f| f.u.clone()).collect()).det()?;
    if det.is_zero() {
        return Err(Error::Degenerate("dependent cone normals".into()));
    }
    // (−1)^d |det| / ∏⟨x,u_i⟩ equals |det| / ∏ L_i for L_i = −⟨u_i, x⟩
    let value = RatFn::from_parts(MultiPoly::constant(d, det.abs()), forms.to_vec());
    Ok(CanonicalForm { value, ambient_dim: d, facet_count: d })
}

/// Canonical form of a polytope: triangulate, sum the simplex forms, and
/// check that reduction lands exactly on the facet forms of `P`.
pub fn omega(p: &Polytope) -> Result<CanonicalForm> {
    if !p.is_full_dim() {
        return Ok(CanonicalForm::zero(p.dim()));
    }
    if let Some(value) = p.omega_cache().get() {
        return Ok(CanonicalForm {
            value: value.clone(),
            ambient_dim: p.dim(),
            facet_count: p.num_facets(),
        });
    }
    let cells = p.triangulate();
    let mut terms = Vec::with_capacity(cells.len());
    for cell in &cells {
        let forms = cell.facet_forms()?;
        terms.push(omega_simplex(&forms)?.value);
    }
    let value = RatFn::sum(terms, p.dim());

    // postcondition: the reduced denominator is exactly the facet multiset
    let mut expected: Vec<LinearForm> =
        p.facets().iter().map(|f| f.canonical_signed().0).collect();
    expected.sort();
    let mut got: Vec<LinearForm> = Vec::new();
    for (f, m) in value.den_factors() {
        for _ in 0..m {
            got.push(f.clone());
        }
    }
    got.sort();
    if got != expected {
        return Err(Error::Internal(
            "canonical-form denominator does not match the facet forms".into(),
        ));
    }
    let _ = p.omega_cache().set(value.clone());
    Ok(CanonicalForm { value, ambient_dim: p.dim(), facet_count: p.num_facets() })
}

/// Exact `d!·vol((P−x)°)` for strictly interior `x`: polar vertices are
/// `u_F / L_F(x)`; their hull is triangulated and summed by determinants.
/// Independent of the `omega` pipeline.
pub fn dual_volume_at(p: &Polytope, x: &[Rat]) -> Result<Rat> {
    if !p.is_full_dim() {
        return Err(Error::Domain("dual volume needs a full-dimensional polytope".into()));
    }
    if !p.contains_strictly(x) {
        return Err(Error::Domain("polarization point not strictly interior".into()));
    }
    let dual_points: Vec<QVec> = p
        .facets()
        .iter()
        .map(|f| {
            let l = f.eval(x);
            crate::linalg::vec_scale(&f.u, &(Rat::one() / l))
        })
        .collect();
    let dual = Polytope::from_points(p.dim(), dual_points)?;
    Ok(dual.volume_times_d_factorial())
}

/// The adjoint with respect to the stored outward facet forms (numerator of
/// `Ω(P)` written over `∏ L_F`).
pub fn adjoint_raw(p: &Polytope) -> Result<MultiPoly> {
    let omega_p = omega(p)?;
    if omega_p.value.is_zero() {
        return Ok(MultiPoly::zero(p.dim()));
    }
    let mut adj = omega_p.value.signed_numerator();
    for f in p.facets() {
        let (_, lambda) = f.canonical_signed();
        if lambda.is_negative() {
            adj = adj.neg();
        }
    }
    Ok(adj)
}

/// Adjoint and degree drop of a full-dimensional polytope.
pub fn adjoint_and_drop(p: &Polytope) -> Result<AdjointReport> {
    if !p.is_full_dim() {
        return Err(Error::Domain("drop is defined for full-dimensional polytopes".into()));
    }
    let adjoint = adjoint_raw(p)?;
    let m = p.num_facets() as i64;
    let d = p.dim() as i64;
    let expected_degree = m - d - 1;
    let actual_degree = adjoint.degree().expect("nonzero adjoint") as i64;
    let drop = (expected_degree - actual_degree) as u32;
    // consistency with the rational-function degree
    let omega_deg = omega(p)?.value.degree().expect("nonzero form");
    if omega_deg != -d - 1 - drop as i64 {
        return Err(Error::Internal("drop disagrees with the canonical-form degree".into()));
    }
    if drop as i64 > d - 1 {
        return Err(Error::Internal("drop exceeds d − 1".into()));
    }
    Ok(AdjointReport {
        adjoint,
        expected_degree,
        actual_degree,
        drop,
        normalization: Normalization::Raw,
    })
}

pub fn drop_of(p: &Polytope) -> Result<u32> {
    Ok(adjoint_and_drop(p)?.drop)
}

/// Adjoint divided by the product of facet-normal norms; available only
/// when every norm is rational.
pub fn adjoint_unit_equivalent(p: &Polytope) -> Result<Option<AdjointReport>> {
    let report = adjoint_and_drop(p)?;
    let mut scale = Rat::one();
    for f in p.facets() {
        match rat_sqrt(&norm_sq(&f.u)) {
            Some(n) => scale *= n,
            None => return Ok(None),
        }
    }
    Ok(Some(AdjointReport {
        adjoint: report.adjoint.scale(&(Rat::one() / scale)),
        normalization: Normalization::UnitNormalEquivalent,
        ..report
    }))
}

/// Homogenized adjoint: every monomial lifted to degree `m − d − 1` by the
/// marker variable `x₀` at index 0.
pub fn homogenized_adjoint(p: &Polytope) -> Result<HomAdjoint> {
    let adj = adjoint_raw(p)?;
    let m = p.num_facets();
    let d = p.dim();
    let target = (m - d - 1) as u32;
    Ok(HomAdjoint {
        poly: adj.homogenize_with_marker(target),
        facet_count: m,
        ambient_dim: d,
    })
}

/// Reduced canonical form `Ω₀`: the top-degree part of the adjoint over the
/// product of the homogeneous facet forms. Vanishes exactly when the drop is
/// positive; zero for lower-dimensional input.
pub fn omega0(p: &Polytope) -> Result<RatFn> {
    if !p.is_full_dim() {
        return Ok(RatFn::zero(p.dim()));
    }
    let adj = adjoint_raw(p)?;
    let m = p.num_facets();
    let d = p.dim();
    let top = adj.homogeneous_part((m - d - 1) as u32);
    if top.is_zero() {
        return Ok(RatFn::zero(d));
    }
    // (−1)^m adj⁰ / ∏⟨x,u_F⟩ = adj⁰ / ∏(−⟨u_F, x⟩): the sign is absorbed by
    // writing each denominator factor as a height-zero facet form
    let factors: Vec<LinearForm> =
        p.facets().iter().map(|f| f.homogeneous_part()).collect();
    Ok(RatFn::from_parts(top, factors))
}

/// The `s`-th coefficient of the homogenized canonical form at `x₀ = 0`.
pub fn omega_s(p: &Polytope, s: u32) -> Result<RatFn> {
    Ok(omega_s_list(p, s)?.pop().expect("requested coefficient"))
}

/// Coefficients `[Ω₀, …, Ω_sMax]`.
pub fn omega_s_list(p: &Polytope, s_max: u32) -> Result<Vec<RatFn>> {
    if !p.is_full_dim() {
        return Ok(vec![RatFn::zero(p.dim()); s_max as usize + 1]);
    }
    let hom = homogenized_adjoint(p)?;
    let factors: Vec<LinearForm> = p.facets().iter().map(|f| f.homogenize()).collect();
    series_coefficients_in_marker(&hom.poly, &factors, s_max)
}

#[cfg(test)]
mod tests;
