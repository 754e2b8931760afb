//! Restriction of the canonical form to a facet (the residue at the facet
//! hyperplane).

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linform::LinearForm;
use crate::poly::MultiPoly;
use crate::polytope::Polytope;
use crate::ratfn::RatFn;
use crate::rational::{rat_sqrt, Rat};

/// `Ω^{d−1}(F)` expressed in ambient coordinates with one coordinate
/// eliminated along the facet hyperplane.
///
/// The unit-normal convention of the residue formula requires dividing by
/// `‖u_F‖`; when that norm is irrational the undivided value is returned
/// with `scale_pending = true` (the true restriction is `value / ‖u_F‖`
/// with `‖u_F‖² = normal_norm_sq`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetRestriction {
    pub value: RatFn,
    pub eliminated_var: usize,
    pub scale_pending: bool,
    pub normal_norm_sq: Rat,
}

/// Drops the facet's own form from `Ω(P)`, substitutes the hyperplane
/// relation into everything that remains, and accounts for the unit-normal
/// convention.
pub fn facet_restriction(p: &Polytope, facet_idx: usize) -> Result<FacetRestriction> {
    if !p.is_full_dim() {
        return Err(Error::Domain("facet restriction needs a full-dimensional polytope".into()));
    }
    let d = p.dim();
    let facet = &p.facets()[facet_idx];
    let adj = super::adjoint_raw(p)?;

    // eliminate the pivot coordinate along  u_k·x_k = h − Σ_{i≠k} u_i·x_i
    let pivot = facet
        .u
        .iter()
        .position(|c| !c.is_zero())
        .expect("facet normal is nonzero");
    let u_k = facet.u[pivot].clone();
    let mut expr = MultiPoly::constant(d, &facet.h / &u_k);
    for (i, c) in facet.u.iter().enumerate() {
        if i == pivot || c.is_zero() {
            continue;
        }
        expr = expr.add(&MultiPoly::var(d, i, -(c / &u_k)));
    }
    let subs: Vec<MultiPoly> = (0..d)
        .map(|i| if i == pivot { expr.clone() } else { MultiPoly::var(d, i, Rat::one()) })
        .collect();

    let restricted_adj = adj.substitute(&subs);

    // remaining facet forms restricted to the hyperplane; forms parallel to
    // the facet become nonzero constants and fold into the numerator
    let mut constant_divisor = Rat::one();
    let mut factors: Vec<LinearForm> = Vec::new();
    for (j, g) in p.facets().iter().enumerate() {
        if j == facet_idx {
            continue;
        }
        let ratio = &g.u[pivot] / &u_k;
        let new_h = &g.h - &ratio * &facet.h;
        let mut new_u: Vec<Rat> = Vec::with_capacity(d);
        for (i, c) in g.u.iter().enumerate() {
            if i == pivot {
                new_u.push(Rat::zero());
            } else {
                new_u.push(c - &ratio * &facet.u[i]);
            }
        }
        if new_u.iter().all(|c| c.is_zero()) {
            // parallel facet: L_G restricted is the constant new_h
            if new_h.is_zero() {
                return Err(Error::Internal("distinct facet restricted to zero".into()));
            }
            constant_divisor *= new_h;
        } else {
            factors.push(LinearForm::new(new_h, new_u));
        }
    }

    let norm_sq = crate::linalg::norm_sq(&facet.u);
    let (scale_pending, metric_scale) = match rat_sqrt(&norm_sq) {
        Some(n) => (false, n),
        None => (true, Rat::one()),
    };
    let num = restricted_adj.scale(&(Rat::one() / (constant_divisor * metric_scale)));
    Ok(FacetRestriction {
        value: RatFn::from_parts(num, factors),
        eliminated_var: pivot,
        scale_pending,
        normal_norm_sq: norm_sq,
    })
}
