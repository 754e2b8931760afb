//! Per-edge metric data feeding the edge-decomposition identity.

use num::Zero;

use crate::linalg::{dot, norm_sq, vec_scale, vec_sub, QVec};
use crate::rational::{rat_sqrt, Rat};

use super::Polytope;

/// One record per lattice edge: squared length always, exact length and
/// unit direction only when the squared length is a perfect rational
/// square, plus the facets containing the edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeFigure {
    pub endpoints: [QVec; 2],
    pub sq_length: Rat,
    pub length: Option<Rat>,
    pub containing_facets: Vec<usize>,
    pub unit_direction: Option<QVec>,
}

pub(super) fn edge_figures(poly: &Polytope) -> Vec<EdgeFigure> {
    assert!(poly.is_full_dim());
    let lattice = poly.lattice();
    let mut out = Vec::with_capacity(lattice.edges().len());
    for edge in lattice.edges() {
        let a = poly.vertices()[edge.vertices[0]].clone();
        let b = poly.vertices()[edge.vertices[1]].clone();
        let diff = vec_sub(&b, &a);
        let sq_length = norm_sq(&diff);
        debug_assert!(!sq_length.is_zero());
        let length = rat_sqrt(&sq_length);
        let unit_direction = length
            .as_ref()
            .map(|l| vec_scale(&diff, &(Rat::from_integer(1.into()) / l)));
        let containing_facets = edge.facet_indices();
        debug_assert!(containing_facets.len() >= poly.dim() - 1);
        debug_assert!(containing_facets
            .iter()
            .all(|&j| dot(&poly.facets()[j].u, &diff).is_zero()));
        out.push(EdgeFigure {
            endpoints: [a, b],
            sq_length,
            length,
            containing_facets,
            unit_direction,
        });
    }
    out
}
