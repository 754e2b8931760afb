//! Ortho-simplices and the flag-based signed decomposition.
//!
//! An ortho-simplex (orthoscheme) has vertices forming a chain of
//! successive orthogonal steps. Every polytope decomposes into signed
//! orthoschemes: one cell per complete flag of faces, spanned by the
//! orthogonal projections of a chosen point onto the faces' affine hulls.
//! Simple valuations sum over these cells with the flag signs.

use num::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{dot, vec_scale, vec_sub, QMat, QVec};
use crate::rational::Rat;

use super::{hull, Polytope, SignedSimplex};

/// The ortho-simplex with step lengths `ℓ₁, …, ℓ_d`: vertices
/// `v_k = (ℓ₁, …, ℓ_k, 0, …, 0)`.
pub fn orthoscheme_polytope(lengths: &[Rat]) -> Result<Polytope> {
    if lengths.is_empty() {
        return Err(Error::Dimension("empty length list".into()));
    }
    if lengths.iter().any(|l| !l.is_positive()) {
        return Err(Error::Domain("orthoscheme lengths must be positive".into()));
    }
    let d = lengths.len();
    let mut points = Vec::with_capacity(d + 1);
    let mut current = vec![Rat::zero(); d];
    points.push(current.clone());
    for (k, l) in lengths.iter().enumerate() {
        current[k] = l.clone();
        points.push(current.clone());
    }
    Polytope::from_points(d, points)
}

/// The closed-form facet data of the ortho-simplex with extended parameter
/// list `ℓ₀, …, ℓ_{d+1}` (the outer two are free normalization factors):
/// returns `(normals, heights)` with `u_i` opposite vertex `v_i`; all
/// heights vanish except `h₀ = ℓ₀ℓ₁`.
pub fn orthoscheme_forms(lengths_ext: &[Rat]) -> (Vec<QVec>, Vec<Rat>) {
    let d = lengths_ext.len() - 2;
    assert!(d >= 1, "need at least d+2 = 3 parameters");
    let l = lengths_ext;
    let mut normals = Vec::with_capacity(d + 1);
    // u₀ = (ℓ₀, 0, …, 0)
    let mut u0 = vec![Rat::zero(); d];
    u0[0] = l[0].clone();
    normals.push(u0);
    // u_i = −ℓ_{i+1}·e_i + ℓ_i·e_{i+1} in 1-based axes, i = 1..d−1
    for i in 1..d {
        let mut u = vec![Rat::zero(); d];
        u[i - 1] = -&l[i + 1];
        u[i] = l[i].clone();
        normals.push(u);
    }
    // u_d = (0, …, 0, −ℓ_{d+1})
    let mut ud = vec![Rat::zero(); d];
    ud[d - 1] = -&l[d + 1];
    normals.push(ud);

    let mut heights = vec![Rat::zero(); d + 1];
    heights[0] = &l[0] * &l[1];
    (normals, heights)
}

/// Signed orthoscheme decomposition of `P` anchored at `x_p`: one cell per
/// complete flag, with sign `(−1)^k` counting the orientation flips along
/// the flag; degenerate flags come out with sign 0 and are skipped by
/// consumers.
pub fn orthoscheme_decomposition(poly: &Polytope, x_p: &[Rat]) -> Result<Vec<SignedSimplex>> {
    assert!(poly.is_full_dim());
    assert_eq!(x_p.len(), poly.dim());
    let d = poly.dim();
    let lattice = poly.lattice();

    // projections of x_p onto every face's affine hull, and face centroids
    let mut projections: Vec<Vec<QVec>> = Vec::with_capacity(d + 1);
    let mut centroids: Vec<Vec<QVec>> = Vec::with_capacity(d + 1);
    for k in 0..=d {
        let mut projs = Vec::new();
        let mut cents = Vec::new();
        for face in lattice.faces(k) {
            let pts: Vec<QVec> =
                face.vertices.iter().map(|&i| poly.vertices()[i].clone()).collect();
            projs.push(hull::project_onto_affine_hull(x_p, &pts)?);
            cents.push(centroid(&pts));
        }
        projections.push(projs);
        centroids.push(cents);
    }

    let mut cells = Vec::new();
    // flags are built downward from the top face
    let top_idx = 0usize;
    let mut chain: Vec<(usize, usize)> = vec![(d, top_idx)];
    descend(poly, &projections, &centroids, &mut chain, x_p, &mut cells)?;
    Ok(cells)
}

fn centroid(pts: &[QVec]) -> QVec {
    let n = Rat::from_integer(num::BigInt::from(pts.len() as i64));
    let mut acc = vec![Rat::zero(); pts[0].len()];
    for p in pts {
        for (a, x) in acc.iter_mut().zip(p) {
            *a += x;
        }
    }
    vec_scale(&acc, &(Rat::from_integer(1.into()) / n))
}

fn descend(
    poly: &Polytope,
    projections: &[Vec<QVec>],
    centroids: &[Vec<QVec>],
    chain: &mut Vec<(usize, usize)>,
    x_p: &[Rat],
    cells: &mut Vec<SignedSimplex>,
) -> Result<()> {
    let lattice = poly.lattice();
    let (cur_dim, cur_idx) = *chain.last().unwrap();
    if cur_dim == 0 {
        cells.push(flag_cell(poly, projections, centroids, chain, x_p));
        return Ok(());
    }
    let cur_face = &lattice.faces(cur_dim)[cur_idx];
    for (sub_idx, sub) in lattice.faces(cur_dim - 1).iter().enumerate() {
        if !cur_face.contains_face(sub) {
            continue;
        }
        chain.push((cur_dim - 1, sub_idx));
        descend(poly, projections, centroids, chain, x_p, cells)?;
        chain.pop();
    }
    Ok(())
}

/// Builds the cell of one complete flag, working out the flag sign.
fn flag_cell(
    poly: &Polytope,
    projections: &[Vec<QVec>],
    centroids: &[Vec<QVec>],
    chain: &[(usize, usize)],
    x_p: &[Rat],
) -> SignedSimplex {
    let d = poly.dim();
    debug_assert_eq!(chain.len(), d + 1);
    // chain runs top-down: chain[j] = (d − j, face index); cell vertices are
    // the projections bottom-up plus x_p itself for the top face.
    let mut verts: Vec<QVec> = Vec::with_capacity(d + 1);
    for j in (1..=d).rev() {
        let (k, idx) = chain[j];
        debug_assert_eq!(k, d - j);
        verts.push(projections[k][idx].clone());
    }
    verts.push(x_p.to_vec());

    // degenerate cell: affinely dependent projection chain
    let rows: Vec<QVec> = verts[1..].iter().map(|v| vec_sub(v, &verts[0])).collect();
    let vol = QMat::from_rows(rows).det().expect("square");
    if vol.is_zero() {
        return SignedSimplex { vertices: verts, sign: 0 };
    }

    // count orientation flips ⟨x_{F_{i−1}} − x_{F_i}, u_i⟩ < 0, where u_i is
    // the outward normal of F_{i−1} inside aff(F_i)
    let mut k_count = 0usize;
    for i in 1..=d {
        // chain index of F_i is d − i
        let (dim_i, idx_i) = chain[d - i];
        let (dim_im1, idx_im1) = chain[d - i + 1];
        debug_assert_eq!(dim_i, i);
        debug_assert_eq!(dim_im1, i - 1);
        let x_fi = if i == d { x_p.to_vec() } else { projections[dim_i][idx_i].clone() };
        let x_fim1 = projections[dim_im1][idx_im1].clone();
        // outward direction at F_{i−1} within F_i: from the centroid of F_i
        // toward (and past) its projection onto aff(F_{i−1})
        let sub_face = &poly.lattice().faces(dim_im1)[idx_im1];
        let sub_pts: Vec<QVec> =
            sub_face.vertices.iter().map(|&v| poly.vertices()[v].clone()).collect();
        let c_i = centroids[dim_i][idx_i].clone();
        let proj_c = hull::project_onto_affine_hull(&c_i, &sub_pts).expect("projection");
        let outward = vec_sub(&proj_c, &c_i);
        debug_assert!(!outward.iter().all(|c| c.is_zero()));
        let s = dot(&vec_sub(&x_fim1, &x_fi), &outward);
        if s.is_zero() {
            return SignedSimplex { vertices: verts, sign: 0 };
        }
        if s.is_negative() {
            k_count += 1;
        }
    }
    let sign = if k_count % 2 == 0 { 1 } else { -1 };
    SignedSimplex { vertices: verts, sign }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rint};

    #[test]
    fn segment_decomposes_into_two_positive_cells() {
        let p = Polytope::from_points(1, vec![vec![rint(0)], vec![rint(4)]]).unwrap();
        let cells = orthoscheme_decomposition(&p, &[rint(1)]).unwrap();
        assert_eq!(cells.len(), 2);
        assert!(cells.iter().all(|c| c.sign == 1));
        let total: Rat = cells
            .iter()
            .map(|c| {
                let v = c.signed_volume_times_d_factorial();
                if c.sign < 0 {
                    -v.abs()
                } else {
                    v.abs()
                }
            })
            .sum();
        assert_eq!(total, rint(4));
    }

    #[test]
    fn square_center_gives_eight_positive_cells() {
        let p = Polytope::from_points(
            2,
            vec![
                vec![rint(0), rint(0)],
                vec![rint(1), rint(0)],
                vec![rint(0), rint(1)],
                vec![rint(1), rint(1)],
            ],
        )
        .unwrap();
        let cells = orthoscheme_decomposition(&p, &[rat(1, 2), rat(1, 2)]).unwrap();
        assert_eq!(cells.len(), 8);
        assert!(cells.iter().all(|c| c.sign == 1));
        for c in &cells {
            assert_eq!(c.signed_volume_times_d_factorial().abs(), rat(1, 4)); // 2!·(1/8)
        }
    }

    #[test]
    fn outside_anchor_still_sums_to_the_volume() {
        let p = Polytope::from_points(
            2,
            vec![vec![rint(0), rint(0)], vec![rint(3), rint(0)], vec![rint(0), rint(2)]],
        )
        .unwrap();
        let anchor = vec![rint(-2), rint(5)];
        let cells = orthoscheme_decomposition(&p, &anchor).unwrap();
        assert!(cells.iter().any(|c| c.sign == -1), "outside anchor forces mixed signs");
        let total: Rat = cells
            .iter()
            .filter(|c| c.sign != 0)
            .map(|c| {
                let v = c.signed_volume_times_d_factorial().abs();
                if c.sign < 0 {
                    -v
                } else {
                    v
                }
            })
            .sum();
        assert_eq!(total, p.volume_times_d_factorial());
    }

    #[test]
    fn orthoscheme_forms_match_the_polytope_facets() {
        // ℓ = (3, 4): triangle (0,0), (3,0), (3,4)
        let p = orthoscheme_polytope(&[rint(3), rint(4)]).unwrap();
        assert_eq!(p.num_vertices(), 3);
        let (normals, heights) =
            orthoscheme_forms(&[rint(1), rint(3), rint(4), rint(1)]);
        for (u, h) in normals.iter().zip(&heights) {
            let form = crate::linform::LinearForm::new(h.clone(), u.clone());
            let canon = form.canonical_positive().0;
            assert!(
                p.facets().contains(&canon),
                "closed-form facet {canon:?} missing from {:?}",
                p.facets()
            );
        }
    }
}
