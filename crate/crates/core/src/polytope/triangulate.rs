//! Placing triangulation over the face lattice.
//!
//! Each face is triangulated by coning a chosen apex vertex over the
//! triangulations of its subfaces that do not contain the apex. The default
//! apex choice (lexicographically smallest vertex) makes the output
//! deterministic; any consistent choice yields a valid triangulation, which
//! a cross-check test exploits.

use std::collections::HashMap;

use super::{Polytope, SignedSimplex};

pub(super) fn triangulate(poly: &Polytope) -> Vec<SignedSimplex> {
    // vertices are stored sorted, so the minimal index is the lex-min vertex
    triangulate_with(poly, |verts: &[usize]| verts[0])
}

pub(super) fn triangulate_with<F: FnMut(&[usize]) -> usize>(
    poly: &Polytope,
    mut picker: F,
) -> Vec<SignedSimplex> {
    assert!(poly.is_full_dim(), "triangulation needs a full-dimensional polytope");
    let lattice = poly.lattice();
    let top = &lattice.faces_by_dim[poly.dim()][0];
    let mut memo: HashMap<u64, Vec<Vec<usize>>> = HashMap::new();
    let cells = tri_face(poly, top, &mut memo, &mut picker);
    cells
        .into_iter()
        .map(|idxs| SignedSimplex {
            vertices: idxs.iter().map(|&i| poly.vertices()[i].clone()).collect(),
            sign: 1,
        })
        .collect()
}

fn tri_face<F: FnMut(&[usize]) -> usize>(
    poly: &Polytope,
    face: &super::Face,
    memo: &mut HashMap<u64, Vec<Vec<usize>>>,
    picker: &mut F,
) -> Vec<Vec<usize>> {
    if let Some(cells) = memo.get(&face.vertex_mask) {
        return cells.clone();
    }
    let cells = if face.vertices.len() == face.dim + 1 {
        vec![face.vertices.clone()]
    } else {
        let apex = picker(&face.vertices);
        debug_assert!(face.vertices.contains(&apex));
        let mut out = Vec::new();
        let lattice = poly.lattice();
        let subfaces: Vec<super::Face> = lattice.subfaces(face).cloned().collect();
        for sub in &subfaces {
            if sub.vertex_mask >> apex & 1 == 1 {
                continue;
            }
            for mut cell in tri_face(poly, sub, memo, picker) {
                cell.push(apex);
                out.push(cell);
            }
        }
        out
    };
    memo.insert(face.vertex_mask, cells.clone());
    cells
}

#[cfg(test)]
mod tests {
    use crate::polytope::Polytope;
    use crate::rational::{rat, rint, Rat};
    use num::Zero;

    fn cube(d: usize) -> Polytope {
        let mut pts = Vec::new();
        for mask in 0..(1u32 << d) {
            pts.push((0..d).map(|k| rint(if mask >> k & 1 == 1 { 1 } else { -1 })).collect());
        }
        Polytope::from_points(d, pts).unwrap()
    }

    #[test]
    fn simplex_triangulates_to_itself() {
        let p = Polytope::from_points(
            2,
            vec![vec![rint(0), rint(0)], vec![rint(1), rint(0)], vec![rint(0), rint(1)]],
        )
        .unwrap();
        assert_eq!(p.triangulate().len(), 1);
    }

    #[test]
    fn square_splits_into_two_triangles() {
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
        assert_eq!(p.triangulate().len(), 2);
        assert_eq!(p.volume_times_d_factorial(), rint(2));
    }

    #[test]
    fn cube_volumes_are_exact() {
        for d in 1..=3 {
            let c = cube(d);
            let vol: Rat = c.volume_times_d_factorial();
            // d!·2^d
            let mut expected = rint(1 << d);
            for k in 2..=d {
                expected *= rint(k as i64);
            }
            assert_eq!(vol, expected, "cube dimension {d}");
            // every cell is genuinely full-dimensional
            assert!(c
                .triangulate()
                .iter()
                .all(|s| !s.signed_volume_times_d_factorial().is_zero()));
        }
    }

    #[test]
    fn alternative_apex_choice_preserves_volume() {
        let p = Polytope::from_points(
            3,
            vec![
                vec![rint(0), rint(0), rint(0)],
                vec![rint(2), rint(0), rint(0)],
                vec![rint(0), rint(3), rint(0)],
                vec![rint(1), rint(1), rint(2)],
                vec![rint(2), rint(3), rint(1)],
                vec![rat(1, 2), rat(3, 2), rint(1)],
            ],
        )
        .unwrap();
        let v1: Rat =
            p.triangulate().iter().map(|s| s.signed_volume_times_d_factorial().abs()).sum();
        let v2: Rat = p
            .triangulate_with(|verts| verts[verts.len() - 1])
            .iter()
            .map(|s| s.signed_volume_times_d_factorial().abs())
            .sum();
        assert_eq!(v1, v2);
        assert!(!v1.is_zero());
    }
}
