//! Standard polytope families used by the CLI, the verifier batteries and
//! the test suites.

use num::Zero;

use crate::error::{Error, Result};
use crate::linalg::QVec;
use crate::polytope::{ops_zonotope, orthoscheme_polytope, Polytope};
use crate::rational::{rat, rint, Rat};

pub use crate::polytope::zonotope_from_generators;

mod ops_zonotope {
    pub use crate::polytope::zonotope_from_generators;
}

/// `[−1, 1]^d`.
pub fn cube(d: usize) -> Polytope {
    let mut pts = Vec::with_capacity(1 << d);
    for mask in 0u32..(1 << d) {
        pts.push((0..d).map(|k| rint(if mask >> k & 1 == 1 { 1 } else { -1 })).collect());
    }
    Polytope::from_points(d, pts).expect("cube")
}

/// `[0, 1]^d`.
pub fn unit_cube(d: usize) -> Polytope {
    let mut pts = Vec::with_capacity(1 << d);
    for mask in 0u32..(1 << d) {
        pts.push((0..d).map(|k| rint(if mask >> k & 1 == 1 { 1 } else { 0 })).collect());
    }
    Polytope::from_points(d, pts).expect("unit cube")
}

/// Crosspolytope `conv{±e_1, …, ±e_d}`.
pub fn crosspolytope(d: usize) -> Polytope {
    let mut pts = Vec::with_capacity(2 * d);
    for k in 0..d {
        for s in [1i64, -1] {
            let mut v = vec![Rat::zero(); d];
            v[k] = rint(s);
            pts.push(v);
        }
    }
    Polytope::from_points(d, pts).expect("crosspolytope")
}

/// Standard simplex `conv{0, e_1, …, e_d}`.
pub fn standard_simplex(d: usize) -> Polytope {
    let mut pts = vec![vec![Rat::zero(); d]];
    for k in 0..d {
        let mut v = vec![Rat::zero(); d];
        v[k] = rint(1);
        pts.push(v);
    }
    Polytope::from_points(d, pts).expect("simplex")
}

/// Axis box `∏ [0, sides_k]`.
pub fn axis_box(sides: &[Rat]) -> Polytope {
    let d = sides.len();
    let mut pts = Vec::with_capacity(1 << d);
    for mask in 0u32..(1 << d) {
        pts.push(
            (0..d)
                .map(|k| if mask >> k & 1 == 1 { sides[k].clone() } else { Rat::zero() })
                .collect(),
        );
    }
    Polytope::from_points(d, pts).expect("box")
}

/// Pyramid over a base polytope (embedded at height 0) with apex on the
/// last axis.
pub fn pyramid_over(base: &Polytope, apex_height: Rat) -> Result<Polytope> {
    let d = base.dim() + 1;
    let mut pts: Vec<QVec> = base
        .vertices()
        .iter()
        .map(|v| {
            let mut w = v.clone();
            w.push(Rat::zero());
            w
        })
        .collect();
    let mut apex = vec![Rat::zero(); d];
    apex[d - 1] = apex_height;
    pts.push(apex);
    Polytope::from_points(d, pts)
}

/// Square pyramid: `conv([−1,1]² × {0} ∪ {(0,0,1)})`.
pub fn square_pyramid() -> Polytope {
    pyramid_over(&cube(2), rint(1)).expect("square pyramid")
}

/// Triangular prism: standard triangle × segment.
pub fn triangular_prism() -> Polytope {
    standard_simplex(2).product(&segment(rint(0), rint(1))).expect("prism")
}

pub fn segment(a: Rat, b: Rat) -> Polytope {
    Polytope::from_points(1, vec![vec![a], vec![b]]).expect("segment")
}

/// The right triangle with legs 4 and 3 (rational unit normals and edge
/// lengths): vertices (0,0), (4,0), (0,3).
pub fn triangle_345() -> Polytope {
    Polytope::from_points(
        2,
        vec![vec![rint(0), rint(0)], vec![rint(4), rint(0)], vec![rint(0), rint(3)]],
    )
    .expect("3-4-5 triangle")
}

/// Rhombic dodecahedron as the zonotope of `e₁, e₂, e₃, (1,1,1)`.
pub fn rhombic_dodecahedron() -> Polytope {
    let gens: Vec<QVec> = vec![
        vec![rint(1), rint(0), rint(0)],
        vec![rint(0), rint(1), rint(0)],
        vec![rint(0), rint(0), rint(1)],
        vec![rint(1), rint(1), rint(1)],
    ];
    ops_zonotope::zonotope_from_generators(&gens).expect("rhombic dodecahedron")
}

/// The 24-cell: convex hull of the 24 points `±e_i ± e_j`, `i < j`.
pub fn cell24() -> Polytope {
    let mut pts = Vec::with_capacity(24);
    for i in 0..4 {
        for j in i + 1..4 {
            for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let mut v = vec![Rat::zero(); 4];
                v[i] = rint(si);
                v[j] = rint(sj);
                pts.push(v);
            }
        }
    }
    Polytope::from_points(4, pts).expect("24-cell")
}

/// Minkowski sum of the two skew triangles `conv{0, e₁, e₂}` and
/// `conv{0, e₃, e₁+e₂+e₃}` — a 3-polytope with drop 1 that is not a
/// zonotope.
pub fn skew_triangle_sum() -> Polytope {
    let t1 = Polytope::from_points(
        3,
        vec![
            vec![rint(0), rint(0), rint(0)],
            vec![rint(1), rint(0), rint(0)],
            vec![rint(0), rint(1), rint(0)],
        ],
    )
    .expect("triangle");
    let t2 = Polytope::from_points(
        3,
        vec![
            vec![rint(0), rint(0), rint(0)],
            vec![rint(0), rint(0), rint(1)],
            vec![rint(1), rint(1), rint(1)],
        ],
    )
    .expect("triangle");
    t1.minkowski_sum(&t2).expect("skew triangle sum")
}

/// Named family dispatch used by the CLI.
pub fn generate(name: &str, d: Option<usize>, params: &[Rat], seed: u64) -> Result<Polytope> {
    let d_or = |default: usize| d.unwrap_or(default);
    match name {
        "cube" => Ok(cube(d_or(3))),
        "unitcube" => Ok(unit_cube(d_or(3))),
        "crosspolytope" => Ok(crosspolytope(d_or(3))),
        "simplex" => Ok(standard_simplex(d_or(3))),
        "pyramid" => {
            if d.unwrap_or(3) != 3 {
                return Err(Error::Domain("pyramid family is 3-dimensional".into()));
            }
            Ok(square_pyramid())
        }
        "prism" => Ok(triangular_prism()),
        "zonotope" => {
            if params.is_empty() {
                Ok(rhombic_dodecahedron())
            } else {
                let dim = d_or(3);
                if params.len() % dim != 0 {
                    return Err(Error::Domain(format!(
                        "zonotope generators need {dim} coordinates each"
                    )));
                }
                let gens: Vec<QVec> =
                    params.chunks(dim).map(|c| c.to_vec()).collect();
                ops_zonotope::zonotope_from_generators(&gens)
            }
        }
        "orthoscheme" => {
            if params.is_empty() {
                orthoscheme_polytope(&[rint(3), rint(4)])
            } else {
                orthoscheme_polytope(params)
            }
        }
        "24cell" => Ok(cell24()),
        "random" => {
            let dim = d_or(3);
            let mut gen = crate::theorems::InstanceGen::new(seed);
            gen.random_polytope(dim, dim + 4)
        }
        other => Err(Error::Domain(format!(
            "unknown family {other:?}; known: cube, unitcube, crosspolytope, simplex, \
             pyramid, prism, zonotope, orthoscheme, 24cell, random"
        ))),
    }
}

/// Convenience constructors for rationals in family parameter lists.
pub fn rat_params(values: &[(i64, i64)]) -> Vec<Rat> {
    values.iter().map(|&(n, d)| rat(n, d)).collect()
}
