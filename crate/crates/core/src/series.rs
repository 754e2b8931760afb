//! Taylor expansion of `num / ∏ factors` in the homogenization marker.
//!
//! Variable index 0 is the marker `x₀`. Each denominator factor is written
//! as `W(x) + c·x₀` with `W` free of the marker; inverting it as a geometric
//! series and multiplying the truncated series yields the coefficients of
//! `x₀^0, …, x₀^sMax` as rational functions of the remaining variables.

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::linform::LinearForm;
use crate::poly::MultiPoly;
use crate::ratfn::RatFn;
use crate::rational::Rat;

/// Coefficients `[c_0, …, c_sMax]` of `num / ∏ factors = Σ_s c_s(x)·x₀^s`.
///
/// `num` lives in `(x₀, x)` (the marker is variable 0); every factor must
/// have a nonzero `x`-part, otherwise the expansion at `x₀ = 0` does not
/// exist and an unbounded/degenerate input is signalled.
pub fn series_coefficients_in_marker(
    num: &MultiPoly,
    factors: &[LinearForm],
    s_max: u32,
) -> Result<Vec<RatFn>> {
    let nvars = num.nvars();
    assert!(nvars >= 1, "missing marker variable");
    let d = nvars - 1;

    // split each factor value  h − u₀·x₀ − ⟨u_x, x⟩  as  W(x) + c·x₀
    let mut x_forms: Vec<LinearForm> = Vec::with_capacity(factors.len());
    let mut marker_coeffs: Vec<Rat> = Vec::with_capacity(factors.len());
    for f in factors {
        assert_eq!(f.dim(), nvars, "factor variable count mismatch");
        let ux: Vec<Rat> = f.u[1..].to_vec();
        if ux.iter().all(|c| c.is_zero()) {
            return Err(Error::UnsupportedPolyhedron(
                "denominator factor divisible by the marker (zero x-part)".into(),
            ));
        }
        x_forms.push(LinearForm::new(f.h.clone(), ux));
        marker_coeffs.push(-&f.u[0]);
    }

    // product of num with all truncated geometric numerators
    //   G_F = Σ_{s ≤ sMax} (−c)^s · W^{sMax−s} · x₀^s
    let mut prod = num.clone();
    for (w, c) in x_forms.iter().zip(&marker_coeffs) {
        let w_poly = embed_x_poly(&w.to_poly(), nvars);
        let mut w_pows = Vec::with_capacity(s_max as usize + 1);
        let mut p = MultiPoly::one(nvars);
        for _ in 0..=s_max {
            w_pows.push(p.clone());
            p = p.mul(&w_poly);
        }
        let mut g = MultiPoly::zero(nvars);
        let mut c_pow = Rat::one();
        for s in 0..=s_max {
            let base = w_pows[(s_max - s) as usize].scale(&c_pow);
            g = g.add(&shift_marker(&base, s));
            c_pow *= &(-c);
        }
        prod = mul_trunc_marker(&prod, &g, s_max);
    }

    // assemble each coefficient over the common denominator ∏ W^{sMax+1}
    let mut out = Vec::with_capacity(s_max as usize + 1);
    for s in 0..=s_max {
        let mut num_s = MultiPoly::zero(d);
        for (e, c) in prod.terms() {
            if e[0] == s {
                num_s.add_term(e[1..].to_vec(), c.clone());
            }
        }
        let mut den = Vec::new();
        for w in &x_forms {
            for _ in 0..=s_max {
                den.push(w.clone());
            }
        }
        out.push(RatFn::from_parts(num_s, den));
    }
    Ok(out)
}

/// Embeds a polynomial in the `x`-variables into `(x₀, x)`.
fn embed_x_poly(p: &MultiPoly, nvars: usize) -> MultiPoly {
    p.embed(nvars, 1)
}

/// Multiplies by `x₀^s`.
fn shift_marker(p: &MultiPoly, s: u32) -> MultiPoly {
    let mut out = MultiPoly::zero(p.nvars());
    for (e, c) in p.terms() {
        let mut exps = e.clone();
        exps[0] += s;
        out.add_term(exps, c.clone());
    }
    out
}

/// Product truncated to marker degree ≤ `s_max`.
fn mul_trunc_marker(a: &MultiPoly, b: &MultiPoly, s_max: u32) -> MultiPoly {
    let mut out = MultiPoly::zero(a.nvars());
    for (ea, ca) in a.terms() {
        if ea[0] > s_max {
            continue;
        }
        for (eb, cb) in b.terms() {
            if ea[0] + eb[0] > s_max {
                continue;
            }
            let exps = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            out.add_term(exps, ca * cb);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rint};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn lf(h: i64, u: &[i64]) -> LinearForm {
        LinearForm::new(rint(h), u.iter().map(|&c| rint(c)).collect())
    }

    #[test]
    fn square_cube_expansion() {
        // [−1,1]²: num = 4x₀, factors x₀−x₁, x₀+x₁, x₀−x₂, x₀+x₂
        let num = MultiPoly::var(3, 0, rint(4));
        let factors = vec![
            lf(0, &[-1, 1, 0]),
            lf(0, &[-1, -1, 0]),
            lf(0, &[-1, 0, 1]),
            lf(0, &[-1, 0, -1]),
        ];
        let coeffs = series_coefficients_in_marker(&num, &factors, 1).unwrap();
        assert!(coeffs[0].is_zero());
        let expected = RatFn::from_parts(
            MultiPoly::constant(2, rint(4)),
            vec![lf(0, &[-1, 0]), lf(0, &[-1, 0]), lf(0, &[0, -1]), lf(0, &[0, -1])],
        );
        assert_eq!(coeffs[1], expected);
    }

    #[test]
    fn standard_triangle_expansion() {
        // hom adjoint 1; factors x₁, x₂, x₀−x₁−x₂
        let num = MultiPoly::one(3);
        let factors = vec![lf(0, &[0, -1, 0]), lf(0, &[0, 0, -1]), lf(0, &[-1, 1, 1])];
        let coeffs = series_coefficients_in_marker(&num, &factors, 1).unwrap();
        // Ω₀ = −1/(x₁x₂(x₁+x₂)), Ω₁ = −1/(x₁x₂(x₁+x₂)²)
        let c0 = RatFn::from_parts(
            MultiPoly::constant(2, rint(-1)),
            vec![lf(0, &[-1, 0]), lf(0, &[0, -1]), lf(0, &[1, 1])],
        );
        let c1 = RatFn::from_parts(
            MultiPoly::constant(2, rint(-1)),
            vec![lf(0, &[-1, 0]), lf(0, &[0, -1]), lf(0, &[1, 1]), lf(0, &[1, 1])],
        );
        assert_eq!(coeffs[0], c0.neg().neg());
        assert_eq!(coeffs[0], c0);
        assert_eq!(coeffs[1], c1);
    }

    #[test]
    fn marker_divisible_factor_is_rejected() {
        let num = MultiPoly::one(2);
        let factors = vec![lf(0, &[1, 0])]; // pure x₀ factor
        assert!(series_coefficients_in_marker(&num, &factors, 0).is_err());
    }

    /// Univariate Taylor coefficients of `num(t)/den(t)` at `t = 0` via power
    /// series inversion — an oracle independent of the multivariate path.
    fn univariate_taylor(num: &[Rat], den: &[Rat], order: usize) -> Vec<Rat> {
        assert!(!den[0].is_zero());
        // invert den as a power series
        let mut inv = vec![Rat::zero(); order + 1];
        inv[0] = Rat::one() / &den[0];
        for k in 1..=order {
            let mut acc = Rat::zero();
            for j in 1..=k {
                if j < den.len() {
                    acc += &den[j] * &inv[k - j];
                }
            }
            inv[k] = -acc / &den[0];
        }
        // multiply num·inv
        (0..=order)
            .map(|k| {
                let mut acc = Rat::zero();
                for j in 0..=k {
                    if j < num.len() {
                        acc += &num[j] * &inv[k - j];
                    }
                }
                acc
            })
            .collect()
    }

    #[test]
    fn congruence_with_univariate_oracle_at_random_points() {
        let mut rng = StdRng::seed_from_u64(11);
        // num = x₀²·x₁ + 3x₀x₂ − x₁x₂ + 2 over three affine factors
        let num = MultiPoly::from_terms(
            3,
            vec![
                (vec![2, 1, 0], rint(1)),
                (vec![1, 0, 1], rint(3)),
                (vec![0, 1, 1], rint(-1)),
                (vec![0, 0, 0], rint(2)),
            ],
        );
        let factors = vec![lf(1, &[2, -1, 0]), lf(0, &[-1, 1, 1]), lf(-2, &[1, 0, -3])];
        let s_max = 3u32;
        let coeffs = series_coefficients_in_marker(&num, &factors, s_max).unwrap();

        for _ in 0..20 {
            let x = vec![rat(rng.gen_range(-9..=9), rng.gen_range(1..=4)), rat(rng.gen_range(-9..=9), rng.gen_range(1..=4))];
            // univariate polynomials in x₀ after substituting x
            let full = vec![Rat::zero(), x[0].clone(), x[1].clone()];
            let num_coeffs: Vec<Rat> = (0..=2u32)
                .map(|k| {
                    let mut acc = Rat::zero();
                    for (e, c) in num.terms() {
                        if e[0] == k {
                            let mut t = c.clone();
                            for (var, &exp) in e.iter().enumerate().skip(1) {
                                for _ in 0..exp {
                                    t *= &full[var];
                                }
                            }
                            acc += t;
                        }
                    }
                    acc
                })
                .collect();
            let mut den_coeffs = vec![Rat::one()];
            let mut ok = true;
            for f in &factors {
                // factor = (h − ⟨u_x, x⟩) + (−u₀)·x₀
                let w = &f.h - (&f.u[1] * &x[0] + &f.u[2] * &x[1]);
                if w.is_zero() {
                    ok = false;
                    break;
                }
                let c = -&f.u[0];
                let mut next = vec![Rat::zero(); den_coeffs.len() + 1];
                for (i, a) in den_coeffs.iter().enumerate() {
                    next[i] += a * &w;
                    next[i + 1] += a * &c;
                }
                den_coeffs = next;
            }
            if !ok {
                continue;
            }
            let taylor = univariate_taylor(&num_coeffs, &den_coeffs, s_max as usize);
            for (s, c_s) in coeffs.iter().enumerate() {
                assert_eq!(c_s.eval(&x).unwrap(), taylor[s], "coefficient {s} at {x:?}");
            }
        }
    }
}
