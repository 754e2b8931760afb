//! Affine linear forms `L(x) = h − ⟨u, x⟩`.
//!
//! These are the facet-defining forms: a polytope facet with outward normal
//! `u` and height `h` satisfies `L ≥ 0` on the polytope and `L = 0` on the
//! facet. With `h = 0` the same type carries the homogeneous forms used by
//! the reduced canonical form.

use num::{Signed, Zero};

use crate::linalg::{dot, is_zero_vec, primitive_scale, QVec};
use crate::poly::MultiPoly;
use crate::rational::{rat_to_f64, rat_to_string, Rat};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearForm {
    pub h: Rat,
    pub u: QVec,
}

impl LinearForm {
    pub fn new(h: Rat, u: QVec) -> Self {
        assert!(!is_zero_vec(&u), "linear form with zero normal");
        LinearForm { h, u }
    }

    pub fn dim(&self) -> usize {
        self.u.len()
    }

    pub fn eval(&self, x: &[Rat]) -> Rat {
        &self.h - dot(&self.u, x)
    }

    pub fn eval_f64(&self, x: &[f64]) -> f64 {
        let mut acc = rat_to_f64(&self.h);
        for (ui, xi) in self.u.iter().zip(x) {
            acc -= rat_to_f64(ui) * xi;
        }
        acc
    }

    pub fn to_poly(&self) -> MultiPoly {
        let n = self.dim();
        let mut terms = vec![(vec![0; n], self.h.clone())];
        for (k, c) in self.u.iter().enumerate() {
            let mut e = vec![0; n];
            e[k] = 1;
            terms.push((e, -c));
        }
        MultiPoly::from_terms(n, terms)
    }

    /// Canonical representative under scaling by arbitrary nonzero rationals:
    /// `(h, u)` is integer with content 1 and the first nonzero entry of the
    /// concatenated vector is positive. Returns the factor `λ` with
    /// `self = λ · canonical`.
    pub fn canonical_signed(&self) -> (LinearForm, Rat) {
        let mut all = Vec::with_capacity(1 + self.u.len());
        all.push(self.h.clone());
        all.extend(self.u.iter().cloned());
        let (mut prim, mut lambda) = primitive_scale(&all);
        let first = prim.iter().find(|c| !c.is_zero()).expect("nonzero form");
        if first.is_negative() {
            for c in &mut prim {
                *c = -&*c;
            }
            lambda = -lambda;
        }
        let h = prim[0].clone();
        let u = prim[1..].to_vec();
        (LinearForm::new(h, u), lambda)
    }

    /// Canonical representative under scaling by positive rationals only
    /// (keeps orientation). Returns `λ > 0` with `self = λ · canonical`.
    pub fn canonical_positive(&self) -> (LinearForm, Rat) {
        let mut all = Vec::with_capacity(1 + self.u.len());
        all.push(self.h.clone());
        all.extend(self.u.iter().cloned());
        let (prim, lambda) = primitive_scale(&all);
        debug_assert!(lambda.is_positive());
        let h = prim[0].clone();
        let u = prim[1..].to_vec();
        (LinearForm::new(h, u), lambda)
    }

    /// Whether `other` equals a positive rational multiple of `self`.
    pub fn positively_proportional_to(&self, other: &LinearForm) -> bool {
        self.canonical_positive().0 == other.canonical_positive().0
    }

    /// Whether the zero sets of `self` and `other` are parallel hyperplanes
    /// (normals proportional, forms not proportional or proportional — the
    /// hyperplanes may coincide).
    pub fn parallel_to(&self, other: &LinearForm) -> bool {
        let (a, _) = primitive_scale_signed_normal(&self.u);
        let (b, _) = primitive_scale_signed_normal(&other.u);
        a == b
    }

    /// Homogenized form on `(x₀, x)`: the value `h·x₀ − ⟨u, x⟩`, stored as a
    /// linear form with height zero in one more variable.
    pub fn homogenize(&self) -> LinearForm {
        let mut u = Vec::with_capacity(self.u.len() + 1);
        u.push(-&self.h);
        u.extend(self.u.iter().cloned());
        LinearForm::new(Rat::zero(), u)
    }

    /// The homogeneous form `⟨x, u⟩` sharing this form's normal (height
    /// dropped, sign so that its value is `−⟨u,x⟩`... kept as `h = 0`).
    pub fn homogeneous_part(&self) -> LinearForm {
        LinearForm::new(Rat::zero(), self.u.clone())
    }
}

/// Content-1 scaling of a normal with sign fixed by the first nonzero entry.
fn primitive_scale_signed_normal(u: &[Rat]) -> (QVec, Rat) {
    let (mut prim, mut lambda) = primitive_scale(u);
    let first = prim.iter().find(|c| !c.is_zero()).expect("nonzero normal");
    if first.is_negative() {
        for c in &mut prim {
            *c = -&*c;
        }
        lambda = -lambda;
    }
    (prim, lambda)
}

impl std::fmt::Display for LinearForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", rat_to_string(&self.h))?;
        for (k, c) in self.u.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                write!(f, " + {}·x{}", rat_to_string(&c.abs()), k)?;
            } else {
                write!(f, " - {}·x{}", rat_to_string(c), k)?;
            }
        }
        Ok(())
    }
}

/// Exact division of a polynomial by a linear form: returns `q` with
/// `p = L·q` when `L` divides `p`, and `None` otherwise. Divisibility is
/// decided by the exact remainder after eliminating one variable along `L`.
pub fn linear_form_divide(p: &MultiPoly, form: &LinearForm) -> Option<MultiPoly> {
    assert_eq!(p.nvars(), form.dim(), "variable count mismatch");
    if p.is_zero() {
        return Some(p.clone());
    }
    let pivot = form.u.iter().position(|c| !c.is_zero()).expect("nonzero form");
    let (q, r) = p.div_rem_linear_in_var(&form.to_poly(), pivot);
    if r.is_zero() {
        Some(q)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rint};
    use proptest::prelude::*;

    fn lf(h: i64, u: &[i64]) -> LinearForm {
        LinearForm::new(rint(h), u.iter().map(|&c| rint(c)).collect())
    }

    #[test]
    fn difference_of_squares() {
        // p = x² − y², L = x − y  (h = 0, u = (−1, 1))  →  x + y
        let p = MultiPoly::from_terms(2, vec![(vec![2, 0], rint(1)), (vec![0, 2], rint(-1))]);
        let l = lf(0, &[-1, 1]);
        let q = linear_form_divide(&p, &l).unwrap();
        let expected =
            MultiPoly::from_terms(2, vec![(vec![1, 0], rint(1)), (vec![0, 1], rint(1))]);
        assert_eq!(q, expected);
    }

    #[test]
    fn non_divisible_is_absent() {
        let p = MultiPoly::from_terms(2, vec![(vec![2, 0], rint(1)), (vec![0, 2], rint(1))]);
        let l = lf(0, &[-1, 1]);
        assert!(linear_form_divide(&p, &l).is_none());
    }

    #[test]
    fn unit_interval_factor() {
        // p = x·(1−x), L = 1 − x → x
        let p = MultiPoly::from_terms(1, vec![(vec![1], rint(1)), (vec![2], rint(-1))]);
        let l = lf(1, &[1]);
        assert_eq!(linear_form_divide(&p, &l).unwrap(), MultiPoly::var(1, 0, rint(1)));
    }

    #[test]
    fn canonical_scaling() {
        let l = LinearForm::new(rat(-2, 3), vec![rat(4, 3), rint(-2)]);
        let (c, lambda) = l.canonical_signed();
        // scaled to integers with content 1 and positive first nonzero entry
        assert_eq!(c, LinearForm::new(rint(1), vec![rint(-2), rint(3)]));
        assert_eq!(lambda, rat(-2, 3));
        let (cp, lp) = l.canonical_positive();
        assert_eq!(cp, LinearForm::new(rint(-1), vec![rint(2), rint(-3)]));
        assert_eq!(lp, rat(2, 3));
        assert!(l.positively_proportional_to(&LinearForm::new(
            rat(-1, 3),
            vec![rat(2, 3), rint(-1)]
        )));
        assert!(!l.positively_proportional_to(&c));
        assert!(l.parallel_to(&c));
    }

    #[test]
    fn homogenization_value_agrees() {
        let l = lf(5, &[2, -3]);
        let hl = l.homogenize();
        // value at (x0, x) = h·x0 − ⟨u, x⟩
        let x0 = rat(1, 2);
        let x = [rint(1), rint(2)];
        let v = hl.eval(&[x0.clone(), x[0].clone(), x[1].clone()]);
        assert_eq!(v, &(rint(5) * &x0) - (rint(2) * &x[0] + rint(-3) * &x[1]));
    }

    proptest! {
        // linear_form_divide(p·L, L) = p for random p, L
        #[test]
        fn divide_recovers_factor(
            coeffs in proptest::collection::vec(-6i64..=6, 6),
            hu in proptest::collection::vec(-4i64..=4, 4),
        ) {
            let p = MultiPoly::from_terms(3, vec![
                (vec![0, 0, 0], rint(coeffs[0])),
                (vec![1, 0, 0], rint(coeffs[1])),
                (vec![0, 1, 1], rint(coeffs[2])),
                (vec![2, 0, 0], rint(coeffs[3])),
                (vec![0, 0, 2], rint(coeffs[4])),
                (vec![1, 1, 1], rint(coeffs[5])),
            ]);
            let u: Vec<Rat> = hu[1..].iter().map(|&c| rint(c)).collect();
            prop_assume!(u.iter().any(|c| !c.is_zero()));
            let l = LinearForm::new(rint(hu[0]), u);
            let prod = p.mul(&l.to_poly());
            let q = linear_form_divide(&prod, &l);
            prop_assert_eq!(q.unwrap(), p);
        }
    }
}
