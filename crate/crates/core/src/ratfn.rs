//! Rational functions whose denominators are products of linear forms.
//!
//! This is the closed class containing every canonical-form computation:
//! numerators are sparse polynomials, denominators are kept as factored
//! multisets of linear forms and are never expanded. A `RatFn` is always
//! reduced (no denominator factor divides the numerator) and canonically
//! scaled (each stored factor is the content-1, sign-normalized
//! representative; the absorbed scalars live in the numerator and global
//! sign), so equality of values is structural equality.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Signed, Zero};

use crate::linform::{linear_form_divide, LinearForm};
use crate::poly::MultiPoly;
use crate::rational::{rat_to_f64, Rat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatFn {
    nvars: usize,
    /// +1 or −1; +1 for the zero function.
    sign: i8,
    /// Numerator with positive leading (lex-greatest) coefficient.
    num: MultiPoly,
    /// Canonical linear forms with multiplicities.
    den: BTreeMap<LinearForm, u32>,
}

impl RatFn {
    pub fn zero(nvars: usize) -> Self {
        RatFn { nvars, sign: 1, num: MultiPoly::zero(nvars), den: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        RatFn::from_parts(MultiPoly::constant(nvars, c), Vec::new())
    }

    /// Builds the reduced canonical representative of `num / ∏ factors`.
    pub fn from_parts(num: MultiPoly, factors: Vec<LinearForm>) -> Self {
        let nvars = num.nvars();
        let mut scale = Rat::one();
        let mut den: BTreeMap<LinearForm, u32> = BTreeMap::new();
        for f in factors {
            assert_eq!(f.dim(), nvars, "denominator variable count mismatch");
            let (canon, lambda) = f.canonical_signed();
            scale *= lambda;
            *den.entry(canon).or_insert(0) += 1;
        }
        let mut num = num.scale(&(Rat::one() / scale));
        if num.is_zero() {
            return RatFn::zero(nvars);
        }
        // reduce: cancel every denominator factor dividing the numerator
        let forms: Vec<LinearForm> = den.keys().cloned().collect();
        for form in forms {
            while den.get(&form).copied().unwrap_or(0) > 0 {
                match linear_form_divide(&num, &form) {
                    Some(q) => {
                        num = q;
                        let m = den.get_mut(&form).unwrap();
                        *m -= 1;
                        if *m == 0 {
                            den.remove(&form);
                        }
                    }
                    None => break,
                }
            }
        }
        let sign = if num.leading_coeff().unwrap().is_negative() { -1 } else { 1 };
        if sign < 0 {
            num = num.neg();
        }
        RatFn { nvars, sign, num, den }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    /// Numerator with positive leading coefficient (unsigned part).
    pub fn numerator(&self) -> &MultiPoly {
        &self.num
    }

    /// Numerator including the global sign.
    pub fn signed_numerator(&self) -> MultiPoly {
        if self.sign < 0 {
            self.num.neg()
        } else {
            self.num.clone()
        }
    }

    pub fn den_factors(&self) -> impl Iterator<Item = (&LinearForm, u32)> {
        self.den.iter().map(|(f, &m)| (f, m))
    }

    pub fn den_total_multiplicity(&self) -> u32 {
        self.den.values().sum()
    }

    /// Degree `deg(num) − deg(den)`; `None` encodes `−∞` for the zero
    /// function.
    pub fn degree(&self) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        Some(self.num.degree().unwrap() as i64 - self.den_total_multiplicity() as i64)
    }

    pub fn neg(&self) -> RatFn {
        if self.is_zero() {
            return self.clone();
        }
        let mut out = self.clone();
        out.sign = -out.sign;
        out
    }

    pub fn scale(&self, c: &Rat) -> RatFn {
        if c.is_zero() || self.is_zero() {
            return RatFn::zero(self.nvars);
        }
        let mut out = self.clone();
        if c.is_negative() {
            out.sign = -out.sign;
        }
        out.num = out.num.scale(&c.abs());
        out
    }

    /// Exact addition over the least common denominator, fully reduced.
    pub fn add(&self, other: &RatFn) -> RatFn {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        // lcm multiset: per canonical form, the max multiplicity
        let mut lcm: BTreeMap<LinearForm, u32> = self.den.clone();
        for (f, &m) in &other.den {
            let e = lcm.entry(f.clone()).or_insert(0);
            *e = (*e).max(m);
        }
        let mut a = self.signed_numerator();
        for (f, &m) in &lcm {
            let have = self.den.get(f).copied().unwrap_or(0);
            for _ in have..m {
                a = a.mul(&f.to_poly());
            }
        }
        let mut b = other.signed_numerator();
        for (f, &m) in &lcm {
            let have = other.den.get(f).copied().unwrap_or(0);
            for _ in have..m {
                b = b.mul(&f.to_poly());
            }
        }
        let num = a.add(&b);
        let factors: Vec<LinearForm> = lcm
            .into_iter()
            .flat_map(|(f, m)| std::iter::repeat(f).take(m as usize))
            .collect();
        RatFn::from_parts(num, factors)
    }

    pub fn sub(&self, other: &RatFn) -> RatFn {
        self.add(&other.neg())
    }

    /// Sums a collection by balanced folding (keeps intermediate reductions
    /// cheap when many summands share denominator walls).
    pub fn sum(mut terms: Vec<RatFn>, nvars: usize) -> RatFn {
        if terms.is_empty() {
            return RatFn::zero(nvars);
        }
        while terms.len() > 1 {
            let mut next = Vec::with_capacity(terms.len() / 2 + 1);
            let mut it = terms.into_iter();
            while let Some(a) = it.next() {
                match it.next() {
                    Some(b) => next.push(a.add(&b)),
                    None => next.push(a),
                }
            }
            terms = next;
        }
        terms.pop().unwrap()
    }

    /// Exact evaluation; `None` when some denominator factor vanishes at `x`.
    pub fn eval(&self, x: &[Rat]) -> Option<Rat> {
        let mut den = Rat::one();
        for (f, &m) in &self.den {
            let v = f.eval(x);
            if v.is_zero() {
                return None;
            }
            for _ in 0..m {
                den *= &v;
            }
        }
        let mut val = self.num.eval(x) / den;
        if self.sign < 0 {
            val = -val;
        }
        Some(val)
    }

    pub fn eval_f64(&self, x: &[f64]) -> f64 {
        let mut den = 1.0;
        for (f, &m) in &self.den {
            den *= f.eval_f64(x).powi(m as i32);
        }
        self.sign as f64 * self.num.eval_f64(x) / den
    }

    /// Substitutes the affine map `x ↦ Sx + t`; `S` must be square of the
    /// ambient dimension (invertibility is the caller's concern — a singular
    /// `S` may collapse denominator factors to constants, which is rejected).
    pub fn substitute_affine(&self, s: &crate::linalg::QMat, t: &[Rat]) -> RatFn {
        assert_eq!(s.rows, self.nvars);
        assert_eq!(s.cols, self.nvars);
        assert_eq!(t.len(), self.nvars);
        if self.is_zero() {
            return self.clone();
        }
        let st = s.transpose();
        let subs: Vec<MultiPoly> = (0..self.nvars)
            .map(|i| {
                // x_i ↦ t_i + Σ_j S[i][j]·x_j
                let mut p = MultiPoly::constant(self.nvars, t[i].clone());
                for j in 0..self.nvars {
                    p = p.add(&MultiPoly::var(self.nvars, j, s.at(i, j).clone()));
                }
                p
            })
            .collect();
        let num = self.signed_numerator().substitute(&subs);
        let mut factors = Vec::new();
        for (f, &m) in &self.den {
            // L(Sx+t) = (h − ⟨u,t⟩) − ⟨Sᵀu, x⟩
            let new_h = &f.h - crate::linalg::dot(&f.u, t);
            let new_u = st.mul_vec(&f.u);
            assert!(
                new_u.iter().any(|c| !c.is_zero()),
                "affine substitution collapsed a denominator factor"
            );
            let lf = LinearForm::new(new_h, new_u);
            for _ in 0..m {
                factors.push(lf.clone());
            }
        }
        RatFn::from_parts(num, factors)
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if self.sign < 0 {
            write!(f, "-")?;
        }
        write!(f, "({})", self.num)?;
        if !self.den.is_empty() {
            write!(f, " / [")?;
            for (i, (form, m)) in self.den.iter().enumerate() {
                if i > 0 {
                    write!(f, "·")?;
                }
                if *m == 1 {
                    write!(f, "({form})")?;
                } else {
                    write!(f, "({form})^{m}")?;
                }
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rint};
    use proptest::prelude::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn lf(h: i64, u: &[i64]) -> LinearForm {
        LinearForm::new(rint(h), u.iter().map(|&c| rint(c)).collect())
    }

    /// 1/L as a one-variable rational function.
    fn inv(h: i64, u: i64) -> RatFn {
        RatFn::from_parts(MultiPoly::one(1), vec![lf(h, &[u])])
    }

    #[test]
    fn telescoping_to_constant_numerator() {
        // 1/x + 1/(1−x) = 1/(x(1−x))
        let f = inv(0, -1); // 1/x
        let g = inv(1, 1); // 1/(1−x)
        let sum = f.add(&g);
        let expected =
            RatFn::from_parts(MultiPoly::one(1), vec![lf(0, &[-1]), lf(1, &[1])]);
        assert_eq!(sum, expected);
    }

    #[test]
    fn cancellation_to_canonical_zero() {
        let f = inv(0, -1);
        let sum = f.add(&f.neg());
        assert!(sum.is_zero());
        assert_eq!(sum, RatFn::zero(1));
        assert_eq!(sum.degree(), None);
    }

    #[test]
    fn segment_valuation_example() {
        // 1/(t(1−t)) + 1/((t−1)(2−t)) = 2/(t(2−t))
        let f = RatFn::from_parts(MultiPoly::one(1), vec![lf(0, &[-1]), lf(1, &[1])]);
        let g = RatFn::from_parts(MultiPoly::one(1), vec![lf(-1, &[-1]), lf(2, &[1])]);
        let sum = f.add(&g);
        let expected = RatFn::from_parts(
            MultiPoly::constant(1, rint(2)),
            vec![lf(0, &[-1]), lf(2, &[1])],
        );
        assert_eq!(sum, expected);
        // spot-check at t = 1/2: 4 − 4/3 = 8/3
        assert_eq!(sum.eval(&[rat(1, 2)]).unwrap(), rat(8, 3));
    }

    #[test]
    fn degree_of_reduced_functions() {
        // standard-triangle canonical form: 1/(x₁x₂(1−x₁−x₂)) → degree −3
        let f = RatFn::from_parts(
            MultiPoly::one(2),
            vec![lf(0, &[-1, 0]), lf(0, &[0, -1]), lf(1, &[1, 1])],
        );
        assert_eq!(f.degree(), Some(-3));
        // 4/((1−x₁²)(1−x₂²)) written with factored denominator → degree −4
        let g = RatFn::from_parts(
            MultiPoly::constant(2, rint(4)),
            vec![lf(1, &[1, 0]), lf(1, &[-1, 0]), lf(0, &[0, 1]).clone(), lf(2, &[0, 1])],
        );
        assert_eq!(g.degree(), Some(-4));
    }

    #[test]
    fn scalar_normalization_absorbs_factor_scales() {
        // 1/(2x) and (1/2)·(1/x) are the same canonical object
        let a = RatFn::from_parts(MultiPoly::one(1), vec![lf(0, &[-2])]);
        let b = inv(0, -1).scale(&rat(1, 2));
        assert_eq!(a, b);
        // flipping the factor sign flips the global sign
        let c = RatFn::from_parts(MultiPoly::one(1), vec![lf(0, &[1])]); // 1/(−x)
        assert_eq!(c, inv(0, -1).neg());
        assert_eq!(c.sign(), -1);
    }

    #[test]
    fn affine_substitution_matches_pointwise() {
        use crate::linalg::QMat;
        let f = RatFn::from_parts(
            MultiPoly::from_terms(2, vec![(vec![1, 0], rint(1)), (vec![0, 0], rint(1))]),
            vec![lf(1, &[1, 1]), lf(0, &[-1, 2])],
        );
        let s = QMat::from_rows(vec![vec![rint(1), rint(2)], vec![rint(0), rint(1)]]);
        let t = vec![rat(1, 3), rint(-1)];
        let g = f.substitute_affine(&s, &t);
        let x = vec![rat(1, 7), rat(2, 7)];
        let sx_t = crate::linalg::vec_add(&s.mul_vec(&x), &t);
        assert_eq!(g.eval(&x), f.eval(&sx_t));
    }

    proptest! {
        // deg(f+g) ≤ max(deg f, deg g) for reduced rational functions
        #[test]
        fn degree_inequality(
            na in -5i64..=5, nb in -5i64..=5,
            ha in -3i64..=3, hb in -3i64..=3,
            ua in 1i64..=3, ub in 1i64..=3,
        ) {
            let f = RatFn::from_parts(MultiPoly::constant(1, rint(na)), vec![lf(ha, &[ua])]);
            let g = RatFn::from_parts(MultiPoly::constant(1, rint(nb)), vec![lf(hb, &[ub])]);
            let sum = f.add(&g);
            if let Some(d) = sum.degree() {
                let da = f.degree().unwrap_or(i64::MIN);
                let db = g.degree().unwrap_or(i64::MIN);
                prop_assert!(d <= da.max(db));
            }
        }
    }

    #[test]
    fn addition_is_exact_at_random_points() {
        let mut rng = StdRng::seed_from_u64(7);
        let f = RatFn::from_parts(
            MultiPoly::from_terms(2, vec![(vec![1, 1], rint(3)), (vec![0, 0], rint(-1))]),
            vec![lf(1, &[2, -1]), lf(0, &[0, 1])],
        );
        let g = RatFn::from_parts(
            MultiPoly::from_terms(2, vec![(vec![2, 0], rint(1))]),
            vec![lf(0, &[0, 1]), lf(3, &[1, 1]), lf(0, &[0, 1])],
        );
        let sum = f.add(&g);
        let mut checked = 0;
        while checked < 100 {
            let x = vec![
                rat(rng.gen_range(-30..=30), rng.gen_range(1..=7)),
                rat(rng.gen_range(-30..=30), rng.gen_range(1..=7)),
            ];
            let (Some(a), Some(b), Some(s)) = (f.eval(&x), g.eval(&x), sum.eval(&x)) else {
                continue;
            };
            assert_eq!(a + b, s);
            checked += 1;
        }
    }
}
