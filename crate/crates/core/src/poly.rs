//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Terms are kept in a `BTreeMap` from exponent vectors to nonzero
//! coefficients, so iteration order (and hence serialization and `Display`)
//! is deterministic. The variable count is fixed per polynomial; homogenized
//! objects use variable index 0 as the homogenization marker by convention.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Signed, Zero};

use crate::rational::{rat_to_f64, rat_to_string, Rat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = MultiPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        MultiPoly::constant(nvars, Rat::one())
    }

    /// The monomial `c · x_k`.
    pub fn var(nvars: usize, k: usize, c: Rat) -> Self {
        assert!(k < nvars);
        let mut exps = vec![0; nvars];
        exps[k] = 1;
        MultiPoly::from_terms(nvars, vec![(exps, c)])
    }

    pub fn from_terms(nvars: usize, terms: Vec<(Vec<u32>, Rat)>) -> Self {
        let mut p = MultiPoly::zero(nvars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Rat) {
        assert_eq!(exps.len(), self.nvars, "exponent length mismatch");
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Total degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rat {
        self.terms.get(exps).cloned().unwrap_or_else(Rat::zero)
    }

    /// Coefficient of the lexicographically greatest monomial.
    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.terms.iter().next_back().map(|(_, c)| c)
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, s: &Rat) -> MultiPoly {
        if s.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect(),
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = MultiPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(exps, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> MultiPoly {
        let mut out = MultiPoly::one(self.nvars);
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    pub fn eval(&self, x: &[Rat]) -> Rat {
        assert_eq!(x.len(), self.nvars);
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (k, &exp) in e.iter().enumerate() {
                for _ in 0..exp {
                    t *= &x[k];
                }
            }
            acc += t;
        }
        acc
    }

    pub fn eval_f64(&self, x: &[f64]) -> f64 {
        assert_eq!(x.len(), self.nvars);
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut t = rat_to_f64(c);
                for (k, &exp) in e.iter().enumerate() {
                    t *= x[k].powi(exp as i32);
                }
                t
            })
            .sum()
    }

    /// The part of total degree exactly `k`.
    pub fn homogeneous_part(&self, k: u32) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() == k)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d0) => degs.all(|d| d == d0),
        }
    }

    /// Inserts a fresh variable at index 0 and lifts every monomial to total
    /// degree `target` using powers of it.
    pub fn homogenize_with_marker(&self, target: u32) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars + 1);
        for (e, c) in &self.terms {
            let deg: u32 = e.iter().sum();
            assert!(deg <= target, "degree above homogenization target");
            let mut exps = Vec::with_capacity(self.nvars + 1);
            exps.push(target - deg);
            exps.extend_from_slice(e);
            out.add_term(exps, c.clone());
        }
        out
    }

    /// Restricts to the terms not involving variable `k` (sets `x_k = 0`).
    pub fn set_var_zero(&self, k: usize) -> MultiPoly {
        assert!(k < self.nvars);
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e[k] == 0)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Sets `x_k = 1` and drops the variable.
    pub fn set_var_one_and_drop(&self, k: usize) -> MultiPoly {
        assert!(k < self.nvars);
        let mut out = MultiPoly::zero(self.nvars - 1);
        for (e, c) in &self.terms {
            let mut exps = e.clone();
            exps.remove(k);
            out.add_term(exps, c.clone());
        }
        out
    }

    /// The highest power of `x_k` dividing the polynomial (zero poly: `None`).
    pub fn min_power_of_var(&self, k: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[k]).min()
    }

    /// Substitutes an affine polynomial for every variable: `x_i ↦ subs[i]`.
    /// All substitution polynomials must share a variable count, which
    /// becomes the variable count of the result.
    pub fn substitute(&self, subs: &[MultiPoly]) -> MultiPoly {
        assert_eq!(subs.len(), self.nvars);
        let out_vars = if subs.is_empty() { 0 } else { subs[0].nvars };
        assert!(subs.iter().all(|s| s.nvars == out_vars));
        let mut out = MultiPoly::zero(out_vars);
        for (e, c) in &self.terms {
            let mut t = MultiPoly::constant(out_vars, c.clone());
            for (k, &exp) in e.iter().enumerate() {
                for _ in 0..exp {
                    t = t.mul(&subs[k]);
                }
            }
            out = out.add(&t);
        }
        out
    }

    /// Re-embeds into `new_nvars` variables, sending variable `i` to
    /// `offset + i`.
    pub fn embed(&self, new_nvars: usize, offset: usize) -> MultiPoly {
        assert!(offset + self.nvars <= new_nvars);
        let mut out = MultiPoly::zero(new_nvars);
        for (e, c) in &self.terms {
            let mut exps = vec![0; new_nvars];
            exps[offset..offset + self.nvars].copy_from_slice(e);
            out.add_term(exps, c.clone());
        }
        out
    }

    /// Division by a polynomial that is linear in variable `k` with a
    /// coefficient free of `x_k`; returns the quotient and remainder
    /// (`self = q·div + r` with `r` free of `x_k`).
    pub(crate) fn div_rem_linear_in_var(&self, div: &MultiPoly, k: usize) -> (MultiPoly, MultiPoly) {
        assert_eq!(self.nvars, div.nvars);
        // split divisor as alpha·x_k + beta with alpha, beta free of x_k
        let mut alpha = MultiPoly::zero(self.nvars);
        let mut beta = MultiPoly::zero(self.nvars);
        for (e, c) in &div.terms {
            match e[k] {
                0 => beta.add_term(e.clone(), c.clone()),
                1 => {
                    let mut exps = e.clone();
                    exps[k] = 0;
                    alpha.add_term(exps, c.clone());
                }
                _ => panic!("divisor not linear in pivot variable"),
            }
        }
        assert!(!alpha.is_zero(), "pivot coefficient vanishes");
        assert_eq!(alpha.degree(), Some(0), "pivot coefficient must be constant");
        let alpha_inv = {
            let c = alpha.leading_coeff().unwrap().clone();
            Rat::one() / c
        };

        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(self.nvars);
        loop {
            let top = rem.terms.keys().filter(|e| e[k] > 0).max_by_key(|e| e[k]).cloned();
            let Some(top) = top else { break };
            let deg = top[k];
            // collect all terms of x_k-degree `deg`
            let block: Vec<(Vec<u32>, Rat)> = rem
                .terms
                .iter()
                .filter(|(e, _)| e[k] == deg)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect();
            for (e, c) in block {
                let mut qe = e.clone();
                qe[k] -= 1;
                let qc = &c * &alpha_inv;
                quot.add_term(qe.clone(), qc.clone());
                // rem -= qc·x_k^{deg-1+1}·alpha  (cancels the block term)
                rem.add_term(e, -c);
                // rem -= qc·x_k^{deg-1}·beta
                for (be, bc) in &beta.terms {
                    let mut re = qe.clone();
                    for (i, b) in be.iter().enumerate() {
                        re[i] += b;
                    }
                    rem.add_term(re, -(&qc * bc));
                }
            }
        }
        (quot, rem)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            let monomial: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &exp)| exp > 0)
                .map(|(k, &exp)| if exp == 1 { format!("x{k}") } else { format!("x{k}^{exp}") })
                .collect();
            if monomial.is_empty() {
                write!(f, "{}", rat_to_string(&a))?;
            } else {
                if !a.is_one() {
                    write!(f, "{}·", rat_to_string(&a))?;
                }
                write!(f, "{}", monomial.join("·"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rint};

    fn p_xy() -> MultiPoly {
        // x^2 - y^2 in 2 vars
        MultiPoly::from_terms(2, vec![(vec![2, 0], rint(1)), (vec![0, 2], rint(-1))])
    }

    #[test]
    fn arithmetic_basics() {
        let p = p_xy();
        assert_eq!(p.degree(), Some(2));
        let q = p.add(&p.neg());
        assert!(q.is_zero());
        assert_eq!(q.degree(), None);
        let r = p.mul(&p);
        assert_eq!(r.coeff(&[4, 0]), rint(1));
        assert_eq!(r.coeff(&[2, 2]), rint(-2));
        assert_eq!(r.eval(&[rint(3), rint(1)]), rint(64));
    }

    #[test]
    fn homogenize_and_specialize() {
        // 1 + 2x with marker to degree 2 -> x0^2 + 2·x0·x
        let p = MultiPoly::from_terms(1, vec![(vec![0], rint(1)), (vec![1], rint(2))]);
        let h = p.homogenize_with_marker(2);
        assert_eq!(h.coeff(&[2, 0]), rint(1));
        assert_eq!(h.coeff(&[1, 1]), rint(2));
        assert!(h.is_homogeneous());
        assert_eq!(h.set_var_one_and_drop(0), p);
        assert_eq!(h.set_var_zero(0).num_terms(), 0);
        assert_eq!(h.min_power_of_var(0), Some(1));
    }

    #[test]
    fn substitution_is_evaluation_compatible() {
        let p = p_xy();
        // x ↦ u+v, y ↦ u-v  gives  (u+v)^2-(u-v)^2 = 4uv
        let sx = MultiPoly::from_terms(2, vec![(vec![1, 0], rint(1)), (vec![0, 1], rint(1))]);
        let sy = MultiPoly::from_terms(2, vec![(vec![1, 0], rint(1)), (vec![0, 1], rint(-1))]);
        let q = p.substitute(&[sx, sy]);
        assert_eq!(q, MultiPoly::from_terms(2, vec![(vec![1, 1], rint(4))]));
    }

    #[test]
    fn division_with_remainder_in_pivot_variable() {
        // (x - y)·(x + y) + 3  divided by (x - y) in variable 0
        let d = MultiPoly::from_terms(2, vec![(vec![1, 0], rint(1)), (vec![0, 1], rint(-1))]);
        let q_true = MultiPoly::from_terms(2, vec![(vec![1, 0], rint(1)), (vec![0, 1], rint(1))]);
        let p = d.mul(&q_true).add(&MultiPoly::constant(2, rint(3)));
        let (q, r) = p.div_rem_linear_in_var(&d, 0);
        assert_eq!(q, q_true);
        assert_eq!(r, MultiPoly::constant(2, rint(3)));
    }

    #[test]
    fn display_is_readable() {
        let p = MultiPoly::from_terms(
            2,
            vec![(vec![2, 0], rint(1)), (vec![0, 1], rat(-1, 2)), (vec![0, 0], rint(3))],
        );
        assert_eq!(format!("{p}"), "x0^2 - 1/2·x1 + 3");
    }
}
