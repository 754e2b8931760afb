//! Exact rational vectors and matrices.
//!
//! Determinants use fraction-free (Bareiss) elimination over the integers
//! after clearing denominators; everything else is straightforward Gaussian
//! elimination over the rationals. Dimensions here are tiny (`d ≤ 6` plus a
//! homogenizing row), so clarity wins over asymptotics.

use num::{BigInt, Integer, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rat;

pub type QVec = Vec<Rat>;

/// Dense row-major rational matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Rat>,
}

impl QMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "empty matrix");
        QMat { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMat::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<QVec>) -> Self {
        assert!(!rows.is_empty());
        let cols = rows[0].len();
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let data = rows.into_iter().flatten().collect();
        QMat { rows: rows_len(&data, cols), cols, data }
    }

    pub fn from_cols(cols: Vec<QVec>) -> Self {
        assert!(!cols.is_empty());
        let nrows = cols[0].len();
        assert!(cols.iter().all(|c| c.len() == nrows), "ragged columns");
        let mut m = QMat::zeros(nrows, cols.len());
        for (j, c) in cols.into_iter().enumerate() {
            for (i, x) in c.into_iter().enumerate() {
                *m.at_mut(i, j) = x;
            }
        }
        m
    }

    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> QVec {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> QMat {
        let mut t = QMat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *t.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Rat]) -> QVec {
        assert_eq!(self.cols, v.len());
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    pub fn mul_mat(&self, other: &QMat) -> QMat {
        assert_eq!(self.cols, other.rows);
        let mut m = QMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Rat::zero();
                for k in 0..self.cols {
                    acc += self.at(i, k) * other.at(k, j);
                }
                *m.at_mut(i, j) = acc;
            }
        }
        m
    }

    /// Exact determinant by fraction-free (Bareiss) elimination: denominators
    /// are cleared row by row, the integer matrix is reduced keeping all
    /// divisions exact, and the cleared factor is divided back out.
    pub fn det(&self) -> Result<Rat> {
        if self.rows != self.cols {
            return Err(Error::Dimension(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut scale = BigInt::one();
        let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for i in 0..n {
            let mut lcm = BigInt::one();
            for j in 0..n {
                lcm = lcm.lcm(self.at(i, j).denom());
            }
            scale *= &lcm;
            m.push(
                (0..n)
                    .map(|j| {
                        let x = self.at(i, j);
                        x.numer() * (&lcm / x.denom())
                    })
                    .collect(),
            );
        }
        let det_int = bareiss(&mut m);
        Ok(Rat::new(det_int, scale))
    }

    /// Solves `self * x = b` for square `self`; `Err(Singular)` otherwise.
    pub fn solve(&self, b: &[Rat]) -> Result<QVec> {
        assert_eq!(self.rows, self.cols);
        assert_eq!(self.rows, b.len());
        let n = self.rows;
        let mut a = self.clone();
        let mut rhs = b.to_vec();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a.at(r, col).is_zero())
                .ok_or(Error::Singular)?;
            if pivot != col {
                for j in 0..n {
                    let tmp = a.at(pivot, j).clone();
                    *a.at_mut(pivot, j) = a.at(col, j).clone();
                    *a.at_mut(col, j) = tmp;
                }
                rhs.swap(pivot, col);
            }
            let p = a.at(col, col).clone();
            for r in 0..n {
                if r == col || a.at(r, col).is_zero() {
                    continue;
                }
                let f = a.at(r, col) / &p;
                for j in col..n {
                    let sub = &f * a.at(col, j);
                    *a.at_mut(r, j) -= sub;
                }
                let sub = &f * &rhs[col];
                rhs[r] -= sub;
            }
        }
        Ok((0..n).map(|i| &rhs[i] / a.at(i, i)).collect())
    }

    pub fn inverse(&self) -> Result<QMat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut inv = QMat::zeros(n, n);
        for j in 0..n {
            let mut e = vec![Rat::zero(); n];
            e[j] = Rat::one();
            let col = self.solve(&e)?;
            for i in 0..n {
                *inv.at_mut(i, j) = col[i].clone();
            }
        }
        Ok(inv)
    }

    /// Rank by plain rational elimination.
    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let (mut r, mut c) = (0, 0);
        while r < a.rows && c < a.cols {
            match (r..a.rows).find(|&i| !a.at(i, c).is_zero()) {
                None => c += 1,
                Some(p) => {
                    if p != r {
                        for j in 0..a.cols {
                            let tmp = a.at(p, j).clone();
                            *a.at_mut(p, j) = a.at(r, j).clone();
                            *a.at_mut(r, j) = tmp;
                        }
                    }
                    let pv = a.at(r, c).clone();
                    for i in r + 1..a.rows {
                        if a.at(i, c).is_zero() {
                            continue;
                        }
                        let f = a.at(i, c) / &pv;
                        for j in c..a.cols {
                            let sub = &f * a.at(r, j);
                            *a.at_mut(i, j) -= sub;
                        }
                    }
                    r += 1;
                    c += 1;
                }
            }
        }
        r
    }
}

fn rows_len(data: &[Rat], cols: usize) -> usize {
    debug_assert!(data.len() % cols == 0);
    data.len() / cols
}

/// Bareiss elimination on an integer matrix; consumes the buffer.
fn bareiss(m: &mut [Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                None => return BigInt::zero(),
                Some(p) => {
                    m.swap(k, p);
                    sign = -sign;
                }
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                // Bareiss guarantees exact divisibility by the previous pivot.
                m[i][j] = t / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn vec_add(a: &[Rat], b: &[Rat]) -> QVec {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Rat], b: &[Rat]) -> QVec {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(a: &[Rat], s: &Rat) -> QVec {
    a.iter().map(|x| x * s).collect()
}

pub fn vec_neg(a: &[Rat]) -> QVec {
    a.iter().map(|x| -x).collect()
}

pub fn is_zero_vec(a: &[Rat]) -> bool {
    a.iter().all(|x| x.is_zero())
}

pub fn norm_sq(a: &[Rat]) -> Rat {
    a.iter().map(|x| x * x).sum()
}

/// A nonzero vector orthogonal to the span of `rows` (each of length `d`,
/// spanning a `(d−1)`-dimensional space), computed as the vector of signed
/// maximal minors. Returns `None` when the rows do not span a hyperplane.
pub fn hyperplane_normal(rows: &[QVec], d: usize) -> Option<QVec> {
    assert!(rows.iter().all(|r| r.len() == d));
    if rows.len() != d - 1 {
        return None;
    }
    if d == 1 {
        return Some(vec![Rat::one()]);
    }
    let mut normal = Vec::with_capacity(d);
    for j in 0..d {
        let minor = QMat::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|(k, _)| *k != j)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect(),
        );
        let m = minor.det().expect("square minor");
        normal.push(if j % 2 == 0 { m } else { -m });
    }
    if is_zero_vec(&normal) {
        None
    } else {
        Some(normal)
    }
}

/// Content-1 integer scaling: divides by the gcd of all numerators times the
/// lcm of denominators, returning the scaled vector together with the factor
/// `λ > 0` such that `input = λ · output`.
pub fn primitive_scale(v: &[Rat]) -> (QVec, Rat) {
    assert!(!is_zero_vec(v), "primitive scaling of zero vector");
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut gcd = BigInt::zero();
    for n in &ints {
        gcd = gcd.gcd(n);
    }
    let out: Vec<Rat> = ints.iter().map(|n| Rat::from(n / &gcd)).collect();
    (out, Rat::new(gcd, lcm))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rint};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn mat_i64(rows: &[&[i64]]) -> QMat {
        QMat::from_rows(rows.iter().map(|r| r.iter().map(|&x| rint(x)).collect()).collect())
    }

    #[test]
    fn det_identity() {
        assert_eq!(QMat::identity(3).det().unwrap(), rint(1));
    }

    #[test]
    fn det_standard_simplex_adjoint_matrix() {
        // cofactor expansion by hand gives 1
        let m = mat_i64(&[&[-1, 0, 1], &[0, -1, 1], &[0, 0, 1]]);
        assert_eq!(m.det().unwrap(), rint(1));
    }

    #[test]
    fn det_repeated_row_is_zero() {
        let m = mat_i64(&[&[1, 2, 3], &[4, 5, 6], &[1, 2, 3]]);
        assert_eq!(m.det().unwrap(), rint(0));
    }

    #[test]
    fn det_non_square_errors() {
        let m = mat_i64(&[&[1, 2, 3], &[4, 5, 6]]);
        assert!(m.det().is_err());
    }

    /// Cofactor expansion, as an independent reference for `det`.
    fn det_cofactor(m: &QMat) -> Rat {
        let n = m.rows;
        if n == 1 {
            return m.at(0, 0).clone();
        }
        let mut acc = Rat::zero();
        for j in 0..n {
            if m.at(0, j).is_zero() {
                continue;
            }
            let sub = QMat::from_rows(
                (1..n)
                    .map(|i| {
                        (0..n)
                            .filter(|&k| k != j)
                            .map(|k| m.at(i, k).clone())
                            .collect()
                    })
                    .collect(),
            );
            let term = m.at(0, j) * det_cofactor(&sub);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn det_matches_cofactor_expansion_randomized() {
        let mut rng = StdRng::seed_from_u64(42);
        for n in 1..=5usize {
            for _ in 0..40 {
                let m = QMat::from_rows(
                    (0..n)
                        .map(|_| {
                            (0..n)
                                .map(|_| rat(rng.gen_range(-9..=9), rng.gen_range(1..=4)))
                                .collect()
                        })
                        .collect(),
                );
                assert_eq!(m.det().unwrap(), det_cofactor(&m));
            }
        }
    }

    #[test]
    fn solve_and_inverse() {
        let m = mat_i64(&[&[2, 1], &[1, 3]]);
        let x = m.solve(&[rint(5), rint(10)]).unwrap();
        assert_eq!(x, vec![rint(1), rint(3)]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul_mat(&inv), QMat::identity(2));
        assert!(mat_i64(&[&[1, 2], &[2, 4]]).solve(&[rint(1), rint(1)]).is_err());
    }

    #[test]
    fn rank_counts_independent_rows() {
        assert_eq!(mat_i64(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(QMat::identity(4).rank(), 4);
        assert_eq!(mat_i64(&[&[0, 0], &[0, 0]]).rank(), 0);
    }

    #[test]
    fn hyperplane_normal_is_orthogonal() {
        let rows = vec![vec![rint(1), rint(2), rint(3)], vec![rint(0), rint(1), rint(1)]];
        let n = hyperplane_normal(&rows, 3).unwrap();
        for r in &rows {
            assert_eq!(dot(&n, r), rint(0));
        }
        // dependent rows span no hyperplane
        let dep = vec![vec![rint(1), rint(2), rint(3)], vec![rint(2), rint(4), rint(6)]];
        assert!(hyperplane_normal(&dep, 3).is_none());
    }

    #[test]
    fn primitive_scale_reconstructs_input() {
        let v = vec![rat(4, 6), rat(-2, 3), rint(2)];
        let (p, lambda) = primitive_scale(&v);
        assert_eq!(p, vec![rint(1), rint(-1), rint(3)]);
        for (orig, prim) in v.iter().zip(&p) {
            assert_eq!(orig, &(&lambda * prim));
        }
    }
}
