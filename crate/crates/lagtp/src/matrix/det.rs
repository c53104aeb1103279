use super::Mat;
use crate::poly::Poly;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Commutative ring with exact division, enough for fraction-free elimination.
pub trait ExactRing: Clone + Zero + One + PartialEq {
    fn mul_r(&self, o: &Self) -> Self;
    fn sub_r(&self, o: &Self) -> Self;
    fn neg_r(&self) -> Self;
    /// `self / d`, where the caller guarantees divisibility.
    fn div_r(&self, d: &Self) -> Self;
}

impl ExactRing for BigInt {
    fn mul_r(&self, o: &Self) -> Self {
        self * o
    }
    fn sub_r(&self, o: &Self) -> Self {
        self - o
    }
    fn neg_r(&self) -> Self {
        -self
    }
    fn div_r(&self, d: &Self) -> Self {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero(), "inexact Bareiss division");
        q
    }
}

impl ExactRing for Poly {
    fn mul_r(&self, o: &Self) -> Self {
        self * o
    }
    fn sub_r(&self, o: &Self) -> Self {
        self - o
    }
    fn neg_r(&self) -> Self {
        -self
    }
    fn div_r(&self, d: &Self) -> Self {
        self.div_exact(d).expect("inexact Bareiss division")
    }
}

fn laplace<R: ExactRing>(m: &[R], n: usize, rows: &[usize], cols: &mut Vec<usize>) -> R {
    if rows.is_empty() {
        return R::one();
    }
    let r = rows[0];
    let mut acc = R::zero();
    for idx in 0..cols.len() {
        let c = cols[idx];
        let a = &m[r * n + c];
        if a.is_zero() {
            continue;
        }
        cols.remove(idx);
        let minor = laplace(m, n, &rows[1..], cols);
        cols.insert(idx, c);
        let t = a.mul_r(&minor);
        acc = if idx % 2 == 0 { acc + t } else { acc.sub_r(&t) };
    }
    acc
}

/// Determinant of a square matrix over an exact ring: cofactor expansion up
/// to 4x4, fraction-free Bareiss elimination with row pivoting above.
pub fn det_generic<R: ExactRing>(m: &[R], n: usize) -> R {
    assert_eq!(m.len(), n * n, "determinant of a non-square matrix");
    if n <= 4 {
        let rows: Vec<usize> = (0..n).collect();
        let mut cols = rows.clone();
        return laplace(m, n, &rows, &mut cols);
    }
    let mut a = m.to_vec();
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if a[k * n + k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i * n + k].is_zero()) else {
                return R::zero();
            };
            for j in 0..n {
                a.swap(k * n + j, p * n + j);
            }
            negate = !negate;
        }
        let piv = a[k * n + k].clone();
        for i in k + 1..n {
            let aik = a[i * n + k].clone();
            for j in k + 1..n {
                let x = a[i * n + j].mul_r(&piv).sub_r(&aik.mul_r(&a[k * n + j]));
                a[i * n + j] = x.div_r(&prev);
            }
            a[i * n + k] = R::zero();
        }
        prev = piv;
    }
    let d = a[n * n - 1].clone();
    if negate {
        d.neg_r()
    } else {
        d
    }
}

pub fn det_exact(m: &Mat) -> Poly {
    assert_eq!(m.rows(), m.cols(), "determinant of a non-square matrix");
    det_generic(m.entries(), m.rows())
}

pub fn det_int(m: &[BigInt], n: usize) -> BigInt {
    det_generic(m, n)
}
