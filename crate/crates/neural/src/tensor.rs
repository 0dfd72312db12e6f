//! Dense row-major matrices and the scalar trait shared by training (`f32`)
//! and gradient checking (`f64`).

use std::fmt::Debug;
use std::iter::Sum;

use num_traits::{Float as NumFloat, FromPrimitive};

pub trait Float: NumFloat + FromPrimitive + Default + Debug + Send + Sync + Sum + 'static {
    /// `c = alpha * op(a) * op(b) + beta * c` over strided views.
    ///
    /// # Safety
    /// Pointers and strides must describe valid `m×k`, `k×n` and `m×n`
    /// views; `c` must not alias `a` or `b`.
    #[allow(clippy::too_many_arguments)]
    unsafe fn gemm(
        m: usize,
        k: usize,
        n: usize,
        alpha: Self,
        a: *const Self,
        rsa: isize,
        csa: isize,
        b: *const Self,
        rsb: isize,
        csb: isize,
        beta: Self,
        c: *mut Self,
        rsc: isize,
        csc: isize,
    );

    fn from_f64_lossy(x: f64) -> Self {
        <Self as FromPrimitive>::from_f64(x).unwrap_or_else(Self::nan)
    }

    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Float for f32 {
    unsafe fn gemm(
        m: usize,
        k: usize,
        n: usize,
        alpha: f32,
        a: *const f32,
        rsa: isize,
        csa: isize,
        b: *const f32,
        rsb: isize,
        csb: isize,
        beta: f32,
        c: *mut f32,
        rsc: isize,
        csc: isize,
    ) {
        matrixmultiply::sgemm(m, k, n, alpha, a, rsa, csa, b, rsb, csb, beta, c, rsc, csc)
    }
}

impl Float for f64 {
    unsafe fn gemm(
        m: usize,
        k: usize,
        n: usize,
        alpha: f64,
        a: *const f64,
        rsa: isize,
        csa: isize,
        b: *const f64,
        rsb: isize,
        csb: isize,
        beta: f64,
        c: *mut f64,
        rsc: isize,
        csc: isize,
    ) {
        matrixmultiply::dgemm(m, k, n, alpha, a, rsa, csa, b, rsb, csb, beta, c, rsc, csc)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Tensor<T> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<T>,
}

impl<T: Float> Tensor<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Tensor { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn filled(rows: usize, cols: usize, v: T) -> Self {
        Tensor { rows, cols, data: vec![v; rows * cols] }
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols, "tensor data does not match {rows}x{cols}");
        Tensor { rows, cols, data }
    }

    pub fn scalar(v: T) -> Self {
        Tensor { rows: 1, cols: 1, data: vec![v] }
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [T] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn get(&self, r: usize, c: usize) -> T {
        self.data[r * self.cols + c]
    }

    pub fn add_assign(&mut self, other: &Tensor<T>) {
        debug_assert_eq!(self.shape(), other.shape());
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a = *a + *b;
        }
    }

    pub fn fill_zero(&mut self) {
        self.data.iter_mut().for_each(|x| *x = T::zero());
    }

    pub fn cast<U: Float>(&self) -> Tensor<U> {
        Tensor {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| U::from_f64_lossy(x.to_f64_lossy())).collect(),
        }
    }

    pub fn all_finite(&self) -> bool {
        self.data.iter().all(|x| x.is_finite())
    }
}

/// `out (+)= op(a) · op(b)` where `op` optionally transposes.
pub fn matmul_into<T: Float>(a: &Tensor<T>, ta: bool, b: &Tensor<T>, tb: bool, out: &mut Tensor<T>, accumulate: bool) {
    let (m, k) = if ta { (a.cols, a.rows) } else { (a.rows, a.cols) };
    let (k2, n) = if tb { (b.cols, b.rows) } else { (b.rows, b.cols) };
    assert_eq!(k, k2, "matmul inner dimensions differ");
    assert_eq!(out.shape(), (m, n), "matmul output shape");
    let (rsa, csa) = if ta { (1, a.cols as isize) } else { (a.cols as isize, 1) };
    let (rsb, csb) = if tb { (1, b.cols as isize) } else { (b.cols as isize, 1) };
    let beta = if accumulate { T::one() } else { T::zero() };
    if m == 0 || n == 0 {
        return;
    }
    if k == 0 {
        if !accumulate {
            out.fill_zero();
        }
        return;
    }
    // SAFETY: shapes were checked above and `out` is a distinct allocation.
    unsafe {
        T::gemm(
            m,
            k,
            n,
            T::one(),
            a.data.as_ptr(),
            rsa,
            csa,
            b.data.as_ptr(),
            rsb,
            csb,
            beta,
            out.data.as_mut_ptr(),
            out.cols as isize,
            1,
        )
    }
}

pub fn matmul<T: Float>(a: &Tensor<T>, ta: bool, b: &Tensor<T>, tb: bool) -> Tensor<T> {
    let m = if ta { a.cols } else { a.rows };
    let n = if tb { b.rows } else { b.cols };
    let mut out = Tensor::zeros(m, n);
    matmul_into(a, ta, b, tb, &mut out, false);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive(a: &Tensor<f64>, b: &Tensor<f64>) -> Tensor<f64> {
        let mut out = Tensor::zeros(a.rows, b.cols);
        for i in 0..a.rows {
            for j in 0..b.cols {
                out.data[i * b.cols + j] = (0..a.cols).map(|k| a.get(i, k) * b.get(k, j)).sum();
            }
        }
        out
    }

    fn transpose(a: &Tensor<f64>) -> Tensor<f64> {
        let mut out = Tensor::zeros(a.cols, a.rows);
        for i in 0..a.rows {
            for j in 0..a.cols {
                out.data[j * a.rows + i] = a.get(i, j);
            }
        }
        out
    }

    #[test]
    fn matmul_matches_naive_in_every_transpose_mode() {
        let a = Tensor::from_vec(3, 4, (0..12).map(|x| x as f64 * 0.5 - 2.0).collect());
        let b = Tensor::from_vec(4, 2, (0..8).map(|x| (x as f64).sin()).collect());
        let want = naive(&a, &b);
        let close = |x: &Tensor<f64>| x.data.iter().zip(&want.data).all(|(p, q)| (p - q).abs() < 1e-12);
        assert!(close(&matmul(&a, false, &b, false)));
        assert!(close(&matmul(&transpose(&a), true, &b, false)));
        assert!(close(&matmul(&a, false, &transpose(&b), true)));
        assert!(close(&matmul(&transpose(&a), true, &transpose(&b), true)));
    }

    #[test]
    fn accumulate_adds() {
        let a = Tensor::from_vec(1, 1, vec![2.0f32]);
        let mut out = Tensor::from_vec(1, 1, vec![1.0f32]);
        matmul_into(&a, false, &a, false, &mut out, true);
        assert_eq!(out.data, vec![5.0]);
    }
}
