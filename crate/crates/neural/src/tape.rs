//! Reverse-mode automatic differentiation over a linear tape of matrix ops.
//!
//! Values live on the tape; parameters are borrowed from a [`ParamStore`] and
//! their gradients are accumulated straight into a [`Grads`] buffer.

use crate::params::{Grads, ParamId, ParamStore};
use crate::tensor::{matmul_into, Float, Tensor};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Var(usize);

enum Op<T> {
    Input,
    Param(ParamId),
    Gather { table: Var, ids: Vec<usize> },
    Add(Var, Var),
    AddRow(Var, Var),
    /// `x · w`, or `x · wᵀ` when `transposed`.
    MatMul { x: Var, w: Var, transposed: bool },
    Gelu(Var),
    LayerNorm { x: Var, g: Var, b: Var, xhat: Vec<T>, rstd: Vec<T> },
    Attention { qkv: Var, segments: Vec<(usize, usize)>, heads: usize, probs: Vec<T> },
    SelectRows { x: Var, rows: Vec<usize> },
    BceWithLogits { x: Var, targets: Vec<T> },
    CrossEntropy { x: Var, targets: Vec<usize>, probs: Vec<T> },
    Sum(Vec<Var>),
    Scale(Var, T),
}

struct Node<T> {
    value: Option<Tensor<T>>,
    op: Op<T>,
    needs_grad: bool,
}

pub struct Tape<'p, T> {
    params: &'p ParamStore<T>,
    nodes: Vec<Node<T>>,
}

const SQRT_2_OVER_PI: f64 = 0.797_884_560_802_865_4;
const GELU_C: f64 = 0.044_715;

fn gelu<T: Float>(x: T) -> T {
    let c = T::from_f64_lossy(SQRT_2_OVER_PI);
    let half = T::from_f64_lossy(0.5);
    let t = (c * (x + T::from_f64_lossy(GELU_C) * x * x * x)).tanh();
    half * x * (T::one() + t)
}

fn gelu_grad<T: Float>(x: T) -> T {
    let c = T::from_f64_lossy(SQRT_2_OVER_PI);
    let k = T::from_f64_lossy(GELU_C);
    let half = T::from_f64_lossy(0.5);
    let t = (c * (x + k * x * x * x)).tanh();
    let three = T::from_f64_lossy(3.0);
    half * (T::one() + t) + half * x * (T::one() - t * t) * c * (T::one() + three * k * x * x)
}

pub fn sigmoid<T: Float>(x: T) -> T {
    if x >= T::zero() {
        T::one() / (T::one() + (-x).exp())
    } else {
        let e = x.exp();
        e / (T::one() + e)
    }
}

/// Raw strided view used by the attention kernels.
#[derive(Clone, Copy)]
struct View<T> {
    ptr: *const T,
    rs: isize,
    cs: isize,
}

/// `c (+)= a · b` on strided views.
///
/// # Safety
/// Views must address valid memory for the given shapes, and `c` must not
/// overlap `a` or `b`.
#[allow(clippy::too_many_arguments)]
unsafe fn gemm_view<T: Float>(m: usize, k: usize, n: usize, a: View<T>, b: View<T>, c: *mut T, rsc: isize, acc: bool) {
    let beta = if acc { T::one() } else { T::zero() };
    T::gemm(m, k, n, T::one(), a.ptr, a.rs, a.cs, b.ptr, b.rs, b.cs, beta, c, rsc, 1);
}

impl<'p, T: Float> Tape<'p, T> {
    pub fn new(params: &'p ParamStore<T>) -> Self {
        Tape { params, nodes: Vec::new() }
    }

    pub fn params(&self) -> &'p ParamStore<T> {
        self.params
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn value(&self, v: Var) -> &Tensor<T> {
        match &self.nodes[v.0].op {
            Op::Param(id) => self.params.get(*id),
            _ => self.nodes[v.0].value.as_ref().expect("computed value"),
        }
    }

    fn push(&mut self, value: Tensor<T>, op: Op<T>, inputs: &[Var]) -> Var {
        let needs_grad = inputs.iter().any(|v| self.nodes[v.0].needs_grad);
        self.nodes.push(Node { value: Some(value), op, needs_grad });
        Var(self.nodes.len() - 1)
    }

    pub fn input(&mut self, t: Tensor<T>) -> Var {
        self.nodes.push(Node { value: Some(t), op: Op::Input, needs_grad: false });
        Var(self.nodes.len() - 1)
    }

    pub fn param(&mut self, id: ParamId) -> Var {
        self.nodes.push(Node { value: None, op: Op::Param(id), needs_grad: true });
        Var(self.nodes.len() - 1)
    }

    /// Rows of `table` selected by `ids`.
    pub fn gather(&mut self, table: Var, ids: &[usize]) -> Var {
        let t = self.value(table);
        let mut out = Tensor::zeros(ids.len(), t.cols);
        for (r, &id) in ids.iter().enumerate() {
            out.row_mut(r).copy_from_slice(t.row(id));
        }
        self.push(out, Op::Gather { table, ids: ids.to_vec() }, &[table])
    }

    pub fn add(&mut self, a: Var, b: Var) -> Var {
        let mut out = self.value(a).clone();
        out.add_assign(self.value(b));
        self.push(out, Op::Add(a, b), &[a, b])
    }

    /// `x + 1·b` with `b` a single row broadcast over every row of `x`.
    pub fn add_row(&mut self, x: Var, b: Var) -> Var {
        let mut out = self.value(x).clone();
        let bias = self.value(b);
        assert_eq!(bias.rows, 1);
        assert_eq!(bias.cols, out.cols);
        for r in 0..out.rows {
            for (o, bb) in out.row_mut(r).iter_mut().zip(&bias.data) {
                *o = *o + *bb;
            }
        }
        self.push(out, Op::AddRow(x, b), &[x, b])
    }

    pub fn matmul(&mut self, x: Var, w: Var) -> Var {
        self.matmul_op(x, w, false)
    }

    pub fn matmul_t(&mut self, x: Var, w: Var) -> Var {
        self.matmul_op(x, w, true)
    }

    fn matmul_op(&mut self, x: Var, w: Var, transposed: bool) -> Var {
        let out = crate::tensor::matmul(self.value(x), false, self.value(w), transposed);
        self.push(out, Op::MatMul { x, w, transposed }, &[x, w])
    }

    pub fn linear(&mut self, x: Var, w: Var, b: Var) -> Var {
        let y = self.matmul(x, w);
        self.add_row(y, b)
    }

    pub fn gelu(&mut self, x: Var) -> Var {
        let v = self.value(x);
        let out = Tensor { rows: v.rows, cols: v.cols, data: v.data.iter().map(|&a| gelu(a)).collect() };
        self.push(out, Op::Gelu(x), &[x])
    }

    pub fn layer_norm(&mut self, x: Var, g: Var, b: Var, eps: f64) -> Var {
        let v = self.value(x);
        let (rows, cols) = v.shape();
        let gamma = self.value(g);
        let beta = self.value(b);
        let n = T::from_usize(cols).expect("width");
        let eps = T::from_f64_lossy(eps);
        let mut out = Tensor::zeros(rows, cols);
        let mut xhat = vec![T::zero(); rows * cols];
        let mut rstd = vec![T::zero(); rows];
        for r in 0..rows {
            let row = v.row(r);
            let mean = row.iter().copied().sum::<T>() / n;
            let var = row.iter().map(|&a| (a - mean) * (a - mean)).sum::<T>() / n;
            let rs = T::one() / (var + eps).sqrt();
            rstd[r] = rs;
            for c in 0..cols {
                let h = (row[c] - mean) * rs;
                xhat[r * cols + c] = h;
                out.data[r * cols + c] = h * gamma.data[c] + beta.data[c];
            }
        }
        self.push(out, Op::LayerNorm { x, g, b, xhat, rstd }, &[x, g, b])
    }

    /// Multi-head self-attention over packed sequences. `qkv` is `n × 3h`
    /// (queries, keys, values side by side); `segments` are `(start, len)`
    /// row ranges that attend only within themselves.
    pub fn attention(&mut self, qkv: Var, segments: &[(usize, usize)], heads: usize) -> Var {
        let v = self.value(qkv);
        let n = v.rows;
        assert_eq!(v.cols % 3, 0);
        let h = v.cols / 3;
        assert_eq!(h % heads, 0, "hidden not divisible by heads");
        let d = h / heads;
        let scale = T::one() / T::from_usize(d).expect("head width").sqrt();
        let total: usize = segments.iter().map(|&(_, l)| l * l).sum::<usize>() * heads;
        let mut probs = vec![T::zero(); total];
        let mut out: Tensor<T> = Tensor::zeros(n, h);
        let base = v.data.as_ptr();
        let w3 = (3 * h) as isize;
        let mut off = 0;
        for &(start, len) in segments {
            assert!(start + len <= n, "segment out of range");
            for hh in 0..heads {
                let p = &mut probs[off..off + len * len];
                // SAFETY: all views stay inside `qkv` (n × 3h), `probs` and `out`.
                unsafe {
                    let q = View { ptr: base.add(start * 3 * h + hh * d), rs: w3, cs: 1 };
                    let kt = View { ptr: base.add(start * 3 * h + h + hh * d), rs: 1, cs: w3 };
                    gemm_view(len, d, len, q, kt, p.as_mut_ptr(), len as isize, false);
                }
                for r in 0..len {
                    let row = &mut p[r * len..(r + 1) * len];
                    let mx = row.iter().fold(T::neg_infinity(), |m, &a| m.max(a * scale));
                    let mut s = T::zero();
                    for a in row.iter_mut() {
                        *a = (*a * scale - mx).exp();
                        s = s + *a;
                    }
                    for a in row.iter_mut() {
                        *a = *a / s;
                    }
                }
                unsafe {
                    let pv = View { ptr: p.as_ptr(), rs: len as isize, cs: 1 };
                    let vv = View { ptr: base.add(start * 3 * h + 2 * h + hh * d), rs: w3, cs: 1 };
                    gemm_view(len, len, d, pv, vv, out.data.as_mut_ptr().add(start * h + hh * d), h as isize, false);
                }
                off += len * len;
            }
        }
        self.push(out, Op::Attention { qkv, segments: segments.to_vec(), heads, probs }, &[qkv])
    }

    /// Probabilities of every attention op on the tape, in order; each is
    /// laid out segment by segment, head by head, row-major.
    pub fn attention_maps(&self) -> impl Iterator<Item = &[T]> {
        self.nodes.iter().filter_map(|n| match &n.op {
            Op::Attention { probs, .. } => Some(probs.as_slice()),
            _ => None,
        })
    }

    pub fn select_rows(&mut self, x: Var, rows: &[usize]) -> Var {
        let v = self.value(x);
        let mut out = Tensor::zeros(rows.len(), v.cols);
        for (i, &r) in rows.iter().enumerate() {
            out.row_mut(i).copy_from_slice(v.row(r));
        }
        self.push(out, Op::SelectRows { x, rows: rows.to_vec() }, &[x])
    }

    /// Mean binary cross-entropy with logits over every element.
    pub fn bce_with_logits(&mut self, x: Var, targets: &Tensor<T>) -> Var {
        let v = self.value(x);
        assert_eq!(v.shape(), targets.shape());
        let n = T::from_usize(v.len().max(1)).expect("count");
        let total = v
            .data
            .iter()
            .zip(&targets.data)
            .map(|(&z, &t)| z.max(T::zero()) - z * t + (T::one() + (-z.abs()).exp()).ln())
            .sum::<T>();
        self.push(Tensor::scalar(total / n), Op::BceWithLogits { x, targets: targets.data.clone() }, &[x])
    }

    /// Mean softmax cross-entropy over rows, each row's target a class index.
    pub fn cross_entropy(&mut self, x: Var, targets: &[usize]) -> Var {
        let v = self.value(x);
        assert_eq!(v.rows, targets.len());
        let mut probs = vec![T::zero(); v.len()];
        let mut total = T::zero();
        for (r, &t) in targets.iter().enumerate() {
            let row = v.row(r);
            let mx = row.iter().fold(T::neg_infinity(), |m, &a| m.max(a));
            let s = row.iter().map(|&a| (a - mx).exp()).sum::<T>();
            let lse = mx + s.ln();
            total = total + lse - row[t];
            for (c, &a) in row.iter().enumerate() {
                probs[r * v.cols + c] = (a - lse).exp();
            }
        }
        let n = T::from_usize(targets.len().max(1)).expect("count");
        self.push(Tensor::scalar(total / n), Op::CrossEntropy { x, targets: targets.to_vec(), probs }, &[x])
    }

    /// Sum of scalar nodes.
    pub fn sum(&mut self, xs: &[Var]) -> Var {
        let total = xs.iter().map(|&x| self.value(x).data[0]).sum::<T>();
        self.push(Tensor::scalar(total), Op::Sum(xs.to_vec()), xs)
    }

    pub fn scale(&mut self, x: Var, s: T) -> Var {
        let v = self.value(x);
        let out = Tensor { rows: v.rows, cols: v.cols, data: v.data.iter().map(|&a| a * s).collect() };
        self.push(out, Op::Scale(x, s), &[x])
    }

    /// Accumulate d`loss`/dθ into `grads`. `loss` must be a 1×1 node.
    pub fn backward(&self, loss: Var, grads: &mut Grads<T>) {
        assert_eq!(self.value(loss).shape(), (1, 1), "backward needs a scalar");
        let mut g: Vec<Option<Tensor<T>>> = (0..self.nodes.len()).map(|_| None).collect();
        g[loss.0] = Some(Tensor::scalar(T::one()));
        for i in (0..=loss.0).rev() {
            let Some(gy) = g[i].take() else { continue };
            if !self.nodes[i].needs_grad {
                continue;
            }
            self.backward_node(i, gy, &mut g, grads);
        }
    }

    /// Gradient slot for `v`: the parameter buffer for parameters, a tape
    /// buffer otherwise. `None` when `v` needs no gradient.
    fn slot<'a>(&self, v: Var, g: &'a mut [Option<Tensor<T>>], grads: &'a mut Grads<T>) -> Option<&'a mut Tensor<T>> {
        let node = &self.nodes[v.0];
        if !node.needs_grad {
            return None;
        }
        match node.op {
            Op::Param(id) => Some(grads.get_mut(id)),
            _ => {
                let (r, c) = self.value(v).shape();
                Some(g[v.0].get_or_insert_with(|| Tensor::zeros(r, c)))
            }
        }
    }

    fn backward_node(&self, i: usize, gy: Tensor<T>, g: &mut [Option<Tensor<T>>], grads: &mut Grads<T>) {
        match &self.nodes[i].op {
            Op::Input | Op::Param(_) => {}
            Op::Gather { table, ids } => {
                if let Some(dt) = self.slot(*table, g, grads) {
                    for (r, &id) in ids.iter().enumerate() {
                        for (a, b) in dt.row_mut(id).iter_mut().zip(gy.row(r)) {
                            *a = *a + *b;
                        }
                    }
                }
            }
            Op::Add(a, b) => {
                if let Some(da) = self.slot(*a, g, grads) {
                    da.add_assign(&gy);
                }
                if let Some(db) = self.slot(*b, g, grads) {
                    db.add_assign(&gy);
                }
            }
            Op::AddRow(x, b) => {
                if let Some(dx) = self.slot(*x, g, grads) {
                    dx.add_assign(&gy);
                }
                if let Some(db) = self.slot(*b, g, grads) {
                    for r in 0..gy.rows {
                        for (a, v) in db.data.iter_mut().zip(gy.row(r)) {
                            *a = *a + *v;
                        }
                    }
                }
            }
            Op::MatMul { x, w, transposed } => {
                let xv = self.value(*x);
                let wv = self.value(*w);
                if let Some(dx) = self.slot(*x, g, grads) {
                    // y = x·w ⇒ dx = gy·wᵀ ; y = x·wᵀ ⇒ dx = gy·w
                    matmul_into(&gy, false, wv, !*transposed, dx, true);
                }
                if let Some(dw) = self.slot(*w, g, grads) {
                    if *transposed {
                        matmul_into(&gy, true, xv, false, dw, true);
                    } else {
                        matmul_into(xv, true, &gy, false, dw, true);
                    }
                }
            }
            Op::Gelu(x) => {
                let xv = self.value(*x);
                if let Some(dx) = self.slot(*x, g, grads) {
                    for ((d, &a), &gg) in dx.data.iter_mut().zip(&xv.data).zip(&gy.data) {
                        *d = *d + gg * gelu_grad(a);
                    }
                }
            }
            Op::LayerNorm { x, g: gamma, b: beta, xhat, rstd } => {
                let gv = self.value(*gamma).clone();
                let (rows, cols) = gy.shape();
                if let Some(dg) = self.slot(*gamma, g, grads) {
                    for r in 0..rows {
                        for c in 0..cols {
                            dg.data[c] = dg.data[c] + gy.data[r * cols + c] * xhat[r * cols + c];
                        }
                    }
                }
                if let Some(db) = self.slot(*beta, g, grads) {
                    for r in 0..rows {
                        for c in 0..cols {
                            db.data[c] = db.data[c] + gy.data[r * cols + c];
                        }
                    }
                }
                if let Some(dx) = self.slot(*x, g, grads) {
                    let n = T::from_usize(cols).expect("width");
                    let mut dxhat = vec![T::zero(); cols];
                    for r in 0..rows {
                        let mut m1 = T::zero();
                        let mut m2 = T::zero();
                        for c in 0..cols {
                            let v = gy.data[r * cols + c] * gv.data[c];
                            dxhat[c] = v;
                            m1 = m1 + v;
                            m2 = m2 + v * xhat[r * cols + c];
                        }
                        m1 = m1 / n;
                        m2 = m2 / n;
                        for c in 0..cols {
                            let k = r * cols + c;
                            dx.data[k] = dx.data[k] + rstd[r] * (dxhat[c] - m1 - xhat[k] * m2);
                        }
                    }
                }
            }
            Op::Attention { qkv, segments, heads, probs } => {
                let v = self.value(*qkv);
                let h = v.cols / 3;
                let d = h / heads;
                let scale = T::one() / T::from_usize(d).expect("head width").sqrt();
                let base = v.data.as_ptr();
                let w3 = (3 * h) as isize;
                let Some(dqkv) = self.slot(*qkv, g, grads) else { return };
                let dbase = dqkv.data.as_mut_ptr();
                let gbase = gy.data.as_ptr();
                let mut off = 0;
                let mut dp: Vec<T> = Vec::new();
                for &(start, len) in segments {
                    dp.clear();
                    dp.resize(len * len, T::zero());
                    for hh in 0..*heads {
                        let p = &probs[off..off + len * len];
                        // SAFETY: views stay within `qkv`/`dqkv` (n × 3h), `gy` (n × h),
                        // `probs` and `dp`; `dqkv` is a separate allocation.
                        unsafe {
                            let go = View { ptr: gbase.add(start * h + hh * d), rs: h as isize, cs: 1 };
                            let vt = View { ptr: base.add(start * 3 * h + 2 * h + hh * d), rs: 1, cs: w3 };
                            gemm_view(len, d, len, go, vt, dp.as_mut_ptr(), len as isize, false);
                            let pt = View { ptr: p.as_ptr(), rs: 1, cs: len as isize };
                            gemm_view(len, len, d, pt, go, dbase.add(start * 3 * h + 2 * h + hh * d), w3, true);
                        }
                        for r in 0..len {
                            let pr = &p[r * len..(r + 1) * len];
                            let dr = &mut dp[r * len..(r + 1) * len];
                            let dot = pr.iter().zip(dr.iter()).map(|(&a, &b)| a * b).sum::<T>();
                            for (x, &pp) in dr.iter_mut().zip(pr) {
                                *x = pp * (*x - dot) * scale;
                            }
                        }
                        unsafe {
                            let ds = View { ptr: dp.as_ptr(), rs: len as isize, cs: 1 };
                            let k = View { ptr: base.add(start * 3 * h + h + hh * d), rs: w3, cs: 1 };
                            gemm_view(len, len, d, ds, k, dbase.add(start * 3 * h + hh * d), w3, true);
                            let dst = View { ptr: dp.as_ptr(), rs: 1, cs: len as isize };
                            let q = View { ptr: base.add(start * 3 * h + hh * d), rs: w3, cs: 1 };
                            gemm_view(len, len, d, dst, q, dbase.add(start * 3 * h + h + hh * d), w3, true);
                        }
                        off += len * len;
                    }
                }
            }
            Op::SelectRows { x, rows } => {
                if let Some(dx) = self.slot(*x, g, grads) {
                    for (i, &r) in rows.iter().enumerate() {
                        for (a, b) in dx.row_mut(r).iter_mut().zip(gy.row(i)) {
                            *a = *a + *b;
                        }
                    }
                }
            }
            Op::BceWithLogits { x, targets } => {
                let xv = self.value(*x);
                let n = T::from_usize(xv.len().max(1)).expect("count");
                let s = gy.data[0] / n;
                if let Some(dx) = self.slot(*x, g, grads) {
                    for ((d, &z), &t) in dx.data.iter_mut().zip(&xv.data).zip(targets) {
                        *d = *d + (sigmoid(z) - t) * s;
                    }
                }
            }
            Op::CrossEntropy { x, targets, probs } => {
                let cols = self.value(*x).cols;
                let n = T::from_usize(targets.len().max(1)).expect("count");
                let s = gy.data[0] / n;
                if let Some(dx) = self.slot(*x, g, grads) {
                    for (r, &t) in targets.iter().enumerate() {
                        for c in 0..cols {
                            let k = r * cols + c;
                            let onehot = if c == t { T::one() } else { T::zero() };
                            dx.data[k] = dx.data[k] + (probs[k] - onehot) * s;
                        }
                    }
                }
            }
            Op::Sum(xs) => {
                for x in xs {
                    if let Some(dx) = self.slot(*x, g, grads) {
                        dx.data[0] = dx.data[0] + gy.data[0];
                    }
                }
            }
            Op::Scale(x, s) => {
                if let Some(dx) = self.slot(*x, g, grads) {
                    for (d, &gg) in dx.data.iter_mut().zip(&gy.data) {
                        *d = *d + gg * *s;
                    }
                }
            }
        }
    }
}
