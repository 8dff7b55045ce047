//! Bicomplex k-Fibonacci and k-Lucas quaternions.
//!
//! `QF(n) = F(n) + i F(n+1) + j F(n+2) + ij F(n+3)` and likewise `QL(n)` with
//! Lucas terms. Arithmetic on them is plain bicomplex arithmetic on
//! [`BkfQuaternion::value`].

use crate::bicomplex::{Bicomplex, Conjugation};
use crate::kfib::{KContext, Sequence};
use crate::ring::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BkfQuaternion {
    value: Bicomplex,
    kind: Sequence,
    index: i64,
}

impl BkfQuaternion {
    pub fn new(ctx: &KContext, kind: Sequence, index: i64) -> Self {
        let [w, x, y, z] = [0, 1, 2, 3].map(|c| ctx.term(kind, index + c));
        let value = Bicomplex::new(w, x, y, z).expect("one context yields one scalar mode");
        Self { value, kind, index }
    }

    pub fn value(&self) -> &Bicomplex {
        &self.value
    }

    pub fn into_value(self) -> Bicomplex {
        self.value
    }

    pub fn kind(&self) -> Sequence {
        self.kind
    }

    pub fn index(&self) -> i64 {
        self.index
    }

    /// Scalar part `S(n)` and vector part `i S(n+1) + j S(n+2) + ij S(n+3)`.
    pub fn parts(&self) -> (Scalar, Bicomplex) {
        let [w, x, y, z] = self.value.clone().into_components();
        let zero = Scalar::zero(w.mode());
        let vector = Bicomplex::new(zero, x, y, z).expect("components share a mode");
        (w, vector)
    }

    pub fn conj(&self, kind: Conjugation) -> Bicomplex {
        self.value.conj(kind)
    }

    pub fn norm_form(&self, kind: Conjugation) -> Bicomplex {
        self.value.norm_form(kind)
    }
}

/// The bicomplex k-Fibonacci quaternion `QF(k, n)`.
pub fn qf(ctx: &KContext, n: i64) -> BkfQuaternion {
    BkfQuaternion::new(ctx, Sequence::Fibonacci, n)
}

/// The bicomplex k-Lucas quaternion `QL(k, n)`.
pub fn ql(ctx: &KContext, n: i64) -> BkfQuaternion {
    BkfQuaternion::new(ctx, Sequence::Lucas, n)
}

/// Floating-point Binet form of `QF(k, n)`:
/// `(α̂ α^n - β̂ β^n) / (α - β)` with `α̂ = 1 + iα + jα² + ijα³`.
///
/// Component `c` is `(α^(n+c) - β^(n+c)) / (α - β)`. Panics unless `k > 0`.
pub fn binet_qf_float(k: f64, n: u32) -> [f64; 4] {
    assert!(k > 0.0, "binet_qf_float requires k > 0, got {k}");
    let root = (k * k + 4.0).sqrt();
    let alpha = (k + root) / 2.0;
    let beta = -1.0 / alpha;
    let alpha_n = alpha.powi(n as i32);
    let beta_n = beta.powi(n as i32);
    let mut out = [0.0; 4];
    let (mut a_hat, mut b_hat) = (1.0, 1.0);
    for slot in out.iter_mut() {
        *slot = (a_hat * alpha_n - b_hat * beta_n) / root;
        a_hat *= alpha;
        b_hat *= beta;
    }
    out
}
