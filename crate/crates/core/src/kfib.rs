//! k-Fibonacci and k-Lucas sequences.
//!
//! Both satisfy `S(n+1) = k*S(n) + S(n-1)`; Fibonacci starts `0, 1` and Lucas
//! starts `2, k`. Negative indices follow the backward recurrence
//! `S(n-1) = S(n+1) - k*S(n)`.

use std::fmt;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ring::{Poly, Scalar, ScalarMode};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sequence {
    Fibonacci,
    Lucas,
}

/// How `k` is interpreted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum KMode {
    Int(BigInt),
    Sym,
}

impl KMode {
    pub fn scalar_mode(&self) -> ScalarMode {
        match self {
            KMode::Int(_) => ScalarMode::Int,
            KMode::Sym => ScalarMode::Sym,
        }
    }
}

impl fmt::Display for KMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KMode::Int(k) => write!(f, "k={k}"),
            KMode::Sym => f.write_str("sym"),
        }
    }
}

/// Terms at indices `0, 1, 2, ...` and `-1, -2, ...`, grown on demand.
#[derive(Debug)]
struct Terms {
    pos: Vec<Scalar>,
    neg: Vec<Scalar>,
}

impl Terms {
    fn seeded(s0: Scalar, s1: Scalar) -> Self {
        Self {
            pos: vec![s0, s1],
            neg: Vec::new(),
        }
    }

    fn get(&mut self, n: i64, k: &Scalar) -> Scalar {
        if n >= 0 {
            let n = n as usize;
            while self.pos.len() <= n {
                let len = self.pos.len();
                let next = k * &self.pos[len - 1] + &self.pos[len - 2];
                self.pos.push(next);
            }
            self.pos[n].clone()
        } else {
            let j = (-(n + 1)) as usize;
            while self.neg.len() <= j {
                // S(m-1) = S(m+1) - k*S(m), with m the lowest index known so far
                let len = self.neg.len();
                let (s_m, s_m1) = match len {
                    0 => (&self.pos[0], &self.pos[1]),
                    1 => (&self.neg[0], &self.pos[0]),
                    _ => (&self.neg[len - 1], &self.neg[len - 2]),
                };
                let prev = s_m1 - &(k * s_m);
                self.neg.push(prev);
            }
            self.neg[j].clone()
        }
    }
}

/// A fixed choice of `k` plus memo tables for both sequences.
///
/// Cached terms are append-only; lookups through a shared reference are safe
/// from several threads.
#[derive(Debug)]
pub struct KContext {
    mode: KMode,
    k: Scalar,
    fib: Mutex<Terms>,
    lucas: Mutex<Terms>,
}

impl KContext {
    /// Integer mode; `k` must be at least 1.
    pub fn int(k: impl Into<BigInt>) -> Result<Self> {
        let k = k.into();
        if k < BigInt::one() {
            return Err(Error::InvalidK(k.to_string()));
        }
        Ok(Self::build(KMode::Int(k)))
    }

    pub fn symbolic() -> Self {
        Self::build(KMode::Sym)
    }

    pub fn new(mode: KMode) -> Result<Self> {
        match mode {
            KMode::Int(k) => Self::int(k),
            KMode::Sym => Ok(Self::symbolic()),
        }
    }

    fn build(mode: KMode) -> Self {
        let sm = mode.scalar_mode();
        let k = match &mode {
            KMode::Int(k) => Scalar::Int(k.clone()),
            KMode::Sym => Scalar::Sym(Poly::k()),
        };
        let fib = Terms::seeded(Scalar::zero(sm), Scalar::one(sm));
        let lucas = Terms::seeded(Scalar::from_i64(sm, 2), k.clone());
        Self {
            mode,
            k,
            fib: Mutex::new(fib),
            lucas: Mutex::new(lucas),
        }
    }

    pub fn mode(&self) -> &KMode {
        &self.mode
    }

    pub fn scalar_mode(&self) -> ScalarMode {
        self.mode.scalar_mode()
    }

    /// `k` as a scalar of this context's mode.
    pub fn k(&self) -> &Scalar {
        &self.k
    }

    /// A polynomial in `k` as a scalar: kept as-is in symbolic mode, evaluated
    /// in integer mode.
    pub fn poly(&self, p: &Poly) -> Scalar {
        match &self.mode {
            KMode::Int(k) => Scalar::Int(p.eval(k)),
            KMode::Sym => Scalar::Sym(p.clone()),
        }
    }

    pub fn constant(&self, c: i64) -> Scalar {
        Scalar::from_i64(self.scalar_mode(), c)
    }

    /// `F(k, n)`.
    pub fn fib(&self, n: i64) -> Scalar {
        self.fib.lock().expect("fib cache poisoned").get(n, &self.k)
    }

    /// `L(k, n)`.
    pub fn lucas(&self, n: i64) -> Scalar {
        self.lucas
            .lock()
            .expect("lucas cache poisoned")
            .get(n, &self.k)
    }

    pub fn term(&self, seq: Sequence, n: i64) -> Scalar {
        match seq {
            Sequence::Fibonacci => self.fib(n),
            Sequence::Lucas => self.lucas(n),
        }
    }
}

/// `(F(k, n), F(k, n+1))` by fast doubling, `O(log n)` big-integer operations.
///
/// Uses `F(2m) = F(m) * (2F(m+1) - k*F(m))` and `F(2m+1) = F(m)^2 + F(m+1)^2`.
pub fn fib_pair_fastdouble(k: &BigInt, n: u64) -> (BigInt, BigInt) {
    let mut a = BigInt::zero();
    let mut b = BigInt::one();
    if n == 0 {
        return (a, b);
    }
    let bits = 64 - n.leading_zeros();
    for shift in (0..bits).rev() {
        let two_b = &b << 1;
        let even = &a * (two_b - k * &a);
        let odd = &a * &a + &b * &b;
        if (n >> shift) & 1 == 1 {
            b = k * &odd + &even;
            a = odd;
        } else {
            a = even;
            b = odd;
        }
    }
    (a, b)
}

/// `F(k, n)` from the closed form `(α^n - β^n) / (α - β)` in `f64`.
///
/// `α, β = (k ± sqrt(k² + 4)) / 2`. Panics unless `k > 0`.
pub fn binet_fib_float(k: f64, n: u32) -> f64 {
    assert!(k > 0.0, "binet_fib_float requires k > 0, got {k}");
    let root = (k * k + 4.0).sqrt();
    let alpha = (k + root) / 2.0;
    // k - root cancels badly for large k; αβ = -1 gives β exactly
    let beta = -1.0 / alpha;
    (alpha.powi(n as i32) - beta.powi(n as i32)) / root
}
