//! Exact coefficient arithmetic.
//!
//! Two coefficient rings are supported: arbitrary-precision integers (when `k`
//! is fixed to an integer) and dense univariate integer polynomials in the
//! indeterminate `k` (when `k` is kept symbolic). [`Scalar`] is the runtime
//! union of the two; combining scalars of different modes is rejected.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense polynomial in `k` with integer coefficients, ascending by degree.
///
/// The coefficient list never ends in a zero; the zero polynomial is the
/// empty list.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    /// The indeterminate `k`.
    pub fn k() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    pub fn monomial(c: impl Into<BigInt>, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree];
        coeffs.push(c.into());
        Self::from_coeffs(coeffs)
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Horner evaluation at an integer point.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    fn zip_with(&self, other: &Poly, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> Poly {
        let zero = BigInt::zero();
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|d| {
                f(
                    self.coeffs.get(d).unwrap_or(&zero),
                    other.coeffs.get(d).unwrap_or(&zero),
                )
            })
            .collect();
        Poly::from_coeffs(coeffs)
    }

    fn convolve(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }
}

impl From<BigInt> for Poly {
    fn from(c: BigInt) -> Self {
        Poly::constant(c)
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.convolve(rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($ty:ty, $tr:ident, $method:ident) => {
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                (&self).$method(rhs)
            }
        }
        impl $tr<$ty> for &$ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                self.$method(&rhs)
            }
        }
    };
}
pub(crate) use forward_owned_binop;

forward_owned_binop!(Poly, Add, add);
forward_owned_binop!(Poly, Sub, sub);
forward_owned_binop!(Poly, Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

/// Renders descending by degree, e.g. `k^3 + 2*k`, `-k^2 + 1`, `0`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            match deg {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    f.write_str("k")?;
                    if deg > 1 {
                        write!(f, "^{deg}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Which coefficient ring a [`Scalar`] lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ScalarMode {
    Int,
    Sym,
}

impl fmt::Display for ScalarMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ScalarMode::Int => "integer",
            ScalarMode::Sym => "symbolic",
        })
    }
}

/// A coefficient: an integer (fixed-k mode) or a polynomial in `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Int(BigInt),
    Sym(Poly),
}

impl Scalar {
    pub fn zero(mode: ScalarMode) -> Self {
        Self::from_i64(mode, 0)
    }

    pub fn one(mode: ScalarMode) -> Self {
        Self::from_i64(mode, 1)
    }

    pub fn from_i64(mode: ScalarMode, v: i64) -> Self {
        match mode {
            ScalarMode::Int => Scalar::Int(BigInt::from(v)),
            ScalarMode::Sym => Scalar::Sym(Poly::constant(v)),
        }
    }

    pub fn mode(&self) -> ScalarMode {
        match self {
            Scalar::Int(_) => ScalarMode::Int,
            Scalar::Sym(_) => ScalarMode::Sym,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Int(v) => v.is_zero(),
            Scalar::Sym(p) => p.is_zero(),
        }
    }

    pub fn as_int(&self) -> Option<&BigInt> {
        match self {
            Scalar::Int(v) => Some(v),
            Scalar::Sym(_) => None,
        }
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        match self {
            Scalar::Sym(p) => Some(p),
            Scalar::Int(_) => None,
        }
    }

    /// Substitutes `k = x` in a symbolic scalar; integer scalars are returned unchanged.
    pub fn eval_at(&self, x: &BigInt) -> Scalar {
        match self {
            Scalar::Int(v) => Scalar::Int(v.clone()),
            Scalar::Sym(p) => Scalar::Int(p.eval(x)),
        }
    }

    pub fn try_add(&self, rhs: &Scalar) -> Result<Scalar> {
        match (self, rhs) {
            (Scalar::Int(a), Scalar::Int(b)) => Ok(Scalar::Int(a + b)),
            (Scalar::Sym(a), Scalar::Sym(b)) => Ok(Scalar::Sym(a + b)),
            _ => Err(self.mismatch(rhs)),
        }
    }

    pub fn try_sub(&self, rhs: &Scalar) -> Result<Scalar> {
        match (self, rhs) {
            (Scalar::Int(a), Scalar::Int(b)) => Ok(Scalar::Int(a - b)),
            (Scalar::Sym(a), Scalar::Sym(b)) => Ok(Scalar::Sym(a - b)),
            _ => Err(self.mismatch(rhs)),
        }
    }

    pub fn try_mul(&self, rhs: &Scalar) -> Result<Scalar> {
        match (self, rhs) {
            (Scalar::Int(a), Scalar::Int(b)) => Ok(Scalar::Int(a * b)),
            (Scalar::Sym(a), Scalar::Sym(b)) => Ok(Scalar::Sym(a * b)),
            _ => Err(self.mismatch(rhs)),
        }
    }

    /// Multiplies by a small integer constant; never changes mode.
    pub fn scale(&self, c: i64) -> Scalar {
        match self {
            Scalar::Int(v) => Scalar::Int(v * c),
            Scalar::Sym(p) => Scalar::Sym(p * &Poly::constant(c)),
        }
    }

    fn mismatch(&self, rhs: &Scalar) -> Error {
        Error::ModeMismatch {
            left: self.mode(),
            right: rhs.mode(),
        }
    }
}

// The operator forms panic on mixed modes; use the `try_*` methods when the
// operands come from different sources.
impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Int(v) => Scalar::Int(-v),
            Scalar::Sym(p) => Scalar::Sym(-p),
        }
    }
}

forward_owned_binop!(Scalar, Add, add);
forward_owned_binop!(Scalar, Sub, sub);
forward_owned_binop!(Scalar, Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Int(v) => write!(f, "{v}"),
            Scalar::Sym(p) => write!(f, "{p}"),
        }
    }
}
