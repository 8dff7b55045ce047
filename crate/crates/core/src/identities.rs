//! Registry of bicomplex k-Fibonacci quaternion identities and an exact
//! verifier for them.
//!
//! Each identity builds its left- and right-hand sides exactly as the formula
//! is printed, including terms suspected to be misprints, so the verifier can
//! report the precise discrepancy where a printed formula does not hold.
//! Identities with a `1/k` factor are checked with both sides multiplied by `k`.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use crate::bicomplex::{Bicomplex, Conjugation};
use crate::error::{Error, Result};
use crate::kfib::{KContext, KMode};
use crate::quaternion::{qf, ql};
use crate::ring::{Poly, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdentityId {
    /// Bicomplex k-Fibonacci number product with the printed sign of the real part.
    Sec2Mul,
    ConjIProd,
    ConjJProd,
    ConjIjProd,
    Recurrence,
    Square,
    SqSum,
    SqDiff,
    AltCombA,
    AltCombB,
    LucasSum,
    LucasDiff,
    Honsberger,
    Docagne,
    SumAll,
    SumOdd,
    SumEven,
    Cassini,
    Catalan,
}

/// A parameter axis of an identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    N,
    M,
    R,
}

impl Axis {
    pub fn symbol(self) -> char {
        match self {
            Axis::N => 'n',
            Axis::M => 'm',
            Axis::R => 'r',
        }
    }
}

impl IdentityId {
    /// Every identity, in equation order.
    pub const ALL: [IdentityId; 19] = [
        IdentityId::Sec2Mul,
        IdentityId::ConjIProd,
        IdentityId::ConjJProd,
        IdentityId::ConjIjProd,
        IdentityId::Recurrence,
        IdentityId::Square,
        IdentityId::SqSum,
        IdentityId::SqDiff,
        IdentityId::AltCombA,
        IdentityId::AltCombB,
        IdentityId::LucasSum,
        IdentityId::LucasDiff,
        IdentityId::Honsberger,
        IdentityId::Docagne,
        IdentityId::SumAll,
        IdentityId::SumOdd,
        IdentityId::SumEven,
        IdentityId::Cassini,
        IdentityId::Catalan,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::Sec2Mul => "SEC2_MUL",
            IdentityId::ConjIProd => "CONJ_I_PROD",
            IdentityId::ConjJProd => "CONJ_J_PROD",
            IdentityId::ConjIjProd => "CONJ_IJ_PROD",
            IdentityId::Recurrence => "RECURRENCE",
            IdentityId::Square => "SQUARE",
            IdentityId::SqSum => "SQ_SUM",
            IdentityId::SqDiff => "SQ_DIFF",
            IdentityId::AltCombA => "ALT_COMB_A",
            IdentityId::AltCombB => "ALT_COMB_B",
            IdentityId::LucasSum => "LUCAS_SUM",
            IdentityId::LucasDiff => "LUCAS_DIFF",
            IdentityId::Honsberger => "HONSBERGER",
            IdentityId::Docagne => "DOCAGNE",
            IdentityId::SumAll => "SUM_ALL",
            IdentityId::SumOdd => "SUM_ODD",
            IdentityId::SumEven => "SUM_EVEN",
            IdentityId::Cassini => "CASSINI",
            IdentityId::Catalan => "CATALAN",
        }
    }

    /// Command-line spelling, e.g. `conj-i-prod`.
    pub fn slug(self) -> String {
        self.name().to_ascii_lowercase().replace('_', "-")
    }

    /// Equation label the identity is registered under.
    pub fn equation(self) -> &'static str {
        match self {
            IdentityId::Sec2Mul => "2.4",
            IdentityId::ConjIProd => "3.10",
            IdentityId::ConjJProd => "3.11",
            IdentityId::ConjIjProd => "3.12",
            IdentityId::Recurrence => "3.16",
            IdentityId::Square => "3.17",
            IdentityId::SqSum => "3.18",
            IdentityId::SqDiff => "3.19",
            IdentityId::AltCombA => "3.20",
            IdentityId::AltCombB => "3.21",
            IdentityId::LucasSum => "3.22",
            IdentityId::LucasDiff => "3.23",
            IdentityId::Honsberger => "3.24",
            IdentityId::Docagne => "3.25",
            IdentityId::SumAll => "3.26",
            IdentityId::SumOdd => "3.27",
            IdentityId::SumEven => "3.28",
            IdentityId::Cassini => "3.30",
            IdentityId::Catalan => "3.31",
        }
    }

    pub fn axes(self) -> &'static [Axis] {
        match self {
            IdentityId::Sec2Mul | IdentityId::Honsberger | IdentityId::Docagne => {
                &[Axis::N, Axis::M]
            }
            IdentityId::Catalan => &[Axis::N, Axis::R],
            _ => &[Axis::N],
        }
    }

    /// Lower bound on an axis, if the identity is only stated for part of the integers.
    pub fn min(self, axis: Axis) -> Option<i64> {
        use IdentityId::*;
        match (self, axis) {
            (SumAll | SumOdd | SumEven | Cassini | Catalan, Axis::N) => Some(1),
            (Catalan, Axis::R) => Some(0),
            (Honsberger | Docagne, Axis::N | Axis::M) => Some(0),
            _ => None,
        }
    }

    /// Sum identities carry a `1/k`; both sides are multiplied by `k` before comparing.
    pub fn uses_k_cleared_form(self) -> bool {
        matches!(
            self,
            IdentityId::SumAll | IdentityId::SumOdd | IdentityId::SumEven
        )
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    /// Accepts `CASSINI`, `cassini`, `conj-i-prod`, `conj_i_prod` or an
    /// equation label such as `3.30`.
    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_uppercase().replace('-', "_");
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name() == norm || id.equation() == s.trim())
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

/// One evaluation point. Axes an identity does not use are `None`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Params {
    pub n: i64,
    pub m: Option<i64>,
    pub r: Option<i64>,
}

impl Params {
    pub fn n(n: i64) -> Self {
        Self {
            n,
            m: None,
            r: None,
        }
    }

    pub fn nm(n: i64, m: i64) -> Self {
        Self {
            n,
            m: Some(m),
            r: None,
        }
    }

    pub fn nr(n: i64, r: i64) -> Self {
        Self {
            n,
            m: None,
            r: Some(r),
        }
    }

    pub fn get(&self, axis: Axis) -> Option<i64> {
        match axis {
            Axis::N => Some(self.n),
            Axis::M => self.m,
            Axis::R => self.r,
        }
    }

    fn validate(&self, id: IdentityId) -> Result<()> {
        let axes = id.axes();
        for axis in [Axis::M, Axis::R] {
            match (axes.contains(&axis), self.get(axis)) {
                (true, None) => {
                    return Err(Error::Arity {
                        id: id.name(),
                        reason: format!("missing parameter {}", axis.symbol()),
                    })
                }
                (false, Some(_)) => {
                    return Err(Error::Arity {
                        id: id.name(),
                        reason: format!("unexpected parameter {}", axis.symbol()),
                    })
                }
                _ => {}
            }
        }
        for &axis in axes {
            let value = self.get(axis).expect("checked above");
            if let Some(min) = id.min(axis) {
                if value < min {
                    return Err(Error::Domain {
                        id: id.name(),
                        axis: axis.symbol(),
                        value,
                        min,
                    });
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.n)?;
        if let Some(m) = self.m {
            write!(f, ", m={m}")?;
        }
        if let Some(r) = self.r {
            write!(f, ", r={r}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum GridShape {
    /// Full cartesian product of the ranges.
    #[default]
    Full,
    /// Only points with `m <= n`.
    MAtMostN,
}

/// Inclusive parameter ranges; unused axes are `None`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParamGrid {
    pub n: RangeInclusive<i64>,
    pub m: Option<RangeInclusive<i64>>,
    pub r: Option<RangeInclusive<i64>>,
    pub shape: GridShape,
}

impl ParamGrid {
    pub fn n(n: RangeInclusive<i64>) -> Self {
        Self {
            n,
            m: None,
            r: None,
            shape: GridShape::Full,
        }
    }

    pub fn with_m(mut self, m: RangeInclusive<i64>) -> Self {
        self.m = Some(m);
        self
    }

    pub fn with_r(mut self, r: RangeInclusive<i64>) -> Self {
        self.r = Some(r);
        self
    }

    pub fn with_shape(mut self, shape: GridShape) -> Self {
        self.shape = shape;
        self
    }

    fn range(&self, axis: Axis) -> Option<&RangeInclusive<i64>> {
        match axis {
            Axis::N => Some(&self.n),
            Axis::M => self.m.as_ref(),
            Axis::R => self.r.as_ref(),
        }
    }

    /// Checks that the grid supplies exactly the identity's axes and stays
    /// inside its domain.
    pub fn validate(&self, id: IdentityId) -> Result<()> {
        let axes = id.axes();
        for axis in [Axis::N, Axis::M, Axis::R] {
            let range = self.range(axis);
            match (axes.contains(&axis), range) {
                (true, None) => {
                    return Err(Error::Arity {
                        id: id.name(),
                        reason: format!("grid is missing a range for {}", axis.symbol()),
                    })
                }
                (false, Some(_)) => {
                    return Err(Error::Arity {
                        id: id.name(),
                        reason: format!("grid has a range for unused axis {}", axis.symbol()),
                    })
                }
                _ => {}
            }
            if let (Some(range), Some(min)) = (range, id.min(axis)) {
                if !range.is_empty() && *range.start() < min {
                    return Err(Error::Domain {
                        id: id.name(),
                        axis: axis.symbol(),
                        value: *range.start(),
                        min,
                    });
                }
            }
        }
        if self.shape == GridShape::MAtMostN && self.m.is_none() {
            return Err(Error::Arity {
                id: id.name(),
                reason: "m <= n shape needs an m range".into(),
            });
        }
        Ok(())
    }

    /// Grid points in lexicographic `(n, m, r)` order.
    pub fn points(&self) -> Vec<Params> {
        let m_vals: Vec<Option<i64>> = match &self.m {
            Some(r) => r.clone().map(Some).collect(),
            None => vec![None],
        };
        let r_vals: Vec<Option<i64>> = match &self.r {
            Some(r) => r.clone().map(Some).collect(),
            None => vec![None],
        };
        let mut out = Vec::new();
        for n in self.n.clone() {
            for &m in &m_vals {
                if self.shape == GridShape::MAtMostN && m.is_some_and(|m| m > n) {
                    continue;
                }
                for &r in &r_vals {
                    out.push(Params { n, m, r });
                }
            }
        }
        out
    }
}

fn fmt_range(r: &RangeInclusive<i64>) -> String {
    format!("{}..{}", r.start(), r.end())
}

impl fmt::Display for ParamGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", fmt_range(&self.n))?;
        if let Some(m) = &self.m {
            write!(f, ", m={}", fmt_range(m))?;
        }
        if let Some(r) = &self.r {
            write!(f, ", r={}", fmt_range(r))?;
        }
        if self.shape == GridShape::MAtMostN {
            f.write_str(", m<=n")?;
        }
        Ok(())
    }
}

/// Registry default grid for an identity.
pub fn default_grid(id: IdentityId) -> ParamGrid {
    use IdentityId::*;
    match id {
        Sec2Mul => ParamGrid::n(0..=5).with_m(0..=5),
        ConjIProd | ConjJProd | ConjIjProd => ParamGrid::n(0..=25),
        Recurrence => ParamGrid::n(-10..=30),
        Square | SqSum | AltCombA | AltCombB => ParamGrid::n(0..=25),
        SqDiff | LucasSum | LucasDiff => ParamGrid::n(1..=25),
        Honsberger => ParamGrid::n(0..=12).with_m(0..=12),
        Docagne => ParamGrid::n(0..=15)
            .with_m(0..=15)
            .with_shape(GridShape::MAtMostN),
        SumAll | SumOdd | SumEven => ParamGrid::n(1..=25),
        Cassini => ParamGrid::n(1..=30),
        Catalan => ParamGrid::n(1..=20).with_r(0..=5),
    }
}

fn sign(exp: i64) -> i64 {
    if exp.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Sides of identities built in one context.
struct Builder<'a> {
    ctx: &'a KContext,
}

impl Builder<'_> {
    fn f(&self, n: i64) -> Scalar {
        self.ctx.fib(n)
    }

    fn l(&self, n: i64) -> Scalar {
        self.ctx.lucas(n)
    }

    fn q(&self, n: i64) -> Bicomplex {
        qf(self.ctx, n).into_value()
    }

    fn k(&self) -> &Scalar {
        self.ctx.k()
    }

    fn c(&self, v: i64) -> Scalar {
        self.ctx.constant(v)
    }

    fn bc(&self, w: Scalar, x: Scalar, y: Scalar, z: Scalar) -> Bicomplex {
        Bicomplex::new(w, x, y, z).expect("one context yields one scalar mode")
    }

    fn unit(&self, index: usize) -> Bicomplex {
        Bicomplex::basis(self.ctx.scalar_mode(), index)
    }

    /// `2(k² + 2) j + (k³ + 2k) ij`
    fn cassini_bracket(&self) -> Bicomplex {
        let zero = self.c(0);
        self.bc(
            zero.clone(),
            zero,
            self.ctx.poly(&Poly::from_i64s(&[4, 0, 2])),
            self.ctx.poly(&Poly::from_i64s(&[0, 2, 0, 1])),
        )
    }

    fn sides(&self, id: IdentityId, p: &Params) -> (Bicomplex, Bicomplex) {
        use IdentityId::*;
        let n = p.n;
        let f = |i: i64| self.f(i);
        let k = self.k();
        match id {
            Sec2Mul => {
                let m = p.m.expect("validated");
                let lhs = self.q(n) * self.q(m);
                let fnm = |a: i64, b: i64| f(n + a) * f(m + b);
                let rhs = self.bc(
                    fnm(0, 0) - fnm(1, 1) - fnm(2, 2) - fnm(3, 3),
                    fnm(0, 1) + fnm(1, 0) - fnm(2, 3) - fnm(3, 2),
                    fnm(0, 2) + fnm(2, 0) - fnm(1, 3) - fnm(3, 1),
                    fnm(0, 3) + fnm(3, 0) + fnm(1, 2) + fnm(2, 1),
                );
                (lhs, rhs)
            }
            ConjIProd => {
                let q = self.q(n);
                let lhs = &q * &q.conj(Conjugation::I);
                let rhs = self.bc(
                    f(2 * n + 1) - f(2 * n + 5),
                    self.c(0),
                    f(2 * n + 3).scale(2),
                    self.c(0),
                );
                (lhs, rhs)
            }
            ConjJProd => {
                let q = self.q(n);
                let lhs = &q * &q.conj(Conjugation::J);
                let sq = |i: i64| f(n + i) * f(n + i);
                let rhs = self.bc(
                    sq(0) - sq(1) + sq(2) - sq(3),
                    ((f(n) * f(n + 1)).scale(2) + k * &f(2 * n + 3)).scale(2),
                    self.c(0),
                    self.c(0),
                );
                (lhs, rhs)
            }
            ConjIjProd => {
                let q = self.q(n);
                let lhs = &q * &q.conj(Conjugation::IJ);
                let rhs = self.bc(
                    f(2 * n + 1) + f(2 * n + 5),
                    self.c(0),
                    self.c(0),
                    k.scale(2 * sign(n + 1)),
                );
                (lhs, rhs)
            }
            Recurrence => (self.q(n) + k * &self.q(n + 1), self.q(n + 2)),
            Square => {
                let q = self.q(n);
                let lhs = &q * &q;
                let ff = |a: i64, b: i64| f(n + a) * f(n + b);
                let rhs = self.bc(
                    ff(0, 0) - ff(1, 1) - ff(2, 2) - ff(3, 3),
                    (ff(0, 1) - ff(2, 3)).scale(2),
                    (ff(0, 2) - ff(1, 3)).scale(2),
                    (ff(0, 3) + ff(1, 2)).scale(2),
                );
                (lhs, rhs)
            }
            SqSum => {
                let (a, b) = (self.q(n), self.q(n + 1));
                let lhs = &a * &a + &b * &b;
                let rhs = self.q(2 * n + 1)
                    + self.bc(
                        k * &f(2 * n + 6) - f(2 * n + 3),
                        f(2 * n + 2) - f(2 * n + 6).scale(2),
                        f(2 * n + 3) - f(2 * n + 5).scale(2),
                        f(2 * n + 4).scale(3),
                    );
                (lhs, rhs)
            }
            SqDiff => {
                let (a, b) = (self.q(n + 1), self.q(n - 1));
                let lhs = &a * &a - &b * &b;
                let bracket = self.q(2 * n)
                    + self.bc(
                        -f(2 * n + 2) + k * &f(2 * n + 5),
                        f(2 * n + 1) - f(2 * n + 5).scale(2),
                        -f(2 * n + 2) - (k * &f(2 * n + 3)).scale(2),
                        f(2 * n + 3).scale(3),
                    );
                (lhs, k * &bracket)
            }
            AltCombA => {
                let lhs = self.q(n) - self.unit(1) * self.q(n + 1) + self.unit(2) * self.q(n + 2)
                    - self.unit(3) * self.q(n + 3);
                let rhs = self.bc(
                    f(n) + f(n + 2) - f(n + 4) - f(n + 6),
                    self.c(0),
                    self.l(n + 3).scale(2),
                    self.c(0),
                );
                (lhs, rhs)
            }
            AltCombB => {
                let lhs = self.q(n)
                    - self.unit(1) * self.q(n + 1)
                    - self.unit(2) * self.q(n + 2)
                    - self.unit(3) * self.q(n + 3);
                (lhs, self.alt_comb_b_rhs(n))
            }
            LucasSum => (self.q(n + 1) + self.q(n - 1), ql(self.ctx, n).into_value()),
            LucasDiff => (self.q(n + 2) - self.q(n - 2), k * ql(self.ctx, n).value()),
            Honsberger => {
                let m = p.m.expect("validated");
                let s = n + m;
                let lhs = self.q(n) * self.q(m) + self.q(n + 1) * self.q(m + 1);
                let rhs = self.q(s + 1)
                    + self.bc(
                        -f(s + 3) + k * &f(s + 6),
                        f(s + 2) - f(s + 6).scale(2),
                        f(s + 3) - f(s + 5).scale(2),
                        f(s + 4).scale(3),
                    );
                (lhs, rhs)
            }
            Docagne => {
                let m = p.m.expect("validated");
                let lhs = self.q(n) * self.q(m + 1) - self.q(n + 1) * self.q(m);
                let coeff = f(n - m).scale(sign(m));
                (lhs, &coeff * &self.cassini_bracket())
            }
            SumAll => {
                let sum = (1..=n).fold(Bicomplex::zero(self.ctx.scalar_mode()), |acc, s| {
                    acc + self.q(s)
                });
                (k * &sum, self.q(n + 1) + self.q(n) - self.q(1) - self.q(0))
            }
            SumOdd => {
                let sum = (1..=n).fold(Bicomplex::zero(self.ctx.scalar_mode()), |acc, s| {
                    acc + self.q(2 * s - 1)
                });
                (k * &sum, self.q(2 * n) - self.q(0))
            }
            SumEven => {
                let sum = (1..=n).fold(Bicomplex::zero(self.ctx.scalar_mode()), |acc, s| {
                    acc + self.q(2 * s)
                });
                (k * &sum, self.q(2 * n + 1) - self.q(1))
            }
            Cassini => {
                let q = self.q(n);
                let lhs = self.q(n - 1) * self.q(n + 1) - &q * &q;
                (lhs, self.cassini_bracket().scale_int(sign(n)))
            }
            Catalan => {
                let t = n + p.r.expect("validated");
                let q = self.q(t);
                let lhs = self.q(t - 1) * self.q(t + 1) - &q * &q;
                (lhs, self.cassini_bracket().scale_int(sign(t)))
            }
        }
    }

    /// First printed form of the ALT_COMB_B right-hand side.
    fn alt_comb_b_rhs(&self, n: i64) -> Bicomplex {
        let f = |i: i64| self.f(n + i);
        self.bc(
            f(0) + f(2) + f(4) - f(6),
            f(5).scale(2),
            f(4).scale(2),
            f(3).scale(-2),
        )
    }

    /// Second printed form, `L(n+1) - k F(n+5) + 2i F(n+5) + 2j F(n+4) - 2ij F(n+3)`.
    fn alt_comb_b_rhs_lucas(&self, n: i64) -> Bicomplex {
        let f = |i: i64| self.f(n + i);
        self.bc(
            self.l(n + 1) - self.k() * &f(5),
            f(5).scale(2),
            f(4).scale(2),
            f(3).scale(-2),
        )
    }
}

/// Left- and right-hand sides of `id` at `params`.
pub fn build_sides(
    id: IdentityId,
    ctx: &KContext,
    params: &Params,
) -> Result<(Bicomplex, Bicomplex)> {
    params.validate(id)?;
    Ok(Builder { ctx }.sides(id, params))
}

/// `lhs - rhs`; zero exactly when the identity holds at `params`.
pub fn discrepancy(id: IdentityId, ctx: &KContext, params: &Params) -> Result<Bicomplex> {
    let (lhs, rhs) = build_sides(id, ctx, params)?;
    Ok(lhs - rhs)
}

/// Both printed right-hand sides of ALT_COMB_B; they should agree.
pub fn alt_comb_b_forms(ctx: &KContext, n: i64) -> (Bicomplex, Bicomplex) {
    let b = Builder { ctx };
    (b.alt_comb_b_rhs(n), b.alt_comb_b_rhs_lucas(n))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub params: Params,
    pub lhs: Bicomplex,
    pub rhs: Bicomplex,
    pub discrepancy: Bicomplex,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub id: IdentityId,
    pub mode: KMode,
    pub grid: ParamGrid,
    pub checked: usize,
    pub passed: usize,
    /// Present exactly when `passed < checked`.
    pub first_failure: Option<Failure>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.passed == self.checked
    }
}

/// Evaluates `id` at every grid point in lexicographic order.
pub fn verify(id: IdentityId, ctx: &KContext, grid: &ParamGrid) -> Result<VerificationReport> {
    grid.validate(id)?;
    let builder = Builder { ctx };
    let mut checked = 0;
    let mut passed = 0;
    let mut first_failure = None;
    for params in grid.points() {
        params.validate(id)?;
        let (lhs, rhs) = builder.sides(id, &params);
        checked += 1;
        if lhs == rhs {
            passed += 1;
        } else if first_failure.is_none() {
            let discrepancy = &lhs - &rhs;
            first_failure = Some(Failure {
                params,
                lhs,
                rhs,
                discrepancy,
            });
        }
    }
    Ok(VerificationReport {
        id,
        mode: ctx.mode().clone(),
        grid: grid.clone(),
        checked,
        passed,
        first_failure,
    })
}

/// Runs every registered identity on the grid chosen by `grid_for`, in equation order.
pub fn audit_with(
    ctx: &KContext,
    grid_for: impl Fn(IdentityId) -> ParamGrid,
) -> Result<Vec<VerificationReport>> {
    IdentityId::ALL
        .into_iter()
        .map(|id| verify(id, ctx, &grid_for(id)))
        .collect()
}

/// Runs every registered identity on its default grid.
pub fn audit(ctx: &KContext) -> Vec<VerificationReport> {
    audit_with(ctx, default_grid).expect("default grids are valid")
}
