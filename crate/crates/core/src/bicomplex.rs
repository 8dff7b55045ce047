//! The commutative bicomplex algebra over [`Scalar`] coefficients.
//!
//! Basis `{1, i, j, ij}` with `i² = j² = -1`, `ij = ji` and `(ij)² = 1`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ring::{forward_owned_binop, Scalar, ScalarMode};

/// The three sign-flip conjugations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Conjugation {
    /// Negates the `i` and `ij` parts.
    I,
    /// Negates the `j` and `ij` parts.
    J,
    /// Negates the `i` and `j` parts.
    IJ,
}

impl Conjugation {
    pub const ALL: [Conjugation; 3] = [Conjugation::I, Conjugation::J, Conjugation::IJ];
}

/// `w + x*i + y*j + z*ij`, all four components in one scalar mode.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bicomplex {
    w: Scalar,
    x: Scalar,
    y: Scalar,
    z: Scalar,
}

impl Bicomplex {
    pub fn new(w: Scalar, x: Scalar, y: Scalar, z: Scalar) -> Result<Self> {
        let mode = w.mode();
        for c in [&x, &y, &z] {
            if c.mode() != mode {
                return Err(Error::ModeMismatch {
                    left: mode,
                    right: c.mode(),
                });
            }
        }
        Ok(Self { w, x, y, z })
    }

    pub fn from_ints(mode: ScalarMode, c: [i64; 4]) -> Self {
        let [w, x, y, z] = c.map(|v| Scalar::from_i64(mode, v));
        Self { w, x, y, z }
    }

    /// Embeds a scalar as `s + 0i + 0j + 0ij`.
    pub fn from_scalar(s: Scalar) -> Self {
        let zero = Scalar::zero(s.mode());
        Self {
            w: s,
            x: zero.clone(),
            y: zero.clone(),
            z: zero,
        }
    }

    pub fn zero(mode: ScalarMode) -> Self {
        Self::from_ints(mode, [0; 4])
    }

    pub fn one(mode: ScalarMode) -> Self {
        Self::from_ints(mode, [1, 0, 0, 0])
    }

    pub fn unit_i(mode: ScalarMode) -> Self {
        Self::from_ints(mode, [0, 1, 0, 0])
    }

    pub fn unit_j(mode: ScalarMode) -> Self {
        Self::from_ints(mode, [0, 0, 1, 0])
    }

    pub fn unit_ij(mode: ScalarMode) -> Self {
        Self::from_ints(mode, [0, 0, 0, 1])
    }

    /// The basis element with the given index in `1, i, j, ij` order.
    pub fn basis(mode: ScalarMode, index: usize) -> Self {
        let mut c = [0; 4];
        c[index] = 1;
        Self::from_ints(mode, c)
    }

    pub fn mode(&self) -> ScalarMode {
        self.w.mode()
    }

    pub fn w(&self) -> &Scalar {
        &self.w
    }

    pub fn x(&self) -> &Scalar {
        &self.x
    }

    pub fn y(&self) -> &Scalar {
        &self.y
    }

    pub fn z(&self) -> &Scalar {
        &self.z
    }

    pub fn components(&self) -> [&Scalar; 4] {
        [&self.w, &self.x, &self.y, &self.z]
    }

    pub fn into_components(self) -> [Scalar; 4] {
        [self.w, self.x, self.y, self.z]
    }

    pub fn is_zero(&self) -> bool {
        self.components().iter().all(|c| c.is_zero())
    }

    fn check_mode(&self, rhs: &Bicomplex) -> Result<()> {
        if self.mode() == rhs.mode() {
            Ok(())
        } else {
            Err(Error::ModeMismatch {
                left: self.mode(),
                right: rhs.mode(),
            })
        }
    }

    pub fn try_add(&self, rhs: &Bicomplex) -> Result<Bicomplex> {
        self.check_mode(rhs)?;
        Ok(Bicomplex {
            w: &self.w + &rhs.w,
            x: &self.x + &rhs.x,
            y: &self.y + &rhs.y,
            z: &self.z + &rhs.z,
        })
    }

    pub fn try_sub(&self, rhs: &Bicomplex) -> Result<Bicomplex> {
        self.check_mode(rhs)?;
        Ok(Bicomplex {
            w: &self.w - &rhs.w,
            x: &self.x - &rhs.x,
            y: &self.y - &rhs.y,
            z: &self.z - &rhs.z,
        })
    }

    /// Product following the bicomplex multiplication table.
    pub fn try_mul(&self, rhs: &Bicomplex) -> Result<Bicomplex> {
        self.check_mode(rhs)?;
        let (a, b) = (self, rhs);
        Ok(Bicomplex {
            w: &a.w * &b.w - &a.x * &b.x - &a.y * &b.y + &a.z * &b.z,
            x: &a.w * &b.x + &a.x * &b.w - &a.y * &b.z - &a.z * &b.y,
            y: &a.w * &b.y + &a.y * &b.w - &a.x * &b.z - &a.z * &b.x,
            z: &a.w * &b.z + &a.z * &b.w + &a.x * &b.y + &a.y * &b.x,
        })
    }

    pub fn try_scale(&self, r: &Scalar) -> Result<Bicomplex> {
        if r.mode() != self.mode() {
            return Err(Error::ModeMismatch {
                left: r.mode(),
                right: self.mode(),
            });
        }
        Ok(Bicomplex {
            w: r * &self.w,
            x: r * &self.x,
            y: r * &self.y,
            z: r * &self.z,
        })
    }

    /// Multiplies every component by a small integer constant.
    pub fn scale_int(&self, c: i64) -> Bicomplex {
        Bicomplex {
            w: self.w.scale(c),
            x: self.x.scale(c),
            y: self.y.scale(c),
            z: self.z.scale(c),
        }
    }

    pub fn conj(&self, kind: Conjugation) -> Bicomplex {
        let (w, x, y, z) = (&self.w, &self.x, &self.y, &self.z);
        match kind {
            Conjugation::I => Bicomplex {
                w: w.clone(),
                x: -x,
                y: y.clone(),
                z: -z,
            },
            Conjugation::J => Bicomplex {
                w: w.clone(),
                x: x.clone(),
                y: -y,
                z: -z,
            },
            Conjugation::IJ => Bicomplex {
                w: w.clone(),
                x: -x,
                y: -y,
                z: z.clone(),
            },
        }
    }

    /// The exact product `q · q*` for the chosen conjugation.
    ///
    /// `I` leaves only the `1` and `j` parts, `J` only `1` and `i`, `IJ` only
    /// `1` and `ij`. No square root or modulus is taken.
    pub fn norm_form(&self, kind: Conjugation) -> Bicomplex {
        self * &self.conj(kind)
    }

    /// Substitutes `k = x` componentwise.
    pub fn eval_at(&self, x: &BigInt) -> Bicomplex {
        Bicomplex {
            w: self.w.eval_at(x),
            x: self.x.eval_at(x),
            y: self.y.eval_at(x),
            z: self.z.eval_at(x),
        }
    }
}

impl From<Scalar> for Bicomplex {
    fn from(s: Scalar) -> Self {
        Bicomplex::from_scalar(s)
    }
}

// Operators panic on mixed modes, like the scalar ones.
impl Add<&Bicomplex> for &Bicomplex {
    type Output = Bicomplex;
    fn add(self, rhs: &Bicomplex) -> Bicomplex {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub<&Bicomplex> for &Bicomplex {
    type Output = Bicomplex;
    fn sub(self, rhs: &Bicomplex) -> Bicomplex {
        self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul<&Bicomplex> for &Bicomplex {
    type Output = Bicomplex;
    fn mul(self, rhs: &Bicomplex) -> Bicomplex {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul<&Bicomplex> for &Scalar {
    type Output = Bicomplex;
    fn mul(self, rhs: &Bicomplex) -> Bicomplex {
        rhs.try_scale(self).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &Bicomplex {
    type Output = Bicomplex;
    fn neg(self) -> Bicomplex {
        Bicomplex {
            w: -&self.w,
            x: -&self.x,
            y: -&self.y,
            z: -&self.z,
        }
    }
}

forward_owned_binop!(Bicomplex, Add, add);
forward_owned_binop!(Bicomplex, Sub, sub);
forward_owned_binop!(Bicomplex, Mul, mul);

impl Neg for Bicomplex {
    type Output = Bicomplex;
    fn neg(self) -> Bicomplex {
        -&self
    }
}

/// Renders all four parts: `w + x*i + y*j + z*ij`.
///
/// Multi-term polynomial components are parenthesised; a single negative term
/// folds its sign into the separator.
impl fmt::Display for Bicomplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let render = |s: &Scalar| {
            let text = s.to_string();
            let compound = matches!(s, Scalar::Sym(p) if p.coeffs().iter().filter(|c| !num_traits::Zero::is_zero(*c)).count() > 1);
            (text, compound)
        };
        let (w, w_compound) = render(&self.w);
        if w_compound {
            write!(f, "({w})")?;
        } else {
            f.write_str(&w)?;
        }
        for (part, unit) in [(&self.x, "i"), (&self.y, "j"), (&self.z, "ij")] {
            let (text, compound) = render(part);
            if compound {
                write!(f, " + ({text})*{unit}")?;
            } else if let Some(rest) = text.strip_prefix('-') {
                write!(f, " - {rest}*{unit}")?;
            } else {
                write!(f, " + {text}*{unit}")?;
            }
        }
        Ok(())
    }
}
