//! Exact arithmetic for bicomplex k-Fibonacci quaternions.
//!
//! * [`ring`]: integers and integer polynomials in `k`, unified as [`Scalar`].
//! * [`bicomplex`]: the commutative algebra on `{1, i, j, ij}`.
//! * [`kfib`]: k-Fibonacci / k-Lucas terms, fast doubling, floating Binet.
//! * [`quaternion`]: `QF(k, n)` and `QL(k, n)`.
//! * [`identities`]: identity registry, exact verifier and auditor.

pub mod bicomplex;
pub mod error;
pub mod identities;
pub mod kfib;
pub mod quaternion;
pub mod ring;

pub use bicomplex::{Bicomplex, Conjugation};
pub use error::{Error, Result};
pub use identities::{
    audit, audit_with, build_sides, default_grid, discrepancy, verify, Failure, GridShape,
    IdentityId, ParamGrid, Params, VerificationReport,
};
pub use kfib::{binet_fib_float, fib_pair_fastdouble, KContext, KMode, Sequence};
pub use quaternion::{binet_qf_float, qf, ql, BkfQuaternion};
pub use ring::{Poly, Scalar, ScalarMode};
