//! Exact symbolic differential algebra for the first Painlevé equation.
//!
//! The crate implements, over arbitrary-precision rationals:
//!
//! * multivariate Laurent polynomials and reduced rational functions in the
//!   variable universe `x, y, y', alpha, u, s` with the quadratic relation
//!   `s^2 = 4y^3 + u` (`expr`),
//! * exterior calculus on C^3 and C^3 x C_alpha (`exterior`),
//! * the Sigma-weight grading and the alpha-degeneration machinery linking
//!   `X_1` to `X_0` (`grading`),
//! * finite-dimensional exact searches: transport equations `X R = g`,
//!   Darboux polynomials, rational first integrals, Riccati rational
//!   solutions, Godbillon-Vey structure checks and asl2-sequence extension
//!   (`solvers`),
//! * certificate pipelines that replay the degeneration computations lemma
//!   by lemma and aggregate them into the invariance-groupoid verdict for
//!   the volume 2-form gamma (`certs`).
//!
//! Everything is pure and deterministic: values are immutable, no hashing
//! with randomized state, no floating point.

pub mod ansatz;
pub mod certs;
pub mod error;
pub mod exterior;
pub mod fields;
pub mod grading;
pub mod linalg;
pub mod parse;
pub mod poly;
pub mod rat;
pub mod ratexpr;
pub mod solvers;
pub mod var;

pub use ansatz::AnsatzSpec;
pub use certs::{CertificateReport, CheckItem, EvidenceKind, Status};
pub use error::Error;
pub use exterior::{KForm, MatForm, VectorField};
pub use grading::Weight;
pub use parse::{parse_expr, ParsedValue};
pub use poly::LaurentPoly;
pub use rat::Rat;
pub use ratexpr::RatExpr;
pub use solvers::{SolutionSet, SolveStatus};
pub use var::{ChartTag, Var};
