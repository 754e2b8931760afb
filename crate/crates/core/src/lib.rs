//! Exact-arithmetic engine for canonical forms of convex polytopes.
//!
//! The crate computes, over arbitrary-precision rationals:
//!
//! * the canonical form `Ω(P;x)` of a polytope (the rational function equal
//!   to `d!·vol(P−x)°` for interior `x`), its adjoint polynomial and the
//!   adjoint degree drop,
//! * the reduced canonical form `Ω₀` and the higher valuations `Ω_s`
//!   obtained from the homogenized canonical form,
//! * executable verifiers for the identities these objects satisfy
//!   (valuation additivity, drop laws, the edge decomposition of `Ω₀`,
//!   the simplex quadratic-form identity, orthoscheme closed forms, ...).
//!
//! Everything outside the explicitly float-tagged verifier fallbacks is
//! exact: coordinates, linear forms and polynomial coefficients are
//! `num::BigRational`, and equalities asserted by the verifiers are
//! structural equalities of canonical forms.

pub mod error;
pub mod rational;
pub mod linalg;
pub mod poly;
pub mod linform;
pub mod ratfn;
pub mod series;
pub mod polytope;
pub mod canonical;
pub mod theorems;
pub mod io;

pub use error::Error;
pub use rational::Rat;
