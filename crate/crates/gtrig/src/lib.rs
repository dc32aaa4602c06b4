//! Generalized trigonometric functions and the identities they satisfy.
//!
//! For an exponent pair 1 < p, q < infinity this crate computes the
//! generalized sine sin_{p,q} (the inverse of x -> integral of
//! (1 - t^q)^(-1/p) over [0, x], extended to the real line), its derivative
//! cos_{p,q}, the generalized half-period pi_{p,q}, and the Jacobi elliptic
//! machinery (sn, cn, dn, K) underlying the degree-6 family. On top of the
//! function evaluators sit closed-form identities — double-angle and
//! addition formulas, multiple-angle and duality relations, and the
//! transfer maps between the (6/5, 2) and (2, 6) families — each of which
//! can be machine-verified against independent quadrature, elliptic, and
//! ODE oracles through [`verify`].
//!
//! The crate deliberately uses three independent computational routes:
//!
//! * tanh-sinh quadrature plus bracketed root finding defines the
//!   functions ([`numerics`], [`trig`]);
//! * the arithmetic-geometric mean gives the elliptic route to the same
//!   values ([`elliptic`]);
//! * a Runge-Kutta integration of the defining initial value problem
//!   provides a third, ODE-based route ([`ode`]).
//!
//! Agreement of the routes, sampled over each identity's stated domain, is
//! what [`verify`] reports.

pub mod elliptic;
pub mod identities;
pub mod numerics;
pub mod ode;
pub mod trig;
pub mod verify;

pub use elliptic::{EllipticError, EllipticTriple, Modulus};
pub use numerics::{Bracket, NumericsError, QuadNode, QuadSettings};
pub use ode::{IvpState, OdeError, Trajectory};
pub use trig::{GenTrig, ParamPair, PrincipalValue, TrigError};
pub use verify::{IdentityReport, Suite, VerifyOptions};

use thiserror::Error;

/// Any error the crate can produce, for callers that drive several
/// subsystems at once.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Numerics(#[from] NumericsError),

    #[error(transparent)]
    Trig(#[from] TrigError),

    #[error(transparent)]
    Elliptic(#[from] EllipticError),

    #[error(transparent)]
    Identity(#[from] identities::IdentityError),

    #[error(transparent)]
    Ode(#[from] OdeError),
}
