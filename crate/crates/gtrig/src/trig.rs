//! Generalized trigonometric functions with parameter pair (p, q).
//!
//! For exponents 1 < p, q < infinity, the generalized arcsine is
//!
//! ```text
//!               x
//!              /        dt
//! arcsin (x) = |  --------------- ,    x in [0, 1],
//!    p,q       /  (1 - t^q)^(1/p)
//!             0
//! ```
//!
//! its value at 1 is half the generalized half-period pi_{p,q}, and
//! sin_{p,q} is the inverse map extended to all of R by reflection about
//! the quarter period, oddness, and 2*pi_{p,q} periodicity. The
//! generalized cosine is the derivative of the sine, which on the
//! principal branch equals (1 - sin^q)^(1/p); the extension makes
//! |cos|^p + |sin|^q = 1 hold everywhere.
//!
//! With (p, q) = (2, 2) all of these collapse to the circular functions
//! and pi. Each [`GenTrig`] instance computes its half-period once at
//! construction; after that every operation is a pure function and the
//! value may be shared freely across threads.

use thiserror::Error;

use crate::numerics::{self, Bracket, NumericsError, QuadSettings};

/// Arguments closer than this to a lattice point k * pi_{p,q} / 2 snap to
/// the exact lattice value, so fractional powers of the cosine never see a
/// spurious tiny negative.
const LATTICE_SNAP: f64 = 1e-14;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TrigError {
    #[error("exponents must satisfy 1 < p, q < inf; got p = {p}, q = {q}")]
    InvalidExponent { p: f64, q: f64 },

    #[error("argument {x} outside the domain [{lo}, {hi}]")]
    OutOfDomain { x: f64, lo: f64, hi: f64 },

    #[error(transparent)]
    Numerics(#[from] NumericsError),
}

/// A validated exponent pair (p, q) with its Hölder conjugates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamPair {
    p: f64,
    q: f64,
    p_star: f64,
    q_star: f64,
}

impl ParamPair {
    pub fn new(p: f64, q: f64) -> Result<Self, TrigError> {
        if !(p > 1.0) || !(q > 1.0) || !p.is_finite() || !q.is_finite() {
            return Err(TrigError::InvalidExponent { p, q });
        }
        Ok(Self {
            p,
            q,
            p_star: p / (p - 1.0),
            q_star: q / (q - 1.0),
        })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    /// Conjugate exponent p* = p/(p-1), so 1/p + 1/p* = 1.
    pub fn p_star(&self) -> f64 {
        self.p_star
    }

    /// Conjugate exponent q* = q/(q-1).
    pub fn q_star(&self) -> f64 {
        self.q_star
    }

    /// The dual pair (q*, p*) appearing in the duality relation.
    pub fn conjugate(&self) -> ParamPair {
        ParamPair {
            p: self.q_star,
            q: self.p_star,
            p_star: self.q_star / (self.q_star - 1.0),
            q_star: self.p_star / (self.p_star - 1.0),
        }
    }
}

/// Sine/cosine values on the principal quarter period.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrincipalValue {
    /// Angle in [0, pi_{p,q}/2].
    pub x: f64,
    /// sin_{p,q}(x), in [0, 1].
    pub sin: f64,
    /// cos_{p,q}(x), in [0, 1].
    pub cos: f64,
}

/// The generalized sine/cosine system for one exponent pair.
///
/// Construction integrates the defining singular integral once to obtain
/// the half-period; evaluation reduces arguments onto the principal
/// quarter period and inverts the arcsine there with bracketed root
/// finding.
#[derive(Debug, Clone)]
pub struct GenTrig {
    params: ParamPair,
    half_pi: f64,
    settings: QuadSettings,
}

struct Reduced {
    /// Angle folded into [0, half_pi].
    r: f64,
    sin_sign: f64,
    cos_sign: f64,
}

impl GenTrig {
    pub fn new(params: ParamPair) -> Result<Self, TrigError> {
        Self::with_settings(params, QuadSettings::default())
    }

    pub fn with_settings(params: ParamPair, settings: QuadSettings) -> Result<Self, TrigError> {
        let half_pi = arc_integral(&params, 1.0, &settings)?;
        Ok(Self {
            params,
            half_pi,
            settings,
        })
    }

    pub fn params(&self) -> &ParamPair {
        &self.params
    }

    /// The generalized half-period pi_{p,q} = 2 * arcsin_{p,q}(1).
    pub fn pi(&self) -> f64 {
        2.0 * self.half_pi
    }

    /// pi_{p,q} / 2, the length of the principal quarter period.
    pub fn half_pi(&self) -> f64 {
        self.half_pi
    }

    /// arcsin_{p,q}(x) for x in [0, 1]; strictly increasing, with
    /// arcsin(0) = 0 and arcsin(1) = pi_{p,q}/2.
    pub fn asin(&self, x: f64) -> Result<f64, TrigError> {
        if !(0.0..=1.0).contains(&x) {
            return Err(TrigError::OutOfDomain {
                x,
                lo: 0.0,
                hi: 1.0,
            });
        }
        if x == 0.0 {
            return Ok(0.0);
        }
        if x == 1.0 {
            return Ok(self.half_pi);
        }
        Ok(arc_integral(&self.params, x, &self.settings)?)
    }

    /// sin_{p,q}(x) for any real x.
    ///
    /// Panics only if the underlying kernels fail to converge, which cannot
    /// happen with the default settings.
    pub fn sin(&self, x: f64) -> f64 {
        self.sin_cos(x).0
    }

    /// cos_{p,q}(x) = d/dx sin_{p,q}(x) for any real x, evaluated as
    /// +/- (1 - sin^q)^(1/p) so the defining identity holds by construction.
    pub fn cos(&self, x: f64) -> f64 {
        self.sin_cos(x).1
    }

    /// Both values with a single inversion.
    pub fn sin_cos(&self, x: f64) -> (f64, f64) {
        let red = self.reduce(x);
        let (s, c) = self.principal_sin_cos(red.r);
        (red.sin_sign * s, red.cos_sign * c)
    }

    /// Principal-branch triple for x in [0, pi_{p,q}/2].
    pub fn principal(&self, x: f64) -> Result<PrincipalValue, TrigError> {
        if !(0.0..=self.half_pi).contains(&x) {
            return Err(TrigError::OutOfDomain {
                x,
                lo: 0.0,
                hi: self.half_pi,
            });
        }
        let red = self.reduce(x);
        let (sin, cos) = self.principal_sin_cos(red.r);
        Ok(PrincipalValue { x, sin, cos })
    }

    /// Fold x into [0, half_pi] recording the sign flips: first modulo the
    /// period 2*pi, then oddness, then reflection about the quarter period.
    fn reduce(&self, x: f64) -> Reduced {
        let period = 4.0 * self.half_pi;
        let mut r = x - period * (x / period).round();
        let mut sin_sign = 1.0;
        let mut cos_sign = 1.0;
        if r < 0.0 {
            sin_sign = -1.0;
            r = -r;
        }
        if r > self.half_pi {
            r = 2.0 * self.half_pi - r;
            cos_sign = -1.0;
        }
        if r.abs() <= LATTICE_SNAP {
            r = 0.0;
        } else if (r - self.half_pi).abs() <= LATTICE_SNAP {
            r = self.half_pi;
        }
        Reduced {
            r,
            sin_sign,
            cos_sign,
        }
    }

    /// Principal values for a reduced angle r in [0, half_pi].
    ///
    /// On the lower half of the quarter period the sine is recovered by
    /// inverting the arcsine integral in s. On the upper half the roles
    /// flip: there the root s sits within rounding of 1 and carries no
    /// usable relative information about the cosine, so the cosine is
    /// solved for directly from its own integral (well conditioned, since
    /// small cosines are fully representable) and the sine is derived from
    /// it. Both branches satisfy |c|^p + |s|^q = 1 by construction.
    fn principal_sin_cos(&self, r: f64) -> (f64, f64) {
        if r == 0.0 {
            return (0.0, 1.0);
        }
        if r == self.half_pi {
            return (1.0, 0.0);
        }
        if r <= 0.5 * self.half_pi {
            let s = self.invert_arc(r);
            (s, self.cos_from_sin(s))
        } else {
            let c = self.invert_complement(self.half_pi - r);
            (self.sin_from_cos(c), c)
        }
    }

    /// Root of arcsin_{p,q}(s) = r on [0, 1].
    fn invert_arc(&self, r: f64) -> f64 {
        // arcsin is strictly increasing, so [0, 1] always brackets; the
        // endpoint residuals are known without quadrature.
        let bracket = Bracket::new(0.0, 1.0, -r, self.half_pi - r)
            .expect("principal bracket is valid by construction");
        let f = |y: f64| {
            if y <= 0.0 {
                return -r;
            }
            if y >= 1.0 {
                return self.half_pi - r;
            }
            arc_integral(&self.params, y, &self.settings)
                .unwrap_or_else(|e| panic!("arcsine quadrature failed at {y}: {e}"))
                - r
        };
        numerics::find_root(f, &bracket, &self.settings)
            .unwrap_or_else(|e| panic!("arcsine inversion failed at r = {r}: {e}"))
    }

    /// Root of the cosine-side arc integral: the c in [0, 1] whose offset
    /// from the quarter period equals `delta`.
    fn invert_complement(&self, delta: f64) -> f64 {
        let bracket = Bracket::new(0.0, 1.0, -delta, self.half_pi - delta)
            .expect("complement bracket is valid by construction");
        let f = |c: f64| {
            if c <= 0.0 {
                return -delta;
            }
            if c >= 1.0 {
                return self.half_pi - delta;
            }
            complement_integral(&self.params, c, &self.settings)
                .unwrap_or_else(|e| panic!("cosine-side quadrature failed at {c}: {e}"))
                - delta
        };
        numerics::find_root(f, &bracket, &self.settings)
            .unwrap_or_else(|e| panic!("cosine-side inversion failed at delta = {delta}: {e}"))
    }

    fn cos_from_sin(&self, s: f64) -> f64 {
        if s <= 0.0 {
            return 1.0;
        }
        if s >= 1.0 {
            return 0.0;
        }
        // (1 - s^q)^(1/p) with the difference formed in log space; near
        // s = 1 a direct power would lose every significant digit.
        (-f64::exp_m1(self.params.q * s.ln())).powf(1.0 / self.params.p)
    }

    fn sin_from_cos(&self, c: f64) -> f64 {
        if c <= 0.0 {
            return 1.0;
        }
        if c >= 1.0 {
            return 0.0;
        }
        (-f64::exp_m1(self.params.p * c.ln())).powf(1.0 / self.params.q)
    }
}

/// The defining integral over [0, x].
///
/// The integrand (1 - t^q)^(-1/p) blows up at t = 1, so 1 - t^q is formed
/// from the node's distance to 1 via expm1/log1p; that keeps full accuracy
/// on the clustered nodes next to the upper endpoint even for x = 1.
fn arc_integral(params: &ParamPair, x: f64, settings: &QuadSettings) -> Result<f64, NumericsError> {
    let q = params.q;
    let neg_inv_p = -1.0 / params.p;
    let gap = 1.0 - x;
    numerics::integrate_endpoint_singular(
        |node| {
            let dist_to_one = (gap + node.dist_b).min(1.0);
            let radicand = -f64::exp_m1(q * f64::ln_1p(-dist_to_one));
            radicand.powf(neg_inv_p)
        },
        0.0,
        x,
        settings,
    )
}

/// Offset from the quarter period as an integral over the cosine value:
/// substituting u = (1 - t^q)^(1/p) into the arc integral gives
///
/// ```text
/// half_pi - arcsin(s) = (p/q) * int_0^c u^(p-2) (1 - u^p)^(1/q - 1) du,
/// c = (1 - s^q)^(1/p),
/// ```
///
/// which reaches the value c = 1 at exactly half_pi. For p < 2 the
/// integrand has an algebraic singularity at u = 0; it is evaluated from
/// the node offsets like the sine-side kernel.
fn complement_integral(
    params: &ParamPair,
    c: f64,
    settings: &QuadSettings,
) -> Result<f64, NumericsError> {
    let p = params.p;
    let scale = p / params.q;
    let u_exponent = p - 2.0;
    let radicand_exponent = 1.0 / params.q - 1.0;
    let gap = 1.0 - c;
    numerics::integrate_endpoint_singular(
        |node| {
            let u = node.dist_a;
            let dist_to_one = (gap + node.dist_b).min(1.0);
            let radicand = -f64::exp_m1(p * f64::ln_1p(-dist_to_one));
            scale * u.powf(u_exponent) * radicand.powf(radicand_exponent)
        },
        0.0,
        c,
        settings,
    )
}
