//! Closed-form identity evaluators for the generalized trigonometric
//! functions: the Möbius-type conjugacy between sn/cn space and the
//! degree-6 sine, double-angle and addition formulas, multiple-angle and
//! duality relations, and the f/g transfer maps between the (6/5, 2) and
//! (2, 6) families.
//!
//! Every evaluator is pure algebra on already-computed sine/cosine values,
//! so each one can be verified independently against the quadrature,
//! elliptic, and ODE oracles (see [`crate::verify`]). Evaluators that take
//! a (sin, cos) pair validate it against the defining identity before
//! trusting it.

use thiserror::Error;

use crate::trig::GenTrig;

/// A (sin, cos) input pair may violate its defining identity by at most
/// this much before an evaluator refuses to proceed.
pub const PAIR_CONSISTENCY_TOL: f64 = 1e-9;

/// k^2 = (2 - sqrt(3))/4, the squared modulus of the degree-6
/// representation sin_{2,6}(u) = phi_inv(cn(2 * 3^(1/4) u, k)).
pub fn modulus_sq_26() -> f64 {
    (2.0 - 3.0f64.sqrt()) / 4.0
}

/// 2 * 3^(1/4), the argument scaling of that representation.
pub fn argument_scale_26() -> f64 {
    2.0 * 3.0f64.powf(0.25)
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum IdentityError {
    #[error("{name} = {value} outside [{lo}, {hi}]")]
    OutOfDomain {
        name: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },

    #[error("(sin, cos) pair violates |cos|^{p} + |sin|^{q} = 1 by {residual:e}")]
    InconsistentPair { p: f64, q: f64, residual: f64 },
}

fn check_domain(name: &'static str, value: f64, lo: f64, hi: f64) -> Result<(), IdentityError> {
    if (lo..=hi).contains(&value) {
        Ok(())
    } else {
        Err(IdentityError::OutOfDomain {
            name,
            value,
            lo,
            hi,
        })
    }
}

fn check_pair(s: f64, c: f64, p: f64, q: f64) -> Result<(), IdentityError> {
    let residual = (pow_clamped(c, p) + pow_clamped(s, q) - 1.0).abs();
    if residual <= PAIR_CONSISTENCY_TOL {
        Ok(())
    } else {
        Err(IdentityError::InconsistentPair { p, q, residual })
    }
}

/// Fractional power with rounding-scale negatives clamped to zero: at a
/// quarter-period endpoint the cosine can round to -1e-16, and a fractional
/// exponent on a negative base is undefined.
fn pow_clamped(base: f64, exponent: f64) -> f64 {
    base.max(0.0).powf(exponent)
}

/// 1 - x^2 for x in [0, 1] with full relative accuracy: the factored form
/// never cancels, since 1 - x is exact for x >= 1/2.
fn one_minus_sq(x: f64) -> f64 {
    (1.0 - x) * (1.0 + x)
}

/// phi(x) = (1 - (sqrt(3)+1) x^2) / (1 + (sqrt(3)-1) x^2).
///
/// Strictly decreasing from phi(0) = 1 to phi(1) = -1; conjugates the
/// degree-6 sine values into cn values at the modulus
/// [`modulus_sq_26`].
pub fn phi(x: f64) -> Result<f64, IdentityError> {
    check_domain("x", x, 0.0, 1.0)?;
    let sqrt3 = 3.0f64.sqrt();
    let x2 = x * x;
    Ok((1.0 - (sqrt3 + 1.0) * x2) / (1.0 + (sqrt3 - 1.0) * x2))
}

/// Inverse of [`phi`]: phi_inv(y) = sqrt((1 - y) / ((sqrt(3)+1) + (sqrt(3)-1) y)).
pub fn phi_inv(y: f64) -> Result<f64, IdentityError> {
    check_domain("y", y, -1.0, 1.0)?;
    let sqrt3 = 3.0f64.sqrt();
    Ok(((1.0 - y) / ((sqrt3 + 1.0) + (sqrt3 - 1.0) * y)).sqrt())
}

/// Double-angle formula for the (2, 6) pair:
///
/// ```text
/// sin_{2,6}(2x) = 2 s c / sqrt(1 + 8 s^6),   s = sin_{2,6}(x), c = cos_{2,6}(x),
/// ```
///
/// valid for x in [0, pi_{2,6}/2].
pub fn double_angle_26(s: f64, c: f64) -> Result<f64, IdentityError> {
    check_pair(s, c, 2.0, 6.0)?;
    Ok(2.0 * s * c / (1.0 + 8.0 * s.powi(6)).sqrt())
}

/// Which of the two composed angles the addition formula should produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// Addition formula for the (2, 6) pair, expressed through [`phi`]:
/// with U = sin_{2,6}(u) and V = sin_{2,6}(v),
///
/// ```text
///                          phi(U) phi(V) -/+ sqrt((1-phi(U)^2)(1-phi(V)^2)(1-k^2(1-phi(U)^2))(1-k^2(1-phi(V)^2)))
/// sin_{2,6}(u +/- v) = phi_inv( ----------------------------------------------------------------------------- )
///                                              1 - k^2 (1-phi(U)^2)(1-phi(V)^2)
/// ```
///
/// The formula is a map on values; it is the caller's obligation that the
/// underlying angles satisfy u, v, u +/- v in [0, pi_{2,6}/2].
pub fn addition_26(u_val: f64, v_val: f64, sign: Sign) -> Result<f64, IdentityError> {
    check_domain("U", u_val, 0.0, 1.0)?;
    check_domain("V", v_val, 0.0, 1.0)?;
    let k_sq = modulus_sq_26();
    let pu = phi(u_val)?;
    let pv = phi(v_val)?;
    let su = 1.0 - pu * pu; // sn^2 of the scaled u-argument
    let sv = 1.0 - pv * pv;
    let cross = (su * sv * (1.0 - k_sq * su) * (1.0 - k_sq * sv)).max(0.0).sqrt();
    let num = match sign {
        Sign::Plus => pu * pv - cross,
        Sign::Minus => pu * pv + cross,
    };
    let den = 1.0 - k_sq * su * sv;
    // The ratio is a cn value; clamp away rounding-scale excursions past +/-1.
    let ratio = (num / den).clamp(-1.0, 1.0);
    phi_inv(ratio)
}

/// Multiple-angle relation connecting the (q*, q) and (2, q) families,
/// sine form: with s = sin_{q*,q}(x), c = cos_{q*,q}(x),
///
/// ```text
/// sin_{2,q}(2^(2/q) x) = 2^(2/q) s c^(q*-1),    x in [0, pi_{q*,q}/2].
/// ```
pub fn multiple_angle_s(q: f64, s: f64, c: f64) -> Result<f64, IdentityError> {
    let q_star = conjugate_exponent(q)?;
    check_pair(s, c, q_star, q)?;
    Ok(2.0f64.powf(2.0 / q) * s * pow_clamped(c, q_star - 1.0))
}

/// The three equal cosine-side expressions of the multiple-angle relation:
///
/// ```text
/// cos_{2,q}(2^(2/q) x) = c^q* - s^q = 1 - 2 s^q = 2 c^q* - 1.
/// ```
pub fn multiple_angle_c_forms(q: f64, s: f64, c: f64) -> Result<[f64; 3], IdentityError> {
    let q_star = conjugate_exponent(q)?;
    check_pair(s, c, q_star, q)?;
    let sq = pow_clamped(s, q);
    let cq = pow_clamped(c, q_star);
    Ok([cq - sq, 1.0 - 2.0 * sq, 2.0 * cq - 1.0])
}

/// Multiple-angle relation, cosine form. Returns the 1 - 2 s^q expression
/// after checking that all three algebraic forms agree.
pub fn multiple_angle_c(q: f64, s: f64, c: f64) -> Result<f64, IdentityError> {
    let forms = multiple_angle_c_forms(q, s, c)?;
    let spread = max3(
        (forms[0] - forms[1]).abs(),
        (forms[0] - forms[2]).abs(),
        (forms[1] - forms[2]).abs(),
    );
    if spread > PAIR_CONSISTENCY_TOL {
        return Err(IdentityError::InconsistentPair {
            p: conjugate_exponent(q)?,
            q,
            residual: spread,
        });
    }
    Ok(forms[1])
}

fn max3(a: f64, b: f64, c: f64) -> f64 {
    a.max(b).max(c)
}

fn conjugate_exponent(q: f64) -> Result<f64, IdentityError> {
    if !(q > 1.0) || !q.is_finite() {
        return Err(IdentityError::OutOfDomain {
            name: "q",
            value: q,
            lo: 1.0,
            hi: f64::INFINITY,
        });
    }
    Ok(q / (q - 1.0))
}

/// Right-hand side of the duality relation
///
/// ```text
/// sin_{p,q}(pi_{p,q}/2 * x) = cos_{q*,p*}^(q*-1)(pi_{q*,p*}/2 * (1 - x)),   x in [0, 2].
/// ```
///
/// `dual` must be the trig system of the conjugate pair (q*, p*); its first
/// exponent is the q* of the pair under test.
pub fn duality_rhs(dual: &GenTrig, x: f64) -> Result<f64, IdentityError> {
    check_domain("x", x, 0.0, 2.0)?;
    let exponent = dual.params().p() - 1.0;
    let c = dual.cos(dual.half_pi() * (1.0 - x));
    Ok(pow_clamped(c, exponent))
}

/// Double-angle formula for the (6/5, 6) pair: with s = sin_{6/5,6}(x),
/// c = cos_{6/5,6}(x) and A = 1 + 32 s^6 c^(6/5),
///
/// ```text
///                    2^(1/6) s c^(1/5) (3 + sqrt(A))^(1/2)
/// sin_{6/5,6}(2x) = ---------------------------------------,
///                        A^(1/4) (1 + sqrt(A))^(1/6)
/// ```
///
/// valid on the stated window x in [0, pi_{6/5,6}/4]; the expression is a
/// single continuous formula across the interior point pi_{6/5,6}/8 where
/// the derivation's case analysis switches branch.
pub fn theorem_1_1(s: f64, c: f64) -> Result<f64, IdentityError> {
    check_pair(s, c, 1.2, 6.0)?;
    let a = 1.0 + 32.0 * s.powi(6) * pow_clamped(c, 1.2);
    let sqrt_a = a.sqrt();
    Ok(2.0f64.powf(1.0 / 6.0) * s * pow_clamped(c, 0.2) * (3.0 + sqrt_a).sqrt()
        / (a.powf(0.25) * (1.0 + sqrt_a).powf(1.0 / 6.0)))
}

/// Double-angle formula for the (6/5, 2) pair: with s = sin_{6/5,2}(x),
/// c = cos_{6/5,2}(x),
///
/// ```text
///                           / 9 - 8 s^2 - 4 s^2 c^(2/5) \ 3
/// sin_{6/5,2}(2x) = sqrt(1 - | -------------------------- |  ),
///                           \ 9 - 8 s^2 + 8 s^2 c^(2/5) /
/// ```
///
/// valid for x in [0, pi_{6/5,2}/2].
pub fn theorem_1_2(s: f64, c: f64) -> Result<f64, IdentityError> {
    check_pair(s, c, 1.2, 2.0)?;
    let c25 = pow_clamped(c, 0.4);
    let s2 = s * s;
    let den = 9.0 - 8.0 * s2 + 8.0 * s2 * c25;
    let ratio = (9.0 - 8.0 * s2 - 4.0 * s2 * c25) / den;
    // 1 - ratio^3 with the leading difference formed exactly:
    // 1 - ratio = 12 s^2 c^(2/5) / den.
    let one_minus_ratio = 12.0 * s2 * c25 / den;
    Ok((one_minus_ratio * (1.0 + ratio + ratio * ratio)).max(0.0).sqrt())
}

/// Transfer map from g(x) = sin_{2,6}(2x/3) to f(2x) = sin_{6/5,2}(2x):
///
/// ```text
/// f(2x) = sqrt(1 - ((1 - g^2) / (1 + 2 g^2))^3).
/// ```
pub fn f_g_forward(gx: f64) -> Result<f64, IdentityError> {
    check_domain("g(x)", gx, 0.0, 1.0)?;
    let g2 = gx * gx;
    let ratio = one_minus_sq(gx) / (1.0 + 2.0 * g2);
    let one_minus_ratio = 3.0 * g2 / (1.0 + 2.0 * g2);
    Ok((one_minus_ratio * (1.0 + ratio + ratio * ratio))
        .sqrt()
        .min(1.0))
}

/// Inverse of [`f_g_forward`]:
///
/// ```text
/// g(x) = sqrt((1 - (1 - f(2x)^2)^(1/3)) / (1 + 2 (1 - f(2x)^2)^(1/3))).
/// ```
pub fn f_g_inverse(f2x: f64) -> Result<f64, IdentityError> {
    check_domain("f(2x)", f2x, 0.0, 1.0)?;
    // 1 - (1 - f^2)^(1/3): the log-space form avoids the cancellation for
    // small f, and the factored 1 - f^2 keeps relative accuracy near f = 1.
    let one_minus_fsq = one_minus_sq(f2x);
    let one_minus_r = -f64::exp_m1(one_minus_fsq.ln() / 3.0);
    Ok((one_minus_r / (3.0 - 2.0 * one_minus_r)).sqrt())
}

/// Direct expression of g(x) = sin_{2,6}(2x/3) in terms of
/// f(x) = sin_{6/5,2}(x):
///
/// ```text
/// g(x) = 2 f (1 - f^2)^(1/6) / sqrt(9 - 8 f^2).
/// ```
pub fn g_of_f(fx: f64) -> Result<f64, IdentityError> {
    check_domain("f(x)", fx, 0.0, 1.0)?;
    Ok(2.0 * fx * one_minus_sq(fx).powf(1.0 / 6.0) / (9.0 - 8.0 * fx * fx).sqrt())
}

/// Complement relation of the degree-6 sine: with V = sin_{2,6}(v),
///
/// ```text
/// sin_{2,6}(pi_{2,6}/2 - v) = sqrt((1 - V^2) / (1 + 2 V^2)),
/// ```
///
/// valid for v in [0, pi_{2,6}/2].
pub fn sin26_complement(v_val: f64) -> Result<f64, IdentityError> {
    check_domain("V", v_val, 0.0, 1.0)?;
    Ok((one_minus_sq(v_val) / (1.0 + 2.0 * v_val * v_val)).sqrt())
}
