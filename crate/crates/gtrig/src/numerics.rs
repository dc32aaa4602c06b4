//! Foundation kernels: double-exponential quadrature for integrands with
//! endpoint singularities, bracketed root finding, and the
//! arithmetic-geometric mean iteration.
//!
//! Everything here is a pure function of its inputs; the kernels may be
//! called concurrently from any number of threads.

use std::f64::consts::FRAC_PI_2;

use thiserror::Error;

/// Errors produced by the numerical kernels.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumericsError {
    #[error("invalid integration interval: a = {a} must be strictly below b = {b}")]
    InvalidInterval { a: f64, b: f64 },

    #[error("quadrature used all {levels} refinement levels without meeting tolerance (best estimate {best}, last correction {err_est:e})")]
    QuadBudgetExhausted { levels: u32, best: f64, err_est: f64 },

    #[error("bracket [{lo}, {hi}] does not enclose a sign change: f(lo) = {f_lo}, f(hi) = {f_hi}")]
    NoSignChange { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },

    #[error("bracket endpoints out of order: lo = {lo}, hi = {hi}")]
    EmptyBracket { lo: f64, hi: f64 },

    #[error("root finder exceeded {max_iter} iterations (best x = {best})")]
    RootIterationsExhausted { max_iter: u32, best: f64 },

    #[error("agm requires positive finite inputs, got ({a0}, {b0})")]
    AgmDomain { a0: f64, b0: f64 },

    #[error("invalid settings: {0}")]
    InvalidSettings(&'static str),
}

/// Tolerances and budgets shared by the quadrature and root-finding kernels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadSettings {
    /// Absolute error target.
    pub abs_tol: f64,
    /// Relative error target.
    pub rel_tol: f64,
    /// Maximum number of step-halving refinements in the quadrature.
    pub max_levels: u32,
}

impl Default for QuadSettings {
    /// Defaults leave headroom above the 1e-10 identity tolerances used by
    /// the verification suites.
    fn default() -> Self {
        Self {
            abs_tol: 1e-13,
            rel_tol: 1e-13,
            max_levels: 12,
        }
    }
}

impl QuadSettings {
    fn validate(&self) -> Result<(), NumericsError> {
        if !(self.abs_tol > 0.0) || !self.abs_tol.is_finite() {
            return Err(NumericsError::InvalidSettings("abs_tol must be positive"));
        }
        if !(self.rel_tol > 0.0) || !self.rel_tol.is_finite() {
            return Err(NumericsError::InvalidSettings("rel_tol must be positive"));
        }
        if self.max_levels < 1 {
            return Err(NumericsError::InvalidSettings("max_levels must be at least 1"));
        }
        Ok(())
    }
}

/// A quadrature abscissa together with its offsets from the interval ends.
///
/// `dist_a` and `dist_b` are computed from the raw double-exponential
/// variables, not by subtracting `x` from the endpoints, so they stay exact
/// (down to ~1e-300) even when `x` itself has rounded onto an endpoint.
/// Integrands that blow up at an endpoint should be written in terms of the
/// offset to keep full precision; smooth integrands can just read `x`.
#[derive(Debug, Clone, Copy)]
pub struct QuadNode {
    /// Abscissa in `[a, b]`.
    pub x: f64,
    /// Distance `x - a`.
    pub dist_a: f64,
    /// Distance `b - x`.
    pub dist_b: f64,
}

// Beyond |t| = 6 every admissible integrand contributes below 1e-250.
const T_MAX: f64 = 6.0;

/// Integrate `f` over `[a, b]` with tanh-sinh (double-exponential)
/// quadrature.
///
/// The substitution x = tanh((pi/2) sinh t) clusters nodes doubly
/// exponentially at the endpoints, so integrands with an algebraic endpoint
/// singularity (b-x)^(-alpha), alpha < 1, converge as fast as smooth ones.
/// Refinement halves the node spacing until two successive levels agree to
/// `max(abs_tol, rel_tol * |I|)`.
///
/// Non-finite integrand values are treated as zero; for admissible
/// integrands they can only occur on nodes of negligible weight.
pub fn integrate_endpoint_singular<F>(
    f: F,
    a: f64,
    b: f64,
    settings: &QuadSettings,
) -> Result<f64, NumericsError>
where
    F: Fn(QuadNode) -> f64,
{
    settings.validate()?;
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(NumericsError::InvalidInterval { a, b });
    }
    let half = 0.5 * (b - a);

    let eval = |t: f64| -> f64 {
        let (node, weight) = de_node(t, a, b, half);
        if node.dist_a <= 0.0 || node.dist_b <= 0.0 {
            return 0.0;
        }
        let y = f(node);
        if y.is_finite() {
            weight * y
        } else {
            0.0
        }
    };

    // Level 0: spacing 1, all integer nodes.
    let mut h = 1.0;
    let mut sum = eval(0.0) + symmetric_tail(&eval, h, h, tail_cut(settings, h, 0.0));
    let mut integral = h * sum;

    for level in 1..=settings.max_levels {
        h *= 0.5;
        // Only the new nodes: odd multiples of the refined spacing.
        let new = symmetric_tail(&eval, h, 2.0 * h, tail_cut(settings, h, integral));
        sum += new;
        let refined = h * sum;
        let diff = (refined - integral).abs();
        integral = refined;

        let tol = settings.abs_tol.max(settings.rel_tol * integral.abs());
        // The DE error roughly squares per level, so agreement of two levels
        // certifies the finer one. Demand a decisive drop before level 2 to
        // avoid accepting a spurious early match.
        if diff <= tol * 1e-2 || (level >= 2 && diff <= tol) {
            return Ok(integral);
        }
        if level == settings.max_levels {
            return Err(NumericsError::QuadBudgetExhausted {
                levels: settings.max_levels,
                best: integral,
                err_est: diff,
            });
        }
    }
    unreachable!("refinement loop always returns");
}

/// Convenience wrapper for integrands that only need the abscissa.
pub fn integrate<F>(f: F, a: f64, b: f64, settings: &QuadSettings) -> Result<f64, NumericsError>
where
    F: Fn(f64) -> f64,
{
    integrate_endpoint_singular(|node| f(node.x), a, b, settings)
}

/// Node and weight of the tanh-sinh rule at transform parameter `t`.
///
/// Works entirely in q = exp(-2|w|) with w = (pi/2) sinh t, so the offsets
/// 1 -/+ tanh(w) never cancel.
fn de_node(t: f64, a: f64, b: f64, half: f64) -> (QuadNode, f64) {
    let w = FRAC_PI_2 * t.sinh();
    let q = (-2.0 * w.abs()).exp(); // in (0, 1]
    let one_minus = 2.0 * q / (1.0 + q); // 1 - |tanh w|
    let one_plus = 2.0 / (1.0 + q); // 1 + |tanh w|

    let (dist_a, dist_b, x) = if t >= 0.0 {
        (half * one_plus, half * one_minus, b - half * one_minus)
    } else {
        (half * one_minus, half * one_plus, a + half * one_minus)
    };
    // dx/dt = half * (pi/2) cosh(t) sech^2(w), sech^2(w) = 4q/(1+q)^2.
    let weight = half * FRAC_PI_2 * t.cosh() * 4.0 * q / ((1.0 + q) * (1.0 + q));
    (QuadNode { x, dist_a, dist_b }, weight)
}

fn tail_cut(settings: &QuadSettings, h: f64, current: f64) -> f64 {
    1e-2 * settings.abs_tol.max(settings.rel_tol * current.abs()) / h
}

/// Sum eval(t) + eval(-t) for t = start, start + step, ... until the pairs
/// are negligible twice in a row (double-exponential decay makes anything
/// past that irrelevant) or t leaves the transform range.
fn symmetric_tail<E: Fn(f64) -> f64>(eval: &E, start: f64, step: f64, cut: f64) -> f64 {
    let mut acc = 0.0;
    let mut negligible = 0u32;
    let mut i = 0u64;
    loop {
        let t = start + i as f64 * step;
        if t > T_MAX {
            break;
        }
        let pair = eval(t) + eval(-t);
        acc += pair;
        if pair.abs() <= cut {
            negligible += 1;
            if negligible >= 2 && t >= 1.0 {
                break;
            }
        } else {
            negligible = 0;
        }
        i += 1;
    }
    acc
}

/// An interval known to enclose a sign change of some function.
#[derive(Debug, Clone, Copy)]
pub struct Bracket {
    lo: f64,
    hi: f64,
    f_lo: f64,
    f_hi: f64,
}

impl Bracket {
    /// Build a bracket from endpoints and already-known function values.
    pub fn new(lo: f64, hi: f64, f_lo: f64, f_hi: f64) -> Result<Self, NumericsError> {
        if !(lo < hi) {
            return Err(NumericsError::EmptyBracket { lo, hi });
        }
        let encloses = f_lo == 0.0 || f_hi == 0.0 || (f_lo < 0.0) != (f_hi < 0.0);
        if !encloses || f_lo.is_nan() || f_hi.is_nan() {
            return Err(NumericsError::NoSignChange { lo, hi, f_lo, f_hi });
        }
        Ok(Self { lo, hi, f_lo, f_hi })
    }

    /// Evaluate `f` at both endpoints and build the bracket.
    pub fn around<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64) -> Result<Self, NumericsError> {
        Self::new(lo, hi, f(lo), f(hi))
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }
}

const ROOT_MAX_ITER: u32 = 200;

/// Find the root of `f` inside `bracket` with Brent's method.
///
/// Inverse-quadratic and secant steps are taken where they help; bisection
/// guarantees convergence regardless. Returns as soon as the residual
/// satisfies |f(x)| <= abs_tol, or once the bracket has shrunk below
/// `rel_tol * |x|` (down to machine width around the iterate, for roots
/// where the residual floor is above abs_tol). The width test is purely
/// relative so that roots many orders of magnitude below 1 keep their
/// relative accuracy. The result always lies inside the initial bracket.
pub fn find_root<F>(f: F, bracket: &Bracket, settings: &QuadSettings) -> Result<f64, NumericsError>
where
    F: Fn(f64) -> f64,
{
    settings.validate()?;
    let (mut a, mut b) = (bracket.lo, bracket.hi);
    let (mut fa, mut fb) = (bracket.f_lo, bracket.f_hi);
    let (mut c, mut fc) = (a, fa);
    let mut d = b - a;
    let mut e = d;

    for _ in 0..ROOT_MAX_ITER {
        if (fb > 0.0) == (fc > 0.0) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol1 =
            (2.0 * f64::EPSILON + 0.5 * settings.rel_tol) * b.abs() + f64::MIN_POSITIVE;
        let xm = 0.5 * (c - b);
        if fb == 0.0 || fb.abs() <= settings.abs_tol || xm.abs() <= tol1 {
            return Ok(b);
        }
        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            // Try secant / inverse quadratic interpolation.
            let s = fb / fa;
            let (mut p, mut q) = if a == c {
                (2.0 * xm * s, 1.0 - s)
            } else {
                let q = fa / fc;
                let r = fb / fc;
                (
                    s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0)),
                    (q - 1.0) * (r - 1.0) * (s - 1.0),
                )
            };
            if p > 0.0 {
                q = -q;
            }
            p = p.abs();
            let min1 = 3.0 * xm * q - (tol1 * q).abs();
            let min2 = (e * q).abs();
            if 2.0 * p < min1.min(min2) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        if d.abs() > tol1 {
            b += d;
        } else {
            b += tol1.copysign(xm);
        }
        fb = f(b);
    }
    Err(NumericsError::RootIterationsExhausted {
        max_iter: ROOT_MAX_ITER,
        best: b,
    })
}

const AGM_MAX_ITER: u32 = 64;

/// Common limit of the arithmetic-geometric mean iteration.
///
/// Stops once |a_n - b_n| <= abs_tol * a_n; quadratic convergence reaches
/// machine precision in a handful of iterations for any positive inputs.
pub fn agm(a0: f64, b0: f64, settings: &QuadSettings) -> Result<f64, NumericsError> {
    settings.validate()?;
    if !(a0 > 0.0) || !(b0 > 0.0) || !a0.is_finite() || !b0.is_finite() {
        return Err(NumericsError::AgmDomain { a0, b0 });
    }
    // The iteration is symmetric in its arguments.
    let (mut a, mut b) = if a0 >= b0 { (a0, b0) } else { (b0, a0) };
    for _ in 0..AGM_MAX_ITER {
        if (a - b).abs() <= settings.abs_tol * a {
            break;
        }
        let an = 0.5 * (a + b);
        let bn = (a * b).sqrt();
        debug_assert!(an <= a, "arithmetic mean must not increase");
        debug_assert!(bn >= b, "geometric mean must not decrease");
        a = an;
        b = bn;
    }
    Ok(0.5 * (a + b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    const SETTINGS: QuadSettings = QuadSettings {
        abs_tol: 1e-13,
        rel_tol: 1e-13,
        max_levels: 12,
    };

    /// Independent check value for the degree-6 arclength integral
    /// 2 * int_0^1 dt/sqrt(1-t^6): with s = t^2 followed by s = sin^2(psi)
    /// it becomes 2 * int_0^{pi/2} dpsi / sqrt(1 + sin^2 psi + sin^4 psi),
    /// a smooth periodic integrand on which midpoint sums converge
    /// geometrically.
    fn half_period_26_midpoint(n: usize) -> f64 {
        let h = FRAC_PI_2 / n as f64;
        let sum: f64 = (0..n)
            .map(|j| {
                let s2 = ((j as f64 + 0.5) * h).sin().powi(2);
                1.0 / (1.0 + s2 + s2 * s2).sqrt()
            })
            .sum();
        h * sum
    }

    #[test]
    fn integrates_constants_exactly() {
        let v = integrate(|_| 1.0, 0.0, 1.0, &SETTINGS).unwrap();
        assert!((v - 1.0).abs() < 1e-14, "got {v}");
    }

    #[test]
    fn integrates_monomials_to_machine_accuracy() {
        for n in 0..=10u32 {
            let v = integrate(|x| x.powi(n as i32), 0.0, 1.0, &SETTINGS).unwrap();
            let exact = 1.0 / (n as f64 + 1.0);
            assert!(
                (v - exact).abs() <= SETTINGS.abs_tol,
                "x^{n}: got {v}, want {exact}"
            );
        }
    }

    #[test]
    fn inverse_sqrt_singularity_hits_arcsin() {
        // 1/sqrt(1-t^2) written through the endpoint offset.
        let v = integrate_endpoint_singular(
            |node| 1.0 / (node.dist_b * (1.0 + node.x)).sqrt(),
            0.0,
            1.0,
            &SETTINGS,
        )
        .unwrap();
        assert!((v - FRAC_PI_2).abs() < 1e-13, "got {v}");
    }

    #[test]
    fn degree_six_singularity_agrees_with_midpoint_oracle() {
        // 1/sqrt(1-t^6) = 1/sqrt((1-t)(1+t+t^2+t^3+t^4+t^5)).
        let quad = integrate_endpoint_singular(
            |node| {
                let t = node.x;
                let poly = 1.0 + t * (1.0 + t * (1.0 + t * (1.0 + t * (1.0 + t))));
                1.0 / (node.dist_b * poly).sqrt()
            },
            0.0,
            1.0,
            &SETTINGS,
        )
        .unwrap();
        let oracle = half_period_26_midpoint(512);
        assert!(
            (quad - oracle).abs() < 1e-12,
            "tanh-sinh {quad} vs midpoint {oracle}"
        );
        // Reference value computed independently with mpmath at 30 digits.
        assert!((quad - 1.214_325_323_943_790_8).abs() < 1e-13);
    }

    #[test]
    fn off_center_interval_with_left_singularity() {
        // int_1^4 dx/sqrt(x-1) = 2*sqrt(3)
        let v = integrate_endpoint_singular(|node| 1.0 / node.dist_a.sqrt(), 1.0, 4.0, &SETTINGS)
            .unwrap();
        assert!((v - 2.0 * 3.0f64.sqrt()).abs() < 1e-12, "got {v}");
    }

    #[test]
    fn rejects_empty_interval() {
        assert!(matches!(
            integrate(|_| 1.0, 1.0, 1.0, &SETTINGS),
            Err(NumericsError::InvalidInterval { .. })
        ));
        assert!(matches!(
            integrate(|_| 1.0, 2.0, 1.0, &SETTINGS),
            Err(NumericsError::InvalidInterval { .. })
        ));
    }

    #[test]
    fn reports_exhausted_budget() {
        let tight = QuadSettings {
            abs_tol: 1e-15,
            rel_tol: 1e-15,
            max_levels: 1,
        };
        let r = integrate_endpoint_singular(|node| 1.0 / node.dist_b.sqrt(), 0.0, 1.0, &tight);
        assert!(matches!(r, Err(NumericsError::QuadBudgetExhausted { .. })));
    }

    #[test]
    fn rejects_bad_settings() {
        let bad = QuadSettings {
            abs_tol: 0.0,
            ..SETTINGS
        };
        assert!(matches!(
            integrate(|_| 1.0, 0.0, 1.0, &bad),
            Err(NumericsError::InvalidSettings(_))
        ));
    }

    #[test]
    fn root_of_affine_function() {
        let b = Bracket::around(|x| x - 0.5, 0.0, 1.0).unwrap();
        let r = find_root(|x| x - 0.5, &b, &SETTINGS).unwrap();
        assert!((r - 0.5).abs() < 1e-13);
    }

    #[test]
    fn root_of_cubic() {
        let f = |x: f64| x * x * x - 2.0;
        let b = Bracket::around(f, 1.0, 2.0).unwrap();
        let r = find_root(f, &b, &SETTINGS).unwrap();
        assert!((r - 2.0f64.cbrt()).abs() < 1e-13);
        assert!((1.0..=2.0).contains(&r));
    }

    #[test]
    fn root_stays_inside_bracket() {
        // Steep function: the interpolation steps must stay confined.
        let f = |x: f64| (x * 30.0).tanh() - 0.3;
        let b = Bracket::around(f, -1.0, 1.0).unwrap();
        let r = find_root(f, &b, &SETTINGS).unwrap();
        assert!((-1.0..=1.0).contains(&r));
        assert!(f(r).abs() <= 1e-13);
    }

    #[test]
    fn bracket_requires_sign_change() {
        assert!(matches!(
            Bracket::around(|x| x * x + 1.0, -1.0, 1.0),
            Err(NumericsError::NoSignChange { .. })
        ));
        assert!(matches!(
            Bracket::new(1.0, 0.0, -1.0, 1.0),
            Err(NumericsError::EmptyBracket { .. })
        ));
    }

    #[test]
    fn agm_fixed_point_and_known_value() {
        assert_eq!(agm(1.0, 1.0, &SETTINGS).unwrap(), 1.0);
        let v = agm(1.0, 2.0f64.sqrt(), &SETTINGS).unwrap();
        // M(1, sqrt(2)), the lemniscatic mean.
        assert!((v - 1.198_140_234_735_592_2).abs() < 1e-14, "got {v}");
    }

    #[test]
    fn agm_matches_complete_elliptic_quadrature() {
        // K(k) = pi / (2 M(1, k')) against direct quadrature of the defining
        // integral, modulus from the k^2 = (2 - sqrt(3))/4 family.
        let k_sq = (2.0 - 3.0f64.sqrt()) / 4.0;
        let k_prime = (1.0 - k_sq).sqrt();
        let m = agm(1.0, k_prime, &SETTINGS).unwrap();
        let k_agm = PI / (2.0 * m);
        let k_quad = integrate(
            |theta| {
                let s = theta.sin();
                1.0 / (1.0 - k_sq * s * s).sqrt()
            },
            0.0,
            FRAC_PI_2,
            &SETTINGS,
        )
        .unwrap();
        assert!(
            (k_agm - k_quad).abs() < 1e-13,
            "agm {k_agm} vs quadrature {k_quad}"
        );
    }

    #[test]
    fn agm_rejects_nonpositive_input() {
        assert!(matches!(
            agm(0.0, 1.0, &SETTINGS),
            Err(NumericsError::AgmDomain { .. })
        ));
        assert!(matches!(
            agm(1.0, -2.0, &SETTINGS),
            Err(NumericsError::AgmDomain { .. })
        ));
    }
}
