//! Jacobi elliptic functions sn, cn, dn and the complete elliptic integral
//! of the first kind, evaluated through the arithmetic-geometric mean.

use std::f64::consts::FRAC_PI_2;

use thiserror::Error;

use crate::numerics::{self, QuadSettings};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EllipticError {
    #[error("modulus k must satisfy 0 <= k < 1, got {k}")]
    InvalidModulus { k: f64 },
}

/// Elliptic modulus k with its square and complement cached.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Modulus {
    k: f64,
    k_sq: f64,
    k_prime: f64,
}

impl Modulus {
    pub fn new(k: f64) -> Result<Self, EllipticError> {
        if !(0.0..1.0).contains(&k) {
            return Err(EllipticError::InvalidModulus { k });
        }
        Ok(Self {
            k,
            k_sq: k * k,
            k_prime: (1.0 - k * k).sqrt(),
        })
    }

    /// Build from the parameter m = k^2.
    pub fn from_k_squared(k_sq: f64) -> Result<Self, EllipticError> {
        if !(0.0..1.0).contains(&k_sq) {
            return Err(EllipticError::InvalidModulus { k: k_sq.sqrt() });
        }
        Ok(Self {
            k: k_sq.sqrt(),
            k_sq,
            k_prime: (1.0 - k_sq).sqrt(),
        })
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn k_sq(&self) -> f64 {
        self.k_sq
    }

    /// Complementary modulus k' = sqrt(1 - k^2).
    pub fn k_prime(&self) -> f64 {
        self.k_prime
    }
}

/// Simultaneous (sn, cn, dn) values at one argument.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipticTriple {
    pub sn: f64,
    pub cn: f64,
    pub dn: f64,
}

// AGM depth for the elliptic evaluations: quadratic convergence reaches
// 1e-15 within six iterations for any modulus below ~0.99.
const AGM_SETTINGS: QuadSettings = QuadSettings {
    abs_tol: 1e-15,
    rel_tol: 1e-15,
    max_levels: 1,
};
const AGM_DEPTH: usize = 40;

/// Complete elliptic integral of the first kind, K(k) = pi / (2 M(1, k')).
pub fn complete_k(m: &Modulus) -> f64 {
    let mean = numerics::agm(1.0, m.k_prime.max(f64::MIN_POSITIVE), &AGM_SETTINGS)
        .expect("agm of positive inputs cannot fail");
    FRAC_PI_2 / mean
}

/// Jacobi elliptic triple at argument `u`.
///
/// Runs the descending AGM arrays, seeds the amplitude at the deepest level
/// with phi_N = 2^N a_N u, and back-recurs
/// phi_{n-1} = (phi_n + asin((c_n/a_n) sin phi_n)) / 2; then sn = sin phi_0,
/// cn = cos phi_0, and dn = sqrt(1 - k^2 sn^2), which enforces the second
/// quadratic identity by construction. Arguments outside the principal
/// quarter period are folded in by the standard symmetries.
pub fn jacobi(u: f64, m: &Modulus) -> EllipticTriple {
    if m.k_sq == 0.0 {
        return EllipticTriple {
            sn: u.sin(),
            cn: u.cos(),
            dn: 1.0,
        };
    }

    let quarter = complete_k(m);
    // Fold into [0, K]: period 4K, sn odd / cn, dn even, then the
    // half-period reflection sn(2K - u) = sn(u), cn(2K - u) = -cn(u).
    let period = 4.0 * quarter;
    let mut v = u - period * (u / period).round();
    let mut sn_sign = 1.0;
    let mut cn_sign = 1.0;
    if v < 0.0 {
        v = -v;
        sn_sign = -1.0;
    }
    if v > quarter {
        v = 2.0 * quarter - v;
        cn_sign = -1.0;
    }
    let principal = jacobi_principal(v.max(0.0), m);
    EllipticTriple {
        sn: sn_sign * principal.sn,
        cn: cn_sign * principal.cn,
        dn: principal.dn,
    }
}

fn jacobi_principal(u: f64, m: &Modulus) -> EllipticTriple {
    let mut a = Vec::with_capacity(8);
    let mut c = Vec::with_capacity(8);
    a.push(1.0f64);
    c.push(m.k);
    let mut b = m.k_prime;
    while *c.last().unwrap() > 1e-15 * a.last().unwrap() && a.len() < AGM_DEPTH {
        let (an, bn) = (*a.last().unwrap(), b);
        a.push(0.5 * (an + bn));
        c.push(0.5 * (an - bn));
        b = (an * bn).sqrt();
    }

    let deepest = a.len() - 1;
    let mut phi = (1u64 << deepest) as f64 * a[deepest] * u;
    for n in (1..=deepest).rev() {
        phi = 0.5 * (phi + (c[n] / a[n] * phi.sin()).asin());
    }
    let sn = phi.sin();
    let cn = phi.cos();
    let dn = (1.0 - m.k_sq * sn * sn).sqrt();
    EllipticTriple { sn, cn, dn }
}

/// cn(u + v) through the algebraic addition formula
///
/// ```text
///            cn(u) cn(v) - sn(u) sn(v) dn(u) dn(v)
/// cn(u+v) = ---------------------------------------
///                  1 - k^2 sn^2(u) sn^2(v)
/// ```
///
/// The denominator is at least 1 - k^2 > 0, so the expression is defined
/// for every pair of arguments.
pub fn cn_addition(u: f64, v: f64, m: &Modulus) -> f64 {
    let tu = jacobi(u, m);
    let tv = jacobi(v, m);
    (tu.cn * tv.cn - tu.sn * tv.sn * tu.dn * tv.dn)
        / (1.0 - m.k_sq * tu.sn * tu.sn * tv.sn * tv.sn)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Modulus of the degree-6 representation: k^2 = (2 - sqrt(3))/4.
    fn m26() -> Modulus {
        Modulus::from_k_squared((2.0 - 3.0f64.sqrt()) / 4.0).unwrap()
    }

    #[test]
    fn modulus_validation() {
        assert!(Modulus::new(1.0).is_err());
        assert!(Modulus::new(-0.1).is_err());
        assert!(Modulus::from_k_squared(1.5).is_err());
        let m = m26();
        assert!((m.k() - 0.258_819_045_102_520_76).abs() < 1e-15);
        assert!((m.k_prime().powi(2) + m.k_sq() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn complete_k_reference_values() {
        // mpmath: K(m=0.36) and K(m=0.5).
        assert_eq!(complete_k(&Modulus::new(0.0).unwrap()), FRAC_PI_2);
        let k6 = complete_k(&Modulus::new(0.6).unwrap());
        assert!((k6 - 1.750_753_802_915_752_5).abs() < 1e-14, "got {k6}");
        let k5 = complete_k(&Modulus::from_k_squared(0.5).unwrap());
        assert!((k5 - 1.854_074_677_301_371_9).abs() < 1e-14, "got {k5}");
        let k26 = complete_k(&m26());
        assert!((k26 - 1.598_142_002_112_540_1).abs() < 1e-14, "got {k26}");
    }

    #[test]
    fn complete_k_majorizes_half_pi() {
        for ksq in [0.0, 0.01, 0.2, 0.5, 0.9, 0.999] {
            let val = complete_k(&Modulus::from_k_squared(ksq).unwrap());
            if ksq == 0.0 {
                assert_eq!(val, FRAC_PI_2);
            } else {
                assert!(val > FRAC_PI_2);
            }
        }
    }

    #[test]
    fn jacobi_at_zero_and_quarter_period() {
        let m = m26();
        let t0 = jacobi(0.0, &m);
        assert_eq!((t0.sn, t0.cn, t0.dn), (0.0, 1.0, 1.0));
        let tk = jacobi(complete_k(&m), &m);
        assert!((tk.sn - 1.0).abs() < 1e-13);
        assert!(tk.cn.abs() < 1e-13);
        assert!((tk.dn - m.k_prime()).abs() < 1e-13);
    }

    #[test]
    fn jacobi_reference_values() {
        // mpmath at k^2 = (2 - sqrt(3))/4.
        let m = m26();
        let t = jacobi(0.5, &m);
        assert!((t.sn - 0.478_260_964_344_631_7).abs() < 1e-14);
        assert!((t.cn - 0.878_217_769_112_048_3).abs() < 1e-14);
        assert!((t.dn - 0.992_309_305_356_871_5).abs() < 1e-14);
        let t = jacobi(1.2, &m);
        assert!((t.sn - 0.926_709_508_064_976_2).abs() < 1e-14);
        assert!((t.cn - 0.375_778_508_781_396_2).abs() < 1e-14);
        assert!((t.dn - 0.970_809_942_232_710_5).abs() < 1e-14);
    }

    #[test]
    fn jacobi_degenerates_to_circular_at_zero_modulus() {
        let m = Modulus::new(0.0).unwrap();
        for u in [0.0, 0.3, 1.0, 2.5] {
            let t = jacobi(u, &m);
            assert_eq!(t.sn, u.sin());
            assert_eq!(t.cn, u.cos());
            assert_eq!(t.dn, 1.0);
        }
    }

    #[test]
    fn jacobi_symmetries_beyond_the_quarter_period() {
        let m = m26();
        let kq = complete_k(&m);
        let t2k = jacobi(2.0 * kq, &m);
        assert!(t2k.sn.abs() < 1e-13);
        assert!((t2k.cn + 1.0).abs() < 1e-13);
        assert!((t2k.dn - 1.0).abs() < 1e-13);
        // Oddness of sn, evenness of cn/dn.
        let plus = jacobi(0.7, &m);
        let minus = jacobi(-0.7, &m);
        assert_eq!(minus.sn, -plus.sn);
        assert_eq!(minus.cn, plus.cn);
        assert_eq!(minus.dn, plus.dn);
        // Reflection at the half period.
        let refl = jacobi(2.0 * kq - 0.7, &m);
        assert!((refl.sn - plus.sn).abs() < 1e-13);
        assert!((refl.cn + plus.cn).abs() < 1e-13);
    }

    #[test]
    fn quadratic_identities_hold_along_the_quarter_period() {
        let m = m26();
        let kq = complete_k(&m);
        for i in 0..=100 {
            let u = kq * i as f64 / 100.0;
            let t = jacobi(u, &m);
            assert!((t.sn * t.sn + t.cn * t.cn - 1.0).abs() < 1e-12, "u = {u}");
            assert!(
                (m.k_sq() * t.sn * t.sn + t.dn * t.dn - 1.0).abs() < 1e-12,
                "u = {u}"
            );
        }
    }

    #[test]
    fn addition_formula_trivial_cases() {
        let m = m26();
        let kq = complete_k(&m);
        let direct = jacobi(0.9, &m).cn;
        assert!((cn_addition(0.9, 0.0, &m) - direct).abs() < 1e-14);
        // cn(K + K) = cn(2K) = -1.
        assert!((cn_addition(kq, kq, &m) + 1.0).abs() < 1e-12);
    }

    #[test]
    fn addition_formula_matches_direct_evaluation() {
        let m = m26();
        let kq = complete_k(&m);
        for i in 1..40 {
            let u = kq * i as f64 / 80.0;
            let v = kq * (40 - i) as f64 / 120.0;
            let lhs = cn_addition(u, v, &m);
            let rhs = jacobi(u + v, &m).cn;
            assert!((lhs - rhs).abs() < 1e-12, "u = {u}, v = {v}");
        }
    }
}
