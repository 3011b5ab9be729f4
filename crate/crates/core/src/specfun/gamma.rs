use crate::error::{domain, Error, Result};
use crate::tol::GAMMA_POLE;
use crate::ComplexValue;
use std::f64::consts::PI;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];
const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;

/// Log-gamma on the complex plane.
///
/// The imaginary part follows the analytic continuation from the positive real
/// axis rather than being wrapped into (−π, π]; `exp` of the result is Γ(z).
pub fn ln_gamma(z: ComplexValue) -> Result<ComplexValue> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(domain("ln_gamma argument must be finite", z.re));
    }
    if z.im.abs() <= GAMMA_POLE && z.re <= 0.0 && (z.re - z.re.round()).abs() <= GAMMA_POLE {
        return Err(Error::Pole(z.re));
    }
    if z.re < 0.5 {
        // Γ(z)Γ(1−z) = π / sin(πz)
        let rest = lanczos(ComplexValue::new(1.0, 0.0) - z);
        return Ok(ComplexValue::new(PI.ln(), 0.0) - ln_sin_pi(z) - rest);
    }
    Ok(lanczos(z))
}

fn lanczos(z: ComplexValue) -> ComplexValue {
    let z = z - 1.0;
    let mut x = ComplexValue::new(LANCZOS[0], 0.0);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        x += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    HALF_LN_2PI + (z + 0.5) * t.ln() - t + x.ln()
}

// ln sin(πz) without overflow for large |Im z|.
fn ln_sin_pi(z: ComplexValue) -> ComplexValue {
    let j = ComplexValue::i();
    if z.im.abs() < 1.0 {
        return (z * PI).sin().ln();
    }
    if z.im < 0.0 {
        return ln_sin_pi(z.conj()).conj();
    }
    // sin w = e^{−jw}(1 − e^{2jw}) / (−2j), |e^{2jw}| < 1 for Im w > 0
    let w = z * PI;
    let tail = ComplexValue::new(1.0, 0.0) - (j * 2.0 * w).exp();
    -j * w + (tail / (-2.0 * j)).ln()
}

/// Real log-gamma for positive arguments.
pub fn ln_gamma_real(x: f64) -> f64 {
    statrs::function::gamma::ln_gamma(x)
}

/// Γ(x) for real x that is not a pole.
pub fn gamma_real(x: f64) -> f64 {
    statrs::function::gamma::gamma(x)
}

/// Γ(b+δ)/Γ(b) via log-gamma differences.
pub fn gamma_ratio(b: f64, delta: f64) -> Result<f64> {
    if !(b > 0.0) || !b.is_finite() {
        return Err(domain("gamma_ratio requires b > 0", b));
    }
    if !(delta > 0.0 && delta < 1.0) {
        return Err(domain("gamma_ratio requires delta in (0,1)", delta));
    }
    Ok((ln_gamma_real(b + delta) - ln_gamma_real(b)).exp())
}
