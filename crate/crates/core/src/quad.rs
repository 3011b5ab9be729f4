//! Quadrature building blocks: double-exponential rule for finite intervals with
//! endpoint singularities, adaptive Gauss-Kronrod for smooth panels, and Wynn's
//! epsilon algorithm for oscillatory tails.

use crate::error::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::FRAC_PI_2;

const TS_TMAX: f64 = 5.7;
const TS_MAX_LEVEL: usize = 10;

/// Tanh-sinh quadrature of a complex integrand over `[a, b]`.
///
/// The integrand receives the distance of the node from `a` and from `b`, both
/// computed without cancellation, so singular factors such as `(x − a)^−δ` can be
/// evaluated accurately near the endpoints. The error roughly squares with each
/// halving of the step, so refinement stops once the change between levels is
/// below the square root of the requested tolerance. Returns the value and the
/// predicted error.
pub fn tanh_sinh<F>(mut f: F, a: f64, b: f64, rel_tol: f64, abs_tol: f64) -> Result<(Complex64, f64)>
where
    F: FnMut(f64, f64) -> Complex64,
{
    let half = 0.5 * (b - a);
    if half <= 0.0 {
        return Ok((Complex64::new(0.0, 0.0), 0.0));
    }
    let mut node = |t: f64| -> Complex64 {
        let y = FRAC_PI_2 * t.sinh();
        let e = (-2.0 * y.abs()).exp();
        let near = 2.0 * half * e / (1.0 + e);
        let far = 2.0 * half / (1.0 + e);
        let (lo, hi) = if y >= 0.0 { (far, near) } else { (near, far) };
        if lo <= 0.0 || hi <= 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        let sech2 = 4.0 * e / ((1.0 + e) * (1.0 + e));
        let w = half * FRAC_PI_2 * t.cosh() * sech2;
        f(lo, hi) * w
    };

    let mut h = 1.0;
    let mut sum = Complex64::new(0.0, 0.0);
    let mut mass = 0.0;
    let add = |v: Complex64, sum: &mut Complex64, mass: &mut f64| {
        *sum += v;
        *mass += v.norm();
    };
    add(node(0.0), &mut sum, &mut mass);
    let mut k = 1;
    while (k as f64) * h <= TS_TMAX {
        let t = k as f64 * h;
        add(node(t), &mut sum, &mut mass);
        add(node(-t), &mut sum, &mut mass);
        k += 1;
    }
    let mut prev = sum * h;
    for level in 1..=TS_MAX_LEVEL {
        h *= 0.5;
        let mut k = 1;
        while (k as f64) * h <= TS_TMAX {
            let t = k as f64 * h;
            add(node(t), &mut sum, &mut mass);
            add(node(-t), &mut sum, &mut mass);
            k += 2;
        }
        let cur = sum * h;
        // measure errors against ∫|f| so that near-cancelling panels still terminate
        let scale = cur.norm().max(mass * h);
        let diff = (cur - prev).norm() / scale.max(f64::MIN_POSITIVE);
        let predicted = diff * diff * scale;
        if level >= 2 && (diff <= rel_tol.sqrt() || predicted <= abs_tol) && diff < 1e-2 {
            return Ok((cur, predicted.max(rel_tol * scale)));
        }
        prev = cur;
    }
    Err(Error::Convergence { what: "tanh-sinh quadrature", iterations: TS_MAX_LEVEL })
}

const XGK: [f64; 11] = [
    0.995657163025808080735527280689003,
    0.973906528517171720077964012084452,
    0.930157491355708226001207180059508,
    0.865063366688984510732096688423493,
    0.780817726586416897063717578345042,
    0.679409568299024406234327365114874,
    0.562757134668604683339000099272694,
    0.433395394129247190799265943165784,
    0.294392862701460198131126603103866,
    0.148874338981631210884826001129720,
    0.000000000000000000000000000000000,
];
const WGK: [f64; 11] = [
    0.011694638867371874278064396062192,
    0.032558162307964727478818972459390,
    0.054755896574351996031381300244580,
    0.075039674810919952767043140916190,
    0.093125454583697605535065465083366,
    0.109387158802297641899210590325805,
    0.123491976262065851077965111220598,
    0.134709217311473325928054001771707,
    0.142775938577060080797094273138717,
    0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
];
const WG: [f64; 5] = [
    0.066671344308688137593568809893332,
    0.149451349150580593145776339657697,
    0.219086362515982043995534934228163,
    0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
];

/// One 21-point Kronrod panel. Returns (value, error estimate).
pub fn gk21<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut rk = fc * WGK[10];
    let mut rg = 0.0;
    let mut fv = [(0.0, 0.0); 10];
    for i in 0..10 {
        let dx = h * XGK[i];
        let f1 = f(c - dx);
        let f2 = f(c + dx);
        fv[i] = (f1, f2);
        rk += WGK[i] * (f1 + f2);
        if i % 2 == 1 {
            rg += WG[i / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * rk;
    let mut asc = WGK[10] * (fc - mean).abs();
    for i in 0..10 {
        asc += WGK[i] * ((fv[i].0 - mean).abs() + (fv[i].1 - mean).abs());
    }
    let value = rk * h;
    let asc = asc * h.abs();
    let mut err = ((rk - rg) * h).abs();
    if asc != 0.0 && err != 0.0 {
        err = asc * (200.0 * err / asc).powf(1.5).min(1.0);
    }
    let floor = 50.0 * f64::EPSILON * value.abs();
    (value, err.max(floor))
}

/// Adaptive bisection with the 21-point Kronrod rule until the summed error
/// estimate drops below `tol` or `max_sub` intervals are in use.
/// Returns (value, error estimate); the caller decides whether the error is acceptable.
pub fn gk_adaptive<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64, tol: f64, max_sub: usize) -> (f64, f64) {
    let (v, e) = gk21(f, a, b);
    let mut parts = vec![(a, b, v, e)];
    let mut total_err = e;
    while total_err > tol && parts.len() < max_sub {
        let (idx, _) = parts.iter().enumerate().max_by(|x, y| x.1 .3.total_cmp(&y.1 .3)).expect("non-empty");
        let (lo, hi, _, _) = parts.swap_remove(idx);
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            parts.push((lo, hi, 0.0, 0.0));
            break;
        }
        let (v1, e1) = gk21(f, lo, mid);
        let (v2, e2) = gk21(f, mid, hi);
        parts.push((lo, mid, v1, e1));
        parts.push((mid, hi, v2, e2));
        total_err = parts.iter().map(|p| p.3).sum();
    }
    // sum in left-to-right order so the result does not depend on subdivision history
    parts.sort_by(|x, y| x.0.total_cmp(&y.0));
    let value = parts.iter().map(|p| p.2).sum();
    let err = parts.iter().map(|p| p.3).sum();
    (value, err)
}

/// Wynn's epsilon algorithm on a sequence of partial sums.
/// Returns the extrapolated limit and the change from the estimate obtained
/// without the last element.
pub fn wynn_epsilon(seq: &[f64]) -> Option<(f64, f64)> {
    if seq.len() < 3 {
        return None;
    }
    let est = wynn_limit(seq)?;
    let prev = wynn_limit(&seq[..seq.len() - 1])?;
    Some((est, (est - prev).abs()))
}

fn wynn_limit(seq: &[f64]) -> Option<f64> {
    let n = seq.len();
    // eps_{k-1} and eps_k columns
    let mut prev: Vec<f64> = vec![0.0; n + 1];
    let mut cur: Vec<f64> = seq.to_vec();
    let mut best = *seq.last()?;
    for k in 1..n {
        let mut next = Vec::with_capacity(cur.len() - 1);
        for i in 0..cur.len() - 1 {
            let d = cur[i + 1] - cur[i];
            if d == 0.0 || !d.is_finite() {
                return Some(best);
            }
            next.push(prev[i + 1] + 1.0 / d);
        }
        prev = cur;
        cur = next;
        if k % 2 == 0 {
            if let Some(&v) = cur.last() {
                if v.is_finite() {
                    best = v;
                }
            }
        }
    }
    Some(best)
}
