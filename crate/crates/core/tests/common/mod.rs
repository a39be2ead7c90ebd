//! Shared test support: an argument-principle zero oracle that is fully
//! independent of the solver under test, and a seeded generator of random
//! structured functions.
//!
//! The oracle counts zeros inside rectangles by winding numbers of `F` along
//! the boundary and recursively subdivides until each zero is isolated in a
//! box small enough to pin its location; multiplicity is the winding count of
//! the final box.

use num_complex::Complex64;
use rand::Rng;
use zlocus::model::StructuredFunction;

pub type Fun<'a> = &'a dyn Fn(Complex64) -> Complex64;

/// Argument change along one straight segment, adaptively refined so that no
/// step turns the argument by more than π/2. `None` when the function gets
/// too close to zero on the segment or refinement bottoms out.
fn arg_change(f: Fun, a: Complex64, b: Complex64) -> Option<f64> {
    fn wrap(x: f64) -> f64 {
        x - 2.0 * std::f64::consts::PI * (x / (2.0 * std::f64::consts::PI)).round()
    }
    fn recurse(
        f: Fun,
        a: Complex64,
        fa: Complex64,
        b: Complex64,
        fb: Complex64,
        depth: u32,
    ) -> Option<f64> {
        let delta = wrap(fb.arg() - fa.arg());
        if delta.abs() <= std::f64::consts::FRAC_PI_2 && depth >= 2 {
            return Some(delta);
        }
        if depth > 48 {
            return None;
        }
        let mid = 0.5 * (a + b);
        let fm = f(mid);
        if fm == Complex64::ZERO || !fm.is_finite() {
            return None;
        }
        Some(recurse(f, a, fa, mid, fm, depth + 1)? + recurse(f, mid, fm, b, fb, depth + 1)?)
    }
    let fa = f(a);
    let fb = f(b);
    if fa == Complex64::ZERO || fb == Complex64::ZERO || !fa.is_finite() || !fb.is_finite() {
        return None;
    }
    recurse(f, a, fa, b, fb, 0)
}

/// Winding number of `f` around the rectangle `[lo.re, hi.re]×[lo.im, hi.im]`.
pub fn winding_number(f: Fun, lo: Complex64, hi: Complex64) -> Option<i64> {
    let corners = [
        lo,
        Complex64::new(hi.re, lo.im),
        hi,
        Complex64::new(lo.re, hi.im),
        lo,
    ];
    let mut total = 0.0;
    for pair in corners.windows(2) {
        total += arg_change(f, pair[0], pair[1])?;
    }
    let winding = total / (2.0 * std::f64::consts::PI);
    let rounded = winding.round();
    if (winding - rounded).abs() > 0.25 {
        return None;
    }
    Some(rounded as i64)
}

/// All zeros of `f` inside the rectangle, to absolute accuracy `tol`, with
/// multiplicities. Boxes whose boundary grazes a zero are retried with
/// slightly shifted edges.
pub fn isolate_zeros(f: Fun, lo: Complex64, hi: Complex64, tol: f64) -> Vec<(Complex64, i64)> {
    // offsets used to jiggle an edge off a zero, as fractions of the box size
    const JIGGLE: [f64; 5] = [0.0, 0.013_719, -0.027_182_8, 0.051_234, -0.073_105];

    fn count_with_jiggle(f: Fun, lo: Complex64, hi: Complex64) -> (Complex64, Complex64, i64) {
        let size = (hi - lo).norm();
        for j in JIGGLE {
            let grow = Complex64::new(j * size, j * size);
            let lo2 = lo - grow;
            let hi2 = hi + grow;
            if let Some(count) = winding_number(f, lo2, hi2) {
                return (lo2, hi2, count);
            }
        }
        panic!("oracle could not separate a zero from the contour at {lo}..{hi}");
    }

    fn recurse(f: Fun, lo: Complex64, hi: Complex64, tol: f64, out: &mut Vec<(Complex64, i64)>) {
        let (lo, hi, count) = count_with_jiggle(f, lo, hi);
        if count == 0 {
            return;
        }
        let size = (hi - lo).norm();
        if size <= tol {
            out.push((0.5 * (lo + hi), count));
            return;
        }
        let mid = 0.5 * (lo + hi);
        let quadrants = [
            (lo, mid),
            (Complex64::new(mid.re, lo.im), Complex64::new(hi.re, mid.im)),
            (mid, hi),
            (Complex64::new(lo.re, mid.im), Complex64::new(mid.re, hi.im)),
        ];
        for (qlo, qhi) in quadrants {
            recurse(f, qlo, qhi, tol, out);
        }
    }

    let mut out = Vec::new();
    recurse(f, lo, hi, tol, &mut out);
    // merge duplicates created by jiggled overlapping boxes
    let mut merged: Vec<(Complex64, i64)> = Vec::new();
    for (z, count) in out {
        if let Some(existing) = merged.iter_mut().find(|(w, _)| (*w - z).norm() < 4.0 * tol) {
            existing.1 = existing.1.max(count);
        } else {
            merged.push((z, count));
        }
    }
    merged.sort_by(|a, b| a.0.norm().partial_cmp(&b.0.norm()).unwrap());
    merged
}

/// Zeros of a structured function by the winding oracle, covering a disk that
/// contains every zero of its polynomial expansion (Cauchy bound).
pub fn oracle_zeros(s: &StructuredFunction, tol: f64) -> Vec<(Complex64, i64)> {
    let series = s.expand_to_series();
    let coeffs = series.coeffs();
    let top = coeffs.iter().rposition(|c| *c != Complex64::ZERO).unwrap();
    let lead = coeffs[top].norm();
    let bound = 1.0
        + coeffs[..top]
            .iter()
            .map(|c| c.norm() / lead)
            .fold(0.0, f64::max);
    let half = bound * 1.05;
    let f = move |z: Complex64| s.eval_f_big(z).unwrap_or(Complex64::ZERO);
    isolate_zeros(
        &f,
        Complex64::new(-half, -half),
        Complex64::new(half, half),
        tol,
    )
}

/// Coefficients of `Π (1 + z/x_k)` for positive `x_k` (all zeros negative).
#[allow(dead_code)]
pub fn negative_zero_polynomial(xs: &[f64]) -> Vec<f64> {
    let mut coeffs = vec![1.0];
    for &x in xs {
        coeffs.push(0.0);
        for k in (1..coeffs.len()).rev() {
            let lower = coeffs[k - 1];
            coeffs[k] += lower / x;
        }
    }
    coeffs
}

/// The same product with exactly one factor flipped to `(1 − z/x_flip)`.
#[allow(dead_code)]
pub fn single_flip_polynomial(xs: &[f64], flip: usize) -> Vec<f64> {
    let mut coeffs = vec![1.0];
    for (i, &x) in xs.iter().enumerate() {
        let sign = if i == flip { -1.0 } else { 1.0 };
        coeffs.push(0.0);
        for k in (1..coeffs.len()).rev() {
            let lower = coeffs[k - 1];
            coeffs[k] += sign * lower / x;
        }
    }
    coeffs
}

/// Random structured function: up to `max_factors` per part, factors
/// log-uniform in [0.1, 10], `j ∈ {0, 1, 2}`, random leading phases.
pub fn random_structured<R: Rng>(rng: &mut R, max_factors: usize) -> StructuredFunction {
    let log_uniform =
        |rng: &mut R| -> f64 { 10.0_f64.powf(rng.gen_range(-1.0..1.0)) };
    let nb = rng.gen_range(0..=max_factors);
    let na = rng.gen_range(0..=max_factors);
    let b: Vec<f64> = (0..nb).map(|_| log_uniform(rng)).collect();
    let a: Vec<f64> = (0..na).map(|_| log_uniform(rng)).collect();
    let mut j = rng.gen_range(0..=2u32);
    if b.is_empty() && a.is_empty() {
        j = 0;
    }
    let phase = |rng: &mut R| rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI);
    let magnitude = |rng: &mut R| (rng.gen_range(-0.7_f64..0.7)).exp();
    let f0 = Complex64::from_polar(magnitude(rng), phase(rng));
    let g0 = Complex64::from_polar(magnitude(rng), phase(rng));
    StructuredFunction::build(f0, b, g0, j, a).expect("generator produces valid data")
}
