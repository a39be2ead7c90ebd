//! The level curve `ln|R| = 0` and zeros of `F` as c-points of `R`.
//!
//! For fixed `r` the function `u(re^{iφ}) = ln|R|` is strictly decreasing in
//! `φ` on the first-quadrant arc, so the angle
//!
//! ```text
//! l(r) = 0        if u(r) ≤ 0,
//!        π/2      if u(ir) ≥ 0,
//!        φ : u(re^{iφ}) = 0   otherwise
//! ```
//!
//! is well defined, and `arg R` restricted to the branch `r ↦ r·e^{i·l(r)}`
//! is continuous and non-decreasing, increasing exactly on the interior
//! stretches `0 < l(r) < π/2`. Zeros of `F` in the closed first quadrant are
//! the branch points where the unwrapped argument meets `arg c`; the other
//! quadrants follow by the reflections `z ↦ −z̄, −z, z̄`.
//!
//! Axis singularities of `R` (moduli `√a_ν` on the real axis, `√b_μ` on the
//! imaginary axis) are excluded from every radial query by a relative
//! puncture; the branch itself passes them off-axis without incident.

use num_complex::Complex64;
use std::f64::consts::{FRAC_PI_2, PI};
use thiserror::Error;

use crate::model::{ModelError, StructuredFunction};
use crate::plane::{sector_of, Quadrant, Sector};

/// Relative puncture around axis-singularity moduli used to keep grid points
/// off the singular radii.
const PUNCTURE: f64 = 1e-9;

/// Hard rejection radius for direct queries; `u` is still finite just outside.
const RADIUS_GUARD: f64 = 1e-12;

/// Bisection tolerance for the angle `l(r)`.
const PHI_TOLERANCE: f64 = 1e-12;

/// Adaptive refinement depth for argument continuation.
const REFINE_DEPTH: u32 = 12;

/// Residual bound for accepting a c-point: `|R(z) − target| < 1e−8`.
const C_POINT_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Error)]
pub enum LocusError {
    #[error("radius {r} lies within the puncture of an axis singularity")]
    SingularRadius { r: f64 },
    #[error("the ratio has no angular variation (both factor lists empty)")]
    DegenerateMonotonicity,
    #[error("argument jump between r = {r_lo} and r = {r_hi} survived refinement")]
    UnresolvedJump { r_lo: f64, r_hi: f64 },
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// One point of the traced branch.
#[derive(Clone, Copy, Debug)]
pub struct LocusSample {
    pub r: f64,
    /// `l(r)`; exactly `0` or `π/2` on flat segments.
    pub phi: f64,
    /// `u` at the branch point: ~0 on the level curve, the actual axis value
    /// on flat segments.
    pub u_residual: f64,
    /// Continuous branch of `arg R` along the samples.
    pub arg_unwrapped: f64,
}

/// A solution of `R(z) = c` (or one of its reflections), i.e. a zero of `F`.
#[derive(Clone, Copy, Debug)]
pub struct CPoint {
    pub location: Complex64,
    /// Axis/quadrant classification of the location.
    pub sector: Sector,
    /// Which closed quadrant's problem this point solves.
    pub target: Quadrant,
    /// Radius of the underlying branch point in the first quadrant.
    pub branch_r: f64,
    /// 2 when the point came from a tangential touch (double zero), else 1.
    pub multiplicity_hint: u32,
}

/// `u(z) = ln |R(z)|`.
pub fn u_value(s: &StructuredFunction, z: Complex64) -> Result<f64, LocusError> {
    // the numerator vanishes at z² = −b: guard like the pole side
    let w = z * z;
    for &b in s.b_factors() {
        if (w + b).norm() < crate::model::SINGULARITY_GUARD * (1.0 + b) {
            return Err(LocusError::Model(ModelError::SingularInput { z }));
        }
    }
    let value = s.eval_r(z)?.norm().ln();
    if value.is_finite() {
        Ok(value)
    } else {
        Err(LocusError::Model(ModelError::SingularInput { z }))
    }
}

fn guard_radius(s: &StructuredFunction, r: f64) -> Result<(), LocusError> {
    for root in s.axis_singularity_radii() {
        if (r - root).abs() < RADIUS_GUARD * root {
            return Err(LocusError::SingularRadius { r });
        }
    }
    Ok(())
}

/// The angle `l(r)`: where the circle of radius `r` meets the level curve in
/// the closed first quadrant, clamped to the axes outside it.
pub fn l_of_r(s: &StructuredFunction, r: f64) -> Result<f64, LocusError> {
    if s.is_degenerate_pair() {
        return Err(LocusError::DegenerateMonotonicity);
    }
    guard_radius(s, r)?;
    let u_real = u_value(s, Complex64::new(r, 0.0))?;
    if u_real <= 0.0 {
        return Ok(0.0);
    }
    let u_imag = u_value(s, Complex64::new(0.0, r))?;
    if u_imag >= 0.0 {
        return Ok(FRAC_PI_2);
    }
    // u is strictly decreasing in φ: unique zero in (0, π/2)
    let mut lo = 0.0;
    let mut hi = FRAC_PI_2;
    while hi - lo > PHI_TOLERANCE {
        let mid = 0.5 * (lo + hi);
        let u_mid = u_value(s, Complex64::from_polar(r, mid))?;
        if u_mid > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

fn wrap_to_pi(x: f64) -> f64 {
    x - 2.0 * PI * (x / (2.0 * PI)).round()
}

/// Branch point and its unwrapped argument, continued from `reference`.
fn branch_sample(
    s: &StructuredFunction,
    r: f64,
    reference: Option<f64>,
) -> Result<LocusSample, LocusError> {
    let phi = l_of_r(s, r)?;
    let z = Complex64::from_polar(r, phi);
    let u_residual = u_value(s, z)?;
    let principal = s.eval_r(z)?.arg();
    let arg_unwrapped = match reference {
        None => principal,
        Some(prev) => prev + wrap_to_pi(principal - prev),
    };
    Ok(LocusSample {
        r,
        phi,
        u_residual,
        arg_unwrapped,
    })
}

/// Trace the branch over a geometric grid of `n_samples` radii, continuing
/// the argument by nearest-branch unwrapping with adaptive midpoint
/// insertion wherever neighbouring samples differ by more than `π/2`.
pub fn trace_branch(
    s: &StructuredFunction,
    r_min: f64,
    r_max: f64,
    n_samples: usize,
) -> Result<Vec<LocusSample>, LocusError> {
    assert!(r_min > 0.0 && r_max > r_min && n_samples >= 2);
    if s.is_degenerate_pair() {
        return Err(LocusError::DegenerateMonotonicity);
    }

    let nudge = |mut r: f64| {
        for root in s.axis_singularity_radii() {
            if (r - root).abs() < PUNCTURE * root {
                r = if r >= root {
                    root * (1.0 + 2.0 * PUNCTURE)
                } else {
                    root * (1.0 - 2.0 * PUNCTURE)
                };
            }
        }
        r
    };

    let ratio = r_max / r_min;
    let mut samples = Vec::with_capacity(n_samples);
    let first = branch_sample(s, nudge(r_min), None)?;
    samples.push(first);
    for i in 1..n_samples {
        let r = nudge(r_min * ratio.powf(i as f64 / (n_samples - 1) as f64));
        let prev = *samples.last().expect("nonempty");
        connect(s, prev, r, 0, &mut samples)?;
    }
    Ok(samples)
}

/// Extend the chain from `prev` to radius `r`, splitting geometrically while
/// the argument moves by more than `π/2` in one step.
fn connect(
    s: &StructuredFunction,
    prev: LocusSample,
    r: f64,
    depth: u32,
    out: &mut Vec<LocusSample>,
) -> Result<(), LocusError> {
    let candidate = branch_sample(s, r, Some(prev.arg_unwrapped))?;
    let delta = candidate.arg_unwrapped - prev.arg_unwrapped;
    if delta.abs() <= FRAC_PI_2 {
        out.push(candidate);
        return Ok(());
    }
    if depth >= REFINE_DEPTH {
        return Err(LocusError::UnresolvedJump {
            r_lo: prev.r,
            r_hi: r,
        });
    }
    let mid = (prev.r * r).sqrt();
    connect(s, prev, mid, depth + 1, out)?;
    let new_prev = *out.last().expect("midpoint was pushed");
    connect(s, new_prev, r, depth + 1, out)
}

/// Violations found by [`check_arg_monotone`].
#[derive(Clone, Debug, Default)]
pub struct MonotoneReport {
    /// `(left index, decrease)` for every adjacent argument drop beyond 1e−9.
    pub violations: Vec<(usize, f64)>,
    /// `(left index, |Δ|)` where both endpoints are flat yet the argument moved.
    pub flat_violations: Vec<(usize, f64)>,
}

impl MonotoneReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty() && self.flat_violations.is_empty()
    }
}

/// Check that the unwrapped argument never decreases and stays constant on
/// flat stretches of `l`.
pub fn check_arg_monotone(samples: &[LocusSample]) -> MonotoneReport {
    let mut report = MonotoneReport::default();
    let is_flat = |phi: f64| phi == 0.0 || phi == FRAC_PI_2;
    for (i, pair) in samples.windows(2).enumerate() {
        let delta = pair[1].arg_unwrapped - pair[0].arg_unwrapped;
        if delta < -1e-9 {
            report.violations.push((i, -delta));
        }
        if is_flat(pair[0].phi) && is_flat(pair[1].phi) && delta.abs() >= 1e-9 {
            report.flat_violations.push((i, delta.abs()));
        }
    }
    report
}

/// The four problem targets in branch coordinates, and the reflections that
/// carry a first-quadrant solution into each closed quadrant.
fn targets(arg_c: f64) -> [(f64, Quadrant); 4] {
    [
        (arg_c, Quadrant::Q1),
        (PI - arg_c, Quadrant::Q2),
        (PI + arg_c, Quadrant::Q3),
        (-arg_c, Quadrant::Q4),
    ]
}

fn reflect(z: Complex64, target: Quadrant) -> Complex64 {
    match target {
        Quadrant::Q1 => z,
        Quadrant::Q2 => -z.conj(),
        Quadrant::Q3 => -z,
        Quadrant::Q4 => z.conj(),
    }
}

fn target_value(c: Complex64, target: Quadrant) -> Complex64 {
    match target {
        Quadrant::Q1 => c,
        Quadrant::Q2 => -c.conj(),
        Quadrant::Q3 => -c,
        Quadrant::Q4 => c.conj(),
    }
}

/// Locate every zero of `F` whose branch radius lies in `[r_min, r_max]`, as
/// c-points of `R` along the traced branch.
pub fn locate_c_points(
    s: &StructuredFunction,
    r_min: f64,
    r_max: f64,
) -> Result<Vec<CPoint>, LocusError> {
    let samples = trace_branch(s, r_min, r_max, default_samples(r_min, r_max))?;
    let c = s.constant_c().value();
    let arg_c = c.arg();
    let mut found: Vec<(Complex64, Quadrant, f64, u32)> = Vec::new();

    // strict crossings of each target level on the monotone branch
    for pair in samples.windows(2) {
        let (a, b) = (pair[0], pair[1]);
        if b.arg_unwrapped <= a.arg_unwrapped {
            continue;
        }
        for (t, quadrant) in targets(arg_c) {
            let k_min = ((a.arg_unwrapped - t) / (2.0 * PI)).ceil() as i64;
            let k_max = ((b.arg_unwrapped - t) / (2.0 * PI)).floor() as i64;
            for k in k_min..=k_max {
                let level = t + 2.0 * PI * k as f64;
                if level < a.arg_unwrapped || level > b.arg_unwrapped {
                    continue;
                }
                let z = bisect_crossing(s, a, b, level)?;
                found.push((z, quadrant, z.norm(), 1));
            }
        }
    }

    // flat runs sitting exactly at a target level: junction endpoints and
    // tangential touches are the axis zeros
    let flat_points = flat_run_points(s, &samples)?;
    for (z, mult) in flat_points {
        let r_val = s.eval_r(z)?;
        for (_, quadrant) in targets(arg_c) {
            if (r_val - target_value(c, quadrant)).norm() < C_POINT_TOLERANCE {
                found.push((z, quadrant, z.norm(), mult));
            }
        }
    }

    // validate against R, reflect into place, deduplicate by location
    let mut points: Vec<CPoint> = Vec::new();
    for (z, quadrant, branch_r, mult) in found {
        let value = s.eval_r(z)?;
        if (value - target_value(c, quadrant)).norm() >= C_POINT_TOLERANCE {
            continue;
        }
        let location = reflect(z, quadrant);
        let duplicate = points.iter_mut().find(|p| {
            (p.location - location).norm() < 1e-7 * 1.0_f64.max(location.norm())
        });
        match duplicate {
            Some(p) => p.multiplicity_hint = p.multiplicity_hint.max(mult),
            None => points.push(CPoint {
                location,
                sector: sector_of(location, crate::verdict::ZERO_AXIS_TOLERANCE),
                target: quadrant,
                branch_r,
                multiplicity_hint: mult,
            }),
        }
    }
    points.sort_by(|p, q| {
        (p.branch_r, p.target.index())
            .partial_cmp(&(q.branch_r, q.target.index()))
            .expect("finite radii")
    });
    Ok(points)
}

fn default_samples(r_min: f64, r_max: f64) -> usize {
    let decades = (r_max / r_min).log10().abs().max(0.5);
    ((decades * 220.0) as usize).clamp(64, 4096)
}

/// Bisection for the branch radius where the unwrapped argument reaches
/// `level`; monotone between the bracketing samples. Returns the evaluated
/// branch point closest to the level, so a crossing that coincides with a
/// guarded singular radius still resolves to just outside the guard.
fn bisect_crossing(
    s: &StructuredFunction,
    a: LocusSample,
    b: LocusSample,
    level: f64,
) -> Result<Complex64, LocusError> {
    let mut lo = (a.r, a.arg_unwrapped, a.phi);
    let mut hi = (b.r, b.arg_unwrapped, b.phi);
    let mut best = if (a.arg_unwrapped - level).abs() <= (b.arg_unwrapped - level).abs() {
        (a.arg_unwrapped - level, a.r, a.phi)
    } else {
        (b.arg_unwrapped - level, b.r, b.phi)
    };
    for _ in 0..80 {
        if hi.0 - lo.0 <= 1e-13 * lo.0 {
            break;
        }
        let mut mid_r = (lo.0 * hi.0).sqrt();
        let sample = match branch_sample(s, mid_r, Some(lo.1)) {
            Ok(sample) => sample,
            Err(LocusError::SingularRadius { .. }) => {
                // step off the guard and retry; give up on a second hit
                mid_r = lo.0 + 0.37 * (hi.0 - lo.0);
                match branch_sample(s, mid_r, Some(lo.1)) {
                    Ok(sample) => sample,
                    Err(LocusError::SingularRadius { .. }) => break,
                    Err(e) => return Err(e),
                }
            }
            Err(e) => return Err(e),
        };
        if (sample.arg_unwrapped - level).abs() < best.0.abs() {
            best = (sample.arg_unwrapped - level, sample.r, sample.phi);
        }
        if sample.arg_unwrapped < level {
            lo = (sample.r, sample.arg_unwrapped, sample.phi);
        } else {
            hi = (sample.r, sample.arg_unwrapped, sample.phi);
        }
    }
    Ok(Complex64::from_polar(best.1, best.2))
}

/// Zeros sitting on flat stretches: the junction radii where the axis value
/// of `u` crosses zero, plus tangential touches inside a run.
fn flat_run_points(
    s: &StructuredFunction,
    samples: &[LocusSample],
) -> Result<Vec<(Complex64, u32)>, LocusError> {
    let mut out = Vec::new();
    let axis_point = |r: f64, phi: f64| {
        if phi == 0.0 {
            Complex64::new(r, 0.0)
        } else {
            Complex64::new(0.0, r)
        }
    };

    let mut i = 0;
    while i < samples.len() {
        let phi = samples[i].phi;
        if phi != 0.0 && phi != FRAC_PI_2 {
            i += 1;
            continue;
        }
        let mut j = i;
        while j + 1 < samples.len() && samples[j + 1].phi == phi {
            j += 1;
        }
        // entry junction: previous sample is interior, so u_axis changes sign
        if i > 0 && samples[i - 1].phi != 0.0 && samples[i - 1].phi != FRAC_PI_2 {
            let r = bisect_axis_zero(s, phi, samples[i - 1].r, samples[i].r)?;
            out.push((axis_point(r, phi), 1));
        }
        // exit junction
        if j + 1 < samples.len()
            && samples[j + 1].phi != 0.0
            && samples[j + 1].phi != FRAC_PI_2
        {
            let r = bisect_axis_zero(s, phi, samples[j].r, samples[j + 1].r)?;
            out.push((axis_point(r, phi), 1));
        }
        // interior touches: local maxima of u_axis reaching 0
        for k in (i + 1)..j {
            let (um, u0, up) = (
                samples[k - 1].u_residual,
                samples[k].u_residual,
                samples[k + 1].u_residual,
            );
            if u0 >= um && u0 >= up && u0 > -1e-4 {
                let (r, peak) =
                    maximize_axis(s, phi, samples[k - 1].r, samples[k + 1].r)?;
                if peak.abs() < 1e-9 {
                    out.push((axis_point(r, phi), 2));
                }
            }
        }
        i = j + 1;
    }
    Ok(out)
}

fn bisect_axis_zero(
    s: &StructuredFunction,
    phi: f64,
    r_a: f64,
    r_b: f64,
) -> Result<f64, LocusError> {
    let point = |r: f64| {
        if phi == 0.0 {
            Complex64::new(r, 0.0)
        } else {
            Complex64::new(0.0, r)
        }
    };
    let mut lo = r_a;
    let mut hi = r_b;
    let mut u_lo = u_value(s, point(lo))?;
    for _ in 0..100 {
        if hi - lo <= 1e-14 * lo {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let u_mid = u_value(s, point(mid))?;
        if (u_mid > 0.0) == (u_lo > 0.0) {
            lo = mid;
            u_lo = u_mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Golden-section maximization of the axis value of `u` on `[r_a, r_b]`.
fn maximize_axis(
    s: &StructuredFunction,
    phi: f64,
    r_a: f64,
    r_b: f64,
) -> Result<(f64, f64), LocusError> {
    let point = |r: f64| {
        if phi == 0.0 {
            Complex64::new(r, 0.0)
        } else {
            Complex64::new(0.0, r)
        }
    };
    let inv_phi = 0.618_033_988_749_894_9;
    let mut a = r_a;
    let mut b = r_b;
    let mut c1 = b - inv_phi * (b - a);
    let mut c2 = a + inv_phi * (b - a);
    let mut f1 = u_value(s, point(c1))?;
    let mut f2 = u_value(s, point(c2))?;
    for _ in 0..120 {
        if (b - a).abs() <= 1e-13 * a.abs().max(1.0) {
            break;
        }
        if f1 < f2 {
            a = c1;
            c1 = c2;
            f1 = f2;
            c2 = a + inv_phi * (b - a);
            f2 = u_value(s, point(c2))?;
        } else {
            b = c2;
            c2 = c1;
            f2 = f1;
            c1 = b - inv_phi * (b - a);
            f1 = u_value(s, point(c1))?;
        }
    }
    let r = 0.5 * (a + b);
    Ok((r, u_value(s, point(r))?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c64(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn one_factor() -> StructuredFunction {
        // F = 1 + z + z², R = (1 + z²)/z
        StructuredFunction::build(c64(1.0, 0.0), vec![1.0], c64(1.0, 0.0), 0, vec![]).unwrap()
    }

    #[test]
    fn u_value_examples() {
        let s = StructuredFunction::build(c64(1.0, 0.0), vec![], c64(1.0, 0.0), 0, vec![])
            .unwrap();
        let u = u_value(&s, c64(2.0, 0.0)).unwrap();
        assert!((u - 0.5_f64.ln()).abs() < 1e-14);

        let s = one_factor();
        let golden = (5.0_f64.sqrt() - 1.0) / 2.0;
        assert!(u_value(&s, c64(0.0, golden)).unwrap().abs() < 1e-14);
        assert!((u_value(&s, c64(1.0, 0.0)).unwrap() - 2.0_f64.ln()).abs() < 1e-14);
    }

    #[test]
    fn l_examples() {
        let s = one_factor();
        assert_eq!(l_of_r(&s, 0.01).unwrap(), FRAC_PI_2);
        let phi = l_of_r(&s, 1.0 - 1e-7).unwrap();
        // at r = 1 the level angle is π/3 (|1 + e^{2iφ}| = 1 forces cos φ = 1/2)
        assert!((phi - PI / 3.0).abs() < 1e-5, "phi = {phi}");

        let degenerate =
            StructuredFunction::build(c64(1.0, 0.0), vec![], c64(1.0, 0.0), 0, vec![]).unwrap();
        assert!(matches!(
            l_of_r(&degenerate, 0.7),
            Err(LocusError::DegenerateMonotonicity)
        ));
    }

    #[test]
    fn trace_small_radii_is_flat_at_minus_half_pi() {
        let s = one_factor();
        let samples = trace_branch(&s, 0.01, 0.6, 40).unwrap();
        for sample in &samples {
            assert_eq!(sample.phi, FRAC_PI_2);
            assert!((sample.arg_unwrapped + FRAC_PI_2).abs() < 1e-12);
        }
    }

    #[test]
    fn trace_monotone_and_increasing_only_on_interior() {
        let s = one_factor();
        let samples = trace_branch(&s, 0.01, 3.0, 200).unwrap();
        let report = check_arg_monotone(&samples);
        assert!(report.is_clean(), "report: {report:?}");
        // argument must actually move somewhere (the interior stretch)
        let span = samples.last().unwrap().arg_unwrapped - samples[0].arg_unwrapped;
        assert!(span > 1.0, "span = {span}");
    }

    #[test]
    fn monotone_checker_flags_injected_decrease() {
        let mut samples = Vec::new();
        for k in 0..10 {
            samples.push(LocusSample {
                r: 1.0 + k as f64 * 0.1,
                phi: 0.3,
                u_residual: 0.0,
                arg_unwrapped: k as f64 * 0.05,
            });
        }
        assert!(check_arg_monotone(&samples).is_clean());
        samples[5].arg_unwrapped -= 0.1;
        let report = check_arg_monotone(&samples);
        assert_eq!(report.violations.len() + report.flat_violations.len(), 1);
    }

    #[test]
    fn c_points_of_the_analytic_witness() {
        // zeros of 1 + z + z² at e^{±2πi/3}; branch point r = 1, φ = π/3
        let s = one_factor();
        let points = locate_c_points(&s, 0.2, 2.5).unwrap();
        assert_eq!(points.len(), 2, "points: {points:?}");
        let expected = [
            Complex64::from_polar(1.0, 2.0 * PI / 3.0),
            Complex64::from_polar(1.0, -2.0 * PI / 3.0),
        ];
        for want in expected {
            assert!(
                points
                    .iter()
                    .any(|p| (p.location - want).norm() < 1e-7),
                "missing {want}, got {points:?}"
            );
        }
        for p in &points {
            assert!(s.eval_f_big(p.location).unwrap().norm() < 1e-8);
            assert!((p.branch_r - 1.0).abs() < 1e-6);
        }
    }

    #[test]
    fn degenerate_pair_propagates() {
        let s = StructuredFunction::build(c64(1.0, 0.0), vec![], c64(1.0, 0.0), 0, vec![])
            .unwrap();
        assert!(matches!(
            locate_c_points(&s, 0.1, 2.0),
            Err(LocusError::DegenerateMonotonicity)
        ));
    }

    #[test]
    fn u_symmetry() {
        let s = one_factor();
        for &(re, im) in &[(0.4, 0.8), (1.3, -0.2), (-0.7, 1.1), (2.0, 2.0)] {
            let z = c64(re, im);
            let u = u_value(&s, z).unwrap();
            for image in [z.conj(), -z, -z.conj()] {
                assert!((u_value(&s, image).unwrap() - u).abs() < 1e-12);
            }
        }
    }
}
