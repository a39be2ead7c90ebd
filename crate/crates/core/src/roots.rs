//! All-root finding for truncated series, with trust-disk gating.
//!
//! The solver is a simultaneous-iteration (Aberth–Ehrlich) method: every root
//! approximant is updated from a Newton correction repelled by all other
//! approximants, which converges cubically for simple zeros. Updates computed
//! within one sweep are applied synchronously at sweep end, so the iteration
//! is deterministic regardless of evaluation order.
//!
//! Zeros of a truncation are only believed inside the trust disk of the
//! series: the largest radius at which the last retained term is provably
//! negligible against the dominant one and the term profile is still decaying.
//! Roots outside `0.8 ×` that radius are reported separately, never silently
//! dropped.

use num_complex::Complex64;
use thiserror::Error;

use crate::model::{robust_div, ModelError, Provenance, SeriesFunction, StructuredFunction};

/// Safety factor applied to the trust radius before accepting roots.
pub const TRUST_SAFETY: f64 = 0.8;

/// Relative tail threshold in the trust-radius rule.
const TAIL_THRESHOLD: f64 = 1e-13;

/// Relative residual every accepted root must satisfy.
const RESIDUAL_TOLERANCE: f64 = 1e-11;

/// Maximum Aberth sweeps before giving up.
const MAX_SWEEPS: u32 = 500;

/// Clustering radius factor for multiplicity detection.
const CLUSTER_RADIUS: f64 = 1e-6;

/// Modulus tie tolerance used when sorting zero lists.
pub const SORT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Error)]
pub enum RootsError {
    #[error("series is constant after stripping trailing zero coefficients")]
    ConstantSeries,
    #[error("root iteration did not converge in {sweeps} sweeps (worst residual {worst_residual:.3e})")]
    NoConvergence { sweeps: u32, worst_residual: f64 },
    #[error("Newton refinement diverged from {start} (last step {last_step:.3e})")]
    NewtonDiverged { start: Complex64, last_step: f64 },
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// Disk in which zeros of a truncation are trusted.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TrustDisk {
    pub radius: f64,
    pub tail_bound: f64,
}

/// A zero with its multiplicity.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ZeroEntry {
    pub location: Complex64,
    pub multiplicity: u32,
}

/// Zeros sorted by modulus, ties (within `sort_tolerance · scale`) by
/// ascending principal argument.
#[derive(Clone, Debug, PartialEq)]
pub struct ZeroList {
    entries: Vec<ZeroEntry>,
    sort_tolerance: f64,
}

impl ZeroList {
    /// Cluster raw roots into multiplicity entries and sort.
    pub fn from_raw(raw: &[Complex64]) -> ZeroList {
        cluster_multiplicities(raw, SORT_TOLERANCE)
    }

    pub fn entries(&self) -> &[ZeroEntry] {
        &self.entries
    }

    pub fn sort_tolerance(&self) -> f64 {
        self.sort_tolerance
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Total zero count with multiplicity.
    pub fn total_count(&self) -> usize {
        self.entries.iter().map(|e| e.multiplicity as usize).sum()
    }

    /// Zeros repeated according to multiplicity, in list order.
    pub fn expanded(&self) -> Vec<Complex64> {
        let mut out = Vec::with_capacity(self.total_count());
        for e in &self.entries {
            for _ in 0..e.multiplicity {
                out.push(e.location);
            }
        }
        out
    }

    /// Keep the `m` smallest-modulus entries.
    pub fn truncated(&self, m: usize) -> ZeroList {
        ZeroList {
            entries: self.entries.iter().take(m).copied().collect(),
            sort_tolerance: self.sort_tolerance,
        }
    }

    fn sort(&mut self) {
        self.entries.sort_by(|x, y| {
            x.location
                .norm()
                .partial_cmp(&y.location.norm())
                .expect("finite moduli")
        });
        // re-sort near-tie runs by principal argument
        let tol = self.sort_tolerance;
        let mut start = 0;
        while start < self.entries.len() {
            let mut end = start + 1;
            while end < self.entries.len() {
                let prev = self.entries[end - 1].location.norm();
                let here = self.entries[end].location.norm();
                let scale = 1.0_f64.max(prev);
                if here - prev <= tol * scale {
                    end += 1;
                } else {
                    break;
                }
            }
            if end - start > 1 {
                self.entries[start..end].sort_by(|x, y| {
                    x.location
                        .arg()
                        .partial_cmp(&y.location.arg())
                        .expect("finite arguments")
                });
            }
            start = end;
        }
    }
}

/// Outcome of root finding: trusted zeros plus anything beyond the trust disk.
#[derive(Clone, Debug)]
pub struct FoundRoots {
    pub trusted: ZeroList,
    /// Roots of the truncation outside `0.8 ×` trust radius; these reflect the
    /// truncation, not necessarily the underlying function.
    pub unconfirmed: Vec<ZeroEntry>,
}

/// Trust radius for raw coefficients. Exact polynomials get `+∞`.
///
/// For truncations the radius is the largest `r` (bisection) such that the
/// stripped last coefficient satisfies `|c_N| r^N < 1e−13 · max_k |c_k| r^k`
/// and the term profile `|c_k| r^k` is nonincreasing across the last ten
/// indices (consecutive nonzero coefficients only).
pub(crate) fn trust_radius_for(coeffs: &[Complex64], provenance: Provenance) -> f64 {
    if provenance == Provenance::ExactPolynomial {
        return f64::INFINITY;
    }
    let n = match coeffs.iter().rposition(|c| *c != Complex64::ZERO) {
        Some(n) => n,
        None => return f64::INFINITY,
    };
    if n == 0 {
        // constant plus exactly-zero tail: trusted everywhere
        return f64::INFINITY;
    }
    let log_abs: Vec<f64> = coeffs[..=n].iter().map(|c| c.norm().ln()).collect();

    let holds = |ln_r: f64| -> bool {
        let mut ln_max = f64::NEG_INFINITY;
        for (k, &la) in log_abs.iter().enumerate() {
            let v = la + k as f64 * ln_r;
            if v > ln_max {
                ln_max = v;
            }
        }
        let tail = log_abs[n] + n as f64 * ln_r;
        if !(tail < TAIL_THRESHOLD.ln() + ln_max) {
            return false;
        }
        let lo = n.saturating_sub(9);
        for k in lo..n {
            if log_abs[k].is_finite() && log_abs[k + 1].is_finite() {
                let vk = log_abs[k] + k as f64 * ln_r;
                let vk1 = log_abs[k + 1] + (k + 1) as f64 * ln_r;
                if vk1 > vk {
                    return false;
                }
            }
        }
        true
    };

    // bracket in log space, then bisect
    let mut lo = 0.0_f64; // ln r = 0, i.e. r = 1
    if !holds(lo) {
        let mut shrunk = false;
        while lo > -700.0 {
            lo -= 2.0;
            if holds(lo) {
                shrunk = true;
                break;
            }
        }
        if !shrunk {
            return 0.0;
        }
    }
    let mut hi = lo;
    loop {
        let next = hi + 2.0;
        if next > 700.0 {
            return f64::INFINITY;
        }
        if holds(next) {
            hi = next;
        } else {
            break;
        }
    }
    let mut bad = hi + 2.0;
    let mut good = hi;
    for _ in 0..80 {
        let mid = 0.5 * (good + bad);
        if holds(mid) {
            good = mid;
        } else {
            bad = mid;
        }
    }
    good.exp()
}

/// Trust disk of a series, restating the stored radius with its tail bound.
pub fn trust_radius(series: &SeriesFunction) -> TrustDisk {
    let radius = series.trust_radius();
    if !radius.is_finite() {
        return TrustDisk {
            radius,
            tail_bound: 0.0,
        };
    }
    let coeffs = series.coeffs();
    let n = coeffs
        .iter()
        .rposition(|c| *c != Complex64::ZERO)
        .unwrap_or(0);
    let tail_bound = (coeffs[n].norm().ln() + n as f64 * radius.ln()).exp();
    TrustDisk { radius, tail_bound }
}

fn horner_with_deriv(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::ZERO;
    let mut dp = Complex64::ZERO;
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

fn eval_scale(coeffs: &[Complex64], z: Complex64) -> f64 {
    let r = z.norm();
    let mut acc = 0.0;
    for &c in coeffs.iter().rev() {
        acc = acc * r + c.norm();
    }
    acc
}

/// All roots of the truncated polynomial restricted to the trust disk.
///
/// Roots at the origin (leading zero coefficients) are handled exactly; the
/// remaining roots come from the simultaneous iteration started on a circle of
/// radius `(|c_0|/|c_N|)^{1/N}` with golden-angle phases.
pub fn find_roots(series: &SeriesFunction) -> Result<FoundRoots, RootsError> {
    let coeffs = series.coeffs();
    let top = coeffs
        .iter()
        .rposition(|c| *c != Complex64::ZERO)
        .ok_or(RootsError::ConstantSeries)?;
    if top == 0 {
        return Err(RootsError::ConstantSeries);
    }
    let bottom = coeffs
        .iter()
        .position(|c| *c != Complex64::ZERO)
        .expect("nonzero coefficient exists");
    let stripped = &coeffs[bottom..=top];

    let mut raw: Vec<Complex64> = Vec::with_capacity(top);
    for _ in 0..bottom {
        raw.push(Complex64::ZERO);
    }
    if stripped.len() > 1 {
        raw.extend(aberth_all_roots(stripped)?);
    }

    let limit = TRUST_SAFETY * series.trust_radius();
    let (inside, outside): (Vec<Complex64>, Vec<Complex64>) =
        raw.into_iter().partition(|z| z.norm() <= limit);

    Ok(FoundRoots {
        trusted: ZeroList::from_raw(&inside),
        unconfirmed: ZeroList::from_raw(&outside).entries().to_vec(),
    })
}

/// Golden angle in radians; irrational spacing breaks the symmetry of the
/// highly symmetric inputs this crate sees.
const GOLDEN_ANGLE: f64 = 2.399_963_229_728_653;

/// Initial moduli from the upper convex hull of `(k, ln|c_k|)`: each hull
/// segment of width `d` contributes `d` starting points at the radius where
/// its two end terms balance. A single circle at `(|c_0|/|c_N|)^{1/N}` is the
/// one-segment special case but strands the iteration when the root moduli
/// span many decades, as q-exponential truncations do.
fn initial_guesses(coeffs: &[Complex64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let points: Vec<(usize, f64)> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| **c != Complex64::ZERO)
        .map(|(k, c)| (k, c.norm().ln()))
        .collect();
    // upper hull, left to right
    let mut hull: Vec<(usize, f64)> = Vec::with_capacity(points.len());
    for &p in &points {
        while hull.len() >= 2 {
            let (x1, y1) = hull[hull.len() - 2];
            let (x2, y2) = hull[hull.len() - 1];
            let cross = (x2 - x1) as f64 * (p.1 - y1) - (p.0 - x1) as f64 * (y2 - y1);
            if cross >= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    let mut guesses = Vec::with_capacity(n);
    for w in hull.windows(2) {
        let (k1, u1) = w[0];
        let (k2, u2) = w[1];
        let count = k2 - k1;
        let radius = ((u1 - u2) / count as f64).exp();
        for _ in 0..count {
            let index = guesses.len();
            guesses.push(Complex64::from_polar(
                radius,
                0.5 + GOLDEN_ANGLE * index as f64,
            ));
        }
    }
    debug_assert_eq!(guesses.len(), n);
    guesses
}

fn aberth_all_roots(coeffs: &[Complex64]) -> Result<Vec<Complex64>, RootsError> {
    let n = coeffs.len() - 1;
    let mut z = initial_guesses(coeffs);
    let mut steps = vec![Complex64::ZERO; n];

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let mut all_small = true;
        for k in 0..n {
            let (p, dp) = horner_with_deriv(coeffs, z[k]);
            let scale = eval_scale(coeffs, z[k]);
            if p == Complex64::ZERO || p.norm() < 1e-15 * scale {
                steps[k] = Complex64::ZERO;
                continue;
            }
            let newton = if dp == Complex64::ZERO {
                // critical point: fall back to a nudge
                Complex64::from_polar(1e-3 * (1.0 + z[k].norm()), GOLDEN_ANGLE * k as f64)
            } else {
                robust_div(p, dp)
            };
            let mut repulsion = Complex64::ZERO;
            for (j, &zj) in z.iter().enumerate() {
                if j != k {
                    repulsion += robust_div(Complex64::ONE, z[k] - zj);
                }
            }
            let denom = 1.0 - newton * repulsion;
            let w = if denom.norm() > 1e-290 {
                robust_div(newton, denom)
            } else {
                newton
            };
            let w = if w.is_finite() {
                w
            } else {
                Complex64::from_polar(1e-3 * (1.0 + z[k].norm()), GOLDEN_ANGLE * k as f64)
            };
            if w.norm() > 1e-14 * (1.0 + z[k].norm()) {
                all_small = false;
            }
            steps[k] = w;
        }
        // synchronous application keeps sweeps order-independent
        for k in 0..n {
            let candidate = z[k] - steps[k];
            if candidate.is_finite() {
                z[k] = candidate;
            }
        }
        if all_small {
            converged = true;
            break;
        }
    }

    // final Newton polish on the polynomial itself
    for zk in z.iter_mut() {
        for _ in 0..3 {
            let (p, dp) = horner_with_deriv(coeffs, *zk);
            if dp == Complex64::ZERO {
                break;
            }
            let step = robust_div(p, dp);
            if !step.is_finite() || step.norm() > 0.5 * (1.0 + zk.norm()) {
                break;
            }
            *zk -= step;
        }
    }

    let mut worst = 0.0_f64;
    for &zk in &z {
        let (p, _) = horner_with_deriv(coeffs, zk);
        let rel = p.norm() / eval_scale(coeffs, zk);
        if rel > worst {
            worst = rel;
        }
    }
    if worst > RESIDUAL_TOLERANCE || !converged && worst > RESIDUAL_TOLERANCE {
        return Err(RootsError::NoConvergence {
            sweeps: MAX_SWEEPS,
            worst_residual: worst,
        });
    }
    Ok(z)
}

/// Merge raw roots lying within `1e−6 · max(1, |z|)` of each other; cluster
/// centers are arithmetic means, multiplicities are cluster sizes.
pub fn cluster_multiplicities(raw: &[Complex64], sort_tolerance: f64) -> ZeroList {
    let n = raw.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let scale = 1.0_f64.max(0.5 * (raw[i].norm() + raw[j].norm()));
            if (raw[i] - raw[j]).norm() < CLUSTER_RADIUS * scale {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri.max(rj)] = ri.min(rj);
                }
            }
        }
    }
    let mut sums: Vec<(Complex64, u32)> = vec![(Complex64::ZERO, 0); n];
    for i in 0..n {
        let r = find(&mut parent, i);
        sums[r].0 += raw[i];
        sums[r].1 += 1;
    }
    let entries: Vec<ZeroEntry> = sums
        .into_iter()
        .filter(|(_, count)| *count > 0)
        .map(|(sum, count)| ZeroEntry {
            location: sum / count as f64,
            multiplicity: count,
        })
        .collect();
    let mut list = ZeroList {
        entries,
        sort_tolerance,
    };
    list.sort();
    list
}

/// Newton refinement of an approximate zero on the exact structured function.
///
/// Iterates until `|step| < 1e−14·|z|` (40 iterations cap). A residual already
/// at rounding level is also accepted, which covers genuine double zeros where
/// the step cannot contract further.
pub fn polish_on_function(
    s: &StructuredFunction,
    z0: Complex64,
) -> Result<Complex64, RootsError> {
    let mut z = z0;
    let mut last_step = f64::INFINITY;
    for _ in 0..40 {
        let (value, deriv) = s.eval_f_big_with_deriv(z)?;
        let scale = local_scale(s, z);
        if value.norm() <= 1e-15 * scale {
            return Ok(z);
        }
        if deriv == Complex64::ZERO {
            break;
        }
        let step = robust_div(value, deriv);
        if !step.is_finite() {
            break;
        }
        z -= step;
        last_step = step.norm();
        if last_step < 1e-14 * z.norm() {
            return Ok(z);
        }
    }
    // accept a stalled iterate whose residual is at rounding level
    if let Ok(value) = s.eval_f_big(z) {
        if value.norm() <= 1e-12 * local_scale(s, z) {
            return Ok(z);
        }
    }
    Err(RootsError::NewtonDiverged {
        start: z0,
        last_step,
    })
}

/// `|f(z²)| + |z·g(z²)|`, the cancellation-free magnitude of `F` at `z`.
fn local_scale(s: &StructuredFunction, z: Complex64) -> f64 {
    let w = z * z;
    s.eval_f(w).norm() + (z * s.eval_g(w)).norm()
}

/// Expand a structured function, solve, and polish every simple zero on the
/// exact function. Cluster centers of multiple zeros are kept as-is.
pub fn roots_of_structured(s: &StructuredFunction) -> Result<FoundRoots, RootsError> {
    if s.is_degenerate_pair() {
        // F = f0 + z·g0 has the single zero −f0/g0
        let z = -s.f0() / s.g0();
        return Ok(FoundRoots {
            trusted: ZeroList::from_raw(&[z]),
            unconfirmed: Vec::new(),
        });
    }
    let series = s.expand_to_series();
    let found = find_roots(&series)?;
    let mut polished: Vec<Complex64> = Vec::with_capacity(found.trusted.total_count());
    for entry in found.trusted.entries() {
        if entry.multiplicity == 1 {
            polished.push(polish_on_function(s, entry.location)?);
        } else {
            for _ in 0..entry.multiplicity {
                polished.push(entry.location);
            }
        }
    }
    Ok(FoundRoots {
        trusted: ZeroList::from_raw(&polished),
        unconfirmed: found.unconfirmed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Provenance;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn series(values: &[(f64, f64)], provenance: Provenance) -> SeriesFunction {
        SeriesFunction::new(
            values.iter().map(|&(re, im)| c(re, im)).collect(),
            provenance,
        )
        .unwrap()
    }

    #[test]
    fn trust_radius_polynomial_is_infinite() {
        let s = series(&[(1.0, 0.0), (1.0, 0.0), (1.0, 0.0)], Provenance::ExactPolynomial);
        assert_eq!(trust_radius(&s).radius, f64::INFINITY);
        assert_eq!(trust_radius(&s).tail_bound, 0.0);
    }

    #[test]
    fn trust_radius_zero_tail_is_exact() {
        let s = series(
            &[(1.0, 0.0), (0.0, 0.0), (0.0, 0.0), (0.0, 0.0)],
            Provenance::User,
        );
        assert_eq!(trust_radius(&s).radius, f64::INFINITY);
    }

    #[test]
    fn trust_radius_truncation_is_finite_and_tail_holds() {
        // q-exponential q = 0.5, N = 40
        let q = c(0.5, 0.0);
        let mut coeffs = vec![Complex64::ONE];
        for k in 1..=40usize {
            let prev = coeffs[k - 1];
            coeffs.push(prev * q.powu(k as u32 - 1) / k as f64);
        }
        let s = SeriesFunction::new(coeffs.clone(), Provenance::QExponential).unwrap();
        let disk = trust_radius(&s);
        assert!(disk.radius.is_finite() && disk.radius > 1.0);
        // regression value from the bisection rule
        assert!(
            (disk.radius - 4.433_898_737_8e10).abs() < 1e3,
            "radius = {:e}",
            disk.radius
        );
        // invariant: tail bound below 1e−12 of the dominant term
        let max_term = (0..=40)
            .map(|k| coeffs[k].norm() * disk.radius.powi(k as i32))
            .fold(0.0_f64, f64::max);
        assert!(disk.tail_bound < 1e-12 * max_term);
    }

    #[test]
    fn quadratic_roots() {
        let s = series(&[(1.0, 0.0), (1.0, 0.0), (1.0, 0.0)], Provenance::ExactPolynomial);
        let found = find_roots(&s).unwrap();
        assert_eq!(found.trusted.total_count(), 2);
        assert!(found.unconfirmed.is_empty());
        let roots = found.trusted.expanded();
        let expected = [
            c(-0.5, -(3.0_f64.sqrt()) / 2.0),
            c(-0.5, 3.0_f64.sqrt() / 2.0),
        ];
        for (got, want) in roots.iter().zip(expected.iter()) {
            assert!((got - want).norm() < 1e-12, "{got} vs {want}");
        }
    }

    #[test]
    fn double_root_is_clustered() {
        let s = series(&[(1.0, 0.0), (2.0, 0.0), (1.0, 0.0)], Provenance::ExactPolynomial);
        let found = find_roots(&s).unwrap();
        assert_eq!(found.trusted.len(), 1);
        let entry = found.trusted.entries()[0];
        assert_eq!(entry.multiplicity, 2);
        assert!((entry.location - c(-1.0, 0.0)).norm() < 1e-6);
    }

    #[test]
    fn appendix_polynomial_has_eight_simple_roots() {
        let s = StructuredFunction::build(
            c(60.0, 0.0),
            vec![2.0, 2.5, 3.0, 4.0],
            c(5.0, 5.0),
            0,
            vec![1.0, 5.0],
        )
        .unwrap();
        let found = roots_of_structured(&s).unwrap();
        assert_eq!(found.trusted.len(), 8);
        assert!(found.trusted.entries().iter().all(|e| e.multiplicity == 1));
        for e in found.trusted.entries() {
            let residual = s.eval_f_big(e.location).unwrap().norm();
            let w = e.location * e.location;
            let scale = s.eval_f(w).norm() + (e.location * s.eval_g(w)).norm();
            assert!(residual < 1e-11 * scale.max(1.0));
        }
    }

    #[test]
    fn cluster_examples() {
        let list = cluster_multiplicities(
            &[c(-1.0 - 1e-9, 0.0), c(-1.0 + 1e-9, 0.0)],
            SORT_TOLERANCE,
        );
        assert_eq!(list.len(), 1);
        assert_eq!(list.entries()[0].multiplicity, 2);
        assert!((list.entries()[0].location - c(-1.0, 0.0)).norm() < 1e-12);

        let list = cluster_multiplicities(&[c(1.0, 0.0), c(2.0, 0.0)], SORT_TOLERANCE);
        assert_eq!(list.len(), 2);
        assert!(list.entries().iter().all(|e| e.multiplicity == 1));

        let list = cluster_multiplicities(
            &[c(0.5, 0.5), c(0.5 + 4e-10, 0.5), c(0.5, 0.5 - 4e-10)],
            SORT_TOLERANCE,
        );
        assert_eq!(list.len(), 1);
        assert_eq!(list.entries()[0].multiplicity, 3);
    }

    #[test]
    fn sorting_breaks_modulus_ties_by_argument() {
        let list = cluster_multiplicities(
            &[c(0.0, 1.0), c(1.0, 0.0), c(0.0, -1.0), c(-0.5, 0.0)],
            SORT_TOLERANCE,
        );
        let args: Vec<f64> = list.entries()[1..]
            .iter()
            .map(|e| e.location.arg())
            .collect();
        assert!((list.entries()[0].location - c(-0.5, 0.0)).norm() < 1e-15);
        assert!(args.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn polish_known_root() {
        let s = StructuredFunction::build(c(1.0, 0.0), vec![1.0], c(1.0, 0.0), 0, vec![]).unwrap();
        let target = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
        let z = polish_on_function(&s, c(-0.49, 0.87)).unwrap();
        assert!((z - target).norm() < 1e-13);
    }

    #[test]
    fn polish_far_start_is_flagged_or_lands_on_true_zero() {
        let s = StructuredFunction::build(c(1.0, 0.0), vec![1.0], c(1.0, 0.0), 0, vec![]).unwrap();
        match polish_on_function(&s, c(100.0, 0.0)) {
            Err(RootsError::NewtonDiverged { .. }) => {}
            Ok(z) => {
                // converged somewhere: must be a genuine zero of F
                assert!(s.eval_f_big(z).unwrap().norm() < 1e-10);
            }
            Err(other) => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn constant_series_is_rejected() {
        let s = series(&[(1.0, 0.0)], Provenance::ExactPolynomial);
        assert!(matches!(find_roots(&s), Err(RootsError::ConstantSeries)));
    }

    #[test]
    fn origin_roots_from_leading_zeros() {
        // z²(z − 1): coefficients [0, 0, −1, 1]
        let s = series(
            &[(0.0, 0.0), (0.0, 0.0), (-1.0, 0.0), (1.0, 0.0)],
            Provenance::ExactPolynomial,
        );
        let found = find_roots(&s).unwrap();
        assert_eq!(found.trusted.total_count(), 3);
        let origin = &found.trusted.entries()[0];
        assert_eq!(origin.multiplicity, 2);
        assert_eq!(origin.location, Complex64::ZERO);
        assert!((found.trusted.entries()[1].location - c(1.0, 0.0)).norm() < 1e-12);
    }
}
