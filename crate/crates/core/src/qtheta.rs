//! The q-exponential `F(z;q) = Σ q^{k(k−1)/2} z^k / k!` and everything built
//! on it: the binomial polynomial family, the defining functional equation
//! `F′(z) = F(qz)`, even/odd part interlacing, the negative-`q` zero facts,
//! root-of-unity representations with their quadratic-Gauss-sum constants,
//! and the conjecture reports for `q²` real.
//!
//! For `q = ρμ²` with `μⁿ = −1` and `μ²` a primitive `n`-th root of unity,
//! writing `Φ(z) = F(z;ρ)` the solution decomposes as
//!
//! ```text
//! F(z;q) = ν_μ Σ_{k=1}^{n} (−μ)^{−k²} Φ(−μ^{2k−1} z),
//! ν_μ = 1 / Σ_{k=1}^{n} (−μ)^{−k²},   |ν_μ| = 1/√n,
//! ```
//!
//! with `ν_μ⁻⁴ = n²` for odd `n` and `ν_μ⁴ = −n⁻²` for even `n`. The `n = 2`
//! specialization is `F(z;−ρ) = Φ_e(iz) − iΦ_o(iz)`; the plus-sign variant
//! fails the functional equation by many orders of magnitude, so the minus
//! variant is canonical here and the gap is part of the identity report.

use num_complex::Complex64;
use std::f64::consts::PI;
use thiserror::Error;

use crate::model::{robust_div, ConstantC, ModelError, Provenance, SeriesFunction};
use crate::roots::{self, FoundRoots, RootsError, ZeroEntry, ZeroList};
use crate::verdict::{self, DistributionReport, VerdictError};

#[derive(Debug, Error)]
pub enum QthetaError {
    #[error("invalid specification: {reason}")]
    BadSpec { reason: String },
    #[error("mu = {mu} is not admissible for n = {n} (need muⁿ = −1 with mu² primitive)")]
    NonPrimitiveMu { n: u32, mu: Complex64 },
    #[error("Gauss sum vanished for n = {n}; contradicts the modulus law")]
    ZeroSum { n: u32 },
    #[error("interlacing chain violated at position {index}: {lower} ≥ {upper}")]
    ChainViolation { index: usize, lower: f64, upper: f64 },
    #[error("property `{what}` violated: {witness}")]
    PropertyViolation { what: &'static str, witness: String },
    #[error("samples reach {needed} but the trusted radius is {trust}")]
    TrustRadiusExceeded { needed: f64, trust: f64 },
    #[error("requested {requested} trusted zeros, only {available} available")]
    InsufficientTrustedZeros { requested: usize, available: usize },
    #[error(transparent)]
    Roots(#[from] RootsError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Verdict(#[from] VerdictError),
}

/// Parameters of one q-exponential truncation.
#[derive(Clone, Copy, Debug)]
pub struct QSpec {
    q: Complex64,
    truncation: usize,
}

impl QSpec {
    /// Validate `0 < |q| ≤ 1` and a truncation order of at least 8.
    pub fn new(q: Complex64, truncation: usize) -> Result<Self, QthetaError> {
        let modulus = q.norm();
        if !(modulus > 0.0 && modulus <= 1.0 + 1e-12) || !q.is_finite() {
            return Err(QthetaError::BadSpec {
                reason: format!("|q| must lie in (0, 1], got {q}"),
            });
        }
        if truncation < 8 {
            return Err(QthetaError::BadSpec {
                reason: format!("truncation must be at least 8, got {truncation}"),
            });
        }
        Ok(QSpec { q, truncation })
    }

    pub fn q(&self) -> Complex64 {
        self.q
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }
}

/// Truncation of `F(z;q)`: coefficients `q^{k(k−1)/2}/k!`, accumulated
/// multiplicatively (`c_k = c_{k−1}·q^{k−1}/k`).
pub fn qexp_series(spec: &QSpec) -> SeriesFunction {
    let n = spec.truncation;
    let mut coeffs = Vec::with_capacity(n + 1);
    let mut value = Complex64::ONE;
    let mut q_power = Complex64::ONE; // q^{k−1} entering step k
    coeffs.push(value);
    for k in 1..=n {
        value = value * q_power / k as f64;
        coeffs.push(value);
        q_power *= spec.q;
    }
    SeriesFunction::new(coeffs, Provenance::QExponential).expect("leading coefficient is 1")
}

/// The exact binomial companion `P_N(z;q) = Σ binom(N,k) q^{k(k−1)/2} z^k`.
pub fn qexp_polynomial(n: usize, q: Complex64) -> SeriesFunction {
    let mut coeffs = Vec::with_capacity(n + 1);
    let mut binom = 1.0_f64;
    let mut value = Complex64::ONE;
    let mut q_power = Complex64::ONE;
    coeffs.push(value);
    for k in 1..=n {
        binom *= (n - k + 1) as f64 / k as f64;
        value *= q_power;
        q_power *= q;
        coeffs.push(binom * value);
    }
    SeriesFunction::new(coeffs, Provenance::ExactPolynomial).expect("leading coefficient is 1")
}

/// Residual of the functional equation `F′(z) = F(qz)` on the truncation.
#[derive(Clone, Debug)]
pub struct OdeReport {
    pub max_residual: f64,
    /// All samples sit within half the trust radius; outside that the
    /// residual says nothing about the entire function.
    pub within_trust: bool,
}

/// Max over samples of `|F′(z) − F(qz)|`, both sides from the truncation.
pub fn ode_residual(spec: &QSpec, samples: &[Complex64]) -> OdeReport {
    let series = qexp_series(spec);
    let derivative = series.derivative();
    let limit = 0.5 * series.trust_radius();
    let mut max_residual = 0.0_f64;
    let mut within_trust = true;
    for &z in samples {
        if z.norm() > limit {
            within_trust = false;
        }
        let residual = (derivative.eval(z) - series.eval(spec.q * z)).norm();
        max_residual = max_residual.max(residual);
    }
    OdeReport {
        max_residual,
        within_trust,
    }
}

/// Truncations of `χ_e` and `χ_o`: `χ_e` has coefficients `ρ^{k(2k−1)}/(2k)!`
/// and `χ_o` has `ρ^{k(2k+1)}/(2k+1)!`, so `Φ_e(w) = χ_e(w²)` and
/// `Φ_o(w) = w·χ_o(w²)` for `Φ = F(·;ρ)`.
pub fn chi_parts(rho: f64, n: usize) -> (SeriesFunction, SeriesFunction) {
    let mut even = Vec::with_capacity(n + 1);
    let mut odd = Vec::with_capacity(n + 1);
    let mut even_value = 1.0_f64;
    let mut odd_value = 1.0_f64;
    even.push(Complex64::new(even_value, 0.0));
    odd.push(Complex64::new(odd_value, 0.0));
    for k in 1..=n {
        let kf = k as f64;
        even_value *= rho.powi(4 * k as i32 - 3) / ((2.0 * kf) * (2.0 * kf - 1.0));
        odd_value *= rho.powi(4 * k as i32 - 1) / ((2.0 * kf) * (2.0 * kf + 1.0));
        even.push(Complex64::new(even_value, 0.0));
        odd.push(Complex64::new(odd_value, 0.0));
    }
    (
        SeriesFunction::new(even, Provenance::QExponential).expect("nonzero"),
        SeriesFunction::new(odd, Provenance::QExponential).expect("nonzero"),
    )
}

/// The interlacing chain of `χ_e`/`χ_o` zero magnitudes.
#[derive(Clone, Debug)]
pub struct InterlacingChain {
    pub betas: Vec<f64>,
    pub alphas: Vec<f64>,
    pub rho: f64,
    /// Minimum relative gap across the verified inequalities.
    pub min_margin: f64,
}

/// Check the combined chain `β₁ < ρ⁻²β₁ < α₁ < ρ⁻²α₁ < β₂ < …` for the first
/// `m` pairs (plain interlacing `β₁ < α₁ < β₂ < …` at the `ρ = 1` boundary).
pub fn interlacing_check(rho: f64, n: usize, m: usize) -> Result<InterlacingChain, QthetaError> {
    if !(rho > 0.0 && rho <= 1.0) {
        return Err(QthetaError::BadSpec {
            reason: format!("rho must lie in (0, 1], got {rho}"),
        });
    }
    let (chi_e, chi_o) = chi_parts(rho, n);
    let betas = negated_real_zeros(&chi_e, m, "chi_e zeros")?;
    let alphas = negated_real_zeros(&chi_o, m, "chi_o zeros")?;

    let mut chain: Vec<f64> = Vec::with_capacity(4 * m);
    let boundary = (1.0 - rho).abs() < 1e-14;
    for k in 0..m {
        if boundary {
            chain.push(betas[k]);
            chain.push(alphas[k]);
        } else {
            let inv = rho.powi(-2);
            chain.push(betas[k]);
            chain.push(inv * betas[k]);
            chain.push(alphas[k]);
            chain.push(inv * alphas[k]);
        }
    }
    let mut min_margin = f64::INFINITY;
    if chain[0] <= 0.0 {
        return Err(QthetaError::ChainViolation {
            index: 0,
            lower: 0.0,
            upper: chain[0],
        });
    }
    for (i, w) in chain.windows(2).enumerate() {
        if !(w[1] > w[0]) {
            return Err(QthetaError::ChainViolation {
                index: i + 1,
                lower: w[0],
                upper: w[1],
            });
        }
        min_margin = min_margin.min((w[1] - w[0]) / w[0].max(1.0));
    }
    Ok(InterlacingChain {
        betas,
        alphas,
        rho,
        min_margin,
    })
}

/// First `m` zeros of a series known to have only negative real zeros,
/// returned negated (so positive and ascending).
fn negated_real_zeros(
    series: &SeriesFunction,
    m: usize,
    what: &'static str,
) -> Result<Vec<f64>, QthetaError> {
    let found = roots::find_roots(series)?;
    let entries = found.trusted.entries();
    if entries.len() < m {
        return Err(QthetaError::InsufficientTrustedZeros {
            requested: m,
            available: entries.len(),
        });
    }
    let mut out = Vec::with_capacity(m);
    for e in entries.iter().take(m) {
        let z = e.location;
        if z.im.abs() > 1e-8 * z.norm() || z.re >= 0.0 {
            return Err(QthetaError::PropertyViolation {
                what,
                witness: format!("zero {z} is not negative real"),
            });
        }
        out.push(-z.re);
    }
    Ok(out)
}

/// Zero facts for `q = −ρ`: real simple zeros alternating in sign, starting
/// negative, with `|λ_k| > |λ_{k−1}|/ρ`.
#[derive(Clone, Debug)]
pub struct NegativeQReport {
    pub rho: f64,
    /// The first `m` zeros as reals, in modulus order.
    pub lambdas: Vec<f64>,
    /// `|λ_k| / |λ_{k−1}|` for consecutive zeros.
    pub ratios: Vec<f64>,
    /// Minimum of `ratio·ρ − 1` over the chain (positive means the bound holds).
    pub min_ratio_margin: f64,
}

pub fn negative_q_check(rho: f64, n: usize, m: usize) -> Result<NegativeQReport, QthetaError> {
    if !(rho > 0.0 && rho <= 1.0) {
        return Err(QthetaError::BadSpec {
            reason: format!("rho must lie in (0, 1], got {rho}"),
        });
    }
    let spec = QSpec::new(Complex64::new(-rho, 0.0), n)?;
    let series = qexp_series(&spec);
    let found = roots::find_roots(&series)?;
    let entries = found.trusted.entries();
    if entries.len() < m {
        return Err(QthetaError::InsufficientTrustedZeros {
            requested: m,
            available: entries.len(),
        });
    }
    let mut lambdas = Vec::with_capacity(m);
    for (k, e) in entries.iter().take(m).enumerate() {
        let z = e.location;
        if e.multiplicity != 1 {
            return Err(QthetaError::PropertyViolation {
                what: "simple zeros",
                witness: format!("zero {} has multiplicity {}", z, e.multiplicity),
            });
        }
        if z.im.abs() > 1e-8 * z.norm() {
            return Err(QthetaError::PropertyViolation {
                what: "real zeros",
                witness: format!("zero {z} is not real"),
            });
        }
        let expected_sign = if k % 2 == 0 { -1.0 } else { 1.0 };
        if z.re.signum() != expected_sign {
            return Err(QthetaError::PropertyViolation {
                what: "alternating signs",
                witness: format!("zero index {k} is {z}, expected sign {expected_sign}"),
            });
        }
        lambdas.push(z.re);
    }
    let mut ratios = Vec::with_capacity(m.saturating_sub(1));
    let mut min_ratio_margin = f64::INFINITY;
    for k in 1..m {
        let ratio = lambdas[k].abs() / lambdas[k - 1].abs();
        if !(ratio > 1.0 / rho) {
            return Err(QthetaError::PropertyViolation {
                what: "modulus ratio bound",
                witness: format!(
                    "|λ_{k}|/|λ_{}| = {ratio} is not above 1/ρ = {}",
                    k - 1,
                    1.0 / rho
                ),
            });
        }
        min_ratio_margin = min_ratio_margin.min(ratio * rho - 1.0);
        ratios.push(ratio);
    }
    Ok(NegativeQReport {
        rho,
        lambdas,
        ratios,
        min_ratio_margin,
    })
}

/// Reality and crossing behaviour of `Φ_e(iz)/(iΦ_o(iz))` on the real line.
#[derive(Clone, Debug)]
pub struct SelfInterlacingReport {
    /// Worst relative imaginary part of the ratio over the samples.
    pub max_imag_rel: f64,
    /// For each computed zero of `F(·;−ρ)`, whether `ratio − 1` flips sign
    /// across it.
    pub flips: Vec<bool>,
    pub all_flip: bool,
}

/// Evaluate `Φ_e(iz)/(iΦ_o(iz))` at real samples and verify it is real and
/// passes through 1 at each computed zero of `F(·;−ρ)`.
pub fn self_interlacing_ratio(
    rho: f64,
    n: usize,
    samples: &[f64],
) -> Result<SelfInterlacingReport, QthetaError> {
    let spec = QSpec::new(Complex64::new(rho, 0.0), n)?;
    let phi = qexp_series(&spec);
    let (even, odd) = phi.split_even_odd();
    let ratio = |x: f64| -> Complex64 {
        let iz = Complex64::new(0.0, x);
        let w = iz * iz;
        let numerator = even.eval(w);
        let denominator = Complex64::i() * iz * odd.eval(w);
        robust_div(numerator, denominator)
    };

    let mut max_imag_rel = 0.0_f64;
    for &x in samples {
        if x == 0.0 {
            continue; // pole of the ratio
        }
        let v = ratio(x);
        if v.is_finite() {
            max_imag_rel = max_imag_rel.max(v.im.abs() / v.norm().max(1e-300));
        }
    }

    // zeros of F(·;−ρ) are where the ratio passes through 1
    let neg = QSpec::new(Complex64::new(-rho, 0.0), n)?;
    let zeros = roots::find_roots(&qexp_series(&neg))?.trusted;
    let mut flips = Vec::new();
    for e in zeros.entries() {
        let x = e.location.re;
        if e.location.im.abs() > 1e-8 * e.location.norm() {
            continue;
        }
        let delta = 1e-5 * x.abs().max(1.0);
        let before = ratio(x - delta).re - 1.0;
        let after = ratio(x + delta).re - 1.0;
        flips.push(before * after < 0.0);
    }
    let all_flip = flips.iter().all(|&f| f);
    Ok(SelfInterlacingReport {
        max_imag_rel,
        flips,
        all_flip,
    })
}

/// The data of one representation `q = ρμ²`.
#[derive(Clone, Copy, Debug)]
pub struct RootOfUnityDecomposition {
    pub n: u32,
    pub mu: Complex64,
    pub rho: f64,
    /// `ν_μ = 1/Σ (−μ)^{−k²}`, with `|ν_μ| = 1/√n`.
    pub nu: Complex64,
}

fn unit_power(base: Complex64, exponent: i64) -> Complex64 {
    Complex64::from_polar(1.0, base.arg() * exponent as f64)
}

fn check_admissible(n: u32, mu: Complex64) -> Result<Complex64, QthetaError> {
    if n == 0 || mu == Complex64::ZERO {
        return Err(QthetaError::NonPrimitiveMu { n, mu });
    }
    let mu = mu / mu.norm();
    if (unit_power(mu, i64::from(n)) + 1.0).norm() > 1e-12 {
        return Err(QthetaError::NonPrimitiveMu { n, mu });
    }
    for k in 1..n {
        if (unit_power(mu, 2 * i64::from(k)) - 1.0).norm() < 1e-8 {
            return Err(QthetaError::NonPrimitiveMu { n, mu });
        }
    }
    Ok(mu)
}

/// All admissible `μ` for a given `n`: `exp(iπ(2p+1)/n)` with
/// `gcd(2p+1, n) = 1`, checked in integer arithmetic.
pub fn admissible_mu(n: u32) -> Vec<Complex64> {
    fn gcd(mut a: u64, mut b: u64) -> u64 {
        while b != 0 {
            let t = a % b;
            a = b;
            b = t;
        }
        a
    }
    (0..n)
        .filter(|p| gcd(u64::from(2 * p + 1), u64::from(n)) == 1)
        .map(|p| Complex64::from_polar(1.0, PI * f64::from(2 * p + 1) / f64::from(n)))
        .collect()
}

/// Compute `ν_μ` by direct summation and verify the Gauss-sum modulus and
/// fourth-power laws.
pub fn gauss_nu(n: u32, mu: Complex64) -> Result<RootOfUnityDecomposition, QthetaError> {
    let mu = check_admissible(n, mu)?;
    let minus_mu = -mu;
    let mut sum = Complex64::ZERO;
    for k in 1..=i64::from(n) {
        sum += unit_power(minus_mu, -(k * k));
    }
    if sum.norm() < 1e-9 {
        return Err(QthetaError::ZeroSum { n });
    }
    let nu = Complex64::ONE / sum;
    let root_n = f64::from(n).sqrt();
    if (nu.norm() - 1.0 / root_n).abs() >= 1e-10 {
        return Err(QthetaError::PropertyViolation {
            what: "Gauss modulus law",
            witness: format!("|nu| = {} for n = {n}", nu.norm()),
        });
    }
    let nu4 = nu.powi(4);
    let law_holds = if n % 2 == 1 {
        // ν⁻⁴ = n²
        let inv4 = 1.0 / nu4;
        (inv4 - f64::from(n * n)).norm() < 1e-9 * f64::from(n * n)
    } else {
        // ν⁴ = −n⁻²
        let target = -1.0 / f64::from(n * n);
        (nu4 - target).norm() < 1e-9 / f64::from(n * n)
    };
    if !law_holds {
        return Err(QthetaError::PropertyViolation {
            what: "Gauss fourth-power law",
            witness: format!("nu = {nu} for n = {n}"),
        });
    }
    Ok(RootOfUnityDecomposition {
        n,
        mu,
        rho: 1.0,
        nu,
    })
}

/// Residuals of the root-of-unity representation identities.
#[derive(Clone, Debug)]
pub struct RepresentationReport {
    pub n: u32,
    pub mu: Complex64,
    pub rho: f64,
    /// Max residual of the general n-term identity over the samples.
    pub general: f64,
    /// Max residual of the specialized two-term (n = 2) or four-term (n = 4)
    /// even/odd form, when applicable.
    pub specialized: Option<f64>,
    /// For n = 2: the residual of the wrong-sign variant `Φ_e(iz) + iΦ_o(iz)`.
    pub plus_variant: Option<f64>,
}

/// Evaluate `F(z;ρμ²)` against `ν_μ Σ (−μ)^{−k²} Φ(−μ^{2k−1}z)` over the
/// samples, plus the specialized even/odd forms for `n ∈ {2, 4}`.
pub fn representation_residual(
    n: u32,
    mu: Complex64,
    rho: f64,
    z_samples: &[Complex64],
    truncation: usize,
) -> Result<RepresentationReport, QthetaError> {
    let decomposition = gauss_nu(n, mu)?;
    let mu = decomposition.mu;
    let nu = decomposition.nu;
    if !(rho > 0.0 && rho <= 1.0) {
        return Err(QthetaError::BadSpec {
            reason: format!("rho must lie in (0, 1], got {rho}"),
        });
    }
    let q = rho * mu * mu;
    let f_q = qexp_series(&QSpec::new(q, truncation)?);
    let phi = qexp_series(&QSpec::new(Complex64::new(rho, 0.0), truncation)?);
    let limit = 0.8 * f_q.trust_radius().min(phi.trust_radius());
    let reach = z_samples.iter().map(|z| z.norm()).fold(0.0, f64::max);
    if reach > limit {
        return Err(QthetaError::TrustRadiusExceeded {
            needed: reach,
            trust: limit,
        });
    }

    let minus_mu = -mu;
    let mut general = 0.0_f64;
    for &z in z_samples {
        let mut rhs = Complex64::ZERO;
        for k in 1..=i64::from(n) {
            let coeff = unit_power(minus_mu, -(k * k));
            let rotation = -unit_power(mu, 2 * k - 1);
            rhs += coeff * phi.eval(rotation * z);
        }
        rhs *= nu;
        general = general.max((f_q.eval(z) - rhs).norm());
    }

    let (even, odd) = phi.split_even_odd();
    let phi_e = |w: Complex64| even.eval(w * w);
    let phi_o = |w: Complex64| w * odd.eval(w * w);

    let mut specialized = None;
    let mut plus_variant = None;
    if n == 2 {
        // F(z;−ρ) = Φ_e(iz) − iΦ_o(iz); the + variant is the rejected sign
        let i = Complex64::i();
        let mut minus_res = 0.0_f64;
        let mut plus_res = 0.0_f64;
        for &z in z_samples {
            let lhs = f_q.eval(z);
            let e = phi_e(i * z);
            let o = phi_o(i * z);
            minus_res = minus_res.max((lhs - (e - i * o)).norm());
            plus_res = plus_res.max((lhs - (e + i * o)).norm());
        }
        specialized = Some(minus_res);
        plus_variant = Some(plus_res);
    } else if n == 4 {
        // F(z;μ²ρ) = Φ_e(μz) + μΦ_o(μ̄z)
        let mut res = 0.0_f64;
        for &z in z_samples {
            let lhs = f_q.eval(z);
            let rhs = phi_e(mu * z) + mu * phi_o(mu.conj() * z);
            res = res.max((lhs - rhs).norm());
        }
        specialized = Some(res);
    }

    Ok(RepresentationReport {
        n,
        mu,
        rho,
        general,
        specialized,
        plus_variant,
    })
}

/// Residuals of the even/odd decomposition for `n = 8l`: the even and odd
/// parts of `F(·;q)` against their `2l`-term sums over `Φ_e` and `Φ_o`.
pub fn four_l_decomposition_residual(
    l: u32,
    mu: Complex64,
    rho: f64,
    z_samples: &[Complex64],
    truncation: usize,
) -> Result<(f64, f64), QthetaError> {
    let n = 8 * l;
    let decomposition = gauss_nu(n, mu)?;
    let mu = decomposition.mu;
    // μ^{m²} = 1 when m = 4l, so the tilde constant equals ν itself
    let nu = decomposition.nu;
    let q = rho * mu * mu;
    let f_q = qexp_series(&QSpec::new(q, truncation)?);
    let phi = qexp_series(&QSpec::new(Complex64::new(rho, 0.0), truncation)?);
    let (f_even, f_odd) = f_q.split_even_odd();
    let (phi_even, phi_odd) = phi.split_even_odd();
    let phi_e = |w: Complex64| phi_even.eval(w * w);
    let phi_o = |w: Complex64| w * phi_odd.eval(w * w);

    let mut even_res = 0.0_f64;
    let mut odd_res = 0.0_f64;
    for &z in z_samples {
        let mut even_sum = Complex64::ZERO;
        let mut odd_sum = Complex64::ZERO;
        for k in 1..=i64::from(2 * l) {
            even_sum += unit_power(mu, -4 * k * k) * phi_e(unit_power(mu, 4 * k - 1) * z);
            let e = 2 * k - 1;
            odd_sum += unit_power(mu, -(e * e)) * phi_o(unit_power(mu, 4 * k - 3) * z);
        }
        // folding k and k + 2l pairs up Φ(w) + Φ(−w) = 2Φ_e(w), so the
        // half-range sums carry a factor two
        even_sum *= 2.0 * nu;
        odd_sum *= 2.0 * nu;
        even_res = even_res.max((f_even.eval(z * z) - even_sum).norm());
        odd_res = odd_res.max((z * f_odd.eval(z * z) - odd_sum).norm());
    }
    Ok((even_res, odd_res))
}

/// `G(z) = α Σ i^{k(k−1)/2} f_k z^k` for a real coefficient list.
pub fn i_power_transform(
    real_coeffs: &[f64],
    alpha: Complex64,
    provenance: Provenance,
) -> Result<SeriesFunction, QthetaError> {
    if real_coeffs.is_empty() || real_coeffs[0] <= 0.0 {
        return Err(QthetaError::BadSpec {
            reason: "the constant coefficient must be positive".into(),
        });
    }
    if alpha == Complex64::ZERO {
        return Err(QthetaError::BadSpec {
            reason: "alpha must be nonzero".into(),
        });
    }
    let mut i_power = Complex64::ONE; // i^{k(k−1)/2}
    let mut step = Complex64::ONE; // i^{k−1} entering step k
    let mut coeffs = Vec::with_capacity(real_coeffs.len());
    for (k, &f) in real_coeffs.iter().enumerate() {
        if k > 0 {
            i_power *= step;
            step *= Complex64::i();
        }
        coeffs.push(alpha * i_power * f);
    }
    Ok(SeriesFunction::new(coeffs, provenance)?)
}

/// Constant `c` and odd-part order `j` read off a series: the even constant
/// term and the first nonvanishing odd coefficient.
pub fn series_constant_c(series: &SeriesFunction) -> Result<(ConstantC, u32), QthetaError> {
    let coeffs = series.coeffs();
    let f0 = *coeffs.first().ok_or_else(|| QthetaError::BadSpec {
        reason: "series is empty".into(),
    })?;
    if f0 == Complex64::ZERO {
        return Err(QthetaError::BadSpec {
            reason: "even part has no constant term".into(),
        });
    }
    let odd_index = coeffs
        .iter()
        .enumerate()
        .skip(1)
        .step_by(2)
        .find(|(_, c)| **c != Complex64::ZERO)
        .map(|(k, _)| k)
        .ok_or_else(|| QthetaError::BadSpec {
            reason: "series has no odd part".into(),
        })?;
    let g0 = coeffs[odd_index];
    let j = ((odd_index - 1) / 2) as u32;
    let c = -(g0 / g0.norm()) * (f0.norm() / f0);
    Ok((ConstantC::new(c), j))
}

/// Zero-location regimes of `F(·;q)` by the shape of `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regime {
    /// `q = 1` exactly: the function is `e^z`, zero-free.
    ExponentialZeroFree,
    /// `0 < q < 1`: all zeros negative real (classical).
    RealPositive,
    /// `−1 ≤ q < 0`: real simple zeros of alternating sign.
    RealNegative,
    /// `q² = −ρ²`: zeros verified through the rotated theorem form.
    ImaginarySquared,
    /// `q²` not real: measured only, no theorem backing.
    Exploratory,
}

/// Conjecture-level flags for the first `m` trusted zeros of `F(·;q)`.
#[derive(Clone, Debug)]
pub struct ConjectureReport {
    pub q: Complex64,
    pub regime: Regime,
    pub requested: usize,
    /// The first trusted zeros (up to `m`).
    pub zeros: ZeroList,
    pub trusted_available: usize,
    /// All reported zeros simple.
    pub all_simple: bool,
    /// Smallest pairwise distance between reported zeros, relative.
    pub min_pair_separation: f64,
    /// Smallest successive modulus ratio minus one (positive = distinct moduli).
    pub min_modulus_gap: f64,
    /// Largest `|z_k|/|z_{k+1}|`; the polynomial conjecture compares it to `|q|`.
    pub worst_separation_factor: f64,
    pub q_modulus: f64,
    /// Theorem verdict on the rotated function, for `q² = −ρ²`.
    pub distribution: Option<DistributionReport>,
}

const REGIME_TOLERANCE: f64 = 1e-12;

fn classify_regime(q: Complex64) -> Regime {
    if q == Complex64::ONE {
        return Regime::ExponentialZeroFree;
    }
    let q2 = q * q;
    if q2.im.abs() > REGIME_TOLERANCE * q2.norm() {
        return Regime::Exploratory;
    }
    if q.im.abs() <= REGIME_TOLERANCE * q.norm() {
        if q.re > 0.0 {
            Regime::RealPositive
        } else {
            Regime::RealNegative
        }
    } else {
        Regime::ImaginarySquared
    }
}

/// Zero flags for `F(·;q)`; for `q² = −ρ²` the rotated function is also run
/// through the distribution theorem.
///
/// The rotation scales the argument by `−conj(μ)` where `μ²ρ = q`, which is
/// the branch whose derived constant comes out as `c = conj(μ)`.
pub fn conjecture_report(spec: &QSpec, m: usize) -> Result<ConjectureReport, QthetaError> {
    let q = spec.q;
    let regime = classify_regime(q);
    if regime == Regime::ExponentialZeroFree {
        return Ok(ConjectureReport {
            q,
            regime,
            requested: m,
            zeros: ZeroList::from_raw(&[]),
            trusted_available: 0,
            all_simple: true,
            min_pair_separation: f64::INFINITY,
            min_modulus_gap: f64::INFINITY,
            worst_separation_factor: 0.0,
            q_modulus: 1.0,
            distribution: None,
        });
    }

    let series = qexp_series(spec);
    let found: FoundRoots = roots::find_roots(&series)?;
    let trusted_available = found.trusted.len();
    let zeros = found.trusted.truncated(m);
    let entries = zeros.entries();

    let all_simple = entries.iter().all(|e| e.multiplicity == 1);
    let min_pair_separation = min_pair_separation(entries);
    let (min_modulus_gap, worst_separation_factor) = modulus_gaps(entries);

    let distribution = if regime == Regime::ImaginarySquared && !entries.is_empty() {
        let rho = q.norm();
        let mu = (q / rho).sqrt();
        let rotation = -mu.conj();
        let rotated = series.scale_argument(rotation)?;
        let (c, j) = series_constant_c(&rotated)?;
        let rotated_zeros = roots::find_roots(&rotated)?.trusted.truncated(m);
        Some(verdict::verify_distribution(&rotated_zeros, c, j)?)
    } else {
        None
    };

    Ok(ConjectureReport {
        q,
        regime,
        requested: m,
        zeros,
        trusted_available,
        all_simple,
        min_pair_separation,
        min_modulus_gap,
        worst_separation_factor,
        q_modulus: q.norm(),
        distribution,
    })
}

fn min_pair_separation(entries: &[ZeroEntry]) -> f64 {
    let mut min = f64::INFINITY;
    for i in 0..entries.len() {
        for j in (i + 1)..entries.len() {
            let scale = 1.0_f64.max(entries[i].location.norm());
            min = min.min((entries[i].location - entries[j].location).norm() / scale);
        }
    }
    min
}

fn modulus_gaps(entries: &[ZeroEntry]) -> (f64, f64) {
    let mut min_gap = f64::INFINITY;
    let mut worst_factor = 0.0_f64;
    for w in entries.windows(2) {
        let ratio = w[1].location.norm() / w[0].location.norm();
        min_gap = min_gap.min(ratio - 1.0);
        worst_factor = worst_factor.max(1.0 / ratio);
    }
    (min_gap, worst_factor)
}
