//! Factorized function classes and their power series.
//!
//! A [`StructuredFunction`] stores the factor data
//!
//! ```text
//! f(w) = f₀ · Π_μ (1 + w/b_μ),      b_μ > 0,
//! g(w) = g₀ · w^j · Π_ν (1 − w/a_ν), a_ν > 0,
//! ```
//!
//! and represents `F(z) = f(z²) + z·g(z²)`, so `f(z²)` and `z·g(z²)` are the
//! even and odd parts of `F`. The unimodular constant `c = −g₀|f₀|/(f₀|g₀|)`
//! and the ratio
//!
//! ```text
//! R(z) = −c·f(z²)/(z·g(z²))
//!      = z^{−(2j+1)} · |f₀| Π(1 + z²/b_μ) / (|g₀| Π(1 − z²/a_ν))
//! ```
//!
//! drive everything downstream: zeros of `F` are exactly the solutions of
//! `R(z) = c`.

use num_complex::Complex64;
use thiserror::Error;

/// Relative guard radius around poles/zeros of the factor products.
pub(crate) const SINGULARITY_GUARD: f64 = 1e-13;

/// Complex division by Smith's algorithm: safe where the naive
/// `(c² + d²)` denominator would overflow, which the root iteration hits on
/// series whose coefficients span hundreds of orders of magnitude.
pub(crate) fn robust_div(a: Complex64, b: Complex64) -> Complex64 {
    if b.re.abs() >= b.im.abs() {
        let ratio = b.im / b.re;
        let denom = b.re + b.im * ratio;
        Complex64::new((a.re + a.im * ratio) / denom, (a.im - a.re * ratio) / denom)
    } else {
        let ratio = b.re / b.im;
        let denom = b.re * ratio + b.im;
        Complex64::new((a.re * ratio + a.im) / denom, (a.im * ratio - a.re) / denom)
    }
}

#[derive(Debug, Error)]
pub enum ModelError {
    #[error("leading coefficient must be nonzero ({which})")]
    ZeroLeadingCoefficient { which: &'static str },
    #[error("factor lists require positive entries, got {value}")]
    NonpositiveFactor { value: f64 },
    #[error("both factor lists empty requires j = 0, got j = {j}")]
    DegenerateConstantPair { j: u32 },
    #[error("evaluation overflowed at z = {z}")]
    Overflow { z: Complex64 },
    #[error("z² = {z_squared} lies within the guard radius of pole a = {pole}")]
    PoleAtInput { z_squared: Complex64, pole: f64 },
    #[error("R is singular at the origin")]
    OriginInput,
    #[error("input z = {z} is within the guard radius of a singularity")]
    SingularInput { z: Complex64 },
    #[error("input contains a non-finite component: {z}")]
    NonFiniteInput { z: Complex64 },
    #[error("series must have at least one nonzero coefficient")]
    EmptySeries,
}

/// Factor data for `F(z) = f(z²) + z·g(z²)`.
///
/// Invariants are established by [`StructuredFunction::build`]: `f₀, g₀ ≠ 0`,
/// every listed factor positive, and the both-lists-empty degeneracy only
/// admitted for `j = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct StructuredFunction {
    f0: Complex64,
    b: Vec<f64>,
    g0: Complex64,
    j: u32,
    a: Vec<f64>,
}

/// The unimodular constant `c = −g₀|f₀|/(f₀|g₀|)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConstantC(Complex64);

impl ConstantC {
    /// Wrap a precomputed value; debug-asserts `|c| = 1` within 1e−14.
    pub fn new(value: Complex64) -> Self {
        debug_assert!((value.norm() - 1.0).abs() < 1e-14);
        ConstantC(value)
    }

    pub fn value(self) -> Complex64 {
        self.0
    }

    /// Principal argument of `c`.
    pub fn arg(self) -> f64 {
        self.0.arg()
    }
}

impl StructuredFunction {
    /// Validate and build the factor data.
    pub fn build(
        f0: Complex64,
        b: Vec<f64>,
        g0: Complex64,
        j: u32,
        a: Vec<f64>,
    ) -> Result<Self, ModelError> {
        if !f0.is_finite() {
            return Err(ModelError::NonFiniteInput { z: f0 });
        }
        if !g0.is_finite() {
            return Err(ModelError::NonFiniteInput { z: g0 });
        }
        if f0 == Complex64::ZERO {
            return Err(ModelError::ZeroLeadingCoefficient { which: "f0" });
        }
        if g0 == Complex64::ZERO {
            return Err(ModelError::ZeroLeadingCoefficient { which: "g0" });
        }
        for &x in b.iter().chain(a.iter()) {
            if !(x > 0.0) || !x.is_finite() {
                return Err(ModelError::NonpositiveFactor { value: x });
            }
        }
        if b.is_empty() && a.is_empty() && j > 0 {
            return Err(ModelError::DegenerateConstantPair { j });
        }
        Ok(StructuredFunction { f0, b, g0, j, a })
    }

    pub fn f0(&self) -> Complex64 {
        self.f0
    }

    pub fn g0(&self) -> Complex64 {
        self.g0
    }

    pub fn j(&self) -> u32 {
        self.j
    }

    /// Zeros of `f` sit at `−b_μ`.
    pub fn b_factors(&self) -> &[f64] {
        &self.b
    }

    /// Zeros of `g` sit at `+a_ν`.
    pub fn a_factors(&self) -> &[f64] {
        &self.a
    }

    /// Both `f` and `z^j·g` are constants (then `F = f₀ + z·g₀`).
    pub fn is_degenerate_pair(&self) -> bool {
        self.b.is_empty() && self.a.is_empty()
    }

    /// `c = −g₀|f₀|/(f₀|g₀|)`; always unimodular.
    pub fn constant_c(&self) -> ConstantC {
        let c = -(self.g0 / self.g0.norm()) * (self.f0.norm() / self.f0);
        ConstantC::new(c)
    }

    /// `f(w) = f₀ Π (1 + w/b_μ)`, factors multiplied in stored order.
    pub fn eval_f(&self, w: Complex64) -> Complex64 {
        let mut p = self.f0;
        for &b in &self.b {
            p *= 1.0 + w / b;
        }
        p
    }

    /// `g(w) = g₀ w^j Π (1 − w/a_ν)`, factors multiplied in stored order.
    pub fn eval_g(&self, w: Complex64) -> Complex64 {
        let mut p = self.g0 * w.powu(self.j);
        for &a in &self.a {
            p *= 1.0 - w / a;
        }
        p
    }

    /// `F(z) = f(z²) + z·g(z²)`.
    pub fn eval_f_big(&self, z: Complex64) -> Result<Complex64, ModelError> {
        if !z.is_finite() {
            return Err(ModelError::NonFiniteInput { z });
        }
        let w = z * z;
        let value = self.eval_f(w) + z * self.eval_g(w);
        if value.is_finite() {
            Ok(value)
        } else {
            Err(ModelError::Overflow { z })
        }
    }

    /// `F(z)` together with the analytically assembled `F′(z)`.
    ///
    /// `F′(z) = 2z f′(z²) + g(z²) + 2z² g′(z²)`, with `f′` and `g′` expanded by
    /// the product rule over factors so that vanishing factors stay harmless.
    pub fn eval_f_big_with_deriv(&self, z: Complex64) -> Result<(Complex64, Complex64), ModelError> {
        if !z.is_finite() {
            return Err(ModelError::NonFiniteInput { z });
        }
        let w = z * z;
        let (f, df) = self.eval_f_with_deriv(w);
        let (g, dg) = self.eval_g_with_deriv(w);
        let value = f + z * g;
        let deriv = 2.0 * z * df + g + 2.0 * w * dg;
        if value.is_finite() && deriv.is_finite() {
            Ok((value, deriv))
        } else {
            Err(ModelError::Overflow { z })
        }
    }

    fn eval_f_with_deriv(&self, w: Complex64) -> (Complex64, Complex64) {
        let mut value = self.f0;
        let mut deriv = Complex64::ZERO;
        for &b in &self.b {
            let factor = 1.0 + w / b;
            deriv = deriv * factor + value / b;
            value *= factor;
        }
        (value, deriv)
    }

    fn eval_g_with_deriv(&self, w: Complex64) -> (Complex64, Complex64) {
        let mut value = if self.j == 0 {
            self.g0
        } else {
            self.g0 * w.powu(self.j)
        };
        let mut deriv = if self.j == 0 {
            Complex64::ZERO
        } else {
            self.g0 * f64::from(self.j) * w.powu(self.j - 1)
        };
        for &a in &self.a {
            let factor = 1.0 - w / a;
            deriv = deriv * factor - value / a;
            value *= factor;
        }
        (value, deriv)
    }

    /// The ratio `R(z) = z^{−(2j+1)} |f₀| Π(1+z²/b_μ) / (|g₀| Π(1−z²/a_ν))`.
    ///
    /// Rejects the origin and any `z` whose square falls within the relative
    /// guard radius of a pole `a_ν`.
    pub fn eval_r(&self, z: Complex64) -> Result<Complex64, ModelError> {
        if !z.is_finite() {
            return Err(ModelError::NonFiniteInput { z });
        }
        if z == Complex64::ZERO {
            return Err(ModelError::OriginInput);
        }
        let w = z * z;
        for &a in &self.a {
            if (w - a).norm() < SINGULARITY_GUARD * (1.0 + a) {
                return Err(ModelError::PoleAtInput { z_squared: w, pole: a });
            }
        }
        let mut num = Complex64::new(self.f0.norm(), 0.0);
        for &b in &self.b {
            num *= 1.0 + w / b;
        }
        let mut den = Complex64::new(self.g0.norm(), 0.0) * z.powu(2 * self.j + 1);
        for &a in &self.a {
            den *= 1.0 - w / a;
        }
        let value = num / den;
        if value.is_finite() {
            Ok(value)
        } else {
            Err(ModelError::Overflow { z })
        }
    }

    /// Logarithmic derivative `(ln R)′(z) = Σ 2z/(b_k+z²) + Σ 2z/(a_k−z²) − (2j+1)/z`.
    pub fn eval_log_deriv_r(&self, z: Complex64) -> Result<Complex64, ModelError> {
        if !z.is_finite() {
            return Err(ModelError::NonFiniteInput { z });
        }
        if z == Complex64::ZERO {
            return Err(ModelError::OriginInput);
        }
        let w = z * z;
        for &a in &self.a {
            if (w - a).norm() < SINGULARITY_GUARD * (1.0 + a) {
                return Err(ModelError::SingularInput { z });
            }
        }
        for &b in &self.b {
            if (w + b).norm() < SINGULARITY_GUARD * (1.0 + b) {
                return Err(ModelError::SingularInput { z });
            }
        }
        let mut sum = Complex64::ZERO;
        for &b in &self.b {
            sum += 2.0 * z / (b + w);
        }
        for &a in &self.a {
            sum += 2.0 * z / (a - w);
        }
        sum -= f64::from(2 * self.j + 1) / z;
        Ok(sum)
    }

    /// Moduli of the axis singularities of `R`: `√a_ν` (real axis poles) and
    /// `√b_μ` (imaginary axis zeros), unsorted.
    pub fn axis_singularity_radii(&self) -> Vec<f64> {
        self.a
            .iter()
            .chain(self.b.iter())
            .map(|x| x.sqrt())
            .collect()
    }

    /// Expand `F` into an exact polynomial; degree `max(2·len(b), 2·len(a)+2j+1)`.
    pub fn expand_to_series(&self) -> SeriesFunction {
        let even = poly_from_factors(self.f0, &self.b, 1.0);
        let odd = poly_from_factors(self.g0, &self.a, -1.0);
        let deg_even = 2 * self.b.len();
        let deg_odd = 2 * self.a.len() + 2 * self.j as usize + 1;
        let mut coeffs = vec![Complex64::ZERO; deg_even.max(deg_odd) + 1];
        for (k, &e) in even.iter().enumerate() {
            coeffs[2 * k] += e;
        }
        for (l, &o) in odd.iter().enumerate() {
            coeffs[2 * l + 2 * self.j as usize + 1] += o;
        }
        SeriesFunction::new(coeffs, Provenance::ExactPolynomial)
            .expect("expansion of a valid structured function is nonzero")
    }
}

/// Coefficients of `c0 · Π (1 + sign·w/x_k)` in ascending powers of `w`.
fn poly_from_factors(c0: Complex64, factors: &[f64], sign: f64) -> Vec<Complex64> {
    let mut coeffs = vec![c0];
    for &x in factors {
        let s = sign / x;
        coeffs.push(Complex64::ZERO);
        for k in (1..coeffs.len()).rev() {
            let lower = coeffs[k - 1];
            coeffs[k] += s * lower;
        }
    }
    coeffs
}

/// Origin of a truncated series; exact polynomials get an infinite trust disk.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// An exact polynomial (structured expansion or binomial family).
    ExactPolynomial,
    /// Truncation of the entire function `Σ q^{k(k−1)/2} z^k / k!`.
    QExponential,
    /// Caller-supplied coefficients of unknown tail behaviour.
    User,
}

/// A truncated power series `Σ c_k z^k` with a precomputed trust radius.
///
/// Zeros of the truncation are only meaningful inside the trust disk; the
/// radius stored here always equals the value produced by
/// [`crate::roots::trust_radius`] for these coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesFunction {
    coeffs: Vec<Complex64>,
    trust_radius: f64,
    provenance: Provenance,
}

impl SeriesFunction {
    /// Validate coefficients and compute the trust radius.
    pub fn new(coeffs: Vec<Complex64>, provenance: Provenance) -> Result<Self, ModelError> {
        for &c in &coeffs {
            if !c.is_finite() {
                return Err(ModelError::NonFiniteInput { z: c });
            }
        }
        if coeffs.iter().all(|c| *c == Complex64::ZERO) {
            return Err(ModelError::EmptySeries);
        }
        let trust_radius = crate::roots::trust_radius_for(&coeffs, provenance);
        Ok(SeriesFunction {
            coeffs,
            trust_radius,
            provenance,
        })
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// Radius of the disk in which zeros of the truncation are trusted as
    /// zeros of the underlying function; `+∞` for exact polynomials.
    pub fn trust_radius(&self) -> f64 {
        self.trust_radius
    }

    /// Degree after stripping trailing zero coefficients.
    pub fn degree(&self) -> usize {
        self.coeffs
            .iter()
            .rposition(|c| *c != Complex64::ZERO)
            .unwrap_or(0)
    }

    /// Horner evaluation of the truncation.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::ZERO;
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// `Σ |c_k| |z|^k`, the natural scale for backward-error tests.
    pub fn eval_scale(&self, z: Complex64) -> f64 {
        let r = z.norm();
        let mut acc = 0.0;
        for &c in self.coeffs.iter().rev() {
            acc = acc * r + c.norm();
        }
        acc
    }

    /// Derivative truncation `Σ (k+1) c_{k+1} z^k`.
    pub fn derivative(&self) -> SeriesFunction {
        let coeffs: Vec<Complex64> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * k as f64)
            .collect();
        let coeffs = if coeffs.is_empty() {
            vec![Complex64::ZERO]
        } else {
            coeffs
        };
        SeriesFunction {
            trust_radius: crate::roots::trust_radius_for(&coeffs, self.provenance),
            coeffs,
            provenance: self.provenance,
        }
    }

    /// Substituted truncation for `z ↦ w·z`: coefficients `c_k w^k`.
    pub fn scale_argument(&self, w: Complex64) -> Result<SeriesFunction, ModelError> {
        let mut pow = Complex64::ONE;
        let coeffs = self
            .coeffs
            .iter()
            .map(|&c| {
                let out = c * pow;
                pow *= w;
                out
            })
            .collect();
        SeriesFunction::new(coeffs, self.provenance)
    }

    /// Split into even and odd parts: `F(z) = E(z²) + z·O(z²)`.
    ///
    /// `E` takes the even coefficients, `O` the odd ones.
    pub fn split_even_odd(&self) -> (SeriesFunction, SeriesFunction) {
        let even: Vec<Complex64> = self.coeffs.iter().copied().step_by(2).collect();
        let odd: Vec<Complex64> = self.coeffs.iter().copied().skip(1).step_by(2).collect();
        let pad = |v: Vec<Complex64>| if v.is_empty() { vec![Complex64::ZERO] } else { v };
        let make = |v: Vec<Complex64>| SeriesFunction {
            trust_radius: crate::roots::trust_radius_for(&v, self.provenance),
            coeffs: v,
            provenance: self.provenance,
        };
        (make(pad(even)), make(pad(odd)))
    }
}
