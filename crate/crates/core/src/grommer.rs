//! Negativity-of-zeros test via leading principal minors.
//!
//! For a series `Σ s_k z^k` the test builds the banded matrix whose rows
//! interleave the coefficient sequence with its index-weighted derivative
//! sequence,
//!
//! ```text
//! s₀  s₁  s₂  s₃ …
//! 0   s₁ 2s₂ 3s₃ …
//! 0   s₀  s₁  s₂ …
//! 0   0   s₁ 2s₂ …
//! 0   0   s₀  s₁ …
//! ```
//!
//! and inspects the leading principal minors: all positive (or positive up to
//! some order and then exactly zero) characterizes a series with only negative
//! zeros. Minor signs near zero decide everything, so whenever the input
//! coefficients are exactly representable as moderate rationals the minors are
//! computed in exact arithmetic; the floating path with pivot monitoring is
//! the fallback and a cross-check.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GrommerError {
    #[error("matrix order must be at least 1, got {order}")]
    BadOrder { order: usize },
}

/// The two pattern matrices at finite order, with their base sequences.
#[derive(Clone, Debug, PartialEq)]
pub struct GrommerMatrices {
    pub even_matrix: Vec<Vec<f64>>,
    pub odd_matrix: Vec<Vec<f64>>,
    pub order: usize,
    pub base_even: Vec<f64>,
    pub base_odd: Vec<f64>,
}

/// Build both matrices from the even-index and odd-index coefficient bases.
pub fn build_matrices(
    even_coeffs: &[f64],
    odd_coeffs: &[f64],
    order: usize,
) -> Result<GrommerMatrices, GrommerError> {
    if order == 0 {
        return Err(GrommerError::BadOrder { order });
    }
    let pad = |c: &[f64]| {
        let mut v = c.to_vec();
        v.resize(v.len().max(order), 0.0);
        v
    };
    let base_even = pad(even_coeffs);
    let base_odd = pad(odd_coeffs);
    Ok(GrommerMatrices {
        even_matrix: pattern_matrix(&base_even, order),
        odd_matrix: pattern_matrix(&base_odd, order),
        order,
        base_even,
        base_odd,
    })
}

/// One pattern matrix: row 1 is the base, row 2 the index-weighted base, and
/// every later row repeats the two with a growing right shift.
pub fn pattern_matrix(base: &[f64], order: usize) -> Vec<Vec<f64>> {
    (0..order)
        .map(|r| {
            (0..order)
                .map(|k| pattern_entry(base, r, k))
                .collect::<Vec<f64>>()
        })
        .collect()
}

fn pattern_entry(base: &[f64], row: usize, col: usize) -> f64 {
    let at = |i: usize| base.get(i).copied().unwrap_or(0.0);
    if row == 0 {
        return at(col);
    }
    if row % 2 == 1 {
        // row 2m (1-based): row 2 shifted right by m−1
        let shift = (row + 1) / 2 - 1;
        if col < shift {
            0.0
        } else {
            (col - shift) as f64 * at(col - shift)
        }
    } else {
        // row 2m+1 (1-based): row 1 shifted right by m
        let shift = row / 2;
        if col < shift {
            0.0
        } else {
            at(col - shift)
        }
    }
}

/// Determinants of the top-left `k×k` blocks, `k = 1..=order`, in double
/// precision with partial pivoting. Singular blocks yield 0.
pub fn leading_minors(matrix: &[Vec<f64>]) -> Vec<f64> {
    leading_minors_monitored(matrix).0
}

/// Float minors together with a per-block Hadamard scale; a minor whose
/// magnitude sits below roundoff times the scale cannot be sign-trusted.
pub fn leading_minors_monitored(matrix: &[Vec<f64>]) -> (Vec<f64>, Vec<f64>) {
    let n = matrix.len();
    let mut values = Vec::with_capacity(n);
    let mut scales = Vec::with_capacity(n);
    for k in 1..=n {
        values.push(block_det(matrix, k));
        let scale = (0..k)
            .map(|i| {
                matrix[i][..k]
                    .iter()
                    .map(|x| x * x)
                    .sum::<f64>()
                    .sqrt()
                    .max(f64::MIN_POSITIVE)
            })
            .product::<f64>();
        scales.push(scale);
    }
    (values, scales)
}

fn block_det(matrix: &[Vec<f64>], k: usize) -> f64 {
    let mut m: Vec<Vec<f64>> = matrix[..k].iter().map(|row| row[..k].to_vec()).collect();
    let mut det = 1.0;
    for col in 0..k {
        let pivot_row = (col..k)
            .max_by(|&a, &b| m[a][col].abs().partial_cmp(&m[b][col].abs()).unwrap())
            .unwrap();
        if m[pivot_row][col] == 0.0 {
            return 0.0;
        }
        if pivot_row != col {
            m.swap(pivot_row, col);
            det = -det;
        }
        let pivot = m[col][col];
        det *= pivot;
        for row in (col + 1)..k {
            let factor = m[row][col] / pivot;
            if factor != 0.0 {
                for c in col..k {
                    let sub = factor * m[col][c];
                    m[row][c] -= sub;
                }
            }
        }
    }
    det
}

/// Exact leading principal minors over the rationals.
pub fn exact_leading_minors(matrix: &[Vec<BigRational>]) -> Vec<BigRational> {
    let n = matrix.len();
    (1..=n).map(|k| exact_block_det(matrix, k)).collect()
}

fn exact_block_det(matrix: &[Vec<BigRational>], k: usize) -> BigRational {
    let mut m: Vec<Vec<BigRational>> =
        matrix[..k].iter().map(|row| row[..k].to_vec()).collect();
    let mut det = BigRational::one();
    for col in 0..k {
        let pivot_row = match (col..k).find(|&r| !m[r][col].is_zero()) {
            Some(r) => r,
            None => return BigRational::zero(),
        };
        if pivot_row != col {
            m.swap(pivot_row, col);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det *= pivot.clone();
        for row in (col + 1)..k {
            if m[row][col].is_zero() {
                continue;
            }
            let factor = &m[row][col] / &pivot;
            for c in col..k {
                let sub = &factor * &m[col][c];
                m[row][c] -= sub;
            }
        }
    }
    det
}

/// Sign pattern of a minor list.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinorSignPattern {
    AllPositive,
    PositiveThenZero,
    Fail,
}

/// Verdict of the minor test for one coefficient base.
#[derive(Clone, Debug)]
pub struct MinorVerdict {
    /// Minor values (float images when the exact path ran).
    pub minors: Vec<f64>,
    pub verdict: MinorSignPattern,
    /// 1-based index of the first offending minor when `verdict` is `Fail`.
    pub fail_index: Option<usize>,
    /// Whether the exact rational path decided the signs.
    pub exact: bool,
    /// The base has no nonzero entry beyond the constant term; the
    /// positive-then-zero pattern is then trivially degenerate.
    pub constant_series: bool,
}

impl MinorVerdict {
    /// The series has only negative zeros according to the minor pattern.
    pub fn accepts(&self) -> bool {
        self.verdict != MinorSignPattern::Fail
    }
}

/// Default matrix order for a coefficient list: twice the number of nonzero
/// coefficients plus two, which suffices for polynomial inputs to show their
/// positive-then-zero tail.
pub fn default_order(coeffs: &[f64]) -> usize {
    2 * coeffs.iter().filter(|x| **x != 0.0).count() + 2
}

/// Decide whether `Σ coeffs_k z^k` has only negative zeros.
///
/// The base is normalized so its constant term is exactly 1 (zeros are
/// unchanged); minors are computed in exact rational arithmetic, since every
/// finite double converts exactly and the signs near zero are the whole
/// decision.
pub fn negativity_verdict(coeffs: &[f64], order: usize) -> Result<MinorVerdict, GrommerError> {
    if order == 0 {
        return Err(GrommerError::BadOrder { order });
    }
    if coeffs.is_empty() || coeffs[0] == 0.0 || coeffs.iter().any(|x| !x.is_finite()) {
        // a vanishing constant term means a zero at the origin: not negative;
        // non-finite input cannot be decided at all
        return Ok(MinorVerdict {
            minors: vec![0.0; order],
            verdict: MinorSignPattern::Fail,
            fail_index: Some(1),
            exact: false,
            constant_series: false,
        });
    }
    let constant_series = coeffs[1..].iter().all(|x| *x == 0.0);

    if let Some(rationals) = rational_base(coeffs) {
        let base: Vec<BigRational> = rationals.iter().map(|r| r / &rationals[0]).collect();
        let matrix = exact_pattern_matrix(&base, order);
        let minors = exact_leading_minors(&matrix);
        let (verdict, fail_index) = classify_exact(&minors);
        return Ok(MinorVerdict {
            minors: minors.iter().map(rational_to_f64).collect(),
            verdict,
            fail_index,
            exact: true,
            constant_series,
        });
    }

    let base: Vec<f64> = coeffs.iter().map(|x| x / coeffs[0]).collect();
    let matrix = pattern_matrix(&pad_to(&base, order), order);
    let (minors, scales) = leading_minors_monitored(&matrix);
    let (verdict, fail_index) = classify_float(&minors, &scales);
    Ok(MinorVerdict {
        minors,
        verdict,
        fail_index,
        exact: false,
        constant_series,
    })
}

fn pad_to(base: &[f64], order: usize) -> Vec<f64> {
    let mut v = base.to_vec();
    v.resize(v.len().max(order), 0.0);
    v
}

fn exact_pattern_matrix(base: &[BigRational], order: usize) -> Vec<Vec<BigRational>> {
    let at = |i: usize| base.get(i).cloned().unwrap_or_else(BigRational::zero);
    (0..order)
        .map(|r| {
            (0..order)
                .map(|k| {
                    if r == 0 {
                        at(k)
                    } else if r % 2 == 1 {
                        let shift = (r + 1) / 2 - 1;
                        if k < shift {
                            BigRational::zero()
                        } else {
                            at(k - shift) * BigRational::from_integer(BigInt::from(k - shift))
                        }
                    } else {
                        let shift = r / 2;
                        if k < shift {
                            BigRational::zero()
                        } else {
                            at(k - shift)
                        }
                    }
                })
                .collect()
        })
        .collect()
}

/// Exact conversion of every coefficient. Every finite double is a ratio of
/// integers, so this only refuses non-finite input; the floating path stays
/// available as an independent cross-check.
fn rational_base(coeffs: &[f64]) -> Option<Vec<BigRational>> {
    coeffs.iter().map(|&x| BigRational::from_float(x)).collect()
}

fn rational_to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    let numer = r.numer().to_f64().unwrap_or(f64::NAN);
    let denom = r.denom().to_f64().unwrap_or(f64::NAN);
    numer / denom
}

fn classify_exact(minors: &[BigRational]) -> (MinorSignPattern, Option<usize>) {
    if minors.first().map_or(true, |m| !m.is_positive()) {
        return (MinorSignPattern::Fail, Some(1));
    }
    let mut seen_zero = false;
    for (i, m) in minors.iter().enumerate() {
        if m.is_zero() {
            seen_zero = true;
        } else if m.is_positive() {
            if seen_zero {
                return (MinorSignPattern::Fail, Some(i + 1));
            }
        } else {
            return (MinorSignPattern::Fail, Some(i + 1));
        }
    }
    if seen_zero {
        (MinorSignPattern::PositiveThenZero, None)
    } else {
        (MinorSignPattern::AllPositive, None)
    }
}

fn classify_float(minors: &[f64], scales: &[f64]) -> (MinorSignPattern, Option<usize>) {
    if minors.is_empty() || !(minors[0] > 1e-9 * scales[0]) {
        return (MinorSignPattern::Fail, Some(1));
    }
    let mut seen_zero = false;
    for (i, (&m, &scale)) in minors.iter().zip(scales.iter()).enumerate() {
        let zeroish = m.abs() <= 1e-9 * scale;
        if zeroish {
            seen_zero = true;
        } else if m > 0.0 {
            if seen_zero {
                return (MinorSignPattern::Fail, Some(i + 1));
            }
        } else {
            return (MinorSignPattern::Fail, Some(i + 1));
        }
    }
    if seen_zero {
        (MinorSignPattern::PositiveThenZero, None)
    } else {
        (MinorSignPattern::AllPositive, None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_pattern_examples() {
        let m = build_matrices(&[1.0, 1.0], &[], 3).unwrap();
        assert_eq!(
            m.even_matrix,
            vec![
                vec![1.0, 1.0, 0.0],
                vec![0.0, 1.0, 0.0],
                vec![0.0, 1.0, 1.0]
            ]
        );

        let m = build_matrices(&[1.0], &[], 2).unwrap();
        assert_eq!(m.even_matrix, vec![vec![1.0, 0.0], vec![0.0, 0.0]]);

        let m = build_matrices(&[1.0, 3.0, 2.0], &[], 5).unwrap();
        assert_eq!(m.even_matrix[1], vec![0.0, 3.0, 4.0, 0.0, 0.0]);
        assert_eq!(m.even_matrix[3], vec![0.0, 0.0, 3.0, 4.0, 0.0]);

        assert!(matches!(
            build_matrices(&[1.0], &[], 0),
            Err(GrommerError::BadOrder { order: 0 })
        ));
    }

    #[test]
    fn leading_minor_examples() {
        let m = vec![
            vec![1.0, 1.0, 0.0],
            vec![0.0, 1.0, 0.0],
            vec![0.0, 1.0, 1.0],
        ];
        assert_eq!(leading_minors(&m), vec![1.0, 1.0, 1.0]);

        let m = vec![vec![1.0, -1.0], vec![0.0, -1.0]];
        assert_eq!(leading_minors(&m), vec![1.0, -1.0]);

        let eye: Vec<Vec<f64>> = (0..4)
            .map(|i| (0..4).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
            .collect();
        assert_eq!(leading_minors(&eye), vec![1.0; 4]);
    }

    #[test]
    fn exact_and_float_minors_agree() {
        let base = [1.0, 1.5, 0.5];
        let order = default_order(&base);
        let matrix = pattern_matrix(&pad_to(&base, order), order);
        let float_minors = leading_minors(&matrix);
        let rat: Vec<BigRational> = base
            .iter()
            .map(|&x| BigRational::from_float(x).unwrap())
            .collect();
        let exact = exact_leading_minors(&exact_pattern_matrix(&rat, order));
        for (f, e) in float_minors.iter().zip(exact.iter()) {
            assert!((f - rational_to_f64(e)).abs() <= 1e-9 * f.abs().max(1.0));
        }
    }

    #[test]
    fn negative_zero_factors_pass() {
        // (1+z)(1+z/2): zeros −1, −2
        let v = negativity_verdict(&[1.0, 1.5, 0.5], 6).unwrap();
        assert!(v.exact);
        assert!(v.accepts(), "minors: {:?}", v.minors);
        assert_eq!(v.verdict, MinorSignPattern::PositiveThenZero);
    }

    #[test]
    fn positive_zero_fails_at_the_documented_minor() {
        let v = negativity_verdict(&[1.0, -1.0], 4).unwrap();
        assert_eq!(v.verdict, MinorSignPattern::Fail);
        assert_eq!(v.fail_index, Some(2));
        assert!((v.minors[1] + 1.0).abs() < 1e-12);
    }

    #[test]
    fn constant_series_is_degenerate_positive_then_zero() {
        let v = negativity_verdict(&[1.0], 4).unwrap();
        assert_eq!(v.verdict, MinorSignPattern::PositiveThenZero);
        assert!(v.constant_series);
    }

    #[test]
    fn zero_constant_term_fails() {
        let v = negativity_verdict(&[0.0, 1.0], 4).unwrap();
        assert_eq!(v.verdict, MinorSignPattern::Fail);
        assert_eq!(v.fail_index, Some(1));
    }

    #[test]
    fn negative_leading_sign_is_normalized_away() {
        // −(1+z) has the same zero set as (1+z)
        let v = negativity_verdict(&[-1.0, -1.0], 4).unwrap();
        assert!(v.accepts(), "minors: {:?}", v.minors);
    }

    #[test]
    fn huge_coefficients_stay_exact() {
        // squares of these entries overflow the float path; the rational path
        // decides them without trouble
        let v = negativity_verdict(&[1.0, 3e200, 1e200], 8).unwrap();
        assert!(v.exact);
        assert!(v.accepts(), "minors: {:?}", v.minors);
    }

    #[test]
    fn non_finite_coefficients_fall_back_to_float() {
        let v = negativity_verdict(&[1.0, f64::NAN], 4).unwrap();
        assert!(!v.exact);
        assert!(!v.accepts());
    }
}
