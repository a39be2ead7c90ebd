//! Classification of the constant `c` and verification of the zero
//! distribution against it.
//!
//! The four cases are decided by `c` alone: `Im c² > 0` (case 1, zeros cycle
//! counterclockwise), `Im c² < 0` (case 2, clockwise), `Im c = 0` (case 3,
//! conjugate pairs and real zeros), `Re c = 0` (case 4, mirror pairs and
//! purely imaginary zeros). [`verify_distribution`] walks a computed zero list
//! clause by clause: modulus ordering, simplicity bounds, axis membership,
//! quadrant cycling, pairing, sign alternation, and the first-zero signs.
//!
//! For odd `j` the expected pattern is the even-`j` pattern after the
//! substitution `c ↦ −c`; the starting-quadrant table is hard-coded and
//! unit-tested against the independent sign clauses, so a transcription slip
//! in either encoding shows up as a test failure.

use num_complex::Complex64;
use thiserror::Error;

use crate::model::ConstantC;
use crate::plane::{quadrant_of, Quadrant};
use crate::roots::ZeroList;

/// Axis tolerance for classifying `c` itself.
pub const C_AXIS_TOLERANCE: f64 = 1e-10;

/// Relative axis tolerance for zeros (zeros are polished to ~1e−12).
pub const ZERO_AXIS_TOLERANCE: f64 = 1e-8;

/// Relative tolerance under which two moduli count as a pair tie.
const MODULUS_TIE_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Error)]
pub enum VerdictError {
    #[error("both |Im c| and |Re c| fall below the axis tolerance; input is corrupted")]
    AmbiguousCase,
    #[error("zero list is empty")]
    EmptyZeroList,
}

/// The four cases of the distribution theorem.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CaseId {
    /// `Im c² > 0`: simple zeros, strictly increasing moduli, counterclockwise.
    Case1,
    /// `Im c² < 0`: simple zeros, strictly increasing moduli, clockwise.
    Case2,
    /// `Im c = 0`: conjugate or real pairs; real zeros may be double.
    Case3,
    /// `Re c = 0`: mirror pairs; purely imaginary zeros may be double.
    Case4,
}

impl CaseId {
    pub fn index(self) -> u8 {
        match self {
            CaseId::Case1 => 1,
            CaseId::Case2 => 2,
            CaseId::Case3 => 3,
            CaseId::Case4 => 4,
        }
    }
}

/// Decide the case from `c` with the axis tolerance.
pub fn classify_case(c: ConstantC) -> Result<CaseId, VerdictError> {
    let v = c.value();
    let im_small = v.im.abs() < C_AXIS_TOLERANCE;
    let re_small = v.re.abs() < C_AXIS_TOLERANCE;
    match (im_small, re_small) {
        (true, true) => Err(VerdictError::AmbiguousCase),
        (true, false) => Ok(CaseId::Case3),
        (false, true) => Ok(CaseId::Case4),
        (false, false) => {
            // Im c² = 2·Re c·Im c
            if v.re * v.im > 0.0 {
                Ok(CaseId::Case1)
            } else {
                Ok(CaseId::Case2)
            }
        }
    }
}

/// Outcome of one clause.
#[derive(Clone, Debug, PartialEq)]
pub struct ClauseResult {
    pub name: &'static str,
    pub passed: bool,
    pub witness: String,
}

impl ClauseResult {
    fn pass(name: &'static str) -> ClauseResult {
        ClauseResult {
            name,
            passed: true,
            witness: String::new(),
        }
    }

    fn fail(name: &'static str, witness: String) -> ClauseResult {
        ClauseResult {
            name,
            passed: false,
            witness,
        }
    }
}

/// Full clause-by-clause verdict for one zero list.
#[derive(Clone, Debug)]
pub struct DistributionReport {
    pub case: CaseId,
    pub clause_results: Vec<ClauseResult>,
    pub first_zero_checks: Vec<ClauseResult>,
    pub overall: bool,
}

impl DistributionReport {
    pub fn passed(&self) -> bool {
        self.overall
    }

    pub fn failures(&self) -> Vec<&ClauseResult> {
        self.clause_results
            .iter()
            .chain(self.first_zero_checks.iter())
            .filter(|r| !r.passed)
            .collect()
    }
}

/// The sign conditions the first zero must satisfy, per case.
#[derive(Clone, Copy, Debug)]
pub struct FirstZeroPredicate {
    case: CaseId,
    c: Complex64,
    j_even: bool,
}

/// Build the first-zero predicate for a classified `c` and factor `j`.
pub fn expected_first_zero(c: ConstantC, j: u32) -> Result<FirstZeroPredicate, VerdictError> {
    Ok(FirstZeroPredicate {
        case: classify_case(c)?,
        c: c.value(),
        j_even: j % 2 == 0,
    })
}

impl FirstZeroPredicate {
    fn parity(&self) -> f64 {
        if self.j_even {
            1.0
        } else {
            -1.0
        }
    }

    /// Evaluate the case's sign conditions on a candidate first zero.
    pub fn check(&self, z1: Complex64) -> bool {
        let p = self.parity();
        match self.case {
            CaseId::Case1 => p * self.c.re * z1.re > 0.0 && z1.re * z1.im < 0.0,
            CaseId::Case2 => p * self.c.im * z1.im < 0.0 && z1.re * z1.im > 0.0,
            CaseId::Case3 => p * self.c.re * z1.re > 0.0 && z1.re * z1.im <= 0.0,
            CaseId::Case4 => {
                p * self.c.im * z1.im < 0.0 && z1.re.abs() <= ZERO_AXIS_TOLERANCE * z1.norm()
            }
        }
    }

    /// Quadrant of the first zero per the distribution listings (cases 1/2
    /// only): `c ∈ Q_l ⇒ z₁ ∈ Q_{5−l}` for even `j`, after `c ↦ −c` for odd.
    pub fn expected_quadrant(&self) -> Option<Quadrant> {
        let c_eff = if self.j_even { self.c } else { -self.c };
        let q = quadrant_of(c_eff)?;
        Some(match q {
            Quadrant::Q1 => Quadrant::Q4,
            Quadrant::Q2 => Quadrant::Q3,
            Quadrant::Q3 => Quadrant::Q2,
            Quadrant::Q4 => Quadrant::Q1,
        })
    }
}

fn fmt_z(z: Complex64) -> String {
    format!("{:+.6e}{:+.6e}i", z.re, z.im)
}

fn is_real(z: Complex64) -> bool {
    z.im.abs() <= ZERO_AXIS_TOLERANCE * z.norm()
}

fn is_imaginary(z: Complex64) -> bool {
    z.re.abs() <= ZERO_AXIS_TOLERANCE * z.norm()
}

fn is_tie(a: Complex64, b: Complex64) -> bool {
    (a.norm() - b.norm()).abs() <= MODULUS_TIE_TOLERANCE * 1.0_f64.max(a.norm())
}

/// Verify every clause of the distribution theorem for `zeros` against the
/// constant `c` and the odd-part order `j`.
pub fn verify_distribution(
    zeros: &ZeroList,
    c: ConstantC,
    j: u32,
) -> Result<DistributionReport, VerdictError> {
    if zeros.is_empty() {
        return Err(VerdictError::EmptyZeroList);
    }
    let case = classify_case(c)?;
    let predicate = FirstZeroPredicate {
        case,
        c: c.value(),
        j_even: j % 2 == 0,
    };
    let report = match case {
        CaseId::Case1 | CaseId::Case2 => verify_rotating(zeros, case, &predicate),
        CaseId::Case3 => verify_case3(zeros, &predicate),
        CaseId::Case4 => verify_case4(zeros, &predicate),
    };
    Ok(report)
}

/// Cases 1 and 2: simple zeros, strictly increasing moduli, quadrant cycling.
fn verify_rotating(
    zeros: &ZeroList,
    case: CaseId,
    predicate: &FirstZeroPredicate,
) -> DistributionReport {
    let mut clauses = Vec::new();
    let entries = zeros.entries();

    // all zeros simple
    match entries.iter().position(|e| e.multiplicity != 1) {
        None => clauses.push(ClauseResult::pass("all-simple")),
        Some(k) => clauses.push(ClauseResult::fail(
            "all-simple",
            format!(
                "zero {} has multiplicity {}",
                fmt_z(entries[k].location),
                entries[k].multiplicity
            ),
        )),
    }

    // strictly increasing moduli
    let bad = entries
        .windows(2)
        .position(|w| !(w[1].location.norm() > w[0].location.norm()));
    match bad {
        None => clauses.push(ClauseResult::pass("moduli-strictly-increasing")),
        Some(k) => clauses.push(ClauseResult::fail(
            "moduli-strictly-increasing",
            format!(
                "|z[{}]| = {:.12e} vs |z[{}]| = {:.12e}",
                k,
                entries[k].location.norm(),
                k + 1,
                entries[k + 1].location.norm()
            ),
        )),
    }

    // Im z² ≠ 0: no zero on either axis
    let on_axis = entries
        .iter()
        .position(|e| is_real(e.location) || is_imaginary(e.location));
    match on_axis {
        None => clauses.push(ClauseResult::pass("no-axis-zeros")),
        Some(k) => clauses.push(ClauseResult::fail(
            "no-axis-zeros",
            format!("zero {} lies on an axis", fmt_z(entries[k].location)),
        )),
    }

    // quadrant cycling, counterclockwise for case 1, clockwise for case 2
    let mut cycle_ok = ClauseResult::pass("quadrant-cycling");
    let mut prev: Option<Quadrant> = None;
    for (k, e) in entries.iter().enumerate() {
        match quadrant_of(e.location) {
            None => {
                cycle_ok = ClauseResult::fail(
                    "quadrant-cycling",
                    format!("zero {} has no open quadrant", fmt_z(e.location)),
                );
                break;
            }
            Some(q) => {
                if let Some(p) = prev {
                    let expected = if case == CaseId::Case1 { p.ccw() } else { p.cw() };
                    if q != expected {
                        cycle_ok = ClauseResult::fail(
                            "quadrant-cycling",
                            format!(
                                "z[{}] = {} in Q{} but Q{} expected after Q{}",
                                k,
                                fmt_z(e.location),
                                q.index(),
                                expected.index(),
                                p.index()
                            ),
                        );
                        break;
                    }
                }
                prev = Some(q);
            }
        }
    }
    clauses.push(cycle_ok);

    let first = entries[0].location;
    let mut first_checks = vec![check_first_signs(predicate, first)];
    if let Some(expected) = predicate.expected_quadrant() {
        let got = quadrant_of(first);
        first_checks.push(if got == Some(expected) {
            ClauseResult::pass("first-zero-quadrant")
        } else {
            ClauseResult::fail(
                "first-zero-quadrant",
                format!(
                    "z₁ = {} not in expected Q{}",
                    fmt_z(first),
                    expected.index()
                ),
            )
        });
    }

    finish(case, clauses, first_checks)
}

fn check_first_signs(predicate: &FirstZeroPredicate, z1: Complex64) -> ClauseResult {
    if predicate.check(z1) {
        ClauseResult::pass("first-zero-signs")
    } else {
        ClauseResult::fail("first-zero-signs", format!("z₁ = {}", fmt_z(z1)))
    }
}

/// Case 3: pairs `(z_{2k−1}, z_{2k})` are conjugate (equal moduli) or real on
/// one semi-axis (distinct moduli); pairs alternate half-planes.
fn verify_case3(zeros: &ZeroList, predicate: &FirstZeroPredicate) -> DistributionReport {
    let mut clauses = Vec::new();
    let entries = zeros.entries();
    let zs = zeros.expanded();

    // multiplicity ≤ 2, doubles only on the real axis
    let bad = entries.iter().position(|e| {
        e.multiplicity > 2 || (e.multiplicity == 2 && !is_real(e.location))
    });
    match bad {
        None => clauses.push(ClauseResult::pass("multiplicity-bounds")),
        Some(k) => clauses.push(ClauseResult::fail(
            "multiplicity-bounds",
            format!(
                "zero {} has multiplicity {}",
                fmt_z(entries[k].location),
                entries[k].multiplicity
            ),
        )),
    }

    // no purely imaginary zeros
    match zs.iter().position(|&z| is_imaginary(z)) {
        None => clauses.push(ClauseResult::pass("no-imaginary-zeros")),
        Some(k) => clauses.push(ClauseResult::fail(
            "no-imaginary-zeros",
            format!("z[{}] = {} is purely imaginary", k, fmt_z(zs[k])),
        )),
    }

    // modulus pattern |z1| ≤ |z2| < |z3| ≤ |z4| < …: strict growth between pairs
    let mut pattern = ClauseResult::pass("modulus-pattern");
    for k in (1..zs.len()).step_by(2) {
        if k + 1 < zs.len() && is_tie(zs[k], zs[k + 1]) {
            pattern = ClauseResult::fail(
                "modulus-pattern",
                format!(
                    "pair boundary |z[{}]| = |z[{}]| not strictly increasing",
                    k,
                    k + 1
                ),
            );
            break;
        }
    }
    clauses.push(pattern);

    // pairing inside each complete pair
    let mut pairing = ClauseResult::pass("pairing");
    for (p, pair) in zs.chunks(2).enumerate() {
        if pair.len() < 2 {
            break;
        }
        let (za, zb) = (pair[0], pair[1]);
        let scale = 1.0_f64.max(za.norm());
        let ok = if is_tie(za, zb) {
            (za - zb.conj()).norm() <= MODULUS_TIE_TOLERANCE * scale
        } else {
            is_real(za)
                && is_real(zb)
                && za.re.signum() == zb.re.signum()
        };
        if !ok {
            pairing = ClauseResult::fail(
                "pairing",
                format!(
                    "pair {} ({}, {}) is neither conjugate nor same-side real",
                    p,
                    fmt_z(za),
                    fmt_z(zb)
                ),
            );
            break;
        }
    }
    clauses.push(pairing);

    // sign Re z_{2k} = −sign Re z_{2k+1}: pairs alternate half-planes
    let mut alternation = ClauseResult::pass("re-sign-alternation");
    for k in (1..zs.len().saturating_sub(1)).step_by(2) {
        if zs[k].re.signum() != -zs[k + 1].re.signum() {
            alternation = ClauseResult::fail(
                "re-sign-alternation",
                format!(
                    "Re z[{}] = {:+.3e} and Re z[{}] = {:+.3e} do not alternate",
                    k,
                    zs[k].re,
                    k + 1,
                    zs[k + 1].re
                ),
            );
            break;
        }
    }
    clauses.push(alternation);

    // first-zero signs, on the canonical member of the first pair:
    // the theorem labels conjugate pairs so that Re z₁ Im z₁ ≤ 0
    let z1 = canonical_pair_member(&zs[..zs.len().min(2)], false);
    let first_checks = vec![check_first_signs(predicate, z1)];

    finish(CaseId::Case3, clauses, first_checks)
}

/// Case 4: `z₁` purely imaginary, then pairs `(z_{2k}, z_{2k+1})` mirror
/// through the imaginary axis or degenerate onto it.
fn verify_case4(zeros: &ZeroList, predicate: &FirstZeroPredicate) -> DistributionReport {
    let mut clauses = Vec::new();
    let entries = zeros.entries();
    let zs = zeros.expanded();

    let bad = entries.iter().position(|e| {
        e.multiplicity > 2 || (e.multiplicity == 2 && !is_imaginary(e.location))
    });
    match bad {
        None => clauses.push(ClauseResult::pass("multiplicity-bounds")),
        Some(k) => clauses.push(ClauseResult::fail(
            "multiplicity-bounds",
            format!(
                "zero {} has multiplicity {}",
                fmt_z(entries[k].location),
                entries[k].multiplicity
            ),
        )),
    }

    match zs.iter().position(|&z| is_real(z)) {
        None => clauses.push(ClauseResult::pass("no-real-zeros")),
        Some(k) => clauses.push(ClauseResult::fail(
            "no-real-zeros",
            format!("z[{}] = {} is real", k, fmt_z(zs[k])),
        )),
    }

    // |z1| < |z2| ≤ |z3| < |z4| ≤ |z5| …: strict growth out of z1 and between pairs
    let mut pattern = ClauseResult::pass("modulus-pattern");
    for k in (0..zs.len()).step_by(2) {
        if k + 1 < zs.len() && is_tie(zs[k], zs[k + 1]) {
            pattern = ClauseResult::fail(
                "modulus-pattern",
                format!(
                    "pair boundary |z[{}]| = |z[{}]| not strictly increasing",
                    k,
                    k + 1
                ),
            );
            break;
        }
    }
    clauses.push(pattern);

    let mut first_axis = ClauseResult::pass("first-zero-on-imaginary-axis");
    if !is_imaginary(zs[0]) {
        first_axis = ClauseResult::fail(
            "first-zero-on-imaginary-axis",
            format!("z₁ = {}", fmt_z(zs[0])),
        );
    }
    clauses.push(first_axis);

    // pairing of (z_{2k}, z_{2k+1}) in 1-based indices: chunks after z1
    let mut pairing = ClauseResult::pass("pairing");
    for (p, pair) in zs[1..].chunks(2).enumerate() {
        if pair.len() < 2 {
            break;
        }
        let (za, zb) = (pair[0], pair[1]);
        let scale = 1.0_f64.max(za.norm());
        let ok = if is_tie(za, zb) {
            (za + zb.conj()).norm() <= MODULUS_TIE_TOLERANCE * scale
        } else {
            is_imaginary(za)
                && is_imaginary(zb)
                && za.im.signum() == zb.im.signum()
        };
        if !ok {
            pairing = ClauseResult::fail(
                "pairing",
                format!(
                    "pair {} ({}, {}) is neither mirror nor same-side imaginary",
                    p,
                    fmt_z(za),
                    fmt_z(zb)
                ),
            );
            break;
        }
    }
    clauses.push(pairing);

    // sign Im z_{2k−1} = −sign Im z_{2k}: half-plane alternation
    let mut alternation = ClauseResult::pass("im-sign-alternation");
    for k in (0..zs.len().saturating_sub(1)).step_by(2) {
        if zs[k].im.signum() != -zs[k + 1].im.signum() {
            alternation = ClauseResult::fail(
                "im-sign-alternation",
                format!(
                    "Im z[{}] = {:+.3e} and Im z[{}] = {:+.3e} do not alternate",
                    k,
                    zs[k].im,
                    k + 1,
                    zs[k + 1].im
                ),
            );
            break;
        }
    }
    clauses.push(alternation);

    let first_checks = vec![check_first_signs(predicate, zs[0])];

    finish(CaseId::Case4, clauses, first_checks)
}

/// Pick the theorem's canonical member of an equal-modulus pair: the one with
/// `Re·Im ≤ 0` for case 3 (`mirror = false`), `Re·Im ≥ 0` for case 4.
fn canonical_pair_member(pair: &[Complex64], mirror: bool) -> Complex64 {
    match pair {
        [] => Complex64::ZERO,
        [z] => *z,
        [za, zb, ..] => {
            if !is_tie(*za, *zb) {
                return *za;
            }
            let want = |z: &Complex64| {
                if mirror {
                    z.re * z.im >= 0.0
                } else {
                    z.re * z.im <= 0.0
                }
            };
            if want(za) {
                *za
            } else {
                *zb
            }
        }
    }
}

fn finish(
    case: CaseId,
    clauses: Vec<ClauseResult>,
    first_checks: Vec<ClauseResult>,
) -> DistributionReport {
    let overall = clauses.iter().all(|c| c.passed) && first_checks.iter().all(|c| c.passed);
    DistributionReport {
        case,
        clause_results: clauses,
        first_zero_checks: first_checks,
        overall,
    }
}
