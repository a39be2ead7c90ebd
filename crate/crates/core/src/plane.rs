//! Quadrants of the complex plane and axis classification.
//!
//! Quadrants are open and numbered counterclockwise: `Q1 = {Re > 0, Im > 0}`,
//! `Q2 = {Re < 0, Im > 0}`, `Q3 = {Re < 0, Im < 0}`, `Q4 = {Re > 0, Im < 0}`.

use num_complex::Complex64;

/// One of the four open quadrants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Quadrant {
    Q1,
    Q2,
    Q3,
    Q4,
}

impl Quadrant {
    /// Quadrant index 1..=4.
    pub fn index(self) -> u8 {
        match self {
            Quadrant::Q1 => 1,
            Quadrant::Q2 => 2,
            Quadrant::Q3 => 3,
            Quadrant::Q4 => 4,
        }
    }

    pub fn from_index(i: u8) -> Option<Quadrant> {
        match i {
            1 => Some(Quadrant::Q1),
            2 => Some(Quadrant::Q2),
            3 => Some(Quadrant::Q3),
            4 => Some(Quadrant::Q4),
            _ => None,
        }
    }

    /// Next quadrant counterclockwise (Q1 → Q2 → Q3 → Q4 → Q1).
    pub fn ccw(self) -> Quadrant {
        match self {
            Quadrant::Q1 => Quadrant::Q2,
            Quadrant::Q2 => Quadrant::Q3,
            Quadrant::Q3 => Quadrant::Q4,
            Quadrant::Q4 => Quadrant::Q1,
        }
    }

    /// Next quadrant clockwise (Q1 → Q4 → Q3 → Q2 → Q1).
    pub fn cw(self) -> Quadrant {
        match self {
            Quadrant::Q1 => Quadrant::Q4,
            Quadrant::Q4 => Quadrant::Q3,
            Quadrant::Q3 => Quadrant::Q2,
            Quadrant::Q2 => Quadrant::Q1,
        }
    }

    /// Reflection through the origin (Q1 ↔ Q3, Q2 ↔ Q4).
    pub fn opposite(self) -> Quadrant {
        self.ccw().ccw()
    }
}

/// Where a point sits relative to the axes, with a relative tolerance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sector {
    Interior(Quadrant),
    /// On the real axis; `true` means the positive semi-axis.
    RealAxis(bool),
    /// On the imaginary axis; `true` means the positive semi-axis.
    ImagAxis(bool),
    Origin,
}

/// Strict open-quadrant membership (axes excluded exactly).
pub fn quadrant_of(z: Complex64) -> Option<Quadrant> {
    if z.re > 0.0 && z.im > 0.0 {
        Some(Quadrant::Q1)
    } else if z.re < 0.0 && z.im > 0.0 {
        Some(Quadrant::Q2)
    } else if z.re < 0.0 && z.im < 0.0 {
        Some(Quadrant::Q3)
    } else if z.re > 0.0 && z.im < 0.0 {
        Some(Quadrant::Q4)
    } else {
        None
    }
}

/// Classify `z` against the axes with relative tolerance `rel_tol`:
/// a component smaller than `rel_tol·|z|` counts as zero.
pub fn sector_of(z: Complex64, rel_tol: f64) -> Sector {
    let scale = z.norm();
    if scale == 0.0 {
        return Sector::Origin;
    }
    let re_zero = z.re.abs() < rel_tol * scale;
    let im_zero = z.im.abs() < rel_tol * scale;
    match (re_zero, im_zero) {
        (true, true) => Sector::Origin,
        (false, true) => Sector::RealAxis(z.re > 0.0),
        (true, false) => Sector::ImagAxis(z.im > 0.0),
        (false, false) => Sector::Interior(match (z.re > 0.0, z.im > 0.0) {
            (true, true) => Quadrant::Q1,
            (false, true) => Quadrant::Q2,
            (false, false) => Quadrant::Q3,
            (true, false) => Quadrant::Q4,
        }),
    }
}
