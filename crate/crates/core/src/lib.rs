//! Zero localization for entire functions of the form `F(z) = f(z²) + z·g(z²)`,
//! where `f` has only negative zeros and `g` only positive ones.
//!
//! The crate builds such functions from their factor data, finds and classifies
//! their zeros, and verifies the characteristic distribution (strictly ordered
//! moduli, quadrant cycling, conjugate pairing on the axes). The same machinery
//! drives the q-exponential suites: the function `Σ q^{k(k−1)/2} z^k / k!` and
//! its polynomial companions, whose zeros for real `q²` fall under the theorem.
//!
//! Module map:
//! - [`model`] — factorized function classes, the ratio `R`, power series.
//! - [`roots`] — simultaneous all-root solving, trust disks, multiplicities.
//! - [`locus`] — the level curve `ln|R| = 0`, the angle function `l(r)`,
//!   argument tracing, and zeros as c-points.
//! - [`verdict`] — case classification of `c` and clause-by-clause checking of
//!   a zero list against the distribution theorem.
//! - [`grommer`] — negativity-of-zeros test via leading principal minors.
//! - [`qtheta`] — q-exponential series, Gauss-sum representation identities,
//!   interlacing chains, and the conjecture suites.

pub mod grommer;
pub mod locus;
pub mod model;
pub mod plane;
pub mod qtheta;
pub mod roots;
pub mod verdict;

pub use model::{ConstantC, Provenance, SeriesFunction, StructuredFunction};
pub use plane::Quadrant;
pub use roots::{FoundRoots, TrustDisk, ZeroEntry, ZeroList};
