//! The deformed metric `d_t` on the unit sphere and its one-variable
//! chord-cost form.
//!
//! For `t ∈ (0, 1]` and threshold angle `α = arcsin((√(2−t²) − t)/2)`, the
//! metric keeps the chord distance for central angles up to `π − 2α` and
//! otherwise pays `2t` plus the chord to the antipode. Because the value
//! depends on the pair only through its chord, everything reduces to
//! [`chord_cost`], a function of a single length in [0, 2]; the pair forms
//! [`d_t_sphere`] and [`d_t_pair`] exist so that this reduction and its
//! embedding independence stay testable claims instead of assumptions.

use crate::error::{Error, Result};
use crate::geometry::{
    antipodal_chord, central_angle, d_e, unit_sphere_through, Point3, SpherePoint, CHORD_SLACK,
};
use crate::rng::Rng;

/// Deformation parameter `t` with its derived constants.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Param {
    t: f64,
    alpha: f64,
    c_star: f64,
    threshold_angle: f64,
}

impl Param {
    /// Builds the constants for `t ∈ (0, 1]`.
    ///
    /// `alpha = arcsin((√(2−t²) − t)/2)` and the chord threshold
    /// `c_star = 2·cos(alpha)`, computed through the algebraically equal
    /// form `t + √(2−t²)`. At `t = 1` these collapse to `alpha = 0`,
    /// `c_star = 2`.
    pub fn new(t: f64) -> Result<Param> {
        if !(t > 0.0 && t <= 1.0) {
            return Err(Error::ParamOutOfRange(t));
        }
        let root = (2.0 - t * t).sqrt();
        let alpha = ((root - t) / 2.0).asin();
        let c_star = t + root;
        Ok(Param {
            t,
            alpha,
            c_star,
            threshold_angle: std::f64::consts::PI - 2.0 * alpha,
        })
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    /// Threshold angle `alpha ∈ [0, π/4)`.
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Chord threshold `c_star = 2·cos(alpha) ∈ (√2, 2]`; chords above it
    /// take the antipodal branch.
    pub fn chord_threshold(&self) -> f64 {
        self.c_star
    }

    /// Central angle `π − 2·alpha` at which the branches meet.
    pub fn threshold_angle(&self) -> f64 {
        self.threshold_angle
    }

    /// Chord cost without the range check; callers guarantee `c ∈ [0, 2]`.
    #[inline]
    pub(crate) fn cost_unchecked(&self, c: f64) -> f64 {
        if c <= self.c_star {
            c
        } else {
            2.0 * self.t + antipodal_chord(c)
        }
    }
}

/// Creates a [`Param`]; the free-function spelling of [`Param::new`].
pub fn make_param(t: f64) -> Result<Param> {
    Param::new(t)
}

/// The sphere metric: `d_E(P, Q)` while `∠POQ ≤ π − 2α` (ties take this
/// branch), else `2t + d_E(−P, Q)`.
pub fn d_t_sphere(param: &Param, p: &SpherePoint, q: &SpherePoint) -> f64 {
    if central_angle(p, q) <= param.threshold_angle {
        p.chord_to(q)
    } else {
        2.0 * param.t + p.antipode().chord_to(q)
    }
}

/// `d_t` as a function of the chord alone: `c` up to the threshold
/// `c_star`, then `2t + √(4 − c²)` (the chord to the antipode). Continuous
/// at `c_star`.
pub fn chord_cost(param: &Param, c: f64) -> Result<f64> {
    if !c.is_finite() || c < 0.0 || c > 2.0 + CHORD_SLACK {
        return Err(Error::OutOfRange {
            name: "chord",
            value: c,
            min: 0.0,
            max: 2.0,
        });
    }
    Ok(param.cost_unchecked(c.min(2.0)))
}

/// `d_t` between two points of R³ at Euclidean distance at most 2,
/// evaluated by pulling the pair back through a sampled unit-sphere
/// embedding. Agrees with `chord_cost` of the separation for every
/// embedding.
pub fn d_t_pair(param: &Param, x: &Point3, y: &Point3, rng: &mut Rng) -> Result<f64> {
    let d = d_e(x, y);
    if d > 2.0 + CHORD_SLACK {
        return Err(Error::StepTooLong(d));
    }
    let embedding = unit_sphere_through(x, y, rng)?;
    let u = embedding.pull_back(x)?;
    let v = embedding.pull_back(y)?;
    Ok(d_t_sphere(param, &u, &v))
}
