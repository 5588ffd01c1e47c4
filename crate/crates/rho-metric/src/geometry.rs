//! Floating-point primitives for R³ and the unit sphere S².
//!
//! Points double as displacement vectors; the handful of operations the
//! metrics need (dot, cross, norms, rigid motions, unit-sphere embeddings
//! through point pairs) are implemented directly rather than pulled from a
//! linear-algebra crate.

use crate::error::{Error, Result};
use crate::rng::Rng;
use rand::Rng as _;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Normalization tolerance for unit vectors.
pub const UNIT_NORM_TOL: f64 = 1e-12;

/// Slack accepted on the chord range [0, 2] before an input is rejected.
pub const CHORD_SLACK: f64 = 1e-12;

/// A point of R³, also used as a displacement vector.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Point3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Point3 {
    pub const ORIGIN: Point3 = Point3 {
        x: 0.0,
        y: 0.0,
        z: 0.0,
    };

    pub fn new(x: f64, y: f64, z: f64) -> Point3 {
        Point3 { x, y, z }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    pub fn add(&self, other: &Point3) -> Point3 {
        Point3::new(self.x + other.x, self.y + other.y, self.z + other.z)
    }

    pub fn sub(&self, other: &Point3) -> Point3 {
        Point3::new(self.x - other.x, self.y - other.y, self.z - other.z)
    }

    pub fn scale(&self, s: f64) -> Point3 {
        Point3::new(self.x * s, self.y * s, self.z * s)
    }

    pub fn dot(&self, other: &Point3) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn cross(&self, other: &Point3) -> Point3 {
        Point3::new(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    /// Euclidean distance `d_E` to another point.
    pub fn dist(&self, other: &Point3) -> f64 {
        self.sub(other).norm()
    }

    pub fn midpoint(&self, other: &Point3) -> Point3 {
        self.add(other).scale(0.5)
    }

    fn normalized(&self) -> Option<Point3> {
        let n = self.norm();
        if n > 1e-300 && n.is_finite() {
            Some(self.scale(1.0 / n))
        } else {
            None
        }
    }
}

/// Euclidean distance between two points.
pub fn d_e(p: &Point3, q: &Point3) -> f64 {
    p.dist(q)
}

/// A point of the unit sphere centered at the origin.
///
/// The stored vector is normalized on construction; `|‖u‖ − 1| ≤ 1e−12`
/// holds afterwards.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpherePoint {
    u: Point3,
}

impl SpherePoint {
    /// Normalizes `v` onto the sphere. Fails on non-finite or (near-)zero
    /// input.
    pub fn new(v: Point3) -> Result<SpherePoint> {
        if !v.is_finite() {
            return Err(Error::NonFinite(v.x));
        }
        match v.normalized() {
            Some(u) => Ok(SpherePoint { u }),
            None => Err(Error::OutOfRange {
                name: "sphere point norm",
                value: v.norm(),
                min: f64::MIN_POSITIVE,
                max: f64::MAX,
            }),
        }
    }

    /// The underlying unit vector.
    pub fn unit(&self) -> Point3 {
        self.u
    }

    /// The diametrically opposite point `−P`; an involution.
    pub fn antipode(&self) -> SpherePoint {
        SpherePoint {
            u: self.u.scale(-1.0),
        }
    }

    /// Chord (Euclidean) distance to another sphere point, in [0, 2].
    pub fn chord_to(&self, other: &SpherePoint) -> f64 {
        self.u.dist(&other.u)
    }
}

/// Central angle `∠POQ ∈ [0, π]` between two sphere points.
///
/// Computed as `atan2(‖u×v‖, u·v)`, which stays accurate near both 0 and π
/// where a bare inverse cosine loses digits.
pub fn central_angle(p: &SpherePoint, q: &SpherePoint) -> f64 {
    let u = p.unit();
    let v = q.unit();
    u.cross(&v).norm().atan2(u.dot(&v))
}

/// Chord length `2·sin(θ/2)` subtended by a central angle `θ ∈ [0, π]`.
pub fn chord_of_angle(theta: f64) -> Result<f64> {
    if !(0.0..=PI).contains(&theta) {
        return Err(Error::OutOfRange {
            name: "central angle",
            value: theta,
            min: 0.0,
            max: PI,
        });
    }
    Ok(2.0 * (theta / 2.0).sin())
}

/// Central angle subtending a chord `c ∈ [0, 2]`; inverse of
/// [`chord_of_angle`].
pub fn angle_of_chord(c: f64) -> Result<f64> {
    if !(0.0..=2.0).contains(&c) {
        return Err(Error::OutOfRange {
            name: "chord",
            value: c,
            min: 0.0,
            max: 2.0,
        });
    }
    Ok(2.0 * (c / 2.0).asin())
}

/// Chord to the antipode: if `P, Q` are at chord `c`, then `−P, Q` are at
/// chord `√(4 − c²)`.
pub fn antipodal_chord(c: f64) -> f64 {
    (4.0 - c * c).max(0.0).sqrt()
}

/// A 3×3 matrix; rotation parts of isometries and embedding frames.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat3(pub [[f64; 3]; 3]);

impl Mat3 {
    pub const IDENTITY: Mat3 = Mat3([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]);

    pub fn mul_vec(&self, v: &Point3) -> Point3 {
        let m = &self.0;
        Point3::new(
            m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
            m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
            m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z,
        )
    }

    pub fn transpose(&self) -> Mat3 {
        let m = &self.0;
        Mat3([
            [m[0][0], m[1][0], m[2][0]],
            [m[0][1], m[1][1], m[2][1]],
            [m[0][2], m[1][2], m[2][2]],
        ])
    }

    pub fn mul(&self, other: &Mat3) -> Mat3 {
        let a = &self.0;
        let b = &other.0;
        let mut out = [[0.0; 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
            }
        }
        Mat3(out)
    }

    pub fn det(&self) -> f64 {
        let m = &self.0;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    /// Max-norm of `MᵀM − I`; zero for exactly orthogonal matrices.
    pub fn orthogonality_defect(&self) -> f64 {
        let g = self.transpose().mul(self);
        let mut worst: f64 = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((g.0[i][j] - want).abs());
            }
        }
        worst
    }

    fn from_columns(c0: Point3, c1: Point3, c2: Point3) -> Mat3 {
        Mat3([
            [c0.x, c1.x, c2.x],
            [c0.y, c1.y, c2.y],
            [c0.z, c1.z, c2.z],
        ])
    }
}

/// A Euclidean isometry `p ↦ R·p + τ` with `R` orthogonal (det ±1).
#[derive(Clone, Copy, Debug)]
pub struct Isometry {
    rotation: Mat3,
    translation: Point3,
}

impl Isometry {
    pub fn identity() -> Isometry {
        Isometry {
            rotation: Mat3::IDENTITY,
            translation: Point3::ORIGIN,
        }
    }

    pub fn translation(v: Point3) -> Isometry {
        Isometry {
            rotation: Mat3::IDENTITY,
            translation: v,
        }
    }

    /// Builds an isometry from an orthogonal matrix and offset.
    pub fn new(rotation: Mat3, translation: Point3) -> Result<Isometry> {
        let defect = rotation.orthogonality_defect();
        if defect > UNIT_NORM_TOL {
            return Err(Error::OutOfRange {
                name: "orthogonality defect",
                value: defect,
                min: 0.0,
                max: UNIT_NORM_TOL,
            });
        }
        Ok(Isometry {
            rotation,
            translation,
        })
    }

    pub fn rotation(&self) -> &Mat3 {
        &self.rotation
    }

    pub fn apply(&self, p: &Point3) -> Point3 {
        self.rotation.mul_vec(p).add(&self.translation)
    }
}

/// Applies an isometry to a point.
pub fn apply(iso: &Isometry, p: &Point3) -> Point3 {
    iso.apply(p)
}

/// Standard-normal draw via Box–Muller on the open unit interval.
fn gaussian(rng: &mut Rng) -> f64 {
    loop {
        let u: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
        let v: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
        let g = (-2.0 * u.ln()).sqrt() * v.cos();
        if g.is_finite() {
            return g;
        }
    }
}

/// Uniformly random unit vector.
pub fn random_unit(rng: &mut Rng) -> Point3 {
    loop {
        let v = Point3::new(gaussian(rng), gaussian(rng), gaussian(rng));
        if let Some(u) = v.normalized() {
            return u;
        }
    }
}

/// Uniformly random point of S².
pub fn random_sphere_point(rng: &mut Rng) -> SpherePoint {
    SpherePoint { u: random_unit(rng) }
}

/// Uniform point in the axis-aligned cube `[-half, half]³`.
pub fn random_in_box(rng: &mut Rng, half: f64) -> Point3 {
    Point3::new(
        rng.gen_range(-half..=half),
        rng.gen_range(-half..=half),
        rng.gen_range(-half..=half),
    )
}

/// Uniformly random rotation (det +1) via Gram–Schmidt on Gaussian columns.
pub fn random_rotation(rng: &mut Rng) -> Mat3 {
    loop {
        let a = random_unit(rng);
        let b0 = Point3::new(gaussian(rng), gaussian(rng), gaussian(rng));
        let b = b0.sub(&a.scale(a.dot(&b0)));
        let Some(b) = b.normalized() else { continue };
        let c = a.cross(&b);
        let m = Mat3::from_columns(a, b, c);
        if m.orthogonality_defect() <= UNIT_NORM_TOL {
            return m;
        }
    }
}

/// Uniformly random orthogonal matrix: a rotation, reflected with
/// probability 1/2.
pub fn random_orthogonal(rng: &mut Rng) -> Mat3 {
    let mut m = random_rotation(rng);
    if rng.gen_bool(0.5) {
        for row in m.0.iter_mut() {
            row[2] = -row[2];
        }
    }
    m
}

/// Random isometry: uniform orthogonal part and a translation drawn from
/// `[-box_half, box_half]³`.
pub fn random_isometry(rng: &mut Rng, box_half: f64) -> Isometry {
    Isometry {
        rotation: random_orthogonal(rng),
        translation: random_in_box(rng, box_half),
    }
}

/// An isometric embedding `ε: S² → R³`, `u ↦ center + R·u`, of the unit
/// sphere.
#[derive(Clone, Copy, Debug)]
pub struct SphereEmbedding {
    center: Point3,
    rotation: Mat3,
}

impl SphereEmbedding {
    pub fn center(&self) -> Point3 {
        self.center
    }

    /// Image of a sphere point in R³.
    pub fn embed(&self, p: &SpherePoint) -> Point3 {
        self.center.add(&self.rotation.mul_vec(&p.unit()))
    }

    /// Preimage of a point of the embedded sphere. Remains well-defined (by
    /// normalization) for points within `1e−9` of the sphere.
    pub fn pull_back(&self, p: &Point3) -> Result<SpherePoint> {
        let v = self.rotation.transpose().mul_vec(&p.sub(&self.center));
        let n = v.norm();
        if (n - 1.0).abs() > 1e-9 {
            return Err(Error::OutOfRange {
                name: "distance to embedding center",
                value: n,
                min: 1.0 - 1e-9,
                max: 1.0 + 1e-9,
            });
        }
        SpherePoint::new(v)
    }
}

/// Two orthonormal vectors spanning the plane perpendicular to `axis`
/// (which must be unit).
fn perp_basis(axis: &Point3) -> (Point3, Point3) {
    // start from the coordinate axis least aligned with `axis`
    let seed = if axis.x.abs() <= axis.y.abs() && axis.x.abs() <= axis.z.abs() {
        Point3::new(1.0, 0.0, 0.0)
    } else if axis.y.abs() <= axis.z.abs() {
        Point3::new(0.0, 1.0, 0.0)
    } else {
        Point3::new(0.0, 0.0, 1.0)
    };
    let e1 = seed
        .sub(&axis.scale(axis.dot(&seed)))
        .normalized()
        .expect("seed axis chosen non-parallel");
    let e2 = axis.cross(&e1);
    (e1, e2)
}

/// An isometric embedding of the unit sphere whose image contains both `x`
/// and `y` (requires `d_E(x, y) ≤ 2`).
///
/// When the chord is strictly below 2 a whole circle of centers is valid;
/// the center is sampled from it (and the frame is a random rotation), so
/// repeated calls exercise genuinely different embeddings. At chord exactly
/// 2 the center is forced to the midpoint. For `x = y` the center is a
/// uniform point at distance 1.
pub fn unit_sphere_through(x: &Point3, y: &Point3, rng: &mut Rng) -> Result<SphereEmbedding> {
    if !x.is_finite() || !y.is_finite() {
        return Err(Error::NonFinite(f64::NAN));
    }
    let d = x.dist(y);
    if d > 2.0 + CHORD_SLACK {
        return Err(Error::NoEmbedding(d));
    }
    let center = if d <= UNIT_NORM_TOL {
        x.add(&random_unit(rng))
    } else {
        let axis = y.sub(x).scale(1.0 / d);
        let half = d / 2.0;
        let radius = (1.0 - half * half).max(0.0).sqrt();
        let (e1, e2) = perp_basis(&axis);
        let phi = rng.gen_range(0.0..std::f64::consts::TAU);
        x.midpoint(y)
            .add(&e1.scale(radius * phi.cos()))
            .add(&e2.scale(radius * phi.sin()))
    };
    Ok(SphereEmbedding {
        center,
        rotation: random_rotation(rng),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::substream;

    #[test]
    fn d_e_basics() {
        let o = Point3::ORIGIN;
        assert_eq!(d_e(&o, &o), 0.0);
        assert_eq!(d_e(&o, &Point3::new(3.0, 4.0, 0.0)), 5.0);
        assert_eq!(
            d_e(&Point3::new(1.0, 0.0, 0.0), &Point3::new(-1.0, 0.0, 0.0)),
            2.0
        );
    }

    #[test]
    fn central_angle_basics() {
        let p = SpherePoint::new(Point3::new(1.0, 0.0, 0.0)).unwrap();
        let q = SpherePoint::new(Point3::new(0.0, 1.0, 0.0)).unwrap();
        assert_eq!(central_angle(&p, &p), 0.0);
        assert!((central_angle(&p, &p.antipode()) - PI).abs() <= 1e-15);
        assert!((central_angle(&p, &q) - PI / 2.0).abs() <= 1e-15);
    }

    #[test]
    fn chord_angle_bridge() {
        assert!((chord_of_angle(PI).unwrap() - 2.0).abs() <= 1e-15);
        assert_eq!(chord_of_angle(0.0).unwrap(), 0.0);
        assert!((angle_of_chord(2.0_f64.sqrt()).unwrap() - PI / 2.0).abs() <= 1e-15);
        assert!(chord_of_angle(-0.1).is_err());
        assert!(chord_of_angle(PI + 0.1).is_err());
        assert!(angle_of_chord(2.1).is_err());
        assert!(angle_of_chord(f64::NAN).is_err());
    }

    #[test]
    fn chord_angle_inverse_on_grid() {
        // 10⁴ grid points across both closed ranges
        for i in 0..=10_000u32 {
            let theta = PI * f64::from(i) / 10_000.0;
            let c = chord_of_angle(theta).unwrap();
            assert!((angle_of_chord(c).unwrap() - theta).abs() <= 1e-12);
            let c0 = 2.0 * f64::from(i) / 10_000.0;
            let back = chord_of_angle(angle_of_chord(c0).unwrap()).unwrap();
            assert!((back - c0).abs() <= 1e-12);
        }
    }

    #[test]
    fn antipode_involution_and_angle() {
        let mut rng = substream(11, 0);
        for _ in 0..100 {
            let p = random_sphere_point(&mut rng);
            let a = p.antipode();
            assert_eq!(a.antipode(), p);
            assert!((central_angle(&p, &a) - PI).abs() <= 1e-12);
            assert!((p.chord_to(&a) - 2.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn antipodal_chord_identity() {
        for i in 0..=1000 {
            let theta = PI * f64::from(i) / 1000.0;
            let c = chord_of_angle(theta).unwrap();
            let want = chord_of_angle(PI - theta).unwrap();
            assert!((antipodal_chord(c) - want).abs() <= 1e-12);
        }
    }

    #[test]
    fn embedding_chord_two_forces_midpoint() {
        let x = Point3::new(1.0, 0.0, 0.0);
        let y = Point3::new(-1.0, 0.0, 0.0);
        let mut rng = substream(1, 0);
        let e = unit_sphere_through(&x, &y, &mut rng).unwrap();
        assert!(e.center().dist(&Point3::ORIGIN) <= 1e-12);
    }

    #[test]
    fn embedding_coincident_points() {
        let x = Point3::new(0.3, -0.7, 2.0);
        let mut rng = substream(2, 0);
        for _ in 0..32 {
            let e = unit_sphere_through(&x, &x, &mut rng).unwrap();
            assert!((e.center().dist(&x) - 1.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn embedding_center_solves_both_sphere_constraints() {
        // independent check: direct solve of |c-x| = |c-y| = 1 for
        // x = origin, y = e_z puts every valid center on the plane z = 1/2
        let x = Point3::ORIGIN;
        let y = Point3::new(0.0, 0.0, 1.0);
        let mut rng = substream(3, 0);
        for _ in 0..64 {
            let e = unit_sphere_through(&x, &y, &mut rng).unwrap();
            let c = e.center();
            assert!((c.z - 0.5).abs() <= 1e-12);
            assert!((c.dist(&x) - 1.0).abs() <= 1e-12);
            assert!((c.dist(&y) - 1.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn embedding_random_pairs_lie_on_sphere() {
        // 10⁴ random valid pairs: both inputs at distance 1 ± 1e−10 from
        // the center, and the pull-back preserves the chord
        for i in 0..10_000u64 {
            let mut rng = substream(4, i);
            let x = random_in_box(&mut rng, 5.0);
            let dir = random_unit(&mut rng);
            let d: f64 = rng.gen_range(0.0..=2.0);
            let y = x.add(&dir.scale(d));
            let e = unit_sphere_through(&x, &y, &mut rng).unwrap();
            assert!((e.center().dist(&x) - 1.0).abs() <= 1e-10);
            assert!((e.center().dist(&y) - 1.0).abs() <= 1e-10);
            let u = e.pull_back(&x).unwrap();
            let v = e.pull_back(&y).unwrap();
            assert!((u.chord_to(&v) - x.dist(&y)).abs() <= 1e-10);
            assert!(e.embed(&u).dist(&x) <= 1e-10);
        }
    }

    #[test]
    fn embedding_rejects_far_pairs() {
        let x = Point3::ORIGIN;
        let y = Point3::new(2.1, 0.0, 0.0);
        let mut rng = substream(5, 0);
        assert!(matches!(
            unit_sphere_through(&x, &y, &mut rng),
            Err(Error::NoEmbedding(_))
        ));
    }

    #[test]
    fn isometry_identity_and_translation() {
        let p = Point3::new(0.1, -2.0, 3.5);
        assert_eq!(Isometry::identity().apply(&p), p);
        let v = Point3::new(1.0, 2.0, 3.0);
        assert_eq!(Isometry::translation(v).apply(&p), p.add(&v));
    }

    #[test]
    fn isometry_preserves_distances() {
        // 10⁴ random pairs, 1e−9 relative
        for i in 0..10_000u64 {
            let mut rng = substream(6, i);
            let iso = random_isometry(&mut rng, 10.0);
            assert!(iso.rotation().orthogonality_defect() <= 1e-12);
            let p = random_in_box(&mut rng, 10.0);
            let q = random_in_box(&mut rng, 10.0);
            let d0 = p.dist(&q);
            let d1 = iso.apply(&p).dist(&iso.apply(&q));
            assert!((d1 - d0).abs() <= 1e-9 * (1.0 + d0));
        }
    }

    #[test]
    fn orthogonal_sampler_covers_reflections() {
        let mut rng = substream(7, 0);
        let (mut rot, mut refl) = (0, 0);
        for _ in 0..64 {
            let m = random_orthogonal(&mut rng);
            let det = m.det();
            assert!((det.abs() - 1.0).abs() <= 1e-9);
            if det > 0.0 {
                rot += 1;
            } else {
                refl += 1;
            }
        }
        assert!(rot > 0 && refl > 0);
    }
}
