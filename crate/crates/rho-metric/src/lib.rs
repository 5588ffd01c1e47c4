//! A deformed metric on the unit sphere and the locally Euclidean metric it
//! induces on all of R³.
//!
//! For a deformation parameter `t ∈ (0, 1]` the sphere metric `d_t` keeps the
//! chord (Euclidean) distance between nearby points but switches, beyond a
//! threshold central angle, to a shortcut through the antipode that costs
//! `2t` plus the remaining chord. Chains of points with steps of Euclidean
//! length at most 2 — each step priced by pulling it back onto a unit sphere
//! through its endpoints — induce a metric `ρ_t` on R³ as the infimum of
//! chain costs.
//!
//! The crate computes `d_t` exactly and brackets `ρ_t` between certified
//! lower and upper bounds:
//!
//! * [`sphere`] — the parameter constants, `d_t` on the sphere, and its
//!   one-variable reduction [`sphere::chord_cost`];
//! * [`geometry`] — points, chords, central angles, Euclidean isometries and
//!   seeded unit-sphere embeddings through point pairs;
//! * [`rho`] — chains, step profiles, constructive upper bounds, a certified
//!   grid dynamic program, and a Monte-Carlo chain search used as an
//!   independent oracle;
//! * [`verify`] — executable checks of the metric axioms and every proven
//!   property, with reproducible counterexample seeds.
//!
//! All randomness is seeded and splittable (see [`rng`]), so every reported
//! violation replays.

pub mod error;
pub mod geometry;
pub mod rho;
pub mod rng;
pub mod sphere;
pub mod verify;

pub use error::{Error, Result};
pub use geometry::{Isometry, Point3, SphereEmbedding, SpherePoint};
pub use rho::{
    chain_cost, monte_carlo_chain_search, realizable, realize_chain, rho, shortcut_upper_bound,
    step_decomposition_bound, subdivision_upper_bound, Chain, IntervalEstimate, RhoConfig,
    RhoEvaluator, StepProfile,
};
pub use sphere::{chord_cost, d_t_pair, d_t_sphere, Param};
pub use verify::{run_space_suite, run_sphere_suite, AxiomId, AxiomReport};
