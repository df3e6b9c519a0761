//! Subdivision growth, h-polynomial zeros along `Δ^{(k)}`, and `α_n`.

mod alpha;
pub mod bigfloat;
mod growth;
mod roots;
mod trajectory;

pub use alpha::{
    alpha, alpha_records, conjecture_report, conjecture_row, AlphaContext, AlphaRecord,
    ConjectureRow,
};
pub use bigfloat::{Complex, Float};
pub use growth::{
    growth_expansion, subdivided_f, subdivided_f_bounded, GrowthExpansion, DEFAULT_MAX_SUBDIVISIONS,
};
pub use roots::{find_roots, find_roots_seeded, Root, RootSet};
pub use trajectory::{
    identity_checks, trajectory, trajectory_of, working_precision, IdentityReport, TrajectoryEntry,
    ZeroTrajectory,
};
