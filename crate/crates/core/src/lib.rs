//! 1-plane Hamiltonian alternating cycles and paths on bicolored point
//! sets: exact geometric primitives, a run/bridge model of the hull
//! boundary, optimum constructions in convex position, a recursive
//! builder for general position, and a brute-force oracle for small
//! instances.

pub mod builder;
pub mod convex;
pub mod error;
pub mod geom;
pub mod oracle;
pub mod route;
pub mod set;
pub mod sweep;

pub use builder::{build_cycle, build_path};
pub use convex::{
    arc_path, j_pairs, optimum_cycle, optimum_path, optimum_path_consecutive, optimum_path_special,
    DpTables, JMap,
};
pub use error::{Error, Result};
pub use geom::{Color, ColoredPoint, Direction, Hull};
pub use route::{verify_route, AltRoute, RouteKind, VerifyReport};
pub use set::{BicoloredSet, Partition, PartitionOutcome, PositionMode, Run, RunStructure};
