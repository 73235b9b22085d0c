//! `cubeplan` builds the cubical state complex of a lattice-based
//! metamorphic robot system, certifies the link condition, computes mod-2
//! invariants, and shortens reconfiguration paths into normal cube paths.
//!
//! The crate is organised bottom-up:
//!
//! * [`lattice`], [`state`], [`generator`], [`system`]: cells, states, local
//!   rewrite rules and their placed actions.
//! * [`complex`]: breadth-first enumeration of the state complex, links,
//!   stars and the link-condition checker.
//! * [`topology`]: f-vectors, Euler characteristic, mod-2 Betti numbers,
//!   surface tests and free-face collapse.
//! * [`path`]: cube paths and the shortening algorithm.
//! * [`shape`]: the quotient by lattice translations and path lifting.
//! * [`catalogue`]: built-in systems and the text file format.

pub mod catalogue;
pub mod complex;
pub mod error;
pub mod generator;
pub mod lattice;
pub mod path;
pub mod shape;
pub mod state;
pub mod system;
pub mod text;
pub mod topology;

pub use complex::{BuildOptions, Cube, LinkComplex, LinkReport, StateComplex};
pub use error::{Error, Result};
pub use generator::{Action, Direction, Generator, Placement};
pub use lattice::{Cell, Graph, Lattice, LatticeKind, Offset};
pub use path::{CubePath, OptimizeMode};
pub use state::State;
pub use system::{GlobalConstraint, Region, System, Workspace};
pub use topology::CellComplex;
