//! Built-in systems and the system file format.

pub mod agv;
pub mod arm;
pub mod format;
pub mod hex;
pub mod sliding;

use crate::error::{Error, Result};
use crate::lattice::Graph;
use crate::state::State;
use crate::system::{GlobalConstraint, System};

/// A system together with the states its complex is built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub system: System,
    pub seeds: Vec<State>,
}

/// Parameters of the named built-in systems.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuiltinOptions {
    /// Module, token or edge count.
    pub n: usize,
    pub variant: Option<String>,
    pub constraint: Option<GlobalConstraint>,
    /// Obstacle width for sliding squares, grid width for `grid`.
    pub p: usize,
    /// Obstacle height for sliding squares, grid height for `grid`.
    pub q: usize,
}

impl Default for BuiltinOptions {
    fn default() -> Self {
        BuiltinOptions {
            n: 2,
            variant: None,
            constraint: None,
            p: 1,
            q: 1,
        }
    }
}

pub const BUILTIN_NAMES: [&str; 6] = ["agv-k5", "agv-cycle", "arm", "hex", "sliding", "grid"];

/// Looks up a built-in system by name.
///
/// * `agv-k5`: `n` tokens on the complete graph on five vertices.
/// * `agv-cycle`: `n` tokens on the 6-cycle.
/// * `arm`: planar arm with `n` links.
/// * `hex`: `n` hexagonal modules in a line; `variant` is `preserving`
///   (default) or `changing`.
/// * `sliding`: two free squares around a `p x q` block.
/// * `grid`: the flat `p x q` square grid.
pub fn builtin(name: &str, opts: &BuiltinOptions) -> Result<Instance> {
    let inst = match name {
        "agv-k5" => agv::graph_agv_system(Graph::complete(5), opts.n)?,
        "agv-cycle" => agv::graph_agv_system(Graph::cycle(6)?, opts.n)?,
        "arm" => arm::arm_system(opts.n)?,
        "hex" => {
            let variant = match opts.variant.as_deref() {
                None => hex::Variant::Preserving,
                Some(v) => {
                    hex::Variant::from_name(v).ok_or_else(|| Error::OutOfRange(format!("unknown hex variant `{v}`")))?
                }
            };
            hex::line_instance(variant, opts.n)?
        }
        "sliding" => sliding::around_block(opts.p, opts.q)?,
        "grid" => agv::flat_grid(opts.p, opts.q)?,
        _ => {
            return Err(Error::OutOfRange(format!(
                "unknown built-in `{name}`; expected one of {}",
                BUILTIN_NAMES.join(", ")
            )))
        }
    };
    Ok(Instance {
        system: inst.system.with_constraint(opts.constraint),
        seeds: inst.seeds,
    })
}
