//! Pivoting hexagonal modules.
//!
//! In rotation `i` the pivot `b` sits at the origin, the moving module goes
//! from `a = D[i]` to `c = D[i + 1]`, where `D` lists the six axial
//! directions in cyclic order.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::generator::Generator;
use crate::lattice::{Cell, Lattice, Offset, HEX_DIRECTIONS};
use crate::state::State;
use crate::system::{Region, System, Workspace};

use super::Instance;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    /// Support `{a, b, c}` plus five cells beyond `a` and `c` that must stay
    /// empty; see [`preserving_clearance`].
    Preserving,
    /// Support `{a, b, c}` only; a pivot may connect or disconnect.
    Changing,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::Preserving => "preserving",
            Variant::Changing => "changing",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "preserving" => Some(Variant::Preserving),
            "changing" => Some(Variant::Changing),
            _ => None,
        }
    }
}

fn dir(i: usize) -> Offset {
    HEX_DIRECTIONS[i % 6]
}

fn at(o: Offset) -> Cell {
    Cell::new(o.dx, o.dy)
}

/// Cells that must be empty in both local states of the preserving pivot in
/// rotation `i`, relative to the pivot.
pub fn preserving_clearance(i: usize) -> Vec<Offset> {
    let (a, c) = (dir(i), dir(i + 1));
    // the far common neighbour of a and c
    let d = a + c;
    // the two cells beyond a and the two beyond c, away from the pivot
    vec![d, a + dir(i), a + dir(i + 5), c + dir(i + 1), c + dir(i + 2)]
}

pub fn pivot_generator(variant: Variant, i: usize) -> Generator {
    let (a, c) = (at(dir(i)), at(dir(i + 1)));
    let b = Cell::new(0, 0);
    let mut support = vec![(a, true, false), (b, true, true), (c, false, true)];
    if variant == Variant::Preserving {
        support.extend(preserving_clearance(i).into_iter().map(|o| (at(o), false, false)));
    }
    Generator::new(format!("pivot{i}"), support, [a, c]).expect("pivot generator is valid")
}

/// Six rotations of the pivot over the given workspace.
pub fn hex_pivot_system(variant: Variant, region: Region, obstacles: BTreeMap<Cell, bool>) -> Result<System> {
    let workspace = Workspace::new(Lattice::HexAxial, region, obstacles)?;
    let catalogue = (0..6).map(|i| pivot_generator(variant, i)).collect();
    System::new(workspace, catalogue)
}

/// Hexagon of axial radius `r` around the origin.
pub fn hex_disc(r: i32) -> Region {
    let mut cells = BTreeSet::new();
    for q in -r..=r {
        for s in -r..=r {
            if (q + s).abs() <= r {
                cells.insert(Cell::new(q, s));
            }
        }
    }
    Region::Finite(cells)
}

/// `n` modules in a row along the first axis, in a disc with room to move.
pub fn line_instance(variant: Variant, n: usize) -> Result<Instance> {
    if n < 1 {
        return Err(Error::OutOfRange("at least one module is required".into()));
    }
    let system = hex_pivot_system(variant, hex_disc(n as i32 + 1), BTreeMap::new())?;
    let seed = State::new((0..n as i32).map(|q| Cell::new(q, 0)));
    Ok(Instance {
        system,
        seeds: vec![seed],
    })
}
