//! Sliding squares on the square lattice.
//!
//! `Slide(k)` moves a maximal row segment of `L = k + 1` squares one cell
//! along the row. Its support is the middle row from one cell behind the
//! segment to one cell past its target, plus the rows directly above and
//! below columns `0..=L`. The trace is the segment together with its target
//! cell. The flanking rows are fixed in both local states; a flank pattern
//! is allowed when the segment touches an occupied flank both before and
//! after the slide, and each allowed pattern becomes its own generator.
//!
//! Only the `+x` and `+y` families are listed: running a generator backwards
//! slides in the opposite direction.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::generator::Generator;
use crate::lattice::{Cell, Lattice};
use crate::state::State;
use crate::system::{Region, System, Workspace};

use super::Instance;

/// Every flank variant of `Slide(k)` along `+x` (or `+y` when `vertical`).
pub fn slide_generators(k: usize, vertical: bool) -> Vec<Generator> {
    let len = k as i32 + 1;
    let place = |x: i32, y: i32| if vertical { Cell::new(y, x) } else { Cell::new(x, y) };
    let axis = if vertical { 'y' } else { 'x' };
    let flank_cols = (len + 1) as usize;
    let mut out = Vec::new();
    for mask in 0u32..1 << (2 * flank_cols) {
        let above = |j: i32| mask >> j & 1 == 1;
        let below = |j: i32| mask >> (j as usize + flank_cols) & 1 == 1;
        let touches = |cols: std::ops::Range<i32>| cols.clone().any(above) || cols.clone().any(below);
        if !touches(0..len) || !touches(1..len + 1) {
            continue;
        }
        let mut support = vec![(place(-1, 0), false, false), (place(len + 1, 0), false, false)];
        for j in 0..=len {
            support.push((place(j, 0), j < len, j > 0));
            support.push((place(j, 1), above(j), above(j)));
            support.push((place(j, -1), below(j), below(j)));
        }
        let trace = (0..=len).map(|j| place(j, 0));
        out.push(Generator::new(format!("slide-{axis}{k}-{mask}"), support, trace).expect("slide generator is valid"));
    }
    out
}

pub fn sliding_squares_system(kmax: usize, region: Region, obstacles: BTreeMap<Cell, bool>) -> Result<System> {
    let workspace = Workspace::new(Lattice::Square, region, obstacles)?;
    let mut catalogue = Vec::new();
    for k in 0..=kmax {
        catalogue.extend(slide_generators(k, false));
        catalogue.extend(slide_generators(k, true));
    }
    System::new(workspace, catalogue)
}

/// Two free squares beside an occupied `p x q` block at the origin, in a
/// rectangle with a margin of four cells. The seed puts one square at the
/// bottom of the right side and one at the right end of the bottom side.
pub fn around_block(p: usize, q: usize) -> Result<Instance> {
    if p < 1 || q < 1 {
        return Err(Error::OutOfRange("block sides must be positive".into()));
    }
    let (p, q) = (p as i32, q as i32);
    let margin = 4;
    let obstacles: BTreeMap<Cell, bool> = (0..p)
        .flat_map(|x| (0..q).map(move |y| (Cell::new(x, y), true)))
        .collect();
    let region = Region::rect(-margin, -margin, p - 1 + margin, q - 1 + margin);
    let system = sliding_squares_system(2, region, obstacles.clone())?;
    let seed = State::new(obstacles.keys().copied().chain([Cell::new(p, 0), Cell::new(p - 1, -1)]));
    Ok(Instance {
        system,
        seeds: vec![seed],
    })
}
