//! Unlabelled tokens moving along the edges of a finite graph.

use crate::error::{Error, Result};
use crate::generator::Generator;
use crate::lattice::{Cell, Graph, Lattice};
use crate::state::State;
use crate::system::{System, Workspace};

use super::Instance;

/// One generator per edge `{a, b}` (support and trace both endpoints, a
/// token crossing the edge). The seed puts tokens on vertices `0..n`.
pub fn graph_agv_system(graph: Graph, n: usize) -> Result<Instance> {
    if n > graph.vertex_count() as usize {
        return Err(Error::OutOfRange(format!(
            "{n} tokens do not fit on {} vertices",
            graph.vertex_count()
        )));
    }
    let generators = graph
        .edges()
        .iter()
        .map(|&(a, b)| {
            let (a, b) = (Cell::vertex(a), Cell::vertex(b));
            Generator::new(
                format!("e{}-{}", a.x, b.x),
                [(a, true, false), (b, false, true)],
                [a, b],
            )
        })
        .collect::<Result<Vec<_>>>()?;
    let system = System::new(Workspace::whole_graph(Lattice::graph(graph)), generators)?;
    let seed = State::new((0..n as u32).map(Cell::vertex));
    Ok(Instance {
        system,
        seeds: vec![seed],
    })
}

/// The flat `m x n` grid of squares: one token on a path with `m` edges and
/// one on a disjoint path with `n` edges, starting at the corner `(0, 0)`.
pub fn flat_grid(m: usize, n: usize) -> Result<Instance> {
    let graph = Graph::path(m as u32 + 1).disjoint_union(&Graph::path(n as u32 + 1));
    let mut inst = graph_agv_system(graph, 0)?;
    inst.seeds = vec![grid_state(m, 0, 0)];
    Ok(inst)
}

/// The state at grid point `(i, j)` of [`flat_grid`]`(m, _)`.
pub fn grid_state(m: usize, i: usize, j: usize) -> State {
    State::new([Cell::vertex(i as u32), Cell::vertex((m + 1 + j) as u32)])
}
