//! Brute-force distance oracle and random edge paths.

use std::collections::VecDeque;

use rand::seq::IndexedRandom;
use rand::Rng;

use crate::complex::StateComplex;
use crate::error::{Error, Result};
use crate::state::State;
use crate::system::System;

use super::CubePath;

/// Fewest cubes needed to go from `u` to `v`, where one step jumps to the
/// antipode of any cube at the current vertex.
pub fn oracle_shortest(complex: &StateComplex, u: &State, v: &State) -> Result<usize> {
    complex.require_complete()?;
    let from = complex.vertex_id(u).ok_or(Error::UnknownVertex)?;
    let to = complex.vertex_id(v).ok_or(Error::UnknownVertex)?;
    let system = complex.system();
    let mut dist = vec![usize::MAX; complex.f_vector()[0]];
    dist[from] = 0;
    let mut queue = VecDeque::from([from]);
    while let Some(w) = queue.pop_front() {
        if w == to {
            return Ok(dist[w]);
        }
        let state = complex.vertex(w);
        for corner in complex.corners(w) {
            let mut far = state.clone();
            for &a in &corner.actions {
                system.apply_in_place(&mut far, a);
            }
            let id = complex.vertex_id(&far).expect("cube vertices are in the complex");
            if dist[id] == usize::MAX {
                dist[id] = dist[w] + 1;
                queue.push_back(id);
            }
        }
    }
    Err(Error::Disconnected)
}

/// A random walk of at most `len` moves, each chosen uniformly among the
/// admissible actions. Stops early at a state with no moves.
pub fn random_edge_path(system: &System, start: &State, len: usize, rng: &mut impl Rng) -> CubePath {
    let mut state = start.clone();
    let mut steps = Vec::with_capacity(len);
    for _ in 0..len {
        let actions = system.admissible_actions(&state);
        let Some(&a) = actions.choose(rng) else {
            break;
        };
        system.apply_in_place(&mut state, a);
        steps.push(vec![a]);
    }
    CubePath::new(start.clone(), steps)
}
