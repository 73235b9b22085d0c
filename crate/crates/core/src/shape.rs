//! The shape complex: states and cubes up to lattice translation, and the
//! lifting of shape paths back into a concrete workspace.
//!
//! A shape path is a [`CubePath`] whose start is a canonical state and whose
//! `k`-th step is read at the canonical form of the `k`-th vertex, so every
//! step is expressed in shape coordinates.

use std::fmt;

use rand::seq::IndexedRandom;
use rand::Rng;

use crate::complex::{BuildOptions, Quotient, StateComplex};
use crate::error::{Error, Result};
use crate::generator::Action;
use crate::lattice::Offset;
use crate::path::CubePath;
use crate::state::State;
use crate::system::System;

/// Translates `state` so its least occupied cell sits at the origin and
/// returns the translation used. Graph lattices have no translations, so the
/// identity is returned there.
pub fn canonicalize(system: &System, state: &State) -> Result<(State, Offset)> {
    if state.is_empty() {
        return Err(Error::EmptyState);
    }
    let t = Quotient::Translations.canonical_offset(system, state);
    Ok((state.translated(t), t))
}

/// The same catalogue over the whole lattice without obstacles.
pub fn homogeneous(system: &System) -> System {
    system.with_workspace(system.workspace().homogeneous())
}

/// Builds the quotient of the state complex by translations, over the
/// unbounded obstacle-free workspace.
pub fn build_shape_complex(system: &System, seeds: &[State], options: BuildOptions) -> Result<StateComplex> {
    if !system.workspace().obstacles().is_empty() {
        return Err(Error::ShapeRequiresHomogeneousWorkspace);
    }
    let sys = homogeneous(system);
    let seeds: Vec<State> = seeds
        .iter()
        .map(|s| canonicalize(&sys, s).map(|(c, _)| c))
        .collect::<Result<_>>()?;
    StateComplex::build_quotient(&sys, &seeds, options, Quotient::Translations)
}

/// A uniformly random walk in shape space of at most `len` moves.
pub fn random_shape_path(system: &System, start: &State, len: usize, rng: &mut impl Rng) -> Result<CubePath> {
    let sys = homogeneous(system);
    let (mut state, _) = canonicalize(&sys, start)?;
    let first = state.clone();
    let mut steps = Vec::with_capacity(len);
    for _ in 0..len {
        let actions = sys.admissible_actions(&state);
        let Some(&a) = actions.choose(rng) else {
            break;
        };
        state = canonicalize(&sys, &sys.apply_unchecked(&state, a))?.0;
        steps.push(vec![a]);
    }
    Ok(CubePath::new(first, steps))
}

/// The canonical vertices of a shape path, with each step checked in the
/// homogeneous workspace.
pub fn shape_vertices(system: &System, path: &CubePath) -> Result<Vec<State>> {
    let sys = homogeneous(system);
    let (mut state, _) = canonicalize(&sys, path.start())?;
    let mut out = vec![state.clone()];
    for (index, step) in path.steps().iter().enumerate() {
        let next = sys.apply_all(&state, step).map_err(|_| Error::InvalidPath {
            index,
            reason: "step is not a cube at its shape vertex".into(),
        })?;
        state = canonicalize(&sys, &next)?.0;
        out.push(state.clone());
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LiftReason {
    /// A placed support leaves the workspace.
    OutOfWorkspace,
    /// A placed trace meets an obstacle.
    ObstacleTrace,
    /// The local pattern or the global constraint does not allow the step.
    NotAdmissible,
}

impl fmt::Display for LiftReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LiftReason::OutOfWorkspace => "support leaves the workspace",
            LiftReason::ObstacleTrace => "trace meets an obstacle",
            LiftReason::NotAdmissible => "step is not admissible",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LiftFailure {
    /// 0-based step index; equal to the path length when the start itself
    /// does not fit.
    pub step: usize,
    pub reason: LiftReason,
}

impl fmt::Display for LiftFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "lift fails at step {}: {}", self.step, self.reason)
    }
}

/// Places the shape path with its start translated by `base` and replays it
/// in `system`'s workspace.
pub fn lift_path(system: &System, shape_path: &CubePath, base: Offset) -> Result<CubePath, LiftFailure> {
    let sys = homogeneous(system);
    let fail = |step, reason| LiftFailure { step, reason };
    let (canon, _) =
        canonicalize(&sys, shape_path.start()).map_err(|_| fail(shape_path.len(), LiftReason::NotAdmissible))?;
    let mut placed = canon.translated(base);
    if system.check_state(&placed).is_err() || !system.constraint_holds(&placed) {
        let reason = if placed.cells().all(|c| system.workspace().contains(c)) {
            LiftReason::NotAdmissible
        } else {
            LiftReason::OutOfWorkspace
        };
        return Err(fail(shape_path.len(), reason));
    }
    let start = placed.clone();
    let mut offset = base;
    let mut steps = Vec::with_capacity(shape_path.len());
    for (index, step) in shape_path.steps().iter().enumerate() {
        let actions: Vec<Action> = step
            .iter()
            .map(|a| Action::new(a.placement.generator, a.placement.offset + offset, a.direction))
            .collect();
        for &a in &actions {
            if !system
                .placed_support(a.placement)
                .all(|c| system.workspace().contains(c))
            {
                return Err(fail(index, LiftReason::OutOfWorkspace));
            }
            if system
                .placed_trace(a.placement)
                .any(|c| system.workspace().is_obstacle(c))
            {
                return Err(fail(index, LiftReason::ObstacleTrace));
            }
        }
        let single = CubePath::new(placed.clone(), vec![actions.clone()]);
        if single.check(system).is_err() {
            return Err(fail(index, LiftReason::NotAdmissible));
        }
        placed = single.end(system);
        let (_, t) = canonicalize(&sys, &placed).map_err(|_| fail(index, LiftReason::NotAdmissible))?;
        offset = -t;
        steps.push(actions);
    }
    Ok(CubePath::new(start, steps))
}
