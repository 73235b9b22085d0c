//! Cube paths and their shortening into normal form.

mod oracle;
mod script;
mod shrink;

use std::collections::HashSet;
use std::fmt;

use crate::complex::Cube;
use crate::error::{Error, Result};
use crate::generator::{Action, Placement};
use crate::state::State;
use crate::system::System;

pub use oracle::{oracle_shortest, random_edge_path};
pub use script::{format_script, parse_script};
pub use shrink::{common_edge, commute_sub, OptimizeMode, OptimizeStats};

/// A start state and a sequence of steps; each step is a set of pairwise
/// commuting actions executed simultaneously, i.e. one cube.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CubePath {
    start: State,
    steps: Vec<Vec<Action>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PathDefect {
    EmptyStep,
    NotAdmissible,
    NotCommuting,
    /// The cube spanned by the step has a vertex violating the global
    /// constraint.
    ConstraintViolated,
}

impl fmt::Display for PathDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PathDefect::EmptyStep => "empty step",
            PathDefect::NotAdmissible => "inadmissible action",
            PathDefect::NotCommuting => "actions do not commute",
            PathDefect::ConstraintViolated => "cube leaves the global constraint",
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PathReport {
    /// First structural defect, by step index (0-based).
    pub violation: Option<(usize, PathDefect)>,
    /// First step sharing a placement with the following step.
    pub backtrack: Option<usize>,
}

impl PathReport {
    /// Structurally valid and free of immediate backtracks.
    pub fn ok(&self) -> bool {
        self.violation.is_none() && self.backtrack.is_none()
    }
}

impl CubePath {
    pub fn new(start: State, steps: Vec<Vec<Action>>) -> Self {
        let steps = steps
            .into_iter()
            .map(|mut s| {
                s.sort();
                s
            })
            .collect();
        CubePath { start, steps }
    }

    pub fn empty(start: State) -> Self {
        CubePath {
            start,
            steps: Vec::new(),
        }
    }

    /// Singleton steps, checked move by move.
    pub fn from_edge_path(system: &System, start: State, moves: &[Action]) -> Result<Self> {
        let mut state = start.clone();
        for (index, &a) in moves.iter().enumerate() {
            if !system.is_admissible(&state, a) {
                return Err(Error::InadmissibleMove { index });
            }
            system.apply_in_place(&mut state, a);
        }
        Ok(CubePath {
            start,
            steps: moves.iter().map(|&a| vec![a]).collect(),
        })
    }

    pub fn start(&self) -> &State {
        &self.start
    }

    pub fn steps(&self) -> &[Vec<Action>] {
        &self.steps
    }

    /// Number of cubes, i.e. elapsed time.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Number of elementary moves.
    pub fn move_count(&self) -> usize {
        self.steps.iter().map(Vec::len).sum()
    }

    /// `sum_i i * dim(C_i)` with steps numbered from one.
    pub fn potential(&self) -> usize {
        self.steps.iter().enumerate().map(|(i, s)| (i + 1) * s.len()).sum()
    }

    /// The states `v_0, ..., v_N` visited, without any checks.
    pub fn vertices(&self, system: &System) -> Vec<State> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut state = self.start.clone();
        out.push(state.clone());
        for step in &self.steps {
            for &a in step {
                system.apply_in_place(&mut state, a);
            }
            out.push(state.clone());
        }
        out
    }

    pub fn end(&self, system: &System) -> State {
        self.vertices(system).pop().expect("a path has a start")
    }

    /// The cubes of the path in canonical form.
    pub fn cubes(&self, system: &System) -> Result<Vec<Cube>> {
        self.check(system)?;
        let vertices = self.vertices(system);
        Ok(self
            .steps
            .iter()
            .zip(&vertices)
            .map(|(step, v)| Cube::at_unchecked(system, v, step))
            .collect())
    }

    pub fn validate(&self, system: &System) -> PathReport {
        let mut report = PathReport::default();
        let mut state = self.start.clone();
        if system.check_state(&state).is_err() || !system.constraint_holds(&state) {
            report.violation = Some((0, PathDefect::NotAdmissible));
            return report;
        }
        for (i, step) in self.steps.iter().enumerate() {
            if let Some(defect) = step_defect(system, &state, step) {
                report.violation = Some((i, defect));
                return report;
            }
            if report.backtrack.is_none() {
                if let Some(next) = self.steps.get(i + 1) {
                    let here: HashSet<Placement> = step.iter().map(|a| a.placement).collect();
                    if next.iter().any(|a| here.contains(&a.placement)) {
                        report.backtrack = Some(i);
                    }
                }
            }
            for &a in step {
                system.apply_in_place(&mut state, a);
            }
        }
        report
    }

    /// Structural validity as an error; backtracks are allowed.
    pub fn check(&self, system: &System) -> Result<()> {
        match self.validate(system).violation {
            None => Ok(()),
            Some((index, defect)) => Err(Error::InvalidPath {
                index,
                reason: defect.to_string(),
            }),
        }
    }
}

fn step_defect(system: &System, state: &State, step: &[Action]) -> Option<PathDefect> {
    if step.is_empty() {
        return Some(PathDefect::EmptyStep);
    }
    if !step.iter().all(|&a| system.is_admissible(state, a)) {
        return Some(PathDefect::NotAdmissible);
    }
    if !system.commute(step) {
        return Some(PathDefect::NotCommuting);
    }
    if !system.is_local() && !cube_respects_constraint(system, state, step) {
        return Some(PathDefect::ConstraintViolated);
    }
    None
}

pub(crate) fn cube_respects_constraint(system: &System, state: &State, step: &[Action]) -> bool {
    Cube::at_unchecked(system, state, step)
        .vertices(system)
        .iter()
        .all(|v| system.constraint_holds(v))
}
