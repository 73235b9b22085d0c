//! Path shortening: Commute, CommonEdge, ShrinkCubePath, TimeGeodesic.

use std::collections::HashSet;

use crate::error::Result;
use crate::generator::{Action, Placement};
use crate::lattice::Cell;
use crate::system::System;

use super::{cube_respects_constraint, CubePath};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OptimizeMode {
    /// Shrink until the length stops decreasing.
    #[default]
    StopOnLength,
    /// Shrink until the path is a fixed point.
    Normalize,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OptimizeStats {
    /// Calls to the shrink sweep.
    pub calls: usize,
    /// Inner-loop iterations across all calls.
    pub iterations: usize,
}

/// The actions of `next` that can be pulled back into `step`: their trace
/// misses the support of `step` and their support misses its trace.
pub fn commute_sub(system: &System, step: &[Action], next: &[Action]) -> Vec<Action> {
    let mut support: HashSet<Cell> = HashSet::new();
    let mut trace: HashSet<Cell> = HashSet::new();
    for a in step {
        support.extend(system.placed_support(a.placement));
        trace.extend(system.placed_trace(a.placement));
    }
    next.iter()
        .copied()
        .filter(|b| {
            system.placed_trace(b.placement).all(|c| !support.contains(&c))
                && system.placed_support(b.placement).all(|c| !trace.contains(&c))
        })
        .collect()
}

/// Removes from both steps every placement occurring in both.
pub fn common_edge(prev: &[Action], cur: &[Action]) -> (Vec<Action>, Vec<Action>) {
    let a: HashSet<Placement> = prev.iter().map(|x| x.placement).collect();
    let b: HashSet<Placement> = cur.iter().map(|x| x.placement).collect();
    (
        prev.iter().copied().filter(|x| !b.contains(&x.placement)).collect(),
        cur.iter().copied().filter(|x| !a.contains(&x.placement)).collect(),
    )
}

impl CubePath {
    /// One sweep of the shortening loop. Returns the new path and the number
    /// of loop iterations performed.
    pub fn shrink(&self, system: &System) -> Result<(CubePath, usize)> {
        self.check(system)?;
        let mut steps = self.steps.clone();
        let mut i = 0;
        let mut iterations = 0;
        while i < steps.len() {
            iterations += 1;
            let mut moved = false;
            if i + 1 < steps.len() {
                let mut x = commute_sub(system, &steps[i], &steps[i + 1]);
                if !x.is_empty() && !system.is_local() {
                    let vertex = CubePath::new(self.start.clone(), steps[..i].to_vec()).end(system);
                    let merged: Vec<Action> = steps[i].iter().chain(&x).copied().collect();
                    if !cube_respects_constraint(system, &vertex, &merged) {
                        x.clear();
                    }
                }
                if !x.is_empty() {
                    moved = true;
                    steps[i + 1].retain(|a| !x.contains(a));
                    steps[i].extend(x);
                    steps[i].sort();
                    if steps[i + 1].is_empty() {
                        steps.remove(i + 1);
                    }
                }
            }
            let mut excised = false;
            if i >= 1 {
                let (prev, cur) = common_edge(&steps[i - 1], &steps[i]);
                if prev.len() != steps[i - 1].len() {
                    steps[i - 1] = prev;
                    steps[i] = cur;
                    match (steps[i - 1].is_empty(), steps[i].is_empty()) {
                        (true, true) => {
                            steps.drain(i - 1..=i);
                            i = i.saturating_sub(2);
                        }
                        (false, true) => {
                            steps.remove(i);
                            i -= 1;
                        }
                        (true, false) => {
                            steps.remove(i - 1);
                            i = i.saturating_sub(2);
                        }
                        (false, false) => {}
                    }
                    excised = true;
                }
            }
            if !moved && !excised {
                i += 1;
            }
        }
        Ok((
            CubePath {
                start: self.start.clone(),
                steps,
            },
            iterations,
        ))
    }

    /// Repeats [`CubePath::shrink`] according to `mode`.
    pub fn time_geodesic(&self, system: &System, mode: OptimizeMode) -> Result<(CubePath, OptimizeStats)> {
        let mut stats = OptimizeStats::default();
        let mut path = self.clone();
        loop {
            let (next, iterations) = path.shrink(system)?;
            stats.calls += 1;
            stats.iterations += iterations;
            let done = match mode {
                OptimizeMode::StopOnLength => next.len() >= path.len(),
                OptimizeMode::Normalize => next == path,
            };
            path = next;
            if done {
                return Ok((path, stats));
            }
        }
    }

    /// No step can absorb actions of the next one and no consecutive steps
    /// share a placement.
    pub fn is_normal(&self, system: &System) -> bool {
        self.steps
            .windows(2)
            .all(|w| commute_sub(system, &w[0], &w[1]).is_empty() && common_edge(&w[0], &w[1]).0.len() == w[0].len())
    }
}
