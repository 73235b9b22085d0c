//! Generators (local rewrite rules) and their placed actions.

use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::{Cell, Offset};

/// A local rewrite rule: a support, a trace inside it, and an unordered pair
/// of local states on the support that agree off the trace.
///
/// Cells are stored sorted; `before[i]` / `after[i]` give the occupancy of
/// `support[i]` in the two local states.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    id: String,
    support: Vec<Cell>,
    in_trace: Vec<bool>,
    before: Vec<bool>,
    after: Vec<bool>,
}

impl Generator {
    /// Builds a generator from `(cell, before, after)` triples and a trace.
    ///
    /// Rejects repeated support cells, a trace that leaves the support,
    /// degenerate pairs (`before == after`) and pairs that differ off the
    /// trace.
    pub fn new(
        id: impl Into<String>,
        support: impl IntoIterator<Item = (Cell, bool, bool)>,
        trace: impl IntoIterator<Item = Cell>,
    ) -> Result<Self> {
        let id = id.into();
        let invalid = |reason: String| Error::InvalidGenerator { id: id.clone(), reason };
        let mut triples: Vec<(Cell, bool, bool)> = support.into_iter().collect();
        triples.sort_by_key(|t| t.0);
        if let Some(w) = triples.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(invalid(format!("support lists {} twice", w[0].0)));
        }
        let support: Vec<Cell> = triples.iter().map(|t| t.0).collect();
        let mut in_trace = vec![false; support.len()];
        for cell in trace {
            match support.binary_search(&cell) {
                Ok(i) => in_trace[i] = true,
                Err(_) => {
                    return Err(invalid(format!("trace cell {cell} is not in the support")));
                }
            }
        }
        let before: Vec<bool> = triples.iter().map(|t| t.1).collect();
        let after: Vec<bool> = triples.iter().map(|t| t.2).collect();
        if before == after {
            return Err(invalid(
                "local states are equal; generators must be nondegenerate".into(),
            ));
        }
        if let Some(i) = (0..support.len()).find(|&i| !in_trace[i] && before[i] != after[i]) {
            return Err(invalid(format!(
                "local states must agree off the trace, but differ at {}",
                support[i]
            )));
        }
        Ok(Generator {
            id,
            support,
            in_trace,
            before,
            after,
        })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn support(&self) -> &[Cell] {
        &self.support
    }

    pub fn trace(&self) -> impl Iterator<Item = Cell> + '_ {
        self.support
            .iter()
            .zip(&self.in_trace)
            .filter(|(_, &t)| t)
            .map(|(&c, _)| c)
    }

    pub fn in_trace(&self) -> &[bool] {
        &self.in_trace
    }

    /// Local state the action reads in the given direction.
    pub fn source(&self, direction: Direction) -> &[bool] {
        match direction {
            Direction::Forward => &self.before,
            Direction::Backward => &self.after,
        }
    }

    /// Local state the action writes in the given direction.
    pub fn target(&self, direction: Direction) -> &[bool] {
        self.source(direction.reverse())
    }
}

/// Which of the two local states is the source of a move.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    Forward,
    Backward,
}

impl Direction {
    pub fn reverse(self) -> Self {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }

    pub fn short_name(self) -> &'static str {
        match self {
            Direction::Forward => "fwd",
            Direction::Backward => "bwd",
        }
    }
}

/// A generator translated into the workspace.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Placement {
    /// Index into the system catalogue.
    pub generator: usize,
    pub offset: Offset,
}

/// A placement together with the direction it is executed in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Action {
    pub placement: Placement,
    pub direction: Direction,
}

impl Action {
    pub fn new(generator: usize, offset: Offset, direction: Direction) -> Self {
        Action {
            placement: Placement { generator, offset },
            direction,
        }
    }

    pub fn reverse(self) -> Self {
        Action {
            placement: self.placement,
            direction: self.direction.reverse(),
        }
    }

    pub fn with_direction(self, direction: Direction) -> Self {
        Action {
            placement: self.placement,
            direction,
        }
    }
}

impl fmt::Display for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(g{}, {}, {})",
            self.placement.generator,
            self.placement.offset,
            self.direction.short_name()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: i32) -> Cell {
        Cell::new(x, 0)
    }

    #[test]
    fn rejects_trace_outside_support() {
        let err = Generator::new("g", [(c(0), true, false), (c(1), false, true)], [c(0), c(2)]).unwrap_err();
        assert!(matches!(err, Error::InvalidGenerator { ref id, .. } if id == "g"));
    }

    #[test]
    fn rejects_degenerate_pair() {
        let err = Generator::new("same", [(c(0), true, true)], [c(0)]).unwrap_err();
        assert!(err.to_string().contains("nondegenerate"));
    }

    #[test]
    fn rejects_change_off_trace() {
        let err = Generator::new("off", [(c(0), true, false), (c(1), false, true)], [c(0)]).unwrap_err();
        assert!(err.to_string().contains("agree off the trace"));
    }

    #[test]
    fn support_is_sorted() {
        let g = Generator::new("g", [(c(1), false, true), (c(0), true, false)], [c(1), c(0)]).unwrap();
        assert_eq!(g.support(), &[c(0), c(1)]);
        assert_eq!(g.source(Direction::Forward), &[true, false]);
        assert_eq!(g.target(Direction::Forward), &[false, true]);
        assert_eq!(g.trace().collect::<Vec<_>>(), vec![c(0), c(1)]);
    }
}
