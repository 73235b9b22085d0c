use std::collections::BTreeSet;
use std::fmt;

use crate::lattice::{Cell, Offset};

/// The finite set of occupied cells of a configuration.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct State(BTreeSet<Cell>);

impl State {
    pub fn new(cells: impl IntoIterator<Item = Cell>) -> Self {
        State(cells.into_iter().collect())
    }

    pub fn empty() -> Self {
        State(BTreeSet::new())
    }

    pub fn is_occupied(&self, cell: Cell) -> bool {
        self.0.contains(&cell)
    }

    pub fn cells(&self) -> impl ExactSizeIterator<Item = Cell> + '_ {
        self.0.iter().copied()
    }

    pub fn as_set(&self) -> &BTreeSet<Cell> {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Least occupied cell in `(x, y, tag)` order.
    pub fn least(&self) -> Option<Cell> {
        self.0.iter().next().copied()
    }

    pub fn set(&mut self, cell: Cell, occupied: bool) {
        if occupied {
            self.0.insert(cell);
        } else {
            self.0.remove(&cell);
        }
    }

    pub fn translated(&self, offset: Offset) -> State {
        if offset.is_zero() {
            return self.clone();
        }
        State(self.0.iter().map(|&c| c + offset).collect())
    }
}

impl FromIterator<Cell> for State {
    fn from_iter<I: IntoIterator<Item = Cell>>(iter: I) -> Self {
        State::new(iter)
    }
}

impl fmt::Display for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("}")
    }
}
