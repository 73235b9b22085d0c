//! Workspaces, systems, admissibility and commutation.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::generator::{Action, Direction, Generator, Placement};
use crate::lattice::{Cell, Lattice, Offset};
use crate::state::State;

/// The set of usable lattice sites.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Region {
    Finite(BTreeSet<Cell>),
    /// Every lattice site except the listed ones.
    Cofinite(BTreeSet<Cell>),
}

impl Region {
    pub fn unbounded() -> Self {
        Region::Cofinite(BTreeSet::new())
    }

    /// Inclusive rectangle of square or hex sites.
    pub fn rect(x0: i32, y0: i32, x1: i32, y1: i32) -> Self {
        Region::Finite(
            (x0..=x1)
                .flat_map(|x| (y0..=y1).map(move |y| Cell::new(x, y)))
                .collect(),
        )
    }

    /// All horizontal and vertical edges of the inclusive vertex box.
    pub fn edge_box(x0: i32, y0: i32, x1: i32, y1: i32) -> Self {
        let mut cells = BTreeSet::new();
        for x in x0..=x1 {
            for y in y0..=y1 {
                if x < x1 {
                    cells.insert(Cell::h(x, y));
                }
                if y < y1 {
                    cells.insert(Cell::v(x, y));
                }
            }
        }
        Region::Finite(cells)
    }

    pub fn contains(&self, cell: Cell) -> bool {
        match self {
            Region::Finite(cells) => cells.contains(&cell),
            Region::Cofinite(excluded) => !excluded.contains(&cell),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Region::Finite(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Workspace {
    lattice: Lattice,
    region: Region,
    /// Obstacle cells with their fixed occupancy bit.
    obstacles: BTreeMap<Cell, bool>,
}

impl Workspace {
    pub fn new(lattice: Lattice, region: Region, obstacles: BTreeMap<Cell, bool>) -> Result<Self> {
        let ws = Workspace {
            lattice,
            region,
            obstacles: BTreeMap::new(),
        };
        for &cell in obstacles.keys() {
            if !ws.contains(cell) {
                return Err(Error::InvalidState(format!("obstacle {cell} is outside the workspace")));
            }
        }
        Ok(Workspace { obstacles, ..ws })
    }

    /// The whole graph as a workspace, without obstacles.
    pub fn whole_graph(lattice: Lattice) -> Self {
        let region = match &lattice {
            Lattice::FiniteGraph(g) => Region::Finite((0..g.vertex_count()).map(Cell::vertex).collect()),
            _ => Region::unbounded(),
        };
        Workspace {
            lattice,
            region,
            obstacles: BTreeMap::new(),
        }
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn region(&self) -> &Region {
        &self.region
    }

    pub fn obstacles(&self) -> &BTreeMap<Cell, bool> {
        &self.obstacles
    }

    pub fn is_obstacle(&self, cell: Cell) -> bool {
        self.obstacles.contains_key(&cell)
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.lattice.contains(cell) && self.region.contains(cell)
    }

    pub fn is_finite(&self) -> bool {
        self.region.is_finite()
    }

    /// Same lattice, every site usable, no obstacles.
    pub fn homogeneous(&self) -> Workspace {
        Workspace::whole_graph(self.lattice.clone())
    }
}

/// A non-local legality rule evaluated on whole states.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GlobalConstraint {
    /// The occupied cells form one connected component.
    Connected,
}

impl GlobalConstraint {
    pub fn name(self) -> &'static str {
        match self {
            GlobalConstraint::Connected => "connected",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "connected" => Some(GlobalConstraint::Connected),
            _ => None,
        }
    }

    pub fn holds(self, lattice: &Lattice, state: &State) -> bool {
        match self {
            GlobalConstraint::Connected => is_connected(lattice, state),
        }
    }
}

fn is_connected(lattice: &Lattice, state: &State) -> bool {
    let Some(first) = state.least() else {
        return true;
    };
    let mut seen = BTreeSet::from([first]);
    let mut queue = VecDeque::from([first]);
    while let Some(c) = queue.pop_front() {
        for n in lattice.neighbors(c) {
            if state.is_occupied(n) && seen.insert(n) {
                queue.push_back(n);
            }
        }
    }
    seen.len() == state.len()
}

/// A workspace, a catalogue of generators and an optional global constraint.
#[derive(Clone, Debug)]
pub struct System {
    workspace: Workspace,
    catalogue: Vec<Generator>,
    constraint: Option<GlobalConstraint>,
    ids: HashMap<String, usize>,
}

impl PartialEq for System {
    fn eq(&self, other: &Self) -> bool {
        self.workspace == other.workspace && self.catalogue == other.catalogue && self.constraint == other.constraint
    }
}

impl Eq for System {}

impl System {
    /// Generator ids must be unique and every support cell must be a site of
    /// the lattice.
    pub fn new(workspace: Workspace, catalogue: Vec<Generator>) -> Result<Self> {
        let mut ids = HashMap::with_capacity(catalogue.len());
        for (i, g) in catalogue.iter().enumerate() {
            if ids.insert(g.id().to_string(), i).is_some() {
                return Err(Error::InvalidGenerator {
                    id: g.id().to_string(),
                    reason: "duplicate generator id".into(),
                });
            }
            if let Some(&c) = g.support().iter().find(|&&c| !workspace.lattice().contains(c)) {
                return Err(Error::InvalidGenerator {
                    id: g.id().to_string(),
                    reason: format!("support cell {c} is not a {} site", workspace.lattice().kind()),
                });
            }
        }
        Ok(System {
            workspace,
            catalogue,
            constraint: None,
            ids,
        })
    }

    pub fn with_constraint(mut self, constraint: Option<GlobalConstraint>) -> Self {
        self.constraint = constraint;
        self
    }

    pub fn with_workspace(&self, workspace: Workspace) -> Self {
        System {
            workspace,
            ..self.clone()
        }
    }

    pub fn workspace(&self) -> &Workspace {
        &self.workspace
    }

    pub fn lattice(&self) -> &Lattice {
        self.workspace.lattice()
    }

    pub fn catalogue(&self) -> &[Generator] {
        &self.catalogue
    }

    pub fn generator(&self, index: usize) -> &Generator {
        &self.catalogue[index]
    }

    pub fn generator_index(&self, id: &str) -> Option<usize> {
        self.ids.get(id).copied()
    }

    pub fn constraint(&self) -> Option<GlobalConstraint> {
        self.constraint
    }

    pub fn is_local(&self) -> bool {
        self.constraint.is_none()
    }

    pub fn placed_support(&self, p: Placement) -> impl Iterator<Item = Cell> + '_ {
        self.catalogue[p.generator].support().iter().map(move |&c| c + p.offset)
    }

    pub fn placed_trace(&self, p: Placement) -> impl Iterator<Item = Cell> + '_ {
        self.catalogue[p.generator].trace().map(move |c| c + p.offset)
    }

    /// Whether a placement is a legal embedding: support inside the
    /// workspace, trace off the obstacles, identity offset on graphs.
    pub fn is_valid_placement(&self, p: Placement) -> bool {
        if p.generator >= self.catalogue.len() {
            return false;
        }
        if self.lattice().translation_rank() == 0 && !p.offset.is_zero() {
            return false;
        }
        self.placed_support(p).all(|c| self.workspace.contains(c))
            && self.placed_trace(p).all(|c| !self.workspace.is_obstacle(c))
    }

    /// Every legal placement of one generator, both directions, sorted by
    /// offset then direction.
    pub fn placements(&self, generator: usize) -> Result<Vec<Action>> {
        let Region::Finite(cells) = self.workspace.region() else {
            return Err(Error::WorkspaceNotFinite);
        };
        let g = &self.catalogue[generator];
        let Some(&anchor) = g.support().first() else {
            return Ok(Vec::new());
        };
        let offsets: BTreeSet<Offset> = if self.lattice().translation_rank() == 0 {
            BTreeSet::from([Offset::ZERO])
        } else {
            cells
                .iter()
                .filter(|c| c.tag == anchor.tag)
                .map(|&c| c - anchor)
                .collect()
        };
        let mut out = Vec::new();
        for offset in offsets {
            let p = Placement { generator, offset };
            if self.is_valid_placement(p) {
                out.push(Action {
                    placement: p,
                    direction: Direction::Forward,
                });
                out.push(Action {
                    placement: p,
                    direction: Direction::Backward,
                });
            }
        }
        Ok(out)
    }

    /// All placements of the whole catalogue.
    pub fn all_placements(&self) -> Result<Vec<Action>> {
        let mut out = Vec::new();
        for g in 0..self.catalogue.len() {
            out.extend(self.placements(g)?);
        }
        Ok(out)
    }

    /// Checks that a state lives in the workspace and agrees with every
    /// obstacle's occupancy bit.
    pub fn check_state(&self, state: &State) -> Result<()> {
        if let Some(c) = state.cells().find(|&c| !self.workspace.contains(c)) {
            return Err(Error::InvalidState(format!("cell {c} is outside the workspace")));
        }
        for (&cell, &occupied) in self.workspace.obstacles() {
            if state.is_occupied(cell) != occupied {
                return Err(Error::InvalidState(format!(
                    "obstacle {cell} must be {}",
                    if occupied { "occupied" } else { "empty" }
                )));
            }
        }
        Ok(())
    }

    pub fn constraint_holds(&self, state: &State) -> bool {
        self.constraint.is_none_or(|c| c.holds(self.lattice(), state))
    }

    /// Source pattern matches the state on the placed support. Ignores the
    /// global constraint.
    pub fn is_locally_admissible(&self, state: &State, action: Action) -> bool {
        if !self.is_valid_placement(action.placement) {
            return false;
        }
        let g = &self.catalogue[action.placement.generator];
        g.support()
            .iter()
            .zip(g.source(action.direction))
            .all(|(&c, &bit)| state.is_occupied(c + action.placement.offset) == bit)
    }

    /// Local admissibility plus, for non-local systems, the constraint on
    /// the resulting state.
    pub fn is_admissible(&self, state: &State, action: Action) -> bool {
        if !self.is_locally_admissible(state, action) {
            return false;
        }
        self.constraint.is_none() || self.constraint_holds(&self.apply_unchecked(state, action))
    }

    /// Writes the target pattern without checking the source pattern.
    pub fn apply_unchecked(&self, state: &State, action: Action) -> State {
        let mut next = state.clone();
        self.apply_in_place(&mut next, action);
        next
    }

    pub(crate) fn apply_in_place(&self, state: &mut State, action: Action) {
        let g = &self.catalogue[action.placement.generator];
        for (&c, &bit) in g.support().iter().zip(g.target(action.direction)) {
            state.set(c + action.placement.offset, bit);
        }
    }

    pub fn apply(&self, state: &State, action: Action) -> Result<State> {
        if !self.is_admissible(state, action) {
            return Err(Error::NotAdmissible);
        }
        Ok(self.apply_unchecked(state, action))
    }

    /// Applies a set of commuting actions, all read at `state`.
    pub fn apply_all(&self, state: &State, actions: &[Action]) -> Result<State> {
        if !actions.iter().all(|&a| self.is_locally_admissible(state, a)) {
            return Err(Error::NotAdmissible);
        }
        if !self.commute(actions) {
            return Err(Error::NotAdmissible);
        }
        let mut next = state.clone();
        for &a in actions {
            self.apply_in_place(&mut next, a);
        }
        Ok(next)
    }

    /// `trace(a)` misses `support(b)` and `trace(b)` misses `support(a)`.
    pub fn commutes(&self, a: Placement, b: Placement) -> bool {
        let support_a: Vec<Cell> = self.placed_support(a).collect();
        let support_b: Vec<Cell> = self.placed_support(b).collect();
        self.placed_trace(a).all(|c| !support_b.contains(&c)) && self.placed_trace(b).all(|c| !support_a.contains(&c))
    }

    /// Every ordered pair of distinct members commutes. A singleton commutes.
    pub fn commute(&self, actions: &[Action]) -> bool {
        actions
            .iter()
            .enumerate()
            .all(|(i, a)| actions[i + 1..].iter().all(|b| self.commutes(a.placement, b.placement)))
    }

    /// Sorted, duplicate-free list of every admissible action at `state`.
    pub fn admissible_actions(&self, state: &State) -> Vec<Action> {
        let mut found = BTreeSet::new();
        let graph_like = self.lattice().translation_rank() == 0;
        for (gi, g) in self.catalogue.iter().enumerate() {
            for direction in [Direction::Forward, Direction::Backward] {
                let source = g.source(direction);
                let anchor = g.support().iter().zip(source).find(|(_, &bit)| bit).map(|(&c, _)| c);
                let mut try_offset = |offset: Offset| {
                    let action = Action::new(gi, offset, direction);
                    if self.is_locally_admissible(state, action) {
                        found.insert(action);
                    }
                };
                match anchor {
                    _ if graph_like => try_offset(Offset::ZERO),
                    Some(anchor) => {
                        for cell in state.cells().filter(|c| c.tag == anchor.tag) {
                            try_offset(cell - anchor);
                        }
                    }
                    // A source pattern with no occupied cell can only be
                    // enumerated in a finite workspace.
                    None => {
                        if let Ok(placements) = self.placements(gi) {
                            for a in placements.into_iter().filter(|a| a.direction == direction) {
                                try_offset(a.placement.offset);
                            }
                        }
                    }
                }
            }
        }
        let mut actions: Vec<Action> = found.into_iter().collect();
        if self.constraint.is_some() {
            actions.retain(|&a| self.constraint_holds(&self.apply_unchecked(state, a)));
        }
        actions
    }

    /// Direction in which `placement` is admissible at `state`, if any.
    pub fn direction_at(&self, state: &State, placement: Placement) -> Option<Direction> {
        [Direction::Forward, Direction::Backward].into_iter().find(|&d| {
            self.is_locally_admissible(
                state,
                Action {
                    placement,
                    direction: d,
                },
            )
        })
    }
}
