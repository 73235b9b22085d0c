//! Enumeration of the cubical state complex.
//!
//! The builder closes the seed states under admissible actions (breadth
//! first, deterministic order), then enumerates at every vertex the cliques
//! of the pairwise-commutation graph of its admissible actions. Each clique
//! is a corner of a cube; cubes are deduplicated through a canonical form in
//! which every action runs forward from the base vertex.

mod clique;
mod export;
mod link;

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::generator::{Action, Direction};
use crate::lattice::Offset;
use crate::state::State;
use crate::system::System;
use crate::topology::CellComplex;

pub(crate) use clique::for_each_clique;
pub use link::{LinkComplex, LinkReport, Violation, ViolationKind};

pub const DEFAULT_MAX_VERTICES: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuildOptions {
    pub max_vertices: usize,
    /// Enumerate cubes on the rayon pool. Output is identical either way.
    pub parallel: bool,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            max_vertices: DEFAULT_MAX_VERTICES,
            parallel: false,
        }
    }
}

impl BuildOptions {
    pub fn with_cap(max_vertices: usize) -> Self {
        BuildOptions {
            max_vertices,
            ..Default::default()
        }
    }
}

/// How states and cubes are identified.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Quotient {
    None,
    /// Up to lattice translations.
    Translations,
}

impl Quotient {
    pub(crate) fn canonical_offset(self, system: &System, state: &State) -> Offset {
        match self {
            Quotient::None => Offset::ZERO,
            Quotient::Translations => {
                if system.lattice().translation_rank() == 0 {
                    return Offset::ZERO;
                }
                match state.least() {
                    Some(c) => Offset::new(-c.x, -c.y),
                    None => Offset::ZERO,
                }
            }
        }
    }

    pub(crate) fn state(self, system: &System, state: State) -> State {
        let t = self.canonical_offset(system, &state);
        state.translated(t)
    }
}

/// A cube `[base; actions]`: every action runs forward from `base`, and the
/// actions are sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cube {
    base: State,
    actions: Vec<Action>,
}

impl Cube {
    pub fn vertex(state: State) -> Self {
        Cube {
            base: state,
            actions: Vec::new(),
        }
    }

    /// Canonical cube spanned at `state` by a commuting set of actions, each
    /// admissible at `state` in the direction it carries.
    pub fn at(system: &System, state: &State, actions: &[Action]) -> Result<Self> {
        if !actions.iter().all(|&a| system.is_locally_admissible(state, a)) || !system.commute(actions) {
            return Err(Error::NotAdmissible);
        }
        Ok(Self::at_unchecked(system, state, actions))
    }

    pub(crate) fn at_unchecked(system: &System, state: &State, actions: &[Action]) -> Self {
        let mut base = state.clone();
        for a in actions.iter().filter(|a| a.direction == Direction::Backward) {
            system.apply_in_place(&mut base, *a);
        }
        let mut forward: Vec<Action> = actions.iter().map(|a| a.with_direction(Direction::Forward)).collect();
        forward.sort();
        Cube { base, actions: forward }
    }

    pub fn dim(&self) -> usize {
        self.actions.len()
    }

    pub fn base(&self) -> &State {
        &self.base
    }

    pub fn actions(&self) -> &[Action] {
        &self.actions
    }

    pub fn translated(&self, offset: Offset) -> Cube {
        if offset.is_zero() {
            return self.clone();
        }
        let mut actions: Vec<Action> = self
            .actions
            .iter()
            .map(|a| Action::new(a.placement.generator, a.placement.offset + offset, a.direction))
            .collect();
        actions.sort();
        Cube {
            base: self.base.translated(offset),
            actions,
        }
    }

    /// All `2^dim` vertices, indexed by the bitmask of applied actions.
    pub fn vertices(&self, system: &System) -> Vec<State> {
        let k = self.dim();
        let mut out = Vec::with_capacity(1 << k);
        for mask in 0usize..(1 << k) {
            let mut s = self.base.clone();
            for (i, &a) in self.actions.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    system.apply_in_place(&mut s, a);
                }
            }
            out.push(s);
        }
        out
    }

    /// The `2 dim` facets: for each action, the face at the base and the
    /// face across it.
    pub fn facets(&self, system: &System) -> Vec<Cube> {
        let mut out = Vec::with_capacity(2 * self.dim());
        for (i, &a) in self.actions.iter().enumerate() {
            let rest: Vec<Action> = self
                .actions
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &b)| b)
                .collect();
            out.push(Cube {
                base: self.base.clone(),
                actions: rest.clone(),
            });
            out.push(Cube {
                base: system.apply_unchecked(&self.base, a),
                actions: rest,
            });
        }
        out
    }

    /// The actions as seen from one of the cube's vertices, or `None` if
    /// `state` is not a vertex.
    pub fn actions_from(&self, system: &System, state: &State) -> Option<Vec<Action>> {
        let mut out = Vec::with_capacity(self.dim());
        let mut back = state.clone();
        for &a in &self.actions {
            let d = system.direction_at(state, a.placement)?;
            if d == Direction::Backward {
                system.apply_in_place(&mut back, a.reverse());
            }
            out.push(a.with_direction(d));
        }
        (back == self.base).then_some(out)
    }
}

/// Dimension and index of a cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CellId {
    pub dim: usize,
    pub index: usize,
}

/// A cube seen from one of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Corner {
    pub cube: CellId,
    /// The cube's actions with directions read at this vertex.
    pub actions: Vec<Action>,
}

#[derive(Clone, Debug)]
pub struct StateComplex {
    system: System,
    quotient: Quotient,
    cubes: Vec<Vec<Cube>>,
    index: HashMap<Cube, CellId>,
    /// Corners of every cube of dimension at least one, per vertex.
    corners: Vec<Vec<Corner>>,
    cells: CellComplex,
    truncated: bool,
    cap: usize,
}

impl StateComplex {
    /// Closes `seeds` under admissible actions and enumerates every cube.
    ///
    /// The closure stops registering new vertices once `max_vertices` is
    /// reached; the complex is then flagged as truncated and only contains
    /// cubes whose vertices were all registered.
    pub fn build(system: &System, seeds: &[State], options: BuildOptions) -> Result<Self> {
        if !system.workspace().is_finite() {
            return Err(Error::WorkspaceNotFinite);
        }
        Self::build_quotient(system, seeds, options, Quotient::None)
    }

    pub(crate) fn build_quotient(
        system: &System,
        seeds: &[State],
        options: BuildOptions,
        quotient: Quotient,
    ) -> Result<Self> {
        for seed in seeds {
            system.check_state(seed)?;
            if !system.constraint_holds(seed) {
                return Err(Error::InvalidState("seed violates the global constraint".into()));
            }
        }
        let cap = options.max_vertices.max(1);

        let mut vertices: Vec<State> = Vec::new();
        let mut vertex_index: HashMap<State, usize> = HashMap::new();
        let mut truncated = false;
        for seed in seeds {
            let s = quotient.state(system, seed.clone());
            if vertex_index.contains_key(&s) {
                continue;
            }
            if vertices.len() >= cap {
                truncated = true;
                break;
            }
            vertex_index.insert(s.clone(), vertices.len());
            vertices.push(s);
        }

        // Breadth-first closure; edges[v] lists (action, target vertex).
        let mut edges: Vec<Vec<(Action, usize)>> = Vec::new();
        let mut next = 0;
        while next < vertices.len() {
            let v = vertices[next].clone();
            let mut out = Vec::new();
            for a in system.admissible_actions(&v) {
                let w = quotient.state(system, system.apply_unchecked(&v, a));
                let id = match vertex_index.get(&w) {
                    Some(&id) => Some(id),
                    None if vertices.len() < cap => {
                        vertex_index.insert(w.clone(), vertices.len());
                        vertices.push(w);
                        Some(vertices.len() - 1)
                    }
                    None => {
                        truncated = true;
                        None
                    }
                };
                if let Some(id) = id {
                    out.push((a, id));
                }
            }
            edges.push(out);
            next += 1;
        }

        let enumerate = |v: usize| corner_cubes(system, quotient, &vertices[v], &edges[v], &vertex_index, truncated);
        let found: Vec<Vec<(Cube, Vec<Action>)>> = if options.parallel {
            (0..vertices.len()).into_par_iter().map(enumerate).collect()
        } else {
            (0..vertices.len()).map(enumerate).collect()
        };

        let mut cubes: Vec<Vec<Cube>> = vec![vertices.iter().cloned().map(Cube::vertex).collect()];
        let mut index: HashMap<Cube, CellId> = cubes[0]
            .iter()
            .enumerate()
            .map(|(i, c)| (c.clone(), CellId { dim: 0, index: i }))
            .collect();
        let mut corners: Vec<Vec<Corner>> = Vec::with_capacity(vertices.len());
        for list in found {
            let mut here = Vec::with_capacity(list.len());
            for (cube, actions) in list {
                let dim = cube.dim();
                let id = match index.get(&cube) {
                    Some(&id) => id,
                    None => {
                        if cubes.len() <= dim {
                            cubes.resize_with(dim + 1, Vec::new);
                        }
                        let id = CellId {
                            dim,
                            index: cubes[dim].len(),
                        };
                        cubes[dim].push(cube.clone());
                        index.insert(cube, id);
                        id
                    }
                };
                here.push(Corner { cube: id, actions });
            }
            corners.push(here);
        }

        let mut facets: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); cubes[0].len()]];
        for (dim, dim_cubes) in cubes.iter().enumerate().skip(1) {
            let mut level = Vec::with_capacity(dim_cubes.len());
            for cube in dim_cubes {
                let mut ids = Vec::with_capacity(2 * dim);
                for f in cube.facets(system) {
                    let t = quotient.canonical_offset(system, f.base());
                    let f = f.translated(t);
                    let id = index.get(&f).ok_or_else(|| {
                        Error::InvalidState(format!("facet of a {dim}-cube is missing from the complex"))
                    })?;
                    ids.push(id.index);
                }
                level.push(ids);
            }
            facets.push(level);
        }
        let counts = cubes.iter().map(Vec::len).collect();
        let cells = CellComplex::new(counts, facets)?;

        Ok(StateComplex {
            system: system.clone(),
            quotient,
            cubes,
            index,
            corners,
            cells,
            truncated,
            cap,
        })
    }

    pub fn system(&self) -> &System {
        &self.system
    }

    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn require_complete(&self) -> Result<()> {
        if self.truncated {
            Err(Error::Truncated { cap: self.cap })
        } else {
            Ok(())
        }
    }

    pub fn is_quotient(&self) -> bool {
        self.quotient != Quotient::None
    }

    /// Cell counts per dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        self.cubes.iter().map(Vec::len).collect()
    }

    pub fn top_dimension(&self) -> usize {
        self.cubes.len().saturating_sub(1)
    }

    pub fn vertices(&self) -> impl ExactSizeIterator<Item = &State> {
        self.cubes[0].iter().map(Cube::base)
    }

    pub fn vertex(&self, id: usize) -> &State {
        self.cubes[0][id].base()
    }

    pub fn vertex_id(&self, state: &State) -> Option<usize> {
        let s = self.quotient.state(&self.system, state.clone());
        self.index.get(&Cube::vertex(s)).map(|id| id.index)
    }

    pub fn cubes(&self, dim: usize) -> &[Cube] {
        self.cubes.get(dim).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn cube(&self, id: CellId) -> &Cube {
        &self.cubes[id.dim][id.index]
    }

    pub fn canonical(&self, cube: &Cube) -> Cube {
        let t = self.quotient.canonical_offset(&self.system, cube.base());
        cube.translated(t)
    }

    pub fn find(&self, cube: &Cube) -> Option<CellId> {
        self.index.get(&self.canonical(cube)).copied()
    }

    /// Facet indices (into dimension `id.dim - 1`).
    pub fn facet_ids(&self, id: CellId) -> &[usize] {
        self.cells.facets(id.dim, id.index)
    }

    pub fn corners(&self, vertex: usize) -> &[Corner] {
        &self.corners[vertex]
    }

    pub fn cell_complex(&self) -> &CellComplex {
        &self.cells
    }

    /// The cell complex, for invariants that need the whole complex.
    pub fn topology(&self) -> Result<&CellComplex> {
        self.require_complete()?;
        Ok(&self.cells)
    }

    /// The `2 dim` facets of a stored cube, in canonical form.
    pub fn boundary(&self, cube: &Cube) -> Result<Vec<Cube>> {
        let id = self.find(cube).ok_or(Error::UnknownCube)?;
        if id.dim == 0 {
            return Ok(Vec::new());
        }
        Ok(self
            .facet_ids(id)
            .iter()
            .map(|&i| self.cubes[id.dim - 1][i].clone())
            .collect())
    }

    /// Every cube having `cube` as a face, including `cube` itself.
    pub fn star(&self, cube: &Cube) -> Result<Vec<CellId>> {
        let id = self.find(cube).ok_or(Error::UnknownCube)?;
        Ok(self.star_of(id))
    }

    pub fn star_of(&self, id: CellId) -> Vec<CellId> {
        let mut out = vec![id];
        let mut frontier = vec![id.index];
        for dim in id.dim + 1..self.cubes.len() {
            let mut next = Vec::new();
            for &f in &frontier {
                next.extend(self.cells.cofacets(dim - 1)[f].iter().copied());
            }
            next.sort_unstable();
            next.dedup();
            out.extend(next.iter().map(|&index| CellId { dim, index }));
            frontier = next;
        }
        out
    }
}

/// Every cube corner at `vertex`, in clique order.
fn corner_cubes(
    system: &System,
    quotient: Quotient,
    vertex: &State,
    edges: &[(Action, usize)],
    vertex_index: &HashMap<State, usize>,
    truncated: bool,
) -> Vec<(Cube, Vec<Action>)> {
    let n = edges.len();
    let mut adjacent = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let c = system.commutes(edges[i].0.placement, edges[j].0.placement);
            adjacent[i][j] = c;
            adjacent[j][i] = c;
        }
    }
    let check_vertices = truncated || !system.is_local();
    let mut out = Vec::new();
    for_each_clique(n, &adjacent, |clique| {
        let actions: Vec<Action> = clique.iter().map(|&i| edges[i].0).collect();
        if check_vertices && actions.len() >= 2 {
            let corner = Cube {
                base: vertex.clone(),
                actions: actions.clone(),
            };
            // Every vertex of the cube must be a legal, registered state.
            let ok = corner
                .vertices(system)
                .into_iter()
                .all(|s| system.constraint_holds(&s) && vertex_index.contains_key(&quotient.state(system, s)));
            if !ok {
                return;
            }
        }
        let cube = Cube::at_unchecked(system, vertex, &actions);
        let t = quotient.canonical_offset(system, cube.base());
        out.push((cube.translated(t), actions));
    });
    out
}
