//! Lattices and their sites.
//!
//! Every site is stored as a [`Cell`] with two integer coordinates and a small
//! tag. Square and hexagonal (axial) lattices use `tag = 0`; the square-edge
//! lattice uses the tag for the edge orientation; finite graphs store the
//! vertex id in `x`.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub x: i32,
    pub y: i32,
    pub tag: u8,
}

/// Orientation tags on the square-edge lattice.
pub const HORIZONTAL: u8 = 0;
pub const VERTICAL: u8 = 1;

impl Cell {
    pub const fn new(x: i32, y: i32) -> Self {
        Cell { x, y, tag: 0 }
    }

    /// Edge from `(x, y)` to `(x + 1, y)`.
    pub const fn h(x: i32, y: i32) -> Self {
        Cell { x, y, tag: HORIZONTAL }
    }

    /// Edge from `(x, y)` to `(x, y + 1)`.
    pub const fn v(x: i32, y: i32) -> Self {
        Cell { x, y, tag: VERTICAL }
    }

    pub const fn vertex(id: u32) -> Self {
        Cell {
            x: id as i32,
            y: 0,
            tag: 0,
        }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.y, self.tag)
    }
}

/// Integer translation vector.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Offset {
    pub dx: i32,
    pub dy: i32,
}

impl Offset {
    pub const ZERO: Offset = Offset { dx: 0, dy: 0 };

    pub const fn new(dx: i32, dy: i32) -> Self {
        Offset { dx, dy }
    }

    pub fn is_zero(self) -> bool {
        self == Offset::ZERO
    }
}

impl Add<Offset> for Cell {
    type Output = Cell;
    fn add(self, o: Offset) -> Cell {
        Cell {
            x: self.x + o.dx,
            y: self.y + o.dy,
            tag: self.tag,
        }
    }
}

impl Sub for Cell {
    type Output = Offset;
    fn sub(self, other: Cell) -> Offset {
        Offset::new(self.x - other.x, self.y - other.y)
    }
}

impl Add for Offset {
    type Output = Offset;
    fn add(self, o: Offset) -> Offset {
        Offset::new(self.dx + o.dx, self.dy + o.dy)
    }
}

impl Sub for Offset {
    type Output = Offset;
    fn sub(self, o: Offset) -> Offset {
        Offset::new(self.dx - o.dx, self.dy - o.dy)
    }
}

impl Neg for Offset {
    type Output = Offset;
    fn neg(self) -> Offset {
        Offset::new(-self.dx, -self.dy)
    }
}

impl fmt::Display for Offset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.dx, self.dy)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LatticeKind {
    Square,
    HexAxial,
    SquareEdge,
    FiniteGraph,
}

impl LatticeKind {
    pub fn name(self) -> &'static str {
        match self {
            LatticeKind::Square => "square",
            LatticeKind::HexAxial => "hex",
            LatticeKind::SquareEdge => "square-edge",
            LatticeKind::FiniteGraph => "graph",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "square" => Some(LatticeKind::Square),
            "hex" => Some(LatticeKind::HexAxial),
            "square-edge" => Some(LatticeKind::SquareEdge),
            "graph" => Some(LatticeKind::FiniteGraph),
            _ => None,
        }
    }
}

impl fmt::Display for LatticeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A simple undirected graph on vertices `0..vertex_count`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    vertex_count: u32,
    edges: Vec<(u32, u32)>,
    adjacency: Vec<Vec<u32>>,
}

impl Graph {
    /// Builds a simple graph. Edges are normalised to `(min, max)`, sorted and
    /// deduplicated; loops and out-of-range endpoints are rejected.
    pub fn new(vertex_count: u32, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::OutOfRange(format!("graph loop at vertex {a}")));
            }
            if a >= vertex_count || b >= vertex_count {
                return Err(Error::OutOfRange(format!(
                    "edge ({a},{b}) outside vertex range 0..{vertex_count}"
                )));
            }
            set.insert((a.min(b), a.max(b)));
        }
        let edges: Vec<_> = set.into_iter().collect();
        let mut adjacency = vec![Vec::new(); vertex_count as usize];
        for &(a, b) in &edges {
            adjacency[a as usize].push(b);
            adjacency[b as usize].push(a);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            vertex_count,
            edges,
            adjacency,
        })
    }

    pub fn complete(n: u32) -> Self {
        let edges = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
        Graph::new(n, edges).expect("complete graph is simple")
    }

    /// Path on `n` vertices `0 - 1 - ... - (n-1)`.
    pub fn path(n: u32) -> Self {
        Graph::new(n, (1..n).map(|b| (b - 1, b))).expect("path graph is simple")
    }

    pub fn cycle(n: u32) -> Result<Self> {
        if n < 3 {
            return Err(Error::OutOfRange("a simple cycle needs at least 3 vertices".into()));
        }
        Graph::new(n, (0..n).map(|a| (a, (a + 1) % n)))
    }

    /// Disjoint union, relabelling `other` after `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.vertex_count;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(a, b)| (a + shift, b + shift)));
        Graph::new(self.vertex_count + other.vertex_count, edges).expect("union of simple graphs")
    }

    pub fn vertex_count(&self) -> u32 {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        self.adjacency.get(v as usize).map(Vec::as_slice).unwrap_or(&[])
    }
}

/// Axial hex directions in cyclic order; consecutive entries are adjacent.
pub const HEX_DIRECTIONS: [Offset; 6] = [
    Offset::new(1, 0),
    Offset::new(1, -1),
    Offset::new(0, -1),
    Offset::new(-1, 0),
    Offset::new(-1, 1),
    Offset::new(0, 1),
];

pub const SQUARE_DIRECTIONS: [Offset; 4] = [
    Offset::new(1, 0),
    Offset::new(0, 1),
    Offset::new(-1, 0),
    Offset::new(0, -1),
];

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Lattice {
    Square,
    HexAxial,
    SquareEdge,
    FiniteGraph(Arc<Graph>),
}

impl Lattice {
    pub fn graph(graph: Graph) -> Self {
        Lattice::FiniteGraph(Arc::new(graph))
    }

    /// The underlying graph of a finite-graph lattice.
    pub fn finite_graph(&self) -> Option<&Graph> {
        match self {
            Lattice::FiniteGraph(g) => Some(g),
            _ => None,
        }
    }

    pub fn kind(&self) -> LatticeKind {
        match self {
            Lattice::Square => LatticeKind::Square,
            Lattice::HexAxial => LatticeKind::HexAxial,
            Lattice::SquareEdge => LatticeKind::SquareEdge,
            Lattice::FiniteGraph(_) => LatticeKind::FiniteGraph,
        }
    }

    pub fn translation_rank(&self) -> usize {
        match self {
            Lattice::FiniteGraph(_) => 0,
            _ => 2,
        }
    }

    /// Whether `cell` is a site of this lattice.
    pub fn contains(&self, cell: Cell) -> bool {
        match self {
            Lattice::Square | Lattice::HexAxial => cell.tag == 0,
            Lattice::SquareEdge => cell.tag == HORIZONTAL || cell.tag == VERTICAL,
            Lattice::FiniteGraph(g) => cell.tag == 0 && cell.y == 0 && cell.x >= 0 && (cell.x as u32) < g.vertex_count,
        }
    }

    pub fn neighbors(&self, cell: Cell) -> Vec<Cell> {
        match self {
            Lattice::Square => SQUARE_DIRECTIONS.iter().map(|&d| cell + d).collect(),
            Lattice::HexAxial => HEX_DIRECTIONS.iter().map(|&d| cell + d).collect(),
            Lattice::SquareEdge => edge_neighbors(cell),
            Lattice::FiniteGraph(g) => {
                if !self.contains(cell) {
                    return Vec::new();
                }
                g.neighbors(cell.x as u32).iter().map(|&v| Cell::vertex(v)).collect()
            }
        }
    }

    pub fn adjacent(&self, a: Cell, b: Cell) -> bool {
        self.neighbors(a).contains(&b)
    }
}

/// Edges sharing an endpoint with `e`.
fn edge_neighbors(e: Cell) -> Vec<Cell> {
    let (x, y) = (e.x, e.y);
    if e.tag == HORIZONTAL {
        vec![
            Cell::h(x - 1, y),
            Cell::v(x, y - 1),
            Cell::v(x, y),
            Cell::h(x + 1, y),
            Cell::v(x + 1, y - 1),
            Cell::v(x + 1, y),
        ]
    } else {
        vec![
            Cell::v(x, y - 1),
            Cell::h(x - 1, y),
            Cell::h(x, y),
            Cell::v(x, y + 1),
            Cell::h(x - 1, y + 1),
            Cell::h(x, y + 1),
        ]
    }
}
