//! Vertex links and the link-condition checker.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::generator::Action;
use crate::state::State;

use super::{for_each_clique, StateComplex};

/// The simplicial complex of cubes at one vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkComplex {
    /// The edges at the vertex, as actions read at the vertex.
    pub vertices: Vec<Action>,
    /// One simplex per incident cube of dimension at least one, as sorted
    /// indices into `vertices`. Closed under taking faces.
    pub simplices: Vec<Vec<usize>>,
}

impl LinkComplex {
    pub fn dimension(&self) -> Option<usize> {
        self.simplices.iter().map(|s| s.len() - 1).max()
    }

    /// Pairs joined by an edge of the link.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.simplices
            .iter()
            .filter(|s| s.len() == 2)
            .map(|s| (s[0], s[1]))
            .collect()
    }

    /// Whether the link is a single cycle (each vertex of degree two,
    /// connected, no higher simplices).
    pub fn is_cycle(&self) -> bool {
        let n = self.vertices.len();
        if n < 3 || self.dimension() != Some(1) {
            return false;
        }
        let mut adj = vec![Vec::new(); n];
        for (a, b) in self.edges() {
            adj[a].push(b);
            adj[b].push(a);
        }
        if adj.iter().any(|l| l.len() != 2) {
            return false;
        }
        let (mut prev, mut cur, mut steps) = (0, adj[0][0], 1);
        while cur != 0 {
            let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
            prev = cur;
            cur = next;
            steps += 1;
        }
        steps == n
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    /// A clique of the link bounds no simplex.
    Missing,
    /// A clique of the link bounds more than one simplex.
    Duplicate(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub vertex: usize,
    pub actions: Vec<Action>,
    pub kind: ViolationKind,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinkReport {
    pub violations: Vec<Violation>,
    /// Cliques examined across all vertices.
    pub cliques: usize,
}

impl LinkReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl StateComplex {
    pub fn link(&self, state: &State) -> Result<LinkComplex> {
        let v = self.vertex_id(state).ok_or(Error::UnknownVertex)?;
        Ok(self.link_of(v))
    }

    pub fn link_of(&self, vertex: usize) -> LinkComplex {
        let corners = &self.corners[vertex];
        let vertices: Vec<Action> = corners
            .iter()
            .filter(|c| c.actions.len() == 1)
            .map(|c| c.actions[0])
            .collect();
        let position: HashMap<Action, usize> = vertices.iter().enumerate().map(|(i, &a)| (a, i)).collect();
        let simplices = corners
            .iter()
            .map(|c| {
                let mut s: Vec<usize> = c.actions.iter().map(|a| position[a]).collect();
                s.sort_unstable();
                s
            })
            .collect();
        LinkComplex { vertices, simplices }
    }

    /// Checks that every clique of every link's 1-skeleton spans exactly one
    /// simplex.
    pub fn check_link_condition(&self) -> Result<LinkReport> {
        self.require_complete()?;
        let mut report = LinkReport::default();
        for v in 0..self.f_vector()[0] {
            let link = self.link_of(v);
            let n = link.vertices.len();
            let mut adjacent = vec![vec![false; n]; n];
            let mut count: HashMap<&[usize], usize> = HashMap::new();
            for s in &link.simplices {
                *count.entry(s.as_slice()).or_default() += 1;
                if let [a, b] = s[..] {
                    adjacent[a][b] = true;
                    adjacent[b][a] = true;
                }
            }
            for_each_clique(n, &adjacent, |clique| {
                report.cliques += 1;
                let found = count.get(clique).copied().unwrap_or(0);
                if found != 1 {
                    report.violations.push(Violation {
                        vertex: v,
                        actions: clique.iter().map(|&i| link.vertices[i]).collect(),
                        kind: if found == 0 {
                            ViolationKind::Missing
                        } else {
                            ViolationKind::Duplicate(found)
                        },
                    });
                }
            });
        }
        Ok(report)
    }
}
