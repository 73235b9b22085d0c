//! Closed-surface and orientability tests for square complexes.

use std::collections::VecDeque;

use crate::error::{Error, Result};

use super::CellComplex;

/// `(vertex, (edge, end), (edge, end))` at one corner of a square.
type Corner = (usize, (usize, usize), (usize, usize));

impl CellComplex {
    /// `None` if the complex is a closed surface: purely two-dimensional,
    /// every edge in exactly two squares, every vertex link one cycle.
    /// Otherwise the first defect found.
    pub fn closed_surface_defect(&self) -> Option<String> {
        if self.dimension() != Some(2) {
            return Some(format!("complex has dimension {:?}, not 2", self.dimension()));
        }
        let mut incidences = vec![0usize; self.count(1)];
        for list in &self.facets[2] {
            for &e in list {
                incidences[e] += 1;
            }
        }
        if let Some(e) = incidences.iter().position(|&n| n != 2) {
            return Some(format!("edge {e} lies in {} squares", incidences[e]));
        }

        // Link vertices are edge ends (edge, end); link edges are square
        // corners, joining the two edges of the corner at their common end.
        let ends = |e: usize| &self.facets[1][e];
        let mut link_of: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.count(0)];
        for e in 0..self.count(1) {
            for (end, &v) in ends(e).iter().enumerate() {
                link_of[v].push((e, end));
            }
        }
        let mut degree: Vec<Vec<Vec<(usize, usize)>>> = link_of.iter().map(|l| vec![Vec::new(); l.len()]).collect();
        for s in 0..self.count(2) {
            let Some(corners) = self.square_corners(s) else {
                return Some(format!("square {s} has no consistent corners"));
            };
            for (v, (ea, enda), (eb, endb)) in corners {
                let pos = |e: usize, end: usize| {
                    link_of[v]
                        .iter()
                        .position(|&x| x == (e, end))
                        .expect("edge end at vertex")
                };
                let (pa, pb) = (pos(ea, enda), pos(eb, endb));
                degree[v][pa].push((eb, endb));
                degree[v][pb].push((ea, enda));
            }
        }
        for (v, nbrs) in degree.iter().enumerate() {
            if nbrs.is_empty() || nbrs.iter().any(|n| n.len() != 2) {
                return Some(format!("link of vertex {v} is not a cycle"));
            }
            // walk the cycle from the first link vertex
            let start = link_of[v][0];
            let (mut prev, mut cur, mut steps) = (start, nbrs[0][0], 1);
            while cur != start {
                let i = link_of[v].iter().position(|&x| x == cur).unwrap();
                let next = if nbrs[i][0] == prev { nbrs[i][1] } else { nbrs[i][0] };
                prev = cur;
                cur = next;
                steps += 1;
                if steps > nbrs.len() {
                    break;
                }
            }
            if steps != nbrs.len() {
                return Some(format!("link of vertex {v} is disconnected"));
            }
        }
        None
    }

    pub fn is_closed_surface(&self) -> bool {
        self.closed_surface_defect().is_none()
    }

    /// Tries to orient every square so that each edge receives opposite
    /// orientations from its two squares.
    pub fn is_orientable_surface(&self) -> Result<bool> {
        if let Some(reason) = self.closed_surface_defect() {
            return Err(Error::NotASurface(reason));
        }
        // incidences[e]: (square, sign of e in the square's boundary cycle)
        let mut incidences: Vec<Vec<(usize, i8)>> = vec![Vec::new(); self.count(1)];
        for s in 0..self.count(2) {
            let signs = self
                .square_edge_signs(s)
                .ok_or_else(|| Error::NotASurface(format!("square {s} is degenerate")))?;
            for (e, sign) in signs {
                incidences[e].push((s, sign));
            }
        }
        let mut orient: Vec<i8> = vec![0; self.count(2)];
        for root in 0..self.count(2) {
            if orient[root] != 0 {
                continue;
            }
            orient[root] = 1;
            let mut queue = VecDeque::from([root]);
            while let Some(s) = queue.pop_front() {
                for e in self.facets[2][s].clone() {
                    let [(s1, g1), (s2, g2)] = incidences[e][..] else {
                        unreachable!("closed surface edges lie in two squares");
                    };
                    let (other, mine, theirs) = if s1 == s { (s2, g1, g2) } else { (s1, g2, g1) };
                    let want = -orient[s] * mine * theirs;
                    if orient[other] == 0 {
                        orient[other] = want;
                        queue.push_back(other);
                    } else if orient[other] != want {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// The four corners of a square as `(vertex, (edge, end), (edge, end))`,
    /// or `None` if the square's edges do not meet pairwise in one vertex.
    fn square_corners(&self, s: usize) -> Option<Vec<Corner>> {
        let f = &self.facets[2][s];
        let (a, b) = ([f[0], f[1]], [f[2], f[3]]);
        let mut out = Vec::with_capacity(4);
        for &ea in &a {
            for &eb in &b {
                let (pa, pb) = (&self.facets[1][ea], &self.facets[1][eb]);
                let mut shared = None;
                for (i, &u) in pa.iter().enumerate() {
                    for (j, &w) in pb.iter().enumerate() {
                        if u == w {
                            if shared.is_some() {
                                return None;
                            }
                            shared = Some((u, i, j));
                        }
                    }
                }
                let (v, i, j) = shared?;
                out.push((v, (ea, i), (eb, j)));
            }
        }
        Some(out)
    }

    /// Each edge of the square with the sign of its traversal in the
    /// boundary cycle `a0, b0, a1, b1`, relative to the edge's own
    /// `facets[0] -> facets[1]` direction.
    fn square_edge_signs(&self, s: usize) -> Option<[(usize, i8); 4]> {
        let corners = self.square_corners(s)?;
        let vertex = |ai: usize, bj: usize| corners[ai * 2 + bj].0;
        let (v00, v01, v10, v11) = (vertex(0, 0), vertex(0, 1), vertex(1, 0), vertex(1, 1));
        let mut distinct = [v00, v01, v10, v11];
        distinct.sort_unstable();
        if distinct.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        let f = &self.facets[2][s];
        let sign = |e: usize, from: usize| if self.facets[1][e][0] == from { 1 } else { -1 };
        // cycle v00 -> v01 (a0) -> v11 (b1) -> v10 (a1) -> v00 (b0)
        Some([
            (f[0], sign(f[0], v00)),
            (f[3], sign(f[3], v01)),
            (f[1], sign(f[1], v11)),
            (f[2], sign(f[2], v10)),
        ])
    }
}
