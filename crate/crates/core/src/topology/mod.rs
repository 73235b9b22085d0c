//! Combinatorial invariants of finite cube complexes.
//!
//! [`CellComplex`] is the bare incidence structure: cell counts per dimension
//! and, for every cell of dimension `k >= 1`, its `2k` facets. Facets of a
//! `k`-cell are listed as `k` consecutive pairs of opposite faces, so a
//! square lists `[a0, a1, b0, b1]` with `a0` opposite `a1`. A facet may be
//! listed more than once when the complex glues a cube to itself.

mod collapse;
pub mod fixtures;
mod gf2;
mod surface;

use crate::error::{Error, Result};

pub use gf2::RANK_LIMIT;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellComplex {
    counts: Vec<usize>,
    /// `facets[k][i]`: facets of the `i`-th `k`-cell (empty for `k = 0`).
    facets: Vec<Vec<Vec<usize>>>,
    /// `cofacets[k][i]`: distinct `(k+1)`-cells having the `i`-th `k`-cell
    /// as a facet, ascending.
    cofacets: Vec<Vec<Vec<usize>>>,
}

impl CellComplex {
    pub fn new(counts: Vec<usize>, facets: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidState(msg));
        if counts.len() != facets.len() {
            return bad("one facet table per dimension is required".into());
        }
        for (k, table) in facets.iter().enumerate() {
            if table.len() != counts[k] {
                return bad(format!(
                    "dimension {k} lists {} cells, expected {}",
                    table.len(),
                    counts[k]
                ));
            }
            for (i, list) in table.iter().enumerate() {
                if list.len() != 2 * k {
                    return bad(format!("{k}-cell {i} has {} facets, expected {}", list.len(), 2 * k));
                }
                if let Some(&f) = list.iter().find(|&&f| f >= counts[k - 1]) {
                    return bad(format!("{k}-cell {i} refers to missing facet {f}"));
                }
            }
        }
        let mut cofacets: Vec<Vec<Vec<usize>>> = counts.iter().map(|&n| vec![Vec::new(); n]).collect();
        for k in 1..counts.len() {
            for (i, list) in facets[k].iter().enumerate() {
                for &f in list {
                    let up = &mut cofacets[k - 1][f];
                    if up.last() != Some(&i) {
                        up.push(i);
                    }
                }
            }
        }
        Ok(CellComplex {
            counts,
            facets,
            cofacets,
        })
    }

    pub fn f_vector(&self) -> &[usize] {
        &self.counts
    }

    /// Highest dimension with at least one cell; `None` when empty.
    pub fn dimension(&self) -> Option<usize> {
        self.counts.iter().rposition(|&n| n > 0)
    }

    pub fn count(&self, dim: usize) -> usize {
        self.counts.get(dim).copied().unwrap_or(0)
    }

    pub fn facets(&self, dim: usize, index: usize) -> &[usize] {
        &self.facets[dim][index]
    }

    pub fn cofacets(&self, dim: usize) -> &[Vec<usize>] {
        self.cofacets.get(dim).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.counts
            .iter()
            .enumerate()
            .map(|(k, &n)| if k % 2 == 0 { n as i64 } else { -(n as i64) })
            .sum()
    }

    /// Rank over GF(2) of the boundary map from `k`-cells to `(k-1)`-cells.
    pub fn boundary_rank(&self, k: usize) -> Result<usize> {
        if k == 0 || k >= self.counts.len() {
            return Ok(0);
        }
        gf2::rank(self.counts[k - 1], &self.facets[k])
    }

    /// Mod-2 Betti numbers, one per dimension.
    pub fn betti_mod2(&self) -> Result<Vec<usize>> {
        let ranks: Vec<usize> = (0..=self.counts.len())
            .map(|k| self.boundary_rank(k))
            .collect::<Result<_>>()?;
        Ok((0..self.counts.len())
            .map(|k| self.counts[k] - ranks[k] - ranks[k + 1])
            .collect())
    }

    /// Whether the composite boundary `d_{k-1} d_k` vanishes mod 2 for all `k`.
    pub fn boundary_squares_to_zero(&self) -> bool {
        (2..self.counts.len()).all(|k| {
            self.facets[k].iter().all(|list| {
                let mut parity = std::collections::HashMap::<usize, bool>::new();
                for &f in list {
                    for &g in &self.facets[k - 1][f] {
                        *parity.entry(g).or_default() ^= true;
                    }
                }
                parity.values().all(|&odd| !odd)
            })
        })
    }
}
