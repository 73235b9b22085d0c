//! Greedy free-face collapse.

use std::collections::VecDeque;

use super::CellComplex;

impl CellComplex {
    /// Repeatedly removes a free face together with its unique coface and
    /// returns the f-vector of what remains.
    ///
    /// Cells are visited from the top dimension down and by index; after a
    /// removal the facets of the removed cells are revisited. Reaching
    /// `(1, 0, ...)` certifies contractibility; getting stuck certifies
    /// nothing.
    pub fn greedy_collapse(&self) -> Vec<usize> {
        let dims = self.counts.len();
        let mut alive: Vec<Vec<bool>> = self.counts.iter().map(|&n| vec![true; n]).collect();
        // incidences with alive cofaces, counted with multiplicity
        let mut up: Vec<Vec<usize>> = self.counts.iter().map(|&n| vec![0; n]).collect();
        for k in 1..dims {
            for list in &self.facets[k] {
                for &f in list {
                    up[k - 1][f] += 1;
                }
            }
        }
        let mut queue: VecDeque<(usize, usize)> = (0..dims.saturating_sub(1))
            .rev()
            .flat_map(|k| (0..self.counts[k]).map(move |i| (k, i)))
            .collect();
        while let Some((k, i)) = queue.pop_front() {
            if !alive[k][i] || up[k][i] != 1 {
                continue;
            }
            let coface = self.cofacets[k][i]
                .iter()
                .copied()
                .find(|&c| alive[k + 1][c])
                .expect("a counted coface is alive");
            alive[k][i] = false;
            alive[k + 1][coface] = false;
            for &f in &self.facets[k + 1][coface] {
                up[k][f] -= 1;
                if f != i {
                    queue.push_back((k, f));
                }
            }
            if k > 0 {
                for &f in &self.facets[k][i] {
                    up[k - 1][f] -= 1;
                    queue.push_back((k - 1, f));
                }
            }
        }
        alive.iter().map(|level| level.iter().filter(|&&a| a).count()).collect()
    }
}
