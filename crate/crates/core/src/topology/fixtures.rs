//! Small reference complexes.

use std::collections::HashMap;

use super::CellComplex;

/// The standard `k`-cube with all its faces.
pub fn cube(k: usize) -> CellComplex {
    // A face is a word over {0, 1, free}; its dimension is the free count.
    const FREE: u8 = 2;
    let mut faces: Vec<Vec<Vec<u8>>> = vec![Vec::new(); k + 1];
    let total = 3usize.pow(k as u32);
    for mut code in 0..total {
        let mut word = vec![0u8; k];
        for slot in word.iter_mut() {
            *slot = (code % 3) as u8;
            code /= 3;
        }
        let dim = word.iter().filter(|&&c| c == FREE).count();
        faces[dim].push(word);
    }
    for level in &mut faces {
        level.sort();
    }
    let index: Vec<HashMap<Vec<u8>, usize>> = faces
        .iter()
        .map(|l| l.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect())
        .collect();
    let mut facets = vec![vec![Vec::new(); faces[0].len()]];
    for d in 1..=k {
        let level = faces[d]
            .iter()
            .map(|w| {
                let mut out = Vec::new();
                for (pos, _) in w.iter().enumerate().filter(|(_, &c)| c == FREE) {
                    for bit in [0, 1] {
                        let mut f = w.clone();
                        f[pos] = bit;
                        out.push(index[d - 1][&f]);
                    }
                }
                out
            })
            .collect();
        facets.push(level);
    }
    let counts = faces.iter().map(Vec::len).collect();
    CellComplex::new(counts, facets).expect("cube faces are consistent")
}

/// The `n x n` periodic square grid (a torus).
pub fn torus(n: usize) -> CellComplex {
    periodic_grid(n, false)
}

/// The `n x n` square grid glued with a reflection along one direction.
pub fn klein_bottle(n: usize) -> CellComplex {
    periodic_grid(n, true)
}

fn periodic_grid(n: usize, twist: bool) -> CellComplex {
    assert!(n >= 3, "grid must be at least 3 x 3 to stay a regular complex");
    // Wrapping in x optionally reflects y.
    let vertex = |x: usize, y: usize| {
        let (x, y) = if x == n && twist {
            (0, (n - y % n) % n)
        } else {
            (x % n, y % n)
        };
        x * n + y
    };
    let mut edges: Vec<Vec<usize>> = Vec::new();
    let mut edge_index: HashMap<(usize, usize), usize> = HashMap::new();
    let mut edge = |a: usize, b: usize| {
        let key = (a.min(b), a.max(b));
        *edge_index.entry(key).or_insert_with(|| {
            edges.push(vec![key.0, key.1]);
            edges.len() - 1
        })
    };
    let mut squares = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let (p00, p10, p01, p11) = (vertex(x, y), vertex(x + 1, y), vertex(x, y + 1), vertex(x + 1, y + 1));
            let a0 = edge(p00, p01);
            let a1 = edge(p10, p11);
            let b0 = edge(p00, p10);
            let b1 = edge(p01, p11);
            squares.push(vec![a0, a1, b0, b1]);
        }
    }
    let counts = vec![n * n, edges.len(), squares.len()];
    CellComplex::new(counts, vec![vec![Vec::new(); n * n], edges, squares]).expect("grid incidences are consistent")
}
