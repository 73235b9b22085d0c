//! The planar articulated arm on the square-edge lattice, and an independent
//! word model of its state complex.
//!
//! An arm with `N` links is a monotone lattice path of `N` unit edges from the
//! origin, written as a word in `x` (step right) and `y` (step up). The
//! corner generator swaps an `xy` corner for `yx`; the end generator turns
//! the last link.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::generator::Generator;
use crate::lattice::{Cell, Lattice};
use crate::state::State;
use crate::system::{Region, System, Workspace};
use crate::topology::CellComplex;

use super::Instance;

pub const CORNER: &str = "corner";
pub const END: &str = "end";

/// Corner generator: the four edges of the unit square, bottom and right
/// occupied on one side, left and top on the other.
pub fn corner_generator() -> Generator {
    Generator::new(
        CORNER,
        [
            (Cell::h(0, 0), true, false),
            (Cell::v(1, 0), true, false),
            (Cell::v(0, 0), false, true),
            (Cell::h(0, 1), false, true),
        ],
        [Cell::h(0, 0), Cell::v(1, 0), Cell::v(0, 0), Cell::h(0, 1)],
    )
    .expect("corner generator is valid")
}

/// End generator: turns the link leaving the origin between right and up.
/// The four edges continuing from either candidate end point must be empty,
/// which pins the move to the free end of the arm.
pub fn end_generator() -> Generator {
    let mut support = vec![(Cell::h(0, 0), true, false), (Cell::v(0, 0), false, true)];
    for tip in [Cell::h(1, 0), Cell::v(1, 0), Cell::h(0, 1), Cell::v(0, 1)] {
        support.push((tip, false, false));
    }
    Generator::new(END, support, [Cell::h(0, 0), Cell::v(0, 0)]).expect("end generator is valid")
}

/// Arm with `n` links in the edge box `[0, n + 1]^2`, mounted on the
/// occupied obstacle edge below the origin. Seeded with the straight arm.
pub fn arm_system(n: usize) -> Result<Instance> {
    if n < 1 {
        return Err(Error::OutOfRange("an arm needs at least one link".into()));
    }
    let side = n as i32 + 1;
    let Region::Finite(mut cells) = Region::edge_box(0, 0, side, side) else {
        unreachable!()
    };
    let mount = Cell::v(0, -1);
    cells.insert(mount);
    let workspace = Workspace::new(
        Lattice::SquareEdge,
        Region::Finite(cells),
        BTreeMap::from([(mount, true)]),
    )?;
    let system = System::new(workspace, vec![corner_generator(), end_generator()])?;
    let seed = word_state(&vec![false; n]);
    Ok(Instance {
        system,
        seeds: vec![seed],
    })
}

/// The state of the arm spelled by `word` (`false` = x, `true` = y),
/// including the mount.
pub fn word_state(word: &[bool]) -> State {
    let (mut x, mut y) = (0, 0);
    let mut cells = vec![Cell::v(0, -1)];
    for &up in word {
        if up {
            cells.push(Cell::v(x, y));
            y += 1;
        } else {
            cells.push(Cell::h(x, y));
            x += 1;
        }
    }
    State::new(cells)
}

/// Reads the word back from a state, or `None` if the state is not an arm.
pub fn state_word(state: &State) -> Option<Vec<bool>> {
    let (mut x, mut y) = (0, 0);
    let mut word = Vec::new();
    let links = state.len().checked_sub(1)?;
    if !state.is_occupied(Cell::v(0, -1)) {
        return None;
    }
    for _ in 0..links {
        let right = state.is_occupied(Cell::h(x, y));
        let up = state.is_occupied(Cell::v(x, y));
        match (right, up) {
            (true, false) => x += 1,
            (false, true) => y += 1,
            _ => return None,
        }
        word.push(up);
    }
    Some(word)
}

/// The arm complex built directly from words.
#[derive(Clone, Debug)]
pub struct WordComplex {
    /// Vertex `i` is `words[i]`.
    pub words: Vec<Vec<bool>>,
    /// Per dimension, each cube as its sorted list of vertex ids.
    pub cubes: Vec<Vec<Vec<usize>>>,
    pub complex: CellComplex,
}

/// Moves on words of length `n`: transposition of positions `(i, i + 1)`
/// when the letters differ, or a flip of the last letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum WordMove {
    Transpose(usize),
    Flip,
}

type WordCube = (Vec<bool>, Vec<WordMove>);

impl WordMove {
    fn positions(self, n: usize) -> [usize; 2] {
        match self {
            WordMove::Transpose(i) => [i, i + 1],
            WordMove::Flip => [n - 1, n - 1],
        }
    }

    fn apply(self, word: &mut [bool]) {
        match self {
            WordMove::Transpose(i) => word.swap(i, i + 1),
            WordMove::Flip => {
                let last = word.len() - 1;
                word[last] = !word[last];
            }
        }
    }
}

pub fn arm_word_complex(n: usize) -> Result<WordComplex> {
    if !(1..=20).contains(&n) {
        return Err(Error::OutOfRange(format!("word model needs 1 <= N <= 20, got {n}")));
    }
    let words: Vec<Vec<bool>> = (0..1usize << n)
        .map(|code| (0..n).map(|i| code >> (n - 1 - i) & 1 == 1).collect())
        .collect();
    let id = |w: &[bool]| w.iter().fold(0usize, |acc, &b| acc << 1 | b as usize);

    let moves_at = |w: &[bool]| {
        let mut out: Vec<WordMove> = (0..n - 1)
            .filter(|&i| w[i] != w[i + 1])
            .map(WordMove::Transpose)
            .collect();
        out.push(WordMove::Flip);
        out
    };
    // cube key: sorted vertex ids; value: (base word, moves)
    // per dimension: sorted vertex ids -> (base word, moves)
    let mut found: Vec<BTreeMap<Vec<usize>, WordCube>> = vec![BTreeMap::new(); n + 1];
    for w in &words {
        let moves = moves_at(w);
        for mask in 0usize..1 << moves.len() {
            let chosen: Vec<WordMove> = (0..moves.len())
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| moves[i])
                .collect();
            let mut used = vec![false; n];
            let disjoint = chosen.iter().all(|m| {
                let [a, b] = m.positions(n);
                let free = !used[a] && !used[b];
                used[a] = true;
                used[b] = true;
                free
            });
            if !disjoint {
                continue;
            }
            let verts = span(w, &chosen, id);
            found[chosen.len()].entry(verts).or_insert_with(|| (w.clone(), chosen));
        }
    }
    while found.last().is_some_and(BTreeMap::is_empty) {
        found.pop();
    }

    let index: Vec<HashMap<Vec<usize>, usize>> = found
        .iter()
        .map(|level| level.keys().enumerate().map(|(i, k)| (k.clone(), i)).collect())
        .collect();
    let mut facets = Vec::with_capacity(found.len());
    for (dim, level) in found.iter().enumerate() {
        let table = level
            .values()
            .map(|(base, moves)| {
                let mut out = Vec::with_capacity(2 * dim);
                for (i, &m) in moves.iter().enumerate() {
                    let rest: Vec<WordMove> = moves
                        .iter()
                        .enumerate()
                        .filter(|&(j, _)| j != i)
                        .map(|(_, &x)| x)
                        .collect();
                    let mut across = base.clone();
                    m.apply(&mut across);
                    for start in [base, &across] {
                        out.push(index[dim - 1][&span(start, &rest, id)]);
                    }
                }
                out
            })
            .collect();
        facets.push(table);
    }
    let cubes: Vec<Vec<Vec<usize>>> = found.iter().map(|l| l.keys().cloned().collect()).collect();
    let counts = cubes.iter().map(Vec::len).collect();
    let complex = CellComplex::new(counts, facets)?;
    Ok(WordComplex { words, cubes, complex })
}

fn span(base: &[bool], moves: &[WordMove], id: impl Fn(&[bool]) -> usize) -> Vec<usize> {
    let mut out: Vec<usize> = (0usize..1 << moves.len())
        .map(|mask| {
            let mut w = base.to_vec();
            for (i, m) in moves.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    m.apply(&mut w);
                }
            }
            id(&w)
        })
        .collect();
    out.sort_unstable();
    out
}
