//! Line-oriented text export of a complex.
//!
//! ```text
//! fvec: 4 4 1
//! dim 0
//! 0: <state>
//! dim 1
//! 0: <base state> | (genId, tx, ty, fwd) | facets 0 1
//! ```

use std::fmt::Write;

use crate::text::{format_action, format_state};

use super::{CellId, StateComplex};

impl StateComplex {
    pub fn fvec_line(&self) -> String {
        let counts: Vec<String> = self.f_vector().iter().map(usize::to_string).collect();
        format!("fvec: {}", counts.join(" "))
    }

    pub fn export(&self) -> String {
        let kind = self.system.lattice().kind();
        let mut out = String::new();
        writeln!(out, "{}", self.fvec_line()).unwrap();
        if self.truncated {
            writeln!(out, "truncated: {}", self.cap).unwrap();
        }
        for (dim, cubes) in self.cubes.iter().enumerate() {
            writeln!(out, "dim {dim}").unwrap();
            for (index, cube) in cubes.iter().enumerate() {
                write!(out, "{index}: {}", format_state(kind, cube.base())).unwrap();
                if dim > 0 {
                    let actions: Vec<String> = cube.actions().iter().map(|&a| format_action(&self.system, a)).collect();
                    let facets: Vec<String> = self
                        .facet_ids(CellId { dim, index })
                        .iter()
                        .map(usize::to_string)
                        .collect();
                    write!(out, " | {} | facets {}", actions.join(" "), facets.join(" ")).unwrap();
                }
                out.push('\n');
            }
        }
        out
    }
}
