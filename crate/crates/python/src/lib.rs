//! Python bindings: systems, complexes and cube paths.
//!
//! States and actions cross the boundary in their text forms, the same ones
//! the system files and move scripts use.

use cubeplan::catalogue::{self, format, BuiltinOptions, Instance};
use cubeplan::complex::ViolationKind;
use cubeplan::path::{format_script, parse_script, random_edge_path};
use cubeplan::text::{format_action, format_state, parse_state};
use cubeplan::{shape, BuildOptions, CubePath, GlobalConstraint, Offset, OptimizeMode, StateComplex, System};
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

create_exception!(
    pycubeplan,
    CubeplanError,
    PyValueError,
    "Domain error raised by cubeplan."
);

fn err(e: cubeplan::Error) -> PyErr {
    CubeplanError::new_err(format!("{}: {e}", e.kind()))
}

fn options(cap: Option<usize>) -> BuildOptions {
    cap.map_or_else(BuildOptions::default, BuildOptions::with_cap)
}

/// A robot system with its seed states.
#[pyclass(name = "System", module = "pycubeplan", frozen)]
struct PySystem {
    inst: Instance,
}

#[pymethods]
impl PySystem {
    /// A named built-in system such as `agv-k5`, `arm` or `hex`.
    #[staticmethod]
    #[pyo3(signature = (name, n = 2, variant = None, constraint = None, p = 1, q = 1))]
    fn builtin(
        name: &str,
        n: usize,
        variant: Option<String>,
        constraint: Option<&str>,
        p: usize,
        q: usize,
    ) -> PyResult<Self> {
        let constraint = match constraint {
            None => None,
            Some(c) => Some(
                GlobalConstraint::from_name(c)
                    .ok_or_else(|| PyValueError::new_err(format!("unknown constraint `{c}`")))?,
            ),
        };
        let opts = BuiltinOptions {
            n,
            variant,
            constraint,
            p,
            q,
        };
        let inst = catalogue::builtin(name, &opts).map_err(err)?;
        Ok(PySystem { inst })
    }

    /// Parses a system file.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(PySystem {
            inst: format::parse(text).map_err(err)?,
        })
    }

    fn serialize(&self) -> String {
        format::serialize(&self.inst)
    }

    fn seeds(&self) -> Vec<String> {
        let kind = self.inst.system.lattice().kind();
        self.inst.seeds.iter().map(|s| format_state(kind, s)).collect()
    }

    /// A copy with the seed states replaced.
    fn with_seeds(&self, seeds: Vec<String>) -> PyResult<Self> {
        let kind = self.inst.system.lattice().kind();
        let seeds = seeds
            .iter()
            .map(|s| parse_state(kind, s).map_err(PyValueError::new_err))
            .collect::<PyResult<_>>()?;
        Ok(PySystem {
            inst: Instance {
                system: self.inst.system.clone(),
                seeds,
            },
        })
    }

    /// Admissible actions at a state, as text.
    fn actions(&self, state: &str) -> PyResult<Vec<String>> {
        let sys = &self.inst.system;
        let s = parse_state(sys.lattice().kind(), state).map_err(PyValueError::new_err)?;
        sys.check_state(&s).map_err(err)?;
        Ok(sys
            .admissible_actions(&s)
            .into_iter()
            .map(|a| format_action(sys, a))
            .collect())
    }

    #[pyo3(signature = (cap = None))]
    fn build(&self, cap: Option<usize>) -> PyResult<PyComplex> {
        let complex = StateComplex::build(&self.inst.system, &self.inst.seeds, options(cap)).map_err(err)?;
        Ok(PyComplex { complex })
    }

    /// The complex of shapes up to translation.
    #[pyo3(signature = (cap = None))]
    fn shape_complex(&self, cap: Option<usize>) -> PyResult<PyComplex> {
        let complex = shape::build_shape_complex(&self.inst.system, &self.inst.seeds, options(cap)).map_err(err)?;
        Ok(PyComplex { complex })
    }

    fn parse_script(&self, text: &str) -> PyResult<PyPath> {
        let path = parse_script(&self.inst.system, text).map_err(err)?;
        Ok(PyPath {
            system: self.inst.system.clone(),
            path,
        })
    }

    /// A seeded random edge path from the first seed state.
    #[pyo3(signature = (length, rng_seed = 0, shape = false))]
    fn random_path(&self, length: usize, rng_seed: u64, shape: bool) -> PyResult<PyPath> {
        let start = self
            .inst
            .seeds
            .first()
            .ok_or_else(|| PyValueError::new_err("the system has no seed state"))?;
        let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
        if shape {
            let open = shape::homogeneous(&self.inst.system);
            let path = shape::random_shape_path(&open, start, length, &mut rng).map_err(err)?;
            return Ok(PyPath { system: open, path });
        }
        self.inst.system.check_state(start).map_err(err)?;
        let path = random_edge_path(&self.inst.system, start, length, &mut rng);
        Ok(PyPath {
            system: self.inst.system.clone(),
            path,
        })
    }

    /// Places a shape path with its start translated by `base`.
    fn lift(&self, shape_path: &PyPath, base: (i32, i32)) -> PyResult<PyPath> {
        let sys = &self.inst.system;
        let placed = shape::lift_path(sys, &shape_path.path, Offset::new(base.0, base.1))
            .map_err(|f| CubeplanError::new_err(format!("LiftFailure: {f}")))?;
        Ok(PyPath {
            system: sys.clone(),
            path: placed,
        })
    }
}

/// A built state complex.
#[pyclass(name = "Complex", module = "pycubeplan", frozen)]
struct PyComplex {
    complex: StateComplex,
}

#[pymethods]
impl PyComplex {
    fn f_vector(&self) -> Vec<usize> {
        self.complex.f_vector()
    }

    fn is_truncated(&self) -> bool {
        self.complex.is_truncated()
    }

    fn vertices(&self) -> Vec<String> {
        let kind = self.complex.system().lattice().kind();
        self.complex.vertices().map(|s| format_state(kind, s)).collect()
    }

    fn euler_characteristic(&self) -> PyResult<i64> {
        Ok(self.complex.topology().map_err(err)?.euler_characteristic())
    }

    fn betti(&self) -> PyResult<Vec<usize>> {
        self.complex.topology().map_err(err)?.betti_mod2().map_err(err)
    }

    fn is_closed_surface(&self) -> PyResult<bool> {
        Ok(self.complex.topology().map_err(err)?.is_closed_surface())
    }

    fn is_orientable_surface(&self) -> PyResult<bool> {
        self.complex
            .topology()
            .map_err(err)?
            .is_orientable_surface()
            .map_err(err)
    }

    /// Cell counts left after greedy free-face collapse.
    fn collapse(&self) -> PyResult<Vec<usize>> {
        Ok(self.complex.topology().map_err(err)?.greedy_collapse())
    }

    /// Link-condition violations as `(state, actions, cube count)`; an
    /// empty list means the complex is non-positively curved.
    fn check_npc(&self) -> PyResult<Vec<(String, Vec<String>, usize)>> {
        let report = self.complex.check_link_condition().map_err(err)?;
        let sys = self.complex.system();
        let kind = sys.lattice().kind();
        Ok(report
            .violations
            .iter()
            .map(|v| {
                let count = match v.kind {
                    ViolationKind::Missing => 0,
                    ViolationKind::Duplicate(k) => k,
                };
                let actions = v.actions.iter().map(|&a| format_action(sys, a)).collect();
                (format_state(kind, self.complex.vertex(v.vertex)), actions, count)
            })
            .collect())
    }

    fn export(&self) -> String {
        self.complex.export()
    }
}

/// A cube path in a fixed system.
#[pyclass(name = "CubePath", module = "pycubeplan", frozen)]
struct PyPath {
    system: System,
    path: CubePath,
}

impl PyPath {
    fn shortened(&self, mode: OptimizeMode) -> PyResult<PyPath> {
        self.path.check(&self.system).map_err(err)?;
        let (path, _) = self.path.time_geodesic(&self.system, mode).map_err(err)?;
        Ok(PyPath {
            system: self.system.clone(),
            path,
        })
    }
}

#[pymethods]
impl PyPath {
    fn __len__(&self) -> usize {
        self.path.len()
    }

    fn __eq__(&self, other: &PyPath) -> bool {
        self.system == other.system && self.path == other.path
    }

    fn __repr__(&self) -> String {
        format!("CubePath(len={}, moves={})", self.path.len(), self.path.move_count())
    }

    fn script(&self) -> String {
        format_script(&self.system, &self.path)
    }

    fn start(&self) -> String {
        format_state(self.system.lattice().kind(), self.path.start())
    }

    fn end(&self) -> String {
        format_state(self.system.lattice().kind(), &self.path.end(&self.system))
    }

    fn potential(&self) -> usize {
        self.path.potential()
    }

    /// True when every step is admissible and commuting.
    fn is_valid(&self) -> bool {
        self.path.check(&self.system).is_ok()
    }

    fn is_normal(&self) -> bool {
        self.path.is_normal(&self.system)
    }

    /// Shortens until the length stops decreasing.
    fn optimize(&self) -> PyResult<PyPath> {
        self.shortened(OptimizeMode::StopOnLength)
    }

    /// Shortens to the normal form.
    fn normalize(&self) -> PyResult<PyPath> {
        self.shortened(OptimizeMode::Normalize)
    }
}

#[pymodule]
fn pycubeplan(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySystem>()?;
    m.add_class::<PyComplex>()?;
    m.add_class::<PyPath>()?;
    m.add("CubeplanError", m.py().get_type::<CubeplanError>())?;
    m.add("BUILTIN_NAMES", catalogue::BUILTIN_NAMES.to_vec())?;
    Ok(())
}
