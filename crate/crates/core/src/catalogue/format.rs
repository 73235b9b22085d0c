//! The system file format. The grammar is documented in
//! `docs/system-format.md`.
//!
//! ```text
//! lattice square
//! workspace box 0 0 3 0
//! obstacle 3,0 empty
//! generator step
//!   0,0 1 0 trace
//!   1,0 0 1 trace
//! end
//! seed 0,0
//! ```

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::generator::Generator;
use crate::lattice::{Cell, Graph, Lattice, LatticeKind};
use crate::state::State;
use crate::system::{GlobalConstraint, Region, System, Workspace};
use crate::text::{format_cell, parse_cell};

use super::Instance;

const CELLS_PER_LINE: usize = 12;

pub fn serialize(inst: &Instance) -> String {
    let sys = &inst.system;
    let ws = sys.workspace();
    let kind = sys.lattice().kind();
    let cell = |c: Cell| format_cell(kind, c);
    let mut out = String::new();
    writeln!(out, "lattice {kind}").unwrap();
    if let Some(g) = sys.lattice().finite_graph() {
        writeln!(out, "vertices {}", g.vertex_count()).unwrap();
        for chunk in g.edges().chunks(CELLS_PER_LINE) {
            let edges: Vec<String> = chunk.iter().map(|(a, b)| format!("{a}-{b}")).collect();
            writeln!(out, "edges {}", edges.join(" ")).unwrap();
        }
    }
    let (head, cells) = match ws.region() {
        Region::Finite(cells) => ("workspace cells", cells),
        Region::Cofinite(excluded) => ("workspace unbounded", excluded),
    };
    if cells.is_empty() {
        writeln!(out, "{head}").unwrap();
    }
    let cells: Vec<Cell> = cells.iter().copied().collect();
    for chunk in cells.chunks(CELLS_PER_LINE) {
        let list: Vec<String> = chunk.iter().map(|&c| cell(c)).collect();
        writeln!(out, "{head} {}", list.join(" ")).unwrap();
    }
    for (&c, &occupied) in ws.obstacles() {
        writeln!(
            out,
            "obstacle {} {}",
            cell(c),
            if occupied { "occupied" } else { "empty" }
        )
        .unwrap();
    }
    if let Some(c) = sys.constraint() {
        writeln!(out, "constraint {}", c.name()).unwrap();
    }
    for g in sys.catalogue() {
        writeln!(out, "generator {}", g.id()).unwrap();
        let (u0, u1) = (g.source(crate::Direction::Forward), g.target(crate::Direction::Forward));
        for (i, &c) in g.support().iter().enumerate() {
            let trace = if g.in_trace()[i] { " trace" } else { "" };
            writeln!(out, "  {} {} {}{trace}", cell(c), u0[i] as u8, u1[i] as u8).unwrap();
        }
        writeln!(out, "end").unwrap();
    }
    for seed in &inst.seeds {
        let list: Vec<String> = seed.cells().map(cell).collect();
        if list.is_empty() {
            writeln!(out, "seed").unwrap();
        } else {
            writeln!(out, "seed {}", list.join(" ")).unwrap();
        }
    }
    out
}

pub fn serialize_system(system: &System) -> String {
    serialize(&Instance {
        system: system.clone(),
        seeds: Vec::new(),
    })
}

pub fn parse_system(text: &str) -> Result<System> {
    parse(text).map(|inst| inst.system)
}

struct Pending {
    id: String,
    line: usize,
    support: Vec<(Cell, bool, bool)>,
    trace: Vec<Cell>,
}

pub fn parse(text: &str) -> Result<Instance> {
    let mut kind: Option<LatticeKind> = None;
    let mut vertices: Option<u32> = None;
    let mut edges: Vec<(u32, u32)> = Vec::new();
    let mut region: Option<Region> = None;
    let mut obstacles: BTreeMap<Cell, bool> = BTreeMap::new();
    let mut constraint = None;
    let mut generators: Vec<(usize, Generator)> = Vec::new();
    let mut pending: Option<Pending> = None;
    let mut seeds: Vec<(usize, State)> = Vec::new();

    for (n, raw) in text.lines().enumerate() {
        let line_no = n + 1;
        let content = raw.split('#').next().unwrap_or("");
        // (column, token) pairs, 1-based columns
        let tokens: Vec<(usize, &str)> = tokenize(content);
        let Some(&(col0, keyword)) = tokens.first() else {
            continue;
        };
        let err = |column: usize, message: String| Error::Parse {
            line: line_no,
            column,
            message,
        };
        let args = &tokens[1..];
        let need_kind = || kind.ok_or_else(|| err(col0, "`lattice` must come first".into()));
        let cells = |kind: LatticeKind, args: &[(usize, &str)]| -> Result<Vec<Cell>> {
            args.iter()
                .map(|&(c, t)| parse_cell(kind, t).map_err(|m| err(c, m)))
                .collect()
        };

        if let Some(p) = pending.as_mut() {
            if keyword == "end" {
                let p = pending.take().unwrap();
                let g = Generator::new(p.id.clone(), p.support, p.trace).map_err(|e| Error::Parse {
                    line: p.line,
                    column: 1,
                    message: e.to_string(),
                })?;
                generators.push((p.line, g));
                continue;
            }
            let kind = need_kind()?;
            if keyword == "trace" {
                p.trace.extend(cells(kind, args)?);
                continue;
            }
            let cell = parse_cell(kind, keyword).map_err(|m| err(col0, m))?;
            let bit = |i: usize| -> Result<bool> {
                match args.get(i) {
                    Some(&(_, "0")) => Ok(false),
                    Some(&(_, "1")) => Ok(true),
                    Some(&(c, t)) => Err(err(c, format!("expected 0 or 1, got `{t}`"))),
                    None => Err(err(col0, "expected `<cell> <u0> <u1> [trace]`".into())),
                }
            };
            p.support.push((cell, bit(0)?, bit(1)?));
            match args.get(2) {
                None => {}
                Some(&(_, "trace")) => p.trace.push(cell),
                Some(&(c, t)) => return Err(err(c, format!("expected `trace` or end of line, got `{t}`"))),
            }
            if let Some(&(c, _)) = args.get(3) {
                return Err(err(c, "trailing tokens".into()));
            }
            continue;
        }

        match keyword {
            "lattice" => {
                if kind.is_some() {
                    return Err(err(col0, "duplicate `lattice`".into()));
                }
                let &[(c, name)] = args else {
                    return Err(err(col0, "expected `lattice <kind>`".into()));
                };
                kind = Some(LatticeKind::from_name(name).ok_or_else(|| err(c, format!("unknown lattice `{name}`")))?);
            }
            "vertices" => {
                if need_kind()? != LatticeKind::FiniteGraph {
                    return Err(err(col0, "`vertices` needs `lattice graph`".into()));
                }
                let &[(c, count)] = args else {
                    return Err(err(col0, "expected `vertices <count>`".into()));
                };
                vertices = Some(
                    count
                        .parse()
                        .map_err(|_| err(c, format!("bad vertex count `{count}`")))?,
                );
            }
            "edges" => {
                if vertices.is_none() {
                    return Err(err(col0, "`edges` must follow `vertices`".into()));
                }
                for &(c, t) in args {
                    let pair = t
                        .split_once('-')
                        .and_then(|(a, b)| Some((a.parse().ok()?, b.parse().ok()?)))
                        .ok_or_else(|| err(c, format!("expected `a-b`, got `{t}`")))?;
                    edges.push(pair);
                }
            }
            "workspace" => {
                let kind = need_kind()?;
                let Some(&(c, shape)) = args.first() else {
                    return Err(err(col0, "expected a workspace shape".into()));
                };
                let rest = &args[1..];
                match shape {
                    "cells" => {
                        let list = cells(kind, rest)?;
                        match region.get_or_insert_with(|| Region::Finite(BTreeSet::new())) {
                            Region::Finite(set) => set.extend(list),
                            Region::Cofinite(_) => return Err(err(c, "workspace already unbounded".into())),
                        }
                    }
                    "unbounded" => {
                        let list = cells(kind, rest)?;
                        match region.get_or_insert_with(|| Region::Cofinite(BTreeSet::new())) {
                            Region::Cofinite(set) => set.extend(list),
                            Region::Finite(_) => return Err(err(c, "workspace already finite".into())),
                        }
                    }
                    "box" | "edge-box" => {
                        if region.is_some() {
                            return Err(err(c, "workspace already given".into()));
                        }
                        let nums: Vec<i32> = rest
                            .iter()
                            .map(|&(c, t)| t.parse().map_err(|_| err(c, format!("`{t}` is not an integer"))))
                            .collect::<Result<_>>()?;
                        let [x0, y0, x1, y1] = nums[..] else {
                            return Err(err(c, format!("expected `{shape} x0 y0 x1 y1`")));
                        };
                        region = Some(match (shape, kind) {
                            ("box", LatticeKind::Square | LatticeKind::HexAxial) => Region::rect(x0, y0, x1, y1),
                            ("edge-box", LatticeKind::SquareEdge) => Region::edge_box(x0, y0, x1, y1),
                            _ => return Err(err(c, format!("`{shape}` does not fit lattice {kind}"))),
                        });
                    }
                    other => return Err(err(c, format!("unknown workspace shape `{other}`"))),
                }
            }
            "obstacle" => {
                let kind = need_kind()?;
                let &[(c, t), (bc, occ)] = args else {
                    return Err(err(col0, "expected `obstacle <cell> occupied|empty`".into()));
                };
                let cell = parse_cell(kind, t).map_err(|m| err(c, m))?;
                let occupied = match occ {
                    "occupied" => true,
                    "empty" => false,
                    _ => return Err(err(bc, format!("expected `occupied` or `empty`, got `{occ}`"))),
                };
                if obstacles.insert(cell, occupied).is_some() {
                    return Err(err(c, format!("obstacle {t} listed twice")));
                }
            }
            "constraint" => {
                let &[(c, name)] = args else {
                    return Err(err(col0, "expected `constraint <name>`".into()));
                };
                constraint = Some(
                    GlobalConstraint::from_name(name).ok_or_else(|| err(c, format!("unknown constraint `{name}`")))?,
                );
            }
            "generator" => {
                need_kind()?;
                let &[(_, id)] = args else {
                    return Err(err(col0, "expected `generator <id>`".into()));
                };
                pending = Some(Pending {
                    id: id.to_string(),
                    line: line_no,
                    support: Vec::new(),
                    trace: Vec::new(),
                });
            }
            "seed" => {
                let kind = need_kind()?;
                seeds.push((line_no, State::new(cells(kind, args)?)));
            }
            other => return Err(err(col0, format!("unknown keyword `{other}`"))),
        }
    }

    let last = text.lines().count().max(1);
    let at_end = |message: &str| Error::Parse {
        line: last,
        column: 1,
        message: message.into(),
    };
    if let Some(p) = pending {
        return Err(Error::Parse {
            line: p.line,
            column: 1,
            message: format!("generator `{}` is missing `end`", p.id),
        });
    }
    let kind = kind.ok_or_else(|| at_end("missing `lattice`"))?;
    let lattice = match kind {
        LatticeKind::Square => Lattice::Square,
        LatticeKind::HexAxial => Lattice::HexAxial,
        LatticeKind::SquareEdge => Lattice::SquareEdge,
        LatticeKind::FiniteGraph => {
            let n = vertices.ok_or_else(|| at_end("graph lattice needs `vertices`"))?;
            Lattice::graph(Graph::new(n, edges).map_err(|e| at_end(&e.to_string()))?)
        }
    };
    let region = region.ok_or_else(|| at_end("missing `workspace`"))?;
    let workspace = Workspace::new(lattice, region, obstacles).map_err(|e| at_end(&e.to_string()))?;
    let line_of: Vec<usize> = generators.iter().map(|g| g.0).collect();
    let system = System::new(workspace, generators.into_iter().map(|g| g.1).collect()).map_err(|e| {
        let line = match &e {
            Error::InvalidGenerator { id, .. } => text
                .lines()
                .position(|l| l.split_whitespace().eq(["generator", id.as_str()]))
                .map(|i| i + 1),
            _ => None,
        };
        Error::Parse {
            line: line.or(line_of.last().copied()).unwrap_or(last),
            column: 1,
            message: e.to_string(),
        }
    })?;
    let system = system.with_constraint(constraint);
    for (line, seed) in &seeds {
        system.check_state(seed).map_err(|e| Error::Parse {
            line: *line,
            column: 1,
            message: e.to_string(),
        })?;
    }
    Ok(Instance {
        system,
        seeds: seeds.into_iter().map(|s| s.1).collect(),
    })
}

fn tokenize(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalogue::{agv, arm, hex};

    #[test]
    fn builtins_round_trip() {
        let hex = hex::line_instance(hex::Variant::Changing, 3).unwrap();
        for inst in [
            arm::arm_system(3).unwrap(),
            agv::graph_agv_system(Graph::complete(5), 2).unwrap(),
            hex,
        ] {
            let text = serialize(&inst);
            assert_eq!(parse(&text).unwrap(), inst, "{text}");
        }
    }

    #[test]
    fn diagnostics_carry_line_and_id() {
        let bad_trace = "lattice square\nworkspace box 0 0 2 0\ngenerator g\n  0,0 1 0 trace\n  1,0 0 1\nend\n";
        let e = parse(bad_trace).unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }), "{e}");
        assert!(e.to_string().contains("`g`") && e.to_string().contains("agree off the trace"));

        let degenerate = "lattice square\nworkspace box 0 0 2 0\ngenerator same\n  0,0 1 1 trace\nend\n";
        assert!(parse(degenerate).unwrap_err().to_string().contains("nondegenerate"));

        let e = parse("lattice square\nworkspace box 0 0 x 0\n").unwrap_err();
        assert_eq!(
            e,
            Error::Parse {
                line: 2,
                column: 19,
                message: "`x` is not an integer".into()
            }
        );
    }

    #[test]
    fn trace_outside_support_is_rejected() {
        let text = "lattice square\nworkspace box 0 0 1 0\ngenerator t\n  0,0 1 0 trace\n  trace 5,5\nend\n";
        let e = parse(text).unwrap_err();
        assert!(
            e.to_string().contains("`t`") && e.to_string().contains("not in the support"),
            "{e}"
        );
    }
}
