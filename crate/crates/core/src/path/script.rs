//! Move scripts.
//!
//! ```text
//! start: 0,0,h 1,0,h
//! step 1: (corner, 0, 0, fwd); (end, 2, 0, bwd)
//! step 2: (corner, 1, 0, bwd)
//! ```
//!
//! Blank lines and `#` comments are ignored. Step numbers must run 1, 2, ...

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::generator::Action;
use crate::lattice::Offset;
use crate::system::System;
use crate::text::{format_action, format_state, parse_direction, parse_state};

use super::CubePath;

pub fn format_script(system: &System, path: &CubePath) -> String {
    let kind = system.lattice().kind();
    let mut out = format!("start: {}\n", format_state(kind, path.start()));
    for (i, step) in path.steps().iter().enumerate() {
        let actions: Vec<String> = step.iter().map(|&a| format_action(system, a)).collect();
        writeln!(out, "step {}: {}", i + 1, actions.join("; ")).unwrap();
    }
    out
}

/// Parses a script; actions are not checked for admissibility.
pub fn parse_script(system: &System, text: &str) -> Result<CubePath> {
    let kind = system.lattice().kind();
    let mut start = None;
    let mut steps = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line_no = n + 1;
        let err = |column: usize, message: String| Error::Parse {
            line: line_no,
            column,
            message,
        };
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let indent = line.len() - line.trim_start().len();
        let Some((head, body)) = line.split_once(':') else {
            return Err(err(indent + 1, "expected `start:` or `step k:`".into()));
        };
        let body_col = head.len() + 2;
        match head.trim() {
            "start" => {
                if start.is_some() {
                    return Err(err(indent + 1, "duplicate start line".into()));
                }
                start = Some(parse_state(kind, body).map_err(|m| err(body_col, m))?);
            }
            h if h.starts_with("step") => {
                if start.is_none() {
                    return Err(err(indent + 1, "step before start line".into()));
                }
                let k: usize = h["step".len()..]
                    .trim()
                    .parse()
                    .map_err(|_| err(indent + 1, format!("bad step header `{h}`")))?;
                if k != steps.len() + 1 {
                    return Err(err(
                        indent + 1,
                        format!("expected step {}, found step {k}", steps.len() + 1),
                    ));
                }
                let mut step = Vec::new();
                let mut col = body_col;
                for part in body.split(';') {
                    let action = parse_action(system, part).map_err(|m| err(col, m))?;
                    step.push(action);
                    col += part.len() + 1;
                }
                steps.push(step);
            }
            other => return Err(err(indent + 1, format!("unknown line kind `{other}`"))),
        }
    }
    let start = start.ok_or_else(|| Error::Parse {
        line: text.lines().count().max(1),
        column: 1,
        message: "missing start line".into(),
    })?;
    Ok(CubePath::new(start, steps))
}

fn parse_action(system: &System, text: &str) -> std::result::Result<Action, String> {
    let inner = text
        .trim()
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| format!("expected `(genId, tx, ty, dir)`, got `{}`", text.trim()))?;
    let fields: Vec<&str> = inner.split(',').map(str::trim).collect();
    let [id, tx, ty, dir] = fields[..] else {
        return Err(format!("expected 4 fields, got {}", fields.len()));
    };
    let generator = system
        .generator_index(id)
        .ok_or_else(|| format!("unknown generator `{id}`"))?;
    let int = |s: &str| s.parse::<i32>().map_err(|_| format!("`{s}` is not an integer"));
    let direction = parse_direction(dir).ok_or_else(|| format!("direction must be fwd or bwd, got `{dir}`"))?;
    Ok(Action::new(generator, Offset::new(int(tx)?, int(ty)?), direction))
}
