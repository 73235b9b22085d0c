//! Shared textual syntax for cells, states and actions.
//!
//! Cells are written `x,y` on the square and hex lattices, `x,y,h` or
//! `x,y,v` on the square-edge lattice, and as a bare vertex id on graphs.

use crate::generator::{Action, Direction};
use crate::lattice::{Cell, LatticeKind, HORIZONTAL, VERTICAL};
use crate::state::State;
use crate::system::System;

pub fn format_cell(kind: LatticeKind, cell: Cell) -> String {
    match kind {
        LatticeKind::Square | LatticeKind::HexAxial => format!("{},{}", cell.x, cell.y),
        LatticeKind::SquareEdge => {
            let o = if cell.tag == VERTICAL { 'v' } else { 'h' };
            format!("{},{},{o}", cell.x, cell.y)
        }
        LatticeKind::FiniteGraph => cell.x.to_string(),
    }
}

pub fn parse_cell(kind: LatticeKind, token: &str) -> Result<Cell, String> {
    let parts: Vec<&str> = token.split(',').map(str::trim).collect();
    let int = |s: &str| {
        s.parse::<i32>()
            .map_err(|_| format!("`{s}` is not an integer in cell `{token}`"))
    };
    match (kind, parts.as_slice()) {
        (LatticeKind::Square | LatticeKind::HexAxial, [x, y]) => Ok(Cell::new(int(x)?, int(y)?)),
        (LatticeKind::SquareEdge, [x, y, o]) => {
            let tag = match *o {
                "h" => HORIZONTAL,
                "v" => VERTICAL,
                _ => return Err(format!("edge orientation must be `h` or `v`, got `{o}`")),
            };
            Ok(Cell {
                x: int(x)?,
                y: int(y)?,
                tag,
            })
        }
        (LatticeKind::FiniteGraph, [v]) => {
            let id = int(v)?;
            if id < 0 {
                return Err(format!("vertex id `{v}` is negative"));
            }
            Ok(Cell::vertex(id as u32))
        }
        _ => Err(format!("malformed {kind} cell `{token}`")),
    }
}

pub fn format_state(kind: LatticeKind, state: &State) -> String {
    state
        .cells()
        .map(|c| format_cell(kind, c))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Parses whitespace-separated cells; `#` starts a comment.
pub fn parse_state(kind: LatticeKind, text: &str) -> Result<State, String> {
    let mut cells = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("");
        for token in line.split_whitespace() {
            cells.push(parse_cell(kind, token)?);
        }
    }
    Ok(State::new(cells))
}

pub fn parse_direction(token: &str) -> Option<Direction> {
    match token {
        "fwd" => Some(Direction::Forward),
        "bwd" => Some(Direction::Backward),
        _ => None,
    }
}

/// `(genId, tx, ty, dir)`.
pub fn format_action(system: &System, action: Action) -> String {
    format!(
        "({}, {}, {}, {})",
        system.generator(action.placement.generator).id(),
        action.placement.offset.dx,
        action.placement.offset.dy,
        action.direction.short_name()
    )
}
