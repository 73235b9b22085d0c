use std::collections::{BTreeMap, BTreeSet};

use cubeplan::catalogue::{agv, arm, sliding};
use cubeplan::path::{
    common_edge, commute_sub, format_script, oracle_shortest, parse_script, random_edge_path, PathDefect,
};
use cubeplan::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn word(s: &str) -> State {
    arm::word_state(&s.chars().map(|c| c == 'y').collect::<Vec<_>>())
}

/// The admissible action at `from` that leads to `to`.
fn move_to(sys: &System, from: &State, to: &State) -> Action {
    sys.admissible_actions(from)
        .into_iter()
        .find(|&a| &sys.apply(from, a).unwrap() == to)
        .expect("states are adjacent")
}

fn grid_moves(m: usize, n: usize, walk: &[(usize, usize)]) -> (System, State, Vec<Action>) {
    let inst = agv::flat_grid(m, n).unwrap();
    let sys = inst.system;
    let mut s = agv::grid_state(m, walk[0].0, walk[0].1);
    let start = s.clone();
    let mut moves = Vec::new();
    for &(i, j) in &walk[1..] {
        let t = agv::grid_state(m, i, j);
        moves.push(move_to(&sys, &s, &t));
        s = t;
    }
    (sys, start, moves)
}

fn l_path(m: usize, n: usize) -> (System, State, Vec<Action>) {
    let walk: Vec<(usize, usize)> = (0..=m).map(|i| (i, 0)).chain((1..=n).map(|j| (m, j))).collect();
    grid_moves(m, n, &walk)
}

#[test]
fn edge_paths() {
    let (sys, start, moves) = grid_moves(2, 2, &[(0, 0), (1, 0), (1, 1)]);
    assert!(CubePath::from_edge_path(&sys, start.clone(), &[]).unwrap().is_empty());
    let p = CubePath::from_edge_path(&sys, start.clone(), &moves).unwrap();
    assert_eq!(p.len(), 2);
    assert!(sys.commute(&moves));

    let back = CubePath::from_edge_path(&sys, start.clone(), &[moves[0], moves[0].reverse()]).unwrap();
    assert_eq!(back.len(), 2);
    assert_eq!(back.end(&sys), start);

    let err = CubePath::from_edge_path(&sys, start, &[moves[0], moves[0]]).unwrap_err();
    assert_eq!(err, Error::InadmissibleMove { index: 1 });
}

#[test]
fn commute_sub_examples() {
    // disjoint supports: the whole next step moves back
    let (sys, _, moves) = grid_moves(2, 2, &[(0, 0), (1, 0), (1, 1)]);
    assert_eq!(commute_sub(&sys, &moves[..1], &moves[1..]), vec![moves[1]]);

    // a row slide and a column slide through the same cell
    let wall: BTreeMap<Cell, bool> = [(Cell::new(-1, -1), true)].into();
    let sq = sliding::sliding_squares_system(0, Region::rect(-4, -4, 4, 4), wall).unwrap();
    let row = sq
        .catalogue()
        .iter()
        .position(|g| g.id().starts_with("slide-x0"))
        .unwrap();
    let col = sq
        .catalogue()
        .iter()
        .position(|g| g.id().starts_with("slide-y0"))
        .unwrap();
    let a = Action::new(row, Offset::new(-1, 0), Direction::Forward);
    let b = Action::new(col, Offset::new(0, -1), Direction::Forward);
    assert!(commute_sub(&sq, &[a], &[b]).is_empty());

    // arm N=5 at xyyxx: transpose(1,2), then flip(5) and transpose(2,3)
    let inst = arm::arm_system(5).unwrap();
    let sys = &inst.system;
    let t12 = move_to(sys, &word("xyyxx"), &word("yxyxx"));
    let flip5 = move_to(sys, &word("yxyxx"), &word("yxyxy"));
    let t23 = move_to(sys, &word("yxyxx"), &word("yyxxx"));
    assert_eq!(commute_sub(sys, &[t12], &[flip5, t23]), vec![flip5]);
}

#[test]
fn commute_sub_matches_the_star() {
    // An edge of the next step lies in the star of the current cube iff
    // some cube has both as faces.
    let inst = arm::arm_system(5).unwrap();
    let sys = &inst.system;
    let c = StateComplex::build(sys, &inst.seeds, BuildOptions::default()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut checked = 0;
    for _ in 0..200 {
        let v = c.vertex(rand::Rng::random_range(&mut rng, 0..c.f_vector()[0])).clone();
        let walk = random_edge_path(sys, &v, 12, &mut rng);
        let (normal, _) = walk.time_geodesic(sys, OptimizeMode::Normalize).unwrap();
        let steps = walk.steps();
        let verts = walk.vertices(sys);
        for i in 0..steps.len().saturating_sub(1) {
            let cube = Cube::at(sys, &verts[i], &steps[i]).unwrap();
            let star: BTreeSet<_> = c.star(&cube).unwrap().into_iter().collect();
            let mut expected = Vec::new();
            for &b in &steps[i + 1] {
                let edge = Cube::at(sys, &verts[i + 1], &[b]).unwrap();
                if c.star(&edge).unwrap().iter().any(|d| star.contains(d)) {
                    expected.push(b);
                }
            }
            // a step that merely undoes the previous one shares its edge
            let undo = steps[i]
                .iter()
                .any(|a| steps[i + 1].iter().any(|b| b.placement == a.placement));
            if !undo {
                assert_eq!(commute_sub(sys, &steps[i], &steps[i + 1]), expected);
                checked += 1;
            }
        }
        assert!(normal.is_normal(sys));
    }
    assert!(checked > 100);
}

#[test]
fn common_edge_examples() {
    let (_, _, moves) = grid_moves(3, 3, &[(0, 0), (1, 0), (1, 1), (2, 1)]);
    let (a, b, c) = (moves[0], moves[1], moves[2]);
    assert_eq!(common_edge(&[a], &[a.reverse()]), (vec![], vec![]));
    assert_eq!(common_edge(&[a], &[b]), (vec![a], vec![b]));
    // a and c move the same token on different edges, so they are unrelated
    assert_ne!(a.placement, c.placement);
    assert_eq!(common_edge(&[a, b], &[a.reverse(), c]), (vec![b], vec![c]));
}

#[test]
fn shrink_examples() {
    let (sys, start, moves) = grid_moves(2, 2, &[(0, 0), (1, 0), (1, 1)]);
    let p = CubePath::from_edge_path(&sys, start.clone(), &moves).unwrap();
    let (q, _) = p.shrink(&sys).unwrap();
    assert_eq!(
        q.steps(),
        &[{
            let mut both = moves.clone();
            both.sort();
            both
        }]
    );
    assert!(!p.is_normal(&sys));
    assert!(q.is_normal(&sys));
    assert_eq!(q.shrink(&sys).unwrap().0, q);

    let back = CubePath::from_edge_path(&sys, start.clone(), &[moves[0], moves[0].reverse()]).unwrap();
    let (gone, _) = back.shrink(&sys).unwrap();
    assert!(gone.is_empty());
    assert_eq!(gone.start(), &start);
}

#[test]
fn l_path_becomes_diagonal() {
    for (m, n) in [(3, 3), (4, 2), (1, 5), (6, 6)] {
        let (sys, start, moves) = l_path(m, n);
        let p = CubePath::from_edge_path(&sys, start, &moves).unwrap();
        let (g, stats) = p.time_geodesic(&sys, OptimizeMode::StopOnLength).unwrap();
        assert_eq!(g.len(), m.max(n));
        assert_eq!(g.end(&sys), p.end(&sys));
        assert!(stats.calls >= 1);
    }
    let (sys, start, _) = l_path(2, 2);
    let empty = CubePath::empty(start);
    assert_eq!(empty.time_geodesic(&sys, OptimizeMode::Normalize).unwrap().0, empty);
}

#[test]
fn oracle_on_the_grid() {
    let inst = agv::flat_grid(4, 2).unwrap();
    let c = StateComplex::build(&inst.system, &inst.seeds, BuildOptions::default()).unwrap();
    let corner = agv::grid_state(4, 0, 0);
    assert_eq!(oracle_shortest(&c, &corner, &corner), Ok(0));
    assert_eq!(oracle_shortest(&c, &corner, &agv::grid_state(4, 1, 0)), Ok(1));
    assert_eq!(oracle_shortest(&c, &corner, &agv::grid_state(4, 4, 2)), Ok(4));
    assert_eq!(oracle_shortest(&c, &corner, &State::empty()), Err(Error::UnknownVertex));
}

#[test]
fn validate_reports_the_first_defect() {
    let (sys, start, moves) = grid_moves(2, 2, &[(0, 0), (1, 0), (2, 0)]);
    let p = CubePath::from_edge_path(&sys, start.clone(), &moves).unwrap();
    assert!(p.validate(&sys).ok());

    // two moves of the same token do not commute
    let bad = CubePath::new(start.clone(), vec![vec![moves[0], moves[1]]]);
    let report = bad.validate(&sys);
    assert_eq!(report.violation.map(|v| v.0), Some(0));
    assert!(bad.check(&sys).is_err());

    let inadmissible = CubePath::new(start.clone(), vec![vec![moves[0]], vec![moves[0]]]);
    assert_eq!(
        inadmissible.validate(&sys).violation,
        Some((1, PathDefect::NotAdmissible))
    );

    let empty_step = CubePath::new(start, vec![vec![]]);
    assert_eq!(empty_step.validate(&sys).violation, Some((0, PathDefect::EmptyStep)));
}

#[test]
fn normal_forms_are_unique_on_contractible_complexes() {
    let inst = arm::arm_system(4).unwrap();
    let sys = &inst.system;
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let start = inst.seeds[0].clone();
    let mut by_end: BTreeMap<State, CubePath> = BTreeMap::new();
    let mut compared = 0;
    for _ in 0..300 {
        let walk = random_edge_path(sys, &start, 14, &mut rng);
        let (normal, _) = walk.time_geodesic(sys, OptimizeMode::Normalize).unwrap();
        assert!(normal.is_normal(sys));
        assert!(normal.validate(sys).ok());
        match by_end.get(&walk.end(sys)) {
            Some(seen) => {
                assert_eq!(seen, &normal);
                compared += 1;
            }
            None => {
                by_end.insert(walk.end(sys), normal);
            }
        }
    }
    assert!(compared > 100);
}

#[test]
fn potential_decreases_on_every_change() {
    let inst = arm::arm_system(5).unwrap();
    let sys = &inst.system;
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..100 {
        let mut p = random_edge_path(sys, &inst.seeds[0], 25, &mut rng);
        let end = p.end(sys);
        loop {
            let (q, _) = p.shrink(sys).unwrap();
            if q == p {
                break;
            }
            assert!(q.potential() < p.potential());
            assert!(q.len() <= p.len());
            assert_eq!(q.end(sys), end);
            p = q;
        }
    }
}

#[test]
fn scripts_round_trip() {
    let inst = arm::arm_system(3).unwrap();
    let text = "start: 0,-1,v 0,0,h 1,0,h 2,0,h\nstep 1: (end, 2, 0, fwd)\nstep 2: (corner, 1, 0, fwd)\n";
    let p = parse_script(&inst.system, text).unwrap();
    assert!(p.validate(&inst.system).ok());
    assert_eq!(format_script(&inst.system, &p), text);
    assert_eq!(arm::state_word(&p.end(&inst.system)), Some(vec![false, true, false]));

    let bad = "start: 0,-1,v 0,0,h\nstep 2: (end, 1, 0, fwd)\n";
    assert!(matches!(
        parse_script(&inst.system, bad),
        Err(Error::Parse { line: 2, .. })
    ));
}
