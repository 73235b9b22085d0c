//! Acceptance criteria 1 to 10. Each test prints one `criterion N: PASS`
//! or `criterion N: FAIL` line; run with `--nocapture` to see them.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::time::{Duration, Instant};

use cubeplan::catalogue::{self, agv, arm, format, hex, sliding};
use cubeplan::complex::CellId;
use cubeplan::path::{format_script, oracle_shortest, parse_script, random_edge_path};
use cubeplan::shape::{self, LiftReason};
use cubeplan::*;
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const PIVOT_TRIPLE: &str = include_str!("../../../fixtures/fig11.state");

/// Runs one criterion, prints its line and fails the test on any failed
/// check.
fn criterion(number: usize, title: &str, limit: Duration, body: impl FnOnce(&mut Vec<String>)) {
    let mut failures = Vec::new();
    let started = Instant::now();
    body(&mut failures);
    let elapsed = started.elapsed();
    if elapsed > limit {
        failures.push(format!("took {elapsed:.2?}, limit {limit:?}"));
    }
    let verdict = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("criterion {number}: {verdict} {title} ({elapsed:.2?})");
    for f in &failures {
        println!("    {f}");
    }
    assert!(failures.is_empty(), "criterion {number} failed: {failures:?}");
}

fn check(failures: &mut Vec<String>, ok: bool, what: impl FnOnce() -> String) {
    if !ok {
        failures.push(what());
    }
}

fn build(inst: &catalogue::Instance) -> StateComplex {
    StateComplex::build(&inst.system, &inst.seeds, BuildOptions::default()).unwrap()
}

// 1

/// f-vector of two unlabelled tokens on K5, counted directly: token pairs,
/// single token moves, and pairs of vertex-disjoint edges.
fn k5_pair_counts() -> [usize; 3] {
    let edges: Vec<(u32, u32)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
    let vertices = edges.len();
    // either token moves to one of the three free vertices
    let moves = edges.len() * 2 * (5 - 2);
    let mut squares = 0;
    for (i, e) in edges.iter().enumerate() {
        for f in &edges[i + 1..] {
            if e.0 != f.0 && e.0 != f.1 && e.1 != f.0 && e.1 != f.1 {
                squares += 1;
            }
        }
    }
    [vertices, moves / 2, squares]
}

#[test]
fn criterion_01_k5_surface() {
    criterion(1, "K5 AGV surface", Duration::from_secs(1), |fail| {
        let inst = catalogue::builtin("agv-k5", &catalogue::BuiltinOptions::default()).unwrap();
        let c = build(&inst);
        let expected = k5_pair_counts();
        check(fail, c.f_vector() == expected, || {
            format!("f-vector {:?}, oracle {expected:?}", c.f_vector())
        });
        let t = c.topology().unwrap();
        check(fail, t.euler_characteristic() == -5, || {
            format!("chi {}", t.euler_characteristic())
        });
        check(fail, t.is_closed_surface(), || {
            format!("not a closed surface: {:?}", t.closed_surface_defect())
        });
        check(fail, t.is_orientable_surface() == Ok(false), || "orientable".into());
    });
}

// 2

fn word_id(state: &State) -> usize {
    arm::state_word(state)
        .unwrap()
        .iter()
        .fold(0, |acc, &b| acc << 1 | b as usize)
}

/// Matches the cubes of the arm complex with the word model by vertex sets
/// and compares the facets under the matching.
fn arm_isomorphism_defect(c: &StateComplex, n: usize) -> Option<String> {
    let sys = c.system();
    let w = arm::arm_word_complex(n).unwrap();
    if c.f_vector() != w.complex.f_vector() {
        return Some(format!("f-vectors {:?} vs {:?}", c.f_vector(), w.complex.f_vector()));
    }
    let mut matching: Vec<Vec<usize>> = Vec::new();
    for d in 0..c.f_vector().len() {
        let index: HashMap<&Vec<usize>, usize> = w.cubes[d].iter().enumerate().map(|(i, k)| (k, i)).collect();
        let mut level = Vec::new();
        for cube in c.cubes(d) {
            let mut key: Vec<usize> = cube.vertices(sys).iter().map(word_id).collect();
            key.sort_unstable();
            level.push(*index.get(&key)?);
        }
        if level.iter().collect::<BTreeSet<_>>().len() != level.len() {
            return Some(format!("matching is not injective in dimension {d}"));
        }
        if d > 0 {
            for (i, &j) in level.iter().enumerate() {
                let mut ours: Vec<usize> = c
                    .facet_ids(CellId { dim: d, index: i })
                    .iter()
                    .map(|&f| matching[d - 1][f])
                    .collect();
                let mut theirs = w.complex.facets(d, j).to_vec();
                ours.sort_unstable();
                theirs.sort_unstable();
                if ours != theirs {
                    return Some(format!("facets of cube {i} in dimension {d} disagree"));
                }
            }
        }
        matching.push(level);
    }
    None
}

#[test]
fn criterion_02_arm_family() {
    criterion(2, "arm family", Duration::from_secs(10), |fail| {
        for n in 2..=6 {
            let c = build(&arm::arm_system(n).unwrap());
            if let Some(defect) = arm_isomorphism_defect(&c, n) {
                fail.push(format!("N={n}: {defect}"));
            }
            check(fail, c.f_vector()[0] == 1 << n, || {
                format!("N={n}: {} vertices", c.f_vector()[0])
            });
            let t = c.topology().unwrap();
            let betti = t.betti_mod2().unwrap();
            check(fail, betti[0] == 1 && betti[1..].iter().all(|&b| b == 0), || {
                format!("N={n}: betti {betti:?}")
            });
            let rest = t.greedy_collapse();
            check(fail, rest[0] == 1 && rest[1..].iter().all(|&k| k == 0), || {
                format!("N={n}: collapse stops at {rest:?}")
            });
            if n == 5 {
                check(fail, c.top_dimension() == 3 && c.cubes(3).len() == 1, || {
                    format!("N=5: f {:?}", c.f_vector())
                });
            }
        }
    });
}

// 3

#[test]
fn criterion_03_link_condition() {
    criterion(3, "link condition", Duration::from_secs(30), |fail| {
        let mut local = vec![
            (
                "agv-k5".to_string(),
                agv::graph_agv_system(Graph::complete(5), 2).unwrap(),
            ),
            (
                "hex preserving 3".into(),
                hex::line_instance(hex::Variant::Preserving, 3).unwrap(),
            ),
            (
                "hex changing 3".into(),
                hex::line_instance(hex::Variant::Changing, 3).unwrap(),
            ),
            ("sliding 1x1".into(), sliding::around_block(1, 1).unwrap()),
            ("sliding 2x3".into(), sliding::around_block(2, 3).unwrap()),
        ];
        for n in 2..=6 {
            local.push((format!("arm {n}"), arm::arm_system(n).unwrap()));
        }
        for (name, inst) in &local {
            let report = build(inst).check_link_condition().unwrap();
            check(fail, report.ok(), || {
                format!("{name}: {} violations", report.violations.len())
            });
        }

        let sys = hex::hex_pivot_system(hex::Variant::Changing, hex::hex_disc(2), BTreeMap::new())
            .unwrap()
            .with_constraint(Some(GlobalConstraint::Connected));
        let seed = text::parse_state(LatticeKind::HexAxial, PIVOT_TRIPLE).unwrap();
        let c = StateComplex::build(&sys, std::slice::from_ref(&seed), BuildOptions::default()).unwrap();
        let report = c.check_link_condition().unwrap();
        let here: Vec<_> = report
            .violations
            .iter()
            .filter(|v| c.vertex(v.vertex) == &seed)
            .collect();
        check(fail, !here.is_empty(), || "no violation at the configuration".into());
        for v in here {
            // pairwise legal, all three together illegal
            let ok_pairs = (0..v.actions.len()).all(|i| {
                (i + 1..v.actions.len()).all(|j| {
                    let s = sys.apply_all(&seed, &[v.actions[i], v.actions[j]]).unwrap();
                    sys.constraint_holds(&s)
                })
            });
            let all = sys.apply_all(&seed, &v.actions).unwrap();
            check(
                fail,
                v.actions.len() == 3 && ok_pairs && !sys.constraint_holds(&all),
                || format!("violation {:?} is not a disconnecting triple", v.actions),
            );
        }
    });
}

// 4 to 6

struct Fixture {
    name: &'static str,
    inst: catalogue::Instance,
    complex: StateComplex,
}

fn path_fixtures() -> Vec<Fixture> {
    [
        ("arm 3", arm::arm_system(3).unwrap()),
        ("arm 4", arm::arm_system(4).unwrap()),
        ("grid 4x4", agv::flat_grid(4, 4).unwrap()),
        ("grid 6x3", agv::flat_grid(6, 3).unwrap()),
    ]
    .into_iter()
    .map(|(name, inst)| {
        let complex = build(&inst);
        Fixture { name, inst, complex }
    })
    .collect()
}

fn random_walk(fx: &Fixture, rng: &mut ChaCha8Rng, max_len: usize) -> CubePath {
    let v = rng.random_range(0..fx.complex.f_vector()[0]);
    let len = rng.random_range(0..=max_len);
    random_edge_path(&fx.inst.system, fx.complex.vertex(v), len, rng)
}

#[test]
fn criterion_04_optimal_length() {
    criterion(
        4,
        "optimizer reaches the oracle length",
        Duration::from_secs(60),
        |fail| {
            let fixtures = path_fixtures();
            let mut rng = ChaCha8Rng::seed_from_u64(4);
            for trial in 0..200 {
                let fx = &fixtures[trial % fixtures.len()];
                let sys = &fx.inst.system;
                let p = random_walk(fx, &mut rng, 30);
                let (g, _) = p.time_geodesic(sys, OptimizeMode::StopOnLength).unwrap();
                let best = oracle_shortest(&fx.complex, p.start(), &p.end(sys)).unwrap();
                check(fail, g.len() == best, || {
                    format!("{} trial {trial}: length {} vs oracle {best}", fx.name, g.len())
                });
                check(fail, g.end(sys) == p.end(sys), || {
                    format!("{} trial {trial}: endpoint moved", fx.name)
                });
            }
        },
    );
}

#[test]
fn criterion_05_normal_form() {
    criterion(5, "normal form", Duration::from_secs(60), |fail| {
        let fixtures = path_fixtures();
        let mut rng = ChaCha8Rng::seed_from_u64(5);

        // uniqueness: walks from one start, grouped by end point
        let mut compared = 0;
        for fx in &fixtures {
            let sys = &fx.inst.system;
            let start = fx.inst.seeds[0].clone();
            let mut by_end: HashMap<State, CubePath> = HashMap::new();
            for _ in 0..60 {
                let len = rng.random_range(0..=30);
                let walk = random_edge_path(sys, &start, len, &mut rng);
                let (normal, _) = walk.time_geodesic(sys, OptimizeMode::Normalize).unwrap();
                check(fail, normal.is_normal(sys), || {
                    format!("{}: output is not normal", fx.name)
                });
                let end = walk.end(sys);
                if let Some(seen) = by_end.get(&end) {
                    compared += 1;
                    check(fail, seen == &normal, || {
                        format!("{}: two normal forms for one end point", fx.name)
                    });
                } else {
                    by_end.insert(end, normal);
                }
            }
        }
        check(fail, compared >= 50, || format!("only {compared} pairs compared"));

        // fixed points of one shrink sweep are exactly the normal paths
        let (mut normal_seen, mut other_seen) = (0, 0);
        for trial in 0..500 {
            let fx = &fixtures[trial % fixtures.len()];
            let sys = &fx.inst.system;
            let walk = random_walk(fx, &mut rng, 30);
            // alternate raw walks and partly shortened ones
            let p = if trial % 2 == 0 {
                walk
            } else {
                walk.shrink(sys).unwrap().0
            };
            let fixed = p.shrink(sys).unwrap().0 == p;
            let normal = p.is_normal(sys);
            if normal {
                normal_seen += 1;
            } else {
                other_seen += 1;
            }
            check(fail, fixed == normal, || {
                format!("{} trial {trial}: fixed {fixed}, normal {normal}", fx.name)
            });
        }
        check(fail, normal_seen > 0 && other_seen > 0, || {
            format!("degenerate sample: {normal_seen} normal, {other_seen} not")
        });
    });
}

#[test]
fn criterion_06_potential() {
    criterion(6, "potential and monotonicity", Duration::from_secs(60), |fail| {
        let fixtures = path_fixtures();
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for trial in 0..400 {
            let fx = &fixtures[trial % fixtures.len()];
            let sys = &fx.inst.system;
            let input = random_walk(fx, &mut rng, 30);
            let mut p = input.clone();
            loop {
                let (q, _) = p.shrink(sys).unwrap();
                if q == p {
                    break;
                }
                check(fail, q.potential() < p.potential(), || {
                    format!(
                        "{} trial {trial}: potential {} -> {}",
                        fx.name,
                        p.potential(),
                        q.potential()
                    )
                });
                p = q;
            }
            for mode in [OptimizeMode::StopOnLength, OptimizeMode::Normalize] {
                let (out, _) = input.time_geodesic(sys, mode).unwrap();
                check(fail, out.len() <= input.len(), || {
                    format!("{} trial {trial}: length grew", fx.name)
                });
                let (again, _) = out.time_geodesic(sys, mode).unwrap();
                let stable = match mode {
                    OptimizeMode::StopOnLength => again.len() == out.len(),
                    OptimizeMode::Normalize => again == out,
                };
                check(fail, stable, || {
                    format!("{} trial {trial}: {mode:?} not idempotent", fx.name)
                });
            }
        }
    });
}

// 7

fn l_path(n: usize) -> (System, CubePath) {
    let half = n / 2;
    let inst = agv::flat_grid(half, half).unwrap();
    let sys = inst.system;
    let walk: Vec<(usize, usize)> = (0..=half)
        .map(|i| (i, 0))
        .chain((1..=half).map(|j| (half, j)))
        .collect();
    let mut moves = Vec::new();
    for w in walk.windows(2) {
        let (s, t) = (
            agv::grid_state(half, w[0].0, w[0].1),
            agv::grid_state(half, w[1].0, w[1].1),
        );
        let a = sys
            .admissible_actions(&s)
            .into_iter()
            .find(|&a| sys.apply(&s, a).unwrap() == t)
            .unwrap();
        moves.push(a);
    }
    let p = CubePath::from_edge_path(&sys, agv::grid_state(half, 0, 0), &moves).unwrap();
    (sys, p)
}

#[test]
fn criterion_07_complexity() {
    criterion(7, "quadratic work on the L-path", Duration::from_secs(20), |fail| {
        let mut ratios = Vec::new();
        for n in [40, 80, 160, 320] {
            let (sys, p) = l_path(n);
            let started = Instant::now();
            let (g, stats) = p.time_geodesic(&sys, OptimizeMode::StopOnLength).unwrap();
            let elapsed = started.elapsed();
            check(fail, g.len() == n / 2, || format!("N={n}: length {}", g.len()));
            let ratio = stats.iterations as f64 / (n * n) as f64;
            println!(
                "    N={n}: {} iterations, {} calls, c = {ratio:.3}, {elapsed:.2?}",
                stats.iterations, stats.calls
            );
            ratios.push(ratio);
            if n == 320 {
                check(fail, elapsed < Duration::from_secs(10), || {
                    format!("N=320 took {elapsed:.2?}")
                });
            }
        }
        let (lo, hi) = ratios.iter().fold((f64::MAX, 0f64), |(l, h), &r| (l.min(r), h.max(r)));
        check(fail, hi <= 2.0 * lo, || format!("c ranges over [{lo:.3}, {hi:.3}]"));
    });
}

// 8

#[test]
fn criterion_08_sliding_squares() {
    criterion(8, "sliding squares around a block", Duration::from_secs(30), |fail| {
        for (p, q) in [(1, 1), (2, 3)] {
            let c = build(&sliding::around_block(p, q).unwrap());
            let betti = c.topology().unwrap().betti_mod2().unwrap();
            check(
                fail,
                betti.len() >= 2 && betti[..2] == [1, 1] && betti[2..].iter().all(|&b| b == 0),
                || format!("{p}x{q}: betti {betti:?}"),
            );
            let f = c.f_vector();
            let (v, e) = (4 * (p * q + 1) + 2 * (p + q), 8 * (p * q + 1) - 2 * (p + q));
            let note = if (f[0], f[1]) == (v, e) { "match" } else { "differ" };
            println!(
                "    {p}x{q}: {} vertices, {} edges; closed forms {v}, {e} ({note})",
                f[0], f[1]
            );
        }
    });
}

// 9

#[test]
fn criterion_09_shape_complex() {
    criterion(9, "hex shape complex and lifting", Duration::from_secs(30), |fail| {
        let open = hex::hex_pivot_system(hex::Variant::Preserving, Region::unbounded(), BTreeMap::new()).unwrap();
        let line = State::new([Cell::new(0, 0), Cell::new(1, 0), Cell::new(2, 0)]);
        let sh =
            shape::build_shape_complex(&open, std::slice::from_ref(&line), BuildOptions::with_cap(10_000)).unwrap();
        check(fail, !sh.is_truncated() && sh.cubes(2).len() == 9, || {
            format!("f-vector {:?}", sh.f_vector())
        });
        check(fail, sh.check_link_condition().unwrap().ok(), || {
            "link condition fails".into()
        });

        let disc = hex::hex_disc(30);
        let big = hex::hex_pivot_system(hex::Variant::Preserving, disc.clone(), BTreeMap::new()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let starts = [
            line,
            State::new([Cell::new(0, 0), Cell::new(1, 0), Cell::new(2, 0), Cell::new(3, 0)]),
            State::new([Cell::new(0, 0), Cell::new(1, 0), Cell::new(0, 1), Cell::new(1, 1)]),
        ];
        let mut blocked_checked = 0;
        for trial in 0..50 {
            let start = starts.choose(&mut rng).unwrap();
            let path = shape::random_shape_path(&big, start, 12, &mut rng).unwrap();
            let base = Offset::new(rng.random_range(-5..=5), rng.random_range(-5..=5));
            let lifted = match shape::lift_path(&big, &path, base) {
                Ok(l) => l,
                Err(e) => {
                    fail.push(format!("trial {trial}: {e}"));
                    continue;
                }
            };
            check(fail, lifted.check(&big).is_ok(), || {
                format!("trial {trial}: lift is invalid")
            });
            let canon: Vec<State> = lifted
                .vertices(&big)
                .iter()
                .map(|v| shape::canonicalize(&big, v).unwrap().0)
                .collect();
            check(fail, canon == shape::shape_vertices(&big, &path).unwrap(), || {
                format!("trial {trial}: lift does not project onto the shape path")
            });
            if path.is_empty() {
                continue;
            }

            // a wall of empty obstacles through a cell that step k fills
            let k = rng.random_range(0..path.len());
            let verts = lifted.vertices(&big);
            let before: BTreeSet<Cell> = verts[..=k].iter().flat_map(|v| v.cells()).collect();
            let Some(filled) = verts[k + 1].cells().find(|c| !before.contains(c)) else {
                continue;
            };
            let wall: BTreeMap<Cell, bool> = (-30..=30)
                .map(|q| Cell::new(q, filled.y))
                .filter(|c| disc.contains(*c) && !before.contains(c))
                .map(|c| (c, false))
                .collect();
            let walled = hex::hex_pivot_system(hex::Variant::Preserving, disc.clone(), wall).unwrap();
            let got = shape::lift_path(&walled, &path, base).err();
            check(
                fail,
                got.map(|e| (e.step, e.reason)) == Some((k, LiftReason::ObstacleTrace)),
                || format!("trial {trial}: expected failure at step {k}, got {got:?}"),
            );
            blocked_checked += 1;
        }
        check(fail, blocked_checked >= 25, || {
            format!("only {blocked_checked} walls tested")
        });
    });
}

// 10

fn random_cell(kind: LatticeKind, rng: &mut ChaCha8Rng, span: i32) -> Cell {
    match kind {
        LatticeKind::FiniteGraph => Cell::vertex(rng.random_range(0..span as u32)),
        LatticeKind::SquareEdge => {
            let c = Cell::new(rng.random_range(0..span), rng.random_range(0..span));
            if rng.random_bool(0.5) {
                Cell::h(c.x, c.y)
            } else {
                Cell::v(c.x, c.y)
            }
        }
        _ => Cell::new(rng.random_range(-span..=span), rng.random_range(-span..=span)),
    }
}

fn random_generator(kind: LatticeKind, span: i32, id: String, rng: &mut ChaCha8Rng) -> Generator {
    loop {
        let size = rng.random_range(1..=5);
        let cells: BTreeSet<Cell> = (0..size).map(|_| random_cell(kind, rng, span)).collect();
        let mut support = Vec::new();
        let mut trace = Vec::new();
        for c in cells {
            let in_trace = rng.random_bool(0.6);
            let u0 = rng.random_bool(0.5);
            let u1 = if in_trace { rng.random_bool(0.5) } else { u0 };
            support.push((c, u0, u1));
            if in_trace {
                trace.push(c);
            }
        }
        if let Ok(g) = Generator::new(id.clone(), support, trace) {
            return g;
        }
    }
}

fn random_instance(rng: &mut ChaCha8Rng) -> catalogue::Instance {
    let kinds = [
        LatticeKind::Square,
        LatticeKind::HexAxial,
        LatticeKind::SquareEdge,
        LatticeKind::FiniteGraph,
    ];
    let kind = *kinds.choose(rng).unwrap();
    let span = if kind == LatticeKind::FiniteGraph {
        rng.random_range(2..8)
    } else {
        3
    };
    let (lattice, region) = match kind {
        LatticeKind::FiniteGraph => {
            let n = span as u32;
            let edges: Vec<(u32, u32)> = (0..n)
                .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
                .filter(|_| rng.random_bool(0.4))
                .collect();
            let g = Graph::new(n, edges).unwrap();
            let cells = (0..n).map(Cell::vertex).collect();
            (Lattice::graph(g), Region::Finite(cells))
        }
        LatticeKind::SquareEdge => (Lattice::SquareEdge, Region::edge_box(0, 0, rng.random_range(1..5), 3)),
        _ => {
            let lattice = if kind == LatticeKind::Square {
                Lattice::Square
            } else {
                Lattice::HexAxial
            };
            let region = match rng.random_range(0..3) {
                0 => Region::rect(-3, -2, rng.random_range(0..5), 2),
                1 => Region::Finite((0..6).map(|_| random_cell(kind, rng, 4)).collect()),
                _ => Region::Cofinite((0..rng.random_range(0..3)).map(|_| random_cell(kind, rng, 4)).collect()),
            };
            (lattice, region)
        }
    };
    let mut obstacles = BTreeMap::new();
    for _ in 0..rng.random_range(0..3) {
        let c = random_cell(kind, rng, span);
        if region.contains(c) {
            obstacles.insert(c, rng.random_bool(0.5));
        }
    }
    let workspace = Workspace::new(lattice, region, obstacles.clone()).unwrap();
    let catalogue = (0..rng.random_range(0..4))
        .map(|i| random_generator(kind, span, format!("g{i}"), rng))
        .collect();
    let system = System::new(workspace, catalogue)
        .unwrap()
        .with_constraint(rng.random_bool(0.3).then_some(GlobalConstraint::Connected));
    let mut seeds = Vec::new();
    for _ in 0..rng.random_range(0..3) {
        let mut s = State::new(
            (0..3)
                .map(|_| random_cell(kind, rng, span))
                .filter(|&c| system.workspace().contains(c)),
        );
        for (&c, &occ) in &obstacles {
            s.set(c, occ);
        }
        seeds.push(s);
    }
    catalogue::Instance { system, seeds }
}

#[test]
fn criterion_10_round_trips() {
    criterion(10, "file and script round trips", Duration::from_secs(30), |fail| {
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        for trial in 0..100 {
            let inst = random_instance(&mut rng);
            let text = format::serialize(&inst);
            match format::parse(&text) {
                Ok(back) => check(fail, back == inst, || format!("system {trial} changed:\n{text}")),
                Err(e) => fail.push(format!("system {trial}: {e}\n{text}")),
            }
        }

        let fixtures = path_fixtures();
        for trial in 0..100 {
            let fx = &fixtures[trial % fixtures.len()];
            let sys = &fx.inst.system;
            let walk = random_walk(fx, &mut rng, 20);
            // shortened paths have steps with several actions
            let p = if trial % 2 == 0 {
                walk
            } else {
                walk.time_geodesic(sys, OptimizeMode::Normalize).unwrap().0
            };
            let text = format_script(sys, &p);
            match parse_script(sys, &text) {
                Ok(back) => check(fail, back == p, || format!("script {trial} changed:\n{text}")),
                Err(e) => fail.push(format!("script {trial}: {e}\n{text}")),
            }
        }
    });
}
