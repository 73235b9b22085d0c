//! `cubeplan`: build state complexes, check the link condition, compute
//! invariants and shorten move scripts from the command line.
//!
//! Exit codes: 0 on success, 1 on a domain error (including a failed link
//! check or lift), 2 on a usage error.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cubeplan::catalogue::{self, format, BuiltinOptions, Instance, BUILTIN_NAMES};
use cubeplan::complex::ViolationKind;
use cubeplan::path::{format_script, parse_script, random_edge_path};
use cubeplan::text::{format_action, format_state, parse_state};
use cubeplan::{shape, BuildOptions, CubePath, GlobalConstraint, Offset, OptimizeMode, StateComplex, System};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Parser)]
#[command(
    name = "cubeplan",
    version,
    about = "State complexes and time-optimal cube paths for metamorphic robots"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the complex; print its export, or write it to --out and print the f-vector.
    Build(Common),
    /// Print counts only.
    Stats(Common),
    /// Check the link condition at every vertex.
    CheckNpc(Common),
    /// Mod-2 Betti numbers, Euler characteristic and collapsibility.
    Homology(Common),
    /// Shorten a move script until its length stops decreasing.
    Optimize(PathInput),
    /// Shorten a move script to its normal form.
    Normalize(PathInput),
    /// Place a shape path at a base translation in the workspace.
    Lift(LiftArgs),
    /// Print the complex in the chosen format.
    Export(ExportArgs),
    /// Print a seeded random edge path from the first seed state.
    RandomPath(RandomArgs),
}

#[derive(Args)]
struct Common {
    /// System file.
    #[arg(
        long,
        value_name = "FILE",
        conflicts_with = "builtin",
        required_unless_present = "builtin"
    )]
    system: Option<PathBuf>,
    /// Built-in system.
    #[arg(long, value_name = "NAME", value_parser = BUILTIN_NAMES)]
    builtin: Option<String>,
    /// Module, token or link count for built-ins.
    #[arg(long, default_value_t = 2)]
    n: usize,
    /// Hex pivot variant.
    #[arg(long, value_parser = ["preserving", "changing"])]
    variant: Option<String>,
    /// Global constraint added to the system.
    #[arg(long, value_parser = ["connected"])]
    constraint: Option<String>,
    /// Obstacle or grid width for built-ins.
    #[arg(long, default_value_t = 1)]
    p: usize,
    /// Obstacle or grid height for built-ins.
    #[arg(long, default_value_t = 1)]
    q: usize,
    /// State file replacing the seed states.
    #[arg(long, value_name = "STATEFILE")]
    seed: Option<PathBuf>,
    /// Maximum number of vertices to enumerate.
    #[arg(long, value_name = "N")]
    cap: Option<usize>,
    /// Write the main output here instead of stdout.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Builder threads.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    threads: u16,
}

#[derive(Args)]
struct PathInput {
    #[command(flatten)]
    common: Common,
    /// Move script to read.
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
}

#[derive(Args)]
struct LiftArgs {
    #[command(flatten)]
    common: Common,
    /// Shape path script.
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
    /// Translation applied to the canonical start shape, as `x,y`.
    #[arg(long, value_parser = parse_offset, default_value = "0,0", allow_hyphen_values = true)]
    base: Offset,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Counts,
}

#[derive(Args)]
struct ExportArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
}

#[derive(Args)]
struct RandomArgs {
    #[command(flatten)]
    common: Common,
    /// Number of moves.
    #[arg(long, default_value_t = 10)]
    length: usize,
    #[arg(long, default_value_t = 0)]
    rng_seed: u64,
    /// Walk in the shape complex instead.
    #[arg(long)]
    shape: bool,
}

fn parse_offset(s: &str) -> Result<Offset, String> {
    let (x, y) = s.split_once(',').ok_or("expected `x,y`")?;
    let x = x.trim().parse().map_err(|_| format!("bad x in `{s}`"))?;
    let y = y.trim().parse().map_err(|_| format!("bad y in `{s}`"))?;
    Ok(Offset::new(x, y))
}

/// A domain failure: message printed to stderr, exit code 1.
struct Failure(String);

impl From<cubeplan::Error> for Failure {
    fn from(e: cubeplan::Error) -> Self {
        Failure(format!("{}: {e}", e.kind()))
    }
}

type Outcome = Result<(), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure(format!("Io: {}: {e}", path.display())))
}

fn emit(common: &Common, text: &str) -> Outcome {
    match &common.out {
        Some(path) => fs::write(path, text).map_err(|e| Failure(format!("Io: {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

impl Common {
    fn instance(&self) -> Result<Instance, Failure> {
        let mut inst = match (&self.system, &self.builtin) {
            (Some(path), _) => format::parse(&read(path)?)?,
            (None, Some(name)) => {
                let opts = BuiltinOptions {
                    n: self.n,
                    variant: self.variant.clone(),
                    constraint: self.constraint.as_deref().and_then(GlobalConstraint::from_name),
                    p: self.p,
                    q: self.q,
                };
                catalogue::builtin(name, &opts)?
            }
            (None, None) => unreachable!("clap requires a system source"),
        };
        if let Some(path) = &self.seed {
            let kind = inst.system.lattice().kind();
            let state =
                parse_state(kind, &read(path)?).map_err(|m| Failure(format!("Parse: {}: {m}", path.display())))?;
            inst.seeds = vec![state];
        }
        Ok(inst)
    }

    fn complex(&self, inst: &Instance) -> Result<StateComplex, Failure> {
        let mut options = BuildOptions::default();
        if let Some(cap) = self.cap {
            options.max_vertices = cap;
        }
        if self.threads == 1 {
            return Ok(StateComplex::build(&inst.system, &inst.seeds, options)?);
        }
        options.parallel = true;
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.threads as usize)
            .build()
            .map_err(|e| Failure(format!("Threads: {e}")))?;
        Ok(pool.install(|| StateComplex::build(&inst.system, &inst.seeds, options))?)
    }
}

fn numbers(values: &[usize]) -> String {
    values.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn build(common: &Common) -> Outcome {
    let inst = common.instance()?;
    let c = common.complex(&inst)?;
    emit(common, &c.export())?;
    if common.out.is_some() {
        println!("{}", c.fvec_line());
    }
    Ok(())
}

fn stats(common: &Common) -> Outcome {
    let inst = common.instance()?;
    let c = common.complex(&inst)?;
    let mut out = format!("{}\n", c.fvec_line());
    writeln!(out, "generators: {}", inst.system.catalogue().len()).unwrap();
    writeln!(out, "dimension: {}", c.top_dimension()).unwrap();
    if c.is_truncated() {
        writeln!(out, "truncated: {}", c.cap()).unwrap();
    } else {
        writeln!(out, "chi: {}", c.topology()?.euler_characteristic()).unwrap();
    }
    emit(common, &out)
}

fn check_npc(common: &Common) -> Outcome {
    let inst = common.instance()?;
    let c = common.complex(&inst)?;
    let report = c.check_link_condition()?;
    let sys = c.system();
    let kind = sys.lattice().kind();
    if report.ok() {
        return emit(common, "OK\n");
    }
    let mut out = format!("violations: {}\n", report.violations.len());
    for v in &report.violations {
        let actions: Vec<String> = v.actions.iter().map(|&a| format_action(sys, a)).collect();
        let what = match v.kind {
            ViolationKind::Missing => "spans no cube".to_string(),
            ViolationKind::Duplicate(k) => format!("spans {k} cubes"),
        };
        writeln!(
            out,
            "at {}: {{{}}} {what}",
            format_state(kind, c.vertex(v.vertex)),
            actions.join("; ")
        )
        .unwrap();
    }
    emit(common, &out)?;
    Err(Failure("link condition fails".into()))
}

fn homology(common: &Common) -> Outcome {
    let inst = common.instance()?;
    let c = common.complex(&inst)?;
    let t = c.topology()?;
    let betti = t.betti_mod2()?;
    let rest = t.greedy_collapse();
    let collapses = rest[0] == 1 && rest[1..].iter().all(|&k| k == 0);
    let mut out = format!("betti: {}\nchi: {}\n", numbers(&betti), t.euler_characteristic());
    if collapses {
        out.push_str("collapse: point\n");
    } else {
        writeln!(out, "collapse: stuck at {}", numbers(&rest)).unwrap();
    }
    emit(common, &out)
}

fn optimize(args: &PathInput, mode: OptimizeMode) -> Outcome {
    let inst = args.common.instance()?;
    let sys = &inst.system;
    let path = parse_script(sys, &read(&args.input)?)?;
    path.check(sys)?;
    let (short, _) = path.time_geodesic(sys, mode)?;
    let mut out = format_script(sys, &short);
    writeln!(out, "# length: {} -> {}", path.len(), short.len()).unwrap();
    writeln!(out, "# f: {} -> {}", path.potential(), short.potential()).unwrap();
    if mode == OptimizeMode::Normalize {
        writeln!(out, "# normal: {}", short.is_normal(sys)).unwrap();
    }
    emit(&args.common, &out)
}

fn lift(args: &LiftArgs) -> Outcome {
    let inst = args.common.instance()?;
    let sys = &inst.system;
    let open = shape::homogeneous(sys);
    let path = parse_script(&open, &read(&args.input)?)?;
    match shape::lift_path(sys, &path, args.base) {
        Ok(placed) => emit(&args.common, &format_script(sys, &placed)),
        Err(e) => Err(Failure(format!("LiftFailure: {e}"))),
    }
}

fn export(args: &ExportArgs) -> Outcome {
    let inst = args.common.instance()?;
    let c = args.common.complex(&inst)?;
    let text = match args.format {
        OutputFormat::Text => c.export(),
        OutputFormat::Counts => {
            let mut s = format!("{}\n", c.fvec_line());
            if c.is_truncated() {
                writeln!(s, "truncated: {}", c.cap()).unwrap();
            }
            s
        }
    };
    emit(&args.common, &text)
}

fn random_path(args: &RandomArgs) -> Outcome {
    let inst = args.common.instance()?;
    let sys = &inst.system;
    let start = inst
        .seeds
        .first()
        .ok_or_else(|| Failure("EmptyState: the system has no seed state".into()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(args.rng_seed);
    let (system, path): (System, CubePath) = if args.shape {
        let open = shape::homogeneous(sys);
        let p = shape::random_shape_path(&open, start, args.length, &mut rng)?;
        (open, p)
    } else {
        sys.check_state(start)?;
        (sys.clone(), random_edge_path(sys, start, args.length, &mut rng))
    };
    emit(&args.common, &format_script(&system, &path))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    let outcome = match &cli.command {
        Command::Build(c) => build(c),
        Command::Stats(c) => stats(c),
        Command::CheckNpc(c) => check_npc(c),
        Command::Homology(c) => homology(c),
        Command::Optimize(a) => optimize(a, OptimizeMode::StopOnLength),
        Command::Normalize(a) => optimize(a, OptimizeMode::Normalize),
        Command::Lift(a) => lift(a),
        Command::Export(a) => export(a),
        Command::RandomPath(a) => random_path(a),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}
