use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use dyck_tower::actions::{lhs_compositional, mediant_decompose, Tower};
use dyck_tower::braid::{braid_on_dplus_power, theorem_main_eval, BraidWord, SweepLine};
use dyck_tower::coeffring::CoefRat;
use dyck_tower::combinat::{char_function, enumerate_paths, DyckPath};
use dyck_tower::sweep::{recursion_dp, sweep_path, sweep_points, Coloring};
use dyck_tower::verify::{run_suite, verify_shuffle, JobConfig, Mode, Suite};
use dyck_tower::vkspace::{act_dplus, Interp, VElem, Word};
use dyck_tower::Result;

#[derive(Parser)]
#[command(name = "dyck-tower", version, about = "Exact computations with the double Dyck path algebra and its slope tower")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Slope actions of the tower.
    #[command(subcommand)]
    Actions(ActionsCmd),
    /// Rational Dyck paths and their statistics.
    #[command(subcommand)]
    Paths(PathsCmd),
    /// The sweep process and the coloring recursion.
    #[command(subcommand)]
    Sweep(SweepCmd),
    /// Torus braid words.
    #[command(subcommand)]
    Braid(BraidCmd),
    /// Evaluates a generator word such as "d- T1 y1 d+ d+" on 1 in V_k.
    Word {
        #[arg(long)]
        word: String,
        #[arg(long, default_value_t = 0)]
        k: usize,
        #[arg(long, default_value_t = 3)]
        cap: usize,
    },
    /// Checks the compositional identity for one slope and multiplicity.
    Verify(VerifyArgs),
    /// Runs an invariant suite: relations, sweep, braid, trains or all.
    Suite {
        name: String,
        #[arg(long, default_value = "exact")]
        mode: Mode,
    },
}

#[derive(Subcommand)]
enum ActionsCmd {
    /// Mediant word of the slope and the raising operator applied to 1.
    Build {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        star: bool,
    },
    /// The operator side for one composition.
    Lhs {
        #[arg(long)]
        m1: usize,
        #[arg(long)]
        n1: usize,
        #[arg(long)]
        g: usize,
        #[arg(long, value_delimiter = ',')]
        alpha: Vec<usize>,
    },
}

#[derive(Subcommand)]
enum PathsCmd {
    Enum {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',')]
        alpha: Option<Vec<usize>>,
    },
    Stats {
        #[arg(long)]
        path: String,
    },
    Chi {
        #[arg(long)]
        path: String,
    },
}

#[derive(Subcommand)]
enum SweepCmd {
    Path {
        #[arg(long)]
        path: String,
    },
    Dp {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// Include the operator value of every final coloring.
        #[arg(long)]
        emit_colorings: bool,
    },
}

#[derive(Subcommand)]
enum BraidCmd {
    /// Evaluates a braid word on d_+^k(1).
    Eval {
        #[arg(long)]
        word: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// The special braid of a coloring given as JSON.
    OfColoring {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        coloring: PathBuf,
        /// Lattice point the line passes; defaults to the last sweep point.
        #[arg(long, value_delimiter = ',')]
        point: Option<Vec<i64>>,
        #[arg(long)]
        above: bool,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    m1: usize,
    #[arg(long)]
    n1: usize,
    #[arg(long)]
    g: usize,
    #[arg(long, value_delimiter = ',')]
    alpha: Option<Vec<usize>>,
    #[arg(long)]
    cap: Option<usize>,
    #[arg(long, default_value = "exact")]
    mode: Mode,
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    budget_secs: Option<u64>,
}

fn run(cmd: Cmd) -> Result<(Value, bool)> {
    let ok = |v: Value| Ok((v, true));
    match cmd {
        Cmd::Actions(ActionsCmd::Build { m, n, star }) => {
            let tower = Tower::<CoefRat>::new();
            let rho = tower.build(m, n, star)?;
            let f = rho.dplus(&VElem::one(0, n + 1))?;
            ok(json!({"m": m, "n": n, "star": star, "mediant": mediant_decompose(m, n)?, "dplus_on_one": f.to_json()}))
        }
        Cmd::Actions(ActionsCmd::Lhs { m1, n1, g, alpha }) => {
            ok(lhs_compositional(&Tower::<CoefRat>::new(), m1, n1, g, &alpha)?.to_json())
        }
        Cmd::Paths(PathsCmd::Enum { m, n, alpha }) => {
            let paths = enumerate_paths(m, n, alpha.as_deref())?;
            ok(json!(paths.iter().map(|p| json!({"path": p.bits(), "stats": p.statistics()})).collect::<Vec<_>>()))
        }
        Cmd::Paths(PathsCmd::Stats { path }) => ok(json!(DyckPath::from_bits(&path)?.statistics())),
        Cmd::Paths(PathsCmd::Chi { path }) => {
            ok(char_function::<CoefRat>(&DyckPath::from_bits(&path)?.attack_structure())?.to_json())
        }
        Cmd::Sweep(SweepCmd::Path { path }) => ok(sweep_path::<CoefRat>(&DyckPath::from_bits(&path)?)?.to_json()),
        Cmd::Sweep(SweepCmd::Dp { m, n, emit_colorings }) => {
            let dp = recursion_dp::<CoefRat>(m, n, false)?;
            let rows: Vec<Value> = dp
                .last
                .iter()
                .map(|(c, v)| if emit_colorings { json!({"coloring": c, "value": v.to_json()}) } else { json!({"coloring": c}) })
                .collect();
            ok(json!({"m": m, "n": n, "colorings": rows}))
        }
        Cmd::Braid(BraidCmd::Eval { word, k, cap }) => {
            let w = BraidWord::parse(k, &word)?;
            let mut f = VElem::<CoefRat>::one(0, cap.unwrap_or(k + w.len()));
            for _ in 0..k {
                f = act_dplus(&f);
            }
            ok(json!({"word": w.to_string(), "k": k, "value": w.evaluate(&f)?.to_json()}))
        }
        Cmd::Braid(BraidCmd::OfColoring { m, n, coloring, point, above }) => {
            let c: Coloring = serde_json::from_str(&std::fs::read_to_string(&coloring)?)
                .map_err(|e| dyck_tower::Error::Parse(format!("{}: {e}", coloring.display())))?;
            let p = match point.as_deref() {
                Some(&[x, y]) => (x, y),
                Some(_) => return Err(dyck_tower::Error::InvalidArgument("--point takes x,y".into())),
                None => *sweep_points(m, n).last().ok_or_else(|| dyck_tower::Error::InvalidArgument("no sweep points".into()))?,
            };
            let line = SweepLine::new(m, n, p, above)?;
            let b = line.braid_of(&c)?;
            let value = theorem_main_eval::<CoefRat>(&line, &c)?;
            let raw = braid_on_dplus_power::<CoefRat>(&b, n)?;
            ok(json!({"line": line, "braid": b, "word": b.word.to_string(), "braid_on_dplus_power": raw.to_json(), "value": value.to_json()}))
        }
        Cmd::Word { word, k, cap } => {
            let w = Word::parse(&word)?;
            ok(json!({"k_out": w.target(k)?, "value": Interp::<CoefRat>::base().eval(&w, &VElem::one(k, cap))?.to_json()}))
        }
        Cmd::Verify(a) => {
            let mut cfg = JobConfig::new(a.m1, a.n1, a.g);
            cfg.alpha = a.alpha;
            cfg.cap = a.cap.unwrap_or(cfg.cap);
            cfg.mode = a.mode;
            cfg.jobs = a.jobs;
            cfg.out = a.out;
            cfg.budget = a.budget_secs.map(Duration::from_secs);
            let rep = verify_shuffle(&cfg)?;
            Ok((rep.to_json(), rep.passed))
        }
        Cmd::Suite { name, mode } => {
            let rep = run_suite(name.parse::<Suite>()?, mode)?;
            let passed = rep.passed();
            Ok((serde_json::to_value(&rep).expect("report serializes"), passed))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok((v, passed)) => {
            let _ = writeln!(std::io::stdout().lock(), "{}", serde_json::to_string_pretty(&v).expect("json prints"));
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e @ dyck_tower::Error::InvalidArgument(_)) => {
            eprintln!("usage error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
