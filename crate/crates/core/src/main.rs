use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use cobordism::algebra::{Poly, TriDegree};
use cobordism::config::{Config, Format};
use cobordism::hopf::{s_on_phi, OpIndex};
use cobordism::mass::{check_relation, d1, Complex, RelationMode, DEFAULT_T_BOUND};
use cobordism::projection::Database;
use cobordism::suites::{self, SuiteContext, SuiteName};
use cobordism::tables::{eval_expr, Generators, Scope};

#[derive(Parser)]
#[command(name = "cobordism", version, about = "Landweber-Novikov operations and the MASS first differential")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Write the output to a file.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Largest internal degree t handled by the complex.
    #[arg(long, global = true, value_name = "N", default_value_t = DEFAULT_T_BOUND)]
    t_bound: u32,
    /// Directory holding the action data; overrides COBORDISM_DATA.
    #[arg(long, global = true, value_name = "DIR")]
    data: Option<PathBuf>,
    /// Worker threads.
    #[arg(long, global = true, value_name = "N", value_parser = clap::value_parser!(u64).range(1..))]
    jobs: Option<u64>,
}

#[derive(Subcommand)]
enum Cmd {
    /// S_omega Phi_n in terms of Ray's elements.
    Sop {
        /// Comma-separated parts, e.g. 2,2.
        #[arg(long)]
        omega: String,
        #[arg(long)]
        phi: u32,
    },
    /// The first differential of a polynomial in E1.
    D1 { expr: String },
    /// Basis, cycles, boundaries and homology of one cell.
    Cell { q: u32, s: u32, t: u32 },
    /// Compares two expressions in E1 or in E2.
    Check {
        lhs: String,
        rhs: String,
        #[arg(long, value_enum, default_value_t = ModeArg::Identical)]
        mode: ModeArg,
    },
    /// Runs a verification suite.
    Verify {
        /// corollaries, table9, mass, relations, projections or all.
        suite: String,
        /// Largest n in the corollary sweeps.
        #[arg(long)]
        n: Option<u32>,
        /// Largest number of equal parts in the corollary sweeps.
        #[arg(long)]
        m: Option<u32>,
        /// Largest part in the corollary sweeps.
        #[arg(long)]
        k: Option<u32>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Identical,
    UpToBoundary,
}

enum Failure {
    Usage(String),
    Data(String),
}

struct Output {
    text: String,
    json: serde_json::Value,
    failed: bool,
}

impl Output {
    fn ok(text: impl Into<String>, json: serde_json::Value) -> Self {
        Output {
            text: text.into(),
            json,
            failed: false,
        }
    }
}

fn config(cli: &Cli) -> Config {
    Config {
        t_bound: cli.t_bound,
        data_dir: cli.data.clone(),
        format: if cli.json { Format::Json } else { Format::Text },
        jobs: cli.jobs.map_or(0, |j| j as usize),
        ..Config::default()
    }
}

fn database(config: &Config) -> Result<Database, Failure> {
    match config.resolved_data_dir() {
        Some(dir) => Database::load_dir(&dir).map_err(|e| Failure::Data(e.to_string())),
        None => Ok(Database::builtin()),
    }
}

fn expression(text: &str, generators: &Generators, db: &Database, bound: u32) -> Result<Poly, Failure> {
    let scope = Scope {
        generators,
        db: Some(db),
    };
    let p = eval_expr(text, &scope).map_err(|e| Failure::Usage(format!("{text:?}: {e}")))?;
    if let Some(d) = p.degree() {
        if d.t > bound {
            return Err(Failure::Usage(format!("{text:?} has t = {} beyond the bound {bound}", d.t)));
        }
    }
    Ok(p)
}

fn degree_json(d: Option<TriDegree>) -> serde_json::Value {
    d.map_or(serde_json::Value::Null, |d| json!([d.q, d.s, d.t]))
}

fn execute(cli: &Cli) -> Result<Output, Failure> {
    let mut config = config(cli);
    match &cli.cmd {
        Cmd::Sop { omega, phi } => {
            let w: OpIndex = omega
                .parse()
                .map_err(|e| Failure::Usage(format!("--omega {omega:?}: {e}")))?;
            let v = s_on_phi(&w, *phi).to_string();
            let j = json!({ "omega": w.to_string(), "phi": phi, "result": v });
            Ok(Output::ok(v, j))
        }
        Cmd::D1 { expr } => {
            let db = database(&config)?;
            let p = expression(expr, &Generators::builtin(), &db, config.t_bound)?;
            let image = d1(&p);
            let j = json!({
                "input": p.to_string(),
                "d1": image.to_string(),
                "degree": degree_json(image.degree()),
            });
            Ok(Output::ok(image.to_string(), j))
        }
        Cmd::Cell { q, s, t } => {
            let cx = Complex::with_bound(config.t_bound);
            let h = cx
                .homology(TriDegree::new(*q, *s, *t))
                .map_err(|e| Failure::Usage(e.to_string()))?;
            let j = serde_json::to_value(&h).expect("homology serializes");
            Ok(Output::ok(h.to_cell_text().trim_end(), j))
        }
        Cmd::Check { lhs, rhs, mode } => {
            let db = database(&config)?;
            let generators = Generators::builtin();
            let l = expression(lhs, &generators, &db, config.t_bound)?;
            let r = expression(rhs, &generators, &db, config.t_bound)?;
            let mode = match mode {
                ModeArg::Identical => RelationMode::Identical,
                ModeArg::UpToBoundary => RelationMode::UpToBoundary,
            };
            let cx = Complex::with_bound(config.t_bound);
            let v = check_relation(&cx, &l, &r, mode).map_err(|e| Failure::Usage(e.to_string()))?;
            let word = if v.identical {
                "identical"
            } else if v.holds {
                "up-to-boundary"
            } else {
                "fails"
            };
            let mut text = word.to_string();
            if !v.holds {
                text.push_str(&format!("\ndifference {}", v.diff));
            }
            let j = json!({
                "holds": v.holds,
                "identical": v.identical,
                "mode": v.mode,
                "degree": degree_json(v.degree),
                "difference": v.diff.to_string(),
            });
            Ok(Output {
                text,
                json: j,
                failed: !v.holds,
            })
        }
        Cmd::Verify { suite, n, m, k } => {
            let name: SuiteName = suite.parse().map_err(Failure::Usage)?;
            if let Some(n) = n {
                config.bounds.n_max = *n;
            }
            if let Some(m) = m {
                config.bounds.m_max = *m;
            }
            if let Some(k) = k {
                config.bounds.k_max = *k;
            }
            let db = database(&config)?;
            let ctx = SuiteContext::new(&config, db);
            let result = suites::run(name, &ctx);
            Ok(Output {
                text: result.to_text().trim_end().to_string(),
                json: serde_json::to_value(&result).expect("report serializes"),
                failed: !result.passed(),
            })
        }
    }
}

fn emit(cli: &Cli, out: &Output) -> Result<(), Failure> {
    let mut body = if cli.json {
        serde_json::to_string_pretty(&out.json).expect("json value serializes")
    } else {
        out.text.clone()
    };
    body.push('\n');
    match &cli.out {
        Some(path) => fs::write(path, body).map_err(|e| Failure::Data(format!("{}: {e}", path.display()))),
        None => {
            let _ = std::io::stdout().write_all(body.as_bytes());
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j as usize).build_global();
    }
    let result = execute(&cli).and_then(|out| emit(&cli, &out).map(|_| out.failed));
    match result {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Data(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
