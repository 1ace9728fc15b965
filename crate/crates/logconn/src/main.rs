use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use logconn::commands::{self, poles};
use logconn::encode::{parse_ints, read_json, usage};
use logconn::{table, CliError, Outcome};

/// Exact computations for rank-2 logarithmic connections on the projective line.
#[derive(Parser)]
#[command(name = "logconn", version)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
    #[command(flatten)]
    format: Format,
}

#[derive(Args)]
struct Format {
    /// JSON output (default).
    #[arg(long, global = true, conflicts_with = "table")]
    json: bool,
    /// Human-readable table output.
    #[arg(long, global = true)]
    table: bool,
}

/// Normal-form chart: poles (t, 0, 1, inf), exponents plus:minus per pole with
/// the degree -1 labels, parabolics u, and lambda*nabla0 + sum c_i Theta_i.
#[derive(Args)]
struct ChartArgs {
    #[arg(long)]
    n: Option<usize>,
    /// Finite poles besides 0 and 1, comma-separated.
    #[arg(long, allow_hyphen_values = true)]
    t: String,
    /// Exponent pairs plus:minus, one per pole, ending with infinity.
    #[arg(long, allow_hyphen_values = true)]
    nu: String,
    #[arg(long, allow_hyphen_values = true)]
    u: String,
    #[arg(long, allow_hyphen_values = true)]
    c: String,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    lambda: String,
    /// Chart frame: 0 for the trivial bundle, -1 for O + O(-1).
    #[arg(long, default_value_t = -1, allow_hyphen_values = true)]
    d: i64,
}

#[derive(Args)]
struct SuiteArgs {
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    samples: usize,
}

#[derive(Subcommand)]
enum Verb {
    /// Apparent map: the apparent divisor of a chart.
    App(ChartArgs),
    /// Bundle map: the point b of the parabolic bundle with parameters u.
    Bun {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        #[arg(long, allow_hyphen_values = true)]
        u: String,
    },
    /// Joint inverse: the connection with apparent divisor a on bundle b.
    Invert {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        #[arg(long, allow_hyphen_values = true)]
        rho: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        nu: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Darboux coordinates (q, p) from c, or c and p from q.
    Darboux {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        #[arg(long, allow_hyphen_values = true)]
        c: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        q: Option<String>,
    },
    /// Elementary transformation at one pole of weights, exponents, a bundle or a chart.
    Elm {
        /// + or -.
        #[arg(long, allow_hyphen_values = true)]
        sign: String,
        /// 1-based pole index.
        #[arg(long)]
        at: usize,
        /// Inline JSON object or a path to one.
        #[arg(long)]
        input: String,
    },
    /// Twist exponents or a chart by a rank-one connection.
    Twist {
        #[arg(long)]
        at: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
        #[arg(long)]
        input: String,
    },
    /// Stability, undecomposability and the stable chamber of a parabolic bundle.
    Stability {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        /// Splitting type e1,e2.
        #[arg(long, allow_hyphen_values = true)]
        e: String,
        /// Parabolic directions x0:x1, one per pole.
        #[arg(long, allow_hyphen_values = true)]
        dirs: String,
        #[arg(long)]
        w: Option<String>,
    },
    /// Walls in the open weight cube.
    Walls {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
    },
    /// Chambers of the admissible region; four poles in degree 0 by default.
    #[command(name = "chambers-n4")]
    ChambersN4 {
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        d: i64,
    },
    /// The five-pole catalog: curves, incidence, chart atlas or Elm-pair group.
    Delpezzo {
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        #[arg(long, value_parser = ["curves", "incidence", "atlas", "group"])]
        report: String,
    },
    /// Symplectic identities at random jet samples.
    #[command(name = "symplectic-check")]
    SymplecticCheck(SuiteArgs),
    /// Run a verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[command(flatten)]
        run: SuiteArgs,
    },
}

fn split_pair(s: &str) -> Result<(i64, i64), CliError> {
    match parse_ints(s)?.as_slice() {
        [a, b] => Ok((*a, *b)),
        _ => Err(usage("splitting must be e1,e2")),
    }
}

fn dispatch(verb: Verb) -> Result<Outcome, CliError> {
    let v = match verb {
        Verb::App(a) => {
            let t = poles(&a.t, a.n)?;
            commands::app_cmd(&commands::chart(t, &a.nu, &a.u, &a.lambda, &a.c, a.d)?)?
        }
        Verb::Bun { n, t, u } => commands::bun_cmd(&poles(&t, n)?, &u)?,
        Verb::Invert { n, t, rho, nu, a, b } => {
            let rho = commands::rho(rho.as_deref(), nu.as_deref())?;
            commands::invert_cmd(&poles(&t, n)?, &rho, &a, &b)?
        }
        Verb::Darboux { n, t, nu, u, c, q } => {
            commands::darboux_cmd(&poles(&t, n)?, &nu, &u, c.as_deref(), q.as_deref())?
        }
        Verb::Elm { sign, at, input } => commands::elm_cmd(&read_json(&input)?, commands::sign(&sign)?, at)?,
        Verb::Twist { at, mu, input } => commands::twist_cmd(&read_json(&input)?, at, mu.as_deref())?,
        Verb::Stability { n, t, e, dirs, w } => {
            commands::stability_cmd(poles(&t, n)?, split_pair(&e)?, &dirs, w.as_deref())?
        }
        Verb::Walls { n, d } => commands::walls_cmd(n, d)?,
        Verb::ChambersN4 { n, d } => commands::chambers_cmd(n, d)?,
        Verb::Delpezzo { t, report } => commands::delpezzo_cmd(&poles(&t, None)?, &report)?,
        Verb::SymplecticCheck(s) => return Ok(commands::symplectic_cmd(s.seed, s.samples)),
        Verb::Verify { suite, run } => return commands::verify_cmd(&suite, run.seed, run.samples),
    };
    Ok(Outcome::ok(v))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 64 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let as_table = cli.format.table;
    match dispatch(cli.verb) {
        Ok(out) => {
            let text = if as_table {
                table::render(&out.value)
            } else {
                serde_json::to_string_pretty(&out.value).expect("serializable") + "\n"
            };
            // A closed downstream pipe is not an error for the computation.
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            ExitCode::from(out.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
