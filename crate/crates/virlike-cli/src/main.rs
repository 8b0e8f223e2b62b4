//! Command-line verifier: runs named identity suites over a configurable
//! twist context and evaluates element expressions.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use virlike::{
    eval_expr, parse_expr, run_suite, AntipodeConvention, GroupVec, Rational, SuiteId,
    SuiteParams, TwistContext,
};

#[derive(Parser)]
#[command(
    name = "virlike",
    about = "Exact verifier for the twist quantization of generalized Virasoro-like algebras",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a named identity suite and print its report.
    Verify(VerifyArgs),
    /// Evaluate an element expression, optionally through a structure map.
    Eval(EvalArgs),
    /// List the available suites.
    ListSuites,
}

#[derive(Args)]
struct ContextArgs {
    /// Truncation order N (identities are checked modulo t^{N+1}).
    #[arg(long)]
    order: Option<usize>,
    /// The lattice vector alpha, as "x1,x2".
    #[arg(long, default_value = "1,0", allow_hyphen_values = true)]
    alpha: String,
    /// Coefficients a1,a2 of T = a1*d1 + a2*d2.
    #[arg(long = "T", default_value = "1,0", allow_hyphen_values = true)]
    t_coeffs: String,
}

impl ContextArgs {
    fn build(&self, default_order: usize) -> Result<TwistContext, String> {
        let alpha = GroupVec::parse(&self.alpha).map_err(|e| e.to_string())?;
        let t = GroupVec::parse(&self.t_coeffs).map_err(|e| e.to_string())?;
        TwistContext::new(t.x1, t.x2, alpha, self.order.unwrap_or(default_order))
            .map_err(|e| e.to_string())
    }
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite identifier (see `list-suites`).
    #[arg(long)]
    suite: String,
    #[command(flatten)]
    ctx: ContextArgs,
    /// Semicolon-separated lattice vectors, e.g. "0,1;1,1;-1,2".
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<String>,
    /// Semicolon-separated lattice vectors for suites that use a second list.
    #[arg(long, allow_hyphen_values = true)]
    gamma: Option<String>,
    /// Comma-separated rational shifts a.
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    /// Comma-separated rational shifts d.
    #[arg(long, allow_hyphen_values = true)]
    d: Option<String>,
    /// Seed for the randomized parameters.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Bound on the factorial/power degrees the suite sweeps.
    #[arg(long)]
    max_degree: Option<usize>,
    /// Output format.
    #[arg(long, default_value = "text", value_parser = ["text", "json"])]
    format: String,
    /// Write the report to a file instead of stdout.
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct EvalArgs {
    /// The element expression to evaluate.
    #[arg(long)]
    expr: String,
    /// Print the classical coproduct of the value.
    #[arg(long, conflicts_with_all = ["antipode", "twist_coproduct"])]
    coproduct: bool,
    /// Print the classical antipode of the value.
    #[arg(long, conflicts_with_all = ["coproduct", "twist_coproduct"])]
    antipode: bool,
    /// Print the twisted coproduct of the value (uses the context flags).
    #[arg(long, conflicts_with_all = ["coproduct", "antipode"])]
    twist_coproduct: bool,
    /// Print the twisted antipode of the value (uses the context flags).
    #[arg(long, conflicts_with_all = ["coproduct", "antipode", "twist_coproduct"])]
    twist_antipode: bool,
    #[command(flatten)]
    ctx: ContextArgs,
}

fn parse_rational_list(s: &str) -> Result<Vec<Rational>, String> {
    s.split(',')
        .map(|p| Rational::parse(p).map_err(|e| e.to_string()))
        .collect()
}

fn parse_vec_list(s: &str) -> Result<Vec<GroupVec>, String> {
    s.split(';')
        .map(|p| GroupVec::parse(p).map_err(|e| e.to_string()))
        .collect()
}

fn cmd_verify(args: &VerifyArgs) -> Result<bool, String> {
    let suite = SuiteId::parse(&args.suite).map_err(|e| e.to_string())?;
    let ctx = args.ctx.build(suite.default_order())?;
    let params = SuiteParams {
        a_list: args.a.as_deref().map(parse_rational_list).transpose()?,
        d_list: args.d.as_deref().map(parse_rational_list).transpose()?,
        beta_list: args.beta.as_deref().map(parse_vec_list).transpose()?,
        gamma_list: args.gamma.as_deref().map(parse_vec_list).transpose()?,
        seed: args.seed,
        max_degree: args.max_degree,
    };
    let report = run_suite(suite, &ctx, &params);
    let rendered = match args.format.as_str() {
        "json" => report.render_json(),
        _ => report.render_text(),
    };
    match &args.out {
        Some(path) => fs::write(path, rendered).map_err(|e| e.to_string())?,
        None => print!("{rendered}"),
    }
    Ok(report.passed())
}

fn cmd_eval(args: &EvalArgs) -> Result<(), String> {
    let ast = parse_expr(&args.expr).map_err(|e| e.to_string())?;
    let value = eval_expr(&ast);
    if args.coproduct {
        let ctx = args.ctx.build(6)?;
        println!("{}", virlike::hopf::coproduct0(&value, ctx.order()).render());
    } else if args.antipode {
        println!("{}", virlike::hopf::antipode0(&value).render());
    } else if args.twist_coproduct {
        let ctx = args.ctx.build(6)?;
        println!("{}", ctx.twisted_coproduct(&value).render());
    } else if args.twist_antipode {
        let ctx = args.ctx.build(6)?;
        println!(
            "{}",
            ctx.twisted_antipode(&value, AntipodeConvention::UConj).render()
        );
    } else {
        println!("{}", value.render());
    }
    Ok(())
}

fn cmd_list_suites() {
    for id in SuiteId::all() {
        println!("{:<20} {}", id.as_str(), id.description());
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Verify(args) => match cmd_verify(args) {
            Ok(true) => ExitCode::SUCCESS,
            Ok(false) => ExitCode::FAILURE,
            Err(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(2)
            }
        },
        Command::Eval(args) => match cmd_eval(args) {
            Ok(()) => ExitCode::SUCCESS,
            Err(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(2)
            }
        },
        Command::ListSuites => {
            cmd_list_suites();
            ExitCode::SUCCESS
        }
    }
}
