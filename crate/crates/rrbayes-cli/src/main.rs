//! Command-line surface over the rrbayes library: sequential analysis
//! reports, HPD intervals, UMPBT correspondence, fixed-sample design,
//! stopping-rule simulation, and the informative prior solve.
//!
//! Exit codes: 0 success, 2 validation/ingestion problems, 3
//! infeasible or numerical failures.

mod report;

use clap::{Args, Parser, Subcommand, ValueEnum};
use report::{fmt4, fmt4_opt, fmt_full, fmt_full_opt, write_csv, write_table};
use rrbayes::special_fns::reg_inc_beta;
use rrbayes::{
    analyze_sequence, design_fixed_sample, hpd_interval, resolve_prior, simulate_trial,
    umpbt_solution, AnalysisRecord, BetaParams, Decision, Design, Error, GradeBand,
    GroupDataPoint, HpdInterval, HypothesisCase, Observation, PosteriorBeta, PriorSpec,
    SimConfig, TestMode,
};
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "rrbayes",
    version,
    about = "Bayesian sequential monitoring of the relative risk in two-arm event studies"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a cumulative (m, x) data stream
    Analyze(AnalyzeArgs),
    /// Highest-posterior-density interval for one observation
    Hpd(HpdArgs),
    /// Equivalent uniformly-most-powerful Bayesian test
    Umpbt(UmpbtArgs),
    /// Smallest fixed-sample design meeting the error constraints
    Design(DesignArgs),
    /// Simulate the sequential stopping rule patient by patient
    Simulate(SimulateArgs),
    /// Solve the informative prior for a band mass
    PriorSolve(PriorSolveArgs),
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Aligned text, four decimals, half-up rounding
    Table,
    /// Comma-separated, full double precision
    Csv,
    /// Versioned JSON, full double precision
    Json,
}

#[derive(Args)]
struct FormatArg {
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Copy, Clone, ValueEnum)]
enum PriorKind {
    Uniform,
    Jeffreys,
    Informative,
    Explicit,
}

#[derive(Args)]
struct PriorArgs {
    /// Prior family over the allocation probability theta
    #[arg(long, value_enum, default_value_t = PriorKind::Uniform)]
    prior: PriorKind,
    /// Relative-risk band half-width (informative prior)
    #[arg(long)]
    epsilon: Option<f64>,
    /// Prior mass required inside the band (informative prior)
    #[arg(long)]
    delta: Option<f64>,
    /// Beta shape a (explicit prior)
    #[arg(long)]
    a: Option<f64>,
    /// Beta shape b (explicit prior)
    #[arg(long)]
    b: Option<f64>,
}

#[derive(Copy, Clone, ValueEnum)]
enum TestKind {
    Standard,
    Modified,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// CSV file with header `index,m,x` and cumulative counts
    #[arg(long)]
    data: PathBuf,
    /// Hypothesis case: 1 two-sided, 2 one-sided, 3 composite null
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    case: u8,
    #[command(flatten)]
    prior: PriorArgs,
    /// Matching odds (1 - p0) / p0
    #[arg(long, default_value_t = 1.0)]
    z0: f64,
    /// Prior odds of H0 to H1
    #[arg(long, default_value_t = 1.0)]
    ell: f64,
    /// Which rule marks the termination point
    #[arg(long, value_enum, default_value_t = TestKind::Standard)]
    test: TestKind,
    /// Bayes-factor threshold of the standard test
    #[arg(long, default_value_t = 0.3162)]
    threshold: f64,
    #[command(flatten)]
    format: FormatArg,
}

#[derive(Args)]
struct HpdArgs {
    /// Total events observed
    #[arg(long)]
    m: u32,
    /// Events in arm A
    #[arg(long)]
    x: u32,
    #[command(flatten)]
    prior: PriorArgs,
    #[arg(long, default_value_t = 1.0)]
    z0: f64,
    /// Posterior mass of the interval
    #[arg(long, default_value_t = 0.95)]
    credibility: f64,
    #[command(flatten)]
    format: FormatArg,
}

#[derive(Args)]
struct UmpbtArgs {
    /// Sample size of the binomial test
    #[arg(long)]
    m: u32,
    /// Null allocation probability
    #[arg(long, default_value_t = 0.5)]
    theta0: f64,
    /// Evidence threshold 1/lambda the Bayes factor must cross
    #[arg(long, conflicts_with = "from_bf")]
    inv_lambda: Option<f64>,
    /// Take the threshold from an observed Bayes factor
    #[arg(long)]
    from_bf: Option<f64>,
    #[command(flatten)]
    format: FormatArg,
}

#[derive(Args)]
struct DesignArgs {
    /// Event probability under the null
    #[arg(long)]
    eta0: f64,
    /// Event probability the design must detect
    #[arg(long)]
    eta1: f64,
    /// Type I error bound
    #[arg(long)]
    alpha: f64,
    /// Type II error bound
    #[arg(long)]
    beta: f64,
    #[command(flatten)]
    format: FormatArg,
}

#[derive(Args)]
struct SimulateArgs {
    #[arg(long)]
    eta0: f64,
    #[arg(long)]
    eta1: f64,
    #[arg(long)]
    alpha: f64,
    #[arg(long)]
    beta: f64,
    /// Arm-A assignment probability
    #[arg(long, default_value_t = 0.5)]
    p0: f64,
    /// Side-effect probability in arm A
    #[arg(long = "theta-a")]
    theta_a: f64,
    /// Side-effect probability in arm B
    #[arg(long = "theta-b")]
    theta_b: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 10_000)]
    reps: u64,
    #[command(flatten)]
    format: FormatArg,
}

#[derive(Args)]
struct PriorSolveArgs {
    #[arg(long, default_value_t = 1.0)]
    z0: f64,
    #[arg(long)]
    epsilon: f64,
    #[arg(long)]
    delta: f64,
    #[command(flatten)]
    format: FormatArg,
}

struct CliError {
    code: u8,
    message: String,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Validation(_) | Error::Domain(_) | Error::Ingestion { .. } => 2,
            _ => 3,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError {
            code: 3,
            message: e.to_string(),
        }
    }
}

fn validation(message: impl Into<String>) -> CliError {
    CliError {
        code: 2,
        message: message.into(),
    }
}

impl PriorArgs {
    fn to_spec(&self) -> Result<PriorSpec, CliError> {
        match self.prior {
            PriorKind::Uniform => Ok(PriorSpec::Uniform),
            PriorKind::Jeffreys => Ok(PriorSpec::Jeffreys),
            PriorKind::Informative => match (self.epsilon, self.delta) {
                (Some(epsilon), Some(delta)) => Ok(PriorSpec::Informative { epsilon, delta }),
                _ => Err(validation(
                    "--prior informative requires --epsilon and --delta",
                )),
            },
            PriorKind::Explicit => match (self.a, self.b) {
                (Some(a), Some(b)) => Ok(PriorSpec::Explicit { a, b }),
                _ => Err(validation("--prior explicit requires --a and --b")),
            },
        }
    }
}

fn prior_json(spec: &PriorSpec, resolved: &BetaParams) -> serde_json::Value {
    let kind = match spec {
        PriorSpec::Uniform => "uniform",
        PriorSpec::Jeffreys => "jeffreys",
        PriorSpec::Informative { .. } => "informative",
        PriorSpec::Explicit { .. } => "explicit",
    };
    json!({ "kind": kind, "a": resolved.a, "b": resolved.b })
}

fn letter(d: Decision) -> &'static str {
    match d {
        Decision::Reject => "R",
        Decision::Accept => "A",
        Decision::NoDecision => "ND",
    }
}

fn decision_name(d: Decision) -> &'static str {
    match d {
        Decision::Reject => "reject",
        Decision::Accept => "accept",
        Decision::NoDecision => "no_decision",
    }
}

fn grade_name(g: GradeBand) -> &'static str {
    match g {
        GradeBand::FavorsNull => "favors_null",
        GradeBand::BareMention => "bare_mention",
        GradeBand::Substantial => "substantial",
        GradeBand::Strong => "strong",
        GradeBand::Decisive => "decisive",
    }
}

fn read_points(path: &PathBuf) -> Result<Vec<GroupDataPoint>, CliError> {
    #[derive(serde::Deserialize)]
    struct RowIn {
        index: u32,
        m: u32,
        x: u32,
    }
    let mut rdr = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| validation(format!("cannot read {}: {e}", path.display())))?;
    let mut out = Vec::new();
    for rec in rdr.deserialize::<RowIn>() {
        let rec = rec.map_err(|e| validation(format!("{}: {e}", path.display())))?;
        out.push(GroupDataPoint {
            index: rec.index,
            m: rec.m,
            x: rec.x,
        });
    }
    if out.is_empty() {
        return Err(validation(format!(
            "{}: no data rows",
            path.display()
        )));
    }
    Ok(out)
}

fn cmd_analyze(args: &AnalyzeArgs) -> Result<(), CliError> {
    let design = Design::with_ell(args.z0, args.ell)?;
    let spec = args.prior.to_spec()?;
    let case = [
        HypothesisCase::Case1,
        HypothesisCase::Case2,
        HypothesisCase::Case3,
    ][args.case as usize - 1];
    let mode = match args.test {
        TestKind::Standard => TestMode::Standard,
        TestKind::Modified => TestMode::Modified,
    };
    let points = read_points(&args.data)?;
    let records = analyze_sequence(&points, case, &spec, &design, mode, args.threshold)?;
    let resolved = resolve_prior(&spec, &design)?;

    let modified = matches!(args.test, TestKind::Modified);
    let header: &[&str] = if modified {
        &["index", "m", "x", "gamma_hat", "bf", "r", "a", "decision", "conditional_error"]
    } else {
        &["index", "m", "x", "gamma_hat", "bf", "posterior_h0"]
    };
    let text_row = |rec: &AnalysisRecord, full: bool| -> Vec<String> {
        let f = if full { fmt_full } else { fmt4 };
        let fo = if full { fmt_full_opt } else { fmt4_opt };
        let mut row = vec![
            rec.point.index.to_string(),
            rec.point.m.to_string(),
            rec.point.x.to_string(),
            fo(rec.gamma_hat.or(Some(f64::INFINITY))),
            f(rec.bf),
        ];
        if modified {
            row.extend([
                f(rec.r),
                f(rec.a),
                letter(rec.modified.decision).to_string(),
                fo(rec.modified.conditional_error),
            ]);
        } else {
            row.push(f(rec.posterior_h0));
        }
        row
    };

    match args.format.format {
        Format::Table => {
            let rows: Vec<_> = records.iter().map(|r| text_row(r, false)).collect();
            write_table(&mut std::io::stdout().lock(), header, &rows)?;
        }
        Format::Csv => {
            let rows: Vec<_> = records.iter().map(|r| text_row(r, true)).collect();
            write_csv(&mut std::io::stdout().lock(), header, &rows)?;
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = records
                .iter()
                .map(|rec| {
                    let mut row = json!({
                        "index": rec.point.index,
                        "m": rec.point.m,
                        "x": rec.point.x,
                        "gamma_hat": rec.gamma_hat,
                        "bf": rec.bf,
                        "posterior_h0": rec.posterior_h0,
                        "grade": grade_name(rec.grade.grade),
                        "terminated_here": rec.terminated_here,
                    });
                    let obj = row.as_object_mut().unwrap();
                    if modified {
                        obj.insert("r".into(), json!(rec.r));
                        obj.insert("a".into(), json!(rec.a));
                        obj.insert(
                            "decision".into(),
                            json!(decision_name(rec.modified.decision)),
                        );
                        obj.insert(
                            "conditional_error".into(),
                            json!(rec.modified.conditional_error),
                        );
                        obj.insert(
                            "conditioning_stat".into(),
                            json!(rec.modified.conditioning_stat),
                        );
                    } else {
                        obj.insert(
                            "decision".into(),
                            json!(decision_name(rec.standard_decision.decision)),
                        );
                        obj.insert(
                            "reported_error".into(),
                            json!(rec.standard_decision.reported_error),
                        );
                    }
                    row
                })
                .collect();
            let terminated = records
                .iter()
                .find(|r| r.terminated_here)
                .map(|r| r.point.index);
            let doc = json!({
                "schema_version": 1,
                "command": "analyze",
                "case": args.case,
                "prior": prior_json(&spec, &resolved),
                "z0": args.z0,
                "ell": args.ell,
                "test": if modified { "modified" } else { "standard" },
                "threshold": args.threshold,
                "terminated_index": terminated,
                "rows": rows,
            });
            println!("{doc}");
        }
    }
    Ok(())
}

/// One-sided fallback when the posterior density is monotone and the
/// interior-mode interval does not exist.
fn one_sided_hpd(
    post: &PosteriorBeta,
    credibility: f64,
    design: &Design,
) -> Result<HpdInterval, Error> {
    let (a, b) = (post.a_post, post.b_post);
    let quantile = |p: f64| -> Result<f64, Error> {
        let (mut lo, mut hi) = (0.0f64, 1.0f64);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if reg_inc_beta(mid, a, b)? < p {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Ok(0.5 * (lo + hi))
    };
    let (lo, hi) = if a <= 1.0 && b > 1.0 {
        (0.0, quantile(credibility)?)
    } else if a > 1.0 && b <= 1.0 {
        (quantile(1.0 - credibility)?, 1.0)
    } else {
        return Err(Error::BoundaryMode(format!(
            "density is unbounded at both ends for Beta({a}, {b}); no single \
             interval is highest-density"
        )));
    };
    Ok(HpdInterval {
        lo,
        hi,
        credibility,
        gamma_lo: design.gamma_of_theta(lo),
        gamma_hi: design.gamma_of_theta(hi),
        unique: true,
    })
}

fn cmd_hpd(args: &HpdArgs) -> Result<(), CliError> {
    let design = Design::new(args.z0)?;
    let spec = args.prior.to_spec()?;
    let prior = resolve_prior(&spec, &design)?;
    let post = PosteriorBeta::from_observation(Observation::new(args.m, args.x)?, &prior)?;
    let interval = match hpd_interval(post, args.credibility, &design) {
        Ok(iv) => iv,
        Err(Error::BoundaryMode(msg)) => {
            eprintln!("warning: {msg}; reporting a one-sided interval");
            one_sided_hpd(&post, args.credibility, &design)?
        }
        Err(e) => return Err(e.into()),
    };

    let header = [
        "a_post",
        "b_post",
        "credibility",
        "theta_lo",
        "theta_hi",
        "gamma_lo",
        "gamma_hi",
        "unique",
    ];
    let row = |full: bool| -> Vec<String> {
        let f = if full { fmt_full } else { fmt4 };
        vec![
            f(post.a_post),
            f(post.b_post),
            f(interval.credibility),
            f(interval.lo),
            f(interval.hi),
            f(interval.gamma_lo),
            f(interval.gamma_hi),
            interval.unique.to_string(),
        ]
    };
    match args.format.format {
        Format::Table => write_table(&mut std::io::stdout().lock(), &header, &[row(false)])?,
        Format::Csv => write_csv(&mut std::io::stdout().lock(), &header, &[row(true)])?,
        Format::Json => {
            let doc = json!({
                "schema_version": 1,
                "command": "hpd",
                "m": args.m,
                "x": args.x,
                "prior": prior_json(&spec, &prior),
                "z0": args.z0,
                "a_post": post.a_post,
                "b_post": post.b_post,
                "credibility": interval.credibility,
                "theta_lo": interval.lo,
                "theta_hi": interval.hi,
                "gamma_lo": interval.gamma_lo,
                "gamma_hi": if interval.gamma_hi.is_finite() { json!(interval.gamma_hi) } else { json!(null) },
                "unique": interval.unique,
            });
            println!("{doc}");
        }
    }
    Ok(())
}

fn cmd_umpbt(args: &UmpbtArgs) -> Result<(), CliError> {
    let inv_lambda = args
        .inv_lambda
        .or(args.from_bf)
        .ok_or_else(|| validation("one of --inv-lambda or --from-bf is required"))?;
    let sol = umpbt_solution(args.m, args.theta0, inv_lambda)?;
    let header = [
        "theta1",
        "x_star",
        "classical_alpha",
        "evidence_lo",
        "evidence_hi",
        "posterior_lo",
        "posterior_hi",
    ];
    let row = |full: bool| -> Vec<String> {
        let f = if full { fmt_full } else { fmt4 };
        vec![
            f(sol.theta1),
            sol.x_star.to_string(),
            f(sol.classical_alpha),
            f(sol.lambda_range.0),
            f(sol.lambda_range.1),
            f(sol.posterior_range.0),
            f(sol.posterior_range.1),
        ]
    };
    match args.format.format {
        Format::Table => write_table(&mut std::io::stdout().lock(), &header, &[row(false)])?,
        Format::Csv => write_csv(&mut std::io::stdout().lock(), &header, &[row(true)])?,
        Format::Json => {
            let doc = json!({
                "schema_version": 1,
                "command": "umpbt",
                "m": args.m,
                "theta0": args.theta0,
                "evidence_threshold": sol.evidence_threshold,
                "theta1": sol.theta1,
                "x_star": sol.x_star,
                "classical_alpha": sol.classical_alpha,
                "evidence_lo": sol.lambda_range.0,
                "evidence_hi": sol.lambda_range.1,
                "posterior_lo": sol.posterior_range.0,
                "posterior_hi": sol.posterior_range.1,
            });
            println!("{doc}");
        }
    }
    Ok(())
}

fn cmd_design(args: &DesignArgs) -> Result<(), CliError> {
    let d = design_fixed_sample(args.eta0, args.eta1, args.alpha, args.beta)?;
    let header = ["n_max", "k_star", "achieved_alpha", "achieved_beta"];
    let row = |full: bool| -> Vec<String> {
        let f = if full { fmt_full } else { fmt4 };
        vec![
            d.n_max.to_string(),
            d.k_star.to_string(),
            f(d.achieved_alpha),
            f(d.achieved_beta),
        ]
    };
    match args.format.format {
        Format::Table => write_table(&mut std::io::stdout().lock(), &header, &[row(false)])?,
        Format::Csv => write_csv(&mut std::io::stdout().lock(), &header, &[row(true)])?,
        Format::Json => {
            let doc = json!({
                "schema_version": 1,
                "command": "design",
                "eta0": d.eta0,
                "eta1": d.eta1,
                "alpha": d.alpha,
                "beta": d.beta,
                "n_max": d.n_max,
                "k_star": d.k_star,
                "achieved_alpha": d.achieved_alpha,
                "achieved_beta": d.achieved_beta,
            });
            println!("{doc}");
        }
    }
    Ok(())
}

fn cmd_simulate(args: &SimulateArgs) -> Result<(), CliError> {
    let d = design_fixed_sample(args.eta0, args.eta1, args.alpha, args.beta)?;
    let sim = SimConfig::new(args.p0, args.theta_a, args.theta_b, args.seed, args.reps)?;
    let reps = simulate_trial(&d, &sim);
    let n = reps.len() as f64;
    let reject_rate = reps.iter().filter(|r| r.rejected).count() as f64 / n;
    let reject_se = (reject_rate * (1.0 - reject_rate) / n).sqrt();
    let mean_m = reps.iter().map(|r| r.m_star as f64).sum::<f64>() / n;
    let var_m = reps
        .iter()
        .map(|r| (r.m_star as f64 - mean_m).powi(2))
        .sum::<f64>()
        / (n - 1.0).max(1.0);
    let mean_m_se = (var_m / n).sqrt();
    let rejected: Vec<f64> = reps
        .iter()
        .filter(|r| r.rejected)
        .map(|r| r.m_star as f64)
        .collect();
    let mean_m_rejected = if rejected.is_empty() {
        None
    } else {
        Some(rejected.iter().sum::<f64>() / rejected.len() as f64)
    };

    let header = [
        "n_max",
        "k_star",
        "eta",
        "replications",
        "reject_rate",
        "reject_se",
        "mean_m",
        "mean_m_se",
        "mean_m_rejected",
    ];
    let row = |full: bool| -> Vec<String> {
        let f = if full { fmt_full } else { fmt4 };
        let fo = if full { fmt_full_opt } else { fmt4_opt };
        vec![
            d.n_max.to_string(),
            d.k_star.to_string(),
            f(sim.eta()),
            args.reps.to_string(),
            f(reject_rate),
            f(reject_se),
            f(mean_m),
            f(mean_m_se),
            fo(mean_m_rejected),
        ]
    };
    match args.format.format {
        Format::Table => write_table(&mut std::io::stdout().lock(), &header, &[row(false)])?,
        Format::Csv => write_csv(&mut std::io::stdout().lock(), &header, &[row(true)])?,
        Format::Json => {
            let doc = json!({
                "schema_version": 1,
                "command": "simulate",
                "design": {
                    "eta0": d.eta0,
                    "eta1": d.eta1,
                    "alpha": d.alpha,
                    "beta": d.beta,
                    "n_max": d.n_max,
                    "k_star": d.k_star,
                    "achieved_alpha": d.achieved_alpha,
                    "achieved_beta": d.achieved_beta,
                },
                "p0": sim.p0,
                "theta_a": sim.theta_a,
                "theta_b": sim.theta_b,
                "eta": sim.eta(),
                "seed": sim.seed,
                "replications": sim.replications,
                "reject_rate": reject_rate,
                "reject_se": reject_se,
                "mean_m": mean_m,
                "mean_m_se": mean_m_se,
                "mean_m_rejected": mean_m_rejected,
            });
            println!("{doc}");
        }
    }
    Ok(())
}

fn cmd_prior_solve(args: &PriorSolveArgs) -> Result<(), CliError> {
    let design = Design::new(args.z0)?;
    let spec = PriorSpec::Informative {
        epsilon: args.epsilon,
        delta: args.delta,
    };
    let p = resolve_prior(&spec, &design)?;
    let header = ["a", "b", "theta0"];
    let row = |full: bool| -> Vec<String> {
        let f = if full { fmt_full } else { fmt4 };
        vec![f(p.a), f(p.b), f(design.theta0())]
    };
    match args.format.format {
        Format::Table => write_table(&mut std::io::stdout().lock(), &header, &[row(false)])?,
        Format::Csv => write_csv(&mut std::io::stdout().lock(), &header, &[row(true)])?,
        Format::Json => {
            let doc = json!({
                "schema_version": 1,
                "command": "prior_solve",
                "z0": args.z0,
                "epsilon": args.epsilon,
                "delta": args.delta,
                "a": p.a,
                "b": p.b,
                "theta0": design.theta0(),
            });
            println!("{doc}");
        }
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Analyze(a) => cmd_analyze(a),
        Command::Hpd(a) => cmd_hpd(a),
        Command::Umpbt(a) => cmd_umpbt(a),
        Command::Design(a) => cmd_design(a),
        Command::Simulate(a) => cmd_simulate(a),
        Command::PriorSolve(a) => cmd_prior_solve(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
