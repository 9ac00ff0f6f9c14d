//! ridgelab CLI: entropy brackets, sampler runs, fooling certificates, rate
//! fits, and tractability classification. All outputs are deterministic in
//! (arguments, seed); exit code 0 on pass, 2 on acceptance failure, 1 on
//! usage or runtime errors.

use clap::{Args, Parser, Subcommand};
use ridgelab::adversary::{certify_lower_bound, CertStatus, DirectionSet};
use ridgelab::algorithms::{
    cover_sampler_with_budget, run_sampler, taylor_at_zero_sampler,
    taylor_cover_sampler_with_budget, two_step_sampler, AdaptiveSampler, SmoothnessRule,
};
use ridgelab::classes::{
    catalog_profile, parse_profile_id, profile_id, Alpha, ClassSpec, RidgeFunction,
};
use ridgelab::geometry::{entropy_estimate, NormSpec, Target};
use ridgelab::harness::{
    rate_fit, run_experiment, sup_error_estimate, tractability_classify, ExperimentConfig,
    FieldRef, SamplerKind,
};
use serde::Serialize;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "ridgelab", version, about = "ridge function sampling laboratory")]
struct Cli {
    /// RNG seed shared by all randomized components
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// directory for output files (stdout always carries the JSON)
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Numerical entropy-number bracket plus the closed-form envelope
    Entropy(EntropyArgs),
    /// Run a sampler on catalog profiles (single cell, or an experiment via --config)
    Run(RunArgs),
    /// Replay a sampler against a fooling adversary and certify the lower bound
    Certify(CertifyArgs),
    /// Fit a log-log rate to a CSV produced by `run`
    Rates(RatesArgs),
    /// Tractability classification from (alpha, p, kappa)
    Tractability(TractabilityArgs),
}

#[derive(Args)]
struct EntropyArgs {
    /// ball | sphere | sparse
    #[arg(long)]
    target: String,
    #[arg(long, default_value_t = 2.0)]
    p: f64,
    /// norm exponent of the ambient space
    #[arg(long, default_value_t = 2.0)]
    q: f64,
    #[arg(long)]
    d: usize,
    #[arg(long)]
    k: usize,
    /// sparsity for --target sparse
    #[arg(long)]
    m: Option<usize>,
}

#[derive(Args)]
struct RunArgs {
    /// JSON experiment config; overrides the inline flags
    #[arg(long)]
    config: Option<PathBuf>,
    /// cover | taylor | two-step | taylor-zero
    #[arg(long)]
    sampler: Option<String>,
    /// smoothness order, or `inf`
    #[arg(long)]
    alpha: Option<String>,
    #[arg(long, default_value_t = 2.0)]
    p: f64,
    #[arg(long, default_value_t = 0.0)]
    kappa: f64,
    #[arg(long)]
    d: Option<usize>,
    /// query budget (cover/taylor/two-step)
    #[arg(long)]
    n: Option<usize>,
    /// target accuracy (taylor-zero)
    #[arg(long)]
    eps: Option<f64>,
    /// catalog profile id, e.g. `fooling:anorm=1,eps=0.5`
    #[arg(long, default_value = "sine")]
    profile: String,
    #[arg(long, default_value_t = 2000)]
    grid_budget: usize,
}

#[derive(Args)]
struct CertifyArgs {
    /// cover | taylor
    #[arg(long)]
    sampler: String,
    /// canonical | sparse:M | explicit:FILE
    #[arg(long, default_value = "canonical")]
    dirs: String,
    #[arg(long)]
    alpha: f64,
    #[arg(long, default_value_t = 2.0)]
    p: f64,
    #[arg(long)]
    d: usize,
    /// sampler query budget (also sets the certificate scale k = ⌈log₂n⌉+1)
    #[arg(long)]
    n: usize,
    /// override the fooling radius
    #[arg(long)]
    eps: Option<f64>,
    #[arg(long, default_value_t = 1e-3)]
    tol: f64,
}

#[derive(Args)]
struct RatesArgs {
    /// CSV with the `n,...,error` schema written by `run`
    #[arg(long)]
    input: PathBuf,
    /// abscissa: n | n-d
    #[arg(long, default_value = "n")]
    x: String,
    /// acceptance window for the fitted slope
    #[arg(long, allow_negative_numbers = true)]
    slope_min: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    slope_max: Option<f64>,
}

#[derive(Args)]
struct TractabilityArgs {
    /// smoothness order, or `inf`
    #[arg(long)]
    alpha: String,
    #[arg(long)]
    p: f64,
    #[arg(long, default_value_t = 0.0)]
    kappa: f64,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap's help/version paths are not usage errors
            if e.use_stderr() {
                eprintln!("{e}");
                return ExitCode::from(1);
            }
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    match dispatch(&cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn dispatch(cli: &Cli) -> Result<ExitCode, String> {
    match &cli.command {
        Command::Entropy(args) => entropy_cmd(cli, args),
        Command::Run(args) => run_cmd(cli, args),
        Command::Certify(args) => certify_cmd(cli, args),
        Command::Rates(args) => rates_cmd(cli, args),
        Command::Tractability(args) => tractability_cmd(cli, args),
    }
}

fn parse_alpha(text: &str) -> Result<Alpha<f64>, String> {
    if text == "inf" || text == "infinity" {
        return Ok(Alpha::Infinite);
    }
    text.parse::<f64>()
        .map(Alpha::Finite)
        .map_err(|_| format!("alpha must be a number or `inf`, got `{text}`"))
}

fn emit<T: Serialize>(cli: &Cli, value: &T, file_name: &str) -> Result<(), String> {
    let mut bytes = serde_json::to_vec_pretty(value).map_err(|e| e.to_string())?;
    bytes.push(b'\n');
    print!("{}", String::from_utf8_lossy(&bytes));
    if let Some(dir) = &cli.out {
        write_file(dir, file_name, &bytes)?;
    }
    Ok(())
}

fn write_file(dir: &Path, name: &str, bytes: &[u8]) -> Result<(), String> {
    std::fs::create_dir_all(dir).map_err(|e| e.to_string())?;
    std::fs::write(dir.join(name), bytes).map_err(|e| e.to_string())
}

// ---------------------------------------------------------------------------
// entropy
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct EntropyOutput {
    target: String,
    p: f64,
    q: f64,
    d: usize,
    k: usize,
    m: Option<usize>,
    seed: u64,
    lower: f64,
    upper: f64,
    formula_value: Option<f64>,
}

fn entropy_cmd(cli: &Cli, args: &EntropyArgs) -> Result<ExitCode, String> {
    let target = match args.target.as_str() {
        "ball" => Target::Ball {
            p: args.p,
            radius: 1.0,
            d: args.d,
        },
        "sphere" => Target::Sphere {
            p: args.p,
            d: args.d,
        },
        "sparse" => Target::SparseSphere {
            m: args
                .m
                .ok_or_else(|| "--target sparse needs --m".to_string())?,
            p: args.p,
            d: args.d,
        },
        other => return Err(format!("unknown target `{other}`")),
    };
    let norm = NormSpec::new(args.q).map_err(|e| e.to_string())?;
    let est = entropy_estimate(&target, args.k, norm, cli.seed).map_err(|e| e.to_string())?;
    let output = EntropyOutput {
        target: args.target.clone(),
        p: args.p,
        q: args.q,
        d: args.d,
        k: args.k,
        m: args.m,
        seed: cli.seed,
        lower: est.lower,
        upper: est.upper,
        formula_value: est.formula_value,
    };
    emit(cli, &output, "entropy.json")?;
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// run
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct RunOutput {
    sampler: String,
    profile_id: String,
    d: usize,
    alpha: String,
    p: f64,
    kappa: f64,
    n: usize,
    seed: u64,
    queries_used: usize,
    sup_error_estimate: f64,
    audited_points: usize,
    provenance_file: Option<String>,
}

fn run_cmd(cli: &Cli, args: &RunArgs) -> Result<ExitCode, String> {
    if let Some(path) = &args.config {
        let text = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
        let mut config: ExperimentConfig =
            serde_json::from_str(&text).map_err(|e| e.to_string())?;
        config.seed = cli.seed;
        let report = run_experiment(&config).map_err(|e| e.to_string())?;
        let json = report.json_bytes().map_err(|e| e.to_string())?;
        print!("{}", String::from_utf8_lossy(&json));
        if let Some(dir) = &cli.out {
            write_file(dir, "summary.json", &json)?;
            write_file(
                dir,
                "report.csv",
                &report.csv_bytes().map_err(|e| e.to_string())?,
            )?;
        }
        return Ok(ExitCode::SUCCESS);
    }

    let kind = SamplerKind::parse(args.sampler.as_deref().ok_or("missing --sampler")?)
        .map_err(|e| e.to_string())?;
    let alpha = parse_alpha(args.alpha.as_deref().ok_or("missing --alpha")?)?;
    let d = args.d.ok_or("missing --d")?;
    let spec = ClassSpec::new(alpha, args.p, args.kappa, d).map_err(|e| e.to_string())?;

    let sampler: Box<dyn AdaptiveSampler<f64>> = match kind {
        SamplerKind::Cover => Box::new(
            cover_sampler_with_budget(&spec, args.n.ok_or("missing --n")?)
                .map_err(|e| e.to_string())?
                .0,
        ),
        SamplerKind::Taylor => Box::new(
            taylor_cover_sampler_with_budget(&spec, args.n.ok_or("missing --n")?)
                .map_err(|e| e.to_string())?
                .0,
        ),
        SamplerKind::TwoStep => Box::new(
            two_step_sampler(&spec, args.n.ok_or("missing --n")?).map_err(|e| e.to_string())?,
        ),
        SamplerKind::TaylorZero => Box::new(
            taylor_at_zero_sampler(
                &spec,
                args.eps.ok_or("taylor-zero needs --eps")?,
                SmoothnessRule::Ridge,
            )
            .map_err(|e| e.to_string())?,
        ),
    };

    let profile_kind = parse_profile_id(&args.profile, &spec).map_err(|e| e.to_string())?;
    let profile = catalog_profile(&profile_kind, &spec).map_err(|e| e.to_string())?;
    let mut e1 = vec![0.0; d];
    e1[0] = 1.0;
    let ridge = RidgeFunction::validated(e1, profile, &spec).map_err(|e| e.to_string())?;
    let eval = |x: &[f64]| ridge.eval_unchecked(x);
    let run = run_sampler(sampler.as_ref(), &eval).map_err(|e| e.to_string())?;
    let approx = run.approximant;
    let approx_eval = |x: &[f64]| approx.eval(x);
    let mut dirs = vec![FieldRef::direction_of(&ridge)];
    dirs.extend(FieldRef::directions_of(&approx));
    let estimate = sup_error_estimate(
        &FieldRef::with_directions(&eval, dirs),
        &FieldRef::plain(&approx_eval),
        d,
        args.grid_budget,
        cli.seed,
    );

    let provenance_file = if let Some(dir) = &cli.out {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["index", "point", "value"])
            .map_err(|e| e.to_string())?;
        for (i, (p, v)) in run.log.points.iter().zip(&run.log.values).enumerate() {
            let coords: Vec<String> = p.iter().map(|c| c.to_string()).collect();
            w.write_record([i.to_string(), coords.join(";"), v.to_string()])
                .map_err(|e| e.to_string())?;
        }
        let bytes = w.into_inner().map_err(|e| e.to_string())?;
        write_file(dir, "provenance.csv", &bytes)?;
        Some(dir.join("provenance.csv").display().to_string())
    } else {
        None
    };

    let output = RunOutput {
        sampler: kind.as_str().into(),
        profile_id: profile_id(&profile_kind),
        d,
        alpha: args.alpha.clone().unwrap_or_default(),
        p: args.p,
        kappa: args.kappa,
        n: sampler.budget(),
        seed: cli.seed,
        queries_used: run.log.len(),
        sup_error_estimate: estimate.value,
        audited_points: estimate.points_audited,
        provenance_file,
    };
    emit(cli, &output, "run.json")?;
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// certify
// ---------------------------------------------------------------------------

fn certify_cmd(cli: &Cli, args: &CertifyArgs) -> Result<ExitCode, String> {
    let spec = ClassSpec::new(Alpha::Finite(args.alpha), args.p, 0.0, args.d)
        .map_err(|e| e.to_string())?;
    let sampler: Box<dyn AdaptiveSampler<f64>> = match args.sampler.as_str() {
        "cover" => Box::new(
            cover_sampler_with_budget(&spec, args.n)
                .map_err(|e| e.to_string())?
                .0,
        ),
        "taylor" => Box::new(
            taylor_cover_sampler_with_budget(&spec, args.n)
                .map_err(|e| e.to_string())?
                .0,
        ),
        other => return Err(format!("cannot certify sampler `{other}`")),
    };
    let dirs = parse_dirs(&args.dirs, args.d, args.p, cli.seed)?;
    let eps = match args.eps {
        Some(e) => Some(e),
        None => ridgelab::adversary::default_certificate_eps(&dirs, args.n),
    };
    let cert = certify_lower_bound(sampler.as_ref(), &dirs, &spec, eps, cli.seed, args.tol)
        .map_err(|e| e.to_string())?;
    emit(cli, &cert, "certificate.json")?;
    Ok(match cert.status {
        CertStatus::Pass => ExitCode::SUCCESS,
        _ => ExitCode::from(2),
    })
}

fn parse_dirs(text: &str, d: usize, p: f64, seed: u64) -> Result<DirectionSet<f64>, String> {
    if text == "canonical" {
        return Ok(DirectionSet::canonical(d, p));
    }
    if let Some(m) = text.strip_prefix("sparse:") {
        let m: usize = m.parse().map_err(|_| "sparse:M needs an integer M")?;
        return DirectionSet::sparse(d, m, p, seed, 50_000).map_err(|e| e.to_string());
    }
    if let Some(path) = text.strip_prefix("explicit:") {
        let text = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
        let members: Vec<Vec<f64>> = serde_json::from_str(&text).map_err(|e| e.to_string())?;
        return DirectionSet::explicit(members, p).map_err(|e| e.to_string());
    }
    Err(format!("unknown direction set `{text}`"))
}

// ---------------------------------------------------------------------------
// rates
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct RatesOutput {
    input: String,
    x: String,
    pairs: Vec<(f64, f64)>,
    slope: f64,
    intercept: f64,
    residual: f64,
    within_expectation: Option<bool>,
}

fn rates_cmd(cli: &Cli, args: &RatesArgs) -> Result<ExitCode, String> {
    let mut reader = csv::Reader::from_path(&args.input).map_err(|e| e.to_string())?;
    let headers = reader.headers().map_err(|e| e.to_string())?.clone();
    let idx = |name: &str| {
        headers
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| format!("input CSV lacks a `{name}` column"))
    };
    let (ni, ei, di) = (idx("n")?, idx("error")?, idx("d")?);
    let mut worst: Vec<(usize, usize, f64)> = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| e.to_string())?;
        let n: usize = record[ni].parse().map_err(|_| "bad n value")?;
        let d: usize = record[di].parse().map_err(|_| "bad d value")?;
        let e: f64 = record[ei].parse().map_err(|_| "bad error value")?;
        match worst.iter_mut().find(|(wn, _, _)| *wn == n) {
            Some((_, _, we)) => *we = we.max(e),
            None => worst.push((n, d, e)),
        }
    }
    worst.sort_by_key(|(n, _, _)| *n);
    let pairs: Vec<(f64, f64)> = worst
        .iter()
        .filter(|(n, d, _)| args.x != "n-d" || n > d)
        .map(|(n, d, e)| {
            let x = if args.x == "n-d" {
                (n - d) as f64
            } else {
                *n as f64
            };
            (x, *e)
        })
        .collect();
    let fit = rate_fit(&pairs).map_err(|e| e.to_string())?;
    let within = match (args.slope_min, args.slope_max) {
        (None, None) => None,
        (lo, hi) => {
            Some(lo.map_or(true, |lo| fit.slope >= lo) && hi.map_or(true, |hi| fit.slope <= hi))
        }
    };
    let output = RatesOutput {
        input: args.input.display().to_string(),
        x: args.x.clone(),
        pairs,
        slope: fit.slope,
        intercept: fit.intercept,
        residual: fit.residual,
        within_expectation: within,
    };
    emit(cli, &output, "rates.json")?;
    Ok(match within {
        Some(false) => ExitCode::from(2),
        _ => ExitCode::SUCCESS,
    })
}

// ---------------------------------------------------------------------------
// tractability
// ---------------------------------------------------------------------------

fn tractability_cmd(cli: &Cli, args: &TractabilityArgs) -> Result<ExitCode, String> {
    let alpha = parse_alpha(&args.alpha)?;
    let verdict = tractability_classify(alpha, args.p, args.kappa).map_err(|e| e.to_string())?;
    emit(cli, &verdict, "tractability.json")?;
    Ok(ExitCode::SUCCESS)
}
