use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use coaxal_cli::centers::centers_json;
use coaxal_cli::figure::{self, FigureId, FigureInputs};
use coaxal_cli::heronian::{generate_heronian, HeronianGenerator};
use coaxal_cli::parse::{self, PointArg};
use coaxal_cli::verify::{self, TriangleSource, VerifyConfig, VerifyError, DEFAULT_TRIALS};
use coaxal_core::centers::{CenterId, KParam};
use coaxal_core::scalar::{convert, set_float_tolerance};
use coaxal_core::{Backend, CheckId, Exact, ExactTriangle, GeomError, Scalar, TriangleMetric};

#[derive(Parser)]
#[command(name = "coaxal", version, about = "Coaxal circle pencils in barycentric coordinates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print named centers, the Q(k) family and the conic (IG)*.
    Centers {
        #[command(flatten)]
        tri: TriangleArgs,
        #[arg(long, value_parser = parse_center)]
        center: Option<CenterId>,
        /// Parameter of the Q(k) family; repeatable.
        #[arg(long, value_parser = parse::k_param)]
        k: Vec<KParam<Exact>>,
    },
    /// Run a check over generated instances.
    Verify {
        check: String,
        #[command(flatten)]
        tri: TriangleArgs,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_parser = parse::point)]
        p: Option<coaxal_core::ExactPoint>,
        #[arg(long, value_parser = parse::point)]
        q: Option<coaxal_core::ExactPoint>,
        #[arg(long, value_parser = parse::scalar)]
        q_on_conic: Option<Exact>,
        #[arg(long, value_parser = parse::k_param)]
        k: Option<KParam<Exact>>,
        /// Draw random float triangles instead of Heronian ones.
        #[arg(long)]
        random_float: bool,
        /// Print the full JSON report (default: one line per failing trial).
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write an SVG figure.
    Figure {
        figure: String,
        #[command(flatten)]
        tri: TriangleArgs,
        #[arg(long, value_parser = parse::point_arg)]
        p: Option<PointArg>,
        #[arg(long, value_parser = parse::point_arg)]
        q: Option<PointArg>,
        #[arg(long, value_parser = parse::scalar)]
        q_on_conic: Option<Exact>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List scalene Heronian triangles.
    Generate {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct TriangleArgs {
    #[arg(long, value_parser = parse::sides, conflicts_with = "heronian_seed")]
    sides: Option<[Exact; 3]>,
    #[arg(long)]
    heronian_seed: Option<u64>,
    #[arg(long, value_enum, default_value_t = BackendArg::Exact)]
    backend: BackendArg,
    /// Relative tolerance of the float backend.
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum BackendArg {
    Exact,
    Float,
}

impl From<BackendArg> for Backend {
    fn from(b: BackendArg) -> Self {
        match b {
            BackendArg::Exact => Backend::Exact,
            BackendArg::Float => Backend::Float,
        }
    }
}

fn parse_center(s: &str) -> Result<CenterId, String> {
    CenterId::parse(s).ok_or_else(|| format!("unknown center: {s:?}"))
}

/// Exit status 2 with a diagnostic.
struct Usage(String);

impl From<GeomError> for Usage {
    fn from(e: GeomError) -> Self {
        Usage(e.to_string())
    }
}

impl From<std::io::Error> for Usage {
    fn from(e: std::io::Error) -> Self {
        Usage(e.to_string())
    }
}

impl TriangleArgs {
    fn apply_tolerance(&self) {
        if let Some(tol) = self.tol {
            set_float_tolerance(tol);
        }
    }

    /// The explicit triangle, or the first of the seeded Heronian pool.
    fn triangle(&self) -> Result<ExactTriangle, GeomError> {
        match &self.sides {
            Some(s) => ExactTriangle::from_sides(s[0].clone(), s[1].clone(), s[2].clone()),
            None => {
                let s = HeronianGenerator::new(self.heronian_seed.unwrap_or(0)).get(0);
                ExactTriangle::from_int_sides(s[0], s[1], s[2])
            }
        }
    }
}

fn write_out(out: &Option<PathBuf>, text: &str) -> Result<(), Usage> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn float_k(k: &KParam<Exact>) -> KParam<f64> {
    match k {
        KParam::Finite(x) => KParam::Finite(convert(x)),
        KParam::Infinity => KParam::Infinity,
    }
}

fn cmd_centers(tri: &TriangleArgs, center: Option<CenterId>, ks: &[KParam<Exact>]) -> Result<ExitCode, Usage> {
    tri.apply_tolerance();
    let t = tri.triangle()?;
    let v = match Backend::from(tri.backend) {
        Backend::Exact => centers_json(&t, center, ks)?,
        Backend::Float => {
            let ks: Vec<_> = ks.iter().map(float_k).collect();
            centers_json(&t.cast::<f64>()?, center, &ks)?
        }
    };
    println!("{}", serde_json::to_string_pretty(&v).expect("json"));
    Ok(ExitCode::SUCCESS)
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    check: &str,
    tri: &TriangleArgs,
    trials: usize,
    seed: u64,
    p: Option<coaxal_core::ExactPoint>,
    q: Option<coaxal_core::ExactPoint>,
    q_on_conic: Option<Exact>,
    k: Option<KParam<Exact>>,
    random_float: bool,
    json: bool,
    out: &Option<PathBuf>,
) -> Result<ExitCode, Usage> {
    let check = CheckId::parse(check).ok_or_else(|| Usage(format!("unknown check id: {check:?}")))?;
    if trials == 0 {
        return Err(Usage("--trials must be at least 1".into()));
    }
    tri.apply_tolerance();
    let mut cfg = VerifyConfig::new(check, seed);
    cfg.source = match (&tri.sides, tri.heronian_seed, random_float) {
        (Some(s), _, _) => TriangleSource::Sides(s.clone()),
        (None, _, true) => TriangleSource::RandomFloat,
        (None, h, false) => TriangleSource::Heronian(h.unwrap_or(seed)),
    };
    cfg.backend = if random_float { Backend::Float } else { tri.backend.into() };
    cfg.trials = trials;
    cfg.p = p;
    cfg.q = q;
    cfg.q_on_conic = q_on_conic;
    cfg.k = k;
    let output = verify::run(&cfg).map_err(|e| match e {
        VerifyError::Precondition(g) => Usage(g.to_string()),
        VerifyError::Config(s) => Usage(s),
    })?;
    if json || out.is_some() {
        write_out(out, &(output.to_json() + "\n"))?;
    }
    if !json {
        for r in output.failures() {
            eprintln!("trial {} {:?}: failed {}", r.trial, r.triangle, r.failed_subs().join(", "));
        }
        eprintln!(
            "{} {}: {}/{} trials passed",
            output.check_id,
            output.backend,
            output.reports.iter().filter(|r| r.passed()).count(),
            output.trials
        );
    }
    Ok(if output.passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn render_figure<S: Scalar>(
    id: FigureId,
    t: &TriangleMetric<S>,
    p: &Option<PointArg>,
    q: &Option<PointArg>,
    q_on_conic: &Option<Exact>,
) -> Result<String, GeomError> {
    let inputs = FigureInputs {
        p: p.as_ref().map(|p| p.resolve(t)).transpose()?,
        q: q.as_ref().map(|q| q.resolve(t)).transpose()?,
        q_on_conic: q_on_conic.as_ref().map(convert),
    };
    figure::render(id, t, &inputs)
}

fn cmd_figure(
    name: &str,
    tri: &TriangleArgs,
    p: &Option<PointArg>,
    q: &Option<PointArg>,
    q_on_conic: &Option<Exact>,
    out: &Option<PathBuf>,
) -> Result<ExitCode, Usage> {
    let id = FigureId::parse(name).ok_or_else(|| Usage(format!("unknown figure id: {name:?}")))?;
    tri.apply_tolerance();
    let t = tri.triangle()?;
    let svg = match Backend::from(tri.backend) {
        Backend::Exact => render_figure(id, &t, p, q, q_on_conic)?,
        Backend::Float => render_figure(id, &t.cast::<f64>()?, p, q, q_on_conic)?,
    };
    write_out(out, &svg)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_generate(seed: u64, n: usize, json: bool) -> Result<ExitCode, Usage> {
    if n == 0 {
        return Err(Usage("--n must be at least 1".into()));
    }
    let ts = generate_heronian(seed, n);
    if json {
        println!("{}", serde_json::to_string_pretty(&ts).expect("json"));
    } else {
        for [a, b, c] in ts {
            let area = ExactTriangle::from_int_sides(a, b, c)?.area()?;
            println!("{a},{b},{c}\tarea {area}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    let result = match cli.command {
        Command::Centers { tri, center, k } => cmd_centers(&tri, center, &k),
        Command::Verify { check, tri, trials, seed, p, q, q_on_conic, k, random_float, json, out } => {
            cmd_verify(&check, &tri, trials, seed, p, q, q_on_conic, k, random_float, json, &out)
        }
        Command::Figure { figure, tri, p, q, q_on_conic, out } => cmd_figure(&figure, &tri, &p, &q, &q_on_conic, &out),
        Command::Generate { seed, n, json } => cmd_generate(seed, n, json),
    };
    match result {
        Ok(code) => code,
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
