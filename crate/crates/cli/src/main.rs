use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use reflr::crystal::{demazure_crystal, lr_weight, Tableau};
use reflr::hive::{enumerate_face_union, enumerate_kogan_hives, reduced_faces_for, KoganFace};
use reflr::partition::parse_partition;
use reflr::poly::{demazure_char, IntPolynomial, DEMAZURE_MAX_N};
use reflr::refined::{
    bruhat_value_table, classical_lr_oracle, refined_lr, refined_lr_all, saturation_scan, symmetry_check, Engine, EngineReport, ScanClass,
    ScanParams,
};
use reflr::{Error, Partition, Permutation};
use serde::Serialize;
use serde_json::Value;

/// Refined Littlewood-Richardson coefficients c_{λμ}^ν(w).
///
/// Permutations are one-line strings ("2413" or "2,4,1,3") and compose as
/// (u∘v)(i) = u(v(i)). Partitions are comma-separated and padded with zeros
/// to length n.
#[derive(Parser, Debug)]
#[command(name = "reflr", version)]
struct Cli {
    /// Write output here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute c_{λμ}^ν(w) with one or all engines.
    Compute(ComputeArgs),
    /// Cross-check all engines and the classical oracle over a grid.
    Verify(VerifyArgs),
    /// c_{λμ}^ν(w) for every w in S_n, with Bruhat covers.
    BruhatTable(TableArgs),
    /// Search for saturation failures.
    SaturationScan(ScanArgs),
    /// Stream the integer hives counted by the hive engine as NDJSON.
    HivePoints(HiveArgs),
    /// List the tableaux of a Demazure crystal.
    CrystalDump(CrystalArgs),
    /// Check the hive bijection behind c_{λμ}^ν(w) = c_{μλ}^ν(w⁻¹).
    SymmetryCheck(TripleArgs),
}

#[derive(Args, Debug)]
struct TripleArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    lambda: String,
    #[arg(long)]
    mu: String,
    #[arg(long)]
    nu: String,
    /// Permutation in one-line notation.
    #[arg(long)]
    w: String,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum EngineChoice {
    Demazure,
    Crystal,
    Hive,
    All,
}

impl EngineChoice {
    fn engines(self) -> Vec<Engine> {
        match self {
            EngineChoice::Demazure => vec![Engine::Demazure],
            EngineChoice::Crystal => vec![Engine::Crystal],
            EngineChoice::Hive => vec![Engine::Hive],
            EngineChoice::All => Engine::ALL.to_vec(),
        }
    }
}

#[derive(Args, Debug)]
struct ComputeArgs {
    #[command(flatten)]
    triple: TripleArgs,
    #[arg(long, value_enum, default_value = "all")]
    engine: EngineChoice,
    /// Include π_{w₀}(x^λ κ_{w,μ}) as [exponents, coefficient] pairs.
    #[arg(long)]
    dump_poly: bool,
    /// Include per-engine wall-clock times (makes output run-dependent).
    #[arg(long)]
    timings: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long)]
    n: usize,
    /// Largest part of λ and μ in the grid.
    #[arg(long, default_value_t = 2)]
    max_part: u32,
    /// Fix λ instead of ranging over the grid.
    #[arg(long)]
    lambda: Option<String>,
    /// Fix μ instead of ranging over the grid.
    #[arg(long)]
    mu: Option<String>,
    #[arg(long, value_enum, default_value = "all")]
    engine: EngineChoice,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TableFormat {
    Json,
    Csv,
    Dot,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    lambda: String,
    #[arg(long)]
    mu: String,
    #[arg(long)]
    nu: String,
    /// `all` computes the table with every engine and requires agreement.
    #[arg(long, value_enum, default_value = "crystal")]
    engine: EngineChoice,
    #[arg(long, value_enum, default_value = "json")]
    format: TableFormat,
}

#[derive(Args, Debug)]
struct ScanArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    max_part: u32,
    /// Largest dilation factor k.
    #[arg(long, default_value_t = 3)]
    kmax: u32,
    /// 312, 231, block, excluded, covered or all.
    #[arg(long, default_value = "all")]
    class: ScanClass,
    /// Worker threads (defaults to REFLR_JOBS, then the number of CPUs).
    #[arg(long, env = "REFLR_JOBS")]
    jobs: Option<usize>,
}

#[derive(Args, Debug)]
struct HiveArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    lambda: String,
    #[arg(long)]
    mu: String,
    #[arg(long)]
    nu: String,
    /// Restrict to the Kogan faces of w₀w; all hives if omitted.
    #[arg(long)]
    w: Option<String>,
}

#[derive(Args, Debug)]
struct CrystalArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    mu: String,
    #[arg(long)]
    w: String,
    /// Dump the opposite crystal B(μ,w)^op instead.
    #[arg(long)]
    opposite: bool,
    /// Annotate each element with λ + wt when its word is λ-dominant.
    #[arg(long)]
    lambda: Option<String>,
}

enum Failure {
    /// Bad input: exit code 2.
    Usage(String),
    /// A check failed or the engines disagree: exit code 1.
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::SizeMismatch { .. }
            | Error::NotPermutation { .. }
            | Error::NotPartition { .. }
            | Error::UnsupportedPattern(_)
            | Error::InvalidIndex { .. }
            | Error::NotInYoungSubgroup { .. }
            | Error::BadBlocks { .. }
            | Error::EngineLimit { .. }
            | Error::Not312Avoiding(_) => Failure::Usage(e.to_string()),
            _ => Failure::Check(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<bool, Failure>;

fn partition(s: &str, n: usize, name: &str) -> Result<Partition, Failure> {
    parse_partition(s, n).map_err(|e| Failure::Usage(format!("--{name} {s}: {e}")))
}

fn permutation(s: &str, n: usize) -> Result<Permutation, Failure> {
    let w = Permutation::parse(s).map_err(|e| Failure::Usage(format!("--w {s}: {e}")))?;
    if w.n() != n {
        return Err(Failure::Usage(format!("--w {s} is a permutation of {} letters, expected {n}", w.n())));
    }
    Ok(w)
}

fn triple(a: &TripleArgs) -> Result<(Partition, Partition, Partition, Permutation), Failure> {
    Ok((partition(&a.lambda, a.n, "lambda")?, partition(&a.mu, a.n, "mu")?, partition(&a.nu, a.n, "nu")?, permutation(&a.w, a.n)?))
}

fn emit_json(out: &mut dyn Write, value: &impl Serialize) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)
}

#[derive(Serialize)]
struct ComputeOutput<'a> {
    #[serde(flatten)]
    report: &'a EngineReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    poly: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    timings_ms: Option<Value>,
}

fn compute(args: &ComputeArgs, out: &mut dyn Write) -> Outcome {
    let (l, m, nu, w) = triple(&args.triple)?;
    if l.size() + m.size() != nu.size() {
        eprintln!("note: |λ| + |μ| = {} ≠ |ν| = {}, so the coefficient is 0", l.size() + m.size(), nu.size());
    }
    let report = refined_lr(&l, &m, &nu, &w, &args.engine.engines())?;
    let poly = if args.dump_poly {
        if w.n() > DEMAZURE_MAX_N {
            return Err(Failure::Usage(format!("--dump-poly needs n ≤ {DEMAZURE_MAX_N}")));
        }
        let product = &IntPolynomial::x_pow(l.parts()) * &demazure_char(&w, &m)?;
        Some(product.pi_w0()?.to_json())
    } else {
        None
    };
    let timings_ms = args.timings.then(|| report.timings_json());
    emit_json(out, &ComputeOutput { report: &report, poly, timings_ms })?;
    Ok(true)
}

#[derive(Serialize)]
struct Mismatch {
    lambda: Partition,
    mu: Partition,
    nu: Partition,
    w: Permutation,
    values: Vec<(String, u64)>,
}

#[derive(Serialize)]
struct VerifyReport {
    n: usize,
    max_part: u32,
    engines: Vec<Engine>,
    instances: u64,
    nonzero: u64,
    mismatches: Vec<Mismatch>,
}

fn verify(args: &VerifyArgs, out: &mut dyn Write) -> Outcome {
    let n = args.n;
    let engines = args.engine.engines();
    if engines.contains(&Engine::Demazure) && n > DEMAZURE_MAX_N {
        return Err(Error::EngineLimit { engine: "demazure", n, limit: DEMAZURE_MAX_N }.into());
    }
    let shapes = Partition::all_bounded(n, args.max_part);
    let lambdas = match &args.lambda {
        Some(s) => vec![partition(s, n, "lambda")?],
        None => shapes.clone(),
    };
    let mus = match &args.mu {
        Some(s) => vec![partition(s, n, "mu")?],
        None => shapes,
    };
    let w0 = Permutation::longest(n);
    let mut report =
        VerifyReport { n, max_part: args.max_part, engines: engines.clone(), instances: 0, nonzero: 0, mismatches: Vec::new() };
    for l in &lambdas {
        for m in &mus {
            let sum = l.add(m)?;
            for w in Permutation::all(n) {
                let maps = engines.iter().map(|&e| refined_lr_all(l, m, &w, e)).collect::<Result<Vec<_>, _>>()?;
                for nu in Partition::all_of_size(n, l.size() + m.size()) {
                    let mut values: Vec<(String, u64)> =
                        engines.iter().zip(&maps).map(|(e, map)| (e.to_string(), map.get(&nu).copied().unwrap_or(0))).collect();
                    if w == w0 {
                        values.push(("oracle".into(), classical_lr_oracle(l, m, &nu)?));
                    }
                    if w.is_identity() {
                        values.push(("delta".into(), u64::from(nu == sum)));
                    }
                    report.instances += 1;
                    report.nonzero += u64::from(values[0].1 > 0);
                    if values.iter().any(|(_, v)| *v != values[0].1) {
                        report.mismatches.push(Mismatch { lambda: l.clone(), mu: m.clone(), nu, w: w.clone(), values });
                    }
                }
            }
        }
    }
    emit_json(out, &report)?;
    Ok(report.mismatches.is_empty())
}

fn bruhat_table(args: &TableArgs, out: &mut dyn Write) -> Outcome {
    let n = args.n;
    let (l, m, nu) = (partition(&args.lambda, n, "lambda")?, partition(&args.mu, n, "mu")?, partition(&args.nu, n, "nu")?);
    let engines = args.engine.engines();
    let table = bruhat_value_table(&l, &m, &nu, engines[0])?;
    let mut agree = true;
    for &e in &engines[1..] {
        let other = bruhat_value_table(&l, &m, &nu, e)?;
        if other.values != table.values {
            agree = false;
            eprintln!("engines {} and {e} disagree on this table", engines[0]);
        }
    }
    match args.format {
        TableFormat::Json => emit_json(out, &table)?,
        TableFormat::Csv => out.write_all(table.to_csv().as_bytes())?,
        TableFormat::Dot => out.write_all(table.to_dot().as_bytes())?,
    }
    for v in &table.violations {
        eprintln!("violation: {}", serde_json::to_string(v).expect("serializable"));
    }
    Ok(agree && table.violations.is_empty())
}

fn scan(args: &ScanArgs, out: &mut dyn Write) -> Outcome {
    let params = ScanParams { n: args.n, max_part: args.max_part, kmax: args.kmax, class: args.class };
    let report = saturation_scan(params, args.jobs)?;
    emit_json(out, &report)?;
    Ok(report.violations.is_empty())
}

fn hive_points(args: &HiveArgs, out: &mut dyn Write) -> Outcome {
    let n = args.n;
    let (l, m, nu) = (partition(&args.lambda, n, "lambda")?, partition(&args.mu, n, "mu")?, partition(&args.nu, n, "nu")?);
    let hives = match &args.w {
        Some(s) => {
            let w = permutation(s, n)?;
            let faces = reduced_faces_for(&Permutation::longest(n).compose(&w)?, false);
            enumerate_face_union(&l, &m, &nu, &faces)?.into_iter().collect()
        }
        None => enumerate_kogan_hives(&l, &m, &nu, &KoganFace::empty(n, false))?,
    };
    for h in &hives {
        serde_json::to_writer(&mut *out, h).map_err(io::Error::from)?;
        writeln!(out)?;
    }
    Ok(true)
}

#[derive(Serialize)]
struct CrystalElement {
    word: String,
    tableau: Vec<Vec<u8>>,
    weight: Vec<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lr_weight: Option<Option<Vec<u32>>>,
}

#[derive(Serialize)]
struct CrystalDump {
    shape: Partition,
    w: Permutation,
    opposite: bool,
    size: usize,
    elements: Vec<CrystalElement>,
}

fn crystal_dump(args: &CrystalArgs, out: &mut dyn Write) -> Outcome {
    let n = args.n;
    let mu = partition(&args.mu, n, "mu")?;
    let w = permutation(&args.w, n)?;
    let lambda = args.lambda.as_deref().map(|s| partition(s, n, "lambda")).transpose()?;
    let b = demazure_crystal(&mu, &w, args.opposite)?;
    let elements = b
        .elements
        .iter()
        .map(|u| {
            let t = Tableau::from_reverse_row_word(n, &mu, u).expect("crystal elements are tableau words");
            CrystalElement {
                word: u.display(n),
                tableau: t.rows().to_vec(),
                weight: t.weight(),
                lr_weight: lambda.as_ref().map(|l| lr_weight(l, u)),
            }
        })
        .collect();
    emit_json(out, &CrystalDump { shape: mu, w, opposite: args.opposite, size: b.len(), elements })?;
    Ok(true)
}

fn symmetry(args: &TripleArgs, out: &mut dyn Write) -> Outcome {
    let (l, m, nu, w) = triple(args)?;
    let report = symmetry_check(&l, &m, &nu, &w)?;
    emit_json(out, &report)?;
    Ok(report.bijective && report.inverse_ok)
}

fn run(cli: &Cli) -> Outcome {
    let mut out: Box<dyn Write> = match &cli.output {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let ok = match &cli.command {
        Command::Compute(a) => compute(a, &mut out),
        Command::Verify(a) => verify(a, &mut out),
        Command::BruhatTable(a) => bruhat_table(a, &mut out),
        Command::SaturationScan(a) => scan(a, &mut out),
        Command::HivePoints(a) => hive_points(a, &mut out),
        Command::CrystalDump(a) => crystal_dump(a, &mut out),
        Command::SymmetryCheck(a) => symmetry(a, &mut out),
    }?;
    out.flush()?;
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
