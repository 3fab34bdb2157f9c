use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use knotcert::braid::{self, rewrite};
use knotcert::certify::{self, CertificateReport};
use knotcert::diagram::{self, LinkDiagram};
use knotcert::{homfly, invariants, Error};

/// Knot invariants of braid closures and pretzel knots, and certificates
/// that P(p,q,q) has no Seifert fibered surgery.
#[derive(Parser, Debug)]
#[command(name = "knotcert", version)]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Signature, determinant, genus and friends of a knot or link.
    Invariants(Input),
    /// Garside normal form of a braid.
    Nf {
        #[command(flatten)]
        braid: BraidInput,
        /// Compare with this word instead.
        #[arg(long, allow_hyphen_values = true)]
        equal: Option<String>,
    },
    /// HOMFLY polynomial of a braid closure with its MFW bound.
    Homfly(BraidInput),
    /// Certify P(p,q,q) has no Seifert fibered surgery.
    Certify {
        p: Option<i64>,
        q: Option<i64>,
        /// Run over a rectangle, e.g. `--grid 2..7 3..9`.
        #[arg(long, num_args = 2, value_names = ["P_RANGE", "Q_RANGE"])]
        grid: Option<Vec<String>>,
        /// Directory for per-cell JSON reports in grid mode.
        #[arg(long)]
        report_dir: Option<PathBuf>,
    },
    /// Randomized rewriting check of normal form and HOMFLY invariance.
    Check {
        #[arg(long, default_value_t = 200)]
        rounds: usize,
        #[arg(short = 'n', long, default_value_t = 4)]
        strands: usize,
    },
}

#[derive(Args, Debug)]
struct BraidInput {
    /// Braid word as signed generator indices, e.g. "1 -2 1".
    #[arg(long, allow_hyphen_values = true)]
    braid: String,
    /// Number of strands.
    #[arg(short = 'n', long)]
    strands: usize,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct InputSource {
    /// Braid word as signed generator indices.
    #[arg(long, allow_hyphen_values = true)]
    braid: Option<String>,
    /// Pretzel tangles, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    pretzel: Option<String>,
    /// PD code file, one `X a b c d s` line per crossing.
    #[arg(long)]
    pd: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct Input {
    #[command(flatten)]
    source: InputSource,
    /// Number of strands (braid input).
    #[arg(short = 'n', long)]
    strands: Option<usize>,
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(m) => Failure::Internal(m),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

struct Output {
    text: String,
    code: u8,
}

fn emit<T: Serialize>(json: bool, value: &T, text: String, code: u8) -> CliResult<Output> {
    let text = if json {
        serde_json::to_string_pretty(value).map_err(|e| Failure::Internal(e.to_string()))? + "\n"
    } else {
        text
    };
    Ok(Output { text, code })
}

fn parse_pretzel(s: &str) -> CliResult<Vec<i64>> {
    s.split(',')
        .enumerate()
        .map(|(i, t)| {
            t.trim()
                .parse()
                .map_err(|_| Failure::Usage(format!("pretzel entry {} ('{}') is not an integer", i + 1, t.trim())))
        })
        .collect()
}

fn load_input(input: &Input) -> CliResult<LinkDiagram> {
    let src = &input.source;
    if let Some(b) = &src.braid {
        let n = input.strands.ok_or_else(|| Failure::Usage("--braid needs -n <strands>".into()))?;
        let w = braid::parse_braid(b, n)?;
        return Ok(diagram::braid_closure(&w));
    }
    if let Some(p) = &src.pretzel {
        return Ok(diagram::pretzel_diagram(&parse_pretzel(p)?)?);
    }
    let path = src.pd.as_ref().expect("clap enforces one input");
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Ok(diagram::parse_pd(&text)?)
}

#[derive(Serialize)]
struct InvariantsReport {
    crossings: usize,
    components: usize,
    writhe: i64,
    seifert_circles: usize,
    positive: bool,
    s: Option<i64>,
    sigma: Option<i64>,
    det: Option<u64>,
    genus: Option<i64>,
    unavailable: BTreeMap<String, String>,
}

fn cmd_invariants(json: bool, input: &Input) -> CliResult<Output> {
    let d = load_input(input)?;
    let mut unavailable = BTreeMap::new();
    let s = match invariants::rasmussen_signed(&d) {
        Ok(v) => Some(v),
        Err(e) => {
            // s and g come from the same positive-diagram formula
            unavailable.insert("s".to_string(), e.to_string());
            unavailable.insert("genus".to_string(), e.to_string());
            None
        }
    };
    let genus = s.map(|s| s.abs() / 2);
    let sigma = match diagram::signature(&d) {
        Ok(v) => Some(v),
        Err(e) => {
            unavailable.insert("sigma".to_string(), e.to_string());
            None
        }
    };
    // zero for split diagrams
    let det = Some(diagram::determinant(&d));
    let rep = InvariantsReport {
        crossings: d.crossing_count(),
        components: d.component_count(),
        writhe: d.writhe(),
        seifert_circles: d.seifert_circle_count(),
        positive: d.is_positive(),
        s,
        sigma,
        det,
        genus,
        unavailable,
    };
    let show = |v: Option<String>| v.unwrap_or_else(|| "n/a".into());
    let mut text = format!(
        "crossings={} components={} writhe={} seifert_circles={} positive={}\ns={} σ={} det={} g={}\n",
        rep.crossings,
        rep.components,
        rep.writhe,
        rep.seifert_circles,
        rep.positive,
        show(rep.s.map(|v| v.to_string())),
        show(rep.sigma.map(|v| v.to_string())),
        show(rep.det.map(|v| v.to_string())),
        show(rep.genus.map(|v| v.to_string())),
    );
    for (k, why) in &rep.unavailable {
        text += &format!("{k} unavailable: {why}\n");
    }
    emit(json, &rep, text, 0)
}

fn cmd_nf(json: bool, b: &BraidInput, equal: Option<&str>) -> CliResult<Output> {
    let w = braid::parse_braid(&b.braid, b.strands)?;
    let nf = braid::normal_form(&w);
    match equal {
        None => {
            let text = format!("{nf}\ninfimum={} factors={}\n", nf.infimum, nf.factors.len());
            emit(json, &nf, text, 0)
        }
        Some(other) => {
            let w2 = braid::parse_braid(other, b.strands)?;
            let eq = braid::braids_equal(&w, &w2)?;
            let value = serde_json::json!({
                "equal": eq,
                "left": nf,
                "right": braid::normal_form(&w2),
            });
            emit(json, &value, if eq { "equal\n".into() } else { "not equal\n".into() }, 0)
        }
    }
}

fn cmd_homfly(json: bool, b: &BraidInput) -> CliResult<Output> {
    let w = braid::parse_braid(&b.braid, b.strands)?;
    let p = homfly::homfly(&w)?;
    let bound = homfly::mfw_bound(&p)?;
    let value = serde_json::json!({ "homfly": p.to_string(), "mfw_bound": bound });
    emit(json, &value, format!("{p}\nMFW bound: {bound}\n"), 0)
}

fn summarize(rep: &CertificateReport) -> String {
    let mut text = format!("{} ({:?} family)\n", rep.knot, rep.family);
    for s in &rep.slopes {
        let rules: Vec<String> = s
            .verdicts
            .iter()
            .map(|v| format!("{}:{}", v.rule, if v.is_excluded() { "excluded" } else { "inconclusive" }))
            .collect();
        text += &format!("  r={:>3}  {}\n", s.r, rules.join(" "));
    }
    text += &format!(
        "conclusion: {}\n",
        if rep.is_certified() { "certified, no Seifert fibered surgery" } else { "inconclusive" }
    );
    text
}

fn parse_range(s: &str) -> CliResult<(i64, i64)> {
    let bad = || Failure::Usage(format!("range '{s}' is not of the form a..b"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let a: i64 = a.trim().parse().map_err(|_| bad())?;
    let b: i64 = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

fn write_file(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn cmd_certify_grid(json: bool, ranges: &[String], report_dir: Option<&Path>) -> CliResult<Output> {
    let (p0, p1) = parse_range(&ranges[0])?;
    let (q0, q1) = parse_range(&ranges[1])?;
    let cells: Vec<(i64, i64)> = (p0.max(2)..=p1)
        .flat_map(|p| (q0.max(3)..=q1).filter(|q| q % 2 == 1).map(move |q| (p, q)))
        .collect();
    if cells.is_empty() {
        return Err(Failure::Usage("grid contains no valid (p, q) with p >= 2 and odd q >= 3".into()));
    }
    let reports: Vec<CertificateReport> = cells
        .par_iter()
        .map(|&(p, q)| certify::certify_no_sfs(p, q))
        .collect::<knotcert::Result<_>>()?;
    if let Some(dir) = report_dir {
        fs::create_dir_all(dir).map_err(|e| Failure::Usage(format!("{}: {e}", dir.display())))?;
        for r in &reports {
            let name = format!("P_{}_{}.json", r.parameters.p, r.parameters.q);
            let body = serde_json::to_string_pretty(r).map_err(|e| Failure::Internal(e.to_string()))?;
            write_file(&dir.join(name), &body)?;
        }
    }
    let mut text = String::from("   p    q  slopes  conclusion\n");
    let mut rows = Vec::new();
    for r in &reports {
        let c = if r.is_certified() { "certified" } else { "inconclusive" };
        text += &format!("{:>4} {:>4} {:>7}  {c}\n", r.parameters.p, r.parameters.q, r.slopes.len());
        rows.push(serde_json::json!({
            "p": r.parameters.p, "q": r.parameters.q, "slopes": r.slopes.len(), "conclusion": c,
        }));
    }
    let code = if reports.iter().all(CertificateReport::is_certified) { 0 } else { 1 };
    emit(json, &rows, text, code)
}

fn cmd_certify(json: bool, p: Option<i64>, q: Option<i64>, grid: Option<&[String]>, dir: Option<&Path>) -> CliResult<Output> {
    if let Some(g) = grid {
        if p.is_some() || q.is_some() {
            return Err(Failure::Usage("give either P Q or --grid, not both".into()));
        }
        return cmd_certify_grid(json, g, dir);
    }
    let (Some(p), Some(q)) = (p, q) else {
        return Err(Failure::Usage("certify needs P and Q (or --grid)".into()));
    };
    let rep = certify::certify_no_sfs(p, q)?;
    let code = if rep.is_certified() { 0 } else { 1 };
    emit(json, &rep, summarize(&rep), code)
}

fn cmd_check(json: bool, seed: u64, rounds: usize, strands: usize) -> CliResult<Output> {
    if !(2..=homfly::MAX_STRANDS).contains(&strands) {
        return Err(Failure::Usage(format!("strands must be in 2..={}", homfly::MAX_STRANDS)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for i in 0..rounds {
        let w = rewrite::random_word(strands, 8, &mut rng);
        let w2 = rewrite::random_rewrite(&w, 6, &mut rng);
        let same_nf = braid::normal_form(&w) == braid::normal_form(&w2);
        let same_homfly = homfly::homfly(&w)? == homfly::homfly(&w2)?;
        if !(same_nf && same_homfly) {
            failures.push(format!("round {i}: [{w}] vs [{w2}]"));
        }
    }
    let value = serde_json::json!({ "seed": seed, "rounds": rounds, "failures": failures });
    let text = if failures.is_empty() {
        format!("{rounds} rewrites checked (seed {seed}): normal form and HOMFLY preserved\n")
    } else {
        failures.join("\n") + "\n"
    };
    let code = if failures.is_empty() { 0 } else { 3 };
    emit(json, &value, text, code)
}

fn run(cli: &Cli) -> CliResult<Output> {
    match &cli.command {
        Command::Invariants(input) => cmd_invariants(cli.json, input),
        Command::Nf { braid, equal } => cmd_nf(cli.json, braid, equal.as_deref()),
        Command::Homfly(b) => cmd_homfly(cli.json, b),
        Command::Certify { p, q, grid, report_dir } => {
            cmd_certify(cli.json, *p, *q, grid.as_deref(), report_dir.as_deref())
        }
        Command::Check { rounds, strands } => cmd_check(cli.json, cli.seed, *rounds, *strands),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if let Some(path) = &cli.out {
                if let Err(Failure::Usage(m)) = write_file(path, &out.text) {
                    eprintln!("error: {m}");
                    return ExitCode::from(2);
                }
            } else {
                print!("{}", out.text);
            }
            ExitCode::from(out.code)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(m)) => {
            eprintln!("internal error: {m}");
            ExitCode::from(3)
        }
    }
}
