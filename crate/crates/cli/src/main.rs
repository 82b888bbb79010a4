use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use schubitope::combinatorics::{
    criterion_check, rothe_diagram, skyline_diagram, theta_column, CriterionMode,
};
use schubitope::ehrhart::{
    base_polytope_ehrhart, ehrhart_factorization_check, schubitope_ehrhart,
    spanning_polytope_ehrhart,
};
use schubitope::poly::{grothendieck, key, schubert};
use schubitope::polytope::{
    column_base_factors, dilated_minkowski_points, gp_certificate, hull_lattice_points,
    lattice_free_check, support_points, support_property_checks, vertices, Schubitope,
};
use schubitope::verify::{
    verify_grothendieck_suite, verify_key_suite, verify_schubert_suite,
    verify_schubitope_criterion, DiagramCorpus, Report, SuiteOptions, DEFAULT_RANDOM_DIAGRAMS,
};
use schubitope::{Composition, Diagram, Error, Permutation, SchubertMatroid, Subset};

/// Schubitopes, Newton polytopes of Schubert, Grothendieck and key
/// polynomials, and their lattice-freeness.
#[derive(Parser)]
#[command(name = "schubitope", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a diagram and report its movable intervals.
    Diagram {
        #[command(subcommand)]
        source: DiagramSource,
    },
    /// θ_D(I) for one row set, or for every row set when `--rows` is omitted.
    Theta {
        #[command(flatten)]
        input: DiagramInput,
        /// Comma-separated rows, e.g. `1,3`.
        #[arg(long)]
        rows: Option<String>,
    },
    /// Lattice points of t·S_D from the inequalities and from the column Minkowski sum.
    Points {
        #[command(flatten)]
        input: DiagramInput,
        #[arg(long, default_value_t = 1)]
        t: u64,
    },
    /// Lattice-freeness verdict of S_D with the movable-interval criterion.
    LatticeFree {
        #[command(flatten)]
        input: DiagramInput,
        #[arg(long, default_value = "at-most-one")]
        mode: CriterionMode,
    },
    /// Ehrhart polynomial of S_D, or of one column matroid polytope with `--column`.
    Ehrhart {
        #[command(flatten)]
        input: DiagramInput,
        /// Defining set of a single Schubert matroid SM_n(S).
        #[arg(long, requires = "n", conflicts_with_all = ["diagram", "perm", "comp"])]
        column: Option<String>,
        /// With `--column`, use the spanning-set polytope instead of the base polytope.
        #[arg(long, requires = "column")]
        spanning: bool,
    },
    /// A Schubert, Grothendieck or key polynomial.
    Poly {
        family: Family,
        #[command(flatten)]
        input: PolyInput,
    },
    /// Support, Newton polytope lattice points and structural checks of a polynomial.
    Newton {
        family: Family,
        #[command(flatten)]
        input: PolyInput,
    },
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Bases or spanning sets of SM_n(S).
    Matroid {
        what: MatroidDump,
        /// Defining set S, e.g. `1,3`.
        #[arg(long)]
        set: String,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum DiagramSource {
    /// Rothe diagram of a permutation.
    Rothe {
        #[arg(long)]
        perm: Permutation,
    },
    /// Skyline diagram of a composition.
    Skyline {
        #[arg(long)]
        comp: Composition,
    },
    /// Columns separated by `;`, rows by `,`.
    Parse {
        #[arg(long)]
        diagram: String,
        #[arg(long)]
        n: Option<usize>,
    },
}

#[derive(Args)]
struct DiagramInput {
    /// Columns separated by `;`, rows by `,`, e.g. `1,3;2,3;1`.
    #[arg(long, conflicts_with_all = ["perm", "comp"])]
    diagram: Option<String>,
    /// Grid size; inferred from the diagram when omitted.
    #[arg(long)]
    n: Option<usize>,
    /// Use the Rothe diagram of this permutation.
    #[arg(long, conflicts_with = "comp")]
    perm: Option<Permutation>,
    /// Use the skyline diagram of this composition.
    #[arg(long)]
    comp: Option<Composition>,
}

impl DiagramInput {
    fn given(&self) -> bool {
        self.diagram.is_some() || self.perm.is_some() || self.comp.is_some()
    }

    fn resolve(&self) -> Result<Diagram, Error> {
        match (&self.diagram, &self.perm, &self.comp) {
            (Some(text), None, None) => parse_diagram(text, self.n),
            (None, Some(w), None) => Ok(rothe_diagram(w)),
            (None, None, Some(a)) => skyline_diagram(a),
            _ => Err(Error::InvalidArgument(
                "give exactly one of --diagram, --perm, --comp".into(),
            )),
        }
    }
}

#[derive(Args)]
struct PolyInput {
    #[arg(long, conflicts_with = "comp")]
    perm: Option<Permutation>,
    #[arg(long)]
    comp: Option<Composition>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Schubert,
    Grothendieck,
    Key,
}

#[derive(Clone, Copy, ValueEnum)]
enum MatroidDump {
    Bases,
    SpanningSets,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Criterion,
    Schubert,
    Grothendieck,
    Key,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct VerifyArgs {
    suite: Suite,
    /// Permutation size for the schubert and grothendieck suites.
    #[arg(long)]
    n: Option<usize>,
    /// Use the larger default corpus (S_6 for schubert, S_5 for grothendieck).
    #[arg(long)]
    large: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of random diagrams in the criterion corpus.
    #[arg(long, default_value_t = DEFAULT_RANDOM_DIAGRAMS)]
    random: usize,
    #[arg(long, default_value_t = 3)]
    max_part: usize,
    #[arg(long, default_value_t = 4)]
    max_len: usize,
    /// Stop at the first failing instance.
    #[arg(long)]
    fail_fast: bool,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long)]
    jobs: Option<usize>,
    /// Run only the instance with this key.
    #[arg(long)]
    only: Option<String>,
    /// Report file; defaults to `<output-dir>/<suite>.<format>`, else stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Directory for reports when `--output` is not given.
    #[arg(long, env = "SCHUBITOPE_OUTPUT_DIR")]
    output_dir: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Record wall time in the report (makes reports differ between runs).
    #[arg(long)]
    timing: bool,
}

fn parse_diagram(text: &str, n: Option<usize>) -> Result<Diagram, Error> {
    let n = match n {
        Some(n) => n,
        None => {
            let columns = text.split(';').count();
            let max_row = text
                .split([';', ','])
                .filter(|s| !s.trim().is_empty())
                .map(|s| {
                    s.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad row {s:?} in diagram {text:?}")))
                })
                .try_fold(0, |acc, r| r.map(|r| acc.max(r)))?;
            columns.max(max_row)
        }
    };
    Diagram::parse(text, n)
}

fn diagram_json(d: &Diagram) -> Value {
    json!({
        "n": d.n(),
        "diagram": d.to_string(),
        "columns": d.columns(),
        "boxes": d.box_count(),
        "movable_intervals": d.movable_intervals(),
    })
}

fn polynomial_input(
    family: Family,
    input: &PolyInput,
) -> Result<(String, schubitope::Polynomial), Error> {
    match (family, &input.perm, &input.comp) {
        (Family::Schubert, Some(w), None) => Ok((w.to_string(), (*schubert(w)).clone())),
        (Family::Grothendieck, Some(w), None) => Ok((w.to_string(), (*grothendieck(w)).clone())),
        (Family::Key, None, Some(a)) => Ok((a.to_string(), (*key(a)).clone())),
        (Family::Key, _, _) => Err(Error::InvalidArgument("key needs --comp".into())),
        _ => Err(Error::InvalidArgument(
            "schubert and grothendieck need --perm".into(),
        )),
    }
}

fn run(cli: Cli) -> Result<(Value, bool), Error> {
    let doc = match cli.command {
        Command::Diagram { source } => {
            let d = match source {
                DiagramSource::Rothe { perm } => rothe_diagram(&perm),
                DiagramSource::Skyline { comp } => skyline_diagram(&comp)?,
                DiagramSource::Parse { diagram, n } => parse_diagram(&diagram, n)?,
            };
            diagram_json(&d)
        }
        Command::Theta { input, rows } => {
            let d = input.resolve()?;
            let entry = |rows: Subset| {
                let words: Vec<String> = d
                    .columns()
                    .iter()
                    .map(|&c| theta_column(c, rows, d.n()).word)
                    .collect();
                json!({ "rows": rows, "theta": d.theta(rows), "words": words })
            };
            match rows {
                Some(text) => entry(Subset::parse(&text, d.n())?),
                None => Value::Array(Subset::all(d.n()).map(entry).collect()),
            }
        }
        Command::Points { input, t } => {
            let d = input.resolve()?;
            let by_theta = Schubitope::new(&d).points(t);
            let by_sum = dilated_minkowski_points(d.n(), &column_base_factors(&d), t);
            json!({
                "diagram": d.to_string(),
                "t": t,
                "agree": by_theta == by_sum,
                "count": by_theta.len(),
                "inequality_points": by_theta,
                "minkowski_points": by_sum,
            })
        }
        Command::LatticeFree { input, mode } => {
            let d = input.resolve()?;
            let verdict = lattice_free_check(&Schubitope::new(&d).points(1));
            json!({
                "diagram": d.to_string(),
                "ok": verdict.ok,
                "witness": verdict.witness,
                "criterion": criterion_check(&d, mode),
            })
        }
        Command::Ehrhart {
            input,
            column,
            spanning,
        } => match column {
            Some(text) => {
                let n = input.n.expect("clap enforces --n");
                let m = SchubertMatroid::new(n, Subset::parse(&text, n)?);
                let p = if spanning {
                    spanning_polytope_ehrhart(&m)?
                } else {
                    base_polytope_ehrhart(&m)?
                };
                json!({
                    "column": m.defining_set(),
                    "n": n,
                    "polytope": if spanning { "spanning" } else { "base" },
                    "polynomial": p,
                })
            }
            None if input.given() => {
                let d = input.resolve()?;
                json!({
                    "diagram": d.to_string(),
                    "polynomial": schubitope_ehrhart(&d)?,
                    "factorization": ehrhart_factorization_check(&d)?,
                })
            }
            None => {
                return Err(Error::InvalidArgument(
                    "give a diagram input or --column with --n".into(),
                ))
            }
        },
        Command::Poly { family, input } => {
            let (_, p) = polynomial_input(family, &input)?;
            serde_json::to_value(&p).expect("polynomial serializes")
        }
        Command::Newton { family, input } => {
            let (label, p) = polynomial_input(family, &input)?;
            let support = support_points(&p);
            let hull = hull_lattice_points(&support);
            let verdict = lattice_free_check(&hull);
            json!({
                "input": label,
                "support": support,
                "hull_points": hull,
                "vertices": vertices(&hull),
                "saturated": support == hull,
                "lattice_free": { "ok": verdict.ok, "witness": verdict.witness },
                "properties": support_property_checks(&support),
                "gp_certificate": gp_certificate(&hull),
            })
        }
        Command::Matroid { what, set, n } => {
            let m = SchubertMatroid::new(n, Subset::parse(&set, n)?);
            match what {
                MatroidDump::Bases => json!(m.bases()),
                MatroidDump::SpanningSets => json!(m.spanning_sets()),
            }
        }
        Command::Verify(args) => return verify(args),
    };
    Ok((doc, true))
}

fn verify(args: VerifyArgs) -> Result<(Value, bool), Error> {
    if let Some(jobs) = args.jobs {
        if jobs == 0 {
            return Err(Error::InvalidArgument("--jobs must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| Error::InvalidArgument(e.to_string()))?;
    }
    let opts = SuiteOptions {
        seed: args.seed,
        fail_fast: args.fail_fast,
        timing: args.timing,
        only: args.only.clone(),
    };
    let size = |default: usize, large: usize, max: usize| -> Result<usize, Error> {
        let n = args.n.unwrap_or(if args.large { large } else { default });
        if !(2..=max).contains(&n) {
            return Err(Error::InvalidArgument(format!("--n must lie in 2..={max}")));
        }
        Ok(n)
    };
    let report = match args.suite {
        Suite::Criterion => {
            let corpus = DiagramCorpus {
                random_count: args.random,
                ..DiagramCorpus::default()
            };
            verify_schubitope_criterion(&corpus, &opts)
        }
        Suite::Schubert => verify_schubert_suite(size(5, 6, 6)?, &opts),
        Suite::Grothendieck => verify_grothendieck_suite(size(4, 5, 5)?, &opts),
        Suite::Key => verify_key_suite(args.max_part, args.max_len, &opts),
    };
    let text = match args.format {
        Format::Json => report.to_json() + "\n",
        Format::Csv => report_csv(&report)?,
    };
    let path = args.output.clone().or_else(|| {
        args.output_dir.as_ref().map(|dir| {
            let ext = match args.format {
                Format::Json => "json",
                Format::Csv => "csv",
            };
            dir.join(format!("{}.{ext}", report.suite))
        })
    });
    match path {
        Some(path) => {
            if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
                fs::create_dir_all(parent).map_err(|e| io_error(&path, e))?;
            }
            fs::write(&path, text).map_err(|e| io_error(&path, e))?;
            eprintln!(
                "{}: {} ({} instances, {} failures) -> {}",
                report.suite,
                if report.passed() { "PASS" } else { "FAIL" },
                report.n_instances,
                report.n_failures,
                path.display()
            );
        }
        None => print!("{text}"),
    }
    Ok((Value::Null, report.passed()))
}

fn io_error(path: &std::path::Path, e: std::io::Error) -> Error {
    Error::InvalidArgument(format!("{}: {e}", path.display()))
}

fn report_csv(report: &Report) -> Result<String, Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let status = if report.passed() { "PASS" } else { "FAIL" };
    let csv_err = |e: csv::Error| Error::InvalidArgument(e.to_string());
    w.write_record([
        "suite",
        "seed",
        "status",
        "instance",
        "check",
        "detail",
        "reproduce",
    ])
    .map_err(csv_err)?;
    let seed = report.seed.to_string();
    if report.failures.is_empty() {
        w.write_record([report.suite.as_str(), &seed, status, "", "", "", ""])
            .map_err(csv_err)?;
    }
    for f in &report.failures {
        w.write_record([
            report.suite.as_str(),
            &seed,
            status,
            &f.instance,
            &f.check,
            &f.detail,
            &f.reproduce,
        ])
        .map_err(csv_err)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::InvalidArgument(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            if code == 2 {
                let msg = e.to_string();
                let line = msg.lines().next().unwrap_or("invalid arguments");
                eprintln!("{line}");
            } else {
                let _ = e.print();
            }
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok((Value::Null, passed)) => ExitCode::from(if passed { 0 } else { 1 }),
        Ok((doc, _)) => {
            let mut out = std::io::stdout().lock();
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json"));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
