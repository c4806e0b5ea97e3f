//! `twconj`: twisted conjugacy computations on small finite groups.
//!
//! Exit status is 0 on success, 1 when a verification finds a counterexample,
//! and 2 on usage errors or invalid input.

use std::collections::BTreeMap;
use std::io::Write;
use std::process::ExitCode;
use std::sync::Arc;

use clap::builder::PossibleValuesParser;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use twconj::catalog::parse_group;
use twconj::endo_spec::EndoSpec;
use twconj::finite_group::{center, conjugacy_classes, direct_product, FiniteGroup, DEFAULT_ORDER_CAP};
use twconj::hom_engine::{count_automorphisms_up_to, enumerate_automorphisms, SearchConfig};
use twconj::product_matrix::to_matrix;
use twconj::structure::is_directly_indecomposable;
use twconj::twisted::{fixed_points, reidemeister_partition, spectrum_of};
use twconj::verify::{run_suite, Sampling, VerifyOptions, AUTOMORPHISM_LIMIT, DEFAULT_SEED, SUITES};
use twconj::Error;

const MAX_ORDER_ENV: &str = "TWCONJ_MAX_ORDER";

#[derive(Parser)]
#[command(name = "twconj", version, about = "Twisted conjugacy classes and Reidemeister spectra of finite groups")]
struct Cli {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect a group
    Group {
        #[command(subcommand)]
        action: GroupAction,
    },
    /// Reidemeister spectrum: the Reidemeister numbers of all automorphisms
    Spectrum {
        /// Preset (Z4, S3, D5, Q8, ...), product (S3xZ4), or Cayley table JSON file
        group: String,
    },
    /// Twisted conjugacy classes of one endomorphism
    Reidemeister {
        group: String,
        /// Endomorphism spec: inline JSON or a path to a JSON file
        #[arg(long)]
        endo: String,
    },
    /// An endomorphism of a direct product, with its matrix and formula check
    Product {
        /// Factors, in order
        #[arg(required = true, num_args = 1..)]
        groups: Vec<String>,
        /// Endomorphism spec: inline JSON or a path to a JSON file
        #[arg(long)]
        endo: String,
    },
    /// Compare a formula against brute force
    Verify {
        #[arg(value_parser = PossibleValuesParser::new(SUITES))]
        suite: String,
        /// Check every case instead of sampling
        #[arg(long, conflicts_with_all = ["samples", "seed"])]
        exhaustive: bool,
        /// Random samples per case
        #[arg(long)]
        samples: Option<usize>,
        /// Seed for sampling
        #[arg(long)]
        seed: Option<u64>,
        /// Largest group or product order to include
        #[arg(long)]
        max_order: Option<usize>,
    },
}

#[derive(Subcommand)]
enum GroupAction {
    /// Basic invariants of a group
    Info { group: String },
}

/// What a command produced: the JSON document, rows for csv and table
/// output, and whether a check failed.
struct Outcome {
    json: Value,
    header: Vec<String>,
    rows: Vec<Vec<String>>,
    failed: bool,
}

impl Outcome {
    fn key_values(json: Value, pairs: Vec<(&str, String)>) -> Self {
        Outcome {
            json,
            header: vec!["field".into(), "value".into()],
            rows: pairs.into_iter().map(|(k, v)| vec![k.to_string(), v]).collect(),
            failed: false,
        }
    }
}

fn order_cap() -> Result<usize, Error> {
    match std::env::var(MAX_ORDER_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::InvalidSpec(format!("{MAX_ORDER_ENV} must be a positive integer, got `{v}`"))),
        Err(_) => Ok(DEFAULT_ORDER_CAP),
    }
}

fn read_spec(arg: &str) -> Result<EndoSpec, Error> {
    if arg.trim_start().starts_with('{') {
        EndoSpec::parse(arg)
    } else {
        EndoSpec::parse(&std::fs::read_to_string(arg)?)
    }
}

fn group_info(g: &Arc<FiniteGroup>) -> Result<Outcome, Error> {
    let config = SearchConfig::default();
    let mut class_sizes: Vec<usize> = conjugacy_classes(g).iter().map(Vec::len).collect();
    class_sizes.sort_unstable();
    let mut histogram = BTreeMap::new();
    for &o in g.element_orders() {
        *histogram.entry(o).or_insert(0usize) += 1;
    }
    let center_order = center(g).order();
    let indecomposable = is_directly_indecomposable(g, config)?;
    let autos = count_automorphisms_up_to(g, config, AUTOMORPHISM_LIMIT)?;
    let generators: Vec<String> = g.generators().iter().map(|&x| g.name(x)).collect();
    let json = json!({
        "group": g.label(),
        "order": g.order(),
        "abelian": g.is_abelian(),
        "center_order": center_order,
        "directly_indecomposable": indecomposable,
        "generators": generators,
        "element_orders": histogram,
        "conjugacy_class_sizes": class_sizes,
        "automorphisms": autos,
    });
    let autos_text = autos.map_or_else(|| format!(">{AUTOMORPHISM_LIMIT}"), |n| n.to_string());
    Ok(Outcome::key_values(
        json,
        vec![
            ("group", g.label().to_string()),
            ("order", g.order().to_string()),
            ("abelian", g.is_abelian().to_string()),
            ("center_order", center_order.to_string()),
            ("directly_indecomposable", indecomposable.to_string()),
            ("generators", generators.join(" ")),
            ("element_orders", format!("{histogram:?}")),
            ("conjugacy_class_sizes", format!("{class_sizes:?}")),
            ("automorphisms", autos_text),
        ],
    ))
}

fn spectrum(g: &Arc<FiniteGroup>) -> Result<Outcome, Error> {
    let autos = enumerate_automorphisms(g, SearchConfig::default())?;
    let spec = spectrum_of(&autos);
    let json = json!({
        "group": g.label(),
        "order": g.order(),
        "automorphisms": autos.len(),
        "spectrum": spec,
    });
    Ok(Outcome {
        json,
        header: ["group", "order", "automorphisms", "spectrum"].map(String::from).to_vec(),
        rows: vec![vec![
            g.label().to_string(),
            g.order().to_string(),
            autos.len().to_string(),
            spec.to_string(),
        ]],
        failed: false,
    })
}

fn reidemeister(g: &Arc<FiniteGroup>, spec: &EndoSpec) -> Result<Outcome, Error> {
    let endo = spec.build(g)?;
    let part = reidemeister_partition(&endo);
    let fix = fixed_points(&endo).order();
    let json = json!({
        "group": g.label(),
        "endomorphism": endo.map(),
        "reidemeister_number": part.number(),
        "fixed_points": fix,
        "classes": part.classes(),
    });
    let classes: Vec<String> = part
        .classes()
        .iter()
        .map(|c| c.iter().map(|&x| g.name(x)).collect::<Vec<_>>().join(" "))
        .collect();
    Ok(Outcome::key_values(
        json,
        vec![
            ("group", g.label().to_string()),
            ("reidemeister_number", part.number().to_string()),
            ("fixed_points", fix.to_string()),
            ("classes", classes.join(" | ")),
        ],
    ))
}

fn product(names: &[String], spec: &EndoSpec, cap: usize) -> Result<Outcome, Error> {
    let factors = names
        .iter()
        .map(|n| parse_group(n, cap))
        .collect::<Result<Vec<_>, _>>()?;
    let p = Arc::new(direct_product(&factors, cap)?);
    let endo = spec.build_on_product(&p)?;
    let matrix = to_matrix(&p, &endo);
    let brute = reidemeister_partition(&endo).number();
    let formula = spec.formula_reidemeister(&p)?;
    let agrees = formula.is_none_or(|f| f == brute);
    let json = json!({
        "factors": factors.iter().map(|g| g.label()).collect::<Vec<_>>(),
        "order": p.group().order(),
        "endomorphism": endo.map(),
        "matrix": matrix.to_json(),
        "reidemeister_number": brute,
        "formula": formula,
        "agrees": agrees,
    });
    let mut out = Outcome::key_values(
        json,
        vec![
            ("factors", names.join(" x ")),
            ("order", p.group().order().to_string()),
            ("reidemeister_number", brute.to_string()),
            ("formula", formula.map_or_else(|| "-".into(), |f| f.to_string())),
            ("agrees", agrees.to_string()),
        ],
    );
    out.failed = !agrees;
    Ok(out)
}

fn verify(
    suite: &str,
    exhaustive: bool,
    samples: Option<usize>,
    seed: Option<u64>,
    max_order: Option<usize>,
    cap: usize,
) -> Result<Outcome, Error> {
    let sampling = if exhaustive {
        Sampling::Exhaustive
    } else {
        Sampling::Random {
            samples: samples.unwrap_or(twconj::verify::DEFAULT_SAMPLES),
            seed: seed.unwrap_or(DEFAULT_SEED),
        }
    };
    let opts = VerifyOptions {
        sampling,
        max_order,
        order_cap: cap,
        ..VerifyOptions::default()
    };
    let report = run_suite(suite, &opts)?;
    let rows = report
        .cases
        .iter()
        .map(|c| {
            let status = match (&c.skipped, c.failures) {
                (Some(why), _) => format!("skipped: {why}"),
                (None, 0) => "ok".to_string(),
                (None, _) => "FAILED".to_string(),
            };
            vec![
                c.case.to_string(),
                c.label.clone(),
                c.checks.to_string(),
                c.failures.to_string(),
                status,
            ]
        })
        .collect();
    Ok(Outcome {
        failed: !report.passed,
        json: serde_json::to_value(&report)?,
        header: ["case", "label", "checks", "failures", "status"].map(String::from).to_vec(),
        rows,
    })
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    let cap = order_cap()?;
    match cli.command {
        Command::Group {
            action: GroupAction::Info { group },
        } => group_info(&parse_group(&group, cap)?),
        Command::Spectrum { group } => spectrum(&parse_group(&group, cap)?),
        Command::Reidemeister { group, endo } => reidemeister(&parse_group(&group, cap)?, &read_spec(&endo)?),
        Command::Product { groups, endo } => product(&groups, &read_spec(&endo)?, cap),
        Command::Verify {
            suite,
            exhaustive,
            samples,
            seed,
            max_order,
        } => verify(&suite, exhaustive, samples, seed, max_order, cap),
    }
}

fn render(out: &Outcome, format: Format) -> Result<String, Error> {
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(&out.json)? + "\n",
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&out.header).map_err(std::io::Error::from)?;
            for r in &out.rows {
                w.write_record(r).map_err(std::io::Error::from)?;
            }
            String::from_utf8(w.into_inner().map_err(|e| e.into_error())?).expect("csv output is utf-8")
        }
        Format::Table => {
            let widths: Vec<usize> = (0..out.header.len())
                .map(|i| {
                    std::iter::once(&out.header[i])
                        .chain(out.rows.iter().map(|r| &r[i]))
                        .map(|s| s.chars().count())
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            let line = |cells: &[String]| {
                cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, &w)| format!("{c:<w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
                    .trim_end()
                    .to_string()
            };
            let mut s = line(&out.header) + "\n";
            s += &(widths.iter().map(|&w| "-".repeat(w)).collect::<Vec<_>>().join("  ") + "\n");
            for r in &out.rows {
                s += &(line(r) + "\n");
            }
            s
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let format = cli.format;
    let out = match run(cli).and_then(|o| render(&o, format).map(|text| (o, text))) {
        Ok(pair) => pair,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let (outcome, text) = out;
    let mut stdout = std::io::stdout().lock();
    if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
        return ExitCode::from(2);
    }
    if outcome.failed {
        if let Some(witness) = outcome.json.get("counterexample").filter(|v| !v.is_null()) {
            eprintln!("counterexample: {witness}");
        } else {
            eprintln!("verification failed");
        }
        return ExitCode::from(1);
    }
    ExitCode::SUCCESS
}
