//! Command-line front end. [`run`] parses arguments, writes the requested
//! table to `out` and returns the process exit code:
//! `0` on success, `1` when a verification suite fails, `2` on bad input.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::coxeter::{CoxeterMatrix, CoxeterSystem, Element, GenSet, DEFAULT_CAP};
use crate::error::{Error, Result};
use crate::hecke::Hecke;
use crate::laurent::LaurentPoly;
use crate::parabolic::{subset_json, ParabolicModule};
use crate::rouquier::ComplexShape;
use crate::soergel::{bott_samelson_char, graded_hom_rank, Character};
use crate::verify::{self, BsSampling, Suite};

#[derive(Debug, Parser)]
#[command(
    name = "soergel",
    version,
    about = "Kazhdan-Lusztig tables, Rouquier shapes and singular Soergel characters"
)]
struct Cli {
    #[command(flatten)]
    config: ConfigArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct ConfigArgs {
    /// Named Coxeter type, e.g. A3, B3, I2(5), A1xA1.
    #[arg(
        long = "type",
        global = true,
        value_name = "NAME",
        conflicts_with = "matrix"
    )]
    type_name: Option<String>,
    /// File holding the rank followed by the upper-triangular bond labels.
    #[arg(long, global = true, value_name = "FILE")]
    matrix: Option<PathBuf>,
    /// Parabolic subset as comma-separated labels, e.g. s1,s2.
    #[arg(long, global = true, value_name = "LABELS", default_value = "")]
    subset: String,
    #[arg(long, global = true, value_enum, default_value_t = Format::Tsv)]
    format: Format,
    /// Maximum number of group elements to enumerate.
    #[arg(long, global = true, value_name = "N", default_value_t = DEFAULT_CAP as u64,
          value_parser = clap::value_parser!(u64).range(1..))]
    cap: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    F,
    E,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Ordinary KL polynomials h_{y,x} for all y <= x.
    KlTable,
    /// Parabolic KL polynomials h^I_{y,x} for y <= x in W^I.
    ParabolicTable,
    /// Inverse parabolic KL polynomials g^I_{x,z} for x <= z in W^I.
    InverseTable,
    /// Graded shape of the Rouquier complex F_x^I or E_x^I.
    RouquierShape {
        x: String,
        #[arg(long, value_enum, default_value_t = Kind::F)]
        kind: Kind,
    },
    /// Graded rank of Hom(B_x^I, B_y^I).
    HomRank { x: String, y: String },
    /// Decomposes the Bott-Samelson character for a word of generators.
    BsChar { word: String },
    /// The restricted Bott-Samelson (s1,s2,s3) over I={s1,s2} in type A3.
    ExampleA3,
    /// Runs the invariant suites over every parabolic subset.
    Verify {
        /// Comma-separated suite names; all suites when omitted.
        #[arg(long, value_name = "NAMES")]
        suite: Option<String>,
        /// Number of random Bott-Samelson words.
        #[arg(long, default_value_t = BsSampling::default().words)]
        words: usize,
        #[arg(long, default_value_t = BsSampling::default().seed)]
        seed: u64,
    },
}

enum Outcome {
    Ok,
    InvariantFailure,
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(Outcome::Ok) => 0,
        Ok(Outcome::InvariantFailure) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn load_system(config: &ConfigArgs) -> Result<CoxeterSystem> {
    let cap = usize::try_from(config.cap).unwrap_or(usize::MAX);
    let matrix = match (&config.type_name, &config.matrix) {
        (Some(name), _) => CoxeterMatrix::from_name(name)?,
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
                path: path.display().to_string(),
                reason: e.to_string(),
            })?;
            CoxeterMatrix::parse_file_contents(&text)?
        }
        (None, None) => return Err(Error::Parse("one of --type or --matrix is required".into())),
    };
    CoxeterSystem::build(matrix, cap)
}

fn emit(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes()).map_err(|e| Error::Io {
        path: "<stdout>".into(),
        reason: e.to_string(),
    })
}

fn emit_json(out: &mut dyn Write, value: &Value) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value).expect("values serialize");
    text.push('\n');
    emit(out, &text)
}

/// Table rows `(first, second, poly)` rendered under a three-column header.
fn emit_rows(
    out: &mut dyn Write,
    format: Format,
    sys: &CoxeterSystem,
    subset: GenSet,
    header: [&str; 3],
    rows: &[(Element, Element, LaurentPoly)],
) -> Result<()> {
    match format {
        Format::Tsv => {
            let mut text = header.join("\t");
            text.push('\n');
            for (a, b, p) in rows {
                text.push_str(&format!(
                    "{}\t{}\t{p}\n",
                    sys.word_string(*a),
                    sys.word_string(*b)
                ));
            }
            emit(out, &text)
        }
        Format::Json => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|(a, b, p)| {
                    let mut row = serde_json::Map::new();
                    row.insert(header[0].into(), sys.word_string(*a).into());
                    row.insert(header[1].into(), sys.word_string(*b).into());
                    row.insert(header[2].into(), p.to_json());
                    Value::Object(row)
                })
                .collect();
            emit_json(
                out,
                &json!({ "subset": subset_json(sys, subset), "rows": rows }),
            )
        }
    }
}

fn rep(module: &ParabolicModule<'_>, text: &str) -> Result<Element> {
    let x = module.system().parse_element(text)?;
    module.check_rep(x)?;
    Ok(x)
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<Outcome> {
    let config = &cli.config;
    if let Command::ExampleA3 = cli.command {
        example_a3(config.format, out)?;
        return Ok(Outcome::Ok);
    }
    let sys = load_system(config)?;
    let subset = sys.parse_subset(&config.subset)?;
    let hecke = Hecke::new(&sys);
    match &cli.command {
        Command::KlTable => {
            hecke.fill_kl_table();
            let mut rows = Vec::new();
            for x in sys.elements() {
                for y in sys.elements().filter(|&y| sys.bruhat_leq(y, x)) {
                    rows.push((y, x, hecke.kl_poly(y, x)));
                }
            }
            emit_rows(
                out,
                config.format,
                &sys,
                GenSet::EMPTY,
                ["y", "x", "h"],
                &rows,
            )?;
        }
        Command::ParabolicTable => {
            let module = ParabolicModule::new(&hecke, subset);
            let h = module.h_table();
            let rows = bruhat_pairs(&module, |a, b| h[a][b].clone());
            emit_rows(out, config.format, &sys, subset, ["y", "x", "h"], &rows)?;
        }
        Command::InverseTable => {
            let module = ParabolicModule::new(&hecke, subset);
            let g = module.g_table();
            let rows = bruhat_pairs(&module, |a, b| g[a][b].clone());
            emit_rows(out, config.format, &sys, subset, ["x", "z", "g"], &rows)?;
        }
        Command::RouquierShape { x, kind } => {
            let module = ParabolicModule::new(&hecke, subset);
            let x = rep(&module, x)?;
            let shape = match kind {
                Kind::F => ComplexShape::f_shape(&module, x),
                Kind::E => ComplexShape::e_shape(&module, x),
            };
            match config.format {
                Format::Tsv => emit(out, &shape.to_text(&sys))?,
                Format::Json => emit_json(
                    out,
                    &json!({
                        "subset": subset_json(&sys, subset),
                        "apex": sys.word_string(x),
                        "kind": if *kind == Kind::F { "F" } else { "E" },
                        "degrees": shape.to_json(&sys),
                    }),
                )?,
            }
        }
        Command::HomRank { x, y } => {
            let module = ParabolicModule::new(&hecke, subset);
            let (x, y) = (rep(&module, x)?, rep(&module, y)?);
            let rank = graded_hom_rank(
                &module,
                &Character::delta(subset, x),
                &Character::delta(subset, y),
            )?;
            emit_rows(
                out,
                config.format,
                &sys,
                subset,
                ["x", "y", "rank"],
                &[(x, y, rank)],
            )?;
        }
        Command::BsChar { word } => {
            let module = ParabolicModule::new(&hecke, subset);
            let word = parse_word(&sys, word)?;
            let ch = bott_samelson_char(&module, &word);
            emit_character(out, config.format, &sys, &ch)?;
        }
        Command::Verify { suite, words, seed } => {
            let suites = match suite {
                Some(list) => list
                    .split(',')
                    .filter(|s| !s.trim().is_empty())
                    .map(str::parse)
                    .collect::<Result<Vec<Suite>>>()?,
                None => Suite::ALL.to_vec(),
            };
            let bs = BsSampling {
                words: *words,
                seed: *seed,
                ..BsSampling::default()
            };
            let report = verify::run(&hecke, &verify::all_subsets(&sys), &suites, bs);
            match config.format {
                Format::Tsv => emit(out, &report.to_text())?,
                Format::Json => emit_json(out, &report.to_json())?,
            }
            if !report.all_passed() {
                return Ok(Outcome::InvariantFailure);
            }
        }
        Command::ExampleA3 => unreachable!("handled above"),
    }
    Ok(Outcome::Ok)
}

fn bruhat_pairs(
    module: &ParabolicModule<'_>,
    entry: impl Fn(usize, usize) -> LaurentPoly,
) -> Vec<(Element, Element, LaurentPoly)> {
    let sys = module.system();
    let reps = module.reps();
    let mut rows = Vec::new();
    for (b, &x) in reps.iter().enumerate() {
        for (a, &y) in reps.iter().enumerate() {
            if sys.bruhat_leq(y, x) {
                rows.push((y, x, entry(a, b)));
            }
        }
    }
    rows
}

fn parse_word(sys: &CoxeterSystem, text: &str) -> Result<Vec<usize>> {
    text.split(['.', ','])
        .map(str::trim)
        .filter(|t| !t.is_empty() && *t != "id")
        .map(|t| sys.parse_generator(t))
        .collect()
}

fn emit_character(
    out: &mut dyn Write,
    format: Format,
    sys: &CoxeterSystem,
    ch: &Character,
) -> Result<()> {
    let verdict = if ch.is_perverse() {
        "perverse"
    } else {
        "not perverse"
    };
    match format {
        Format::Tsv => emit(out, &format!("{}verdict\t{verdict}\n", ch.to_text(sys))),
        Format::Json => {
            let mut value = ch.to_json(sys);
            value["verdict"] = verdict.into();
            emit_json(out, &value)
        }
    }
}

fn example_a3(format: Format, out: &mut dyn Write) -> Result<()> {
    let sys = CoxeterSystem::named("A3")?;
    let hecke = Hecke::new(&sys);
    let module = ParabolicModule::new(&hecke, sys.parse_subset("s1,s2")?);
    let ch = bott_samelson_char(&module, &[0, 1, 2]);
    emit_character(out, format, &sys, &ch)
}
