//! The `cellkit` command line: argument parsing, subcommand dispatch and
//! output formatting. [`run`] never touches the process streams, so tests
//! drive it directly.

pub mod cache;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::sync::Arc;
use std::time::Instant;

use cellkit::asymptotic::Asymptotic;
use cellkit::cells::{compute_cells, AMode, CellDecomposition};
use cellkit::hecke::product_kl;
use cellkit::homology::{proj_dim, singular_projdim, translated_simple_char, TranslatedSimpleChar};
use cellkit::kostant::{cell_report, render_grid, render_tsv, KostantReport, TSV_HEADER};
use cellkit::{CartanType, CoxeterSystem, Element, Error, GenSet, KlTable};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

/// Exit status and captured streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "cellkit",
    version,
    about = "Exact Kazhdan-Lusztig combinatorics for finite Weyl groups",
    after_help = "Exit codes: 0 success, 1 cache or I/O failure, 2 usage error, 3 domain error.\n\
                  Words are strings of generator labels 1..n, e.g. 2312; `e` is the identity.\n\
                  TSV columns for `kostant`: word, duflo, kh_bracket, km_proxy, k_conjectural, class,\n\
                  left_cell, right_cell, two_sided_cell, a, stabilizer_size."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Group {
    /// Cartan type: A, B, C, D, E, F or G.
    #[arg(long = "type", value_name = "TYPE", value_parser = parse_type)]
    cartan_type: CartanType,
    #[arg(long)]
    rank: usize,
    /// Directory holding cached KL tables.
    #[arg(long, env = "CELLKIT_CACHE_DIR", value_name = "DIR")]
    cache_dir: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    format: Format,
    /// Worker threads for the parallel sweeps (default: all cores).
    #[arg(long)]
    threads: Option<usize>,
    /// Compute a-values from involutions only, one per two-sided cell.
    #[arg(long)]
    fast: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Tsv,
    Pretty,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the elements of W in canonical order.
    Enumerate {
        #[command(flatten)]
        group: Group,
    },
    /// The KL polynomial p(y,w).
    Klpoly {
        #[command(flatten)]
        group: Group,
        #[arg(long)]
        y: String,
        #[arg(long)]
        w: String,
    },
    /// The product C_x C_y in the KL basis.
    Hprod {
        #[command(flatten)]
        group: Group,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Left, right, two-sided and H-cells with a-values and Duflo elements.
    Cells {
        #[command(flatten)]
        group: Group,
    },
    /// The a-function, for one element or all of W.
    Afunction {
        #[command(flatten)]
        group: Group,
        #[arg(long)]
        element: Option<String>,
    },
    /// gamma_{x,y,z}, or the whole product t_x t_y when --z is omitted.
    Gamma {
        #[command(flatten)]
        group: Group,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(long)]
        z: Option<String>,
    },
    /// Graded composition factors of theta_x L_y.
    Translate {
        #[command(flatten)]
        group: Group,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Projective dimension of theta_x L_y, or of a singular simple with
    /// --parabolic and --w.
    Projdim {
        #[command(flatten)]
        group: Group,
        #[arg(long, required_unless_present = "parabolic")]
        x: Option<String>,
        #[arg(long, required_unless_present = "parabolic")]
        y: Option<String>,
        /// Generator labels of the parabolic subgroup, e.g. 13; `e` for none.
        #[arg(long, requires = "w", conflicts_with_all = ["x", "y"])]
        parabolic: Option<String>,
        #[arg(long)]
        w: Option<String>,
    },
    /// Kostant classification of every element.
    Kostant {
        #[command(flatten)]
        group: Group,
        #[arg(long)]
        element: Option<String>,
    },
    /// All comparison tables for one group.
    Report {
        #[command(flatten)]
        group: Group,
    },
    /// Manage the on-disk KL table cache.
    Cache {
        #[arg(value_enum)]
        action: CacheAction,
        #[command(flatten)]
        group: Group,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum CacheAction {
    Warm,
    Inspect,
    Verify,
}

fn parse_type(s: &str) -> Result<CartanType, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let threads = cli.command.group().threads;
    let mut ctx = Session::default();
    let result = match rayon::ThreadPoolBuilder::new()
        .num_threads(threads.unwrap_or(0))
        .build()
    {
        Ok(pool) => pool.install(|| dispatch(&cli.command, &mut ctx)),
        Err(e) => Err(Error::Usage(format!(
            "cannot start {} threads: {e}",
            threads.unwrap_or(0)
        ))),
    };
    match result {
        Ok(stdout) => Outcome {
            code: EXIT_OK,
            stdout,
            stderr: ctx.stderr,
        },
        Err(e) => {
            let code = match e {
                Error::Config(_) | Error::Word { .. } | Error::Usage(_) => EXIT_USAGE,
                Error::Domain(_) => EXIT_DOMAIN,
                Error::Cache(_) | Error::Io(_) | Error::Json(_) => EXIT_FAILURE,
            };
            let _ = writeln!(ctx.stderr, "error: {e}");
            Outcome {
                code,
                stdout: String::new(),
                stderr: ctx.stderr,
            }
        }
    }
}

impl Command {
    fn group(&self) -> &Group {
        match self {
            Command::Enumerate { group }
            | Command::Klpoly { group, .. }
            | Command::Hprod { group, .. }
            | Command::Cells { group }
            | Command::Afunction { group, .. }
            | Command::Gamma { group, .. }
            | Command::Translate { group, .. }
            | Command::Projdim { group, .. }
            | Command::Kostant { group, .. }
            | Command::Report { group }
            | Command::Cache { group, .. } => group,
        }
    }
}

/// Collects progress messages for stderr.
#[derive(Default)]
struct Session {
    stderr: String,
}

impl Session {
    fn progress(&mut self, msg: &str) {
        let _ = writeln!(self.stderr, "{msg}");
    }

    fn table(&mut self, group: &Group) -> cellkit::Result<KlTable<i64>> {
        let sys = Arc::new(CoxeterSystem::new(group.cartan_type, group.rank)?);
        let table = KlTable::new(sys);
        if let Some(dir) = &group.cache_dir {
            if cache::load(&table, dir)? {
                self.progress(&format!("loaded KL table from {}", dir.display()));
            }
        }
        Ok(table)
    }

    fn cells(&mut self, table: &KlTable<i64>, group: &Group) -> CellDecomposition {
        let start = Instant::now();
        let mode = if group.fast { AMode::Fast } else { AMode::Full };
        let cells = compute_cells(table, mode);
        let sys = table.system();
        self.progress(&format!(
            "cells of {}{} ({} elements) in {:.2?}",
            sys.cartan_type(),
            sys.rank(),
            sys.order(),
            start.elapsed()
        ));
        cells
    }
}

fn dispatch(cmd: &Command, ctx: &mut Session) -> cellkit::Result<String> {
    let group = cmd.group();
    let format = group.format;
    match cmd {
        Command::Enumerate { .. } => {
            let table = ctx.table(group)?;
            Ok(enumerate(table.system(), format))
        }
        Command::Klpoly { y, w, .. } => {
            let table = ctx.table(group)?;
            let sys = table.system();
            let (ye, we) = (sys.parse(y)?, sys.parse(w)?);
            let p = table.p(ye, we);
            Ok(match format {
                Format::Json => to_json(&json!({
                    "y": sys.word(ye),
                    "w": sys.word(we),
                    "p": p.to_string(),
                    "coefficients": p.terms().map(|(d, c)| json!([d, c])).collect::<Vec<_>>(),
                    "mu": table.mu(ye, we),
                })),
                _ => format!("{p}\n"),
            })
        }
        Command::Hprod { x, y, .. } => {
            let table = ctx.table(group)?;
            let sys = table.system();
            let (xe, ye) = (sys.parse(x)?, sys.parse(y)?);
            let prod = product_kl(&table, xe, ye);
            Ok(match format {
                Format::Json => to_json(&json!({
                    "x": sys.word(xe),
                    "y": sys.word(ye),
                    "terms": prod.iter().map(|(w, p)| json!({"w": sys.word(w), "coeff": p.to_string()})).collect::<Vec<_>>(),
                })),
                Format::Tsv => {
                    let mut out = String::from("w\tcoeff\n");
                    for (w, p) in prod.iter() {
                        let _ = writeln!(out, "{}\t{p}", sys.word(w));
                    }
                    out
                }
                Format::Pretty => format!("{}\n", prod.display(sys)),
            })
        }
        Command::Cells { .. } => {
            let table = ctx.table(group)?;
            let cells = ctx.cells(&table, group);
            Ok(cells_output(&cells, format))
        }
        Command::Afunction { element, .. } => {
            let table = ctx.table(group)?;
            let sys = table.system();
            let only = element.as_deref().map(|w| sys.parse(w)).transpose()?;
            let cells = ctx.cells(&table, group);
            Ok(afunction_output(&cells, only, format))
        }
        Command::Gamma { x, y, z, .. } => {
            let table = ctx.table(group)?;
            let sys = table.system();
            let (xe, ye) = (sys.parse(x)?, sys.parse(y)?);
            let ze = z.as_deref().map(|w| sys.parse(w)).transpose()?;
            let cells = ctx.cells(&table, group);
            let asym = Asymptotic::new(&table, &cells);
            Ok(match ze {
                Some(ze) => {
                    let g = asym.gamma(xe, ye, ze);
                    match format {
                        Format::Json => to_json(&json!({
                            "x": sys.word(xe), "y": sys.word(ye), "z": sys.word(ze), "gamma": g,
                        })),
                        _ => format!("{g}\n"),
                    }
                }
                None => {
                    let prod = asym.t_multiply(xe, ye);
                    match format {
                        Format::Json => to_json(&json!({
                            "x": sys.word(xe),
                            "y": sys.word(ye),
                            "terms": prod.iter().map(|(w, c)| json!({"t": sys.word(*w), "coeff": c})).collect::<Vec<_>>(),
                        })),
                        Format::Tsv => {
                            let mut out = String::from("t\tcoeff\n");
                            for (w, c) in &prod {
                                let _ = writeln!(out, "{}\t{c}", sys.word(*w));
                            }
                            out
                        }
                        Format::Pretty => format!("{}\n", t_expansion(sys, &prod)),
                    }
                }
            })
        }
        Command::Translate { x, y, .. } => {
            let table = ctx.table(group)?;
            let sys = table.system();
            let (xe, ye) = (sys.parse(x)?, sys.parse(y)?);
            let ch = translated_simple_char(&table, xe, ye);
            Ok(translate_output(sys, &ch, format))
        }
        Command::Projdim {
            x, y, parabolic, w, ..
        } => {
            let table = ctx.table(group)?;
            let sys = table.system();
            match parabolic {
                Some(subset) => {
                    let subset = parse_subset(sys, subset)?;
                    let we = sys.parse(w.as_deref().unwrap_or_default())?;
                    let cells = ctx.cells(&table, group);
                    let pd = singular_projdim(&table, &cells, subset, we)?;
                    Ok(match format {
                        Format::Json => to_json(&json!({"w": sys.word(we), "projdim": pd})),
                        _ => format!("{pd}\n"),
                    })
                }
                None => {
                    let xe = sys.parse(x.as_deref().unwrap_or_default())?;
                    let ye = sys.parse(y.as_deref().unwrap_or_default())?;
                    let cells = ctx.cells(&table, group);
                    let pd = proj_dim(&table, &cells, xe, ye)?;
                    Ok(match format {
                        Format::Json => {
                            to_json(&json!({"x": sys.word(xe), "y": sys.word(ye), "projdim": pd}))
                        }
                        _ => format!("{pd}\n"),
                    })
                }
            }
        }
        Command::Kostant { element, .. } => {
            let table = ctx.table(group)?;
            let sys = table.system();
            let only = element.as_deref().map(|w| sys.parse(w)).transpose()?;
            let cells = ctx.cells(&table, group);
            let asym = Asymptotic::new(&table, &cells);
            let report = cell_report(&table, &cells, &asym);
            Ok(kostant_output(&report, &cells, only, format))
        }
        Command::Report { .. } => {
            let table = ctx.table(group)?;
            let cells = ctx.cells(&table, group);
            let asym = Asymptotic::new(&table, &cells);
            let report = cell_report(&table, &cells, &asym);
            Ok(full_report(&cells, &asym, &report, format))
        }
        Command::Cache { action, .. } => {
            let dir = group.cache_dir.clone().ok_or_else(|| {
                Error::Usage("no cache directory: pass --cache-dir or set CELLKIT_CACHE_DIR".into())
            })?;
            let sys = Arc::new(CoxeterSystem::new(group.cartan_type, group.rank)?);
            let info = match action {
                CacheAction::Warm => {
                    let start = Instant::now();
                    let info = cache::warm(&KlTable::new(sys), &dir)?;
                    ctx.progress(&format!(
                        "warmed {} in {:.2?}",
                        info.path.display(),
                        start.elapsed()
                    ));
                    info
                }
                CacheAction::Inspect => cache::inspect(&dir, group.cartan_type, group.rank)?,
                CacheAction::Verify => {
                    cache::verify(&KlTable::new(sys), &dir)?;
                    cache::inspect(&dir, group.cartan_type, group.rank)?
                }
            };
            Ok(match format {
                Format::Json => to_json(&info),
                _ => format!(
                    "path\t{}\nformat_version\t{}\ncartan_type\t{}\nrank\t{}\nnormalization\t{}\ncolumns\t{}\nentries\t{}\nchecksum\t{}\n",
                    info.path.display(),
                    info.header.format_version,
                    info.header.cartan_type,
                    info.header.rank,
                    info.header.normalization,
                    info.columns,
                    info.entries,
                    info.checksum
                ),
            })
        }
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn parse_subset(sys: &CoxeterSystem, text: &str) -> cellkit::Result<GenSet> {
    let mut set = GenSet::default();
    if text == "e" {
        return Ok(set);
    }
    for s in sys.word_letters(sys.parse(text)?) {
        set.insert(*s as usize);
    }
    if set.len() != text.len() {
        return Err(Error::Usage(format!(
            "parabolic subset {text:?} repeats a generator"
        )));
    }
    Ok(set)
}

fn descents(g: GenSet) -> Vec<usize> {
    g.iter().map(|s| s + 1).collect()
}

fn enumerate(sys: &CoxeterSystem, format: Format) -> String {
    match format {
        Format::Json => to_json(&json!({
            "cartan_type": sys.cartan_type().to_string(),
            "rank": sys.rank(),
            "order": sys.order(),
            "elements": sys.elements().map(|w| json!({
                "word": sys.word(w),
                "length": sys.length(w),
                "left_descents": descents(sys.left_descents(w)),
                "right_descents": descents(sys.right_descents(w)),
            })).collect::<Vec<_>>(),
        })),
        _ => {
            let mut out = String::from("index\tword\tlength\tleft_descents\tright_descents\n");
            for w in sys.elements() {
                let join = |g: GenSet| {
                    descents(g)
                        .iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(",")
                };
                let _ = writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}",
                    w.index(),
                    sys.word(w),
                    sys.length(w),
                    join(sys.left_descents(w)),
                    join(sys.right_descents(w))
                );
            }
            out
        }
    }
}

fn t_expansion(sys: &CoxeterSystem, terms: &[(Element, i64)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    terms
        .iter()
        .map(|(w, c)| {
            if *c == 1 {
                format!("t_{}", sys.word(*w))
            } else {
                format!("{c} t_{}", sys.word(*w))
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn words(sys: &CoxeterSystem, ws: &[Element]) -> Vec<String> {
    ws.iter().map(|w| sys.word(*w)).collect()
}

fn cells_output(cells: &CellDecomposition, format: Format) -> String {
    let sys = cells.system();
    match format {
        Format::Json => {
            let mut list = Vec::new();
            for (kind, part) in [
                ("left", cells.left()),
                ("right", cells.right()),
                ("twosided", cells.two_sided()),
                ("h", cells.h()),
            ] {
                for (id, members) in part.classes().iter().enumerate() {
                    list.push(json!({"id": id, "kind": kind, "members": words(sys, members)}));
                }
            }
            let a: Map<String, Value> = sys
                .elements()
                .map(|w| (sys.word(w), json!(cells.a_value(w))))
                .collect();
            let duflo: Vec<String> = cells.duflo_elements().map(|d| sys.word(d)).collect();
            to_json(&json!({"cells": list, "a": a, "duflo": duflo}))
        }
        Format::Tsv => {
            let mut out =
                String::from("word\tleft_cell\tright_cell\ttwo_sided_cell\th_cell\ta\tduflo\n");
            for w in sys.elements() {
                let _ = writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    sys.word(w),
                    cells.left().id(w),
                    cells.right().id(w),
                    cells.two_sided().id(w),
                    cells.h().id(w),
                    cells.a_value(w),
                    cells.is_duflo(w)
                );
            }
            out
        }
        Format::Pretty => {
            let mut out = cells.render_grid(|h| words(sys, h).join(","));
            out.push_str("rows are left cells, columns are right cells; Duflo elements lead the diagonal blocks\n");
            out
        }
    }
}

fn afunction_output(cells: &CellDecomposition, only: Option<Element>, format: Format) -> String {
    let sys = cells.system();
    match only {
        Some(w) => match format {
            Format::Json => to_json(&json!({"word": sys.word(w), "a": cells.a_value(w)})),
            _ => format!("{}\n", cells.a_value(w)),
        },
        None => match format {
            Format::Json => {
                let a: Map<String, Value> = sys
                    .elements()
                    .map(|w| (sys.word(w), json!(cells.a_value(w))))
                    .collect();
                to_json(&a)
            }
            _ => {
                let mut out = String::from("word\ta\n");
                for w in sys.elements() {
                    let _ = writeln!(out, "{}\t{}", sys.word(w), cells.a_value(w));
                }
                out
            }
        },
    }
}

/// One line per degree, ascending: `degree: word^{⊕m}, ...`.
pub fn figure_text(sys: &CoxeterSystem, ch: &TranslatedSimpleChar<i64>) -> String {
    let mut out = String::new();
    for (degree, factors) in ch.by_degree() {
        let items: Vec<String> = factors
            .iter()
            .map(|(z, m)| {
                if *m == 1 {
                    sys.word(*z)
                } else {
                    format!("{}^{{⊕{m}}}", sys.word(*z))
                }
            })
            .collect();
        let _ = writeln!(out, "{degree}: {}", items.join(", "));
    }
    out
}

fn translate_output(sys: &CoxeterSystem, ch: &TranslatedSimpleChar<i64>, format: Format) -> String {
    match format {
        Format::Json => to_json(&json!({
            "x": sys.word(ch.x),
            "y": sys.word(ch.y),
            "zero": ch.is_zero(),
            "b": ch.b().finite(),
            "degrees": ch.by_degree().into_iter().map(|(d, fs)| json!({
                "degree": d,
                "factors": fs.iter().map(|(z, m)| json!({"word": sys.word(*z), "multiplicity": m})).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })),
        Format::Tsv => {
            let mut out = String::from("degree\tword\tmultiplicity\n");
            for (d, fs) in ch.by_degree() {
                for (z, m) in fs {
                    let _ = writeln!(out, "{d}\t{}\t{m}", sys.word(z));
                }
            }
            out
        }
        Format::Pretty => {
            if ch.is_zero() {
                "0\n".into()
            } else {
                figure_text(sys, ch)
            }
        }
    }
}

fn kostant_output(
    report: &KostantReport,
    cells: &CellDecomposition,
    only: Option<Element>,
    format: Format,
) -> String {
    let sys = cells.system();
    match (only, format) {
        (Some(w), Format::Json) => {
            let mut v = json!(report.record(w));
            v["conditional_on"] = json!(report.conditional_on);
            to_json(&v)
        }
        (Some(w), _) => {
            let full = render_tsv(report);
            let row = full.lines().nth(w.index() + 1).unwrap_or_default();
            if format == Format::Tsv {
                format!("{TSV_HEADER}\n{row}\n")
            } else {
                let r = report.record(w);
                format!(
                    "{}: class {} (k_conjectural {}, km_proxy {}, kh_bracket {}, duflo {}, a {}, stabilizer {})\n",
                    sys.word(w),
                    r.class.tag(),
                    r.k_conjectural,
                    r.km_proxy,
                    r.kh_bracket,
                    r.duflo,
                    r.a,
                    r.stabilizer_size
                )
            }
        }
        (None, Format::Json) => to_json(report),
        (None, Format::Tsv) => render_tsv(report),
        (None, Format::Pretty) => render_grid(report, cells),
    }
}

/// `(y, d, [(u, m_u)])` with `theta_{y^-1} L_y = sum_u m_u theta_d L_u`.
type Summands = (Element, Element, Vec<(Element, i64)>);

fn full_report(
    cells: &CellDecomposition,
    asym: &Asymptotic<'_, i64>,
    report: &KostantReport,
    format: Format,
) -> String {
    let sys = cells.system();
    let negative: Vec<String> = cells
        .duflo_elements()
        .filter(|d| !report.record(*d).k_conjectural)
        .map(|d| sys.word(d))
        .collect();
    let summands: Vec<Summands> = sys
        .elements()
        .map(|y| {
            let (d, s) = asym.inverse_translate_summands(y);
            (y, d, s)
        })
        .collect();
    let summand_text = |d: Element, s: &[(Element, i64)]| {
        s.iter()
            .map(|(u, m)| {
                let base = format!("theta_{}L_{}", sys.word(d), sys.word(*u));
                if *m == 1 {
                    base
                } else {
                    format!("{base}^{m}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    };
    match format {
        Format::Json => to_json(&json!({
            "cartan_type": report.cartan_type,
            "rank": report.rank,
            "conditional_on": report.conditional_on,
            "kostant": report,
            "duflo": cells.duflo_elements().map(|d| sys.word(d)).collect::<Vec<_>>(),
            "negative_duflo": negative,
            "indexing_discrepancies": report.indexing_discrepancies,
            "inverse_translate_summands": summands.iter().map(|(y, d, s)| json!({
                "y": sys.word(*y),
                "summands": s.iter().map(|(u, m)| json!({"theta": sys.word(*d), "simple": sys.word(*u), "multiplicity": m})).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })),
        Format::Tsv => {
            let mut out = render_tsv(report);
            out.push('\n');
            out.push_str("y\tK\tKM\tKh\ttheta_{y^-1}L_y\n");
            for (y, d, s) in &summands {
                let r = report.record(*y);
                let _ = writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}",
                    sys.word(*y),
                    r.k_conjectural,
                    r.km_proxy,
                    r.kh_bracket,
                    summand_text(*d, s)
                );
            }
            out
        }
        Format::Pretty => {
            let mut out = format!(
                "{}{} ({} elements)\n\n",
                report.cartan_type,
                report.rank,
                sys.order()
            );
            out.push_str("cells and Kostant classes\n");
            out.push_str(&render_grid(report, cells));
            let _ = writeln!(
                out,
                "\nDuflo elements with k_conjectural false ({}):",
                negative.len()
            );
            let _ = writeln!(out, "  {}", negative.join(", "));
            let _ = writeln!(
                out,
                "\nDuflo elements where the two indexings of kh_bracket disagree ({}):",
                report.indexing_discrepancies.len()
            );
            let _ = writeln!(out, "  {}", report.indexing_discrepancies.join(", "));
            out.push_str("\ny\tK\tKM\tKh\ttheta_{y^-1}L_y\n");
            for (y, d, s) in &summands {
                let r = report.record(*y);
                let _ = writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}",
                    sys.word(*y),
                    r.k_conjectural,
                    r.km_proxy,
                    r.kh_bracket,
                    summand_text(*d, s)
                );
            }
            out
        }
    }
}
