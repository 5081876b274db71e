//! Subcommand definitions and dispatch.
//!
//! Exit status: 0 on success, 1 when a verification comes out false, 2 on
//! bad input.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use twotorus_core::cobordism::{self, CobordismSpace, Method};
use twotorus_core::{d, dks, polytope, ColoredGraph, Polynomial, Side};

use crate::formats::{self, FormatError};
use crate::parse::{parse_polynomial, ParseError};

#[derive(Parser, Debug)]
#[command(name = "twotorus", version, about = "Fixed-point data of 2-torus manifolds over GF(2)")]
pub struct Cli {
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Dual polynomial g*.
    Dual(PolyArgs),
    /// Apply the deletion differential.
    D(PolyArgs),
    /// Decide whether g is the class of a manifold (d(g*) = 0).
    IsClass(PolyArgs),
    /// Build a colored graph from g, or read and validate one.
    Graph(GraphArgs),
    /// Dimension of the space of dual cobordism classes.
    Dim(DimArgs),
    /// Express g* over the computed basis.
    Decompose(DecomposeArgs),
    /// Check a generator table for independence and spanning.
    VerifyTable(TableArgs),
    /// Localization integrality check up to a degree.
    CheckDks(DksArgs),
    /// Chain of colored prisms joining two basis monomials.
    PrismPath(PrismArgs),
    /// Coloring polynomials of the colorings in a file.
    ColoringPoly(ColoringArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Legend {
    N3,
    N4,
}

impl Legend {
    fn dim(self) -> usize {
        match self {
            Legend::N3 => 3,
            Legend::N4 => 4,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Generators,
    Polytopes,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Generators => Method::Generators,
            MethodArg::Polytopes => Method::Polytopes,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Dot,
    Json,
    /// The coloring polynomial of the graph.
    Poly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TextFormat {
    Text,
    Json,
}

#[derive(Args, Debug)]
pub struct DimFlags {
    /// Ambient dimension.
    #[arg(long)]
    pub n: Option<usize>,
    /// Fix the dimension and resolve x<k> against the n = 3 or n = 4 legend.
    #[arg(long, value_enum)]
    pub legend: Option<Legend>,
}

#[derive(Args, Debug)]
pub struct PolyArgs {
    pub poly: String,
    #[command(flatten)]
    pub dim: DimFlags,
}

#[derive(Args, Debug)]
pub struct GraphArgs {
    /// Character polynomial g (or g* on the cocharacter side).
    #[arg(required_unless_present = "graph", conflicts_with = "graph")]
    pub poly: Option<String>,
    /// Read a graph document instead.
    #[arg(long)]
    pub graph: Option<PathBuf>,
    #[command(flatten)]
    pub dim: DimFlags,
    #[arg(long, value_enum, default_value = "dot")]
    pub format: GraphFormat,
    /// Remove parallel edge pairs before output.
    #[arg(long)]
    pub prime: bool,
}

#[derive(Args, Debug)]
pub struct DimArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value = "generators")]
    pub method: MethodArg,
    #[arg(long, value_enum, default_value = "text")]
    pub format: TextFormat,
}

#[derive(Args, Debug)]
pub struct DecomposeArgs {
    pub poly: String,
    #[command(flatten)]
    pub dim: DimFlags,
    #[arg(long, value_enum, default_value = "generators")]
    pub method: MethodArg,
    #[arg(long, value_enum, default_value = "text")]
    pub format: TextFormat,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    pub file: PathBuf,
    #[command(flatten)]
    pub dim: DimFlags,
    #[arg(long, value_enum, default_value = "generators")]
    pub method: MethodArg,
}

#[derive(Args, Debug)]
pub struct DksArgs {
    pub poly: String,
    #[command(flatten)]
    pub dim: DimFlags,
    #[arg(long, default_value_t = 6)]
    pub max_degree: u32,
}

#[derive(Args, Debug)]
pub struct PrismArgs {
    pub from: String,
    pub to: String,
    #[command(flatten)]
    pub dim: DimFlags,
    #[arg(long, value_enum, default_value = "text")]
    pub format: TextFormat,
}

#[derive(Args, Debug)]
pub struct ColoringArgs {
    pub file: PathBuf,
    #[arg(long, value_enum, default_value = "text")]
    pub format: TextFormat,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Format(#[from] FormatError),
    #[error("{0}")]
    Core(#[from] twotorus_core::Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Done {
    ok: bool,
    text: String,
}

fn ok(text: impl Into<String>) -> Done {
    Done { ok: true, text: text.into() }
}

fn verdict(ok: bool, text: impl Into<String>) -> Done {
    Done { ok, text: text.into() }
}

/// Parse arguments (including the program name) and run.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            }
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let result = dispatch(&cli.command).and_then(|done| match &cli.out {
        Some(path) => {
            std::fs::write(path, &done.text).map_err(|source| CliError::Io { path: path.clone(), source })?;
            Ok(Done { ok: done.ok, text: String::new() })
        }
        None => Ok(done),
    });
    match result {
        Ok(done) => Outcome { code: if done.ok { 0 } else { 1 }, stdout: done.text, stderr: String::new() },
        Err(e) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.clone(), source })
}

impl DimFlags {
    fn resolve(&self) -> Result<Option<usize>, CliError> {
        match (self.n, self.legend) {
            (Some(n), Some(l)) if n != l.dim() => {
                Err(CliError::Usage(format!("--n {n} disagrees with --legend {}", l.to_possible_value().unwrap().get_name())))
            }
            (Some(n), _) => Ok(Some(n)),
            (None, l) => Ok(l.map(Legend::dim)),
        }
    }

    fn parse(&self, text: &str, default_side: Side) -> Result<Polynomial, CliError> {
        Ok(parse_polynomial(text, self.resolve()?, default_side)?)
    }

    /// A character polynomial; cocharacter input is read as `g*` and dualized.
    fn parse_character(&self, text: &str) -> Result<Polynomial, CliError> {
        let p = self.parse(text, Side::Character)?;
        match p.side() {
            Side::Character => Ok(p),
            Side::Cocharacter => Ok(p.dual()?),
        }
    }
}

fn line(p: &Polynomial) -> String {
    format!("{p}\n")
}

fn space_dim(n: Option<usize>) -> Result<usize, CliError> {
    n.ok_or_else(|| CliError::Usage("--n or --legend is required".into()))
}

fn dispatch(cmd: &Command) -> Result<Done, CliError> {
    match cmd {
        Command::Dual(a) => {
            let p = a.dim.parse(&a.poly, Side::Character)?;
            Ok(ok(line(&p.dual()?)))
        }
        Command::D(a) => {
            let p = a.dim.parse(&a.poly, Side::Cocharacter)?;
            Ok(ok(line(&d(&p))))
        }
        Command::IsClass(a) => {
            let g = a.dim.parse(&a.poly, Side::Character)?;
            if g.side() != Side::Character {
                return Err(twotorus_core::Error::SideMismatch { left: Side::Character, right: g.side() }.into());
            }
            if !g.is_zero() && !g.is_faithful() {
                return Err(twotorus_core::Error::NotFaithful.into());
            }
            let yes = cobordism::is_cobordism_class(&g);
            Ok(verdict(yes, format!("{yes}\n")))
        }
        Command::Graph(a) => graph(a),
        Command::Dim(a) => {
            let space = CobordismSpace::compute(a.n, a.method.into())?;
            let text = match a.format {
                TextFormat::Text => format!("{}\n", space.dim()),
                TextFormat::Json => {
                    let basis: Vec<String> = space.basis_polynomials().iter().map(|p| p.to_string()).collect();
                    let doc = json!({
                        "n": a.n,
                        "method": a.method.to_possible_value().unwrap().get_name(),
                        "dim": space.dim(),
                        "ambient_dim": space.space().len(),
                        "basis": basis,
                    });
                    pretty(&doc)
                }
            };
            Ok(ok(text))
        }
        Command::Decompose(a) => {
            let p = a.dim.parse(&a.poly, Side::Cocharacter)?;
            let gstar = match p.side() {
                Side::Cocharacter => p,
                Side::Character => p.dual()?,
            };
            let space = CobordismSpace::compute(gstar.dim(), a.method.into())?;
            let basis = space.basis_polynomials();
            let coords = match space.decompose(&gstar) {
                Ok(c) => c,
                Err(twotorus_core::Error::NotInSpan) => return Ok(verdict(false, "not in span\n")),
                Err(e) => return Err(e.into()),
            };
            let used: Vec<usize> = coords.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect();
            let text = match a.format {
                TextFormat::Text => {
                    let mut s = String::new();
                    for &i in &used {
                        writeln!(s, "b{i} = {}", basis[i]).unwrap();
                    }
                    s
                }
                TextFormat::Json => pretty(&json!({
                    "n": gstar.dim(),
                    "dim": space.dim(),
                    "coordinates": used,
                    "terms": used.iter().map(|&i| basis[i].to_string()).collect::<Vec<_>>(),
                })),
            };
            Ok(ok(text))
        }
        Command::VerifyTable(a) => {
            let n = space_dim(a.dim.resolve()?)?;
            let rows = formats::parse_table(&read(&a.file)?, n)?;
            let space = CobordismSpace::compute(n, a.method.into())?;
            let report = cobordism::verify_table(n, &rows, &space)?;
            let good = report.independent && report.matches_dim_vn && report.all_cycles && report.all_faithful;
            Ok(verdict(good, pretty(&formats::table_report_json(&report))))
        }
        Command::CheckDks(a) => {
            let g = a.dim.parse_character(&a.poly)?;
            let report = dks::check_up_to_degree(&g, a.max_degree)?;
            Ok(verdict(!report.certified_nonmember, pretty(&formats::dks_report_json(&report))))
        }
        Command::PrismPath(a) => {
            let n = a.dim.resolve()?;
            let parse_mono = |text: &str| -> Result<Polynomial, CliError> {
                let p = parse_polynomial(text, n, Side::Cocharacter)?;
                if p.len() != 1 || p.side() != Side::Cocharacter {
                    return Err(CliError::Usage(format!("{text:?} is not a single cocharacter monomial")));
                }
                Ok(p)
            };
            let (p1, p2) = (parse_mono(&a.from)?, parse_mono(&a.to)?);
            if p1.dim() != p2.dim() {
                return Err(twotorus_core::Error::DimensionMismatch { expected: p1.dim(), found: p2.dim() }.into());
            }
            let m1 = p1.terms().next().unwrap();
            let m2 = p2.terms().next().unwrap();
            let steps = polytope::prism_path(p1.dim(), m1, m2)?;
            let text = match a.format {
                TextFormat::Json => pretty(&formats::prism_path_json(&steps)),
                TextFormat::Text => {
                    let mut s = String::new();
                    for step in &steps {
                        let from = Polynomial::from_monomials(Side::Cocharacter, p1.dim(), [step.from.clone()])?;
                        let to = Polynomial::from_monomials(Side::Cocharacter, p1.dim(), [step.to.clone()])?;
                        writeln!(s, "{from} -> {to}: {}", formats::write_coloring_line(&step.polytope, &step.coloring))
                            .unwrap();
                    }
                    s
                }
            };
            Ok(ok(text))
        }
        Command::ColoringPoly(a) => {
            let colorings = formats::parse_colorings(&read(&a.file)?)?;
            let polys = colorings
                .iter()
                .map(|(p, l)| polytope::coloring_polynomial(p, l))
                .collect::<Result<Vec<_>, _>>()?;
            let text = match a.format {
                TextFormat::Text => polys.iter().map(line).collect(),
                TextFormat::Json => pretty(&json!(polys.iter().map(|p| p.to_string()).collect::<Vec<_>>())),
            };
            Ok(ok(text))
        }
    }
}

fn graph(a: &GraphArgs) -> Result<Done, CliError> {
    let mut g = match (&a.poly, &a.graph) {
        (Some(text), _) => ColoredGraph::from_polynomial(&a.dim.parse_character(text)?)?,
        (None, Some(path)) => {
            let g = formats::graph_from_json(&read(path)?)?;
            let validation = g.validate()?;
            if let Some(v) = validation.violation {
                return Ok(verdict(false, format!("invalid: {v:?}\n")));
            }
            g
        }
        (None, None) => return Err(CliError::Usage("give a polynomial or --graph FILE".into())),
    };
    if a.prime {
        g = g.prime_reduce();
    }
    let text = match a.format {
        GraphFormat::Dot => formats::graph_to_dot(&g),
        GraphFormat::Json => format!("{}\n", formats::graph_to_json(&g)),
        GraphFormat::Poly => line(&g.coloring_polynomial()),
    };
    Ok(ok(text))
}

fn pretty(v: &serde_json::Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(v).expect("JSON values serialize"))
}
