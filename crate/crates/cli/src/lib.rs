//! Command-line front end for projective arithmetics: operation tables,
//! expression evaluation, law reports, relation listings and the
//! machine-infinity demo.
//!
//! Exit codes: 0 success, 1 some law failed, 2 usage or input error.

pub mod expr;
pub mod render;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use nda_core::laws::{machine_infinity_demo, MachineInfinityReport, RelationMatrix, DEFAULT_ARITY};
use nda_core::{
    parse_generator_spec, ElementFormat, Error, GeneratorSpec, LawCheck, LawId, LawVerdict, Nat,
    Natural, ProjectiveArithmetic, Relation, RelationSpec, Result, Side, SparseNat,
    DEFAULT_VALIDATION_BOUND,
};

pub use expr::{eval, parse_expr, Expr};

pub const EXIT_OK: u8 = 0;
pub const EXIT_LAW_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "nda",
    version,
    about = "Projective non-Diophantine arithmetics over the naturals"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the operation table on [0, bound]².
    Table(TableArgs),
    /// Evaluate an expression; `+` and `*` associate to the left.
    Eval(EvalArgs),
    /// Check laws on [0, bound].
    Laws(LawsArgs),
    /// List pairs related by ≪ or ≪≪ and the maximal successor chains.
    Relations(RelationsArgs),
    /// Find every M <= bound with M + 1 = M.
    Demo(DemoArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Markdown,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Scalar {
    /// `sparse` for dblexp, `big` otherwise.
    Auto,
    Big,
    Sparse,
    U64,
    U128,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Op {
    Add,
    Mul,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Generator spec, e.g. `power:2`, `linear:10`, `dblexp`, `table:f.txt`.
    #[arg(long = "gen")]
    pub gen: String,
    #[arg(long, value_enum, default_value_t = Scalar::Auto)]
    pub scalar: Scalar,
    /// Prefix on which the arithmetic conditions are validated.
    #[arg(long, default_value_t = DEFAULT_VALIDATION_BOUND)]
    pub validate: u64,
    #[arg(long, value_enum, default_value_t = Format::Markdown)]
    pub format: Format,
    /// Render elements as `2_μ` instead of `2_u`.
    #[arg(long)]
    pub unicode: bool,
}

impl Common {
    fn element_format(&self) -> ElementFormat {
        ElementFormat {
            unicode: self.unicode,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct TableArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_enum, default_value_t = Op::Add)]
    pub op: Op,
    #[arg(long, default_value_t = 12)]
    pub bound: u64,
}

#[derive(Debug, Clone, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub common: Common,
    /// Evaluate unparenthesised runs of one operator as a single n-ary sum
    /// or product.
    #[arg(long)]
    pub nary: bool,
    pub expression: String,
}

#[derive(Debug, Clone, Args)]
pub struct LawsArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, default_value_t = 20)]
    pub bound: u64,
    /// A law id, or `all` for the whole suite.
    #[arg(long, default_value = "all")]
    pub law: String,
    /// Arity for the n-ary laws.
    #[arg(long = "nary", default_value_t = DEFAULT_ARITY)]
    pub arity: usize,
    /// First relation for `--law compatibility`.
    #[arg(long, default_value = "ml")]
    pub p: String,
    /// Second relation for `--law compatibility`.
    #[arg(long, default_value = "le")]
    pub q: String,
    #[arg(long, value_enum, default_value_t = SideArg::Both)]
    pub side: SideArg,
    /// Smallest element scanned by `--law compatibility`.
    #[arg(long, default_value_t = 0)]
    pub from: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
    Both,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Left => Side::Left,
            SideArg::Right => Side::Right,
            SideArg::Both => Side::Both,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct RelationsArgs {
    #[command(flatten)]
    pub common: Common,
    /// `ml` (≪) or `mml` (≪≪).
    #[arg(long, default_value = "ml")]
    pub relation: String,
    #[arg(long, default_value_t = 12)]
    pub bound: u64,
}

#[derive(Debug, Clone, Args)]
pub struct DemoArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, default_value_t = 1000)]
    pub bound: u64,
}

/// An operation table with exact cells.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperationTable {
    pub gen: String,
    pub op: Op,
    pub bound: u64,
    /// `rows[a][b] = a op b`, in decimal.
    pub rows: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationsReport {
    pub gen: String,
    pub relation: Relation,
    pub bound: u64,
    pub pairs: Vec<(u64, u64)>,
    /// Maximal runs `s R s+1 R … R e`.
    pub chains: Vec<(u64, u64)>,
}

/// What a command printed and how the process should exit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            code: EXIT_OK,
        }
    }
}

fn resolve(scalar: Scalar, spec: &GeneratorSpec) -> Scalar {
    match (scalar, spec) {
        (Scalar::Auto, GeneratorSpec::DoubleExp) => Scalar::Sparse,
        (Scalar::Auto, _) => Scalar::Big,
        (s, _) => s,
    }
}

macro_rules! with_scalar {
    ($common:expr, |$ar:ident| $body:expr) => {{
        let gen = parse_generator_spec(&$common.gen)?;
        let validate = $common.validate.max(2);
        match resolve($common.scalar, gen.spec()) {
            Scalar::Big | Scalar::Auto => {
                let $ar = ProjectiveArithmetic::<Nat>::new(gen, validate)?;
                $body
            }
            Scalar::Sparse => {
                let $ar = ProjectiveArithmetic::<SparseNat>::new(gen, validate)?;
                $body
            }
            Scalar::U64 => {
                let $ar = ProjectiveArithmetic::<u64>::new(gen, validate)?;
                $body
            }
            Scalar::U128 => {
                let $ar = ProjectiveArithmetic::<u128>::new(gen, validate)?;
                $body
            }
        }
    }};
}

fn table_of<N: Natural>(
    ar: &ProjectiveArithmetic<N>,
    op: Op,
    bound: u64,
) -> Result<OperationTable> {
    let rows = (0..=bound)
        .map(|a| {
            (0..=bound)
                .map(|b| {
                    let (a, b) = (N::from(a), N::from(b));
                    let v = match op {
                        Op::Add => ar.add(&a, &b)?,
                        Op::Mul => ar.mul(&a, &b)?,
                    };
                    Ok(v.to_string())
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    Ok(OperationTable {
        gen: ar.spec_text(),
        op,
        bound,
        rows,
    })
}

/// The `(bound+1) × (bound+1)` table of `op`.
pub fn run_table(common: &Common, op: Op, bound: u64) -> Result<OperationTable> {
    with_scalar!(common, |ar| table_of(&ar, op, bound))
}

/// Evaluates `text` and renders the result as an element.
pub fn run_eval(common: &Common, text: &str, nary: bool) -> Result<String> {
    let e = parse_expr(text)?;
    let fmt = common.element_format();
    with_scalar!(common, |ar| eval(&ar, &e, nary).map(|v| fmt.format(&v)))
}

/// The checks selected by `args.law`.
pub fn selected_laws(args: &LawsArgs) -> Result<Vec<LawCheck>> {
    if args.law == "all" {
        return Ok(LawCheck::suite(args.arity));
    }
    let id: LawId = args.law.parse()?;
    match id {
        LawId::Compatibility => Ok(vec![LawCheck::Compatibility(
            RelationSpec::new(args.p.parse()?, args.side.into()),
            RelationSpec::new(args.q.parse()?, args.side.into()),
            args.from,
        )]),
        LawId::ReverseProjectivity => Err(Error::Invalid(
            "reverse_projectivity concerns carrier maps, not a generator; use the library".into(),
        )),
        id => Ok(vec![
            LawCheck::for_id(id, args.arity).expect("suite covers the id")
        ]),
    }
}

pub fn run_laws(args: &LawsArgs) -> Result<Vec<LawVerdict>> {
    let checks = selected_laws(args)?;
    with_scalar!(args.common, |ar| checks
        .iter()
        .map(|c| c.run(&ar, args.bound))
        .collect::<Result<Vec<_>>>())
}

pub fn run_relations(common: &Common, relation: Relation, bound: u64) -> Result<RelationsReport> {
    with_scalar!(common, |ar| {
        let m = RelationMatrix::build(&ar, relation, bound)?;
        Ok(RelationsReport {
            gen: ar.spec_text(),
            relation,
            bound,
            pairs: m.pairs(),
            chains: m.successor_chains(),
        })
    })
}

pub fn run_demo(common: &Common, bound: u64) -> Result<MachineInfinityReport> {
    with_scalar!(common, |ar| machine_infinity_demo(&ar, bound))
}

/// Runs one parsed command line.
pub fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Table(a) => {
            let t = run_table(&a.common, a.op, a.bound)?;
            Ok(Outcome::ok(render::table(&t, &a.common)?))
        }
        Command::Eval(a) => Ok(Outcome::ok(format!(
            "{}\n",
            run_eval(&a.common, &a.expression, a.nary)?
        ))),
        Command::Laws(a) => {
            let verdicts = run_laws(a)?;
            let code = if verdicts.iter().all(|v| v.holds) {
                EXIT_OK
            } else {
                EXIT_LAW_FAILED
            };
            Ok(Outcome {
                stdout: render::laws(&verdicts, &a.common)?,
                code,
            })
        }
        Command::Relations(a) => {
            let relation: Relation = a.relation.parse()?;
            let r = run_relations(&a.common, relation, a.bound)?;
            Ok(Outcome::ok(render::relations(&r, &a.common)?))
        }
        Command::Demo(a) => {
            let r = run_demo(&a.common, a.bound)?;
            Ok(Outcome::ok(render::demo(&r, &a.common)?))
        }
    }
}
