//! Argument parsing, dispatch and rendering for the `moorops` binary.
//!
//! [`run`] never prints; it returns the exit code and both output streams so
//! the binary and the tests share one code path.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use moorops::abgroup::{cokernel, parse_group_expr, smith_normal_form, FgAbGroup, IntMatrix};
use moorops::chains::{kunneth_check, moore_complex, tensor_complex, ChainComplex, KunnethReport};
use moorops::functors::FunctorKind;
use moorops::moorecalc::{
    homotopy_with_coeffs, smash_decompose, MooreAtom, MooreExpr, StemTable, UctSequence,
};
use moorops::opsclassify::{
    basic_range_check, bo_group, classify, commutativity_sign, count_special_ops,
    ext_ops_enumerate, neisendorfer_shift, special_kind, torsion_exists, triviality_check,
    whitehead_count_direct, OperationType, Outcome, ProductKind, ShiftDirection,
};
use moorops::oracle::{
    oracle_ext, oracle_hom, oracle_hom_count, oracle_tensor, oracle_tor, OracleConfig,
};
use moorops::pointmaps::{
    check_identities, coord, eval_lambda, eval_mu_prime, eval_phi, eval_sigma, AbstractPoint,
    Coord, DoubleSuspensionPoint, GridConfig, JoinPoint, ProductPoint, SmashPoint,
    SuspendedJoinPoint, SuspensionPoint,
};
use moorops::verify::{run_suite, SuiteConfig};
use moorops::{Error, Result};

/// Subcommand path and the library operation it runs. Every leaf subcommand
/// appears exactly once.
pub const DISPATCH: &[(&str, &str)] = &[
    ("group canon", "parse_group_expr"),
    ("group order", "order"),
    ("group sum", "direct_sum"),
    ("group snf", "smith_normal_form"),
    ("group cokernel", "cokernel"),
    ("functor hom", "hom"),
    ("functor ext", "ext"),
    ("functor tensor", "tensor"),
    ("functor tor", "tor"),
    ("oracle hom-count", "oracle_hom_count"),
    ("oracle ext", "oracle_ext"),
    ("oracle tensor", "oracle_tensor"),
    ("chain moore", "moore_complex"),
    ("chain tensor", "tensor_complex"),
    ("chain homology", "homology"),
    ("chain kunneth", "kunneth_check"),
    ("moore decompose", "smash_decompose"),
    ("moore stem", "stem"),
    ("moore pi", "homotopy_with_coeffs"),
    ("ops classify", "classify"),
    ("ops range", "basic_range_check"),
    ("ops trivial", "triviality_check"),
    ("ops bo", "bo_group"),
    ("ops special-kind", "special_kind"),
    ("ops count", "count_special_ops"),
    ("ops count-whitehead", "whitehead_count_direct"),
    ("ops torsion-exists", "torsion_exists"),
    ("ops ext-enumerate", "ext_ops_enumerate"),
    ("ops sign", "commutativity_sign"),
    ("ops shift", "neisendorfer_shift"),
    ("maps check", "check_identities"),
    ("maps lambda", "eval_lambda"),
    ("maps phi", "eval_phi"),
    ("maps sigma", "eval_sigma"),
    ("maps mu-prime", "eval_mu_prime"),
    ("verify all", "run_suite"),
];

#[derive(Debug, Parser)]
#[command(
    name = "moorops",
    version,
    about = "Exact computations for homotopy operations with coefficients"
)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Stem-table file whose records extend or override the built-in table.
    #[arg(long, global = true, value_name = "PATH")]
    pub stem_table: Option<PathBuf>,
    /// Cross-check results by brute-force recomputation where supported.
    #[arg(long, global = true)]
    pub oracle: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Finitely generated abelian groups.
    #[command(subcommand)]
    Group(GroupCmd),
    /// Hom, Ext, tensor product and Tor.
    #[command(subcommand)]
    Functor(FunctorCmd),
    /// Brute-force recomputation of functors on finite groups.
    #[command(subcommand)]
    Oracle(OracleCmd),
    /// Cellular chain complexes of Moore spaces.
    #[command(subcommand)]
    Chain(ChainCmd),
    /// Moore-space smash products, stems and homotopy groups.
    #[command(subcommand)]
    Moore(MooreCmd),
    /// Classification and counting of binary operations.
    #[command(subcommand)]
    Ops(OpsCmd),
    /// Exact evaluation of the join and suspension maps.
    #[command(subcommand)]
    Maps(MapsCmd),
    /// End-to-end cross-checks.
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Debug, Subcommand)]
pub enum GroupCmd {
    /// Canonical form of a group expression.
    Canon { expr: String },
    /// Order of a group.
    Order { expr: String },
    /// Direct sum of one or more groups.
    Sum {
        #[arg(required = true)]
        exprs: Vec<String>,
    },
    /// Smith normal form of an integer matrix, rows separated by `;`.
    Snf { matrix: String },
    /// Cokernel of a presentation matrix (rows are relations).
    Cokernel { matrix: String },
}

#[derive(Debug, Args)]
pub struct GroupPair {
    pub g: String,
    pub h: String,
}

#[derive(Debug, Subcommand)]
pub enum FunctorCmd {
    Hom(GroupPair),
    Ext(GroupPair),
    Tensor(GroupPair),
    Tor(GroupPair),
}

#[derive(Debug, Subcommand)]
pub enum OracleCmd {
    /// |Hom(G, H)| by enumerating generator images.
    HomCount(GroupPair),
    /// Ext(G, H) from a presentation of G.
    Ext(GroupPair),
    /// G ⊗ H from a presentation.
    Tensor(GroupPair),
}

#[derive(Debug, Args)]
pub struct MoorePair {
    #[arg(long)]
    pub g1: String,
    #[arg(long)]
    pub q1: u32,
    #[arg(long)]
    pub g2: String,
    #[arg(long)]
    pub q2: u32,
}

#[derive(Debug, Subcommand)]
pub enum ChainCmd {
    /// Reduced cellular chains of M(G, n).
    Moore {
        #[arg(long)]
        g: String,
        #[arg(long)]
        n: u32,
    },
    /// Tensor product of two Moore complexes.
    Tensor(MoorePair),
    /// Homology of M(G1, q1), or of M(G1, q1) ∧ M(G2, q2) when both are given.
    Homology {
        #[arg(long)]
        g1: String,
        #[arg(long)]
        q1: u32,
        #[arg(long, requires = "q2")]
        g2: Option<String>,
        #[arg(long, requires = "g2")]
        q2: Option<u32>,
        /// Single degree; all nonzero degrees when omitted.
        #[arg(long)]
        n: Option<u32>,
    },
    /// Chain-level Künneth check for M(G1, q1) ∧ M(G2, q2).
    Kunneth(MoorePair),
}

#[derive(Debug, Subcommand)]
pub enum MooreCmd {
    /// Decompose M(G1, q1) ∧ M(G2, q2) into a wedge of Moore spaces.
    Decompose {
        /// Moore atom `G@n`.
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Stem k of M(G, n), i.e. π_(n+k)(M(G, n)).
    Stem {
        #[arg(long)]
        g: String,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: u32,
    },
    /// π_n(X; G) through the universal coefficient sequence.
    Pi {
        /// Wedge of Moore atoms, e.g. `Z/3@4 | Z@5`.
        #[arg(long)]
        space: String,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        coeff: String,
    },
}

#[derive(Debug, Args)]
pub struct TypeArg {
    /// Operation type `G1,G2,G3;q1,q2,q3`.
    #[arg(long = "type", value_name = "TYPE")]
    pub ty: String,
}

#[derive(Debug, Subcommand)]
pub enum OpsCmd {
    /// Every applicable check for an operation type.
    Classify(TypeArg),
    /// Whether the type lies in the basic range.
    Range(TypeArg),
    /// Whether every operation of the type vanishes for degree reasons.
    Trivial(TypeArg),
    /// Cardinality of the group of basic operations.
    Bo(TypeArg),
    /// Whitehead or Torsion candidate, or neither.
    SpecialKind(TypeArg),
    /// Number of Whitehead or Torsion products of the type.
    Count(TypeArg),
    /// Number of Whitehead products of type {G1, G2; q1, q2} by the direct formula.
    CountWhitehead {
        #[arg(long)]
        g1: String,
        #[arg(long)]
        g2: String,
        #[arg(long)]
        q1: u32,
        #[arg(long)]
        q2: u32,
    },
    /// Whether a Torsion product of type {Z/m, Z/n; q1, q2} exists.
    TorsionExists {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        q1: u32,
        #[arg(long)]
        q2: u32,
    },
    /// The k Ext operations of type {Z, Z, Z/k; q1, q2, q1 + q2 - 2}.
    ExtEnumerate {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        q1: u32,
        #[arg(long)]
        q2: u32,
    },
    /// Commutativity sign of Whitehead (`w`) or Torsion (`t`) products.
    Sign {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        q1: u32,
        #[arg(long)]
        q2: u32,
    },
    /// Move a degree between Moore and co-Moore indexing.
    Shift {
        #[arg(long)]
        n: u32,
        /// `to-co-moore` or `to-moore`.
        #[arg(long, default_value = "to-co-moore")]
        direction: String,
    },
}

/// A point of `A` or `B`: a positive token, or `*` for the basepoint.
#[derive(Debug, Args)]
pub struct JoinArgs {
    #[arg(long)]
    pub a: String,
    #[arg(long)]
    pub b: String,
    #[arg(long)]
    pub t: String,
}

#[derive(Debug, Subcommand)]
pub enum MapsCmd {
    /// Check every pointwise identity over a rational grid.
    Check {
        #[arg(long, default_value_t = 8)]
        max_denominator: i64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = GridConfig::default().seed)]
        seed: u64,
    },
    /// Λ((a, b, t), u).
    Lambda {
        #[command(flatten)]
        p: JoinArgs,
        #[arg(long)]
        u: String,
    },
    /// Φ_s((a, b, t), u).
    Phi {
        #[command(flatten)]
        p: JoinArgs,
        #[arg(long)]
        u: String,
        #[arg(long)]
        s: String,
    },
    /// σ((a, b), t, u).
    Sigma {
        #[command(flatten)]
        p: JoinArgs,
        #[arg(long)]
        u: String,
    },
    /// μ′(a, b, t).
    MuPrime {
        #[command(flatten)]
        p: JoinArgs,
    },
}

#[derive(Debug, Subcommand)]
pub enum VerifyCmd {
    /// Run every cross-check and print a summary table.
    All {
        /// Smaller sweeps.
        #[arg(long)]
        quick: bool,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// A successful command: its JSON report, a text rendering, and whether the
/// result counts as a failure (a verification that did not pass).
struct Report {
    value: Value,
    text: String,
    failed: bool,
}

impl Report {
    fn new(value: impl Serialize, text: impl Into<String>) -> Result<Report> {
        Ok(Report {
            value: to_value(&value),
            text: text.into(),
            failed: false,
        })
    }
}

fn to_value(v: &impl Serialize) -> Value {
    serde_json::to_value(v).expect("report types serialize to JSON")
}

fn render_json(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values render") + "\n"
}

fn error_json(kind: &str, message: &str) -> Value {
    json!({ "error": { "kind": kind, "message": message } })
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let json_requested = args.iter().any(|a| a == "--json");
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                return Output {
                    code,
                    stdout: rendered,
                    stderr: String::new(),
                };
            }
            let (stdout, stderr) = if json_requested {
                (
                    render_json(&error_json("UsageError", rendered.trim())),
                    String::new(),
                )
            } else {
                (String::new(), rendered)
            };
            return Output {
                code: 2,
                stdout,
                stderr,
            };
        }
    };
    match execute(&cli) {
        Ok(report) => Output {
            code: i32::from(report.failed),
            stdout: if cli.json {
                render_json(&report.value)
            } else {
                let mut t = report.text;
                if !t.ends_with('\n') {
                    t.push('\n');
                }
                t
            },
            stderr: String::new(),
        },
        Err(e) => {
            let code = if e.is_input_error() { 2 } else { 1 };
            if cli.json {
                Output {
                    code,
                    stdout: render_json(&error_json(e.kind(), &e.to_string())),
                    stderr: String::new(),
                }
            } else {
                Output {
                    code,
                    stdout: String::new(),
                    stderr: format!("error[{}]: {e}\n", e.kind()),
                }
            }
        }
    }
}

/// The subcommand path of a parsed command, as listed in [`DISPATCH`].
pub fn command_path(cmd: &Command) -> &'static str {
    match cmd {
        Command::Group(c) => match c {
            GroupCmd::Canon { .. } => "group canon",
            GroupCmd::Order { .. } => "group order",
            GroupCmd::Sum { .. } => "group sum",
            GroupCmd::Snf { .. } => "group snf",
            GroupCmd::Cokernel { .. } => "group cokernel",
        },
        Command::Functor(c) => match c {
            FunctorCmd::Hom(_) => "functor hom",
            FunctorCmd::Ext(_) => "functor ext",
            FunctorCmd::Tensor(_) => "functor tensor",
            FunctorCmd::Tor(_) => "functor tor",
        },
        Command::Oracle(c) => match c {
            OracleCmd::HomCount(_) => "oracle hom-count",
            OracleCmd::Ext(_) => "oracle ext",
            OracleCmd::Tensor(_) => "oracle tensor",
        },
        Command::Chain(c) => match c {
            ChainCmd::Moore { .. } => "chain moore",
            ChainCmd::Tensor(_) => "chain tensor",
            ChainCmd::Homology { .. } => "chain homology",
            ChainCmd::Kunneth(_) => "chain kunneth",
        },
        Command::Moore(c) => match c {
            MooreCmd::Decompose { .. } => "moore decompose",
            MooreCmd::Stem { .. } => "moore stem",
            MooreCmd::Pi { .. } => "moore pi",
        },
        Command::Ops(c) => match c {
            OpsCmd::Classify(_) => "ops classify",
            OpsCmd::Range(_) => "ops range",
            OpsCmd::Trivial(_) => "ops trivial",
            OpsCmd::Bo(_) => "ops bo",
            OpsCmd::SpecialKind(_) => "ops special-kind",
            OpsCmd::Count(_) => "ops count",
            OpsCmd::CountWhitehead { .. } => "ops count-whitehead",
            OpsCmd::TorsionExists { .. } => "ops torsion-exists",
            OpsCmd::ExtEnumerate { .. } => "ops ext-enumerate",
            OpsCmd::Sign { .. } => "ops sign",
            OpsCmd::Shift { .. } => "ops shift",
        },
        Command::Maps(c) => match c {
            MapsCmd::Check { .. } => "maps check",
            MapsCmd::Lambda { .. } => "maps lambda",
            MapsCmd::Phi { .. } => "maps phi",
            MapsCmd::Sigma { .. } => "maps sigma",
            MapsCmd::MuPrime { .. } => "maps mu-prime",
        },
        Command::Verify(VerifyCmd::All { .. }) => "verify all",
    }
}

fn stem_table(cli: &Cli) -> Result<StemTable> {
    let builtin = StemTable::builtin();
    match &cli.stem_table {
        Some(path) => Ok(builtin.merged(&StemTable::load(path)?)),
        None => Ok(builtin),
    }
}

fn execute(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Group(c) => group_cmd(c),
        Command::Functor(c) => functor_cmd(c, cli.oracle),
        Command::Oracle(c) => oracle_cmd(c),
        Command::Chain(c) => chain_cmd(c),
        Command::Moore(c) => moore_cmd(c, &stem_table(cli)?, cli.oracle),
        Command::Ops(c) => ops_cmd(c, &stem_table(cli)?),
        Command::Maps(c) => maps_cmd(c),
        Command::Verify(VerifyCmd::All { quick }) => verify_all(*quick, &stem_table(cli)?),
    }
}

fn group(s: &str) -> Result<FgAbGroup> {
    parse_group_expr(s)
}

/// `"1, 2; 3 4"`: rows separated by `;`, entries by commas or whitespace.
fn parse_matrix(s: &str) -> Result<IntMatrix> {
    let mut rows: Vec<Vec<i64>> = Vec::new();
    let mut offset = 0;
    for row in s.split(';') {
        let mut entries = Vec::new();
        let mut pos = offset;
        for token in row.split(|c: char| c == ',' || c.is_whitespace()) {
            if !token.is_empty() {
                let value = token.parse().map_err(|_| Error::Parse {
                    position: pos,
                    message: format!("expected an integer, found `{token}`"),
                })?;
                entries.push(value);
            }
            pos += token.len() + 1;
        }
        offset += row.len() + 1;
        rows.push(entries);
    }
    let cols = rows.first().map_or(0, Vec::len);
    if cols == 0 || rows.iter().any(|r| r.len() != cols) {
        return Err(Error::Dimension(format!(
            "matrix rows must be nonempty and of equal length in `{s}`"
        )));
    }
    IntMatrix::from_rows(cols, &rows)
}

/// Integers that fit in an `i64` become JSON numbers, larger ones strings.
fn int_json(n: &impl ToString) -> Value {
    let s = n.to_string();
    s.parse::<i64>()
        .map(Value::from)
        .unwrap_or(Value::String(s))
}

fn matrix_json(m: &IntMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(int_json).collect()))
            .collect(),
    )
}

fn group_cmd(c: &GroupCmd) -> Result<Report> {
    match c {
        GroupCmd::Canon { expr } => {
            let g = group(expr)?;
            Report::new(json!({ "input": expr, "group": g }), g.to_string())
        }
        GroupCmd::Order { expr } => {
            let g = group(expr)?;
            let order = g.order();
            Report::new(json!({ "group": g, "order": order }), order.to_string())
        }
        GroupCmd::Sum { exprs } => {
            let groups = exprs.iter().map(|e| group(e)).collect::<Result<Vec<_>>>()?;
            let sum = groups
                .iter()
                .fold(FgAbGroup::trivial(), |acc, g| acc.direct_sum(g));
            Report::new(json!({ "summands": groups, "sum": sum }), sum.to_string())
        }
        GroupCmd::Snf { matrix } => {
            let m = parse_matrix(matrix)?;
            let s = smith_normal_form(&m);
            let invariants: Vec<String> = s.invariants.iter().map(ToString::to_string).collect();
            Report::new(
                json!({
                    "matrix": matrix_json(&m),
                    "diagonal": matrix_json(&s.diagonal),
                    "invariants": s.invariants.iter().map(int_json).collect::<Vec<_>>(),
                    "rank": s.rank(),
                }),
                format!(
                    "diagonal {}\ninvariants [{}]\nrank {}",
                    s.diagonal,
                    invariants.join(", "),
                    s.rank()
                ),
            )
        }
        GroupCmd::Cokernel { matrix } => {
            let m = parse_matrix(matrix)?;
            let g = cokernel(&m);
            Report::new(
                json!({ "matrix": matrix_json(&m), "cokernel": g }),
                g.to_string(),
            )
        }
    }
}

fn functor_cmd(c: &FunctorCmd, with_oracle: bool) -> Result<Report> {
    let (kind, p) = match c {
        FunctorCmd::Hom(p) => (FunctorKind::Hom, p),
        FunctorCmd::Ext(p) => (FunctorKind::Ext, p),
        FunctorCmd::Tensor(p) => (FunctorKind::Tensor, p),
        FunctorCmd::Tor(p) => (FunctorKind::Tor, p),
    };
    let (g, h) = (group(&p.g)?, group(&p.h)?);
    let result = kind.apply(&g, &h);
    let mut value = json!({ "functor": kind, "g": g, "h": h, "result": result });
    let mut text = format!("{kind}({g}, {h}) = {result}");
    if with_oracle {
        let config = OracleConfig::default();
        let brute = match kind {
            FunctorKind::Hom => oracle_hom(&g, &h, &config),
            FunctorKind::Ext => oracle_ext(&g, &h),
            FunctorKind::Tensor => oracle_tensor(&g, &h, &config),
            FunctorKind::Tor => oracle_tor(&g, &h, &config),
        };
        let check = match &brute {
            Ok(b) => json!({ "value": b, "agrees": *b == result }),
            Err(e) => json!({ "error": { "kind": e.kind(), "message": e.to_string() } }),
        };
        value["oracle"] = check;
        match brute {
            Ok(b) => write!(
                text,
                "\noracle: {b} ({})",
                if b == result { "agrees" } else { "DISAGREES" }
            ),
            Err(e) => write!(text, "\noracle unavailable: {e}"),
        }
        .expect("writing to a String");
    }
    Report::new(value, text)
}

fn oracle_cmd(c: &OracleCmd) -> Result<Report> {
    let config = OracleConfig::default();
    let (name, p) = match c {
        OracleCmd::HomCount(p) => ("hom-count", p),
        OracleCmd::Ext(p) => ("ext", p),
        OracleCmd::Tensor(p) => ("tensor", p),
    };
    let (g, h) = (group(&p.g)?, group(&p.h)?);
    match c {
        OracleCmd::HomCount(_) => {
            let n = oracle_hom_count(&g, &h, &config)?;
            Report::new(
                json!({ "oracle": name, "g": g, "h": h, "count": int_json(&n) }),
                format!("|Hom({g}, {h})| = {n}"),
            )
        }
        OracleCmd::Ext(_) => {
            let r = oracle_ext(&g, &h)?;
            Report::new(
                json!({ "oracle": name, "g": g, "h": h, "result": r }),
                format!("Ext({g}, {h}) = {r}"),
            )
        }
        OracleCmd::Tensor(_) => {
            let r = oracle_tensor(&g, &h, &config)?;
            Report::new(
                json!({ "oracle": name, "g": g, "h": h, "result": r }),
                format!("{g} ⊗ {h} = {r}"),
            )
        }
    }
}

fn complex_json(c: &ChainComplex) -> Value {
    let degrees: Vec<Value> = c
        .ranks()
        .filter(|&(_, r)| r > 0)
        .map(|(n, r)| json!({ "degree": n, "rank": r, "boundary": matrix_json(&c.boundary(n)) }))
        .collect();
    json!({ "degrees": degrees, "boundary_squares_to_zero": c.is_valid() })
}

fn complex_text(c: &ChainComplex) -> String {
    let mut out = String::new();
    for (n, r) in c.ranks().filter(|&(_, r)| r > 0) {
        writeln!(out, "C_{n}: rank {r}, ∂ = {}", c.boundary(n)).expect("writing to a String");
    }
    write!(out, "∂∂ = 0: {}", c.is_valid()).expect("writing to a String");
    out
}

fn homology_rows(c: &ChainComplex, n: Option<u32>) -> Vec<(u32, FgAbGroup)> {
    match (n, c.support()) {
        (Some(n), _) => vec![(n, c.homology(n))],
        (None, Some((lo, hi))) => (lo..=hi)
            .map(|n| (n, c.homology(n)))
            .filter(|(_, h)| !h.is_trivial())
            .collect(),
        (None, None) => Vec::new(),
    }
}

fn kunneth_text(r: &KunnethReport) -> String {
    let mut out = format!(
        "M({}, {}) ∧ M({}, {}): {}\n",
        r.g1,
        r.q1,
        r.g2,
        r.q2,
        if r.pass { "pass" } else { "FAIL" }
    );
    for d in &r.degrees {
        writeln!(
            out,
            "  H_{}: expected {}, computed {}{}",
            d.degree,
            d.expected,
            d.computed,
            if d.matches { "" } else { "  MISMATCH" }
        )
        .expect("writing to a String");
    }
    write!(out, "  ∂∂ = 0: {}", r.boundary_squares_to_zero).expect("writing to a String");
    out
}

fn chain_cmd(c: &ChainCmd) -> Result<Report> {
    match c {
        ChainCmd::Moore { g, n } => {
            let g = group(g)?;
            let cx = moore_complex(&g, *n)?;
            let mut value = complex_json(&cx);
            value["group"] = to_value(&g);
            value["n"] = json!(n);
            Report::new(value, complex_text(&cx))
        }
        ChainCmd::Tensor(p) => {
            let (g1, g2) = (group(&p.g1)?, group(&p.g2)?);
            let cx = tensor_complex(&moore_complex(&g1, p.q1)?, &moore_complex(&g2, p.q2)?);
            Report::new(complex_json(&cx), complex_text(&cx))
        }
        ChainCmd::Homology { g1, q1, g2, q2, n } => {
            let g1 = group(g1)?;
            let mut cx = moore_complex(&g1, *q1)?;
            if let (Some(g2), Some(q2)) = (g2, q2) {
                cx = tensor_complex(&cx, &moore_complex(&group(g2)?, *q2)?);
            }
            let rows = homology_rows(&cx, *n);
            let value: Vec<Value> = rows
                .iter()
                .map(|(d, h)| json!({ "degree": d, "homology": h }))
                .collect();
            let text = if rows.is_empty() {
                "all homology vanishes".to_string()
            } else {
                rows.iter()
                    .map(|(d, h)| format!("H_{d} = {h}"))
                    .collect::<Vec<_>>()
                    .join("\n")
            };
            Report::new(json!({ "homology": value }), text)
        }
        ChainCmd::Kunneth(p) => {
            let r = kunneth_check(&group(&p.g1)?, p.q1, &group(&p.g2)?, p.q2)?;
            let text = kunneth_text(&r);
            let failed = !r.pass;
            let mut report = Report::new(r, text)?;
            report.failed = failed;
            Ok(report)
        }
    }
}

fn atom(s: &str) -> Result<MooreAtom> {
    let e: MooreExpr = s.parse()?;
    match e.atoms() {
        [a] => Ok(a.clone()),
        _ => Err(Error::Value(format!(
            "expected a single Moore atom `G@n` with G nontrivial, got `{s}`"
        ))),
    }
}

fn uct_text(s: &UctSequence) -> String {
    let n = s.degree;
    let g = &s.coefficients;
    let mut out = format!("X = {}\n", s.space.pretty());
    writeln!(
        out,
        "π_{n}(X) = {}, π_{}(X) = {}",
        s.pi_n,
        n + 1,
        s.pi_n_plus_1
    )
    .expect("writing to a String");
    writeln!(
        out,
        "0 -> Ext({g}, π_{}(X)) = {} -> π_{n}(X; {g}) -> Hom({g}, π_{n}(X)) = {} -> 0",
        n + 1,
        s.ext_term,
        s.hom_term
    )
    .expect("writing to a String");
    write!(out, "|π_{n}(X; {g})| = {}", s.middle_cardinality).expect("writing to a String");
    for note in &s.notes {
        write!(out, "\nnote: {note}").expect("writing to a String");
    }
    out
}

fn moore_cmd(c: &MooreCmd, table: &StemTable, with_oracle: bool) -> Result<Report> {
    match c {
        MooreCmd::Decompose { a, b } => {
            let (x, y) = (atom(a)?, atom(b)?);
            let wedge = smash_decompose(&x, &y)?;
            Report::new(
                json!({ "a": x.to_string(), "b": y.to_string(), "wedge": wedge, "pretty": wedge.pretty() }),
                wedge.pretty(),
            )
        }
        MooreCmd::Stem { g, k, n } => {
            let g = group(g)?;
            let value = table.stem(&g, *k, *n)?;
            Report::new(
                json!({ "group": g, "k": k, "n": n, "value": value, "table_version": table.version() }),
                format!("π_{}(M({g}, {n})) = {value}", n + k),
            )
        }
        MooreCmd::Pi { space, n, coeff } => {
            let x: MooreExpr = space.parse()?;
            let g = group(coeff)?;
            let s = homotopy_with_coeffs(&x, *n, &g, table)?;
            let mut text = uct_text(&s);
            let mut value = to_value(&s);
            if with_oracle {
                let config = OracleConfig::default();
                let ext = oracle_ext(&g, &s.pi_n_plus_1).map(|e| e.order());
                let hom = oracle_hom_count(&g, &s.pi_n, &config);
                match (ext, hom) {
                    (Ok(e), Ok(h)) => {
                        let agrees = e == s.ext_term.order()
                            && moorops::abgroup::Order::Finite(h) == s.hom_term.order();
                        value["oracle"] = json!({ "agrees": agrees });
                        write!(
                            text,
                            "\noracle: outer orders {}",
                            if agrees { "agree" } else { "DISAGREE" }
                        )
                    }
                    (Err(e), _) | (_, Err(e)) => {
                        value["oracle"] =
                            json!({ "error": { "kind": e.kind(), "message": e.to_string() } });
                        write!(text, "\noracle unavailable: {e}")
                    }
                }
                .expect("writing to a String");
            }
            Ok(Report {
                value,
                text,
                failed: false,
            })
        }
    }
}

fn op_type(s: &str) -> Result<OperationType> {
    s.parse()
}

fn outcome_text<T>(o: &Outcome<T>, f: impl FnOnce(&T) -> String) -> String {
    match o {
        Outcome::Value(v) => f(v),
        Outcome::Error { kind, message } => format!("{kind}: {message}"),
    }
}

fn ops_cmd(c: &OpsCmd, table: &StemTable) -> Result<Report> {
    match c {
        OpsCmd::Classify(a) => {
            let t = op_type(&a.ty)?;
            let r = classify(&t, table);
            let mut text = format!("type {}\n", r.op_type);
            writeln!(
                text,
                "basic range: {:?} (bound {})",
                r.range.verdict, r.range.bound
            )
            .expect("writing to a String");
            writeln!(text, "bi-additive: {}", r.bi_additive_forced).expect("writing to a String");
            writeln!(text, "trivially zero: {}", r.trivially_zero).expect("writing to a String");
            writeln!(text, "special kind: {:?}", r.special_kind).expect("writing to a String");
            writeln!(
                text,
                "|BO| = {}",
                outcome_text(&r.basic_operations, |s| s.middle_cardinality.to_string())
            )
            .expect("writing to a String");
            if let Some(count) = &r.special_count {
                writeln!(
                    text,
                    "special operations: {}",
                    outcome_text(count, |c| c.count.to_string())
                )
                .expect("writing to a String");
            }
            for note in &r.notes {
                writeln!(text, "note: {note}").expect("writing to a String");
            }
            Report::new(r, text)
        }
        OpsCmd::Range(a) => {
            let r = basic_range_check(&op_type(&a.ty)?);
            let text = format!(
                "{:?} (q3 < {} required; degrees ok: {})",
                r.verdict, r.bound, r.degrees_ok
            );
            Report::new(r, text)
        }
        OpsCmd::Trivial(a) => {
            let r = triviality_check(&op_type(&a.ty)?);
            let mut text = r.trivially_zero.to_string();
            if let Some(note) = &r.note {
                write!(text, "\nnote: {note}").expect("writing to a String");
            }
            Report::new(r, text)
        }
        OpsCmd::Bo(a) => {
            let s = bo_group(&op_type(&a.ty)?, table)?;
            let text = uct_text(&s);
            Report::new(s, text)
        }
        OpsCmd::SpecialKind(a) => {
            let k = special_kind(&op_type(&a.ty)?);
            Report::new(json!({ "special_kind": k }), format!("{k:?}"))
        }
        OpsCmd::Count(a) => {
            let r = count_special_ops(&op_type(&a.ty)?, table)?;
            let mut text = format!(
                "{} {:?} products: Ext({}, {}) has order {}",
                r.count, r.kind, r.op_type.g3, r.pi, r.count
            );
            for note in &r.notes {
                write!(text, "\nnote: {note}").expect("writing to a String");
            }
            Report::new(r, text)
        }
        OpsCmd::CountWhitehead { g1, g2, q1, q2 } => {
            let (g1, g2) = (group(g1)?, group(g2)?);
            let count = whitehead_count_direct(&g1, &g2, *q1, *q2, table)?;
            Report::new(
                json!({ "g1": g1, "g2": g2, "q1": q1, "q2": q2, "count": count }),
                count.to_string(),
            )
        }
        OpsCmd::TorsionExists { m, n, q1, q2 } => {
            let exists = torsion_exists(*m, *n, *q1, *q2)?;
            Report::new(
                json!({ "m": m, "n": n, "q1": q1, "q2": q2, "exists": exists }),
                exists.to_string(),
            )
        }
        OpsCmd::ExtEnumerate { k, q1, q2 } => {
            let r = ext_ops_enumerate(*k, *q1, *q2)?;
            let mut text = format!(
                "{} Ext operations of type {}\n{}",
                r.operations.len(),
                r.op_type,
                r.projection
            );
            for op in &r.operations {
                write!(
                    text,
                    "\n  {}{}",
                    op.universal_element,
                    if op.is_zero { " (zero)" } else { "" }
                )
                .expect("writing to a String");
            }
            Report::new(r, text)
        }
        OpsCmd::Sign { kind, q1, q2 } => {
            let kind: ProductKind = kind.parse()?;
            let r = commutativity_sign(kind, *q1, *q2);
            let text = format!("ε = {}, sign {:+}\n{}", r.epsilon, r.sign, r.relation);
            Report::new(r, text)
        }
        OpsCmd::Shift { n, direction } => {
            let d: ShiftDirection = direction.parse()?;
            let m = neisendorfer_shift(*n, d)?;
            Report::new(
                json!({ "n": n, "direction": d, "result": m }),
                m.to_string(),
            )
        }
    }
}

fn point(s: &str) -> Result<AbstractPoint> {
    if s.trim() == "*" {
        return Ok(AbstractPoint::base());
    }
    match s.trim().parse::<u64>() {
        Ok(n) if n > 0 => Ok(AbstractPoint::new(n)),
        _ => Err(Error::Value(format!(
            "expected a positive point token or `*`, got `{s}`"
        ))),
    }
}

fn unit(name: &str, s: &str) -> Result<Coord> {
    let c: Coord = s.trim().parse().map_err(|_| Error::Parse {
        position: 0,
        message: format!("--{name}: expected a rational like 1/3, got `{s}`"),
    })?;
    if c < coord(0, 1) || c > coord(1, 1) {
        return Err(Error::Value(format!("--{name} = {c} is outside [0, 1]")));
    }
    Ok(c)
}

fn suspension_json(p: &SuspensionPoint) -> Value {
    json!({ "point": p.x.to_string(), "u": p.u.to_string(), "basepoint": p.is_basepoint() })
}

fn product_json(p: &ProductPoint) -> Value {
    json!({ "first": suspension_json(&p.first), "second": suspension_json(&p.second), "in_wedge": p.in_wedge() })
}

fn smash_json(p: &SmashPoint) -> Value {
    let mut v = product_json(&p.0);
    v["smash_basepoint"] = json!(p.is_basepoint());
    v
}

fn join_point(p: &JoinArgs) -> Result<JoinPoint> {
    Ok(JoinPoint::new(point(&p.a)?, point(&p.b)?, unit("t", &p.t)?))
}

fn maps_cmd(c: &MapsCmd) -> Result<Report> {
    match c {
        MapsCmd::Check {
            max_denominator,
            samples,
            seed,
        } => {
            if *max_denominator < 1 {
                return Err(Error::Value("--max-denominator must be at least 1".into()));
            }
            let results = check_identities(&GridConfig {
                max_denominator: *max_denominator,
                random_samples: *samples,
                seed: *seed,
            });
            let mut text = String::new();
            for r in &results {
                write!(
                    text,
                    "{:<4} {} ({} cases, {} failures)",
                    if r.pass { "ok" } else { "FAIL" },
                    r.name,
                    r.cases,
                    r.failures
                )
                .expect("writing to a String");
                if let Some(f) = &r.first_failure {
                    write!(text, "\n     e.g. {f}").expect("writing to a String");
                }
                text.push('\n');
            }
            let failed = results.iter().any(|r| !r.pass);
            let mut report = Report::new(json!({ "identities": results }), text)?;
            report.failed = failed;
            Ok(report)
        }
        MapsCmd::Lambda { p, u } => {
            let j = join_point(p)?;
            let x = SuspendedJoinPoint {
                p: j,
                u: unit("u", u)?,
            };
            let y = eval_lambda(&x);
            Report::new(
                json!({ "input": x.to_string(), "value": product_json(&y) }),
                format!("Λ{x} = {y}"),
            )
        }
        MapsCmd::Phi { p, u, s } => {
            let j = join_point(p)?;
            let x = SuspendedJoinPoint {
                p: j,
                u: unit("u", u)?,
            };
            let s = unit("s", s)?;
            let y = eval_phi(&x, &s);
            Report::new(
                json!({ "input": x.to_string(), "s": s.to_string(), "value": smash_json(&y) }),
                format!("Φ_{s}{x} = {y}"),
            )
        }
        MapsCmd::Sigma { p, u } => {
            let d = DoubleSuspensionPoint::new(
                point(&p.a)?,
                point(&p.b)?,
                unit("t", &p.t)?,
                unit("u", u)?,
            );
            let y = eval_sigma(&d);
            Report::new(
                json!({ "input": d.to_string(), "value": smash_json(&y) }),
                format!("σ{d} = {y}"),
            )
        }
        MapsCmd::MuPrime { p } => {
            let j = join_point(p)?;
            let m = eval_mu_prime(&j);
            let value = json!({
                "input": j.to_string(),
                "value": { "a": m.a.to_string(), "b": m.b.to_string(), "t": m.t.to_string() },
                "basepoint": m.is_basepoint(),
            });
            let text = if m.is_basepoint() {
                format!("μ′{j} = *")
            } else {
                format!("μ′{j} = (({} ∧ {}), {})", m.a, m.b, m.t)
            };
            Report::new(value, text)
        }
    }
}

fn verify_all(quick: bool, table: &StemTable) -> Result<Report> {
    let config = if quick {
        SuiteConfig::quick()
    } else {
        SuiteConfig::default()
    };
    let results = run_suite(&config, table);
    let mut text = format!(
        "{:<3} {:<40} {:>8} {:>8} {:>8}  result\n",
        "#", "check", "cases", "failed", "seconds"
    );
    for r in &results {
        writeln!(
            text,
            "{:<3} {:<40} {:>8} {:>8} {:>8.2}  {}",
            r.id,
            r.name,
            r.cases,
            r.failures,
            r.seconds,
            if r.pass { "PASS" } else { "FAIL" }
        )
        .expect("writing to a String");
    }
    let passed = results.iter().filter(|r| r.pass).count();
    write!(text, "{passed}/{} checks passed", results.len()).expect("writing to a String");
    let failed = passed < results.len();
    let mut report = Report::new(
        json!({ "checks": results, "passed": passed, "total": results.len() }),
        text,
    )?;
    report.failed = failed;
    Ok(report)
}
