//! Command-line front end.
//!
//! Six subcommands: `generate` (bases, metrics, principal triples, closed
//! highest weights), `cartan` (Cartan matrix and inverse), `convert` (format
//! changes of matrices), `verify` (exact verification suites), `roots`
//! (simple root systems) and `embed` (principal embedding and the
//! highest-weight solver).
//!
//! Exit codes are stable: 0 success / all checks verified, 1 verification
//! failure, 2 usage or validation error. Payload goes to stdout, diagnostics
//! to stderr. `SUPERFMT_THREADS` (> 1) fans verification out across a thread
//! pool; output ordering does not depend on it.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebras::{
    self, cartan_matrix, chevalley_basis, is_member, osp_metric_condition,
    osp_symmetry_condition, supermetric, AlgebraId, CartanData, ChevalleyBasis, Family,
    FormatKind,
};
use crate::embeddings::{
    bosonic_pair, highest_weight_closed, highest_weights_solve, principal_closed, principal_for,
    verify_osp12, BosonicPair, PrincipalTriple,
};
use crate::error::Error;
use crate::formats::{self, alternating_perm, change_format, osp_l, FormatChanger, OspVariant};
use crate::graded::{Format, GradedMatrix};
use crate::matrix::Matrix;
use crate::rational::Rational;
use crate::report::{Check, VerificationReport};
use crate::rootspace::{self, SymbolKind};

const THREADS_ENV: &str = "SUPERFMT_THREADS";

#[derive(Parser)]
#[command(
    name = "superfmt",
    version,
    about = "Exact constructions and verification of Lie superalgebra matrix formats"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputMode {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum FamilyArg {
    Gl,
    Sl,
    OspMinus,
    OspPlus,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Gl => Family::Gl,
            FamilyArg::Sl => Family::Sl,
            FamilyArg::OspMinus => Family::OspMinus,
            FamilyArg::OspPlus => Family::OspPlus,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatKindArg {
    Block,
    Diagonal,
}

impl From<FormatKindArg> for FormatKind {
    fn from(k: FormatKindArg) -> FormatKind {
        match k {
            FormatKindArg::Block => FormatKind::Block,
            FormatKindArg::Diagonal => FormatKind::Diagonal,
        }
    }
}

#[derive(Args)]
struct AlgebraArgs {
    /// Algebra family.
    #[arg(long, value_enum)]
    algebra: FamilyArg,
    /// Parameter n for the gl/sl families (size 2n+1).
    #[arg(long)]
    n: Option<usize>,
    /// Parameter m for the osp families (size 4m∓1).
    #[arg(long)]
    m: Option<usize>,
    /// Matrix format (defaults to diagonal).
    #[arg(long, value_enum)]
    format: Option<FormatKindArg>,
}

impl AlgebraArgs {
    fn resolve(&self) -> Result<AlgebraId, CliError> {
        let family: Family = self.algebra.into();
        let parameter = match family {
            Family::Gl | Family::Sl => self.n.ok_or_else(|| usage("--n is required for gl/sl"))?,
            Family::OspMinus | Family::OspPlus => {
                self.m.ok_or_else(|| usage("--m is required for osp"))?
            }
        };
        let kind = self.format.map_or(FormatKind::Diagonal, FormatKind::from);
        AlgebraId::new(family, parameter, kind).map_err(|e| usage(&e.to_string()))
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum WhatArg {
    Basis,
    Metric,
    Osp12,
    HighestWeights,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Minus,
    Plus,
}

impl From<VariantArg> for OspVariant {
    fn from(v: VariantArg) -> OspVariant {
        match v {
            VariantArg::Minus => OspVariant::Minus,
            VariantArg::Plus => OspVariant::Plus,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Chevalley,
    Membership,
    Osp12,
    FormatTransport,
    Roots,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a Chevalley basis, supermetric, principal triple or closed-form
    /// highest weights.
    Generate {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, value_enum)]
        what: WhatArg,
        /// Grade for --what highest-weights (all grades when omitted).
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        out: OutputMode,
    },
    /// Emit the closed-form Cartan matrix and its inverse.
    Cartan {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, value_enum, default_value = "text")]
        out: OutputMode,
    },
    /// Convert a matrix between formats; prints the supertrace before and
    /// after on stderr (they must match).
    Convert {
        /// Path to a matrix JSON file ({"size": p, "entries": [[...]]}),
        /// or "-" for stdin.
        #[arg(long)]
        input: String,
        /// Source format as a sign string, e.g. "+++--".
        #[arg(long, value_name = "SIGNS", allow_hyphen_values = true)]
        from: Option<String>,
        /// Target format as a sign string, e.g. "+-+-+".
        #[arg(long, value_name = "SIGNS", allow_hyphen_values = true)]
        to: Option<String>,
        /// Use the osp block-to-diagonal arrangement L instead of sign
        /// strings: converts block to diagonal for the given variant.
        #[arg(long = "via-L", alias = "via-l", value_enum)]
        via_l: Option<VariantArg>,
        /// Parameter m accompanying --via-L.
        #[arg(long)]
        m: Option<usize>,
        /// Convert diagonal back to block with --via-L.
        #[arg(long)]
        reverse: bool,
        #[arg(long, value_enum, default_value = "json")]
        out: OutputMode,
    },
    /// Run exact verification suites; exit 0 only if every check passes.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        /// Restrict to one algebra (all flags of the algebra selector).
        #[arg(long, value_enum)]
        algebra: Option<FamilyArg>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, value_enum)]
        format: Option<FormatKindArg>,
        /// Largest n covered for gl/sl when no algebra is given.
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        /// Largest m covered for osp when no algebra is given.
        #[arg(long, default_value_t = 2)]
        max_m: usize,
        /// Verify a Chevalley basis loaded from JSON instead of a built-in
        /// one (chevalley suite only).
        #[arg(long)]
        basis_file: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        out: OutputMode,
    },
    /// Print the simple root system of a format.
    Roots {
        /// Format as a sign string, e.g. "+-+-+".
        #[arg(long, value_name = "SIGNS", allow_hyphen_values = true, conflicts_with = "algebra")]
        signs: Option<String>,
        #[arg(long, value_enum)]
        algebra: Option<FamilyArg>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, value_enum)]
        format: Option<FormatKindArg>,
        #[arg(long, value_enum, default_value = "text")]
        out: OutputMode,
    },
    /// Principal osp(1|2) embedding: the triple with its bosonic pair, or
    /// the exact highest-weight solver at a grade.
    Embed {
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// Solve for the highest-weight space of this grade.
        #[arg(long)]
        grade: Option<i64>,
        #[arg(long, value_enum, default_value = "text")]
        out: OutputMode,
    },
}

struct CliError {
    code: i32,
    message: String,
}

fn usage(msg: &str) -> CliError {
    CliError {
        code: 2,
        message: msg.to_string(),
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        CliError {
            code: 2,
            message: e.to_string(),
        }
    }
}

/// Entry point for the binary: parses `std::env::args_os` and talks to the
/// real stdout/stderr.
pub fn main() -> i32 {
    let mut stdout = std::io::stdout().lock();
    let mut stderr = std::io::stderr().lock();
    run(std::env::args_os(), &mut stdout, &mut stderr)
}

/// Parses and runs a full command line (first element is the program name).
/// Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders help/version on stdout (exit 0) and usage errors
            // on stderr (exit 2).
            let rendered = e.render();
            if e.use_stderr() {
                let _ = write!(stderr, "{rendered}");
            } else {
                let _ = write!(stdout, "{rendered}");
            }
            return e.exit_code();
        }
    };
    match dispatch(cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", e.message);
            e.code
        }
    }
}

fn dispatch(
    command: Command,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, CliError> {
    match command {
        Command::Generate {
            algebra,
            what,
            k,
            out,
        } => generate(&algebra.resolve()?, what, k, out, stdout),
        Command::Cartan { algebra, out } => cartan(&algebra.resolve()?, out, stdout),
        Command::Convert {
            input,
            from,
            to,
            via_l,
            m,
            reverse,
            out,
        } => convert(&input, from, to, via_l, m, reverse, out, stdout, stderr),
        Command::Verify {
            suite,
            algebra,
            n,
            m,
            format,
            max_n,
            max_m,
            basis_file,
            out,
        } => {
            let only = match algebra {
                Some(family) => Some(
                    AlgebraArgs {
                        algebra: family,
                        n,
                        m,
                        format,
                    }
                    .resolve()?,
                ),
                None => None,
            };
            verify(suite, only, max_n, max_m, basis_file, out, stdout)
        }
        Command::Roots {
            signs,
            algebra,
            n,
            m,
            format,
            out,
        } => {
            let fmt = match (signs, algebra) {
                (Some(s), None) => s.parse::<Format>().map_err(|e| usage(&e.to_string()))?,
                (None, Some(family)) => AlgebraArgs {
                    algebra: family,
                    n,
                    m,
                    format,
                }
                .resolve()?
                .format(),
                _ => return Err(usage("provide exactly one of --signs or --algebra")),
            };
            roots(&fmt, out, stdout)
        }
        Command::Embed {
            algebra,
            grade,
            out,
        } => embed(&algebra.resolve()?, grade, out, stdout),
    }
}

fn emit_json<T: Serialize>(value: &T, stdout: &mut dyn Write) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).map_err(|e| CliError {
        code: 2,
        message: e.to_string(),
    })?;
    writeln!(stdout, "{text}").map_err(|e| CliError {
        code: 2,
        message: e.to_string(),
    })
}

fn emit_labeled(
    label: &str,
    m: &Matrix,
    stdout: &mut dyn Write,
) -> Result<(), CliError> {
    writeln!(stdout, "{label} =\n{m}\n").map_err(|e| CliError {
        code: 2,
        message: e.to_string(),
    })
}

fn generate(
    alg: &AlgebraId,
    what: WhatArg,
    k: Option<usize>,
    out: OutputMode,
    stdout: &mut dyn Write,
) -> Result<i32, CliError> {
    match what {
        WhatArg::Basis => {
            let basis = chevalley_basis(alg)?;
            match out {
                OutputMode::Json => emit_json(&basis, stdout)?,
                OutputMode::Text => {
                    for i in 0..basis.rank() {
                        emit_labeled(&format!("h_{}", i + 1), basis.h[i].matrix(), stdout)?;
                        emit_labeled(&format!("e_{}", i + 1), basis.e[i].matrix(), stdout)?;
                        emit_labeled(&format!("f_{}", i + 1), basis.f[i].matrix(), stdout)?;
                    }
                }
            }
        }
        WhatArg::Metric => {
            let g = supermetric(alg)?;
            match out {
                OutputMode::Json => emit_json(&g, stdout)?,
                OutputMode::Text => emit_labeled("G", &g, stdout)?,
            }
        }
        WhatArg::Osp12 => {
            let triple = principal_for(alg)?;
            match out {
                OutputMode::Json => emit_json(&triple, stdout)?,
                OutputMode::Text => {
                    emit_labeled("J_-", triple.j_minus.matrix(), stdout)?;
                    emit_labeled("J_+", triple.j_plus.matrix(), stdout)?;
                    emit_labeled("H", triple.h.matrix(), stdout)?;
                }
            }
        }
        WhatArg::HighestWeights => {
            if !matches!(alg.family(), Family::Gl | Family::Sl)
                || alg.format_kind() != FormatKind::Diagonal
            {
                return Err(usage(
                    "closed-form highest weights exist for the diagonal gl/sl \
                     realization; use `embed --grade` for the osp solver",
                ));
            }
            let n = alg.parameter();
            let grades: Vec<usize> = match k {
                Some(k) => vec![k],
                None => (1..=2 * n).collect(),
            };
            let mut weights = Vec::with_capacity(grades.len());
            for k in grades {
                weights.push((k, highest_weight_closed(n, k)?));
            }
            match out {
                OutputMode::Json => {
                    let just: Vec<&GradedMatrix> = weights.iter().map(|(_, m)| m).collect();
                    emit_json(&just, stdout)?;
                }
                OutputMode::Text => {
                    for (k, m) in &weights {
                        emit_labeled(&format!("M_{k}"), m.matrix(), stdout)?;
                    }
                }
            }
        }
    }
    Ok(0)
}

fn cartan(alg: &AlgebraId, out: OutputMode, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let data = CartanData::closed_form(alg.family(), alg.rank())?;
    match out {
        OutputMode::Json => emit_json(&data, stdout)?,
        OutputMode::Text => {
            emit_labeled("a", &data.a, stdout)?;
            emit_labeled("a_inv", &data.a_inv, stdout)?;
        }
    }
    Ok(0)
}

fn read_matrix(input: &str) -> Result<Matrix, CliError> {
    let text = if input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| usage(&e.to_string()))?;
        buf
    } else {
        fs::read_to_string(input).map_err(|e| usage(&format!("{input}: {e}")))?
    };
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        serde_json::from_str(&text).map_err(|e| usage(&e.to_string()))
    } else {
        text.parse().map_err(|e: Error| usage(&e.to_string()))
    }
}

/// Order-preserving permutation carrying `from` onto `to`: the t-th even
/// position of `to` is fed from the t-th even position of `from`, likewise
/// for odd positions.
fn matching_permutation(from: &Format, to: &Format) -> Result<formats::Permutation, CliError> {
    if from.size() != to.size() || from.even_count() != to.even_count() {
        return Err(usage(
            "source and target formats must have the same size and signature",
        ));
    }
    let positions_of = |fmt: &Format, parity: u8| -> Vec<usize> {
        (1..=fmt.size()).filter(|&i| fmt.parity(i) == parity).collect()
    };
    let mut images = vec![0usize; from.size()];
    for parity in 0..2u8 {
        let from_pos = positions_of(from, parity);
        let to_pos = positions_of(to, parity);
        for (t, f) in to_pos.iter().zip(from_pos.iter()) {
            images[t - 1] = *f;
        }
    }
    formats::Permutation::new(images).map_err(|e| usage(&e.to_string()))
}

#[allow(clippy::too_many_arguments)]
fn convert(
    input: &str,
    from: Option<String>,
    to: Option<String>,
    via_l: Option<VariantArg>,
    m_param: Option<usize>,
    reverse: bool,
    out: OutputMode,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, CliError> {
    let matrix = read_matrix(input)?;
    let (source_format, changer): (Format, FormatChanger) = match (from, to, via_l) {
        (Some(from), Some(to), None) => {
            let from: Format = from.parse().map_err(|e: Error| usage(&e.to_string()))?;
            let to: Format = to.parse().map_err(|e: Error| usage(&e.to_string()))?;
            // P satisfies from_sign(P(i)) = to_sign(i), so conjugation by
            // F_ij = δ_{P(i)j} transports `from` exactly onto `to`.
            let perm = matching_permutation(&from, &to)?;
            (from, FormatChanger::from_permutation(&perm))
        }
        (None, None, Some(variant)) => {
            let m = m_param.ok_or_else(|| usage("--m is required with --via-L"))?;
            let family = match variant {
                VariantArg::Minus => Family::OspMinus,
                VariantArg::Plus => Family::OspPlus,
            };
            let changer = osp_l(variant.into(), m)?;
            let block = AlgebraId::new(family, m, FormatKind::Block)?.format();
            let diagonal = AlgebraId::new(family, m, FormatKind::Diagonal)?.format();
            if reverse {
                (diagonal, changer.inverted())
            } else {
                (block, changer)
            }
        }
        _ => {
            return Err(usage(
                "provide either --from and --to sign strings, or --via-L with --m",
            ))
        }
    };
    if matrix.size() != source_format.size() {
        return Err(usage(&format!(
            "matrix size {} does not match the source format size {}",
            matrix.size(),
            source_format.size()
        )));
    }
    let graded = GradedMatrix::new(matrix, source_format)?;
    let converted = change_format(&graded, &changer).map_err(|e| match e {
        Error::RealizationChange => CliError {
            code: 1,
            message: e.to_string(),
        },
        other => CliError {
            code: 2,
            message: other.to_string(),
        },
    })?;
    let str_before = graded.supertrace();
    let str_after = converted.supertrace();
    let _ = writeln!(stderr, "str(input)  = {str_before}");
    let _ = writeln!(stderr, "str(output) = {str_after}");
    debug_assert_eq!(str_before, str_after);
    match out {
        OutputMode::Json => emit_json(&converted, stdout)?,
        OutputMode::Text => {
            let _ = writeln!(stdout, "format {}", converted.format());
            let _ = writeln!(stdout, "{}", converted.matrix());
        }
    }
    Ok(0)
}

fn roots(fmt: &Format, out: OutputMode, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let srs = rootspace::simple_root_system(fmt);
    let odd = rootspace::odd_simple_root_count(fmt);
    match out {
        OutputMode::Json => {
            #[derive(Serialize)]
            struct RootsOut {
                format: Format,
                roots: Vec<crate::rootspace::SimpleRoot>,
                odd_count: usize,
            }
            emit_json(
                &RootsOut {
                    format: fmt.clone(),
                    roots: srs,
                    odd_count: odd,
                },
                stdout,
            )?;
        }
        OutputMode::Text => {
            for (i, root) in srs.iter().enumerate() {
                let _ = writeln!(stdout, "alpha_{} = {}", i + 1, root);
            }
            let _ = writeln!(stdout, "odd simple roots: {odd}");
        }
    }
    Ok(0)
}

fn embed(
    alg: &AlgebraId,
    grade: Option<i64>,
    out: OutputMode,
    stdout: &mut dyn Write,
) -> Result<i32, CliError> {
    match grade {
        Some(k) => {
            let basis = highest_weights_solve(alg, k)?;
            match out {
                OutputMode::Json => emit_json(&basis, stdout)?,
                OutputMode::Text => {
                    if basis.is_empty() {
                        let _ = writeln!(stdout, "no highest-weight generators at grade {k}");
                    }
                    for (i, m) in basis.iter().enumerate() {
                        emit_labeled(
                            &format!("M[grade {k}, vector {}]", i + 1),
                            m.matrix(),
                            stdout,
                        )?;
                    }
                }
            }
        }
        None => {
            let triple = principal_for(alg)?;
            let pair = bosonic_pair(&triple);
            match out {
                OutputMode::Json => {
                    #[derive(Serialize)]
                    struct EmbedOut {
                        triple: PrincipalTriple,
                        pair: BosonicPair,
                    }
                    emit_json(&EmbedOut { triple, pair }, stdout)?;
                }
                OutputMode::Text => {
                    emit_labeled("J_-", triple.j_minus.matrix(), stdout)?;
                    emit_labeled("J_+", triple.j_plus.matrix(), stdout)?;
                    emit_labeled("H", triple.h.matrix(), stdout)?;
                    emit_labeled("X_+", pair.x_plus.matrix(), stdout)?;
                    emit_labeled("X_-", pair.x_minus.matrix(), stdout)?;
                }
            }
        }
    }
    Ok(0)
}

// ---- Verification suites ----

type Unit = Box<dyn Fn() -> VerificationReport + Send + Sync>;

fn run_units(units: Vec<Unit>) -> VerificationReport {
    let threads: usize = std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(1);
    let mut report = VerificationReport::new();
    if threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build();
        let sub: Vec<VerificationReport> = match pool {
            Ok(pool) => pool.install(|| units.par_iter().map(|u| u()).collect()),
            Err(_) => units.iter().map(|u| u()).collect(),
        };
        for s in sub {
            report.extend(s);
        }
    } else {
        for u in &units {
            report.extend(u());
        }
    }
    report
}

fn prefixed(prefix: &str, mut sub: VerificationReport) -> VerificationReport {
    for check in &mut sub.checks {
        check.name = format!("{prefix}: {}", check.name);
    }
    sub
}

fn suite_algebras(only: Option<AlgebraId>, max_n: usize, max_m: usize) -> Vec<AlgebraId> {
    if let Some(alg) = only {
        return vec![alg];
    }
    let mut algs = Vec::new();
    for n in 1..=max_n {
        algs.push(AlgebraId::sl(n, FormatKind::Diagonal).expect("valid"));
    }
    for m in 1..=max_m {
        for kind in [FormatKind::Diagonal, FormatKind::Block] {
            algs.push(AlgebraId::osp_minus(m, kind).expect("valid"));
            algs.push(AlgebraId::osp_plus(m, kind).expect("valid"));
        }
    }
    algs
}

fn chevalley_suite(algebras: &[AlgebraId], basis_file: Option<&PathBuf>) -> Vec<Unit> {
    if let Some(path) = basis_file {
        let path = path.clone();
        return vec![Box::new(move || {
            let mut report = VerificationReport::new();
            let loaded: Result<ChevalleyBasis, String> = fs::read_to_string(&path)
                .map_err(|e| e.to_string())
                .and_then(|text| serde_json::from_str(&text).map_err(|e| e.to_string()));
            match loaded {
                Err(e) => report.push(Check::from_bool(format!("load {path:?}: {e}"), false)),
                Ok(basis) => {
                    let alg = basis.algebra;
                    if let Err(e) = basis.validate() {
                        report.push(Check::from_bool(
                            format!("structural check of {alg} basis: {e}"),
                            false,
                        ));
                        return report;
                    }
                    match cartan_matrix(alg.family(), alg.rank()) {
                        Err(e) => report
                            .push(Check::from_bool(format!("cartan for {alg}: {e}"), false)),
                        Ok(a) => {
                            report.extend(prefixed(
                                &alg.to_string(),
                                algebras::verify_chevalley(&basis, &a),
                            ));
                        }
                    }
                }
            }
            report
        })];
    }
    algebras
        .iter()
        .map(|alg| {
            let alg = *alg;
            let unit: Unit = Box::new(move || {
                let basis = chevalley_basis(&alg).expect("built-in basis");
                let a = cartan_matrix(alg.family(), alg.rank()).expect("closed form");
                prefixed(&alg.to_string(), algebras::verify_chevalley(&basis, &a))
            });
            unit
        })
        .collect()
}

fn membership_suite(algebras: &[AlgebraId]) -> Vec<Unit> {
    algebras
        .iter()
        .filter(|alg| matches!(alg.family(), Family::OspMinus | Family::OspPlus))
        .map(|alg| {
            let alg = *alg;
            let unit: Unit = Box::new(move || {
                let mut report = VerificationReport::new();
                let basis = chevalley_basis(&alg).expect("built-in basis");
                let generators: Vec<(String, &GradedMatrix)> = (0..basis.rank())
                    .flat_map(|i| {
                        [
                            (format!("h_{}", i + 1), &basis.h[i]),
                            (format!("e_{}", i + 1), &basis.e[i]),
                            (format!("f_{}", i + 1), &basis.f[i]),
                        ]
                    })
                    .collect();
                for (name, g) in &generators {
                    report.push(Check::from_bool(
                        format!("{alg}: {name} is a member"),
                        is_member(&alg, g).unwrap_or(false),
                    ));
                }
                // Deterministic rational combination of all generators.
                let mut combo = GradedMatrix::zero(alg.format());
                for (t, (_, g)) in generators.iter().enumerate() {
                    combo = &combo + &g.scale(&Rational::new(t as i64 + 1, 2));
                }
                report.push(Check::from_bool(
                    format!("{alg}: generator combination is a member"),
                    is_member(&alg, &combo).unwrap_or(false),
                ));
                if alg.format_kind() == FormatKind::Diagonal {
                    let metric = osp_metric_condition(&alg, &combo).unwrap_or(false);
                    let symmetry = osp_symmetry_condition(&alg, &combo).unwrap_or(false);
                    report.push(Check::from_bool(
                        format!("{alg}: metric and symmetry predicates agree"),
                        metric == symmetry,
                    ));
                }
                // A corner perturbation always breaks membership.
                let spoiled = &combo
                    + &GradedMatrix::new(
                        Matrix::unit_entry(1, 1, alg.size()).expect("in range"),
                        alg.format(),
                    )
                    .expect("sizes match");
                report.push(Check::from_bool(
                    format!("{alg}: perturbed combination is rejected"),
                    !is_member(&alg, &spoiled).unwrap_or(true),
                ));
                report
            });
            unit
        })
        .collect()
}

fn osp12_suite(algebras: &[AlgebraId]) -> Vec<Unit> {
    algebras
        .iter()
        .filter(|alg| alg.format_kind() == FormatKind::Diagonal)
        .map(|alg| {
            let alg = *alg;
            let unit: Unit = Box::new(move || {
                let triple = principal_for(&alg).expect("principal triple");
                let mut report = prefixed(&alg.to_string(), verify_osp12(&triple));
                let n = (alg.size() - 1) / 2;
                let closed = principal_closed(n);
                for (name, built, expect) in [
                    ("J_-", &triple.j_minus, &closed.j_minus),
                    ("J_+", &triple.j_plus, &closed.j_plus),
                    ("H", &triple.h, &closed.h),
                ] {
                    report.push(Check::equality(
                        format!("{alg}: {name} matches the closed form"),
                        built.matrix(),
                        expect.matrix(),
                    ));
                }
                report
            });
            unit
        })
        .collect()
}

fn format_transport_suite(max_n: usize, max_m: usize) -> Vec<Unit> {
    let mut units: Vec<Unit> = Vec::new();
    for m in 1..=max_m {
        for (variant, family) in [
            (OspVariant::Minus, Family::OspMinus),
            (OspVariant::Plus, Family::OspPlus),
        ] {
            let unit: Unit = Box::new(move || {
                let mut report = VerificationReport::new();
                let block_alg = AlgebraId::new(family, m, FormatKind::Block).expect("valid");
                let diag_alg = AlgebraId::new(family, m, FormatKind::Diagonal).expect("valid");
                let l = formats::osp_arrangement(variant, m).expect("valid m");
                report.push(Check::equality(
                    format!("{diag_alg}: L L^T = 1"),
                    &(&l * &l.transpose()),
                    &Matrix::identity(l.size()),
                ));
                let changer = osp_l(variant, m).expect("valid m");
                let block = chevalley_basis(&block_alg).expect("built-in basis");
                let diag = chevalley_basis(&diag_alg).expect("built-in basis");
                let names = |tag: &str| {
                    (1..=block.rank())
                        .map(move |i| format!("{tag}_{i}"))
                        .collect::<Vec<_>>()
                };
                for (series, built, expect) in [
                    (names("h"), &block.h, &diag.h),
                    (names("e"), &block.e, &diag.e),
                    (names("f"), &block.f, &diag.f),
                ] {
                    for ((name, b), d) in series.iter().zip(built).zip(expect) {
                        match change_format(b, &changer) {
                            Ok(converted) => {
                                report.push(Check::equality(
                                    format!("{diag_alg}: L^-1 {name} L matches"),
                                    converted.matrix(),
                                    d.matrix(),
                                ));
                                report.push(Check::from_bool(
                                    format!("{diag_alg}: str preserved for {name}"),
                                    converted.supertrace() == b.supertrace(),
                                ));
                            }
                            Err(e) => report.push(Check::from_bool(
                                format!("{diag_alg}: transport of {name} failed: {e}"),
                                false,
                            )),
                        }
                    }
                }
                report
            });
            units.push(unit);
        }
    }
    for n in 1..=max_n {
        let unit: Unit = Box::new(move || {
            let mut report = VerificationReport::new();
            let perm = alternating_perm(n + 1, n).expect("supported");
            let f = FormatChanger::from_permutation(&perm);
            let block = Format::block(n + 1, n);
            match f.transport_format(&block) {
                Ok(transported) => {
                    let expect = Format::alternating(2 * n + 1, 1).expect("valid");
                    report.push(Check::from_bool(
                        format!("gl({}|{n}) block: alternating arrangement yields +-+...", n + 1),
                        transported == expect,
                    ));
                }
                Err(e) => report.push(Check::from_bool(
                    format!("gl({}|{n}) block transport failed: {e}", n + 1),
                    false,
                )),
            }
            report
        });
        units.push(unit);
    }
    units
}

fn roots_suite(algebras: &[AlgebraId]) -> Vec<Unit> {
    let mut units: Vec<Unit> = Vec::new();
    // The two sl(3|2) fixtures.
    let fixture: Unit = Box::new(|| {
        let mut report = VerificationReport::new();
        let block = Format::block(3, 2);
        let srs = rootspace::simple_root_system(&block);
        let parities: Vec<u8> = srs.iter().map(|r| r.parity).collect();
        report.push(Check::from_bool(
            "sl(3|2) block: distinguished system eps1-eps2, eps2-eps3, eps3-delta1, delta1-delta2",
            srs.len() == 4
                && srs[2].positive.kind == SymbolKind::Eps
                && srs[2].positive.index == 3
                && srs[2].negative.kind == SymbolKind::Delta
                && srs[2].negative.index == 1
                && parities == vec![0, 0, 1, 0],
        ));
        report.push(Check::from_bool(
            "sl(3|2) block: one odd simple root",
            rootspace::odd_simple_root_count(&block) == 1,
        ));
        let diag = Format::alternating(5, 1).expect("valid");
        let srs = rootspace::simple_root_system(&diag);
        report.push(Check::from_bool(
            "sl(3|2) diagonal: fermionic system eps1-delta1, delta1-eps2, eps2-delta2, delta2-eps3",
            srs.len() == 4 && srs.iter().all(|r| r.parity == 1),
        ));
        report.push(Check::from_bool(
            "sl(3|2) diagonal: four odd simple roots",
            rootspace::odd_simple_root_count(&diag) == 4,
        ));
        report
    });
    units.push(fixture);
    for alg in algebras {
        let alg = *alg;
        let unit: Unit = Box::new(move || {
            let mut report = VerificationReport::new();
            let fmt = alg.format();
            let srs = rootspace::simple_root_system(&fmt);
            let odd_parities = srs.iter().filter(|r| r.parity == 1).count();
            report.push(Check::from_bool(
                format!("{alg}: odd-root count equals sign changes"),
                odd_parities == fmt.sign_changes(),
            ));
            report.push(Check::from_bool(
                format!("{alg}: fermionic system iff strictly alternating"),
                rootspace::admits_fermionic_srs(&fmt)
                    == (odd_parities == fmt.size() - 1),
            ));
            report
        });
        units.push(unit);
    }
    units
}

fn verify(
    suite: SuiteArg,
    only: Option<AlgebraId>,
    max_n: usize,
    max_m: usize,
    basis_file: Option<PathBuf>,
    out: OutputMode,
    stdout: &mut dyn Write,
) -> Result<i32, CliError> {
    let algebras = suite_algebras(only, max_n, max_m);
    let mut units: Vec<Unit> = Vec::new();
    if matches!(suite, SuiteArg::Chevalley | SuiteArg::All) {
        units.extend(chevalley_suite(&algebras, basis_file.as_ref()));
    }
    if matches!(suite, SuiteArg::Membership | SuiteArg::All) {
        units.extend(membership_suite(&algebras));
    }
    if matches!(suite, SuiteArg::Osp12 | SuiteArg::All) {
        units.extend(osp12_suite(&algebras));
    }
    if matches!(suite, SuiteArg::FormatTransport | SuiteArg::All) {
        units.extend(format_transport_suite(max_n, max_m));
    }
    if matches!(suite, SuiteArg::Roots | SuiteArg::All) {
        units.extend(roots_suite(&algebras));
    }
    let report = run_units(units);
    match out {
        OutputMode::Json => {
            #[derive(Serialize)]
            struct VerifyOut<'a> {
                suite: &'a str,
                total: usize,
                passed: usize,
                all_passed: bool,
                checks: &'a VerificationReport,
            }
            let name = match suite {
                SuiteArg::Chevalley => "chevalley",
                SuiteArg::Membership => "membership",
                SuiteArg::Osp12 => "osp12",
                SuiteArg::FormatTransport => "format-transport",
                SuiteArg::Roots => "roots",
                SuiteArg::All => "all",
            };
            emit_json(
                &VerifyOut {
                    suite: name,
                    total: report.len(),
                    passed: report.passed_count(),
                    all_passed: report.all_passed(),
                    checks: &report,
                },
                stdout,
            )?;
        }
        OutputMode::Text => {
            let _ = writeln!(stdout, "{report}");
        }
    }
    Ok(if report.all_passed() { 0 } else { 1 })
}
