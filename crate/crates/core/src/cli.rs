//! Command-line front end. [`run`] parses arguments, dispatches and returns
//! the process exit status: 0 success, 1 validation failure, 2 usage error,
//! 3 internal invariant breach.

use std::collections::BTreeSet;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::algebra::{
    check_homomorphism, properties, skeleton, validate, AlgebraDoc, CheckReport, FinAlgebra,
};
use crate::census::{census, Class, Method};
use crate::chains::{compile, enumerate_codes, LacedCode};
use crate::constructions::{
    abs_chain, amalgamate_cic, amalgamate_osm, c4, catalan_decompose, catalan_sum,
    check_partial_preservation, enumerate_catalan, fep_closure, sugihara_from_involution, tensor, FiberSpec,
    SkeletonDecomposition, Span,
};
use crate::dot::{combined_dot, monoidal_dot, order_dot};
use crate::error::Error;
use crate::oracle::{brute_force_bounded, canonical, ConstraintSet, DEFAULT_MAX_BRUTE};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BREACH: i32 = 3;

/// Environment variable overriding the brute-force size cap.
pub const MAX_BRUTE_VAR: &str = "RESLAT_MAX_BRUTE";

#[derive(Debug, Parser)]
#[command(name = "reslat", version, about = "Finite idempotent residuated lattices")]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Validate an algebra document.
    Check { file: PathBuf },
    /// List the property flags of an algebra.
    Props { file: PathBuf },
    /// List every algebra of a class and size.
    Enumerate {
        #[arg(long, value_parser = parsed::<Class>)]
        class: Class,
        #[arg(long)]
        size: usize,
        /// Write each algebra to DIR/<canonical hash>.json.
        #[arg(long, value_name = "DIR")]
        emit: Option<PathBuf>,
    },
    /// Compare counting methods over a range of sizes.
    Count {
        #[arg(long, value_parser = parsed::<Class>)]
        class: Class,
        /// Largest size.
        #[arg(long)]
        size: usize,
        /// Smallest size (defaults to `--size`).
        #[arg(long)]
        from: Option<usize>,
        /// Comma-separated methods (defaults to all available for the class).
        #[arg(long, value_delimiter = ',', value_parser = parsed::<Method>)]
        methods: Vec<Method>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Find all models of a size up to isomorphism by exhaustive search.
    Bruteforce {
        #[arg(long)]
        size: usize,
        #[arg(long, default_value = "", value_parser = parsed::<ConstraintSet>)]
        constraints: ConstraintSet,
        #[arg(long, value_name = "DIR")]
        emit: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Build an algebra and print it as JSON.
    Construct(ConstructArgs),
    /// Split an algebra into its parts.
    Decompose {
        #[arg(long, value_enum)]
        mode: DecomposeMode,
        file: PathBuf,
    },
    /// Amalgamate a span B <- A -> C of chains.
    Amalgamate {
        a: PathBuf,
        b: PathBuf,
        c: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        map1: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        map2: Vec<usize>,
        #[arg(long, value_enum, default_value_t = AmalgamMode::Auto)]
        mode: AmalgamMode,
    },
    /// Close a subset into a finite algebra preserving its partial operations.
    Fep {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        subset: Vec<usize>,
    },
    /// Graphviz Hasse diagrams.
    Export {
        #[arg(long, value_name = "FILE")]
        dot: PathBuf,
        /// Draw both relations in one digraph.
        #[arg(long)]
        both: bool,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct ConstructArgs {
    /// Sugihara chain with an involution, odd size K.
    #[arg(long, value_name = "K")]
    sugihara: Option<usize>,
    /// Chain of integers -(K+1)..=K under the absolute-value product.
    #[arg(long = "abs", value_name = "K")]
    abs: Option<usize>,
    /// The four-element noncommutative chain.
    #[arg(long)]
    c4: bool,
    #[arg(long, num_args = 2, value_names = ["A", "B"])]
    catalan_sum: Option<Vec<PathBuf>>,
    /// FIBERSPEC is a JSON file `{"fibers": [...]}` or an inline list `2,1,1`.
    #[arg(long, num_args = 2, value_names = ["SKELETON", "FIBERSPEC"])]
    tensor: Option<Vec<String>>,
    /// Laced code over n, p, C, I; the empty code is the 2-element chain.
    #[arg(long, value_name = "STR")]
    code: Option<String>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DecomposeMode {
    Catalan,
    Skeleton,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum AmalgamMode {
    /// Sugihara merge when all three are odd Sugihara chains, else the general chain method.
    Auto,
    Osm,
    Cic,
}

fn parsed<T: FromStr<Err = Error>>(s: &str) -> Result<T, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A failed command: exit status plus message.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::TooLarge { .. }
            | Error::Parse { .. }
            | Error::Json(_)
            | Error::Io(_)
            | Error::SizeTooSmall(..) => EXIT_USAGE,
            _ => EXIT_INVALID,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e).into()
    }
}

fn breach(message: String) -> Failure {
    Failure { code: EXIT_BREACH, message }
}

type CmdResult = Result<i32, Failure>;

struct Ctx<'a> {
    json: bool,
    out: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn emit_json(&mut self, v: &impl Serialize) -> Result<(), Failure> {
        let text = serde_json::to_string_pretty(v).map_err(Error::from)?;
        writeln!(self.out, "{text}")?;
        Ok(())
    }

    fn emit_algebra(&mut self, a: &FinAlgebra) -> Result<(), Failure> {
        writeln!(self.out, "{}", a.to_json_pretty())?;
        Ok(())
    }
}

/// Runs the command line `args` (program name first) and returns the exit status.
pub fn run(args: impl IntoIterator<Item = String>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let mut ctx = Ctx { json: cli.json, out };
    match dispatch(cli.command, &mut ctx) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cmd: Command, ctx: &mut Ctx<'_>) -> CmdResult {
    match cmd {
        Command::Check { file } => cmd_check(&file, ctx),
        Command::Props { file } => cmd_props(&file, ctx),
        Command::Enumerate { class, size, emit } => cmd_enumerate(class, size, emit.as_deref(), ctx),
        Command::Count { class, size, from, methods, jobs } => {
            cmd_count(class, from.unwrap_or(size), size, methods, jobs, ctx)
        }
        Command::Bruteforce { size, constraints, emit, jobs } => {
            cmd_bruteforce(size, &constraints, emit.as_deref(), jobs, ctx)
        }
        Command::Construct(args) => cmd_construct(args, ctx),
        Command::Decompose { mode, file } => cmd_decompose(mode, &file, ctx),
        Command::Amalgamate { a, b, c, map1, map2, mode } => {
            cmd_amalgamate([&a, &b, &c], map1, map2, mode, ctx)
        }
        Command::Fep { file, subset } => cmd_fep(&file, subset, ctx),
        Command::Export { dot, both } => cmd_export(&dot, both, ctx),
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    fs::read_to_string(path)
        .map_err(|e| Failure { code: EXIT_USAGE, message: format!("{}: {e}", path.display()) })
}

fn load(path: &Path) -> Result<FinAlgebra, Failure> {
    Ok(FinAlgebra::from_json(&read_text(path)?)?)
}

/// Loads and requires a valid residuated algebra.
fn load_valid(path: &Path) -> Result<FinAlgebra, Failure> {
    let a = load(path)?.with_residuals()?;
    let report = validate(&a);
    if !report.ok() {
        return Err(Failure {
            code: EXIT_INVALID,
            message: format!("{} is not valid:\n{report}", path.display()),
        });
    }
    Ok(a)
}

pub fn brute_cap() -> usize {
    std::env::var(MAX_BRUTE_VAR).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_MAX_BRUTE)
}

fn write_models(dir: &Path, models: &[FinAlgebra]) -> Result<Vec<String>, Failure> {
    fs::create_dir_all(dir)?;
    let mut names = Vec::with_capacity(models.len());
    for m in models {
        let name = canonical(m).hash_hex();
        fs::write(dir.join(format!("{name}.json")), m.to_json_pretty() + "\n")?;
        names.push(name);
    }
    Ok(names)
}

fn report_failure(report: &CheckReport) -> i32 {
    if report.ok() {
        EXIT_OK
    } else {
        EXIT_INVALID
    }
}

fn cmd_check(file: &Path, ctx: &mut Ctx<'_>) -> CmdResult {
    let a = load(file)?;
    let report = validate(&a);
    if ctx.json {
        ctx.emit_json(&json!({ "ok": report.ok(), "report": report }))?;
    } else {
        write!(ctx.out, "{report}")?;
    }
    Ok(report_failure(&report))
}

fn cmd_props(file: &Path, ctx: &mut Ctx<'_>) -> CmdResult {
    let a = load(file)?;
    let flags = properties(&a);
    if ctx.json {
        ctx.emit_json(&flags)?;
    } else {
        for name in flags.names() {
            writeln!(ctx.out, "{name}")?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_enumerate(class: Class, size: usize, emit: Option<&Path>, ctx: &mut Ctx<'_>) -> CmdResult {
    let (labels, models): (Vec<String>, Vec<FinAlgebra>) = match class {
        Class::Cic | Class::Ic => enumerate_codes(size, class == Class::Cic)?
            .map(|code| (code.to_string(), compile(&code).algebra))
            .unzip(),
        Class::Catalan => {
            let models = enumerate_catalan(size)?;
            (models.iter().map(|m| canonical(m).hash_hex()).collect(), models)
        }
    };
    let files = match emit {
        Some(dir) => Some(write_models(dir, &models)?),
        None => None,
    };
    if ctx.json {
        ctx.emit_json(&json!({
            "class": class,
            "size": size,
            "count": models.len(),
            "items": labels,
            "files": files,
        }))?;
    } else {
        for l in &labels {
            writeln!(ctx.out, "{}", if l.is_empty() { "(empty)" } else { l })?;
        }
        writeln!(ctx.out, "total {}", models.len())?;
    }
    Ok(EXIT_OK)
}

fn cmd_count(
    class: Class,
    from: usize,
    to: usize,
    methods: Vec<Method>,
    jobs: usize,
    ctx: &mut Ctx<'_>,
) -> CmdResult {
    let methods = if methods.is_empty() { class.methods().to_vec() } else { methods };
    let report = census(class, from..=to, &methods, brute_cap(), jobs)?;
    if ctx.json {
        ctx.emit_json(&json!({ "agree": report.agrees(), "report": report }))?;
    } else {
        write!(ctx.out, "{}", report.table())?;
    }
    if let Some(row) = report.rows.iter().find(|r| !r.agrees()) {
        let values: Vec<String> = row
            .values
            .iter()
            .map(|(m, v)| format!("{m}={}", v.as_ref().map_or("-".to_string(), |v| v.to_string())))
            .collect();
        return Err(breach(format!("methods disagree at size {}: {}", row.size, values.join(" "))));
    }
    Ok(EXIT_OK)
}

fn cmd_bruteforce(
    size: usize,
    cs: &ConstraintSet,
    emit: Option<&Path>,
    jobs: usize,
    ctx: &mut Ctx<'_>,
) -> CmdResult {
    let models = brute_force_bounded(size, cs, brute_cap(), jobs)?;
    let hashes = match emit {
        Some(dir) => write_models(dir, &models)?,
        None => models.iter().map(|m| canonical(m).hash_hex()).collect(),
    };
    if ctx.json {
        ctx.emit_json(&json!({
            "size": size,
            "constraints": cs.names(),
            "count": models.len(),
            "hashes": hashes,
        }))?;
    } else {
        for h in &hashes {
            writeln!(ctx.out, "{h}")?;
        }
        writeln!(ctx.out, "total {}", models.len())?;
    }
    Ok(EXIT_OK)
}

fn parse_fibers(arg: &str) -> Result<Vec<usize>, Failure> {
    let path = Path::new(arg);
    if path.exists() || arg == "-" {
        let spec: FiberSpec = serde_json::from_str(&read_text(path)?).map_err(Error::from)?;
        return Ok(spec.fibers);
    }
    arg.split(',')
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| Failure::from(Error::Parse { what: "fiber spec", detail: format!("{arg:?}") }))
        })
        .collect()
}

fn cmd_construct(args: ConstructArgs, ctx: &mut Ctx<'_>) -> CmdResult {
    let a = if let Some(k) = args.sugihara {
        sugihara_from_involution(k)?
    } else if let Some(k) = args.abs {
        abs_chain(k)?
    } else if args.c4 {
        c4()
    } else if let Some(files) = args.catalan_sum {
        catalan_sum(&load_valid(&files[0])?, &load_valid(&files[1])?)?
    } else if let Some(parts) = args.tensor {
        let skel = load_valid(Path::new(&parts[0]))?;
        tensor(&SkeletonDecomposition::new(skel, parse_fibers(&parts[1])?))?
    } else if let Some(code) = args.code {
        compile(&code.parse::<LacedCode>()?).algebra
    } else {
        unreachable!("clap requires one construction")
    };
    let report = validate(&a);
    if !report.ok() {
        return Err(breach(format!("constructed algebra fails validation:\n{report}")));
    }
    ctx.emit_algebra(&a)?;
    Ok(EXIT_OK)
}

fn cmd_decompose(mode: DecomposeMode, file: &Path, ctx: &mut Ctx<'_>) -> CmdResult {
    let a = load_valid(file)?;
    match mode {
        DecomposeMode::Catalan => {
            let (x, y) = catalan_decompose(&a)?;
            ctx.emit_json(&json!({ "a": AlgebraDoc::from(&x), "b": AlgebraDoc::from(&y) }))?;
        }
        DecomposeMode::Skeleton => {
            let s = skeleton(&a)?;
            ctx.emit_json(&json!({
                "skeleton": AlgebraDoc::from(&s.algebra),
                "elements": s.elements,
                "fibers": s.fibers,
                "fiber_sizes": s.fibers.iter().map(Vec::len).collect::<Vec<_>>(),
            }))?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_amalgamate(
    files: [&Path; 3],
    map1: Vec<usize>,
    map2: Vec<usize>,
    mode: AmalgamMode,
    ctx: &mut Ctx<'_>,
) -> CmdResult {
    let [a, b, c] = files.map(load_valid);
    let span = Span::new(a?, b?, c?, map1, map2);
    let all_sugihara = [&span.a, &span.b, &span.c].iter().all(|x| properties(x).odd_sugihara);
    let m = match mode {
        AmalgamMode::Osm => amalgamate_osm(&span)?,
        AmalgamMode::Cic => amalgamate_cic(&span)?,
        AmalgamMode::Auto if all_sugihara => amalgamate_osm(&span)?,
        AmalgamMode::Auto => amalgamate_cic(&span)?,
    };
    let mut report = validate(&m.d);
    report.merge(check_homomorphism(&m.j1(&span))?);
    report.merge(check_homomorphism(&m.j2(&span))?);
    if !m.commutes(&span) {
        let bad = span.i1.iter().zip(&span.i2).position(|(&x, &y)| m.j1[x] != m.j2[y]);
        report.record("amalgam.commutes", &bad.into_iter().collect::<Vec<_>>());
    }
    if !report.ok() {
        return Err(breach(format!("amalgam invariants fail:\n{report}")));
    }
    ctx.emit_json(&json!({ "d": AlgebraDoc::from(&m.d), "j1": m.j1, "j2": m.j2 }))?;
    Ok(EXIT_OK)
}

fn cmd_fep(file: &Path, subset: Vec<usize>, ctx: &mut Ctx<'_>) -> CmdResult {
    let a = load_valid(file)?;
    let b: BTreeSet<usize> = subset.into_iter().collect();
    let closure = fep_closure(&a, &b)?;
    let mut report = validate(&closure.algebra);
    report.merge(check_partial_preservation(&a, &closure)?);
    if !report.ok() {
        return Err(breach(format!("closure invariants fail:\n{report}")));
    }
    ctx.emit_json(&json!({
        "algebra": AlgebraDoc::from(&closure.algebra),
        "elements": closure.elements,
        "domain": closure.domain,
        "inclusion": closure.inclusion,
    }))?;
    Ok(EXIT_OK)
}

fn cmd_export(file: &Path, both: bool, ctx: &mut Ctx<'_>) -> CmdResult {
    let a = load(file)?;
    if both {
        write!(ctx.out, "{}", combined_dot(&a))?;
    } else {
        write!(ctx.out, "{}\n{}", order_dot(&a), monoidal_dot(&a))?;
    }
    Ok(EXIT_OK)
}
