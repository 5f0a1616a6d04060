//! `clusterchar`: command-line driver for cluster-character computations
//! and identity verification.
//!
//! Exit codes: 0 all checks pass, 1 a verification failed, 2 unsupported
//! input, 3 malformed input. Machine-parsable check outcomes go to stdout
//! as `RESULT <name> <PASS|FAIL>` lines; diagnostics go to stderr.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;

use clusterchar_core::cccharacter::CharacterContext;
use clusterchar_core::clustercat::{mod_to_arc, ArcCategory, ArcObject};
use clusterchar_core::error::{Error, Result};
use clusterchar_core::frieze::{enumerate_friezes, lift_frieze, make_frieze};
use clusterchar_core::multverify::{
    full_space_basis, stratify_finite_field, verify_ar, verify_factor_ideal, verify_refined,
    SubspaceBasis, VerificationReport,
};
use clusterchar_core::quiver::{enumerate_cluster_variables, ExchangeQuiver};
use clusterchar_core::specialize::{specialize_cc, ReductionContext};
use clusterchar_core::textio;

#[derive(Parser)]
#[command(name = "clusterchar", version, about = "Cluster character computations and identity checks")]
struct Cli {
    /// Output style: `human` adds context lines, `machine` emits only the
    /// stable RESULT lines.
    #[arg(long, global = true, value_enum, default_value_t = OutputMode::Human)]
    output: OutputMode,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum OutputMode {
    Human,
    Machine,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Backend {
    Arc,
    Module,
}

#[derive(Args)]
struct QuiverSource {
    /// Quiver file (first line `n`, then `i j m` arrow lines).
    #[arg(long)]
    quiver: Option<PathBuf>,
    /// Built-in generator, e.g. `A3`.
    #[arg(long = "type")]
    type_name: Option<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Mutate a quiver at a vertex and print the result.
    Mutate {
        #[command(flatten)]
        src: QuiverSource,
        /// Vertex to mutate at (1-based).
        #[arg(long)]
        vertex: usize,
    },
    /// Enumerate all cluster variables of a finite-type quiver.
    Enumerate {
        #[command(flatten)]
        src: QuiverSource,
        /// Bound on the number of seeds explored.
        #[arg(long, default_value_t = 10_000)]
        max: usize,
    },
    /// Compute the cluster character of an object.
    Cc {
        /// Rank of the ambient type-A model, e.g. `A3`.
        #[arg(long = "type")]
        type_name: String,
        #[arg(long, value_enum, default_value_t = Backend::Arc)]
        backend: Backend,
        /// Object file (arc or module format, per --backend).
        #[arg(long)]
        object: PathBuf,
    },
    /// Verify a multiplication identity.
    Verify {
        #[command(subcommand)]
        what: VerifyCmd,
    },
    /// Specialize cluster characters at one and emit certificates.
    Specialize {
        /// Rank of the type-A model, e.g. `A3`.
        #[arg(long = "type")]
        type_name: String,
        /// Cluster variable to set to one (1-based; only the last vertex
        /// is supported).
        #[arg(long)]
        vertex: usize,
        /// Specialize every indecomposable object.
        #[arg(long)]
        all: bool,
        /// Arc-object file to specialize instead of --all.
        #[arg(long)]
        object: Option<PathBuf>,
    },
    /// Enumerate, validate or lift friezes.
    Frieze {
        #[command(subcommand)]
        what: FriezeCmd,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// The refined identity for given objects and a subspace of the
    /// crossing space.
    Refined {
        /// Rank of the type-A model, e.g. `A2`.
        #[arg(long = "type")]
        type_name: String,
        /// Arc-object file for the left factor L.
        #[arg(long)]
        left: PathBuf,
        /// Arc-object file for the right factor M.
        #[arg(long)]
        right: PathBuf,
        /// Subspace file: one basis vector per line, rational coordinates
        /// in the crossing-pair basis of Hom(L, ΣM). Default: full space.
        #[arg(long)]
        subspace: Option<PathBuf>,
        /// Comma-separated primes for an independent finite-field
        /// cross-check of the stratum Euler characteristics.
        #[arg(long)]
        primes: Option<String>,
    },
    /// The classical two-term exchange identity on every exchange pair.
    Palu {
        #[arg(long = "type")]
        type_name: String,
    },
    /// The almost-split identity CC(Z)·CC(ΣZ) = CC(Y) + 1 on every
    /// indecomposable.
    Ar {
        #[arg(long = "type")]
        type_name: String,
    },
    /// The factoring-ideal identity, with the pairing-kernel equality, on
    /// every pair with nonzero ideal.
    Ideal {
        #[arg(long = "type")]
        type_name: String,
    },
}

#[derive(Subcommand)]
enum FriezeCmd {
    /// List all friezes of a finite-type quiver by their initial values.
    Enumerate {
        #[command(flatten)]
        src: QuiverSource,
    },
    /// Validate a frieze file.
    Check {
        #[arg(long)]
        file: PathBuf,
    },
    /// Lift a type-A frieze of rank n−1 to the unique frieze of rank n
    /// restricting to it.
    Lift {
        #[arg(long)]
        file: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help/version requests are not errors.
            if e.use_stderr() {
                eprintln!("{e}");
                return ExitCode::from(3);
            }
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };
    let mode = cli.output;
    match run(cli.cmd, mode) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Parse(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn read_file(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))
}

/// Parse a built-in type name like `A3` into its rank.
fn type_rank(name: &str) -> Result<usize> {
    let rest = name
        .strip_prefix('A')
        .or_else(|| name.strip_prefix('a'))
        .ok_or_else(|| Error::Parse(format!("unknown type {name:?}; expected An")))?;
    let n: usize = rest
        .parse()
        .map_err(|_| Error::Parse(format!("unknown type {name:?}; expected An")))?;
    if n == 0 {
        return Err(Error::Parse("type rank must be positive".into()));
    }
    Ok(n)
}

fn load_quiver(src: &QuiverSource) -> Result<ExchangeQuiver> {
    match (&src.quiver, &src.type_name) {
        (Some(path), _) => textio::parse_quiver(&read_file(path)?),
        (None, Some(name)) => Ok(ExchangeQuiver::type_a(type_rank(name)?)),
        (None, None) => Err(Error::Parse("need --quiver FILE or --type An".into())),
    }
}

fn parse_subspace(text: &str) -> Result<SubspaceBasis> {
    let mut basis = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let row: Vec<BigRational> = line
            .split_whitespace()
            .map(|t| {
                t.parse::<BigRational>()
                    .map_err(|_| Error::Parse(format!("bad coordinate {t:?}")))
            })
            .collect::<Result<_>>()?;
        basis.push(row);
    }
    if basis.is_empty() {
        return Err(Error::Parse("subspace file has no basis vectors".into()));
    }
    Ok(basis)
}

fn arc_context(n: usize) -> Result<CharacterContext> {
    CharacterContext::new(ArcCategory::type_a(n))
}

fn load_arc_object(cat: &ArcCategory, path: &PathBuf) -> Result<ArcObject> {
    let obj = textio::parse_arc_object(&read_file(path)?)?;
    if obj.big_n != cat.big_n {
        return Err(Error::Parse(format!(
            "object lives in a {}-gon, the model uses a {}-gon",
            obj.big_n, cat.big_n
        )));
    }
    Ok(obj)
}

fn arc_label(obj: &ArcObject) -> String {
    if obj.arcs.is_empty() {
        return "0".into();
    }
    obj.arcs
        .iter()
        .map(|a| format!("({},{})", a.a, a.b))
        .collect::<Vec<_>>()
        .join("+")
}

/// Print a RESULT line and, on failure, both sides of the identity.
fn emit_report(name: &str, report: &VerificationReport, mode: OutputMode) {
    println!("RESULT {name} {}", if report.pass { "PASS" } else { "FAIL" });
    if !report.pass {
        println!("  lhs = {}", report.lhs.render());
        println!("  rhs = {}", report.rhs.render());
    } else if mode == OutputMode::Human {
        println!(
            "  both sides = {} ({} + {} strata)",
            report.lhs.render(),
            report.strata_v.len(),
            report.strata_r.len()
        );
    }
}

fn run(cmd: Cmd, mode: OutputMode) -> Result<bool> {
    match cmd {
        Cmd::Mutate { src, vertex } => {
            let q = load_quiver(&src)?;
            if vertex < 1 || vertex > q.n {
                return Err(Error::Parse(format!("vertex {vertex} out of range 1..={}", q.n)));
            }
            print!("{}", textio::render_quiver(&q.mutate(vertex - 1)));
            Ok(true)
        }
        Cmd::Enumerate { src, max } => {
            let q = load_quiver(&src)?;
            let vars = enumerate_cluster_variables(&q, max)?;
            if mode == OutputMode::Human {
                println!("{} cluster variables:", vars.len());
            }
            for v in &vars {
                println!("{}", v.render());
            }
            Ok(true)
        }
        Cmd::Cc { type_name, backend, object } => {
            let n = type_rank(&type_name)?;
            let ctx = arc_context(n)?;
            let obj = match backend {
                Backend::Arc => load_arc_object(&ctx.cat, &object)?,
                Backend::Module => {
                    let m = textio::parse_mod_object(n, &read_file(&object)?)?;
                    mod_to_arc(&ctx.cat, &m)
                }
            };
            if mode == OutputMode::Human {
                println!("object {}", arc_label(&obj));
            }
            println!("{}", ctx.cc(&obj)?.render());
            Ok(true)
        }
        Cmd::Verify { what } => run_verify(what, mode),
        Cmd::Specialize { type_name, vertex, all, object } => {
            run_specialize(&type_name, vertex, all, object, mode)
        }
        Cmd::Frieze { what } => run_frieze(what, mode),
    }
}

fn run_verify(what: VerifyCmd, mode: OutputMode) -> Result<bool> {
    match what {
        VerifyCmd::Refined { type_name, left, right, subspace, primes } => {
            let n = type_rank(&type_name)?;
            let ctx = arc_context(n)?;
            let l = load_arc_object(&ctx.cat, &left)?;
            let m = load_arc_object(&ctx.cat, &right)?;
            let dim = ctx.cat.crossing_pairs(&l, &m).len();
            let basis = match subspace {
                Some(path) => parse_subspace(&read_file(&path)?)?,
                None => full_space_basis(dim),
            };
            for v in &basis {
                if v.len() != dim {
                    return Err(Error::Parse(format!(
                        "basis vector has {} coordinates, the crossing space has {dim}",
                        v.len()
                    )));
                }
            }
            let report = verify_refined(&ctx, &l, &m, &basis)?;
            let mut pass = report.pass;
            emit_report("refined", &report, mode);
            if let Some(list) = primes {
                let primes: Vec<u64> = list
                    .split(',')
                    .map(|t| {
                        t.trim()
                            .parse::<u64>()
                            .map_err(|_| Error::Parse(format!("bad prime {t:?}")))
                    })
                    .collect::<Result<_>>()?;
                let counted = stratify_finite_field(&ctx, &l, &m, &basis, &primes)?;
                let agree = counted.len() == report.strata_v.len()
                    && counted.iter().all(|(fp, chi)| {
                        report
                            .strata_v
                            .iter()
                            .any(|s| &s.fingerprint == fp && &s.chi == chi)
                    });
                println!("RESULT refined-chi-crosscheck {}", if agree { "PASS" } else { "FAIL" });
                pass &= agree;
            }
            Ok(pass)
        }
        VerifyCmd::Palu { type_name } => {
            let n = type_rank(&type_name)?;
            let ctx = arc_context(n)?;
            let arcs = ctx.cat.all_arcs();
            let mut pass = true;
            for (i, &a) in arcs.iter().enumerate() {
                for &b in &arcs[i + 1..] {
                    let l = ArcObject::single(ctx.cat.big_n, a);
                    let m = ArcObject::single(ctx.cat.big_n, b);
                    if ctx.cat.crossing_pairs(&l, &m).len() != 1 {
                        continue;
                    }
                    let report = verify_refined(&ctx, &l, &m, &full_space_basis(1))?;
                    emit_report(
                        &format!("palu:{}x{}", arc_label(&l), arc_label(&m)),
                        &report,
                        mode,
                    );
                    pass &= report.pass;
                }
            }
            Ok(pass)
        }
        VerifyCmd::Ar { type_name } => {
            let n = type_rank(&type_name)?;
            let ctx = arc_context(n)?;
            let mut pass = true;
            for z in ctx.cat.all_arcs() {
                let report = verify_ar(&ctx, z)?;
                emit_report(&format!("ar:({},{})", z.a, z.b), &report, mode);
                pass &= report.pass;
            }
            Ok(pass)
        }
        VerifyCmd::Ideal { type_name } => {
            let n = type_rank(&type_name)?;
            let ctx = arc_context(n)?;
            let arcs = ctx.cat.all_arcs();
            let mut pass = true;
            let mut checked = 0usize;
            for &a in &arcs {
                for &b in &arcs {
                    let l = ArcObject::single(ctx.cat.big_n, a);
                    let m = ArcObject::single(ctx.cat.big_n, b);
                    if ctx.cat.factor_ideal_pairs(&l, &m).is_empty() {
                        continue;
                    }
                    let report = verify_factor_ideal(&ctx, &l, &m)?;
                    emit_report(
                        &format!("ideal:{}x{}", arc_label(&l), arc_label(&m)),
                        &report,
                        mode,
                    );
                    pass &= report.pass;
                    checked += 1;
                }
            }
            if checked == 0 {
                return Err(Error::Hypothesis("no pair has a nonzero factoring ideal".into()));
            }
            Ok(pass)
        }
    }
}

fn run_specialize(
    type_name: &str,
    vertex: usize,
    all: bool,
    object: Option<PathBuf>,
    mode: OutputMode,
) -> Result<bool> {
    let n = type_rank(type_name)?;
    if vertex != n {
        return Err(Error::UnsupportedCone(format!(
            "only specialization at the last vertex ({n}) is supported"
        )));
    }
    let rc = ReductionContext::new(n)?;
    let objects: Vec<ArcObject> = if all {
        rc.parent
            .cat
            .all_arcs()
            .into_iter()
            .map(|a| ArcObject::single(rc.parent.cat.big_n, a))
            .collect()
    } else {
        let path = object.ok_or_else(|| Error::Parse("need --all or --object FILE".into()))?;
        vec![load_arc_object(&rc.parent.cat, &path)?]
    };
    for obj in &objects {
        let (value, cert) = specialize_cc(&rc, obj)?;
        println!("RESULT specialize:{} PASS", arc_label(obj));
        if mode == OutputMode::Human {
            let mut text = String::new();
            cert.render(&mut text, 2);
            print!("{text}");
            println!("  value = {}", value.render());
        }
    }
    Ok(true)
}

fn run_frieze(what: FriezeCmd, mode: OutputMode) -> Result<bool> {
    match what {
        FriezeCmd::Enumerate { src } => {
            let q = load_quiver(&src)?;
            let friezes = enumerate_friezes(&q)?;
            if mode == OutputMode::Human {
                println!("{} friezes:", friezes.len());
            }
            for f in &friezes {
                let vals: Vec<String> = f.values.iter().map(BigInt::to_string).collect();
                println!("{}", vals.join(" "));
            }
            Ok(true)
        }
        FriezeCmd::Check { file } => {
            let (q, values) = textio::parse_frieze_file(&read_file(&file)?)?;
            match make_frieze(&q, &values) {
                Ok(_) => {
                    println!("RESULT frieze-check PASS");
                    Ok(true)
                }
                Err(Error::NotAFrieze(msg)) => {
                    eprintln!("not a frieze: {msg}");
                    println!("RESULT frieze-check FAIL");
                    Ok(false)
                }
                Err(e) => Err(e),
            }
        }
        FriezeCmd::Lift { file } => {
            let (q, values) = textio::parse_frieze_file(&read_file(&file)?)?;
            let f_prime = make_frieze(&q, &values)?;
            let rc = ReductionContext::new(q.n + 1)?;
            let lifted = lift_frieze(&rc, &f_prime)?;
            println!("RESULT frieze-lift PASS");
            print!("{}", textio::render_frieze_file(&lifted.quiver, &lifted.values));
            Ok(true)
        }
    }
}
