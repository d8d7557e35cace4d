//! Command-line front end. The `orbitdeg` binary forwards to [`run`].
//!
//! Exit codes: 0 on success, 1 for invalid descriptors, violated
//! preconditions and corpus mismatches, 2 for unreadable or malformed input
//! and usage errors.

use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::corpus;
use crate::corrections::{self, ErratumPolicy};
use crate::engine::{self, OrbitReport};
use crate::error::{parse_json, read_file, Error, Result};
use crate::local::{self, MonomialSupport};
use crate::model::{CurveDescriptor, IrreducibleSingularity, NewtonSide, TruncationSpec};
use crate::series::{Rational, TruncSeries};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Pretty,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Erratum {
    /// Flex factor `1 - H^6/48 + ...`, consistent with all worked examples.
    #[default]
    Derived,
    /// Flex factor with the `H^6` coefficient `-1/42`.
    Strict,
}

impl From<Erratum> for ErratumPolicy {
    fn from(e: Erratum) -> Self {
        match e {
            Erratum::Derived => ErratumPolicy::Derived,
            Erratum::Strict => ErratumPolicy::Strict,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "orbitdeg", version, about = "Predegree polynomials and orbit-closure degrees of plane curves")]
pub struct Cli {
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long, value_enum, global = true, default_value_t = Erratum::Derived)]
    pub erratum: Erratum,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Assemble the a.p.p. of a curve descriptor (`-` reads stdin).
    Compute { path: PathBuf },
    /// Print a single correction term or local factor.
    #[command(subcommand)]
    Contribution(Contribution),
    /// Newton polygon analysis of a monomial support file.
    Newton { path: PathBuf },
    /// Join two curves meeting in `I` transversal points on nonlinear
    /// components, `J` on a line, and the given number of simple tangencies.
    Union {
        a: PathBuf,
        b: PathBuf,
        #[arg(long = "I", default_value_t = 0)]
        i: u32,
        #[arg(long = "J", default_value_t = 0)]
        j: u32,
        #[arg(long, default_value_t = 0)]
        tangencies: u32,
        #[arg(long)]
        stabilizer: Option<u32>,
    },
    /// The curve taken with multiplicity `m`.
    Scale {
        path: PathBuf,
        #[arg(long)]
        m: u32,
    },
    /// Replay the golden corpus.
    Corpus {
        #[arg(long)]
        dir: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum Contribution {
    /// Line of multiplicity `m` meeting the rest with multiplicities `meets`.
    Type1 {
        #[arg(long)]
        m: u32,
        #[arg(long, value_delimiter = ',')]
        meets: Vec<u32>,
        #[arg(long)]
        degree: u32,
    },
    /// Nonlinear component of degree `e` and multiplicity `m`.
    Type2 {
        #[arg(long)]
        degree: u32,
        #[arg(long)]
        e: u32,
        #[arg(long)]
        m: u32,
    },
    /// Tangent cone with the given line multiplicities.
    Type3 {
        #[arg(long, value_delimiter = ',', required = true)]
        lines: Vec<u32>,
    },
    /// Newton polygon side `from -> to` with root multiplicities `s`.
    Type4 {
        #[arg(long, value_parser = parse_pair)]
        from: [u32; 2],
        #[arg(long, value_parser = parse_pair)]
        to: [u32; 2],
        #[arg(long, value_delimiter = ',', required = true)]
        s: Vec<u32>,
    },
    /// Truncation limiting to a union of conics.
    Type5 {
        #[arg(long)]
        ell: u32,
        #[arg(long = "W")]
        w: Rational,
        #[arg(long, value_delimiter = ',', required = true)]
        s: Vec<u32>,
    },
    /// Unibranch point with Puiseux data `(m, n)` and essential exponents.
    Thm51 {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, value_delimiter = ',')]
        essential: Vec<u32>,
    },
    /// Ordinary `m`-fold point, with the contact orders of its branches.
    Omp {
        #[arg(long)]
        m: u32,
        #[arg(long, value_delimiter = ',')]
        contacts: Vec<u32>,
    },
    /// Combined factor of `count` ordinary flexes.
    Flexes {
        #[arg(long)]
        count: u64,
    },
    /// Correction for a one-parameter limit with the given rational data.
    Lemma331 {
        #[arg(long)]
        alpha: Rational,
        #[arg(long)]
        beta: Rational,
        #[arg(long)]
        gamma: Rational,
        #[arg(long)]
        rho: Rational,
        #[arg(long)]
        delta: u32,
    },
}

fn parse_pair(s: &str) -> std::result::Result<[u32; 2], String> {
    let parts: Vec<&str> = s.split(',').collect();
    match parts.as_slice() {
        [a, b] => {
            Ok([a.trim().parse().map_err(|e| format!("{a}: {e}"))?, b.trim().parse().map_err(|e| format!("{b}: {e}"))?])
        }
        _ => Err(format!("expected `j,k`, got `{s}`")),
    }
}

#[derive(Serialize)]
struct ContributionOutput {
    kind: &'static str,
    term: TruncSeries,
    #[serde(skip_serializing_if = "Option::is_none")]
    absorbs: Option<u32>,
}

/// Parse `args` (including the program name) and execute.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_parse_error() {
                2
            } else {
                1
            }
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let policy = ErratumPolicy::from(cli.erratum);
    match &cli.command {
        Command::Compute { path } => {
            let report = engine::assemble_with(&load_descriptor(path)?, policy)?;
            emit_report(cli.format, &report, out, err)?;
        }
        Command::Contribution(c) => {
            let output = contribution(c, policy)?;
            match cli.format {
                Format::Json => emit_json(&output, out)?,
                Format::Pretty => {
                    write_out(out, format_args!("{}: {}\n", output.kind, output.term))?;
                    if let Some(a) = output.absorbs {
                        write_out(out, format_args!("absorbs {a} flexes\n"))?;
                    }
                }
            }
        }
        Command::Newton { path } => {
            let supp: MonomialSupport = parse_json(&read_input(path)?)?;
            let analysis = local::analyze(&supp)?;
            match cli.format {
                Format::Json => emit_json(&analysis, out)?,
                Format::Pretty => {
                    let inv = &analysis.invariants;
                    let n = inv.n.map_or("none".to_string(), |n| n.to_string());
                    write_out(out, format_args!("multiplicity {}, tangential order {n}\n", inv.m))?;
                    write_out(out, format_args!("vertices {:?}\n", analysis.polygon.vertices))?;
                    for s in &analysis.sides {
                        write_out(
                            out,
                            format_args!(
                                "side {:?} -> {:?}  S = {}  roots {:?}\n",
                                s.from,
                                s.to,
                                s.lattice_length,
                                s.root_multiplicities()
                            ),
                        )?;
                    }
                }
            }
        }
        Command::Union { a, b, i, j, tangencies, stabilizer } => {
            let ra = engine::assemble_with(&load_descriptor(a)?, policy)?;
            let rb = engine::assemble_with(&load_descriptor(b)?, policy)?;
            let mut report = engine::union(&ra, &rb, *i, *j, *tangencies);
            if let Some(k) = stabilizer {
                report = report.with_stabilizer(*k)?;
            }
            emit_report(cli.format, &report, out, err)?;
        }
        Command::Scale { path, m } => {
            if *m == 0 {
                return Err(Error::precondition("multiplicity must be positive"));
            }
            let report = engine::assemble_with(&load_descriptor(path)?, policy)?;
            emit_report(cli.format, &engine::scale(&report, *m), out, err)?;
        }
        Command::Corpus { dir } => {
            let dir = dir.clone().unwrap_or_else(corpus::default_dir);
            let fixtures = corpus::load_dir(&dir)?;
            let outcomes = corpus::replay(&fixtures, policy);
            let failed = outcomes.iter().filter(|o| !o.passed).count();
            match cli.format {
                Format::Json => emit_json(&outcomes, out)?,
                Format::Pretty => {
                    for o in &outcomes {
                        let tag = if o.passed { "PASS" } else { "FAIL" };
                        write_out(out, format_args!("{tag}  {}\n", o.name))?;
                        for d in &o.diffs {
                            write_out(out, format_args!("      {d}\n"))?;
                        }
                    }
                }
            }
            let _ = writeln!(err, "{} of {} fixtures passed", outcomes.len() - failed, outcomes.len());
            for o in outcomes.iter().filter(|o| !o.passed) {
                let _ = writeln!(err, "FAIL {}: {}", o.name, o.diffs.join("; "));
            }
            return Ok(if failed == 0 { 0 } else { 1 });
        }
    }
    Ok(0)
}

fn contribution(c: &Contribution, policy: ErratumPolicy) -> Result<ContributionOutput> {
    let plain = |kind, term| ContributionOutput { kind, term, absorbs: None };
    Ok(match c {
        Contribution::Type1 { m, meets, degree } => plain("type1", corrections::type1(*m, meets, *degree)?.term),
        Contribution::Type2 { degree, e, m } => plain("type2", corrections::type2(*degree, *e, *m)?.term),
        Contribution::Type3 { lines } => plain("type3", corrections::type3(lines).term),
        Contribution::Type4 { from, to, s } => {
            plain("type4", corrections::type4_side(&NewtonSide::new(*from, *to, s.clone()))?.term)
        }
        Contribution::Type5 { ell, w, s } => {
            let t = TruncationSpec { ell: *ell, weight: w.clone(), s: s.clone() };
            plain("type5", corrections::type5(&t)?.term)
        }
        Contribution::Thm51 { m, n, essential } => {
            let s = IrreducibleSingularity::new(*m, *n, essential.clone());
            let factor = if (*m, *n) == (1, 3) { corrections::flex_factor(policy) } else { corrections::thm51(&s)? };
            ContributionOutput { kind: "thm51", term: factor, absorbs: Some(corrections::flexes_absorbed(&s)?) }
        }
        Contribution::Omp { m, contacts } => plain("omp", corrections::ordinary_multiple_point(*m, contacts)?),
        Contribution::Flexes { count } => plain("flexes", corrections::flex_equivalent_with(*count, policy)),
        Contribution::Lemma331 { alpha, beta, gamma, rho, delta } => {
            if *delta == 0 {
                return Err(Error::precondition("delta must be positive"));
            }
            plain("lemma331", corrections::lemma331(alpha, beta, gamma, rho, *delta))
        }
    })
}

fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|source| Error::Io { path: "<stdin>".into(), source })?;
        Ok(s)
    } else {
        read_file(path)
    }
}

fn load_descriptor(path: &Path) -> Result<CurveDescriptor> {
    crate::model::parse(&read_input(path)?)
}

fn write_out(out: &mut dyn Write, args: std::fmt::Arguments<'_>) -> Result<()> {
    out.write_fmt(args).map_err(|source| Error::Io { path: "<stdout>".into(), source })
}

fn emit_json<T: Serialize + ?Sized>(value: &T, out: &mut dyn Write) -> Result<()> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Error::Internal(e.to_string()))?;
    write_out(out, format_args!("{text}\n"))
}

fn emit_report(format: Format, r: &OrbitReport, out: &mut dyn Write, err: &mut dyn Write) -> Result<()> {
    match format {
        Format::Json => emit_json(r, out)?,
        Format::Pretty => {
            write_out(out, format_args!("a.p.p.           {}\n", r.app))?;
            let poly: Vec<String> = r.predegree_poly.iter().map(|a| a.to_string()).collect();
            write_out(out, format_args!("a_0..a_8         {}\n", poly.join(", ")))?;
            write_out(out, format_args!("orbit dimension  {}\n", r.orbit_dimension))?;
            write_out(out, format_args!("predegree        {}\n", r.predegree))?;
            if let (Some(d), Some(k)) = (&r.degree, r.stabilizer_degree) {
                write_out(out, format_args!("degree           {d} (stabilizer {k})\n"))?;
            }
            if !r.breakdown.is_empty() {
                write_out(out, format_args!("breakdown\n"))?;
                for b in &r.breakdown {
                    let kind = format!("{:?}", b.correction.kind);
                    write_out(out, format_args!("  {:<7} {:<28} {}\n", kind, b.label, b.correction.term))?;
                }
            }
        }
    }
    for w in &r.warnings {
        let _ = writeln!(err, "warning: {w}");
    }
    for n in &r.erratum_notes {
        let _ = writeln!(err, "note: {n}");
    }
    Ok(())
}
