//! The `pprir` command line.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::json;
use thiserror::Error;

use pprir_core::ideal::{self, parse_elements, Ideal};
use pprir_core::lattice::{all_ideals, Classification};
use pprir_core::zmodel::{self, ZProductIdeal};
use pprir_core::{quotient_ring, FiniteRing, IdealError, ZModelError};

use crate::claims::{run_audit, AuditOptions, ClaimId, Status, UnknownClaim};
use crate::corpus::{default_corpus, Corpus, CorpusError};
use crate::report::{render_report, Format};
use crate::ringfile::{load_ring_file, RingFileError};

/// Successful run.
pub const EXIT_OK: u8 = 0;
/// An `--expect-verified` claim was refuted somewhere.
pub const EXIT_REFUTED: u8 = 1;
/// Bad input: unreadable or invalid ring file, bad element list, bad flag.
pub const EXIT_INPUT: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "pprir",
    version,
    about = "Finite commutative rings: ideals, spectra, quotients and claim audits"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Order and classification flags of a ring.
    Describe { ringfile: PathBuf },
    /// The full ideal lattice.
    Ideals {
        ringfile: PathBuf,
        #[arg(long, conflicts_with = "dot")]
        json: bool,
        /// Hasse diagram in Graphviz format.
        #[arg(long)]
        dot: bool,
    },
    /// Prime ideals, with generators where principal.
    Spectrum { ringfile: PathBuf },
    /// Every predicate for the ideal generated by the given elements.
    ClassifyIdeal(ElementArgs),
    /// The quotient by the ideal generated by the given elements.
    Quotient(ElementArgs),
    /// Run claim checkers over a corpus.
    Audit(AuditArgs),
    /// The symbolic model of Z^k.
    Zmodel {
        #[command(subcommand)]
        command: ZmodelCommand,
    },
}

#[derive(Debug, Args)]
pub struct ElementArgs {
    pub ringfile: PathBuf,
    /// Comma-separated element names (or indices), e.g. `x,y` or `(1,0),(0,2)`.
    #[arg(long, allow_hyphen_values = true)]
    pub elements: String,
}

#[derive(Debug, Args)]
pub struct AuditArgs {
    /// `default` or a directory of ring files.
    #[arg(long, default_value = "default")]
    pub corpus: String,
    /// A claim id or `all`.
    #[arg(long, default_value = "all")]
    pub claim: String,
    #[arg(long)]
    pub json: bool,
    /// Exit 1 if this claim has any refuted report. Repeatable.
    #[arg(long = "expect-verified", value_name = "ID")]
    pub expect_verified: Vec<String>,
    /// Largest ring order searched for endomorphisms (overrides PPRIR_ENDO_CAP).
    #[arg(long)]
    pub endo_cap: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum ZmodelCommand {
    /// The prime, non-maximal ideal Z×{0} of Z×Z.
    Example2,
    /// Examine an ideal literal such as `Z^2:(1,0)`.
    Examine { ideal: String },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    RingFile { path: String, source: RingFileError },
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Claim(#[from] UnknownClaim),
    #[error(transparent)]
    ZModel(#[from] ZModelError),
    #[error("output: {0}")]
    Io(#[from] std::io::Error),
}

fn load(path: &Path) -> Result<FiniteRing, CliError> {
    load_ring_file(path).map_err(|source| CliError::RingFile {
        path: path.display().to_string(),
        source,
    })
}

fn flag(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Parses `argv`, runs the command and returns the process exit code.
/// Normal output goes to `out`, diagnostics to `err`.
pub fn main_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    match run(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

pub fn run(cli: Cli, out: &mut dyn Write) -> Result<u8, CliError> {
    match cli.command {
        Command::Describe { ringfile } => describe(&load(&ringfile)?, out)?,
        Command::Ideals {
            ringfile,
            json,
            dot,
        } => ideals(&load(&ringfile)?, json, dot, out)?,
        Command::Spectrum { ringfile } => spectrum(&load(&ringfile)?, out)?,
        Command::ClassifyIdeal(a) => {
            let ring = load(&a.ringfile)?;
            let i = generated(&ring, &a.elements)?;
            classify_ideal(&ring, &i, out)?
        }
        Command::Quotient(a) => {
            let ring = load(&a.ringfile)?;
            let i = generated(&ring, &a.elements)?;
            quotient(&ring, &i, out)?
        }
        Command::Audit(a) => return audit(a, out),
        Command::Zmodel { command } => match command {
            ZmodelCommand::Example2 => zmodel_examine(&ZProductIdeal::new(&[1, 0])?, out)?,
            ZmodelCommand::Examine { ideal } => zmodel_examine(&ideal.parse()?, out)?,
        },
    }
    Ok(EXIT_OK)
}

fn generated(ring: &FiniteRing, elements: &str) -> Result<Ideal, CliError> {
    let gens = parse_elements(ring, elements)?;
    Ok(ideal::ideal_generated(ring, &gens))
}

fn describe(ring: &FiniteRing, out: &mut dyn Write) -> Result<(), CliError> {
    let lattice = all_ideals(ring);
    let c = Classification::from_lattice(ring, &lattice);
    writeln!(out, "ring: {}", ring.label())?;
    writeln!(out, "order: {}", ring.order())?;
    writeln!(out, "elements: {}", ring.element_names().join(" "))?;
    writeln!(out, "ideals: {}", lattice.len())?;
    writeln!(out, "primes: {}", lattice.primes(ring).len())?;
    writeln!(out, "domain: {}", flag(c.is_domain))?;
    writeln!(out, "field: {}", flag(c.is_field))?;
    writeln!(out, "boolean: {}", flag(c.is_boolean))?;
    writeln!(out, "pprir: {}", flag(c.is_pprir))?;
    writeln!(out, "pprid: {}", flag(c.is_pprid()))?;
    if let Some(w) = &c.witness {
        writeln!(out, "non-principal prime: {}", w.render(ring))?;
    }
    Ok(())
}

fn ideals(
    ring: &FiniteRing,
    as_json: bool,
    dot: bool,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let lattice = all_ideals(ring);
    if dot {
        write!(out, "{}", lattice.to_dot(ring))?;
        return Ok(());
    }
    let primes = lattice.primes(ring);
    let maximal = lattice.maximal_ideals();
    if as_json {
        let ideals: Vec<_> = lattice
            .ideals()
            .iter()
            .map(|i| {
                let generator = ideal::is_principal(ring, i).expect("same ring");
                json!({
                    "elements": i.iter().map(|a| ring.name(a)).collect::<Vec<_>>(),
                    "size": i.len(),
                    "prime": primes.contains(i),
                    "maximal": maximal.contains(i),
                    "generator": generator.map(|g| ring.name(g)),
                })
            })
            .collect();
        let doc = json!({
            "ring": ring.label(),
            "order": ring.order(),
            "ideals": ideals,
            "covers": lattice.covering_edges(),
        });
        writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&doc).expect("json value")
        )?;
        return Ok(());
    }
    writeln!(out, "{} ideals of {}", lattice.len(), ring.label())?;
    for (k, i) in lattice.ideals().iter().enumerate() {
        let mut tags = Vec::new();
        if !i.is_proper() {
            tags.push("whole");
        }
        if primes.contains(i) {
            tags.push("prime");
        }
        if maximal.contains(i) {
            tags.push("maximal");
        }
        write!(out, "[{k}] {}", i.render(ring))?;
        match ideal::is_principal(ring, i).expect("same ring") {
            Some(g) => write!(out, " = ({})", ring.name(g))?,
            None => write!(out, " not principal")?,
        }
        if !tags.is_empty() {
            write!(out, " {}", tags.join(" "))?;
        }
        writeln!(out)?;
    }
    writeln!(out, "covers:")?;
    for (a, b) in lattice.covering_edges() {
        writeln!(out, "[{a}] < [{b}]")?;
    }
    Ok(())
}

fn spectrum(ring: &FiniteRing, out: &mut dyn Write) -> Result<(), CliError> {
    let lattice = all_ideals(ring);
    let primes = lattice.primes(ring);
    writeln!(out, "{} prime ideals of {}", primes.len(), ring.label())?;
    for p in &primes {
        write!(out, "{}", p.render(ring))?;
        match ideal::is_principal(ring, p)? {
            Some(g) => write!(out, " = ({})", ring.name(g))?,
            None => write!(out, " not principal")?,
        }
        if lattice.is_maximal(p) {
            write!(out, " maximal")?;
        }
        writeln!(out)?;
    }
    Ok(())
}

fn classify_ideal(ring: &FiniteRing, i: &Ideal, out: &mut dyn Write) -> Result<(), CliError> {
    let lattice = all_ideals(ring);
    writeln!(out, "ideal: {}", i.render(ring))?;
    writeln!(out, "size: {}", i.len())?;
    writeln!(out, "proper: {}", flag(i.is_proper()))?;
    match ideal::is_principal(ring, i)? {
        Some(g) => writeln!(out, "principal: yes ({})", ring.name(g))?,
        None => writeln!(out, "principal: no")?,
    }
    writeln!(out, "prime: {}", flag(ideal::is_prime(ring, i)?))?;
    if let Some((x, y)) = ideal::prime_violation(ring, i) {
        writeln!(
            out,
            "  {}·{} in I, neither factor in I",
            ring.name(x),
            ring.name(y)
        )?;
    }
    writeln!(out, "maximal: {}", flag(lattice.is_maximal(i)))?;
    writeln!(out, "ppri: {}", flag(ideal::is_ppri(ring, i)?))?;
    writeln!(out, "semiprime: {}", flag(ideal::is_semiprime(ring, i)?))?;
    writeln!(out, "primary: {}", flag(ideal::is_primary(ring, i)?))?;
    writeln!(out, "radical: {}", ideal::radical(ring, i)?.render(ring))?;
    if i.is_proper() {
        let minimal = lattice.minimal_primes_over(ring, i)?;
        let rendered: Vec<String> = minimal.iter().map(|p| p.render(ring)).collect();
        writeln!(out, "minimal primes over: {}", rendered.join(" "))?;
    }
    Ok(())
}

fn quotient(ring: &FiniteRing, i: &Ideal, out: &mut dyn Write) -> Result<(), CliError> {
    let q = quotient_ring(ring, i)?;
    let qr = q.quotient();
    let c = Classification::from_lattice(qr, &all_ideals(qr));
    writeln!(out, "quotient: {}", qr.label())?;
    writeln!(out, "order: {}", qr.order())?;
    for (k, coset) in q.cosets().iter().enumerate() {
        let names: Vec<&str> = coset.iter().map(|&a| ring.name(a)).collect();
        writeln!(out, "{} = {{{}}}", qr.element_names()[k], names.join(","))?;
    }
    writeln!(out, "domain: {}", flag(c.is_domain))?;
    writeln!(out, "field: {}", flag(c.is_field))?;
    writeln!(out, "pprir: {}", flag(c.is_pprir))?;
    Ok(())
}

fn audit(a: AuditArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    let corpus = match a.corpus.as_str() {
        "default" => default_corpus(),
        dir => Corpus::load_dir(Path::new(dir))?,
    };
    let claims: Vec<ClaimId> = if a.claim.eq_ignore_ascii_case("all") {
        ClaimId::ALL.to_vec()
    } else {
        vec![a.claim.parse()?]
    };
    let expected = a
        .expect_verified
        .iter()
        .map(|c| c.parse::<ClaimId>())
        .collect::<Result<Vec<_>, _>>()?;
    let mut opts = AuditOptions::from_env();
    if let Some(cap) = a.endo_cap {
        opts.endo_cap = cap;
    }

    let reports = run_audit(&claims, &corpus, &opts);
    let format = if a.json { Format::Json } else { Format::Text };
    write!(out, "{}", render_report(&reports, format))?;

    let failed = reports
        .iter()
        .any(|r| r.status == Status::Refuted && expected.contains(&r.claim));
    Ok(if failed { EXIT_REFUTED } else { EXIT_OK })
}

fn zmodel_examine(i: &ZProductIdeal, out: &mut dyn Write) -> Result<(), CliError> {
    let ex = zmodel::examine(i);
    let witness: Vec<String> = ex.witness.iter().map(i64::to_string).collect();
    writeln!(out, "ideal: {i} = {}", i.render_set())?;
    writeln!(out, "prime: {}", flag(ex.prime))?;
    writeln!(out, "maximal: {}", flag(ex.maximal))?;
    writeln!(
        out,
        "principal: ({}) [{} within bound {}]",
        witness.join(","),
        if ex.witness_valid {
            "validated"
        } else {
            "NOT validated"
        },
        zmodel::default_bound(i)
    )?;
    match &ex.chain {
        Some(c) => {
            writeln!(out, "intermediate: {}", c[1])?;
            writeln!(out, "chain: {}", zmodel::render_chain(c))?;
        }
        None => writeln!(out, "intermediate: none")?,
    }
    Ok(())
}
