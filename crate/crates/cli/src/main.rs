//! `relmix` — volumes, classification and figures for orthant polyhedra.
//!
//! Exit codes: 0 success, 2 input error, 3 search cap exceeded, 4 the two
//! volume algorithms disagree, 5 a checked property failed.

mod suites;
mod svg;

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use relmix::classify::{
    canonical_form, enumerate_minimal, is_minimal, volume_one_certificate, MatchingCertificate,
    DEFAULT_SEARCH_CAP,
};
use relmix::document::{tuple_hash, PolyhedronDocument, TupleDocument};
use relmix::interlace::{hull_union, is_interlaced};
use relmix::orthant::OrthantPolyhedron;
use relmix::relmv::{rmv, Method, PolyTuple};
use relmix::Error;

#[derive(Parser)]
#[command(name = "relmix", version, about = "Relative mixed volumes of orthant polyhedra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the normalized volume of C ∖ B for a polyhedron document.
    Vol { file: PathBuf },
    /// Print the relative mixed volume of a tuple document.
    Mv {
        file: PathBuf,
        #[arg(long, default_value = "both")]
        method: Method,
    },
    /// Report volume, interlacing, volume-one certificate and minimality.
    Classify { file: PathBuf },
    /// Write every minimal tuple of the given volume, one file per class.
    Enumerate {
        #[arg(short = 'n', long = "dim")]
        n: usize,
        #[arg(short = 'v', long = "volume", value_parser = clap::value_parser!(u32).range(1..))]
        volume: u32,
        /// Bound on the raw candidate count.
        #[arg(long, env = "RELMIX_CAP", default_value_t = DEFAULT_SEARCH_CAP)]
        cap: u128,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(short = 'o', long = "out")]
        out: PathBuf,
    },
    /// Run a property suite over every tuple built from small generators.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(short = 'n', long = "dim")]
        n: usize,
        #[arg(long)]
        bound: i64,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Draw 2-dimensional polyhedra as SVG.
    Render {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(short = 'o', long = "out")]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Suite {
    V1,
    Int,
    Lemma3,
    Stability,
}

/// A failed command, carrying its exit code.
#[derive(Debug)]
pub enum Failure {
    Input(String),
    Cap(String),
    Mismatch(String),
    Violation(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Cap(_) => 3,
            Failure::Mismatch(_) => 4,
            Failure::Violation(_) => 5,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Cap(m) | Failure::Mismatch(m) | Failure::Violation(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::SearchTooLarge { .. } => Failure::Cap(msg),
            Error::OracleMismatch { .. } => Failure::Mismatch(msg),
            Error::TheoremViolation(_) | Error::VolumeMismatch { .. } => Failure::Violation(msg),
            _ => Failure::Input(msg),
        }
    }
}

type CmdResult = Result<String, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn in_file(path: &Path) -> impl Fn(Error) -> Failure + '_ {
    move |e| match Failure::from(e) {
        Failure::Input(m) => Failure::Input(format!("{}: {m}", path.display())),
        other => other,
    }
}

fn load_polyhedron(path: &Path) -> Result<OrthantPolyhedron, Failure> {
    let text = read(path)?;
    PolyhedronDocument::parse(&text)
        .and_then(|d| d.to_polyhedron())
        .map_err(in_file(path))
}

fn load_tuple(path: &Path) -> Result<PolyTuple, Failure> {
    let text = read(path)?;
    TupleDocument::parse(&text)
        .and_then(|d| d.to_tuple())
        .map_err(in_file(path))
}

fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, Failure> {
    match jobs {
        None => Ok(f()),
        Some(0) => Err(Failure::Input("--jobs must be positive".into())),
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map(|pool| pool.install(f))
            .map_err(|e| Failure::Input(e.to_string())),
    }
}

fn cmd_vol(file: &Path) -> CmdResult {
    Ok(format!("{}\n", load_polyhedron(file)?.complement_volume()))
}

fn cmd_mv(file: &Path, method: Method) -> CmdResult {
    let t = load_tuple(file)?;
    Ok(format!("{}\n", rmv(&t, method)?))
}

fn points(vertices: &[relmix::IntVector]) -> String {
    let inner: Vec<String> = vertices.iter().map(ToString::to_string).collect();
    format!("[{}]", inner.join(","))
}

fn indices(xs: &[usize]) -> String {
    let inner: Vec<String> = xs.iter().map(|x| (x + 1).to_string()).collect();
    inner.join(",")
}

fn cmd_classify(file: &Path) -> CmdResult {
    let t = load_tuple(file)?;
    let volume = rmv(&t, Method::Both)?;
    let mut out = String::new();
    writeln!(out, "rmv: {volume}").unwrap();
    writeln!(out, "hull_complement: {}", hull_union(&t).complement_volume()).unwrap();
    let inter = is_interlaced(&t);
    writeln!(out, "interlaced: {}", inter.interlaced).unwrap();
    match inter.witness {
        None => writeln!(out, "witness: none").unwrap(),
        Some((face, meets)) => writeln!(
            out,
            "witness: dim={} face={} members_met={meets}",
            face.dimension,
            points(face.face.vertices())
        )
        .unwrap(),
    }
    match volume_one_certificate(&t) {
        MatchingCertificate::Permutation(sigma) => {
            let pairs: Vec<String> = sigma
                .iter()
                .enumerate()
                .map(|(j, i)| format!("B{}=e{}", j + 1, i + 1))
                .collect();
            writeln!(out, "matching: {}", pairs.join(" ")).unwrap();
        }
        MatchingCertificate::Obstruction { rows, columns } => {
            writeln!(out, "matching: none").unwrap();
            writeln!(
                out,
                "obstruction: rows={} columns={}",
                indices(&rows),
                indices(&columns)
            )
            .unwrap();
        }
    }
    if volume > BigInt::from(0) {
        let verdict = is_minimal(&t, &volume)?;
        writeln!(out, "minimal: {}", verdict.minimal).unwrap();
        if let Some((i, delta)) = verdict.witness {
            writeln!(out, "extension: member={} point={delta}", i + 1).unwrap();
        }
    } else {
        writeln!(out, "minimal: n/a").unwrap();
    }
    Ok(out)
}

fn cmd_enumerate(n: usize, volume: u32, cap: u128, jobs: Option<usize>, dir: &Path) -> CmdResult {
    if n == 0 {
        return Err(Failure::Input("dimension must be positive".into()));
    }
    let classes = with_jobs(jobs, || enumerate_minimal(n, volume, cap))??;
    fs::create_dir_all(dir).map_err(|e| Failure::Input(format!("{}: {e}", dir.display())))?;
    let mut index = String::new();
    for (k, class) in classes.iter().enumerate() {
        let name = format!("class-{:04}.tuple", k + 1);
        let t = &class.representative;
        debug_assert_eq!(canonical_form(t).representative, *t);
        let body = format!("{}\n", TupleDocument::from_tuple(t).render());
        fs::write(dir.join(&name), body)
            .map_err(|e| Failure::Input(format!("{}: {e}", dir.display())))?;
        writeln!(index, "{name}, {}, {volume}", tuple_hash(t)).unwrap();
    }
    fs::write(dir.join("index.txt"), index)
        .map_err(|e| Failure::Input(format!("{}: {e}", dir.display())))?;
    Ok(format!("classes: {}\n", classes.len()))
}

fn cmd_render(files: &[PathBuf], out: &Path) -> CmdResult {
    let mut shapes = Vec::new();
    for file in files {
        let text = read(file)?;
        let loaded = match PolyhedronDocument::parse(&text) {
            Ok(d) => d.to_polyhedron().map(|b| vec![b]),
            Err(_) => TupleDocument::parse(&text)
                .and_then(|d| d.to_tuple())
                .map(PolyTuple::into_members),
        };
        shapes.extend(loaded.map_err(in_file(file))?);
    }
    if let Some(b) = shapes.iter().find(|b| b.dim() != 2) {
        return Err(Failure::Input(format!(
            "only 2-dimensional polyhedra can be rendered, found dimension {}",
            b.dim()
        )));
    }
    fs::write(out, svg::render(&shapes))
        .map_err(|e| Failure::Input(format!("{}: {e}", out.display())))?;
    Ok(String::new())
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Vol { file } => cmd_vol(&file),
        Command::Mv { file, method } => cmd_mv(&file, method),
        Command::Classify { file } => cmd_classify(&file),
        Command::Enumerate {
            n,
            volume,
            cap,
            jobs,
            out,
        } => cmd_enumerate(n, volume, cap, jobs, &out),
        Command::Verify {
            suite,
            n,
            bound,
            jobs,
        } => with_jobs(jobs, || suites::run(suite, n, bound))?,
        Command::Render { files, out } => cmd_render(&files, &out),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(failure) => {
            if let Failure::Violation(_) = failure {
                // The offending tuple is part of the report.
                println!("{}", failure.message());
            }
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}
