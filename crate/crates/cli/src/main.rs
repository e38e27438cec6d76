mod output;

use clap::{Parser, Subcommand};
use output::{Doc, Format};
use sextic_core::arith::rational::parse_rational;
use sextic_core::arith::Rational;
use sextic_core::catalog::{verify_catalog, Catalog};
use sextic_core::classify::classify;
use sextic_core::curve::{localize, newton_polygon, parse_curve, PlanePoint};
use sextic_core::puiseux::ExpandPolicy;
use sextic_core::Error;
use std::path::PathBuf;
use std::process::ExitCode;

/// Exit statuses; each error class has its own.
pub mod exit {
    pub const OK: u8 = 0;
    pub const USAGE: u8 = 2;
    pub const PARSE: u8 = 3;
    pub const SMOOTH: u8 = 4;
    pub const NOT_ON_CURVE: u8 = 5;
    pub const TRUNCATION: u8 = 6;
    pub const DEGENERATE: u8 = 7;
    pub const VERIFY_FAILED: u8 = 8;
    pub const CATALOG_DATA: u8 = 9;
    /// An internal consistency check failed; always a bug.
    pub const INTERNAL: u8 = 10;
}

#[derive(Parser)]
#[command(name = "sextic", version, about = "Classify plane curve singularities and check the reducible-sextic catalog")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Largest t-order the expansion may reach while separating branches.
    #[arg(long, global = true, default_value_t = 200, value_parser = clap::value_parser!(u64).range(1..))]
    cap: u64,
    /// Worker threads for catalog-verify; the output does not depend on it.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: Option<u64>,
    /// Catalog file in the line-delimited JSON format; the built-in catalog
    /// is used when absent.
    #[arg(long, global = true, env = "SEXTIC_CATALOG")]
    catalog: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Singularity type of the curve at a point.
    Classify {
        curve: String,
        /// The point, as `x,y` with rational coordinates.
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        at: Option<PlanePoint>,
    },
    /// Puiseux series of every branch at a point.
    Expand {
        curve: String,
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        at: Option<PlanePoint>,
        /// Carry each series at least to this x-order, e.g. `7/2`.
        #[arg(long, value_parser = parse_order)]
        order: Option<Rational>,
    },
    /// Newton polygon at a point.
    Polygon {
        curve: String,
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        at: Option<PlanePoint>,
    },
    /// Classify a representative of every catalog entry.
    CatalogVerify {
        /// Only the entries of this figure.
        #[arg(long)]
        figure: Option<u32>,
    },
    /// Print the catalog entries.
    CatalogList {
        #[arg(long)]
        figure: Option<u32>,
    },
}

fn parse_point(s: &str) -> Result<PlanePoint, String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected x,y but got {s:?}"))?;
    let q = |t: &str| parse_rational(t.trim()).ok_or_else(|| format!("not a rational number: {t:?}"));
    Ok(PlanePoint::new(q(a)?, q(b)?))
}

fn parse_order(s: &str) -> Result<Rational, String> {
    match parse_rational(s.trim()) {
        Some(q) if q > Rational::from_integer(0.into()) => Ok(q),
        _ => Err(format!("expected a positive rational, got {s:?}")),
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } => exit::PARSE,
        Error::SmoothPoint => exit::SMOOTH,
        Error::NotOnCurve => exit::NOT_ON_CURVE,
        Error::TruncationCap { .. } => exit::TRUNCATION,
        Error::ZeroPolynomial | Error::NonReduced => exit::DEGENERATE,
        Error::Contract(_) | Error::Construction(_) => exit::INTERNAL,
        Error::Catalog(_) => exit::CATALOG_DATA,
    }
}

fn load_catalog(path: &Option<PathBuf>) -> Result<Catalog, Error> {
    match path {
        Some(p) => Catalog::load(p),
        None => Ok(Catalog::builtin().clone()),
    }
}

fn run(cli: &Cli) -> Result<(Doc, u8), (Error, &'static str)> {
    let policy = ExpandPolicy { cap: cli.cap, min_order: None };
    let origin = PlanePoint::origin();
    match &cli.command {
        Command::Classify { curve, at } => {
            let name = "classify";
            let f = parse_curve(curve).map_err(|e| (e, name))?;
            let at = at.as_ref().unwrap_or(&origin);
            let catalog = load_catalog(&cli.catalog).map_err(|e| (e, name))?;
            let c = classify(&f, at, &policy).map_err(|e| (e, name))?;
            Ok((output::classification(&f, &c, catalog.lookup(&c.diagram)), exit::OK))
        }
        Command::Expand { curve, at, order } => {
            let name = "expand";
            let f = parse_curve(curve).map_err(|e| (e, name))?;
            let at = at.as_ref().unwrap_or(&origin);
            let policy = ExpandPolicy { cap: cli.cap, min_order: order.clone() };
            let c = classify(&f, at, &policy).map_err(|e| (e, name))?;
            Ok((output::expansion(&c, order.as_ref()), exit::OK))
        }
        Command::Polygon { curve, at } => {
            let name = "polygon";
            let f = parse_curve(curve).map_err(|e| (e, name))?;
            let at = at.as_ref().unwrap_or(&origin);
            // smooth points have a polygon too, so no singularity check here
            let p = newton_polygon(&localize(&f, at)).map_err(|e| (e, name))?;
            Ok((output::polygon(at, &p), exit::OK))
        }
        Command::CatalogVerify { figure } => {
            let name = "catalog-verify";
            let catalog = load_catalog(&cli.catalog).map_err(|e| (e, name))?;
            let jobs = cli
                .jobs
                .map(|j| j as usize)
                .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
            let report = verify_catalog(&catalog, *figure, &policy, jobs);
            let code = if report.success { exit::OK } else { exit::VERIFY_FAILED };
            Ok((output::verify(&report), code))
        }
        Command::CatalogList { figure } => {
            let name = "catalog-list";
            let catalog = load_catalog(&cli.catalog).map_err(|e| (e, name))?;
            let entries: Vec<_> = catalog.entries().iter().filter(|e| figure.is_none_or(|f| e.figure_id == f)).collect();
            Ok((output::listing(&entries), exit::OK))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => exit::OK,
                _ => exit::USAGE,
            };
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok((doc, code)) => {
            doc.print(cli.format);
            ExitCode::from(code)
        }
        Err((e, command)) => {
            output::error(command, &e).print_error(cli.format);
            ExitCode::from(exit_code(&e))
        }
    }
}
