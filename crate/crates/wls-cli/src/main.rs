//! `wls`: embed, extract, and combine dataset licenses, audit the
//! combination algebra, and run the Web License Service.
//!
//! Exit codes: 0 success, 1 domain failure (incompatible combination,
//! unreadable or invalid license data), 2 usage or configuration error.
//! Machine-readable output (codes, JSON, `X`) goes to stdout;
//! diagnostics go to stderr.

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand};
use serde_json::json;
use wls_algebra::{
    combine_all, engines_diff, validate_algebra, CombinationOutcome, Engine, LicenseDesignation,
    MatrixMode,
};
use wls_ccrel::{canonical_uri, LicenseDocument};
use wls_sidecar::{read_license, write_license, DatasetRef, SidecarError};

const DESIGNATION_HELP: &str = "Designation codes:\n  PD, CC0, BY, BY-NC, BY-NC-ND, BY-NC-ND-SA, BY-NC-SA, BY-ND, BY-ND-SA, BY-SA, ARR, NL";

const EXIT_OK: u8 = 0;
const EXIT_DOMAIN: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "wls",
    version,
    about = "Dataset license tools: sidecars, combination algebra, and the Web License Service",
    after_help = DESIGNATION_HELP
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a license sidecar (<dataset>.lic) for a dataset
    #[command(after_help = DESIGNATION_HELP)]
    Embed {
        /// Dataset base path, .shp file, or .lic path
        dataset: PathBuf,
        /// License designation code
        #[arg(long, value_parser = parse_designation)]
        license: LicenseDesignation,
        /// Work title carried in the fragment
        #[arg(long)]
        title: Option<String>,
        #[arg(long)]
        attribution_name: Option<String>,
        #[arg(long)]
        attribution_url: Option<String>,
        #[arg(long)]
        work_uri: Option<String>,
        /// Overwrite an existing sidecar
        #[arg(long)]
        force: bool,
    },

    /// Print the license designation of a dataset or .lic file
    #[command(after_help = DESIGNATION_HELP)]
    Extract {
        /// Dataset base path, .shp file, or .lic path
        path: PathBuf,
        /// Print the full license document as JSON
        #[arg(long)]
        json: bool,
    },

    /// Combine two or more licenses given as codes or dataset paths
    #[command(after_help = DESIGNATION_HELP)]
    Combine {
        /// Designation codes (all-caps) or dataset paths
        #[arg(required = true, num_args = 2..)]
        inputs: Vec<String>,
        #[arg(long, default_value = "matrix", value_parser = parse_engine)]
        engine: Engine,
        #[arg(long, default_value = "symmetrized", value_parser = parse_mode)]
        mode: MatrixMode,
        /// Write the composite license to this sidecar when compatible
        #[arg(long, value_name = "OUT.LIC")]
        emit: Option<PathBuf>,
    },

    /// Audit the symmetry and associativity of a combination engine
    #[command(after_help = DESIGNATION_HELP)]
    ValidateAlgebra {
        #[arg(long, default_value = "matrix", value_parser = parse_engine)]
        engine: Engine,
        #[arg(long, default_value = "raw", value_parser = parse_mode)]
        mode: MatrixMode,
    },

    /// List every ordered pair where the matrix and OR engines disagree
    #[command(after_help = DESIGNATION_HELP)]
    DiffEngines,

    /// Run the Web License Service
    #[command(after_help = DESIGNATION_HELP)]
    Serve {
        /// Service configuration file
        #[arg(long)]
        config: PathBuf,
    },
}

fn parse_designation(s: &str) -> Result<LicenseDesignation, String> {
    LicenseDesignation::from_code(s)
        .ok_or_else(|| format!("unknown designation code {s:?}; valid codes are PD, CC0, BY, BY-NC, BY-NC-ND, BY-NC-ND-SA, BY-NC-SA, BY-ND, BY-ND-SA, BY-SA, ARR, NL"))
}

fn parse_engine(s: &str) -> Result<Engine, String> {
    Engine::from_str(s)
}

fn parse_mode(s: &str) -> Result<MatrixMode, String> {
    MatrixMode::from_str(s)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    ExitCode::from(run(cli.command))
}

fn run(command: Command) -> u8 {
    match command {
        Command::Embed {
            dataset,
            license,
            title,
            attribution_name,
            attribution_url,
            work_uri,
            force,
        } => cmd_embed(dataset, license, title, attribution_name, attribution_url, work_uri, force),
        Command::Extract { path, json } => cmd_extract(path, json),
        Command::Combine { inputs, engine, mode, emit } => cmd_combine(&inputs, engine, mode, emit),
        Command::ValidateAlgebra { engine, mode } => cmd_validate_algebra(engine, mode),
        Command::DiffEngines => cmd_diff_engines(),
        Command::Serve { config } => cmd_serve(config),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_embed(
    dataset: PathBuf,
    license: LicenseDesignation,
    title: Option<String>,
    attribution_name: Option<String>,
    attribution_url: Option<String>,
    work_uri: Option<String>,
    force: bool,
) -> u8 {
    let mut doc = LicenseDocument::new(license);
    doc.title = title;
    doc.attribution_name = attribution_name;
    doc.attribution_url = attribution_url;
    doc.work_uri = work_uri;
    match write_license(&DatasetRef::from_path(dataset), &doc, force) {
        Ok(path) => {
            println!("{}", path.display());
            EXIT_OK
        }
        Err(e @ SidecarError::AlreadyExists { .. }) => {
            eprintln!("wls: {e} (use --force to overwrite)");
            EXIT_DOMAIN
        }
        Err(e) => {
            eprintln!("wls: {e}");
            EXIT_DOMAIN
        }
    }
}

fn cmd_extract(path: PathBuf, as_json: bool) -> u8 {
    match read_license(&DatasetRef::from_path(path)) {
        Ok(doc) => {
            if as_json {
                let mut body = json!({
                    "designation": doc.designation.code(),
                    "licenseUri": canonical_uri(doc.designation),
                });
                if let Some(v) = &doc.work_uri {
                    body["workUri"] = json!(v);
                }
                if let Some(v) = &doc.title {
                    body["title"] = json!(v);
                }
                if let Some(v) = &doc.attribution_name {
                    body["attributionName"] = json!(v);
                }
                if let Some(v) = &doc.attribution_url {
                    body["attributionUrl"] = json!(v);
                }
                println!("{body}");
            } else {
                println!("{}", doc.designation.code());
            }
            EXIT_OK
        }
        Err(e) => {
            eprintln!("wls: {e}");
            EXIT_DOMAIN
        }
    }
}

/// An argument is read as a designation code when it looks like one
/// (all-caps letters, digits, hyphens); anything else is a dataset
/// path. Prefix with `./` to force a code-looking name to be a path.
fn resolve_combine_input(input: &str) -> Result<LicenseDesignation, (u8, String)> {
    let code_like = !input.is_empty()
        && input
            .bytes()
            .all(|b| b.is_ascii_uppercase() || b.is_ascii_digit() || b == b'-');
    if code_like {
        return LicenseDesignation::from_code(input).ok_or_else(|| {
            (
                EXIT_USAGE,
                format!(
                    "unknown designation code {input:?}; valid codes are {}",
                    LicenseDesignation::ALL.map(|d| d.code()).join(", ")
                ),
            )
        });
    }
    match read_license(&DatasetRef::from_path(input)) {
        Ok(doc) => Ok(doc.designation),
        Err(e) => Err((EXIT_DOMAIN, e.to_string())),
    }
}

fn cmd_combine(inputs: &[String], engine: Engine, mode: MatrixMode, emit: Option<PathBuf>) -> u8 {
    let mut designations = Vec::with_capacity(inputs.len());
    for input in inputs {
        match resolve_combine_input(input) {
            Ok(d) => designations.push(d),
            Err((code, message)) => {
                eprintln!("wls: {message}");
                return code;
            }
        }
    }
    match combine_all(&designations, engine, mode) {
        CombinationOutcome::Compatible(result) => {
            if let Some(out) = emit {
                let doc = LicenseDocument::new(result);
                if let Err(e) = write_license(&DatasetRef::from_path(out), &doc, true) {
                    eprintln!("wls: {e}");
                    return EXIT_DOMAIN;
                }
            }
            println!("{}", result.code());
            EXIT_OK
        }
        CombinationOutcome::Incompatible => {
            println!("X");
            EXIT_DOMAIN
        }
    }
}

fn cmd_validate_algebra(engine: Engine, mode: MatrixMode) -> u8 {
    let report = validate_algebra(engine, mode);
    print!("{}", report.render());
    if report.is_clean() {
        EXIT_OK
    } else {
        EXIT_DOMAIN
    }
}

fn cmd_diff_engines() -> u8 {
    for d in engines_diff() {
        println!(
            "{} {} {} {}",
            d.a.code(),
            d.b.code(),
            d.matrix_outcome.code(),
            d.or_outcome.code()
        );
    }
    EXIT_OK
}

fn cmd_serve(config_path: PathBuf) -> u8 {
    let parsed = match wls_service::load_config(&config_path) {
        Ok(parsed) => parsed,
        Err(e) => {
            eprintln!("wls: config error: {e}");
            return EXIT_USAGE;
        }
    };
    for warning in &parsed.warnings {
        eprintln!("wls: config warning: {warning}");
    }
    match wls_service::serve(parsed.config) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("wls: {e}");
            EXIT_DOMAIN
        }
    }
}
