use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use twisted_conj::automorphisms::AutTable;
use twisted_conj::dsl::{parse_group, parse_phi};
use twisted_conj::error::Error;
use twisted_conj::group::DEFAULT_CAP;
use twisted_conj::liealgebra::ChevalleyBasis;
use twisted_conj::matrix::GroupElement;
use twisted_conj::rootsystem::{DiagramAutomorphism, RootSystem};
use twisted_conj::scalars::PrimeField;
use twisted_conj::torusfixed::case_witness;
use twisted_conj::twisted::{reidemeister, solve_unipotent};
use twisted_conj::verify::{self, Suite, VerifyConfig, SCHEMA_VERSION};

#[derive(Parser)]
#[command(name = "tc", version, about = "Twisted conjugacy in finite groups of Lie type")]
struct Cli {
    /// Structure-constant cache directory (falls back to TC_CACHE_DIR).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Maximum number of elements to enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: usize,
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct TypeArgs {
    #[arg(long = "type")]
    kind: char,
    #[arg(long)]
    rank: usize,
}

#[derive(Subcommand)]
enum Cmd {
    /// List the roots of a root system.
    Roots(TypeArgs),
    /// The diagram automorphism group.
    Gamma(TypeArgs),
    /// Build and enumerate a group.
    Group {
        #[command(subcommand)]
        cmd: GroupCmd,
    },
    /// Twisted conjugacy classes and the Reidemeister number.
    Reidemeister {
        #[arg(long)]
        group: String,
        #[arg(long, default_value = "identity")]
        phi: String,
    },
    /// Fixed-torus dimension and its group witness.
    TorusFixed {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        rho: String,
        #[arg(long, default_value_t = 5)]
        p: u32,
    },
    /// Solve y g = d y d^-1 for unitriangular y.
    SolveUnipotent {
        /// Diagonal entries, comma separated.
        #[arg(long)]
        d: String,
        /// Unitriangular matrix as [a,b;c,d].
        #[arg(long)]
        g: String,
        #[arg(long)]
        p: u32,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long = "type")]
        kind: Option<char>,
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long)]
        p: Option<u32>,
    },
}

#[derive(Subcommand)]
enum GroupCmd {
    Build {
        #[arg(long)]
        group: String,
    },
}

enum Failure {
    Usage(String),
    Verification,
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_)
            | Error::NotPrime(_)
            | Error::InvalidType(..)
            | Error::NotARoot(_)
            | Error::CapExceeded { .. }
            | Error::NotInvertible
            | Error::DomainMismatch(_)
            | Error::OutsideDomain
            | Error::NotAutomorphism(_)
            | Error::DegenerateTorus
            | Error::FieldTooSmall => Failure::Usage(e.to_string()),
            _ => Failure::Runtime(e.to_string()),
        }
    }
}

fn emit(format: Format, value: Value, csv: String) {
    match format {
        Format::Json => {
            let mut v = json!({ "schema": SCHEMA_VERSION });
            v.as_object_mut().unwrap().extend(value.as_object().cloned().unwrap_or_default());
            println!("{}", serde_json::to_string_pretty(&v).unwrap());
        }
        Format::Csv => print!("{csv}"),
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn root_system(t: &TypeArgs) -> Result<RootSystem, Failure> {
    Ok(RootSystem::from_label(t.kind.to_ascii_uppercase(), t.rank)?)
}

fn run(cli: Cli) -> Result<(), Failure> {
    let cache_dir = cli.cache_dir.clone().or_else(|| std::env::var_os("TC_CACHE_DIR").map(PathBuf::from));
    let cache = cache_dir.as_deref();
    let fmt = cli.format;
    match cli.cmd {
        Cmd::Roots(t) => {
            let rs = root_system(&t)?;
            let roots: Vec<Value> =
                rs.roots().iter().map(|r| json!({ "root": r.0, "height": r.height() })).collect();
            let mut csv = String::from("index,root,height\n");
            for (i, r) in rs.roots().iter().enumerate() {
                csv.push_str(&format!("{i},{},{}\n", csv_field(&r.to_string()), r.height()));
            }
            let value = json!({
                "type": rs.label(),
                "cartan_matrix": rs.cartan_matrix(),
                "positive": rs.num_positive(),
                "roots": roots,
            });
            emit(fmt, value, csv);
        }
        Cmd::Gamma(t) => {
            let rs = root_system(&t)?;
            let gamma = rs.diagram_automorphisms();
            let cycles: Vec<String> = gamma.iter().map(|g| g.cycles()).collect();
            let mut csv = String::from("cycles\n");
            for c in &cycles {
                csv.push_str(&format!("{}\n", csv_field(c)));
            }
            emit(fmt, json!({ "type": rs.label(), "order": gamma.len(), "elements": cycles }), csv);
        }
        Cmd::Group { cmd: GroupCmd::Build { group } } => {
            let g = parse_group(&group, cli.cap, cache)?;
            let grp = g.group.as_ref();
            let gens: Vec<String> = grp.generators().iter().map(|&s| grp.describe(s)).collect();
            let csv = format!("label,order\n{},{}\n", csv_field(grp.label()), grp.order());
            emit(fmt, json!({ "group": grp.label(), "order": grp.order(), "generators": gens }), csv);
        }
        Cmd::Reidemeister { group, phi } => {
            let g = parse_group(&group, cli.cap, cache)?;
            let a = parse_phi(&phi, &g)?;
            let table = AutTable::new(g.group.clone(), a)?;
            let summary = reidemeister(&table).summary(g.group.as_ref());
            let mut csv = String::from("rep,size\n");
            for c in &summary.classes {
                csv.push_str(&format!("{},{}\n", csv_field(&c.rep), c.size));
            }
            emit(fmt, serde_json::to_value(&summary).unwrap(), csv);
        }
        Cmd::TorusFixed { ty, rho, p } => {
            let rs = root_system(&ty)?;
            let rho = DiagramAutomorphism::from_cycles(rs.rank(), &rho)?;
            if !rs.preserves_cartan(&rho) {
                return Err(Failure::Usage(format!("{} is not a diagram automorphism of {}", rho.cycles(), rs.label())));
            }
            let cb = ChevalleyBasis::load_or_compute(&rs, cache)?;
            let rep = case_witness(&rs, &rho, &cb, p)?;
            let csv = format!(
                "type,rho,d,witness,alpha,p,verified\n{},{},{},{:?},{},{},{}\n",
                rep.root_system,
                csv_field(&rep.rho),
                rep.d,
                rep.witness,
                rep.alpha,
                rep.p,
                rep.verified
            );
            let verified = rep.verified;
            emit(fmt, serde_json::to_value(&rep).unwrap(), csv);
            if !verified {
                return Err(Failure::Verification);
            }
        }
        Cmd::SolveUnipotent { d, g, p } => {
            let f = PrimeField::new(p)?;
            let dv: Vec<i64> = d
                .split(',')
                .map(|v| v.trim().parse().map_err(|_| Failure::Usage(format!("bad diagonal entry {v:?}"))))
                .collect::<Result<_, _>>()?;
            let dm = GroupElement::diagonal(f, &dv);
            let body = g
                .trim()
                .strip_prefix('[')
                .and_then(|s| s.strip_suffix(']'))
                .ok_or_else(|| Failure::Usage("g must look like [1,a;0,1]".into()))?;
            let rows: Vec<Vec<i64>> = body
                .split(';')
                .map(|r| r.split(',').map(|v| v.trim().parse::<i64>()).collect::<Result<Vec<_>, _>>())
                .collect::<Result<_, _>>()
                .map_err(|_| Failure::Usage("bad matrix entry".into()))?;
            let gm = GroupElement::from_rows(f, &rows)?;
            let y = solve_unipotent(&dm, &gm)?;
            let csv = format!("y\n{}\n", csv_field(&y.to_string()));
            emit(fmt, json!({ "d": dm.to_string(), "g": gm.to_string(), "y": y.to_string(), "verified": true }), csv);
        }
        Cmd::Verify { suite, kind, rank, p } => {
            let s = Suite::parse(&suite).ok_or_else(|| Failure::Usage(format!("unknown suite {suite:?}")))?;
            let only = match (kind, rank, p) {
                (None, None, None) => None,
                (Some(k), Some(r), Some(p)) => Some((k.to_ascii_uppercase(), r, p)),
                _ => return Err(Failure::Usage("--type, --rank and --p go together".into())),
            };
            if only.is_some() && s != Suite::ChevalleyRelations {
                return Err(Failure::Usage("--type/--rank/--p apply to chevalley-relations only".into()));
            }
            let cfg = VerifyConfig { seed: cli.seed, cap: cli.cap, cache_dir, only };
            let rep = verify::run(s, &cfg);
            match fmt {
                Format::Json => println!("{}", rep.to_json()),
                Format::Csv => print!("{}", rep.to_csv()),
            }
            for f in rep.failures() {
                eprintln!("FAIL {}: {}", f.name, f.detail);
            }
            if !rep.pass {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
