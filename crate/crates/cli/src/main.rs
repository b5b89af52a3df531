use std::path::Path;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use ringoid::fincat::{catalog, from_json, parse_catalog_ref, parse_quiver_dsl, path_category, FinCat};
use ringoid::ideals::is_idempotent;
use ringoid::limits::DEFAULT_SEED;
use ringoid::report::{self, Params, Report};
use ringoid::Limits;

const EXIT_USAGE: u8 = 64;
const EXIT_DATA: u8 = 65;

#[derive(Parser)]
#[command(name = "ringoid", version, about = "Exact checks on finite F_p-linear preadditive categories")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct Common {
    /// A category file (`.json` interchange format or `.quiver` DSL) or
    /// `catalog:name`, e.g. `catalog:a2cat`.
    category: String,
    /// Field size for catalog entries given without one.
    #[arg(long)]
    p: Option<u32>,
    /// Tuple bound for the additive closure.
    #[arg(long, default_value_t = 3)]
    bound: usize,
    /// Census bound on total module dimension.
    #[arg(long, default_value_t = 4, alias = "census")]
    dim: usize,
    #[arg(long)]
    json: bool,
    /// Seed for the random probes tried before exhaustive isomorphism search.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Cap on candidate counts for module enumeration and isomorphism search.
    #[arg(long)]
    search_cap: Option<u64>,
    /// Include wall-clock time in the report (makes JSON output vary).
    #[arg(long)]
    timing: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check associativity and identity laws.
    Validate(Common),
    /// Emit the additive closure, or with --idempotents the idempotent completion.
    Complete {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        idempotents: bool,
    },
    /// Enumerate two-sided ideals.
    Ideals {
        #[command(flatten)]
        common: Common,
        /// List idempotent ideals only.
        #[arg(long)]
        idempotent: bool,
    },
    /// Topologies against hereditary torsion classes.
    Gabriel {
        #[command(flatten)]
        common: Common,
        /// Count topologies and compare with the census.
        #[arg(long)]
        enumerate: bool,
        /// Round-trip every topology through its torsion class.
        #[arg(long)]
        roundtrip: bool,
    },
    /// Idempotent ideals against TTF triples.
    Jans(Common),
    /// Split TTF triples against central idempotents.
    Split(Common),
    /// The center and its idempotents.
    Center {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        idempotents: bool,
        #[arg(long)]
        summands: bool,
    },
    /// Recollement data for one idempotent ideal, or for all of them.
    Recollement {
        #[command(flatten)]
        common: Common,
        /// An index from `ringoid ideals`, or generators `src|tgt|c0,c1;...`.
        #[arg(long)]
        ideal: Option<String>,
    },
    /// Every count and verdict in one report.
    Census(Common),
}

impl Cmd {
    fn common(&self) -> &Common {
        match self {
            Cmd::Validate(c) | Cmd::Jans(c) | Cmd::Split(c) | Cmd::Census(c) => c,
            Cmd::Complete { common, .. }
            | Cmd::Ideals { common, .. }
            | Cmd::Gabriel { common, .. }
            | Cmd::Center { common, .. }
            | Cmd::Recollement { common, .. } => common,
        }
    }
}

enum LoadError {
    Usage(String),
    Data(String),
    Invalid(Box<Report>),
}

fn load(c: &Common, limits: &Limits) -> Result<FinCat, LoadError> {
    let cat = if c.category.starts_with("catalog:") {
        let (name, p) = parse_catalog_ref(&c.category, c.p).map_err(|e| LoadError::Usage(e.to_string()))?;
        if c.p.is_some_and(|q| q != p) {
            return Err(LoadError::Usage(format!("--p {} conflicts with `{}`", c.p.unwrap(), c.category)));
        }
        catalog(&format!("{name}({p})")).map_err(|e| LoadError::Usage(e.to_string()))?
    } else {
        let path = Path::new(&c.category);
        let text = std::fs::read_to_string(path).map_err(|e| LoadError::Data(format!("{}: {e}", path.display())))?;
        let parsed = if path.extension().is_some_and(|x| x == "quiver") {
            parse_quiver_dsl(&text).and_then(|q| path_category(&q))
        } else {
            from_json(&text)
        };
        let cat = parsed.map_err(|e| LoadError::Data(format!("{}: {e}", path.display())))?;
        if c.p.is_some_and(|q| q != cat.p()) {
            return Err(LoadError::Usage(format!("--p {} conflicts with the file's field F_{}", c.p.unwrap(), cat.p())));
        }
        cat
    };
    let rep = report::validate_report(&cat, Params::new(&cat, c.dim, c.bound, limits));
    if !rep.all_pass() {
        return Err(LoadError::Invalid(Box::new(rep)));
    }
    Ok(cat)
}

fn emit(rep: &Report, json: bool) {
    if json {
        println!("{}", rep.to_json());
    } else {
        print!("{}", rep.to_table());
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    let common = cli.cmd.common().clone();
    let mut limits = Limits::from_env();
    limits.seed = common.seed;
    if let Some(s) = common.search_cap {
        limits.search = s;
    }
    let cat = match load(&common, &limits) {
        Ok(c) => c,
        Err(LoadError::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_USAGE);
        }
        Err(LoadError::Data(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_DATA);
        }
        Err(LoadError::Invalid(rep)) => {
            emit(&rep, common.json);
            return ExitCode::from(EXIT_DATA);
        }
    };
    let params = Params::new(&cat, common.dim, common.bound, &limits);
    let start = Instant::now();
    let mut rep = match &cli.cmd {
        Cmd::Validate(_) => report::validate_report(&cat, params),
        Cmd::Complete { idempotents, .. } => report::complete_report(&cat, params, *idempotents),
        Cmd::Ideals { idempotent, .. } => report::ideals_report(&cat, params, *idempotent),
        Cmd::Gabriel { enumerate, roundtrip, .. } => {
            let all = !enumerate && !roundtrip;
            report::gabriel_report(&cat, params, all || *roundtrip, all || *enumerate)
        }
        Cmd::Jans(_) => report::jans_report(&cat, params),
        Cmd::Split(_) => report::split_report(&cat, params),
        Cmd::Center { idempotents, summands, .. } => {
            let all = !idempotents && !summands;
            report::center_report(&cat, params, all || *idempotents, all || *summands)
        }
        Cmd::Recollement { ideal, .. } => match ideal {
            Some(spec) => match report::parse_ideal(&cat, spec, &limits) {
                Ok(i) if is_idempotent(&cat, &i) => report::recollement_report(&cat, params, Some(&i)),
                Ok(i) => {
                    eprintln!("error: --ideal: the ideal with dims {:?} is not idempotent", i.dims());
                    return ExitCode::from(EXIT_USAGE);
                }
                Err(e) => {
                    eprintln!("error: --ideal: {e}");
                    return ExitCode::from(EXIT_USAGE);
                }
            },
            None => report::recollement_report(&cat, params, None),
        },
        Cmd::Census(_) => report::report_census(&cat, params),
    };
    if common.timing {
        rep.timing_ms = Some(start.elapsed().as_millis());
    }
    match (&cli.cmd, common.json, &rep.output) {
        // The completed category goes to stdout on its own so it can be piped.
        (Cmd::Complete { .. }, false, Some(doc)) => {
            eprint!("{}", rep.to_table());
            println!("{doc}");
        }
        (_, false, Some(out)) if !matches!(cli.cmd, Cmd::Complete { .. }) => {
            print!("{}", rep.to_table());
            println!("{out}");
        }
        _ => emit(&rep, common.json),
    }
    ExitCode::from(rep.exit_code() as u8)
}
