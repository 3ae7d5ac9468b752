//! Terminal front end: build lattices to DOT or JSON, run the verification
//! suites, convert partitions through the core bijection, and apply the
//! cyclic action. Exit codes are a stable contract: 0 success, 1 one or
//! more verification checks failed, 2 usage or domain error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

use klattice::checks::{run_suites_on, Suite};
use klattice::cores::Core;
use klattice::geometry::alcove_of_word;
use klattice::lattice::{build_with_cap, member_by_rectangles, DEFAULT_NODE_CAP};
use klattice::partition::Partition;
use klattice::symmetry::sigma;
use klattice::Error;

#[derive(Parser)]
#[command(name = "klattice", version, about = "Build, verify, and explore lattices of bounded partitions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the lattice and write it as DOT or JSON
    Build {
        /// Bound on the parts (1..=20)
        #[arg(long, value_parser = parse_bound)]
        k: usize,
        /// Dilation level (1..=20)
        #[arg(long, value_parser = parse_bound)]
        m: usize,
        /// Artifact format
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Output file; defaults to lattice_k{k}_m{m}.{dot|json} in the
        /// current directory or in KLATTICE_OUT_DIR when set
        #[arg(long)]
        output: Option<PathBuf>,
        /// Abort if the lattice would exceed this many nodes
        #[arg(long, default_value_t = DEFAULT_NODE_CAP)]
        node_cap: usize,
    },
    /// Build the lattice and run verification suites against it
    Verify {
        /// Bound on the parts (1..=20)
        #[arg(long, value_parser = parse_bound)]
        k: usize,
        /// Dilation level (1..=20)
        #[arg(long, value_parser = parse_bound)]
        m: usize,
        /// Suite to run: counts, bijection, nilcoxeter, pieri, symmetry
        /// (repeatable); all five when omitted
        #[arg(long = "suite", value_name = "NAME")]
        suites: Vec<String>,
        /// Also write the outcomes as a JSON report
        #[arg(long)]
        report: Option<PathBuf>,
        /// Abort if the lattice would exceed this many nodes
        #[arg(long, default_value_t = DEFAULT_NODE_CAP)]
        node_cap: usize,
    },
    /// Convert a partition through the core correspondence
    #[command(group(ArgGroup::new("direction").required(true).args(["to_bounded", "to_core"])))]
    Convert {
        /// Bound on the parts (1..=20)
        #[arg(long, value_parser = parse_bound)]
        k: usize,
        /// Read the input as a core and print its bounded partition
        #[arg(long)]
        to_bounded: bool,
        /// Read the input as a bounded partition and print its core
        #[arg(long)]
        to_core: bool,
        /// Also print the affine word and the alcove vertices
        #[arg(long)]
        verbose: bool,
        /// Comma-separated parts; an empty string is the empty partition
        partition: String,
    },
    /// Apply the cyclic action to a lattice member
    Rotate {
        /// Bound on the parts (1..=20)
        #[arg(long, value_parser = parse_bound)]
        k: usize,
        /// Dilation level (1..=20)
        #[arg(long, value_parser = parse_bound)]
        m: usize,
        /// Number of times to apply the action
        #[arg(long, default_value_t = 1)]
        power: usize,
        /// Comma-separated parts; an empty string is the empty partition
        partition: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

impl Format {
    fn extension(self) -> &'static str {
        match self {
            Format::Dot => "dot",
            Format::Json => "json",
        }
    }
}

fn parse_bound(s: &str) -> Result<usize, String> {
    let v: usize = s
        .parse()
        .map_err(|_| format!("{s:?} is not an integer"))?;
    if (1..=20).contains(&v) {
        Ok(v)
    } else {
        Err(String::from("value must be between 1 and 20"))
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Build {
            k,
            m,
            format,
            output,
            node_cap,
        } => cmd_build(k, m, format, output, node_cap),
        Command::Verify {
            k,
            m,
            suites,
            report,
            node_cap,
        } => cmd_verify(k, m, &suites, report, node_cap),
        Command::Convert {
            k,
            to_bounded,
            to_core,
            verbose,
            partition,
        } => {
            debug_assert!(to_bounded != to_core);
            cmd_convert(k, to_core, verbose, &partition)
        }
        Command::Rotate {
            k,
            m,
            power,
            partition,
        } => cmd_rotate(k, m, power, &partition),
    }
}

fn out_dir() -> PathBuf {
    std::env::var_os("KLATTICE_OUT_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from("."))
}

fn cmd_build(
    k: usize,
    m: usize,
    format: Format,
    output: Option<PathBuf>,
    node_cap: usize,
) -> Result<ExitCode, String> {
    let g = build_with_cap(k, m, node_cap).map_err(|e| e.to_string())?;
    let path = output.unwrap_or_else(|| {
        out_dir().join(format!("lattice_k{k}_m{m}.{}", format.extension()))
    });
    let payload = match format {
        Format::Dot => g.export_dot(),
        Format::Json => g.export_json(),
    };
    fs::write(&path, payload).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    println!(
        "wrote {}: {} nodes, {} edges",
        path.display(),
        g.node_count(),
        g.edge_count()
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(
    k: usize,
    m: usize,
    suites: &[String],
    report: Option<PathBuf>,
    node_cap: usize,
) -> Result<ExitCode, String> {
    let selected: Vec<Suite> = if suites.is_empty() {
        Suite::all().to_vec()
    } else {
        suites
            .iter()
            .map(|name| name.parse::<Suite>())
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?
    };
    let g = build_with_cap(k, m, node_cap).map_err(|e| e.to_string())?;
    println!(
        "lattice k={k} m={m}: {} nodes, {} edges",
        g.node_count(),
        g.edge_count()
    );
    let outcomes = run_suites_on(&g, &selected).map_err(|e| e.to_string())?;
    let mut failed = 0usize;
    for o in &outcomes {
        let status = if o.passed { "pass" } else { "fail" };
        println!("{status}  {}/{}: {}", o.suite, o.name, o.detail);
        if !o.passed {
            failed += 1;
        }
    }
    if let Some(path) = report {
        let doc = serde_json::json!({
            "k": k,
            "m": m,
            "nodes": g.node_count(),
            "edges": g.edge_count(),
            "outcomes": outcomes,
        });
        let text = serde_json::to_string_pretty(&doc).expect("outcomes serialize");
        fs::write(&path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    }
    if failed == 0 {
        println!("all {} checks passed", outcomes.len());
        Ok(ExitCode::SUCCESS)
    } else {
        println!("{failed} of {} checks failed", outcomes.len());
        Ok(ExitCode::from(1))
    }
}

fn cmd_convert(k: usize, to_core: bool, verbose: bool, text: &str) -> Result<ExitCode, String> {
    let input: Partition = text.parse().map_err(|e: Error| e.to_string())?;
    let core = if to_core {
        Core::from_bounded(&input, k).map_err(|e| e.to_string())?
    } else {
        Core::new(input, k).map_err(|e| e.to_string())?
    };
    let result = if to_core {
        core.shape().clone()
    } else {
        core.to_bounded()
    };
    println!("{result}");
    if verbose {
        let word = core.to_word();
        println!("word: {word:?}");
        let alcove = alcove_of_word(&word, k);
        let vertices: Vec<String> = alcove
            .vertices()
            .iter()
            .map(|v| format!("{:?}", v.coords()))
            .collect();
        println!("alcove: {}", vertices.join(" "));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_rotate(k: usize, m: usize, power: usize, text: &str) -> Result<ExitCode, String> {
    let mut lam: Partition = text.parse().map_err(|e: Error| e.to_string())?;
    if !member_by_rectangles(&lam, k, m) {
        return Err(Error::NotAMember(lam.to_string()).to_string());
    }
    for _ in 0..(power % (k + 1)) {
        lam = sigma(&lam, k, m).map_err(|e| e.to_string())?;
    }
    println!("{lam}");
    Ok(ExitCode::SUCCESS)
}
