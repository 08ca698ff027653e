//! Thin command-line front end over the library: build and serialize
//! catalog circuits, verify them against their targets, print computed
//! resource tables, and emit the T-depth scan CSV. All numbers come from
//! the builders at run time; nothing here is hard-coded.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use mcpauli::catalog::{self, CATALOG};
use mcpauli::extend::{
    cnz_build, cnz_selinger_logdepth, AddMethod, AssignmentStrategy, CHAIN_FAMILIES,
};
use mcpauli::identities::{verify_identity, IDENTITIES};
use mcpauli::metrics::resource_report;
use mcpauli::text;

#[derive(Parser)]
#[command(
    name = "mcpauli",
    version,
    about = "Multi-controlled Pauli decompositions: build, verify, count"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every catalog entry with its summary.
    List,
    /// Build a catalog circuit and print (or write) its text form.
    Build {
        /// Catalog key, e.g. `ccz-paler-fig2a`.
        key: String,
        /// Write the circuit here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Simulate a catalog circuit and compare it against its target.
    Verify {
        key: String,
        /// Largest deviation still accepted as equal.
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Print a catalog circuit's resource row.
    Report { key: String },
    /// Print a computed resource table.
    Table {
        which: TableKind,
        /// Largest control count for the `cnz` table.
        #[arg(long, default_value_t = 6)]
        n_max: usize,
    },
    /// Scan C^nZ chain T-depth over base, method and strategy; emit CSV.
    TdepthScan {
        /// Largest control count to scan.
        #[arg(long, default_value_t = 7)]
        n_max: usize,
        /// Write the CSV here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the full identity suite.
    Identities {
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Samples per identity.
        #[arg(long, default_value_t = 25)]
        samples: usize,
        /// Largest deviation still accepted as holding.
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    /// The seven CCCZ constructions.
    Cccz,
    /// Per-method costs of adding one control.
    Cadd,
    /// C^nZ chain resources for growing n.
    Cnz,
}

/// Usage-level failure: unknown key or impossible parameter.
const EXIT_USAGE: u8 = 2;
/// A verification that ran but did not hold.
const EXIT_MISMATCH: u8 = 1;

fn main() -> ExitCode {
    // Tables and scans are meant to be piped; die quietly on a closed pipe
    // instead of panicking (Rust ignores SIGPIPE by default).
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }

    match Cli::parse().command {
        Command::List => cmd_list(),
        Command::Build { key, out } => cmd_build(&key, out.as_deref()),
        Command::Verify { key, tol } => cmd_verify(&key, tol),
        Command::Report { key } => cmd_report(&key),
        Command::Table { which, n_max } => cmd_table(which, n_max),
        Command::TdepthScan { n_max, out } => cmd_scan(n_max, out.as_deref()),
        Command::Identities { seed, samples, tol } => cmd_identities(seed, samples, tol),
    }
}

fn usage_error(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(EXIT_USAGE)
}

fn write_or_print(out: Option<&std::path::Path>, content: &str) -> ExitCode {
    match out {
        None => {
            print!("{content}");
            ExitCode::SUCCESS
        }
        Some(path) => match std::fs::write(path, content) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => usage_error(&format!("cannot write {}: {e}", path.display())),
        },
    }
}

fn cmd_list() -> ExitCode {
    let width = CATALOG.iter().map(|e| e.name.len()).max().unwrap_or(0);
    for e in CATALOG {
        println!("{:width$}  {}", e.name, e.summary);
    }
    ExitCode::SUCCESS
}

fn cmd_build(key: &str, out: Option<&std::path::Path>) -> ExitCode {
    match catalog::build_named(key) {
        Ok(c) => write_or_print(out, &text::serialize(&c)),
        Err(e) => usage_error(&e.to_string()),
    }
}

fn cmd_verify(key: &str, tol: f64) -> ExitCode {
    let Some(entry) = catalog::entry(key) else {
        return usage_error(&format!("unknown catalog entry `{key}`"));
    };
    match catalog::verify_entry(entry, tol) {
        Ok(v) if v.equivalent => {
            println!(
                "equivalent ({} branch{}, leakage {:.1e})",
                v.branch_phases.len(),
                if v.branch_phases.len() == 1 { "" } else { "es" },
                v.leakage
            );
            ExitCode::SUCCESS
        }
        Ok(v) => {
            println!(
                "not equivalent (max deviation {:.3e}, trace defect {:.3e}, leakage {:.3e})",
                v.max_deviation, v.trace_defect, v.leakage
            );
            ExitCode::from(EXIT_MISMATCH)
        }
        Err(e) => usage_error(&format!("cannot verify `{key}`: {e}")),
    }
}

fn cmd_report(key: &str) -> ExitCode {
    match catalog::build_named(key) {
        Ok(c) => match resource_report(&c, key) {
            Ok(r) => {
                println!("{}", r.row());
                ExitCode::SUCCESS
            }
            Err(e) => usage_error(&format!("cannot report `{key}`: {e}")),
        },
        Err(e) => usage_error(&e.to_string()),
    }
}

const REPORT_HEADER: &str = "name t_count cnot_min cnot_max t_depth ancillas feedback";

fn cmd_table(which: TableKind, n_max: usize) -> ExitCode {
    match which {
        TableKind::Cccz => table_cccz(),
        TableKind::Cadd => table_cadd(),
        TableKind::Cnz => table_cnz(n_max),
    }
}

/// The seven CCCZ constructions: the log-depth tree and the two plain
/// chains are built on the spot, the rest come from the catalog.
fn table_cccz() -> ExitCode {
    println!("{REPORT_HEADER}");
    let tree = cnz_selinger_logdepth(3, true).expect("3 controls is in range");
    let jones = cnz_build(3, "cz", AddMethod::JonesC, AssignmentStrategy::Exhaustive)
        .expect("cz chain in range");
    let gidney = cnz_build(3, "cz", AddMethod::GidneyB, AssignmentStrategy::Exhaustive)
        .expect("cz chain in range");
    let rows = [
        ("selinger-tree", tree),
        ("cz+jones-c", jones),
        ("cz+gidney-b", gidney),
        ("cccz-gidney", catalog::build_named("cccz-gidney").expect("registered")),
        ("cccz-fig1a", catalog::build_named("cccz-fig1a").expect("registered")),
        ("cccz-fig1a-prime", catalog::build_named("cccz-fig1a-prime").expect("registered")),
        ("cccz-fig1b", catalog::build_named("cccz-fig1b").expect("registered")),
    ];
    for (name, c) in rows {
        let r = resource_report(&c, name).expect("in-range circuits always report");
        println!("{}", r.row());
    }
    ExitCode::SUCCESS
}

/// Per-method cost of one added control, measured as cz → ccz differences.
fn table_cadd() -> ExitCode {
    println!("method t_delta cnot_min_delta cnot_max_delta ancilla_delta feedback_delta");
    let cz = catalog::build_named("cz").expect("registered");
    let base = resource_report(&cz, "cz").expect("reports");
    for method in AddMethod::ALL {
        let ccz = mcpauli::extend::add_control(
            method,
            &cz,
            mcpauli::circuit::QubitId::data(1),
            mcpauli::circuit::QubitId::data(2),
        )
        .expect("cz extends");
        let r = resource_report(&ccz, method.key()).expect("reports");
        println!(
            "{} {} {} {} {} {}",
            method.key(),
            r.t_count - base.t_count,
            r.cnot_min - base.cnot_min,
            r.cnot_max - base.cnot_max,
            r.ancillas - base.ancillas,
            r.feedback - base.feedback
        );
    }
    ExitCode::SUCCESS
}

/// C^nZ resources by construction family for n = 3..=n_max, exhaustive
/// designation for the chains.
fn table_cnz(n_max: usize) -> ExitCode {
    if n_max < 3 {
        return usage_error("--n-max must be at least 3");
    }
    println!("n {REPORT_HEADER}");
    for n in 3..=n_max {
        let tree = match cnz_selinger_logdepth(n, true) {
            Ok(c) => c,
            Err(e) => return usage_error(&e.to_string()),
        };
        let r = resource_report(&tree, "selinger-tree").expect("reports");
        println!("{n} {}", r.row());
        for (base, method) in CHAIN_FAMILIES {
            let name = format!("{base}+{}", method.key());
            let c = match cnz_build(n, base, method, AssignmentStrategy::Exhaustive) {
                Ok(c) => c,
                Err(e) => return usage_error(&format!("{name}: {e}")),
            };
            let r = resource_report(&c, &name).expect("reports");
            println!("{n} {}", r.row());
        }
    }
    ExitCode::SUCCESS
}

fn cmd_scan(n_max: usize, out: Option<&std::path::Path>) -> ExitCode {
    if n_max < 3 {
        return usage_error("--n-max must be at least 3");
    }
    let mut csv = String::from("n,base,method,strategy,t_count,cnot_min,cnot_max,t_depth\n");
    for n in 3..=n_max {
        for (base, method) in CHAIN_FAMILIES {
            for strategy in AssignmentStrategy::ALL {
                let c = match cnz_build(n, base, method, strategy) {
                    Ok(c) => c,
                    Err(e) => return usage_error(&format!("{base}+{}: {e}", method.key())),
                };
                let r = resource_report(&c, base).expect("reports");
                csv.push_str(&format!(
                    "{n},{base},{},{},{},{},{},{}\n",
                    method.key(),
                    strategy.key(),
                    r.t_count,
                    r.cnot_min,
                    r.cnot_max,
                    r.t_depth
                ));
            }
        }
    }
    write_or_print(out, &csv)
}

fn cmd_identities(seed: u64, samples: usize, tol: f64) -> ExitCode {
    if samples == 0 {
        return usage_error("--samples must be at least 1");
    }
    let mut worst: f64 = 0.0;
    for id in IDENTITIES {
        let v = verify_identity(id.name, samples, seed).expect("suite names are registered");
        worst = worst.max(v.max_deviation);
        let status = if v.max_deviation < tol { "ok" } else { "FAIL" };
        println!(
            "{:22} {:>9.2e} over {} samples  {}",
            v.name, v.max_deviation, v.samples, status
        );
    }
    if worst < tol {
        println!("all {} identities hold", IDENTITIES.len());
        ExitCode::SUCCESS
    } else {
        println!("worst deviation {worst:.3e} exceeds tolerance {tol:.1e}");
        ExitCode::from(EXIT_MISMATCH)
    }
}
