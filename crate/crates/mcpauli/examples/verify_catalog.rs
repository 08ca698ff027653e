//! Channel-level certification of the whole catalog.
//!
//! Each entry declares what it implements (a multi-controlled Pauli, a
//! controlled unitary block, an ancilla-writing rectangle, or the inverse of
//! a partner entry) and `verify_entry` checks the built circuit against that
//! declaration: every measurement branch must be proportional to the target,
//! probabilities must sum to one, and nothing may leak into unrestored
//! ancillas.

use std::process::ExitCode;

use mcpauli::catalog::{verify_entry, CATALOG};

fn main() -> ExitCode {
    let tol = 1e-9;
    let mut failures = 0;
    println!("{:24} {:>8} {:>12} {:>12}", "entry", "branches", "max dev", "leakage");
    for e in CATALOG {
        match verify_entry(e, tol) {
            Ok(v) if v.equivalent => {
                println!(
                    "{:24} {:>8} {:>12.2e} {:>12.2e}",
                    e.name,
                    v.branch_phases.len(),
                    v.max_deviation,
                    v.leakage
                );
            }
            Ok(v) => {
                println!("{:24} FAILED: {v:?}", e.name);
                failures += 1;
            }
            Err(e2) => {
                println!("{:24} ERROR: {e2}", e.name);
                failures += 1;
            }
        }
    }
    if failures == 0 {
        println!("\nall {} entries certified at tolerance {tol:.0e}", CATALOG.len());
        ExitCode::SUCCESS
    } else {
        println!("\n{failures} entries failed");
        ExitCode::FAILURE
    }
}
