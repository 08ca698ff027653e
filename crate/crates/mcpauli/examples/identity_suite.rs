//! The algebraic identities the library is built on, checked numerically.
//!
//! Each identity is a small theorem — a frame change, a phase bookkeeping
//! rule, a cancellation — that some decomposition in the catalog relies on.
//! `verify_identity` samples random instances and reports the worst
//! deviation, which should sit at floating-point noise.

use mcpauli::identities::{verify_identity, IDENTITIES};

fn main() {
    const SAMPLES: usize = 25;
    const SEED: u64 = 7;

    println!("{} identities, {} random samples each (seed {})\n", IDENTITIES.len(), SAMPLES, SEED);

    let name_width = IDENTITIES.iter().map(|i| i.name.len()).max().unwrap();
    let mut worst = 0.0f64;
    for id in IDENTITIES {
        let verdict = verify_identity(id.name, SAMPLES, SEED).unwrap();
        worst = worst.max(verdict.max_deviation);
        println!("{:name_width$}  {:9.2e}  {}", id.name, verdict.max_deviation, id.summary);
    }

    println!("\nworst deviation over the whole suite: {worst:.2e}");
    assert!(worst < 1e-9, "an identity failed to hold");
}
