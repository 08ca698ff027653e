//! The cost tables: CCCZ decompositions side by side, control-addition
//! overheads, and the closed-form families for growing C^nZ.
//!
//! This is the library-level counterpart of `mcpauli table cccz|cadd|cnz` —
//! every number is computed from a freshly built circuit, nothing is quoted.

use mcpauli::catalog;
use mcpauli::extend::{cnz_build, cnz_selinger_logdepth, AddMethod, AssignmentStrategy};
use mcpauli::metrics::resource_report;

fn main() {
    println!("CCCZ (three controls), all roads compared:\n");
    println!("name t_count cnot_min cnot_max t_depth ancillas feedback");
    let tree = cnz_selinger_logdepth(3, true).unwrap();
    println!("{}", resource_report(&tree, "selinger-tree").unwrap().row());
    for (base, method) in [("cz", AddMethod::JonesC), ("cz", AddMethod::GidneyB)] {
        let name = format!("{base}+{method}");
        let c = cnz_build(3, base, method, AssignmentStrategy::Exhaustive).unwrap();
        println!("{}", resource_report(&c, &name).unwrap().row());
    }
    for name in ["cccz-gidney", "cccz-fig1a", "cccz-fig1a-prime", "cccz-fig1b"] {
        println!("{}", catalog::entry(name).unwrap().report().row());
    }

    println!("\nper-step overhead of adding one control:\n");
    println!("method        ΔT  ΔCNOT      Δfeedback  Δancillas");
    for m in AddMethod::ALL {
        let (lo, hi) = m.cnot_delta();
        println!(
            "{:13} +{:<2} {:10} +{:<9} +{}",
            m.key(),
            m.t_delta(),
            format!("(+{lo},+{hi})"),
            m.feedback_delta(),
            m.ancilla_delta()
        );
    }

    // Chains inherit those overheads linearly, so each family follows a
    // closed form in the control count n. Two rows, spelled out:
    println!("\ncccz-fig1a grown with paler-a (T = 4n−6, CNOT ∈ [3n−3, 4n−4]):\n");
    for n in 3..=8 {
        let c = cnz_build(n, "cccz-fig1a", AddMethod::PalerA, AssignmentStrategy::Linear).unwrap();
        let r = resource_report(&c, "chain").unwrap();
        println!(
            "  n={n}: T={:2} CNOT=[{:2},{:2}]   formula ({:2}, [{:2},{:2}])",
            r.t_count,
            r.cnot_min,
            r.cnot_max,
            4 * n - 6,
            3 * n - 3,
            4 * n - 4
        );
    }
    println!("\nsame family as CSV rows (the scan file format):\n");
    for n in 3..=5 {
        let c = cnz_build(n, "cccz-fig1a", AddMethod::PalerA, AssignmentStrategy::Linear).unwrap();
        println!("  {}", resource_report(&c, &format!("n={n}")).unwrap().csv());
    }
}
