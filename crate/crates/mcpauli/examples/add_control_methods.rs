//! The single-control extension gadgets, one by one.
//!
//! `add_control` turns a circuit that is trivial on `designated = |0⟩` into
//! the same circuit with one more control: an AND of the old and new control
//! is computed onto a fresh ancilla, the inner circuit replays against that
//! ancilla, and the AND is uncomputed — either by a mirrored unitary or by a
//! measurement with a classically conditioned CZ correction. The choice of
//! uncomputation is the whole trade-off: T-count vs CNOTs vs feedback.

use mcpauli::circuit::QubitId;
use mcpauli::extend::{add_control, AddMethod};
use mcpauli::metrics::resource_report;
use mcpauli::sim::{assert_equiv, mcz_matrix};
use mcpauli::{catalog, text};

fn main() {
    // Start from a bare CZ: one control, the cheapest extensible base.
    let cz = catalog::build_named("cz").unwrap();
    let designated = QubitId::data(0);
    let fresh = QubitId::data(cz.data_qubits());
    let ccz_matrix = mcz_matrix(2).unwrap();

    println!("CZ plus one control, per method:\n");
    println!("method        t cnot_min cnot_max t_depth ancillas feedback  branch phases");
    for method in AddMethod::ALL {
        let ccz = add_control(method, &cz, designated, fresh).unwrap();
        let r = resource_report(&ccz, method.key()).unwrap();
        let verdict = assert_equiv(&ccz, &ccz_matrix, 1e-9).unwrap();
        assert!(verdict.equivalent, "{method}: {verdict:?}");
        let phases: Vec<String> = verdict
            .branch_phases
            .values()
            .map(|p| format!("{:+.2}{:+.2}i", p.re, p.im))
            .collect();
        println!(
            "{:13} {} {:8} {:8} {:7} {:8} {:8}  {}",
            method.key(),
            r.t_count,
            r.cnot_min,
            r.cnot_max,
            r.t_depth,
            r.ancillas,
            r.feedback,
            phases.join(" ")
        );
    }

    // The measured methods leave a conditioned correction at the end; here
    // is what that actually looks like in circuit text.
    let gadget = add_control(AddMethod::GidneyB, &cz, designated, fresh).unwrap();
    println!("\ngidney-b composite, serialized:\n");
    print!("{}", text::serialize(&gadget));

    // The designated wire must be classically well-behaved inside the inner
    // circuit; a basis-leaving gate on it is rejected up front.
    let mut bad = mcpauli::circuit::CircuitBuilder::new(2);
    bad.h(designated).cz(designated, QubitId::data(1));
    let err = add_control(AddMethod::PalerA, &bad.finish(), designated, QubitId::data(2))
        .expect_err("H on the designated wire cannot be rerouted");
    println!("\nrejected inner circuit: {err}");
}
