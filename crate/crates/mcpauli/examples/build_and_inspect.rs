//! Build catalog circuits by name and look inside them.
//!
//! Every decomposition in the catalog carries a summary, a literature
//! reference, a declared target, and frozen resource numbers; the circuit
//! itself serializes to a line-oriented text format. This example browses a
//! few entries and prints one in full.

use mcpauli::catalog::{self, CATALOG};
use mcpauli::circuit::{validate, Instruction};
use mcpauli::text;

fn main() {
    println!("catalog: {} entries\n", CATALOG.len());
    for name in ["toffoli-standard", "cccz-gidney", "logical-and"] {
        let e = catalog::entry(name).expect("shipped entry");
        println!("{name}");
        println!("  {}", e.summary);
        println!("  source: {}", e.reference);
        let c = (e.build)();
        let report = validate(&c);
        println!(
            "  {} data + {} ancilla wires, {} instructions, validation level {:?}",
            c.data_qubits(),
            c.ancilla_qubits(),
            c.instructions().len(),
            report.level.expect("catalog circuits validate")
        );
        let (gates, measures, conditioned) =
            c.instructions().iter().fold((0, 0, 0), |(g, m, f), ins| match ins {
                Instruction::Gate(_) => (g + 1, m, f),
                Instruction::Measure { .. } => (g, m + 1, f),
                Instruction::Conditioned { .. } => (g, m, f + 1),
            });
        println!("  {gates} plain gates, {measures} measurements, {conditioned} conditioned\n");
    }

    // The text form is the exchange format: one instruction per line, wire
    // names q0.. for data and a0.. for ancillas.
    let ccz = catalog::build_named("ccz-gidney-fig2b").unwrap();
    println!("ccz-gidney-fig2b, serialized:\n");
    print!("{}", text::serialize(&ccz));
}
