//! The plain-text circuit format: serialize, parse back, and see how the
//! parser reports malformed input.
//!
//! The format is line-oriented — a `circuit` header followed by one
//! instruction per line — so circuits can be diffed, piped, and kept as
//! golden files. `parse(serialize(c))` reproduces `c` exactly.

use mcpauli::catalog;
use mcpauli::text;

fn main() {
    let original = catalog::build_named("toffoli-standard").unwrap();
    let first = text::serialize(&original);
    println!("toffoli-standard serializes to:\n\n{first}");

    // Round trip: parse it back and serialize again. Byte equality is the
    // honest check — it covers wire indices, polarities, and ordering.
    let reparsed = text::parse(&first).unwrap();
    let second = text::serialize(&reparsed);
    assert_eq!(first, second, "round trip must be exact");
    println!("parse ∘ serialize is the identity on this text ({} bytes)\n", first.len());

    // A measured circuit exercises the measure/conditioned lines too.
    let ccz = catalog::build_named("ccz-gidney-fig2b").unwrap();
    let t = text::serialize(&ccz);
    assert_eq!(text::serialize(&text::parse(&t).unwrap()), t);
    println!("ccz-gidney-fig2b round trips as well ({} lines)\n", t.lines().count());

    // Malformed input is rejected with the line number and a reason.
    let broken = [
        "cx q0 q1",                                     // no header
        "circuit data=2 anc=0 cbits=0\ncx q0",          // missing an operand
        "circuit data=2 anc=0 cbits=0\nh b7",           // no such register prefix
        "circuit data=2 anc=0 cbits=0\nfrobnicate q0",  // unknown instruction
        "circuit data=2 anc=0 cbits=0\nmcp w q1 ctrl [+q0]", // bad Pauli axis
    ];
    println!("parser diagnostics:");
    for text in broken {
        let err = text::parse(text).unwrap_err();
        let shown = text.lines().nth(err.line - 1).unwrap_or("");
        println!("  line {} `{}`: {}", err.line, shown, err.message);
    }
}
