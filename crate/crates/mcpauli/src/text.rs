//! Plain-text circuit format.
//!
//! One instruction per line, lowercase mnemonics, `#` starts a comment:
//!
//! ```text
//! circuit data=2 anc=1 cbits=1
//! h a0
//! cx q0 a0
//! mcp z q1 ctrl [+q0,-a0]
//! measure a0 -> c0
//! cif c0==1 cz q0 q1
//! ```
//!
//! The header pins both register sizes and the classical bit count, so a
//! file is a complete, self-contained circuit. [`serialize`] always emits
//! the same bytes for the same circuit; [`parse`] inverts it exactly and
//! additionally tolerates blank lines, comments, and stray whitespace.

use crate::circuit::{
    Circuit, ClassicalBitId, GateKind, Instruction, PauliAxis, Polarity, QubitId, Register,
};

/// A syntax error, located by 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn qubit_token(q: QubitId) -> String {
    q.to_string()
}

fn axis_token(axis: PauliAxis) -> &'static str {
    match axis {
        PauliAxis::X => "x",
        PauliAxis::Y => "y",
        PauliAxis::Z => "z",
    }
}

fn gate_line(g: &GateKind) -> String {
    match g {
        GateKind::H(q) => format!("h {q}"),
        GateKind::T(q) => format!("t {q}"),
        GateKind::Tdg(q) => format!("tdg {q}"),
        GateKind::S(q) => format!("s {q}"),
        GateKind::Sdg(q) => format!("sdg {q}"),
        GateKind::X(q) => format!("x {q}"),
        GateKind::Y(q) => format!("y {q}"),
        GateKind::Z(q) => format!("z {q}"),
        GateKind::SqrtXdg(q) => format!("sxdg {q}"),
        GateKind::Cx { control, target } => format!("cx {control} {target}"),
        GateKind::Cz(a, b) => format!("cz {a} {b}"),
        GateKind::Mcp { axis, target, controls } => {
            let ctrl: Vec<String> = controls
                .iter()
                .map(|(q, p)| {
                    let sign = if *p == Polarity::Positive { '+' } else { '-' };
                    format!("{sign}{}", qubit_token(*q))
                })
                .collect();
            format!("mcp {} {} ctrl [{}]", axis_token(*axis), target, ctrl.join(","))
        }
    }
}

/// Render a circuit in the text format. Deterministic: equal circuits give
/// byte-equal output.
pub fn serialize(c: &Circuit) -> String {
    let mut out = format!(
        "circuit data={} anc={} cbits={}\n",
        c.data_qubits(),
        c.ancilla_qubits(),
        c.classical_bits()
    );
    for ins in c.instructions() {
        let line = match ins {
            Instruction::Gate(g) => gate_line(g),
            Instruction::Measure { qubit, into } => format!("measure {qubit} -> {into}"),
            Instruction::Conditioned { bit, value, gate } => {
                format!("cif {bit}=={} {}", u8::from(*value), gate_line(gate))
            }
        };
        out.push_str(&line);
        out.push('\n');
    }
    out
}

fn parse_qubit(token: &str, line: usize) -> Result<QubitId, ParseError> {
    let err = || ParseError {
        line,
        message: format!("expected a qubit like q0 or a1, found '{token}'"),
    };
    let (reg, rest) = token.split_at(1);
    let register = match reg {
        "q" => Register::Data,
        "a" => Register::Ancilla,
        _ => return Err(err()),
    };
    let index: usize = rest.parse().map_err(|_| err())?;
    Ok(QubitId { register, index })
}

fn parse_bit(token: &str, line: usize) -> Result<ClassicalBitId, ParseError> {
    let err = || ParseError {
        line,
        message: format!("expected a classical bit like c0, found '{token}'"),
    };
    let rest = token.strip_prefix('c').ok_or_else(err)?;
    Ok(ClassicalBitId(rest.parse().map_err(|_| err())?))
}

fn expect_len(tokens: &[&str], want: usize, line: usize, what: &str) -> Result<(), ParseError> {
    if tokens.len() != want {
        return Err(ParseError {
            line,
            message: format!(
                "{what} takes {} argument(s), found {}",
                want - 1,
                tokens.len() - 1
            ),
        });
    }
    Ok(())
}

fn parse_gate(tokens: &[&str], line: usize) -> Result<GateKind, ParseError> {
    let one = |tokens: &[&str]| -> Result<QubitId, ParseError> {
        expect_len(tokens, 2, line, tokens[0])?;
        parse_qubit(tokens[1], line)
    };
    match tokens[0] {
        "h" => Ok(GateKind::H(one(tokens)?)),
        "t" => Ok(GateKind::T(one(tokens)?)),
        "tdg" => Ok(GateKind::Tdg(one(tokens)?)),
        "s" => Ok(GateKind::S(one(tokens)?)),
        "sdg" => Ok(GateKind::Sdg(one(tokens)?)),
        "x" => Ok(GateKind::X(one(tokens)?)),
        "y" => Ok(GateKind::Y(one(tokens)?)),
        "z" => Ok(GateKind::Z(one(tokens)?)),
        "sxdg" => Ok(GateKind::SqrtXdg(one(tokens)?)),
        "cx" => {
            expect_len(tokens, 3, line, "cx")?;
            Ok(GateKind::Cx {
                control: parse_qubit(tokens[1], line)?,
                target: parse_qubit(tokens[2], line)?,
            })
        }
        "cz" => {
            expect_len(tokens, 3, line, "cz")?;
            Ok(GateKind::Cz(
                parse_qubit(tokens[1], line)?,
                parse_qubit(tokens[2], line)?,
            ))
        }
        "mcp" => {
            if tokens.len() < 5 || tokens[3] != "ctrl" {
                return Err(ParseError {
                    line,
                    message: "mcp syntax: mcp <x|y|z> <target> ctrl [+q0,-q1,…]".to_string(),
                });
            }
            let axis = match tokens[1] {
                "x" => PauliAxis::X,
                "y" => PauliAxis::Y,
                "z" => PauliAxis::Z,
                other => {
                    return Err(ParseError {
                        line,
                        message: format!("unknown Pauli axis '{other}' (expected x, y, or z)"),
                    })
                }
            };
            let target = parse_qubit(tokens[2], line)?;
            // Re-join the control list so "[+q0, -q1]" works with or
            // without spaces after the commas.
            let joined = tokens[4..].concat();
            let inner = joined
                .strip_prefix('[')
                .and_then(|s| s.strip_suffix(']'))
                .ok_or_else(|| ParseError {
                    line,
                    message: format!("control list must be bracketed, found '{joined}'"),
                })?;
            let mut controls = Vec::new();
            for part in inner.split(',').filter(|p| !p.is_empty()) {
                let (sign, q) = part.split_at(1);
                let polarity = match sign {
                    "+" => Polarity::Positive,
                    "-" => Polarity::Negative,
                    _ => {
                        return Err(ParseError {
                            line,
                            message: format!("control '{part}' must start with + or -"),
                        })
                    }
                };
                controls.push((parse_qubit(q, line)?, polarity));
            }
            Ok(GateKind::Mcp { axis, target, controls })
        }
        other => Err(ParseError {
            line,
            message: format!("unknown gate '{other}'"),
        }),
    }
}

/// Parse the text format back into a circuit. The result is everything the
/// file says — run [`crate::circuit::validate`] for semantic checks.
pub fn parse(text: &str) -> Result<Circuit, ParseError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut instructions = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();

        if header.is_none() {
            if tokens[0] != "circuit" {
                return Err(ParseError {
                    line,
                    message: format!(
                        "expected header 'circuit data=<d> anc=<a> cbits=<c>', found '{}'",
                        tokens[0]
                    ),
                });
            }
            expect_len(&tokens, 4, line, "circuit header")?;
            let field = |tok: &str, key: &str| -> Result<usize, ParseError> {
                tok.strip_prefix(key)
                    .and_then(|rest| rest.strip_prefix('='))
                    .and_then(|v| v.parse().ok())
                    .ok_or_else(|| ParseError {
                        line,
                        message: format!("expected '{key}=<count>', found '{tok}'"),
                    })
            };
            header = Some((
                field(tokens[1], "data")?,
                field(tokens[2], "anc")?,
                field(tokens[3], "cbits")?,
            ));
            continue;
        }

        let instruction = match tokens[0] {
            "measure" => {
                expect_len(&tokens, 4, line, "measure")?;
                if tokens[2] != "->" {
                    return Err(ParseError {
                        line,
                        message: format!("measure syntax: measure <qubit> -> <bit>, found '{}'", tokens[2]),
                    });
                }
                Instruction::Measure {
                    qubit: parse_qubit(tokens[1], line)?,
                    into: parse_bit(tokens[3], line)?,
                }
            }
            "cif" => {
                if tokens.len() < 3 {
                    return Err(ParseError {
                        line,
                        message: "cif syntax: cif <bit>==<0|1> <gate…>".to_string(),
                    });
                }
                let (bit_tok, value_tok) =
                    tokens[1].split_once("==").ok_or_else(|| ParseError {
                        line,
                        message: format!("condition '{}' must look like c0==1", tokens[1]),
                    })?;
                let value = match value_tok {
                    "0" => false,
                    "1" => true,
                    other => {
                        return Err(ParseError {
                            line,
                            message: format!("condition value must be 0 or 1, found '{other}'"),
                        })
                    }
                };
                Instruction::Conditioned {
                    bit: parse_bit(bit_tok, line)?,
                    value,
                    gate: parse_gate(&tokens[2..], line)?,
                }
            }
            _ => Instruction::Gate(parse_gate(&tokens, line)?),
        };
        instructions.push(instruction);
    }

    let (data, anc, cbits) = header.ok_or(ParseError {
        line: text.lines().count().max(1),
        message: "missing 'circuit data=<d> anc=<a> cbits=<c>' header".to_string(),
    })?;
    Ok(Circuit::new(data, anc, cbits, instructions))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::CircuitBuilder;

    fn q(i: usize) -> QubitId {
        QubitId::data(i)
    }

    fn kitchen_sink() -> Circuit {
        let mut b = CircuitBuilder::new(3);
        let a0 = b.alloc_ancilla();
        b.h(q(0))
            .t(q(1))
            .tdg(q(2))
            .s(a0)
            .sdg(q(0))
            .x(q(1))
            .y(q(2))
            .z(a0)
            .sxdg(a0)
            .cx(q(0), a0)
            .cz(q(1), q(2))
            .mcp(
                PauliAxis::Y,
                q(2),
                vec![(q(0), Polarity::Positive), (a0, Polarity::Negative)],
            );
        let c0 = b.measure(a0);
        b.cond(c0, true, GateKind::Cz(q(0), q(1)));
        b.cond(c0, false, GateKind::X(q(2)));
        b.finish()
    }

    #[test]
    fn serialize_is_the_documented_shape() {
        let mut b = CircuitBuilder::new(2);
        let a0 = b.alloc_ancilla();
        b.h(a0).cx(q(0), a0).mcp(
            PauliAxis::Z,
            q(1),
            vec![(q(0), Polarity::Positive), (a0, Polarity::Negative)],
        );
        let c0 = b.measure(a0);
        b.cond(c0, true, GateKind::Cz(q(0), q(1)));
        let text = serialize(&b.finish());
        assert_eq!(
            text,
            "circuit data=2 anc=1 cbits=1\n\
             h a0\n\
             cx q0 a0\n\
             mcp z q1 ctrl [+q0,-a0]\n\
             measure a0 -> c0\n\
             cif c0==1 cz q0 q1\n"
        );
    }

    #[test]
    fn parse_inverts_serialize_exactly() {
        let c = kitchen_sink();
        let parsed = parse(&serialize(&c)).expect("roundtrip parse");
        assert_eq!(parsed, c);
    }

    #[test]
    fn parse_tolerates_comments_blank_lines_and_spacing() {
        let text = "\n# a comment\ncircuit data=2 anc=0 cbits=0\n\n  h q0   # trailing\n mcp z q1 ctrl [+q0, -q0]\n";
        let c = parse(text).expect("tolerant parse");
        assert_eq!(c.instructions().len(), 2);
    }

    #[test]
    fn parse_errors_carry_line_numbers_and_tokens() {
        let missing_header = parse("h q0\n").unwrap_err();
        assert_eq!(missing_header.line, 1);
        assert!(missing_header.message.contains("header"), "{missing_header}");

        let bad_gate = parse("circuit data=1 anc=0 cbits=0\nfoo q0\n").unwrap_err();
        assert_eq!(bad_gate.line, 2);
        assert!(bad_gate.message.contains("'foo'"), "{bad_gate}");

        let bad_qubit = parse("circuit data=1 anc=0 cbits=0\nh b7\n").unwrap_err();
        assert_eq!(bad_qubit.line, 2);
        assert!(bad_qubit.message.contains("'b7'"), "{bad_qubit}");

        let bad_arrow = parse("circuit data=0 anc=1 cbits=1\nmeasure a0 to c0\n").unwrap_err();
        assert!(bad_arrow.message.contains("->"), "{bad_arrow}");

        let bad_cond = parse("circuit data=1 anc=0 cbits=1\ncif c0=1 z q0\n").unwrap_err();
        assert!(bad_cond.message.contains("c0==1"), "{bad_cond}");

        let bad_mcp = parse("circuit data=2 anc=0 cbits=0\nmcp w q1 ctrl [+q0]\n").unwrap_err();
        assert!(bad_mcp.message.contains("axis"), "{bad_mcp}");
    }

    #[test]
    fn header_must_be_complete() {
        let err = parse("circuit data=2 anc=1\n").unwrap_err();
        assert!(err.message.contains("argument"), "{err}");
        let err = parse("circuit data=2 anc=x cbits=0\n").unwrap_err();
        assert!(err.message.contains("anc="), "{err}");
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_qubit(data: usize, anc: usize) -> impl Strategy<Value = QubitId> {
            prop_oneof![
                (0..data).prop_map(QubitId::data),
                (0..anc.max(1)).prop_map(move |i| if anc == 0 {
                    QubitId::data(0)
                } else {
                    QubitId::ancilla(i)
                }),
            ]
        }

        fn arb_gate(data: usize, anc: usize) -> impl Strategy<Value = GateKind> {
            let q = move || arb_qubit(data, anc);
            prop_oneof![
                q().prop_map(GateKind::H),
                q().prop_map(GateKind::T),
                q().prop_map(GateKind::Tdg),
                q().prop_map(GateKind::Sdg),
                q().prop_map(GateKind::SqrtXdg),
                (q(), q()).prop_map(|(control, target)| GateKind::Cx { control, target }),
                (q(), q()).prop_map(|(a, b)| GateKind::Cz(a, b)),
                (q(), q(), any::<bool>()).prop_map(|(c, t, pos)| GateKind::Mcp {
                    axis: PauliAxis::Z,
                    target: t,
                    controls: vec![(
                        c,
                        if pos { Polarity::Positive } else { Polarity::Negative }
                    )],
                }),
            ]
        }

        proptest! {
            // The format is a bijection on circuits: parsing what we print
            // recovers the exact structure, whatever the gate mix.
            #[test]
            fn roundtrip_recovers_every_circuit(
                data in 1usize..4,
                anc in 0usize..3,
                gates in prop::collection::vec(arb_gate(3, 2), 0..24),
                measures in 0usize..3,
            ) {
                let mut b = CircuitBuilder::with_ancillas(data.max(3), anc.max(2));
                for g in gates {
                    b.gate(g);
                }
                let mut bits = Vec::new();
                for i in 0..measures.min(anc.max(2)) {
                    bits.push(b.measure(QubitId::ancilla(i)));
                }
                for bit in bits {
                    b.cond(bit, true, GateKind::Z(QubitId::data(0)));
                }
                let c = b.finish();
                prop_assert_eq!(parse(&serialize(&c)).unwrap(), c);
            }
        }
    }
}
