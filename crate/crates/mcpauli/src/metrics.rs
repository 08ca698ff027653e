//! Resource metrics for fault-tolerant cost accounting.
//!
//! The costs that matter for surface-code-style execution, in the order they
//! usually dominate: T-count (magic states consumed), CNOT count (which is
//! outcome-dependent once measurement feedback appears, hence a range),
//! T-depth (magic-state latency under ASAP scheduling), ancilla width, and
//! how many measurements actually feed back into later gates.
//!
//! Conditioned T gates are counted as if they always fire — a magic state
//! must be provisioned whether or not the correction triggers — and the
//! census says so via [`TCount::conditioned`].

use crate::circuit::{Circuit, GateKind, Instruction};

/// T/T† census of a circuit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TCount {
    /// Total T and T† gates, conditioned ones included unconditionally.
    pub count: usize,
    /// How many of `count` sit under a classical condition. Non-zero means
    /// the worst-case magic-state budget and the typical run differ.
    pub conditioned: usize,
}

/// Count T and T† gates. Conditioned occurrences are counted as if they
/// always fire and reported separately.
pub fn t_count(c: &Circuit) -> TCount {
    let mut count = 0;
    let mut conditioned = 0;
    for ins in c.instructions() {
        match ins {
            Instruction::Gate(g) if g.is_t() => count += 1,
            Instruction::Conditioned { gate, .. } if gate.is_t() => {
                count += 1;
                conditioned += 1;
            }
            _ => {}
        }
    }
    TCount { count, conditioned }
}

/// Errors from metrics that enumerate measurement outcomes.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MetricsError {
    #[error("circuit has {count} measurements; outcome enumeration is capped at {max}")]
    TooManyMeasurements { count: usize, max: usize },
}

/// Cap on outcome enumeration in [`cnot_count_range`].
pub const MAX_RANGE_MEASUREMENTS: usize = 20;

/// Minimum and maximum number of two-qubit gates (CX and CZ both count)
/// over every assignment of measurement outcomes.
///
/// Conditioned two-qubit corrections fire or don't depending on the record,
/// so circuits with feedback have a genuine range; the bounds are exact,
/// found by structural enumeration of all 2^m records (m ≤ 20).
pub fn cnot_count_range(c: &Circuit) -> Result<(usize, usize), MetricsError> {
    let is_two_qubit = |g: &GateKind| matches!(g, GateKind::Cx { .. } | GateKind::Cz(..));

    // Map each classical bit to the measurement (in order) that writes it.
    let mut bit_source: Vec<Option<usize>> = vec![None; c.classical_bits()];
    let mut measures = 0usize;
    let mut base = 0usize;
    for ins in c.instructions() {
        match ins {
            Instruction::Gate(g) => {
                if is_two_qubit(g) {
                    base += 1;
                }
            }
            Instruction::Measure { into, .. } => {
                bit_source[into.0] = Some(measures);
                measures += 1;
            }
            Instruction::Conditioned { .. } => {}
        }
    }
    if measures > MAX_RANGE_MEASUREMENTS {
        return Err(MetricsError::TooManyMeasurements {
            count: measures,
            max: MAX_RANGE_MEASUREMENTS,
        });
    }

    let mut min = usize::MAX;
    let mut max = 0usize;
    for record in 0u64..(1u64 << measures) {
        let mut total = base;
        let mut seen = 0usize; // measurements encountered so far in this walk
        for ins in c.instructions() {
            match ins {
                Instruction::Measure { .. } => seen += 1,
                Instruction::Conditioned { bit, value, gate } if is_two_qubit(gate) => {
                    let source = bit_source[bit.0];
                    // A condition on a not-yet-written bit never fires;
                    // validation reports such circuits separately.
                    let fires = match source {
                        Some(k) if k < seen => ((record >> k) & 1 == 1) == *value,
                        _ => false,
                    };
                    if fires {
                        total += 1;
                    }
                }
                _ => {}
            }
        }
        min = min.min(total);
        max = max.max(total);
    }
    Ok((min, max))
}

/// T-depth under ASAP scheduling.
///
/// Each wire (and each classical bit) carries a depth counter. A gate starts
/// at the maximum counter among everything it touches — a conditioned gate
/// also waits for its bit, and a measurement hands its qubit's counter to
/// the bit it writes — and a T/T† advances that depth by one. Conditioned
/// T gates advance depth unconditionally (the magic-state interaction is
/// scheduled whether or not it fires). The result is the longest T-chain in
/// the dependency DAG.
pub fn t_depth(c: &Circuit) -> usize {
    let mut qubit_depth = vec![0usize; c.total_qubits()];
    let mut bit_depth = vec![0usize; c.classical_bits()];
    let mut overall = 0usize;
    for ins in c.instructions() {
        match ins {
            Instruction::Gate(g) => {
                let wires: Vec<usize> = g.qubits().iter().map(|&q| c.wire(q)).collect();
                let front = wires.iter().map(|&w| qubit_depth[w]).max().unwrap_or(0);
                let after = front + usize::from(g.is_t());
                for &w in &wires {
                    qubit_depth[w] = after;
                }
                overall = overall.max(after);
            }
            Instruction::Measure { qubit, into } => {
                let w = c.wire(*qubit);
                bit_depth[into.0] = qubit_depth[w];
            }
            Instruction::Conditioned { bit, gate, .. } => {
                let wires: Vec<usize> = gate.qubits().iter().map(|&q| c.wire(q)).collect();
                let front = wires
                    .iter()
                    .map(|&w| qubit_depth[w])
                    .chain(std::iter::once(bit_depth[bit.0]))
                    .max()
                    .unwrap_or(0);
                let after = front + usize::from(gate.is_t());
                for &w in &wires {
                    qubit_depth[w] = after;
                }
                overall = overall.max(after);
            }
        }
    }
    overall
}

/// Number of measurements whose record conditions at least one later gate —
/// the circuit's live feedback operations.
pub fn feedback_count(c: &Circuit) -> usize {
    let mut used = vec![false; c.classical_bits()];
    for ins in c.instructions() {
        if let Instruction::Conditioned { bit, .. } = ins {
            used[bit.0] = true;
        }
    }
    c.instructions()
        .iter()
        .filter(|ins| matches!(ins, Instruction::Measure { into, .. } if used[into.0]))
        .count()
}

/// Every metric of one circuit, with the name it should be reported under.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResourceReport {
    pub name: String,
    pub t_count: usize,
    pub conditioned_t: usize,
    pub cnot_min: usize,
    pub cnot_max: usize,
    pub t_depth: usize,
    pub ancillas: usize,
    pub feedback: usize,
}

impl ResourceReport {
    /// The report as its space-separated row:
    /// `name T CNOTmin CNOTmax Tdepth anc fb`.
    pub fn row(&self) -> String {
        format!(
            "{} {} {} {} {} {} {}",
            self.name,
            self.t_count,
            self.cnot_min,
            self.cnot_max,
            self.t_depth,
            self.ancillas,
            self.feedback
        )
    }

    /// The same columns as [`Self::row`], comma-separated.
    pub fn csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.name,
            self.t_count,
            self.cnot_min,
            self.cnot_max,
            self.t_depth,
            self.ancillas,
            self.feedback
        )
    }
}

impl std::fmt::Display for ResourceReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.row())
    }
}

/// Gather every metric of `c` into one report named `name`.
pub fn resource_report(c: &Circuit, name: &str) -> Result<ResourceReport, MetricsError> {
    let t = t_count(c);
    let (cnot_min, cnot_max) = cnot_count_range(c)?;
    Ok(ResourceReport {
        name: name.to_string(),
        t_count: t.count,
        conditioned_t: t.conditioned,
        cnot_min,
        cnot_max,
        t_depth: t_depth(c),
        ancillas: c.ancilla_qubits(),
        feedback: feedback_count(c),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::{CircuitBuilder, GateKind, QubitId};

    fn q(i: usize) -> QubitId {
        QubitId::data(i)
    }

    #[test]
    fn t_census_flags_conditioned_gates() {
        let mut b = CircuitBuilder::new(2);
        let a0 = b.alloc_ancilla();
        b.t(q(0)).tdg(q(1));
        let c0 = b.measure(a0);
        b.cond(c0, true, GateKind::T(q(0)));
        let census = t_count(&b.finish());
        assert_eq!(census, TCount { count: 3, conditioned: 1 });
    }

    #[test]
    fn cnot_range_is_tight_without_feedback() {
        let mut b = CircuitBuilder::new(3);
        b.cx(q(0), q(1)).cz(q(1), q(2)).cx(q(0), q(2));
        assert_eq!(cnot_count_range(&b.finish()).unwrap(), (3, 3));
    }

    #[test]
    fn cnot_range_spreads_over_outcomes() {
        // One record fires a single CZ, the other fires two — so (1+1, 1+2)
        // on top of one unconditional CX.
        let mut b = CircuitBuilder::new(2);
        let a0 = b.alloc_ancilla();
        b.cx(q(0), q(1));
        let c0 = b.measure(a0);
        b.cond(c0, true, GateKind::Cz(q(0), q(1)));
        b.cond(c0, false, GateKind::Cz(q(0), q(1)));
        b.cond(c0, false, GateKind::Cz(q(0), q(1)));
        assert_eq!(cnot_count_range(&b.finish()).unwrap(), (2, 3));
    }

    #[test]
    fn complementary_corrections_always_fire_exactly_once() {
        // A correction on ==0 and another on ==1 of the same bit: every
        // record runs exactly one of them, so the range is tight.
        let mut b = CircuitBuilder::new(2);
        let a0 = b.alloc_ancilla();
        let c0 = b.measure(a0);
        b.cond(c0, false, GateKind::Cz(q(0), q(1)));
        b.cond(c0, true, GateKind::Cz(q(0), q(1)));
        assert_eq!(cnot_count_range(&b.finish()).unwrap(), (1, 1));
    }

    #[test]
    fn t_depth_serializes_on_a_wire_and_parallelizes_across_wires() {
        let mut serial = CircuitBuilder::new(1);
        serial.t(q(0)).t(q(0)).t(q(0));
        assert_eq!(t_depth(&serial.finish()), 3);

        let mut parallel = CircuitBuilder::new(3);
        parallel.t(q(0)).t(q(1)).t(q(2));
        assert_eq!(t_depth(&parallel.finish()), 1);
    }

    #[test]
    fn t_depth_flows_through_entangling_gates_and_measurement() {
        // T(q0) then CX(q0,q1) then T(q1): the second T waits for the first.
        let mut b = CircuitBuilder::new(2);
        b.t(q(0)).cx(q(0), q(1)).t(q(1));
        assert_eq!(t_depth(&b.finish()), 2);

        // A conditioned T waits for the measured wire's depth via the bit.
        let mut b = CircuitBuilder::new(1);
        let a0 = b.alloc_ancilla();
        b.t(a0);
        let c0 = b.measure(a0);
        b.cond(c0, true, GateKind::T(q(0)));
        assert_eq!(t_depth(&b.finish()), 2);
    }

    #[test]
    fn non_t_gates_do_not_advance_depth() {
        let mut b = CircuitBuilder::new(2);
        b.h(q(0)).cx(q(0), q(1)).s(q(1)).cz(q(0), q(1));
        assert_eq!(t_depth(&b.finish()), 0);
    }

    #[test]
    fn feedback_counts_only_measurements_that_condition_something() {
        let mut b = CircuitBuilder::new(2);
        let a0 = b.alloc_ancilla();
        let a1 = b.alloc_ancilla();
        let c0 = b.measure(a0);
        let _unused = b.measure(a1);
        b.cond(c0, true, GateKind::Z(q(0)));
        assert_eq!(feedback_count(&b.finish()), 1);
    }

    #[test]
    fn report_row_is_space_separated_in_contract_order() {
        let mut b = CircuitBuilder::new(2);
        let a0 = b.alloc_ancilla();
        b.t(q(0)).cx(q(0), q(1));
        let c0 = b.measure(a0);
        b.cond(c0, true, GateKind::Cz(q(0), q(1)));
        let report = resource_report(&b.finish(), "sample").unwrap();
        assert_eq!(report.row(), "sample 1 1 2 1 1 1");
    }
}
