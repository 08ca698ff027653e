//! The named-circuit catalog.
//!
//! Every decomposition this crate ships is registered here as a
//! parameterless builder plus the target it claims to implement and a frozen
//! resource profile. The builders transcribe each construction gate for
//! gate; nothing is re-synthesized or re-ordered, so the resource numbers a
//! [`crate::metrics::ResourceReport`] computes are the citable ones.
//!
//! Naming: entries carry the catalog key used by the CLI (`mcpauli list`),
//! a one-line summary, and a short literature pointer for constructions
//! that come from prior work.

use num_complex::Complex64;

use crate::circuit::{Circuit, CircuitBuilder, PauliAxis, Polarity, QubitId};
use crate::metrics::{resource_report, ResourceReport};
use crate::sim::{
    assert_equiv, controlled_matrix, mcp_matrix, simulate, CMatrix, EquivalenceVerdict, SimError,
};

/// What a catalog circuit implements, in matrix form where one exists.
#[derive(Debug, Clone)]
pub enum TargetSpec {
    /// Multi-controlled Pauli on the data register: the listed polarities
    /// attach to data wires 0.. in order and the last data wire is the
    /// Pauli target.
    Mcp {
        polarities: &'static [Polarity],
        axis: PauliAxis,
    },
    /// `controls`-fold controlled version of an explicit unitary block on
    /// the trailing data wires (`controls = 0` means the matrix itself).
    ControlledUnitary {
        matrix: fn() -> CMatrix,
        controls: usize,
    },
    /// The circuit acts as this unitary on data ⊗ ancilla wires, but only
    /// on inputs whose ancillas are |0⟩ (the ancillas are *not* restored —
    /// they carry the result, as in the temporary logical-AND).
    AncillaRectangular { matrix: fn() -> CMatrix },
    /// Composing the named partner entry with this circuit (partner first,
    /// identity wire map) yields the identity channel on the data register.
    InverseOf { partner: &'static str },
}

impl TargetSpec {
    /// The square target matrix, when the spec has one.
    ///
    /// `Mcp` and `ControlledUnitary` targets live on the data register;
    /// `AncillaRectangular` targets span data ⊗ ancilla wires.
    /// `InverseOf` has no matrix of its own.
    pub fn matrix(&self) -> Option<CMatrix> {
        match self {
            TargetSpec::Mcp { polarities, axis } => {
                Some(mcp_matrix(*axis, polarities).expect("catalog targets stay within simulator size"))
            }
            TargetSpec::ControlledUnitary { matrix, controls } => {
                Some(controlled_matrix(&matrix(), *controls))
            }
            TargetSpec::AncillaRectangular { matrix } => Some(matrix()),
            TargetSpec::InverseOf { .. } => None,
        }
    }
}

/// Resource profile an entry is pinned to. Golden tests compare the live
/// [`ResourceReport`] against these numbers field by field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExpectedResources {
    pub t_count: usize,
    pub cnot_min: usize,
    pub cnot_max: usize,
    pub t_depth: usize,
    pub ancillas: usize,
    pub feedback: usize,
}

/// One registered decomposition.
pub struct CatalogEntry {
    /// Stable key; what `build_named` and the CLI accept.
    pub name: &'static str,
    /// One-line description of what the circuit does.
    pub summary: &'static str,
    /// Where the construction comes from, where that is prior literature.
    pub reference: &'static str,
    /// Parameterless constructor.
    pub build: fn() -> Circuit,
    /// What the circuit implements.
    pub target: TargetSpec,
    /// Frozen resource numbers.
    pub expected: ExpectedResources,
}

impl CatalogEntry {
    /// Live resource report of the built circuit, named after the entry.
    pub fn report(&self) -> ResourceReport {
        let circuit = (self.build)();
        resource_report(&circuit, self.name)
            .expect("catalog circuits stay within the branch-enumeration limit")
    }
}

/// A catalog lookup that found nothing.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown catalog entry `{name}`")]
pub struct UnknownEntry {
    pub name: String,
}

/// Look up a catalog entry by key.
pub fn entry(name: &str) -> Option<&'static CatalogEntry> {
    CATALOG.iter().find(|e| e.name == name)
}

/// Build the named circuit, or report which key was unknown.
pub fn build_named(name: &str) -> Result<Circuit, UnknownEntry> {
    entry(name)
        .map(|e| (e.build)())
        .ok_or_else(|| UnknownEntry { name: name.to_string() })
}

const POS1: &[Polarity] = &[Polarity::Positive];
const POS2: &[Polarity] = &[Polarity::Positive; 2];
const POS3: &[Polarity] = &[Polarity::Positive; 3];
const POS5: &[Polarity] = &[Polarity::Positive; 5];

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn minus_i_x() -> CMatrix {
    CMatrix::from_row_slice(2, 2, &[c(0.0, 0.0), c(0.0, -1.0), c(0.0, -1.0), c(0.0, 0.0)])
}

fn plus_i_x() -> CMatrix {
    CMatrix::from_row_slice(2, 2, &[c(0.0, 0.0), c(0.0, 1.0), c(0.0, 1.0), c(0.0, 0.0)])
}

/// 1-qubit gate matrix embedded on one wire of an n-wire register.
fn embed_single(m: &CMatrix, wire: usize, wires: usize) -> CMatrix {
    let left = CMatrix::identity(1 << wire, 1 << wire);
    let right = CMatrix::identity(1 << (wires - wire - 1), 1 << (wires - wire - 1));
    left.kronecker(m).kronecker(&right)
}

fn s_matrix() -> CMatrix {
    CMatrix::from_row_slice(2, 2, &[c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 1.0)])
}

/// Unitary of the relative-phase Toffoli: a Toffoli with an extra
/// controlled phase, namely S(q2)·CCX·S†(q2)·CZ(q0 closed, q1 open) in
/// matrix order (rightmost applied first).
fn relative_phase_toffoli() -> CMatrix {
    let ccx = mcp_matrix(PauliAxis::X, POS2).expect("3 wires");
    let open_ccz = mcp_matrix(PauliAxis::Z, &[Polarity::Positive, Polarity::Negative])
        .expect("3 wires");
    let s2 = embed_single(&s_matrix(), 2, 3);
    let sdg2 = s2.adjoint();
    s2 * ccx * sdg2 * open_ccz
}

/// CCX viewed on data ⊗ ancilla wires: the logical-AND writes q0∧q1 onto
/// the ancilla, which is exactly CCX restricted to ancilla-|0⟩ inputs.
fn and_rectangular() -> CMatrix {
    mcp_matrix(PauliAxis::X, POS2).expect("3 wires")
}

// ---------------------------------------------------------------------------
// Shared blocks
// ---------------------------------------------------------------------------

/// Doubly-controlled −iX on (c1, c2 → t) with helper `h`: T-count 4 in a
/// single T-stage, 8 CNOTs, helper returned to |0⟩.
pub(crate) fn emit_cc_minus_ix(
    b: &mut CircuitBuilder,
    c1: QubitId,
    c2: QubitId,
    t: QubitId,
    h: QubitId,
) {
    b.h(t)
        .cx(t, c2)
        .cx(c1, h)
        .cx(t, c1)
        .cx(c2, h)
        .tdg(c1)
        .tdg(c2)
        .t(t)
        .t(h)
        .cx(c2, h)
        .cx(t, c1)
        .cx(c1, h)
        .cx(t, c2)
        .h(t);
}

/// Doubly-controlled +iX: the inverse block (T and T† swapped).
pub(crate) fn emit_cc_plus_ix(
    b: &mut CircuitBuilder,
    c1: QubitId,
    c2: QubitId,
    t: QubitId,
    h: QubitId,
) {
    b.h(t)
        .cx(t, c2)
        .cx(c1, h)
        .cx(t, c1)
        .cx(c2, h)
        .t(c1)
        .t(c2)
        .tdg(t)
        .tdg(h)
        .cx(c2, h)
        .cx(t, c1)
        .cx(c1, h)
        .cx(t, c2)
        .h(t);
}

/// T-depth-1 CCZ on (q0, q1, q2) using four helper wires that all return to
/// |0⟩. The helpers accumulate the parities q0⊕q1⊕q2, q0⊕q1, q1⊕q2 and
/// q0⊕q2; a single T-stage then realizes the CCZ phase polynomial.
pub(crate) fn emit_ccz_tdepth1(
    b: &mut CircuitBuilder,
    q0: QubitId,
    q1: QubitId,
    q2: QubitId,
    anc: [QubitId; 4],
) {
    let [a0, a1, a2, a3] = anc;
    b.cx(q1, a2)
        .cx(q0, a0)
        .cx(q1, a1)
        .cx(q2, a2)
        .cx(a0, a3)
        .cx(q0, a1)
        .cx(q2, a3)
        .cx(a2, a0)
        .t(q0)
        .t(q1)
        .t(q2)
        .t(a0)
        .tdg(a1)
        .tdg(a2)
        .tdg(a3)
        .cx(a2, a0)
        .cx(q2, a3)
        .cx(q0, a1)
        .cx(a0, a3)
        .cx(q2, a2)
        .cx(q1, a1)
        .cx(q0, a0)
        .cx(q1, a2);
}

/// The temporary logical-AND compute block: writes x∧y onto `out` (which
/// must be |0⟩) using T-count 4 and T-depth 2.
pub(crate) fn emit_and_compute(b: &mut CircuitBuilder, x: QubitId, y: QubitId, out: QubitId) {
    b.h(out)
        .t(out)
        .cx(y, out)
        .cx(x, out)
        .cx(out, x)
        .cx(out, y)
        .tdg(x)
        .tdg(y)
        .t(out)
        .cx(out, x)
        .cx(out, y)
        .h(out)
        .s(out);
}

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

fn build_cz() -> Circuit {
    let mut b = CircuitBuilder::new(2);
    b.cz(QubitId::data(0), QubitId::data(1));
    b.finish()
}

fn build_toffoli_standard() -> Circuit {
    let (q0, q1, q2) = (QubitId::data(0), QubitId::data(1), QubitId::data(2));
    let mut b = CircuitBuilder::new(3);
    b.h(q2)
        .cx(q1, q2)
        .tdg(q2)
        .cx(q0, q2)
        .t(q2)
        .cx(q1, q2)
        .tdg(q2)
        .cx(q0, q2)
        .t(q1)
        .t(q2)
        .cx(q0, q1)
        .h(q2)
        .t(q0)
        .tdg(q1)
        .cx(q0, q1);
    b.finish()
}

fn build_toffoli_tdepth4() -> Circuit {
    let (q0, q1, q2) = (QubitId::data(0), QubitId::data(1), QubitId::data(2));
    let mut b = CircuitBuilder::new(3);
    b.h(q2)
        .cx(q1, q2)
        .tdg(q2)
        .cx(q0, q2)
        .t(q2)
        .cx(q1, q2)
        .t(q1)
        .tdg(q2)
        .cx(q0, q2)
        .cx(q0, q1)
        .t(q0)
        .tdg(q1)
        .t(q2)
        .cx(q0, q1)
        .h(q2);
    b.finish()
}

fn build_toffoli_amy() -> Circuit {
    let (q0, q1, q2) = (QubitId::data(0), QubitId::data(1), QubitId::data(2));
    let mut b = CircuitBuilder::new(3);
    b.h(q2)
        .t(q0)
        .t(q1)
        .t(q2)
        .cx(q1, q0)
        .cx(q2, q1)
        .cx(q0, q2)
        .tdg(q1)
        .cx(q0, q1)
        .tdg(q0)
        .tdg(q1)
        .t(q2)
        .cx(q2, q1)
        .cx(q0, q2)
        .cx(q1, q0)
        .h(q2);
    b.finish()
}

fn build_ccz_selinger() -> Circuit {
    let (q0, q1, q2) = (QubitId::data(0), QubitId::data(1), QubitId::data(2));
    let mut b = CircuitBuilder::with_ancillas(3, 4);
    emit_ccz_tdepth1(
        &mut b,
        q0,
        q1,
        q2,
        [
            QubitId::ancilla(0),
            QubitId::ancilla(1),
            QubitId::ancilla(2),
            QubitId::ancilla(3),
        ],
    );
    b.finish()
}

fn build_cc_minus_ix() -> Circuit {
    let (q0, q1, q2) = (QubitId::data(0), QubitId::data(1), QubitId::data(2));
    let mut b = CircuitBuilder::with_ancillas(3, 1);
    emit_cc_minus_ix(&mut b, q0, q1, q2, QubitId::ancilla(0));
    b.finish()
}

fn build_cc_plus_ix() -> Circuit {
    let (q0, q1, q2) = (QubitId::data(0), QubitId::data(1), QubitId::data(2));
    let mut b = CircuitBuilder::with_ancillas(3, 1);
    emit_cc_plus_ix(&mut b, q0, q1, q2, QubitId::ancilla(0));
    b.finish()
}

fn build_logical_and() -> Circuit {
    let (q0, q1) = (QubitId::data(0), QubitId::data(1));
    let mut b = CircuitBuilder::with_ancillas(2, 1);
    emit_and_compute(&mut b, q0, q1, QubitId::ancilla(0));
    b.finish()
}

fn build_logical_and_uncompute() -> Circuit {
    let (q0, q1) = (QubitId::data(0), QubitId::data(1));
    let a = QubitId::ancilla(0);
    let mut b = CircuitBuilder::with_ancillas(2, 1);
    b.h(a);
    let m = b.measure(a);
    b.cond(m, true, crate::circuit::GateKind::Cz(q0, q1));
    b.finish()
}

fn build_jones_eq10_toffoli() -> Circuit {
    let (q0, q1, q2) = (QubitId::data(0), QubitId::data(1), QubitId::data(2));
    let (a, h) = (QubitId::ancilla(0), QubitId::ancilla(1));
    let mut b = CircuitBuilder::with_ancillas(3, 2);
    emit_cc_minus_ix(&mut b, q0, q1, a, h);
    b.s(a).cx(a, q2).h(a);
    let m = b.measure(a);
    b.cond(m, true, crate::circuit::GateKind::Cz(q0, q1));
    b.finish()
}

fn build_cccz_gidney() -> Circuit {
    let (q0, q1, q2, q3) = (
        QubitId::data(0),
        QubitId::data(1),
        QubitId::data(2),
        QubitId::data(3),
    );
    let a = QubitId::ancilla(0);
    let mut b = CircuitBuilder::with_ancillas(4, 1);
    b.h(a)
        .t(a)
        .cx(q1, a)
        .tdg(a)
        .cx(q0, a)
        .t(a)
        .cx(q1, a)
        .cx(q2, a)
        .tdg(a)
        .cx(q3, a)
        .t(a)
        .cx(q2, a)
        .tdg(a)
        .cx(q3, a)
        .sxdg(a);
    let m = b.measure(a);
    b.cond(m, false, crate::circuit::GateKind::Cz(q2, q3));
    b.cond(m, true, crate::circuit::GateKind::Cz(q0, q1));
    b.finish()
}

fn build_paler_rtof() -> Circuit {
    let (q0, q1, q2) = (QubitId::data(0), QubitId::data(1), QubitId::data(2));
    let mut b = CircuitBuilder::new(3);
    b.h(q2)
        .t(q2)
        .cx(q1, q2)
        .tdg(q2)
        .cx(q0, q2)
        .t(q2)
        .cx(q1, q2)
        .tdg(q2)
        .h(q2);
    b.finish()
}

fn build_toffoli_paler() -> Circuit {
    let (q0, q1, q2) = (QubitId::data(0), QubitId::data(1), QubitId::data(2));
    let a = QubitId::ancilla(0);
    let mut b = CircuitBuilder::with_ancillas(3, 1);
    b.h(a)
        .t(a)
        .cx(q1, a)
        .tdg(a)
        .cx(q0, a)
        .t(a)
        .cx(q1, a)
        .tdg(a)
        .h(a)
        .sdg(a)
        .cx(a, q2)
        .h(a);
    let m = b.measure(a);
    b.cond(m, true, crate::circuit::GateKind::Cz(q0, q1));
    b.finish()
}

fn build_ccz_paler_fig2a() -> Circuit {
    let (q0, q1, q2) = (QubitId::data(0), QubitId::data(1), QubitId::data(2));
    let a = QubitId::ancilla(0);
    let mut b = CircuitBuilder::with_ancillas(3, 1);
    b.h(a)
        .t(a)
        .cx(q2, a)
        .tdg(a)
        .cx(q1, a)
        .t(a)
        .cx(q2, a)
        .tdg(a)
        .cx(q0, a)
        .s(a)
        .h(a);
    let m = b.measure(a);
    b.cond(m, true, crate::circuit::GateKind::Cz(q1, q2));
    b.finish()
}

fn build_ccz_gidney_fig2b() -> Circuit {
    let (q0, q1, q2) = (QubitId::data(0), QubitId::data(1), QubitId::data(2));
    let a = QubitId::ancilla(0);
    let mut b = CircuitBuilder::with_ancillas(3, 1);
    b.h(a)
        .t(a)
        .cx(q2, a)
        .cx(q1, a)
        .cx(a, q1)
        .cx(a, q2)
        .tdg(q1)
        .tdg(q2)
        .t(a)
        .cx(a, q1)
        .cx(a, q2)
        .cx(q0, a)
        .s(a)
        .h(a);
    let m = b.measure(a);
    b.cond(m, false, crate::circuit::GateKind::Cz(q1, q2));
    b.finish()
}

fn build_ccz_jones_fig2c() -> Circuit {
    let (q0, q1, q2) = (QubitId::data(0), QubitId::data(1), QubitId::data(2));
    let (a, h) = (QubitId::ancilla(0), QubitId::ancilla(1));
    let mut b = CircuitBuilder::with_ancillas(3, 2);
    b.h(a)
        .cx(q1, h)
        .cx(a, q1)
        .cx(a, q2)
        .cx(q2, h)
        .tdg(q1)
        .tdg(q2)
        .t(a)
        .t(h)
        .cx(q2, h)
        .cx(a, q1)
        .cx(a, q2)
        .cx(q1, h)
        .cx(q0, a)
        .s(a)
        .h(a);
    let m = b.measure(a);
    b.cond(m, false, crate::circuit::GateKind::Cz(q1, q2));
    b.finish()
}

fn build_cccz_fig1a() -> Circuit {
    let (q0, q1, q2, q3) = (
        QubitId::data(0),
        QubitId::data(1),
        QubitId::data(2),
        QubitId::data(3),
    );
    let a = QubitId::ancilla(0);
    let mut b = CircuitBuilder::with_ancillas(4, 1);
    b.h(a)
        .t(a)
        .cx(q3, a)
        .tdg(a)
        .cx(q2, a)
        .t(a)
        .cx(q3, a)
        .cx(q1, a)
        .t(a)
        .cx(q0, a)
        .tdg(a)
        .cx(q1, a)
        .t(a)
        .h(a);
    let m = b.measure(a);
    // CZ with an open control on q1, written out as an X conjugation.
    b.cond(m, true, crate::circuit::GateKind::X(q1));
    b.cond(m, true, crate::circuit::GateKind::Cz(q0, q1));
    b.cond(m, true, crate::circuit::GateKind::X(q1));
    b.cond(m, true, crate::circuit::GateKind::Cz(q2, q3));
    b.finish()
}

fn build_cccz_fig1a_prime() -> Circuit {
    let (q0, q1, q2, q3) = (
        QubitId::data(0),
        QubitId::data(1),
        QubitId::data(2),
        QubitId::data(3),
    );
    let a = QubitId::ancilla(0);
    let mut b = CircuitBuilder::with_ancillas(4, 1);
    b.h(a)
        .t(a)
        .cx(q3, a)
        .tdg(a)
        .cx(q2, a)
        .t(a)
        .cx(q3, a)
        .sdg(a)
        .cx(q1, a)
        .tdg(a)
        .cx(q0, a)
        .t(a)
        .cx(q1, a)
        .tdg(a)
        .h(a);
    let m = b.measure(a);
    b.cond(m, true, crate::circuit::GateKind::X(q1));
    b.cond(m, true, crate::circuit::GateKind::Cz(q0, q1));
    b.cond(m, true, crate::circuit::GateKind::X(q1));
    b.cond(m, false, crate::circuit::GateKind::Cz(q2, q3));
    b.finish()
}

fn build_cccz_fig1b() -> Circuit {
    let (q0, q1, q2, q3) = (
        QubitId::data(0),
        QubitId::data(1),
        QubitId::data(2),
        QubitId::data(3),
    );
    let a = QubitId::ancilla(0);
    let mut b = CircuitBuilder::with_ancillas(4, 1);
    b.h(a)
        .cx(a, q2)
        .cx(a, q3)
        .tdg(q2)
        .tdg(q3)
        .t(a)
        .cx(a, q2)
        .cx(a, q3)
        .cx(q3, a)
        .cx(q2, a)
        .cx(q1, a)
        .cx(q0, a)
        .cx(a, q0)
        .cx(a, q1)
        .tdg(q0)
        .tdg(q1)
        .t(a)
        .cx(a, q0)
        .cx(a, q1)
        .h(a);
    let m = b.measure(a);
    // CZ with open controls on both q0 and q1, as X conjugations.
    b.cond(m, true, crate::circuit::GateKind::X(q0));
    b.cond(m, true, crate::circuit::GateKind::X(q1));
    b.cond(m, true, crate::circuit::GateKind::Cz(q0, q1));
    b.cond(m, true, crate::circuit::GateKind::X(q0));
    b.cond(m, true, crate::circuit::GateKind::X(q1));
    b.cond(m, true, crate::circuit::GateKind::Cz(q2, q3));
    b.finish()
}

fn build_cccz_no_advantage() -> Circuit {
    let (q0, q1, q2, q3) = (
        QubitId::data(0),
        QubitId::data(1),
        QubitId::data(2),
        QubitId::data(3),
    );
    let (a0, a1) = (QubitId::ancilla(0), QubitId::ancilla(1));
    let mut b = CircuitBuilder::with_ancillas(4, 2);
    b.h(a0)
        .cx(q2, a1)
        .cx(a0, q2)
        .cx(a0, q3)
        .cx(q3, a1)
        .tdg(q2)
        .tdg(q3)
        .t(a1)
        .cx(q3, a1)
        .cx(a0, q2)
        .cx(a0, q3)
        .cx(q2, a1)
        .cx(q1, a1)
        .cx(a0, q0)
        .cx(a0, q1)
        .cx(q0, a1)
        .tdg(q0)
        .tdg(q1)
        .t(a1)
        .cx(q0, a1)
        .cx(a0, q0)
        .cx(a0, q1)
        .cx(q1, a1)
        .h(a0);
    let m = b.measure(a0);
    b.cond(m, true, crate::circuit::GateKind::Cz(q0, q1));
    b.cond(m, true, crate::circuit::GateKind::Cz(q2, q3));
    b.finish()
}

fn build_c5z_tree() -> Circuit {
    crate::extend::cnz_selinger_logdepth(5, true)
        .expect("5 controls is within the tree builder's domain")
}

// ---------------------------------------------------------------------------
// The table
// ---------------------------------------------------------------------------

/// Every registered decomposition, in presentation order.
pub static CATALOG: &[CatalogEntry] = &[
    CatalogEntry {
        name: "cz",
        summary: "bare controlled-Z; the 1-control base case",
        reference: "textbook",
        build: build_cz,
        target: TargetSpec::Mcp { polarities: POS1, axis: PauliAxis::Z },
        expected: ExpectedResources {
            t_count: 0,
            cnot_min: 1,
            cnot_max: 1,
            t_depth: 0,
            ancillas: 0,
            feedback: 0,
        },
    },
    CatalogEntry {
        name: "toffoli-standard",
        summary: "textbook ancilla-free Toffoli, T-count 7",
        reference: "Nielsen & Chuang (2000)",
        build: build_toffoli_standard,
        target: TargetSpec::Mcp { polarities: POS2, axis: PauliAxis::X },
        expected: ExpectedResources {
            t_count: 7,
            cnot_min: 6,
            cnot_max: 6,
            t_depth: 4,
            ancillas: 0,
            feedback: 0,
        },
    },
    CatalogEntry {
        name: "toffoli-tdepth4",
        summary: "rescheduled Toffoli with the T gates packed to depth 4",
        reference: "textbook variant",
        build: build_toffoli_tdepth4,
        target: TargetSpec::Mcp { polarities: POS2, axis: PauliAxis::X },
        expected: ExpectedResources {
            t_count: 7,
            cnot_min: 6,
            cnot_max: 6,
            t_depth: 4,
            ancillas: 0,
            feedback: 0,
        },
    },
    CatalogEntry {
        name: "toffoli-amy",
        summary: "T-depth-3 Toffoli without ancillas",
        reference: "Amy et al. (2013)",
        build: build_toffoli_amy,
        target: TargetSpec::Mcp { polarities: POS2, axis: PauliAxis::X },
        expected: ExpectedResources {
            t_count: 7,
            cnot_min: 7,
            cnot_max: 7,
            t_depth: 3,
            ancillas: 0,
            feedback: 0,
        },
    },
    CatalogEntry {
        name: "ccz-selinger",
        summary: "T-depth-1 CCZ over four parity ancillas",
        reference: "Selinger (2013)",
        build: build_ccz_selinger,
        target: TargetSpec::Mcp { polarities: POS2, axis: PauliAxis::Z },
        expected: ExpectedResources {
            t_count: 7,
            cnot_min: 16,
            cnot_max: 16,
            t_depth: 1,
            ancillas: 4,
            feedback: 0,
        },
    },
    CatalogEntry {
        name: "cc-minus-ix",
        summary: "doubly-controlled −iX block, T-count 4 in one stage",
        reference: "Selinger (2013)",
        build: build_cc_minus_ix,
        target: TargetSpec::ControlledUnitary { matrix: minus_i_x, controls: 2 },
        expected: ExpectedResources {
            t_count: 4,
            cnot_min: 8,
            cnot_max: 8,
            t_depth: 1,
            ancillas: 1,
            feedback: 0,
        },
    },
    CatalogEntry {
        name: "cc-plus-ix",
        summary: "doubly-controlled +iX block; inverse of cc-minus-ix",
        reference: "Selinger (2013)",
        build: build_cc_plus_ix,
        target: TargetSpec::ControlledUnitary { matrix: plus_i_x, controls: 2 },
        expected: ExpectedResources {
            t_count: 4,
            cnot_min: 8,
            cnot_max: 8,
            t_depth: 1,
            ancillas: 1,
            feedback: 0,
        },
    },
    CatalogEntry {
        name: "logical-and",
        summary: "temporary logical-AND: writes q0∧q1 onto a fresh ancilla",
        reference: "Gidney (2018)",
        build: build_logical_and,
        target: TargetSpec::AncillaRectangular { matrix: and_rectangular },
        expected: ExpectedResources {
            t_count: 4,
            cnot_min: 6,
            cnot_max: 6,
            t_depth: 2,
            ancillas: 1,
            feedback: 0,
        },
    },
    CatalogEntry {
        name: "logical-and-uncompute",
        summary: "measurement-based uncomputation of the logical-AND ancilla",
        reference: "Gidney (2018)",
        build: build_logical_and_uncompute,
        target: TargetSpec::InverseOf { partner: "logical-and" },
        expected: ExpectedResources {
            t_count: 0,
            cnot_min: 0,
            cnot_max: 1,
            t_depth: 0,
            ancillas: 1,
            feedback: 1,
        },
    },
    CatalogEntry {
        name: "jones-eq10-toffoli",
        summary: "Toffoli via an AND ancilla driving a plain CNOT, T-count 4",
        reference: "Jones (2013)",
        build: build_jones_eq10_toffoli,
        target: TargetSpec::Mcp { polarities: POS2, axis: PauliAxis::X },
        expected: ExpectedResources {
            t_count: 4,
            cnot_min: 9,
            cnot_max: 10,
            t_depth: 1,
            ancillas: 2,
            feedback: 1,
        },
    },
    CatalogEntry {
        name: "cccz-gidney",
        summary: "CCCZ with T-count 6 and a √X†-basis measurement",
        reference: "Gidney & Jones (2021)",
        build: build_cccz_gidney,
        target: TargetSpec::Mcp { polarities: POS3, axis: PauliAxis::Z },
        expected: ExpectedResources {
            t_count: 6,
            cnot_min: 8,
            cnot_max: 8,
            t_depth: 6,
            ancillas: 1,
            feedback: 1,
        },
    },
    CatalogEntry {
        name: "paler-rtof",
        summary: "relative-phase Toffoli: CCX up to a controlled phase, no ancilla",
        reference: "Paler et al. (2022)",
        build: build_paler_rtof,
        target: TargetSpec::ControlledUnitary { matrix: relative_phase_toffoli, controls: 0 },
        expected: ExpectedResources {
            t_count: 4,
            cnot_min: 3,
            cnot_max: 3,
            t_depth: 4,
            ancillas: 0,
            feedback: 0,
        },
    },
    CatalogEntry {
        name: "toffoli-paler",
        summary: "Toffoli with T-count 4 and CNOT-count 4 or 5",
        reference: "Paler et al. (2022)",
        build: build_toffoli_paler,
        target: TargetSpec::Mcp { polarities: POS2, axis: PauliAxis::X },
        expected: ExpectedResources {
            t_count: 4,
            cnot_min: 4,
            cnot_max: 5,
            t_depth: 4,
            ancillas: 1,
            feedback: 1,
        },
    },
    CatalogEntry {
        name: "ccz-paler-fig2a",
        summary: "CCZ with T-count 4 and CNOT-count 4 or 5",
        reference: "Paler et al. (2022)",
        build: build_ccz_paler_fig2a,
        target: TargetSpec::Mcp { polarities: POS2, axis: PauliAxis::Z },
        expected: ExpectedResources {
            t_count: 4,
            cnot_min: 4,
            cnot_max: 5,
            t_depth: 4,
            ancillas: 1,
            feedback: 1,
        },
    },
    CatalogEntry {
        name: "ccz-gidney-fig2b",
        summary: "CCZ with T-count 4 and T-depth 2 via the AND gadget shape",
        reference: "Gidney (2018)",
        build: build_ccz_gidney_fig2b,
        target: TargetSpec::Mcp { polarities: POS2, axis: PauliAxis::Z },
        expected: ExpectedResources {
            t_count: 4,
            cnot_min: 7,
            cnot_max: 8,
            t_depth: 2,
            ancillas: 1,
            feedback: 1,
        },
    },
    CatalogEntry {
        name: "ccz-jones-fig2c",
        summary: "CCZ with T-count 4 and T-depth 1 using one helper wire",
        reference: "Jones (2013)",
        build: build_ccz_jones_fig2c,
        target: TargetSpec::Mcp { polarities: POS2, axis: PauliAxis::Z },
        expected: ExpectedResources {
            t_count: 4,
            cnot_min: 9,
            cnot_max: 10,
            t_depth: 1,
            ancillas: 2,
            feedback: 1,
        },
    },
    CatalogEntry {
        name: "cccz-fig1a",
        summary: "CCCZ with T-count 6 and CNOT-count 6 or 8",
        reference: "this catalog",
        build: build_cccz_fig1a,
        target: TargetSpec::Mcp { polarities: POS3, axis: PauliAxis::Z },
        expected: ExpectedResources {
            t_count: 6,
            cnot_min: 6,
            cnot_max: 8,
            t_depth: 6,
            ancillas: 1,
            feedback: 1,
        },
    },
    CatalogEntry {
        name: "cccz-fig1a-prime",
        summary: "CCCZ with T-count 6 and a constant CNOT-count of 7",
        reference: "this catalog",
        build: build_cccz_fig1a_prime,
        target: TargetSpec::Mcp { polarities: POS3, axis: PauliAxis::Z },
        expected: ExpectedResources {
            t_count: 6,
            cnot_min: 7,
            cnot_max: 7,
            t_depth: 6,
            ancillas: 1,
            feedback: 1,
        },
    },
    CatalogEntry {
        name: "cccz-fig1b",
        summary: "CCCZ with T-count 6 and T-depth 2",
        reference: "this catalog",
        build: build_cccz_fig1b,
        target: TargetSpec::Mcp { polarities: POS3, axis: PauliAxis::Z },
        expected: ExpectedResources {
            t_count: 6,
            cnot_min: 12,
            cnot_max: 14,
            t_depth: 2,
            ancillas: 1,
            feedback: 1,
        },
    },
    CatalogEntry {
        name: "cccz-no-advantage",
        summary: "T-depth-2 CCCZ that a leaner variant strictly dominates",
        reference: "this catalog",
        build: build_cccz_no_advantage,
        target: TargetSpec::Mcp { polarities: POS3, axis: PauliAxis::Z },
        expected: ExpectedResources {
            t_count: 6,
            cnot_min: 16,
            cnot_max: 18,
            t_depth: 2,
            ancillas: 2,
            feedback: 1,
        },
    },
    CatalogEntry {
        name: "c5z-tree",
        summary: "C⁵Z from the balanced ±iX pairing tree, T-depth 3",
        reference: "Selinger (2013), balanced pairing",
        build: build_c5z_tree,
        target: TargetSpec::Mcp { polarities: POS5, axis: PauliAxis::Z },
        expected: ExpectedResources {
            t_count: 31,
            cnot_min: 64,
            cnot_max: 64,
            t_depth: 3,
            ancillas: 7,
            feedback: 0,
        },
    },
];

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

/// Check a catalog entry's circuit against its declared target.
///
/// Most entries run through [`assert_equiv`]. The two gadget entries need
/// their own comparisons: the logical-AND is checked column-wise as a
/// rectangular map (its ancilla carries the result), and the uncompute
/// entry is checked by composing it with its partner and comparing the
/// composite channel against the identity.
pub fn verify_entry(e: &CatalogEntry, tol: f64) -> Result<EquivalenceVerdict, SimError> {
    let circuit = (e.build)();
    match &e.target {
        TargetSpec::Mcp { .. } | TargetSpec::ControlledUnitary { .. } => {
            let target = e.target.matrix().expect("square targets have matrices");
            assert_equiv(&circuit, &target, tol)
        }
        TargetSpec::AncillaRectangular { matrix } => {
            rectangular_verdict(&circuit, &matrix(), tol)
        }
        TargetSpec::InverseOf { partner } => {
            let first = build_named(partner).expect("partner entries are registered");
            let map = crate::circuit::QubitMap::identity(&circuit);
            let composite = crate::circuit::compose(&first, &circuit, &map)
                .expect("partner entries share a wire layout");
            let dim = 1 << composite.data_qubits();
            assert_equiv(&composite, &CMatrix::identity(dim, dim), tol)
        }
    }
}

/// Compare a measurement-free circuit column-by-column against `target` on
/// ancilla-|0⟩ inputs, allowing one overall phase. Unlike [`assert_equiv`]
/// this keeps the full output register, so ancillas may end anywhere the
/// target sends them.
fn rectangular_verdict(
    circuit: &Circuit,
    target: &CMatrix,
    tol: f64,
) -> Result<EquivalenceVerdict, SimError> {
    let anc = circuit.ancilla_qubits();
    let data_dim = 1usize << circuit.data_qubits();
    let mut phase = None;
    let mut max_deviation = 0.0f64;
    for x in 0..data_dim {
        let mut input = vec![Complex64::new(0.0, 0.0); data_dim];
        input[x] = Complex64::new(1.0, 0.0);
        let out = simulate(circuit, &input, &[])?;
        for (row, amp) in out.amplitudes().iter().enumerate() {
            let want = target[(row, x << anc)];
            if phase.is_none() && want.norm() > 0.5 {
                phase = Some(amp / want);
            }
            let fitted = phase.unwrap_or(Complex64::new(1.0, 0.0)) * want;
            max_deviation = max_deviation.max((amp - fitted).norm());
        }
    }
    let mut branch_phases = std::collections::BTreeMap::new();
    let p = phase.unwrap_or(Complex64::new(1.0, 0.0));
    branch_phases.insert(0, p / p.norm().max(f64::MIN_POSITIVE));
    Ok(EquivalenceVerdict {
        equivalent: max_deviation < tol && (p.norm() - 1.0).abs() < tol,
        max_deviation,
        trace_defect: (p.norm() - 1.0).abs(),
        leakage: 0.0,
        branch_phases,
    })
}
