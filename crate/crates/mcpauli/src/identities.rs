//! Circuit identities checked by direct matrix algebra.
//!
//! This module is a second, deliberately separate evaluation path: instead
//! of the state-vector simulator it embeds small gate matrices into the
//! full register by index arithmetic, forks on measurements, and compares
//! the resulting branch operators. The identity suite exercises exactly the
//! rewriting steps the decompositions rely on — Pauli-axis conversion,
//! discarding gates on |0⟩ wires, commuting controls through measurement,
//! the relative-phase Toffoli factorizations, and the control-extension
//! equation itself — so a bug in either evaluation path shows up as a
//! disagreement here or in the simulator-backed tests.

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::sim::random_unitary;

type Matrix = DMatrix<Complex64>;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn zero() -> Complex64 {
    c(0.0, 0.0)
}

fn one() -> Complex64 {
    c(1.0, 0.0)
}

// --- small gate matrices ---------------------------------------------------

fn h() -> Matrix {
    let s = 1.0 / 2.0f64.sqrt();
    Matrix::from_row_slice(2, 2, &[c(s, 0.0), c(s, 0.0), c(s, 0.0), c(-s, 0.0)])
}

fn x() -> Matrix {
    Matrix::from_row_slice(2, 2, &[zero(), one(), one(), zero()])
}

fn y() -> Matrix {
    Matrix::from_row_slice(2, 2, &[zero(), c(0.0, -1.0), c(0.0, 1.0), zero()])
}

fn phase(theta: f64) -> Matrix {
    Matrix::from_row_slice(2, 2, &[one(), zero(), zero(), Complex64::from_polar(1.0, theta)])
}

fn t() -> Matrix {
    phase(std::f64::consts::FRAC_PI_4)
}

fn tdg() -> Matrix {
    phase(-std::f64::consts::FRAC_PI_4)
}

fn s() -> Matrix {
    phase(std::f64::consts::FRAC_PI_2)
}

fn sdg() -> Matrix {
    phase(-std::f64::consts::FRAC_PI_2)
}

fn projector(outcome: bool) -> Matrix {
    let mut p = Matrix::zeros(2, 2);
    p[(outcome as usize, outcome as usize)] = one();
    p
}

/// CX with the control as the first sub-block wire.
fn cx() -> Matrix {
    let mut m = Matrix::identity(4, 4);
    m[(2, 2)] = zero();
    m[(3, 3)] = zero();
    m[(2, 3)] = one();
    m[(3, 2)] = one();
    m
}

/// n-controlled X on n+1 wires, target last: flips the last bit when the
/// first n are all ones.
fn cnx(n: usize) -> Matrix {
    let dim = 1usize << (n + 1);
    let mut m = Matrix::zeros(dim, dim);
    for col in 0..dim {
        let row = if col >> 1 == (dim >> 1) - 1 { col ^ 1 } else { col };
        m[(row, col)] = one();
    }
    m
}

/// n-controlled Z on n+1 wires: −1 on the all-ones state. `cnz(0)` is Z.
fn cnz(n: usize) -> Matrix {
    let dim = 1usize << (n + 1);
    let mut m = Matrix::identity(dim, dim);
    m[(dim - 1, dim - 1)] = -one();
    m
}

/// Z applied to the last wire when the leading control bits match `pattern`
/// (bit i of `pattern`, counted from the most significant control, must
/// equal the wire value).
fn cnz_pattern(controls: usize, pattern: usize) -> Matrix {
    let dim = 1usize << (controls + 1);
    let mut m = Matrix::identity(dim, dim);
    for i in 0..dim {
        if i >> 1 == pattern && i & 1 == 1 {
            m[(i, i)] = -one();
        }
    }
    m
}

/// `controls`-fold closed-controlled `u`, controls as the leading wires.
fn controlled(u: &Matrix, controls: usize) -> Matrix {
    let udim = u.nrows();
    let dim = udim << controls;
    let mut m = Matrix::identity(dim, dim);
    let base = dim - udim;
    for r in 0..udim {
        for col in 0..udim {
            m[(base + r, base + col)] = u[(r, col)];
        }
    }
    m
}

/// Open-controlled `u` on two blocks: `u` when the control is |0⟩.
fn open_controlled(u: &Matrix) -> Matrix {
    let udim = u.nrows();
    let mut m = Matrix::identity(2 * udim, 2 * udim);
    for r in 0..udim {
        for col in 0..udim {
            m[(r, col)] = u[(r, col)];
        }
    }
    m
}

// --- embedding and branch evaluation ----------------------------------------

fn wire_bit(index: usize, wire: usize, total: usize) -> usize {
    (index >> (total - 1 - wire)) & 1
}

/// Place a 2^k × 2^k matrix onto the listed wires (wire 0 is the most
/// significant bit of the register index; the first listed wire is the most
/// significant bit of the sub-block).
fn embed(m: &Matrix, wires: &[usize], total: usize) -> Matrix {
    let k = wires.len();
    debug_assert_eq!(m.nrows(), 1 << k);
    let dim = 1usize << total;
    let mut out = Matrix::zeros(dim, dim);
    for col in 0..dim {
        let mut sub_col = 0usize;
        for &w in wires {
            sub_col = (sub_col << 1) | wire_bit(col, w, total);
        }
        for sub_row in 0..(1 << k) {
            let amp = m[(sub_row, sub_col)];
            if amp == zero() {
                continue;
            }
            let mut row = col;
            for (j, &w) in wires.iter().enumerate() {
                let bit = (sub_row >> (k - 1 - j)) & 1;
                let mask = 1usize << (total - 1 - w);
                row = (row & !mask) | (bit << (total - 1 - w));
            }
            out[(row, col)] += amp;
        }
    }
    out
}

enum Op {
    Unitary { matrix: Matrix, wires: Vec<usize> },
    Measure { wire: usize },
    Conditioned { bit: usize, value: bool, matrix: Matrix, wires: Vec<usize> },
}

/// One side of an identity: a register (data wires first, |0⟩-initialized
/// scratch wires after) and an operation list.
struct Side {
    wires: usize,
    data: usize,
    ops: Vec<Op>,
    measures: usize,
}

impl Side {
    fn new(wires: usize, data: usize) -> Self {
        Side { wires, data, ops: Vec::new(), measures: 0 }
    }

    fn u(mut self, matrix: Matrix, wires: &[usize]) -> Self {
        self.ops.push(Op::Unitary { matrix, wires: wires.to_vec() });
        self
    }

    /// Measure a wire; the outcome becomes the next classical bit.
    fn m(mut self, wire: usize) -> Self {
        self.ops.push(Op::Measure { wire });
        self.measures += 1;
        self
    }

    fn cond(mut self, bit: usize, value: bool, matrix: Matrix, wires: &[usize]) -> Self {
        self.ops.push(Op::Conditioned { bit, value, matrix, wires: wires.to_vec() });
        self
    }

    /// Branch operators on the full register, keyed by the measurement
    /// record (bit k of the key = outcome of the k-th measurement).
    fn branches(&self) -> BTreeMap<u64, Matrix> {
        let dim = 1usize << self.wires;
        let mut branches = BTreeMap::new();
        branches.insert(0u64, Matrix::identity(dim, dim));
        let mut next_bit = 0usize;
        for op in &self.ops {
            match op {
                Op::Unitary { matrix, wires } => {
                    let full = embed(matrix, wires, self.wires);
                    for k in branches.values_mut() {
                        *k = &full * &*k;
                    }
                }
                Op::Measure { wire } => {
                    let p0 = embed(&projector(false), &[*wire], self.wires);
                    let p1 = embed(&projector(true), &[*wire], self.wires);
                    let mut forked = BTreeMap::new();
                    for (key, k) in &branches {
                        forked.insert(*key, &p0 * k);
                        forked.insert(key | (1 << next_bit), &p1 * k);
                    }
                    branches = forked;
                    next_bit += 1;
                }
                Op::Conditioned { bit, value, matrix, wires } => {
                    let full = embed(matrix, wires, self.wires);
                    for (key, k) in branches.iter_mut() {
                        if (key >> bit) & 1 == *value as u64 {
                            *k = &full * &*k;
                        }
                    }
                }
            }
        }
        branches
    }
}

// --- comparators -------------------------------------------------------------

/// Columns of the full register whose scratch wires are all |0⟩, in data
/// order.
fn clean_columns(side: &Side) -> impl Iterator<Item = usize> {
    let anc = side.wires - side.data;
    (0..(1usize << side.data)).map(move |d| d << anc)
}

/// Compare two sides with identical registers and measurement counts,
/// branch by branch on the full space (inputs restricted to clean scratch
/// wires), allowing one unit-modulus phase per branch. Returns the worst
/// deviation.
fn compare_sides(lhs: &Side, rhs: &Side) -> f64 {
    assert_eq!(lhs.wires, rhs.wires, "sides must share a register");
    assert_eq!(lhs.data, rhs.data, "sides must share a data split");
    assert_eq!(lhs.measures, rhs.measures, "sides must measure equally often");
    let lb = lhs.branches();
    let rb = rhs.branches();
    let dim = 1usize << lhs.wires;
    let cols: Vec<usize> = clean_columns(lhs).collect();
    let mut dev: f64 = 0.0;
    for key in lb.keys().chain(rb.keys()) {
        let l = &lb[key];
        let r = &rb[key];
        // Least-squares phase fit over the restricted columns.
        let mut num = zero();
        let mut den = 0.0;
        for &col in &cols {
            for row in 0..dim {
                num += r[(row, col)].conj() * l[(row, col)];
                den += r[(row, col)].norm_sqr();
            }
        }
        if den < 1e-30 {
            // Nothing on the right: the left must vanish too.
            for &col in &cols {
                for row in 0..dim {
                    dev = dev.max(l[(row, col)].norm());
                }
            }
            continue;
        }
        let w = num / den;
        dev = dev.max((w.norm() - 1.0).abs());
        for &col in &cols {
            for row in 0..dim {
                dev = dev.max((l[(row, col)] - w * r[(row, col)]).norm());
            }
        }
    }
    dev
}

/// Compare a side against a target unitary on its data wires alone. Each
/// branch must equal a weighted copy of the target with the scratch wires
/// left in one consistent basis pattern, and the branch weights must form a
/// complete channel (Σ|w|² = 1). Returns the worst deviation.
fn compare_to_unitary(lhs: &Side, target: &Matrix) -> f64 {
    let anc = lhs.wires - lhs.data;
    let a_dim = 1usize << anc;
    let d_dim = 1usize << lhs.data;
    assert_eq!(target.nrows(), d_dim, "target must live on the data wires");
    let mut dev: f64 = 0.0;
    let mut weight = 0.0;
    for k in lhs.branches().values() {
        // Try every scratch pattern; keep the best fit. A correct branch
        // leaves scratch wires in exactly one pattern, so every other
        // placement scores a large residual.
        let mut best: Option<(f64, Complex64)> = None;
        for p in 0..a_dim {
            let mut num = zero();
            let mut den = 0.0;
            for r in 0..d_dim {
                for col in 0..d_dim {
                    num += target[(r, col)].conj() * k[((r << anc) | p, col << anc)];
                    den += target[(r, col)].norm_sqr();
                }
            }
            let w = num / den;
            let mut res: f64 = 0.0;
            for row in 0..(d_dim * a_dim) {
                for col in 0..d_dim {
                    let expect = if row & (a_dim - 1) == p {
                        w * target[(row >> anc, col)]
                    } else {
                        zero()
                    };
                    res = res.max((k[(row, col << anc)] - expect).norm());
                }
            }
            if best.map_or(true, |(br, _)| res < br) {
                best = Some((res, w));
            }
        }
        let (res, w) = best.expect("at least one scratch pattern");
        dev = dev.max(res);
        weight += w.norm_sqr();
    }
    dev.max((weight - 1.0).abs())
}

// --- the identities ----------------------------------------------------------

fn pauli_conversion_trial(_rng: &mut ChaCha8Rng) -> f64 {
    let mut dev: f64 = 0.0;
    for n in 1..=3usize {
        let tgt = n; // target wire index
        let all: Vec<usize> = (0..=n).collect();
        let lhs = Side::new(n + 1, n + 1).u(cnx(n), &all);
        let via_z = Side::new(n + 1, n + 1)
            .u(h(), &[tgt])
            .u(cnz(n), &all)
            .u(h(), &[tgt]);
        let via_y = Side::new(n + 1, n + 1)
            .u(s(), &[tgt])
            .u(controlled(&y(), n), &all)
            .u(sdg(), &[tgt]);
        dev = dev.max(compare_sides(&lhs, &via_z));
        dev = dev.max(compare_sides(&lhs, &via_y));
    }
    dev
}

fn ket0_phase_trial(rng: &mut ChaCha8Rng) -> f64 {
    let theta = rng.gen::<f64>() * std::f64::consts::TAU;
    let lhs = Side::new(2, 1).u(phase(theta), &[1]);
    let rhs = Side::new(2, 1);
    compare_sides(&lhs, &rhs)
}

fn ket0_control_trial(rng: &mut ChaCha8Rng) -> f64 {
    let u = random_unitary(2, rng);
    // Wire 1 is the |0⟩ scratch wire and acts as the control.
    let lhs = Side::new(2, 1).u(controlled(&u, 1), &[1, 0]);
    let rhs = Side::new(2, 1);
    compare_sides(&lhs, &rhs)
}

fn phase_measure_trial(rng: &mut ChaCha8Rng) -> f64 {
    let theta = rng.gen::<f64>() * std::f64::consts::TAU;
    let u = random_unitary(2, rng);
    let lhs = Side::new(2, 2).u(u.clone(), &[0]).u(phase(theta), &[1]).m(1);
    let rhs = Side::new(2, 2).u(u, &[0]).m(1);
    compare_sides(&lhs, &rhs)
}

fn control_measure_trial(rng: &mut ChaCha8Rng) -> f64 {
    let u = random_unitary(2, rng);
    let lhs = Side::new(2, 2).u(controlled(&u, 1), &[0, 1]).m(0);
    let rhs = Side::new(2, 2).m(0).cond(0, true, u, &[1]);
    compare_sides(&lhs, &rhs)
}

fn controlo_measure_trial(rng: &mut ChaCha8Rng) -> f64 {
    let u = random_unitary(2, rng);
    let lhs = Side::new(2, 2).u(open_controlled(&u), &[0, 1]).m(0);
    let rhs = Side::new(2, 2).m(0).cond(0, false, u, &[1]);
    compare_sides(&lhs, &rhs)
}

/// The 9-gate relative-phase Toffoli, T/T† as given.
fn rtof_ops(side: Side, swap: bool) -> Side {
    let (a, b) = if swap { (tdg(), t()) } else { (t(), tdg()) };
    side.u(h(), &[2])
        .u(a.clone(), &[2])
        .u(cx(), &[1, 2])
        .u(b.clone(), &[2])
        .u(cx(), &[0, 2])
        .u(a, &[2])
        .u(cx(), &[1, 2])
        .u(b, &[2])
        .u(h(), &[2])
}

fn rtof_1a_trial(_rng: &mut ChaCha8Rng) -> f64 {
    let lhs = rtof_ops(Side::new(3, 3), false);
    // Z on the target when (q0, q1) = (1, 0): the relative phase factor.
    let rp = || cnz_pattern(2, 0b10);
    let rhs_a = Side::new(3, 3)
        .u(rp(), &[0, 1, 2])
        .u(sdg(), &[2])
        .u(cnx(2), &[0, 1, 2])
        .u(s(), &[2]);
    let rhs_b = Side::new(3, 3)
        .u(sdg(), &[2])
        .u(cnx(2), &[0, 1, 2])
        .u(s(), &[2])
        .u(rp(), &[0, 1, 2]);
    compare_sides(&lhs, &rhs_a).max(compare_sides(&lhs, &rhs_b))
}

fn rtof_1b_trial(_rng: &mut ChaCha8Rng) -> f64 {
    let lhs = rtof_ops(Side::new(3, 3), true);
    let rhs = Side::new(3, 3)
        .u(cnz_pattern(2, 0b10), &[0, 1, 2])
        .u(s(), &[2])
        .u(cnx(2), &[0, 1, 2])
        .u(sdg(), &[2]);
    compare_sides(&lhs, &rhs)
}

fn rtof_2_rhs() -> Side {
    Side::new(3, 3)
        .u(cnz_pattern(2, 0b00), &[0, 1, 2])
        .u(sdg(), &[2])
        .u(cnx(2), &[0, 1, 2])
        .u(sdg(), &[2])
}

fn rtof_2a_trial(_rng: &mut ChaCha8Rng) -> f64 {
    let lhs = Side::new(3, 3)
        .u(h(), &[2])
        .u(t(), &[2])
        .u(cx(), &[1, 2])
        .u(cx(), &[0, 2])
        .u(cx(), &[2, 0])
        .u(cx(), &[2, 1])
        .u(tdg(), &[0])
        .u(tdg(), &[1])
        .u(t(), &[2])
        .u(cx(), &[2, 0])
        .u(cx(), &[2, 1])
        .u(h(), &[2]);
    compare_sides(&lhs, &rtof_2_rhs())
}

fn rtof_2b_trial(_rng: &mut ChaCha8Rng) -> f64 {
    let lhs = Side::new(3, 3)
        .u(h(), &[2])
        .u(cx(), &[2, 0])
        .u(cx(), &[2, 1])
        .u(tdg(), &[0])
        .u(tdg(), &[1])
        .u(t(), &[2])
        .u(cx(), &[2, 0])
        .u(cx(), &[2, 1])
        .u(cx(), &[0, 2])
        .u(cx(), &[1, 2])
        .u(t(), &[2])
        .u(h(), &[2]);
    compare_sides(&lhs, &rtof_2_rhs())
}

fn rtof_3_trial(_rng: &mut ChaCha8Rng) -> f64 {
    // The doubly-controlled −iX block, helper wire last.
    let lhs = Side::new(4, 3)
        .u(h(), &[2])
        .u(cx(), &[2, 1])
        .u(cx(), &[0, 3])
        .u(cx(), &[2, 0])
        .u(cx(), &[1, 3])
        .u(tdg(), &[0])
        .u(tdg(), &[1])
        .u(t(), &[2])
        .u(t(), &[3])
        .u(cx(), &[1, 3])
        .u(cx(), &[2, 0])
        .u(cx(), &[0, 3])
        .u(cx(), &[2, 1])
        .u(h(), &[2]);
    let rhs = Side::new(3, 3)
        .u(cnz(2), &[0, 1, 2])
        .u(s(), &[2])
        .u(cnx(2), &[0, 1, 2])
        .u(sdg(), &[2]);
    let target = rhs.branches().remove(&0).expect("measure-free side has one branch");
    compare_to_unitary(&lhs, &target)
}

fn key_equation_trial(rng: &mut ChaCha8Rng) -> f64 {
    let mut dev: f64 = 0.0;
    for n in 1..=3usize {
        for m in 1..=2usize {
            let u = random_unitary(1 << m, rng);
            let anc = n + m;
            let ctrl_and_anc: Vec<usize> = (0..n).chain([anc]).collect();
            let anc_and_block: Vec<usize> = [anc].into_iter().chain(n..n + m).collect();
            let ctrls: Vec<usize> = (0..n).collect();
            let lhs = Side::new(n + m + 1, n + m)
                .u(cnx(n), &ctrl_and_anc)
                .u(controlled(&u, 1), &anc_and_block)
                .u(h(), &[anc])
                .m(anc)
                .cond(0, true, cnz(n - 1), &ctrls);
            let target = controlled(&u, n);
            dev = dev.max(compare_to_unitary(&lhs, &target));
        }
    }
    dev
}

fn key_equation_variant_trial(_rng: &mut ChaCha8Rng) -> f64 {
    let mut dev: f64 = 0.0;
    for n in 1..=3usize {
        for m in 1..=2usize {
            let anc = n + m;
            let n_bus_and_anc: Vec<usize> = (0..n).chain([anc]).collect();
            let m_bus_and_anc: Vec<usize> = (n..n + m).chain([anc]).collect();
            let n_bus: Vec<usize> = (0..n).collect();
            let lhs = Side::new(n + m + 1, n + m)
                .u(cnx(n), &n_bus_and_anc)
                .u(h(), &[anc])
                .u(x(), &[anc])
                .u(cnx(m), &m_bus_and_anc)
                .m(anc)
                .cond(0, false, cnz(n - 1), &n_bus);
            let target = cnz(n + m - 1);
            dev = dev.max(compare_to_unitary(&lhs, &target));
        }
    }
    dev
}

/// A named identity with a one-trial checker.
pub struct Identity {
    pub name: &'static str,
    pub summary: &'static str,
    run: fn(&mut ChaCha8Rng) -> f64,
}

/// Every identity in the suite.
pub static IDENTITIES: &[Identity] = &[
    Identity {
        name: "pauli-conversion",
        summary: "CⁿX equals CⁿZ in an H frame and CⁿY in an S frame (n = 1..3)",
        run: pauli_conversion_trial,
    },
    Identity {
        name: "ket0-phase",
        summary: "a phase gate on a |0⟩ wire is a no-op",
        run: ket0_phase_trial,
    },
    Identity {
        name: "ket0-control",
        summary: "a gate controlled by a |0⟩ wire is a no-op",
        run: ket0_control_trial,
    },
    Identity {
        name: "phase-measure",
        summary: "a phase gate before a Z-measurement is a per-branch phase",
        run: phase_measure_trial,
    },
    Identity {
        name: "control-measure",
        summary: "a control read then measured can be measured first and classically applied",
        run: control_measure_trial,
    },
    Identity {
        name: "controlo-measure",
        summary: "the open-control version of control-measure",
        run: controlo_measure_trial,
    },
    Identity {
        name: "rtof-1a",
        summary: "the 3-CNOT relative-phase Toffoli factors as CCX times one controlled phase",
        run: rtof_1a_trial,
    },
    Identity {
        name: "rtof-1b",
        summary: "the T↔T† mirror of rtof-1a, with the inverse phase factor",
        run: rtof_1b_trial,
    },
    Identity {
        name: "rtof-2a",
        summary: "the AND-gadget core is CCX with S† phases on both open-control sectors",
        run: rtof_2a_trial,
    },
    Identity {
        name: "rtof-2b",
        summary: "the reversed-order AND-gadget core equals the same factorization",
        run: rtof_2b_trial,
    },
    Identity {
        name: "rtof-3",
        summary: "the helper-wire block is a doubly-controlled −iX",
        run: rtof_3_trial,
    },
    Identity {
        name: "key-equation",
        summary: "AND-compute, controlled-U, X-basis uncompute with CZ correction adds a control",
        run: key_equation_trial,
    },
    Identity {
        name: "key-equation-variant",
        summary: "two fan-ins sharing one ancilla merge control buses into one long Z",
        run: key_equation_variant_trial,
    },
];

/// Look up an identity by name.
pub fn identity(name: &str) -> Option<&'static Identity> {
    IDENTITIES.iter().find(|i| i.name == name)
}

/// A name that matched nothing in [`IDENTITIES`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown identity `{name}`")]
pub struct UnknownIdentity {
    pub name: String,
}

/// Outcome of checking one identity over a number of sampled instances.
#[derive(Debug, Clone)]
pub struct IdentityVerdict {
    pub name: &'static str,
    pub samples: usize,
    /// Worst deviation over all samples; numerically zero when the identity
    /// holds.
    pub max_deviation: f64,
}

/// Run `samples` trials of the named identity, deterministically in `seed`.
/// Fixed identities re-check their whole instance grid each trial; sampled
/// ones draw fresh random angles or unitaries.
pub fn verify_identity(
    name: &str,
    samples: usize,
    seed: u64,
) -> Result<IdentityVerdict, UnknownIdentity> {
    let id = identity(name).ok_or_else(|| UnknownIdentity { name: name.to_string() })?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut max_deviation: f64 = 0.0;
    for _ in 0..samples {
        max_deviation = max_deviation.max((id.run)(&mut rng));
    }
    Ok(IdentityVerdict { name: id.name, samples, max_deviation })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_identities_hold() {
        for id in IDENTITIES {
            let verdict = verify_identity(id.name, 5, 7).unwrap();
            assert!(
                verdict.max_deviation < 1e-9,
                "{}: deviation {:.3e}",
                id.name,
                verdict.max_deviation
            );
        }
    }

    #[test]
    fn names_are_unique_and_lookup_works() {
        let mut names: Vec<_> = IDENTITIES.iter().map(|i| i.name).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), IDENTITIES.len());
        assert!(identity("rtof-3").is_some());
        assert_eq!(verify_identity("nope", 1, 0).unwrap_err().name, "nope");
    }

    #[test]
    fn comparator_flags_a_broken_identity() {
        // S on a |0⟩ wire is a no-op, but S on a data wire is not.
        let lhs = Side::new(2, 2).u(s(), &[1]);
        let rhs = Side::new(2, 2);
        assert!(compare_sides(&lhs, &rhs) > 0.5);
    }

    #[test]
    fn embed_matches_direct_kronecker() {
        // CX embedded on (0, 2) of three wires, checked entry by entry.
        let full = embed(&cx(), &[0, 2], 3);
        for col in 0..8 {
            let (c0, c1, c2) = (col >> 2 & 1, col >> 1 & 1, col & 1);
            let row = if c0 == 1 { (c0 << 2) | (c1 << 1) | (c2 ^ 1) } else { col };
            for r in 0..8 {
                let want = if r == row { one() } else { zero() };
                assert_eq!(full[(r, col)], want, "col {col} row {r}");
            }
        }
    }
}
