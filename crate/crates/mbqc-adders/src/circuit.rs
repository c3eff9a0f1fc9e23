//! Gate-level intermediate representation and the two adder families.
//!
//! The IR is a flat, ordered gate list over logical qubits. Parallelism is
//! recovered by scheduling ([`toffoli_layer_count`]), not stored. The
//! classical reversible semantics ([`eval_circuit`]) is the oracle every
//! downstream stage is verified against.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// The six gate kinds the compiler knows how to lay out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GateKind {
    #[serde(rename = "NOT")]
    Not,
    #[serde(rename = "CNOT")]
    Cnot,
    #[serde(rename = "TOFFOLI")]
    Toffoli,
    /// Diagonal three-qubit phase gate (CCZ). The IR only ever places it in
    /// contexts that are classically equivalent to a Toffoli, so
    /// [`eval_circuit`] gives it the Toffoli's classical action.
    #[serde(rename = "TOFFOLI_PHASE")]
    ToffoliPhase,
    #[serde(rename = "SWAP")]
    Swap,
    #[serde(rename = "WIRE")]
    Wire,
}

impl GateKind {
    /// Number of operands the kind takes.
    pub fn arity(self) -> usize {
        match self {
            GateKind::Not | GateKind::Wire => 1,
            GateKind::Cnot | GateKind::Swap => 2,
            GateKind::Toffoli | GateKind::ToffoliPhase => 3,
        }
    }

    /// Non-Clifford gates occupy measurement-round layers; Clifford gates
    /// are free.
    pub fn is_toffoli_like(self) -> bool {
        matches!(self, GateKind::Toffoli | GateKind::ToffoliPhase)
    }

    pub fn name(self) -> &'static str {
        match self {
            GateKind::Not => "NOT",
            GateKind::Cnot => "CNOT",
            GateKind::Toffoli => "TOFFOLI",
            GateKind::ToffoliPhase => "TOFFOLI_PHASE",
            GateKind::Swap => "SWAP",
            GateKind::Wire => "WIRE",
        }
    }

    pub fn all() -> [GateKind; 6] {
        [
            GateKind::Not,
            GateKind::Cnot,
            GateKind::Toffoli,
            GateKind::ToffoliPhase,
            GateKind::Swap,
            GateKind::Wire,
        ]
    }
}

/// One gate application. Operand order is semantic: controls first, target
/// last for CNOT/TOFFOLI/TOFFOLI_PHASE.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Gate {
    pub kind: GateKind,
    pub operands: Vec<usize>,
}

impl Gate {
    pub fn new(kind: GateKind, operands: Vec<usize>) -> Result<Self> {
        let gate = Gate { kind, operands };
        gate.check_arity()?;
        Ok(gate)
    }

    fn check_arity(&self) -> Result<()> {
        if self.operands.len() != self.kind.arity() {
            return Err(Error::InvalidGate(format!(
                "{} takes {} operands, got {}",
                self.kind.name(),
                self.kind.arity(),
                self.operands.len()
            )));
        }
        for (i, &q) in self.operands.iter().enumerate() {
            if self.operands[..i].contains(&q) {
                return Err(Error::InvalidGate(format!(
                    "{} operands must be distinct, got {:?}",
                    self.kind.name(),
                    self.operands
                )));
            }
        }
        Ok(())
    }

    fn check_range(&self, n_qubits: usize) -> Result<()> {
        for &q in &self.operands {
            if q >= n_qubits {
                return Err(Error::InvalidGate(format!(
                    "operand {} out of range for {} qubits",
                    q, n_qubits
                )));
            }
        }
        Ok(())
    }
}

/// Register roles of a circuit's qubits.
///
/// `a_bits`/`b_bits` are the addend registers (LSB first). After running an
/// adder, `b_bits` holds the low `n` sum bits and `carry_out` the top bit.
/// `ancilla_bits` must return to 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegisterMap {
    pub a_bits: Vec<usize>,
    pub b_bits: Vec<usize>,
    pub ancilla_bits: Vec<usize>,
    pub carry_out: usize,
}

impl RegisterMap {
    /// Roles must be disjoint and cover exactly the declared qubits.
    fn validate(&self, n_qubits: usize) -> Result<()> {
        let mut seen = vec![false; n_qubits];
        let mut mark = |q: usize| -> Result<()> {
            if q >= n_qubits {
                return Err(Error::InvalidGate(format!(
                    "register map index {} out of range",
                    q
                )));
            }
            if seen[q] {
                return Err(Error::InvalidGate(format!(
                    "register map roles overlap at qubit {}",
                    q
                )));
            }
            seen[q] = true;
            Ok(())
        };
        for &q in self
            .a_bits
            .iter()
            .chain(self.b_bits.iter())
            .chain(self.ancilla_bits.iter())
            .chain(std::iter::once(&self.carry_out))
        {
            mark(q)?;
        }
        if let Some(q) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidGate(format!(
                "register map does not cover qubit {}",
                q
            )));
        }
        Ok(())
    }
}

/// A reversible circuit over `n_qubits` logical qubits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Circuit {
    pub n_bits: usize,
    pub n_qubits: usize,
    pub register_map: RegisterMap,
    pub gates: Vec<Gate>,
}

impl Circuit {
    pub fn validate(&self) -> Result<()> {
        self.register_map.validate(self.n_qubits)?;
        if self.register_map.a_bits.len() != self.n_bits
            || self.register_map.b_bits.len() != self.n_bits
        {
            return Err(Error::InvalidGate(format!(
                "register map width disagrees with n_bits = {}",
                self.n_bits
            )));
        }
        for gate in &self.gates {
            gate.check_arity()?;
            gate.check_range(self.n_qubits)?;
        }
        Ok(())
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let circuit: Circuit = serde_json::from_str(text)?;
        circuit.validate()?;
        Ok(circuit)
    }
}

/// Apply the circuit's classical reversible semantics to a bit register.
///
/// TOFFOLI_PHASE acts like TOFFOLI here; see [`GateKind::ToffoliPhase`].
pub fn apply_to_bits(circuit: &Circuit, bits: &mut [bool]) {
    for gate in &circuit.gates {
        apply_gate(gate, bits);
    }
}

fn apply_gate(gate: &Gate, bits: &mut [bool]) {
    let ops = &gate.operands;
    match gate.kind {
        GateKind::Not => bits[ops[0]] = !bits[ops[0]],
        GateKind::Wire => {}
        GateKind::Cnot => {
            if bits[ops[0]] {
                bits[ops[1]] = !bits[ops[1]];
            }
        }
        GateKind::Swap => bits.swap(ops[0], ops[1]),
        GateKind::Toffoli | GateKind::ToffoliPhase => {
            if bits[ops[0]] && bits[ops[1]] {
                bits[ops[2]] = !bits[ops[2]];
            }
        }
    }
}

/// Run the circuit on basis inputs `a`, `b` and read back the sum register
/// (b-bits plus carry-out).
pub fn eval_circuit(circuit: &Circuit, a: u128, b: u128) -> Result<u128> {
    let n = circuit.n_bits;
    if n < 128 && (a >> n != 0 || b >> n != 0) {
        return Err(Error::Domain(format!(
            "inputs must satisfy 0 <= a,b < 2^{}, got a={}, b={}",
            n, a, b
        )));
    }
    let mut bits = vec![false; circuit.n_qubits];
    for (i, &q) in circuit.register_map.a_bits.iter().enumerate() {
        bits[q] = (a >> i) & 1 == 1;
    }
    for (i, &q) in circuit.register_map.b_bits.iter().enumerate() {
        bits[q] = (b >> i) & 1 == 1;
    }
    apply_to_bits(circuit, &mut bits);
    let mut sum: u128 = 0;
    for (i, &q) in circuit.register_map.b_bits.iter().enumerate() {
        if bits[q] {
            sum |= 1 << i;
        }
    }
    if bits[circuit.register_map.carry_out] {
        sum |= 1 << n;
    }
    Ok(sum)
}

/// Count of set bits in the binary expansion of `n`.
pub fn hamming_weight(n: u64) -> u32 {
    n.count_ones()
}

/// Greedy topological layering where only TOFFOLI/TOFFOLI_PHASE gates occupy
/// layers; Clifford gates impose dependencies at zero layer cost.
pub fn toffoli_layer_count(circuit: &Circuit) -> usize {
    toffoli_layers(circuit).into_iter().max().unwrap_or(0)
}

/// Per-gate Toffoli layer index (0 for Clifford gates that precede any
/// Toffoli on their wires).
pub fn toffoli_layers(circuit: &Circuit) -> Vec<usize> {
    let mut frontier = vec![0usize; circuit.n_qubits];
    let mut layers = Vec::with_capacity(circuit.gates.len());
    for gate in &circuit.gates {
        let ready = gate
            .operands
            .iter()
            .map(|&q| frontier[q])
            .max()
            .unwrap_or(0);
        let layer = if gate.kind.is_toffoli_like() {
            ready + 1
        } else {
            ready
        };
        for &q in &gate.operands {
            frontier[q] = layer;
        }
        layers.push(layer);
    }
    layers
}

// ---------------------------------------------------------------------------
// Ripple-carry adder (MAJ/UMA construction, one carry-out ancilla)
// ---------------------------------------------------------------------------

/// Qubit index assignment for the ripple adder.
///
/// Track order is `[c0, a_0, b_0, a_1, b_1, ..., z]` so that each MAJ/UMA
/// block touches a small window of adjacent tracks.
struct RippleWires {
    n: usize,
}

impl RippleWires {
    fn c0(&self) -> usize {
        0
    }
    fn a(&self, i: usize) -> usize {
        1 + 2 * i
    }
    fn b(&self, i: usize) -> usize {
        2 + 2 * i
    }
    fn z(&self) -> usize {
        1 + 2 * self.n
    }
}

/// Build the in-place ripple-carry adder: |a>|b>|0..> -> |a>|(a+b) mod 2^(n+1)>.
///
/// The carry chain is a sequence of MAJ blocks followed by the mirrored UMA
/// blocks, giving a linear chain of 2n Toffoli gates.
pub fn build_ripple_adder(n: usize) -> Result<Circuit> {
    if n == 0 {
        return Err(Error::InvalidWidth(0));
    }
    let w = RippleWires { n };
    let n_qubits = 2 * n + 2;
    let mut gates = Vec::new();
    let maj = |gates: &mut Vec<Gate>, c: usize, b: usize, a: usize| {
        gates.push(Gate::new(GateKind::Cnot, vec![a, b]).unwrap());
        gates.push(Gate::new(GateKind::Cnot, vec![a, c]).unwrap());
        gates.push(Gate::new(GateKind::Toffoli, vec![c, b, a]).unwrap());
    };
    let uma = |gates: &mut Vec<Gate>, c: usize, b: usize, a: usize| {
        gates.push(Gate::new(GateKind::Toffoli, vec![c, b, a]).unwrap());
        gates.push(Gate::new(GateKind::Cnot, vec![a, c]).unwrap());
        gates.push(Gate::new(GateKind::Cnot, vec![c, b]).unwrap());
    };

    let carry_in = |i: usize| if i == 0 { w.c0() } else { w.a(i - 1) };
    for i in 0..n {
        maj(&mut gates, carry_in(i), w.b(i), w.a(i));
    }
    gates.push(Gate::new(GateKind::Cnot, vec![w.a(n - 1), w.z()]).unwrap());
    for i in (0..n).rev() {
        uma(&mut gates, carry_in(i), w.b(i), w.a(i));
    }

    let circuit = Circuit {
        n_bits: n,
        n_qubits,
        register_map: RegisterMap {
            a_bits: (0..n).map(|i| w.a(i)).collect(),
            b_bits: (0..n).map(|i| w.b(i)).collect(),
            ancilla_bits: vec![w.c0()],
            carry_out: w.z(),
        },
        gates,
    };
    circuit.validate()?;
    Ok(circuit)
}

// ---------------------------------------------------------------------------
// Carry-lookahead adder (in-place, propagate/generate tree)
// ---------------------------------------------------------------------------

/// Tree cell coordinate: level `t >= 1`, index `j >= 1`.
/// Level-0 cells are the propagate wires themselves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Cell {
    t: u32,
    j: usize,
}

fn floor_log2(x: usize) -> u32 {
    debug_assert!(x >= 1);
    usize::BITS - 1 - x.leading_zeros()
}

/// Rounds of the Brent-Kung-style carry network for width `m`:
/// (G-round Toffolis, C-round Toffolis, needed tree cells in compute order).
///
/// Wire naming inside the returned ops: `P(0, i)` is propagate wire `i`,
/// `Z(i)` is the carry wire holding the generate/carry for position `i`.
#[derive(Debug, Clone, Copy)]
enum NetOp {
    /// TOFF(pcell(a), pcell(b), pcell(dst)) — P-round product.
    P { a: (u32, usize), b: (u32, usize), dst: Cell },
    /// TOFF(Z(zc), pcell(p), Z(zt)) — G- or C-round carry update.
    Carry { zc: usize, p: (u32, usize), zt: usize },
}

/// Emit the forward carry network for width `m` as an ordered op list.
/// The inverse network is the reversed list (all ops are self-inverse).
fn carry_network_ops(m: usize) -> Vec<NetOp> {
    if m < 2 {
        return Vec::new();
    }
    let lg = floor_log2(m);
    // Carry-update rounds first, to learn which tree cells are needed.
    let mut g_rounds = Vec::new();
    for t in 1..=lg {
        let span = 1usize << t;
        let mut j = 0usize;
        while span * j + span <= m {
            g_rounds.push(NetOp::Carry {
                zc: span * j + span / 2,
                p: (t - 1, 2 * j + 1),
                zt: span * j + span,
            });
            j += 1;
        }
    }
    let mut c_rounds = Vec::new();
    let c_top = floor_log2(2 * m / 3).max(1).min(lg + 1);
    for t in (1..=c_top).rev() {
        let span = 1usize << t;
        let mut j = 1usize;
        while span * j + span / 2 <= m {
            c_rounds.push(NetOp::Carry {
                zc: span * j,
                p: (t - 1, 2 * j),
                zt: span * j + span / 2,
            });
            j += 1;
        }
    }
    // Transitive closure of needed tree cells (level >= 1).
    let mut needed: std::collections::BTreeSet<Cell> = std::collections::BTreeSet::new();
    let mut frontier: Vec<Cell> = Vec::new();
    for op in g_rounds.iter().chain(c_rounds.iter()) {
        if let NetOp::Carry { p: (t, j), .. } = *op {
            if t >= 1 {
                frontier.push(Cell { t, j });
            }
        }
    }
    while let Some(cell) = frontier.pop() {
        if needed.insert(cell) && cell.t >= 2 {
            frontier.push(Cell { t: cell.t - 1, j: 2 * cell.j });
            frontier.push(Cell { t: cell.t - 1, j: 2 * cell.j + 1 });
        }
    }
    // P-rounds ascending by level, then G, C, and the inverse P-rounds.
    let mut ops = Vec::new();
    let mut p_ops = Vec::new();
    for cell in &needed {
        p_ops.push(NetOp::P {
            a: (cell.t - 1, 2 * cell.j),
            b: (cell.t - 1, 2 * cell.j + 1),
            dst: *cell,
        });
    }
    ops.extend(p_ops.iter().copied());
    ops.extend(g_rounds);
    ops.extend(c_rounds);
    ops.extend(p_ops.into_iter().rev());
    ops
}

/// Qubit index assignment for the carry-lookahead adder.
///
/// Track order interleaves each bit's `a_i, b_i, z_{i+1}` and places every
/// tree cell near the carry wires it partners with, keeping routing local.
struct QclaWires {
    a: Vec<usize>,
    b: Vec<usize>,
    /// z[i] (1-based carry index) at `z[i - 1]`.
    z: Vec<usize>,
    tree: std::collections::BTreeMap<Cell, usize>,
    n_qubits: usize,
}

fn qcla_wires(n: usize) -> QclaWires {
    // Union of tree cells needed by the forward (width n) and reverse
    // (width n-1) networks.
    let mut cells: std::collections::BTreeSet<Cell> = std::collections::BTreeSet::new();
    for m in [n, n - 1] {
        for op in carry_network_ops(m) {
            if let NetOp::P { dst, .. } = op {
                cells.insert(dst);
            }
        }
    }
    // home(t, j): the carry index at the center of the cell's span.
    let home = |c: &Cell| -> usize { (1usize << (c.t - 1)) * (2 * c.j + 1) };
    let mut by_home: std::collections::BTreeMap<usize, Vec<Cell>> = std::collections::BTreeMap::new();
    for cell in cells {
        by_home.entry(home(&cell).min(n)).or_default().push(cell);
    }
    let mut a = Vec::new();
    let mut b = Vec::new();
    let mut z = Vec::new();
    let mut tree = std::collections::BTreeMap::new();
    let mut next = 0usize;
    for i in 0..n {
        a.push(next);
        b.push(next + 1);
        z.push(next + 2);
        next += 3;
        // Tree cells homed at carry index i+1 sit right after z_{i+1}.
        if let Some(cells) = by_home.get(&(i + 1)) {
            for cell in cells {
                tree.insert(*cell, next);
                next += 1;
            }
        }
    }
    QclaWires { a, b, z, tree, n_qubits: next }
}

/// Build the in-place carry-lookahead adder with the same I/O contract as
/// [`build_ripple_adder`] but a Theta(log n) Toffoli schedule.
pub fn build_qcla_adder(n: usize) -> Result<Circuit> {
    if n == 0 {
        return Err(Error::InvalidWidth(0));
    }
    let w = qcla_wires(n);
    let mut gates: Vec<Gate> = Vec::new();
    let toff = |c0: usize, c1: usize, t: usize| Gate::new(GateKind::Toffoli, vec![c0, c1, t]).unwrap();
    let cnot = |c: usize, t: usize| Gate::new(GateKind::Cnot, vec![c, t]).unwrap();
    let not = |t: usize| Gate::new(GateKind::Not, vec![t]).unwrap();

    // z_{i+1} <- g_i, then b_i <- p_i.
    for i in 0..n {
        gates.push(toff(w.a[i], w.b[i], w.z[i]));
    }
    for i in 0..n {
        gates.push(cnot(w.a[i], w.b[i]));
    }
    // Forward carry network on (p = b, z): z_i becomes carry c_i.
    let pcell = |w: &QclaWires, lvl: u32, j: usize| -> usize {
        if lvl == 0 {
            w.b[j]
        } else {
            w.tree[&Cell { t: lvl, j }]
        }
    };
    let emit = |gates: &mut Vec<Gate>, w: &QclaWires, op: NetOp| match op {
        NetOp::P { a, b, dst } => {
            gates.push(toff(pcell(w, a.0, a.1), pcell(w, b.0, b.1), w.tree[&dst]))
        }
        NetOp::Carry { zc, p, zt } => {
            gates.push(toff(w.z[zc - 1], pcell(w, p.0, p.1), w.z[zt - 1]))
        }
    };
    for op in carry_network_ops(n) {
        emit(&mut gates, &w, op);
    }
    // b_i <- s_i = p_i xor c_i (b_0 is already s_0; z_n stays as s_n).
    for i in 1..n {
        gates.push(cnot(w.z[i - 1], w.b[i]));
    }
    // Reverse pass erases carries c_1..c_{n-1} using propagate wires
    // q_i = NOT(a_i xor s_i).
    if n >= 2 {
        for i in 0..=n - 2 {
            gates.push(cnot(w.a[i], w.b[i]));
            gates.push(not(w.b[i]));
        }
        for op in carry_network_ops(n - 1).into_iter().rev() {
            emit(&mut gates, &w, op);
        }
        for i in 0..=n - 2 {
            gates.push(not(w.b[i]));
            gates.push(toff(w.a[i], w.b[i], w.z[i]));
        }
        for i in 0..=n - 2 {
            gates.push(cnot(w.a[i], w.b[i]));
        }
    }

    let mut ancilla: Vec<usize> = w.z[..n - 1].to_vec();
    ancilla.extend(w.tree.values().copied());
    let circuit = Circuit {
        n_bits: n,
        n_qubits: w.n_qubits,
        register_map: RegisterMap {
            a_bits: w.a.clone(),
            b_bits: w.b.clone(),
            ancilla_bits: ancilla,
            carry_out: w.z[n - 1],
        },
        gates,
    };
    circuit.validate()?;
    Ok(circuit)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exhaustive_check(circuit: &Circuit) {
        let n = circuit.n_bits;
        for a in 0..(1u128 << n) {
            for b in 0..(1u128 << n) {
                let sum = eval_circuit(circuit, a, b).unwrap();
                assert_eq!(sum, (a + b) % (1 << (n + 1)), "n={} a={} b={}", n, a, b);
            }
        }
    }

    fn ancilla_clean(circuit: &Circuit, a: u128, b: u128) -> bool {
        let mut bits = vec![false; circuit.n_qubits];
        for (i, &q) in circuit.register_map.a_bits.iter().enumerate() {
            bits[q] = (a >> i) & 1 == 1;
        }
        for (i, &q) in circuit.register_map.b_bits.iter().enumerate() {
            bits[q] = (b >> i) & 1 == 1;
        }
        apply_to_bits(circuit, &mut bits);
        circuit.register_map.ancilla_bits.iter().all(|&q| !bits[q])
    }

    #[test]
    fn ripple_small_examples() {
        let c = build_ripple_adder(4).unwrap();
        assert_eq!(eval_circuit(&c, 3, 5).unwrap(), 8);
        assert_eq!(eval_circuit(&c, 15, 1).unwrap(), 16);
        assert_eq!(eval_circuit(&c, 0, 0).unwrap(), 0);
    }

    #[test]
    fn qcla_small_examples() {
        let c = build_qcla_adder(4).unwrap();
        assert_eq!(eval_circuit(&c, 3, 5).unwrap(), 8);
        let c2 = build_qcla_adder(2).unwrap();
        assert_eq!(eval_circuit(&c2, 1, 1).unwrap(), 2);
    }

    #[test]
    fn zero_width_rejected() {
        assert!(matches!(build_ripple_adder(0), Err(Error::InvalidWidth(0))));
        assert!(matches!(build_qcla_adder(0), Err(Error::InvalidWidth(0))));
    }

    #[test]
    fn out_of_range_inputs_rejected() {
        let c = build_ripple_adder(3).unwrap();
        assert!(matches!(eval_circuit(&c, 8, 0), Err(Error::Domain(_))));
        assert!(matches!(eval_circuit(&c, 0, 9), Err(Error::Domain(_))));
    }

    #[test]
    fn exhaustive_both_adders_up_to_4() {
        for n in 1..=4 {
            exhaustive_check(&build_ripple_adder(n).unwrap());
            exhaustive_check(&build_qcla_adder(n).unwrap());
        }
    }

    #[test]
    fn qcla_exhaustive_n8() {
        let c = build_qcla_adder(8).unwrap();
        for a in 0..256u128 {
            for b in 0..256u128 {
                assert_eq!(eval_circuit(&c, a, b).unwrap(), (a + b) % 512);
            }
        }
    }

    #[test]
    fn cross_oracle_n3() {
        let r = build_ripple_adder(3).unwrap();
        let q = build_qcla_adder(3).unwrap();
        for a in 0..8 {
            for b in 0..8 {
                assert_eq!(
                    eval_circuit(&r, a, b).unwrap(),
                    eval_circuit(&q, a, b).unwrap()
                );
            }
        }
    }

    #[test]
    fn ancillae_restored() {
        for n in [1, 2, 3, 4, 5, 8] {
            let r = build_ripple_adder(n).unwrap();
            let q = build_qcla_adder(n).unwrap();
            let top = 1u128 << n;
            for (a, b) in [(0, 0), (top - 1, top - 1), (1, top - 1), (top / 2, top / 2 + 1)] {
                let b = b % top;
                assert!(ancilla_clean(&r, a, b), "ripple n={} a={} b={}", n, a, b);
                assert!(ancilla_clean(&q, a, b), "qcla n={} a={} b={}", n, a, b);
            }
        }
    }

    #[test]
    fn reversibility() {
        let c = build_qcla_adder(3).unwrap();
        let mut inverse = c.clone();
        inverse.gates.reverse();
        let mut bits = vec![false; c.n_qubits];
        bits[c.register_map.a_bits[1]] = true;
        bits[c.register_map.b_bits[0]] = true;
        bits[c.register_map.b_bits[2]] = true;
        let orig = bits.clone();
        apply_to_bits(&c, &mut bits);
        apply_to_bits(&inverse, &mut bits);
        assert_eq!(bits, orig);
    }

    #[test]
    fn toffoli_layer_basics() {
        let empty = Circuit {
            n_bits: 1,
            n_qubits: 4,
            register_map: RegisterMap {
                a_bits: vec![0],
                b_bits: vec![1],
                ancilla_bits: vec![2],
                carry_out: 3,
            },
            gates: vec![],
        };
        assert_eq!(toffoli_layer_count(&empty), 0);

        let mut single = empty.clone();
        single.gates = vec![Gate::new(GateKind::Toffoli, vec![0, 1, 2]).unwrap()];
        assert_eq!(toffoli_layer_count(&single), 1);

        let mut parallel = empty.clone();
        parallel.n_qubits = 6;
        parallel.register_map.ancilla_bits = vec![2, 4, 5];
        parallel.gates = vec![
            Gate::new(GateKind::Toffoli, vec![0, 1, 2]).unwrap(),
            Gate::new(GateKind::Toffoli, vec![3, 4, 5]).unwrap(),
        ];
        assert_eq!(toffoli_layer_count(&parallel), 1);
    }

    #[test]
    fn ripple_layers_linear() {
        let counts: Vec<usize> = [4, 8, 16, 32]
            .iter()
            .map(|&n| toffoli_layer_count(&build_ripple_adder(n).unwrap()))
            .collect();
        for pair in counts.windows(2) {
            let ratio = pair[1] as f64 / pair[0] as f64;
            assert!((ratio - 2.0).abs() <= 0.25, "ratio {}", ratio);
        }
        assert!(toffoli_layer_count(&build_ripple_adder(8).unwrap()) >= 8);
    }

    #[test]
    fn qcla_layers_logarithmic() {
        let l8 = toffoli_layer_count(&build_qcla_adder(8).unwrap());
        let l128 = toffoli_layer_count(&build_qcla_adder(128).unwrap());
        assert!(
            l128 <= 4 * l8,
            "expected logarithmic growth, got L(8)={} L(128)={}",
            l8,
            l128
        );
    }

    #[test]
    fn hamming_weight_examples() {
        assert_eq!(hamming_weight(8), 1);
        assert_eq!(hamming_weight(7), 3);
        assert_eq!(hamming_weight(0), 0);
    }

    #[test]
    fn circuit_json_round_trip() {
        let c = build_qcla_adder(3).unwrap();
        let json = c.to_json().unwrap();
        let back = Circuit::from_json(&json).unwrap();
        assert_eq!(c, back);
        // Stable field names.
        assert!(json.contains("\"n_bits\""));
        assert!(json.contains("\"n_qubits\""));
        assert!(json.contains("\"register_map\""));
        assert!(json.contains("\"TOFFOLI\""));
    }

    #[test]
    fn gate_invariants_enforced() {
        assert!(Gate::new(GateKind::Cnot, vec![1, 1]).is_err());
        assert!(Gate::new(GateKind::Toffoli, vec![0, 1]).is_err());
        let mut c = build_ripple_adder(2).unwrap();
        c.gates.push(Gate {
            kind: GateKind::Not,
            operands: vec![99],
        });
        assert!(c.validate().is_err());
    }
}
