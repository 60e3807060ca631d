//! Phase-annotated conversion circuits and their text/JSON formats.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gate::{CliffordGate, GateKind};
use crate::pauli::{PauliKind, PauliOperator};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Phase {
    #[serde(rename = "U_source")]
    SourceIabc,
    #[serde(rename = "A_diff")]
    ADiff,
    #[serde(rename = "C_diff")]
    CDiff,
    #[serde(rename = "B_diff")]
    BDiff,
    #[serde(rename = "U_target_inverse")]
    TargetInverse,
}

impl Phase {
    pub const ALL: [Phase; 5] = [
        Phase::SourceIabc,
        Phase::ADiff,
        Phase::CDiff,
        Phase::BDiff,
        Phase::TargetInverse,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Phase::SourceIabc => "U_source",
            Phase::ADiff => "A_diff",
            Phase::CDiff => "C_diff",
            Phase::BDiff => "B_diff",
            Phase::TargetInverse => "U_target_inverse",
        }
    }

    // A and C gates share one ordering block.
    fn block(self) -> u8 {
        match self {
            Phase::SourceIabc => 0,
            Phase::ADiff | Phase::CDiff => 1,
            Phase::BDiff => 2,
            Phase::TargetInverse => 3,
        }
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Step {
    pub gate: CliffordGate,
    pub phase: Phase,
}

/// Ordered gate list on `n` qubits with a phase label per gate.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConversionCircuit {
    n: usize,
    steps: Vec<Step>,
}

impl ConversionCircuit {
    pub fn new(n: usize) -> Self {
        ConversionCircuit {
            n,
            steps: Vec::new(),
        }
    }

    pub fn from_steps(n: usize, steps: Vec<Step>) -> Result<Self> {
        let mut c = Self::new(n);
        for s in steps {
            c.push(s.gate, s.phase)?;
        }
        Ok(c)
    }

    pub fn from_gates(n: usize, gates: &[CliffordGate], phase: Phase) -> Result<Self> {
        let mut c = Self::new(n);
        c.extend(gates, phase)?;
        Ok(c)
    }

    pub fn push(&mut self, gate: CliffordGate, phase: Phase) -> Result<()> {
        gate.check_range(self.n)?;
        self.steps.push(Step { gate, phase });
        Ok(())
    }

    pub fn extend(&mut self, gates: &[CliffordGate], phase: Phase) -> Result<()> {
        for g in gates {
            self.push(*g, phase)?;
        }
        Ok(())
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn gates(&self) -> Vec<CliffordGate> {
        self.steps.iter().map(|s| s.gate).collect()
    }

    pub fn gates_in(&self, phase: Phase) -> Vec<CliffordGate> {
        self.steps
            .iter()
            .filter(|s| s.phase == phase)
            .map(|s| s.gate)
            .collect()
    }

    pub fn two_qubit_count(&self) -> usize {
        self.steps.iter().filter(|s| s.gate.is_two_qubit()).count()
    }

    /// Labels appear in phase order, with A and C gates allowed to interleave.
    pub fn phases_in_order(&self) -> bool {
        self.steps
            .windows(2)
            .all(|w| w[0].phase.block() <= w[1].phase.block())
    }

    /// Gates reversed and inverted. Source and target labels swap.
    pub fn inverse(&self) -> ConversionCircuit {
        let mut steps = Vec::with_capacity(self.steps.len());
        for s in self.steps.iter().rev() {
            let phase = match s.phase {
                Phase::SourceIabc => Phase::TargetInverse,
                Phase::TargetInverse => Phase::SourceIabc,
                other => other,
            };
            for g in s.gate.inverse() {
                steps.push(Step { gate: g, phase });
            }
        }
        ConversionCircuit { n: self.n, steps }
    }

    pub fn apply(&self, p: &PauliOperator) -> Result<PauliOperator> {
        if p.num_qubits() != self.n {
            return Err(Error::Dimension {
                expected: self.n,
                found: p.num_qubits(),
            });
        }
        let mut out = p.clone();
        for s in &self.steps {
            s.gate.conjugate_in_place(&mut out);
        }
        Ok(out)
    }

    /// Comma separated 1-based listing, e.g. `SWAP(5,6), CZ(1,4)`.
    pub fn listing(&self) -> String {
        listing(&self.gates())
    }

    pub fn phase_listing(&self) -> String {
        let mut out = String::new();
        for phase in Phase::ALL {
            let gs = self.gates_in(phase);
            if gs.is_empty() {
                continue;
            }
            out.push_str(&format!("{:<17} {}\n", format!("{phase}:"), listing(&gs)));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&CircuitFile::from(self)).expect("circuit serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let file: CircuitFile = serde_json::from_str(s)
            .map_err(|e| Error::parse(e.line(), e.column(), e.to_string()))?;
        file.try_into()
    }
}

pub fn listing(gates: &[CliffordGate]) -> String {
    gates
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

/// True if both gate sequences conjugate every single-qubit X and Z identically,
/// ignoring signs.
pub fn same_symplectic_map(a: &[CliffordGate], b: &[CliffordGate], n: usize) -> bool {
    for q in 0..n {
        for kind in [PauliKind::X, PauliKind::Z] {
            let p = PauliOperator::single(n, q, kind).expect("in range");
            let (mut pa, mut pb) = (p.clone(), p);
            for g in a {
                g.conjugate_in_place(&mut pa);
            }
            for g in b {
                g.conjugate_in_place(&mut pb);
            }
            if pa.x_bits() != pb.x_bits() || pa.z_bits() != pb.z_bits() {
                return false;
            }
        }
    }
    true
}

#[derive(Serialize, Deserialize)]
struct CircuitFile {
    n: usize,
    gates: Vec<GateRecord>,
}

#[derive(Serialize, Deserialize)]
struct GateRecord {
    phase: Phase,
    gate: GateKind,
    qubits: Vec<usize>,
}

impl From<&ConversionCircuit> for CircuitFile {
    fn from(c: &ConversionCircuit) -> Self {
        CircuitFile {
            n: c.n,
            gates: c
                .steps
                .iter()
                .map(|s| GateRecord {
                    phase: s.phase,
                    gate: s.gate.kind(),
                    qubits: s.gate.qubits().iter().map(|q| q + 1).collect(),
                })
                .collect(),
        }
    }
}

impl TryFrom<CircuitFile> for ConversionCircuit {
    type Error = Error;

    fn try_from(f: CircuitFile) -> Result<Self> {
        let mut c = ConversionCircuit::new(f.n);
        for (i, r) in f.gates.into_iter().enumerate() {
            if r.qubits.contains(&0) {
                return Err(Error::parse(i + 1, 1, "qubit indices are 1-based"));
            }
            let qs: Vec<usize> = r.qubits.iter().map(|q| q - 1).collect();
            c.push(CliffordGate::new(r.gate, &qs)?, r.phase)?;
        }
        Ok(c)
    }
}
