//! Clifford gates and their conjugation action on Paulis.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pauli::{PauliKind, PauliOperator};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum GateKind {
    H,
    P,
    Cnot,
    Cz,
    Swap,
}

impl GateKind {
    pub fn arity(self) -> usize {
        match self {
            GateKind::H | GateKind::P => 1,
            _ => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GateKind::H => "H",
            GateKind::P => "P",
            GateKind::Cnot => "CNOT",
            GateKind::Cz => "CZ",
            GateKind::Swap => "SWAP",
        }
    }

    pub fn is_self_inverse(self) -> bool {
        self != GateKind::P
    }
}

impl FromStr for GateKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "H" => Ok(GateKind::H),
            "P" | "S" => Ok(GateKind::P),
            "CNOT" | "CX" => Ok(GateKind::Cnot),
            "CZ" => Ok(GateKind::Cz),
            "SWAP" => Ok(GateKind::Swap),
            other => Err(Error::parse(1, 1, format!("unknown gate '{other}'"))),
        }
    }
}

/// A single Clifford gate with 0-based qubit indices.
///
/// CZ and SWAP are stored with sorted qubits so equality ignores pair order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CliffordGate {
    kind: GateKind,
    q0: usize,
    q1: usize,
}

impl CliffordGate {
    pub fn h(q: usize) -> Self {
        CliffordGate {
            kind: GateKind::H,
            q0: q,
            q1: q,
        }
    }

    pub fn p(q: usize) -> Self {
        CliffordGate {
            kind: GateKind::P,
            q0: q,
            q1: q,
        }
    }

    pub fn cnot(control: usize, target: usize) -> Self {
        assert_ne!(control, target, "CNOT on a single qubit");
        CliffordGate {
            kind: GateKind::Cnot,
            q0: control,
            q1: target,
        }
    }

    pub fn cz(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "CZ on a single qubit");
        CliffordGate {
            kind: GateKind::Cz,
            q0: a.min(b),
            q1: a.max(b),
        }
    }

    pub fn swap(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "SWAP on a single qubit");
        CliffordGate {
            kind: GateKind::Swap,
            q0: a.min(b),
            q1: a.max(b),
        }
    }

    /// Fallible constructor used at I/O boundaries.
    pub fn new(kind: GateKind, qubits: &[usize]) -> Result<Self> {
        if qubits.len() != kind.arity() {
            return Err(Error::parse(
                1,
                1,
                format!(
                    "{} takes {} qubit(s), got {}",
                    kind.name(),
                    kind.arity(),
                    qubits.len()
                ),
            ));
        }
        if kind.arity() == 2 && qubits[0] == qubits[1] {
            return Err(Error::RepeatedQubit(qubits[0]));
        }
        Ok(match kind {
            GateKind::H => Self::h(qubits[0]),
            GateKind::P => Self::p(qubits[0]),
            GateKind::Cnot => Self::cnot(qubits[0], qubits[1]),
            GateKind::Cz => Self::cz(qubits[0], qubits[1]),
            GateKind::Swap => Self::swap(qubits[0], qubits[1]),
        })
    }

    pub fn kind(&self) -> GateKind {
        self.kind
    }

    pub fn qubits(&self) -> Vec<usize> {
        if self.kind.arity() == 1 {
            vec![self.q0]
        } else {
            vec![self.q0, self.q1]
        }
    }

    pub fn max_qubit(&self) -> usize {
        self.q0.max(self.q1)
    }

    pub fn is_two_qubit(&self) -> bool {
        self.kind.arity() == 2
    }

    /// Gates whose inverse needs more than one gate expand into several.
    pub fn inverse(&self) -> Vec<CliffordGate> {
        match self.kind {
            GateKind::P => vec![*self; 3],
            _ => vec![*self],
        }
    }

    pub fn check_range(&self, n: usize) -> Result<()> {
        let m = self.max_qubit();
        if m >= n {
            return Err(Error::QubitOutOfRange { qubit: m, n });
        }
        Ok(())
    }

    /// Returns `g p g†`, tracking the sign.
    pub fn conjugate(&self, p: &PauliOperator) -> Result<PauliOperator> {
        self.check_range(p.num_qubits())?;
        let mut out = p.clone();
        self.conjugate_in_place(&mut out);
        Ok(out)
    }

    pub(crate) fn conjugate_in_place(&self, p: &mut PauliOperator) {
        let (a, b) = (self.q0, self.q1);
        let xa = p.x_bits().get(a);
        let za = p.z_bits().get(a);
        match self.kind {
            GateKind::H => {
                p.flip_sign(xa && za);
                p.x_mut().set(a, za);
                p.z_mut().set(a, xa);
            }
            GateKind::P => {
                p.flip_sign(xa && za);
                p.z_mut().set(a, za ^ xa);
            }
            GateKind::Cnot => {
                let xb = p.x_bits().get(b);
                let zb = p.z_bits().get(b);
                p.flip_sign(xa && zb && !(xb ^ za));
                p.x_mut().set(b, xb ^ xa);
                p.z_mut().set(a, za ^ zb);
            }
            GateKind::Cz => {
                let xb = p.x_bits().get(b);
                let zb = p.z_bits().get(b);
                p.flip_sign(xa && xb && (za ^ zb));
                p.z_mut().set(a, za ^ xb);
                p.z_mut().set(b, zb ^ xa);
            }
            GateKind::Swap => {
                p.x_mut().swap_bits(a, b);
                p.z_mut().swap_bits(a, b);
            }
        }
    }

    /// Weight-2 images of the weight-1 Paulis on the gate's qubits, sign-normalized.
    ///
    /// Empty for single-qubit gates and SWAP.
    pub fn two_qubit_errors(&self, n: usize) -> Result<Vec<PauliOperator>> {
        self.check_range(n)?;
        if !matches!(self.kind, GateKind::Cnot | GateKind::Cz) {
            return Ok(Vec::new());
        }
        let mut out: Vec<PauliOperator> = Vec::with_capacity(4);
        for kind in PauliKind::ALL {
            for q in [self.q0, self.q1] {
                let mut e = PauliOperator::single(n, q, kind)?;
                self.conjugate_in_place(&mut e);
                let e = e.unsigned();
                if e.weight() == 2 && !out.contains(&e) {
                    out.push(e);
                }
            }
        }
        Ok(out)
    }

    /// Whether the two gates commute as symplectic maps on all `2n` basis Paulis.
    pub fn commutes_with(&self, other: &CliffordGate, n: usize) -> bool {
        if self.qubits().iter().all(|q| !other.qubits().contains(q)) {
            return true;
        }
        crate::circuit::same_symplectic_map(&[*self, *other], &[*other, *self], n)
    }
}

impl fmt::Display for CliffordGate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.kind.arity() == 1 {
            write!(f, "{}({})", self.kind.name(), self.q0 + 1)
        } else {
            write!(f, "{}({},{})", self.kind.name(), self.q0 + 1, self.q1 + 1)
        }
    }
}

impl fmt::Debug for CliffordGate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses the 1-based listing form, e.g. `CZ(1, 4)` or `H(5)`.
impl FromStr for CliffordGate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let open = s
            .find('(')
            .ok_or_else(|| Error::parse(1, 1, format!("expected '(' in gate '{s}'")))?;
        if !s.ends_with(')') {
            return Err(Error::parse(
                1,
                s.len(),
                format!("expected ')' in gate '{s}'"),
            ));
        }
        let kind: GateKind = s[..open].parse()?;
        let mut qubits = Vec::new();
        for tok in s[open + 1..s.len() - 1].split(',') {
            let q: usize = tok.trim().parse().map_err(|_| {
                Error::parse(1, open + 2, format!("bad qubit index '{}'", tok.trim()))
            })?;
            if q == 0 {
                return Err(Error::parse(1, open + 2, "qubit indices are 1-based"));
            }
            qubits.push(q - 1);
        }
        CliffordGate::new(kind, &qubits)
    }
}

/// Parses a comma or whitespace separated gate listing.
pub fn parse_gate_list(s: &str) -> Result<Vec<CliffordGate>> {
    let mut out = Vec::new();
    let mut depth = 0;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '(' => {
                depth += 1;
                cur.push(c);
            }
            ')' => {
                depth -= 1;
                cur.push(c);
                out.push(cur.trim().parse()?);
                cur.clear();
            }
            ',' | ' ' | '\n' | '\t' | '\r' if depth == 0 => {}
            _ => cur.push(c),
        }
    }
    if !cur.trim().is_empty() {
        return Err(Error::parse(
            1,
            s.len(),
            format!("trailing text '{}'", cur.trim()),
        ));
    }
    Ok(out)
}
