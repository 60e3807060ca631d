//! Built-in codes and hand-ordered reference conversion circuits.

use crate::circuit::{ConversionCircuit, Phase};
use crate::code::StabilizerCode;
use crate::error::{Error, Result};
use crate::gate::{parse_gate_list, CliffordGate};

#[derive(Clone, Debug)]
pub struct CodeLibraryEntry {
    pub name: &'static str,
    pub code: StabilizerCode,
    pub note: &'static str,
}

pub const BUILTIN_NAMES: [&str; 4] = ["five-qubit", "steane", "rm15", "qpc34"];

/// The [[5,1,3]] code with cyclic generators `XZZXI`.
pub fn five_qubit() -> StabilizerCode {
    StabilizerCode::from_strs(&["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"]).expect("valid")
}

const HAMMING: [[usize; 4]; 3] = [[0, 2, 4, 6], [1, 2, 5, 6], [3, 4, 5, 6]];

/// [[7,1,3]] CSS code from the [7,4] Hamming checks, X rows first.
pub fn steane() -> StabilizerCode {
    let checks: Vec<Vec<usize>> = HAMMING.iter().map(|c| c.to_vec()).collect();
    StabilizerCode::css(7, &checks, &checks).expect("valid")
}

/// Evaluation of a monomial over points `1..16`; variable `i` is bit `i` of the point.
fn rm_row(monomial: &[usize]) -> Vec<usize> {
    (1..16usize)
        .filter(|p| monomial.iter().all(|&v| (p >> v) & 1 == 1))
        .map(|p| p - 1)
        .collect()
}

/// Punctured Reed-Muller [[15,1,3]] code.
///
/// X checks are the degree-1 monomials of RM(1,4), Z checks the degree-1
/// then degree-2 monomials of RM(2,4) in lexicographic order. Puncturing
/// drops the all-ones row and the evaluation point `0000`.
pub fn reed_muller_15() -> StabilizerCode {
    let deg1: Vec<Vec<usize>> = (0..4).map(|i| vec![i]).collect();
    let mut deg2 = deg1.clone();
    for i in 0..4 {
        for j in i + 1..4 {
            deg2.push(vec![i, j]);
        }
    }
    let xs: Vec<Vec<usize>> = deg1.iter().map(|m| rm_row(m)).collect();
    let zs: Vec<Vec<usize>> = deg2.iter().map(|m| rm_row(m)).collect();
    StabilizerCode::css(15, &xs, &zs).expect("valid")
}

/// (3,4) quantum parity check code, [[12,1,3]]: two X checks over pairs of
/// blocks, then nearest-neighbour ZZ checks inside each block of four.
pub fn qpc34() -> StabilizerCode {
    let xs = vec![(0..8).collect(), (4..12).collect()];
    let mut zs = Vec::new();
    for block in 0..3 {
        for i in 0..3 {
            let q = 4 * block + i;
            zs.push(vec![q, q + 1]);
        }
    }
    StabilizerCode::css(12, &xs, &zs).expect("valid")
}

pub fn builtin(name: &str) -> Result<StabilizerCode> {
    let key = name.strip_prefix("builtin:").unwrap_or(name);
    match key.to_ascii_lowercase().as_str() {
        "five-qubit" | "five" | "513" => Ok(five_qubit()),
        "steane" | "713" => Ok(steane()),
        "rm15" | "reed-muller" | "reed-muller-15" => Ok(reed_muller_15()),
        "qpc34" | "qpc" => Ok(qpc34()),
        _ => Err(Error::UnknownBuiltin(name.to_string())),
    }
}

pub fn entries() -> Vec<CodeLibraryEntry> {
    vec![
        CodeLibraryEntry {
            name: "five-qubit",
            code: five_qubit(),
            note: "[[5,1,3]] perfect code, cyclic shifts of XZZXI",
        },
        CodeLibraryEntry {
            name: "steane",
            code: steane(),
            note: "[[7,1,3]] CSS code from the [7,4] Hamming code",
        },
        CodeLibraryEntry {
            name: "rm15",
            code: reed_muller_15(),
            note: "[[15,1,3]] punctured RM(1,4)/RM(2,4) CSS code",
        },
        CodeLibraryEntry {
            name: "qpc34",
            code: qpc34(),
            note: "[[12,1,3]] (3,4) quantum parity check code",
        },
    ]
}

/// Hand-ordered reference circuits for the three built-in conversions.
pub mod reference {
    use super::*;

    fn gates(s: &str) -> Vec<CliffordGate> {
        parse_gate_list(s).expect("reference listing parses")
    }

    fn range(fmt: impl Fn(usize) -> String, lo: usize, hi: usize) -> String {
        (lo..=hi).map(fmt).collect::<Vec<_>>().join(", ")
    }

    fn build(n: usize, phases: &[(Phase, Vec<CliffordGate>)]) -> ConversionCircuit {
        let mut c = ConversionCircuit::new(n);
        for (phase, gs) in phases {
            c.extend(gs, *phase).expect("in range");
        }
        c
    }

    const STEANE_IABC: &str = "SWAP(3,4), SWAP(6,7), H(4), H(5), H(6)";

    /// Record bringing Steane plus `m` ancillas into IABC form.
    pub fn steane_augmented_record(m: usize) -> Vec<CliffordGate> {
        let last = 7 + m;
        let mut s = STEANE_IABC.to_string();
        if m > 0 {
            s.push_str(", ");
            s.push_str(&range(|i| format!("SWAP({i},{})", i + 1), 7, last - 1));
            s.push_str(", ");
            s.push_str(&range(|i| format!("CNOT({i},{last})"), 7, last - 1));
            s.push_str(", ");
            s.push_str(&range(|i| format!("CZ({i},{last})"), 7, last - 1));
        }
        gates(&s)
    }

    /// [[5,1,3]] plus three ancillas to Steane plus one, on 8 qubits.
    pub fn five_to_steane() -> ConversionCircuit {
        build(
            8,
            &[
                (
                    Phase::SourceIabc,
                    gates(
                        "SWAP(5,6), SWAP(6,7), SWAP(7,8), CNOT(5,8), CNOT(6,8), CNOT(7,8), \
                         CZ(5,8), CZ(6,8), CZ(7,8)",
                    ),
                ),
                (
                    Phase::ADiff,
                    gates("CNOT(5,8), CNOT(4,8), CNOT(6,8), CNOT(1,8)"),
                ),
                (Phase::CDiff, gates("CZ(1,8), CZ(6,8)")),
                (
                    Phase::BDiff,
                    gates(
                        "CZ(1,4), CZ(2,5), CZ(1,2), CZ(3,6), CZ(4,5), CZ(4,6), CZ(4,7), \
                         CZ(2,6), CZ(6,7), CZ(2,3)",
                    ),
                ),
                (
                    Phase::TargetInverse,
                    gates("CZ(7,8), CNOT(7,8), SWAP(7,8), H(6), H(5), H(4), SWAP(6,7), SWAP(3,4)"),
                ),
            ],
        )
    }

    /// Steane plus eight ancillas to the [[15,1,3]] code, on 15 qubits.
    ///
    /// A and C gates are interleaved, so the B block is the one matching
    /// that order (30 gates).
    pub fn steane_to_rm15() -> ConversionCircuit {
        let ac = format!(
            "CNOT(1,15), CNOT(4,15), CZ(6,15), {}, CZ(4,15), CZ(7,15), CZ(11,15), CZ(13,15), CZ(14,15)",
            range(|i| format!("CNOT({i},15)"), 7, 14)
        );
        let ac = gates(&ac);
        let mut c = ConversionCircuit::new(15);
        c.extend(&steane_augmented_record(8), Phase::SourceIabc)
            .unwrap();
        for g in ac {
            let phase = if g.kind() == crate::gate::GateKind::Cnot {
                Phase::ADiff
            } else {
                Phase::CDiff
            };
            c.push(g, phase).unwrap();
        }
        c.extend(
            &gates(
                "CZ(1,8), CZ(1,9), CZ(2,7), CZ(2,6), CZ(2,9), CZ(2,11), CZ(2,12), CZ(2,14), \
                 CZ(1,14), CZ(3,7), CZ(3,4), CZ(3,8), CZ(3,6), CZ(3,9), CZ(3,10), CZ(3,13), \
                 CZ(3,14), CZ(4,6), CZ(4,7), CZ(4,9), CZ(4,10), CZ(4,12), CZ(6,7), CZ(6,8), \
                 CZ(6,9), CZ(6,10), CZ(6,11), CZ(6,12), CZ(6,13), CZ(6,14)",
            ),
            Phase::BDiff,
        )
        .unwrap();
        let target_record = gates(&format!(
            "SWAP(3,4), SWAP(4,8), {}",
            range(|i| format!("H({i})"), 5, 14)
        ));
        c.extend(
            &crate::synth::inverse_record(&target_record),
            Phase::TargetInverse,
        )
        .unwrap();
        c
    }

    fn qpc_circuit(fourth_a: &str, include_cz_1_10: bool) -> ConversionCircuit {
        let mut c = ConversionCircuit::new(12);
        c.extend(&steane_augmented_record(5), Phase::SourceIabc)
            .unwrap();
        let a = gates(&format!(
            "CNOT(1,12), CNOT(3,12), CNOT(7,12), {fourth_a}, CNOT(8,12), CNOT(9,12), \
             CNOT(10,12), CNOT(11,12)"
        ));
        for g in a {
            let phase = if g.kind() == crate::gate::GateKind::Cnot {
                Phase::ADiff
            } else {
                Phase::CDiff
            };
            c.push(g, phase).unwrap();
        }
        c.extend(&gates("CZ(4,12), CZ(7,12), CZ(8,12)"), Phase::CDiff)
            .unwrap();
        let b = format!(
            "CZ(1,3), CZ(1,4), CZ(1,5), CZ(1,6), CZ(1,7), CZ(1,8), CZ(1,9), {}CZ(1,11), \
             CZ(2,7), CZ(2,5), CZ(2,8), CZ(3,5), CZ(3,6), CZ(3,7), CZ(3,8), CZ(3,9), \
             CZ(3,10), CZ(3,11), CZ(5,8), CZ(5,9), CZ(5,10), CZ(5,11)",
            if include_cz_1_10 { "CZ(1,10), " } else { "" }
        );
        c.extend(&gates(&b), Phase::BDiff).unwrap();
        let target_record = gates(&format!(
            "SWAP(2,5), {}",
            range(|i| format!("H({i})"), 3, 11)
        ));
        c.extend(
            &crate::synth::inverse_record(&target_record),
            Phase::TargetInverse,
        )
        .unwrap();
        c
    }

    /// Steane plus five ancillas to the (3,4) parity check code, on 12 qubits.
    pub fn steane_to_qpc() -> ConversionCircuit {
        qpc_circuit("CZ(5,12)", true)
    }

    /// The same listing with CNOT(5,12) in place of CZ(5,12) and without
    /// CZ(1,10). Kept as a negative control: it does not reach the target.
    pub fn steane_to_qpc_unrepaired() -> ConversionCircuit {
        qpc_circuit("CNOT(5,12)", false)
    }
}
