use crate::bits::BitMatrix;
use crate::circuit::{ConversionCircuit, Phase};
use crate::code::StabilizerCode;
use crate::error::{Error, Result};
use crate::forms::{augmented_iabc, reduce_to_iabc, IabcForm};
use crate::gate::CliffordGate;

/// Everything derived while synthesizing one conversion.
#[derive(Clone, Debug)]
pub struct ConversionPlan {
    pub source: StabilizerCode,
    pub target: StabilizerCode,
    pub m1: usize,
    pub m2: usize,
    pub source_iabc: IabcForm,
    pub target_iabc: IabcForm,
    /// `A'_S + A'_T`
    pub a_diff: BitMatrix,
    /// `C'_S + C'_T`
    pub c_diff: BitMatrix,
    /// Source IABC generators after the A and C phases, re-reduced.
    pub after_ac: StabilizerCode,
    /// `B''_S + B'_T`
    pub d_matrix: BitMatrix,
    pub circuit: ConversionCircuit,
}

impl ConversionPlan {
    pub fn total_qubits(&self) -> usize {
        self.source.num_qubits() + self.m1
    }

    pub fn augmented_source(&self) -> StabilizerCode {
        self.source.augment(self.m1)
    }

    pub fn augmented_target(&self) -> StabilizerCode {
        self.target.augment(self.m2)
    }

    /// Same plan with a different gate ordering, e.g. a hand-written reference.
    pub fn with_circuit(&self, circuit: ConversionCircuit) -> Result<ConversionPlan> {
        if circuit.num_qubits() != self.total_qubits() {
            return Err(Error::Dimension {
                expected: self.total_qubits(),
                found: circuit.num_qubits(),
            });
        }
        Ok(ConversionPlan {
            circuit,
            ..self.clone()
        })
    }
}

/// A, C and B phase gates between two IABC forms of equal shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferenceGates {
    pub a_phase: Vec<CliffordGate>,
    pub c_phase: Vec<CliffordGate>,
    pub b_phase: Vec<CliffordGate>,
    pub a_diff: BitMatrix,
    pub c_diff: BitMatrix,
    pub after_ac: StabilizerCode,
    pub d_matrix: BitMatrix,
}

impl DifferenceGates {
    pub fn is_empty(&self) -> bool {
        self.a_phase.is_empty() && self.c_phase.is_empty() && self.b_phase.is_empty()
    }
}

fn check_shapes(src: &IabcForm, tgt: &IabcForm) -> Result<()> {
    if src.num_logical() != tgt.num_logical() {
        return Err(Error::KMismatch {
            source_k: src.num_logical(),
            target_k: tgt.num_logical(),
        });
    }
    if src.num_qubits() != tgt.num_qubits() {
        return Err(Error::QubitCountMismatch {
            source_total: src.num_qubits(),
            target_total: tgt.num_qubits(),
        });
    }
    Ok(())
}

/// CNOT(i, n-k+j) for each 1 of the A difference, column by column.
pub fn a_phase_gates(a_diff: &BitMatrix) -> Vec<CliffordGate> {
    let nk = a_diff.num_rows();
    let mut out = Vec::new();
    for j in 0..a_diff.num_cols() {
        for i in 0..nk {
            if a_diff.get(i, j) {
                out.push(CliffordGate::cnot(i, nk + j));
            }
        }
    }
    out
}

/// CZ(i, n-k+j) for each 1 of the C difference, column by column.
pub fn c_phase_gates(c_diff: &BitMatrix) -> Vec<CliffordGate> {
    let nk = c_diff.num_rows();
    let mut out = Vec::new();
    for j in 0..c_diff.num_cols() {
        for i in 0..nk {
            if c_diff.get(i, j) {
                out.push(CliffordGate::cz(i, nk + j));
            }
        }
    }
    out
}

/// Row-major upper triangle of `D`: CZ(i,j) off the diagonal, P(i) on it.
pub fn b_phase_gates(d: &BitMatrix) -> Vec<CliffordGate> {
    let mut out = Vec::new();
    for i in 0..d.num_rows() {
        for j in i..d.num_cols() {
            if d.get(i, j) {
                out.push(if i == j {
                    CliffordGate::p(i)
                } else {
                    CliffordGate::cz(i, j)
                });
            }
        }
    }
    out
}

/// `D` for a code already carried through the A/C phases (any order).
///
/// The code is re-reduced to IABC form; its A and C blocks must then match
/// the target's.
pub fn difference_matrix(
    after_ac: &StabilizerCode,
    tgt: &IabcForm,
) -> Result<(StabilizerCode, BitMatrix)> {
    let reduced = reduce_to_iabc(after_ac)?;
    let n = reduced.num_qubits();
    let nk = reduced.num_generators();
    let x = reduced.x_matrix();
    let z = reduced.z_matrix();
    if x.block(0, nk, nk, n) != tgt.a() || z.block(0, nk, nk, n) != tgt.c() {
        return Err(Error::Internal(
            "A/C phases did not reproduce the target A and C blocks".into(),
        ));
    }
    let d = z.block(0, nk, 0, nk).add(&tgt.b());
    if !d.is_symmetric() {
        return Err(Error::Internal("difference matrix is not symmetric".into()));
    }
    Ok((reduced, d))
}

pub fn difference_gates(src: &IabcForm, tgt: &IabcForm) -> Result<DifferenceGates> {
    check_shapes(src, tgt)?;
    let a_diff = src.a().add(&tgt.a());
    let c_diff = src.c().add(&tgt.c());
    let a_phase = a_phase_gates(&a_diff);
    let c_phase = c_phase_gates(&c_diff);
    let carried = src.code().apply_gates(&a_phase)?.apply_gates(&c_phase)?;
    let (after_ac, d_matrix) = difference_matrix(&carried, tgt)?;
    let b_phase = b_phase_gates(&d_matrix);
    Ok(DifferenceGates {
        a_phase,
        c_phase,
        b_phase,
        a_diff,
        c_diff,
        after_ac,
        d_matrix,
    })
}

/// Inverse of a gate record, reversed, with P expanded to three P gates.
pub fn inverse_record(record: &[CliffordGate]) -> Vec<CliffordGate> {
    record.iter().rev().flat_map(|g| g.inverse()).collect()
}

/// Draft conversion circuit in canonical phase order.
pub fn plan_conversion(
    source: &StabilizerCode,
    target: &StabilizerCode,
    m1: usize,
    m2: usize,
) -> Result<ConversionPlan> {
    source.ensure_valid()?;
    target.ensure_valid()?;
    if source.num_logical() != target.num_logical() {
        return Err(Error::KMismatch {
            source_k: source.num_logical(),
            target_k: target.num_logical(),
        });
    }
    let total = source.num_qubits() + m1;
    if total != target.num_qubits() + m2 {
        return Err(Error::QubitCountMismatch {
            source_total: total,
            target_total: target.num_qubits() + m2,
        });
    }
    let source_iabc = augmented_iabc(source, m1)?;
    let target_iabc = augmented_iabc(target, m2)?;
    let diff = difference_gates(&source_iabc, &target_iabc)?;

    let mut circuit = ConversionCircuit::new(total);
    circuit.extend(source_iabc.u_record(), Phase::SourceIabc)?;
    circuit.extend(&diff.a_phase, Phase::ADiff)?;
    circuit.extend(&diff.c_phase, Phase::CDiff)?;
    circuit.extend(&diff.b_phase, Phase::BDiff)?;
    circuit.extend(
        &inverse_record(target_iabc.u_record()),
        Phase::TargetInverse,
    )?;

    Ok(ConversionPlan {
        source: source.clone(),
        target: target.clone(),
        m1,
        m2,
        source_iabc,
        target_iabc,
        a_diff: diff.a_diff,
        c_diff: diff.c_diff,
        after_ac: diff.after_ac,
        d_matrix: diff.d_matrix,
        circuit,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identical_forms_need_no_gates() {
        let steane = crate::library::steane();
        let f = augmented_iabc(&steane, 1).unwrap();
        let d = difference_gates(&f, &f).unwrap();
        assert!(d.is_empty());
        assert!(d.d_matrix.is_zero());
    }

    #[test]
    fn mismatched_inputs() {
        let five = crate::library::five_qubit();
        let bell = StabilizerCode::from_strs(&["XX", "ZZ"]).unwrap();
        assert!(matches!(
            plan_conversion(&five, &bell, 0, 3),
            Err(Error::KMismatch { .. })
        ));
        let steane = crate::library::steane();
        assert!(matches!(
            plan_conversion(&five, &steane, 3, 0),
            Err(Error::QubitCountMismatch { .. })
        ));
    }

    #[test]
    fn b_phase_uses_phase_gate_on_diagonal() {
        let d = BitMatrix::parse_rows(&["101", "010", "100"]);
        let gs = b_phase_gates(&d);
        assert_eq!(
            gs,
            vec![
                CliffordGate::p(0),
                CliffordGate::cz(0, 2),
                CliffordGate::p(1)
            ]
        );
    }
}
