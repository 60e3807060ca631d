//! Published matrices and gate lists for the [[5,1,3]] to Steane conversion.

use stabconv::bits::BitMatrix;
use stabconv::circuit::Phase;
use stabconv::gate::parse_gate_list;
use stabconv::library::{self, reference};
use stabconv::{augmented_iabc, plan_conversion, to_standard_form, PauliOperator, StabilizerCode};

fn m(rows: &[&str]) -> BitMatrix {
    BitMatrix::parse_rows(rows)
}

fn sorted(gates: &[stabconv::CliffordGate]) -> Vec<String> {
    let mut v: Vec<String> = gates.iter().map(ToString::to_string).collect();
    v.sort();
    v
}

#[test]
fn five_qubit_check_matrix() {
    let expected = m(&[
        "10010 | 01100",
        "01001 | 00110",
        "10100 | 00011",
        "01010 | 10001",
    ]);
    assert_eq!(library::five_qubit().check_matrix(), expected);
}

#[test]
fn five_qubit_standard_form_needs_no_swaps() {
    let sf = to_standard_form(&library::five_qubit()).unwrap();
    assert!(sf.swaps().is_empty());
    assert_eq!(sf.rank_x(), 4);
    let expected = m(&[
        "10001 | 11011",
        "01001 | 00110",
        "00101 | 11000",
        "00011 | 10111",
    ]);
    assert_eq!(sf.code().check_matrix(), expected);
}

#[test]
fn augmented_five_qubit_before_and_after_swaps() {
    let sf = to_standard_form(&library::five_qubit()).unwrap();
    let aug = sf.code().augment(3);
    let expected = m(&[
        "10001000 | 11011000",
        "01001000 | 00110000",
        "00101000 | 11000000",
        "00011000 | 10111000",
        "00000100 | 00000000",
        "00000010 | 00000000",
        "00000001 | 00000000",
    ]);
    assert_eq!(aug.check_matrix(), expected);

    let swapped = aug
        .apply_gates(&parse_gate_list("SWAP(5,6), SWAP(6,7), SWAP(7,8)").unwrap())
        .unwrap();
    let expected = m(&[
        "10000001 | 11010001",
        "01000001 | 00110000",
        "00100001 | 11000000",
        "00010001 | 10110001",
        "00001000 | 00000000",
        "00000100 | 00000000",
        "00000010 | 00000000",
    ]);
    assert_eq!(swapped.check_matrix(), expected);
}

#[test]
fn five_qubit_augmented_iabc() {
    let f = augmented_iabc(&library::five_qubit(), 3).unwrap();
    let expected = m(&[
        "10000001 | 11010001",
        "01000001 | 00111110",
        "00100001 | 11001110",
        "00010001 | 10110001",
        "00001001 | 00001111",
        "00000101 | 00001111",
        "00000011 | 00001111",
    ]);
    assert_eq!(f.code().check_matrix(), expected);
    assert_eq!(
        f.u_record(),
        parse_gate_list(
            "SWAP(5,6), SWAP(6,7), SWAP(7,8), CNOT(5,8), CNOT(6,8), CNOT(7,8), CZ(5,8), CZ(6,8), CZ(7,8)"
        )
        .unwrap()
    );
}

#[test]
fn steane_augmented_iabc() {
    let steane = library::steane();
    let sf = to_standard_form(&steane).unwrap();
    assert_eq!(sf.swaps(), parse_gate_list("SWAP(3,4), SWAP(6,7)").unwrap());
    let f = augmented_iabc(&steane, 1).unwrap();
    let expected = m(&[
        "10000000 | 00011100",
        "01000001 | 00010110",
        "00100001 | 00001110",
        "00010000 | 10100011",
        "00001000 | 11000011",
        "00000100 | 11100000",
        "00000011 | 00000011",
    ]);
    assert_eq!(f.code().check_matrix(), expected);
    assert_eq!(f.u_record(), reference::steane_augmented_record(1));
}

#[test]
fn after_difference_gates_and_d_matrix() {
    let plan = plan_conversion(&library::five_qubit(), &library::steane(), 3, 1).unwrap();
    let expected = m(&[
        "10000000 | 01001100",
        "01000001 | 10111010",
        "00100001 | 01001010",
        "00010000 | 00101101",
        "00001000 | 10010011",
        "00000100 | 10010010",
        "00000011 | 00010111",
    ]);
    assert_eq!(plan.after_ac.check_matrix(), expected);

    let d = m(&[
        "0101000", "1010110", "0100010", "1000111", "0101000", "0111001", "0001010",
    ]);
    assert_eq!(plan.d_matrix, d);
    assert!(plan.d_matrix.diagonal().iter().all(|b| !b));
}

#[test]
fn published_phase_order_reaches_same_after_ac() {
    let plan = plan_conversion(&library::five_qubit(), &library::steane(), 3, 1).unwrap();
    let published_ac =
        parse_gate_list("CNOT(5,8), CNOT(4,8), CNOT(6,8), CNOT(1,8), CZ(1,8), CZ(6,8)").unwrap();
    let carried = plan.source_iabc.code().apply_gates(&published_ac).unwrap();
    assert_eq!(
        stabconv::forms::reduce_to_iabc(&carried)
            .unwrap()
            .check_matrix(),
        plan.after_ac.check_matrix()
    );
}

#[test]
fn gate_multisets_match_published_table() {
    let plan = plan_conversion(&library::five_qubit(), &library::steane(), 3, 1).unwrap();
    let table = reference::five_to_steane();
    for phase in Phase::ALL {
        assert_eq!(
            sorted(&plan.circuit.gates_in(phase)),
            sorted(&table.gates_in(phase)),
            "{}",
            phase.label()
        );
    }
    assert_eq!(
        plan.circuit.gates_in(Phase::SourceIabc),
        table.gates_in(Phase::SourceIabc)
    );
    assert_eq!(
        plan.circuit.gates_in(Phase::TargetInverse),
        table.gates_in(Phase::TargetInverse)
    );
}

#[test]
fn code_after_cz_6_8() {
    let table = reference::five_to_steane();
    let prefix: Vec<_> = table.gates().into_iter().take(15).collect();
    assert_eq!(prefix.last().unwrap().to_string(), "CZ(6,8)");
    let code = library::five_qubit()
        .augment(3)
        .apply_gates(&prefix)
        .unwrap();
    let printed = StabilizerCode::from_strs(&[
        "XZIIZZII", "ZXZZZIZX", "IZXIZIZX", "IIZXZZIZ", "ZIIZXIZZ", "ZIIZIXZI", "IIIZIZYY",
    ])
    .unwrap();
    let reduced = stabconv::forms::reduce_to_iabc(&code).unwrap();
    assert!(reduced.same_group(&printed));
    assert!(code.same_group(&printed));
    assert!(code.distance_at_least_3().at_least_3);

    let xl: PauliOperator = "IIIZZIZX".parse().unwrap();
    let zl: PauliOperator = "IZZIIIZZ".parse().unwrap();
    for g in printed.generators() {
        assert!(g.commutes_with(&xl).unwrap());
        assert!(g.commutes_with(&zl).unwrap());
    }
    assert!(!xl.commutes_with(&zl).unwrap());
    assert!(!printed.contains(&xl).unwrap() && !printed.contains(&zl).unwrap());
}

fn b_for_ac_order(
    circuit: &stabconv::ConversionCircuit,
    plan: &stabconv::ConversionPlan,
) -> Vec<String> {
    let ac: Vec<_> = circuit
        .steps()
        .iter()
        .filter(|s| matches!(s.phase, Phase::ADiff | Phase::CDiff))
        .map(|s| s.gate)
        .collect();
    let carried = plan.source_iabc.code().apply_gates(&ac).unwrap();
    let (_, d) = stabconv::synth::difference_matrix(&carried, &plan.target_iabc).unwrap();
    sorted(&stabconv::synth::b_phase_gates(&d))
}

#[test]
fn interleaved_ac_order_yields_published_b_blocks() {
    let rm = plan_conversion(&library::steane(), &library::reed_muller_15(), 8, 0).unwrap();
    let table3 = reference::steane_to_rm15();
    assert_eq!(table3.gates_in(Phase::BDiff).len(), 30);
    assert_eq!(
        b_for_ac_order(&table3, &rm),
        sorted(&table3.gates_in(Phase::BDiff))
    );
    assert_eq!(rm.circuit.gates_in(Phase::BDiff).len(), 22);
    assert_eq!(
        sorted(&rm.circuit.gates_in(Phase::SourceIabc)),
        sorted(&table3.gates_in(Phase::SourceIabc))
    );
    assert_eq!(
        rm.circuit.gates_in(Phase::TargetInverse),
        table3.gates_in(Phase::TargetInverse)
    );

    let qpc = plan_conversion(&library::steane(), &library::qpc34(), 5, 0).unwrap();
    let table4 = reference::steane_to_qpc();
    assert_eq!(
        b_for_ac_order(&table4, &qpc),
        sorted(&table4.gates_in(Phase::BDiff))
    );
    assert_eq!(
        qpc.circuit.gates_in(Phase::TargetInverse),
        table4.gates_in(Phase::TargetInverse)
    );
}
