use proptest::prelude::*;

use stabconv::bits::BitVec;
use stabconv::synth::{self, OrderOptions};
use stabconv::verify::step_error_set;
use stabconv::{
    augmented_iabc, to_standard_form, CliffordGate, GateKind, PauliOperator, StabilizerCode,
};

fn pauli(n: usize) -> impl Strategy<Value = PauliOperator> {
    (
        prop::collection::vec(any::<bool>(), n),
        prop::collection::vec(any::<bool>(), n),
        any::<bool>(),
    )
        .prop_map(|(x, z, s)| {
            PauliOperator::from_bits(BitVec::from_bools(&x), BitVec::from_bools(&z), s).unwrap()
        })
}

fn gate(n: usize) -> impl Strategy<Value = CliffordGate> {
    (0..5usize, 0..n, 1..n).prop_map(move |(k, a, off)| {
        let b = (a + off) % n;
        match k {
            0 => CliffordGate::h(a),
            1 => CliffordGate::p(a),
            2 => CliffordGate::cnot(a, b),
            3 => CliffordGate::cz(a, b),
            _ => CliffordGate::swap(a, b),
        }
    })
}

/// Random code: a random Clifford circuit applied to `Z_1 .. Z_{n-k}`.
fn code(n: usize, k: usize) -> impl Strategy<Value = StabilizerCode> {
    prop::collection::vec(gate(n), 0..40).prop_map(move |gs| {
        let gens = (0..n - k)
            .map(|q| PauliOperator::single(n, q, stabconv::PauliKind::Z).unwrap())
            .collect();
        StabilizerCode::new(n, gens)
            .unwrap()
            .apply_gates(&gs)
            .unwrap()
    })
}

fn n_and_pair() -> impl Strategy<Value = (usize, PauliOperator, PauliOperator, PauliOperator)> {
    (2..9usize).prop_flat_map(|n| (Just(n), pauli(n), pauli(n), pauli(n)))
}

proptest! {
    #[test]
    fn inner_product_is_bilinear_and_symmetric((_n, a, b, c) in n_and_pair()) {
        let ab = a.symplectic_inner_product(&b).unwrap();
        prop_assert_eq!(ab, b.symplectic_inner_product(&a).unwrap());
        prop_assert!(!a.symplectic_inner_product(&a).unwrap());
        let bc = b.multiply(&c).unwrap();
        let lhs = a.symplectic_inner_product(&bc).unwrap();
        let rhs = ab ^ a.symplectic_inner_product(&c).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn multiplication_is_associative_and_self_inverse((_n, a, b, c) in n_and_pair()) {
        let l = a.multiply(&b).unwrap().multiply(&c).unwrap();
        let r = a.multiply(&b.multiply(&c).unwrap()).unwrap();
        prop_assert_eq!(l.unsigned(), r.unsigned());
        prop_assert!(a.multiply(&a).unwrap().is_identity());
    }

    #[test]
    fn conjugation_preserves_commutation(
        (n, a, b, gs) in (2..9usize).prop_flat_map(|n| {
            (Just(n), pauli(n), pauli(n), prop::collection::vec(gate(n), 1..10))
        })
    ) {
        let _ = n;
        let before = a.commutes_with(&b).unwrap();
        let (mut a2, mut b2) = (a.clone(), b.clone());
        for g in &gs {
            a2 = g.conjugate(&a2).unwrap();
            b2 = g.conjugate(&b2).unwrap();
        }
        prop_assert_eq!(before, a2.commutes_with(&b2).unwrap());
        prop_assert_eq!(a.weight() == 0, a2.weight() == 0);
    }

    #[test]
    fn conjugation_is_a_homomorphism((n, a, b, g) in (2..9usize).prop_flat_map(|n| (Just(n), pauli(n), pauli(n), gate(n)))) {
        let _ = n;
        let lhs = g.conjugate(&a.multiply(&b).unwrap()).unwrap();
        let rhs = g.conjugate(&a).unwrap().multiply(&g.conjugate(&b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn inverse_undoes_gate((n, a, g) in (2..9usize).prop_flat_map(|n| (Just(n), pauli(n), gate(n)))) {
        let _ = n;
        let mut p = g.conjugate(&a).unwrap();
        for h in g.inverse() {
            p = h.conjugate(&p).unwrap();
        }
        prop_assert_eq!(p, a);
    }

    #[test]
    fn self_inverse_gates_are_involutions((n, a, g) in (2..9usize).prop_flat_map(|n| (Just(n), pauli(n), gate(n)))) {
        let _ = n;
        prop_assume!(g.kind().is_self_inverse());
        let twice = g.conjugate(&g.conjugate(&a).unwrap()).unwrap();
        prop_assert_eq!(twice, a);
    }

    #[test]
    fn syndrome_is_invariant_under_stabilizer_multiplication(
        (c, e, i) in (3..9usize).prop_flat_map(|n| (code(n, 1), pauli(n), 0..n - 1))
    ) {
        let s = c.syndrome(&e).unwrap();
        let shifted = e.multiply(&c.generators()[i]).unwrap();
        prop_assert_eq!(s, c.syndrome(&shifted).unwrap());
    }

    #[test]
    fn random_codes_are_valid((c, gs) in (3..9usize).prop_flat_map(|n| (code(n, 1), prop::collection::vec(gate(n), 0..10)))) {
        prop_assert!(c.is_valid());
        let d = c.apply_gates(&gs).unwrap();
        prop_assert!(d.is_valid());
    }

    #[test]
    fn two_qubit_error_sets(g in gate(6)) {
        let errs = step_error_set(6, &g).unwrap();
        let single = errs.iter().filter(|(e, _)| e.weight() == 1).count();
        let double = errs.iter().filter(|(e, _)| e.weight() == 2).count();
        prop_assert_eq!(single, 18);
        match g.kind() {
            GateKind::Cz | GateKind::Cnot => prop_assert_eq!(double, 4),
            _ => prop_assert_eq!(double, 0),
        }
    }

    #[test]
    fn standard_form_keeps_the_group_up_to_swaps(c in (3..9usize).prop_flat_map(|n| code(n, 1))) {
        let sf = to_standard_form(&c).unwrap();
        let back = c.apply_gates(sf.swaps()).unwrap();
        prop_assert!(back.same_group(sf.code()));
        let (xs, zs) = sf.logical_operators();
        for g in sf.code().generators() {
            prop_assert!(g.commutes_with(&xs[0]).unwrap());
            prop_assert!(g.commutes_with(&zs[0]).unwrap());
        }
        prop_assert!(!xs[0].commutes_with(&zs[0]).unwrap());
    }

    #[test]
    fn iabc_form_invariants((c, m) in (3..8usize).prop_flat_map(|n| (code(n, 1), 0..3usize))) {
        let f = augmented_iabc(&c, m).unwrap();
        prop_assert!(f.satisfies_commutation());
        prop_assert!(f.reproduces_from(&c).unwrap());
        let n = c.num_qubits() + m;
        let x = f.code().x_matrix();
        for i in 0..n - 1 {
            for j in 0..n - 1 {
                prop_assert_eq!(x.get(i, j), i == j);
            }
        }
    }

    #[test]
    fn draft_circuit_converts_groups((a, b) in (3..7usize).prop_flat_map(|n| (code(n, 1), code(n, 1)))) {
        let plan = synth::plan_conversion(&a, &b, 0, 0).unwrap();
        let out = a.apply_circuit(&plan.circuit).unwrap();
        prop_assert!(out.same_group(&b));
        prop_assert!(plan.d_matrix.is_symmetric());
    }

    #[test]
    fn circuit_json_round_trip(gs in prop::collection::vec(gate(7), 0..30)) {
        let c = stabconv::ConversionCircuit::from_gates(7, &gs, stabconv::Phase::BDiff).unwrap();
        let back = stabconv::ConversionCircuit::from_json(&c.to_json()).unwrap();
        prop_assert_eq!(back.gates(), gs);
    }
}

#[test]
fn ordered_circuits_are_group_preserving_and_pass() {
    let five = stabconv::library::five_qubit();
    let steane = stabconv::library::steane();
    let s = synth::synthesize(&five, &steane, 3, 1, OrderOptions::default()).unwrap();
    let r = stabconv::verify_circuit(&five.augment(3), &s.circuit, false).unwrap();
    assert!(r.passed);
    let inv = s.circuit.inverse();
    let back = steane.augment(1).apply_circuit(&inv).unwrap();
    assert!(back.same_group(&five.augment(3)));
}
