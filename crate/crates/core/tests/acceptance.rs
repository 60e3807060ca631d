//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use stabconv::bits::{BitMatrix, BitVec};
use stabconv::circuit::Phase;
use stabconv::gate::parse_gate_list;
use stabconv::library::{self, reference};
use stabconv::synth::{self, order_for_fault_tolerance, OrderOptions};
use stabconv::verify::{check_step, step_passes, verify_circuit, Verdict};
use stabconv::{
    augmented_iabc, plan_conversion, to_standard_form, CliffordGate, ConversionCircuit, PauliKind,
    PauliOperator, StabilizerCode,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn m(rows: &[&str]) -> BitMatrix {
    BitMatrix::parse_rows(rows)
}

fn sorted(gates: &[CliffordGate]) -> Vec<String> {
    let mut v: Vec<String> = gates.iter().map(ToString::to_string).collect();
    v.sort();
    v
}

struct Fixture {
    name: &'static str,
    source: StabilizerCode,
    target: StabilizerCode,
    m1: usize,
    m2: usize,
    circuit: ConversionCircuit,
}

fn fixtures() -> Vec<Fixture> {
    vec![
        Fixture {
            name: "[[5,1,3]] to Steane",
            source: library::five_qubit(),
            target: library::steane(),
            m1: 3,
            m2: 1,
            circuit: reference::five_to_steane(),
        },
        Fixture {
            name: "Steane to RM15",
            source: library::steane(),
            target: library::reed_muller_15(),
            m1: 8,
            m2: 0,
            circuit: reference::steane_to_rm15(),
        },
        Fixture {
            name: "Steane to QPC",
            source: library::steane(),
            target: library::qpc34(),
            m1: 5,
            m2: 0,
            circuit: reference::steane_to_qpc(),
        },
    ]
}

fn criterion_1() -> Outcome {
    let plan = plan_conversion(&library::five_qubit(), &library::steane(), 3, 1)
        .map_err(|e| e.to_string())?;
    let table = reference::five_to_steane();
    for phase in [Phase::SourceIabc, Phase::TargetInverse] {
        ensure(
            plan.circuit.gates_in(phase) == table.gates_in(phase),
            format!("{} differs", phase.label()),
        )?;
    }
    for phase in [Phase::ADiff, Phase::CDiff, Phase::BDiff] {
        ensure(
            sorted(&plan.circuit.gates_in(phase)) == sorted(&table.gates_in(phase)),
            format!("{} multiset differs", phase.label()),
        )?;
    }
    ensure(plan.circuit.len() == table.len(), "gate counts differ")?;
    let seeded = plan
        .with_circuit(table.clone())
        .map_err(|e| e.to_string())?;
    let (ordered, stats) =
        order_for_fault_tolerance(&seeded, &step_passes, OrderOptions::default())
            .map_err(|e| e.to_string())?;
    ensure(
        stats.draft_unchanged && ordered == table,
        "ordering search changed the published order",
    )?;
    Ok(format!(
        "{} gates, U phases exact, A/C/B multisets equal, published order kept",
        table.len()
    ))
}

fn criterion_2() -> Outcome {
    let five = library::five_qubit();
    let sf = to_standard_form(&five).map_err(|e| e.to_string())?;
    ensure(sf.swaps().is_empty(), "five-qubit standard form used swaps")?;
    ensure(
        sf.code().check_matrix()
            == m(&[
                "10001 | 11011",
                "01001 | 00110",
                "00101 | 11000",
                "00011 | 10111",
            ]),
        "standard form",
    )?;
    let aug = sf.code().augment(3);
    ensure(
        aug.check_matrix()
            == m(&[
                "10001000 | 11011000",
                "01001000 | 00110000",
                "00101000 | 11000000",
                "00011000 | 10111000",
                "00000100 | 00000000",
                "00000010 | 00000000",
                "00000001 | 00000000",
            ]),
        "augmented source",
    )?;
    let swapped = aug
        .apply_gates(&parse_gate_list("SWAP(5,6), SWAP(6,7), SWAP(7,8)").unwrap())
        .unwrap();
    ensure(
        swapped.check_matrix()
            == m(&[
                "10000001 | 11010001",
                "01000001 | 00110000",
                "00100001 | 11000000",
                "00010001 | 10110001",
                "00001000 | 00000000",
                "00000100 | 00000000",
                "00000010 | 00000000",
            ]),
        "augmented source after swaps",
    )?;
    let src = augmented_iabc(&five, 3).map_err(|e| e.to_string())?;
    ensure(
        src.code().check_matrix()
            == m(&[
                "10000001 | 11010001",
                "01000001 | 00111110",
                "00100001 | 11001110",
                "00010001 | 10110001",
                "00001001 | 00001111",
                "00000101 | 00001111",
                "00000011 | 00001111",
            ]),
        "source IABC",
    )?;
    let tgt = augmented_iabc(&library::steane(), 1).map_err(|e| e.to_string())?;
    ensure(
        tgt.code().check_matrix()
            == m(&[
                "10000000 | 00011100",
                "01000001 | 00010110",
                "00100001 | 00001110",
                "00010000 | 10100011",
                "00001000 | 11000011",
                "00000100 | 11100000",
                "00000011 | 00000011",
            ]),
        "Steane IABC",
    )?;
    let plan = plan_conversion(&five, &library::steane(), 3, 1).map_err(|e| e.to_string())?;
    ensure(
        plan.after_ac.check_matrix()
            == m(&[
                "10000000 | 01001100",
                "01000001 | 10111010",
                "00100001 | 01001010",
                "00010000 | 00101101",
                "00001000 | 10010011",
                "00000100 | 10010010",
                "00000011 | 00010111",
            ]),
        "source after A/C phases",
    )?;
    ensure(
        plan.d_matrix
            == m(&[
                "0101000", "1010110", "0100010", "1000111", "0101000", "0111001", "0001010",
            ]),
        "D matrix",
    )?;
    Ok("6 matrices bit-exact".into())
}

fn criterion_3() -> Outcome {
    let printed = StabilizerCode::from_strs(&[
        "XZIIZZII", "ZXZZZIZX", "IZXIZIZX", "IIZXZZIZ", "ZIIZXIZZ", "ZIIZIXZI", "IIIZIZYY",
    ])
    .map_err(|e| e.to_string())?;
    let table = reference::five_to_steane();
    let prefix: Vec<_> = table.gates().into_iter().take(15).collect();
    let reached = library::five_qubit()
        .augment(3)
        .apply_gates(&prefix)
        .unwrap();
    ensure(
        reached.same_group(&printed),
        "printed code is not the CZ(6,8) intermediate",
    )?;

    let x5: PauliOperator = "IIIIXIII".parse().unwrap();
    let x6z8: PauliOperator = "IIIIIXIZ".parse().unwrap();
    let s1 = printed.syndrome(&x5).unwrap();
    let s2 = printed.syndrome(&x6z8).unwrap();
    let want = vec![-1, -1, -1, -1, 1, 1, 1];
    ensure(s1.eigenvalues() == want, format!("syndrome(X5) = {s1}"))?;
    ensure(s2.eigenvalues() == want, format!("syndrome(X6Z8) = {s2}"))?;
    ensure(
        printed.contains(&x5.multiply(&x6z8).unwrap()).unwrap(),
        "X5 X6Z8 is not a stabilizer",
    )?;

    let report = check_step(
        &prefix[..14]
            .iter()
            .fold(library::five_qubit().augment(3), |c, g| {
                c.conjugated(g).unwrap()
            }),
        &prefix[14],
    )
    .map_err(|e| e.to_string())?;
    ensure(report.passed(), "CZ(6,8) step fails")?;
    let others: Vec<String> = ["IIIIIZIX", "IIIIIYIZ", "IIIIIZIY"]
        .iter()
        .map(|s| {
            let e: PauliOperator = s.parse().unwrap();
            format!(
                "{}:{}",
                e.to_sparse_string(),
                report.entry(&e).unwrap().class.label()
            )
        })
        .collect();
    Ok(format!(
        "{s1}, product in group; others {}",
        others.join(" ")
    ))
}

fn criterion_4() -> Outcome {
    let mut lines = Vec::new();
    for f in fixtures() {
        for (dir, start, circuit) in [
            ("forward", f.source.augment(f.m1), f.circuit.clone()),
            ("reverse", f.target.augment(f.m2), f.circuit.inverse()),
        ] {
            let r = verify_circuit(&start, &circuit, false).map_err(|e| e.to_string())?;
            let fail = r
                .first_failure()
                .map(|s| format!(" first failure step {} {}", s.step_index + 1, s.gate));
            ensure(
                r.passed,
                format!("{} {dir}:{}", f.name, fail.unwrap_or_default()),
            )?;
            ensure(
                r.initial_distance_ok,
                format!("{} {dir}: start code", f.name),
            )?;
            for s in &r.steps {
                ensure(
                    s.code_after.distance_at_least_3().at_least_3,
                    format!("{} {dir}: distance after step {}", f.name, s.step_index + 1),
                )?;
            }
            lines.push(format!("{} {dir} {} steps", f.name, r.steps.len()));
        }
    }
    Ok(lines.join(", "))
}

fn criterion_5() -> Outcome {
    let mut lines = Vec::new();
    for f in fixtures() {
        let out = f.source.augment(f.m1).apply_circuit(&f.circuit).unwrap();
        let tgt = f.target.augment(f.m2);
        ensure(
            out.echelon_matrix() == tgt.echelon_matrix(),
            format!("{}: groups differ", f.name),
        )?;
        let signs = out.sign_mismatches(&tgt).unwrap();
        let s: String = signs.iter().map(|&b| if b { '-' } else { '+' }).collect();
        lines.push(format!("{} signs {s}", f.name));
    }
    Ok(lines.join(", "))
}

fn criterion_6() -> Outcome {
    let start = library::five_qubit().augment(3);
    let table = reference::five_to_steane();
    let simplified = synth::simplify(&start, &table, &step_passes);
    let removed = table.two_qubit_count() as isize - simplified.two_qubit_count() as isize;
    ensure(removed == 4, format!("removed {removed} two-qubit gates"))?;
    let r = verify_circuit(&start, &simplified, false).map_err(|e| e.to_string())?;
    ensure(r.passed, "simplified circuit fails verification")?;
    let out = start.apply_circuit(&simplified).unwrap();
    ensure(
        out.echelon_matrix() == library::steane().augment(1).echelon_matrix(),
        "simplified circuit misses the target",
    )?;
    Ok(format!("{} -> {} gates", table.len(), simplified.len()))
}

fn random_gate(rng: &mut ChaCha8Rng, n: usize) -> CliffordGate {
    let a = rng.gen_range(0..n);
    let b = (a + rng.gen_range(1..n)) % n;
    match rng.gen_range(0..5) {
        0 => CliffordGate::h(a),
        1 => CliffordGate::p(a),
        2 => CliffordGate::cnot(a, b),
        3 => CliffordGate::cz(a, b),
        _ => CliffordGate::swap(a, b),
    }
}

fn random_code(rng: &mut ChaCha8Rng, n: usize, k: usize) -> StabilizerCode {
    let gens = (0..n - k)
        .map(|q| {
            PauliOperator::single(n, q, PauliKind::Z)
                .unwrap()
                .with_sign(rng.gen())
        })
        .collect();
    let gates: Vec<_> = (0..8 * n).map(|_| random_gate(rng, n)).collect();
    StabilizerCode::new(n, gens)
        .unwrap()
        .apply_gates(&gates)
        .unwrap()
}

fn random_pauli(rng: &mut ChaCha8Rng, n: usize) -> PauliOperator {
    let x: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
    let z: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
    PauliOperator::from_bits(BitVec::from_bools(&x), BitVec::from_bools(&z), rng.gen()).unwrap()
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
    let mut asymmetric = 0;
    let mut nonzero_diagonal = 0;
    let mut errors = 0;
    let mut example = None;
    for _ in 0..200 {
        let k = rng.gen_range(1..=2);
        let n1 = rng.gen_range(k + 2..=7);
        let n2 = rng.gen_range(k + 2..=7);
        let total = n1.max(n2);
        let a = random_code(&mut rng, n1, k);
        let b = random_code(&mut rng, n2, k);
        match plan_conversion(&a, &b, total - n1, total - n2) {
            Ok(plan) => {
                if !plan.d_matrix.is_symmetric() {
                    asymmetric += 1;
                }
                if plan.d_matrix.diagonal().iter().any(|&d| d) {
                    nonzero_diagonal += 1;
                    example.get_or_insert_with(|| format!("[[{n1},{k}]] -> [[{n2},{k}]]"));
                }
            }
            Err(_) => errors += 1,
        }
    }
    let summary = format!(
        "200 pairs: {asymmetric} asymmetric, {nonzero_diagonal} with nonzero diagonal, {errors} planning errors"
    );
    if asymmetric == 0 && nonzero_diagonal == 0 && errors == 0 {
        Ok(summary)
    } else {
        Err(format!(
            "{summary}; first nonzero diagonal {}",
            example.unwrap_or_default()
        ))
    }
}

/// Commutation counted qubit by qubit: two distinct non-identity letters anticommute.
fn oracle_anticommute(a: &PauliOperator, b: &PauliOperator) -> bool {
    let mut parity = false;
    for q in 0..a.num_qubits() {
        if let (Some(p), Some(r)) = (a.kind_at(q), b.kind_at(q)) {
            parity ^= p != r;
        }
    }
    parity
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    let rounds = 10_000;
    for i in 0..rounds {
        let n = rng.gen_range(2..=10);
        let (a, b, c) = (
            random_pauli(&mut rng, n),
            random_pauli(&mut rng, n),
            random_pauli(&mut rng, n),
        );
        let ab = a.symplectic_inner_product(&b).unwrap();
        ensure(
            ab == oracle_anticommute(&a, &b),
            format!("round {i}: inner product vs oracle"),
        )?;
        let bc = b.multiply(&c).unwrap();
        ensure(
            a.symplectic_inner_product(&bc).unwrap()
                == ab ^ a.symplectic_inner_product(&c).unwrap(),
            format!("round {i}: bilinearity"),
        )?;

        let g = random_gate(&mut rng, n);
        let (ga, gb) = (g.conjugate(&a).unwrap(), g.conjugate(&b).unwrap());
        ensure(
            ga.commutes_with(&gb).unwrap() == a.commutes_with(&b).unwrap(),
            format!("round {i}: {g} changed commutation"),
        )?;
        if g.kind().is_self_inverse() {
            ensure(
                g.conjugate(&ga).unwrap() == a,
                format!("round {i}: {g} is not an involution"),
            )?;
        }

        let k = rng.gen_range(0..n);
        let code = random_code(&mut rng, n, k);
        if code.num_generators() > 0 {
            let s = &code.generators()[rng.gen_range(0..code.num_generators())];
            ensure(
                code.syndrome(&a).unwrap() == code.syndrome(&a.multiply(s).unwrap()).unwrap(),
                format!("round {i}: syndrome changed under stabilizer multiplication"),
            )?;
        }
    }
    Ok(format!("{rounds} rounds of 5 checks, zero failures"))
}

fn criterion_9() -> Outcome {
    for f in fixtures() {
        let back = f
            .target
            .augment(f.m2)
            .apply_circuit(&f.circuit.inverse())
            .unwrap();
        ensure(
            back.echelon_matrix() == f.source.augment(f.m1).echelon_matrix(),
            format!("{}: inverse misses the source", f.name),
        )?;
    }
    Ok("3 fixtures".into())
}

fn criterion_10() -> Outcome {
    let d2 = StabilizerCode::from_strs(&["XXXX", "ZZZZ"]).unwrap();
    let r = check_step(&d2, &CliffordGate::cnot(0, 1)).map_err(|e| e.to_string())?;
    let Verdict::LogicalError { error } = &r.verdict else {
        return Err(format!("distance-2 code verdict {:?}", r.verdict));
    };
    let logical = error.to_sparse_string();

    // B gates in reverse order break fault tolerance mid-circuit.
    let plan = plan_conversion(&library::five_qubit(), &library::steane(), 3, 1)
        .map_err(|e| e.to_string())?;
    let table = reference::five_to_steane();
    let mut bad = ConversionCircuit::new(8);
    for phase in Phase::ALL {
        let mut gs = table.gates_in(phase);
        if phase == Phase::BDiff {
            gs.reverse();
        }
        bad.extend(&gs, phase).unwrap();
    }
    let start = plan.augmented_source();
    let bad_report = verify_circuit(&start, &bad, false).map_err(|e| e.to_string())?;
    ensure(!bad_report.passed, "reversed B order unexpectedly passes")?;
    let fail = bad_report.first_failure().unwrap().gate;
    let repaired = match order_for_fault_tolerance(
        &plan.with_circuit(bad).unwrap(),
        &step_passes,
        OrderOptions::default(),
    ) {
        Ok((c, _)) => {
            let r = verify_circuit(&start, &c, false).map_err(|e| e.to_string())?;
            ensure(r.passed, "repaired circuit fails")?;
            "repaired".to_string()
        }
        Err(stabconv::Error::Exhausted { .. }) => "exhaustion reported".to_string(),
        Err(e) => return Err(e.to_string()),
    };

    let unrepaired = reference::steane_to_qpc_unrepaired();
    let out = library::steane()
        .augment(5)
        .apply_circuit(&unrepaired)
        .unwrap();
    ensure(
        !out.same_group(&library::qpc34()),
        "printed QPC listing unexpectedly reaches the target",
    )?;
    Ok(format!(
        "distance-2 logical {logical}; reversed B order fails at {fail}, {repaired}; printed QPC listing misses target"
    ))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("fixture equality [[5,1,3]] to Steane", criterion_1),
        ("intermediate matrices", criterion_2),
        ("degeneracy syndrome", criterion_3),
        ("full FT verification", criterion_4),
        ("end-to-end group equality", criterion_5),
        ("simplification count", criterion_6),
        ("D symmetric with zero diagonal", criterion_7),
        ("algebra property suite", criterion_8),
        ("round trip", criterion_9),
        ("negative control", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
