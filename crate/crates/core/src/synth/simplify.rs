//! Cancellation of repeated self-inverse gates.
//!
//! The circuit is cut greedily into maximal runs of pairwise commuting
//! gates. Equal self-inverse gates inside a run cancel. When nothing
//! cancels directly, adjacent runs whose two concatenations induce the same
//! symplectic map are exchanged and the result re-cut. A candidate is kept
//! only if it is shorter and still passes the step verifier from the start.

use crate::circuit::{same_symplectic_map, ConversionCircuit, Step};
use crate::code::StabilizerCode;
use crate::gate::CliffordGate;

fn runs(steps: &[Step], n: usize) -> Vec<Vec<Step>> {
    let mut out: Vec<Vec<Step>> = Vec::new();
    for s in steps {
        match out.last_mut() {
            Some(run) if run.iter().all(|t| t.gate.commutes_with(&s.gate, n)) => run.push(*s),
            _ => out.push(vec![*s]),
        }
    }
    out
}

fn cancel_within(run: &[Step]) -> Vec<Step> {
    let mut out: Vec<Step> = Vec::with_capacity(run.len());
    for s in run {
        if s.gate.kind().is_self_inverse() {
            if let Some(pos) = out.iter().position(|t| t.gate == s.gate) {
                out.remove(pos);
                continue;
            }
        }
        out.push(*s);
    }
    out
}

fn cancel_all(steps: &[Step], n: usize) -> Vec<Step> {
    runs(steps, n)
        .iter()
        .flat_map(|r| cancel_within(r))
        .collect()
}

fn run_gates(run: &[Step]) -> Vec<CliffordGate> {
    run.iter().map(|s| s.gate).collect()
}

fn passes<V>(code0: &StabilizerCode, steps: &[Step], verifier: &V) -> bool
where
    V: Fn(&StabilizerCode, &CliffordGate) -> bool,
{
    let mut code = code0.clone();
    for s in steps {
        if !verifier(&code, &s.gate) {
            return false;
        }
        code = code.conjugated(&s.gate).expect("gate in range");
    }
    true
}

/// Removes cancelling gate pairs while every prefix keeps passing `verifier`.
pub fn simplify<V>(
    code0: &StabilizerCode,
    circuit: &ConversionCircuit,
    verifier: &V,
) -> ConversionCircuit
where
    V: Fn(&StabilizerCode, &CliffordGate) -> bool,
{
    let n = circuit.num_qubits();
    let mut steps = circuit.steps().to_vec();
    loop {
        let mut next = None;

        let direct = cancel_all(&steps, n);
        if direct.len() < steps.len() && passes(code0, &direct, verifier) {
            next = Some(direct);
        }

        if next.is_none() {
            let rs = runs(&steps, n);
            for i in 0..rs.len().saturating_sub(1) {
                let (a, b) = (&rs[i], &rs[i + 1]);
                let ab = [run_gates(a), run_gates(b)].concat();
                let ba = [run_gates(b), run_gates(a)].concat();
                if !same_symplectic_map(&ab, &ba, n) {
                    continue;
                }
                let mut swapped: Vec<Step> = rs[..i].iter().flatten().copied().collect();
                swapped.extend(b.iter().copied());
                swapped.extend(a.iter().copied());
                swapped.extend(rs[i + 2..].iter().flatten().copied());
                let candidate = cancel_all(&swapped, n);
                if candidate.len() < steps.len() && passes(code0, &candidate, verifier) {
                    next = Some(candidate);
                    break;
                }
            }
        }

        match next {
            Some(s) => steps = s,
            None => break,
        }
    }
    ConversionCircuit::from_steps(n, steps).expect("gates already validated")
}
