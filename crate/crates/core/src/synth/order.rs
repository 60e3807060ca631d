//! Fault-tolerant gate ordering.
//!
//! The source and inverse-target records are kept as is. A and C gates form
//! one reorderable block searched by limited discrepancy search: at every
//! node the passing candidates are tried in draft order, and taking any but
//! the first costs one discrepancy. Each A/C ordering fixes the code entering
//! the B phase, so the B gates are recomputed from it and then ordered by a
//! depth-first search with memoized dead subsets (B gates commute, so the
//! state depends only on which gates remain).

use std::collections::{HashMap, HashSet};

use crate::bits::BitMatrix;
use crate::circuit::{ConversionCircuit, Phase, Step};
use crate::code::StabilizerCode;
use crate::error::{Error, Result};
use crate::gate::CliffordGate;
use crate::synth::plan::{b_phase_gates, difference_matrix, ConversionPlan};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrderOptions {
    /// Total verifier calls across the whole search.
    pub budget: usize,
    /// Verifier calls allowed per B-phase search.
    pub leaf_budget: usize,
    pub max_discrepancy: usize,
}

impl Default for OrderOptions {
    fn default() -> Self {
        OrderOptions {
            budget: 100_000,
            leaf_budget: 60,
            max_discrepancy: 3,
        }
    }
}

/// Outcome statistics of a successful search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderStats {
    pub verifier_calls: usize,
    pub discrepancies: usize,
    pub draft_unchanged: bool,
}

struct Search<'a, V> {
    verifier: &'a V,
    opts: OrderOptions,
    calls: usize,
    target_b: &'a crate::forms::IabcForm,
    draft_b: Vec<CliffordGate>,
    leaf_cache: HashMap<BitMatrix, Option<Vec<CliffordGate>>>,
    best: Vec<CliffordGate>,
    best_fail: Option<CliffordGate>,
    exhausted: bool,
}

impl<V> Search<'_, V>
where
    V: Fn(&StabilizerCode, &CliffordGate) -> bool,
{
    fn try_gate(
        &mut self,
        code: &StabilizerCode,
        g: &CliffordGate,
        prefix: &[CliffordGate],
    ) -> Option<StabilizerCode> {
        if self.calls >= self.opts.budget {
            self.exhausted = true;
            return None;
        }
        self.calls += 1;
        if (self.verifier)(code, g) {
            let next = code.conjugated(g).expect("gate in range");
            if prefix.len() + 1 > self.best.len() {
                self.best = prefix.to_vec();
                self.best.push(*g);
                self.best_fail = None;
            }
            Some(next)
        } else {
            if prefix.len() >= self.best.len() {
                self.best = prefix.to_vec();
                self.best_fail = Some(*g);
            }
            None
        }
    }

    fn ac(
        &mut self,
        code: &StabilizerCode,
        remaining: &[CliffordGate],
        out: &mut Vec<CliffordGate>,
        budget_d: usize,
    ) -> Option<Vec<CliffordGate>> {
        if remaining.is_empty() {
            return self.leaf(code, out);
        }
        let mut passing = Vec::new();
        for (i, g) in remaining.iter().enumerate() {
            if let Some(next) = self.try_gate(code, g, out) {
                passing.push((i, next));
            }
            if self.exhausted {
                return None;
            }
        }
        for (rank, (i, next)) in passing.into_iter().enumerate() {
            let cost = usize::from(rank > 0);
            if cost > budget_d {
                break;
            }
            let mut rest = remaining.to_vec();
            let g = rest.remove(i);
            out.push(g);
            if let Some(b) = self.ac(&next, &rest, out, budget_d - cost) {
                return Some(b);
            }
            out.pop();
            if self.exhausted {
                return None;
            }
        }
        None
    }

    fn leaf(
        &mut self,
        code: &StabilizerCode,
        prefix: &[CliffordGate],
    ) -> Option<Vec<CliffordGate>> {
        let key = code.echelon_matrix();
        if let Some(hit) = self.leaf_cache.get(&key) {
            return hit.clone();
        }
        let b = match difference_matrix(code, self.target_b) {
            Ok((_, d)) => b_phase_gates(&d),
            Err(_) => {
                self.leaf_cache.insert(key, None);
                return None;
            }
        };
        let b = self.draft_first(b);
        let mut out = Vec::new();
        let mut dead = HashSet::new();
        let mut local = self.opts.leaf_budget;
        let mut prefix = prefix.to_vec();
        let ok = self.b_dfs(code, &b, &mut out, &mut dead, &mut local, &mut prefix);
        let result = ok.then_some(out);
        if result.is_some() || local > 0 {
            self.leaf_cache.insert(key, result.clone());
        }
        result
    }

    // Keeps the draft's B order when the recomputed multiset matches it.
    fn draft_first(&self, mut b: Vec<CliffordGate>) -> Vec<CliffordGate> {
        let mut sorted_b = b.clone();
        sorted_b.sort();
        let mut sorted_d = self.draft_b.clone();
        sorted_d.sort();
        if sorted_b == sorted_d {
            b = self.draft_b.clone();
        }
        b
    }

    fn b_dfs(
        &mut self,
        code: &StabilizerCode,
        remaining: &[CliffordGate],
        out: &mut Vec<CliffordGate>,
        dead: &mut HashSet<Vec<CliffordGate>>,
        local: &mut usize,
        prefix: &mut Vec<CliffordGate>,
    ) -> bool {
        if remaining.is_empty() {
            return true;
        }
        let mut key = remaining.to_vec();
        key.sort();
        if dead.contains(&key) {
            return false;
        }
        for (i, g) in remaining.iter().enumerate() {
            if *local == 0 {
                return false;
            }
            *local -= 1;
            let Some(next) = self.try_gate(code, g, prefix) else {
                if self.exhausted {
                    return false;
                }
                continue;
            };
            let mut rest = remaining.to_vec();
            rest.remove(i);
            out.push(*g);
            prefix.push(*g);
            if self.b_dfs(&next, &rest, out, dead, local, prefix) {
                return true;
            }
            out.pop();
            prefix.pop();
            if self.exhausted {
                return false;
            }
        }
        if *local > 0 {
            dead.insert(key);
        }
        false
    }
}

fn exhausted(budget: usize, best: usize, fail: Option<CliffordGate>) -> Error {
    Error::Exhausted {
        budget,
        best_prefix: best,
        failing_gate: fail.map(|g| g.to_string()),
    }
}

/// Reorders the plan's A/C and B gates so that every prefix passes `verifier`.
///
/// `verifier(code, gate)` must report whether applying `gate` to `code` is a
/// fault-tolerant step. B-phase gates are recomputed for each A/C ordering,
/// so their multiset can differ from the draft's when A and C gates sharing
/// a target are interleaved.
pub fn order_for_fault_tolerance<V>(
    plan: &ConversionPlan,
    verifier: &V,
    opts: OrderOptions,
) -> Result<(ConversionCircuit, OrderStats)>
where
    V: Fn(&StabilizerCode, &CliffordGate) -> bool,
{
    let draft = &plan.circuit;
    let n = draft.num_qubits();
    let source_gates = draft.gates_in(Phase::SourceIabc);
    let inverse_gates = draft.gates_in(Phase::TargetInverse);
    let ac_steps: Vec<Step> = draft
        .steps()
        .iter()
        .filter(|s| matches!(s.phase, Phase::ADiff | Phase::CDiff))
        .copied()
        .collect();
    let ac_gates: Vec<CliffordGate> = ac_steps.iter().map(|s| s.gate).collect();
    let draft_b = draft.gates_in(Phase::BDiff);

    let mut search = Search {
        verifier,
        opts,
        calls: 0,
        target_b: &plan.target_iabc,
        draft_b,
        leaf_cache: HashMap::new(),
        best: Vec::new(),
        best_fail: None,
        exhausted: false,
    };

    let mut code = plan.augmented_source();
    for (i, g) in source_gates.iter().enumerate() {
        search.calls += 1;
        if !verifier(&code, g) {
            return Err(exhausted(opts.budget, i, Some(*g)));
        }
        code = code.conjugated(g)?;
    }
    let after_source = code;

    let mut found = None;
    let mut used_d = 0;
    for d in 0..=opts.max_discrepancy {
        let mut out = Vec::new();
        if let Some(b) = search.ac(&after_source, &ac_gates, &mut out, d) {
            found = Some((out, b));
            used_d = d;
            break;
        }
        if search.exhausted {
            break;
        }
    }
    let Some((ac_order, b_order)) = found else {
        return Err(exhausted(
            opts.budget,
            source_gates.len() + search.best.len(),
            search.best_fail,
        ));
    };

    let mut circuit = ConversionCircuit::new(n);
    circuit.extend(&source_gates, Phase::SourceIabc)?;
    for g in &ac_order {
        let phase = ac_steps
            .iter()
            .find(|s| s.gate == *g)
            .map(|s| s.phase)
            .expect("gate from draft");
        circuit.push(*g, phase)?;
    }
    circuit.extend(&b_order, Phase::BDiff)?;

    let mut code = after_source.apply_gates(&ac_order)?.apply_gates(&b_order)?;
    for g in &inverse_gates {
        search.calls += 1;
        if !verifier(&code, g) {
            return Err(exhausted(opts.budget, circuit.len(), Some(*g)));
        }
        code = code.conjugated(g)?;
        circuit.push(*g, Phase::TargetInverse)?;
    }
    let draft_unchanged = circuit == *draft;
    Ok((
        circuit,
        OrderStats {
            verifier_calls: search.calls,
            discrepancies: used_d,
            draft_unchanged,
        },
    ))
}
