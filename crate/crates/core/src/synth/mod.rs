//! Conversion circuit synthesis: difference gates, FT ordering and cancellation.

mod order;
mod plan;
mod simplify;

pub use order::{order_for_fault_tolerance, OrderOptions, OrderStats};
pub use plan::{
    a_phase_gates, b_phase_gates, c_phase_gates, difference_gates, difference_matrix,
    inverse_record, plan_conversion, ConversionPlan, DifferenceGates,
};
pub use simplify::simplify;

use crate::circuit::ConversionCircuit;
use crate::code::StabilizerCode;
use crate::error::{Error, Result};
use crate::verify::step_passes;

/// Extra qubits tried beyond the larger block size when picking ancillas.
pub const ANCILLA_SLACK: usize = 3;

#[derive(Clone, Debug)]
pub struct Synthesis {
    pub plan: ConversionPlan,
    pub circuit: ConversionCircuit,
    pub stats: OrderStats,
}

/// Plans and orders one conversion with the default step verifier.
pub fn synthesize(
    source: &StabilizerCode,
    target: &StabilizerCode,
    m1: usize,
    m2: usize,
    opts: OrderOptions,
) -> Result<Synthesis> {
    let plan = plan_conversion(source, target, m1, m2)?;
    let (circuit, stats) = order_for_fault_tolerance(&plan, &step_passes, opts)?;
    Ok(Synthesis {
        plan,
        circuit,
        stats,
    })
}

/// Smallest total qubit count, from `max(n1, n2)` up to [`ANCILLA_SLACK`]
/// more, at which planning and fault-tolerant ordering both succeed.
pub fn synthesize_default_ancillas(
    source: &StabilizerCode,
    target: &StabilizerCode,
    opts: OrderOptions,
) -> Result<Synthesis> {
    let (n1, n2) = (source.num_qubits(), target.num_qubits());
    let base = n1.max(n2);
    let mut last_err = None;
    for total in base..=base + ANCILLA_SLACK {
        match synthesize(source, target, total - n1, total - n2, opts) {
            Ok(s) => return Ok(s),
            Err(e @ (Error::Exhausted { .. } | Error::Layout(_))) => last_err = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last_err.expect("at least one attempt"))
}
