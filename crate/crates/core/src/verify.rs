//! Per-gate error-correctability checks for conversion circuits.
//!
//! After every gate the current code must have distance at least 3 and must
//! be able to tell apart every weight-1 error on every qubit together with
//! the weight-2 errors the gate itself can spread.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::circuit::ConversionCircuit;
use crate::code::{CodeTables, StabilizerCode, Syndrome};
use crate::error::{Error, Result};
use crate::gate::CliffordGate;
use crate::pauli::{PauliKind, PauliOperator};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ErrorOrigin {
    SingleQubit,
    GatePropagated,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ErrorClass {
    /// Syndrome shared with no other error in the set.
    UniqueSyndrome,
    /// Zero syndrome and inside the stabilizer group; acts trivially.
    Stabilizer,
    /// Shares its syndrome with the listed error and differs from it by a stabilizer.
    DegenerateWith(PauliOperator),
    /// Shares its syndrome with the listed error but not up to a stabilizer.
    UncorrectableCollision(PauliOperator),
    /// Zero syndrome, outside the group.
    Logical,
}

impl ErrorClass {
    pub fn is_failure(&self) -> bool {
        matches!(
            self,
            ErrorClass::UncorrectableCollision(_) | ErrorClass::Logical
        )
    }

    pub fn label(&self) -> String {
        match self {
            ErrorClass::UniqueSyndrome => "unique-syndrome".into(),
            ErrorClass::Stabilizer => "stabilizer".into(),
            ErrorClass::DegenerateWith(e) => format!("degenerate-with({})", e.to_sparse_string()),
            ErrorClass::UncorrectableCollision(e) => {
                format!("uncorrectable-collision({})", e.to_sparse_string())
            }
            ErrorClass::Logical => "logical".into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ErrorEntry {
    pub error: PauliOperator,
    pub syndrome: Syndrome,
    pub class: ErrorClass,
    pub origin: ErrorOrigin,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    DistanceBelowThree {
        witness: PauliOperator,
    },
    LogicalError {
        error: PauliOperator,
    },
    Collision {
        error: PauliOperator,
        partner: PauliOperator,
    },
}

impl Verdict {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => f.write_str("pass"),
            Verdict::DistanceBelowThree { witness } => {
                write!(
                    f,
                    "fail: distance below 3 (logical {})",
                    witness.to_sparse_string()
                )
            }
            Verdict::LogicalError { error } => {
                write!(f, "fail: logical error {}", error.to_sparse_string())
            }
            Verdict::Collision { error, partner } => write!(
                f,
                "fail: {} and {} share a syndrome",
                error.to_sparse_string(),
                partner.to_sparse_string()
            ),
        }
    }
}

#[derive(Clone, Debug)]
pub struct StepReport {
    /// 0-based position in the circuit.
    pub step_index: usize,
    pub gate: CliffordGate,
    pub code_after: StabilizerCode,
    pub distance_ok: bool,
    pub distance_witness: Option<PauliOperator>,
    pub error_table: Vec<ErrorEntry>,
    /// Set when two gate-propagated errors were accepted as degenerate with each other.
    pub two_vs_two_degeneracy: bool,
    pub verdict: Verdict,
}

impl StepReport {
    pub fn passed(&self) -> bool {
        self.verdict.passed()
    }

    pub fn entry(&self, e: &PauliOperator) -> Option<&ErrorEntry> {
        let e = e.unsigned();
        self.error_table.iter().find(|x| x.error == e)
    }

    pub fn degenerate_pairs(&self) -> usize {
        self.error_table
            .iter()
            .filter(|e| matches!(e.class, ErrorClass::DegenerateWith(_)))
            .count()
            / 2
    }

    /// ±1 table of the gate-propagated rows, or all rows when `all` is set.
    pub fn render_table(&self, all: bool) -> String {
        let mut out = format!(
            "step {} {}: {}\n",
            self.step_index + 1,
            self.gate,
            self.verdict
        );
        for row in &self.error_table {
            if !all
                && row.origin == ErrorOrigin::SingleQubit
                && !matches!(row.class, ErrorClass::DegenerateWith(_))
                && !row.class.is_failure()
            {
                continue;
            }
            out.push_str(&format!(
                "  {:<8} {}  {}\n",
                row.error.to_sparse_string(),
                row.syndrome,
                row.class.label()
            ));
        }
        out
    }
}

/// Weight-1 errors on all qubits followed by the gate's propagated weight-2 errors.
pub fn step_error_set(n: usize, gate: &CliffordGate) -> Result<Vec<(PauliOperator, ErrorOrigin)>> {
    let mut out = Vec::with_capacity(3 * n + 4);
    for q in 0..n {
        for k in PauliKind::ALL {
            out.push((PauliOperator::single(n, q, k)?, ErrorOrigin::SingleQubit));
        }
    }
    for e in gate.two_qubit_errors(n)? {
        out.push((e, ErrorOrigin::GatePropagated));
    }
    Ok(out)
}

/// Applies `gate` to `code_before` and classifies the step's error set.
pub fn check_step(code_before: &StabilizerCode, gate: &CliffordGate) -> Result<StepReport> {
    check_step_at(code_before, gate, 0)
}

fn check_step_at(
    code_before: &StabilizerCode,
    gate: &CliffordGate,
    step_index: usize,
) -> Result<StepReport> {
    let code_after = code_before.conjugated(gate)?;
    let (error_table, two_vs_two, distance_witness) = {
        let tables = CodeTables::new(&code_after);
        let witness = tables.low_weight_logical();
        let errors = step_error_set(code_after.num_qubits(), gate)?;
        let (table, two) = classify_errors(&tables, errors);
        (table, two, witness)
    };
    let verdict = if let Some(row) = error_table.iter().find(|r| r.class == ErrorClass::Logical) {
        Verdict::LogicalError {
            error: row.error.clone(),
        }
    } else if let Some(w) = &distance_witness {
        Verdict::DistanceBelowThree { witness: w.clone() }
    } else if let Some(row) = error_table
        .iter()
        .find(|r| matches!(r.class, ErrorClass::UncorrectableCollision(_)))
    {
        let ErrorClass::UncorrectableCollision(p) = &row.class else {
            unreachable!()
        };
        Verdict::Collision {
            error: row.error.clone(),
            partner: p.clone(),
        }
    } else {
        Verdict::Pass
    };
    Ok(StepReport {
        step_index,
        gate: *gate,
        distance_ok: distance_witness.is_none(),
        distance_witness,
        code_after,
        error_table,
        two_vs_two_degeneracy: two_vs_two,
        verdict,
    })
}

fn classify_errors(
    tables: &CodeTables<'_>,
    errors: Vec<(PauliOperator, ErrorOrigin)>,
) -> (Vec<ErrorEntry>, bool) {
    let syndromes: Vec<Syndrome> = errors.iter().map(|(e, _)| tables.syndrome_of(e)).collect();
    let mut by_syndrome: HashMap<&Syndrome, Vec<usize>> = HashMap::new();
    for (i, s) in syndromes.iter().enumerate() {
        by_syndrome.entry(s).or_default().push(i);
    }
    let mut two_vs_two = false;
    let mut classes = Vec::with_capacity(errors.len());
    for (i, (e, origin)) in errors.iter().enumerate() {
        let class = if syndromes[i].is_trivial() {
            if tables.in_group(e) {
                ErrorClass::Stabilizer
            } else {
                ErrorClass::Logical
            }
        } else {
            let mut class = ErrorClass::UniqueSyndrome;
            for &j in &by_syndrome[&syndromes[i]] {
                if j == i {
                    continue;
                }
                let other = &errors[j].0;
                let product = e.multiply(other).expect("same n");
                if tables.in_group(&product) {
                    if class == ErrorClass::UniqueSyndrome {
                        class = ErrorClass::DegenerateWith(other.clone());
                    }
                    if *origin == ErrorOrigin::GatePropagated
                        && errors[j].1 == ErrorOrigin::GatePropagated
                    {
                        two_vs_two = true;
                    }
                } else {
                    class = ErrorClass::UncorrectableCollision(other.clone());
                    break;
                }
            }
            class
        };
        classes.push(class);
    }
    let table = errors
        .into_iter()
        .zip(syndromes)
        .zip(classes)
        .map(|(((error, origin), syndrome), class)| ErrorEntry {
            error,
            syndrome,
            class,
            origin,
        })
        .collect();
    (table, two_vs_two)
}

/// Pass/fail form of [`check_step`], the default callback for ordering and simplification.
pub fn step_passes(code_before: &StabilizerCode, gate: &CliffordGate) -> bool {
    check_step(code_before, gate).is_ok_and(|r| r.passed())
}

#[derive(Clone, Debug)]
pub struct FtReportBundle {
    pub steps: Vec<StepReport>,
    pub passed: bool,
    pub initial_distance_ok: bool,
    pub max_error_table: usize,
    pub degenerate_pairs: usize,
    pub two_vs_two_steps: usize,
}

impl FtReportBundle {
    pub fn first_failure(&self) -> Option<&StepReport> {
        self.steps.iter().find(|s| !s.passed())
    }

    pub fn final_code(&self) -> Option<&StabilizerCode> {
        self.steps.last().map(|s| &s.code_after)
    }

    pub fn summary(&self) -> String {
        let mut out = format!(
            "{} after {} step(s); max error table {}, degenerate pairs {}, steps using 2-vs-2 degeneracy {}\n",
            if self.passed { "PASS" } else { "FAIL" },
            self.steps.len(),
            self.max_error_table,
            self.degenerate_pairs,
            self.two_vs_two_steps
        );
        if !self.initial_distance_ok {
            out.push_str("initial code has distance below 3\n");
        }
        if let Some(f) = self.first_failure() {
            out.push_str(&format!(
                "first failure at step {} {}: {}\n",
                f.step_index + 1,
                f.gate,
                f.verdict
            ));
        }
        out
    }

    pub fn render(&self, all_rows: bool) -> String {
        let mut out = String::new();
        for s in &self.steps {
            out.push_str(&s.render_table(all_rows));
        }
        out.push_str(&self.summary());
        out
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Row {
            error: String,
            syndrome: Vec<i8>,
            class: String,
            origin: ErrorOrigin,
        }
        #[derive(Serialize)]
        struct Step {
            step: usize,
            gate: String,
            distance_ok: bool,
            verdict: String,
            errors: Vec<Row>,
        }
        #[derive(Serialize)]
        struct Report {
            passed: bool,
            max_error_table: usize,
            degenerate_pairs: usize,
            two_vs_two_steps: usize,
            steps: Vec<Step>,
        }
        let r = Report {
            passed: self.passed,
            max_error_table: self.max_error_table,
            degenerate_pairs: self.degenerate_pairs,
            two_vs_two_steps: self.two_vs_two_steps,
            steps: self
                .steps
                .iter()
                .map(|s| Step {
                    step: s.step_index + 1,
                    gate: s.gate.to_string(),
                    distance_ok: s.distance_ok,
                    verdict: s.verdict.to_string(),
                    errors: s
                        .error_table
                        .iter()
                        .map(|e| Row {
                            error: e.error.to_sparse_string(),
                            syndrome: e.syndrome.eigenvalues(),
                            class: e.class.label(),
                            origin: e.origin,
                        })
                        .collect(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&r).expect("report serializes")
    }
}

/// Runs [`check_step`] along the circuit; stops at the first failing step
/// unless `exhaustive` is set.
pub fn verify_circuit(
    code0: &StabilizerCode,
    circuit: &ConversionCircuit,
    exhaustive: bool,
) -> Result<FtReportBundle> {
    if code0.num_qubits() != circuit.num_qubits() {
        return Err(Error::Dimension {
            expected: code0.num_qubits(),
            found: circuit.num_qubits(),
        });
    }
    let initial_distance_ok = code0.distance_at_least_3().at_least_3;
    let mut steps = Vec::with_capacity(circuit.len());
    let mut code = code0.clone();
    let mut passed = initial_distance_ok;
    for (i, gate) in circuit.gates().iter().enumerate() {
        let report = check_step_at(&code, gate, i)?;
        code = report.code_after.clone();
        let ok = report.passed();
        steps.push(report);
        if !ok {
            passed = false;
            if !exhaustive {
                break;
            }
        }
    }
    Ok(FtReportBundle {
        max_error_table: steps.iter().map(|s| s.error_table.len()).max().unwrap_or(0),
        degenerate_pairs: steps.iter().map(StepReport::degenerate_pairs).sum(),
        two_vs_two_steps: steps.iter().filter(|s| s.two_vs_two_degeneracy).count(),
        steps,
        passed,
        initial_distance_ok,
    })
}
