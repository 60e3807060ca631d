//! Fault-tolerant conversion circuits between stabilizer codes.
//!
//! Both codes are padded with `|+⟩` ancillas to a common size and brought
//! into IABC form `[I A | B C]`. CNOT gates then remove the A difference,
//! CZ gates the C difference, and CZ gates on the symmetric matrix
//! `D = B''_S + B'_T` the remaining B difference. Every intermediate code is
//! checked to correct all single-qubit errors plus the two-qubit errors the
//! current gate can spread.
//!
//! ```
//! use stabconv::{library, synth};
//!
//! let s = synth::synthesize(
//!     &library::five_qubit(),
//!     &library::steane(),
//!     3,
//!     1,
//!     synth::OrderOptions::default(),
//! )
//! .unwrap();
//! let out = s.plan.augmented_source().apply_circuit(&s.circuit).unwrap();
//! assert!(out.same_group(&s.plan.augmented_target()));
//! ```

pub mod bits;
pub mod circuit;
pub mod cli;
pub mod code;
pub mod error;
pub mod forms;
pub mod gate;
pub mod library;
pub mod pauli;
pub mod synth;
pub mod verify;

pub use circuit::{ConversionCircuit, Phase};
pub use code::{Membership, StabilizerCode, Syndrome};
pub use error::{Error, Result};
pub use forms::{augmented_iabc, to_iabc, to_standard_form, IabcForm, StandardForm};
pub use gate::{CliffordGate, GateKind};
pub use pauli::{PauliKind, PauliOperator};
pub use synth::{plan_conversion, ConversionPlan};
pub use verify::{check_step, verify_circuit, FtReportBundle, StepReport};
