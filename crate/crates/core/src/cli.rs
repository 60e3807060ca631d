//! Command-line front end. `main.rs` only forwards to [`run`].

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::circuit::ConversionCircuit;
use crate::code::StabilizerCode;
use crate::error::{Error, Result};
use crate::forms::{augmented_iabc, to_standard_form};
use crate::library;
use crate::synth::{self, OrderOptions, Synthesis};
use crate::verify::{step_passes, verify_circuit};

pub const EXIT_OK: i32 = 0;
pub const EXIT_OTHER: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_K_MISMATCH: i32 = 3;
pub const EXIT_LAYOUT: i32 = 4;
pub const EXIT_EXHAUSTED: i32 = 5;
pub const EXIT_FT_FAILURE: i32 = 6;
pub const EXIT_SIGN_MISMATCH: i32 = 7;

#[derive(Parser, Debug)]
#[command(
    name = "stabconv",
    version,
    about = "Fault-tolerant stabilizer code conversion"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Synthesize a conversion circuit between two codes.
    Convert(ConvertArgs),
    /// Print standard form, IABC form or logical operators of a code.
    Forms(FormsArgs),
    /// Check every step of a circuit file against a code.
    Verify(VerifyArgs),
    /// Check whether a code has distance at least 3.
    Distance {
        /// Code file or builtin:<name>
        code: String,
    },
    /// List built-in codes, or print one.
    Library { name: Option<String> },
}

#[derive(Args, Debug)]
struct ConvertArgs {
    /// Source code file or builtin:<name>
    source: String,
    /// Target code file or builtin:<name>
    target: String,
    /// Ancillas added to the source
    #[arg(long)]
    m1: Option<usize>,
    /// Ancillas added to the target
    #[arg(long)]
    m2: Option<usize>,
    /// Verify every step and print the report summary
    #[arg(long)]
    verify: bool,
    /// Cancel repeated gates after ordering
    #[arg(long)]
    simplify: bool,
    /// Fail unless the final generator signs match the target exactly
    #[arg(long)]
    strict_signs: bool,
    /// Emit the canonical draft without fault-tolerant reordering
    #[arg(long)]
    draft: bool,
    /// Write the circuit as JSON
    #[arg(long)]
    emit: Option<PathBuf>,
    /// Write the step report as JSON (implies --verify)
    #[arg(long)]
    report: Option<PathBuf>,
    /// Verifier call budget for the ordering search
    #[arg(long, default_value_t = 100_000)]
    budget: usize,
}

#[derive(Args, Debug)]
struct FormsArgs {
    /// Code file or builtin:<name>
    code: String,
    #[arg(long)]
    standard: bool,
    #[arg(long)]
    iabc: bool,
    #[arg(long)]
    logicals: bool,
    /// Number of |+> ancillas to append
    #[arg(long)]
    augment: Option<usize>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Code file or builtin:<name>; padded with ancillas up to the circuit size
    code: String,
    /// Circuit JSON file
    circuit: PathBuf,
    /// Keep checking after the first failing step
    #[arg(long)]
    exhaustive: bool,
    /// Print the report as JSON
    #[arg(long)]
    json: bool,
    /// Print every error row, not only propagated and notable ones
    #[arg(long)]
    all_rows: bool,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. }
        | Error::Dimension { .. }
        | Error::QubitOutOfRange { .. }
        | Error::RepeatedQubit(_)
        | Error::InvalidCode(_)
        | Error::UnknownBuiltin(_) => EXIT_PARSE,
        Error::KMismatch { .. } | Error::QubitCountMismatch { .. } => EXIT_K_MISMATCH,
        Error::Layout(_) => EXIT_LAYOUT,
        Error::Exhausted { .. } => EXIT_EXHAUSTED,
        Error::Io(_) | Error::Internal(_) => EXIT_OTHER,
    }
}

/// Loads `builtin:<name>` or a code file.
pub fn load_code(arg: &str) -> Result<StabilizerCode> {
    if arg.starts_with("builtin:") {
        return library::builtin(arg);
    }
    let text =
        std::fs::read_to_string(Path::new(arg)).map_err(|e| Error::Io(format!("{arg}: {e}")))?;
    StabilizerCode::parse_text(&text)
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            if code == EXIT_OK {
                let _ = write!(out, "{e}");
            } else {
                let _ = write!(err, "{e}");
            }
            return code;
        }
    };
    let result = match cli.command {
        Command::Convert(a) => convert(a, out),
        Command::Forms(a) => forms(a, out),
        Command::Verify(a) => verify(a, out),
        Command::Distance { code } => distance(&code, out),
        Command::Library { name } => library_cmd(name.as_deref(), out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Io(e.to_string())
}

fn convert(a: ConvertArgs, out: &mut dyn Write) -> Result<i32> {
    let source = load_code(&a.source)?;
    let target = load_code(&a.target)?;
    let (n1, n2) = (source.num_qubits(), target.num_qubits());
    let opts = OrderOptions {
        budget: a.budget,
        ..OrderOptions::default()
    };
    let ancillas = match (a.m1, a.m2) {
        (Some(m1), Some(m2)) => Some((m1, m2)),
        (Some(m1), None) => Some((
            m1,
            (n1 + m1).checked_sub(n2).ok_or(Error::QubitCountMismatch {
                source_total: n1 + m1,
                target_total: n2,
            })?,
        )),
        (None, Some(m2)) => Some((
            (n2 + m2).checked_sub(n1).ok_or(Error::QubitCountMismatch {
                source_total: n1,
                target_total: n2 + m2,
            })?,
            m2,
        )),
        (None, None) => None,
    };

    let synthesis = if a.draft {
        let (m1, m2) = ancillas.unwrap_or_else(|| {
            let total = n1.max(n2);
            (total - n1, total - n2)
        });
        let plan = synth::plan_conversion(&source, &target, m1, m2)?;
        let circuit = plan.circuit.clone();
        Synthesis {
            plan,
            circuit,
            stats: synth::OrderStats {
                verifier_calls: 0,
                discrepancies: 0,
                draft_unchanged: true,
            },
        }
    } else {
        match ancillas {
            Some((m1, m2)) => synth::synthesize(&source, &target, m1, m2, opts)?,
            None => synth::synthesize_default_ancillas(&source, &target, opts)?,
        }
    };
    let plan = &synthesis.plan;
    let aug_source = plan.augmented_source();
    let aug_target = plan.augmented_target();

    let mut circuit = synthesis.circuit.clone();
    if a.simplify {
        circuit = synth::simplify(&aug_source, &circuit, &step_passes);
    }

    writeln!(
        out,
        "source [[{},{}]] + {} ancilla(s), target [[{},{}]] + {} ancilla(s), {} qubits",
        n1,
        source.num_logical(),
        plan.m1,
        n2,
        target.num_logical(),
        plan.m2,
        plan.total_qubits()
    )
    .map_err(io)?;
    if !a.draft {
        writeln!(
            out,
            "ordering: {} verifier calls, {} discrepancies{}",
            synthesis.stats.verifier_calls,
            synthesis.stats.discrepancies,
            if synthesis.stats.draft_unchanged {
                ", draft order kept"
            } else {
                ""
            }
        )
        .map_err(io)?;
    }
    write!(out, "{}", circuit.phase_listing()).map_err(io)?;
    writeln!(
        out,
        "gates: {} ({} two-qubit)",
        circuit.len(),
        circuit.two_qubit_count()
    )
    .map_err(io)?;
    writeln!(out, "listing: {}", circuit.listing()).map_err(io)?;

    let final_code = aug_source.apply_circuit(&circuit)?;
    let Some(mismatch) = final_code.sign_mismatches(&aug_target) else {
        return Err(Error::Internal(
            "circuit does not reach the target stabilizer group".into(),
        ));
    };
    let signs: Vec<&str> = mismatch
        .iter()
        .map(|&m| if m { "-1" } else { "+1" })
        .collect();
    writeln!(out, "target generator signs: {}", signs.join(" ")).map_err(io)?;
    let mut status = EXIT_OK;
    if mismatch.iter().any(|&m| m) {
        let frame = aug_target
            .pauli_with_syndrome(&crate::bits::BitVec::from_bools(&mismatch))
            .expect("full rank generators admit any syndrome");
        writeln!(out, "pauli frame correction: {}", frame.to_sparse_string()).map_err(io)?;
        if a.strict_signs {
            status = EXIT_SIGN_MISMATCH;
        }
    }

    if let Some(path) = &a.emit {
        std::fs::write(path, circuit.to_json())?;
    }
    if a.verify || a.report.is_some() {
        let report = verify_circuit(&aug_source, &circuit, false)?;
        write!(out, "verify: {}", report.summary()).map_err(io)?;
        if let Some(path) = &a.report {
            std::fs::write(path, report.to_json())?;
        }
        if !report.passed {
            return Ok(EXIT_FT_FAILURE);
        }
    }
    Ok(status)
}

fn forms(a: FormsArgs, out: &mut dyn Write) -> Result<i32> {
    let code = load_code(&a.code)?;
    let m = a.augment.unwrap_or(0);
    let nothing_selected = !a.standard && !a.iabc && !a.logicals;
    if a.standard || (nothing_selected && a.augment.is_none()) {
        let sf = to_standard_form(&code)?;
        writeln!(
            out,
            "standard form (r = {}, swaps: {})",
            sf.rank_x(),
            swap_list(sf.swaps())
        )
        .map_err(io)?;
        writeln!(out, "{}", sf.code().matrix_string()).map_err(io)?;
    }
    if nothing_selected && a.augment.is_some() {
        writeln!(out, "augmented code ({m} ancilla(s))").map_err(io)?;
        writeln!(out, "{}", code.augment(m).matrix_string()).map_err(io)?;
    }
    if a.iabc {
        let f = augmented_iabc(&code, m)?;
        writeln!(
            out,
            "IABC form ({m} ancilla(s)), U = {}",
            swap_list(f.u_record())
        )
        .map_err(io)?;
        writeln!(out, "{}", f.code().matrix_string()).map_err(io)?;
    }
    if a.logicals {
        let sf = to_standard_form(&code)?;
        let (xs, zs) = sf.logical_operators();
        for (i, (x, z)) in xs.iter().zip(&zs).enumerate() {
            writeln!(out, "X{} = {}", i + 1, x).map_err(io)?;
            writeln!(out, "Z{} = {}", i + 1, z).map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}

fn swap_list(gates: &[crate::gate::CliffordGate]) -> String {
    if gates.is_empty() {
        "none".into()
    } else {
        crate::circuit::listing(gates)
    }
}

fn verify(a: VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let code = load_code(&a.code)?;
    let text = std::fs::read_to_string(&a.circuit)
        .map_err(|e| Error::Io(format!("{}: {e}", a.circuit.display())))?;
    let circuit = ConversionCircuit::from_json(&text)?;
    let m = circuit
        .num_qubits()
        .checked_sub(code.num_qubits())
        .ok_or(Error::Dimension {
            expected: code.num_qubits(),
            found: circuit.num_qubits(),
        })?;
    let report = verify_circuit(&code.augment(m), &circuit, a.exhaustive)?;
    if a.json {
        writeln!(out, "{}", report.to_json()).map_err(io)?;
    } else {
        write!(out, "{}", report.render(a.all_rows)).map_err(io)?;
    }
    Ok(if report.passed {
        EXIT_OK
    } else {
        EXIT_FT_FAILURE
    })
}

fn distance(arg: &str, out: &mut dyn Write) -> Result<i32> {
    let code = load_code(arg)?;
    let d = code.distance_at_least_3();
    match d.witness {
        None => writeln!(out, "distance >= 3: yes").map_err(io)?,
        Some(w) => {
            writeln!(out, "distance >= 3: no (logical {})", w.to_sparse_string()).map_err(io)?
        }
    }
    Ok(EXIT_OK)
}

fn library_cmd(name: Option<&str>, out: &mut dyn Write) -> Result<i32> {
    match name {
        Some(n) => {
            let code = library::builtin(n)?;
            write!(out, "{}", code.to_text()).map_err(io)?;
        }
        None => {
            for e in library::entries() {
                writeln!(
                    out,
                    "{:<12} [[{},{}]]  {}",
                    e.name,
                    e.code.num_qubits(),
                    e.code.num_logical(),
                    e.note
                )
                .map_err(io)?;
            }
        }
    }
    Ok(EXIT_OK)
}
