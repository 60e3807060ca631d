//! Standard form and IABC form reduction with the Clifford record that produces them.
//!
//! For an `[[n,k]]` code with X-rank `r` the standard form is
//!
//! ```text
//! [ I A1 A2 | B 0 C ]   r rows
//! [ 0 0  0  | D I E ]   n-k-r rows
//! ```
//!
//! and Hadamards on qubits `r..n-k` turn it into the IABC layout
//! `[ I A | B C ]` with an `(n-k)`-square identity.

use crate::bits::{BitMatrix, BitVec};
use crate::code::StabilizerCode;
use crate::error::{Error, Result};
use crate::gate::CliffordGate;
use crate::pauli::PauliOperator;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardForm {
    code: StabilizerCode,
    rank_x: usize,
    swaps: Vec<CliffordGate>,
}

impl StandardForm {
    /// Generators in the standard layout, acting on the swapped qubit order.
    pub fn code(&self) -> &StabilizerCode {
        &self.code
    }

    /// Rank of the X part.
    pub fn rank_x(&self) -> usize {
        self.rank_x
    }

    /// Qubit swaps applied during elimination, in order.
    pub fn swaps(&self) -> &[CliffordGate] {
        &self.swaps
    }

    fn dims(&self) -> (usize, usize, usize) {
        let n = self.code.num_qubits();
        (n, self.code.num_logical(), self.rank_x)
    }

    pub fn a1(&self) -> BitMatrix {
        let (n, k, r) = self.dims();
        self.code.x_matrix().block(0, r, r, n - k)
    }

    pub fn a2(&self) -> BitMatrix {
        let (n, k, r) = self.dims();
        self.code.x_matrix().block(0, r, n - k, n)
    }

    pub fn b(&self) -> BitMatrix {
        let (_, _, r) = self.dims();
        self.code.z_matrix().block(0, r, 0, r)
    }

    pub fn c(&self) -> BitMatrix {
        let (n, k, r) = self.dims();
        self.code.z_matrix().block(0, r, n - k, n)
    }

    pub fn d(&self) -> BitMatrix {
        let (n, k, r) = self.dims();
        self.code.z_matrix().block(r, n - k, 0, r)
    }

    pub fn e(&self) -> BitMatrix {
        let (n, k, r) = self.dims();
        self.code.z_matrix().block(r, n - k, n - k, n)
    }

    /// Logical X and Z representatives built from the `A2`, `C` and `E` blocks.
    pub fn logical_operators(&self) -> (Vec<PauliOperator>, Vec<PauliOperator>) {
        let (n, k, r) = self.dims();
        let a2 = self.a2();
        let c = self.c();
        let e = self.e();
        let mut xs = Vec::with_capacity(k);
        let mut zs = Vec::with_capacity(k);
        for j in 0..k {
            let mut x = BitVec::zeros(n);
            let mut z = BitVec::zeros(n);
            for i in 0..(n - k - r) {
                x.set(r + i, e.get(i, j));
            }
            x.set(n - k + j, true);
            for i in 0..r {
                z.set(i, c.get(i, j));
            }
            xs.push(PauliOperator::from_bits(x, z, false).expect("same length"));

            let x = BitVec::zeros(n);
            let mut z = BitVec::zeros(n);
            for i in 0..r {
                z.set(i, a2.get(i, j));
            }
            z.set(n - k + j, true);
            zs.push(PauliOperator::from_bits(x, z, false).expect("same length"));
        }
        (xs, zs)
    }
}

/// Generators in `[I A | B C]` layout plus the gates that produced them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IabcForm {
    code: StabilizerCode,
    u_record: Vec<CliffordGate>,
    original_qubits: usize,
}

impl IabcForm {
    pub fn code(&self) -> &StabilizerCode {
        &self.code
    }

    pub fn u_record(&self) -> &[CliffordGate] {
        &self.u_record
    }

    pub fn num_qubits(&self) -> usize {
        self.code.num_qubits()
    }

    pub fn num_logical(&self) -> usize {
        self.code.num_logical()
    }

    pub fn ancillas(&self) -> usize {
        self.code.num_qubits() - self.original_qubits
    }

    fn split(&self) -> (usize, usize) {
        let n = self.code.num_qubits();
        (n, n - self.code.num_logical())
    }

    pub fn a(&self) -> BitMatrix {
        let (n, nk) = self.split();
        self.code.x_matrix().block(0, nk, nk, n)
    }

    pub fn b(&self) -> BitMatrix {
        let (_, nk) = self.split();
        self.code.z_matrix().block(0, nk, 0, nk)
    }

    pub fn c(&self) -> BitMatrix {
        let (n, nk) = self.split();
        self.code.z_matrix().block(0, nk, nk, n)
    }

    /// Block of `B` coupling original rows to ancilla columns; `None` without ancillas.
    pub fn delta(&self) -> Option<BitMatrix> {
        let (_, nk) = self.split();
        let rows = self.original_qubits - self.code.num_logical();
        (self.ancillas() > 0).then(|| self.b().block(0, rows, rows, nk))
    }

    /// Block of `B` coupling ancilla rows to ancilla columns; `None` without ancillas.
    pub fn theta(&self) -> Option<BitMatrix> {
        let (_, nk) = self.split();
        let rows = self.original_qubits - self.code.num_logical();
        (self.ancillas() > 0).then(|| self.b().block(rows, nk, rows, nk))
    }

    /// `B^T + A C^T + B + C A^T = 0`.
    pub fn satisfies_commutation(&self) -> bool {
        let (a, b, c) = (self.a(), self.b(), self.c());
        b.transpose()
            .add(&a.mul(&c.transpose()))
            .add(&b)
            .add(&c.mul(&a.transpose()))
            .is_zero()
    }

    /// Re-derives the form from `original` (augmented with this form's
    /// ancilla count) and compares bit-exactly, signs included.
    pub fn reproduces_from(&self, original: &StabilizerCode) -> Result<bool> {
        let aug = original.augment(self.ancillas());
        let applied = aug.apply_gates(&self.u_record)?;
        let reduced = reduce_to_iabc(&applied)?;
        Ok(reduced == self.code)
    }
}

fn row_multiply(gens: &mut [PauliOperator], target: usize, source: usize) {
    let prod = gens[target].multiply(&gens[source]).expect("same n");
    gens[target] = prod;
}

fn swap_columns(code: &mut StabilizerCode, a: usize, b: usize, record: &mut Vec<CliffordGate>) {
    let g = CliffordGate::swap(a, b);
    for p in code.generators_mut() {
        g.conjugate_in_place(p);
    }
    record.push(g);
}

// Eliminates one block of pivots. `zpart` selects which half of the rows is pivoted on.
fn eliminate(
    code: &mut StabilizerCode,
    first_row: usize,
    first_col: usize,
    zpart: bool,
    record: &mut Vec<CliffordGate>,
) -> usize {
    let n = code.num_qubits();
    let m = code.num_generators();
    let bit = |code: &StabilizerCode, i: usize, c: usize| {
        let g = &code.generators()[i];
        if zpart {
            g.z_bits().get(c)
        } else {
            g.x_bits().get(c)
        }
    };
    let mut r = first_row;
    for c in first_col..n {
        if r == m {
            break;
        }
        let mut pivot = (r..m).find(|&i| bit(code, i, c));
        if pivot.is_none() {
            let Some(c2) = (c + 1..n).find(|&c2| (r..m).any(|i| bit(code, i, c2))) else {
                break;
            };
            swap_columns(code, c, c2, record);
            pivot = (r..m).find(|&i| bit(code, i, c));
        }
        let p = pivot.expect("pivot after swap");
        code.generators_mut().swap(r, p);
        for i in 0..m {
            if i != r && bit(code, i, c) {
                row_multiply(code.generators_mut(), i, r);
            }
        }
        r += 1;
    }
    r
}

/// Gaussian elimination with qubit swaps only where a column has no pivot.
pub fn to_standard_form(code: &StabilizerCode) -> Result<StandardForm> {
    code.ensure_valid()?;
    let mut work = code.clone();
    let mut swaps = Vec::new();
    let r = eliminate(&mut work, 0, 0, false, &mut swaps);
    let total = eliminate(&mut work, r, r, true, &mut swaps);
    if total != work.num_generators() {
        return Err(Error::Internal(format!(
            "standard form reached rank {total} of {}",
            work.num_generators()
        )));
    }
    Ok(StandardForm {
        code: work,
        rank_x: r,
        swaps,
    })
}

pub fn to_iabc(sf: &StandardForm) -> IabcForm {
    let (n, k, r) = sf.dims();
    let mut record = sf.swaps.clone();
    record.extend((r..n - k).map(CliffordGate::h));
    let applied = sf
        .code
        .apply_gates(&record[sf.swaps.len()..])
        .expect("in range");
    let code = reduce_to_iabc(&applied).expect("standard form always reaches IABC");
    IabcForm {
        code,
        u_record: record,
        original_qubits: n,
    }
}

/// Row-reduces so the first `n-k` X columns form an identity. Signs are tracked.
pub fn reduce_to_iabc(code: &StabilizerCode) -> Result<StabilizerCode> {
    let nk = code.num_generators();
    let mut work = code.clone();
    for c in 0..nk {
        let pivot = (c..nk).find(|&i| work.generators()[i].x_bits().get(c));
        let Some(p) = pivot else {
            return Err(Error::Layout(format!(
                "X part has no pivot in column {} after the IABC record",
                c + 1
            )));
        };
        work.generators_mut().swap(c, p);
        for i in 0..nk {
            if i != c && work.generators()[i].x_bits().get(c) {
                row_multiply(work.generators_mut(), i, c);
            }
        }
    }
    Ok(work)
}

/// IABC form of `code ⊗ |+⟩^m`.
///
/// The record is the unaugmented IABC record, then swaps carrying each
/// logical column past the ancillas, then `CNOT(i, last)` and `CZ(i, last)`
/// for every ancilla position `i`.
pub fn augmented_iabc(code: &StabilizerCode, m: usize) -> Result<IabcForm> {
    let sf = to_standard_form(code)?;
    let base = to_iabc(&sf);
    let n = code.num_qubits();
    let k = code.num_logical();
    let total = n + m;
    let mut record = base.u_record.clone();
    if m > 0 {
        if k == 0 {
            return Err(Error::Layout(
                "ancillas need a logical column to attach to (k = 0)".into(),
            ));
        }
        for j in 0..k {
            for c in (n - 1 - j)..(total - 1 - j) {
                record.push(CliffordGate::swap(c, c + 1));
            }
        }
        let last = total - 1;
        for i in (n - k)..(total - k) {
            record.push(CliffordGate::cnot(i, last));
        }
        for i in (n - k)..(total - k) {
            record.push(CliffordGate::cz(i, last));
        }
    }
    let applied = code.augment(m).apply_gates(&record)?;
    let reduced = reduce_to_iabc(&applied)?;
    Ok(IabcForm {
        code: reduced,
        u_record: record,
        original_qubits: n,
    })
}
