//! Signed Pauli operators in binary symplectic form.
//!
//! A single-qubit Pauli is the bit pair `(x|z)`: `I=(0|0)`, `X=(1|0)`,
//! `Z=(0|1)` and `Y=(1|1)`. Only a `±1` sign is carried; the factor `i`
//! relating `Y` to `XZ` is absorbed into the letter.

use std::fmt;
use std::str::FromStr;

use crate::bits::BitVec;
use crate::error::{Error, Result};

/// One of the three non-identity single-qubit Paulis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PauliKind {
    X,
    Z,
    Y,
}

impl PauliKind {
    pub const ALL: [PauliKind; 3] = [PauliKind::X, PauliKind::Z, PauliKind::Y];

    fn bits(self) -> (bool, bool) {
        match self {
            PauliKind::X => (true, false),
            PauliKind::Z => (false, true),
            PauliKind::Y => (true, true),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliOperator {
    x: BitVec,
    z: BitVec,
    negative: bool,
}

impl PauliOperator {
    pub fn identity(n: usize) -> Self {
        PauliOperator {
            x: BitVec::zeros(n),
            z: BitVec::zeros(n),
            negative: false,
        }
    }

    pub fn from_bits(x: BitVec, z: BitVec, negative: bool) -> Result<Self> {
        if x.len() != z.len() {
            return Err(Error::Dimension {
                expected: x.len(),
                found: z.len(),
            });
        }
        Ok(PauliOperator { x, z, negative })
    }

    /// Inverse of [`PauliOperator::symplectic_vector`].
    pub fn from_symplectic(n: usize, v: &BitVec, negative: bool) -> Self {
        assert_eq!(v.len(), 2 * n, "symplectic vector length");
        PauliOperator {
            x: v.slice(0, n),
            z: v.slice(n, 2 * n),
            negative,
        }
    }

    pub fn single(n: usize, qubit: usize, kind: PauliKind) -> Result<Self> {
        if qubit >= n {
            return Err(Error::QubitOutOfRange { qubit, n });
        }
        let mut p = Self::identity(n);
        let (x, z) = kind.bits();
        p.x.set(qubit, x);
        p.z.set(qubit, z);
        Ok(p)
    }

    /// Builds a Pauli from `(qubit, kind)` pairs; later pairs overwrite earlier ones.
    pub fn from_sparse(n: usize, terms: &[(usize, PauliKind)]) -> Result<Self> {
        let mut p = Self::identity(n);
        for &(q, kind) in terms {
            if q >= n {
                return Err(Error::QubitOutOfRange { qubit: q, n });
            }
            let (x, z) = kind.bits();
            p.x.set(q, x);
            p.z.set(q, z);
        }
        Ok(p)
    }

    pub fn num_qubits(&self) -> usize {
        self.x.len()
    }

    pub fn x_bits(&self) -> &BitVec {
        &self.x
    }

    pub fn z_bits(&self) -> &BitVec {
        &self.z
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    /// `+1` or `-1`.
    pub fn sign(&self) -> i8 {
        if self.negative {
            -1
        } else {
            1
        }
    }

    pub fn with_sign(mut self, negative: bool) -> Self {
        self.negative = negative;
        self
    }

    pub fn negated(mut self) -> Self {
        self.negative = !self.negative;
        self
    }

    pub fn unsigned(&self) -> Self {
        self.clone().with_sign(false)
    }

    pub fn is_identity(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    pub fn kind_at(&self, qubit: usize) -> Option<PauliKind> {
        match (self.x.get(qubit), self.z.get(qubit)) {
            (false, false) => None,
            (true, false) => Some(PauliKind::X),
            (false, true) => Some(PauliKind::Z),
            (true, true) => Some(PauliKind::Y),
        }
    }

    pub fn support(&self) -> Vec<usize> {
        self.x.or(&self.z).iter_ones().collect()
    }

    pub fn weight(&self) -> usize {
        self.x.or(&self.z).count_ones()
    }

    /// `x | z` concatenated, length `2n`.
    pub fn symplectic_vector(&self) -> BitVec {
        BitVec::concat(&self.x, &self.z)
    }

    fn check_dim(&self, other: &PauliOperator) -> Result<()> {
        if self.num_qubits() != other.num_qubits() {
            return Err(Error::Dimension {
                expected: self.num_qubits(),
                found: other.num_qubits(),
            });
        }
        Ok(())
    }

    /// `x(u)·z(v) + z(u)·x(v) mod 2`; `true` means the operators anticommute.
    pub fn symplectic_inner_product(&self, other: &PauliOperator) -> Result<bool> {
        self.check_dim(other)?;
        Ok(self.anticommutes_unchecked(other))
    }

    pub fn commutes_with(&self, other: &PauliOperator) -> Result<bool> {
        Ok(!self.symplectic_inner_product(other)?)
    }

    #[inline]
    pub(crate) fn anticommutes_unchecked(&self, other: &PauliOperator) -> bool {
        self.x.dot(&other.z) ^ self.z.dot(&other.x)
    }

    /// Operator product `self · other`.
    ///
    /// The phase exponent is tracked mod 4; for anticommuting operands the
    /// product carries a factor `±i` which is dropped, keeping only bit 1.
    pub fn multiply(&self, other: &PauliOperator) -> Result<PauliOperator> {
        self.check_dim(other)?;
        let mut e: i32 = 2 * (self.negative as i32 + other.negative as i32);
        for q in self.x.or(&self.z).iter_ones() {
            e += phase_exponent(self.x.get(q), self.z.get(q), other.x.get(q), other.z.get(q));
        }
        let e = e.rem_euclid(4);
        Ok(PauliOperator {
            x: self.x.xor(&other.x),
            z: self.z.xor(&other.z),
            negative: (e >> 1) & 1 == 1,
        })
    }

    pub(crate) fn x_mut(&mut self) -> &mut BitVec {
        &mut self.x
    }

    pub(crate) fn z_mut(&mut self) -> &mut BitVec {
        &mut self.z
    }

    pub(crate) fn flip_sign(&mut self, flip: bool) {
        self.negative ^= flip;
    }

    pub fn to_letters(&self) -> String {
        (0..self.num_qubits())
            .map(|q| match self.kind_at(q) {
                None => 'I',
                Some(PauliKind::X) => 'X',
                Some(PauliKind::Z) => 'Z',
                Some(PauliKind::Y) => 'Y',
            })
            .collect()
    }

    /// Compact 1-based form such as `X6Z8`; the identity prints as `I`.
    pub fn to_sparse_string(&self) -> String {
        let mut out = String::new();
        if self.negative {
            out.push('-');
        }
        for q in self.support() {
            let c = match self.kind_at(q).unwrap() {
                PauliKind::X => 'X',
                PauliKind::Z => 'Z',
                PauliKind::Y => 'Y',
            };
            out.push(c);
            out.push_str(&(q + 1).to_string());
        }
        if out.is_empty() || out == "-" {
            out.push('I');
        }
        out
    }
}

// Exponent of `i` picked up when multiplying single-qubit Paulis (x1|z1)(x2|z2).
#[inline]
fn phase_exponent(x1: bool, z1: bool, x2: bool, z2: bool) -> i32 {
    let (x2, z2) = (x2 as i32, z2 as i32);
    match (x1, z1) {
        (false, false) => 0,
        (true, true) => z2 - x2,
        (true, false) => z2 * (2 * x2 - 1),
        (false, true) => x2 * (1 - 2 * z2),
    }
}

impl fmt::Display for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            f.write_str("-")?;
        }
        f.write_str(&self.to_letters())
    }
}

impl fmt::Debug for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pauli({self})")
    }
}

/// Parses `[+-]?[IXYZ]+`, e.g. `-XZZXI`.
impl FromStr for PauliOperator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_pauli(s, 1, 1)
    }
}

pub(crate) fn parse_pauli(s: &str, line: usize, col0: usize) -> Result<PauliOperator> {
    let (negative, body, offset) = match s.chars().next() {
        Some('-') => (true, &s[1..], 1),
        Some('+') => (false, &s[1..], 1),
        _ => (false, s, 0),
    };
    if body.is_empty() {
        return Err(Error::parse(line, col0, "empty Pauli string"));
    }
    let n = body.chars().count();
    let mut p = PauliOperator::identity(n);
    for (q, c) in body.chars().enumerate() {
        let (x, z) = match c.to_ascii_uppercase() {
            'I' => (false, false),
            'X' => (true, false),
            'Z' => (false, true),
            'Y' => (true, true),
            other => {
                return Err(Error::parse(
                    line,
                    col0 + offset + q,
                    format!("unexpected character '{other}' in Pauli string"),
                ))
            }
        };
        p.x.set(q, x);
        p.z.set(q, z);
    }
    p.negative = negative;
    Ok(p)
}
