//! Stabilizer codes as generator lists, with syndrome and membership queries.

use std::fmt;
use std::str::FromStr;

use crate::bits::{BitMatrix, BitVec, RowSpace};
use crate::circuit::ConversionCircuit;
use crate::error::{Error, Result};
use crate::gate::CliffordGate;
use crate::pauli::{parse_pauli, PauliKind, PauliOperator};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StabilizerCode {
    n: usize,
    generators: Vec<PauliOperator>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// 0-based generator indices.
    AntiCommuting(usize, usize),
    RankDeficient {
        rank: usize,
        rows: usize,
    },
    TooManyGenerators {
        rows: usize,
        n: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::AntiCommuting(i, j) => {
                write!(f, "generators {} and {} anticommute", i + 1, j + 1)
            }
            Violation::RankDeficient { rank, rows } => {
                write!(f, "generator matrix has rank {rank} but {rows} rows")
            }
            Violation::TooManyGenerators { rows, n } => {
                write!(f, "{rows} generators on {n} qubits")
            }
        }
    }
}

/// Syndrome bits; bit `i` is set when the error anticommutes with generator `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Syndrome(BitVec);

impl Syndrome {
    pub fn bits(&self) -> &BitVec {
        &self.0
    }

    pub fn is_trivial(&self) -> bool {
        self.0.is_zero()
    }

    /// Eigenvalue form: 0 maps to `+1`, 1 to `-1`.
    pub fn eigenvalues(&self) -> Vec<i8> {
        (0..self.0.len())
            .map(|i| if self.0.get(i) { -1 } else { 1 })
            .collect()
    }
}

impl fmt::Display for Syndrome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<&str> = (0..self.0.len())
            .map(|i| if self.0.get(i) { "-1" } else { "+1" })
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl fmt::Debug for Syndrome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    /// In the stabilizer group up to sign; `negated` is set when the operator
    /// equals minus the group element.
    Stabilizer {
        negated: bool,
    },
    /// Commutes with the group but lies outside it.
    Logical,
    Detectable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceCheck {
    pub at_least_3: bool,
    pub witness: Option<PauliOperator>,
}

impl StabilizerCode {
    /// Dimension checks only; see [`StabilizerCode::validate`] for the algebra.
    pub fn new(n: usize, generators: Vec<PauliOperator>) -> Result<Self> {
        for g in &generators {
            if g.num_qubits() != n {
                return Err(Error::Dimension {
                    expected: n,
                    found: g.num_qubits(),
                });
            }
        }
        Ok(StabilizerCode { n, generators })
    }

    /// Generators given as Pauli strings; fails on dimension or validity errors.
    pub fn from_strs(gens: &[&str]) -> Result<Self> {
        let ps = gens
            .iter()
            .enumerate()
            .map(|(i, s)| parse_pauli(s, i + 1, 1))
            .collect::<Result<Vec<_>>>()?;
        let n = ps.first().map_or(0, PauliOperator::num_qubits);
        let code = Self::new(n, ps)?;
        code.ensure_valid()?;
        Ok(code)
    }

    /// CSS code from X-type and Z-type supports (0-based).
    pub fn css(n: usize, x_checks: &[Vec<usize>], z_checks: &[Vec<usize>]) -> Result<Self> {
        let mut gens = Vec::new();
        for s in x_checks {
            let terms: Vec<_> = s.iter().map(|&q| (q, PauliKind::X)).collect();
            gens.push(PauliOperator::from_sparse(n, &terms)?);
        }
        for s in z_checks {
            let terms: Vec<_> = s.iter().map(|&q| (q, PauliKind::Z)).collect();
            gens.push(PauliOperator::from_sparse(n, &terms)?);
        }
        let code = Self::new(n, gens)?;
        code.ensure_valid()?;
        Ok(code)
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    /// `n` minus the number of generators.
    pub fn num_logical(&self) -> usize {
        self.n.saturating_sub(self.generators.len())
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[PauliOperator] {
        &self.generators
    }

    pub fn signs(&self) -> Vec<i8> {
        self.generators.iter().map(PauliOperator::sign).collect()
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let m = self.generators.len();
        if m > self.n {
            out.push(Violation::TooManyGenerators { rows: m, n: self.n });
        }
        for i in 0..m {
            for j in i + 1..m {
                if self.generators[i].anticommutes_unchecked(&self.generators[j]) {
                    out.push(Violation::AntiCommuting(i, j));
                }
            }
        }
        let rank = self.row_space().rank();
        if rank < m {
            out.push(Violation::RankDeficient { rank, rows: m });
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    pub fn ensure_valid(&self) -> Result<()> {
        let v = self.validate();
        if v.is_empty() {
            return Ok(());
        }
        Err(Error::InvalidCode(
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join("; "),
        ))
    }

    pub fn symplectic_rows(&self) -> Vec<BitVec> {
        self.generators
            .iter()
            .map(PauliOperator::symplectic_vector)
            .collect()
    }

    pub fn row_space(&self) -> RowSpace {
        let rows = self.symplectic_rows();
        RowSpace::from_rows(2 * self.n, rows.iter())
    }

    pub fn x_matrix(&self) -> BitMatrix {
        BitMatrix::from_rows(
            self.n,
            self.generators.iter().map(|g| g.x_bits().clone()).collect(),
        )
    }

    pub fn z_matrix(&self) -> BitMatrix {
        BitMatrix::from_rows(
            self.n,
            self.generators.iter().map(|g| g.z_bits().clone()).collect(),
        )
    }

    /// `[G_X | G_Z]` as a single `m × 2n` matrix.
    pub fn check_matrix(&self) -> BitMatrix {
        BitMatrix::from_rows(2 * self.n, self.symplectic_rows())
    }

    /// Reduced echelon form of the unsigned group, a canonical group fingerprint.
    pub fn echelon_matrix(&self) -> BitMatrix {
        BitMatrix::from_rows(2 * self.n, self.row_space().echelon_basis())
    }

    /// Same stabilizer group ignoring signs.
    pub fn same_group(&self, other: &StabilizerCode) -> bool {
        self.n == other.n && self.row_space().same_span(&other.row_space())
    }

    /// For each generator of `other`, whether it appears in this group with
    /// the opposite sign. `None` if the unsigned groups differ.
    pub fn sign_mismatches(&self, other: &StabilizerCode) -> Option<Vec<bool>> {
        if !self.same_group(other) {
            return None;
        }
        other
            .generators
            .iter()
            .map(|g| match self.classify(g) {
                Ok(Membership::Stabilizer { negated }) => Some(negated),
                _ => None,
            })
            .collect()
    }

    pub fn syndrome(&self, e: &PauliOperator) -> Result<Syndrome> {
        self.check_dim(e)?;
        Ok(self.syndrome_unchecked(e))
    }

    pub(crate) fn syndrome_unchecked(&self, e: &PauliOperator) -> Syndrome {
        let mut s = BitVec::zeros(self.generators.len());
        for (i, g) in self.generators.iter().enumerate() {
            if g.anticommutes_unchecked(e) {
                s.set(i, true);
            }
        }
        Syndrome(s)
    }

    pub fn classify(&self, p: &PauliOperator) -> Result<Membership> {
        self.check_dim(p)?;
        if !self.syndrome_unchecked(p).is_trivial() {
            return Ok(Membership::Detectable);
        }
        let space = self.row_space();
        match space.decompose(&p.symplectic_vector()) {
            None => Ok(Membership::Logical),
            Some(idx) => {
                let mut acc = PauliOperator::identity(self.n);
                for i in idx {
                    acc = acc.multiply(&self.generators[i])?;
                }
                Ok(Membership::Stabilizer {
                    negated: acc.is_negative() != p.is_negative(),
                })
            }
        }
    }

    /// Whether the unsigned operator lies in the stabilizer group.
    pub fn contains(&self, p: &PauliOperator) -> Result<bool> {
        self.check_dim(p)?;
        Ok(self.row_space().contains(&p.symplectic_vector()))
    }

    /// Searches all weight-1 and weight-2 Paulis for an undetectable logical.
    pub fn distance_at_least_3(&self) -> DistanceCheck {
        let tables = CodeTables::new(self);
        match tables.low_weight_logical() {
            None => DistanceCheck {
                at_least_3: true,
                witness: None,
            },
            Some(w) => DistanceCheck {
                at_least_3: false,
                witness: Some(w),
            },
        }
    }

    /// Tensors with `m` ancillas in `|+⟩`, appending one `X` generator per ancilla.
    pub fn augment(&self, m: usize) -> StabilizerCode {
        let n2 = self.n + m;
        let mut gens: Vec<PauliOperator> = self
            .generators
            .iter()
            .map(|g| {
                let mut x = BitVec::zeros(n2);
                let mut z = BitVec::zeros(n2);
                for q in g.x_bits().iter_ones() {
                    x.set(q, true);
                }
                for q in g.z_bits().iter_ones() {
                    z.set(q, true);
                }
                PauliOperator::from_bits(x, z, g.is_negative()).expect("same length")
            })
            .collect();
        for a in self.n..n2 {
            gens.push(PauliOperator::single(n2, a, PauliKind::X).expect("in range"));
        }
        StabilizerCode {
            n: n2,
            generators: gens,
        }
    }

    pub fn conjugated(&self, gate: &CliffordGate) -> Result<StabilizerCode> {
        gate.check_range(self.n)?;
        let mut out = self.clone();
        for g in &mut out.generators {
            gate.conjugate_in_place(g);
        }
        Ok(out)
    }

    pub fn apply_gates(&self, gates: &[CliffordGate]) -> Result<StabilizerCode> {
        let mut out = self.clone();
        for gate in gates {
            gate.check_range(self.n)?;
            for g in &mut out.generators {
                gate.conjugate_in_place(g);
            }
        }
        Ok(out)
    }

    pub fn apply_circuit(&self, circuit: &ConversionCircuit) -> Result<StabilizerCode> {
        if circuit.num_qubits() != self.n {
            return Err(Error::Dimension {
                expected: self.n,
                found: circuit.num_qubits(),
            });
        }
        self.apply_gates(&circuit.gates())
    }

    /// A Pauli whose syndrome against the generators is `syndrome`.
    pub fn pauli_with_syndrome(&self, syndrome: &BitVec) -> Option<PauliOperator> {
        let m = self.generators.len();
        if syndrome.len() != m {
            return None;
        }
        let mut basis = Vec::with_capacity(2 * self.n);
        let mut space = RowSpace::new(m);
        for q in 0..self.n {
            for kind in [PauliKind::X, PauliKind::Z] {
                let p = PauliOperator::single(self.n, q, kind).expect("in range");
                space.insert(self.syndrome_unchecked(&p).0);
                basis.push(p);
            }
        }
        let idx = space.decompose(syndrome)?;
        let mut acc = PauliOperator::identity(self.n);
        for i in idx {
            acc = acc.multiply(&basis[i]).expect("same n");
        }
        Some(acc.unsigned())
    }

    pub(crate) fn generators_mut(&mut self) -> &mut Vec<PauliOperator> {
        &mut self.generators
    }

    fn check_dim(&self, p: &PauliOperator) -> Result<()> {
        if p.num_qubits() != self.n {
            return Err(Error::Dimension {
                expected: self.n,
                found: p.num_qubits(),
            });
        }
        Ok(())
    }

    /// `G_X | G_Z` rows of 0/1 separated by a bar.
    pub fn matrix_string(&self) -> String {
        let x = self.x_matrix();
        let z = self.z_matrix();
        let mut lines = Vec::new();
        for i in 0..self.generators.len() {
            let xs: Vec<&str> = (0..self.n)
                .map(|j| if x.get(i, j) { "1" } else { "0" })
                .collect();
            let zs: Vec<&str> = (0..self.n)
                .map(|j| if z.get(i, j) { "1" } else { "0" })
                .collect();
            lines.push(format!("{} | {}", xs.join(" "), zs.join(" ")));
        }
        lines.join("\n")
    }

    /// Canonical text form: header `n k`, then one signed Pauli per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.num_logical());
        for g in &self.generators {
            out.push_str(&g.to_string());
            out.push('\n');
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut gens = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line_no = lineno + 1;
            let content = raw.split('#').next().unwrap_or("");
            let trimmed = content.trim();
            if trimmed.is_empty() {
                continue;
            }
            let col = content.len() - content.trim_start().len() + 1;
            match header {
                None => {
                    let nums: Vec<&str> = trimmed.split_whitespace().collect();
                    if nums.len() != 2 {
                        return Err(Error::parse(line_no, col, "expected header 'n k'"));
                    }
                    let n = nums[0].parse().map_err(|_| {
                        Error::parse(line_no, col, format!("bad qubit count '{}'", nums[0]))
                    })?;
                    let k = nums[1].parse().map_err(|_| {
                        Error::parse(line_no, col, format!("bad logical count '{}'", nums[1]))
                    })?;
                    if k > n {
                        return Err(Error::parse(line_no, col, "k exceeds n"));
                    }
                    header = Some((n, k));
                }
                Some((n, _)) => {
                    let p = parse_pauli(trimmed, line_no, col)?;
                    if p.num_qubits() != n {
                        return Err(Error::parse(
                            line_no,
                            col,
                            format!("expected {n} Pauli letters, found {}", p.num_qubits()),
                        ));
                    }
                    gens.push(p);
                }
            }
        }
        let (n, k) = header.ok_or_else(|| Error::parse(1, 1, "missing header 'n k'"))?;
        if gens.len() != n - k {
            return Err(Error::parse(
                text.lines().count().max(1),
                1,
                format!("expected {} generators, found {}", n - k, gens.len()),
            ));
        }
        let code = StabilizerCode::new(n, gens)?;
        code.ensure_valid()?;
        Ok(code)
    }
}

impl FromStr for StabilizerCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_text(s)
    }
}

impl fmt::Display for StabilizerCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for StabilizerCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(ToString::to_string).collect();
        write!(
            f,
            "StabilizerCode[[{},{}]] {{{}}}",
            self.n,
            self.num_logical(),
            gens.join(", ")
        )
    }
}

/// Precomputed syndromes of all weight-1 Paulis plus the group row space.
pub(crate) struct CodeTables<'a> {
    pub code: &'a StabilizerCode,
    pub space: RowSpace,
    // single[q][kind] in PauliKind::ALL order
    single: Vec<[BitVec; 3]>,
}

impl<'a> CodeTables<'a> {
    pub fn new(code: &'a StabilizerCode) -> Self {
        let n = code.n;
        let single = (0..n)
            .map(|q| {
                PauliKind::ALL.map(|k| {
                    code.syndrome_unchecked(&PauliOperator::single(n, q, k).expect("in range"))
                        .0
                })
            })
            .collect();
        CodeTables {
            code,
            space: code.row_space(),
            single,
        }
    }

    pub fn syndrome_of(&self, e: &PauliOperator) -> Syndrome {
        let mut s = BitVec::zeros(self.code.generators.len());
        for q in e.support() {
            let k = e.kind_at(q).unwrap();
            s.xor_assign(&self.single[q][kind_index(k)]);
        }
        Syndrome(s)
    }

    pub fn in_group(&self, e: &PauliOperator) -> bool {
        self.space.contains(&e.symplectic_vector())
    }

    pub fn low_weight_logical(&self) -> Option<PauliOperator> {
        let n = self.code.n;
        for q in 0..n {
            for (ki, k) in PauliKind::ALL.iter().enumerate() {
                if self.single[q][ki].is_zero() {
                    let e = PauliOperator::single(n, q, *k).expect("in range");
                    if !self.in_group(&e) {
                        return Some(e);
                    }
                }
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                for (ka, pa) in PauliKind::ALL.iter().enumerate() {
                    for (kb, pb) in PauliKind::ALL.iter().enumerate() {
                        if self.single[a][ka] == self.single[b][kb] {
                            let e = PauliOperator::from_sparse(n, &[(a, *pa), (b, *pb)])
                                .expect("in range");
                            if !self.in_group(&e) {
                                return Some(e);
                            }
                        }
                    }
                }
            }
        }
        None
    }
}

fn kind_index(k: PauliKind) -> usize {
    match k {
        PauliKind::X => 0,
        PauliKind::Z => 1,
        PauliKind::Y => 2,
    }
}
