//! One-row Betti tables, the invertible linear transforms between a row and
//! its m-invariants, the Eliahou-Kervaire Betti table of a stable ideal,
//! the exact feasibility decision for one-row tables with explicit witness
//! construction, and an independent Hilbert-function consistency oracle.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ideal::{Basis, MonomialIdeal};
use crate::macaulay::{binomial, macaulay_rep, piecewise_lexsegment};
use crate::monomial::{all_monomials, WVector};
use crate::stability::{is_stable_ideal, is_strongly_stable_ideal};

/// A one-row Betti table: entry `i` stands for `beta_{i, i+d}`, `0 <= i <= n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearBettiRow {
    n: u32,
    d: u32,
    entries: Vec<BigUint>,
}

impl LinearBettiRow {
    pub fn new(n: u32, d: u32, entries: Vec<BigUint>) -> Result<Self> {
        if n == 0 || d == 0 {
            return Err(Error::PositiveDegreeRequired);
        }
        if entries.len() != n as usize + 1 {
            return Err(Error::Parse(format!(
                "row must have n+1 = {} entries, found {}",
                n + 1,
                entries.len()
            )));
        }
        Ok(LinearBettiRow { n, d, entries })
    }

    pub fn from_counts(n: u32, d: u32, entries: &[u64]) -> Result<Self> {
        LinearBettiRow::new(n, d, entries.iter().map(|&e| BigUint::from(e)).collect())
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn entries(&self) -> &[BigUint] {
        &self.entries
    }
}

/// The m-invariants `m_1, ..., m_{n+1}` of a row. Arbitrary rows can
/// produce negative values, so the entries are signed; nonnegativity is a
/// feasibility condition, not a type invariant.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MSequence {
    n: u32,
    entries: Vec<BigInt>,
}

impl MSequence {
    pub fn new(n: u32, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != n as usize + 1 {
            return Err(Error::Parse(format!(
                "m-sequence must have n+1 = {} entries, found {}",
                n + 1,
                entries.len()
            )));
        }
        Ok(MSequence { n, entries })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `m_1, ..., m_{n+1}`.
    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    /// `m_k`, 1-based.
    pub fn get(&self, k: u32) -> &BigInt {
        &self.entries[k as usize - 1]
    }
}

/// A signed row produced by [`betti_from_m`]; negative entries are carried
/// as-is and flagged through [`SignedBettiRow::is_nonnegative`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignedBettiRow {
    pub n: u32,
    pub d: u32,
    pub entries: Vec<BigInt>,
}

impl SignedBettiRow {
    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|e| e.sign() != Sign::Minus)
    }

    pub fn into_row(self) -> Option<LinearBettiRow> {
        if !self.is_nonnegative() {
            return None;
        }
        let entries = self
            .entries
            .into_iter()
            .map(|e| e.to_biguint().expect("nonnegative"))
            .collect();
        Some(LinearBettiRow {
            n: self.n,
            d: self.d,
            entries,
        })
    }
}

fn signed_binomial(n: u64, k: u64) -> BigInt {
    BigInt::from(binomial(n, k))
}

/// `m_k = sum_{i=0}^{n} (-1)^{i-k+1} C(i, k-1) beta_i` for `k = 1..n+1`,
/// on raw signed entries (`beta_0, ..., beta_n`).
pub fn m_entries_from_betti(betas: &[BigInt]) -> Vec<BigInt> {
    let n = betas.len() - 1;
    (1..=n as u64 + 1)
        .map(|k| {
            let mut acc = BigInt::zero();
            for (i, beta) in betas.iter().enumerate() {
                let c = signed_binomial(i as u64, k - 1);
                if c.is_zero() {
                    continue;
                }
                let term = c * beta;
                if (i as u64 + k + 1).is_multiple_of(2) {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        })
        .collect()
}

/// `beta_i = sum_{k=1}^{n+1} C(k-1, i) m_k` for `i = 0..n`, on raw signed
/// entries (`m_1, ..., m_{n+1}`). Exact inverse of [`m_entries_from_betti`].
pub fn betti_entries_from_m(ms: &[BigInt]) -> Vec<BigInt> {
    let n = ms.len() - 1;
    (0..=n as u64)
        .map(|i| {
            let mut acc = BigInt::zero();
            for (pos, m) in ms.iter().enumerate() {
                let k = pos as u64 + 1;
                let c = signed_binomial(k - 1, i);
                if !c.is_zero() {
                    acc += c * m;
                }
            }
            acc
        })
        .collect()
}

/// The m-invariants of a one-row Betti table.
pub fn m_from_betti(row: &LinearBettiRow) -> MSequence {
    let betas: Vec<BigInt> = row
        .entries
        .iter()
        .map(|b| BigInt::from(b.clone()))
        .collect();
    MSequence {
        n: row.n,
        entries: m_entries_from_betti(&betas),
    }
}

/// The one-row Betti table determined by an m-sequence.
pub fn betti_from_m(m: &MSequence, d: u32) -> SignedBettiRow {
    SignedBettiRow {
        n: m.n,
        d,
        entries: betti_entries_from_m(&m.entries),
    }
}

/// A graded Betti table with finite support: `(i, j) -> beta_{i,j}`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BettiTable {
    n: u32,
    entries: BTreeMap<(u32, i64), BigUint>,
}

impl BettiTable {
    pub fn new(n: u32) -> Self {
        BettiTable {
            n,
            entries: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn add(&mut self, i: u32, j: i64, value: BigUint) {
        if value.is_zero() {
            return;
        }
        *self.entries.entry((i, j)).or_insert_with(BigUint::zero) += value;
    }

    pub fn set(&mut self, i: u32, j: i64, value: BigUint) {
        if value.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), value);
        }
    }

    pub fn get(&self, i: u32, j: i64) -> BigUint {
        self.entries
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(BigUint::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(u32, i64), &BigUint)> {
        self.entries.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Row degrees `d = j - i` with a nonzero entry.
    pub fn row_degrees(&self) -> Vec<i64> {
        let mut ds: Vec<i64> = self.entries.keys().map(|&(i, j)| j - i as i64).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    /// Extracts row `d` as a [`LinearBettiRow`] when every nonzero entry of
    /// the table lies in that row.
    pub fn linear_row(&self, d: u32) -> Option<LinearBettiRow> {
        if self.row_degrees() != vec![d as i64] {
            return None;
        }
        let mut entries = vec![BigUint::zero(); self.n as usize + 1];
        for (&(i, j), beta) in &self.entries {
            debug_assert_eq!(j - i as i64, d as i64);
            entries[i as usize] = beta.clone();
        }
        Some(LinearBettiRow {
            n: self.n,
            d,
            entries,
        })
    }
}

/// Per-degree Eliahou-Kervaire counts of a stable ideal: for each generator
/// degree `d`, entry `i` (1-based) counts minimal generators `u` of degree
/// `d` with `m(u) = i` in the 1-based convention.
pub fn ek_mcounts(ideal: &MonomialIdeal) -> Result<BTreeMap<u32, MSequence>> {
    if !is_stable_ideal(ideal) {
        return Err(Error::NotStable);
    }
    let n = ideal.vars();
    let mut per_degree: BTreeMap<u32, Vec<BigInt>> = BTreeMap::new();
    for g in ideal.gens() {
        let counts = per_degree
            .entry(g.degree())
            .or_insert_with(|| vec![BigInt::zero(); n as usize + 1]);
        let m1 = g.max_index().unwrap_or(0) as usize + 1;
        counts[m1 - 1] += 1;
    }
    Ok(per_degree
        .into_iter()
        .map(|(d, entries)| (d, MSequence { n, entries }))
        .collect())
}

/// The Eliahou-Kervaire Betti table of a stable ideal:
/// `beta_{i, i+d} = sum_{u in G(I), deg u = d} C(m(u) - 1, i)` with `m(u)`
/// read 1-based.
pub fn ek_betti(ideal: &MonomialIdeal) -> Result<BettiTable> {
    if !is_stable_ideal(ideal) {
        return Err(Error::NotStable);
    }
    let mut table = BettiTable::new(ideal.vars());
    for g in ideal.gens() {
        let d = g.degree() as i64;
        let top = g.max_index().unwrap_or(0) as u64;
        for i in 0..=top {
            table.add(i as u32, i as i64 + d, binomial(top, i));
        }
    }
    Ok(table)
}

/// The reason a one-row table is infeasible. Rendered messages use 1-based
/// m-indices and name the first violated condition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Violation {
    NegativeEntry {
        index: u32,
        value: BigInt,
    },
    FirstNotOne {
        value: BigInt,
    },
    SecondExceedsDegree {
        value: BigInt,
        degree: u32,
    },
    Growth {
        index: u32,
        value: BigInt,
        bound: BigUint,
    },
    TrailingNonzero {
        index: u32,
        value: BigInt,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NegativeEntry { index, value } => write!(f, "m{index}={value} < 0"),
            Violation::FirstNotOne { value } => write!(f, "m1={value} != 1"),
            Violation::SecondExceedsDegree { value, degree } => {
                write!(f, "m2={value} > d={degree}")
            }
            Violation::Growth {
                index,
                value,
                bound,
            } => {
                write!(
                    f,
                    "m{index}={value} > bound(m{},{})={bound}",
                    index - 1,
                    index - 2
                )
            }
            Violation::TrailingNonzero { index, value } => write!(f, "m{index}={value} != 0"),
        }
    }
}

/// The outcome of the one-row feasibility decision.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Feasibility {
    /// A strongly stable witness generated in degree `d` realizes the row;
    /// its Eliahou-Kervaire row reproduces the input exactly.
    Feasible {
        m: MSequence,
        witness: MonomialIdeal,
    },
    Infeasible {
        m: MSequence,
        violation: Violation,
    },
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible { .. })
    }

    pub fn m(&self) -> &MSequence {
        match self {
            Feasibility::Feasible { m, .. } | Feasibility::Infeasible { m, .. } => m,
        }
    }
}

fn first_violation(m: &MSequence, d: u32) -> Option<Violation> {
    let n = m.n;
    for (pos, value) in m.entries.iter().enumerate() {
        if value.sign() == Sign::Minus {
            return Some(Violation::NegativeEntry {
                index: pos as u32 + 1,
                value: value.clone(),
            });
        }
    }
    if !m.get(1).is_one() {
        return Some(Violation::FirstNotOne {
            value: m.get(1).clone(),
        });
    }
    if n >= 2 && *m.get(2) > BigInt::from(d) {
        return Some(Violation::SecondExceedsDegree {
            value: m.get(2).clone(),
            degree: d,
        });
    }
    // Growth: m_{i+1} <= m_i^<i-1> for i = 2..n-1.
    for i in 2..n {
        let base = m.get(i).to_biguint().expect("checked nonnegative");
        let bound = macaulay_rep(&base, i - 1).expect("i >= 2").bound();
        if *m.get(i + 1) > BigInt::from(bound.clone()) {
            return Some(Violation::Growth {
                index: i + 1,
                value: m.get(i + 1).clone(),
                bound,
            });
        }
    }
    if !m.get(n + 1).is_zero() {
        return Some(Violation::TrailingNonzero {
            index: n + 1,
            value: m.get(n + 1).clone(),
        });
    }
    None
}

/// Decides whether an m-sequence is realized by an ideal with `d`-linear
/// resolution in `n` variables; on success returns the canonical piecewise
/// lexsegment witness, shifted to the 1-based convention.
pub fn feasible_from_m(m: MSequence, d: u32) -> Feasibility {
    if let Some(violation) = first_violation(&m, d) {
        return Feasibility::Infeasible { m, violation };
    }
    let n = m.n;
    // w_i = m_{i+1}, 0-based; the trailing m_{n+1} = 0 drops off.
    let w = WVector::new(
        d,
        m.entries[..n as usize]
            .iter()
            .map(|v| v.to_biguint().expect("checked nonnegative"))
            .collect(),
    );
    let space = piecewise_lexsegment(d, &w)
        .expect("O-sequence with w_1 <= d stays within the count bounds");
    let witness = MonomialIdeal::new(n, Basis::XOne, space.members().cloned())
        .expect("piecewise support fits in n variables");
    assert!(is_strongly_stable_ideal(&witness));
    let table = ek_betti(&witness).expect("strongly stable is stable");
    let expected = betti_from_m(&m, d);
    let row: Vec<BigInt> = table
        .linear_row(d)
        .expect("single-degree stable ideal has a one-row table")
        .entries
        .iter()
        .map(|b| BigInt::from(b.clone()))
        .collect();
    assert_eq!(
        row, expected.entries,
        "witness must reproduce the input row"
    );
    Feasibility::Feasible { m, witness }
}

/// Decides which one-row Betti tables are achievable: computes the
/// m-invariants and checks `m_1 = 1`, `m_2 <= d`, the Macaulay growth
/// condition, nonnegativity, and the vanishing of `m_{n+1}`; on success the
/// piecewise lexsegment witness reproduces the row exactly.
pub fn feasible_linear(row: &LinearBettiRow) -> Feasibility {
    feasible_from_m(m_from_betti(row), row.d)
}

const HF_ENUMERATION_CAP: u64 = 5_000_000;

/// Exact count of degree-`t` monomials of the ambient ring lying in the
/// ideal, by direct enumeration.
pub fn hf_ideal(ideal: &MonomialIdeal, t: u32) -> Result<BigUint> {
    let n = ideal.vars();
    let size = binomial(n as u64 - 1 + t as u64, t as u64);
    if size > BigUint::from(HF_ENUMERATION_CAP) {
        return Err(Error::EnumerationCap {
            required: size,
            cap: HF_ENUMERATION_CAP,
        });
    }
    let count = all_monomials(t, n - 1)
        .into_iter()
        .filter(|u| ideal.contains(u))
        .count();
    Ok(BigUint::from(count))
}

/// Euler-characteristic check of a table against the ideal's Hilbert
/// function: for all `t <= t_max`,
/// `hf_ideal(I, t) = sum_i (-1)^i sum_j T(i, j) C(n + t - j - 1, n - 1)`.
pub fn hilbert_consistency(ideal: &MonomialIdeal, table: &BettiTable, t_max: u32) -> Result<bool> {
    let n = ideal.vars() as i64;
    for t in 0..=t_max {
        let lhs = BigInt::from(hf_ideal(ideal, t)?);
        let mut rhs = BigInt::zero();
        for (&(i, j), beta) in table.entries() {
            if (t as i64) < j {
                continue;
            }
            let dim = binomial((n - 1 + t as i64 - j) as u64, n as u64 - 1);
            let term = BigInt::from(beta.clone()) * BigInt::from(dim);
            if i % 2 == 0 {
                rhs += term;
            } else {
                rhs -= term;
            }
        }
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}
