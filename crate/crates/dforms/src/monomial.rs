//! Monomials over the variable family `x_0, x_1, x_2, ...`, the
//! degree-lexicographic order induced by `x_0 > x_1 > x_2 > ...`, finite
//! monomial spaces inside a fixed degree, and their w-profiles.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};

/// A monomial `x_{i_1} x_{i_2} ... x_{i_d}` with `i_1 <= ... <= i_d`, stored
/// as a sorted map from variable index to positive exponent. The unit
/// monomial (degree 0) is the empty product.
///
/// The two views required by the algebra - sorted index tuple and exponent
/// map - are kept consistent by construction: the tuple view is derived on
/// demand from the map.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    /// Sorted by index; every stored exponent is >= 1.
    exps: Vec<(u32, u32)>,
    degree: u32,
}

impl Monomial {
    /// The degree-0 unit monomial.
    pub fn unit() -> Self {
        Monomial {
            exps: Vec::new(),
            degree: 0,
        }
    }

    /// The variable `x_i`.
    pub fn variable(i: u32) -> Self {
        Monomial {
            exps: vec![(i, 1)],
            degree: 1,
        }
    }

    /// Builds a monomial from a list of variable indices, one per degree.
    /// The list need not be sorted; repeated indices collate into exponents.
    pub fn from_indices(indices: &[u32]) -> Self {
        let mut sorted = indices.to_vec();
        sorted.sort_unstable();
        let mut exps: Vec<(u32, u32)> = Vec::new();
        for &i in &sorted {
            match exps.last_mut() {
                Some((j, e)) if *j == i => *e += 1,
                _ => exps.push((i, 1)),
            }
        }
        Monomial {
            degree: indices.len() as u32,
            exps,
        }
    }

    /// Builds a monomial from (index, exponent) pairs. Pairs may repeat and
    /// come in any order; zero exponents are dropped.
    pub fn from_pairs<I: IntoIterator<Item = (u32, u32)>>(pairs: I) -> Self {
        let mut collated: Vec<(u32, u32)> = Vec::new();
        let mut items: Vec<(u32, u32)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        items.sort_unstable();
        for (i, e) in items {
            match collated.last_mut() {
                Some((j, f)) if *j == i => *f += e,
                _ => collated.push((i, e)),
            }
        }
        let degree = collated.iter().map(|&(_, e)| e).sum();
        Monomial {
            exps: collated,
            degree,
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_unit(&self) -> bool {
        self.degree == 0
    }

    /// `m(u)`: the largest variable index with positive exponent.
    /// `None` for the unit monomial.
    pub fn max_index(&self) -> Option<u32> {
        self.exps.last().map(|&(i, _)| i)
    }

    /// [`max_index`](Self::max_index) as a fallible operation: the unit has
    /// no maximal variable.
    pub fn try_max_index(&self) -> Result<u32> {
        self.max_index().ok_or(Error::MaxIndexUndefined)
    }

    /// The exponent of `x_i` (0 if absent).
    pub fn exponent(&self, i: u32) -> u32 {
        self.exps
            .binary_search_by_key(&i, |&(j, _)| j)
            .map(|p| self.exps[p].1)
            .unwrap_or(0)
    }

    /// The sorted (index, exponent) pairs with positive exponents.
    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.exps
    }

    /// The sorted index tuple `(i_1, ..., i_d)`; length equals the degree.
    pub fn index_tuple(&self) -> Vec<u32> {
        let mut t = Vec::with_capacity(self.degree as usize);
        for &(i, e) in &self.exps {
            for _ in 0..e {
                t.push(i);
            }
        }
        t
    }

    /// The dense exponent vector `(a_0, ..., a_e)` with `e = m(u)`;
    /// empty for the unit.
    pub fn dense_exponents(&self) -> Vec<u32> {
        match self.max_index() {
            None => Vec::new(),
            Some(e) => {
                let mut a = vec![0u32; e as usize + 1];
                for &(i, f) in &self.exps {
                    a[i as usize] = f;
                }
                a
            }
        }
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&(_, e)| e == 1)
    }

    /// Whether `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().all(|&(i, e)| other.exponent(i) >= e)
    }

    /// Multiplies by `x_i^k` (ordinary product).
    pub fn mul_var_pow(&self, i: u32, k: u32) -> Monomial {
        if k == 0 {
            return self.clone();
        }
        let mut pairs = self.exps.clone();
        pairs.push((i, k));
        Monomial::from_pairs(pairs)
    }

    /// Divides by `x_i^k`; `None` if `x_i^k` does not divide `self`.
    pub fn div_var_pow(&self, i: u32, k: u32) -> Option<Monomial> {
        if self.exponent(i) < k {
            return None;
        }
        let mut exps = Vec::with_capacity(self.exps.len());
        for &(j, e) in &self.exps {
            if j == i {
                if e > k {
                    exps.push((j, e - k));
                }
            } else {
                exps.push((j, e));
            }
        }
        Some(Monomial {
            exps,
            degree: self.degree - k,
        })
    }

    /// The exchange move `(u / x_j) * x_i`; `None` if `x_j` does not divide `u`.
    pub fn exchange(&self, j: u32, i: u32) -> Option<Monomial> {
        self.div_var_pow(j, 1).map(|m| m.mul_var_pow(i, 1))
    }

    /// Shifts every variable index by `offset`; `None` if an index would
    /// become negative. Used at I/O boundaries to convert between the
    /// 0-based and 1-based variable conventions.
    pub fn shift_indices(&self, offset: i64) -> Option<Monomial> {
        let mut exps = Vec::with_capacity(self.exps.len());
        for &(i, e) in &self.exps {
            let shifted = i as i64 + offset;
            if shifted < 0 || shifted > u32::MAX as i64 {
                return None;
            }
            exps.push((shifted as u32, e));
        }
        Some(Monomial {
            exps,
            degree: self.degree,
        })
    }

    /// Renders with the given variable letter and index base, factors sorted
    /// by ascending index, `^1` omitted. The unit renders as `1`.
    pub fn format_with(&self, letter: char, base: u32) -> String {
        if self.is_unit() {
            return "1".to_string();
        }
        self.exps
            .iter()
            .map(|&(i, e)| {
                if e == 1 {
                    format!("{letter}{}", i + base)
                } else {
                    format!("{letter}{}^{e}", i + base)
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Parses the text form: factors `<letter><idx>[^<exp>]`, separated by
    /// whitespace or juxtaposed (`x0^2 x1`, `x0x1x2`). Indices are read in
    /// the given base and stored 0-based. `1` denotes the unit.
    pub fn parse_with(s: &str, letter: char, base: u32) -> Result<Monomial> {
        let trimmed = s.trim();
        if trimmed == "1" {
            return Ok(Monomial::unit());
        }
        if trimmed.is_empty() {
            return Err(Error::Parse("empty monomial".into()));
        }
        let mut pairs: Vec<(u32, u32)> = Vec::new();
        let mut chars = trimmed.chars().peekable();
        while let Some(&c) = chars.peek() {
            if c.is_whitespace() || c == '*' {
                chars.next();
                continue;
            }
            if c != letter {
                return Err(Error::Parse(format!(
                    "expected variable '{letter}', found '{c}' in '{trimmed}'"
                )));
            }
            chars.next();
            let mut digits = String::new();
            while let Some(&d) = chars.peek() {
                if d.is_ascii_digit() {
                    digits.push(d);
                    chars.next();
                } else {
                    break;
                }
            }
            if digits.is_empty() {
                return Err(Error::Parse(format!("missing index after '{letter}'")));
            }
            let raw: u32 = digits
                .parse()
                .map_err(|_| Error::Parse(format!("index overflow in '{trimmed}'")))?;
            if raw < base {
                return Err(Error::Parse(format!(
                    "index {raw} below the {base}-based convention"
                )));
            }
            let idx = raw - base;
            let mut exp = 1u32;
            if chars.peek() == Some(&'^') {
                chars.next();
                let mut edigits = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        edigits.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                exp = edigits
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent in '{trimmed}'")))?;
                if exp == 0 {
                    return Err(Error::Parse("exponent must be positive".into()));
                }
            }
            pairs.push((idx, exp));
        }
        if pairs.is_empty() {
            return Err(Error::Parse(format!("no factors in '{trimmed}'")));
        }
        Ok(Monomial::from_pairs(pairs))
    }
}

impl Ord for Monomial {
    /// Degree-lexicographic order: first by degree, then lexicographic on
    /// the exponent sequences read from `x_0` upward, where a larger
    /// exponent on the smaller index wins. `x_0^d` is the maximum of `S_d`.
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree.cmp(&other.degree) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let mut a = self.exps.iter().peekable();
        let mut b = other.exps.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&&(i, e)), Some(&&(j, f))) => {
                    if i < j {
                        return Ordering::Greater;
                    }
                    if j < i {
                        return Ordering::Less;
                    }
                    if e != f {
                        return e.cmp(&f);
                    }
                    a.next();
                    b.next();
                }
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with('x', 0))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with('x', 0))
    }
}

impl FromStr for Monomial {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Monomial::parse_with(s, 'x', 0)
    }
}

/// All degree-`degree` monomials with max index <= `max_idx`, in descending
/// degree-lex order. There are `C(max_idx + degree, degree)` of them.
pub fn all_monomials(degree: u32, max_idx: u32) -> Vec<Monomial> {
    fn rec(
        idx: u32,
        max_idx: u32,
        remaining: u32,
        cur: &mut Vec<(u32, u32)>,
        out: &mut Vec<Monomial>,
    ) {
        if idx == max_idx {
            if remaining > 0 {
                cur.push((idx, remaining));
            }
            out.push(Monomial::from_pairs(cur.iter().copied()));
            if remaining > 0 {
                cur.pop();
            }
            return;
        }
        for e in (0..=remaining).rev() {
            if e > 0 {
                cur.push((idx, e));
            }
            rec(idx + 1, max_idx, remaining - e, cur, out);
            if e > 0 {
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(0, max_idx, degree, &mut Vec::new(), &mut out);
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// A finite set of monomials of one fixed positive degree: a monomial
/// K-basis of a subspace of `S_d`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialSpace {
    degree: u32,
    members: BTreeSet<Monomial>,
}

impl MonomialSpace {
    /// The empty space inside `S_degree`.
    pub fn empty(degree: u32) -> Result<Self> {
        if degree == 0 {
            return Err(Error::PositiveDegreeRequired);
        }
        Ok(MonomialSpace {
            degree,
            members: BTreeSet::new(),
        })
    }

    /// Builds a space from members, rejecting any member whose degree is not
    /// the ambient one.
    pub fn from_members<I: IntoIterator<Item = Monomial>>(degree: u32, members: I) -> Result<Self> {
        if degree == 0 {
            return Err(Error::PositiveDegreeRequired);
        }
        let mut set = BTreeSet::new();
        for m in members {
            if m.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: m.degree(),
                });
            }
            set.insert(m);
        }
        Ok(MonomialSpace {
            degree,
            members: set,
        })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.members.contains(m)
    }

    /// Members in ascending degree-lex order.
    pub fn members(&self) -> impl Iterator<Item = &Monomial> {
        self.members.iter()
    }

    /// Members in descending degree-lex order (the canonical output order).
    pub fn members_desc(&self) -> impl Iterator<Item = &Monomial> {
        self.members.iter().rev()
    }

    /// `max_u m(u)` over the members; `None` for the empty space.
    pub fn max_index(&self) -> Option<u32> {
        self.members.iter().filter_map(|m| m.max_index()).max()
    }

    /// The w-profile: entry `i` counts members with `m(u) = i`; the last
    /// carried index is `max_index`. Empty space gives the empty vector.
    pub fn w_profile(&self) -> WVector {
        match self.max_index() {
            None => WVector::new(self.degree, Vec::new()),
            Some(top) => {
                let mut counts = vec![0u64; top as usize + 1];
                for m in &self.members {
                    counts[m.max_index().unwrap_or(0) as usize] += 1;
                }
                WVector::from_counts(self.degree, &counts)
            }
        }
    }

    /// The truncation of the complementary space `V^c`: all monomials of the
    /// ambient degree with max index <= `max_idx` that are not members.
    /// Sufficient for all bounded membership checks.
    pub fn complement_in_degree(&self, max_idx: u32) -> MonomialSpace {
        let members = all_monomials(self.degree, max_idx)
            .into_iter()
            .filter(|m| !self.contains(m))
            .collect::<BTreeSet<_>>();
        MonomialSpace {
            degree: self.degree,
            members,
        }
    }
}

/// A w-vector `(w_0, w_1, ..., w_N)` of natural numbers attached to an
/// ambient degree `d` (the context for the `w_1 <= d` cap). Trailing zeros
/// are semantically equal to truncation and are normalized away.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct WVector {
    degree: u32,
    entries: Vec<BigUint>,
}

impl WVector {
    pub fn new(degree: u32, mut entries: Vec<BigUint>) -> Self {
        while entries.last().map(|e| e.is_zero()).unwrap_or(false) {
            entries.pop();
        }
        WVector { degree, entries }
    }

    pub fn from_counts(degree: u32, counts: &[u64]) -> Self {
        WVector::new(degree, counts.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// The normalized entries (no trailing zeros).
    pub fn entries(&self) -> &[BigUint] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entry `i`, reading zero beyond the carried length.
    pub fn get(&self, i: usize) -> BigUint {
        self.entries.get(i).cloned().unwrap_or_else(BigUint::zero)
    }

    pub fn sum(&self) -> BigUint {
        self.entries.iter().sum()
    }

    /// The `w_1 <= d` cap of the ambient degree.
    pub fn within_degree_cap(&self) -> bool {
        self.get(1) <= BigUint::from(self.degree)
    }
}
