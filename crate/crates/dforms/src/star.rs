//! The `*`-multiplication on degree-`d` monomials, the degree-1 generators
//! of the resulting graded algebra, and the mutually inverse graded
//! isomorphisms `phi`/`psi` with the polynomial ring `K[y_1, ..., y_d]`.
//!
//! Grading: the `e`-th graded piece of the algebra is spanned by the
//! degree-`d` monomials `u` with `m(u) = e`, so `x_0^d` spans the degree-0
//! piece and acts as the multiplicative identity.

use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialSpace};

/// A monomial `y_1^{b_1} ... y_d^{b_d}` of the `d`-variable polynomial ring,
/// stored as its dense exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct YMonomial {
    exps: Vec<u32>,
}

impl YMonomial {
    /// Builds from the exponent vector `(b_1, ..., b_d)`; the vector length
    /// is the number of variables.
    pub fn new(exps: Vec<u32>) -> Self {
        YMonomial { exps }
    }

    /// The unit of `K[y_1, ..., y_d]`.
    pub fn unit(d: u32) -> Self {
        YMonomial {
            exps: vec![0; d as usize],
        }
    }

    pub fn num_vars(&self) -> u32 {
        self.exps.len() as u32
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// The exponent of `y_i` (1-based).
    pub fn exponent_of(&self, i: u32) -> u32 {
        self.exps.get(i as usize - 1).copied().unwrap_or(0)
    }

    /// Ordinary product in the `y`-ring; both factors must live in the same
    /// number of variables.
    pub fn mul(&self, other: &YMonomial) -> Result<YMonomial> {
        if self.num_vars() != other.num_vars() {
            return Err(Error::DegreeMismatch {
                expected: self.num_vars(),
                found: other.num_vars(),
            });
        }
        Ok(YMonomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// The sparse 0-based view: `y_i` maps to index `i - 1`.
    pub fn to_monomial(&self) -> Monomial {
        Monomial::from_pairs(self.exps.iter().enumerate().map(|(i, &e)| (i as u32, e)))
    }

    /// Reads a sparse 0-based monomial back as a `y`-monomial in `d`
    /// variables; all indices must be below `d`.
    pub fn from_monomial(d: u32, m: &Monomial) -> Result<YMonomial> {
        let mut exps = vec![0u32; d as usize];
        for &(i, e) in m.pairs() {
            if i >= d {
                return Err(Error::IndexOutOfRange { index: i, vars: d });
            }
            exps[i as usize] = e;
        }
        Ok(YMonomial { exps })
    }

    /// Parses `y1^2 y3` style text into a `y`-monomial in `d` variables.
    pub fn parse(s: &str, d: u32) -> Result<YMonomial> {
        let m = Monomial::parse_with(s, 'y', 1)?;
        YMonomial::from_monomial(d, &m)
    }
}

impl fmt::Display for YMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_monomial().format_with('y', 1))
    }
}

/// The `*`-product: with `u = x_{i_1} ... x_{i_d}` and `v = x_{j_1} ... x_{j_d}`
/// both sorted ascending, returns `x_{i_1+j_1} ... x_{i_d+j_d}`.
///
/// Both factors must have the same positive degree; `m(u * v) = m(u) + m(v)`.
pub fn star(u: &Monomial, v: &Monomial) -> Result<Monomial> {
    if u.degree() == 0 || v.degree() == 0 {
        return Err(Error::PositiveDegreeRequired);
    }
    if u.degree() != v.degree() {
        return Err(Error::StarDegreeMismatch {
            left: u.degree(),
            right: v.degree(),
        });
    }
    let indices: Vec<u32> = u
        .index_tuple()
        .iter()
        .zip(v.index_tuple().iter())
        .map(|(a, b)| a + b)
        .collect();
    Ok(Monomial::from_indices(&indices))
}

/// The basis `x_0^{d-1} x_1, x_0^{d-2} x_1^2, ..., x_1^d` of the degree-1
/// graded piece, in this order. These `d` monomials generate the algebra.
pub fn algebra_generators(d: u32) -> Vec<Monomial> {
    (1..=d)
        .map(|k| Monomial::from_pairs([(0, d - k), (1, k)]))
        .collect()
}

/// `phi(y_1^{b_1} ... y_d^{b_d}) = x_{b_1} x_{b_1+b_2} ... x_{b_1+...+b_d}`:
/// the index tuple is the sequence of partial sums, so the image has degree
/// `d` and max index equal to the degree of the argument.
pub fn phi(w: &YMonomial) -> Monomial {
    let mut indices = Vec::with_capacity(w.num_vars() as usize);
    let mut acc = 0u32;
    for &b in w.exponents() {
        acc += b;
        indices.push(acc);
    }
    Monomial::from_indices(&indices)
}

/// `psi(x_0^{a_0} ... x_e^{a_e}) = y_{a_0+1} y_{a_0+a_1+1} ... y_{a_0+...+a_{e-1}+1}`,
/// the inverse of [`phi`]: a degree-`d` monomial with `m(u) = e` maps to a
/// degree-`e` monomial of `K[y_1, ..., y_d]`. Every subscript stays within
/// `1..=d` because the exponents sum to `d` and `a_e >= 1`.
pub fn psi(u: &Monomial) -> YMonomial {
    let d = u.degree();
    let a = u.dense_exponents();
    let mut exps = vec![0u32; d as usize];
    if a.len() > 1 {
        let mut acc = 0u32;
        for &ai in &a[..a.len() - 1] {
            acc += ai;
            exps[acc as usize] += 1;
        }
    }
    YMonomial::new(exps)
}

/// Factors `u` (degree `d`, `m(u) = e`) into exactly `e` generators of the
/// degree-1 graded piece whose iterated `*`-product is `u`:
/// the `t`-th factor is `x_0^{a_0+...+a_{t-1}} x_1^{a_t+...+a_e}`.
/// `x_0^d` and the unit factor into the empty product.
pub fn factorize(u: &Monomial) -> Vec<Monomial> {
    let a = u.dense_exponents();
    if a.len() <= 1 {
        return Vec::new();
    }
    let d = u.degree();
    let e = a.len() - 1;
    let mut factors = Vec::with_capacity(e);
    let mut prefix = 0u32;
    for t in 1..=e {
        prefix += a[t - 1];
        factors.push(Monomial::from_pairs([(0, prefix), (1, d - prefix)]));
    }
    factors
}

/// Whether the complement `V^c` is an ideal of the `*`-algebra.
///
/// The check is finite: it suffices to test `u * g` for the complement
/// elements `u` with `m(u) <= maxIndex(V)` against the degree-1 generators
/// `g`, because the algebra is generated in degree 1 and any monomial with
/// larger max index lies in `V^c` together with all its `*`-multiples
/// (`m(u * g) = m(u) + 1` only grows).
pub fn is_complement_ideal(v: &MonomialSpace) -> bool {
    let top = match v.max_index() {
        None => return true,
        Some(t) => t,
    };
    let gens = algebra_generators(v.degree());
    for u in v.complement_in_degree(top).members() {
        for g in &gens {
            let prod = star(u, g).expect("equal degrees by construction");
            if v.contains(&prod) {
                return false;
            }
        }
    }
    true
}
