//! Monomial ideals in a fixed finite variable set, represented by their
//! unique minimal generators.
//!
//! Variable indices are stored 0-based throughout; the basis convention tag
//! only governs how indices are rendered and parsed at I/O boundaries
//! (`x0`: the ambient family `x_0, x_1, ...`; `x1`: the polynomial ring
//! `x_1, ..., x_n`; `y`: the ring `y_1, ..., y_d`).

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// The I/O convention for variable indices of an ideal.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Basis {
    /// 0-based `x`-side: `x0, x1, ...`
    XZero,
    /// 1-based `x`-side: `x1, ..., xn`
    XOne,
    /// `y`-side: `y1, ..., yd`
    Y,
}

impl Basis {
    pub fn tag(&self) -> &'static str {
        match self {
            Basis::XZero => "x0",
            Basis::XOne => "x1",
            Basis::Y => "y",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Basis> {
        match tag {
            "x0" => Some(Basis::XZero),
            "x1" => Some(Basis::XOne),
            "y" => Some(Basis::Y),
            _ => None,
        }
    }

    /// The offset added to internal 0-based indices when rendering.
    pub fn index_offset(&self) -> u32 {
        match self {
            Basis::XZero => 0,
            Basis::XOne | Basis::Y => 1,
        }
    }

    pub fn letter(&self) -> char {
        match self {
            Basis::XZero | Basis::XOne => 'x',
            Basis::Y => 'y',
        }
    }
}

/// A monomial ideal given by its minimal generators: a finite antichain
/// under divisibility, every index below the declared variable count.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialIdeal {
    vars: u32,
    basis: Basis,
    gens: BTreeSet<Monomial>,
}

impl MonomialIdeal {
    /// Builds an ideal from an arbitrary generating set, minimalizing it.
    /// If the unit monomial appears the result is the unit ideal.
    pub fn new<I: IntoIterator<Item = Monomial>>(vars: u32, basis: Basis, gens: I) -> Result<Self> {
        if vars == 0 {
            return Err(Error::PositiveDegreeRequired);
        }
        let mut raw: Vec<Monomial> = Vec::new();
        for g in gens {
            if let Some(top) = g.max_index() {
                if top >= vars {
                    return Err(Error::IndexOutOfRange { index: top, vars });
                }
            }
            raw.push(g);
        }
        raw.sort_by_key(|g| g.degree());
        let mut minimal: Vec<Monomial> = Vec::new();
        for g in raw {
            if !minimal.iter().any(|h| h.divides(&g)) {
                minimal.push(g);
            }
        }
        Ok(MonomialIdeal {
            vars,
            basis,
            gens: minimal.into_iter().collect(),
        })
    }

    /// The zero ideal (no generators).
    pub fn zero(vars: u32, basis: Basis) -> Result<Self> {
        MonomialIdeal::new(vars, basis, Vec::new())
    }

    pub fn vars(&self) -> u32 {
        self.vars
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    /// Returns the same ideal under a different I/O convention.
    pub fn with_basis(mut self, basis: Basis) -> Self {
        self.basis = basis;
        self
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens.iter().next().unwrap().is_unit()
    }

    /// Minimal generators in ascending degree-lex order.
    pub fn gens(&self) -> impl Iterator<Item = &Monomial> {
        self.gens.iter()
    }

    /// Minimal generators in the canonical output order: ascending degree,
    /// descending lex within a degree.
    pub fn gens_canonical(&self) -> Vec<&Monomial> {
        let mut gens: Vec<&Monomial> = self.gens.iter().collect();
        gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
        gens
    }

    /// Membership: divisibility by some minimal generator.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn max_gen_degree(&self) -> Option<u32> {
        self.gens.iter().map(|g| g.degree()).max()
    }

    /// The common generator degree, if the ideal is generated in a single
    /// degree (and is not zero).
    pub fn single_degree(&self) -> Option<u32> {
        let mut degrees = self.gens.iter().map(|g| g.degree());
        let first = degrees.next()?;
        if degrees.all(|d| d == first) {
            Some(first)
        } else {
            None
        }
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.is_squarefree())
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = self.basis.letter();
        let offset = self.basis.index_offset();
        let parts: Vec<String> = self
            .gens_canonical()
            .iter()
            .map(|g| g.format_with(letter, offset))
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}
