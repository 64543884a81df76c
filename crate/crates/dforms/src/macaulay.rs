//! Exact binomial arithmetic, Macaulay representations and the induced
//! growth bound, O-sequence checking, lexsegment ideals of the y-ring, and
//! piecewise lexsegment spaces.
//!
//! All counts are arbitrary-precision: the growth bounds explode
//! combinatorially and a silent overflow would corrupt verdicts.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::{CheckedSub, One, Zero};

use crate::error::{Error, Result};
use crate::ideal::{Basis, MonomialIdeal};
use crate::monomial::{all_monomials, Monomial, MonomialSpace, WVector};

/// Exact `C(n, k)`, with `C(n, k) = 0` for `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    binomial_big(&BigUint::from(n), k)
}

/// Exact `C(n, k)` for arbitrary-precision `n` and machine-sized `k`.
pub fn binomial_big(n: &BigUint, k: u64) -> BigUint {
    if *n < BigUint::from(k) {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    for t in 1..=k {
        // n - k + t is nonnegative since k <= n
        let factor = n - BigUint::from(k) + BigUint::from(t);
        acc = acc * factor / BigUint::from(t);
    }
    acc
}

/// The `d`-th Macaulay representation of a natural number:
/// `a = sum_{i=1}^{d} C(k(i), i)` with `k(d) > k(d-1) > ... > k(1) >= 0`.
/// Entries with `k(i) < i` contribute zero binomials.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MacaulayRep {
    a: BigUint,
    d: u32,
    /// `k(d), k(d-1), ..., k(1)` - strictly decreasing.
    ks: Vec<BigUint>,
}

impl MacaulayRep {
    pub fn value(&self) -> &BigUint {
        &self.a
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    /// `k(d), k(d-1), ..., k(1)`.
    pub fn ks(&self) -> &[BigUint] {
        &self.ks
    }

    /// Recomputes `sum C(k(i), i)`; equals the represented value.
    pub fn reconstruct(&self) -> BigUint {
        self.ks
            .iter()
            .zip((1..=self.d).rev())
            .map(|(k, i)| binomial_big(k, i as u64))
            .sum()
    }

    /// The growth bound `a^<d> = sum C(k(i) + 1, i + 1)`.
    pub fn bound(&self) -> BigUint {
        self.ks
            .iter()
            .zip((1..=self.d).rev())
            .map(|(k, i)| binomial_big(&(k + 1u32), i as u64 + 1))
            .sum()
    }
}

/// Largest `k` with `C(k, i) <= rem`; requires `rem >= 1`.
fn max_k_with_binomial_le(i: u32, rem: &BigUint) -> BigUint {
    let mut lo = BigUint::from(i);
    debug_assert!(binomial_big(&lo, i as u64) <= *rem);
    let mut hi = &lo + 1u32;
    while binomial_big(&hi, i as u64) <= *rem {
        lo = hi.clone();
        hi = &hi * 2u32 + 1u32;
    }
    // invariant: C(lo, i) <= rem < C(hi, i)
    while &hi - &lo > BigUint::one() {
        let mid = (&lo + &hi) / 2u32;
        if binomial_big(&mid, i as u64) <= *rem {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Greedy-from-top construction of the (unique) `d`-th Macaulay
/// representation.
pub fn macaulay_rep(a: &BigUint, d: u32) -> Result<MacaulayRep> {
    if d == 0 {
        return Err(Error::PositiveDegreeRequired);
    }
    let mut rem = a.clone();
    let mut ks: Vec<BigUint> = Vec::with_capacity(d as usize);
    for i in (1..=d).rev() {
        let k = if rem.is_zero() {
            BigUint::from(i - 1)
        } else {
            max_k_with_binomial_le(i, &rem)
        };
        rem -= binomial_big(&k, i as u64);
        if let Some(prev) = ks.last() {
            assert!(k < *prev, "Macaulay chain must strictly decrease");
        }
        ks.push(k);
    }
    assert!(rem.is_zero(), "greedy representation must be exact");
    Ok(MacaulayRep {
        a: a.clone(),
        d,
        ks,
    })
}

/// `a^<d>`: the maximal growth of a Hilbert function from value `a` in
/// degree `d` to degree `d + 1`.
pub fn macaulay_bound(a: &BigUint, d: u32) -> Result<BigUint> {
    Ok(macaulay_rep(a, d)?.bound())
}

/// First index violating the O-sequence conditions, or `None` when the
/// entries form an O-sequence: `w_0 = 1` and `w_{i+1} <= w_i^<i>` for all
/// `i >= 1`. `w_1` is unconstrained here; the `w_1 <= d` cap is a separate
/// check owned by callers.
pub fn osequence_violation(entries: &[BigUint]) -> Option<usize> {
    if entries.first().map(|w| !w.is_one()).unwrap_or(true) {
        return Some(0);
    }
    for i in 1..entries.len().saturating_sub(1) {
        let bound = macaulay_rep(&entries[i], i as u32)
            .expect("positive index")
            .bound();
        if entries[i + 1] > bound {
            return Some(i + 1);
        }
    }
    None
}

/// O-sequence predicate on a w-vector (cap not included).
pub fn is_osequence(w: &WVector) -> bool {
    osequence_violation(w.entries()).is_none()
}

/// The lexsegment ideal of `K[y_1, ..., y_d]` whose quotient Hilbert
/// function equals `w`: in each degree `e` the ideal keeps the biggest
/// `C(e+d-1, e) - w_e` monomials in the lex order with `y_1 > ... > y_d`,
/// and everything beyond the support of `w`. Requires `w` to be an
/// O-sequence with `w_1 <= d`; returns the minimal generators.
pub fn lex_ideal(d: u32, w: &WVector) -> Result<MonomialIdeal> {
    if d == 0 {
        return Err(Error::PositiveDegreeRequired);
    }
    if let Some(index) = osequence_violation(w.entries()) {
        return Err(Error::OsequenceViolated { index });
    }
    if w.get(1) > BigUint::from(d) {
        return Err(Error::DegreeCapExceeded {
            w1: w.get(1),
            degree: d,
        });
    }
    let top = w.len() - 1; // w_0 = 1, so the support is nonempty
    let mut gens: Vec<Monomial> = Vec::new();
    let mut prev: BTreeSet<Monomial> = BTreeSet::new();
    for e in 0..=(top as u32 + 1) {
        let pool = all_monomials(e, d - 1);
        let w_e = w.get(e as usize);
        // growth from w_1 <= d keeps every w_e within the monomial count
        let keep = BigUint::from(pool.len())
            .checked_sub(&w_e)
            .expect("admissible w stays within the degree dimension");
        let keep = usize::try_from(&keep).expect("segment size fits");
        let segment: BTreeSet<Monomial> = pool.into_iter().take(keep).collect();
        // Macaulay's theorem makes the degreewise segments an ideal.
        for p in &prev {
            for j in 0..d {
                assert!(
                    segment.contains(&p.mul_var_pow(j, 1)),
                    "lex segments must be closed under multiplication"
                );
            }
        }
        for g in &segment {
            let has_divisor_in_prev = g
                .pairs()
                .iter()
                .any(|&(j, _)| prev.contains(&g.div_var_pow(j, 1).expect("positive exponent")));
            if e > 0 && !has_divisor_in_prev {
                gens.push(g.clone());
            }
        }
        prev = segment;
    }
    let ideal = MonomialIdeal::new(d, Basis::Y, gens)?;
    // The quotient Hilbert function must reproduce w degree by degree.
    for e in 0..=(top as u32 + 1) {
        let standard = all_monomials(e, d - 1)
            .into_iter()
            .filter(|u| !ideal.contains(u))
            .count();
        assert_eq!(
            BigUint::from(standard),
            w.get(e as usize),
            "lexsegment quotient must realize the Hilbert function at degree {e}"
        );
    }
    Ok(ideal)
}

/// The piecewise lexsegment space of type `(d, w)`: the union over `i` of
/// the `w_i` biggest degree-`d` monomials with max index exactly `i`.
pub fn piecewise_lexsegment(d: u32, w: &WVector) -> Result<MonomialSpace> {
    if d == 0 {
        return Err(Error::PositiveDegreeRequired);
    }
    let mut members: Vec<Monomial> = Vec::new();
    for i in 0..w.len() {
        let w_i = w.get(i);
        if w_i.is_zero() {
            continue;
        }
        let pool: Vec<Monomial> = all_monomials(d, i as u32)
            .into_iter()
            .filter(|u| u.max_index().unwrap_or(0) == i as u32)
            .collect();
        if w_i > BigUint::from(pool.len()) {
            return Err(Error::CountExceeded {
                index: i,
                requested: w_i,
                available: BigUint::from(pool.len()),
            });
        }
        let take = usize::try_from(&w_i).expect("bounded by pool size");
        members.extend(pool.into_iter().take(take));
    }
    MonomialSpace::from_members(d, members)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(4, 2), big(6));
        assert_eq!(binomial(0, 0), big(1));
        assert_eq!(binomial(3, 5), big(0));
        assert_eq!(binomial(60, 30), "118264581564861424".parse().unwrap());
    }

    #[test]
    fn rep_examples() {
        let r = macaulay_rep(&big(4), 2).unwrap();
        assert_eq!(r.ks(), &[big(3), big(1)]);
        assert_eq!(r.reconstruct(), big(4));

        let zero = macaulay_rep(&big(0), 3).unwrap();
        assert_eq!(zero.ks(), &[big(2), big(1), big(0)]);
        assert_eq!(zero.reconstruct(), big(0));

        let single = macaulay_rep(&big(3), 1).unwrap();
        assert_eq!(single.ks(), &[big(3)]);
        assert!(macaulay_rep(&big(3), 0).is_err());
    }

    #[test]
    fn bound_examples() {
        assert_eq!(macaulay_bound(&big(3), 1).unwrap(), big(6));
        assert_eq!(macaulay_bound(&big(4), 2).unwrap(), big(5));
        assert_eq!(macaulay_bound(&big(0), 4).unwrap(), big(0));
    }

    #[test]
    fn rep_roundtrip_scan() {
        for a in (0..2000u64).chain([12345, 999_983, 1_000_000]) {
            for d in 1..=12u32 {
                let r = macaulay_rep(&big(a), d).unwrap();
                assert_eq!(r.reconstruct(), big(a), "a={a} d={d}");
                let mut prev: Option<&BigUint> = None;
                for k in r.ks() {
                    if let Some(p) = prev {
                        assert!(k < p);
                    }
                    prev = Some(k);
                }
            }
        }
    }

    #[test]
    fn bound_monotone_sampled() {
        for d in 1..=6u32 {
            let mut last = big(0);
            for a in 0..400u64 {
                let b = macaulay_bound(&big(a), d).unwrap();
                assert!(b >= last, "a={a} d={d}");
                last = b;
            }
        }
    }

    #[test]
    fn osequence_examples() {
        let v: Vec<BigUint> = [1u64, 3, 4, 6].iter().map(|&x| big(x)).collect();
        assert_eq!(osequence_violation(&v), Some(3));
        assert_eq!(osequence_violation(&[big(1)]), None);
        let ok: Vec<BigUint> = [1u64, 3, 4, 5].iter().map(|&x| big(x)).collect();
        assert_eq!(osequence_violation(&ok), None);
        assert_eq!(osequence_violation(&[]), Some(0));
        assert_eq!(osequence_violation(&[big(2)]), Some(0));
    }

    #[test]
    fn lex_ideal_examples() {
        let w = WVector::from_counts(2, &[1, 1, 1]);
        let i = lex_ideal(2, &w).unwrap();
        assert_eq!(i.to_string(), "(y1, y2^3)");

        let w = WVector::from_counts(2, &[1, 2, 1]);
        let i = lex_ideal(2, &w).unwrap();
        assert_eq!(i.to_string(), "(y1^2, y1 y2, y2^3)");

        let w = WVector::from_counts(4, &[1]);
        let i = lex_ideal(4, &w).unwrap();
        assert_eq!(i.to_string(), "(y1, y2, y3, y4)");

        let bad = WVector::from_counts(2, &[1, 1, 2]);
        assert_eq!(
            lex_ideal(2, &bad),
            Err(Error::OsequenceViolated { index: 2 })
        );
        let capped = WVector::from_counts(1, &[1, 2]);
        assert!(matches!(
            lex_ideal(1, &capped),
            Err(Error::DegreeCapExceeded { .. })
        ));
    }

    #[test]
    fn piecewise_examples() {
        let m = |ix: &[u32]| Monomial::from_indices(ix);
        let v = piecewise_lexsegment(2, &WVector::from_counts(2, &[1, 2, 1])).unwrap();
        let expect =
            MonomialSpace::from_members(2, vec![m(&[0, 0]), m(&[0, 1]), m(&[1, 1]), m(&[0, 2])])
                .unwrap();
        assert_eq!(v, expect);
        assert!(crate::stability::is_strongly_stable(&v));

        let v = piecewise_lexsegment(2, &WVector::from_counts(2, &[1, 1, 2])).unwrap();
        let expect =
            MonomialSpace::from_members(2, vec![m(&[0, 0]), m(&[0, 1]), m(&[0, 2]), m(&[1, 2])])
                .unwrap();
        assert_eq!(v, expect);
        assert!(!crate::stability::is_strongly_stable(&v));

        let v = piecewise_lexsegment(5, &WVector::from_counts(5, &[1])).unwrap();
        assert_eq!(v.len(), 1);
        assert!(v.contains(&m(&[0, 0, 0, 0, 0])));

        let too_many = WVector::from_counts(2, &[2]);
        assert!(matches!(
            piecewise_lexsegment(2, &too_many),
            Err(Error::CountExceeded { index: 0, .. })
        ));
    }

    #[test]
    fn lex_quotient_matches_w() {
        // spot-check beyond the built-in assertion: a longer admissible w
        let w = WVector::from_counts(3, &[1, 3, 4, 4, 2]);
        assert_eq!(osequence_violation(w.entries()), None);
        let i = lex_ideal(3, &w).unwrap();
        for e in 0..=5u32 {
            let std = all_monomials(e, 2)
                .into_iter()
                .filter(|u| !i.contains(u))
                .count();
            assert_eq!(BigUint::from(std), w.get(e as usize));
        }
    }
}
