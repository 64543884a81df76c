//! Two dualities between monomial ideals generated in one degree and
//! monomial ideals of the y-ring, and the check that they agree.
//!
//! The first sends a strongly stable space `V` of degree-`d` monomials with
//! max index <= `m` to the y-side ideal whose standard monomials are exactly
//! `psi(V)`; it is a bijection onto the strongly stable ideals of
//! `K[y_1, ..., y_d]` of height `d` generated in degrees <= `m + 1`.
//!
//! The second is the stretch / Alexander dual / compress composite on
//! strongly stable ideals generated in a single degree.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::ideal::{Basis, MonomialIdeal};
use crate::monomial::{all_monomials, Monomial, MonomialSpace};
use crate::stability::{
    is_squarefree_strongly_stable, is_strongly_stable, is_strongly_stable_ideal,
};
use crate::star::{phi, psi, YMonomial};

/// Sends a strongly stable space `V` (members of degree `d`, max index <= `m`)
/// to the minimal generators of the y-side ideal whose standard monomials
/// are exactly `psi(V)`. A monomial is a generator iff it is not in
/// `psi(V)` while all its single-variable divisors are; the generators live
/// in degrees <= `m + 1`, and the output is strongly stable with finite
/// quotient.
pub fn psi_dual(v: &MonomialSpace, m: u32) -> Result<MonomialIdeal> {
    if !is_strongly_stable(v) {
        return Err(Error::NotStronglyStable);
    }
    if let Some(top) = v.max_index() {
        if top > m {
            return Err(Error::MaxIndexBound {
                max_index: top,
                bound: m,
            });
        }
    }
    let d = v.degree();
    let standard: BTreeSet<Monomial> = v.members().map(|u| psi(u).to_monomial()).collect();
    let mut gens: Vec<Monomial> = Vec::new();
    for e in 0..=m + 1 {
        for g in all_monomials(e, d - 1) {
            if standard.contains(&g) {
                continue;
            }
            let all_divisors_standard = g
                .pairs()
                .iter()
                .all(|&(j, _)| standard.contains(&g.div_var_pow(j, 1).expect("positive exponent")));
            if all_divisors_standard {
                gens.push(g);
            }
        }
    }
    let ideal = MonomialIdeal::new(d, Basis::Y, gens)?;
    assert!(is_strongly_stable_ideal(&ideal));
    assert!(ideal.max_gen_degree().unwrap_or(0) <= m + 1);
    // height d: every pure power y_i^{m+1} lies in the ideal
    for i in 0..d {
        assert!(ideal.contains(&Monomial::from_pairs([(i, m + 1)])));
    }
    Ok(ideal)
}

/// Inverse of [`psi_dual`]: reads the standard monomials of a strongly
/// stable y-side ideal with finite quotient and returns
/// `(phi(standard monomials), max standard degree)`. The unit ideal maps to
/// the empty space with `m = 0`.
pub fn psi_dual_inverse(ideal: &MonomialIdeal) -> Result<(MonomialSpace, u32)> {
    if ideal.basis() != Basis::Y {
        return Err(Error::BasisMismatch {
            expected: "y",
            found: ideal.basis().tag(),
        });
    }
    if !is_strongly_stable_ideal(ideal) {
        return Err(Error::NotStronglyStable);
    }
    let d = ideal.vars();
    if ideal.is_unit() {
        return Ok((MonomialSpace::empty(d)?, 0));
    }
    let top_gen = match ideal.max_gen_degree() {
        Some(t) => t,
        // the zero ideal has everything standard
        None => return Err(Error::HeightDeficient { vars: d }),
    };
    let mut standard: Vec<Monomial> = Vec::new();
    let mut last_degree = None;
    for e in 0..=top_gen {
        let degree_std: Vec<Monomial> = all_monomials(e, d - 1)
            .into_iter()
            .filter(|u| !ideal.contains(u))
            .collect();
        if degree_std.is_empty() {
            last_degree = Some(e);
            break;
        }
        standard.extend(degree_std);
    }
    // A strongly stable ideal with a standard monomial in the degree of its
    // top generator misses every pure power of the last variable.
    let m = match last_degree {
        Some(e) => e - 1,
        None => return Err(Error::HeightDeficient { vars: d }),
    };
    let members = standard
        .iter()
        .map(|s| phi(&YMonomial::from_monomial(d, s).expect("indices below d")));
    let space = MonomialSpace::from_members(d, members)?;
    assert!(is_strongly_stable(&space));
    assert!(space.max_index().unwrap_or(0) <= m);
    Ok((space, m))
}

/// The stretched monomial: `x_{i_1} x_{i_2} ... x_{i_d}` (indices sorted
/// ascending) maps to `x_{i_1} x_{i_2 + 1} ... x_{i_d + (d-1)}`. The result
/// is squarefree.
pub fn stretch(u: &Monomial) -> Monomial {
    let indices: Vec<u32> = u
        .index_tuple()
        .iter()
        .enumerate()
        .map(|(t, &i)| i + t as u32)
        .collect();
    Monomial::from_indices(&indices)
}

/// The compressed monomial, inverse of [`stretch`] on squarefree inputs:
/// `x_{j_1} x_{j_2} ... x_{j_d}` (strictly increasing) maps to
/// `x_{j_1} x_{j_2 - 1} ... x_{j_d - (d-1)}`.
pub fn compress(u: &Monomial) -> Result<Monomial> {
    if !u.is_squarefree() {
        return Err(Error::NotSquarefree(u.to_string()));
    }
    let indices: Vec<u32> = u
        .index_tuple()
        .iter()
        .enumerate()
        .map(|(t, &i)| i - t as u32)
        .collect();
    Ok(Monomial::from_indices(&indices))
}

/// Stretches every generator of a strongly stable ideal generated in a
/// single degree `d`; the result lives in `n + d - 1` variables and is
/// squarefree strongly stable.
pub fn stretch_ideal(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    let d = ideal.single_degree().ok_or(Error::NotSingleDegree)?;
    if !is_strongly_stable_ideal(ideal) {
        return Err(Error::NotStronglyStable);
    }
    let stretched = MonomialIdeal::new(
        ideal.vars() + d - 1,
        ideal.basis(),
        ideal.gens().map(stretch),
    )?;
    assert_eq!(is_squarefree_strongly_stable(&stretched), Ok(true));
    Ok(stretched)
}

/// Compresses every generator of a squarefree ideal; the variable count is
/// preserved (compressed indices only shrink).
pub fn compress_ideal(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    let gens = ideal.gens().map(compress).collect::<Result<Vec<_>>>()?;
    MonomialIdeal::new(ideal.vars(), ideal.basis(), gens)
}

const TRANSVERSAL_PATH_CAP: u64 = 10_000_000;

fn minimal_transversals(supports: &[BTreeSet<u32>]) -> Result<Vec<BTreeSet<u32>>> {
    let mut found: BTreeSet<BTreeSet<u32>> = BTreeSet::new();
    let mut paths: u64 = 0;
    // Branch on a variable of the first uncovered support.
    fn rec(
        supports: &[BTreeSet<u32>],
        current: &mut BTreeSet<u32>,
        found: &mut BTreeSet<BTreeSet<u32>>,
        paths: &mut u64,
    ) -> Result<()> {
        *paths += 1;
        if *paths > TRANSVERSAL_PATH_CAP {
            return Err(Error::EnumerationCap {
                required: (*paths).into(),
                cap: TRANSVERSAL_PATH_CAP,
            });
        }
        let uncovered = supports
            .iter()
            .find(|s| s.iter().all(|v| !current.contains(v)));
        match uncovered {
            None => {
                found.insert(current.clone());
                Ok(())
            }
            Some(s) => {
                for &v in s {
                    current.insert(v);
                    rec(supports, current, found, paths)?;
                    current.remove(&v);
                }
                Ok(())
            }
        }
    }
    rec(supports, &mut BTreeSet::new(), &mut found, &mut paths)?;
    // prune to the minimal ones
    let all: Vec<BTreeSet<u32>> = found.into_iter().collect();
    Ok(all
        .iter()
        .filter(|t| !all.iter().any(|s| s.len() < t.len() && s.is_subset(t)))
        .cloned()
        .collect())
}

/// The Alexander dual of a squarefree monomial ideal: its generators are
/// the minimal transversals (minimal hitting sets) of the family of
/// generator supports. An involution on squarefree ideals.
pub fn alexander_dual(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    let mut supports: Vec<BTreeSet<u32>> = Vec::new();
    for g in ideal.gens() {
        if !g.is_squarefree() {
            return Err(Error::NotSquarefree(g.to_string()));
        }
        supports.push(g.pairs().iter().map(|&(i, _)| i).collect());
    }
    let transversals = minimal_transversals(&supports)?;
    let gens = transversals
        .into_iter()
        .map(|t| Monomial::from_pairs(t.into_iter().map(|i| (i, 1))));
    MonomialIdeal::new(ideal.vars(), ideal.basis(), gens)
}

/// The stretch / Alexander dual / compress composite on a strongly stable
/// ideal generated in a single degree `d`, read as an ideal of the y-ring
/// in `d` variables (the compressed generators never exceed the `d`-th
/// variable).
pub fn murai_dual(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    let d = ideal.single_degree().ok_or(Error::NotSingleDegree)?;
    let stretched = stretch_ideal(ideal)?;
    let dual = alexander_dual(&stretched)?;
    let compressed = compress_ideal(&dual)?;
    for g in compressed.gens() {
        let top = g.max_index().unwrap_or(0);
        assert!(
            top < d,
            "compressed dual generator {g} must fit in {d} variables"
        );
    }
    MonomialIdeal::new(d, Basis::Y, compressed.gens().cloned())
}

/// Checks that the two dualities agree on a strongly stable ideal generated
/// in a single degree: the monomials of degree <= n of [`murai_dual`] and
/// of [`psi_dual`] of the generator space (with bound `n - 1`) coincide,
/// and the stretch-side dual has no minimal generator of degree > n.
pub fn duality_agree(ideal: &MonomialIdeal) -> Result<bool> {
    let n = ideal.vars();
    let d = ideal.single_degree().ok_or(Error::NotSingleDegree)?;
    let murai = murai_dual(ideal)?;
    let space = MonomialSpace::from_members(d, ideal.gens().cloned())?;
    let psi_side = psi_dual(&space, n - 1)?;
    if murai.max_gen_degree().unwrap_or(0) > n {
        return Ok(false);
    }
    for e in 0..=n {
        for u in all_monomials(e, d - 1) {
            if murai.contains(&u) != psi_side.contains(&u) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(indices: &[u32]) -> Monomial {
        Monomial::from_indices(indices)
    }

    fn space(d: u32, members: &[&[u32]]) -> MonomialSpace {
        MonomialSpace::from_members(d, members.iter().map(|ix| m(ix))).unwrap()
    }

    #[test]
    fn psi_dual_examples() {
        let v = space(2, &[&[0, 0], &[0, 1]]);
        let j = psi_dual(&v, 1).unwrap();
        assert_eq!(j.to_string(), "(y1, y2^2)");

        let full = space(2, &[&[0, 0], &[0, 1], &[1, 1]]);
        let j = psi_dual(&full, 1).unwrap();
        assert_eq!(j.to_string(), "(y1^2, y1 y2, y2^2)");

        let origin = space(4, &[&[0, 0, 0, 0]]);
        let j = psi_dual(&origin, 0).unwrap();
        assert_eq!(j.to_string(), "(y1, y2, y3, y4)");

        let not_ss = space(2, &[&[1, 1]]);
        assert_eq!(psi_dual(&not_ss, 1), Err(Error::NotStronglyStable));
    }

    #[test]
    fn psi_dual_inverse_examples() {
        let j = MonomialIdeal::new(2, Basis::Y, vec![m(&[0]), m(&[1, 1])]).unwrap();
        let (v, top) = psi_dual_inverse(&j).unwrap();
        assert_eq!(v, space(2, &[&[0, 0], &[0, 1]]));
        assert_eq!(top, 1);

        let j = MonomialIdeal::new(3, Basis::Y, vec![m(&[0]), m(&[1]), m(&[2])]).unwrap();
        let (v, top) = psi_dual_inverse(&j).unwrap();
        assert_eq!(v, space(3, &[&[0, 0, 0]]));
        assert_eq!(top, 0);

        let j = MonomialIdeal::new(2, Basis::Y, vec![m(&[0, 0]), m(&[0, 1]), m(&[1, 1])]).unwrap();
        let (v, top) = psi_dual_inverse(&j).unwrap();
        assert_eq!(v, space(2, &[&[0, 0], &[0, 1], &[1, 1]]));
        assert_eq!(top, 1);
    }

    #[test]
    fn psi_dual_inverse_rejects_infinite_quotients() {
        // (y_1) in two variables: every power of y_2 is standard
        let j = MonomialIdeal::new(2, Basis::Y, vec![m(&[0])]).unwrap();
        assert_eq!(
            psi_dual_inverse(&j),
            Err(Error::HeightDeficient { vars: 2 })
        );
        let zero = MonomialIdeal::zero(2, Basis::Y).unwrap();
        assert_eq!(
            psi_dual_inverse(&zero),
            Err(Error::HeightDeficient { vars: 2 })
        );
        let wrong_basis = MonomialIdeal::new(2, Basis::XOne, vec![m(&[0])]).unwrap();
        assert!(matches!(
            psi_dual_inverse(&wrong_basis),
            Err(Error::BasisMismatch { .. })
        ));
    }

    #[test]
    fn psi_dual_roundtrip_on_the_unit_edge() {
        let empty = MonomialSpace::empty(2).unwrap();
        let j = psi_dual(&empty, 0).unwrap();
        assert!(j.is_unit());
        let (back, top) = psi_dual_inverse(&j).unwrap();
        assert!(back.is_empty());
        assert_eq!(top, 0);
    }

    #[test]
    fn stretch_examples() {
        // 1-based x_1^2 x_2 is 0-based (0,0,1); positions add 0,1,2
        assert_eq!(stretch(&m(&[0, 0, 1])), m(&[0, 1, 3]));
        assert_eq!(stretch(&m(&[0, 2])), m(&[0, 3]));
        assert_eq!(stretch(&m(&[0, 0, 0])), m(&[0, 1, 2]));
        assert!(stretch(&m(&[0, 0, 1])).is_squarefree());
    }

    #[test]
    fn compress_examples() {
        assert_eq!(compress(&m(&[0, 1, 3])).unwrap(), m(&[0, 0, 1]));
        assert_eq!(compress(&m(&[0, 1, 2])).unwrap(), m(&[0, 0, 0]));
        assert_eq!(compress(&m(&[1, 2])).unwrap(), m(&[1, 1]));
        assert!(compress(&m(&[0, 0])).is_err());
    }

    #[test]
    fn stretch_compress_inverse() {
        for u in all_monomials(3, 4) {
            assert_eq!(compress(&stretch(&u)).unwrap(), u);
        }
    }

    #[test]
    fn stretch_ideal_is_squarefree_strongly_stable() {
        let i = MonomialIdeal::new(2, Basis::XOne, vec![m(&[0, 0]), m(&[0, 1])]).unwrap();
        let s = stretch_ideal(&i).unwrap();
        assert_eq!(s.vars(), 3);
        assert_eq!(s.num_gens(), 2);
        assert!(s.contains(&m(&[0, 1])) && s.contains(&m(&[0, 2])));
        assert_eq!(s.to_string(), "(x1 x2, x1 x3)");

        let not_ss = MonomialIdeal::new(2, Basis::XOne, vec![m(&[0, 1])]).unwrap();
        assert_eq!(stretch_ideal(&not_ss), Err(Error::NotStronglyStable));
        let multi = MonomialIdeal::new(2, Basis::XOne, vec![m(&[0]), m(&[1, 1])]).unwrap();
        assert_eq!(stretch_ideal(&multi), Err(Error::NotSingleDegree));
    }

    #[test]
    fn alexander_dual_examples() {
        let i = MonomialIdeal::new(2, Basis::XOne, vec![m(&[0, 1])]).unwrap();
        assert_eq!(alexander_dual(&i).unwrap().to_string(), "(x1, x2)");

        let i = MonomialIdeal::new(3, Basis::XOne, vec![m(&[0, 1]), m(&[0, 2])]).unwrap();
        assert_eq!(alexander_dual(&i).unwrap().to_string(), "(x1, x2 x3)");

        let i = MonomialIdeal::new(1, Basis::XOne, vec![m(&[0])]).unwrap();
        assert_eq!(alexander_dual(&i).unwrap().to_string(), "(x1)");

        let nonsq = MonomialIdeal::new(2, Basis::XOne, vec![m(&[0, 0])]).unwrap();
        assert!(alexander_dual(&nonsq).is_err());
    }

    #[test]
    fn alexander_dual_is_an_involution_small() {
        let cases = vec![
            MonomialIdeal::new(3, Basis::XOne, vec![m(&[0, 1]), m(&[0, 2])]).unwrap(),
            MonomialIdeal::new(4, Basis::XOne, vec![m(&[0, 1]), m(&[2, 3]), m(&[0, 3])]).unwrap(),
            MonomialIdeal::new(3, Basis::XOne, vec![m(&[0]), m(&[1, 2])]).unwrap(),
        ];
        for i in cases {
            let dd = alexander_dual(&alexander_dual(&i).unwrap()).unwrap();
            assert_eq!(dd, i);
        }
    }

    #[test]
    fn murai_dual_examples() {
        let i = MonomialIdeal::new(2, Basis::XOne, vec![m(&[0, 0]), m(&[0, 1])]).unwrap();
        let dual = murai_dual(&i).unwrap();
        assert_eq!(dual.to_string(), "(y1, y2^2)");

        // (x_1^d) in one variable: pipeline agrees with the psi-side dual
        for d in 1..=4u32 {
            let i = MonomialIdeal::new(1, Basis::XOne, vec![m(&vec![0; d as usize])]).unwrap();
            let dual = murai_dual(&i).unwrap();
            let expect = psi_dual(&space(d, &[&vec![0; d as usize]]), 0).unwrap();
            assert_eq!(dual, expect);
        }

        // the ideal of all degree-d monomials matches the dual of the full space
        for (n, d) in [(2u32, 2u32), (3, 2), (2, 3)] {
            let full = all_monomials(d, n - 1);
            let i = MonomialIdeal::new(n, Basis::XOne, full.clone()).unwrap();
            let dual = murai_dual(&i).unwrap();
            let v = MonomialSpace::from_members(d, full).unwrap();
            let expect = psi_dual(&v, n - 1).unwrap();
            assert_eq!(dual, expect, "full space n={n} d={d}");
        }
    }

    #[test]
    fn duality_agree_worked_cases() {
        let i = MonomialIdeal::new(2, Basis::XOne, vec![m(&[0, 0]), m(&[0, 1])]).unwrap();
        assert_eq!(duality_agree(&i), Ok(true));
        let i = MonomialIdeal::new(1, Basis::XOne, vec![m(&[0, 0, 0])]).unwrap();
        assert_eq!(duality_agree(&i), Ok(true));
    }

    #[test]
    fn hilbert_bridge_for_block_stable_spaces() {
        // For block stable V, the y-ideal generated by psi of the bounded
        // complement has exactly w_e(V) standard monomials in degree e.
        let cases = vec![
            space(2, &[&[0, 0], &[1, 1]]),
            space(3, &[&[0, 0, 0], &[0, 0, 1], &[0, 1, 1], &[0, 1, 2]]),
            space(2, &[&[0, 0], &[0, 1], &[1, 1]]),
        ];
        for v in cases {
            assert!(crate::stability::is_block_stable(&v));
            let top = v.max_index().unwrap();
            let d = v.degree();
            let complement = v.complement_in_degree(top + 1);
            let gens = complement.members().map(|u| psi(u).to_monomial());
            let j = MonomialIdeal::new(d, Basis::Y, gens).unwrap();
            let w = v.w_profile();
            for e in 0..=top + 1 {
                let std = all_monomials(e, d - 1)
                    .into_iter()
                    .filter(|u| !j.contains(u))
                    .count();
                assert_eq!(
                    num_bigint::BigUint::from(std),
                    w.get(e as usize),
                    "degree {e} of {v:?}"
                );
            }
        }
    }
}
