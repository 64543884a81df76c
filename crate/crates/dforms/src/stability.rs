//! Stability predicates on monomial spaces and ideals: stable, strongly
//! stable, block stable, the transported y-side exchange criterion, the
//! squarefree variant, p-Borel fixedness, and the strongly stable closure
//! used to generate test instances.
//!
//! Ideal-level predicates check the defining exchange on the minimal
//! generators, with membership decided by divisibility; this is equivalent
//! to the space-level condition on the full (infinite) monomial set of the
//! ideal, since any monomial of the ideal is a generator times a monomial
//! and exchanges commute with that factorization.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, MonomialSpace};

/// Stable: for every member `u` and every `i < m(u)`,
/// `(u / x_{m(u)}) x_i` is again a member.
pub fn is_stable(v: &MonomialSpace) -> bool {
    v.members().all(|u| {
        let top = match u.max_index() {
            Some(t) if t > 0 => t,
            _ => return true,
        };
        (0..top).all(|i| v.contains(&u.exchange(top, i).expect("x_top divides u")))
    })
}

/// Strongly stable: for every member `u`, every `x_j` dividing `u` and every
/// `i < j`, `(u / x_j) x_i` is again a member.
pub fn is_strongly_stable(v: &MonomialSpace) -> bool {
    v.members().all(|u| {
        u.pairs()
            .iter()
            .all(|&(j, _)| (0..j).all(|i| v.contains(&u.exchange(j, i).expect("x_j divides u"))))
    })
}

/// The block move of Def. block stable: divide `u = x_0^{a_0} ... x_e^{a_e}`
/// by its tail block `x_i^{a_i} ... x_e^{a_e}` and multiply the block back
/// shifted one index down. Requires `1 <= i <= e`.
pub fn block_shift(u: &Monomial, i: u32) -> Monomial {
    let a = u.dense_exponents();
    let e = a.len() - 1;
    let i = i as usize;
    debug_assert!(i >= 1 && i <= e);
    let mut b = vec![0u32; e];
    for (t, slot) in b.iter_mut().enumerate() {
        *slot = if t < i - 1 {
            a[t]
        } else if t == i - 1 {
            a[i - 1] + a[i]
        } else {
            a[t + 1]
        };
    }
    Monomial::from_pairs(b.into_iter().enumerate().map(|(t, f)| (t as u32, f)))
}

/// Block stable: closed under every block shift.
pub fn is_block_stable(v: &MonomialSpace) -> bool {
    v.members().all(|u| {
        let e = match u.max_index() {
            Some(t) if t > 0 => t,
            _ => return true,
        };
        (1..=e).all(|i| v.contains(&block_shift(u, i)))
    })
}

/// The y-side strong-stability criterion transported through `phi`: for
/// every member `x_0^{a_0} ... x_e^{a_e}` with `a_e > 0` and every
/// `i in {0, ..., e-1}` with `a_i > 0`, decrementing `a_i` and incrementing
/// `a_{i+1}` stays inside the space.
pub fn is_block_exchange_closed(v: &MonomialSpace) -> bool {
    v.members().all(|u| {
        let a = u.dense_exponents();
        if a.len() <= 1 {
            return true;
        }
        (0..a.len() - 1).all(|i| {
            if a[i] == 0 {
                return true;
            }
            let moved = u
                .div_var_pow(i as u32, 1)
                .expect("a_i > 0")
                .mul_var_pow(i as u32 + 1, 1);
            v.contains(&moved)
        })
    })
}

/// Smallest strongly stable space containing `v`: the fixed point of the
/// single-variable exchange moves.
pub fn strongly_stable_closure(v: &MonomialSpace) -> MonomialSpace {
    let mut members: Vec<Monomial> = v.members().cloned().collect();
    let mut seen: std::collections::BTreeSet<Monomial> = members.iter().cloned().collect();
    let mut queue = members.clone();
    while let Some(u) = queue.pop() {
        for &(j, _) in u.pairs() {
            for i in 0..j {
                let w = u.exchange(j, i).expect("x_j divides u");
                if seen.insert(w.clone()) {
                    members.push(w.clone());
                    queue.push(w);
                }
            }
        }
    }
    MonomialSpace::from_members(v.degree(), members).expect("exchanges preserve degree")
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut q = 2;
    while q * q <= p {
        if p.is_multiple_of(q) {
            return false;
        }
        q += 1;
    }
    true
}

/// Lucas: `C(n, k) != 0 (mod p)` iff every base-p digit of `k` is at most
/// the corresponding digit of `n`.
pub(crate) fn binomial_nonzero_mod_p(n: u32, k: u32, p: u64) -> bool {
    let (mut n, mut k) = (n as u64, k as u64);
    while k > 0 {
        if k % p > n % p {
            return false;
        }
        n /= p;
        k /= p;
    }
    true
}

/// p-Borel (Borel fixed in characteristic p), by the standard exchange
/// criterion: for every member `u`, every `j` with `a_j > 0`, every `i < j`
/// and every `1 <= k <= a_j` with `C(a_j, k) != 0 (mod p)`, the monomial
/// `(u / x_j^k) x_i^k` is again a member.
pub fn is_p_borel(v: &MonomialSpace, p: u64) -> Result<bool> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    for u in v.members() {
        for &(j, aj) in u.pairs() {
            if j == 0 {
                continue;
            }
            for k in 1..=aj {
                if !binomial_nonzero_mod_p(aj, k, p) {
                    continue;
                }
                let lowered = u.div_var_pow(j, k).expect("a_j >= k");
                for i in 0..j {
                    if !v.contains(&lowered.mul_var_pow(i, k)) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Stable ideal: the exchange `(g / x_{m(g)}) x_i` of every minimal
/// generator lands in the ideal.
pub fn is_stable_ideal(ideal: &MonomialIdeal) -> bool {
    ideal.gens().all(|g| {
        let top = match g.max_index() {
            Some(t) if t > 0 => t,
            _ => return true,
        };
        (0..top).all(|i| ideal.contains(&g.exchange(top, i).expect("x_top divides g")))
    })
}

/// Strongly stable ideal: every single-variable exchange of every minimal
/// generator lands in the ideal.
pub fn is_strongly_stable_ideal(ideal: &MonomialIdeal) -> bool {
    ideal.gens().all(|g| {
        g.pairs().iter().all(|&(j, _)| {
            (0..j).all(|i| ideal.contains(&g.exchange(j, i).expect("x_j divides g")))
        })
    })
}

/// Squarefree strongly stable: all generators squarefree, and for every
/// generator `u`, every `x_j | u` and every `i < j` with `x_i` not dividing
/// `u`, the squarefree exchange `(u / x_j) x_i` lies in the ideal.
pub fn is_squarefree_strongly_stable(ideal: &MonomialIdeal) -> Result<bool> {
    for g in ideal.gens() {
        if !g.is_squarefree() {
            return Err(Error::NotSquarefree(g.to_string()));
        }
    }
    for g in ideal.gens() {
        for &(j, _) in g.pairs() {
            for i in 0..j {
                if g.exponent(i) > 0 {
                    continue;
                }
                if !ideal.contains(&g.exchange(j, i).expect("x_j divides g")) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::Basis;
    use crate::monomial::all_monomials;

    fn m(indices: &[u32]) -> Monomial {
        Monomial::from_indices(indices)
    }

    fn space(d: u32, members: &[&[u32]]) -> MonomialSpace {
        MonomialSpace::from_members(d, members.iter().map(|ix| m(ix))).unwrap()
    }

    // The three spaces of the worked classification example.
    fn five_gen() -> MonomialSpace {
        space(
            3,
            &[&[0, 0, 0], &[0, 0, 1], &[0, 1, 1], &[0, 1, 2], &[0, 1, 3]],
        )
    }

    fn four_gen() -> MonomialSpace {
        space(3, &[&[0, 0, 0], &[0, 0, 1], &[0, 1, 1], &[0, 1, 2]])
    }

    fn two_squares() -> MonomialSpace {
        space(2, &[&[0, 0], &[1, 1]])
    }

    #[test]
    fn stable_examples() {
        assert!(is_stable(&five_gen()));
        assert!(!is_stable(&two_squares()));
        assert!(is_stable(&space(4, &[&[0, 0, 0, 0]])));
        assert!(is_stable(&MonomialSpace::empty(2).unwrap()));
    }

    #[test]
    fn strongly_stable_examples() {
        assert!(!is_strongly_stable(&four_gen()));
        assert!(is_strongly_stable(
            &MonomialSpace::from_members(2, all_monomials(2, 3)).unwrap()
        ));
        assert!(is_strongly_stable(&space(2, &[&[0, 0], &[0, 1], &[1, 1]])));
    }

    #[test]
    fn block_stable_examples() {
        assert!(is_block_stable(&two_squares()));
        // the block shift of x_0 x_1 x_3 at i = 1 gives x_0^2 x_2, missing
        assert!(!is_block_stable(&five_gen()));
        assert!(is_block_stable(&four_gen()));
    }

    #[test]
    fn block_shift_matches_the_worked_move() {
        let u = m(&[0, 1, 3]);
        assert_eq!(block_shift(&u, 1), m(&[0, 0, 2]));
        assert_eq!(block_shift(&u, 2), m(&[0, 1, 2]));
        assert_eq!(block_shift(&u, 3), m(&[0, 1, 2]));
        let v = m(&[1, 1]);
        assert_eq!(block_shift(&v, 1), m(&[0, 0]));
    }

    #[test]
    fn block_exchange_examples() {
        // phi-image of the strongly stable y-space <y_1, y_2> at d = 2
        assert!(is_block_exchange_closed(&space(2, &[&[1, 1], &[0, 1]])));
        assert!(is_block_exchange_closed(&space(4, &[&[0, 0, 0, 0]])));
        assert!(!is_block_exchange_closed(&space(2, &[&[0, 1]])));
    }

    #[test]
    fn strongly_stable_implies_stable_and_block_stable() {
        for d in 1..=3u32 {
            let all = all_monomials(d, 2);
            for mask in 0u32..(1 << all.len()) {
                let v = MonomialSpace::from_members(
                    d,
                    all.iter()
                        .enumerate()
                        .filter(|(t, _)| mask >> t & 1 == 1)
                        .map(|(_, u)| u.clone()),
                )
                .unwrap();
                if is_strongly_stable(&v) {
                    assert!(is_stable(&v));
                    assert!(is_block_stable(&v));
                }
            }
        }
    }

    #[test]
    fn p_borel_examples() {
        assert_eq!(is_p_borel(&two_squares(), 2), Ok(true));
        assert_eq!(is_p_borel(&two_squares(), 3), Ok(false));
        let ss = strongly_stable_closure(&space(3, &[&[1, 2, 2]]));
        for p in [2, 3, 5] {
            assert_eq!(is_p_borel(&ss, p), Ok(true));
        }
        assert_eq!(is_p_borel(&two_squares(), 4), Err(Error::NotPrime(4)));
    }

    #[test]
    fn lucas_digits() {
        assert!(binomial_nonzero_mod_p(2, 2, 2)); // C(2,2) = 1
        assert!(!binomial_nonzero_mod_p(2, 1, 2)); // C(2,1) = 2
        assert!(binomial_nonzero_mod_p(2, 1, 3));
        assert!(binomial_nonzero_mod_p(5, 2, 3)); // C(5,2) = 10 = 1 mod 3
        assert!(!binomial_nonzero_mod_p(6, 2, 3)); // C(6,2) = 15 = 0 mod 3
    }

    #[test]
    fn closure_examples() {
        let c = strongly_stable_closure(&space(2, &[&[1, 1]]));
        assert_eq!(c, space(2, &[&[0, 0], &[0, 1], &[1, 1]]));
        let fixed = space(3, &[&[0, 0, 0]]);
        assert_eq!(strongly_stable_closure(&fixed), fixed);
        let empty = MonomialSpace::empty(2).unwrap();
        assert_eq!(strongly_stable_closure(&empty), empty);
    }

    #[test]
    fn closure_is_idempotent_extensive_monotone() {
        let a = space(3, &[&[1, 1, 3]]);
        let b = space(3, &[&[1, 1, 3], &[2, 2, 2]]);
        let ca = strongly_stable_closure(&a);
        let cb = strongly_stable_closure(&b);
        assert_eq!(strongly_stable_closure(&ca), ca);
        assert!(a.members().all(|u| ca.contains(u)));
        assert!(ca.members().all(|u| cb.contains(u)));
        assert!(is_strongly_stable(&ca));
    }

    #[test]
    fn ideal_level_predicates() {
        // (x_1^2, x_1 x_2, x_2^2) is strongly stable, 1-based convention
        let i =
            MonomialIdeal::new(2, Basis::XOne, vec![m(&[0, 0]), m(&[0, 1]), m(&[1, 1])]).unwrap();
        assert!(is_stable_ideal(&i));
        assert!(is_strongly_stable_ideal(&i));
        // (x_1 x_2) alone is not stable
        let j = MonomialIdeal::new(2, Basis::XOne, vec![m(&[0, 1])]).unwrap();
        assert!(!is_stable_ideal(&j));
        // (x_1^2, x_1 x_2) is stable and strongly stable at the ideal level
        let k = MonomialIdeal::new(2, Basis::XOne, vec![m(&[0, 0]), m(&[0, 1])]).unwrap();
        assert!(is_stable_ideal(&k));
        assert!(is_strongly_stable_ideal(&k));
    }

    #[test]
    fn squarefree_strongly_stable_examples() {
        let i = MonomialIdeal::new(3, Basis::XOne, vec![m(&[0, 1]), m(&[0, 2])]).unwrap();
        assert_eq!(is_squarefree_strongly_stable(&i), Ok(true));
        let j = MonomialIdeal::new(3, Basis::XOne, vec![m(&[1, 2])]).unwrap();
        assert_eq!(is_squarefree_strongly_stable(&j), Ok(false));
        let k = MonomialIdeal::new(1, Basis::XOne, vec![m(&[0])]).unwrap();
        assert_eq!(is_squarefree_strongly_stable(&k), Ok(true));
        let bad = MonomialIdeal::new(2, Basis::XOne, vec![m(&[0, 0])]).unwrap();
        assert!(is_squarefree_strongly_stable(&bad).is_err());
    }

    #[test]
    fn generator_check_matches_space_check_on_truncations() {
        // Space-level stability of all monomials of the ideal up to a bound
        // agrees with the generator-level predicate.
        let cases = vec![
            MonomialIdeal::new(3, Basis::XOne, vec![m(&[0, 0]), m(&[0, 1])]).unwrap(),
            MonomialIdeal::new(3, Basis::XOne, vec![m(&[0, 1])]).unwrap(),
            MonomialIdeal::new(3, Basis::XOne, vec![m(&[0]), m(&[1, 1, 2])]).unwrap(),
        ];
        for ideal in cases {
            let gen_level = is_stable_ideal(&ideal);
            let maxdeg = ideal.max_gen_degree().unwrap() + 2;
            let mut space_level = true;
            for t in 1..=maxdeg {
                let members: Vec<_> = all_monomials(t, ideal.vars() - 1)
                    .into_iter()
                    .filter(|u| ideal.contains(u))
                    .collect();
                if members.is_empty() {
                    continue;
                }
                let v = MonomialSpace::from_members(t, members).unwrap();
                // truncated stability: moves stay within the same degree
                space_level &= is_stable(&v);
            }
            assert_eq!(gen_level, space_level, "ideal {ideal}");
        }
    }
}
