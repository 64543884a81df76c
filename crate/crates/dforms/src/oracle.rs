//! Exhaustive enumerators and deterministic random generators used to
//! verify the equivalence theorems at desk scale.
//!
//! Subsets of the bounded monomial universe are walked in bitmask order over
//! the degree-lex-descending monomial list. The stability predicates are
//! evaluated through precomputed move tables (one required-members bitmask
//! per monomial, built from the same exchange / block-shift / star
//! operations the direct predicates use); the census cross-validates the
//! table path against the direct predicates on a deterministic slice of the
//! subsets.

use std::collections::BTreeSet;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::macaulay::{binomial, macaulay_bound};
use crate::monomial::{all_monomials, Monomial, MonomialSpace, WVector};
use crate::stability;
use crate::star::{algebra_generators, star};

/// Cap on the size of a monomial enumeration.
pub const MONOMIAL_CAP: u64 = 1 << 20;
/// Cap on the number of subsets an exhaustive walk may visit.
pub const SUBSET_CAP: u64 = 1 << 20;

/// All degree-`d` monomials with max index <= `max_idx`, degree-lex
/// descending; errors when the count `C(max_idx + d, d)` exceeds the cap.
pub fn enumerate_monomials(d: u32, max_idx: u32) -> Result<Vec<Monomial>> {
    let count = binomial(max_idx as u64 + d as u64, d as u64);
    if count > BigUint::from(MONOMIAL_CAP) {
        return Err(Error::EnumerationCap {
            required: count,
            cap: MONOMIAL_CAP,
        });
    }
    let list = all_monomials(d, max_idx);
    debug_assert_eq!(BigUint::from(list.len()), count);
    Ok(list)
}

/// The (monomial list, subset count) pair for an exhaustive subset walk,
/// with the cap applied to `2^count`.
fn subset_universe(d: u32, max_idx: u32) -> Result<(Vec<Monomial>, u64)> {
    let list = enumerate_monomials(d, max_idx)?;
    if list.len() >= 64 || (1u64 << list.len()) > SUBSET_CAP {
        return Err(Error::EnumerationCap {
            required: BigUint::from(2u32).pow(list.len() as u32),
            cap: SUBSET_CAP,
        });
    }
    Ok((list.clone(), 1u64 << list.len()))
}

fn mask_space(d: u32, list: &[Monomial], mask: u64) -> MonomialSpace {
    MonomialSpace::from_members(
        d,
        list.iter()
            .enumerate()
            .filter(|(t, _)| mask >> t & 1 == 1)
            .map(|(_, u)| u.clone()),
    )
    .expect("universe members share the ambient degree")
}

/// Every subset of `enumerate_monomials(d, max_idx)` passing the predicate,
/// as a deterministic stream in bitmask order (bit `t` selects the `t`-th
/// monomial of the descending list).
pub fn enumerate_spaces<F>(
    d: u32,
    max_idx: u32,
    predicate: F,
) -> Result<impl Iterator<Item = MonomialSpace>>
where
    F: Fn(&MonomialSpace) -> bool,
{
    let (list, total) = subset_universe(d, max_idx)?;
    Ok((0..total).filter_map(move |mask| {
        let space = mask_space(d, &list, mask);
        if predicate(&space) {
            Some(space)
        } else {
            None
        }
    }))
}

/// Required-members masks per universe monomial, one per predicate family.
struct MoveTables {
    /// images of all single-variable exchanges (strong stability)
    exchange: Vec<u64>,
    /// images of all block shifts (block stability)
    block: Vec<u64>,
    /// in-universe star products with the degree-1 generators
    star: Vec<u64>,
}

fn build_tables(d: u32, list: &[Monomial]) -> MoveTables {
    let index: std::collections::HashMap<&Monomial, usize> =
        list.iter().enumerate().map(|(t, u)| (u, t)).collect();
    let gens = algebra_generators(d);
    let mut exchange = vec![0u64; list.len()];
    let mut block = vec![0u64; list.len()];
    let mut star_mask = vec![0u64; list.len()];
    for (t, u) in list.iter().enumerate() {
        if let Some(top) = u.max_index() {
            for &(j, _) in u.pairs() {
                for i in 0..j {
                    let w = u.exchange(j, i).expect("x_j divides u");
                    exchange[t] |= 1u64 << index[&w];
                }
            }
            for i in 1..=top {
                let w = stability::block_shift(u, i);
                block[t] |= 1u64 << index[&w];
            }
        }
        for g in &gens {
            let p = star(u, g).expect("equal degrees");
            if let Some(&s) = index.get(&p) {
                star_mask[t] |= 1u64 << s;
            }
        }
    }
    MoveTables {
        exchange,
        block,
        star: star_mask,
    }
}

fn mask_closed(mask: u64, req: &[u64]) -> bool {
    let mut rest = mask;
    while rest != 0 {
        let t = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if req[t] & !mask != 0 {
            return false;
        }
    }
    true
}

/// `V^c` ideal test on a mask: no star product of a complement element with
/// a degree-1 generator may land back in the subset.
fn mask_complement_ideal(mask: u64, star: &[u64]) -> bool {
    for (t, &products) in star.iter().enumerate() {
        if mask >> t & 1 == 0 && products & mask != 0 {
            return false;
        }
    }
    true
}

fn mask_profile(d: u32, list: &[Monomial], mask: u64) -> WVector {
    let mut counts: Vec<u64> = Vec::new();
    let mut rest = mask;
    while rest != 0 {
        let t = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let i = list[t].max_index().unwrap_or(0) as usize;
        if counts.len() <= i {
            counts.resize(i + 1, 0);
        }
        counts[i] += 1;
    }
    WVector::from_counts(d, &counts)
}

/// All O-sequences with `w_1 <= d`, support contained in `0..=max_idx`, and
/// every entry within the count of degree-`d` monomials at its max index.
pub fn admissible_osequences(d: u32, max_idx: u32) -> Vec<WVector> {
    fn rec(d: u32, max_idx: u32, entries: &mut Vec<BigUint>, out: &mut Vec<WVector>) {
        out.push(WVector::new(d, entries.clone()));
        let i = entries.len();
        if i > max_idx as usize {
            return;
        }
        let count_cap = binomial(i as u64 + d as u64 - 1, i as u64);
        let growth_cap = if i == 1 {
            BigUint::from(d)
        } else {
            macaulay_bound(&entries[i - 1], i as u32 - 1).expect("positive degree")
        };
        let cap = count_cap.min(growth_cap);
        let cap: u64 = u64::try_from(&cap).expect("desk-scale caps fit");
        for w in 1..=cap {
            entries.push(BigUint::from(w));
            rec(d, max_idx, entries, out);
            entries.pop();
        }
    }
    let mut out = Vec::new();
    let mut entries = vec![BigUint::from(1u32)];
    rec(d, max_idx, &mut entries, &mut out);
    out.sort();
    out.dedup();
    out
}

/// The three w-vector sets of the characterization theorem over one bounded
/// universe, plus bookkeeping for the exhaustive walk.
#[derive(Clone, Debug)]
pub struct CensusReport {
    pub d: u32,
    pub max_idx: u32,
    pub subset_count: u64,
    pub strongly_stable_spaces: u64,
    pub block_stable_spaces: u64,
    pub strongly_stable_profiles: BTreeSet<WVector>,
    pub block_stable_profiles: BTreeSet<WVector>,
    pub osequences: BTreeSet<WVector>,
    /// subsets on which the move-table predicates were re-checked against
    /// the direct ones
    pub cross_validated: u64,
    pub sets_equal: bool,
}

fn worker_ranges(total: u64, jobs: usize) -> Vec<(u64, u64)> {
    let jobs = jobs.max(1) as u64;
    let chunk = total.div_ceil(jobs);
    (0..jobs)
        .map(|w| (w * chunk, ((w + 1) * chunk).min(total)))
        .filter(|(lo, hi)| lo < hi)
        .collect()
}

/// Runs the characterization census: collects the w-profiles of every
/// nonempty strongly stable and block stable subset and compares both sets
/// with the admissible O-sequences. Every mask whose index is divisible by
/// 1024 (and every mask in universes of at most 4096 subsets) is
/// re-checked with the direct predicates.
pub fn characterization_census(d: u32, max_idx: u32, jobs: usize) -> Result<CensusReport> {
    let (list, total) = subset_universe(d, max_idx)?;
    let tables = build_tables(d, &list);
    let validate_all = total <= 1 << 12;

    struct Partial {
        ss: BTreeSet<WVector>,
        bs: BTreeSet<WVector>,
        ss_count: u64,
        bs_count: u64,
        validated: u64,
    }

    let run_range = |lo: u64, hi: u64| -> Partial {
        let mut part = Partial {
            ss: BTreeSet::new(),
            bs: BTreeSet::new(),
            ss_count: 0,
            bs_count: 0,
            validated: 0,
        };
        for mask in lo..hi {
            if mask == 0 {
                continue;
            }
            let ss = mask_closed(mask, &tables.exchange);
            let bs = mask_closed(mask, &tables.block);
            if ss {
                part.ss_count += 1;
                part.ss.insert(mask_profile(d, &list, mask));
            }
            if bs {
                part.bs_count += 1;
                part.bs.insert(mask_profile(d, &list, mask));
            }
            if validate_all || mask % 1024 == 0 {
                let space = mask_space(d, &list, mask);
                assert_eq!(ss, stability::is_strongly_stable(&space), "mask {mask}");
                assert_eq!(bs, stability::is_block_stable(&space), "mask {mask}");
                part.validated += 1;
            }
        }
        part
    };

    let ranges = worker_ranges(total, jobs);
    let partials: Vec<Partial> = if ranges.len() <= 1 {
        vec![run_range(0, total)]
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = ranges
                .iter()
                .map(|&(lo, hi)| scope.spawn(move || run_range(lo, hi)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("census worker"))
                .collect()
        })
    };

    let mut report = CensusReport {
        d,
        max_idx,
        subset_count: total,
        strongly_stable_spaces: 0,
        block_stable_spaces: 0,
        strongly_stable_profiles: BTreeSet::new(),
        block_stable_profiles: BTreeSet::new(),
        osequences: admissible_osequences(d, max_idx).into_iter().collect(),
        cross_validated: 0,
        sets_equal: false,
    };
    for p in partials {
        report.strongly_stable_spaces += p.ss_count;
        report.block_stable_spaces += p.bs_count;
        report.cross_validated += p.validated;
        report.strongly_stable_profiles.extend(p.ss);
        report.block_stable_profiles.extend(p.bs);
    }
    report.sets_equal = report.strongly_stable_profiles == report.block_stable_profiles
        && report.block_stable_profiles == report.osequences;
    Ok(report)
}

/// Exhaustive check that block stability coincides with the `V^c`-is-ideal
/// criterion on every subset of the universe (the finite form of the
/// ideal-complement lemma). Uses the same cross-validation policy as the
/// census.
pub fn block_vs_complement_census(d: u32, max_idx: u32, jobs: usize) -> Result<bool> {
    let (list, total) = subset_universe(d, max_idx)?;
    let tables = build_tables(d, &list);
    let validate_all = total <= 1 << 12;

    let run_range = |lo: u64, hi: u64| -> bool {
        for mask in lo..hi {
            let bs = mask_closed(mask, &tables.block);
            let ci = mask_complement_ideal(mask, &tables.star);
            if bs != ci {
                return false;
            }
            if validate_all || mask % 1024 == 0 {
                let space = mask_space(d, &list, mask);
                assert_eq!(bs, stability::is_block_stable(&space));
                assert_eq!(ci, crate::star::is_complement_ideal(&space));
            }
        }
        true
    };

    let ranges = worker_ranges(total, jobs);
    if ranges.len() <= 1 {
        return Ok(run_range(0, total));
    }
    let ok = std::thread::scope(|scope| {
        let handles: Vec<_> = ranges
            .iter()
            .map(|&(lo, hi)| scope.spawn(move || run_range(lo, hi)))
            .collect();
        handles
            .into_iter()
            .all(|h| h.join().expect("census worker"))
    });
    Ok(ok)
}

/// Materializes every strongly stable subset of the universe (the empty
/// space included), via the move tables.
pub fn strongly_stable_spaces(d: u32, max_idx: u32) -> Result<Vec<MonomialSpace>> {
    let (list, total) = subset_universe(d, max_idx)?;
    let tables = build_tables(d, &list);
    Ok((0..total)
        .filter(|&mask| mask_closed(mask, &tables.exchange))
        .map(|mask| mask_space(d, &list, mask))
        .collect())
}

/// Materializes every p-Borel subset of the universe for a fixed prime.
pub fn p_borel_spaces(d: u32, max_idx: u32, p: u64) -> Result<Vec<MonomialSpace>> {
    let (list, total) = subset_universe(d, max_idx)?;
    // move table: all Lucas-admissible block exchanges
    let index: std::collections::HashMap<&Monomial, usize> =
        list.iter().enumerate().map(|(t, u)| (u, t)).collect();
    let mut req = vec![0u64; list.len()];
    for (t, u) in list.iter().enumerate() {
        for &(j, aj) in u.pairs() {
            if j == 0 {
                continue;
            }
            for k in 1..=aj {
                if !stability::binomial_nonzero_mod_p(aj, k, p) {
                    continue;
                }
                let lowered = u.div_var_pow(j, k).expect("a_j >= k");
                for i in 0..j {
                    let w = lowered.mul_var_pow(i, k);
                    req[t] |= 1u64 << index[&w];
                }
            }
        }
    }
    let spaces: Vec<MonomialSpace> = (0..total)
        .filter(|&mask| mask_closed(mask, &req))
        .map(|mask| mask_space(d, &list, mask))
        .collect();
    // spot-check the table against the direct predicate
    for space in spaces.iter().take(64) {
        assert_eq!(stability::is_p_borel(space, p), Ok(true));
    }
    Ok(spaces)
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E3779B97F4A7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

/// Deterministic for a fixed seed: samples `size` monomials from the
/// universe and returns their strongly stable closure.
pub fn random_strongly_stable(
    d: u32,
    max_idx: u32,
    size: usize,
    seed: u64,
) -> Result<MonomialSpace> {
    let list = enumerate_monomials(d, max_idx)?;
    let mut state = seed;
    let sample: BTreeSet<Monomial> = (0..size)
        .map(|_| list[(splitmix64(&mut state) % list.len() as u64) as usize].clone())
        .collect();
    let space = MonomialSpace::from_members(d, sample)?;
    Ok(stability::strongly_stable_closure(&space))
}
