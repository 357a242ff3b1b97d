//! Exhaustive and seeded-random generators used as ground truth at small `n`.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::axioms::check_bases;
use crate::error::{Error, Result};
use crate::ground::{enumerate_admissible_subsets, AdmissibleSet, Kind, SetCollection};

/// Largest `n` for which whole families are enumerated.
pub const SWEEP_LIMIT: usize = 3;

fn guard(n: usize) -> Result<()> {
    if n > SWEEP_LIMIT {
        Err(Error::GuardExceeded {
            n,
            limit: SWEEP_LIMIT,
        })
    } else {
        Ok(())
    }
}

/// Every non-empty collection of admissible `k`-subsets of `E±n`.
///
/// Collections are produced by counting through subsets of `E_k`, taken in
/// enumeration order, as binary numbers.
pub fn all_collections(n: usize, k: usize) -> Result<Vec<SetCollection>> {
    guard(n)?;
    let level = enumerate_admissible_subsets(n, k)?;
    let count = 1u64 << level.len();
    Ok((1..count)
        .map(|m| {
            let sets = level
                .iter()
                .enumerate()
                .filter(|(i, _)| m >> i & 1 == 1)
                .map(|(_, s)| *s)
                .collect();
            SetCollection::new(n, Kind::Bases, sets).expect("sets built over n")
        })
        .collect())
}

fn canonical_order(colls: &mut [SetCollection]) {
    colls.sort_by(|a, b| a.sets().cmp(b.sets()));
}

/// All symplectic matroids on `E±n` of rank `k`, i.e. the non-empty
/// collections of admissible `k`-sets passing the Maximality Property.
pub fn enumerate_symplectic(n: usize, k: usize) -> Result<Vec<SetCollection>> {
    let mut out = Vec::new();
    for c in all_collections(n, k)? {
        if check_bases(&c)?.passed() {
            out.push(c);
        }
    }
    canonical_order(&mut out);
    Ok(out)
}

/// Every antichain of non-empty admissible subsets of `E±n`, including the
/// empty family. These are exactly the families passing SC1 and SC2.
pub fn enumerate_antichains(n: usize) -> Result<Vec<SetCollection>> {
    guard(n)?;
    let mut universe: Vec<AdmissibleSet> =
        AdmissibleSet::all(n).filter(|s| !s.is_empty()).collect();
    universe.sort_unstable();
    let comparable: Vec<Vec<bool>> = universe
        .iter()
        .map(|a| {
            universe
                .iter()
                .map(|b| a.is_subset(b) || b.is_subset(a))
                .collect()
        })
        .collect();

    let mut out = Vec::new();
    let mut chosen = Vec::new();
    extend_antichain(0, &universe, &comparable, &mut chosen, &mut out, n);
    canonical_order(&mut out);
    Ok(out)
}

fn extend_antichain(
    next: usize,
    universe: &[AdmissibleSet],
    comparable: &[Vec<bool>],
    chosen: &mut Vec<usize>,
    out: &mut Vec<SetCollection>,
    n: usize,
) {
    if next == universe.len() {
        let sets = chosen.iter().map(|&i| universe[i]).collect();
        out.push(SetCollection::new(n, Kind::Circuits, sets).expect("sets built over n"));
        return;
    }
    extend_antichain(next + 1, universe, comparable, chosen, out, n);
    if chosen.iter().all(|&j| !comparable[next][j]) {
        chosen.push(next);
        extend_antichain(next + 1, universe, comparable, chosen, out, n);
        chosen.pop();
    }
}

/// `count` distinct admissible `k`-subsets of `E±n`, chosen reproducibly.
///
/// The generator is ChaCha8 seeded with `seed_from_u64(seed)`. Starting from
/// `E_k` in enumeration order, step `i` swaps position `i` with position
/// `i + ((next_u64() as u128 * (len − i) as u128) >> 64)`, and the first
/// `count` positions are the sample.
pub fn random_collection(n: usize, k: usize, count: usize, seed: u64) -> Result<SetCollection> {
    let mut pool = enumerate_admissible_subsets(n, k)?;
    if count > pool.len() {
        return Err(Error::SampleTooLarge {
            count,
            available: pool.len(),
            k,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let len = pool.len();
    for i in 0..count {
        let span = (len - i) as u128;
        let j = i + ((rng.next_u64() as u128 * span) >> 64) as usize;
        pool.swap(i, j);
    }
    pool.truncate(count);
    SetCollection::new(n, Kind::Bases, pool)
}
