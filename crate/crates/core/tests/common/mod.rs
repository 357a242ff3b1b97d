//! Slow, direct re-implementations used as an independent reference.
//!
//! Everything here works on `BTreeSet<i32>` and plain permutations so that it
//! shares no code with the bitmask implementation under test.

#![allow(dead_code)]

use std::collections::BTreeSet;

use itertools::Itertools;
use symplectic::{AdmissibleSet, Kind, SetCollection};

pub type Set = BTreeSet<i32>;

pub fn admissible(s: &Set) -> bool {
    s.iter().all(|v| *v != 0 && !s.contains(&-v))
}

/// All admissible subsets of E±n.
pub fn admissible_sets(n: i32) -> Vec<Set> {
    let mut out = vec![Set::new()];
    for i in 1..=n {
        out = out
            .into_iter()
            .flat_map(|s| {
                let mut plus = s.clone();
                plus.insert(i);
                let mut minus = s.clone();
                minus.insert(-i);
                [s, plus, minus]
            })
            .collect();
    }
    out
}

pub fn admissible_k_sets(n: i32, k: usize) -> Vec<Set> {
    admissible_sets(n)
        .into_iter()
        .filter(|s| s.len() == k)
        .collect()
}

/// Every admissible ordering as a full chain of 2n values.
pub fn orderings(n: i32) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    for perm in (1..=n).permutations(n as usize) {
        for signs in 0..1u32 << n {
            let lower: Vec<i32> = perm
                .iter()
                .enumerate()
                .map(|(i, v)| if signs >> i & 1 == 1 { -v } else { *v })
                .collect();
            let mut chain = lower.clone();
            chain.extend(lower.iter().rev().map(|v| -v));
            out.push(chain);
        }
    }
    out
}

fn sorted_positions(s: &Set, chain: &[i32]) -> Vec<usize> {
    let mut p: Vec<usize> = s
        .iter()
        .map(|v| chain.iter().position(|c| c == v).unwrap())
        .collect();
    p.sort_unstable();
    p
}

/// `a ≤ b` in the Gale order induced by `chain`.
pub fn gale_le(a: &Set, b: &Set, chain: &[i32]) -> bool {
    let pa = sorted_positions(a, chain);
    let pb = sorted_positions(b, chain);
    pa.len() == pb.len() && pa.iter().zip(&pb).all(|(x, y)| x <= y)
}

pub fn has_greatest(sets: &[Set], chain: &[i32]) -> bool {
    sets.iter()
        .any(|m| sets.iter().all(|s| gale_le(s, m, chain)))
}

pub fn is_symplectic(n: i32, bases: &[Set]) -> bool {
    let Some(first) = bases.first() else {
        return false;
    };
    bases.iter().all(|b| b.len() == first.len())
        && orderings(n).iter().all(|c| has_greatest(bases, c))
}

fn minimal(family: Vec<Set>) -> Vec<Set> {
    family
        .iter()
        .filter(|s| !family.iter().any(|t| t != *s && t.is_subset(s)))
        .cloned()
        .collect()
}

fn maximal(family: Vec<Set>) -> Vec<Set> {
    family
        .iter()
        .filter(|s| !family.iter().any(|t| t != *s && s.is_subset(t)))
        .cloned()
        .collect()
}

pub fn circuits_from_bases(n: i32, bases: &[Set]) -> Vec<Set> {
    let dependent = admissible_sets(n)
        .into_iter()
        .filter(|s| !s.is_empty() && !bases.iter().any(|b| s.is_subset(b)))
        .collect();
    sorted(minimal(dependent))
}

pub fn independent(circuits: &[Set], s: &Set) -> bool {
    !circuits.iter().any(|c| c.is_subset(s))
}

pub fn bases_from_circuits(n: i32, circuits: &[Set]) -> Vec<Set> {
    let indep = admissible_sets(n)
        .into_iter()
        .filter(|s| independent(circuits, s))
        .collect();
    sorted(maximal(indep))
}

fn union(a: &Set, b: &Set) -> Set {
    a.union(b).copied().collect()
}

fn spans(circuits: &[Set], p: &Set, x: i32) -> bool {
    circuits.iter().any(|c| {
        let rest: Set = c.difference(p).copied().collect();
        rest.len() == 1 && rest.contains(&x)
    })
}

pub fn sc1(circuits: &[Set]) -> bool {
    circuits.iter().all(|c| !c.is_empty())
}

pub fn sc2(circuits: &[Set]) -> bool {
    circuits
        .iter()
        .all(|a| circuits.iter().all(|b| a == b || !a.is_subset(b)))
}

pub fn sc3(circuits: &[Set]) -> bool {
    for a in circuits {
        for b in circuits {
            if a == b {
                continue;
            }
            let u = union(a, b);
            if !admissible(&u) {
                continue;
            }
            for x in a.intersection(b) {
                let mut target = u.clone();
                target.remove(x);
                if !circuits.iter().any(|c| c.is_subset(&target)) {
                    return false;
                }
            }
        }
    }
    true
}

pub fn sc4(n: i32, circuits: &[Set]) -> bool {
    let rank = bases_from_circuits(n, circuits)
        .iter()
        .map(Set::len)
        .max()
        .unwrap_or(0);
    admissible_sets(n)
        .iter()
        .filter(|p| p.len() < rank)
        .all(|p| {
            (1..=n)
                .flat_map(|i| [i, -i])
                .filter(|x| !p.contains(x) && !p.contains(&-x))
                .any(|x| !spans(circuits, p, x))
        })
}

pub fn circuit_axioms(n: i32, circuits: &[Set]) -> bool {
    sc1(circuits) && sc2(circuits) && sc3(circuits) && sc4(n, circuits)
}

pub fn sorted(mut v: Vec<Set>) -> Vec<Set> {
    v.sort_by_key(canonical);
    v.dedup();
    v
}

/// Sort key matching the crate's display order: elements by (|v|, + before −).
fn canonical(s: &Set) -> Vec<(i32, bool)> {
    let mut key: Vec<(i32, bool)> = s.iter().map(|v| (v.abs(), *v < 0)).collect();
    key.sort_unstable();
    key
}

pub fn to_sets(c: &SetCollection) -> Vec<Set> {
    c.iter().map(|s| s.values().into_iter().collect()).collect()
}

pub fn to_collection(n: i32, kind: Kind, sets: &[Set]) -> SetCollection {
    let sets = sets
        .iter()
        .map(|s| AdmissibleSet::from_values(n as usize, s.iter().map(|v| *v as i64)).unwrap())
        .collect();
    SetCollection::new(n as usize, kind, sets).unwrap()
}

pub fn set(values: &[i32]) -> Set {
    values.iter().copied().collect()
}

pub fn collection(n: usize, kind: Kind, sets: &[&[i64]]) -> SetCollection {
    SetCollection::from_values(n, kind, sets.iter().map(|s| s.to_vec())).unwrap()
}

/// The four bases of the worked rank-3 example on E±4.
pub fn rank3_example() -> SetCollection {
    collection(
        4,
        Kind::Bases,
        &[&[1, 2, 3], &[-1, -2, 3], &[1, 3, 4], &[-2, 3, 4]],
    )
}

pub fn rank3_example_circuits() -> SetCollection {
    collection(
        4,
        Kind::Circuits,
        &[&[-3], &[-4], &[-1, 2], &[1, -2], &[-1, 4], &[2, 4]],
    )
}
