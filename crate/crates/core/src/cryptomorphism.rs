//! Moving between bases and circuits.
//!
//! All searches run over the full admissible lattice of `E±n` (`3^n` sets).
//! Independence is closed under taking subsets, so minimality and maximality
//! only need single-element removals and additions.

use crate::error::{Error, Result};
use crate::ground::{AdmissibleSet, Kind, SetCollection, SignedElement};

fn require_equicardinal(bases: &SetCollection) -> Result<usize> {
    let first = bases.sets().first().ok_or(Error::EmptyCollection)?;
    match bases.iter().find(|s| s.len() != first.len()) {
        Some(other) => Err(Error::CardinalityMismatch {
            left: *first,
            right: *other,
        }),
        None => Ok(first.len()),
    }
}

fn in_some_basis(bases: &[AdmissibleSet], s: &AdmissibleSet) -> bool {
    bases.iter().any(|b| s.is_subset(b))
}

/// Minimal admissible sets contained in no basis.
pub fn circuits_from_bases(bases: &SetCollection) -> Result<SetCollection> {
    bases.expect_kind(Kind::Bases)?;
    require_equicardinal(bases)?;
    let b = bases.sets();
    let mut circuits: Vec<AdmissibleSet> = AdmissibleSet::all(bases.n())
        .filter(|s| !in_some_basis(b, s) && s.elements().all(|e| in_some_basis(b, &s.without(e))))
        .collect();
    circuits.sort_unstable();
    Ok(SetCollection::from_sorted(
        bases.n(),
        Kind::Circuits,
        circuits,
    ))
}

/// Maximal admissible sets containing no circuit.
///
/// The result is not required to be equi-cardinal: a family that violates
/// SC4 shows up here as bases of different sizes.
pub fn bases_from_circuits(circuits: &SetCollection) -> Result<SetCollection> {
    circuits.expect_kind(Kind::Circuits)?;
    let bases = maximal_independent(circuits.n(), circuits.sets());
    Ok(SetCollection::from_sorted(circuits.n(), Kind::Bases, bases))
}

/// Sorted maximal admissible sets of `E±n` containing no member of `circuits`.
pub(crate) fn maximal_independent(n: usize, circuits: &[AdmissibleSet]) -> Vec<AdmissibleSet> {
    let independent = |s: &AdmissibleSet| !circuits.iter().any(|j| j.is_subset(s));
    let mut bases: Vec<AdmissibleSet> = AdmissibleSet::all(n)
        .filter(|s| {
            independent(s)
                && outside(s)
                    .into_iter()
                    .all(|x| !independent(&s.with(x).expect("x outside S ∪ S*")))
        })
        .collect();
    bases.sort_unstable();
    bases
}

pub fn is_independent(circuits: &SetCollection, s: &AdmissibleSet) -> bool {
    !circuits.iter().any(|j| j.is_subset(s))
}

pub(crate) fn spans_unchecked(
    circuits: &[AdmissibleSet],
    p: &AdmissibleSet,
    x: SignedElement,
) -> bool {
    let px = p.with(x).expect("x outside P ∪ P*");
    circuits.iter().any(|j| j.contains(x) && j.is_subset(&px))
}

/// Whether some circuit `J` satisfies `J − P = {x}`.
pub fn spans(circuits: &SetCollection, p: &AdmissibleSet, x: SignedElement) -> Result<bool> {
    circuits.check_member_n(p)?;
    if p.touches(x) || x.index() > p.n() {
        return Err(Error::ElementMeetsSet {
            element: x,
            set: *p,
        });
    }
    Ok(spans_unchecked(circuits.sets(), p, x))
}

/// Whether `P` spans every element of `targets`.
pub fn spans_all(
    circuits: &SetCollection,
    p: &AdmissibleSet,
    targets: &[SignedElement],
) -> Result<bool> {
    circuits.check_member_n(p)?;
    if let Some(&x) = targets.iter().find(|x| p.touches(**x) || x.index() > p.n()) {
        return Err(Error::ElementMeetsSet {
            element: x,
            set: *p,
        });
    }
    Ok(targets
        .iter()
        .all(|&x| spans_unchecked(circuits.sets(), p, x)))
}

/// Elements of `E±n` outside `P ∪ P*`.
pub(crate) fn outside(p: &AdmissibleSet) -> Vec<SignedElement> {
    (1..=p.n() as i32)
        .filter(|&i| p.support_mask() & (1 << (i - 1)) == 0)
        .flat_map(|i| [i, -i])
        .map(SignedElement::from_raw)
        .collect()
}

/// `{x} ∪ {b ∈ B | B ∪ {x} − {b} is a basis}`.
pub fn fundamental_circuit(
    bases: &SetCollection,
    basis: &AdmissibleSet,
    x: SignedElement,
) -> Result<AdmissibleSet> {
    bases.check_member_n(basis)?;
    if !bases.contains(basis) {
        return Err(Error::NotAMember { set: *basis });
    }
    if basis.contains(x) {
        return Err(Error::ElementInSet {
            element: x,
            set: *basis,
        });
    }
    let grown = basis.with(x).ok_or(Error::ElementMeetsSet {
        element: x,
        set: *basis,
    })?;
    let mut circuit = AdmissibleSet::empty(basis.n())?
        .with(x)
        .expect("single element");
    for b in basis.elements() {
        if bases.contains(&grown.without(b)) {
            circuit = circuit.with(b).expect("subset of admissible set");
        }
    }
    Ok(circuit)
}

fn validate_pair(
    circuits: &SetCollection,
    c1: &AdmissibleSet,
    c2: &AdmissibleSet,
    x: SignedElement,
) -> Result<AdmissibleSet> {
    for c in [c1, c2] {
        circuits.check_member_n(c)?;
        if !circuits.contains(c) {
            return Err(Error::NotAMember { set: *c });
        }
    }
    if c1 == c2 {
        return Err(Error::IdenticalCircuits(*c1));
    }
    let union = c1.union(c2).ok_or(Error::InadmissibleUnion {
        left: *c1,
        right: *c2,
    })?;
    if !(c1.contains(x) && c2.contains(x)) {
        return Err(Error::NotCommon {
            element: x,
            left: *c1,
            right: *c2,
        });
    }
    Ok(union.without(x))
}

/// First circuit (display order) inside `(C1 ∪ C2) − {x}`.
pub fn eliminate(
    circuits: &SetCollection,
    c1: &AdmissibleSet,
    c2: &AdmissibleSet,
    x: SignedElement,
) -> Result<AdmissibleSet> {
    let region = validate_pair(circuits, c1, c2, x)?;
    circuits
        .iter()
        .find(|c| c.is_subset(&region))
        .copied()
        .ok_or(Error::EliminationFailed {
            left: *c1,
            right: *c2,
            element: x,
        })
}

/// First circuit (display order) through `c` inside `(C1 ∪ C2) − {x}`.
pub fn strong_eliminate(
    circuits: &SetCollection,
    c1: &AdmissibleSet,
    c2: &AdmissibleSet,
    x: SignedElement,
    c: SignedElement,
) -> Result<AdmissibleSet> {
    let region = validate_pair(circuits, c1, c2, x)?;
    if c1.contains(c) == c2.contains(c) {
        return Err(Error::NotInSymmetricDifference {
            element: c,
            left: *c1,
            right: *c2,
        });
    }
    circuits
        .iter()
        .find(|j| j.contains(c) && j.is_subset(&region))
        .copied()
        .ok_or(Error::StrongEliminationFailed {
            left: *c1,
            right: *c2,
            element: x,
            through: c,
        })
}

/// Applies star to every member.
pub fn dual(coll: &SetCollection) -> SetCollection {
    let mut sets: Vec<AdmissibleSet> = coll.iter().map(AdmissibleSet::star).collect();
    sets.sort_unstable();
    SetCollection::from_sorted(coll.n(), coll.kind(), sets)
}
