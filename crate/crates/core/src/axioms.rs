//! Checkers for the Maximality Property, the circuit axioms SC1–SC4 and the
//! Symmetric Exchange Axiom.
//!
//! Every failing [`Verdict`] carries a [`Witness`] that can be replayed
//! against the collection it came from with [`Witness::replay`].

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::cryptomorphism::{maximal_independent, outside, spans_unchecked};
use crate::error::{Error, Result};
use crate::ground::{
    enumerate_admissible_orderings, enumerate_admissible_subsets, gale_compare, greatest_member,
    AdmissibleOrdering, AdmissibleSet, GaleView, SetCollection, SignedElement,
};
use crate::EXHAUSTIVE_LIMIT;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AxiomId {
    /// Maximality Property: a greatest basis under every admissible ordering.
    Max,
    Sc1,
    Sc2,
    Sc3,
    Sc4,
    /// Symmetric Exchange Axiom.
    Se,
    /// Non-empty and equi-cardinal.
    Equicard,
}

impl AxiomId {
    pub fn tag(self) -> &'static str {
        match self {
            AxiomId::Max => "MAX",
            AxiomId::Sc1 => "SC1",
            AxiomId::Sc2 => "SC2",
            AxiomId::Sc3 => "SC3",
            AxiomId::Sc4 => "SC4",
            AxiomId::Se => "SE",
            AxiomId::Equicard => "EQUICARD",
        }
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for AxiomId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        [
            AxiomId::Max,
            AxiomId::Sc1,
            AxiomId::Sc2,
            AxiomId::Sc3,
            AxiomId::Sc4,
            AxiomId::Se,
            AxiomId::Equicard,
        ]
        .into_iter()
        .find(|a| a.tag() == s)
        .ok_or_else(|| format!("unknown axiom tag {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

/// Evidence that a collection violates one axiom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    EmptyCollection,
    MixedCardinality {
        first: AdmissibleSet,
        second: AdmissibleSet,
    },
    /// Two maximal members, incomparable under `ordering`.
    IncomparableMaxima {
        ordering: AdmissibleOrdering,
        first: AdmissibleSet,
        second: AdmissibleSet,
    },
    EmptyCircuit,
    NestedCircuits {
        smaller: AdmissibleSet,
        larger: AdmissibleSet,
    },
    /// No circuit lies inside `(first ∪ second) − {element}`.
    FailedElimination {
        first: AdmissibleSet,
        second: AdmissibleSet,
        element: SignedElement,
    },
    /// `set` is smaller than `rank` yet spans everything outside `set ∪ set*`.
    SpanningSet {
        set: AdmissibleSet,
        rank: usize,
    },
    /// No `j ∈ x − y` makes `x ∪ {element} − {j}` a member.
    FailedExchange {
        x: AdmissibleSet,
        y: AdmissibleSet,
        element: SignedElement,
    },
}

impl Witness {
    /// Re-runs the single predicate this witness refutes. `Ok(true)` means the
    /// failure reproduces on `coll`.
    pub fn replay(&self, coll: &SetCollection) -> Result<bool> {
        let member = |s: &AdmissibleSet| -> Result<bool> {
            coll.check_member_n(s)?;
            Ok(coll.contains(s))
        };
        Ok(match self {
            Witness::EmptyCollection => coll.is_empty(),
            Witness::MixedCardinality { first, second } => {
                member(first)? && member(second)? && first.len() != second.len()
            }
            Witness::IncomparableMaxima {
                ordering,
                first,
                second,
            } => {
                if ordering.n() != coll.n() || !member(first)? || !member(second)? {
                    return Ok(false);
                }
                let not_below = |s: &AdmissibleSet| -> Result<bool> {
                    for other in coll {
                        if gale_compare(s, other, ordering)? == Some(Ordering::Less) {
                            return Ok(false);
                        }
                    }
                    Ok(true)
                };
                greatest_member(coll.sets(), ordering)?.is_none()
                    && gale_compare(first, second, ordering)?.is_none()
                    && not_below(first)?
                    && not_below(second)?
            }
            Witness::EmptyCircuit => coll.iter().any(AdmissibleSet::is_empty),
            Witness::NestedCircuits { smaller, larger } => {
                member(smaller)? && member(larger)? && smaller.is_proper_subset(larger)
            }
            Witness::FailedElimination {
                first,
                second,
                element,
            } => {
                if !member(first)? || !member(second)? || first == second {
                    return Ok(false);
                }
                match first.union(second) {
                    Some(u) if first.contains(*element) && second.contains(*element) => {
                        let region = u.without(*element);
                        !coll.iter().any(|c| c.is_subset(&region))
                    }
                    _ => false,
                }
            }
            Witness::SpanningSet { set, .. } => {
                coll.check_member_n(set)?;
                let rank = sc4_rank(coll);
                set.len() < rank
                    && outside(set)
                        .into_iter()
                        .all(|x| spans_unchecked(coll.sets(), set, x))
            }
            Witness::FailedExchange { x, y, element } => {
                member(x)?
                    && member(y)?
                    && y.contains(*element)
                    && !x.contains(*element)
                    && exchange_partner(coll, x, y, *element).is_none()
            }
        })
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::EmptyCollection => f.write_str("the collection is empty"),
            Witness::MixedCardinality { first, second } => {
                write!(f, "{first} and {second} differ in size")
            }
            Witness::IncomparableMaxima {
                ordering,
                first,
                second,
            } => write!(
                f,
                "under {ordering} the maximal members {first} and {second} are incomparable"
            ),
            Witness::EmptyCircuit => f.write_str("the empty set is a circuit"),
            Witness::NestedCircuits { smaller, larger } => {
                write!(f, "{smaller} is properly contained in {larger}")
            }
            Witness::FailedElimination {
                first,
                second,
                element,
            } => write!(f, "no circuit inside ({first} ∪ {second}) − {{{element}}}"),
            Witness::SpanningSet { set, rank } => write!(
                f,
                "{set} has size {} < {rank} and spans every element outside itself and its star",
                set.len()
            ),
            Witness::FailedExchange { x, y, element } => write!(
                f,
                "X = {x}, Y = {y}, i = {element}: no j ∈ X − Y makes X ∪ {{i}} − {{j}} a basis"
            ),
        }
    }
}

/// Outcome of one check. Fields are private so a failure always has a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    axiom: AxiomId,
    witness: Option<Witness>,
}

impl Verdict {
    pub fn pass(axiom: AxiomId) -> Self {
        Verdict {
            axiom,
            witness: None,
        }
    }

    pub fn fail(axiom: AxiomId, witness: Witness) -> Self {
        Verdict {
            axiom,
            witness: Some(witness),
        }
    }

    pub fn axiom(&self) -> AxiomId {
        self.axiom
    }

    pub fn status(&self) -> Status {
        if self.witness.is_some() {
            Status::Fail
        } else {
            Status::Pass
        }
    }

    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }

    pub fn witness(&self) -> Option<&Witness> {
        self.witness.as_ref()
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => write!(f, "{}: pass", self.axiom),
            Some(w) => write!(f, "{}: fail ({w})", self.axiom),
        }
    }
}

fn validate_bases(bases: &SetCollection) -> Option<Verdict> {
    let Some(first) = bases.sets().first() else {
        return Some(Verdict::fail(AxiomId::Equicard, Witness::EmptyCollection));
    };
    bases.iter().find(|s| s.len() != first.len()).map(|other| {
        Verdict::fail(
            AxiomId::Equicard,
            Witness::MixedCardinality {
                first: *first,
                second: *other,
            },
        )
    })
}

/// Maximality Property over all `2^n · n!` admissible orderings.
///
/// Reports the first failing ordering in enumeration order, with the first
/// two maximal members (enumeration order) as the incomparable pair.
pub fn check_bases(bases: &SetCollection) -> Result<Verdict> {
    let n = bases.n();
    if n > EXHAUSTIVE_LIMIT {
        return Err(Error::GuardExceeded {
            n,
            limit: EXHAUSTIVE_LIMIT,
        });
    }
    if let Some(v) = validate_bases(bases) {
        return Ok(v);
    }
    let sets = bases.in_enumeration_order();
    let mut orderings = enumerate_admissible_orderings(n);
    let first = orderings.next().expect("at least one ordering");
    let mut view = GaleView::new(&sets, &first);
    for ord in std::iter::once(first).chain(orderings) {
        view.reset(&sets, &ord);
        if view.greatest().is_some() {
            continue;
        }
        let maxima = view.maxima();
        debug_assert!(maxima.len() >= 2);
        return Ok(Verdict::fail(
            AxiomId::Max,
            Witness::IncomparableMaxima {
                first: sets[maxima[0]],
                second: sets[maxima[1]],
                ordering: ord,
            },
        ));
    }
    Ok(Verdict::pass(AxiomId::Max))
}

/// Per-axiom outcome of [`check_circuit_axioms`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircuitReport {
    pub sc1: Verdict,
    pub sc2: Verdict,
    pub sc3: Verdict,
    pub sc4: Verdict,
    /// Largest maximal independent set, the bound used by SC4.
    pub rank: usize,
}

impl CircuitReport {
    pub fn verdicts(&self) -> [&Verdict; 4] {
        [&self.sc1, &self.sc2, &self.sc3, &self.sc4]
    }

    pub fn passed(&self) -> bool {
        self.verdicts().iter().all(|v| v.passed())
    }

    pub fn first_failure(&self) -> Option<&Verdict> {
        self.verdicts().into_iter().find(|v| !v.passed())
    }
}

fn sc4_rank(circuits: &SetCollection) -> usize {
    maximal_independent(circuits.n(), circuits.sets())
        .iter()
        .map(AdmissibleSet::len)
        .max()
        .unwrap_or(0)
}

fn check_sc1(circuits: &SetCollection) -> Verdict {
    if circuits.iter().any(AdmissibleSet::is_empty) {
        Verdict::fail(AxiomId::Sc1, Witness::EmptyCircuit)
    } else {
        Verdict::pass(AxiomId::Sc1)
    }
}

fn check_sc2(circuits: &SetCollection) -> Verdict {
    for a in circuits {
        if let Some(b) = circuits.iter().find(|b| a.is_proper_subset(b)) {
            return Verdict::fail(
                AxiomId::Sc2,
                Witness::NestedCircuits {
                    smaller: *a,
                    larger: *b,
                },
            );
        }
    }
    Verdict::pass(AxiomId::Sc2)
}

fn check_sc3(circuits: &SetCollection) -> Verdict {
    let sets = circuits.sets();
    for (i, c1) in sets.iter().enumerate() {
        for c2 in &sets[i + 1..] {
            let Some(union) = c1.union(c2) else { continue };
            for x in c1.intersection(c2).elements() {
                let region = union.without(x);
                if !sets.iter().any(|c| c.is_subset(&region)) {
                    return Verdict::fail(
                        AxiomId::Sc3,
                        Witness::FailedElimination {
                            first: *c1,
                            second: *c2,
                            element: x,
                        },
                    );
                }
            }
        }
    }
    Verdict::pass(AxiomId::Sc3)
}

fn check_sc4(circuits: &SetCollection, rank: usize) -> Verdict {
    let n = circuits.n();
    for k in 0..rank.min(n + 1) {
        let candidates = enumerate_admissible_subsets(n, k).expect("k <= n");
        for p in candidates {
            let spans_everything = outside(&p)
                .into_iter()
                .all(|x| spans_unchecked(circuits.sets(), &p, x));
            if spans_everything {
                return Verdict::fail(AxiomId::Sc4, Witness::SpanningSet { set: p, rank });
            }
        }
    }
    Verdict::pass(AxiomId::Sc4)
}

/// SC1–SC4. SC4 compares against the largest maximal independent set.
pub fn check_circuit_axioms(circuits: &SetCollection) -> CircuitReport {
    let rank = sc4_rank(circuits);
    CircuitReport {
        sc1: check_sc1(circuits),
        sc2: check_sc2(circuits),
        sc3: check_sc3(circuits),
        sc4: check_sc4(circuits, rank),
        rank,
    }
}

fn exchange_partner(
    bases: &SetCollection,
    x: &AdmissibleSet,
    y: &AdmissibleSet,
    i: SignedElement,
) -> Option<SignedElement> {
    x.difference(y).alphabet_elements().find(|&j| {
        x.without(j)
            .with(i)
            .is_some_and(|candidate| bases.contains(&candidate))
    })
}

/// For all `X, Y` and `i ∈ Y − X`, some `j ∈ X − Y` has `X ∪ {i} − {j}` a member.
///
/// Searches `X`, `Y` and `i` in enumeration order.
pub fn check_symmetric_exchange(bases: &SetCollection) -> Verdict {
    if let Some(v) = validate_bases(bases) {
        return v;
    }
    let sets = bases.in_enumeration_order();
    for x in &sets {
        for y in &sets {
            for i in y.difference(x).alphabet_elements() {
                if exchange_partner(bases, x, y, i).is_none() {
                    return Verdict::fail(
                        AxiomId::Se,
                        Witness::FailedExchange {
                            x: *x,
                            y: *y,
                            element: i,
                        },
                    );
                }
            }
        }
    }
    Verdict::pass(AxiomId::Se)
}
