use thiserror::Error;

use crate::axioms::Verdict;
use crate::ground::{AdmissibleSet, Kind, SignedElement};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("0 is not an element of the signed ground set")]
    ZeroElement,

    #[error("element {value} is out of range for n = {n}")]
    OutOfRange { value: i64, n: usize },

    #[error("ground size {n} exceeds the supported maximum {max}")]
    GroundTooLarge { n: usize, max: usize },

    #[error("set {values:?} contains an element together with its star")]
    Inadmissible { values: Vec<i64> },

    #[error("no admissible {k}-subset exists for n = {n}")]
    CardinalityTooLarge { n: usize, k: usize },

    #[error("sets {left} and {right} have different cardinalities")]
    CardinalityMismatch {
        left: AdmissibleSet,
        right: AdmissibleSet,
    },

    #[error("collection is empty")]
    EmptyCollection,

    #[error("ground sizes differ: {left} vs {right}")]
    GroundMismatch { left: usize, right: usize },

    #[error("ordering lower half {values:?} must list each index 1..n exactly once")]
    InvalidOrdering { values: Vec<i64> },

    #[error("expected a collection of {expected}, found {found}")]
    KindMismatch { expected: Kind, found: Kind },

    #[error("{set} is not a member of the collection")]
    NotAMember { set: AdmissibleSet },

    #[error("{element} meets {set} or its star")]
    ElementMeetsSet {
        element: SignedElement,
        set: AdmissibleSet,
    },

    #[error("{element} already belongs to {set}")]
    ElementInSet {
        element: SignedElement,
        set: AdmissibleSet,
    },

    #[error("circuits must be distinct, both are {0}")]
    IdenticalCircuits(AdmissibleSet),

    #[error("{element} is not common to {left} and {right}")]
    NotCommon {
        element: SignedElement,
        left: AdmissibleSet,
        right: AdmissibleSet,
    },

    #[error("{element} is not in the symmetric difference of {left} and {right}")]
    NotInSymmetricDifference {
        element: SignedElement,
        left: AdmissibleSet,
        right: AdmissibleSet,
    },

    #[error("union of {left} and {right} is not admissible")]
    InadmissibleUnion {
        left: AdmissibleSet,
        right: AdmissibleSet,
    },

    #[error("SC3 violated: no circuit inside ({left} ∪ {right}) − {{{element}}}")]
    EliminationFailed {
        left: AdmissibleSet,
        right: AdmissibleSet,
        element: SignedElement,
    },

    #[error(
        "strong elimination failed: no circuit through {through} inside ({left} ∪ {right}) − {{{element}}}"
    )]
    StrongEliminationFailed {
        left: AdmissibleSet,
        right: AdmissibleSet,
        element: SignedElement,
        through: SignedElement,
    },

    #[error("exhaustive search refused for n = {n}; limit is {limit}")]
    GuardExceeded { n: usize, limit: usize },

    #[error("cannot sample {count} of the {available} admissible {k}-subsets")]
    SampleTooLarge {
        count: usize,
        available: usize,
        k: usize,
    },

    #[error("edge {edge} references unknown vertex {vertex:?}")]
    UnknownVertex { edge: usize, vertex: String },

    #[error("duplicate vertex label {0:?}")]
    DuplicateVertex(String),

    #[error("signing covers {found} edges, graph has {expected}")]
    SigningLength { expected: usize, found: usize },

    #[error("graph construction failed the {} check", .0.axiom())]
    Construction(Box<Verdict>),
}
