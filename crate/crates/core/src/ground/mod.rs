//! The signed ground set `E±n`, admissible sets and orderings, and the
//! induced Gale order.

mod collection;
mod element;
mod ordering;
mod set;

pub use collection::{Kind, SetCollection};
pub use element::SignedElement;
pub use ordering::{
    enumerate_admissible_orderings, gale_compare, greatest_member, AdmissibleOrdering, Orderings,
};
pub use set::{enumerate_admissible_subsets, is_admissible, AdmissibleSet};

pub(crate) use ordering::GaleView;
