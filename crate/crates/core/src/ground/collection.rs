use std::fmt;

use super::set::AdmissibleSet;
use crate::error::{Error, Result};

/// What a [`SetCollection`] claims to hold. Checkers decide whether the claim is true.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Bases,
    Circuits,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Bases => "bases",
            Kind::Circuits => "circuits",
        })
    }
}

/// A deduplicated, canonically sorted family of admissible sets over one `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetCollection {
    n: usize,
    kind: Kind,
    sets: Vec<AdmissibleSet>,
}

impl SetCollection {
    pub fn new(n: usize, kind: Kind, mut sets: Vec<AdmissibleSet>) -> Result<Self> {
        AdmissibleSet::empty(n)?;
        if let Some(s) = sets.iter().find(|s| s.n() != n) {
            return Err(Error::GroundMismatch {
                left: s.n(),
                right: n,
            });
        }
        sets.sort_unstable();
        sets.dedup();
        Ok(SetCollection { n, kind, sets })
    }

    pub fn from_values<S, V>(n: usize, kind: Kind, sets: S) -> Result<Self>
    where
        S: IntoIterator<Item = V>,
        V: IntoIterator,
        V::Item: Into<i64>,
    {
        let sets = sets
            .into_iter()
            .map(|v| AdmissibleSet::from_values(n, v))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, kind, sets)
    }

    pub(crate) fn from_sorted(n: usize, kind: Kind, sets: Vec<AdmissibleSet>) -> Self {
        debug_assert!(sets.windows(2).all(|w| w[0] < w[1]));
        SetCollection { n, kind, sets }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn sets(&self) -> &[AdmissibleSet] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, AdmissibleSet> {
        self.sets.iter()
    }

    pub fn contains(&self, set: &AdmissibleSet) -> bool {
        self.sets.binary_search(set).is_ok()
    }

    /// Common cardinality of the members, or `None` if empty or mixed.
    pub fn cardinality(&self) -> Option<usize> {
        let k = self.sets.first()?.len();
        self.sets.iter().all(|s| s.len() == k).then_some(k)
    }

    pub fn max_cardinality(&self) -> Option<usize> {
        self.sets.iter().map(AdmissibleSet::len).max()
    }

    /// Members sorted in enumeration order rather than display order.
    pub(crate) fn in_enumeration_order(&self) -> Vec<AdmissibleSet> {
        let mut v = self.sets.clone();
        v.sort_by(AdmissibleSet::cmp_enumeration);
        v
    }

    pub(crate) fn expect_kind(&self, expected: Kind) -> Result<()> {
        if self.kind == expected {
            Ok(())
        } else {
            Err(Error::KindMismatch {
                expected,
                found: self.kind,
            })
        }
    }

    pub(crate) fn check_member_n(&self, set: &AdmissibleSet) -> Result<()> {
        if set.n() == self.n {
            Ok(())
        } else {
            Err(Error::GroundMismatch {
                left: set.n(),
                right: self.n,
            })
        }
    }
}

impl<'a> IntoIterator for &'a SetCollection {
    type Item = &'a AdmissibleSet;
    type IntoIter = std::slice::Iter<'a, AdmissibleSet>;

    fn into_iter(self) -> Self::IntoIter {
        self.sets.iter()
    }
}

impl fmt::Display for SetCollection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, s) in self.sets.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dedups_and_sorts() {
        let c = SetCollection::from_values(
            3,
            Kind::Bases,
            vec![vec![-2, 3], vec![1, 2], vec![3, -2], vec![1, 3]],
        )
        .unwrap();
        assert_eq!(c.len(), 3);
        assert_eq!(c.to_string(), "[{1, 2}, {1, 3}, {2*, 3}]");
        assert_eq!(c.cardinality(), Some(2));
    }

    #[test]
    fn rejects_inadmissible_and_foreign_members() {
        assert!(matches!(
            SetCollection::from_values(2, Kind::Bases, vec![vec![1, -1]]),
            Err(Error::Inadmissible { .. })
        ));
        let foreign = AdmissibleSet::from_values(3, [3]).unwrap();
        assert!(matches!(
            SetCollection::new(2, Kind::Circuits, vec![foreign]),
            Err(Error::GroundMismatch { .. })
        ));
    }

    #[test]
    fn mixed_cardinality() {
        let c = SetCollection::from_values(2, Kind::Bases, vec![vec![1], vec![1i64, 2]]).unwrap();
        assert_eq!(c.cardinality(), None);
        assert_eq!(c.max_cardinality(), Some(2));
    }
}
