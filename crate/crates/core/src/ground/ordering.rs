use std::cmp::Ordering;
use std::fmt;

use super::element::SignedElement;
use super::set::AdmissibleSet;
use crate::error::{Error, Result};
use crate::MAX_N;

/// A linear order on `E±n` with `i < j ⇒ j* < i*`.
///
/// Only the lower half is stored; the full chain is the lower half followed
/// by the starred lower half in reverse.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AdmissibleOrdering {
    lower: Vec<SignedElement>,
    // 0-based chain position, indexed by alphabet rank
    position: Vec<u16>,
}

impl AdmissibleOrdering {
    pub fn new<I>(lower_half: I) -> Result<Self>
    where
        I: IntoIterator,
        I::Item: Into<i64>,
    {
        let values: Vec<i64> = lower_half.into_iter().map(Into::into).collect();
        let n = values.len();
        if n > MAX_N {
            return Err(Error::GroundTooLarge { n, max: MAX_N });
        }
        let mut seen = vec![false; n + 1];
        let mut lower = Vec::with_capacity(n);
        for &v in &values {
            let e = SignedElement::new(v, n).map_err(|_| Error::InvalidOrdering {
                values: values.clone(),
            })?;
            if std::mem::replace(&mut seen[e.index()], true) {
                return Err(Error::InvalidOrdering { values });
            }
            lower.push(e);
        }
        Ok(Self::from_lower(lower))
    }

    fn from_lower(lower: Vec<SignedElement>) -> Self {
        let n = lower.len();
        let mut position = vec![0u16; 2 * n];
        for (p, e) in lower.iter().enumerate() {
            position[e.alphabet_rank(n)] = p as u16;
            position[e.star().alphabet_rank(n)] = (2 * n - 1 - p) as u16;
        }
        AdmissibleOrdering { lower, position }
    }

    pub fn n(&self) -> usize {
        self.lower.len()
    }

    pub fn lower_half(&self) -> &[SignedElement] {
        &self.lower
    }

    pub fn full_chain(&self) -> Vec<SignedElement> {
        let mut chain = self.lower.clone();
        chain.extend(self.lower.iter().rev().map(|e| e.star()));
        chain
    }

    /// 1-based position of `e` in the full chain.
    pub fn position(&self, e: SignedElement) -> usize {
        self.position[e.alphabet_rank(self.n())] as usize + 1
    }

    /// Positions of the members of `set`, ascending.
    pub(crate) fn position_vector(&self, set: &AdmissibleSet, out: &mut Vec<u16>) {
        let n = self.n();
        out.clear();
        out.extend(set.elements().map(|e| self.position[e.alphabet_rank(n)]));
        out.sort_unstable();
    }

    /// Conjugate ordering: `x` sits where `x*` sat. Star maps the greatest
    /// member under `self` to the greatest member under the conjugate.
    pub fn star(&self) -> AdmissibleOrdering {
        Self::from_lower(self.lower.iter().map(|e| e.star()).collect())
    }
}

impl fmt::Display for AdmissibleOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.full_chain().iter().enumerate() {
            if i > 0 {
                f.write_str(" < ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for AdmissibleOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AdmissibleOrdering({self})")
    }
}

/// Iterator over all `2^n · n!` admissible orderings of `E±n`.
///
/// Lower halves come out lexicographically over `1 < … < n < 1* < … < n*`.
#[derive(Debug, Clone)]
pub struct Orderings {
    n: usize,
    ranks: Vec<usize>,
    used: Vec<bool>,
    done: bool,
}

impl Orderings {
    // On success the suffix after the bumped position is refilled with the
    // smallest free ranks, which gives the lexicographic successor.
    fn advance(&mut self) -> bool {
        let n = self.n;
        let used = &mut self.used;
        for i in (0..n).rev() {
            used[self.ranks[i] % n] = false;
            let Some(r) = (self.ranks[i] + 1..2 * n).find(|&r| !used[r % n]) else {
                continue;
            };
            self.ranks[i] = r;
            used[r % n] = true;
            for j in i + 1..n {
                let r = (0..2 * n).find(|&r| !used[r % n]).expect("free index");
                self.ranks[j] = r;
                used[r % n] = true;
            }
            return true;
        }
        false
    }
}

impl Iterator for Orderings {
    type Item = AdmissibleOrdering;

    fn next(&mut self) -> Option<AdmissibleOrdering> {
        if self.done {
            return None;
        }
        let n = self.n;
        let lower = self
            .ranks
            .iter()
            .map(|&r| SignedElement::from_alphabet_rank(r, n))
            .collect();
        self.done = n == 0 || !self.advance();
        Some(AdmissibleOrdering::from_lower(lower))
    }
}

pub fn enumerate_admissible_orderings(n: usize) -> Orderings {
    assert!(n <= MAX_N, "ground size {n} exceeds {MAX_N}");
    Orderings {
        n,
        ranks: (0..n).collect(),
        used: vec![true; n],
        done: false,
    }
}

/// The induced (Gale) order on equi-cardinal sets: `None` means incomparable.
pub fn gale_compare(
    a: &AdmissibleSet,
    b: &AdmissibleSet,
    ord: &AdmissibleOrdering,
) -> Result<Option<Ordering>> {
    if a.n() != ord.n() || b.n() != ord.n() {
        let other = if a.n() != ord.n() { a.n() } else { b.n() };
        return Err(Error::GroundMismatch {
            left: other,
            right: ord.n(),
        });
    }
    if a.len() != b.len() {
        return Err(Error::CardinalityMismatch {
            left: *a,
            right: *b,
        });
    }
    let (mut pa, mut pb) = (Vec::new(), Vec::new());
    ord.position_vector(a, &mut pa);
    ord.position_vector(b, &mut pb);
    Ok(compare_vectors(&pa, &pb))
}

pub(crate) fn compare_vectors(a: &[u16], b: &[u16]) -> Option<Ordering> {
    let mut le = true;
    let mut ge = true;
    for (x, y) in a.iter().zip(b) {
        le &= x <= y;
        ge &= x >= y;
    }
    match (le, ge) {
        (true, true) => Some(Ordering::Equal),
        (true, false) => Some(Ordering::Less),
        (false, true) => Some(Ordering::Greater),
        (false, false) => None,
    }
}

/// Position vectors of a collection under one ordering.
pub(crate) struct GaleView {
    width: usize,
    len: usize,
    vectors: Vec<u16>,
    join: Vec<u16>,
}

impl GaleView {
    /// `sets` must be non-empty and equi-cardinal.
    pub(crate) fn new(sets: &[AdmissibleSet], ord: &AdmissibleOrdering) -> Self {
        let width = sets[0].len();
        let mut view = GaleView {
            width,
            len: 0,
            vectors: Vec::with_capacity(width * sets.len()),
            join: Vec::with_capacity(width),
        };
        view.reset(sets, ord);
        view
    }

    pub(crate) fn reset(&mut self, sets: &[AdmissibleSet], ord: &AdmissibleOrdering) {
        let mut buf = Vec::with_capacity(self.width);
        self.len = sets.len();
        self.vectors.clear();
        self.join.clear();
        self.join.resize(self.width, 0);
        for s in sets {
            ord.position_vector(s, &mut buf);
            for (j, p) in self.join.iter_mut().zip(&buf) {
                *j = (*j).max(*p);
            }
            self.vectors.extend_from_slice(&buf);
        }
    }

    fn vector(&self, i: usize) -> &[u16] {
        &self.vectors[i * self.width..(i + 1) * self.width]
    }

    /// Index of the member equal to the componentwise join, if any.
    /// A greatest element exists iff the join is attained.
    pub(crate) fn greatest(&self) -> Option<usize> {
        (0..self.len).find(|&i| self.vector(i) == self.join.as_slice())
    }

    /// Indices of maximal members.
    pub(crate) fn maxima(&self) -> Vec<usize> {
        (0..self.len)
            .filter(|&i| {
                (0..self.len).all(|j| {
                    compare_vectors(self.vector(i), self.vector(j)) != Some(Ordering::Less)
                })
            })
            .collect()
    }
}

/// The greatest member of `coll` in the induced order, if there is one.
pub fn greatest_member<'a>(
    coll: &'a [AdmissibleSet],
    ord: &AdmissibleOrdering,
) -> Result<Option<&'a AdmissibleSet>> {
    let first = coll.first().ok_or(Error::EmptyCollection)?;
    for s in coll {
        if s.n() != ord.n() {
            return Err(Error::GroundMismatch {
                left: s.n(),
                right: ord.n(),
            });
        }
        if s.len() != first.len() {
            return Err(Error::CardinalityMismatch {
                left: *first,
                right: *s,
            });
        }
    }
    let view = GaleView::new(coll, ord);
    Ok(view.greatest().map(|i| &coll[i]))
}
