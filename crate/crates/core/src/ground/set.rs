use std::cmp::Ordering;
use std::fmt;

use super::element::SignedElement;
use crate::error::{Error, Result};
use crate::MAX_N;

const LOW: u64 = 0xffff_ffff;

/// A subset of `E±n` that never holds an element together with its star.
///
/// Positive elements live in bits `0..n`, starred ones in bits `32..32+n`,
/// so star is a half swap and inclusion is a mask test.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct AdmissibleSet {
    n: u8,
    mask: u64,
}

impl AdmissibleSet {
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_N {
            return Err(Error::GroundTooLarge { n, max: MAX_N });
        }
        Ok(AdmissibleSet {
            n: n as u8,
            mask: 0,
        })
    }

    /// Builds a set from signed integers; duplicates are merged.
    pub fn from_values<I>(n: usize, values: I) -> Result<Self>
    where
        I: IntoIterator,
        I::Item: Into<i64>,
    {
        let values: Vec<i64> = values.into_iter().map(Into::into).collect();
        let mut mask = 0u64;
        for &v in &values {
            mask |= SignedElement::new(v, n)?.bit();
        }
        let set = Self::empty(n)?.with_mask(mask);
        if !set.is_well_formed() {
            return Err(Error::Inadmissible { values });
        }
        Ok(set)
    }

    pub fn from_elements<I>(n: usize, elements: I) -> Result<Self>
    where
        I: IntoIterator<Item = SignedElement>,
    {
        Self::from_values(n, elements.into_iter().map(|e| e.value()))
    }

    pub(crate) fn from_masks(n: usize, positive: u32, negative: u32) -> Self {
        debug_assert!(positive & negative == 0);
        AdmissibleSet {
            n: n as u8,
            mask: positive as u64 | (negative as u64) << 32,
        }
    }

    fn with_mask(self, mask: u64) -> Self {
        AdmissibleSet { n: self.n, mask }
    }

    fn is_well_formed(&self) -> bool {
        (self.mask & LOW) & (self.mask >> 32) == 0
    }

    /// Every admissible subset of `E±n` (there are `3^n`), in no particular order.
    pub fn all(n: usize) -> impl Iterator<Item = AdmissibleSet> {
        assert!(n <= MAX_N);
        let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        (0..=full as u64).flat_map(move |positive| {
            let positive = positive as u32;
            let free = full & !positive;
            // submasks of `free`, including 0
            let mut next = Some(free);
            std::iter::from_fn(move || {
                let negative = next?;
                next = if negative == 0 {
                    None
                } else {
                    Some((negative - 1) & free)
                };
                Some(AdmissibleSet::from_masks(n, positive, negative))
            })
        })
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub(crate) fn positive_mask(&self) -> u32 {
        self.mask as u32
    }

    pub(crate) fn negative_mask(&self) -> u32 {
        (self.mask >> 32) as u32
    }

    /// Indices touched by the set, as a bitmask over `0..n`.
    pub(crate) fn support_mask(&self) -> u32 {
        self.positive_mask() | self.negative_mask()
    }

    pub fn contains(&self, e: SignedElement) -> bool {
        e.index() <= self.n() && self.mask & e.bit() != 0
    }

    /// True when `e` or `e*` is in the set.
    pub fn touches(&self, e: SignedElement) -> bool {
        self.contains(e) || self.contains(e.star())
    }

    pub fn is_subset(&self, other: &AdmissibleSet) -> bool {
        self.mask & !other.mask == 0
    }

    pub fn is_proper_subset(&self, other: &AdmissibleSet) -> bool {
        self.is_subset(other) && self.mask != other.mask
    }

    pub fn star(&self) -> AdmissibleSet {
        self.with_mask(self.mask >> 32 | (self.mask & LOW) << 32)
    }

    /// `self ∪ {e}`, or `None` when `e*` is already present.
    pub fn with(&self, e: SignedElement) -> Option<AdmissibleSet> {
        if e.index() > self.n() || self.contains(e.star()) {
            return None;
        }
        Some(self.with_mask(self.mask | e.bit()))
    }

    pub fn without(&self, e: SignedElement) -> AdmissibleSet {
        self.with_mask(self.mask & !e.bit())
    }

    /// `self ∪ other`, or `None` when the union is not admissible.
    pub fn union(&self, other: &AdmissibleSet) -> Option<AdmissibleSet> {
        let u = self.with_mask(self.mask | other.mask);
        u.is_well_formed().then_some(u)
    }

    pub fn intersection(&self, other: &AdmissibleSet) -> AdmissibleSet {
        self.with_mask(self.mask & other.mask)
    }

    pub fn difference(&self, other: &AdmissibleSet) -> AdmissibleSet {
        self.with_mask(self.mask & !other.mask)
    }

    /// Symmetric difference; admissible whenever the union is.
    pub fn symmetric_difference(&self, other: &AdmissibleSet) -> Option<AdmissibleSet> {
        let d = self.with_mask(self.mask ^ other.mask);
        d.is_well_formed().then_some(d)
    }

    /// Elements in display order: by index, `i` before `i*`.
    pub fn elements(&self) -> impl Iterator<Item = SignedElement> + '_ {
        (1..=self.n()).flat_map(move |i| {
            let p = SignedElement::from_raw(i as i32);
            let q = p.star();
            [p, q].into_iter().filter(move |e| self.contains(*e))
        })
    }

    /// Elements in enumeration order: `1 < … < n < 1* < … < n*`.
    pub fn alphabet_elements(&self) -> impl Iterator<Item = SignedElement> + '_ {
        let n = self.n();
        (0..2 * n)
            .map(move |r| SignedElement::from_alphabet_rank(r, n))
            .filter(move |e| self.contains(*e))
    }

    pub fn values(&self) -> Vec<i32> {
        self.elements().map(SignedElement::value).collect()
    }

    /// Lexicographic comparison of the elements listed in enumeration order.
    pub fn cmp_enumeration(&self, other: &AdmissibleSet) -> Ordering {
        let n = self.n();
        self.n.cmp(&other.n).then_with(|| {
            self.alphabet_elements()
                .map(|e| e.alphabet_rank(n))
                .cmp(other.alphabet_elements().map(|e| e.alphabet_rank(n)))
        })
    }
}

impl Ord for AdmissibleSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| {
            self.elements()
                .map(SignedElement::canonical_key)
                .cmp(other.elements().map(SignedElement::canonical_key))
        })
    }
}

impl PartialOrd for AdmissibleSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for AdmissibleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.elements().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for AdmissibleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.values())
    }
}

/// Whether the signed integers in `values` form an admissible subset of `E±n`.
pub fn is_admissible(n: usize, values: &[i64]) -> Result<bool> {
    match AdmissibleSet::from_values(n, values.iter().copied()) {
        Ok(_) => Ok(true),
        Err(Error::Inadmissible { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}

/// All admissible `k`-subsets of `E±n`, lexicographic over `1 < … < n < 1* < … < n*`.
pub fn enumerate_admissible_subsets(n: usize, k: usize) -> Result<Vec<AdmissibleSet>> {
    if n > MAX_N {
        return Err(Error::GroundTooLarge { n, max: MAX_N });
    }
    if k > n {
        return Err(Error::CardinalityTooLarge { n, k });
    }
    let mut out = Vec::new();
    let mut picks: Vec<usize> = (0..k).collect();
    loop {
        let mut support = 0u32;
        let mut mask = 0u64;
        let mut admissible = true;
        for &r in &picks {
            let e = SignedElement::from_alphabet_rank(r, n);
            let idx = 1u32 << (e.index() - 1);
            if support & idx != 0 {
                admissible = false;
                break;
            }
            support |= idx;
            mask |= e.bit();
        }
        if admissible {
            out.push(AdmissibleSet { n: n as u8, mask });
        }
        // next k-combination of 0..2n in lexicographic order
        let Some(i) = (0..k).rev().find(|&i| picks[i] < 2 * n - k + i) else {
            break;
        };
        picks[i] += 1;
        for j in i + 1..k {
            picks[j] = picks[j - 1] + 1;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, v: &[i64]) -> AdmissibleSet {
        AdmissibleSet::from_values(n, v.iter().copied()).unwrap()
    }

    #[test]
    fn star_examples() {
        assert_eq!(set(2, &[1, -2]).star(), set(2, &[-1, 2]));
        assert_eq!(set(2, &[]).star(), set(2, &[]));
        assert_eq!(set(3, &[1, 2, 3]).star(), set(3, &[-1, -2, -3]));
    }

    #[test]
    fn admissibility_examples() {
        assert_eq!(is_admissible(2, &[1, -1]), Ok(false));
        assert_eq!(is_admissible(3, &[1, 3, -2]), Ok(true));
        assert_eq!(is_admissible(1, &[]), Ok(true));
        assert!(matches!(
            is_admissible(2, &[3]),
            Err(Error::OutOfRange { .. })
        ));
        assert_eq!(is_admissible(2, &[0]), Err(Error::ZeroElement));
    }

    #[test]
    fn enumeration_examples() {
        let e21: Vec<_> = enumerate_admissible_subsets(2, 1)
            .unwrap()
            .iter()
            .map(AdmissibleSet::values)
            .collect();
        assert_eq!(e21, vec![vec![1], vec![2], vec![-1], vec![-2]]);
        let e22: Vec<_> = enumerate_admissible_subsets(2, 2)
            .unwrap()
            .iter()
            .map(AdmissibleSet::values)
            .collect();
        assert_eq!(
            e22,
            vec![vec![1, 2], vec![1, -2], vec![-1, 2], vec![-1, -2]]
        );
        assert_eq!(enumerate_admissible_subsets(3, 2).unwrap().len(), 12);
        assert!(matches!(
            enumerate_admissible_subsets(2, 3),
            Err(Error::CardinalityTooLarge { n: 2, k: 3 })
        ));
        assert_eq!(enumerate_admissible_subsets(0, 0).unwrap().len(), 1);
    }

    #[test]
    fn enumeration_is_sorted_in_alphabet_order() {
        let sets = enumerate_admissible_subsets(4, 2).unwrap();
        assert!(sets
            .windows(2)
            .all(|w| w[0].cmp_enumeration(&w[1]) == Ordering::Less));
    }

    #[test]
    fn all_has_three_to_the_n_members() {
        for n in 0..=5 {
            let mut sets: Vec<_> = AdmissibleSet::all(n).collect();
            assert_eq!(sets.len(), 3usize.pow(n as u32));
            sets.sort();
            sets.dedup();
            assert_eq!(sets.len(), 3usize.pow(n as u32));
        }
    }

    #[test]
    fn canonical_order_and_display() {
        let mut v = vec![
            set(2, &[-1]),
            set(2, &[1, -2]),
            set(2, &[1, 2]),
            set(2, &[1]),
        ];
        v.sort();
        assert_eq!(
            v,
            vec![
                set(2, &[1]),
                set(2, &[1, 2]),
                set(2, &[1, -2]),
                set(2, &[-1])
            ]
        );
        assert_eq!(set(3, &[3, -2]).to_string(), "{2*, 3}");
        assert_eq!(set(3, &[]).to_string(), "{}");
    }

    #[test]
    fn union_respects_admissibility() {
        assert!(set(2, &[1]).union(&set(2, &[-1, 2])).is_none());
        assert_eq!(set(2, &[1]).union(&set(2, &[2])), Some(set(2, &[1, 2])));
        assert!(set(2, &[1])
            .with(SignedElement::new(-1, 2).unwrap())
            .is_none());
    }
}
