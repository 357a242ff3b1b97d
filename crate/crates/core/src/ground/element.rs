use std::fmt;

use crate::error::{Error, Result};
use crate::MAX_N;

/// One of the symbols `i` or `i*` of `E±n`, encoded as `i` or `−i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedElement(i32);

impl SignedElement {
    /// Validates `value` against the ground size `n`.
    pub fn new(value: i64, n: usize) -> Result<Self> {
        if value == 0 {
            return Err(Error::ZeroElement);
        }
        if value.unsigned_abs() as usize > n || n > MAX_N {
            return Err(Error::OutOfRange { value, n });
        }
        Ok(SignedElement(value as i32))
    }

    pub(crate) fn from_raw(value: i32) -> Self {
        debug_assert!(value != 0 && value.unsigned_abs() as usize <= MAX_N);
        SignedElement(value)
    }

    pub fn value(self) -> i32 {
        self.0
    }

    /// The index `i` in `[n]`, regardless of star.
    pub fn index(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    pub fn is_starred(self) -> bool {
        self.0 < 0
    }

    pub fn star(self) -> Self {
        SignedElement(-self.0)
    }

    pub(crate) fn bit(self) -> u64 {
        let shift = self.index() - 1 + if self.is_starred() { 32 } else { 0 };
        1u64 << shift
    }

    /// Rank in the enumeration alphabet `1 < 2 < … < n < 1* < … < n*`.
    pub(crate) fn alphabet_rank(self, n: usize) -> usize {
        if self.is_starred() {
            n + self.index() - 1
        } else {
            self.index() - 1
        }
    }

    pub(crate) fn from_alphabet_rank(rank: usize, n: usize) -> Self {
        if rank < n {
            SignedElement(rank as i32 + 1)
        } else {
            SignedElement(-((rank - n) as i32 + 1))
        }
    }

    /// Display order key: by index, unstarred first.
    pub(crate) fn canonical_key(self) -> (usize, bool) {
        (self.index(), self.is_starred())
    }
}

impl fmt::Display for SignedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_starred() {
            write!(f, "{}*", self.index())
        } else {
            write!(f, "{}", self.index())
        }
    }
}

impl fmt::Debug for SignedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_is_involution() {
        for v in [-3i64, -1, 1, 2] {
            let e = SignedElement::new(v, 3).unwrap();
            assert_eq!(e.star().star(), e);
            assert_ne!(e.star(), e);
        }
    }

    #[test]
    fn rejects_zero_and_out_of_range() {
        assert_eq!(SignedElement::new(0, 3), Err(Error::ZeroElement));
        assert!(matches!(
            SignedElement::new(-4, 3),
            Err(Error::OutOfRange { value: -4, n: 3 })
        ));
    }

    #[test]
    fn alphabet_rank_round_trips() {
        let n = 4;
        for rank in 0..2 * n {
            let e = SignedElement::from_alphabet_rank(rank, n);
            assert_eq!(e.alphabet_rank(n), rank);
        }
        assert_eq!(SignedElement::from_alphabet_rank(4, 4).value(), -1);
    }

    #[test]
    fn renders_star_notation() {
        assert_eq!(SignedElement::new(-2, 3).unwrap().to_string(), "2*");
        assert_eq!(SignedElement::new(3, 3).unwrap().to_string(), "3");
    }
}
