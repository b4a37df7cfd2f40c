//! Fixed-universe bitsets over the element indices of a ring.

use std::cmp::Ordering;
use std::fmt;

use crate::ring::ElementIndex;

/// A set of element indices drawn from `0..universe`.
///
/// Ordering is canonical: by cardinality first, then by the value of the
/// bitmask read as an unsigned integer (bit `i` has weight `2^i`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subset {
    universe: usize,
    words: Vec<u64>,
}

impl Subset {
    pub fn empty(universe: usize) -> Self {
        Subset {
            universe,
            words: vec![0; universe.div_ceil(64)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Subset::empty(universe);
        for (i, w) in s.words.iter_mut().enumerate() {
            let lo = i * 64;
            let hi = (lo + 64).min(universe);
            *w = if hi - lo == 64 {
                u64::MAX
            } else {
                (1u64 << (hi - lo)) - 1
            };
        }
        s
    }

    pub fn singleton(universe: usize, x: ElementIndex) -> Self {
        let mut s = Subset::empty(universe);
        s.insert(x);
        s
    }

    pub fn from_indices<I: IntoIterator<Item = ElementIndex>>(universe: usize, items: I) -> Self {
        let mut s = Subset::empty(universe);
        for x in items {
            s.insert(x);
        }
        s
    }

    pub fn from_predicate(universe: usize, mut pred: impl FnMut(ElementIndex) -> bool) -> Self {
        let mut s = Subset::empty(universe);
        for x in 0..universe {
            if pred(x) {
                s.insert(x);
            }
        }
        s
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn contains(&self, x: ElementIndex) -> bool {
        x < self.universe && self.words[x >> 6] >> (x & 63) & 1 == 1
    }

    /// Inserts `x`; returns true if it was not already present.
    #[inline]
    pub fn insert(&mut self, x: ElementIndex) -> bool {
        assert!(x < self.universe, "element {x} outside universe {}", self.universe);
        let w = &mut self.words[x >> 6];
        let bit = 1u64 << (x & 63);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, x: ElementIndex) {
        if x < self.universe {
            self.words[x >> 6] &= !(1u64 << (x & 63));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<ElementIndex> {
        self.iter().next()
    }

    pub fn is_subset(&self, other: &Subset) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &Subset) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn union(&self, other: &Subset) -> Subset {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Subset) -> Subset {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> Subset {
        Subset::full(self.universe).difference(self)
    }

    pub fn union_with(&mut self, other: &Subset) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &Subset) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    fn zip_with(&self, other: &Subset, f: impl Fn(u64, u64) -> u64) -> Subset {
        debug_assert_eq!(self.universe, other.universe);
        Subset {
            universe: self.universe,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    /// Members in ascending order.
    pub fn to_vec(&self) -> Vec<ElementIndex> {
        self.iter().collect()
    }

    /// Renders as a sorted brace list, e.g. `{1,3,5}`.
    pub fn braces(&self) -> String {
        let items: Vec<String> = self.iter().map(|x| x.to_string()).collect();
        format!("{{{}}}", items.join(","))
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            for (a, b) in self.words.iter().rev().zip(other.words.iter().rev()) {
                match a.cmp(b) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            self.universe.cmp(&other.universe)
        })
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.braces())
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.braces())
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = ElementIndex;

    fn next(&mut self) -> Option<ElementIndex> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * 64 + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

impl<'a> IntoIterator for &'a Subset {
    type Item = ElementIndex;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_and_complement() {
        for n in [1, 5, 63, 64, 65, 130] {
            let f = Subset::full(n);
            assert_eq!(f.len(), n);
            assert!(f.complement().is_empty());
        }
    }

    #[test]
    fn canonical_order_is_size_then_mask() {
        let a = Subset::from_indices(8, [0, 3]);
        let b = Subset::from_indices(8, [1, 2]);
        let c = Subset::from_indices(8, [7]);
        // {7} is smallest by size; {0,3} = 9 > {1,2} = 6
        let mut v = vec![a.clone(), b.clone(), c.clone()];
        v.sort();
        assert_eq!(v, vec![c, b, a]);
    }

    #[test]
    fn braces_render_sorted() {
        let s = Subset::from_indices(10, [5, 1, 3]);
        assert_eq!(s.braces(), "{1,3,5}");
        assert_eq!(Subset::empty(3).braces(), "{}");
    }

    #[test]
    fn iter_crosses_word_boundary() {
        let s = Subset::from_indices(200, [0, 63, 64, 127, 199]);
        assert_eq!(s.to_vec(), vec![0, 63, 64, 127, 199]);
    }
}
