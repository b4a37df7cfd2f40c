//! Finite unital rings given by addition and multiplication tables.

mod construct;
mod ideal;
mod structure;

use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::subset::Subset;

pub use construct::{construct, matrix_ring, product_ring, triangular_ring, zmod, RingExpr, TableSpec};
pub(crate) use construct::decode_mixed;
pub use ideal::{
    additive_closure, enumerate_ideals, ideal_defect, ideal_generated_by, ideal_sum,
    principal_ideal, quotient_ring, Ideal,
};
pub use structure::{
    central_idempotent_decomposition, central_idempotents, corner_ring, is_local,
    jacobson_radical, left_regular_elements, nil_radical, nilpotent_elements,
    right_regular_elements, unit_inverses, units, Decomposition,
};

/// Index of an element inside its ring; `0` is always the additive identity.
pub type ElementIndex = usize;

/// Map from the elements of one ring to the elements of another.
pub type ElementMap = Vec<ElementIndex>;

/// Tables are stored as `u16`, which caps the order of any ring.
pub const MAX_SUPPORTED_ORDER: usize = 1 << 16;

/// Rings up to this order get an exhaustive triple check at construction.
const EXHAUSTIVE_AXIOM_ORDER: usize = 64;
const RANDOM_AXIOM_TRIPLES: usize = 100_000;

/// A finite ring with identity, stored as dense operation tables.
///
/// Values are immutable once built and always satisfy the ring axioms.
#[derive(Clone)]
pub struct FiniteRing {
    order: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    one: ElementIndex,
    label: String,
    factors: Option<Arc<Vec<FiniteRing>>>,
}

impl FiniteRing {
    /// Builds a ring from row-major tables and validates every axiom.
    pub fn from_tables(
        label: impl Into<String>,
        order: usize,
        add: Vec<ElementIndex>,
        mul: Vec<ElementIndex>,
        one: ElementIndex,
    ) -> Result<FiniteRing> {
        if order < 2 {
            return Err(invalid(format!("order {order} < 2 (the zero ring is rejected)"), vec![]));
        }
        if order > MAX_SUPPORTED_ORDER {
            return Err(Error::OrderBoundExceeded {
                order,
                bound: MAX_SUPPORTED_ORDER,
            });
        }
        if add.len() != order * order || mul.len() != order * order {
            return Err(invalid("table size is not order × order", vec![]));
        }
        if let Some(pos) = add.iter().chain(&mul).position(|&x| x >= order) {
            let pos = pos % (order * order);
            return Err(invalid(
                "table entry out of range",
                vec![pos / order, pos % order],
            ));
        }
        let ring = FiniteRing {
            order,
            add: add.into_iter().map(|x| x as u16).collect(),
            mul: mul.into_iter().map(|x| x as u16).collect(),
            neg: Vec::new(),
            one,
            label: label.into(),
            factors: None,
        };
        ring.validate()
    }

    pub(crate) fn from_raw(
        label: String,
        order: usize,
        add: Vec<u16>,
        mul: Vec<u16>,
        one: ElementIndex,
    ) -> Result<FiniteRing> {
        FiniteRing {
            order,
            add,
            mul,
            neg: Vec::new(),
            one,
            label,
            factors: None,
        }
        .validate()
    }

    fn validate(mut self) -> Result<FiniteRing> {
        let n = self.order;
        if self.one >= n {
            return Err(invalid("identity index out of range", vec![self.one]));
        }
        if self.one == 0 {
            return Err(invalid("zero equals one", vec![0]));
        }
        for x in 0..n {
            if self.add(0, x) != x || self.add(x, 0) != x {
                return Err(invalid("0 is not an additive identity", vec![x]));
            }
            if self.mul(self.one, x) != x || self.mul(x, self.one) != x {
                return Err(invalid("one is not a multiplicative identity", vec![x]));
            }
        }
        let mut neg = vec![u16::MAX; n];
        for (x, nx) in neg.iter_mut().enumerate() {
            for y in 0..n {
                if self.add(x, y) != self.add(y, x) {
                    return Err(invalid("addition is not commutative", vec![x, y]));
                }
                if self.add(x, y) == 0 {
                    *nx = y as u16;
                }
            }
            if *nx == u16::MAX {
                return Err(invalid("element has no additive inverse", vec![x]));
            }
        }
        self.neg = neg;
        if n <= EXHAUSTIVE_AXIOM_ORDER {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        self.check_triple(a, b, c)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0f0e);
            for _ in 0..RANDOM_AXIOM_TRIPLES {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                self.check_triple(a, b, c)?;
            }
        }
        Ok(self)
    }

    fn check_triple(&self, a: usize, b: usize, c: usize) -> Result<()> {
        let w = || vec![a, b, c];
        if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
            return Err(invalid("addition is not associative", w()));
        }
        if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
            return Err(invalid("multiplication is not associative", w()));
        }
        if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
            return Err(invalid("left distributivity fails", w()));
        }
        if self.mul(self.add(a, b), c) != self.add(self.mul(a, c), self.mul(b, c)) {
            return Err(invalid("right distributivity fails", w()));
        }
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn zero(&self) -> ElementIndex {
        0
    }

    #[inline]
    pub fn one(&self) -> ElementIndex {
        self.one
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    #[inline]
    pub fn add(&self, a: ElementIndex, b: ElementIndex) -> ElementIndex {
        self.add[a * self.order + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: ElementIndex, b: ElementIndex) -> ElementIndex {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: ElementIndex) -> ElementIndex {
        self.neg[a] as usize
    }

    #[inline]
    pub fn sub(&self, a: ElementIndex, b: ElementIndex) -> ElementIndex {
        self.add(a, self.neg(b))
    }

    pub fn pow(&self, a: ElementIndex, k: usize) -> ElementIndex {
        (0..k).fold(self.one, |acc, _| self.mul(acc, a))
    }

    pub fn elements(&self) -> std::ops::Range<ElementIndex> {
        0..self.order
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Row `a` of the addition table.
    pub fn add_row(&self, a: ElementIndex) -> impl Iterator<Item = ElementIndex> + '_ {
        self.add[a * self.order..(a + 1) * self.order].iter().map(|&x| x as usize)
    }

    /// Row `a` of the multiplication table.
    pub fn mul_row(&self, a: ElementIndex) -> impl Iterator<Item = ElementIndex> + '_ {
        self.mul[a * self.order..(a + 1) * self.order].iter().map(|&x| x as usize)
    }

    /// Set of all elements.
    pub fn all(&self) -> Subset {
        Subset::full(self.order)
    }

    /// Direct factors, when this ring was built as an explicit product.
    pub fn product_factors(&self) -> Option<&[FiniteRing]> {
        self.factors.as_deref().map(|v| v.as_slice())
    }

    pub(crate) fn set_product_factors(&mut self, factors: Vec<FiniteRing>) {
        self.factors = Some(Arc::new(factors));
    }

    /// Same element set, same tables, same identity.
    pub fn same_tables(&self, other: &FiniteRing) -> bool {
        self.order == other.order
            && self.one == other.one
            && self.add == other.add
            && self.mul == other.mul
    }

    /// Checks that `map` is a unital ring homomorphism `self → target`.
    pub fn homomorphism_defect(
        &self,
        target: &FiniteRing,
        map: &[ElementIndex],
    ) -> Option<String> {
        if map.len() != self.order {
            return Some(format!("map has {} entries for order {}", map.len(), self.order));
        }
        if let Some(x) = map.iter().position(|&y| y >= target.order) {
            return Some(format!("image of {x} out of range"));
        }
        if map[self.one] != target.one {
            return Some("identity not preserved".into());
        }
        for x in 0..self.order {
            for y in 0..self.order {
                if map[self.add(x, y)] != target.add(map[x], map[y]) {
                    return Some(format!("not additive at ({x},{y})"));
                }
                if map[self.mul(x, y)] != target.mul(map[x], map[y]) {
                    return Some(format!("not multiplicative at ({x},{y})"));
                }
            }
        }
        None
    }
}

impl PartialEq for FiniteRing {
    fn eq(&self, other: &Self) -> bool {
        self.same_tables(other)
    }
}

impl Eq for FiniteRing {}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("label", &self.label)
            .field("order", &self.order)
            .field("one", &self.one)
            .finish()
    }
}

fn invalid(reason: impl Into<String>, witness: Vec<ElementIndex>) -> Error {
    Error::InvalidTables {
        reason: reason.into(),
        witness,
    }
}
