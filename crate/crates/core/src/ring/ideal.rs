use std::collections::HashSet;
use std::ops::Deref;

use super::{ElementIndex, ElementMap, FiniteRing};
use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::subset::Subset;

/// A two-sided ideal: contains 0, closed under addition and under
/// multiplication by ring elements on both sides.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Ideal(Subset);

impl Ideal {
    /// Wraps `set` after checking the ideal axioms in `ring`.
    pub fn new(ring: &FiniteRing, set: Subset) -> Result<Ideal> {
        match ideal_defect(ring, &set) {
            None => Ok(Ideal(set)),
            Some(why) => Err(Error::invariant(format!("{} is not an ideal: {why}", set))),
        }
    }

    pub fn zero(ring: &FiniteRing) -> Ideal {
        Ideal(Subset::singleton(ring.order(), 0))
    }

    pub fn whole(ring: &FiniteRing) -> Ideal {
        Ideal(ring.all())
    }

    pub fn as_subset(&self) -> &Subset {
        &self.0
    }

    pub fn into_subset(self) -> Subset {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.len() == 1
    }

    pub fn is_proper(&self, ring: &FiniteRing) -> bool {
        !self.0.contains(ring.one())
    }
}

impl Deref for Ideal {
    type Target = Subset;

    fn deref(&self) -> &Subset {
        &self.0
    }
}

/// Describes the first ideal axiom `set` violates, if any.
pub fn ideal_defect(ring: &FiniteRing, set: &Subset) -> Option<String> {
    if !set.contains(0) {
        return Some("does not contain 0".into());
    }
    let members = set.to_vec();
    for &a in &members {
        for &b in &members {
            if !set.contains(ring.add(a, b)) {
                return Some(format!("{a} + {b} escapes"));
            }
        }
        for r in ring.elements() {
            if !set.contains(ring.mul(r, a)) {
                return Some(format!("{r}·{a} escapes"));
            }
            if !set.contains(ring.mul(a, r)) {
                return Some(format!("{a}·{r} escapes"));
            }
        }
    }
    None
}

/// Smallest additive subgroup containing `start` (assumed a subgroup) and `gens`.
pub fn additive_closure(
    ring: &FiniteRing,
    start: &Subset,
    gens: impl IntoIterator<Item = ElementIndex>,
) -> Subset {
    let mut set = start.clone();
    let mut members = set.to_vec();
    for g in gens {
        if set.contains(g) {
            continue;
        }
        // H + <g> is the union of the cosets H + kg
        let base = members.clone();
        let mut shift = g;
        while !set.contains(shift) {
            for &h in &base {
                let y = ring.add(h, shift);
                if set.insert(y) {
                    members.push(y);
                }
            }
            shift = ring.add(shift, g);
        }
    }
    set
}

/// The two-sided ideal `RxR` (additive span of all `a·x·b`).
pub fn principal_ideal(ring: &FiniteRing, x: ElementIndex) -> Subset {
    let n = ring.order();
    let mut products = Subset::empty(n);
    for a in ring.elements() {
        let ax = ring.mul(a, x);
        for y in ring.mul_row(ax) {
            products.insert(y);
        }
    }
    additive_closure(ring, &Subset::singleton(n, 0), products.iter())
}

pub fn ideal_sum(ring: &FiniteRing, a: &Ideal, b: &Ideal) -> Ideal {
    Ideal(additive_closure(ring, a, b.iter()))
}

/// Smallest ideal containing `gens`.
pub fn ideal_generated_by(ring: &FiniteRing, gens: &[ElementIndex]) -> Result<Ideal> {
    let mut acc = Subset::singleton(ring.order(), 0);
    for &g in gens {
        if g >= ring.order() {
            return Err(Error::InvalidExpression(format!(
                "generator {g} outside ring of order {}",
                ring.order()
            )));
        }
        if !acc.contains(g) {
            let p = principal_ideal(ring, g);
            acc = additive_closure(ring, &acc, p.iter());
        }
    }
    Ok(Ideal(acc))
}

/// All two-sided ideals, sorted by (size, bitmask).
///
/// Every ideal is a finite sum of principal ideals, so the lattice is the
/// closure of the principal ideals and `{0}` under adding one principal
/// ideal at a time.
pub fn enumerate_ideals(ring: &FiniteRing, bounds: &Bounds) -> Result<Vec<Ideal>> {
    let n = ring.order();
    let mut principals: Vec<Subset> = Vec::new();
    let mut seen_principal = HashSet::new();
    for x in ring.elements() {
        let p = principal_ideal(ring, x);
        if seen_principal.insert(p.clone()) {
            principals.push(p);
        }
    }
    let zero = Subset::singleton(n, 0);
    let mut known: HashSet<Subset> = HashSet::new();
    known.insert(zero.clone());
    let mut work = vec![zero];
    while let Some(current) = work.pop() {
        for p in &principals {
            if p.is_subset(&current) {
                continue;
            }
            let sum = additive_closure(ring, &current, p.iter());
            if !known.contains(&sum) {
                if known.len() >= bounds.max_ideals {
                    return Err(Error::IdealBoundExceeded {
                        bound: bounds.max_ideals,
                    });
                }
                known.insert(sum.clone());
                work.push(sum);
            }
        }
    }
    let mut out: Vec<Ideal> = known.into_iter().map(Ideal).collect();
    out.sort();
    Ok(out)
}

/// `R/I` with cosets numbered by their smallest member, plus the projection.
pub fn quotient_ring(ring: &FiniteRing, ideal: &Ideal) -> Result<(FiniteRing, ElementMap)> {
    if ideal.contains(ring.one()) {
        return Err(Error::ImproperIdeal);
    }
    let n = ring.order();
    let mut proj = vec![usize::MAX; n];
    let mut reps = Vec::new();
    let members = ideal.to_vec();
    for x in ring.elements() {
        if proj[x] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(x);
        for &i in &members {
            proj[ring.add(x, i)] = c;
        }
    }
    let m = reps.len();
    let mut add = Vec::with_capacity(m * m);
    let mut mul = Vec::with_capacity(m * m);
    for &a in &reps {
        for &b in &reps {
            add.push(proj[ring.add(a, b)] as u16);
            mul.push(proj[ring.mul(a, b)] as u16);
        }
    }
    let label = format!("{}/{}", ring.label(), ideal.braces());
    let q = FiniteRing::from_raw(label, m, add, mul, proj[ring.one()])?;
    if let Some(why) = ring.homomorphism_defect(&q, &proj) {
        return Err(Error::invariant(format!("quotient projection: {why}")));
    }
    Ok((q, proj))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{matrix_ring, zmod};

    fn sets(ideals: &[Ideal]) -> Vec<Vec<usize>> {
        ideals.iter().map(|i| i.to_vec()).collect()
    }

    #[test]
    fn ideals_of_z6_are_divisor_lattice() {
        let r = zmod(6).unwrap();
        let ideals = enumerate_ideals(&r, &Bounds::default()).unwrap();
        assert_eq!(
            sets(&ideals),
            vec![vec![0], vec![0, 3], vec![0, 2, 4], vec![0, 1, 2, 3, 4, 5]]
        );
    }

    #[test]
    fn field_has_two_ideals() {
        let r = zmod(7).unwrap();
        assert_eq!(enumerate_ideals(&r, &Bounds::default()).unwrap().len(), 2);
    }

    #[test]
    fn matrix_ring_over_f2_is_simple() {
        let r = matrix_ring(2, &zmod(2).unwrap()).unwrap();
        assert_eq!(enumerate_ideals(&r, &Bounds::default()).unwrap().len(), 2);
    }

    #[test]
    fn ideal_bound_is_enforced() {
        let r = zmod(12).unwrap();
        let b = Bounds {
            max_ideals: 3,
            ..Bounds::default()
        };
        assert_eq!(
            enumerate_ideals(&r, &b).unwrap_err(),
            Error::IdealBoundExceeded { bound: 3 }
        );
    }

    #[test]
    fn quotients_of_z6() {
        let r = zmod(6).unwrap();
        let i = Ideal::new(&r, Subset::from_indices(6, [0, 2, 4])).unwrap();
        let (q, proj) = quotient_ring(&r, &i).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(proj, vec![0, 1, 0, 1, 0, 1]);
        let j = Ideal::new(&r, Subset::from_indices(6, [0, 3])).unwrap();
        assert_eq!(quotient_ring(&r, &j).unwrap().0.order(), 3);
        let (same, id) = quotient_ring(&r, &Ideal::zero(&r)).unwrap();
        assert!(same.same_tables(&r));
        assert_eq!(id, (0..6).collect::<Vec<_>>());
    }

    #[test]
    fn improper_quotient_rejected() {
        let r = zmod(6).unwrap();
        assert_eq!(
            quotient_ring(&r, &Ideal::whole(&r)).unwrap_err(),
            Error::ImproperIdeal
        );
    }

    #[test]
    fn generated_ideal_in_z12() {
        let r = zmod(12).unwrap();
        let i = ideal_generated_by(&r, &[8, 6]).unwrap();
        assert_eq!(i.to_vec(), vec![0, 2, 4, 6, 8, 10]);
    }
}
