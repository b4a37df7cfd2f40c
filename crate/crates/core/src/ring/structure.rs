//! Element classes, radicals and the central idempotent decomposition.

use super::construct::encode_mixed;
use super::{
    additive_closure, principal_ideal, product_ring, ElementIndex, ElementMap, FiniteRing, Ideal,
};
use crate::error::{Error, Result};
use crate::subset::Subset;

/// Two-sided inverses: `inv[u] = Some(v)` iff `uv = vu = 1`.
pub fn unit_inverses(ring: &FiniteRing) -> Vec<Option<ElementIndex>> {
    let one = ring.one();
    ring.elements()
        .map(|u| {
            ring.mul_row(u)
                .position(|p| p == one)
                .filter(|&v| ring.mul(v, u) == one)
        })
        .collect()
}

/// The group of units `R*`.
pub fn units(ring: &FiniteRing) -> Subset {
    let inv = unit_inverses(ring);
    Subset::from_predicate(ring.order(), |x| inv[x].is_some())
}

/// Elements `c` with `sc = 0 ⇒ s = 0` (no nonzero left annihilator).
pub fn right_regular_elements(ring: &FiniteRing) -> Subset {
    Subset::from_predicate(ring.order(), |c| {
        ring.elements().all(|s| s == 0 || ring.mul(s, c) != 0)
    })
}

/// Elements `c` with `cs = 0 ⇒ s = 0` (injective left multiplication).
pub fn left_regular_elements(ring: &FiniteRing) -> Subset {
    Subset::from_predicate(ring.order(), |c| {
        ring.elements().all(|s| s == 0 || ring.mul(c, s) != 0)
    })
}

/// `Nil(R)`: elements with `r^k = 0` for some `k ≤ |R|`.
pub fn nilpotent_elements(ring: &FiniteRing) -> Subset {
    Subset::from_predicate(ring.order(), |r| {
        let mut p = r;
        for _ in 0..ring.order() {
            if p == 0 {
                return true;
            }
            p = ring.mul(p, r);
        }
        p == 0
    })
}

/// `rad(R) = { r : 1 − xr is a unit for every x }`.
pub fn jacobson_radical(ring: &FiniteRing) -> Result<Ideal> {
    let u = units(ring);
    let one = ring.one();
    let set = Subset::from_predicate(ring.order(), |r| {
        ring.elements().all(|x| u.contains(ring.sub(one, ring.mul(x, r))))
    });
    Ideal::new(ring, set)
}

/// The nil radical: the largest nil two-sided ideal.
///
/// Built as the ideal generated by every `x` whose principal ideal is nil.
pub fn nil_radical(ring: &FiniteRing) -> Result<Ideal> {
    let nil = nilpotent_elements(ring);
    let mut acc = Subset::singleton(ring.order(), 0);
    for x in nil.iter() {
        if acc.contains(x) {
            continue;
        }
        let p = principal_ideal(ring, x);
        if p.is_subset(&nil) {
            acc = additive_closure(ring, &acc, p.iter());
        }
    }
    if !acc.is_subset(&nil) {
        return Err(Error::invariant("nil radical is not nil"));
    }
    Ideal::new(ring, acc)
}

/// True iff the non-units form an ideal.
pub fn is_local(ring: &FiniteRing) -> bool {
    let non_units = units(ring).complement();
    super::ideal_defect(ring, &non_units).is_none()
}

/// Idempotents commuting with every element, ascending.
pub fn central_idempotents(ring: &FiniteRing) -> Vec<ElementIndex> {
    ring.elements()
        .filter(|&e| ring.mul(e, e) == e)
        .filter(|&e| ring.elements().all(|x| ring.mul(e, x) == ring.mul(x, e)))
        .collect()
}

/// Corner ring `eRe` for a central idempotent `e`, with its elements listed
/// in ascending order of their index in `ring` (so `0` stays first).
pub fn corner_ring(ring: &FiniteRing, e: ElementIndex) -> Result<(FiniteRing, ElementMap)> {
    let mut members = Subset::empty(ring.order());
    for r in ring.elements() {
        members.insert(ring.mul(ring.mul(e, r), e));
    }
    let elems = members.to_vec();
    let mut pos = vec![usize::MAX; ring.order()];
    for (i, &x) in elems.iter().enumerate() {
        pos[x] = i;
    }
    let m = elems.len();
    let mut add = Vec::with_capacity(m * m);
    let mut mul = Vec::with_capacity(m * m);
    for &a in &elems {
        for &b in &elems {
            add.push(pos[ring.add(a, b)] as u16);
            mul.push(pos[ring.mul(a, b)] as u16);
        }
    }
    let label = format!("{}[e={e}]", ring.label());
    let corner = FiniteRing::from_raw(label, m, add, mul, pos[e])?;
    Ok((corner, elems))
}

/// `R = e₁R × … × e_sR` for the primitive central idempotents `e_i`.
#[derive(Debug, Clone)]
pub struct Decomposition {
    /// Primitive central idempotents, ascending.
    pub idempotents: Vec<ElementIndex>,
    /// Corner rings `e_iRe_i`, in the same order.
    pub factors: Vec<FiniteRing>,
    /// `embeddings[i][j]` is the element of `R` that is element `j` of factor `i`.
    pub embeddings: Vec<ElementMap>,
}

impl Decomposition {
    pub fn is_indecomposable(&self) -> bool {
        self.idempotents.len() == 1
    }

    /// Coordinates `r ↦ (position of e_i r in factor i)`.
    pub fn coordinates(&self, ring: &FiniteRing, r: ElementIndex) -> Vec<usize> {
        self.idempotents
            .iter()
            .zip(&self.embeddings)
            .map(|(&e, emb)| {
                let y = ring.mul(e, r);
                emb.binary_search(&y).expect("e·r lies in eR")
            })
            .collect()
    }
}

/// The unique complete set of primitive central idempotents and the
/// corresponding corner rings.
///
/// Splits greedily: starting from `[1]`, each idempotent `e` is replaced by
/// `f, e − f` for the least-index central idempotent `f ∉ {0, e}` below it,
/// until nothing splits.
pub fn central_idempotent_decomposition(ring: &FiniteRing) -> Result<Decomposition> {
    let central = central_idempotents(ring);
    let mut done = Vec::new();
    let mut pending = vec![ring.one()];
    while let Some(e) = pending.pop() {
        let below = central
            .iter()
            .copied()
            .find(|&f| f != 0 && f != e && ring.mul(f, e) == f);
        match below {
            Some(f) => {
                pending.push(f);
                pending.push(ring.sub(e, f));
            }
            None => done.push(e),
        }
    }
    done.sort_unstable();
    let mut factors = Vec::with_capacity(done.len());
    let mut embeddings = Vec::with_capacity(done.len());
    for &e in &done {
        let (c, emb) = corner_ring(ring, e)?;
        factors.push(c);
        embeddings.push(emb);
    }
    let d = Decomposition {
        idempotents: done,
        factors,
        embeddings,
    };
    if let Some(why) = decomposition_defect(ring, &d) {
        return Err(Error::invariant(format!("central decomposition: {why}")));
    }
    Ok(d)
}

/// Verifies orthogonality, completeness, centrality and that
/// `r ↦ (e₁r, …, e_sr)` is a ring isomorphism onto the product of factors.
fn decomposition_defect(ring: &FiniteRing, d: &Decomposition) -> Option<String> {
    let sum = d.idempotents.iter().fold(0, |acc, &e| ring.add(acc, e));
    if sum != ring.one() {
        return Some("idempotents do not sum to 1".into());
    }
    for (i, &a) in d.idempotents.iter().enumerate() {
        if ring.mul(a, a) != a {
            return Some(format!("{a} is not idempotent"));
        }
        if ring.elements().any(|x| ring.mul(a, x) != ring.mul(x, a)) {
            return Some(format!("{a} is not central"));
        }
        for &b in &d.idempotents[i + 1..] {
            if ring.mul(a, b) != 0 {
                return Some(format!("{a}·{b} ≠ 0"));
            }
        }
    }
    let total: usize = d.factors.iter().map(|f| f.order()).product();
    if total != ring.order() {
        return Some(format!("factor orders multiply to {total}"));
    }
    if d.factors.len() == 1 {
        return None;
    }
    let (prod, _) = match product_ring(&d.factors) {
        Ok(p) => p,
        Err(e) => return Some(e.to_string()),
    };
    let orders: Vec<usize> = d.factors.iter().map(|f| f.order()).collect();
    let map: ElementMap = ring
        .elements()
        .map(|r| encode_mixed(&d.coordinates(ring, r), &orders))
        .collect();
    let mut hit = Subset::empty(prod.order());
    for &y in &map {
        hit.insert(y);
    }
    if hit.len() != ring.order() {
        return Some("coordinate map is not bijective".into());
    }
    ring.homomorphism_defect(&prod, &map)
}
