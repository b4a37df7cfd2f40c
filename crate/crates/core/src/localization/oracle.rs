//! Brute-force cross-checks: every left denominator set of a small ring,
//! and `S⁻¹R` rebuilt from fractions `s⁻¹r`.

use std::collections::{HashSet, VecDeque};

use super::{denominator_violation, localize, LocView};
use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::ring::{unit_inverses, ElementIndex, FiniteRing};
use crate::subset::Subset;

/// All left denominator sets of `ring`, sorted canonically.
///
/// Walks the multiplicatively closed sets avoiding 0, starting from `{1}`
/// and adjoining one element at a time; any closure that absorbs 0 is
/// pruned since every larger closure would absorb it too.
pub fn exhaustive_denominator_sets(ring: &FiniteRing, bounds: &Bounds) -> Result<Vec<Subset>> {
    if ring.order() > bounds.oracle_max_order {
        return Err(Error::OracleBoundExceeded {
            size: ring.order(),
            bound: bounds.oracle_max_order,
        });
    }
    let n = ring.order();
    let start = Subset::singleton(n, ring.one());
    let mut seen: HashSet<Subset> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    let mut out = Vec::new();
    while let Some(set) = queue.pop_front() {
        for x in ring.elements() {
            if x == 0 || set.contains(x) {
                continue;
            }
            if let Some(next) = close_with(ring, &set, x) {
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        if denominator_violation(ring, &set)?.is_none() {
            out.push(set);
        }
    }
    out.sort();
    Ok(out)
}

/// Multiplicative closure of `set ∪ {x}` for a closed `set`, or `None` if it
/// contains 0.
fn close_with(ring: &FiniteRing, set: &Subset, x: ElementIndex) -> Option<Subset> {
    let mut out = set.clone();
    out.insert(x);
    let mut members = out.to_vec();
    let mut i = 0;
    while i < members.len() {
        let a = members[i];
        let mut j = 0;
        while j < members.len() {
            let b = members[j];
            for p in [ring.mul(a, b), ring.mul(b, a)] {
                if out.insert(p) {
                    if p == 0 {
                        return None;
                    }
                    members.push(p);
                }
            }
            j += 1;
        }
        i += 1;
    }
    Some(out)
}

/// `S⁻¹R` built from pairs `(s, r)`, read as `s⁻¹r`.
#[derive(Debug, Clone)]
pub struct FractionRing {
    pub ring: FiniteRing,
    /// The pairs, `(s, r)` with `s ∈ S`, in `S`-major order.
    pub pairs: Vec<(ElementIndex, ElementIndex)>,
    /// Class index of each pair.
    pub class_of: Vec<usize>,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.0[root] != root {
            root = self.0[root];
        }
        let mut cur = x;
        while self.0[cur] != root {
            let next = self.0[cur];
            self.0[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Builds `S⁻¹R` from fractions without consulting `ass(S)`.
///
/// `(s, r) ~ (s', r')` iff some `(cs, cr) = (c's', c'r')` with `cs ∈ S`.
/// Sums use a common left multiple of the denominators, products the left
/// Ore condition `t r₁ = r' s₂`.
pub fn build_fraction_ring(
    ring: &FiniteRing,
    set: &Subset,
    bounds: &Bounds,
) -> Result<FractionRing> {
    if let Some(w) = denominator_violation(ring, set)? {
        return Err(Error::NotDenominator(w.to_string()));
    }
    let n = ring.order();
    let size = set.len() * n;
    if size > bounds.oracle_max_pairs {
        return Err(Error::OracleBoundExceeded {
            size,
            bound: bounds.oracle_max_pairs,
        });
    }
    let denoms = set.to_vec();
    let mut pos_in_s = vec![usize::MAX; n];
    for (i, &s) in denoms.iter().enumerate() {
        pos_in_s[s] = i;
    }
    let pair_index = |s: ElementIndex, r: ElementIndex| pos_in_s[s] * n + r;
    let pairs: Vec<(usize, usize)> = denoms
        .iter()
        .flat_map(|&s| ring.elements().map(move |r| (s, r)))
        .collect();

    // descendants (cs, cr) with cs ∈ S
    let descendants: Vec<Subset> = pairs
        .iter()
        .map(|&(s, r)| {
            Subset::from_indices(
                size,
                ring.elements()
                    .filter(|&c| set.contains(ring.mul(c, s)))
                    .map(|c| pair_index(ring.mul(c, s), ring.mul(c, r))),
            )
        })
        .collect();
    let mut uf = UnionFind((0..size).collect());
    for (p, desc) in descendants.iter().enumerate() {
        for q in desc {
            uf.union(p, q);
        }
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut root_class = vec![usize::MAX; size];
    let mut class_of = vec![0; size];
    for (p, slot) in class_of.iter_mut().enumerate() {
        let root = uf.find(p);
        if root_class[root] == usize::MAX {
            root_class[root] = classes.len();
            classes.push(Vec::new());
        }
        *slot = root_class[root];
        classes[root_class[root]].push(p);
    }
    // ~ must already be transitive: members of a class share a descendant
    for members in &classes {
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                if !descendants[a].intersects(&descendants[b]) {
                    let (sa, ra) = pairs[a];
                    let (sb, rb) = pairs[b];
                    return Err(Error::invariant(format!(
                        "fraction relation not transitive: ({sa},{ra}) and ({sb},{rb})"
                    )));
                }
            }
        }
    }

    // renumber classes by their least (r, s), so the class of 0 comes first
    let mut keyed: Vec<((usize, usize), usize)> = classes
        .iter()
        .enumerate()
        .map(|(c, members)| {
            let key = members
                .iter()
                .map(|&p| (pairs[p].1, pairs[p].0))
                .min()
                .expect("classes are non-empty");
            (key, c)
        })
        .collect();
    keyed.sort();
    let mut renumber = vec![0; classes.len()];
    for (new, &(_, old)) in keyed.iter().enumerate() {
        renumber[old] = new;
    }
    for c in class_of.iter_mut() {
        *c = renumber[*c];
    }
    let reps: Vec<(usize, usize)> = keyed.iter().map(|&((r, s), _)| (s, r)).collect();
    let m = reps.len();

    // least r' with r'·s = v, per s ∈ S
    let mut left_factor = vec![usize::MAX; denoms.len() * n];
    for (i, &s) in denoms.iter().enumerate() {
        for x in ring.elements().rev() {
            left_factor[i * n + ring.mul(x, s)] = x;
        }
    }
    // least t ∈ S and some r' with t·a = r'·s
    let ore = |a: ElementIndex, s: ElementIndex| -> Result<(usize, usize)> {
        for &t in &denoms {
            let r2 = left_factor[pos_in_s[s] * n + ring.mul(t, a)];
            if r2 != usize::MAX {
                return Ok((t, r2));
            }
        }
        Err(Error::NotOre { r: a, s })
    };

    let class = |s: usize, r: usize| class_of[pair_index(s, r)];
    let mut add = Vec::with_capacity(m * m);
    let mut mul = Vec::with_capacity(m * m);
    for &(s1, r1) in &reps {
        for &(s2, r2) in &reps {
            // t s1 = r' s2 ∈ S
            let (t, rp) = ore(s1, s2)?;
            let d = ring.mul(t, s1);
            add.push(class(d, ring.add(ring.mul(t, r1), ring.mul(rp, r2))) as u16);
            // t r1 = r' s2 gives s1⁻¹r1 · s2⁻¹r2 = (t s1)⁻¹ r' r2
            let (t, rp) = ore(r1, s2)?;
            mul.push(class(ring.mul(t, s1), ring.mul(rp, r2)) as u16);
        }
    }
    let one = class(ring.one(), ring.one());
    let label = format!("{}[{}^-1]", ring.label(), set.braces());
    let frac = FiniteRing::from_raw(label, m, add, mul, one)
        .map_err(|e| Error::invariant(format!("fraction ring is not a ring: {e}")))?;
    Ok(FractionRing {
        ring: frac,
        pairs,
        class_of,
    })
}

/// Checks that `(s, r) ↦ π(s)⁻¹π(r)` is a well-defined ring isomorphism
/// from the fraction ring onto `R/ass(S)`.
pub fn fraction_isomorphism_defect(frac: &FractionRing, view: &LocView) -> Option<String> {
    let q = &view.den.quotient;
    let proj = &view.den.projection;
    let inv = unit_inverses(q);
    let m = frac.ring.order();
    if m != q.order() {
        return Some(format!("fraction ring has order {m}, R/ass(S) has {}", q.order()));
    }
    let mut image = vec![usize::MAX; m];
    for (&(s, r), &c) in frac.pairs.iter().zip(&frac.class_of) {
        let Some(si) = inv[proj[s]] else {
            return Some(format!("image of {s} is not a unit"));
        };
        let y = q.mul(si, proj[r]);
        if image[c] == usize::MAX {
            image[c] = y;
        } else if image[c] != y {
            return Some(format!("not well defined on the class of ({s},{r})"));
        }
    }
    let mut hit = vec![false; m];
    for &y in &image {
        if std::mem::replace(&mut hit[y], true) {
            return Some(format!("not injective: {y} hit twice"));
        }
    }
    frac.ring
        .homomorphism_defect(q, &image)
        .map(|why| format!("fraction map: {why}"))
}

/// Builds the fraction ring and confirms it matches [`localize`].
pub fn fraction_oracle(ring: &FiniteRing, set: &Subset, bounds: &Bounds) -> Result<FiniteRing> {
    let frac = build_fraction_ring(ring, set, bounds)?;
    let view = localize(ring, set)?;
    match fraction_isomorphism_defect(&frac, &view) {
        None => Ok(frac.ring),
        Some(why) => Err(Error::invariant(why)),
    }
}
