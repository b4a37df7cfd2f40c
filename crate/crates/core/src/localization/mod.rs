//! Left Ore and left denominator sets, `ass`, saturation, maximal left
//! denominator sets and their localizations.
//!
//! A finite ring's localization `S⁻¹R` is realized as `R/ass(S)`; the
//! [`oracle`] module rebuilds it from fractions to confirm this.

pub mod oracle;

use std::fmt;

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::ring::{
    enumerate_ideals, quotient_ring, units, ElementIndex, ElementMap, FiniteRing, Ideal,
};
use crate::subset::Subset;

pub use oracle::{
    build_fraction_ring, exhaustive_denominator_sets, fraction_isomorphism_defect,
    fraction_oracle, FractionRing,
};

/// Dossier for one left denominator set.
#[derive(Debug, Clone, PartialEq)]
pub struct DenRecord {
    pub set: Subset,
    pub ass: Ideal,
    pub core: Subset,
    /// `S⁻¹R`, realized as `R/ass(S)`.
    pub quotient: FiniteRing,
    pub projection: ElementMap,
    /// `S` equals the saturation of `ass(S)`.
    pub saturated: bool,
}

impl DenRecord {
    /// Builds the record for a set already known to be a left denominator set.
    fn build(ring: &FiniteRing, set: Subset) -> Result<DenRecord> {
        let ass = Ideal::new(ring, ass_set(ring, &set))?;
        let (quotient, projection) = quotient_ring(ring, &ass)?;
        let qu = units(&quotient);
        if let Some(s) = set.iter().find(|&s| !qu.contains(projection[s])) {
            return Err(Error::invariant(format!(
                "{s} ∈ S does not become a unit in R/ass(S)"
            )));
        }
        let core = core_of(ring, &set, &ass);
        let saturated = set == preimage_of_units(&quotient, &projection);
        Ok(DenRecord {
            set,
            ass,
            core,
            quotient,
            projection,
            saturated,
        })
    }
}

/// A localization `S⁻¹R` together with the ring it came from.
#[derive(Debug, Clone)]
pub struct LocView {
    pub source: FiniteRing,
    pub den: DenRecord,
}

/// The maximal left denominator sets and the sets derived from them.
#[derive(Debug, Clone)]
pub struct MaxDenProfile {
    /// One record per maximal set, sorted by `ass`.
    pub records: Vec<DenRecord>,
    pub ll_radical: Ideal,
    /// Left localizable elements: the union of the maximal sets.
    pub localizable: Subset,
    /// Completely left localizable elements: their intersection.
    pub completely_localizable: Subset,
}

impl MaxDenProfile {
    pub fn sets(&self) -> Vec<&Subset> {
        self.records.iter().map(|r| &r.set).collect()
    }
}

/// Why a set fails to be a left denominator set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DenominatorWitness {
    /// `Sr ∩ Rs = ∅`.
    NotOre { r: ElementIndex, s: ElementIndex },
    /// `rs = 0` with `s ∈ S` but `tr ≠ 0` for every `t ∈ S`.
    NotReversible { r: ElementIndex, s: ElementIndex },
}

impl fmt::Display for DenominatorWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            DenominatorWitness::NotOre { r, s } => write!(f, "Sr ∩ Rs = ∅ for r = {r}, s = {s}"),
            DenominatorWitness::NotReversible { r, s } => {
                write!(f, "{r}·{s} = 0 but {r} ∉ ass(S)")
            }
        }
    }
}

fn check_universe(ring: &FiniteRing, set: &Subset) -> Result<()> {
    if set.universe() != ring.order() {
        return Err(Error::InvalidExpression(format!(
            "subset over {} elements used with a ring of order {}",
            set.universe(),
            ring.order()
        )));
    }
    Ok(())
}

/// Describes why `set` is not a multiplicative set (`1 ∈ S`, `0 ∉ S`, closed).
pub fn multiplicative_defect(ring: &FiniteRing, set: &Subset) -> Option<String> {
    if !set.contains(ring.one()) {
        return Some("1 ∉ S".into());
    }
    if set.contains(0) {
        return Some("0 ∈ S".into());
    }
    for a in set {
        for b in set {
            if !set.contains(ring.mul(a, b)) {
                return Some(format!("{a}·{b} = {} ∉ S", ring.mul(a, b)));
            }
        }
    }
    None
}

fn require_multiplicative(ring: &FiniteRing, set: &Subset) -> Result<()> {
    check_universe(ring, set)?;
    match multiplicative_defect(ring, set) {
        None => Ok(()),
        Some(why) => Err(Error::NotMultiplicative(why)),
    }
}

/// Smallest multiplicatively closed set containing `gens ∪ {1}`.
///
/// Fails with the generator word whose product is 0 if 0 is reached.
pub fn multiplicative_closure(ring: &FiniteRing, gens: &Subset) -> Result<Subset> {
    check_universe(ring, gens)?;
    let n = ring.order();
    let gens = gens.to_vec();
    if gens.contains(&0) {
        return Err(Error::ZeroAbsorbed { chain: vec![0] });
    }
    let mut parent: Vec<Option<(ElementIndex, ElementIndex)>> = vec![None; n];
    let mut set = Subset::singleton(n, ring.one());
    let mut queue = std::collections::VecDeque::from([ring.one()]);
    while let Some(x) = queue.pop_front() {
        for &g in &gens {
            let y = ring.mul(x, g);
            if set.insert(y) {
                parent[y] = Some((x, g));
                if y == 0 {
                    let mut chain = Vec::new();
                    let mut cur = y;
                    while let Some((p, g)) = parent[cur] {
                        chain.push(g);
                        cur = p;
                    }
                    chain.reverse();
                    return Err(Error::ZeroAbsorbed { chain });
                }
                queue.push_back(y);
            }
        }
    }
    Ok(set)
}

/// First `(r, s)` with `Sr ∩ Rs = ∅`, scanning `s` then `r` ascending.
pub fn left_ore_violation(
    ring: &FiniteRing,
    set: &Subset,
) -> Result<Option<(ElementIndex, ElementIndex)>> {
    require_multiplicative(ring, set)?;
    let n = ring.order();
    let members = set.to_vec();
    for &s in &members {
        let rs = Subset::from_indices(n, ring.elements().map(|x| ring.mul(x, s)));
        for r in ring.elements() {
            if !members.iter().any(|&t| rs.contains(ring.mul(t, r))) {
                return Ok(Some((r, s)));
            }
        }
    }
    Ok(None)
}

pub fn is_left_ore(ring: &FiniteRing, set: &Subset) -> Result<bool> {
    Ok(left_ore_violation(ring, set)?.is_none())
}

/// `ass(S) = { r : sr = 0 for some s ∈ S }`.
pub fn ass_set(ring: &FiniteRing, set: &Subset) -> Subset {
    let mut out = Subset::empty(ring.order());
    for s in set {
        for (r, p) in ring.mul_row(s).enumerate() {
            if p == 0 {
                out.insert(r);
            }
        }
    }
    out.insert(0);
    out
}

/// Kernel of left multiplication by `s`.
pub fn left_kernel(ring: &FiniteRing, s: ElementIndex) -> Subset {
    Subset::from_predicate(ring.order(), |r| ring.mul(s, r) == 0)
}

pub fn denominator_violation(
    ring: &FiniteRing,
    set: &Subset,
) -> Result<Option<DenominatorWitness>> {
    if let Some((r, s)) = left_ore_violation(ring, set)? {
        return Ok(Some(DenominatorWitness::NotOre { r, s }));
    }
    let ass = ass_set(ring, set);
    for s in set {
        for r in ring.elements() {
            if ring.mul(r, s) == 0 && !ass.contains(r) {
                return Ok(Some(DenominatorWitness::NotReversible { r, s }));
            }
        }
    }
    if let Some(why) = crate::ring::ideal_defect(ring, &ass) {
        return Err(Error::invariant(format!("ass of an Ore set: {why}")));
    }
    Ok(None)
}

pub fn is_left_denominator(ring: &FiniteRing, set: &Subset) -> Result<bool> {
    Ok(denominator_violation(ring, set)?.is_none())
}

fn preimage_of_units(quotient: &FiniteRing, projection: &[ElementIndex]) -> Subset {
    let qu = units(quotient);
    Subset::from_predicate(projection.len(), |r| qu.contains(projection[r]))
}

/// Preimage of the units of `R/I`.
pub fn saturate(ring: &FiniteRing, ideal: &Ideal) -> Result<Subset> {
    let (q, proj) = quotient_ring(ring, ideal)?;
    Ok(preimage_of_units(&q, &proj))
}

/// `I ∈ Ass_l(R)`: the saturation of `I` is a left denominator set with
/// `ass` exactly `I`.
pub fn is_localizable_ideal(ring: &FiniteRing, ideal: &Ideal) -> Result<bool> {
    let sat = saturate(ring, ideal)?;
    Ok(is_left_denominator(ring, &sat)? && ass_set(ring, &sat) == **ideal)
}

/// All localizable ideals in canonical order.
pub fn localizable_ideals(ring: &FiniteRing, bounds: &Bounds) -> Result<Vec<Ideal>> {
    let mut out = Vec::new();
    for ideal in enumerate_ideals(ring, bounds)? {
        if ideal.is_proper(ring) && is_localizable_ideal(ring, &ideal)? {
            out.push(ideal);
        }
    }
    Ok(out)
}

/// ⊆-maximal members of `sets`, keeping input order.
pub fn maximal_by_inclusion<T: std::ops::Deref<Target = Subset>>(sets: &[T]) -> Vec<usize> {
    (0..sets.len())
        .filter(|&i| {
            !sets
                .iter()
                .enumerate()
                .any(|(j, t)| j != i && sets[i].is_subset(t) && **t != *sets[i])
        })
        .collect()
}

pub fn max_denominator_sets(ring: &FiniteRing, bounds: &Bounds) -> Result<MaxDenProfile> {
    let ideals = localizable_ideals(ring, bounds)?;
    let mut records = Vec::new();
    for i in maximal_by_inclusion(&ideals) {
        let set = saturate(ring, &ideals[i])?;
        let rec = DenRecord::build(ring, set)?;
        if rec.ass != ideals[i] {
            return Err(Error::invariant("saturation changed its ass"));
        }
        records.push(rec);
    }
    records.sort_by(|a, b| a.ass.cmp(&b.ass));

    let n = ring.order();
    let mut ll = Subset::full(n);
    let mut localizable = Subset::empty(n);
    let mut complete = Subset::full(n);
    for rec in &records {
        ll.intersect_with(&rec.ass);
        localizable.union_with(&rec.set);
        complete.intersect_with(&rec.set);
    }
    let kernel = Subset::from_predicate(n, |r| records.iter().all(|rec| rec.projection[r] == 0));
    if kernel != ll {
        return Err(Error::invariant(
            "ll radical differs from the kernel of R → ∏ S⁻¹R",
        ));
    }
    Ok(MaxDenProfile {
        records,
        ll_radical: Ideal::new(ring, ll)?,
        localizable,
        completely_localizable: complete,
    })
}

pub fn localize(ring: &FiniteRing, set: &Subset) -> Result<LocView> {
    if let Some(w) = denominator_violation(ring, set)? {
        return Err(Error::NotDenominator(w.to_string()));
    }
    Ok(LocView {
        source: ring.clone(),
        den: DenRecord::build(ring, set.clone())?,
    })
}

fn core_of(ring: &FiniteRing, set: &Subset, ass: &Subset) -> Subset {
    Subset::from_predicate(ring.order(), |s| {
        set.contains(s) && left_kernel(ring, s) == *ass
    })
}

/// `S_c = { s ∈ S : ker(s·) = ass(S) }`.
pub fn core(ring: &FiniteRing, set: &Subset) -> Result<Subset> {
    if let Some((r, s)) = left_ore_violation(ring, set)? {
        return Err(Error::NotOre { r, s });
    }
    Ok(core_of(ring, set, &ass_set(ring, set)))
}

/// Intersection of `ass(S)` over the maximal left denominator sets.
pub fn ll_radical(ring: &FiniteRing, bounds: &Bounds) -> Result<Ideal> {
    Ok(max_denominator_sets(ring, bounds)?.ll_radical)
}

/// Multiplicative closure of `S ∪ T` for denominator sets with
/// `ass(S) ⊆ ass(T)`; the result is checked to be a denominator set whose
/// `ass` contains `ass(T)`.
pub fn denominator_join(ring: &FiniteRing, s: &Subset, t: &Subset) -> Result<Subset> {
    for set in [s, t] {
        if let Some(w) = denominator_violation(ring, set)? {
            return Err(Error::NotDenominator(w.to_string()));
        }
    }
    let ass_t = ass_set(ring, t);
    if !ass_set(ring, s).is_subset(&ass_t) {
        return Err(Error::PrecondAssNotNested);
    }
    let joined = match multiplicative_closure(ring, &s.union(t)) {
        Ok(j) => j,
        Err(Error::ZeroAbsorbed { chain }) => {
            return Err(Error::invariant(format!(
                "join of nested denominator sets absorbs zero via {chain:?}"
            )))
        }
        Err(e) => return Err(e),
    };
    if let Some(w) = denominator_violation(ring, &joined)? {
        return Err(Error::invariant(format!("join is not a denominator set: {w}")));
    }
    if !ass_t.is_subset(&ass_set(ring, &joined)) {
        return Err(Error::invariant("ass of the join misses ass(T)"));
    }
    Ok(joined)
}

/// The map `S ↦ π'(S)` from `maxDen_l(R)` to `maxDen_l(R/ℓℓ_R)`.
#[derive(Debug, Clone)]
pub struct PhiMap {
    pub quotient: FiniteRing,
    pub projection: ElementMap,
    pub quotient_profile: MaxDenProfile,
    /// `π'(S_i)` for each maximal `S_i` of `R`.
    pub images: Vec<Subset>,
    /// Index of `π'(S_i)` among the quotient's maximal sets, if it is one.
    pub targets: Vec<Option<usize>>,
    pub injective: bool,
    pub surjective: bool,
}

pub fn phi_map(ring: &FiniteRing, bounds: &Bounds) -> Result<PhiMap> {
    let profile = max_denominator_sets(ring, bounds)?;
    phi_map_from(ring, &profile, bounds)
}

pub fn phi_map_from(
    ring: &FiniteRing,
    profile: &MaxDenProfile,
    bounds: &Bounds,
) -> Result<PhiMap> {
    let (quotient, projection) = quotient_ring(ring, &profile.ll_radical)?;
    let quotient_profile = max_denominator_sets(&quotient, bounds)?;
    let images: Vec<Subset> = profile
        .records
        .iter()
        .map(|rec| Subset::from_indices(quotient.order(), rec.set.iter().map(|s| projection[s])))
        .collect();
    let targets: Vec<Option<usize>> = images
        .iter()
        .map(|img| quotient_profile.records.iter().position(|r| r.set == *img))
        .collect();
    let mut distinct = images.clone();
    distinct.sort();
    distinct.dedup();
    let injective = distinct.len() == images.len();
    let surjective =
        (0..quotient_profile.records.len()).all(|j| targets.contains(&Some(j)));
    Ok(PhiMap {
        quotient,
        projection,
        quotient_profile,
        images,
        targets,
        injective,
        surjective,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{matrix_ring, triangular_ring, zmod};

    fn set(n: usize, xs: &[usize]) -> Subset {
        Subset::from_indices(n, xs.iter().copied())
    }

    fn t2f2() -> FiniteRing {
        triangular_ring(2, &zmod(2).unwrap()).unwrap()
    }

    #[test]
    fn closures() {
        let z6 = zmod(6).unwrap();
        assert_eq!(multiplicative_closure(&z6, &set(6, &[2])).unwrap(), set(6, &[1, 2, 4]));
        assert_eq!(multiplicative_closure(&z6, &set(6, &[])).unwrap(), set(6, &[1]));
        let z4 = zmod(4).unwrap();
        assert_eq!(
            multiplicative_closure(&z4, &set(4, &[2])).unwrap_err(),
            Error::ZeroAbsorbed { chain: vec![2, 2] }
        );
    }

    #[test]
    fn ore_checks() {
        let z6 = zmod(6).unwrap();
        assert!(is_left_ore(&z6, &set(6, &[1, 2, 4])).unwrap());
        assert!(matches!(
            is_left_ore(&z6, &set(6, &[1, 2])),
            Err(Error::NotMultiplicative(_))
        ));
        let m = matrix_ring(2, &zmod(2).unwrap()).unwrap();
        assert!(is_left_ore(&m, &units(&m)).unwrap());
        // digits (a11, a12, a22): the ideal {a11 = 0} saturates to {a11 = 1},
        // whose ass {0, 1, 3} is not additively closed
        let t = t2f2();
        let i = Ideal::new(&t, set(8, &[0, 1, 2, 3])).unwrap();
        let sat = saturate(&t, &i).unwrap();
        assert!(!is_left_ore(&t, &sat).unwrap());
    }

    #[test]
    fn ass_examples() {
        let z6 = zmod(6).unwrap();
        assert_eq!(ass_set(&z6, &set(6, &[1, 2, 4])), set(6, &[0, 3]));
        assert_eq!(ass_set(&z6, &set(6, &[1])), set(6, &[0]));
        assert_eq!(ass_set(&z6, &set(6, &[1, 3, 5])), set(6, &[0, 2, 4]));
    }

    #[test]
    fn denominator_examples() {
        let z6 = zmod(6).unwrap();
        assert!(is_left_denominator(&z6, &set(6, &[1, 2, 4])).unwrap());
        let m = matrix_ring(2, &zmod(2).unwrap()).unwrap();
        assert!(is_left_denominator(&m, &units(&m)).unwrap());
        let t = t2f2();
        assert!(is_left_denominator(&t, &set(8, &[1, 3, 5, 7])).unwrap());
    }

    #[test]
    fn saturation_examples() {
        let z6 = zmod(6).unwrap();
        let i = Ideal::new(&z6, set(6, &[0, 3])).unwrap();
        assert_eq!(saturate(&z6, &i).unwrap(), set(6, &[1, 2, 4, 5]));
        assert_eq!(saturate(&z6, &Ideal::zero(&z6)).unwrap(), units(&z6));
        let z4 = zmod(4).unwrap();
        let j = Ideal::new(&z4, set(4, &[0, 2])).unwrap();
        assert_eq!(saturate(&z4, &j).unwrap(), set(4, &[1, 3]));
        assert_eq!(saturate(&z4, &Ideal::whole(&z4)).unwrap_err(), Error::ImproperIdeal);
    }

    #[test]
    fn localizable_ideal_examples() {
        let z6 = zmod(6).unwrap();
        let i = Ideal::new(&z6, set(6, &[0, 3])).unwrap();
        assert!(is_localizable_ideal(&z6, &i).unwrap());
        assert!(is_localizable_ideal(&z6, &Ideal::zero(&z6)).unwrap());
        let z4 = zmod(4).unwrap();
        let j = Ideal::new(&z4, set(4, &[0, 2])).unwrap();
        assert!(!is_localizable_ideal(&z4, &j).unwrap());
    }

    #[test]
    fn maxden_examples() {
        let b = Bounds::default();
        let z6 = zmod(6).unwrap();
        let p = max_denominator_sets(&z6, &b).unwrap();
        let sets: Vec<_> = p.records.iter().map(|r| r.set.to_vec()).collect();
        assert_eq!(sets, vec![vec![1, 2, 4, 5], vec![1, 3, 5]]);
        assert_eq!(p.records[0].ass.to_vec(), vec![0, 3]);
        assert_eq!(p.records[1].ass.to_vec(), vec![0, 2, 4]);

        let z4 = zmod(4).unwrap();
        let p = max_denominator_sets(&z4, &b).unwrap();
        assert_eq!(p.records.len(), 1);
        assert_eq!(p.records[0].set.to_vec(), vec![1, 3]);
        assert!(p.records[0].ass.is_zero());

        let m = matrix_ring(2, &zmod(2).unwrap()).unwrap();
        let p = max_denominator_sets(&m, &b).unwrap();
        assert_eq!(p.records.len(), 1);
        assert_eq!(p.records[0].set.len(), 6);
    }

    #[test]
    fn localize_examples() {
        let z6 = zmod(6).unwrap();
        assert_eq!(localize(&z6, &set(6, &[1, 3, 5])).unwrap().den.quotient.order(), 2);
        let v = localize(&z6, &units(&z6)).unwrap();
        assert!(v.den.quotient.same_tables(&z6));
        let t = t2f2();
        let v = localize(&t, &set(8, &[1, 3, 5, 7])).unwrap();
        assert_eq!(v.den.quotient.order(), 2);
        assert_eq!(v.den.ass.to_vec(), vec![0, 2, 4, 6]);
        assert!(matches!(
            localize(&z6, &set(6, &[1, 2, 4, 5, 3]).intersection(&set(6, &[1, 3, 5, 2]))),
            Err(Error::NotMultiplicative(_))
        ));
    }

    #[test]
    fn core_examples() {
        let z6 = zmod(6).unwrap();
        assert_eq!(core(&z6, &set(6, &[1, 3, 5])).unwrap(), set(6, &[3]));
        assert_eq!(core(&z6, &set(6, &[1, 2, 4])).unwrap(), set(6, &[2, 4]));
        let z4 = zmod(4).unwrap();
        assert_eq!(core(&z4, &set(4, &[1, 3])).unwrap(), set(4, &[1, 3]));
    }

    #[test]
    fn ll_radical_examples() {
        let b = Bounds::default();
        assert!(ll_radical(&zmod(6).unwrap(), &b).unwrap().is_zero());
        assert!(ll_radical(&zmod(4).unwrap(), &b).unwrap().is_zero());
        assert_eq!(ll_radical(&t2f2(), &b).unwrap().to_vec(), vec![0, 2, 4, 6]);
    }

    #[test]
    fn join_examples() {
        let z6 = zmod(6).unwrap();
        let s124 = set(6, &[1, 2, 4]);
        assert_eq!(denominator_join(&z6, &set(6, &[1]), &s124).unwrap(), s124);
        assert_eq!(
            denominator_join(&z6, &set(6, &[1, 5]), &s124).unwrap(),
            set(6, &[1, 2, 4, 5])
        );
        let u = units(&z6);
        assert_eq!(denominator_join(&z6, &u, &u).unwrap(), u);
        assert_eq!(
            denominator_join(&z6, &s124, &set(6, &[1, 5])).unwrap_err(),
            Error::PrecondAssNotNested
        );
    }

    #[test]
    fn phi_examples() {
        let b = Bounds::default();
        let phi = phi_map(&zmod(6).unwrap(), &b).unwrap();
        assert!(phi.injective && phi.surjective);
        assert_eq!(phi.targets, vec![Some(0), Some(1)]);
        let phi = phi_map(&t2f2(), &b).unwrap();
        assert_eq!(phi.quotient.order(), 2);
        assert!(phi.injective && phi.surjective);
        let phi = phi_map(&zmod(4).unwrap(), &b).unwrap();
        assert!(phi.injective && phi.surjective);
    }
}
