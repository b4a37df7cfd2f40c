//! Ring-level predicates and the classification report.

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::localization::{localizable_ideals, max_denominator_sets, MaxDenProfile};
use crate::ring::{
    central_idempotent_decomposition, enumerate_ideals, is_local, jacobson_radical,
    nil_radical, nilpotent_elements, units, ElementIndex, FiniteRing, Ideal,
};
use crate::subset::Subset;

/// A predicate's value with its least-index counterexample when false.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Check {
    pub holds: bool,
    pub witness: Option<ElementIndex>,
}

impl Check {
    fn from_witness(witness: Option<ElementIndex>) -> Check {
        Check {
            holds: witness.is_none(),
            witness,
        }
    }
}

/// WLL from an already computed profile: `R = 𝓛_l(R) ⊔ Nil(R)`.
pub fn wll_from(profile: &MaxDenProfile, nil: &Subset) -> Result<Check> {
    if let Some(x) = profile.localizable.intersection(nil).first() {
        return Err(Error::invariant(format!(
            "{x} is both left localizable and nilpotent"
        )));
    }
    let covered = profile.localizable.union(nil);
    Ok(Check::from_witness(covered.complement().first()))
}

/// Every non-nilpotent element is left localizable.
pub fn is_weakly_left_localizable(ring: &FiniteRing, bounds: &Bounds) -> Result<Check> {
    let profile = max_denominator_sets(ring, bounds)?;
    wll_from(&profile, &nilpotent_elements(ring))
}

/// `𝓛_l(R) = R ∖ {0}`.
pub fn left_localizable_from(profile: &MaxDenProfile) -> Check {
    let missing = profile.localizable.complement();
    Check::from_witness(missing.iter().find(|&x| x != 0))
}

pub fn is_left_localizable_ring(ring: &FiniteRing, bounds: &Bounds) -> Result<Check> {
    Ok(left_localizable_from(&max_denominator_sets(ring, bounds)?))
}

/// Finite form: `{0}` is the only localizable ideal.
pub fn is_left_localization_maximal(ring: &FiniteRing, bounds: &Bounds) -> Result<bool> {
    let ideals = localizable_ideals(ring, bounds)?;
    Ok(ideals.iter().all(|i| i.is_zero()))
}

/// True iff every element of `a` has a power in `b`, i.e. the image of `a`
/// in `R/b` is nil.
pub fn nil_modulo_check(ring: &FiniteRing, a: &Subset, b: &Subset) -> bool {
    a.iter().all(|x| {
        let mut p = x;
        for _ in 0..=ring.order() {
            if b.contains(p) {
                return true;
            }
            p = ring.mul(p, x);
        }
        false
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorSummary {
    pub idempotent: ElementIndex,
    pub order: usize,
    pub local: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxDenSummary {
    pub set: Subset,
    pub ass: Subset,
    pub core: Subset,
    pub localization_order: usize,
    pub localization_local: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub label: String,
    pub order: usize,
    pub units: usize,
    pub nilpotent: Subset,
    pub nil_radical: Subset,
    pub jacobson_radical: Subset,
    pub ideals: usize,
    pub local: bool,
    pub decomposition: Vec<FactorSummary>,
    pub maxden: Vec<MaxDenSummary>,
    pub ll_radical: Subset,
    pub localizable: Subset,
    pub completely_localizable: Subset,
    /// Every finite ring is semilocal.
    pub semilocal: bool,
    pub left_localizable: Check,
    pub weakly_left_localizable: Check,
    pub left_localization_maximal: bool,
}

pub fn classification_report(ring: &FiniteRing, bounds: &Bounds) -> Result<Report> {
    let profile = max_denominator_sets(ring, bounds)?;
    let nil = nilpotent_elements(ring);
    let wll = wll_from(&profile, &nil)?;
    let ideals = enumerate_ideals(ring, bounds)?;
    let dec = central_idempotent_decomposition(ring)?;
    let loc_max = profile.records.len() == 1 && profile.records[0].ass.is_zero();
    let decomposition = dec
        .idempotents
        .iter()
        .zip(&dec.factors)
        .map(|(&e, f)| FactorSummary {
            idempotent: e,
            order: f.order(),
            local: is_local(f),
        })
        .collect();
    let maxden = profile
        .records
        .iter()
        .map(|r| MaxDenSummary {
            set: r.set.clone(),
            ass: r.ass.as_subset().clone(),
            core: r.core.clone(),
            localization_order: r.quotient.order(),
            localization_local: is_local(&r.quotient),
        })
        .collect();
    let report = Report {
        label: ring.label().to_string(),
        order: ring.order(),
        units: units(ring).len(),
        nil_radical: nil_radical(ring)?.into_subset(),
        jacobson_radical: jacobson_radical(ring)?.into_subset(),
        ideals: ideals.len(),
        local: is_local(ring),
        decomposition,
        maxden,
        ll_radical: profile.ll_radical.as_subset().clone(),
        localizable: profile.localizable.clone(),
        completely_localizable: profile.completely_localizable.clone(),
        semilocal: true,
        left_localizable: left_localizable_from(&profile),
        weakly_left_localizable: wll,
        left_localization_maximal: loc_max,
        nilpotent: nil,
    };
    if (report.localizable.len() + report.nilpotent.len() >= report.order)
        != report.weakly_left_localizable.holds
    {
        return Err(Error::invariant("report counts disagree with WLL"));
    }
    if !report.nil_radical.is_subset(&report.jacobson_radical)
        || !report.nil_radical.is_subset(&report.nilpotent)
    {
        return Err(Error::invariant("nil radical escapes rad(R) or Nil(R)"));
    }
    Ok(report)
}

/// `R∖S` as an ideal, if it is one.
pub fn complement_ideal(ring: &FiniteRing, set: &Subset) -> Option<Ideal> {
    Ideal::new(ring, set.complement()).ok()
}
