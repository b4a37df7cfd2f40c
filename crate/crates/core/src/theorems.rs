//! Registry of mechanized checks of the weakly left localizable
//! characterizations on a concrete finite ring.
//!
//! Every entry is one of three kinds:
//! - an equivalence: `pass = ¬applicable ∨ lhs = rhs`;
//! - an implication: `lhs` is the hypothesis, `rhs` the conclusion and
//!   `pass = ¬lhs ∨ rhs`;
//! - a pointwise equivalence over a family of candidates (ideals or
//!   denominator sets): `lhs`/`rhs` are the conjunctions over the family and
//!   `pass` requires agreement at every candidate.
//!
//! Some entries additionally require a side invariant for `pass`.

use std::cell::OnceCell;

use crate::bounds::Bounds;
use crate::classify::{
    is_left_localization_maximal, left_localizable_from, nil_modulo_check, wll_from, Check,
};
use crate::error::{Error, Result};
use crate::localization::{
    ass_set, denominator_violation, exhaustive_denominator_sets, localizable_ideals,
    max_denominator_sets, maximal_by_inclusion, phi_map_from, saturate, MaxDenProfile, PhiMap,
};
use crate::ring::{
    central_idempotent_decomposition, ideal_defect, is_local, jacobson_radical,
    left_regular_elements, nil_radical, nilpotent_elements, quotient_ring,
    right_regular_elements, units, Decomposition, FiniteRing,
};
use crate::subset::Subset;

/// Outcome of one registry check on one ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub id: String,
    pub ring: String,
    pub applicable: bool,
    pub lhs: bool,
    pub rhs: bool,
    pub pass: bool,
    pub conditions: Vec<(String, bool)>,
    pub witnesses: Vec<(String, String)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Equivalence,
    Implication,
    Pointwise,
}

const REGISTRY: &[(&str, Kind, &str)] = &[
    (
        "thm-26Mar14",
        Kind::Equivalence,
        "WLL, ll = 0, every maximal localization WLL and condition (d) iff R is a product of local rings with rad = nil radical",
    ),
    (
        "thm-28Mar14",
        Kind::Equivalence,
        "WLL, phi surjective, every maximal localization WLL and condition (d) iff R/ll is a product of such local rings, ll is nil and ll-projection maps L(R) onto L(R/ll)",
    ),
    (
        "cor-b26Mar14",
        Kind::Implication,
        "for a product of local rings with rad = nil radical: regular = completely localizable, Nil = nil radical, maximal sets are unit preimages",
    ),
    (
        "thm-24Dec12",
        Kind::Equivalence,
        "semilocal R is WLL with rad = nil radical iff R is a product of local rings with rad = nil radical",
    ),
    (
        "cor-a24Dec12",
        Kind::Equivalence,
        "R is WLL iff R is a product of local rings",
    ),
    (
        "cor-b24Dec12",
        Kind::Implication,
        "for a product of local rings: maximal sets are unit-coordinate sets, cores are 0 x .. x R_i* x .. x 0, {1, e_i} is a denominator set with the same ass",
    ),
    (
        "thm-C2Dec12",
        Kind::Implication,
        "under the product characterization: core(S_1) = S_1 = R minus nil radical when n = 1, core(S_i) = S_i cap ass_j (j != i) and nonempty when n >= 2",
    ),
    (
        "thm-9Feb13",
        Kind::Equivalence,
        "a direct product is WLL iff every factor is",
    ),
    (
        "thm-c26Dec12",
        Kind::Equivalence,
        "maximal denominator sets of a product are the tagged disjoint union of the factors' sets, with matching ass and cores",
    ),
    (
        "lem-a26Mar14",
        Kind::Equivalence,
        "localization maximal and WLL iff local with rad = nil radical",
    ),
    (
        "prop-b27Nov12",
        Kind::Pointwise,
        "a localizable ideal is maximal iff its saturation is a maximal denominator set; maximal ones are incomparable",
    ),
    (
        "prop-a14Dec12",
        Kind::Equivalence,
        "ll(R/ll) = 0 and L + ll in L; hence WLL iff the ll-coset of every non-nilpotent element lies in L",
    ),
    (
        "prop-c13Dec12",
        Kind::Equivalence,
        "R is WLL iff R/ll is WLL, ll is nil and ll-projection maps L(R) onto L(R/ll)",
    ),
    (
        "lem-a20Apr14",
        Kind::Pointwise,
        "for a maximal S: the localization is local iff R minus S is an ideal",
    ),
    (
        "cor-d28Mar14",
        Kind::Implication,
        "under the thm-28Mar14 conditions with ll in ass(C_l): C_l is a denominator set with ass = ll, its localization R/ll is a product of local rings onto which R maps, and the nil radical and L are pulled back from R/ll",
    ),
    (
        "thm-3.9-finite",
        Kind::Equivalence,
        "R is left localizable iff R is a finite product of finite fields",
    ),
];

/// `(id, description)` in registry order.
pub fn list_theorems() -> Vec<(&'static str, &'static str)> {
    REGISTRY.iter().map(|&(id, _, d)| (id, d)).collect()
}

pub fn theorem_kind(id: &str) -> Result<Kind> {
    REGISTRY
        .iter()
        .find(|(i, _, _)| *i == id)
        .map(|&(_, k, _)| k)
        .ok_or_else(|| Error::UnknownTheorem(id.to_string()))
}

pub fn verify_theorem(ring: &FiniteRing, id: &str, bounds: &Bounds) -> Result<Verdict> {
    theorem_kind(id)?;
    Ctx::new(ring, bounds).verify(id)
}

pub fn verify_all(ring: &FiniteRing, bounds: &Bounds) -> Result<Vec<Verdict>> {
    let ctx = Ctx::new(ring, bounds);
    REGISTRY.iter().map(|(id, _, _)| ctx.verify(id)).collect()
}

/// Verdict under construction.
struct Draft {
    conditions: Vec<(String, bool)>,
    witnesses: Vec<(String, String)>,
}

impl Draft {
    fn new() -> Draft {
        Draft {
            conditions: Vec::new(),
            witnesses: Vec::new(),
        }
    }

    fn cond(&mut self, name: &str, value: bool) -> bool {
        self.conditions.push((name.to_string(), value));
        value
    }

    fn check(&mut self, name: &str, c: Check) -> bool {
        if let Some(w) = c.witness {
            self.witnesses.push((name.to_string(), w.to_string()));
        }
        self.cond(name, c.holds)
    }

    fn witness(&mut self, name: &str, what: impl ToString) {
        self.witnesses.push((name.to_string(), what.to_string()));
    }
}

/// Per-ring cache. Localization-side facts and decomposition-side facts are
/// kept in separate cells; equivalence sides draw from one family each.
struct Ctx<'a> {
    ring: &'a FiniteRing,
    bounds: &'a Bounds,
    profile: OnceCell<MaxDenProfile>,
    phi: OnceCell<PhiMap>,
    nil: OnceCell<Subset>,
    decomposition: OnceCell<Decomposition>,
}

fn cached<T>(cell: &OnceCell<T>, f: impl FnOnce() -> Result<T>) -> Result<&T> {
    if cell.get().is_none() {
        let _ = cell.set(f()?);
    }
    Ok(cell.get().expect("just set"))
}

/// Local with `rad = 𝓝`.
fn local_nil_rad(ring: &FiniteRing) -> Result<bool> {
    Ok(is_local(ring) && jacobson_radical(ring)? == nil_radical(ring)?)
}

fn is_field(ring: &FiniteRing) -> bool {
    units(ring).len() == ring.order() - 1 && ring.is_commutative()
}

impl<'a> Ctx<'a> {
    fn new(ring: &'a FiniteRing, bounds: &'a Bounds) -> Self {
        Ctx {
            ring,
            bounds,
            profile: OnceCell::new(),
            phi: OnceCell::new(),
            nil: OnceCell::new(),
            decomposition: OnceCell::new(),
        }
    }

    fn profile(&self) -> Result<&MaxDenProfile> {
        cached(&self.profile, || max_denominator_sets(self.ring, self.bounds))
    }

    fn phi(&self) -> Result<&PhiMap> {
        cached(&self.phi, || {
            phi_map_from(self.ring, self.profile()?, self.bounds)
        })
    }

    fn nil(&self) -> &Subset {
        self.nil.get_or_init(|| nilpotent_elements(self.ring))
    }

    fn decomposition(&self) -> Result<&Decomposition> {
        cached(&self.decomposition, || {
            central_idempotent_decomposition(self.ring)
        })
    }

    fn wll(&self) -> Result<Check> {
        wll_from(self.profile()?, self.nil())
    }

    fn verify(&self, id: &str) -> Result<Verdict> {
        let mut d = Draft::new();
        let (applicable, lhs, rhs, extra) = match id {
            "thm-26Mar14" => {
                let lhs = self.thm26_lhs(&mut d)?;
                let rhs = self.local_factors(&mut d, true)?;
                (true, lhs, rhs, true)
            }
            "thm-28Mar14" => {
                let lhs = self.thm28_lhs(&mut d)?;
                let rhs = self.thm28_rhs(&mut d)?;
                (true, lhs, rhs, true)
            }
            "cor-b26Mar14" => {
                let hyp = self.local_factors(&mut d, true)?;
                let concl = self.cor_b26_conclusion(&mut d)?;
                (true, hyp, concl, true)
            }
            "thm-24Dec12" => {
                let wll = self.wll()?;
                let lhs = d.check("wll", wll)
                    & d.cond(
                        "rad = nil radical",
                        jacobson_radical(self.ring)? == nil_radical(self.ring)?,
                    );
                d.cond("semilocal", true);
                let rhs = self.local_factors(&mut d, true)?;
                (true, lhs, rhs, true)
            }
            "cor-a24Dec12" => {
                let wll = self.wll()?;
                let lhs = d.check("wll", wll);
                let rhs = self.local_factors(&mut d, false)?;
                (true, lhs, rhs, true)
            }
            "cor-b24Dec12" => {
                let hyp = self.local_factors(&mut d, false)?;
                let concl = self.cor_b24_conclusion(&mut d)?;
                (true, hyp, concl, true)
            }
            "thm-C2Dec12" => {
                let hyp = self.thm26_lhs(&mut d)?;
                let concl = self.core_formula(&mut d)?;
                (true, hyp, concl, true)
            }
            "thm-9Feb13" => self.product_wll(&mut d)?,
            "thm-c26Dec12" => self.product_profile(&mut d)?,
            "lem-a26Mar14" => {
                let wll = self.wll()?;
                let lhs = d.cond(
                    "localization maximal",
                    is_left_localization_maximal(self.ring, self.bounds)?,
                ) & d.check("wll", wll);
                let rhs = d.cond("local", is_local(self.ring))
                    & d.cond(
                        "rad = nil radical",
                        jacobson_radical(self.ring)? == nil_radical(self.ring)?,
                    );
                (true, lhs, rhs, true)
            }
            "prop-b27Nov12" => self.max_ass(&mut d)?,
            "prop-a14Dec12" => self.ll_cosets(&mut d)?,
            "prop-c13Dec12" => {
                let wll = self.wll()?;
                let lhs = d.check("wll", wll);
                let rhs = self.thm28_rhs_parts(&mut d, false)?;
                (true, lhs, rhs, true)
            }
            "lem-a20Apr14" => self.local_localizations(&mut d)?,
            "cor-d28Mar14" => {
                let hyp = self.thm28_lhs(&mut d)?;
                let cl = &self.profile()?.completely_localizable;
                let ll = &self.profile()?.ll_radical;
                let nested =
                    d.cond("ll in ass(C_l)", ll.is_subset(&ass_set(self.ring, cl)));
                let concl = self.cor_d28_conclusion(&mut d)?;
                (true, hyp && nested, concl, true)
            }
            "thm-3.9-finite" => {
                let lhs = d.check("left localizable", left_localizable_from(self.profile()?));
                let dec = self.decomposition()?;
                let mut rhs = true;
                for (i, f) in dec.factors.iter().enumerate() {
                    if !is_field(f) {
                        d.witness("factor is a field", dec.idempotents[i]);
                        rhs = false;
                    }
                }
                d.cond("factors are fields", rhs);
                (true, lhs, rhs, true)
            }
            other => return Err(Error::UnknownTheorem(other.to_string())),
        };
        let kind = theorem_kind(id)?;
        let agree = match kind {
            Kind::Equivalence => lhs == rhs,
            Kind::Implication => !lhs || rhs,
            Kind::Pointwise => extra,
        };
        let pass = !applicable || (agree && extra);
        Ok(Verdict {
            id: id.to_string(),
            ring: self.ring.label().to_string(),
            applicable,
            lhs,
            rhs,
            pass,
            conditions: d.conditions,
            witnesses: d.witnesses,
        })
    }

    /// Condition (d): no `ass(S)` is nil modulo `ass(T)` for `S ≠ T`.
    fn condition_d(&self, d: &mut Draft) -> Result<bool> {
        let recs = &self.profile()?.records;
        let mut ok = true;
        for (i, s) in recs.iter().enumerate() {
            for (j, t) in recs.iter().enumerate() {
                if i != j && nil_modulo_check(self.ring, &s.ass, &t.ass) {
                    d.witness("condition (d)", format!("ass {} nil modulo ass {}", s.ass.braces(), t.ass.braces()));
                    ok = false;
                }
            }
        }
        Ok(d.cond("condition (d)", ok))
    }

    fn localizations_wll(&self, d: &mut Draft) -> Result<bool> {
        let mut ok = true;
        for rec in &self.profile()?.records {
            let p = max_denominator_sets(&rec.quotient, self.bounds)?;
            if !wll_from(&p, &nilpotent_elements(&rec.quotient))?.holds {
                d.witness("localizations wll", format!("S = {}", rec.set));
                ok = false;
            }
        }
        Ok(d.cond("localizations wll", ok))
    }

    fn thm26_lhs(&self, d: &mut Draft) -> Result<bool> {
        let wll = self.wll()?;
        let a = d.check("wll", wll);
        let b = d.cond("ll = 0", self.profile()?.ll_radical.is_zero());
        let c = self.localizations_wll(d)?;
        let e = self.condition_d(d)?;
        Ok(a && b && c && e)
    }

    fn thm28_lhs(&self, d: &mut Draft) -> Result<bool> {
        let wll = self.wll()?;
        let a = d.check("wll", wll);
        let b = d.cond("phi surjective", self.phi()?.surjective);
        let c = self.localizations_wll(d)?;
        let e = self.condition_d(d)?;
        Ok(a && b && c && e)
    }

    fn thm28_rhs(&self, d: &mut Draft) -> Result<bool> {
        self.thm28_rhs_parts(d, true)
    }

    /// `R/ll` is (a product of local rings with nil radical, when
    /// `decompose`; WLL otherwise), `ll` is nil, and `π'(𝓛_l(R)) = 𝓛_l(R/ll)`.
    fn thm28_rhs_parts(&self, d: &mut Draft, decompose: bool) -> Result<bool> {
        let profile = self.profile()?;
        let phi = self.phi()?;
        let q = &phi.quotient;
        let first = if decompose {
            let dec = central_idempotent_decomposition(q)?;
            let mut ok = true;
            for (e, f) in dec.idempotents.iter().zip(&dec.factors) {
                if !local_nil_rad(f)? {
                    d.witness("R/ll local factors", format!("factor at {e}"));
                    ok = false;
                }
            }
            d.cond("R/ll local factors", ok)
        } else {
            let c = wll_from(&phi.quotient_profile, &nilpotent_elements(q))?;
            d.check("R/ll wll", c)
        };
        let nil_ll = profile.ll_radical.is_subset(self.nil());
        if !nil_ll {
            let x = profile.ll_radical.difference(self.nil()).first();
            d.witness("ll nil", x.unwrap_or(0));
        }
        let nil_ll = d.cond("ll nil", nil_ll);
        let image = Subset::from_indices(
            q.order(),
            profile.localizable.iter().map(|x| phi.projection[x]),
        );
        let onto = d.cond("L(R) maps onto L(R/ll)", image == phi.quotient_profile.localizable);
        Ok(first && nil_ll && onto)
    }

    /// Every factor of the central decomposition is local (with
    /// `rad = 𝓝` when `with_rad`).
    fn local_factors(&self, d: &mut Draft, with_rad: bool) -> Result<bool> {
        let dec = self.decomposition()?;
        let mut ok = true;
        for (e, f) in dec.idempotents.iter().zip(&dec.factors) {
            let good = if with_rad { local_nil_rad(f)? } else { is_local(f) };
            if !good {
                d.witness("local factors", format!("factor at {e}"));
                ok = false;
            }
        }
        Ok(d.cond("local factors", ok))
    }

    /// `{r : e_i r is a unit of e_iR}` per factor `i`.
    fn unit_coordinate_sets(&self) -> Result<Vec<Subset>> {
        let dec = self.decomposition()?;
        let n = self.ring.order();
        let unit_sets: Vec<Subset> = dec.factors.iter().map(units).collect();
        Ok((0..dec.factors.len())
            .map(|i| {
                Subset::from_predicate(n, |r| unit_sets[i].contains(dec.coordinates(self.ring, r)[i]))
            })
            .collect())
    }

    fn cor_b26_conclusion(&self, d: &mut Draft) -> Result<bool> {
        let profile = self.profile()?;
        let regular = left_regular_elements(self.ring).intersection(&right_regular_elements(self.ring));
        let a = d.cond("regular = C_l", regular == profile.completely_localizable);
        let nilrad = nil_radical(self.ring)?;
        let b = d.cond("Nil = nil radical", *self.nil() == *nilrad);
        if !b {
            let x = self.nil().difference(&nilrad).first().unwrap_or(0);
            d.witness("Nil = nil radical", x);
        }
        let mut expected = self.unit_coordinate_sets()?;
        expected.sort();
        let mut got: Vec<Subset> = profile.records.iter().map(|r| r.set.clone()).collect();
        got.sort();
        let c = d.cond("maximal sets are unit preimages", expected == got);
        Ok(a && b && c)
    }

    fn cor_b24_conclusion(&self, d: &mut Draft) -> Result<bool> {
        let profile = self.profile()?;
        let dec = self.decomposition()?;
        let unit_sets = self.unit_coordinate_sets()?;
        let n = self.ring.order();
        let factor_units: Vec<Subset> = dec.factors.iter().map(units).collect();
        let mut sets_ok = unit_sets.len() == profile.records.len();
        let mut cores_ok = sets_ok;
        let mut pairs_ok = sets_ok;
        for (i, expected) in unit_sets.iter().enumerate() {
            let Some(rec) = profile.records.iter().find(|r| r.set == *expected) else {
                d.witness("unit-coordinate sets", format!("factor {}: {expected}", i + 1));
                sets_ok = false;
                cores_ok = false;
                pairs_ok = false;
                continue;
            };
            let core = Subset::from_predicate(n, |r| {
                let c = dec.coordinates(self.ring, r);
                (0..c.len()).all(|j| {
                    if j == i {
                        factor_units[j].contains(c[j])
                    } else {
                        c[j] == 0
                    }
                })
            });
            if core != rec.core {
                d.witness("cores", format!("factor {}: {} vs {}", i + 1, rec.core, core));
                cores_ok = false;
            }
            let e = dec.idempotents[i];
            let pair = Subset::from_indices(n, [self.ring.one(), e]);
            let den = denominator_violation(self.ring, &pair)?.is_none();
            if !den || ass_set(self.ring, &pair) != *rec.ass {
                d.witness("{1, e_i}", format!("e = {e}"));
                pairs_ok = false;
            }
        }
        let a = d.cond("unit-coordinate sets", sets_ok);
        let b = d.cond("cores", cores_ok);
        let c = d.cond("{1, e_i} denominator", pairs_ok);
        Ok(a && b && c)
    }

    fn core_formula(&self, d: &mut Draft) -> Result<bool> {
        let profile = self.profile()?;
        let recs = &profile.records;
        if recs.len() == 1 {
            let nilrad = nil_radical(self.ring)?;
            let complement = nilrad.complement();
            let ok = recs[0].core == recs[0].set && recs[0].set == complement;
            if !ok {
                d.witness("core = S = R minus nil radical", format!("core {}", recs[0].core));
            }
            return Ok(d.cond("core = S = R minus nil radical", ok));
        }
        let mut ok = true;
        for (i, rec) in recs.iter().enumerate() {
            let mut expected = rec.set.clone();
            for (j, other) in recs.iter().enumerate() {
                if j != i {
                    expected.intersect_with(&other.ass);
                }
            }
            if expected != rec.core || expected.is_empty() {
                d.witness("core formula", format!("S = {}", rec.set));
                ok = false;
            }
        }
        Ok(d.cond("core formula", ok))
    }

    fn product_wll(&self, d: &mut Draft) -> Result<(bool, bool, bool, bool)> {
        let Some(factors) = self.ring.product_factors() else {
            d.cond("product", false);
            return Ok((false, false, false, true));
        };
        let wll = self.wll()?;
        let lhs = d.check("wll", wll);
        let mut rhs = true;
        for (i, f) in factors.iter().enumerate() {
            let p = max_denominator_sets(f, self.bounds)?;
            let c = wll_from(&p, &nilpotent_elements(f))?;
            if !c.holds {
                d.witness("factors wll", format!("factor {}", i + 1));
                rhs = false;
            }
        }
        d.cond("factors wll", rhs);
        Ok((true, lhs, rhs, true))
    }

    fn product_profile(&self, d: &mut Draft) -> Result<(bool, bool, bool, bool)> {
        let Some(factors) = self.ring.product_factors() else {
            d.cond("product", false);
            return Ok((false, false, false, true));
        };
        let profile = self.profile()?;
        let n = self.ring.order();
        let coords = |x: usize| crate::ring::decode_mixed(x, factors);

        // (S, ass, core) triples expected from the factors
        let mut expected: Vec<(Subset, Subset, Subset)> = Vec::new();
        let mut rhs = true;
        for (i, f) in factors.iter().enumerate() {
            let p = max_denominator_sets(f, self.bounds)?;
            for rec in &p.records {
                rhs &= is_local(&rec.quotient);
                let lift = |inner: &Subset, others_zero: bool| {
                    Subset::from_predicate(n, |x| {
                        let c = coords(x);
                        inner.contains(c[i])
                            && (!others_zero || (0..c.len()).all(|j| j == i || c[j] == 0))
                    })
                };
                expected.push((lift(&rec.set, false), lift(&rec.ass, false), lift(&rec.core, true)));
            }
        }
        expected.sort();
        let mut got: Vec<(Subset, Subset, Subset)> = profile
            .records
            .iter()
            .map(|r| (r.set.clone(), r.ass.as_subset().clone(), r.core.clone()))
            .collect();
        got.sort();
        let same = d.cond("tagged disjoint union", expected == got);
        if !same {
            d.witness("tagged disjoint union", format!("{} vs {} sets", got.len(), expected.len()));
        }
        let lhs = profile.records.iter().all(|r| is_local(&r.quotient));
        d.cond("maximal localizations local", lhs);
        d.cond("factor localizations local", rhs);
        Ok((true, lhs, rhs, same))
    }

    fn max_ass(&self, d: &mut Draft) -> Result<(bool, bool, bool, bool)> {
        let ideals = localizable_ideals(self.ring, self.bounds)?;
        let maximal = maximal_by_inclusion(&ideals);
        let oracle = if self.ring.order() <= self.bounds.oracle_max_order {
            let all = exhaustive_denominator_sets(self.ring, self.bounds)?;
            let refs: Vec<&Subset> = all.iter().collect();
            Some(
                maximal_by_inclusion(&refs)
                    .into_iter()
                    .map(|i| all[i].clone())
                    .collect::<Vec<_>>(),
            )
        } else {
            None
        };
        let (mut lhs, mut rhs, mut agree) = (true, true, true);
        for (k, ideal) in ideals.iter().enumerate() {
            let is_max = maximal.contains(&k);
            let sat = saturate(self.ring, ideal)?;
            let (q, _) = quotient_ring(self.ring, ideal)?;
            let mut sat_max = denominator_violation(self.ring, &sat)?.is_none()
                && ass_set(self.ring, &sat) == **ideal
                && is_left_localization_maximal(&q, self.bounds)?;
            if let Some(o) = &oracle {
                let in_oracle = o.contains(&sat);
                if in_oracle != sat_max {
                    d.witness("oracle agreement", ideal.to_string());
                    agree = false;
                }
                sat_max &= in_oracle;
            }
            if is_max != sat_max {
                d.witness("pointwise", ideal.to_string());
                agree = false;
            }
            lhs &= is_max;
            rhs &= sat_max;
        }
        let mut incomparable = true;
        for &a in &maximal {
            for &b in &maximal {
                if a != b && ideals[a].is_subset(&ideals[b]) {
                    incomparable = false;
                }
            }
        }
        d.cond("incomparable", incomparable);
        d.cond("pointwise", agree);
        d.cond("every localizable ideal maximal", lhs);
        d.cond("every saturation maximal", rhs);
        Ok((true, lhs, rhs, agree && incomparable))
    }

    fn ll_cosets(&self, d: &mut Draft) -> Result<(bool, bool, bool, bool)> {
        let profile = self.profile()?;
        let phi = self.phi()?;
        let ll_quotient_zero = d.cond("ll(R/ll) = 0", phi.quotient_profile.ll_radical.is_zero());

        // L via every localizable ideal's saturation
        let mut l = Subset::empty(self.ring.order());
        for ideal in localizable_ideals(self.ring, self.bounds)? {
            l.union_with(&saturate(self.ring, &ideal)?);
        }
        let ll = profile.ll_radical.to_vec();
        let coset_in_l = |x: usize| ll.iter().all(|&a| l.contains(self.ring.add(x, a)));
        let closed = d.cond("L + ll in L", l.iter().all(coset_in_l));
        let mut rhs = true;
        for x in self.nil().complement().iter() {
            if !coset_in_l(x) {
                d.witness("ll-cosets of non-nilpotents in L", x);
                rhs = false;
                break;
            }
        }
        d.cond("ll-cosets of non-nilpotents in L", rhs);
        let wll = self.wll()?;
        let lhs = d.check("wll", wll);
        Ok((true, lhs, rhs, ll_quotient_zero && closed))
    }

    fn local_localizations(&self, d: &mut Draft) -> Result<(bool, bool, bool, bool)> {
        let (mut lhs, mut rhs, mut agree) = (true, true, true);
        for rec in &self.profile()?.records {
            let a = is_local(&rec.quotient);
            let b = ideal_defect(self.ring, &rec.set.complement()).is_none();
            if a != b {
                d.witness("pointwise", format!("S = {}", rec.set));
                agree = false;
            }
            lhs &= a;
            rhs &= b;
        }
        d.cond("localizations local", lhs);
        d.cond("complements ideals", rhs);
        Ok((true, lhs, rhs, agree))
    }

    fn cor_d28_conclusion(&self, d: &mut Draft) -> Result<bool> {
        let profile = self.profile()?;
        let cl = &profile.completely_localizable;
        let den = denominator_violation(self.ring, cl)?;
        if let Some(w) = den {
            d.witness("C_l denominator", w);
        }
        let a = d.cond("C_l denominator", den.is_none());
        let b = d.cond("ass(C_l) = ll", ass_set(self.ring, cl) == *profile.ll_radical);
        // R → ∏ R/ass_i is onto iff the image has ∏ |R/ass_i| elements
        let target: usize = profile.records.iter().map(|r| r.quotient.order()).product();
        let mut images: Vec<Vec<usize>> = self
            .ring
            .elements()
            .map(|x| profile.records.iter().map(|r| r.projection[x]).collect())
            .collect();
        images.sort();
        images.dedup();
        let c = d.cond("R/ll onto product of localizations", images.len() == target);

        // nil radical and localizable elements are pulled back from R/ll
        let phi = self.phi()?;
        let q = &phi.quotient;
        let preimage = |set: &Subset| {
            Subset::from_predicate(self.ring.order(), |x| set.contains(phi.projection[x]))
        };
        let q_nilrad = nil_radical(q)?;
        let e = d.cond(
            "nil radical pulled back from R/ll",
            *nil_radical(self.ring)? == preimage(&q_nilrad)
                && q_nilrad == jacobson_radical(q)?,
        );
        let f = d.cond(
            "L pulled back from R/ll",
            profile.localizable == preimage(&phi.quotient_profile.localizable),
        );
        let dec = central_idempotent_decomposition(q)?;
        let mut g = true;
        for f in &dec.factors {
            g &= local_nil_rad(f)?;
        }
        let g = d.cond("R/ll local factors", g);
        Ok(a && b && c && e && f && g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{matrix_ring, triangular_ring, zmod};

    #[test]
    fn registry() {
        let ids: Vec<_> = list_theorems().into_iter().map(|(i, _)| i).collect();
        assert_eq!(ids.len(), 16);
        assert!(ids.contains(&"thm-26Mar14"));
        assert!(ids.contains(&"thm-C2Dec12"));
        assert_eq!(
            verify_theorem(&zmod(2).unwrap(), "thm-0", &Bounds::default()).unwrap_err(),
            Error::UnknownTheorem("thm-0".into())
        );
    }

    #[test]
    fn documented_verdicts() {
        let b = Bounds::default();
        let v = verify_theorem(&zmod(12).unwrap(), "thm-24Dec12", &b).unwrap();
        assert!(v.applicable && v.lhs && v.rhs && v.pass);
        let t = triangular_ring(2, &zmod(2).unwrap()).unwrap();
        let v = verify_theorem(&t, "thm-24Dec12", &b).unwrap();
        assert!(!v.lhs && !v.rhs && v.pass);
        let m = matrix_ring(2, &zmod(2).unwrap()).unwrap();
        let v = verify_theorem(&m, "lem-a26Mar14", &b).unwrap();
        assert!(!v.lhs && !v.rhs && v.pass);
    }

    #[test]
    fn verify_all_small_rings() {
        let b = Bounds::default();
        for r in [
            zmod(6).unwrap(),
            zmod(4).unwrap(),
            triangular_ring(2, &zmod(2).unwrap()).unwrap(),
        ] {
            let vs = verify_all(&r, &b).unwrap();
            assert_eq!(vs.len(), 16);
            for v in vs {
                assert!(v.pass, "{} failed on {}: {:?}", v.id, v.ring, v);
            }
        }
    }
}
