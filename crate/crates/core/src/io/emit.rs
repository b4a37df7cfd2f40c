//! Text and `key = value` record output for reports, profiles and verdicts.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::classify::{Check, Report};
use crate::error::Error;
use crate::localization::MaxDenProfile;
use crate::theorems::Verdict;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Record,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "text" => Ok(Format::Text),
            "record" => Ok(Format::Record),
            other => Err(Error::InvalidExpression(format!(
                "unknown format `{other}` (expected text or record)"
            ))),
        }
    }
}

/// Lowercase key fragment: runs of characters outside `[a-z0-9.-]` become `_`.
fn key(name: &str) -> String {
    let mut out = String::new();
    for c in name.chars().flat_map(char::to_lowercase) {
        if c.is_ascii_alphanumeric() || c == '-' || c == '.' {
            out.push(c);
        } else if !out.ends_with('_') {
            out.push('_');
        }
    }
    out.trim_matches('_').to_string()
}

struct Lines(String);

impl Lines {
    fn kv(&mut self, k: &str, v: impl std::fmt::Display) {
        let _ = writeln!(self.0, "{k} = {v}");
    }

    fn check(&mut self, k: &str, c: Check) {
        self.kv(k, c.holds);
        if let Some(w) = c.witness {
            self.kv(&format!("{k}.witness"), w);
        }
    }
}

pub fn emit_report(r: &Report, format: Format) -> String {
    match format {
        Format::Record => report_record(r),
        Format::Text => report_text(r),
    }
}

fn report_record(r: &Report) -> String {
    let mut out = Lines(String::new());
    out.kv("ring", &r.label);
    out.kv("order", r.order);
    out.kv("units.count", r.units);
    out.kv("nil", &r.nilpotent);
    out.kv("nil.count", r.nilpotent.len());
    out.kv("nilrad", &r.nil_radical);
    out.kv("rad", &r.jacobson_radical);
    out.kv("ideals.count", r.ideals);
    out.kv("local", r.local);
    out.kv("decomp.count", r.decomposition.len());
    for (i, f) in r.decomposition.iter().enumerate() {
        let p = format!("decomp.{}", i + 1);
        out.kv(&format!("{p}.idempotent"), f.idempotent);
        out.kv(&format!("{p}.order"), f.order);
        out.kv(&format!("{p}.local"), f.local);
    }
    out.kv("maxden.count", r.maxden.len());
    for (i, m) in r.maxden.iter().enumerate() {
        let p = format!("maxden.{}", i + 1);
        out.kv(&format!("{p}.S"), &m.set);
        out.kv(&format!("{p}.ass"), &m.ass);
        out.kv(&format!("{p}.core"), &m.core);
        out.kv(&format!("{p}.loc.order"), m.localization_order);
        out.kv(&format!("{p}.loc.local"), m.localization_local);
    }
    out.kv("ll", &r.ll_radical);
    out.kv("L", &r.localizable);
    out.kv("L.count", r.localizable.len());
    out.kv("C", &r.completely_localizable);
    out.kv("class.semilocal", r.semilocal);
    out.check("class.left_localizable", r.left_localizable);
    out.check("class.wll", r.weakly_left_localizable);
    out.kv("class.loc_max", r.left_localization_maximal);
    out.0
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn witnessed(c: Check) -> String {
    match c.witness {
        Some(w) => format!("no (witness {w})"),
        None => yes(c.holds).to_string(),
    }
}

fn report_text(r: &Report) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "ring {} of order {}", r.label, r.order);
    let _ = writeln!(s, "  units: {}", r.units);
    let _ = writeln!(s, "  nilpotent elements: {} {}", r.nilpotent.len(), r.nilpotent);
    let _ = writeln!(s, "  nil radical: {}", r.nil_radical);
    let _ = writeln!(s, "  Jacobson radical: {}", r.jacobson_radical);
    let _ = writeln!(s, "  ideals: {}", r.ideals);
    let _ = writeln!(s, "  local: {}", yes(r.local));
    let factors: Vec<String> = r
        .decomposition
        .iter()
        .map(|f| {
            let kind = if f.local { "local" } else { "not local" };
            format!("e={} order {} {kind}", f.idempotent, f.order)
        })
        .collect();
    let _ = writeln!(s, "  central decomposition: {}", factors.join("; "));
    let _ = writeln!(s, "  maximal left denominator sets: {}", r.maxden.len());
    for (i, m) in r.maxden.iter().enumerate() {
        let _ = writeln!(
            s,
            "    {}. S = {}  ass = {}  core = {}  localization order {}{}",
            i + 1,
            m.set,
            m.ass,
            m.core,
            m.localization_order,
            if m.localization_local { " (local)" } else { "" }
        );
    }
    let _ = writeln!(s, "  left localization radical: {}", r.ll_radical);
    let _ = writeln!(s, "  left localizable elements: {} {}", r.localizable.len(), r.localizable);
    let _ = writeln!(s, "  completely left localizable: {}", r.completely_localizable);
    let _ = writeln!(s, "  left localizable ring: {}", witnessed(r.left_localizable));
    let _ = writeln!(s, "  weakly left localizable: {}", witnessed(r.weakly_left_localizable));
    let _ = writeln!(s, "  left localization maximal: {}", yes(r.left_localization_maximal));
    s
}

/// A maximal-denominator profile on its own (the `maxden` command).
pub fn emit_profile(label: &str, p: &MaxDenProfile, format: Format) -> String {
    match format {
        Format::Record => {
            let mut out = Lines(String::new());
            out.kv("ring", label);
            out.kv("maxden.count", p.records.len());
            for (i, rec) in p.records.iter().enumerate() {
                let k = format!("maxden.{}", i + 1);
                out.kv(&format!("{k}.S"), &rec.set);
                out.kv(&format!("{k}.ass"), &*rec.ass);
                out.kv(&format!("{k}.core"), &rec.core);
                out.kv(&format!("{k}.saturated"), rec.saturated);
                out.kv(&format!("{k}.loc.order"), rec.quotient.order());
            }
            out.kv("ll", &*p.ll_radical);
            out.kv("L", &p.localizable);
            out.kv("C", &p.completely_localizable);
            out.0
        }
        Format::Text => {
            let mut s = format!(
                "{label}: {} maximal left denominator set(s)\n",
                p.records.len()
            );
            for (i, rec) in p.records.iter().enumerate() {
                let _ = writeln!(
                    s,
                    "  {}. S = {}  ass = {}  core = {}  localization order {}",
                    i + 1,
                    rec.set,
                    *rec.ass,
                    rec.core,
                    rec.quotient.order()
                );
            }
            let _ = writeln!(s, "  ll = {}", *p.ll_radical);
            let _ = writeln!(s, "  L = {}", p.localizable);
            let _ = writeln!(s, "  C = {}", p.completely_localizable);
            s
        }
    }
}

pub fn emit_verdicts(verdicts: &[Verdict], format: Format) -> String {
    let mut out = String::new();
    for v in verdicts {
        match format {
            Format::Record => {
                let mut l = Lines(String::new());
                l.kv(&format!("{}.ring", v.id), &v.ring);
                l.kv(&format!("{}.applicable", v.id), v.applicable);
                l.kv(&format!("{}.lhs", v.id), v.lhs);
                l.kv(&format!("{}.rhs", v.id), v.rhs);
                l.kv(&format!("{}.pass", v.id), v.pass);
                for (name, value) in &v.conditions {
                    l.kv(&format!("{}.cond.{}", v.id, key(name)), value);
                }
                for (i, (name, w)) in v.witnesses.iter().enumerate() {
                    l.kv(&format!("{}.witness.{}", v.id, i + 1), format!("{}: {w}", key(name)));
                }
                out.push_str(&l.0);
            }
            Format::Text => {
                let status = if v.pass { "pass" } else { "FAIL" };
                let sides = if v.applicable {
                    format!("lhs={} rhs={}", v.lhs, v.rhs)
                } else {
                    "not applicable".to_string()
                };
                let _ = write!(out, "{status} {} [{}] {sides}", v.id, v.ring);
                if !v.witnesses.is_empty() {
                    let ws: Vec<String> =
                        v.witnesses.iter().map(|(n, w)| format!("{n}: {w}")).collect();
                    let _ = write!(out, " ({})", ws.join("; "));
                }
                out.push('\n');
            }
        }
    }
    out
}
