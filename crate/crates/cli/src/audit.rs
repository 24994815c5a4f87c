//! Fixed registry of structural claims, each re-checked by brute force on a
//! given code.
//!
//! Every entry is computed independently from enumerated codewords. A cap
//! error turns an entry into `not-applicable` with the reason, and a zero
//! code makes every entry not applicable.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use z2z4::{
    audit_cyclic_paut, check_g1_row_units, even_weight_criterion, find_relative_structure,
    is_two_distance, paut, paut_order_formula, predicted_single_gen_weights, verify_group,
    AdditiveCode, Error, GeneratorStats, Limits, RelativeStructure, TwoDistance,
};

use crate::reference::recorded_paut_listing;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Holds,
    Fails,
    NotApplicable,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Holds => "holds",
            Status::Fails => "fails",
            Status::NotApplicable => "not-applicable",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditEntry {
    pub id: &'static str,
    pub statement: &'static str,
    pub status: Status,
    pub details: String,
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub alpha: usize,
    pub beta: usize,
    pub entries: Vec<AuditEntry>,
}

impl AuditReport {
    pub fn entry(&self, id: &str) -> Option<&AuditEntry> {
        self.entries.iter().find(|e| e.id == id)
    }
}

/// Stable audit IDs with their statements, in report order.
pub const REGISTRY: &[(&str, &str)] = &[
    (
        "thm-gray-isometry",
        "Gray map carries Lee distance to Hamming distance",
    ),
    (
        "thm-gray-two-distance",
        "Gray image of a two-distance code is two-distance with the same distances",
    ),
    (
        "claim-two-distance-relative",
        "an additive code is relative two-weight iff it is two-distance",
    ),
    (
        "thm-m1-even",
        "in a relative two-weight code C(m1, m), m1 is even",
    ),
    (
        "thm-gray-relative",
        "Gray image of C(m1, m) is a binary relative two-weight code (m1, m)",
    ),
    (
        "thm-replication",
        "t-fold replication of C(m1, m) is relative two-weight (t m1, t m)",
    ),
    (
        "thm-even-weight-iff",
        "all weights even iff (1..1|2..2) lies in the dual",
    ),
    (
        "cor-even-weight-relative",
        "even-weight criterion restricted to relative two-weight codes",
    ),
    (
        "ext-dual-cardinality",
        "|C| * |dual(C)| = 2^alpha * 4^beta (external identity)",
    ),
    (
        "thm-g1-row-units",
        "each generator row of C1 has 0 or m1/2 quaternary units",
    ),
    (
        "thm-single-gen-weights",
        "for C = <(u|v)>: m1 = 2k and m = l + 2s + k",
    ),
    (
        "prop-paut-order",
        "for C = <(u|v)>: |PAut| = (l! + (alpha-l)! - 1)(k! + s! + q! + r! - 3)",
    ),
    (
        "ex-paut-listing",
        "recorded PAut listing equals the exhaustive group",
    ),
    (
        "thm-cyclic-iff-full-paut",
        "C is cyclic iff PAut(C) = S_alpha x S_beta",
    ),
];

struct Outcome {
    status: Status,
    details: String,
    counterexample: Option<String>,
}

impl Outcome {
    fn holds(details: impl Into<String>) -> Self {
        Outcome {
            status: Status::Holds,
            details: details.into(),
            counterexample: None,
        }
    }

    fn fails(details: impl Into<String>, counterexample: impl Into<String>) -> Self {
        Outcome {
            status: Status::Fails,
            details: details.into(),
            counterexample: Some(counterexample.into()),
        }
    }

    fn na(reason: impl Into<String>) -> Self {
        Outcome {
            status: Status::NotApplicable,
            details: reason.into(),
            counterexample: None,
        }
    }

    fn check(
        ok: bool,
        details: impl Into<String>,
        counterexample: impl FnOnce() -> String,
    ) -> Self {
        if ok {
            Outcome::holds(details)
        } else {
            Outcome::fails(details, counterexample())
        }
    }
}

type Check<'a> = Box<dyn FnOnce() -> Result<Outcome, Error> + 'a>;

/// Runs every registered check on `code`.
///
/// `t` is the replication factor for `thm-replication`.
pub fn check_theorems(code: &AdditiveCode, limits: &Limits, t: usize) -> AuditReport {
    let entries = if code.is_zero_code() {
        REGISTRY
            .iter()
            .map(|&(id, statement)| AuditEntry {
                id,
                statement,
                status: Status::NotApplicable,
                details: "zero code".into(),
                counterexample: None,
            })
            .collect()
    } else {
        run_checks(code, limits, t)
    };
    AuditReport {
        alpha: code.alpha(),
        beta: code.beta(),
        entries,
    }
}

fn run_checks(code: &AdditiveCode, limits: &Limits, t: usize) -> Vec<AuditEntry> {
    let limit = limits.enumerate;
    let relative = find_relative_structure(code, limit);
    let rel = || -> Result<Option<&RelativeStructure>, Error> {
        relative.as_ref().map(Option::as_ref).map_err(Clone::clone)
    };
    let no_structure = "no relative two-weight structure";

    let checks: Vec<Check> = vec![
        Box::new(|| gray_isometry(code, limit)),
        Box::new(|| {
            let Some(TwoDistance::Pair(lo, hi)) = is_two_distance(code, true, limit)? else {
                return Ok(Outcome::na("not two-distance"));
            };
            let distances = code.gray_image(limit)?.distances();
            let bad: Vec<_> = distances
                .iter()
                .filter(|d| **d != lo && **d != hi)
                .collect();
            Ok(Outcome::check(
                bad.is_empty(),
                format!("distances {{{lo}, {hi}}}; Gray image distances {distances:?}"),
                || format!("Gray distance {} outside {{{lo}, {hi}}}", bad[0]),
            ))
        }),
        Box::new(|| {
            let two = is_two_distance(code, true, limit)?;
            let found = rel()?;
            let details = format!(
                "two-distance: {}, relative structure: {}",
                two.is_some(),
                found.is_some()
            );
            Ok(Outcome::check(
                two.is_some() == found.is_some(),
                details,
                || {
                    if two.is_some() {
                        "two-distance, but no weight class together with zero is a subgroup".into()
                    } else {
                        "relative two-weight, but not two-distance".into()
                    }
                },
            ))
        }),
        Box::new(|| {
            let Some(r) = rel()? else {
                return Ok(Outcome::na(no_structure));
            };
            Ok(Outcome::check(
                r.m1 % 2 == 0,
                format!("m1 = {}", r.m1),
                || {
                    format!(
                        "C1 generated by {:?} has odd weight {}",
                        gens(&r.subcode.sub),
                        r.m1
                    )
                },
            ))
        }),
        Box::new(|| {
            let Some(r) = rel()? else {
                return Ok(Outcome::na(no_structure));
            };
            let sub = r.subcode.sub.enumerate(limit)?;
            let words = code.enumerate(limit)?;
            let image = code.gray_image(limit)?;
            let bad = words.iter().find(|w| {
                let hw = w.gray_image().hamming_weight();
                if sub.contains(*w) {
                    !w.is_zero() && hw != r.m1
                } else {
                    hw != r.m
                }
            });
            let details = format!(
                "(m1, m) = ({}, {}); Gray image linear: {}",
                r.m1,
                r.m,
                image.is_linear()
            );
            Ok(Outcome::check(bad.is_none(), details, || {
                let w = bad.expect("checked");
                format!("{w} has Gray weight {}", w.gray_image().hamming_weight())
            }))
        }),
        Box::new(|| {
            let Some(r) = rel()? else {
                return Ok(Outcome::na(no_structure));
            };
            let replicated = code.replicate(t)?;
            let expected_sub = r.subcode.sub.replicate(t)?;
            let found = find_relative_structure(&replicated, limit)?;
            let ok = match &found {
                Some(f) => {
                    (f.m1, f.m) == (t * r.m1, t * r.m)
                        && f.subcode.sub.same_codewords(&expected_sub, limit)?
                }
                None => false,
            };
            let got = found.as_ref().map(|f| (f.m1, f.m));
            Ok(Outcome::check(
                ok,
                format!(
                    "t = {t}: expected ({}, {}), found {got:?}",
                    t * r.m1,
                    t * r.m
                ),
                || format!("replication by {t} gives {got:?}"),
            ))
        }),
        Box::new(|| {
            let check = even_weight_criterion(code, limit)?;
            Ok(Outcome::check(
                check.all_even == check.dual_has_one_two,
                format!(
                    "all even: {}, (1..1|2..2) in dual: {}",
                    check.all_even, check.dual_has_one_two
                ),
                || "the two sides differ".into(),
            ))
        }),
        Box::new(|| {
            if rel()?.is_none() {
                return Ok(Outcome::na(no_structure));
            }
            let check = even_weight_criterion(code, limit)?;
            Ok(Outcome::check(
                check.all_even == check.dual_has_one_two,
                format!(
                    "all even: {}, (1..1|2..2) in dual: {}",
                    check.all_even, check.dual_has_one_two
                ),
                || "the two sides differ".into(),
            ))
        }),
        Box::new(|| {
            let dual = code.dual(limits)?;
            let size = code.size(limit)? as u128;
            let dual_size = dual.size(limit)? as u128;
            let ambient = code.ambient_size();
            Ok(Outcome::check(
                size * dual_size == ambient,
                format!("external identity: {size} * {dual_size} vs {ambient}"),
                || format!("{size} * {dual_size} != {ambient}"),
            ))
        }),
        Box::new(|| {
            let Some(r) = rel()? else {
                return Ok(Outcome::na(no_structure));
            };
            let rows = check_g1_row_units(r);
            let bad = rows.iter().find(|e| !e.pass);
            let summary: Vec<String> = rows
                .iter()
                .map(|e| format!("{}: {}", e.row, e.units))
                .collect();
            Ok(Outcome::check(
                bad.is_none(),
                format!("m1 = {}; units per row: {}", r.m1, summary.join(", ")),
                || {
                    let e = bad.expect("checked");
                    format!("row {} has {} units", e.row, e.units)
                },
            ))
        }),
        Box::new(|| {
            let [g] = code.generators() else {
                return Ok(Outcome::na("code is not given by a single generator"));
            };
            let Some(r) = rel()? else {
                return Ok(Outcome::na(no_structure));
            };
            let predicted = predicted_single_gen_weights(&GeneratorStats::of(g));
            Ok(Outcome::check(
                predicted == (r.m1, r.m),
                format!("found ({}, {}), predicted {predicted:?}", r.m1, r.m),
                || format!("generator {g}"),
            ))
        }),
        Box::new(|| {
            let [g] = code.generators() else {
                return Ok(Outcome::na("code is not given by a single generator"));
            };
            let formula = paut_order_formula(&GeneratorStats::of(g), code.alpha())?;
            let order = paut(code, limits)?.order();
            Ok(Outcome::check(
                formula == order,
                format!("formula {formula}, exhaustive {order}"),
                || format!("generator {g}: formula {formula} vs exhaustive {order}"),
            ))
        }),
        Box::new(|| {
            let Some(listing) = recorded_paut_listing(code, limit) else {
                return Ok(Outcome::na("no recorded listing for this code"));
            };
            let group = paut(code, limits)?;
            let closed = verify_group(code.alpha(), code.beta(), &listing).is_ok();
            let equal = &listing == group.elements();
            let details = format!(
                "recorded {} elements (closed: {closed}), exhaustive {}",
                listing.len(),
                group.order()
            );
            Ok(Outcome::check(equal, details, || {
                let missing: BTreeSet<_> = group.elements().difference(&listing).collect();
                let extra: BTreeSet<_> = listing.difference(group.elements()).collect();
                format!(
                    "missing from listing: {}; not automorphisms: {}",
                    join(missing),
                    join(extra)
                )
            }))
        }),
        Box::new(|| {
            let audit = audit_cyclic_paut(code, limits)?;
            Ok(Outcome::check(
                audit.theorem_holds,
                format!("cyclic: {}, PAut full: {}", audit.cyclic, audit.paut_full),
                || {
                    if audit.cyclic {
                        "cyclic but PAut is a proper subgroup".into()
                    } else {
                        "PAut is full but the code is not cyclic".into()
                    }
                },
            ))
        }),
    ];

    REGISTRY
        .iter()
        .zip(checks)
        .map(|(&(id, statement), check)| {
            let outcome = match check() {
                Ok(o) => o,
                Err(e @ (Error::SizeCap { .. } | Error::SearchCap { .. })) => {
                    Outcome::na(e.to_string())
                }
                Err(e) => Outcome::na(format!("error: {e}")),
            };
            AuditEntry {
                id,
                statement,
                status: outcome.status,
                details: outcome.details,
                counterexample: outcome.counterexample,
            }
        })
        .collect()
}

fn gray_isometry(code: &AdditiveCode, limit: u128) -> Result<Outcome, Error> {
    let words: Vec<_> = code.enumerate(limit)?.iter().cloned().collect();
    let pairs = (words.len() as u128).pow(2);
    if pairs > limit {
        return Err(Error::SizeCap {
            what: "codeword pairs",
            bound: pairs,
            limit,
        });
    }
    for a in &words {
        let ga = a.gray_image();
        for b in &words {
            let lee = a.lee_distance(b)?;
            let ham = ga.hamming_distance(&b.gray_image())?;
            if lee != ham {
                return Ok(Outcome::fails(
                    format!("{pairs} pairs checked"),
                    format!("{a}, {b}: Lee {lee}, Hamming {ham}"),
                ));
            }
        }
    }
    Ok(Outcome::holds(format!("{pairs} codeword pairs checked")))
}

fn gens(code: &AdditiveCode) -> Vec<String> {
    code.generators().iter().map(|g| g.to_string()).collect()
}

fn join<T: fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    let parts: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    if parts.is_empty() {
        "none".into()
    } else {
        parts.join(" ")
    }
}
