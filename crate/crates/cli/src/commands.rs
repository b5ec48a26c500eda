use std::fmt::Write as _;

use anyhow::{bail, Result};
use serde_json::{json, Value};
use triplewise::conditions::{self, Condition};
use triplewise::cycles::{
    check_corollary1, check_corollary2, check_theorem1, disjoint_cycles, find_strict_cycles,
    TheoremVerdict,
};
use triplewise::oi::{self, balanced_decomposition_triple, classify_set};
use triplewise::oracle::{self, CensusReport, Mode, NecessityVerdict, SufficiencyOutcome};
use triplewise::reduction::{reduce, ReducedStructure};
use triplewise::{
    aggregate, margins, parse_ordering, AlternativeSet, PairOutcome, PairwiseCounts, Profile,
    Triple, TripleOrdering, TripleProfile,
};

use crate::report::{id_list, ids, labeled_witness, names, ordering, table, triple_text, Output};

/// Restricts to the triple, keeping its alternatives as the profile's set.
fn restricted(profile: &Profile, triple: Option<Triple>) -> Result<Profile> {
    match triple {
        Some(t) => Ok(profile.restrict(t)?.to_profile()?),
        None => Ok(profile.clone()),
    }
}

fn relation_text(ordering: &str) -> String {
    ordering.replace('>', " P ").replace('=', " I ")
}

pub fn aggregate_cmd(profile: &Profile, triple: Option<Triple>) -> Result<Output> {
    let p = restricted(profile, triple)?;
    let alts = p.alternatives();
    let counts = PairwiseCounts::of(&p);
    let m = margins(&p);
    let relation = aggregate(&p);
    let mut text = String::new();
    let mut pairs = Vec::new();
    for (a, b, outcome) in relation.pairs() {
        let (na, nb) = (alts.name(a), alts.name(b));
        let verdict = match outcome {
            PairOutcome::First => format!("{na} P {nb}"),
            PairOutcome::Second => format!("{nb} P {na}"),
            PairOutcome::Tie => format!("{na} I {nb}"),
        };
        writeln!(
            text,
            "N({na}P{nb})={}  N({nb}P{na})={}  N({na}I{nb})={}  m={:<3} {verdict}",
            counts.strict(a, b),
            counts.strict(b, a),
            counts.indifferent(a, b),
            m.get(a, b)
        )?;
        pairs.push(json!({
            "pair": [na, nb],
            "first_over_second": counts.strict(a, b),
            "second_over_first": counts.strict(b, a),
            "indifferent": counts.indifferent(a, b),
            "margin": m.get(a, b),
            "outcome": match outcome {
                PairOutcome::First => na,
                PairOutcome::Second => nb,
                PairOutcome::Tie => "tie",
            },
        }));
    }
    let social = relation.as_ordering().map(|o| o.display(alts).to_string());
    let witness = relation
        .witness()
        .map(|w| w.map(|i| alts.name(i).to_string()));
    match (&social, &witness) {
        (Some(o), _) => writeln!(text, "{} (transitive)", relation_text(o))?,
        (None, Some([a, b, c])) => {
            writeln!(text, "intransitive: {a} R {b}, {b} R {c}, but {c} P {a}")?
        }
        (None, None) => unreachable!("an intransitive relation has a witness"),
    }
    let result = json!({
        "alternatives": alts.iter().map(|a| a.as_str()).collect::<Vec<_>>(),
        "voters": p.len(),
        "pairs": pairs,
        "transitive": relation.is_transitive(),
        "ordering": social,
        "witness": witness,
    });
    Ok(Output::new(text, result))
}

pub fn check_cmd(profile: &Profile, triples: &[Triple], summary: bool) -> Result<Output> {
    let alts = profile.alternatives();
    let mut text = String::new();
    let mut results = Vec::new();
    let mut witnesses = Vec::new();
    let mut rows = Vec::new();
    for &triple in triples {
        let tp = profile.restrict(triple)?;
        let labels = names(alts, triple);
        let report = conditions::report(&tp);
        let mut verdicts = Vec::new();
        let mut row = vec![triple_text(&labels)];
        if !summary {
            writeln!(
                text,
                "triple {}: {}",
                triple_text(&labels),
                if report.any_satisfied {
                    "some condition satisfied"
                } else {
                    "no condition satisfied"
                }
            )?;
        }
        for v in &report.verdicts {
            let status = match (v.holds, v.applicable) {
                (true, true) => "holds",
                (true, false) => "holds (n/a)",
                (false, true) => "violated",
                (false, false) => "violated (n/a)",
            };
            let described = v.witness.as_ref().map(|w| w.describe(&labels, &tp));
            if !summary {
                writeln!(
                    text,
                    "  {:<22}{:<16}{}",
                    v.condition.name(),
                    status,
                    described.as_deref().unwrap_or("")
                )?;
            }
            row.push(
                match (v.holds, v.applicable) {
                    (true, true) => "yes",
                    (true, false) => "n/a",
                    (false, _) => "no",
                }
                .to_string(),
            );
            if let Some(d) = &described {
                witnesses.push(json!({
                    "triple": labels,
                    "condition": v.condition.name(),
                    "holds": v.holds,
                    "text": d,
                }));
            }
            verdicts.push(json!({
                "condition": v.condition.name(),
                "holds": v.holds,
                "applicable": v.applicable,
                "witness": v.witness.as_ref().map(|w| labeled_witness(w, &labels)),
            }));
        }
        row.push(if report.any_satisfied { "yes" } else { "no" }.to_string());
        rows.push(row);
        results.push(json!({
            "triple": labels,
            "any_satisfied": report.any_satisfied,
            "verdicts": verdicts,
        }));
    }
    if summary {
        let mut header = vec!["triple"];
        header.extend(Condition::ALL.iter().map(|c| short_name(*c)));
        header.push("any");
        text = table(&header, &rows);
    }
    Ok(Output {
        text,
        result: json!({ "triples": results }),
        witnesses,
    })
}

fn short_name(c: Condition) -> &'static str {
    match c {
        Condition::Dichotomous => "dich",
        Condition::Echoic => "echo",
        Condition::Antagonistic => "antag",
        Condition::ValueRestriction => "VR",
        Condition::Taboo => "taboo",
        Condition::ExtremalRestriction => "ER",
        Condition::LimitedAgreement => "LA",
        Condition::CycleBalance => "CB",
    }
}

fn reduced(profile: &Profile, triple: Triple) -> Result<(TripleProfile, ReducedStructure)> {
    let tp = profile.restrict(triple)?;
    Ok((tp, reduce(profile, triple)?))
}

pub fn reduce_cmd(profile: &Profile, triples: &[Triple], summary: bool) -> Result<Output> {
    let alts = profile.alternatives();
    let mut text = String::new();
    let mut results = Vec::new();
    let mut rows = Vec::new();
    for &triple in triples {
        let (tp, rs) = reduced(profile, triple)?;
        let labels = names(alts, triple);
        let form = rs.form()?;
        let show = |t: TripleOrdering| ordering(t, &labels);
        let trace: Vec<Value> = rs
            .trace
            .iter()
            .map(|r| {
                json!({
                    "rule": r.rule.name(),
                    "consumed": r.consumed.iter()
                        .map(|&(v, t)| json!({ "voter": v.0, "ordering": show(t) }))
                        .collect::<Vec<_>>(),
                    "produced": r.produced.iter().map(|&t| show(t)).collect::<Vec<_>>(),
                })
            })
            .collect();
        let residual: Vec<Value> = rs
            .residual
            .entries()
            .iter()
            .map(|&(v, t)| json!({ "voter": v.0, "ordering": show(t) }))
            .collect();
        rows.push(vec![
            triple_text(&labels),
            rs.trace.len().to_string(),
            rs.residual.len().to_string(),
            form.to_string(),
        ]);
        if !summary {
            writeln!(text, "triple {}", triple_text(&labels))?;
            if !rs.dropped.is_empty() {
                writeln!(text, "  dropped unconcerned: {}", id_list(&rs.dropped))?;
            }
            for (i, r) in rs.trace.iter().enumerate() {
                let consumed: Vec<String> = r
                    .consumed
                    .iter()
                    .map(|&(v, t)| format!("{v} ({})", show(t)))
                    .collect();
                let produced: Vec<String> = r.produced.iter().map(|&t| show(t)).collect();
                writeln!(
                    text,
                    "  step {}: {} consumes {} produces {}",
                    i + 1,
                    r.rule,
                    consumed.join(", "),
                    if produced.is_empty() {
                        "nothing".to_string()
                    } else {
                        produced.join(", ")
                    }
                )?;
            }
            let residual_text: Vec<String> = rs
                .residual
                .entries()
                .iter()
                .map(|&(v, t)| format!("{v} ({})", show(t)))
                .collect();
            writeln!(
                text,
                "  residual: {}",
                if residual_text.is_empty() {
                    "empty".to_string()
                } else {
                    residual_text.join(", ")
                }
            )?;
            writeln!(text, "  form: {form}")?;
        }
        results.push(json!({
            "triple": labels,
            "dropped": ids(&rs.dropped),
            "trace": trace,
            "residual": residual,
            "form": form.to_string(),
            "k": form.k,
            "l": form.l,
            "margins_preserved": rs.residual.margins() == tp.margins(),
        }));
    }
    if summary {
        text = table(&["triple", "steps", "residual", "form"], &rows);
    }
    Ok(Output::new(text, json!({ "triples": results })))
}

pub fn classify_cmd(profile: &Profile, triples: &[Triple]) -> Result<Output> {
    let alts = profile.alternatives();
    let mut text = String::new();
    let mut results = Vec::new();
    for &triple in triples {
        let (_, rs) = reduced(profile, triple)?;
        let labels = names(alts, triple);
        let form = rs.form()?;
        writeln!(text, "{} {form}", triple_text(&labels))?;
        results.push(json!({
            "triple": labels,
            "form": form.to_string(),
            "k": form.k,
            "l": form.l,
        }));
    }
    Ok(Output::new(text, json!({ "triples": results })))
}

pub fn cycles_cmd(profile: &Profile, triples: &[Triple], summary: bool) -> Result<Output> {
    let alts = profile.alternatives();
    let mut text = String::new();
    let mut results = Vec::new();
    let mut rows = Vec::new();
    for &triple in triples {
        let labels = names(alts, triple);
        let found = find_strict_cycles(profile, triple)?;
        let disjoint = disjoint_cycles(&profile.restrict(triple)?);
        rows.push(vec![
            triple_text(&labels),
            found.len().to_string(),
            disjoint.len().to_string(),
        ]);
        if !summary {
            writeln!(
                text,
                "triple {}: {} cycle member set(s), {} disjoint",
                triple_text(&labels),
                found.len(),
                disjoint.len()
            )?;
            for f in &found {
                writeln!(
                    text,
                    "  {} members {} labeling {}",
                    f.orientation,
                    id_list(&f.members),
                    triple_text(&alts.labels(f.labeling))
                )?;
            }
        }
        let found_json: Vec<Value> = found
            .iter()
            .map(|f| {
                json!({
                    "members": ids(&f.members),
                    "orientation": f.orientation.to_string(),
                    "labeling": alts.labels(f.labeling),
                })
            })
            .collect();
        results.push(json!({
            "triple": labels,
            "cycles": found_json,
            "disjoint_count": disjoint.len(),
        }));
    }
    if summary {
        text = table(&["triple", "member sets", "disjoint"], &rows);
    }
    Ok(Output::new(text, json!({ "triples": results })))
}

#[derive(Clone, Copy)]
pub enum TheoremKind {
    Theorem1,
    Corollary1,
    Corollary2,
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn theorem_cmd(
    profile: &Profile,
    triples: &[Triple],
    kind: TheoremKind,
    summary: bool,
) -> Result<Output> {
    let alts = profile.alternatives();
    let mut text = String::new();
    let mut results = Vec::new();
    let mut rows = Vec::new();
    for &triple in triples {
        let labels = names(alts, triple);
        let v: TheoremVerdict = match kind {
            TheoremKind::Theorem1 => check_theorem1(profile, triple)?,
            TheoremKind::Corollary1 => check_corollary1(profile, triple)?,
            TheoremKind::Corollary2 => check_corollary2(profile, triple)?,
        };
        let labeling = v.labeling_used.map(|l| alts.labels(l));
        rows.push(vec![
            triple_text(&labels),
            yes_no(v.premises_hold).into(),
            yes_no(v.condition_holds).into(),
            yes_no(v.predicted_transitive).into(),
            yes_no(v.actual_transitive).into(),
        ]);
        if !summary {
            writeln!(text, "triple {}", triple_text(&labels))?;
            writeln!(
                text,
                "  premises: {}{}",
                if v.premises_hold { "hold" } else { "fail" },
                if v.premises_hold {
                    format!(" (cycle members {})", id_list(&v.cycle_members))
                } else {
                    String::new()
                }
            )?;
            let condition = match (&labeling, v.condition_holds) {
                (Some(l), true) => format!("holds under labeling {}", triple_text(l)),
                (None, true) => "holds".to_string(),
                (_, false) => "fails".to_string(),
            };
            writeln!(text, "  condition: {condition}")?;
            writeln!(
                text,
                "  predicted transitive: {}",
                yes_no(v.predicted_transitive)
            )?;
            writeln!(text, "  actual transitive: {}", yes_no(v.actual_transitive))?;
        }
        results.push(json!({
            "triple": labels,
            "premises_hold": v.premises_hold,
            "condition_holds": v.condition_holds,
            "labeling_used": labeling,
            "predicted_transitive": v.predicted_transitive,
            "actual_transitive": v.actual_transitive,
            "cycle_members": ids(&v.cycle_members),
            "remainder": ids(&v.remainder),
        }));
    }
    if summary {
        text = table(
            &["triple", "premises", "condition", "predicted", "actual"],
            &rows,
        );
    }
    Ok(Output::new(text, json!({ "triples": results })))
}

pub fn decompose_cmd(profile: &Profile, triples: &[Triple], bound: usize) -> Result<Output> {
    let alts = profile.alternatives();
    let mut text = String::new();
    let mut results = Vec::new();
    for &triple in triples {
        let labels = names(alts, triple);
        let tp = profile.restrict(triple)?;
        let class = classify_set(&tp.to_profile()?);
        let d = balanced_decomposition_triple(&tp, bound)?;
        writeln!(text, "triple {}", triple_text(&labels))?;
        writeln!(
            text,
            "  indifferent: {}  ordinal: {}",
            yes_no(class.is_indifferent),
            yes_no(class.is_ordinal)
        )?;
        match &d {
            Some(d) => {
                writeln!(text, "  balanced part: {}", id_list(&d.balanced_part))?;
                writeln!(
                    text,
                    "  remainder: {} (ordinal: {})",
                    id_list(&d.remainder),
                    yes_no(d.remainder_ordinal)
                )?;
            }
            None => writeln!(
                text,
                "  no balanced decomposition with an ordinal remainder"
            )?,
        }
        results.push(json!({
            "triple": labels,
            "is_indifferent": class.is_indifferent,
            "is_ordinal": class.is_ordinal,
            "decomposition": d.map(|d| json!({
                "balanced_part": ids(&d.balanced_part),
                "remainder": ids(&d.remainder),
                "remainder_ordinal": d.remainder_ordinal,
            })),
        }));
    }
    Ok(Output::new(text, json!({ "triples": results })))
}

pub fn axioms_cmd(labels: &[String; 3], bound: usize) -> Result<Output> {
    let report = oi::verify_axioms(bound, labels)?;
    let mut text = format!(
        "{} sets of at most {} voters over {}\n",
        report.sets,
        report.n_bound,
        triple_text(labels)
    );
    for r in &report.results {
        writeln!(
            text,
            "axiom {} ({}): {} ({} checks){}",
            r.axiom,
            r.scope,
            if r.passed { "pass" } else { "FAIL" },
            r.checked,
            r.counterexample
                .as_ref()
                .map(|c| format!(", counterexample {c}"))
                .unwrap_or_default()
        )?;
    }
    writeln!(
        text,
        "opposite-set example equivalent: {}",
        yes_no(report.example_equivalent)
    )?;
    let result = serde_json::to_value(&report)?;
    Ok(Output::new(text, result))
}

pub fn type_set(name: &str) -> Result<Vec<TripleOrdering>> {
    Ok(match name {
        "all" => TripleOrdering::ALL.to_vec(),
        "concerned" => TripleOrdering::ALL[..12].to_vec(),
        "strict" => TripleOrdering::ALL[..6].to_vec(),
        other => bail!("unknown type set `{other}` (expected all, concerned or strict)"),
    })
}

pub fn census_text(report: &CensusReport) -> Result<String> {
    let mut text = format!(
        "n={} ({:?}): {} profiles, {} transitive\n",
        report.n, report.mode, report.total_profiles, report.transitive_count
    );
    let rows: Vec<Vec<String>> = report
        .per_condition
        .iter()
        .map(|(c, k)| {
            vec![
                c.clone(),
                k.holds.to_string(),
                k.holds_and_transitive.to_string(),
            ]
        })
        .collect();
    text.push_str(&table(
        &["condition", "holds", "holds_and_transitive"],
        &rows,
    ));
    writeln!(
        text,
        "margin spot checks: {} ({} mismatches)",
        report.margin_spot_checks, report.margin_mismatches
    )?;
    Ok(text)
}

pub fn census_cmd(
    n: usize,
    types: &str,
    mode: Mode,
    budget: u128,
) -> Result<(Output, CensusReport)> {
    let types = type_set(types)?;
    let report = oracle::transitivity_census(n, &types, mode, budget)?;
    let output = Output::new(census_text(&report)?, serde_json::to_value(&report)?);
    Ok((output, report))
}

fn xyz_orderings(text: &str) -> Result<Vec<TripleOrdering>> {
    let alts = AlternativeSet::from_names(["x", "y", "z"])?;
    text.split(';')
        .map(|s| Ok(TripleOrdering::from_weak(&parse_ordering(s, &alts)?)?))
        .collect()
}

pub fn verify_condition_cmd(
    condition: Condition,
    n_max: usize,
    mode: Mode,
    budget: u128,
) -> Result<Output> {
    let labels = triplewise::triple::default_labels();
    let outcome = oracle::verify_sufficiency(condition, n_max, mode, budget)?;
    let text = match &outcome {
        SufficiencyOutcome::Pass { profiles_checked } => format!(
            "{}: sufficient for every profile of at most {n_max} voters ({profiles_checked} checked)\n",
            condition.name()
        ),
        SufficiencyOutcome::Counterexample { profile } => format!(
            "{}: counterexample {}\n",
            condition.name(),
            profile.iter().map(|&t| ordering(t, &labels)).collect::<Vec<_>>().join(", ")
        ),
    };
    let result = match &outcome {
        SufficiencyOutcome::Pass { profiles_checked } => json!({
            "condition": condition.name(),
            "n_max": n_max,
            "outcome": "pass",
            "profiles_checked": profiles_checked,
        }),
        SufficiencyOutcome::Counterexample { profile } => json!({
            "condition": condition.name(),
            "n_max": n_max,
            "outcome": "counterexample",
            "profile": profile.iter().map(|&t| ordering(t, &labels)).collect::<Vec<_>>(),
        }),
    };
    Ok(Output::new(text, result))
}

pub fn verify_necessity_cmd(types: &str, count_bound: u32, budget: u128) -> Result<Output> {
    let labels = triplewise::triple::default_labels();
    let set = xyz_orderings(types)?;
    let report = oracle::verify_theorem_xi_necessity(&set, count_bound, budget)?;
    let shown: Vec<String> = report.types.iter().map(|&t| ordering(t, &labels)).collect();
    let (verdict, counts) = match &report.verdict {
        NecessityVerdict::Confirmed => ("confirmed", None),
        NecessityVerdict::Witness { counts } => ("witness", Some(counts.clone())),
        NecessityVerdict::NoneFoundWithinBound => ("none_found_within_bound", None),
        NecessityVerdict::Refuted { counts } => ("refuted", Some(counts.clone())),
    };
    let mut text = format!(
        "types {}: extremal restriction {}; {} assignments checked; {}",
        shown.join(", "),
        if report.er_holds { "holds" } else { "fails" },
        report.assignments_checked,
        verdict.replace('_', " ")
    );
    if let Some(c) = &counts {
        let parts: Vec<String> = shown
            .iter()
            .zip(c)
            .map(|(t, k)| format!("{k}x {t}"))
            .collect();
        write!(text, " ({})", parts.join(", "))?;
    }
    text.push('\n');
    let result = json!({
        "types": shown,
        "er_holds": report.er_holds,
        "assignments_checked": report.assignments_checked,
        "verdict": verdict,
        "counts": counts,
    });
    Ok(Output::new(text, result))
}
