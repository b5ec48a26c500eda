//! Ordinal and indifferent sets of voters, opposite sets and balanced
//! decompositions, plus bounded exhaustive checks of the four framework
//! axioms.
//!
//! An indifferent set has all margins zero; its majority relation is
//! complete indifference. An ordinal set has a transitive majority
//! relation, so every indifferent set is also ordinal.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::alternative::Triple;
use crate::cycles::multisets;
use crate::error::{Error, Result};
use crate::majority::{aggregate, margins, MajorityRelation};
use crate::profile::{Profile, VoterId};
use crate::triple::{TripleMargins, TripleOrdering, TripleProfile};

/// Default voter bound for [`balanced_decomposition`].
pub const DECOMPOSITION_BOUND: usize = 14;

/// Largest set size accepted by [`verify_axioms`].
pub const AXIOM_BOUND: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetClassification {
    pub is_indifferent: bool,
    pub is_ordinal: bool,
}

pub fn classify_set(profile: &Profile) -> SetClassification {
    SetClassification {
        is_indifferent: margins(profile).is_zero(),
        is_ordinal: aggregate(profile).is_transitive(),
    }
}

pub fn classify_triple_set(tp: &TripleProfile) -> SetClassification {
    let m = tp.margins();
    SetClassification {
        is_indifferent: m.is_zero(),
        is_ordinal: m.is_transitive(),
    }
}

/// Every multiset of at most `max_size` orderings from `universe` whose
/// margins cancel those of `d1`, smallest first. Voter ids continue above
/// the largest id in `d1`. Enumeration grows as `|universe|^max_size`.
pub fn opposite_sets(
    d1: &TripleProfile,
    max_size: usize,
    universe: &[TripleOrdering],
) -> Vec<TripleProfile> {
    let target = -d1.margins();
    let base = d1
        .entries()
        .iter()
        .map(|&(v, _)| v.0)
        .max()
        .unwrap_or(0)
        .max(0);
    let mut out = Vec::new();
    for size in 0..=max_size {
        for idx in multisets(universe.len(), size) {
            let sum: TripleMargins = idx.iter().map(|&i| universe[i].margins()).sum();
            if sum == target {
                let entries = idx
                    .iter()
                    .enumerate()
                    .map(|(k, &i)| (VoterId(base + 1 + k as i64), universe[i]))
                    .collect();
                out.push(TripleProfile::new(d1.labels().clone(), entries));
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    /// Zero-margin part `T`, ascending ids.
    pub balanced_part: Vec<VoterId>,
    /// Everyone else, ascending ids.
    pub remainder: Vec<VoterId>,
    pub remainder_ordinal: bool,
}

/// Largest zero-margin voter subset whose complement is ordinal; ties go to
/// the lexicographically smallest id set.
pub fn balanced_decomposition(profile: &Profile, triple: Triple) -> Result<Option<Decomposition>> {
    balanced_decomposition_triple(&profile.restrict(triple)?, DECOMPOSITION_BOUND)
}

pub fn balanced_decomposition_triple(
    tp: &TripleProfile,
    bound: usize,
) -> Result<Option<Decomposition>> {
    let n = tp.len();
    if n > bound {
        return Err(Error::BoundExceeded {
            what: "voters in balanced decomposition".into(),
            bound,
        });
    }
    let mut voters: Vec<(VoterId, TripleMargins)> = tp
        .entries()
        .iter()
        .map(|&(v, t)| (v, t.margins()))
        .collect();
    voters.sort_by_key(|&(v, _)| v);
    let total = tp.margins();
    let mut best: Option<(usize, Vec<VoterId>)> = None;
    for mask in 0u32..(1u32 << n) {
        let size = mask.count_ones() as usize;
        if best.as_ref().is_some_and(|(s, _)| *s > size) {
            continue;
        }
        let chosen = |i: &usize| mask & (1 << i) != 0;
        let part: TripleMargins = (0..n).filter(chosen).map(|i| voters[i].1).sum();
        if !part.is_zero() || !(total - part).is_transitive() {
            continue;
        }
        let ids: Vec<VoterId> = (0..n).filter(chosen).map(|i| voters[i].0).collect();
        let better = match &best {
            None => true,
            Some((s, b)) => size > *s || ids < *b,
        };
        if better {
            best = Some((size, ids));
        }
    }
    Ok(best.map(|(_, balanced_part)| {
        let remainder: Vec<VoterId> = voters
            .iter()
            .map(|&(v, _)| v)
            .filter(|v| !balanced_part.contains(v))
            .collect();
        let rest = tp.filter(|v, _| remainder.contains(&v));
        Decomposition {
            balanced_part,
            remainder,
            remainder_ordinal: aggregate(&to_profile(&rest)).is_transitive(),
        }
    }))
}

fn to_profile(tp: &TripleProfile) -> Profile {
    tp.to_profile()
        .expect("triple profiles carry valid labels and distinct ids")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomResult {
    pub axiom: u8,
    /// `ordinal` when the identity is checked on ordinal sets only, `all`
    /// for every set.
    pub scope: String,
    pub checked: u64,
    pub passed: bool,
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub n_bound: usize,
    pub sets: usize,
    pub results: Vec<AxiomResult>,
    /// `{yPzIx, zPxIy}` and `{zIyPx}`, both opposite to `{xPyIz}`, have the
    /// same majority relation.
    pub example_equivalent: bool,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.passed) && self.example_equivalent
    }
}

struct Set {
    types: Vec<TripleOrdering>,
    profile: Profile,
    relation: MajorityRelation,
    margins: TripleMargins,
}

impl Set {
    fn new(labels: &[String; 3], types: Vec<TripleOrdering>, first_id: i64) -> Self {
        let entries = types
            .iter()
            .enumerate()
            .map(|(k, &t)| (VoterId(first_id + k as i64), t))
            .collect();
        let tp = TripleProfile::new(labels.clone(), entries);
        let profile = to_profile(&tp);
        Set {
            relation: aggregate(&profile),
            margins: tp.margins(),
            types,
            profile,
        }
    }

    fn describe(&self, labels: &[String; 3]) -> String {
        let parts: Vec<String> = self
            .types
            .iter()
            .map(|t| t.display(labels).to_string())
            .collect();
        format!("{{{}}}", parts.join(", "))
    }
}

fn same_relation(a: &MajorityRelation, b: &MajorityRelation) -> bool {
    a.pairs().eq(b.pairs())
}

struct Tally {
    axiom: u8,
    scope: &'static str,
    checked: u64,
    counterexample: Option<String>,
}

impl Tally {
    fn new(axiom: u8, scope: &'static str) -> Self {
        Tally {
            axiom,
            scope,
            checked: 0,
            counterexample: None,
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.counterexample = self.counterexample.or(other.counterexample);
        self
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(describe());
        }
    }

    fn finish(self) -> AxiomResult {
        AxiomResult {
            axiom: self.axiom,
            scope: self.scope.to_string(),
            checked: self.checked,
            passed: self.counterexample.is_none(),
            counterexample: self.counterexample,
        }
    }
}

/// Removes one copy of each ordering of `sub` from `whole`, if `sub` is a
/// sub-multiset.
fn subtract(whole: &[TripleOrdering], sub: &[TripleOrdering]) -> Option<Vec<TripleOrdering>> {
    let mut rest = whole.to_vec();
    for t in sub {
        let i = rest.iter().position(|r| r == t)?;
        rest.remove(i);
    }
    Some(rest)
}

/// Exhaustive check of the four axioms over every multiset of at most
/// `n_bound` orderings on the triple labelled `labels`.
pub fn verify_axioms(n_bound: usize, labels: &[String; 3]) -> Result<AxiomReport> {
    if n_bound > AXIOM_BOUND {
        return Err(Error::BoundExceeded {
            what: "voters per set in axiom verification".into(),
            bound: AXIOM_BOUND,
        });
    }
    let build = |first_id: i64| -> Vec<Set> {
        (0..=n_bound)
            .flat_map(|k| multisets(TripleOrdering::COUNT, k))
            .map(|idx| {
                let types = idx.iter().map(|&i| TripleOrdering::ALL[i]).collect();
                Set::new(labels, types, first_id)
            })
            .collect()
    };
    // disjoint id ranges so unions never collide
    let sets = build(1);
    let others = build(1 + n_bound as i64);
    let indifferent: Vec<&Set> = others.iter().filter(|s| s.margins.is_zero()).collect();

    let empty = &sets[0];
    let mut a1 = Tally::new(1, "all");
    a1.record(empty.relation.is_complete_indifference(), || "{}".into());

    let (a2_ordinal, a2_all) = sets
        .par_iter()
        .map(|o| {
            let mut ordinal = Tally::new(2, "ordinal");
            let mut all = Tally::new(2, "all");
            for i in &indifferent {
                let union = o.profile.union(&i.profile).expect("same alternatives");
                let ok = same_relation(&aggregate(&union), &o.relation);
                let describe = || format!("{} + {}", o.describe(labels), i.describe(labels));
                if o.relation.is_transitive() {
                    ordinal.record(ok, describe);
                }
                all.record(ok, describe);
            }
            (ordinal, all)
        })
        .reduce(
            || (Tally::new(2, "ordinal"), Tally::new(2, "all")),
            |a, b| (a.0.merge(b.0), a.1.merge(b.1)),
        );

    let a3 = sets
        .par_iter()
        .filter(|o| o.relation.is_transitive())
        .map(|o| {
            let mut tally = Tally::new(3, "ordinal");
            for i in indifferent.iter().filter(|i| !i.types.is_empty()) {
                let Some(rest) = subtract(&o.types, &i.types) else {
                    continue;
                };
                let reduced = Set::new(labels, rest, 1);
                tally.record(same_relation(&reduced.relation, &o.relation), || {
                    format!("{} - {}", o.describe(labels), i.describe(labels))
                });
            }
            tally
        })
        .reduce(|| Tally::new(3, "ordinal"), Tally::merge);

    let mut by_margins: BTreeMap<(i64, i64, i64), Vec<&Set>> = BTreeMap::new();
    for s in &others {
        by_margins
            .entry((s.margins.xy, s.margins.yz, s.margins.zx))
            .or_default()
            .push(s);
    }
    let mut a4 = Tally::new(4, "all");
    for d in &sets {
        let m = -d.margins;
        let Some(opposites) = by_margins.get(&(m.xy, m.yz, m.zx)) else {
            continue;
        };
        let first = opposites[0];
        for other in &opposites[1..] {
            let joined_first =
                aggregate(&d.profile.union(&first.profile).expect("same alternatives"));
            a4.record(
                same_relation(&first.relation, &other.relation)
                    && joined_first.is_complete_indifference(),
                || {
                    format!(
                        "{} vs {} opposite to {}",
                        first.describe(labels),
                        other.describe(labels),
                        d.describe(labels)
                    )
                },
            );
        }
    }

    let t = |text: [u8; 3]| TripleOrdering::from_ranks(text);
    let pair = Set::new(labels, vec![t([1, 0, 1]), t([1, 1, 0])], 1);
    let single = Set::new(labels, vec![t([1, 0, 0])], 1);
    let example_equivalent = same_relation(&pair.relation, &single.relation);

    Ok(AxiomReport {
        n_bound,
        sets: sets.len(),
        results: vec![
            a1.finish(),
            a2_ordinal.finish(),
            a2_all.finish(),
            a3.finish(),
            a4.finish(),
        ],
        example_equivalent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alternative::AlternativeSet;
    use crate::ordering::parse_ordering;
    use crate::triple::default_labels;

    fn t(text: &str) -> TripleOrdering {
        let alts = AlternativeSet::from_names(["x", "y", "z"]).unwrap();
        TripleOrdering::from_weak(&parse_ordering(text, &alts).unwrap()).unwrap()
    }

    fn tp(rows: &[&str]) -> TripleProfile {
        TripleProfile::from_types(&rows.iter().map(|r| t(r)).collect::<Vec<_>>())
    }

    fn ids(raw: &[i64]) -> Vec<VoterId> {
        raw.iter().map(|&i| VoterId(i)).collect()
    }

    const U1: [&str; 3] = ["x>y>z", "y>z>x", "z>x>y"];
    const U2: [&str; 3] = ["z>y>x", "x>z>y", "y>x>z"];

    #[test]
    fn classification() {
        let c = classify_set(&to_profile(&tp(&["x>y=z", "z=y>x"])));
        assert!(c.is_indifferent && c.is_ordinal);
        let c = classify_set(&to_profile(&tp(&[
            "x=y>z", "x>y=z", "x>y>z", "y>z>x", "z>x>y",
        ])));
        assert!(!c.is_indifferent && c.is_ordinal);
        let c = classify_triple_set(&tp(&U1));
        assert!(!c.is_indifferent && !c.is_ordinal);
        assert!(classify_triple_set(&tp(&[])).is_indifferent);
    }

    #[test]
    fn opposite_sets_of_a_weak_ordering() {
        let d1 = tp(&["x>y=z"]);
        let found = opposite_sets(&d1, 2, &TripleOrdering::ALL);
        let as_types: Vec<Vec<TripleOrdering>> =
            found.iter().map(|p| p.types().collect()).collect();
        assert!(as_types.contains(&vec![t("z=y>x")]));
        assert!(as_types.contains(&vec![t("y>z=x"), t("z>x=y")]));
        for d2 in &found {
            assert_eq!(d2.margins(), -d1.margins());
            assert!(d2.entries().iter().all(|&(v, _)| v.0 > 1));
        }
    }

    #[test]
    fn opposite_sets_of_nothing_are_indifferent_sets() {
        let found = opposite_sets(&tp(&[]), 2, &TripleOrdering::ALL);
        assert!(found[0].is_empty());
        assert!(found.iter().all(|p| p.margins().is_zero()));
        // the empty set, UCP, UCP twice, and six antagonistic pairs
        assert_eq!(found.len(), 9);
    }

    #[test]
    fn decomposition_of_balanced_cycles() {
        let mut rows = U1.to_vec();
        rows.extend(U2);
        let d = balanced_decomposition_triple(&tp(&rows), 14)
            .unwrap()
            .unwrap();
        assert_eq!(d.balanced_part, ids(&[1, 2, 3, 4, 5, 6]));
        assert!(d.remainder.is_empty() && d.remainder_ordinal);
    }

    #[test]
    fn decomposition_of_corollary_profile() {
        let mut rows = U1.to_vec();
        rows.extend(U2);
        rows.extend(["x>y>z", "x>y=z", "x>y>z"]);
        let d = balanced_decomposition_triple(&tp(&rows), 14)
            .unwrap()
            .unwrap();
        assert_eq!(d.balanced_part, ids(&[1, 2, 3, 4, 5, 6]));
        assert_eq!(d.remainder, ids(&[7, 8, 9]));
        assert!(d.remainder_ordinal);
    }

    #[test]
    fn bare_cycle_has_no_decomposition() {
        assert_eq!(balanced_decomposition_triple(&tp(&U1), 14).unwrap(), None);
    }

    #[test]
    fn decomposition_bound() {
        let rows = vec!["x>y>z"; 15];
        assert!(matches!(
            balanced_decomposition_triple(&tp(&rows), 14),
            Err(Error::BoundExceeded { bound: 14, .. })
        ));
    }

    #[test]
    fn axioms_hold_for_pairs() {
        let report = verify_axioms(2, &default_labels()).unwrap();
        assert_eq!(report.sets, 1 + 13 + 91);
        assert!(report.passed(), "{report:?}");
        assert!(report.results.iter().all(|r| r.checked > 0));
        assert!(report.example_equivalent);
    }

    #[test]
    fn axiom_bound_enforced() {
        assert!(matches!(
            verify_axioms(5, &default_labels()),
            Err(Error::BoundExceeded { bound: 4, .. })
        ));
    }

    #[test]
    fn subtraction_needs_a_sub_multiset() {
        let (a, b) = (t("x>y>z"), t("z>y>x"));
        assert_eq!(subtract(&[a, b, a], &[a]), Some(vec![b, a]));
        assert_eq!(subtract(&[a], &[a, a]), None);
    }
}
