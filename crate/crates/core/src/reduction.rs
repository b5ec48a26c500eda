//! Reduction of a triple profile to a steady structure and its standard form
//! `B_{k,l}`.
//!
//! Five margin-preserving rewrites, in priority order:
//!
//! * R1: a strict ordering and its reversal cancel.
//! * R2a: a one-tie ordering and its reversal cancel.
//! * R2b: three voters covering a complete V-cycle cancel.
//! * R3: two distinct orderings from one V-cycle merge into the ordering of
//!   the other V-cycle that is antagonistic to neither (one copy).
//! * R4: two non-antagonistic strict orderings from different U-cycles merge
//!   into the one-tie ordering `w` with `2 * margins(w)` equal to their sum
//!   (two copies).
//!
//! Unconcerned voters are dropped up front. At the steady state the strict
//! orderings all come from one U-cycle and there is at most one one-tie
//! ordering per V-cycle, never an antagonistic pair: `k` distinct strict and
//! `l` distinct one-tie orderings give the form `B_{k,l}`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::alternative::Triple;
use crate::error::{Error, Result};
use crate::profile::{Profile, VoterId};
use crate::triple::{TripleMargins, TripleOrdering, TripleProfile};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Rule {
    #[serde(rename = "R1_strict_antagonistic_pair")]
    StrictAntagonisticPair,
    #[serde(rename = "R2a_weak_antagonistic_pair")]
    WeakAntagonisticPair,
    #[serde(rename = "R2b_complete_V_triple")]
    CompleteVCycle,
    #[serde(rename = "R3_sameV_pair_merge")]
    SameVCycleMerge,
    #[serde(rename = "R4_crossU_pair_merge")]
    CrossUPairMerge,
}

impl Rule {
    pub const PRIORITY: [Rule; 5] = [
        Rule::StrictAntagonisticPair,
        Rule::WeakAntagonisticPair,
        Rule::CompleteVCycle,
        Rule::SameVCycleMerge,
        Rule::CrossUPairMerge,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Rule::StrictAntagonisticPair => "R1_strict_antagonistic_pair",
            Rule::WeakAntagonisticPair => "R2a_weak_antagonistic_pair",
            Rule::CompleteVCycle => "R2b_complete_V_triple",
            Rule::SameVCycleMerge => "R3_sameV_pair_merge",
            Rule::CrossUPairMerge => "R4_crossU_pair_merge",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One rewrite instance: the consumed voters (sorted by id) with their
/// orderings, and the orderings produced in their place.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rewrite {
    pub rule: Rule,
    pub consumed: Vec<(VoterId, TripleOrdering)>,
    pub produced: Vec<TripleOrdering>,
}

impl Rewrite {
    fn new(
        rule: Rule,
        mut consumed: Vec<(VoterId, TripleOrdering)>,
        produced: Vec<TripleOrdering>,
    ) -> Self {
        consumed.sort();
        Rewrite {
            rule,
            consumed,
            produced,
        }
    }

    fn key(&self) -> (Rule, Vec<VoterId>) {
        (self.rule, self.consumed.iter().map(|&(v, _)| v).collect())
    }

    pub fn consumed_margins(&self) -> TripleMargins {
        self.consumed.iter().map(|&(_, t)| t.margins()).sum()
    }

    pub fn produced_margins(&self) -> TripleMargins {
        self.produced.iter().map(|t| t.margins()).sum()
    }
}

/// Standard form `B_{k,l}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StandardForm {
    pub k: u8,
    pub l: u8,
}

impl fmt::Display for StandardForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B_{{{},{}}}", self.k, self.l)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedStructure {
    /// Steady profile; produced orderings carry negative voter ids.
    pub residual: TripleProfile,
    /// Unconcerned voters removed before rewriting.
    pub dropped: Vec<VoterId>,
    pub trace: Vec<Rewrite>,
}

/// How the next rewrite is picked among the applicable ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Schedule {
    /// Only instances of the highest-priority applicable rule compete.
    Phased,
    /// Every applicable instance competes.
    Free,
}

const V1: [usize; 3] = [6, 7, 8];
const V2: [usize; 3] = [9, 10, 11];

fn ordering(index: usize) -> TripleOrdering {
    TripleOrdering::ALL[index]
}

/// Voter ids holding each ordering, ascending.
fn voters_by_type(tp: &TripleProfile) -> Vec<Vec<VoterId>> {
    let mut by_type = vec![Vec::new(); TripleOrdering::COUNT];
    for &(v, t) in tp.entries() {
        by_type[t.index()].push(v);
    }
    for ids in &mut by_type {
        ids.sort();
    }
    by_type
}

/// The single ordering with exactly the given margins.
fn ordering_with_margins(target: TripleMargins) -> TripleOrdering {
    *TripleOrdering::ALL
        .iter()
        .find(|t| t.margins() == target)
        .expect("margins of a merged pair match one of the thirteen orderings")
}

fn same_v_product(a: TripleOrdering, b: TripleOrdering) -> TripleOrdering {
    ordering_with_margins(a.margins() + b.margins())
}

fn cross_u_product(s: TripleOrdering, t: TripleOrdering) -> TripleOrdering {
    let sum = s.margins() + t.margins();
    let half = TripleMargins {
        xy: sum.xy / 2,
        yz: sum.yz / 2,
        zx: sum.zx / 2,
    };
    let w = ordering_with_margins(half);
    debug_assert_eq!(w.margins() * 2, sum);
    w
}

/// Type-level rewrite shapes for one rule: the consumed orderings and the
/// produced multiset.
fn shapes(rule: Rule) -> Vec<(Vec<TripleOrdering>, Vec<TripleOrdering>)> {
    match rule {
        Rule::StrictAntagonisticPair => (0..3)
            .map(|i| (vec![ordering(i), ordering(i).reverse()], vec![]))
            .collect(),
        Rule::WeakAntagonisticPair => V1
            .iter()
            .map(|&i| (vec![ordering(i), ordering(i).reverse()], vec![]))
            .collect(),
        Rule::CompleteVCycle => [V1, V2]
            .iter()
            .map(|cycle| (cycle.iter().map(|&i| ordering(i)).collect(), vec![]))
            .collect(),
        Rule::SameVCycleMerge => [V1, V2]
            .iter()
            .flat_map(|cycle| {
                [(0, 1), (0, 2), (1, 2)].map(|(p, q)| {
                    let (a, b) = (ordering(cycle[p]), ordering(cycle[q]));
                    (vec![a, b], vec![same_v_product(a, b)])
                })
            })
            .collect(),
        Rule::CrossUPairMerge => (0..3)
            .flat_map(|i| (3..6).map(move |j| (ordering(i), ordering(j))))
            .filter(|&(s, t)| t != s.reverse())
            .map(|(s, t)| {
                let w = cross_u_product(s, t);
                (vec![s, t], vec![w, w])
            })
            .collect(),
    }
}

/// Every choice of distinct voters, one per listed ordering.
fn instances(
    by_type: &[Vec<VoterId>],
    types: &[TripleOrdering],
) -> Vec<Vec<(VoterId, TripleOrdering)>> {
    let mut out: Vec<Vec<(VoterId, TripleOrdering)>> = vec![Vec::new()];
    for &t in types {
        let mut next = Vec::new();
        for partial in &out {
            for &v in &by_type[t.index()] {
                let mut p = partial.clone();
                p.push((v, t));
                next.push(p);
            }
        }
        out = next;
    }
    out
}

/// Every applicable rewrite instance, by rule priority and then by consumed
/// voter ids.
pub fn find_redexes(tp: &TripleProfile) -> Vec<Rewrite> {
    let by_type = voters_by_type(tp);
    let mut out = Vec::new();
    for rule in Rule::PRIORITY {
        let mut found: Vec<Rewrite> = shapes(rule)
            .into_iter()
            .flat_map(|(consumed, produced)| {
                instances(&by_type, &consumed)
                    .into_iter()
                    .map(move |c| Rewrite::new(rule, c, produced.clone()))
            })
            .collect();
        found.sort_by_key(Rewrite::key);
        out.extend(found);
    }
    out
}

/// The instance `reduce` applies next: highest priority rule, lowest voter
/// ids. Equal to `find_redexes(tp).first()` without enumerating everything.
pub fn first_redex(tp: &TripleProfile) -> Option<Rewrite> {
    let by_type = voters_by_type(tp);
    Rule::PRIORITY.into_iter().find_map(|rule| {
        shapes(rule)
            .into_iter()
            .filter_map(|(consumed, produced)| {
                let picked = consumed
                    .iter()
                    .map(|t| by_type[t.index()].first().map(|&v| (v, *t)))
                    .collect::<Option<Vec<_>>>()?;
                Some(Rewrite::new(rule, picked, produced))
            })
            .min_by_key(Rewrite::key)
    })
}

fn fresh_id(tp: &TripleProfile) -> i64 {
    tp.entries()
        .iter()
        .map(|&(v, _)| v.0)
        .min()
        .unwrap_or(0)
        .min(0)
        - 1
}

fn apply_with(tp: &TripleProfile, rewrite: &Rewrite, next_id: &mut i64) -> Result<TripleProfile> {
    for &(v, t) in &rewrite.consumed {
        if tp.ordering_of(v) != Some(t) {
            return Err(Error::StaleRewrite(v.0));
        }
    }
    let ids: Vec<VoterId> = rewrite.consumed.iter().map(|&(v, _)| v).collect();
    let mut out = tp.without(&ids);
    for &t in &rewrite.produced {
        out.push(VoterId(*next_id), t);
        *next_id -= 1;
    }
    Ok(out)
}

/// Replaces the consumed voters by the produced orderings under fresh
/// negative ids.
pub fn apply_rewrite(tp: &TripleProfile, rewrite: &Rewrite) -> Result<TripleProfile> {
    let mut next = fresh_id(tp);
    apply_with(tp, rewrite, &mut next)
}

/// Reduces a profile restricted to `triple` under the deterministic priority.
pub fn reduce(profile: &Profile, triple: Triple) -> Result<ReducedStructure> {
    Ok(reduce_triple(&profile.restrict(triple)?))
}

pub fn reduce_triple(tp: &TripleProfile) -> ReducedStructure {
    run(tp, first_redex)
}

/// Reduces with the next rewrite picked by `choose(n)`, an index into the
/// `n` competing instances.
pub fn reduce_with(
    tp: &TripleProfile,
    schedule: Schedule,
    mut choose: impl FnMut(usize) -> usize,
) -> ReducedStructure {
    run(tp, |current| {
        let mut redexes = find_redexes(current);
        if schedule == Schedule::Phased {
            let top = redexes.first()?.rule;
            redexes.retain(|r| r.rule == top);
        }
        if redexes.is_empty() {
            return None;
        }
        let i = choose(redexes.len()).min(redexes.len() - 1);
        Some(redexes.swap_remove(i))
    })
}

fn run(
    tp: &TripleProfile,
    mut next: impl FnMut(&TripleProfile) -> Option<Rewrite>,
) -> ReducedStructure {
    let dropped: Vec<VoterId> = tp
        .entries()
        .iter()
        .filter(|(_, t)| !t.is_concerned())
        .map(|&(v, _)| v)
        .collect();
    let mut current = tp.concerned();
    let mut next_id = fresh_id(&current);
    let mut trace = Vec::new();
    while let Some(rewrite) = next(&current) {
        current = apply_with(&current, &rewrite, &mut next_id)
            .expect("redexes are found on the current profile");
        trace.push(rewrite);
    }
    ReducedStructure {
        residual: current,
        dropped,
        trace,
    }
}

/// `B_{k,l}` of a steady structure.
pub fn classify_standard_form(rs: &ReducedStructure) -> Result<StandardForm> {
    if first_redex(&rs.residual).is_some() {
        return Err(Error::NotSteady);
    }
    let counts = rs.residual.counts();
    let distinct =
        |range: std::ops::Range<usize>| counts[range].iter().filter(|&&c| c > 0).count() as u8;
    Ok(StandardForm {
        k: distinct(0..6),
        l: distinct(6..12),
    })
}

impl ReducedStructure {
    pub fn form(&self) -> Result<StandardForm> {
        classify_standard_form(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alternative::AlternativeSet;
    use crate::ordering::parse_ordering;

    fn t(text: &str) -> TripleOrdering {
        let alts = AlternativeSet::from_names(["x", "y", "z"]).unwrap();
        TripleOrdering::from_weak(&parse_ordering(text, &alts).unwrap()).unwrap()
    }

    fn tp(rows: &[&str]) -> TripleProfile {
        TripleProfile::from_types(&rows.iter().map(|r| t(r)).collect::<Vec<_>>())
    }

    #[test]
    fn every_shape_preserves_margins() {
        for rule in Rule::PRIORITY {
            for (consumed, produced) in shapes(rule) {
                let before: TripleMargins = consumed.iter().map(|t| t.margins()).sum();
                let after: TripleMargins = produced.iter().map(|t| t.margins()).sum();
                assert_eq!(before, after, "{rule}");
            }
        }
        assert_eq!(shapes(Rule::CrossUPairMerge).len(), 6);
        assert_eq!(shapes(Rule::SameVCycleMerge).len(), 6);
    }

    #[test]
    fn same_v_merge_yields_the_non_antagonistic_third_type() {
        for cycle in [V1, V2] {
            for (p, q) in [(0, 1), (0, 2), (1, 2)] {
                let (a, b) = (ordering(cycle[p]), ordering(cycle[q]));
                let w = same_v_product(a, b);
                assert!(w.is_one_tie());
                assert_ne!(w.cycle(), a.cycle());
                assert_ne!(w, a.reverse());
                assert_ne!(w, b.reverse());
            }
        }
    }

    #[test]
    fn antagonistic_strict_pair_cancels() {
        let p = tp(&["x>y>z", "z>y>x"]);
        let redexes = find_redexes(&p);
        assert_eq!(redexes.len(), 1);
        assert_eq!(redexes[0].rule, Rule::StrictAntagonisticPair);
        assert!(redexes[0].produced.is_empty());
        assert!(apply_rewrite(&p, &redexes[0]).unwrap().is_empty());
    }

    #[test]
    fn same_v_pair_merges() {
        let p = tp(&["x>y=z", "y>z=x"]);
        let redexes = find_redexes(&p);
        assert_eq!(redexes.len(), 1);
        assert_eq!(redexes[0].rule, Rule::SameVCycleMerge);
        assert_eq!(redexes[0].produced, vec![t("y=x>z")]);
        let after = apply_rewrite(&p, &redexes[0]).unwrap();
        assert_eq!(after.entries(), &[(VoterId(-1), t("x=y>z"))]);
    }

    #[test]
    fn cross_u_pair_merges_into_two_weak_copies() {
        let p = tp(&["x>y>z", "x>z>y"]);
        let redexes = find_redexes(&p);
        assert_eq!(redexes.len(), 1);
        assert_eq!(redexes[0].rule, Rule::CrossUPairMerge);
        assert_eq!(redexes[0].produced, vec![t("x>y=z"), t("x>y=z")]);
    }

    #[test]
    fn complete_v_cycle_cancels() {
        let p = tp(&["x>y=z", "y>z=x", "z>x=y"]);
        let r = first_redex(&p).unwrap();
        assert_eq!(r.rule, Rule::CompleteVCycle);
        assert!(apply_rewrite(&p, &r).unwrap().is_empty());
    }

    #[test]
    fn stale_rewrites_rejected() {
        let p = tp(&["x>y>z", "z>y>x"]);
        let r = first_redex(&p).unwrap();
        let gone = apply_rewrite(&p, &r).unwrap();
        assert_eq!(apply_rewrite(&gone, &r), Err(Error::StaleRewrite(1)));
    }

    #[test]
    fn example_one_is_already_steady() {
        let p = tp(&["x=y>z", "x>y=z", "x>y>z", "y>z>x", "z>x>y"]);
        assert!(find_redexes(&p).is_empty());
        let rs = reduce_triple(&p);
        assert!(rs.trace.is_empty());
        assert_eq!(rs.residual, p);
        assert_eq!(rs.form().unwrap(), StandardForm { k: 3, l: 2 });
        assert_eq!(rs.form().unwrap().to_string(), "B_{3,2}");
    }

    #[test]
    fn double_cycle_reduces_to_nothing() {
        let p = tp(&["x>y>z", "y>z>x", "z>x>y", "z>y>x", "x>z>y", "y>x>z"]);
        let rs = reduce_triple(&p);
        assert!(rs.residual.is_empty());
        assert_eq!(rs.trace.len(), 3);
        assert_eq!(rs.form().unwrap(), StandardForm { k: 0, l: 0 });
    }

    #[test]
    fn bare_cycle_is_b30() {
        let rs = reduce_triple(&tp(&["x>y>z", "y>z>x", "z>x>y"]));
        assert_eq!(rs.form().unwrap(), StandardForm { k: 3, l: 0 });
    }

    #[test]
    fn cross_merge_then_weak_cancellations() {
        let p = tp(&["x>y>z", "x>z>y", "z=y>x", "z=y>x"]);
        let rs = reduce_triple(&p);
        assert!(rs.residual.is_empty());
        let rules: Vec<Rule> = rs.trace.iter().map(|r| r.rule).collect();
        assert_eq!(
            rules,
            vec![
                Rule::CrossUPairMerge,
                Rule::WeakAntagonisticPair,
                Rule::WeakAntagonisticPair
            ]
        );
    }

    #[test]
    fn unconcerned_voters_dropped() {
        let p = tp(&["x=y=z", "x>y>z"]);
        let rs = reduce_triple(&p);
        assert_eq!(rs.dropped, vec![VoterId(1)]);
        assert_eq!(rs.residual.len(), 1);
    }

    #[test]
    fn classify_rejects_unsteady_structures() {
        let rs = ReducedStructure {
            residual: tp(&["x>y>z", "z>y>x"]),
            dropped: vec![],
            trace: vec![],
        };
        assert_eq!(classify_standard_form(&rs), Err(Error::NotSteady));
    }

    #[test]
    fn potential_drops_every_step() {
        let potential = |tp: &TripleProfile| {
            tp.types()
                .map(|t| if t.is_strict() { 2 } else { 1 })
                .sum::<usize>()
        };
        let p = tp(&["x>y>z", "y>z>x", "y>x>z", "y>z>x", "x>z>y", "z=x>y"]);
        let mut current = p.concerned();
        let mut steps = 0;
        while let Some(r) = first_redex(&current) {
            let next = apply_rewrite(&current, &r).unwrap();
            assert!(potential(&next) < potential(&current));
            assert_eq!(next.margins(), current.margins());
            current = next;
            steps += 1;
        }
        assert!(steps <= 2 * p.len());
    }

    #[test]
    fn phased_choice_among_cross_merges_can_change_the_form() {
        // Three competing R4 instances; merging voter 3 with 1 or with 2
        // leaves different residual type sets.
        let p = tp(&["x>y>z", "y>z>x", "y>x>z", "y>z>x"]);
        let redexes = find_redexes(&p);
        assert_eq!(redexes.len(), 3);
        assert!(redexes.iter().all(|r| r.rule == Rule::CrossUPairMerge));
        let form_after = |i: usize| {
            let mut first = Some(i);
            reduce_with(&p, Schedule::Phased, |_| first.take().unwrap_or(0))
                .form()
                .unwrap()
        };
        assert_eq!(form_after(0), StandardForm { k: 1, l: 1 });
        assert_eq!(form_after(1), StandardForm { k: 2, l: 1 });
    }

    #[test]
    fn free_schedule_can_change_the_form() {
        // R1 first leaves a lone strict ordering; R4 first strands the
        // reversal next to two weak copies. Same margins, different forms.
        let p = tp(&["x>y>z", "x>z>y", "z>y>x"]);
        let phased = reduce_triple(&p);
        assert_eq!(phased.form().unwrap(), StandardForm { k: 1, l: 0 });
        let mut picks = [1usize, 0].into_iter();
        let free = reduce_with(&p, Schedule::Free, |_| picks.next().unwrap_or(0));
        assert_eq!(free.trace[0].rule, Rule::CrossUPairMerge);
        assert_eq!(free.form().unwrap(), StandardForm { k: 1, l: 1 });
        assert_eq!(free.residual.margins(), phased.residual.margins());
    }
}
