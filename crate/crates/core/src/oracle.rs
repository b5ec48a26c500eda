//! Brute-force enumeration over one triple: every ordering, every profile up
//! to a size, transitivity censuses and bounded checks of sufficiency and
//! necessity claims.
//!
//! Margins and transitivity here are recomputed from ranks rather than taken
//! from [`TripleMargins`](crate::triple::TripleMargins), so the census can
//! cross-check the core arithmetic.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::conditions::{applicable, check, holds, Condition};
use crate::cycles::multisets;
use crate::error::{Error, Result};
use crate::majority::{aggregate, margins};
use crate::ordering::WeakOrdering;
use crate::triple::{TripleOrdering, TripleProfile, TypeCounts};

pub const DEFAULT_BUDGET: u128 = 50_000_000;

/// How profiles of `n` voters are enumerated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Every assignment of a type to each voter.
    Ordered,
    /// One profile per multiset of types.
    Multiset,
}

/// The thirteen orderings of a triple in slot order.
pub fn enumerate_orderings() -> Vec<WeakOrdering> {
    TripleOrdering::ALL.iter().map(|t| t.to_weak()).collect()
}

fn cost(types: usize, n: usize, mode: Mode) -> u128 {
    match mode {
        Mode::Ordered => (types as u128).saturating_pow(n as u32),
        Mode::Multiset => {
            // C(types + n - 1, n)
            let mut c: u128 = 1;
            for i in 0..n as u128 {
                c = c.saturating_mul(types as u128 + i) / (i + 1);
            }
            if types == 0 && n > 0 {
                0
            } else {
                c
            }
        }
    }
}

fn within(requested: u128, budget: u128) -> Result<()> {
    if requested > budget {
        Err(Error::BudgetExceeded { requested, budget })
    } else {
        Ok(())
    }
}

/// Ordered index tuples over `0..k`, last position fastest.
fn tuples(k: usize, n: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut next = if k == 0 && n > 0 {
        None
    } else {
        Some(vec![0; n])
    };
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut succ = current.clone();
        for i in (0..n).rev() {
            succ[i] += 1;
            if succ[i] < k {
                next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(current)
    })
}

/// Every profile of `n` voters over `types`, voters numbered `1..=n`.
pub fn enumerate_profiles(
    n: usize,
    types: &[TripleOrdering],
    budget: u128,
) -> Result<impl Iterator<Item = TripleProfile> + '_> {
    within(cost(types.len(), n, Mode::Ordered), budget)?;
    Ok(tuples(types.len(), n).map(move |idx| {
        TripleProfile::from_types(&idx.iter().map(|&i| types[i]).collect::<Vec<_>>())
    }))
}

/// `(m(x,y), m(y,z), m(z,x))` of one ordering, from its ranks.
fn rank_margins(t: TripleOrdering) -> [i64; 3] {
    let r = t.ranks().map(i64::from);
    let beat = |a: usize, b: usize| (r[b] - r[a]).signum();
    [beat(0, 1), beat(1, 2), beat(2, 0)]
}

/// Transitivity of the majority relation given `[m(x,y), m(y,z), m(z,x)]`.
fn margins_transitive(m: [i64; 3]) -> bool {
    let get = |a: usize, b: usize| match (a, b) {
        (0, 1) => m[0],
        (1, 2) => m[1],
        (2, 0) => m[2],
        (1, 0) => -m[0],
        (2, 1) => -m[1],
        (0, 2) => -m[2],
        _ => 0,
    };
    let weak = |a, b| get(a, b) >= 0;
    (0..3).all(|a| {
        (0..3).all(|b| {
            (0..3).all(|c| a == b || b == c || a == c || !(weak(a, b) && weak(b, c)) || weak(a, c))
        })
    })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionCount {
    /// Profiles where the condition holds and is applicable.
    pub holds: u64,
    pub holds_and_transitive: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub n: usize,
    pub mode: Mode,
    pub total_profiles: u64,
    pub transitive_count: u64,
    pub per_condition: BTreeMap<String, ConditionCount>,
    /// Profiles whose rank-based margins were compared with the core margin
    /// matrix.
    pub margin_spot_checks: u64,
    pub margin_mismatches: u64,
}

#[derive(Serialize)]
struct CsvRow<'a> {
    n: usize,
    mode: Mode,
    total_profiles: u64,
    transitive_count: u64,
    condition: &'a str,
    holds: u64,
    holds_and_transitive: u64,
}

impl CensusReport {
    pub fn to_csv(&self) -> Result<String, csv::Error> {
        let mut w = csv::Writer::from_writer(Vec::new());
        for (condition, c) in &self.per_condition {
            w.serialize(CsvRow {
                n: self.n,
                mode: self.mode,
                total_profiles: self.total_profiles,
                transitive_count: self.transitive_count,
                condition,
                holds: c.holds,
                holds_and_transitive: c.holds_and_transitive,
            })?;
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    fn empty(n: usize, mode: Mode) -> Self {
        CensusReport {
            n,
            mode,
            total_profiles: 0,
            transitive_count: 0,
            per_condition: Condition::ALL
                .iter()
                .map(|c| (c.name().to_string(), ConditionCount::default()))
                .collect(),
            margin_spot_checks: 0,
            margin_mismatches: 0,
        }
    }

    fn merge(mut self, other: CensusReport) -> Self {
        self.total_profiles += other.total_profiles;
        self.transitive_count += other.transitive_count;
        for (k, v) in other.per_condition {
            let e = self.per_condition.entry(k).or_default();
            e.holds += v.holds;
            e.holds_and_transitive += v.holds_and_transitive;
        }
        self.margin_spot_checks += other.margin_spot_checks;
        self.margin_mismatches += other.margin_mismatches;
        self
    }
}

/// Sample rate of the margin spot check, one profile in this many.
const SPOT_CHECK_EVERY: u64 = 100;

fn satisfied(condition: Condition, counts: &TypeCounts) -> bool {
    holds(condition, counts) && applicable(condition, counts)
}

/// Visits one shard of profiles, sharded by the first voter's type.
fn census_shard(
    n: usize,
    types: &[TripleOrdering],
    first: Option<usize>,
    mode: Mode,
) -> CensusReport {
    let mut report = CensusReport::empty(n, mode);
    let tail = n.saturating_sub(first.is_some() as usize);
    let rest: Box<dyn Iterator<Item = Vec<usize>>> = match (mode, first) {
        (Mode::Ordered, _) => Box::new(tuples(types.len(), tail)),
        // multisets are non-decreasing: the tail starts at the first index
        (Mode::Multiset, Some(f)) => Box::new(
            multisets(types.len() - f, tail).map(move |v| v.into_iter().map(|i| i + f).collect()),
        ),
        (Mode::Multiset, None) => Box::new(multisets(types.len(), tail)),
    };
    for (seen, idx) in (0u64..).zip(rest) {
        let chosen: Vec<TripleOrdering> = first.into_iter().chain(idx).map(|i| types[i]).collect();
        let mut m = [0i64; 3];
        let mut counts: TypeCounts = [0; 13];
        for &t in &chosen {
            let d = rank_margins(t);
            for k in 0..3 {
                m[k] += d[k];
            }
            counts[t.index()] += 1;
        }
        let transitive = margins_transitive(m);
        report.total_profiles += 1;
        report.transitive_count += transitive as u64;
        for c in Condition::ALL {
            if satisfied(c, &counts) {
                let e = report
                    .per_condition
                    .get_mut(c.name())
                    .expect("all conditions listed");
                e.holds += 1;
                e.holds_and_transitive += transitive as u64;
            }
        }
        if seen.is_multiple_of(SPOT_CHECK_EVERY) {
            let tp = TripleProfile::from_types(&chosen);
            let core = margins(&tp.to_profile().expect("valid labels"));
            report.margin_spot_checks += 1;
            if [core.get(0, 1), core.get(1, 2), core.get(2, 0)] != m {
                report.margin_mismatches += 1;
            }
        }
    }
    report
}

/// Counts transitive outcomes and condition verdicts over every profile of
/// `n` voters. Sharded over the first voter; the result does not depend on
/// the thread count.
pub fn transitivity_census(
    n: usize,
    types: &[TripleOrdering],
    mode: Mode,
    budget: u128,
) -> Result<CensusReport> {
    within(cost(types.len(), n, mode), budget)?;
    if n == 0 || types.is_empty() {
        return Ok(census_shard(n, types, None, mode));
    }
    Ok((0..types.len())
        .into_par_iter()
        .map(|f| census_shard(n, types, Some(f), mode))
        .collect::<Vec<_>>()
        .into_iter()
        .fold(CensusReport::empty(n, mode), CensusReport::merge))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum SufficiencyOutcome {
    Pass { profiles_checked: u64 },
    Counterexample { profile: Vec<TripleOrdering> },
}

/// Checks that every profile of at most `n_max` voters satisfying
/// `condition` (parity permitting) has a transitive outcome.
pub fn verify_sufficiency(
    condition: Condition,
    n_max: usize,
    mode: Mode,
    budget: u128,
) -> Result<SufficiencyOutcome> {
    verify_sufficiency_with(
        |counts| satisfied(condition, counts),
        |tp| check(condition, tp).satisfied(),
        n_max,
        mode,
        budget,
    )
}

/// As [`verify_sufficiency`] for an arbitrary anonymous predicate. A
/// counterexample is emitted only after `revalidate` confirms the predicate
/// on it and the core aggregate confirms intransitivity.
pub fn verify_sufficiency_with(
    predicate: impl Fn(&TypeCounts) -> bool + Sync,
    revalidate: impl Fn(&TripleProfile) -> bool,
    n_max: usize,
    mode: Mode,
    budget: u128,
) -> Result<SufficiencyOutcome> {
    let types = &TripleOrdering::ALL;
    let total: u128 = (1..=n_max).map(|n| cost(types.len(), n, mode)).sum();
    within(total, budget)?;
    let mut checked = 0u64;
    for n in 1..=n_max {
        let seqs: Vec<Vec<usize>> = match mode {
            Mode::Ordered => tuples(types.len(), n).collect(),
            Mode::Multiset => multisets(types.len(), n).collect(),
        };
        let first_bad = seqs.par_iter().position_first(|idx| {
            let mut counts: TypeCounts = [0; 13];
            let mut m = [0i64; 3];
            for &i in idx {
                counts[i] += 1;
                let d = rank_margins(types[i]);
                for k in 0..3 {
                    m[k] += d[k];
                }
            }
            predicate(&counts) && !margins_transitive(m)
        });
        match first_bad {
            Some(pos) => {
                let profile: Vec<TripleOrdering> = seqs[pos].iter().map(|&i| types[i]).collect();
                let tp = TripleProfile::from_types(&profile);
                let intransitive =
                    !aggregate(&tp.to_profile().expect("valid labels")).is_transitive();
                assert!(
                    revalidate(&tp) && intransitive,
                    "counterexample failed re-validation"
                );
                return Ok(SufficiencyOutcome::Counterexample { profile });
            }
            None => checked += seqs.len() as u64,
        }
    }
    Ok(SufficiencyOutcome::Pass {
        profiles_checked: checked,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum NecessityVerdict {
    /// Extremal restriction holds and every assignment is transitive.
    Confirmed,
    /// Extremal restriction fails and this assignment is intransitive.
    Witness { counts: Vec<u32> },
    /// Extremal restriction fails but every assignment within the bound is
    /// transitive.
    NoneFoundWithinBound,
    /// Extremal restriction holds yet this assignment is intransitive.
    Refuted { counts: Vec<u32> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NecessityReport {
    pub types: Vec<TripleOrdering>,
    pub er_holds: bool,
    pub assignments_checked: u64,
    pub verdict: NecessityVerdict,
}

/// For a set of ordering types, searches multiplicities `0..=count_bound`
/// per type: assignments using every type first, then the rest, each in
/// lexicographic order.
pub fn verify_theorem_xi_necessity(
    type_set: &[TripleOrdering],
    count_bound: u32,
    budget: u128,
) -> Result<NecessityReport> {
    let mut types = type_set.to_vec();
    types.sort();
    types.dedup();
    let k = types.len();
    within((count_bound as u128 + 1).saturating_pow(k as u32), budget)?;
    let er_holds = check(
        Condition::ExtremalRestriction,
        &TripleProfile::from_types(&types),
    )
    .holds;
    let grid: Vec<Vec<u32>> = tuples(count_bound as usize + 1, k)
        .map(|v| v.into_iter().map(|c| c as u32).collect())
        .filter(|v: &Vec<u32>| v.iter().any(|&c| c > 0))
        .collect();
    let (full, partial): (Vec<_>, Vec<_>) =
        grid.into_iter().partition(|v| v.iter().all(|&c| c > 0));
    let mut checked = 0u64;
    let mut found = None;
    for counts in full.iter().chain(&partial) {
        checked += 1;
        let profile: Vec<TripleOrdering> = types
            .iter()
            .zip(counts)
            .flat_map(|(&t, &c)| std::iter::repeat_n(t, c as usize))
            .collect();
        let tp = TripleProfile::from_types(&profile);
        if !aggregate(&tp.to_profile().expect("valid labels")).is_transitive() {
            found = Some(counts.clone());
            break;
        }
    }
    let verdict = match (er_holds, found) {
        (true, None) => NecessityVerdict::Confirmed,
        (true, Some(counts)) => NecessityVerdict::Refuted { counts },
        (false, Some(counts)) => NecessityVerdict::Witness { counts },
        (false, None) => NecessityVerdict::NoneFoundWithinBound,
    };
    Ok(NecessityReport {
        types,
        er_holds,
        assignments_checked: checked,
        verdict,
    })
}
