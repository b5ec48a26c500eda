//! Domain-restriction conditions over a triple.
//!
//! Each condition is decided twice over: [`holds`] works on the type counts
//! alone (the conditions are anonymous), while [`check`] walks the voters to
//! build a witness. A violated verdict always carries a counterexample that
//! [`Witness::refutes`] can re-check against the defining clause.
//!
//! Best, worst and medium use the weak definitions: `a` is best for `R_i`
//! iff `a R_i b` for both others, worst iff both others are `R_i a`, and
//! medium iff `(b R_i a and a R_i c) or (c R_i a and a R_i b)`. With ties an
//! alternative can hold several values at once.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::alternative::Triple;
use crate::error::Result;
use crate::profile::{Profile, VoterId};
use crate::triple::{TripleOrdering, TripleProfile, TypeCounts};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Condition {
    Dichotomous,
    Echoic,
    Antagonistic,
    ValueRestriction,
    Taboo,
    ExtremalRestriction,
    LimitedAgreement,
    CycleBalance,
}

impl Condition {
    pub const ALL: [Condition; 8] = [
        Condition::Dichotomous,
        Condition::Echoic,
        Condition::Antagonistic,
        Condition::ValueRestriction,
        Condition::Taboo,
        Condition::ExtremalRestriction,
        Condition::LimitedAgreement,
        Condition::CycleBalance,
    ];

    /// Inada's list, items (i) to (v).
    pub const INADA: [Condition; 5] = [
        Condition::Dichotomous,
        Condition::Echoic,
        Condition::Antagonistic,
        Condition::ValueRestriction,
        Condition::Taboo,
    ];

    /// Value restriction and taboo preferences only guarantee transitivity
    /// for an odd number of concerned voters.
    pub fn parity_restricted(self) -> bool {
        matches!(self, Condition::ValueRestriction | Condition::Taboo)
    }

    pub fn name(self) -> &'static str {
        match self {
            Condition::Dichotomous => "dichotomous",
            Condition::Echoic => "echoic",
            Condition::Antagonistic => "antagonistic",
            Condition::ValueRestriction => "value_restriction",
            Condition::Taboo => "taboo",
            Condition::ExtremalRestriction => "extremal_restriction",
            Condition::LimitedAgreement => "limited_agreement",
            Condition::CycleBalance => "cycle_balance",
        }
    }

    /// Accepts the full snake-case name or the usual abbreviation.
    pub fn from_name(name: &str) -> Option<Condition> {
        let lower = name.to_ascii_lowercase().replace('-', "_");
        let found = match lower.as_str() {
            "vr" => Condition::ValueRestriction,
            "er" => Condition::ExtremalRestriction,
            "la" => Condition::LimitedAgreement,
            "cb" => Condition::CycleBalance,
            other => *Condition::ALL.iter().find(|c| c.name() == other)?,
        };
        Some(found)
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Value {
    Best,
    Medium,
    Worst,
}

impl Value {
    pub const ALL: [Value; 3] = [Value::Best, Value::Medium, Value::Worst];

    fn held_by(self, t: TripleOrdering, a: usize) -> bool {
        match self {
            Value::Best => t.is_best(a),
            Value::Medium => t.is_medium(a),
            Value::Worst => t.is_worst(a),
        }
    }
}

/// A voter who gives `alternative` the value `value`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValueHolder {
    pub alternative: usize,
    pub value: Value,
    pub voter: VoterId,
}

/// A voter who breaks the clause for the ordered pair `pair`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairBreaker {
    pub pair: [usize; 2],
    pub voter: VoterId,
}

/// Counterexample or certificate attached to a verdict. Alternatives are
/// triple positions (0 = x, 1 = y, 2 = z).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A voter holding a strict ordering.
    StrictOrdering {
        voter: VoterId,
        ordering: TripleOrdering,
    },
    /// `premise` holds `a P b P c` for `arrangement = [a, b, c]`; every voter
    /// in `violators` breaks the condition's clause against it.
    Conflict {
        premise: VoterId,
        arrangement: [usize; 3],
        violators: Vec<VoterId>,
    },
    /// Each of the nine (alternative, value) combinations is taken by some
    /// concerned voter.
    ValueCover { cover: Vec<ValueHolder> },
    /// Each of the six ordered pairs is broken by some voter.
    PairCover { cover: Vec<PairBreaker> },
    /// Unconcerned voters, which taboo preferences forbid.
    Unconcerned { voters: Vec<VoterId> },
    /// Cycle counts per position, and concerned voters outside the cycles.
    Unbalanced {
        clockwise: [u32; 3],
        counterclockwise: [u32; 3],
        others: Vec<VoterId>,
    },
    /// No concerned voter gives `alternative` the value `value`.
    AvoidedValue { alternative: usize, value: Value },
    /// The clause holds for the ordered pair for every voter.
    OrderedPair { pair: [usize; 2] },
    /// Number of complete clockwise/counterclockwise cycle pairs.
    Balanced { pairs: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionVerdict {
    pub condition: Condition,
    pub holds: bool,
    /// False only for parity-restricted conditions with an even number of
    /// concerned voters. The pattern check still runs.
    pub applicable: bool,
    pub witness: Option<Witness>,
}

impl ConditionVerdict {
    /// Counts towards a transitivity guarantee.
    pub fn satisfied(&self) -> bool {
        self.holds && self.applicable
    }
}

/// All eight verdicts for one triple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub labels: [String; 3],
    pub verdicts: Vec<ConditionVerdict>,
    pub any_satisfied: bool,
}

impl ConditionReport {
    pub fn verdict(&self, condition: Condition) -> &ConditionVerdict {
        self.verdicts
            .iter()
            .find(|v| v.condition == condition)
            .expect("report covers every condition")
    }
}

const ORDERED_PAIRS: [[usize; 2]; 6] = [[0, 1], [0, 2], [1, 0], [1, 2], [2, 0], [2, 1]];

/// Positions of a strict ordering from best to worst.
fn arrangement(t: TripleOrdering) -> [usize; 3] {
    let r = t.ranks();
    let mut order = [0, 1, 2];
    order.sort_by_key(|&p| r[p]);
    order
}

fn present(counts: &TypeCounts) -> impl Iterator<Item = TripleOrdering> + '_ {
    TripleOrdering::ALL
        .into_iter()
        .filter(|t| counts[t.index()] > 0)
}

fn concerned_total(counts: &TypeCounts) -> u32 {
    counts[..12].iter().sum()
}

fn echoic_clause(t: TripleOrdering, [a, _, c]: [usize; 3]) -> bool {
    !t.prefers(c, a)
}

fn antagonistic_clause(t: TripleOrdering, [a, b, c]: [usize; 3]) -> bool {
    // voters sharing the premise ordering fall inside the same pattern
    t == TripleOrdering::strict(a, b, c)
        || t == TripleOrdering::strict(c, b, a)
        || t.indifferent(a, c)
}

fn extremal_clause(t: TripleOrdering, [a, b, c]: [usize; 3]) -> bool {
    !t.prefers(c, a) || (t.prefers(c, b) && t.prefers(b, a))
}

fn pair_clause(condition: Condition, t: TripleOrdering, [a, b]: [usize; 2]) -> bool {
    match condition {
        Condition::Taboo => t.is_best(a) || t.is_worst(b),
        _ => t.weakly_prefers(a, b),
    }
}

/// Pattern check from type counts alone.
pub fn holds(condition: Condition, counts: &TypeCounts) -> bool {
    let strict_premises = || present(counts).filter(|t| t.is_strict());
    match condition {
        Condition::Dichotomous => strict_premises().next().is_none(),
        Condition::Echoic => strict_premises().all(|s| {
            let arr = arrangement(s);
            present(counts).all(|t| echoic_clause(t, arr))
        }),
        Condition::Antagonistic => strict_premises().all(|s| {
            let arr = arrangement(s);
            present(counts).all(|t| antagonistic_clause(t, arr))
        }),
        Condition::ExtremalRestriction => strict_premises().all(|s| {
            let arr = arrangement(s);
            present(counts).all(|t| extremal_clause(t, arr))
        }),
        Condition::ValueRestriction => (0..3).any(|a| {
            Value::ALL.iter().any(|&v| {
                present(counts)
                    .filter(|t| t.is_concerned())
                    .all(|t| !v.held_by(t, a))
            })
        }),
        Condition::Taboo | Condition::LimitedAgreement => {
            (condition != Condition::Taboo || counts[TripleOrdering::UNCONCERNED.index()] == 0)
                && ORDERED_PAIRS
                    .iter()
                    .any(|&pair| present(counts).all(|t| pair_clause(condition, t, pair)))
        }
        Condition::CycleBalance => {
            present(counts).all(|t| t.is_strict() || !t.is_concerned())
                && counts[..6].iter().all(|&c| c == counts[0])
        }
    }
}

/// Parity applicability from type counts.
pub fn applicable(condition: Condition, counts: &TypeCounts) -> bool {
    !condition.parity_restricted() || concerned_total(counts) % 2 == 1
}

/// First voter satisfying `pred`, preferring voters with strict orderings
/// since their positions are unambiguous.
fn pick(tp: &TripleProfile, pred: impl Fn(TripleOrdering) -> bool) -> Option<VoterId> {
    let entries = tp.entries();
    entries
        .iter()
        .find(|&&(_, t)| t.is_strict() && pred(t))
        .or_else(|| entries.iter().find(|&&(_, t)| pred(t)))
        .map(|&(v, _)| v)
}

fn conflict(tp: &TripleProfile, clause: fn(TripleOrdering, [usize; 3]) -> bool) -> Option<Witness> {
    tp.entries()
        .iter()
        .filter(|(_, s)| s.is_strict())
        .find_map(|&(premise, s)| {
            let arr = arrangement(s);
            let violators: Vec<VoterId> = tp
                .entries()
                .iter()
                .filter(|&&(j, t)| j != premise && !clause(t, arr))
                .map(|&(j, _)| j)
                .collect();
            (!violators.is_empty()).then_some(Witness::Conflict {
                premise,
                arrangement: arr,
                violators,
            })
        })
}

fn witness(
    condition: Condition,
    tp: &TripleProfile,
    counts: &TypeCounts,
    holds: bool,
) -> Option<Witness> {
    match (condition, holds) {
        (Condition::Dichotomous, false) => tp
            .entries()
            .iter()
            .find(|(_, t)| t.is_strict())
            .map(|&(voter, ordering)| Witness::StrictOrdering { voter, ordering }),
        (Condition::Echoic, false) => conflict(tp, echoic_clause),
        (Condition::Antagonistic, false) => conflict(tp, antagonistic_clause),
        (Condition::ExtremalRestriction, false) => conflict(tp, extremal_clause),
        (Condition::ValueRestriction, false) => {
            let mut cover = Vec::with_capacity(9);
            for a in 0..3 {
                for value in Value::ALL {
                    let voter = pick(tp, |t| t.is_concerned() && value.held_by(t, a))?;
                    cover.push(ValueHolder {
                        alternative: a,
                        value,
                        voter,
                    });
                }
            }
            Some(Witness::ValueCover { cover })
        }
        (Condition::ValueRestriction, true) => Value::ALL.into_iter().find_map(|value| {
            (0..3)
                .find(|&a| {
                    tp.types()
                        .filter(|t| t.is_concerned())
                        .all(|t| !value.held_by(t, a))
                })
                .map(|alternative| Witness::AvoidedValue { alternative, value })
        }),
        (Condition::Taboo, false) if counts[TripleOrdering::UNCONCERNED.index()] > 0 => {
            Some(Witness::Unconcerned {
                voters: tp
                    .entries()
                    .iter()
                    .filter(|(_, t)| !t.is_concerned())
                    .map(|&(v, _)| v)
                    .collect(),
            })
        }
        (Condition::Taboo | Condition::LimitedAgreement, false) => {
            let cover = ORDERED_PAIRS
                .iter()
                .map(|&pair| {
                    pick(tp, |t| !pair_clause(condition, t, pair))
                        .map(|voter| PairBreaker { pair, voter })
                })
                .collect::<Option<Vec<_>>>()?;
            Some(Witness::PairCover { cover })
        }
        (Condition::Taboo | Condition::LimitedAgreement, true) => ORDERED_PAIRS
            .iter()
            .find(|&&pair| tp.types().all(|t| pair_clause(condition, t, pair)))
            .map(|&pair| Witness::OrderedPair { pair }),
        (Condition::CycleBalance, false) => Some(Witness::Unbalanced {
            clockwise: [counts[0], counts[1], counts[2]],
            counterclockwise: [counts[3], counts[4], counts[5]],
            others: tp
                .entries()
                .iter()
                .filter(|(_, t)| t.is_concerned() && !t.is_strict())
                .map(|&(v, _)| v)
                .collect(),
        }),
        (Condition::CycleBalance, true) => Some(Witness::Balanced { pairs: counts[0] }),
        _ => None,
    }
}

/// Decides one condition on a triple profile and attaches a witness.
pub fn check(condition: Condition, tp: &TripleProfile) -> ConditionVerdict {
    let counts = tp.counts();
    let holds = holds(condition, &counts);
    ConditionVerdict {
        condition,
        holds,
        applicable: applicable(condition, &counts),
        witness: witness(condition, tp, &counts, holds),
    }
}

/// Inada (i): no voter holds a strict ordering of the triple.
pub fn check_dichotomous(tp: &TripleProfile) -> ConditionVerdict {
    check(Condition::Dichotomous, tp)
}

/// Inada (ii): if someone holds `aPbPc`, nobody else has `cPa`.
pub fn check_echoic(tp: &TripleProfile) -> ConditionVerdict {
    check(Condition::Echoic, tp)
}

/// Inada (iii): if someone holds `aPbPc`, everyone with a different ordering
/// holds `cPbPa` or `aIc`.
pub fn check_antagonistic(tp: &TripleProfile) -> ConditionVerdict {
    check(Condition::Antagonistic, tp)
}

/// Some alternative never takes some value for any concerned voter.
pub fn check_value_restriction(tp: &TripleProfile) -> ConditionVerdict {
    check(Condition::ValueRestriction, tp)
}

/// Nobody is unconcerned, and for some ordered pair `(a, b)` every voter has
/// `a` best or `b` worst.
pub fn check_taboo(tp: &TripleProfile) -> ConditionVerdict {
    check(Condition::Taboo, tp)
}

/// If someone holds `aPbPc`, anyone with `cPa` holds exactly `cPbPa`.
pub fn check_extremal_restriction(tp: &TripleProfile) -> ConditionVerdict {
    check(Condition::ExtremalRestriction, tp)
}

/// Some ordered pair `(a, b)` has `aRb` for every voter.
pub fn check_limited_agreement(tp: &TripleProfile) -> ConditionVerdict {
    check(Condition::LimitedAgreement, tp)
}

/// Concerned voters hold only strict orderings, with every clockwise and
/// counterclockwise type equally often.
pub fn check_cycle_balance(tp: &TripleProfile) -> ConditionVerdict {
    check(Condition::CycleBalance, tp)
}

/// Runs all eight checkers on one triple profile.
pub fn report(tp: &TripleProfile) -> ConditionReport {
    let verdicts: Vec<ConditionVerdict> = Condition::ALL.iter().map(|&c| check(c, tp)).collect();
    let any_satisfied = verdicts.iter().any(ConditionVerdict::satisfied);
    ConditionReport {
        labels: tp.labels().clone(),
        verdicts,
        any_satisfied,
    }
}

/// Runs all eight checkers on a profile restricted to `triple`.
pub fn condition_report(profile: &Profile, triple: Triple) -> Result<ConditionReport> {
    Ok(report(&profile.restrict(triple)?))
}

impl Witness {
    /// Re-evaluates a violation witness against the defining clause of
    /// `condition` on `tp`. Certificates and mismatched witnesses give false.
    pub fn refutes(&self, condition: Condition, tp: &TripleProfile) -> bool {
        let holds_ordering = |v: VoterId| tp.ordering_of(v);
        match (condition, self) {
            (Condition::Dichotomous, Witness::StrictOrdering { voter, ordering }) => {
                ordering.is_strict() && holds_ordering(*voter) == Some(*ordering)
            }
            (
                Condition::Echoic | Condition::Antagonistic | Condition::ExtremalRestriction,
                Witness::Conflict {
                    premise,
                    arrangement: arr,
                    violators,
                },
            ) => {
                let clause = match condition {
                    Condition::Echoic => echoic_clause,
                    Condition::Antagonistic => antagonistic_clause,
                    _ => extremal_clause,
                };
                holds_ordering(*premise) == Some(TripleOrdering::strict(arr[0], arr[1], arr[2]))
                    && !violators.is_empty()
                    && violators.iter().all(|&j| {
                        j != *premise && holds_ordering(j).is_some_and(|t| !clause(t, *arr))
                    })
            }
            (Condition::ValueRestriction, Witness::ValueCover { cover }) => (0..3).all(|a| {
                Value::ALL.iter().all(|&value| {
                    cover.iter().any(|h| {
                        h.alternative == a
                            && h.value == value
                            && holds_ordering(h.voter)
                                .is_some_and(|t| t.is_concerned() && value.held_by(t, a))
                    })
                })
            }),
            (Condition::Taboo, Witness::Unconcerned { voters }) => {
                !voters.is_empty()
                    && voters
                        .iter()
                        .all(|&v| holds_ordering(v).is_some_and(|t| !t.is_concerned()))
            }
            (Condition::Taboo | Condition::LimitedAgreement, Witness::PairCover { cover }) => {
                ORDERED_PAIRS.iter().all(|&pair| {
                    cover.iter().any(|b| {
                        b.pair == pair
                            && holds_ordering(b.voter)
                                .is_some_and(|t| !pair_clause(condition, t, pair))
                    })
                })
            }
            (
                Condition::CycleBalance,
                Witness::Unbalanced {
                    clockwise,
                    counterclockwise,
                    others,
                },
            ) => {
                let counts = tp.counts();
                let recount = clockwise[..] == counts[0..3] && counterclockwise[..] == counts[3..6];
                let unequal = clockwise
                    .iter()
                    .chain(counterclockwise)
                    .any(|&c| c != clockwise[0]);
                let strays = !others.is_empty()
                    && others.iter().all(|&v| {
                        holds_ordering(v).is_some_and(|t| t.is_concerned() && !t.is_strict())
                    });
                recount && (unequal || strays)
            }
            _ => false,
        }
    }

    /// Re-checks a certificate attached to a satisfied verdict.
    pub fn certifies(&self, condition: Condition, tp: &TripleProfile) -> bool {
        match (condition, self) {
            (Condition::ValueRestriction, Witness::AvoidedValue { alternative, value }) => tp
                .types()
                .filter(|t| t.is_concerned())
                .all(|t| !value.held_by(t, *alternative)),
            (Condition::Taboo | Condition::LimitedAgreement, Witness::OrderedPair { pair }) => {
                (condition != Condition::Taboo || tp.types().all(|t| t.is_concerned()))
                    && tp.types().all(|t| pair_clause(condition, t, *pair))
            }
            (Condition::CycleBalance, Witness::Balanced { pairs }) => {
                let counts = tp.counts();
                counts[..6].iter().all(|c| c == pairs)
                    && tp.types().all(|t| t.is_strict() || !t.is_concerned())
            }
            _ => false,
        }
    }

    /// One-line rendering using the triple's labels.
    pub fn describe(&self, tp_labels: &[String; 3], orderings: &TripleProfile) -> String {
        let l = |p: usize| tp_labels[p].as_str();
        let show = |v: VoterId| match orderings.ordering_of(v) {
            Some(t) => format!("{v} ({})", t.display(tp_labels)),
            None => v.to_string(),
        };
        let list = |vs: &[VoterId]| vs.iter().map(|&v| show(v)).collect::<Vec<_>>().join(", ");
        match self {
            Witness::StrictOrdering { voter, .. } => format!("voter {}", show(*voter)),
            Witness::Conflict {
                premise,
                arrangement: [a, b, c],
                violators,
            } => format!(
                "voter {} holds {}>{}>{}; against it: {}",
                premise,
                l(*a),
                l(*b),
                l(*c),
                list(violators)
            ),
            Witness::ValueCover { cover } => {
                let mut voters: Vec<VoterId> = cover.iter().map(|h| h.voter).collect();
                voters.sort();
                voters.dedup();
                format!(
                    "every alternative takes every value among voters {}",
                    list(&voters)
                )
            }
            Witness::PairCover { cover } => cover
                .iter()
                .map(|b| format!("({},{}) broken by {}", l(b.pair[0]), l(b.pair[1]), b.voter))
                .collect::<Vec<_>>()
                .join("; "),
            Witness::Unconcerned { voters } => format!("unconcerned voters {}", list(voters)),
            Witness::Unbalanced {
                clockwise,
                counterclockwise,
                others,
            } => {
                let mut s = format!("U1 counts {clockwise:?}, U2 counts {counterclockwise:?}");
                if !others.is_empty() {
                    s.push_str(&format!("; non-strict voters {}", list(others)));
                }
                s
            }
            Witness::AvoidedValue { alternative, value } => {
                format!("{} is never {value:?}", l(*alternative)).to_lowercase()
            }
            Witness::OrderedPair { pair } => format!("pair ({},{})", l(pair[0]), l(pair[1])),
            Witness::Balanced { pairs } => format!("{pairs} balanced cycle pair(s)"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alternative::AlternativeSet;
    use crate::ordering::parse_ordering;

    fn tp(rows: &[&str]) -> TripleProfile {
        let alts = AlternativeSet::from_names(["x", "y", "z"]).unwrap();
        let types: Vec<TripleOrdering> = rows
            .iter()
            .map(|r| TripleOrdering::from_weak(&parse_ordering(r, &alts).unwrap()).unwrap())
            .collect();
        TripleProfile::from_types(&types)
    }

    fn example1() -> TripleProfile {
        tp(&["x=y>z", "x>y=z", "x>y>z", "y>z>x", "z>x>y"])
    }

    fn assert_consistent(tp: &TripleProfile) {
        for c in Condition::ALL {
            let v = check(c, tp);
            if v.holds {
                if let Some(w) = &v.witness {
                    assert!(w.certifies(c, tp), "{c}: {w:?}");
                }
            } else {
                let w = v.witness.as_ref().expect("violations carry a witness");
                assert!(w.refutes(c, tp), "{c}: {w:?}");
            }
        }
    }

    #[test]
    fn example_one_violates_everything() {
        let p = example1();
        let r = report(&p);
        assert!(!r.any_satisfied);
        assert!(r.verdicts.iter().all(|v| !v.holds));
        assert_consistent(&p);
    }

    #[test]
    fn dichotomous_examples() {
        let v = check_dichotomous(&example1());
        assert_eq!(
            v.witness,
            Some(Witness::StrictOrdering {
                voter: VoterId(3),
                ordering: TripleOrdering::ALL[0]
            })
        );
        assert!(check_dichotomous(&tp(&["x>y=z", "y=z>x", "x=y>z"])).holds);
        assert!(check_dichotomous(&tp(&[])).holds);
    }

    #[test]
    fn echoic_examples() {
        let v = check_echoic(&example1());
        match v.witness {
            Some(Witness::Conflict {
                premise, violators, ..
            }) => {
                assert_eq!(premise, VoterId(3));
                assert_eq!(violators[0], VoterId(4));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(check_echoic(&tp(&["x>y>z", "x>y>z"])).holds);
        // orderings with x I z never have zPx
        assert!(check_echoic(&tp(&["x>y>z", "x=z>y", "y>x=z", "x=y=z"])).holds);
    }

    #[test]
    fn antagonistic_examples() {
        let v = check_antagonistic(&example1());
        match v.witness {
            Some(Witness::Conflict {
                premise, violators, ..
            }) => {
                assert_eq!(premise, VoterId(3));
                assert!(violators.contains(&VoterId(5)));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(check_antagonistic(&tp(&["x>y>z", "z>y>x"])).holds);
        assert!(check_antagonistic(&tp(&["x>y>z", "x=z>y", "y>x=z"])).holds);
        assert!(check_antagonistic(&tp(&["x>y>z", "x>y>z", "z>y>x"])).holds);
        assert!(!check_antagonistic(&tp(&["x>y>z", "x>z>y"])).holds);
    }

    #[test]
    fn value_restriction_examples() {
        assert!(!check_value_restriction(&example1()).holds);
        let v = check_value_restriction(&tp(&["x>y>z", "x>y>z", "x>y>z"]));
        assert!(v.holds && v.applicable);
        let v = check_value_restriction(&tp(&["x>y>z", "y>x>z"]));
        assert!(v.holds);
        assert!(!v.applicable);
        assert_eq!(
            v.witness,
            Some(Witness::AvoidedValue {
                alternative: 2,
                value: Value::Best
            })
        );
        // z is also never medium
        let w = Witness::AvoidedValue {
            alternative: 2,
            value: Value::Medium,
        };
        assert!(w.certifies(Condition::ValueRestriction, &tp(&["x>y>z", "y>x>z"])));
    }

    #[test]
    fn value_restriction_cover_uses_cycle_members() {
        let v = check_value_restriction(&example1());
        let Some(Witness::ValueCover { cover }) = v.witness else {
            panic!("expected a cover")
        };
        let mut voters: Vec<i64> = cover.iter().map(|h| h.voter.0).collect();
        voters.sort();
        voters.dedup();
        assert_eq!(voters, vec![3, 4, 5]);
    }

    #[test]
    fn taboo_examples() {
        assert!(!check_taboo(&example1()).holds);
        let v = check_taboo(&tp(&["x>y>z"]));
        assert!(v.holds);
        assert!(Witness::OrderedPair { pair: [0, 2] }.certifies(Condition::Taboo, &tp(&["x>y>z"])));
        let v = check_taboo(&tp(&["x>y>z", "x=y=z", "x>y>z"]));
        assert!(!v.holds);
        assert!(matches!(v.witness, Some(Witness::Unconcerned { .. })));
    }

    #[test]
    fn extremal_restriction_examples() {
        let v = check_extremal_restriction(&example1());
        match v.witness {
            Some(Witness::Conflict {
                premise,
                arrangement,
                violators,
            }) => {
                assert_eq!((premise, arrangement), (VoterId(3), [0, 1, 2]));
                assert_eq!(violators[0], VoterId(4));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(check_extremal_restriction(&tp(&["x>y>z", "z>y>x"])).holds);
        assert!(check_extremal_restriction(&tp(&["x>y=z", "y=z>x", "z>x=y"])).holds);
    }

    #[test]
    fn limited_agreement_examples() {
        assert!(!check_limited_agreement(&example1()).holds);
        let v = check_limited_agreement(&tp(&["x>y>z", "x>y>z"]));
        assert_eq!(v.witness, Some(Witness::OrderedPair { pair: [0, 1] }));
        assert!(!check_limited_agreement(&tp(&["x>y>z", "z>y>x"])).holds);
    }

    #[test]
    fn cycle_balance_examples() {
        let double = tp(&["x>y>z", "y>z>x", "z>x>y", "z>y>x", "x>z>y", "y>x>z"]);
        let v = check_cycle_balance(&double);
        assert!(v.holds);
        assert!(double.margins().is_zero());
        assert!(!check_cycle_balance(&example1()).holds);
        assert!(check_cycle_balance(&tp(&[])).holds);
    }

    #[test]
    fn unanimous_strict_profile() {
        let p = tp(&["x>y>z", "x>y>z", "x>y>z"]);
        let r = report(&p);
        for c in [
            Condition::ValueRestriction,
            Condition::Taboo,
            Condition::ExtremalRestriction,
            Condition::LimitedAgreement,
            Condition::Echoic,
            Condition::Antagonistic,
        ] {
            assert!(r.verdict(c).holds, "{c}");
        }
        assert!(!r.verdict(Condition::Dichotomous).holds);
        assert!(r.any_satisfied);
    }

    #[test]
    fn empty_profile_verdicts() {
        let r = report(&tp(&[]));
        assert!(r.verdict(Condition::Dichotomous).holds);
        assert!(r.verdict(Condition::CycleBalance).holds);
        assert!(!r.verdict(Condition::ValueRestriction).applicable);
        assert!(r.any_satisfied);
    }

    #[test]
    fn names_round_trip() {
        for c in Condition::ALL {
            assert_eq!(Condition::from_name(c.name()), Some(c));
        }
        assert_eq!(
            Condition::from_name("ER"),
            Some(Condition::ExtremalRestriction)
        );
        assert_eq!(Condition::from_name("nope"), None);
    }

    #[test]
    fn witnesses_consistent_on_all_pairs() {
        for a in TripleOrdering::ALL {
            for b in TripleOrdering::ALL {
                for c in [a, b, TripleOrdering::UNCONCERNED] {
                    assert_consistent(&TripleProfile::from_types(&[a, b, c]));
                }
            }
        }
    }
}
