//! Strict cycles over a triple and the transitivity results built on them.
//!
//! A strict cycle is three voters holding the three rotations of one strict
//! ordering: `{xPyPz, yPzPx, zPxPy}` (U1) or its reversal (U2). The voters
//! are the cycle members `Y`.
//!
//! Labelings are oriented triples. On a [`TripleProfile`] they are positions
//! `0..3`; the [`Profile`] entry points translate them to alternative
//! indices.

use serde::{Deserialize, Serialize};

use crate::alternative::Triple;
use crate::conditions::{check, Condition};
use crate::error::{Error, Result};
use crate::majority::aggregate;
use crate::profile::{Profile, VoterId};
use crate::triple::{CycleTag, TripleOrdering, TripleProfile};

/// Three voters forming one complete U-cycle. Under `labeling = (a, b, c)`
/// the members hold `aPbPc`, `bPcPa`, `cPaPb` in that order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CycleFinding {
    pub members: [VoterId; 3],
    pub orientation: CycleTag,
    pub labeling: Triple,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremVerdict {
    pub premises_hold: bool,
    pub condition_holds: bool,
    /// Labeling under which the condition was met.
    pub labeling_used: Option<Triple>,
    pub predicted_transitive: bool,
    pub actual_transitive: bool,
    /// Voters set aside as cycle members, ascending.
    pub cycle_members: Vec<VoterId>,
    /// Voters the condition was evaluated on, in profile order.
    pub remainder: Vec<VoterId>,
}

/// Ordering slots held by the members of each orientation, in member order,
/// with the local labeling that makes the members read as U1.
const ORIENTATIONS: [(CycleTag, [usize; 3], [usize; 3]); 2] = [
    (CycleTag::U1, [0, 1, 2], [0, 1, 2]),
    (CycleTag::U2, [3, 5, 4], [2, 1, 0]),
];

fn local(labeling: [usize; 3]) -> Triple {
    Triple::new(labeling[0], labeling[1], labeling[2]).expect("labelings are permutations")
}

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

/// Every choice of three voters forming a complete U1 or U2 cycle, ordered by
/// orientation and then by member ids.
pub fn find_strict_cycles_triple(tp: &TripleProfile) -> Vec<CycleFinding> {
    let by_type = voters_by_type(tp);
    let mut out = Vec::new();
    for (orientation, slots, labeling) in ORIENTATIONS {
        let [a, b, c] = slots.map(|s| &by_type[s]);
        for &i in a {
            for &j in b {
                for &k in c {
                    out.push(CycleFinding {
                        members: [i, j, k],
                        orientation,
                        labeling: local(labeling),
                    });
                }
            }
        }
    }
    out.sort_by_key(|f| {
        let mut ids = f.members;
        ids.sort();
        (f.orientation, ids)
    });
    out
}

/// Disjoint cycles extracted greedily, lowest ids first.
pub fn disjoint_cycles(tp: &TripleProfile) -> Vec<CycleFinding> {
    let by_type = voters_by_type(tp);
    let mut out = Vec::new();
    for (orientation, slots, labeling) in ORIENTATIONS {
        let [a, b, c] = slots.map(|s| &by_type[s]);
        for ((&i, &j), &k) in a.iter().zip(b).zip(c) {
            out.push(CycleFinding {
                members: [i, j, k],
                orientation,
                labeling: local(labeling),
            });
        }
    }
    out
}

pub fn find_strict_cycles(profile: &Profile, triple: Triple) -> Result<Vec<CycleFinding>> {
    let tp = profile.restrict(triple)?;
    Ok(find_strict_cycles_triple(&tp)
        .into_iter()
        .map(|f| globalize(f, triple))
        .collect())
}

fn globalize(mut finding: CycleFinding, triple: Triple) -> CycleFinding {
    finding.labeling = to_global(finding.labeling, triple);
    finding
}

fn to_global(labeling: Triple, triple: Triple) -> Triple {
    let m = triple.members();
    let [a, b, c] = labeling.members();
    Triple::new(m[a], m[b], m[c]).expect("distinct positions map to distinct alternatives")
}

/// `xRy`, `yRz` and `xPz` under the labeling `(x, y, z)`.
pub fn is_admissible(t: TripleOrdering, labeling: Triple) -> bool {
    let [x, y, z] = labeling.members();
    t.weakly_prefers(x, y) && t.weakly_prefers(y, z) && t.prefers(x, z)
}

/// The orderings meeting the remainder condition of the one-cycle theorem
/// under a local labeling.
pub fn admissible_remainder_types(labeling: Triple) -> Vec<TripleOrdering> {
    TripleOrdering::ALL
        .into_iter()
        .filter(|&t| is_admissible(t, labeling))
        .collect()
}

fn actual_transitive(tp: &TripleProfile) -> bool {
    let profile = tp
        .to_profile()
        .expect("a triple profile has valid labels and distinct voters");
    aggregate(&profile).is_transitive()
}

fn member_ids(cycles: &[CycleFinding]) -> Vec<VoterId> {
    let mut ids: Vec<VoterId> = cycles.iter().flat_map(|f| f.members).collect();
    ids.sort();
    ids
}

fn ids(tp: &TripleProfile) -> Vec<VoterId> {
    tp.entries().iter().map(|&(v, _)| v).collect()
}

/// One cycle among at least five concerned voters: the outcome is
/// transitive when every non-member satisfies `xRy`, `yRz`, `xPz` for some
/// rotation `(x, y, z)` of the cycle's labeling. Unconcerned voters are
/// dropped before counting.
pub fn check_theorem1_triple(tp: &TripleProfile) -> TheoremVerdict {
    let concerned = tp.concerned();
    let cycles = disjoint_cycles(&concerned);
    let premises_hold = concerned.len() >= 5 && cycles.len() == 1;
    let cycle_members = if premises_hold {
        member_ids(&cycles)
    } else {
        Vec::new()
    };
    let remainder = concerned.without(&cycle_members);
    let labeling_used = if premises_hold {
        let base = cycles[0].labeling;
        [base, base.rotated(), base.rotated().rotated()]
            .into_iter()
            .find(|&l| remainder.types().all(|t| is_admissible(t, l)))
    } else {
        None
    };
    let condition_holds = labeling_used.is_some();
    TheoremVerdict {
        premises_hold,
        condition_holds,
        labeling_used,
        predicted_transitive: condition_holds,
        actual_transitive: actual_transitive(tp),
        cycle_members,
        remainder: if premises_hold {
            ids(&remainder)
        } else {
            Vec::new()
        },
    }
}

pub fn check_theorem1(profile: &Profile, triple: Triple) -> Result<TheoremVerdict> {
    let mut v = check_theorem1_triple(&profile.restrict(triple)?);
    v.labeling_used = v.labeling_used.map(|l| to_global(l, triple));
    Ok(v)
}

/// Lowest-id U1 and U2 cycles, if both exist.
fn antagonistic_pair(tp: &TripleProfile) -> Option<[CycleFinding; 2]> {
    let cycles = disjoint_cycles(tp);
    let u1 = cycles.iter().find(|f| f.orientation == CycleTag::U1)?;
    let u2 = cycles.iter().find(|f| f.orientation == CycleTag::U2)?;
    Some([*u1, *u2])
}

fn corollary(
    population: &TripleProfile,
    full: &TripleProfile,
    condition: impl Fn(&TripleProfile) -> bool,
) -> TheoremVerdict {
    let pair = antagonistic_pair(population).filter(|_| population.len() >= 9);
    let premises_hold = pair.is_some();
    let cycle_members = pair.map(|p| member_ids(&p)).unwrap_or_default();
    let remainder = population.without(&cycle_members);
    let condition_holds = premises_hold && condition(&remainder);
    TheoremVerdict {
        premises_hold,
        condition_holds,
        labeling_used: None,
        predicted_transitive: condition_holds,
        actual_transitive: actual_transitive(full),
        cycle_members,
        remainder: if premises_hold {
            ids(&remainder)
        } else {
            Vec::new()
        },
    }
}

/// Two antagonistic cycles among at least nine concerned voters: transitive
/// iff the non-members satisfy extremal restriction.
pub fn check_corollary1_triple(tp: &TripleProfile) -> TheoremVerdict {
    corollary(&tp.concerned(), tp, |rest| {
        check(Condition::ExtremalRestriction, rest).holds
    })
}

/// Two antagonistic cycles among at least nine voters: transitive iff the
/// non-members satisfy one of the five Inada conditions. Unconcerned voters
/// count towards `n` and stay in the remainder.
pub fn check_corollary2_triple(tp: &TripleProfile) -> TheoremVerdict {
    corollary(tp, tp, |rest| {
        Condition::INADA.iter().any(|&c| check(c, rest).satisfied())
    })
}

pub fn check_corollary1(profile: &Profile, triple: Triple) -> Result<TheoremVerdict> {
    Ok(check_corollary1_triple(&profile.restrict(triple)?))
}

pub fn check_corollary2(profile: &Profile, triple: Triple) -> Result<TheoremVerdict> {
    Ok(check_corollary2_triple(&profile.restrict(triple)?))
}

/// `xPyPz`, `yPzPx`, `zPxPy`.
pub fn bare_cycle() -> Vec<TripleOrdering> {
    TripleOrdering::ALL[..3].to_vec()
}

/// Non-decreasing index sequences of length `k` over `0..n`, in
/// lexicographic order.
pub(crate) fn multisets(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut next = if n == 0 && k > 0 {
        None
    } else {
        Some(vec![0; k])
    };
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut succ = current.clone();
        let mut i = k;
        while i > 0 {
            i -= 1;
            if succ[i] + 1 < n {
                let v = succ[i] + 1;
                succ[i..].iter_mut().for_each(|s| *s = v);
                next = Some(succ);
                break;
            }
        }
        Some(current)
    })
}

fn with_additions(additions: &[TripleOrdering]) -> TripleProfile {
    let mut types = bare_cycle();
    types.extend_from_slice(additions);
    TripleProfile::from_types(&types)
}

/// Each single ordering appended to the bare U1 cycle, with the outcome's
/// transitivity.
pub fn single_addition_sweep() -> Vec<(TripleOrdering, bool)> {
    TripleOrdering::ALL
        .into_iter()
        .map(|t| (t, with_additions(&[t]).is_transitive()))
        .collect()
}

/// Smallest number of orderings that, appended to the bare U1 cycle, make
/// the outcome transitive, with the first such multiset found.
pub fn min_additions_to_destroy_cycle(k_max: usize) -> Result<(usize, Vec<TripleOrdering>)> {
    for k in 1..=k_max {
        for idx in multisets(TripleOrdering::COUNT, k) {
            let additions: Vec<TripleOrdering> =
                idx.iter().map(|&i| TripleOrdering::ALL[i]).collect();
            if actual_transitive(&with_additions(&additions)) {
                return Ok((k, additions));
            }
        }
    }
    Err(Error::SearchBoundExceeded(k_max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alternative::AlternativeSet;
    use crate::ordering::parse_ordering;
    use crate::triple::TripleMargins;

    fn t(text: &str) -> TripleOrdering {
        let alts = AlternativeSet::from_names(["x", "y", "z"]).unwrap();
        TripleOrdering::from_weak(&parse_ordering(text, &alts).unwrap()).unwrap()
    }

    fn tp(rows: &[&str]) -> TripleProfile {
        TripleProfile::from_types(&rows.iter().map(|r| t(r)).collect::<Vec<_>>())
    }

    const EXAMPLE_ONE: [&str; 5] = ["x=y>z", "x>y=z", "x>y>z", "y>z>x", "z>x>y"];
    const U1: [&str; 3] = ["x>y>z", "y>z>x", "z>x>y"];
    const U2: [&str; 3] = ["z>y>x", "x>z>y", "y>x>z"];

    fn ids(raw: &[i64]) -> Vec<VoterId> {
        raw.iter().map(|&i| VoterId(i)).collect()
    }

    #[test]
    fn multisets_in_order() {
        let all: Vec<Vec<usize>> = multisets(3, 2).collect();
        assert_eq!(
            all,
            vec![
                vec![0, 0],
                vec![0, 1],
                vec![0, 2],
                vec![1, 1],
                vec![1, 2],
                vec![2, 2]
            ]
        );
        assert_eq!(multisets(13, 3).count(), 455);
        assert_eq!(multisets(4, 0).count(), 1);
    }

    #[test]
    fn finds_the_bare_cycle() {
        let found = find_strict_cycles_triple(&tp(&U1));
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].members, [VoterId(1), VoterId(2), VoterId(3)]);
        assert_eq!(found[0].orientation, CycleTag::U1);
        assert_eq!(found[0].labeling, Triple::first());
    }

    #[test]
    fn example_one_cycle_members() {
        let found = find_strict_cycles_triple(&tp(&EXAMPLE_ONE));
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].members, [VoterId(3), VoterId(4), VoterId(5)]);
    }

    #[test]
    fn u2_labeling_reads_as_u1() {
        let p = tp(&U2);
        let f = find_strict_cycles_triple(&p)[0];
        assert_eq!(f.orientation, CycleTag::U2);
        let l = f.labeling.members();
        let expect = [[l[0], l[1], l[2]], [l[1], l[2], l[0]], [l[2], l[0], l[1]]];
        for (voter, [a, b, c]) in f.members.iter().zip(expect) {
            assert_eq!(p.ordering_of(*voter), Some(TripleOrdering::strict(a, b, c)));
        }
    }

    #[test]
    fn no_cycles_without_strict_orderings() {
        assert!(find_strict_cycles_triple(&tp(&["x=y>z", "x>y=z", "z>x=y"])).is_empty());
    }

    #[test]
    fn duplicates_give_every_member_set() {
        let p = tp(&["x>y>z", "y>z>x", "z>x>y", "x>y>z"]);
        assert_eq!(find_strict_cycles_triple(&p).len(), 2);
        assert_eq!(disjoint_cycles(&p).len(), 1);
    }

    #[test]
    fn cycle_margins() {
        assert_eq!(
            tp(&U1).margins(),
            TripleMargins {
                xy: 1,
                yz: 1,
                zx: 1
            }
        );
        let mut both = U1.to_vec();
        both.extend(U2);
        assert!(tp(&both).margins().is_zero());
    }

    #[test]
    fn admissible_types() {
        let types = admissible_remainder_types(Triple::first());
        assert_eq!(types, vec![t("x>y>z"), t("x>y=z"), t("x=y>z")]);
        assert!(!types.contains(&TripleOrdering::UNCONCERNED));
    }

    #[test]
    fn theorem1_on_example_one() {
        let v = check_theorem1_triple(&tp(&EXAMPLE_ONE));
        assert!(v.premises_hold && v.condition_holds);
        assert_eq!(v.labeling_used, Some(Triple::first()));
        assert!(v.predicted_transitive && v.actual_transitive);
        assert_eq!(v.cycle_members, ids(&[3, 4, 5]));
        assert_eq!(v.remainder, ids(&[1, 2]));
    }

    #[test]
    fn theorem1_condition_can_fail() {
        let mut rows = U1.to_vec();
        rows.extend(["z>y>x", "z>y>x"]);
        let v = check_theorem1_triple(&tp(&rows));
        assert!(v.premises_hold);
        assert!(!v.condition_holds && !v.predicted_transitive);
        // margins (-1,-1,3) give zPyPx: sufficient, not necessary
        assert!(v.actual_transitive);
    }

    #[test]
    fn theorem1_rotated_labeling() {
        let mut rows = U1.to_vec();
        rows.extend(["y>z>x", "y=z>x"]);
        let v = check_theorem1_triple(&tp(&rows));
        assert!(v.condition_holds);
        assert_eq!(v.labeling_used, Some(Triple::new(1, 2, 0).unwrap()));
        assert!(v.actual_transitive);
    }

    #[test]
    fn theorem1_premises() {
        assert!(!check_theorem1_triple(&tp(&U1)).premises_hold);
        let mut two = U1.to_vec();
        two.extend(U1);
        two.extend(["x>y>z"]);
        assert!(!check_theorem1_triple(&tp(&two)).premises_hold);
        // unconcerned voters do not count towards n
        let mut padded = U1.to_vec();
        padded.extend(["x=y=z", "x=y=z", "x>y>z"]);
        assert!(!check_theorem1_triple(&tp(&padded)).premises_hold);
    }

    #[test]
    fn single_cycle_needs_two_additions() {
        assert!(single_addition_sweep()
            .iter()
            .all(|&(_, transitive)| !transitive));
        let (k, witness) = min_additions_to_destroy_cycle(3).unwrap();
        assert_eq!(k, 2);
        assert_eq!(witness, vec![t("x>y>z"), t("x>y>z")]);
        assert_eq!(
            min_additions_to_destroy_cycle(1),
            Err(Error::SearchBoundExceeded(1))
        );
    }

    #[test]
    fn corollary1_examples() {
        let mut rows = U1.to_vec();
        rows.extend(U2);
        rows.extend(["x>y>z"; 3]);
        let v = check_corollary1_triple(&tp(&rows));
        assert!(v.premises_hold && v.condition_holds && v.actual_transitive);
        assert_eq!(v.remainder, ids(&[7, 8, 9]));

        let mut bad = U1.to_vec();
        bad.extend(U2);
        bad.extend(["x>y>z", "y>z>x", "z>x>y"]);
        let v = check_corollary1_triple(&tp(&bad));
        assert!(v.premises_hold && !v.condition_holds);
        assert!(!v.actual_transitive);

        let mut short = U1.to_vec();
        short.extend(U2);
        short.extend(["x>y>z"; 2]);
        assert!(!check_corollary1_triple(&tp(&short)).premises_hold);
    }

    #[test]
    fn corollary2_examples() {
        let mut rows = U1.to_vec();
        rows.extend(U2);
        rows.extend(["x=y>z", "x>y=z", "z>x=y"]);
        let v = check_corollary2_triple(&tp(&rows));
        assert!(v.premises_hold && v.condition_holds && v.actual_transitive);

        let mut bad = U1.to_vec();
        bad.extend(U2);
        bad.extend(EXAMPLE_ONE);
        let v = check_corollary2_triple(&tp(&bad));
        assert!(v.premises_hold && !v.condition_holds);

        assert!(!check_corollary2_triple(&tp(&["x>y>z"; 9])).premises_hold);
    }

    #[test]
    fn corollary2_counts_unconcerned_voters() {
        let mut rows = U1.to_vec();
        rows.extend(U2);
        rows.extend(["x>y>z", "x=y=z", "x=y=z"]);
        assert!(check_corollary2_triple(&tp(&rows)).premises_hold);
        assert!(!check_corollary1_triple(&tp(&rows)).premises_hold);
    }

    #[test]
    fn profile_entry_points_map_labelings() {
        let alts = AlternativeSet::from_names(["a", "x", "y", "z"]).unwrap();
        let rows = EXAMPLE_ONE
            .iter()
            .map(|r| parse_ordering(&format!("{r}>a"), &alts).unwrap());
        let p = Profile::numbered(alts.clone(), rows.collect::<Vec<_>>()).unwrap();
        let triple = alts.triple("x", "y", "z").unwrap();
        let found = find_strict_cycles(&p, triple).unwrap();
        assert_eq!(found[0].labeling, triple);
        let v = check_theorem1(&p, triple).unwrap();
        assert_eq!(v.labeling_used, Some(triple));
    }
}
