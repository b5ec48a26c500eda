//! Voters and preference profiles.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::alternative::{AlternativeSet, Triple};
use crate::error::{Error, Result};
use crate::ordering::WeakOrdering;
use crate::triple::{TripleOrdering, TripleProfile};

/// Voter identifier. User-supplied ids are positive; ids produced by the
/// reduction rewrites are negative so the two never collide.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VoterId(pub i64);

impl fmt::Display for VoterId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ballot {
    pub voter: VoterId,
    pub ordering: WeakOrdering,
}

/// A finite indexed multiset of weak orderings over one alternative set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Profile {
    alternatives: AlternativeSet,
    ballots: Vec<Ballot>,
}

impl Profile {
    /// The empty profile over `alternatives`.
    pub fn new(alternatives: AlternativeSet) -> Self {
        Profile {
            alternatives,
            ballots: Vec::new(),
        }
    }

    pub fn from_ballots(
        alternatives: AlternativeSet,
        ballots: impl IntoIterator<Item = (VoterId, WeakOrdering)>,
    ) -> Result<Self> {
        let mut profile = Profile::new(alternatives);
        for (voter, ordering) in ballots {
            profile.push(voter, ordering)?;
        }
        Ok(profile)
    }

    /// Builds a profile with voters numbered `1..=n` in order.
    pub fn numbered(
        alternatives: AlternativeSet,
        orderings: impl IntoIterator<Item = WeakOrdering>,
    ) -> Result<Self> {
        Self::from_ballots(
            alternatives,
            orderings
                .into_iter()
                .enumerate()
                .map(|(i, o)| (VoterId(i as i64 + 1), o)),
        )
    }

    pub fn push(&mut self, voter: VoterId, ordering: WeakOrdering) -> Result<()> {
        if ordering.len() != self.alternatives.len() {
            return Err(Error::AlternativeCountMismatch {
                expected: self.alternatives.len(),
                found: ordering.len(),
            });
        }
        if self.ballots.iter().any(|b| b.voter == voter) {
            return Err(Error::DuplicateVoter(voter.0));
        }
        self.ballots.push(Ballot { voter, ordering });
        Ok(())
    }

    pub fn alternatives(&self) -> &AlternativeSet {
        &self.alternatives
    }

    pub fn ballots(&self) -> &[Ballot] {
        &self.ballots
    }

    pub fn len(&self) -> usize {
        self.ballots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ballots.is_empty()
    }

    pub fn concerned_count(&self) -> usize {
        self.ballots
            .iter()
            .filter(|b| b.ordering.is_concerned())
            .count()
    }

    pub fn voter_ids(&self) -> Vec<VoterId> {
        self.ballots.iter().map(|b| b.voter).collect()
    }

    /// Restricts every ballot to the oriented triple.
    pub fn restrict(&self, triple: Triple) -> Result<TripleProfile> {
        self.alternatives.check_triple(triple)?;
        let entries = self
            .ballots
            .iter()
            .map(|b| {
                let local = b.ordering.restrict(triple)?;
                Ok((b.voter, TripleOrdering::from_weak(&local)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(TripleProfile::new(
            self.alternatives.labels(triple),
            entries,
        ))
    }

    /// Every ballot replaced by its antagonistic ordering.
    pub fn reversed(&self) -> Profile {
        Profile {
            alternatives: self.alternatives.clone(),
            ballots: self
                .ballots
                .iter()
                .map(|b| Ballot {
                    voter: b.voter,
                    ordering: b.ordering.reverse(),
                })
                .collect(),
        }
    }

    /// Profile union. Voters of `other` whose ids collide with `self` are
    /// given fresh ids above every id in use.
    pub fn union(&self, other: &Profile) -> Result<Profile> {
        if self.alternatives != other.alternatives {
            return Err(Error::AlternativeCountMismatch {
                expected: self.alternatives.len(),
                found: other.alternatives.len(),
            });
        }
        let mut next = self
            .ballots
            .iter()
            .chain(&other.ballots)
            .map(|b| b.voter.0)
            .max()
            .unwrap_or(0)
            .max(0)
            + 1;
        let mut out = self.clone();
        for b in &other.ballots {
            let voter = if out.ballots.iter().any(|x| x.voter == b.voter) {
                next += 1;
                VoterId(next - 1)
            } else {
                b.voter
            };
            out.push(voter, b.ordering.clone())?;
        }
        Ok(out)
    }

    /// The sub-profile of the listed voters, in profile order.
    pub fn select(&self, voters: &[VoterId]) -> Profile {
        Profile {
            alternatives: self.alternatives.clone(),
            ballots: self
                .ballots
                .iter()
                .filter(|b| voters.contains(&b.voter))
                .cloned()
                .collect(),
        }
    }

    /// The profile without the listed voters.
    pub fn without(&self, voters: &[VoterId]) -> Profile {
        Profile {
            alternatives: self.alternatives.clone(),
            ballots: self
                .ballots
                .iter()
                .filter(|b| !voters.contains(&b.voter))
                .cloned()
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordering::parse_ordering;

    fn xyz() -> AlternativeSet {
        AlternativeSet::from_names(["x", "y", "z"]).unwrap()
    }

    #[test]
    fn duplicate_voters_rejected() {
        let alts = xyz();
        let o = parse_ordering("x>y>z", &alts).unwrap();
        let err = Profile::from_ballots(alts, [(VoterId(1), o.clone()), (VoterId(1), o)]);
        assert_eq!(err, Err(Error::DuplicateVoter(1)));
    }

    #[test]
    fn ordering_size_must_match() {
        let mut p = Profile::new(xyz());
        let err = p.push(VoterId(1), WeakOrdering::unconcerned(4));
        assert!(matches!(err, Err(Error::AlternativeCountMismatch { .. })));
    }

    #[test]
    fn union_refreshes_colliding_ids() {
        let alts = xyz();
        let o = parse_ordering("x>y>z", &alts).unwrap();
        let a = Profile::numbered(alts.clone(), [o.clone(), o.clone()]).unwrap();
        let b = Profile::numbered(alts, [o.clone()]).unwrap();
        let u = a.union(&b).unwrap();
        assert_eq!(u.voter_ids(), vec![VoterId(1), VoterId(2), VoterId(3)]);
    }
}
