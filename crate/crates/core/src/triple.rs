//! The thirteen weak orderings over an oriented triple and their cycle
//! taxonomy.
//!
//! Relative to an oriented triple `(x, y, z)` the concerned orderings split
//! into four cycles of three, listed here in slot order:
//!
//! | cycle | position 0 | position 1 | position 2 |
//! |-------|------------|------------|------------|
//! | U1    | `x>y>z`    | `y>z>x`    | `z>x>y`    |
//! | U2    | `z>y>x`    | `x>z>y`    | `y>x>z`    |
//! | V1    | `x>y=z`    | `y>x=z`    | `z>x=y`    |
//! | V2    | `y=z>x`    | `x=z>y`    | `x=y>z`    |
//!
//! Reversal maps U1 to U2 and V1 to V2 position by position. The third V2
//! element is the one-tie ordering `y I x P z`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::alternative::Triple;
use crate::error::{Error, Result};
use crate::ordering::WeakOrdering;
use crate::profile::VoterId;

/// Position ranks `[x, y, z]` of each slot; 0 is the top level.
const RANKS: [[u8; 3]; 13] = [
    [0, 1, 2],
    [2, 0, 1],
    [1, 2, 0],
    [2, 1, 0],
    [0, 2, 1],
    [1, 0, 2],
    [0, 1, 1],
    [1, 0, 1],
    [1, 1, 0],
    [1, 0, 0],
    [0, 1, 0],
    [0, 0, 1],
    [0, 0, 0],
];

/// One of the thirteen weak orderings of an oriented triple, identified by
/// its slot in the taxonomy table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TripleOrdering(u8);

impl TripleOrdering {
    pub const COUNT: usize = 13;

    pub const ALL: [TripleOrdering; 13] = {
        let mut all = [TripleOrdering(0); 13];
        let mut i = 0;
        while i < 13 {
            all[i] = TripleOrdering(i as u8);
            i += 1;
        }
        all
    };

    pub const UNCONCERNED: TripleOrdering = TripleOrdering(12);

    pub fn from_index(index: usize) -> Option<Self> {
        (index < Self::COUNT).then_some(TripleOrdering(index as u8))
    }

    /// Looks up the slot with the same pairwise relations as `ranks`.
    pub fn from_ranks(ranks: [u8; 3]) -> Self {
        let sign = |a: u8, b: u8| a.cmp(&b);
        let found = RANKS.iter().position(|r| {
            sign(r[0], r[1]) == sign(ranks[0], ranks[1])
                && sign(r[1], r[2]) == sign(ranks[1], ranks[2])
                && sign(r[0], r[2]) == sign(ranks[0], ranks[2])
        });
        TripleOrdering(found.expect("every rank pattern of a triple is a weak ordering") as u8)
    }

    pub fn from_weak(ordering: &WeakOrdering) -> Result<Self> {
        if ordering.len() != 3 {
            return Err(Error::NotATripleOrdering(ordering.len()));
        }
        let r = ordering.ranks();
        Ok(Self::from_ranks([r[0] as u8, r[1] as u8, r[2] as u8]))
    }

    /// Strict ordering `a > b > c` over positions.
    pub fn strict(a: usize, b: usize, c: usize) -> Self {
        let mut ranks = [0u8; 3];
        ranks[a] = 0;
        ranks[b] = 1;
        ranks[c] = 2;
        Self::from_ranks(ranks)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn ranks(self) -> [u8; 3] {
        RANKS[self.index()]
    }

    pub fn to_weak(self) -> WeakOrdering {
        WeakOrdering::from_ranks(&self.ranks())
    }

    /// `a P b` over positions 0..3.
    pub fn prefers(self, a: usize, b: usize) -> bool {
        let r = self.ranks();
        r[a] < r[b]
    }

    /// `a R b`
    pub fn weakly_prefers(self, a: usize, b: usize) -> bool {
        let r = self.ranks();
        r[a] <= r[b]
    }

    /// `a I b`
    pub fn indifferent(self, a: usize, b: usize) -> bool {
        let r = self.ranks();
        r[a] == r[b]
    }

    /// `a R b` for every `b`.
    pub fn is_best(self, a: usize) -> bool {
        (0..3).all(|b| self.weakly_prefers(a, b))
    }

    /// `b R a` for every `b`.
    pub fn is_worst(self, a: usize) -> bool {
        (0..3).all(|b| self.weakly_prefers(b, a))
    }

    /// `(b R a and a R c) or (c R a and a R b)` for the other two positions.
    pub fn is_medium(self, a: usize) -> bool {
        let (b, c) = others(a);
        (self.weakly_prefers(b, a) && self.weakly_prefers(a, c))
            || (self.weakly_prefers(c, a) && self.weakly_prefers(a, b))
    }

    pub fn is_strict(self) -> bool {
        self.0 < 6
    }

    pub fn is_one_tie(self) -> bool {
        (6..12).contains(&self.0)
    }

    pub fn is_concerned(self) -> bool {
        self.0 < 12
    }

    pub fn reverse(self) -> Self {
        match self.0 {
            0..=2 => TripleOrdering(self.0 + 3),
            3..=5 => TripleOrdering(self.0 - 3),
            6..=8 => TripleOrdering(self.0 + 3),
            9..=11 => TripleOrdering(self.0 - 3),
            _ => self,
        }
    }

    /// Slot in the cycle taxonomy.
    pub fn class(self) -> OrderingClass {
        let (kind, cycle) = match self.0 {
            0..=2 => (OrderKind::Strict, Some(CycleTag::U1)),
            3..=5 => (OrderKind::Strict, Some(CycleTag::U2)),
            6..=8 => (OrderKind::OneTie, Some(CycleTag::V1)),
            9..=11 => (OrderKind::OneTie, Some(CycleTag::V2)),
            _ => (OrderKind::Unconcerned, None),
        };
        OrderingClass {
            kind,
            cycle: cycle.map(|tag| (tag, self.0 % 3)),
        }
    }

    pub fn cycle(self) -> Option<CycleTag> {
        self.class().cycle.map(|(tag, _)| tag)
    }

    /// Net pairwise support contributed by one voter holding this ordering.
    pub fn margins(self) -> TripleMargins {
        let r = self.ranks();
        let m = |a: usize, b: usize| (r[b] as i64 - r[a] as i64).signum();
        TripleMargins {
            xy: m(0, 1),
            yz: m(1, 2),
            zx: m(2, 0),
        }
    }

    /// Re-expresses the ordering under a new orientation whose position `i`
    /// is old position `perm[i]`.
    pub fn relabel(self, perm: [usize; 3]) -> Self {
        let r = self.ranks();
        Self::from_ranks(perm.map(|p| r[p]))
    }

    pub fn display<'a>(self, labels: &'a [String; 3]) -> impl fmt::Display + 'a {
        DisplayTriple {
            ordering: self,
            labels,
        }
    }
}

impl Serialize for TripleOrdering {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_u8(self.0)
    }
}

impl<'de> Deserialize<'de> for TripleOrdering {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let index = u8::deserialize(deserializer)?;
        TripleOrdering::from_index(index as usize)
            .ok_or_else(|| serde::de::Error::custom(format!("ordering slot {index} out of range")))
    }
}

struct DisplayTriple<'a> {
    ordering: TripleOrdering,
    labels: &'a [String; 3],
}

impl fmt::Display for DisplayTriple<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.ordering
            .to_weak()
            .display_with(self.labels.as_slice())
            .fmt(f)
    }
}

fn others(a: usize) -> (usize, usize) {
    match a {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrderKind {
    Strict,
    OneTie,
    Unconcerned,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CycleTag {
    U1,
    U2,
    V1,
    V2,
}

impl fmt::Display for CycleTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Kind of an ordering and its cycle slot `(tag, position)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrderingClass {
    pub kind: OrderKind,
    pub cycle: Option<(CycleTag, u8)>,
}

/// Classifies a three-alternative ordering relative to an orientation of its
/// alternatives.
pub fn classify_ordering(ordering: &WeakOrdering, triple: Triple) -> Result<OrderingClass> {
    if ordering.len() != 3 {
        return Err(Error::NotATripleOrdering(ordering.len()));
    }
    let local = ordering.restrict(triple)?;
    Ok(TripleOrdering::from_weak(&local)?.class())
}

/// Margins around an oriented triple: `m(x,y)`, `m(y,z)` and `m(z,x)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TripleMargins {
    pub xy: i64,
    pub yz: i64,
    pub zx: i64,
}

impl TripleMargins {
    pub fn is_zero(&self) -> bool {
        self.xy == 0 && self.yz == 0 && self.zx == 0
    }

    /// `m(a, b)` over positions.
    pub fn get(&self, a: usize, b: usize) -> i64 {
        match (a, b) {
            (0, 1) => self.xy,
            (1, 0) => -self.xy,
            (1, 2) => self.yz,
            (2, 1) => -self.yz,
            (2, 0) => self.zx,
            (0, 2) => -self.zx,
            _ => 0,
        }
    }

    /// Whether the induced majority relation is transitive: for every
    /// ordered `(a, b, c)`, `aRb` and `bRc` imply `aRc`.
    pub fn is_transitive(&self) -> bool {
        const PERMS: [[usize; 3]; 6] = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        PERMS
            .iter()
            .all(|&[a, b, c]| !(self.get(a, b) >= 0 && self.get(b, c) >= 0) || self.get(a, c) >= 0)
    }
}

impl Add for TripleMargins {
    type Output = TripleMargins;
    fn add(self, rhs: Self) -> Self {
        TripleMargins {
            xy: self.xy + rhs.xy,
            yz: self.yz + rhs.yz,
            zx: self.zx + rhs.zx,
        }
    }
}

impl AddAssign for TripleMargins {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl Sub for TripleMargins {
    type Output = TripleMargins;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for TripleMargins {
    type Output = TripleMargins;
    fn neg(self) -> Self {
        TripleMargins {
            xy: -self.xy,
            yz: -self.yz,
            zx: -self.zx,
        }
    }
}

impl Mul<i64> for TripleMargins {
    type Output = TripleMargins;
    fn mul(self, k: i64) -> Self {
        TripleMargins {
            xy: self.xy * k,
            yz: self.yz * k,
            zx: self.zx * k,
        }
    }
}

impl std::iter::Sum for TripleMargins {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(TripleMargins::default(), Add::add)
    }
}

/// Number of voters holding each of the thirteen orderings.
pub type TypeCounts = [u32; 13];

/// A profile restricted to one oriented triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleProfile {
    labels: [String; 3],
    entries: Vec<(VoterId, TripleOrdering)>,
}

impl TripleProfile {
    pub fn new(labels: [String; 3], entries: Vec<(VoterId, TripleOrdering)>) -> Self {
        TripleProfile { labels, entries }
    }

    /// Voters `1..=n` over the labels `x`, `y`, `z`.
    pub fn from_types(types: &[TripleOrdering]) -> Self {
        Self::numbered(default_labels(), types)
    }

    pub fn numbered(labels: [String; 3], types: &[TripleOrdering]) -> Self {
        let entries = types
            .iter()
            .enumerate()
            .map(|(i, &t)| (VoterId(i as i64 + 1), t))
            .collect();
        TripleProfile { labels, entries }
    }

    pub fn labels(&self) -> &[String; 3] {
        &self.labels
    }

    pub fn entries(&self) -> &[(VoterId, TripleOrdering)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn types(&self) -> impl Iterator<Item = TripleOrdering> + '_ {
        self.entries.iter().map(|&(_, t)| t)
    }

    pub fn counts(&self) -> TypeCounts {
        let mut counts = [0u32; 13];
        for t in self.types() {
            counts[t.index()] += 1;
        }
        counts
    }

    pub fn margins(&self) -> TripleMargins {
        self.types().map(TripleOrdering::margins).sum()
    }

    pub fn is_transitive(&self) -> bool {
        self.margins().is_transitive()
    }

    pub fn concerned(&self) -> TripleProfile {
        self.filter(|_, t| t.is_concerned())
    }

    pub fn concerned_count(&self) -> usize {
        self.types().filter(|t| t.is_concerned()).count()
    }

    pub fn filter(&self, mut keep: impl FnMut(VoterId, TripleOrdering) -> bool) -> TripleProfile {
        TripleProfile {
            labels: self.labels.clone(),
            entries: self
                .entries
                .iter()
                .copied()
                .filter(|&(v, t)| keep(v, t))
                .collect(),
        }
    }

    pub fn without(&self, voters: &[VoterId]) -> TripleProfile {
        self.filter(|v, _| !voters.contains(&v))
    }

    pub fn ordering_of(&self, voter: VoterId) -> Option<TripleOrdering> {
        self.entries
            .iter()
            .find(|&&(v, _)| v == voter)
            .map(|&(_, t)| t)
    }

    pub fn push(&mut self, voter: VoterId, ordering: TripleOrdering) {
        self.entries.push((voter, ordering));
    }

    /// Converts back into a general profile over the three labels.
    pub fn to_profile(&self) -> Result<crate::profile::Profile> {
        let alts = crate::alternative::AlternativeSet::from_names(self.labels.clone())?;
        crate::profile::Profile::from_ballots(
            alts,
            self.entries.iter().map(|&(v, t)| (v, t.to_weak())),
        )
    }
}

pub fn default_labels() -> [String; 3] {
    ["x".to_string(), "y".to_string(), "z".to_string()]
}
