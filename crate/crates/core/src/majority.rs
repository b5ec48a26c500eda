//! Pairwise margins and the simple-majority relation.

use serde::{Deserialize, Serialize};

use crate::ordering::WeakOrdering;
use crate::profile::Profile;

/// Antisymmetric net support `m(a,b) = N(aPb) - N(bPa)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MarginMatrix {
    n: usize,
    m: Vec<i64>,
}

impl MarginMatrix {
    pub fn zeros(n: usize) -> Self {
        MarginMatrix {
            n,
            m: vec![0; n * n],
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn get(&self, a: usize, b: usize) -> i64 {
        self.m[a * self.n + b]
    }

    pub fn is_zero(&self) -> bool {
        self.m.iter().all(|&v| v == 0)
    }

    /// Adds one ballot's contribution.
    pub fn add_ordering(&mut self, ordering: &WeakOrdering) {
        self.add_scaled(ordering, 1);
    }

    pub fn add_scaled(&mut self, ordering: &WeakOrdering, k: i64) {
        for a in 0..self.n {
            for b in 0..self.n {
                if ordering.prefers(a, b) {
                    self.m[a * self.n + b] += k;
                    self.m[b * self.n + a] -= k;
                }
            }
        }
    }

    pub fn plus(&self, other: &MarginMatrix) -> MarginMatrix {
        assert_eq!(self.n, other.n, "margin matrices over different sets");
        MarginMatrix {
            n: self.n,
            m: self.m.iter().zip(&other.m).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn negated(&self) -> MarginMatrix {
        MarginMatrix {
            n: self.n,
            m: self.m.iter().map(|v| -v).collect(),
        }
    }
}

/// Margins of a profile; the empty profile gives the zero matrix.
pub fn margins(profile: &Profile) -> MarginMatrix {
    let mut m = MarginMatrix::zeros(profile.alternatives().len());
    for b in profile.ballots() {
        m.add_ordering(&b.ordering);
    }
    m
}

/// Raw counts `N(aPb)` and `N(aIb)` per ordered pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairwiseCounts {
    n: usize,
    prefer: Vec<u64>,
    tie: Vec<u64>,
}

impl PairwiseCounts {
    pub fn of(profile: &Profile) -> Self {
        let n = profile.alternatives().len();
        let mut prefer = vec![0; n * n];
        let mut tie = vec![0; n * n];
        for b in profile.ballots() {
            for x in 0..n {
                for y in 0..n {
                    if b.ordering.prefers(x, y) {
                        prefer[x * n + y] += 1;
                    } else if x != y && b.ordering.indifferent(x, y) {
                        tie[x * n + y] += 1;
                    }
                }
            }
        }
        PairwiseCounts { n, prefer, tie }
    }

    /// `N(aPb)`
    pub fn strict(&self, a: usize, b: usize) -> u64 {
        self.prefer[a * self.n + b]
    }

    /// `N(aIb)`
    pub fn indifferent(&self, a: usize, b: usize) -> u64 {
        self.tie[a * self.n + b]
    }

    /// `N(aRb) = N(aPb) + N(aIb)`
    pub fn weak(&self, a: usize, b: usize) -> u64 {
        self.strict(a, b) + self.indifferent(a, b)
    }
}

/// Outcome of the majority vote on one unordered pair `(a, b)`, `a < b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PairOutcome {
    /// `a P b`
    First,
    /// `b P a`
    Second,
    /// `a I b`
    Tie,
}

/// The complete social relation induced by a margin matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MajorityRelation {
    sign: Vec<i8>,
    n: usize,
    transitive: bool,
    witness: Option<[usize; 3]>,
}

impl MajorityRelation {
    pub fn from_margins(m: &MarginMatrix) -> Self {
        let n = m.len();
        let sign: Vec<i8> = m.m.iter().map(|v| v.signum() as i8).collect();
        let weak = |a: usize, b: usize| sign[a * n + b] >= 0;
        let mut witness = None;
        'search: for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if a == b || b == c || a == c {
                        continue;
                    }
                    if weak(a, b) && weak(b, c) && !weak(a, c) {
                        witness = Some([a, b, c]);
                        break 'search;
                    }
                }
            }
        }
        MajorityRelation {
            sign,
            n,
            transitive: witness.is_none(),
            witness,
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// `a P_C b`
    pub fn prefers(&self, a: usize, b: usize) -> bool {
        self.sign[a * self.n + b] > 0
    }

    /// `a R_C b`
    pub fn weakly_prefers(&self, a: usize, b: usize) -> bool {
        self.sign[a * self.n + b] >= 0
    }

    /// `a I_C b`
    pub fn indifferent(&self, a: usize, b: usize) -> bool {
        self.sign[a * self.n + b] == 0
    }

    pub fn outcome(&self, a: usize, b: usize) -> PairOutcome {
        match self.sign[a * self.n + b] {
            1 => PairOutcome::First,
            -1 => PairOutcome::Second,
            _ => PairOutcome::Tie,
        }
    }

    /// Every unordered pair `a < b` with its outcome.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, PairOutcome)> + '_ {
        (0..self.n).flat_map(move |a| (a + 1..self.n).map(move |b| (a, b, self.outcome(a, b))))
    }

    pub fn is_transitive(&self) -> bool {
        self.transitive
    }

    /// First ordered triple `(a, b, c)` with `aRb`, `bRc` but not `aRc`.
    pub fn witness(&self) -> Option<[usize; 3]> {
        self.witness
    }

    pub fn is_complete_indifference(&self) -> bool {
        self.sign.iter().all(|&s| s == 0)
    }

    /// The social ordering, when transitive.
    pub fn as_ordering(&self) -> Option<WeakOrdering> {
        if !self.transitive {
            return None;
        }
        // in a transitive relation, the number of alternatives beaten
        // strictly orders the levels
        let beaten: Vec<usize> = (0..self.n)
            .map(|a| (0..self.n).filter(|&b| self.prefers(a, b)).count())
            .collect();
        let scores: Vec<std::cmp::Reverse<usize>> =
            beaten.into_iter().map(std::cmp::Reverse).collect();
        Some(WeakOrdering::from_ranks(&scores))
    }
}

/// Simple-majority aggregation: `aPb` iff `m(a,b) > 0`, `aIb` iff `m(a,b) = 0`.
pub fn aggregate(profile: &Profile) -> MajorityRelation {
    MajorityRelation::from_margins(&margins(profile))
}
