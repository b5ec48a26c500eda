//! Simple-majority aggregation of weak orderings with triple-wise
//! transitivity analysis.
//!
//! The crate aggregates weak orderings under the simple majority rule and
//! decides whether the social relation is transitive. Around that it offers
//! the classic domain-restriction checks (dichotomous, echoic, antagonistic,
//! value restriction, taboo, extremal restriction, limited agreement, cycle
//! balance), a reduction of triple profiles to standard forms `B_{k,l}`,
//! sufficient conditions for transitivity when strict cycles are present,
//! an indifferent-set / ordinal-set algebra, and exhaustive enumeration
//! oracles that verify these results at small scale.
//!
//! Every condition is local to an oriented triple `(x, y, z)`; a profile over
//! more alternatives is analysed one triple at a time.

pub mod alternative;
pub mod conditions;
pub mod cycles;
pub mod error;
pub mod majority;
pub mod oi;
pub mod oracle;
pub mod ordering;
pub mod profile;
pub mod profile_file;
pub mod reduction;
pub mod triple;

pub use alternative::{Alternative, AlternativeSet, Triple};
pub use error::{Error, Result};
pub use majority::{
    aggregate, margins, MajorityRelation, MarginMatrix, PairOutcome, PairwiseCounts,
};
pub use ordering::{parse_ordering, WeakOrdering};
pub use profile::{Ballot, Profile, VoterId};
pub use triple::{
    classify_ordering, CycleTag, OrderKind, OrderingClass, TripleMargins, TripleOrdering,
    TripleProfile,
};
