//! Weak orderings over an alternative set and their text form.
//!
//! The text form is `group (">" group)*` with `group = alt ("=" alt)*`,
//! for example `x>y=z`. Whitespace around tokens is ignored.

use std::fmt;

use crate::alternative::{AlternativeSet, Triple};
use crate::error::{Error, Result};

/// A complete transitive weak ordering, stored as a dense level index per
/// alternative (0 is the top level).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeakOrdering {
    rank: Vec<u32>,
}

impl WeakOrdering {
    /// Builds an ordering from arbitrary per-alternative scores where a lower
    /// score is better. Scores are compacted to dense levels.
    pub fn from_ranks<T: Ord + Copy>(ranks: &[T]) -> Self {
        let mut distinct: Vec<T> = ranks.to_vec();
        distinct.sort();
        distinct.dedup();
        let rank = ranks
            .iter()
            .map(|r| distinct.binary_search(r).unwrap() as u32)
            .collect();
        WeakOrdering { rank }
    }

    /// Builds an ordering from groups of alternative indices, best first.
    pub fn from_levels(levels: &[Vec<usize>], alternatives: usize) -> Result<Self> {
        let mut rank = vec![u32::MAX; alternatives];
        for (level, group) in levels.iter().enumerate() {
            if group.is_empty() {
                return Err(Error::MalformedOrdering("empty group".into()));
            }
            for &a in group {
                let slot = rank.get_mut(a).ok_or(Error::NotInAlternativeSet(a))?;
                if *slot != u32::MAX {
                    return Err(Error::DuplicateAlternative(a.to_string()));
                }
                *slot = level as u32;
            }
        }
        if let Some(missing) = rank.iter().position(|&r| r == u32::MAX) {
            return Err(Error::MissingAlternative(missing.to_string()));
        }
        Ok(WeakOrdering { rank })
    }

    /// Complete indifference over `alternatives` alternatives.
    pub fn unconcerned(alternatives: usize) -> Self {
        WeakOrdering {
            rank: vec![0; alternatives],
        }
    }

    /// Number of alternatives covered.
    pub fn len(&self) -> usize {
        self.rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank.is_empty()
    }

    pub fn level_count(&self) -> usize {
        self.rank.iter().max().map_or(0, |&m| m as usize + 1)
    }

    /// A voter is concerned unless indifferent between all alternatives.
    pub fn is_concerned(&self) -> bool {
        self.level_count() > 1
    }

    pub fn rank(&self, a: usize) -> u32 {
        self.rank[a]
    }

    pub fn ranks(&self) -> &[u32] {
        &self.rank
    }

    /// `a P b`
    pub fn prefers(&self, a: usize, b: usize) -> bool {
        self.rank[a] < self.rank[b]
    }

    /// `a R b`
    pub fn weakly_prefers(&self, a: usize, b: usize) -> bool {
        self.rank[a] <= self.rank[b]
    }

    /// `a I b`
    pub fn indifferent(&self, a: usize, b: usize) -> bool {
        self.rank[a] == self.rank[b]
    }

    /// Groups of alternative indices, best first; each group in index order.
    pub fn levels(&self) -> Vec<Vec<usize>> {
        let mut levels = vec![Vec::new(); self.level_count()];
        for (a, &r) in self.rank.iter().enumerate() {
            levels[r as usize].push(a);
        }
        levels
    }

    /// The antagonistic ordering: levels in reverse order.
    pub fn reverse(&self) -> Self {
        let top = self.level_count().saturating_sub(1) as u32;
        WeakOrdering {
            rank: self.rank.iter().map(|&r| top - r).collect(),
        }
    }

    /// The ordering induced on the triple; position `i` of the result is
    /// the `i`-th member of the triple.
    pub fn restrict(&self, triple: Triple) -> Result<WeakOrdering> {
        let members = triple.members();
        if let Some(&bad) = members.iter().find(|&&a| a >= self.len()) {
            return Err(Error::NotInAlternativeSet(bad));
        }
        Ok(WeakOrdering::from_ranks(&members.map(|a| self.rank[a])))
    }

    /// Renders the ordering with the given names, e.g. `x>y=z`.
    pub fn display<'a>(&'a self, alternatives: &'a AlternativeSet) -> DisplayOrdering<'a> {
        DisplayOrdering {
            ordering: self,
            names: Names::Set(alternatives),
        }
    }

    pub fn display_with<'a>(&'a self, names: &'a [String]) -> DisplayOrdering<'a> {
        DisplayOrdering {
            ordering: self,
            names: Names::Slice(names),
        }
    }
}

enum Names<'a> {
    Set(&'a AlternativeSet),
    Slice(&'a [String]),
}

pub struct DisplayOrdering<'a> {
    ordering: &'a WeakOrdering,
    names: Names<'a>,
}

impl fmt::Display for DisplayOrdering<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, group) in self.ordering.levels().iter().enumerate() {
            if i > 0 {
                f.write_str(">")?;
            }
            for (j, &a) in group.iter().enumerate() {
                if j > 0 {
                    f.write_str("=")?;
                }
                match &self.names {
                    Names::Set(set) => f.write_str(set.name(a))?,
                    Names::Slice(names) => f.write_str(&names[a])?,
                }
            }
        }
        Ok(())
    }
}

/// Parses `x>y=z` style text against an alternative set.
pub fn parse_ordering(text: &str, alternatives: &AlternativeSet) -> Result<WeakOrdering> {
    if text.trim().is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut rank = vec![None; alternatives.len()];
    for (level, group) in text.split('>').enumerate() {
        for token in group.split('=') {
            let token = token.trim();
            if token.is_empty() {
                return Err(Error::MalformedOrdering(format!(
                    "empty alternative in `{}`",
                    text.trim()
                )));
            }
            let a = alternatives
                .index_of(token)
                .ok_or_else(|| Error::UnknownAlternative(token.to_string()))?;
            if rank[a].replace(level).is_some() {
                return Err(Error::DuplicateAlternative(token.to_string()));
            }
        }
    }
    let rank = rank
        .iter()
        .enumerate()
        .map(|(a, r)| r.ok_or_else(|| Error::MissingAlternative(alternatives.name(a).to_string())))
        .collect::<Result<Vec<_>>>()?;
    Ok(WeakOrdering::from_ranks(&rank))
}

/// Collects alternative names in order of first appearance, for inferring an
/// alternative set from an ordering when none is declared.
pub fn alternatives_in(text: &str) -> Result<AlternativeSet> {
    if text.trim().is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut names: Vec<&str> = Vec::new();
    for token in text.split(['>', '=']) {
        let token = token.trim();
        if token.is_empty() {
            return Err(Error::MalformedOrdering(format!(
                "empty alternative in `{}`",
                text.trim()
            )));
        }
        if names.contains(&token) {
            return Err(Error::DuplicateAlternative(token.to_string()));
        }
        names.push(token);
    }
    AlternativeSet::from_names(names)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xyz() -> AlternativeSet {
        AlternativeSet::from_names(["x", "y", "z"]).unwrap()
    }

    #[test]
    fn parses_groups_left_to_right() {
        let o = parse_ordering("x>y=z", &xyz()).unwrap();
        assert_eq!(o.levels(), vec![vec![0], vec![1, 2]]);
        assert!(o.prefers(0, 1));
        assert!(o.indifferent(1, 2));
    }

    #[test]
    fn parse_is_whitespace_insensitive() {
        let a = parse_ordering("  y = x >z ", &xyz()).unwrap();
        let b = parse_ordering("x=y>z", &xyz()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn all_equal_is_unconcerned() {
        let o = parse_ordering("x=y=z", &xyz()).unwrap();
        assert_eq!(o.levels(), vec![vec![0, 1, 2]]);
        assert!(!o.is_concerned());
    }

    #[test]
    fn parse_errors() {
        let alts = xyz();
        assert_eq!(
            parse_ordering("x>y>x", &alts),
            Err(Error::DuplicateAlternative("x".into()))
        );
        assert_eq!(
            parse_ordering("x>y>w", &alts),
            Err(Error::UnknownAlternative("w".into()))
        );
        assert_eq!(
            parse_ordering("x>y", &alts),
            Err(Error::MissingAlternative("z".into()))
        );
        assert_eq!(parse_ordering("   ", &alts), Err(Error::EmptyInput));
        assert!(matches!(
            parse_ordering("x>>y>z", &alts),
            Err(Error::MalformedOrdering(_))
        ));
    }

    #[test]
    fn reverse_examples() {
        let alts = xyz();
        let rev = |s: &str| {
            parse_ordering(s, &alts)
                .unwrap()
                .reverse()
                .display(&alts)
                .to_string()
        };
        assert_eq!(rev("x>y>z"), "z>y>x");
        assert_eq!(rev("x>y=z"), "y=z>x");
        assert_eq!(rev("x=y=z"), "x=y=z");
    }

    #[test]
    fn restrict_examples() {
        let alts = AlternativeSet::from_names(["a", "b", "c", "d"]).unwrap();
        let o = parse_ordering("a>b>c>d", &alts).unwrap();
        let t = alts.triple("a", "c", "d").unwrap();
        assert_eq!(o.restrict(t).unwrap().ranks(), &[0, 1, 2]);

        let o = parse_ordering("a=b>c=d", &alts).unwrap();
        let t = alts.triple("a", "b", "c").unwrap();
        assert_eq!(o.restrict(t).unwrap().ranks(), &[0, 0, 1]);

        assert_eq!(alts.triple("a", "a", "c"), Err(Error::DegenerateTriple));
        let far = Triple::new(0, 1, 7).unwrap();
        assert_eq!(o.restrict(far), Err(Error::NotInAlternativeSet(7)));
    }

    #[test]
    fn levels_round_trip() {
        let o = WeakOrdering::from_levels(&[vec![2], vec![0, 1]], 3).unwrap();
        assert_eq!(o.display(&xyz()).to_string(), "z>x=y");
        assert!(WeakOrdering::from_levels(&[vec![0], vec![0, 1, 2]], 3).is_err());
        assert!(WeakOrdering::from_levels(&[vec![0, 1]], 3).is_err());
    }

    #[test]
    fn infers_alternatives_in_appearance_order() {
        let set = alternatives_in("b > a = c").unwrap();
        assert_eq!(set.name(0), "b");
        assert_eq!(set.name(2), "c");
        assert!(alternatives_in("a>a").is_err());
    }
}
