//! Alternatives, alternative sets and oriented triples.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A named alternative. Ids are nonempty tokens over `[A-Za-z0-9_]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Alternative(String);

impl Alternative {
    pub fn new(id: impl Into<String>) -> Result<Self> {
        let id = id.into();
        if id.is_empty() || !id.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(Error::InvalidAlternativeId(id));
        }
        Ok(Alternative(id))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl TryFrom<String> for Alternative {
    type Error = Error;

    fn try_from(value: String) -> Result<Self> {
        Alternative::new(value)
    }
}

impl From<Alternative> for String {
    fn from(value: Alternative) -> Self {
        value.0
    }
}

impl fmt::Display for Alternative {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// An ordered set of distinct alternatives. Orderings and margins refer to
/// alternatives by their index in this set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlternativeSet {
    ids: Vec<Alternative>,
}

impl AlternativeSet {
    pub fn new(ids: impl IntoIterator<Item = Alternative>) -> Result<Self> {
        let ids: Vec<Alternative> = ids.into_iter().collect();
        for (i, a) in ids.iter().enumerate() {
            if ids[..i].contains(a) {
                return Err(Error::DuplicateAlternative(a.0.clone()));
            }
        }
        Ok(AlternativeSet { ids })
    }

    pub fn from_names<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let ids = names
            .into_iter()
            .map(Alternative::new)
            .collect::<Result<Vec<_>>>()?;
        Self::new(ids)
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<&Alternative> {
        self.ids.get(index)
    }

    pub fn name(&self, index: usize) -> &str {
        self.ids[index].as_str()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.ids.iter().position(|a| a.as_str() == name)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Alternative> {
        self.ids.iter()
    }

    /// Resolves three names into an oriented triple.
    pub fn triple(&self, x: &str, y: &str, z: &str) -> Result<Triple> {
        let find = |n: &str| {
            self.index_of(n)
                .ok_or_else(|| Error::UnknownAlternative(n.to_string()))
        };
        Triple::new(find(x)?, find(y)?, find(z)?)
    }

    /// All `C(n, 3)` triples with members in increasing index order.
    pub fn triples(&self) -> Vec<Triple> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    out.push(Triple([a, b, c]));
                }
            }
        }
        out
    }

    /// Names of the triple members in orientation order.
    pub fn labels(&self, triple: Triple) -> [String; 3] {
        triple.0.map(|i| self.name(i).to_string())
    }

    pub fn check_triple(&self, triple: Triple) -> Result<()> {
        match triple.0.iter().find(|&&i| i >= self.len()) {
            Some(&i) => Err(Error::NotInAlternativeSet(i)),
            None => Ok(()),
        }
    }
}

/// An oriented triple `(x, y, z)` of alternative indices.
///
/// Orientation matters for the cycle taxonomy: `xPyPz` is a U1 ordering
/// under `(x, y, z)` but a U2 ordering under `(z, y, x)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Triple([usize; 3]);

impl Triple {
    pub fn new(x: usize, y: usize, z: usize) -> Result<Self> {
        if x == y || y == z || x == z {
            return Err(Error::DegenerateTriple);
        }
        Ok(Triple([x, y, z]))
    }

    /// The triple `(0, 1, 2)`.
    pub fn first() -> Self {
        Triple([0, 1, 2])
    }

    pub fn members(&self) -> [usize; 3] {
        self.0
    }

    /// `(x, y, z)` becomes `(y, z, x)`.
    pub fn rotated(&self) -> Self {
        let [x, y, z] = self.0;
        Triple([y, z, x])
    }

    /// `(x, y, z)` becomes `(z, y, x)`.
    pub fn reversed(&self) -> Self {
        let [x, y, z] = self.0;
        Triple([z, y, x])
    }
}
