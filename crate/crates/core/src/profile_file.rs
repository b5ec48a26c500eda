//! Text profile files.
//!
//! ```text
//! # comment
//! alternatives: x y z
//! 1: x=y>z
//! 2: x>y=z
//! ```
//!
//! The `alternatives:` header is optional and must precede every ballot;
//! without it the set is taken from the first ordering, in order of
//! appearance. Ballot ids are positive and unique. `#` starts a comment
//! anywhere on a line, blank lines are skipped and CRLF endings are
//! accepted.

use std::fmt;

use crate::alternative::{Alternative, AlternativeSet};
use crate::error::Error;
use crate::ordering::{alternatives_in, parse_ordering};
use crate::profile::{Profile, VoterId};

/// An error tied to a 1-based line of the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineError {
    pub line: usize,
    pub error: Error,
}

impl fmt::Display for LineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.error)
    }
}

impl std::error::Error for LineError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProfileFile {
    pub profile: Profile,
    /// Source line of each ballot, in ballot order.
    pub ballot_lines: Vec<usize>,
}

/// Parses a profile file, stopping at the first bad line.
pub fn parse_profile_file(text: &str) -> Result<ProfileFile, LineError> {
    let (file, mut errors) = parse_lenient(text);
    match errors.is_empty() {
        true => file.ok_or(LineError {
            line: 1,
            error: Error::EmptyInput,
        }),
        false => Err(errors.swap_remove(0)),
    }
}

/// Parses every line it can and collects a diagnostic for each one it
/// cannot. Returns no profile when no alternative set could be fixed.
pub fn parse_lenient(text: &str) -> (Option<ProfileFile>, Vec<LineError>) {
    let text = text.strip_prefix('\u{feff}').unwrap_or(text);
    let mut errors = Vec::new();
    let mut profile: Option<Profile> = None;
    let mut ballot_lines = Vec::new();
    let mut header_allowed = true;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fail = |error| LineError { line, error };
        if let Some(rest) = content.strip_prefix("alternatives:") {
            if !header_allowed {
                errors.push(fail(Error::MalformedLine(
                    "`alternatives:` header must come first".into(),
                )));
                continue;
            }
            header_allowed = false;
            match parse_header(rest) {
                Ok(alts) => profile = Some(Profile::new(alts)),
                Err(e) => errors.push(fail(e)),
            }
            continue;
        }
        header_allowed = false;
        let Some((id, ordering)) = content.split_once(':') else {
            errors.push(fail(Error::MalformedLine(format!(
                "expected `<voter-id>: <ordering>`, found `{content}`"
            ))));
            continue;
        };
        let voter = match parse_voter(id) {
            Ok(v) => v,
            Err(e) => {
                errors.push(fail(e));
                continue;
            }
        };
        if profile.is_none() {
            match alternatives_in(ordering) {
                Ok(alts) => profile = Some(Profile::new(alts)),
                Err(e) => {
                    errors.push(fail(e));
                    continue;
                }
            }
        }
        let p = profile.as_mut().expect("alternative set fixed above");
        let pushed = parse_ordering(ordering, p.alternatives()).and_then(|o| p.push(voter, o));
        match pushed {
            Ok(()) => ballot_lines.push(line),
            Err(e) => errors.push(fail(e)),
        }
    }
    let file = profile.map(|profile| ProfileFile {
        profile,
        ballot_lines,
    });
    (file, errors)
}

fn parse_header(rest: &str) -> Result<AlternativeSet, Error> {
    let ids = rest
        .split_whitespace()
        .map(Alternative::new)
        .collect::<Result<Vec<_>, _>>()?;
    if ids.is_empty() {
        return Err(Error::MalformedLine(
            "`alternatives:` header lists nothing".into(),
        ));
    }
    AlternativeSet::new(ids)
}

fn parse_voter(text: &str) -> Result<VoterId, Error> {
    let text = text.trim();
    match text.parse::<i64>() {
        Ok(id) if id >= 1 => Ok(VoterId(id)),
        _ => Err(Error::InvalidVoterId(text.to_string())),
    }
}

/// Writes a profile in the file format, header included.
pub fn render_profile_file(profile: &Profile) -> String {
    let alts = profile.alternatives();
    let names: Vec<&str> = alts.iter().map(Alternative::as_str).collect();
    let mut out = format!("alternatives: {}\n", names.join(" "));
    for b in profile.ballots() {
        out.push_str(&format!("{}: {}\n", b.voter, b.ordering.display(alts)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE: &str = "\
# five voters
alternatives: x y z
1: x=y>z
2: x>y=z   # weak
3: x>y>z

4: y>z>x
5: z>x>y
";

    #[test]
    fn parses_the_example() {
        let f = parse_profile_file(EXAMPLE).unwrap();
        assert_eq!(f.profile.len(), 5);
        assert_eq!(f.ballot_lines, vec![3, 4, 5, 7, 8]);
        assert_eq!(f.profile.alternatives().name(2), "z");
    }

    #[test]
    fn crlf_and_inferred_alternatives() {
        let f = parse_profile_file("1: b>a=c\r\n2: c>b>a\r\n").unwrap();
        let names: Vec<&str> = f
            .profile
            .alternatives()
            .iter()
            .map(|a| a.as_str())
            .collect();
        assert_eq!(names, vec!["b", "a", "c"]);
        assert_eq!(f.profile.len(), 2);
    }

    #[test]
    fn diagnostics_carry_line_numbers() {
        let err = parse_profile_file("alternatives: x y z\n1: x>y>z\n2: x>y>q\n").unwrap_err();
        assert_eq!(err.line, 3);
        assert_eq!(err.error, Error::UnknownAlternative("q".into()));
        assert_eq!(err.to_string(), "line 3: unknown alternative `q`");

        let err = parse_profile_file("1: x>y>z\n1: z>y>x\n").unwrap_err();
        assert_eq!((err.line, err.error), (2, Error::DuplicateVoter(1)));

        let err = parse_profile_file("0: x>y\n").unwrap_err();
        assert_eq!(err.error, Error::InvalidVoterId("0".into()));

        let err = parse_profile_file("1: x>y\nalternatives: x y\n").unwrap_err();
        assert_eq!(err.line, 2);

        let err = parse_profile_file("x>y>z\n").unwrap_err();
        assert!(matches!(err.error, Error::MalformedLine(_)));
    }

    #[test]
    fn empty_input() {
        assert_eq!(
            parse_profile_file("# nothing\n\n").unwrap_err().error,
            Error::EmptyInput
        );
        let f = parse_profile_file("alternatives: a b\n").unwrap();
        assert!(f.profile.is_empty());
    }

    #[test]
    fn lenient_collects_every_error() {
        let (file, errors) = parse_lenient("1: x>y>z\n2: x>y\n3: x>y>z>w\n4: z>y>x\n");
        let lines: Vec<usize> = errors.iter().map(|e| e.line).collect();
        assert_eq!(lines, vec![2, 3]);
        assert_eq!(file.unwrap().profile.len(), 2);
    }

    #[test]
    fn render_round_trips() {
        let f = parse_profile_file(EXAMPLE).unwrap();
        let again = parse_profile_file(&render_profile_file(&f.profile)).unwrap();
        assert_eq!(again.profile, f.profile);
    }
}
