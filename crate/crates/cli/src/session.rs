//! Session files: a field, a list of variables and named ideals.
//!
//! ```text
//! # comments run to the end of the line
//! field F 5
//! vars x y
//! ideal a: x^2, x*y
//! ```
//!
//! One statement per line. `field` and `vars` appear exactly once, before
//! any `ideal`. Positions in errors are 1-based line and column.

use std::sync::Arc;

use jetclosure_core::groebner::Ideal;
use jetclosure_core::{parse_polynomial, Error as AlgebraError, FieldSpec, RingContext};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SessionErrorKind {
    #[error("{0}")]
    Syntax(String),
    #[error("duplicate name `{0}`")]
    DuplicateName(String),
    #[error("unknown field kind `{0}`")]
    UnknownFieldKind(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("missing `{0}` declaration")]
    MissingDeclaration(&'static str),
    #[error("{0}")]
    Algebra(AlgebraError),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{line}:{column}: {kind}")]
pub struct SessionError {
    pub line: usize,
    pub column: usize,
    pub kind: SessionErrorKind,
}

impl SessionError {
    fn new(line: usize, column: usize, kind: SessionErrorKind) -> Self {
        SessionError { line, column, kind }
    }

    pub fn name(&self) -> &'static str {
        match &self.kind {
            SessionErrorKind::Syntax(_) => "SyntaxError",
            SessionErrorKind::DuplicateName(_) => "DuplicateName",
            SessionErrorKind::UnknownFieldKind(_) => "UnknownFieldKind",
            SessionErrorKind::NotPrime(_) => "NotPrime",
            SessionErrorKind::MissingDeclaration(_) => "MissingDeclaration",
            SessionErrorKind::Algebra(e) => e.name(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Session {
    ring: Arc<RingContext>,
    ideals: Vec<(String, Ideal)>,
}

impl Session {
    /// A session with no named ideals.
    pub fn from_ring(ring: Arc<RingContext>) -> Self {
        Session {
            ring,
            ideals: Vec::new(),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.ring.field()
    }

    pub fn ring(&self) -> &Arc<RingContext> {
        &self.ring
    }

    pub fn ideal(&self, name: &str) -> Option<&Ideal> {
        self.ideals.iter().find(|(n, _)| n == name).map(|(_, i)| i)
    }

    /// Named ideals in declaration order.
    pub fn ideals(&self) -> &[(String, Ideal)] {
        &self.ideals
    }
}

fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(|c| c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Byte offset to 1-based column, counting characters.
fn column(line: &str, offset: usize) -> usize {
    line[..offset.min(line.len())].chars().count() + 1
}

fn skip_ws(line: &str, mut at: usize) -> usize {
    while line[at..].starts_with(|c: char| c.is_whitespace()) {
        at += line[at..].chars().next().unwrap().len_utf8();
    }
    at
}

pub fn parse_session(text: &str) -> Result<Session, SessionError> {
    let mut field: Option<FieldSpec> = None;
    let mut ring: Option<Arc<RingContext>> = None;
    let mut ideals: Vec<(String, Ideal)> = Vec::new();
    let mut line_count = 0;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        line_count = lineno;
        let line = raw.split('#').next().unwrap();
        let start = skip_ws(line, 0);
        if start == line.len() {
            continue;
        }
        let err = |offset: usize, kind| SessionError::new(lineno, column(line, offset), kind);
        let kw_end = line[start..]
            .find(|c: char| c.is_whitespace() || c == ':')
            .map_or(line.len(), |e| start + e);
        let keyword = &line[start..kw_end];
        let rest_at = skip_ws(line, kw_end);
        let rest = line[rest_at..].trim_end();
        match keyword {
            "field" => {
                if field.is_some() {
                    return Err(err(start, SessionErrorKind::DuplicateName("field".into())));
                }
                if ring.is_some() || !ideals.is_empty() {
                    return Err(err(
                        start,
                        SessionErrorKind::Syntax("`field` must come first".into()),
                    ));
                }
                field = Some(parse_field(rest).map_err(|k| err(rest_at, k))?);
            }
            "vars" => {
                let Some(f) = field else {
                    return Err(err(start, SessionErrorKind::MissingDeclaration("field")));
                };
                if ring.is_some() {
                    return Err(err(start, SessionErrorKind::DuplicateName("vars".into())));
                }
                let mut names: Vec<&str> = Vec::new();
                let mut at = rest_at;
                for name in rest.split_whitespace() {
                    let pos = at + line[at..].find(name).unwrap();
                    if !is_ident(name) {
                        return Err(err(
                            pos,
                            SessionErrorKind::Syntax(format!("invalid variable name `{name}`")),
                        ));
                    }
                    if names.contains(&name) {
                        return Err(err(pos, SessionErrorKind::DuplicateName(name.into())));
                    }
                    names.push(name);
                    at = pos + name.len();
                }
                if names.is_empty() {
                    return Err(err(
                        rest_at,
                        SessionErrorKind::Syntax("expected at least one variable".into()),
                    ));
                }
                ring = Some(
                    RingContext::new(f, names)
                        .map_err(|e| err(rest_at, SessionErrorKind::Algebra(e)))?,
                );
            }
            "ideal" => {
                let Some(r) = &ring else {
                    let missing = if field.is_none() { "field" } else { "vars" };
                    return Err(err(start, SessionErrorKind::MissingDeclaration(missing)));
                };
                let Some(colon) = rest.find(':') else {
                    return Err(err(
                        line.len(),
                        SessionErrorKind::Syntax("expected `:` after the ideal name".into()),
                    ));
                };
                let name = rest[..colon].trim();
                if !is_ident(name) {
                    return Err(err(
                        rest_at,
                        SessionErrorKind::Syntax(format!("invalid ideal name `{name}`")),
                    ));
                }
                if ideals.iter().any(|(n, _)| n == name) {
                    return Err(err(rest_at, SessionErrorKind::DuplicateName(name.into())));
                }
                let mut gens = Vec::new();
                let mut at = rest_at + colon + 1;
                for piece in line[at..].split(',') {
                    let lead = skip_ws(piece, 0);
                    let body = piece[lead..].trim_end();
                    if body.is_empty() {
                        return Err(err(
                            at + lead,
                            SessionErrorKind::Syntax("expected a polynomial".into()),
                        ));
                    }
                    let p = parse_polynomial(body, r).map_err(|e| match e {
                        AlgebraError::Syntax { offset, message } => {
                            err(at + lead + offset, SessionErrorKind::Syntax(message))
                        }
                        other => err(at + lead, SessionErrorKind::Algebra(other)),
                    })?;
                    gens.push(p);
                    at += piece.len() + 1;
                }
                let ideal =
                    Ideal::new(r, gens).map_err(|e| err(rest_at, SessionErrorKind::Algebra(e)))?;
                ideals.push((name.to_string(), ideal));
            }
            other => {
                return Err(err(
                    start,
                    SessionErrorKind::Syntax(format!("unknown statement `{other}`")),
                ));
            }
        }
    }
    let end = line_count + 1;
    if field.is_none() {
        return Err(SessionError::new(
            end,
            1,
            SessionErrorKind::MissingDeclaration("field"),
        ));
    }
    let ring = ring
        .ok_or_else(|| SessionError::new(end, 1, SessionErrorKind::MissingDeclaration("vars")))?;
    Ok(Session { ring, ideals })
}

fn parse_field(rest: &str) -> Result<FieldSpec, SessionErrorKind> {
    if rest == "Q" {
        return Ok(FieldSpec::Rationals);
    }
    if let Some(p) = rest.strip_prefix('F') {
        let p = p.trim();
        if !p.is_empty() && p.bytes().all(|b| b.is_ascii_digit()) {
            let p: u64 = p.parse().map_err(|_| {
                SessionErrorKind::Syntax(format!("characteristic `{p}` is too large"))
            })?;
            return FieldSpec::prime(p).map_err(|_| SessionErrorKind::NotPrime(p));
        }
    }
    Err(SessionErrorKind::UnknownFieldKind(rest.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let s = parse_session("field Q\nvars x y\nideal I: x^2, x*y").unwrap();
        assert_eq!(s.ideals().len(), 1);
        assert_eq!(s.ideal("I").unwrap().generators().len(), 2);
        let s = parse_session("field F 5\nvars x\nideal a: x^3").unwrap();
        assert_eq!(s.field(), FieldSpec::prime(5).unwrap());
        let e = parse_session("field F 4\nvars x").unwrap_err();
        assert_eq!((e.line, e.column, e.name()), (1, 7, "NotPrime"));
    }

    #[test]
    fn comments_and_blank_lines() {
        let text =
            "# header\n\nfield Q   # rationals\nvars x y\n  ideal b :  x + y ,  x*y  # two\n";
        let s = parse_session(text).unwrap();
        assert_eq!(s.ideal("b").unwrap().to_string(), "(x + y, x*y)");
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_session("field Q\nvars x y\nideal a: x + * y").unwrap_err();
        assert_eq!((e.line, e.column, e.name()), (3, 14, "SyntaxError"));
        let e = parse_session("field Q\nvars x\nideal a: x\nideal a: x^2").unwrap_err();
        assert_eq!((e.line, e.name()), (4, "DuplicateName"));
        let e = parse_session("field R\nvars x").unwrap_err();
        assert_eq!(e.name(), "UnknownFieldKind");
        let e = parse_session("field Q\nvars x\nideal a: z").unwrap_err();
        assert_eq!((e.line, e.column, e.name()), (3, 10, "UnknownVariable"));
        let e = parse_session("vars x").unwrap_err();
        assert_eq!(e.name(), "MissingDeclaration");
        let e = parse_session("field Q\nideal a: x").unwrap_err();
        assert_eq!(e.kind, SessionErrorKind::MissingDeclaration("vars"));
        let e = parse_session("field Q\nvars x x").unwrap_err();
        assert_eq!((e.column, e.name()), (8, "DuplicateName"));
        let e = parse_session("field Q\nvars x\nring y").unwrap_err();
        assert_eq!(e.name(), "SyntaxError");
        let e = parse_session("field Q\nvars x@1").unwrap_err();
        assert_eq!(e.name(), "SyntaxError");
    }
}
