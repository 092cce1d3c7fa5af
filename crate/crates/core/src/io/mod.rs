//! Line-oriented text formats and seeded generators.
//!
//! All documents share the same lexical rules: `#` starts a comment, blank
//! lines are ignored, tokens are separated by whitespace. Serializers emit
//! single spaces and a trailing newline so that files compare byte for byte.

mod certificate;
mod gen;
mod instance;
mod solution;
mod source;

pub use certificate::{parse_certificate, serialize_certificate, Certificate};
pub use gen::{gen_graph, gen_instance, gen_sat32, GeneratorConfig};
pub use instance::{parse_instance, serialize_instance, InstanceDocument};
pub use solution::{parse_solution, serialize_solution};
pub use source::{
    parse_assignment, parse_graph, parse_independent_set, parse_sat, serialize_assignment,
    serialize_graph, serialize_independent_set, serialize_sat,
};

use crate::error::{Error, Result};

/// A non-empty line with its 1-based number and comment stripped.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Line<'a> {
    pub number: usize,
    pub text: &'a str,
}

impl<'a> Line<'a> {
    pub fn tokens(&self) -> impl Iterator<Item = &'a str> {
        self.text.split_whitespace()
    }

    pub fn keyword(&self) -> &'a str {
        self.tokens().next().unwrap_or("")
    }

    /// Tokens after the keyword.
    pub fn args(&self) -> Vec<&'a str> {
        self.tokens().skip(1).collect()
    }

    pub fn error(&self, message: impl Into<String>) -> Error {
        Error::parse(self.number, message)
    }

    /// Rewrites errors without a position to point at this line.
    pub fn locate<T>(&self, r: Result<T>) -> Result<T> {
        r.map_err(|e| match e {
            Error::Parse { .. } | Error::Io(_) => e,
            other => self.error(other.to_string()),
        })
    }

    pub fn int<T: std::str::FromStr>(&self, token: &str, what: &str) -> Result<T> {
        token
            .parse()
            .map_err(|_| self.error(format!("expected {what}, found `{token}`")))
    }
}

pub(crate) fn lines(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let text = raw.split('#').next().unwrap_or("").trim();
            (!text.is_empty()).then_some(Line {
                number: i + 1,
                text,
            })
        })
        .collect()
}

/// Cursor over the lines of a document.
pub(crate) struct Reader<'a> {
    lines: Vec<Line<'a>>,
    at: usize,
    last_number: usize,
}

impl<'a> Reader<'a> {
    pub fn new(text: &'a str) -> Self {
        Reader {
            lines: lines(text),
            at: 0,
            last_number: text.lines().count().max(1),
        }
    }

    pub fn peek(&self) -> Option<Line<'a>> {
        self.lines.get(self.at).copied()
    }

    pub fn next(&mut self, expected: &str) -> Result<Line<'a>> {
        let line = self.peek().ok_or_else(|| {
            Error::parse(
                self.last_number,
                format!("unexpected end of input, expected {expected}"),
            )
        })?;
        self.at += 1;
        Ok(line)
    }

    /// The next line, which must start with `keyword`.
    pub fn expect(&mut self, keyword: &str) -> Result<Line<'a>> {
        let line = self.next(&format!("`{keyword}`"))?;
        if line.keyword() != keyword {
            return Err(line.error(format!("expected `{keyword}`, found `{}`", line.keyword())));
        }
        Ok(line)
    }

    pub fn finish(&self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(line) => Err(line.error(format!("unexpected `{}`", line.keyword()))),
        }
    }
}

/// Checks a `<magic> <version>` header line.
pub(crate) fn header(reader: &mut Reader<'_>, magic: &str) -> Result<Vec<String>> {
    let line = reader.expect(magic)?;
    let args = line.args();
    if args.first() != Some(&"1") {
        return Err(line.error(format!("unsupported {magic} version")));
    }
    Ok(args[1..].iter().map(|s| s.to_string()).collect())
}
