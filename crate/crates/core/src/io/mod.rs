//! Line-oriented text formats.
//!
//! Every file opens with a `format <name> <version>` line. Catalog and Kirby
//! files are machine written and parsed strictly, so that rendering a parsed
//! file gives back the same bytes. Model and encoding files are meant to be
//! written by hand as well and accept blank lines and `#` comments.

mod catalog;
mod encoding;
mod kirby;
mod model;

pub use catalog::{parse_catalog, read_catalog, render_catalog, write_catalog, CATALOG_FORMAT};
pub use encoding::{parse_encoding, render_encoding, ENCODING_FORMAT};
pub use kirby::{parse_kirby, render_kirby, KIRBY_FORMAT};
pub use model::{parse_model, render_model, MODEL_FORMAT};

use std::path::Path;

use crate::{Error, Result};

pub(crate) fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::precondition(format!("cannot read {}: {e}", path.display())))
}

/// Numbered lines, 1-based.
pub(crate) struct Lines<'a> {
    inner: std::iter::Peekable<std::iter::Enumerate<std::str::Lines<'a>>>,
    last: usize,
    loose: bool,
}

impl<'a> Lines<'a> {
    /// Strict lines: every line counts.
    pub(crate) fn strict(text: &'a str) -> Self {
        Lines {
            inner: text.lines().enumerate().peekable(),
            last: 0,
            loose: false,
        }
    }

    /// Skips blank lines and `#` comments.
    pub(crate) fn loose(text: &'a str) -> Self {
        Lines {
            loose: true,
            ..Lines::strict(text)
        }
    }

    /// Line number that the next error should name.
    pub(crate) fn position(&self) -> usize {
        self.last + 1
    }

    pub(crate) fn next_line(&mut self) -> Option<(usize, &'a str)> {
        loop {
            let (i, line) = self.inner.next()?;
            self.last = i + 1;
            if self.loose && (line.trim().is_empty() || line.trim_start().starts_with('#')) {
                continue;
            }
            return Some((i + 1, if self.loose { line.trim() } else { line }));
        }
    }

    /// The next line, or a parse error one past the end.
    pub(crate) fn expect(&mut self, what: &str) -> Result<(usize, &'a str)> {
        let at = self.position();
        self.next_line()
            .ok_or_else(|| Error::parse(at, format!("unexpected end of file, expected {what}")))
    }
}

/// Checks a `format <name> <version>` line.
pub(crate) fn expect_header(lines: &mut Lines<'_>, name: &str, version: &str) -> Result<()> {
    let (no, line) = lines.expect("format line")?;
    let rest = line
        .strip_prefix("format ")
        .and_then(|r| r.strip_prefix(name))
        .and_then(|r| r.strip_prefix(' '))
        .ok_or_else(|| Error::parse(no, format!("expected `format {name} {version}`")))?;
    if rest != version {
        return Err(Error::Version {
            found: rest.to_string(),
            expected: version.to_string(),
        });
    }
    Ok(())
}

/// Splits `key=value` and checks the key.
pub(crate) fn field<'a>(no: usize, token: Option<&'a str>, key: &str) -> Result<&'a str> {
    token
        .and_then(|t| t.strip_prefix(key))
        .and_then(|t| t.strip_prefix('='))
        .ok_or_else(|| Error::parse(no, format!("expected field `{key}=`")))
}

pub(crate) fn number<T: std::str::FromStr>(no: usize, s: &str, what: &str) -> Result<T> {
    s.parse().map_err(|_| Error::parse(no, format!("invalid {what} `{s}`")))
}

/// A comma list with `-` for empty.
pub(crate) fn list<T: std::str::FromStr>(no: usize, s: &str, what: &str) -> Result<Vec<T>> {
    if s == "-" {
        return Ok(Vec::new());
    }
    s.split(',').map(|x| number(no, x, what)).collect()
}

pub(crate) fn render_list<T: std::fmt::Display>(items: &[T]) -> String {
    if items.is_empty() {
        "-".to_string()
    } else {
        items.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
    }
}

/// Replaces a non-parse error with a parse error at `no`.
pub(crate) fn at_line(no: usize) -> impl Fn(Error) -> Error {
    move |e| match e {
        Error::Parse { .. } | Error::Version { .. } => e,
        other => Error::parse(no, other.to_string()),
    }
}
