//! Plain-text formats for families, orderings, and GF(q) systems.
//!
//! All three formats are UTF-8 with LF line endings. Lines starting with
//! `#` and blank lines are ignored. Writers emit the canonical form
//! (single spaces, sorted set elements, trailing newline), so
//! `write(parse(write(x))) == write(x)` byte for byte.
//!
//! Family: a header `family <n> <m> <c>` followed by exactly `m` data
//! lines, each the elements of one member set.
//!
//! Ordering: one data line of `m` integers forming a permutation of
//! `1..=m`.
//!
//! System: a header `gfsys <q> <n> <m> <c>` followed by `m` data lines
//! `<k> <v1> <a1> ... <vk> <ak> <b>` encoding `sum of a_i * x_{v_i} = b`.

use std::fmt::Write as _;

use crate::family::{Ordering, SetFamily};
use crate::glue::{FieldSpec, LinearSystem};
use crate::Error;

/// Data lines with their 1-based line numbers; comments and blanks skipped.
fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_fields<T: std::str::FromStr>(line: usize, raw: &str) -> Result<Vec<T>, Error> {
    raw.split_whitespace()
        .map(|tok| {
            tok.parse::<T>().map_err(|_| Error::Parse {
                line,
                msg: format!("bad number '{tok}'"),
            })
        })
        .collect()
}

fn expect_header(line: usize, raw: &str, keyword: &str, arity: usize) -> Result<Vec<u64>, Error> {
    let mut tokens = raw.split_whitespace();
    match tokens.next() {
        Some(k) if k == keyword => {}
        other => {
            return Err(Error::Parse {
                line,
                msg: format!(
                    "expected header '{keyword} ...', found '{}'",
                    other.unwrap_or("")
                ),
            })
        }
    }
    let rest: Vec<&str> = tokens.collect();
    if rest.len() != arity {
        return Err(Error::Parse {
            line,
            msg: format!(
                "header '{keyword}' takes {arity} numbers, found {}",
                rest.len()
            ),
        });
    }
    rest.iter()
        .map(|tok| {
            tok.parse::<u64>().map_err(|_| Error::Parse {
                line,
                msg: format!("bad number '{tok}'"),
            })
        })
        .collect()
}

fn parse_err(line: usize, msg: String) -> Error {
    Error::Parse { line, msg }
}

/// Parses the family format.
pub fn parse_family(text: &str) -> Result<SetFamily, Error> {
    let mut lines = data_lines(text);
    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing 'family <n> <m> <c>' header".into(),
    })?;
    let nums = expect_header(header_line, header, "family", 3)?;
    let (n, m, c) = (nums[0], nums[1], nums[2]);
    if n > u64::from(u32::MAX) || c > u64::from(u32::MAX) {
        return Err(parse_err(header_line, "header value out of range".into()));
    }
    let (n, c) = (n as u32, c as u32);
    crate::family::validate_shape(n, c).map_err(|msg| parse_err(header_line, msg))?;
    let mut sets = Vec::with_capacity(m as usize);
    let mut last_line = header_line;
    for _ in 0..m {
        let (line, raw) = lines.next().ok_or_else(|| {
            parse_err(
                last_line,
                format!("expected {m} member-set lines, found {}", sets.len()),
            )
        })?;
        last_line = line;
        let mut set = parse_fields::<u32>(line, raw)?;
        crate::family::validate_set(&mut set, n, c).map_err(|msg| parse_err(line, msg))?;
        sets.push(set);
    }
    if let Some((line, _)) = lines.next() {
        return Err(parse_err(
            line,
            format!("extra data after {m} member-set lines"),
        ));
    }
    SetFamily::new(n, c, sets).map_err(|e| match e {
        Error::Domain(msg) => parse_err(header_line, msg),
        other => other,
    })
}

/// Canonical text for a family.
pub fn write_family(family: &SetFamily) -> String {
    let mut out = format!(
        "family {} {} {}\n",
        family.ground_size(),
        family.len(),
        family.cap()
    );
    for set in family.sets() {
        let mut first = true;
        for e in set {
            if !first {
                out.push(' ');
            }
            let _ = write!(out, "{e}");
            first = false;
        }
        out.push('\n');
    }
    out
}

/// Parses the ordering format: one data line holding a permutation.
pub fn parse_ordering(text: &str) -> Result<Ordering, Error> {
    let mut lines = data_lines(text);
    let (line, raw) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing ordering line".into(),
    })?;
    if let Some((extra, _)) = lines.next() {
        return Err(Error::Parse {
            line: extra,
            msg: "ordering format has a single data line".into(),
        });
    }
    let perm = parse_fields::<u32>(line, raw)?;
    Ordering::new(perm).map_err(|e| match e {
        Error::Domain(msg) => parse_err(line, msg),
        other => other,
    })
}

/// Canonical text for an ordering.
pub fn write_ordering(order: &Ordering) -> String {
    let mut out = String::new();
    for (i, v) in order.as_slice().iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{v}");
    }
    out.push('\n');
    out
}

/// Parses the system format.
pub fn parse_system(text: &str) -> Result<LinearSystem, Error> {
    let mut lines = data_lines(text);
    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing 'gfsys <q> <n> <m> <c>' header".into(),
    })?;
    let nums = expect_header(header_line, header, "gfsys", 4)?;
    let (q, n, m, c) = (nums[0], nums[1], nums[2], nums[3]);
    if q > u64::from(u32::MAX) || n > u64::from(u32::MAX) || c > u64::from(u32::MAX) {
        return Err(parse_err(header_line, "header value out of range".into()));
    }
    let field = FieldSpec::new(q as u32).map_err(|e| match e {
        Error::Domain(msg) => parse_err(header_line, msg),
        other => other,
    })?;
    let (n, c) = (n as u32, c as u32);
    crate::glue::validate_system_shape(n, c).map_err(|msg| parse_err(header_line, msg))?;
    let mut equations = Vec::with_capacity(m as usize);
    let mut last_line = header_line;
    for _ in 0..m {
        let (line, raw) = lines.next().ok_or_else(|| {
            parse_err(
                last_line,
                format!("expected {m} equation lines, found {}", equations.len()),
            )
        })?;
        last_line = line;
        let nums = parse_fields::<u32>(line, raw)?;
        if nums.is_empty() {
            return Err(parse_err(line, "empty equation line".into()));
        }
        let k = nums[0] as usize;
        if nums.len() != 2 * k + 2 {
            return Err(parse_err(
                line,
                format!(
                    "equation with {k} terms takes {} numbers, found {}",
                    2 * k + 2,
                    nums.len()
                ),
            ));
        }
        let mut terms: Vec<(u32, u32)> =
            (0..k).map(|i| (nums[1 + 2 * i], nums[2 + 2 * i])).collect();
        let rhs = nums[2 * k + 1];
        crate::glue::validate_equation(&mut terms, rhs, n, c, field.q())
            .map_err(|msg| parse_err(line, msg))?;
        equations.push((terms, rhs));
    }
    if let Some((line, _)) = lines.next() {
        return Err(parse_err(
            line,
            format!("extra data after {m} equation lines"),
        ));
    }
    LinearSystem::new(field, n, c, equations).map_err(|e| match e {
        Error::Domain(msg) => parse_err(header_line, msg),
        other => other,
    })
}

/// Canonical text for a system.
pub fn write_system(sys: &LinearSystem) -> String {
    let mut out = format!(
        "gfsys {} {} {} {}\n",
        sys.field().q(),
        sys.variable_count(),
        sys.len(),
        sys.cap()
    );
    for eq in sys.equations() {
        let _ = write!(out, "{}", eq.terms().len());
        for &(v, a) in eq.terms() {
            let _ = write!(out, " {v} {a}");
        }
        let _ = writeln!(out, " {}", eq.rhs());
    }
    out
}
