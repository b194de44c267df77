//! The plain-text formula format.
//!
//! ```text
//! # comment
//! vars: a b c d
//! a -> b c
//! -> d          # empty antecedent
//! ```
//!
//! The first nonblank line declares the variables in index order. Every
//! further nonblank line is one implication. Tokens are nonempty runs of
//! ASCII letters, digits and underscores.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, ParseErrorKind, Result};
use crate::horn::{HornFormula, Implication, VarSet};

fn is_token(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn parse_error(line: usize, kind: ParseErrorKind) -> Error {
    Error::Parse { line, kind }
}

pub fn parse(text: &str) -> Result<HornFormula> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, raw)| (i + 1, raw.split('#').next().unwrap_or("").trim()))
        .filter(|(_, line)| !line.is_empty());

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| parse_error(1, ParseErrorKind::MissingHeader))?;
    let declared = header
        .strip_prefix("vars:")
        .ok_or_else(|| parse_error(header_line, ParseErrorKind::MissingHeader))?;

    let mut names = Vec::new();
    let mut index = HashMap::new();
    for token in declared.split_whitespace() {
        if !is_token(token) {
            return Err(parse_error(
                header_line,
                ParseErrorKind::InvalidToken(token.into()),
            ));
        }
        if index.insert(token.to_owned(), names.len()).is_some() {
            return Err(parse_error(
                header_line,
                ParseErrorKind::DuplicateVariable(token.into()),
            ));
        }
        names.push(token.to_owned());
    }
    let arity = names.len();

    let resolve = |line: usize, side: &str| -> Result<VarSet> {
        let mut set = VarSet::empty(arity);
        for token in side.split_whitespace() {
            match index.get(token) {
                Some(&i) => set.insert(i),
                None if is_token(token) => {
                    return Err(parse_error(
                        line,
                        ParseErrorKind::UnknownToken(token.into()),
                    ))
                }
                None => {
                    return Err(parse_error(
                        line,
                        ParseErrorKind::InvalidToken(token.into()),
                    ))
                }
            }
        }
        Ok(set)
    };

    let mut implications = Vec::new();
    for (line, content) in lines {
        let mut sides = content.split("->");
        let (Some(lhs), Some(rhs), None) = (sides.next(), sides.next(), sides.next()) else {
            return Err(parse_error(line, ParseErrorKind::MissingArrow));
        };
        let antecedent = resolve(line, lhs)?;
        let consequent = resolve(line, rhs)?;
        if consequent.is_empty() {
            return Err(parse_error(line, ParseErrorKind::EmptyConsequent));
        }
        implications.push(Implication::new(antecedent, consequent)?);
    }
    HornFormula::new(arity, implications)?.with_names(names)
}

/// Header first, then one implication per line in list order, tokens
/// separated by single spaces.
pub fn serialize(h: &HornFormula) -> String {
    let names = h.var_names();
    let mut out = String::from("vars:");
    for name in &names {
        out.push(' ');
        out.push_str(name);
    }
    out.push('\n');
    for imp in h.implications() {
        for v in imp.antecedent().iter() {
            let _ = write!(out, "{} ", names[v]);
        }
        out.push_str("->");
        for v in imp.consequent().iter() {
            let _ = write!(out, " {}", names[v]);
        }
        out.push('\n');
    }
    out
}

/// A variable set written as tokens separated by commas or whitespace.
pub fn parse_var_set(h: &HornFormula, text: &str) -> Result<VarSet> {
    let names = h.var_names();
    let mut set = VarSet::empty(h.arity());
    for token in text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
    {
        let i = names
            .iter()
            .position(|n| n == token)
            .ok_or_else(|| parse_error(1, ParseErrorKind::UnknownToken(token.into())))?;
        set.insert(i);
    }
    Ok(set)
}
