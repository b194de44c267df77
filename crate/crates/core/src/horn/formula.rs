use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::horn::VarSet;

/// `antecedent -> consequent`, shorthand for one definite clause per
/// consequent variable. The antecedent may be empty, the consequent may not.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Implication {
    antecedent: VarSet,
    consequent: VarSet,
}

impl Implication {
    pub fn new(antecedent: VarSet, consequent: VarSet) -> Result<Self> {
        antecedent.check_arity(consequent.arity())?;
        if consequent.is_empty() {
            return Err(Error::EmptyConsequent);
        }
        Ok(Self {
            antecedent,
            consequent,
        })
    }

    pub fn antecedent(&self) -> &VarSet {
        &self.antecedent
    }

    pub fn consequent(&self) -> &VarSet {
        &self.consequent
    }

    pub fn arity(&self) -> usize {
        self.antecedent.arity()
    }
}

/// A single definite clause `antecedent -> head`, the unit of entailment
/// query traffic.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct EntailmentClause {
    pub antecedent: VarSet,
    pub head: usize,
}

impl EntailmentClause {
    pub fn new(antecedent: VarSet, head: usize) -> Result<Self> {
        if head >= antecedent.arity() {
            return Err(Error::IndexOutOfRange {
                index: head,
                arity: antecedent.arity(),
            });
        }
        Ok(Self { antecedent, head })
    }

    pub fn arity(&self) -> usize {
        self.antecedent.arity()
    }

    pub fn is_trivial(&self) -> bool {
        self.antecedent.contains(self.head)
    }
}

/// A definite Horn formula in implicational form over `arity` variables.
///
/// Equality compares arity and the implication list; the name table is I/O
/// metadata and does not take part.
#[derive(Clone)]
pub struct HornFormula {
    arity: usize,
    implications: Vec<Implication>,
    names: Option<Arc<[String]>>,
}

impl HornFormula {
    pub fn new(arity: usize, implications: Vec<Implication>) -> Result<Self> {
        for imp in &implications {
            imp.antecedent.check_arity(arity)?;
        }
        Ok(Self {
            arity,
            implications,
            names: None,
        })
    }

    /// The constant-true function.
    pub fn empty(arity: usize) -> Self {
        Self {
            arity,
            implications: Vec::new(),
            names: None,
        }
    }

    /// Convenience constructor from `(antecedent, consequent)` index lists.
    pub fn from_pairs<A, C>(arity: usize, pairs: impl IntoIterator<Item = (A, C)>) -> Result<Self>
    where
        A: IntoIterator<Item = usize>,
        C: IntoIterator<Item = usize>,
    {
        let implications = pairs
            .into_iter()
            .map(|(a, c)| {
                Implication::new(
                    VarSet::from_indices(arity, a)?,
                    VarSet::from_indices(arity, c)?,
                )
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(arity, implications)
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: names.len(),
            });
        }
        self.names = Some(names.into());
        Ok(self)
    }

    /// Keeps `other`'s name table, if any.
    pub fn with_names_of(mut self, other: &HornFormula) -> Self {
        if other.arity == self.arity {
            self.names = other.names.clone();
        }
        self
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn implications(&self) -> &[Implication] {
        &self.implications
    }

    pub fn len(&self) -> usize {
        self.implications.len()
    }

    pub fn is_empty(&self) -> bool {
        self.implications.is_empty()
    }

    pub fn push(&mut self, implication: Implication) -> Result<()> {
        implication.antecedent.check_arity(self.arity)?;
        self.implications.push(implication);
        Ok(())
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// The printable name of variable `index`: the name table entry if
    /// present, else `a`..`z` for arities up to 26 and `x0`, `x1`, ... beyond.
    pub fn var_name(&self, index: usize) -> String {
        match &self.names {
            Some(names) => names[index].clone(),
            None => default_name(self.arity, index),
        }
    }

    pub fn var_names(&self) -> Vec<String> {
        (0..self.arity).map(|i| self.var_name(i)).collect()
    }

    /// Concatenated names when all are single characters, space separated
    /// otherwise.
    pub fn display_set(&self, set: &VarSet) -> String {
        let names: Vec<String> = set.iter().map(|i| self.var_name(i)).collect();
        if names.iter().all(|n| n.chars().count() == 1) {
            names.concat()
        } else {
            names.join(" ")
        }
    }

    /// The implications as a set, ignoring order and duplicates.
    pub fn implication_set(&self) -> BTreeSet<Implication> {
        self.implications.iter().cloned().collect()
    }

    pub fn same_implication_set(&self, other: &HornFormula) -> bool {
        self.arity == other.arity && self.implication_set() == other.implication_set()
    }

    pub(crate) fn check_arity(&self, arity: usize) -> Result<()> {
        if self.arity == arity {
            Ok(())
        } else {
            Err(Error::ArityMismatch {
                expected: self.arity,
                found: arity,
            })
        }
    }

    pub(crate) fn from_parts(arity: usize, implications: Vec<Implication>) -> Self {
        Self {
            arity,
            implications,
            names: None,
        }
    }
}

fn default_name(arity: usize, index: usize) -> String {
    if arity <= 26 {
        char::from(b'a' + index as u8).to_string()
    } else {
        format!("x{index}")
    }
}

impl PartialEq for HornFormula {
    fn eq(&self, other: &Self) -> bool {
        self.arity == other.arity && self.implications == other.implications
    }
}

impl Eq for HornFormula {}

impl fmt::Display for HornFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, imp) in self.implications.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(
                f,
                "{}->{}",
                self.display_set(&imp.antecedent),
                self.display_set(&imp.consequent)
            )?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for HornFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HornFormula(n={}, {self})", self.arity)
    }
}
