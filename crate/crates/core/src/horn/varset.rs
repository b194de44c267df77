//! Fixed-width bit vectors with their two readings: as a set of
//! propositional variables ([`VarSet`]) and as a truth assignment
//! ([`Assignment`]).

use std::fmt;

use smallvec::{smallvec, SmallVec};

use crate::error::{Error, Result};

const WORD: usize = 64;

type Words = SmallVec<[u64; 2]>;

fn word_count(arity: usize) -> usize {
    arity.div_ceil(WORD)
}

/// A subset of the variables `0..arity`.
///
/// Ordering is lexicographic over the underlying words and only exists so
/// sets can be stored in ordered collections; use [`VarSet::is_subset`] for
/// the inclusion order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarSet {
    arity: usize,
    words: Words,
}

impl VarSet {
    pub fn empty(arity: usize) -> Self {
        Self {
            arity,
            words: smallvec![0; word_count(arity)],
        }
    }

    pub fn full(arity: usize) -> Self {
        let mut set = Self {
            arity,
            words: smallvec![!0; word_count(arity)],
        };
        set.trim();
        set
    }

    pub fn from_indices<I>(arity: usize, indices: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut set = Self::empty(arity);
        for index in indices {
            set.try_insert(index)?;
        }
        Ok(set)
    }

    /// Builds a set from the low `arity` bits of `mask`, bit `i` standing for
    /// variable `i`. Higher bits are ignored.
    pub fn from_mask(arity: usize, mask: u64) -> Self {
        let mut set = Self::empty(arity);
        if let Some(w) = set.words.first_mut() {
            *w = mask;
        }
        set.trim();
        set
    }

    /// The low 64 variables as a bit mask.
    pub fn mask(&self) -> u64 {
        self.words.first().copied().unwrap_or(0)
    }

    #[inline]
    pub fn arity(&self) -> usize {
        self.arity
    }

    #[inline]
    pub fn contains(&self, index: usize) -> bool {
        index < self.arity && self.words[index / WORD] >> (index % WORD) & 1 == 1
    }

    pub fn try_insert(&mut self, index: usize) -> Result<()> {
        if index >= self.arity {
            return Err(Error::IndexOutOfRange {
                index,
                arity: self.arity,
            });
        }
        self.words[index / WORD] |= 1 << (index % WORD);
        Ok(())
    }

    /// Panics if `index >= arity`.
    pub fn insert(&mut self, index: usize) {
        self.try_insert(index).expect("variable index out of range");
    }

    pub fn remove(&mut self, index: usize) {
        if index < self.arity {
            self.words[index / WORD] &= !(1 << (index % WORD));
        }
    }

    pub fn with(mut self, index: usize) -> Self {
        self.insert(index);
        self
    }

    pub fn without(mut self, index: usize) -> Self {
        self.remove(index);
        self
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        *self == Self::full(self.arity)
    }

    #[inline]
    pub fn is_subset(&self, other: &VarSet) -> bool {
        debug_assert_eq!(self.arity, other.arity);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_strict_subset(&self, other: &VarSet) -> bool {
        self.is_subset(other) && self != other
    }

    pub fn union_with(&mut self, other: &VarSet) {
        debug_assert_eq!(self.arity, other.arity);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VarSet) {
        debug_assert_eq!(self.arity, other.arity);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &VarSet) {
        debug_assert_eq!(self.arity, other.arity);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &VarSet) -> VarSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn intersection(&self, other: &VarSet) -> VarSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn difference(&self, other: &VarSet) -> VarSet {
        let mut out = self.clone();
        out.difference_with(other);
        out
    }

    pub fn complement(&self) -> VarSet {
        let mut out = self.clone();
        for w in out.words.iter_mut() {
            *w = !*w;
        }
        out.trim();
        out
    }

    /// Member indices in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * WORD + bit)
            })
        })
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    /// The assignment setting exactly these variables to 1.
    pub fn bits(&self) -> Assignment {
        Assignment(self.clone())
    }

    pub(crate) fn check_arity(&self, arity: usize) -> Result<()> {
        if self.arity == arity {
            Ok(())
        } else {
            Err(Error::ArityMismatch {
                expected: arity,
                found: self.arity,
            })
        }
    }

    fn trim(&mut self) {
        let tail = self.arity % WORD;
        if tail != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A truth assignment over `arity` variables, ordered componentwise.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Assignment(VarSet);

impl Assignment {
    pub fn bottom(arity: usize) -> Self {
        Self(VarSet::empty(arity))
    }

    pub fn top(arity: usize) -> Self {
        Self(VarSet::full(arity))
    }

    /// Parses a string of `0`/`1` characters; position `i` is variable `i`.
    pub fn from_bit_str(s: &str) -> Option<Self> {
        let mut set = VarSet::empty(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                '1' => set.insert(i),
                '0' => {}
                _ => return None,
            }
        }
        Some(Self(set))
    }

    /// The `k`-th assignment of `arity` bits in lexicographic order, variable
    /// 0 being the most significant position.
    pub fn nth_lex(arity: usize, k: u64) -> Self {
        let mut set = VarSet::empty(arity);
        for i in 0..arity {
            if k >> (arity - 1 - i) & 1 == 1 {
                set.insert(i);
            }
        }
        Self(set)
    }

    #[inline]
    pub fn arity(&self) -> usize {
        self.0.arity()
    }

    #[inline]
    pub fn get(&self, index: usize) -> bool {
        self.0.contains(index)
    }

    /// The set of variables assigned 1.
    pub fn ones(&self) -> VarSet {
        self.0.clone()
    }

    pub fn as_set(&self) -> &VarSet {
        &self.0
    }

    pub fn meet(&self, other: &Assignment) -> Assignment {
        Assignment(self.0.intersection(&other.0))
    }

    #[inline]
    pub fn le(&self, other: &Assignment) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn lt(&self, other: &Assignment) -> bool {
        self.0.is_strict_subset(&other.0)
    }

    pub fn is_top(&self) -> bool {
        self.0.is_full()
    }

    pub fn weight(&self) -> usize {
        self.0.len()
    }
}

impl From<VarSet> for Assignment {
    fn from(set: VarSet) -> Self {
        Self(set)
    }
}

impl From<Assignment> for VarSet {
    fn from(x: Assignment) -> Self {
        x.0
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.arity() {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Assignment({self})")
    }
}
