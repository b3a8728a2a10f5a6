//! Fundamental set and multiset types plus the predicates every family is
//! built from.
//!
//! - [`FiniteSet`]: strictly increasing positive integers
//! - [`PartMultiset`]: nondecreasing nonnegative integers (gap multisets may
//!   contain zeros)
//! - [`is_schreier`], [`is_ell_strong_schreier`], [`is_sparse`],
//!   [`is_strongly_sparse`]: the four membership predicates
//! - [`diff_multiset`], [`shift_multiset`]: the gap operator and the
//!   elementwise shift used by the constructive maps

use std::fmt;

use crate::error::{Error, Result};

/// A finite set of positive integers, stored strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteSet {
    elems: Vec<u64>,
}

impl FiniteSet {
    /// Builds a set from strictly increasing positive elements.
    pub fn new(elems: Vec<u64>) -> Result<Self> {
        if elems.first().is_some_and(|&e| e == 0) {
            return Err(Error::Param("set elements must be >= 1".into()));
        }
        if elems.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Param(
                "set elements must be strictly increasing".into(),
            ));
        }
        Ok(Self { elems })
    }

    pub fn empty() -> Self {
        Self { elems: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn min_element(&self) -> Option<u64> {
        self.elems.first().copied()
    }

    pub fn max_element(&self) -> Option<u64> {
        self.elems.last().copied()
    }

    pub fn contains(&self, value: u64) -> bool {
        self.elems.binary_search(&value).is_ok()
    }

    pub fn elements(&self) -> &[u64] {
        &self.elems
    }
}

impl fmt::Display for FiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elems.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// A multiset of nonnegative integers, stored nondecreasing.
///
/// Partition parts are all positive; gap multisets produced by
/// [`diff_multiset`] may contain zeros when the input repeats an entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartMultiset {
    parts: Vec<u64>,
}

impl PartMultiset {
    /// Builds a multiset, sorting the entries into canonical nondecreasing
    /// order.
    pub fn new(mut parts: Vec<u64>) -> Self {
        parts.sort_unstable();
        Self { parts }
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn max_element(&self) -> Option<u64> {
        self.parts.last().copied()
    }

    /// Sum of all entries, checked.
    pub fn sum(&self) -> Result<u64> {
        self.parts
            .iter()
            .try_fold(0u64, |acc, &p| acc.checked_add(p))
            .ok_or(Error::Overflow("multiset sum"))
    }
}

impl fmt::Display for PartMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// A set is Schreier when it is empty or its minimum is at least its size.
pub fn is_schreier(set: &FiniteSet) -> bool {
    match set.min_element() {
        None => true,
        Some(min) => min >= set.len() as u64,
    }
}

/// A set is `ell`-strong Schreier when it is empty or
/// `min >= ell * |A| - ell + 1`.
///
/// Level 0 accepts every set; level 1 is the plain Schreier condition.
pub fn is_ell_strong_schreier(set: &FiniteSet, ell: u64) -> bool {
    match set.min_element() {
        None => true,
        Some(min) => {
            // ell*(len-1) + 1 in wide arithmetic; len >= 1 here.
            let bound = u128::from(ell) * (set.len() as u128 - 1) + 1;
            u128::from(min) >= bound
        }
    }
}

/// A set is sparse when it has at most two elements or its consecutive gaps
/// are nondecreasing.
pub fn is_sparse(set: &FiniteSet) -> bool {
    let e = set.elements();
    e.windows(3).all(|w| w[2] - w[1] >= w[1] - w[0])
}

/// A set is strongly sparse when it has at most two elements or its
/// consecutive gaps strictly increase.
pub fn is_strongly_sparse(set: &FiniteSet) -> bool {
    let e = set.elements();
    e.windows(3).all(|w| w[2] - w[1] > w[1] - w[0])
}

/// The multiset of consecutive differences of a nondecreasing sequence,
/// returned in canonical nondecreasing order.
///
/// Accepts the raw entries of either a [`FiniteSet`] or a [`PartMultiset`];
/// multiset inputs with repeats produce zero gaps.
pub fn diff_multiset(values: &[u64]) -> Result<PartMultiset> {
    if values.len() < 2 {
        return Err(Error::Size {
            required: 2,
            actual: values.len(),
        });
    }
    if values.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::Param("input must be nondecreasing".into()));
    }
    Ok(PartMultiset::new(
        values.windows(2).map(|w| w[1] - w[0]).collect(),
    ))
}

/// Adds `shift` to every entry of `multiset`, preserving order.
pub fn shift_multiset(multiset: &PartMultiset, shift: i64) -> Result<PartMultiset> {
    let mut parts = Vec::with_capacity(multiset.len());
    for &p in multiset.parts() {
        let moved = i128::from(p) + i128::from(shift);
        if moved < 0 {
            return Err(Error::NegativePart { part: p, shift });
        }
        let moved = u64::try_from(moved).map_err(|_| Error::Overflow("shift_multiset"))?;
        parts.push(moved);
    }
    Ok(PartMultiset::new(parts))
}
