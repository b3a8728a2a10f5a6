//! Counters and enumerators for restricted partitions and compositions.
//!
//! Every family can be counted three independent ways so the identity
//! checkers never compare a method against itself:
//!
//! - explicit enumeration ([`enum_partitions`], [`enum_compositions`])
//! - memoized recurrences over (remaining sum, minimum next part)
//!   ([`count_e`], [`count_e_distinct`], [`count_g`], [`count_h`], ...)
//! - truncated generating-function products ([`series_product`])
//!
//! Compositions additionally have the stars-and-bars closed form
//! ([`count_c`]); its oracle is the enumerator, never the other way round.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::setcore::PartMultiset;

/// A partition of `target` into positive parts, stored nondecreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: PartMultiset,
    target: u64,
}

impl Partition {
    /// Builds a partition after checking that the parts are positive and sum
    /// to `target`. The empty partition of 0 is allowed.
    pub fn new(parts: PartMultiset, target: u64) -> Result<Self> {
        if parts.parts().contains(&0) {
            return Err(Error::Param("partition parts must be >= 1".into()));
        }
        if parts.sum()? != target {
            return Err(Error::Param(format!(
                "parts sum to {} but target is {target}",
                parts.sum()?
            )));
        }
        Ok(Self { parts, target })
    }

    pub fn from_parts(parts: Vec<u64>, target: u64) -> Result<Self> {
        Self::new(PartMultiset::new(parts), target)
    }

    pub fn parts(&self) -> &[u64] {
        self.parts.parts()
    }

    pub fn multiset(&self) -> &PartMultiset {
        &self.parts
    }

    pub fn target(&self) -> u64 {
        self.target
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Difference between the largest and second largest parts.
    pub fn top_gap(&self) -> Option<u64> {
        let p = self.parts.parts();
        (p.len() >= 2).then(|| p[p.len() - 1] - p[p.len() - 2])
    }

    /// True when all parts are pairwise distinct.
    pub fn is_distinct(&self) -> bool {
        self.parts.parts().windows(2).all(|w| w[0] < w[1])
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.parts.fmt(f)
    }
}

/// An ordered tuple of positive parts summing to `target`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<u64>,
    target: u64,
}

impl Composition {
    pub fn new(parts: Vec<u64>, target: u64) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Param("composition parts must be >= 1".into()));
        }
        let sum = parts
            .iter()
            .try_fold(0u64, |acc, &p| acc.checked_add(p))
            .ok_or(Error::Overflow("composition sum"))?;
        if sum != target {
            return Err(Error::Param(format!(
                "parts sum to {sum} but target is {target}"
            )));
        }
        Ok(Self { parts, target })
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn target(&self) -> u64 {
        self.target
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Which part values a partition may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartRule {
    /// Every part at least this value.
    MinPart(u64),
    /// No part inside `{2, ..., ell}`; empty range when `ell <= 1`.
    AvoidRange(u64),
    /// No part inside `{2, ..., ell}` and no even part greater than `2*ell`.
    AvoidRangeAndHighEvens(u64),
}

impl PartRule {
    pub fn allows(&self, part: u64) -> bool {
        match *self {
            PartRule::MinPart(min) => part >= min,
            PartRule::AvoidRange(ell) => !(2..=ell).contains(&part),
            PartRule::AvoidRangeAndHighEvens(ell) => {
                !(2..=ell).contains(&part) && !(part.is_multiple_of(2) && part > 2 * ell)
            }
        }
    }

    /// Smallest positive part the rule allows.
    fn min_allowed(&self) -> u64 {
        match *self {
            PartRule::MinPart(min) => min.max(1),
            PartRule::AvoidRange(_) | PartRule::AvoidRangeAndHighEvens(_) => 1,
        }
    }
}

/// Structural restrictions layered on top of a [`PartRule`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartitionConstraint {
    pub rule: PartRule,
    pub distinct: bool,
    /// Exactly this many parts, when present.
    pub exact_parts: Option<u64>,
    /// Difference between the largest and second largest parts, when present.
    pub top_gap: Option<u64>,
}

impl PartitionConstraint {
    pub fn min_part(min: u64) -> Self {
        Self {
            rule: PartRule::MinPart(min),
            distinct: false,
            exact_parts: None,
            top_gap: None,
        }
    }

    pub fn distinct_min_part(min: u64) -> Self {
        Self {
            distinct: true,
            ..Self::min_part(min)
        }
    }

    pub fn with_parts(self, k: u64) -> Self {
        Self {
            exact_parts: Some(k),
            ..self
        }
    }

    pub fn with_top_gap(self, q: u64) -> Self {
        Self {
            top_gap: Some(q),
            ..self
        }
    }

    fn admits(&self, p: &Partition) -> bool {
        if let Some(k) = self.exact_parts {
            if p.len() as u64 != k {
                return false;
            }
        }
        if let Some(q) = self.top_gap {
            if p.top_gap() != Some(q) {
                return false;
            }
        }
        if self.distinct && !p.is_distinct() {
            return false;
        }
        true
    }
}

/// Enumerates partitions of `n` satisfying `constraint`, in lexicographic
/// order on the nondecreasing part lists. The empty partition is the sole
/// member for `n = 0` when no exact part count excludes it.
///
/// This is the brute-force oracle for every partition counter; it shares no
/// logic with the recurrences or the series products.
pub fn enum_partitions(n: u64, constraint: &PartitionConstraint) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    let floor = constraint.rule.min_allowed();
    extend_partition(n, floor, constraint, &mut stack, &mut out);
    out
}

fn extend_partition(
    remaining: u64,
    min_next: u64,
    constraint: &PartitionConstraint,
    stack: &mut Vec<u64>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        let candidate = Partition {
            parts: PartMultiset::new(stack.clone()),
            target: stack.iter().sum(),
        };
        if constraint.admits(&candidate) {
            out.push(candidate);
        }
        return;
    }
    if let Some(k) = constraint.exact_parts {
        if stack.len() as u64 >= k {
            return;
        }
    }
    for part in min_next..=remaining {
        if !constraint.rule.allows(part) {
            continue;
        }
        stack.push(part);
        let next_floor = if constraint.distinct { part + 1 } else { part };
        extend_partition(remaining - part, next_floor, constraint, stack, out);
        stack.pop();
    }
}

fn checked_add(a: u64, b: u64) -> Result<u64> {
    a.checked_add(b).ok_or(Error::Overflow("count sum"))
}

/// Memoized recurrence over (remaining sum, minimum allowed next part).
struct RuleCounter {
    rule: PartRule,
    distinct: bool,
    memo: HashMap<(u64, u64), u64>,
}

impl RuleCounter {
    fn new(rule: PartRule, distinct: bool) -> Self {
        Self {
            rule,
            distinct,
            memo: HashMap::new(),
        }
    }

    fn count(&mut self, remaining: u64, min_next: u64) -> Result<u64> {
        if remaining == 0 {
            return Ok(1);
        }
        if let Some(&c) = self.memo.get(&(remaining, min_next)) {
            return Ok(c);
        }
        let mut total = 0u64;
        for part in min_next..=remaining {
            if !self.rule.allows(part) {
                continue;
            }
            let floor = if self.distinct { part + 1 } else { part };
            total = checked_add(total, self.count(remaining - part, floor)?)?;
        }
        self.memo.insert((remaining, min_next), total);
        Ok(total)
    }
}

/// Exact-part-count recurrence with an upper cap on part values, used by the
/// refined counters.
struct BoundedCounter {
    floor: u64,
    distinct: bool,
    memo: HashMap<(u64, u64, u64), u64>,
}

impl BoundedCounter {
    fn new(floor: u64, distinct: bool) -> Self {
        Self {
            floor,
            distinct,
            memo: HashMap::new(),
        }
    }

    /// Partitions of `remaining` into exactly `parts_left` parts, each in
    /// `[floor, cap]`, structured by largest part.
    fn count(&mut self, remaining: u64, parts_left: u64, cap: u64) -> Result<u64> {
        if parts_left == 0 {
            return Ok(u64::from(remaining == 0));
        }
        if remaining == 0 {
            return Ok(0);
        }
        let key = (remaining, parts_left, cap);
        if let Some(&c) = self.memo.get(&key) {
            return Ok(c);
        }
        let mut total = 0u64;
        for largest in self.floor..=cap.min(remaining) {
            let next_cap = if self.distinct {
                largest.saturating_sub(1)
            } else {
                largest
            };
            total = checked_add(total, self.count(remaining - largest, parts_left - 1, next_cap)?)?;
        }
        self.memo.insert(key, total);
        Ok(total)
    }
}

/// Number of partitions of `n` into parts at least `ell`; `n = 0` counts 1.
pub fn count_e(n: u64, ell: u64) -> Result<u64> {
    RuleCounter::new(PartRule::MinPart(ell), false).count(n, ell.max(1))
}

/// Number of partitions of `n` into distinct parts, each at least `ell`.
pub fn count_e_distinct(n: u64, ell: u64) -> Result<u64> {
    RuleCounter::new(PartRule::MinPart(ell), true).count(n, ell.max(1))
}

/// Partitions of `n` into exactly `k` parts, each at least `ell`.
pub fn count_e_k(n: u64, ell: u64, k: u64) -> Result<u64> {
    BoundedCounter::new(ell.max(1), false).count(n, k, n)
}

/// Partitions of `n` into exactly `k` distinct parts, each at least `ell`.
pub fn count_e_distinct_k(n: u64, ell: u64, k: u64) -> Result<u64> {
    BoundedCounter::new(ell.max(1), true).count(n, k, n)
}

/// Partitions of `n` into exactly `k >= 2` parts at least `ell` whose largest
/// part exceeds the second largest by exactly `q`.
///
/// Structured by the second largest part `b`: the largest is `b + q` and the
/// remaining `k - 2` parts lie in `[ell, b]`.
pub fn count_e_kq(n: u64, ell: u64, k: u64, q: u64) -> Result<u64> {
    if k < 2 {
        return Err(Error::Param("count_e_kq needs k >= 2".into()));
    }
    let floor = ell.max(1);
    let mut counter = BoundedCounter::new(floor, false);
    let mut total = 0u64;
    let mut b = floor;
    while 2 * b + q <= n {
        let rest = n - 2 * b - q;
        total = checked_add(total, counter.count(rest, k - 2, b)?)?;
        b += 1;
    }
    Ok(total)
}

/// Distinct-part variant of [`count_e_kq`]; here `q >= 1` since equal top
/// parts cannot occur.
pub fn count_e_distinct_kq(n: u64, ell: u64, k: u64, q: u64) -> Result<u64> {
    if k < 2 {
        return Err(Error::Param("count_e_distinct_kq needs k >= 2".into()));
    }
    if q == 0 {
        return Ok(0);
    }
    let floor = ell.max(1);
    let mut counter = BoundedCounter::new(floor, true);
    let mut total = 0u64;
    let mut b = floor;
    while 2 * b + q <= n {
        let rest = n - 2 * b - q;
        total = checked_add(total, counter.count(rest, k - 2, b.saturating_sub(1))?)?;
        b += 1;
    }
    Ok(total)
}

/// The partition number `p(n)`.
pub fn count_p(n: u64) -> Result<u64> {
    count_e(n, 1)
}

/// Partitions of `n` into exactly `k` parts.
pub fn count_p_k(n: u64, k: u64) -> Result<u64> {
    count_e_k(n, 1, k)
}

/// Partitions of `n` with no part in `{2, ..., ell}`.
pub fn count_g(n: u64, ell: u64) -> Result<u64> {
    RuleCounter::new(PartRule::AvoidRange(ell), false).count(n, 1)
}

/// Partitions of `n` with no part in `{2, ..., ell}` and no even part greater
/// than `2*ell`.
pub fn count_h(n: u64, ell: u64) -> Result<u64> {
    RuleCounter::new(PartRule::AvoidRangeAndHighEvens(ell), false).count(n, 1)
}

/// Checked binomial coefficient.
pub fn binomial(n: u64, k: u64) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc
            .checked_mul(u128::from(n - i))
            .ok_or(Error::Overflow("binomial"))?;
        acc /= u128::from(i) + 1;
    }
    u64::try_from(acc).map_err(|_| Error::Overflow("binomial"))
}

/// Number of compositions of `u` into exactly `s` parts, each at least `v`:
/// the stars-and-bars closed form `C(u - v*s + s - 1, s - 1)`, zero when
/// `u < v*s`.
pub fn count_c(u: u64, v: u64, s: u64) -> Result<u64> {
    if v == 0 || s == 0 {
        return Err(Error::Param("count_c needs v >= 1 and s >= 1".into()));
    }
    let need = v.checked_mul(s).ok_or(Error::Overflow("count_c"))?;
    if u < need {
        return Ok(0);
    }
    binomial(u - need + s - 1, s - 1)
}

/// Number of compositions of `u` into any number of parts, each at least `v`.
pub fn count_c_total(u: u64, v: u64) -> Result<u64> {
    if v == 0 {
        return Err(Error::Param("count_c_total needs v >= 1".into()));
    }
    let mut total = 0u64;
    for s in 1..=u / v {
        total = checked_add(total, count_c(u, v, s)?)?;
    }
    Ok(total)
}

/// Enumerates compositions of `u` into exactly `s` parts, each at least `v`,
/// in lexicographic order. Brute-force oracle for [`count_c`].
pub fn enum_compositions(u: u64, v: u64, s: u64) -> Vec<Composition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    extend_composition(u, v, s, &mut stack, &mut out);
    out
}

fn extend_composition(
    remaining: u64,
    min_part: u64,
    parts_left: u64,
    stack: &mut Vec<u64>,
    out: &mut Vec<Composition>,
) {
    if parts_left == 0 {
        if remaining == 0 {
            out.push(Composition {
                parts: stack.clone(),
                target: stack.iter().sum(),
            });
        }
        return;
    }
    // Leave at least min_part for each later slot.
    let reserve = min_part * (parts_left - 1);
    if remaining < min_part + reserve {
        return;
    }
    for part in min_part..=remaining - reserve {
        stack.push(part);
        extend_composition(remaining - part, min_part, parts_left - 1, stack, out);
        stack.pop();
    }
}

/// One factor of a truncated power-series product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesFactor {
    /// `(1 - x^i)^-1`, the geometric factor letting part `i` repeat.
    Geometric(u64),
    /// `(1 + x^i)`, the binary factor letting part `i` appear once.
    Binary(u64),
}

/// Coefficients 0..=N of a truncated series product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesTruncation {
    coeffs: Vec<u64>,
}

impl SeriesTruncation {
    pub fn degree(&self) -> u64 {
        self.coeffs.len() as u64 - 1
    }

    pub fn coeff(&self, degree: u64) -> Option<u64> {
        self.coeffs.get(degree as usize).copied()
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.coeffs
    }
}

/// Multiplies the factors out exactly to degree `n`. Factors whose exponent
/// exceeds `n` contribute only 1 below the truncation and are dropped.
pub fn series_product(factors: &[SeriesFactor], n: u64) -> Result<SeriesTruncation> {
    let len = usize::try_from(n).map_err(|_| Error::Overflow("series degree"))? + 1;
    let mut coeffs = vec![0u64; len];
    coeffs[0] = 1;
    for &factor in factors {
        match factor {
            SeriesFactor::Geometric(i) => {
                if i == 0 {
                    return Err(Error::Param("geometric factor needs exponent >= 1".into()));
                }
                let i = i as usize;
                if i >= len {
                    continue;
                }
                for d in i..len {
                    coeffs[d] = checked_add(coeffs[d], coeffs[d - i])?;
                }
            }
            SeriesFactor::Binary(i) => {
                if i == 0 {
                    return Err(Error::Param("binary factor needs exponent >= 1".into()));
                }
                let i = i as usize;
                if i >= len {
                    continue;
                }
                for d in (i..len).rev() {
                    coeffs[d] = checked_add(coeffs[d], coeffs[d - i])?;
                }
            }
        }
    }
    Ok(SeriesTruncation { coeffs })
}

/// Factors of `prod_{i=ell+1..} (1 - x^i)^-1`, the series whose coefficient
/// of `x^n` counts partitions of `n` into parts at least `ell + 1`.
pub fn psi_factors(ell: u64, degree: u64) -> Vec<SeriesFactor> {
    (ell + 1..=degree).map(SeriesFactor::Geometric).collect()
}

/// Factors of `prod_{i=ell+1..} (1 + x^i)`, the distinct-part counterpart of
/// [`psi_factors`].
pub fn psi_distinct_factors(ell: u64, degree: u64) -> Vec<SeriesFactor> {
    (ell + 1..=degree).map(SeriesFactor::Binary).collect()
}

/// One geometric factor per allowed part value, the generic product for any
/// [`PartRule`].
pub fn rule_factors(rule: &PartRule, degree: u64) -> Vec<SeriesFactor> {
    (1..=degree)
        .filter(|&i| rule.allows(i))
        .map(SeriesFactor::Geometric)
        .collect()
}

/// Factors of the product counting partitions with no part in
/// `{1, ..., ell}` and no even part greater than `2*ell`: geometric factors
/// at `ell+1, ..., 2*ell` and at every odd exponent `2j+1` with `j >= ell`.
pub fn theta_factors(ell: u64, degree: u64) -> Vec<SeriesFactor> {
    let mut factors: Vec<SeriesFactor> = (ell + 1..=(2 * ell).min(degree))
        .map(SeriesFactor::Geometric)
        .collect();
    let mut j = ell;
    while 2 * j < degree {
        factors.push(SeriesFactor::Geometric(2 * j + 1));
        j += 1;
    }
    factors
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn e_counts_match_known_values() {
        assert_eq!(count_e(12, 2).unwrap(), 21);
        assert_eq!(count_e(0, 5).unwrap(), 1);
        assert_eq!(count_e(16, 4).unwrap(), 11);
    }

    #[test]
    fn e_distinct_counts_match_known_values() {
        assert_eq!(count_e_distinct(16, 1).unwrap(), 32);
        assert_eq!(count_e_distinct(9, 2).unwrap(), 5);
        assert_eq!(count_e_distinct(2, 3).unwrap(), 0);
    }

    #[test]
    fn refined_counts() {
        // {1,3},{2,2}
        assert_eq!(count_e_k(4, 1, 2).unwrap(), 2);
        // only {2,2}
        assert_eq!(count_e_kq(4, 2, 2, 0).unwrap(), 1);
        // a single part works exactly when n >= ell
        for n in 0..=12u64 {
            for ell in 1..=5u64 {
                let expect = u64::from(n >= ell);
                assert_eq!(count_e_k(n, ell, 1).unwrap(), expect, "n={n} ell={ell}");
            }
        }
    }

    #[test]
    fn partition_numbers() {
        assert_eq!(count_p(9).unwrap(), 30);
        assert_eq!(count_p(15).unwrap(), 176);
        assert_eq!(count_p_k(5, 2).unwrap(), 2);
        assert_eq!(count_p(0).unwrap(), 1);
    }

    #[test]
    fn g_and_h_counts() {
        assert_eq!(count_g(16, 3).unwrap(), 51);
        assert_eq!(count_h(16, 1).unwrap(), 93);
        for n in 0..=16 {
            assert_eq!(count_g(n, 1).unwrap(), count_p(n).unwrap());
        }
    }

    #[test]
    fn h_row_one_fixture() {
        let expected = [
            1u64, 1, 2, 3, 4, 6, 8, 11, 14, 19, 24, 31, 39, 49, 61, 76, 93,
        ];
        for (n, &want) in expected.iter().enumerate() {
            assert_eq!(count_h(n as u64, 1).unwrap(), want);
        }
    }

    #[test]
    fn composition_counts() {
        assert_eq!(count_c(6, 2, 2).unwrap(), 3);
        assert_eq!(count_c(5, 3, 2).unwrap(), 0);
        for u in 1..=10 {
            for v in 1..=4 {
                assert_eq!(count_c(u, v, 1).unwrap(), u64::from(u >= v));
            }
        }
    }

    #[test]
    fn composition_enumeration_is_lex_and_matches_closed_form() {
        let comps = enum_compositions(6, 2, 2);
        let expect: Vec<Vec<u64>> = vec![vec![2, 4], vec![3, 3], vec![4, 2]];
        assert_eq!(
            comps.iter().map(|c| c.parts().to_vec()).collect::<Vec<_>>(),
            expect
        );
        for u in 1..=14 {
            for v in 1..=3 {
                for s in 1..=5 {
                    assert_eq!(
                        enum_compositions(u, v, s).len() as u64,
                        count_c(u, v, s).unwrap(),
                        "u={u} v={v} s={s}"
                    );
                }
                assert_eq!(
                    (1..=u).map(|s| enum_compositions(u, v, s).len() as u64).sum::<u64>(),
                    count_c_total(u, v).unwrap(),
                );
            }
        }
    }

    #[test]
    fn enumerator_examples() {
        let parts: Vec<Vec<u64>> = enum_partitions(4, &PartitionConstraint::min_part(2))
            .iter()
            .map(|p| p.parts().to_vec())
            .collect();
        assert_eq!(parts, vec![vec![2, 2], vec![4]]);

        let empty = enum_partitions(0, &PartitionConstraint::min_part(1));
        assert_eq!(empty.len(), 1);
        assert!(empty[0].is_empty());
    }

    #[test]
    fn enumerator_agrees_with_recurrences() {
        for n in 0..=25 {
            for ell in 1..=4 {
                let c = PartitionConstraint::min_part(ell);
                assert_eq!(enum_partitions(n, &c).len() as u64, count_e(n, ell).unwrap());
                let d = PartitionConstraint::distinct_min_part(ell);
                assert_eq!(
                    enum_partitions(n, &d).len() as u64,
                    count_e_distinct(n, ell).unwrap()
                );
            }
        }
    }

    #[test]
    fn refined_recurrences_agree_with_enumeration() {
        for n in 0..=16 {
            for ell in 1..=3 {
                for k in 1..=6 {
                    let c = PartitionConstraint::min_part(ell).with_parts(k);
                    assert_eq!(
                        enum_partitions(n, &c).len() as u64,
                        count_e_k(n, ell, k).unwrap(),
                        "n={n} ell={ell} k={k}"
                    );
                    let d = PartitionConstraint::distinct_min_part(ell).with_parts(k);
                    assert_eq!(
                        enum_partitions(n, &d).len() as u64,
                        count_e_distinct_k(n, ell, k).unwrap(),
                    );
                    if k >= 2 {
                        for q in 0..=n {
                            let cq = c.with_top_gap(q);
                            assert_eq!(
                                enum_partitions(n, &cq).len() as u64,
                                count_e_kq(n, ell, k, q).unwrap(),
                                "n={n} ell={ell} k={k} q={q}"
                            );
                            let dq = d.with_top_gap(q);
                            assert_eq!(
                                enum_partitions(n, &dq).len() as u64,
                                count_e_distinct_kq(n, ell, k, q).unwrap(),
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn refinement_sums() {
        for n in 0..=20 {
            for ell in 1..=3 {
                let total: u64 = (1..=n.max(1))
                    .map(|k| count_e_k(n, ell, k).unwrap())
                    .sum();
                let base = count_e(n, ell).unwrap();
                // n = 0 has the empty partition, reachable by no positive k.
                let expect = if n == 0 { base - 1 } else { base };
                assert_eq!(total, expect, "n={n} ell={ell}");
                for k in 2..=6 {
                    let by_gap: u64 = (0..=n).map(|q| count_e_kq(n, ell, k, q).unwrap()).sum();
                    assert_eq!(by_gap, count_e_k(n, ell, k).unwrap());
                }
            }
        }
    }

    #[test]
    fn series_psi_matches_min_part_counts() {
        let psi = series_product(&psi_factors(1, 16), 16).unwrap();
        let expected = [1u64, 0, 1, 1, 2, 2, 4, 4, 7, 8, 12, 14, 21, 24, 34, 41, 55];
        assert_eq!(psi.coefficients(), &expected);
        assert_eq!(psi.coeff(0), Some(1));
    }

    #[test]
    fn series_theta_equals_distinct_product() {
        for ell in 1..=3 {
            let theta = series_product(&theta_factors(ell, 16), 16).unwrap();
            let distinct = series_product(&psi_distinct_factors(ell, 16), 16).unwrap();
            assert_eq!(theta, distinct, "ell={ell}");
        }
    }

    #[test]
    fn series_agrees_with_recurrences() {
        for ell in 1..=4u64 {
            let psi = series_product(&psi_factors(ell - 1, 25), 25).unwrap();
            let psi_d = series_product(&psi_distinct_factors(ell - 1, 25), 25).unwrap();
            for n in 0..=25u64 {
                assert_eq!(psi.coeff(n).unwrap(), count_e(n, ell).unwrap());
                assert_eq!(psi_d.coeff(n).unwrap(), count_e_distinct(n, ell).unwrap());
            }
        }
    }

    #[test]
    fn three_routes_agree_for_avoidance_rules() {
        type Counter = fn(u64, u64) -> Result<u64>;
        for ell in 1..=3u64 {
            let cases: [(PartRule, Counter); 2] = [
                (PartRule::AvoidRange(ell), count_g),
                (PartRule::AvoidRangeAndHighEvens(ell), count_h),
            ];
            for (rule, count) in cases {
                let series = series_product(&rule_factors(&rule, 25), 25).unwrap();
                for n in 0..=25u64 {
                    let constraint = PartitionConstraint {
                        rule,
                        distinct: false,
                        exact_parts: None,
                        top_gap: None,
                    };
                    let enumerated = enum_partitions(n, &constraint).len() as u64;
                    let recurrence = count(n, ell).unwrap();
                    assert_eq!(enumerated, recurrence, "rule {rule:?} n={n}");
                    assert_eq!(series.coeff(n).unwrap(), recurrence, "rule {rule:?} n={n}");
                }
            }
        }
    }

    #[test]
    fn g_h_difference_identities() {
        for ell in 1..=3 {
            for n in 1..=25 {
                assert_eq!(
                    count_g(n, ell).unwrap() - count_g(n - 1, ell).unwrap(),
                    count_e(n, ell + 1).unwrap()
                );
                assert_eq!(
                    count_h(n, ell).unwrap() - count_h(n - 1, ell).unwrap(),
                    count_e_distinct(n, ell + 1).unwrap()
                );
            }
        }
    }

    #[test]
    fn hockey_stick() {
        for m in 2..=12u64 {
            for t in 0..=40u64 {
                let sum: u64 = (0..=t).map(|i| binomial(i, m - 2).unwrap()).sum();
                assert_eq!(sum, binomial(t + 1, m - 1).unwrap());
            }
        }
    }

    #[test]
    fn overflow_is_detected() {
        assert_eq!(binomial(200, 100), Err(Error::Overflow("binomial")));
        assert!(count_e(600, 1).is_err());
    }
}
