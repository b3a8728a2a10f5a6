//! Constructive maps between set families and partition families, with
//! inverses.
//!
//! Each map validates its domain eagerly and fails with a
//! [`Error::Domain`] rather than producing garbage, since the identity
//! checkers rely on that signal. Bijectivity is established extensionally:
//! [`BijectionWitness`] materializes every (set, partition) pair over an
//! enumerated domain and checks injectivity, surjectivity, and both
//! roundtrips.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::families::{enum_family, FamilyQuery};
use crate::partcomp::{enum_partitions, Partition, PartitionConstraint};
use crate::setcore::{
    diff_multiset, is_ell_strong_schreier, is_schreier, is_sparse, is_strongly_sparse,
    shift_multiset, FiniteSet, PartMultiset,
};

fn domain_err(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

/// Prepends copies of `value` until the multiset has `size` entries.
fn pad_to_size(set: &FiniteSet, value: u64, size: u64) -> Result<PartMultiset> {
    let len = set.len() as u64;
    if len > size {
        return Err(domain_err(format!(
            "cannot pad a {len}-element set down to {size} entries"
        )));
    }
    let mut entries = vec![value; (size - len) as usize];
    entries.extend_from_slice(set.elements());
    Ok(PartMultiset::new(entries))
}

/// Adds `amount` to one copy of the largest entry.
fn bump_max(multiset: &PartMultiset, amount: u64) -> Result<PartMultiset> {
    let mut parts = multiset.parts().to_vec();
    let last = parts.last_mut().ok_or_else(|| domain_err("empty multiset"))?;
    *last = last
        .checked_add(amount)
        .ok_or(Error::Overflow("bump_max"))?;
    Ok(PartMultiset::new(parts))
}

fn check_prop1_domain(set: &FiniteSet, n: u64, m: u64) -> Result<()> {
    if m == 0 || n < m + 1 {
        return Err(domain_err(format!("need 1 <= m <= n - 1, got n={n} m={m}")));
    }
    if set.max_element() != Some(n) {
        return Err(domain_err(format!("{set} does not have maximum {n}")));
    }
    if set.min_element() != Some(m + 1) {
        return Err(domain_err(format!("{set} does not have minimum {}", m + 1)));
    }
    if !is_schreier(set) {
        return Err(domain_err(format!("{set} is not Schreier")));
    }
    if !is_sparse(set) {
        return Err(domain_err(format!("{set} is not sparse")));
    }
    Ok(())
}

/// Maps a Schreier sparse set with minimum `m + 1` containing `n` to a
/// partition of `n - 1` into exactly `m` parts: pad the set to `m + 1`
/// entries with copies of its minimum, take consecutive gaps, shift by one.
pub fn prop1_forward(set: &FiniteSet, n: u64, m: u64) -> Result<Partition> {
    check_prop1_domain(set, n, m)?;
    let padded = pad_to_size(set, m + 1, m + 1)?;
    let gaps = diff_multiset(padded.parts())?;
    let parts = shift_multiset(&gaps, 1)?;
    Partition::new(parts, n - 1)
}

/// Inverse of [`prop1_forward`]: rebuilds the set from the partition's
/// parts that exceed one, as cumulative sums above `m + 1`.
pub fn prop1_inverse(partition: &Partition, n: u64, m: u64) -> Result<FiniteSet> {
    if m == 0 || n < m + 1 {
        return Err(domain_err(format!("need 1 <= m <= n - 1, got n={n} m={m}")));
    }
    if partition.len() as u64 != m {
        return Err(domain_err(format!(
            "partition has {} parts, expected {m}",
            partition.len()
        )));
    }
    if partition.target() != n - 1 {
        return Err(domain_err(format!(
            "partition targets {}, expected {}",
            partition.target(),
            n - 1
        )));
    }
    let mut elems = vec![m + 1];
    let mut acc = m + 1;
    for &part in partition.parts().iter().filter(|&&p| p >= 2) {
        acc += part - 1;
        elems.push(acc);
    }
    let set = FiniteSet::new(elems)?;
    check_prop1_domain(&set, n, m)?;
    Ok(set)
}

fn check_lemma6_domain(
    set: &FiniteSet,
    n: u64,
    ell: u64,
    k: u64,
    q: u64,
    strong: bool,
) -> Result<()> {
    if k < 2 || q == 0 || n < ell + 1 {
        return Err(domain_err(format!(
            "need k >= 2, q >= 1, n >= ell + 1; got n={n} ell={ell} k={k} q={q}"
        )));
    }
    if set.len() as u64 != k + 1 {
        return Err(domain_err(format!("{set} does not have {} elements", k + 1)));
    }
    if set.max_element() != Some(n + 1) {
        return Err(domain_err(format!("{set} does not end in {}", n + 1)));
    }
    let min = ell * k + q;
    if set.min_element() != Some(min) {
        return Err(domain_err(format!("{set} does not have minimum {min}")));
    }
    let sparse_ok = if strong {
        is_strongly_sparse(set)
    } else {
        is_sparse(set)
    };
    if !sparse_ok {
        return Err(domain_err(format!(
            "{set} is not {}sparse",
            if strong { "strongly " } else { "" }
        )));
    }
    if !is_ell_strong_schreier(set, ell) {
        return Err(domain_err(format!("{set} is not {ell}-strong Schreier")));
    }
    let e = set.elements();
    let p = e.len() - 1;
    let closing = if strong { n } else { n + 1 };
    if closing + e[p - 2] != 2 * e[p - 1] {
        return Err(domain_err(format!(
            "{set} fails the closing-gap condition {closing} + {} = 2 * {}",
            e[p - 2],
            e[p - 1]
        )));
    }
    Ok(())
}

fn lemma6_map(set: &FiniteSet, ell: u64, q: u64) -> Result<PartMultiset> {
    let gaps = diff_multiset(set.elements())?;
    let shifted = shift_multiset(&gaps, i64::try_from(ell).map_err(|_| Error::Overflow("ell"))?)?;
    bump_max(&shifted, q - 1)
}

/// Maps a member of the sparse script family with `k + 1` elements and
/// minimum `ell * k + q` to a partition of `n` into `k` parts at least
/// `ell + 1` whose two largest parts differ by `q - 1`: add `ell` to each
/// consecutive gap, then bump the largest entry by `q - 1`.
pub fn lemma6_forward(set: &FiniteSet, n: u64, ell: u64, k: u64, q: u64) -> Result<Partition> {
    check_lemma6_domain(set, n, ell, k, q, false)?;
    let parts = lemma6_map(set, ell, q)?;
    let image = Partition::new(parts, n)?;
    check_lemma6_codomain(&image, n, ell, k, q - 1, false)?;
    Ok(image)
}

fn lemma6_rebuild(partition: &Partition, ell: u64, k: u64, q: u64) -> Result<FiniteSet> {
    let parts = partition.parts();
    let mut elems = Vec::with_capacity(parts.len() + 1);
    let mut acc = ell * k + q;
    elems.push(acc);
    for (i, &part) in parts.iter().enumerate() {
        let step = if i + 1 == parts.len() {
            part - ell - (q - 1)
        } else {
            part - ell
        };
        acc += step;
        elems.push(acc);
    }
    FiniteSet::new(elems)
}

fn check_lemma6_codomain(
    partition: &Partition,
    n: u64,
    ell: u64,
    k: u64,
    top_gap: u64,
    distinct: bool,
) -> Result<()> {
    if partition.target() != n || partition.len() as u64 != k {
        return Err(domain_err(format!(
            "partition {partition} is not a {k}-part partition of {n}"
        )));
    }
    if partition.parts().first().copied().unwrap_or(0) < ell + 1 {
        return Err(domain_err(format!(
            "partition {partition} has a part below {}",
            ell + 1
        )));
    }
    if partition.top_gap() != Some(top_gap) {
        return Err(domain_err(format!(
            "partition {partition} does not have top gap {top_gap}"
        )));
    }
    if distinct && !partition.is_distinct() {
        return Err(domain_err(format!("partition {partition} repeats a part")));
    }
    Ok(())
}

/// Inverse of [`lemma6_forward`]: subtract `ell` from each part (and
/// additionally `q - 1` from the largest), then take cumulative sums above
/// `ell * k + q`.
pub fn lemma6_inverse(partition: &Partition, n: u64, ell: u64, k: u64, q: u64) -> Result<FiniteSet> {
    if k < 2 || q == 0 || n < ell + 1 {
        return Err(domain_err(format!(
            "need k >= 2, q >= 1, n >= ell + 1; got n={n} ell={ell} k={k} q={q}"
        )));
    }
    check_lemma6_codomain(partition, n, ell, k, q - 1, false)?;
    let set = lemma6_rebuild(partition, ell, k, q)?;
    check_lemma6_domain(&set, n, ell, k, q, false)?;
    Ok(set)
}

/// Strongly sparse counterpart of [`lemma6_forward`]. The image is a
/// partition of `n` into `k` distinct parts at least `ell + 1` whose two
/// largest parts differ by `q`; the shift of the codomain floor from `ell`
/// to `ell + 1` is confirmed empirically by the identity checkers.
pub fn lemma6s_forward(set: &FiniteSet, n: u64, ell: u64, k: u64, q: u64) -> Result<Partition> {
    check_lemma6_domain(set, n, ell, k, q, true)?;
    let parts = lemma6_map(set, ell, q)?;
    let image = Partition::new(parts, n)?;
    check_lemma6_codomain(&image, n, ell, k, q, true)?;
    Ok(image)
}

/// Inverse of [`lemma6s_forward`].
pub fn lemma6s_inverse(partition: &Partition, n: u64, ell: u64, k: u64, q: u64) -> Result<FiniteSet> {
    if k < 2 || q == 0 || n < ell + 1 {
        return Err(domain_err(format!(
            "need k >= 2, q >= 1, n >= ell + 1; got n={n} ell={ell} k={k} q={q}"
        )));
    }
    check_lemma6_codomain(partition, n, ell, k, q, true)?;
    let set = lemma6_rebuild(partition, ell, k, q)?;
    check_lemma6_domain(&set, n, ell, k, q, true)?;
    Ok(set)
}

/// Replaces `n` by `n + 1` in a set that contains `n` as its maximum.
pub fn thm2_shift(set: &FiniteSet, n: u64) -> Result<FiniteSet> {
    if set.max_element() != Some(n) {
        return Err(domain_err(format!("{set} does not have maximum {n}")));
    }
    let mut elems = set.elements().to_vec();
    *elems.last_mut().expect("nonempty set") = n + 1;
    FiniteSet::new(elems)
}

/// For a set `{a_1 < ... < a_p < n+1}` with `p >= 2` that is sparse, decides
/// the closing-gap equality `n + 1 + a_{p-1} = 2 a_p`.
///
/// On such sets this is equivalent to the removal condition "if `a_p < n`,
/// then replacing `n + 1` by `n` breaks sparsity"; the equivalence is
/// checked exhaustively by the test suite.
pub fn claim9_check(set: &FiniteSet, n: u64) -> Result<bool> {
    if set.len() < 3 {
        return Err(domain_err(format!("{set} has fewer than 3 elements")));
    }
    if set.max_element() != Some(n + 1) {
        return Err(domain_err(format!("{set} does not end in {}", n + 1)));
    }
    if !is_sparse(set) {
        return Err(domain_err(format!("{set} is not sparse")));
    }
    let e = set.elements();
    let p = e.len() - 1;
    Ok(n + 1 + e[p - 2] == 2 * e[p - 1])
}

/// Descriptor of a partition-family codomain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionFamily {
    pub n: u64,
    pub constraint: PartitionConstraint,
}

impl PartitionFamily {
    pub fn members(&self) -> Vec<Partition> {
        enum_partitions(self.n, &self.constraint)
    }
}

/// A materialized bijection between an enumerated set family and an
/// enumerated partition family.
#[derive(Debug, Clone)]
pub struct BijectionWitness {
    pub domain_query: FamilyQuery,
    pub codomain: PartitionFamily,
    pub pairs: Vec<(FiniteSet, Partition)>,
}

impl BijectionWitness {
    /// Materializes the map from Schreier sparse sets with minimum `m + 1`
    /// onto partitions of `n - 1` into `m` parts.
    pub fn prop1(n: u64, m: u64) -> Result<Self> {
        let domain_query = FamilyQuery::f_prop1(n, m + 1);
        let codomain = PartitionFamily {
            n: n - 1,
            constraint: PartitionConstraint::min_part(1).with_parts(m),
        };
        let pairs = enum_family(&domain_query)?
            .into_iter()
            .map(|set| {
                let image = prop1_forward(&set, n, m)?;
                let back = prop1_inverse(&image, n, m)?;
                if back != set {
                    return Err(domain_err(format!(
                        "roundtrip failed: {set} -> {image} -> {back}"
                    )));
                }
                Ok((set, image))
            })
            .collect::<Result<Vec<_>>>()?;
        let witness = Self {
            domain_query,
            codomain,
            pairs,
        };
        witness.check()?;
        Ok(witness)
    }

    /// Materializes the sparse script-family map onto partitions with top
    /// gap `q - 1`.
    pub fn lemma6(n: u64, ell: u64, k: u64, q: u64) -> Result<Self> {
        let domain_query = FamilyQuery::f_script_kq(n, ell, k + 1, ell * k + q);
        let codomain = PartitionFamily {
            n,
            constraint: PartitionConstraint::min_part(ell + 1)
                .with_parts(k)
                .with_top_gap(q - 1),
        };
        let pairs = enum_family(&domain_query)?
            .into_iter()
            .map(|set| {
                let image = lemma6_forward(&set, n, ell, k, q)?;
                let back = lemma6_inverse(&image, n, ell, k, q)?;
                if back != set {
                    return Err(domain_err(format!(
                        "roundtrip failed: {set} -> {image} -> {back}"
                    )));
                }
                Ok((set, image))
            })
            .collect::<Result<Vec<_>>>()?;
        let witness = Self {
            domain_query,
            codomain,
            pairs,
        };
        witness.check()?;
        Ok(witness)
    }

    /// Materializes the strongly sparse script-family map onto distinct-part
    /// partitions with top gap `q`.
    pub fn lemma6s(n: u64, ell: u64, k: u64, q: u64) -> Result<Self> {
        let domain_query = FamilyQuery::f_script_strong_kq(n, ell, k + 1, ell * k + q);
        let codomain = PartitionFamily {
            n,
            constraint: PartitionConstraint::distinct_min_part(ell + 1)
                .with_parts(k)
                .with_top_gap(q),
        };
        let pairs = enum_family(&domain_query)?
            .into_iter()
            .map(|set| {
                let image = lemma6s_forward(&set, n, ell, k, q)?;
                let back = lemma6s_inverse(&image, n, ell, k, q)?;
                if back != set {
                    return Err(domain_err(format!(
                        "roundtrip failed: {set} -> {image} -> {back}"
                    )));
                }
                Ok((set, image))
            })
            .collect::<Result<Vec<_>>>()?;
        let witness = Self {
            domain_query,
            codomain,
            pairs,
        };
        witness.check()?;
        Ok(witness)
    }

    /// Checks that the pairs form a bijection between the full enumerated
    /// domain and codomain.
    pub fn check(&self) -> Result<()> {
        let domain: BTreeSet<FiniteSet> = enum_family(&self.domain_query)?.into_iter().collect();
        let lefts: BTreeSet<FiniteSet> = self.pairs.iter().map(|(s, _)| s.clone()).collect();
        if lefts.len() != self.pairs.len() {
            return Err(domain_err("a domain member appears twice"));
        }
        if lefts != domain {
            return Err(domain_err("pairs do not cover the domain exactly"));
        }
        let codomain: BTreeSet<Partition> = self.codomain.members().into_iter().collect();
        let rights: BTreeSet<Partition> = self.pairs.iter().map(|(_, p)| p.clone()).collect();
        if rights.len() != self.pairs.len() {
            return Err(domain_err("the map is not injective"));
        }
        if rights != codomain {
            return Err(domain_err("the image does not cover the codomain"));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partcomp::count_p_k;

    fn set(elems: &[u64]) -> FiniteSet {
        FiniteSet::new(elems.to_vec()).unwrap()
    }

    fn partition(parts: &[u64]) -> Partition {
        Partition::from_parts(parts.to_vec(), parts.iter().sum()).unwrap()
    }

    #[test]
    fn prop1_forward_examples() {
        assert_eq!(
            prop1_forward(&set(&[3, 6]), 6, 2).unwrap(),
            partition(&[1, 4])
        );
        assert_eq!(
            prop1_forward(&set(&[3, 4, 6]), 6, 2).unwrap(),
            partition(&[2, 3])
        );
        // Padded copies become parts equal to one.
        let image = prop1_forward(&set(&[4, 7]), 7, 3).unwrap();
        assert_eq!(image.parts(), &[1, 1, 4]);
    }

    #[test]
    fn prop1_inverse_examples() {
        assert_eq!(
            prop1_inverse(&partition(&[1, 4]), 6, 2).unwrap(),
            set(&[3, 6])
        );
        assert_eq!(
            prop1_inverse(&partition(&[2, 3]), 6, 2).unwrap(),
            set(&[3, 4, 6])
        );
        // All-ones partition collapses to the singleton {m + 1}.
        assert_eq!(
            prop1_inverse(&partition(&[1, 1, 1]), 4, 3).unwrap(),
            set(&[4])
        );
    }

    #[test]
    fn prop1_rejects_non_members() {
        assert!(matches!(
            prop1_forward(&set(&[2, 3, 5]), 5, 1),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            prop1_inverse(&partition(&[1, 4]), 6, 3),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn prop1_witness_small_range() {
        for n in 2..=14u64 {
            for m in 1..=n - 1 {
                let witness = BijectionWitness::prop1(n, m).unwrap();
                assert_eq!(
                    witness.pairs.len() as u64,
                    count_p_k(n - 1, m).unwrap(),
                    "n={n} m={m}"
                );
            }
        }
    }

    #[test]
    fn lemma6_examples() {
        assert_eq!(
            lemma6_forward(&set(&[3, 4, 5]), 4, 1, 2, 1).unwrap(),
            partition(&[2, 2])
        );
        assert_eq!(
            lemma6_inverse(&partition(&[2, 2]), 4, 1, 2, 1).unwrap(),
            set(&[3, 4, 5])
        );
        // {3,4,6} with n = 5 fails the closing-gap condition.
        assert!(matches!(
            lemma6_forward(&set(&[3, 4, 6]), 5, 1, 2, 1),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn lemma6_witness_small_range() {
        for n in 1..=14u64 {
            for ell in 0..=2u64 {
                if n < ell + 1 {
                    continue;
                }
                for k in 2..=6u64 {
                    for q in 1..=n {
                        let witness = BijectionWitness::lemma6(n, ell, k, q).unwrap();
                        let _ = witness;
                    }
                }
            }
        }
    }

    #[test]
    fn lemma6s_witness_small_range() {
        for n in 1..=14u64 {
            for ell in 0..=2u64 {
                if n < ell + 1 {
                    continue;
                }
                for k in 2..=6u64 {
                    for q in 1..=n {
                        let witness = BijectionWitness::lemma6s(n, ell, k, q).unwrap();
                        let _ = witness;
                    }
                }
            }
        }
    }

    #[test]
    fn shift_examples() {
        assert_eq!(thm2_shift(&set(&[6]), 6).unwrap(), set(&[7]));
        assert_eq!(thm2_shift(&set(&[3, 4, 6]), 6).unwrap(), set(&[3, 4, 7]));
        assert!(matches!(thm2_shift(&set(&[3, 4]), 6), Err(Error::Domain(_))));
    }

    #[test]
    fn claim9_examples() {
        assert!(claim9_check(&set(&[3, 4, 5]), 4).unwrap());
        assert!(!claim9_check(&set(&[3, 4, 7]), 6).unwrap());
        assert!(matches!(claim9_check(&set(&[3, 7]), 6), Err(Error::Domain(_))));
    }
}
