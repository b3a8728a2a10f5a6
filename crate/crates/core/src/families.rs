//! Deterministic enumerators and counters for the indexed set families.
//!
//! All families live inside `{1, ..., n}` (or `{1, ..., n+1}` for the
//! script families, whose members end in `n + 1`) and are cut out by the
//! `setcore` predicates plus structural side conditions. Enumeration is a
//! depth-first extension of increasing element lists with pruning:
//!
//! - once the minimum `a` is fixed, a level-`ell` set has at most
//!   `(a + ell - 1) / ell` elements (`ell >= 1`);
//! - gap constraints bound each next element below by the previous gap.
//!
//! Output is sorted lexicographically by element list, so golden-file tests
//! are byte-stable. Counting walks the same tree without materializing sets.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::setcore::FiniteSet;

/// The indexed set families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Subsets of `{1..n}` containing `n`, sparse and `ell`-strong Schreier.
    A,
    /// As [`Family::A`] with strongly sparse in place of sparse.
    AStrong,
    /// Subsets of `{1..n}` containing `n`, `ell`-strong Schreier.
    B,
    /// As [`Family::B`] restricted to exactly `m` elements.
    BSized,
    /// Schreier and sparse subsets of `{1..n}` containing `n` with minimum
    /// exactly `m`.
    FProp1,
    /// Sets `{a_1 < ... < a_p < n+1}` with `p >= 2` that are sparse,
    /// `ell`-strong Schreier, and close with equal final gaps:
    /// `n + 1 + a_{p-1} = 2 a_p`.
    FScript,
    /// As [`Family::FScript`] restricted to exactly `k` elements.
    FScriptK,
    /// As [`Family::FScriptK`] restricted to minimum element `q`.
    FScriptKQ,
    /// Strongly sparse counterpart of [`Family::FScript`]: the final gap
    /// grows by one, `n + a_{p-1} = 2 a_p`. Optional `k`/`q` refine by size
    /// and minimum like the sparse variants.
    FScriptStrong,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::AStrong => "A_strong",
            Family::B => "B",
            Family::BSized => "B_sized",
            Family::FProp1 => "F_prop1",
            Family::FScript => "F_script",
            Family::FScriptK => "F_script_k",
            Family::FScriptKQ => "F_script_kq",
            Family::FScriptStrong => "F_script_strong",
        }
    }
}

/// A family together with its index parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyQuery {
    pub family: Family,
    pub n: u64,
    pub ell: u64,
    /// Exact number of elements (script families).
    pub k: Option<u64>,
    /// Exact minimum element (script families).
    pub q: Option<u64>,
    /// Exact number of elements (`B_sized`) or exact minimum (`F_prop1`).
    pub m: Option<u64>,
}

impl FamilyQuery {
    pub fn a(n: u64, ell: u64) -> Self {
        Self::plain(Family::A, n, ell)
    }

    pub fn a_strong(n: u64, ell: u64) -> Self {
        Self::plain(Family::AStrong, n, ell)
    }

    pub fn b(n: u64, ell: u64) -> Self {
        Self::plain(Family::B, n, ell)
    }

    pub fn b_sized(n: u64, ell: u64, m: u64) -> Self {
        Self {
            m: Some(m),
            ..Self::plain(Family::BSized, n, ell)
        }
    }

    /// Schreier sparse sets containing `n` with minimum exactly `m`.
    pub fn f_prop1(n: u64, m: u64) -> Self {
        Self {
            m: Some(m),
            ..Self::plain(Family::FProp1, n, 1)
        }
    }

    pub fn f_script(n: u64, ell: u64) -> Self {
        Self::plain(Family::FScript, n, ell)
    }

    pub fn f_script_k(n: u64, ell: u64, k: u64) -> Self {
        Self {
            k: Some(k),
            ..Self::plain(Family::FScriptK, n, ell)
        }
    }

    pub fn f_script_kq(n: u64, ell: u64, k: u64, q: u64) -> Self {
        Self {
            k: Some(k),
            q: Some(q),
            ..Self::plain(Family::FScriptKQ, n, ell)
        }
    }

    pub fn f_script_strong(n: u64, ell: u64) -> Self {
        Self::plain(Family::FScriptStrong, n, ell)
    }

    pub fn f_script_strong_kq(n: u64, ell: u64, k: u64, q: u64) -> Self {
        Self {
            k: Some(k),
            q: Some(q),
            ..Self::plain(Family::FScriptStrong, n, ell)
        }
    }

    fn plain(family: Family, n: u64, ell: u64) -> Self {
        Self {
            family,
            n,
            ell,
            k: None,
            q: None,
            m: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::Param("n must be >= 1".into()));
        }
        let need = |opt: Option<u64>, name: &str| -> Result<u64> {
            match opt {
                Some(v) if v >= 1 => Ok(v),
                Some(_) => Err(Error::Param(format!("{name} must be >= 1"))),
                None => Err(Error::Param(format!(
                    "family {} requires {name}",
                    self.family.name()
                ))),
            }
        };
        let forbid = |opt: Option<u64>, name: &str| -> Result<()> {
            if opt.is_some() {
                return Err(Error::Param(format!(
                    "family {} does not take {name}",
                    self.family.name()
                )));
            }
            Ok(())
        };
        match self.family {
            Family::A | Family::AStrong | Family::B => {
                forbid(self.k, "k")?;
                forbid(self.q, "q")?;
                forbid(self.m, "m")?;
            }
            Family::BSized => {
                forbid(self.k, "k")?;
                forbid(self.q, "q")?;
                need(self.m, "m")?;
            }
            Family::FProp1 => {
                forbid(self.k, "k")?;
                forbid(self.q, "q")?;
                need(self.m, "m")?;
            }
            Family::FScript => {
                forbid(self.k, "k")?;
                forbid(self.q, "q")?;
                forbid(self.m, "m")?;
            }
            Family::FScriptK => {
                need(self.k, "k")?;
                forbid(self.q, "q")?;
                forbid(self.m, "m")?;
            }
            Family::FScriptKQ => {
                need(self.k, "k")?;
                need(self.q, "q")?;
                forbid(self.m, "m")?;
            }
            Family::FScriptStrong => {
                forbid(self.m, "m")?;
                if let Some(k) = self.k {
                    if k == 0 {
                        return Err(Error::Param("k must be >= 1".into()));
                    }
                }
                if let Some(q) = self.q {
                    if q == 0 {
                        return Err(Error::Param("q must be >= 1".into()));
                    }
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum GapMode {
    Free,
    NonDecreasing,
    StrictlyIncreasing,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum FinalGap {
    /// Only the gap-mode constraint applies to the closing element.
    Any,
    /// Closing gap equals the previous gap (sparse script condition).
    EqualPrev,
    /// Closing gap exceeds the previous gap by one (strong script condition).
    PrevPlusOne,
}

/// Internal description of one family walk.
struct WalkSpec {
    /// Mandatory largest element: `n` for plain families, `n + 1` for the
    /// script families.
    last: u64,
    ell: u64,
    gaps: GapMode,
    final_gap: FinalGap,
    /// Minimum number of elements before the closing one.
    min_prefix: usize,
    exact_size: Option<u64>,
    exact_min: Option<u64>,
}

impl WalkSpec {
    fn from_query(q: &FamilyQuery) -> Result<Self> {
        q.validate()?;
        let spec = match q.family {
            Family::A => Self::plain(q.n, q.ell, GapMode::NonDecreasing),
            Family::AStrong => Self::plain(q.n, q.ell, GapMode::StrictlyIncreasing),
            Family::B => Self::plain(q.n, q.ell, GapMode::Free),
            Family::BSized => Self {
                exact_size: q.m,
                ..Self::plain(q.n, q.ell, GapMode::Free)
            },
            Family::FProp1 => Self {
                exact_min: q.m,
                ..Self::plain(q.n, 1, GapMode::NonDecreasing)
            },
            Family::FScript | Family::FScriptK | Family::FScriptKQ => Self {
                last: q.n + 1,
                ell: q.ell,
                gaps: GapMode::NonDecreasing,
                final_gap: FinalGap::EqualPrev,
                min_prefix: 2,
                exact_size: q.k,
                exact_min: q.q,
            },
            Family::FScriptStrong => Self {
                last: q.n + 1,
                ell: q.ell,
                gaps: GapMode::StrictlyIncreasing,
                final_gap: FinalGap::PrevPlusOne,
                min_prefix: 2,
                exact_size: q.k,
                exact_min: q.q,
            },
        };
        Ok(spec)
    }

    fn plain(n: u64, ell: u64, gaps: GapMode) -> Self {
        Self {
            last: n,
            ell,
            gaps,
            final_gap: FinalGap::Any,
            min_prefix: 0,
            exact_size: None,
            exact_min: None,
        }
    }

    /// Largest admissible set size once the minimum element is fixed.
    fn size_cap(&self, min: u64) -> u64 {
        match self.ell {
            0 => self.last,
            ell => min.div_ceil(ell),
        }
    }

    fn size_ok(&self, size: u64) -> bool {
        self.exact_size.is_none_or(|k| size == k)
    }
}

fn walk(spec: &WalkSpec, visit: &mut dyn FnMut(&[u64])) {
    let mut stack: Vec<u64> = Vec::new();
    let (lo, hi) = match spec.exact_min {
        Some(m) => (m, m.min(spec.last)),
        None => (1, spec.last),
    };
    for first in lo..=hi {
        if first == spec.last {
            // The singleton {last}; only plain families can close here.
            if spec.min_prefix == 0 && spec.size_ok(1) {
                visit(&[spec.last]);
            }
            continue;
        }
        stack.push(first);
        extend(spec, &mut stack, None, visit);
        stack.pop();
    }
}

fn extend(
    spec: &WalkSpec,
    stack: &mut Vec<u64>,
    prev_gap: Option<u64>,
    visit: &mut dyn FnMut(&[u64]),
) {
    let min = stack[0];
    let end = *stack.last().expect("non-empty prefix");
    let cap = spec.size_cap(min);
    let len = stack.len() as u64;

    // Every extension value below `last` yields lexicographically smaller
    // sets than closing with `last`, so recursing over the ascending
    // extensions first and closing afterwards emits in lex order.
    let next_lo = match (spec.gaps, prev_gap) {
        (GapMode::Free, _) | (_, None) => end + 1,
        (GapMode::NonDecreasing, Some(g)) => end + g,
        (GapMode::StrictlyIncreasing, Some(g)) => end + g + 1,
    };
    // Extending adds at least one element before the close; prune on size.
    let can_extend = len + 2 <= cap && spec.exact_size.is_none_or(|k| len + 2 <= k);
    if can_extend {
        for v in next_lo..spec.last {
            stack.push(v);
            extend(spec, stack, Some(v - end), visit);
            stack.pop();
        }
    }

    let close_gap = spec.last - end;
    let close_gap_ok = match (spec.final_gap, prev_gap) {
        (FinalGap::Any, None) => true,
        (FinalGap::Any, Some(g)) => match spec.gaps {
            GapMode::Free => true,
            GapMode::NonDecreasing => close_gap >= g,
            GapMode::StrictlyIncreasing => close_gap > g,
        },
        (FinalGap::EqualPrev, Some(g)) => close_gap == g,
        (FinalGap::PrevPlusOne, Some(g)) => close_gap == g + 1,
        (FinalGap::EqualPrev | FinalGap::PrevPlusOne, None) => false,
    };
    if close_gap_ok
        && spec.size_ok(len + 1)
        && stack.len() >= spec.min_prefix
        && schreier_level_ok(min, len + 1, spec.ell)
    {
        stack.push(spec.last);
        visit(stack);
        stack.pop();
    }
}

fn schreier_level_ok(min: u64, size: u64, ell: u64) -> bool {
    let bound = u128::from(ell) * u128::from(size - 1) + 1;
    u128::from(min) >= bound
}

/// Enumerates every member of the queried family exactly once, sorted
/// lexicographically by element list.
pub fn enum_family(query: &FamilyQuery) -> Result<Vec<FiniteSet>> {
    let spec = WalkSpec::from_query(query)?;
    let mut out: Vec<FiniteSet> = Vec::new();
    walk(&spec, &mut |elems| {
        out.push(FiniteSet::new(elems.to_vec()).expect("walker emits increasing elements"));
    });
    Ok(out)
}

/// Applies `visit` to every member's element list, in lexicographic order,
/// without materializing the sets.
pub fn for_each_member<F: FnMut(&[u64])>(query: &FamilyQuery, mut visit: F) -> Result<()> {
    let spec = WalkSpec::from_query(query)?;
    walk(&spec, &mut visit);
    Ok(())
}

/// Cardinality of the queried family, computed by the same pruned walk
/// without materializing the sets.
pub fn count_family(query: &FamilyQuery) -> Result<u64> {
    let mut count = 0u64;
    let mut overflow = false;
    for_each_member(query, |_| match count.checked_add(1) {
        Some(c) => count = c,
        None => overflow = true,
    })?;
    if overflow {
        return Err(Error::Overflow("count_family"));
    }
    Ok(count)
}

/// Sets `{a_1 < ... < a_p < n+1}` with `p >= 2` satisfying the sparse and
/// `ell`-strong Schreier conditions but not necessarily the final-gap
/// condition. These are the candidates over which the closing-gap
/// characterization is checked.
pub fn enum_fscript_candidates(n: u64, ell: u64) -> Result<Vec<FiniteSet>> {
    if n == 0 {
        return Err(Error::Param("n must be >= 1".into()));
    }
    let spec = WalkSpec {
        last: n + 1,
        ell,
        gaps: GapMode::NonDecreasing,
        final_gap: FinalGap::Any,
        min_prefix: 2,
        exact_size: None,
        exact_min: None,
    };
    let mut out: Vec<FiniteSet> = Vec::new();
    walk(&spec, &mut |elems| {
        out.push(FiniteSet::new(elems.to_vec()).expect("walker emits increasing elements"));
    });
    Ok(out)
}

/// A counts matrix over inclusive `n` and `ell` ranges, one row per `ell`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    pub n_values: Vec<u64>,
    pub ell_values: Vec<u64>,
    /// `rows[i][j]` is the count at `ell_values[i]`, `n_values[j]`.
    pub rows: Vec<Vec<u64>>,
}

impl CountTable {
    pub fn new(n_values: Vec<u64>, ell_values: Vec<u64>, rows: Vec<Vec<u64>>) -> Result<Self> {
        if rows.len() != ell_values.len() || rows.iter().any(|r| r.len() != n_values.len()) {
            return Err(Error::Param("table shape mismatch".into()));
        }
        Ok(Self {
            n_values,
            ell_values,
            rows,
        })
    }

    pub fn cells(&self) -> u64 {
        (self.n_values.len() * self.ell_values.len()) as u64
    }
}

/// Tabulates `count_family` over inclusive ranges, one row per `ell` and
/// one column per `n`. Cells are evaluated in parallel and assembled in
/// deterministic order.
pub fn count_table(
    family: Family,
    n_range: (u64, u64),
    ell_range: (u64, u64),
) -> Result<CountTable> {
    if n_range.0 > n_range.1 || ell_range.0 > ell_range.1 {
        return Err(Error::Param("empty table range".into()));
    }
    match family {
        Family::A | Family::AStrong | Family::B => {}
        other => {
            return Err(Error::Param(format!(
                "family {} needs extra parameters and cannot be tabulated over (n, ell)",
                other.name()
            )));
        }
    }
    let n_values: Vec<u64> = (n_range.0..=n_range.1).collect();
    let ell_values: Vec<u64> = (ell_range.0..=ell_range.1).collect();
    let cells: Vec<(u64, u64)> = ell_values
        .iter()
        .flat_map(|&ell| n_values.iter().map(move |&n| (ell, n)))
        .collect();
    let counts: Vec<Result<u64>> = cells
        .par_iter()
        .map(|&(ell, n)| {
            let q = FamilyQuery {
                family,
                n,
                ell,
                k: None,
                q: None,
                m: None,
            };
            count_family(&q)
        })
        .collect();
    let mut rows = Vec::with_capacity(ell_values.len());
    let mut it = counts.into_iter();
    for _ in &ell_values {
        let mut row = Vec::with_capacity(n_values.len());
        for _ in &n_values {
            row.push(it.next().expect("cell count")?);
        }
        rows.push(row);
    }
    CountTable::new(n_values, ell_values, rows)
}
