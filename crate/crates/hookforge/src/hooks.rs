//! Hook enumeration and the hook-type multiset verifier.
//!
//! The external hook set of a diagram is infinite, so every comparison here
//! is bounded by hook length. The scan window of
//! [`external_hooks_up_to`] suffices because `arm = col - lambda_{row+1}` and
//! `leg = row - lambda'_{col+1}`: any cell with `col > lambda_1 + hmax` or
//! `row > rows(lambda) + hmax` already has arm or leg above `hmax`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::partition::{hook_stats, Cell, HookSide, HookStats, Partition};
use crate::Error;

/// All internal hooks, one per cell, in row-major order.
pub fn internal_hooks(lambda: &Partition) -> Vec<(Cell, HookStats)> {
    lambda
        .cells()
        .map(|c| (c, hook_stats(lambda, c, HookSide::Internal).unwrap()))
        .collect()
}

/// All external hooks of length at most `hmax`, in row-major order of their
/// anchor cells.
pub fn external_hooks_up_to(lambda: &Partition, hmax: usize) -> Vec<(Cell, HookStats)> {
    let mut out = Vec::new();
    for row in 0..lambda.rows() + hmax + 1 {
        for col in 0..lambda.first_part() + hmax + 1 {
            let c = Cell::new(row, col);
            if lambda.contains(c) {
                continue;
            }
            let stats = hook_stats(lambda, c, HookSide::External).unwrap();
            if stats.hook_len <= hmax {
                out.push((c, stats));
            }
        }
    }
    out
}

/// Multiset of hook types `(arm, leg)`, restricted to `arm + leg + 1 <= bound`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct HookTypeMultiset {
    pub bound: usize,
    counts: BTreeMap<(usize, usize), u64>,
}

impl HookTypeMultiset {
    pub fn count(&self, arm: usize, leg: usize) -> u64 {
        self.counts.get(&(arm, leg)).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.counts.iter().map(|(&t, &n)| (t, n))
    }
}

/// Tallies hook types with `hook_len <= bound`.
pub fn hook_type_multiset<'a, I>(hooks: I, bound: usize) -> HookTypeMultiset
where
    I: IntoIterator<Item = &'a HookStats>,
{
    let mut counts = BTreeMap::new();
    for h in hooks {
        if h.hook_len <= bound {
            *counts.entry((h.arm, h.leg)).or_insert(0) += 1;
        }
    }
    HookTypeMultiset { bound, counts }
}

/// Per-type count row of a [`BessenrodtReport`].
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct HookTypeCounts {
    pub arm: usize,
    pub leg: usize,
    pub external_count: u64,
    pub internal_count: u64,
}

/// Result of checking, type by type, that the external hooks of `lambda`
/// match one copy of every external hook of the empty diagram plus the
/// internal hooks of `lambda`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct BessenrodtReport {
    pub lambda: Partition,
    pub bound: usize,
    pub pass: bool,
    /// Full per-type table so a regression localises to a hook type.
    pub types: Vec<HookTypeCounts>,
    pub failures: Vec<HookTypeCounts>,
}

/// Verifies the multiset identity `H'(lambda) = H'(empty) + H(lambda)` on all
/// hook types with `arm + leg + 1 <= bound`.
///
/// `bound` must be at least the largest internal hook length of `lambda`, so
/// that no internal hook falls out of range.
pub fn verify_bessenrodt(lambda: &Partition, bound: usize) -> Result<BessenrodtReport, Error> {
    let internal = internal_hooks(lambda);
    let max_hook = internal.iter().map(|(_, h)| h.hook_len).max().unwrap_or(0);
    if bound < max_hook {
        return Err(Error::BoundTooSmall { bound, max_hook });
    }
    let external = external_hooks_up_to(lambda, bound);
    let ext = hook_type_multiset(external.iter().map(|(_, h)| h), bound);
    let int = hook_type_multiset(internal.iter().map(|(_, h)| h), bound);

    let mut types = Vec::new();
    let mut failures = Vec::new();
    for arm in 0..bound {
        for leg in 0..bound - arm {
            let row = HookTypeCounts {
                arm,
                leg,
                external_count: ext.count(arm, leg),
                internal_count: int.count(arm, leg),
            };
            // One hook of every type belongs to the empty diagram.
            if row.external_count != 1 + row.internal_count {
                failures.push(row.clone());
            }
            types.push(row);
        }
    }
    Ok(BessenrodtReport {
        lambda: lambda.clone(),
        bound,
        pass: failures.is_empty(),
        types,
        failures,
    })
}
