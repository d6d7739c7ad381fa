//! The hook-to-strip correspondence.
//!
//! An external hook of `lambda` with content window `[lo, hi]` is, on the
//! beta-number encoding `b_i = lambda_i - i`, an occupied value `lo - 1`
//! together with a free value `hi`. Moving the bead up to `hi` adds the
//! unique border strip with that content window and exposes the internal
//! hook of the enlarged diagram with the same window; moving it back down
//! removes the strip again. Realising both directions as bead moves makes
//! uniqueness of the strip and exactness of the content window structural.

use serde::Serialize;

use crate::hooks::{external_hooks_up_to, internal_hooks};
use crate::partition::{hook_stats, partitions_of, Cell, HookSide, HookStats, Partition};
use crate::Error;

/// A partition together with one marked hook.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct HookedPartition {
    pub lambda: Partition,
    pub cell: Cell,
    pub stats: HookStats,
}

impl HookedPartition {
    pub fn new(lambda: Partition, cell: Cell, side: HookSide) -> Result<Self, Error> {
        let stats = hook_stats(&lambda, cell, side)?;
        Ok(HookedPartition {
            lambda,
            cell,
            stats,
        })
    }
}

/// All pairs (partition of `d`, internal hook of length `ell`), sorted by
/// partition in reverse-lexicographic order and cells row-major.
pub fn enumerate_s(d: usize, ell: usize) -> Vec<HookedPartition> {
    if ell == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for lambda in partitions_of(d) {
        for (cell, stats) in internal_hooks(&lambda) {
            if stats.hook_len == ell {
                out.push(HookedPartition {
                    lambda: lambda.clone(),
                    cell,
                    stats,
                });
            }
        }
    }
    out
}

/// All pairs (partition of `d`, external hook of length `ell`), in the same
/// order. There are finitely many: one external hook per type per partition.
pub fn enumerate_s_prime(d: usize, ell: usize) -> Vec<HookedPartition> {
    if ell == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for lambda in partitions_of(d) {
        for (cell, stats) in external_hooks_up_to(&lambda, ell) {
            if stats.hook_len == ell {
                out.push(HookedPartition {
                    lambda: lambda.clone(),
                    cell,
                    stats,
                });
            }
        }
    }
    out
}

/// First `n` beta values `b_i = lambda_i - i`, a strictly decreasing
/// sequence continuing as `-i` beyond the last part.
fn beta_values(lambda: &Partition, n: usize) -> Vec<i64> {
    (1..=n)
        .map(|i| lambda.part(i - 1) as i64 - i as i64)
        .collect()
}

/// Rebuilds a partition from its first `n` beta values (in any order); the
/// tail beyond `n` is assumed untouched.
fn partition_from_beta(mut values: Vec<i64>) -> Partition {
    values.sort_unstable_by(|a, b| b.cmp(a));
    let mut parts = Vec::new();
    for (idx, &b) in values.iter().enumerate() {
        let i = (idx + 1) as i64;
        let part = b + i;
        assert!(part >= 0, "beta values do not encode a partition");
        if idx > 0 {
            assert!(values[idx - 1] > b, "beta values must be distinct");
        }
        if part > 0 {
            assert_eq!(parts.len(), idx, "positive part after a zero part");
            parts.push(part as usize);
        }
    }
    Partition::new(parts).expect("beta values encode weakly decreasing parts")
}

/// Moves the bead `from` (which must be present among the first `n` beta
/// values) to the free value `to`.
fn move_bead(lambda: &Partition, n: usize, from: i64, to: i64) -> Partition {
    let mut values = beta_values(lambda, n);
    let pos = values
        .iter()
        .position(|&b| b == from)
        .expect("source bead is occupied");
    assert!(!values.contains(&to), "target bead is free");
    values[pos] = to;
    partition_from_beta(values)
}

/// Locates the internal hook of `mu` with the given content window.
fn internal_hook_with_window(mu: &Partition, lo: i64, hi: i64) -> (Cell, HookStats) {
    let row = (0..mu.rows())
        .find(|&r| mu.part(r) as i64 - r as i64 == hi + 1)
        .expect("a row ends at the window's upper content");
    let col = (0..mu.first_part())
        .find(|&c| c as i64 - mu.conjugate_part(c) as i64 + 1 == lo)
        .expect("a column ends at the window's lower content");
    let cell = Cell::new(row, col);
    let stats = hook_stats(mu, cell, HookSide::Internal).expect("corner cell is internal");
    assert_eq!((stats.content_lo, stats.content_hi), (lo, hi));
    (cell, stats)
}

/// Locates the external hook of `lambda` with the given content window.
fn external_hook_with_window(lambda: &Partition, lo: i64, hi: i64) -> (Cell, HookStats) {
    let len = (hi - lo + 1) as usize;
    let row = (0..lambda.rows() + len + 1)
        .find(|&r| lambda.part(r) as i64 - r as i64 == lo)
        .expect("a row boundary sits at the window's lower content");
    let col = (0..lambda.first_part() + len + 1)
        .find(|&c| c as i64 - lambda.conjugate_part(c) as i64 == hi)
        .expect("a column boundary sits at the window's upper content");
    let cell = Cell::new(row, col);
    let stats = hook_stats(lambda, cell, HookSide::External).expect("cell is outside");
    assert_eq!((stats.content_lo, stats.content_hi), (lo, hi));
    (cell, stats)
}

/// Adds to `hp.lambda` the unique border strip sharing the external hook's
/// content window and returns the enlarged partition with the internal hook
/// exposed by the strip. Content window and hook type carry over; hand and
/// foot swap roles (the west end of the external hook is the south end of
/// the internal one).
pub fn to_internal(hp: &HookedPartition) -> Result<HookedPartition, Error> {
    if hp.stats.side != HookSide::External {
        return Err(Error::Precondition(
            "to_internal expects an external hook".into(),
        ));
    }
    let (lo, hi) = (hp.stats.content_lo, hp.stats.content_hi);
    let n = hp.lambda.rows() + hp.stats.hook_len + 2;
    let mu = move_bead(&hp.lambda, n, lo - 1, hi);
    assert_eq!(mu.size(), hp.lambda.size() + hp.stats.hook_len);
    let (cell, stats) = internal_hook_with_window(&mu, lo, hi);
    Ok(HookedPartition {
        lambda: mu,
        cell,
        stats,
    })
}

/// Exact inverse of [`to_internal`]: removes the border strip of the marked
/// internal hook and returns the shrunken partition with the external hook
/// left behind.
pub fn to_external(hp: &HookedPartition) -> Result<HookedPartition, Error> {
    if hp.stats.side != HookSide::Internal {
        return Err(Error::Precondition(
            "to_external expects an internal hook".into(),
        ));
    }
    let (lo, hi) = (hp.stats.content_lo, hp.stats.content_hi);
    let n = hp.lambda.rows() + hp.stats.hook_len + 2;
    let lambda = move_bead(&hp.lambda, n, hi, lo - 1);
    assert_eq!(lambda.size() + hp.stats.hook_len, hp.lambda.size());
    let (cell, stats) = external_hook_with_window(&lambda, lo, hi);
    Ok(HookedPartition {
        lambda,
        cell,
        stats,
    })
}

/// The cells of `mu \ lambda`, row-major.
pub fn skew_cells(mu: &Partition, lambda: &Partition) -> Vec<Cell> {
    mu.cells().filter(|&c| !lambda.contains(c)).collect()
}

/// One violated predicate of [`verify_hook_strip`].
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct HookStripCounterexample {
    pub external: HookedPartition,
    pub internal: Option<HookedPartition>,
    pub violated: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct HookStripReport {
    pub d: usize,
    pub ell: usize,
    #[serde(rename = "size_S")]
    pub size_s: usize,
    #[serde(rename = "size_Sprime")]
    pub size_sprime: usize,
    pub pass: bool,
    pub counterexamples: Vec<HookStripCounterexample>,
}

/// Checks that [`to_internal`] maps the external side `S'_{d-ell,ell}`
/// bijectively onto the internal side `S_{d,ell}`, preserving the content
/// window and hook type, exchanging hand and foot positions, and inverting
/// under [`to_external`], with the added strip matching the hook cell for
/// cell.
pub fn verify_hook_strip(d: usize, ell: usize) -> HookStripReport {
    let s = enumerate_s(d, ell);
    let sprime = if d >= ell {
        enumerate_s_prime(d - ell, ell)
    } else {
        Vec::new()
    };
    let mut counterexamples = Vec::new();
    let mut images = Vec::new();
    for hp in &sprime {
        let mut fail = |violated: &str, internal: Option<HookedPartition>| {
            counterexamples.push(HookStripCounterexample {
                external: hp.clone(),
                internal,
                violated: violated.to_string(),
            });
        };
        let img = to_internal(hp).expect("external element");
        if img.lambda.size() != d || img.stats.hook_len != ell {
            fail("image lies outside the internal side", Some(img.clone()));
        }
        if (img.stats.content_lo, img.stats.content_hi)
            != (hp.stats.content_lo, hp.stats.content_hi)
        {
            fail("content window not preserved", Some(img.clone()));
        }
        if (img.stats.arm, img.stats.leg) != (hp.stats.arm, hp.stats.leg) {
            fail("hook type not preserved", Some(img.clone()));
        }
        if img.stats.hand != hp.stats.foot || img.stats.foot != hp.stats.hand {
            fail("hand and foot positions not preserved", Some(img.clone()));
        }
        // The strip added by the bead move is the hook's content window,
        // one cell per content, with the hook's extremes.
        let strip = skew_cells(&img.lambda, &hp.lambda);
        let mut contents: Vec<i64> = strip.iter().map(Cell::content).collect();
        contents.sort_unstable();
        let window: Vec<i64> = (hp.stats.content_lo..=hp.stats.content_hi).collect();
        if contents != window || !strip.contains(&hp.stats.hand) || !strip.contains(&hp.stats.foot)
        {
            fail(
                "added strip does not realise the content window",
                Some(img.clone()),
            );
        }
        let back = to_external(&img).expect("internal element");
        if &back != hp {
            fail("round trip is not the identity", Some(img.clone()));
        }
        images.push(img);
    }
    // Bijectivity: images must be exactly the internal side, with no repeats.
    let mut sorted_images: Vec<_> = images
        .iter()
        .map(|hp| (hp.lambda.clone(), hp.cell))
        .collect();
    sorted_images.sort();
    sorted_images.dedup();
    let mut sorted_s: Vec<_> = s.iter().map(|hp| (hp.lambda.clone(), hp.cell)).collect();
    sorted_s.sort();
    let bijective = sorted_images == sorted_s && images.len() == s.len();
    if !bijective {
        counterexamples.push(HookStripCounterexample {
            external: HookedPartition {
                lambda: Partition::empty(),
                cell: Cell::new(0, 0),
                stats: HookStats {
                    side: HookSide::External,
                    arm: 0,
                    leg: 0,
                    hook_len: 1,
                    hand: Cell::new(0, 0),
                    foot: Cell::new(0, 0),
                    content_lo: 0,
                    content_hi: 0,
                },
            },
            internal: None,
            violated: format!(
                "images of S'_{{{},{}}} do not exhaust S_{{{},{}}}",
                d.saturating_sub(ell),
                ell,
                d,
                ell
            ),
        });
    }
    HookStripReport {
        d,
        ell,
        size_s: s.len(),
        size_sprime: sprime.len(),
        pass: counterexamples.is_empty(),
        counterexamples,
    }
}
