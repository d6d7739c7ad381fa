//! The tectonic movement of plates and the coverage verifier it supports.
//!
//! The band subdivision cuts the complement of a nonempty diagram into
//! tectonic plates indexed by `(i, j)` with `i` the column band (west to
//! east) and `j` the row band (north to south), both 1-based; `(i, j)` is a
//! plate exactly when `i + j >= K + 2`. The movement shifts each plate north
//! by the height of the diagram due north of it and west by the width of the
//! diagram due west of it, so an external hook of the diagram lands on an
//! external hook of the empty diagram of the same type. Everything here is
//! lattice-exact: measure-zero intersections of real rectangles become empty
//! lattice intersections.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::partition::{
    hook_stats, subdivision, thinness_violation, Cell, HookSide, Partition, Subdivision,
};
use crate::Error;

/// Band coordinates of a tectonic plate: column band `i`, row band `j`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PlateCoord {
    pub i: usize,
    pub j: usize,
}

impl PlateCoord {
    pub fn new(i: usize, j: usize) -> Self {
        PlateCoord { i, j }
    }
}

impl fmt::Debug for PlateCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R({},{})", self.i, self.j)
    }
}

/// Upper bound of a half-open coordinate range; bands in the last row or
/// column are semi-infinite.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Extent {
    Finite(usize),
    Infinite,
}

impl Extent {
    fn min(self, other: Extent) -> Extent {
        match (self, other) {
            (Extent::Finite(a), Extent::Finite(b)) => Extent::Finite(a.min(b)),
            (Extent::Finite(a), Extent::Infinite) => Extent::Finite(a),
            (Extent::Infinite, b) => b,
        }
    }

    fn clip(self, bound: usize) -> usize {
        match self {
            Extent::Finite(a) => a.min(bound),
            Extent::Infinite => bound,
        }
    }
}

/// An axis-aligned lattice rectangle with half-open ranges, possibly
/// semi-infinite to the south or east. Always nonempty.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct LatticeRect {
    pub row_lo: usize,
    pub col_lo: usize,
    pub row_hi: Extent,
    pub col_hi: Extent,
}

impl LatticeRect {
    pub fn contains(&self, c: Cell) -> bool {
        c.row >= self.row_lo
            && c.col >= self.col_lo
            && match self.row_hi {
                Extent::Finite(h) => c.row < h,
                Extent::Infinite => true,
            }
            && match self.col_hi {
                Extent::Finite(h) => c.col < h,
                Extent::Infinite => true,
            }
    }
}

/// Signed size of one axis of a rectangle intersection; nonpositive values
/// mean the rectangles are disjoint or only share a boundary on that axis.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Dim {
    Finite(i64),
    Infinite,
}

impl Dim {
    pub fn is_positive(self) -> bool {
        match self {
            Dim::Finite(v) => v > 0,
            Dim::Infinite => true,
        }
    }
}

fn check_band(sub: &Subdivision, p: PlateCoord) -> Result<(), Error> {
    let k = sub.k();
    if p.i == 0 || p.j == 0 || p.i > k + 1 || p.j > k + 1 {
        return Err(Error::BandOutOfRange { i: p.i, j: p.j, k });
    }
    Ok(())
}

fn check_plate(sub: &Subdivision, p: PlateCoord) -> Result<(), Error> {
    check_band(sub, p)?;
    if !sub.is_plate(p.i, p.j) {
        return Err(Error::NotAPlate {
            i: p.i,
            j: p.j,
            min: sub.k() + 2,
        });
    }
    Ok(())
}

/// The lattice rectangle of band `(i, j)`.
pub fn band_rect(sub: &Subdivision, p: PlateCoord) -> Result<LatticeRect, Error> {
    check_band(sub, p)?;
    let k = sub.k();
    let col_hi = if p.i <= k {
        Extent::Finite(sub.x_prefix(p.i))
    } else {
        Extent::Infinite
    };
    let row_hi = if p.j <= k {
        Extent::Finite(sub.y_prefix(p.j))
    } else {
        Extent::Infinite
    };
    Ok(LatticeRect {
        row_lo: sub.y_prefix(p.j - 1),
        col_lo: sub.x_prefix(p.i - 1),
        row_hi,
        col_hi,
    })
}

/// The plate containing an outside cell.
pub fn plate_of(lambda: &Partition, cell: Cell) -> Result<PlateCoord, Error> {
    if lambda.contains(cell) {
        return Err(Error::CellInside {
            row: cell.row,
            col: cell.col,
            context: "a tectonic plate",
        });
    }
    let sub = subdivision(lambda)?;
    let k = sub.k();
    let i = (1..=k)
        .find(|&i| cell.col < sub.x_prefix(i))
        .unwrap_or(k + 1);
    let j = (1..=k)
        .find(|&j| cell.row < sub.y_prefix(j))
        .unwrap_or(k + 1);
    debug_assert!(sub.is_plate(i, j));
    Ok(PlateCoord::new(i, j))
}

/// Shift applied to a plate by the tectonic movement: north by the height of
/// the diagram in the plate's column band, west by the width of the diagram
/// in its row band.
pub fn theta_shift(lambda: &Partition, p: PlateCoord) -> Result<(usize, usize), Error> {
    let sub = subdivision(lambda)?;
    check_plate(&sub, p)?;
    let k = sub.k();
    let north = sub.y_prefix(k + 1 - p.i);
    let west = sub.x_prefix(k + 1 - p.j);
    Ok((north, west))
}

/// Image of an outside cell under the tectonic movement.
pub fn theta_cell(lambda: &Partition, cell: Cell) -> Result<Cell, Error> {
    let p = plate_of(lambda, cell)?;
    let (north, west) = theta_shift(lambda, p)?;
    // The shift never exceeds the plate's own offsets: column band i has at
    // least Y_{K+1-i} diagram rows above it, and symmetrically for columns.
    Ok(Cell::new(cell.row - north, cell.col - west))
}

/// Image rectangle of a whole plate under the tectonic movement.
pub fn theta_image(lambda: &Partition, p: PlateCoord) -> Result<LatticeRect, Error> {
    let sub = subdivision(lambda)?;
    check_plate(&sub, p)?;
    let rect = band_rect(&sub, p)?;
    let (north, west) = theta_shift(lambda, p)?;
    let sub_ext = |e: Extent, d: usize| match e {
        Extent::Finite(v) => Extent::Finite(v - d),
        Extent::Infinite => Extent::Infinite,
    };
    Ok(LatticeRect {
        row_lo: rect.row_lo - north,
        col_lo: rect.col_lo - west,
        row_hi: sub_ext(rect.row_hi, north),
        col_hi: sub_ext(rect.col_hi, west),
    })
}

/// Direct oracle: signed width and height of the intersection of two
/// rectangles.
pub fn rect_intersection_dims(a: &LatticeRect, b: &LatticeRect) -> (Dim, Dim) {
    let axis = |lo_a: usize, hi_a: Extent, lo_b: usize, hi_b: Extent| -> Dim {
        let lo = lo_a.max(lo_b) as i64;
        match hi_a.min(hi_b) {
            Extent::Finite(h) => Dim::Finite(h as i64 - lo),
            Extent::Infinite => Dim::Infinite,
        }
    };
    (
        axis(a.col_lo, a.col_hi, b.col_lo, b.col_hi),
        axis(a.row_lo, a.row_hi, b.row_lo, b.row_hi),
    )
}

/// Closed-form width and height of the intersection of two plate images for
/// a thin partition, as `(width, height)`.
///
/// The two values describe a nonempty rectangle only when both are positive;
/// the fused sign pattern is what the direct oracle must reproduce.
pub fn intersection_dims(
    lambda: &Partition,
    p: PlateCoord,
    q: PlateCoord,
) -> Result<(Dim, Dim), Error> {
    if let Some(err) = thinness_violation(lambda) {
        return Err(err);
    }
    let sub = subdivision(lambda)?;
    check_plate(&sub, p)?;
    check_plate(&sub, q)?;
    let k = sub.k();
    // Inclusive 1-based sums, empty when reversed.
    let cum = |seq: &[usize], lo: usize, hi_incl: usize| -> i64 {
        if lo > hi_incl {
            0
        } else {
            seq[lo - 1..hi_incl].iter().sum::<usize>() as i64
        }
    };
    let axis = |len: &[usize], a1: usize, b1: usize, a2: usize, b2: usize| -> Dim {
        // Offsets of the two images along this axis.
        let off1 = cum(len, k + 2 - b1, a1 - 1);
        let off2 = cum(len, k + 2 - b2, a2 - 1);
        match a1.cmp(&a2) {
            Ordering::Less => Dim::Finite(cum(len, k + 2 - b1, a1) - off2),
            Ordering::Greater => Dim::Finite(cum(len, k + 2 - b2, a2) - off1),
            Ordering::Equal => {
                if a1 == k + 1 {
                    Dim::Infinite
                } else {
                    Dim::Finite(len[a1 - 1] as i64 - (off1 - off2).abs())
                }
            }
        }
    };
    let width = axis(sub.x(), p.i, p.j, q.i, q.j);
    let height = axis(sub.y(), p.j, p.i, q.j, q.i);
    Ok((width, height))
}

/// One doubly-covered cell of the coverage grid, matched with the internal
/// hook of the diagram carrying the same hook type.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct OverlapCell {
    pub cell: Cell,
    pub matched: Cell,
    pub arm: usize,
    pub leg: usize,
}

/// Result of the constructive coverage verification on a finite box.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CoverageReport {
    pub lambda: Partition,
    pub box_size: usize,
    /// Side length of the safe region `[0, box - sum(x) - sum(y))^2`.
    pub safe_size: usize,
    pub pass: bool,
    /// Coverage multiplicities, run-length encoded per row as
    /// `(multiplicity, run)` pairs.
    pub multiplicity_rle: Vec<Vec<(u32, u32)>>,
    /// Tile-by-tile matching of doubly covered cells to internal hooks.
    pub overlaps: Vec<OverlapCell>,
    pub failures: Vec<String>,
}

impl CoverageReport {
    /// Plain-text heatmap of the coverage grid, one digit per cell.
    pub fn heatmap(&self) -> String {
        let mut out = String::new();
        for row in &self.multiplicity_rle {
            for &(mult, run) in row {
                let ch = if mult <= 9 {
                    char::from(b'0' + mult as u8)
                } else {
                    '+'
                };
                for _ in 0..run {
                    out.push(ch);
                }
            }
            out.push('\n');
        }
        out
    }
}

fn rle_row(row: &[u32]) -> Vec<(u32, u32)> {
    let mut out: Vec<(u32, u32)> = Vec::new();
    for &v in row {
        match out.last_mut() {
            Some((mult, run)) if *mult == v => *run += 1,
            _ => out.push((v, 1)),
        }
    }
    out
}

/// Verifies, cell by cell on an `N x N` box, that the tectonic movement of a
/// thin partition covers the whole quadrant, that its doubly covered cells
/// match the internal hooks type for type, and that only adjacent plates on
/// one antidiagonal or plates on the first antidiagonal ever overlap.
pub fn verify_thin_bijection(lambda: &Partition, box_size: usize) -> Result<CoverageReport, Error> {
    if let Some(err) = thinness_violation(lambda) {
        return Err(err);
    }
    let sub = subdivision(lambda)?; // rejects the empty partition
    let k = sub.k();
    let spread = lambda.first_part() + lambda.rows(); // sum(x) + sum(y)
                                                      // No shift exceeds max(sum x, sum y), and every tile overlap sits within
                                                      // that distance of the origin, so this floor keeps the safe region clear
                                                      // of box-edge truncation artefacts.
    let min_box = spread + lambda.first_part().max(lambda.rows());
    if box_size <= min_box {
        return Err(Error::BoxTooSmall {
            box_size,
            min: min_box + 1,
        });
    }
    let safe = box_size - spread;
    let mut failures: Vec<String> = Vec::new();

    let plates: Vec<PlateCoord> = (1..=k + 1)
        .flat_map(|i| (1..=k + 1).map(move |j| PlateCoord::new(i, j)))
        .filter(|p| sub.is_plate(p.i, p.j))
        .collect();

    // Accumulate coverage multiplicities of the plate images.
    let mut grid = vec![vec![0u32; box_size]; box_size];
    for &p in &plates {
        let img = theta_image(lambda, p)?;
        for row in img.row_lo..img.row_hi.clip(box_size) {
            for col in img.col_lo..img.col_hi.clip(box_size) {
                grid[row][col] += 1;
            }
        }
    }

    // (a) Surjectivity on the safe region.
    for row in 0..safe {
        for col in 0..safe {
            if grid[row][col] == 0 {
                failures.push(format!(
                    "cell ({row},{col}) in the safe region is uncovered"
                ));
            }
        }
    }

    // Hook-type transport: an outside cell and its image have equal types.
    for row in 0..safe {
        for col in 0..safe {
            let c = Cell::new(row, col);
            if lambda.contains(c) {
                continue;
            }
            let stats = hook_stats(lambda, c, HookSide::External)?;
            let image = theta_cell(lambda, c)?;
            if (stats.arm, stats.leg) != (image.col, image.row) {
                failures.push(format!(
                    "hook type of {c:?} is ({},{}) but its image {image:?} has type ({},{})",
                    stats.arm, stats.leg, image.col, image.row
                ));
            }
        }
    }

    // (b) Tile-by-tile overlap accounting. Tile (i,j) pairs with the plates
    // (K+2-j, K+1-i) and (K+1-j, K+2-i); the intersection of their images is
    // a rectangle of the tile's size whose cells, rotated half a turn, are
    // the tile's cells with matching hook types.
    let mut overlaps: Vec<OverlapCell> = Vec::new();
    let mut expected: BTreeMap<Cell, u32> = BTreeMap::new();
    for i in 1..=k {
        for j in 1..=k + 1 - i {
            let p1 = PlateCoord::new(k + 2 - j, k + 1 - i);
            let p2 = PlateCoord::new(k + 1 - j, k + 2 - i);
            let r1 = theta_image(lambda, p1)?;
            let r2 = theta_image(lambda, p2)?;
            let row_lo = r1.row_lo.max(r2.row_lo);
            let col_lo = r1.col_lo.max(r2.col_lo);
            let (row_hi, col_hi) = match (r1.row_hi.min(r2.row_hi), r1.col_hi.min(r2.col_hi)) {
                (Extent::Finite(r), Extent::Finite(c)) => (r, c),
                _ => {
                    failures.push(format!("overlap of {p1:?} and {p2:?} is not finite"));
                    continue;
                }
            };
            if row_hi.saturating_sub(row_lo) != sub.y()[j - 1]
                || col_hi.saturating_sub(col_lo) != sub.x()[i - 1]
            {
                failures.push(format!(
                    "overlap of {p1:?} and {p2:?} is not a copy of tile ({i},{j})"
                ));
            }
            let rot_row = sub.y_prefix(k + 1 - i);
            let rot_col = sub.x_prefix(k + 1 - j);
            for row in row_lo..row_hi {
                for col in col_lo..col_hi {
                    let cell = Cell::new(row, col);
                    let matched = Cell::new(rot_row - 1 - row, rot_col - 1 - col);
                    *expected.entry(cell).or_insert(0) += 1;
                    let stats = hook_stats(lambda, matched, HookSide::Internal)?;
                    if (stats.arm, stats.leg) != (col, row) {
                        failures.push(format!(
                            "overlap cell {cell:?} has type ({col},{row}) but its matched hook {matched:?} has type ({},{})",
                            stats.arm, stats.leg
                        ));
                    }
                    overlaps.push(OverlapCell {
                        cell,
                        matched,
                        arm: col,
                        leg: row,
                    });
                }
            }
        }
    }
    // The matched cells must exhaust the diagram, once each.
    let matched_cells: BTreeMap<Cell, u32> = overlaps.iter().fold(BTreeMap::new(), |mut m, o| {
        *m.entry(o.matched).or_insert(0) += 1;
        m
    });
    for c in lambda.cells() {
        if matched_cells.get(&c).copied().unwrap_or(0) != 1 {
            failures.push(format!("diagram cell {c:?} is not matched exactly once"));
        }
    }
    if matched_cells.len() != lambda.size() {
        failures.push("overlap matching leaves the diagram".into());
    }
    // The excess coverage in the safe region is exactly the tile overlaps.
    for row in 0..safe {
        for col in 0..safe {
            let excess = grid[row][col].saturating_sub(1);
            let exp = expected.get(&Cell::new(row, col)).copied().unwrap_or(0);
            if excess != exp {
                failures.push(format!(
                    "cell ({row},{col}) is covered {} times but {} tile overlaps land there",
                    grid[row][col], exp
                ));
            }
        }
    }

    // (c) Only adjacent plates on one antidiagonal, or plates on the first
    // antidiagonal, may overlap.
    for (a, &p) in plates.iter().enumerate() {
        for &q in &plates[a + 1..] {
            let (w, h) = rect_intersection_dims(&theta_image(lambda, p)?, &theta_image(lambda, q)?);
            if w.is_positive() && h.is_positive() {
                let same_anti = p.i + p.j == q.i + q.j;
                let adjacent = same_anti && (p.i.abs_diff(q.i) == 1);
                let first_anti = p.i + p.j == k + 2 && q.i + q.j == k + 2;
                if !(adjacent || first_anti) {
                    failures.push(format!("plates {p:?} and {q:?} overlap unexpectedly"));
                }
            }
        }
    }

    failures.truncate(64);
    Ok(CoverageReport {
        lambda: lambda.clone(),
        box_size,
        safe_size: safe,
        pass: failures.is_empty(),
        multiplicity_rle: grid.iter().map(|row| rle_row(row)).collect(),
        overlaps,
        failures,
    })
}
