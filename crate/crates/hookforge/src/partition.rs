//! Partitions, cells, hooks, and the distinct-part band subdivision.
//!
//! Matrix (English) orientation throughout: the row index grows southward and
//! the column index eastward, so cell `(i, j)` belongs to the diagram exactly
//! when `j < parts[i]`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::Error;

/// An integer partition: weakly decreasing positive parts.
///
/// Parts are stored dense, one entry per row. Serialises as a JSON array of
/// integers; the textual form is comma-separated parts with the empty string
/// denoting the empty partition.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, rejecting parts that are zero or increase.
    pub fn new(parts: Vec<usize>) -> Result<Self, Error> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(
                "parts must be weakly decreasing".into(),
            ));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The part at `row`, with rows beyond the last part reading as 0.
    pub fn part(&self, row: usize) -> usize {
        self.parts.get(row).copied().unwrap_or(0)
    }

    /// Number of (positive) parts.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// The largest part, 0 for the empty partition.
    pub fn first_part(&self) -> usize {
        self.part(0)
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The size `|lambda|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Membership test for a cell: `col < parts[row]`.
    pub fn contains(&self, cell: Cell) -> bool {
        cell.col < self.part(cell.row)
    }

    /// The conjugate partition: `lambda'_k = #{rows with part >= k}`.
    pub fn conjugate(&self) -> Partition {
        let mut parts = Vec::with_capacity(self.first_part());
        for col in 0..self.first_part() {
            parts.push(self.conjugate_part(col));
        }
        Partition { parts }
    }

    /// The conjugate part `lambda'_{col+1}`: the number of rows whose part
    /// exceeds `col`, i.e. the length of column `col`.
    pub fn conjugate_part(&self, col: usize) -> usize {
        self.parts.iter().take_while(|&&p| p > col).count()
    }

    /// All cells of the diagram in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(row, &len)| (0..len).map(move |col| Cell { row, col }))
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self, Error> {
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
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

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses the comma-separated textual form; the empty string is the
    /// empty partition.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part {tok:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

/// A lattice cell `(row, col)`, both indices starting at 0.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// Content `col - row`.
    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }

    /// Cocontent `col + row`.
    pub fn cocontent(&self) -> i64 {
        self.col as i64 + self.row as i64
    }
}

impl fmt::Debug for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Whether a hook is anchored inside the diagram (pointing east/south) or
/// outside it (pointing west/north).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HookSide {
    Internal,
    External,
}

impl fmt::Debug for HookSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HookSide::Internal => write!(f, "internal"),
            HookSide::External => write!(f, "external"),
        }
    }
}

/// Arm, leg, hand, foot, and content window of one hook.
///
/// Invariants: `hook_len = arm + leg + 1` and the hook's cells carry exactly
/// the contents `content_lo..=content_hi`, an interval of length `hook_len`.
/// For internal hooks the hand (east end of the arm) carries `content_hi` and
/// the foot (south end of the leg) `content_lo`; for external hooks the hand
/// (west end) carries `content_lo` and the foot (north end) `content_hi`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct HookStats {
    pub side: HookSide,
    pub arm: usize,
    pub leg: usize,
    pub hook_len: usize,
    pub hand: Cell,
    pub foot: Cell,
    pub content_lo: i64,
    pub content_hi: i64,
}

/// Computes the hook data of `cell` with respect to `lambda`.
///
/// `Internal` requires the cell to lie in the diagram, `External` requires it
/// to lie outside; a mismatch is an error. External hooks exist at every cell
/// outside the diagram and are always finite.
pub fn hook_stats(lambda: &Partition, cell: Cell, side: HookSide) -> Result<HookStats, Error> {
    let inside = lambda.contains(cell);
    match side {
        HookSide::Internal => {
            if !inside {
                return Err(Error::CellOutside {
                    row: cell.row,
                    col: cell.col,
                    context: "an internal hook",
                });
            }
            let arm = lambda.part(cell.row) - 1 - cell.col;
            let leg = lambda.conjugate_part(cell.col) - 1 - cell.row;
            let hand = Cell::new(cell.row, cell.col + arm);
            let foot = Cell::new(cell.row + leg, cell.col);
            Ok(HookStats {
                side,
                arm,
                leg,
                hook_len: arm + leg + 1,
                hand,
                foot,
                content_lo: foot.content(),
                content_hi: hand.content(),
            })
        }
        HookSide::External => {
            if inside {
                return Err(Error::CellInside {
                    row: cell.row,
                    col: cell.col,
                    context: "an external hook",
                });
            }
            let arm = cell.col - lambda.part(cell.row);
            let leg = cell.row - lambda.conjugate_part(cell.col);
            let hand = Cell::new(cell.row, cell.col - arm);
            let foot = Cell::new(cell.row - leg, cell.col);
            Ok(HookStats {
                side,
                arm,
                leg,
                hook_len: arm + leg + 1,
                hand,
                foot,
                content_lo: hand.content(),
                content_hi: foot.content(),
            })
        }
    }
}

/// The cells of the hook itself, one per content in the window.
pub fn hook_cells(lambda: &Partition, cell: Cell, side: HookSide) -> Result<Vec<Cell>, Error> {
    let stats = hook_stats(lambda, cell, side)?;
    let mut cells = Vec::with_capacity(stats.hook_len);
    match side {
        HookSide::Internal => {
            for col in cell.col..=stats.hand.col {
                cells.push(Cell::new(cell.row, col));
            }
            for row in cell.row + 1..=stats.foot.row {
                cells.push(Cell::new(row, cell.col));
            }
        }
        HookSide::External => {
            for col in stats.hand.col..=cell.col {
                cells.push(Cell::new(cell.row, col));
            }
            for row in stats.foot.row..cell.row {
                cells.push(Cell::new(row, cell.col));
            }
        }
    }
    debug_assert_eq!(cells.len(), stats.hook_len);
    Ok(cells)
}

/// The band structure of a nonempty partition: `x` lists the column-band
/// widths west to east (consecutive differences of the distinct parts in
/// increasing order), `y` the row-band heights north to south (multiplicities
/// of the distinct parts in decreasing part order).
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Subdivision {
    x: Vec<usize>,
    y: Vec<usize>,
}

impl Subdivision {
    /// Number of distinct parts.
    pub fn k(&self) -> usize {
        self.x.len()
    }

    pub fn x(&self) -> &[usize] {
        &self.x
    }

    pub fn y(&self) -> &[usize] {
        &self.y
    }

    /// `x_1 + ... + x_n` (1-based, `n = 0` gives 0).
    pub fn x_prefix(&self, n: usize) -> usize {
        self.x[..n].iter().sum()
    }

    /// `y_1 + ... + y_n`.
    pub fn y_prefix(&self, n: usize) -> usize {
        self.y[..n].iter().sum()
    }

    /// Band `(i, j)` is a tile (inside the diagram) iff `i + j <= K + 1`.
    pub fn is_tile(&self, i: usize, j: usize) -> bool {
        i + j <= self.k() + 1
    }

    /// Band `(i, j)` is a tectonic plate (outside the diagram) iff
    /// `i + j >= K + 2`.
    pub fn is_plate(&self, i: usize, j: usize) -> bool {
        i + j >= self.k() + 2
    }
}

/// Computes the band subdivision of a nonempty partition.
pub fn subdivision(lambda: &Partition) -> Result<Subdivision, Error> {
    if lambda.is_empty() {
        return Err(Error::EmptySubdivision);
    }
    // Distinct parts in increasing order with their multiplicities.
    let mut distinct: Vec<(usize, usize)> = Vec::new();
    for &p in lambda.parts().iter().rev() {
        match distinct.last_mut() {
            Some((q, m)) if *q == p => *m += 1,
            _ => distinct.push((p, 1)),
        }
    }
    let mut x = Vec::with_capacity(distinct.len());
    let mut prev = 0;
    for &(p, _) in &distinct {
        x.push(p - prev);
        prev = p;
    }
    let y = distinct.iter().rev().map(|&(_, m)| m).collect::<Vec<_>>();
    let sub = Subdivision { x, y };
    debug_assert_eq!(sub.x_prefix(sub.k()), lambda.first_part());
    debug_assert_eq!(sub.y_prefix(sub.k()), lambda.rows());
    Ok(sub)
}

/// Returns the first violated superincreasing inequality of the band widths
/// or heights, or `None` when the partition is thin. The empty partition is
/// thin by convention.
pub fn thinness_violation(lambda: &Partition) -> Option<Error> {
    let Ok(sub) = subdivision(lambda) else {
        return None;
    };
    for (axis, seq) in [('x', sub.x()), ('y', sub.y())] {
        let mut prefix = 0;
        for n in 1..sub.k() {
            prefix += seq[n - 1];
            if prefix > seq[n] {
                return Some(Error::NotThin {
                    axis,
                    n,
                    m: n + 1,
                    lhs: prefix,
                    rhs: seq[n],
                });
            }
        }
    }
    None
}

/// Thinness: `x_1 + ... + x_n <= x_{n+1}` and likewise for `y`, for all
/// `n = 1..K-1`.
pub fn is_thin(lambda: &Partition) -> bool {
    thinness_violation(lambda).is_none()
}

/// All partitions of `d` in reverse-lexicographic order of parts.
pub fn partitions_of(d: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    fn gen(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for first in (1..=remaining.min(max_part)).rev() {
            prefix.push(first);
            gen(remaining - first, first, prefix, out);
            prefix.pop();
        }
    }
    gen(d, d, &mut prefix, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn contains_matches_parts() {
        let lam = p(&[3, 2, 2, 1]);
        assert!(lam.contains(Cell::new(0, 2)));
        assert!(!Partition::empty().contains(Cell::new(0, 0)));
        assert!(!Partition::empty().contains(Cell::new(7, 3)));
        let lam = p(&[8, 4, 3, 2, 2]);
        assert!(!lam.contains(Cell::new(1, 4)));
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[3, 2, 2, 1]).conjugate(), p(&[4, 3, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[5]).conjugate(), p(&[1, 1, 1, 1, 1]));
    }

    #[test]
    fn conjugate_is_involutive() {
        for d in 0..=9 {
            for lam in partitions_of(d) {
                assert_eq!(lam.conjugate().conjugate(), lam);
            }
        }
    }

    #[test]
    fn internal_hook_example() {
        let lam = p(&[8, 4, 3, 2, 2]);
        let h = hook_stats(&lam, Cell::new(1, 1), HookSide::Internal).unwrap();
        assert_eq!((h.arm, h.leg, h.hook_len), (2, 3, 6));
        assert_eq!(h.hand, Cell::new(1, 3));
        assert_eq!(h.foot, Cell::new(4, 1));
        assert_eq!((h.content_lo, h.content_hi), (-3, 2));
    }

    #[test]
    fn external_hook_of_empty() {
        for i in 0..5 {
            for j in 0..5 {
                let h =
                    hook_stats(&Partition::empty(), Cell::new(i, j), HookSide::External).unwrap();
                assert_eq!((h.arm, h.leg, h.hook_len), (j, i, i + j + 1));
            }
        }
    }

    #[test]
    fn external_hook_just_east_of_single_box() {
        let h = hook_stats(&p(&[1]), Cell::new(0, 1), HookSide::External).unwrap();
        assert_eq!((h.arm, h.leg, h.hook_len), (0, 0, 1));
        assert_eq!(h.hand, Cell::new(0, 1));
        assert_eq!(h.foot, Cell::new(0, 1));
        assert_eq!((h.content_lo, h.content_hi), (1, 1));
    }

    #[test]
    fn side_mismatch_is_an_error() {
        let lam = p(&[2, 1]);
        assert!(hook_stats(&lam, Cell::new(0, 0), HookSide::External).is_err());
        assert!(hook_stats(&lam, Cell::new(5, 5), HookSide::Internal).is_err());
    }

    // Brute-force cell-set oracle for internal hooks.
    fn internal_hook_cells_oracle(lam: &Partition, c: Cell) -> Vec<Cell> {
        lam.cells()
            .filter(|&d| (d.row == c.row && d.col >= c.col) || (d.col == c.col && d.row >= c.row))
            .collect()
    }

    #[test]
    fn internal_hooks_match_cell_set_oracle() {
        for d in 0..=12 {
            for lam in partitions_of(d) {
                for c in lam.cells() {
                    let stats = hook_stats(&lam, c, HookSide::Internal).unwrap();
                    let oracle = internal_hook_cells_oracle(&lam, c);
                    assert_eq!(stats.hook_len, oracle.len(), "lambda={lam:?} cell={c:?}");
                    let via_cells = hook_cells(&lam, c, HookSide::Internal).unwrap();
                    let mut a: Vec<_> = via_cells.iter().map(Cell::content).collect();
                    let mut b: Vec<_> = oracle.iter().map(Cell::content).collect();
                    a.sort_unstable();
                    b.sort_unstable();
                    assert_eq!(a, b);
                    assert_eq!(a, (stats.content_lo..=stats.content_hi).collect::<Vec<_>>());
                }
            }
        }
    }

    #[test]
    fn external_hooks_match_cell_set_oracle() {
        for d in 0..=12 {
            for lam in partitions_of(d) {
                for row in 0..lam.rows() + 13 {
                    for col in 0..lam.first_part() + 13 {
                        let c = Cell::new(row, col);
                        if lam.contains(c) {
                            continue;
                        }
                        let stats = hook_stats(&lam, c, HookSide::External).unwrap();
                        if stats.hook_len > 12 {
                            continue;
                        }
                        // Explicit external cell set: outside cells west in the
                        // row and north in the column.
                        let mut oracle: Vec<Cell> = Vec::new();
                        for j in 0..=c.col {
                            let d = Cell::new(c.row, j);
                            if !lam.contains(d) {
                                oracle.push(d);
                            }
                        }
                        for i in 0..c.row {
                            let d = Cell::new(i, c.col);
                            if !lam.contains(d) {
                                oracle.push(d);
                            }
                        }
                        let mut a: Vec<_> = oracle.iter().map(Cell::content).collect();
                        a.sort_unstable();
                        assert_eq!(
                            a,
                            (stats.content_lo..=stats.content_hi).collect::<Vec<_>>(),
                            "lambda={lam:?} cell={c:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn arm_leg_swap_under_conjugation() {
        for d in 0..=10 {
            for lam in partitions_of(d) {
                let conj = lam.conjugate();
                for c in lam.cells() {
                    let h = hook_stats(&lam, c, HookSide::Internal).unwrap();
                    let ht =
                        hook_stats(&conj, Cell::new(c.col, c.row), HookSide::Internal).unwrap();
                    assert_eq!(h.arm, ht.leg);
                    assert_eq!(h.leg, ht.arm);
                }
            }
        }
    }

    #[test]
    fn partitions_of_counts_and_order() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(4).len(), 5);
        assert_eq!(partitions_of(10).len(), 42);
        let four: Vec<Vec<usize>> = partitions_of(4)
            .into_iter()
            .map(|q| q.parts().to_vec())
            .collect();
        assert_eq!(
            four,
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
    }

    #[test]
    fn subdivision_examples() {
        let sub = subdivision(&p(&[24, 11, 5, 5, 5, 1, 1, 1, 1, 1, 1])).unwrap();
        assert_eq!(sub.k(), 4);
        assert_eq!(sub.x(), &[1, 4, 6, 13]);
        assert_eq!(sub.y(), &[1, 1, 3, 6]);

        let sub = subdivision(&p(&[1])).unwrap();
        assert_eq!(
            (sub.k(), sub.x(), sub.y()),
            (1, &[1usize][..], &[1usize][..])
        );

        let sub = subdivision(&p(&[12, 10, 8, 8, 8, 8, 8, 8, 1, 1, 1])).unwrap();
        assert_eq!(sub.x(), &[1, 7, 2, 2]);
        assert_eq!(sub.y(), &[1, 1, 6, 3]);

        assert!(subdivision(&Partition::empty()).is_err());
    }

    #[test]
    fn subdivision_sums() {
        for d in 1..=15 {
            for lam in partitions_of(d) {
                let sub = subdivision(&lam).unwrap();
                assert_eq!(sub.x_prefix(sub.k()), lam.first_part());
                assert_eq!(sub.y_prefix(sub.k()), lam.rows());
                assert_eq!(sub.k() * (sub.k() + 1) / 2, {
                    let k = sub.k();
                    (1..=k + 1)
                        .flat_map(|i| (1..=k + 1).map(move |j| (i, j)))
                        .filter(|&(i, j)| sub.is_tile(i, j))
                        .count()
                });
            }
        }
    }

    #[test]
    fn thinness_examples() {
        assert!(is_thin(&p(&[24, 11, 5, 5, 5, 1, 1, 1, 1, 1, 1])));
        assert!(!is_thin(&p(&[12, 10, 8, 8, 8, 8, 8, 8, 1, 1, 1])));
        assert!(is_thin(&p(&[1])));
        assert!(is_thin(&Partition::empty()));
        assert!(is_thin(&p(&[2, 1])));
        let err = thinness_violation(&p(&[12, 10, 8, 8, 8, 8, 8, 8, 1, 1, 1])).unwrap();
        match err {
            Error::NotThin { lhs, rhs, .. } => assert!(lhs > rhs),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["", "1", "24,11,5,5,5,1,1,1,1,1,1", "8,4,3,2,2"] {
            let lam: Partition = s.parse().unwrap();
            assert_eq!(lam.to_string(), s);
        }
        assert!("3,5".parse::<Partition>().is_err());
        assert!("0".parse::<Partition>().is_err());
        assert!("a,b".parse::<Partition>().is_err());
    }
}
