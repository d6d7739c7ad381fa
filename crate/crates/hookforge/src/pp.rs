//! Brute-force enumerators for reverse and skew plane partitions, the
//! Hillman-Grassl decomposition into hook multiplicities, and box duality.

use std::collections::{BTreeMap, HashMap};

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::partition::{hook_stats, Cell, HookSide, Partition};
use crate::Error;

/// Whether a filling lives on the diagram (reverse plane partition, weakly
/// increasing along rows and columns) or on its complement (skew plane
/// partition, weakly decreasing toward the south-east with finite support).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FillSide {
    Rpp,
    Spp,
}

/// A filling with nonnegative entries; zero entries are omitted.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Filling {
    pub shape: Partition,
    pub side: FillSide,
    pub entries: BTreeMap<Cell, u32>,
    pub size: usize,
}

impl Filling {
    pub fn new(shape: Partition, side: FillSide, entries: BTreeMap<Cell, u32>) -> Self {
        let entries: BTreeMap<Cell, u32> = entries.into_iter().filter(|&(_, v)| v > 0).collect();
        let size = entries.values().map(|&v| v as usize).sum();
        Filling {
            shape,
            side,
            entries,
            size,
        }
    }

    pub fn entry(&self, c: Cell) -> u32 {
        self.entries.get(&c).copied().unwrap_or(0)
    }

    /// Exponent of the content variable `q_k`: the sum of entries on
    /// diagonal `k`.
    pub fn diagonal_sums(&self) -> BTreeMap<i64, u32> {
        let mut out = BTreeMap::new();
        for (c, &v) in &self.entries {
            *out.entry(c.content()).or_insert(0) += v;
        }
        out
    }
}

impl Serialize for Filling {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            shape: &'a Partition,
            entries: Entries<'a>,
        }
        struct Entries<'a>(&'a BTreeMap<Cell, u32>);
        impl Serialize for Entries<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
                for (c, v) in self.0 {
                    seq.serialize_element(&[c.row as u64, c.col as u64, *v as u64])?;
                }
                seq.end()
            }
        }
        Repr {
            shape: &self.shape,
            entries: Entries(&self.entries),
        }
        .serialize(serializer)
    }
}

/// Every reverse plane partition of the shape with size at most `max_size`,
/// in lexicographic order of the row-major entry vector.
pub fn rpp_enumerate(lambda: &Partition, max_size: usize) -> Vec<Filling> {
    let cells: Vec<Cell> = lambda.cells().collect();
    let mut out = Vec::new();
    let mut values = vec![0u32; cells.len()];

    fn rec(
        lambda: &Partition,
        cells: &[Cell],
        values: &mut Vec<u32>,
        idx: usize,
        sum: usize,
        max_size: usize,
        out: &mut Vec<Filling>,
    ) {
        if idx == cells.len() {
            let entries = cells
                .iter()
                .zip(values.iter())
                .map(|(&c, &v)| (c, v))
                .collect();
            out.push(Filling::new(lambda.clone(), FillSide::Rpp, entries));
            return;
        }
        let c = cells[idx];
        let mut lb = 0u32;
        if c.col > 0 {
            lb = lb.max(values[idx - 1]);
        }
        if c.row > 0 {
            let north = cells
                .iter()
                .position(|&d| d == Cell::new(c.row - 1, c.col))
                .expect("cell above is in the shape");
            lb = lb.max(values[north]);
        }
        if sum + lb as usize > max_size {
            return;
        }
        for v in lb..=(max_size - sum) as u32 {
            values[idx] = v;
            rec(
                lambda,
                cells,
                values,
                idx + 1,
                sum + v as usize,
                max_size,
                out,
            );
        }
        values[idx] = 0;
    }
    rec(lambda, &cells, &mut values, 0, 0, max_size, &mut out);
    out
}

/// Number of cells outside the shape that are weakly north-west of `(i, j)`;
/// a nonzero entry at `(i, j)` forces a nonzero entry at all of them.
fn forced_cells(lambda: &Partition, i: usize, j: usize) -> usize {
    (0..=i)
        .map(|r| (j + 1).saturating_sub(lambda.part(r)))
        .sum()
}

/// Every skew plane partition of the shape with size at most `max_size`, in
/// lexicographic order of the entry vector over the finite support window.
///
/// The window contains exactly the outside cells whose forced-cell count is
/// at most `max_size`, so no filling is silently missed.
pub fn spp_enumerate(lambda: &Partition, max_size: usize) -> Vec<Filling> {
    let mut window: Vec<Cell> = Vec::new();
    let mut row = 0;
    loop {
        let start = lambda.part(row);
        let mut any = false;
        for col in start.. {
            if forced_cells(lambda, row, col) > max_size {
                break;
            }
            window.push(Cell::new(row, col));
            any = true;
        }
        if !any && row >= lambda.rows() {
            break;
        }
        row += 1;
    }

    let mut out = Vec::new();
    let mut values = vec![0u32; window.len()];

    fn rec(
        lambda: &Partition,
        window: &[Cell],
        values: &mut Vec<u32>,
        idx: usize,
        sum: usize,
        max_size: usize,
        out: &mut Vec<Filling>,
    ) {
        if idx == window.len() {
            let entries = window
                .iter()
                .zip(values.iter())
                .map(|(&c, &v)| (c, v))
                .collect();
            out.push(Filling::new(lambda.clone(), FillSide::Spp, entries));
            return;
        }
        let c = window[idx];
        let mut ub = (max_size - sum) as u32;
        if c.col > 0 && !lambda.contains(Cell::new(c.row, c.col - 1)) {
            match window[..idx]
                .iter()
                .position(|&d| d == Cell::new(c.row, c.col - 1))
            {
                Some(w) => ub = ub.min(values[w]),
                None => ub = 0, // west neighbour outside the window is zero
            }
        }
        if c.row > 0 && !lambda.contains(Cell::new(c.row - 1, c.col)) {
            match window[..idx]
                .iter()
                .position(|&d| d == Cell::new(c.row - 1, c.col))
            {
                Some(n) => ub = ub.min(values[n]),
                None => ub = 0,
            }
        }
        for v in 0..=ub {
            values[idx] = v;
            rec(
                lambda,
                window,
                values,
                idx + 1,
                sum + v as usize,
                max_size,
                out,
            );
        }
        values[idx] = 0;
    }
    rec(lambda, &window, &mut values, 0, 0, max_size, &mut out);
    out
}

/// Hook multiplicities on the cells of a shape.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct HookMultiplicity {
    pub shape: Partition,
    pub mult: BTreeMap<Cell, u32>,
}

impl HookMultiplicity {
    /// Total weight `sum mult(c) * hook_len(c)`.
    pub fn weight(&self) -> usize {
        self.mult
            .iter()
            .map(|(&c, &m)| {
                m as usize
                    * hook_stats(&self.shape, c, HookSide::Internal)
                        .expect("multiplicity cell lies in the shape")
                        .hook_len
            })
            .sum()
    }
}

/// Hillman-Grassl decomposition of a reverse plane partition into hook
/// multiplicities.
///
/// Each extracted path runs from the bottom of the leftmost nonzero column
/// north-east to the end of a row, moving north exactly when the entry above
/// is equal; its cells carry each content of the recorded hook's window once,
/// which is what preserves the per-diagonal weights.
pub fn hg_decompose(f: &Filling) -> Result<HookMultiplicity, Error> {
    if f.side != FillSide::Rpp {
        return Err(Error::Precondition(
            "hillman-grassl decomposition expects a reverse plane partition".into(),
        ));
    }
    let shape = f.shape.clone();
    let mut grid: Vec<Vec<u32>> = shape
        .parts()
        .iter()
        .enumerate()
        .map(|(r, &len)| (0..len).map(|c| f.entry(Cell::new(r, c))).collect())
        .collect();
    let mut mult: BTreeMap<Cell, u32> = BTreeMap::new();
    // Leftmost nonzero column; its bottom cell is its maximum.
    let leftmost_nonzero = |grid: &Vec<Vec<u32>>| {
        (0..shape.first_part()).find(|&c| {
            let len = shape.conjugate_part(c);
            len > 0 && grid[len - 1][c] > 0
        })
    };
    while let Some(c0) = leftmost_nonzero(&grid) {
        let mut r = shape.conjugate_part(c0) - 1;
        let mut c = c0;
        let mut path = vec![Cell::new(r, c)];
        loop {
            if r > 0 && grid[r - 1][c] == grid[r][c] {
                r -= 1;
            } else if c + 1 < shape.part(r) {
                c += 1;
            } else {
                break;
            }
            path.push(Cell::new(r, c));
        }
        for cell in &path {
            grid[cell.row][cell.col] -= 1;
        }
        *mult.entry(Cell::new(r, c0)).or_insert(0) += 1;
    }
    Ok(HookMultiplicity { shape, mult })
}

/// Inverse of [`hg_decompose`]: inserts the recorded hooks east column
/// first, top row first within a column.
pub fn hg_compose(m: &HookMultiplicity) -> Filling {
    let shape = &m.shape;
    let mut grid: Vec<Vec<u32>> = shape.parts().iter().map(|&len| vec![0; len]).collect();
    let mut order: Vec<Cell> = m.mult.keys().copied().collect();
    order.sort_by(|a, b| b.col.cmp(&a.col).then(a.row.cmp(&b.row)));
    for anchor in order {
        for _ in 0..m.mult[&anchor] {
            let mut r = anchor.row;
            let mut c = shape.part(anchor.row) - 1;
            let mut path = vec![Cell::new(r, c)];
            loop {
                if r + 1 < shape.conjugate_part(c) && grid[r + 1][c] == grid[r][c] {
                    r += 1;
                } else if c > anchor.col {
                    c -= 1;
                } else {
                    break;
                }
                path.push(Cell::new(r, c));
            }
            assert_eq!(
                (r, c),
                (shape.conjugate_part(anchor.col) - 1, anchor.col),
                "insertion path must end at the bottom of the anchor column"
            );
            for cell in &path {
                grid[cell.row][cell.col] += 1;
            }
        }
    }
    let entries = grid
        .iter()
        .enumerate()
        .flat_map(|(r, row)| {
            row.iter()
                .enumerate()
                .map(move |(c, &v)| (Cell::new(r, c), v))
        })
        .collect();
    Filling::new(shape.clone(), FillSide::Rpp, entries)
}

/// The statistics `(q, t)` of a reverse plane partition: `q` is its size and
/// `t` weights each hook of its decomposition by `leg - arm - 1`, the
/// cocontent gap between the hook's two ends minus one.
pub fn refined_weight(f: &Filling) -> Result<(i64, i64), Error> {
    let m = hg_decompose(f)?;
    let mut q = 0i64;
    let mut t = 0i64;
    for (&c, &k) in &m.mult {
        let h = hook_stats(&f.shape, c, HookSide::Internal)?;
        q += k as i64 * h.hook_len as i64;
        t += k as i64 * (h.leg as i64 - h.arm as i64 - 1);
    }
    debug_assert_eq!(q as usize, f.size);
    Ok((q, t))
}

/// The 180-degree-rotated complement of the shape in the `n x n` box. Skew
/// plane partitions of the shape supported in the box correspond one to one
/// to reverse plane partitions of the dual.
pub fn dualize(lambda: &Partition, n: usize) -> Result<Partition, Error> {
    if lambda.first_part() > n || lambda.rows() > n {
        return Err(Error::BoxTooSmallForDual { n });
    }
    let parts: Vec<usize> = (0..n)
        .map(|i| n - lambda.part(n - 1 - i))
        .filter(|&p| p > 0)
        .collect();
    Partition::new(parts)
}

/// Plane-partition counts by size, `0..=max`, via a row-by-row recursion:
/// a plane partition is a sequence of ordinary partitions, each dominated
/// entrywise by its predecessor. Independent of [`spp_enumerate`].
pub fn plane_partition_counts(max: usize) -> Vec<u64> {
    fn dominated(bound: &[usize], size: usize) -> Vec<Vec<usize>> {
        // Partitions of `size` fitting entrywise under `bound`.
        crate::partition::partitions_of(size)
            .into_iter()
            .map(Vec::from)
            .filter(|p| p.len() <= bound.len() && p.iter().zip(bound).all(|(a, b)| a <= b))
            .collect()
    }
    // Number of row sequences below `bound` entrywise with total size
    // exactly `size`.
    fn count(bound: &[usize], size: usize, memo: &mut HashMap<(Vec<usize>, usize), u64>) -> u64 {
        if size == 0 {
            return 1;
        }
        let key = (bound.to_vec(), size);
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let mut total = 0;
        for first in 1..=size {
            for row in dominated(bound, first) {
                total += count(&row, size - first, memo);
            }
        }
        memo.insert(key, total);
        total
    }
    let mut memo = HashMap::new();
    (0..=max)
        .map(|n| count(&vec![n; n], n, &mut memo))
        .collect()
}
