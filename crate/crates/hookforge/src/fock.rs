//! Maya-diagram model of the semi-infinite wedge.
//!
//! A basis state is a charge together with a partition; its occupied
//! half-integer positions are `shape_k - k + 1/2 + charge`. States are never
//! stored as infinite sets: every operator derives a finite window from the
//! perturbation region of the state it acts on.
//!
//! Sign bookkeeping follows the wedge: inserting or removing a position `p`
//! costs `(-1)^(number of occupied positions above p)`. The count is finite
//! and splits into the beads of the partition plus a consecutive tail.
//! Worked example: the charge-0 state of `(1)` occupies `1/2, -3/2, -5/2,
//! ...`; inserting `-1/2` passes the one occupied position `1/2`, so
//! `psi_{-1/2}` maps it to minus the charge-1 vacuum (whose positions are
//! exactly `1/2, -1/2, -3/2, ...`).

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::partition::{partitions_of, Partition};
use crate::series::{ContentMonomial, Exponent};
use crate::Error;

/// A half-integer stored as its doubled value; Maya positions are the odd
/// ones.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Half(pub i64);

impl Half {
    pub fn from_int(n: i64) -> Self {
        Half(2 * n)
    }

    /// The position `m + 1/2` for an integer `m`.
    pub fn above_int(m: i64) -> Self {
        Half(2 * m + 1)
    }

    pub fn is_position(self) -> bool {
        self.0 % 2 != 0
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }
}

impl fmt::Debug for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// A basis vector of the wedge space: a charge and a partition.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct MayaState {
    charge: i64,
    shape: Partition,
}

impl fmt::Debug for MayaState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[c={} {:?}]", self.charge, self.shape)
    }
}

impl MayaState {
    pub fn new(charge: i64, shape: Partition) -> Self {
        MayaState { charge, shape }
    }

    pub fn vacuum() -> Self {
        MayaState {
            charge: 0,
            shape: Partition::empty(),
        }
    }

    pub fn charge(&self) -> i64 {
        self.charge
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Occupied integer values `m` (position `m + 1/2`): the beads
    /// `shape_i - i + charge` for `i = 1..rows` followed by the consecutive
    /// tail below `charge - rows`.
    fn occupied_value(&self, m: i64) -> bool {
        let rows = self.shape.rows() as i64;
        let ms = m - self.charge;
        if ms < -rows {
            return true;
        }
        (0..self.shape.rows()).any(|i| self.shape.part(i) as i64 - (i as i64 + 1) == ms)
    }

    /// Number of occupied positions strictly above `m + 1/2`.
    fn occupied_above(&self, m: i64) -> usize {
        let rows = self.shape.rows() as i64;
        let ms = m - self.charge;
        let beads = (0..self.shape.rows())
            .filter(|&i| self.shape.part(i) as i64 - (i as i64 + 1) > ms)
            .count();
        // Tail beads occupy -(rows+1), -(rows+2), ...; those above ms are
        // the charge-offset tail parity contribution.
        let tail = if -ms - 1 > rows {
            (-ms - 1 - rows) as usize
        } else {
            0
        };
        beads + tail
    }

    pub fn occupied(&self, p: Half) -> bool {
        assert!(p.is_position(), "positions are half-integers");
        self.occupied_value((p.0 - 1) / 2)
    }

    /// All occupied values at least `lo`, descending.
    fn occupied_values_from(&self, lo: i64) -> Vec<i64> {
        let rows = self.shape.rows() as i64;
        let mut vals: Vec<i64> = (0..self.shape.rows())
            .map(|i| self.shape.part(i) as i64 - (i as i64 + 1) + self.charge)
            .collect();
        let mut t = self.charge - rows - 1;
        while t >= lo {
            vals.push(t);
            t -= 1;
        }
        vals.retain(|&v| v >= lo);
        vals
    }

    /// Rebuilds a state of the given charge from the occupied values above
    /// `floor`, all values at or below `floor` being occupied.
    fn decode(charge: i64, floor: i64, mut values: Vec<i64>) -> MayaState {
        values.sort_unstable_by(|a, b| b.cmp(a));
        let len = values.len() as i64;
        assert_eq!(
            floor,
            charge - len - 1,
            "materialised window is inconsistent with the charge"
        );
        let mut parts = Vec::new();
        for (idx, &v) in values.iter().enumerate() {
            let part = v + idx as i64 + 1 - charge;
            assert!(part >= 0, "values do not decode to a partition");
            if part > 0 {
                parts.push(part as usize);
            }
        }
        MayaState {
            charge,
            shape: Partition::new(parts).expect("decoded parts are weakly decreasing"),
        }
    }

    /// Inserts the value `m`; the caller checks it is free. Returns the new
    /// state (charge one higher) and the wedge sign.
    fn insert_value(&self, m: i64) -> (MayaState, i64) {
        let rows = self.shape.rows() as i64;
        let floor = m.min(self.charge - rows - 1) - 1;
        let mut values = self.occupied_values_from(floor + 1);
        debug_assert!(!values.contains(&m));
        let sign = if self.occupied_above(m) % 2 == 0 {
            1
        } else {
            -1
        };
        values.push(m);
        (MayaState::decode(self.charge + 1, floor, values), sign)
    }

    /// Removes the value `m`; the caller checks it is occupied. Returns the
    /// new state (charge one lower) and the wedge sign.
    fn remove_value(&self, m: i64) -> (MayaState, i64) {
        let rows = self.shape.rows() as i64;
        let floor = m.min(self.charge - rows - 1) - 1;
        let mut values = self.occupied_values_from(floor + 1);
        let pos = values
            .iter()
            .position(|&v| v == m)
            .expect("removed value is occupied");
        values.remove(pos);
        let sign = if self.occupied_above(m) % 2 == 0 {
            1
        } else {
            -1
        };
        (MayaState::decode(self.charge - 1, floor, values), sign)
    }
}

/// Energy eigenvalue of a basis state: the windowed sum of `k` over occupied
/// positive positions and `-k` over unoccupied negative ones. For charge 0
/// this is the size of the shape; for odd charge it is a genuine
/// half-integer.
pub fn energy(state: &MayaState) -> Half {
    let bound =
        state.shape.first_part() as i64 + state.shape.rows() as i64 + state.charge.abs() + 2;
    let mut doubled = 0i64;
    for m in -bound..bound {
        let occ = state.occupied_value(m);
        if m >= 0 && occ {
            doubled += 2 * m + 1;
        } else if m < 0 && !occ {
            doubled -= 2 * m + 1;
        }
    }
    Half(doubled)
}

/// A finite integer-coefficient polynomial in the content variables, used as
/// the coefficient field of [`FockVector`]. Untwisted operators only produce
/// integer multiples of the unit monomial.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct QPoly {
    terms: BTreeMap<ContentMonomial, i128>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly::default()
    }

    pub fn constant(c: i128) -> Self {
        let mut p = QPoly::zero();
        p.add(ContentMonomial::unit(), c);
        p
    }

    pub fn monomial(m: ContentMonomial, c: i128) -> Self {
        let mut p = QPoly::zero();
        p.add(m, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&mut self, m: ContentMonomial, c: i128) {
        if c == 0 {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add_poly(&mut self, other: &QPoly) {
        for (m, &c) in &other.terms {
            self.add(m.clone(), c);
        }
    }

    pub fn scale(&self, c: i128) -> QPoly {
        if c == 0 {
            return QPoly::zero();
        }
        QPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, &v)| (m.clone(), v * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &QPoly) -> QPoly {
        let mut out = QPoly::zero();
        for (a, &va) in &self.terms {
            for (b, &vb) in &other.terms {
                out.add(a.combine(b), va * vb);
            }
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ContentMonomial, i128)> + '_ {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if *c == 1 {
                write!(f, "{m}")?;
            } else {
                write!(f, "{c}*{m}")?;
            }
        }
        Ok(())
    }
}

/// A finite linear combination of basis states with [`QPoly`] coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FockVector {
    terms: BTreeMap<MayaState, QPoly>,
}

impl FockVector {
    pub fn zero() -> Self {
        FockVector::default()
    }

    pub fn basis(state: MayaState) -> Self {
        let mut v = FockVector::zero();
        v.add_state(state, QPoly::constant(1));
        v
    }

    pub fn add_state(&mut self, state: MayaState, coeff: QPoly) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(state) {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                o.get_mut().add_poly(&coeff);
                if o.get().is_zero() {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    pub fn add_vector(&mut self, other: &FockVector) {
        for (s, p) in &other.terms {
            self.add_state(s.clone(), p.clone());
        }
    }

    pub fn scale(&self, c: i128) -> FockVector {
        let mut out = FockVector::zero();
        for (s, p) in &self.terms {
            out.add_state(s.clone(), p.scale(c));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MayaState, &QPoly)> + '_ {
        self.terms.iter()
    }

    /// Coefficient of one basis state.
    pub fn coeff(&self, state: &MayaState) -> QPoly {
        self.terms.get(state).cloned().unwrap_or_default()
    }
}

/// Bilinear pairing with orthonormal basis states.
pub fn inner(a: &FockVector, b: &FockVector) -> QPoly {
    let mut out = QPoly::zero();
    for (s, p) in &a.terms {
        if let Some(q) = b.terms.get(s) {
            out.add_poly(&p.mul(q));
        }
    }
    out
}

/// Wedge insertion `psi_k`: prepends the position `k`, killing states where
/// it is occupied; raises the charge by one.
pub fn apply_psi(k: Half, v: &FockVector) -> FockVector {
    assert!(k.is_position());
    let m = (k.0 - 1) / 2;
    let mut out = FockVector::zero();
    for (state, poly) in &v.terms {
        if state.occupied_value(m) {
            continue;
        }
        let (next, sign) = state.insert_value(m);
        out.add_state(next, poly.scale(sign as i128));
    }
    out
}

/// Adjoint of [`apply_psi`]: removes the position `k`, killing states where
/// it is free; lowers the charge by one.
pub fn apply_psi_star(k: Half, v: &FockVector) -> FockVector {
    assert!(k.is_position());
    let m = (k.0 - 1) / 2;
    let mut out = FockVector::zero();
    for (state, poly) in &v.terms {
        if !state.occupied_value(m) {
            continue;
        }
        let (next, sign) = state.remove_value(m);
        out.add_state(next, poly.scale(sign as i128));
    }
    out
}

/// Normally ordered bilinear `:psi_i psi*_j:`, which subtracts the vacuum
/// expectation: `psi_i psi*_j` for `j > 0` and `-psi*_j psi_i` for `j < 0`.
pub fn normal_ordered_pair(i: Half, j: Half, v: &FockVector) -> FockVector {
    if j.is_positive() {
        apply_psi(i, &apply_psi_star(j, v))
    } else {
        apply_psi_star(j, &apply_psi(i, v)).scale(-1)
    }
}

/// The charge operator `F_0 = sum :psi_k psi*_k:` applied through a window
/// wide enough for the perturbation region of every term; eigenvalue is the
/// charge.
pub fn apply_charge_op(v: &FockVector) -> FockVector {
    let mut out = FockVector::zero();
    for (state, poly) in &v.terms {
        let single = FockVector {
            terms: BTreeMap::from([(state.clone(), poly.clone())]),
        };
        let bound =
            state.shape.first_part() as i64 + state.shape.rows() as i64 + state.charge.abs() + 2;
        for m in -bound..bound {
            let k = Half::above_int(m);
            out.add_vector(&normal_ordered_pair(k, k, &single));
        }
    }
    out
}

/// Free boson `alpha_E`, acting by bead moves: every occupied position drops
/// by `E` when the target is free, with the wedge sign of the two fermion
/// operations. Positive energy removes border strips, negative energy adds
/// them.
pub fn alpha(e: i64, v: &FockVector) -> FockVector {
    assert!(e != 0, "alpha_0 is not defined");
    let mut out = FockVector::zero();
    for (state, poly) in &v.terms {
        for (next, sign, _) in bead_moves(state, e) {
            out.add_state(next, poly.scale(sign as i128));
        }
    }
    out
}

/// Same operator assembled from its definition as a sum of fermion
/// bilinears over an explicit window; used to cross-check [`alpha`].
pub fn alpha_bilinear(e: i64, v: &FockVector) -> FockVector {
    assert!(e != 0);
    let mut out = FockVector::zero();
    for (state, poly) in &v.terms {
        let single = FockVector {
            terms: BTreeMap::from([(state.clone(), poly.clone())]),
        };
        let bound = state.shape.first_part() as i64
            + state.shape.rows() as i64
            + state.charge.abs()
            + e.abs()
            + 2;
        for m in -bound..bound {
            let k = Half::above_int(m);
            let km = Half(k.0 - 2 * e);
            out.add_vector(&normal_ordered_pair(km, k, &single));
        }
    }
    out
}

/// The bead moves of `alpha_e` on one basis state: `(new state, sign,
/// content window of the moved strip)`. The window `[lo, hi]` lists the
/// contents of the cells added (`e < 0`) or removed (`e > 0`).
fn bead_moves(state: &MayaState, e: i64) -> Vec<(MayaState, i64, (i64, i64))> {
    let rows = state.shape.rows() as i64;
    let lo = state.charge - rows - e.abs() - 1;
    let mut out = Vec::new();
    for m in state.occupied_values_from(lo) {
        let target = m - e;
        if state.occupied_value(target) {
            continue;
        }
        let (mid, s1) = state.remove_value(m);
        let (next, s2) = mid.insert_value(target);
        // Strip contents in diagram coordinates, shifted back by the charge.
        let window = if e > 0 {
            (target + 1 - state.charge, m - state.charge)
        } else {
            (m + 1 - state.charge, target - state.charge)
        };
        out.push((next, s1 * s2, window));
    }
    out
}

/// q-twisted free boson: the same bead moves as [`alpha`], but each matrix
/// element carries the product of content variables over the moved strip and
/// a positive sign (the twisted normal ordering takes absolute values).
pub fn alpha_twisted(e: i64, v: &FockVector) -> FockVector {
    assert!(e != 0);
    let mut out = FockVector::zero();
    for (state, poly) in &v.terms {
        for (next, _, (lo, hi)) in bead_moves(state, e) {
            let m = ContentMonomial::interval(lo, hi);
            out.add_state(next, poly.mul(&QPoly::monomial(m, 1)));
        }
    }
    out
}

/// Removable border strips of the given size, found by direct diagram
/// surgery: all contained partitions whose complement is connected and free
/// of 2x2 squares, with the number of rows the strip touches.
pub fn border_strip_removals(lambda: &Partition, size: usize) -> Vec<(Partition, usize)> {
    let total = lambda.size();
    if size == 0 || size > total {
        return Vec::new();
    }
    let mut out = Vec::new();
    for mu in partitions_of(total - size) {
        let contained = (0..mu.rows()).all(|r| mu.part(r) <= lambda.part(r));
        if !contained {
            continue;
        }
        let cells: Vec<_> = lambda.cells().filter(|&c| !mu.contains(c)).collect();
        let no_square = cells.iter().all(|c| {
            !(cells.contains(&crate::partition::Cell::new(c.row + 1, c.col))
                && cells.contains(&crate::partition::Cell::new(c.row, c.col + 1))
                && cells.contains(&crate::partition::Cell::new(c.row + 1, c.col + 1)))
        });
        if !no_square {
            continue;
        }
        // Connectivity by flood fill over edge adjacency.
        let mut seen = vec![false; cells.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for (j, d) in cells.iter().enumerate() {
                if !seen[j] && cells[i].row.abs_diff(d.row) + cells[i].col.abs_diff(d.col) == 1 {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        if !seen.iter().all(|&s| s) {
            continue;
        }
        let height = cells
            .iter()
            .map(|c| c.row)
            .collect::<std::collections::BTreeSet<_>>();
        out.push((mu, height.len()));
    }
    out
}

/// One row of the matrix-element table: source, target, coefficient.
#[derive(Clone, Debug, Serialize)]
pub struct MatrixElement {
    pub source: Partition,
    pub target: Partition,
    pub monomial: String,
}

/// Matrix elements of `alpha^q_e` on all charge-0 states of size `d`,
/// ordered by source then target partition. Each pair carries exactly one
/// monomial.
pub fn matrix_element_table(d: usize, e: i64) -> Vec<MatrixElement> {
    let mut out = Vec::new();
    for lambda in partitions_of(d) {
        let image = alpha_twisted(e, &FockVector::basis(MayaState::new(0, lambda.clone())));
        for (state, poly) in image.terms() {
            assert_eq!(state.charge(), 0);
            for (m, c) in poly.terms() {
                assert_eq!(c, 1, "twisted matrix elements are multiplicity-free");
                out.push(MatrixElement {
                    source: lambda.clone(),
                    target: state.shape().clone(),
                    monomial: m.to_string(),
                });
            }
        }
    }
    out
}

/// The matrix-element table as TSV `lambda<TAB>mu<TAB>monomial`, one line
/// per element, LF-terminated; suitable for diff-based equality audits of
/// the two directions.
pub fn matrix_element_tsv(d: usize, e: i64) -> String {
    let mut out = String::new();
    for row in matrix_element_table(d, e) {
        out.push_str(&format!(
            "{}\t{}\t{}\n",
            row.source, row.target, row.monomial
        ));
    }
    out
}

/// Report of the Fock-space restatement of the hook-to-strip identity.
#[derive(Clone, Debug, Serialize)]
pub struct FockReport {
    pub d: usize,
    pub ell: usize,
    pub pass: bool,
    pub sides_equal: bool,
    pub lhs_matches_internal_hooks: bool,
    pub rhs_matches_external_hooks: bool,
    pub lhs_terms: usize,
    pub rhs_terms: usize,
}

/// Sums the twisted matrix elements in both directions over all sources and
/// targets of the right sizes, checks their equality as polynomials, and
/// cross-checks each side against the hook enumerations: downward elements
/// are the content monomials of internal hooks in `S_{d,ell}`, upward ones
/// those of external hooks in `S'_{d-ell,ell}`.
pub fn verify_fock_identity(d: usize, ell: usize) -> Result<FockReport, Error> {
    if ell == 0 || ell > d {
        return Err(Error::Precondition(format!(
            "the twisted boson identity needs d >= ell >= 1, got d={d}, ell={ell}"
        )));
    }
    let e = ell as i64;
    let mut lhs = QPoly::zero();
    for lambda in partitions_of(d) {
        let image = alpha_twisted(e, &FockVector::basis(MayaState::new(0, lambda)));
        for (state, poly) in image.terms() {
            assert_eq!(state.shape().size(), d - ell);
            lhs.add_poly(poly);
        }
    }
    let mut rhs = QPoly::zero();
    for mu in partitions_of(d - ell) {
        let image = alpha_twisted(-e, &FockVector::basis(MayaState::new(0, mu)));
        for (state, poly) in image.terms() {
            assert_eq!(state.shape().size(), d);
            rhs.add_poly(poly);
        }
    }
    let mut internal = QPoly::zero();
    for hp in crate::hook_strip::enumerate_s(d, ell) {
        internal.add(
            ContentMonomial::interval(hp.stats.content_lo, hp.stats.content_hi),
            1,
        );
    }
    let mut external = QPoly::zero();
    for hp in crate::hook_strip::enumerate_s_prime(d - ell, ell) {
        external.add(
            ContentMonomial::interval(hp.stats.content_lo, hp.stats.content_hi),
            1,
        );
    }
    let sides_equal = lhs == rhs;
    let lhs_matches_internal_hooks = lhs == internal;
    let rhs_matches_external_hooks = rhs == external;
    Ok(FockReport {
        d,
        ell,
        pass: sides_equal && lhs_matches_internal_hooks && rhs_matches_external_hooks,
        sides_equal,
        lhs_matches_internal_hooks,
        rhs_matches_external_hooks,
        lhs_terms: lhs.num_terms(),
        rhs_terms: rhs.num_terms(),
    })
}
