//! Truncated sparse power series and the product-identity checkers.
//!
//! Series are truncated by total degree. Every infinite product in the
//! checkers becomes finite because a hook of length `h` contributes a factor
//! `1 + (terms of degree h and higher)`: factors with `h > cap` are the
//! identity at the truncation and are skipped.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::Hash;

use serde::Serialize;

use crate::hook_strip::{enumerate_s, enumerate_s_prime};
use crate::hooks::{external_hooks_up_to, internal_hooks};
use crate::partition::{hook_stats, partitions_of, Cell, HookSide, Partition};
use crate::pp::{refined_weight, rpp_enumerate, spp_enumerate};
use crate::Error;

/// Exponent key of a truncated series: a commutative monomial with a total
/// degree used for truncation.
pub trait Exponent: Clone + Eq + Ord + Hash + fmt::Display {
    fn unit() -> Self;
    fn degree(&self) -> usize;
    fn combine(&self, other: &Self) -> Self;
}

/// A monomial in the content variables `q_k`, `k` any integer. Keys are kept
/// as sorted `(index, exponent)` pairs with no zero exponents, so equal
/// monomials hash equally.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ContentMonomial {
    exps: Vec<(i32, u32)>,
}

impl ContentMonomial {
    pub fn var(k: i64) -> Self {
        ContentMonomial {
            exps: vec![(k as i32, 1)],
        }
    }

    /// The interval monomial `q_lo * q_{lo+1} * ... * q_hi`.
    pub fn interval(lo: i64, hi: i64) -> Self {
        assert!(lo <= hi, "empty content interval");
        ContentMonomial {
            exps: (lo..=hi).map(|k| (k as i32, 1)).collect(),
        }
    }

    /// Builds a monomial from exponents keyed by variable index.
    pub fn from_exponents<I: IntoIterator<Item = (i64, u32)>>(exps: I) -> Self {
        let mut map: BTreeMap<i32, u32> = BTreeMap::new();
        for (k, e) in exps {
            if e > 0 {
                *map.entry(k as i32).or_insert(0) += e;
            }
        }
        ContentMonomial {
            exps: map.into_iter().collect(),
        }
    }

    pub fn exponents(&self) -> impl Iterator<Item = (i64, u32)> + '_ {
        self.exps.iter().map(|&(k, e)| (k as i64, e))
    }

    /// Mirrors every variable index, `q_k -> q_{-k}`.
    pub fn mirror(&self) -> Self {
        let mut exps: Vec<(i32, u32)> = self.exps.iter().map(|&(k, e)| (-k, e)).collect();
        exps.reverse();
        ContentMonomial { exps }
    }
}

impl Exponent for ContentMonomial {
    fn unit() -> Self {
        ContentMonomial { exps: Vec::new() }
    }

    fn degree(&self) -> usize {
        self.exps.iter().map(|&(_, e)| e as usize).sum()
    }

    fn combine(&self, other: &Self) -> Self {
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut a, mut b) = (self.exps.iter().peekable(), other.exps.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(ka, ea)), Some(&&(kb, eb))) => {
                    if ka < kb {
                        exps.push((ka, ea));
                        a.next();
                    } else if kb < ka {
                        exps.push((kb, eb));
                        b.next();
                    } else {
                        exps.push((ka, ea + eb));
                        a.next();
                        b.next();
                    }
                }
                (Some(&&x), None) => {
                    exps.push(x);
                    a.next();
                }
                (None, Some(&&x)) => {
                    exps.push(x);
                    b.next();
                }
                (None, None) => break,
            }
        }
        ContentMonomial { exps }
    }
}

impl fmt::Display for ContentMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        for (i, &(k, e)) in self.exps.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "q[{k}]")?;
            } else {
                write!(f, "q[{k}]^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ContentMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A monomial `x^a y^b`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BivarExp {
    pub x: u32,
    pub y: u32,
}

impl Exponent for BivarExp {
    fn unit() -> Self {
        BivarExp { x: 0, y: 0 }
    }

    fn degree(&self) -> usize {
        (self.x + self.y) as usize
    }

    fn combine(&self, other: &Self) -> Self {
        BivarExp {
            x: self.x + other.x,
            y: self.y + other.y,
        }
    }
}

impl fmt::Display for BivarExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.x == 0 && self.y == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for (name, e) in [("x", self.x), ("y", self.y)] {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BivarExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A monomial `q^d t^e` where only the `q`-degree is truncated; the
/// `t`-exponent may be negative.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QtExp {
    pub q: u32,
    pub t: i64,
}

impl Exponent for QtExp {
    fn unit() -> Self {
        QtExp { q: 0, t: 0 }
    }

    fn degree(&self) -> usize {
        self.q as usize
    }

    fn combine(&self, other: &Self) -> Self {
        QtExp {
            q: self.q + other.q,
            t: self.t + other.t,
        }
    }
}

impl fmt::Display for QtExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.q, self.t) {
            (0, 0) => write!(f, "1"),
            (q, 0) => write!(f, "q^{q}"),
            (0, t) => write!(f, "t^{t}"),
            (q, t) => write!(f, "q^{q}*t^{t}"),
        }
    }
}

impl fmt::Debug for QtExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A sparse series truncated at a total degree, with exact integer
/// coefficients. No zero coefficients are stored.
#[derive(Clone, Debug)]
pub struct Series<E: Exponent> {
    cap: usize,
    terms: HashMap<E, i128>,
}

/// Series over content variables.
pub type TruncSeries = Series<ContentMonomial>;
/// Series over `x`, `y`.
pub type BivarSeries = Series<BivarExp>;
/// Series over `q`, `t`, truncated in `q` only.
pub type QtSeries = Series<QtExp>;

impl<E: Exponent> PartialEq for Series<E> {
    fn eq(&self, other: &Self) -> bool {
        self.cap == other.cap && self.terms == other.terms
    }
}
impl<E: Exponent> Eq for Series<E> {}

impl<E: Exponent> Series<E> {
    pub fn zero(cap: usize) -> Self {
        Series {
            cap,
            terms: HashMap::new(),
        }
    }

    pub fn one(cap: usize) -> Self {
        let mut s = Series::zero(cap);
        s.add_term(E::unit(), 1);
        s
    }

    pub fn monomial(cap: usize, e: E, coeff: i128) -> Self {
        let mut s = Series::zero(cap);
        s.add_term(e, coeff);
        s
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: &E) -> i128 {
        self.terms.get(e).copied().unwrap_or(0)
    }

    /// Adds `coeff` to the term `e`, dropping it if out of cap or cancelled.
    pub fn add_term(&mut self, e: E, coeff: i128) {
        if e.degree() > self.cap || coeff == 0 {
            return;
        }
        match self.terms.entry(e) {
            std::collections::hash_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            std::collections::hash_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.cap, other.cap, "series caps differ");
        let mut out = self.clone();
        for (e, &v) in &other.terms {
            out.add_term(e.clone(), v);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cap, other.cap, "series caps differ");
        // Iterate the smaller factor on the outside and cut the inner loop
        // off by degree.
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut large_terms: Vec<(&E, i128)> = large.terms.iter().map(|(e, &v)| (e, v)).collect();
        large_terms.sort_by_key(|(e, _)| e.degree());
        let mut out = Series::zero(self.cap);
        for (e1, v1) in &small.terms {
            let budget = self.cap - e1.degree();
            for &(e2, v2) in &large_terms {
                if e2.degree() > budget {
                    break;
                }
                let key = e1.combine(e2);
                let slot = out.terms.entry(key).or_insert(0);
                *slot += v1 * v2;
            }
        }
        out.terms.retain(|_, v| *v != 0);
        out
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Series::one(self.cap);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(&E::unit()) == 1
    }

    /// Truncation to a smaller cap; a ring morphism.
    pub fn truncate(&self, cap: usize) -> Self {
        assert!(cap <= self.cap);
        let mut out = Series::zero(cap);
        for (e, &v) in &self.terms {
            out.add_term(e.clone(), v);
        }
        out
    }

    /// Terms in graded order (degree, then the exponent's own order);
    /// deterministic across runs.
    pub fn sorted_terms(&self) -> Vec<(E, i128)> {
        let mut terms: Vec<(E, i128)> = self.terms.iter().map(|(e, &v)| (e.clone(), v)).collect();
        terms.sort_by(|(a, _), (b, _)| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
        terms
    }

    /// TSV dump: `monomial<TAB>coefficient`, graded order, LF line ends.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for (e, v) in self.sorted_terms() {
            out.push_str(&format!("{e}\t{v}\n"));
        }
        out
    }
}

/// Geometric expansion `1/(1-m) = sum m^k`, truncated. The unit monomial is
/// rejected: its geometric series has no constant-term normalisation.
pub fn geom_expand<E: Exponent>(m: &E, cap: usize) -> Result<Series<E>, Error> {
    let d = m.degree();
    if d == 0 {
        return Err(Error::UnitMonomial);
    }
    let mut s = Series::one(cap);
    let mut power = E::unit();
    let mut k = d;
    while k <= cap {
        power = power.combine(m);
        s.add_term(power.clone(), 1);
        k += d;
    }
    Ok(s)
}

/// `1/(1-m)^mult = sum C(mult+k-1, k) m^k`, truncated. Grouping equal
/// factors this way keeps the checkers' products short.
pub fn geom_power<E: Exponent>(m: &E, mult: u64, cap: usize) -> Result<Series<E>, Error> {
    let d = m.degree();
    if d == 0 {
        return Err(Error::UnitMonomial);
    }
    let mut s = Series::one(cap);
    let mut power = E::unit();
    let mut coeff: i128 = 1;
    let mut k: u64 = 0;
    while (k as usize + 1) * d <= cap {
        k += 1;
        power = power.combine(m);
        // C(mult+k-1, k) built up one factor at a time; exact division.
        coeff = coeff * (mult as i128 + k as i128 - 1) / k as i128;
        s.add_term(power.clone(), coeff);
    }
    Ok(s)
}

/// The content monomial of one hook: the interval `q_lo ... q_hi` over the
/// hook's content window; its degree is the hook length.
pub fn hook_monomial(
    lambda: &Partition,
    cell: Cell,
    side: HookSide,
) -> Result<ContentMonomial, Error> {
    let stats = hook_stats(lambda, cell, side)?;
    Ok(ContentMonomial::interval(
        stats.content_lo,
        stats.content_hi,
    ))
}

/// One coefficient disagreement between two series.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct TermDiff {
    pub monomial: String,
    pub lhs: String,
    pub rhs: String,
}

const MAX_DIFFS: usize = 16;

fn diff_series<E: Exponent>(lhs: &Series<E>, rhs: &Series<E>) -> Vec<TermDiff> {
    let mut keys: Vec<E> = lhs.terms.keys().cloned().collect();
    for e in rhs.terms.keys() {
        if !lhs.terms.contains_key(e) {
            keys.push(e.clone());
        }
    }
    keys.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    let mut out = Vec::new();
    for e in keys {
        let (a, b) = (lhs.coeff(&e), rhs.coeff(&e));
        if a != b {
            out.push(TermDiff {
                monomial: e.to_string(),
                lhs: a.to_string(),
                rhs: b.to_string(),
            });
            if out.len() == MAX_DIFFS {
                break;
            }
        }
    }
    out
}

/// Report of one enumeration-versus-product comparison.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SeriesReport {
    pub lambda: Partition,
    pub cap: usize,
    pub pass: bool,
    pub enumeration_terms: usize,
    pub product_terms: usize,
    pub mismatches: Vec<TermDiff>,
}

/// Checks the multivariate identity: the content-weighted sum over reverse
/// plane partitions of the shape equals the product of geometric series of
/// its internal hook monomials.
pub fn verify_gansner(lambda: &Partition, cap: usize) -> Result<SeriesReport, Error> {
    let mut lhs = TruncSeries::zero(cap);
    for f in rpp_enumerate(lambda, cap) {
        let m = ContentMonomial::from_exponents(f.diagonal_sums());
        lhs.add_term(m, 1);
    }
    let mut rhs = TruncSeries::one(cap);
    for (c, h) in internal_hooks(lambda) {
        if h.hook_len > cap {
            continue;
        }
        rhs = rhs.mul(&geom_expand(
            &hook_monomial(lambda, c, HookSide::Internal)?,
            cap,
        )?);
    }
    Ok(SeriesReport {
        lambda: lambda.clone(),
        cap,
        pass: lhs == rhs,
        enumeration_terms: lhs.num_terms(),
        product_terms: rhs.num_terms(),
        mismatches: diff_series(&lhs, &rhs),
    })
}

/// Dual check: the sum over skew plane partitions of the shape equals the
/// product over external hook monomials of length at most `cap`.
pub fn verify_skew(lambda: &Partition, cap: usize) -> Result<SeriesReport, Error> {
    let mut lhs = TruncSeries::zero(cap);
    for f in spp_enumerate(lambda, cap) {
        let m = ContentMonomial::from_exponents(f.diagonal_sums());
        lhs.add_term(m, 1);
    }
    let mut rhs = TruncSeries::one(cap);
    for (c, _) in external_hooks_up_to(lambda, cap) {
        rhs = rhs.mul(&geom_expand(
            &hook_monomial(lambda, c, HookSide::External)?,
            cap,
        )?);
    }
    Ok(SeriesReport {
        lambda: lambda.clone(),
        cap,
        pass: lhs == rhs,
        enumeration_terms: lhs.num_terms(),
        product_terms: rhs.num_terms(),
        mismatches: diff_series(&lhs, &rhs),
    })
}

/// Product over the hook types of a hook list, `1/(1 - x^{arm+1} y^leg)` per
/// hook of length at most `cap`.
fn hook_type_product(
    hooks: impl IntoIterator<Item = crate::partition::HookStats>,
    cap: usize,
) -> BivarSeries {
    let mut counts: BTreeMap<BivarExp, u64> = BTreeMap::new();
    for h in hooks {
        if h.hook_len <= cap {
            *counts
                .entry(BivarExp {
                    x: h.arm as u32 + 1,
                    y: h.leg as u32,
                })
                .or_insert(0) += 1;
        }
    }
    let mut out = BivarSeries::one(cap);
    for (m, mult) in counts {
        out = out.mul(&geom_power(&m, mult, cap).expect("hook factors have positive degree"));
    }
    out
}

fn specialize_to_q(s: &BivarSeries) -> Vec<i128> {
    let mut out = vec![0i128; s.cap() + 1];
    for (e, v) in s.sorted_terms() {
        out[e.degree()] += v;
    }
    out
}

/// Report of the refined wallcrossing check.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct WallcrossReport {
    pub lambda: Partition,
    pub cap: usize,
    pub pass: bool,
    pub refined_pass: bool,
    /// The `x = y = q` specialisation, checked on its own.
    pub specialized_pass: bool,
    pub mismatches: Vec<TermDiff>,
}

/// Checks that the hook-type product over external hooks of the shape equals
/// the product over external hooks of the empty diagram times the product
/// over internal hooks, and its one-variable specialisation.
pub fn verify_wallcrossing(lambda: &Partition, cap: usize) -> Result<WallcrossReport, Error> {
    let lhs = hook_type_product(
        external_hooks_up_to(lambda, cap)
            .into_iter()
            .map(|(_, h)| h),
        cap,
    );
    let empty = hook_type_product(
        external_hooks_up_to(&Partition::empty(), cap)
            .into_iter()
            .map(|(_, h)| h),
        cap,
    );
    let internal = hook_type_product(internal_hooks(lambda).into_iter().map(|(_, h)| h), cap);
    let rhs = empty.mul(&internal);
    let refined_pass = lhs == rhs;
    let specialized_pass = specialize_to_q(&lhs) == specialize_to_q(&rhs);
    Ok(WallcrossReport {
        lambda: lambda.clone(),
        cap,
        pass: refined_pass && specialized_pass,
        refined_pass,
        specialized_pass,
        mismatches: diff_series(&lhs, &rhs),
    })
}

/// Checks the arm/leg-refined reverse-plane-partition weight: the sum of
/// `q^size t^weight` over fillings equals the product over hooks of
/// `1/(1 - q^h t^{leg - arm - 1})`, truncated in `q` only.
pub fn verify_refined_rpp(lambda: &Partition, cap: usize) -> Result<SeriesReport, Error> {
    let mut lhs = QtSeries::zero(cap);
    for f in rpp_enumerate(lambda, cap) {
        let (q, t) = refined_weight(&f)?;
        lhs.add_term(QtExp { q: q as u32, t }, 1);
    }
    let mut rhs = QtSeries::one(cap);
    for (_, h) in internal_hooks(lambda) {
        let m = QtExp {
            q: h.hook_len as u32,
            t: h.leg as i64 - h.arm as i64 - 1,
        };
        rhs = rhs.mul(&geom_expand(&m, cap)?);
    }
    let pass = lhs == rhs;
    let mismatches = {
        let mut keys: Vec<QtExp> = lhs.terms.keys().chain(rhs.terms.keys()).copied().collect();
        keys.sort();
        keys.dedup();
        let mut out = Vec::new();
        for e in keys {
            if lhs.coeff(&e) != rhs.coeff(&e) {
                out.push(TermDiff {
                    monomial: e.to_string(),
                    lhs: lhs.coeff(&e).to_string(),
                    rhs: rhs.coeff(&e).to_string(),
                });
                if out.len() == MAX_DIFFS {
                    break;
                }
            }
        }
        out
    };
    Ok(SeriesReport {
        lambda: lambda.clone(),
        cap,
        pass,
        enumeration_terms: lhs.num_terms(),
        product_terms: rhs.num_terms(),
        mismatches,
    })
}

/// Report of the hook-to-strip product identities.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct HookStripSeriesReport {
    pub d: usize,
    pub ell: usize,
    pub cap: usize,
    pub pass: bool,
    pub content_pass: bool,
    pub type_pass: bool,
    pub content_mismatches: Vec<TermDiff>,
}

fn grouped_content_product(
    side: &[crate::hook_strip::HookedPartition],
    cap: usize,
) -> Result<TruncSeries, Error> {
    let mut counts: BTreeMap<ContentMonomial, u64> = BTreeMap::new();
    for hp in side {
        let m = ContentMonomial::interval(hp.stats.content_lo, hp.stats.content_hi);
        *counts.entry(m).or_insert(0) += 1;
    }
    let mut out = TruncSeries::one(cap);
    for (m, mult) in counts {
        if m.degree() > cap {
            continue;
        }
        out = out.mul(&geom_power(&m, mult, cap)?);
    }
    Ok(out)
}

/// Checks the two generating-series forms of the hook-to-strip bijection:
/// products of geometric series of hook content monomials over
/// `S_{d,ell}` and `S'_{d-ell,ell}` agree, and so do the hook-type products.
pub fn verify_hook_strip_series(
    d: usize,
    ell: usize,
    cap: usize,
) -> Result<HookStripSeriesReport, Error> {
    if ell == 0 || ell > d {
        return Err(Error::Precondition(format!(
            "hook-to-strip series need d >= ell >= 1, got d={d}, ell={ell}"
        )));
    }
    let s = enumerate_s(d, ell);
    let sprime = enumerate_s_prime(d - ell, ell);

    let (content_pass, content_mismatches, lhs_terms) = if ell > cap {
        // Every factor has degree ell, hence is 1 at this truncation.
        (true, Vec::new(), 1)
    } else {
        let lhs = grouped_content_product(&s, cap)?;
        let rhs = grouped_content_product(&sprime, cap)?;
        let pass = lhs == rhs;
        let diffs = diff_series(&lhs, &rhs);
        (pass, diffs, lhs.num_terms())
    };
    let _ = lhs_terms;

    let lhs_types = hook_type_product(s.iter().map(|hp| hp.stats), cap);
    let rhs_types = hook_type_product(sprime.iter().map(|hp| hp.stats), cap);
    let type_pass = lhs_types == rhs_types;

    Ok(HookStripSeriesReport {
        d,
        ell,
        cap,
        pass: content_pass && type_pass,
        content_pass,
        type_pass,
        content_mismatches,
    })
}

/// Report of the combined identity over all strip lengths.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct UltimateReport {
    pub d: usize,
    pub cap: usize,
    pub partition_count: usize,
    pub pass: bool,
    pub mismatches: Vec<TermDiff>,
}

/// Checks that the hook-type product over all `S_{d+ell,ell}` equals the
/// `p(d)`-th power of the empty-diagram product times the product over all
/// `S_{d,ell}`, at the truncation.
pub fn verify_ultimate(d: usize, cap: usize) -> Result<UltimateReport, Error> {
    let mut lhs = BivarSeries::one(cap);
    for ell in 1..=cap {
        lhs = lhs.mul(&hook_type_product(
            enumerate_s(d + ell, ell).into_iter().map(|hp| hp.stats),
            cap,
        ));
    }
    let p_d = partitions_of(d).len();
    let empty = hook_type_product(
        external_hooks_up_to(&Partition::empty(), cap)
            .into_iter()
            .map(|(_, h)| h),
        cap,
    );
    let mut rhs = empty.pow(p_d as u64);
    for ell in 1..=cap.min(d) {
        rhs = rhs.mul(&hook_type_product(
            enumerate_s(d, ell).into_iter().map(|hp| hp.stats),
            cap,
        ));
    }
    Ok(UltimateReport {
        d,
        cap,
        partition_count: p_d,
        pass: lhs == rhs,
        mismatches: diff_series(&lhs, &rhs),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn hook_monomial_examples() {
        let m = hook_monomial(&p(&[1]), Cell::new(0, 0), HookSide::Internal).unwrap();
        assert_eq!(m, ContentMonomial::var(0));

        let m = hook_monomial(&Partition::empty(), Cell::new(1, 2), HookSide::External).unwrap();
        assert_eq!(m, ContentMonomial::interval(-1, 2));
        assert_eq!(m.to_string(), "q[-1]*q[0]*q[1]*q[2]");

        let m = hook_monomial(&p(&[8, 4, 3, 2, 2]), Cell::new(1, 1), HookSide::Internal).unwrap();
        assert_eq!(m.degree(), 6);
        assert_eq!(m, ContentMonomial::interval(-3, 2));
    }

    #[test]
    fn geom_expand_examples() {
        let s = geom_expand(&ContentMonomial::var(0), 3).unwrap();
        assert_eq!(s.num_terms(), 4);
        for k in 0..=3u32 {
            let m = ContentMonomial::from_exponents([(0i64, k)]);
            assert_eq!(s.coeff(&m), 1);
        }

        let deg4 = ContentMonomial::interval(0, 3);
        assert!(geom_expand(&deg4, 3).unwrap().is_one());

        let xy = BivarExp { x: 1, y: 1 };
        let s = geom_expand(&xy, 4).unwrap();
        assert_eq!(s.num_terms(), 3);
        assert_eq!(s.coeff(&BivarExp { x: 2, y: 2 }), 1);

        assert!(geom_expand(&ContentMonomial::unit(), 3).is_err());
    }

    #[test]
    fn geom_times_complement_is_one() {
        for lo in -2..=2i64 {
            for hi in lo..=3 {
                let m = ContentMonomial::interval(lo, hi);
                if m.degree() > 8 {
                    continue;
                }
                let cap = 8;
                let g = geom_expand(&m, cap).unwrap();
                let mut one_minus = TruncSeries::one(cap);
                one_minus.add_term(m, -1);
                assert!(g.mul(&one_minus).is_one());
            }
        }
    }

    #[test]
    fn geom_power_matches_repeated_expand() {
        let m = ContentMonomial::var(1);
        let cap = 6;
        let single = geom_expand(&m, cap).unwrap();
        let cubed = single.mul(&single).mul(&single);
        assert_eq!(geom_power(&m, 3, cap).unwrap(), cubed);
    }

    #[test]
    fn series_ring_axioms_spot() {
        let cap = 6;
        let a = geom_expand(&ContentMonomial::var(0), cap).unwrap();
        let b = geom_expand(&ContentMonomial::interval(-1, 0), cap).unwrap();
        let c = geom_expand(&ContentMonomial::var(2), cap).unwrap();
        assert_eq!(a.mul(&b), b.mul(&a));
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        assert_eq!(a.mul(&TruncSeries::one(cap)), a);
        // Truncation morphism.
        assert_eq!(a.mul(&b).truncate(4), a.truncate(4).mul(&b.truncate(4)));
    }

    #[test]
    fn gansner_examples() {
        assert!(verify_gansner(&Partition::empty(), 5).unwrap().pass);
        let r = verify_gansner(&p(&[1]), 5).unwrap();
        assert!(r.pass);
        assert_eq!(r.enumeration_terms, 6);
        assert!(verify_gansner(&p(&[2, 1]), 6).unwrap().pass);
    }

    #[test]
    fn skew_examples() {
        let r = verify_skew(&Partition::empty(), 5).unwrap();
        assert!(r.pass);
        assert!(verify_skew(&p(&[1]), 4).unwrap().pass);
        assert!(verify_skew(&p(&[2, 2]), 6).unwrap().pass);
    }

    #[test]
    fn skew_empty_counts_macmahon() {
        let r = verify_skew(&Partition::empty(), 5).unwrap();
        assert!(r.pass);
        let mut lhs = TruncSeries::zero(5);
        for f in spp_enumerate(&Partition::empty(), 5) {
            lhs.add_term(ContentMonomial::from_exponents(f.diagonal_sums()), 1);
        }
        let mut by_degree = vec![0i128; 6];
        for (e, v) in lhs.sorted_terms() {
            by_degree[e.degree()] += v;
        }
        assert_eq!(by_degree, vec![1, 1, 3, 6, 13, 24]);
    }

    #[test]
    fn wallcrossing_examples() {
        assert!(verify_wallcrossing(&Partition::empty(), 6).unwrap().pass);

        let r = verify_wallcrossing(&p(&[1]), 6).unwrap();
        assert!(r.pass);
        // Both sides are the empty-diagram product times 1/(1-x).
        let lhs = hook_type_product(
            external_hooks_up_to(&p(&[1]), 6)
                .into_iter()
                .map(|(_, h)| h),
            6,
        );
        let empty = hook_type_product(
            external_hooks_up_to(&Partition::empty(), 6)
                .into_iter()
                .map(|(_, h)| h),
            6,
        );
        let x = geom_expand(&BivarExp { x: 1, y: 0 }, 6).unwrap();
        assert_eq!(lhs, empty.mul(&x));

        assert!(verify_wallcrossing(&p(&[8, 4, 3, 2, 2]), 10).unwrap().pass);
    }

    #[test]
    fn refined_rpp_examples() {
        let r = verify_refined_rpp(&p(&[1]), 4).unwrap();
        assert!(r.pass);
        // Single cell: sum q^k t^-k.
        let mut expect = QtSeries::zero(4);
        for k in 0..=4 {
            expect.add_term(
                QtExp {
                    q: k as u32,
                    t: -(k as i64),
                },
                1,
            );
        }
        let mut lhs = QtSeries::zero(4);
        for f in rpp_enumerate(&p(&[1]), 4) {
            let (q, t) = refined_weight(&f).unwrap();
            lhs.add_term(QtExp { q: q as u32, t }, 1);
        }
        assert_eq!(lhs, expect);

        assert!(verify_refined_rpp(&p(&[2]), 4).unwrap().pass);
        assert!(verify_refined_rpp(&p(&[2, 1]), 5).unwrap().pass);
    }

    #[test]
    fn hook_strip_series_examples() {
        let r = verify_hook_strip_series(1, 1, 5).unwrap();
        assert!(r.pass);

        let r = verify_hook_strip_series(2, 1, 5).unwrap();
        assert!(r.pass);
        // Both sides are 1/((1-q_1)(1-q_-1)).
        let lhs = grouped_content_product(&enumerate_s(2, 1), 5).unwrap();
        let expect = geom_expand(&ContentMonomial::var(1), 5)
            .unwrap()
            .mul(&geom_expand(&ContentMonomial::var(-1), 5).unwrap());
        assert_eq!(lhs, expect);

        assert!(verify_hook_strip_series(8, 3, 8).unwrap().pass);
        assert!(verify_hook_strip_series(0, 1, 5).is_err());
        assert!(verify_hook_strip_series(3, 0, 5).is_err());
    }

    #[test]
    fn ultimate_examples() {
        assert!(verify_ultimate(0, 4).unwrap().pass);
        assert!(verify_ultimate(1, 6).unwrap().pass);
        assert!(verify_ultimate(4, 6).unwrap().pass);
    }

    #[test]
    fn coefficients_count_things() {
        let r = verify_gansner(&p(&[2, 1]), 6).unwrap();
        assert!(r.pass);
        let rhs = {
            let lam = p(&[2, 1]);
            let mut s = TruncSeries::one(6);
            for (c, _) in internal_hooks(&lam) {
                s = s.mul(
                    &geom_expand(&hook_monomial(&lam, c, HookSide::Internal).unwrap(), 6).unwrap(),
                );
            }
            s
        };
        assert!(rhs.sorted_terms().iter().all(|&(_, v)| v > 0));
    }

    #[test]
    fn diffs_surface_the_first_mismatch() {
        let cap = 4;
        let a = geom_expand(&ContentMonomial::var(0), cap).unwrap();
        let mut b = a.clone();
        b.add_term(ContentMonomial::from_exponents([(0i64, 2u32)]), 5);
        let diffs = diff_series(&a, &b);
        assert_eq!(diffs.len(), 1);
        assert_eq!(diffs[0].monomial, "q[0]^2");
        assert_eq!((diffs[0].lhs.as_str(), diffs[0].rhs.as_str()), ("1", "6"));
        assert_ne!(a, b);
        // Equal term maps at different caps are still different series.
        assert_ne!(a, a.truncate(3));
    }

    #[test]
    fn tsv_emission_is_stable() {
        let s = geom_expand(&ContentMonomial::interval(-1, 0), 4).unwrap();
        let tsv = s.to_tsv();
        assert_eq!(tsv, "1\t1\nq[-1]*q[0]\t1\nq[-1]^2*q[0]^2\t1\n");
    }
}
