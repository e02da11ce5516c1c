//! Frequent-set mining on top of face counting.
//!
//! For a database `D = (T_1, …, T_m)` over `[w]`, a set is `s⁺`-frequent when
//! it lies in at least `s` transactions and `s`-frequent when it lies in
//! exactly `s`. The `s⁺`-frequent sets form a complex whose facets are the
//! maximal intersections of `s` transactions.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::complex::FacetFamily;
use crate::constraints::{run_transversal, Partition};
use crate::counting::face_numbers;
use crate::error::{Error, Result};
use crate::face::{antichain_reduce, FaceSet, GroundSet};
use crate::poly::{binomial, binomial_row};
use crate::rows::{Kind, Row};

/// Largest number of `s`-subsets of transactions [`frequent_facets`] visits.
pub const MAX_COMBINATIONS: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Database {
    ground: GroundSet,
    transactions: Vec<FaceSet>,
}

impl Database {
    pub fn new(ground: GroundSet, transactions: Vec<FaceSet>) -> Result<Self> {
        if transactions.is_empty() {
            return Err(Error::EmptyInput("a database needs at least one transaction"));
        }
        for t in &transactions {
            ground.check(t)?;
        }
        Ok(Database {
            ground,
            transactions,
        })
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn width(&self) -> usize {
        self.ground.size()
    }

    pub fn transactions(&self) -> &[FaceSet] {
        &self.transactions
    }

    /// `m`.
    pub fn len(&self) -> usize {
        self.transactions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.transactions.is_empty()
    }

    /// Indices of the transactions containing `x`.
    pub fn support(&self, x: &FaceSet) -> Vec<usize> {
        self.transactions
            .iter()
            .enumerate()
            .filter(|(_, t)| x.is_subset(t))
            .map(|(i, _)| i)
            .collect()
    }

    fn check_threshold(&self, s: usize) -> Result<()> {
        if s == 0 || s > self.len() {
            return Err(Error::InvalidArgument(alloc::format!(
                "threshold s = {s} outside 1..={}",
                self.len()
            )));
        }
        Ok(())
    }
}

/// Facets of `Fr(s⁺)`: the maximal sets among all intersections of `s`
/// transactions.
pub fn frequent_facets(d: &Database, s: usize) -> Result<FacetFamily> {
    d.check_threshold(s)?;
    let m = d.len();
    let combos = binomial(m, s);
    if combos > BigUint::from(MAX_COMBINATIONS) {
        return Err(Error::GuardExceeded {
            what: "transaction combinations",
            limit: MAX_COMBINATIONS as u128,
            got: u128::try_from(&combos).unwrap_or(u128::MAX),
        });
    }
    let ts = d.transactions();
    let mut found: Vec<FaceSet> = Vec::new();
    let mut idx: Vec<usize> = (0..s).collect();
    loop {
        let mut acc = ts[idx[0]].clone();
        for &i in &idx[1..] {
            acc = acc.intersection(&ts[i]);
        }
        if !found.contains(&acc) {
            found.push(acc);
        }
        // next s-combination of 0..m in lexicographic order
        let Some(pos) = (0..s).rev().find(|&i| idx[i] != i + m - s) else {
            break;
        };
        idx[pos] += 1;
        for j in pos + 1..s {
            idx[j] = idx[j - 1] + 1;
        }
    }
    FacetFamily::new(d.ground(), antichain_reduce(&found)?)
}

/// `fr(s, k)` for `0 ≤ s ≤ m`, `0 ≤ k ≤ w`: the number of `k`-sets lying in
/// exactly `s` transactions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrequencyTable {
    w: usize,
    entries: Vec<Vec<BigUint>>,
}

impl FrequencyTable {
    pub fn width(&self) -> usize {
        self.w
    }

    /// Number of transactions `m`.
    pub fn transactions(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn get(&self, s: usize, k: usize) -> &BigUint {
        &self.entries[s][k]
    }

    pub fn row(&self, s: usize) -> &[BigUint] {
        &self.entries[s]
    }

    /// `Σ_{k ≥ from} fr(s, k)`.
    pub fn row_sum(&self, s: usize, from: usize) -> BigUint {
        self.entries[s].iter().skip(from).sum()
    }

    pub fn column_sum(&self, k: usize) -> BigUint {
        self.entries.iter().map(|r| &r[k]).sum()
    }

    /// `fr(s⁺, k) = Σ_{s' ≥ s} fr(s', k)`.
    pub fn at_least(&self, s: usize, k: usize) -> BigUint {
        self.entries[s..].iter().map(|r| &r[k]).sum()
    }
}

/// The full `fr(s, k)` table, via `fr(s,k) = fr(s⁺,k) − fr((s+1)⁺,k)` and
/// `fr(0,k) = C(w,k) − fr(1⁺,k)`.
pub fn frequency_table(d: &Database) -> Result<FrequencyTable> {
    let w = d.width();
    let m = d.len();
    let mut plus: Vec<Vec<BigUint>> = Vec::with_capacity(m + 2);
    plus.push(binomial_row(w));
    for s in 1..=m {
        let f = face_numbers(&frequent_facets(d, s)?);
        plus.push(f.entries().to_vec());
    }
    plus.push(alloc::vec![BigUint::zero(); w + 1]);
    let entries = (0..=m)
        .map(|s| (0..=w).map(|k| &plus[s][k] - &plus[s + 1][k]).collect())
        .collect();
    Ok(FrequencyTable { w, entries })
}

/// The three probability questions a frequency table answers directly.
///
/// Itemsets are nonempty throughout (`k ≥ 1`) unless a query explicitly
/// asks for `k = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProbabilityQuery {
    /// `P(X is s⁺-frequent | |X| = k)`.
    FrequentGivenSize { s: usize, k: usize },
    /// `P(|X| = k | X is s⁺-frequent, X ≠ ∅)`.
    SizeGivenFrequent { s: usize, k: usize },
    /// `P(X is s-frequent | X is s⁺-frequent, |X| ≥ k)`.
    ExactGivenFrequent { s: usize, min_k: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Probability {
    Value(BigRational),
    /// The conditioning event is empty.
    Undefined,
}

impl Probability {
    /// `num/den ≈ 0.2024` style rendering; `undefined` for an empty condition.
    pub fn render(&self, places: usize) -> String {
        match self {
            Probability::Value(r) => alloc::format!("{}/{} ≈ {}", r.numer(), r.denom(), decimal(r, places)),
            Probability::Undefined => "undefined".to_string(),
        }
    }
}

/// Rounds half away from zero to `places` decimals.
pub fn decimal(r: &BigRational, places: usize) -> String {
    let scale = BigInt::from(10u32).pow(places as u32);
    let scaled: BigInt = r.numer().abs() * &scale * 2 + r.denom();
    let q = scaled.div_floor(&(r.denom() * 2));
    let (int, frac) = q.div_rem(&scale);
    let sign = if r.is_negative() && !q.is_zero() { "-" } else { "" };
    if places == 0 {
        return alloc::format!("{sign}{int}");
    }
    let frac = frac.to_string();
    let pad = "0".repeat(places - frac.len());
    alloc::format!("{sign}{int}.{pad}{frac}")
}

fn ratio(num: BigUint, den: BigUint) -> Probability {
    if den.is_zero() {
        Probability::Undefined
    } else {
        Probability::Value(BigRational::new(num.into(), den.into()))
    }
}

pub fn probability_query(t: &FrequencyTable, q: ProbabilityQuery) -> Result<Probability> {
    let m = t.transactions();
    let w = t.width();
    let check = |s: usize, k: usize| -> Result<()> {
        if s == 0 || s > m {
            return Err(Error::InvalidArgument(alloc::format!("s = {s} outside 1..={m}")));
        }
        if k > w {
            return Err(Error::InvalidArgument(alloc::format!("k = {k} outside 0..={w}")));
        }
        Ok(())
    };
    Ok(match q {
        ProbabilityQuery::FrequentGivenSize { s, k } => {
            check(s, k)?;
            ratio(t.at_least(s, k), binomial(w, k))
        }
        ProbabilityQuery::SizeGivenFrequent { s, k } => {
            check(s, k)?;
            let den: BigUint = (1..=w).map(|j| t.at_least(s, j)).sum();
            let num = if k == 0 { BigUint::zero() } else { t.at_least(s, k) };
            ratio(num, den)
        }
        ProbabilityQuery::ExactGivenFrequent { s, min_k } => {
            check(s, min_k)?;
            let num = t.row_sum(s, min_k);
            let den: BigUint = (min_k..=w).map(|j| t.at_least(s, j)).sum();
            ratio(num, den)
        }
    })
}

/// `cl(X) = ∩ supp(X)` when `|supp(X)| ≥ s`, otherwise the whole ground set.
pub fn closure(d: &Database, s: usize, x: &FaceSet) -> Result<FaceSet> {
    d.check_threshold(s)?;
    d.ground().check(x)?;
    Ok(closure_unchecked(d, s, x))
}

fn closure_unchecked(d: &Database, s: usize, x: &FaceSet) -> FaceSet {
    let mut hits = 0;
    let mut acc = d.ground().full();
    for t in d.transactions() {
        if x.is_subset(t) {
            hits += 1;
            acc = acc.intersection(t);
        }
    }
    if hits >= s {
        acc
    } else {
        d.ground().full()
    }
}

/// All closed sets other than the ground set, in lectic order, by the
/// next-closure method.
pub fn closed_sets(d: &Database, s: usize) -> Result<Vec<FaceSet>> {
    d.check_threshold(s)?;
    let w = d.width();
    let full = d.ground().full();
    let mut out = Vec::new();
    let mut a = closure_unchecked(d, s, &FaceSet::new());
    loop {
        if a == full {
            break;
        }
        out.push(a.clone());
        match next_closure(d, s, &a) {
            Some(b) => a = b,
            None => break,
        }
    }
    debug_assert!(out.len() <= 1 << w.min(63));
    Ok(out)
}

/// The lectically next closed set after `a`, if any.
fn next_closure(d: &Database, s: usize, a: &FaceSet) -> Option<FaceSet> {
    let w = d.width();
    for i in (1..=w).rev() {
        if a.contains(i) {
            continue;
        }
        let prefix = a.intersection(&FaceSet::full(i - 1));
        let mut seed = prefix.clone();
        seed.insert(i);
        let b = closure_unchecked(d, s, &seed);
        if b.intersection(&FaceSet::full(i - 1)) == prefix {
            return Some(b);
        }
    }
    None
}

/// Lectic comparison: the smallest element of the symmetric difference
/// decides, and the set containing it is larger.
pub fn lectic_cmp(a: &FaceSet, b: &FaceSet) -> core::cmp::Ordering {
    let diff = a.difference(b).union(&b.difference(a));
    match diff.first() {
        None => core::cmp::Ordering::Equal,
        Some(i) if b.contains(i) => core::cmp::Ordering::Less,
        Some(_) => core::cmp::Ordering::Greater,
    }
}

/// `SC[Y] = {X : supp(X) = supp(Y)}` as disjoint `E` rows: the powerset row
/// of `Y` with `X ⊄ Y_i` imposed for every lower cover `Y_i` of `Y` among the
/// closed sets.
pub fn support_class_partition(d: &Database, s: usize, y: &FaceSet) -> Result<Partition> {
    let cl = closure(d, s, y)?;
    let full = d.ground().full();
    if cl != *y || (*y == full && d.support(y).len() < s) {
        return Err(Error::NotClosed(y.to_string()));
    }
    let closed = closed_sets(d, s)?;
    let below: Vec<&FaceSet> = closed.iter().filter(|z| z.is_subset(y) && *z != y).collect();
    let covers: Vec<FaceSet> = below
        .iter()
        .filter(|z| !below.iter().any(|u| *u != **z && z.is_subset(u)))
        .map(|z| z.complement(d.width()))
        .collect();
    let mut rows = Vec::new();
    run_transversal(alloc::vec![Row::powerset(d.width(), y)], &covers, &mut rows);
    Partition::new(d.ground(), Kind::E, rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn fs(v: &[usize]) -> FaceSet {
        FaceSet::from_positions(v.iter().copied()).unwrap()
    }

    fn db(w: usize, ts: &[&[usize]]) -> Database {
        Database::new(GroundSet::new(w).unwrap(), ts.iter().map(|t| fs(t)).collect()).unwrap()
    }

    fn toy() -> Database {
        db(4, &[&[1, 2, 3], &[1, 2, 4], &[3, 4]])
    }

    pub(crate) fn table6() -> Database {
        db(
            9,
            &[
                &[1, 2, 3, 5, 7, 9],
                &[1, 2, 3, 4, 6, 8, 9],
                &[3, 5, 6, 8, 9],
                &[2, 5, 7, 9],
                &[3, 6, 8],
                &[2, 4, 7, 8, 9],
                &[3, 6, 8, 9],
            ],
        )
    }

    #[test]
    fn toy_facets() {
        let f = frequent_facets(&toy(), 2).unwrap();
        assert_eq!(f.facets(), &[fs(&[1, 2]), fs(&[3]), fs(&[4])]);
        let f1 = frequent_facets(&toy(), 1).unwrap();
        assert_eq!(f1.facets(), toy().transactions());
        let f3 = frequent_facets(&toy(), 3).unwrap();
        assert_eq!(f3.facets(), &[FaceSet::new()]);
        assert!(frequent_facets(&toy(), 0).is_err());
        assert!(frequent_facets(&toy(), 4).is_err());
    }

    #[test]
    fn table7() {
        let t = frequency_table(&table6()).unwrap();
        let expected: [[u64; 9]; 8] = [
            [0, 2, 23, 69, 97, 76, 35, 9, 1],
            [0, 13, 44, 53, 29, 8, 1, 0, 0],
            [2, 11, 12, 3, 0, 0, 0, 0, 0],
            [2, 4, 4, 1, 0, 0, 0, 0, 0],
            [2, 6, 1, 0, 0, 0, 0, 0, 0],
            [2, 0, 0, 0, 0, 0, 0, 0, 0],
            [1, 0, 0, 0, 0, 0, 0, 0, 0],
            [0, 0, 0, 0, 0, 0, 0, 0, 0],
        ];
        for (s, row) in expected.iter().enumerate() {
            let got: Vec<u64> = (1..=9).map(|k| t.get(s, k).to_u64().unwrap()).collect();
            assert_eq!(got, row, "row s = {s}");
        }
        let sums: Vec<u64> = (0..=7).map(|s| t.row_sum(s, 1).to_u64().unwrap()).collect();
        assert_eq!(sums, [312, 148, 28, 11, 9, 2, 1, 0]);
        for k in 0..=9 {
            assert_eq!(t.column_sum(k), binomial(9, k));
        }
        // the empty set lies in all seven transactions
        assert_eq!(t.get(7, 0).to_u64(), Some(1));
    }

    #[test]
    fn probabilities() {
        let t = frequency_table(&table6()).unwrap();
        let q = |q| probability_query(&t, q).unwrap();
        let r = |a: i64, b: i64| Probability::Value(BigRational::new(a.into(), b.into()));
        assert_eq!(q(ProbabilityQuery::FrequentGivenSize { s: 2, k: 3 }), r(17, 84));
        assert_eq!(q(ProbabilityQuery::SizeGivenFrequent { s: 2, k: 3 }), r(17, 51));
        assert_eq!(q(ProbabilityQuery::ExactGivenFrequent { s: 2, min_k: 1 }), r(28, 51));
        assert_eq!(q(ProbabilityQuery::ExactGivenFrequent { s: 2, min_k: 2 }), r(26, 42));
        assert_eq!(q(ProbabilityQuery::ExactGivenFrequent { s: 2, min_k: 3 }), r(15, 21));
        assert_eq!(
            q(ProbabilityQuery::ExactGivenFrequent { s: 7, min_k: 1 }),
            Probability::Undefined
        );
        assert_eq!(q(ProbabilityQuery::FrequentGivenSize { s: 2, k: 3 }).render(3), "17/84 ≈ 0.202");
        assert_eq!(q(ProbabilityQuery::SizeGivenFrequent { s: 2, k: 3 }).render(3), "1/3 ≈ 0.333");
        assert_eq!(q(ProbabilityQuery::ExactGivenFrequent { s: 2, min_k: 1 }).render(3), "28/51 ≈ 0.549");
        assert!(probability_query(&t, ProbabilityQuery::FrequentGivenSize { s: 0, k: 1 }).is_err());
    }

    #[test]
    fn decimals() {
        let r = |a: i64, b: i64| BigRational::new(a.into(), b.into());
        assert_eq!(decimal(&r(26, 42), 3), "0.619");
        assert_eq!(decimal(&r(15, 21), 3), "0.714");
        assert_eq!(decimal(&r(1, 2), 0), "1");
        assert_eq!(decimal(&r(-1, 3), 2), "-0.33");
        assert_eq!(decimal(&r(1, 1000), 2), "0.00");
    }

    #[test]
    fn closure_examples() {
        let d = table6();
        assert_eq!(closure(&d, 2, &fs(&[2, 7, 9])).unwrap(), fs(&[2, 7, 9]));
        assert_eq!(d.support(&fs(&[2, 7, 9])), [0, 3, 5]);
        let all = d
            .transactions()
            .iter()
            .fold(d.ground().full(), |acc, t| acc.intersection(t));
        assert_eq!(closure(&d, 2, &FaceSet::new()).unwrap(), all);
        // {1,4,5} lies in no transaction
        assert_eq!(closure(&d, 1, &fs(&[1, 4, 5])).unwrap(), d.ground().full());
    }

    #[test]
    fn toy_closed_sets() {
        let got = closed_sets(&toy(), 2).unwrap();
        assert_eq!(got, [FaceSet::new(), fs(&[4]), fs(&[3]), fs(&[1, 2])]);
        let single = db(3, &[&[1, 2]]);
        assert_eq!(closed_sets(&single, 1).unwrap(), [fs(&[1, 2])]);
        let tight = db(2, &[&[1, 2]]);
        assert!(closed_sets(&tight, 1).unwrap().is_empty());
    }

    #[test]
    fn support_classes_of_toy() {
        let d = toy();
        let p = support_class_partition(&d, 2, &fs(&[1, 2])).unwrap();
        // {1}, {2}, {1,2} all have support {T1, T2}
        assert_eq!(p.cardinality().to_u64(), Some(3));
        let bottom = support_class_partition(&d, 2, &FaceSet::new()).unwrap();
        assert_eq!(bottom.cardinality().to_u64(), Some(1));
        assert!(matches!(
            support_class_partition(&d, 2, &fs(&[1])),
            Err(Error::NotClosed(_))
        ));
        assert!(support_class_partition(&d, 2, &d.ground().full()).is_err());
    }
}
