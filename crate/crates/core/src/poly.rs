//! Exact integer polynomials and count vectors.

use alloc::vec::Vec;
use core::fmt;
use core::ops::Index;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

/// Integer polynomial with ascending coefficients, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::monomial(BigInt::one(), 0)
    }

    pub fn monomial(c: BigInt, degree: usize) -> Self {
        let mut coeffs = alloc::vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        Poly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    /// `(1 + x)^n` truncated at degree `cap`.
    pub fn one_plus_x_pow(n: usize, cap: usize) -> Self {
        let top = n.min(cap);
        let row = binomial_row(n);
        Poly::from_coeffs(row.into_iter().take(top + 1).map(BigInt::from).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Poly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - other.coeff(i)).collect();
        Poly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Schoolbook product, dropping every term of degree above `cap`.
    pub fn mul_capped(&self, other: &Poly, cap: usize) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let n = (self.coeffs.len() + other.coeffs.len() - 1).min(cap + 1);
        let mut out = alloc::vec![BigInt::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n - i) {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.mul_capped(other, usize::MAX - 1)
    }

    /// Value at an integer point.
    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            first = false;
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                _ if a.is_one() => {}
                _ => write!(f, "{a}")?,
            }
            match k {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        Ok(())
    }
}

/// Nonnegative exact counts indexed by cardinality `k = 0..=w`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CountVector {
    entries: Vec<BigUint>,
}

impl CountVector {
    /// `w + 1` zeros.
    pub fn zeros(w: usize) -> Self {
        CountVector {
            entries: alloc::vec![BigUint::zero(); w + 1],
        }
    }

    pub fn from_entries(entries: Vec<BigUint>) -> Self {
        CountVector { entries }
    }

    /// Convenience for literals in tests and fixtures.
    pub fn from_u64s(v: &[u64]) -> Self {
        CountVector {
            entries: v.iter().map(|&x| BigUint::from(x)).collect(),
        }
    }

    /// The binomial row `C(w, 0..=w)`.
    pub fn binomials(w: usize) -> Self {
        CountVector {
            entries: binomial_row(w),
        }
    }

    pub fn width(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[BigUint] {
        &self.entries
    }

    pub fn get(&self, k: usize) -> BigUint {
        self.entries.get(k).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, k: usize, v: BigUint) {
        self.entries[k] = v;
    }

    pub fn add_assign(&mut self, other: &CountVector) {
        if other.entries.len() > self.entries.len() {
            self.entries.resize(other.entries.len(), BigUint::zero());
        }
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            *a += b;
        }
    }

    pub fn total(&self) -> BigUint {
        self.entries.iter().sum()
    }

    /// Largest `k` with a nonzero entry.
    pub fn top(&self) -> Option<usize> {
        self.entries.iter().rposition(|x| !x.is_zero())
    }

    pub fn iter(&self) -> core::slice::Iter<'_, BigUint> {
        self.entries.iter()
    }
}

impl Index<usize> for CountVector {
    type Output = BigUint;

    fn index(&self, k: usize) -> &BigUint {
        &self.entries[k]
    }
}

/// `C(n, 0..=n)` by Pascal's recurrence.
pub fn binomial_row(n: usize) -> Vec<BigUint> {
    let mut row = Vec::with_capacity(n + 1);
    row.push(BigUint::one());
    for i in 1..=n {
        row.push(BigUint::one());
        for j in (1..i).rev() {
            let prev = row[j - 1].clone();
            row[j] += prev;
        }
    }
    row
}

/// Single binomial coefficient, exact.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= BigUint::from(n - i);
        acc /= BigUint::from(i + 1);
    }
    acc
}
