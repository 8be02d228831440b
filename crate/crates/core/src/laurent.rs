//! Laurent polynomials in `t` with integer coefficients, and Hilbert series
//! in the canonical form `N(t)/(1−t)^d`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::linalg::binomial;

/// A Laurent polynomial `Σ c_k t^k`, stored densely from `offset`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct LaurentPoly {
    offset: i32,
    coeffs: Vec<i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `c·t^e`.
    pub fn monomial(e: i32, c: i64) -> Self {
        Self::from_dense(e, vec![c])
    }

    pub fn from_dense(offset: i32, coeffs: Vec<i64>) -> Self {
        let mut p = LaurentPoly { offset, coeffs };
        p.normalize();
        p
    }

    pub fn from_terms(terms: &[(i32, i64)]) -> Self {
        terms
            .iter()
            .fold(Self::zero(), |acc, &(e, c)| acc.add(&Self::monomial(e, c)))
    }

    fn normalize(&mut self) {
        let lead = self.coeffs.iter().position(|&c| c != 0);
        match lead {
            None => {
                self.coeffs.clear();
                self.offset = 0;
            }
            Some(i) => {
                self.coeffs.drain(..i);
                self.offset += i as i32;
                while self.coeffs.last() == Some(&0) {
                    self.coeffs.pop();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn min_exp(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.offset)
    }

    pub fn max_exp(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.offset + self.coeffs.len() as i32 - 1)
    }

    pub fn coeff(&self, e: i32) -> i64 {
        let i = e - self.offset;
        if i < 0 {
            return 0;
        }
        self.coeffs.get(i as usize).copied().unwrap_or(0)
    }

    /// Nonzero `(exponent, coefficient)` pairs, increasing in the exponent.
    pub fn terms(&self) -> Vec<(i32, i64)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (self.offset + i as i32, c))
            .collect()
    }

    pub fn eval_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let lo = self.offset.min(o.offset);
        let hi = self.max_exp().unwrap().max(o.max_exp().unwrap());
        let coeffs = (lo..=hi).map(|e| self.coeff(e) + o.coeff(e)).collect();
        Self::from_dense(lo, coeffs)
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            offset: self.offset,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::from_dense(self.offset, self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut c = vec![0i64; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Self::from_dense(self.offset + o.offset, c)
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            offset: self.offset + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// `1 − t`.
    pub fn one_minus_t() -> Self {
        Self::from_dense(0, vec![1, -1])
    }

    /// Exact division by `(1 − t)`, if possible.
    pub fn div_one_minus_t(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.eval_one() != 0 {
            return None;
        }
        // q_k = Σ_{j ≤ k} c_j
        let mut acc = 0;
        let mut q = Vec::with_capacity(self.coeffs.len());
        for &c in &self.coeffs[..self.coeffs.len() - 1] {
            acc += c;
            q.push(acc);
        }
        Some(Self::from_dense(self.offset, q))
    }

    /// Exact division by a polynomial with leading low-order coefficient ±1.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let d0 = d.coeffs[0];
        let mut rem = self.coeffs.clone();
        let qlen = rem.len().checked_sub(d.coeffs.len() - 1)?;
        let mut q = vec![0i64; qlen];
        for i in 0..qlen {
            if rem[i] % d0 != 0 {
                return None;
            }
            let qi = rem[i] / d0;
            q[i] = qi;
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] -= qi * dc;
            }
        }
        if rem.iter().any(|&c| c != 0) {
            return None;
        }
        Some(Self::from_dense(self.offset - d.offset, q))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in terms.iter().enumerate() {
            let (sign, mag) = (if *c < 0 { "-" } else { "+" }, c.abs());
            if i == 0 {
                if *c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            match (*e, mag) {
                (0, m) => write!(f, "{m}")?,
                (1, 1) => write!(f, "t")?,
                (1, m) => write!(f, "{m}t")?,
                (e, 1) => write!(f, "t^{e}")?,
                (e, m) => write!(f, "{m}t^{e}")?,
            }
        }
        Ok(())
    }
}

/// `Σ_d dim M_d t^d = N(t)/(1−t)^d` with `N(1) ≠ 0` whenever `d > 0`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HilbertSeries {
    numerator: LaurentPoly,
    pole_order: u32,
}

impl HilbertSeries {
    /// Builds and reduces to canonical form.
    pub fn new(numerator: LaurentPoly, pole_order: u32) -> Self {
        let mut n = numerator;
        let mut d = pole_order;
        if n.is_zero() {
            d = 0;
        }
        while d > 0 {
            match n.div_one_minus_t() {
                Some(q) if n.eval_one() == 0 => {
                    n = q;
                    d -= 1;
                }
                _ => break,
            }
        }
        HilbertSeries {
            numerator: n,
            pole_order: d,
        }
    }

    pub fn zero() -> Self {
        Self::new(LaurentPoly::zero(), 0)
    }

    /// Series of the free module `⊕ S(−d_i)` in `nvars` variables, where
    /// `degrees[i]` is the degree of the `i`-th basis element.
    pub fn free(nvars: usize, degrees: &[i32]) -> Self {
        let n = degrees
            .iter()
            .fold(LaurentPoly::zero(), |acc, &d| acc.add(&LaurentPoly::monomial(d, 1)));
        Self::new(n, nvars as u32)
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.numerator
    }

    pub fn pole_order(&self) -> u32 {
        self.pole_order
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    fn with_pole(&self, d: u32) -> LaurentPoly {
        debug_assert!(d >= self.pole_order);
        self.numerator.mul(&LaurentPoly::one_minus_t().pow(d - self.pole_order))
    }

    pub fn add(&self, o: &Self) -> Self {
        let d = self.pole_order.max(o.pole_order);
        Self::new(self.with_pole(d).add(&o.with_pole(d)), d)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let d = self.pole_order.max(o.pole_order);
        Self::new(self.with_pole(d).sub(&o.with_pole(d)), d)
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self::new(self.numerator.shift(k), self.pole_order)
    }

    pub fn mul_laurent(&self, p: &LaurentPoly) -> Self {
        Self::new(self.numerator.mul(p), self.pole_order)
    }

    /// `dim M_k`.
    pub fn coefficient(&self, k: i32) -> i64 {
        let d = self.pole_order as i64;
        self.numerator
            .terms()
            .iter()
            .map(|&(e, c)| {
                let j = (k - e) as i64;
                if j < 0 {
                    0
                } else if d == 0 {
                    if j == 0 {
                        c
                    } else {
                        0
                    }
                } else {
                    c * binomial((j + d - 1) as u64, (d - 1) as u64) as i64
                }
            })
            .sum()
    }

    /// Length of an Artinian module (`N(1)` when the pole order is zero).
    pub fn length(&self) -> Option<i64> {
        (self.pole_order == 0).then(|| self.numerator.eval_one())
    }
}

impl fmt::Debug for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.pole_order {
            0 => write!(f, "{}", self.numerator),
            1 => write!(f, "({})/(1-t)", self.numerator),
            d => write!(f, "({})/(1-t)^{d}", self.numerator),
        }
    }
}
