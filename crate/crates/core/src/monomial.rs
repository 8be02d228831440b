//! Monomials in at most [`MAX_VARS`] variables and the two supported orders.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Upper bound on the number of ring variables.
pub const MAX_VARS: usize = 12;

/// An exponent vector with cached total degree and a divisibility mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    nvars: u8,
    deg: u32,
    mask: u32,
}

fn mask_of(exps: &[u16; MAX_VARS]) -> u32 {
    let mut m = 0u32;
    for (i, &e) in exps.iter().enumerate() {
        if e > 0 {
            m |= 1 << i;
        }
        if e > 1 {
            m |= 1 << (i + MAX_VARS);
        }
    }
    m
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables supported");
        Monomial {
            exps: [0; MAX_VARS],
            nvars: nvars as u8,
            deg: 0,
            mask: 0,
        }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0u32; nvars];
        e[i] = 1;
        Self::from_exponents(&e)
    }

    pub fn from_exponents(e: &[u32]) -> Self {
        assert!(e.len() <= MAX_VARS, "at most {MAX_VARS} variables supported");
        let mut exps = [0u16; MAX_VARS];
        let mut deg = 0;
        for (slot, &v) in exps.iter_mut().zip(e) {
            *slot = u16::try_from(v).expect("exponent overflow");
            deg += v;
        }
        Monomial {
            exps,
            nvars: e.len() as u8,
            deg,
            mask: mask_of(&exps),
        }
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn exponents(&self) -> Vec<u32> {
        self.exps[..self.nvars()].iter().map(|&e| e as u32).collect()
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    #[inline]
    pub fn mul(&self, o: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars, o.nvars);
        let mut exps = self.exps;
        for (a, b) in exps.iter_mut().zip(o.exps.iter()) {
            *a += *b;
        }
        Monomial {
            exps,
            nvars: self.nvars,
            deg: self.deg + o.deg,
            mask: self.mask | o.mask | mask_of_overlap(&self.exps, &o.exps),
        }
    }

    /// `true` when `self` divides `o`.
    #[inline]
    pub fn divides(&self, o: &Monomial) -> bool {
        if self.deg > o.deg || self.mask & !o.mask != 0 {
            return false;
        }
        self.exps.iter().zip(o.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `o / self`, assuming divisibility.
    #[inline]
    pub fn quotient_of(&self, o: &Monomial) -> Monomial {
        debug_assert!(self.divides(o));
        let mut exps = o.exps;
        for (a, b) in exps.iter_mut().zip(self.exps.iter()) {
            *a -= *b;
        }
        Monomial {
            exps,
            nvars: self.nvars,
            deg: o.deg - self.deg,
            mask: mask_of(&exps),
        }
    }

    pub fn div(&self, o: &Monomial) -> Option<Monomial> {
        o.divides(self).then(|| o.quotient_of(self))
    }

    pub fn lcm(&self, o: &Monomial) -> Monomial {
        let mut exps = self.exps;
        let mut deg = 0;
        for (a, b) in exps.iter_mut().zip(o.exps.iter()) {
            *a = (*a).max(*b);
            deg += *a as u32;
        }
        Monomial {
            exps,
            nvars: self.nvars,
            deg,
            mask: self.mask | o.mask,
        }
    }

    pub fn gcd_is_one(&self, o: &Monomial) -> bool {
        self.mask & o.mask & ((1 << MAX_VARS) - 1) == 0
    }

    /// Copy into a ring with a different variable count, dropping or padding
    /// trailing variables. Dropped variables must have exponent zero.
    pub fn with_nvars(&self, nvars: usize) -> Monomial {
        let e: Vec<u32> = (0..nvars)
            .map(|i| if i < MAX_VARS { self.exps[i] as u32 } else { 0 })
            .collect();
        debug_assert!(self.exps[nvars.min(MAX_VARS)..].iter().all(|&x| x == 0));
        Monomial::from_exponents(&e)
    }

    /// All monomials of the given degree in `nvars` variables, in
    /// descending grevlex order.
    pub fn all_of_degree(nvars: usize, deg: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; nvars];
        fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            let n = cur.len();
            if i + 1 == n {
                cur[i] = left;
                out.push(Monomial::from_exponents(cur));
                return;
            }
            for e in (0..=left).rev() {
                cur[i] = e;
                rec(i + 1, left - e, cur, out);
            }
            cur[i] = 0;
        }
        if nvars == 0 {
            if deg == 0 {
                out.push(Monomial::one(0));
            }
            return out;
        }
        rec(0, deg, &mut cur, &mut out);
        out.sort_by(|a, b| MonomialOrder::Grevlex.cmp(b, a));
        out
    }
}

#[inline]
fn mask_of_overlap(a: &[u16; MAX_VARS], b: &[u16; MAX_VARS]) -> u32 {
    // exponents that become >= 2 only through the product
    let mut m = 0u32;
    for i in 0..MAX_VARS {
        if a[i] > 0 && b[i] > 0 {
            m |= 1 << (i + MAX_VARS);
        }
    }
    m
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for i in 0..self.nvars() {
            let e = self.exps[i];
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Monomial orders. Both compare total degree first when used inside the
/// module orders of the Gröbner engine; `Lex` on its own is pure lex.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    #[default]
    Grevlex,
    Lex,
}

impl MonomialOrder {
    /// Comparison assuming equal variable counts.
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Grevlex => {
                if a.deg != b.deg {
                    return a.deg.cmp(&b.deg);
                }
                for i in (0..a.nvars()).rev() {
                    if a.exps[i] != b.exps[i] {
                        return b.exps[i].cmp(&a.exps[i]);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
        }
    }

    /// Checked comparison.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars != b.nvars {
            return Err(Error::VariableMismatch(a.nvars(), b.nvars()));
        }
        Ok(self.cmp(a, b))
    }

    /// Comparison of monomials of equal degree.
    #[inline]
    pub fn cmp_same_degree(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Grevlex => {
                for i in (0..a.nvars()).rev() {
                    if a.exps[i] != b.exps[i] {
                        return b.exps[i].cmp(&a.exps[i]);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn grevlex_examples() {
        let o = MonomialOrder::Grevlex;
        assert_eq!(o.compare(&m(&[2, 0]), &m(&[1, 1])).unwrap(), Ordering::Greater);
        assert_eq!(o.compare(&m(&[1, 0]), &m(&[0, 2])).unwrap(), Ordering::Less);
        assert_eq!(o.compare(&m(&[1, 3]), &m(&[1, 3])).unwrap(), Ordering::Equal);
        // x z vs y^2: last variable z present in xz makes it smaller
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert!(o.compare(&m(&[1]), &m(&[1, 0])).is_err());
    }

    #[test]
    fn lex_examples() {
        let o = MonomialOrder::Lex;
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 1, 0]), &m(&[1, 0, 3])), Ordering::Greater);
    }

    #[test]
    fn divisibility_and_lcm() {
        let a = m(&[1, 2, 0]);
        let b = m(&[2, 2, 1]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.quotient_of(&b), m(&[1, 0, 1]));
        assert_eq!(a.lcm(&m(&[0, 3, 1])), m(&[1, 3, 1]));
        assert!(m(&[1, 0]).gcd_is_one(&m(&[0, 4])));
        assert!(!m(&[2, 0]).divides(&m(&[1, 5])));
    }

    #[test]
    fn monomials_of_degree() {
        let all = Monomial::all_of_degree(3, 2);
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], m(&[2, 0, 0]));
        assert_eq!(all[5], m(&[0, 0, 2]));
        assert_eq!(Monomial::all_of_degree(2, 0), vec![m(&[0, 0])]);
    }

    fn arb_mono() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..4, 3).prop_map(|e| Monomial::from_exponents(&e))
    }

    proptest! {
        #[test]
        fn orders_are_total_and_multiplicative(a in arb_mono(), b in arb_mono(), c in arb_mono()) {
            for o in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
                prop_assert_eq!(o.cmp(&a, &b), o.cmp(&b, &a).reverse());
                if o.cmp(&a, &b) != Ordering::Greater && o.cmp(&b, &c) != Ordering::Greater {
                    prop_assert!(o.cmp(&a, &c) != Ordering::Greater);
                }
                prop_assert_eq!(o.cmp(&a, &b), o.cmp(&a.mul(&c), &b.mul(&c)));
                prop_assert_eq!(o.cmp(&a, &b) == Ordering::Equal, a == b);
            }
        }

        #[test]
        fn mask_is_consistent(a in arb_mono(), b in arb_mono()) {
            let p = a.mul(&b);
            prop_assert_eq!(p, Monomial::from_exponents(&p.exponents()));
            let naive = a.exponents().iter().zip(b.exponents()).all(|(x, y)| *x <= y);
            prop_assert_eq!(a.divides(&b), naive);
        }
    }
}
