//! Rational generating functions in `s, u, v` whose coefficients are
//! Laurent polynomials in `t`, expanded by truncated power-series division.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::{HilbertSeries, LaurentPoly};

/// Exponents of `(s, u, v)`.
pub type Exps = [u32; 3];

/// A polynomial in `s, u, v` over `Z[t, t^{-1}]`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GfPoly {
    terms: BTreeMap<Exps, LaurentPoly>,
}

impl GfPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term([0, 0, 0], LaurentPoly::one())
    }

    pub fn term(e: Exps, c: LaurentPoly) -> Self {
        let mut p = Self::zero();
        p.add_term(e, &c);
        p
    }

    /// `c · t^k · s^a u^b v^c` for integer `c`.
    pub fn monomial(c: i64, t: i32, e: Exps) -> Self {
        Self::term(e, LaurentPoly::monomial(t, c))
    }

    fn add_term(&mut self, e: Exps, c: &LaurentPoly) {
        let cur = self.terms.remove(&e).unwrap_or_default().add(c);
        if !cur.is_zero() {
            self.terms.insert(e, cur);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        GfPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c.neg())).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    /// Product, dropping terms beyond `trunc` when given.
    pub fn mul_trunc(&self, o: &Self, trunc: Option<Exps>) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                let e = [a[0] + b[0], a[1] + b[1], a[2] + b[2]];
                if let Some(t) = trunc {
                    if e[0] > t[0] || e[1] > t[1] || e[2] > t[2] {
                        continue;
                    }
                }
                out.add_term(e, &ca.mul(cb));
            }
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.mul_trunc(o, None)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    pub fn coefficient(&self, e: Exps) -> LaurentPoly {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Truncated inverse; the constant term must be `±t^k`.
    pub fn inverse_trunc(&self, trunc: Exps) -> Result<Self> {
        let c0 = self.coefficient([0, 0, 0]);
        let t = c0.terms();
        if t.len() != 1 || t[0].1.abs() != 1 {
            return Err(Error::invalid(format!(
                "constant term {c0} is not a unit in Z[t, t^-1]"
            )));
        }
        let inv0 = LaurentPoly::monomial(-t[0].0, t[0].1);
        let rest: Vec<(Exps, LaurentPoly)> = self
            .terms
            .iter()
            .filter(|(e, _)| **e != [0, 0, 0])
            .map(|(e, c)| (*e, c.clone()))
            .collect();
        // g·d = 1 solved coefficient by coefficient in graded order
        let mut g: BTreeMap<Exps, LaurentPoly> = BTreeMap::new();
        for a in 0..=trunc[0] {
            for b in 0..=trunc[1] {
                for c in 0..=trunc[2] {
                    let e = [a, b, c];
                    let mut acc = if e == [0, 0, 0] {
                        LaurentPoly::one()
                    } else {
                        LaurentPoly::zero()
                    };
                    for (d, dc) in &rest {
                        if d[0] <= a && d[1] <= b && d[2] <= c {
                            if let Some(gc) = g.get(&[a - d[0], b - d[1], c - d[2]]) {
                                acc = acc.sub(&dc.mul(gc));
                            }
                        }
                    }
                    let val = acc.mul(&inv0);
                    if !val.is_zero() {
                        g.insert(e, val);
                    }
                }
            }
        }
        Ok(GfPoly { terms: g })
    }
}

fn fmt_coeff(c: &LaurentPoly) -> String {
    let terms = c.terms();
    if terms.len() == 1 {
        c.to_string()
    } else {
        format!("({c})")
    }
}

impl fmt::Display for GfPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut vars = Vec::new();
                for (name, k) in ["s", "u", "v"].iter().zip(e) {
                    match k {
                        0 => {}
                        1 => vars.push(name.to_string()),
                        k => vars.push(format!("{name}^{k}")),
                    }
                }
                if vars.is_empty() {
                    fmt_coeff(c)
                } else if *c == LaurentPoly::one() {
                    vars.join("*")
                } else {
                    format!("{}*{}", fmt_coeff(c), vars.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `numerator / Π factor^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalGF {
    pub numerator: GfPoly,
    pub denominator: Vec<(GfPoly, u32)>,
}

impl RationalGF {
    pub fn denominator_product(&self) -> GfPoly {
        self.denominator
            .iter()
            .fold(GfPoly::one(), |acc, (f, k)| acc.mul(&f.pow(*k)))
    }

    /// All coefficients with exponents up to `trunc`.
    pub fn expand(&self, trunc: Exps) -> Result<Expansion> {
        let mut acc = self.numerator.clone();
        for (f, k) in &self.denominator {
            let inv = f.inverse_trunc(trunc)?;
            for _ in 0..*k {
                acc = acc.mul_trunc(&inv, Some(trunc));
            }
        }
        Ok(Expansion { trunc, poly: acc })
    }

    /// The coefficient of `s^a u^b v^c`.
    pub fn coefficient(&self, e: Exps) -> Result<LaurentPoly> {
        Ok(self.expand(e)?.coefficient(e))
    }
}

impl fmt::Display for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.numerator)?;
        if !self.denominator.is_empty() {
            write!(f, " / (")?;
            for (i, (g, k)) in self.denominator.iter().enumerate() {
                if i > 0 {
                    write!(f, " * ")?;
                }
                if *k == 1 {
                    write!(f, "({g})")?;
                } else {
                    write!(f, "({g})^{k}")?;
                }
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// A truncated expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    pub trunc: Exps,
    pub poly: GfPoly,
}

impl Expansion {
    pub fn coefficient(&self, e: Exps) -> LaurentPoly {
        assert!(
            e[0] <= self.trunc[0] && e[1] <= self.trunc[1] && e[2] <= self.trunc[2],
            "coefficient outside the expanded range"
        );
        self.poly.coefficient(e)
    }

    pub fn nonzero_terms(&self) -> impl Iterator<Item = (&Exps, &LaurentPoly)> {
        self.poly.terms()
    }
}

/// Default truncation orders `s ≤ 10, u ≤ 8, v ≤ 6`.
pub const DEFAULT_TRUNCATION: Exps = [10, 8, 6];

/// Which closed form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClosedForm {
    /// `Q(ℓ, p; s, t) = Σ_n q(ℓ, n, p) s^n`.
    Q { l: u32, p: u32 },
    /// `P(p; s, t, u) = Σ_ℓ Q(ℓ, p) u^ℓ`.
    P { p: u32 },
    /// `T(s, t, u, v) = Σ_p P(p) v^p`.
    T,
}

fn one_minus(p: GfPoly) -> GfPoly {
    GfPoly::one().sub(&p)
}

fn s() -> GfPoly {
    GfPoly::monomial(1, 0, [1, 0, 0])
}

fn st() -> GfPoly {
    GfPoly::monomial(1, 1, [1, 0, 0])
}

fn su() -> GfPoly {
    GfPoly::monomial(1, 0, [1, 1, 0])
}

/// The closed forms for generic arrangements:
/// `Q(ℓ,p) = t^{−p} s^{ℓ+1} / ((1−s)^{p+1} (1−st)^{ℓ−p})`,
/// `P(p) = s^3u^2 / ((1−s)(1−st)(1−st−su)) · (su/(t(1−s)))^p`,
/// `T = s^4u^3v / ((1−s)(1−st)(1−st−su)(t−st−suv))`.
pub fn closed_form(which: ClosedForm) -> Result<RationalGF> {
    match which {
        ClosedForm::Q { l, p } => {
            if l < 3 || p < 1 || p + 2 > l {
                return Err(Error::OutOfRange(format!(
                    "Q(ℓ, p) needs ℓ ≥ 3 and 1 ≤ p ≤ ℓ − 2, got ({l}, {p})"
                )));
            }
            Ok(RationalGF {
                numerator: GfPoly::monomial(1, -(p as i32), [l + 1, 0, 0]),
                denominator: vec![(one_minus(s()), p + 1), (one_minus(st()), l - p)],
            })
        }
        ClosedForm::P { p } => {
            if p < 1 {
                return Err(Error::OutOfRange("P(p) needs p ≥ 1".into()));
            }
            Ok(RationalGF {
                numerator: GfPoly::monomial(1, -(p as i32), [p + 3, p + 2, 0]),
                denominator: vec![
                    (one_minus(s()), p + 1),
                    (one_minus(st()), 1),
                    (one_minus(st().add(&su())), 1),
                ],
            })
        }
        ClosedForm::T => Ok(RationalGF {
            numerator: GfPoly::monomial(1, 0, [4, 3, 1]),
            denominator: vec![
                (one_minus(s()), 1),
                (one_minus(st()), 1),
                (one_minus(st().add(&su())), 1),
                (
                    GfPoly::monomial(1, 1, [0, 0, 0])
                        .sub(&st())
                        .sub(&GfPoly::monomial(1, 0, [1, 1, 1])),
                    1,
                ),
            ],
        }),
    }
}

/// `h(Ext^1(Ω^1_0(A_{n,3}), S))` from the closed form
/// `((n−3)t^{−1} + (1−n) + (n−1)t^{n−3} + (3−n)t^{n−2}) / (1−t)^3`.
pub fn q_rank3(n: u32) -> Result<HilbertSeries> {
    if n < 4 {
        return Err(Error::OutOfRange(format!("rank-3 series needs n ≥ 4, got {n}")));
    }
    let n = n as i64;
    let num = LaurentPoly::from_terms(&[(-1, n - 3), (0, 1 - n), (n as i32 - 3, n - 1), (n as i32 - 2, 3 - n)]);
    let h = HilbertSeries::new(num, 3);
    if h.pole_order() != 0 {
        return Err(Error::internal("rank-3 series did not cancel (1−t)^3"));
    }
    Ok(h)
}

/// `[s^n u^ℓ v^p] T` as a Hilbert series.
pub fn generic_ext_series(n: u32, l: u32, p: u32) -> Result<HilbertSeries> {
    if l < 3 || n <= l || p == 0 || p + 2 > l {
        return Err(Error::OutOfRange(format!(
            "the generic Ext series needs 3 ≤ ℓ < n and 1 ≤ p ≤ ℓ − 2 (n = {n}, ℓ = {l}, p = {p})"
        )));
    }
    let c = closed_form(ClosedForm::T)?.coefficient([n, l, p])?;
    Ok(HilbertSeries::new(c, 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms)
    }

    #[test]
    fn rank3_examples() {
        assert_eq!(q_rank3(4).unwrap().numerator(), &lp(&[(-1, 1)]));
        assert_eq!(q_rank3(5).unwrap().numerator(), &lp(&[(-1, 2), (0, 2)]));
        assert_eq!(q_rank3(6).unwrap().numerator(), &lp(&[(-1, 3), (0, 4), (1, 3)]));
        assert!(q_rank3(3).is_err());
    }

    #[test]
    fn t_coefficients() {
        let t = closed_form(ClosedForm::T).unwrap();
        assert_eq!(t.coefficient([5, 3, 1]).unwrap(), lp(&[(-1, 2), (0, 2)]));
        assert!(t.coefficient([4, 3, 0]).unwrap().is_zero());
        let q31 = closed_form(ClosedForm::Q { l: 3, p: 1 }).unwrap();
        assert_eq!(q31.coefficient([4, 0, 0]).unwrap(), lp(&[(-1, 1)]));
    }

    #[test]
    fn index_checks() {
        assert!(closed_form(ClosedForm::Q { l: 3, p: 2 }).is_err());
        assert!(closed_form(ClosedForm::Q { l: 2, p: 1 }).is_err());
        assert!(closed_form(ClosedForm::P { p: 0 }).is_err());
    }

    #[test]
    fn inverse_of_geometric_factor() {
        let f = one_minus(s());
        let inv = f.inverse_trunc([5, 0, 0]).unwrap();
        for k in 0..=5 {
            assert_eq!(inv.coefficient([k, 0, 0]), LaurentPoly::one());
        }
        let bad = GfPoly::monomial(2, 0, [0, 0, 0]);
        assert!(bad.inverse_trunc([1, 0, 0]).is_err());
    }
}
