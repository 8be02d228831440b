//! Sparse multivariate polynomials, terms sorted descending in grevlex.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::{Monomial, MonomialOrder};

/// A polynomial over `F` in a fixed number of variables.
///
/// Terms are kept sorted descending in grevlex with no zero coefficients,
/// so the leading term is `terms[0]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<F: Field> {
    nvars: usize,
    terms: Vec<(Monomial, F::Elem)>,
}

const ORD: MonomialOrder = MonomialOrder::Grevlex;

impl<F: Field> Polynomial<F> {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: Vec::new(),
        }
    }

    /// Builds from arbitrary terms: sorts, merges duplicates, drops zeros.
    pub fn from_terms(field: &F, nvars: usize, mut terms: Vec<(Monomial, F::Elem)>) -> Self {
        terms.sort_by(|a, b| ORD.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, F::Elem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), nvars);
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = field.add(lc, &c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !field.is_zero(c));
        Polynomial { nvars, terms: out }
    }

    /// Wraps already sorted, merged, zero-free terms.
    pub(crate) fn from_sorted(nvars: usize, terms: Vec<(Monomial, F::Elem)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ORD.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        Polynomial { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, F::Elem)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(Monomial, F::Elem)> {
        self.terms.first()
    }

    /// Total degree when all terms share it; `None` for zero or mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.terms.first()?.0.degree();
        self.terms.iter().all(|(m, _)| m.degree() == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// Coefficient of `m`, zero if absent.
    pub fn coefficient(&self, field: &F, m: &Monomial) -> F::Elem {
        match self.terms.binary_search_by(|(t, _)| ORD.cmp(m, t)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => field.zero(),
        }
    }

    /// The constant term.
    pub fn constant_term(&self, field: &F) -> F::Elem {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => field.zero(),
        }
    }

    pub fn format(&self, field: &F) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let cs = field.format(c);
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(r) => (true, r.to_string()),
                None => (false, cs),
            };
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                s.push_str(&mag);
            } else {
                if mag != "1" {
                    s.push_str(&mag);
                    s.push('*');
                }
                s.push_str(&m.to_string());
            }
        }
        s
    }
}

/// Polynomial ring `F[x_1..x_n]`: carries the field and variable count for
/// arithmetic.
#[derive(Clone, Debug)]
pub struct PolyRing<F: Field> {
    pub field: F,
    pub nvars: usize,
}

impl<F: Field> PolyRing<F> {
    pub fn new(field: F, nvars: usize) -> Self {
        assert!(nvars <= crate::monomial::MAX_VARS);
        PolyRing { field, nvars }
    }

    pub fn zero(&self) -> Polynomial<F> {
        Polynomial::zero(self.nvars)
    }

    pub fn one(&self) -> Polynomial<F> {
        self.constant(self.field.one())
    }

    pub fn constant(&self, c: F::Elem) -> Polynomial<F> {
        self.term(Monomial::one(self.nvars), c)
    }

    pub fn term(&self, m: Monomial, c: F::Elem) -> Polynomial<F> {
        if self.field.is_zero(&c) {
            return self.zero();
        }
        Polynomial::from_sorted(self.nvars, vec![(m, c)])
    }

    pub fn var(&self, i: usize) -> Polynomial<F> {
        self.term(Monomial::var(self.nvars, i), self.field.one())
    }

    /// The linear form `Σ c_i x_i`.
    pub fn linear_form(&self, coeffs: &[F::Elem]) -> Polynomial<F> {
        let terms = coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| (Monomial::var(self.nvars, i), c.clone()))
            .collect();
        Polynomial::from_terms(&self.field, self.nvars, terms)
    }

    pub fn from_terms(&self, terms: Vec<(Monomial, F::Elem)>) -> Polynomial<F> {
        Polynomial::from_terms(&self.field, self.nvars, terms)
    }

    fn check(&self, a: &Polynomial<F>) -> Result<()> {
        if a.nvars != self.nvars {
            return Err(Error::VariableMismatch(a.nvars, self.nvars));
        }
        Ok(())
    }

    /// `a + c·m·b`, the workhorse of all linear combinations.
    pub fn add_scaled(&self, a: &Polynomial<F>, c: &F::Elem, m: &Monomial, b: &Polynomial<F>) -> Polynomial<F> {
        let f = &self.field;
        if f.is_zero(c) || b.is_zero() {
            return a.clone();
        }
        let mut out = Vec::with_capacity(a.len() + b.len());
        let mut i = 0;
        let mut bi = b.terms.iter().map(|(bm, bc)| (bm.mul(m), f.mul(bc, c))).peekable();
        while i < a.terms.len() || bi.peek().is_some() {
            let ord = match (a.terms.get(i), bi.peek()) {
                (Some(x), Some(y)) => ORD.cmp(&x.0, &y.0),
                (Some(_), None) => Ordering::Greater,
                (None, _) => Ordering::Less,
            };
            match ord {
                Ordering::Greater => {
                    out.push(a.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => out.push(bi.next().unwrap()),
                Ordering::Equal => {
                    let (mm, bc) = bi.next().unwrap();
                    let s = f.add(&a.terms[i].1, &bc);
                    if !f.is_zero(&s) {
                        out.push((mm, s));
                    }
                    i += 1;
                }
            }
        }
        Polynomial::from_sorted(self.nvars, out)
    }

    pub fn add(&self, a: &Polynomial<F>, b: &Polynomial<F>) -> Polynomial<F> {
        self.add_scaled(a, &self.field.one(), &Monomial::one(self.nvars), b)
    }

    pub fn sub(&self, a: &Polynomial<F>, b: &Polynomial<F>) -> Polynomial<F> {
        let m1 = self.field.neg(&self.field.one());
        self.add_scaled(a, &m1, &Monomial::one(self.nvars), b)
    }

    pub fn neg(&self, a: &Polynomial<F>) -> Polynomial<F> {
        self.scale(a, &self.field.neg(&self.field.one()))
    }

    pub fn scale(&self, a: &Polynomial<F>, c: &F::Elem) -> Polynomial<F> {
        if self.field.is_zero(c) {
            return self.zero();
        }
        let terms = a.terms.iter().map(|(m, x)| (*m, self.field.mul(x, c))).collect();
        Polynomial::from_sorted(self.nvars, terms)
    }

    pub fn mul_term(&self, a: &Polynomial<F>, m: &Monomial, c: &F::Elem) -> Polynomial<F> {
        if self.field.is_zero(c) {
            return self.zero();
        }
        let terms = a
            .terms
            .iter()
            .map(|(am, x)| (am.mul(m), self.field.mul(x, c)))
            .collect();
        Polynomial::from_sorted(self.nvars, terms)
    }

    pub fn mul(&self, a: &Polynomial<F>, b: &Polynomial<F>) -> Polynomial<F> {
        let (small, big) = if a.len() <= b.len() { (a, b) } else { (b, a) };
        let mut acc = self.zero();
        for (m, c) in &small.terms {
            acc = self.add_scaled(&acc, c, m, big);
        }
        acc
    }

    /// Checked product.
    pub fn try_mul(&self, a: &Polynomial<F>, b: &Polynomial<F>) -> Result<Polynomial<F>> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    pub fn pow(&self, a: &Polynomial<F>, e: u32) -> Polynomial<F> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Exact quotient `a / b`; [`Error::NotDivisible`] when `b ∤ a`.
    pub fn exact_divide(&self, a: &Polynomial<F>, b: &Polynomial<F>) -> Result<Polynomial<F>> {
        self.check(a)?;
        self.check(b)?;
        let (bm, bc) = b
            .leading()
            .ok_or_else(|| Error::invalid("division by zero polynomial"))?;
        let binv = self.field.inv(bc);
        let mut rem = a.clone();
        let mut q = Vec::new();
        while let Some((rm, rc)) = rem.leading().cloned() {
            let qm = rm.div(bm).ok_or(Error::NotDivisible)?;
            let qc = self.field.mul(&rc, &binv);
            rem = self.add_scaled(&rem, &self.field.neg(&qc), &qm, b);
            q.push((qm, qc));
        }
        Ok(Polynomial::from_sorted(self.nvars, q))
    }

    pub fn partial_derivative(&self, a: &Polynomial<F>, i: usize) -> Polynomial<F> {
        let terms = a
            .terms
            .iter()
            .filter(|(m, _)| m.exponent(i) > 0)
            .map(|(m, c)| {
                let e = m.exponent(i);
                let q = Monomial::var(self.nvars, i).quotient_of(m);
                (q, self.field.mul(c, &self.field.from_i64(e as i64)))
            })
            .collect();
        self.from_terms(terms)
    }

    /// Substitutes polynomials for all variables.
    pub fn substitute(&self, a: &Polynomial<F>, images: &[Polynomial<F>], target: &PolyRing<F>) -> Polynomial<F> {
        assert_eq!(images.len(), self.nvars);
        let mut acc = target.zero();
        for (m, c) in &a.terms {
            let mut t = target.constant(c.clone());
            for (i, img) in images.iter().enumerate() {
                for _ in 0..m.exponent(i) {
                    t = target.mul(&t, img);
                }
            }
            acc = target.add(&acc, &t);
        }
        acc
    }

    /// Re-embeds into a ring with a different variable count; variables past
    /// the smaller count must not occur.
    pub fn change_nvars(&self, a: &Polynomial<F>, target: &PolyRing<F>) -> Polynomial<F> {
        let terms = a
            .terms
            .iter()
            .map(|(m, c)| (m.with_nvars(target.nvars), c.clone()))
            .collect();
        target.from_terms(terms)
    }
}
