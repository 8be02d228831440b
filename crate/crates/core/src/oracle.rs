//! Hilbert functions of the logarithmic modules by plain linear algebra in
//! one degree at a time, independent of the Gröbner engine.
//!
//! An element of `Λ^p S^ℓ` whose coefficients have polynomial degree `k` is
//! a coefficient vector over pairs (basis subset, monomial of degree `k`).
//! Each defining condition is a linear map on that space; a condition
//! "`≡ 0 mod α_H`" is imposed by eliminating the first variable occurring in
//! `α_H` and asking for the result to vanish.

use std::collections::HashMap;

use crate::arrangement::exterior::{contract_covector, wedge_covector, wedge_index, ExteriorBasis};
use crate::arrangement::{Arrangement, Role};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;
use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial};

/// Coordinates of a degree-`k` slice of `Λ^p S^ℓ`.
struct Slice {
    basis: ExteriorBasis,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl Slice {
    fn new(nvars: usize, p: usize, k: u32) -> Self {
        let monomials = Monomial::all_of_degree(nvars, k);
        let index = monomials.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        Slice {
            basis: ExteriorBasis::new(nvars, p),
            monomials,
            index,
        }
    }

    fn dim(&self) -> usize {
        self.basis.rank() * self.monomials.len()
    }

    fn unknown(&self, u: usize) -> (&[usize], Monomial) {
        let nm = self.monomials.len();
        (&self.basis.subsets[u / nm], self.monomials[u % nm])
    }

    fn coord(&self, subset: &[usize], m: &Monomial) -> usize {
        self.basis.index(subset) * self.monomials.len() + self.index[m]
    }
}

/// Rows keyed by arbitrary condition labels, filled column by column.
struct ConditionMatrix<F: Field> {
    rows: HashMap<(usize, usize, Monomial), usize>,
    entries: Vec<(usize, usize, F::Elem)>,
    cols: usize,
}

impl<F: Field> ConditionMatrix<F> {
    fn new(cols: usize) -> Self {
        ConditionMatrix {
            rows: HashMap::new(),
            entries: Vec::new(),
            cols,
        }
    }

    fn add(&mut self, field: &F, col: usize, key: (usize, usize, Monomial), c: F::Elem) {
        if field.is_zero(&c) {
            return;
        }
        let n = self.rows.len();
        let r = *self.rows.entry(key).or_insert(n);
        self.entries.push((r, col, c));
    }

    fn into_matrix(self, field: &F) -> Matrix<F> {
        let mut m = Matrix::zeros(field, self.rows.len(), self.cols);
        for (r, c, v) in self.entries {
            let cur = field.add(m.get(r, c), &v);
            m.set(r, c, cur);
        }
        m
    }
}

/// Reduction modulo a linear form by eliminating one variable.
struct ModForm<F: Field> {
    images: Vec<Polynomial<F>>,
    cache: HashMap<Monomial, Polynomial<F>>,
}

impl<F: Field> ModForm<F> {
    fn new(ring: &PolyRing<F>, form: &[F::Elem]) -> Self {
        let field = &ring.field;
        let piv = form.iter().position(|c| !field.is_zero(c)).expect("nonzero form");
        let inv = field.neg(&field.inv(&form[piv]));
        let images = (0..ring.nvars)
            .map(|i| {
                if i != piv {
                    return ring.var(i);
                }
                let coeffs: Vec<F::Elem> = form
                    .iter()
                    .enumerate()
                    .map(|(j, c)| if j == piv { field.zero() } else { field.mul(c, &inv) })
                    .collect();
                ring.linear_form(&coeffs)
            })
            .collect();
        ModForm {
            images,
            cache: HashMap::new(),
        }
    }

    fn reduce(&mut self, ring: &PolyRing<F>, m: Monomial) -> &Polynomial<F> {
        let images = &self.images;
        self.cache
            .entry(m)
            .or_insert_with(|| ring.substitute(&ring.term(m, ring.field.one()), images, ring))
    }
}

fn poly_degree(role: Role, p: usize, n: usize, d: i64) -> i64 {
    match role {
        Role::D | Role::D0 => d + p as i64,
        Role::FOmega | Role::FOmega0 => d - p as i64 + n as i64,
        Role::SyzJacobian => d + 1,
    }
}

/// The condition matrix of `D_p` on the slice (columns = unknowns).
fn derivation_conditions<F: Field>(a: &Arrangement<F>, slice: &Slice, p: usize) -> Matrix<F> {
    let ring = a.ring();
    let field = &a.field;
    let mut cm = ConditionMatrix::new(slice.dim());
    if p > 0 {
        let lower = ExteriorBasis::new(a.nvars, p - 1);
        for (h, form) in a.forms.iter().enumerate() {
            let mut md = ModForm::new(&ring, form);
            for u in 0..slice.dim() {
                let (j, m) = slice.unknown(u);
                for (c, sub) in contract_covector(field, form, j) {
                    let t = lower.index(&sub);
                    for (mm, k) in md.reduce(&ring, m).terms() {
                        cm.add(field, u, (h, t, *mm), field.mul(&c, k));
                    }
                }
            }
        }
    }
    cm.into_matrix(field)
}

/// The condition matrix of `fΩ^p`, plus `ι_χ = 0` when `relative`.
fn form_conditions<F: Field>(a: &Arrangement<F>, slice: &Slice, p: usize, relative: bool) -> Matrix<F> {
    let ring = a.ring();
    let field = &a.field;
    let mut cm = ConditionMatrix::new(slice.dim());
    if p < a.nvars {
        let upper = ExteriorBasis::new(a.nvars, p + 1);
        for (h, form) in a.forms.iter().enumerate() {
            let mut md = ModForm::new(&ring, form);
            for u in 0..slice.dim() {
                let (j, m) = slice.unknown(u);
                for (c, sub) in wedge_covector(field, form, j) {
                    let t = upper.index(&sub);
                    for (mm, k) in md.reduce(&ring, m).terms() {
                        cm.add(field, u, (h, t, *mm), field.mul(&c, k));
                    }
                }
            }
        }
    }
    if relative && p > 0 {
        let lower = ExteriorBasis::new(a.nvars, p - 1);
        let key = a.len();
        for u in 0..slice.dim() {
            let (j, m) = slice.unknown(u);
            for (pos, &jk) in j.iter().enumerate() {
                let mut rest = j.to_vec();
                rest.remove(pos);
                let c = if pos % 2 == 0 {
                    field.one()
                } else {
                    field.neg(&field.one())
                };
                let mm = m.mul(&Monomial::var(a.nvars, jk));
                cm.add(field, u, (key, lower.index(&rest), mm), c);
            }
        }
    }
    cm.into_matrix(field)
}

fn kernel_dim<F: Field>(field: &F, m: &Matrix<F>) -> usize {
    m.cols - m.rank(field)
}

/// `dim_K M_d` for the module `role` of `a`, computed from scratch.
pub fn dimension<F: Field>(a: &Arrangement<F>, role: Role, p: usize, d: i64) -> Result<usize> {
    let n = a.len();
    let l = a.nvars;
    if role != Role::SyzJacobian && p > l {
        return Ok(0);
    }
    let k = poly_degree(role, p, n, d);
    if k < 0 {
        return Ok(0);
    }
    let k = u32::try_from(k).map_err(|_| Error::invalid("degree out of range"))?;
    let field = &a.field;
    match role {
        Role::D => {
            let slice = Slice::new(l, p, k);
            Ok(kernel_dim(field, &derivation_conditions(a, &slice, p)))
        }
        Role::FOmega | Role::FOmega0 => {
            let slice = Slice::new(l, p, k);
            Ok(kernel_dim(field, &form_conditions(a, &slice, p, role == Role::FOmega0)))
        }
        Role::SyzJacobian => {
            a.require_good_characteristic()?;
            let ring = a.ring();
            let f = a.defining_polynomial();
            let slice = Slice::new(l, 1, k);
            let mut cm = ConditionMatrix::new(slice.dim());
            let partials: Vec<Polynomial<F>> = (0..l).map(|i| ring.partial_derivative(&f, i)).collect();
            for u in 0..slice.dim() {
                let (j, m) = slice.unknown(u);
                for (mm, c) in partials[j[0]].terms() {
                    cm.add(field, u, (0, 0, mm.mul(&m)), c.clone());
                }
            }
            Ok(kernel_dim(field, &cm.into_matrix(field)))
        }
        Role::D0 => {
            let slice = Slice::new(l, p, k);
            let top = kernel_dim(field, &derivation_conditions(a, &slice, p));
            if p == 0 || k == 0 {
                return Ok(top);
            }
            let lower = Slice::new(l, p - 1, k - 1);
            let null = derivation_conditions(a, &lower, p - 1).nullspace(field);
            let mut rows = Vec::with_capacity(null.len());
            for v in &null {
                let mut img = vec![field.zero(); slice.dim()];
                for (u, c) in v.iter().enumerate() {
                    if field.is_zero(c) {
                        continue;
                    }
                    let (j, m) = lower.unknown(u);
                    for i in 0..l {
                        if let Some((s, sub)) = wedge_index(i, j) {
                            let mm = m.mul(&Monomial::var(l, i));
                            let t = slice.coord(&sub, &mm);
                            let term = if s > 0 { c.clone() } else { field.neg(c) };
                            img[t] = field.add(&img[t], &term);
                        }
                    }
                }
                rows.push(img);
            }
            let rank = if rows.is_empty() {
                0
            } else {
                Matrix::from_rows(field, rows, slice.dim()).rank(field)
            };
            Ok(top - rank)
        }
    }
}

/// `(d, dim M_d)` for `lo ≤ d ≤ hi`.
pub fn table<F: Field>(a: &Arrangement<F>, role: Role, p: usize, lo: i64, hi: i64) -> Result<Vec<(i64, usize)>> {
    (lo..=hi).map(|d| Ok((d, dimension(a, role, p, d)?))).collect()
}
