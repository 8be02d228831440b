//! Exterior powers `Λ^p(S^ℓ)` with basis indexed by sorted `p`-subsets in
//! colexicographic order, and the contraction/wedge maps used to define the
//! logarithmic modules.

use crate::field::Field;
use crate::linalg::{binomial, subsets_colex};
use crate::module::FreeVector;
use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial};

/// Colex rank of a sorted subset.
pub fn colex_rank(s: &[usize]) -> usize {
    s.iter()
        .enumerate()
        .map(|(k, &j)| binomial(j as u64, k as u64 + 1) as usize)
        .sum()
}

/// Basis bookkeeping for `Λ^p` of a rank-`n` free module.
#[derive(Clone, Debug)]
pub struct ExteriorBasis {
    pub n: usize,
    pub p: usize,
    pub subsets: Vec<Vec<usize>>,
}

impl ExteriorBasis {
    pub fn new(n: usize, p: usize) -> Self {
        ExteriorBasis {
            n,
            p,
            subsets: subsets_colex(n, p),
        }
    }

    pub fn rank(&self) -> usize {
        self.subsets.len()
    }

    pub fn index(&self, s: &[usize]) -> usize {
        colex_rank(s)
    }
}

/// `e_i ∧ e_J` as `(sign, sorted subset)`, or `None` when `i ∈ J`.
pub fn wedge_index(i: usize, j: &[usize]) -> Option<(i64, Vec<usize>)> {
    if j.contains(&i) {
        return None;
    }
    let before = j.iter().filter(|&&x| x < i).count();
    let mut s = j.to_vec();
    s.insert(before, i);
    Some((if before % 2 == 0 { 1 } else { -1 }, s))
}

/// `e_I ∧ e_J` for sorted subsets: the sign and merged subset, or `None` if
/// they meet.
pub fn wedge_subsets(a: &[usize], b: &[usize]) -> Option<(i64, Vec<usize>)> {
    let mut sign = 1i64;
    let mut cur = b.to_vec();
    for &i in a.iter().rev() {
        let (s, next) = wedge_index(i, &cur)?;
        sign *= s;
        cur = next;
    }
    Some((sign, cur))
}

/// Contraction of the covector `a` into `e_J`:
/// `Σ_k (−1)^k a_{j_k} e_{J∖j_k}` as `(coefficient, subset)` pairs.
pub fn contract_covector<F: Field>(field: &F, a: &[F::Elem], j: &[usize]) -> Vec<(F::Elem, Vec<usize>)> {
    let mut out = Vec::new();
    for (k, &jk) in j.iter().enumerate() {
        if field.is_zero(&a[jk]) {
            continue;
        }
        let mut rest = j.to_vec();
        rest.remove(k);
        let c = if k % 2 == 0 { a[jk].clone() } else { field.neg(&a[jk]) };
        out.push((c, rest));
    }
    out
}

/// `α ∧ e_J` for the linear 1-form with coefficient vector `a`.
pub fn wedge_covector<F: Field>(field: &F, a: &[F::Elem], j: &[usize]) -> Vec<(F::Elem, Vec<usize>)> {
    let mut out = Vec::new();
    for (i, ai) in a.iter().enumerate() {
        if field.is_zero(ai) {
            continue;
        }
        if let Some((s, sub)) = wedge_index(i, j) {
            out.push((if s > 0 { ai.clone() } else { field.neg(ai) }, sub));
        }
    }
    out
}

/// Applies a constant-coefficient map given on basis elements to a vector in
/// `Λ^p`, landing in a module of rank `target.rank()`.
pub fn apply_constant_map<F: Field>(
    ring: &PolyRing<F>,
    source: &ExteriorBasis,
    target: &ExteriorBasis,
    v: &FreeVector<F>,
    image: impl Fn(&[usize]) -> Vec<(F::Elem, Vec<usize>)>,
) -> FreeVector<F> {
    let mut acc: Vec<Vec<(Monomial, F::Elem)>> = vec![Vec::new(); target.rank()];
    for (idx, p) in v.comps.iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        for (c, sub) in image(&source.subsets[idx]) {
            let t = target.index(&sub);
            for (m, k) in p.terms() {
                acc[t].push((*m, ring.field.mul(k, &c)));
            }
        }
    }
    FreeVector::new(acc.into_iter().map(|ts| ring.from_terms(ts)).collect())
}

/// Contraction with the Euler field `χ = Σ x_i ∂_i` on `Λ^p` of the forms:
/// `ι_χ(dx_J) = Σ_k (−1)^k x_{j_k} dx_{J∖j_k}`.
pub fn euler_contraction<F: Field>(
    ring: &PolyRing<F>,
    source: &ExteriorBasis,
    target: &ExteriorBasis,
    v: &FreeVector<F>,
) -> FreeVector<F> {
    let mut out = FreeVector::zero(ring.nvars, target.rank());
    let one = ring.field.one();
    for (idx, p) in v.comps.iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        let j = &source.subsets[idx];
        for (k, &jk) in j.iter().enumerate() {
            let mut rest = j.clone();
            rest.remove(k);
            let t = target.index(&rest);
            let c = if k % 2 == 0 { one.clone() } else { ring.field.neg(&one) };
            out.comps[t] = ring.add_scaled(&out.comps[t], &c, &Monomial::var(ring.nvars, jk), p);
        }
    }
    out
}

/// `χ ∧ θ` for `θ ∈ Λ^p`, landing in `Λ^{p+1}`.
pub fn euler_wedge<F: Field>(
    ring: &PolyRing<F>,
    source: &ExteriorBasis,
    target: &ExteriorBasis,
    v: &FreeVector<F>,
) -> FreeVector<F> {
    let mut out = FreeVector::zero(ring.nvars, target.rank());
    let one = ring.field.one();
    for (idx, p) in v.comps.iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        let j = &source.subsets[idx];
        for i in 0..ring.nvars {
            if let Some((s, sub)) = wedge_index(i, j) {
                let t = target.index(&sub);
                let c = if s > 0 { one.clone() } else { ring.field.neg(&one) };
                out.comps[t] = ring.add_scaled(&out.comps[t], &c, &Monomial::var(ring.nvars, i), p);
            }
        }
    }
    out
}

/// Wedge product of `u ∈ Λ^a` and `v ∈ Λ^b`.
pub fn wedge<F: Field>(
    ring: &PolyRing<F>,
    ba: &ExteriorBasis,
    bb: &ExteriorBasis,
    target: &ExteriorBasis,
    u: &FreeVector<F>,
    v: &FreeVector<F>,
) -> FreeVector<F> {
    let mut out: Vec<Polynomial<F>> = (0..target.rank()).map(|_| ring.zero()).collect();
    for (i, p) in u.comps.iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        for (j, q) in v.comps.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            if let Some((s, sub)) = wedge_subsets(&ba.subsets[i], &bb.subsets[j]) {
                let t = target.index(&sub);
                let prod = ring.mul(p, q);
                out[t] = if s > 0 {
                    ring.add(&out[t], &prod)
                } else {
                    ring.sub(&out[t], &prod)
                };
            }
        }
    }
    FreeVector::new(out)
}
