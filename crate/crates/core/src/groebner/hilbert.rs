//! Hilbert series of monomial quotients by pivot recursion.

use crate::laurent::{HilbertSeries, LaurentPoly};
use crate::monomial::Monomial;

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|o| o.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Numerator `N` with `h(S/I) = N(t)/(1−t)^nvars` for the monomial ideal
/// generated by `gens`.
pub fn monomial_numerator(gens: &[Monomial], nvars: usize) -> LaurentPoly {
    numerator_rec(minimalize(gens.to_vec()), nvars)
}

fn numerator_rec(gens: Vec<Monomial>, nvars: usize) -> LaurentPoly {
    if gens.is_empty() {
        return LaurentPoly::one();
    }
    if gens.iter().any(|g| g.is_one()) {
        return LaurentPoly::zero();
    }
    let mut counts = vec![0usize; nvars];
    for g in &gens {
        for (i, c) in counts.iter_mut().enumerate() {
            if g.exponent(i) > 0 {
                *c += 1;
            }
        }
    }
    let (var, &best) = counts
        .iter()
        .enumerate()
        .max_by_key(|&(i, c)| (*c, std::cmp::Reverse(i)))
        .unwrap();
    if best <= 1 {
        // pairwise coprime generators
        return gens.iter().fold(LaurentPoly::one(), |acc, g| {
            acc.mul(&LaurentPoly::one().sub(&LaurentPoly::monomial(g.degree() as i32, 1)))
        });
    }
    let e = gens.iter().map(|g| g.exponent(var)).filter(|&x| x > 0).min().unwrap();
    let mut pe = vec![0u32; nvars];
    pe[var] = e;
    let pivot = Monomial::from_exponents(&pe);

    // I + (p)
    let mut plus: Vec<Monomial> = gens.iter().filter(|g| !pivot.divides(g)).copied().collect();
    plus.push(pivot);
    // I : p
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let mut x = g.exponents();
            x[var] = x[var].saturating_sub(e);
            Monomial::from_exponents(&x)
        })
        .collect();
    numerator_rec(minimalize(plus), nvars).add(&numerator_rec(minimalize(colon), nvars).shift(e as i32))
}

/// `h(F/M)` where the lead terms of a Gröbner basis of `M` are `leads`
/// (monomial, component) and `F` has basis degrees `degrees`.
pub fn quotient_series(leads: &[(Monomial, u32)], degrees: &[i32], nvars: usize) -> HilbertSeries {
    let mut num = LaurentPoly::zero();
    for (c, &d) in degrees.iter().enumerate() {
        let gens: Vec<Monomial> = leads
            .iter()
            .filter(|(_, lc)| *lc as usize == c)
            .map(|(m, _)| *m)
            .collect();
        num = num.add(&monomial_numerator(&gens, nvars).shift(d));
    }
    HilbertSeries::new(num, nvars as u32)
}
