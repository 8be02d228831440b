use super::*;
use crate::field::{PrimeField, RationalField};

fn q_ring(n: usize) -> PolyRing<RationalField> {
    PolyRing::new(RationalField, n)
}

fn vec1<F: Field>(p: Polynomial<F>) -> FreeVector<F> {
    FreeVector::new(vec![p])
}

#[test]
fn principal_ideal_basis() {
    let r = q_ring(2);
    let i = ideal(&r, vec![r.var(0)]).unwrap();
    let gb = buchberger(&i, MonomialOrder::Grevlex).unwrap();
    assert_eq!(gb.elements, vec![vec1(r.var(0))]);
    let x2xy = r.add(&r.mul(&r.var(0), &r.var(0)), &r.mul(&r.var(0), &r.var(1)));
    assert!(gb.normal_form(&vec1(x2xy)).unwrap().is_zero());
    assert_eq!(gb.normal_form(&vec1(r.var(1))).unwrap(), vec1(r.var(1)));
}

#[test]
fn linear_forms_reduce_to_variables() {
    let r = q_ring(2);
    let (x, y) = (r.var(0), r.var(1));
    let i = ideal(&r, vec![r.add(&x, &y), r.sub(&x, &y)]).unwrap();
    let gb = buchberger(&i, MonomialOrder::Grevlex).unwrap();
    let mut els = gb.elements.clone();
    els.sort_by_key(|v| v.comps[0].leading().unwrap().0.exponents());
    assert_eq!(els, vec![vec1(y.clone()), vec1(x.clone())]);
}

#[test]
fn monomial_ideal_is_its_own_basis() {
    let r = q_ring(2);
    let (x, y) = (r.var(0), r.var(1));
    let i = ideal(&r, vec![r.mul(&x, &y), r.mul(&y, &y)]).unwrap();
    let gb = buchberger(&i, MonomialOrder::Grevlex).unwrap();
    assert_eq!(gb.elements.len(), 2);
    let lex = buchberger(&i, MonomialOrder::Lex).unwrap();
    assert_eq!(lex.elements.len(), 2);
}

#[test]
fn koszul_syzygy() {
    let r = q_ring(2);
    let i = ideal(&r, vec![r.var(0), r.var(1)]).unwrap();
    let syz = syzygy_module(&i).unwrap();
    assert_eq!(syz.gens.len(), 1);
    let s = &syz.gens[0];
    let combo = r.add(&r.mul(&s.comps[0], &r.var(0)), &r.mul(&s.comps[1], &r.var(1)));
    assert!(combo.is_zero());
    assert_eq!(syz.degrees(), vec![2]);
}

#[test]
fn basis_of_free_module_has_no_syzygies() {
    let r = q_ring(2);
    let f = GradedFreeModule::free(2, 3);
    let syz = syzygy_module(&Submodule::whole(r, f)).unwrap();
    assert!(syz.is_zero());
}

#[test]
fn partials_of_xyz() {
    let r = PolyRing::new(PrimeField::new(32003).unwrap(), 3);
    let (x, y, z) = (r.var(0), r.var(1), r.var(2));
    let f = r.mul(&r.mul(&x, &y), &z);
    let parts: Vec<_> = (0..3).map(|i| r.partial_derivative(&f, i)).collect();
    let i = ideal(&r, parts.clone()).unwrap();
    let syz = syzygy_module(&i).unwrap();
    assert_eq!(syz.gens.len(), 2);
    for s in &syz.gens {
        let mut acc = r.zero();
        for (a, p) in s.comps.iter().zip(&parts) {
            acc = r.add(&acc, &r.mul(a, p));
        }
        assert!(acc.is_zero());
    }
    // (x, -y, 0) is a syzygy, hence in the module
    let gb = buchberger(&syz, MonomialOrder::Grevlex).unwrap();
    let v = FreeVector::new(vec![x.clone(), r.neg(&y), r.zero()]);
    assert!(gb.contains(&v).unwrap());
    let w = FreeVector::new(vec![r.zero(), y.clone(), r.neg(&z)]);
    assert!(gb.contains(&w).unwrap());
}

#[test]
fn kernel_examples() {
    let r = q_ring(2);
    let s1 = GradedFreeModule::free(2, 1);
    // identity modulo (x)
    let k = kernel_modulo(&r, &s1, &s1, &[vec1(r.one())], &[vec1(r.var(0))]).unwrap();
    let gb = buchberger(&k, MonomialOrder::Grevlex).unwrap();
    assert_eq!(gb.elements, vec![vec1(r.var(0))]);
    // (a, b) -> ax + by
    let s2 = GradedFreeModule::free(2, 2);
    let k = kernel_modulo(&r, &s2, &s1.shifted(-1), &[vec1(r.var(0)), vec1(r.var(1))], &[]).unwrap();
    assert_eq!(k.gens.len(), 1);
    assert_eq!(k.degrees(), vec![1]);
}

#[test]
fn series_of_small_modules() {
    let r = q_ring(2);
    let m = ideal(&r, vec![r.var(0), r.var(1)]).unwrap();
    let q = quotient_series(&m).unwrap();
    assert_eq!(q, HilbertSeries::new(crate::laurent::LaurentPoly::one(), 0));
    let s = submodule_series(&m).unwrap();
    assert_eq!(s.pole_order(), 2);
    assert_eq!(
        s.numerator(),
        &crate::laurent::LaurentPoly::from_terms(&[(1, 2), (2, -1)])
    );
    let whole = quotient_series(&Submodule::zero(r.clone(), GradedFreeModule::free(2, 1))).unwrap();
    assert_eq!(whole, HilbertSeries::free(2, &[0]));
}

#[test]
fn tracked_lift_round_trip() {
    let r = PolyRing::new(PrimeField::new(101).unwrap(), 3);
    let (x, y, z) = (r.var(0), r.var(1), r.var(2));
    let gens = vec![
        vec1(r.sub(&r.mul(&x, &y), &r.mul(&z, &z))),
        vec1(r.sub(&r.mul(&y, &z), &r.mul(&x, &x))),
    ];
    let parent = GradedFreeModule::free(3, 1);
    let tb = TrackedBasis::new(&r, &parent, &gens).unwrap();
    let target = r.add(&r.mul(&x, &gens[0].comps[0]), &r.mul(&r.mul(&y, &z), &gens[1].comps[0]));
    let a = tb.lift(&vec1(target.clone())).unwrap().unwrap();
    let back = r.add(
        &r.mul(&a.comps[0], &gens[0].comps[0]),
        &r.mul(&a.comps[1], &gens[1].comps[0]),
    );
    assert_eq!(back, target);
    assert!(tb.lift(&vec1(r.mul(&x, &y))).unwrap().is_none());
}
