//! Randomized invariants.

mod common;

use logforms_core::arrangement::{parse_arrangement, RawArrangement};
use logforms_core::series::gf::{closed_form, ClosedForm, GfPoly};
use logforms_core::{oracle, Arrangement, FieldSpec, HilbertSeries, LaurentPoly, LogModule, PrimeField, Role};
use proptest::prelude::*;

use common::fp;

fn rows_strategy(max_vars: usize, max_rows: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (2..=max_vars).prop_flat_map(move |l| prop::collection::vec(prop::collection::vec(-3i64..=3, l), l..=max_rows))
}

fn arrangement_strategy(max_vars: usize, max_rows: usize) -> impl Strategy<Value = Arrangement<PrimeField>> {
    rows_strategy(max_vars, max_rows).prop_filter_map("not a reduced arrangement", |rows| {
        Arrangement::from_int_rows(fp(), &rows).ok()
    })
}

fn laurent_strategy() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i32..=6, -5i64..=5), 0..6).prop_map(|t| LaurentPoly::from_terms(&t))
}

fn poly_add(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] += x;
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn parse_render_round_trip(rows in rows_strategy(4, 6), prime in prop::bool::ANY) {
        let field = if prime { Some(FieldSpec::Prime(32003)) } else { Some(FieldSpec::Rational) };
        let raw = RawArrangement::from_int_rows(field, &rows);
        let back = parse_arrangement(&raw.render()).unwrap();
        prop_assert_eq!(back.field, raw.field);
        prop_assert_eq!(back.nvars, raw.nvars);
        prop_assert_eq!(back.rows, raw.rows);
    }

    #[test]
    fn series_canonical_form(n in laurent_strategy(), d in 0u32..4, k in 0u32..3) {
        let h = HilbertSeries::new(n.clone(), d);
        let padded = HilbertSeries::new(n.mul(&LaurentPoly::one_minus_t().pow(k)), d + k);
        prop_assert_eq!(&h, &padded);
        for e in -4..8 {
            prop_assert_eq!(h.add(&h).coefficient(e), 2 * h.coefficient(e));
            prop_assert_eq!(h.shift(1).coefficient(e + 1), h.coefficient(e));
        }
    }

    #[test]
    fn truncated_inverse(coeffs in prop::collection::vec((0u32..3, 0u32..2, -2i64..=2, -1i32..=1), 0..5)) {
        let mut g = GfPoly::one();
        for (s, u, c, t) in coeffs {
            if s + u > 0 {
                g = g.add(&GfPoly::monomial(c, t, [s, u, 0]));
            }
        }
        let trunc = [5, 3, 0];
        let inv = g.inverse_trunc(trunc).unwrap();
        prop_assert_eq!(g.mul_trunc(&inv, Some(trunc)), GfPoly::one());
    }

    #[test]
    fn q_series_recurrence(l in 4u32..=7, p_off in 0u32..4, n in 1u32..=9) {
        let p = 1 + p_off % (l - 3);
        let trunc = [10, 0, 0];
        let big = closed_form(ClosedForm::Q { l, p }).unwrap().expand(trunc).unwrap();
        let small = closed_form(ClosedForm::Q { l: l - 1, p }).unwrap().expand(trunc).unwrap();
        let rhs = big.coefficient([n - 1, 0, 0]).shift(1).add(&small.coefficient([n - 1, 0, 0]));
        prop_assert_eq!(big.coefficient([n, 0, 0]), rhs);
    }

    #[test]
    fn poincare_deletion_restriction(a in arrangement_strategy(3, 6), pick in 0usize..16) {
        prop_assume!(a.len() >= 2);
        let h = pick % a.len();
        let (del, res) = a.deletion_restriction(h).unwrap();
        let pa = a.lattice().poincare_polynomial();
        let pd = del.lattice().poincare_polynomial();
        let mut shifted = vec![0];
        shifted.extend(res.lattice().poincare_polynomial());
        prop_assert_eq!(pa, poly_add(&pd, &shifted));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    #[test]
    fn splitting_identities(a in arrangement_strategy(3, 5)) {
        prop_assume!(a.is_good_characteristic());
        let l = a.nvars;
        let d = LogModule::derivations(&a, 1).unwrap().hilbert_series().unwrap();
        let syz = LogModule::jacobian_syzygies(&a).unwrap().hilbert_series().unwrap();
        prop_assert_eq!(d, syz.add(&HilbertSeries::free(l, &[0])));
        let mut prev = HilbertSeries::zero();
        for p in 0..=l {
            let full = LogModule::forms(&a, p).unwrap();
            let rel = LogModule::relative_forms_from(&a, &full).unwrap().hilbert_series().unwrap();
            prop_assert_eq!(full.hilbert_series().unwrap(), rel.add(&prev));
            prev = rel;
        }
    }

    #[test]
    fn oracle_matches_groebner(a in arrangement_strategy(3, 5), p in 0usize..=3) {
        let p = p.min(a.nvars);
        for role in [Role::D, Role::FOmega, Role::FOmega0, Role::D0] {
            let h = LogModule::build(&a, role, p).unwrap().hilbert_series().unwrap();
            for d in -3..=5 {
                prop_assert_eq!(h.coefficient(d as i32), oracle::dimension(&a, role, p, d).unwrap() as i64);
            }
        }
    }

    #[test]
    fn generator_count_bounds_rank(a in arrangement_strategy(3, 5)) {
        // A torsion-free module of rank ℓ needs at least ℓ generators.
        let degs = LogModule::derivations(&a, 1).unwrap().generator_degrees().unwrap();
        prop_assert!(degs.len() >= a.nvars);
    }
}
