mod common;

use logforms_core::report::{analyze, AnalysisOptions};
use logforms_core::series::gf::{closed_form, generic_ext_series, q_rank3, ClosedForm};
use logforms_core::series::verify::{is_generic_non_boolean, verify_deletion_restriction, Sequence};
use logforms_core::series::verify_generic_theorem;
use logforms_core::{Arrangement, Error, PrimeField};

use common::*;

#[test]
fn generic_theorem_rejects_degenerate_shapes() {
    assert!(matches!(
        verify_generic_theorem(fp(), 4, 4),
        Err(Error::InvalidInput(_))
    ));
    assert!(matches!(
        verify_generic_theorem(fp(), 5, 2),
        Err(Error::InvalidInput(_))
    ));
    assert!(matches!(
        verify_generic_theorem(fp(), 3, 4),
        Err(Error::InvalidInput(_))
    ));
    // F_5 cannot hold seven hyperplanes in general position.
    let small = PrimeField::new(5).unwrap();
    assert!(verify_generic_theorem(small, 7, 3).is_err());
}

#[test]
fn generic_theorem_small_case() {
    let r = verify_generic_theorem(fp(), 6, 4).unwrap();
    assert!(r.passed());
    assert_eq!(r.cases.len(), 2);
    for c in &r.cases {
        assert_eq!(c.length, Some(5));
    }
}

#[test]
fn top_sequence_twist_is_zero() {
    for (n, l) in [(4, 3), (5, 3), (5, 4), (6, 4)] {
        let a = generic(fp(), n, l);
        let r = verify_deletion_restriction(&a, n - 1, 0, Sequence::TopRelativeForms).unwrap();
        assert_eq!(r.twists, Some((0, 0)), "A({n},{l})");
        assert!(r.holds);
    }
}

#[test]
fn deletion_checks_need_generic_input() {
    assert!(!is_generic_non_boolean(&braid(fp())));
    assert!(!is_generic_non_boolean(&Arrangement::boolean(fp(), 3).unwrap()));
    assert!(is_generic_non_boolean(&generic(fp(), 5, 3)));
    let err = verify_deletion_restriction(&braid(fp()), 0, 1, Sequence::RelativeDerivations);
    assert!(matches!(err, Err(Error::InvalidInput(_))));
    let err = verify_deletion_restriction(&generic(fp(), 5, 3), 0, 0, Sequence::RelativeForms);
    assert!(matches!(err, Err(Error::InvalidInput(_))));
}

#[test]
fn closed_form_index_errors() {
    assert!(q_rank3(3).is_err());
    assert!(closed_form(ClosedForm::Q { l: 3, p: 3 }).is_err());
    assert!(generic_ext_series(5, 3, 2).is_err());
}

#[test]
fn report_is_deterministic() {
    let a = generic(fp(), 5, 3);
    let opts = AnalysisOptions {
        ext: vec![(1, 1), (1, 1), (0, 1)],
        ..Default::default()
    };
    let r1 = analyze(&a, &opts).unwrap();
    let r2 = analyze(&a, &opts).unwrap();
    assert_eq!(r1.to_text(), r2.to_text());
    assert_eq!(r1.ext.len(), 2);
    assert_eq!(r1.ext[1].series.numerator, vec![(-1, 2), (0, 2)]);
    assert_eq!(r1.ext[1].length, Some(4));
    assert_eq!(r1.pd.omega, vec![0, 1, 1, 0]);
    assert!(!r1.freeness.unwrap().free);
}

#[test]
fn report_skips_euler_checks_in_bad_characteristic() {
    // Three lines through the origin of the plane have a rank-2 flat of
    // size 3, so characteristic 3 is bad.
    let a = Arrangement::from_int_rows(PrimeField::new(3).unwrap(), &[vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
    let r = analyze(&a, &AnalysisOptions::default()).unwrap();
    assert!(!r.lattice.good_char);
    assert!(r.freeness.is_none() && r.purity.is_none() && r.wakefield.is_none());
}
