//! Acceptance checks. Every test prints one `criterion ...: PASS|FAIL` line.
//! All comparisons are exact (integer-for-integer); there are no tolerances.

mod common;

use std::time::Instant;

use logforms_core::criteria::{self, Prediction};
use logforms_core::homalg::ext_module;
use logforms_core::oracle;
use logforms_core::par::Parallelism;
use logforms_core::series::gf::{closed_form, q_rank3, ClosedForm};
use logforms_core::series::verify::{change_of_rings_series, verify_deletion_restriction, Sequence};
use logforms_core::series::verify_generic_theorem;
use logforms_core::{Arrangement, Field, HilbertSeries, LaurentPoly, LogModule, Role};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;

fn verdict(name: &str, ok: bool, detail: &str) {
    println!("criterion {name}: {} ({detail})", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "criterion {name} failed: {detail}");
}

fn series(terms: &[(i32, i64)], pole: u32) -> HilbertSeries {
    HilbertSeries::new(LaurentPoly::from_terms(terms), pole)
}

fn check_generic<F: Field>(field: F, max_n: usize, failures: &mut Vec<String>) -> usize {
    let mut cases = 0;
    for l in 3..max_n {
        for n in l + 1..=max_n {
            let r = verify_generic_theorem(field.clone(), n, l).unwrap();
            for c in &r.cases {
                cases += 1;
                let expected_len = binomial(n as u64 - 1, l as u64) as i64;
                if !c.passed() || c.length != Some(expected_len) {
                    failures.push(format!("A({n},{l}) p={}: {c:?}", c.p));
                }
            }
        }
    }
    cases
}

#[test]
fn criterion_1_generic_theorem() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let fp_cases = check_generic(fp(), 7, &mut failures);
    let q_cases = check_generic(q(), 5, &mut failures);
    verdict(
        "1 (generic Ext: spherical, Artinian, length C(n-1,l), series = [s^n u^l v^p]T)",
        failures.is_empty(),
        &format!(
            "{fp_cases} cases over F_32003 with n <= 7, {q_cases} over Q with n <= 5, {:.1}s; failures: {failures:?}",
            start.elapsed().as_secs_f64()
        ),
    );
}

/// `((n−3)t^{−1} + (1−n) + (n−1)t^{n−3} + (3−n)t^{n−2}) / (1−t)^3`, with
/// like terms collected by `from_terms`.
fn rank3_expected(n: i64) -> HilbertSeries {
    series(
        &[(-1, n - 3), (0, 1 - n), (n as i32 - 3, n - 1), (n as i32 - 2, 3 - n)],
        3,
    )
}

#[test]
fn criterion_2_rank3_series() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for n in 4..=12usize {
        let a = generic(fp(), n, 3);
        let gb = LogModule::relative_forms(&a, 1).unwrap().ext(1).unwrap().hilbert;
        let closed = q_rank3(n as u32).unwrap();
        if gb != closed || gb != rank3_expected(n as i64) {
            failures.push(format!("n={n}: computed {gb}, closed form {closed}"));
        }
    }
    let spot = [
        (4, series(&[(-1, 1)], 0)),
        (5, series(&[(-1, 2), (0, 2)], 0)),
        (6, series(&[(-1, 3), (0, 4), (1, 3)], 0)),
    ];
    for (n, h) in spot {
        if q_rank3(n).unwrap() != h {
            failures.push(format!("n={n}: expected {h}"));
        }
    }
    verdict(
        "2 (rank-3 Ext series for 4 <= n <= 12)",
        failures.is_empty(),
        &format!("{:.1}s; failures: {failures:?}", start.elapsed().as_secs_f64()),
    );
}

#[test]
fn criterion_3_rank3_resolution() {
    let mut failures = Vec::new();
    for n in 4..=10usize {
        let a = generic(fp(), n, 3);
        let betti = LogModule::relative_forms(&a, 1).unwrap().resolution().unwrap().betti();
        let expected = vec![(0, 0, n - 1), (1, 1, n - 3)];
        if betti != expected {
            failures.push(format!("n={n}: {betti:?}"));
        }
    }
    verdict(
        "3 (Betti numbers of relative 1-forms of A(n,3), 4 <= n <= 10)",
        failures.is_empty(),
        &format!("failures: {failures:?}"),
    );
}

#[test]
fn criterion_4_zero_one_arrangement() {
    let start = Instant::now();
    let a = zero_one(fp());
    let pd = LogModule::forms(&a, 1).unwrap().projective_dimension().unwrap();
    let free = criteria::is_free(&a).unwrap().free;
    let fop = criteria::is_free_outside_points(&a).unwrap();
    let pure = criteria::jacobian_purity(&a).unwrap().pure;
    let wake = criteria::wakefield_predictor(&a, Parallelism::available()).unwrap();
    let b = zero_one_plus_x5(fp());
    let b_fop = criteria::is_free_outside_points(&b).unwrap();
    let ok = pd == Some(2) && !free && fop && pure && wake.prediction == Prediction::Inapplicable && !b_fop;
    verdict(
        "4 (0/1 arrangement: pd 2, not free, free outside points, pure, predictor inapplicable; with x5 not free outside points)",
        ok,
        &format!(
            "pd={pd:?} free={free} fop={fop} pure={pure} prediction={:?} plus_x5_fop={b_fop}, {:.1}s",
            wake.prediction,
            start.elapsed().as_secs_f64()
        ),
    );
}

fn free_example<F: Field>(name: &str, a: &Arrangement<F>, failures: &mut Vec<String>) {
    let r = criteria::is_free(a).unwrap();
    if !r.free || !r.saito_determinant_checked {
        failures.push(format!("{name}: {r:?}"));
    }
    for p in 0..=a.nvars {
        let e = criteria::comparison_module(a, p).unwrap();
        if !e.cokernel_series.is_zero() {
            failures.push(format!("{name}: E^{p} = {}", e.cokernel_series));
        }
    }
}

#[test]
fn criterion_5_free_examples() {
    let mut failures = Vec::new();
    for l in 1..=5 {
        free_example(
            &format!("boolean {l}"),
            &Arrangement::boolean(fp(), l).unwrap(),
            &mut failures,
        );
    }
    free_example("braid", &braid(fp()), &mut failures);
    free_example("braid over Q", &braid(q()), &mut failures);
    verdict(
        "5 (Boolean l <= 5 and braid: free, Saito determinant = c*f, E^p = 0)",
        failures.is_empty(),
        &format!("failures: {failures:?}"),
    );
}

/// Small test arrangements of rank 3 and 4, with names.
fn property_instances() -> Vec<(String, Arrangement<logforms_core::PrimeField>)> {
    let mut v: Vec<(String, Arrangement<_>)> = [(4, 3), (5, 3), (6, 3), (5, 4), (6, 4)]
        .iter()
        .map(|&(n, l)| (format!("A({n},{l})"), generic(fp(), n, l)))
        .collect();
    v.push(("braid".into(), braid(fp())));
    v.push(("boolean 3".into(), Arrangement::boolean(fp(), 3).unwrap()));
    v.push(("0/1".into(), zero_one(fp())));
    v
}

#[test]
fn criterion_6a_euler_splitting() {
    let mut failures = Vec::new();
    for (name, a) in property_instances() {
        let d = LogModule::derivations(&a, 1).unwrap().hilbert_series().unwrap();
        let syz = LogModule::jacobian_syzygies(&a).unwrap().hilbert_series().unwrap();
        if d != syz.add(&HilbertSeries::free(a.nvars, &[0])) {
            failures.push(name);
        }
    }
    verdict(
        "6a (h(D) = h(Syz J) + 1/(1-t)^l)",
        failures.is_empty(),
        &format!("failures: {failures:?}"),
    );
}

#[test]
fn criterion_6b_form_splitting() {
    let mut failures = Vec::new();
    for (name, a) in property_instances() {
        let mut prev = HilbertSeries::zero();
        for p in 0..=a.nvars {
            let full = LogModule::forms(&a, p).unwrap();
            let rel = LogModule::relative_forms_from(&a, &full)
                .unwrap()
                .hilbert_series()
                .unwrap();
            if full.hilbert_series().unwrap() != rel.add(&prev) {
                failures.push(format!("{name} p={p}"));
            }
            prev = rel;
        }
    }
    verdict(
        "6b (h(Omega^p) = h(Omega^(p-1)_0) + h(Omega^p_0))",
        failures.is_empty(),
        &format!("failures: {failures:?}"),
    );
}

#[test]
fn criterion_6c_duality() {
    let mut failures = Vec::new();
    for (name, a) in property_instances() {
        for p in 1..a.nvars {
            let hom = LogModule::relative_derivations(&a, p).unwrap().ext(0).unwrap().hilbert;
            let rel = LogModule::relative_forms(&a, p).unwrap().hilbert_series().unwrap();
            if hom != rel {
                failures.push(format!("{name} p={p}: {hom} vs {rel}"));
            }
        }
    }
    verdict(
        "6c (h(Hom(D^0_p, S)) = h(Omega^p_0))",
        failures.is_empty(),
        &format!("failures: {failures:?}"),
    );
}

#[test]
fn criterion_6d_deletion_restriction() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut checked = 0;
    for l in 3..7 {
        for n in l + 1..=7 {
            let a = generic(fp(), n, l);
            for h in [0, n - 1] {
                let mut runs = vec![(Sequence::RelativeDerivations, 1)];
                if l >= 4 {
                    runs.extend((0..=l - 3).map(|p| (Sequence::RelativeForms, p)));
                }
                for (seq, p) in runs {
                    checked += 1;
                    let r = verify_deletion_restriction(&a, h, p, seq).unwrap();
                    if !r.holds {
                        failures.push(format!("A({n},{l}) H{h} {seq:?} p={p}: twists {:?}", r.twists));
                    }
                }
            }
        }
    }
    verdict(
        "6d (Hilbert series additivity for the relative forms and relative derivations sequences, n <= 7)",
        failures.is_empty(),
        &format!(
            "{checked} sequences, {:.1}s; failures: {failures:?}",
            start.elapsed().as_secs_f64()
        ),
    );
}

#[test]
fn criterion_6e_change_of_rings() {
    let mut failures = Vec::new();
    let mut modules = Vec::new();
    let a = generic(fp(), 5, 3);
    for p in 0..=2 {
        modules.push((format!("Omega^{p}_0 A(5,3)"), LogModule::relative_forms(&a, p).unwrap()));
    }
    modules.push((
        "Omega^1 A(4,3)".into(),
        LogModule::forms(&generic(fp(), 4, 3), 1).unwrap(),
    ));
    modules.push(("D_1 braid".into(), LogModule::derivations(&braid(fp()), 1).unwrap()));
    for (name, m) in modules {
        let pres = m.presentation().unwrap();
        let (pairs, hom_zero) = change_of_rings_series(&pres, 3).unwrap();
        if !hom_zero {
            failures.push(format!("{name}: Hom nonzero"));
        }
        for (q, (big, small)) in pairs.iter().enumerate() {
            if big != small {
                failures.push(format!("{name} q={q}: {big} vs {small}"));
            }
        }
    }
    verdict(
        "6e (h(Ext^(q+1)_S(M,S)) = t^-1 h(Ext^q_S''(M,S'')), Ext^0 = 0)",
        failures.is_empty(),
        &format!("failures: {failures:?}"),
    );
}

#[test]
fn criterion_6f_ext_lengths() {
    let mut failures = Vec::new();
    let mut compared = 0;
    for (name, a) in property_instances() {
        if !criteria::is_free_outside_points(&a).unwrap() {
            continue;
        }
        let l = a.nvars;
        let om1 = LogModule::forms(&a, 1).unwrap();
        let d = LogModule::derivations(&a, 1).unwrap();
        for p in 1..l {
            let lhs = d.ext(l - p - 1).unwrap().length;
            let inner = om1.ext(p).unwrap();
            let rhs = ext_module(&inner.presentation, l).unwrap().length;
            if let (Some(x), Some(y)) = (lhs, rhs) {
                compared += 1;
                if x != y {
                    failures.push(format!("{name} p={p}: {x} vs {y}"));
                }
            }
        }
    }
    verdict(
        "6f (length Ext^(l-p-1)(D) = length Ext^l(Ext^p(Omega^1)))",
        failures.is_empty() && compared > 0,
        &format!("{compared} comparisons; failures: {failures:?}"),
    );
}

/// Whether `Ext^p(Ext^q(Ω^1, S), S) = 0` for all `q > 0`, `p < ℓ`.
fn ext_ext_vanishes<F: Field>(a: &Arrangement<F>) -> bool {
    let om1 = LogModule::forms(a, 1).unwrap();
    (1..=a.nvars).all(|q| {
        let e = om1.ext(q).unwrap();
        (0..a.nvars).all(|p| ext_module(&e.presentation, p).unwrap().is_zero())
    })
}

#[test]
fn criterion_6g_local_freeness() {
    let mut failures = Vec::new();
    for (name, a) in property_instances() {
        let fop = criteria::is_free_outside_points(&a).unwrap();
        if fop != ext_ext_vanishes(&a) {
            failures.push(name);
        }
    }
    let c = generic_times_line(fp());
    let c_fop = criteria::is_free_outside_points(&c).unwrap();
    if c_fop || ext_ext_vanishes(&c) {
        failures.push(format!("A(4,3) x line: fop={c_fop}"));
    }
    verdict(
        "6g (free outside points iff Ext^p(Ext^q(Omega^1)) = 0 for q > 0, p < l; ranks 3 and 4)",
        failures.is_empty(),
        &format!("failures: {failures:?}"),
    );
}

#[test]
fn criterion_6h_wedge_comparison() {
    let mut failures = Vec::new();
    let mut checked = 0;
    for (name, a) in property_instances() {
        let l = a.nvars;
        let pd = LogModule::forms(&a, 1)
            .unwrap()
            .projective_dimension()
            .unwrap()
            .unwrap_or(0);
        for p in 1..l {
            if pd * p + 1 < l {
                checked += 1;
                if !criteria::comparison_module(&a, p).unwrap().j_is_iso() {
                    failures.push(format!("{name} p={p}"));
                }
            }
        }
    }
    verdict(
        "6h (j_p is an isomorphism when pd * p < l - 1)",
        failures.is_empty(),
        &format!("{checked} cases; failures: {failures:?}"),
    );
}

/// A reduced arrangement with small random integer coefficients.
fn random_arrangement(rng: &mut ChaCha8Rng) -> Arrangement<logforms_core::PrimeField> {
    loop {
        let l = rng.random_range(2..=3);
        let n = rng.random_range(l..=l + 2);
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|_| (0..l).map(|_| rng.random_range(-2..=2)).collect())
            .collect();
        if let Ok(a) = Arrangement::from_int_rows(fp(), &rows) {
            return a;
        }
    }
}

#[test]
fn criterion_6i_oracle_equivalence() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(20261015);
    let mut failures = Vec::new();
    let mut compared = 0;
    for _ in 0..20 {
        let a = random_arrangement(&mut rng);
        let n = a.len() as i64;
        for role in Role::all() {
            let ps: Vec<usize> = match role {
                Role::SyzJacobian => vec![1],
                _ => (0..=a.nvars).collect(),
            };
            for p in ps {
                let h = LogModule::build(&a, role, p).unwrap().hilbert_series().unwrap();
                for d in -2 * n..=2 * n {
                    compared += 1;
                    let la = oracle::dimension(&a, role, p, d).unwrap() as i64;
                    if h.coefficient(d as i32) != la {
                        failures.push(format!("{} {}_{p} d={d}", a.format(), role.name()));
                    }
                }
            }
        }
    }
    verdict(
        "6i (Groebner Hilbert functions = degreewise linear algebra, 20 random arrangements, degrees [-2n, 2n])",
        failures.is_empty(),
        &format!(
            "{compared} values, {:.1}s; failures: {failures:?}",
            start.elapsed().as_secs_f64()
        ),
    );
}

/// `[s^n] s^4/(t(1−s)^2(1−st)^2) = t^{−1} Σ_{a+b=n−4} (a+1)(b+1) t^b`.
fn q31_coefficient(n: i64) -> LaurentPoly {
    let terms: Vec<(i32, i64)> = (0..=n - 4).map(|b| (b as i32 - 1, (n - 4 - b + 1) * (b + 1))).collect();
    LaurentPoly::from_terms(&terms)
}

#[test]
fn criterion_7_generating_functions() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let trunc = [10, 0, 0];
    for l in 4..=8u32 {
        for p in 1..=l - 3 {
            let big = closed_form(ClosedForm::Q { l, p }).unwrap().expand(trunc).unwrap();
            let small = closed_form(ClosedForm::Q { l: l - 1, p })
                .unwrap()
                .expand(trunc)
                .unwrap();
            for n in 1..=10u32 {
                let lhs = big.coefficient([n, 0, 0]);
                let rhs = big
                    .coefficient([n - 1, 0, 0])
                    .shift(1)
                    .add(&small.coefficient([n - 1, 0, 0]));
                if lhs != rhs {
                    failures.push(format!("recurrence l={l} n={n} p={p}"));
                }
            }
        }
    }
    let q31 = closed_form(ClosedForm::Q { l: 3, p: 1 })
        .unwrap()
        .expand(trunc)
        .unwrap();
    for n in 0..=10u32 {
        let direct = if n >= 4 {
            q31_coefficient(n as i64)
        } else {
            LaurentPoly::zero()
        };
        if q31.coefficient([n, 0, 0]) != direct {
            failures.push(format!("Q(3,1) s^{n}"));
        }
        if n >= 4 {
            let h = q_rank3(n).unwrap();
            if h.pole_order() != 0 || *h.numerator() != direct {
                failures.push(format!("rank-3 series n={n}: {h}"));
            }
        }
    }
    let t = closed_form(ClosedForm::T).unwrap().expand([10, 8, 6]).unwrap();
    for (e, c) in t.nonzero_terms() {
        if c.terms().iter().any(|&(_, k)| k < 0) {
            failures.push(format!("T has a negative coefficient at {e:?}"));
        }
    }
    for p in 1..=4u32 {
        let pe = closed_form(ClosedForm::P { p }).unwrap().expand([10, 8, 0]).unwrap();
        for l in 0..=8u32 {
            let ql = if l >= p + 2 {
                Some(closed_form(ClosedForm::Q { l, p }).unwrap().expand([10, 0, 0]).unwrap())
            } else {
                None
            };
            for n in 0..=10u32 {
                let expected = ql.as_ref().map_or(LaurentPoly::zero(), |q| q.coefficient([n, 0, 0]));
                if pe.coefficient([n, l, 0]) != expected {
                    failures.push(format!("P({p}) s^{n} u^{l}"));
                }
            }
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    verdict(
        "7 (generating functions: recurrence for l <= 8, n <= 10; Q(3,1); rank-3 sum; P = sum of Q; T nonnegative)",
        failures.is_empty() && elapsed < 60.0,
        &format!("{elapsed:.2}s; failures: {failures:?}"),
    );
}
