#![allow(dead_code)]

use logforms_core::{Arrangement, Field, PrimeField, RationalField};

pub fn fp() -> PrimeField {
    PrimeField::new(32003).unwrap()
}

pub fn q() -> RationalField {
    RationalField
}

pub fn generic<F: Field>(field: F, n: usize, l: usize) -> Arrangement<F> {
    Arrangement::generic(field, n, l).unwrap()
}

/// All nonzero 0/1 vectors in four variables.
pub fn zero_one_rows() -> Vec<Vec<i64>> {
    (1..16u32)
        .map(|m| (0..4).map(|i| ((m >> i) & 1) as i64).collect())
        .collect()
}

pub fn zero_one<F: Field>(field: F) -> Arrangement<F> {
    Arrangement::from_int_rows(field, &zero_one_rows()).unwrap()
}

/// The 0/1 arrangement with a fifth variable and the extra hyperplane `x_5`.
pub fn zero_one_plus_x5<F: Field>(field: F) -> Arrangement<F> {
    let mut rows: Vec<Vec<i64>> = zero_one_rows()
        .into_iter()
        .map(|mut r| {
            r.push(0);
            r
        })
        .collect();
    rows.push(vec![0, 0, 0, 0, 1]);
    Arrangement::from_int_rows(field, &rows).unwrap()
}

pub fn braid<F: Field>(field: F) -> Arrangement<F> {
    Arrangement::from_int_rows(
        field,
        &[
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![0, 0, 1],
            vec![1, -1, 0],
            vec![1, 0, -1],
            vec![0, 1, -1],
        ],
    )
    .unwrap()
}

/// Four generic planes in three variables times a line: a rank-4
/// arrangement that is not free outside points.
pub fn generic_times_line<F: Field>(field: F) -> Arrangement<F> {
    Arrangement::from_int_rows(
        field,
        &[
            vec![1, 0, 0, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 1, 0],
            vec![1, 1, 1, 0],
            vec![0, 0, 0, 1],
        ],
    )
    .unwrap()
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}
