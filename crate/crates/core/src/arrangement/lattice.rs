//! The intersection lattice, built by closing intersections rank by rank.

use std::collections::BTreeMap;

use crate::arrangement::Arrangement;
use crate::field::Field;
use crate::linalg::Matrix;

/// A flat `X`, stored through the hyperplanes containing it.
#[derive(Clone, Debug)]
pub struct Flat<F: Field> {
    /// Sorted indices of the hyperplanes containing `X`; closed.
    pub indices: Vec<usize>,
    /// Row-reduced basis of the span of those forms (the annihilator of `X`).
    pub annihilator: Vec<Vec<F::Elem>>,
    /// Codimension of `X`.
    pub rank: usize,
}

impl<F: Field> Flat<F> {
    pub fn size(&self) -> usize {
        self.indices.len()
    }
}

/// All flats, bottom (the ambient space) first, sorted by rank then indices.
#[derive(Clone, Debug)]
pub struct Lattice<F: Field> {
    pub flats: Vec<Flat<F>>,
    pub nvars: usize,
}

fn row_space<F: Field>(a: &Arrangement<F>, indices: &[usize]) -> Vec<Vec<F::Elem>> {
    if indices.is_empty() {
        return Vec::new();
    }
    let rows = indices.iter().map(|&i| a.forms[i].clone()).collect();
    let mut m = Matrix::from_rows(&a.field, rows, a.nvars);
    let r = m.rref(&a.field).len();
    (0..r).map(|i| m.row(i).to_vec()).collect()
}

/// `true` when `v` lies in the span of the row-reduced rows `basis`.
fn in_span<F: Field>(field: &F, basis: &[Vec<F::Elem>], v: &[F::Elem]) -> bool {
    let mut w = v.to_vec();
    for row in basis {
        let piv = row.iter().position(|c| !field.is_zero(c)).unwrap();
        if field.is_zero(&w[piv]) {
            continue;
        }
        let c = w[piv].clone();
        for (x, y) in w.iter_mut().zip(row) {
            *x = field.sub(x, &field.mul(&c, y));
        }
    }
    w.iter().all(|c| field.is_zero(c))
}

impl<F: Field> Lattice<F> {
    pub fn new(a: &Arrangement<F>) -> Self {
        let field = &a.field;
        let closure = |idx: &[usize]| -> Flat<F> {
            let basis = row_space(a, idx);
            let indices = (0..a.len()).filter(|&i| in_span(field, &basis, &a.forms[i])).collect();
            Flat {
                indices,
                rank: basis.len(),
                annihilator: basis,
            }
        };
        let mut by_key: BTreeMap<(usize, Vec<usize>), Flat<F>> = BTreeMap::new();
        let bottom = closure(&[]);
        let mut frontier = vec![bottom.indices.clone()];
        by_key.insert((0, bottom.indices.clone()), bottom);
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for idx in &frontier {
                for h in 0..a.len() {
                    if idx.contains(&h) {
                        continue;
                    }
                    let mut joined = idx.clone();
                    joined.push(h);
                    let flat = closure(&joined);
                    let key = (flat.rank, flat.indices.clone());
                    if let std::collections::btree_map::Entry::Vacant(e) = by_key.entry(key) {
                        next.push(flat.indices.clone());
                        e.insert(flat);
                    }
                }
            }
            frontier = next;
        }
        Lattice {
            flats: by_key.into_values().collect(),
            nvars: a.nvars,
        }
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    /// Number of flats of each rank, indexed by rank.
    pub fn counts_by_rank(&self) -> Vec<usize> {
        let top = self.flats.iter().map(|f| f.rank).max().unwrap_or(0);
        let mut out = vec![0; top + 1];
        for f in &self.flats {
            out[f.rank] += 1;
        }
        out
    }

    pub fn of_rank(&self, r: usize) -> impl Iterator<Item = &Flat<F>> {
        self.flats.iter().filter(move |f| f.rank == r)
    }

    /// `lcm_X |A_X|` over all flats.
    pub fn lcm_sizes(&self) -> u64 {
        use num_integer::Integer;
        self.flats
            .iter()
            .filter(|f| f.size() > 0)
            .fold(1u64, |acc, f| acc.lcm(&(f.size() as u64)))
    }

    /// Characteristic zero, or a prime not dividing any `|A_X|`.
    pub fn is_good_characteristic(&self, characteristic: u64) -> bool {
        characteristic == 0
            || self
                .flats
                .iter()
                .all(|f| f.size() == 0 || !(f.size() as u64).is_multiple_of(characteristic))
    }

    /// `X ≤ Y` in the lattice (reverse inclusion of subspaces), i.e. the
    /// hyperplanes through `X` are among those through `Y`.
    pub fn below(&self, x: usize, y: usize) -> bool {
        let (a, b) = (&self.flats[x].indices, &self.flats[y].indices);
        a.iter().all(|i| b.contains(i))
    }

    /// Möbius values `μ(bottom, X)` in the order of `flats`.
    pub fn mobius(&self) -> Vec<i64> {
        let mut mu = vec![0i64; self.flats.len()];
        for y in 0..self.flats.len() {
            if self.flats[y].rank == 0 {
                mu[y] = 1;
                continue;
            }
            // flats are sorted by rank, so everything strictly below y is earlier
            mu[y] = -(0..y)
                .filter(|&x| self.flats[x].rank < self.flats[y].rank && self.below(x, y))
                .map(|x| mu[x])
                .sum::<i64>();
        }
        mu
    }

    /// Coefficients of the Poincaré polynomial `Σ_X |μ(X)| t^{rank X}`.
    pub fn poincare_polynomial(&self) -> Vec<i64> {
        let mu = self.mobius();
        let top = self.flats.iter().map(|f| f.rank).max().unwrap_or(0);
        let mut out = vec![0i64; top + 1];
        for (f, m) in self.flats.iter().zip(mu) {
            out[f.rank] += m.abs();
        }
        out
    }
}
