//! Central hyperplane arrangements, their intersection lattices, and the
//! logarithmic derivation and form modules.

pub mod exterior;
pub mod lattice;
pub mod logmod;
pub mod parse;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{self, Submodule};
use crate::linalg::{subsets_colex, Matrix};
use crate::module::{FreeVector, GradedFreeModule};
use crate::poly::{PolyRing, Polynomial};

pub use lattice::{Flat, Lattice};
pub use logmod::{LogModule, ModuleBody, Role};
pub use parse::{parse_arrangement, RawArrangement};

/// A central arrangement: `n` pairwise non-proportional nonzero linear forms
/// in `ℓ` variables.
#[derive(Clone, Debug)]
pub struct Arrangement<F: Field> {
    pub field: F,
    pub nvars: usize,
    pub forms: Vec<Vec<F::Elem>>,
}

/// `true` if `a` and `b` are scalar multiples of each other.
pub fn proportional<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> bool {
    let Some(i) = a.iter().position(|x| !field.is_zero(x)) else {
        return b.iter().all(|x| field.is_zero(x));
    };
    if field.is_zero(&b[i]) {
        return false;
    }
    let r = field.div(&b[i], &a[i]);
    a.iter().zip(b).all(|(x, y)| field.mul(x, &r) == *y)
}

impl<F: Field> Arrangement<F> {
    /// Validates and builds: forms must be nonzero, of length `nvars`, and
    /// pairwise non-proportional.
    pub fn new(field: F, nvars: usize, forms: Vec<Vec<F::Elem>>) -> Result<Self> {
        if nvars == 0 || nvars > crate::monomial::MAX_VARS {
            return Err(Error::invalid(format!(
                "number of variables must be between 1 and {}",
                crate::monomial::MAX_VARS
            )));
        }
        for (i, f) in forms.iter().enumerate() {
            if f.len() != nvars {
                return Err(Error::invalid(format!(
                    "hyperplane {} has {} coefficients, expected {nvars}",
                    i + 1,
                    f.len()
                )));
            }
            if f.iter().all(|c| field.is_zero(c)) {
                return Err(Error::invalid(format!("hyperplane {} is the zero form", i + 1)));
            }
            for (j, g) in forms[..i].iter().enumerate() {
                if proportional(&field, g, f) {
                    return Err(Error::NotReduced(format!(
                        "hyperplanes {} and {} are proportional",
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
        Ok(Arrangement { field, nvars, forms })
    }

    /// Builds from rational coefficient rows, mapping them into `field`.
    pub fn from_rational_rows(field: F, nvars: usize, rows: &[Vec<(BigInt, BigInt)>]) -> Result<Self> {
        let forms = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|(n, d)| field.from_ratio(n, d))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(field, nvars, forms)
    }

    /// Builds from integer rows.
    pub fn from_int_rows(field: F, rows: &[Vec<i64>]) -> Result<Self> {
        let nvars = rows.first().map_or(0, |r| r.len());
        let forms = rows
            .iter()
            .map(|r| r.iter().map(|&c| field.from_i64(c)).collect())
            .collect();
        Self::new(field, nvars, forms)
    }

    /// The Boolean arrangement of the coordinate hyperplanes.
    pub fn boolean(field: F, nvars: usize) -> Result<Self> {
        let forms = (0..nvars)
            .map(|i| {
                (0..nvars)
                    .map(|j| if i == j { field.one() } else { field.zero() })
                    .collect()
            })
            .collect();
        Self::new(field, nvars, forms)
    }

    /// The generic arrangement `α_i = Σ_j i^{j−1} x_j`, `i = 1..n`, with
    /// every `ℓ × ℓ` minor checked to be nonzero (sampled when `n > 12`).
    pub fn generic(field: F, n: usize, nvars: usize) -> Result<Self> {
        if nvars == 0 || n < nvars {
            return Err(Error::invalid(format!(
                "a generic arrangement of rank {nvars} needs at least {nvars} hyperplanes, got {n}"
            )));
        }
        let ch = field.characteristic();
        if ch != 0 && (ch as usize) < n {
            return Err(Error::FieldTooSmall(format!(
                "need {n} distinct field elements, characteristic is {ch}"
            )));
        }
        let forms: Vec<Vec<F::Elem>> = (1..=n)
            .map(|i| {
                let t = field.from_i64(i as i64);
                let mut row = Vec::with_capacity(nvars);
                let mut pw = field.one();
                for _ in 0..nvars {
                    row.push(pw.clone());
                    pw = field.mul(&pw, &t);
                }
                row
            })
            .collect();
        let subsets: Vec<Vec<usize>> = if n <= 12 {
            subsets_colex(n, nvars)
        } else {
            sample_subsets(n, nvars, 500)
        };
        for s in subsets {
            let rows = s.iter().map(|&i| forms[i].clone()).collect();
            if field.is_zero(&Matrix::from_rows(&field, rows, nvars).determinant(&field)) {
                return Err(Error::FieldTooSmall(format!(
                    "hyperplanes {s:?} are dependent over {}",
                    field.spec()
                )));
            }
        }
        Self::new(field, nvars, forms)
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    pub fn ring(&self) -> PolyRing<F> {
        PolyRing::new(self.field.clone(), self.nvars)
    }

    pub fn form_poly(&self, i: usize) -> Polynomial<F> {
        self.ring().linear_form(&self.forms[i])
    }

    /// `f = Π α_H`.
    pub fn defining_polynomial(&self) -> Polynomial<F> {
        let r = self.ring();
        (0..self.len()).fold(r.one(), |acc, i| r.mul(&acc, &self.form_poly(i)))
    }

    /// Rank of the span of the forms.
    pub fn rank(&self) -> usize {
        if self.forms.is_empty() {
            return 0;
        }
        Matrix::from_rows(&self.field, self.forms.clone(), self.nvars).rank(&self.field)
    }

    pub fn lattice(&self) -> Lattice<F> {
        Lattice::new(self)
    }

    /// `char K ∤ lcm_F |A_F|`.
    pub fn is_good_characteristic(&self) -> bool {
        self.lattice().is_good_characteristic(self.field.characteristic())
    }

    pub fn require_good_characteristic(&self) -> Result<()> {
        if self.is_good_characteristic() {
            Ok(())
        } else {
            Err(Error::BadCharacteristic(format!(
                "characteristic {} divides the size of a localization",
                self.field.characteristic()
            )))
        }
    }

    /// `(A ∖ {H}, A restricted to H)`. The restriction solves `α_H = 0` for
    /// its first variable with nonzero coefficient and drops repeated forms.
    pub fn deletion_restriction(&self, h: usize) -> Result<(Self, Self)> {
        if h >= self.len() {
            return Err(Error::invalid(format!("hyperplane index {h} out of range")));
        }
        if self.nvars < 2 {
            return Err(Error::invalid("restriction needs at least two variables"));
        }
        let field = &self.field;
        let deleted: Vec<Vec<F::Elem>> = self
            .forms
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != h)
            .map(|(_, f)| f.clone())
            .collect();
        let a = &self.forms[h];
        let piv = a.iter().position(|c| !field.is_zero(c)).unwrap();
        let inv = field.inv(&a[piv]);
        let mut restricted: Vec<Vec<F::Elem>> = Vec::new();
        for b in &deleted {
            let r: Vec<F::Elem> = (0..self.nvars)
                .filter(|&j| j != piv)
                .map(|j| field.sub(&b[j], &field.mul(&field.mul(&b[piv], &a[j]), &inv)))
                .collect();
            if r.iter().all(|c| field.is_zero(c)) {
                return Err(Error::internal("restricted form vanishes"));
            }
            if !restricted.iter().any(|x| proportional(field, x, &r)) {
                restricted.push(r);
            }
        }
        Ok((
            Self::new(field.clone(), self.nvars, deleted)?,
            Self::new(field.clone(), self.nvars - 1, restricted)?,
        ))
    }

    /// The subarrangement `indices` written in coordinates on the span of its
    /// forms (rank many variables).
    pub fn essentialize(&self, indices: &[usize]) -> Result<Self> {
        let field = &self.field;
        let rows: Vec<Vec<F::Elem>> = indices.iter().map(|&i| self.forms[i].clone()).collect();
        let mut m = Matrix::from_rows(field, rows.clone(), self.nvars);
        let pivots = m.rref(field);
        // rref rows form a basis with identity pivot columns, so a form's
        // coordinates are its entries in the pivot columns
        let forms = rows
            .iter()
            .map(|r| pivots.iter().map(|&c| r[c].clone()).collect())
            .collect();
        Self::new(field.clone(), pivots.len(), forms)
    }

    /// The same forms with `extra` trailing variables added.
    pub fn with_extra_variables(&self, extra: usize) -> Result<Self> {
        let forms = self
            .forms
            .iter()
            .map(|f| {
                let mut g = f.clone();
                g.extend((0..extra).map(|_| self.field.zero()));
                g
            })
            .collect();
        Self::new(self.field.clone(), self.nvars + extra, forms)
    }

    /// Adds one more form.
    pub fn with_form(&self, form: Vec<F::Elem>) -> Result<Self> {
        let mut forms = self.forms.clone();
        forms.push(form);
        Self::new(self.field.clone(), self.nvars, forms)
    }

    /// `f`, its partial derivatives, and the syzygies of the partials
    /// (derivations killing `f`), in good characteristic.
    pub fn jacobian_data(&self) -> Result<JacobianData<F>> {
        self.require_good_characteristic()?;
        let ring = self.ring();
        let f = self.defining_polynomial();
        let partials: Vec<Polynomial<F>> = (0..self.nvars).map(|i| ring.partial_derivative(&f, i)).collect();
        let ideal = groebner::ideal(&ring, partials.clone())?;
        let n = self.len() as i32;
        let parent = GradedFreeModule::new(self.nvars, vec![-n]);
        let vecs: Vec<FreeVector<F>> = partials.iter().map(|p| FreeVector::new(vec![p.clone()])).collect();
        let syz = groebner::syzygies_of(&ring, &parent, &vecs, vec![-1; self.nvars])?;
        Ok(JacobianData {
            f,
            partials,
            ideal,
            syz,
        })
    }

    pub fn format(&self) -> String {
        let r = self.ring();
        let parts: Vec<String> = (0..self.len()).map(|i| self.form_poly(i).format(&r.field)).collect();
        parts.join(", ")
    }
}

/// Data attached to the Jacobian ideal of an arrangement.
#[derive(Clone, Debug)]
pub struct JacobianData<F: Field> {
    pub f: Polynomial<F>,
    pub partials: Vec<Polynomial<F>>,
    pub ideal: Submodule<F>,
    /// Derivations `θ` with `θ(f) = 0`, in the derivation module `S(1)^ℓ`.
    pub syz: Submodule<F>,
}

/// Deterministic pseudo-random `k`-subsets of `0..n`.
fn sample_subsets(n: usize, k: usize, count: usize) -> Vec<Vec<usize>> {
    let mut state: u64 = 0x9E37_79B9_7F4A_7C15;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    (0..count)
        .map(|_| {
            let mut pool: Vec<usize> = (0..n).collect();
            for i in 0..k {
                let j = i + (next() as usize) % (n - i);
                pool.swap(i, j);
            }
            let mut s = pool[..k].to_vec();
            s.sort();
            s
        })
        .collect()
}
