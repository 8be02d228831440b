//! Graded free modules `⊕ S(−d_i)` and their elements.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial};

/// A graded free module whose basis element `e_i` sits in degree
/// `degrees[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GradedFreeModule {
    pub nvars: usize,
    pub degrees: Vec<i32>,
}

impl GradedFreeModule {
    pub fn new(nvars: usize, degrees: Vec<i32>) -> Self {
        GradedFreeModule { nvars, degrees }
    }

    pub fn free(nvars: usize, rank: usize) -> Self {
        Self::new(nvars, vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    /// The same module with every basis degree moved by `by`.
    pub fn shifted(&self, by: i32) -> Self {
        Self::new(self.nvars, self.degrees.iter().map(|d| d + by).collect())
    }

    /// The dual module: degrees negated.
    pub fn dual(&self) -> Self {
        Self::new(self.nvars, self.degrees.iter().map(|d| -d).collect())
    }
}

/// The degree of a vector, or a marker for zero and mixed degrees.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum VectorDegree {
    Zero,
    Homogeneous(i32),
    Inhomogeneous,
}

/// A dense vector of polynomial components.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeVector<F: Field> {
    pub comps: Vec<Polynomial<F>>,
}

impl<F: Field> FreeVector<F> {
    pub fn zero(nvars: usize, rank: usize) -> Self {
        FreeVector {
            comps: (0..rank).map(|_| Polynomial::zero(nvars)).collect(),
        }
    }

    pub fn new(comps: Vec<Polynomial<F>>) -> Self {
        FreeVector { comps }
    }

    /// The basis vector `e_i`.
    pub fn unit(ring: &PolyRing<F>, rank: usize, i: usize) -> Self {
        let mut v = Self::zero(ring.nvars, rank);
        v.comps[i] = ring.one();
        v
    }

    pub fn rank(&self) -> usize {
        self.comps.len()
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|p| p.is_zero())
    }

    /// Degree inside `module`: the common value of `deg(comp_i) + d_i`.
    pub fn degree_in(&self, module: &GradedFreeModule) -> VectorDegree {
        debug_assert_eq!(self.rank(), module.rank());
        let mut out = VectorDegree::Zero;
        for (p, &d) in self.comps.iter().zip(&module.degrees) {
            if p.is_zero() {
                continue;
            }
            let Some(pd) = p.homogeneous_degree() else {
                return VectorDegree::Inhomogeneous;
            };
            let deg = pd as i32 + d;
            match out {
                VectorDegree::Zero => out = VectorDegree::Homogeneous(deg),
                VectorDegree::Homogeneous(e) if e != deg => return VectorDegree::Inhomogeneous,
                _ => {}
            }
        }
        out
    }

    pub fn add(&self, ring: &PolyRing<F>, o: &Self) -> Self {
        FreeVector::new(self.comps.iter().zip(&o.comps).map(|(a, b)| ring.add(a, b)).collect())
    }

    pub fn sub(&self, ring: &PolyRing<F>, o: &Self) -> Self {
        FreeVector::new(self.comps.iter().zip(&o.comps).map(|(a, b)| ring.sub(a, b)).collect())
    }

    pub fn scale_poly(&self, ring: &PolyRing<F>, p: &Polynomial<F>) -> Self {
        FreeVector::new(self.comps.iter().map(|a| ring.mul(a, p)).collect())
    }

    /// `self + c·m·o`.
    pub fn add_scaled(&self, ring: &PolyRing<F>, c: &F::Elem, m: &Monomial, o: &Self) -> Self {
        FreeVector::new(
            self.comps
                .iter()
                .zip(&o.comps)
                .map(|(a, b)| ring.add_scaled(a, c, m, b))
                .collect(),
        )
    }

    pub fn format(&self, field: &F) -> String {
        let parts: Vec<String> = self.comps.iter().map(|p| p.format(field)).collect();
        format!("({})", parts.join(", "))
    }
}

/// Degree of `v` in `module`, failing on zero or mixed-degree vectors.
pub fn homogeneous_degree<F: Field>(v: &FreeVector<F>, module: &GradedFreeModule) -> Result<i32> {
    match v.degree_in(module) {
        VectorDegree::Homogeneous(d) => Ok(d),
        VectorDegree::Zero => Err(Error::Inhomogeneous("zero vector has no degree".into())),
        VectorDegree::Inhomogeneous => Err(Error::Inhomogeneous(format!(
            "vector of rank {} has mixed degrees",
            v.rank()
        ))),
    }
}

/// Applies the matrix with the given columns to the coordinate vector `a`:
/// `Σ a_j · columns[j]`.
pub fn apply_columns<F: Field>(
    ring: &PolyRing<F>,
    columns: &[FreeVector<F>],
    target_rank: usize,
    a: &FreeVector<F>,
) -> FreeVector<F> {
    let mut out = FreeVector::zero(ring.nvars, target_rank);
    for (coef, col) in a.comps.iter().zip(columns) {
        if coef.is_zero() {
            continue;
        }
        for (o, c) in out.comps.iter_mut().zip(&col.comps) {
            if !c.is_zero() {
                *o = ring.add(o, &ring.mul(coef, c));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::RationalField;

    #[test]
    fn degrees_with_twists() {
        let r = PolyRing::new(RationalField, 2);
        let v = FreeVector::new(vec![r.var(0), r.var(1)]);
        assert_eq!(
            v.degree_in(&GradedFreeModule::new(2, vec![0, 0])),
            VectorDegree::Homogeneous(1)
        );
        let w = FreeVector::new(vec![r.var(0), r.one()]);
        assert_eq!(
            w.degree_in(&GradedFreeModule::new(2, vec![0, 1])),
            VectorDegree::Homogeneous(1)
        );
        assert_eq!(
            w.degree_in(&GradedFreeModule::new(2, vec![0, 0])),
            VectorDegree::Inhomogeneous
        );
        assert_eq!(
            FreeVector::<RationalField>::zero(2, 2).degree_in(&GradedFreeModule::free(2, 2)),
            VectorDegree::Zero
        );
    }
}
