//! Gröbner bases, normal forms, syzygies, kernels and Hilbert series of
//! submodules of graded free modules.

pub mod engine;
pub mod hilbert;
pub mod order;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::laurent::HilbertSeries;
use crate::module::{homogeneous_degree, FreeVector, GradedFreeModule, VectorDegree};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{PolyRing, Polynomial};

use engine::{GbOptions, GbState, Term, TermVec};
use order::ModuleOrder;

/// A finitely generated submodule of a graded free module, given by
/// nonzero homogeneous generators.
#[derive(Clone, Debug)]
pub struct Submodule<F: Field> {
    pub ring: PolyRing<F>,
    pub parent: GradedFreeModule,
    pub gens: Vec<FreeVector<F>>,
}

impl<F: Field> Submodule<F> {
    /// Checks homogeneity and drops zero generators.
    pub fn new(ring: PolyRing<F>, parent: GradedFreeModule, gens: Vec<FreeVector<F>>) -> Result<Self> {
        let mut kept = Vec::with_capacity(gens.len());
        for g in gens {
            if g.rank() != parent.rank() {
                return Err(Error::invalid(format!(
                    "generator of rank {} in module of rank {}",
                    g.rank(),
                    parent.rank()
                )));
            }
            match g.degree_in(&parent) {
                VectorDegree::Zero => {}
                VectorDegree::Homogeneous(_) => kept.push(g),
                VectorDegree::Inhomogeneous => {
                    return Err(Error::Inhomogeneous(g.format(&ring.field)));
                }
            }
        }
        Ok(Submodule {
            ring,
            parent,
            gens: kept,
        })
    }

    pub fn zero(ring: PolyRing<F>, parent: GradedFreeModule) -> Self {
        Submodule {
            ring,
            parent,
            gens: Vec::new(),
        }
    }

    /// The whole free module, generated by its basis.
    pub fn whole(ring: PolyRing<F>, parent: GradedFreeModule) -> Self {
        let gens = (0..parent.rank())
            .map(|i| FreeVector::unit(&ring, parent.rank(), i))
            .collect();
        Submodule { ring, parent, gens }
    }

    pub fn degrees(&self) -> Vec<i32> {
        self.gens
            .iter()
            .map(|g| homogeneous_degree(g, &self.parent).expect("generators are homogeneous"))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars
    }
}

pub(crate) fn top_order(module: &GradedFreeModule, mono: MonomialOrder) -> ModuleOrder {
    ModuleOrder::top(mono, module.degrees.clone())
}

/// Dense vector to sorted term list.
pub(crate) fn to_terms<F: Field>(field: &F, order: &ModuleOrder, v: &FreeVector<F>) -> TermVec<F::Elem> {
    let mut terms = Vec::new();
    for (c, p) in v.comps.iter().enumerate() {
        for (m, k) in p.terms() {
            terms.push(Term {
                m: *m,
                c: c as u32,
                k: k.clone(),
            });
        }
    }
    engine::sort_terms(field, order, terms)
}

/// Sorted term list back to a dense vector of the given rank.
pub(crate) fn from_terms<F: Field>(ring: &PolyRing<F>, rank: usize, v: &[Term<F::Elem>]) -> FreeVector<F> {
    let mut buckets: Vec<Vec<(Monomial, F::Elem)>> = vec![Vec::new(); rank];
    for t in v {
        buckets[t.c as usize].push((t.m, t.k.clone()));
    }
    FreeVector::new(buckets.into_iter().map(|b| ring.from_terms(b)).collect())
}

/// A Gröbner basis of a submodule.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    pub ring: PolyRing<F>,
    pub parent: GradedFreeModule,
    pub order: MonomialOrder,
    pub elements: Vec<FreeVector<F>>,
    pub reduced: bool,
    state: GbState<F>,
}

/// Reduced Gröbner basis of `sub`. The result depends only on the input
/// order of the generators.
pub fn buchberger<F: Field>(sub: &Submodule<F>, order: MonomialOrder) -> Result<GroebnerBasis<F>> {
    let mo = top_order(&sub.parent, order);
    let inputs: Vec<_> = sub.gens.iter().map(|g| to_terms(&sub.ring.field, &mo, g)).collect();
    let run = engine::run(
        &sub.ring.field,
        sub.nvars(),
        mo,
        inputs,
        sub.degrees(),
        GbOptions::default(),
    )?;
    let elements = run
        .state
        .basis
        .iter()
        .map(|b| from_terms(&sub.ring, sub.parent.rank(), &b.v))
        .collect();
    Ok(GroebnerBasis {
        ring: sub.ring.clone(),
        parent: sub.parent.clone(),
        order,
        elements,
        reduced: true,
        state: run.state,
    })
}

impl<F: Field> GroebnerBasis<F> {
    pub fn normal_form(&self, v: &FreeVector<F>) -> Result<FreeVector<F>> {
        let t = to_terms(&self.ring.field, &self.state.order, v);
        let (nf, _) = self.state.normal_form(t)?;
        Ok(from_terms(&self.ring, self.parent.rank(), &nf))
    }

    pub fn contains(&self, v: &FreeVector<F>) -> Result<bool> {
        Ok(self.normal_form(v)?.is_zero())
    }

    pub fn leads(&self) -> Vec<(Monomial, u32)> {
        self.state.leads()
    }

    /// `h(F/M)`.
    pub fn quotient_series(&self) -> HilbertSeries {
        hilbert::quotient_series(&self.leads(), &self.parent.degrees, self.ring.nvars)
    }

    /// `h(M) = h(F) − h(F/M)`.
    pub fn submodule_series(&self) -> HilbertSeries {
        HilbertSeries::free(self.ring.nvars, &self.parent.degrees).sub(&self.quotient_series())
    }
}

/// A Gröbner basis that remembers how each element is built from a fixed
/// list of generators, so members can be written in those generators.
#[derive(Clone, Debug)]
pub struct TrackedBasis<F: Field> {
    pub ring: PolyRing<F>,
    pub parent: GradedFreeModule,
    pub ngens: usize,
    state: GbState<F>,
}

impl<F: Field> TrackedBasis<F> {
    pub fn new(ring: &PolyRing<F>, parent: &GradedFreeModule, gens: &[FreeVector<F>]) -> Result<Self> {
        let mo = top_order(parent, MonomialOrder::Grevlex);
        let degrees = gens
            .iter()
            .map(|g| homogeneous_degree(g, parent))
            .collect::<Result<Vec<_>>>()?;
        let inputs = gens.iter().map(|g| to_terms(&ring.field, &mo, g)).collect();
        let opts = GbOptions {
            track: true,
            record_redundant: false,
            interreduce: false,
        };
        let run = engine::run(&ring.field, ring.nvars, mo, inputs, degrees, opts)?;
        Ok(TrackedBasis {
            ring: ring.clone(),
            parent: parent.clone(),
            ngens: gens.len(),
            state: run.state,
        })
    }

    /// Coefficients `a` with `v = Σ a_j gens_j`, or `None` if `v` is not in
    /// the submodule.
    pub fn lift(&self, v: &FreeVector<F>) -> Result<Option<FreeVector<F>>> {
        let t = to_terms(&self.ring.field, &self.state.order, v);
        let (nf, q) = self.state.normal_form(t)?;
        if !nf.is_empty() {
            return Ok(None);
        }
        Ok(Some(from_terms(&self.ring, self.ngens, &q)))
    }

    pub fn quotient_series(&self) -> HilbertSeries {
        hilbert::quotient_series(&self.state.leads(), &self.parent.degrees, self.ring.nvars)
    }
}

/// Generators of all syzygies `(a_j)` with `Σ a_j v_j = 0`, as a submodule
/// of the free module whose basis degrees are `degrees` (the degrees of the
/// `v_j`, needed explicitly for zero vectors). Minimal generators.
pub fn syzygies_of<F: Field>(
    ring: &PolyRing<F>,
    parent: &GradedFreeModule,
    vectors: &[FreeVector<F>],
    degrees: Vec<i32>,
) -> Result<Submodule<F>> {
    let raw = raw_syzygies(ring, parent, vectors, degrees.clone())?;
    let e = GradedFreeModule::new(ring.nvars, degrees);
    minimal_generators(&Submodule::new(ring.clone(), e, raw)?)
}

/// All syzygies of `vectors` as produced by a tracked run, not minimalized.
pub(crate) fn raw_syzygies<F: Field>(
    ring: &PolyRing<F>,
    parent: &GradedFreeModule,
    vectors: &[FreeVector<F>],
    degrees: Vec<i32>,
) -> Result<Vec<FreeVector<F>>> {
    let mo = top_order(parent, MonomialOrder::Grevlex);
    let inputs = vectors.iter().map(|g| to_terms(&ring.field, &mo, g)).collect();
    let opts = GbOptions {
        track: true,
        record_redundant: true,
        interreduce: false,
    };
    let run = engine::run(&ring.field, ring.nvars, mo, inputs, degrees, opts)?;
    let n = vectors.len();
    Ok(run
        .syzygies
        .iter()
        .chain(run.redundant_syzygies.iter())
        .map(|s| from_terms(ring, n, s))
        .collect())
}

/// The syzygy module of the generators of `sub`, inside the free module with
/// basis degrees equal to the generator degrees.
pub fn syzygy_module<F: Field>(sub: &Submodule<F>) -> Result<Submodule<F>> {
    syzygies_of(&sub.ring, &sub.parent, &sub.gens, sub.degrees())
}

/// A minimal generating set of `sub`, chosen among its generators.
pub fn minimal_generators<F: Field>(sub: &Submodule<F>) -> Result<Submodule<F>> {
    let keep = retained_generators(sub)?;
    Ok(Submodule {
        ring: sub.ring.clone(),
        parent: sub.parent.clone(),
        gens: keep.into_iter().map(|i| sub.gens[i].clone()).collect(),
    })
}

/// Indices of a minimal generating subset of the generators of `sub`.
pub fn retained_generators<F: Field>(sub: &Submodule<F>) -> Result<Vec<usize>> {
    let mo = top_order(&sub.parent, MonomialOrder::Grevlex);
    let inputs = sub.gens.iter().map(|g| to_terms(&sub.ring.field, &mo, g)).collect();
    let opts = GbOptions {
        track: false,
        record_redundant: false,
        interreduce: false,
    };
    let run = engine::run(&sub.ring.field, sub.nvars(), mo, inputs, sub.degrees(), opts)?;
    Ok((0..sub.gens.len()).filter(|&i| run.retained[i]).collect())
}

/// `{v ∈ source : φ(v) ∈ N}` where `φ(e_j) = columns[j]` and `N` is generated
/// by `n_gens` in `target`. `φ` must be homogeneous of a single degree.
pub fn kernel_modulo<F: Field>(
    ring: &PolyRing<F>,
    source: &GradedFreeModule,
    target: &GradedFreeModule,
    columns: &[FreeVector<F>],
    n_gens: &[FreeVector<F>],
) -> Result<Submodule<F>> {
    assert_eq!(columns.len(), source.rank());
    let mut shift: Option<i32> = None;
    for (col, &d) in columns.iter().zip(&source.degrees) {
        match col.degree_in(target) {
            VectorDegree::Zero => {}
            VectorDegree::Homogeneous(e) => match shift {
                None => shift = Some(e - d),
                Some(s) if s != e - d => return Err(Error::Inhomogeneous("map does not have a single degree".into())),
                _ => {}
            },
            VectorDegree::Inhomogeneous => return Err(Error::Inhomogeneous("map column is inhomogeneous".into())),
        }
    }
    let Some(shift) = shift else {
        return Ok(Submodule::whole(ring.clone(), source.clone()));
    };
    let n = Submodule::new(ring.clone(), target.clone(), n_gens.to_vec())?;
    let mut vectors: Vec<FreeVector<F>> = columns.to_vec();
    let mut degrees: Vec<i32> = source.degrees.iter().map(|d| d + shift).collect();
    vectors.extend(n.gens.iter().cloned());
    degrees.extend(n.degrees());
    let syz = raw_syzygies(ring, target, &vectors, degrees)?;
    let r = source.rank();
    let projected: Vec<FreeVector<F>> = syz
        .into_iter()
        .map(|s| FreeVector::new(s.comps.into_iter().take(r).collect()))
        .collect();
    minimal_generators(&Submodule::new(ring.clone(), source.clone(), projected)?)
}

/// `h(F/M)` for the submodule `M = sub`.
pub fn quotient_series<F: Field>(sub: &Submodule<F>) -> Result<HilbertSeries> {
    Ok(buchberger(sub, MonomialOrder::Grevlex)?.quotient_series())
}

/// `h(M)` for the submodule `M = sub`.
pub fn submodule_series<F: Field>(sub: &Submodule<F>) -> Result<HilbertSeries> {
    Ok(buchberger(sub, MonomialOrder::Grevlex)?.submodule_series())
}

/// Convenience: the ideal generated by `polys` as a submodule of `S`.
pub fn ideal<F: Field>(ring: &PolyRing<F>, polys: Vec<Polynomial<F>>) -> Result<Submodule<F>> {
    let gens = polys.into_iter().map(|p| FreeVector::new(vec![p])).collect();
    Submodule::new(ring.clone(), GradedFreeModule::free(ring.nvars, 1), gens)
}

#[cfg(test)]
mod tests;
