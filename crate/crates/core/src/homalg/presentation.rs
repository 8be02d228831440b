use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{self, Submodule};
use crate::laurent::HilbertSeries;
use crate::module::{FreeVector, GradedFreeModule, VectorDegree};
use crate::poly::PolyRing;

/// The cokernel of a homogeneous matrix: `target / ⟨relations⟩`.
#[derive(Clone, Debug)]
pub struct Presentation<F: Field> {
    pub ring: PolyRing<F>,
    pub target: GradedFreeModule,
    pub relations: Vec<FreeVector<F>>,
}

impl<F: Field> Presentation<F> {
    /// Checks homogeneity and drops zero relations.
    pub fn new(ring: PolyRing<F>, target: GradedFreeModule, relations: Vec<FreeVector<F>>) -> Result<Self> {
        let sub = Submodule::new(ring, target, relations)?;
        Ok(Presentation {
            ring: sub.ring,
            target: sub.parent,
            relations: sub.gens,
        })
    }

    /// The free module `target` itself.
    pub fn free(ring: PolyRing<F>, target: GradedFreeModule) -> Self {
        Presentation {
            ring,
            target,
            relations: Vec::new(),
        }
    }

    pub fn zero(ring: PolyRing<F>) -> Self {
        let n = ring.nvars;
        Self::free(ring, GradedFreeModule::new(n, Vec::new()))
    }

    /// A presentation of the abstract module generated by `sub`: minimal
    /// generators as the target basis, their syzygies as relations.
    pub fn of_submodule(sub: &Submodule<F>) -> Result<Self> {
        let min = groebner::minimal_generators(sub)?;
        let syz = groebner::syzygy_module(&min)?;
        Ok(Presentation {
            ring: sub.ring.clone(),
            target: syz.parent,
            relations: syz.gens,
        })
    }

    pub fn relations_submodule(&self) -> Submodule<F> {
        Submodule {
            ring: self.ring.clone(),
            parent: self.target.clone(),
            gens: self.relations.clone(),
        }
    }

    pub fn hilbert_series(&self) -> Result<HilbertSeries> {
        groebner::quotient_series(&self.relations_submodule())
    }

    /// Trivially zero: no generators left. Call [`Presentation::prune`]
    /// first for an exact answer.
    pub fn has_no_generators(&self) -> bool {
        self.target.rank() == 0
    }

    /// Removes generators killed by relations with a unit entry, then drops
    /// redundant relations. The result is a minimal presentation of the same
    /// module.
    pub fn prune(&self) -> Result<Self> {
        let ring = &self.ring;
        let field = &ring.field;
        let mut degrees = self.target.degrees.clone();
        let mut rels: Vec<FreeVector<F>> = self.relations.clone();
        loop {
            let mut found = None;
            'search: for (ri, r) in rels.iter().enumerate() {
                for (c, p) in r.comps.iter().enumerate() {
                    if p.len() == 1 && p.terms()[0].0.is_one() {
                        found = Some((ri, c));
                        break 'search;
                    }
                }
            }
            let Some((ri, c)) = found else { break };
            let r = rels.swap_remove(ri);
            let u = r.comps[c].terms()[0].1.clone();
            let uinv = field.inv(&u);
            let mut next = Vec::with_capacity(rels.len());
            for s in rels {
                let s = if s.comps[c].is_zero() {
                    s
                } else {
                    let factor = ring.scale(&s.comps[c], &field.neg(&uinv));
                    s.add(ring, &r.scale_poly(ring, &factor))
                };
                let mut comps = s.comps;
                comps.remove(c);
                let v = FreeVector::new(comps);
                if !v.is_zero() {
                    next.push(v);
                }
            }
            rels = next;
            degrees.remove(c);
        }
        let target = GradedFreeModule::new(self.ring.nvars, degrees);
        let sub = Submodule::new(ring.clone(), target, rels)?;
        let min = groebner::minimal_generators(&sub)?;
        Ok(Presentation {
            ring: ring.clone(),
            target: min.parent,
            relations: min.gens,
        })
    }

    /// Checks that every relation is homogeneous in the target.
    pub fn validate(&self) -> Result<()> {
        for r in &self.relations {
            if r.degree_in(&self.target) == VectorDegree::Inhomogeneous {
                return Err(Error::Inhomogeneous("relation".into()));
            }
        }
        Ok(())
    }
}
