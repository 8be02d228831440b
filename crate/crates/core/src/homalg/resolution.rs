use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::engine::{self, GbOptions, TermVec};
use crate::groebner::order::ModuleOrder;
use crate::groebner::{from_terms, to_terms, top_order, Submodule};
use crate::homalg::Presentation;
use crate::laurent::HilbertSeries;
use crate::module::{FreeVector, GradedFreeModule};
use crate::monomial::MonomialOrder;
use crate::poly::PolyRing;

/// A graded free resolution `F_0 ← F_1 ← ⋯ ← F_d`.
///
/// `maps[i]` holds the columns of `F_{i+1} → F_i`, one vector in `F_i` per
/// basis element of `F_{i+1}`.
#[derive(Clone, Debug)]
pub struct Resolution<F: Field> {
    pub ring: PolyRing<F>,
    pub modules: Vec<GradedFreeModule>,
    pub maps: Vec<Vec<FreeVector<F>>>,
    pub minimal: bool,
}

struct Level<F: Field> {
    degrees: Vec<i32>,
    columns: Vec<FreeVector<F>>,
}

/// Resolves the submodule generated by `gens` in `ambient`. Level `k` of the
/// result is a minimal generating set of the `k`-th syzygy module, given as
/// vectors in the previous level's free module.
fn resolve_levels<F: Field>(
    ring: &PolyRing<F>,
    ambient: &GradedFreeModule,
    gens: &[FreeVector<F>],
) -> Result<Vec<Level<F>>> {
    let field = &ring.field;
    let mut order = top_order(ambient, MonomialOrder::Grevlex);
    let mut inputs: Vec<TermVec<F::Elem>> = gens.iter().map(|g| to_terms(field, &order, g)).collect();
    inputs.retain(|v| !v.is_empty());
    let mut levels = Vec::new();
    let opts = GbOptions {
        track: true,
        record_redundant: false,
        interreduce: false,
    };
    while !inputs.is_empty() {
        if levels.len() > ring.nvars + 1 {
            return Err(Error::internal("resolution longer than the number of variables"));
        }
        let degrees: Vec<i32> = inputs.iter().map(|v| order.term_degree(&v[0].m, v[0].c)).collect();
        let rank = order.rank();
        let run = engine::run(field, ring.nvars, order, inputs.clone(), degrees.clone(), opts)?;
        let keep: Vec<usize> = (0..inputs.len()).filter(|&i| run.retained[i]).collect();
        let mut pos = vec![usize::MAX; inputs.len()];
        for (k, &i) in keep.iter().enumerate() {
            pos[i] = k;
        }
        let columns = keep.iter().map(|&i| from_terms(ring, rank, &inputs[i])).collect();
        let e_order: ModuleOrder = run.state.e_order.clone().expect("tracked run").restrict(&keep);
        let mut next = Vec::with_capacity(run.syzygies.len());
        for s in run.syzygies {
            let mut s = s;
            for t in s.iter_mut() {
                let p = pos[t.c as usize];
                if p == usize::MAX {
                    return Err(Error::internal("syzygy involves a discarded generator"));
                }
                t.c = p as u32;
            }
            next.push(s);
        }
        levels.push(Level {
            degrees: keep.iter().map(|&i| degrees[i]).collect(),
            columns,
        });
        inputs = next;
        order = e_order;
    }
    Ok(levels)
}

impl<F: Field> Resolution<F> {
    /// Minimal resolution of the module generated by `sub`.
    pub fn of_submodule(sub: &Submodule<F>) -> Result<Self> {
        let ring = &sub.ring;
        let levels = resolve_levels(ring, &sub.parent, &sub.gens)?;
        let mut modules = Vec::new();
        let mut maps = Vec::new();
        for (k, lvl) in levels.into_iter().enumerate() {
            modules.push(GradedFreeModule::new(ring.nvars, lvl.degrees));
            if k > 0 {
                maps.push(lvl.columns);
            }
        }
        Ok(Resolution {
            ring: ring.clone(),
            modules,
            maps,
            minimal: true,
        })
    }

    /// Minimal resolution of the cokernel of a presentation.
    pub fn of_presentation(pres: &Presentation<F>) -> Result<Self> {
        let pruned = pres.prune()?;
        let ring = &pres.ring;
        if pruned.target.rank() == 0 {
            return Ok(Resolution {
                ring: ring.clone(),
                modules: Vec::new(),
                maps: Vec::new(),
                minimal: true,
            });
        }
        let levels = resolve_levels(ring, &pruned.target, &pruned.relations)?;
        let mut modules = vec![pruned.target.clone()];
        let mut maps = Vec::new();
        for lvl in levels {
            modules.push(GradedFreeModule::new(ring.nvars, lvl.degrees));
            maps.push(lvl.columns);
        }
        Ok(Resolution {
            ring: ring.clone(),
            modules,
            maps,
            minimal: true,
        })
    }

    /// Length of the resolution; `None` for the zero module.
    pub fn projective_dimension(&self) -> Option<usize> {
        (!self.modules.is_empty()).then(|| self.modules.len() - 1)
    }

    pub fn is_zero_module(&self) -> bool {
        self.modules.is_empty()
    }

    /// Betti numbers `(i, degree, count)`, sorted.
    pub fn betti(&self) -> Vec<(usize, i32, usize)> {
        let mut out = Vec::new();
        for (i, m) in self.modules.iter().enumerate() {
            let mut ds = m.degrees.clone();
            ds.sort();
            let mut k = 0;
            while k < ds.len() {
                let d = ds[k];
                let n = ds[k..].iter().take_while(|&&x| x == d).count();
                out.push((i, d, n));
                k += n;
            }
        }
        out
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.modules.iter().map(|m| m.rank()).collect()
    }

    /// `Σ (−1)^i h(F_i)`, which equals the series of the resolved module.
    pub fn euler_series(&self) -> HilbertSeries {
        let mut acc = HilbertSeries::zero();
        for (i, m) in self.modules.iter().enumerate() {
            let h = HilbertSeries::free(self.ring.nvars, &m.degrees);
            acc = if i % 2 == 0 { acc.add(&h) } else { acc.sub(&h) };
        }
        acc
    }

    /// Composites of consecutive maps vanish.
    pub fn is_complex(&self) -> bool {
        let ring = &self.ring;
        for i in 1..self.maps.len() {
            let prev = &self.maps[i - 1];
            let rank = self.modules[i - 1].rank();
            for col in &self.maps[i] {
                if !crate::module::apply_columns(ring, prev, rank, col).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// No entry of any map is a nonzero constant.
    pub fn check_minimal(&self) -> bool {
        self.maps
            .iter()
            .flatten()
            .flat_map(|v| v.comps.iter())
            .all(|p| p.terms().iter().all(|(m, _)| !m.is_one()))
    }
}
