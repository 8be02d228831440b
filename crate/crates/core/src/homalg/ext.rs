use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::field::Field;
use crate::groebner::{self, Submodule, TrackedBasis};
use crate::homalg::{Presentation, Resolution};
use crate::laurent::HilbertSeries;
use crate::module::{FreeVector, GradedFreeModule};

/// Krull dimension of a module's support; `Empty` for the zero module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SupportDim {
    Empty,
    Dim(u32),
}

impl SupportDim {
    pub fn of_series(h: &HilbertSeries) -> Self {
        if h.is_zero() {
            SupportDim::Empty
        } else {
            SupportDim::Dim(h.pole_order())
        }
    }

    /// Codimension in a ring of `nvars` variables; `None` (infinite) for the
    /// zero module.
    pub fn codim(&self, nvars: usize) -> Option<u32> {
        match self {
            SupportDim::Empty => None,
            SupportDim::Dim(d) => Some(nvars as u32 - d),
        }
    }

    /// The integer reported for the zero module is 0.
    pub fn as_int(&self) -> u32 {
        match self {
            SupportDim::Empty => 0,
            SupportDim::Dim(d) => *d,
        }
    }
}

/// `Ext^i(M, S)` with its numerical data.
#[derive(Clone, Debug)]
pub struct ExtReport<F: Field> {
    pub index: usize,
    pub presentation: Presentation<F>,
    pub hilbert: HilbertSeries,
    pub support: SupportDim,
    pub artinian: bool,
    pub length: Option<i64>,
}

impl<F: Field> ExtReport<F> {
    pub fn is_zero(&self) -> bool {
        self.hilbert.is_zero()
    }

    fn from_presentation(index: usize, presentation: Presentation<F>) -> Result<Self> {
        let hilbert = presentation.hilbert_series()?;
        let support = SupportDim::of_series(&hilbert);
        let artinian = matches!(support, SupportDim::Empty | SupportDim::Dim(0));
        let length = hilbert.length();
        Ok(ExtReport {
            index,
            presentation,
            hilbert,
            support,
            artinian,
            length,
        })
    }
}

/// Column `j` of the transpose: `(cols[k].comps[j])_k`.
fn transpose_columns<F: Field>(cols: &[FreeVector<F>], nrows: usize) -> Vec<FreeVector<F>> {
    (0..nrows)
        .map(|j| FreeVector::new(cols.iter().map(|c| c.comps[j].clone()).collect()))
        .collect()
}

/// Homology of the dual complex `Hom(F_•, S)` at position `i`.
pub fn ext_from_resolution<F: Field>(res: &Resolution<F>, i: usize) -> Result<Presentation<F>> {
    let ring = &res.ring;
    let Some(pd) = res.projective_dimension() else {
        return Ok(Presentation::zero(ring.clone()));
    };
    if i > pd {
        return Ok(Presentation::zero(ring.clone()));
    }
    let fi_dual = res.modules[i].dual();
    // d_i^∨ : F_{i−1}^∨ → F_i^∨, image generators as vectors in F_i^∨
    let image: Vec<FreeVector<F>> = if i == 0 {
        Vec::new()
    } else {
        transpose_columns(&res.maps[i - 1], res.modules[i - 1].rank())
    };
    if i == pd {
        let p = Presentation::new(ring.clone(), fi_dual, image)?;
        return p.prune();
    }
    let next_dual = res.modules[i + 1].dual();
    let dual_cols = transpose_columns(&res.maps[i], res.modules[i].rank());
    let kernel_vecs = groebner::syzygies_of(ring, &next_dual, &dual_cols, fi_dual.degrees.clone())?;
    let kernel = Submodule::new(ring.clone(), fi_dual.clone(), kernel_vecs.gens)?;
    let kernel = groebner::minimal_generators(&kernel)?;
    let kdeg = kernel.degrees();
    let kfree = GradedFreeModule::new(ring.nvars, kdeg.clone());
    let mut relations = groebner::syzygies_of(ring, &fi_dual, &kernel.gens, kdeg)?.gens;
    if !image.is_empty() {
        let tb = TrackedBasis::new(ring, &fi_dual, &kernel.gens)?;
        for v in &image {
            if v.is_zero() {
                continue;
            }
            let lifted = tb
                .lift(v)?
                .ok_or_else(|| crate::error::Error::internal("image of the dual map is not inside the kernel"))?;
            relations.push(lifted);
        }
    }
    Presentation::new(ring.clone(), kfree, relations)?.prune()
}

/// `Ext^i(M, S)` for `M` given by a resolution.
pub fn ext_report<F: Field>(res: &Resolution<F>, i: usize) -> Result<ExtReport<F>> {
    ExtReport::from_presentation(i, ext_from_resolution(res, i)?)
}

/// `Ext^i(M, S)` for the cokernel of a presentation.
pub fn ext_module<F: Field>(m: &Presentation<F>, i: usize) -> Result<ExtReport<F>> {
    ext_report(&Resolution::of_presentation(m)?, i)
}

/// `Ext^i(M, S)` for the module generated by a submodule.
pub fn ext_of_submodule<F: Field>(m: &Submodule<F>, i: usize) -> Result<ExtReport<F>> {
    ext_report(&Resolution::of_submodule(m)?, i)
}

/// `p`-spherical: projective dimension at most `p` and `Ext^i = 0` for
/// `1 ≤ i ≤ p − 1`.
pub fn is_spherical<F: Field>(res: &Resolution<F>, p: usize) -> Result<bool> {
    if res.projective_dimension().unwrap_or(0) > p {
        return Ok(false);
    }
    for i in 1..p {
        if !ext_report(res, i)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Support dimension read from a Hilbert series.
pub fn support_dimension(h: &HilbertSeries) -> SupportDim {
    SupportDim::of_series(h)
}

/// Length of a module from its series: finite only in support dimension 0.
pub fn module_length(h: &HilbertSeries) -> Option<i64> {
    h.length()
}
