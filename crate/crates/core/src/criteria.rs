//! Freeness and related tests: Saito freeness, tameness, freeness outside
//! points, purity of the Jacobian scheme, the Wakefield-type predictor, and
//! the comparison module `E^p` of wedge products of log 1-forms.

use serde::{Deserialize, Serialize};

use crate::arrangement::exterior::{wedge, ExteriorBasis};
use crate::arrangement::logmod::form_ambient;
use crate::arrangement::{Arrangement, LogModule};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{self, TrackedBasis};
use crate::homalg::{ext_report, Presentation, Resolution, SupportDim};
use crate::laurent::HilbertSeries;
use crate::linalg::subsets_colex;
use crate::module::{FreeVector, GradedFreeModule};
use crate::par::{self, Parallelism};
use crate::poly::{PolyRing, Polynomial};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct FreenessReport {
    pub free: bool,
    /// Projective dimension of `D(A)`.
    pub pd: usize,
    /// Polynomial-coefficient degrees of a basis of `D(A)` when free.
    pub exponents: Vec<i32>,
    pub saito_determinant_checked: bool,
}

/// Determinant of a square polynomial matrix by fraction-free elimination.
pub fn polynomial_determinant<F: Field>(ring: &PolyRing<F>, mut m: Vec<Vec<Polynomial<F>>>) -> Result<Polynomial<F>> {
    let n = m.len();
    let mut sign = true;
    let mut prev = ring.one();
    for k in 0..n {
        let Some(piv) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return Ok(ring.zero());
        };
        if piv != k {
            m.swap(piv, k);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = ring.sub(&ring.mul(&m[k][k], &m[i][j]), &ring.mul(&m[i][k], &m[k][j]));
                m[i][j] = ring.exact_divide(&num, &prev)?;
            }
        }
        prev = m[k][k].clone();
    }
    let det = if n == 0 { ring.one() } else { m[n - 1][n - 1].clone() };
    Ok(if sign { det } else { ring.neg(&det) })
}

/// `p ≠ 0` and `p = c·q` for a scalar `c`.
fn scalar_multiple<F: Field>(ring: &PolyRing<F>, p: &Polynomial<F>, q: &Polynomial<F>) -> bool {
    let (Some((_, cp)), Some((_, cq))) = (p.leading(), q.leading()) else {
        return false;
    };
    let c = ring.field.div(cp, cq);
    ring.sub(p, &ring.scale(q, &c)).is_zero()
}

/// Decides freeness by `pd D(A) = 0`, then checks Saito's criterion on the
/// basis found: `ℓ` generators whose coefficient determinant is `c·f`.
pub fn is_free<F: Field>(a: &Arrangement<F>) -> Result<FreenessReport> {
    a.require_good_characteristic()?;
    let d = LogModule::derivations(a, 1)?;
    let res = d.resolution()?;
    let pd = res.projective_dimension().unwrap_or(0);
    if pd > 0 {
        return Ok(FreenessReport {
            free: false,
            pd,
            exponents: Vec::new(),
            saito_determinant_checked: false,
        });
    }
    let sub = d.minimal_generators()?.expect("D is a submodule");
    if sub.gens.len() != a.nvars {
        return Err(Error::internal(format!(
            "free derivation module with {} generators in {} variables",
            sub.gens.len(),
            a.nvars
        )));
    }
    let ring = a.ring();
    let matrix: Vec<Vec<Polynomial<F>>> = sub.gens.iter().map(|g| g.comps.clone()).collect();
    let det = polynomial_determinant(&ring, matrix)?;
    if !scalar_multiple(&ring, &det, &a.defining_polynomial()) {
        return Err(Error::internal(
            "Saito determinant of a free basis is not a multiple of f",
        ));
    }
    let mut exponents: Vec<i32> = sub.degrees().iter().map(|d| d + 1).collect();
    exponents.sort();
    if exponents.iter().sum::<i32>() != a.len() as i32 {
        return Err(Error::internal("exponents of a free arrangement do not sum to n"));
    }
    Ok(FreenessReport {
        free: true,
        pd: 0,
        exponents,
        saito_determinant_checked: true,
    })
}

/// `pd Ω^p(A)` for `0 ≤ p ≤ ℓ` (the zero module counts as 0).
pub fn form_projective_dimensions<F: Field>(a: &Arrangement<F>, par: Parallelism) -> Result<Vec<usize>> {
    par::try_map(par, (0..=a.nvars).collect(), |p| {
        Ok(LogModule::forms(a, p)?.projective_dimension()?.unwrap_or(0))
    })
}

/// `pd Ω^p(A) ≤ p` for `0 ≤ p ≤ k` (`k = None` means all `p ≤ ℓ`).
pub fn is_tame<F: Field>(a: &Arrangement<F>, k: Option<usize>) -> Result<bool> {
    is_tame_with(a, k, Parallelism::available())
}

pub fn is_tame_with<F: Field>(a: &Arrangement<F>, k: Option<usize>, par: Parallelism) -> Result<bool> {
    a.require_good_characteristic()?;
    let top = k.unwrap_or(a.nvars).min(a.nvars);
    let pds = par::try_map(par, (0..=top).collect(), |p| {
        Ok::<_, Error>(LogModule::forms(a, p)?.projective_dimension()?.unwrap_or(0))
    })?;
    Ok(pds.iter().enumerate().all(|(p, &d)| d <= p))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct LocalFreeness {
    pub free_outside_points: bool,
    /// Hyperplane index sets of proper flats whose localization is not free.
    pub non_free_flats: Vec<Vec<usize>>,
}

/// Every proper flat `X` (`rank X < ℓ`) has a free localization `A_X`.
/// Flats of rank at most 2 are always free and are skipped.
pub fn local_freeness<F: Field>(a: &Arrangement<F>, par: Parallelism) -> Result<LocalFreeness> {
    a.require_good_characteristic()?;
    let lattice = a.lattice();
    let flats: Vec<Vec<usize>> = lattice
        .flats
        .iter()
        .filter(|f| f.rank >= 3 && f.rank < a.nvars)
        .map(|f| f.indices.clone())
        .collect();
    let verdicts = par::try_map(par, flats.clone(), |idx| {
        let local = a.essentialize(&idx)?;
        Ok::<_, Error>(is_free(&local)?.free)
    })?;
    let non_free_flats: Vec<Vec<usize>> = flats
        .into_iter()
        .zip(verdicts)
        .filter(|(_, free)| !free)
        .map(|(f, _)| f)
        .collect();
    Ok(LocalFreeness {
        free_outside_points: non_free_flats.is_empty(),
        non_free_flats,
    })
}

pub fn is_free_outside_points<F: Field>(a: &Arrangement<F>) -> Result<bool> {
    Ok(local_freeness(a, Parallelism::available())?.free_outside_points)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PurityReport {
    pub pure: bool,
    /// `(p, dim supp Ext^p(S/J, S))` for `3 ≤ p ≤ ℓ`.
    pub ext_support: Vec<(usize, SupportDim)>,
}

/// `S/J_A` as a presentation.
pub fn jacobian_quotient<F: Field>(a: &Arrangement<F>) -> Result<Presentation<F>> {
    let jd = a.jacobian_data()?;
    let ring = a.ring();
    Presentation::new(ring, GradedFreeModule::free(a.nvars, 1), jd.ideal.gens)
}

/// The Jacobian scheme is pure of codimension 2 iff
/// `codim supp Ext^p(S/J, S) > p` for all `p ≥ 3`.
pub fn jacobian_purity<F: Field>(a: &Arrangement<F>) -> Result<PurityReport> {
    let res = Resolution::of_presentation(&jacobian_quotient(a)?)?;
    let mut ext_support = Vec::new();
    let mut pure = true;
    for p in 3..=a.nvars {
        let e = ext_report(&res, p)?;
        if let SupportDim::Dim(d) = e.support {
            if a.nvars as u32 - d <= p as u32 {
                pure = false;
            }
        }
        ext_support.push((p, e.support));
    }
    Ok(PurityReport { pure, ext_support })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Prediction {
    Free,
    NotFree,
    Inapplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct WakefieldVerdict {
    pub euler_ok: bool,
    pub free_outside_points_ok: bool,
    pub pd_at_most_one_ok: bool,
    pub purity_ok: bool,
    pub prediction: Prediction,
    pub actual: bool,
}

impl WakefieldVerdict {
    /// The prediction, when made, matches the actual freeness.
    pub fn is_consistent(&self) -> bool {
        match self.prediction {
            Prediction::Free => self.actual,
            Prediction::NotFree => !self.actual,
            Prediction::Inapplicable => true,
        }
    }
}

/// Under Euler homogeneity, freeness outside points and `pd Ω^1 ≤ 1`, the
/// arrangement is free iff its Jacobian scheme is pure. Every ingredient is
/// computed even when a hypothesis fails.
pub fn wakefield_predictor<F: Field>(a: &Arrangement<F>, par: Parallelism) -> Result<WakefieldVerdict> {
    let euler_ok = a.is_good_characteristic();
    if !euler_ok {
        return Err(Error::BadCharacteristic(format!(
            "characteristic {} is bad for this arrangement",
            a.field.characteristic()
        )));
    }
    let free_outside_points_ok = local_freeness(a, par)?.free_outside_points;
    let pd1 = LogModule::forms(a, 1)?.projective_dimension()?.unwrap_or(0);
    let pd_at_most_one_ok = pd1 <= 1;
    let purity_ok = jacobian_purity(a)?.pure;
    let actual = is_free(a)?.free;
    let prediction = if euler_ok && free_outside_points_ok && pd_at_most_one_ok {
        if purity_ok {
            Prediction::Free
        } else {
            Prediction::NotFree
        }
    } else {
        Prediction::Inapplicable
    };
    Ok(WakefieldVerdict {
        euler_ok,
        free_outside_points_ok,
        pd_at_most_one_ok,
        purity_ok,
        prediction,
        actual,
    })
}

/// The map `j_p : Λ^p Ω^1(A) → Ω^p(A)` and its cokernel `E^p`.
#[derive(Clone, Debug)]
pub struct ComparisonModule<F: Field> {
    pub p: usize,
    /// Presentation of `Λ^p Ω^1(A)`.
    pub wedge_power: Presentation<F>,
    /// Presentation of `E^p = coker j_p`.
    pub cokernel: Presentation<F>,
    pub cokernel_series: HilbertSeries,
    pub j_injective: bool,
    pub j_surjective: bool,
}

impl<F: Field> ComparisonModule<F> {
    pub fn j_is_iso(&self) -> bool {
        self.j_injective && self.j_surjective
    }
}

/// Builds `Λ^p` of the module `Ω^1(A)` from a presentation, maps wedges of
/// generators into `fΩ^p` (dividing by `f^{p−1}`), and returns the cokernel.
pub fn comparison_module<F: Field>(a: &Arrangement<F>, p: usize) -> Result<ComparisonModule<F>> {
    if p > a.nvars {
        return Err(Error::OutOfRange(format!("p = {p} exceeds ℓ = {}", a.nvars)));
    }
    let ring = a.ring();
    let n = a.len();
    let l = a.nvars;
    let f = a.defining_polynomial();

    let one = LogModule::forms(a, 1)?;
    let gens1 = one.minimal_generators()?.expect("fOmega is a submodule");
    let deg1 = gens1.degrees();
    let m = gens1.gens.len();
    let rel1 = groebner::syzygies_of(&ring, &gens1.parent, &gens1.gens, deg1.clone())?.gens;

    // Λ^p of coker(rel1): basis e_I over p-subsets of the m generators,
    // relations r ∧ e_J over (p−1)-subsets J
    let wp_basis = ExteriorBasis::new(m, p);
    let wp_degrees: Vec<i32> = wp_basis
        .subsets
        .iter()
        .map(|s| s.iter().map(|&i| deg1[i]).sum())
        .collect();
    let wp_target = GradedFreeModule::new(l, wp_degrees);
    let mut wp_rel = Vec::new();
    if p >= 1 {
        let b1 = ExteriorBasis::new(m, 1);
        let bq = ExteriorBasis::new(m, p - 1);
        for r in &rel1 {
            for j in 0..bq.rank() {
                let e_j = FreeVector::unit(&ring, bq.rank(), j);
                let v = wedge(&ring, &b1, &bq, &wp_basis, r, &e_j);
                if !v.is_zero() {
                    wp_rel.push(v);
                }
            }
        }
    }
    let wedge_power = Presentation::new(ring.clone(), wp_target, wp_rel)?;

    // images of e_I in fΩ^p
    let target_amb = form_ambient(l, n, p);
    let images: Vec<FreeVector<F>> = subsets_colex(m, p)
        .iter()
        .map(|s| -> Result<FreeVector<F>> {
            if p == 0 {
                return Ok(FreeVector::new(vec![f.clone()]));
            }
            let b1 = ExteriorBasis::new(l, 1);
            let mut acc = gens1.gens[s[0]].clone();
            for (k, &i) in s.iter().enumerate().skip(1) {
                let bk = ExteriorBasis::new(l, k);
                let bk1 = ExteriorBasis::new(l, k + 1);
                acc = wedge(&ring, &bk, &b1, &bk1, &acc, &gens1.gens[i]);
            }
            let divisor = ring.pow(&f, p as u32 - 1);
            let comps = acc
                .comps
                .iter()
                .map(|c| ring.exact_divide(c, &divisor))
                .collect::<Result<Vec<_>>>()
                .map_err(|_| Error::internal("wedge of log forms is not divisible by f^(p-1)"))?;
            Ok(FreeVector::new(comps))
        })
        .collect::<Result<_>>()?;

    // E^p = fΩ^p / ⟨images⟩, presented over minimal generators of fΩ^p
    let omega_p = LogModule::forms(a, p)?;
    let gp = omega_p.minimal_generators()?.expect("fOmega is a submodule");
    let gp_deg = gp.degrees();
    let mut rels = groebner::syzygies_of(&ring, &gp.parent, &gp.gens, gp_deg.clone())?.gens;
    let tb = TrackedBasis::new(&ring, &gp.parent, &gp.gens)?;
    for v in &images {
        if v.is_zero() {
            continue;
        }
        let lifted = tb
            .lift(v)?
            .ok_or_else(|| Error::internal("wedge of log forms is not logarithmic"))?;
        rels.push(lifted);
    }
    let cokernel = Presentation::new(ring.clone(), GradedFreeModule::new(l, gp_deg), rels)?.prune()?;
    let cokernel_series = cokernel.hilbert_series()?;
    let omega_series = omega_p.hilbert_series()?;
    let image_sub = groebner::Submodule::new(ring.clone(), target_amb, images)?;
    let image_series = groebner::submodule_series(&image_sub)?;
    let wedge_series = wedge_power.hilbert_series()?;
    if omega_series.sub(&image_series) != cokernel_series {
        return Err(Error::internal("cokernel series does not match the image"));
    }
    Ok(ComparisonModule {
        p,
        wedge_power,
        j_surjective: cokernel_series.is_zero(),
        j_injective: wedge_series == image_series,
        cokernel,
        cokernel_series,
    })
}
