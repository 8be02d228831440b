//! The logarithmic modules of an arrangement as graded submodules of
//! exterior powers of `S^ℓ`.
//!
//! Gradings: `∂_i` has degree −1 and `dx_i` degree +1. A log form `ω` is
//! stored through `η = fω`, so the ambient of `fΩ^p` is `Λ^p` with basis
//! degrees `p − n`. With these twists the series of the stored submodule is
//! the series of the module itself.

use serde::{Deserialize, Serialize};

use crate::arrangement::exterior::{
    apply_constant_map, contract_covector, euler_contraction, euler_wedge, wedge_covector, ExteriorBasis,
};
use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{self, Submodule, TrackedBasis};
use crate::homalg::{ext_report, ExtReport, Presentation, Resolution};
use crate::laurent::HilbertSeries;
use crate::linalg::binomial;
use crate::module::{apply_columns, homogeneous_degree, FreeVector, GradedFreeModule};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Role {
    /// `D_p(A) ⊆ Λ^p Der`.
    D,
    /// `fΩ^p(A) ⊆ Λ^p Ω_S`.
    FOmega,
    /// `Ω^p_0(A)`: the kernel of `ι_χ` on `fΩ^p(A)`.
    FOmega0,
    /// `D^0_p(A) = D_p / χ ∧ D_{p−1}`.
    D0,
    /// Derivations killing `f`, i.e. syzygies of the partials.
    SyzJacobian,
}

impl Role {
    pub fn name(&self) -> &'static str {
        match self {
            Role::D => "D",
            Role::FOmega => "fOmega",
            Role::FOmega0 => "fOmega0",
            Role::D0 => "D0",
            Role::SyzJacobian => "SyzJ",
        }
    }

    pub fn parse(s: &str) -> Option<Role> {
        [Role::D, Role::FOmega, Role::FOmega0, Role::D0, Role::SyzJacobian]
            .into_iter()
            .find(|r| r.name().eq_ignore_ascii_case(s))
    }

    pub fn all() -> [Role; 5] {
        [Role::D, Role::FOmega, Role::FOmega0, Role::D0, Role::SyzJacobian]
    }
}

#[derive(Clone, Debug)]
pub enum ModuleBody<F: Field> {
    Submodule(Submodule<F>),
    Presentation(Presentation<F>),
}

#[derive(Clone, Debug)]
pub struct LogModule<F: Field> {
    pub role: Role,
    pub p: usize,
    pub body: ModuleBody<F>,
    /// Offset between the module grading and the polynomial representative:
    /// `−n` for the form roles (stored vectors are `f` times a form).
    pub shift: i32,
}

/// Ambient of `Λ^p Der`: basis degree `−p`.
pub fn derivation_ambient(nvars: usize, p: usize) -> GradedFreeModule {
    GradedFreeModule::new(nvars, vec![-(p as i32); binomial(nvars as u64, p as u64) as usize])
}

/// Ambient of `f·Λ^p Ω_S`: basis degree `p − n`.
pub fn form_ambient(nvars: usize, n: usize, p: usize) -> GradedFreeModule {
    GradedFreeModule::new(
        nvars,
        vec![p as i32 - n as i32; binomial(nvars as u64, p as u64) as usize],
    )
}

/// Generators of `{v ∈ ⟨gens⟩ : image(v) ∈ ⟨n_gens⟩}`, for a linear map
/// `image` from the ambient into `target`.
fn restrict_by<F: Field>(
    a: &Arrangement<F>,
    ambient: &GradedFreeModule,
    gens: Vec<FreeVector<F>>,
    target: &GradedFreeModule,
    image: impl Fn(&FreeVector<F>) -> FreeVector<F>,
    n_gens: &[FreeVector<F>],
) -> Result<Vec<FreeVector<F>>> {
    let ring = a.ring();
    if gens.is_empty() {
        return Ok(gens);
    }
    let degrees = gens
        .iter()
        .map(|g| homogeneous_degree(g, ambient))
        .collect::<Result<Vec<_>>>()?;
    let source = GradedFreeModule::new(a.nvars, degrees);
    let columns: Vec<FreeVector<F>> = gens.iter().map(&image).collect();
    let ker = groebner::kernel_modulo(&ring, &source, target, &columns, n_gens)?;
    let images = ker
        .gens
        .iter()
        .map(|c| apply_columns(&ring, &gens, ambient.rank(), c))
        .collect();
    let sub = Submodule::new(ring, ambient.clone(), images)?;
    Ok(groebner::minimal_generators(&sub)?.gens)
}

fn unit_vectors<F: Field>(a: &Arrangement<F>, rank: usize) -> Vec<FreeVector<F>> {
    let ring = a.ring();
    (0..rank).map(|i| FreeVector::unit(&ring, rank, i)).collect()
}

/// `α_H · e_J` for every basis element of `target`.
fn multiples_of_form<F: Field>(a: &Arrangement<F>, h: usize, rank: usize) -> Vec<FreeVector<F>> {
    let ring = a.ring();
    let alpha = a.form_poly(h);
    (0..rank)
        .map(|i| FreeVector::unit(&ring, rank, i).scale_poly(&ring, &alpha))
        .collect()
}

impl<F: Field> LogModule<F> {
    fn zero_module(a: &Arrangement<F>, role: Role, p: usize) -> Self {
        let ring = a.ring();
        LogModule {
            role,
            p,
            body: ModuleBody::Submodule(Submodule::zero(ring, GradedFreeModule::new(a.nvars, Vec::new()))),
            shift: 0,
        }
    }

    fn form_shift(a: &Arrangement<F>) -> i32 {
        -(a.len() as i32)
    }

    /// `D_p(A)`: `θ ∈ Λ^p Der` with `ι_{dα_H} θ ≡ 0 mod α_H` for every `H`.
    pub fn derivations(a: &Arrangement<F>, p: usize) -> Result<Self> {
        if p > a.nvars {
            return Ok(Self::zero_module(a, Role::D, p));
        }
        let ring = a.ring();
        let ambient = derivation_ambient(a.nvars, p);
        let mut gens = unit_vectors(a, ambient.rank());
        if p > 0 {
            let src = ExteriorBasis::new(a.nvars, p);
            let tgt = ExteriorBasis::new(a.nvars, p - 1);
            let target = derivation_ambient(a.nvars, p - 1);
            for h in 0..a.len() {
                let cov = &a.forms[h];
                let image = |v: &FreeVector<F>| {
                    apply_constant_map(&ring, &src, &tgt, v, |j| contract_covector(&a.field, cov, j))
                };
                let n_gens = multiples_of_form(a, h, tgt.rank());
                gens = restrict_by(a, &ambient, gens, &target, image, &n_gens)?;
            }
        }
        Ok(LogModule {
            role: Role::D,
            p,
            body: ModuleBody::Submodule(Submodule::new(ring, ambient, gens)?),
            shift: 0,
        })
    }

    /// `fΩ^p(A)`: `η ∈ Λ^p Ω_S` with `α_H | dα_H ∧ η` for every `H`.
    pub fn forms(a: &Arrangement<F>, p: usize) -> Result<Self> {
        if p > a.nvars {
            return Ok(Self::zero_module(a, Role::FOmega, p));
        }
        let ring = a.ring();
        let n = a.len();
        let ambient = form_ambient(a.nvars, n, p);
        let mut gens = unit_vectors(a, ambient.rank());
        if p < a.nvars {
            let src = ExteriorBasis::new(a.nvars, p);
            let tgt = ExteriorBasis::new(a.nvars, p + 1);
            let target = form_ambient(a.nvars, n, p + 1);
            for h in 0..n {
                let cov = &a.forms[h];
                let image =
                    |v: &FreeVector<F>| apply_constant_map(&ring, &src, &tgt, v, |j| wedge_covector(&a.field, cov, j));
                let n_gens = multiples_of_form(a, h, tgt.rank());
                gens = restrict_by(a, &ambient, gens, &target, image, &n_gens)?;
            }
        }
        Ok(LogModule {
            role: Role::FOmega,
            p,
            body: ModuleBody::Submodule(Submodule::new(ring, ambient, gens)?),
            shift: Self::form_shift(a),
        })
    }

    /// `Ω^p_0(A)`: the kernel of `ι_χ : fΩ^p → fΩ^{p−1}`.
    pub fn relative_forms(a: &Arrangement<F>, p: usize) -> Result<Self> {
        let full = Self::forms(a, p)?;
        Self::relative_forms_from(a, &full)
    }

    /// `Ω^p_0(A)` from an already computed `fΩ^p(A)`.
    pub fn relative_forms_from(a: &Arrangement<F>, full: &LogModule<F>) -> Result<Self> {
        let p = full.p;
        if full.role != Role::FOmega {
            return Err(Error::invalid("expected the module fOmega"));
        }
        if p > a.nvars {
            return Ok(Self::zero_module(a, Role::FOmega0, p));
        }
        let ModuleBody::Submodule(sub) = &full.body else {
            return Err(Error::internal("fOmega is stored as a submodule"));
        };
        let mut body = sub.clone();
        if p > 0 {
            let ring = a.ring();
            let src = ExteriorBasis::new(a.nvars, p);
            let tgt = ExteriorBasis::new(a.nvars, p - 1);
            let target = form_ambient(a.nvars, a.len(), p - 1);
            let gens = restrict_by(
                a,
                &sub.parent,
                sub.gens.clone(),
                &target,
                |v| euler_contraction(&ring, &src, &tgt, v),
                &[],
            )?;
            body = Submodule::new(ring, sub.parent.clone(), gens)?;
        }
        Ok(LogModule {
            role: Role::FOmega0,
            p,
            body: ModuleBody::Submodule(body),
            shift: Self::form_shift(a),
        })
    }

    /// `D^0_p(A) = D_p / χ ∧ D_{p−1}` as a pruned presentation.
    pub fn relative_derivations(a: &Arrangement<F>, p: usize) -> Result<Self> {
        let dp = Self::derivations(a, p)?;
        let dq = if p > 0 {
            Some(Self::derivations(a, p - 1)?)
        } else {
            None
        };
        Self::relative_derivations_from(a, &dp, dq.as_ref())
    }

    /// `D^0_p(A)` from computed `D_p` and `D_{p−1}`.
    pub fn relative_derivations_from(a: &Arrangement<F>, dp: &LogModule<F>, dq: Option<&LogModule<F>>) -> Result<Self> {
        let p = dp.p;
        let ring = a.ring();
        let (ModuleBody::Submodule(sub), true) = (&dp.body, dp.role == Role::D) else {
            return Err(Error::invalid("expected the module D"));
        };
        let min = groebner::minimal_generators(sub)?;
        let degrees = min.degrees();
        let mut relations = groebner::syzygies_of(&ring, &sub.parent, &min.gens, degrees.clone())?.gens;
        if let (Some(dq), true) = (dq, p > 0 && p <= a.nvars) {
            let ModuleBody::Submodule(lower) = &dq.body else {
                return Err(Error::invalid("expected the module D"));
            };
            let src = ExteriorBasis::new(a.nvars, p - 1);
            let tgt = ExteriorBasis::new(a.nvars, p);
            let tb = TrackedBasis::new(&ring, &sub.parent, &min.gens)?;
            for g in &lower.gens {
                let w = euler_wedge(&ring, &src, &tgt, g);
                if w.is_zero() {
                    continue;
                }
                let lifted = tb
                    .lift(&w)?
                    .ok_or_else(|| Error::internal("χ ∧ D_{p−1} is not contained in D_p"))?;
                relations.push(lifted);
            }
        }
        let pres = Presentation::new(ring, GradedFreeModule::new(a.nvars, degrees), relations)?.prune()?;
        Ok(LogModule {
            role: Role::D0,
            p,
            body: ModuleBody::Presentation(pres),
            shift: 0,
        })
    }

    /// Derivations `θ` with `θ(f) = 0`, inside `Der = S(1)^ℓ`.
    pub fn jacobian_syzygies(a: &Arrangement<F>) -> Result<Self> {
        let jd = a.jacobian_data()?;
        Ok(LogModule {
            role: Role::SyzJacobian,
            p: 1,
            body: ModuleBody::Submodule(jd.syz),
            shift: 0,
        })
    }

    /// Builds the module with the given role.
    pub fn build(a: &Arrangement<F>, role: Role, p: usize) -> Result<Self> {
        match role {
            Role::D => Self::derivations(a, p),
            Role::FOmega => Self::forms(a, p),
            Role::FOmega0 => Self::relative_forms(a, p),
            Role::D0 => Self::relative_derivations(a, p),
            Role::SyzJacobian => Self::jacobian_syzygies(a),
        }
    }

    pub fn hilbert_series(&self) -> Result<HilbertSeries> {
        match &self.body {
            ModuleBody::Submodule(s) => groebner::submodule_series(s),
            ModuleBody::Presentation(p) => p.hilbert_series(),
        }
    }

    /// A presentation of the module (minimal generators and their syzygies
    /// for a submodule body).
    pub fn presentation(&self) -> Result<Presentation<F>> {
        match &self.body {
            ModuleBody::Submodule(s) => Presentation::of_submodule(s),
            ModuleBody::Presentation(p) => Ok(p.clone()),
        }
    }

    pub fn resolution(&self) -> Result<Resolution<F>> {
        match &self.body {
            ModuleBody::Submodule(s) => Resolution::of_submodule(s),
            ModuleBody::Presentation(p) => Resolution::of_presentation(p),
        }
    }

    /// Projective dimension; `None` for the zero module.
    pub fn projective_dimension(&self) -> Result<Option<usize>> {
        Ok(self.resolution()?.projective_dimension())
    }

    pub fn ext(&self, i: usize) -> Result<ExtReport<F>> {
        ext_report(&self.resolution()?, i)
    }

    /// Minimal generators of a submodule body (`None` for presentations).
    pub fn minimal_generators(&self) -> Result<Option<Submodule<F>>> {
        match &self.body {
            ModuleBody::Submodule(s) => Ok(Some(groebner::minimal_generators(s)?)),
            ModuleBody::Presentation(_) => Ok(None),
        }
    }

    /// Degrees of minimal generators in the module grading.
    pub fn generator_degrees(&self) -> Result<Vec<i32>> {
        let mut d = match &self.body {
            ModuleBody::Submodule(s) => groebner::minimal_generators(s)?.degrees(),
            ModuleBody::Presentation(p) => p.prune()?.target.degrees,
        };
        d.sort();
        Ok(d)
    }

    pub fn submodule(&self) -> Option<&Submodule<F>> {
        match &self.body {
            ModuleBody::Submodule(s) => Some(s),
            ModuleBody::Presentation(_) => None,
        }
    }
}
