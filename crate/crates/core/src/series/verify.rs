//! Checks of the generic-arrangement results against the Gröbner engine:
//! sphericity and the Ext series of `Ω^p_0(A_{n,ℓ})`, and the Hilbert series
//! additivity along deletion-restriction sequences.

use serde::{Deserialize, Serialize};

use crate::arrangement::{Arrangement, LogModule, Role};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::homalg::{ext_report, is_spherical, Presentation, Resolution};
use crate::laurent::HilbertSeries;
use crate::linalg::binomial;
use crate::module::{FreeVector, GradedFreeModule};
use crate::par::{self, Parallelism};
use crate::poly::PolyRing;
use crate::series::gf::generic_ext_series;

/// One value of `p` in the generic theorem.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenericCase {
    pub p: usize,
    pub spherical: bool,
    pub artinian: bool,
    pub length: Option<i64>,
    pub expected_length: i64,
    pub series: HilbertSeries,
    pub expected_series: HilbertSeries,
}

impl GenericCase {
    pub fn passed(&self) -> bool {
        self.spherical
            && self.artinian
            && self.length == Some(self.expected_length)
            && self.series == self.expected_series
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenericReport {
    pub n: usize,
    pub l: usize,
    pub cases: Vec<GenericCase>,
}

impl GenericReport {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(GenericCase::passed)
    }
}

/// `Ext^p(Ω^p_0(A_{n,ℓ}), S)` for `1 ≤ p ≤ ℓ−2`: `p`-spherical, Artinian of
/// length `C(n−1, ℓ)`, with series `[s^n u^ℓ v^p] T`.
pub fn verify_generic_theorem<F: Field>(field: F, n: usize, l: usize) -> Result<GenericReport> {
    verify_generic_theorem_with(field, n, l, Parallelism::Sequential)
}

pub fn verify_generic_theorem_with<F: Field>(field: F, n: usize, l: usize, par: Parallelism) -> Result<GenericReport> {
    if l < 3 {
        return Err(Error::invalid(format!("rank must be at least 3, got {l}")));
    }
    if n <= l {
        return Err(Error::invalid(format!(
            "A_({n},{l}) is Boolean or degenerate; the theorem needs n > ℓ"
        )));
    }
    let a = Arrangement::generic(field, n, l)?;
    a.require_good_characteristic()?;
    let cases = par::try_map(par, (1..=l - 2).collect(), |p| -> Result<GenericCase> {
        let m = LogModule::relative_forms(&a, p)?;
        let res = m.resolution()?;
        let e = ext_report(&res, p)?;
        Ok(GenericCase {
            p,
            spherical: is_spherical(&res, p)?,
            artinian: e.artinian,
            length: e.length,
            expected_length: binomial(n as u64 - 1, l as u64) as i64,
            series: e.hilbert,
            expected_series: generic_ext_series(n as u32, l as u32, p as u32)?,
        })
    })?;
    Ok(GenericReport { n, l, cases })
}

/// The deletion-restriction sequences for generic arrangements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sequence {
    /// `0 → Ω^p_0(A)(−1) → Ω^p_0(A') → Ω^p_0(A'') → 0`, rank ≥ 4, `p ≤ ℓ−3`.
    RelativeForms,
    /// `0 → D^0(A')(−1) → D^0(A) → D^0(A'') → 0`, rank ≥ 3.
    RelativeDerivations,
    /// `0 → Ω^{ℓ−2}_0(A') → Ω^{ℓ−2}_0(A) → Ω^{ℓ−3}_0(A'') → 0` up to twists,
    /// rank ≥ 3.
    TopRelativeForms,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeletionReport {
    pub sequence: Sequence,
    pub p: usize,
    /// Series of the sub, middle and quotient modules, untwisted.
    pub sub: HilbertSeries,
    pub middle: HilbertSeries,
    pub quotient: HilbertSeries,
    /// Twists `(a, b)` with `h(middle) = t^a h(sub) + t^b h(quotient)`, if any
    /// exist in `[−4, 4]²`. The first two kinds are expected to hold with
    /// `(1, 0)`.
    pub twists: Option<(i32, i32)>,
    pub holds: bool,
}

/// `A` has more than `ℓ` hyperplanes and every `ℓ` of them are independent.
pub fn is_generic_non_boolean<F: Field>(a: &Arrangement<F>) -> bool {
    a.len() > a.nvars
        && a.lattice()
            .flats
            .iter()
            .all(|f| f.rank == a.nvars || f.size() == f.rank)
}

fn series_of<F: Field>(a: &Arrangement<F>, role: Role, p: usize) -> Result<HilbertSeries> {
    LogModule::build(a, role, p)?.hilbert_series()
}

/// Checks Hilbert series additivity along one of the sequences for the
/// hyperplane `h` of `a`.
pub fn verify_deletion_restriction<F: Field>(
    a: &Arrangement<F>,
    h: usize,
    p: usize,
    sequence: Sequence,
) -> Result<DeletionReport> {
    if !is_generic_non_boolean(a) {
        return Err(Error::invalid(
            "deletion-restriction checks need a generic non-Boolean arrangement",
        ));
    }
    let l = a.nvars;
    let (del, res) = a.deletion_restriction(h)?;
    let (sub, middle, quotient, predicted) = match sequence {
        Sequence::RelativeForms => {
            if l < 4 || p + 3 > l {
                return Err(Error::invalid(format!(
                    "the relative forms sequence needs ℓ ≥ 4 and p ≤ ℓ − 3 (ℓ = {l}, p = {p})"
                )));
            }
            (
                series_of(a, Role::FOmega0, p)?,
                series_of(&del, Role::FOmega0, p)?,
                series_of(&res, Role::FOmega0, p)?,
                Some((1, 0)),
            )
        }
        Sequence::RelativeDerivations => {
            if l < 3 {
                return Err(Error::invalid("the relative derivations sequence needs ℓ ≥ 3"));
            }
            (
                series_of(&del, Role::D0, 1)?,
                series_of(a, Role::D0, 1)?,
                series_of(&res, Role::D0, 1)?,
                Some((1, 0)),
            )
        }
        Sequence::TopRelativeForms => {
            if l < 3 {
                return Err(Error::invalid("the top relative forms sequence needs ℓ ≥ 3"));
            }
            (
                series_of(&del, Role::FOmega0, l - 2)?,
                series_of(a, Role::FOmega0, l - 2)?,
                series_of(&res, Role::FOmega0, l - 3)?,
                None,
            )
        }
    };
    let fits = |(x, y): (i32, i32)| middle == sub.shift(x).add(&quotient.shift(y));
    let twists = match predicted {
        Some(t) if fits(t) => Some(t),
        _ => (-4..=4).flat_map(|x| (-4..=4).map(move |y| (x, y))).find(|&t| fits(t)),
    };
    let holds = match predicted {
        Some(t) => twists == Some(t),
        None => twists.is_some(),
    };
    let p = match sequence {
        Sequence::RelativeForms => p,
        Sequence::RelativeDerivations => 1,
        Sequence::TopRelativeForms => l - 2,
    };
    Ok(DeletionReport {
        sequence,
        p,
        sub,
        middle,
        quotient,
        twists,
        holds,
    })
}

/// `M` over `S'' = S/(x_ℓ)` (given by a presentation in `ℓ−1` variables)
/// viewed over `S` in `ℓ` variables: pad every relation and add `x_ℓ·e_i`.
pub fn extend_to_hyperplane_ring<F: Field>(pres: &Presentation<F>) -> Result<Presentation<F>> {
    let small = &pres.ring;
    let big = PolyRing::new(small.field.clone(), small.nvars + 1);
    let rank = pres.target.rank();
    let mut rels: Vec<FreeVector<F>> = pres
        .relations
        .iter()
        .map(|r| FreeVector::new(r.comps.iter().map(|c| small.change_nvars(c, &big)).collect()))
        .collect();
    let x = big.var(small.nvars);
    for i in 0..rank {
        rels.push(FreeVector::unit(&big, rank, i).scale_poly(&big, &x));
    }
    Presentation::new(
        big,
        GradedFreeModule::new(small.nvars + 1, pres.target.degrees.clone()),
        rels,
    )
}

/// For a module `M` over `S''`: `(h(Ext^{q+1}_S(M,S)), t^{−1} h(Ext^q_{S''}(M,S'')))`
/// for `0 ≤ q ≤ qmax`, plus whether `Hom_S(M, S) = 0`.
pub fn change_of_rings_series<F: Field>(
    pres: &Presentation<F>,
    qmax: usize,
) -> Result<(Vec<(HilbertSeries, HilbertSeries)>, bool)> {
    let small = Resolution::of_presentation(pres)?;
    let big = Resolution::of_presentation(&extend_to_hyperplane_ring(pres)?)?;
    let hom_zero = ext_report(&big, 0)?.is_zero();
    let pairs = (0..=qmax)
        .map(|q| {
            Ok((
                ext_report(&big, q + 1)?.hilbert,
                ext_report(&small, q)?.hilbert.shift(-1),
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((pairs, hom_zero))
}
