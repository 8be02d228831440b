//! The analysis report for a single arrangement, in a shape that serializes
//! with a fixed key order and exact integers only.

use serde::Serialize;

use crate::arrangement::{Arrangement, LogModule};
use crate::criteria::{self, FreenessReport, PurityReport, WakefieldVerdict};
use crate::error::Result;
use crate::field::Field;
use crate::homalg::SupportDim;
use crate::laurent::HilbertSeries;
use crate::par::{self, Parallelism};

/// A Hilbert series as `{"numerator": [[e, c], ...], "poleOrder": d}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SeriesDoc {
    pub numerator: Vec<(i32, i64)>,
    pub pole_order: u32,
}

impl From<&HilbertSeries> for SeriesDoc {
    fn from(h: &HilbertSeries) -> Self {
        SeriesDoc {
            numerator: h.numerator().terms(),
            pole_order: h.pole_order(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct InputDoc {
    pub field: String,
    pub nvars: usize,
    pub hyperplanes: usize,
    pub forms: String,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LatticeDoc {
    /// Number of flats of each rank `0..=ℓ`.
    pub flats_by_rank: Vec<usize>,
    pub good_char: bool,
}

/// `pd Ω^p` and `pd Ω^p_0` for `0 ≤ p ≤ max_p`.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PdDoc {
    pub omega: Vec<usize>,
    pub omega0: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TameDoc {
    pub tame: bool,
    /// Largest `k` with `pd Ω^p ≤ p` for all `p ≤ k`.
    pub tame_up_to: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ExtDoc {
    pub p: usize,
    pub i: usize,
    pub series: SeriesDoc,
    pub support_dim: Option<u32>,
    pub length: Option<i64>,
}

/// Parts that need the Euler relation are `None` in bad characteristic.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AnalysisReport {
    pub input: InputDoc,
    pub lattice: LatticeDoc,
    pub freeness: Option<FreenessReport>,
    pub pd: PdDoc,
    pub tame: TameDoc,
    pub purity: Option<PurityReport>,
    pub wakefield: Option<WakefieldVerdict>,
    /// `Ext^i(Ω^p, S)` for the requested pairs.
    pub ext: Vec<ExtDoc>,
}

#[derive(Clone, Debug, Default)]
pub struct AnalysisOptions {
    pub max_p: Option<usize>,
    pub ext: Vec<(usize, usize)>,
    pub par: Parallelism,
}

pub fn analyze<F: Field>(a: &Arrangement<F>, opts: &AnalysisOptions) -> Result<AnalysisReport> {
    let l = a.nvars;
    let lattice = a.lattice();
    let mut flats_by_rank = vec![0; l + 1];
    for f in &lattice.flats {
        flats_by_rank[f.rank] += 1;
    }
    let good = lattice.is_good_characteristic(a.field.characteristic());
    let max_p = opts.max_p.unwrap_or(l).min(l);
    let pds = par::try_map(opts.par, (0..=max_p).collect(), |p| -> Result<(usize, usize)> {
        let full = LogModule::forms(a, p)?;
        let rel = LogModule::relative_forms_from(a, &full)?;
        Ok((
            full.projective_dimension()?.unwrap_or(0),
            rel.projective_dimension()?.unwrap_or(0),
        ))
    })?;
    let tame_up_to = pds
        .iter()
        .enumerate()
        .take_while(|(p, d)| d.0 <= *p)
        .map(|(p, _)| p)
        .last();
    let tame = TameDoc {
        tame: tame_up_to == Some(max_p),
        tame_up_to,
    };
    let (freeness, purity, wakefield) = if good {
        (
            Some(criteria::is_free(a)?),
            Some(criteria::jacobian_purity(a)?),
            Some(criteria::wakefield_predictor(a, opts.par)?),
        )
    } else {
        (None, None, None)
    };
    let mut pairs = opts.ext.clone();
    pairs.sort_unstable();
    pairs.dedup();
    let ext = par::try_map(opts.par, pairs, |(p, i)| -> Result<ExtDoc> {
        let e = LogModule::forms(a, p)?.ext(i)?;
        Ok(ExtDoc {
            p,
            i,
            series: SeriesDoc::from(&e.hilbert),
            support_dim: match e.support {
                SupportDim::Empty => None,
                SupportDim::Dim(d) => Some(d),
            },
            length: e.length,
        })
    })?;
    Ok(AnalysisReport {
        input: InputDoc {
            field: a.field.spec().to_string(),
            nvars: l,
            hyperplanes: a.len(),
            forms: a.format(),
        },
        lattice: LatticeDoc {
            flats_by_rank,
            good_char: good,
        },
        freeness,
        pd: PdDoc {
            omega: pds.iter().map(|d| d.0).collect(),
            omega0: pds.iter().map(|d| d.1).collect(),
        },
        tame,
        purity,
        wakefield,
        ext,
    })
}

impl AnalysisReport {
    /// Plain-text summary.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let mut line = |x: String| {
            s.push_str(&x);
            s.push('\n');
        };
        line(format!(
            "arrangement: {} hyperplanes in {} variables over {}",
            self.input.hyperplanes, self.input.nvars, self.input.field
        ));
        line(format!("forms: {}", self.input.forms));
        line(format!("flats by rank: {:?}", self.lattice.flats_by_rank));
        line(format!("good characteristic: {}", self.lattice.good_char));
        match &self.freeness {
            Some(f) if f.free => line(format!("free: true, exponents {:?}", f.exponents)),
            Some(f) => line(format!("free: false (pd D = {})", f.pd)),
            None => line("free: not computed (bad characteristic)".into()),
        }
        line(format!("pd Omega^p: {:?}", self.pd.omega));
        line(format!("pd Omega^p_0: {:?}", self.pd.omega0));
        line(format!("tame: {}", self.tame.tame));
        if let Some(p) = &self.purity {
            line(format!("purity: {}", if p.pure { "pure" } else { "impure" }));
        }
        if let Some(w) = &self.wakefield {
            let pred = match w.prediction {
                criteria::Prediction::Free => "free",
                criteria::Prediction::NotFree => "not free",
                criteria::Prediction::Inapplicable => "inapplicable",
            };
            line(format!("free outside points: {}", w.free_outside_points_ok));
            line(format!("wakefield: {pred}"));
        }
        for e in &self.ext {
            let h = HilbertSeries::new(
                crate::laurent::LaurentPoly::from_terms(&e.series.numerator),
                e.series.pole_order,
            );
            line(format!("Ext^{}(Omega^{}, S): {}", e.i, e.p, h));
        }
        s
    }
}
