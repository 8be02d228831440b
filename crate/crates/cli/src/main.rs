use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use logforms_core::arrangement::{parse_arrangement, RawArrangement};
use logforms_core::limits;
use logforms_core::oracle;
use logforms_core::par::{self, Parallelism};
use logforms_core::report::{analyze, AnalysisOptions, SeriesDoc};
use logforms_core::series::gf::{closed_form, q_rank3, ClosedForm, DEFAULT_TRUNCATION};
use logforms_core::series::{verify_deletion_restriction, verify_generic_theorem, Sequence};
use logforms_core::{Arrangement, Error, Field, FieldSpec, LogModule, PrimeField, RationalField, Role};

const DEFAULT_FIELD: FieldSpec = FieldSpec::Prime(32003);

#[derive(Parser)]
#[command(
    name = "logforms",
    version,
    about = "Logarithmic forms and derivations of hyperplane arrangements"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Coefficient field: `q` or `fp:<prime>` (default fp:32003, or the
    /// field named in the input file).
    #[arg(long, global = true)]
    field: Option<String>,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Full report for one arrangement file.
    Analyze {
        path: PathBuf,
        #[arg(long)]
        max_p: Option<usize>,
        /// `p:i` pairs; Ext^i(Ω^p, S) is reported for each.
        #[arg(long, value_delimiter = ',')]
        ext: Vec<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Generic-arrangement theorem and deletion-restriction checks over a grid.
    Suite {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 4)]
        max_l: usize,
        /// Per-case time limit in seconds.
        #[arg(long)]
        time_limit: Option<u64>,
        #[command(flatten)]
        common: Common,
    },
    /// Compare Gröbner-based Hilbert functions with degreewise linear algebra.
    Oracle {
        path: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        lo: i64,
        #[arg(long, allow_negative_numbers = true)]
        hi: i64,
        #[arg(long)]
        max_p: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Expand a closed-form generating function: `Q:<l>:<p>`, `P:<p>`, `T`
    /// or `rank3:<n>`.
    Expand {
        which: String,
        #[arg(long, default_value_t = DEFAULT_TRUNCATION[0])]
        truncate_s: u32,
        #[arg(long, default_value_t = DEFAULT_TRUNCATION[1])]
        truncate_u: u32,
        #[arg(long, default_value_t = DEFAULT_TRUNCATION[2])]
        truncate_v: u32,
        #[command(flatten)]
        common: Common,
    },
}

/// What went wrong, mapped onto the exit codes 1 and 2.
enum Failure {
    Invalid(String),
    Failed(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceLimit(_) | Error::Internal(_) => Failure::Failed(e.to_string()),
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze {
            path,
            max_p,
            ext,
            common,
        } => run_analyze(&path, max_p, &ext, &common),
        Command::Suite {
            max_n,
            max_l,
            time_limit,
            common,
        } => run_suite(max_n, max_l, time_limit, &common),
        Command::Oracle {
            path,
            lo,
            hi,
            max_p,
            common,
        } => run_oracle(&path, lo, hi, max_p, &common),
        Command::Expand {
            which,
            truncate_s,
            truncate_u,
            truncate_v,
            common,
        } => run_expand(&which, [truncate_s, truncate_u, truncate_v], &common),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Failed(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn field_flag(common: &Common) -> Result<Option<FieldSpec>, Failure> {
    common
        .field
        .as_deref()
        .map(FieldSpec::parse)
        .transpose()
        .map_err(Failure::from)
}

fn parallelism(common: &Common) -> Parallelism {
    if common.jobs == 1 {
        Parallelism::Sequential
    } else {
        Parallelism::available()
    }
}

fn read_arrangement(path: &PathBuf) -> Result<RawArrangement, Failure> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Failure::Invalid(format!("cannot read {}: {e}", path.display())))?;
    Ok(parse_arrangement(&text)?)
}

/// Runs `f` over the field chosen by the flag, else the file, else F_32003.
macro_rules! with_field {
    ($spec:expr, |$field:ident| $body:expr) => {
        match $spec {
            FieldSpec::Rational => {
                let $field = RationalField;
                $body
            }
            FieldSpec::Prime(p) => {
                let $field = PrimeField::new(p)?;
                $body
            }
        }
    };
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn parse_ext_pairs(items: &[String]) -> Result<Vec<(usize, usize)>, Failure> {
    items
        .iter()
        .map(|s| {
            let (p, i) = s
                .split_once(':')
                .ok_or_else(|| Failure::Invalid(format!("bad --ext value `{s}` (expected p:i)")))?;
            let p = p
                .trim()
                .parse()
                .map_err(|_| Failure::Invalid(format!("bad p in `{s}`")))?;
            let i = i
                .trim()
                .parse()
                .map_err(|_| Failure::Invalid(format!("bad i in `{s}`")))?;
            Ok((p, i))
        })
        .collect()
}

fn run_analyze(path: &PathBuf, max_p: Option<usize>, ext: &[String], common: &Common) -> Outcome {
    let raw = read_arrangement(path)?;
    let spec = field_flag(common)?.or(raw.field).unwrap_or(DEFAULT_FIELD);
    let opts = AnalysisOptions {
        max_p,
        ext: parse_ext_pairs(ext)?,
        par: parallelism(common),
    };
    let report = par::with_threads(common.jobs, || -> Result<_, Failure> {
        with_field!(spec, |field| {
            let a = raw.build(field)?;
            Ok(analyze(&a, &opts)?)
        })
    })?;
    if !report.lattice.good_char {
        eprintln!(
            "warning: characteristic {} is bad for this arrangement; Euler-dependent checks skipped",
            spec
        );
    }
    if common.json {
        println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
    } else {
        print!("{}", report.to_text());
    }
    Ok(true)
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum CaseKind {
    Generic,
    Deletion(u8, usize),
}

fn suite_case<F: Field>(field: F, n: usize, l: usize, kind: CaseKind) -> Result<(bool, String), Error> {
    match kind {
        CaseKind::Generic => {
            let r = verify_generic_theorem(field, n, l)?;
            let detail = r
                .cases
                .iter()
                .map(|c| {
                    format!(
                        "p={} spherical={} artinian={} length={:?}/{} series={}",
                        c.p,
                        c.spherical,
                        c.artinian,
                        c.length,
                        c.expected_length,
                        if c.series == c.expected_series {
                            "ok"
                        } else {
                            "MISMATCH"
                        }
                    )
                })
                .collect::<Vec<_>>()
                .join("; ");
            Ok((r.passed(), detail))
        }
        CaseKind::Deletion(which, p) => {
            let a = Arrangement::generic(field, n, l)?;
            let seq = match which {
                0 => Sequence::RelativeForms,
                1 => Sequence::RelativeDerivations,
                _ => Sequence::TopRelativeForms,
            };
            let r = verify_deletion_restriction(&a, n - 1, p, seq)?;
            Ok((r.holds, format!("{:?} p={} twists={:?}", seq, r.p, r.twists)))
        }
    }
}

fn run_suite(max_n: usize, max_l: usize, time_limit: Option<u64>, common: &Common) -> Outcome {
    if max_l < 3 || max_l > max_n {
        return Err(Failure::Invalid(format!(
            "need 3 ≤ max-l ≤ max-n (got max-l {max_l}, max-n {max_n})"
        )));
    }
    let spec = field_flag(common)?.unwrap_or(DEFAULT_FIELD);
    if spec != FieldSpec::Rational && (spec.characteristic() as usize) < max_n {
        return Err(Failure::Invalid(format!(
            "{spec} is too small for {max_n} generic hyperplanes"
        )));
    }
    let mut cases = Vec::new();
    for l in 3..=max_l {
        for n in l + 1..=max_n {
            cases.push((n, l, CaseKind::Generic));
            cases.push((n, l, CaseKind::Deletion(1, 1)));
            cases.push((n, l, CaseKind::Deletion(2, l - 2)));
            if l >= 4 {
                for p in 0..=l - 3 {
                    cases.push((n, l, CaseKind::Deletion(0, p)));
                }
            }
        }
    }
    cases.sort_by_key(|c| (c.1, c.0, c.2));
    let par = parallelism(common);
    let results = par::with_threads(common.jobs, || {
        par::map(par, cases.clone(), |(n, l, kind)| {
            let deadline = time_limit.map(|s| Instant::now() + Duration::from_secs(s));
            let start = Instant::now();
            let r = limits::with_deadline(deadline, || -> Result<_, Error> {
                with_field!(spec, |field| suite_case(field, n, l, kind))
            });
            (r, start.elapsed())
        })
    });
    let mut all_ok = true;
    let mut rows = Vec::new();
    for ((n, l, kind), (r, elapsed)) in cases.iter().zip(results) {
        let name = match kind {
            CaseKind::Generic => format!("generic A({n},{l})"),
            CaseKind::Deletion(_, _) => format!("deletion A({n},{l})"),
        };
        let (status, detail) = match r {
            Ok((true, d)) => ("pass", d),
            Ok((false, d)) => ("FAIL", d),
            Err(Error::ResourceLimit(m)) => ("ABORT", m),
            Err(e) => ("ERROR", e.to_string()),
        };
        all_ok &= status == "pass";
        rows.push((name, status, detail, elapsed));
    }
    if common.json {
        let v: Vec<Value> = rows
            .iter()
            .map(|(name, status, detail, elapsed)| {
                json!({"case": name, "status": status, "detail": detail, "millis": elapsed.as_millis() as u64})
            })
            .collect();
        print_json(&json!({"field": spec.to_string(), "passed": all_ok, "cases": v}));
    } else {
        for (name, status, detail, elapsed) in &rows {
            println!("{status:5} {name:18} {:>8.3}s  {detail}", elapsed.as_secs_f64());
        }
        let passed = rows.iter().filter(|r| r.1 == "pass").count();
        println!("{passed}/{} cases passed over {spec}", rows.len());
    }
    Ok(all_ok)
}

fn oracle_rows<F: Field>(
    a: &Arrangement<F>,
    lo: i64,
    hi: i64,
    max_p: usize,
) -> Result<Vec<(String, i64, i64, usize)>, Error> {
    let mut out = Vec::new();
    let good = a.is_good_characteristic();
    for role in Role::all() {
        let ps: Vec<usize> = match role {
            Role::SyzJacobian if !good => continue,
            Role::SyzJacobian => vec![1],
            _ => (0..=max_p).collect(),
        };
        for p in ps {
            let h = LogModule::build(a, role, p)?.hilbert_series()?;
            for d in lo..=hi {
                let gb = h.coefficient(d as i32);
                let la = oracle::dimension(a, role, p, d)?;
                out.push((format!("{}_{}", role.name(), p), d, gb, la));
            }
        }
    }
    Ok(out)
}

fn run_oracle(path: &PathBuf, lo: i64, hi: i64, max_p: Option<usize>, common: &Common) -> Outcome {
    let raw = read_arrangement(path)?;
    let spec = field_flag(common)?.or(raw.field).unwrap_or(DEFAULT_FIELD);
    let max_p = max_p.unwrap_or(raw.nvars).min(raw.nvars);
    let rows = with_field!(spec, |field| {
        let a = raw.build(field)?;
        oracle_rows(&a, lo, hi, max_p)?
    });
    let ok = rows.iter().all(|r| r.2 == r.3 as i64);
    if common.json {
        let v: Vec<Value> = rows
            .iter()
            .map(|(m, d, gb, la)| json!({"module": m, "degree": d, "groebner": gb, "linearAlgebra": la}))
            .collect();
        print_json(&json!({"agree": ok, "rows": v}));
    } else {
        for (m, d, gb, la) in &rows {
            let mark = if *gb == *la as i64 { "" } else { "  MISMATCH" };
            println!("{m:10} {d:>4} {gb:>8} {la:>8}{mark}");
        }
    }
    Ok(ok)
}

fn parse_closed_form(which: &str) -> Result<Result<ClosedForm, u32>, Failure> {
    let bad = || Failure::Invalid(format!("unknown series `{which}` (expected Q:l:p, P:p, T or rank3:n)"));
    let parts: Vec<&str> = which.split(':').collect();
    let num = |s: &str| s.trim().parse::<u32>().map_err(|_| bad());
    match parts.as_slice() {
        ["T"] | ["t"] => Ok(Ok(ClosedForm::T)),
        ["P" | "p", p] => Ok(Ok(ClosedForm::P { p: num(p)? })),
        ["Q" | "q", l, p] => Ok(Ok(ClosedForm::Q { l: num(l)?, p: num(p)? })),
        ["rank3", n] => Ok(Err(num(n)?)),
        _ => Err(bad()),
    }
}

fn run_expand(which: &str, trunc: [u32; 3], common: &Common) -> Outcome {
    match parse_closed_form(which)? {
        Err(n) => {
            let h = q_rank3(n)?;
            if common.json {
                print_json(&serde_json::to_value(SeriesDoc::from(&h)).expect("serializable"));
            } else {
                println!("{h}");
            }
        }
        Ok(form) => {
            let g = closed_form(form)?;
            let e = g.expand(trunc)?;
            if common.json {
                let terms: Vec<Value> = e
                    .nonzero_terms()
                    .map(|(x, c)| json!({"s": x[0], "u": x[1], "v": x[2], "coefficient": c.terms()}))
                    .collect();
                print_json(&json!({"series": g.to_string(), "truncation": trunc, "terms": terms}));
            } else {
                println!("{g}");
                for (x, c) in e.nonzero_terms() {
                    println!("s^{} u^{} v^{}: {c}", x[0], x[1], x[2]);
                }
            }
        }
    }
    Ok(true)
}
