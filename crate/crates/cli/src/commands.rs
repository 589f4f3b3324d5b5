use std::fs::File;
use std::io::BufWriter;
use std::path::PathBuf;
use std::sync::Arc;

use anyhow::{bail, Context};
use clap::Args;
use serde::Serialize;

use wps_core::codes::{self, CodeKind, CodeParameters, DminMethod, TableRow};
use wps_core::family::{self, FamilyIndices, FamilySpec, PrimitivePair};
use wps_core::field::parse_field_spec;
use wps_core::lines::{IncidenceReport, LineSystem};
use wps_core::space::{self, SingularLocusReport, ENUMERATION_BUDGET};
use wps_core::suites::{self, SuiteConfig, SuiteReport, SUITE_NAMES};
use wps_core::zeros::{self, BoundReport, EqValue};
use wps_core::{arith, FieldCtx, Monomial, WeightSystem, WeightedPolynomial};

use crate::report::{key_values, opt, to_csv, to_json, Render};
use crate::Common;

fn field(spec: &str) -> anyhow::Result<Arc<FieldCtx>> {
    Ok(Arc::new(parse_field_spec(spec)?))
}

fn exponents(s: &str) -> anyhow::Result<Monomial> {
    let e = s
        .split(',')
        .map(|x| x.trim().parse::<u32>())
        .collect::<Result<Vec<_>, _>>()
        .with_context(|| format!("invalid exponent vector {s:?}"))?;
    Ok(Monomial::new(e))
}

fn list<T: std::str::FromStr>(s: &str, what: &str) -> anyhow::Result<Vec<T>> {
    s.split(',')
        .map(|x| x.trim().parse::<T>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| anyhow::anyhow!("invalid {what} list {s:?}"))
}

/// Tightest bound on projective zeros among those that apply.
fn projective_bound(bounds: &[BoundReport]) -> Option<u128> {
    bounds
        .iter()
        .filter(|b| !b.bound_name.is_affine())
        .map(|b| b.bound)
        .min()
}

fn weights_text(ws: &WeightSystem) -> String {
    format!("({ws})")
}

// ---------------------------------------------------------------- points

#[derive(Args, Debug)]
pub struct PointsArgs {
    /// Weights, e.g. 1,2,3.
    #[arg(long)]
    weights: WeightSystem,
    /// Field as q or p^e.
    #[arg(long)]
    q: String,
    /// Append the singular locus report.
    #[arg(long)]
    singular: bool,
}

#[derive(Serialize)]
pub struct PointsReport {
    command: &'static str,
    seed: u64,
    weights: WeightSystem,
    q: u32,
    count: usize,
    expected: u128,
    matches: bool,
    characteristic_divides_weight: bool,
    points: Vec<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    singular: Option<SingularLocusReport>,
}

pub fn points(a: &PointsArgs, c: &Common) -> anyhow::Result<PointsReport> {
    let f = field(&a.q)?;
    let pts = space::enumerate_points(&a.weights, &f, ENUMERATION_BUDGET)?;
    let expected = arith::projective_count(f.order() as u64, a.weights.dim() as i64);
    Ok(PointsReport {
        command: "points",
        seed: c.seed,
        weights: a.weights.clone(),
        q: f.order(),
        count: pts.len(),
        expected,
        matches: pts.len() as u128 == expected,
        characteristic_divides_weight: pts.char_divides_weight(),
        points: pts.points().iter().map(|p| p.indices()).collect(),
        singular: if a.singular {
            Some(space::singular_locus(&a.weights)?)
        } else {
            None
        },
    })
}

impl Render for PointsReport {
    fn json(&self) -> anyhow::Result<String> {
        to_json(self)
    }

    fn csv(&self) -> anyhow::Result<String> {
        let header: Vec<String> = (0..self.weights.len()).map(|i| format!("x{i}")).collect();
        let header: Vec<&str> = header.iter().map(String::as_str).collect();
        to_csv(
            &header,
            self.points
                .iter()
                .map(|p| p.iter().map(|x| x.to_string()).collect::<Vec<_>>()),
        )
    }

    fn text(&self) -> String {
        let mut s = String::new();
        for p in &self.points {
            let parts: Vec<String> = p.iter().map(|x| x.to_string()).collect();
            s.push_str(&format!("({})\n", parts.join(":")));
        }
        s.push_str(&key_values(&[
            ("weights", weights_text(&self.weights)),
            ("q", self.q.to_string()),
            ("seed", self.seed.to_string()),
            ("count", self.count.to_string()),
            ("expected", self.expected.to_string()),
            ("matches", self.matches.to_string()),
        ]));
        if self.characteristic_divides_weight {
            s.push_str("note: the characteristic divides a weight\n");
        }
        if let Some(r) = &self.singular {
            let sigma: Vec<String> = r.sigma.iter().map(|p| p.to_string()).collect();
            s.push_str(&format!("singular primes: {{{}}}\n", sigma.join(",")));
            for comp in &r.components {
                s.push_str(&format!(
                    "  p={}: coordinates {:?}, dimension {}\n",
                    comp.prime, comp.indices, comp.dim
                ));
            }
        }
        s
    }

    fn passed(&self) -> bool {
        self.matches
    }
}

// ----------------------------------------------------------- count-zeros

#[derive(Args, Debug)]
pub struct CountZerosArgs {
    #[arg(long)]
    weights: WeightSystem,
    #[arg(long)]
    q: String,
    /// Polynomial such as "X0^2*X1 + 3*X2"; coefficients are field indices.
    #[arg(long)]
    poly: String,
    /// Also decide sharpness of each bound by exhaustive search.
    #[arg(long)]
    sharp: bool,
}

#[derive(Serialize)]
pub struct CountZerosReport {
    command: &'static str,
    seed: u64,
    weights: WeightSystem,
    d: u64,
    q: u32,
    value: usize,
    affine_zeros: usize,
    bound: Option<u128>,
    bounds: Vec<BoundReport>,
    witness_polynomial: String,
}

pub fn count_zeros(a: &CountZerosArgs, c: &Common) -> anyhow::Result<CountZerosReport> {
    let f = field(&a.q)?;
    let poly = WeightedPolynomial::parse(&a.weights, &f, &a.poly)?;
    let pts = space::enumerate_points(&a.weights, &f, ENUMERATION_BUDGET)?;
    let bounds = zeros::check_bounds(&poly, &pts, a.sharp.then_some(c.budget))?;
    Ok(CountZerosReport {
        command: "count-zeros",
        seed: c.seed,
        weights: a.weights.clone(),
        d: poly.degree(),
        q: f.order(),
        value: zeros::count_zeros(&poly, &pts)?,
        affine_zeros: zeros::affine_zeros(&poly, &pts)?,
        bound: projective_bound(&bounds),
        bounds,
        witness_polynomial: poly.to_string(),
    })
}

impl Render for CountZerosReport {
    fn json(&self) -> anyhow::Result<String> {
        to_json(self)
    }

    fn csv(&self) -> anyhow::Result<String> {
        to_csv(
            &[
                "weights",
                "d",
                "q",
                "value",
                "affine_zeros",
                "bound",
                "witness_polynomial",
            ],
            [[
                self.weights.to_string(),
                self.d.to_string(),
                self.q.to_string(),
                self.value.to_string(),
                self.affine_zeros.to_string(),
                opt(&self.bound),
                self.witness_polynomial.clone(),
            ]],
        )
    }

    fn text(&self) -> String {
        let mut s = key_values(&[
            ("polynomial", self.witness_polynomial.clone()),
            ("weights", weights_text(&self.weights)),
            ("degree", self.d.to_string()),
            ("q", self.q.to_string()),
            ("seed", self.seed.to_string()),
            ("zeros", self.value.to_string()),
            ("affine zeros", self.affine_zeros.to_string()),
        ]);
        for b in &self.bounds {
            s.push_str(&format!(
                "bound {}: value {} <= {} {}{}\n",
                b.bound_name.name(),
                b.value,
                b.bound,
                if b.satisfied { "ok" } else { "VIOLATED" },
                match b.sharp {
                    Some(true) => ", sharp",
                    Some(false) => ", not sharp",
                    None => "",
                }
            ));
        }
        s
    }

    fn passed(&self) -> bool {
        self.bounds.iter().all(|b| b.satisfied)
    }
}

// ------------------------------------------------------------- eq-search

#[derive(Args, Debug)]
pub struct EqSearchArgs {
    #[arg(long)]
    weights: WeightSystem,
    #[arg(long)]
    q: String,
    #[arg(long)]
    d: u64,
}

#[derive(Serialize)]
pub struct EqSearchReport {
    command: &'static str,
    seed: u64,
    weights: WeightSystem,
    d: u64,
    q: u32,
    /// `None` when `S_d = 0`.
    value: Option<usize>,
    candidates: u128,
    lower_bound: Option<u128>,
    bound: Option<u128>,
    bounds: Vec<BoundReport>,
    witness_polynomial: Option<String>,
}

pub fn eq_search(a: &EqSearchArgs, c: &Common) -> anyhow::Result<EqSearchReport> {
    let f = field(&a.q)?;
    let q = f.order();
    let pts = space::enumerate_points(&a.weights, &f, ENUMERATION_BUDGET)?;
    let lower_bound = zeros::serre_lower_bound(&a.weights, a.d, q as u64).value();
    let mut report = EqSearchReport {
        command: "eq-search",
        seed: c.seed,
        weights: a.weights.clone(),
        d: a.d,
        q,
        value: None,
        candidates: 0,
        lower_bound,
        bound: None,
        bounds: Vec::new(),
        witness_polynomial: None,
    };
    if let EqValue::Value {
        zeros,
        witness,
        candidates,
    } = zeros::eq_oracle(&a.weights, a.d, &f, c.budget)?
    {
        report.bounds = zeros::check_bounds(&witness, &pts, None)?;
        report.bound = projective_bound(&report.bounds);
        report.value = Some(zeros);
        report.candidates = candidates;
        report.witness_polynomial = Some(witness.to_string());
    }
    Ok(report)
}

impl Render for EqSearchReport {
    fn json(&self) -> anyhow::Result<String> {
        to_json(self)
    }

    fn csv(&self) -> anyhow::Result<String> {
        to_csv(
            &[
                "weights",
                "d",
                "q",
                "value",
                "candidates",
                "lower_bound",
                "bound",
                "witness_polynomial",
            ],
            [[
                self.weights.to_string(),
                self.d.to_string(),
                self.q.to_string(),
                opt(&self.value),
                self.candidates.to_string(),
                opt(&self.lower_bound),
                opt(&self.bound),
                opt(&self.witness_polynomial),
            ]],
        )
    }

    fn text(&self) -> String {
        key_values(&[
            ("weights", weights_text(&self.weights)),
            ("degree", self.d.to_string()),
            ("q", self.q.to_string()),
            ("seed", self.seed.to_string()),
            (
                "e_q",
                self.value
                    .map_or("undefined (S_d = 0)".into(), |v| v.to_string()),
            ),
            ("candidates", self.candidates.to_string()),
            ("lower bound", opt(&self.lower_bound)),
            ("upper bound", opt(&self.bound)),
            ("witness", opt(&self.witness_polynomial)),
        ])
    }

    fn passed(&self) -> bool {
        self.bounds.iter().all(|b| b.satisfied)
    }
}

// ---------------------------------------------------------------- family

#[derive(Args, Debug)]
pub struct FamilyArgs {
    #[arg(long)]
    weights: WeightSystem,
    #[arg(long)]
    q: String,
    /// Exponents of the first monomial of the primitive pair, e.g. 1,1,0.
    #[arg(long)]
    m0: String,
    #[arg(long)]
    m1: String,
    /// Prefactor exponents; defaults to m0.
    #[arg(long)]
    mu0: Option<String>,
    /// Prefactor exponents; defaults to m1.
    #[arg(long)]
    mu1: Option<String>,
    /// Distinct nonzero field indices t_i.
    #[arg(long)]
    t: String,
}

#[derive(Serialize)]
pub struct FamilyReport {
    command: &'static str,
    seed: u64,
    weights: WeightSystem,
    q: u32,
    d: u64,
    indices: FamilyIndices,
    closed_form: u128,
    value: usize,
    agree: bool,
    witness_polynomial: String,
}

pub fn family(a: &FamilyArgs, c: &Common) -> anyhow::Result<FamilyReport> {
    let f = field(&a.q)?;
    let m0 = exponents(&a.m0)?;
    let m1 = exponents(&a.m1)?;
    let mu0 = a.mu0.as_deref().map_or(Ok(m0.clone()), exponents)?;
    let mu1 = a.mu1.as_deref().map_or(Ok(m1.clone()), exponents)?;
    let t = list::<u32>(&a.t, "field index")?
        .into_iter()
        .map(|i| {
            if i >= f.order() {
                bail!("t index {i} is not an element of F_{}", f.order());
            }
            Ok(f.elem(i))
        })
        .collect::<anyhow::Result<Vec<_>>>()?;
    let pair = PrimitivePair::new(&a.weights, m0, m1)?;
    let spec = FamilySpec::new(pair, mu0, mu1, t, &f)?;
    let poly = family::build_family(&spec, &a.weights, &f)?;
    let pts = space::enumerate_points(&a.weights, &f, ENUMERATION_BUDGET)?;
    let value = zeros::count_zeros(&poly, &pts)?;
    let closed_form =
        family::family_count_closed_form(&spec.indices(), f.order() as u64, a.weights.dim());
    Ok(FamilyReport {
        command: "family",
        seed: c.seed,
        weights: a.weights.clone(),
        q: f.order(),
        d: poly.degree(),
        indices: spec.indices(),
        closed_form,
        value,
        agree: closed_form == value as u128,
        witness_polynomial: poly.to_string(),
    })
}

impl Render for FamilyReport {
    fn json(&self) -> anyhow::Result<String> {
        to_json(self)
    }

    fn csv(&self) -> anyhow::Result<String> {
        let ix = &self.indices;
        to_csv(
            &[
                "weights",
                "d",
                "q",
                "ell",
                "s0",
                "s1",
                "sigma0",
                "sigma1",
                "value",
                "closed_form",
                "witness_polynomial",
            ],
            [[
                self.weights.to_string(),
                self.d.to_string(),
                self.q.to_string(),
                ix.ell.to_string(),
                ix.s0.to_string(),
                ix.s1.to_string(),
                ix.sigma0.to_string(),
                ix.sigma1.to_string(),
                self.value.to_string(),
                self.closed_form.to_string(),
                self.witness_polynomial.clone(),
            ]],
        )
    }

    fn text(&self) -> String {
        let ix = &self.indices;
        key_values(&[
            ("polynomial", self.witness_polynomial.clone()),
            ("weights", weights_text(&self.weights)),
            ("degree", self.d.to_string()),
            ("q", self.q.to_string()),
            ("seed", self.seed.to_string()),
            (
                "indices",
                format!(
                    "ell={} s0={} s1={} sigma0={} sigma1={}",
                    ix.ell, ix.s0, ix.s1, ix.sigma0, ix.sigma1
                ),
            ),
            ("zeros", self.value.to_string()),
            ("closed form", self.closed_form.to_string()),
            ("agree", self.agree.to_string()),
        ])
    }

    fn passed(&self) -> bool {
        self.agree
    }
}

// ----------------------------------------------------------------- lines

#[derive(Args, Debug)]
pub struct LinesArgs {
    /// Weights (1,a1,a2) with a1 < a2 coprime.
    #[arg(long)]
    weights: WeightSystem,
    #[arg(long)]
    q: String,
    /// Run the incidence suite instead of listing the lines.
    #[arg(long)]
    check: bool,
}

#[derive(Serialize)]
pub struct LineRow {
    line: String,
    polynomial: String,
    points: usize,
}

#[derive(Serialize)]
pub struct LinesReport {
    command: &'static str,
    seed: u64,
    weights: WeightSystem,
    q: u32,
    lines: Vec<LineRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    incidence: Option<IncidenceReport>,
}

pub fn lines(a: &LinesArgs, c: &Common) -> anyhow::Result<LinesReport> {
    let f = field(&a.q)?;
    let sys = LineSystem::new(&a.weights, &f)?;
    let pts = space::enumerate_points(&a.weights, &f, ENUMERATION_BUDGET)?;
    let mut report = LinesReport {
        command: "lines",
        seed: c.seed,
        weights: a.weights.clone(),
        q: f.order(),
        lines: Vec::new(),
        incidence: None,
    };
    if a.check {
        report.incidence = Some(wps_core::lines::incidence_suite(&sys, &pts)?);
    } else {
        for line in sys.catalog() {
            report.lines.push(LineRow {
                line: line.to_string(),
                polynomial: sys.polynomial(&line).to_string(),
                points: sys.line_points(&line, &pts)?.len(),
            });
        }
    }
    Ok(report)
}

impl Render for LinesReport {
    fn json(&self) -> anyhow::Result<String> {
        to_json(self)
    }

    fn csv(&self) -> anyhow::Result<String> {
        if let Some(r) = &self.incidence {
            return to_csv(
                &[
                    "lines",
                    "lines_with_q_plus_1_points",
                    "pairs",
                    "pairs_meeting",
                    "affine_points",
                    "affine_points_ok",
                    "failures",
                ],
                [[
                    r.lines.to_string(),
                    r.lines_with_q_plus_1_points.to_string(),
                    r.pairs.to_string(),
                    r.pairs_meeting.to_string(),
                    r.affine_points.to_string(),
                    r.affine_points_ok.to_string(),
                    r.failures.len().to_string(),
                ]],
            );
        }
        to_csv(
            &["line", "polynomial", "points"],
            self.lines
                .iter()
                .map(|l| [l.line.clone(), l.polynomial.clone(), l.points.to_string()]),
        )
    }

    fn text(&self) -> String {
        let mut s = key_values(&[
            ("weights", weights_text(&self.weights)),
            ("q", self.q.to_string()),
            ("seed", self.seed.to_string()),
        ]);
        if let Some(r) = &self.incidence {
            s.push_str(&format!(
                "{:<34}{:>10}{:>10}\n",
                "property", "checked", "holding"
            ));
            s.push_str(&format!(
                "{:<34}{:>10}{:>10}\n",
                "line has q+1 points", r.lines, r.lines_with_q_plus_1_points
            ));
            s.push_str(&format!(
                "{:<34}{:>10}{:>10}\n",
                "distinct lines meet in one point", r.pairs, r.pairs_meeting
            ));
            s.push_str(&format!(
                "{:<34}{:>10}{:>10}\n",
                "affine point on q+1 lines", r.affine_points, r.affine_points_ok
            ));
            for f in &r.failures {
                s.push_str(&format!("failure: {f}\n"));
            }
            s.push_str(if r.passed() { "PASS\n" } else { "FAIL\n" });
        } else {
            for l in &self.lines {
                s.push_str(&format!(
                    "{:<28} {:>4}  {}\n",
                    l.line, l.points, l.polynomial
                ));
            }
        }
        s
    }

    fn passed(&self) -> bool {
        self.incidence.as_ref().is_none_or(|r| r.passed())
    }
}

// ------------------------------------------------------------------ code

#[derive(Args, Debug)]
pub struct CodeArgs {
    #[arg(long)]
    kind: CodeKind,
    /// Required for wprm; rm and prm use classical weights.
    #[arg(long)]
    weights: Option<WeightSystem>,
    /// Dimension for rm and prm.
    #[arg(long, default_value_t = 2)]
    m: usize,
    #[arg(long)]
    q: String,
    #[arg(long)]
    d: u64,
    #[arg(long, default_value = "auto")]
    method: DminMethod,
    /// Export the generator matrix to this file.
    #[arg(long)]
    matrix: Option<PathBuf>,
}

#[derive(Serialize)]
pub struct CodeReport {
    command: &'static str,
    seed: u64,
    #[serde(flatten)]
    params: CodeParameters,
}

pub fn code(a: &CodeArgs, c: &Common) -> anyhow::Result<CodeReport> {
    let f = field(&a.q)?;
    let (m, ws) = match (a.kind, &a.weights) {
        (CodeKind::Wprm, None) => bail!("--weights is required for wprm"),
        (CodeKind::Wprm, Some(w)) => (w.dim(), Some(w)),
        (_, Some(_)) => bail!("--weights only applies to wprm"),
        (_, None) => (a.m, None),
    };
    let code = codes::build_code(a.kind, &f, m, a.d, ws)?;
    if let Some(path) = &a.matrix {
        let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
        code.write_matrix(BufWriter::new(file))?;
    }
    Ok(CodeReport {
        command: "code",
        seed: c.seed,
        params: codes::code_parameters(&code, a.method, c.budget)?,
    })
}

impl Render for CodeReport {
    fn json(&self) -> anyhow::Result<String> {
        to_json(self)
    }

    fn csv(&self) -> anyhow::Result<String> {
        let p = &self.params;
        to_csv(
            &[
                "code", "q", "m", "d", "weights", "n", "k", "d_min", "lambda", "exact",
            ],
            [[
                p.kind.to_string(),
                p.q.to_string(),
                p.m.to_string(),
                p.d.to_string(),
                p.weights.clone(),
                p.n.to_string(),
                p.k.to_string(),
                p.d_min.to_string(),
                p.lambda_display.clone(),
                p.exact.to_string(),
            ]],
        )
    }

    fn text(&self) -> String {
        let p = &self.params;
        key_values(&[
            (
                "code",
                format!(
                    "{} over F_{}, m={}, d={}, weights ({})",
                    p.kind, p.q, p.m, p.d, p.weights
                ),
            ),
            ("seed", self.seed.to_string()),
            ("parameters", format!("[{}, {}, {}]", p.n, p.k, p.d_min)),
            ("d_min source", format!("{:?}", p.d_min_source)),
            ("exact", p.exact.to_string()),
            ("cross-checked", p.cross_checked.to_string()),
            ("rate", p.rate.to_string()),
            ("relative distance", p.relative_distance.to_string()),
            ("lambda", format!("{} ({})", p.lambda_display, p.lambda)),
            ("witness", opt(&p.witness_polynomial)),
            ("witness weight", opt(&p.witness_weight)),
        ])
    }
}

// ----------------------------------------------------------------- table

#[derive(Args, Debug)]
pub struct TableArgs {
    /// The F_19, degree 16 comparison.
    #[arg(long, conflicts_with_all = ["q", "d"])]
    paper_f19: bool,
    #[arg(long, required_unless_present = "paper_f19")]
    q: Option<String>,
    #[arg(long, required_unless_present = "paper_f19")]
    d: Option<u64>,
    /// WPRM weight systems separated by ';'. Defaults to the F_19 list.
    #[arg(long)]
    weights_list: Option<String>,
}

#[derive(Serialize)]
pub struct TableReport {
    command: &'static str,
    seed: u64,
    q: u32,
    d: u64,
    rows: Vec<TableRow>,
}

pub fn table(a: &TableArgs, c: &Common) -> anyhow::Result<TableReport> {
    let (f, d) = if a.paper_f19 {
        (field("19")?, 16)
    } else {
        (
            field(a.q.as_deref().expect("required by clap"))?,
            a.d.expect("required by clap"),
        )
    };
    let weights = match &a.weights_list {
        Some(s) => s
            .split(';')
            .map(|w| w.parse::<WeightSystem>())
            .collect::<Result<Vec<_>, _>>()?,
        None => codes::f19_weights(),
    };
    Ok(TableReport {
        command: "table",
        seed: c.seed,
        q: f.order(),
        d,
        rows: codes::comparison_table(&f, d, &weights, c.budget)?,
    })
}

impl Render for TableReport {
    fn json(&self) -> anyhow::Result<String> {
        to_json(self)
    }

    fn csv(&self) -> anyhow::Result<String> {
        Ok(codes::table_csv(&self.rows))
    }

    fn text(&self) -> String {
        let mut s = format!(
            "F_{} degree {} (seed {})\n{:<18}{:>18}{:>9}  {}\n",
            self.q, self.d, self.seed, "code", "[n, k, d]", "lambda", "d_min from"
        );
        for r in &self.rows {
            let p = &r.params;
            s.push_str(&format!(
                "{:<18}{:>18}{:>9}  {:?}\n",
                r.code,
                format!("[{}, {}, {}]", p.n, p.k, p.d_min),
                p.lambda_display,
                p.d_min_source
            ));
        }
        s
    }
}

// ---------------------------------------------------------------- verify

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Comma-separated suite names, or "all".
    #[arg(long, default_value = "all")]
    suite: String,
    /// Field orders, e.g. 2,3,4.
    #[arg(long, default_value = "2,3")]
    q: String,
    #[arg(long, default_value_t = 4)]
    max_weight: u32,
    #[arg(long, default_value_t = 2)]
    max_m: usize,
    /// Random instances for the sampled suites.
    #[arg(long, default_value_t = 1000)]
    samples: usize,
}

#[derive(Serialize)]
pub struct VerifyReport {
    command: &'static str,
    seed: u64,
    config: SuiteConfig,
    suites: Vec<SuiteReport>,
}

pub fn verify(a: &VerifyArgs, c: &Common) -> anyhow::Result<VerifyReport> {
    let names: Vec<&str> = if a.suite == "all" {
        SUITE_NAMES.to_vec()
    } else {
        a.suite.split(',').map(str::trim).collect()
    };
    if a.max_weight == 0 {
        bail!("--max-weight must be positive");
    }
    let config = SuiteConfig {
        qs: list(&a.q, "field order")?,
        max_weight: a.max_weight,
        max_m: a.max_m,
        samples: a.samples,
        seed: c.seed,
        budget: c.budget,
    };
    let suites = names
        .iter()
        .map(|n| suites::run_suite(n, &config))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(VerifyReport {
        command: "verify",
        seed: c.seed,
        config,
        suites,
    })
}

impl Render for VerifyReport {
    fn json(&self) -> anyhow::Result<String> {
        to_json(self)
    }

    fn csv(&self) -> anyhow::Result<String> {
        to_csv(
            &[
                "suite",
                "seed",
                "status",
                "checks",
                "skipped",
                "failures",
                "first_failure",
            ],
            self.suites.iter().map(|s| {
                [
                    s.suite.clone(),
                    s.seed.to_string(),
                    if s.passed() { "PASS" } else { "FAIL" }.to_string(),
                    s.checks.to_string(),
                    s.skipped.to_string(),
                    s.failure_count.to_string(),
                    s.failures.first().cloned().unwrap_or_default(),
                ]
            }),
        )
    }

    fn text(&self) -> String {
        let mut s = format!("seed {}\n", self.seed);
        for r in &self.suites {
            s.push_str(&format!(
                "{} {:<9} {} checks, {} skipped, {} failures\n",
                if r.passed() { "PASS" } else { "FAIL" },
                r.suite,
                r.checks,
                r.skipped,
                r.failure_count
            ));
            for f in &r.failures {
                s.push_str(&format!("    counterexample: {f}\n"));
            }
        }
        s
    }

    fn passed(&self) -> bool {
        self.suites.iter().all(SuiteReport::passed)
    }
}
