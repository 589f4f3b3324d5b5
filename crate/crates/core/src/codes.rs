//! Reed–Muller type codes: affine (RM), projective (PRM) and weighted
//! projective (WPRM) evaluation codes, with exact parameters.

use std::fmt;
use std::io::Write;
use std::sync::Arc;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::arith;
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement};
use crate::poly::{monomial_basis, Monomial, Polynomial, WeightedPolynomial};
use crate::search;
use crate::space::{enumerate_points, WeightSystem, WeightedPoint, ENUMERATION_BUDGET};
use crate::zeros;

/// Exhaustive cross-checks run by [`DminMethod::Auto`] up to this many
/// codeword classes.
pub const AUTO_CROSS_CHECK_BUDGET: u128 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CodeKind {
    #[serde(rename = "RM")]
    Rm,
    #[serde(rename = "PRM")]
    Prm,
    #[serde(rename = "WPRM")]
    Wprm,
}

impl fmt::Display for CodeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CodeKind::Rm => "RM",
            CodeKind::Prm => "PRM",
            CodeKind::Wprm => "WPRM",
        })
    }
}

impl std::str::FromStr for CodeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "rm" => Ok(CodeKind::Rm),
            "prm" => Ok(CodeKind::Prm),
            "wprm" => Ok(CodeKind::Wprm),
            _ => Err(Error::Parse(format!("unknown code kind {s:?}"))),
        }
    }
}

/// A code with its evaluation points and generator matrix. Rows follow
/// [`monomial_basis`], columns the canonical point order. RM codes use the
/// homogenized basis of degree `d` in `m + 1` variables evaluated at
/// `(1 : y_1 : ... : y_m)`.
#[derive(Clone, Debug)]
pub struct CodeInstance {
    kind: CodeKind,
    field: Arc<FieldCtx>,
    ws: WeightSystem,
    d: u64,
    points: Vec<WeightedPoint>,
    basis: Vec<Monomial>,
    matrix: Vec<Vec<u32>>,
    echelon: Vec<Vec<u32>>,
}

/// `F(x) / x_i^{d/a_i}` for `x` in the stratum `W_i`.
pub fn wprm_encode_column(
    field: &FieldCtx,
    f: &WeightedPolynomial,
    x: &WeightedPoint,
) -> Result<FieldElement> {
    let ws = f.weights();
    if !f.degree().is_multiple_of(ws.lcm()) {
        return Err(Error::Precondition(format!(
            "degree {} is not a multiple of lcm({ws}) = {}",
            f.degree(),
            ws.lcm()
        )));
    }
    let i = x.chart();
    let norm = field.pow(x.coords()[i], f.degree() / ws.weight(i) as u64);
    Ok(field.div(f.evaluate(field, x.coords()), norm))
}

/// Rows in reduced row echelon form, zero rows dropped.
pub fn row_echelon(field: &FieldCtx, rows: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let mut m: Vec<Vec<u32>> = rows.to_vec();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = field.inv_idx(m[rank][col]).expect("pivot is nonzero");
        for x in m[rank].iter_mut() {
            *x = field.mul_idx(*x, inv);
        }
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == rank || row[col] == 0 {
                continue;
            }
            let c = row[col];
            for (x, &p) in row.iter_mut().zip(&pivot_row) {
                *x = field.sub_idx(*x, field.mul_idx(c, p));
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    m.truncate(rank);
    m
}

pub fn build_code(
    kind: CodeKind,
    field: &Arc<FieldCtx>,
    m: usize,
    d: u64,
    weights: Option<&WeightSystem>,
) -> Result<CodeInstance> {
    let ws = match (kind, weights) {
        (CodeKind::Wprm, None) => {
            return Err(Error::Precondition("WPRM codes need weights".into()))
        }
        (CodeKind::Wprm, Some(w)) => {
            if w.dim() != m {
                return Err(Error::Precondition(format!(
                    "weights ({w}) have dimension {}, not m = {m}",
                    w.dim()
                )));
            }
            if !d.is_multiple_of(w.lcm()) {
                return Err(Error::Precondition(format!(
                    "d = {d} is not a multiple of lcm({w}) = {}",
                    w.lcm()
                )));
            }
            w.clone()
        }
        (_, Some(w)) if w != &WeightSystem::classical(m) => {
            return Err(Error::Precondition(format!(
                "{kind} codes use classical weights, got ({w})"
            )))
        }
        _ => WeightSystem::classical(m),
    };
    let pts = enumerate_points(&ws, field, ENUMERATION_BUDGET)?;
    let points: Vec<WeightedPoint> = match kind {
        CodeKind::Rm => pts
            .points()
            .iter()
            .filter(|p| p.chart() == 0)
            .cloned()
            .collect(),
        _ => pts.points().to_vec(),
    };
    let basis = monomial_basis(&ws, d);
    let n = points.len();
    let norms: Vec<u32> = points
        .iter()
        .map(|p| {
            let i = p.chart();
            let inv = field.inv(p.coords()[i]);
            field.pow(inv, d / ws.weight(i) as u64).index()
        })
        .collect();
    let idx: Vec<Vec<u32>> = points.iter().map(|p| p.indices()).collect();
    let matrix: Vec<Vec<u32>> = basis
        .iter()
        .map(|mono| {
            (0..n)
                .map(|j| field.mul_idx(mono.eval_idx(field, &idx[j]), norms[j]))
                .collect()
        })
        .collect();
    let echelon = row_echelon(field, &matrix);
    Ok(CodeInstance {
        kind,
        field: field.clone(),
        ws,
        d,
        points,
        basis,
        matrix,
        echelon,
    })
}

impl CodeInstance {
    pub fn kind(&self) -> CodeKind {
        self.kind
    }

    pub fn field(&self) -> &Arc<FieldCtx> {
        &self.field
    }

    pub fn q(&self) -> u64 {
        self.field.order() as u64
    }

    pub fn m(&self) -> usize {
        self.ws.dim()
    }

    pub fn degree(&self) -> u64 {
        self.d
    }

    pub fn weights(&self) -> &WeightSystem {
        &self.ws
    }

    pub fn points(&self) -> &[WeightedPoint] {
        &self.points
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn generator_matrix(&self) -> &[Vec<u32>] {
        &self.matrix
    }

    pub fn length(&self) -> usize {
        self.points.len()
    }

    pub fn dimension(&self) -> usize {
        self.echelon.len()
    }

    /// Codeword of `F`, as field indices.
    pub fn encode(&self, f: &WeightedPolynomial) -> Result<Vec<u32>> {
        if f.weights() != &self.ws || f.degree() != self.d {
            return Err(Error::Precondition(format!(
                "polynomial is not in S_{} for weights ({})",
                self.d, self.ws
            )));
        }
        self.points
            .iter()
            .map(|x| wprm_encode_column(&self.field, f, x).map(|v| v.index()))
            .collect()
    }

    /// Plain-text matrix: a header line `q m d weights n k`, then one row of
    /// space-separated field indices per basis monomial.
    pub fn write_matrix<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(
            out,
            "{} {} {} {} {} {}",
            self.q(),
            self.m(),
            self.d,
            self.ws,
            self.length(),
            self.dimension()
        )?;
        for row in &self.matrix {
            let line: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(out, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Minimum distance from the closed forms, when their hypotheses hold.
pub fn formula_min_distance(kind: CodeKind, q: u64, ws: &WeightSystem, d: u64) -> Option<u128> {
    let m = ws.dim() as u32;
    let q128 = q as u128;
    match kind {
        CodeKind::Rm => (d < q).then(|| (q128 - d as u128) * q128.pow(m.saturating_sub(1))),
        CodeKind::Prm => prm_formula(q, m, d),
        CodeKind::Wprm => {
            if ws.is_classical() {
                return prm_formula(q, m, d);
            }
            let l = ws.lcm();
            if !d.is_multiple_of(l) || d == 0 {
                return None;
            }
            let w = ws.weights();
            match m {
                1 => (d / l <= q).then(|| q128 + 1 - (d / l) as u128),
                2 if w[0] == 1 => {
                    let a1 = w[1].min(w[2]) as u64;
                    (d <= a1 * q).then(|| (q128 - (d / a1) as u128 + 1) * q128)
                }
                _ => None,
            }
        }
    }
}

fn prm_formula(q: u64, m: u32, d: u64) -> Option<u128> {
    (m >= 1 && d >= 1 && d <= q).then(|| (q as u128 - d as u128 + 1) * (q as u128).pow(m - 1))
}

/// Exact minimum weight, by searching all codeword classes of the echelon
/// basis. Returns the weight and a minimum-weight codeword.
pub fn min_distance_exhaustive(code: &CodeInstance, budget: u128) -> Result<(usize, Vec<u32>)> {
    if code.echelon.is_empty() {
        return Err(Error::Precondition("the code is zero".into()));
    }
    let out = search::max_zeros(&code.field, &code.echelon, budget)?;
    let n = code.length();
    let mut word = vec![0u32; n];
    for (row, &c) in code.echelon.iter().zip(&out.argmax) {
        for (w, &x) in word.iter_mut().zip(row) {
            *w = code.field.add_idx(*w, code.field.mul_idx(c, x));
        }
    }
    Ok((n - out.max_zeros, word))
}

/// A polynomial whose codeword has the formula weight when the formula
/// applies: `∏_{c < d} (X_1 - c X_0)` for RM, the two-variable line product
/// otherwise.
pub fn witness_polynomial(code: &CodeInstance) -> Option<WeightedPolynomial> {
    let f = &code.field;
    match code.kind {
        CodeKind::Rm => {
            let n = code.ws.len();
            if n < 2 || code.d >= code.q() {
                return None;
            }
            let mut acc = Polynomial::constant(n, f.one());
            for c in 0..code.d as u32 {
                let line = Polynomial::from_terms(
                    f,
                    n,
                    [
                        (Monomial::power(n, 1, 1), f.one()),
                        (Monomial::power(n, 0, 1), f.neg(f.elem(c))),
                    ],
                );
                acc = acc.mul(f, &line);
            }
            WeightedPolynomial::new(&code.ws, code.d, acc).ok()
        }
        _ => zeros::lower_bound_witness(&code.ws, code.d, f).ok(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DminSource {
    Formula,
    Exhaustive,
    /// Only an upper bound: weight of an explicit codeword.
    WitnessUpperBound,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DminMethod {
    Auto,
    Formula,
    Exhaustive,
}

impl std::str::FromStr for DminMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(DminMethod::Auto),
            "formula" => Ok(DminMethod::Formula),
            "exhaustive" => Ok(DminMethod::Exhaustive),
            _ => Err(Error::Parse(format!("unknown method {s:?}"))),
        }
    }
}

fn ratio_str<S: Serializer>(r: &Ratio<u64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format!("{}/{}", r.numer(), r.denom()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CodeParameters {
    pub kind: CodeKind,
    pub q: u64,
    pub m: usize,
    pub d: u64,
    pub weights: String,
    pub n: usize,
    pub k: usize,
    pub d_min: usize,
    pub d_min_source: DminSource,
    /// False when `d_min` is only an upper bound.
    pub exact: bool,
    /// Whether an exhaustive search confirmed the formula value.
    pub cross_checked: bool,
    #[serde(serialize_with = "ratio_str")]
    pub rate: Ratio<u64>,
    #[serde(serialize_with = "ratio_str")]
    pub relative_distance: Ratio<u64>,
    #[serde(serialize_with = "ratio_str")]
    pub lambda: Ratio<u64>,
    pub lambda_display: String,
    pub witness_polynomial: Option<String>,
    pub witness_weight: Option<usize>,
}

/// First three decimals of `r`, truncated, as `0.716`.
pub fn truncate3(r: &Ratio<u64>) -> String {
    let milli = r.numer() * 1000 / r.denom();
    format!("{}.{:03}", milli / 1000, milli % 1000)
}

pub fn code_parameters(
    code: &CodeInstance,
    method: DminMethod,
    budget: u128,
) -> Result<CodeParameters> {
    let n = code.length();
    let k = code.dimension();
    if k == 0 {
        return Err(Error::Precondition(format!(
            "S_{} is zero for weights ({}); the code is empty",
            code.d, code.ws
        )));
    }
    let formula = formula_min_distance(code.kind, code.q(), &code.ws, code.d);
    let witness = witness_polynomial(code).and_then(|w| {
        let word = code.encode(&w).ok()?;
        let weight = word.iter().filter(|&&x| x != 0).count();
        (weight > 0).then_some((w, weight))
    });
    if let (Some(f), Some((w, weight))) = (formula, &witness) {
        if *weight as u128 != f {
            return Err(Error::Inconsistent(format!(
                "witness {w} has weight {weight}, formula gives {f}"
            )));
        }
    }
    let classes = search::candidate_count(code.field.order(), k);

    let (d_min, source, cross_checked) = match method {
        DminMethod::Formula => {
            let f = formula.ok_or_else(|| {
                Error::Precondition(format!(
                    "no closed form applies to {} over F_{} with d = {} and weights ({})",
                    code.kind,
                    code.q(),
                    code.d,
                    code.ws
                ))
            })?;
            (f as usize, DminSource::Formula, false)
        }
        DminMethod::Exhaustive => {
            let (w, _) = min_distance_exhaustive(code, budget)?;
            if let Some(f) = formula {
                if f != w as u128 {
                    return Err(Error::Inconsistent(format!(
                        "exhaustive d_min {w} differs from formula {f}"
                    )));
                }
            }
            (w, DminSource::Exhaustive, false)
        }
        DminMethod::Auto => match formula {
            Some(f) => {
                let checked = if classes <= AUTO_CROSS_CHECK_BUDGET.min(budget) {
                    let (w, _) = min_distance_exhaustive(code, budget)?;
                    if w as u128 != f {
                        return Err(Error::Inconsistent(format!(
                            "exhaustive d_min {w} differs from formula {f}"
                        )));
                    }
                    true
                } else {
                    false
                };
                (f as usize, DminSource::Formula, checked)
            }
            None if classes <= budget => {
                let (w, _) = min_distance_exhaustive(code, budget)?;
                (w, DminSource::Exhaustive, false)
            }
            None => {
                let (_, weight) = witness.as_ref().ok_or_else(|| {
                    Error::Precondition(
                        "no formula, search budget exceeded and no witness codeword".into(),
                    )
                })?;
                (*weight, DminSource::WitnessUpperBound, false)
            }
        },
    };
    let n64 = n as u64;
    let rate = Ratio::new(k as u64, n64);
    let relative_distance = Ratio::new(d_min as u64, n64);
    let lambda = Ratio::new((k + d_min) as u64, n64);
    Ok(CodeParameters {
        kind: code.kind,
        q: code.q(),
        m: code.m(),
        d: code.d,
        weights: code.ws.to_string(),
        n,
        k,
        d_min,
        d_min_source: source,
        exact: source != DminSource::WitnessUpperBound,
        cross_checked,
        rate,
        relative_distance,
        lambda,
        lambda_display: truncate3(&lambda),
        witness_weight: witness.as_ref().map(|(_, w)| *w),
        witness_polynomial: witness.map(|(w, _)| w.to_text()),
    })
}

/// `λ` values sorted in decreasing order, ties kept in input order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LambdaComparison {
    pub labels: Vec<String>,
    #[serde(skip)]
    pub lambdas: Vec<Ratio<u64>>,
    /// Indices into `labels`, best first.
    pub ranking: Vec<usize>,
}

pub fn lambda_compare(codes: &[CodeParameters]) -> LambdaComparison {
    let labels: Vec<String> = codes.iter().map(table_label).collect();
    let lambdas: Vec<Ratio<u64>> = codes.iter().map(|c| c.lambda).collect();
    let mut ranking: Vec<usize> = (0..codes.len()).collect();
    ranking.sort_by(|&a, &b| lambdas[b].cmp(&lambdas[a]));
    LambdaComparison {
        labels,
        lambdas,
        ranking,
    }
}

fn table_label(c: &CodeParameters) -> String {
    match c.kind {
        CodeKind::Wprm => format!("WPRM ({})", c.weights),
        k => k.to_string(),
    }
}

/// `(k β² a² + 3 β a - k β - β - 2) / (2 β (a - 1))`: above this `q`, the
/// WPRM code on `(1, a, aβ)` of degree `k a β` should beat PRM in `λ`.
pub fn performance_threshold(a: u64, beta: u64, k: u64) -> Ratio<i64> {
    let (a, b, k) = (a as i64, beta as i64, k as i64);
    Ratio::new(
        k * b * b * a * a + 3 * b * a - k * b - b - 2,
        2 * b * (a - 1),
    )
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PerformanceCheck {
    pub a: u64,
    pub beta: u64,
    pub k: u64,
    pub q: u64,
    pub d: u64,
    #[serde(serialize_with = "ratio_i64")]
    pub threshold: Ratio<i64>,
    pub applies: bool,
    /// `λ(WPRM) ≥ λ(PRM)`; `None` outside the formula range `d ≤ q`.
    pub holds: Option<bool>,
    #[serde(serialize_with = "ratio_opt")]
    pub lambda_wprm: Option<Ratio<u64>>,
    #[serde(serialize_with = "ratio_opt")]
    pub lambda_prm: Option<Ratio<u64>>,
}

fn ratio_i64<S: Serializer>(r: &Ratio<i64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format!("{}/{}", r.numer(), r.denom()))
}

fn ratio_opt<S: Serializer>(r: &Option<Ratio<u64>>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => ratio_str(r, s),
        None => s.serialize_none(),
    }
}

/// Evaluates the threshold and, where the closed forms are valid, both `λ`
/// values from the dimension count and the minimum distance formulas.
pub fn check_performance(a: u64, beta: u64, k: u64, q: u64) -> PerformanceCheck {
    let d = k * a * beta;
    let threshold = performance_threshold(a, beta, k);
    let applies = Ratio::from_integer(q as i64) >= threshold;
    let n = arith::projective_count(q, 2) as u64;
    let (mut lw, mut lp) = (None, None);
    if d >= 1 && d <= q {
        let wws = WeightSystem::new(vec![1, a as u32, (a * beta) as u32]).expect("gcd 1");
        let pws = WeightSystem::classical(2);
        let kw = crate::poly::dim_sd(&wws, d) as u64;
        let kp = arith::binomial(d + 2, 2) as u64;
        let dw = formula_min_distance(CodeKind::Wprm, q, &wws, d).expect("d ≤ q ≤ a q") as u64;
        let dp = formula_min_distance(CodeKind::Prm, q, &pws, d).expect("1 ≤ d ≤ q") as u64;
        lw = Some(Ratio::new(kw + dw, n));
        lp = Some(Ratio::new(kp + dp, n));
    }
    PerformanceCheck {
        a,
        beta,
        k,
        q,
        d,
        threshold,
        applies,
        holds: match (applies, lw, lp) {
            (true, Some(w), Some(p)) => Some(w >= p),
            _ => None,
        },
        lambda_wprm: lw,
        lambda_prm: lp,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub code: String,
    pub params: CodeParameters,
}

/// RM, PRM and WPRM on each of `weights` (those whose lcm divides `d`),
/// all over `F_q` in dimension 2 and degree `d`.
pub fn comparison_table(
    field: &Arc<FieldCtx>,
    d: u64,
    weights: &[WeightSystem],
    budget: u128,
) -> Result<Vec<TableRow>> {
    let mut rows = Vec::new();
    let mut push = |code: CodeInstance| -> Result<()> {
        let params = code_parameters(&code, DminMethod::Auto, budget)?;
        rows.push(TableRow {
            code: table_label(&params),
            params,
        });
        Ok(())
    };
    push(build_code(CodeKind::Rm, field, 2, d, None)?)?;
    push(build_code(CodeKind::Prm, field, 2, d, None)?)?;
    for w in weights.iter().filter(|w| d.is_multiple_of(w.lcm())) {
        push(build_code(CodeKind::Wprm, field, 2, d, Some(w))?)?;
    }
    Ok(rows)
}

/// Weights compared over `F_19` in degree 16.
pub fn f19_weights() -> Vec<WeightSystem> {
    [[1, 2, 2], [1, 2, 4], [1, 2, 8], [1, 4, 4], [1, 16, 16]]
        .iter()
        .map(|w| WeightSystem::new(w.to_vec()).expect("valid weights"))
        .collect()
}

/// CSV with columns `code,n,k,d_min,lambda,d_min_source`; `λ` truncated to
/// three decimals.
pub fn table_csv(rows: &[TableRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["code", "n", "k", "d_min", "lambda", "d_min_source"])
        .expect("in-memory write");
    for r in rows {
        let p = &r.params;
        let source = match p.d_min_source {
            DminSource::Formula => "formula",
            DminSource::Exhaustive => "exhaustive",
            DminSource::WitnessUpperBound => "witness-upper-bound",
        };
        w.write_record([
            r.code.clone(),
            p.n.to_string(),
            p.k.to_string(),
            p.d_min.to_string(),
            p.lambda_display.clone(),
            source.to_string(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("ascii")
}
