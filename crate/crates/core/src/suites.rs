//! Grid and randomized checks tying the formulas to brute force. Each suite
//! returns the number of checks run and every failure found.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::arith;
use crate::codes::{self, CodeKind, DminMethod};
use crate::delorme::{delorme_reduce, DelormeStep};
use crate::error::Result;
use crate::family::{self, primitive_pairs};
use crate::field::FieldCtx;
use crate::lines::{incidence_suite, LineSystem};
use crate::poly::{dim_sd, monomial_basis, Polynomial, WeightedPolynomial};
use crate::search;
use crate::space::{enumerate_points, PointSet, WeightSystem, ENUMERATION_BUDGET};
use crate::zeros::{self, BoundKind};

/// Failures kept verbatim in a report; the total is always counted.
const MAX_LISTED_FAILURES: usize = 50;

#[derive(Clone, Debug, Serialize)]
pub struct SuiteConfig {
    pub qs: Vec<u64>,
    pub max_weight: u32,
    pub max_m: usize,
    pub samples: usize,
    pub seed: u64,
    pub budget: u128,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            qs: vec![2, 3],
            max_weight: 4,
            max_m: 2,
            samples: 10_000,
            seed: 0,
            budget: search::SEARCH_BUDGET,
        }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub checks: u64,
    pub failure_count: u64,
    pub failures: Vec<String>,
    /// Instances left out, e.g. over budget.
    pub skipped: u64,
}

impl SuiteReport {
    fn new(suite: &str, seed: u64) -> Self {
        Self {
            suite: suite.into(),
            seed,
            ..Default::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0 && self.checks > 0
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.fail(msg());
        }
    }

    fn fail(&mut self, msg: String) {
        self.failure_count += 1;
        if self.failures.len() < MAX_LISTED_FAILURES {
            self.failures.push(msg);
        }
    }

    fn merge(&mut self, other: SuiteReport) {
        self.checks += other.checks;
        self.skipped += other.skipped;
        self.failure_count += other.failure_count;
        for f in other.failures {
            if self.failures.len() < MAX_LISTED_FAILURES {
                self.failures.push(f);
            }
        }
    }
}

pub const SUITE_NAMES: [&str; 9] = [
    "points", "lemma2", "lemma3", "theorem1", "serre", "lines", "bounds", "delorme", "codes",
];

pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<SuiteReport> {
    match name {
        "points" => point_count_suite(cfg),
        "lemma2" => family_suite(cfg),
        "lemma3" => torus_suite(cfg),
        "theorem1" => extremal_suite(cfg),
        "serre" => lower_bound_suite(cfg),
        "lines" => lines_suite(cfg),
        "bounds" => bounds_suite(cfg),
        "delorme" => delorme_suite(cfg),
        "codes" => codes_suite(cfg),
        _ => Err(crate::Error::Parse(format!(
            "unknown suite {name:?}; expected one of {}",
            SUITE_NAMES.join(", ")
        ))),
    }
}

fn field(q: u64) -> Result<Arc<FieldCtx>> {
    Ok(Arc::new(FieldCtx::with_order(q)?))
}

/// Every tuple of length `m + 1` with entries in `1..=max` and gcd 1.
pub fn weight_tuples(max: u32, m: usize) -> Vec<WeightSystem> {
    let mut out = Vec::new();
    let mut t = vec![1u32; m + 1];
    loop {
        if let Ok(ws) = WeightSystem::new(t.clone()) {
            out.push(ws);
        }
        let Some(pos) = t.iter().rposition(|&x| x < max) else {
            return out;
        };
        t[pos] += 1;
        for x in &mut t[pos + 1..] {
            *x = 1;
        }
    }
}

fn sorted_tuples(max: u32, m: usize) -> Vec<WeightSystem> {
    weight_tuples(max, m)
        .into_iter()
        .filter(|w| w.weights().windows(2).all(|p| p[0] <= p[1]))
        .collect()
}

/// `|P(a)(F_q)| = p_m` over all tuples with entries `≤ max_weight`,
/// `m ≤ max_m`, skipping characteristics dividing a weight.
pub fn point_count_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut jobs = Vec::new();
    for &q in &cfg.qs {
        let f = field(q)?;
        for m in 0..=cfg.max_m {
            for ws in weight_tuples(cfg.max_weight, m) {
                jobs.push((f.clone(), ws));
            }
        }
    }
    let parts: Vec<SuiteReport> = jobs
        .par_iter()
        .map(|(f, ws)| {
            let mut rep = SuiteReport::new("points", cfg.seed);
            if ws.characteristic_divides(f.characteristic()) {
                rep.skipped += 1;
                return rep;
            }
            let q = f.order() as u64;
            match enumerate_points(ws, f, ENUMERATION_BUDGET) {
                Ok(pts) => {
                    let want = arith::projective_count(q, ws.dim() as i64);
                    rep.check(pts.len() as u128 == want, || {
                        format!("P({ws}) over F_{q}: {} points, expected {want}", pts.len())
                    });
                }
                Err(e) => rep.fail(format!("P({ws}) over F_{q}: {e}")),
            }
            rep
        })
        .collect();
    let mut rep = SuiteReport::new("points", cfg.seed);
    parts.into_iter().for_each(|p| rep.merge(p));
    Ok(rep)
}

/// Closed-form family counts against brute force on random members, plus
/// the two `P(2,3,5)` polynomials at every `q ≥ 5` in the list.
pub fn family_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("lemma2", cfg.seed);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let ms: Vec<usize> = (2..=cfg.max_m.max(2)).collect();
    let per = cfg.samples.div_ceil(cfg.qs.len() * ms.len()).max(1);
    for &q in &cfg.qs {
        let f = field(q)?;
        for &m in &ms {
            let systems: Vec<(WeightSystem, Vec<family::PrimitivePair>)> =
                sorted_tuples(cfg.max_weight.min(5), m)
                    .into_iter()
                    .map(|w| {
                        let p = primitive_pairs(&w, 3);
                        (w, p)
                    })
                    .filter(|(_, p)| !p.is_empty())
                    .collect();
            let mut spaces: Vec<Option<PointSet>> = vec![None; systems.len()];
            for _ in 0..per {
                let i = rng.gen_range(0..systems.len());
                let (ws, pairs) = &systems[i];
                let pts = match &spaces[i] {
                    Some(p) => p,
                    None => {
                        spaces[i] = Some(enumerate_points(ws, &f, ENUMERATION_BUDGET)?);
                        spaces[i].as_ref().expect("just set")
                    }
                };
                let spec = family::random_family_spec(ws, &f, pairs, &mut rng)
                    .expect("pairs are nonempty");
                let poly = family::build_family(&spec, ws, &f)?;
                let brute = zeros::count_zeros(&poly, pts)? as u128;
                let closed = family::family_count_closed_form(&spec.indices(), q, m);
                rep.check(brute == closed, || {
                    format!(
                        "P({ws}) F_{q}: {:?} {} has {brute} zeros, closed form {closed}",
                        spec.indices(),
                        poly
                    )
                });
            }
        }
    }
    let ws = WeightSystem::new(vec![2, 3, 5])?;
    for &q in cfg.qs.iter().filter(|&&q| q >= 5) {
        let f = field(q)?;
        let pts = enumerate_points(&ws, &f, ENUMERATION_BUDGET)?;
        for (text, want) in [
            ("X0*X1*X2*(X0*X1 - t*X2)", 7 * q - 4),
            ("X0^3*X1^2*(X0^3 - t*X1^2)", 5 * q + 1),
        ] {
            let poly = p235_member(&f, &ws, text.starts_with("X0*X1"))?;
            let got = zeros::count_zeros(&poly, &pts)? as u64;
            rep.check(got == want, || {
                format!("P(2,3,5) F_{q}: {text} has {got} zeros, expected {want}")
            });
        }
    }
    Ok(rep)
}

/// `X_0X_1X_2 ∏_{i≤4}(X_0X_1 - t_iX_2)` or `X_0^3X_1^2 ∏_{i≤3}(X_0^3 - t_iX_1^2)`.
pub fn p235_member(f: &FieldCtx, ws: &WeightSystem, first: bool) -> Result<WeightedPolynomial> {
    use crate::poly::Monomial;
    let (m0, m1, ell) = if first {
        (Monomial::new([1, 1, 0]), Monomial::new([0, 0, 1]), 4)
    } else {
        (Monomial::new([3, 0, 0]), Monomial::new([0, 2, 0]), 3)
    };
    let pair = family::PrimitivePair::new(ws, m0.clone(), m1.clone())?;
    let t = (1..=ell).map(|i| f.elem(i)).collect();
    let spec = family::FamilySpec::new(pair, m0, m1, t, f)?;
    family::build_family(&spec, ws, f)
}

/// Torus counts `= (q-1)^{s_0+s_1-1}` for all exponent tuples with entries
/// `≤ max_weight`, `s_0 + s_1 ≤ 4` and gcd 1, and all `α, β`.
pub fn torus_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("lemma3", cfg.seed);
    for &q in &cfg.qs {
        let f = field(q)?;
        let want = |s: usize| ((q - 1) as u128).pow(s as u32 - 1);
        for s in 2..=4usize {
            let all: Vec<u32> = vec![1; s];
            let mut e = all;
            loop {
                if arith::gcd_all(e.iter().map(|&x| x as u64)) == 1 {
                    for s0 in 1..s {
                        let (a, b) = e.split_at(s0);
                        for alpha in f.nonzero_elements() {
                            for beta in f.nonzero_elements() {
                                let got = family::torus_count(a, b, alpha, beta, &f)?;
                                rep.check(got == want(s), || {
                                    format!(
                                        "F_{q}: {alpha}*x^{a:?} = {beta}*y^{b:?} has {got} torus solutions, expected {}",
                                        want(s)
                                    )
                                });
                            }
                        }
                    }
                }
                let Some(pos) = e.iter().rposition(|&x| x < cfg.max_weight) else {
                    break;
                };
                e[pos] += 1;
                for x in &mut e[pos + 1..] {
                    *x = 1;
                }
            }
        }
    }
    Ok(rep)
}

/// `e_q` by exhaustive search against `min{p_m, d q^{m-1} + p_{m-2}}` for
/// classical weights (`d ≤ q + 1`) and against `(d/a_1) q + 1` for
/// `(1, a_1, a_2)`, `a_1 < a_2 ≤ max_weight` coprime,
/// `lcm | d ≤ a_1 (q + 1)`.
pub fn extremal_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("theorem1", cfg.seed);
    for &q in &cfg.qs {
        let f = field(q)?;
        for m in 1..=cfg.max_m.min(2) {
            let ws = WeightSystem::classical(m);
            let pts = enumerate_points(&ws, &f, ENUMERATION_BUDGET)?;
            for d in 1..=q + 1 {
                let want = arith::projective_count(q, m as i64).min(
                    d as u128 * (q as u128).pow(m as u32 - 1)
                        + arith::projective_count(q, m as i64 - 2),
                );
                oracle_check(&mut rep, &pts, d, want, cfg.budget)?;
            }
        }
        for a2 in 2..=cfg.max_weight {
            for a1 in 1..a2 {
                if arith::gcd(a1 as u64, a2 as u64) != 1 {
                    continue;
                }
                let ws = WeightSystem::new(vec![1, a1, a2])?;
                let pts = enumerate_points(&ws, &f, ENUMERATION_BUDGET)?;
                let l = (a1 * a2) as u64;
                let mut d = l;
                while d <= a1 as u64 * (q + 1) {
                    let want = (d / a1 as u64) as u128 * q as u128 + 1;
                    oracle_check(&mut rep, &pts, d, want, cfg.budget)?;
                    d += l;
                }
            }
        }
    }
    Ok(rep)
}

fn oracle_check(
    rep: &mut SuiteReport,
    pts: &PointSet,
    d: u64,
    want: u128,
    budget: u128,
) -> Result<()> {
    let ws = pts.weights();
    let q = pts.field().order();
    let k = monomial_basis(ws, d).len();
    if search::candidate_count(q, k) > budget {
        rep.skipped += 1;
        return Ok(());
    }
    let got = zeros::eq_oracle_on(pts, d, budget)?.zeros();
    rep.check(got.map(|z| z as u128) == Some(want), || {
        format!("e_{q}({d}; {ws}) = {got:?}, expected {want}")
    });
    Ok(())
}

/// `e_q ≥` the two-variable lower bound wherever it applies, the witness
/// attaining it exactly, and the `(3,4)` non-monotone pair.
pub fn lower_bound_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("serre", cfg.seed);
    for &q in &cfg.qs {
        let f = field(q)?;
        for m in 1..=cfg.max_m {
            for ws in sorted_tuples(cfg.max_weight, m) {
                let pts = enumerate_points(&ws, &f, ENUMERATION_BUDGET)?;
                let (_, _, a) = ws.min_pair_lcm().expect("m ≥ 1");
                for d in (a..=a * (q + 2)).step_by(a as usize) {
                    let lb = zeros::serre_lower_bound(&ws, d, q).value().expect("a | d");
                    let w = zeros::lower_bound_witness(&ws, d, &f)?;
                    let wz = zeros::count_zeros(&w, &pts)? as u128;
                    rep.check(wz == lb, || {
                        format!("P({ws}) F_{q} d={d}: witness {w} has {wz} zeros, bound {lb}")
                    });
                    let k = monomial_basis(&ws, d).len();
                    if search::candidate_count(q as u32, k) > cfg.budget.min(1 << 22) {
                        rep.skipped += 1;
                        continue;
                    }
                    let e = zeros::eq_oracle_on(&pts, d, cfg.budget)?
                        .zeros()
                        .unwrap_or(0) as u128;
                    rep.check(e >= lb, || format!("P({ws}) F_{q} d={d}: e_q = {e} < {lb}"));
                }
            }
        }
        let ws = WeightSystem::new(vec![3, 4])?;
        for (d, want) in [(7, 2), (8, 1)] {
            let got = zeros::eq_oracle(&ws, d, &f, cfg.budget)?.zeros();
            rep.check(got == Some(want), || {
                format!("e_{q}({d}; 3,4) = {got:?}, expected {want}")
            });
        }
    }
    Ok(rep)
}

/// Incidence properties of all lines in `P(1, a_1, a_2)`.
pub fn lines_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("lines", cfg.seed);
    for &q in &cfg.qs {
        let f = field(q)?;
        for a2 in 2..=cfg.max_weight.max(2) {
            for a1 in 1..a2 {
                if arith::gcd(a1 as u64, a2 as u64) != 1 {
                    continue;
                }
                let ws = WeightSystem::new(vec![1, a1, a2])?;
                let sys = LineSystem::new(&ws, &f)?;
                let pts = enumerate_points(&ws, &f, ENUMERATION_BUDGET)?;
                let r = incidence_suite(&sys, &pts)?;
                rep.checks += (r.lines + r.pairs + r.affine_points) as u64;
                for msg in r.failures {
                    rep.fail(format!("P({ws}) F_{q}: {msg}"));
                }
            }
        }
    }
    Ok(rep)
}

/// A random nonzero element of `S_d`: either a sparse random combination of
/// monomials or a product of random low-degree pieces.
fn random_poly<R: Rng>(
    rng: &mut R,
    f: &FieldCtx,
    ws: &WeightSystem,
    d: u64,
) -> Option<WeightedPolynomial> {
    let basis = monomial_basis(ws, d);
    if basis.is_empty() {
        return None;
    }
    let q = f.order();
    let density = rng.gen_range(0.05..1.0);
    loop {
        let mut terms = Vec::new();
        for m in &basis {
            if rng.gen_bool(density) {
                terms.push((m.clone(), f.elem(rng.gen_range(1..q))));
            }
        }
        let poly = Polynomial::from_terms(f, ws.len(), terms);
        if !poly.is_zero() {
            return WeightedPolynomial::new(ws, d, poly).ok();
        }
    }
}

/// Product of `t` distinct vertical lines `X_1 - c X_0^{a_1}` times a power
/// of `X_0`, completing the degree.
fn vertical_product(f: &FieldCtx, ws: &WeightSystem, d: u64, t: u64) -> Option<WeightedPolynomial> {
    let a1 = ws.weight(1);
    if t * a1 as u64 > d || t > f.order() as u64 {
        return None;
    }
    let mut acc = Polynomial::constant(3, f.one());
    for c in 0..t as u32 {
        let line = Polynomial::from_terms(
            f,
            3,
            [
                (crate::Monomial::new([0, 1, 0]), f.one()),
                (crate::Monomial::new([a1, 0, 0]), f.neg(f.elem(c))),
            ],
        );
        acc = acc.mul(f, &line);
    }
    let rest = (d - t * a1 as u64) as u32;
    acc = acc.mul(
        f,
        &Polynomial::term(crate::Monomial::new([rest, 0, 0]), f.one()),
    );
    WeightedPolynomial::new(ws, d, acc).ok()
}

/// Random polynomials against every applicable upper bound, `samples`
/// polynomials per bound kind.
pub fn bounds_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("bounds", cfg.seed);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let qs: Vec<u64> = cfg.qs.clone();
    let mut cache: std::collections::HashMap<(Vec<u32>, u64), PointSet> = Default::default();
    let mut space = |ws: &WeightSystem, q: u64| -> Result<PointSet> {
        let key = (ws.weights().to_vec(), q);
        if let Some(p) = cache.get(&key) {
            return Ok(p.clone());
        }
        let p = enumerate_points(ws, &field(q)?, ENUMERATION_BUDGET)?;
        cache.insert(key, p.clone());
        Ok(p)
    };
    let mut counts = [0usize; 4];
    let kinds = [
        BoundKind::Serre,
        BoundKind::WeightedPlane,
        BoundKind::WeightedOre,
        BoundKind::WeightedDAlembert,
    ];
    let idx = |k: BoundKind| kinds.iter().position(|&x| x == k).expect("listed");
    let mut witness_draws = 0usize;
    let mut guard = 0usize;
    while counts.iter().any(|&c| c < cfg.samples) || witness_draws < cfg.samples {
        guard += 1;
        if guard > cfg.samples * 40 {
            rep.fail(format!(
                "could not draw enough instances: {counts:?}, witness_draws {witness_draws}"
            ));
            break;
        }
        let q = qs[rng.gen_range(0..qs.len())];
        // pick the family lagging behind
        let lagging = (0..4).min_by_key(|&i| counts[i]).expect("nonempty");
        let want_witness = witness_draws < counts[lagging];
        let (ws, d) = if want_witness {
            let m = rng.gen_range(1..=cfg.max_m.max(1));
            let w: Vec<u32> = (0..=m).map(|_| rng.gen_range(1..=cfg.max_weight)).collect();
            let Ok(ws) = WeightSystem::new(w) else {
                continue;
            };
            let (_, _, a) = ws.min_pair_lcm().expect("m ≥ 1");
            let d = a * rng.gen_range(1..=q + 2);
            (ws, d)
        } else {
            match kinds[lagging] {
                BoundKind::Serre => {
                    let m = rng.gen_range(1..=cfg.max_m.max(1));
                    (WeightSystem::classical(m), rng.gen_range(1..=q + 2))
                }
                BoundKind::WeightedPlane | BoundKind::WeightedOre => {
                    let a1 = rng.gen_range(1..=cfg.max_weight);
                    let a2 = rng.gen_range(1..=cfg.max_weight);
                    let ws = WeightSystem::new(vec![1, a1, a2])?;
                    let l = arith::lcm(a1 as u64, a2 as u64);
                    let amin = a1.min(a2) as u64;
                    let top = (amin * (q + 1)) / l;
                    if top == 0 {
                        continue;
                    }
                    (ws, l * rng.gen_range(1..=top))
                }
                BoundKind::WeightedDAlembert => {
                    let a1 = rng.gen_range(1..=cfg.max_weight);
                    (
                        WeightSystem::new(vec![1, a1])?,
                        a1 as u64 * rng.gen_range(1..=q + 2),
                    )
                }
            }
        };
        if ws.weights().iter().map(|&a| a as u64).product::<u64>() > 64 {
            continue;
        }
        let pts = space(&ws, q)?;
        let f = pts.field().clone();
        if want_witness {
            witness_draws += 1;
            let lb = zeros::serre_lower_bound(&ws, d, q)
                .value()
                .expect("a | d, d ≥ 1");
            let w = zeros::lower_bound_witness(&ws, d, &f)?;
            let got = zeros::count_zeros(&w, &pts)? as u128;
            rep.check(got == lb, || {
                format!("P({ws}) F_{q} d={d}: witness has {got} zeros, bound {lb}")
            });
            continue;
        }
        let poly = if ws.len() == 3 && ws.weight(0) == 1 && rng.gen_bool(0.2) {
            let t = rng.gen_range(1..=q);
            vertical_product(&f, &ws, d, t).or_else(|| random_poly(&mut rng, &f, &ws, d))
        } else {
            random_poly(&mut rng, &f, &ws, d)
        };
        let Some(poly) = poly else { continue };
        for r in zeros::check_bounds(&poly, &pts, None)? {
            counts[idx(r.bound_name)] += 1;
            rep.check(r.satisfied, || {
                format!(
                    "{} violated on P({ws}) F_{q}: {} has {} > {}",
                    r.bound_name.name(),
                    poly,
                    r.value,
                    r.bound
                )
            });
        }
    }
    Ok(rep)
}

/// Reduction pairs `P(a_0 b, …, a_i, …, a_m b) ≅ P(a)`: point bijection,
/// equal `dim S_d`, equal `e_q`, and equal WPRM `(k, d_min)`.
pub fn delorme_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("delorme", cfg.seed);
    let steps: Vec<DelormeStep> = (1..=cfg.max_m)
        .flat_map(|m| weight_tuples(cfg.max_weight, m))
        .flat_map(|target| {
            let mut out = Vec::new();
            for i in 0..target.len() {
                for b in 2..=3u32 {
                    let src: Vec<u32> = target
                        .weights()
                        .iter()
                        .enumerate()
                        .map(|(j, &a)| if j == i { a } else { a * b })
                        .collect();
                    let Ok(src) = WeightSystem::new(src) else {
                        continue;
                    };
                    if let Ok(step) = delorme_reduce(&src, i, b) {
                        debug_assert_eq!(step.target(), &target);
                        out.push(step);
                    }
                }
            }
            out
        })
        .collect();
    for &q in &cfg.qs {
        let f = field(q)?;
        for step in &steps {
            let (src, tgt, b) = (step.source(), step.target(), step.factor() as u64);
            let sp = enumerate_points(src, &f, ENUMERATION_BUDGET)?;
            let tp = enumerate_points(tgt, &f, ENUMERATION_BUDGET)?;
            let mut image: Vec<_> = sp
                .points()
                .iter()
                .map(|p| step.map_point(&f, p))
                .collect::<Result<_>>()?;
            image.sort();
            image.dedup();
            rep.check(image.len() == tp.len() && sp.len() == tp.len(), || {
                format!("{src} -> {tgt} over F_{q}: point map is not a bijection")
            });
            let lt = tgt.lcm();
            for d in 1..=2 * lt {
                rep.check(dim_sd(src, d * b) == dim_sd(tgt, d), || {
                    format!("dim S_{} ({src}) != dim S_{d} ({tgt})", d * b)
                });
                let k = monomial_basis(tgt, d).len();
                if k == 0 || search::candidate_count(q as u32, k) > cfg.budget.min(1 << 20) {
                    continue;
                }
                let es = zeros::eq_oracle_on(&sp, d * b, cfg.budget)?.zeros();
                let et = zeros::eq_oracle_on(&tp, d, cfg.budget)?.zeros();
                rep.check(es == et, || {
                    format!(
                        "e_{q}: {es:?} on ({src}) d={} vs {et:?} on ({tgt}) d={d}",
                        d * b
                    )
                });
                if d % lt == 0 && (d * b) % src.lcm() == 0 {
                    let cs = codes::build_code(CodeKind::Wprm, &f, src.dim(), d * b, Some(src))?;
                    let ct = codes::build_code(CodeKind::Wprm, &f, tgt.dim(), d, Some(tgt))?;
                    let ps = codes::code_parameters(&cs, DminMethod::Exhaustive, cfg.budget)?;
                    let pt = codes::code_parameters(&ct, DminMethod::Exhaustive, cfg.budget)?;
                    rep.check((ps.k, ps.d_min) == (pt.k, pt.d_min), || {
                        format!(
                            "WPRM_{q}: [{}, {}] on ({src}) vs [{}, {}] on ({tgt})",
                            ps.k, ps.d_min, pt.k, pt.d_min
                        )
                    });
                }
            }
        }
    }
    Ok(rep)
}

/// Exhaustive WPRM minimum distance against the plane formula for
/// `(1, a_1, a_2)`, `a_1 < a_2 ≤ max_weight` coprime, `lcm | d`,
/// `1 ≤ d ≤ a_1 q`; rank against `dim S_d` for `d ≤ q`; the performance
/// thresholds on a small grid.
pub fn codes_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("codes", cfg.seed);
    for &q in &cfg.qs {
        let f = field(q)?;
        for a2 in 2..=cfg.max_weight {
            for a1 in 1..a2 {
                if arith::gcd(a1 as u64, a2 as u64) != 1 {
                    continue;
                }
                let ws = WeightSystem::new(vec![1, a1, a2])?;
                let l = ws.lcm();
                let mut d = l;
                while d <= a1 as u64 * q {
                    let code = codes::build_code(CodeKind::Wprm, &f, 2, d, Some(&ws))?;
                    if d <= q {
                        rep.check(code.dimension() as u128 == dim_sd(&ws, d), || {
                            format!("WPRM_{q}({d}; {ws}) has rank {}", code.dimension())
                        });
                    }
                    let classes = search::candidate_count(q as u32, code.dimension());
                    if classes > cfg.budget {
                        rep.skipped += 1;
                    } else {
                        let (w, _) = codes::min_distance_exhaustive(&code, cfg.budget)?;
                        let formula = codes::formula_min_distance(CodeKind::Wprm, q, &ws, d);
                        rep.check(formula == Some(w as u128), || {
                            format!("WPRM_{q}({d}; {ws}): exhaustive {w}, formula {formula:?}")
                        });
                    }
                    d += l;
                }
            }
        }
    }
    for a in 2..=5 {
        for beta in 1..=4 {
            for k in 1..=6 {
                for q in [
                    2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32,
                ] {
                    let c = codes::check_performance(a, beta, k, q);
                    if let Some(h) = c.holds {
                        rep.check(h, || format!("performance claim fails: {c:?}"));
                    }
                }
            }
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(qs: &[u64]) -> SuiteConfig {
        SuiteConfig {
            qs: qs.to_vec(),
            max_weight: 3,
            max_m: 2,
            samples: 200,
            seed: 1,
            budget: 1 << 20,
        }
    }

    #[test]
    fn tuples() {
        assert_eq!(weight_tuples(2, 1).len(), 3);
        assert_eq!(sorted_tuples(3, 2).len(), 8);
    }

    #[test]
    fn small_suites_pass() {
        for name in SUITE_NAMES {
            let rep = run_suite(name, &small(&[2, 3])).unwrap();
            assert!(rep.passed(), "{name}: {:?}", rep.failures);
        }
        assert!(run_suite("nope", &small(&[2])).is_err());
    }
}
