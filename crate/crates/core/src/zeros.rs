//! Zero counts of weighted homogeneous polynomials, the exhaustive maximum
//! `e_q(d; a)`, the two-variable lower-bound witness and the bound checkers.

use serde::Serialize;

use crate::arith;
use crate::error::{Error, Result};
use crate::field::FieldCtx;
use crate::poly::{monomial_basis, Monomial, Polynomial, WeightedPolynomial};
use crate::search::{self, SearchOutcome};
use crate::space::{enumerate_points, PointSet, WeightSystem, ENUMERATION_BUDGET};

fn check_space(f: &WeightedPolynomial, pts: &PointSet) -> Result<()> {
    if f.weights() != pts.weights() {
        return Err(Error::Precondition(format!(
            "polynomial has weights ({}), points belong to ({})",
            f.weights(),
            pts.weights()
        )));
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(())
}

/// `|V(F)|` over the rational points of the space.
pub fn count_zeros(f: &WeightedPolynomial, pts: &PointSet) -> Result<usize> {
    check_space(f, pts)?;
    let field = pts.field();
    Ok(pts
        .points()
        .iter()
        .filter(|p| f.evaluate(field, p.coords()).is_zero())
        .count())
}

/// Zeros with `x_0 ≠ 0`, i.e. on the affine chart `(1 : y_1 : ... : y_m)`.
pub fn affine_zeros(f: &WeightedPolynomial, pts: &PointSet) -> Result<usize> {
    check_space(f, pts)?;
    let field = pts.field();
    Ok(pts
        .points()
        .iter()
        .filter(|p| p.chart() == 0 && f.evaluate(field, p.coords()).is_zero())
        .count())
}

/// `rows[j][pt]`: value of the `j`-th monomial at the stored representative.
pub(crate) fn monomial_rows(field: &FieldCtx, basis: &[Monomial], pts: &PointSet) -> Vec<Vec<u32>> {
    let idx: Vec<Vec<u32>> = pts.points().iter().map(|p| p.indices()).collect();
    basis
        .iter()
        .map(|m| idx.iter().map(|x| m.eval_idx(field, x)).collect())
        .collect()
}

pub(crate) fn combine(
    field: &FieldCtx,
    ws: &WeightSystem,
    d: u64,
    basis: &[Monomial],
    coeffs: &[u32],
) -> WeightedPolynomial {
    let poly = Polynomial::from_terms(
        field,
        ws.len(),
        basis
            .iter()
            .zip(coeffs)
            .map(|(m, &c)| (m.clone(), field.elem(c))),
    );
    WeightedPolynomial::new(ws, d, poly).expect("basis monomials have degree d")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EqValue {
    /// `S_d = 0`.
    Undefined,
    Value {
        zeros: usize,
        witness: WeightedPolynomial,
        candidates: u128,
    },
}

impl EqValue {
    pub fn zeros(&self) -> Option<usize> {
        match self {
            EqValue::Undefined => None,
            EqValue::Value { zeros, .. } => Some(*zeros),
        }
    }
}

/// `e_q(d; a)` by exhaustive search over `S_d ∖ {0}` up to scaling.
pub fn eq_oracle_on(pts: &PointSet, d: u64, budget: u128) -> Result<EqValue> {
    let ws = pts.weights();
    let field = pts.field();
    let basis = monomial_basis(ws, d);
    if basis.is_empty() {
        return Ok(EqValue::Undefined);
    }
    let rows = monomial_rows(field, &basis, pts);
    let SearchOutcome {
        candidates,
        max_zeros,
        argmax,
        ..
    } = search::max_zeros(field, &rows, budget)?;
    Ok(EqValue::Value {
        zeros: max_zeros,
        witness: combine(field, ws, d, &basis, &argmax),
        candidates,
    })
}

/// [`eq_oracle_on`] after enumerating the points.
pub fn eq_oracle(
    ws: &WeightSystem,
    d: u64,
    field: &std::sync::Arc<FieldCtx>,
    budget: u128,
) -> Result<EqValue> {
    let basis_len = monomial_basis(ws, d).len();
    if basis_len == 0 {
        return Ok(EqValue::Undefined);
    }
    let needed = search::candidate_count(field.order(), basis_len);
    if needed > budget {
        return Err(Error::Budget {
            what: "coefficient vectors",
            needed,
            cap: budget,
        });
    }
    let pts = enumerate_points(ws, field, ENUMERATION_BUDGET)?;
    eq_oracle_on(&pts, d, budget)
}

/// `min{p_m, (d/a) q^{m-1} + p_{m-2}}` with `a` the smallest pairwise lcm.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum LowerBound {
    Inapplicable(String),
    Value {
        value: u128,
        pair: (usize, usize),
        a: u64,
    },
}

impl LowerBound {
    pub fn value(&self) -> Option<u128> {
        match self {
            LowerBound::Inapplicable(_) => None,
            LowerBound::Value { value, .. } => Some(*value),
        }
    }
}

pub fn serre_lower_bound(ws: &WeightSystem, d: u64, q: u64) -> LowerBound {
    let Some((r, s, a)) = ws.min_pair_lcm() else {
        return LowerBound::Inapplicable("needs at least two weights".into());
    };
    if d == 0 {
        return LowerBound::Inapplicable("degree 0 has only constant polynomials".into());
    }
    if !d.is_multiple_of(a) {
        return LowerBound::Inapplicable(format!("a = {a} does not divide d = {d}"));
    }
    let m = ws.dim() as i64;
    let pm = arith::projective_count(q, m);
    let v = (d / a) as u128 * (q as u128).pow(m as u32 - 1) + arith::projective_count(q, m - 2);
    LowerBound::Value {
        value: pm.min(v),
        pair: (r, s),
        a,
    }
}

/// `∏ (α_i X_r^{a/a_r} - β_i X_s^{a/a_s})` over `d/a` distinct points of
/// `P^1(F_q)`; when `d/a > q + 1` all `q + 1` factors are used and the rest
/// of the degree is made up by a power of `X_r`.
pub fn lower_bound_witness(
    ws: &WeightSystem,
    d: u64,
    field: &FieldCtx,
) -> Result<WeightedPolynomial> {
    let (r, s, a) = ws
        .min_pair_lcm()
        .ok_or_else(|| Error::Precondition("needs at least two weights".into()))?;
    if d == 0 || !d.is_multiple_of(a) {
        return Err(Error::Precondition(format!(
            "degree {d} is not a positive multiple of {a}"
        )));
    }
    let n = ws.len();
    let u = (a / ws.weight(r) as u64) as u32;
    let v = (a / ws.weight(s) as u64) as u32;
    let k = d / a;
    let q = field.order() as u64;
    let xr = Monomial::power(n, r, u);
    let xs = Monomial::power(n, s, v);
    let mut lines: Vec<(u32, u32)> = vec![(0, 1), (1, 0)];
    lines.extend((1..field.order()).map(|b| (1, b)));
    let used = k.min(q + 1) as usize;
    let mut acc = Polynomial::constant(n, field.one());
    for &(alpha, beta) in &lines[..used] {
        let factor = Polynomial::from_terms(
            field,
            n,
            [
                (xr.clone(), field.elem(alpha)),
                (xs.clone(), field.neg(field.elem(beta))),
            ],
        );
        acc = acc.mul(field, &factor);
    }
    if k > q + 1 {
        let extra = Monomial::power(n, r, u * (k - q - 1) as u32);
        acc = acc.mul(field, &Polynomial::term(extra, field.one()));
    }
    WeightedPolynomial::new(ws, d, acc)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    /// `|V(F)| ≤ d q^{m-1} + p_{m-2}` for classical weights.
    Serre,
    /// `|V(F)| ≤ (d/a_1) q + 1` on `P(1, a_1, a_2)`.
    WeightedPlane,
    /// Affine zeros `≤ (d/a_1) q` on `P(1, a_1, a_2)`.
    WeightedOre,
    /// `|V(F)| ≤ d/a_1` on `P(1, a_1)`.
    WeightedDAlembert,
}

impl BoundKind {
    pub fn name(self) -> &'static str {
        match self {
            BoundKind::Serre => "serre",
            BoundKind::WeightedPlane => "weighted_plane",
            BoundKind::WeightedOre => "weighted_ore",
            BoundKind::WeightedDAlembert => "weighted_dalembert",
        }
    }

    /// Whether the bound counts affine zeros rather than projective ones.
    pub fn is_affine(self) -> bool {
        self == BoundKind::WeightedOre
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub bound_name: BoundKind,
    pub value: u128,
    pub bound: u128,
    pub satisfied: bool,
    /// Whether some polynomial of the same degree reaches the bound;
    /// `None` when the oracle was not run.
    pub sharp: Option<bool>,
}

/// Checks every bound whose hypotheses hold for `F`. The sharpness flag is
/// filled in only when `oracle_budget` is given and large enough.
pub fn check_bounds(
    f: &WeightedPolynomial,
    pts: &PointSet,
    oracle_budget: Option<u128>,
) -> Result<Vec<BoundReport>> {
    check_space(f, pts)?;
    let ws = pts.weights();
    let q = pts.field().order() as u64;
    let d = f.degree();
    let m = ws.dim() as i64;
    let zeros = count_zeros(f, pts)? as u128;

    let mut oracle_cache: Option<Option<u128>> = None;
    let mut oracle = || -> Option<u128> {
        *oracle_cache.get_or_insert_with(|| {
            let budget = oracle_budget?;
            let k = monomial_basis(ws, d).len();
            if search::candidate_count(q as u32, k) > budget {
                return None;
            }
            eq_oracle_on(pts, d, budget)
                .ok()?
                .zeros()
                .map(|z| z as u128)
        })
    };

    let mut out = Vec::new();
    if ws.is_classical() && m >= 1 {
        let bound = d as u128 * (q as u128).pow(m as u32 - 1) + arith::projective_count(q, m - 2);
        out.push(BoundReport {
            bound_name: BoundKind::Serre,
            value: zeros,
            bound,
            satisfied: zeros <= bound,
            sharp: oracle().map(|e| e == bound),
        });
    }
    if m == 2 && ws.weight(0) == 1 {
        let a1 = ws.weight(1).min(ws.weight(2)) as u64;
        let l = arith::lcm(ws.weight(1) as u64, ws.weight(2) as u64);
        if d.is_multiple_of(l) {
            let affine = affine_zeros(f, pts)? as u128;
            let bound = (d / a1) as u128 * q as u128;
            out.push(BoundReport {
                bound_name: BoundKind::WeightedOre,
                value: affine,
                bound,
                satisfied: affine <= bound,
                sharp: None,
            });
            if d <= a1 * (q + 1) {
                let bound = bound + 1;
                out.push(BoundReport {
                    bound_name: BoundKind::WeightedPlane,
                    value: zeros,
                    bound,
                    satisfied: zeros <= bound,
                    sharp: oracle().map(|e| e == bound),
                });
            }
        }
    }
    if m == 1 && ws.weight(0) == 1 {
        let a1 = ws.weight(1) as u64;
        if d.is_multiple_of(a1) {
            let bound = (d / a1) as u128;
            out.push(BoundReport {
                bound_name: BoundKind::WeightedDAlembert,
                value: zeros,
                bound,
                satisfied: zeros <= bound,
                sharp: oracle().map(|e| e == bound),
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldCtx;
    use std::sync::Arc;

    fn ws(w: &[u32]) -> WeightSystem {
        WeightSystem::new(w.to_vec()).unwrap()
    }

    fn space(w: &[u32], q: u64) -> PointSet {
        let f = Arc::new(FieldCtx::with_order(q).unwrap());
        enumerate_points(&ws(w), &f, ENUMERATION_BUDGET).unwrap()
    }

    fn parse(pts: &PointSet, text: &str) -> WeightedPolynomial {
        WeightedPolynomial::parse(pts.weights(), pts.field(), text).unwrap()
    }

    #[test]
    fn hyperplane_and_line_at_infinity() {
        let p = space(&[1, 1, 1], 2);
        assert_eq!(count_zeros(&parse(&p, "X0 + X1 + X2"), &p).unwrap(), 3);
        for q in [3, 4, 5] {
            let p = space(&[1, 2, 3], q);
            assert_eq!(count_zeros(&parse(&p, "X0"), &p).unwrap(), q as usize + 1);
        }
        let zero = WeightedPolynomial::new(&ws(&[1, 1, 1]), 2, Polynomial::zero(3)).unwrap();
        let p = space(&[1, 1, 1], 2);
        assert!(matches!(count_zeros(&zero, &p), Err(Error::ZeroPolynomial)));
    }

    #[test]
    fn space_filling_polynomial() {
        for (m, q) in [(1, 3), (2, 3), (2, 4), (3, 2)] {
            let p = space(&vec![1; m + 1], q);
            for d in [q + 1, q + 3] {
                let text = format!("X0^{}*X1 - X0^{}*X1^{}", d - 1, d - q, q);
                let f = parse(&p, &text);
                assert_eq!(count_zeros(&f, &p).unwrap(), p.len());
            }
        }
    }

    #[test]
    fn eq_values_from_examples() {
        for q in [2, 3, 4, 5] {
            let f = Arc::new(FieldCtx::with_order(q).unwrap());
            let w = ws(&[3, 4]);
            assert_eq!(eq_oracle(&w, 7, &f, 1 << 20).unwrap().zeros(), Some(2));
            assert_eq!(eq_oracle(&w, 8, &f, 1 << 20).unwrap().zeros(), Some(1));
            assert_eq!(eq_oracle(&w, 5, &f, 1 << 20).unwrap(), EqValue::Undefined);
        }
        let f2 = Arc::new(FieldCtx::with_order(2).unwrap());
        assert_eq!(
            eq_oracle(&ws(&[1, 1]), 2, &f2, 100).unwrap().zeros(),
            Some(2)
        );
        match eq_oracle(&ws(&[1, 1, 2]), 2, &f2, 100).unwrap() {
            EqValue::Value {
                zeros,
                witness,
                candidates,
            } => {
                assert_eq!(zeros, 5);
                assert_eq!(candidates, 15);
                let p = space(&[1, 1, 2], 2);
                assert_eq!(count_zeros(&witness, &p).unwrap(), 5);
            }
            EqValue::Undefined => panic!("S_2 is nonzero"),
        }
        assert!(matches!(
            eq_oracle(&ws(&[1, 1, 1]), 4, &f2, 100),
            Err(Error::Budget { .. })
        ));
    }

    #[test]
    fn lower_bound_values_and_witness() {
        assert_eq!(serre_lower_bound(&ws(&[1, 1, 2]), 2, 2).value(), Some(5));
        assert!(matches!(
            serre_lower_bound(&ws(&[3, 4]), 7, 5),
            LowerBound::Inapplicable(_)
        ));
        assert!(matches!(
            serre_lower_bound(&ws(&[1]), 1, 5),
            LowerBound::Inapplicable(_)
        ));
        // P(2,3,5), d = 30, q = 4: the witness fills the space
        let p = space(&[2, 3, 5], 4);
        let w = lower_bound_witness(p.weights(), 30, p.field()).unwrap();
        assert_eq!(count_zeros(&w, &p).unwrap(), 21);
        assert_eq!(serre_lower_bound(p.weights(), 30, 4).value(), Some(21));
        for (wts, q, d) in [
            (&[1, 1, 1][..], 5, 3),
            (&[1, 2, 3][..], 5, 6),
            (&[1, 2, 3][..], 3, 12),
            (&[1, 1, 1, 1][..], 3, 2),
            (&[2, 3, 5][..], 7, 12),
        ] {
            let p = space(wts, q);
            let w = lower_bound_witness(p.weights(), d, p.field()).unwrap();
            let lb = serre_lower_bound(p.weights(), d, q).value().unwrap();
            assert_eq!(
                count_zeros(&w, &p).unwrap() as u128,
                lb,
                "{wts:?} q={q} d={d}"
            );
        }
    }

    #[test]
    fn serre_bound_met_by_line_products() {
        let p = space(&[1, 1, 1], 5);
        for d in 1..=6 {
            let w = lower_bound_witness(p.weights(), d, p.field()).unwrap();
            let reports = check_bounds(&w, &p, None).unwrap();
            let serre = reports
                .iter()
                .find(|r| r.bound_name == BoundKind::Serre)
                .unwrap();
            assert!(serre.satisfied);
            assert_eq!(serre.value, serre.bound);
            assert_eq!(serre.sharp, None);
        }
    }

    #[test]
    fn vertical_lines_meet_plane_bound() {
        // t = d/a_1 factors X_1 - c X_0^{a_1}
        let q = 5;
        let p = space(&[1, 2, 3], q);
        let d = 6u64;
        let t = d / 2;
        let mut acc = Polynomial::constant(3, p.field().one());
        for c in 0..t as u32 {
            let line = Polynomial::parse(p.field(), 3, &format!("X1 - {c}*X0^2")).unwrap();
            acc = acc.mul(p.field(), &line);
        }
        let f = WeightedPolynomial::new(p.weights(), d, acc).unwrap();
        assert_eq!(count_zeros(&f, &p).unwrap() as u64, t * q + 1);
        let reports = check_bounds(&f, &p, Some(1 << 20)).unwrap();
        let plane = reports
            .iter()
            .find(|r| r.bound_name == BoundKind::WeightedPlane)
            .unwrap();
        assert!(plane.satisfied);
        assert_eq!(plane.sharp, Some(true));
        let ore = reports
            .iter()
            .find(|r| r.bound_name == BoundKind::WeightedOre)
            .unwrap();
        assert_eq!(ore.value as u64, t * q);
    }

    #[test]
    fn binary_forms() {
        let p = space(&[1, 3], 7);
        let f = parse(&p, "X1^2 - X0^6");
        let r = check_bounds(&f, &p, Some(1000)).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].bound_name, BoundKind::WeightedDAlembert);
        assert_eq!(r[0].value, 2);
        assert_eq!(r[0].bound, 2);
        assert_eq!(r[0].sharp, Some(true));
    }
}
