//! The weighted projective space `P(a_0, ..., a_m)` over `F_q`: weight
//! systems, canonical point representatives, enumeration and the set-level
//! singular locus.
//!
//! Two nonzero tuples of `F_q^{m+1}` represent the same rational point when
//! they differ by the action of some `λ` in the algebraic closure. On a tuple
//! whose nonzero coordinates are indexed by `S`, with `g = gcd(a_i : i ∈ S)`,
//! the rational representatives are exactly `(μ^{a_i/g} x_i)` for `μ ∈ F_q^*`.
//! The reduced action is free, so every point has `q - 1` representatives and
//! the space has `(q^{m+1} - 1)/(q - 1)` rational points in every
//! characteristic.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::arith;
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement};

/// Default cap on the number of tuples swept by [`enumerate_points`].
pub const ENUMERATION_BUDGET: u128 = 100_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct WeightSystem {
    weights: Vec<u32>,
}

impl WeightSystem {
    pub fn new(weights: impl Into<Vec<u32>>) -> Result<Self> {
        let weights = weights.into();
        if weights.is_empty() {
            return Err(Error::InvalidWeights("no weights given".into()));
        }
        if weights.contains(&0) {
            return Err(Error::InvalidWeights(format!(
                "weights must be positive: {weights:?}"
            )));
        }
        let g = arith::gcd_all(weights.iter().map(|&a| a as u64));
        if g != 1 {
            return Err(Error::InvalidWeights(format!(
                "weights {weights:?} have common divisor {g}"
            )));
        }
        Ok(Self { weights })
    }

    /// `(1, ..., 1)` of dimension `m`.
    pub fn classical(m: usize) -> Self {
        Self {
            weights: vec![1; m + 1],
        }
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn weight(&self, i: usize) -> u32 {
        self.weights[i]
    }

    /// Number of coordinates, `m + 1`.
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Dimension `m`.
    pub fn dim(&self) -> usize {
        self.weights.len() - 1
    }

    pub fn lcm(&self) -> u64 {
        arith::lcm_all(self.weights.iter().map(|&a| a as u64))
    }

    pub fn sum(&self) -> u64 {
        self.weights.iter().map(|&a| a as u64).sum()
    }

    pub fn is_classical(&self) -> bool {
        self.weights.iter().all(|&a| a == 1)
    }

    /// Every `m`-element sub-collection of the weights has gcd 1.
    pub fn is_well_formed(&self) -> bool {
        if self.weights.len() == 1 {
            return true;
        }
        (0..self.weights.len()).all(|skip| {
            let g = arith::gcd_all(
                self.weights
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &a)| a as u64),
            );
            g == 1
        })
    }

    /// True when the characteristic `p` divides some weight.
    pub fn characteristic_divides(&self, p: u32) -> bool {
        self.weights.iter().any(|&a| a % p == 0)
    }

    /// The pair `r < s` minimising `lcm(a_r, a_s)` (first in index order on
    /// ties), with that lcm. `None` for `m = 0`.
    pub fn min_pair_lcm(&self) -> Option<(usize, usize, u64)> {
        let n = self.weights.len();
        let mut best: Option<(usize, usize, u64)> = None;
        for r in 0..n {
            for s in r + 1..n {
                let l = arith::lcm(self.weights[r] as u64, self.weights[s] as u64);
                if best.is_none_or(|(_, _, b)| l < b) {
                    best = Some((r, s, l));
                }
            }
        }
        best
    }
}

impl fmt::Display for WeightSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.weights.iter().map(|a| a.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for WeightSystem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let weights = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("invalid weight {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(weights)
    }
}

/// A rational point in canonical form: the lexicographically smallest of its
/// `q - 1` rational representatives under the index order of field elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightedPoint {
    coords: Vec<FieldElement>,
    chart: usize,
}

impl WeightedPoint {
    pub fn coords(&self) -> &[FieldElement] {
        &self.coords
    }

    /// Index `i` of the stratum `W_i`: first nonzero coordinate.
    pub fn chart(&self) -> usize {
        self.chart
    }

    pub fn indices(&self) -> Vec<u32> {
        self.coords.iter().map(|c| c.index()).collect()
    }
}

impl fmt::Display for WeightedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(":"))
    }
}

fn check_arity(ws: &WeightSystem, raw: &[FieldElement]) -> Result<()> {
    if raw.len() != ws.len() {
        return Err(Error::Arity {
            expected: ws.len(),
            got: raw.len(),
        });
    }
    Ok(())
}

/// Exponents `a_i / gcd(a_j : j ∈ support)` on the support, 0 elsewhere.
fn reduced_exponents(ws: &WeightSystem, raw: &[u32]) -> Vec<u64> {
    let g = arith::gcd_all(
        raw.iter()
            .zip(ws.weights())
            .filter(|(&x, _)| x != 0)
            .map(|(_, &a)| a as u64),
    );
    raw.iter()
        .zip(ws.weights())
        .map(|(&x, &a)| if x == 0 { 0 } else { a as u64 / g })
        .collect()
}

/// Canonical representative of a nonzero index tuple.
fn canonical_indices(ws: &WeightSystem, field: &FieldCtx, raw: &[u32]) -> Vec<u32> {
    let order = field.order() as u64 - 1;
    let exps = reduced_exponents(ws, raw);
    let logs: Vec<Option<u32>> = raw.iter().map(|&x| field.log_idx(x)).collect();
    let mut best = raw.to_vec();
    let mut cand = vec![0u32; raw.len()];
    for t in 1..order {
        for (i, slot) in cand.iter_mut().enumerate() {
            *slot = match logs[i] {
                None => 0,
                Some(l) => field.exp_idx(l as u64 + t * exps[i]),
            };
        }
        if cand < best {
            best.copy_from_slice(&cand);
        }
    }
    best
}

fn make_point(field: &FieldCtx, idx: &[u32]) -> WeightedPoint {
    let chart = idx.iter().position(|&x| x != 0).expect("nonzero tuple");
    WeightedPoint {
        coords: idx.iter().map(|&x| field.elem(x)).collect(),
        chart,
    }
}

/// Canonical representative of the point with coordinates `raw`.
pub fn canonicalize(
    ws: &WeightSystem,
    field: &FieldCtx,
    raw: &[FieldElement],
) -> Result<WeightedPoint> {
    check_arity(ws, raw)?;
    if raw.iter().all(|x| x.is_zero()) {
        return Err(Error::ZeroTuple);
    }
    let idx: Vec<u32> = raw.iter().map(|x| x.index()).collect();
    Ok(make_point(field, &canonical_indices(ws, field, &idx)))
}

/// All rational representatives of the point through `raw`, sorted.
pub fn orbit(
    ws: &WeightSystem,
    field: &FieldCtx,
    raw: &[FieldElement],
) -> Result<Vec<Vec<FieldElement>>> {
    check_arity(ws, raw)?;
    if raw.iter().all(|x| x.is_zero()) {
        return Err(Error::ZeroTuple);
    }
    let idx: Vec<u32> = raw.iter().map(|x| x.index()).collect();
    let exps = reduced_exponents(ws, &idx);
    let mut out: Vec<Vec<FieldElement>> = field
        .nonzero_elements()
        .map(|mu| {
            raw.iter()
                .zip(&exps)
                .map(|(&x, &b)| field.mul(field.pow(mu, b), x))
                .collect()
        })
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Number of rational representatives of the point through `raw`; always
/// `q - 1`.
pub fn orbit_size(ws: &WeightSystem, field: &FieldCtx, raw: &[FieldElement]) -> Result<usize> {
    orbit(ws, field, raw).map(|o| o.len())
}

/// Size of the literal orbit `{(λ^{a_0} x_0, ..., λ^{a_m} x_m) : λ ∈ F_q^*}`.
/// This is `(q - 1)/gcd(q - 1, g)` where `g` is the gcd of the weights on the
/// support, so it can be smaller than the number of representatives.
pub fn scaling_orbit_size(
    ws: &WeightSystem,
    field: &FieldCtx,
    raw: &[FieldElement],
) -> Result<usize> {
    check_arity(ws, raw)?;
    if raw.iter().all(|x| x.is_zero()) {
        return Err(Error::ZeroTuple);
    }
    let mut out: Vec<Vec<FieldElement>> = field
        .nonzero_elements()
        .map(|l| {
            raw.iter()
                .zip(ws.weights())
                .map(|(&x, &a)| field.mul(field.pow(l, a as u64), x))
                .collect()
        })
        .collect();
    out.sort();
    out.dedup();
    Ok(out.len())
}

/// The rational points of `P(ws)(F_q)` in lexicographic canonical order.
#[derive(Clone, Debug)]
pub struct PointSet {
    ws: WeightSystem,
    field: Arc<FieldCtx>,
    points: Vec<WeightedPoint>,
    char_divides_weight: bool,
}

impl PointSet {
    pub fn weights(&self) -> &WeightSystem {
        &self.ws
    }

    pub fn field(&self) -> &Arc<FieldCtx> {
        &self.field
    }

    pub fn points(&self) -> &[WeightedPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Set when the characteristic divides one of the weights.
    pub fn char_divides_weight(&self) -> bool {
        self.char_divides_weight
    }

    /// Position of a canonical point in enumeration order.
    pub fn position(&self, pt: &WeightedPoint) -> Option<usize> {
        self.points.binary_search(pt).ok()
    }

    /// Number of points in each stratum `W_0, ..., W_m`.
    pub fn stratum_sizes(&self) -> Vec<usize> {
        let mut out = vec![0; self.ws.len()];
        for p in &self.points {
            out[p.chart] += 1;
        }
        out
    }
}

/// Enumerates `P(ws)(F_q)` by sweeping all `q^{m+1}` tuples and keeping the
/// canonical ones. The sweep is split across leading coordinates and merged
/// in order, so the result does not depend on the thread count.
pub fn enumerate_points(
    ws: &WeightSystem,
    field: &Arc<FieldCtx>,
    budget: u128,
) -> Result<PointSet> {
    let q = field.order() as u128;
    let n = ws.len() as u32;
    let tuples = q.checked_pow(n).unwrap_or(u128::MAX);
    if tuples > budget {
        return Err(Error::Budget {
            what: "point enumeration tuples",
            needed: tuples,
            cap: budget,
        });
    }
    let qq = field.order();
    let slices: Vec<Vec<WeightedPoint>> = (0..qq)
        .into_par_iter()
        .map(|lead| {
            let mut out = Vec::new();
            let mut idx = vec![0u32; n as usize];
            idx[0] = lead;
            loop {
                if idx.iter().any(|&x| x != 0) && canonical_indices(ws, field, &idx) == idx {
                    out.push(make_point(field, &idx));
                }
                // odometer over coordinates 1..n, last coordinate fastest
                let mut pos = n as usize;
                loop {
                    if pos == 1 {
                        return out;
                    }
                    pos -= 1;
                    idx[pos] += 1;
                    if idx[pos] < qq {
                        break;
                    }
                    idx[pos] = 0;
                }
            }
        })
        .collect();
    let points: Vec<WeightedPoint> = slices.into_iter().flatten().collect();
    Ok(PointSet {
        ws: ws.clone(),
        char_divides_weight: ws.characteristic_divides(field.characteristic()),
        field: Arc::clone(field),
        points,
    })
}

/// One irreducible component `S(p)` of the singular locus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingularComponent {
    pub prime: u64,
    /// `I(p)`: coordinates whose weight is divisible by `p`.
    pub indices: Vec<usize>,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingularLocusReport {
    pub sigma: Vec<u64>,
    pub components: Vec<SingularComponent>,
}

impl SingularLocusReport {
    pub fn is_smooth(&self) -> bool {
        self.sigma.is_empty()
    }
}

impl SingularComponent {
    /// Rational points of `S(p) = {x : x_i = 0 for i ∉ I(p)}`.
    pub fn points<'a>(&'a self, space: &'a PointSet) -> impl Iterator<Item = &'a WeightedPoint> {
        space.points().iter().filter(move |pt| {
            pt.coords()
                .iter()
                .enumerate()
                .all(|(i, c)| c.is_zero() || self.indices.contains(&i))
        })
    }
}

/// The sets `I(p)` and `S(p)` for every prime dividing a weight, without
/// checking well-formedness.
pub fn stratum_report(ws: &WeightSystem) -> SingularLocusReport {
    let mut primes: Vec<u64> = ws
        .weights()
        .iter()
        .flat_map(|&a| arith::prime_factors(a as u64))
        .collect();
    primes.sort_unstable();
    primes.dedup();
    let components: Vec<SingularComponent> = primes
        .iter()
        .map(|&p| {
            let indices: Vec<usize> = ws
                .weights()
                .iter()
                .enumerate()
                .filter(|&(_, &a)| (a as u64).is_multiple_of(p))
                .map(|(i, _)| i)
                .collect();
            SingularComponent {
                prime: p,
                dim: indices.len() - 1,
                indices,
            }
        })
        .collect();
    SingularLocusReport {
        sigma: primes,
        components,
    }
}

/// Singular locus `⋃_{p∈Σ} S(p)` of a well-formed weighted projective space.
pub fn singular_locus(ws: &WeightSystem) -> Result<SingularLocusReport> {
    if !ws.is_well_formed() {
        return Err(Error::Precondition(format!(
            "weights ({ws}) are not well formed"
        )));
    }
    Ok(stratum_report(ws))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;

    fn ws(w: &[u32]) -> WeightSystem {
        WeightSystem::new(w.to_vec()).unwrap()
    }

    fn els(f: &FieldCtx, idx: &[u32]) -> Vec<FieldElement> {
        idx.iter().map(|&i| f.elem(i)).collect()
    }

    #[test]
    fn weight_system_validation() {
        assert!(WeightSystem::new(vec![]).is_err());
        assert!(WeightSystem::new(vec![0, 1]).is_err());
        assert!(WeightSystem::new(vec![2, 4]).is_err());
        let w: WeightSystem = "1,2,3".parse().unwrap();
        assert_eq!(w.weights(), &[1, 2, 3]);
        assert_eq!(w.to_string(), "1,2,3");
        assert!("1,x".parse::<WeightSystem>().is_err());
        assert_eq!(w.lcm(), 6);
        assert_eq!(w.sum(), 6);
        assert_eq!(ws(&[2, 3, 5]).min_pair_lcm(), Some((0, 1, 6)));
        assert_eq!(ws(&[1]).min_pair_lcm(), None);
    }

    #[test]
    fn well_formedness() {
        // dropping a_0 = 1 leaves gcd(2, 2) = 2
        assert!(!ws(&[1, 2, 2]).is_well_formed());
        assert!(!ws(&[2, 2, 3]).is_well_formed());
        assert!(ws(&[2, 3, 5]).is_well_formed());
        assert!(ws(&[1, 1, 2]).is_well_formed());
        assert!(!ws(&[3, 4]).is_well_formed());
        assert!(ws(&[1, 1]).is_well_formed());
        assert!(ws(&[1]).is_well_formed());
    }

    #[test]
    fn point_counts_small() {
        let f4 = Arc::new(make_field(2, 2).unwrap());
        assert_eq!(
            enumerate_points(&ws(&[2, 3, 5]), &f4, ENUMERATION_BUDGET)
                .unwrap()
                .len(),
            21
        );
        let f7 = Arc::new(make_field(7, 1).unwrap());
        assert_eq!(
            enumerate_points(&ws(&[1]), &f7, ENUMERATION_BUDGET)
                .unwrap()
                .len(),
            1
        );
        let f2 = Arc::new(make_field(2, 1).unwrap());
        let line = enumerate_points(&ws(&[1, 1]), &f2, ENUMERATION_BUDGET).unwrap();
        let got: Vec<Vec<u32>> = line.points().iter().map(|p| p.indices()).collect();
        assert_eq!(got, vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn budget_is_enforced() {
        let f = Arc::new(make_field(5, 1).unwrap());
        let err = enumerate_points(&ws(&[1, 1, 1]), &f, 100).unwrap_err();
        assert!(matches!(err, Error::Budget { needed: 125, .. }));
    }

    #[test]
    fn canonicalize_examples() {
        let f3 = make_field(3, 1).unwrap();
        let p = canonicalize(&ws(&[2, 3]), &f3, &els(&f3, &[2, 2])).unwrap();
        assert_eq!(p.indices(), vec![2, 1]);
        let f5 = make_field(5, 1).unwrap();
        let p = canonicalize(&ws(&[1, 1]), &f5, &els(&f5, &[2, 4])).unwrap();
        assert_eq!(p.indices(), vec![1, 2]);
        assert_eq!(
            canonicalize(&ws(&[1, 1]), &f5, &els(&f5, &p.indices())).unwrap(),
            p
        );
        assert_eq!(
            canonicalize(&ws(&[1, 1]), &f5, &els(&f5, &[0, 0])).unwrap_err(),
            Error::ZeroTuple
        );
        assert!(matches!(
            canonicalize(&ws(&[1, 1]), &f5, &els(&f5, &[1])),
            Err(Error::Arity { .. })
        ));
    }

    #[test]
    fn orbit_sizes() {
        let f4 = make_field(2, 2).unwrap();
        assert_eq!(
            orbit_size(&ws(&[2, 3, 5]), &f4, &els(&f4, &[1, 1, 1])).unwrap(),
            3
        );
        let f3 = make_field(3, 1).unwrap();
        assert_eq!(
            orbit_size(&ws(&[2, 3]), &f3, &els(&f3, &[2, 2])).unwrap(),
            2
        );
        // hand-enumerated orbit {(2,2), (2,1)}
        assert_eq!(
            orbit(&ws(&[2, 3]), &f3, &els(&f3, &[2, 2])).unwrap(),
            vec![els(&f3, &[2, 1]), els(&f3, &[2, 2])]
        );
        for q in [2, 3, 4, 5, 7] {
            let f = FieldCtx::with_order(q).unwrap();
            let w = WeightSystem::classical(2);
            assert_eq!(
                orbit_size(&w, &f, &els(&f, &[0, 1, 1])).unwrap(),
                q as usize - 1
            );
        }
        // (0:1) in P(1,2) over F_3: λ^2 = 1 on F_3^*, yet (0,2) is the same point
        let w = ws(&[1, 2]);
        assert_eq!(scaling_orbit_size(&w, &f3, &els(&f3, &[0, 1])).unwrap(), 1);
        assert_eq!(orbit_size(&w, &f3, &els(&f3, &[0, 1])).unwrap(), 2);
    }

    #[test]
    fn strata_partition() {
        let f = Arc::new(make_field(5, 1).unwrap());
        let pts = enumerate_points(&ws(&[1, 2, 3]), &f, ENUMERATION_BUDGET).unwrap();
        let sizes = pts.stratum_sizes();
        assert_eq!(sizes, vec![25, 5, 1]);
        assert_eq!(sizes.iter().sum::<usize>(), 31);
    }

    #[test]
    fn singular_locus_examples() {
        let r = singular_locus(&ws(&[1, 2, 3])).unwrap();
        assert_eq!(r.sigma, vec![2, 3]);
        assert_eq!(r.components[0].indices, vec![1]);
        assert_eq!(r.components[0].dim, 0);
        assert_eq!(r.components[1].indices, vec![2]);
        let f = Arc::new(make_field(5, 1).unwrap());
        let pts = enumerate_points(&ws(&[1, 2, 3]), &f, ENUMERATION_BUDGET).unwrap();
        let s2: Vec<Vec<u32>> = r.components[0].points(&pts).map(|p| p.indices()).collect();
        assert_eq!(s2, vec![vec![0, 1, 0]]);

        assert!(singular_locus(&WeightSystem::classical(3))
            .unwrap()
            .is_smooth());

        assert!(singular_locus(&ws(&[1, 2, 2])).is_err());
        let r = stratum_report(&ws(&[1, 2, 2]));
        assert_eq!(r.sigma, vec![2]);
        assert_eq!(r.components[0].indices, vec![1, 2]);
        assert_eq!(r.components[0].dim, 1);
        let pts = enumerate_points(&ws(&[1, 2, 2]), &f, ENUMERATION_BUDGET).unwrap();
        // the line x_0 = 0 is a copy of P(2,2) ≅ P^1 with q + 1 points
        assert_eq!(r.components[0].points(&pts).count(), 6);
    }
}
