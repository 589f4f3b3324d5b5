//! Lines in `P(1, a_1, a_2)`: the line at infinity `X_0 = 0`, vertical lines
//! `α X_0^{a_1} + X_1 = 0` and non-vertical lines
//! `α X_0^{a_2} + β X_1 X_0^{a_2 - a_1} + X_2 = 0`.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::arith;
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement};
use crate::poly::{Monomial, Polynomial, WeightedPolynomial};
use crate::space::{canonicalize, PointSet, WeightSystem, WeightedPoint};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PlaneLine {
    Type0,
    Type1 {
        alpha: FieldElement,
    },
    Type2 {
        alpha: FieldElement,
        beta: FieldElement,
    },
}

impl PlaneLine {
    /// 0, 1 or 2; also the index of the coordinate line it normalizes to.
    pub fn kind(&self) -> usize {
        match self {
            PlaneLine::Type0 => 0,
            PlaneLine::Type1 { .. } => 1,
            PlaneLine::Type2 { .. } => 2,
        }
    }
}

impl fmt::Display for PlaneLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlaneLine::Type0 => write!(f, "type0"),
            PlaneLine::Type1 { alpha } => write!(f, "type1(alpha={alpha})"),
            PlaneLine::Type2 { alpha, beta } => write!(f, "type2(alpha={alpha},beta={beta})"),
        }
    }
}

/// The `1 + q + q^2` lines of `P(1, a_1, a_2)` with `a_1 < a_2` coprime.
#[derive(Clone, Debug)]
pub struct LineSystem {
    ws: WeightSystem,
    field: Arc<FieldCtx>,
}

impl LineSystem {
    pub fn new(ws: &WeightSystem, field: &Arc<FieldCtx>) -> Result<Self> {
        let w = ws.weights();
        if w.len() != 3 || w[0] != 1 {
            return Err(Error::InvalidWeights(format!(
                "lines need weights (1, a1, a2), got ({ws})"
            )));
        }
        if w[1] >= w[2] || arith::gcd(w[1] as u64, w[2] as u64) != 1 {
            return Err(Error::InvalidWeights(format!(
                "lines need a1 < a2 coprime, got ({ws})"
            )));
        }
        Ok(Self {
            ws: ws.clone(),
            field: field.clone(),
        })
    }

    pub fn weights(&self) -> &WeightSystem {
        &self.ws
    }

    pub fn field(&self) -> &Arc<FieldCtx> {
        &self.field
    }

    /// Type 0, then type 1 by `α`, then type 2 by `(α, β)`.
    pub fn catalog(&self) -> Vec<PlaneLine> {
        let f = &self.field;
        let mut out = vec![PlaneLine::Type0];
        out.extend(f.elements().map(|alpha| PlaneLine::Type1 { alpha }));
        for alpha in f.elements() {
            for beta in f.elements() {
                out.push(PlaneLine::Type2 { alpha, beta });
            }
        }
        out
    }

    /// Defining form of the line, of weighted degree 1, `a_1` or `a_2`.
    pub fn polynomial(&self, line: &PlaneLine) -> WeightedPolynomial {
        let f = &self.field;
        let (a1, a2) = (self.ws.weight(1), self.ws.weight(2));
        let (d, terms) = match *line {
            PlaneLine::Type0 => (1, vec![(Monomial::new([1, 0, 0]), f.one())]),
            PlaneLine::Type1 { alpha } => (
                a1,
                vec![
                    (Monomial::new([a1, 0, 0]), alpha),
                    (Monomial::new([0, 1, 0]), f.one()),
                ],
            ),
            PlaneLine::Type2 { alpha, beta } => (
                a2,
                vec![
                    (Monomial::new([a2, 0, 0]), alpha),
                    (Monomial::new([a2 - a1, 1, 0]), beta),
                    (Monomial::new([0, 0, 1]), f.one()),
                ],
            ),
        };
        WeightedPolynomial::new(&self.ws, d as u64, Polynomial::from_terms(f, 3, terms))
            .expect("line forms are homogeneous")
    }

    fn check_space(&self, pts: &PointSet) -> Result<()> {
        if pts.weights() != &self.ws || pts.field().as_ref() != self.field.as_ref() {
            return Err(Error::Precondition(
                "point set does not belong to this plane".into(),
            ));
        }
        Ok(())
    }

    pub fn contains(&self, line: &PlaneLine, pt: &WeightedPoint) -> bool {
        self.polynomial(line)
            .evaluate(&self.field, pt.coords())
            .is_zero()
    }

    pub fn line_points(&self, line: &PlaneLine, pts: &PointSet) -> Result<Vec<WeightedPoint>> {
        self.check_space(pts)?;
        let form = self.polynomial(line);
        Ok(pts
            .points()
            .iter()
            .filter(|p| form.evaluate(&self.field, p.coords()).is_zero())
            .cloned()
            .collect())
    }

    pub fn intersect(
        &self,
        l1: &PlaneLine,
        l2: &PlaneLine,
        pts: &PointSet,
    ) -> Result<Vec<WeightedPoint>> {
        if l1 == l2 {
            return Err(Error::Precondition(format!("identical lines {l1}")));
        }
        let (f1, f2) = (self.polynomial(l1), self.polynomial(l2));
        self.check_space(pts)?;
        Ok(pts
            .points()
            .iter()
            .filter(|p| {
                f1.evaluate(&self.field, p.coords()).is_zero()
                    && f2.evaluate(&self.field, p.coords()).is_zero()
            })
            .cloned()
            .collect())
    }

    /// Substitution taking the line to `X_k = 0`, `k` its type.
    pub fn normalize_line(&self, line: &PlaneLine) -> GradedSubstitution {
        let f = &self.field;
        let (a1, a2) = (self.ws.weight(1), self.ws.weight(2));
        let (var, shift) = match *line {
            PlaneLine::Type0 => (0, Polynomial::zero(3)),
            PlaneLine::Type1 { alpha } => {
                (1, Polynomial::term(Monomial::new([a1, 0, 0]), f.neg(alpha)))
            }
            PlaneLine::Type2 { alpha, beta } => (
                2,
                Polynomial::from_terms(
                    f,
                    3,
                    [
                        (Monomial::new([a2, 0, 0]), f.neg(alpha)),
                        (Monomial::new([a2 - a1, 1, 0]), f.neg(beta)),
                    ],
                ),
            ),
        };
        GradedSubstitution {
            ws: self.ws.clone(),
            var,
            shift,
        }
    }
}

/// `X_var ← X_var + shift`, with `shift` of weighted degree `a_var` and free
/// of `X_var`, so the map is a graded automorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSubstitution {
    ws: WeightSystem,
    var: usize,
    shift: Polynomial,
}

impl GradedSubstitution {
    pub fn var(&self) -> usize {
        self.var
    }

    pub fn shift(&self) -> &Polynomial {
        &self.shift
    }

    pub fn is_identity(&self) -> bool {
        self.shift.is_zero()
    }

    pub fn inverse(&self, field: &FieldCtx) -> GradedSubstitution {
        GradedSubstitution {
            ws: self.ws.clone(),
            var: self.var,
            shift: self.shift.neg(field),
        }
    }

    /// `F ↦ F(…, X_var + shift, …)`; the degree is unchanged.
    pub fn apply(&self, field: &FieldCtx, f: &WeightedPolynomial) -> Result<WeightedPolynomial> {
        if f.weights() != &self.ws {
            return Err(Error::Precondition(format!(
                "polynomial has weights ({}), substitution is over ({})",
                f.weights(),
                self.ws
            )));
        }
        let x = Polynomial::var(field, self.ws.len(), self.var).add(field, &self.shift);
        WeightedPolynomial::new(
            &self.ws,
            f.degree(),
            f.poly().substitute(field, self.var, &x),
        )
    }

    /// The point map `ψ` with `apply(F)(x) = F(ψ(x))`, so `ψ` carries
    /// `V(apply(F))` onto `V(F)`.
    pub fn map_point(&self, field: &FieldCtx, pt: &WeightedPoint) -> WeightedPoint {
        let mut c = pt.coords().to_vec();
        c[self.var] = field.add(c[self.var], self.shift.evaluate(field, pt.coords()));
        canonicalize(&self.ws, field, &c).expect("automorphism keeps tuples nonzero")
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct IncidenceReport {
    pub lines: usize,
    pub lines_with_q_plus_1_points: usize,
    pub pairs: usize,
    pub pairs_meeting: usize,
    pub affine_points: usize,
    /// Affine points on exactly one vertical and exactly `q` non-vertical lines.
    pub affine_points_ok: usize,
    pub failures: Vec<String>,
}

impl IncidenceReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks point counts on every line, pairwise meeting, and the number of
/// lines of each type through every affine point.
pub fn incidence_suite(system: &LineSystem, pts: &PointSet) -> Result<IncidenceReport> {
    system.check_space(pts)?;
    let q = system.field.order() as usize;
    let catalog = system.catalog();
    let forms: Vec<WeightedPolynomial> = catalog.iter().map(|l| system.polynomial(l)).collect();
    // membership bitsets, one row per line
    let words = pts.len().div_ceil(64);
    let rows: Vec<Vec<u64>> = forms
        .iter()
        .map(|f| {
            let mut bits = vec![0u64; words];
            for (i, p) in pts.points().iter().enumerate() {
                if f.evaluate(&system.field, p.coords()).is_zero() {
                    bits[i / 64] |= 1 << (i % 64);
                }
            }
            bits
        })
        .collect();

    let mut rep = IncidenceReport {
        lines: catalog.len(),
        ..Default::default()
    };
    if catalog.len() != 1 + q + q * q {
        rep.failures.push(format!(
            "catalog has {} lines, expected {}",
            catalog.len(),
            1 + q + q * q
        ));
    }
    for (line, bits) in catalog.iter().zip(&rows) {
        let n: u32 = bits.iter().map(|w| w.count_ones()).sum();
        if n as usize == q + 1 {
            rep.lines_with_q_plus_1_points += 1;
        } else {
            rep.failures.push(format!("{line} has {n} points"));
        }
    }
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            rep.pairs += 1;
            if rows[i].iter().zip(&rows[j]).any(|(a, b)| a & b != 0) {
                rep.pairs_meeting += 1;
            } else {
                rep.failures
                    .push(format!("{} and {} are disjoint", catalog[i], catalog[j]));
            }
        }
    }
    for (i, p) in pts.points().iter().enumerate() {
        if p.chart() != 0 {
            continue;
        }
        rep.affine_points += 1;
        let mut by_kind = [0usize; 3];
        for (line, bits) in catalog.iter().zip(&rows) {
            if bits[i / 64] >> (i % 64) & 1 == 1 {
                by_kind[line.kind()] += 1;
            }
        }
        if by_kind == [0, 1, q] {
            rep.affine_points_ok += 1;
        } else {
            rep.failures.push(format!(
                "affine point {p} lies on {by_kind:?} lines by type"
            ));
        }
    }
    Ok(rep)
}
