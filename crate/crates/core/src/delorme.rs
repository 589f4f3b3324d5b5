//! Weight reduction `P(a_0 b, ..., a_i, ..., a_m b) ≅ P(a_0, ..., a_m)` for
//! `gcd(b, a_i) = 1`, with the induced maps on points and polynomials.

use crate::arith;
use crate::error::{Error, Result};
use crate::field::FieldCtx;
use crate::poly::{Monomial, Polynomial, WeightedPolynomial};
use crate::space::{canonicalize, WeightSystem, WeightedPoint};

/// One reduction step removing the factor `b` from every weight but `a_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DelormeStep {
    source: WeightSystem,
    target: WeightSystem,
    index: usize,
    factor: u32,
}

pub fn delorme_reduce(ws: &WeightSystem, index: usize, b: u32) -> Result<DelormeStep> {
    if index >= ws.len() {
        return Err(Error::Precondition(format!(
            "index {index} out of range for weights ({ws})"
        )));
    }
    if b == 0 {
        return Err(Error::Precondition(
            "reduction factor must be positive".into(),
        ));
    }
    let ai = ws.weight(index);
    if arith::gcd(b as u64, ai as u64) != 1 {
        return Err(Error::Precondition(format!(
            "factor {b} is not coprime to a_{index} = {ai}"
        )));
    }
    let mut target = Vec::with_capacity(ws.len());
    for (j, &a) in ws.weights().iter().enumerate() {
        if j == index {
            target.push(a);
        } else if a % b != 0 {
            return Err(Error::Precondition(format!(
                "weight a_{j} = {a} is not divisible by {b}"
            )));
        } else {
            target.push(a / b);
        }
    }
    Ok(DelormeStep {
        source: ws.clone(),
        target: WeightSystem::new(target)?,
        index,
        factor: b,
    })
}

impl DelormeStep {
    pub fn source(&self) -> &WeightSystem {
        &self.source
    }

    pub fn target(&self) -> &WeightSystem {
        &self.target
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn factor(&self) -> u32 {
        self.factor
    }

    /// `(… : x_i : …) ↦ (… : x_i^b : …)`, canonicalized in the target.
    pub fn map_point(&self, field: &FieldCtx, pt: &WeightedPoint) -> Result<WeightedPoint> {
        let mut c = pt.coords().to_vec();
        c[self.index] = field.pow(c[self.index], self.factor as u64);
        canonicalize(&self.target, field, &c)
    }

    /// Replaces `X_i^b` by `X_i` and divides the degree by `b`.
    pub fn map_poly(&self, field: &FieldCtx, f: &WeightedPolynomial) -> Result<WeightedPolynomial> {
        if f.weights() != &self.source {
            return Err(Error::Precondition(format!(
                "polynomial has weights ({}), step expects ({})",
                f.weights(),
                self.source
            )));
        }
        let b = self.factor;
        if !f.degree().is_multiple_of(b as u64) {
            return Err(Error::Precondition(format!(
                "degree {} is not divisible by {b}",
                f.degree()
            )));
        }
        let mut terms = Vec::with_capacity(f.poly().num_terms());
        for (m, &c) in f.poly().terms() {
            let mut e = m.exponents().to_vec();
            // homogeneity forces b | a_i r_i, hence b | r_i
            debug_assert_eq!(e[self.index] % b, 0);
            e[self.index] /= b;
            terms.push((Monomial::new(e), c));
        }
        WeightedPolynomial::new(
            &self.target,
            f.degree() / b as u64,
            Polynomial::from_terms(field, self.target.len(), terms),
        )
    }

    /// Inverse polynomial transform: `X_i ↦ X_i^b`, degree times `b`.
    pub fn lift_poly(
        &self,
        field: &FieldCtx,
        f: &WeightedPolynomial,
    ) -> Result<WeightedPolynomial> {
        if f.weights() != &self.target {
            return Err(Error::Precondition(format!(
                "polynomial has weights ({}), step expects ({})",
                f.weights(),
                self.target
            )));
        }
        let terms = f.poly().terms().map(|(m, &c)| {
            let mut e = m.exponents().to_vec();
            e[self.index] *= self.factor;
            (Monomial::new(e), c)
        });
        WeightedPolynomial::new(
            &self.source,
            f.degree() * self.factor as u64,
            Polynomial::from_terms(field, self.source.len(), terms),
        )
    }
}

/// A chain of steps ending in a well-formed weight system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DelormeReduction {
    source: WeightSystem,
    steps: Vec<DelormeStep>,
}

impl DelormeReduction {
    pub fn steps(&self) -> &[DelormeStep] {
        &self.steps
    }

    pub fn source(&self) -> &WeightSystem {
        &self.source
    }

    pub fn target(&self) -> &WeightSystem {
        self.steps.last().map_or(&self.source, |s| s.target())
    }

    /// Product of the step factors; degrees are divided by it.
    pub fn degree_divisor(&self) -> u64 {
        self.steps.iter().map(|s| s.factor as u64).product()
    }

    pub fn map_point(&self, field: &FieldCtx, pt: &WeightedPoint) -> Result<WeightedPoint> {
        self.steps
            .iter()
            .try_fold(pt.clone(), |p, s| s.map_point(field, &p))
    }

    pub fn map_poly(&self, field: &FieldCtx, f: &WeightedPolynomial) -> Result<WeightedPolynomial> {
        self.steps
            .iter()
            .try_fold(f.clone(), |g, s| s.map_poly(field, &g))
    }
}

/// Applies single steps until the weights are well formed.
pub fn delorme_normalize(ws: &WeightSystem) -> DelormeReduction {
    let mut steps = Vec::new();
    let mut cur = ws.clone();
    while !cur.is_well_formed() {
        let n = cur.len();
        let (i, g) = (0..n)
            .map(|skip| {
                let g = arith::gcd_all((0..n).filter(|&j| j != skip).map(|j| cur.weight(j) as u64));
                (skip, g)
            })
            .find(|&(_, g)| g > 1)
            .expect("a non-well-formed system has a reducible index");
        let step = delorme_reduce(&cur, i, g as u32)
            .expect("gcd of the other weights is coprime to the remaining one");
        cur = step.target().clone();
        steps.push(step);
    }
    DelormeReduction {
        source: ws.clone(),
        steps,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;
    use crate::space::{enumerate_points, ENUMERATION_BUDGET};
    use std::collections::BTreeSet;
    use std::sync::Arc;

    fn ws(w: &[u32]) -> WeightSystem {
        WeightSystem::new(w.to_vec()).unwrap()
    }

    #[test]
    fn identity_for_b_one() {
        let f = make_field(5, 1).unwrap();
        let w = ws(&[1, 2, 3]);
        let step = delorme_reduce(&w, 1, 1).unwrap();
        assert_eq!(step.target(), &w);
        let poly = WeightedPolynomial::parse(&w, &f, "X0^6 + 2*X1^3 + X2^2").unwrap();
        assert_eq!(step.map_poly(&f, &poly).unwrap(), poly);
        let pts = enumerate_points(&w, &Arc::new(f.clone()), ENUMERATION_BUDGET).unwrap();
        for p in pts.points() {
            assert_eq!(&step.map_point(&f, p).unwrap(), p);
        }
    }

    #[test]
    fn precondition_errors() {
        assert!(delorme_reduce(&ws(&[2, 1, 2]), 1, 2).is_ok());
        assert!(delorme_reduce(&ws(&[2, 2, 3]), 2, 3).is_err());
        assert!(delorme_reduce(&ws(&[2, 4, 3]), 1, 2).is_err());
        assert!(delorme_reduce(&ws(&[2, 1, 2]), 5, 2).is_err());
    }

    #[test]
    fn reduce_212_is_bijective() {
        let w = ws(&[2, 1, 2]);
        let step = delorme_reduce(&w, 1, 2).unwrap();
        assert_eq!(step.target().weights(), &[1, 1, 1]);
        for q in [2, 3, 4, 5, 7] {
            let f = Arc::new(crate::FieldCtx::with_order(q).unwrap());
            let src = enumerate_points(&w, &f, ENUMERATION_BUDGET).unwrap();
            let dst = enumerate_points(step.target(), &f, ENUMERATION_BUDGET).unwrap();
            assert_eq!(src.len(), dst.len());
            let image: BTreeSet<_> = src
                .points()
                .iter()
                .map(|p| step.map_point(&f, p).unwrap())
                .collect();
            assert_eq!(image.len(), dst.len(), "q={q}");
        }
    }

    #[test]
    fn normalize_34_takes_two_steps() {
        let red = delorme_normalize(&ws(&[3, 4]));
        assert_eq!(red.steps().len(), 2);
        assert_eq!(red.target().weights(), &[1, 1]);
        assert_eq!(red.degree_divisor(), 12);
        let red = delorme_normalize(&ws(&[1, 2, 8]));
        assert_eq!(red.target().weights(), &[1, 1, 4]);
        assert_eq!(red.degree_divisor(), 2);
        assert!(delorme_normalize(&ws(&[2, 3, 5])).steps().is_empty());
    }

    #[test]
    fn polynomial_transform_round_trip() {
        let f = make_field(3, 1).unwrap();
        let w = ws(&[1, 4, 6]);
        let red = delorme_normalize(&w);
        assert_eq!(red.target().weights(), &[1, 2, 3]);
        let poly = WeightedPolynomial::parse(&w, &f, "X0^12 + 2*X1^3 + X2^2 + X0^2*X1*X2").unwrap();
        let g = red.map_poly(&f, &poly).unwrap();
        assert_eq!(g.degree(), 6);
        let back = red.steps()[0].lift_poly(&f, &g).unwrap();
        assert_eq!(back, poly);
        let odd = WeightedPolynomial::parse(&w, &f, "X0^5 + X0*X1").unwrap();
        assert!(red.map_poly(&f, &odd).is_err());
    }
}
