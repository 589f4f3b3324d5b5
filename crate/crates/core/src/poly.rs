//! Sparse polynomials over `F_q` and the weighted homogeneous pieces `S_d`.

use std::collections::BTreeMap;
use std::fmt;

use crate::arith;
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement};
use crate::space::WeightSystem;

/// Exponent vector `(r_0, ..., r_m)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: impl Into<Vec<u32>>) -> Self {
        Self(exponents.into())
    }

    pub fn one(nvars: usize) -> Self {
        Self(vec![0; nvars])
    }

    /// `X_i^e` in `nvars` variables.
    pub fn power(nvars: usize, i: usize, e: u32) -> Self {
        let mut v = vec![0; nvars];
        v[i] = e;
        Self(v)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    /// Weighted degree `Σ a_i r_i`.
    pub fn wdeg(&self, ws: &WeightSystem) -> u64 {
        self.0
            .iter()
            .zip(ws.weights())
            .map(|(&r, &a)| r as u64 * a as u64)
            .sum()
    }

    /// Indices of the variables that occur.
    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] > 0).collect()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn pow(&self, n: u32) -> Monomial {
        Monomial(self.0.iter().map(|a| a * n).collect())
    }

    pub(crate) fn eval_idx(&self, field: &FieldCtx, x: &[u32]) -> u32 {
        self.0.iter().zip(x).fold(1, |acc, (&r, &v)| {
            field.mul_idx(acc, field.pow_idx(v, r as u64))
        })
    }

    pub fn evaluate(&self, field: &FieldCtx, x: &[FieldElement]) -> FieldElement {
        let idx: Vec<u32> = x.iter().map(|e| e.index()).collect();
        field.elem(self.eval_idx(field, &idx))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|&(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    format!("X{i}")
                } else {
                    format!("X{i}^{e}")
                }
            })
            .collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// A polynomial in a fixed number of variables, stored as a map from
/// monomials to nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, FieldElement>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: FieldElement) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    pub fn term(m: Monomial, c: FieldElement) -> Self {
        let mut p = Self::zero(m.nvars());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// The variable `X_i`.
    pub fn var(field: &FieldCtx, nvars: usize, i: usize) -> Self {
        Self::term(Monomial::power(nvars, i, 1), field.one())
    }

    /// Builds from `(monomial, coefficient)` pairs, merging duplicates.
    pub fn from_terms(
        field: &FieldCtx,
        nvars: usize,
        terms: impl IntoIterator<Item = (Monomial, FieldElement)>,
    ) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial arity mismatch");
            p.add_term(field, m, c);
        }
        p
    }

    fn add_term(&mut self, field: &FieldCtx, m: Monomial, c: FieldElement) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                let s = field.add(*v, c);
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &FieldElement)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<FieldElement> {
        self.terms.get(m).copied()
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    pub fn add(&self, field: &FieldCtx, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.add_term(field, m.clone(), c);
        }
        out
    }

    pub fn neg(&self, field: &FieldCtx) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, &c)| (m.clone(), field.neg(c)))
                .collect(),
        }
    }

    pub fn sub(&self, field: &FieldCtx, other: &Polynomial) -> Polynomial {
        self.add(field, &other.neg(field))
    }

    pub fn scale(&self, field: &FieldCtx, c: FieldElement) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, &v)| (m.clone(), field.mul(v, c)))
                .collect(),
        }
    }

    pub fn mul(&self, field: &FieldCtx, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (m1, &c1) in &self.terms {
            for (m2, &c2) in &other.terms {
                out.add_term(field, m1.mul(m2), field.mul(c1, c2));
            }
        }
        out
    }

    pub fn pow(&self, field: &FieldCtx, n: u32) -> Polynomial {
        let mut acc = Polynomial::constant(self.nvars, field.one());
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(field, &base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(field, &base);
            }
        }
        acc
    }

    pub(crate) fn eval_idx(&self, field: &FieldCtx, x: &[u32]) -> u32 {
        self.terms.iter().fold(0, |acc, (m, c)| {
            field.add_idx(acc, field.mul_idx(c.index(), m.eval_idx(field, x)))
        })
    }

    pub fn evaluate(&self, field: &FieldCtx, x: &[FieldElement]) -> FieldElement {
        assert_eq!(x.len(), self.nvars, "point arity mismatch");
        let idx: Vec<u32> = x.iter().map(|e| e.index()).collect();
        field.elem(self.eval_idx(field, &idx))
    }

    /// Replaces `X_var` by `value`.
    pub fn substitute(&self, field: &FieldCtx, var: usize, value: &Polynomial) -> Polynomial {
        let mut powers: BTreeMap<u32, Polynomial> = BTreeMap::new();
        let mut out = Polynomial::zero(self.nvars);
        for (m, &c) in &self.terms {
            let e = m.0[var];
            let mut rest = m.clone();
            rest.0[var] = 0;
            let pw = powers
                .entry(e)
                .or_insert_with(|| value.pow(field, e))
                .clone();
            let t = Polynomial::term(rest, c).mul(field, &pw);
            out = out.add(field, &t);
        }
        out
    }

    /// Text form `c*X0^r0*X1^r1 + ...` with coefficients as field indices.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        // highest monomial first
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| {
                if m.is_one() {
                    c.to_string()
                } else if c.index() == 1 {
                    m.to_string()
                } else {
                    format!("{c}*{m}")
                }
            })
            .collect();
        parts.join(" + ")
    }

    /// Parses the text form produced by [`Self::to_text`], also accepting
    /// `-` between terms. Variables are `X0 .. X{nvars-1}`; repeated factors
    /// multiply.
    pub fn parse(field: &FieldCtx, nvars: usize, text: &str) -> Result<Polynomial> {
        let bad = |msg: String| Error::Parse(msg);
        let mut out = Polynomial::zero(nvars);
        let text = text.trim();
        if text.is_empty() {
            return Err(bad("empty polynomial".into()));
        }
        let mut signed = Vec::new();
        let mut start = 0;
        let mut negative = false;
        for (i, ch) in text.char_indices() {
            if ch == '+' || ch == '-' {
                signed.push((negative, &text[start..i]));
                negative = ch == '-';
                start = i + 1;
            }
        }
        signed.push((negative, &text[start..]));
        if signed[0].1.trim().is_empty() && signed.len() > 1 {
            // leading sign
            signed.remove(0);
        }
        for (negative, term) in signed {
            let term = term.trim();
            if term.is_empty() {
                return Err(bad(format!("empty term in {text:?}")));
            }
            let mut coeff = if negative {
                field.neg(field.one())
            } else {
                field.one()
            };
            let mut exps = vec![0u32; nvars];
            for factor in term.split('*') {
                let factor = factor.trim();
                if let Some(rest) = factor
                    .strip_prefix('X')
                    .or_else(|| factor.strip_prefix('x'))
                {
                    let (var, exp) = match rest.split_once('^') {
                        Some((v, e)) => (
                            v,
                            e.trim()
                                .parse::<u32>()
                                .map_err(|_| bad(format!("bad exponent in {factor:?}")))?,
                        ),
                        None => (rest, 1),
                    };
                    let i: usize = var
                        .trim()
                        .parse()
                        .map_err(|_| bad(format!("bad variable {factor:?}")))?;
                    if i >= nvars {
                        return Err(bad(format!("variable X{i} out of range (nvars {nvars})")));
                    }
                    exps[i] += exp;
                } else {
                    let c: u32 = factor
                        .parse()
                        .map_err(|_| bad(format!("bad coefficient {factor:?}")))?;
                    if c >= field.order() {
                        return Err(bad(format!(
                            "coefficient {c} is not an index of F_{}",
                            field.order()
                        )));
                    }
                    coeff = field.mul(coeff, field.elem(c));
                }
            }
            out.add_term(field, Monomial(exps), coeff);
        }
        Ok(out)
    }
}

/// A nonzero-or-zero element of `S_d` for a weight system: every stored
/// monomial has weighted degree `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedPolynomial {
    ws: WeightSystem,
    degree: u64,
    poly: Polynomial,
}

impl WeightedPolynomial {
    pub fn new(ws: &WeightSystem, degree: u64, poly: Polynomial) -> Result<Self> {
        if poly.nvars() != ws.len() {
            return Err(Error::Arity {
                expected: ws.len(),
                got: poly.nvars(),
            });
        }
        if let Some((m, _)) = poly.terms().find(|(m, _)| m.wdeg(ws) != degree) {
            return Err(Error::NotHomogeneous(format!(
                "monomial {m} has weighted degree {} under weights ({ws}), expected {degree}",
                m.wdeg(ws)
            )));
        }
        Ok(Self {
            ws: ws.clone(),
            degree,
            poly,
        })
    }

    /// Infers the degree from the terms; the zero polynomial is rejected.
    pub fn from_poly(ws: &WeightSystem, poly: Polynomial) -> Result<Self> {
        let d = poly
            .terms()
            .next()
            .map(|(m, _)| m.wdeg(ws))
            .ok_or(Error::ZeroPolynomial)?;
        Self::new(ws, d, poly)
    }

    pub fn parse(ws: &WeightSystem, field: &FieldCtx, text: &str) -> Result<Self> {
        Self::from_poly(ws, Polynomial::parse(field, ws.len(), text)?)
    }

    pub fn weights(&self) -> &WeightSystem {
        &self.ws
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    pub fn into_poly(self) -> Polynomial {
        self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn evaluate(&self, field: &FieldCtx, x: &[FieldElement]) -> FieldElement {
        self.poly.evaluate(field, x)
    }

    pub fn mul(&self, field: &FieldCtx, other: &WeightedPolynomial) -> WeightedPolynomial {
        assert_eq!(self.ws, other.ws, "weight systems differ");
        WeightedPolynomial {
            ws: self.ws.clone(),
            degree: self.degree + other.degree,
            poly: self.poly.mul(field, &other.poly),
        }
    }

    pub fn to_text(&self) -> String {
        self.poly.to_text()
    }
}

impl fmt::Display for WeightedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.poly.to_text())
    }
}

/// All monomials of weighted degree `d`, lexicographically decreasing in the
/// exponent vector (so `X_0^{d/a_0}` comes first when it exists).
pub fn monomial_basis(ws: &WeightSystem, d: u64) -> Vec<Monomial> {
    fn rec(w: &[u32], i: usize, rest: u64, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == w.len() {
            if rest.is_multiple_of(w[i] as u64) {
                cur.push((rest / w[i] as u64) as u32);
                out.push(Monomial(cur.clone()));
                cur.pop();
            }
            return;
        }
        let max = rest / w[i] as u64;
        for r in (0..=max).rev() {
            cur.push(r as u32);
            rec(w, i + 1, rest - r * w[i] as u64, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(ws.weights(), 0, d, &mut Vec::new(), &mut out);
    out
}

/// `dim S_d`, the number of solutions of `Σ a_i r_i = d` in nonnegative
/// integers, by the coin-change recurrence.
pub fn dim_sd(ws: &WeightSystem, d: u64) -> u128 {
    let d = d as usize;
    let mut ways = vec![0u128; d + 1];
    ways[0] = 1;
    for &a in ws.weights() {
        let a = a as usize;
        for v in a..=d {
            ways[v] += ways[v - a];
        }
    }
    ways[d]
}

/// Lattice-point count of `S_d` for weights `(1, a, b)` when `lcm(a, b) | d`:
/// `((d + 2a)(d + b) + (gcd(a, b) - a) d) / (2ab)`.
pub fn dim_closed_form_1ab(a: u64, b: u64, d: u64) -> Option<u128> {
    if !d.is_multiple_of(arith::lcm(a, b)) {
        return None;
    }
    let g = arith::gcd(a, b) as i128;
    let (a, b, d) = (a as i128, b as i128, d as i128);
    let num = (d + 2 * a) * (d + b) + (g - a) * d;
    Some((num / (2 * a * b)) as u128)
}

/// Lattice-point count of `S_d` for weights `(1, 1, a)` when `a | d`:
/// `(d + a)(d + 2) / (2a)`.
pub fn dim_closed_form_11a(a: u64, d: u64) -> Option<u128> {
    if !d.is_multiple_of(a) {
        return None;
    }
    Some(((d + a) as u128 * (d + 2) as u128) / (2 * a as u128))
}

/// `F(1, Y_1, ..., Y_m)`: drops `X_0` from every term. Requires `a_0 = 1`.
pub fn dehomogenize_chart0(field: &FieldCtx, f: &WeightedPolynomial) -> Result<Polynomial> {
    if f.weights().weight(0) != 1 {
        return Err(Error::Precondition(format!(
            "dehomogenization needs a_0 = 1, weights are ({})",
            f.weights()
        )));
    }
    let n = f.weights().dim();
    Ok(Polynomial::from_terms(
        field,
        n,
        f.poly()
            .terms()
            .map(|(m, &c)| (Monomial(m.exponents()[1..].to_vec()), c)),
    ))
}

/// Inverse of [`dehomogenize_chart0`]: multiplies each term by the power of
/// `X_0` needed to reach the largest weighted term degree.
pub fn homogenize_chart0(
    field: &FieldCtx,
    f: &Polynomial,
    ws: &WeightSystem,
) -> Result<WeightedPolynomial> {
    if ws.weight(0) != 1 {
        return Err(Error::Precondition(format!(
            "homogenization needs a_0 = 1, weights are ({ws})"
        )));
    }
    if f.nvars() != ws.dim() {
        return Err(Error::Arity {
            expected: ws.dim(),
            got: f.nvars(),
        });
    }
    let wt = |m: &Monomial| -> u64 {
        m.exponents()
            .iter()
            .zip(&ws.weights()[1..])
            .map(|(&r, &a)| r as u64 * a as u64)
            .sum()
    };
    let d = f
        .terms()
        .map(|(m, _)| wt(m))
        .max()
        .ok_or(Error::ZeroPolynomial)?;
    let poly = Polynomial::from_terms(
        field,
        ws.len(),
        f.terms().map(|(m, &c)| {
            let mut e = Vec::with_capacity(ws.len());
            e.push((d - wt(m)) as u32);
            e.extend_from_slice(m.exponents());
            (Monomial(e), c)
        }),
    );
    WeightedPolynomial::new(ws, d, poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;

    fn ws(w: &[u32]) -> WeightSystem {
        WeightSystem::new(w.to_vec()).unwrap()
    }

    #[test]
    fn bases_from_examples() {
        assert_eq!(monomial_basis(&ws(&[3, 4]), 7), vec![Monomial::new([1, 1])]);
        assert_eq!(monomial_basis(&ws(&[3, 4]), 8), vec![Monomial::new([0, 2])]);
        assert!(monomial_basis(&ws(&[3, 4]), 5).is_empty());
        let b = monomial_basis(&ws(&[1, 1, 2]), 2);
        assert_eq!(
            b,
            vec![
                Monomial::new([2, 0, 0]),
                Monomial::new([1, 1, 0]),
                Monomial::new([0, 2, 0]),
                Monomial::new([0, 0, 1]),
            ]
        );
        assert_eq!(monomial_basis(&ws(&[2, 3, 5]), 0), vec![Monomial::one(3)]);
    }

    #[test]
    fn dimensions_from_examples() {
        assert_eq!(dim_sd(&ws(&[1, 2, 2]), 16), 45);
        assert_eq!(dim_sd(&ws(&[1, 2, 4]), 16), 25);
        assert_eq!(dim_sd(&ws(&[1, 2, 8]), 16), 15);
        assert_eq!(dim_sd(&ws(&[1, 4, 4]), 16), 15);
        assert_eq!(dim_sd(&ws(&[1, 16, 16]), 16), 3);
        assert_eq!(dim_closed_form_1ab(2, 4, 16), Some(25));
        assert_eq!(dim_closed_form_1ab(2, 8, 16), Some(15));
        assert_eq!(dim_closed_form_1ab(4, 4, 16), Some(15));
        assert_eq!(dim_closed_form_1ab(16, 16, 16), Some(3));
        assert_eq!(dim_closed_form_1ab(2, 3, 7), None);
        assert_eq!(dim_closed_form_11a(3, 9), Some(22));
    }

    #[test]
    fn closed_forms_match_counts_on_grid() {
        for a in 1..=8u64 {
            for b in 1..=8u64 {
                for d in 0..=64u64 {
                    let w = ws(&[1, a as u32, b as u32]);
                    let n = dim_sd(&w, d);
                    assert_eq!(n, monomial_basis(&w, d).len() as u128);
                    if let Some(c) = dim_closed_form_1ab(a, b, d) {
                        assert_eq!(c, n, "(1,{a},{b}) d={d}");
                    }
                    if a == 1 {
                        if let Some(c) = dim_closed_form_11a(b, d) {
                            assert_eq!(c, n, "(1,1,{b}) d={d}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn evaluate_example() {
        let f5 = make_field(5, 1).unwrap();
        let w = ws(&[3, 4]);
        let f = WeightedPolynomial::parse(&w, &f5, "X0*X1").unwrap();
        assert_eq!(f.degree(), 7);
        assert_eq!(f.evaluate(&f5, &[f5.elem(2), f5.elem(3)]), f5.elem(1));
        assert_eq!(f.evaluate(&f5, &[f5.zero(), f5.zero()]), f5.zero());
    }

    #[test]
    fn parse_and_print() {
        let f7 = make_field(7, 1).unwrap();
        let p = Polynomial::parse(&f7, 3, "3*X0^2*X1 + X2 + 5 + 4*X2").unwrap();
        assert_eq!(p.to_text(), "3*X0^2*X1 + 5*X2 + 5");
        assert_eq!(Polynomial::parse(&f7, 3, &p.to_text()).unwrap(), p);
        assert!(Polynomial::parse(&f7, 3, "X3").is_err());
        assert!(Polynomial::parse(&f7, 3, "9*X0").is_err());
        assert!(Polynomial::parse(&f7, 3, "X0 + ").is_err());
        assert_eq!(
            Polynomial::parse(&f7, 2, "X0*X0*2").unwrap().to_text(),
            "2*X0^2"
        );
        assert_eq!(
            Polynomial::parse(&f7, 2, "-X0 - 2*X1 + X0")
                .unwrap()
                .to_text(),
            "5*X1"
        );
        assert!(Polynomial::parse(&f7, 2, "X0 - - X1").is_err());
        let w = ws(&[1, 2, 3]);
        assert!(matches!(
            WeightedPolynomial::parse(&w, &f7, "X0 + X1"),
            Err(Error::NotHomogeneous(_))
        ));
        assert_eq!(
            WeightedPolynomial::parse(&w, &f7, "X0 + 6*X0").unwrap_err(),
            Error::ZeroPolynomial
        );
    }

    #[test]
    fn substitution_expands() {
        let f5 = make_field(5, 1).unwrap();
        let p = Polynomial::parse(&f5, 2, "X1^2").unwrap();
        let v = Polynomial::parse(&f5, 2, "X1 + 4*X0").unwrap();
        // (X1 - X0)^2 = X1^2 - 2 X0 X1 + X0^2
        assert_eq!(p.substitute(&f5, 1, &v).to_text(), "X0^2 + 3*X0*X1 + X1^2");
    }

    #[test]
    fn dehomogenize_examples() {
        let f5 = make_field(5, 1).unwrap();
        let w = ws(&[1, 2, 3]);
        let f = WeightedPolynomial::parse(&w, &f5, "X2 + X0*X1 + X0^3").unwrap();
        let g = dehomogenize_chart0(&f5, &f).unwrap();
        assert_eq!(g, Polynomial::parse(&f5, 2, "X1 + X0 + 1").unwrap());
        assert_eq!(homogenize_chart0(&f5, &g, &w).unwrap(), f);

        let f = WeightedPolynomial::parse(&w, &f5, "X0^6").unwrap();
        assert_eq!(
            dehomogenize_chart0(&f5, &f).unwrap(),
            Polynomial::constant(2, f5.one())
        );

        let g = Polynomial::parse(&f5, 2, "2*X0^3 + X1").unwrap();
        let h = homogenize_chart0(&f5, &g, &w).unwrap();
        assert_eq!(h.degree(), 6);
        assert_eq!(dehomogenize_chart0(&f5, &h).unwrap(), g);

        let bad = WeightedPolynomial::parse(&ws(&[2, 3]), &f5, "X0^3").unwrap();
        assert!(dehomogenize_chart0(&f5, &bad).is_err());
        assert!(homogenize_chart0(&f5, &g, &ws(&[2, 1, 3])).is_err());
        assert_eq!(
            homogenize_chart0(&f5, &Polynomial::zero(2), &w).unwrap_err(),
            Error::ZeroPolynomial
        );
    }
}
