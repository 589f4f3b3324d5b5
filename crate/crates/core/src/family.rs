//! Polynomials `μ_0 μ_1 ∏ (M_0 - t_i M_1)` built on a primitive pair of
//! monomials, their closed-form zero count, and the torus count of a binomial
//! equation.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::arith;
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement};
use crate::poly::{Monomial, Polynomial, WeightedPolynomial};
use crate::space::WeightSystem;

/// Monomials of equal weighted degree with disjoint supports whose exponents
/// have gcd 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimitivePair {
    m0: Monomial,
    m1: Monomial,
    degree: u64,
}

impl PrimitivePair {
    pub fn new(ws: &WeightSystem, m0: Monomial, m1: Monomial) -> Result<Self> {
        for m in [&m0, &m1] {
            if m.nvars() != ws.len() {
                return Err(Error::Arity {
                    expected: ws.len(),
                    got: m.nvars(),
                });
            }
            if m.is_one() {
                return Err(Error::Precondition("pair monomials must not be 1".into()));
            }
        }
        let (d0, d1) = (m0.wdeg(ws), m1.wdeg(ws));
        if d0 != d1 {
            return Err(Error::Precondition(format!(
                "degrees differ: deg {m0} = {d0}, deg {m1} = {d1}"
            )));
        }
        let s1 = m1.support();
        if m0.support().iter().any(|i| s1.contains(i)) {
            return Err(Error::Precondition(format!(
                "{m0} and {m1} share a variable"
            )));
        }
        let g = arith::gcd_all(
            m0.exponents()
                .iter()
                .chain(m1.exponents())
                .map(|&e| e as u64),
        );
        if g != 1 {
            return Err(Error::Precondition(format!(
                "exponents of {m0} and {m1} have gcd {g}"
            )));
        }
        Ok(Self { m0, m1, degree: d0 })
    }

    pub fn m0(&self) -> &Monomial {
        &self.m0
    }

    pub fn m1(&self) -> &Monomial {
        &self.m1
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    /// `(s_0, s_1)`: number of variables in `M_0` and in `M_1`.
    pub fn signature(&self) -> (usize, usize) {
        (self.m0.support().len(), self.m1.support().len())
    }
}

/// Every primitive pair with exponents at most `max_exp`, ordered by the
/// supports (as bitmasks) and then by exponent vectors.
pub fn primitive_pairs(ws: &WeightSystem, max_exp: u32) -> Vec<PrimitivePair> {
    let n = ws.len();
    let monomials_on = |mask: u32| -> Vec<Monomial> {
        let vars: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let mut out = Vec::new();
        let mut e = vec![1u32; vars.len()];
        loop {
            let mut full = vec![0u32; n];
            for (&v, &x) in vars.iter().zip(&e) {
                full[v] = x;
            }
            out.push(Monomial::new(full));
            let Some(pos) = e.iter().rposition(|&x| x < max_exp) else {
                break;
            };
            e[pos] += 1;
            for x in &mut e[pos + 1..] {
                *x = 1;
            }
        }
        out
    };
    let mut pairs = Vec::new();
    for mask0 in 1u32..(1 << n) {
        for mask1 in 1u32..(1 << n) {
            if mask0 & mask1 != 0 {
                continue;
            }
            let b = monomials_on(mask1);
            for m0 in monomials_on(mask0) {
                for m1 in &b {
                    if let Ok(p) = PrimitivePair::new(ws, m0.clone(), m1.clone()) {
                        pairs.push(p);
                    }
                }
            }
        }
    }
    pairs
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pair: PrimitivePair,
    mu0: Monomial,
    mu1: Monomial,
    t: Vec<FieldElement>,
}

/// Parameters `(ℓ, s_0, s_1, σ_0, σ_1)` of a family member.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyIndices {
    pub ell: usize,
    pub s0: usize,
    pub s1: usize,
    pub sigma0: usize,
    pub sigma1: usize,
}

impl FamilySpec {
    pub fn new(
        pair: PrimitivePair,
        mu0: Monomial,
        mu1: Monomial,
        t: Vec<FieldElement>,
        field: &FieldCtx,
    ) -> Result<Self> {
        let n = pair.m0.nvars();
        for (mu, m, name) in [(&mu0, &pair.m0, "mu0"), (&mu1, &pair.m1, "mu1")] {
            if mu.nvars() != n {
                return Err(Error::Arity {
                    expected: n,
                    got: mu.nvars(),
                });
            }
            let allowed = m.support();
            if let Some(i) = mu.support().into_iter().find(|i| !allowed.contains(i)) {
                return Err(Error::Precondition(format!(
                    "{name} = {mu} uses X{i}, which is not in {m}"
                )));
            }
        }
        if t.len() >= field.order() as usize {
            return Err(Error::Precondition(format!(
                "{} values of t exceed q - 1 = {}",
                t.len(),
                field.order() - 1
            )));
        }
        let mut seen = std::collections::BTreeSet::new();
        for x in &t {
            if x.is_zero() {
                return Err(Error::Precondition("t values must be nonzero".into()));
            }
            if !seen.insert(x.index()) {
                return Err(Error::Precondition(format!("t value {x} repeated")));
            }
        }
        let spec = Self { pair, mu0, mu1, t };
        let ix = spec.indices();
        if ix.ell == 0 && (ix.sigma0 != ix.s0 || ix.sigma1 != ix.s1) {
            return Err(Error::Precondition(
                "with no factors, mu0 and mu1 must use every variable of their monomial".into(),
            ));
        }
        Ok(spec)
    }

    pub fn pair(&self) -> &PrimitivePair {
        &self.pair
    }

    pub fn mu0(&self) -> &Monomial {
        &self.mu0
    }

    pub fn mu1(&self) -> &Monomial {
        &self.mu1
    }

    pub fn t(&self) -> &[FieldElement] {
        &self.t
    }

    pub fn indices(&self) -> FamilyIndices {
        let (s0, s1) = self.pair.signature();
        FamilyIndices {
            ell: self.t.len(),
            s0,
            s1,
            sigma0: self.mu0.support().len(),
            sigma1: self.mu1.support().len(),
        }
    }

    pub fn degree(&self, ws: &WeightSystem) -> u64 {
        self.t.len() as u64 * self.pair.degree + self.mu0.wdeg(ws) + self.mu1.wdeg(ws)
    }
}

/// Expands `μ_0 μ_1 ∏ (M_0 - t_i M_1)`.
pub fn build_family(
    spec: &FamilySpec,
    ws: &WeightSystem,
    field: &FieldCtx,
) -> Result<WeightedPolynomial> {
    let n = ws.len();
    if spec.pair.m0.nvars() != n {
        return Err(Error::Arity {
            expected: n,
            got: spec.pair.m0.nvars(),
        });
    }
    if spec.pair.m0.wdeg(ws) != spec.pair.degree || spec.pair.m1.wdeg(ws) != spec.pair.degree {
        return Err(Error::Precondition(format!(
            "pair was built for different weights than ({ws})"
        )));
    }
    let mut acc = Polynomial::term(spec.mu0.mul(&spec.mu1), field.one());
    for &t in &spec.t {
        let factor = Polynomial::from_terms(
            field,
            n,
            [
                (spec.pair.m0.clone(), field.one()),
                (spec.pair.m1.clone(), field.neg(t)),
            ],
        );
        acc = acc.mul(field, &factor);
    }
    WeightedPolynomial::new(ws, spec.degree(ws), acc)
}

/// `λ q^{m+1-s_0-s_1} + p_{m-s_0-s_1}`, with `λ` summing the torus zeros,
/// the zeros with a vanishing variable on both sides, and the zeros of
/// `μ_0` and of `μ_1` alone.
pub fn family_count_closed_form(ix: &FamilyIndices, q: u64, m: usize) -> u128 {
    let q = q as i128;
    let r = q - 1;
    let p = |b: i128, e: usize| b.pow(e as u32);
    let FamilyIndices {
        ell,
        s0,
        s1,
        sigma0,
        sigma1,
    } = *ix;
    let lambda = ell as i128 * p(r, s0 + s1 - 2)
        + ((p(q, s0) - p(r, s0)) * (p(q, s1) - p(r, s1)) - 1) / r
        + p(r, s1 - 1) * p(q, s0 - sigma0) * (p(q, sigma0) - p(r, sigma0))
        + p(r, s0 - 1) * p(q, s1 - sigma1) * (p(q, sigma1) - p(r, sigma1));
    let rest = m as i64 - (s0 + s1) as i64;
    let scale = if rest + 1 >= 0 {
        p(q, (rest + 1) as usize)
    } else {
        0
    };
    (lambda * scale) as u128 + arith::projective_count(q as u64, rest)
}

/// A random member of the family for `ws` over `field`, or `None` when no
/// primitive pair with exponents up to `max_exp` exists.
pub fn random_family_spec<R: Rng>(
    ws: &WeightSystem,
    field: &FieldCtx,
    pairs: &[PrimitivePair],
    rng: &mut R,
) -> Option<FamilySpec> {
    let pair = pairs.choose(rng)?.clone();
    let n = ws.len();
    let ell = rng.gen_range(0..field.order() as usize);
    let mut nonzero: Vec<FieldElement> = field.nonzero_elements().collect();
    nonzero.shuffle(rng);
    nonzero.truncate(ell);
    let mut pick_mu = |m: &Monomial| -> Monomial {
        let mut supp = m.support();
        let sigma = if ell == 0 {
            supp.len()
        } else {
            rng.gen_range(0..=supp.len())
        };
        supp.shuffle(rng);
        let mut e = vec![0u32; n];
        for &i in &supp[..sigma] {
            e[i] = rng.gen_range(1..=2);
        }
        Monomial::new(e)
    };
    let mu0 = pick_mu(&pair.m0);
    let mu1 = pick_mu(&pair.m1);
    let spec = FamilySpec::new(pair, mu0, mu1, nonzero, field)
        .expect("generated parameters satisfy the family constraints");
    let _ = ws;
    Some(spec)
}

/// Number of `(x, y) ∈ (F_q^*)^{s_0 + s_1}` with
/// `α ∏ x_i^{a_i} = β ∏ y_j^{b_j}`, by convolving discrete-log histograms.
pub fn torus_count(
    a: &[u32],
    b: &[u32],
    alpha: FieldElement,
    beta: FieldElement,
    field: &FieldCtx,
) -> Result<u128> {
    let (Some(la), Some(lb)) = (field.log(alpha), field.log(beta)) else {
        return Err(Error::Precondition("alpha and beta must be nonzero".into()));
    };
    if a.is_empty() || b.is_empty() {
        return Err(Error::Precondition(
            "both sides need at least one variable".into(),
        ));
    }
    let order = field.order() as usize - 1;
    let histogram = |exps: &[u32]| -> Vec<u128> {
        let mut h = vec![0u128; order];
        h[0] = 1;
        for &e in exps {
            let mut next = vec![0u128; order];
            for (l, &c) in h.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for t in 0..order {
                    next[(l + t * e as usize) % order] += c;
                }
            }
            h = next;
        }
        h
    };
    let hx = histogram(a);
    let hy = histogram(b);
    // log X = log β - log α + log Y
    let shift = (lb as usize + order - la as usize) % order;
    Ok((0..order).map(|v| hy[v] * hx[(v + shift) % order]).sum())
}
