//! Arithmetic in `F_q`, `q = p^e`, on integer indices backed by exp/log tables.
//!
//! Elements are identified by their index in a fixed enumeration: the element
//! `c_0 + c_1 x + ... + c_{e-1} x^{e-1}` of `F_p[x]/(f)` has index
//! `c_0 + c_1 p + ... + c_{e-1} p^{e-1}`. Index 0 is zero and index 1 is one,
//! and for prime fields the index is the residue itself.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU32, Ordering};

use crate::arith;
use crate::error::{Error, Result};

/// Largest supported field size; exp/log tables are kept in memory.
pub const MAX_FIELD_SIZE: u64 = 1 << 16;

/// Extension fields up to this size get a full addition table.
const ADD_TABLE_LIMIT: u32 = 256;

static NEXT_CTX_ID: AtomicU32 = AtomicU32::new(1);

/// An element of a finite field, meaningful only together with the
/// [`FieldCtx`] that produced it.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    index: u32,
    #[cfg(debug_assertions)]
    ctx: u32,
}

impl FieldElement {
    pub fn index(self) -> u32 {
        self.index
    }

    pub fn is_zero(self) -> bool {
        self.index == 0
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.index)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index)
    }
}

/// The field `F_q` together with its arithmetic tables. Immutable once built.
#[derive(Clone)]
pub struct FieldCtx {
    id: u32,
    p: u32,
    e: u32,
    q: u32,
    /// Low-degree-first coefficients `c_0..c_{e-1}` of the monic reduction
    /// polynomial; empty for prime fields.
    modulus: Vec<u32>,
    generator: u32,
    /// `exp[k] = g^k` for `k < 2(q-1)` so products of two logs need no reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
    neg: Vec<u32>,
    add_table: Option<Vec<u32>>,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldCtx")
            .field("p", &self.p)
            .field("e", &self.e)
            .field("q", &self.q)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.e == other.e
    }
}

impl Eq for FieldCtx {}

/// Builds `F_{p^e}` with the lexicographically smallest irreducible monic
/// reduction polynomial of degree `e`.
pub fn make_field(p: u64, e: u32) -> Result<FieldCtx> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if e == 0 {
        return Err(Error::ZeroDegree);
    }
    let q = (p as u128).checked_pow(e).unwrap_or(u128::MAX);
    if q > MAX_FIELD_SIZE as u128 {
        return Err(Error::FieldTooLarge {
            p,
            e,
            cap: MAX_FIELD_SIZE,
        });
    }
    let (p, q) = (p as u32, q as u32);
    let modulus = if e == 1 {
        Vec::new()
    } else {
        smallest_irreducible(p, e)
    };
    let mut ctx = FieldCtx {
        id: NEXT_CTX_ID.fetch_add(1, Ordering::Relaxed),
        p,
        e,
        q,
        modulus,
        generator: 0,
        exp: Vec::new(),
        log: Vec::new(),
        neg: Vec::new(),
        add_table: None,
    };
    ctx.neg = (0..q).map(|a| ctx.slow_neg(a)).collect();
    ctx.build_tables();
    if e > 1 && q <= ADD_TABLE_LIMIT {
        let mut table = vec![0; (q * q) as usize];
        for a in 0..q {
            for b in 0..q {
                table[(a * q + b) as usize] = ctx.slow_add(a, b);
            }
        }
        ctx.add_table = Some(table);
    }
    Ok(ctx)
}

/// Parses a field spec `"q"` or `"p^e"`.
pub fn parse_field_spec(spec: &str) -> Result<FieldCtx> {
    let spec = spec.trim();
    let bad = || Error::Parse(format!("invalid field spec {spec:?}"));
    if let Some((p, e)) = spec.split_once('^') {
        let p: u64 = p.trim().parse().map_err(|_| bad())?;
        let e: u32 = e.trim().parse().map_err(|_| bad())?;
        make_field(p, e)
    } else {
        let q: u64 = spec.parse().map_err(|_| bad())?;
        FieldCtx::with_order(q)
    }
}

impl FromStr for FieldCtx {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_field_spec(s)
    }
}

impl FieldCtx {
    /// Builds the field of order `q`, which must be a prime power.
    pub fn with_order(q: u64) -> Result<Self> {
        match arith::prime_power(q) {
            Some((p, e)) => make_field(p, e),
            None => Err(Error::NotPrime(q)),
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Coefficients `c_0..c_{e-1}` of the monic reduction polynomial
    /// `x^e + c_{e-1} x^{e-1} + ... + c_0`; empty for prime fields.
    pub fn reduction_poly(&self) -> &[u32] {
        &self.modulus
    }

    pub fn id(&self) -> u32 {
        self.id
    }

    #[inline]
    pub fn elem(&self, index: u32) -> FieldElement {
        assert!(index < self.q, "index {index} outside F_{}", self.q);
        FieldElement {
            index,
            #[cfg(debug_assertions)]
            ctx: self.id,
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.elem(0)
    }

    pub fn one(&self) -> FieldElement {
        self.elem(1)
    }

    /// The canonical primitive element used for the exp/log tables.
    pub fn generator(&self) -> FieldElement {
        self.elem(self.generator)
    }

    /// All elements in canonical index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q).map(move |i| self.elem(i))
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (1..self.q).map(move |i| self.elem(i))
    }

    #[inline]
    fn check(&self, _a: FieldElement) {
        #[cfg(debug_assertions)]
        debug_assert_eq!(_a.ctx, self.id, "field element used with a foreign context");
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.check(a);
        self.check(b);
        self.elem(self.add_idx(a.index, b.index))
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.check(a);
        self.check(b);
        self.elem(self.sub_idx(a.index, b.index))
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        self.check(a);
        self.elem(self.neg_idx(a.index))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.check(a);
        self.check(b);
        self.elem(self.mul_idx(a.index, b.index))
    }

    pub fn try_inv(&self, a: FieldElement) -> Option<FieldElement> {
        self.check(a);
        self.inv_idx(a.index).map(|i| self.elem(i))
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: FieldElement) -> FieldElement {
        self.try_inv(a).expect("inverse of zero")
    }

    /// `a / b`. Panics if `b` is zero.
    pub fn div(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.mul(a, self.inv(b))
    }

    /// `a^n` with `0^0 = 1`.
    pub fn pow(&self, a: FieldElement, n: u64) -> FieldElement {
        self.check(a);
        self.elem(self.pow_idx(a.index, n))
    }

    /// Discrete log base [`Self::generator`]; `None` for zero.
    pub fn log(&self, a: FieldElement) -> Option<u32> {
        self.check(a);
        self.log_idx(a.index)
    }

    /// `g^k` for the canonical generator.
    pub fn exp(&self, k: u64) -> FieldElement {
        self.elem(self.exp[(k % (self.q as u64 - 1)) as usize])
    }

    // Index-level kernels used by the hot loops.

    #[inline]
    pub(crate) fn add_idx(&self, a: u32, b: u32) -> u32 {
        if self.e == 1 {
            let s = a + b;
            if s >= self.p {
                s - self.p
            } else {
                s
            }
        } else if let Some(t) = &self.add_table {
            t[(a * self.q + b) as usize]
        } else {
            self.slow_add(a, b)
        }
    }

    #[inline]
    pub(crate) fn neg_idx(&self, a: u32) -> u32 {
        self.neg[a as usize]
    }

    #[inline]
    pub(crate) fn sub_idx(&self, a: u32, b: u32) -> u32 {
        self.add_idx(a, self.neg[b as usize])
    }

    #[inline]
    pub(crate) fn mul_idx(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            0
        } else {
            self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
        }
    }

    #[inline]
    pub(crate) fn inv_idx(&self, a: u32) -> Option<u32> {
        if a == 0 {
            None
        } else {
            let l = self.log[a as usize];
            Some(self.exp[((self.q - 1 - l) % (self.q - 1)) as usize])
        }
    }

    #[inline]
    pub(crate) fn log_idx(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    #[inline]
    pub(crate) fn exp_idx(&self, k: u64) -> u32 {
        self.exp[(k % (self.q as u64 - 1)) as usize]
    }

    #[inline]
    pub(crate) fn pow_idx(&self, a: u32, n: u64) -> u32 {
        if n == 0 {
            1
        } else if a == 0 {
            0
        } else {
            let order = self.q as u64 - 1;
            let l = self.log[a as usize] as u64;
            self.exp[((l * (n % order)) % order) as usize]
        }
    }

    fn digits(&self, mut a: u32) -> Vec<u32> {
        let mut d = vec![0; self.e as usize];
        for slot in d.iter_mut() {
            *slot = a % self.p;
            a /= self.p;
        }
        d
    }

    fn undigits(&self, d: &[u32]) -> u32 {
        d.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    fn slow_add(&self, a: u32, b: u32) -> u32 {
        let (da, db) = (self.digits(a), self.digits(b));
        let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.undigits(&s)
    }

    fn slow_neg(&self, a: u32) -> u32 {
        let d: Vec<u32> = self
            .digits(a)
            .iter()
            .map(|&x| (self.p - x) % self.p)
            .collect();
        self.undigits(&d)
    }

    /// Schoolbook product followed by reduction modulo the reduction polynomial.
    fn slow_mul(&self, a: u32, b: u32) -> u32 {
        if self.e == 1 {
            return ((a as u64 * b as u64) % self.p as u64) as u32;
        }
        let p = self.p as u64;
        let e = self.e as usize;
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u64; 2 * e - 1];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        // x^e = -(c_0 + ... + c_{e-1} x^{e-1})
        for k in (e..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for (j, &m) in self.modulus.iter().enumerate() {
                let idx = k - e + j;
                prod[idx] = (prod[idx] + (p - c) * m as u64) % p;
            }
        }
        let out: Vec<u32> = prod[..e].iter().map(|&c| c as u32).collect();
        self.undigits(&out)
    }

    fn build_tables(&mut self) {
        let q = self.q;
        let order = (q - 1) as usize;
        let mut exp = vec![0u32; order.max(1)];
        let mut candidate = if q == 2 { 1 } else { 2 };
        loop {
            let mut x = 1u32;
            let mut primitive = true;
            for (k, slot) in exp.iter_mut().enumerate() {
                *slot = x;
                x = self.slow_mul(x, candidate);
                if x == 1 && k + 1 < order {
                    primitive = false;
                    break;
                }
            }
            if primitive && x == 1 {
                break;
            }
            candidate += 1;
            assert!(candidate < q, "no primitive element found");
        }
        self.generator = candidate;
        let mut log = vec![u32::MAX; q as usize];
        for (k, &v) in exp.iter().enumerate() {
            log[v as usize] = k as u32;
        }
        let doubled: Vec<u32> = exp.iter().chain(exp.iter()).copied().collect();
        self.exp = doubled;
        self.log = log;
    }
}

/// Low-degree-first monic polynomial remainder over `F_p`.
fn poly_rem(num: &[u32], den: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u32> = num.to_vec();
    let dd = den.len() - 1;
    debug_assert_eq!(den[dd], 1);
    while r.len() > dd {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dd;
        if lead != 0 {
            for (j, &c) in den.iter().enumerate() {
                let idx = shift + j;
                r[idx] = (r[idx] + (p - lead) * c % p) % p;
            }
        }
        r.pop();
    }
    r
}

fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let deg = poly.len() - 1;
    for d in 1..=deg / 2 {
        // all monic polynomials of degree d
        let count = (p as u64).pow(d as u32);
        for n in 0..count {
            let mut div = Vec::with_capacity(d + 1);
            let mut t = n;
            for _ in 0..d {
                div.push((t % p as u64) as u32);
                t /= p as u64;
            }
            div.push(1);
            if poly_rem(poly, &div, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Smallest irreducible monic polynomial of degree `e` over `F_p`, ordered
/// lexicographically on `(c_0, c_1, ..., c_{e-1})`.
fn smallest_irreducible(p: u32, e: u32) -> Vec<u32> {
    let count = (p as u64).pow(e);
    for n in 0..count {
        // c_0 is the most significant digit of n
        let mut coeffs = vec![0u32; e as usize];
        let mut t = n;
        for k in (0..e as usize).rev() {
            coeffs[k] = (t % p as u64) as u32;
            t /= p as u64;
        }
        let mut poly = coeffs.clone();
        poly.push(1);
        if is_irreducible(&poly, p) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials of every degree exist")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_in_f19() {
        let f = make_field(19, 1).unwrap();
        assert_eq!(f.inv(f.elem(2)), f.elem(10));
    }

    #[test]
    fn f4_reduction() {
        let f = make_field(2, 2).unwrap();
        assert_eq!(f.reduction_poly(), &[1, 1]);
        let x = f.elem(2);
        // x^2 = x + 1, index 3
        assert_eq!(f.mul(x, x), f.elem(3));
    }

    #[test]
    fn f8_modulus_is_lex_smallest() {
        // x^3 + 1 is reducible; next in (c0,c1,c2) order is 1 + x^2 + x^3
        let f = make_field(2, 3).unwrap();
        assert_eq!(f.reduction_poly(), &[1, 0, 1]);
        let f = make_field(3, 2).unwrap();
        // x^2 + 1 is irreducible over F_3 and (1,0) precedes everything with c0 = 1
        assert_eq!(f.reduction_poly(), &[1, 0]);
    }

    #[test]
    fn inverse_of_one() {
        for q in [2, 3, 4, 8, 9, 19, 25] {
            let f = FieldCtx::with_order(q).unwrap();
            assert_eq!(f.inv(f.one()), f.one());
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(make_field(6, 1).unwrap_err(), Error::NotPrime(6));
        assert_eq!(make_field(3, 0).unwrap_err(), Error::ZeroDegree);
        assert!(matches!(
            make_field(2, 17),
            Err(Error::FieldTooLarge { .. })
        ));
        assert!(FieldCtx::with_order(12).is_err());
        assert!(make_field(2, 16).is_ok());
    }

    #[test]
    fn parse_specs() {
        assert_eq!(parse_field_spec("19").unwrap().order(), 19);
        let f: FieldCtx = "2^2".parse().unwrap();
        assert_eq!((f.characteristic(), f.degree(), f.order()), (2, 2, 4));
        assert!(parse_field_spec("2^x").is_err());
        assert!(parse_field_spec("15").is_err());
    }

    fn axioms(f: &FieldCtx) {
        let els: Vec<_> = f.elements().collect();
        for &a in &els {
            assert_eq!(f.add(a, f.neg(a)), f.zero());
            assert_eq!(f.add(a, f.zero()), a);
            assert_eq!(f.mul(a, f.one()), a);
            if !a.is_zero() {
                assert_eq!(f.mul(a, f.inv(a)), f.one());
            }
            for &b in &els {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                // reference product from the schoolbook routine
                assert_eq!(f.mul(a, b).index(), f.slow_mul(a.index(), b.index()));
                let ap = f.pow(a, f.characteristic() as u64);
                let bp = f.pow(b, f.characteristic() as u64);
                assert_eq!(f.pow(f.add(a, b), f.characteristic() as u64), f.add(ap, bp));
                for &c in els.iter().step_by(3) {
                    assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }

    #[test]
    fn field_axioms_small_fields() {
        for q in [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64] {
            axioms(&FieldCtx::with_order(q).unwrap());
        }
    }

    #[test]
    fn generator_powers_are_a_bijection() {
        for q in [2, 3, 4, 8, 9, 19, 81, 128, 256, 1024] {
            let f = FieldCtx::with_order(q).unwrap();
            let g = f.generator();
            assert_eq!(f.pow(g, q - 1), f.one());
            let mut seen = vec![false; q as usize];
            for k in 0..q - 1 {
                let v = f.pow(g, k).index() as usize;
                assert!(!seen[v], "g^{k} repeats in F_{q}");
                seen[v] = true;
            }
            assert!(!seen[0]);
        }
    }

    #[test]
    fn large_extension_uses_digit_addition() {
        let f = make_field(3, 6).unwrap();
        assert!(f.add_table.is_none());
        let a = f.elem(500);
        let b = f.elem(77);
        assert_eq!(f.sub(f.add(a, b), b), a);
        assert_eq!(f.mul(f.div(a, b), b), a);
    }

    #[cfg(debug_assertions)]
    #[test]
    #[should_panic(expected = "foreign context")]
    fn mixing_contexts_is_caught() {
        let f = make_field(5, 1).unwrap();
        let g = make_field(5, 1).unwrap();
        let _ = f.add(f.one(), g.one());
    }
}
