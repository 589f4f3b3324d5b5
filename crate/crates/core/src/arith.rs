//! Small integer helpers shared by the counting formulas.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

pub fn gcd_all<I: IntoIterator<Item = u64>>(it: I) -> u64 {
    it.into_iter().fold(0, gcd)
}

pub fn lcm_all<I: IntoIterator<Item = u64>>(it: I) -> u64 {
    it.into_iter().fold(1, lcm)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// If `q = p^e` with `p` prime, returns `(p, e)`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    let fs = prime_factors(q);
    if fs.len() != 1 {
        return None;
    }
    let p = fs[0];
    let mut e = 0;
    let mut r = q;
    while r > 1 {
        r /= p;
        e += 1;
    }
    Some((p, e))
}

pub fn ipow(base: u128, exp: u32) -> u128 {
    base.pow(exp)
}

/// Number of rational points of `m`-dimensional projective space over `F_q`,
/// `q^m + ... + q + 1`, and `0` for negative `m`.
pub fn projective_count(q: u64, m: i64) -> u128 {
    if m < 0 {
        return 0;
    }
    (0..=m as u32).map(|i| (q as u128).pow(i)).sum()
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projective_counts() {
        assert_eq!(projective_count(4, 2), 21);
        assert_eq!(projective_count(19, 2), 381);
        assert_eq!(projective_count(7, 0), 1);
        assert_eq!(projective_count(7, -1), 0);
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(19), Some((19, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(18, 2), 153);
        assert_eq!(binomial(3, 5), 0);
    }

    #[test]
    fn gcd_lcm() {
        assert_eq!(lcm_all([1, 2, 8]), 8);
        assert_eq!(gcd_all([4, 6, 10]), 2);
        assert_eq!(gcd_all(std::iter::empty()), 0);
    }
}
