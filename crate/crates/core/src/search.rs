//! Exhaustive maximization of the zero count of `Σ c_j v_j` over nonzero
//! coefficient vectors up to scaling, where the `v_j` are value vectors
//! (evaluations of a basis at a fixed list of points).
//!
//! Vectors are normalized so that the first nonzero coefficient is 1. For
//! each leading position the remaining coefficients are swept by a
//! mixed-radix odometer that updates the value vector and the zero count
//! incrementally. Work is split over the high digits and run on rayon;
//! ties are broken by enumeration order, so results do not depend on the
//! thread count.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::FieldCtx;

/// Default cap on the number of coefficient vectors tried.
pub const SEARCH_BUDGET: u128 = 100_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    /// Number of projective coefficient vectors examined.
    pub candidates: u128,
    /// Largest zero count over all candidates.
    pub max_zeros: usize,
    /// Coefficient indices of the first candidate reaching `max_zeros`.
    pub argmax: Vec<u32>,
    /// Largest zero count among candidates whose value vector is not
    /// identically zero, with its first witness.
    pub max_proper: Option<(usize, Vec<u32>)>,
}

/// `(q^k - 1)/(q - 1)`.
pub fn candidate_count(q: u32, k: usize) -> u128 {
    let q = q as u128;
    let mut acc: u128 = 0;
    for _ in 0..k {
        acc = acc.saturating_mul(q).saturating_add(1);
    }
    acc
}

struct Unit {
    lead: usize,
    high_len: usize,
    high_value: u64,
}

#[derive(Clone)]
struct Best {
    zeros: usize,
    coeffs: Vec<u32>,
}

struct UnitResult {
    best: Best,
    proper: Option<Best>,
}

/// Runs the search. `rows[j][pt]` is the field index of the `j`-th basis
/// vector at point `pt`; all rows must have the same length.
pub fn max_zeros(field: &FieldCtx, rows: &[Vec<u32>], budget: u128) -> Result<SearchOutcome> {
    let k = rows.len();
    if k == 0 {
        return Err(Error::Precondition("empty basis".into()));
    }
    let n = rows[0].len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(Error::Inconsistent("rows of different length".into()));
    }
    let q = field.order();
    let candidates = candidate_count(q, k);
    if candidates > budget {
        return Err(Error::Budget {
            what: "coefficient vectors",
            needed: candidates,
            cap: budget,
        });
    }

    // delta[pos][v] = (elem(v+1) - elem(v)) * rows[pos], with v+1 taken mod q
    let delta: Vec<Vec<Vec<u32>>> = rows
        .iter()
        .map(|row| {
            (0..q)
                .map(|v| {
                    let step = field.sub_idx((v + 1) % q, v);
                    row.iter().map(|&x| field.mul_idx(step, x)).collect()
                })
                .collect()
        })
        .collect();

    let mut units = Vec::new();
    for lead in 0..k {
        let tail = k - 1 - lead;
        let mut high_len = 0;
        let mut span: u64 = 1;
        while high_len < tail && span < 256 {
            high_len += 1;
            span *= q as u64;
        }
        for high_value in 0..span {
            units.push(Unit {
                lead,
                high_len,
                high_value,
            });
        }
    }

    let results: Vec<UnitResult> = units
        .par_iter()
        .map(|u| run_unit(field, rows, &delta, u))
        .collect();

    let mut best: Option<Best> = None;
    let mut proper: Option<Best> = None;
    for r in results {
        if best.as_ref().is_none_or(|b| r.best.zeros > b.zeros) {
            best = Some(r.best);
        }
        if let Some(p) = r.proper {
            if proper.as_ref().is_none_or(|b| p.zeros > b.zeros) {
                proper = Some(p);
            }
        }
    }
    let best = best.expect("at least one unit");
    Ok(SearchOutcome {
        candidates,
        max_zeros: best.zeros,
        argmax: best.coeffs,
        max_proper: proper.map(|b| (b.zeros, b.coeffs)),
    })
}

fn run_unit(field: &FieldCtx, rows: &[Vec<u32>], delta: &[Vec<Vec<u32>>], u: &Unit) -> UnitResult {
    let k = rows.len();
    let n = rows[0].len();
    let q = field.order();
    let mut coeffs = vec![0u32; k];
    coeffs[u.lead] = 1;
    let mut hv = u.high_value;
    for pos in (k - u.high_len..k).rev() {
        coeffs[pos] = (hv % q as u64) as u32;
        hv /= q as u64;
    }
    let mut values = rows[u.lead].clone();
    for pos in k - u.high_len..k {
        if coeffs[pos] != 0 {
            for (v, &x) in values.iter_mut().zip(&rows[pos]) {
                *v = field.add_idx(*v, field.mul_idx(coeffs[pos], x));
            }
        }
    }
    let mut zeros = values.iter().filter(|&&v| v == 0).count();
    let mut best = Best {
        zeros,
        coeffs: coeffs.clone(),
    };
    let mut proper = (zeros < n).then(|| best.clone());

    let low_start = u.lead + 1;
    let low_end = k - u.high_len;
    loop {
        // advance the odometer; the last low position is least significant
        let mut pos = low_end;
        loop {
            if pos == low_start {
                return UnitResult { best, proper };
            }
            pos -= 1;
            let v = coeffs[pos];
            let d = &delta[pos][v as usize];
            for (val, &dx) in values.iter_mut().zip(d) {
                if dx != 0 {
                    let old = *val;
                    let new = field.add_idx(old, dx);
                    *val = new;
                    zeros = zeros + (new == 0) as usize - (old == 0) as usize;
                }
            }
            coeffs[pos] = (v + 1) % q;
            if coeffs[pos] != 0 {
                break;
            }
        }
        if zeros > best.zeros {
            best.zeros = zeros;
            best.coeffs.copy_from_slice(&coeffs);
        }
        if zeros < n && proper.as_ref().is_none_or(|p| zeros > p.zeros) {
            proper = Some(Best {
                zeros,
                coeffs: coeffs.clone(),
            });
        }
    }
}
