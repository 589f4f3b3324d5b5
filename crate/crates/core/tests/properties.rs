use std::sync::Arc;

use proptest::prelude::*;
use wps_core::codes::{build_code, CodeKind};
use wps_core::delorme::delorme_reduce;
use wps_core::poly::monomial_basis;
use wps_core::space::{canonicalize, enumerate_points, orbit, ENUMERATION_BUDGET};
use wps_core::zeros::count_zeros;
use wps_core::{arith, FieldCtx, Polynomial, WeightSystem, WeightedPolynomial};

const ORDERS: [u64; 8] = [2, 3, 4, 5, 7, 8, 9, 16];

fn field(q: u64) -> Arc<FieldCtx> {
    Arc::new(FieldCtx::with_order(q).unwrap())
}

fn weights(max_m: usize, max_w: u32) -> impl Strategy<Value = WeightSystem> {
    prop::collection::vec(1..=max_w, 2..=max_m + 1)
        .prop_filter_map("gcd 1", |w| WeightSystem::new(w).ok())
}

fn poly_in(f: &FieldCtx, ws: &WeightSystem, d: u64, coeffs: &[u32]) -> Option<WeightedPolynomial> {
    let basis = monomial_basis(ws, d);
    let terms: Vec<_> = basis
        .into_iter()
        .zip(coeffs.iter().cycle())
        .map(|(m, &c)| (m, f.elem(c % f.order())))
        .collect();
    let p = Polynomial::from_terms(f, ws.len(), terms);
    (!p.is_zero()).then(|| WeightedPolynomial::new(ws, d, p).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 128,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn field_axioms(qi in 0..ORDERS.len(), a in 0u32..1024, b in 0u32..1024, c in 0u32..1024) {
        let f = field(ORDERS[qi]);
        let q = f.order();
        let (a, b, c) = (f.elem(a % q), f.elem(b % q), f.elem(c % q));
        prop_assert_eq!(f.add(a, b), f.add(b, a));
        prop_assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a)), f.one());
            prop_assert_eq!(f.pow(a, q as u64 - 1), f.one());
        }
    }

    #[test]
    fn canonical_form_is_constant_on_orbits(
        ws in weights(3, 6),
        qi in 0..5usize,
        raw in prop::collection::vec(0u32..9, 4),
    ) {
        let f = field(ORDERS[qi]);
        let raw: Vec<_> = raw.iter().take(ws.len()).map(|&x| f.elem(x % f.order())).collect();
        prop_assume!(raw.len() == ws.len() && raw.iter().any(|x| !x.is_zero()));
        let c = canonicalize(&ws, &f, &raw).unwrap();
        let reps = orbit(&ws, &f, &raw).unwrap();
        prop_assert_eq!(reps.len(), f.order() as usize - 1);
        prop_assert!(reps.contains(&c.coords().to_vec()));
        for r in &reps {
            prop_assert_eq!(&canonicalize(&ws, &f, r).unwrap(), &c);
        }
    }

    #[test]
    fn point_count_matches_projective_space(ws in weights(3, 5), qi in 0..5usize) {
        let f = field(ORDERS[qi]);
        let pts = enumerate_points(&ws, &f, ENUMERATION_BUDGET).unwrap();
        prop_assert_eq!(pts.len() as u128, arith::projective_count(f.order() as u64, ws.dim() as i64));
    }

    #[test]
    fn zeros_of_product_are_union(
        ws in weights(2, 3),
        qi in 0..4usize,
        da in 1u64..5, db in 1u64..5,
        ca in prop::collection::vec(0u32..16, 1..8),
        cb in prop::collection::vec(0u32..16, 1..8),
    ) {
        let f = field(ORDERS[qi]);
        let (Some(a), Some(b)) = (poly_in(&f, &ws, da, &ca), poly_in(&f, &ws, db, &cb)) else {
            return Ok(());
        };
        let pts = enumerate_points(&ws, &f, ENUMERATION_BUDGET).unwrap();
        let ab = a.mul(&f, &b);
        let union = pts
            .points()
            .iter()
            .filter(|p| a.evaluate(&f, p.coords()).is_zero() || b.evaluate(&f, p.coords()).is_zero())
            .count();
        prop_assert_eq!(count_zeros(&ab, &pts).unwrap(), union);
        prop_assert!(count_zeros(&a, &pts).unwrap() <= union);
    }

    #[test]
    fn reduction_preserves_zero_counts(
        target in weights(2, 3),
        i in 0usize..3,
        b in 2u32..4,
        qi in 0..3usize,
        d in 1u64..5,
        coeffs in prop::collection::vec(0u32..16, 1..10),
    ) {
        let i = i % target.len();
        let src: Vec<u32> = target
            .weights()
            .iter()
            .enumerate()
            .map(|(j, &a)| if j == i { a } else { a * b })
            .collect();
        let Ok(src) = WeightSystem::new(src) else { return Ok(()) };
        let Ok(step) = delorme_reduce(&src, i, b) else { return Ok(()) };
        let f = field(ORDERS[qi]);
        let Some(g) = poly_in(&f, &target, d, &coeffs) else { return Ok(()) };
        let lifted = step.lift_poly(&f, &g).unwrap();
        prop_assert_eq!(&step.map_poly(&f, &lifted).unwrap(), &g);
        let sp = enumerate_points(&src, &f, ENUMERATION_BUDGET).unwrap();
        let tp = enumerate_points(&target, &f, ENUMERATION_BUDGET).unwrap();
        prop_assert_eq!(count_zeros(&lifted, &sp).unwrap(), count_zeros(&g, &tp).unwrap());
    }

    #[test]
    fn codeword_weight_counts_nonzeros(
        qi in 0..3usize,
        d in 1u64..4,
        coeffs in prop::collection::vec(0u32..16, 1..12),
    ) {
        let f = field(ORDERS[qi]);
        let ws = WeightSystem::new(vec![1, 1, 2]).unwrap();
        let d = 2 * d;
        let code = build_code(CodeKind::Wprm, &f, 2, d, Some(&ws)).unwrap();
        let Some(g) = poly_in(&f, &ws, d, &coeffs) else { return Ok(()) };
        let word = code.encode(&g).unwrap();
        let weight = word.iter().filter(|&&x| x != 0).count();
        let pts = enumerate_points(&ws, &f, ENUMERATION_BUDGET).unwrap();
        prop_assert_eq!(weight, code.length() - count_zeros(&g, &pts).unwrap());
    }
}
