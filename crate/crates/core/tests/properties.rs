mod common;

use proptest::prelude::*;

use prehomog::bernstein::{apply_derivation, apply_operator, bfunction, Differentiator, SPowerExpression};
use prehomog::fixtures::named;
use prehomog::poly::{rational_root_spectrum, vars, Monomial, MultiPoly, UniPoly, Vars};
use prehomog::rational::{frac, rat, Rational};

fn xyz_vars() -> Vars {
    vars(&["x", "y", "z"])
}

fn poly_strategy(max_terms: usize, max_exp: u32) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::collection::vec(0..=max_exp, 3), -5i64..=5, 1i64..=4), 0..=max_terms).prop_map(
        |terms| {
            MultiPoly::from_terms(
                xyz_vars(),
                terms.into_iter().map(|(e, n, d)| (Monomial::from_dense(&e), frac(n, d))),
            )
        },
    )
}

/// Homogeneous cubics in `x, y, z`.
fn cubic_strategy() -> impl Strategy<Value = MultiPoly> {
    let monomials: Vec<[u32; 3]> = (0..=3u32)
        .flat_map(|a| (0..=3 - a).map(move |b| [a, b, 3 - a - b]))
        .collect();
    prop::collection::vec(-3i64..=3, monomials.len()).prop_map(move |cs| {
        MultiPoly::from_terms(
            xyz_vars(),
            monomials.iter().zip(cs).map(|(e, c)| (Monomial::from_dense(e), rat(c))),
        )
    })
}

fn roots_strategy() -> impl Strategy<Value = Vec<(Rational, u32)>> {
    prop::collection::vec((-8i64..=8, 1i64..=6, 1u32..=3), 1..=4).prop_map(|v| {
        v.into_iter().map(|(n, d, m)| (frac(n, d), m)).collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn product_rule(p in poly_strategy(5, 3), q in poly_strategy(5, 3), var in 0usize..3) {
        let name = ["x", "y", "z"][var];
        let lhs = (&p * &q).derivative(name).unwrap();
        let rhs = &(&p.derivative(name).unwrap() * &q) + &(&p * &q.derivative(name).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn sum_then_difference(p in poly_strategy(6, 3), q in poly_strategy(6, 3)) {
        prop_assert_eq!(&(&p + &q) - &q, p);
    }

    #[test]
    fn degrees_add(p in poly_strategy(4, 3), q in poly_strategy(4, 3)) {
        prop_assume!(!p.is_zero() && !q.is_zero());
        prop_assert_eq!((&p * &q).total_degree(), Some(p.total_degree().unwrap() + q.total_degree().unwrap()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn spectrum_of_a_product_of_linear_factors(roots in roots_strategy()) {
        let b = UniPoly::from_roots(&roots);
        let sp = rational_root_spectrum(&b).unwrap();
        prop_assert_eq!(&sp.residual, &UniPoly::one());
        prop_assert_eq!(UniPoly::from_roots(&sp.roots), b);
        let flat: u32 = roots.iter().map(|r| r.1).sum();
        prop_assert_eq!(sp.root_count(), flat);
        prop_assert!(sp.roots.windows(2).all(|w| w[0].0 > w[1].0));
    }

    #[test]
    fn derivation_bookkeeping(steps in prop::collection::vec(0usize..3, 0..=4)) {
        let v = xyz_vars();
        let f = &(&MultiPoly::var_index(v.clone(), 0) * &MultiPoly::var_index(v.clone(), 1))
            + &MultiPoly::var_index(v.clone(), 2).pow(2);
        let d = Differentiator::new(&f);
        let mut e = SPowerExpression::initial(v.clone());
        for &k in &steps {
            e = d.apply_derivation(&e, k).unwrap();
            let by_name = apply_derivation(&SPowerExpression::initial(v.clone()), &v[k], &f).unwrap();
            prop_assert_eq!(by_name.offset(), 1);
        }
        prop_assert_eq!(e.offset() as usize, steps.len());
        prop_assert!(e.is_zero() || e.s_degree().unwrap() <= steps.len());
    }

    #[test]
    fn operator_is_linear(p in cubic_strategy(), q in cubic_strategy()) {
        let v = xyz_vars();
        let f = &(&MultiPoly::var_index(v.clone(), 0) * &MultiPoly::var_index(v.clone(), 1))
            * &MultiPoly::var_index(v, 2);
        let sum = &p + &q;
        prop_assume!(!p.is_zero() && !q.is_zero() && !sum.is_zero());
        let lhs = apply_operator(&sum, &f).unwrap();
        let rhs = apply_operator(&p, &f).unwrap().try_add(&apply_operator(&q, &f).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

/// Differentiates `f^{m+1}` directly by the monomials of `f*` and compares
/// with `b(m) f^m`, for integer `m`.
fn integer_specialization(name: &str, max_m: u32) {
    let g = named(name).unwrap().generators().unwrap();
    let run = bfunction(&g).unwrap();
    let b = run.result().expect("functional equation holds");
    let f = &run.f;
    let fstar = run.fstar.rename(f.vars().clone()).unwrap();
    let raw = b.b.scale(&b.raw_leading);
    for m in 1..=max_m {
        let power = f.pow(m + 1);
        let mut applied = MultiPoly::zero(f.vars().clone());
        for (mono, c) in fstar.terms() {
            let mut t = power.clone();
            for &(var, e) in mono.pairs() {
                for _ in 0..e {
                    t = t.derivative_index(var as usize);
                }
            }
            applied = &applied + &t.scale(c);
        }
        let expected = f.pow(m).scale(&raw.eval(&rat(m as i64)));
        assert_eq!(applied, expected, "{name} at s = {m}");
    }
}

#[test]
fn integer_specialization_oracle() {
    integer_specialization("nc-2", 4);
    integer_specialization("nc-3", 4);
    integer_specialization("det2", 2);
}

#[test]
fn shared_property_checks() {
    common::squarefree_oracle(30, 11).unwrap();
    common::fourier_identity(30, 12).unwrap();
    common::euler_character().unwrap();
    common::rank_nullity(10, 13).unwrap();
    common::difference_formula().unwrap();
    common::scalar_robustness(14).unwrap();
}
