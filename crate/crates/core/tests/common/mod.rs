//! Shared generators and property checks for the integration suites. Each
//! check returns `Err` with a description of the first counterexample.
#![allow(dead_code)]

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use prehomog::bernstein::{apply_operator, bfunction, extract_cofactor, fourier_check, symmetry_check, Cofactor};
use prehomog::fixtures::{named, NAMES};
use prehomog::geometry::point_context;
use prehomog::liealg::{character, discriminant, dual_character_check, euler_coordinates, GeneratorSet};
use prehomog::linalg::Matrix;
use prehomog::poly::{is_squarefree, vars, Monomial, MultiPoly, Vars};
use prehomog::rational::{frac, rat, Rational};

pub type Check = Result<(), String>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_rational(r: &mut impl Rng) -> Rational {
    frac(r.gen_range(-6..=6), r.gen_range(1..=4))
}

/// A random polynomial with at most `terms` terms of degree at most `max_deg`.
pub fn random_poly(r: &mut impl Rng, v: &Vars, terms: usize, max_deg: u32) -> MultiPoly {
    let n = v.len();
    let items: Vec<(Monomial, Rational)> = (0..r.gen_range(1..=terms))
        .map(|_| {
            let mut e = vec![0u32; n];
            let mut budget = r.gen_range(0..=max_deg);
            while budget > 0 {
                e[r.gen_range(0..n)] += 1;
                budget -= 1;
            }
            (Monomial::from_dense(&e), small_rational(r))
        })
        .collect();
    MultiPoly::from_terms(v.clone(), items)
}

pub fn random_matrix(r: &mut impl Rng, n: usize) -> Matrix {
    Matrix::from_rows((0..n).map(|_| (0..n).map(|_| small_rational(r)).collect()).collect()).unwrap()
}

pub fn fixture_generators(name: &str) -> GeneratorSet {
    named(name).unwrap().generators().unwrap()
}

/// `d(pq) = dp q + p dq` in every variable.
pub fn product_rule(cases: usize, seed: u64) -> Check {
    let mut r = rng(seed);
    let v = vars(&["x", "y", "z"]);
    for case in 0..cases {
        let p = random_poly(&mut r, &v, 5, 4);
        let q = random_poly(&mut r, &v, 5, 4);
        for var in v.iter() {
            let lhs = (&p * &q).derivative(var).unwrap();
            let rhs = &(&p.derivative(var).unwrap() * &q) + &(&p * &q.derivative(var).unwrap());
            if lhs != rhs {
                return Err(format!("case {case}: product rule fails for p = {p}, q = {q} in {var}"));
            }
        }
    }
    Ok(())
}

/// `h^2 k` is never reported squarefree.
pub fn squarefree_oracle(cases: usize, seed: u64) -> Check {
    let mut r = rng(seed);
    let v = vars(&["x", "y", "z"]);
    let mut done = 0;
    while done < cases {
        let h = random_poly(&mut r, &v, 3, 2);
        let k = random_poly(&mut r, &v, 3, 2);
        if h.total_degree().unwrap_or(0) == 0 || k.is_zero() {
            continue;
        }
        let p = &h.pow(2) * &k;
        if is_squarefree(&p, 8, done as u64).map_err(|e| e.to_string())? {
            return Err(format!("h^2 k reported squarefree for h = {h}, k = {k}"));
        }
        done += 1;
    }
    Ok(())
}

/// The Fourier transform of `delta_A - s tr(A)` is `delta_{-A^t} + (-s-1) tr(A)`,
/// and any other trace shift breaks it.
pub fn fourier_identity(cases: usize, seed: u64) -> Check {
    let mut r = rng(seed);
    for case in 0..cases {
        let n = r.gen_range(1..=4);
        let a = random_matrix(&mut r, n);
        if !fourier_check(&a, &a.trace()).map_err(|e| e.to_string())? {
            return Err(format!("case {case}: identity fails for {a}"));
        }
        let off = &a.trace() + &small_rational(&mut r);
        if off != a.trace() && fourier_check(&a, &off).map_err(|e| e.to_string())? {
            return Err(format!("case {case}: identity holds with wrong trace {off} for {a}"));
        }
    }
    Ok(())
}

/// Every fixture whose Euler field lies in the span has `d chi(E/n) = 1`.
pub fn euler_character() -> Check {
    for name in NAMES {
        let g = fixture_generators(name);
        let Some(coords) = euler_coordinates(&g).map_err(|e| e.to_string())? else {
            continue;
        };
        let f = discriminant(&g).unwrap();
        let c = character(&g, &f).unwrap();
        if c.evaluate(&coords) != rat(1) {
            return Err(format!("{name}: d chi(E/n) = {}", c.evaluate(&coords)));
        }
    }
    Ok(())
}

/// `dim isotropy + dim tangent = n` at random integer points.
pub fn rank_nullity(points: usize, seed: u64) -> Check {
    let mut r = rng(seed);
    for name in NAMES {
        let g = fixture_generators(name);
        let n = g.n();
        for k in 0..points {
            // a third of the points lie on coordinate subspaces to hit small orbits
            let x0: Vec<Rational> = (0..n)
                .map(|_| if k % 3 == 0 && r.gen_bool(0.5) { Rational::zero() } else { rat(r.gen_range(-5..=5)) })
                .collect();
            let ctx = point_context(&g, &x0).map_err(|e| e.to_string())?;
            if ctx.isotropy.len() + ctx.tangent_dim() != n || ctx.normal_dim() != n - ctx.tangent_dim() {
                return Err(format!("{name}: rank-nullity fails at {x0:?}"));
            }
        }
    }
    Ok(())
}

/// `d chi_f - d chi_{f*} = 2 tr` on linear free divisor fixtures with `f* != 0`.
pub fn difference_formula() -> Check {
    for name in ["nc-1", "nc-2", "nc-3", "nc-4", "b2", "c-b2", "c2-g2", "c-g3", "gl2-cubics", "star-2111"] {
        let g = fixture_generators(name);
        match dual_character_check(&g) {
            Ok(rep) if rep.holds() => {}
            Ok(rep) => return Err(format!("{name}: {rep:?}")),
            Err(prehomog::Error::DualDegenerate) => {}
            Err(e) => return Err(format!("{name}: {e}")),
        }
    }
    Ok(())
}

/// Monic `b` does not depend on the scaling of `f*`; the raw leading
/// coefficient scales with it.
pub fn scalar_robustness(seed: u64) -> Check {
    let mut r = rng(seed);
    for name in ["nc-2", "nc-3", "det2", "gl2-cubics"] {
        let g = fixture_generators(name);
        let f = discriminant(&g).unwrap();
        let fstar = discriminant(&prehomog::liealg::dual_generators(&g)).unwrap().rename(f.vars().clone()).unwrap();
        let base = match extract_cofactor(&apply_operator(&fstar, &f).unwrap(), &f).unwrap() {
            Cofactor::Holds(b) => b,
            Cofactor::Fails { reason } => return Err(format!("{name}: {reason}")),
        };
        let mut c = small_rational(&mut r);
        if c.is_zero() {
            c = rat(3);
        }
        let scaled = match extract_cofactor(&apply_operator(&fstar.scale(&c), &f).unwrap(), &f).unwrap() {
            Cofactor::Holds(b) => b,
            Cofactor::Fails { reason } => return Err(format!("{name} scaled: {reason}")),
        };
        if scaled.b != base.b || scaled.raw_leading != &base.raw_leading * &c {
            return Err(format!("{name}: scaling f* by {c} changed the monic b-function"));
        }
    }
    Ok(())
}

/// The reductive fixtures whose b-function is computed here.
pub const REDUCTIVE: &[&str] = &["nc-1", "nc-2", "nc-3", "nc-4", "det2", "gl2-cubics", "atilde-2", "star-2111"];

/// `b~(s) = (-1)^d b~(-s-2)` for each computed reductive b-function.
pub fn reductive_symmetry() -> Check {
    for name in REDUCTIVE {
        let run = bfunction(&fixture_generators(name)).map_err(|e| e.to_string())?;
        let res = run.result().ok_or_else(|| format!("{name}: functional equation failed"))?;
        if !symmetry_check(&res.b) {
            return Err(format!("{name}: b = {} is not symmetric", res.b));
        }
    }
    Ok(())
}
