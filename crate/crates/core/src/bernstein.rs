//! The b-function engine.
//!
//! `f*(d/dx)` is applied to `f^{s+1}` symbolically: an expression
//! `f^{s+1-k} * P` with `P in Q[s][x]` is differentiated one variable at a
//! time, so after all `n` derivations of a degree-`n` monomial the result is
//! `f^{s+1-n} * Q`. If `Q = b(s) * f^{n-1}` the functional equation
//! `f*(d) f^{s+1} = b(s) f^s` holds and `b` is read off.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::liealg::{character, discriminant, dual_generators, is_special, GeneratorSet};
use crate::linalg::Matrix;
use crate::poly::{deserialize_roots, rational_root_spectrum, Monomial, MultiPoly, Spectrum, UniPoly, Vars};
use crate::rational::{format_rational, rat, serde_str, Rational};

/// `f^{s+1-k} * P` where `P` has coefficients in `Q[s]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SPowerExpression {
    k: u32,
    vars: Vars,
    terms: BTreeMap<Monomial, UniPoly>,
}

impl SPowerExpression {
    /// `f^{s+1}`.
    pub fn initial(vars: Vars) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::one(), UniPoly::one());
        SPowerExpression { k: 0, vars, terms }
    }

    pub fn new(k: u32, vars: Vars, terms: impl IntoIterator<Item = (Monomial, UniPoly)>) -> Self {
        let mut e = SPowerExpression { k, vars, terms: BTreeMap::new() };
        for (m, c) in terms {
            e.add_term(m, &c);
        }
        e
    }

    /// `f^{s+1-k} * p` for a polynomial `p` with constant coefficients in `s`.
    pub fn from_poly(k: u32, p: &MultiPoly) -> Self {
        SPowerExpression::new(
            k,
            p.vars().clone(),
            p.terms().map(|(m, c)| (m.clone(), UniPoly::constant(c.clone()))),
        )
    }

    pub fn offset(&self) -> u32 {
        self.k
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &UniPoly)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> UniPoly {
        self.terms.get(m).cloned().unwrap_or_else(UniPoly::zero)
    }

    /// Largest degree in `s` over all coefficients.
    pub fn s_degree(&self) -> Option<usize> {
        self.terms.values().filter_map(UniPoly::degree).max()
    }

    fn add_term(&mut self, m: Monomial, c: &UniPoly) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Sum of two expressions with the same offset.
    pub fn try_add(&self, other: &SPowerExpression) -> Result<SPowerExpression> {
        if self.k != other.k {
            return Err(Error::Domain(format!(
                "cannot add expressions with offsets {} and {}",
                self.k, other.k
            )));
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> SPowerExpression {
        SPowerExpression::new(self.k, self.vars.clone(), self.terms.iter().map(|(m, p)| (m.clone(), p.scale(c))))
    }

    /// Multiplies `P` by a polynomial with constant coefficients in `s`
    /// and by a polynomial `w(s)`, keeping the offset.
    fn mul_poly(&self, p: &MultiPoly, w: &UniPoly) -> Result<HashMap<Monomial, UniPoly>> {
        let mut acc: HashMap<Monomial, UniPoly> = HashMap::new();
        for (mp, cp) in p.terms() {
            let factor = w.scale(cp);
            for (m, c) in &self.terms {
                let prod = &factor * c;
                let key = m.try_mul(mp)?;
                match acc.get_mut(&key) {
                    Some(v) => *v = &*v + &prod,
                    None => {
                        acc.insert(key, prod);
                    }
                }
            }
        }
        Ok(acc)
    }

    /// `d/dx_var` applied to the coefficients of `P` only.
    fn derivative_of_p(&self, var: usize) -> SPowerExpression {
        let mut out = SPowerExpression { k: self.k, vars: self.vars.clone(), terms: BTreeMap::new() };
        for (m, c) in &self.terms {
            if let Some((e, dm)) = m.differentiate(var) {
                out.add_term(dm, &c.scale(&rat(e as i64)));
            }
        }
        out
    }
}

/// Partial derivatives of `f`, computed once per engine run.
#[derive(Clone, Debug)]
pub struct Differentiator {
    f: MultiPoly,
    partials: Vec<MultiPoly>,
}

impl Differentiator {
    pub fn new(f: &MultiPoly) -> Self {
        let partials = (0..f.nvars()).map(|i| f.derivative_index(i)).collect();
        Differentiator { f: f.clone(), partials }
    }

    pub fn f(&self) -> &MultiPoly {
        &self.f
    }

    /// `d/dx_var (f^{s+1-k} P) = f^{s-k} ((s+1-k) * df/dx_var * P + f * dP/dx_var)`.
    pub fn apply_derivation(&self, e: &SPowerExpression, var: usize) -> Result<SPowerExpression> {
        if var >= self.f.nvars() {
            return Err(Error::Dimension(format!("variable index {var} out of range")));
        }
        let exponent = UniPoly::new(vec![rat(1) - rat(e.k as i64), Rational::one()]);
        let mut acc = e.mul_poly(&self.partials[var], &exponent)?;
        let dp = e.derivative_of_p(var);
        if !dp.is_zero() {
            for (m, c) in dp.mul_poly(&self.f, &UniPoly::one())? {
                match acc.get_mut(&m) {
                    Some(v) => *v = &*v + &c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Ok(SPowerExpression::new(e.k + 1, e.vars.clone(), acc))
    }

    /// Applies `sum_i (A x)_i d/dx_i` to `e`.
    pub fn apply_vector_field(&self, e: &SPowerExpression, a: &Matrix) -> Result<SPowerExpression> {
        let vars = e.vars.clone();
        let mut out = SPowerExpression { k: e.k + 1, vars: vars.clone(), terms: BTreeMap::new() };
        for i in 0..a.rows() {
            if a.row(i).iter().all(Zero::is_zero) {
                continue;
            }
            let d = self.apply_derivation(e, i)?;
            let lin = MultiPoly::linear_form(vars.clone(), a.row(i));
            for (m, c) in d.mul_poly(&lin, &UniPoly::one())? {
                out.add_term(m, &c);
            }
        }
        Ok(out)
    }
}

/// Single derivation step on `e` (see [`Differentiator::apply_derivation`]).
pub fn apply_derivation(e: &SPowerExpression, var: &str, f: &MultiPoly) -> Result<SPowerExpression> {
    let i = f.variable_index(var)?;
    Differentiator::new(f).apply_derivation(e, i)
}

/// `f*(d/dx) f^{s+1} = f^{s+1-n} * Q`, with the variables of `fstar`
/// identified positionally with those of `f`.
pub fn apply_operator(fstar: &MultiPoly, f: &MultiPoly) -> Result<SPowerExpression> {
    let n = f.total_degree().ok_or_else(|| Error::Domain("f is zero".into()))?;
    if fstar.nvars() != f.nvars() {
        return Err(Error::Dimension(format!(
            "f* has {} variables, f has {}",
            fstar.nvars(),
            f.nvars()
        )));
    }
    if !fstar.is_homogeneous() || fstar.total_degree() != Some(n) {
        return Err(Error::Dimension(format!(
            "f* must be homogeneous of degree {n} = deg f"
        )));
    }
    let engine = Differentiator::new(f);
    let monomials: Vec<(&Monomial, &Rational)> = fstar.terms().collect();
    let pieces: Vec<Result<SPowerExpression>> = monomials
        .par_iter()
        .map(|(m, c)| {
            let mut e = SPowerExpression::initial(f.vars().clone());
            for &(v, exp) in m.pairs() {
                for _ in 0..exp {
                    e = engine.apply_derivation(&e, v as usize)?;
                }
            }
            Ok(e.scale(c))
        })
        .collect();
    let mut total = SPowerExpression { k: n as u32, vars: f.vars().clone(), terms: BTreeMap::new() };
    for piece in pieces {
        total = total.try_add(&piece?)?;
    }
    Ok(total)
}

/// A successfully extracted b-function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BResult {
    /// Monic `b(s)`.
    pub b: UniPoly,
    /// Leading coefficient before normalization; depends on the scaling of `f*`.
    pub raw_leading: Rational,
    pub spectrum: Spectrum,
    pub degree: usize,
}

impl BResult {
    pub fn from_raw(raw: &UniPoly) -> Result<Self> {
        let raw_leading = raw
            .leading()
            .cloned()
            .ok_or_else(|| Error::Domain("zero b-function".into()))?;
        let b = raw.monic();
        let spectrum = rational_root_spectrum(&b)?;
        Ok(BResult { degree: b.degree().unwrap_or(0), b, raw_leading, spectrum })
    }

    pub fn is_symmetric(&self) -> bool {
        symmetry_check(&self.b)
    }
}

/// Outcome of matching `Q` against `b(s) * f^{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cofactor {
    Holds(BResult),
    /// The functional equation does not hold.
    Fails { reason: String },
}

impl Cofactor {
    pub fn result(&self) -> Option<&BResult> {
        match self {
            Cofactor::Holds(r) => Some(r),
            Cofactor::Fails { .. } => None,
        }
    }
}

pub const FAILURE_MESSAGE: &str = "functional equation does not hold";

pub fn extract_cofactor(q: &SPowerExpression, f: &MultiPoly) -> Result<Cofactor> {
    let n = f.total_degree().ok_or_else(|| Error::Domain("f is zero".into()))? as u32;
    if q.k != n {
        return Err(Error::Domain(format!("expression offset {} differs from deg f = {n}", q.k)));
    }
    let power = f.try_pow(n.saturating_sub(1))?;
    let (beta, c_beta) = power.leading_term().expect("power of a nonzero polynomial");
    let b = q.coefficient(beta).scale(&c_beta.recip());
    if b.is_zero() {
        return Ok(Cofactor::Fails { reason: format!("{FAILURE_MESSAGE}: no multiple of f^s") });
    }
    let mut mismatched = q.terms.keys().filter(|m| power.coefficient(m).is_zero()).count();
    for (m, c) in power.terms() {
        if q.coefficient(m) != b.scale(c) {
            mismatched += 1;
        }
    }
    if mismatched > 0 {
        return Ok(Cofactor::Fails {
            reason: format!("{FAILURE_MESSAGE}: {mismatched} monomials of the residual are nonzero"),
        });
    }
    Ok(Cofactor::Holds(BResult::from_raw(&b)?))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BOutcome {
    Held(BResult),
    Failed(String),
    /// `f* = 0`: the dual is not a prehomogeneous determinant.
    DualDegenerate,
}

#[derive(Clone, Debug)]
pub struct BFunctionRun {
    pub f: MultiPoly,
    pub fstar: MultiPoly,
    pub special: bool,
    pub outcome: BOutcome,
}

impl BFunctionRun {
    pub fn result(&self) -> Option<&BResult> {
        match &self.outcome {
            BOutcome::Held(r) => Some(r),
            _ => None,
        }
    }
}

/// Discriminant, dual discriminant, `f*(d) f^{s+1}`, and cofactor in one go.
pub fn bfunction(g: &GeneratorSet) -> Result<BFunctionRun> {
    let f = discriminant(g)?;
    if f.is_zero() {
        return Err(Error::Domain("discriminant vanishes; no b-function".into()));
    }
    let special = is_special(&character(g, &f)?);
    let fstar = discriminant(&dual_generators(g))?;
    if fstar.is_zero() {
        return Ok(BFunctionRun { f, fstar, special, outcome: BOutcome::DualDegenerate });
    }
    let q = apply_operator(&fstar.rename(f.vars().clone())?, &f)?;
    let outcome = match extract_cofactor(&q, &f)? {
        Cofactor::Holds(r) => BOutcome::Held(r),
        Cofactor::Fails { reason } => BOutcome::Failed(reason),
    };
    Ok(BFunctionRun { f, fstar, special, outcome })
}

/// `b~(s) = (-1)^d b~(-s-2)` for the monic normalization `b~` of degree `d`.
pub fn symmetry_check(b: &UniPoly) -> bool {
    if b.is_zero() {
        return false;
    }
    let m = b.monic();
    m.reflect_about_minus_one() == m
}

/// Checks `(delta_A - s tr(A)) f^s = 0` by applying the operator to `f^s`.
pub fn annihilator_identity_check(a: &Matrix, g: &GeneratorSet) -> Result<bool> {
    let f = discriminant(g)?;
    if f.is_zero() {
        return Err(Error::Domain("discriminant vanishes".into()));
    }
    let engine = Differentiator::new(&f);
    // f^s = f^{s+1-1} * 1
    let fs = SPowerExpression::new(1, f.vars().clone(), [(Monomial::one(), UniPoly::one())]);
    let applied = engine.apply_vector_field(&fs, a)?;
    // s tr(A) f^s = f^{s-1} * (s tr(A) f)
    let shift = SPowerExpression::new(
        2,
        f.vars().clone(),
        f.terms().map(|(m, c)| (m.clone(), UniPoly::s().scale(&(c * a.trace())))),
    );
    Ok(applied.try_add(&shift.scale(&rat(-1)))?.is_zero())
}

/// Letters of words in the Weyl algebra on `n` variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum Letter {
    X(usize),
    D(usize),
}

/// A first order operator with linear coefficients, as a sum of words of
/// length at most two with coefficients in `Q[s]`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct WeylOperator {
    words: BTreeMap<Vec<Letter>, UniPoly>,
}

impl WeylOperator {
    fn add(&mut self, w: Vec<Letter>, c: UniPoly) {
        let entry = self.words.entry(w.clone()).or_insert_with(UniPoly::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.words.remove(&w);
        }
    }

    /// `delta_A + c`, i.e. `sum_ij A_ij x_j d_i + c`.
    fn from_field(a: &Matrix, s_coeff: &UniPoly) -> Self {
        let mut op = WeylOperator::default();
        for i in 0..a.rows() {
            for j in 0..a.cols() {
                if !a[(i, j)].is_zero() {
                    op.add(vec![Letter::X(j), Letter::D(i)], UniPoly::constant(a[(i, j)].clone()));
                }
            }
        }
        op.add(Vec::new(), s_coeff.clone());
        op
    }

    /// Rewrites `d_a x_b` as `x_b d_a + [a = b]` until every word is
    /// normally ordered.
    fn normal_ordered(&self) -> Self {
        let mut out = WeylOperator::default();
        let mut work: Vec<(Vec<Letter>, UniPoly)> = self.words.iter().map(|(w, c)| (w.clone(), c.clone())).collect();
        while let Some((w, c)) = work.pop() {
            let swap = w.windows(2).position(|p| matches!(p, [Letter::D(_), Letter::X(_)]));
            match swap {
                None => out.add(w, c),
                Some(i) => {
                    let (Letter::D(a), Letter::X(b)) = (w[i], w[i + 1]) else { unreachable!() };
                    let mut swapped = w.clone();
                    swapped.swap(i, i + 1);
                    work.push((swapped, c.clone()));
                    if a == b {
                        let mut shorter = w.clone();
                        shorter.drain(i..i + 2);
                        work.push((shorter, c));
                    }
                }
            }
        }
        out
    }

    /// Formal Fourier transform `x_j -> -d_j`, `d_j -> y_j` (dual variables
    /// reuse the indices), followed by normal ordering.
    fn fourier(&self) -> Self {
        let mut out = WeylOperator::default();
        for (w, c) in &self.words {
            let mut sign = 1i64;
            let image: Vec<Letter> = w
                .iter()
                .map(|l| match *l {
                    Letter::X(j) => {
                        sign = -sign;
                        Letter::D(j)
                    }
                    Letter::D(j) => Letter::X(j),
                })
                .collect();
            out.add(image, c.scale(&rat(sign)));
        }
        out.normal_ordered()
    }
}

/// Checks that the Fourier transform of `Q_A(s) = delta_A - s * s_trace`
/// equals `Q*_A(-s-1) = delta*_A + (-s-1) * s_trace`, where
/// `delta*_A = -y^t A d_y`. Holds exactly when `s_trace = tr(A)`.
pub fn fourier_check(a: &Matrix, s_trace: &Rational) -> Result<bool> {
    if !a.is_square() {
        return Err(Error::Dimension("operator matrix must be square".into()));
    }
    let q = WeylOperator::from_field(a, &UniPoly::s().scale(&-s_trace.clone()));
    // Q*_A(t) = delta_{-A^t} + t * s_trace, evaluated at t = -s-1
    let minus_s_minus_one = UniPoly::new(vec![rat(-1), rat(-1)]);
    let expected = WeylOperator::from_field(&-&a.transpose(), &minus_s_minus_one.scale(s_trace));
    Ok(q.fourier() == expected.normal_ordered())
}

/// JSON form of a b-function result.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BReport {
    pub monic_coefficients: UniPoly,
    #[serde(with = "serde_str")]
    pub raw_leading: Rational,
    #[serde(serialize_with = "serialize_roots", deserialize_with = "deserialize_roots")]
    pub roots: Vec<(Rational, u32)>,
    pub residual: UniPoly,
    pub symmetric_about_minus_one: bool,
    pub functional_equation_held: bool,
}

fn serialize_roots<S: serde::Serializer>(roots: &[(Rational, u32)], s: S) -> std::result::Result<S::Ok, S::Error> {
    roots
        .iter()
        .map(|(r, m)| (format_rational(r), *m))
        .collect::<Vec<_>>()
        .serialize(s)
}

impl BReport {
    pub fn from_outcome(outcome: &BOutcome) -> Self {
        match outcome {
            BOutcome::Held(r) => BReport {
                monic_coefficients: r.b.clone(),
                raw_leading: r.raw_leading.clone(),
                roots: r.spectrum.roots.clone(),
                residual: r.spectrum.residual.clone(),
                symmetric_about_minus_one: r.is_symmetric(),
                functional_equation_held: true,
            },
            _ => BReport {
                monic_coefficients: UniPoly::zero(),
                raw_leading: Rational::zero(),
                roots: Vec::new(),
                residual: UniPoly::zero(),
                symmetric_about_minus_one: false,
                functional_equation_held: false,
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::vars;
    use crate::rational::frac;

    fn ctx(names: &[&str]) -> Vars {
        vars(names)
    }

    fn product(vs: &Vars) -> MultiPoly {
        (0..vs.len()).fold(MultiPoly::one(vs.clone()), |acc, i| &acc * &MultiPoly::var_index(vs.clone(), i))
    }

    #[test]
    fn one_derivation_step() {
        let v = ctx(&["x", "y"]);
        let f = product(&v);
        let e = apply_derivation(&SPowerExpression::initial(v.clone()), "y", &f).unwrap();
        assert_eq!(e.offset(), 1);
        let expected = SPowerExpression::new(1, v.clone(), [(Monomial::var(0), UniPoly::from_integers(&[1, 1]))]);
        assert_eq!(e, expected);

        let x = ctx(&["x"]);
        let e = apply_derivation(&SPowerExpression::initial(x.clone()), "x", &product(&x)).unwrap();
        assert_eq!(e.coefficient(&Monomial::one()), UniPoly::from_integers(&[1, 1]));
    }

    #[test]
    fn derivation_in_absent_variable_vanishes() {
        let v = ctx(&["x", "y"]);
        let f = MultiPoly::var(v.clone(), "x").unwrap();
        let e = apply_derivation(&SPowerExpression::initial(v), "y", &f).unwrap();
        assert!(e.is_zero());
        assert_eq!(e.offset(), 1);
    }

    #[test]
    fn operator_on_products_of_coordinates() {
        let v = ctx(&["x", "y"]);
        let f = product(&v);
        let q = apply_operator(&f, &f).unwrap();
        assert_eq!(q.offset(), 2);
        let expected = SPowerExpression::new(2, v, [(Monomial::from_dense(&[1, 1]), UniPoly::from_integers(&[1, 2, 1]))]);
        assert_eq!(q, expected);

        let v3 = ctx(&["x", "y", "z"]);
        let f3 = product(&v3);
        let q3 = apply_operator(&f3, &f3).unwrap();
        let cube = UniPoly::from_integers(&[1, 1]).pow(3);
        assert_eq!(q3, SPowerExpression::new(3, v3, [(Monomial::from_dense(&[2, 2, 2]), cube)]));
    }

    #[test]
    fn degree_mismatch_is_rejected() {
        let v = ctx(&["x", "y"]);
        let f = product(&v);
        let wrong = MultiPoly::var(v, "x").unwrap();
        assert!(apply_operator(&wrong, &f).is_err());
    }

    #[test]
    fn cofactor_for_coordinate_products() {
        let v = ctx(&["x", "y"]);
        let f = product(&v);
        let Cofactor::Holds(r) = extract_cofactor(&apply_operator(&f, &f).unwrap(), &f).unwrap() else {
            panic!("functional equation should hold for xy");
        };
        assert_eq!(r.b, UniPoly::from_integers(&[1, 2, 1]));
        assert_eq!(r.spectrum.roots, vec![(rat(-1), 2)]);
        assert!(r.is_symmetric());

        let x = ctx(&["x"]);
        let fx = product(&x);
        let r = extract_cofactor(&apply_operator(&fx, &fx).unwrap(), &fx).unwrap();
        assert_eq!(r.result().unwrap().b, UniPoly::from_integers(&[1, 1]));
    }

    #[test]
    fn wrong_operator_fails_cleanly() {
        // x^2 d/dx... : f = xy with f* = x^2 gives d^2/dx^2 (xy)^{s+1}, which
        // is s(s+1) y^2 (xy)^{s-1}, not a multiple of f^s
        let v = ctx(&["x", "y"]);
        let f = product(&v);
        let fstar = MultiPoly::var(v, "x").unwrap().pow(2);
        let out = extract_cofactor(&apply_operator(&fstar, &f).unwrap(), &f).unwrap();
        match out {
            Cofactor::Fails { reason } => assert!(reason.starts_with(FAILURE_MESSAGE)),
            Cofactor::Holds(_) => panic!("should fail"),
        }
    }

    #[test]
    fn symmetry_examples() {
        assert!(symmetry_check(&UniPoly::from_integers(&[1, 2, 1])));
        let table = UniPoly::from_roots(&[(frac(-5, 4), 1), (rat(-1), 2), (frac(-3, 4), 1)]);
        assert!(symmetry_check(&table.scale(&rat(32))));
        let reduced = UniPoly::from_roots(&[(frac(-2, 3), 1), (rat(-1), 5), (frac(-4, 3), 1), (rat(-2), 1)]);
        assert!(!symmetry_check(&reduced));
        assert!(!symmetry_check(&UniPoly::zero()));
    }

    #[test]
    fn fourier_examples() {
        for n in 1..4 {
            let e = Matrix::identity(n);
            assert!(fourier_check(&e, &rat(n as i64)).unwrap());
            assert!(!fourier_check(&e, &rat(n as i64 + 1)).unwrap());
        }
        assert!(fourier_check(&Matrix::zeros(2, 2), &rat(0)).unwrap());
        let a = Matrix::from_i64(&[&[1, 2], &[-3, 5]]);
        assert!(fourier_check(&a, &a.trace()).unwrap());
    }

    #[test]
    fn normal_ordering_produces_the_trace_shift() {
        // F(x d + s) on one variable: -d y + s = -y d + s - 1
        let q = WeylOperator::from_field(&Matrix::identity(1), &UniPoly::s());
        let t = q.fourier();
        let mut expected = WeylOperator::default();
        expected.add(vec![Letter::X(0), Letter::D(0)], UniPoly::constant(rat(-1)));
        expected.add(Vec::new(), UniPoly::new(vec![rat(-1), rat(1)]));
        assert_eq!(t, expected);
    }

    #[test]
    fn report_json_round_trip() {
        let r = BResult::from_raw(&UniPoly::from_integers(&[8, 18, 9])).unwrap();
        let rep = BReport::from_outcome(&BOutcome::Held(r));
        let js = serde_json::to_string(&rep).unwrap();
        assert_eq!(
            js,
            r#"{"monic_coefficients":["8/9","2","1"],"raw_leading":"9","roots":[["-2/3",1],["-4/3",1]],"residual":["1"],"symmetric_about_minus_one":true,"functional_equation_held":true}"#
        );
        let back: BReport = serde_json::from_str(&js).unwrap();
        assert_eq!(back, rep);
    }
}
