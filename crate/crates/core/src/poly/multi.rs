use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::monomial::Monomial;
use super::uni::UniPoly;
use crate::error::{Error, Result};
use crate::rational::{format_rational, parse_rational, Rational};

/// Ordered variable names shared between polynomials.
pub type Vars = Arc<Vec<String>>;

pub fn vars<S: AsRef<str>>(names: &[S]) -> Vars {
    Arc::new(names.iter().map(|s| s.as_ref().to_string()).collect())
}

/// Sparse multivariate polynomial over the rationals.
///
/// Terms are kept in a `BTreeMap` keyed by monomial (lex order, variable 0
/// most significant), so iteration order is canonical and no stored
/// coefficient is zero. Binary operations between polynomials over
/// different variable lists first unify the lists by name.
#[derive(Clone, Debug)]
pub struct MultiPoly {
    vars: Vars,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        if same_vars(&self.vars, &other.vars) {
            return self.terms == other.terms;
        }
        let (_, a, b) = unify(self, other);
        a.terms == b.terms
    }
}

impl Eq for MultiPoly {}

fn same_vars(a: &Vars, b: &Vars) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// Brings two polynomials into a common variable context: the variables of
/// `a` in order, followed by the variables of `b` not already present.
fn unify(a: &MultiPoly, b: &MultiPoly) -> (Vars, MultiPoly, MultiPoly) {
    if same_vars(&a.vars, &b.vars) {
        return (a.vars.clone(), a.clone(), b.with_vars_unchecked(a.vars.clone()));
    }
    let mut names: Vec<String> = a.vars.as_ref().clone();
    let mut map_b = Vec::with_capacity(b.vars.len());
    for name in b.vars.iter() {
        match names.iter().position(|n| n == name) {
            Some(i) => map_b.push(i as u32),
            None => {
                map_b.push(names.len() as u32);
                names.push(name.clone());
            }
        }
    }
    let ctx: Vars = Arc::new(names);
    let a2 = a.with_vars_unchecked(ctx.clone());
    let b2 = MultiPoly {
        vars: ctx.clone(),
        terms: b.terms.iter().map(|(m, c)| (m.remap(&map_b), c.clone())).collect(),
    };
    (ctx, a2, b2)
}

impl MultiPoly {
    pub fn zero(vars: Vars) -> Self {
        MultiPoly { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: Vars, c: Rational) -> Self {
        let mut p = MultiPoly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn one(vars: Vars) -> Self {
        MultiPoly::constant(vars, Rational::one())
    }

    pub fn var(vars: Vars, name: &str) -> Result<Self> {
        let i = vars
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(MultiPoly::var_index(vars, i))
    }

    pub fn var_index(vars: Vars, i: usize) -> Self {
        assert!(i < vars.len(), "variable index out of range");
        let mut p = MultiPoly::zero(vars);
        p.terms.insert(Monomial::var(i), Rational::one());
        p
    }

    /// Linear form `sum coeffs[i] * x_i`.
    pub fn linear_form(vars: Vars, coeffs: &[Rational]) -> Self {
        assert_eq!(coeffs.len(), vars.len());
        let mut p = MultiPoly::zero(vars);
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                p.terms.insert(Monomial::var(i), c.clone());
            }
        }
        p
    }

    pub fn from_terms(vars: Vars, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = MultiPoly::zero(vars);
        for (m, c) in terms {
            if let Some(v) = m.max_var() {
                assert!(v < p.vars.len(), "monomial references unknown variable");
            }
            p.add_term(m, c);
        }
        p
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// The lex-greatest term.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn variable_index(&self, name: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Reinterprets the polynomial in a context that starts with the same
    /// variables; only valid when every used index exists in `vars`.
    fn with_vars_unchecked(&self, vars: Vars) -> MultiPoly {
        MultiPoly { vars, terms: self.terms.clone() }
    }

    /// Renames the variables positionally. The new list must have the same
    /// length.
    pub fn rename(&self, vars: Vars) -> Result<MultiPoly> {
        if vars.len() != self.vars.len() {
            return Err(Error::Dimension(format!(
                "cannot rename {} variables to {}",
                self.vars.len(),
                vars.len()
            )));
        }
        Ok(self.with_vars_unchecked(vars))
    }

    /// Total degree; `None` stands for the degree of the zero polynomial.
    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn min_degree(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::degree).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(Monomial::degree);
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    pub fn homogeneous_part(&self, degree: u64) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.vars.clone());
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn try_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        let (ctx, a, b) = unify(self, other);
        let mut acc: HashMap<Monomial, Rational> = HashMap::with_capacity(a.len() * b.len());
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                let m = ma.try_mul(mb)?;
                let c = ca * cb;
                acc.entry(m).and_modify(|e| *e += &c).or_insert(c);
            }
        }
        Ok(MultiPoly {
            vars: ctx,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    pub fn try_pow(&self, k: u32) -> Result<MultiPoly> {
        let mut result = MultiPoly::one(self.vars.clone());
        if k == 0 {
            return Ok(result);
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            let mut p = MultiPoly::zero(self.vars.clone());
            p.terms.insert(m.try_pow(k)?, num_traits::pow(c.clone(), k as usize));
            return Ok(p);
        }
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = result.try_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.try_mul(&base)?;
            }
        }
        Ok(result)
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        self.try_pow(k).expect("exponent overflow")
    }

    pub fn derivative(&self, var: &str) -> Result<MultiPoly> {
        let i = self.variable_index(var)?;
        Ok(self.derivative_index(i))
    }

    pub fn derivative_index(&self, var: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(self.vars.clone());
        for (m, c) in &self.terms {
            if let Some((e, dm)) = m.differentiate(var) {
                out.add_term(dm, c * Rational::from_integer(e.into()));
            }
        }
        out
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.vars.len() {
            return Err(Error::Dimension(format!(
                "point has {} coordinates, polynomial has {} variables",
                point.len(),
                self.vars.len()
            )));
        }
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.pairs() {
                t *= num_traits::pow(point[v as usize].clone(), e as usize);
            }
            total += t;
        }
        Ok(total)
    }

    /// Substitutes `x = base + t * dir` and returns the univariate polynomial in `t`.
    pub fn restrict_to_line(&self, base: &[Rational], dir: &[Rational]) -> Result<UniPoly> {
        let n = self.vars.len();
        if base.len() != n || dir.len() != n {
            return Err(Error::Dimension("line does not match the variable count".into()));
        }
        let lines: Vec<UniPoly> = (0..n)
            .map(|i| UniPoly::new(vec![base[i].clone(), dir[i].clone()]))
            .collect();
        let mut powers: HashMap<(u32, u32), UniPoly> = HashMap::new();
        let mut total = UniPoly::zero();
        for (m, c) in &self.terms {
            let mut t = UniPoly::constant(c.clone());
            for &(v, e) in m.pairs() {
                let p = powers
                    .entry((v, e))
                    .or_insert_with(|| lines[v as usize].pow(e))
                    .clone();
                t = &t * &p;
            }
            total = &total + &t;
        }
        Ok(total)
    }

    /// Substitutes `x = shift + x'` (a translation of the origin).
    pub fn translate(&self, shift: &[Rational]) -> Result<MultiPoly> {
        let n = self.vars.len();
        if shift.len() != n {
            return Err(Error::Dimension("shift does not match the variable count".into()));
        }
        let shifted: Vec<MultiPoly> = (0..n)
            .map(|i| {
                &MultiPoly::var_index(self.vars.clone(), i)
                    + &MultiPoly::constant(self.vars.clone(), shift[i].clone())
            })
            .collect();
        let mut powers: HashMap<(u32, u32), MultiPoly> = HashMap::new();
        let mut total = MultiPoly::zero(self.vars.clone());
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(self.vars.clone(), c.clone());
            for &(v, e) in m.pairs() {
                let p = match powers.get(&(v, e)) {
                    Some(p) => p.clone(),
                    None => {
                        let p = shifted[v as usize].try_pow(e)?;
                        powers.insert((v, e), p.clone());
                        p
                    }
                };
                t = t.try_mul(&p)?;
            }
            total = &total + &t;
        }
        Ok(total)
    }

    /// Sets every variable outside `keep` to zero and re-expresses the
    /// result over the kept variables, in the order given.
    pub fn restrict_to(&self, keep: &[usize]) -> MultiPoly {
        let mut map = vec![u32::MAX; self.vars.len()];
        for (new, &old) in keep.iter().enumerate() {
            map[old] = new as u32;
        }
        let names: Vec<String> = keep.iter().map(|&i| self.vars[i].clone()).collect();
        let mut out = MultiPoly::zero(Arc::new(names));
        for (m, c) in &self.terms {
            if m.pairs().iter().all(|&(v, _)| map[v as usize] != u32::MAX) {
                out.add_term(m.remap(&map), c.clone());
            }
        }
        out
    }

    /// Returns `Some(c)` when `self == c * other` for a rational `c`.
    /// Two zero polynomials are proportional with `c = 0`; a nonzero
    /// polynomial is never proportional to zero.
    pub fn ratio_to(&self, other: &MultiPoly) -> Option<Rational> {
        if other.is_zero() {
            return if self.is_zero() { Some(Rational::zero()) } else { None };
        }
        let (_, a, b) = unify(self, other);
        if a.is_zero() {
            return Some(Rational::zero());
        }
        if a.terms.len() != b.terms.len() {
            return None;
        }
        let (mb, cb) = b.leading_term().unwrap();
        let c = a.coefficient(mb) / cb;
        if c.is_zero() {
            return None;
        }
        let ok = b
            .terms
            .iter()
            .all(|(m, coeff)| a.terms.get(m).is_some_and(|x| *x == coeff * &c));
        ok.then_some(c)
    }

    /// Divides out the content so that coefficients are coprime integers
    /// with a positive leading coefficient.
    pub fn primitive_integer_form(&self) -> MultiPoly {
        if self.is_zero() {
            return self.clone();
        }
        use num_integer::Integer;
        let den = crate::rational::common_denominator(self.terms.values());
        let mut g = num_bigint::BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(&(c.numer() * (&den / c.denom())));
        }
        let mut scale = Rational::new(den, g);
        if self.leading_term().unwrap().1.is_negative() {
            scale = -scale;
        }
        self.scale(&scale)
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let (_, mut a, b) = unify(self, rhs);
        for (m, c) in b.terms {
            a.add_term(m, c);
        }
        a
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let (_, mut a, b) = unify(self, rhs);
        for (m, c) in b.terms {
            a.add_term(m, -c);
        }
        a
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_mul(rhs).expect("exponent overflow")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut factors = Vec::new();
            if !a.is_one() || m.is_one() {
                factors.push(format_rational(&a));
            }
            for &(v, e) in m.pairs() {
                let name = &self.vars[v as usize];
                factors.push(if e == 1 { name.clone() } else { format!("{name}^{e}") });
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRecord {
    exponents: Vec<u32>,
    coefficient: String,
}

#[derive(Serialize, Deserialize)]
struct PolyRecord {
    variables: Vec<String>,
    terms: Vec<TermRecord>,
}

impl Serialize for MultiPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let n = self.vars.len();
        PolyRecord {
            variables: self.vars.as_ref().clone(),
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(m, c)| TermRecord { exponents: m.to_dense(n), coefficient: format_rational(c) })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let rec = PolyRecord::deserialize(d)?;
        let n = rec.variables.len();
        let mut p = MultiPoly::zero(Arc::new(rec.variables));
        for t in rec.terms {
            if t.exponents.len() != n {
                return Err(D::Error::custom("exponent vector length differs from variable count"));
            }
            let c = parse_rational(&t.coefficient).map_err(D::Error::custom)?;
            p.add_term(Monomial::from_dense(&t.exponents), c);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, rat};

    fn xyz() -> Vars {
        vars(&["x", "y", "z"])
    }

    fn v(name: &str) -> MultiPoly {
        MultiPoly::var(xyz(), name).unwrap()
    }

    #[test]
    fn ring_examples() {
        let (x, y) = (v("x"), v("y"));
        assert_eq!(&(&x + &y) + &(&x - &y), x.scale(&rat(2)));
        assert_eq!(&(&x + &y) * &(&x - &y), &(&x * &x) - &(&y * &y));
        let xy = &x * &y;
        assert_eq!(xy.pow(3), &x.pow(3) * &y.pow(3));
        assert_eq!(x.pow(0), MultiPoly::one(xyz()));
    }

    #[test]
    fn derivative_examples() {
        let (x, y) = (v("x"), v("y"));
        let x2y = &x.pow(2) * &y;
        assert_eq!(x2y.derivative("x").unwrap(), (&x * &y).scale(&rat(2)));
        assert!(x.pow(2).derivative("y").unwrap().is_zero());
        let xy2 = (&x * &y).pow(2);
        assert_eq!(xy2.derivative("x").unwrap(), (&x * &y.pow(2)).scale(&rat(2)));
        assert!(matches!(x.derivative("w"), Err(Error::UnknownVariable(_))));
    }

    #[test]
    fn unification_by_name() {
        let a = MultiPoly::var(vars(&["x", "y"]), "y").unwrap();
        let b = MultiPoly::var(vars(&["y", "z"]), "y").unwrap();
        let s = &a + &b;
        assert_eq!(s.vars().as_ref(), &vec!["x".to_string(), "y".into(), "z".into()]);
        assert_eq!(s.len(), 1);
        assert_eq!(s, a.scale(&rat(2)));
    }

    #[test]
    fn zero_has_no_degree() {
        assert_eq!(MultiPoly::zero(xyz()).total_degree(), None);
        assert_eq!(v("x").total_degree(), Some(1));
    }

    #[test]
    fn display_and_serde() {
        let p = &(&v("x").pow(2) * &v("y")).scale(&frac(-3, 2)) + &MultiPoly::constant(xyz(), rat(1));
        assert_eq!(p.to_string(), "-3/2*x^2*y + 1");
        let js = serde_json::to_string(&p).unwrap();
        assert_eq!(
            js,
            r#"{"variables":["x","y","z"],"terms":[{"exponents":[2,1,0],"coefficient":"-3/2"},{"exponents":[0,0,0],"coefficient":"1"}]}"#
        );
        let back: MultiPoly = serde_json::from_str(&js).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn translate_and_restrict() {
        let f = &(&v("x") * &v("y")) * &v("z");
        let g = f.translate(&[rat(1), rat(0), rat(0)]).unwrap();
        assert_eq!(g, &(&v("y") * &v("z")) + &f);
        let r = g.homogeneous_part(2).restrict_to(&[1, 2]);
        assert_eq!(r.to_string(), "y*z");
    }

    #[test]
    fn proportionality() {
        let x = v("x");
        let p = &x + &v("y");
        assert_eq!(p.scale(&frac(2, 3)).ratio_to(&p), Some(frac(2, 3)));
        assert_eq!((&x - &v("y")).ratio_to(&p), None);
        assert_eq!(p.ratio_to(&MultiPoly::zero(xyz())), None);
    }
}
