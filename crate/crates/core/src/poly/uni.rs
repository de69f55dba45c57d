use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{common_denominator, format_rational, rat, Rational};

/// Dense univariate polynomial in `s`, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly::new(vec![c])
    }

    /// The monomial `s`.
    pub fn s() -> Self {
        UniPoly::new(vec![Rational::zero(), Rational::one()])
    }

    /// `s - r`.
    pub fn linear_root(r: &Rational) -> Self {
        UniPoly::new(vec![-r.clone(), Rational::one()])
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    /// `prod (s - r)^m`.
    pub fn from_roots(roots: &[(Rational, u32)]) -> Self {
        roots
            .iter()
            .fold(UniPoly::one(), |acc, (r, m)| &acc * &UniPoly::linear_root(r).pow(*m))
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            None => UniPoly::zero(),
            Some(l) => {
                let inv = l.recip();
                self.scale(&inv)
            }
        }
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn pow(&self, k: u32) -> UniPoly {
        let mut out = UniPoly::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn eval(&self, s: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * s + c)
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as i64))
                .collect(),
        )
    }

    /// `p(a*s + b)`.
    pub fn compose_affine(&self, a: &Rational, b: &Rational) -> UniPoly {
        let lin = UniPoly::new(vec![b.clone(), a.clone()]);
        self.coeffs
            .iter()
            .rev()
            .fold(UniPoly::zero(), |acc, c| &(&acc * &lin) + &UniPoly::constant(c.clone()))
    }

    /// Euclidean division over the rationals.
    pub fn div_rem(&self, d: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dl = d.leading().ok_or_else(|| Error::Domain("division by the zero polynomial".into()))?;
        let dd = d.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((UniPoly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] / dl;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[i + j] -= &c * dc;
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((UniPoly::new(quot), UniPoly::new(rem)))
    }

    /// Integer coefficients with gcd 1 and positive leading coefficient,
    /// returned together with the rational factor `c` such that
    /// `self = c * primitive`.
    pub fn primitive_integer_form(&self) -> (Rational, Vec<BigInt>) {
        if self.is_zero() {
            return (Rational::zero(), Vec::new());
        }
        let den = common_denominator(self.coeffs.iter());
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let mut g = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if ints.last().unwrap().is_negative() {
            g = -g;
        }
        let prim: Vec<BigInt> = ints.iter().map(|c| c / &g).collect();
        (Rational::new(g, den), prim)
    }

    pub fn from_bigints(coeffs: &[BigInt]) -> Self {
        UniPoly::new(coeffs.iter().map(|c| Rational::from_integer(c.clone())).collect())
    }

    /// `(-1)^d * p(-s - 2)` for `d = deg p`, i.e. the polynomial whose
    /// roots are the reflections `r -> -2 - r` of the roots of `p`.
    pub fn reflect_about_minus_one(&self) -> UniPoly {
        let d = self.degree().unwrap_or(0);
        let r = self.compose_affine(&rat(-1), &rat(-2));
        if d % 2 == 1 {
            -&r
        } else {
            r
        }
    }
}

/// Monic gcd over the rationals, computed on primitive integer
/// representatives with the content removed after every pseudo-division.
pub fn univariate_gcd(a: &UniPoly, b: &UniPoly) -> Result<UniPoly> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::Domain("gcd of two zero polynomials".into()));
    }
    let mut x = a.primitive_integer_form().1;
    let mut y = b.primitive_integer_form().1;
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = pseudo_rem(&x, &y);
        x = y;
        y = primitive(r);
    }
    Ok(UniPoly::from_bigints(&x).monic())
}

fn primitive(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    if p.is_empty() {
        return p;
    }
    let mut g = p.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if p.last().unwrap().is_negative() {
        g = -g;
    }
    p.iter().map(|c| c / &g).collect()
}

/// Pseudo-remainder of `a` by `b` (both nonzero, dense, lowest degree first).
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (j, bc) in b.iter().enumerate() {
            r[shift + j] -= &lr * bc;
        }
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
    }
    r
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let coeff = if a.is_one() && i > 0 { String::new() } else { format_rational(&a) };
            match i {
                0 => write!(f, "{coeff}")?,
                1 => write!(f, "{coeff}s")?,
                _ => write!(f, "{coeff}s^{i}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for UniPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        crate::rational::serde_vec::serialize(&self.coeffs, s)
    }
}

impl<'de> Deserialize<'de> for UniPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        crate::rational::serde_vec::deserialize(d).map(UniPoly::new)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_integers(c)
    }

    #[test]
    fn gcd_examples() {
        // gcd(s^2 - 1, s - 1) = s - 1
        assert_eq!(univariate_gcd(&p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap(), p(&[-1, 1]));
        assert_eq!(univariate_gcd(&p(&[1, 1]), &p(&[2, 1])).unwrap(), UniPoly::one());
        // (s+1)^2 (s+2) = s^3 + 4s^2 + 5s + 2 and (s+1)(s+3) = s^2 + 4s + 3
        assert_eq!(univariate_gcd(&p(&[2, 5, 4, 1]), &p(&[3, 4, 1])).unwrap(), p(&[1, 1]));
        assert_eq!(univariate_gcd(&UniPoly::zero(), &p(&[4, 2])).unwrap(), p(&[2, 1]));
        assert!(univariate_gcd(&UniPoly::zero(), &UniPoly::zero()).is_err());
    }

    #[test]
    fn gcd_with_rational_inputs() {
        let a = UniPoly::from_roots(&[(crate::rational::frac(-2, 3), 2), (rat(5), 1)]);
        let b = UniPoly::from_roots(&[(crate::rational::frac(-2, 3), 1), (rat(1), 1)]).scale(&crate::rational::frac(7, 11));
        assert_eq!(univariate_gcd(&a, &b).unwrap(), UniPoly::linear_root(&crate::rational::frac(-2, 3)));
    }

    #[test]
    fn division_and_reflection() {
        let (q, r) = p(&[-1, 0, 1]).div_rem(&p(&[1, 1])).unwrap();
        assert_eq!((q, r), (p(&[-1, 1]), UniPoly::zero()));
        // (s+1)^2 is fixed by the reflection about -1
        assert_eq!(p(&[1, 2, 1]).reflect_about_minus_one(), p(&[1, 2, 1]));
        // s + 1/2 maps to s + 3/2
        let half = UniPoly::linear_root(&crate::rational::frac(-1, 2));
        assert_eq!(half.reflect_about_minus_one(), UniPoly::linear_root(&crate::rational::frac(-3, 2)));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[8, 18, 9]).to_string(), "9s^2 + 18s + 8");
        assert_eq!(p(&[-1, 0, -1]).to_string(), "-s^2 - 1");
    }
}
