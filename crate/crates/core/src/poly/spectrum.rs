use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::uni::UniPoly;
use crate::error::{Error, Result};
use crate::rational::{format_rational, parse_rational, Rational};

/// A monic polynomial split into its rational roots and a residual factor
/// free of rational roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    pub monic: UniPoly,
    /// Distinct rational roots with multiplicities, largest root first.
    pub roots: Vec<(Rational, u32)>,
    /// Monic factor carrying the non-rational roots.
    pub residual: UniPoly,
}

impl Spectrum {
    /// Roots listed with repetition, largest first.
    pub fn flat_roots(&self) -> Vec<Rational> {
        self.roots
            .iter()
            .flat_map(|(r, m)| std::iter::repeat_n(r.clone(), *m as usize))
            .collect()
    }

    pub fn root_count(&self) -> u32 {
        self.roots.iter().map(|(_, m)| m).sum()
    }

    /// `-2/3, -1(x4), -4/3`
    pub fn describe(&self) -> String {
        let mut parts: Vec<String> = self
            .roots
            .iter()
            .map(|(r, m)| {
                if *m == 1 {
                    format_rational(r)
                } else {
                    format!("{}(x{})", format_rational(r), m)
                }
            })
            .collect();
        if self.residual.degree().unwrap_or(0) > 0 {
            parts.push(format!("[roots of {}]", self.residual));
        }
        if parts.is_empty() {
            "none".into()
        } else {
            parts.join(", ")
        }
    }
}

/// Splits `b` into rational roots (rational root theorem on the primitive
/// integer form, with deflation) and a residual factor.
pub fn rational_root_spectrum(b: &UniPoly) -> Result<Spectrum> {
    if b.is_zero() {
        return Err(Error::Domain("spectrum of the zero polynomial".into()));
    }
    let monic = b.monic();
    let mut residual = monic.clone();
    let mut found: Vec<(Rational, u32)> = Vec::new();

    'outer: loop {
        if residual.degree() == Some(0) {
            break;
        }
        let (_, prim) = residual.primitive_integer_form();
        if prim[0].is_zero() {
            push_root(&mut found, Rational::zero());
            residual = residual.div_rem(&UniPoly::s())?.0;
            continue;
        }
        let lead = prim.last().unwrap();
        let ps = divisors(&prim[0]);
        let qs = divisors(lead);
        for q in &qs {
            for p in &ps {
                for sign in [1, -1] {
                    let r = Rational::new(BigInt::from(sign) * p, q.clone());
                    if residual.eval(&r).is_zero() {
                        push_root(&mut found, r.clone());
                        residual = residual.div_rem(&UniPoly::linear_root(&r))?.0;
                        continue 'outer;
                    }
                }
            }
        }
        break;
    }
    found.sort_by(|a, b| b.0.cmp(&a.0));
    Ok(Spectrum { monic, roots: found, residual })
}

fn push_root(found: &mut Vec<(Rational, u32)>, r: Rational) {
    match found.iter_mut().find(|(x, _)| *x == r) {
        Some((_, m)) => *m += 1,
        None => found.push((r, 1)),
    }
}

/// Positive divisors of a nonzero integer by trial division.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if let Some(small) = n.to_u64() {
        let mut out = Vec::new();
        let mut d = 1u64;
        while d.saturating_mul(d) <= small {
            if small % d == 0 {
                out.push(BigInt::from(d));
                if d != small / d {
                    out.push(BigInt::from(small / d));
                }
            }
            d += 1;
        }
        out.sort();
        return out;
    }
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if n.is_multiple_of(&d) {
            out.push(d.clone());
            let e = &n / &d;
            if e != d {
                out.push(e);
            }
        }
        d += 1;
    }
    out.sort();
    out
}

impl Serialize for Spectrum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.roots.len()))?;
        for (r, m) in &self.roots {
            seq.serialize_element(&(format_rational(r), m))?;
        }
        seq.end()
    }
}

/// Serialized form of the root list: `[["r", mult], ...]`.
pub fn deserialize_roots<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<(Rational, u32)>, D::Error> {
    let raw = Vec::<(String, u32)>::deserialize(d)?;
    raw.into_iter()
        .map(|(r, m)| parse_rational(&r).map(|q| (q, m)).map_err(serde::de::Error::custom))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, rat};

    #[test]
    fn spectrum_examples() {
        let sp = rational_root_spectrum(&UniPoly::from_integers(&[1, 2, 1])).unwrap();
        assert_eq!(sp.roots, vec![(rat(-1), 2)]);
        assert_eq!(sp.residual, UniPoly::one());

        let sp = rational_root_spectrum(&UniPoly::from_integers(&[8, 18, 9])).unwrap();
        assert_eq!(sp.roots, vec![(frac(-2, 3), 1), (frac(-4, 3), 1)]);
        assert_eq!(sp.residual, UniPoly::one());
        assert!(sp.monic.is_monic());

        let sp = rational_root_spectrum(&UniPoly::from_integers(&[1, 0, 1])).unwrap();
        assert!(sp.roots.is_empty());
        assert_eq!(sp.residual, UniPoly::from_integers(&[1, 0, 1]));

        assert!(rational_root_spectrum(&UniPoly::zero()).is_err());
    }

    #[test]
    fn zero_roots_and_mixed_residual() {
        // s^2 (s - 1/2) (s^2 - 2)
        let b = &UniPoly::from_roots(&[(rat(0), 2), (frac(1, 2), 1)]) * &UniPoly::from_integers(&[-2, 0, 1]);
        let sp = rational_root_spectrum(&b.scale(&rat(-4))).unwrap();
        assert_eq!(sp.roots, vec![(frac(1, 2), 1), (rat(0), 2)]);
        assert_eq!(sp.residual, UniPoly::from_integers(&[-2, 0, 1]));
        assert_eq!(sp.describe(), "1/2, 0(x2), [roots of s^2 - 2]");
    }
}
