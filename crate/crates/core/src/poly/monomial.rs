use std::cmp::Ordering;

use crate::error::{Error, Result};

/// A power product stored sparsely as `(variable index, exponent)` pairs,
/// sorted by index, with no zero exponents.
///
/// Monomials are ordered lexicographically with variable `0` most
/// significant, so `x0 > x1^5 > 1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<(u32, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(index: usize) -> Self {
        Monomial(vec![(index as u32, 1)])
    }

    pub fn from_dense(exponents: &[u32]) -> Self {
        Monomial(
            exponents
                .iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(i, &e)| (i as u32, e))
                .collect(),
        )
    }

    pub fn from_pairs(mut pairs: Vec<(u32, u32)>) -> Self {
        pairs.retain(|&(_, e)| e != 0);
        pairs.sort_unstable_by_key(|&(v, _)| v);
        let mut merged: Vec<(u32, u32)> = Vec::with_capacity(pairs.len());
        for (v, e) in pairs {
            match merged.last_mut() {
                Some((lv, le)) if *lv == v => *le += e,
                _ => merged.push((v, e)),
            }
        }
        Monomial(merged)
    }

    pub fn to_dense(&self, nvars: usize) -> Vec<u32> {
        let mut out = vec![0; nvars];
        for &(v, e) in &self.0 {
            out[v as usize] = e;
        }
        out
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&(_, e)| e as u64).sum()
    }

    pub fn exponent(&self, var: usize) -> u32 {
        match self.0.binary_search_by_key(&(var as u32), |&(v, _)| v) {
            Ok(i) => self.0[i].1,
            Err(_) => 0,
        }
    }

    pub fn max_var(&self) -> Option<usize> {
        self.0.last().map(|&(v, _)| v as usize)
    }

    pub fn try_mul(&self, other: &Monomial) -> Result<Monomial> {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1.checked_add(b[j].1).ok_or_else(|| {
                        Error::Capacity(format!("exponent of variable {} exceeds u32", a[i].0))
                    })?;
                    out.push((a[i].0, e));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Ok(Monomial(out))
    }

    pub fn try_pow(&self, k: u32) -> Result<Monomial> {
        self.0
            .iter()
            .map(|&(v, e)| {
                e.checked_mul(k)
                    .map(|p| (v, p))
                    .ok_or_else(|| Error::Capacity(format!("exponent of variable {v} exceeds u32")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Monomial::from_pairs)
    }

    /// Lowers the exponent of `var` by one; returns the old exponent, or
    /// `None` when the variable does not occur.
    pub fn differentiate(&self, var: usize) -> Option<(u32, Monomial)> {
        let pos = self.0.binary_search_by_key(&(var as u32), |&(v, _)| v).ok()?;
        let e = self.0[pos].1;
        let mut next = self.0.clone();
        if e == 1 {
            next.remove(pos);
        } else {
            next[pos].1 -= 1;
        }
        Some((e, Monomial(next)))
    }

    pub fn remap(&self, map: &[u32]) -> Monomial {
        Monomial::from_pairs(self.0.iter().map(|&(v, e)| (map[v as usize], e)).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (&self.0, &other.0);
        for (x, y) in a.iter().zip(b.iter()) {
            if x.0 != y.0 {
                // the monomial holding the smaller variable index has a
                // positive exponent where the other has zero
                return y.0.cmp(&x.0);
            }
            if x.1 != y.1 {
                return x.1.cmp(&y.1);
            }
        }
        a.len().cmp(&b.len())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
