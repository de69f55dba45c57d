use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::multi::MultiPoly;
use super::uni::univariate_gcd;
use crate::error::{Error, Result};
use crate::rational::rat;

const COORD_RANGE: i64 = 1000;
const MAX_RESAMPLES: usize = 10_000;

/// Monte Carlo squarefreeness test.
///
/// Each trial restricts `p` to a random line `t -> a + t*b` with integer
/// coordinates; lines on which the degree drops are resampled. A repeated
/// factor of the restriction proves that `p` has a repeated factor; a
/// squarefree restriction is evidence for squarefreeness that can only
/// fail on a measure-zero set of lines.
pub fn is_squarefree(p: &MultiPoly, trials: u32, seed: u64) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::Domain("squarefree test of the zero polynomial".into()));
    }
    if trials == 0 {
        return Err(Error::Domain("at least one trial is required".into()));
    }
    let degree = p.total_degree().unwrap() as usize;
    if degree <= 1 {
        return Ok(true);
    }
    let n = p.nvars();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let mut attempts = 0;
        let restriction = loop {
            let base: Vec<_> = (0..n).map(|_| rat(rng.gen_range(-COORD_RANGE..=COORD_RANGE))).collect();
            let dir: Vec<_> = (0..n).map(|_| rat(rng.gen_range(-COORD_RANGE..=COORD_RANGE))).collect();
            let r = p.restrict_to_line(&base, &dir)?;
            if r.degree() == Some(degree) {
                break r;
            }
            attempts += 1;
            if attempts >= MAX_RESAMPLES {
                return Err(Error::Domain("could not find a line preserving the degree".into()));
            }
        };
        let g = univariate_gcd(&restriction, &restriction.derivative())?;
        if g.degree().unwrap_or(0) > 0 {
            return Ok(false);
        }
        debug_assert!(!g.is_zero() && !g.coeff(0).is_zero());
    }
    Ok(true)
}
