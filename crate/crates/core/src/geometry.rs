//! Geometry at a point `x0`: isotropy, orbit tangent, the normal
//! representation, localization of `f`, Euler witnesses, conormal orders
//! and the assembly of b-functions along a chain of conormals.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::bernstein::BResult;
use crate::error::{Error, Result};
use crate::liealg::{annihilator_basis, linear_column_determinant, CharacterData, GeneratorSet};
use crate::linalg::{solve, Echelon, Matrix};
use crate::poly::{MultiPoly, UniPoly, Vars};
use crate::rational::{frac, serde_str, Rational};

/// Message reported when no isotropy element fixes the covector.
pub const INADMISSIBLE_MESSAGE: &str = "covector not admissible at this point";

#[derive(Clone, Debug)]
pub struct PointContext {
    pub x0: Vec<Rational>,
    /// Basis of the isotropy algebra, as coordinates in the generator basis.
    pub isotropy: Vec<Vec<Rational>>,
    /// Echelon form of the rows `A_k x0`; its row space is the orbit tangent.
    pub tangent: Echelon,
    /// Coordinate indices complementing the tangent space (the non-pivots).
    pub normal_coords: Vec<usize>,
}

impl PointContext {
    pub fn tangent_dim(&self) -> usize {
        self.tangent.rank()
    }

    pub fn normal_dim(&self) -> usize {
        self.normal_coords.len()
    }

    pub fn isotropy_matrices(&self, g: &GeneratorSet) -> Vec<Matrix> {
        self.isotropy.iter().map(|t| g.combination(t)).collect()
    }

    /// Image of `v` in `V / T`, in the normal coordinates.
    pub fn project(&self, v: &[Rational]) -> Vec<Rational> {
        let r = self.tangent.reduce(v);
        self.normal_coords.iter().map(|&i| r[i].clone()).collect()
    }

    pub fn normal_variables(&self, vars: &Vars) -> Vars {
        std::sync::Arc::new(self.normal_coords.iter().map(|&i| vars[i].clone()).collect())
    }
}

pub fn point_context(g: &GeneratorSet, x0: &[Rational]) -> Result<PointContext> {
    let n = g.n();
    if x0.len() != n {
        return Err(Error::Dimension(format!("point has {} coordinates, expected {n}", x0.len())));
    }
    let images: Vec<Vec<Rational>> = g.generators().iter().map(|a| a.mul_vec(x0)).collect();
    // the columns A_k x0 give t -> sum t_k A_k x0; its kernel is the isotropy
    let isotropy = Echelon::new(&Matrix::from_columns(&images)?).kernel();
    let tangent = Echelon::new(&Matrix::from_rows(images)?);
    let normal_coords = tangent.free_columns();
    Ok(PointContext { x0: x0.to_vec(), isotropy, tangent, normal_coords })
}

/// The action of each isotropy basis element on `V / T`, as a square
/// matrix in the normal coordinates.
pub fn normal_representation(ctx: &PointContext, g: &GeneratorSet) -> Vec<Matrix> {
    let n = g.n();
    ctx.isotropy_matrices(g)
        .iter()
        .map(|a| {
            let columns: Vec<Vec<Rational>> = ctx
                .normal_coords
                .iter()
                .map(|&c| {
                    let mut e = vec![Rational::zero(); n];
                    e[c] = Rational::one();
                    ctx.project(&a.mul_vec(&e))
                })
                .collect();
            if columns.is_empty() {
                Matrix::zeros(0, 0)
            } else {
                Matrix::from_columns(&columns).expect("columns share the normal dimension")
            }
        })
        .collect()
}

/// Lowest homogeneous part of `f(x0 + x')` and its degree.
pub fn localization(f: &MultiPoly, x0: &[Rational]) -> Result<(u64, MultiPoly)> {
    if f.is_zero() {
        return Err(Error::Domain("localization of the zero polynomial".into()));
    }
    let shifted = f.translate(x0)?;
    let k = shifted.min_degree().expect("translate of a nonzero polynomial is nonzero");
    Ok((k, shifted.homogeneous_part(k)))
}

/// Discriminant of the normal representation in the normal coordinates.
pub fn normal_discriminant(ctx: &PointContext, g: &GeneratorSet) -> Result<MultiPoly> {
    if ctx.isotropy.len() != ctx.normal_dim() {
        return Err(Error::Dimension(format!(
            "isotropy has dimension {} but the normal space has dimension {}",
            ctx.isotropy.len(),
            ctx.normal_dim()
        )));
    }
    let vars = ctx.normal_variables(g.variables());
    linear_column_determinant(&normal_representation(ctx, g), &vars)
}

/// Whether the localization of `f` at `x0`, restricted to the normal
/// coordinates, is a nonzero multiple of the normal discriminant.
pub fn localization_check(f: &MultiPoly, ctx: &PointContext, g: &GeneratorSet) -> Result<bool> {
    let normal = normal_discriminant(ctx, g)?;
    if normal.is_zero() {
        return Err(Error::NotApplicable(
            "normal discriminant vanishes, so the normal action has no open orbit".into(),
        ));
    }
    let (_, local) = localization(f, &ctx.x0)?;
    let restricted = local.rename(g.variables().clone())?.restrict_to(&ctx.normal_coords);
    Ok(restricted.ratio_to(&normal).is_some_and(|c| !c.is_zero()))
}

/// An element `B` of the isotropy algebra with `d chi(B) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EulerWitness {
    #[serde(with = "crate::rational::serde_vec")]
    pub coordinates: Vec<Rational>,
    pub matrix: Matrix,
}

/// Looks for `B` in the isotropy with `d chi(B) = 1`. `None` means the
/// character vanishes on the isotropy, which leaves the question open.
pub fn euler_at_point(g: &GeneratorSet, c: &CharacterData, ctx: &PointContext) -> Option<EulerWitness> {
    ctx.isotropy.iter().find_map(|t| {
        let v = c.evaluate(t);
        if v.is_zero() {
            return None;
        }
        let coordinates: Vec<Rational> = t.iter().map(|x| x / &v).collect();
        let matrix = g.combination(&coordinates);
        Some(EulerWitness { coordinates, matrix })
    })
}

/// The generator used as Euler field: the first `A_k` with nonzero
/// character value, scaled so that `d chi = 1`.
pub fn euler_generator(g: &GeneratorSet, c: &CharacterData) -> Result<Matrix> {
    let (k, v) = c
        .values
        .iter()
        .enumerate()
        .find(|(_, v)| !v.is_zero())
        .ok_or(Error::DegenerateCharacter)?;
    Ok(g.generators()[k].scale(&v.recip()))
}

/// Whether `eps x0` lies in the span of `B x0` over the annihilator of the
/// character, i.e. whether the two orbits through `x0` share a tangent.
pub fn strong_euler_at_point(g: &GeneratorSet, c: &CharacterData, ctx: &PointContext) -> Result<bool> {
    let eps = euler_generator(g, c)?.mul_vec(&ctx.x0);
    if eps.iter().all(Zero::is_zero) {
        return Ok(true);
    }
    let images: Vec<Vec<Rational>> = annihilator_basis(g, c)?.iter().map(|b| b.mul_vec(&ctx.x0)).collect();
    if images.is_empty() {
        return Ok(false);
    }
    Ok(solve(&Matrix::from_columns(&images)?, &eps)?.is_some())
}

/// The affine function `-m s - half_mu`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderForm {
    #[serde(with = "serde_str")]
    pub m: Rational,
    #[serde(with = "serde_str")]
    pub half_mu: Rational,
}

impl OrderForm {
    pub fn new(m: Rational, half_mu: Rational) -> Self {
        OrderForm { m, half_mu }
    }

    pub fn as_poly(&self) -> UniPoly {
        UniPoly::new(vec![-self.half_mu.clone(), -self.m.clone()])
    }
}

impl std::fmt::Display for OrderForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.as_poly())
    }
}

/// Order of `f^s` along the conormal through `(x0, y0)`.
///
/// `y0` lives in the dual of the normal coordinates. The isotropy element
/// `A0` is chosen so that the conormal action `-N(A0)^t` fixes `y0`; then
/// `m = -d chi(A0)` and `half_mu = tr_{V*}(A0) - dim / 2`. Returns `None`
/// when no such `A0` exists.
pub fn conormal_order(
    g: &GeneratorSet,
    c: &CharacterData,
    ctx: &PointContext,
    y0: &[Rational],
) -> Result<Option<OrderForm>> {
    let dim = ctx.normal_dim();
    if y0.len() != dim {
        return Err(Error::Dimension(format!("covector has {} entries, normal space has dimension {dim}", y0.len())));
    }
    if dim > 0 && y0.iter().all(Zero::is_zero) {
        return Err(Error::Domain("covector must be nonzero".into()));
    }
    let normal = normal_representation(ctx, g);
    let dual: Vec<Matrix> = normal.iter().map(|m| -&m.transpose()).collect();
    let r = ctx.isotropy.len();

    let (t, kernel) = if dim == 0 || r == 0 {
        if dim > 0 {
            return Ok(None);
        }
        (vec![Rational::zero(); r], (0..r).map(|i| unit(r, i)).collect())
    } else {
        let columns: Vec<Vec<Rational>> = dual.iter().map(|d| d.mul_vec(y0)).collect();
        match solve(&Matrix::from_columns(&columns)?, y0)? {
            Some(sol) => sol,
            None => return Ok(None),
        }
    };

    let character_of = |s: &[Rational]| -> Rational {
        s.iter().zip(&ctx.isotropy).map(|(si, iso)| si * c.evaluate(iso)).sum()
    };
    let dual_trace_of = |s: &[Rational]| -> Rational { s.iter().zip(&dual).map(|(si, d)| si * d.trace()).sum() };

    for k in &kernel {
        if !character_of(k).is_zero() || !dual_trace_of(k).is_zero() {
            return Err(Error::NotApplicable(
                "order is not constant on the admissible isotropy elements; the covector is not generic".into(),
            ));
        }
    }
    let m = -character_of(&t);
    let half_mu = dual_trace_of(&t) - frac(dim as i64, 2);
    Ok(Some(OrderForm { m, half_mu }))
}

fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

/// `(ord_upper - ord_lower) + 1/2`, the b-function factor contributed by a
/// smooth transversal codimension-one crossing.
pub fn codim1_ratio(upper: &OrderForm, lower: &OrderForm) -> Result<UniPoly> {
    let r = &(&upper.as_poly() - &lower.as_poly()) + &UniPoly::constant(frac(1, 2));
    if r.degree() != Some(1) {
        return Err(Error::Domain(format!(
            "ratio {r} has degree other than 1, so the crossing is not codimension one"
        )));
    }
    Ok(r)
}

/// Monic product of the factors along a chain, with its spectrum.
pub fn chain_assemble(factors: &[UniPoly]) -> Result<BResult> {
    if factors.is_empty() {
        return Err(Error::Domain("empty chain".into()));
    }
    let product = factors.iter().fold(UniPoly::one(), |acc, p| &acc * p);
    BResult::from_raw(&product)
}
