//! Lie algebras of linear vector fields `x -> A x`: closure under brackets,
//! the discriminant `det(A_1 x, ..., A_n x)`, infinitesimal characters,
//! annihilators, specialness, and the dual action `A -> -A^t`.

use std::collections::HashMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{solve, Echelon, Matrix};
use crate::poly::{is_squarefree, MultiPoly, Vars};
use crate::rational::{serde_vec, Rational};

/// Linearly independent `n x n` matrices `A_1..A_n` acting on variables
/// `x_1..x_n`. Generator order fixes the sign of the discriminant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    variables: Vars,
    generators: Vec<Matrix>,
}

impl GeneratorSet {
    pub fn new(variables: Vars, generators: Vec<Matrix>) -> Result<Self> {
        let n = variables.len();
        if generators.len() != n {
            return Err(Error::Dimension(format!(
                "{} generators for {} variables",
                generators.len(),
                n
            )));
        }
        if let Some(bad) = generators.iter().position(|a| a.rows() != n || a.cols() != n) {
            return Err(Error::Dimension(format!("generator A{} is not {n}x{n}", bad + 1)));
        }
        let flat = Matrix::from_columns(
            &generators.iter().map(|a| a.entries().to_vec()).collect::<Vec<_>>(),
        )?;
        if n > 0 && flat.rank() != n {
            return Err(Error::DependentGenerators);
        }
        Ok(GeneratorSet { variables, generators })
    }

    pub fn n(&self) -> usize {
        self.generators.len()
    }

    pub fn variables(&self) -> &Vars {
        &self.variables
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.generators
    }

    /// Coordinates of `a` in the basis `A_1..A_n`, if `a` lies in the span.
    pub fn coordinates_of(&self, a: &Matrix) -> Result<Option<Vec<Rational>>> {
        let flat = Matrix::from_columns(
            &self.generators.iter().map(|g| g.entries().to_vec()).collect::<Vec<_>>(),
        )?;
        Ok(solve(&flat, a.entries())?.map(|(x, _)| x))
    }

    pub fn combination(&self, coeffs: &[Rational]) -> Matrix {
        Matrix::combination(coeffs, &self.generators)
    }
}

#[derive(Serialize, Deserialize)]
struct GeneratorSetRecord {
    n: usize,
    variables: Vec<String>,
    generators: Vec<Matrix>,
}

impl Serialize for GeneratorSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GeneratorSetRecord {
            n: self.n(),
            variables: self.variables.as_ref().clone(),
            generators: self.generators.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GeneratorSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let rec = GeneratorSetRecord::deserialize(d)?;
        if rec.n != rec.variables.len() {
            return Err(D::Error::custom("`n` differs from the number of variables"));
        }
        GeneratorSet::new(std::sync::Arc::new(rec.variables), rec.generators).map_err(D::Error::custom)
    }
}

/// `c[i][j][k]` with `[A_i, A_j] = sum_k c[i][j][k] A_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants(pub Vec<Vec<Vec<Rational>>>);

impl StructureConstants {
    pub fn all_zero(&self) -> bool {
        self.0.iter().flatten().flatten().all(Zero::is_zero)
    }
}

/// Solves every bracket `[A_i, A_j]` in the span of the generators.
pub fn validate_algebra(g: &GeneratorSet) -> Result<StructureConstants> {
    let n = g.n();
    let flat = Matrix::from_columns(
        &g.generators.iter().map(|a| a.entries().to_vec()).collect::<Vec<_>>(),
    )?;
    let mut c = vec![vec![vec![Rational::zero(); n]; n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            let br = g.generators[i].bracket(&g.generators[j]);
            let (x, _) = solve(&flat, br.entries())?.ok_or(Error::NotClosed { i: i + 1, j: j + 1 })?;
            c[j][i] = x.iter().map(|v| -v.clone()).collect();
            c[i][j] = x;
        }
    }
    Ok(StructureConstants(c))
}

/// `delta_A(p) = sum_i (A x)_i * dp/dx_i`.
pub fn infinitesimal_apply(a: &Matrix, vars: &Vars, p: &MultiPoly) -> Result<MultiPoly> {
    let n = vars.len();
    if a.rows() != n || a.cols() != n {
        return Err(Error::Dimension(format!(
            "{}x{} matrix on {} variables",
            a.rows(),
            a.cols(),
            n
        )));
    }
    let mut out = MultiPoly::zero(vars.clone());
    for (i, name) in vars.iter().enumerate() {
        let row = a.row(i);
        if row.iter().all(Zero::is_zero) {
            continue;
        }
        let dp = match p.variable_index(name) {
            Ok(k) => p.derivative_index(k),
            Err(_) => continue,
        };
        if dp.is_zero() {
            continue;
        }
        let lin = MultiPoly::linear_form(vars.clone(), row);
        out = &out + &(&lin * &dp);
    }
    Ok(out)
}

/// Determinant of the square matrix whose `k`-th column is `A_k x`.
///
/// Expands along rows with memoized minors indexed by column subsets, so
/// no polynomial division is needed.
pub fn linear_column_determinant(mats: &[Matrix], vars: &Vars) -> Result<MultiPoly> {
    let k = mats.len();
    if k == 0 {
        return Ok(MultiPoly::one(vars.clone()));
    }
    let n = vars.len();
    if mats.iter().any(|a| a.cols() != n || a.rows() != k) {
        return Err(Error::Dimension(format!(
            "expected {k} matrices of size {k}x{n}"
        )));
    }
    assert!(k < 64, "determinant size out of range");
    // entry (row r, column c) is the linear form (A_c x)_r
    let entry: Vec<Vec<MultiPoly>> = (0..k)
        .map(|r| (0..k).map(|c| MultiPoly::linear_form(vars.clone(), mats[c].row(r))).collect())
        .collect();

    let mut layer: HashMap<u64, MultiPoly> = HashMap::new();
    layer.insert(0, MultiPoly::one(vars.clone()));
    for r in 0..k {
        let mut next: HashMap<u64, MultiPoly> = HashMap::new();
        for (mask, minor) in &layer {
            if minor.is_zero() {
                continue;
            }
            for c in 0..k {
                if mask & (1 << c) != 0 || entry[r][c].is_zero() {
                    continue;
                }
                let new_mask = mask | (1 << c);
                // position of c among the columns of new_mask, and the
                // Laplace sign for expanding the last row r
                let pos = (new_mask & ((1u64 << c) - 1)).count_ones() as usize;
                let mut term = &entry[r][c] * minor;
                if (pos + r) % 2 == 1 {
                    term = -&term;
                }
                next.entry(new_mask)
                    .and_modify(|acc| *acc = &*acc + &term)
                    .or_insert(term);
            }
        }
        layer = next;
    }
    let full = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
    Ok(layer.remove(&full).unwrap_or_else(|| MultiPoly::zero(vars.clone())))
}

/// `f(x) = det(A_1 x, ..., A_n x)`.
pub fn discriminant(g: &GeneratorSet) -> Result<MultiPoly> {
    linear_column_determinant(&g.generators, &g.variables)
}

/// Values `d chi(A_k)` and traces `tr(A_k)` for each generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterData {
    #[serde(with = "serde_vec")]
    pub values: Vec<Rational>,
    #[serde(with = "serde_vec")]
    pub trace_values: Vec<Rational>,
}

impl CharacterData {
    /// `d chi` of the combination `sum coeffs[k] A_k`.
    pub fn evaluate(&self, coeffs: &[Rational]) -> Rational {
        coeffs.iter().zip(&self.values).map(|(a, b)| a * b).sum()
    }
}

/// Extracts `lambda_k` with `delta_{A_k}(f) = lambda_k f`.
pub fn character(g: &GeneratorSet, f: &MultiPoly) -> Result<CharacterData> {
    if f.is_zero() {
        return Err(Error::Domain("character of the zero polynomial".into()));
    }
    let mut values = Vec::with_capacity(g.n());
    for (k, a) in g.generators.iter().enumerate() {
        let d = infinitesimal_apply(a, &g.variables, f)?;
        values.push(d.ratio_to(f).ok_or(Error::NotRelativeInvariant(k + 1))?);
    }
    let trace_values = g.generators.iter().map(Matrix::trace).collect();
    Ok(CharacterData { values, trace_values })
}

/// Coefficient vectors (in the generator basis) spanning `ker d chi`.
pub fn annihilator_coordinates(c: &CharacterData) -> Result<Vec<Vec<Rational>>> {
    if c.values.iter().all(Zero::is_zero) {
        return Err(Error::DegenerateCharacter);
    }
    let row = Matrix::from_rows(vec![c.values.clone()])?;
    Ok(Echelon::new(&row).kernel())
}

/// A basis of `ker d chi` as matrices.
pub fn annihilator_basis(g: &GeneratorSet, c: &CharacterData) -> Result<Vec<Matrix>> {
    Ok(annihilator_coordinates(c)?
        .iter()
        .map(|v| g.combination(v))
        .collect())
}

/// `d chi(A_k) = tr(A_k)` for every generator.
pub fn is_special(c: &CharacterData) -> bool {
    c.values == c.trace_values
}

fn dual_name(name: &str) -> String {
    match name.strip_suffix('*') {
        Some(base) => base.to_string(),
        None => format!("{name}*"),
    }
}

/// The contragredient action `-A_k^t` on dual variables (`x` becomes `x*`,
/// and `x*` becomes `x`, so dualizing twice restores the original set).
pub fn dual_generators(g: &GeneratorSet) -> GeneratorSet {
    let names: Vec<String> = g.variables.iter().map(|v| dual_name(v)).collect();
    GeneratorSet {
        variables: std::sync::Arc::new(names),
        generators: g.generators.iter().map(|a| -&a.transpose()).collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualCharacterReport {
    #[serde(with = "serde_vec")]
    pub primal: Vec<Rational>,
    #[serde(with = "serde_vec")]
    pub dual: Vec<Rational>,
    /// `d chi_f(A) - d chi_{f*}(A) = 2 tr(A)` for every generator.
    pub difference_formula: bool,
    /// `d chi_{f*}(-A^t) = -d chi_f(A)` for every generator.
    pub inverse_character: bool,
    pub special: bool,
}

impl DualCharacterReport {
    /// The difference formula holds and the dual character is inverse
    /// exactly in the special case.
    pub fn holds(&self) -> bool {
        self.difference_formula && self.inverse_character == self.special
    }
}

pub fn dual_character_check(g: &GeneratorSet) -> Result<DualCharacterReport> {
    let f = discriminant(g)?;
    let gd = dual_generators(g);
    let fd = discriminant(&gd)?;
    if fd.is_zero() {
        return Err(Error::DualDegenerate);
    }
    let c = character(g, &f)?;
    let cd = character(&gd, &fd)?;
    let two = Rational::from_integer(2.into());
    let difference_formula = (0..g.n()).all(|k| &c.values[k] - &cd.values[k] == &two * &c.trace_values[k]);
    let inverse_character = (0..g.n()).all(|k| cd.values[k] == -c.values[k].clone());
    Ok(DualCharacterReport {
        primal: c.values.clone(),
        dual: cd.values,
        difference_formula,
        inverse_character,
        special: is_special(&c),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DivisorKind {
    NotPrehomogeneous,
    PrehomogeneousDeterminant,
    LinearFreeDivisor,
}

impl std::fmt::Display for DivisorKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            DivisorKind::NotPrehomogeneous => "not-prehomogeneous",
            DivisorKind::PrehomogeneousDeterminant => "prehomogeneous-determinant",
            DivisorKind::LinearFreeDivisor => "linear-free-divisor",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub kind: DivisorKind,
    pub reduced: bool,
    pub special: bool,
    pub closed_under_bracket: bool,
}

/// Squarefree test parameters.
#[derive(Clone, Copy, Debug)]
pub struct SquarefreeOptions {
    pub trials: u32,
    pub seed: u64,
}

impl Default for SquarefreeOptions {
    fn default() -> Self {
        SquarefreeOptions { trials: 8, seed: 0 }
    }
}

pub fn classify(g: &GeneratorSet, opts: SquarefreeOptions) -> Result<Classification> {
    validate_algebra(g)?;
    let f = discriminant(g)?;
    classify_discriminant(g, &f, opts)
}

/// Classification for an already computed discriminant of a validated set.
pub fn classify_discriminant(g: &GeneratorSet, f: &MultiPoly, opts: SquarefreeOptions) -> Result<Classification> {
    if f.is_zero() {
        return Ok(Classification {
            kind: DivisorKind::NotPrehomogeneous,
            reduced: false,
            special: false,
            closed_under_bracket: true,
        });
    }
    let reduced = is_squarefree(f, opts.trials, opts.seed)?;
    let special = is_special(&character(g, f)?);
    Ok(Classification {
        kind: if reduced { DivisorKind::LinearFreeDivisor } else { DivisorKind::PrehomogeneousDeterminant },
        reduced,
        special,
        closed_under_bracket: true,
    })
}

/// The Euler element `E/n` expressed in the generator basis, if it lies in
/// the span.
pub fn euler_coordinates(g: &GeneratorSet) -> Result<Option<Vec<Rational>>> {
    let n = g.n();
    let e = Matrix::identity(n).scale(&Rational::new(One::one(), (n as i64).into()));
    g.coordinates_of(&e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::vars;
    use crate::rational::{frac, rat};

    fn diag2() -> GeneratorSet {
        GeneratorSet::new(
            vars(&["x", "y"]),
            vec![Matrix::diagonal(&[rat(1), rat(0)]), Matrix::diagonal(&[rat(0), rat(1)])],
        )
        .unwrap()
    }

    #[test]
    fn construction_checks() {
        let dup = GeneratorSet::new(
            vars(&["x", "y"]),
            vec![Matrix::diagonal(&[rat(1), rat(0)]), Matrix::diagonal(&[rat(1), rat(0)])],
        );
        assert_eq!(dup, Err(Error::DependentGenerators));
        let short = GeneratorSet::new(vars(&["x", "y"]), vec![Matrix::identity(2)]);
        assert!(matches!(short, Err(Error::Dimension(_))));
    }

    #[test]
    fn commuting_generators_are_closed() {
        assert!(validate_algebra(&diag2()).unwrap().all_zero());
    }

    #[test]
    fn non_spanning_bracket_is_rejected() {
        // E, N = E_12, and M = E_21: [N, M] = diag(1,-1) is outside the span
        let g = GeneratorSet::new(
            vars(&["x", "y", "z"]),
            vec![Matrix::identity(3), Matrix::unit(3, 0, 1), Matrix::unit(3, 1, 0)],
        )
        .unwrap();
        assert_eq!(validate_algebra(&g), Err(Error::NotClosed { i: 2, j: 3 }));
        assert!(classify(&g, SquarefreeOptions::default()).is_err());
    }

    #[test]
    fn infinitesimal_apply_examples() {
        let ctx = vars(&["x", "y"]);
        let xy = &MultiPoly::var(ctx.clone(), "x").unwrap() * &MultiPoly::var(ctx.clone(), "y").unwrap();
        assert_eq!(infinitesimal_apply(&Matrix::identity(2), &ctx, &xy).unwrap(), xy.scale(&rat(2)));
        assert_eq!(infinitesimal_apply(&Matrix::diagonal(&[rat(1), rat(0)]), &ctx, &xy).unwrap(), xy);
        let half = Matrix::identity(2).scale(&frac(1, 2));
        assert_eq!(infinitesimal_apply(&half, &ctx, &xy).unwrap(), xy);
        assert!(infinitesimal_apply(&Matrix::identity(3), &ctx, &xy).is_err());
    }

    #[test]
    fn discriminant_and_character_of_normal_crossings() {
        let g = diag2();
        let f = discriminant(&g).unwrap();
        assert_eq!(f.to_string(), "x*y");
        let c = character(&g, &f).unwrap();
        assert_eq!(c.values, vec![rat(1), rat(1)]);
        assert!(is_special(&c));
        let ann = annihilator_basis(&g, &c).unwrap();
        assert_eq!(ann, vec![Matrix::diagonal(&[rat(1), rat(-1)])]);

        let one = GeneratorSet::new(vars(&["x"]), vec![Matrix::identity(1)]).unwrap();
        let f1 = discriminant(&one).unwrap();
        assert_eq!(f1.to_string(), "x");
        assert!(annihilator_basis(&one, &character(&one, &f1).unwrap()).unwrap().is_empty());
    }

    #[test]
    fn annihilator_in_normal_form() {
        let c = CharacterData {
            values: vec![rat(1), rat(0), rat(0)],
            trace_values: vec![rat(0); 3],
        };
        let g = GeneratorSet::new(
            vars(&["x", "y", "z"]),
            (0..3).map(|i| Matrix::unit(3, i, i)).collect(),
        )
        .unwrap();
        assert_eq!(annihilator_basis(&g, &c).unwrap(), vec![Matrix::unit(3, 1, 1), Matrix::unit(3, 2, 2)]);
        let zero = CharacterData { values: vec![rat(0); 3], trace_values: vec![rat(0); 3] };
        assert_eq!(annihilator_basis(&g, &zero), Err(Error::DegenerateCharacter));
    }

    #[test]
    fn dual_generators_and_double_dual() {
        let g = diag2();
        let d = dual_generators(&g);
        assert_eq!(d.generators()[0], Matrix::diagonal(&[rat(-1), rat(0)]));
        assert_eq!(d.variables().as_ref(), &vec!["x*".to_string(), "y*".to_string()]);
        assert_eq!(dual_generators(&d), g);
        let rep = dual_character_check(&g).unwrap();
        assert!(rep.difference_formula && rep.inverse_character && rep.holds());
    }

    #[test]
    fn zero_discriminant_is_not_prehomogeneous() {
        // x d/dy and y d/dy both point along y
        let g = GeneratorSet::new(
            vars(&["x", "y"]),
            vec![Matrix::unit(2, 1, 0), Matrix::unit(2, 1, 1)],
        )
        .unwrap();
        let c = classify(&g, SquarefreeOptions::default()).unwrap();
        assert_eq!(c.kind, DivisorKind::NotPrehomogeneous);
    }
}
