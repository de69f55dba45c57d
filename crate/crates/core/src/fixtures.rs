//! Named generator sets: the linear free divisors in dimension at most four,
//! binary cubics, the square of a 2x2 determinant, and the quiver examples.

use crate::error::{Error, Result};
use crate::liealg::GeneratorSet;
use crate::linalg::Matrix;
use crate::poly::{vars, UniPoly};
use crate::quiver::{named_quiver, QuiverSpec};
use crate::rational::{frac, rat, Rational};

#[derive(Clone, Debug)]
pub enum FixtureSource {
    Matrices(GeneratorSet),
    Quiver(QuiverSpec),
}

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    /// Short human label for `f`.
    pub label: String,
    /// Whether the Lie algebra is reductive. Supplied, never inferred.
    pub reductive: bool,
    pub source: FixtureSource,
}

impl Fixture {
    pub fn generators(&self) -> Result<GeneratorSet> {
        match &self.source {
            FixtureSource::Matrices(g) => Ok(g.clone()),
            FixtureSource::Quiver(q) => q.generators(),
        }
    }
}

fn m(rows: &[&[Rational]]) -> Matrix {
    Matrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).expect("square literal")
}

fn d(entries: &[Rational]) -> Matrix {
    Matrix::diagonal(entries)
}

fn set(names: &[&str], gens: Vec<Matrix>) -> GeneratorSet {
    GeneratorSet::new(vars(names), gens).expect("fixture generators are independent")
}

fn fixture(name: &str, label: &str, reductive: bool, g: GeneratorSet) -> Fixture {
    Fixture {
        name: name.to_string(),
        label: label.to_string(),
        reductive,
        source: FixtureSource::Matrices(g),
    }
}

fn coordinate_names(n: usize) -> Vec<String> {
    if n <= 4 {
        ["x", "y", "z", "w"][..n].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=n).map(|i| format!("x{i}")).collect()
    }
}

/// `x_1 ... x_n` with the diagonal unit matrices as generators.
pub fn normal_crossing(n: usize) -> Fixture {
    let names = coordinate_names(n);
    let gens = (0..n).map(|i| Matrix::unit(n, i, i)).collect();
    let g = GeneratorSet::new(vars(&names), gens).expect("units are independent");
    let label = if n <= 4 { names.concat() } else { format!("x1...x{n}") };
    fixture(&format!("nc-{n}"), &label, true, g)
}

/// `(y^2 + xz) z` with the Borel subalgebra of `gl_2`.
pub fn b2() -> Fixture {
    let z = rat(0);
    let g = set(
        &["x", "y", "z"],
        vec![
            Matrix::identity(3).scale(&frac(1, 3)),
            m(&[&[z.clone(), rat(-2), z.clone()], &[z.clone(), z.clone(), rat(1)], &[z.clone(), z.clone(), z.clone()]]),
            d(&[rat(-2), frac(-1, 2), rat(1)]),
        ],
    );
    fixture("b2", "(y^2+xz)z", false, g)
}

/// `(y^2 + xz) z w`.
pub fn c_b2() -> Fixture {
    let g = set(
        &["x", "y", "z", "w"],
        vec![
            Matrix::from_i64(&[&[0, -2, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 0], &[0, 0, 0, 0]]),
            d(&[rat(-2), frac(-1, 2), rat(1), rat(0)]),
            d(&[rat(-1), frac(-1, 2), rat(0), rat(1)]),
            d(&[rat(1), frac(1, 2), rat(0), rat(0)]),
        ],
    );
    fixture("c-b2", "(y^2+xz)zw", false, g)
}

/// `(yz + xw) z w`; not special, so the functional equation fails.
pub fn c2_g2() -> Fixture {
    let g = set(
        &["x", "y", "z", "w"],
        vec![
            Matrix::identity(4).scale(&frac(1, 4)),
            Matrix::from_i64(&[&[0, 0, -1, 0], &[0, 0, 0, 1], &[0, 0, 0, 0], &[0, 0, 0, 0]]),
            Matrix::from_i64(&[&[-1, 0, 0, 0], &[0, -2, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 0]]),
            Matrix::from_i64(&[&[-2, 0, 0, 0], &[0, -1, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 1]]),
        ],
    );
    fixture("c2-g2", "(yz+xw)zw", false, g)
}

/// `x (y^3 - 3xyz + 3x^2 w)`.
pub fn c_g3() -> Fixture {
    let g = set(
        &["x", "y", "z", "w"],
        vec![
            &Matrix::unit(4, 2, 0) + &Matrix::unit(4, 3, 1),
            &(&Matrix::unit(4, 1, 0) + &Matrix::unit(4, 2, 1)) + &Matrix::unit(4, 3, 2),
            d(&[frac(-1, 3), frac(1, 9), frac(5, 9), rat(1)]),
            d(&[frac(1, 3), frac(2, 9), frac(1, 9), rat(0)]),
        ],
    );
    fixture("c-g3", "x(y^3-3xyz+3x^2w)", false, g)
}

/// `gl_2` acting on binary cubics `x u^3 + y u^2 v + z u v^2 + w v^3`; the
/// discriminant is a multiple of the cubic discriminant.
pub fn gl2_cubics() -> Fixture {
    let g = set(
        &["x", "y", "z", "w"],
        vec![
            Matrix::from_i64(&[&[3, 0, 0, 0], &[0, 2, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 0]]),
            Matrix::from_i64(&[&[0, 0, 0, 0], &[3, 0, 0, 0], &[0, 2, 0, 0], &[0, 0, 1, 0]]),
            Matrix::from_i64(&[&[0, 1, 0, 0], &[0, 0, 2, 0], &[0, 0, 0, 3], &[0, 0, 0, 0]]),
            Matrix::from_i64(&[&[0, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 2, 0], &[0, 0, 0, 3]]),
        ],
    );
    fixture("gl2-cubics", "y^2z^2-4xz^3-4y^3w+18xyzw-27x^2w^2", true, g)
}

/// `gl_2` acting on 2x2 matrices by left multiplication; the discriminant
/// is `det^2`.
pub fn det_squared() -> Fixture {
    let names = ["x11", "x12", "x21", "x22"];
    let idx = |r: usize, c: usize| 2 * r + c;
    let mut gens = Vec::new();
    for r in 0..2 {
        for c in 0..2 {
            // (E_rc M)[r][k] = M[c][k]
            let mut a = Matrix::zeros(4, 4);
            for k in 0..2 {
                a[(idx(r, k), idx(c, k))] = rat(1);
            }
            gens.push(a);
        }
    }
    fixture("det2", "(x11x22-x12x21)^2", true, set(&names, gens))
}

fn quiver_fixture(name: &str) -> Option<Result<Fixture>> {
    let label = match name {
        "star-2111" => "product of the three 2x2 minors".to_string(),
        "dtilde3-22111" => "det^2 times the star-quiver minors".to_string(),
        other => format!("det^2 * x1...x{}", other.strip_prefix("atilde-")?.parse::<usize>().ok()?.saturating_sub(1)),
    };
    Some(named_quiver(name)?.map(|q| Fixture {
        name: name.to_string(),
        label,
        reductive: true,
        source: FixtureSource::Quiver(q),
    }))
}

/// Names accepted by [`named`], apart from the families `nc-<n>` and
/// `atilde-<n>`.
pub const NAMES: &[&str] = &[
    "nc-1", "nc-2", "nc-3", "nc-4", "b2", "c-b2", "c2-g2", "c-g3", "gl2-cubics", "det2", "star-2111",
    "dtilde3-22111", "atilde-2",
];

pub fn named(name: &str) -> Result<Fixture> {
    let fixed = match name {
        "b2" => Some(b2()),
        "c-b2" => Some(c_b2()),
        "c2-g2" => Some(c2_g2()),
        "c-g3" => Some(c_g3()),
        "gl2-cubics" => Some(gl2_cubics()),
        "det2" => Some(det_squared()),
        _ => None,
    };
    if let Some(f) = fixed {
        return Ok(f);
    }
    if let Some(n) = name.strip_prefix("nc-") {
        return match n.parse::<usize>() {
            Ok(n) if (1..64).contains(&n) => Ok(normal_crossing(n)),
            _ => Err(Error::Parse(format!("bad normal crossing size `{n}`"))),
        };
    }
    quiver_fixture(name).unwrap_or_else(|| Err(Error::Parse(format!("unknown fixture `{name}`"))))
}

/// The rows of the table of b-functions of linear free divisors in
/// dimension at most four, as `(n, f, reductive, b)` with `b` monic.
pub fn table_rows() -> Vec<(usize, &'static str, bool, UniPoly)> {
    let r = |roots: &[(Rational, u32)]| UniPoly::from_roots(roots);
    vec![
        (1, "x", true, r(&[(rat(-1), 1)])),
        (2, "xy", true, r(&[(rat(-1), 2)])),
        (3, "xyz", true, r(&[(rat(-1), 3)])),
        (3, "(y^2+xz)z", false, r(&[(frac(-5, 4), 1), (rat(-1), 2), (frac(-3, 4), 1)])),
        (4, "xyzw", true, r(&[(rat(-1), 4)])),
        (4, "(y^2+xz)zw", false, r(&[(frac(-5, 4), 1), (rat(-1), 3), (frac(-3, 4), 1)])),
        (4, "(yz+xw)zw", false, r(&[(frac(-4, 3), 1), (rat(-1), 3), (frac(-2, 3), 1)])),
        (
            4,
            "x(y^3-3xyz+3x^2w)",
            false,
            r(&[
                (frac(-7, 5), 1),
                (frac(-4, 3), 1),
                (frac(-6, 5), 1),
                (rat(-1), 3),
                (frac(-4, 5), 1),
                (frac(-2, 3), 1),
                (frac(-3, 5), 1),
            ]),
        ),
        (4, "y^2z^2-4xz^3-4y^3w+18xyzw-27x^2w^2", true, r(&[(frac(-7, 6), 1), (rat(-1), 2), (frac(-5, 6), 1)])),
    ]
}

/// b-functions of reduced discriminants that break the symmetry about -1.
pub fn asymmetric_examples() -> Vec<UniPoly> {
    vec![
        UniPoly::from_roots(&[(frac(-2, 3), 1), (rat(-1), 5), (frac(-4, 3), 1), (rat(-2), 1)]),
        UniPoly::from_roots(&[(rat(-1), 2), (rat(-2), 1)]),
    ]
}

/// Edge factors along the conormal chain of the star quiver, including the
/// cubic factor of the one crossing that is not codimension one.
pub fn star_chain_factors() -> Vec<UniPoly> {
    let s1 = UniPoly::from_integers(&[1, 1]);
    let cubic = &(&UniPoly::from_integers(&[2, 3]) * &UniPoly::from_integers(&[3, 3])) * &UniPoly::from_integers(&[4, 3]);
    vec![s1.clone(), s1.clone(), cubic, s1]
}

/// Points of the star quiver chain with generic covectors on their normal
/// spaces, as `(label, x0, y0)` in the coordinate order of the fixture.
pub fn star_chain_points() -> Vec<(&'static str, Vec<Rational>, Vec<Rational>)> {
    let v = |xs: &[i64]| xs.iter().map(|&x| rat(x)).collect::<Vec<_>>();
    vec![
        ("open", v(&[1, 0, 0, 1, 1, 1]), v(&[])),
        ("5,1", v(&[1, 0, 0, 1, 0, 1]), v(&[1])),
        ("4,3", v(&[1, 0, 0, 1, 0, 0]), v(&[1, 1])),
        ("3,3", v(&[1, 0, 1, 0, 0, 0]), v(&[1, 1, 1])),
        ("origin", v(&[0, 0, 0, 0, 0, 0]), v(&[1, 2, 3, 4, 5, 6])),
    ]
}
