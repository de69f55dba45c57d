//! Quiver representation spaces and the generators of the quiver group
//! action `phi_(i,j) -> g_j phi_(i,j) g_i^{-1}` modulo its scalar center.

use std::collections::BTreeMap;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::liealg::{classify_discriminant, discriminant, Classification, GeneratorSet, SquarefreeOptions};
use crate::linalg::Matrix;
use crate::poly::{vars, MultiPoly, Vars};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    edges: Vec<(usize, usize)>,
}

impl Quiver {
    /// Builds a quiver from vertex names and edges given by name. Multiple
    /// edges are allowed; loops are not.
    pub fn new<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)]) -> Result<Self> {
        let vertices: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        for (k, v) in vertices.iter().enumerate() {
            if vertices[..k].contains(v) {
                return Err(Error::Quiver(format!("duplicate vertex `{v}`")));
            }
        }
        let lookup = |name: &str| {
            vertices
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| Error::Quiver(format!("edge references unknown vertex `{name}`")))
        };
        let mut idx = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            let (i, j) = (lookup(a.as_ref())?, lookup(b.as_ref())?);
            if i == j {
                return Err(Error::Quiver(format!("loop at vertex `{}`", vertices[i])));
            }
            idx.push((i, j));
        }
        Ok(Quiver { vertices, edges: idx })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    /// Edges as `(source, target)` vertex indices.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }
}

/// Positive integer dimensions, one per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionVector(Vec<u32>);

impl DimensionVector {
    pub fn new(dims: Vec<u32>) -> Result<Self> {
        if let Some(k) = dims.iter().position(|&d| d == 0) {
            return Err(Error::Quiver(format!("dimension at vertex {} must be positive", k + 1)));
        }
        Ok(DimensionVector(dims))
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    fn check(&self, q: &Quiver) -> Result<()> {
        if self.0.len() != q.vertices.len() {
            return Err(Error::Quiver(format!(
                "{} dimensions for {} vertices",
                self.0.len(),
                q.vertices.len()
            )));
        }
        Ok(())
    }
}

/// `q(d) = sum d_i^2 - sum_{(i,j)} d_i d_j`.
pub fn tits_form(q: &Quiver, d: &DimensionVector) -> Result<i64> {
    d.check(q)?;
    let d = &d.0;
    let squares: i64 = d.iter().map(|&x| i64::from(x) * i64::from(x)).sum();
    let edges: i64 = q.edges.iter().map(|&(i, j)| i64::from(d[i]) * i64::from(d[j])).sum();
    Ok(squares - edges)
}

/// Position of one edge's `d_target x d_source` block among the flat
/// coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeBlock {
    pub source: usize,
    pub target: usize,
    pub rows: usize,
    pub cols: usize,
    pub offset: usize,
}

impl EdgeBlock {
    pub fn index(&self, r: usize, c: usize) -> usize {
        self.offset + r * self.cols + c
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepLayout {
    pub variables: Vars,
    pub blocks: Vec<EdgeBlock>,
}

impl RepLayout {
    pub fn dim(&self) -> usize {
        self.variables.len()
    }
}

/// Coordinates `x{e}_{r}_{c}` (one-based), edge by edge, row-major within
/// each edge.
pub fn rep_space(q: &Quiver, d: &DimensionVector) -> Result<RepLayout> {
    d.check(q)?;
    let mut names = Vec::new();
    let mut blocks = Vec::new();
    for (e, &(i, j)) in q.edges.iter().enumerate() {
        let (rows, cols) = (d.0[j] as usize, d.0[i] as usize);
        blocks.push(EdgeBlock { source: i, target: j, rows, cols, offset: names.len() });
        for r in 0..rows {
            for c in 0..cols {
                names.push(format!("x{}_{}_{}", e + 1, r + 1, c + 1));
            }
        }
    }
    Ok(RepLayout { variables: vars(&names), blocks })
}

/// The endomorphism `phi -> B phi` on edges into `vertex` and `phi -> -phi B`
/// on edges out of it, for `B = E_{r c}` in `gl_{d_vertex}`.
fn elementary_action(layout: &RepLayout, vertex: usize, r: usize, c: usize) -> Matrix {
    let n = layout.dim();
    let mut m = Matrix::zeros(n, n);
    for b in &layout.blocks {
        if b.target == vertex {
            // (E_rc phi)[r][k] = phi[c][k]
            for k in 0..b.cols {
                m[(b.index(r, k), b.index(c, k))] += Rational::one();
            }
        }
        if b.source == vertex {
            // (phi E_rc)[k][c] = phi[k][r]
            for k in 0..b.rows {
                m[(b.index(k, c), b.index(k, r))] -= Rational::one();
            }
        }
    }
    m
}

/// Generators of the quiver algebra acting on `Rep(Q, d)`: vertices in
/// order, elementary matrices row-major, with `E_11` of the last vertex
/// removed to complement the center.
pub fn infinitesimal_generators(q: &Quiver, d: &DimensionVector) -> Result<GeneratorSet> {
    let t = tits_form(q, d)?;
    if t != 1 {
        return Err(Error::Quiver(format!("Tits form q(d) = {t}, expected 1")));
    }
    let layout = rep_space(q, d)?;
    let n = layout.dim();
    let mut center = Matrix::zeros(n, n);
    let mut gens = Vec::new();
    let last = q.vertices.len() - 1;
    for (v, &dv) in d.0.iter().enumerate() {
        let dv = dv as usize;
        for r in 0..dv {
            for c in 0..dv {
                let m = elementary_action(&layout, v, r, c);
                if r == c {
                    center = &center + &m;
                }
                if !(v == last && r == 0 && c == 0) {
                    gens.push(m);
                }
            }
        }
    }
    assert!(center.is_zero(), "the scalar center must act trivially");
    GeneratorSet::new(layout.variables.clone(), gens).map_err(|e| match e {
        Error::DependentGenerators => {
            Error::Quiver("quiver generators are dependent (is the quiver connected?)".into())
        }
        other => other,
    })
}

/// Generators, discriminant and classification of a quiver with `q(d) = 1`.
#[derive(Clone, Debug)]
pub struct QuiverDiscriminant {
    pub generators: GeneratorSet,
    pub f: MultiPoly,
    pub classification: Classification,
}

pub fn quiver_discriminant(q: &Quiver, d: &DimensionVector, opts: SquarefreeOptions) -> Result<QuiverDiscriminant> {
    let generators = infinitesimal_generators(q, d)?;
    let f = discriminant(&generators)?;
    let classification = classify_discriminant(&generators, &f, opts)?;
    Ok(QuiverDiscriminant { generators, f, classification })
}

/// A quiver together with its dimension vector, in the JSON form
/// `{ "vertices": [...], "edges": [[a, b], ...], "dimensions": {v: d} }`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverSpec {
    pub quiver: Quiver,
    pub dims: DimensionVector,
}

#[derive(Serialize, Deserialize)]
struct QuiverRecord {
    vertices: Vec<String>,
    edges: Vec<(String, String)>,
    dimensions: BTreeMap<String, u32>,
}

impl QuiverSpec {
    pub fn new<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)], dims: Vec<u32>) -> Result<Self> {
        let quiver = Quiver::new(vertices, edges)?;
        let dims = DimensionVector::new(dims)?;
        dims.check(&quiver)?;
        Ok(QuiverSpec { quiver, dims })
    }

    pub fn generators(&self) -> Result<GeneratorSet> {
        infinitesimal_generators(&self.quiver, &self.dims)
    }

    pub fn tits_form(&self) -> i64 {
        tits_form(&self.quiver, &self.dims).expect("dimensions validated on construction")
    }
}

impl Serialize for QuiverSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v = &self.quiver.vertices;
        QuiverRecord {
            vertices: v.clone(),
            edges: self.quiver.edges.iter().map(|&(i, j)| (v[i].clone(), v[j].clone())).collect(),
            dimensions: v.iter().cloned().zip(self.dims.0.iter().copied()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QuiverSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let rec = QuiverRecord::deserialize(d)?;
        let dims = rec
            .vertices
            .iter()
            .map(|v| rec.dimensions.get(v).copied().ok_or_else(|| D::Error::custom(format!("no dimension for vertex `{v}`"))))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        if rec.dimensions.len() != rec.vertices.len() {
            return Err(D::Error::custom("dimensions name a vertex that is not declared"));
        }
        QuiverSpec::new(&rec.vertices, &rec.edges, dims).map_err(D::Error::custom)
    }
}

/// One sink of dimension 2 fed by three sources of dimension 1.
pub fn star_2111() -> QuiverSpec {
    QuiverSpec::new(&["0", "1", "2", "3"], &[("1", "0"), ("2", "0"), ("3", "0")], vec![2, 1, 1, 1])
        .expect("valid fixture")
}

/// A sink of dimension 2 fed by one source of dimension 2 and three of
/// dimension 1.
pub fn dtilde3_22111() -> QuiverSpec {
    QuiverSpec::new(
        &["0", "1", "2", "3", "4"],
        &[("1", "0"), ("2", "0"), ("3", "0"), ("4", "0")],
        vec![2, 2, 1, 1, 1],
    )
    .expect("valid fixture")
}

/// A cycle with one vertex `t` of dimension 2 and a path `b1 -> ... -> bn`
/// of one-dimensional vertices, with edges `t -> b1` and `t -> bn`.
pub fn atilde(n: usize) -> Result<QuiverSpec> {
    if n < 2 {
        return Err(Error::Quiver("atilde-n needs n >= 2".into()));
    }
    let mut vertices = vec!["t".to_string()];
    vertices.extend((1..=n).map(|k| format!("b{k}")));
    let mut edges = vec![("t".to_string(), "b1".to_string()), ("t".to_string(), format!("b{n}"))];
    edges.extend((1..n).map(|k| (format!("b{k}"), format!("b{}", k + 1))));
    let mut dims = vec![2];
    dims.extend(std::iter::repeat_n(1, n));
    QuiverSpec::new(&vertices, &edges, dims)
}

/// Looks up `star-2111`, `dtilde3-22111` or `atilde-<n>`.
pub fn named_quiver(name: &str) -> Option<Result<QuiverSpec>> {
    match name {
        "star-2111" => Some(Ok(star_2111())),
        "dtilde3-22111" => Some(Ok(dtilde3_22111())),
        _ => {
            let n = name.strip_prefix("atilde-")?;
            Some(
                n.parse::<usize>()
                    .map_err(|_| Error::Quiver(format!("bad atilde size `{n}`")))
                    .and_then(atilde),
            )
        }
    }
}
