//! Tropical polyhedral cones in both representations.
//!
//! A cone is either the solution set of `A x ≤ B x` ([`IneqSystem`]) or the
//! set of tropical linear combinations of finitely many vectors
//! ([`GeneratorSet`]). Membership in a generated cone is decided exactly by
//! residuation: [`residual`] gives the greatest `λ` with `λ ⊗ g ≤ x`, and `x`
//! is generated iff the combination of these greatest coefficients rebuilds
//! `x`.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::maxplus::{row_product, tmul, Matrix, Scalar, Vector};

/// The cone `{x | A x ≤ B x}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IneqSystem {
    a: Matrix,
    b: Matrix,
}

impl IneqSystem {
    pub fn new(a: Matrix, b: Matrix) -> Result<Self> {
        if a.cols() != b.cols() {
            return Err(Error::DimensionMismatch { expected: a.cols(), found: b.cols() });
        }
        if a.rows() != b.rows() {
            return Err(Error::DimensionMismatch { expected: a.rows(), found: b.rows() });
        }
        Ok(IneqSystem { a, b })
    }

    /// The unconstrained system in dimension `dim`.
    pub fn empty(dim: usize) -> Self {
        IneqSystem { a: Matrix::bottom(0, dim), b: Matrix::bottom(0, dim) }
    }

    /// Builds a system from `(a_k, b_k)` row pairs.
    pub fn from_rows(dim: usize, rows: Vec<(Vec<Scalar>, Vec<Scalar>)>) -> Result<Self> {
        let (left, right): (Vec<_>, Vec<_>) = rows.into_iter().unzip();
        IneqSystem::new(Matrix::from_rows(dim, left)?, Matrix::from_rows(dim, right)?)
    }

    pub fn dim(&self) -> usize {
        self.a.cols()
    }

    pub fn len(&self) -> usize {
        self.a.rows()
    }

    pub fn is_empty(&self) -> bool {
        self.a.rows() == 0
    }

    pub fn lhs(&self) -> &Matrix {
        &self.a
    }

    pub fn rhs(&self) -> &Matrix {
        &self.b
    }

    /// The `k`-th inequality as `(a_k, b_k)`.
    pub fn row(&self, k: usize) -> (&[Scalar], &[Scalar]) {
        (self.a.row(k), self.b.row(k))
    }

    pub fn push_row(&mut self, a: &[Scalar], b: &[Scalar]) -> Result<()> {
        if a.len() != self.dim() || b.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: if a.len() != self.dim() { a.len() } else { b.len() },
            });
        }
        self.a.push_row(a);
        self.b.push_row(b);
        Ok(())
    }

    /// The subsystem made of the given rows, in that order.
    pub fn select_rows(&self, rows: &[usize]) -> IneqSystem {
        IneqSystem { a: self.a.select_rows(rows), b: self.b.select_rows(rows) }
    }

    /// Whether `A x ≤ B x` holds row by row.
    pub fn satisfies(&self, x: &Vector) -> Result<bool> {
        self.check_dim(x)?;
        Ok((0..self.len()).all(|k| {
            let (a, b) = self.row(k);
            row_product(a, x) <= row_product(b, x)
        }))
    }

    pub(crate) fn check_dim(&self, x: &Vector) -> Result<()> {
        if x.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: x.len() });
        }
        Ok(())
    }
}

/// A set of normalized, pairwise non-proportional nonzero vectors.
///
/// Insertion order is kept; [`GeneratorSet::canonical`] sorts for output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    dim: usize,
    vectors: Vec<Vector>,
    seen: HashSet<Vector>,
}

impl GeneratorSet {
    pub fn new(dim: usize) -> Self {
        GeneratorSet { dim, vectors: Vec::new(), seen: HashSet::new() }
    }

    /// Normalizes every vector and drops proportional duplicates.
    pub fn from_vectors(dim: usize, vectors: impl IntoIterator<Item = Vector>) -> Result<Self> {
        let mut set = GeneratorSet::new(dim);
        for v in vectors {
            set.insert(v)?;
        }
        Ok(set)
    }

    /// Adds the ray of `v`; returns `false` if it was already present.
    pub fn insert(&mut self, v: Vector) -> Result<bool> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: v.len() });
        }
        let n = v.normalize()?;
        if self.seen.contains(&n) {
            return Ok(false);
        }
        self.seen.insert(n.clone());
        self.vectors.push(n);
        Ok(true)
    }

    pub fn contains_ray(&self, v: &Vector) -> bool {
        v.normalize().is_ok_and(|n| self.seen.contains(&n))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vector] {
        &self.vectors
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Vector> {
        self.vectors.iter()
    }

    /// The vectors in sorted order (lexicographic, `-inf` first).
    pub fn canonical(&self) -> Vec<Vector> {
        let mut out = self.vectors.clone();
        out.sort();
        out
    }

    /// Same set of rays, regardless of insertion order.
    pub fn same_rays(&self, other: &GeneratorSet) -> bool {
        self.dim == other.dim && self.seen == other.seen
    }
}

impl<'a> IntoIterator for &'a GeneratorSet {
    type Item = &'a Vector;
    type IntoIter = std::slice::Iter<'a, Vector>;

    fn into_iter(self) -> Self::IntoIter {
        self.vectors.iter()
    }
}

/// The affine system `A x ⊕ c ≤ B x ⊕ e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSystem {
    pub a: Matrix,
    pub c: Vector,
    pub b: Matrix,
    pub e: Vector,
}

impl AffineSystem {
    pub fn new(a: Matrix, c: Vector, b: Matrix, e: Vector) -> Result<Self> {
        let n = a.rows();
        for len in [b.rows(), c.len(), e.len()] {
            if len != n {
                return Err(Error::DimensionMismatch { expected: n, found: len });
            }
        }
        if a.cols() != b.cols() {
            return Err(Error::DimensionMismatch { expected: a.cols(), found: b.cols() });
        }
        Ok(AffineSystem { a, c, b, e })
    }

    pub fn dim(&self) -> usize {
        self.a.cols()
    }

    pub fn satisfies(&self, x: &Vector) -> Result<bool> {
        let ax = self.a.mat_vec(x)?;
        let bx = self.b.mat_vec(x)?;
        Ok((0..self.a.rows()).all(|k| ax[k].oplus(&self.c[k]) <= bx[k].oplus(&self.e[k])))
    }
}

/// The greatest `λ` with `λ ⊗ g ≤ x`.
pub fn residual(g: &Vector, x: &Vector) -> Result<Scalar> {
    if g.len() != x.len() {
        return Err(Error::DimensionMismatch { expected: g.len(), found: x.len() });
    }
    let mut best: Option<Scalar> = None;
    for (gi, xi) in g.iter().zip(x.iter()) {
        let Some(gv) = gi.finite() else { continue };
        let Some(xv) = xi.finite() else { return Ok(Scalar::Bottom) };
        let candidate = Scalar::Finite(xv - gv);
        if best.as_ref().is_none_or(|b| candidate < *b) {
            best = Some(candidate);
        }
    }
    best.ok_or(Error::ZeroVector)
}

/// Whether `x` is a tropical linear combination of `generators`.
///
/// Zero generators are ignored.
pub fn member<'a>(generators: impl IntoIterator<Item = &'a Vector>, x: &Vector) -> Result<bool> {
    let mut rebuilt = vec![Scalar::Bottom; x.len()];
    for g in generators {
        if g.is_zero() {
            continue;
        }
        let lambda = residual(g, x)?;
        if lambda.is_bottom() {
            continue;
        }
        for (r, gi) in rebuilt.iter_mut().zip(g.iter()) {
            let v = tmul(&lambda, gi);
            if v > *r {
                *r = v;
            }
        }
    }
    Ok(rebuilt == x.entries())
}

/// The residuation extremality test: `h` is extreme in the cone generated by
/// `pool ∪ {h}` iff it is not a combination of the pool members that are not
/// proportional to it.
pub fn residuation_extreme<'a>(
    h: &Vector,
    pool: impl IntoIterator<Item = &'a Vector>,
) -> Result<bool> {
    if h.is_zero() {
        return Err(Error::ZeroVector);
    }
    let others = pool.into_iter().filter(|g| !g.proportional(h));
    Ok(!member(others, h)?)
}

/// Lifts `A x ⊕ c ≤ B x ⊕ e` to the cone `[A | c] y ≤ [B | e] y` in one more
/// dimension; the point `x` corresponds to `(x, 0)`.
pub fn homogenize(system: &AffineSystem) -> IneqSystem {
    let d = system.dim();
    let n = system.a.rows();
    let mut lifted = IneqSystem::empty(d + 1);
    for k in 0..n {
        let mut left = system.a.row(k).to_vec();
        left.push(system.c[k].clone());
        let mut right = system.b.row(k).to_vec();
        right.push(system.e[k].clone());
        lifted.push_row(&left, &right).expect("shapes checked at construction");
    }
    lifted
}

/// Splits generators of a homogenized cone into the extreme points
/// (last coordinate finite, rescaled to `0`) and extreme rays (last
/// coordinate `-inf`) of the affine polyhedron, dropping the last coordinate.
pub fn dehomogenize(generators: &GeneratorSet) -> Result<(Vec<Vector>, Vec<Vector>)> {
    let lifted_dim = generators.dim();
    if lifted_dim < 2 {
        return Err(Error::OutOfRange("a homogenized cone has dimension at least 2".into()));
    }
    let keep: Vec<usize> = (0..lifted_dim - 1).collect();
    let mut points = Vec::new();
    let mut rays = Vec::new();
    for g in generators {
        let last = &g[lifted_dim - 1];
        match last.inverse() {
            Some(kappa) => points.push(g.scale(&kappa).project(&keep)),
            None => rays.push(g.project(&keep)),
        }
    }
    points.sort();
    rays.sort();
    Ok((points, rays))
}
