use std::fmt;
use std::ops::Index;

use super::scalar::{tadd, tmul, Scalar};
use crate::error::{Error, Result};

/// A max-plus vector. Storage is 0-based; user-facing text is 1-based.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Vector(Vec<Scalar>);

impl Vector {
    pub fn new(entries: Vec<Scalar>) -> Self {
        Vector(entries)
    }

    pub fn bottom(len: usize) -> Self {
        Vector(vec![Scalar::Bottom; len])
    }

    /// The canonical basis vector with `0` at `i` and `-inf` elsewhere.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Vector::bottom(len);
        v.0[i] = Scalar::unit();
        v
    }

    /// Integer entries, with `None` standing for `-inf`.
    pub fn from_ints(entries: &[Option<i64>]) -> Self {
        Vector(
            entries
                .iter()
                .map(|e| e.map_or(Scalar::Bottom, Scalar::from_int))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Scalar> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Scalar> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_bottom)
    }

    /// Indices of the finite entries, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_bottom())
            .map(|(i, _)| i)
            .collect()
    }

    /// `λ ⊗ x`, entrywise.
    pub fn scale(&self, lambda: &Scalar) -> Vector {
        Vector(self.0.iter().map(|x| tmul(lambda, x)).collect())
    }

    /// Entrywise maximum. Panics on a length mismatch.
    pub fn oplus(&self, other: &Vector) -> Vector {
        assert_eq!(self.len(), other.len(), "vector length mismatch");
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| tadd(a, b)).collect())
    }

    /// Entrywise `≤` in the standard partial order.
    pub fn le(&self, other: &Vector) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Rescales so that the first finite entry becomes `0`.
    pub fn normalize(&self) -> Result<Vector> {
        let first = self.0.iter().find(|x| !x.is_bottom()).ok_or(Error::ZeroVector)?;
        let kappa = first.inverse().expect("finite entry");
        Ok(self.scale(&kappa))
    }

    pub fn is_normalized(&self) -> bool {
        self.0.iter().find(|x| !x.is_bottom()).is_some_and(Scalar::is_unit)
    }

    /// Whether `other = λ ⊗ self` for some finite `λ`. Two zero vectors are
    /// proportional; a zero and a nonzero vector are not.
    pub fn proportional(&self, other: &Vector) -> bool {
        if self.len() != other.len() {
            return false;
        }
        let first = |v: &Vector| v.0.iter().position(|x| !x.is_bottom());
        let i = match (first(self), first(other)) {
            (Some(i), Some(j)) if i == j => i,
            (None, None) => return true,
            _ => return false,
        };
        let (Some(x0), Some(y0)) = (self.0[i].finite(), other.0[i].finite()) else { unreachable!() };
        let delta = y0 - x0;
        self.0.iter().zip(&other.0).all(|(x, y)| match (x.finite(), y.finite()) {
            (None, None) => true,
            (Some(x), Some(y)) => y - x == delta,
            _ => false,
        })
    }

    /// Drops coordinates outside `indices`, in the order given.
    pub fn project(&self, indices: &[usize]) -> Vector {
        Vector(indices.iter().map(|&i| self.0[i].clone()).collect())
    }
}

impl Index<usize> for Vector {
    type Output = Scalar;

    fn index(&self, i: usize) -> &Scalar {
        &self.0[i]
    }
}

impl From<Vec<Scalar>> for Vector {
    fn from(v: Vec<Scalar>) -> Self {
        Vector(v)
    }
}

impl FromIterator<Scalar> for Vector {
    fn from_iter<I: IntoIterator<Item = Scalar>>(iter: I) -> Self {
        Vector(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a Vector {
    type Item = &'a Scalar;
    type IntoIter = std::slice::Iter<'a, Scalar>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// The max-plus inner product `max_i (row_i + x_i)`. Panics on a length
/// mismatch.
pub fn row_product(row: &[Scalar], x: &Vector) -> Scalar {
    assert_eq!(row.len(), x.len(), "row length mismatch");
    row.iter()
        .zip(x.iter())
        .map(|(c, v)| tmul(c, v))
        .max()
        .unwrap_or(Scalar::Bottom)
}

/// Indices attaining `row · x`. When the product is `-inf` every index
/// attains it, so the full index set is returned.
pub fn argmax_set(row: &[Scalar], x: &Vector) -> Vec<usize> {
    let value = row_product(row, x);
    if value.is_bottom() {
        return (0..x.len()).collect();
    }
    row.iter()
        .zip(x.iter())
        .enumerate()
        .filter(|(_, (c, v))| tmul(c, v) == value)
        .map(|(i, _)| i)
        .collect()
}
