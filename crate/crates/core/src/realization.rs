//! Root coordinates in an epsilon/delta basis with a diagonal bilinear form.

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::diagram::{Diagram, NodeId};
use crate::error::{Error, Result};
use crate::family::Parity;
use crate::Rational;

/// Coordinates of every vertex root of a diagram, indexed by node id - 1.
///
/// The form is `B(x, y) = sum_k metric[k] * x[k] * y[k]`. For the classical
/// families `metric[k]` is `+1` on epsilon coordinates and `-1` on delta
/// coordinates; the exceptional families use other diagonal weights.
///
/// `grading` is a linear functional whose value on a root is an integer with
/// the root's parity: even roots map to even integers, odd roots to odd ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootRealization {
    pub basis: Vec<String>,
    pub metric: Vec<Rational>,
    pub grading: Vec<Rational>,
    pub coords: Vec<Vec<Rational>>,
}

impl RootRealization {
    pub fn new(basis: Vec<String>, metric: Vec<Rational>, grading: Vec<Rational>, coords: Vec<Vec<Rational>>) -> Result<Self> {
        let dim = basis.len();
        for len in [metric.len(), grading.len()].into_iter().chain(coords.iter().map(Vec::len)) {
            if len != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: len });
            }
        }
        Ok(RootRealization { basis, metric, grading, coords })
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Sign of the form on each basis vector.
    pub fn signature(&self) -> Vec<i8> {
        self.metric
            .iter()
            .map(|w| if w.is_positive() { 1 } else if w.is_negative() { -1 } else { 0 })
            .collect()
    }

    pub fn root(&self, id: NodeId) -> Result<&[Rational]> {
        self.coords
            .get((id as usize).wrapping_sub(1))
            .map(Vec::as_slice)
            .ok_or(Error::UnknownVertex(id))
    }

    pub fn form_vec(&self, x: &[Rational], y: &[Rational]) -> Rational {
        self.metric
            .iter()
            .zip(x.iter().zip(y))
            .fold(Rational::zero(), |acc, (w, (a, b))| acc + w * a * b)
    }

    pub fn form(&self, a: NodeId, b: NodeId) -> Result<Rational> {
        Ok(self.form_vec(self.root(a)?, self.root(b)?))
    }

    pub fn norm(&self, id: NodeId) -> Result<Rational> {
        self.form(id, id)
    }

    /// `G[i][j] = B(alpha_i, alpha_j)`.
    pub fn gram(&self) -> Vec<Vec<Rational>> {
        self.coords
            .iter()
            .map(|x| self.coords.iter().map(|y| self.form_vec(x, y)).collect())
            .collect()
    }

    /// Parity read off the grading functional.
    pub fn parity_of(&self, x: &[Rational]) -> Option<Parity> {
        let g = self
            .grading
            .iter()
            .zip(x)
            .fold(Rational::zero(), |acc, (w, a)| acc + w * a);
        g.is_integer().then(|| Parity::of(g.to_integer()))
    }

    pub fn parity(&self, id: NodeId) -> Result<Option<Parity>> {
        Ok(self.parity_of(self.root(id)?))
    }

    /// `sum_i labels[i] * alpha_i`.
    pub fn weighted_sum(&self, labels: &[u32]) -> Result<Vec<Rational>> {
        if labels.len() != self.coords.len() {
            return Err(Error::DimensionMismatch { expected: self.coords.len(), found: labels.len() });
        }
        let mut sum = vec![Rational::zero(); self.dim()];
        for (a, x) in labels.iter().zip(&self.coords) {
            for (s, c) in sum.iter_mut().zip(x) {
                *s += Rational::from_integer(*a as i64) * c;
            }
        }
        Ok(sum)
    }
}

/// True iff the labels are positive, share no common factor, and
/// `sum a_alpha * alpha = 0` holds exactly.
pub fn verify_marks(diagram: &Diagram, realization: &RootRealization) -> Result<bool> {
    if diagram.len() != realization.len() {
        return Err(Error::DimensionMismatch { expected: diagram.len(), found: realization.len() });
    }
    let labels: Vec<u32> = diagram.nodes().iter().map(|n| n.a_label).collect();
    if labels.iter().any(|&a| a == 0) {
        return Ok(false);
    }
    if labels.iter().fold(0u32, |g, a| g.gcd(a)) != 1 {
        return Ok(false);
    }
    Ok(realization.weighted_sum(&labels)?.iter().all(Zero::is_zero))
}
