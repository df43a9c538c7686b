//! Balanced edge weights (codimension-one Minkowski weights) on the fan over
//! a 3-polytope.
//!
//! A weight `c` on the edges is balanced at the ray `r_v` when
//! `Σ_{w~v} c(vw)·r_w` is parallel to `r_v`, i.e. when the residual
//! `(Σ c(vw)·r_w) × r_v` vanishes. Neighbouring rays are used unnormalised
//! as the generators of the 2-cones modulo the ray.

mod space;
mod system;

pub use space::{
    constrained_solve, support_scan, support_scan_sequential, symmetric_space, weight_space, AffineSolutionSet,
    EchelonBasis, EdgePermutation, Solve, SupportReport,
};
pub use system::BalancingSystem;

use thiserror::Error;

use crate::linalg::Vec3;
use crate::scalar::Scalar;
use crate::skeleton::{Diagnostic, PolytopeSkeleton};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BalanceError {
    #[error("invalid skeleton: {}", .0.iter().map(|d| d.to_string()).collect::<Vec<_>>().join("; "))]
    InvalidSkeleton(Vec<Diagnostic>),
    #[error("permutation does not map edges to edges")]
    NotEdgePreserving,
    #[error("edge index {0} out of range")]
    EdgeOutOfRange(usize),
}

pub(crate) fn require_valid<T: Scalar>(skel: &PolytopeSkeleton<T>) -> Result<(), BalanceError> {
    let diagnostics = skel.validate();
    if diagnostics.is_empty() {
        Ok(())
    } else {
        Err(BalanceError::InvalidSkeleton(diagnostics))
    }
}

/// One value per edge, indexed like [`PolytopeSkeleton::edges`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightVector<T> {
    values: Vec<T>,
}

impl<T: Scalar> WeightVector<T> {
    pub fn new(values: Vec<T>) -> Self {
        WeightVector { values }
    }

    pub fn zero(len: usize) -> Self {
        WeightVector { values: vec![T::zero(); len] }
    }

    pub fn constant(len: usize, value: T) -> Self {
        WeightVector { values: vec![value; len] }
    }

    pub fn indicator(len: usize, edge: usize) -> Self {
        let mut w = WeightVector::zero(len);
        w.values[edge] = T::one();
        w
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, edge: usize) -> &T {
        &self.values[edge]
    }

    pub fn set(&mut self, edge: usize, value: T) {
        self.values[edge] = value;
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn into_values(self) -> Vec<T> {
        self.values
    }

    /// Edges with a nonzero value.
    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&e| !self.values[e].is_negligible()).collect()
    }

    pub fn zero_set(&self) -> Vec<usize> {
        (0..self.len()).filter(|&e| self.values[e].is_negligible()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Scalar::is_negligible)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len(), "weight lengths differ");
        WeightVector::new(self.values.iter().zip(&other.values).map(|(a, b)| a.clone() + b.clone()).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len(), "weight lengths differ");
        WeightVector::new(self.values.iter().zip(&other.values).map(|(a, b)| a.clone() - b.clone()).collect())
    }

    pub fn scale(&self, s: &T) -> Self {
        WeightVector::new(self.values.iter().map(|a| a.clone() * s.clone()).collect())
    }

    /// `w ∘ g` for an edge permutation given as image indices.
    pub fn pull_back(&self, image: &[usize]) -> Self {
        WeightVector::new(image.iter().map(|&e| self.values[e].clone()).collect())
    }
}

/// Nonzero residual at one vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct Residual<T> {
    pub vertex: usize,
    pub vector: Vec3<T>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Verdict<T> {
    Balanced,
    Unbalanced(Vec<Residual<T>>),
}

impl<T> Verdict<T> {
    pub fn is_balanced(&self) -> bool {
        matches!(self, Verdict::Balanced)
    }

    pub fn failing_vertices(&self) -> Vec<usize> {
        match self {
            Verdict::Balanced => Vec::new(),
            Verdict::Unbalanced(r) => r.iter().map(|r| r.vertex).collect(),
        }
    }
}

/// Residual `(Σ_{w~v} c(vw)·r_w) × r_v` at vertex `v`.
pub fn residual_at<T: Scalar>(skel: &PolytopeSkeleton<T>, weight: &WeightVector<T>, v: usize) -> Vec3<T> {
    let mut sum = Vec3::zero();
    for (w, e) in skel.incident(v) {
        let c = weight.get(e);
        if !c.is_negligible() {
            sum = &sum + &skel.ray(w).scale(c);
        }
    }
    sum.cross(skel.ray(v))
}

/// Checks the balancing condition vertex by vertex, directly from the
/// geometry. Panics if the weight is not defined on exactly the skeleton's
/// edges.
pub fn is_balanced<T: Scalar>(skel: &PolytopeSkeleton<T>, weight: &WeightVector<T>) -> Verdict<T> {
    assert_eq!(weight.len(), skel.edge_count(), "weight must assign a value to every edge");
    let failing: Vec<Residual<T>> = (0..skel.vertex_count())
        .filter_map(|v| {
            let r = residual_at(skel, weight, v);
            (!r.is_zero()).then_some(Residual { vertex: v, vector: r })
        })
        .collect();
    if failing.is_empty() {
        Verdict::Balanced
    } else {
        Verdict::Unbalanced(failing)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::QuadraticScalar as Q;
    use crate::skeleton::{builtin_polytope, Solid};
    use num_traits::One;

    #[test]
    fn constant_weight_on_icosahedron_balances() {
        let ico = builtin_polytope(Solid::Icosahedron);
        assert!(is_balanced(&ico, &WeightVector::constant(30, Q::one())).is_balanced());
    }

    #[test]
    fn single_edge_fails_at_both_ends() {
        let ico = builtin_polytope(Solid::Icosahedron);
        let verdict = is_balanced(&ico, &WeightVector::indicator(30, 7));
        let e = ico.edges()[7];
        let mut failing = verdict.failing_vertices();
        failing.sort();
        let mut expected = vec![e.a, e.b];
        expected.sort();
        assert_eq!(failing, expected);
    }

    #[test]
    fn support_and_zero_set() {
        let w = WeightVector::new(vec![Q::one(), Q::from_int(0), Q::golden_ratio()]);
        assert_eq!(w.support(), vec![0, 2]);
        assert_eq!(w.zero_set(), vec![1]);
        assert!(WeightVector::<Q>::zero(4).is_zero());
    }
}
