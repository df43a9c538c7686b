use super::{require_valid, BalanceError, WeightVector};
use crate::linalg::{Matrix, Vec3};
use crate::scalar::Scalar;
use crate::skeleton::PolytopeSkeleton;

/// The balancing conditions as a matrix: rows `3v..3v+3` hold the components
/// of `r_w × r_v` in the column of each edge `{v, w}`.
#[derive(Clone, Debug, PartialEq)]
pub struct BalancingSystem<T> {
    matrix: Matrix<T>,
    vertex_count: usize,
}

impl<T: Scalar> BalancingSystem<T> {
    pub fn assemble(skel: &PolytopeSkeleton<T>) -> Result<Self, BalanceError> {
        require_valid(skel)?;
        let mut matrix = Matrix::zeros(3 * skel.vertex_count(), skel.edge_count());
        for (col, e) in skel.edges().iter().enumerate() {
            for (v, w) in [(e.a, e.b), (e.b, e.a)] {
                let Vec3 { x, y, z } = skel.ray(w).cross(skel.ray(v));
                matrix.set(3 * v, col, x);
                matrix.set(3 * v + 1, col, y);
                matrix.set(3 * v + 2, col, z);
            }
        }
        Ok(BalancingSystem { matrix, vertex_count: skel.vertex_count() })
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix<T> {
        self.matrix
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Stacked residuals, three per vertex.
    pub fn apply(&self, weight: &WeightVector<T>) -> Vec<T> {
        self.matrix.mul_vec(weight.values())
    }

    pub fn annihilates(&self, weight: &WeightVector<T>) -> bool {
        self.apply(weight).iter().all(Scalar::is_negligible)
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }
}
