use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use super::{BalanceError, BalancingSystem, WeightVector};
use crate::linalg::{echelon_basis, Matrix};
use crate::scalar::Scalar;
use crate::skeleton::PolytopeSkeleton;

/// A subspace of edge weights, held as its unique reduced echelon basis
/// (leading coefficients 1, canonical edge order).
#[derive(Clone, Debug, PartialEq)]
pub struct EchelonBasis<T> {
    edge_count: usize,
    vectors: Vec<WeightVector<T>>,
}

impl<T: Scalar> EchelonBasis<T> {
    /// Span of arbitrary vectors, brought to normal form.
    pub fn span(edge_count: usize, vectors: Vec<WeightVector<T>>) -> Self {
        let rows = vectors.into_iter().map(WeightVector::into_values).collect();
        EchelonBasis::from_reduced(edge_count, echelon_basis(rows, edge_count))
    }

    fn from_reduced(edge_count: usize, rows: Vec<Vec<T>>) -> Self {
        EchelonBasis { edge_count, vectors: rows.into_iter().map(WeightVector::new).collect() }
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[WeightVector<T>] {
        &self.vectors
    }

    /// `Σ coeffs[i] · vectors[i]`
    pub fn combination(&self, coeffs: &[T]) -> WeightVector<T> {
        assert_eq!(coeffs.len(), self.dim(), "one coefficient per basis vector");
        self.vectors.iter().zip(coeffs).fold(WeightVector::zero(self.edge_count), |acc, (v, c)| acc.add(&v.scale(c)))
    }

    /// Membership by elimination: adding `w` must not raise the rank.
    pub fn contains(&self, w: &WeightVector<T>) -> bool {
        let mut rows: Vec<Vec<T>> = self.vectors.iter().map(|v| v.values().to_vec()).collect();
        rows.push(w.values().to_vec());
        echelon_basis(rows, self.edge_count).len() == self.dim()
    }

    pub fn is_subspace_of(&self, other: &EchelonBasis<T>) -> bool {
        self.vectors.iter().all(|v| other.contains(v))
    }

    /// An element whose zero set is exactly the common zero set of the
    /// subspace. The zero subspace yields the zero weight.
    pub fn max_support_weight(&self) -> WeightVector<T> {
        let gens: Vec<&WeightVector<T>> = self.vectors.iter().collect();
        generic_combination(&gens, self.edge_count)
    }
}

/// `particular + span(homogeneous)`.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineSolutionSet<T> {
    pub particular: WeightVector<T>,
    pub homogeneous: EchelonBasis<T>,
}

impl<T: Scalar> AffineSolutionSet<T> {
    pub fn dimension(&self) -> usize {
        self.homogeneous.dim()
    }

    pub fn contains(&self, w: &WeightVector<T>) -> bool {
        self.homogeneous.contains(&w.sub(&self.particular))
    }

    /// An element of the affine set vanishing only where every element does.
    pub fn max_support_weight(&self) -> WeightVector<T> {
        let mut gens = vec![&self.particular];
        gens.extend(self.homogeneous.vectors());
        generic_combination(&gens, self.particular.len())
    }
}

/// `Σ t^i · gens[i]` for the smallest natural `t` that leaves no spurious
/// zeros. Each coordinate outside the common zero set is a nonzero
/// polynomial in `t` of degree < gens.len(), so the search terminates.
fn generic_combination<T: Scalar>(gens: &[&WeightVector<T>], len: usize) -> WeightVector<T> {
    if gens.is_empty() {
        return WeightVector::zero(len);
    }
    let live: Vec<usize> = (0..len).filter(|&e| gens.iter().any(|g| !g.get(e).is_negligible())).collect();
    for t in 1u64.. {
        let t = T::from_u64(t).expect("natural numbers embed in every field");
        let candidate = WeightVector::new(
            (0..len).map(|e| gens.iter().rev().fold(T::zero(), |acc, g| acc * t.clone() + g.get(e).clone())).collect(),
        );
        if live.iter().all(|&e| !candidate.get(e).is_negligible()) {
            return candidate;
        }
    }
    unreachable!("generic parameter search is unbounded")
}

#[derive(Clone, Debug, PartialEq)]
pub enum Solve<T> {
    Feasible(AffineSolutionSet<T>),
    Infeasible,
}

impl<T> Solve<T> {
    pub fn feasible(self) -> Option<AffineSolutionSet<T>> {
        match self {
            Solve::Feasible(s) => Some(s),
            Solve::Infeasible => None,
        }
    }
}

/// All balanced weights.
pub fn weight_space<T: Scalar>(skel: &PolytopeSkeleton<T>) -> Result<EchelonBasis<T>, BalanceError> {
    let system = BalancingSystem::assemble(skel)?;
    Ok(EchelonBasis::from_reduced(skel.edge_count(), system.matrix().nullspace()))
}

/// Balanced weights with `c(e) = pins[e]` and `c(e) = 0` on `zeros`.
pub fn constrained_solve<T: Scalar>(
    skel: &PolytopeSkeleton<T>,
    pins: &BTreeMap<usize, T>,
    zeros: &BTreeSet<usize>,
) -> Result<Solve<T>, BalanceError> {
    let system = BalancingSystem::assemble(skel)?;
    solve_against(system.into_matrix(), pins, zeros)
}

fn solve_against<T: Scalar>(
    mut matrix: Matrix<T>,
    pins: &BTreeMap<usize, T>,
    zeros: &BTreeSet<usize>,
) -> Result<Solve<T>, BalanceError> {
    let n = matrix.col_count();
    let mut rhs = vec![T::zero(); matrix.row_count()];
    let constraints = pins.iter().map(|(&e, v)| (e, v.clone())).chain(zeros.iter().map(|&e| (e, T::zero())));
    for (e, value) in constraints {
        if e >= n {
            return Err(BalanceError::EdgeOutOfRange(e));
        }
        let mut row = vec![T::zero(); n];
        row[e] = T::one();
        matrix.push_row(row);
        rhs.push(value);
    }
    Ok(match matrix.solve(&rhs) {
        None => Solve::Infeasible,
        Some((particular, homogeneous)) => Solve::Feasible(AffineSolutionSet {
            particular: WeightVector::new(particular),
            homogeneous: EchelonBasis::from_reduced(n, homogeneous),
        }),
    })
}

/// Outcome of asking for a balanced weight vanishing exactly on one edge.
#[derive(Clone, Debug, PartialEq)]
pub struct SupportReport<T> {
    pub edge: usize,
    pub feasible: bool,
    /// Most generic balanced weight vanishing on `edge`.
    pub witness: WeightVector<T>,
}

/// The subspace of `basis` vanishing on `edge`: eliminate the edge's
/// coordinate using the first basis vector that does not vanish there.
fn vanishing_on<T: Scalar>(basis: &EchelonBasis<T>, edge: usize) -> Vec<WeightVector<T>> {
    let vectors = basis.vectors();
    let Some(j) = vectors.iter().position(|v| !v.get(edge).is_negligible()) else {
        return vectors.to_vec();
    };
    let pivot = vectors[j].get(edge).clone();
    vectors
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != j)
        .map(|(_, v)| v.sub(&vectors[j].scale(&(v.get(edge).clone() / pivot.clone()))))
        .collect()
}

fn scan_edge<T: Scalar>(basis: &EchelonBasis<T>, edge: usize) -> SupportReport<T> {
    let gens = vanishing_on(basis, edge);
    let witness = generic_combination(&gens.iter().collect::<Vec<_>>(), basis.edge_count());
    let feasible = witness.zero_set() == vec![edge];
    SupportReport { edge, feasible, witness }
}

/// For each edge, whether some balanced weight vanishes on that edge and
/// nowhere else. Edges are scanned in parallel; the report is in edge order.
pub fn support_scan<T: Scalar>(skel: &PolytopeSkeleton<T>) -> Result<Vec<SupportReport<T>>, BalanceError> {
    let basis = weight_space(skel)?;
    Ok((0..skel.edge_count()).into_par_iter().map(|e| scan_edge(&basis, e)).collect())
}

pub fn support_scan_sequential<T: Scalar>(skel: &PolytopeSkeleton<T>) -> Result<Vec<SupportReport<T>>, BalanceError> {
    let basis = weight_space(skel)?;
    Ok((0..skel.edge_count()).map(|e| scan_edge(&basis, e)).collect())
}

/// A permutation of the edges induced by a vertex permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgePermutation {
    image: Vec<usize>,
}

impl EdgePermutation {
    pub fn identity(edge_count: usize) -> Self {
        EdgePermutation { image: (0..edge_count).collect() }
    }

    /// `perm[v]` is the image of vertex `v`.
    pub fn from_vertex_permutation<T: Scalar>(
        skel: &PolytopeSkeleton<T>,
        perm: &[usize],
    ) -> Result<Self, BalanceError> {
        skel.edge_permutation(perm).map(|image| EdgePermutation { image }).ok_or(BalanceError::NotEdgePreserving)
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn apply(&self, edge: usize) -> usize {
        self.image[edge]
    }
}

/// Balanced weights invariant under every generator: `c(g(e)) = c(e)`.
pub fn symmetric_space<T: Scalar>(
    skel: &PolytopeSkeleton<T>,
    generators: &[EdgePermutation],
) -> Result<EchelonBasis<T>, BalanceError> {
    let n = skel.edge_count();
    let mut matrix = BalancingSystem::assemble(skel)?.into_matrix();
    for g in generators {
        if g.image.len() != n || g.image.iter().collect::<BTreeSet<_>>().len() != n || g.image.iter().any(|&e| e >= n) {
            return Err(BalanceError::NotEdgePreserving);
        }
        for (e, &ge) in g.image.iter().enumerate() {
            if ge != e {
                let mut row = vec![T::zero(); n];
                row[ge] = T::one();
                row[e] = -T::one();
                matrix.push_row(row);
            }
        }
    }
    Ok(EchelonBasis::from_reduced(n, matrix.nullspace()))
}
