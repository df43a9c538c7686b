//! Small dense linear algebra over any [`Scalar`]: 3-vectors, row reduction,
//! nullspaces and affine solves.

use std::ops::{Add, Mul, Sub};

use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vec3<T> {
    pub x: T,
    pub y: T,
    pub z: T,
}

impl<T: Scalar> Vec3<T> {
    pub fn new(x: T, y: T, z: T) -> Self {
        Vec3 { x, y, z }
    }

    pub fn zero() -> Self {
        Vec3::new(T::zero(), T::zero(), T::zero())
    }

    pub fn components(&self) -> [&T; 3] {
        [&self.x, &self.y, &self.z]
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_negligible() && self.y.is_negligible() && self.z.is_negligible()
    }

    pub fn dot(&self, o: &Self) -> T {
        self.x.clone() * o.x.clone() + self.y.clone() * o.y.clone() + self.z.clone() * o.z.clone()
    }

    pub fn cross(&self, o: &Self) -> Self {
        Vec3::new(
            self.y.clone() * o.z.clone() - self.z.clone() * o.y.clone(),
            self.z.clone() * o.x.clone() - self.x.clone() * o.z.clone(),
            self.x.clone() * o.y.clone() - self.y.clone() * o.x.clone(),
        )
    }

    pub fn scale(&self, s: &T) -> Self {
        Vec3::new(self.x.clone() * s.clone(), self.y.clone() * s.clone(), self.z.clone() * s.clone())
    }

    pub fn norm_squared(&self) -> T {
        self.dot(self)
    }

    pub fn map<U, F: Fn(&T) -> U>(&self, f: F) -> Vec3<U> {
        Vec3 { x: f(&self.x), y: f(&self.y), z: f(&self.z) }
    }
}

impl<T: Scalar> Add for &Vec3<T> {
    type Output = Vec3<T>;
    fn add(self, o: Self) -> Vec3<T> {
        Vec3::new(self.x.clone() + o.x.clone(), self.y.clone() + o.y.clone(), self.z.clone() + o.z.clone())
    }
}

impl<T: Scalar> Sub for &Vec3<T> {
    type Output = Vec3<T>;
    fn sub(self, o: Self) -> Vec3<T> {
        Vec3::new(self.x.clone() - o.x.clone(), self.y.clone() - o.y.clone(), self.z.clone() - o.z.clone())
    }
}

/// `det[a; b; c] = a · (b × c)`
pub fn det3<T: Scalar>(a: &Vec3<T>, b: &Vec3<T>, c: &Vec3<T>) -> T {
    a.dot(&b.cross(c))
}

/// Row-major 3×3 matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat3<T> {
    pub rows: [Vec3<T>; 3],
}

impl<T: Scalar> Mat3<T> {
    pub fn from_columns(c0: &Vec3<T>, c1: &Vec3<T>, c2: &Vec3<T>) -> Self {
        Mat3 {
            rows: [
                Vec3::new(c0.x.clone(), c1.x.clone(), c2.x.clone()),
                Vec3::new(c0.y.clone(), c1.y.clone(), c2.y.clone()),
                Vec3::new(c0.z.clone(), c1.z.clone(), c2.z.clone()),
            ],
        }
    }

    pub fn determinant(&self) -> T {
        det3(&self.rows[0], &self.rows[1], &self.rows[2])
    }

    /// Inverse via the adjugate; `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        let det = self.determinant();
        if det.is_negligible() {
            return None;
        }
        let [r0, r1, r2] = &self.rows;
        // columns of the inverse are the cross products of row pairs
        let c0 = r1.cross(r2);
        let c1 = r2.cross(r0);
        let c2 = r0.cross(r1);
        let inv_det = T::one() / det;
        let m = Mat3::from_columns(&c0, &c1, &c2);
        Some(Mat3 { rows: m.rows.map(|r| r.scale(&inv_det)) })
    }

    pub fn apply(&self, v: &Vec3<T>) -> Vec3<T> {
        Vec3::new(self.rows[0].dot(v), self.rows[1].dot(v), self.rows[2].dot(v))
    }
}

impl<T: Scalar> Mul for &Mat3<T> {
    type Output = Mat3<T>;
    fn mul(self, o: Self) -> Mat3<T> {
        let cols: Vec<Vec3<T>> = (0..3)
            .map(|j| {
                let col = Vec3::new(
                    o.rows[0].components()[j].clone(),
                    o.rows[1].components()[j].clone(),
                    o.rows[2].components()[j].clone(),
                );
                self.apply(&col)
            })
            .collect();
        Mat3::from_columns(&cols[0], &cols[1], &cols[2])
    }
}

/// Dense matrix stored as rows.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    cols: usize,
    rows: Vec<Vec<T>>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { cols, rows: vec![vec![T::zero(); cols]; rows] }
    }

    /// Panics if the rows have different lengths than `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<T>>) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix rows");
        Matrix { cols, rows }
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<T>> {
        self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.rows[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.rows[r][c] = v;
    }

    pub fn push_row(&mut self, row: Vec<T>) {
        assert_eq!(row.len(), self.cols, "row length");
        self.rows.push(row);
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols, "vector length");
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_negligible() && !b.is_negligible())
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    pub fn reduced(&self) -> RowEchelon<T> {
        reduce(self.rows.clone(), self.cols)
    }

    pub fn rank(&self) -> usize {
        self.reduced().pivots.len()
    }

    /// Basis of `{x : A x = 0}` in reduced echelon form.
    pub fn nullspace(&self) -> Vec<Vec<T>> {
        let rref = self.reduced();
        echelon_basis(rref.kernel_vectors(), self.cols)
    }

    /// Solves `A x = b`. Returns a particular solution (free variables zero)
    /// and a reduced basis of the homogeneous solutions, or `None` when the
    /// system is inconsistent.
    pub fn solve(&self, b: &[T]) -> Option<(Vec<T>, Vec<Vec<T>>)> {
        assert_eq!(b.len(), self.rows.len(), "right-hand side length");
        let augmented: Vec<Vec<T>> = self
            .rows
            .iter()
            .zip(b)
            .map(|(row, rhs)| {
                let mut r = row.clone();
                r.push(rhs.clone());
                r
            })
            .collect();
        let rref = reduce(augmented, self.cols + 1);
        if rref.pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut particular = vec![T::zero(); self.cols];
        for (row, &p) in rref.rows.iter().zip(&rref.pivots) {
            particular[p] = row[self.cols].clone();
        }
        let restricted = RowEchelon {
            rows: rref
                .rows
                .into_iter()
                .map(|mut r| {
                    r.pop();
                    r
                })
                .collect(),
            pivots: rref.pivots,
            cols: self.cols,
        };
        Some((particular, echelon_basis(restricted.kernel_vectors(), self.cols)))
    }
}

/// Reduced row-echelon form: nonzero rows only, pivot entries 1.
#[derive(Clone, Debug, PartialEq)]
pub struct RowEchelon<T> {
    pub rows: Vec<Vec<T>>,
    pub pivots: Vec<usize>,
    pub cols: usize,
}

impl<T: Scalar> RowEchelon<T> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// One kernel vector per free column: 1 there, minus the column entries
    /// at the pivot positions.
    fn kernel_vectors(&self) -> Vec<Vec<T>> {
        let mut is_pivot = vec![false; self.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![T::zero(); self.cols];
                v[free] = T::one();
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    if !row[free].is_negligible() {
                        v[p] = -row[free].clone();
                    }
                }
                v
            })
            .collect()
    }
}

/// The unique reduced echelon basis of the span of `vectors`.
pub fn echelon_basis<T: Scalar>(vectors: Vec<Vec<T>>, len: usize) -> Vec<Vec<T>> {
    reduce(vectors, len).rows
}

/// Row reduction to reduced echelon form.
///
/// Exact scalars run a fraction-free (Bareiss) forward pass, pivoting on the
/// first nonzero entry in column order, followed by a normalising back pass.
/// The result depends only on the row space. Inexact scalars use partial
/// pivoting with the type's tolerance.
pub fn reduce<T: Scalar>(mut rows: Vec<Vec<T>>, cols: usize) -> RowEchelon<T> {
    let pivots = if T::EXACT { bareiss_forward(&mut rows, cols) } else { partial_pivot_forward(&mut rows, cols) };
    rows.truncate(pivots.len());
    back_substitute(&mut rows, &pivots);
    RowEchelon { rows, pivots, cols }
}

fn bareiss_forward<T: Scalar>(rows: &mut [Vec<T>], cols: usize) -> Vec<usize> {
    let n = rows.len();
    let mut pivots = Vec::new();
    let mut prev = T::one();
    let mut r = 0;
    for c in 0..cols {
        if r == n {
            break;
        }
        let Some(offset) = rows[r..].iter().position(|row| !row[c].is_negligible()) else {
            continue;
        };
        rows.swap(r, r + offset);
        let (head, tail) = rows.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let p = pivot_row[c].clone();
        // (p·x − f·y) / prev, with both quotients taken once per row
        let scale = p.clone() / prev.clone();
        for row in tail.iter_mut() {
            let f = row[c].clone();
            let shift = (!f.is_negligible()).then(|| f / prev.clone());
            for j in c + 1..cols {
                let x = (!row[j].is_negligible()).then(|| scale.clone() * row[j].clone());
                let y = match &shift {
                    Some(t) if !pivot_row[j].is_negligible() => Some(t.clone() * pivot_row[j].clone()),
                    _ => None,
                };
                row[j] = match (x, y) {
                    (Some(x), Some(y)) => x - y,
                    (Some(x), None) => x,
                    (None, Some(y)) => -y,
                    (None, None) => continue,
                };
            }
            row[c] = T::zero();
        }
        prev = p;
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn partial_pivot_forward<T: Scalar>(rows: &mut [Vec<T>], cols: usize) -> Vec<usize> {
    let n = rows.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == n {
            break;
        }
        let best = (r..n)
            .filter(|&i| !rows[i][c].is_negligible())
            .max_by(|&a, &b| rows[a][c].magnitude().total_cmp(&rows[b][c].magnitude()));
        let Some(best) = best else {
            continue;
        };
        rows.swap(r, best);
        let inv = T::one() / rows[r][c].clone();
        for v in &mut rows[r][c..cols] {
            *v = v.clone() * inv.clone();
        }
        let (head, tail) = rows.split_at_mut(r + 1);
        let pivot_row = &head[r];
        for row in tail.iter_mut() {
            let f = row[c].clone();
            if f.is_negligible() {
                row[c] = T::zero();
                continue;
            }
            for j in c..cols {
                let v = row[j].clone() - f.clone() * pivot_row[j].clone();
                row[j] = if v.is_negligible() { T::zero() } else { v };
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn back_substitute<T: Scalar>(rows: &mut [Vec<T>], pivots: &[usize]) {
    for k in (0..pivots.len()).rev() {
        let c = pivots[k];
        let inv = T::one() / rows[k][c].clone();
        for v in rows[k].iter_mut() {
            if !v.is_negligible() {
                *v = v.clone() * inv.clone();
            }
        }
        rows[k][c] = T::one();
        let (head, tail) = rows.split_at_mut(k);
        let pivot_row = &tail[0];
        for row in head.iter_mut() {
            let f = row[c].clone();
            if f.is_negligible() {
                continue;
            }
            for (v, pv) in row.iter_mut().zip(pivot_row) {
                if !pv.is_negligible() {
                    let nv = v.clone() - f.clone() * pv.clone();
                    *v = if nv.is_negligible() { T::zero() } else { nv };
                }
            }
            row[c] = T::zero();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn mat(rows: &[&[i64]]) -> Matrix<BigRational> {
        Matrix::from_rows(rows[0].len(), rows.iter().map(|row| row.iter().map(|&v| r(v)).collect()).collect())
    }

    #[test]
    fn rref_of_rank_deficient_matrix() {
        let m = mat(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let e = m.reduced();
        assert_eq!(e.pivots, vec![0, 1]);
        assert_eq!(e.rows, vec![vec![r(1), r(0), r(1)], vec![r(0), r(1), r(1)]]);
    }

    #[test]
    fn zero_leading_column_is_skipped() {
        let m = mat(&[&[0, 2, 4], &[0, 1, 3]]);
        let e = m.reduced();
        assert_eq!(e.pivots, vec![1, 2]);
    }

    #[test]
    fn nullspace_is_annihilated() {
        let m = mat(&[&[1, 1, 0, 0], &[0, 1, 1, 0]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(m.mul_vec(v).iter().all(num_traits::Zero::is_zero));
        }
        // reduced form: leading ones at columns 0 and 3
        assert_eq!(ns[0], vec![r(1), r(-1), r(1), r(0)]);
        assert_eq!(ns[1], vec![r(0), r(0), r(0), r(1)]);
    }

    #[test]
    fn inconsistent_system() {
        let m = mat(&[&[1, 1], &[1, 1]]);
        assert!(m.solve(&[r(1), r(2)]).is_none());
        let (x, hom) = m.solve(&[r(3), r(3)]).unwrap();
        assert_eq!(x, vec![r(3), r(0)]);
        assert_eq!(hom, vec![vec![r(1), r(-1)]]);
    }

    #[test]
    fn float_rank_matches_exact() {
        let exact = mat(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        let float = Matrix::from_rows(3, vec![vec![1.0, 2.0, 3.0], vec![4.0, 5.0, 6.0], vec![7.0, 8.0, 9.0]]);
        assert_eq!(exact.rank(), 2);
        assert_eq!(float.rank(), 2);
    }

    #[test]
    fn mat3_inverse() {
        let a = Vec3::new(r(1), r(2), r(0));
        let b = Vec3::new(r(0), r(1), r(3));
        let c = Vec3::new(r(1), r(0), r(1));
        let m = Mat3::from_columns(&a, &b, &c);
        let inv = m.inverse().unwrap();
        let id = &m * &inv;
        assert_eq!(id.apply(&Vec3::new(r(5), r(-2), r(7))), Vec3::new(r(5), r(-2), r(7)));
        assert_eq!(det3(&a, &b, &c), m.determinant());
    }
}
