//! Independent high-precision reference used to cross-check the exact code.
//!
//! Numbers are fixed-point integers with 60 decimal digits after the point.
//! Nothing here calls into the library's arithmetic or linear algebra.

#![allow(dead_code)]

use std::cmp::Ordering;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use minkowski_weights::QuadraticScalar;

pub mod props;

pub const DIGITS: u32 = 60;

fn scale() -> BigInt {
    BigInt::from(10u32).pow(DIGITS)
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Fixed(pub BigInt);

impl Fixed {
    pub fn int(n: i64) -> Self {
        Fixed(BigInt::from(n) * scale())
    }

    pub fn ratio(p: &BigInt, q: &BigInt) -> Self {
        Fixed(p * scale() / q)
    }

    pub fn sqrt(n: u32) -> Self {
        Fixed((BigInt::from(n) * scale() * scale()).sqrt())
    }

    pub fn abs(&self) -> Self {
        Fixed(self.0.abs())
    }

    /// True when |self| < 10^-k.
    pub fn below(&self, k: u32) -> bool {
        self.0.abs() < BigInt::from(10u32).pow(DIGITS - k)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn signum(&self) -> i8 {
        match self.0.cmp(&BigInt::zero()) {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        }
    }

    pub fn to_f64(&self) -> f64 {
        let s = self.0.to_string();
        s.parse::<f64>().unwrap() / 10f64.powi(DIGITS as i32)
    }
}

impl Add for &Fixed {
    type Output = Fixed;
    fn add(self, o: &Fixed) -> Fixed {
        Fixed(&self.0 + &o.0)
    }
}

impl Sub for &Fixed {
    type Output = Fixed;
    fn sub(self, o: &Fixed) -> Fixed {
        Fixed(&self.0 - &o.0)
    }
}

impl Mul for &Fixed {
    type Output = Fixed;
    fn mul(self, o: &Fixed) -> Fixed {
        Fixed(&self.0 * &o.0 / scale())
    }
}

impl Div for &Fixed {
    type Output = Fixed;
    fn div(self, o: &Fixed) -> Fixed {
        Fixed(&self.0 * scale() / &o.0)
    }
}

impl Neg for &Fixed {
    type Output = Fixed;
    fn neg(self) -> Fixed {
        Fixed(-&self.0)
    }
}

/// `a + b√d` evaluated from its rational components.
pub fn approx(x: &QuadraticScalar) -> Fixed {
    let (a, b) = (x.rational_part(), x.surd_part());
    let a = Fixed::ratio(a.numer(), a.denom());
    let b = Fixed::ratio(b.numer(), b.denom());
    &a + &(&b * &Fixed::sqrt(x.radicand().get()))
}

pub type P3 = [Fixed; 3];

fn cross(u: &P3, v: &P3) -> P3 {
    [&(&u[1] * &v[2]) - &(&u[2] * &v[1]), &(&u[2] * &v[0]) - &(&u[0] * &v[2]), &(&u[0] * &v[1]) - &(&u[1] * &v[0])]
}

fn dist2(u: &P3, v: &P3) -> Fixed {
    (0..3).fold(Fixed::int(0), |acc, i| {
        let d = &u[i] - &v[i];
        &acc + &(&d * &d)
    })
}

fn signed_perms(base: [i64; 3]) -> Vec<[i64; 3]> {
    let mut out = Vec::new();
    for mask in 0..8 {
        let p: [i64; 3] = std::array::from_fn(|i| if mask >> i & 1 == 1 { -base[i] } else { base[i] });
        if (0..3).any(|i| base[i] == 0 && mask >> i & 1 == 1) {
            continue;
        }
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

fn cyclic(p: [Fixed; 3]) -> Vec<P3> {
    vec![p.clone(), [p[1].clone(), p[2].clone(), p[0].clone()], [p[2].clone(), p[0].clone(), p[1].clone()]]
}

/// Vertex coordinates of a regular solid, built from scratch.
pub fn solid_vertices(name: &str) -> Vec<P3> {
    let phi = &(&Fixed::int(1) + &Fixed::sqrt(5)) / &Fixed::int(2);
    let inv = &Fixed::int(1) / &phi;
    let ints = |ps: Vec<[i64; 3]>| -> Vec<P3> { ps.into_iter().map(|p| p.map(Fixed::int)).collect() };
    match name {
        "tetrahedron" => ints(vec![[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]]),
        "cube" => ints(signed_perms([1, 1, 1])),
        "octahedron" => ints([[1, 0, 0], [0, 1, 0], [0, 0, 1]].into_iter().flat_map(|p| [p, p.map(|c| -c)]).collect()),
        "icosahedron" => signed_perms([0, 1, 1])
            .into_iter()
            .flat_map(|[_, s, t]| cyclic([Fixed::int(0), Fixed::int(s), &Fixed::int(t) * &phi]))
            .collect(),
        "dodecahedron" => {
            let mut v = ints(signed_perms([1, 1, 1]));
            for [_, s, t] in signed_perms([0, 1, 1]) {
                v.extend(cyclic([Fixed::int(0), &Fixed::int(s) * &inv, &Fixed::int(t) * &phi]));
            }
            v
        }
        other => panic!("no reference solid {other}"),
    }
}

/// Pairs at minimal distance.
pub fn nearest_pairs(v: &[P3]) -> Vec<(usize, usize)> {
    let mut best: Option<Fixed> = None;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            let d = dist2(&v[i], &v[j]);
            if best.as_ref().is_none_or(|b| d < *b) {
                best = Some(d);
            }
        }
    }
    let best = best.unwrap();
    let mut out = Vec::new();
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if (&dist2(&v[i], &v[j]) - &best).below(30) {
                out.push((i, j));
            }
        }
    }
    out
}

/// Rows `cross(r_w, r_v)` for each vertex component, one column per edge.
pub fn balancing_rows(v: &[P3], edges: &[(usize, usize)]) -> Vec<Vec<Fixed>> {
    let mut rows = vec![vec![Fixed::int(0); edges.len()]; 3 * v.len()];
    for (k, &(a, b)) in edges.iter().enumerate() {
        for (here, there) in [(a, b), (b, a)] {
            let c = cross(&v[there], &v[here]);
            for (i, ci) in c.into_iter().enumerate() {
                rows[3 * here + i][k] = ci;
            }
        }
    }
    rows
}

/// Rank by Gaussian elimination with partial pivoting; pivots below `1e-9`
/// count as zero.
pub fn rank(mut rows: Vec<Vec<Fixed>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let (best, _) =
            (r..rows.len()).map(|i| (i, rows[i][c].abs())).max_by(|x, y| x.1.cmp(&y.1).then(y.0.cmp(&x.0))).unwrap();
        if rows[best][c].below(9) {
            continue;
        }
        rows.swap(r, best);
        let (head, tail) = rows.split_at_mut(r + 1);
        let pivot = &head[r];
        for row in tail {
            let f = &row[c] / &pivot[c];
            for (x, p) in row[c..].iter_mut().zip(&pivot[c..]) {
                *x = &*x - &(&f * p);
            }
        }
        r += 1;
    }
    r
}

/// Dimension of the balanced weights of a regular solid, by the reference path.
pub fn reference_dim(name: &str) -> usize {
    let v = solid_vertices(name);
    let e = nearest_pairs(&v);
    e.len() - rank(balancing_rows(&v, &e))
}

/// `Σ_w c(vw)·r_w × r_v` at every vertex, from library-provided rays.
pub fn residuals(rays: &[P3], edges: &[(usize, usize)], c: &[Fixed]) -> Vec<P3> {
    let mut sums = vec![[Fixed::int(0), Fixed::int(0), Fixed::int(0)]; rays.len()];
    for (k, &(a, b)) in edges.iter().enumerate() {
        for (here, there) in [(a, b), (b, a)] {
            for i in 0..3 {
                sums[here][i] = &sums[here][i] + &(&c[k] * &rays[there][i]);
            }
        }
    }
    sums.iter().zip(rays).map(|(s, r)| cross(s, r)).collect()
}
