use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use super::{PolytopeSkeleton, SkeletonError, Vertex};
use crate::field::QuadraticScalar as Q;
use crate::linalg::Vec3;

/// The five Platonic solids, in standard exact coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Solid {
    Tetrahedron,
    Cube,
    Octahedron,
    Icosahedron,
    Dodecahedron,
}

impl Solid {
    pub const ALL: [Solid; 5] =
        [Solid::Tetrahedron, Solid::Cube, Solid::Octahedron, Solid::Icosahedron, Solid::Dodecahedron];

    pub fn name(self) -> &'static str {
        match self {
            Solid::Tetrahedron => "tetrahedron",
            Solid::Cube => "cube",
            Solid::Octahedron => "octahedron",
            Solid::Icosahedron => "icosahedron",
            Solid::Dodecahedron => "dodecahedron",
        }
    }

    /// (vertices, edges, degree)
    pub fn counts(self) -> (usize, usize, usize) {
        match self {
            Solid::Tetrahedron => (4, 6, 3),
            Solid::Cube => (8, 12, 3),
            Solid::Octahedron => (6, 12, 4),
            Solid::Icosahedron => (12, 30, 5),
            Solid::Dodecahedron => (20, 30, 3),
        }
    }

    /// Exact squared edge length in the builtin coordinates.
    pub fn edge_length_squared(self) -> Q {
        match self {
            Solid::Tetrahedron => Q::from_int(8),
            Solid::Cube => Q::from_int(4),
            Solid::Octahedron => Q::from_int(2),
            Solid::Icosahedron => Q::from_int(4),
            // (2/φ)² = 6 − 2√5
            Solid::Dodecahedron => Q::from_fracs((6, 1), (-2, 1)),
        }
    }

    fn positions(self) -> Vec<Vec3<Q>> {
        let int = |x: i64, y: i64, z: i64| Vec3::new(Q::from_int(x), Q::from_int(y), Q::from_int(z));
        match self {
            Solid::Tetrahedron => vec![int(1, 1, 1), int(1, -1, -1), int(-1, 1, -1), int(-1, -1, 1)],
            Solid::Cube => signs3().into_iter().map(|[x, y, z]| int(x, y, z)).collect(),
            Solid::Octahedron => {
                let mut out = Vec::new();
                for s in [1, -1] {
                    out.extend(cyclic(&Vec3::new(Q::from_int(s), Q::zero(), Q::zero())));
                }
                out
            }
            Solid::Icosahedron => golden_rectangles(&Q::one(), &Q::golden_ratio()),
            Solid::Dodecahedron => {
                let mut out: Vec<_> = signs3().into_iter().map(|[x, y, z]| int(x, y, z)).collect();
                let phi = Q::golden_ratio();
                out.extend(golden_rectangles(&(Q::one() / phi.clone()), &phi));
                out
            }
        }
    }
}

impl fmt::Display for Solid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Solid {
    type Err = SkeletonError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Solid::ALL
            .into_iter()
            .find(|solid| solid.name() == s)
            .ok_or_else(|| SkeletonError::UnknownPolytope(s.to_string()))
    }
}

fn signs3() -> Vec<[i64; 3]> {
    let mut out = Vec::with_capacity(8);
    for x in [1, -1] {
        for y in [1, -1] {
            for z in [1, -1] {
                out.push([x, y, z]);
            }
        }
    }
    out
}

fn cyclic(v: &Vec3<Q>) -> [Vec3<Q>; 3] {
    [v.clone(), Vec3::new(v.z.clone(), v.x.clone(), v.y.clone()), Vec3::new(v.y.clone(), v.z.clone(), v.x.clone())]
}

/// Cyclic permutations of `(0, ±s, ±t)`.
fn golden_rectangles(s: &Q, t: &Q) -> Vec<Vec3<Q>> {
    let mut out = Vec::with_capacity(12);
    for perm in 0..3 {
        for sy in [1, -1] {
            for sz in [1, -1] {
                let base = Vec3::new(Q::zero(), s.clone() * Q::from_int(sy), t.clone() * Q::from_int(sz));
                out.push(cyclic(&base)[perm].clone());
            }
        }
    }
    out
}

/// A builtin solid with zero-padded vertex names (`v01`, `v02`, ...) and
/// edges found by exact distance scan.
pub fn builtin_polytope(solid: Solid) -> PolytopeSkeleton<Q> {
    let positions = solid.positions();
    let width = positions.len().to_string().len();
    let vertices = positions
        .into_iter()
        .enumerate()
        .map(|(i, position)| Vertex { name: format!("v{:0width$}", i + 1), position })
        .collect();
    PolytopeSkeleton::from_vertices(vertices)
        .expect("builtin names are unique")
        .with_edges_at_squared_distance(&solid.edge_length_squared())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::skeleton::edges_from_squared_distance;

    #[test]
    fn counts_and_degrees() {
        for solid in Solid::ALL {
            let s = builtin_polytope(solid);
            let (nv, ne, deg) = solid.counts();
            assert_eq!(s.vertex_count(), nv, "{solid}");
            assert_eq!(s.edge_count(), ne, "{solid}");
            assert!((0..nv).all(|v| s.degree(v) == deg), "{solid}");
            assert!(s.validate().is_empty(), "{solid}");
        }
    }

    #[test]
    fn distance_scans() {
        let ico = builtin_polytope(Solid::Icosahedron);
        assert_eq!(edges_from_squared_distance(ico.vertices(), &Q::from_int(4)).len(), 30);
        let cube = builtin_polytope(Solid::Cube);
        assert_eq!(edges_from_squared_distance(cube.vertices(), &Q::from_int(4)).len(), 12);
        assert_eq!(edges_from_squared_distance(cube.vertices(), &Q::from_int(3)).len(), 0);
    }

    #[test]
    fn names_parse() {
        assert_eq!("icosahedron".parse::<Solid>().unwrap(), Solid::Icosahedron);
        assert!("hexagon".parse::<Solid>().is_err());
        assert_eq!(builtin_polytope(Solid::Icosahedron).name(0), "v01");
        assert_eq!(builtin_polytope(Solid::Tetrahedron).name(3), "v4");
    }

    #[test]
    fn every_icosahedron_vertex_has_an_antipode() {
        let ico = builtin_polytope(Solid::Icosahedron);
        for v in 0..12 {
            let s = ico.antipode(v).unwrap();
            assert_eq!(ico.antipode(s), Some(v));
        }
    }
}
