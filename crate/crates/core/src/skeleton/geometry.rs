use std::cmp::Ordering;
use std::collections::BTreeSet;

use super::{PolytopeSkeleton, SkeletonError};
use crate::linalg::{det3, Mat3, Vec3};
use crate::scalar::Scalar;

/// Neighbours of `v` in cyclic order around the ray `r_v`, starting from the
/// first neighbour in edge order and turning positively about `r_v`.
///
/// The order comes from signs of 3×3 determinants only, so it is exact.
pub fn link_cycle<T: Scalar>(skel: &PolytopeSkeleton<T>, v: usize) -> Result<Vec<usize>, SkeletonError> {
    let axis = skel.ray(v);
    let nbrs = skel.neighbors(v);
    let degenerate = || SkeletonError::DegenerateLink(skel.name(v).to_string());
    if nbrs.iter().any(|&w| axis.cross(skel.ray(w)).is_zero()) {
        return Err(degenerate());
    }
    let Some(&first) = nbrs.first() else {
        return Ok(nbrs);
    };
    let w0 = skel.ray(first);
    let orient = |a: &Vec3<T>, b: &Vec3<T>| det3(axis, a, b).signum();
    if nbrs.len() >= 3 && nbrs.iter().all(|&w| orient(w0, skel.ray(w)) == 0) {
        return Err(degenerate());
    }
    let nn = axis.norm_squared();
    // sign of the dot product of the projections onto the plane normal to r_v
    let same_side = |a: &Vec3<T>| (w0.dot(a) * nn.clone() - w0.dot(axis) * a.dot(axis)).signum() > 0;
    let half = |a: &Vec3<T>| match orient(w0, a) {
        1 => 0,
        0 if same_side(a) => 0,
        _ => 1,
    };
    let mut cycle = nbrs;
    cycle.sort_by(|&a, &b| {
        let (ra, rb) = (skel.ray(a), skel.ray(b));
        half(ra).cmp(&half(rb)).then_with(|| match orient(ra, rb) {
            1 => Ordering::Less,
            -1 => Ordering::Greater,
            _ => Ordering::Equal,
        })
    });
    Ok(cycle)
}

/// Edges of a centrally symmetric skeleton grouped by their position
/// relative to the axis through `north` and its antipode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxisClasses {
    pub north: usize,
    pub south: usize,
    /// Edges at the north vertex.
    pub polar_north: Vec<usize>,
    /// Edges joining two neighbours of the north vertex.
    pub ring_north: Vec<usize>,
    pub equatorial: Vec<usize>,
    pub ring_south: Vec<usize>,
    pub polar_south: Vec<usize>,
}

impl AxisClasses {
    pub fn sizes(&self) -> [usize; 5] {
        [
            self.polar_north.len(),
            self.ring_north.len(),
            self.equatorial.len(),
            self.ring_south.len(),
            self.polar_south.len(),
        ]
    }
}

pub fn classify_edges_by_axis<T: Scalar>(
    skel: &PolytopeSkeleton<T>,
    north: usize,
) -> Result<AxisClasses, SkeletonError> {
    let south = skel.antipode(north).ok_or_else(|| SkeletonError::NoAntipode(skel.name(north).to_string()))?;
    let north_link: BTreeSet<usize> = skel.neighbors(north).into_iter().collect();
    let south_link: BTreeSet<usize> = skel.neighbors(south).into_iter().collect();
    let mut classes = AxisClasses {
        north,
        south,
        polar_north: vec![],
        ring_north: vec![],
        equatorial: vec![],
        ring_south: vec![],
        polar_south: vec![],
    };
    for (i, e) in skel.edges().iter().enumerate() {
        let bucket = if e.contains(north) {
            &mut classes.polar_north
        } else if e.contains(south) {
            &mut classes.polar_south
        } else if north_link.contains(&e.a) && north_link.contains(&e.b) {
            &mut classes.ring_north
        } else if south_link.contains(&e.a) && south_link.contains(&e.b) {
            &mut classes.ring_south
        } else {
            &mut classes.equatorial
        };
        bucket.push(i);
    }
    Ok(classes)
}

/// The vertex permutation induced by the linear map sending the rays of
/// `from` to the rays of `to`, provided that map permutes the vertex set.
pub fn linear_symmetry<T: Scalar>(
    skel: &PolytopeSkeleton<T>,
    from: [usize; 3],
    to: [usize; 3],
) -> Result<Vec<usize>, SkeletonError> {
    let cols = |ix: [usize; 3]| Mat3::from_columns(skel.ray(ix[0]), skel.ray(ix[1]), skel.ray(ix[2]));
    let inv = cols(from).inverse().ok_or(SkeletonError::NotASymmetry)?;
    let map = &cols(to) * &inv;
    let mut perm = Vec::with_capacity(skel.vertex_count());
    for v in 0..skel.vertex_count() {
        let image = map.apply(skel.ray(v));
        let w =
            skel.vertices().iter().position(|u| (&u.position - &image).is_zero()).ok_or(SkeletonError::NotASymmetry)?;
        perm.push(w);
    }
    if perm.iter().collect::<BTreeSet<_>>().len() != perm.len() {
        return Err(SkeletonError::NotASymmetry);
    }
    Ok(perm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::QuadraticScalar as Q;
    use crate::skeleton::{builtin_polytope, Solid, Vertex};

    fn same_cycle(a: &[usize], b: &[usize]) -> bool {
        let n = a.len();
        if n != b.len() {
            return false;
        }
        let rev: Vec<usize> = b.iter().rev().copied().collect();
        (0..n).any(|k| (0..n).all(|i| a[i] == b[(i + k) % n]) || (0..n).all(|i| a[i] == rev[(i + k) % n]))
    }

    #[test]
    fn icosahedron_links_are_pentagons() {
        let ico = builtin_polytope(Solid::Icosahedron);
        for v in 0..12 {
            let cyc = link_cycle(&ico, v).unwrap();
            assert_eq!(cyc.len(), 5);
            // consecutive link vertices are adjacent
            for i in 0..5 {
                assert!(ico.edge_index(cyc[i], cyc[(i + 1) % 5]).is_some());
            }
        }
    }

    #[test]
    fn cube_corner_link() {
        let cube = builtin_polytope(Solid::Cube);
        let v = cube.vertices().iter().position(|v| v.position == Vec3::new(1.into(), 1.into(), 1.into())).unwrap();
        assert_eq!(link_cycle(&cube, v).unwrap().len(), 3);
    }

    #[test]
    fn octahedron_equator() {
        let oct = builtin_polytope(Solid::Octahedron);
        let find = |x: i64, y: i64, z: i64| {
            oct.vertices().iter().position(|v| v.position == Vec3::new(x.into(), y.into(), z.into())).unwrap()
        };
        let cyc = link_cycle(&oct, find(0, 0, 1)).unwrap();
        let expected = [find(1, 0, 0), find(0, 1, 0), find(-1, 0, 0), find(0, -1, 0)];
        assert!(same_cycle(&cyc, &expected), "{cyc:?}");
    }

    #[test]
    fn relabelling_preserves_link() {
        let ico = builtin_polytope(Solid::Icosahedron);
        // reverse the vertex order under new names
        let n = ico.vertex_count();
        let verts: Vec<Vertex<Q>> =
            (0..n).rev().map(|i| Vertex { name: format!("x{:02}", n - i), position: ico.ray(i).clone() }).collect();
        let edges = ico.edges().iter().map(|e| (n - 1 - e.a, n - 1 - e.b)).collect();
        let relabelled = PolytopeSkeleton::new(verts, edges, None).unwrap();
        for v in 0..n {
            let a = link_cycle(&ico, v).unwrap();
            let b: Vec<usize> = link_cycle(&relabelled, n - 1 - v).unwrap().iter().map(|&w| n - 1 - w).collect();
            assert!(same_cycle(&a, &b));
        }
    }

    #[test]
    fn degenerate_link_is_rejected() {
        let mk = |x: i64, y: i64, z: i64, name: &str| Vertex {
            name: name.into(),
            position: Vec3::new(Q::from_int(x), Q::from_int(y), Q::from_int(z)),
        };
        let s = PolytopeSkeleton::new(vec![mk(0, 0, 1, "a"), mk(0, 0, 2, "b")], vec![(0, 1)], None).unwrap();
        assert!(matches!(link_cycle(&s, 0), Err(SkeletonError::DegenerateLink(_))));
        let flat = PolytopeSkeleton::new(
            vec![mk(0, 0, 1, "a"), mk(1, 0, 1, "b"), mk(2, 0, 1, "c"), mk(-1, 0, 1, "d")],
            vec![(0, 1), (0, 2), (0, 3)],
            None,
        )
        .unwrap();
        assert!(matches!(link_cycle(&flat, 0), Err(SkeletonError::DegenerateLink(_))));
    }

    #[test]
    fn axis_classes_partition_icosahedron() {
        let ico = builtin_polytope(Solid::Icosahedron);
        let phi = Q::golden_ratio();
        let n = ico
            .vertices()
            .iter()
            .position(|v| v.position == Vec3::new(Q::from_int(0), Q::from_int(1), phi.clone()))
            .unwrap();
        let c = classify_edges_by_axis(&ico, n).unwrap();
        assert_eq!(c.sizes(), [5, 5, 10, 5, 5]);
        let all: BTreeSet<usize> = [&c.polar_north, &c.ring_north, &c.equatorial, &c.ring_south, &c.polar_south]
            .into_iter()
            .flatten()
            .copied()
            .collect();
        assert_eq!(all.len(), 30);
    }

    #[test]
    fn missing_antipode() {
        let tet = builtin_polytope(Solid::Tetrahedron);
        assert!(matches!(classify_edges_by_axis(&tet, 0), Err(SkeletonError::NoAntipode(_))));
    }

    #[test]
    fn rotation_about_a_vertex() {
        let ico = builtin_polytope(Solid::Icosahedron);
        let cyc = link_cycle(&ico, 0).unwrap();
        let perm = linear_symmetry(&ico, [0, cyc[0], cyc[1]], [0, cyc[1], cyc[2]]).unwrap();
        assert_eq!(perm[0], 0);
        assert!(ico.edge_permutation(&perm).is_some());
        // a non-symmetric frame
        assert!(linear_symmetry(&ico, [0, cyc[0], cyc[1]], [0, cyc[0], cyc[2]]).is_err());
    }
}
