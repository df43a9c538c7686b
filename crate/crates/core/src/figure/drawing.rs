//! The 20-node planar drawing dual to the icosahedral fan.
//!
//! Four rings of five nodes: `O_p` and `M_p` at angle `72p°` (radii 8 and
//! 6), `A_p` and `B_p` at `72p + 36°` (radii 4 and 2). A node stands for a
//! triangle of the icosahedron, a drawn edge for the icosahedron edge shared
//! by its two triangles, and a drawn face for the vertex all its triangles
//! share.

use std::collections::BTreeSet;
use std::fmt;

use super::FigureError;
use crate::balance::WeightVector;
use crate::field::QuadraticScalar as Q;
use crate::skeleton::{link_cycle, PolytopeSkeleton};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ring {
    /// `O`, radius 8: triangles at the axis vertex.
    Outer,
    /// `M`, radius 6.
    Middle,
    /// `A`, radius 4.
    Lower,
    /// `B`, radius 2: triangles at the antipode.
    Inner,
}

impl Ring {
    pub const ALL: [Ring; 4] = [Ring::Outer, Ring::Middle, Ring::Lower, Ring::Inner];

    pub fn letter(self) -> char {
        match self {
            Ring::Outer => 'O',
            Ring::Middle => 'M',
            Ring::Lower => 'A',
            Ring::Inner => 'B',
        }
    }

    pub fn radius(self) -> u32 {
        match self {
            Ring::Outer => 8,
            Ring::Middle => 6,
            Ring::Lower => 4,
            Ring::Inner => 2,
        }
    }

    /// Angular offset of the ring in degrees (added to `72p`).
    pub fn offset(self) -> u32 {
        match self {
            Ring::Outer | Ring::Middle => 0,
            Ring::Lower | Ring::Inner => 36,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DrawnNode {
    pub ring: Ring,
    /// 1..=5
    pub p: usize,
    /// Icosahedron vertices of the dual triangle, sorted.
    pub triangle: [usize; 3],
}

impl DrawnNode {
    pub fn label(&self) -> String {
        format!("{}{}", self.ring.letter(), self.p)
    }

    /// Polar angle in degrees, in `[0, 360)`.
    pub fn angle(&self) -> u32 {
        (72 * self.p as u32 + self.ring.offset()) % 360
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeClass {
    /// `O_p – O_{p+1}`
    Outer,
    /// `O_p – M_p`
    Spoke,
    /// `M_p – A_{p−1}`
    MiddlePrev,
    /// `M_p – A_p`
    MiddleNext,
    /// `A_p – B_p`
    InnerSpoke,
    /// `B_{p−1} – B_p`
    Inner,
}

impl EdgeClass {
    /// Label group: both middle classes share one.
    pub fn group(self) -> usize {
        match self {
            EdgeClass::Outer => 0,
            EdgeClass::Spoke => 1,
            EdgeClass::MiddlePrev | EdgeClass::MiddleNext => 2,
            EdgeClass::InnerSpoke => 3,
            EdgeClass::Inner => 4,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DrawnEdge {
    pub class: EdgeClass,
    pub p: usize,
    pub from: usize,
    pub to: usize,
    /// Index of the dual icosahedron edge.
    pub fan_edge: usize,
}

impl DrawnEdge {
    /// Position of the edge's label in its class, as used by the TikZ
    /// loops: `1..=5`, or `1..=10` for the middle ring where `M_p A_{p−1}`
    /// is `2p − 1` and `M_p A_p` is `2p`.
    pub fn slot(&self) -> usize {
        match self.class {
            EdgeClass::MiddlePrev => 2 * self.p - 1,
            EdgeClass::MiddleNext => 2 * self.p,
            _ => self.p,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DrawnGraph {
    pub axis: usize,
    pub antipode: usize,
    nodes: Vec<DrawnNode>,
    edges: Vec<DrawnEdge>,
    fan_edge_count: usize,
}

fn wrap(p: isize) -> usize {
    (p - 1).rem_euclid(5) as usize + 1
}

impl DrawnGraph {
    pub fn nodes(&self) -> &[DrawnNode] {
        &self.nodes
    }

    pub fn edges(&self) -> &[DrawnEdge] {
        &self.edges
    }

    pub fn node_index(&self, ring: Ring, p: usize) -> usize {
        let r = Ring::ALL.iter().position(|&x| x == ring).expect("ring");
        5 * r + p - 1
    }

    pub fn node(&self, ring: Ring, p: usize) -> &DrawnNode {
        &self.nodes[self.node_index(ring, p)]
    }

    /// Drawn edge by class and index `p`.
    pub fn edge(&self, class: EdgeClass, p: usize) -> &DrawnEdge {
        self.edges.iter().find(|e| e.class == class && e.p == p).expect("every class has p = 1..=5")
    }

    pub fn edge_position(&self, class: EdgeClass, p: usize) -> usize {
        self.edges.iter().position(|e| e.class == class && e.p == p).expect("every class has p = 1..=5")
    }

    pub fn fan_edge_count(&self) -> usize {
        self.fan_edge_count
    }

    /// Faces of the planar drawing, traced from the straight-line embedding
    /// at the ring coordinates. Each face is the list of drawn edges on its
    /// boundary.
    pub fn planar_faces(&self) -> Vec<Vec<usize>> {
        let pos: Vec<(f64, f64)> = self
            .nodes
            .iter()
            .map(|n| {
                let (c, s) = unit(n.angle());
                (n.ring.radius() as f64 * c, n.ring.radius() as f64 * s)
            })
            .collect();
        // neighbours of each node sorted counterclockwise
        let mut rotation: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.nodes.len()];
        for (i, e) in self.edges.iter().enumerate() {
            rotation[e.from].push((e.to, i));
            rotation[e.to].push((e.from, i));
        }
        for (u, around) in rotation.iter_mut().enumerate() {
            let (ux, uy) = pos[u];
            around.sort_by(|&(a, _), &(b, _)| {
                let ta = (pos[a].1 - uy).atan2(pos[a].0 - ux);
                let tb = (pos[b].1 - uy).atan2(pos[b].0 - ux);
                ta.total_cmp(&tb)
            });
        }
        let mut seen = BTreeSet::new();
        let mut faces = Vec::new();
        for (start_u, around) in rotation.iter().enumerate() {
            for &(start_v, _) in around {
                if seen.contains(&(start_u, start_v)) {
                    continue;
                }
                let mut face = Vec::new();
                let (mut u, mut v) = (start_u, start_v);
                while seen.insert((u, v)) {
                    let around_v = &rotation[v];
                    let back = around_v.iter().position(|&(w, _)| w == u).expect("symmetric adjacency");
                    let edge = around_v[back].1;
                    face.push(edge);
                    // next dart turns clockwise at v
                    let (w, _) = around_v[(back + around_v.len() - 1) % around_v.len()];
                    u = v;
                    v = w;
                }
                faces.push(face);
            }
        }
        faces
    }

    /// Drawn edge values moved to the fan edges.
    pub fn transfer(&self, dw: &DrawnWeight) -> WeightVector<Q> {
        let mut values = vec![Q::from_int(0); self.fan_edge_count];
        for (e, v) in self.edges.iter().zip(&dw.values) {
            values[e.fan_edge] = v.clone();
        }
        WeightVector::new(values)
    }

    /// Fan weight read off along the drawn edges.
    pub fn pull(&self, w: &WeightVector<Q>) -> DrawnWeight {
        DrawnWeight { values: self.edges.iter().map(|e| w.get(e.fan_edge).clone()).collect() }
    }
}

/// Cosine and sine of a multiple of 36°, from fixed constants so that
/// emitted coordinates do not depend on the platform's libm.
pub(crate) fn unit(angle: u32) -> (f64, f64) {
    const C36: f64 = 0.809_016_994_374_947_4;
    const C72: f64 = 0.309_016_994_374_947_4;
    const S36: f64 = 0.587_785_252_292_473_1;
    const S72: f64 = 0.951_056_516_295_153_6;
    const TABLE: [(f64, f64); 10] = [
        (1.0, 0.0),
        (C36, S36),
        (C72, S72),
        (-C72, S72),
        (-C36, S36),
        (-1.0, 0.0),
        (-C36, -S36),
        (-C72, -S72),
        (C72, -S72),
        (C36, -S36),
    ];
    assert_eq!(angle % 36, 0, "drawing angles are multiples of 36 degrees");
    TABLE[(angle / 36 % 10) as usize]
}

/// One value per drawn edge, in [`DrawnGraph::edges`] order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DrawnWeight {
    pub values: Vec<Q>,
}

impl DrawnWeight {
    pub fn from_fn(drawing: &DrawnGraph, f: impl Fn(&DrawnEdge) -> Q) -> Self {
        DrawnWeight { values: drawing.edges.iter().map(f).collect() }
    }
}

impl fmt::Display for DrawnGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.edges {
            writeln!(f, "{}--{} fan edge {}", self.nodes[e.from].label(), self.nodes[e.to].label(), e.fan_edge)?;
        }
        Ok(())
    }
}

fn common_neighbours(skel: &PolytopeSkeleton<Q>, a: usize, b: usize) -> Vec<usize> {
    let na: BTreeSet<usize> = skel.neighbors(a).into_iter().collect();
    skel.neighbors(b).into_iter().filter(|w| na.contains(w)).collect()
}

fn sorted3(mut t: [usize; 3]) -> [usize; 3] {
    t.sort_unstable();
    t
}

/// Lays the icosahedral fan out as the ring drawing.
///
/// `seed` is a triangle containing `axis`; it becomes `O_1`, and the ring
/// indices then follow the positive cyclic order around the axis ray.
pub fn dodecahedral_drawing(
    icosa: &PolytopeSkeleton<Q>,
    axis: usize,
    seed: [usize; 3],
) -> Result<DrawnGraph, FigureError> {
    let looks_icosahedral = icosa.vertex_count() == 12
        && icosa.edge_count() == 30
        && (0..12).all(|v| icosa.degree(v) == 5)
        && icosa.is_valid();
    if !looks_icosahedral {
        return Err(FigureError::NotIcosahedron);
    }
    if axis >= 12 {
        return Err(FigureError::BadSeed);
    }
    let south = icosa.antipode(axis).ok_or(FigureError::NoAntipode)?;
    let seed_set: BTreeSet<usize> = seed.into_iter().collect();
    let is_triangle = seed_set.len() == 3
        && seed.iter().all(|&v| v < 12)
        && (0..3).all(|i| icosa.edge_index(seed[i], seed[(i + 1) % 3]).is_some());
    if !is_triangle || !seed_set.contains(&axis) {
        return Err(FigureError::BadSeed);
    }

    let link = link_cycle(icosa, axis)?;
    let start = (0..5)
        .find(|&i| seed_set.contains(&link[i]) && seed_set.contains(&link[(i + 1) % 5]))
        .ok_or(FigureError::BadSeed)?;
    // n[p] for p = 1..=5 lives at n[p - 1]
    let n: Vec<usize> = (0..5).map(|i| link[(start + i) % 5]).collect();
    let ring_n = |p: isize| n[wrap(p) - 1];
    let x: Vec<usize> = (1..=5)
        .map(|p| {
            let (a, b) = (ring_n(p), ring_n(p + 1));
            let shared = common_neighbours(icosa, a, b);
            shared.into_iter().find(|&w| w != axis).expect("adjacent icosahedron vertices share two neighbours")
        })
        .collect();
    let ring_x = |p: isize| x[wrap(p) - 1];

    let mut nodes = Vec::with_capacity(20);
    for ring in Ring::ALL {
        for p in 1..=5isize {
            let triangle = match ring {
                Ring::Outer => [axis, ring_n(p), ring_n(p + 1)],
                Ring::Middle => [ring_n(p), ring_n(p + 1), ring_x(p)],
                Ring::Lower => [ring_n(p + 1), ring_x(p), ring_x(p + 1)],
                Ring::Inner => [south, ring_x(p), ring_x(p + 1)],
            };
            nodes.push(DrawnNode { ring, p: p as usize, triangle: sorted3(triangle) });
        }
    }
    let idx = |ring: Ring, p: isize| 5 * Ring::ALL.iter().position(|&r| r == ring).unwrap() + wrap(p) - 1;

    let mut edges = Vec::with_capacity(30);
    let layout = [
        (EdgeClass::Outer, Ring::Outer, 0, Ring::Outer, 1),
        (EdgeClass::Spoke, Ring::Outer, 0, Ring::Middle, 0),
        (EdgeClass::MiddlePrev, Ring::Middle, 0, Ring::Lower, -1),
        (EdgeClass::MiddleNext, Ring::Middle, 0, Ring::Lower, 0),
        (EdgeClass::InnerSpoke, Ring::Lower, 0, Ring::Inner, 0),
        (EdgeClass::Inner, Ring::Inner, -1, Ring::Inner, 0),
    ];
    for (class, r1, d1, r2, d2) in layout {
        for p in 1..=5isize {
            let (from, to) = (idx(r1, p + d1), idx(r2, p + d2));
            let ta: BTreeSet<usize> = nodes[from].triangle.into_iter().collect();
            let shared: Vec<usize> = nodes[to].triangle.into_iter().filter(|v| ta.contains(v)).collect();
            let fan_edge = match shared[..] {
                [a, b] => icosa.edge_index(a, b),
                _ => None,
            }
            .ok_or(FigureError::NotIcosahedron)?;
            edges.push(DrawnEdge { class, p: p as usize, from, to, fan_edge });
        }
    }
    // the two middle classes interleave in slot order 1..=10
    edges.sort_by_key(|e| (e.class.group(), e.slot()));

    if edges.iter().map(|e| e.fan_edge).collect::<BTreeSet<_>>().len() != 30 {
        return Err(FigureError::NotIcosahedron);
    }
    Ok(DrawnGraph { axis, antipode: south, nodes, edges, fan_edge_count: icosa.edge_count() })
}
