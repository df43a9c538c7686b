//! Polytope 1-skeletons with exact coordinates. Vertex positions are the rays
//! of the fan, edges its 2-cones.

mod builtin;
mod geometry;

pub use builtin::{builtin_polytope, Solid};
pub use geometry::{classify_edges_by_axis, linear_symmetry, link_cycle, AxisClasses};

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

use crate::linalg::Vec3;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SkeletonError {
    #[error("unknown polytope '{0}'")]
    UnknownPolytope(String),
    #[error("duplicate vertex name '{0}'")]
    DuplicateName(String),
    #[error("unknown vertex '{0}'")]
    UnknownVertex(String),
    #[error("vertex index {0} out of range")]
    VertexOutOfRange(usize),
    #[error("edge endpoints coincide at '{0}'")]
    Loop(String),
    #[error("degenerate link at '{0}': neighbours are collinear with the ray")]
    DegenerateLink(String),
    #[error("vertex '{0}' has no antipodal vertex")]
    NoAntipode(String),
    #[error("linear map does not permute the vertices")]
    NotASymmetry,
    #[error("invalid skeleton: {0}")]
    Invalid(String),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Vertex<T> {
    pub name: String,
    pub position: Vec3<T>,
}

/// Unordered vertex pair, stored with the lexicographically smaller name
/// first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
}

impl Edge {
    pub fn contains(&self, v: usize) -> bool {
        self.a == v || self.b == v
    }

    /// The endpoint that is not `v`. Panics if `v` is not an endpoint.
    pub fn other(&self, v: usize) -> usize {
        if self.a == v {
            self.b
        } else {
            assert_eq!(self.b, v, "vertex not on edge");
            self.a
        }
    }
}

/// Problems reported by [`PolytopeSkeleton::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Diagnostic {
    ZeroRay { vertex: String },
    DuplicateRay { first: String, second: String },
    DuplicateEdge { a: String, b: String },
    DanglingFaceEdge { face: usize, a: String, b: String },
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostic::ZeroRay { vertex } => write!(f, "zero ray at vertex {vertex}"),
            Diagnostic::DuplicateRay { first, second } => {
                write!(f, "duplicate ray: {first} and {second} share a position")
            }
            Diagnostic::DuplicateEdge { a, b } => write!(f, "duplicate edge {a}:{b}"),
            Diagnostic::DanglingFaceEdge { face, a, b } => {
                write!(f, "face {face} uses {a}:{b}, which is not an edge")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PolytopeSkeleton<T> {
    vertices: Vec<Vertex<T>>,
    edges: Vec<Edge>,
    faces: Option<Vec<Vec<usize>>>,
    by_name: HashMap<String, usize>,
}

impl<T: Scalar> PolytopeSkeleton<T> {
    /// Builds a skeleton, orienting and sorting edges canonically.
    ///
    /// Only structural problems (unknown or repeated names, loops) are
    /// errors here; geometric ones are left for [`validate`](Self::validate).
    pub fn new(
        vertices: Vec<Vertex<T>>,
        edges: Vec<(usize, usize)>,
        faces: Option<Vec<Vec<usize>>>,
    ) -> Result<Self, SkeletonError> {
        let mut by_name = HashMap::with_capacity(vertices.len());
        for (i, v) in vertices.iter().enumerate() {
            if by_name.insert(v.name.clone(), i).is_some() {
                return Err(SkeletonError::DuplicateName(v.name.clone()));
            }
        }
        let n = vertices.len();
        let check = |i: usize| if i < n { Ok(()) } else { Err(SkeletonError::VertexOutOfRange(i)) };
        let mut oriented = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            check(a)?;
            check(b)?;
            if a == b {
                return Err(SkeletonError::Loop(vertices[a].name.clone()));
            }
            oriented.push(if vertices[a].name <= vertices[b].name { Edge { a, b } } else { Edge { a: b, b: a } });
        }
        oriented.sort_by(|e, f| {
            (&vertices[e.a].name, &vertices[e.b].name).cmp(&(&vertices[f.a].name, &vertices[f.b].name))
        });
        if let Some(faces) = &faces {
            for &i in faces.iter().flatten() {
                check(i)?;
            }
        }
        Ok(PolytopeSkeleton { vertices, edges: oriented, faces, by_name })
    }

    /// Vertices only; edges can be added with
    /// [`with_edges_at_squared_distance`](Self::with_edges_at_squared_distance).
    pub fn from_vertices(vertices: Vec<Vertex<T>>) -> Result<Self, SkeletonError> {
        PolytopeSkeleton::new(vertices, Vec::new(), None)
    }

    pub fn with_edges_at_squared_distance(self, d2: &T) -> Self {
        let edges = edges_from_squared_distance(&self.vertices, d2);
        PolytopeSkeleton::new(self.vertices, edges, self.faces).expect("distance edges are well formed")
    }

    pub fn vertices(&self) -> &[Vertex<T>] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn faces(&self) -> Option<&[Vec<usize>]> {
        self.faces.as_deref()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn ray(&self, v: usize) -> &Vec3<T> {
        &self.vertices[v].position
    }

    pub fn name(&self, v: usize) -> &str {
        &self.vertices[v].name
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize, SkeletonError> {
        self.by_name.get(name).copied().ok_or_else(|| SkeletonError::UnknownVertex(name.to_string()))
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let (a, b) = if self.vertices[u].name <= self.vertices[v].name { (u, v) } else { (v, u) };
        let key = (&self.vertices[a].name, &self.vertices[b].name);
        self.edges.binary_search_by(|e| (&self.vertices[e.a].name, &self.vertices[e.b].name).cmp(&key)).ok()
    }

    /// Looks up an edge by endpoint names in either order.
    pub fn edge_by_names(&self, u: &str, v: &str) -> Result<usize, SkeletonError> {
        let (iu, iv) = (self.vertex_index(u)?, self.vertex_index(v)?);
        self.edge_index(iu, iv).ok_or_else(|| SkeletonError::UnknownVertex(format!("{u}:{v} (no such edge)")))
    }

    /// `name1:name2` in canonical order.
    pub fn edge_label(&self, e: usize) -> String {
        let edge = self.edges[e];
        format!("{}:{}", self.name(edge.a), self.name(edge.b))
    }

    /// `(neighbour, edge index)` pairs at `v`, in edge order.
    pub fn incident(&self, v: usize) -> Vec<(usize, usize)> {
        self.edges.iter().enumerate().filter(|(_, e)| e.contains(v)).map(|(i, e)| (e.other(v), i)).collect()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.incident(v).into_iter().map(|(w, _)| w).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    /// Vertex whose position is exactly `-ray(v)`.
    pub fn antipode(&self, v: usize) -> Option<usize> {
        let target = self.ray(v).map(|c| -c.clone());
        self.vertices.iter().position(|w| (&w.position - &target).is_zero())
    }

    /// Reports every violated invariant; empty iff the skeleton is sound.
    pub fn validate(&self) -> Vec<Diagnostic> {
        let mut out = Vec::new();
        for v in &self.vertices {
            if v.position.is_zero() {
                out.push(Diagnostic::ZeroRay { vertex: v.name.clone() });
            }
        }
        for (i, v) in self.vertices.iter().enumerate() {
            for w in &self.vertices[i + 1..] {
                if (&v.position - &w.position).is_zero() {
                    out.push(Diagnostic::DuplicateRay { first: v.name.clone(), second: w.name.clone() });
                }
            }
        }
        for pair in self.edges.windows(2) {
            if pair[0] == pair[1] {
                out.push(Diagnostic::DuplicateEdge {
                    a: self.name(pair[0].a).to_string(),
                    b: self.name(pair[0].b).to_string(),
                });
            }
        }
        if let Some(faces) = &self.faces {
            for (k, face) in faces.iter().enumerate() {
                for (i, &u) in face.iter().enumerate() {
                    let w = face[(i + 1) % face.len()];
                    if u == w || self.edge_index(u, w).is_none() {
                        out.push(Diagnostic::DanglingFaceEdge {
                            face: k,
                            a: self.name(u).to_string(),
                            b: self.name(w).to_string(),
                        });
                    }
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// Same combinatorics with every coordinate mapped through `f`.
    pub fn map_scalar<U: Scalar, F: Fn(&T) -> U>(&self, f: F) -> PolytopeSkeleton<U> {
        PolytopeSkeleton {
            vertices: self
                .vertices
                .iter()
                .map(|v| Vertex { name: v.name.clone(), position: v.position.map(&f) })
                .collect(),
            edges: self.edges.clone(),
            faces: self.faces.clone(),
            by_name: self.by_name.clone(),
        }
    }

    /// Applies a vertex permutation (`perm[i]` is the image of `i`) to the
    /// edge set; `None` unless edges map onto edges.
    pub fn edge_permutation(&self, perm: &[usize]) -> Option<Vec<usize>> {
        if perm.len() != self.vertices.len() || perm.iter().collect::<BTreeSet<_>>().len() != perm.len() {
            return None;
        }
        let mut image = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            if perm[e.a] >= perm.len() || perm[e.b] >= perm.len() {
                return None;
            }
            image.push(self.edge_index(perm[e.a], perm[e.b])?);
        }
        let distinct: BTreeSet<_> = image.iter().collect();
        (distinct.len() == image.len()).then_some(image)
    }
}

/// All unordered vertex pairs at squared distance exactly `d2`, as index
/// pairs in scan order.
pub fn edges_from_squared_distance<T: Scalar>(vertices: &[Vertex<T>], d2: &T) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            let d = (&vertices[i].position - &vertices[j].position).norm_squared();
            if (d - d2.clone()).is_negligible() {
                out.push((i, j));
            }
        }
    }
    out
}
