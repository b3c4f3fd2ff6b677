//! Combinatorial data model for labeled simple drawings of complete
//! multipartite graphs.
//!
//! A drawing is stored purely combinatorially: the graph (partition classes
//! with named vertices), one clockwise rotation per vertex, and for every
//! edge the ordered list of crossings along it, each carrying the clockwise
//! rotation of the four edge-fragment endpoints around the crossing point.
//! Together with connectivity and the Euler condition (see [`crate::map`])
//! this data determines the drawing up to homeomorphism of the sphere.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

/// A vertex, identified by its partition class (declaration position) and
/// its 1-based label index within the class.
///
/// Ordering is by `(class, index)`; this order defines the canonical
/// orientation of edges and the normal form of cyclic sequences.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Vertex {
    pub class: u16,
    pub index: u16,
}

impl Vertex {
    pub fn new(class: u16, index: u16) -> Self {
        Vertex { class, index }
    }
}

/// The complete multipartite graph: ordered partition classes with ordered
/// vertex labels. The edge set is implicit: all pairs of vertices from
/// distinct classes.
///
/// Vertex index lists are usually contiguous (`1..=n`), but induced
/// subdrawings keep their original labels, so gaps are allowed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PartitionedGraph {
    classes: Vec<(String, Vec<u16>)>,
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph has no classes")]
    NoClasses,
    #[error("class {0:?} is empty")]
    EmptyClass(String),
    #[error("duplicate class name {0:?}")]
    DuplicateClassName(String),
    #[error("duplicate vertex index {1} in class {0:?}")]
    DuplicateVertex(String, u16),
    #[error("invalid class name {0:?}")]
    BadClassName(String),
}

impl PartitionedGraph {
    /// Builds a graph from per-class vertex index lists.
    pub fn new(classes: Vec<(String, Vec<u16>)>) -> Result<Self, GraphError> {
        if classes.is_empty() {
            return Err(GraphError::NoClasses);
        }
        let mut names = BTreeSet::new();
        for (name, indices) in &classes {
            if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphabetic() || c == '_') {
                return Err(GraphError::BadClassName(name.clone()));
            }
            if !names.insert(name.clone()) {
                return Err(GraphError::DuplicateClassName(name.clone()));
            }
            if indices.is_empty() {
                return Err(GraphError::EmptyClass(name.clone()));
            }
            let mut seen = BTreeSet::new();
            for &i in indices {
                if !seen.insert(i) {
                    return Err(GraphError::DuplicateVertex(name.clone(), i));
                }
            }
        }
        Ok(PartitionedGraph { classes })
    }

    /// Convenience constructor with contiguous labels `1..=size` per class.
    pub fn with_sizes(sizes: &[(&str, u16)]) -> Result<Self, GraphError> {
        Self::new(
            sizes
                .iter()
                .map(|&(name, n)| (name.to_string(), (1..=n).collect()))
                .collect(),
        )
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_name(&self, class: u16) -> &str {
        &self.classes[class as usize].0
    }

    pub fn class_indices(&self, class: u16) -> &[u16] {
        &self.classes[class as usize].1
    }

    pub fn class_size(&self, class: u16) -> usize {
        self.classes[class as usize].1.len()
    }

    pub fn class_by_name(&self, name: &str) -> Option<u16> {
        self.classes.iter().position(|(n, _)| n == name).map(|i| i as u16)
    }

    pub fn vertex_count(&self) -> usize {
        self.classes.iter().map(|(_, v)| v.len()).sum()
    }

    pub fn edge_count(&self) -> usize {
        let total = self.vertex_count();
        let same: usize = self
            .classes
            .iter()
            .map(|(_, v)| v.len() * (v.len() - 1) / 2)
            .sum();
        total * (total - 1) / 2 - same
    }

    pub fn contains(&self, v: Vertex) -> bool {
        (v.class as usize) < self.classes.len()
            && self.classes[v.class as usize].1.contains(&v.index)
    }

    /// All vertices, classes in declaration order.
    pub fn vertices(&self) -> Vec<Vertex> {
        let mut out = Vec::with_capacity(self.vertex_count());
        for (c, (_, indices)) in self.classes.iter().enumerate() {
            for &i in indices {
                out.push(Vertex::new(c as u16, i));
            }
        }
        out
    }

    /// All edges in canonical orientation, sorted.
    pub fn edges(&self) -> Vec<Edge> {
        let vs = self.vertices();
        let mut out = Vec::with_capacity(self.edge_count());
        for (i, &u) in vs.iter().enumerate() {
            for &w in &vs[i + 1..] {
                if u.class != w.class {
                    out.push(Edge { a: u, b: w });
                }
            }
        }
        out.sort();
        out
    }

    /// Neighbors of `v`: every vertex outside `v`'s class, in order.
    pub fn neighbors(&self, v: Vertex) -> Vec<Vertex> {
        self.vertices().into_iter().filter(|u| u.class != v.class).collect()
    }

    pub fn vertex_name(&self, v: Vertex) -> String {
        format!("{}{}", self.class_name(v.class), v.index)
    }

    pub fn edge_name(&self, e: Edge) -> String {
        format!("{}-{}", self.vertex_name(e.a), self.vertex_name(e.b))
    }

    /// Multiset of class sizes, sorted. Two graphs admit relabelings onto
    /// each other exactly when these agree.
    pub fn size_multiset(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.classes.iter().map(|(_, l)| l.len()).collect();
        v.sort();
        v
    }

    /// Whether every class is labeled contiguously `1..=n`.
    pub fn is_contiguous(&self) -> bool {
        self.classes
            .iter()
            .all(|(_, l)| l.iter().copied().eq(1..=(l.len() as u16)))
    }
}

/// An edge of the graph in canonical orientation: `a` is the endpoint whose
/// `(class, index)` pair is smaller. Crossing orders along the edge are
/// always stored for the traversal from `a` to `b`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Edge {
    a: Vertex,
    b: Vertex,
}

impl Edge {
    /// Canonically oriented edge between two vertices of distinct classes.
    pub fn new(u: Vertex, v: Vertex) -> Result<Self, StructureError> {
        if u.class == v.class {
            return Err(StructureError::SameClassEdge(u, v));
        }
        Ok(if u < v { Edge { a: u, b: v } } else { Edge { a: v, b: u } })
    }

    pub fn source(&self) -> Vertex {
        self.a
    }

    pub fn target(&self) -> Vertex {
        self.b
    }

    pub fn endpoints(&self) -> [Vertex; 2] {
        [self.a, self.b]
    }

    pub fn is_incident(&self, v: Vertex) -> bool {
        self.a == v || self.b == v
    }

    pub fn shares_endpoint(&self, other: &Edge) -> bool {
        self.is_incident(other.a) || self.is_incident(other.b)
    }

    pub fn other_end(&self, v: Vertex) -> Vertex {
        if self.a == v {
            self.b
        } else {
            self.a
        }
    }
}

/// An unordered pair of independent edges, stored sorted. This is the
/// identity of a crossing: in a simple drawing two edges cross at most once.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EdgePair(Edge, Edge);

impl EdgePair {
    pub fn new(e: Edge, f: Edge) -> Self {
        if e <= f {
            EdgePair(e, f)
        } else {
            EdgePair(f, e)
        }
    }

    pub fn first(&self) -> Edge {
        self.0
    }

    pub fn second(&self) -> Edge {
        self.1
    }

    pub fn edges(&self) -> [Edge; 2] {
        [self.0, self.1]
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.0 == e || self.1 == e
    }

    pub fn other(&self, e: Edge) -> Edge {
        if self.0 == e {
            self.1
        } else {
            self.0
        }
    }
}

/// A cyclic sequence of vertices, kept in normal form (minimal vertex
/// first). Equality and ordering are therefore cyclic equality.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Rotation(Vec<Vertex>);

impl Rotation {
    pub fn new(seq: Vec<Vertex>) -> Self {
        Rotation(normalize_cycle(seq))
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The inverse cyclic order.
    pub fn reversed(&self) -> Rotation {
        let mut v = self.0.clone();
        v.reverse();
        Rotation::new(v)
    }

    /// Restriction to a vertex subset, preserving relative cyclic order.
    pub fn restricted(&self, keep: &BTreeSet<Vertex>) -> Rotation {
        Rotation::new(self.0.iter().copied().filter(|v| keep.contains(v)).collect())
    }

    /// The sequence re-started at `v` (which must occur in the rotation).
    pub fn starting_at(&self, v: Vertex) -> Vec<Vertex> {
        let pos = self.0.iter().position(|&u| u == v).expect("vertex not in rotation");
        let mut out = self.0[pos..].to_vec();
        out.extend_from_slice(&self.0[..pos]);
        out
    }
}

fn normalize_cycle(seq: Vec<Vertex>) -> Vec<Vertex> {
    if seq.len() <= 1 {
        return seq;
    }
    let min = seq
        .iter()
        .enumerate()
        .min_by_key(|&(_, v)| v)
        .map(|(i, _)| i)
        .unwrap();
    let mut out = seq[min..].to_vec();
    out.extend_from_slice(&seq[..min]);
    out
}

/// The clockwise cyclic order of the four edge-fragment endpoints around a
/// crossing. The two endpoints belonging to the same edge sit antipodally
/// (positions 0/2 and 1/3): the crossing is transversal.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CrossingRotation([Vertex; 4]);

impl CrossingRotation {
    /// Normalizes the cyclic sequence (minimal vertex first). Antipodality
    /// against a concrete edge pair is checked by [`Drawing::from_parts`].
    pub fn new(seq: [Vertex; 4]) -> Self {
        let pos = (0..4).min_by_key(|&i| seq[i]).unwrap();
        let mut out = [seq[0]; 4];
        for (k, slot) in out.iter_mut().enumerate() {
            *slot = seq[(pos + k) % 4];
        }
        CrossingRotation(out)
    }

    pub fn as_array(&self) -> [Vertex; 4] {
        self.0
    }

    pub fn reversed(&self) -> CrossingRotation {
        let mut v = self.0;
        v.reverse();
        CrossingRotation::new(v)
    }

    /// True when the same-edge endpoints of `pair` occupy antipodal slots.
    pub fn is_antipodal_for(&self, pair: &EdgePair) -> bool {
        let mut set: BTreeSet<Vertex> = BTreeSet::new();
        for e in pair.edges() {
            set.extend(e.endpoints());
        }
        if set.len() != 4 || !self.0.iter().all(|v| set.contains(v)) {
            return false;
        }
        let e = pair.first();
        let pos: Vec<usize> = (0..4).filter(|&i| e.is_incident(self.0[i])).collect();
        pos.len() == 2 && (pos[1] - pos[0]) == 2
    }
}

/// One crossing entry along an edge: the partner edge and the rotation of
/// the crossing with it.
pub type CrossingEntry = (Edge, CrossingRotation);

/// A labeled simple drawing in combinatorial form.
///
/// Invariants enforced by [`Drawing::from_parts`]: rotations are
/// permutations of the vertex neighborhoods, crossing lists cover every
/// edge, partners are independent and unrepeated, crossing rotations are
/// transversal, and the two entries of each crossing agree. Planarizability
/// (connectivity + Euler) is checked separately by [`crate::map::validate`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Drawing {
    graph: PartitionedGraph,
    rotations: BTreeMap<Vertex, Rotation>,
    crossings: BTreeMap<Edge, Vec<CrossingEntry>>,
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("graph error: {0}")]
    Graph(#[from] GraphError),
    #[error("unknown vertex ({0}, {1})")]
    UnknownVertex(u16, u16),
    #[error("edge endpoints lie in the same class")]
    SameClassEdge(Vertex, Vertex),
    #[error("missing rotation for a vertex")]
    MissingRotation(Vertex),
    #[error("rotation is not a permutation of the vertex neighborhood")]
    BadRotation(Vertex),
    #[error("missing crossing list for an edge")]
    MissingEdgeList(Edge),
    #[error("crossing list for an edge not in the graph")]
    UnknownEdge(Edge),
    #[error("edge pair listed twice along one edge")]
    DuplicateCrossingPair(Edge, Edge),
    #[error("adjacent edges may not cross")]
    AdjacentEdgesCross(Edge, Edge),
    #[error("crossing rotation does not alternate between the two edges")]
    NonAntipodalCrossing(Edge, Edge),
    #[error("the two entries of a crossing disagree")]
    ReciprocityViolation(Edge, Edge),
}

impl Drawing {
    /// Assembles and structurally validates a drawing.
    pub fn from_parts(
        graph: PartitionedGraph,
        rotations: BTreeMap<Vertex, Rotation>,
        crossings: BTreeMap<Edge, Vec<CrossingEntry>>,
    ) -> Result<Self, StructureError> {
        let vertices = graph.vertices();
        let vertex_set: BTreeSet<Vertex> = vertices.iter().copied().collect();
        for v in rotations.keys() {
            if !vertex_set.contains(v) {
                return Err(StructureError::UnknownVertex(v.class, v.index));
            }
        }
        for &v in &vertices {
            let rot = rotations.get(&v).ok_or(StructureError::MissingRotation(v))?;
            let expect: BTreeSet<Vertex> =
                vertex_set.iter().copied().filter(|u| u.class != v.class).collect();
            let got: BTreeSet<Vertex> = rot.as_slice().iter().copied().collect();
            if got != expect || rot.len() != expect.len() {
                return Err(StructureError::BadRotation(v));
            }
        }

        let edges = graph.edges();
        let edge_set: BTreeSet<Edge> = edges.iter().copied().collect();
        for e in crossings.keys() {
            if !edge_set.contains(e) {
                return Err(StructureError::UnknownEdge(*e));
            }
        }
        for &e in &edges {
            let list = crossings.get(&e).ok_or(StructureError::MissingEdgeList(e))?;
            let mut partners = BTreeSet::new();
            for (f, rot) in list {
                if !edge_set.contains(f) {
                    return Err(StructureError::UnknownEdge(*f));
                }
                if e.shares_endpoint(f) {
                    return Err(StructureError::AdjacentEdgesCross(e, *f));
                }
                if !partners.insert(*f) {
                    return Err(StructureError::DuplicateCrossingPair(e, *f));
                }
                if !rot.is_antipodal_for(&EdgePair::new(e, *f)) {
                    return Err(StructureError::NonAntipodalCrossing(e, *f));
                }
            }
        }
        // Reciprocity: f must list the crossing with e, with the same rotation.
        for (&e, list) in &crossings {
            for (f, rot) in list {
                let back = crossings
                    .get(f)
                    .and_then(|l| l.iter().find(|(g, _)| *g == e));
                match back {
                    Some((_, rot2)) if rot2 == rot => {}
                    _ => return Err(StructureError::ReciprocityViolation(e, *f)),
                }
            }
        }

        Ok(Drawing { graph, rotations, crossings })
    }

    pub fn graph(&self) -> &PartitionedGraph {
        &self.graph
    }

    pub fn rotation(&self, v: Vertex) -> &Rotation {
        &self.rotations[&v]
    }

    pub fn rotations(&self) -> &BTreeMap<Vertex, Rotation> {
        &self.rotations
    }

    pub fn crossing_list(&self, e: Edge) -> &[CrossingEntry] {
        &self.crossings[&e]
    }

    pub fn crossing_lists(&self) -> &BTreeMap<Edge, Vec<CrossingEntry>> {
        &self.crossings
    }

    /// Number of crossings in the drawing.
    pub fn crossing_count(&self) -> usize {
        let total: usize = self.crossings.values().map(|l| l.len()).sum();
        total / 2
    }

    /// All crossings with their rotations, one entry per unordered pair.
    pub fn crossing_map(&self) -> BTreeMap<EdgePair, CrossingRotation> {
        let mut out = BTreeMap::new();
        for (&e, list) in &self.crossings {
            for (f, rot) in list {
                out.insert(EdgePair::new(e, *f), *rot);
            }
        }
        out
    }

    /// The mirror image: every vertex and crossing rotation reversed,
    /// crossing orders along edges unchanged.
    pub fn invert(&self) -> Drawing {
        let rotations = self
            .rotations
            .iter()
            .map(|(&v, r)| (v, r.reversed()))
            .collect();
        let crossings = self
            .crossings
            .iter()
            .map(|(&e, list)| {
                (e, list.iter().map(|(f, rot)| (*f, rot.reversed())).collect())
            })
            .collect();
        Drawing { graph: self.graph.clone(), rotations, crossings }
    }

    /// The subdrawing induced by a vertex subset. Original labels are kept;
    /// empty classes are dropped.
    pub fn induced_subdrawing(&self, keep: &BTreeSet<Vertex>) -> Result<Drawing, StructureError> {
        let mut classes: Vec<(String, Vec<u16>)> = Vec::new();
        let mut class_map: BTreeMap<u16, u16> = BTreeMap::new();
        for c in 0..self.graph.class_count() as u16 {
            let indices: Vec<u16> = self
                .graph
                .class_indices(c)
                .iter()
                .copied()
                .filter(|&i| keep.contains(&Vertex::new(c, i)))
                .collect();
            if !indices.is_empty() {
                class_map.insert(c, classes.len() as u16);
                classes.push((self.graph.class_name(c).to_string(), indices));
            }
        }
        if classes.len() < 2 {
            return Err(StructureError::Graph(GraphError::NoClasses));
        }
        let graph = PartitionedGraph::new(classes)?;

        let remap = |v: Vertex| Vertex::new(class_map[&v.class], v.index);
        let kept = |v: &Vertex| keep.contains(v) && self.graph.contains(*v);

        let mut rotations = BTreeMap::new();
        for (&v, rot) in &self.rotations {
            if !kept(&v) {
                continue;
            }
            let seq: Vec<Vertex> = rot
                .as_slice()
                .iter()
                .copied()
                .filter(kept)
                .map(remap)
                .collect();
            rotations.insert(remap(v), Rotation::new(seq));
        }

        let surviving = |e: &Edge| kept(&e.a) && kept(&e.b);
        let remap_edge = |e: Edge| Edge { a: remap(e.a), b: remap(e.b) };
        let mut crossings = BTreeMap::new();
        for (&e, list) in &self.crossings {
            if !surviving(&e) {
                continue;
            }
            let new_list: Vec<CrossingEntry> = list
                .iter()
                .filter(|(f, _)| surviving(f))
                .map(|(f, rot)| {
                    let seq: Vec<Vertex> = rot.as_array().iter().map(|&v| remap(v)).collect();
                    (remap_edge(*f), CrossingRotation::new(seq.try_into().unwrap()))
                })
                .collect();
            crossings.insert(remap_edge(e), new_list);
        }

        Drawing::from_parts(graph, rotations, crossings)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.class, self.index)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(c: u16, i: u16) -> Vertex {
        Vertex::new(c, i)
    }

    #[test]
    fn rotation_normal_form_is_cyclic() {
        let a = Rotation::new(vec![v(1, 2), v(1, 3), v(1, 1)]);
        let b = Rotation::new(vec![v(1, 1), v(1, 2), v(1, 3)]);
        assert_eq!(a, b);
        assert_ne!(a, a.reversed());
        assert_eq!(a.reversed().reversed(), a);
    }

    #[test]
    fn two_element_rotation_is_self_inverse() {
        let a = Rotation::new(vec![v(0, 1), v(0, 2)]);
        assert_eq!(a, a.reversed());
    }

    #[test]
    fn edge_orientation_follows_class_order() {
        let r1 = v(0, 1);
        let b2 = v(1, 2);
        let e = Edge::new(b2, r1).unwrap();
        assert_eq!(e.source(), r1);
        assert_eq!(e.target(), b2);
        assert!(Edge::new(r1, v(0, 2)).is_err());
    }

    #[test]
    fn crossing_rotation_antipodality() {
        let r1 = v(0, 1);
        let r2 = v(0, 2);
        let b1 = v(1, 1);
        let b2 = v(1, 2);
        let e = Edge::new(r1, b2).unwrap();
        let f = Edge::new(r2, b1).unwrap();
        let pair = EdgePair::new(e, f);
        let good = CrossingRotation::new([r1, b1, b2, r2]);
        assert!(good.is_antipodal_for(&pair));
        let bad = CrossingRotation::new([r1, b2, b1, r2]);
        assert!(!bad.is_antipodal_for(&pair));
        assert_eq!(good.reversed(), CrossingRotation::new([r1, r2, b2, b1]));
    }

    #[test]
    fn graph_basics() {
        let g = PartitionedGraph::with_sizes(&[("r", 2), ("b", 3)]).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.edges().len(), 6);
        assert_eq!(g.vertex_name(v(0, 2)), "r2");
        assert_eq!(g.size_multiset(), vec![2, 3]);
        assert!(g.is_contiguous());
    }
}
