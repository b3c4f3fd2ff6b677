//! Combinatorial representation and isomorphism analysis of simple
//! drawings of complete multipartite graphs.
//!
//! A simple drawing is encoded by its vertex rotations and, per edge, the
//! ordered crossings along it with their rotations. On top of that this
//! crate decides the six isomorphism notions for labeled and unlabeled
//! drawing pairs (rotation system, crossing pairs, crossing rotations,
//! extended rotation system, crossing orders, strong), reconstructs
//! rotation systems from crossing-pair data, and runs exhaustive
//! verification scans over drawing catalogs.

pub mod characteristics;
pub mod fixtures;
pub mod geom;
pub mod iso;
pub mod map;
pub mod model;
pub mod reconstruct;
pub mod sdraw;
pub mod verify;

pub use iso::{IsoKind, IsoReport};
pub use model::{Drawing, Edge, EdgePair, PartitionedGraph, Vertex};
pub use sdraw::{parse_drawing, serialize};

#[cfg(test)]
pub(crate) mod testutil {
    use std::collections::BTreeMap;

    use crate::geom::straight_line_drawing;
    use crate::model::{Drawing, PartitionedGraph, Vertex};

    /// A 3x3 straight-line drawing on scattered points.
    pub fn scattered_k33() -> Drawing {
        let g = PartitionedGraph::with_sizes(&[("r", 3), ("b", 3)]).unwrap();
        let mut coords = BTreeMap::new();
        for (i, &p) in [(0.0, 0.0), (2.1, 0.3), (4.3, -0.2)].iter().enumerate() {
            coords.insert(Vertex::new(0, (i + 1) as u16), p);
        }
        for (j, &p) in [(0.8, 3.1), (2.6, 3.4), (4.9, 2.8)].iter().enumerate() {
            coords.insert(Vertex::new(1, (j + 1) as u16), p);
        }
        straight_line_drawing(&g, &coords).unwrap()
    }
}
