//! The five characteristics of a drawing, extracted in canonical,
//! directly comparable form: vertex rotations (RS), crossing edge pairs
//! (CE), crossing rotations (CR), crossing orders along edges (CO), and
//! the combination of RS and CR (ERS).
//!
//! All of these are value objects detached from the drawing, so two
//! drawings of the same labeled graph compare field by field. Crossing
//! order sequences are stored for the canonical edge traversal.

use std::collections::{BTreeMap, BTreeSet};

use crate::model::{CrossingRotation, Drawing, Edge, EdgePair, Rotation, Vertex};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RotationSystem(pub BTreeMap<Vertex, Rotation>);

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CrossingEdgePairs(pub BTreeSet<EdgePair>);

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CrossingRotations(pub BTreeMap<EdgePair, CrossingRotation>);

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CrossingOrders(pub BTreeMap<Edge, Vec<Edge>>);

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExtendedRotationSystem {
    pub rs: RotationSystem,
    pub cr: CrossingRotations,
}

pub fn rotation_system(d: &Drawing) -> RotationSystem {
    RotationSystem(d.rotations().clone())
}

pub fn crossing_pairs(d: &Drawing) -> CrossingEdgePairs {
    CrossingEdgePairs(d.crossing_map().into_keys().collect())
}

pub fn crossing_rotations(d: &Drawing) -> CrossingRotations {
    CrossingRotations(d.crossing_map())
}

pub fn crossing_orders(d: &Drawing) -> CrossingOrders {
    CrossingOrders(
        d.crossing_lists()
            .iter()
            .map(|(&e, list)| (e, list.iter().map(|(f, _)| *f).collect()))
            .collect(),
    )
}

pub fn extended_rotation_system(d: &Drawing) -> ExtendedRotationSystem {
    ExtendedRotationSystem { rs: rotation_system(d), cr: crossing_rotations(d) }
}

impl RotationSystem {
    /// Every rotation reversed.
    pub fn inverse(&self) -> RotationSystem {
        RotationSystem(self.0.iter().map(|(&v, r)| (v, r.reversed())).collect())
    }

    /// Restriction to a vertex subset: drops other vertices and filters
    /// each remaining rotation to surviving neighbors.
    pub fn restrict(&self, keep: &BTreeSet<Vertex>) -> RotationSystem {
        RotationSystem(
            self.0
                .iter()
                .filter(|(v, _)| keep.contains(v))
                .map(|(&v, r)| (v, r.restricted(keep)))
                .collect(),
        )
    }
}

impl CrossingEdgePairs {
    pub fn restrict(&self, keep: &BTreeSet<Vertex>) -> CrossingEdgePairs {
        CrossingEdgePairs(
            self.0.iter().copied().filter(|p| pair_within(p, keep)).collect(),
        )
    }
}

impl CrossingRotations {
    pub fn inverse(&self) -> CrossingRotations {
        CrossingRotations(self.0.iter().map(|(&p, r)| (p, r.reversed())).collect())
    }

    pub fn restrict(&self, keep: &BTreeSet<Vertex>) -> CrossingRotations {
        CrossingRotations(
            self.0
                .iter()
                .filter(|(p, _)| pair_within(p, keep))
                .map(|(&p, &r)| (p, r))
                .collect(),
        )
    }
}

impl CrossingOrders {
    pub fn restrict(&self, keep: &BTreeSet<Vertex>) -> CrossingOrders {
        let edge_within =
            |e: &Edge| e.endpoints().iter().all(|v| keep.contains(v));
        CrossingOrders(
            self.0
                .iter()
                .filter(|(e, _)| edge_within(e))
                .map(|(&e, seq)| {
                    (e, seq.iter().copied().filter(|f| edge_within(f)).collect())
                })
                .collect(),
        )
    }
}

impl ExtendedRotationSystem {
    pub fn inverse(&self) -> ExtendedRotationSystem {
        ExtendedRotationSystem { rs: self.rs.inverse(), cr: self.cr.inverse() }
    }
}

fn pair_within(p: &EdgePair, keep: &BTreeSet<Vertex>) -> bool {
    p.edges()
        .iter()
        .all(|e| e.endpoints().iter().all(|v| keep.contains(v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sdraw::parse_drawing;

    #[test]
    fn projections_are_consistent() {
        let d = parse_drawing(crate::fixtures::corpus::FIG13_LEFT).unwrap();
        let ers = extended_rotation_system(&d);
        assert_eq!(ers.rs, rotation_system(&d));
        assert_eq!(ers.cr, crossing_rotations(&d));
        let ce = crossing_pairs(&d);
        let keys: BTreeSet<EdgePair> = crossing_rotations(&d).0.into_keys().collect();
        assert_eq!(ce.0, keys);

        // Flattened crossing orders list each pair exactly twice.
        let mut count: BTreeMap<EdgePair, usize> = BTreeMap::new();
        for (&e, seq) in &crossing_orders(&d).0 {
            for &f in seq {
                *count.entry(EdgePair::new(e, f)).or_default() += 1;
            }
        }
        assert!(count.values().all(|&c| c == 2));
        assert_eq!(count.len(), d.crossing_count());
    }

    #[test]
    fn inversion_fixes_ce_and_co() {
        let d = parse_drawing(crate::fixtures::corpus::FIG13_LEFT).unwrap();
        let inv = d.invert();
        assert_eq!(rotation_system(&inv), rotation_system(&d).inverse());
        assert_eq!(crossing_rotations(&inv), crossing_rotations(&d).inverse());
        assert_eq!(crossing_pairs(&inv), crossing_pairs(&d));
        assert_eq!(crossing_orders(&inv), crossing_orders(&d));
    }
}
