//! The six isomorphism predicates for labeled drawing pairs, and the
//! exhaustive relabeling search for unlabeled pairs.
//!
//! "Same or inverse" is global per characteristic: either every rotation
//! (or crossing rotation) matches, or every one is reversed. Mixed
//! same/inverse pairs are not isomorphic. Strong isomorphism of connected
//! drawings is decided as CO-isomorphic and ERS-isomorphic.

use std::collections::BTreeMap;

use itertools::Itertools;
use thiserror::Error;

use crate::characteristics::{
    crossing_orders, crossing_pairs, crossing_rotations, rotation_system,
};
use crate::model::{CrossingRotation, Drawing, Edge, PartitionedGraph, Rotation, Vertex};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum IsoError {
    #[error("drawings are not over the same labeled graph")]
    GraphMismatch,
    #[error("graphs have different class-size multisets")]
    GraphShapeMismatch,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum IsoKind {
    Rs,
    Ce,
    Cr,
    Ers,
    Co,
    Strong,
}

impl IsoKind {
    pub const ALL: [IsoKind; 6] =
        [IsoKind::Rs, IsoKind::Ce, IsoKind::Cr, IsoKind::Ers, IsoKind::Co, IsoKind::Strong];

    pub fn name(self) -> &'static str {
        match self {
            IsoKind::Rs => "rs",
            IsoKind::Ce => "ce",
            IsoKind::Cr => "cr",
            IsoKind::Ers => "ers",
            IsoKind::Co => "co",
            IsoKind::Strong => "strong",
        }
    }

    pub fn from_name(name: &str) -> Option<IsoKind> {
        IsoKind::ALL.into_iter().find(|k| k.name() == name)
    }

    /// Whether this kind forces equal crossing edge pairs.
    fn implies_ce(self) -> bool {
        !matches!(self, IsoKind::Rs)
    }
}

fn require_same_graph(d1: &Drawing, d2: &Drawing) -> Result<(), IsoError> {
    if d1.graph() == d2.graph() {
        Ok(())
    } else {
        Err(IsoError::GraphMismatch)
    }
}

/// Same or uniformly inverse vertex rotations.
pub fn rs_iso(d1: &Drawing, d2: &Drawing) -> Result<bool, IsoError> {
    require_same_graph(d1, d2)?;
    let a = rotation_system(d1);
    let b = rotation_system(d2);
    Ok(a == b || a == b.inverse())
}

/// The same pairs of edges cross.
pub fn ce_iso(d1: &Drawing, d2: &Drawing) -> Result<bool, IsoError> {
    require_same_graph(d1, d2)?;
    Ok(crossing_pairs(d1) == crossing_pairs(d2))
}

/// Equal crossing pairs with same or uniformly inverse crossing rotations.
pub fn cr_iso(d1: &Drawing, d2: &Drawing) -> Result<bool, IsoError> {
    require_same_graph(d1, d2)?;
    if crossing_pairs(d1) != crossing_pairs(d2) {
        return Ok(false);
    }
    let a = crossing_rotations(d1);
    let b = crossing_rotations(d2);
    Ok(a == b || a == b.inverse())
}

/// Extended rotation systems equal or uniformly inverse, jointly across
/// vertices and crossings.
pub fn ers_iso(d1: &Drawing, d2: &Drawing) -> Result<bool, IsoError> {
    require_same_graph(d1, d2)?;
    if crossing_pairs(d1) != crossing_pairs(d2) {
        return Ok(false);
    }
    let rs1 = rotation_system(d1);
    let rs2 = rotation_system(d2);
    let cr1 = crossing_rotations(d1);
    let cr2 = crossing_rotations(d2);
    Ok((rs1 == rs2 && cr1 == cr2) || (rs1 == rs2.inverse() && cr1 == cr2.inverse()))
}

/// Equal crossing order along every edge (canonical traversal).
pub fn co_iso(d1: &Drawing, d2: &Drawing) -> Result<bool, IsoError> {
    require_same_graph(d1, d2)?;
    if crossing_pairs(d1) != crossing_pairs(d2) {
        return Ok(false);
    }
    Ok(crossing_orders(d1) == crossing_orders(d2))
}

/// Strong isomorphism of connected drawings: CO-isomorphic and
/// ERS-isomorphic. Complete multipartite drawings are always connected.
pub fn strong_iso(d1: &Drawing, d2: &Drawing) -> Result<bool, IsoError> {
    Ok(co_iso(d1, d2)? && ers_iso(d1, d2)?)
}

pub fn iso_of_kind(kind: IsoKind, d1: &Drawing, d2: &Drawing) -> Result<bool, IsoError> {
    match kind {
        IsoKind::Rs => rs_iso(d1, d2),
        IsoKind::Ce => ce_iso(d1, d2),
        IsoKind::Cr => cr_iso(d1, d2),
        IsoKind::Ers => ers_iso(d1, d2),
        IsoKind::Co => co_iso(d1, d2),
        IsoKind::Strong => strong_iso(d1, d2),
    }
}

/// An admissible vertex bijection between two graphs: classes map to
/// classes of equal size, labels bijectively within each matched class.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Relabeling {
    map: BTreeMap<Vertex, Vertex>,
}

impl Relabeling {
    pub fn identity(g: &PartitionedGraph) -> Relabeling {
        Relabeling { map: g.vertices().into_iter().map(|v| (v, v)).collect() }
    }

    pub fn from_map(map: BTreeMap<Vertex, Vertex>) -> Relabeling {
        Relabeling { map }
    }

    pub fn apply(&self, v: Vertex) -> Vertex {
        self.map[&v]
    }

    pub fn entries(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.map.iter().map(|(&a, &b)| (a, b))
    }

    pub fn inverse(&self) -> Relabeling {
        Relabeling { map: self.map.iter().map(|(&a, &b)| (b, a)).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().all(|(a, b)| a == b)
    }

    /// Renders the bijection as `from->to` pairs in label names.
    pub fn display_with(&self, from: &PartitionedGraph, to: &PartitionedGraph) -> String {
        self.map
            .iter()
            .map(|(&a, &b)| format!("{}->{}", from.vertex_name(a), to.vertex_name(b)))
            .join(" ")
    }
}

/// All admissible self-relabelings of a graph, in a fixed enumeration
/// order. Equal-size classes are interchangeable, so e.g. a graph with two
/// classes of size 3 has 2 * 3! * 3! = 72 relabelings.
pub fn admissible_relabelings(g: &PartitionedGraph) -> Vec<Relabeling> {
    relabelings_between(g, g).expect("a graph matches its own shape")
}

/// All admissible relabelings from `from` onto `to`. Errors when the
/// class-size multisets differ.
pub fn relabelings_between(
    from: &PartitionedGraph,
    to: &PartitionedGraph,
) -> Result<Vec<Relabeling>, IsoError> {
    if from.size_multiset() != to.size_multiset() {
        return Err(IsoError::GraphShapeMismatch);
    }

    // Group classes by size and enumerate class assignments per group.
    let mut groups: BTreeMap<usize, (Vec<u16>, Vec<u16>)> = BTreeMap::new();
    for c in 0..from.class_count() as u16 {
        groups.entry(from.class_size(c)).or_default().0.push(c);
    }
    for c in 0..to.class_count() as u16 {
        groups.entry(to.class_size(c)).or_default().1.push(c);
    }

    let group_choices: Vec<Vec<Vec<(u16, u16)>>> = groups
        .values()
        .map(|(src, dst)| {
            dst.iter()
                .copied()
                .permutations(dst.len())
                .map(|perm| src.iter().copied().zip(perm).collect::<Vec<_>>())
                .collect()
        })
        .collect();

    let mut out = Vec::new();
    for combo in group_choices.into_iter().multi_cartesian_product() {
        let class_map: Vec<(u16, u16)> = combo.into_iter().flatten().collect();
        // Per matched class pair, all bijections of the label lists.
        let per_class: Vec<Vec<Vec<(Vertex, Vertex)>>> = class_map
            .iter()
            .map(|&(s, t)| {
                let src = from.class_indices(s);
                to.class_indices(t)
                    .iter()
                    .copied()
                    .permutations(src.len())
                    .map(|perm| {
                        src.iter()
                            .zip(perm)
                            .map(|(&i, j)| (Vertex::new(s, i), Vertex::new(t, j)))
                            .collect::<Vec<_>>()
                    })
                    .collect()
            })
            .collect();
        for vertex_combo in per_class.into_iter().multi_cartesian_product() {
            let map: BTreeMap<Vertex, Vertex> = vertex_combo.into_iter().flatten().collect();
            out.push(Relabeling { map });
        }
    }
    Ok(out)
}

/// The drawing obtained by renaming vertices along a relabeling onto
/// `target`. Edges whose canonical orientation flips get their crossing
/// sequence reversed, so all stored orders stay canonical.
pub fn relabel(d: &Drawing, sigma: &Relabeling, target: &PartitionedGraph) -> Drawing {
    let map_rot = |r: &Rotation| {
        Rotation::new(r.as_slice().iter().map(|&v| sigma.apply(v)).collect())
    };
    let map_edge =
        |e: Edge| Edge::new(sigma.apply(e.source()), sigma.apply(e.target())).unwrap();
    let map_xrot = |r: &CrossingRotation| {
        let arr = r.as_array();
        CrossingRotation::new([
            sigma.apply(arr[0]),
            sigma.apply(arr[1]),
            sigma.apply(arr[2]),
            sigma.apply(arr[3]),
        ])
    };

    let rotations = d
        .rotations()
        .iter()
        .map(|(&v, r)| (sigma.apply(v), map_rot(r)))
        .collect();
    let crossings = d
        .crossing_lists()
        .iter()
        .map(|(&e, list)| {
            let new_edge = map_edge(e);
            let mut entries: Vec<_> =
                list.iter().map(|(f, rot)| (map_edge(*f), map_xrot(rot))).collect();
            if sigma.apply(e.source()) != new_edge.source() {
                entries.reverse();
            }
            (new_edge, entries)
        })
        .collect();

    Drawing::from_parts(target.clone(), rotations, crossings)
        .expect("relabeling a valid drawing stays valid")
}

/// Crossings on edges incident to each vertex; a cheap relabeling filter
/// for the kinds that force equal crossing pairs.
fn crossing_degrees(d: &Drawing) -> BTreeMap<Vertex, usize> {
    let mut deg: BTreeMap<Vertex, usize> =
        d.graph().vertices().into_iter().map(|v| (v, 0)).collect();
    for (&e, list) in d.crossing_lists() {
        for v in e.endpoints() {
            *deg.get_mut(&v).unwrap() += list.len();
        }
    }
    deg
}

/// Unlabeled isomorphism: exhaustive search over admissible relabelings of
/// `d2` onto `d1`'s graph, returning the first witness found.
pub fn unlabeled_iso(
    d1: &Drawing,
    d2: &Drawing,
    kind: IsoKind,
) -> Result<(bool, Option<Relabeling>), IsoError> {
    let candidates = relabelings_between(d2.graph(), d1.graph())?;
    let deg1 = crossing_degrees(d1);
    let deg2 = crossing_degrees(d2);
    for sigma in candidates {
        if kind.implies_ce() {
            let ok = deg2.iter().all(|(&v, &c)| deg1[&sigma.apply(v)] == c);
            if !ok {
                continue;
            }
        }
        let relabeled = relabel(d2, &sigma, d1.graph());
        if iso_of_kind(kind, d1, &relabeled)? {
            return Ok((true, Some(sigma)));
        }
    }
    Ok((false, None))
}

/// The six predicate results for a pair, plus witness relabelings per true
/// kind in unlabeled mode.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IsoReport {
    pub rs: bool,
    pub ce: bool,
    pub cr: bool,
    pub ers: bool,
    pub co: bool,
    pub strong: bool,
    pub witnesses: BTreeMap<IsoKind, Relabeling>,
}

impl IsoReport {
    pub fn get(&self, kind: IsoKind) -> bool {
        match kind {
            IsoKind::Rs => self.rs,
            IsoKind::Ce => self.ce,
            IsoKind::Cr => self.cr,
            IsoKind::Ers => self.ers,
            IsoKind::Co => self.co,
            IsoKind::Strong => self.strong,
        }
    }

    pub fn from_bits(bits: [bool; 6]) -> IsoReport {
        IsoReport {
            rs: bits[0],
            ce: bits[1],
            cr: bits[2],
            ers: bits[3],
            co: bits[4],
            strong: bits[5],
            witnesses: BTreeMap::new(),
        }
    }

    pub fn bits(&self) -> [bool; 6] {
        [self.rs, self.ce, self.cr, self.ers, self.co, self.strong]
    }

    /// The implications that hold for every labeled pair by definition:
    /// ers => rs and cr; cr or co => ce; strong <=> co and ers.
    pub fn satisfies_definition_cone(&self) -> bool {
        (!self.ers || (self.rs && self.cr))
            && (!(self.cr || self.co) || self.ce)
            && (self.strong == (self.co && self.ers))
    }

    /// The cone for unlabeled reports, where every bit is an independent
    /// existential over relabelings: `strong <=> co and ers` weakens to
    /// one direction because the witnesses of co and ers may differ.
    pub fn satisfies_definition_cone_existential(&self) -> bool {
        (!self.ers || (self.rs && self.cr))
            && (!(self.cr || self.co) || self.ce)
            && (!self.strong || (self.co && self.ers))
    }
}

/// Runs all six predicates in labeled or unlabeled mode.
pub fn iso_report(d1: &Drawing, d2: &Drawing, labeled: bool) -> Result<IsoReport, IsoError> {
    let mut bits = [false; 6];
    let mut witnesses = BTreeMap::new();
    for (i, kind) in IsoKind::ALL.into_iter().enumerate() {
        if labeled {
            bits[i] = iso_of_kind(kind, d1, d2)?;
        } else {
            let (ok, witness) = unlabeled_iso(d1, d2, kind)?;
            bits[i] = ok;
            if let Some(w) = witness {
                witnesses.insert(kind, w);
            }
        }
    }
    let mut report = IsoReport::from_bits(bits);
    report.witnesses = witnesses;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sdraw::parse_drawing;

    fn fig13_left() -> Drawing {
        parse_drawing(crate::fixtures::corpus::FIG13_LEFT).unwrap()
    }

    #[test]
    fn relabeling_counts() {
        let k33 = PartitionedGraph::with_sizes(&[("r", 3), ("b", 3)]).unwrap();
        assert_eq!(admissible_relabelings(&k33).len(), 72);
        let k23 = PartitionedGraph::with_sizes(&[("r", 2), ("b", 3)]).unwrap();
        assert_eq!(admissible_relabelings(&k23).len(), 12);
        let k11 = PartitionedGraph::with_sizes(&[("a", 1), ("b", 1)]).unwrap();
        assert_eq!(admissible_relabelings(&k11).len(), 2);
    }

    #[test]
    fn relabelings_are_distinct_bijections() {
        let k23 = PartitionedGraph::with_sizes(&[("r", 2), ("b", 3)]).unwrap();
        let all = admissible_relabelings(&k23);
        for sigma in &all {
            let mut seen = std::collections::BTreeSet::new();
            for (_, to) in sigma.entries() {
                assert!(seen.insert(to));
            }
        }
        let mut uniq = all.clone();
        uniq.dedup();
        assert_eq!(uniq.len(), all.len());
    }

    #[test]
    fn drawing_is_isomorphic_to_itself_and_its_mirror() {
        let d = fig13_left();
        let inv = d.invert();
        for kind in IsoKind::ALL {
            assert_eq!(iso_of_kind(kind, &d, &d), Ok(true));
            assert_eq!(iso_of_kind(kind, &d, &inv), Ok(true), "{kind:?} vs mirror");
        }
    }

    #[test]
    fn relabeled_drawing_is_strongly_isomorphic_unlabeled() {
        let d = fig13_left();
        for sigma in admissible_relabelings(d.graph()).into_iter().take(5) {
            let relabeled = relabel(&d, &sigma, d.graph());
            let (ok, witness) = unlabeled_iso(&d, &relabeled, IsoKind::Strong).unwrap();
            assert!(ok);
            let w = witness.unwrap();
            let back = relabel(&relabeled, &w, d.graph());
            assert_eq!(strong_iso(&d, &back), Ok(true));
        }
    }

    #[test]
    fn mismatched_graphs_error() {
        let d = fig13_left();
        let plane = parse_drawing(
            "classes: r=2 b=2\nrot r1: b1 b2\nrot r2: b1 b2\nrot b1: r1 r2\nrot b2: r1 r2\n\
             edge r1-b1:\nedge r1-b2:\nedge r2-b1:\nedge r2-b2:\n",
        )
        .unwrap();
        assert_eq!(rs_iso(&d, &plane), Err(IsoError::GraphMismatch));
        assert_eq!(
            unlabeled_iso(&d, &plane, IsoKind::Ce),
            Err(IsoError::GraphShapeMismatch)
        );
    }

    #[test]
    fn report_satisfies_cone() {
        let d = fig13_left();
        let report = iso_report(&d, &d.invert(), true).unwrap();
        assert!(report.satisfies_definition_cone());
        assert!(report.strong);
    }
}
