//! Reconstruction of rotation systems from crossing-pair data.
//!
//! For complete bipartite graphs with both sides of size at least three,
//! the crossing edge pairs determine the rotation system up to one global
//! inversion. The reconstruction resolves six-vertex subconfigurations
//! against a catalog mapping labeled 3x3 crossing-pair sets to their
//! rotation systems, then stitches the answers together: first a reference
//! subdrawing fixes the orientation, then all remaining vertices are
//! sorted into rotations pairwise against reference vertices. Graphs with
//! more classes are handled one class against the rest, aligning the
//! orientation of consecutive runs on their shared subgraph.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;

use thiserror::Error;

use crate::characteristics::{crossing_pairs, rotation_system, RotationSystem};
use crate::iso::{admissible_relabelings, relabel, Relabeling};
use crate::model::{Drawing, Edge, EdgePair, PartitionedGraph, Rotation, Vertex};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ReconstructError {
    #[error("catalog input is not a drawing of a 3x3 bipartite graph")]
    NotK33,
    #[error("two catalog drawings with equal crossing pairs have conflicting rotation systems ({0})")]
    CatalogConflict(String),
    #[error("crossing-pair configuration not covered by the catalog ({0})")]
    UnknownCeConfiguration(String),
    #[error("pairwise orders around {0} admit no single cyclic order")]
    InconsistentSort(String),
    #[error("orientation branches disagree on a shared subgraph ({0})")]
    BranchConflict(String),
    #[error("reconstruction needs at least three vertices per class")]
    ClassTooSmall,
}

/// The canonical labeled graph for catalog keys: classes `a` and `b`,
/// three vertices each.
pub fn canonical_k33() -> PartitionedGraph {
    PartitionedGraph::with_sizes(&[("a", 3), ("b", 3)]).unwrap()
}

/// Maps labeled 3x3 crossing-pair sets to the rotation system of any
/// drawing realizing them, stored up to inversion as the representative
/// whose first vertex has rotation `b1 b2 b3`.
pub struct K33CeCatalog {
    map: BTreeMap<BTreeSet<EdgePair>, RotationSystem>,
    source_drawings: usize,
}

impl K33CeCatalog {
    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn source_drawings(&self) -> usize {
        self.source_drawings
    }
}

/// Pins a 3x3 rotation system to the representative branch: the rotation
/// of the first class-`a` vertex must be `(b1, b2, b3)`.
fn pin_branch(rs: RotationSystem) -> RotationSystem {
    let a1 = Vertex::new(0, 1);
    let aligned = Rotation::new(vec![Vertex::new(1, 1), Vertex::new(1, 2), Vertex::new(1, 3)]);
    if rs.0[&a1] == aligned {
        rs
    } else {
        rs.inverse()
    }
}

fn normalize_to_canonical(d: &Drawing) -> Result<Drawing, ReconstructError> {
    let g = d.graph();
    if g.class_count() != 2 || g.class_size(0) != 3 || g.class_size(1) != 3 {
        return Err(ReconstructError::NotK33);
    }
    let canon = canonical_k33();
    let mut map = BTreeMap::new();
    for c in 0..2u16 {
        for (pos, &i) in g.class_indices(c).iter().enumerate() {
            map.insert(Vertex::new(c, i), Vertex::new(c, pos as u16 + 1));
        }
    }
    Ok(relabel(d, &Relabeling::from_map(map), &canon))
}

/// Builds the catalog from a set of 3x3 drawings: every drawing is
/// expanded through all 72 admissible relabelings and keyed by its
/// crossing-pair set. Conflicting rotation systems for one key are an
/// error: valid realizable inputs never produce one.
pub fn build_k33_catalog(drawings: &[Drawing]) -> Result<K33CeCatalog, ReconstructError> {
    let canon = canonical_k33();
    let relabelings = admissible_relabelings(&canon);
    let mut map: BTreeMap<BTreeSet<EdgePair>, RotationSystem> = BTreeMap::new();
    for d in drawings {
        let d = normalize_to_canonical(d)?;
        for sigma in &relabelings {
            let variant = relabel(&d, sigma, &canon);
            let key = crossing_pairs(&variant).0;
            let value = pin_branch(rotation_system(&variant));
            match map.get(&key) {
                None => {
                    map.insert(key, value);
                }
                Some(existing) if *existing == value => {}
                Some(_) => {
                    return Err(ReconstructError::CatalogConflict(describe_ce(&canon, &key)));
                }
            }
        }
    }
    Ok(K33CeCatalog { map, source_drawings: drawings.len() })
}

fn describe_ce(g: &PartitionedGraph, ce: &BTreeSet<EdgePair>) -> String {
    ce.iter()
        .map(|p| format!("{}x{}", g.edge_name(p.first()), g.edge_name(p.second())))
        .join(" ")
}

/// Looks up the rotation system (up to inversion, pinned representative)
/// for a labeled 3x3 crossing-pair set over [`canonical_k33`] labels.
pub fn k33_rs_from_ce(
    ce: &BTreeSet<EdgePair>,
    cat: &K33CeCatalog,
) -> Result<RotationSystem, ReconstructError> {
    cat.map
        .get(ce)
        .cloned()
        .ok_or_else(|| ReconstructError::UnknownCeConfiguration(describe_ce(&canonical_k33(), ce)))
}

/// A six-vertex catalog query: rotations of three `reds` and three
/// `blues`, derived from the crossing pairs among their mutual edges.
/// The result is branch-pinned so that `reds[0]` has rotation
/// `(blues[0], blues[1], blues[2])`.
fn query_six(
    reds: [Vertex; 3],
    blues: [Vertex; 3],
    ce: &BTreeSet<EdgePair>,
    cat: &K33CeCatalog,
) -> Result<BTreeMap<Vertex, Rotation>, ReconstructError> {
    let to_canon: BTreeMap<Vertex, Vertex> = reds
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, Vertex::new(0, i as u16 + 1)))
        .chain(blues.iter().enumerate().map(|(j, &v)| (v, Vertex::new(1, j as u16 + 1))))
        .collect();
    let within = |e: Edge| -> bool {
        let [u, w] = e.endpoints();
        let red = |v: Vertex| reds.contains(&v);
        let blue = |v: Vertex| blues.contains(&v);
        (red(u) && blue(w)) || (blue(u) && red(w))
    };
    let key: BTreeSet<EdgePair> = ce
        .iter()
        .filter(|p| within(p.first()) && within(p.second()))
        .map(|p| {
            let map_edge = |e: Edge| {
                let [u, w] = e.endpoints();
                Edge::new(to_canon[&u], to_canon[&w]).unwrap()
            };
            EdgePair::new(map_edge(p.first()), map_edge(p.second()))
        })
        .collect();
    let rs = k33_rs_from_ce(&key, cat)?;

    let from_canon: BTreeMap<Vertex, Vertex> =
        to_canon.iter().map(|(&orig, &canon)| (canon, orig)).collect();
    Ok(rs
        .0
        .into_iter()
        .map(|(v, rot)| {
            let seq = rot.as_slice().iter().map(|u| from_canon[u]).collect();
            (from_canon[&v], Rotation::new(seq))
        })
        .collect())
}

/// Orients `candidate` so that `reference_vertex`'s rotation matches the
/// known one; errors when neither branch matches.
fn align_branch(
    mut candidate: BTreeMap<Vertex, Rotation>,
    reference_vertex: Vertex,
    known: &Rotation,
) -> Result<BTreeMap<Vertex, Rotation>, ReconstructError> {
    let got = &candidate[&reference_vertex];
    if got == known {
        return Ok(candidate);
    }
    if got.reversed() == *known {
        for rot in candidate.values_mut() {
            *rot = rot.reversed();
        }
        return Ok(candidate);
    }
    Err(ReconstructError::BranchConflict(format!("{reference_vertex}")))
}

/// Sorts `items` by the pairwise "comes earlier after the reference point"
/// relation and verifies that the relation is a strict total order.
fn sort_by_pairwise<F>(
    items: &[Vertex],
    label: &str,
    mut earlier: F,
) -> Result<Vec<Vertex>, ReconstructError>
where
    F: FnMut(Vertex, Vertex) -> Result<bool, ReconstructError>,
{
    let n = items.len();
    let mut before = vec![vec![false; n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            let b = earlier(items[i], items[j])?;
            before[i][j] = b;
            before[j][i] = !b;
        }
    }
    let mut rank: Vec<(usize, Vertex)> = items
        .iter()
        .enumerate()
        .map(|(i, &v)| ((0..n).filter(|&j| j != i && before[j][i]).count(), v))
        .collect();
    rank.sort();
    let distinct = rank.iter().map(|&(r, _)| r).eq(0..n);
    if !distinct {
        return Err(ReconstructError::InconsistentSort(label.to_string()));
    }
    // With distinct rank counts the relation is consistent iff it agrees
    // with the rank order on every pair.
    let pos: BTreeMap<Vertex, usize> =
        rank.iter().enumerate().map(|(p, &(_, v))| (v, p)).collect();
    for i in 0..n {
        for j in 0..n {
            if i != j && before[i][j] != (pos[&items[i]] < pos[&items[j]]) {
                return Err(ReconstructError::InconsistentSort(label.to_string()));
            }
        }
    }
    Ok(rank.into_iter().map(|(_, v)| v).collect())
}

/// Where in a three-element cyclic order the pair sits: true when, reading
/// the rotation from `reference`, `x` comes before `y`.
fn earlier_in_triple(rot: &Rotation, reference: Vertex, x: Vertex, y: Vertex) -> bool {
    let seq = rot.starting_at(reference);
    debug_assert_eq!(seq.len(), 3);
    debug_assert!(seq[1] == x && seq[2] == y || seq[1] == y && seq[2] == x);
    seq[1] == x
}

/// Reconstructs the full rotation system of a complete bipartite drawing
/// (both sides of size >= 3) from its crossing pairs.
///
/// `reds`/`blues` are the two sides; `ce` holds crossing pairs over edges
/// between them (extra pairs over other edges are ignored). The result
/// contains a rotation for every vertex of both sides and equals the true
/// drawing's rotation system or its inverse, pinned to the branch in which
/// `reds[0]` lists `blues[0], blues[1], blues[2]` in this order.
///
/// Catalog queries performed: `1 + (m-1+1)·C(n-1,2) + (n-1+1)·C(m-1,2)`
/// for side sizes `m`, `n`.
pub fn bipartite_rs_from_ce_sides(
    reds: &[Vertex],
    blues: &[Vertex],
    ce: &BTreeSet<EdgePair>,
    cat: &K33CeCatalog,
) -> Result<BTreeMap<Vertex, Rotation>, ReconstructError> {
    if reds.len() < 3 || blues.len() < 3 {
        return Err(ReconstructError::ClassTooSmall);
    }
    let (r0, r1, r2) = (reds[0], reds[1], reds[2]);
    let (b0, b1, b2) = (blues[0], blues[1], blues[2]);

    // Step 1: the reference subdrawing fixes the global orientation.
    let base = query_six([r0, r1, r2], [b0, b1, b2], ce, cat)?;

    let mut result: BTreeMap<Vertex, Rotation> = BTreeMap::new();

    // Step 2: sort all blues around r0, using b0 as the reference point.
    let rest_blues: Vec<Vertex> = blues[1..].to_vec();
    let sorted_blues = sort_by_pairwise(&rest_blues, "first red vertex", |x, y| {
        let q = query_six([r0, r1, r2], [b0, x, y], ce, cat)?;
        let q = align_branch(q, b0, &base[&b0])?;
        Ok(earlier_in_triple(&q[&r0], b0, x, y))
    })?;
    let mut rot_r0 = vec![b0];
    rot_r0.extend(sorted_blues);
    result.insert(r0, Rotation::new(rot_r0));

    // ... and symmetrically all reds around b0, referenced to r0.
    let rest_reds: Vec<Vertex> = reds[1..].to_vec();
    let sorted_reds = sort_by_pairwise(&rest_reds, "first blue vertex", |x, y| {
        let q = query_six([r0, x, y], [b0, b1, b2], ce, cat)?;
        let q = align_branch(q, r0, &base[&r0])?;
        Ok(earlier_in_triple(&q[&b0], r0, x, y))
    })?;
    let mut rot_b0 = vec![r0];
    rot_b0.extend(sorted_reds);
    result.insert(b0, Rotation::new(rot_b0));

    // Step 3: every remaining vertex, pinned through the reference
    // vertex of the opposite side.
    for (k, &rk) in reds.iter().enumerate().skip(1) {
        let third = if k == 1 { r2 } else { r1 };
        let sorted = sort_by_pairwise(&rest_blues, "red vertex", |x, y| {
            let q = query_six([r0, third, rk], [b0, x, y], ce, cat)?;
            let keep: BTreeSet<Vertex> = [r0, third, rk].into_iter().collect();
            let q = align_branch(q, b0, &result[&b0].restricted(&keep))?;
            Ok(earlier_in_triple(&q[&rk], b0, x, y))
        })?;
        let mut rot = vec![b0];
        rot.extend(sorted);
        result.insert(rk, Rotation::new(rot));
    }
    for (k, &bk) in blues.iter().enumerate().skip(1) {
        let third = if k == 1 { b2 } else { b1 };
        let sorted = sort_by_pairwise(&rest_reds, "blue vertex", |x, y| {
            let q = query_six([r0, x, y], [b0, third, bk], ce, cat)?;
            let keep: BTreeSet<Vertex> = [b0, third, bk].into_iter().collect();
            let q = align_branch(q, r0, &result[&r0].restricted(&keep))?;
            Ok(earlier_in_triple(&q[&bk], r0, x, y))
        })?;
        let mut rot = vec![r0];
        rot.extend(sorted);
        result.insert(bk, Rotation::new(rot));
    }
    Ok(result)
}

/// [`bipartite_rs_from_ce_sides`] for a two-class graph.
pub fn bipartite_rs_from_ce(
    g: &PartitionedGraph,
    ce: &BTreeSet<EdgePair>,
    cat: &K33CeCatalog,
) -> Result<RotationSystem, ReconstructError> {
    if g.class_count() != 2 {
        return Err(ReconstructError::ClassTooSmall);
    }
    let reds: Vec<Vertex> = g.vertices().into_iter().filter(|v| v.class == 0).collect();
    let blues: Vec<Vertex> = g.vertices().into_iter().filter(|v| v.class == 1).collect();
    Ok(RotationSystem(bipartite_rs_from_ce_sides(&reds, &blues, ce, cat)?))
}

/// Reconstructs the rotation system of a complete multipartite drawing
/// (every class of size >= 3) from its crossing pairs.
///
/// Each class is solved against the union of all other vertices as one
/// bipartite run; runs after the first are flipped, if necessary, to agree
/// with the first run's rotations on the shared vertices. The merged
/// result equals the drawing's rotation system up to one global inversion.
pub fn multipartite_rs_from_ce(
    g: &PartitionedGraph,
    ce: &BTreeSet<EdgePair>,
    cat: &K33CeCatalog,
) -> Result<RotationSystem, ReconstructError> {
    let k = g.class_count() as u16;
    if (0..k).any(|c| g.class_size(c) < 3) {
        return Err(ReconstructError::ClassTooSmall);
    }
    if k == 2 {
        return bipartite_rs_from_ce(g, ce, cat);
    }

    let class_vertices = |c: u16| -> Vec<Vertex> {
        g.vertices().into_iter().filter(|v| v.class == c).collect()
    };
    let incident_to_class = |e: Edge, c: u16| -> bool {
        let [u, w] = e.endpoints();
        (u.class == c) != (w.class == c)
    };

    let mut merged: BTreeMap<Vertex, Rotation> = BTreeMap::new();
    let mut first_run: Option<BTreeMap<Vertex, Rotation>> = None;
    for c in 0..k {
        let side_a = class_vertices(c);
        let side_b: Vec<Vertex> =
            g.vertices().into_iter().filter(|v| v.class != c).collect();
        let ce_a: BTreeSet<EdgePair> = ce
            .iter()
            .copied()
            .filter(|p| incident_to_class(p.first(), c) && incident_to_class(p.second(), c))
            .collect();
        let mut run = bipartite_rs_from_ce_sides(&side_a, &side_b, &ce_a, cat)?;

        if let Some(base) = &first_run {
            // Align with the first run on this class's vertices: the first
            // run saw them on its far side, restricted to the first class.
            let first_class: BTreeSet<Vertex> = class_vertices(0).into_iter().collect();
            let mut flip: Option<bool> = None;
            for &v in &side_a {
                let mine = run[&v].restricted(&first_class);
                let theirs = &base[&v];
                let this = if mine == *theirs {
                    false
                } else if mine.reversed() == *theirs {
                    true
                } else {
                    return Err(ReconstructError::BranchConflict(format!("{v}")));
                };
                match flip {
                    None => flip = Some(this),
                    Some(prev) if prev == this => {}
                    Some(_) => {
                        return Err(ReconstructError::BranchConflict(format!("{v}")));
                    }
                }
            }
            if flip == Some(true) {
                for rot in run.values_mut() {
                    *rot = rot.reversed();
                }
            }
        } else {
            first_run = Some(run.clone());
        }

        for &v in &side_a {
            merged.insert(v, run[&v].clone());
        }
    }
    Ok(RotationSystem(merged))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::straight_line_drawing;
    use crate::iso::IsoError;

    fn rs_matches_up_to_inversion(got: &RotationSystem, d: &Drawing) -> bool {
        let rs = rotation_system(d);
        *got == rs || *got == rs.inverse()
    }

    fn grid_k33() -> Drawing {
        crate::testutil::scattered_k33()
    }

    #[test]
    fn empty_catalog_has_no_entries() {
        let cat = build_k33_catalog(&[]).unwrap();
        assert!(cat.is_empty());
        let err = k33_rs_from_ce(&BTreeSet::new(), &cat);
        assert!(matches!(err, Err(ReconstructError::UnknownCeConfiguration(_))));
    }

    #[test]
    fn catalog_from_one_drawing_has_at_most_72_keys() {
        let d = grid_k33();
        let cat = build_k33_catalog(&[d]).unwrap();
        assert!(cat.len() <= 72);
        assert!(!cat.is_empty());
    }

    #[test]
    fn bipartite_reconstruction_recovers_straight_line_rs() {
        let d = grid_k33();
        let cat = build_k33_catalog(&[d.clone()]).unwrap();
        let ce = crossing_pairs(&d).0;
        let rs = bipartite_rs_from_ce(d.graph(), &ce, &cat).unwrap();
        assert!(rs_matches_up_to_inversion(&rs, &d));
    }

    #[test]
    fn reconstruction_is_mirror_invariant() {
        let d = grid_k33();
        let cat = build_k33_catalog(&[d.clone()]).unwrap();
        let ce = crossing_pairs(&d).0;
        let ce_mirror = crossing_pairs(&d.invert()).0;
        assert_eq!(ce, ce_mirror);
        let rs1 = bipartite_rs_from_ce(d.graph(), &ce, &cat).unwrap();
        let rs2 = bipartite_rs_from_ce(d.graph(), &ce_mirror, &cat).unwrap();
        assert_eq!(rs1, rs2);
    }

    #[test]
    fn larger_bipartite_reconstruction_from_subconfigurations() {
        // A 4x5 straight-line drawing; the catalog is seeded from all of
        // its induced 3x3 subdrawings.
        let g = PartitionedGraph::with_sizes(&[("r", 4), ("b", 5)]).unwrap();
        let mut coords = BTreeMap::new();
        for (i, &p) in [(0.0, 0.0), (2.1, 0.4), (4.2, -0.3), (6.3, 0.2)].iter().enumerate() {
            coords.insert(Vertex::new(0, (i + 1) as u16), p);
        }
        for (j, &p) in [(0.7, 3.1), (2.9, 3.3), (4.3, 2.9), (6.1, 3.4), (7.9, 2.7)]
            .iter()
            .enumerate()
        {
            coords.insert(Vertex::new(1, (j + 1) as u16), p);
        }
        let d = straight_line_drawing(&g, &coords).unwrap();

        let mut seeds = Vec::new();
        for reds in (1..=4u16).combinations(3) {
            for blues in (1..=5u16).combinations(3) {
                let keep: BTreeSet<Vertex> = reds
                    .iter()
                    .map(|&i| Vertex::new(0, i))
                    .chain(blues.iter().map(|&j| Vertex::new(1, j)))
                    .collect();
                seeds.push(d.induced_subdrawing(&keep).unwrap());
            }
        }
        let cat = build_k33_catalog(&seeds).unwrap();
        let rs = bipartite_rs_from_ce(d.graph(), &crossing_pairs(&d).0, &cat).unwrap();
        assert!(rs_matches_up_to_inversion(&rs, &d));
    }

    #[test]
    fn tripartite_reconstruction_from_straight_line_drawing() {
        // Three classes of three vertices each, in scattered position.
        let g = PartitionedGraph::with_sizes(&[("a", 3), ("b", 3), ("c", 3)]).unwrap();
        let pts: [[(f64, f64); 3]; 3] = [
            [(0.0, 0.0), (2.3, 0.4), (4.1, -0.3)],
            [(0.6, 3.0), (2.9, 3.3), (5.0, 2.7)],
            [(1.2, 6.1), (3.4, 5.8), (5.6, 6.4)],
        ];
        let mut coords = BTreeMap::new();
        for (c, row) in pts.iter().enumerate() {
            for (i, &p) in row.iter().enumerate() {
                coords.insert(Vertex::new(c as u16, (i + 1) as u16), p);
            }
        }
        let d = straight_line_drawing(&g, &coords).unwrap();
        assert!(crate::map::validate(&d).realizable);

        // Seed with every 3+3 subconfiguration taken across the class
        // split used during reconstruction (one class vs the rest).
        let mut seeds: Vec<Drawing> = Vec::new();
        let vs = g.vertices();
        for c in 0..3u16 {
            let side_a: Vec<Vertex> = vs.iter().copied().filter(|v| v.class == c).collect();
            let side_b: Vec<Vertex> = vs.iter().copied().filter(|v| v.class != c).collect();
            for reds in side_a.iter().copied().combinations(3) {
                for blues in side_b.iter().copied().combinations(3) {
                    seeds.push(six_vertex_subconfiguration(&d, &reds, &blues));
                }
            }
        }
        let cat = build_k33_catalog(&seeds).unwrap();
        let rs = multipartite_rs_from_ce(&g, &crossing_pairs(&d).0, &cat).unwrap();
        assert!(rs_matches_up_to_inversion(&rs, &d));
    }

    /// The 3x3 drawing induced by three "red" and three "blue" vertices,
    /// keeping only red-blue edges (the blues may span several classes).
    fn six_vertex_subconfiguration(d: &Drawing, reds: &[Vertex], blues: &[Vertex]) -> Drawing {
        let canon = canonical_k33();
        let map: BTreeMap<Vertex, Vertex> = reds
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, Vertex::new(0, i as u16 + 1)))
            .chain(
                blues
                    .iter()
                    .enumerate()
                    .map(|(j, &v)| (v, Vertex::new(1, j as u16 + 1))),
            )
            .collect();
        let in_map = |v: &Vertex| map.contains_key(v);
        let edge_kept = |e: &Edge| {
            let [u, w] = e.endpoints();
            in_map(&u)
                && in_map(&w)
                && (reds.contains(&u) && blues.contains(&w)
                    || blues.contains(&u) && reds.contains(&w))
        };

        let mut rotations = BTreeMap::new();
        for (&v, rot) in d.rotations() {
            if !in_map(&v) {
                continue;
            }
            let seq: Vec<Vertex> = rot
                .as_slice()
                .iter()
                .filter(|u| {
                    in_map(u) && Edge::new(v, **u).map(|e| edge_kept(&e)).unwrap_or(false)
                })
                .map(|u| map[u])
                .collect();
            rotations.insert(map[&v], Rotation::new(seq));
        }
        let mut crossings = BTreeMap::new();
        for (&e, list) in d.crossing_lists() {
            if !edge_kept(&e) {
                continue;
            }
            let map_edge = |e: Edge| {
                let [u, w] = e.endpoints();
                Edge::new(map[&u], map[&w]).unwrap()
            };
            let entries: Vec<_> = list
                .iter()
                .filter(|(f, _)| edge_kept(f))
                .map(|(f, rot)| {
                    let arr = rot.as_array();
                    let seq: Vec<Vertex> = arr.iter().map(|v| map[v]).collect();
                    (
                        map_edge(*f),
                        crate::model::CrossingRotation::new(seq.try_into().unwrap()),
                    )
                })
                .collect();
            let mapped = map_edge(e);
            let flipped = map[&e.source()] != mapped.source();
            let entries = if flipped {
                entries.into_iter().rev().collect()
            } else {
                entries
            };
            crossings.insert(mapped, entries);
        }
        Drawing::from_parts(canon, rotations, crossings).unwrap()
    }

    #[test]
    fn small_classes_are_rejected() {
        let g = PartitionedGraph::with_sizes(&[("r", 2), ("b", 3)]).unwrap();
        let cat = build_k33_catalog(&[]).unwrap();
        assert_eq!(
            bipartite_rs_from_ce(&g, &BTreeSet::new(), &cat),
            Err(ReconstructError::ClassTooSmall)
        );
        let _ = IsoError::GraphMismatch;
    }
}
