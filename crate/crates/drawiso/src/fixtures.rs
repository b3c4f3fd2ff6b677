//! The bundled drawing corpus: encoded example pairs with their expected
//! isomorphism vectors, plus the catalog of all six two-by-three drawings.
//!
//! Files live under `fixtures/<id>/{left,right}.sdraw` with an
//! `expected.txt` vector and are embedded at compile time. `expected.txt`
//! is line oriented: `source=`, `tags=`, then `labeled.<kind>=` and
//! `unlabeled.<kind>=` entries for all six kinds.

use std::collections::BTreeMap;
use std::path::Path;

use thiserror::Error;

use crate::iso::IsoKind;
use crate::map::validate;
use crate::model::{CrossingEntry, Drawing, Edge, Rotation, StructureError, Vertex};
use crate::sdraw::{parse_drawing, ParseError};

/// Raw embedded corpus text, byte-identical to the files on disk.
pub mod corpus {
    macro_rules! pair {
        ($left:ident, $right:ident, $expected:ident, $dir:literal) => {
            pub const $left: &str =
                include_str!(concat!("../../../fixtures/", $dir, "/left.sdraw"));
            pub const $right: &str =
                include_str!(concat!("../../../fixtures/", $dir, "/right.sdraw"));
            pub const $expected: &str =
                include_str!(concat!("../../../fixtures/", $dir, "/expected.txt"));
        };
    }

    pair!(FIG05EF_LEFT, FIG05EF_RIGHT, FIG05EF_EXPECTED, "fig05ef");
    pair!(FIG10_LEFT, FIG10_RIGHT, FIG10_EXPECTED, "fig10");
    pair!(FIG11_LEFT, FIG11_RIGHT, FIG11_EXPECTED, "fig11");
    pair!(FIG13_LEFT, FIG13_RIGHT, FIG13_EXPECTED, "fig13");
    pair!(FIG15_LEFT, FIG15_RIGHT, FIG15_EXPECTED, "fig15");
    pair!(FIG16_LEFT, FIG16_RIGHT, FIG16_EXPECTED, "fig16");
    pair!(FIG17_LEFT, FIG17_RIGHT, FIG17_EXPECTED, "fig17");
    pair!(FIG18_LEFT, FIG18_RIGHT, FIG18_EXPECTED, "fig18");
    pair!(FIG19_LEFT, FIG19_RIGHT, FIG19_EXPECTED, "fig19");
    pair!(FIG20_LEFT, FIG20_RIGHT, FIG20_EXPECTED, "fig20");

    pub const K23_A: &str = include_str!("../../../fixtures/k23/a.sdraw");
    pub const K23_B: &str = include_str!("../../../fixtures/k23/b.sdraw");
    pub const K23_C: &str = include_str!("../../../fixtures/k23/c.sdraw");
    pub const K23_D: &str = include_str!("../../../fixtures/k23/d.sdraw");
    pub const K23_E: &str = include_str!("../../../fixtures/k23/e.sdraw");
    pub const K23_F: &str = include_str!("../../../fixtures/k23/f.sdraw");

    pub const REJECT_FIG21: &str = include_str!("../../../fixtures/rejects/fig21.sdraw");
}

#[derive(Error, Debug)]
pub enum FixtureError {
    #[error("fixture {0}: {1}")]
    Parse(String, ParseError),
    #[error("fixture {0}: bad expected.txt: {1}")]
    BadExpected(String, String),
    #[error("fixture {0}: {1}")]
    Io(String, std::io::Error),
}

/// One encoded example pair with its expected labeled and unlabeled
/// isomorphism vectors (order: rs, ce, cr, ers, co, strong).
pub struct FixturePair {
    pub id: String,
    pub left: Drawing,
    pub right: Drawing,
    pub expected_labeled: [bool; 6],
    pub expected_unlabeled: [bool; 6],
    pub tags: Vec<String>,
}

/// Parses an `expected.txt` vector file.
pub fn parse_expected(id: &str, text: &str) -> Result<([bool; 6], [bool; 6], Vec<String>), FixtureError> {
    let mut labeled = [None; 6];
    let mut unlabeled = [None; 6];
    let mut tags = Vec::new();
    for raw in text.lines() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| FixtureError::BadExpected(id.into(), format!("no '=' in {line:?}")))?;
        match key {
            "source" => {}
            "tags" => tags = value.split(',').map(|s| s.trim().to_string()).collect(),
            _ => {
                let (mode, kind_name) = key.split_once('.').ok_or_else(|| {
                    FixtureError::BadExpected(id.into(), format!("bad key {key:?}"))
                })?;
                let kind = IsoKind::from_name(kind_name).ok_or_else(|| {
                    FixtureError::BadExpected(id.into(), format!("bad kind {kind_name:?}"))
                })?;
                let bit: bool = value.parse().map_err(|_| {
                    FixtureError::BadExpected(id.into(), format!("bad bool {value:?}"))
                })?;
                let slot = IsoKind::ALL.iter().position(|k| *k == kind).unwrap();
                match mode {
                    "labeled" => labeled[slot] = Some(bit),
                    "unlabeled" => unlabeled[slot] = Some(bit),
                    _ => {
                        return Err(FixtureError::BadExpected(
                            id.into(),
                            format!("bad mode {mode:?}"),
                        ))
                    }
                }
            }
        }
    }
    let unwrap_all = |bits: [Option<bool>; 6]| -> Result<[bool; 6], FixtureError> {
        let mut out = [false; 6];
        for (i, b) in bits.into_iter().enumerate() {
            out[i] = b.ok_or_else(|| {
                FixtureError::BadExpected(
                    id.into(),
                    format!("missing entry for {}", IsoKind::ALL[i].name()),
                )
            })?;
        }
        Ok(out)
    };
    Ok((unwrap_all(labeled)?, unwrap_all(unlabeled)?, tags))
}

fn build_pair(
    id: &str,
    left: &str,
    right: &str,
    expected: &str,
) -> Result<FixturePair, FixtureError> {
    let left = parse_drawing(left).map_err(|e| FixtureError::Parse(id.into(), e))?;
    let right = parse_drawing(right).map_err(|e| FixtureError::Parse(id.into(), e))?;
    let (expected_labeled, expected_unlabeled, tags) = parse_expected(id, expected)?;
    Ok(FixturePair {
        id: id.to_string(),
        left,
        right,
        expected_labeled,
        expected_unlabeled,
        tags,
    })
}

/// The embedded example pairs, in corpus order.
pub fn fixture_suite() -> Vec<FixturePair> {
    embedded_pairs()
        .iter()
        .map(|(id, l, r, e)| build_pair(id, l, r, e).expect("embedded corpus is valid"))
        .collect()
}

/// The six two-by-three drawings `a`..`f`, sorted by crossing count.
pub fn k23_catalog() -> Vec<(char, Drawing)> {
    embedded_k23()
        .iter()
        .map(|(c, text)| (*c, parse_drawing(text).expect("embedded corpus is valid")))
        .collect()
}

fn embedded_pairs() -> &'static [(&'static str, &'static str, &'static str, &'static str)] {
    use corpus::*;
    &[
        ("fig05ef", FIG05EF_LEFT, FIG05EF_RIGHT, FIG05EF_EXPECTED),
        ("fig10", FIG10_LEFT, FIG10_RIGHT, FIG10_EXPECTED),
        ("fig11", FIG11_LEFT, FIG11_RIGHT, FIG11_EXPECTED),
        ("fig13", FIG13_LEFT, FIG13_RIGHT, FIG13_EXPECTED),
        ("fig15", FIG15_LEFT, FIG15_RIGHT, FIG15_EXPECTED),
        ("fig16", FIG16_LEFT, FIG16_RIGHT, FIG16_EXPECTED),
        ("fig17", FIG17_LEFT, FIG17_RIGHT, FIG17_EXPECTED),
        ("fig18", FIG18_LEFT, FIG18_RIGHT, FIG18_EXPECTED),
        ("fig19", FIG19_LEFT, FIG19_RIGHT, FIG19_EXPECTED),
        ("fig20", FIG20_LEFT, FIG20_RIGHT, FIG20_EXPECTED),
    ]
}

fn embedded_k23() -> &'static [(char, &'static str)] {
    use corpus::*;
    &[
        ('a', K23_A),
        ('b', K23_B),
        ('c', K23_C),
        ('d', K23_D),
        ('e', K23_E),
        ('f', K23_F),
    ]
}

/// Loads `<dir>/<id>/{left,right}.sdraw` + `expected.txt` pair fixtures
/// from disk, sorted by id.
pub fn load_fixture_dir(dir: &Path) -> Result<Vec<FixturePair>, FixtureError> {
    let io_err = |e| FixtureError::Io(dir.display().to_string(), e);
    let mut ids: Vec<String> = Vec::new();
    for entry in std::fs::read_dir(dir).map_err(io_err)? {
        let entry = entry.map_err(io_err)?;
        let path = entry.path();
        if path.is_dir() && path.join("expected.txt").is_file() {
            ids.push(entry.file_name().to_string_lossy().to_string());
        }
    }
    ids.sort();
    let mut out = Vec::new();
    for id in ids {
        let read = |name: &str| -> Result<String, FixtureError> {
            std::fs::read_to_string(dir.join(&id).join(name))
                .map_err(|e| FixtureError::Io(format!("{id}/{name}"), e))
        };
        out.push(build_pair(&id, &read("left.sdraw")?, &read("right.sdraw")?, &read("expected.txt")?)?);
    }
    Ok(out)
}

/// One way of inserting a new crossing-free vertex: a slot in each
/// neighbor's rotation plus the new vertex's own rotation.
#[derive(Clone, Debug)]
pub struct InsertionSpec {
    pub class: u16,
    pub slots: BTreeMap<Vertex, usize>,
    pub own_rotation: Vec<Vertex>,
}

/// Adds a vertex to `class` (next free label) with all of its edges
/// uncrossed, per `spec`. The result may or may not be realizable; callers
/// filter with [`validate`].
pub fn insert_plane_vertex(d: &Drawing, spec: &InsertionSpec) -> Result<Drawing, StructureError> {
    let g = d.graph();
    let new_index = g.class_indices(spec.class).iter().max().unwrap() + 1;
    let new_vertex = Vertex::new(spec.class, new_index);

    let mut classes: Vec<(String, Vec<u16>)> = (0..g.class_count() as u16)
        .map(|c| (g.class_name(c).to_string(), g.class_indices(c).to_vec()))
        .collect();
    classes[spec.class as usize].1.push(new_index);
    let new_graph = crate::model::PartitionedGraph::new(classes)?;

    let mut rotations: BTreeMap<Vertex, Rotation> = BTreeMap::new();
    for (&v, rot) in d.rotations() {
        if v.class == spec.class {
            rotations.insert(v, rot.clone());
        } else {
            let mut seq: Vec<Vertex> = rot.as_slice().to_vec();
            let slot = spec.slots[&v] % seq.len();
            seq.insert(slot, new_vertex);
            rotations.insert(v, Rotation::new(seq));
        }
    }
    rotations.insert(new_vertex, Rotation::new(spec.own_rotation.clone()));

    let mut crossings: BTreeMap<Edge, Vec<CrossingEntry>> = d.crossing_lists().clone();
    for &u in &spec.own_rotation {
        crossings.insert(Edge::new(new_vertex, u)?, Vec::new());
    }
    Drawing::from_parts(new_graph, rotations, crossings)
}

/// All insertion specs for a crossing-free vertex in `class`, in a fixed
/// enumeration order.
pub fn insertion_specs(d: &Drawing, class: u16) -> Vec<InsertionSpec> {
    use itertools::Itertools;
    let g = d.graph();
    let neighbors: Vec<Vertex> =
        g.vertices().into_iter().filter(|v| v.class != class).collect();
    let slot_ranges: Vec<Vec<(Vertex, usize)>> = neighbors
        .iter()
        .map(|&u| (0..d.rotation(u).len()).map(|s| (u, s)).collect())
        .collect();

    // Cyclic orders of the neighbors: permutations with the first fixed.
    let own_rotations: Vec<Vec<Vertex>> = if neighbors.len() <= 2 {
        vec![neighbors.clone()]
    } else {
        neighbors[1..]
            .iter()
            .copied()
            .permutations(neighbors.len() - 1)
            .map(|rest| {
                let mut seq = vec![neighbors[0]];
                seq.extend(rest);
                seq
            })
            .collect()
    };

    let mut out = Vec::new();
    for combo in slot_ranges.into_iter().multi_cartesian_product() {
        for own in &own_rotations {
            out.push(InsertionSpec {
                class,
                slots: combo.iter().copied().collect(),
                own_rotation: own.clone(),
            });
        }
    }
    out
}

/// Finds insertion specs under which both drawings of a pair stay
/// realizable, applying the same spec to both sides.
pub fn paired_plane_extensions(left: &Drawing, right: &Drawing, class: u16) -> Vec<(Drawing, Drawing)> {
    let mut out = Vec::new();
    for spec in insertion_specs(left, class) {
        let l = match insert_plane_vertex(left, &spec) {
            Ok(d) => d,
            Err(_) => continue,
        };
        if !validate(&l).realizable {
            continue;
        }
        let r = match insert_plane_vertex(right, &spec) {
            Ok(d) => d,
            Err(_) => continue,
        };
        if validate(&r).realizable {
            out.push((l, r));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_parses_and_is_realizable() {
        let suite = fixture_suite();
        assert_eq!(suite.len(), 10);
        for pair in &suite {
            assert!(validate(&pair.left).realizable, "{} left", pair.id);
            assert!(validate(&pair.right).realizable, "{} right", pair.id);
            assert!(pair.tags.iter().any(|t| t == "derived-completion"), "{}", pair.id);
        }
        let k23 = k23_catalog();
        assert_eq!(k23.len(), 6);
        let counts: Vec<usize> = k23.iter().map(|(_, d)| d.crossing_count()).collect();
        assert_eq!(counts, vec![0, 1, 2, 2, 3, 3]);
        for (_, d) in &k23 {
            assert!(validate(d).realizable);
        }
    }

    #[test]
    fn reject_corpus_is_rejected() {
        assert!(matches!(
            parse_drawing(corpus::REJECT_FIG21),
            Err(ParseError::SingleClassGraph)
        ));
    }

    #[test]
    fn plane_vertex_insertion_keeps_realizability() {
        let d = parse_drawing(corpus::FIG13_LEFT).unwrap();
        let specs = insertion_specs(&d, 1);
        assert!(!specs.is_empty());
        let mut found = 0;
        for spec in &specs {
            let ext = insert_plane_vertex(&d, spec).unwrap();
            assert_eq!(ext.graph().vertex_count(), 6);
            assert_eq!(ext.crossing_count(), d.crossing_count());
            if validate(&ext).realizable {
                found += 1;
            }
        }
        assert!(found > 0, "no realizable crossing-free insertion found");
    }
}
