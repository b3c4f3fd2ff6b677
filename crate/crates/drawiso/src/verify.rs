//! Exhaustive verification scans over drawing catalogs: the all-pairs
//! relabeling scan over 3x3 drawings, and the implication battery run on
//! arbitrary corpora.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use thiserror::Error;

use crate::characteristics::crossing_pairs;
use crate::iso::{
    admissible_relabelings, cr_iso, ers_iso, iso_report, relabel, rs_iso, IsoReport,
};
use crate::map::maps_equal_up_to_mirror;
use crate::model::{Drawing, EdgePair};
use crate::reconstruct::canonical_k33;
use crate::sdraw::{parse_drawing, serialize};

#[derive(Error, Debug)]
pub enum CatalogError {
    #[error("{0}: {1}")]
    Io(String, std::io::Error),
    #[error("{0}: {1}")]
    Parse(String, crate::sdraw::ParseError),
    #[error("{0}: drawing is not realizable (connected={1}, euler={2})")]
    NotRealizable(String, bool, isize),
}

/// Loads and validates all drawings from a `.sdraw` file (multiple
/// drawings separated by `---` lines) or a directory of `.sdraw` files.
pub fn load_catalog(path: &Path) -> Result<Vec<(String, Drawing)>, CatalogError> {
    let (drawings, skipped) = load_catalog_lenient(path)?;
    if let Some((name, reason)) = skipped.into_iter().next() {
        return Err(CatalogError::Io(
            name,
            std::io::Error::new(std::io::ErrorKind::InvalidData, reason),
        ));
    }
    Ok(drawings)
}

/// Like [`load_catalog`], but collects unparseable or unrealizable inputs
/// as `(name, reason)` skips instead of failing.
pub fn load_catalog_lenient(
    path: &Path,
) -> Result<(Vec<(String, Drawing)>, Vec<(String, String)>), CatalogError> {
    let io_err = |e| CatalogError::Io(path.display().to_string(), e);
    let mut chunks: Vec<(String, String)> = Vec::new();
    if path.is_dir() {
        let mut files: Vec<_> = std::fs::read_dir(path)
            .map_err(io_err)?
            .filter_map(|e| e.ok())
            .map(|e| e.path())
            .filter(|p| p.extension().is_some_and(|x| x == "sdraw"))
            .collect();
        files.sort();
        for file in files {
            let text = std::fs::read_to_string(&file).map_err(io_err)?;
            chunks.push((file.display().to_string(), text));
        }
    } else {
        let text = std::fs::read_to_string(path).map_err(io_err)?;
        for (i, part) in text.split("\n---").enumerate() {
            let part = part.trim_start_matches("---");
            if part.trim().is_empty() {
                continue;
            }
            chunks.push((format!("{}#{}", path.display(), i + 1), part.to_string()));
        }
    }

    let mut drawings = Vec::new();
    let mut skipped = Vec::new();
    for (name, text) in chunks {
        match parse_drawing(&text) {
            Ok(d) => {
                let report = crate::map::validate(&d);
                if report.realizable {
                    drawings.push((name, d));
                } else {
                    skipped.push((
                        name,
                        format!(
                            "not realizable (connected={}, euler={})",
                            report.connected, report.euler_characteristic
                        ),
                    ));
                }
            }
            Err(e) => skipped.push((name, e.to_string())),
        }
    }
    Ok((drawings, skipped))
}

/// Counters of the all-pairs relabeling scan.
#[derive(Clone, Debug, PartialEq)]
pub struct VerificationCounts {
    pub labeled_drawings: usize,
    pub pairs_checked: u64,
    pub ce_pairs: u64,
    pub cr_pairs: u64,
    pub lemma3_rs_ok: bool,
    pub lemma3_ers_ok: bool,
    pub elapsed: f64,
}

#[derive(Error, Debug)]
pub enum VerifyError {
    #[error("catalog drawing is not a 3x3 bipartite drawing")]
    NotK33,
    #[error("crossing-pair-equal labeled drawings with incompatible rotation systems:\n{left}\n{right}")]
    RsViolation { left: String, right: String },
    #[error("crossing-rotation-equal labeled drawings that are not jointly same-or-inverse:\n{left}\n{right}")]
    ErsViolation { left: String, right: String },
}

/// Expands every 3x3 catalog drawing through all 72 relabelings and scans
/// all pairs of the expanded set: equal crossing pairs must imply a
/// same-or-inverse rotation system, and additionally equal-or-inverse
/// crossing rotations must make the extended rotation systems match.
///
/// Pairs are bucketed by crossing-pair set first; pairs in different
/// buckets trivially satisfy both implications, so only buckets are
/// scanned. The reported counts are identical to the naive scan.
pub fn verify_lemma3(catalog: &[Drawing], parallel: bool) -> Result<VerificationCounts, VerifyError> {
    let start = Instant::now();
    let canon = canonical_k33();
    let relabelings = admissible_relabelings(&canon);

    let mut labeled: Vec<Drawing> = Vec::with_capacity(catalog.len() * relabelings.len());
    for d in catalog {
        let g = d.graph();
        if g.class_count() != 2 || g.class_size(0) != 3 || g.class_size(1) != 3 {
            return Err(VerifyError::NotK33);
        }
        let norm = if *g == canon {
            d.clone()
        } else {
            let map = g
                .vertices()
                .into_iter()
                .zip(canon.vertices())
                .collect::<BTreeMap<_, _>>();
            relabel(d, &crate::iso::Relabeling::from_map(map), &canon)
        };
        for sigma in &relabelings {
            labeled.push(relabel(&norm, sigma, &canon));
        }
    }

    let n = labeled.len() as u64;
    let pairs_checked = n * n.saturating_sub(1) / 2;

    let mut buckets: BTreeMap<BTreeSet<EdgePair>, Vec<usize>> = BTreeMap::new();
    for (i, d) in labeled.iter().enumerate() {
        buckets.entry(crossing_pairs(d).0).or_default().push(i);
    }

    let scan_bucket = |members: &Vec<usize>| -> Result<(u64, u64), VerifyError> {
        let mut ce_pairs = 0u64;
        let mut cr_pairs = 0u64;
        for (a, &i) in members.iter().enumerate() {
            for &j in &members[a + 1..] {
                let (d1, d2) = (&labeled[i], &labeled[j]);
                ce_pairs += 1;
                if !rs_iso(d1, d2).unwrap() {
                    return Err(VerifyError::RsViolation {
                        left: serialize(d1),
                        right: serialize(d2),
                    });
                }
                if cr_iso(d1, d2).unwrap() {
                    cr_pairs += 1;
                    if !ers_iso(d1, d2).unwrap() {
                        return Err(VerifyError::ErsViolation {
                            left: serialize(d1),
                            right: serialize(d2),
                        });
                    }
                }
            }
        }
        Ok((ce_pairs, cr_pairs))
    };

    let results: Result<Vec<(u64, u64)>, VerifyError> = if parallel {
        buckets.values().collect::<Vec<_>>().par_iter().map(|m| scan_bucket(m)).collect()
    } else {
        buckets.values().map(scan_bucket).collect()
    };
    let (ce_pairs, cr_pairs) = results?
        .into_iter()
        .fold((0, 0), |(a, b), (c, d)| (a + c, b + d));

    Ok(VerificationCounts {
        labeled_drawings: labeled.len(),
        pairs_checked,
        ce_pairs,
        cr_pairs,
        lemma3_rs_ok: true,
        lemma3_ers_ok: true,
        elapsed: start.elapsed().as_secs_f64(),
    })
}

/// One implication checked over all comparable pairs of a corpus.
#[derive(Clone, Debug)]
pub struct PropertyCheck {
    pub name: &'static str,
    pub pairs: u64,
    pub violations: Vec<String>,
}

/// Result of the implication battery.
#[derive(Debug, Default)]
pub struct TheoremReport {
    pub drawings: usize,
    pub comparable_pairs: u64,
    pub checks: Vec<PropertyCheck>,
    pub skipped: Vec<(String, String)>,
}

impl TheoremReport {
    pub fn violation_count(&self) -> usize {
        self.checks.iter().map(|c| c.violations.len()).sum()
    }

    pub fn ok(&self) -> bool {
        self.violation_count() == 0
    }
}

const CHECK_NAMES: [&str; 8] = [
    "definition-cone",
    "strong-matches-map-oracle",
    "rs-and-co-implies-strong",
    "ce-implies-rs-min-class-3",
    "cr-implies-ers-min-class-3",
    "co-implies-strong-min-class-3",
    "ers-implies-strong-two-by-n",
    "rs-implies-strong-star",
];

/// Runs the implication battery over every same-graph pair of the corpus,
/// labeled always and unlabeled for graphs of at most `unlabeled_max`
/// vertices. Expected outcome on valid inputs: zero violations.
pub fn check_theorems(corpus: &[(String, Drawing)], unlabeled_max: usize) -> TheoremReport {
    let mut report = TheoremReport {
        drawings: corpus.len(),
        ..Default::default()
    };
    let mut checks: BTreeMap<&'static str, PropertyCheck> = CHECK_NAMES
        .into_iter()
        .map(|name| (name, PropertyCheck { name, pairs: 0, violations: Vec::new() }))
        .collect();

    for (i, (name1, d1)) in corpus.iter().enumerate() {
        for (name2, d2) in &corpus[i + 1..] {
            if d1.graph() != d2.graph() {
                continue;
            }
            report.comparable_pairs += 1;
            let g = d1.graph();
            let min_class =
                (0..g.class_count() as u16).map(|c| g.class_size(c)).min().unwrap();
            let two_by_n = g.class_count() == 2 && g.size_multiset().contains(&2);
            let star = g.class_count() == 2 && g.size_multiset()[0] == 1;
            let pair_name = |mode: &str| format!("{name1} vs {name2} ({mode})");

            let mut run = |r: &IsoReport, mode: &str, oracle: Option<bool>| {
                let mut record = |name: &'static str, applies: bool, holds: bool| {
                    let check = checks.get_mut(name).unwrap();
                    if applies {
                        check.pairs += 1;
                        if !holds {
                            check.violations.push(pair_name(mode));
                        }
                    }
                };
                let cone = if mode == "labeled" {
                    r.satisfies_definition_cone()
                } else {
                    r.satisfies_definition_cone_existential()
                };
                record("definition-cone", true, cone);
                record(
                    "strong-matches-map-oracle",
                    oracle.is_some(),
                    oracle.map(|o| o == r.strong).unwrap_or(true),
                );
                let thm2_applies = mode == "unlabeled" || g.vertex_count() >= 5;
                record(
                    "rs-and-co-implies-strong",
                    thm2_applies,
                    !(r.rs && r.co) || r.strong,
                );
                record("ce-implies-rs-min-class-3", min_class >= 3, !r.ce || r.rs);
                record("cr-implies-ers-min-class-3", min_class >= 3, !r.cr || r.ers);
                record("co-implies-strong-min-class-3", min_class >= 3, !r.co || r.strong);
                record("ers-implies-strong-two-by-n", two_by_n, !r.ers || r.strong);
                record("rs-implies-strong-star", star, !r.rs || r.strong);
            };

            let labeled = iso_report(d1, d2, true).expect("same graph");
            let oracle = maps_equal_up_to_mirror(d1, d2);
            run(&labeled, "labeled", Some(oracle));

            if g.vertex_count() <= unlabeled_max {
                let unlabeled = iso_report(d1, d2, false).expect("same shape");
                run(&unlabeled, "unlabeled", None);
            }
        }
    }

    report.checks = CHECK_NAMES.into_iter().map(|n| checks.remove(n).unwrap()).collect();
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sdraw::parse_drawing;

    fn fig13_left() -> Drawing {
        parse_drawing(crate::fixtures::corpus::FIG13_LEFT).unwrap()
    }

    /// 72 relabelings of one drawing give 2556 pairs and no violations.
    #[test]
    fn single_drawing_scan_counts() {
        let d = crate::testutil::scattered_k33();
        let counts = verify_lemma3(&[d], false).unwrap();
        assert_eq!(counts.labeled_drawings, 72);
        assert_eq!(counts.pairs_checked, 2556);
        assert!(counts.lemma3_rs_ok && counts.lemma3_ers_ok);
        assert!(counts.ce_pairs >= 71);
        assert!(counts.cr_pairs <= counts.ce_pairs);
    }

    #[test]
    fn empty_catalog_scan_is_vacuous() {
        let counts = verify_lemma3(&[], false).unwrap();
        assert_eq!(counts.labeled_drawings, 0);
        assert_eq!(counts.pairs_checked, 0);
        assert_eq!(counts.ce_pairs, 0);
        assert_eq!(counts.cr_pairs, 0);
        assert!(counts.lemma3_rs_ok && counts.lemma3_ers_ok);
    }

    #[test]
    fn non_k33_input_is_rejected() {
        assert!(matches!(verify_lemma3(&[fig13_left()], false), Err(VerifyError::NotK33)));
    }

    #[test]
    fn battery_on_drawing_and_mirror_is_clean() {
        let d = fig13_left();
        let corpus = vec![
            ("left".to_string(), d.clone()),
            ("mirror".to_string(), d.invert()),
        ];
        let report = check_theorems(&corpus, 8);
        assert!(report.ok(), "{:?}", report.checks);
        assert_eq!(report.comparable_pairs, 1);
    }
}
