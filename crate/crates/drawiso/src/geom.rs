//! Compiles straight-line point placements into combinatorial drawings.
//!
//! Segments between points in general position always form a simple
//! drawing, so this is a convenient independent source of realizable
//! drawings: rotations come from sorting directions clockwise, crossings
//! from segment intersections, orders from the intersection parameters.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::model::{
    CrossingEntry, CrossingRotation, Drawing, Edge, PartitionedGraph, Rotation, StructureError,
    Vertex,
};

#[derive(Error, Debug, Clone, PartialEq)]
pub enum GeomError {
    #[error("missing coordinates for a vertex")]
    MissingCoordinates(Vertex),
    #[error("degenerate configuration: {0}")]
    Degenerate(String),
    #[error("structure error: {0}")]
    Structure(#[from] StructureError),
}

const EPS: f64 = 1e-9;

type Point = (f64, f64);

fn cross(o: Point, a: Point, b: Point) -> f64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Clockwise comparison of directions around a common origin, by angle.
fn clockwise_key(dir: Point) -> f64 {
    // Negated atan2 sorts by decreasing angle, i.e. clockwise.
    -dir.1.atan2(dir.0)
}

/// Builds the drawing realized by connecting the given points with
/// straight segments. Points must be in general position: distinct, no
/// three collinear along any edge, no two crossings coincident.
pub fn straight_line_drawing(
    graph: &PartitionedGraph,
    coords: &BTreeMap<Vertex, Point>,
) -> Result<Drawing, GeomError> {
    let vertices = graph.vertices();
    for &v in &vertices {
        if !coords.contains_key(&v) {
            return Err(GeomError::MissingCoordinates(v));
        }
    }
    for (i, &u) in vertices.iter().enumerate() {
        for &w in &vertices[i + 1..] {
            let (pu, pw) = (coords[&u], coords[&w]);
            if (pu.0 - pw.0).abs() < EPS && (pu.1 - pw.1).abs() < EPS {
                return Err(GeomError::Degenerate("coincident points".into()));
            }
        }
    }

    let edges = graph.edges();
    let seg = |e: Edge| (coords[&e.source()], coords[&e.target()]);

    // Proper pairwise intersections with parameters along both edges.
    let mut hits: BTreeMap<Edge, Vec<(f64, Edge, CrossingRotation)>> =
        edges.iter().map(|&e| (e, Vec::new())).collect();
    for (i, &e) in edges.iter().enumerate() {
        for &f in &edges[i + 1..] {
            let (p1, p2) = seg(e);
            let (q1, q2) = seg(f);
            let d1 = cross(p1, p2, q1);
            let d2 = cross(p1, p2, q2);
            let d3 = cross(q1, q2, p1);
            let d4 = cross(q1, q2, p2);
            if e.shares_endpoint(&f) {
                // Adjacent segments only meet at the shared endpoint;
                // collinear overlaps are degenerate.
                let others: Vec<Point> = [q1, q2, p1, p2]
                    .into_iter()
                    .filter(|&p| {
                        let s = coords[&shared_vertex(e, f)];
                        (p.0 - s.0).abs() > EPS || (p.1 - s.1).abs() > EPS
                    })
                    .collect();
                let s = coords[&shared_vertex(e, f)];
                if others.len() == 2 && cross(s, others[0], others[1]).abs() < EPS {
                    return Err(GeomError::Degenerate("collinear adjacent edges".into()));
                }
                continue;
            }
            let strict = d1.abs() > EPS && d2.abs() > EPS && d3.abs() > EPS && d4.abs() > EPS;
            if !strict {
                if d1.abs() < EPS || d2.abs() < EPS || d3.abs() < EPS || d4.abs() < EPS {
                    // A vertex close to the interior of another segment is
                    // only a problem if the segments actually come near
                    // each other; be conservative and reject.
                    if (d1 * d2 <= 0.0 && d3 * d4 <= 0.0)
                        || d1.abs() + d2.abs() < EPS
                        || d3.abs() + d4.abs() < EPS
                    {
                        return Err(GeomError::Degenerate(format!(
                            "near-degenerate incidence between {} and {}",
                            graph.edge_name(e),
                            graph.edge_name(f)
                        )));
                    }
                }
                continue;
            }
            if d1 * d2 < 0.0 && d3 * d4 < 0.0 {
                // Intersection point and parameters.
                let t = d3 / (d3 - d4); // along e: p1 + t (p2 - p1)
                let u = d1 / (d1 - d2); // along f
                let x = (p1.0 + t * (p2.0 - p1.0), p1.1 + t * (p2.1 - p1.1));
                let rot = crossing_rotation_at(x, e, f, coords)?;
                hits.get_mut(&e).unwrap().push((t, f, rot));
                hits.get_mut(&f).unwrap().push((u, e, rot));
            }
        }
    }

    let mut crossings: BTreeMap<Edge, Vec<CrossingEntry>> = BTreeMap::new();
    for (&e, list) in hits.iter_mut() {
        list.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        for w in list.windows(2) {
            if (w[1].0 - w[0].0).abs() < EPS {
                return Err(GeomError::Degenerate(format!(
                    "coincident crossings on {}",
                    graph.edge_name(e)
                )));
            }
        }
        crossings.insert(e, list.iter().map(|&(_, f, rot)| (f, rot)).collect());
    }

    let mut rotations = BTreeMap::new();
    for &v in &vertices {
        let p = coords[&v];
        let mut dirs: Vec<(f64, Vertex)> = graph
            .neighbors(v)
            .into_iter()
            .map(|u| {
                let q = coords[&u];
                (clockwise_key((q.0 - p.0, q.1 - p.1)), u)
            })
            .collect();
        dirs.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        for w in dirs.windows(2) {
            if (w[1].0 - w[0].0).abs() < EPS {
                return Err(GeomError::Degenerate(format!(
                    "collinear neighbors at {}",
                    graph.vertex_name(v)
                )));
            }
        }
        rotations.insert(v, Rotation::new(dirs.into_iter().map(|(_, u)| u).collect()));
    }

    Ok(Drawing::from_parts(graph.clone(), rotations, crossings)?)
}

fn shared_vertex(e: Edge, f: Edge) -> Vertex {
    for v in e.endpoints() {
        if f.is_incident(v) {
            return v;
        }
    }
    unreachable!("edges share an endpoint")
}

fn crossing_rotation_at(
    x: Point,
    e: Edge,
    f: Edge,
    coords: &BTreeMap<Vertex, Point>,
) -> Result<CrossingRotation, GeomError> {
    let mut dirs: Vec<(f64, Vertex)> = [e.source(), e.target(), f.source(), f.target()]
        .into_iter()
        .map(|v| {
            let p = coords[&v];
            (clockwise_key((p.0 - x.0, p.1 - x.1)), v)
        })
        .collect();
    dirs.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    let seq: Vec<Vertex> = dirs.into_iter().map(|(_, v)| v).collect();
    Ok(CrossingRotation::new(seq.try_into().unwrap()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::map::validate;

    #[test]
    fn scattered_bipartite_placement_is_realizable() {
        let d = crate::testutil::scattered_k33();
        let report = validate(&d);
        assert!(report.realizable, "{report:?}");
        assert!(d.crossing_count() >= 1);
    }

    #[test]
    fn crossing_quadrilateral_counts() {
        // Classes grouped on the circle, so the two class-to-class
        // diagonals cross once.
        let g = PartitionedGraph::with_sizes(&[("r", 2), ("b", 2)]).unwrap();
        let mut coords = BTreeMap::new();
        coords.insert(Vertex::new(0, 1), (1.0, 0.0));
        coords.insert(Vertex::new(0, 2), (0.0, 1.0));
        coords.insert(Vertex::new(1, 1), (-1.0, 0.05));
        coords.insert(Vertex::new(1, 2), (0.03, -1.0));
        let d = straight_line_drawing(&g, &coords).unwrap();
        assert_eq!(d.crossing_count(), 1);
        assert!(validate(&d).realizable);
    }

    #[test]
    fn coincident_points_are_rejected() {
        let g = PartitionedGraph::with_sizes(&[("r", 1), ("b", 1)]).unwrap();
        let mut coords = BTreeMap::new();
        coords.insert(Vertex::new(0, 1), (0.0, 0.0));
        coords.insert(Vertex::new(1, 1), (0.0, 0.0));
        assert!(matches!(
            straight_line_drawing(&g, &coords),
            Err(GeomError::Degenerate(_))
        ));
    }
}
