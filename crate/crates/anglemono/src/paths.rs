//! Wedge-path reachability machinery: the set of vertices reachable by
//! paths confined to a closed wedge, the greedy upper/lower envelopes of
//! that set, the region they bound, the critical wedge centers at which
//! reachability changes, and pairwise path extraction with independent
//! verification.

use std::collections::VecDeque;

use thiserror::Error;

use crate::geom::{
    self, min_enclosing_arc, point_in_polygon, Angle, PointLocation, Polygon2, ANGLE_EPS,
};
use crate::graph::{AugmentedGraph, ItemRef, PlaneGraph};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PathError {
    #[error("vertices {from} and {to} are not joined by an edge")]
    NotAPath { from: usize, to: usize },
}

/// Everything reachable from a source by paths whose edge vectors stay in
/// one closed wedge: reached vertices, used edges and rays, and every
/// in-wedge predecessor of each reached vertex in discovery order.
#[derive(Debug, Clone)]
pub struct ReachSet {
    pub source: usize,
    pub center: Angle,
    pub width: Angle,
    reached: Vec<bool>,
    used_edges: Vec<bool>,
    used_rays: Vec<bool>,
    preds: Vec<Vec<(usize, usize)>>,
    order: Vec<usize>,
}

impl ReachSet {
    pub fn is_reached(&self, v: usize) -> bool {
        self.reached[v]
    }

    /// Reached vertices in BFS discovery order.
    pub fn discovery_order(&self) -> &[usize] {
        &self.order
    }

    pub fn reached_vertices(&self) -> Vec<usize> {
        (0..self.reached.len()).filter(|&v| self.reached[v]).collect()
    }

    pub fn reached_count(&self) -> usize {
        self.order.len()
    }

    pub fn uses_edge(&self, e: usize) -> bool {
        self.used_edges[e]
    }

    pub fn uses_ray(&self, r: usize) -> bool {
        self.used_rays[r]
    }

    pub fn used_edge_ids(&self) -> Vec<usize> {
        (0..self.used_edges.len()).filter(|&e| self.used_edges[e]).collect()
    }

    pub fn used_ray_ids(&self) -> Vec<usize> {
        (0..self.used_rays.len()).filter(|&r| self.used_rays[r]).collect()
    }

    /// In-wedge predecessors of `v` as `(vertex, edge)`, in discovery order.
    pub fn preds(&self, v: usize) -> &[(usize, usize)] {
        &self.preds[v]
    }

    /// Number of vertices in the underlying graph.
    pub fn vertex_count(&self) -> usize {
        self.preds.len()
    }

    /// Path from the source to `t` using first-discovered predecessors.
    pub fn path_to(&self, t: usize) -> Option<Vec<usize>> {
        if !self.reached[t] {
            return None;
        }
        let mut path = vec![t];
        let mut cur = t;
        while cur != self.source {
            let (p, _) = *self.preds[cur].first()?;
            path.push(p);
            cur = p;
        }
        path.reverse();
        Some(path)
    }

    pub fn same_reachability(&self, other: &ReachSet) -> bool {
        self.reached == other.reached
            && self.used_edges == other.used_edges
            && self.used_rays == other.used_rays
    }
}

/// Breadth-first closure of wedge-confined paths from `source`: every edge
/// leaving a reached vertex inside the closed wedge is traversed; rays are
/// recorded but end exploration.
pub fn reach_set(gp: &AugmentedGraph, source: usize, center: Angle, width: Angle) -> ReachSet {
    let n = gp.base().vertex_count();
    let mut rs = ReachSet {
        source,
        center,
        width,
        reached: vec![false; n],
        used_edges: vec![false; gp.base().edge_count()],
        used_rays: vec![false; gp.rays().len()],
        preds: vec![Vec::new(); n],
        order: Vec::new(),
    };
    let mut queue = VecDeque::new();
    rs.reached[source] = true;
    rs.order.push(source);
    queue.push_back(source);
    while let Some(v) = queue.pop_front() {
        for item in gp.wedge_incidence(v, center, width) {
            match item.item {
                ItemRef::Edge { edge, to } => {
                    rs.used_edges[edge] = true;
                    rs.preds[to].push((v, edge));
                    if !rs.reached[to] {
                        rs.reached[to] = true;
                        rs.order.push(to);
                        queue.push_back(to);
                    }
                }
                ItemRef::Ray { ray } => {
                    rs.used_rays[ray] = true;
                }
            }
        }
    }
    rs
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnvelopeKind {
    Upper,
    Lower,
}

/// A greedy extremal wedge path: vertices visited, edges taken, and the
/// terminal exterior ray.
#[derive(Debug, Clone)]
pub struct EnvelopePath {
    pub kind: EnvelopeKind,
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
    pub ray: usize,
}

impl EnvelopePath {
    pub fn last_vertex(&self) -> usize {
        *self.vertices.last().unwrap()
    }

    /// Edge directions as traversed, then the terminal ray direction.
    pub fn step_dirs(&self, gp: &AugmentedGraph) -> Vec<Angle> {
        let mut dirs = Vec::with_capacity(self.edges.len() + 1);
        for (i, &e) in self.edges.iter().enumerate() {
            dirs.push(gp.base().edge_dir(e, self.vertices[i]));
        }
        dirs.push(gp.rays()[self.ray].dir);
        dirs
    }
}

/// Grow the extremal wedge path from `source`, always taking the most
/// counterclockwise (upper) or most clockwise (lower) in-wedge item. Ends
/// with a ray; the augmentation guarantees one is always available.
pub fn envelope(
    gp: &AugmentedGraph,
    source: usize,
    center: Angle,
    width: Angle,
    kind: EnvelopeKind,
) -> EnvelopePath {
    let n = gp.base().vertex_count();
    let mut vertices = vec![source];
    let mut edges = Vec::new();
    let mut v = source;
    for _ in 0..=n {
        let items = gp.wedge_incidence(v, center, width);
        let pick = match kind {
            EnvelopeKind::Upper => items.last(),
            EnvelopeKind::Lower => items.first(),
        }
        .copied()
        .unwrap_or_else(|| panic!("no in-wedge item at vertex {v}; graph not valid for width"));
        match pick.item {
            ItemRef::Edge { edge, to } => {
                edges.push(edge);
                vertices.push(to);
                v = to;
            }
            ItemRef::Ray { ray } => {
                return EnvelopePath { kind, vertices, edges, ray };
            }
        }
    }
    unreachable!("envelope did not terminate; wedge width must be below 180 degrees")
}

/// The region bounded by the lower envelope, the hull arc between the two
/// envelope endpoints, and the reversed upper envelope, as a CCW polygon.
#[derive(Debug, Clone)]
pub struct Region {
    pub polygon: Polygon2,
    /// Vertex indices along the polygon, parallel to `polygon.vertices`.
    pub boundary_vertices: Vec<usize>,
    pub degenerate: bool,
}

/// Region delimited by the two envelopes at a single wedge center.
pub fn region(gp: &AugmentedGraph, source: usize, center: Angle, width: Angle) -> Region {
    let upper = envelope(gp, source, center, width, EnvelopeKind::Upper);
    let lower = envelope(gp, source, center, width, EnvelopeKind::Lower);
    region_from_envelopes(gp, &lower, &upper)
}

/// Region bounded below by the lower envelope at `lower_center` and above
/// by the upper envelope at `upper_center` (plus the hull arc between their
/// endpoints).
pub fn region_between(
    gp: &AugmentedGraph,
    source: usize,
    lower_center: Angle,
    upper_center: Angle,
    width: Angle,
) -> Region {
    let lower = envelope(gp, source, lower_center, width, EnvelopeKind::Lower);
    let upper = envelope(gp, source, upper_center, width, EnvelopeKind::Upper);
    region_from_envelopes(gp, &lower, &upper)
}

fn region_from_envelopes(
    gp: &AugmentedGraph,
    lower: &EnvelopePath,
    upper: &EnvelopePath,
) -> Region {
    let g = gp.base();
    let hull = g.hull();
    let mut seq: Vec<usize> = lower.vertices.clone();

    // hull arc from the lower endpoint counterclockwise to the upper one
    let l_end = lower.last_vertex();
    let u_end = upper.last_vertex();
    let lpos = hull.iter().position(|&h| h == l_end).expect("envelope ends on hull");
    let upos = hull.iter().position(|&h| h == u_end).expect("envelope ends on hull");
    let mut i = lpos;
    while i != upos {
        i = (i + 1) % hull.len();
        seq.push(hull[i]);
    }

    // reversed upper envelope, source excluded
    seq.extend(upper.vertices.iter().rev().skip(1).copied());

    // collapse immediate repeats (shared envelope prefixes, equal endpoints)
    seq.dedup();
    while seq.len() > 1 && seq.first() == seq.last() {
        seq.pop();
    }

    let mut polygon = Polygon2::new(seq.iter().map(|&v| g.point(v)).collect());
    let mut boundary_vertices = seq;
    let area = polygon.signed_area();
    let diam = g.bbox_diameter();
    let degenerate = boundary_vertices.len() < 3 || area.abs() <= 1e-12 * diam * diam;
    if area < 0.0 {
        polygon.vertices.reverse();
        boundary_vertices.reverse();
    }
    Region { polygon, boundary_vertices, degenerate }
}

/// Wedge centers at which reachability can change, with midpoints of
/// consecutive pairs for sampling the stable intervals between them.
#[derive(Debug, Clone)]
pub struct CriticalAngles {
    pub angles: Vec<Angle>,
    pub midpoints: Vec<Angle>,
}

impl CriticalAngles {
    /// Criticals and midpoints merged in CCW order.
    pub fn scan_order(&self) -> Vec<Angle> {
        let mut all: Vec<Angle> =
            self.angles.iter().chain(self.midpoints.iter()).copied().collect();
        all.sort_by(|a, b| a.radians().partial_cmp(&b.radians()).unwrap());
        all
    }
}

/// Critical centers from an explicit direction set: each direction shifted
/// by plus and minus half the width, deduplicated and sorted.
pub fn critical_angles_from_directions(dirs: &[Angle], width: Angle) -> Vec<Angle> {
    let half = 0.5 * width.radians();
    let mut cands: Vec<f64> = Vec::with_capacity(2 * dirs.len());
    for d in dirs {
        cands.push(d.rotate(half).radians());
        cands.push(d.rotate(-half).radians());
    }
    cands.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut out: Vec<f64> = Vec::new();
    for c in cands {
        if out.last().is_none_or(|&p| c - p > ANGLE_EPS) {
            out.push(c);
        }
    }
    // wraparound duplicate: last within eps of first + 2π
    if out.len() > 1 {
        let first = out[0];
        let last = *out.last().unwrap();
        if (std::f64::consts::TAU - (last - first)) <= ANGLE_EPS {
            out.pop();
        }
    }
    out.into_iter().map(Angle::from_radians).collect()
}

/// Critical centers of an augmented graph: every edge direction (both
/// orientations) and every ray direction, shifted by half the width either
/// way.
pub fn critical_angles(gp: &AugmentedGraph, width: Angle) -> CriticalAngles {
    let g = gp.base();
    let mut dirs: Vec<Angle> = Vec::with_capacity(2 * g.edge_count() + gp.rays().len());
    for e in 0..g.edge_count() {
        let [u, _] = g.edge(e);
        let d = g.edge_dir(e, u);
        dirs.push(d);
        dirs.push(d.opposite());
    }
    for r in gp.rays() {
        dirs.push(r.dir);
    }
    let angles = critical_angles_from_directions(&dirs, width);
    let midpoints = if angles.len() < 2 {
        angles.iter().map(|a| a.opposite()).collect()
    } else {
        (0..angles.len())
            .map(|i| angles[i].midpoint_ccw(angles[(i + 1) % angles.len()]))
            .collect()
    };
    CriticalAngles { angles, midpoints }
}

/// A path found by the critical-angle scan, with the wedge center that
/// witnessed it.
#[derive(Debug, Clone)]
pub struct FoundPath {
    pub vertices: Vec<usize>,
    pub witness: Angle,
}

/// Paths from one source to every target, found by scanning reach sets at
/// critical centers (and midpoints) in CCW order and keeping the first hit
/// per target.
#[derive(Debug, Clone)]
pub struct SourcePaths {
    pub source: usize,
    pub width: Angle,
    pub paths: Vec<Option<FoundPath>>,
}

impl SourcePaths {
    pub fn all_found(&self) -> bool {
        self.paths.iter().all(|p| p.is_some())
    }

    pub fn missing(&self) -> Vec<usize> {
        self.paths
            .iter()
            .enumerate()
            .filter_map(|(t, p)| p.is_none().then_some(t))
            .collect()
    }
}

/// Scan critical centers from `source`, recording for every target the
/// first wedge center whose reach set contains it plus a predecessor path.
pub fn paths_from(gp: &AugmentedGraph, source: usize, width: Angle) -> SourcePaths {
    let n = gp.base().vertex_count();
    let mut paths: Vec<Option<FoundPath>> = vec![None; n];
    paths[source] = Some(FoundPath { vertices: vec![source], witness: Angle::ZERO });
    let mut remaining = n - 1;
    for beta in critical_angles(gp, width).scan_order() {
        if remaining == 0 {
            break;
        }
        let rs = reach_set(gp, source, beta, width);
        for t in rs.discovery_order() {
            if paths[*t].is_none() {
                let vertices = rs.path_to(*t).expect("reached vertices have paths");
                paths[*t] = Some(FoundPath { vertices, witness: beta });
                remaining -= 1;
            }
        }
    }
    SourcePaths { source, width, paths }
}

/// Find one wedge-monotone path of the given width from `s` to `t`;
/// `None` only if the graph violates its angle bound. `s == t` yields the
/// trivial single-vertex path.
pub fn find_path(g: &PlaneGraph, s: usize, t: usize, width: Angle) -> Option<FoundPath> {
    if s == t {
        return Some(FoundPath { vertices: vec![s], witness: Angle::ZERO });
    }
    let gp = crate::graph::augment(g, width);
    let crit = critical_angles(&gp, width);
    for beta in crit.scan_order() {
        let rs = reach_set(&gp, s, beta, width);
        if rs.is_reached(t) {
            let vertices = rs.path_to(t).expect("reached");
            return Some(FoundPath { vertices, witness: beta });
        }
    }
    None
}

/// Result of checking a vertex path for wedge monotonicity.
#[derive(Debug, Clone)]
pub struct MonotoneCheck {
    pub monotone: bool,
    /// Center of the minimal direction arc (a witness when `monotone`).
    pub witness: Option<Angle>,
    pub arc_width: Option<Angle>,
}

/// A path is monotone of the given width iff the smallest arc containing
/// its edge directions is at most that width; the arc center is a witness.
/// Consecutive path vertices must be graph edges.
pub fn verify_monotone(
    g: &PlaneGraph,
    path: &[usize],
    width: Angle,
) -> Result<MonotoneCheck, PathError> {
    let mut dirs = Vec::with_capacity(path.len().saturating_sub(1));
    for w in path.windows(2) {
        let (u, v) = (w[0], w[1]);
        if g.edge_between(u, v).is_none() {
            return Err(PathError::NotAPath { from: u, to: v });
        }
        dirs.push(geom::direction(g.point(v) - g.point(u)).expect("distinct endpoints"));
    }
    if dirs.is_empty() {
        return Ok(MonotoneCheck { monotone: true, witness: None, arc_width: None });
    }
    let (arc, center) = min_enclosing_arc(&dirs);
    Ok(MonotoneCheck {
        monotone: arc.radians() <= width.radians() + ANGLE_EPS,
        witness: Some(center),
        arc_width: Some(arc),
    })
}

/// Total path length divided by the straight-line distance between its
/// endpoints; 1 for trivial paths.
pub fn spanning_ratio(g: &PlaneGraph, path: &[usize]) -> f64 {
    if path.len() < 2 {
        return 1.0;
    }
    let len: f64 = path.windows(2).map(|w| g.point(w[0]).dist(g.point(w[1]))).sum();
    let chord = g.point(path[0]).dist(g.point(*path.last().unwrap()));
    if chord == 0.0 {
        return 1.0;
    }
    len / chord
}

/// True iff every vertex of the region (interior or boundary) is in the
/// reach set at the same wedge center. Exposed for tests and reports.
pub fn region_vertices_reached(
    gp: &AugmentedGraph,
    source: usize,
    center: Angle,
    width: Angle,
) -> bool {
    let rs = reach_set(gp, source, center, width);
    let reg = region(gp, source, center, width);
    let g = gp.base();
    let eps = g.len_eps().max(1e-12);
    (0..g.vertex_count()).all(|v| {
        let loc = point_in_polygon(g.point(v), &reg.polygon, eps);
        loc == PointLocation::Outside || rs.is_reached(v)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{augment, tests::square_with_diagonal};

    fn deg(d: f64) -> Angle {
        Angle::from_degrees(d)
    }

    fn square_aug() -> AugmentedGraph {
        augment(&square_with_diagonal(), deg(90.0))
    }

    #[test]
    fn reach_square_from_origin_covers_all() {
        let gp = square_aug();
        let rs = reach_set(&gp, 0, deg(45.0), deg(90.0));
        assert_eq!(rs.reached_count(), 4);
        // every reached vertex but the source has at least one predecessor
        for v in 1..4 {
            assert!(!rs.preds(v).is_empty());
        }
    }

    #[test]
    fn reach_equilateral_narrow_wedge() {
        let h = 3f64.sqrt() / 2.0;
        let g = PlaneGraph::new(
            vec![
                crate::geom::Point2::new(0.0, 0.0),
                crate::geom::Point2::new(1.0, 0.0),
                crate::geom::Point2::new(0.5, h),
            ],
            vec![[0, 1], [1, 2], [2, 0]],
        )
        .unwrap();
        let gp = augment(&g, deg(60.0));
        // wedge [-30°, 30°] from the origin: only the bottom edge fits
        let rs = reach_set(&gp, 0, deg(0.0), deg(60.0));
        assert!(rs.is_reached(0) && rs.is_reached(1) && !rs.is_reached(2));
        assert_eq!(rs.reached_count(), 2);
        // wedge [0°, 60°]: both incident edges lie on the closed rays
        let rs = reach_set(&gp, 0, deg(30.0), deg(60.0));
        assert_eq!(rs.reached_count(), 3);
    }

    #[test]
    fn envelopes_of_square() {
        let gp = square_aug();
        let up = envelope(&gp, 0, deg(45.0), deg(90.0), EnvelopeKind::Upper);
        assert_eq!(up.vertices, vec![0, 3]); // (0,0) -> (0,1), then a ray
        let lo = envelope(&gp, 0, deg(45.0), deg(90.0), EnvelopeKind::Lower);
        assert_eq!(lo.vertices, vec![0, 1]); // (0,0) -> (1,0), then a ray
    }

    #[test]
    fn envelope_single_inwedge_edge_shared() {
        let h = 3f64.sqrt() / 2.0;
        let g = PlaneGraph::new(
            vec![
                crate::geom::Point2::new(0.0, 0.0),
                crate::geom::Point2::new(1.0, 0.0),
                crate::geom::Point2::new(0.5, h),
            ],
            vec![[0, 1], [1, 2], [2, 0]],
        )
        .unwrap();
        let gp = augment(&g, deg(90.0));
        let up = envelope(&gp, 0, deg(0.0), deg(90.0), EnvelopeKind::Upper);
        let lo = envelope(&gp, 0, deg(0.0), deg(90.0), EnvelopeKind::Lower);
        assert_eq!(up.edges.first(), lo.edges.first());
    }

    #[test]
    fn region_of_square_is_whole_square() {
        let gp = square_aug();
        let reg = region(&gp, 0, deg(45.0), deg(90.0));
        assert!(!reg.degenerate);
        assert!(
            (reg.polygon.signed_area() - 1.0).abs() < 1e-12,
            "area {}",
            reg.polygon.signed_area()
        );
        assert!(reg.polygon.is_ccw());
    }

    #[test]
    fn region_of_triangle_from_corner() {
        let h = 3f64.sqrt() / 2.0;
        let g = PlaneGraph::new(
            vec![
                crate::geom::Point2::new(0.0, 0.0),
                crate::geom::Point2::new(1.0, 0.0),
                crate::geom::Point2::new(0.5, h),
            ],
            vec![[0, 1], [1, 2], [2, 0]],
        )
        .unwrap();
        let gp = augment(&g, deg(90.0));
        // wedge aimed at the opposite edge covers the whole triangle
        let reg = region(&gp, 0, deg(30.0), deg(90.0));
        assert!(!reg.degenerate);
        assert!((reg.polygon.signed_area() - h / 2.0).abs() < 1e-12);
    }

    #[test]
    fn region_outward_wedge_degenerate() {
        let gp = square_aug();
        // wedge pointing away from the square at the corner (0,0)
        let reg = region(&gp, 0, deg(225.0), deg(90.0));
        assert!(reg.degenerate);
    }

    #[test]
    fn criticals_from_single_direction() {
        let crit = critical_angles_from_directions(&[Angle::ZERO], deg(90.0));
        let degs: Vec<f64> = crit.iter().map(|a| a.degrees()).collect();
        assert_eq!(degs.len(), 2);
        assert!((degs[0] - 45.0).abs() < 1e-9);
        assert!((degs[1] - 315.0).abs() < 1e-9);

        let crit = critical_angles_from_directions(&[Angle::ZERO], deg(60.0));
        let degs: Vec<f64> = crit.iter().map(|a| a.degrees()).collect();
        assert!((degs[0] - 30.0).abs() < 1e-9);
        assert!((degs[1] - 330.0).abs() < 1e-9);
    }

    #[test]
    fn criticals_of_square_are_multiples_of_45() {
        let gp = square_aug();
        let crit = critical_angles(&gp, deg(90.0));
        // edge directions cover all multiples of 45°, rays land on the same
        // grid, so criticals are exactly the eight multiples of 45°
        assert_eq!(crit.angles.len(), 8);
        for (i, a) in crit.angles.iter().enumerate() {
            assert!((a.degrees() - 45.0 * i as f64).abs() < 1e-9, "{}", a.degrees());
        }
    }

    #[test]
    fn find_path_square_corner_to_corner() {
        let g = square_with_diagonal();
        let fp = find_path(&g, 1, 3, deg(90.0)).expect("path exists");
        assert!(fp.vertices == vec![1, 2, 3] || fp.vertices == vec![1, 0, 3]);
        let chk = verify_monotone(&g, &fp.vertices, deg(90.0)).unwrap();
        assert!(chk.monotone);
        assert!((chk.arc_width.unwrap().degrees() - 90.0).abs() < 1e-9);
    }

    #[test]
    fn find_path_trivial_and_all_pairs() {
        let g = square_with_diagonal();
        let fp = find_path(&g, 2, 2, deg(90.0)).unwrap();
        assert_eq!(fp.vertices, vec![2]);
        let gp = augment(&g, deg(90.0));
        for s in 0..4 {
            let sp = paths_from(&gp, s, deg(90.0));
            assert!(sp.all_found(), "missing from {s}: {:?}", sp.missing());
            for p in sp.paths.iter().flatten() {
                assert!(verify_monotone(&g, &p.vertices, deg(90.0)).unwrap().monotone);
            }
        }
    }

    #[test]
    fn verify_monotone_cases() {
        let g = square_with_diagonal();
        // single edge
        let chk = verify_monotone(&g, &[0, 1], deg(90.0)).unwrap();
        assert!(chk.monotone);
        assert!(chk.witness.unwrap().approx_eq(Angle::ZERO, ANGLE_EPS));
        // right-angle pair: exactly at width 90°
        let chk = verify_monotone(&g, &[1, 2, 3], deg(90.0)).unwrap();
        assert!(chk.monotone);
        assert!(chk.witness.unwrap().approx_eq(deg(135.0), ANGLE_EPS));
        // not a path
        assert_eq!(
            verify_monotone(&g, &[1, 3], deg(90.0)).unwrap_err(),
            PathError::NotAPath { from: 1, to: 3 }
        );
    }

    #[test]
    fn verify_monotone_rejects_just_over_width() {
        let g = PlaneGraph::new(
            vec![
                crate::geom::Point2::new(0.0, 0.0),
                crate::geom::Point2::new(1.0, 0.0),
                crate::geom::Point2::new(1.0 - 1e-5, 1.0),
            ],
            vec![[0, 1], [1, 2], [2, 0]],
        )
        .unwrap();
        // directions: 0°, then slightly more than 90°
        let chk = verify_monotone(&g, &[0, 1, 2], deg(90.0)).unwrap();
        assert!(!chk.monotone);
    }

    #[test]
    fn spanning_ratio_straight_and_right_angle() {
        let g = square_with_diagonal();
        assert!((spanning_ratio(&g, &[0, 1]) - 1.0).abs() < 1e-12);
        let r = spanning_ratio(&g, &[0, 1, 2]);
        assert!((r - 2.0 / 2f64.sqrt()).abs() < 1e-12);
        // bound for width 90°
        assert!(r <= 1.0 / (45f64.to_radians().cos()) + 1e-9);
        assert!((spanning_ratio(&g, &[0]) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn region_vertices_are_reached_square() {
        let gp = square_aug();
        for k in 0..16 {
            let beta = deg(22.5 * k as f64);
            assert!(region_vertices_reached(&gp, 0, beta, deg(90.0)), "beta {}", beta.degrees());
        }
    }
}
