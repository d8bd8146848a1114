//! Convex caps and their edge unfolding: triangulated height fields with
//! bounded face-normal tilt, the projection angle-distortion bound, lifting
//! of planar spanning forests to cut forests, hinge development of the cut
//! surface into the plane, and the overlap / radial-monotonicity checks on
//! the result.

use std::collections::{HashMap, HashSet, VecDeque};
use std::f64::consts::{FRAC_PI_2, PI};

use thiserror::Error;

use crate::geom::{
    self, angle_between_3d, upward_normal, Angle, Point2, Point3, Vec2, Vec3, ANGLE_EPS,
    LENGTH_EPS_REL,
};
use crate::graph::PlaneGraph;
use crate::spanning::SpanningForest;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CapError {
    #[error("projection is undefined for tilts of 90° or more")]
    ProjectionUndefined,
    #[error("bad mesh: {0}")]
    BadMesh(String),
    #[error("projection is not non-obtuse: {0}")]
    ObtuseProjection(String),
    #[error("forest edge ({from}, {to}) is not a mesh edge")]
    LiftMismatch { from: usize, to: usize },
    #[error("cut edges disconnect the surface")]
    CutsDisconnectSurface,
    #[error("development inconsistent: {0}")]
    DevelopmentInconsistent(String),
    #[error("cap generation failed: {0}")]
    GenerationFailed(String),
}

/// A triangulated convex cap: a height field of triangles whose upward
/// normals tilt at most `max_tilt` from vertical, with a single boundary
/// cycle. Triangles are oriented counterclockwise as seen from above.
#[derive(Debug, Clone)]
pub struct ConvexCap {
    vertices: Vec<Point3>,
    triangles: Vec<[usize; 3]>,
    edges: Vec<[usize; 2]>,
    edge_faces: Vec<(usize, Option<usize>)>,
    boundary: Vec<usize>,
    max_tilt: Angle,
}

impl ConvexCap {
    pub fn from_parts(
        vertices: Vec<Point3>,
        triangles: Vec<[usize; 3]>,
    ) -> Result<Self, CapError> {
        let n = vertices.len();
        if n < 3 || triangles.is_empty() {
            return Err(CapError::BadMesh("need at least one triangle".into()));
        }
        for p in &vertices {
            if !(p.x.is_finite() && p.y.is_finite() && p.z.is_finite()) {
                return Err(CapError::BadMesh("non-finite vertex".into()));
            }
        }
        let mut triangles = triangles;
        let mut max_tilt: f64 = 0.0;
        for (f, t) in triangles.iter_mut().enumerate() {
            if t.iter().any(|&v| v >= n) {
                return Err(CapError::BadMesh(format!("triangle {f} index out of range")));
            }
            if t[0] == t[1] || t[1] == t[2] || t[0] == t[2] {
                return Err(CapError::BadMesh(format!("triangle {f} repeats a vertex")));
            }
            let (a, b, c) = (vertices[t[0]], vertices[t[1]], vertices[t[2]]);
            // orient CCW in projection
            let area2 = (b.xy() - a.xy()).cross(c.xy() - a.xy());
            if area2 == 0.0 {
                return Err(CapError::BadMesh(format!("triangle {f} projects degenerately")));
            }
            if area2 < 0.0 {
                t.swap(1, 2);
            }
            let (a, b, c) = (vertices[t[0]], vertices[t[1]], vertices[t[2]]);
            let normal = upward_normal(a, b, c);
            let tilt = angle_between_3d(normal, Vec3::new(0.0, 0.0, 1.0));
            max_tilt = max_tilt.max(tilt);
        }
        if max_tilt >= FRAC_PI_2 - ANGLE_EPS {
            return Err(CapError::BadMesh(format!(
                "face normal tilts {:.4}°, at or beyond 90°",
                max_tilt.to_degrees()
            )));
        }

        let mut edge_ids: HashMap<(usize, usize), usize> = HashMap::new();
        let mut edges: Vec<[usize; 2]> = Vec::new();
        let mut edge_faces: Vec<(usize, Option<usize>)> = Vec::new();
        for (f, t) in triangles.iter().enumerate() {
            for k in 0..3 {
                let (u, v) = (t[k], t[(k + 1) % 3]);
                let key = (u.min(v), u.max(v));
                match edge_ids.get(&key) {
                    None => {
                        edge_ids.insert(key, edges.len());
                        edges.push([key.0, key.1]);
                        edge_faces.push((f, None));
                    }
                    Some(&e) => {
                        if edge_faces[e].1.is_some() {
                            return Err(CapError::BadMesh(format!(
                                "edge ({u}, {v}) borders more than two triangles"
                            )));
                        }
                        edge_faces[e].1 = Some(f);
                    }
                }
            }
        }

        // boundary = edges with one face, chained into a single cycle
        let mut bnd_adj: HashMap<usize, Vec<usize>> = HashMap::new();
        let mut bnd_count = 0usize;
        for (e, &[u, v]) in edges.iter().enumerate() {
            if edge_faces[e].1.is_none() {
                bnd_adj.entry(u).or_default().push(v);
                bnd_adj.entry(v).or_default().push(u);
                bnd_count += 1;
            }
        }
        if bnd_count < 3 {
            return Err(CapError::BadMesh("no boundary cycle".into()));
        }
        for (v, nbrs) in &bnd_adj {
            if nbrs.len() != 2 {
                return Err(CapError::BadMesh(format!(
                    "boundary vertex {v} has {} boundary edges",
                    nbrs.len()
                )));
            }
        }
        let start = *bnd_adj.keys().min().unwrap();
        let mut boundary = vec![start];
        let mut prev = start;
        let mut cur = bnd_adj[&start][0];
        while cur != start {
            boundary.push(cur);
            let nbrs = &bnd_adj[&cur];
            let next = if nbrs[0] == prev { nbrs[1] } else { nbrs[0] };
            prev = cur;
            cur = next;
            if boundary.len() > bnd_count {
                return Err(CapError::BadMesh("boundary is not a single cycle".into()));
            }
        }
        if boundary.len() != bnd_count {
            return Err(CapError::BadMesh("boundary is not a single cycle".into()));
        }
        // orient the boundary CCW in projection
        let poly =
            geom::Polygon2::new(boundary.iter().map(|&v| vertices[v].xy()).collect());
        if poly.signed_area() < 0.0 {
            boundary.reverse();
        }

        Ok(ConvexCap {
            vertices,
            triangles,
            edges,
            edge_faces,
            boundary,
            max_tilt: Angle::from_radians(max_tilt),
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex(&self, v: usize) -> Point3 {
        self.vertices[v]
    }

    pub fn vertices(&self) -> &[Point3] {
        &self.vertices
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    /// The one or two faces bordering edge `e`.
    pub fn edge_faces(&self, e: usize) -> (usize, Option<usize>) {
        self.edge_faces[e]
    }

    pub fn boundary(&self) -> &[usize] {
        &self.boundary
    }

    pub fn is_boundary_vertex(&self, v: usize) -> bool {
        self.boundary.contains(&v)
    }

    /// Largest angle between a face normal and the vertical.
    pub fn max_tilt(&self) -> Angle {
        self.max_tilt
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        let key = [u.min(v), u.max(v)];
        self.edges.iter().position(|e| *e == key)
    }

    /// Largest corner angle over all faces (measured in 3D).
    pub fn max_face_angle(&self) -> Angle {
        let mut best: f64 = 0.0;
        for t in &self.triangles {
            for k in 0..3 {
                best = best.max(self.corner_angle_3d(t, k));
            }
        }
        Angle::from_radians(best)
    }

    fn corner_angle_3d(&self, t: &[usize; 3], k: usize) -> f64 {
        let p = self.vertices[t[k]];
        let q = self.vertices[t[(k + 1) % 3]];
        let r = self.vertices[t[(k + 2) % 3]];
        angle_between_3d(q - p, r - p)
    }

    fn bbox_diameter_3d(&self) -> f64 {
        let xy = geom::bbox_diameter(&self.vertices.iter().map(|p| p.xy()).collect::<Vec<_>>());
        let (zmin, zmax) = self
            .vertices
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), p| (lo.min(p.z), hi.max(p.z)));
        (xy * xy + (zmax - zmin) * (zmax - zmin)).sqrt()
    }
}

/// Geometric validity report for a convex cap.
#[derive(Debug, Clone)]
pub struct CapReport {
    pub violations: Vec<String>,
    pub max_face_angle: Angle,
    pub max_tilt: Angle,
    pub strictly_acute: bool,
}

impl CapReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check the cap invariants: injective crossing-free vertical projection,
/// convex dihedrals along interior edges, and (optionally) strictly acute
/// face angles. Reports the largest face angle and normal tilt either way.
pub fn validate_cap(c: &ConvexCap, require_acute: bool) -> CapReport {
    let mut violations = Vec::new();
    let diam = c.bbox_diameter_3d();
    let len_eps = LENGTH_EPS_REL * diam;

    // injective projection on vertices
    for i in 0..c.vertices.len() {
        for j in i + 1..c.vertices.len() {
            if c.vertices[i].xy().dist(c.vertices[j].xy()) <= len_eps {
                violations.push(format!("vertices {i} and {j} project together"));
            }
        }
    }
    // crossing-free projected edges
    let eps_area = len_eps * diam;
    for e in 0..c.edges.len() {
        for f in e + 1..c.edges.len() {
            let [a, b] = c.edges[e];
            let [p, q] = c.edges[f];
            if a == p || a == q || b == p || b == q {
                continue;
            }
            if geom::segments_intersect(
                c.vertices[a].xy(),
                c.vertices[b].xy(),
                c.vertices[p].xy(),
                c.vertices[q].xy(),
                eps_area,
            ) {
                violations.push(format!("projected edges {e} and {f} cross"));
            }
        }
    }
    // convex dihedrals: the far vertex of the second face lies on or below
    // the first face's plane
    for (e, &[u, v]) in c.edges.iter().enumerate() {
        let (f1, Some(f2)) = c.edge_faces[e] else { continue };
        let t1 = c.triangles[f1];
        let n1 = upward_normal(c.vertices[t1[0]], c.vertices[t1[1]], c.vertices[t1[2]]);
        let far = c.triangles[f2].iter().copied().find(|&w| w != u && w != v).unwrap();
        let above = (c.vertices[far] - c.vertices[u]).dot(n1);
        if above > len_eps {
            violations.push(format!(
                "dihedral along edge ({u}, {v}) is reflex by {above:.3e}"
            ));
        }
    }
    // tilt bound
    if c.max_tilt.radians() >= FRAC_PI_2 {
        violations.push(format!("max tilt {:.4}° at or beyond 90°", c.max_tilt.degrees()));
    }
    // face angles
    let mut max_angle: f64 = 0.0;
    for (f, t) in c.triangles.iter().enumerate() {
        for k in 0..3 {
            let ang = c.corner_angle_3d(t, k);
            max_angle = max_angle.max(ang);
            if require_acute && ang >= FRAC_PI_2 - ANGLE_EPS {
                violations.push(format!(
                    "face {f} has angle {:.4}° at vertex {}, not strictly acute",
                    ang.to_degrees(),
                    t[k]
                ));
            }
        }
    }
    CapReport {
        violations,
        max_face_angle: Angle::from_radians(max_angle),
        max_tilt: c.max_tilt,
        strictly_acute: max_angle < FRAC_PI_2 - ANGLE_EPS,
    }
}

// ---------------------------------------------------------------------------
// Projection angle distortion

/// Result of the distortion maximization, with the optimizer's error bound.
#[derive(Debug, Clone, Copy)]
pub struct Distortion {
    pub value: Angle,
    pub error_bound: f64,
}

/// Signed direction distortion of a single ray drawn on a plane whose
/// normal tilts `phi` from vertical: the ray at in-plane angle `theta`
/// projects to the xy-plane at `atan2(sin θ, cos θ · cos φ)`.
fn ray_distortion(theta: f64, cos_phi: f64) -> f64 {
    let projected = theta.sin().atan2(theta.cos() * cos_phi);
    let mut d = projected - theta;
    while d > PI {
        d -= 2.0 * PI;
    }
    while d < -PI {
        d += 2.0 * PI;
    }
    d
}

/// Largest change any face angle can suffer under vertical projection when
/// the face normal tilts `tilt` from vertical.
///
/// An angle is a pair of ray directions on the tilted plane and its
/// distortion is the difference of the two rays' individual direction
/// distortions, so the maximum over angle pairs is the spread of the
/// single-ray distortion: the grid samples ray directions at 0.1° and each
/// extremum is refined by ternary search well below 1e-6 rad.
pub fn max_angle_distortion(tilt: Angle) -> Result<Angle, CapError> {
    max_angle_distortion_detailed(tilt).map(|d| d.value)
}

pub fn max_angle_distortion_detailed(tilt: Angle) -> Result<Distortion, CapError> {
    let phi = tilt.radians();
    if phi >= FRAC_PI_2 {
        return Err(CapError::ProjectionUndefined);
    }
    if phi == 0.0 {
        return Ok(Distortion { value: Angle::ZERO, error_bound: 0.0 });
    }
    let cos_phi = phi.cos();
    // ray distortion has period π; grid one period at 0.1°
    let step = 0.1f64.to_radians();
    let steps = (PI / step).ceil() as usize;
    let mut best_max = (f64::NEG_INFINITY, 0.0);
    let mut best_min = (f64::INFINITY, 0.0);
    for k in 0..steps {
        let theta = k as f64 * step;
        let d = ray_distortion(theta, cos_phi);
        if d > best_max.0 {
            best_max = (d, theta);
        }
        if d < best_min.0 {
            best_min = (d, theta);
        }
    }
    let refine = |theta0: f64, sign: f64| -> (f64, f64) {
        let mut lo = theta0 - step;
        let mut hi = theta0 + step;
        for _ in 0..100 {
            let m1 = lo + (hi - lo) / 3.0;
            let m2 = hi - (hi - lo) / 3.0;
            if sign * ray_distortion(m1, cos_phi) < sign * ray_distortion(m2, cos_phi) {
                lo = m1;
            } else {
                hi = m2;
            }
        }
        (sign * ray_distortion(0.5 * (lo + hi), cos_phi), hi - lo)
    };
    let (dmax, wmax) = refine(best_max.1, 1.0);
    let (dmin, wmin) = refine(best_min.1, -1.0);
    let value = dmax + dmin; // dmin is the negated minimum
    // the extrema are smooth, so the argument bracket width bounds the
    // value error up to curvature; widen generously
    let error_bound = (wmax + wmin).max(1e-12);
    Ok(Distortion { value: Angle::from_radians(value.max(0.0)), error_bound })
}

// ---------------------------------------------------------------------------
// Projection

/// Result of projecting a cap to the plane.
#[derive(Debug, Clone)]
pub struct Projection {
    pub graph: PlaneGraph,
    /// Largest 3D face angle.
    pub alpha_max: Angle,
    /// Distortion bound at the cap's tilt.
    pub delta: Angle,
    /// Whether `alpha_max + delta < 90°` certifies non-obtuseness a priori.
    pub guaranteed: bool,
}

/// Drop z-coordinates. The projected graph must validate as a non-obtuse
/// triangulation; when the sufficient condition `alpha_max + delta < 90°`
/// fails but the projection is non-obtuse anyway, `guaranteed` is false.
pub fn project(c: &ConvexCap) -> Result<Projection, CapError> {
    let points: Vec<Point2> = c.vertices.iter().map(|p| p.xy()).collect();
    let graph = PlaneGraph::new(points, c.edges.clone())
        .map_err(|e| CapError::BadMesh(format!("projection is not a plane graph: {e}")))?;
    let report = graph.validate(Angle::from_degrees(90.0));
    if !report.is_valid() {
        return Err(CapError::ObtuseProjection(report.to_string()));
    }
    let alpha_max = c.max_face_angle();
    let delta = max_angle_distortion(c.max_tilt)?;
    let guaranteed = alpha_max.radians() + delta.radians() < FRAC_PI_2;
    Ok(Projection { graph, alpha_max, delta, guaranteed })
}

// ---------------------------------------------------------------------------
// Lifting the planar forest onto the cap

/// Turn angles at one interior vertex of a lifted path, measured
/// intrinsically on the surface. `sum_left`/`sum_right` are the fans of 3D
/// face angles on either side of the path at the vertex; the development
/// of a side turns by `π - sum` there.
#[derive(Debug, Clone, Copy)]
pub struct TurnRecord {
    pub vertex: usize,
    pub from: usize,
    pub to: usize,
    pub sum_left: f64,
    pub sum_right: f64,
}

impl TurnRecord {
    /// Largest development turn magnitude over the two sides, radians.
    pub fn turn(&self) -> f64 {
        (PI - self.sum_left).abs().max((PI - self.sum_right).abs())
    }
}

/// A planar spanning forest lifted edge-for-edge onto the cap.
#[derive(Debug, Clone)]
pub struct CutForest3D {
    pub forest: SpanningForest,
    /// Cut edges as mesh edge ids.
    pub cut_edges: Vec<usize>,
    pub turns: Vec<TurnRecord>,
    /// Vertices where some path turn exceeds 90°.
    pub flagged: Vec<usize>,
}

/// Lift a planar forest onto the cap by vertex index (the projection is
/// index-preserving) and measure every path turn angle intrinsically.
pub fn lift_forest(forest: &SpanningForest, c: &ConvexCap) -> Result<CutForest3D, CapError> {
    let mut cut_edges = Vec::new();
    for (child, parent, _) in forest.tree_edges() {
        let e = c
            .edge_id(child, parent)
            .ok_or(CapError::LiftMismatch { from: child, to: parent })?;
        cut_edges.push(e);
    }
    cut_edges.sort_unstable();
    cut_edges.dedup();

    let fans = VertexFans::build(c);
    let mut turns = Vec::new();
    let mut flagged = Vec::new();
    for v in 0..c.vertex_count() {
        let Some((parent, _)) = forest.parent(v) else { continue };
        // v -> parent is a path step; every tree child of v continues a path
        for (child, p, _) in forest.tree_edges() {
            if p != v {
                continue;
            }
            let rec = fans.turn_record(c, child, v, parent);
            if rec.turn() > FRAC_PI_2 + ANGLE_EPS {
                flagged.push(v);
            }
            turns.push(rec);
        }
    }
    flagged.sort_unstable();
    flagged.dedup();
    Ok(CutForest3D { forest: forest.clone(), cut_edges, turns, flagged })
}

/// Per-vertex fans: incident neighbors in CCW (projected) order with the 3D
/// corner angle of the face between consecutive neighbors.
struct VertexFans {
    /// For each vertex: (neighbor, 3D angle of the face between this
    /// neighbor and the next CCW one; 0 for the boundary gap).
    fans: Vec<Vec<(usize, f64)>>,
}

impl VertexFans {
    fn build(c: &ConvexCap) -> Self {
        let n = c.vertex_count();
        // neighbors sorted CCW by projected direction
        let mut nbrs: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &[u, v] in c.edges() {
            nbrs[u].push(v);
            nbrs[v].push(u);
        }
        for (v, list) in nbrs.iter_mut().enumerate() {
            let p = c.vertex(v).xy();
            list.sort_by(|&a, &b| {
                let da = geom::direction(c.vertex(a).xy() - p).unwrap().radians();
                let db = geom::direction(c.vertex(b).xy() - p).unwrap().radians();
                da.partial_cmp(&db).unwrap()
            });
        }
        // corner angle between consecutive neighbors when a face spans them
        let mut corner: HashMap<(usize, usize, usize), f64> = HashMap::new();
        for t in c.triangles() {
            for k in 0..3 {
                let v = t[k];
                let a = t[(k + 1) % 3];
                let b = t[(k + 2) % 3];
                let ang = angle_between_3d(c.vertex(a) - c.vertex(v), c.vertex(b) - c.vertex(v));
                corner.insert((v, a.min(b), a.max(b)), ang);
            }
        }
        let fans = nbrs
            .into_iter()
            .enumerate()
            .map(|(v, list)| {
                let d = list.len();
                (0..d)
                    .map(|i| {
                        let a = list[i];
                        let b = list[(i + 1) % d];
                        let ang =
                            corner.get(&(v, a.min(b), a.max(b))).copied().unwrap_or(0.0);
                        (a, ang)
                    })
                    .collect()
            })
            .collect();
        VertexFans { fans }
    }

    /// Sum of 3D face angles at `v` sweeping CCW from the edge toward
    /// `from_nbr` to the edge toward `to_nbr` (both distinct).
    fn sweep_ccw(&self, v: usize, from_nbr: usize, to_nbr: usize) -> f64 {
        let fan = &self.fans[v];
        let d = fan.len();
        let start = fan.iter().position(|&(n, _)| n == from_nbr).expect("neighbor in fan");
        let mut sum = 0.0;
        let mut i = start;
        while fan[i].0 != to_nbr || i == start {
            sum += fan[i].1;
            i = (i + 1) % d;
            if i == start {
                break;
            }
        }
        sum
    }

    /// Turn record for the path step `from -> v -> to`.
    fn turn_record(&self, _c: &ConvexCap, from: usize, v: usize, to: usize) -> TurnRecord {
        // walking from `from` through `v` to `to`: the left side is swept
        // CCW from the outgoing edge back to the incoming one
        let sum_left = self.sweep_ccw(v, to, from);
        let sum_right = self.sweep_ccw(v, from, to);
        TurnRecord { vertex: v, from, to, sum_left, sum_right }
    }
}

// ---------------------------------------------------------------------------
// Unfolding

/// Development of one leaf-to-root cut path: the polyline unrolled into
/// the plane using the intrinsic side angle sums.
#[derive(Debug, Clone)]
pub struct DevPath {
    pub vertices: Vec<usize>,
    pub left: Vec<Point2>,
    pub right: Vec<Point2>,
}

/// A planar development of the cap with the cut forest opened: per-face
/// rigid placements, the images of cut edges, and developed cut paths.
#[derive(Debug, Clone)]
pub struct UnfoldedLayout {
    pub face_pose: Vec<[Point2; 3]>,
    pub root_face: usize,
    /// Both placed images of every cut edge.
    pub cut_segments: Vec<(Point2, Point2)>,
    /// Placed position of the source vertex in the root face.
    pub source_image: Point2,
    pub dev_paths: Vec<DevPath>,
}

impl UnfoldedLayout {
    pub fn bbox_diameter(&self) -> f64 {
        let pts: Vec<Point2> = self.face_pose.iter().flatten().copied().collect();
        geom::bbox_diameter(&pts)
    }
}

/// Unfold with the default root face: the lowest-index face incident to
/// the forest's source vertex.
pub fn unfold(c: &ConvexCap, cuts: &CutForest3D) -> Result<UnfoldedLayout, CapError> {
    let s = cuts.forest.source;
    let root = c
        .triangles()
        .iter()
        .position(|t| t.contains(&s))
        .ok_or_else(|| CapError::BadMesh(format!("source vertex {s} is in no face")))?;
    unfold_with_root(c, cuts, root)
}

/// Hinge-develop the cap into the plane across the dual spanning tree of
/// the uncut interior edges, breadth-first from `root_face`. Every uncut
/// interior edge not on the dual tree must develop consistently; with all
/// interior vertices cut this holds up to floating-point error.
pub fn unfold_with_root(
    c: &ConvexCap,
    cuts: &CutForest3D,
    root_face: usize,
) -> Result<UnfoldedLayout, CapError> {
    let nf = c.triangles().len();
    if root_face >= nf {
        return Err(CapError::BadMesh(format!("root face {root_face} out of range")));
    }
    let cut: HashSet<usize> = cuts.cut_edges.iter().copied().collect();

    // dual adjacency across uncut interior edges
    let mut dual: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nf]; // (face, via edge)
    for (e, &(f1, f2)) in c.edge_faces.iter().enumerate() {
        let Some(f2) = f2 else { continue };
        if cut.contains(&e) {
            continue;
        }
        dual[f1].push((f2, e));
        dual[f2].push((f1, e));
    }

    let mut pose: Vec<Option<[Point2; 3]>> = vec![None; nf];
    pose[root_face] = Some(place_root(c, root_face));
    let mut bfs_tree_edge: Vec<bool> = vec![false; c.edges().len()];
    let mut queue = VecDeque::new();
    queue.push_back(root_face);
    while let Some(f) = queue.pop_front() {
        for &(g, e) in &dual[f] {
            if pose[g].is_some() {
                continue;
            }
            pose[g] = Some(place_across(c, &pose[f].unwrap(), f, g, e));
            bfs_tree_edge[e] = true;
            queue.push_back(g);
        }
    }
    if pose.iter().any(|p| p.is_none()) {
        return Err(CapError::CutsDisconnectSurface);
    }
    let pose: Vec<[Point2; 3]> = pose.into_iter().map(|p| p.unwrap()).collect();

    // consistency across every uncut interior edge outside the BFS tree
    let tol = (LENGTH_EPS_REL * c.bbox_diameter_3d()).max(1e-12);
    for (e, &(f1, f2)) in c.edge_faces.iter().enumerate() {
        let Some(f2) = f2 else { continue };
        if cut.contains(&e) || bfs_tree_edge[e] {
            continue;
        }
        let [u, v] = c.edges()[e];
        let pu1 = placed_vertex(c, &pose[f1], f1, u);
        let pu2 = placed_vertex(c, &pose[f2], f2, u);
        let pv1 = placed_vertex(c, &pose[f1], f1, v);
        let pv2 = placed_vertex(c, &pose[f2], f2, v);
        if pu1.dist(pu2) > tol || pv1.dist(pv2) > tol {
            return Err(CapError::DevelopmentInconsistent(format!(
                "edge ({u}, {v}) images differ by {:.3e} / {:.3e}",
                pu1.dist(pu2),
                pv1.dist(pv2)
            )));
        }
    }

    let mut cut_segments = Vec::new();
    for &e in &cuts.cut_edges {
        let [u, v] = c.edges()[e];
        let (f1, f2) = c.edge_faces[e];
        cut_segments.push((
            placed_vertex(c, &pose[f1], f1, u),
            placed_vertex(c, &pose[f1], f1, v),
        ));
        if let Some(f2) = f2 {
            cut_segments.push((
                placed_vertex(c, &pose[f2], f2, u),
                placed_vertex(c, &pose[f2], f2, v),
            ));
        }
    }

    let s = cuts.forest.source;
    let source_image = placed_vertex(c, &pose[root_face], root_face, s);

    let dev_paths = develop_cut_paths(c, cuts);

    Ok(UnfoldedLayout { face_pose: pose, root_face, cut_segments, source_image, dev_paths })
}

fn place_root(c: &ConvexCap, f: usize) -> [Point2; 3] {
    let t = c.triangles()[f];
    let (a3, b3, c3) = (c.vertex(t[0]), c.vertex(t[1]), c.vertex(t[2]));
    // seed near the projection: vertex 0 at its projected position, edge
    // 0->1 along its projected direction, true 3D lengths
    let a = a3.xy();
    let dir = geom::direction(b3.xy() - a).expect("injective projection").unit_vec();
    let b = a + dir.scaled(a3.dist(b3));
    let cpt = third_point(a, b, a3.dist(c3), b3.dist(c3), 1.0);
    [a, b, cpt]
}

/// Place the third vertex of a triangle given two placed vertices, the two
/// remaining 3D edge lengths, and the side sign (+1 = left of a->b).
fn third_point(a: Point2, b: Point2, da: f64, db: f64, sign: f64) -> Point2 {
    let ab = b - a;
    let len = ab.norm();
    let x = (da * da - db * db + len * len) / (2.0 * len);
    let y2 = (da * da - x * x).max(0.0);
    let y = y2.sqrt();
    let u = ab.scaled(1.0 / len);
    let nrm = u.perp();
    a + u.scaled(x) + nrm.scaled(sign * y)
}

fn placed_vertex(c: &ConvexCap, pose: &[Point2; 3], f: usize, v: usize) -> Point2 {
    let t = c.triangles()[f];
    let k = t.iter().position(|&w| w == v).expect("vertex in face");
    pose[k]
}

fn place_across(
    c: &ConvexCap,
    pose_f: &[Point2; 3],
    f: usize,
    g: usize,
    e: usize,
) -> [Point2; 3] {
    let [u, v] = c.edges()[e];
    let pu = placed_vertex(c, pose_f, f, u);
    let pv = placed_vertex(c, pose_f, f, v);
    let tg = c.triangles()[g];
    let w = tg.iter().copied().find(|&x| x != u && x != v).expect("third vertex");
    // f's far vertex sits on one side; g goes on the other
    let tf = c.triangles()[f];
    let wf = tf.iter().copied().find(|&x| x != u && x != v).expect("third vertex");
    let pwf = placed_vertex(c, pose_f, f, wf);
    let side_f = (pv - pu).cross(pwf - pu);
    let sign = if side_f > 0.0 { -1.0 } else { 1.0 };
    let pw = third_point(
        pu,
        pv,
        c.vertex(u).dist(c.vertex(w)),
        c.vertex(v).dist(c.vertex(w)),
        sign,
    );
    let mut out = [Point2::new(0.0, 0.0); 3];
    for (k, &x) in tg.iter().enumerate() {
        out[k] = if x == u {
            pu
        } else if x == v {
            pv
        } else {
            pw
        };
    }
    out
}

/// Develop every leaf-to-root path of the cut forest into the plane on
/// both sides, using the intrinsic angle sums at each interior vertex.
/// Developments start at the leaf's projected position heading along the
/// first edge's projected direction.
pub fn develop_cut_paths(c: &ConvexCap, cuts: &CutForest3D) -> Vec<DevPath> {
    let forest = &cuts.forest;
    let fans = VertexFans::build(c);
    let n = c.vertex_count();
    let mut has_child = vec![false; n];
    for (_, p, _) in forest.tree_edges() {
        has_child[p] = true;
    }
    let mut out = Vec::new();
    let mut leaves: Vec<usize> = (0..n)
        .filter(|&v| forest.quadrant(v).is_some() && !has_child[v] && forest.parent(v).is_some())
        .collect();
    leaves.sort_unstable();
    for leaf in leaves {
        let Some(path) = forest.path_to_root(leaf) else { continue };
        if path.len() < 2 {
            continue;
        }
        let lengths: Vec<f64> =
            path.windows(2).map(|w| c.vertex(w[0]).dist(c.vertex(w[1]))).collect();
        let start = c.vertex(path[0]).xy();
        let head0 = geom::direction(c.vertex(path[1]).xy() - start).unwrap().radians();
        let develop = |left: bool| -> Vec<Point2> {
            let mut pts = vec![start];
            let mut heading = head0;
            let mut cur = start;
            for i in 0..lengths.len() {
                cur = cur + Vec2::new(heading.cos(), heading.sin()).scaled(lengths[i]);
                pts.push(cur);
                if i + 1 < lengths.len() {
                    let (prev, v, next) = (path[i], path[i + 1], path[i + 2]);
                    let rec = fans.turn_record(c, prev, v, next);
                    if left {
                        heading += PI - rec.sum_left;
                    } else {
                        heading -= PI - rec.sum_right;
                    }
                }
            }
            pts
        };
        let (left, right) = (develop(true), develop(false));
        out.push(DevPath { vertices: path, left, right });
    }
    out
}

// ---------------------------------------------------------------------------
// Overlap and radial monotonicity

/// Pairs of faces whose placed interiors overlap by more than the length
/// tolerance. Faces touching along shared placed edges or vertices are not
/// overlaps.
pub fn overlap_check(layout: &UnfoldedLayout) -> Vec<(usize, usize)> {
    let eps = (LENGTH_EPS_REL * layout.bbox_diameter()).max(1e-12);
    overlap_check_eps(layout, eps)
}

pub fn overlap_check_eps(layout: &UnfoldedLayout, eps: f64) -> Vec<(usize, usize)> {
    let nf = layout.face_pose.len();
    let boxes: Vec<(Point2, Point2)> = layout
        .face_pose
        .iter()
        .map(|t| geom::bbox(t).expect("triangle"))
        .collect();
    let mut out = Vec::new();
    for i in 0..nf {
        for j in i + 1..nf {
            let (alo, ahi) = boxes[i];
            let (blo, bhi) = boxes[j];
            if ahi.x < blo.x - eps
                || bhi.x < alo.x - eps
                || ahi.y < blo.y - eps
                || bhi.y < alo.y - eps
            {
                continue;
            }
            if triangles_overlap_sat(&layout.face_pose[i], &layout.face_pose[j], eps) {
                out.push((i, j));
            }
        }
    }
    out
}

/// Separating-axis test: true iff the triangle interiors penetrate deeper
/// than `eps` along every candidate axis.
fn triangles_overlap_sat(t1: &[Point2; 3], t2: &[Point2; 3], eps: f64) -> bool {
    let axes = |t: &[Point2; 3]| {
        [(t[1] - t[0]).perp(), (t[2] - t[1]).perp(), (t[0] - t[2]).perp()]
    };
    for axis in axes(t1).into_iter().chain(axes(t2)) {
        let n = axis.norm();
        if n == 0.0 {
            continue;
        }
        let a = axis.scaled(1.0 / n);
        let proj = |t: &[Point2; 3]| {
            let vals = t.map(|p| (p - Point2::new(0.0, 0.0)).dot(a));
            (vals.iter().copied().fold(f64::INFINITY, f64::min),
             vals.iter().copied().fold(f64::NEG_INFINITY, f64::max))
        };
        let (min1, max1) = proj(t1);
        let (min2, max2) = proj(t2);
        if max1 <= min2 + eps || max2 <= min1 + eps {
            return false;
        }
    }
    true
}

/// True iff for every point of the polyline, distances to all later points
/// are nondecreasing (within a tolerance scaled to the polyline).
pub fn radial_monotone_check(polyline: &[Point2]) -> bool {
    let eps = (LENGTH_EPS_REL * geom::bbox_diameter(polyline)).max(1e-12);
    radial_monotone_check_eps(polyline, eps)
}

pub fn radial_monotone_check_eps(polyline: &[Point2], eps: f64) -> bool {
    let k = polyline.len();
    for i in 0..k {
        let mut last = 0.0f64;
        for j in i + 1..k {
            let d = polyline[i].dist(polyline[j]);
            if d + eps < last {
                return false;
            }
            last = last.max(d);
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Cap generation

/// Build a cap by lifting a perturbed equilateral disk triangulation onto
/// the concave-down paraboloid `z = h·(1 - r²/R²)`, with `h` bisected so
/// the maximum face-normal tilt lands at `target_tilt` (from below). The
/// planar source mesh is non-obtuse and Delaunay, so the lift has convex
/// dihedrals and projects back to the generating triangulation.
pub fn generate_cap(n: usize, target_tilt: Angle, seed: u64) -> Result<ConvexCap, CapError> {
    if n < 4 {
        return Err(CapError::GenerationFailed(format!("need at least 4 vertices, got {n}")));
    }
    if target_tilt.radians() >= FRAC_PI_2 {
        return Err(CapError::ProjectionUndefined);
    }
    // hexagonal patch whose vertex count 1 + 3k(k+1) is nearest to n
    let mut rings = 1usize;
    let mut best_diff = usize::MAX;
    for k in 1usize..=20 {
        let count: usize = 1 + 3 * k * (k + 1);
        let diff = count.abs_diff(n);
        if diff < best_diff {
            best_diff = diff;
            rings = k;
        }
    }
    let planar = crate::gen::equilateral_patch(rings, 0.06, seed);
    let triangles: Vec<[usize; 3]> = planar
        .faces()
        .into_iter()
        .filter(|f| f.signed_area > 0.0)
        .map(|f| {
            debug_assert_eq!(f.vertices.len(), 3);
            [f.vertices[0], f.vertices[1], f.vertices[2]]
        })
        .collect();
    let radius = planar
        .points()
        .iter()
        .map(|p| (*p - Point2::new(0.0, 0.0)).norm())
        .fold(0.0f64, f64::max)
        * 1.000001;

    let lift = |h: f64| -> Vec<Point3> {
        planar
            .points()
            .iter()
            .map(|p| {
                let r2 = p.x * p.x + p.y * p.y;
                Point3::new(p.x, p.y, h * (1.0 - r2 / (radius * radius)))
            })
            .collect()
    };
    let tilt_at = |h: f64| -> f64 {
        let verts = lift(h);
        triangles
            .iter()
            .map(|t| {
                let nrm = upward_normal(verts[t[0]], verts[t[1]], verts[t[2]]);
                angle_between_3d(nrm, Vec3::new(0.0, 0.0, 1.0))
            })
            .fold(0.0f64, f64::max)
    };

    let target = target_tilt.radians();
    let h = if target == 0.0 {
        0.0
    } else {
        let mut hi = 1.0;
        let mut grow = 0;
        while tilt_at(hi) < target {
            hi *= 2.0;
            grow += 1;
            if grow > 60 {
                return Err(CapError::GenerationFailed(format!(
                    "tilt target {:.2}° unreachable",
                    target_tilt.degrees()
                )));
            }
        }
        let mut lo = 0.0;
        for _ in 0..50 {
            let mid = 0.5 * (lo + hi);
            if tilt_at(mid) <= target {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    };
    let cap = ConvexCap::from_parts(lift(h), triangles)?;
    let report = validate_cap(&cap, false);
    if !report.is_valid() {
        return Err(CapError::GenerationFailed(format!(
            "generated cap fails validation: {:?}",
            report.violations
        )));
    }
    Ok(cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::augment;
    use crate::spanning::{quadrant_forest, verify_forest};

    fn deg(d: f64) -> Angle {
        Angle::from_degrees(d)
    }

    /// Analytic extremum of the single-ray distortion: the largest angle
    /// change is twice `atan(1/sqrt(cos φ)) - atan(sqrt(cos φ))`.
    fn analytic_distortion(phi_deg: f64) -> f64 {
        let c = phi_deg.to_radians().cos();
        2.0 * ((1.0 / c.sqrt()).atan() - c.sqrt().atan())
    }

    #[test]
    fn distortion_zero_at_flat() {
        let d = max_angle_distortion(Angle::ZERO).unwrap();
        assert!(d.radians() < 1e-12);
    }

    #[test]
    fn distortion_matches_analytic_extremum() {
        for phi in [5.0, 10.0, 27.0, 45.0, 70.0] {
            let d = max_angle_distortion_detailed(deg(phi)).unwrap();
            let expect = analytic_distortion(phi);
            assert!(
                (d.value.radians() - expect).abs() < 1e-6,
                "phi={phi}: got {}, expected {}",
                d.value.radians(),
                expect
            );
            assert!(d.error_bound < 1e-9);
        }
    }

    #[test]
    fn distortion_below_one_degree_at_ten() {
        let d = max_angle_distortion(deg(10.0)).unwrap();
        assert!(d.degrees() < 1.0, "{}", d.degrees());
        assert!(d.degrees() > 0.8);
    }

    #[test]
    fn distortion_monotone() {
        let mut prev = -1.0;
        for k in 0..=16 {
            let d = max_angle_distortion(deg(5.0 * k as f64)).unwrap().radians();
            assert!(d >= prev - 1e-12, "not monotone at {}°", 5 * k);
            prev = d;
        }
    }

    #[test]
    fn distortion_rejects_vertical() {
        assert_eq!(max_angle_distortion(deg(90.0)).unwrap_err(), CapError::ProjectionUndefined);
    }

    fn flat_patch_cap() -> ConvexCap {
        generate_cap(19, Angle::ZERO, 3).unwrap()
    }

    #[test]
    fn flat_cap_is_valid_and_flat() {
        let cap = flat_patch_cap();
        assert!(cap.max_tilt().radians() < 1e-12);
        let report = validate_cap(&cap, false);
        assert!(report.is_valid(), "{:?}", report.violations);
    }

    #[test]
    fn generated_cap_hits_tilt_target() {
        let cap = generate_cap(61, deg(10.0), 7).unwrap();
        assert!(cap.max_tilt().radians() <= deg(10.0).radians() + 1e-9);
        assert!(cap.max_tilt().degrees() > 9.99);
        let report = validate_cap(&cap, false);
        assert!(report.is_valid(), "{:?}", report.violations);
        // the paraboloid lift of a Delaunay patch stays strictly acute at
        // this jitter level? not necessarily; only non-obtuseness of the
        // projection is required
        let proj = project(&cap).unwrap();
        assert!(proj.graph.validate(deg(90.0)).is_valid());
    }

    #[test]
    fn projection_corner_angles_within_distortion() {
        let cap = generate_cap(61, deg(15.0), 11).unwrap();
        let proj = project(&cap).unwrap();
        let delta = proj.delta.radians();
        for t in cap.triangles() {
            for k in 0..3 {
                let a3 = cap.corner_angle_3d(t, k);
                let p = proj.graph.point(t[k]);
                let q = proj.graph.point(t[(k + 1) % 3]);
                let r = proj.graph.point(t[(k + 2) % 3]);
                let a2 = geom::corner_angle(q, p, r);
                assert!(
                    (a3 - a2).abs() <= delta + 1e-9,
                    "corner distortion {} exceeds bound {}",
                    (a3 - a2).abs(),
                    delta
                );
            }
        }
    }

    #[test]
    fn acuteness_flagged_on_right_angles() {
        // a single right triangle, flat
        let cap = ConvexCap::from_parts(
            vec![
                Point3::new(0.0, 0.0, 0.0),
                Point3::new(1.0, 0.0, 0.0),
                Point3::new(0.0, 1.0, 0.0),
            ],
            vec![[0, 1, 2]],
        )
        .unwrap();
        let strict = validate_cap(&cap, true);
        assert!(!strict.is_valid());
        assert!(!strict.strictly_acute);
        let loose = validate_cap(&cap, false);
        assert!(loose.is_valid());
    }

    #[test]
    fn hinge_two_triangles() {
        // two faces sharing edge (1,2), folded slightly along it
        let z = 0.2;
        let cap = ConvexCap::from_parts(
            vec![
                Point3::new(0.0, 0.0, 0.0),
                Point3::new(1.0, 0.0, z),
                Point3::new(0.0, 1.0, z),
                Point3::new(1.0, 1.0, 0.0),
            ],
            vec![[0, 1, 2], [1, 3, 2]],
        )
        .unwrap();
        // no cuts: lift an empty forest
        let forest = SpanningForest::empty(4, 0);
        let cuts = lift_forest(&forest, &cap).unwrap();
        let layout = unfold(&cap, &cuts).unwrap();
        // shared edge must coincide between the two placed faces
        let p1a = placed_vertex(&cap, &layout.face_pose[0], 0, 1);
        let p1b = placed_vertex(&cap, &layout.face_pose[1], 1, 1);
        let p2a = placed_vertex(&cap, &layout.face_pose[0], 0, 2);
        let p2b = placed_vertex(&cap, &layout.face_pose[1], 1, 2);
        assert!(p1a.dist(p1b) < 1e-12 && p2a.dist(p2b) < 1e-12);
        // placements are congruent to the 3D faces
        for (f, t) in cap.triangles().iter().enumerate() {
            for k in 0..3 {
                let (u, v) = (t[k], t[(k + 1) % 3]);
                let d3 = cap.vertex(u).dist(cap.vertex(v));
                let d2 = layout.face_pose[f][k].dist(layout.face_pose[f][(k + 1) % 3]);
                assert!((d3 - d2).abs() < 1e-12);
            }
        }
        assert!(overlap_check(&layout).is_empty());
    }

    #[test]
    fn flat_cap_unfolds_to_itself() {
        let cap = flat_patch_cap();
        let proj = project(&cap).unwrap();
        let gp = augment(&proj.graph, deg(90.0));
        let s = crate::gen::random_interior_vertex(&proj.graph, 5);
        let forest = quadrant_forest(&gp, s);
        assert!(verify_forest(&proj.graph, &forest).is_valid());
        let cuts = lift_forest(&forest, &cap).unwrap();
        // zero curvature: every turn's two side sums are both flat
        for rec in &cuts.turns {
            assert!((rec.sum_left + rec.sum_right - 2.0 * PI).abs() < 1e-9);
        }
        let layout = unfold(&cap, &cuts).unwrap();
        // the development of a flat cap reproduces the projected positions
        for (f, t) in cap.triangles().iter().enumerate() {
            for (k, &v) in t.iter().enumerate() {
                let placed = layout.face_pose[f][k];
                let orig = cap.vertex(v).xy();
                assert!(placed.dist(orig) < 1e-9, "face {f} vertex {v}");
            }
        }
        assert!(overlap_check(&layout).is_empty());
    }

    #[test]
    fn shallow_cap_pipeline() {
        let cap = generate_cap(61, deg(10.0), 21).unwrap();
        let proj = project(&cap).unwrap();
        let gp = augment(&proj.graph, deg(90.0));
        let s = crate::gen::random_interior_vertex(&proj.graph, 21);
        let forest = quadrant_forest(&gp, s);
        let cuts = lift_forest(&forest, &cap).unwrap();
        assert!(cuts.flagged.is_empty(), "turns over 90°: {:?}", cuts.flagged);
        let layout = unfold(&cap, &cuts).unwrap();
        assert!(overlap_check(&layout).is_empty());
        // area is preserved by the development
        let area3: f64 = cap
            .triangles()
            .iter()
            .map(|t| {
                let (a, b, c3) = (cap.vertex(t[0]), cap.vertex(t[1]), cap.vertex(t[2]));
                0.5 * (b - a).cross(c3 - a).norm()
            })
            .sum();
        let area2: f64 = layout
            .face_pose
            .iter()
            .map(|t| 0.5 * (t[1] - t[0]).cross(t[2] - t[0]).abs())
            .sum();
        assert!((area3 - area2).abs() < 1e-6 * area3);
        // every developed cut path is radially monotone at this tilt
        for dp in &layout.dev_paths {
            assert!(radial_monotone_check(&dp.left), "left bank of {:?}", dp.vertices);
            assert!(radial_monotone_check(&dp.right), "right bank of {:?}", dp.vertices);
        }
    }

    #[test]
    fn shallow_lift_turns_near_planar_turns() {
        // lifting distorts a path turn by at most two angle-distortion
        // bounds at this scale of tilt
        for seed in [3u64, 21] {
            let cap3 = generate_cap(61, deg(10.0), seed).unwrap();
            let proj = project(&cap3).unwrap();
            let delta = proj.delta.radians();
            let s = crate::gen::random_interior_vertex(&proj.graph, seed);
            let gp = augment(&proj.graph, deg(90.0));
            let forest = quadrant_forest(&gp, s);
            let cuts = lift_forest(&forest, &cap3).unwrap();
            for rec in &cuts.turns {
                let p = |v: usize| proj.graph.point(v);
                let planar = geom::corner_angle(p(rec.from), p(rec.vertex), p(rec.to));
                let planar_turn = (PI - planar).abs();
                assert!(
                    rec.turn() <= planar_turn + 2.0 * delta + 1e-9,
                    "turn {} vs planar {} + 2*{delta}",
                    rec.turn(),
                    planar_turn
                );
            }
        }
    }

    #[test]
    fn radial_monotone_cases() {
        let line: Vec<Point2> = (0..5).map(|i| Point2::new(i as f64, 0.0)).collect();
        assert!(radial_monotone_check(&line));
        let back = vec![Point2::new(0.0, 0.0), Point2::new(1.0, 0.0), Point2::new(0.1, 0.0)];
        assert!(!radial_monotone_check(&back));
    }

    #[test]
    fn overlap_detects_synthetic_collision() {
        let t = [Point2::new(0.0, 0.0), Point2::new(1.0, 0.0), Point2::new(0.0, 1.0)];
        let shifted = [Point2::new(0.1, 0.1), Point2::new(1.1, 0.1), Point2::new(0.1, 1.1)];
        let apart = [Point2::new(5.0, 5.0), Point2::new(6.0, 5.0), Point2::new(5.0, 6.0)];
        let layout = UnfoldedLayout {
            face_pose: vec![t, shifted, apart],
            root_face: 0,
            cut_segments: vec![],
            source_image: Point2::new(0.0, 0.0),
            dev_paths: vec![],
        };
        let pairs = overlap_check(&layout);
        assert_eq!(pairs, vec![(0, 1)]);
    }

    #[test]
    fn lift_mismatch_reported() {
        let cap = flat_patch_cap();
        // build a forest on a different (incompatible) graph
        let other = crate::gen::grid45(4, 4, 1);
        let gp = augment(&other, deg(90.0));
        let s = crate::gen::random_interior_vertex(&other, 2);
        let forest = quadrant_forest(&gp, s);
        assert!(matches!(
            lift_forest(&forest, &cap),
            Err(CapError::LiftMismatch { .. }) | Err(CapError::BadMesh(_))
        ));
    }
}
