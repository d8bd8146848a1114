//! Spanning structures built from wedge paths: trees pruned out of a reach
//! set, spanning trees of 45°-grid graphs, an exhaustive existence oracle
//! for angle-monotone spanning trees, a certified counterexample instance
//! on which no such tree exists, and the boundary-rooted quadrant spanning
//! forest.

use std::f64::consts::FRAC_PI_2;

use thiserror::Error;

use crate::geom::{self, Angle, DirArc, Point2, ANGLE_EPS};
use crate::graph::{augment, AugmentedGraph, ItemRef, PlaneGraph};
use crate::paths::{
    critical_angles_from_directions, envelope, reach_set, verify_monotone, EnvelopeKind, ReachSet,
};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpanError {
    #[error("edge {edge} has direction {dir_deg:.6}°, not a multiple of 45°")]
    NotA45Graph { edge: usize, dir_deg: f64 },
    #[error("construction failed: {0}")]
    ConstructionFailed(String),
}

/// A rooted tree over a subset of graph vertices; `parent[v]` is
/// `(next vertex toward the root, edge id)`.
#[derive(Debug, Clone)]
pub struct RootedTree {
    pub root: usize,
    parent: Vec<Option<(usize, usize)>>,
    members: Vec<usize>,
}

impl RootedTree {
    fn new(root: usize, parent: Vec<Option<(usize, usize)>>) -> Self {
        let mut members: Vec<usize> =
            parent.iter().enumerate().filter_map(|(v, p)| p.is_some().then_some(v)).collect();
        members.push(root);
        members.sort_unstable();
        RootedTree { root, parent, members }
    }

    pub fn parent(&self, v: usize) -> Option<(usize, usize)> {
        self.parent[v]
    }

    pub fn contains(&self, v: usize) -> bool {
        v == self.root || self.parent[v].is_some()
    }

    /// Members in increasing vertex order, root included.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn edge_count(&self) -> usize {
        self.members.len() - 1
    }

    /// Tree edges as `(child, parent, edge)`.
    pub fn tree_edges(&self) -> Vec<(usize, usize, usize)> {
        self.parent
            .iter()
            .enumerate()
            .filter_map(|(v, p)| p.map(|(u, e)| (v, u, e)))
            .collect()
    }

    /// Vertices from `v` up to the root, both inclusive.
    pub fn path_to_root(&self, v: usize) -> Option<Vec<usize>> {
        if !self.contains(v) {
            return None;
        }
        let mut path = vec![v];
        let mut cur = v;
        while let Some((p, _)) = self.parent[cur] {
            path.push(p);
            cur = p;
            if path.len() > self.parent.len() {
                return None; // cycle; caller's certification will reject
            }
        }
        (cur == self.root).then_some(path)
    }

    /// Vertices from the root down to `v`, both inclusive.
    pub fn path_from_root(&self, v: usize) -> Option<Vec<usize>> {
        let mut p = self.path_to_root(v)?;
        p.reverse();
        Some(p)
    }
}

/// Collapse a reach set to a tree rooted at its source by keeping, for
/// every reached vertex, only its first-discovered in-wedge predecessor.
/// Every root-to-vertex path stays inside the reach set's wedge.
pub fn prune_to_tree(rs: &ReachSet) -> RootedTree {
    let n = rs.vertex_count();
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
    for &v in rs.discovery_order() {
        if v != rs.source {
            parent[v] = rs.preds(v).first().copied();
        }
    }
    RootedTree::new(rs.source, parent)
}

fn snap_to_45(dir: Angle) -> Option<Angle> {
    let step = 45f64.to_radians();
    let k = (dir.radians() / step).round();
    let snapped = Angle::from_radians(k * step);
    dir.approx_eq(snapped, ANGLE_EPS).then_some(snapped)
}

/// Spanning tree of a graph whose edge directions are all multiples of
/// 45°, rooted at `s`, with every root-to-vertex path angle-monotone at
/// width 90°.
///
/// Construction: retain every upper envelope at the (45°-multiple)
/// critical centers, then give each remaining vertex one incoming edge by
/// walking its first-discovered predecessor chain inside the first reach
/// set that contains it. Each root path is certified before returning.
pub fn spanning_tree_45deg(g: &PlaneGraph, s: usize) -> Result<RootedTree, SpanError> {
    let n = g.vertex_count();
    let width = Angle::from_degrees(90.0);
    let mut dirs: Vec<Angle> = Vec::new();
    for e in 0..g.edge_count() {
        let [u, _] = g.edge(e);
        let d = g.edge_dir(e, u);
        let snapped =
            snap_to_45(d).ok_or(SpanError::NotA45Graph { edge: e, dir_deg: d.degrees() })?;
        dirs.push(snapped);
        dirs.push(snapped.opposite());
    }
    let gp = augment(g, width);
    let crits = critical_angles_from_directions(&dirs, width);

    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut assigned = vec![false; n];
    assigned[s] = true;

    // envelope edges first; shared prefixes agree, first assignment wins
    for &beta in &crits {
        let env = envelope(&gp, s, beta, width, EnvelopeKind::Upper);
        for k in 0..env.edges.len() {
            let (from, to, e) = (env.vertices[k], env.vertices[k + 1], env.edges[k]);
            if !assigned[to] {
                assigned[to] = true;
                parent[to] = Some((from, e));
            }
        }
    }

    // one incoming edge for everything between the envelopes
    let reaches: Vec<ReachSet> = crits.iter().map(|&b| reach_set(&gp, s, b, width)).collect();
    for v in 0..n {
        if assigned[v] {
            continue;
        }
        let Some(rs) = reaches.iter().find(|r| r.is_reached(v)) else {
            return Err(SpanError::ConstructionFailed(format!(
                "vertex {v} unreachable at every critical center; graph not valid at 90°"
            )));
        };
        let mut cur = v;
        while !assigned[cur] {
            let &(p, e) = rs.preds(cur).first().expect("reached vertices have predecessors");
            assigned[cur] = true;
            parent[cur] = Some((p, e));
            cur = p;
        }
    }

    let tree = RootedTree::new(s, parent);
    for v in 0..n {
        let path = tree
            .path_from_root(v)
            .ok_or_else(|| SpanError::ConstructionFailed(format!("vertex {v} not spanned")))?;
        let chk = verify_monotone(g, &path, width).expect("tree edges are graph edges");
        if !chk.monotone {
            return Err(SpanError::ConstructionFailed(format!(
                "root path to {v} spans {:.6}° > 90°",
                chk.arc_width.map(|a| a.degrees()).unwrap_or(0.0)
            )));
        }
    }
    Ok(tree)
}

/// Outcome of the exhaustive spanning-tree search.
#[derive(Debug, Clone)]
pub enum OracleOutcome {
    Tree(RootedTree),
    NoTree,
    BudgetExceeded,
}

impl OracleOutcome {
    pub fn is_tree(&self) -> bool {
        matches!(self, OracleOutcome::Tree(_))
    }

    pub fn is_no_tree(&self) -> bool {
        matches!(self, OracleOutcome::NoTree)
    }
}

/// A feasible attachment of one vertex: parent, edge, resulting arc.
type Attachment = (usize, usize, DirArc);

struct OracleSearch<'a> {
    g: &'a PlaneGraph,
    width: f64,
    parent: Vec<Option<(usize, usize)>>,
    arc: Vec<DirArc>,
    attached: Vec<bool>,
    attached_count: usize,
    forbidden: Vec<bool>,
    nodes: u64,
    budget: u64,
}

enum SearchResult {
    Found,
    Exhausted,
    Budget,
}

impl<'a> OracleSearch<'a> {
    /// Dart id for attaching `child` across edge `e`.
    fn dart_id(&self, e: usize, child: usize) -> usize {
        let [_, v] = self.g.edge(e);
        2 * e + usize::from(child != v)
    }

    /// Feasible attachments of `v`: `(parent, edge, resulting arc)`.
    /// A candidate whose arc contains another candidate's arc is dominated
    /// (attaching via the tighter arc leaves every completion open) and is
    /// dropped.
    fn candidates_for(&self, v: usize) -> Vec<Attachment> {
        let mut cands: Vec<Attachment> = Vec::new();
        for d in self.g.darts(v) {
            let u = d.to;
            if !self.attached[u] || self.forbidden[self.dart_id(d.edge, v)] {
                continue;
            }
            let dir_uv = d.dir.opposite();
            let arc = self.arc[u].extend(dir_uv);
            if arc.width() <= self.width + ANGLE_EPS {
                cands.push((u, d.edge, arc));
            }
        }
        let mut keep = vec![true; cands.len()];
        for i in 0..cands.len() {
            if !keep[i] {
                continue;
            }
            for j in 0..cands.len() {
                if i != j && keep[j] && cands[j].2.contains_arc(cands[i].2) && keep[i] {
                    keep[j] = false;
                }
            }
        }
        cands.into_iter().zip(keep).filter_map(|(c, k)| k.then_some(c)).collect()
    }

    fn search(&mut self) -> SearchResult {
        self.nodes += 1;
        if self.nodes > self.budget {
            return SearchResult::Budget;
        }
        if self.attached_count == self.g.vertex_count() {
            return SearchResult::Found;
        }

        // pick the frontier vertex with the fewest feasible attachments
        let mut pivot: Option<(usize, Vec<Attachment>)> = None;
        for v in 0..self.g.vertex_count() {
            if self.attached[v] {
                continue;
            }
            let cands = self.candidates_for(v);
            if cands.is_empty() {
                // arcs of attached vertices never change, so a vertex with
                // every incoming slot forbidden or attached-and-infeasible
                // can never attach
                let dead = self
                    .g
                    .darts(v)
                    .iter()
                    .all(|d| self.forbidden[self.dart_id(d.edge, v)] || self.attached[d.to]);
                if dead {
                    return SearchResult::Exhausted;
                }
                continue;
            }
            let better = match &pivot {
                None => true,
                Some((_, best)) => cands.len() < best.len(),
            };
            if better {
                let single = cands.len() == 1;
                pivot = Some((v, cands));
                if single {
                    break;
                }
            }
        }
        let Some((v, cands)) = pivot else {
            // nothing can be attached now or ever
            return SearchResult::Exhausted;
        };

        let (u, e, arc) = cands[0];
        // branch 1: attach v via (u, e)
        self.attached[v] = true;
        self.attached_count += 1;
        self.parent[v] = Some((u, e));
        self.arc[v] = arc;
        match self.search() {
            SearchResult::Exhausted => {}
            r => return r,
        }
        self.attached[v] = false;
        self.attached_count -= 1;
        self.parent[v] = None;
        self.arc[v] = DirArc::EMPTY;

        // branch 2: never attach v via this edge
        let dart = self.dart_id(e, v);
        self.forbidden[dart] = true;
        let r = self.search();
        self.forbidden[dart] = false;
        r
    }
}

/// Exhaustively decide whether `g` has a spanning tree rooted at `s` in
/// which every root-to-vertex path is angle-monotone of the given width.
///
/// The search grows the tree one attachment at a time, branching between
/// "attach this vertex via this edge" and "never use that edge for that
/// vertex", and prunes attachments whose root-path direction arc exceeds
/// the width. `budget` caps the number of search nodes; exceeding it is
/// inconclusive.
pub fn spanning_tree_oracle(g: &PlaneGraph, s: usize, width: Angle, budget: u64) -> OracleOutcome {
    let n = g.vertex_count();
    let mut st = OracleSearch {
        g,
        width: width.radians(),
        parent: vec![None; n],
        arc: vec![DirArc::EMPTY; n],
        attached: vec![false; n],
        attached_count: 1,
        forbidden: vec![false; 2 * g.edge_count()],
        nodes: 0,
        budget,
    };
    st.attached[s] = true;
    match st.search() {
        SearchResult::Found => OracleOutcome::Tree(RootedTree::new(s, st.parent)),
        SearchResult::Exhausted => OracleOutcome::NoTree,
        SearchResult::Budget => OracleOutcome::BudgetExceeded,
    }
}

/// All simple paths from `s` to `t` whose edge directions fit a closed
/// wedge of the given width, found by depth-first search with arc pruning.
/// Stops after `max_paths` results.
pub fn enumerate_monotone_paths(
    g: &PlaneGraph,
    s: usize,
    t: usize,
    width: Angle,
    max_paths: usize,
) -> Vec<Vec<usize>> {
    if s == t {
        return vec![vec![s]];
    }
    struct Dfs<'a> {
        g: &'a PlaneGraph,
        t: usize,
        width: f64,
        max_paths: usize,
        on_path: Vec<bool>,
        path: Vec<usize>,
        out: Vec<Vec<usize>>,
    }
    impl<'a> Dfs<'a> {
        fn run(&mut self, cur: usize, arc: DirArc) {
            if self.out.len() >= self.max_paths {
                return;
            }
            if cur == self.t {
                self.out.push(self.path.clone());
                return;
            }
            for d in self.g.darts(cur) {
                if self.on_path[d.to] {
                    continue;
                }
                let arc2 = arc.extend(d.dir);
                if arc2.width() > self.width + ANGLE_EPS {
                    continue;
                }
                self.on_path[d.to] = true;
                self.path.push(d.to);
                self.run(d.to, arc2);
                self.path.pop();
                self.on_path[d.to] = false;
            }
        }
    }
    let mut dfs = Dfs {
        g,
        t,
        width: width.radians(),
        max_paths,
        on_path: vec![false; g.vertex_count()],
        path: vec![s],
        out: Vec::new(),
    };
    dfs.on_path[s] = true;
    dfs.run(s, DirArc::EMPTY);
    dfs.out
}

// ---------------------------------------------------------------------------
// Counterexample instance

/// A certified instance on which pairwise angle-monotone paths exist but no
/// angle-monotone spanning tree from `source` does.
#[derive(Debug, Clone)]
pub struct Counterexample {
    pub graph: PlaneGraph,
    pub source: usize,
    pub names: Vec<String>,
    pub shift_deg: f64,
    pub outward_pull: f64,
}

impl Counterexample {
    pub fn vertex_by_name(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    fn named_path(&self, names: &[&str]) -> Vec<usize> {
        names.iter().map(|n| self.vertex_by_name(n).unwrap()).collect()
    }
}

/// Largest shift (degrees) accepted by [`counterexample_graph`].
pub const CEX_SHIFT_MAX_DEG: f64 = 8.0;

/// Build and certify the spanning-tree counterexample with the default
/// (zero) outward pull. See [`counterexample_graph_with`].
pub fn counterexample_graph(shift_deg: f64) -> Result<Counterexample, SpanError> {
    counterexample_graph_with(shift_deg, 0.0)
}

/// Build the counterexample: a 25-vertex non-obtuse triangulation with
/// center `s`, six pocket vertices `a..f`, a six-vertex ring `w,x,y,z,t,u`,
/// and a convex 12-gon boundary of corners `A..F` interleaved with
/// midpoints `M0..M5`. Corners `A` and `B` are rotated toward one another
/// by `shift_deg` degrees, which breaks the two-path symmetry so that
/// `(s,a,x,A)` and `(s,b,x,B)` become the unique angle-monotone paths to
/// `A` and `B`; their union contains the cycle `(s,a,x,b)`, so no
/// angle-monotone spanning tree from `s` exists. With `shift_deg = 0` the
/// instance is symmetric and every outer corner has exactly two paths.
///
/// `outward_pull` scales the pocket and outer-corner radii by `1 + pull`;
/// small positive values are the strict-acuteness margin knob. Everything
/// claimed above is certified on the built instance; any failure is
/// `ConstructionFailed` (adjust the shift).
pub fn counterexample_graph_with(
    shift_deg: f64,
    outward_pull: f64,
) -> Result<Counterexample, SpanError> {
    if !(0.0..=CEX_SHIFT_MAX_DEG).contains(&shift_deg) {
        return Err(SpanError::ConstructionFailed(format!(
            "shift {shift_deg}° outside [0, {CEX_SHIFT_MAX_DEG}]"
        )));
    }
    if !(-0.02..=0.02).contains(&outward_pull) {
        return Err(SpanError::ConstructionFailed(format!(
            "outward pull {outward_pull} outside [-0.02, 0.02]"
        )));
    }
    let r_pocket = 0.36 * (1.0 + outward_pull);
    let r_ring = 1.0;
    let r_hull = 1.42;
    let r_corner = r_hull * (1.0 + outward_pull);

    let at = |deg: f64, r: f64| {
        let t = deg.to_radians();
        Point2::new(r * t.cos(), r * t.sin())
    };
    let mut points = vec![Point2::new(0.0, 0.0)];
    let mut names = vec!["s".to_string()];
    for (i, n) in ["a", "b", "c", "d", "e", "f"].iter().enumerate() {
        points.push(at(30.0 + 60.0 * i as f64, r_pocket));
        names.push(n.to_string());
    }
    for (i, n) in ["w", "x", "y", "z", "t", "u"].iter().enumerate() {
        points.push(at(60.0 * i as f64, r_ring));
        names.push(n.to_string());
    }
    for (i, n) in ["A", "B", "C", "D", "E", "F"].iter().enumerate() {
        let base = 30.0 + 60.0 * i as f64;
        let ang = match i {
            0 => base + shift_deg, // A toward B
            1 => base - shift_deg, // B toward A
            _ => base,
        };
        points.push(at(ang, r_corner));
        names.push(n.to_string());
    }
    for i in 0..6 {
        points.push(at(60.0 * i as f64, r_hull));
        names.push(format!("M{i}"));
    }
    let pocket = |i: usize| 1 + i;
    let ring = |i: usize| 7 + (i % 6);
    let corner = |i: usize| 13 + (i % 6);
    let mid = |i: usize| 19 + (i % 6);

    let mut edges = Vec::new();
    for i in 0..6 {
        edges.push([0, pocket(i)]);
        edges.push([pocket(i), pocket((i + 1) % 6)]);
        edges.push([pocket(i), ring(i)]);
        edges.push([pocket(i), ring(i + 1)]);
        edges.push([ring(i), ring(i + 1)]);
        edges.push([ring(i), corner(i)]);
        edges.push([ring(i + 1), corner(i)]);
        edges.push([ring(i), mid(i)]);
        edges.push([mid(i), corner(i)]);
        edges.push([corner(i), mid(i + 1)]);
    }
    let graph = PlaneGraph::new(points, edges)
        .map_err(|e| SpanError::ConstructionFailed(format!("instance not a plane graph: {e}")))?;

    let cex = Counterexample { graph, source: 0, names, shift_deg, outward_pull };
    certify_counterexample(&cex)?;
    Ok(cex)
}

fn certify_counterexample(cex: &Counterexample) -> Result<(), SpanError> {
    let g = &cex.graph;
    let w90 = Angle::from_degrees(90.0);
    let fail = |msg: String| Err::<(), _>(SpanError::ConstructionFailed(msg));

    let report = g.validate(w90);
    if !report.is_valid() {
        return fail(format!("instance is not a non-obtuse triangulation: {report}"));
    }
    if cex.outward_pull > 0.0 && report.max_internal_angle_deg >= 90.0 {
        return fail(format!(
            "outward pull should leave all angles strictly acute, max is {:.4}°",
            report.max_internal_angle_deg
        ));
    }

    // pairwise paths from every source exist
    let gp = augment(g, w90);
    for s in 0..g.vertex_count() {
        let sp = crate::paths::paths_from(&gp, s, w90);
        if !sp.all_found() {
            return fail(format!("pairwise paths missing from {s}: {:?}", sp.missing()));
        }
    }

    // unique paths to A and B when shifted; two each when symmetric
    let s = cex.source;
    for (target, via) in [("A", ["s", "a", "x", "A"]), ("B", ["s", "b", "x", "B"])] {
        let t = cex.vertex_by_name(target).unwrap();
        let paths = enumerate_monotone_paths(g, s, t, w90, 64);
        let expected = cex.named_path(&via);
        if cex.shift_deg > 0.0 {
            if paths.len() != 1 {
                return fail(format!(
                    "expected a unique monotone path to {target}, found {}",
                    paths.len()
                ));
            }
            if paths[0] != expected {
                return fail(format!(
                    "unique path to {target} is {:?}, not {:?}",
                    paths[0], expected
                ));
            }
        } else if paths.len() != 2 || !paths.contains(&expected) {
            return fail(format!(
                "symmetric instance should have exactly two paths to {target} including {expected:?}, found {paths:?}"
            ));
        }
    }
    for target in ["C", "D", "E", "F"] {
        let t = cex.vertex_by_name(target).unwrap();
        let paths = enumerate_monotone_paths(g, s, t, w90, 64);
        if paths.len() != 2 {
            return fail(format!(
                "expected two monotone paths to {target}, found {}",
                paths.len()
            ));
        }
    }

    if cex.shift_deg > 0.0 {
        // the two unique paths force the cycle s-a-x-b
        let a = cex.vertex_by_name("a").unwrap();
        let b = cex.vertex_by_name("b").unwrap();
        let x = cex.vertex_by_name("x").unwrap();
        for (u, v) in [(s, a), (a, x), (x, b), (b, s)] {
            if g.edge_between(u, v).is_none() {
                return fail(format!("cycle edge ({u},{v}) missing"));
            }
        }
        match spanning_tree_oracle(g, s, w90, 20_000_000) {
            OracleOutcome::NoTree => {}
            OracleOutcome::Tree(_) => {
                return fail(
                    "oracle found a spanning tree; instance is not a counterexample".into()
                )
            }
            OracleOutcome::BudgetExceeded => {
                return fail("oracle budget exceeded while certifying".into())
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Quadrant spanning forest

/// Quadrant index of `p` around `origin`: quadrant `j` covers direction
/// angles `[j·90°, (j+1)·90°)`, so each quadrant is closed along its
/// leading axis and open along the next; the origin itself is in
/// quadrant 0.
pub fn quadrant_of(p: Point2, origin: Point2) -> usize {
    let d = p - origin;
    if d.norm() == 0.0 {
        return 0;
    }
    let mut ang = geom::direction(d).expect("nonzero").radians();
    // snap to an axis when within tolerance so the half-open convention is
    // stable under jitter
    for j in 0..=4 {
        let axis = j as f64 * FRAC_PI_2;
        if (ang - axis).abs() <= ANGLE_EPS {
            ang = axis;
        }
    }
    ((ang / FRAC_PI_2).floor() as usize) % 4
}

/// Wedge center used for quadrant `j`'s forest: 45° + j·90°.
pub fn quadrant_center(j: usize) -> Angle {
    Angle::from_degrees(45.0 + 90.0 * j as f64)
}

/// Boundary-rooted spanning forest partitioned into the four quadrants
/// around a source vertex.
#[derive(Debug, Clone)]
pub struct SpanningForest {
    pub source: usize,
    assigned: Vec<Option<u8>>,
    parent: Vec<Option<(usize, usize)>>,
    pub roots: [Vec<usize>; 4],
}

impl SpanningForest {
    /// A forest over `n` vertices spanning nothing (no interior vertices to
    /// cover).
    pub fn empty(n: usize, source: usize) -> Self {
        SpanningForest {
            source,
            assigned: vec![None; n],
            parent: vec![None; n],
            roots: [Vec::new(), Vec::new(), Vec::new(), Vec::new()],
        }
    }

    pub fn quadrant(&self, v: usize) -> Option<u8> {
        self.assigned[v]
    }

    pub fn parent(&self, v: usize) -> Option<(usize, usize)> {
        self.parent[v]
    }

    pub fn is_root(&self, v: usize) -> bool {
        self.assigned[v].is_some() && self.parent[v].is_none()
    }

    /// Forest members (spanned vertices, roots included).
    pub fn members(&self) -> Vec<usize> {
        (0..self.assigned.len()).filter(|&v| self.assigned[v].is_some()).collect()
    }

    /// Tree edges as `(child, parent, edge)`.
    pub fn tree_edges(&self) -> Vec<(usize, usize, usize)> {
        self.parent
            .iter()
            .enumerate()
            .filter_map(|(v, p)| p.map(|(u, e)| (v, u, e)))
            .collect()
    }

    /// Vertices from `v` to its boundary root, both inclusive.
    pub fn path_to_root(&self, v: usize) -> Option<Vec<usize>> {
        self.assigned[v]?;
        let mut path = vec![v];
        let mut cur = v;
        while let Some((p, _)) = self.parent[cur] {
            path.push(p);
            cur = p;
            if path.len() > self.assigned.len() {
                return None;
            }
        }
        Some(path)
    }
}

/// Grow the boundary-rooted spanning forest: for each quadrant `j` (wedge
/// center 45° + j·90°) and each unspanned interior vertex of that quadrant
/// in order of (distance from the source, angle, index), grow a wedge path
/// by repeatedly taking the most counterclockwise in-wedge edge, stopping
/// on reaching the quadrant's forest or the hull. Rays are never taken;
/// paths stop at hull vertices instead.
///
/// At the source itself the most counterclockwise edge strictly inside the
/// upper bounding ray is preferred, which keeps the source's path inside
/// its own quadrant even when an edge lies exactly on the wedge boundary.
pub fn quadrant_forest(gp: &AugmentedGraph, source: usize) -> SpanningForest {
    let g = gp.base();
    let n = g.vertex_count();
    let width = Angle::from_degrees(90.0);
    let origin = g.point(source);
    let mut forest = SpanningForest {
        source,
        assigned: vec![None; n],
        parent: vec![None; n],
        roots: [Vec::new(), Vec::new(), Vec::new(), Vec::new()],
    };

    for j in 0..4 {
        let beta = quadrant_center(j);
        let mut members: Vec<usize> = g
            .interior_vertices()
            .filter(|&v| quadrant_of(g.point(v), origin) == j)
            .collect();
        members.sort_by(|&a, &b| {
            let (pa, pb) = (g.point(a), g.point(b));
            let (da, db) = ((pa - origin).norm(), (pb - origin).norm());
            da.partial_cmp(&db)
                .unwrap()
                .then_with(|| {
                    let aa = if a == source {
                        0.0
                    } else {
                        geom::direction(pa - origin).unwrap().radians()
                    };
                    let ab = if b == source {
                        0.0
                    } else {
                        geom::direction(pb - origin).unwrap().radians()
                    };
                    aa.partial_cmp(&ab).unwrap()
                })
                .then(a.cmp(&b))
        });

        for &v in &members {
            if forest.assigned[v].is_some() {
                continue;
            }
            let mut cur = v;
            loop {
                // cur is interior and unassigned: take a step
                let (next, e) = pick_forest_step(gp, cur, beta, width, cur == source);
                forest.assigned[cur] = Some(j as u8);
                forest.parent[cur] = Some((next, e));
                if forest.assigned[next].is_some() {
                    break; // merged into this quadrant's forest
                }
                if g.is_on_hull(next) {
                    forest.assigned[next] = Some(j as u8);
                    forest.roots[j].push(next);
                    break;
                }
                cur = next;
            }
        }
    }
    forest
}

/// Most counterclockwise in-wedge edge at `v` (rays skipped). When
/// `prefer_interior` is set, edges strictly inside the upper bounding ray
/// win over one lying exactly on it.
fn pick_forest_step(
    gp: &AugmentedGraph,
    v: usize,
    center: Angle,
    width: Angle,
    prefer_interior: bool,
) -> (usize, usize) {
    let upper = center.rotate(0.5 * width.radians());
    let items = gp.wedge_incidence(v, center, width);
    let edges: Vec<(usize, usize, Angle)> = items
        .iter()
        .filter_map(|it| match it.item {
            ItemRef::Edge { edge, to } => Some((to, edge, it.dir)),
            ItemRef::Ray { .. } => None,
        })
        .collect();
    assert!(!edges.is_empty(), "interior vertex {v} has an in-wedge edge by the gap bound");
    if prefer_interior {
        if let Some(&(to, e, _)) =
            edges.iter().rev().find(|(_, _, d)| d.dist(upper) > 2.0 * ANGLE_EPS)
        {
            return (to, e);
        }
    }
    let &(to, e, _) = edges.last().unwrap();
    (to, e)
}

/// Certification report for a spanning forest.
#[derive(Debug, Clone, Default)]
pub struct ForestReport {
    pub violations: Vec<String>,
}

impl ForestReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check every forest property: all interior vertices spanned, roots on the
/// hull, paths acyclic, each root path monotone at its quadrant's wedge
/// center, and each tree confined to its quadrant.
pub fn verify_forest(g: &PlaneGraph, forest: &SpanningForest) -> ForestReport {
    let mut violations = Vec::new();
    let origin = g.point(forest.source);
    for v in g.interior_vertices() {
        if forest.quadrant(v).is_none() {
            violations.push(format!("interior vertex {v} not spanned"));
        }
    }
    for j in 0..4 {
        for &r in &forest.roots[j] {
            if !g.is_on_hull(r) {
                violations.push(format!("root {r} of quadrant {j} not on hull"));
            }
        }
    }
    for v in 0..g.vertex_count() {
        let Some(j) = forest.quadrant(v) else { continue };
        if quadrant_of(g.point(v), origin) != j as usize {
            violations.push(format!("vertex {v} assigned to quadrant {j} but lies elsewhere"));
        }
        let Some(path) = forest.path_to_root(v) else {
            violations.push(format!("path from {v} does not reach a root"));
            continue;
        };
        let end = *path.last().unwrap();
        if !g.is_on_hull(end) {
            violations.push(format!("path from {v} ends at non-hull vertex {end}"));
        }
        let beta = quadrant_center(j as usize);
        for w in path.windows(2) {
            let d = geom::direction(g.point(w[1]) - g.point(w[0])).unwrap();
            if !geom::dir_in_wedge(d, beta, Angle::from_degrees(90.0)) {
                violations.push(format!(
                    "step {}->{} of the path from {v} leaves the quadrant wedge",
                    w[0], w[1]
                ));
            }
        }
    }
    ForestReport { violations }
}
