//! Deterministic SVG figures: graphs with exterior rays, marked reach
//! sets, envelopes and regions, spanning trees and quadrant forests, and
//! unfolded layouts with cut edges.
//!
//! Output is a pure function of the scene: fixed stylesheet, fixed float
//! formatting, elements emitted in index order.

use crate::cap::UnfoldedLayout;
use crate::geom::{bbox, Point2};
use crate::graph::{AugmentedGraph, PlaneGraph};
use crate::paths::{EnvelopeKind, EnvelopePath, ReachSet, Region};
use crate::spanning::{quadrant_center, RootedTree, SpanningForest};

const STYLE: &str = "\
.edge{stroke:#b8b8b8;fill:none}\
.hulledge{stroke:#707070;fill:none}\
.ray{stroke:#999999;stroke-dasharray:2 2;fill:none}\
.vert{fill:#404040}\
.source{fill:#000000}\
.marked{stroke:#d62728;fill:none}\
.upper{stroke:#9467bd;fill:none}\
.lower{stroke:#1f77b4;fill:none}\
.region{fill:#9467bd;fill-opacity:0.12;stroke:none}\
.tree{stroke:#2ca02c;fill:none}\
.q0{stroke:#1f77b4;fill:none}\
.q1{stroke:#ff7f0e;fill:none}\
.q2{stroke:#2ca02c;fill:none}\
.q3{stroke:#d62728;fill:none}\
.face{fill:#f2ede4;stroke:#c8c0b0}\
.cut{stroke:#222222;fill:none}\
.axis{stroke:#888888;stroke-dasharray:4 3;fill:none}";

fn fmt(x: f64) -> String {
    let v = if x == 0.0 { 0.0 } else { x };
    format!("{v:.4}")
}

/// Incrementally built SVG document in graph coordinates (y up).
struct Figure {
    body: String,
    points: Vec<Point2>,
    stroke: f64,
}

impl Figure {
    fn new() -> Self {
        Figure { body: String::new(), points: Vec::new(), stroke: 1.0 }
    }

    fn track(&mut self, p: Point2) {
        self.points.push(p);
    }

    fn line(&mut self, a: Point2, b: Point2, class: &str, width_mul: f64) {
        self.track(a);
        self.track(b);
        self.body.push_str(&format!(
            "<line class=\"{class}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke-width=\"{{w{}}}\"/>\n",
            fmt(a.x),
            fmt(-a.y),
            fmt(b.x),
            fmt(-b.y),
            fmt(width_mul),
        ));
    }

    fn circle(&mut self, p: Point2, r_mul: f64, class: &str) {
        self.track(p);
        self.body.push_str(&format!(
            "<circle class=\"{class}\" cx=\"{}\" cy=\"{}\" r=\"{{r{}}}\"/>\n",
            fmt(p.x),
            fmt(-p.y),
            fmt(r_mul),
        ));
    }

    fn polygon(&mut self, pts: &[Point2], class: &str) {
        if pts.is_empty() {
            return;
        }
        let coords: Vec<String> =
            pts.iter().map(|p| format!("{},{}", fmt(p.x), fmt(-p.y))).collect();
        for p in pts {
            self.track(*p);
        }
        self.body.push_str(&format!(
            "<polygon class=\"{class}\" points=\"{}\"/>\n",
            coords.join(" ")
        ));
    }

    fn finish(mut self) -> String {
        let (lo, hi) = bbox(&self.points).unwrap_or((Point2::new(0.0, 0.0), Point2::new(1.0, 1.0)));
        let w = (hi.x - lo.x).max(1e-9);
        let h = (hi.y - lo.y).max(1e-9);
        let pad = 0.05 * w.max(h);
        self.stroke = 0.0025 * w.max(h);
        // resolve deferred stroke widths and radii now that scale is known
        let mut body = self.body;
        for mul in ["0.6", "1.0", "1.4", "2.0", "2.4"] {
            let m: f64 = mul.parse().unwrap();
            body = body.replace(
                &format!("{{w{}}}", fmt(m)),
                &fmt(self.stroke * m),
            );
            body = body.replace(
                &format!("{{r{}}}", fmt(m)),
                &fmt(self.stroke * m * 1.6),
            );
        }
        format!(
            "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\">\n<style>{STYLE}</style>\n{body}</svg>\n",
            fmt(lo.x - pad),
            fmt(-hi.y - pad),
            fmt(w + 2.0 * pad),
            fmt(h + 2.0 * pad),
        )
    }
}

fn draw_base_graph(fig: &mut Figure, g: &PlaneGraph) {
    for &[u, v] in g.edges() {
        let class = if g.is_on_hull(u) && g.is_on_hull(v) { "hulledge" } else { "edge" };
        fig.line(g.point(u), g.point(v), class, 1.0);
    }
    for v in 0..g.vertex_count() {
        fig.circle(g.point(v), 1.0, "vert");
    }
}

fn draw_rays(fig: &mut Figure, gp: &AugmentedGraph, only: Option<&ReachSet>) {
    let g = gp.base();
    let len = 0.06 * g.bbox_diameter();
    for (r, ray) in gp.rays().iter().enumerate() {
        if let Some(rs) = only {
            if !rs.uses_ray(r) {
                continue;
            }
        }
        let a = g.point(ray.origin);
        fig.line(a, a + ray.dir.unit_vec().scaled(len), "ray", 1.0);
    }
}

/// Base graph with hull edges darker and all exterior rays drawn short.
pub fn render_graph(gp: &AugmentedGraph) -> String {
    let mut fig = Figure::new();
    draw_base_graph(&mut fig, gp.base());
    draw_rays(&mut fig, gp, None);
    fig.finish()
}

/// Reach set: used edges marked on the base graph, used rays drawn short,
/// source emphasized.
pub fn render_reach(gp: &AugmentedGraph, rs: &ReachSet) -> String {
    let g = gp.base();
    let mut fig = Figure::new();
    draw_base_graph(&mut fig, g);
    for e in rs.used_edge_ids() {
        let [u, v] = g.edge(e);
        fig.line(g.point(u), g.point(v), "marked", 1.4);
    }
    draw_rays(&mut fig, gp, Some(rs));
    fig.circle(g.point(rs.source), 2.0, "source");
    fig.finish()
}

/// Envelopes over the base graph, with the region between them shaded.
pub fn render_envelopes(
    gp: &AugmentedGraph,
    envelopes: &[&EnvelopePath],
    region: Option<&Region>,
) -> String {
    let g = gp.base();
    let mut fig = Figure::new();
    if let Some(reg) = region {
        fig.polygon(&reg.polygon.vertices, "region");
    }
    draw_base_graph(&mut fig, g);
    for env in envelopes {
        let class = match env.kind {
            EnvelopeKind::Upper => "upper",
            EnvelopeKind::Lower => "lower",
        };
        for w in env.vertices.windows(2) {
            fig.line(g.point(w[0]), g.point(w[1]), class, 2.0);
        }
        let end = g.point(env.last_vertex());
        let dir = gp.rays()[env.ray].dir;
        fig.line(end, end + dir.unit_vec().scaled(0.06 * g.bbox_diameter()), class, 2.0);
    }
    if let Some(env) = envelopes.first() {
        fig.circle(g.point(env.vertices[0]), 2.0, "source");
    }
    fig.finish()
}

/// A single vertex path marked over the base graph.
pub fn render_path(g: &PlaneGraph, path: &[usize]) -> String {
    let mut fig = Figure::new();
    draw_base_graph(&mut fig, g);
    for w in path.windows(2) {
        fig.line(g.point(w[0]), g.point(w[1]), "marked", 2.0);
    }
    if let Some(&s) = path.first() {
        fig.circle(g.point(s), 2.0, "source");
    }
    fig.finish()
}

/// A rooted tree over the base graph.
pub fn render_tree(g: &PlaneGraph, tree: &RootedTree) -> String {
    let mut fig = Figure::new();
    draw_base_graph(&mut fig, g);
    for (child, parent, _) in tree.tree_edges() {
        fig.line(g.point(child), g.point(parent), "tree", 2.0);
    }
    fig.circle(g.point(tree.root), 2.0, "source");
    fig.finish()
}

/// Quadrant forest: each quadrant in its own color, quadrant axes dashed
/// through the source.
pub fn render_forest(g: &PlaneGraph, forest: &SpanningForest) -> String {
    let mut fig = Figure::new();
    draw_base_graph(&mut fig, g);
    let classes = ["q0", "q1", "q2", "q3"];
    for (child, parent, _) in forest.tree_edges() {
        let class = classes[forest.quadrant(child).unwrap_or(0) as usize];
        fig.line(g.point(child), g.point(parent), class, 2.0);
    }
    let s = g.point(forest.source);
    let reach = 0.2 * g.bbox_diameter();
    for j in 0..4 {
        let d = quadrant_center(j).rotate(-45f64.to_radians()).unit_vec();
        fig.line(s, s + d.scaled(reach), "axis", 0.6);
    }
    fig.circle(s, 2.0, "source");
    fig.finish()
}

/// Unfolded layout: placed faces, cut edges bold, quadrant axes at the
/// source image.
pub fn render_layout(layout: &UnfoldedLayout) -> String {
    let mut fig = Figure::new();
    for pose in &layout.face_pose {
        fig.polygon(pose, "face");
    }
    for (a, b) in &layout.cut_segments {
        fig.line(*a, *b, "cut", 1.4);
    }
    let s = layout.source_image;
    let reach = 0.15 * layout.bbox_diameter();
    for j in 0..4 {
        let d = quadrant_center(j).rotate(-45f64.to_radians()).unit_vec();
        fig.line(s, s + d.scaled(reach), "axis", 0.6);
    }
    fig.circle(s, 2.0, "source");
    fig.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Angle;
    use crate::graph::augment;
    use crate::paths::{envelope, reach_set, region};

    fn deg(d: f64) -> Angle {
        Angle::from_degrees(d)
    }

    #[test]
    fn renders_are_deterministic() {
        let g = crate::gen::equilateral_patch(2, 0.05, 3);
        let gp = augment(&g, deg(90.0));
        let rs = reach_set(&gp, 0, deg(45.0), deg(90.0));
        let a = render_reach(&gp, &rs);
        let b = render_reach(&gp, &rs);
        assert_eq!(a, b);
        assert!(a.starts_with("<?xml"));
        assert!(a.contains("marked"));
    }

    #[test]
    fn envelope_render_has_both_classes() {
        let g = crate::gen::rect_diagonal_grid(3, 3, 0.1, 5);
        let gp = augment(&g, deg(90.0));
        let s = crate::gen::random_interior_vertex(&g, 5);
        let up = envelope(&gp, s, deg(45.0), deg(90.0), crate::paths::EnvelopeKind::Upper);
        let lo = envelope(&gp, s, deg(45.0), deg(90.0), crate::paths::EnvelopeKind::Lower);
        let reg = region(&gp, s, deg(45.0), deg(90.0));
        let text = render_envelopes(&gp, &[&up, &lo], Some(&reg));
        assert!(text.contains("class=\"upper\""));
        assert!(text.contains("class=\"lower\""));
        assert!(text.contains("class=\"region\""));
    }

    #[test]
    fn forest_render_uses_quadrant_colors() {
        let g = crate::gen::equilateral_patch(3, 0.05, 8);
        let gp = augment(&g, deg(90.0));
        let s = crate::gen::random_interior_vertex(&g, 8);
        let forest = crate::spanning::quadrant_forest(&gp, s);
        let text = render_forest(&g, &forest);
        for class in ["q0", "q1", "q2", "q3"] {
            assert!(text.contains(&format!("class=\"{class}\"")), "missing {class}");
        }
    }

    #[test]
    fn layout_render_marks_cuts() {
        let cap = crate::cap::generate_cap(19, deg(8.0), 4).unwrap();
        let proj = crate::cap::project(&cap).unwrap();
        let gp = augment(&proj.graph, deg(90.0));
        let s = crate::gen::random_interior_vertex(&proj.graph, 4);
        let forest = crate::spanning::quadrant_forest(&gp, s);
        let cuts = crate::cap::lift_forest(&forest, &cap).unwrap();
        let layout = crate::cap::unfold(&cap, &cuts).unwrap();
        let text = render_layout(&layout);
        assert!(text.contains("class=\"face\""));
        assert!(text.contains("class=\"cut\""));
    }
}
