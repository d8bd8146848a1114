//! Graph JSON and triangle-mesh OFF reading and writing.
//!
//! Graph JSON is `{"vertices": [[x, y], ...], "edges": [[i, j], ...]}` with
//! 0-based indices; the writer additionally emits `"hull"` (CCW hull
//! indices) and, for augmented graphs, `"rays"` as `[vertex, direction°]`
//! pairs. Readers ignore the extra fields, so write-then-parse is the
//! identity on the vertex/edge core.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cap::{CapError, ConvexCap};
use crate::geom::{Point2, Point3};
use crate::graph::{AugmentedGraph, GraphError, PlaneGraph};

#[derive(Debug, Error)]
pub enum ReadError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Mesh(#[from] CapError),
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<[f64; 2]>,
    edges: Vec<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    hull: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rays: Option<Vec<(usize, f64)>>,
}

pub fn graph_to_json(g: &PlaneGraph) -> String {
    let doc = GraphJson {
        vertices: g.points().iter().map(|p| [p.x, p.y]).collect(),
        edges: g.edges().to_vec(),
        hull: Some(g.hull().to_vec()),
        rays: None,
    };
    serde_json::to_string_pretty(&doc).expect("serializable")
}

pub fn augmented_to_json(gp: &AugmentedGraph) -> String {
    let g = gp.base();
    let doc = GraphJson {
        vertices: g.points().iter().map(|p| [p.x, p.y]).collect(),
        edges: g.edges().to_vec(),
        hull: Some(g.hull().to_vec()),
        rays: Some(gp.rays().iter().map(|r| (r.origin, r.dir.degrees())).collect()),
    };
    serde_json::to_string_pretty(&doc).expect("serializable")
}

pub fn graph_from_json(s: &str) -> Result<PlaneGraph, ReadError> {
    let doc: GraphJson = serde_json::from_str(s)
        .map_err(|e| ReadError::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))?;
    let points: Vec<Point2> = doc.vertices.iter().map(|&[x, y]| Point2::new(x, y)).collect();
    Ok(PlaneGraph::new(points, doc.edges)?)
}

pub fn cap_to_off(c: &ConvexCap) -> String {
    let mut out = String::from("OFF\n");
    out.push_str(&format!(
        "{} {} {}\n",
        c.vertex_count(),
        c.triangles().len(),
        c.edges().len()
    ));
    for p in c.vertices() {
        out.push_str(&format!("{} {} {}\n", p.x, p.y, p.z));
    }
    for t in c.triangles() {
        out.push_str(&format!("3 {} {} {}\n", t[0], t[1], t[2]));
    }
    out
}

pub fn cap_from_off(s: &str) -> Result<ConvexCap, ReadError> {
    let mut tokens = Vec::new();
    for (lineno, line) in s.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        for tok in line.split_whitespace() {
            tokens.push((lineno + 1, tok));
        }
    }
    let mut it = tokens.into_iter();
    let (ln, header) =
        it.next().ok_or_else(|| ReadError::Parse("empty OFF file".into()))?;
    if header != "OFF" {
        return Err(ReadError::Parse(format!("line {ln}: expected OFF header, got {header:?}")));
    }
    let mut next_num = |what: &str| -> Result<(usize, f64), ReadError> {
        let (ln, tok) =
            it.next().ok_or_else(|| ReadError::Parse(format!("unexpected end reading {what}")))?;
        let v: f64 = tok
            .parse()
            .map_err(|_| ReadError::Parse(format!("line {ln}: bad number {tok:?} for {what}")))?;
        Ok((ln, v))
    };
    let nv = next_num("vertex count")?.1 as usize;
    let nf = next_num("face count")?.1 as usize;
    let _ne = next_num("edge count")?.1;
    let mut vertices = Vec::with_capacity(nv);
    for i in 0..nv {
        let x = next_num(&format!("vertex {i} x"))?.1;
        let y = next_num(&format!("vertex {i} y"))?.1;
        let z = next_num(&format!("vertex {i} z"))?.1;
        vertices.push(Point3::new(x, y, z));
    }
    let mut triangles = Vec::with_capacity(nf);
    for f in 0..nf {
        let (ln, arity) = next_num(&format!("face {f} arity"))?;
        if arity as usize != 3 {
            return Err(ReadError::Parse(format!(
                "line {ln}: face {f} has {arity} vertices; only triangles are supported"
            )));
        }
        let a = next_num("face index")?.1 as usize;
        let b = next_num("face index")?.1 as usize;
        let c3 = next_num("face index")?.1 as usize;
        triangles.push([a, b, c3]);
    }
    Ok(ConvexCap::from_parts(vertices, triangles)?)
}
