//! Seeded generators for test triangulations.
//!
//! All generators are deterministic in their seed and return graphs that
//! validate against the stated angle bound by construction.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::geom::Point2;
use crate::graph::PlaneGraph;

/// Hexagonal patch of the unit equilateral grid with `rings` rings around
/// the center (vertex count `1 + 3k(k+1)`), interior vertices perturbed by
/// up to `jitter` (in edge lengths). With `jitter = 0` every internal angle
/// is exactly 60°; jitter up to roughly 0.1 keeps the patch comfortably
/// non-obtuse.
pub fn equilateral_patch(rings: usize, jitter: f64, seed: u64) -> PlaneGraph {
    assert!(rings >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = rings as i64;
    // axial coordinates (q, r) with |q|, |r|, |q + r| <= k, in a fixed
    // order so the jitter stream is reproducible
    let mut index = std::collections::HashMap::new();
    let mut coords = Vec::new();
    let mut points = Vec::new();
    for q in -k..=k {
        for r in -k..=k {
            if (q + r).abs() > k {
                continue;
            }
            let x = q as f64 + 0.5 * r as f64;
            let y = r as f64 * 3f64.sqrt() / 2.0;
            index.insert((q, r), points.len());
            coords.push((q, r));
            points.push(Point2::new(x, y));
        }
    }
    // perturb interior vertices only, keeping the hexagon boundary straight
    for (i, &(q, r)) in coords.iter().enumerate() {
        let boundary = q.abs() == k || r.abs() == k || (q + r).abs() == k;
        if !boundary && jitter > 0.0 {
            let ang = rng.random_range(0.0..std::f64::consts::TAU);
            let rad = jitter * rng.random_range(0.0..1.0f64);
            points[i] = Point2::new(points[i].x + rad * ang.cos(), points[i].y + rad * ang.sin());
        }
    }
    let mut edges = Vec::new();
    for (i, &(q, r)) in coords.iter().enumerate() {
        for (dq, dr) in [(1, 0), (0, 1), (-1, 1)] {
            if let Some(&j) = index.get(&(q + dq, r + dr)) {
                edges.push([i, j]);
            }
        }
    }
    edges.sort();
    let g = PlaneGraph::new(points, edges).expect("generated patch is well-formed");
    debug_assert!(g.validate(crate::geom::Angle::from_degrees(90.0)).is_valid());
    g
}

/// Rectangular grid with randomized column widths and row heights in
/// `[1 - size_jitter, 1 + size_jitter]` and one randomly oriented diagonal
/// per cell. Every triangle has its right angle at a grid corner, so the
/// result is non-obtuse for any jitter below 1.
pub fn rect_diagonal_grid(cols: usize, rows: usize, size_jitter: f64, seed: u64) -> PlaneGraph {
    assert!(cols >= 1 && rows >= 1 && size_jitter < 1.0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut xs = vec![0.0];
    for _ in 0..cols {
        xs.push(xs.last().unwrap() + 1.0 + rng.random_range(-size_jitter..=size_jitter));
    }
    let mut ys = vec![0.0];
    for _ in 0..rows {
        ys.push(ys.last().unwrap() + 1.0 + rng.random_range(-size_jitter..=size_jitter));
    }
    grid_graph(&xs, &ys, &mut rng)
}

/// Uniform square grid with one randomly oriented diagonal per cell; every
/// edge direction is a multiple of 45°.
pub fn grid45(cols: usize, rows: usize, seed: u64) -> PlaneGraph {
    assert!(cols >= 1 && rows >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let xs: Vec<f64> = (0..=cols).map(|i| i as f64).collect();
    let ys: Vec<f64> = (0..=rows).map(|j| j as f64).collect();
    grid_graph(&xs, &ys, &mut rng)
}

fn grid_graph(xs: &[f64], ys: &[f64], rng: &mut ChaCha8Rng) -> PlaneGraph {
    let cols = xs.len() - 1;
    let rows = ys.len() - 1;
    let at = |i: usize, j: usize| j * (cols + 1) + i;
    let mut points = Vec::with_capacity((cols + 1) * (rows + 1));
    for &y in ys {
        for &x in xs {
            points.push(Point2::new(x, y));
        }
    }
    let mut edges = Vec::new();
    for j in 0..=rows {
        for i in 0..cols {
            edges.push([at(i, j), at(i + 1, j)]);
        }
    }
    for j in 0..rows {
        for i in 0..=cols {
            edges.push([at(i, j), at(i, j + 1)]);
        }
    }
    for j in 0..rows {
        for i in 0..cols {
            if rng.random_bool(0.5) {
                edges.push([at(i, j), at(i + 1, j + 1)]);
            } else {
                edges.push([at(i + 1, j), at(i, j + 1)]);
            }
        }
    }
    let g = PlaneGraph::new(points, edges).expect("generated grid is well-formed");
    debug_assert!(g.validate(crate::geom::Angle::from_degrees(90.0)).is_valid());
    g
}

/// A deterministic pseudo-random interior vertex.
pub fn random_interior_vertex(g: &PlaneGraph, seed: u64) -> usize {
    let interior: Vec<usize> = g.interior_vertices().collect();
    assert!(!interior.is_empty(), "graph has no interior vertices");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    interior[rng.random_range(0..interior.len())]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Angle;

    #[test]
    fn equilateral_patch_counts_and_validity() {
        let g = equilateral_patch(2, 0.0, 1);
        assert_eq!(g.vertex_count(), 19);
        let r = g.validate(Angle::from_degrees(60.0));
        assert!(r.is_valid(), "{r}");
        assert_eq!(g.hull().len(), 12);
    }

    #[test]
    fn perturbed_patch_stays_non_obtuse() {
        for seed in 0..5 {
            let g = equilateral_patch(3, 0.08, seed);
            let r = g.validate(Angle::from_degrees(90.0));
            assert!(r.is_valid(), "seed {seed}: {r}");
        }
    }

    #[test]
    fn rect_grid_valid_and_right_angled() {
        for seed in 0..5 {
            let g = rect_diagonal_grid(4, 3, 0.2, seed);
            let r = g.validate(Angle::from_degrees(90.0));
            assert!(r.is_valid(), "seed {seed}: {r}");
            assert!((r.max_internal_angle_deg - 90.0).abs() < 1e-9);
        }
    }

    #[test]
    fn grid45_directions_are_45_multiples() {
        let g = grid45(3, 3, 7);
        for e in 0..g.edge_count() {
            let [u, _] = g.edge(e);
            let d = g.edge_dir(e, u).degrees();
            let snapped = (d / 45.0).round() * 45.0;
            assert!((d - snapped).abs() < 1e-9, "direction {d}");
        }
        assert!(g.validate(Angle::from_degrees(90.0)).is_valid());
    }
}
