//! Triangulations of polygonal domains and the structured anisotropic
//! family on the unit square.

use std::collections::BTreeMap;
use std::fmt;
use std::io::{BufRead, Write};
use std::path::Path;

use crate::error::{FemError, Result};
use crate::geometry::{Point2, Triangle};

/// An edge with its two vertex indices (`lo < hi`) and adjacent triangles.
#[derive(Debug, Clone, PartialEq)]
pub struct Edge {
    pub vertices: [usize; 2],
    pub triangles: Vec<usize>,
}

impl Edge {
    pub fn is_boundary(&self) -> bool {
        self.triangles.len() == 1
    }
}

/// Immutable triangulation with derived edge connectivity.
///
/// Triangles are stored counter-clockwise. Edges are numbered by sorted
/// vertex pair. Local edge `i` of a triangle is opposite its vertex `i`.
#[derive(Debug, Clone)]
pub struct Mesh {
    vertices: Vec<Point2>,
    triangles: Vec<[usize; 3]>,
    edges: Vec<Edge>,
    triangle_edges: Vec<[usize; 3]>,
    boundary_vertex: Vec<bool>,
}

impl Mesh {
    /// Builds the mesh and derives its edges. Clockwise triangles are
    /// reoriented; index errors are rejected. Other invariants are
    /// reported by [`validate`].
    pub fn new(vertices: Vec<Point2>, triangles: Vec<[usize; 3]>) -> Result<Self> {
        let nv = vertices.len();
        let mut triangles = triangles;
        for (t, tri) in triangles.iter_mut().enumerate() {
            if let Some(&v) = tri.iter().find(|&&v| v >= nv) {
                return Err(FemError::VertexOutOfRange {
                    triangle: t,
                    vertex: v,
                    count: nv,
                });
            }
            let g = Triangle::new(vertices[tri[0]], vertices[tri[1]], vertices[tri[2]]);
            if g.signed_area() < 0.0 {
                tri.swap(1, 2);
            }
        }

        let mut by_key: BTreeMap<(usize, usize), Vec<(usize, usize)>> = BTreeMap::new();
        for (t, tri) in triangles.iter().enumerate() {
            for i in 0..3 {
                let (a, b) = (tri[(i + 1) % 3], tri[(i + 2) % 3]);
                by_key.entry((a.min(b), a.max(b))).or_default().push((t, i));
            }
        }
        let mut triangle_edges = vec![[usize::MAX; 3]; triangles.len()];
        let mut edges = Vec::with_capacity(by_key.len());
        for (e, ((lo, hi), owners)) in by_key.into_iter().enumerate() {
            for &(t, i) in &owners {
                triangle_edges[t][i] = e;
            }
            edges.push(Edge {
                vertices: [lo, hi],
                triangles: owners.into_iter().map(|(t, _)| t).collect(),
            });
        }
        let mut boundary_vertex = vec![false; nv];
        for e in edges.iter().filter(|e| e.is_boundary()) {
            boundary_vertex[e.vertices[0]] = true;
            boundary_vertex[e.vertices[1]] = true;
        }
        Ok(Self {
            vertices,
            triangles,
            edges,
            triangle_edges,
            boundary_vertex,
        })
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Global edge indices of triangle `t`, local edge `i` opposite vertex `i`.
    pub fn triangle_edges(&self, t: usize) -> [usize; 3] {
        self.triangle_edges[t]
    }

    pub fn is_boundary_vertex(&self, v: usize) -> bool {
        self.boundary_vertex[v]
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_triangles(&self) -> usize {
        self.triangles.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn num_boundary_edges(&self) -> usize {
        self.edges.iter().filter(|e| e.is_boundary()).count()
    }

    pub fn triangle(&self, t: usize) -> Triangle {
        let [a, b, c] = self.triangles[t];
        Triangle::new(self.vertices[a], self.vertices[b], self.vertices[c])
    }

    pub fn edge_midpoint(&self, e: usize) -> Point2 {
        let [a, b] = self.edges[e].vertices;
        (self.vertices[a] + self.vertices[b]) * 0.5
    }

    pub fn edge_length(&self, e: usize) -> f64 {
        let [a, b] = self.edges[e].vertices;
        self.vertices[a].distance(self.vertices[b])
    }

    /// Unit normal of edge `e`: the lower-to-higher index direction rotated
    /// 90 degrees clockwise.
    pub fn edge_normal(&self, e: usize) -> Point2 {
        let [a, b] = self.edges[e].vertices;
        let d = self.vertices[b] - self.vertices[a];
        d.rotate_cw() * (1.0 / d.norm())
    }

    /// +1 when the global normal of local edge `i` of triangle `t` points
    /// out of `t`, -1 otherwise.
    pub fn edge_sign(&self, t: usize, i: usize) -> f64 {
        let tri = self.triangles[t];
        if tri[(i + 1) % 3] < tri[(i + 2) % 3] {
            1.0
        } else {
            -1.0
        }
    }

    /// The triangle consisting of the reference element alone.
    pub fn reference_triangle() -> Self {
        Self::new(
            vec![Point2::new(0.0, 0.0), Point2::new(1.0, 0.0), Point2::new(0.0, 1.0)],
            vec![[0, 1, 2]],
        )
        .expect("static mesh")
    }
}

/// Structured mesh of the unit square made of `n` horizontal strips of
/// height `1/n`. Lines `y = k/n` with even `k` carry the points `x = j/m`;
/// odd lines carry `0, 1/(2m), 3/(2m), ..., (2m-1)/(2m), 1`. Each strip is
/// closed by merging its two point rows left to right; at equal abscissae
/// the row with `m + 1` points advances first, so the mesh is mirror
/// symmetric about `x = 1/2`.
///
/// Produces `(2m+1)n` triangles, `mn + m + 3n/2 + 1` vertices and
/// `3mn + m + 5n/2` edges.
pub fn generate_aniso(m: usize, n: usize) -> Result<Mesh> {
    if m == 0 {
        return Err(FemError::InvalidParameters("M must be positive".into()));
    }
    if n == 0 || !n.is_multiple_of(2) {
        return Err(FemError::InvalidParameters(format!(
            "N must be a positive even integer, got {n}"
        )));
    }
    // abscissae in units of 1/(2m)
    let row_ticks = |k: usize| -> Vec<usize> {
        if k.is_multiple_of(2) {
            (0..=m).map(|j| 2 * j).collect()
        } else {
            std::iter::once(0)
                .chain((0..m).map(|j| 2 * j + 1))
                .chain(std::iter::once(2 * m))
                .collect()
        }
    };

    let mut vertices = Vec::with_capacity(m * n + m + 3 * n / 2 + 1);
    let mut rows: Vec<(Vec<usize>, usize)> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let ticks = row_ticks(k);
        let first = vertices.len();
        let y = k as f64 / n as f64;
        for &t in &ticks {
            vertices.push(Point2::new(t as f64 / (2 * m) as f64, y));
        }
        rows.push((ticks, first));
    }

    let mut triangles = Vec::with_capacity((2 * m + 1) * n);
    for k in 0..n {
        let (lower, lo0) = (&rows[k].0, rows[k].1);
        let (upper, up0) = (&rows[k + 1].0, rows[k + 1].1);
        let lower_is_even = k % 2 == 0;
        let (mut i, mut j) = (0, 0);
        while i + 1 < lower.len() || j + 1 < upper.len() {
            let advance_lower = if j + 1 == upper.len() {
                true
            } else if i + 1 == lower.len() {
                false
            } else {
                let (xl, xu) = (lower[i + 1], upper[j + 1]);
                xl < xu || (xl == xu && lower_is_even)
            };
            if advance_lower {
                triangles.push([lo0 + i, lo0 + i + 1, up0 + j]);
                i += 1;
            } else {
                triangles.push([lo0 + i, up0 + j + 1, up0 + j]);
                j += 1;
            }
        }
    }
    Mesh::new(vertices, triangles)
}

/// `2 * round(m^alpha / 2)`, the even integer closest to `m^alpha`.
pub fn even_n_for(m: usize, alpha: f64) -> usize {
    let n = 2 * ((m as f64).powf(alpha) / 2.0).round() as usize;
    n.max(2)
}

/// `n/(2m²) + 1/(2n)`: the circumradius scale of isosceles strip elements of
/// half-width `1/m`, reported beside the measured maximum.
pub fn r_paper(m: usize, n: usize) -> f64 {
    let (m, n) = (m as f64, n as f64);
    n / (2.0 * m * m) + 1.0 / (2.0 * n)
}

#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    DegenerateTriangle { triangle: usize },
    /// An edge with more than two triangles, or two triangles on the same side.
    NonManifoldEdge { edge: [usize; 2], triangles: Vec<usize> },
    HangingNode { vertex: usize, edge: [usize; 2] },
    UnusedVertex { vertex: usize },
    NonFiniteVertex { vertex: usize },
    Euler { vertices: usize, edges: usize, triangles: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DegenerateTriangle { triangle } => write!(f, "triangle {triangle} is degenerate"),
            Violation::NonManifoldEdge { edge, triangles } => {
                write!(f, "edge {}-{} is non-manifold (triangles {:?})", edge[0], edge[1], triangles)
            }
            Violation::HangingNode { vertex, edge } => {
                write!(f, "vertex {vertex} lies inside edge {}-{}", edge[0], edge[1])
            }
            Violation::UnusedVertex { vertex } => write!(f, "vertex {vertex} belongs to no triangle"),
            Violation::NonFiniteVertex { vertex } => write!(f, "vertex {vertex} has non-finite coordinates"),
            Violation::Euler { vertices, edges, triangles } => write!(
                f,
                "V - E + T = {} - {} + {} != 1",
                vertices, edges, triangles
            ),
        }
    }
}

/// Lists every broken mesh invariant; empty for a proper triangulation of
/// a simply connected domain.
pub fn validate(mesh: &Mesh) -> Vec<Violation> {
    let mut out = Vec::new();
    let verts = mesh.vertices();

    for (v, p) in verts.iter().enumerate() {
        if !p.is_finite() {
            out.push(Violation::NonFiniteVertex { vertex: v });
        }
    }
    let mut used = vec![false; verts.len()];
    for (t, tri) in mesh.triangles().iter().enumerate() {
        tri.iter().for_each(|&v| used[v] = true);
        if mesh.triangle(t).is_degenerate() {
            out.push(Violation::DegenerateTriangle { triangle: t });
        }
    }
    for (v, u) in used.iter().enumerate() {
        if !u {
            out.push(Violation::UnusedVertex { vertex: v });
        }
    }

    for edge in mesh.edges() {
        let folded = match edge.triangles.as_slice() {
            [_] => false,
            [t1, t2] => {
                let [a, b] = edge.vertices.map(|v| verts[v]);
                let side = |t: usize| {
                    let opposite = mesh.triangles()[t]
                        .into_iter()
                        .find(|v| !edge.vertices.contains(v))
                        .expect("triangle has a vertex off the edge");
                    (b - a).cross(verts[opposite] - a).signum()
                };
                side(*t1) == side(*t2)
            }
            _ => true,
        };
        if folded {
            out.push(Violation::NonManifoldEdge {
                edge: edge.vertices,
                triangles: edge.triangles.clone(),
            });
        }
    }

    find_hanging_nodes(mesh, &mut out);

    let (v, e, t) = (mesh.num_vertices(), mesh.num_edges(), mesh.num_triangles());
    if v + t != e + 1 {
        out.push(Violation::Euler {
            vertices: v,
            edges: e,
            triangles: t,
        });
    }
    out
}

/// Vertices strictly inside an edge, found through a uniform bucket grid.
fn find_hanging_nodes(mesh: &Mesh, out: &mut Vec<Violation>) {
    let verts = mesh.vertices();
    if verts.is_empty() || verts.iter().any(|p| !p.is_finite()) {
        return;
    }
    let (mut lo, mut hi) = (verts[0], verts[0]);
    for p in verts {
        lo = Point2::new(lo.x.min(p.x), lo.y.min(p.y));
        hi = Point2::new(hi.x.max(p.x), hi.y.max(p.y));
    }
    let cells = ((verts.len() as f64).sqrt().ceil() as usize).max(1);
    let span = Point2::new((hi.x - lo.x).max(f64::MIN_POSITIVE), (hi.y - lo.y).max(f64::MIN_POSITIVE));
    let cell_of = |p: Point2| -> (usize, usize) {
        let cx = (((p.x - lo.x) / span.x) * cells as f64) as usize;
        let cy = (((p.y - lo.y) / span.y) * cells as f64) as usize;
        (cx.min(cells - 1), cy.min(cells - 1))
    };
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); cells * cells];
    for (v, p) in verts.iter().enumerate() {
        let (cx, cy) = cell_of(*p);
        buckets[cy * cells + cx].push(v);
    }
    for edge in mesh.edges() {
        let [ia, ib] = edge.vertices;
        let (a, b) = (verts[ia], verts[ib]);
        let len2 = (b - a).norm_squared();
        if len2 == 0.0 {
            continue;
        }
        let (c0, c1) = (cell_of(Point2::new(a.x.min(b.x), a.y.min(b.y))), cell_of(Point2::new(a.x.max(b.x), a.y.max(b.y))));
        for cy in c0.1..=c1.1 {
            for cx in c0.0..=c1.0 {
                for &v in &buckets[cy * cells + cx] {
                    if v == ia || v == ib {
                        continue;
                    }
                    let p = verts[v];
                    let s = (p - a).dot(b - a) / len2;
                    let dist = (b - a).cross(p - a).abs() / len2.sqrt();
                    if s > 1e-12 && s < 1.0 - 1e-12 && dist <= 1e-12 * len2.sqrt() {
                        out.push(Violation::HangingNode {
                            vertex: v,
                            edge: edge.vertices,
                        });
                    }
                }
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeshStats {
    /// Largest element diameter.
    pub h: f64,
    /// Largest element circumradius.
    pub r: f64,
    pub elements: usize,
    pub vertices: usize,
    pub edges: usize,
    pub interior_edges: usize,
    pub boundary_edges: usize,
}

pub fn stats(mesh: &Mesh) -> Result<MeshStats> {
    let mut h = 0.0f64;
    let mut r = 0.0f64;
    for t in 0..mesh.num_triangles() {
        let tri = mesh.triangle(t);
        h = h.max(tri.diameter());
        r = r.max(tri.circumradius()?);
    }
    let boundary_edges = mesh.num_boundary_edges();
    Ok(MeshStats {
        h,
        r,
        elements: mesh.num_triangles(),
        vertices: mesh.num_vertices(),
        edges: mesh.num_edges(),
        interior_edges: mesh.num_edges() - boundary_edges,
        boundary_edges,
    })
}

/// Writes the text format: `vertices V`, V coordinate lines, `triangles T`,
/// T lines of 0-based indices.
pub fn write_mesh<W: Write>(mesh: &Mesh, mut out: W) -> Result<()> {
    writeln!(out, "vertices {}", mesh.num_vertices())?;
    for p in mesh.vertices() {
        writeln!(out, "{:.16e} {:.16e}", p.x, p.y)?;
    }
    writeln!(out, "triangles {}", mesh.num_triangles())?;
    for t in mesh.triangles() {
        writeln!(out, "{} {} {}", t[0], t[1], t[2])?;
    }
    Ok(())
}

pub fn write_mesh_file(mesh: &Mesh, path: impl AsRef<Path>) -> Result<()> {
    let file = std::io::BufWriter::new(std::fs::File::create(path)?);
    write_mesh(mesh, file)
}

pub fn read_mesh<R: BufRead>(input: R) -> Result<Mesh> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| match l {
            Ok(s) => !(s.trim().is_empty() || s.trim_start().starts_with('#')),
            Err(_) => true,
        });
    let mut last_line = 0;
    let mut next = |what: &str| -> Result<(usize, String)> {
        match lines.next() {
            Some((n, Ok(s))) => {
                last_line = n;
                Ok((n, s))
            }
            Some((_, Err(e))) => Err(e.into()),
            None => Err(FemError::Parse {
                line: last_line + 1,
                message: format!("unexpected end of file, expected {what}"),
            }),
        }
    };
    let header = |n: usize, s: &str, key: &str| -> Result<usize> {
        let mut it = s.split_whitespace();
        match (it.next(), it.next().map(str::parse::<usize>), it.next()) {
            (Some(k), Some(Ok(count)), None) if k == key => Ok(count),
            _ => Err(FemError::Parse {
                line: n,
                message: format!("expected `{key} <count>`"),
            }),
        }
    };

    let (n, s) = next("`vertices <count>`")?;
    let nv = header(n, &s, "vertices")?;
    let mut vertices = Vec::with_capacity(nv);
    for _ in 0..nv {
        let (n, s) = next("a vertex line")?;
        let coords: Vec<f64> = s
            .split_whitespace()
            .map(str::parse)
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| FemError::Parse {
                line: n,
                message: format!("bad coordinate: {e}"),
            })?;
        match coords.as_slice() {
            [x, y] => vertices.push(Point2::new(*x, *y)),
            _ => {
                return Err(FemError::Parse {
                    line: n,
                    message: "expected two coordinates".into(),
                })
            }
        }
    }
    let (n, s) = next("`triangles <count>`")?;
    let nt = header(n, &s, "triangles")?;
    let mut triangles = Vec::with_capacity(nt);
    for _ in 0..nt {
        let (n, s) = next("a triangle line")?;
        let idx: Vec<usize> = s
            .split_whitespace()
            .map(str::parse)
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| FemError::Parse {
                line: n,
                message: format!("bad vertex index: {e}"),
            })?;
        match idx.as_slice() {
            [a, b, c] => {
                if let Some(&bad) = [a, b, c].into_iter().find(|&&v| v >= nv) {
                    return Err(FemError::Parse {
                        line: n,
                        message: format!("vertex index {bad} out of range (0..{nv})"),
                    });
                }
                triangles.push([*a, *b, *c]);
            }
            _ => {
                return Err(FemError::Parse {
                    line: n,
                    message: "expected three vertex indices".into(),
                })
            }
        }
    }
    if let Ok((n, _)) = next("end of file") {
        return Err(FemError::Parse {
            line: n,
            message: "trailing content after triangles".into(),
        });
    }
    Mesh::new(vertices, triangles)
}

pub fn read_mesh_file(path: impl AsRef<Path>) -> Result<Mesh> {
    read_mesh(std::io::BufReader::new(std::fs::File::open(path)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(m: usize, n: usize) -> (usize, usize, usize) {
        ((2 * m + 1) * n, m * n + m + 3 * n / 2 + 1, 3 * m * n + m + 5 * n / 2)
    }

    #[test]
    fn fig1_mesh_has_180_elements() {
        let mesh = generate_aniso(4, 20).unwrap();
        assert_eq!(mesh.num_triangles(), 180);
        assert!(validate(&mesh).is_empty());
    }

    #[test]
    fn counts_for_m10_n32() {
        let mesh = generate_aniso(10, 32).unwrap();
        assert_eq!((mesh.num_triangles(), mesh.num_vertices(), mesh.num_edges()), (672, 379, 1050));
        assert_eq!(mesh.num_vertices() + mesh.num_triangles(), mesh.num_edges() + 1);
    }

    #[test]
    fn smallest_mesh_by_enumeration() {
        let mesh = generate_aniso(2, 2).unwrap();
        assert_eq!(counts(2, 2), (10, 10, 19));
        // rows: 3 + 4 + 3 points; strips: 2 + 3 and 3 + 2 segments
        assert_eq!(mesh.num_vertices(), 3 + 4 + 3);
        assert_eq!(mesh.num_triangles(), 5 + 5);
        assert_eq!(mesh.num_edges(), 19);
        assert_eq!(mesh.num_boundary_edges(), 2 * 2 + 2 * 2);
        for t in 0..mesh.num_triangles() {
            assert!(mesh.triangle(t).signed_area() > 0.0);
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(generate_aniso(0, 4).is_err());
        assert!(generate_aniso(3, 5).is_err());
        assert!(generate_aniso(3, 0).is_err());
    }

    #[test]
    fn even_n_matches_table_rows() {
        assert_eq!(even_n_for(10, 1.5), 32);
        assert_eq!(even_n_for(40, 1.5), 252);
        assert_eq!(even_n_for(80, 1.5), 716);
        let table = [(20, 90), (30, 164), (50, 354), (60, 464), (70, 586), (90, 854), (100, 1000)];
        for (m, n) in table {
            assert_eq!(even_n_for(m, 1.5), n);
        }
    }

    #[test]
    fn stats_examples() {
        let s = stats(&generate_aniso(10, 32).unwrap()).unwrap();
        assert!((s.h - 0.1).abs() < 1e-15);
        assert!((s.r - 0.055625).abs() < 1e-12, "R = {}", s.r);
        assert!((r_paper(10, 32) - 0.175625).abs() < 1e-15);
        let s = stats(&Mesh::reference_triangle()).unwrap();
        assert!((s.h - 2f64.sqrt()).abs() < 1e-15);
        assert!((s.r - 0.5f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn hanging_node_is_reported() {
        let v = vec![
            Point2::new(0.0, 0.0),
            Point2::new(2.0, 0.0),
            Point2::new(0.0, 2.0),
            Point2::new(1.0, 0.0),
            Point2::new(1.0, -1.0),
        ];
        let t = vec![[0, 1, 2], [0, 3, 4], [3, 1, 4]];
        let mesh = Mesh::new(v, t).unwrap();
        let violations = validate(&mesh);
        let hanging: Vec<_> = violations
            .iter()
            .filter(|v| matches!(v, Violation::HangingNode { .. }))
            .collect();
        assert_eq!(hanging, vec![&Violation::HangingNode { vertex: 3, edge: [0, 1] }]);
    }

    #[test]
    fn overlapping_triangles_are_non_manifold() {
        let v = vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(0.0, 1.0),
            Point2::new(0.6, 0.6),
        ];
        let mesh = Mesh::new(v, vec![[0, 1, 2], [0, 1, 3]]).unwrap();
        let violations = validate(&mesh);
        assert!(violations
            .iter()
            .any(|v| matches!(v, Violation::NonManifoldEdge { edge: [0, 1], .. })));
    }

    #[test]
    fn out_of_range_index_is_rejected() {
        let v = vec![Point2::new(0.0, 0.0), Point2::new(1.0, 0.0), Point2::new(0.0, 1.0)];
        assert!(matches!(
            Mesh::new(v, vec![[0, 1, 3]]),
            Err(FemError::VertexOutOfRange { vertex: 3, .. })
        ));
    }

    #[test]
    fn edge_signs_follow_global_normal() {
        let mesh = generate_aniso(3, 4).unwrap();
        for t in 0..mesh.num_triangles() {
            let tri = mesh.triangle(t);
            let c = tri.centroid();
            for i in 0..3 {
                let e = mesh.triangle_edges(t)[i];
                let outward = (mesh.edge_midpoint(e) - c).dot(mesh.edge_normal(e)) > 0.0;
                assert_eq!(mesh.edge_sign(t, i) > 0.0, outward);
            }
        }
    }

    #[test]
    fn roundtrip_text_format() {
        let mesh = generate_aniso(2, 2).unwrap();
        let mut buf = Vec::new();
        write_mesh(&mesh, &mut buf).unwrap();
        let back = read_mesh(buf.as_slice()).unwrap();
        assert_eq!(back.vertices(), mesh.vertices());
        assert_eq!(back.triangles(), mesh.triangles());
        assert_eq!(back.num_edges(), mesh.num_edges());
    }

    #[test]
    fn comments_are_skipped() {
        let text = "# unit triangle\nvertices 3\n0 0\n1 0\n# apex\n0 1\ntriangles 1\n0 1 2\n";
        let mesh = read_mesh(text.as_bytes()).unwrap();
        assert_eq!(mesh.num_triangles(), 1);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let text = "vertices 3\n0 0\n1 0\n0 1\ntriangles 1\n0 1 7\n";
        match read_mesh(text.as_bytes()) {
            Err(FemError::Parse { line, .. }) => assert_eq!(line, 6),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(matches!(read_mesh("".as_bytes()), Err(FemError::Parse { line: 1, .. })));
        assert!(matches!(
            read_mesh("vertices 2\n0 0\n1 x\n".as_bytes()),
            Err(FemError::Parse { line: 3, .. })
        ));
        assert!(matches!(
            read_mesh("vertices 1\n0 0\n".as_bytes()),
            Err(FemError::Parse { line: 3, .. })
        ));
    }
}
