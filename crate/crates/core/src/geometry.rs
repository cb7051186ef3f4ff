//! Domain geometry: piecewise-linear boundary loops, point classification
//! and cell clipping.
//!
//! A domain is a set of closed polyline loops. The outer loop is oriented
//! counterclockwise (positive shoelace area), hole loops clockwise, so the
//! material always lies to the left of an oriented boundary edge. Every edge
//! carries a Dirichlet or Neumann tag. The boundary resolution is independent
//! of the finite element mesh: a single background cell may contain an entire
//! hole.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::float::FloatExt;
use crate::Result;

/// 2D vector with elementwise arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

/// Points and vectors share one representation.
pub type Point2 = Vec2;

impl Vec2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Vec2 { x, y }
    }

    pub fn dot(self, other: Vec2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3D cross product.
    pub fn cross(self, other: Vec2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn norm_squared(self) -> f64 {
        self.x * self.x + self.y * self.y
    }

    pub fn normalized(self) -> Vec2 {
        let n = self.norm();
        Vec2::new(self.x / n, self.y / n)
    }

    /// Rotation by 90 degrees counterclockwise.
    pub fn perp(self) -> Vec2 {
        Vec2::new(-self.y, self.x)
    }

    pub fn rotated(self, theta: f64) -> Vec2 {
        let (s, c) = (theta.sin(), theta.cos());
        Vec2::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    pub fn distance(self, other: Vec2) -> f64 {
        (self - other).norm()
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl core::ops::Add for Vec2 {
    type Output = Vec2;
    fn add(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl core::ops::Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl core::ops::Mul<f64> for Vec2 {
    type Output = Vec2;
    fn mul(self, s: f64) -> Vec2 {
        Vec2::new(self.x * s, self.y * s)
    }
}

impl core::ops::Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

/// Boundary condition tag attached to a domain boundary edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundaryTag {
    Dirichlet,
    Neumann,
}

/// One closed polyline loop; edge `i` runs from `vertices[i]` to
/// `vertices[(i+1) % n]` and carries `tags[i]`.
#[derive(Debug, Clone)]
pub struct BoundaryLoop {
    pub vertices: Vec<Point2>,
    pub tags: Vec<BoundaryTag>,
}

impl BoundaryLoop {
    pub fn uniform(vertices: Vec<Point2>, tag: BoundaryTag) -> Self {
        let tags = vec![tag; vertices.len()];
        BoundaryLoop { vertices, tags }
    }

    /// Shoelace area; positive for counterclockwise loops.
    pub fn signed_area(&self) -> f64 {
        shoelace(&self.vertices)
    }

    pub fn edges(&self) -> impl Iterator<Item = (Point2, Point2, BoundaryTag)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n], self.tags[i]))
    }
}

/// The computational domain as a set of tagged boundary loops.
#[derive(Debug, Clone)]
pub struct BoundaryRep {
    pub loops: Vec<BoundaryLoop>,
    diameter: f64,
}

/// Classification of a point against a domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointLocation {
    Inside,
    Outside,
    OnBoundary,
}

fn shoelace(vertices: &[Point2]) -> f64 {
    let n = vertices.len();
    let mut a = 0.0;
    for i in 0..n {
        a += vertices[i].cross(vertices[(i + 1) % n]);
    }
    0.5 * a
}

impl BoundaryRep {
    /// Builds a domain from loops, checking the structural invariants:
    /// at least 3 vertices per loop, no zero-length edges, finite
    /// coordinates, nonzero signed area.
    pub fn new(loops: Vec<BoundaryLoop>) -> Result<Self> {
        if loops.is_empty() {
            return Err(Error::InvalidGeometry("no loops".into()));
        }
        let mut lo = Vec2::new(f64::INFINITY, f64::INFINITY);
        let mut hi = Vec2::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for lp in &loops {
            if lp.vertices.len() < 3 {
                return Err(Error::InvalidGeometry("loop with fewer than 3 vertices".into()));
            }
            if lp.tags.len() != lp.vertices.len() {
                return Err(Error::InvalidGeometry("tag count != edge count".into()));
            }
            for v in &lp.vertices {
                if !v.is_finite() {
                    return Err(Error::InvalidGeometry("non-finite vertex".into()));
                }
                lo.x = lo.x.min(v.x);
                lo.y = lo.y.min(v.y);
                hi.x = hi.x.max(v.x);
                hi.y = hi.y.max(v.y);
            }
        }
        let diameter = (hi - lo).norm();
        for lp in &loops {
            for (a, b, _) in lp.edges() {
                if a.distance(b) <= 1e-14 * diameter.max(1.0) {
                    return Err(Error::InvalidGeometry("zero-length edge".into()));
                }
            }
            if lp.signed_area().abs() <= 1e-14 * diameter * diameter {
                return Err(Error::InvalidGeometry("loop with zero area".into()));
            }
        }
        Ok(BoundaryRep { loops, diameter })
    }

    /// Domain bounding-box diagonal, the length scale for tolerances.
    pub fn diameter(&self) -> f64 {
        self.diameter
    }

    /// Geometric tolerance: points closer than this to the boundary
    /// classify as on it.
    pub fn tol(&self) -> f64 {
        1e-12 * self.diameter
    }

    pub fn bounding_box(&self) -> (Point2, Point2) {
        let mut lo = Vec2::new(f64::INFINITY, f64::INFINITY);
        let mut hi = Vec2::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for lp in &self.loops {
            for v in &lp.vertices {
                lo.x = lo.x.min(v.x);
                lo.y = lo.y.min(v.y);
                hi.x = hi.x.max(v.x);
                hi.y = hi.y.max(v.y);
            }
        }
        (lo, hi)
    }

    /// Sum of loop areas: the area enclosed by the domain (holes subtract).
    pub fn area(&self) -> f64 {
        self.loops.iter().map(|l| l.signed_area()).sum()
    }

    pub fn edges(&self) -> impl Iterator<Item = (Point2, Point2, BoundaryTag)> + '_ {
        self.loops.iter().flat_map(|l| l.edges())
    }

    /// Distance from `p` to the nearest boundary edge.
    pub fn boundary_distance(&self, p: Point2) -> f64 {
        let mut d = f64::INFINITY;
        for (a, b, _) in self.edges() {
            d = d.min(point_segment_distance(p, a, b));
        }
        d
    }
}

pub(crate) fn point_segment_distance(p: Point2, a: Point2, b: Point2) -> f64 {
    let d = b - a;
    let l2 = d.norm_squared();
    if l2 == 0.0 {
        return p.distance(a);
    }
    let t = ((p - a).dot(d) / l2).clamp(0.0, 1.0);
    p.distance(a + d * t)
}

/// Winding-number point classification with an absolute on-boundary band
/// of width [`BoundaryRep::tol`].
pub fn point_in_domain(rep: &BoundaryRep, p: Point2) -> PointLocation {
    point_in_domain_tol(rep, p, rep.tol())
}

pub(crate) fn point_in_domain_tol(rep: &BoundaryRep, p: Point2, tol: f64) -> PointLocation {
    if rep.boundary_distance(p) <= tol {
        return PointLocation::OnBoundary;
    }
    let mut winding = 0i32;
    for lp in &rep.loops {
        let n = lp.vertices.len();
        for i in 0..n {
            let a = lp.vertices[i];
            let b = lp.vertices[(i + 1) % n];
            // Sunday's winding rule with half-open vertical ranges.
            if a.y <= p.y {
                if b.y > p.y && (b - a).cross(p - a) > 0.0 {
                    winding += 1;
                }
            } else if b.y <= p.y && (b - a).cross(p - a) < 0.0 {
                winding -= 1;
            }
        }
    }
    if winding != 0 {
        PointLocation::Inside
    } else {
        PointLocation::Outside
    }
}

/// Kind of a segment on the boundary of a cut region.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SegmentKind {
    /// Piece of a background-cell edge interior to the domain.
    CellEdge,
    /// Piece of the domain boundary, with its tag.
    Domain(BoundaryTag),
}

/// One closed loop of a cut region; edge `i` runs from `vertices[i]` to
/// `vertices[(i+1) % n]` and has kind `kinds[i]`.
#[derive(Debug, Clone)]
pub struct CutLoop {
    pub vertices: Vec<Point2>,
    pub kinds: Vec<SegmentKind>,
}

impl CutLoop {
    pub fn signed_area(&self) -> f64 {
        shoelace(&self.vertices)
    }

    pub fn edges(&self) -> impl Iterator<Item = (Point2, Point2, SegmentKind)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n], self.kinds[i]))
    }
}

/// The intersection of one background cell with the domain: a set of closed
/// oriented loops (counterclockwise outer pieces, clockwise holes). Empty
/// when the cell does not meet the domain.
#[derive(Debug, Clone, Default)]
pub struct CutRegion {
    pub loops: Vec<CutLoop>,
}

impl CutRegion {
    pub fn is_empty(&self) -> bool {
        self.loops.is_empty()
    }

    /// Total signed area (holes subtract).
    pub fn area(&self) -> f64 {
        self.loops.iter().map(|l| l.signed_area()).sum()
    }

    pub fn edges(&self) -> impl Iterator<Item = (Point2, Point2, SegmentKind)> + '_ {
        self.loops.iter().flat_map(|l| l.edges())
    }

    /// Domain-boundary segments of the region, with tags.
    pub fn domain_segments(&self) -> impl Iterator<Item = (Point2, Point2, BoundaryTag)> + '_ {
        self.edges().filter_map(|(a, b, k)| match k {
            SegmentKind::Domain(tag) => Some((a, b, tag)),
            SegmentKind::CellEdge => None,
        })
    }

    pub fn has_domain_segment(&self) -> bool {
        self.domain_segments().next().is_some()
    }
}

/// Clips the segment `a`-`b` against a convex counterclockwise polygon.
/// Returns the parameter interval of the surviving piece, with a band of
/// width `tol` around the polygon boundary counted as inside.
fn clip_segment_to_convex(cell: &[Point2], a: Point2, b: Point2, tol: f64) -> Option<(f64, f64)> {
    let d = b - a;
    let mut t0 = 0.0_f64;
    let mut t1 = 1.0_f64;
    let n = cell.len();
    for i in 0..n {
        let p = cell[i];
        let q = cell[(i + 1) % n];
        let e = q - p;
        let len = e.norm();
        // cross(e, x - p) = len * signed distance of x to the edge line
        let s0 = e.cross(a - p);
        let sd = e.cross(d);
        if sd.abs() <= 1e-12 * len * d.norm() {
            // Parallel: keep segments on or inside the edge line, so fitted
            // boundary pieces lying exactly on a cell edge survive.
            if s0 < -tol * len {
                return None;
            }
            continue;
        }
        let tb = -s0 / sd;
        if sd > 0.0 {
            t0 = t0.max(tb);
        } else {
            t1 = t1.min(tb);
        }
        if t0 >= t1 {
            return None;
        }
    }
    Some((t0, t1))
}

/// Intersection parameters (t on `a`-`b`, u on `c`-`e`) of two segments,
/// interiors extended by nothing; near-parallel pairs return None.
fn seg_seg_param(a: Point2, b: Point2, c: Point2, e: Point2) -> Option<(f64, f64)> {
    let d1 = b - a;
    let d2 = e - c;
    let denom = d1.cross(d2);
    let scale = d1.norm() * d2.norm();
    if denom.abs() <= 1e-14 * scale {
        return None;
    }
    let t = (c - a).cross(d2) / denom;
    let u = (c - a).cross(d1) / denom;
    Some((t, u))
}

struct OrientedSegment {
    start: Point2,
    end: Point2,
    kind: SegmentKind,
}

/// Intersects a convex, positively oriented cell with the domain.
///
/// The boundary of `K ∩ Ω` is assembled from two families of oriented
/// pieces: parts of the cell edges lying inside the domain, and parts of
/// the domain boundary lying inside the cell. Both keep the material on
/// their left, so stitching endpoint-to-endpoint yields correctly oriented
/// loops (outer counterclockwise, holes clockwise).
pub fn clip_cell(rep: &BoundaryRep, cell: &[Point2]) -> Result<CutRegion> {
    let n = cell.len();
    if n < 3 {
        return Err(Error::InvalidParameter("cell needs at least 3 vertices".into()));
    }
    let cell_area = shoelace(cell);
    if cell_area <= 0.0 {
        return Err(Error::InvalidParameter("cell must be positively oriented".into()));
    }
    let mut cell_diam = 0.0_f64;
    for i in 0..n {
        cell_diam = cell_diam.max(cell[i].distance(cell[(i + 1) % n]));
    }
    let tol = rep.tol().max(1e-13 * cell_diam);

    // Bounding-box prefilter for the domain edges.
    let (mut clo, mut chi) = (cell[0], cell[0]);
    for v in cell {
        clo.x = clo.x.min(v.x);
        clo.y = clo.y.min(v.y);
        chi.x = chi.x.max(v.x);
        chi.y = chi.y.max(v.y);
    }
    let pad = 10.0 * tol;

    let mut segments: Vec<OrientedSegment> = Vec::new();

    // Domain-boundary pieces inside the cell.
    for (a, b, tag) in rep.edges() {
        if a.x.max(b.x) < clo.x - pad
            || a.x.min(b.x) > chi.x + pad
            || a.y.max(b.y) < clo.y - pad
            || a.y.min(b.y) > chi.y + pad
        {
            continue;
        }
        if let Some((t0, t1)) = clip_segment_to_convex(cell, a, b, tol) {
            let d = b - a;
            let p0 = a + d * t0;
            let p1 = a + d * t1;
            if p0.distance(p1) <= 2.0 * tol {
                continue;
            }
            // A piece lying on a cell edge bounds this cell's region only if
            // its material side (left) faces the cell interior, i.e. it runs
            // parallel to the cell's own counterclockwise edge.
            if let Some(dir) = on_cell_edge_direction(cell, p0, p1, tol) {
                if dir < 0.0 {
                    continue;
                }
            }
            segments.push(OrientedSegment {
                start: p0,
                end: p1,
                kind: SegmentKind::Domain(tag),
            });
        }
    }

    // Cell-edge pieces inside the domain.
    for i in 0..n {
        let p = cell[i];
        let q = cell[(i + 1) % n];
        let mut cuts: Vec<f64> = vec![0.0, 1.0];
        for (a, b, _) in rep.edges() {
            if let Some((t, u)) = seg_seg_param(p, q, a, b) {
                if t > 0.0 && t < 1.0 && u >= -1e-12 && u <= 1.0 + 1e-12 {
                    cuts.push(t);
                }
            }
        }
        cuts.sort_by(|x, y| x.partial_cmp(y).unwrap());
        let edge_len = p.distance(q);
        for w in cuts.windows(2) {
            let (t0, t1) = (w[0], w[1]);
            if (t1 - t0) * edge_len <= 2.0 * tol {
                continue;
            }
            let mid = p + (q - p) * (0.5 * (t0 + t1));
            if point_in_domain_tol(rep, mid, tol) == PointLocation::Inside {
                segments.push(OrientedSegment {
                    start: p + (q - p) * t0,
                    end: p + (q - p) * t1,
                    kind: SegmentKind::CellEdge,
                });
            }
        }
    }

    if segments.is_empty() {
        return Ok(CutRegion::default());
    }

    let loops = stitch_loops(segments, cell_diam)?;
    let region = CutRegion { loops };

    // Discard zero-measure intersections.
    let area = region.area();
    if area <= (rep.tol() * rep.tol()).max(1e-24) * cell_area {
        return Ok(CutRegion::default());
    }
    Ok(region)
}

/// If the segment `p0`-`p1` lies within `tol` of some cell edge, returns the
/// dot product of its direction with that edge's direction; otherwise None.
fn on_cell_edge_direction(cell: &[Point2], p0: Point2, p1: Point2, tol: f64) -> Option<f64> {
    let n = cell.len();
    for i in 0..n {
        let a = cell[i];
        let b = cell[(i + 1) % n];
        if point_segment_distance(p0, a, b) <= 2.0 * tol
            && point_segment_distance(p1, a, b) <= 2.0 * tol
        {
            return Some((p1 - p0).dot(b - a));
        }
    }
    None
}

/// Chains oriented segments into closed loops by endpoint matching.
fn stitch_loops(mut segments: Vec<OrientedSegment>, cell_diam: f64) -> Result<Vec<CutLoop>> {
    let snap = 1e-7 * cell_diam;
    let mut loops = Vec::new();
    while let Some(first) = segments.pop() {
        let loop_start = first.start;
        let mut vertices = vec![first.start];
        let mut kinds = vec![first.kind];
        let mut current = first.end;
        loop {
            if current.distance(loop_start) <= snap && vertices.len() >= 3 {
                break;
            }
            // nearest unused segment start
            let mut best: Option<(usize, f64)> = None;
            for (j, s) in segments.iter().enumerate() {
                let d = s.start.distance(current);
                if best.map_or(true, |(_, bd)| d < bd) {
                    best = Some((j, d));
                }
            }
            match best {
                Some((j, d)) if d <= snap => {
                    let s = segments.swap_remove(j);
                    vertices.push(s.start);
                    kinds.push(s.kind);
                    current = s.end;
                }
                _ => {
                    return Err(Error::InvalidGeometry(format!(
                        "open loop while clipping: gap at ({:.6e}, {:.6e})",
                        current.x, current.y
                    )));
                }
            }
        }
        loops.push(CutLoop { vertices, kinds });
    }
    Ok(loops)
}

// ---------------------------------------------------------------------------
// Named constructors
// ---------------------------------------------------------------------------

/// Which sides of a rectangle get the Dirichlet tag; the rest are Neumann.
/// Order: bottom, right, top, left.
#[derive(Debug, Clone, Copy, Default)]
pub struct RectSides {
    pub bottom: bool,
    pub right: bool,
    pub top: bool,
    pub left: bool,
}

impl RectSides {
    pub const NONE: RectSides = RectSides {
        bottom: false,
        right: false,
        top: false,
        left: false,
    };

    pub fn bottom() -> Self {
        RectSides {
            bottom: true,
            ..Self::NONE
        }
    }

    pub fn left() -> Self {
        RectSides {
            left: true,
            ..Self::NONE
        }
    }

    pub fn all() -> Self {
        RectSides {
            bottom: true,
            right: true,
            top: true,
            left: true,
        }
    }
}

fn tag_of(d: bool) -> BoundaryTag {
    if d {
        BoundaryTag::Dirichlet
    } else {
        BoundaryTag::Neumann
    }
}

/// Axis-aligned rectangle `[x0,x1] × [y0,y1]` with per-side tags.
pub fn rectangle(p0: Point2, p1: Point2, dirichlet: RectSides) -> Result<BoundaryRep> {
    if p1.x <= p0.x || p1.y <= p0.y {
        return Err(Error::InvalidParameter("rectangle needs positive extents".into()));
    }
    let vertices = vec![
        p0,
        Point2::new(p1.x, p0.y),
        p1,
        Point2::new(p0.x, p1.y),
    ];
    let tags = vec![
        tag_of(dirichlet.bottom),
        tag_of(dirichlet.right),
        tag_of(dirichlet.top),
        tag_of(dirichlet.left),
    ];
    BoundaryRep::new(vec![BoundaryLoop { vertices, tags }])
}

/// Regular polygon approximating a circle; counterclockwise for `ccw`,
/// clockwise (hole orientation) otherwise.
pub fn circle_loop(center: Point2, r: f64, segments: usize, ccw: bool, tag: BoundaryTag) -> Vec<Point2> {
    let _ = tag;
    let mut vs = Vec::with_capacity(segments);
    for i in 0..segments {
        let ang = 2.0 * core::f64::consts::PI * (i as f64) / (segments as f64);
        let ang = if ccw { ang } else { -ang };
        vs.push(center + Vec2::new(r * ang.cos(), r * ang.sin()));
    }
    vs
}

/// Annulus between `r_in` and `r_out`, each circle discretized with
/// `segments` edges (at least 8). Both circles carry `tag`.
pub fn ring(center: Point2, r_in: f64, r_out: f64, segments: usize, tag: BoundaryTag) -> Result<BoundaryRep> {
    if !(r_out > r_in && r_in > 0.0) {
        return Err(Error::InvalidParameter("ring needs 0 < r_in < r_out".into()));
    }
    if segments < 8 {
        return Err(Error::InvalidParameter("circle needs at least 8 segments".into()));
    }
    let outer = BoundaryLoop::uniform(circle_loop(center, r_out, segments, true, tag), tag);
    let inner = BoundaryLoop::uniform(circle_loop(center, r_in, segments, false, tag), tag);
    BoundaryRep::new(vec![outer, inner])
}

/// Disk of radius `r` (no hole).
pub fn disk(center: Point2, r: f64, segments: usize, tag: BoundaryTag) -> Result<BoundaryRep> {
    if r <= 0.0 {
        return Err(Error::InvalidParameter("disk needs positive radius".into()));
    }
    if segments < 8 {
        return Err(Error::InvalidParameter("circle needs at least 8 segments".into()));
    }
    BoundaryRep::new(vec![BoundaryLoop::uniform(
        circle_loop(center, r, segments, true, tag),
        tag,
    )])
}

/// L-shape `[0,w] × [0,h]` minus the upper-right block, with the inside
/// corner rounded by a fillet arc of radius `r_fillet`. Dirichlet on the
/// bottom edge.
pub fn rounded_lshape(w: f64, h: f64, leg: f64, r_fillet: f64, arc_segments: usize) -> Result<BoundaryRep> {
    if w <= 0.0 || h <= 0.0 || leg <= 0.0 || leg >= w.min(h) {
        return Err(Error::InvalidParameter("l-shape needs 0 < leg < min(w, h)".into()));
    }
    if r_fillet <= 0.0 || r_fillet >= leg {
        return Err(Error::InvalidParameter("fillet radius must be in (0, leg)".into()));
    }
    if arc_segments < 2 {
        return Err(Error::InvalidParameter("fillet needs at least 2 segments".into()));
    }
    let n = BoundaryTag::Neumann;
    // Counterclockwise outline with the inner corner at (leg, leg) replaced
    // by a concave quarter arc centered at (leg + r, leg + r).
    let mut vertices = vec![
        Point2::new(0.0, 0.0),
        Point2::new(w, 0.0),
        Point2::new(w, leg),
        Point2::new(leg + r_fillet, leg),
    ];
    let c = Point2::new(leg + r_fillet, leg + r_fillet);
    for i in 1..arc_segments {
        let ang = -core::f64::consts::FRAC_PI_2 - core::f64::consts::FRAC_PI_2 * (i as f64) / (arc_segments as f64);
        vertices.push(c + Vec2::new(r_fillet * ang.cos(), r_fillet * ang.sin()));
    }
    vertices.push(Point2::new(leg, leg + r_fillet));
    vertices.push(Point2::new(leg, h));
    vertices.push(Point2::new(0.0, h));
    let mut tags = vec![n; vertices.len()];
    tags[0] = BoundaryTag::Dirichlet;
    BoundaryRep::new(vec![BoundaryLoop { vertices, tags }])
}

/// L-shape with a circular hole of radius `r_hole` drilled at the inside
/// corner. Dirichlet on the bottom edge.
pub fn drilled_lshape(w: f64, h: f64, leg: f64, r_hole: f64, segments: usize) -> Result<BoundaryRep> {
    if w <= 0.0 || h <= 0.0 || leg <= 0.0 || leg >= w.min(h) {
        return Err(Error::InvalidParameter("l-shape needs 0 < leg < min(w, h)".into()));
    }
    if r_hole <= 0.0 || r_hole >= 0.9 * leg {
        return Err(Error::InvalidParameter("hole radius too large for leg".into()));
    }
    if segments < 8 {
        return Err(Error::InvalidParameter("circle needs at least 8 segments".into()));
    }
    let n = BoundaryTag::Neumann;
    let vertices = vec![
        Point2::new(0.0, 0.0),
        Point2::new(w, 0.0),
        Point2::new(w, leg),
        Point2::new(leg, leg),
        Point2::new(leg, h),
        Point2::new(0.0, h),
    ];
    let mut tags = vec![n; 6];
    tags[0] = BoundaryTag::Dirichlet;
    let outline = BoundaryLoop { vertices, tags };
    // Hole centered at the inside corner, pulled into the material so it
    // does not intersect the outline.
    let c = Point2::new(leg - 1.5 * r_hole, leg - 1.5 * r_hole);
    let hole = BoundaryLoop::uniform(circle_loop(c, r_hole, segments, false, n), n);
    BoundaryRep::new(vec![outline, hole])
}

/// Cantilever beam `[0,length] × [0,height]` with `holes` circular holes of
/// radius `r` spaced evenly along the centerline. Dirichlet on the left edge.
pub fn beam_with_holes(
    length: f64,
    height: f64,
    holes: usize,
    r: f64,
    segments: usize,
) -> Result<BoundaryRep> {
    if length <= 0.0 || height <= 0.0 {
        return Err(Error::InvalidParameter("beam needs positive dimensions".into()));
    }
    if r >= 0.5 * height && holes > 0 {
        return Err(Error::InvalidParameter("hole radius exceeds beam half-height".into()));
    }
    if holes > 0 && segments < 8 {
        return Err(Error::InvalidParameter("circle needs at least 8 segments".into()));
    }
    let rect = rectangle(Point2::new(0.0, 0.0), Point2::new(length, height), RectSides::left())?;
    let mut loops = rect.loops;
    let n = BoundaryTag::Neumann;
    for k in 0..holes {
        let cx = length * ((k as f64) + 1.0) / ((holes as f64) + 1.0);
        let c = Point2::new(cx, 0.5 * height);
        loops.push(BoundaryLoop::uniform(circle_loop(c, r, segments, false, n), n));
    }
    BoundaryRep::new(loops)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_square() -> BoundaryRep {
        rectangle(Point2::new(0.0, 0.0), Point2::new(1.0, 1.0), RectSides::bottom()).unwrap()
    }

    fn unit_cell(x0: f64, y0: f64, h: f64) -> Vec<Point2> {
        vec![
            Point2::new(x0, y0),
            Point2::new(x0 + h, y0),
            Point2::new(x0 + h, y0 + h),
            Point2::new(x0, y0 + h),
        ]
    }

    #[test]
    fn point_classification_rectangle() {
        let rep = unit_square();
        assert_eq!(point_in_domain(&rep, Point2::new(0.5, 0.5)), PointLocation::Inside);
        assert_eq!(point_in_domain(&rep, Point2::new(2.0, 2.0)), PointLocation::Outside);
        assert_eq!(point_in_domain(&rep, Point2::new(1.0, 0.5)), PointLocation::OnBoundary);
    }

    #[test]
    fn annulus_hole_is_outside() {
        let rep = ring(Point2::new(0.0, 0.0), 0.8, 1.0, 50, BoundaryTag::Neumann).unwrap();
        assert_eq!(point_in_domain(&rep, Point2::new(0.0, 0.0)), PointLocation::Outside);
        assert_eq!(point_in_domain(&rep, Point2::new(0.9, 0.0)), PointLocation::Inside);
        assert_eq!(point_in_domain(&rep, Point2::new(1.5, 0.0)), PointLocation::Outside);
    }

    #[test]
    fn ring_signed_areas_match_regular_polygon() {
        let m = 50.0_f64;
        let rep = ring(Point2::new(0.0, 0.0), 0.8, 1.0, 50, BoundaryTag::Neumann).unwrap();
        let poly_area = |r: f64| 0.5 * m * (2.0 * core::f64::consts::PI / m).sin() * r * r;
        assert!((rep.loops[0].signed_area() - poly_area(1.0)).abs() < 1e-12);
        assert!((rep.loops[1].signed_area() + poly_area(0.8)).abs() < 1e-12);
    }

    #[test]
    fn clip_cell_strictly_inside() {
        let rep = unit_square();
        let cell = unit_cell(0.25, 0.25, 0.5);
        let region = clip_cell(&rep, &cell).unwrap();
        assert_eq!(region.loops.len(), 1);
        assert!((region.area() - 0.25).abs() < 1e-14);
        assert!(region.edges().all(|(_, _, k)| k == SegmentKind::CellEdge));
    }

    #[test]
    fn clip_cell_disjoint() {
        let rep = unit_square();
        let region = clip_cell(&rep, &unit_cell(2.0, 2.0, 1.0)).unwrap();
        assert!(region.is_empty());
    }

    #[test]
    fn clip_cell_halfplane() {
        // Domain is a large rectangle occupying x < 0.3 locally.
        let rep = rectangle(Point2::new(-10.0, -10.0), Point2::new(0.3, 10.0), RectSides::NONE).unwrap();
        let region = clip_cell(&rep, &unit_cell(0.0, 0.0, 1.0)).unwrap();
        assert_eq!(region.loops.len(), 1);
        assert!((region.area() - 0.3).abs() < 1e-12);
        let domain_edges: Vec<_> = region.domain_segments().collect();
        assert_eq!(domain_edges.len(), 1);
        let (a, b, _) = domain_edges[0];
        assert!((a.x - 0.3).abs() < 1e-12 && (b.x - 0.3).abs() < 1e-12);
        assert!((a.distance(b) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn clip_cell_monte_carlo_area() {
        // Deterministic lattice sampling oracle on the halfplane example.
        let rep = rectangle(Point2::new(-10.0, -10.0), Point2::new(0.3, 10.0), RectSides::NONE).unwrap();
        let region = clip_cell(&rep, &unit_cell(0.0, 0.0, 1.0)).unwrap();
        let n = 1000;
        let mut inside = 0usize;
        for i in 0..n {
            for j in 0..n {
                let p = Point2::new((i as f64 + 0.5) / n as f64, (j as f64 + 0.5) / n as f64);
                if point_in_domain(&rep, p) == PointLocation::Inside {
                    inside += 1;
                }
            }
        }
        let mc_area = inside as f64 / (n * n) as f64;
        assert!((region.area() - mc_area).abs() < 3e-3);
    }

    #[test]
    fn clip_cell_fitted_keeps_boundary_tags() {
        // Fitted configuration: cell edge on the Dirichlet boundary.
        let rep = unit_square();
        let region = clip_cell(&rep, &unit_cell(0.0, 0.0, 0.5)).unwrap();
        assert!((region.area() - 0.25).abs() < 1e-14);
        let d: Vec<_> = region
            .domain_segments()
            .filter(|(_, _, t)| *t == BoundaryTag::Dirichlet)
            .collect();
        assert_eq!(d.len(), 1);
        // Outside cell below the boundary comes back empty.
        let region = clip_cell(&rep, &unit_cell(0.0, -0.5, 0.5)).unwrap();
        assert!(region.is_empty(), "area = {}", region.area());
    }

    #[test]
    fn clip_cell_hole_inside_cell() {
        // A whole annulus inside one huge cell: region = the ring itself.
        let rep = ring(Point2::new(0.5, 0.5), 0.2, 0.4, 50, BoundaryTag::Neumann).unwrap();
        let region = clip_cell(&rep, &unit_cell(0.0, 0.0, 1.0)).unwrap();
        assert_eq!(region.loops.len(), 2);
        assert!((region.area() - rep.area()).abs() < 1e-12);
        assert!(region.edges().all(|(_, _, k)| matches!(k, SegmentKind::Domain(_))));
    }

    #[test]
    fn clip_cell_additivity() {
        let rep = disk(Point2::new(0.4, 0.6), 0.45, 50, BoundaryTag::Neumann).unwrap();
        let parent = unit_cell(0.0, 0.0, 1.0);
        let left = vec![
            Point2::new(0.0, 0.0),
            Point2::new(0.5, 0.0),
            Point2::new(0.5, 1.0),
            Point2::new(0.0, 1.0),
        ];
        let right = vec![
            Point2::new(0.5, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(1.0, 1.0),
            Point2::new(0.5, 1.0),
        ];
        let a_parent = clip_cell(&rep, &parent).unwrap().area();
        let a_split = clip_cell(&rep, &left).unwrap().area() + clip_cell(&rep, &right).unwrap().area();
        assert!((a_parent - a_split).abs() < 1e-12 * 1.0);
    }

    #[test]
    fn clip_cell_area_bounded_by_cell() {
        let rep = disk(Point2::new(0.3, 0.3), 0.7, 40, BoundaryTag::Neumann).unwrap();
        for &(x0, y0) in &[(0.0, 0.0), (0.5, 0.5), (-0.5, 0.25), (0.25, -0.5)] {
            let cell = unit_cell(x0, y0, 0.5);
            let region = clip_cell(&rep, &cell).unwrap();
            assert!(region.area() <= 0.25 + 1e-12);
            assert!(region.area() >= 0.0);
        }
    }

    #[test]
    fn domain_segments_lie_on_boundary() {
        let rep = disk(Point2::new(0.5, 0.5), 0.45, 50, BoundaryTag::Neumann).unwrap();
        for &(x0, y0) in &[(0.0, 0.0), (0.5, 0.0), (0.0, 0.5), (0.5, 0.5)] {
            let region = clip_cell(&rep, &unit_cell(x0, y0, 0.5)).unwrap();
            for (a, b, _) in region.domain_segments() {
                let m = (a + b) * 0.5;
                assert!(rep.boundary_distance(m) <= 1e-9);
            }
        }
    }

    #[test]
    fn degenerate_loop_rejected() {
        let vs = vec![
            Point2::new(0.0, 0.0),
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 1.0),
        ];
        assert!(BoundaryRep::new(vec![BoundaryLoop::uniform(vs, BoundaryTag::Neumann)]).is_err());
    }

    #[test]
    fn rectangle_tags() {
        let rep = unit_square();
        let d: Vec<_> = rep
            .edges()
            .filter(|(_, _, t)| *t == BoundaryTag::Dirichlet)
            .collect();
        assert_eq!(rep.loops.len(), 1);
        assert_eq!(rep.loops[0].vertices.len(), 4);
        assert_eq!(d.len(), 1);
        assert!(d[0].0.y.abs() < 1e-15 && d[0].1.y.abs() < 1e-15);
    }
}
