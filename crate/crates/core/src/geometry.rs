//! Triangle-level geometry and symmetric quadrature on triangles.
//!
//! Barycentric coordinates are stored as `[λ0, λ1, λ2]`; edge `i` of a
//! triangle is the edge opposite vertex `i`.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{FemError, Result};

/// Relative threshold below which a triangle counts as degenerate:
/// `area < DEGENERACY_RATIO * diameter^2`.
pub const DEGENERACY_RATIO: f64 = 1e-14;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const ZERO: Point2 = Point2 { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn dot(self, other: Point2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3D cross product.
    pub fn cross(self, other: Point2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn norm_squared(self) -> f64 {
        self.dot(self)
    }

    pub fn distance(self, other: Point2) -> f64 {
        (self - other).norm()
    }

    /// Rotation by 90 degrees clockwise.
    pub fn rotate_cw(self) -> Point2 {
        Point2::new(self.y, -self.x)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Add for Point2 {
    type Output = Point2;
    fn add(self, rhs: Point2) -> Point2 {
        Point2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point2 {
    type Output = Point2;
    fn sub(self, rhs: Point2) -> Point2 {
        Point2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Point2 {
    type Output = Point2;
    fn mul(self, rhs: f64) -> Point2 {
        Point2::new(self.x * rhs, self.y * rhs)
    }
}

impl Mul<Point2> for f64 {
    type Output = Point2;
    fn mul(self, rhs: Point2) -> Point2 {
        rhs * self
    }
}

impl Neg for Point2 {
    type Output = Point2;
    fn neg(self) -> Point2 {
        Point2::new(-self.x, -self.y)
    }
}

impl From<(f64, f64)> for Point2 {
    fn from((x, y): (f64, f64)) -> Self {
        Point2::new(x, y)
    }
}

/// A triangle given by its three vertices.
///
/// Construction does not validate; operations that need a non-degenerate
/// triangle return [`FemError::DegenerateTriangle`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Triangle {
    pub vertices: [Point2; 3],
}

impl Triangle {
    pub fn new(p1: Point2, p2: Point2, p3: Point2) -> Self {
        Self {
            vertices: [p1, p2, p3],
        }
    }

    /// Positive for counter-clockwise vertex order.
    pub fn signed_area(&self) -> f64 {
        let [a, b, c] = self.vertices;
        0.5 * (b - a).cross(c - a)
    }

    pub fn is_degenerate(&self) -> bool {
        let d = self.diameter();
        !(self.signed_area().abs() >= DEGENERACY_RATIO * d * d) || d == 0.0
    }

    fn check(&self) -> Result<()> {
        if self.is_degenerate() {
            Err(FemError::DegenerateTriangle {
                area: self.signed_area().abs(),
                diameter: self.diameter(),
            })
        } else {
            Ok(())
        }
    }

    pub fn area(&self) -> Result<f64> {
        self.check()?;
        Ok(self.signed_area().abs())
    }

    /// Length of the edge opposite vertex `i`.
    pub fn edge_length(&self, i: usize) -> f64 {
        self.vertices[(i + 1) % 3].distance(self.vertices[(i + 2) % 3])
    }

    pub fn edge_lengths(&self) -> [f64; 3] {
        [0, 1, 2].map(|i| self.edge_length(i))
    }

    pub fn edge_midpoint(&self, i: usize) -> Point2 {
        (self.vertices[(i + 1) % 3] + self.vertices[(i + 2) % 3]) * 0.5
    }

    /// Longest edge length. Defined for degenerate input too.
    pub fn diameter(&self) -> f64 {
        let [a, b, c] = self.edge_lengths();
        a.max(b).max(c)
    }

    /// `abc / (4 |K|)`.
    pub fn circumradius(&self) -> Result<f64> {
        let area = self.area()?;
        let [a, b, c] = self.edge_lengths();
        Ok(a * b * c / (4.0 * area))
    }

    pub fn centroid(&self) -> Point2 {
        let [a, b, c] = self.vertices;
        (a + b + c) * (1.0 / 3.0)
    }

    /// Copy with counter-clockwise orientation.
    pub fn oriented(&self) -> Triangle {
        if self.signed_area() < 0.0 {
            let [a, b, c] = self.vertices;
            Triangle::new(a, c, b)
        } else {
            *self
        }
    }

    pub fn point_at(&self, bary: [f64; 3]) -> Point2 {
        let [a, b, c] = self.vertices;
        a * bary[0] + b * bary[1] + c * bary[2]
    }

    /// Constant gradients of the three barycentric coordinates.
    pub fn barycentric_gradients(&self) -> Result<[Point2; 3]> {
        self.check()?;
        let two_area = 2.0 * self.signed_area();
        let v = self.vertices;
        Ok([0, 1, 2].map(|i| {
            let e = v[(i + 2) % 3] - v[(i + 1) % 3];
            // grad λ_i = rot(e_i) / 2|K| with e_i traversed counter-clockwise
            Point2::new(-e.y, e.x) * (1.0 / two_area)
        }))
    }

    pub fn barycentric(&self, p: Point2) -> Result<[f64; 3]> {
        let two_area = 2.0 * self.area()? * self.signed_area().signum();
        let v = self.vertices;
        Ok([0, 1, 2].map(|i| (v[(i + 2) % 3] - v[(i + 1) % 3]).cross(p - v[(i + 1) % 3]) / two_area))
    }
}

/// A symmetric quadrature rule on triangles in barycentric coordinates.
/// Weights are normalised to sum to one, so `∫_K g ≈ |K| Σ w_i g(x_i)`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadRule {
    /// Highest total degree integrated exactly.
    pub degree: usize,
    pub points: Vec<[f64; 3]>,
    pub weights: Vec<f64>,
}

impl QuadRule {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[f64; 3], f64)> + '_ {
        self.points.iter().zip(self.weights.iter().copied())
    }

    fn push_centroid(&mut self, w: f64) {
        self.points.push([1.0 / 3.0; 3]);
        self.weights.push(w);
    }

    fn push_orbit3(&mut self, a: f64, w: f64) {
        let b = 1.0 - 2.0 * a;
        for p in [[a, a, b], [a, b, a], [b, a, a]] {
            self.points.push(p);
            self.weights.push(w);
        }
    }

    fn push_orbit6(&mut self, a: f64, b: f64, w: f64) {
        let c = 1.0 - a - b;
        for p in [[a, b, c], [a, c, b], [b, a, c], [b, c, a], [c, a, b], [c, b, a]] {
            self.points.push(p);
            self.weights.push(w);
        }
    }
}

/// Symmetric positive-weight rule exact for total degree `degree` (1..=6).
///
/// Degree 3 is served by the 6-point degree-4 rule since the 4-point
/// degree-3 rule has a negative weight.
pub fn quad_rule(degree: usize) -> Result<QuadRule> {
    let mut rule = QuadRule {
        degree,
        points: Vec::new(),
        weights: Vec::new(),
    };
    match degree {
        1 => rule.push_centroid(1.0),
        2 => rule.push_orbit3(1.0 / 6.0, 1.0 / 3.0),
        3 | 4 => {
            rule.degree = 4;
            rule.push_orbit3(0.445_948_490_915_964_886_318_329_253_883_05, 0.223_381_589_678_011_465_695_007_008_433_12);
            rule.push_orbit3(0.091_576_213_509_770_743_459_571_463_402_202, 0.109_951_743_655_321_867_638_326_324_900_21);
        }
        5 => {
            let s = 15f64.sqrt();
            rule.push_centroid(9.0 / 40.0);
            rule.push_orbit3((6.0 - s) / 21.0, (155.0 - s) / 1200.0);
            rule.push_orbit3((6.0 + s) / 21.0, (155.0 + s) / 1200.0);
        }
        6 => {
            rule.push_orbit3(0.249_286_745_170_910_421_291_638_553_107_02, 0.116_786_275_726_379_366_025_289_611_385_58);
            rule.push_orbit3(0.063_089_014_491_502_228_340_331_602_870_819, 0.050_844_906_370_206_816_920_936_809_106_869);
            rule.push_orbit6(
                0.053_145_049_844_816_947_353_249_671_631_398,
                0.310_352_451_033_784_405_416_607_733_956_55,
                0.082_851_075_618_373_575_193_553_456_420_442,
            );
        }
        d => return Err(FemError::UnsupportedQuadrature(d)),
    }
    Ok(rule)
}

/// `|K| Σ w_i g(x_i)`.
pub fn integrate<G>(t: &Triangle, rule: &QuadRule, g: G) -> Result<f64>
where
    G: Fn(Point2) -> f64,
{
    let area = t.area()?;
    Ok(area * rule.iter().map(|(b, w)| w * g(t.point_at(*b))).sum::<f64>())
}

/// Three-point Gauss-Legendre rule on `[0, 1]`, exact to degree 5.
pub const GAUSS3_LINE: [(f64, f64); 3] = [
    (0.112_701_665_379_258_31, 5.0 / 18.0),
    (0.5, 8.0 / 18.0),
    (0.887_298_334_620_741_7, 5.0 / 18.0),
];

/// `∫_a^b g ds` along the segment using [`GAUSS3_LINE`].
pub fn integrate_segment<G>(a: Point2, b: Point2, g: G) -> f64
where
    G: Fn(Point2) -> f64,
{
    let len = a.distance(b);
    len * GAUSS3_LINE
        .iter()
        .map(|&(s, w)| w * g(a + (b - a) * s))
        .sum::<f64>()
}
