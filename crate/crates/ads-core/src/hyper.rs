//! Hyperbolic plane utilities: the upper half-plane, Möbius actions of
//! 2×2 matrices, ℝP¹ angle coordinates, and hyperbolic trigonometry.
//!
//! ℝP¹ points are stored as angles θ ∈ [0,π): the point is the projective
//! class of the direction (cos θ, sin θ), and a boundary real x of the
//! upper half-plane corresponds to the class of (x, 1). Under this chart
//! θ(x) = atan2(1, x), so x ↦ θ is orientation-reversing; causal-sign
//! computations are insensitive to this because both boundary factors use
//! the same chart.

use crate::models::Mat2;

pub const PI: f64 = std::f64::consts::PI;

/// A point of the upper half-plane, as a complex number with y > 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct H2 {
    pub x: f64,
    pub y: f64,
}

impl H2 {
    pub fn new(x: f64, y: f64) -> Self {
        debug_assert!(y > 0.0, "not in the upper half-plane: y = {y}");
        H2 { x, y }
    }

    pub const I: H2 = H2 { x: 0.0, y: 1.0 };

    /// Hyperbolic distance.
    pub fn dist(&self, o: &H2) -> f64 {
        let dx = self.x - o.x;
        let dy = self.y - o.y;
        let arg = 1.0 + (dx * dx + dy * dy) / (2.0 * self.y * o.y);
        arg.acosh()
    }
}

/// A point of ℝP¹ as an angle in [0,π).
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct RP1 {
    theta: f64,
}

impl RP1 {
    pub fn from_angle(theta: f64) -> Self {
        RP1 {
            theta: theta.rem_euclid(PI),
        }
    }

    /// From a boundary value of the upper half-plane (None means ∞).
    pub fn from_boundary(x: Option<f64>) -> Self {
        match x {
            Some(x) => RP1::from_angle(1.0f64.atan2(x)),
            None => RP1 { theta: 0.0 },
        }
    }

    /// From a projective direction vector (v1, v2) ≠ 0.
    pub fn from_dir(v1: f64, v2: f64) -> Self {
        RP1::from_angle(v2.atan2(v1))
    }

    pub fn angle(&self) -> f64 {
        self.theta
    }

    pub fn dir(&self) -> (f64, f64) {
        (self.theta.cos(), self.theta.sin())
    }

    /// Boundary value in ℝ ∪ {∞}; None when the class is (1:0).
    pub fn boundary_value(&self) -> Option<f64> {
        let (c, s) = self.dir();
        if s.abs() < 1e-300 {
            None
        } else {
            Some(c / s)
        }
    }

    /// Distance on ℝP¹ (angles mod π), in [0, π/2].
    pub fn dist(&self, o: &RP1) -> f64 {
        let d = (self.theta - o.theta).rem_euclid(PI);
        d.min(PI - d)
    }
}

/// Möbius action of a matrix on the upper half-plane.
///
/// Requires positive determinant; no normalization is assumed.
pub fn mobius_h2(m: &Mat2, z: &H2) -> H2 {
    // (a z + b) / (c z + d) for z = x + i y
    let (a, b, c, d) = (m.a, m.b, m.c, m.d);
    let nre = a * z.x + b;
    let nim = a * z.y;
    let dre = c * z.x + d;
    let dim = c * z.y;
    let den = dre * dre + dim * dim;
    H2 {
        x: (nre * dre + nim * dim) / den,
        y: (nim * dre - nre * dim) / den,
    }
}

/// Möbius action on ℝP¹ in the direction picture: [v] ↦ [Mv].
pub fn mobius_rp1(m: &Mat2, p: &RP1) -> RP1 {
    let (c, s) = p.dir();
    RP1::from_dir(m.a * c + m.b * s, m.c * c + m.d * s)
}

/// Fixed points of a Möbius transformation on ℝP¹.
///
/// Solves c x² + (d−a) x − b = 0 in the boundary chart, handling the
/// point at infinity (c = 0). Returns 0, 1, or 2 points.
pub fn mobius_fixed_points_rp1(m: &Mat2) -> Vec<RP1> {
    let eps = 1e-14 * m.max_abs().max(1.0);
    if m.c.abs() < eps {
        // infinity is fixed
        let mut fps = vec![RP1::from_boundary(None)];
        if (m.d - m.a).abs() > eps {
            fps.push(RP1::from_boundary(Some(m.b / (m.d - m.a))));
        }
        return fps;
    }
    let disc = (m.d - m.a) * (m.d - m.a) + 4.0 * m.b * m.c;
    if disc < 0.0 {
        return vec![];
    }
    let sq = disc.sqrt();
    let x1 = (-(m.d - m.a) + sq) / (2.0 * m.c);
    let x2 = (-(m.d - m.a) - sq) / (2.0 * m.c);
    if sq == 0.0 {
        vec![RP1::from_boundary(Some(x1))]
    } else {
        vec![RP1::from_boundary(Some(x1)), RP1::from_boundary(Some(x2))]
    }
}

/// Classification of a PSL(2,ℝ) element by its trace.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MobiusClass {
    Elliptic,
    Parabolic,
    Hyperbolic,
    Identity,
}

pub fn classify(m: &Mat2, tol: f64) -> MobiusClass {
    let n = m.scale(1.0 / m.det().sqrt());
    if n.sub(&Mat2::IDENTITY).max_abs() < tol || n.add(&Mat2::IDENTITY).max_abs() < tol {
        return MobiusClass::Identity;
    }
    let t = n.trace().abs();
    if t > 2.0 + tol {
        MobiusClass::Hyperbolic
    } else if t < 2.0 - tol {
        MobiusClass::Elliptic
    } else {
        MobiusClass::Parabolic
    }
}

/// Translation length of a hyperbolic element: 2 arccosh(|tr|/2).
pub fn translation_length(m: &Mat2) -> f64 {
    let t = (m.trace() / m.det().sqrt()).abs() / 2.0;
    if t <= 1.0 {
        0.0
    } else {
        2.0 * t.acosh()
    }
}

/// Attracting fixed point of a hyperbolic element: the eigendirection with
/// the larger eigenvalue modulus.
pub fn attracting_fixed_point(m: &Mat2) -> Option<RP1> {
    let n = m.scale(1.0 / m.det().sqrt());
    let tr = n.trace();
    if tr.abs() <= 2.0 {
        return None;
    }
    let disc = tr * tr - 4.0;
    let lam = (tr + tr.signum() * disc.sqrt()) / 2.0; // eigenvalue with |lam| > 1
    // eigenvector of [[a,b],[c,d]] for lam: (b, lam - a) or (lam - d, c)
    let v1 = (n.b, lam - n.a);
    let v2 = (lam - n.d, n.c);
    let pick = if v1.0.abs() + v1.1.abs() > v2.0.abs() + v2.1.abs() {
        v1
    } else {
        v2
    };
    Some(RP1::from_dir(pick.0, pick.1))
}

/// The matrix in SL(2,ℝ) sending i to z: [[√y, x/√y],[0, 1/√y]].
pub fn point_to_upper(z: &H2) -> Mat2 {
    let s = z.y.sqrt();
    Mat2::new(s, z.x / s, 0.0, 1.0 / s)
}

/// Elliptic element rotating by angle `alpha` about i.
///
/// The boundary/tangent action at i rotates by `alpha`; the matrix is the
/// half-angle rotation matrix.
pub fn rotation_about_i(alpha: f64) -> Mat2 {
    let (s, c) = (0.5 * alpha).sin_cos();
    Mat2::new(c, s, -s, c)
}

/// Elliptic element rotating by `alpha` about an arbitrary point.
pub fn rotation_about(p: &H2, alpha: f64) -> Mat2 {
    let t = point_to_upper(p);
    t.mul(&rotation_about_i(alpha)).mul(&t.inv_unit())
}

/// Order-two elliptic element fixing `p` (rotation by π).
pub fn half_turn(p: &H2) -> Mat2 {
    rotation_about(p, PI)
}

/// An oriented geodesic of ℍ², stored as (initial, final) boundary points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrientedGeodesic {
    pub initial: RP1,
    pub fin: RP1,
}

impl OrientedGeodesic {
    pub fn new(initial: RP1, fin: RP1) -> Self {
        OrientedGeodesic { initial, fin }
    }

    pub fn reversed(&self) -> Self {
        OrientedGeodesic {
            initial: self.fin,
            fin: self.initial,
        }
    }

    /// The unique matrix (up to the axis-translation subgroup it generates)
    /// taking the oriented imaginary axis (0 → ∞) to this geodesic and i to
    /// the point of the geodesic closest to... any normalization works for
    /// building the geodesic set; we fix the one mapping (0, ∞, 1) to
    /// (initial, final, "midpoint-normal direction").
    pub fn frame(&self) -> Mat2 {
        mobius_to_points(&self.initial, &self.fin)
    }

    /// Hyperbolic translation along the geodesic by signed length `d`
    /// (toward the final endpoint for d > 0).
    pub fn translation(&self, d: f64) -> Mat2 {
        let g = self.frame();
        let t = Mat2::new((0.5 * d).exp(), 0.0, 0.0, (-0.5 * d).exp());
        g.mul(&t).mul(&g.inv())
    }

    /// Signed side of a point relative to the oriented geodesic: positive on
    /// the left of initial→final.
    pub fn side(&self, p: &H2) -> f64 {
        // Map the geodesic to the oriented imaginary axis; left of (0→∞) in
        // the upper half-plane is x < 0.
        let g = self.frame().inv();
        let q = mobius_h2(&g, p);
        -q.x
    }
}

/// A Möbius transformation in SL(2,ℝ) mapping (0, ∞) to the ordered pair
/// (p, q) of distinct ℝP¹ points, normalized to determinant one.
pub fn mobius_to_points(p: &RP1, q: &RP1) -> Mat2 {
    let (pc, ps) = p.dir();
    let (qc, qs) = q.dir();
    // columns: image of (0,1) ~ p direction, image of (1,0) ~ q direction
    let m = Mat2::new(qc, pc, qs, ps);
    let det = m.det();
    debug_assert!(det.abs() > 1e-13, "coincident endpoints");
    if det > 0.0 {
        m.scale(1.0 / det.sqrt())
    } else {
        // flip the sign of one column to stay in SL(2,R)
        let m = Mat2::new(-qc, pc, -qs, ps);
        m.scale(1.0 / m.det().sqrt())
    }
}

/// Cross-ratio of four boundary points (None = ∞), with the convention that
/// symmetric quadruples (endpoints of orthogonal geodesics, interleaved)
/// have cross-ratio −1:
///
/// cr(p,q,r,s) = (p−q)(r−s) / ((p−s)(r−q)).
pub fn cross_ratio(p: Option<f64>, q: Option<f64>, r: Option<f64>, s: Option<f64>) -> f64 {
    // treat infinities by the usual limits
    fn diff(a: Option<f64>, b: Option<f64>) -> Option<f64> {
        match (a, b) {
            (Some(a), Some(b)) => Some(a - b),
            _ => None,
        }
    }
    let pq = diff(p, q);
    let rs = diff(r, s);
    let ps = diff(p, s);
    let rq = diff(r, q);
    match (pq, rs, ps, rq) {
        (Some(pq), Some(rs), Some(ps), Some(rq)) => (pq * rs) / (ps * rq),
        // p = ∞: (p−q)/(p−s) → 1
        (None, Some(rs), None, Some(rq)) => rs / rq,
        // q = ∞: (p−q)/(r−q) → 1
        (None, Some(rs), Some(ps), None) => rs / ps,
        // r = ∞: (r−s)/(r−q) → 1
        (Some(pq), None, Some(ps), None) => pq / ps,
        // s = ∞: (r−s)/(p−s) → 1
        (Some(pq), None, None, Some(rq)) => pq / rq,
        _ => f64::NAN,
    }
}

/// Real power of a hyperbolic matrix through its eigendecomposition.
pub fn hyperbolic_power(m: &Mat2, s: f64) -> Mat2 {
    let n = m.scale(1.0 / m.det().sqrt());
    let tr = n.trace();
    debug_assert!(tr.abs() > 2.0, "not hyperbolic: tr = {tr}");
    let sign = tr.signum();
    let n = n.scale(sign); // tr > 2 representative
    let tr = n.trace();
    let disc = (tr * tr - 4.0).sqrt();
    let lam = (tr + disc) / 2.0;
    let mu = (tr - disc) / 2.0;
    // eigenvectors
    let v1 = eigvec(&n, lam);
    let v2 = eigvec(&n, mu);
    let p = Mat2::new(v1.0, v2.0, v1.1, v2.1);
    let pinv = p.inv();
    let d = Mat2::new(lam.powf(s), 0.0, 0.0, mu.powf(s));
    p.mul(&d).mul(&pinv)
}

fn eigvec(m: &Mat2, lam: f64) -> (f64, f64) {
    let v1 = (m.b, lam - m.a);
    let v2 = (lam - m.d, m.c);
    let (a, b) = if v1.0.abs() + v1.1.abs() > v2.0.abs() + v2.1.abs() {
        v1
    } else {
        v2
    };
    let n = (a * a + b * b).sqrt();
    (a / n, b / n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mobius_on_h2_matches_formula() {
        let m = Mat2::new(2.0, 1.0, 1.0, 1.0); // det 1
        let z = H2::new(0.5, 2.0);
        let w = mobius_h2(&m, &z);
        // (2z+1)/(z+1) with z = 0.5 + 2i
        // numerator 2 + 4i, denominator 1.5 + 2i
        let den = 1.5 * 1.5 + 4.0;
        assert!((w.x - (2.0 * 1.5 + 4.0 * 2.0) / den).abs() < 1e-14);
        assert!((w.y - (4.0 * 1.5 - 2.0 * 2.0) / den).abs() < 1e-14);
    }

    #[test]
    fn rp1_charts_round_trip() {
        for x in [-5.0, -1.0, 0.0, 0.3, 2.0, 100.0] {
            let p = RP1::from_boundary(Some(x));
            assert!((p.boundary_value().unwrap() - x).abs() < 1e-9 * (1.0 + x * x));
        }
        assert!(RP1::from_boundary(None).boundary_value().is_none());
    }

    #[test]
    fn rp1_action_matches_h2_boundary_action() {
        let m = Mat2::new(1.3, 0.4, -0.2, 0.9);
        let m = m.scale(1.0 / m.det().sqrt());
        for x in [-3.0, -0.5, 0.0, 1.0, 7.0] {
            let img = mobius_rp1(&m, &RP1::from_boundary(Some(x)));
            let expected = (m.a * x + m.b) / (m.c * x + m.d);
            assert!(img.dist(&RP1::from_boundary(Some(expected))) < 1e-12);
        }
    }

    #[test]
    fn fixed_points_by_class() {
        // elliptic: none on RP1
        assert!(mobius_fixed_points_rp1(&rotation_about_i(1.0)).is_empty());
        // hyperbolic diag: 0 and infinity
        let h = Mat2::new(2.0, 0.0, 0.0, 0.5);
        let fps = mobius_fixed_points_rp1(&h);
        assert_eq!(fps.len(), 2);
        // parabolic: one
        let p = Mat2::new(1.0, 1.0, 0.0, 1.0);
        assert_eq!(mobius_fixed_points_rp1(&p).len(), 1);
    }

    #[test]
    fn rotation_fixes_i_and_has_no_boundary_fixed_points() {
        let r = rotation_about_i(0.7);
        let z = mobius_h2(&r, &H2::I);
        assert!((z.x).abs() < 1e-14 && (z.y - 1.0).abs() < 1e-14);
        assert!(mobius_fixed_points_rp1(&r).is_empty());
    }

    #[test]
    fn half_turn_squares_to_identity() {
        let p = H2::new(0.4, 2.5);
        let j = half_turn(&p);
        let j2 = j.mul(&j);
        let n = j2.scale(1.0 / j2.det().sqrt());
        assert!(n.add(&Mat2::IDENTITY).max_abs() < 1e-12 || n.sub(&Mat2::IDENTITY).max_abs() < 1e-12);
        let fixed = mobius_h2(&j, &p);
        assert!((fixed.x - p.x).abs() < 1e-12 && (fixed.y - p.y).abs() < 1e-12);
    }

    #[test]
    fn translation_along_imaginary_axis() {
        let g = OrientedGeodesic::new(
            RP1::from_boundary(Some(0.0)),
            RP1::from_boundary(None),
        );
        let t = g.translation(1.0);
        let z = mobius_h2(&t, &H2::I);
        assert!((z.y - 1.0f64.exp()).abs() < 1e-10 && z.x.abs() < 1e-12);
        assert!((translation_length(&t) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn side_of_oriented_geodesic() {
        // imaginary axis oriented upward: left is x < 0
        let g = OrientedGeodesic::new(
            RP1::from_boundary(Some(0.0)),
            RP1::from_boundary(None),
        );
        assert!(g.side(&H2::new(-1.0, 1.0)) > 0.0);
        assert!(g.side(&H2::new(1.0, 1.0)) < 0.0);
    }

    #[test]
    fn symmetric_quadruple_has_cross_ratio_minus_one() {
        // geodesics (-1,1) and (0,∞) are orthogonal at i
        let cr = cross_ratio(Some(-1.0), Some(0.0), Some(1.0), None);
        assert!((cr + 1.0).abs() < 1e-14);
        // rotate the pair about i: still -1
        let r = rotation_about_i(0.9);
        let ims: Vec<Option<f64>> = [Some(-1.0), Some(0.0), Some(1.0), None]
            .iter()
            .map(|x| mobius_rp1(&r, &RP1::from_boundary(*x)).boundary_value())
            .collect();
        let cr = cross_ratio(ims[0], ims[1], ims[2], ims[3]);
        assert!((cr + 1.0).abs() < 1e-10);
    }

    #[test]
    fn hyperbolic_power_interpolates() {
        let g = OrientedGeodesic::new(
            RP1::from_boundary(Some(-1.0)),
            RP1::from_boundary(Some(1.0)),
        );
        let t = g.translation(2.0);
        let half = hyperbolic_power(&t, 0.5);
        let composed = half.mul(&half);
        let n = composed.scale(1.0 / composed.det().sqrt());
        let t = t.scale(1.0 / t.det().sqrt());
        assert!(n.sub(&t).max_abs() < 1e-10 || n.add(&t).max_abs() < 1e-10);
        assert!((translation_length(&half) - 1.0).abs() < 1e-10);
    }

    #[test]
    fn attracting_fixed_point_of_diagonal() {
        let h = Mat2::new(3.0, 0.0, 0.0, 1.0 / 3.0);
        let fp = attracting_fixed_point(&h).unwrap();
        // x -> 9x attracts to infinity
        assert!(fp.dist(&RP1::from_boundary(None)) < 1e-12);
    }
}
