//! Models of AdS³: the quadric in ℝ^{2,2}, the 2×2 matrix model, and the
//! universal cover ℍ²×ℝ, with conversions and the ambient metric.
//!
//! The fixed linear identification between the two models is
//!
//! ```text
//! M(x) = | x4+x1  x3+x2 |
//!        | x2-x3  x4-x1 |
//! ```
//!
//! chosen so that (0,0,0,1) maps to the identity matrix and
//! det M(x) = -q(x), where q(x) = x1²+x2²-x3²-x4².

use crate::error::Error;
use crate::tol::Tolerances;
use crate::Result;

/// A 4-vector of ℝ^{2,2}.
pub type Vec4 = [f64; 4];

/// Quadratic form q₂,₂(x) = x₁²+x₂²−x₃²−x₄².
pub fn q22(x: &Vec4) -> f64 {
    x[0] * x[0] + x[1] * x[1] - x[2] * x[2] - x[3] * x[3]
}

/// Symmetric bilinear form ⟨v,w⟩₂,₂ associated with `q22`.
pub fn inner22(v: &Vec4, w: &Vec4) -> f64 {
    v[0] * w[0] + v[1] * w[1] - v[2] * w[2] - v[3] * w[3]
}

pub fn add4(a: &Vec4, b: &Vec4) -> Vec4 {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]]
}

pub fn sub4(a: &Vec4, b: &Vec4) -> Vec4 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]]
}

pub fn scale4(s: f64, a: &Vec4) -> Vec4 {
    [s * a[0], s * a[1], s * a[2], s * a[3]]
}

pub fn norm4_euclid(a: &Vec4) -> f64 {
    (a[0] * a[0] + a[1] * a[1] + a[2] * a[2] + a[3] * a[3]).sqrt()
}

/// A real 2×2 matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2 {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2 {
        a: 1.0,
        b: 0.0,
        c: 0.0,
        d: 1.0,
    };

    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn det(&self) -> f64 {
        self.a * self.d - self.b * self.c
    }

    pub fn trace(&self) -> f64 {
        self.a + self.d
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        Mat2 {
            a: self.a * o.a + self.b * o.c,
            b: self.a * o.b + self.b * o.d,
            c: self.c * o.a + self.d * o.c,
            d: self.c * o.b + self.d * o.d,
        }
    }

    /// Inverse for unit-determinant matrices (adjugate).
    pub fn inv_unit(&self) -> Mat2 {
        Mat2 {
            a: self.d,
            b: -self.b,
            c: -self.c,
            d: self.a,
        }
    }

    /// Inverse of a general invertible matrix.
    pub fn inv(&self) -> Mat2 {
        let det = self.det();
        Mat2 {
            a: self.d / det,
            b: -self.b / det,
            c: -self.c / det,
            d: self.a / det,
        }
    }

    pub fn add(&self, o: &Mat2) -> Mat2 {
        Mat2::new(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)
    }

    pub fn sub(&self, o: &Mat2) -> Mat2 {
        Mat2::new(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)
    }

    pub fn scale(&self, s: f64) -> Mat2 {
        Mat2::new(s * self.a, s * self.b, s * self.c, s * self.d)
    }

    /// Matrix commutator [A,B] = AB − BA.
    pub fn commutator(&self, o: &Mat2) -> Mat2 {
        self.mul(o).sub(&o.mul(self))
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> f64 {
        self.a.abs().max(self.b.abs()).max(self.c.abs()).max(self.d.abs())
    }

    /// Frobenius norm.
    pub fn frobenius(&self) -> f64 {
        (self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d).sqrt()
    }

    /// Entrywise distance to another matrix.
    pub fn dist(&self, o: &Mat2) -> f64 {
        self.sub(o).max_abs()
    }

    /// Sign-canonical representative of the projective class: the first
    /// nonzero entry in row-major order is positive.
    pub fn sign_canonical(&self) -> Mat2 {
        for e in [self.a, self.b, self.c, self.d] {
            if e != 0.0 {
                return if e < 0.0 { self.scale(-1.0) } else { *self };
            }
        }
        *self
    }

    /// Polarization of −det: the ambient inner product in the matrix model.
    ///
    /// Agrees with `inner22` through `mat_from_quadric` because the
    /// identification is a linear isometry. For unit-determinant Y this is
    /// −½ tr(X Y⁻¹) by the 2×2 identity det(X+Y) = det X + det Y + tr(X adj Y).
    pub fn inner_minus_det(&self, o: &Mat2) -> f64 {
        -0.5 * (self.a * o.d - self.b * o.c - self.c * o.b + self.d * o.a)
    }
}

/// A point of AdS³ in the quadric model: q₂,₂(x) = −1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadricPoint {
    x: Vec4,
}

impl QuadricPoint {
    /// Checked constructor.
    pub fn new(x: Vec4, tol: &Tolerances) -> Result<Self> {
        let residual = (q22(&x) + 1.0).abs();
        if residual > tol.algebraic {
            return Err(Error::NotOnQuadric { residual });
        }
        Ok(QuadricPoint { x })
    }

    /// Rescale an arbitrary timelike vector onto the quadric.
    pub fn normalize(x: Vec4) -> Result<Self> {
        let q = q22(&x);
        if q >= 0.0 {
            return Err(Error::NotOnQuadric { residual: q + 1.0 });
        }
        let s = 1.0 / (-q).sqrt();
        Ok(QuadricPoint { x: scale4(s, &x) })
    }

    pub fn coords(&self) -> &Vec4 {
        &self.x
    }

    /// The point (0,0,0,1), mapped to the identity matrix.
    pub fn base() -> Self {
        QuadricPoint {
            x: [0.0, 0.0, 0.0, 1.0],
        }
    }

    pub fn antipode(&self) -> Self {
        QuadricPoint {
            x: scale4(-1.0, &self.x),
        }
    }
}

/// A point of AdS³ in the matrix model: a sign-canonical unit-determinant
/// 2×2 matrix, representing a class in PSL(2,ℝ).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MatPoint {
    m: Mat2,
}

impl MatPoint {
    pub fn new(m: Mat2, tol: &Tolerances) -> Result<Self> {
        let residual = (m.det() - 1.0).abs();
        if residual > tol.algebraic {
            return Err(Error::Invalid(format!(
                "matrix determinant {} is not 1",
                m.det()
            )));
        }
        Ok(MatPoint {
            m: m.sign_canonical(),
        })
    }

    /// Rescale a matrix of positive determinant into SL(2,ℝ) and canonicalize.
    pub fn normalize(m: Mat2) -> Result<Self> {
        let det = m.det();
        if det <= 0.0 {
            return Err(Error::Invalid(format!(
                "matrix determinant {det} is not positive"
            )));
        }
        Ok(MatPoint {
            m: m.scale(1.0 / det.sqrt()).sign_canonical(),
        })
    }

    pub fn identity() -> Self {
        MatPoint { m: Mat2::IDENTITY }
    }

    pub fn mat(&self) -> &Mat2 {
        &self.m
    }

    /// Distance between projective classes, entrywise on canonical reps.
    pub fn class_dist(&self, o: &MatPoint) -> f64 {
        self.m.dist(&o.m).min(self.m.add(&o.m).max_abs())
    }
}

/// A tangent vector of the quadric model, stored with its base point.
#[derive(Debug, Clone, Copy)]
pub struct TangentVector {
    pub base: QuadricPoint,
    pub v: Vec4,
}

impl TangentVector {
    pub fn new(base: QuadricPoint, v: Vec4, tol: &Tolerances) -> Result<Self> {
        let residual = inner22(base.coords(), &v).abs();
        if residual > tol.algebraic {
            return Err(Error::NotTangent { residual });
        }
        Ok(TangentVector { base, v })
    }

    /// Project an arbitrary 4-vector onto the tangent space at `base`.
    pub fn project(base: QuadricPoint, v: Vec4) -> Self {
        // tangent space is x-perp; q(x) = -1 so the normal component is -<x,v> x.
        let coef = inner22(base.coords(), &v);
        TangentVector {
            base,
            v: add4(&v, &scale4(coef, base.coords())),
        }
    }

    pub fn q(&self) -> f64 {
        q22(&self.v)
    }
}

/// An orientation-preserving isometry of AdS³: a pair (A,B) acting by
/// X ↦ A X B⁻¹.
#[derive(Debug, Clone, Copy)]
pub struct Isometry {
    left: Mat2,
    right: Mat2,
}

impl Isometry {
    pub fn new(left: Mat2, right: Mat2, tol: &Tolerances) -> Result<Self> {
        for m in [&left, &right] {
            if (m.det() - 1.0).abs() > tol.algebraic {
                return Err(Error::Invalid(format!(
                    "isometry factor determinant {} is not 1",
                    m.det()
                )));
            }
        }
        Ok(Isometry {
            left: left.sign_canonical(),
            right: right.sign_canonical(),
        })
    }

    pub fn identity() -> Self {
        Isometry {
            left: Mat2::IDENTITY,
            right: Mat2::IDENTITY,
        }
    }

    pub fn left(&self) -> &Mat2 {
        &self.left
    }

    pub fn right(&self) -> &Mat2 {
        &self.right
    }

    /// Composition g∘h as isometries: (A,B)∘(C,D) = (AC, BD).
    pub fn compose(&self, other: &Isometry) -> Isometry {
        Isometry {
            left: self.left.mul(&other.left).sign_canonical(),
            right: self.right.mul(&other.right).sign_canonical(),
        }
    }

    /// Raw linear action on 2×2 matrices: X ↦ A X B⁻¹ (no canonicalization).
    pub fn act_linear(&self, x: &Mat2) -> Mat2 {
        self.left.mul(x).mul(&self.right.inv_unit())
    }

    /// Raw linear action on ℝ^{2,2} through the matrix identification.
    pub fn act_vec(&self, x: &Vec4) -> Vec4 {
        quadric_vec_from_mat(&self.act_linear(&mat_vec_from_quadric(x)))
    }
}

/// A point of the universal cover ℍ²×ℝ: `y` on the hyperboloid model of ℍ²
/// (q₂,₁(y) = −1, y₃ ≥ 1), `t` the fiber coordinate in radians.
#[derive(Debug, Clone, Copy)]
pub struct UnivCoverPoint {
    pub y: [f64; 3],
    pub t: f64,
}

impl UnivCoverPoint {
    pub fn new(y: [f64; 3], t: f64, tol: &Tolerances) -> Result<Self> {
        let q = y[0] * y[0] + y[1] * y[1] - y[2] * y[2];
        if (q + 1.0).abs() > tol.algebraic || y[2] < 1.0 - tol.algebraic {
            return Err(Error::Invalid(format!(
                "not on the upper hyperboloid: q = {q}, y3 = {}",
                y[2]
            )));
        }
        Ok(UnivCoverPoint { y, t })
    }
}

/// Linear identification ℝ^{2,2} → M(2,ℝ) with det M = −q.
pub fn mat_vec_from_quadric(x: &Vec4) -> Mat2 {
    Mat2 {
        a: x[3] + x[0],
        b: x[2] + x[1],
        c: x[1] - x[2],
        d: x[3] - x[0],
    }
}

/// Exact linear inverse of `mat_vec_from_quadric`.
pub fn quadric_vec_from_mat(m: &Mat2) -> Vec4 {
    [
        0.5 * (m.a - m.d),
        0.5 * (m.b + m.c),
        0.5 * (m.b - m.c),
        0.5 * (m.a + m.d),
    ]
}

/// Convert a quadric point to its PSL(2,ℝ) class.
pub fn mat_from_quadric(x: &QuadricPoint, tol: &Tolerances) -> Result<MatPoint> {
    let residual = (q22(x.coords()) + 1.0).abs();
    if residual > tol.algebraic {
        return Err(Error::NotOnQuadric { residual });
    }
    MatPoint::new(mat_vec_from_quadric(x.coords()), tol)
}

/// Convert a matrix class back to the quadric; the sign-canonical
/// representative is used, fixing the lift.
pub fn quadric_from_mat(m: &MatPoint, tol: &Tolerances) -> Result<QuadricPoint> {
    QuadricPoint::new(quadric_vec_from_mat(m.mat()), tol)
}

/// Ambient inner product ⟨v,w⟩₂,₂ (defined on all of ℝ^{2,2}; the `at`
/// argument of the spec is immaterial for the flat ambient form).
pub fn ads_inner(v: &Vec4, w: &Vec4) -> f64 {
    inner22(v, w)
}

/// Apply an isometry to a matrix point, returning the canonical class.
pub fn apply_isometry(g: &Isometry, x: &MatPoint) -> MatPoint {
    MatPoint {
        m: g.act_linear(x.mat()).sign_canonical(),
    }
}

/// Covering map π(y,t) = (y₁, y₂, y₃ cos t, y₃ sin t).
pub fn cover_project(p: &UnivCoverPoint) -> QuadricPoint {
    QuadricPoint {
        x: [
            p.y[0],
            p.y[1],
            p.y[2] * p.t.cos(),
            p.y[2] * p.t.sin(),
        ],
    }
}

/// Lift of a quadric point; `branch` selects t = t₀ + 2πk with canonical
/// t₀ ∈ (−π, π].
pub fn cover_lift(x: &QuadricPoint, branch: i32) -> UnivCoverPoint {
    let c = x.coords();
    let y3 = (c[2] * c[2] + c[3] * c[3]).sqrt();
    let mut t0 = c[3].atan2(c[2]);
    if t0 <= -std::f64::consts::PI {
        t0 += 2.0 * std::f64::consts::PI;
    }
    UnivCoverPoint {
        y: [c[0], c[1], y3],
        t: t0 + 2.0 * std::f64::consts::PI * f64::from(branch),
    }
}

/// Sectional curvature of the plane spanned by two tangent vectors.
///
/// Evaluates the embedded curvature identity R(u,v)w = ⟨u,w⟩v − ⟨v,w⟩u
/// term by term and returns ⟨R(u,v)v,u⟩ / (⟨u,u⟩⟨v,v⟩−⟨u,v⟩²), which is
/// identically −1 but is not simplified here so the formula itself is
/// exercised.
pub fn sectional_curvature(u: &TangentVector, v: &TangentVector) -> Result<f64> {
    let uu = inner22(&u.v, &u.v);
    let vv = inner22(&v.v, &v.v);
    let uv = inner22(&u.v, &v.v);
    let gram = uu * vv - uv * uv;
    if gram.abs() <= 1e-8 {
        return Err(Error::DegeneratePlane { gram: gram.abs() });
    }
    // R(u,v)v = <u,v> v - <v,v> u
    let r = sub4(&scale4(uv, &v.v), &scale4(vv, &u.v));
    Ok(inner22(&r, &u.v) / gram)
}

/// Hyperbolic plane point (y₁,y₂,y₃) on the hyperboloid from disc
/// coordinates |x| < 1.
pub fn hyperboloid_from_disc(x: f64, y: f64) -> [f64; 3] {
    let r2 = x * x + y * y;
    let s = 1.0 / (1.0 - r2);
    [2.0 * x * s, 2.0 * y * s, (1.0 + r2) * s]
}

/// Inverse of `hyperboloid_from_disc`.
pub fn disc_from_hyperboloid(y: &[f64; 3]) -> (f64, f64) {
    (y[0] / (1.0 + y[2]), y[1] / (1.0 + y[2]))
}
