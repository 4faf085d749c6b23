//! Closed-form exponential map, classification and parameterization of
//! geodesics, and the point/plane/geodesic duality.
//!
//! Timelike geodesics are the sets L_{p,q} = {X : X·q = p} for p,q ∈ ℍ²;
//! spacelike geodesics are L_{ℓ,ȷ} = {X : X·ȷ = ℓ as oriented geodesics}.

use crate::error::Error;
use crate::hyper::{
    mobius_h2, mobius_to_points, point_to_upper, rotation_about, OrientedGeodesic, H2, RP1,
};
use crate::models::{
    add4, ads_inner, inner22, q22, quadric_vec_from_mat, scale4, Mat2, MatPoint, QuadricPoint,
    TangentVector, Vec4,
};
use crate::tol::Tolerances;
use crate::Result;

/// Causal kind of a tangent vector or geodesic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Spacelike,
    Timelike,
    Lightlike,
}

/// Detect the causal kind of a vector from q(v) with a null band of width `tol`.
pub fn detect_kind(q: f64, tol: f64) -> Kind {
    if q.abs() < tol {
        Kind::Lightlike
    } else if q > 0.0 {
        Kind::Spacelike
    } else {
        Kind::Timelike
    }
}

/// Geodesic point at parameter `t` from `x` with initial velocity `v`:
/// cosh(t)x + sinh(t)v for spacelike v, cos(t)x + sin(t)v for timelike v,
/// x + tv for lightlike v. The kind is detected from q(v) with the null
/// band of `tol.algebraic`; use [`exp_point_kind`] to force a kind.
pub fn exp_point(
    x: &QuadricPoint,
    v: &TangentVector,
    t: f64,
    tol: &Tolerances,
) -> Result<QuadricPoint> {
    let kind = detect_kind(v.q(), tol.algebraic);
    exp_point_kind(x, v, t, kind, tol)
}

/// Geodesic point with the causal kind forced by the caller.
pub fn exp_point_kind(
    x: &QuadricPoint,
    v: &TangentVector,
    t: f64,
    kind: Kind,
    tol: &Tolerances,
) -> Result<QuadricPoint> {
    let residual = inner22(x.coords(), &v.v).abs();
    if residual > tol.algebraic {
        return Err(Error::NotTangent { residual });
    }
    let p = match kind {
        Kind::Spacelike => add4(&scale4(t.cosh(), x.coords()), &scale4(t.sinh(), &v.v)),
        Kind::Timelike => add4(&scale4(t.cos(), x.coords()), &scale4(t.sin(), &v.v)),
        Kind::Lightlike => add4(x.coords(), &scale4(t, &v.v)),
    };
    // For exactly normalized input this is already on the quadric; renormalize
    // to absorb rounding so long chains of exp stay consistent.
    QuadricPoint::normalize(p)
}

/// Velocity of the geodesic flow at parameter `t` (the parallel transport of
/// `v` along its own geodesic).
pub fn exp_velocity(x: &QuadricPoint, v: &TangentVector, t: f64, tol: &Tolerances) -> Vec4 {
    match detect_kind(v.q(), tol.algebraic) {
        Kind::Spacelike => add4(&scale4(t.sinh(), x.coords()), &scale4(t.cosh(), &v.v)),
        Kind::Timelike => add4(&scale4(-t.sin(), x.coords()), &scale4(t.cos(), &v.v)),
        Kind::Lightlike => v.v,
    }
}

/// How (if at all) two quadric points are joined by a geodesic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Connection {
    Spacelike,
    Lightlike,
    Timelike,
    None,
}

/// Classify geodesic connectability by the sign conditions on ⟨x,y⟩:
/// spacelike iff < −1, lightlike iff = −1, timelike iff |⟨x,y⟩| < 1.
pub fn connection(x: &QuadricPoint, y: &QuadricPoint, tol: &Tolerances) -> Connection {
    let ip = ads_inner(x.coords(), y.coords());
    if (ip + 1.0).abs() <= tol.algebraic {
        Connection::Lightlike
    } else if ip < -1.0 {
        Connection::Spacelike
    } else if ip.abs() < 1.0 {
        Connection::Timelike
    } else {
        Connection::None
    }
}

/// A totally geodesic plane of AdS³, tagged by causal type.
#[derive(Debug, Clone, Copy)]
pub enum Plane {
    /// Spacelike plane {y : ⟨w, y⟩ = 0} with dual point w on the quadric.
    Spacelike { dual: QuadricPoint },
    /// Lightlike plane, tangent to the boundary; `polar` is the null polar
    /// vector, determined up to scale.
    Lightlike { polar: Vec4 },
}

impl Plane {
    /// Signed evaluation of the defining functional at a 4-vector.
    pub fn eval(&self, y: &Vec4) -> f64 {
        match self {
            Plane::Spacelike { dual } => inner22(dual.coords(), y),
            Plane::Lightlike { polar } => inner22(polar, y),
        }
    }
}

/// The spacelike plane dual to a point.
pub fn dual_plane(x: &MatPoint, tol: &Tolerances) -> Result<Plane> {
    let dual = crate::models::quadric_from_mat(x, tol)?;
    Ok(Plane::Spacelike { dual })
}

/// The point dual to a spacelike plane.
pub fn dual_point(p: &Plane, tol: &Tolerances) -> Result<MatPoint> {
    match p {
        Plane::Spacelike { dual } => crate::models::mat_from_quadric(dual, tol),
        Plane::Lightlike { .. } => Err(Error::NotSpacelike),
    }
}

/// Sample points of a spacelike plane: the image of an ℍ² grid under the
/// equivariant isometry p ↦ (half-turn fixing p), left-translated so the
/// plane dual to the identity maps to the requested plane.
pub fn sample_plane(p: &Plane, n: usize, tol: &Tolerances) -> Result<Vec<MatPoint>> {
    let dual_mat = dual_point(p, tol)?;
    let mut out = Vec::with_capacity(n);
    let m = (n as f64).sqrt().ceil() as usize;
    for i in 0..m {
        for j in 0..m {
            if out.len() == n {
                break;
            }
            let x = -2.0 + 4.0 * (i as f64 + 0.5) / m as f64;
            let logy = (0.2f64).ln() + ((5.0f64).ln() - (0.2f64).ln()) * (j as f64 + 0.5) / m as f64;
            let pt = H2::new(x, logy.exp());
            let j2 = crate::hyper::half_turn(&pt);
            // the plane dual to x is the left translate x * P_1
            let m2 = dual_mat.mat().mul(&j2);
            out.push(MatPoint::normalize(m2)?);
        }
    }
    Ok(out)
}

/// A geodesic of AdS³ with its classifying data.
#[derive(Debug, Clone)]
pub struct Geodesic {
    pub kind: Kind,
    pub base: QuadricPoint,
    pub dir: TangentVector,
    /// For timelike geodesics, the (p,q) pair with membership law X·q = p.
    pub timelike_pair: Option<(H2, H2)>,
    /// For spacelike geodesics, the ordered pair of oriented ℍ²-geodesics.
    pub spacelike_pair: Option<(OrientedGeodesic, OrientedGeodesic)>,
}

impl Geodesic {
    /// Point at parameter t.
    pub fn at(&self, t: f64, tol: &Tolerances) -> Result<QuadricPoint> {
        exp_point_kind(&self.base, &self.dir, t, self.kind, tol)
    }
}

/// The timelike geodesic L_{p,q} = {X : X·q = p}.
///
/// The parameterization origin is the point of L_{p,q} minimizing the
/// Frobenius distance to the identity among sign-canonical representatives.
pub fn timelike_geodesic(p: &H2, q: &H2, tol: &Tolerances) -> Result<Geodesic> {
    // X0 = T_p T_q^{-1} satisfies X0 . q = p; the full geodesic is the orbit
    // of X0 under the elliptic group about p acting on the left.
    let x0 = point_to_upper(p).mul(&point_to_upper(q).inv_unit());
    let at_angle = |theta: f64| -> Mat2 { rotation_about(p, theta).mul(&x0) };
    // coarse scan over the SL(2,R) period, then golden-section refinement
    let frob = |theta: f64| {
        at_angle(theta)
            .sign_canonical()
            .sub(&Mat2::IDENTITY)
            .frobenius()
    };
    let steps = 512;
    let mut best = (f64::INFINITY, 0.0);
    for i in 0..steps {
        let th = 2.0 * crate::hyper::PI * i as f64 / steps as f64;
        let d = frob(th);
        if d < best.0 {
            best = (d, th);
        }
    }
    let gr = (5.0f64.sqrt() - 1.0) / 2.0;
    let w = 2.0 * crate::hyper::PI / steps as f64;
    let (mut a, mut b) = (best.1 - w, best.1 + w);
    for _ in 0..60 {
        let c = b - gr * (b - a);
        let d = a + gr * (b - a);
        if frob(c) < frob(d) {
            b = d;
        } else {
            a = c;
        }
    }
    let theta0 = 0.5 * (a + b);
    let origin_raw = at_angle(theta0);
    let origin = origin_raw.sign_canonical();
    let base = QuadricPoint::normalize(quadric_vec_from_mat(&origin))?;
    // unit timelike direction: derivative of the elliptic orbit, transported
    // to the canonical representative's sign
    let h = 1e-6;
    let dm = at_angle(theta0 + h).sub(&at_angle(theta0 - h)).scale(0.5 / h);
    let sign = if origin.dist(&origin_raw) < 1e-9 { 1.0 } else { -1.0 };
    let dv = quadric_vec_from_mat(&dm.scale(sign));
    let vt = TangentVector::project(base, dv);
    let qv = q22(&vt.v);
    if qv >= 0.0 {
        return Err(Error::NotTimelike);
    }
    let dir = TangentVector {
        base,
        v: scale4(1.0 / (-qv).sqrt(), &vt.v),
    };
    let _ = tol;
    Ok(Geodesic {
        kind: Kind::Timelike,
        base,
        dir,
        timelike_pair: Some((*p, *q)),
        spacelike_pair: None,
    })
}

/// Membership residual of a matrix class on L_{p,q}: d_{ℍ²}(X·q, p).
pub fn timelike_membership(x: &MatPoint, p: &H2, q: &H2) -> f64 {
    mobius_h2(x.mat(), q).dist(p)
}

/// The spacelike geodesic L_{ℓ,ȷ}.
pub fn spacelike_geodesic(
    l: &OrientedGeodesic,
    j: &OrientedGeodesic,
    tol: &Tolerances,
) -> Result<Geodesic> {
    if l.initial.dist(&l.fin) < tol.algebraic || j.initial.dist(&j.fin) < tol.algebraic {
        return Err(Error::DegenerateGeodesic);
    }
    // X0 = G_l G_j^{-1} maps j to l as oriented geodesics; the geodesic is
    // t -> G_l diag(e^{t/2}, e^{-t/2}) G_j^{-1}.
    let gl = mobius_to_points(&l.initial, &l.fin);
    let gj = mobius_to_points(&j.initial, &j.fin);
    let x0 = gl.mul(&gj.inv_unit());
    let base = QuadricPoint::normalize(quadric_vec_from_mat(&x0))?;
    let h = 1e-6;
    let a_t = |t: f64| Mat2::new((0.5 * t).exp(), 0.0, 0.0, (-0.5 * t).exp());
    let dm = gl
        .mul(&a_t(h))
        .mul(&gj.inv_unit())
        .sub(&gl.mul(&a_t(-h)).mul(&gj.inv_unit()))
        .scale(0.5 / h);
    let dv = quadric_vec_from_mat(&dm);
    let vt = TangentVector::project(base, dv);
    let qv = q22(&vt.v);
    if qv <= 0.0 {
        return Err(Error::NotSpacelike);
    }
    let dir = TangentVector {
        base,
        v: scale4(1.0 / qv.sqrt(), &vt.v),
    };
    Ok(Geodesic {
        kind: Kind::Spacelike,
        base,
        dir,
        timelike_pair: None,
        spacelike_pair: Some((*l, *j)),
    })
}

/// Boundary endpoints of a spacelike geodesic in ℝP¹×ℝP¹:
/// (x₁,y₂) and (y₁,x₂) where x is the final and y the initial endpoint of
/// each factor.
pub fn boundary_endpoints(g: &Geodesic) -> Result<[(RP1, RP1); 2]> {
    let (l, j) = g.spacelike_pair.ok_or(Error::NotSpacelike)?;
    Ok([(l.fin, j.fin), (l.initial, j.initial)])
}

/// The dual of a spacelike geodesic: L_{ℓ,ȷ} ↦ L_{ℓ,ȷ'} (second factor
/// reversed). Involutive by construction.
pub fn dual_geodesic(g: &Geodesic, tol: &Tolerances) -> Result<Geodesic> {
    let (l, j) = g.spacelike_pair.ok_or(Error::NotSpacelike)?;
    spacelike_geodesic(&l, &j.reversed(), tol)
}
