//! The boundary ∂AdS²,¹ ≅ ℝP¹×ℝP¹: rank-one matrix classes, the conformal
//! causal structure, and achronal meridians with their 1-Lipschitz lifts.
//!
//! The torus boundary of the double cover is parameterized by
//! x(θ,t) = (cos θ, sin θ, cos t, sin t); under the fixed identification the
//! rank-one class M(x(θ,t)) has image angle ξ = (θ+t)/2 − π/4 and kernel
//! angle η = (θ−t)/2 − π/4 (mod π). Inverting, a meridian through boundary
//! angles (ξ, η) lifts to equator angle θ = ξ+η+π/2 and height t = ξ−η,
//! and the lift of an orientation-preserving circle map is automatically
//! 1-Lipschitz for the hemispherical metric.

use std::sync::OnceLock;

use crate::error::Error;
use crate::hyper::{mobius_rp1, RP1};
use crate::models::Mat2;
use crate::tol::Tolerances;
use crate::Result;

pub const PI: f64 = std::f64::consts::PI;
pub const TAU: f64 = 2.0 * std::f64::consts::PI;

/// A point of ∂AdS²,¹ as a pair of ℝP¹ angles (image, kernel).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryPoint {
    pub xi: RP1,
    pub eta: RP1,
}

impl BoundaryPoint {
    pub fn new(xi: RP1, eta: RP1) -> Self {
        BoundaryPoint { xi, eta }
    }

    /// Reconstruct a rank-one matrix representative with this image and
    /// kernel.
    pub fn rank1(&self) -> Mat2 {
        let (uc, us) = self.xi.dir();
        let (vc, vs) = self.eta.dir();
        // kernel direction (vc, vs): rows proportional to (-vs, vc)
        Mat2::new(uc * -vs, uc * vc, us * -vs, us * vc)
    }

    /// Torus coordinates (θ, t) of one of the two lifts to ∂AdS^{2,1}.
    pub fn torus_lift(&self) -> (f64, f64) {
        let xi = self.xi.angle();
        let eta = self.eta.angle();
        (xi + eta + PI / 2.0, xi - eta)
    }
}

/// The (image, kernel) pair of a rank-one matrix.
pub fn boundary_from_rank1(x: &Mat2, _tol: &Tolerances) -> Result<BoundaryPoint> {
    // singular values via the Frobenius norm and determinant
    let f2 = x.a * x.a + x.b * x.b + x.c * x.c + x.d * x.d;
    let det = x.det().abs();
    if f2 == 0.0 {
        return Err(Error::NotRankOne);
    }
    let smax2 = 0.5 * (f2 + (f2 * f2 - 4.0 * det * det).max(0.0).sqrt());
    let smin = det / smax2.sqrt();
    if smin > 1e-9 * smax2.sqrt() {
        return Err(Error::NotRankOne);
    }
    // image: larger column; kernel: orthogonal of larger row
    let (c1, c2) = (x.a * x.a + x.c * x.c, x.b * x.b + x.d * x.d);
    let xi = if c1 >= c2 {
        RP1::from_dir(x.a, x.c)
    } else {
        RP1::from_dir(x.b, x.d)
    };
    let (r1, r2) = (x.a * x.a + x.b * x.b, x.c * x.c + x.d * x.d);
    let eta = if r1 >= r2 {
        RP1::from_dir(-x.b, x.a)
    } else {
        RP1::from_dir(-x.d, x.c)
    };
    Ok(BoundaryPoint::new(xi, eta))
}

/// Outcome of a boundary-convergence test.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LimitOutcome {
    Limit(BoundaryPoint),
    NoLimit,
}

/// Detect convergence of a sequence of PSL(2,ℝ) classes to ∂AdS²,¹ by the
/// criterion at p = i: Xₙ(i) and Xₙ⁻¹(i) must both escape to ∂ℍ² with
/// Cauchy-converging boundary angles (within 1e-6 on the last terms).
pub fn boundary_limit(xs: &[Mat2]) -> Result<LimitOutcome> {
    if xs.len() < 3 {
        return Err(Error::Invalid("need at least 3 terms".into()));
    }
    let tail = &xs[xs.len() - 3..];
    let mut xi_angles = Vec::new();
    let mut eta_angles = Vec::new();
    for m in tail {
        let (xi, prox_f) = escape_angle(m);
        let (eta, prox_b) = escape_angle(&m.inv());
        if prox_f > 1e-6 || prox_b > 1e-6 {
            return Ok(LimitOutcome::NoLimit);
        }
        xi_angles.push(xi);
        eta_angles.push(eta);
    }
    for w in [&xi_angles, &eta_angles] {
        for p in w.windows(2) {
            if p[0].dist(&p[1]) > 1e-6 {
                return Ok(LimitOutcome::NoLimit);
            }
        }
    }
    Ok(LimitOutcome::Limit(BoundaryPoint::new(
        xi_angles[2],
        eta_angles[2],
    )))
}

/// Boundary angle toward which M(i) escapes, with a proximity measure
/// (0 at the boundary). Computed in the disc model via the Cayley transform
/// so escape toward ∞ is handled like any other boundary point.
fn escape_angle(m: &Mat2) -> (RP1, f64) {
    // z = M(i) = ((ac+bd) + i det) / (c² + d²)
    let den = m.c * m.c + m.d * m.d;
    let zx = (m.a * m.c + m.b * m.d) / den;
    let zy = m.det() / den;
    // w = (z − i)/(z + i) in the closed unit disc
    let (nre, nim) = (zx, zy - 1.0);
    let (dre, dim) = (zx, zy + 1.0);
    let d2 = dre * dre + dim * dim;
    let wre = (nre * dre + nim * dim) / d2;
    let wim = (nim * dre - nre * dim) / d2;
    let r = (wre * wre + wim * wim).sqrt();
    let psi = wim.atan2(wre);
    // disc angle ψ corresponds to the boundary real −cot(ψ/2)
    let angle = RP1::from_dir(-(0.5 * psi).cos(), (0.5 * psi).sin());
    (angle, 1.0 - r)
}

/// Causal relation of two boundary points, per the sign of
/// (θ₁(p)−θ₁(p₀))(θ₂(q)−θ₂(q₀)) in an angle chart.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CausalSign {
    TimelikeRelated,
    SpacelikeRelated,
    LightlikeRelated,
}

/// A product angle chart: determinations of both ℝP¹ factors around center
/// angles, each valid within `half_width` < π/2.
#[derive(Debug, Clone, Copy)]
pub struct AngleChart {
    pub center1: RP1,
    pub center2: RP1,
    pub half_width: f64,
}

impl AngleChart {
    pub fn centered_at(p: &BoundaryPoint) -> Self {
        AngleChart {
            center1: p.xi,
            center2: p.eta,
            half_width: PI / 2.0 - 1e-9,
        }
    }

    fn lift(&self, center: &RP1, p: &RP1) -> Result<f64> {
        let mut d = (p.angle() - center.angle()).rem_euclid(PI);
        if d > PI / 2.0 {
            d -= PI;
        }
        if d.abs() > self.half_width {
            return Err(Error::OutOfChart);
        }
        Ok(center.angle() + d)
    }
}

/// Causal sign of `p` relative to `p0` inside the chart.
pub fn causal_sign(
    p0: &BoundaryPoint,
    p: &BoundaryPoint,
    chart: &AngleChart,
    _tol: &Tolerances,
) -> Result<CausalSign> {
    let a0 = chart.lift(&chart.center1, &p0.xi)?;
    let a1 = chart.lift(&chart.center1, &p.xi)?;
    let b0 = chart.lift(&chart.center2, &p0.eta)?;
    let b1 = chart.lift(&chart.center2, &p.eta)?;
    let prod = (a1 - a0) * (b1 - b0);
    if (a1 - a0).abs() < 1e-10 || (b1 - b0).abs() < 1e-10 {
        Ok(CausalSign::LightlikeRelated)
    } else if prod < 0.0 {
        Ok(CausalSign::TimelikeRelated)
    } else {
        Ok(CausalSign::SpacelikeRelated)
    }
}

/// The lift of a meridian: a 1-Lipschitz graph over the equator, sampled as
/// (θ, t) pairs with θ strictly increasing over one 2π period.
#[derive(Debug, Clone)]
pub struct Lift {
    pub theta: Vec<f64>,
    pub t: Vec<f64>,
}

impl Lift {
    /// Periodic evaluation by linear interpolation.
    pub fn eval(&self, theta: f64) -> f64 {
        let n = self.theta.len();
        let t0 = self.theta[0];
        let x = (theta - t0).rem_euclid(TAU) + t0;
        match self.theta.binary_search_by(|a| a.partial_cmp(&x).unwrap()) {
            Ok(i) => self.t[i],
            Err(i) => {
                if i == 0 || i == n {
                    let (ta, fa) = (self.theta[n - 1], self.t[n - 1]);
                    let (tb, fb) = (self.theta[0] + TAU, self.t[0]);
                    let u = if tb - ta > 1e-300 {
                        ((x - ta).rem_euclid(TAU)) / (tb - ta)
                    } else {
                        0.0
                    };
                    fa + u.clamp(0.0, 1.0) * (fb - fa)
                } else {
                    let (ta, fa) = (self.theta[i - 1], self.t[i - 1]);
                    let (tb, fb) = (self.theta[i], self.t[i]);
                    fa + (x - ta) / (tb - ta) * (fb - fa)
                }
            }
        }
    }

    pub fn min(&self) -> f64 {
        self.t.iter().cloned().fold(f64::INFINITY, f64::min)
    }

    pub fn max(&self) -> f64 {
        self.t.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn oscillation(&self) -> f64 {
        self.max() - self.min()
    }

    /// Worst Lipschitz quotient over sample pairs, with the equator distance.
    pub fn lipschitz_constant(&self) -> f64 {
        let n = self.theta.len();
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                let d = equator_dist(self.theta[i], self.theta[j]);
                if d > 1e-9 {
                    worst = worst.max((self.t[i] - self.t[j]).abs() / d);
                }
            }
        }
        worst
    }
}

/// Circle distance of two equator angles, in [0, π].
pub fn equator_dist(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(TAU);
    d.min(TAU - d)
}

/// Hemispherical embedding of the closed unit disc into S² (stereographic
/// from the south pole; ∂𝔻 maps to the equator).
pub fn hemi_embed(x: f64, y: f64) -> [f64; 3] {
    let r2 = x * x + y * y;
    let s = 1.0 / (1.0 + r2);
    [2.0 * x * s, 2.0 * y * s, (1.0 - r2) * s]
}

/// Hemispherical distance between two points of the closed disc.
pub fn hemi_dist(a: (f64, f64), b: (f64, f64)) -> f64 {
    let pa = hemi_embed(a.0, a.1);
    let pb = hemi_embed(b.0, b.1);
    let dot = pa[0] * pb[0] + pa[1] * pb[1] + pa[2] * pb[2];
    dot.clamp(-1.0, 1.0).acos()
}

/// Representation of an achronal meridian.
#[derive(Debug, Clone)]
pub enum MeridianRep {
    /// Sampled orientation-preserving circle map: lifted samples
    /// (ξᵢ, φ̃(ξᵢ)) with ξ strictly increasing over [ξ₀, ξ₀+π) and
    /// φ̃(ξ+π) = φ̃(ξ)+π, interpolated by a monotone cubic.
    Homeo { xi: Vec<f64>, phi: Vec<f64> },
    /// Cyclic polygon of lightlike segments, as vertices in ℝP¹×ℝP¹ with
    /// consecutive vertices alternating between the two rulings.
    Polygon { vertices: Vec<BoundaryPoint> },
}

/// An achronal meridian in ∂AdS²,¹ with a lazily computed lift.
#[derive(Debug)]
pub struct AchronalMeridian {
    pub rep: MeridianRep,
    lift: OnceLock<Lift>,
}

impl Clone for AchronalMeridian {
    fn clone(&self) -> Self {
        AchronalMeridian {
            rep: self.rep.clone(),
            lift: OnceLock::new(),
        }
    }
}

impl AchronalMeridian {
    /// Build from raw circle-map samples (ℝP¹ angle pairs), checking strict
    /// cyclic monotonicity. Samples need not be sorted.
    pub fn from_homeo_samples(samples: &[(RP1, RP1)]) -> Result<Self> {
        if samples.len() < 64 {
            return Err(Error::Invalid(format!(
                "need at least 64 samples, got {}",
                samples.len()
            )));
        }
        let mut pairs: Vec<(f64, f64)> = samples
            .iter()
            .map(|(a, b)| (a.angle(), b.angle()))
            .collect();
        pairs.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        // lift the phi values to a continuous increasing branch
        let mut xi: Vec<f64> = Vec::with_capacity(pairs.len());
        let mut phi: Vec<f64> = Vec::with_capacity(pairs.len());
        let mut offset = 0.0;
        for (i, (x, p)) in pairs.iter().enumerate() {
            let mut val = p + offset;
            if i > 0 {
                while val <= phi[i - 1] {
                    offset += PI;
                    val += PI;
                }
                if val - phi[i - 1] >= PI {
                    return Err(Error::NotMonotone);
                }
                if *x <= xi[i - 1] {
                    return Err(Error::NotMonotone);
                }
            }
            xi.push(*x);
            phi.push(val);
        }
        // total increase over the period must be π (degree one)
        let wrap = phi[0] + PI - phi[phi.len() - 1];
        if wrap <= 0.0 || wrap >= PI {
            return Err(Error::NotMonotone);
        }
        Ok(AchronalMeridian {
            rep: MeridianRep::Homeo { xi, phi },
            lift: OnceLock::new(),
        })
    }

    /// Sample the boundary graph of a Möbius map, n samples.
    pub fn from_mobius(m: &Mat2, n: usize) -> Result<Self> {
        let samples: Vec<(RP1, RP1)> = (0..n)
            .map(|i| {
                let a = RP1::from_angle(PI * i as f64 / n as f64);
                (a, mobius_rp1(m, &a))
            })
            .collect();
        Self::from_homeo_samples(&samples)
    }

    /// Sample an arbitrary circle map φ given on ℝP¹ angles.
    pub fn from_circle_map(f: impl Fn(f64) -> f64, n: usize) -> Result<Self> {
        let samples: Vec<(RP1, RP1)> = (0..n)
            .map(|i| {
                let a = PI * i as f64 / n as f64;
                (RP1::from_angle(a), RP1::from_angle(f(a)))
            })
            .collect();
        Self::from_homeo_samples(&samples)
    }

    /// Build a polygon meridian from its vertex cycle.
    pub fn from_polygon(vertices: Vec<BoundaryPoint>) -> Result<Self> {
        if vertices.len() < 2 {
            return Err(Error::Invalid("polygon needs at least 2 vertices".into()));
        }
        let n = vertices.len();
        for i in 0..n {
            let a = &vertices[i];
            let b = &vertices[(i + 1) % n];
            let share_xi = a.xi.dist(&b.xi) < 1e-12;
            let share_eta = a.eta.dist(&b.eta) < 1e-12;
            if share_xi == share_eta {
                return Err(Error::Invalid(
                    "consecutive polygon vertices must share exactly one ruling".into(),
                ));
            }
        }
        Ok(AchronalMeridian {
            rep: MeridianRep::Polygon { vertices },
            lift: OnceLock::new(),
        })
    }

    /// The canonical two-step meridian with corner values (x, y):
    /// vertices (x,x), (y,x), (y,y), (x,y) joined by lightlike segments.
    pub fn two_step(x: RP1, y: RP1) -> Result<Self> {
        Self::from_polygon(vec![
            BoundaryPoint::new(x, x),
            BoundaryPoint::new(y, x),
            BoundaryPoint::new(y, y),
            BoundaryPoint::new(x, y),
        ])
    }

    /// Evaluate the circle map of a homeo meridian at a lifted angle, by
    /// monotone cubic interpolation of the samples.
    pub fn phi(&self, x: f64) -> Result<f64> {
        match &self.rep {
            MeridianRep::Homeo { xi, phi } => Ok(monotone_cubic_periodic(xi, phi, x)),
            MeridianRep::Polygon { .. } => {
                Err(Error::Invalid("polygon meridian has no circle map".into()))
            }
        }
    }

    pub fn is_polygon(&self) -> bool {
        matches!(self.rep, MeridianRep::Polygon { .. })
    }

    /// The 1-Lipschitz lift over the equator (memoized, thread-safe).
    pub fn lift(&self) -> &Lift {
        self.lift.get_or_init(|| match &self.rep {
            MeridianRep::Homeo { xi, phi } => {
                let n = 4 * xi.len();
                let mut theta = Vec::with_capacity(n);
                let mut t = Vec::with_capacity(n);
                for i in 0..n {
                    let x = xi[0] + PI * i as f64 / n as f64;
                    let p = monotone_cubic_periodic(xi, phi, x);
                    theta.push(x + p + PI / 2.0);
                    t.push(x - p);
                }
                Lift { theta, t }
            }
            MeridianRep::Polygon { vertices } => {
                let n = vertices.len();
                let mut theta = Vec::new();
                let mut t = Vec::new();
                let mut cur_xi = vertices[0].xi.angle();
                let mut cur_eta = vertices[0].eta.angle();
                let per_seg = 64usize;
                for i in 0..n {
                    let a = &vertices[i];
                    let b = &vertices[(i + 1) % n];
                    let move_xi = a.xi.dist(&b.xi) > 1e-12;
                    if move_xi {
                        let d = positive_branch(b.xi.angle() - cur_xi);
                        for k in 0..per_seg {
                            let u = k as f64 / per_seg as f64;
                            let x = cur_xi + u * d;
                            theta.push(x + cur_eta + PI / 2.0);
                            t.push(x - cur_eta);
                        }
                        cur_xi += d;
                    } else {
                        let d = positive_branch(b.eta.angle() - cur_eta);
                        for k in 0..per_seg {
                            let u = k as f64 / per_seg as f64;
                            let e = cur_eta + u * d;
                            theta.push(cur_xi + e + PI / 2.0);
                            t.push(cur_xi - e);
                        }
                        cur_eta += d;
                    }
                }
                Lift { theta, t }
            }
        })
    }

    /// Boundary points sampled along the meridian.
    pub fn boundary_samples(&self, n: usize) -> Vec<BoundaryPoint> {
        match &self.rep {
            MeridianRep::Homeo { xi, phi } => (0..n)
                .map(|i| {
                    let x = xi[0] + PI * i as f64 / n as f64;
                    let p = monotone_cubic_periodic(xi, phi, x);
                    BoundaryPoint::new(RP1::from_angle(x), RP1::from_angle(p))
                })
                .collect(),
            MeridianRep::Polygon { .. } => {
                let lift = self.lift();
                let m = lift.theta.len();
                (0..n)
                    .map(|i| {
                        let j = i * m / n;
                        let th = lift.theta[j];
                        let tt = lift.t[j];
                        let xi = RP1::from_angle(0.5 * (th + tt) - PI / 4.0);
                        let eta = RP1::from_angle(0.5 * (th - tt) - PI / 4.0);
                        BoundaryPoint::new(xi, eta)
                    })
                    .collect()
            }
        }
    }

    /// Properness witness: a Möbius map whose boundary graph is disjoint
    /// from the meridian. Homeo meridians try the three-point normalization
    /// first; if its margin is tiny (or for polygons) a horizontal-circle
    /// witness derived from the lift band is used instead.
    pub fn is_proper(&self) -> Result<Mat2> {
        if let MeridianRep::Homeo { .. } = &self.rep {
            let phi_at = |x: Option<f64>| -> Result<Option<f64>> {
                let a = RP1::from_boundary(x).angle();
                Ok(RP1::from_angle(self.phi(a)?).boundary_value())
            };
            let p0 = phi_at(Some(0.0))?;
            let p1 = phi_at(Some(1.0))?;
            let pinf = phi_at(None)?;
            if let Some(w) = mobius_three_points(p0, p1, pinf) {
                if self.witness_margin(&w) > 1e-6 {
                    return Ok(w);
                }
            }
        }
        // horizontal-circle witness from the lift band
        let lift = self.lift();
        let osc = lift.oscillation();
        if osc >= PI - 1e-9 {
            return Err(Error::Invalid(
                "meridian is the boundary of a lightlike plane".into(),
            ));
        }
        let c = lift.max() + (TAU - osc) / 2.0;
        // the spacelike plane with boundary slice {t = c} is dual to the
        // central fiber point at height c − π/2, whose matrix is
        // [[sin s, cos s], [-cos s, sin s]] at s = c − π/2
        let s = c - PI / 2.0;
        let w_inv = Mat2::new(s.sin(), s.cos(), -s.cos(), s.sin());
        let w = w_inv.inv_unit();
        if self.witness_margin(&w) > 1e-9 {
            Ok(w)
        } else {
            Err(Error::Invalid("no properness witness found".into()))
        }
    }

    /// Margin of a witness: smallest torus-lift gap between the meridian and
    /// the boundary graph of the witness map (0 means they intersect).
    pub fn witness_margin(&self, w: &Mat2) -> f64 {
        let lift = self.lift();
        let plane_lift = graph_lift(&w.inv());
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for (th, tt) in lift.theta.iter().zip(lift.t.iter()) {
            let d = tt - plane_lift.eval(*th);
            lo = lo.min(d);
            hi = hi.max(d);
        }
        // lifts are defined up to deck translations by 2π
        let mut margin = f64::INFINITY;
        let kmin = (lo / TAU).floor() as i64 - 1;
        let kmax = (hi / TAU).ceil() as i64 + 1;
        for k in kmin..=kmax {
            let v = TAU * k as f64;
            if v >= lo && v <= hi {
                return 0.0;
            }
            margin = margin.min((v - lo).abs().min((v - hi).abs()));
        }
        margin
    }

    /// Serialize to the meridian JSON document (angles in radians, 17
    /// significant digits).
    pub fn to_json(&self) -> String {
        let mut out = String::from("{\"kind\":");
        match &self.rep {
            MeridianRep::Homeo { xi, phi } => {
                out.push_str("\"homeo\",\"samples\":[");
                for (i, (x, p)) in xi.iter().zip(phi.iter()).enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    out.push_str(&format!("[{:.16e},{:.16e}]", x, p));
                }
            }
            MeridianRep::Polygon { vertices } => {
                out.push_str("\"polygon\",\"samples\":[");
                for (i, v) in vertices.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    out.push_str(&format!("[{:.16e},{:.16e}]", v.xi.angle(), v.eta.angle()));
                }
            }
        }
        out.push_str("]}");
        out
    }

    /// Parse the meridian JSON document.
    pub fn from_json(doc: &str) -> Result<Self> {
        let v: serde_json::Value =
            serde_json::from_str(doc).map_err(|e| Error::Invalid(format!("bad JSON: {e}")))?;
        let kind = v["kind"]
            .as_str()
            .ok_or_else(|| Error::Invalid("missing kind".into()))?;
        let samples = v["samples"]
            .as_array()
            .ok_or_else(|| Error::Invalid("missing samples".into()))?;
        let pairs: Vec<(f64, f64)> = samples
            .iter()
            .map(|s| {
                let a = s[0]
                    .as_f64()
                    .ok_or_else(|| Error::Invalid("bad sample".into()))?;
                let b = s[1]
                    .as_f64()
                    .ok_or_else(|| Error::Invalid("bad sample".into()))?;
                Ok((a, b))
            })
            .collect::<Result<_>>()?;
        match kind {
            "homeo" => {
                let pts: Vec<(RP1, RP1)> = pairs
                    .iter()
                    .map(|(a, b)| (RP1::from_angle(*a), RP1::from_angle(*b)))
                    .collect();
                Self::from_homeo_samples(&pts)
            }
            "polygon" => Self::from_polygon(
                pairs
                    .iter()
                    .map(|(a, b)| BoundaryPoint::new(RP1::from_angle(*a), RP1::from_angle(*b)))
                    .collect(),
            ),
            other => Err(Error::Invalid(format!("unknown meridian kind {other}"))),
        }
    }
}

/// The representative moved into (0, π]: lightlike segments always advance
/// the equator angle.
fn positive_branch(d: f64) -> f64 {
    let mut d = d.rem_euclid(PI);
    if d <= 1e-12 {
        d += PI;
    }
    d
}

/// The lift of the boundary graph of a Möbius map m (the curve {(ξ, m·ξ)}),
/// as a graph over the equator.
pub fn graph_lift(m: &Mat2) -> Lift {
    let n = 1024;
    let mut theta = Vec::with_capacity(n);
    let mut t = Vec::with_capacity(n);
    let mut prev = mobius_rp1(m, &RP1::from_angle(0.0)).angle();
    let mut offset = 0.0;
    for i in 0..n {
        let x = PI * i as f64 / n as f64;
        let raw = mobius_rp1(m, &RP1::from_angle(x)).angle();
        let mut val = raw + offset;
        while val < prev - 1e-9 {
            offset += PI;
            val += PI;
        }
        prev = val;
        theta.push(x + val + PI / 2.0);
        t.push(x - val);
    }
    Lift { theta, t }
}

/// Monotone cubic (Fritsch–Carlson style) interpolation of an increasing
/// lift: data (xᵢ, yᵢ) strictly increasing, extended by
/// (x+π, y+π)-periodicity.
fn monotone_cubic_periodic(xs: &[f64], ys: &[f64], x: f64) -> f64 {
    let n = xs.len();
    let x0 = xs[0];
    let shift = ((x - x0) / PI).floor();
    let xr = x - PI * shift;
    let yoff = PI * shift;
    let idx = match xs.binary_search_by(|a| a.partial_cmp(&xr).unwrap()) {
        Ok(i) => return ys[i] + yoff,
        Err(i) => i,
    };
    let (xa, ya, xb, yb, ia, ib) = if idx == 0 || idx == n {
        (xs[n - 1], ys[n - 1], xs[0] + PI, ys[0] + PI, n - 1, 0)
    } else {
        (xs[idx - 1], ys[idx - 1], xs[idx], ys[idx], idx - 1, idx)
    };
    let slope = |i: usize, j: usize| -> f64 {
        let (xi, yi) = (xs[i % n], ys[i % n]);
        let mut xj = xs[j % n];
        let mut yj = ys[j % n];
        if j >= n {
            xj += PI;
            yj += PI;
        }
        (yj - yi) / (xj - xi)
    };
    let d = (yb - ya) / (xb - xa);
    let m_a = {
        let prev = if ia == 0 {
            slope(n - 1, n)
        } else {
            slope(ia - 1, ia)
        };
        fc_tangent(prev, d)
    };
    let m_b = {
        let next = slope(ib, ib + 1);
        fc_tangent(d, next)
    };
    let h = xb - xa;
    let u = (xr - xa) / h;
    let u2 = u * u;
    let u3 = u2 * u;
    let h00 = 2.0 * u3 - 3.0 * u2 + 1.0;
    let h10 = u3 - 2.0 * u2 + u;
    let h01 = -2.0 * u3 + 3.0 * u2;
    let h11 = u3 - u2;
    yoff + h00 * ya + h10 * h * m_a + h01 * yb + h11 * h * m_b
}

/// Fritsch–Carlson limited tangent from neighbouring secants.
fn fc_tangent(s1: f64, s2: f64) -> f64 {
    if s1 * s2 <= 0.0 {
        0.0
    } else {
        let m = 0.5 * (s1 + s2);
        m.min(3.0 * s1.min(s2))
    }
}

/// The Möbius map w sending (1, ∞, 0) to the given triple, used as a
/// properness witness: with (im0, im1, iminf) = (φ(0), φ(1), φ(∞)), the
/// composition w⁻¹∘φ cyclically permutes the intervals between 0, 1 and ∞
/// and therefore has no fixed point.
pub fn mobius_three_points(
    im0: Option<f64>,
    im1: Option<f64>,
    iminf: Option<f64>,
) -> Option<Mat2> {
    // want w(1) = im0, w(∞) = im1, w(0) = iminf
    let (p, q, r) = (im0, im1, iminf);
    let m = match (p, q, r) {
        (Some(p), Some(q), Some(r)) => {
            let c = p - r;
            let d = q - p;
            let a = q * c;
            let b = r * d;
            Mat2::new(a, b, c, d)
        }
        (None, Some(q), Some(r)) => Mat2::new(q, -r, 1.0, -1.0),
        (Some(p), None, Some(r)) => Mat2::new(p - r, r, 0.0, 1.0),
        (Some(p), Some(q), None) => Mat2::new(q, p - q, 1.0, 0.0),
        _ => return None,
    };
    let det = m.det();
    if det.abs() < 1e-12 {
        return None;
    }
    Some(if det > 0.0 {
        m.scale(1.0 / det.sqrt())
    } else {
        Mat2::new(-m.a, m.b, -m.c, m.d).scale(1.0 / (-det).sqrt())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyper::{rotation_about_i, OrientedGeodesic};
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    const TOL: Tolerances = Tolerances::DEFAULT;

    fn random_sl2(rng: &mut impl Rng) -> Mat2 {
        loop {
            let m = Mat2::new(
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
            );
            if m.det() > 0.05 {
                return m.scale(1.0 / m.det().sqrt());
            }
        }
    }

    #[test]
    fn coordinate_rank1_matrix() {
        let b = boundary_from_rank1(&Mat2::new(1.0, 0.0, 0.0, 0.0), &TOL).unwrap();
        assert!(b.xi.dist(&RP1::from_dir(1.0, 0.0)) < 1e-12);
        assert!(b.eta.dist(&RP1::from_dir(0.0, 1.0)) < 1e-12);
    }

    #[test]
    fn full_rank_matrix_rejected() {
        assert!(matches!(
            boundary_from_rank1(&Mat2::IDENTITY, &TOL),
            Err(Error::NotRankOne)
        ));
    }

    #[test]
    fn rank1_reconstruction_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..200 {
            let xi = RP1::from_angle(rng.gen_range(0.0..PI));
            let eta = RP1::from_angle(rng.gen_range(0.0..PI));
            let b = BoundaryPoint::new(xi, eta);
            let back = boundary_from_rank1(&b.rank1(), &TOL).unwrap();
            assert!(back.xi.dist(&xi) < 1e-10);
            assert!(back.eta.dist(&eta) < 1e-10);
        }
    }

    #[test]
    fn rank1_equivariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(32);
        for _ in 0..100 {
            let a = random_sl2(&mut rng);
            let bm = random_sl2(&mut rng);
            let xi = RP1::from_angle(rng.gen_range(0.0..PI));
            let eta = RP1::from_angle(rng.gen_range(0.0..PI));
            let x = BoundaryPoint::new(xi, eta).rank1();
            let moved = a.mul(&x).mul(&bm.inv_unit());
            let bp = boundary_from_rank1(&moved, &TOL).unwrap();
            assert!(bp.xi.dist(&mobius_rp1(&a, &xi)) < 1e-9);
            assert!(bp.eta.dist(&mobius_rp1(&bm, &eta)) < 1e-9);
        }
    }

    #[test]
    fn inversion_swaps_factors() {
        // the boundary extension of X ↦ X⁻¹ is [tr(X)·I − X]; on rank-one
        // classes it swaps image and kernel
        let mut rng = ChaCha8Rng::seed_from_u64(33);
        let mut tested = 0;
        while tested < 200 {
            let xi = RP1::from_angle(rng.gen_range(0.0..PI));
            let eta = RP1::from_angle(rng.gen_range(0.0..PI));
            if xi.dist(&eta) < 1e-3 {
                continue; // traceless classes: the extension degenerates
            }
            let x = BoundaryPoint::new(xi, eta).rank1();
            let inv_ext = Mat2::IDENTITY.scale(x.trace()).sub(&x);
            let b = boundary_from_rank1(&inv_ext, &TOL).unwrap();
            assert!(b.xi.dist(&eta) < 1e-10);
            assert!(b.eta.dist(&xi) < 1e-10);
            tested += 1;
        }
    }

    #[test]
    fn boundary_limit_hyperbolic_sequence() {
        let xs: Vec<Mat2> = (1..8)
            .map(|n| Mat2::new((n as f64).exp(), 0.0, 0.0, (-(n as f64)).exp()))
            .collect();
        match boundary_limit(&xs).unwrap() {
            LimitOutcome::Limit(b) => {
                assert!(b.xi.dist(&RP1::from_boundary(None)) < 1e-5);
                assert!(b.eta.dist(&RP1::from_boundary(Some(0.0))) < 1e-5);
            }
            LimitOutcome::NoLimit => panic!("expected a limit"),
        }
    }

    #[test]
    fn boundary_limit_constant_sequence_has_no_limit() {
        let xs = vec![Mat2::IDENTITY; 5];
        assert_eq!(boundary_limit(&xs).unwrap(), LimitOutcome::NoLimit);
    }

    #[test]
    fn boundary_limit_parabolic_sequence() {
        let xs: Vec<Mat2> = (1..10)
            .map(|n| Mat2::new(1.0, 50.0 * n as f64, 0.0, 1.0))
            .collect();
        match boundary_limit(&xs).unwrap() {
            LimitOutcome::Limit(b) => {
                assert!(b.xi.dist(&RP1::from_boundary(None)) < 1e-4);
                assert!(b.eta.dist(&RP1::from_boundary(None)) < 1e-4);
            }
            LimitOutcome::NoLimit => panic!("expected a limit"),
        }
    }

    #[test]
    fn boundary_limit_agrees_with_rank1_classification() {
        let target = BoundaryPoint::new(RP1::from_angle(0.8), RP1::from_angle(2.1));
        let r1 = target.rank1();
        let xs: Vec<Mat2> = (1..14)
            .map(|n| {
                let eps = (0.4f64).powi(n);
                let m = r1.add(&Mat2::IDENTITY.scale(eps));
                m.scale(1.0 / m.det().abs().sqrt())
            })
            .collect();
        match boundary_limit(&xs).unwrap() {
            LimitOutcome::Limit(b) => {
                assert!(b.xi.dist(&target.xi) < 1e-6);
                assert!(b.eta.dist(&target.eta) < 1e-6);
            }
            LimitOutcome::NoLimit => panic!("expected a limit"),
        }
    }

    #[test]
    fn causal_sign_cases() {
        let p0 = BoundaryPoint::new(RP1::from_angle(1.0), RP1::from_angle(1.0));
        let chart = AngleChart::centered_at(&p0);
        let p = BoundaryPoint::new(RP1::from_angle(1.3), RP1::from_angle(1.0));
        assert_eq!(
            causal_sign(&p0, &p, &chart, &TOL).unwrap(),
            CausalSign::LightlikeRelated
        );
        let p = BoundaryPoint::new(RP1::from_angle(1.2), RP1::from_angle(1.25));
        assert_eq!(
            causal_sign(&p0, &p, &chart, &TOL).unwrap(),
            CausalSign::SpacelikeRelated
        );
        let p = BoundaryPoint::new(RP1::from_angle(1.2), RP1::from_angle(0.8));
        assert_eq!(
            causal_sign(&p0, &p, &chart, &TOL).unwrap(),
            CausalSign::TimelikeRelated
        );
        let narrow = AngleChart {
            center1: p0.xi,
            center2: p0.eta,
            half_width: 0.1,
        };
        let far = BoundaryPoint::new(RP1::from_angle(2.4), RP1::from_angle(1.0));
        assert!(matches!(
            causal_sign(&p0, &far, &narrow, &TOL),
            Err(Error::OutOfChart)
        ));
    }

    #[test]
    fn orientation_graphs_have_expected_causal_signs() {
        let mer = AchronalMeridian::from_mobius(&rotation_about_i(0.6), 128).unwrap();
        let samples = mer.boundary_samples(32);
        for w in samples.windows(2) {
            let chart = AngleChart::centered_at(&w[0]);
            assert_eq!(
                causal_sign(&w[0], &w[1], &chart, &TOL).unwrap(),
                CausalSign::SpacelikeRelated
            );
        }
        let rev = |x: f64| PI - 1.3 * x;
        let n = 32;
        for i in 0..n {
            let a0 = PI * i as f64 / n as f64;
            let a1 = a0 + 0.02;
            let p0 = BoundaryPoint::new(RP1::from_angle(a0), RP1::from_angle(rev(a0)));
            let p1 = BoundaryPoint::new(RP1::from_angle(a1), RP1::from_angle(rev(a1)));
            let chart = AngleChart::centered_at(&p0);
            assert_eq!(
                causal_sign(&p0, &p1, &chart, &TOL).unwrap(),
                CausalSign::TimelikeRelated
            );
        }
    }

    #[test]
    fn identity_graph_lift_is_flat() {
        let mer = AchronalMeridian::from_mobius(&Mat2::IDENTITY, 128).unwrap();
        let lift = mer.lift();
        assert!(lift.oscillation() < 1e-12);
        assert!(lift.lipschitz_constant() <= 1.0 + 1e-8);
    }

    #[test]
    fn homeo_lifts_are_one_lipschitz() {
        let mut rng = ChaCha8Rng::seed_from_u64(34);
        for _ in 0..10 {
            let m = random_sl2(&mut rng);
            let mer = AchronalMeridian::from_mobius(&m, 128).unwrap();
            let lift = mer.lift();
            assert!(lift.lipschitz_constant() <= 1.0 + 1e-8);
            assert!(lift.oscillation() < PI);
        }
        let f = |x: f64| x + 0.3 * (2.0 * x).sin();
        let mer = AchronalMeridian::from_circle_map(f, 256).unwrap();
        assert!(mer.lift().lipschitz_constant() <= 1.0 + 1e-8);
        assert!(mer.lift().oscillation() < PI);
    }

    #[test]
    fn non_monotone_samples_rejected() {
        let f = |x: f64| x + 0.9 * (2.0 * x).sin();
        assert!(matches!(
            AchronalMeridian::from_circle_map(f, 256),
            Err(Error::NotMonotone)
        ));
    }

    #[test]
    fn two_step_lift_is_min_formula() {
        let x = RP1::from_boundary(Some(0.0));
        let y = RP1::from_boundary(None);
        let mer = AchronalMeridian::two_step(x, y).unwrap();
        let lift = mer.lift();
        assert!((lift.oscillation() - PI / 2.0).abs() < 1e-9);
        assert!(lift.lipschitz_constant() <= 1.0 + 1e-8);
        let tmin = lift.min();
        let mut th1 = None;
        for (th, t) in lift.theta.iter().zip(lift.t.iter()) {
            if (*t - tmin).abs() < 1e-9 {
                th1 = Some(*th);
                break;
            }
        }
        let th1 = th1.unwrap();
        let th2 = th1 + PI;
        for (th, t) in lift.theta.iter().zip(lift.t.iter()) {
            let expected = tmin + equator_dist(*th, th1).min(equator_dist(*th, th2));
            assert!(
                (t - expected).abs() < 1e-9,
                "lift {t} vs min formula {expected}"
            );
        }
    }

    #[test]
    fn lightlike_plane_polygon_has_oscillation_pi() {
        // two lightlike segments joining antipodal fiber points: the boundary
        // of a lightlike plane; its lift oscillates by exactly π
        let a = BoundaryPoint::new(RP1::from_angle(0.3), RP1::from_angle(0.3));
        let b = BoundaryPoint::new(RP1::from_angle(0.3 + PI / 2.0), RP1::from_angle(0.3));
        let mer = AchronalMeridian::from_polygon(vec![a, b]).unwrap();
        let lift = mer.lift();
        assert!((lift.oscillation() - PI).abs() < 1e-9);
        assert!(mer.is_proper().is_err());
    }

    #[test]
    fn mobius_graph_is_dual_plane_boundary() {
        let g = OrientedGeodesic::new(
            RP1::from_boundary(Some(-1.0)),
            RP1::from_boundary(Some(1.0)),
        )
        .translation(0.7);
        let mer = AchronalMeridian::from_mobius(&g, 256).unwrap();
        let direct = graph_lift(&g);
        let lift = mer.lift();
        for (th, t) in lift.theta.iter().zip(lift.t.iter()).step_by(7) {
            let d = (t - direct.eval(*th)).abs();
            assert!(d < 1e-6, "lift mismatch {d}");
        }
    }

    #[test]
    fn properness_witness_for_homeo_and_two_step() {
        let f = |x: f64| x + 0.25 * (2.0 * x).sin();
        let mer = AchronalMeridian::from_circle_map(f, 256).unwrap();
        let w = mer.is_proper().unwrap();
        assert!(mer.witness_margin(&w) > 1e-6);

        let two =
            AchronalMeridian::two_step(RP1::from_boundary(Some(0.0)), RP1::from_boundary(None))
                .unwrap();
        let w2 = two.is_proper().unwrap();
        assert!(two.witness_margin(&w2) > 1e-6);
    }

    #[test]
    fn meridian_json_round_trip() {
        let f = |x: f64| x + 0.2 * (2.0 * x).sin();
        let mer = AchronalMeridian::from_circle_map(f, 128).unwrap();
        let doc = mer.to_json();
        let back = AchronalMeridian::from_json(&doc).unwrap();
        let (l1, l2) = (mer.lift(), back.lift());
        for (th, t) in l1.theta.iter().zip(l1.t.iter()).step_by(13) {
            assert!((t - l2.eval(*th)).abs() < 1e-12);
        }

        let two = AchronalMeridian::two_step(RP1::from_angle(0.4), RP1::from_angle(1.9)).unwrap();
        let doc = two.to_json();
        let back = AchronalMeridian::from_json(&doc).unwrap();
        assert!((two.lift().oscillation() - back.lift().oscillation()).abs() < 1e-12);
    }

    #[test]
    fn torus_lift_consistency() {
        // boundary angles -> torus coords -> quadric parameterization ->
        // rank-one class recovers the boundary angles
        let mut rng = ChaCha8Rng::seed_from_u64(35);
        for _ in 0..100 {
            let b = BoundaryPoint::new(
                RP1::from_angle(rng.gen_range(0.0..PI)),
                RP1::from_angle(rng.gen_range(0.0..PI)),
            );
            let (th, t) = b.torus_lift();
            let x = [th.cos(), th.sin(), t.cos(), t.sin()];
            let m = crate::models::mat_vec_from_quadric(&x);
            let back = boundary_from_rank1(&m, &TOL).unwrap();
            assert!(back.xi.dist(&b.xi) < 1e-9, "xi mismatch");
            assert!(back.eta.dist(&b.eta) < 1e-9, "eta mismatch");
        }
    }

    #[test]
    fn hemi_distances() {
        assert!((hemi_dist((0.0, 0.0), (1.0, 0.0)) - PI / 2.0).abs() < 1e-12);
        let a = (0.3f64.cos(), 0.3f64.sin());
        let b = (1.4f64.cos(), 1.4f64.sin());
        assert!((hemi_dist(a, b) - 1.1).abs() < 1e-12);
    }
}
