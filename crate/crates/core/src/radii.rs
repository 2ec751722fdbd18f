//! Circumradius, inradius, diameter and minimum width relative to a gauge body.
//!
//! Every quantity is reduced to containment programs over vertex lists:
//!
//! * `R(K, C)`: smallest `λ` with `K ⊆ x + λC`.
//! * `r(K, C)`: largest `λ` with `x + λC ⊆ K`.
//! * `D(K, C) = max γ_{½(C-C)}(p - q)` over vertex pairs, i.e. twice the
//!   largest circumradius of a two-point subset.
//! * `ω(K, C) = 2 max { t : t(C - C) ⊆ K - K }`. Both difference bodies are
//!   centered, so the inscribed copy may be pinned at the origin.
//!
//! In the plane the containment programs and gauges use the exact edge
//! halfspaces of the outer body instead of vertex coefficients.
//!
//! The gauge body only needs to be full-dimensional; paths that evaluate a
//! gauge translate it by an interior point first. All four quantities are
//! invariant under translating either argument.

use serde::Serialize;

use crate::containment::{enclose, inscribe};
use crate::error::{GeometryError, Result};
use crate::functionals::{difference_gauge, FunctionalValue, GaugeBody};
use crate::polytope::{difference_body, interior_point, membership_residual, VPolytope};
use crate::tol;
use crate::vector::Vector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Quantity {
    Circumradius,
    Inradius,
    Diameter,
    MinWidth,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Witness {
    /// Translation `x` of the optimal homothet `x + λC`.
    Center(Vector),
    /// Vertex indices `(i, j)`, `i <= j`, of an attaining pair.
    Pair(usize, usize),
    /// Unit normal of an attaining slab.
    Direction(Vector),
}

#[derive(Clone, Debug, PartialEq)]
pub struct RadiiResult {
    pub quantity: Quantity,
    pub value: f64,
    pub witness: Witness,
}

/// `½(C - C)`, pruned in the plane.
pub fn half_difference_body(c: &VPolytope) -> VPolytope {
    difference_body(c)
        .reduced()
        .scaled(0.5)
        .expect("positive scale")
}

/// `C` translated so that an interior point sits at the origin, with the shift applied.
pub fn centered_gauge(c: &VPolytope) -> Result<(GaugeBody, Vector)> {
    let p = interior_point(c)?;
    Ok((GaugeBody::new(c.translate(&p.neg())?)?, p))
}

fn check_pair(k: &VPolytope, c: &VPolytope) -> Result<()> {
    k.check_dim(c.dim())
}

pub fn circumradius(k: &VPolytope, c: &VPolytope) -> Result<RadiiResult> {
    check_pair(k, c)?;
    let body = c.reduced();
    let interior = interior_point(&body)?;
    let h = enclose(&k.reduced(), &body, &interior)?;
    Ok(RadiiResult {
        quantity: Quantity::Circumradius,
        value: h.scale,
        witness: Witness::Center(h.translation),
    })
}

pub fn inradius(k: &VPolytope, c: &VPolytope) -> Result<RadiiResult> {
    check_pair(k, c)?;
    let body = c.reduced();
    interior_point(&body)?;
    let h = inscribe(&k.reduced(), &body, false)?;
    Ok(RadiiResult {
        quantity: Quantity::Inradius,
        value: h.scale,
        witness: Witness::Center(h.translation),
    })
}

/// The norm `x ↦ 2R({0, x}, C)`, whose unit ball is `½(C - C)`.
#[derive(Clone, Debug)]
pub struct InducedNorm {
    ball: GaugeBody,
}

impl InducedNorm {
    pub fn new(c: &VPolytope) -> Result<Self> {
        interior_point(c)?;
        Ok(Self {
            ball: GaugeBody::new(half_difference_body(c))?,
        })
    }

    pub fn ball(&self) -> &GaugeBody {
        &self.ball
    }

    pub fn eval(&self, x: &[f64]) -> Result<f64> {
        self.ball.eval(x)
    }
}

pub fn induced_norm(c: &VPolytope, x: &[f64]) -> Result<FunctionalValue> {
    c.check_dim(x.len())?;
    crate::functionals::gauge(InducedNorm::new(c)?.ball(), x)
}

pub fn diameter(k: &VPolytope, c: &VPolytope) -> Result<RadiiResult> {
    check_pair(k, c)?;
    let norm = InducedNorm::new(c)?;
    let verts = k.vertices();
    let m = verts.len();
    let d = k.dim();

    let tie = |best: f64| 1e-9 * (1.0 + best);
    if let Some(edges) = norm.ball().edges() {
        // max over pairs of max over edges of <a, x - y> / b = max_j w_K(a_j) / b_j
        let best = edges
            .iter()
            .map(|h| (k.support_value(&h.normal) + k.support_value(&h.normal.neg())) / h.offset)
            .fold(0.0, f64::max);
        for i in 0..m {
            for j in i + 1..m {
                let v = norm.eval(&verts[i].sub(&verts[j]))?;
                if v >= best - tie(best) {
                    return Ok(RadiiResult {
                        quantity: Quantity::Diameter,
                        value: best.max(v),
                        witness: Witness::Pair(i, j),
                    });
                }
            }
        }
        return Ok(RadiiResult {
            quantity: Quantity::Diameter,
            value: best,
            witness: Witness::Pair(0, 0),
        });
    }

    // γ(z) <= Σ |z_i| γ(±e_i) by the triangle inequality; the ball is centered.
    let mut axis = Vec::with_capacity(d);
    for i in 0..d {
        axis.push(norm.eval(&Vector::unit(d, i))?);
    }
    let mut pairs: Vec<(f64, usize, usize)> = Vec::with_capacity(m * (m.saturating_sub(1)) / 2);
    for i in 0..m {
        for j in i + 1..m {
            let bound: f64 = verts[i]
                .iter()
                .zip(verts[j].iter())
                .zip(&axis)
                .map(|((a, b), g)| (a - b).abs() * g)
                .sum();
            pairs.push((bound * (1.0 + 1e-9), i, j));
        }
    }
    pairs.sort_by(|a, b| b.0.total_cmp(&a.0).then((a.1, a.2).cmp(&(b.1, b.2))));

    let mut best = 0.0f64;
    let mut evaluated: Vec<(f64, usize, usize)> = Vec::new();
    for &(bound, i, j) in &pairs {
        if bound < best - tie(best) {
            break;
        }
        let v = norm.eval(&verts[i].sub(&verts[j]))?;
        best = best.max(v);
        evaluated.push((v, i, j));
    }
    let witness = evaluated
        .iter()
        .filter(|(v, _, _)| *v >= best - tie(best))
        .map(|&(_, i, j)| (i, j))
        .min()
        .unwrap_or((0, 0));
    Ok(RadiiResult {
        quantity: Quantity::Diameter,
        value: best,
        witness: Witness::Pair(witness.0, witness.1),
    })
}

/// A unit vector orthogonal to the affine hull of a lower-dimensional set.
fn affine_hull_normal(k: &VPolytope) -> Vector {
    let d = k.dim();
    let v0 = &k.vertices()[0];
    let scale = k
        .vertices()
        .iter()
        .map(|v| v.sub(v0).norm())
        .fold(0.0, f64::max)
        .max(1.0);
    let mut basis: Vec<Vector> = Vec::new();
    for v in k.vertices() {
        let mut w = v.sub(v0);
        for q in &basis {
            w = w.sub(&q.scale(w.dot(q)));
        }
        if w.norm() > 1e-9 * scale {
            basis.push(w.normalized().expect("nonzero"));
        }
    }
    let mut best = Vector::unit(d, 0);
    let mut best_norm = -1.0;
    for i in 0..d {
        let mut w = Vector::unit(d, i);
        for q in &basis {
            w = w.sub(&q.scale(w.dot(q)));
        }
        let n = w.norm();
        if n > best_norm + 1e-12 {
            best_norm = n;
            best = w;
        }
    }
    best.normalized().unwrap_or_else(|| Vector::unit(d, 0))
}

pub fn min_width(k: &VPolytope, c: &VPolytope) -> Result<RadiiResult> {
    check_pair(k, c)?;
    interior_point(c)?;
    match interior_point(k) {
        Ok(_) => {}
        Err(GeometryError::LowerDimensional) => {
            return Ok(RadiiResult {
                quantity: Quantity::MinWidth,
                value: 0.0,
                witness: Witness::Direction(affine_hull_normal(k)),
            })
        }
        Err(e) => return Err(e),
    }
    let cc = difference_body(c).reduced();
    // K - K is centered and full-dimensional, so the pinned inscription
    // λ(C - C) ⊆ K - K splits into one gauge program per vertex of C - C:
    // the largest λ is 1 / max_b γ_{K-K}(b). A normal of K - K at
    // b / γ(b) for the binding b maximizes <a, b> over the polar of K - K.
    // Planar K - K has exact edges; in higher dimension the gauge is taken
    // over K itself, which avoids the quadratic difference body.
    let planar = if k.dim() == 2 {
        Some(GaugeBody::new(difference_body(k).reduced())?)
    } else {
        None
    };
    let kk_gauge = |b: &[f64]| -> Result<f64> {
        match &planar {
            Some(g) => g.eval(b),
            None => Ok(difference_gauge(k, b)?.0),
        }
    };
    let mut binding = (f64::NEG_INFINITY, 0usize);
    for (i, b) in cc.vertices().iter().enumerate() {
        if b.iter().all(|&v| v == 0.0) {
            continue;
        }
        let g = kk_gauge(b)?;
        if g > binding.0 + 1e-12 * (1.0 + g.abs()) {
            binding = (g, i);
        }
    }
    let b = &cc.vertices()[binding.1];
    let normal = match &planar {
        Some(g) => g.polar_maximizer(b)?,
        None => difference_gauge(k, b)?.1,
    };
    let direction = normal.normalized().ok_or(GeometryError::ZeroDirection)?;
    Ok(RadiiResult {
        quantity: Quantity::MinWidth,
        value: 2.0 / binding.0,
        witness: Witness::Direction(direction),
    })
}

/// `R(K, C) = max γ_C(v)` when both bodies are centered.
pub fn symmetric_circumradius(k: &VPolytope, c: &GaugeBody) -> Result<f64> {
    k.check_dim(c.dim())?;
    if !k.is_centered(tol::ARITH) || !c.body().is_centered(tol::ARITH) {
        return Err(GeometryError::NotCentered);
    }
    let mut best = 0.0f64;
    for v in k.vertices() {
        best = best.max(c.eval(v)?);
    }
    Ok(best)
}

impl RadiiResult {
    /// Checks the witness against `K` and `C` with slack `1e-6`.
    pub fn verify_witness(&self, k: &VPolytope, c: &VPolytope) -> Result<bool> {
        let slack = tol::WITNESS;
        match (&self.quantity, &self.witness) {
            (Quantity::Circumradius, Witness::Center(x)) => {
                let (g, c0) = centered_gauge(c)?;
                // v ∈ x + μC  ⇔  γ_{C - c0}(v - x - μ c0) <= μ. The slack
                // enlarges the homothet about its interior point x + μ c0;
                // scaling about x would also move it when 0 ∉ C.
                let mu = self.value;
                let shift = x.add(&c0.scale(mu));
                for v in k.vertices() {
                    if g.eval(&v.sub(&shift))? > mu + slack {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            (Quantity::Inradius, Witness::Center(x)) => {
                // Shrink the homothet x + rC about its interior point
                // x + r c0, for the same reason as above.
                let c0 = interior_point(c)?;
                let center = x.add(&c0.scale(self.value));
                let mu = (self.value - slack).max(0.0);
                for cv in c.vertices() {
                    let p = center.add(&cv.sub(&c0).scale(mu));
                    if membership_residual(k, &p)? > tol::ARITH {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            (Quantity::Diameter, Witness::Pair(i, j)) => {
                let pair =
                    VPolytope::new(vec![k.vertices()[*i].clone(), k.vertices()[*j].clone()])?;
                Ok(2.0 * circumradius(&pair, c)?.value >= self.value - slack)
            }
            (Quantity::MinWidth, Witness::Direction(u)) => {
                let kk = difference_body(k);
                let cc = difference_body(c);
                let ratio = 2.0 * kk.support_value(u) / cc.support_value(u);
                Ok(ratio <= self.value + slack)
            }
            _ => Ok(false),
        }
    }
}
