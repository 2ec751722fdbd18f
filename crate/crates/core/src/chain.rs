//! The diameter/circumradius inequality chain
//!
//! ```text
//! a1 = 2 sup h_{K-K}(u) / h_{C-C}(u)
//! a2 = 2 sup R({x, y}, C)            (= D(K, C))
//! a3 = R(K - K, ½(C - C))
//! a4 = R(K - K, C)
//! a5 = sup γ_C(x - y)
//! ```
//!
//! satisfies `a1 = a2 = a3 <= a4 <= a5`, with equality throughout for a
//! centered gauge. The verifier computes each value through its own route
//! and reports which relations hold.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{GeometryError, Result};
use crate::functionals::{polar, GaugeBody};
use crate::hull::facets_2d;
use crate::lp::LpOutcome;
use crate::polytope::{difference_body, interior_point, VPolytope};
use crate::radii::{centered_gauge, circumradius, diameter, half_difference_body, inradius};
use crate::tol;
use crate::vector::Vector;

/// Number of random directions used where no finite candidate set is known.
pub const SAMPLED_DIRECTIONS: usize = 500;
const DIRECTION_SEED: u64 = 0x5eed_d1a3;

/// Box-Muller standard normal sample.
fn standard_normal<R: Rng>(rng: &mut R) -> f64 {
    let u1: f64 = rng.gen_range(f64::EPSILON..1.0);
    let u2: f64 = rng.gen();
    (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
}

/// Deterministic pseudo-random unit vectors.
pub fn sampled_directions(dim: usize, count: usize) -> Vec<Vector> {
    let mut rng = ChaCha8Rng::seed_from_u64(DIRECTION_SEED ^ dim as u64);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let v = Vector::new((0..dim).map(|_| standard_normal(&mut rng)).collect());
        if let Some(u) = v.normalized() {
            out.push(u);
        }
    }
    out
}

/// Candidate directions for extrema of support-function ratios of `a` and `b`.
///
/// In the plane these are the edge normals of both polygons, which is exact.
/// Otherwise: sampled directions plus the vertex directions of `b`.
fn ratio_directions(a: &VPolytope, b: &VPolytope) -> Result<(Vec<Vector>, bool)> {
    if a.dim() == 2 {
        let mut dirs = Vec::new();
        for p in [a, b] {
            for h in facets_2d(p)?.polytope.halfspaces() {
                dirs.push(h.normal.clone());
            }
        }
        return Ok((dirs, true));
    }
    let mut dirs = sampled_directions(a.dim(), SAMPLED_DIRECTIONS);
    dirs.extend(b.vertices().iter().filter_map(Vector::normalized));
    Ok((dirs, false))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ChainFlags {
    /// `a1 = a2` (or `a1 <= a2` when `a1` is only a sampled lower bound).
    pub a1_eq_a2: bool,
    pub a2_eq_a3: bool,
    pub a3_le_a4: bool,
    pub a4_le_a5: bool,
    /// `a2 = 2 sup l_K(u) / l_C(u)`; vacuous when `K` is lower-dimensional.
    pub chord_ratio: bool,
    /// `D(K, C) <= 2 R(K, C)`.
    pub diameter_bound: bool,
    pub centered_gauge: bool,
    /// All five values agree; only required when the gauge is centered.
    pub centered_equality: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ChainReport {
    pub a1: f64,
    pub a2: f64,
    pub a3: f64,
    pub a4: f64,
    pub a5: f64,
    /// False when `a1` comes from sampled directions (dimension >= 3).
    pub a1_exact: bool,
    /// `2 sup l_K(u) / l_C(u)` over the vertex directions of `K - K`.
    pub chord_ratio: Option<f64>,
    pub circumradius: f64,
    /// Translation applied to `C` before evaluating `γ_C` for `a5`.
    pub gauge_shift: Vector,
    pub tol: f64,
    pub flags: ChainFlags,
}

impl ChainReport {
    pub fn all_hold(&self) -> bool {
        let f = &self.flags;
        f.a1_eq_a2
            && f.a2_eq_a3
            && f.a3_le_a4
            && f.a4_le_a5
            && f.chord_ratio
            && f.diameter_bound
            && (!f.centered_gauge || f.centered_equality)
    }

    pub fn values(&self) -> [f64; 5] {
        [self.a1, self.a2, self.a3, self.a4, self.a5]
    }
}

/// `γ_C` for `C` as given when the origin is interior, otherwise for `C`
/// translated by an interior point.
fn gauge_for(c: &VPolytope) -> Result<(GaugeBody, Vector)> {
    match GaugeBody::new(c.clone()) {
        Ok(g) => Ok((g, Vector::zeros(c.dim()))),
        Err(GeometryError::OriginNotInterior { .. }) => centered_gauge(c),
        Err(e) => Err(e),
    }
}

pub fn verify_chain(k: &VPolytope, c: &VPolytope, tol: f64) -> Result<ChainReport> {
    k.check_dim(c.dim())?;
    interior_point(c)?;
    let kk = difference_body(k).reduced();
    let cc = difference_body(c).reduced();

    let (dirs, a1_exact) = ratio_directions(&kk, &cc)?;
    let a1 = dirs
        .iter()
        .map(|u| 2.0 * kk.support_value(u) / cc.support_value(u))
        .fold(0.0, f64::max);
    let a2 = diameter(k, c)?.value;
    let a3 = circumradius(&kk, &half_difference_body(c))?.value;
    let a4 = circumradius(&kk, c)?.value;

    let (gc, gauge_shift) = gauge_for(c)?;
    let mut a5 = 0.0f64;
    for z in kk.vertices() {
        a5 = a5.max(gc.eval(z)?);
    }

    let chord_ratio = match GaugeBody::new(kk.clone()) {
        Ok(gk) => {
            let gcc = GaugeBody::new(cc.clone())?;
            let mut best = 0.0f64;
            for z in kk.vertices().iter().filter(|z| !z.is_zero()) {
                // l_K(z) / l_C(z) = γ_{C-C}(z) / γ_{K-K}(z)
                best = best.max(gcc.eval(z)? / gk.eval(z)?);
            }
            Some(2.0 * best)
        }
        Err(GeometryError::OriginNotInterior { .. }) => None,
        Err(e) => return Err(e),
    };
    let r = circumradius(k, c)?.value;

    let eq = |a: f64, b: f64| (a - b).abs() <= tol;
    let le = |a: f64, b: f64| a <= b + tol;
    let centered_gauge = c.is_centered(tol::ARITH);
    let flags = ChainFlags {
        a1_eq_a2: if a1_exact { eq(a1, a2) } else { le(a1, a2) },
        a2_eq_a3: eq(a2, a3),
        a3_le_a4: le(a3, a4),
        a4_le_a5: le(a4, a5),
        chord_ratio: chord_ratio.is_none_or(|v| eq(v, a2)),
        diameter_bound: le(a2, 2.0 * r),
        centered_gauge,
        centered_equality: [a1, a2, a3, a4].iter().all(|&v| eq(v, a5)),
    };
    Ok(ChainReport {
        a1,
        a2,
        a3,
        a4,
        a5,
        a1_exact,
        chord_ratio,
        circumradius: r,
        gauge_shift,
        tol,
        flags,
    })
}

/// Four expressions of the minimum width that coincide for a centered gauge:
///
/// * `inradius_of_difference = r(K - K, C)`
/// * `support_ratio = 2 inf h_{K-K} / h_{C-C}`
/// * `polar_gauge_ratio = inf h_{K-K} / h_C`
/// * `polar_dual = (max { <u, x> : u ∈ (K - K)°, x ∈ C })^{-1}`
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WidthNumbers {
    pub inradius_of_difference: f64,
    pub support_ratio: f64,
    pub polar_gauge_ratio: f64,
    pub polar_dual: f64,
    /// False when the two ratio infima come from sampled directions.
    pub exact: bool,
}

impl WidthNumbers {
    pub fn values(&self) -> [f64; 4] {
        [
            self.inradius_of_difference,
            self.support_ratio,
            self.polar_gauge_ratio,
            self.polar_dual,
        ]
    }
}

/// `K` must be full-dimensional and `C` must contain the origin in its interior.
pub fn width_numbers(k: &VPolytope, c: &VPolytope) -> Result<WidthNumbers> {
    k.check_dim(c.dim())?;
    GaugeBody::new(c.clone())?;
    let kk = difference_body(k).reduced();
    let cc = difference_body(c).reduced();

    let inradius_of_difference = inradius(&kk, c)?.value;

    // Infima of h_{K-K} / h over directions are attained at facet normals of K - K.
    let (dirs, exact) = if k.dim() == 2 {
        let f = facets_2d(&kk)?;
        if f.lower_dimensional {
            return Err(GeometryError::LowerDimensional);
        }
        (
            f.polytope
                .halfspaces()
                .iter()
                .map(|h| h.normal.clone())
                .collect(),
            true,
        )
    } else {
        let mut dirs = sampled_directions(k.dim(), SAMPLED_DIRECTIONS);
        dirs.extend(kk.vertices().iter().filter_map(Vector::normalized));
        (dirs, false)
    };
    let mut support_ratio = f64::INFINITY;
    let mut polar_gauge_ratio = f64::INFINITY;
    for u in &dirs {
        let hk = kk.support_value(u);
        support_ratio = support_ratio.min(2.0 * hk / cc.support_value(u));
        polar_gauge_ratio = polar_gauge_ratio.min(hk / c.support_value(u));
    }

    let kk_polar = polar(&kk);
    let mut dual = 0.0f64;
    for x in c.vertices() {
        match kk_polar.maximize(x)? {
            LpOutcome::Optimal(s) => dual = dual.max(s.value),
            LpOutcome::Unbounded => return Err(GeometryError::LowerDimensional),
            other => {
                return Err(GeometryError::Solver {
                    context: "polar program",
                    status: other.status(),
                })
            }
        }
    }
    Ok(WidthNumbers {
        inradius_of_difference,
        support_ratio,
        polar_gauge_ratio,
        polar_dual: 1.0 / dual,
        exact,
    })
}
