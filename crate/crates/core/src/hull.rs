//! Planar hulls and edge halfspaces.

use crate::error::{GeometryError, Result};
use crate::polytope::{HPolytope, Halfspace, VPolytope};
use crate::vector::Vector;

/// Sine of the smallest turn kept as a hull corner.
const TURN_TOL: f64 = 1e-12;

fn cross(o: &[f64], a: &[f64], b: &[f64]) -> f64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

fn strictly_left(o: &[f64], a: &[f64], b: &[f64]) -> bool {
    let la = (a[0] - o[0]).hypot(a[1] - o[1]);
    let lb = (b[0] - a[0]).hypot(b[1] - a[1]);
    cross(o, a, b) > TURN_TOL * la * lb
}

/// Extreme points in counter-clockwise order, starting from the
/// lexicographically smallest point. Collinear and repeated points are dropped.
pub fn hull_2d(points: &[Vector]) -> Result<VPolytope> {
    let first = points.first().ok_or(GeometryError::Empty)?;
    if first.dim() != 2 {
        return Err(GeometryError::RequiresPlanar(first.dim()));
    }
    for p in points {
        if p.dim() != 2 {
            return Err(GeometryError::DimensionMismatch {
                expected: 2,
                found: p.dim(),
            });
        }
        if !p.is_finite() {
            return Err(GeometryError::NonFinite);
        }
    }
    let mut pts: Vec<[f64; 2]> = points.iter().map(|p| [p[0], p[1]]).collect();
    pts.sort_by(|a, b| a[0].total_cmp(&b[0]).then(a[1].total_cmp(&b[1])));
    pts.dedup();
    if pts.len() <= 2 {
        return VPolytope::new(pts.into_iter().map(Vector::from).collect());
    }

    // Andrew's monotone chain.
    let mut lower: Vec<[f64; 2]> = Vec::new();
    for p in &pts {
        while lower.len() >= 2
            && !strictly_left(&lower[lower.len() - 2], &lower[lower.len() - 1], p)
        {
            lower.pop();
        }
        lower.push(*p);
    }
    let mut upper: Vec<[f64; 2]> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2
            && !strictly_left(&upper[upper.len() - 2], &upper[upper.len() - 1], p)
        {
            upper.pop();
        }
        upper.push(*p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    // All points collinear: the chains collapse onto the two endpoints.
    if lower.len() == 2 && lower[0] == lower[1] {
        lower.pop();
    }
    VPolytope::new(lower.into_iter().map(Vector::from).collect())
}

/// Edge halfspaces of a planar polytope.
#[derive(Clone, Debug, PartialEq)]
pub struct EdgeFacets {
    pub polytope: HPolytope,
    /// Set when the hull is a point or a segment; the halfspaces then bound
    /// its affine hull instead of describing edges.
    pub lower_dimensional: bool,
}

/// One halfspace per hull edge with an outward unit normal.
pub fn facets_2d(p: &VPolytope) -> Result<EdgeFacets> {
    if p.dim() != 2 {
        return Err(GeometryError::RequiresPlanar(p.dim()));
    }
    let hull = hull_2d(p.vertices())?;
    let v = hull.vertices();
    let hs = |n: [f64; 2], at: &Vector| Halfspace {
        normal: Vector::from(n),
        offset: n[0] * at[0] + n[1] * at[1],
    };
    let (halfspaces, lower_dimensional) = match v.len() {
        1 => (
            vec![
                hs([1.0, 0.0], &v[0]),
                hs([-1.0, 0.0], &v[0]),
                hs([0.0, 1.0], &v[0]),
                hs([0.0, -1.0], &v[0]),
            ],
            true,
        ),
        2 => {
            let t = v[1].sub(&v[0]).normalized().expect("distinct endpoints");
            let n = [-t[1], t[0]];
            (
                vec![
                    hs(n, &v[0]),
                    hs([-n[0], -n[1]], &v[0]),
                    hs([t[0], t[1]], &v[1]),
                    hs([-t[0], -t[1]], &v[0]),
                ],
                true,
            )
        }
        k => {
            let mut out = Vec::with_capacity(k);
            for i in 0..k {
                let a = &v[i];
                let b = &v[(i + 1) % k];
                let (dx, dy) = (b[0] - a[0], b[1] - a[1]);
                let len = dx.hypot(dy);
                out.push(hs([dy / len, -dx / len], a));
            }
            (out, false)
        }
    };
    Ok(EdgeFacets {
        polytope: HPolytope::new(2, halfspaces)?,
        lower_dimensional,
    })
}
