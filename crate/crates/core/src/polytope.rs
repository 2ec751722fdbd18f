//! Vertex- and halfspace-described polytopes and their Minkowski algebra.
//!
//! A [`VPolytope`] is the convex hull of its vertex list. The list may hold
//! redundant points; every functional in this crate reads the list through a
//! maximum or a linear program, so redundancy never changes a result. Only
//! planar inputs get exact pruning, through [`crate::hull::hull_2d`].

use serde::{Deserialize, Serialize};

use crate::error::{GeometryError, Result};
use crate::lp::{Bound, LinearProgram, LpOutcome, Relation};
use crate::tol;
use crate::vector::{dot, Vector};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawVPolytope")]
pub struct VPolytope {
    dim: usize,
    vertices: Vec<Vector>,
}

#[derive(Deserialize)]
struct RawVPolytope {
    dim: usize,
    vertices: Vec<Vec<f64>>,
}

impl TryFrom<RawVPolytope> for VPolytope {
    type Error = GeometryError;

    fn try_from(raw: RawVPolytope) -> Result<Self> {
        VPolytope::with_dim(raw.dim, raw.vertices.into_iter().map(Vector::new).collect())
    }
}

impl VPolytope {
    /// Builds a polytope, taking the dimension from the first vertex.
    pub fn new(vertices: Vec<Vector>) -> Result<Self> {
        let dim = vertices.first().ok_or(GeometryError::Empty)?.dim();
        Self::with_dim(dim, vertices)
    }

    pub fn with_dim(dim: usize, vertices: Vec<Vector>) -> Result<Self> {
        if dim == 0 {
            return Err(GeometryError::ZeroDimension);
        }
        if vertices.is_empty() {
            return Err(GeometryError::Empty);
        }
        for v in &vertices {
            if v.dim() != dim {
                return Err(GeometryError::DimensionMismatch {
                    expected: dim,
                    found: v.dim(),
                });
            }
            if !v.is_finite() {
                return Err(GeometryError::NonFinite);
            }
        }
        Ok(Self { dim, vertices })
    }

    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self> {
        Self::new(rows.into_iter().map(Vector::new).collect())
    }

    pub fn singleton(point: Vector) -> Result<Self> {
        Self::new(vec![point])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vector] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polytope serializes")
    }

    pub fn from_json(s: &str) -> std::result::Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    pub(crate) fn check_dim(&self, d: usize) -> Result<()> {
        if self.dim == d {
            Ok(())
        } else {
            Err(GeometryError::DimensionMismatch {
                expected: self.dim,
                found: d,
            })
        }
    }

    /// Maximum of `<u, v>` over the vertices, with the lowest attaining index.
    pub fn support_with_index(&self, u: &[f64]) -> (f64, usize) {
        let mut best = (dot(u, &self.vertices[0]), 0);
        for (i, v) in self.vertices.iter().enumerate().skip(1) {
            let s = dot(u, v);
            if s > best.0 {
                best = (s, i);
            }
        }
        best
    }

    pub fn support_value(&self, u: &[f64]) -> f64 {
        self.support_with_index(u).0
    }

    pub fn centroid(&self) -> Vector {
        let mut c = vec![0.0; self.dim];
        for v in &self.vertices {
            for (ci, vi) in c.iter_mut().zip(v.iter()) {
                *ci += vi;
            }
        }
        let n = self.vertices.len() as f64;
        Vector::new(c.into_iter().map(|x| x / n).collect())
    }

    pub fn translate(&self, offset: &Vector) -> Result<Self> {
        transform(self, 1.0, offset, false)
    }

    pub fn scaled(&self, s: f64) -> Result<Self> {
        transform(self, s, &Vector::zeros(self.dim), false)
    }

    pub fn reflected(&self) -> Self {
        Self {
            dim: self.dim,
            vertices: self.vertices.iter().map(Vector::neg).collect(),
        }
    }

    /// Appends points; the hull grows only if they lie outside it.
    pub fn with_points(&self, extra: &[Vector]) -> Result<Self> {
        let mut vertices = self.vertices.clone();
        vertices.extend_from_slice(extra);
        Self::with_dim(self.dim, vertices)
    }

    /// A copy with duplicate and (in the plane) non-extreme points removed.
    pub fn reduced(&self) -> Self {
        if self.dim == 2 {
            return crate::hull::hull_2d(&self.vertices).expect("non-empty planar input");
        }
        let mut kept: Vec<Vector> = Vec::with_capacity(self.vertices.len());
        for v in &self.vertices {
            if !kept
                .iter()
                .any(|w| v.sub(w).norm_inf() <= 1e-12 * (1.0 + v.norm_inf()))
            {
                kept.push(v.clone());
            }
        }
        Self {
            dim: self.dim,
            vertices: kept,
        }
    }

    /// True when the vertex list is closed under negation up to `tol`.
    pub fn is_centered(&self, tol: f64) -> bool {
        self.vertices
            .iter()
            .all(|v| self.vertices.iter().any(|w| v.add(w).norm_inf() <= tol))
    }
}

/// Pairwise sums `p + q`; the hull of the result is `P + Q`.
pub fn minkowski_sum(p: &VPolytope, q: &VPolytope) -> Result<VPolytope> {
    p.check_dim(q.dim)?;
    let mut vertices = Vec::with_capacity(p.len() * q.len());
    for a in &p.vertices {
        for b in &q.vertices {
            vertices.push(a.add(b));
        }
    }
    VPolytope::with_dim(p.dim, vertices)
}

/// Maps every vertex `v` to `offset + scale * (±v)`.
pub fn transform(p: &VPolytope, scale: f64, offset: &Vector, reflect: bool) -> Result<VPolytope> {
    if !scale.is_finite() || scale <= 0.0 {
        return Err(GeometryError::NonPositiveScale(scale));
    }
    p.check_dim(offset.dim())?;
    if !offset.is_finite() {
        return Err(GeometryError::NonFinite);
    }
    let s = if reflect { -scale } else { scale };
    let vertices = p
        .vertices
        .iter()
        .map(|v| {
            Vector::new(
                v.iter()
                    .zip(offset.iter())
                    .map(|(x, o)| o + s * x)
                    .collect(),
            )
        })
        .collect();
    VPolytope::with_dim(p.dim, vertices)
}

/// `P - P`, always centered.
pub fn difference_body(p: &VPolytope) -> VPolytope {
    minkowski_sum(p, &p.reflected()).expect("same dimension")
}

/// L-infinity distance from `x` to the hull, computed by a small LP.
pub fn membership_residual(p: &VPolytope, x: &[f64]) -> Result<f64> {
    p.check_dim(x.len())?;
    let m = p.len();
    let d = p.dim;
    // variables: mu_0..mu_{m-1}, s
    let mut objective = vec![0.0; m + 1];
    objective[m] = 1.0;
    let mut lp = LinearProgram::minimize(objective);
    for k in 0..d {
        let mut row: Vec<f64> = p.vertices.iter().map(|v| v[k]).collect();
        row.push(-1.0);
        lp.add_constraint(row.clone(), Relation::Le, x[k]);
        row[m] = 1.0;
        lp.add_constraint(row, Relation::Ge, x[k]);
    }
    let mut ones = vec![1.0; m];
    ones.push(0.0);
    lp.add_constraint(ones, Relation::Eq, 1.0);
    match lp.solve()? {
        LpOutcome::Optimal(s) => Ok(s.value.max(0.0)),
        other => Err(GeometryError::Solver {
            context: "membership",
            status: other.status(),
        }),
    }
}

/// Whether `x` lies in the hull of `p`, up to `tol` in the max norm.
pub fn member(p: &VPolytope, x: &[f64], tol: f64) -> Result<bool> {
    Ok(membership_residual(p, x)? <= tol)
}

/// Largest `eps` such that `center ± eps * e_i` lie in `p` for every axis.
pub fn interior_margin(p: &VPolytope, center: &[f64]) -> Result<f64> {
    p.check_dim(center.len())?;
    Ok(margin_lp(p, Some(center))?.0)
}

fn margin_lp(p: &VPolytope, center: Option<&[f64]>) -> Result<(f64, Vector)> {
    let m = p.len();
    let d = p.dim;
    let probes = 2 * d;
    // variables: eps, [center (free) when not fixed], mu blocks per probe
    let free_center = center.is_none();
    let base = 1 + if free_center { d } else { 0 };
    let n = base + probes * m;
    let mut objective = vec![0.0; n];
    objective[0] = -1.0;
    let mut lp = LinearProgram::minimize(objective);
    if free_center {
        for k in 0..d {
            lp.set_bound(1 + k, Bound::Free);
        }
    }
    for probe in 0..probes {
        let axis = probe / 2;
        let sign = if probe % 2 == 0 { 1.0 } else { -1.0 };
        let block = base + probe * m;
        for k in 0..d {
            let mut terms: Vec<(usize, f64)> = p
                .vertices
                .iter()
                .enumerate()
                .map(|(i, v)| (block + i, v[k]))
                .collect();
            if k == axis {
                terms.push((0, -sign));
            }
            let rhs = match center {
                Some(c) => c[k],
                None => {
                    terms.push((1 + k, -1.0));
                    0.0
                }
            };
            lp.add_sparse(&terms, Relation::Eq, rhs)?;
        }
        let terms: Vec<(usize, f64)> = (0..m).map(|i| (block + i, 1.0)).collect();
        lp.add_sparse(&terms, Relation::Eq, 1.0)?;
    }
    match lp.solve()? {
        LpOutcome::Optimal(s) => {
            let c = match center {
                Some(c) => Vector::new(c.to_vec()),
                None => Vector::new(s.x[1..=d].to_vec()),
            };
            Ok((s.x[0], c))
        }
        // A fixed center outside the hull has no feasible probe set.
        LpOutcome::Infeasible if center.is_some() => {
            Ok((0.0, Vector::new(center.unwrap().to_vec())))
        }
        other => Err(GeometryError::Solver {
            context: "interior margin",
            status: other.status(),
        }),
    }
}

/// A point with a certified positive interior margin.
///
/// The vertex centroid is returned whenever it passes; otherwise the center
/// of the largest inscribed cross-polytope.
pub fn interior_point(p: &VPolytope) -> Result<Vector> {
    let c = p.centroid();
    if margin_lp(p, Some(&c))?.0 > tol::INTERIOR_MARGIN {
        return Ok(c);
    }
    let (eps, center) = margin_lp(p, None)?;
    if eps > tol::INTERIOR_MARGIN {
        Ok(center)
    } else {
        Err(GeometryError::LowerDimensional)
    }
}

/// Closed halfspace `<normal, x> <= offset`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Halfspace {
    pub normal: Vector,
    pub offset: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawHPolytope")]
pub struct HPolytope {
    dim: usize,
    halfspaces: Vec<Halfspace>,
}

#[derive(Deserialize)]
struct RawHPolytope {
    dim: usize,
    halfspaces: Vec<Halfspace>,
}

impl TryFrom<RawHPolytope> for HPolytope {
    type Error = GeometryError;

    fn try_from(raw: RawHPolytope) -> Result<Self> {
        HPolytope::new(raw.dim, raw.halfspaces)
    }
}

impl HPolytope {
    pub fn new(dim: usize, halfspaces: Vec<Halfspace>) -> Result<Self> {
        if dim == 0 {
            return Err(GeometryError::ZeroDimension);
        }
        for h in &halfspaces {
            if h.normal.dim() != dim {
                return Err(GeometryError::DimensionMismatch {
                    expected: dim,
                    found: h.normal.dim(),
                });
            }
            if !h.normal.is_finite() || !h.offset.is_finite() {
                return Err(GeometryError::NonFinite);
            }
            if h.normal.is_zero() {
                return Err(GeometryError::ZeroNormal);
            }
        }
        Ok(Self { dim, halfspaces })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn halfspaces(&self) -> &[Halfspace] {
        &self.halfspaces
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polytope serializes")
    }

    pub fn from_json(s: &str) -> std::result::Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    pub fn contains(&self, x: &[f64], tol: f64) -> bool {
        self.halfspaces
            .iter()
            .all(|h| dot(&h.normal, x) <= h.offset + tol)
    }

    /// Maximizes `<c, x>` over the polytope.
    pub fn maximize(&self, c: &[f64]) -> Result<LpOutcome> {
        let d = self.dim;
        let mut lp = LinearProgram::minimize(c.iter().map(|v| -v).collect());
        for k in 0..d {
            lp.set_bound(k, Bound::Free);
        }
        for h in &self.halfspaces {
            lp.add_constraint(h.normal.coords().to_vec(), Relation::Le, h.offset);
        }
        Ok(match lp.solve()? {
            LpOutcome::Optimal(mut s) => {
                s.value = -s.value;
                LpOutcome::Optimal(s)
            }
            other => other,
        })
    }

    /// LP certificate: every `±x_i` is bounded above on a non-empty set.
    pub fn certify_bounded(&self) -> Result<bool> {
        for i in 0..self.dim {
            for sign in [1.0, -1.0] {
                let mut c = vec![0.0; self.dim];
                c[i] = sign;
                if !matches!(self.maximize(&c)?, LpOutcome::Optimal(_)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square(s: f64) -> VPolytope {
        VPolytope::from_rows(vec![vec![s, s], vec![-s, s], vec![-s, -s], vec![s, -s]]).unwrap()
    }

    fn simplex2() -> VPolytope {
        VPolytope::from_rows(vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![0.0, 1.0]]).unwrap()
    }

    #[test]
    fn constructor_rejects_bad_input() {
        assert!(matches!(VPolytope::new(vec![]), Err(GeometryError::Empty)));
        assert!(matches!(
            VPolytope::from_rows(vec![vec![0.0, 1.0], vec![1.0]]),
            Err(GeometryError::DimensionMismatch { .. })
        ));
        assert!(matches!(
            VPolytope::from_rows(vec![vec![f64::INFINITY, 0.0]]),
            Err(GeometryError::NonFinite)
        ));
    }

    #[test]
    fn singleton_is_identity_for_sums() {
        let z = VPolytope::singleton(Vector::zeros(2)).unwrap();
        let s = minkowski_sum(&z, &square(1.0)).unwrap();
        assert_eq!(s, square(1.0));
    }

    #[test]
    fn segments_sum_to_square() {
        let a = VPolytope::from_rows(vec![vec![0.0, 0.0], vec![1.0, 0.0]]).unwrap();
        let b = VPolytope::from_rows(vec![vec![0.0, 0.0], vec![0.0, 1.0]]).unwrap();
        let s = minkowski_sum(&a, &b).unwrap();
        let mut pts: Vec<Vec<f64>> = s.vertices().iter().map(|v| v.coords().to_vec()).collect();
        pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert_eq!(
            pts,
            vec![
                vec![0.0, 0.0],
                vec![0.0, 1.0],
                vec![1.0, 0.0],
                vec![1.0, 1.0]
            ]
        );
        assert!(matches!(
            minkowski_sum(&a, &VPolytope::from_rows(vec![vec![0.0]]).unwrap()),
            Err(GeometryError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn transform_maps_vertices() {
        let t = transform(&square(1.0), 2.0, &Vector::zeros(2), false).unwrap();
        assert_eq!(t, square(2.0));
        let same = transform(&simplex2(), 1.0, &Vector::zeros(2), false).unwrap();
        assert_eq!(same, simplex2());
        let r = transform(&simplex2(), 1.0, &Vector::from([1.0, 2.0]), true).unwrap();
        assert_eq!(r.vertices()[1].coords(), &[0.0, 2.0]);
        assert!(matches!(
            transform(&simplex2(), 0.0, &Vector::zeros(2), false),
            Err(GeometryError::NonPositiveScale(_))
        ));
        assert!(transform(&simplex2(), -1.0, &Vector::zeros(2), false).is_err());
    }

    #[test]
    fn difference_body_of_point_and_square() {
        let p = VPolytope::singleton(Vector::from([3.0, -1.0])).unwrap();
        let d = difference_body(&p);
        assert!(d.vertices().iter().all(|v| v.is_zero()));
        let dd = difference_body(&square(1.0));
        for k in 0..36 {
            let t = k as f64 * std::f64::consts::PI / 18.0;
            let u = [t.cos(), t.sin()];
            assert!((dd.support_value(&u) - 2.0 * square(1.0).support_value(&u)).abs() < 1e-12);
        }
        assert!(dd.is_centered(1e-12));
    }

    #[test]
    fn membership() {
        let t = simplex2();
        assert!(member(&t, &[0.0, 0.0], 1e-9).unwrap());
        assert!(!member(&t, &[1.0, 1.0], 1e-9).unwrap());
        for v in t.vertices() {
            assert!(member(&t, v, 1e-9).unwrap());
        }
        assert!((membership_residual(&t, &[1.0, 1.0]).unwrap() - 0.5).abs() < 1e-9);
        assert!(member(&t, &[0.2], 1e-9).is_err());
    }

    #[test]
    fn interior_points() {
        let c = interior_point(&square(1.0)).unwrap();
        assert!(c.norm() < 1e-15);
        let s3 = 3f64.sqrt();
        let tri =
            VPolytope::from_rows(vec![vec![2.0, 0.0], vec![-1.0, s3], vec![-1.0, -s3]]).unwrap();
        assert!(interior_point(&tri).unwrap().norm() < 1e-15);
        let seg = VPolytope::from_rows(vec![vec![0.0, 0.0], vec![1.0, 1.0]]).unwrap();
        assert!(matches!(
            interior_point(&seg),
            Err(GeometryError::LowerDimensional)
        ));
        assert!((interior_margin(&square(1.0), &[0.0, 0.0]).unwrap() - 1.0).abs() < 1e-9);
        assert_eq!(interior_margin(&square(1.0), &[5.0, 0.0]).unwrap(), 0.0);
    }

    #[test]
    fn json_round_trip_and_rejection() {
        let s = square(1.5);
        let back = VPolytope::from_json(&s.to_json()).unwrap();
        assert_eq!(back, s);
        assert!(VPolytope::from_json(r#"{"dim": 2, "vertices": [[1.0]]}"#).is_err());
        assert!(VPolytope::from_json(r#"{"dim": 2, "vertices": [[1e999, 0]]}"#).is_err());
        assert!(VPolytope::from_json(r#"{"dim": 2, "vertices": [[NaN, 0]]}"#).is_err());
        let h =
            HPolytope::from_json(r#"{"dim": 1, "halfspaces": [{"normal": [1.0], "offset": 1.0}]}"#)
                .unwrap();
        assert_eq!(HPolytope::from_json(&h.to_json()).unwrap(), h);
        assert!(HPolytope::from_json(
            r#"{"dim": 1, "halfspaces": [{"normal": [0.0], "offset": 1.0}]}"#
        )
        .is_err());
    }

    #[test]
    fn bounded_certificate() {
        let hs = |n: [f64; 2], b: f64| Halfspace {
            normal: Vector::from(n),
            offset: b,
        };
        let boxed = HPolytope::new(
            2,
            vec![
                hs([1.0, 0.0], 1.0),
                hs([-1.0, 0.0], 1.0),
                hs([0.0, 1.0], 1.0),
                hs([0.0, -1.0], 1.0),
            ],
        )
        .unwrap();
        assert!(boxed.certify_bounded().unwrap());
        let strip = HPolytope::new(2, vec![hs([1.0, 0.0], 1.0), hs([-1.0, 0.0], 1.0)]).unwrap();
        assert!(!strip.certify_bounded().unwrap());
    }

    #[test]
    fn centered_detection() {
        assert!(square(1.0).is_centered(1e-12));
        assert!(!simplex2().is_centered(1e-12));
    }
}
