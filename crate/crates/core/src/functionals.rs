//! Support, width, gauge, radial and chord-length functions of polytopes.

use serde::Serialize;

use crate::error::{GeometryError, Result};
use crate::hull::facets_2d;
use crate::lp::{LinearProgram, LpOutcome, Relation};
use crate::polytope::{difference_body, interior_margin, HPolytope, Halfspace, VPolytope};
use crate::tol;
use crate::vector::Vector;

/// A convex body with the origin certified as an interior point.
///
/// This is the unit ball of the (possibly asymmetric) gauge `γ_C`.
#[derive(Clone, Debug, PartialEq)]
pub struct GaugeBody {
    body: VPolytope,
    interior_certificate: Vector,
    margin: f64,
    /// Edge halfspaces `⟨a, y⟩ <= b` (with `b > 0`) of a planar body.
    edges: Option<Vec<Halfspace>>,
}

impl GaugeBody {
    /// Fails unless the origin has an interior margin of at least `1e-9`.
    pub fn new(body: VPolytope) -> Result<Self> {
        let origin = Vector::zeros(body.dim());
        let margin = interior_margin(&body, &origin)?;
        if margin < tol::INTERIOR_MARGIN {
            return Err(GeometryError::OriginNotInterior { margin });
        }
        let edges = if body.dim() == 2 {
            Some(facets_2d(&body)?.polytope.halfspaces().to_vec())
        } else {
            None
        };
        Ok(Self {
            body,
            interior_certificate: origin,
            margin,
            edges,
        })
    }

    pub fn body(&self) -> &VPolytope {
        &self.body
    }

    pub fn dim(&self) -> usize {
        self.body.dim()
    }

    /// Edge halfspaces `⟨a, y⟩ <= b` of a planar body.
    pub fn edges(&self) -> Option<&[Halfspace]> {
        self.edges.as_deref()
    }

    pub fn interior_certificate(&self) -> &Vector {
        &self.interior_certificate
    }

    /// Radius of the largest axis cross-polytope around the origin.
    pub fn margin(&self) -> f64 {
        self.margin
    }

    /// `γ_C(x) = min { λ >= 0 : x ∈ λC }`.
    pub fn eval(&self, x: &[f64]) -> Result<f64> {
        self.body.check_dim(x.len())?;
        if x.iter().all(|&v| v == 0.0) {
            return Ok(0.0);
        }
        if let Some(edges) = &self.edges {
            // x ∈ λC  ⇔  ⟨a, x⟩ <= λ b on every edge
            let g = edges
                .iter()
                .map(|h| (h.normal[0] * x[0] + h.normal[1] * x[1]) / h.offset)
                .fold(0.0, f64::max);
            return Ok(g);
        }
        self.eval_lp(x)
    }

    /// The gauge through its defining program, in any dimension.
    pub fn eval_lp(&self, x: &[f64]) -> Result<f64> {
        self.body.check_dim(x.len())?;
        if x.iter().all(|&v| v == 0.0) {
            return Ok(0.0);
        }
        // With ν_i >= 0 and Σν_i = λ, Σν_i c_i = x states x ∈ λC.
        let verts = self.body.vertices();
        let mut lp = LinearProgram::minimize(vec![1.0; verts.len()]);
        for k in 0..self.dim() {
            lp.add_constraint(verts.iter().map(|v| v[k]).collect(), Relation::Eq, x[k]);
        }
        match lp.solve()? {
            LpOutcome::Optimal(s) => Ok(s.value.max(0.0)),
            other => Err(GeometryError::Solver {
                context: "gauge",
                status: other.status(),
            }),
        }
    }
}

impl GaugeBody {
    /// A point `u` of the polar body with `⟨u, x⟩ = γ_C(x)`, for `x != 0`.
    ///
    /// Planar bodies use the normal of the first edge attaining the gauge;
    /// otherwise `u` is the multiplier vector of the gauge program, which is
    /// feasible for `⟨u, c_i⟩ <= 1` by duality.
    pub fn polar_maximizer(&self, x: &[f64]) -> Result<Vector> {
        self.body.check_dim(x.len())?;
        if x.iter().all(|&v| v == 0.0) {
            return Err(GeometryError::ZeroDirection);
        }
        if let Some(edges) = &self.edges {
            let mut best = (f64::NEG_INFINITY, 0usize);
            for (i, h) in edges.iter().enumerate() {
                let g = (h.normal[0] * x[0] + h.normal[1] * x[1]) / h.offset;
                if g > best.0 {
                    best = (g, i);
                }
            }
            let h = &edges[best.1];
            return Ok(h.normal.scale(1.0 / h.offset));
        }
        let verts = self.body.vertices();
        let mut lp = LinearProgram::minimize(vec![1.0; verts.len()]);
        for k in 0..self.dim() {
            lp.add_constraint(verts.iter().map(|v| v[k]).collect(), Relation::Eq, x[k]);
        }
        match lp.solve()? {
            LpOutcome::Optimal(s) => Ok(Vector::new(s.duals)),
            other => Err(GeometryError::Solver {
                context: "gauge multipliers",
                status: other.status(),
            }),
        }
    }
}

/// `γ_{K-K}(x)` without forming `K - K`, with a point `u` of the polar of
/// `K - K` such that `⟨u, x⟩ = γ_{K-K}(x)`.
///
/// `x ∈ λ(K - K)` holds when `x = Σμ_i p_i - Σν_j p_j` with `Σμ = Σν = λ`.
/// The multipliers `u` of the coordinate rows satisfy `⟨u, p_i - p_j⟩ <= 1`
/// by duality. `K` must be full-dimensional and `x` nonzero.
pub fn difference_gauge(k: &VPolytope, x: &[f64]) -> Result<(f64, Vector)> {
    k.check_dim(x.len())?;
    if x.iter().all(|&v| v == 0.0) {
        return Err(GeometryError::ZeroDirection);
    }
    let verts = k.vertices();
    let m = verts.len();
    let mut objective = vec![1.0; m];
    objective.resize(2 * m, 0.0);
    let mut lp = LinearProgram::minimize(objective);
    for c in 0..k.dim() {
        let row = verts
            .iter()
            .map(|v| v[c])
            .chain(verts.iter().map(|v| -v[c]))
            .collect();
        lp.add_constraint(row, Relation::Eq, x[c]);
    }
    let balance = std::iter::repeat_n(1.0, m)
        .chain(std::iter::repeat_n(-1.0, m))
        .collect();
    lp.add_constraint(balance, Relation::Eq, 0.0);
    match lp.solve()? {
        LpOutcome::Optimal(s) => Ok((s.value.max(0.0), Vector::new(s.duals[..k.dim()].to_vec()))),
        other => Err(GeometryError::Solver {
            context: "difference gauge",
            status: other.status(),
        }),
    }
}

/// A functional value with an optional point that attains it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FunctionalValue {
    pub value: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vector>,
}

impl FunctionalValue {
    fn new(value: f64, witness: Option<Vector>) -> Self {
        Self { value, witness }
    }
}

/// `h_K(u) = max <u, v>`; the witness is the lowest-index maximizing vertex.
pub fn support(k: &VPolytope, u: &[f64]) -> Result<FunctionalValue> {
    k.check_dim(u.len())?;
    let (value, i) = k.support_with_index(u);
    Ok(FunctionalValue::new(value, Some(k.vertices()[i].clone())))
}

/// `w_K(u) = h_K(u) + h_K(-u)`.
pub fn width_fn(k: &VPolytope, u: &[f64]) -> Result<FunctionalValue> {
    k.check_dim(u.len())?;
    let neg: Vec<f64> = u.iter().map(|v| -v).collect();
    Ok(FunctionalValue::new(
        k.support_value(u) + k.support_value(&neg),
        None,
    ))
}

pub fn gauge(c: &GaugeBody, x: &[f64]) -> Result<FunctionalValue> {
    let value = c.eval(x)?;
    let witness = (value > 0.0).then(|| Vector::new(x.iter().map(|v| v / value).collect()));
    Ok(FunctionalValue::new(value, witness))
}

/// `sup { α > 0 : αu ∈ C }` for a body with the origin inside.
pub fn radial(c: &GaugeBody, u: &[f64]) -> Result<FunctionalValue> {
    if u.iter().all(|&v| v == 0.0) {
        c.body().check_dim(u.len())?;
        return Err(GeometryError::ZeroDirection);
    }
    let value = 1.0 / c.eval(u)?;
    let witness = Vector::new(u.iter().map(|v| v * value).collect());
    Ok(FunctionalValue::new(value, Some(witness)))
}

/// Radius function `r_K(u)`; the origin must be interior to `K`.
pub fn radius_fn(k: &VPolytope, u: &[f64]) -> Result<FunctionalValue> {
    radial(&GaugeBody::new(k.clone())?, u)
}

/// The difference body `K - K` (pruned in the plane) as a gauge body.
pub fn chord_body(k: &VPolytope) -> Result<GaugeBody> {
    GaugeBody::new(difference_body(k).reduced())
}

/// Maximal chord length `l_K(u) = sup { α > 0 : αu ∈ K - K }`.
pub fn max_chord(k: &VPolytope, u: &[f64]) -> Result<FunctionalValue> {
    k.check_dim(u.len())?;
    radial(&chord_body(k)?, u)
}

/// `K° = { x : <v, x> <= 1 for every vertex v }`. Zero vertices impose nothing.
pub fn polar(k: &VPolytope) -> HPolytope {
    let halfspaces = k
        .vertices()
        .iter()
        .filter(|v| !v.is_zero())
        .map(|v| Halfspace {
            normal: v.clone(),
            offset: 1.0,
        })
        .collect();
    HPolytope::new(k.dim(), halfspaces).expect("vertices are finite and nonzero")
}

/// Distances of the supporting hyperplanes `H_K(u)` and `H_K(-u)` to the origin.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HyperplaneDistances {
    pub support: f64,
    pub distance: f64,
    pub opposite_support: f64,
    pub opposite_distance: f64,
    /// `distance + opposite_distance`; equals the width when the origin is in the slab.
    pub width_distance: f64,
    pub origin_in_slab: bool,
}

pub fn supporting_hyperplane_distance(k: &VPolytope, u: &[f64]) -> Result<HyperplaneDistances> {
    k.check_dim(u.len())?;
    let norm = u.iter().map(|v| v * v).sum::<f64>().sqrt();
    if (norm - 1.0).abs() > tol::ARITH {
        return Err(GeometryError::NonUnitDirection(norm));
    }
    let neg: Vec<f64> = u.iter().map(|v| -v).collect();
    let support = k.support_value(u);
    let opposite_support = k.support_value(&neg);
    // Euclidean distance from 0 to { y : <u, y> = h } is |h| / |u|.
    let distance = support.abs() / norm;
    let opposite_distance = opposite_support.abs() / norm;
    Ok(HyperplaneDistances {
        support,
        distance,
        opposite_support,
        opposite_distance,
        width_distance: distance + opposite_distance,
        origin_in_slab: support >= 0.0 && opposite_support >= 0.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::member;

    fn s3() -> f64 {
        3f64.sqrt()
    }

    fn triangle() -> VPolytope {
        VPolytope::from_rows(vec![vec![2.0, 0.0], vec![-1.0, s3()], vec![-1.0, -s3()]]).unwrap()
    }

    fn square() -> VPolytope {
        let a = s3();
        VPolytope::from_rows(vec![vec![a, a], vec![-a, a], vec![-a, -a], vec![a, -a]]).unwrap()
    }

    #[test]
    fn support_values() {
        assert!((support(&square(), &[1.0, 0.0]).unwrap().value - s3()).abs() < 1e-15);
        assert_eq!(support(&triangle(), &[1.0, 0.0]).unwrap().value, 2.0);
        assert_eq!(support(&triangle(), &[-1.0, 0.0]).unwrap().value, 1.0);
        let z = support(&triangle(), &[0.0, 0.0]).unwrap();
        assert_eq!(z.value, 0.0);
        // all vertices tie at u = 0; lowest index wins
        assert_eq!(z.witness.unwrap().coords(), &[2.0, 0.0]);
        assert!(support(&triangle(), &[1.0]).is_err());
    }

    #[test]
    fn width_values() {
        assert_eq!(width_fn(&triangle(), &[1.0, 0.0]).unwrap().value, 3.0);
        assert!((width_fn(&square(), &[1.0, 0.0]).unwrap().value - 2.0 * s3()).abs() < 1e-15);
        let p = VPolytope::from_rows(vec![vec![0.3, -0.2]]).unwrap();
        assert_eq!(width_fn(&p, &[0.7, 0.1]).unwrap().value, 0.0);
    }

    /// Bisection on membership of x / λ in C.
    fn gauge_by_bisection(c: &VPolytope, x: &[f64]) -> f64 {
        let (mut lo, mut hi) = (1e-6, 1e3);
        for _ in 0..100 {
            let mid = 0.5 * (lo + hi);
            let y: Vec<f64> = x.iter().map(|v| v / mid).collect();
            if member(c, &y, 1e-12).unwrap() {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        hi
    }

    #[test]
    fn gauge_values() {
        let c = GaugeBody::new(triangle()).unwrap();
        assert!((gauge(&c, &[2.0, 0.0]).unwrap().value - 1.0).abs() < 1e-12);
        assert_eq!(gauge(&c, &[0.0, 0.0]).unwrap().value, 0.0);
        let g = gauge(&c, &[-2.0, 0.0]).unwrap();
        // membership is decided by an LP, which resolves the boundary to ~1e-9
        let oracle = gauge_by_bisection(&triangle(), &[-2.0, 0.0]);
        assert!((oracle - 2.0).abs() < 1e-8);
        assert!((g.value - oracle).abs() < 1e-8);
        assert!((g.witness.unwrap()[0] + 1.0).abs() < 1e-12);
    }

    #[test]
    fn planar_gauge_matches_program() {
        let body = VPolytope::from_rows(vec![
            vec![2.0, 0.3],
            vec![-1.0, 1.7],
            vec![-1.2, -1.5],
            vec![0.5, -1.1],
            vec![0.1, 0.0],
        ])
        .unwrap();
        let c = GaugeBody::new(body).unwrap();
        for k in 0..64 {
            let t = k as f64 * 0.37;
            let x = [3.0 * t.cos(), 2.0 * t.sin()];
            let a = c.eval(&x).unwrap();
            let b = c.eval_lp(&x).unwrap();
            assert!((a - b).abs() < 1e-9 * (1.0 + b), "{x:?}: {a} vs {b}");
        }
    }

    #[test]
    fn polar_maximizer_attains_the_gauge() {
        let planar = GaugeBody::new(
            VPolytope::from_rows(vec![
                vec![2.0, 0.3],
                vec![-1.0, 1.7],
                vec![-1.2, -1.5],
                vec![0.5, -1.1],
            ])
            .unwrap(),
        )
        .unwrap();
        let solid = GaugeBody::new(
            VPolytope::from_rows(vec![
                vec![1.5, 0.2, -0.3],
                vec![-1.0, 1.1, 0.4],
                vec![-0.6, -1.3, 0.2],
                vec![0.1, 0.3, 1.4],
                vec![0.2, -0.1, -1.2],
            ])
            .unwrap(),
        )
        .unwrap();
        for c in [&planar, &solid] {
            for k in 0..40 {
                let t = k as f64 * 0.61;
                let x: Vec<f64> = (0..c.dim())
                    .map(|i| (t * (i + 1) as f64).sin() + 0.1)
                    .collect();
                let u = c.polar_maximizer(&x).unwrap();
                let g = c.eval(&x).unwrap();
                assert!((u.dot(&Vector::new(x.clone())) - g).abs() < 1e-9 * (1.0 + g));
                for v in c.body().vertices() {
                    assert!(u.dot(v) <= 1.0 + 1e-9);
                }
            }
        }
    }

    #[test]
    fn difference_gauge_matches_the_difference_body() {
        let k = VPolytope::from_rows(vec![
            vec![1.5, 0.2, -0.3],
            vec![-1.0, 1.1, 0.4],
            vec![-0.6, -1.3, 0.2],
            vec![0.1, 0.3, 1.4],
            vec![0.2, -0.1, -1.2],
            vec![0.9, 0.8, 0.7],
        ])
        .unwrap();
        let kk = GaugeBody::new(difference_body(&k)).unwrap();
        for t in 0..30 {
            let t = t as f64 * 0.43;
            let x = [t.cos() * 2.0, t.sin(), (2.0 * t).cos() - 0.3];
            let (g, u) = difference_gauge(&k, &x).unwrap();
            let reference = kk.eval(&x).unwrap();
            assert!(
                (g - reference).abs() < 1e-9 * (1.0 + g),
                "{g} vs {reference}"
            );
            assert!((u.dot(&Vector::new(x.to_vec())) - g).abs() < 1e-9 * (1.0 + g));
            for p in k.vertices() {
                for q in k.vertices() {
                    assert!(u.dot(&p.sub(q)) <= 1.0 + 1e-9);
                }
            }
        }
    }

    #[test]
    fn gauge_requires_interior_origin() {
        let shifted = triangle().translate(&Vector::from([3.0, 0.0])).unwrap();
        assert!(matches!(
            GaugeBody::new(shifted),
            Err(GeometryError::OriginNotInterior { .. })
        ));
        let on_boundary =
            VPolytope::from_rows(vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![0.0, 1.0]]).unwrap();
        assert!(GaugeBody::new(on_boundary).is_err());
    }

    #[test]
    fn radius_values() {
        assert!((radius_fn(&triangle(), &[1.0, 0.0]).unwrap().value - 2.0).abs() < 1e-12);
        assert!((radius_fn(&triangle(), &[-1.0, 0.0]).unwrap().value - 1.0).abs() < 1e-12);
        assert!(matches!(
            radius_fn(&triangle(), &[0.0, 0.0]),
            Err(GeometryError::ZeroDirection)
        ));
    }

    #[test]
    fn chord_values() {
        let l = max_chord(&square(), &[1.0, 0.0]).unwrap();
        assert!((l.value - 2.0 * s3()).abs() < 1e-12);
        // the triangle is not centered; its chords in direction e1 have length 3
        assert!((max_chord(&triangle(), &[1.0, 0.0]).unwrap().value - 3.0).abs() < 1e-12);
        assert!(max_chord(&triangle(), &[0.0, 0.0]).is_err());
    }

    #[test]
    fn polar_sets() {
        let sq = VPolytope::from_rows(vec![
            vec![1.0, 1.0],
            vec![-1.0, 1.0],
            vec![-1.0, -1.0],
            vec![1.0, -1.0],
        ])
        .unwrap();
        let p = polar(&sq);
        assert_eq!(p.halfspaces().len(), 4);
        assert!(p.contains(&[1.0, 0.0], 1e-12));
        assert!(!p.contains(&[0.6, 0.6], 1e-12));
        let cross = VPolytope::from_rows(vec![
            vec![1.0, 0.0],
            vec![-1.0, 0.0],
            vec![0.0, 1.0],
            vec![0.0, -1.0],
        ])
        .unwrap();
        let q = polar(&cross);
        assert!(q.contains(&[1.0, 1.0], 1e-12));
        assert!(!q.contains(&[1.1, 0.0], 1e-12));
        assert!(polar(&triangle()).contains(&[0.5, 0.0], 0.0));
    }

    #[test]
    fn hyperplane_distances() {
        let d = supporting_hyperplane_distance(&triangle(), &[1.0, 0.0]).unwrap();
        assert_eq!((d.support, d.distance), (2.0, 2.0));
        assert_eq!(d.width_distance, 3.0);
        assert!(d.origin_in_slab);
        let e = supporting_hyperplane_distance(&triangle(), &[-1.0, 0.0]).unwrap();
        assert_eq!((e.support, e.distance), (1.0, 1.0));
        assert!(matches!(
            supporting_hyperplane_distance(&triangle(), &[2.0, 0.0]),
            Err(GeometryError::NonUnitDirection(_))
        ));
        // origin outside the slab: components are still reported
        let far = triangle().translate(&Vector::from([10.0, 0.0])).unwrap();
        let f = supporting_hyperplane_distance(&far, &[1.0, 0.0]).unwrap();
        assert!(!f.origin_in_slab);
        assert_eq!(f.opposite_support, -9.0);
        assert_eq!(f.opposite_distance, 9.0);
    }
}
