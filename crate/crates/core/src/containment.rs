//! Homothet containment programs over vertex descriptions.
//!
//! Both programs state containment of one V-polytope in another through
//! convex-coefficient (or conic) encodings of every vertex. Large inputs are
//! handled by row generation: the program is solved for a working subset of
//! vertices, the remaining vertices are checked against the solution, and the
//! most violated ones are added until none is violated. The final answer is
//! the optimum of the full program.
//!
//! In the plane the edge halfspaces of the outer body are available exactly,
//! and both programs reduce to `d + 1` variables with one row per edge.

use crate::error::{GeometryError, Result};
use crate::functionals::GaugeBody;
use crate::hull::facets_2d;
use crate::lp::Relation;
use crate::lp::{Bound, LinearProgram, LpOutcome, LpSolution};
use crate::polytope::{membership_residual, VPolytope};
use crate::vector::Vector;

/// Vertex count up to which the full program is built in one go.
const DIRECT_LIMIT: usize = 16;
/// Vertices added per row-generation round.
const BATCH: usize = 6;
/// Violations below this (relative) size are accepted.
const VIOLATION_TOL: f64 = 1e-10;

#[derive(Clone, Debug, PartialEq)]
pub struct Homothet {
    pub scale: f64,
    pub translation: Vector,
}

fn solver_error(context: &'static str, outcome: &LpOutcome) -> GeometryError {
    GeometryError::Solver {
        context,
        status: outcome.status(),
    }
}

/// Indices extreme along `±e_i` and `±(1,…,1)`, lowest index first.
fn seed_indices(points: &[Vector]) -> Vec<usize> {
    let d = points[0].dim();
    let mut dirs: Vec<Vec<f64>> = Vec::new();
    for i in 0..d {
        let mut e = vec![0.0; d];
        e[i] = 1.0;
        dirs.push(e.clone());
        e[i] = -1.0;
        dirs.push(e);
    }
    dirs.push(vec![1.0; d]);
    dirs.push(vec![-1.0; d]);
    let mut out: Vec<usize> = Vec::new();
    for u in dirs {
        let mut best = (f64::NEG_INFINITY, 0usize);
        for (i, p) in points.iter().enumerate() {
            let s: f64 = p.iter().zip(&u).map(|(a, b)| a * b).sum();
            if s > best.0 {
                best = (s, i);
            }
        }
        if !out.contains(&best.1) {
            out.push(best.1);
        }
    }
    out.sort_unstable();
    out
}

fn initial_working_set(n: usize, points: &[Vector]) -> Vec<usize> {
    if n <= DIRECT_LIMIT {
        (0..n).collect()
    } else {
        seed_indices(points)
    }
}

/// Adds the `BATCH` most violated indices; returns false when none is violated.
fn grow(working: &mut Vec<usize>, violations: Vec<(usize, f64)>, threshold: f64) -> bool {
    let mut bad: Vec<(usize, f64)> = violations
        .into_iter()
        .filter(|&(i, v)| v > threshold && !working.contains(&i))
        .collect();
    if bad.is_empty() {
        return false;
    }
    bad.sort_by(|a, b| b.1.total_cmp(&a.1).then(a.0.cmp(&b.0)));
    working.extend(bad.into_iter().take(BATCH).map(|(i, _)| i));
    working.sort_unstable();
    true
}

/// Smallest `λ` and a translation `x` with `points ⊆ x + λ·body`.
///
/// `body` must be full-dimensional; `interior` is a point in its interior,
/// used to check candidate vertices through the gauge of `body - interior`.
pub fn enclose(points: &VPolytope, body: &VPolytope, interior: &Vector) -> Result<Homothet> {
    points.check_dim(body.dim())?;
    if body.dim() == 2 {
        return enclose_planar(points, body);
    }
    enclose_vertex(points, body, interior)
}

/// [`enclose`] through convex-coefficient rows, valid in every dimension.
pub fn enclose_vertex(points: &VPolytope, body: &VPolytope, interior: &Vector) -> Result<Homothet> {
    let gauge = GaugeBody::new(body.translate(&interior.neg())?)?;
    let pts = points.vertices();
    let mut working = initial_working_set(pts.len(), pts);
    loop {
        let h = enclose_subset(pts, &working, body)?;
        if working.len() == pts.len() {
            return Ok(h);
        }
        // p ∈ x + λC  ⇔  γ_{C - c0}(p - x - λ c0) <= λ
        let shift = h.translation.add(&interior.scale(h.scale));
        let mut violations = Vec::new();
        for (i, p) in pts.iter().enumerate() {
            if working.contains(&i) {
                continue;
            }
            let g = gauge.eval(&p.sub(&shift))?;
            violations.push((i, g - h.scale));
        }
        if !grow(&mut working, violations, VIOLATION_TOL * (1.0 + h.scale)) {
            return Ok(h);
        }
    }
}

fn enclose_subset(pts: &[Vector], working: &[usize], body: &VPolytope) -> Result<Homothet> {
    let d = body.dim();
    let n = body.len();
    let cverts = body.vertices();
    // variables: x (d, free), λ, then ν blocks of size n per working vertex
    let lambda = d;
    let base = d + 1;
    let nvars = base + working.len() * n;
    let mut objective = vec![0.0; nvars];
    objective[lambda] = 1.0;
    let mut lp = LinearProgram::minimize(objective);
    for k in 0..d {
        lp.set_bound(k, Bound::Free);
    }
    for (slot, &j) in working.iter().enumerate() {
        let block = base + slot * n;
        for k in 0..d {
            let mut terms: Vec<(usize, f64)> = cverts
                .iter()
                .enumerate()
                .map(|(i, c)| (block + i, c[k]))
                .collect();
            terms.push((k, 1.0));
            lp.add_sparse(&terms, Relation::Eq, pts[j][k])?;
        }
        let mut terms: Vec<(usize, f64)> = (0..n).map(|i| (block + i, 1.0)).collect();
        terms.push((lambda, -1.0));
        lp.add_sparse(&terms, Relation::Eq, 0.0)?;
    }
    let outcome = lp.solve()?;
    let LpOutcome::Optimal(LpSolution { x, .. }) = outcome else {
        return Err(solver_error("circumradius", &outcome));
    };
    Ok(Homothet {
        scale: x[lambda].max(0.0),
        translation: Vector::new(x[..d].to_vec()),
    })
}

/// Largest `λ` and a translation `x` with `x + λ·body ⊆ container`.
///
/// With `pin_origin` the translation is fixed at the origin.
pub fn inscribe(container: &VPolytope, body: &VPolytope, pin_origin: bool) -> Result<Homothet> {
    container.check_dim(body.dim())?;
    if container.dim() == 2 {
        return inscribe_planar(container, body, pin_origin);
    }
    inscribe_vertex(container, body, pin_origin)
}

/// [`inscribe`] through convex-coefficient rows, valid in every dimension.
pub fn inscribe_vertex(
    container: &VPolytope,
    body: &VPolytope,
    pin_origin: bool,
) -> Result<Homothet> {
    let bverts = body.vertices();
    let mut working = initial_working_set(bverts.len(), bverts);
    loop {
        let h = inscribe_subset(container, bverts, &working, pin_origin)?;
        if working.len() == bverts.len() {
            return Ok(h);
        }
        let mut violations = Vec::new();
        for (i, b) in bverts.iter().enumerate() {
            if working.contains(&i) {
                continue;
            }
            let p = h.translation.add(&b.scale(h.scale));
            violations.push((i, membership_residual(container, &p)?));
        }
        if !grow(&mut working, violations, VIOLATION_TOL * (1.0 + h.scale)) {
            return Ok(h);
        }
    }
}

fn inscribe_subset(
    container: &VPolytope,
    bverts: &[Vector],
    working: &[usize],
    pin_origin: bool,
) -> Result<Homothet> {
    let d = container.dim();
    let m = container.len();
    let averts = container.vertices();
    let nx = if pin_origin { 0 } else { d };
    let lambda = nx;
    let base = nx + 1;
    let nvars = base + working.len() * m;
    let mut objective = vec![0.0; nvars];
    objective[lambda] = -1.0;
    let mut lp = LinearProgram::minimize(objective);
    for k in 0..nx {
        lp.set_bound(k, Bound::Free);
    }
    for (slot, &j) in working.iter().enumerate() {
        let block = base + slot * m;
        let b = &bverts[j];
        for k in 0..d {
            let mut terms: Vec<(usize, f64)> = averts
                .iter()
                .enumerate()
                .map(|(i, a)| (block + i, a[k]))
                .collect();
            if !pin_origin {
                terms.push((k, -1.0));
            }
            terms.push((lambda, -b[k]));
            lp.add_sparse(&terms, Relation::Eq, 0.0)?;
        }
        let terms: Vec<(usize, f64)> = (0..m).map(|i| (block + i, 1.0)).collect();
        lp.add_sparse(&terms, Relation::Eq, 1.0)?;
    }
    let outcome = lp.solve()?;
    let LpOutcome::Optimal(LpSolution { x, .. }) = outcome else {
        return Err(solver_error("inscription", &outcome));
    };
    let translation = if pin_origin {
        Vector::zeros(d)
    } else {
        Vector::new(x[..d].to_vec())
    };
    Ok(Homothet {
        scale: x[lambda].max(0.0),
        translation,
    })
}

/// Optimal multipliers of `lp`, the dual of a planar program.
fn planar_duals(lp: &LinearProgram, context: &'static str) -> Result<Vec<f64>> {
    let outcome = lp.solve()?;
    match outcome {
        LpOutcome::Optimal(LpSolution { duals, .. }) => Ok(duals),
        other => Err(solver_error(context, &other)),
    }
}

/// `x + λC ⊇ P` as `⟨a, p - x⟩ <= λ b` for every edge `⟨a, y⟩ <= b` of `C`.
///
/// The program has three variables and one row per edge, so it is solved
/// through its dual (three rows, one column per edge): maximize
/// `Σ y_j h_P(a_j)` subject to `Σ y_j a_j = 0`, `Σ y_j b_j <= 1`, `y >= 0`.
/// The multipliers of the dual rows are `-x` and `-λ`.
fn enclose_planar(points: &VPolytope, body: &VPolytope) -> Result<Homothet> {
    let facets = facets_2d(body)?;
    let hs = facets.polytope.halfspaces();
    let reach: Vec<f64> = hs
        .iter()
        .map(|h| -points.support_value(&h.normal))
        .collect();
    let mut lp = LinearProgram::minimize(reach);
    for k in 0..2 {
        lp.add_constraint(hs.iter().map(|h| h.normal[k]).collect(), Relation::Eq, 0.0);
    }
    lp.add_constraint(hs.iter().map(|h| h.offset).collect(), Relation::Le, 1.0);
    let z = planar_duals(&lp, "circumradius")?;
    Ok(Homothet {
        scale: (-z[2]).max(0.0),
        translation: Vector::from([-z[0], -z[1]]),
    })
}

/// `x + λB ⊆ A` as `⟨a, x⟩ + λ h_B(a) <= b` for every edge `⟨a, y⟩ <= b` of `A`.
///
/// Solved through the dual: minimize `Σ y_j b_j` subject to
/// `Σ y_j a_j = 0` (dropped when `x` is pinned), `Σ y_j h_B(a_j) >= 1`,
/// `y >= 0`. The multipliers of the dual rows are `x` and `λ`.
fn inscribe_planar(container: &VPolytope, body: &VPolytope, pin_origin: bool) -> Result<Homothet> {
    let facets = facets_2d(container)?;
    let hs = facets.polytope.halfspaces();
    let mut lp = LinearProgram::minimize(hs.iter().map(|h| h.offset).collect());
    let nx = if pin_origin { 0 } else { 2 };
    for k in 0..nx {
        lp.add_constraint(hs.iter().map(|h| h.normal[k]).collect(), Relation::Eq, 0.0);
    }
    let reach = hs.iter().map(|h| body.support_value(&h.normal)).collect();
    lp.add_constraint(reach, Relation::Ge, 1.0);
    let z = planar_duals(&lp, "inscription")?;
    let translation = if pin_origin {
        Vector::zeros(2)
    } else {
        Vector::from([z[0], z[1]])
    };
    Ok(Homothet {
        scale: z[nx].max(0.0),
        translation,
    })
}
