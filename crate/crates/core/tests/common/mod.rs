//! Seeded random instances shared by the integration tests.
#![allow(dead_code)]

pub mod props;

use gauge_radii::polytope::interior_margin;
use gauge_radii::{VPolytope, Vector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `|a - b| <= tol (1 + |b|)`.
pub fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * (1.0 + b.abs())
}

/// `a <= b + tol (1 + |b|)`.
pub fn le(a: f64, b: f64, tol: f64) -> bool {
    a <= b + tol * (1.0 + b.abs())
}

pub fn random_vector(rng: &mut ChaCha8Rng, d: usize, spread: f64) -> Vector {
    Vector::new((0..d).map(|_| rng.gen_range(-spread..spread)).collect())
}

pub fn random_unit(rng: &mut ChaCha8Rng, d: usize) -> Vector {
    loop {
        let v = random_vector(rng, d, 1.0);
        let n = v.norm();
        if n > 0.1 && n <= 1.0 {
            return v.scale(1.0 / n);
        }
    }
}

/// A full-dimensional polytope with `n` listed points around a random center.
///
/// Points sit at radii in `[0.5, 1.5]` along random directions; instances
/// whose centroid has a small interior margin are redrawn.
pub fn random_body(rng: &mut ChaCha8Rng, d: usize, n: usize) -> VPolytope {
    assert!(n > d);
    loop {
        let center = random_vector(rng, d, 2.0);
        let pts: Vec<Vector> = (0..n)
            .map(|_| {
                let r = rng.gen_range(0.5..1.5);
                center.add(&random_unit(rng, d).scale(r))
            })
            .collect();
        let p = VPolytope::new(pts).unwrap();
        if interior_margin(&p, &p.centroid()).unwrap() > 0.05 {
            return p;
        }
    }
}

/// A body with between `d + 1` and `max` points.
pub fn random_sized_body(rng: &mut ChaCha8Rng, d: usize, max: usize) -> VPolytope {
    let n = rng.gen_range(d + 1..=max);
    random_body(rng, d, n)
}

/// A body whose vertex list is closed under negation.
pub fn random_centered(rng: &mut ChaCha8Rng, d: usize, half: usize) -> VPolytope {
    loop {
        let pts: Vec<Vector> = (0..half)
            .map(|_| random_unit(rng, d).scale(rng.gen_range(0.5..1.5)))
            .collect();
        let mut all = pts.clone();
        all.extend(pts.iter().map(Vector::neg));
        let p = VPolytope::new(all).unwrap();
        if interior_margin(&p, &Vector::zeros(d)).unwrap() > 0.05 {
            return p;
        }
    }
}

/// Random convex combinations of the vertices of `p`.
pub fn inner_points(rng: &mut ChaCha8Rng, p: &VPolytope, count: usize) -> Vec<Vector> {
    (0..count)
        .map(|_| {
            let w: Vec<f64> = (0..p.len())
                .map(|_| rng.gen_range(0.0..1.0f64).powi(3))
                .collect();
            let total: f64 = w.iter().sum();
            let mut x = Vector::zeros(p.dim());
            for (v, wi) in p.vertices().iter().zip(&w) {
                x = x.add(&v.scale(wi / total));
            }
            x
        })
        .collect()
}

/// A polytope spanned by random points inside `p`; it is contained in `p`.
pub fn random_subbody(rng: &mut ChaCha8Rng, p: &VPolytope) -> VPolytope {
    let count = rng.gen_range(p.dim() + 1..=p.len().max(p.dim() + 1));
    VPolytope::new(inner_points(rng, p, count)).unwrap()
}

/// `p` with extra points outside it; it contains `p`.
pub fn random_superbody(rng: &mut ChaCha8Rng, p: &VPolytope) -> VPolytope {
    let c = p.centroid();
    let extra: Vec<Vector> = (0..2)
        .map(|_| c.add(&random_unit(rng, p.dim()).scale(rng.gen_range(1.0..2.5))))
        .collect();
    p.with_points(&extra).unwrap()
}

/// Regular polygon of circumradius `r`.
pub fn ngon(n: usize, r: f64) -> VPolytope {
    VPolytope::new(
        (0..n)
            .map(|k| {
                let t = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
                Vector::from([r * t.cos(), r * t.sin()])
            })
            .collect(),
    )
    .unwrap()
}

/// `count` evenly spaced unit directions in the plane.
pub fn circle_directions(count: usize) -> Vec<Vector> {
    (0..count)
        .map(|k| {
            let t = 2.0 * std::f64::consts::PI * k as f64 / count as f64;
            Vector::from([t.cos(), t.sin()])
        })
        .collect()
}
