//! Seeded checks of the structural properties of `R`, `r`, `D` and `ω`.
//!
//! Each check draws one random instance from its seed and returns the list
//! of violated relations (empty on success).
#![allow(dead_code)]

use gauge_radii::polytope::minkowski_sum;
use gauge_radii::radii::{circumradius, diameter, inradius, min_width};
use gauge_radii::{Quantity, VPolytope};
use rand::Rng;

use super::*;

pub const TOL: f64 = 1e-6;
pub const QUANTITIES: [Quantity; 4] = [
    Quantity::Circumradius,
    Quantity::Inradius,
    Quantity::Diameter,
    Quantity::MinWidth,
];

pub fn name(q: Quantity) -> &'static str {
    match q {
        Quantity::Circumradius => "R",
        Quantity::Inradius => "r",
        Quantity::Diameter => "D",
        Quantity::MinWidth => "omega",
    }
}

pub fn eval(q: Quantity, k: &VPolytope, c: &VPolytope) -> f64 {
    let r = match q {
        Quantity::Circumradius => circumradius(k, c),
        Quantity::Inradius => inradius(k, c),
        Quantity::Diameter => diameter(k, c),
        Quantity::MinWidth => min_width(k, c),
    };
    r.unwrap_or_else(|e| panic!("{} failed: {e}", name(q)))
        .value
}

pub fn instance(seed: u64, d: usize) -> (rand_chacha::ChaCha8Rng, VPolytope, VPolytope) {
    let mut rng = rng(seed.wrapping_mul(0x9E37_79B9) ^ d as u64);
    let k = random_sized_body(&mut rng, d, 10);
    let c = random_sized_body(&mut rng, d, 10);
    (rng, k, c)
}

pub fn translation(seed: u64, d: usize) -> Vec<String> {
    let (mut rng, k, c) = instance(seed, d);
    let x = random_vector(&mut rng, d, 3.0);
    let y = random_vector(&mut rng, d, 3.0);
    let (kx, cy) = (k.translate(&x).unwrap(), c.translate(&y).unwrap());
    let mut fails = Vec::new();
    for q in QUANTITIES {
        let (a, b) = (eval(q, &kx, &cy), eval(q, &k, &c));
        if !close(a, b, TOL) {
            fails.push(format!("translation {}: {a} vs {b}", name(q)));
        }
    }
    fails
}

pub fn homogeneity(seed: u64, d: usize) -> Vec<String> {
    let (mut rng, k, c) = instance(seed, d);
    let alpha = rng.gen_range(0.3..3.0);
    let beta = rng.gen_range(0.3..3.0);
    let (ka, cb) = (k.scaled(alpha).unwrap(), c.scaled(beta).unwrap());
    let mut fails = Vec::new();
    for q in QUANTITIES {
        let (a, b) = (eval(q, &ka, &cb), alpha / beta * eval(q, &k, &c));
        if !close(a, b, TOL) {
            fails.push(format!("homogeneity {}: {a} vs {b}", name(q)));
        }
    }
    fails
}

/// `K' ⊆ K` and `C ⊆ C'`: every quantity of `(K', C')` is at most that of `(K, C)`.
pub fn monotonicity(seed: u64, d: usize) -> Vec<String> {
    let (mut rng, k, c) = instance(seed, d);
    let k_small = random_subbody(&mut rng, &k);
    let c_large = random_superbody(&mut rng, &c);
    let mut fails = Vec::new();
    for q in QUANTITIES {
        let (a, b) = (eval(q, &k_small, &c_large), eval(q, &k, &c));
        if !le(a, b, TOL) {
            fails.push(format!("monotonicity {}: {a} > {b}", name(q)));
        }
    }
    fails
}

/// `R`, `D` subadditive and `r`, `ω` superadditive in the body.
pub fn additivity(seed: u64, d: usize) -> Vec<String> {
    let (mut rng, k, c) = instance(seed, d);
    let k2 = random_sized_body(&mut rng, d, if d == 2 { 10 } else { 5 });
    let sum = minkowski_sum(&k, &k2).unwrap();
    let mut fails = Vec::new();
    for q in QUANTITIES {
        let whole = eval(q, &sum, &c);
        let parts = eval(q, &k, &c) + eval(q, &k2, &c);
        let ok = match q {
            Quantity::Circumradius | Quantity::Diameter => le(whole, parts, TOL),
            Quantity::Inradius | Quantity::MinWidth => le(parts, whole, TOL),
        };
        if !ok {
            fails.push(format!(
                "additivity {}: sum {whole}, parts {parts}",
                name(q)
            ));
        }
    }
    fails
}

/// `R(K,C') <= R(K,C) R(C,C')`, `r(K,C') >= r(K,C) r(C,C')`,
/// `D(K,C') <= ½ D(K,C) D(C,C')` and `ω(K,C') >= ½ ω(K,C) ω(C,C')`.
pub fn nesting(seed: u64, d: usize) -> Vec<String> {
    let (mut rng, k, c) = instance(seed, d);
    let c2 = random_sized_body(&mut rng, d, 10);
    let mut fails = Vec::new();
    for q in QUANTITIES {
        let direct = eval(q, &k, &c2);
        let factor = match q {
            Quantity::Diameter | Quantity::MinWidth => 0.5,
            _ => 1.0,
        };
        let through = factor * eval(q, &k, &c) * eval(q, &c, &c2);
        let ok = match q {
            Quantity::Circumradius | Quantity::Diameter => le(direct, through, TOL),
            Quantity::Inradius | Quantity::MinWidth => le(through, direct, TOL),
        };
        if !ok {
            fails.push(format!(
                "nesting {}: direct {direct}, through C {through}",
                name(q)
            ));
        }
    }
    fails
}

/// Adding points inside `K` changes nothing.
pub fn hull_invariance(seed: u64, d: usize) -> Vec<String> {
    let (mut rng, k, c) = instance(seed, d);
    let extra = inner_points(&mut rng, &k, 4);
    let padded = k.with_points(&extra).unwrap();
    let mut fails = Vec::new();
    for q in QUANTITIES {
        let (a, b) = (eval(q, &padded, &c), eval(q, &k, &c));
        if !close(a, b, TOL) {
            fails.push(format!("hull invariance {}: {a} vs {b}", name(q)));
        }
    }
    fails
}

pub type Check = fn(u64, usize) -> Vec<String>;

pub const CHECKS: [(&str, Check); 6] = [
    ("translation invariance", translation),
    ("homogeneity", homogeneity),
    ("monotonicity", monotonicity),
    ("sub/super-additivity", additivity),
    ("nesting", nesting),
    ("hull invariance", hull_invariance),
];

/// Runs `check` over `seeds` in `d = 2` and `d = 3` and collects failures.
pub fn sweep(check: Check, seeds: u64) -> Vec<String> {
    let mut fails = Vec::new();
    for d in [2, 3] {
        for seed in 0..seeds {
            match std::panic::catch_unwind(|| check(seed, d)) {
                Ok(found) => {
                    for f in found {
                        fails.push(format!("d={d} seed={seed}: {f}"));
                    }
                }
                Err(e) => {
                    let msg = e
                        .downcast_ref::<String>()
                        .cloned()
                        .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                        .unwrap_or_default();
                    fails.push(format!("d={d} seed={seed}: panicked: {msg}"));
                }
            }
        }
    }
    fails
}
