//! The two planar reference configurations and their closed-form values.
//!
//! * Triangle gauge, square body: `C = conv{(2,0), (-1,±√3)}`,
//!   `K = conv{(±√3, ±√3)}`.
//! * Reuleaux pair: `C` the Reuleaux triangle over the same corners and
//!   `K = -C`, so that `K - K = C - C` is the disc of radius `2√3`. Only a
//!   polygonal approximation is available here.

use crate::bodies::{make_body, BodyKind, BodySpec};
use crate::error::Result;
use crate::polytope::{difference_body, VPolytope};
use crate::radii::{circumradius, diameter, inradius, min_width};

fn s3() -> f64 {
    3f64.sqrt()
}

/// `sup γ_C(x - y) = 3 + √3` for the triangle/square pair.
pub fn triangle_square_max_gauge() -> f64 {
    3.0 + s3()
}

/// `R(K - K, C) = 2 + 4/√3`.
pub fn triangle_square_difference_circumradius() -> f64 {
    2.0 + 4.0 / s3()
}

/// `D(K, C) = (2/3)(3 + √3)`.
pub fn triangle_square_diameter() -> f64 {
    2.0 / 3.0 * (3.0 + s3())
}

/// `R(K - K, C) = (3 + √3)/2` for the Reuleaux pair.
pub fn reuleaux_difference_circumradius() -> f64 {
    0.5 * (3.0 + s3())
}

/// `r(K - K, C) = √3`.
pub fn reuleaux_difference_inradius() -> f64 {
    s3()
}

/// `D(K, C) = ω(K, C) = 2`.
pub const REULEAUX_DIAMETER: f64 = 2.0;
pub const REULEAUX_MIN_WIDTH: f64 = 2.0;

pub fn triangle_square() -> (VPolytope, VPolytope) {
    let k = make_body(&BodySpec::new(BodyKind::PaperSquare)).expect("valid spec");
    let c = make_body(&BodySpec::new(BodyKind::PaperTriangle)).expect("valid spec");
    (k, c)
}

/// `(K, C)` with `C` sampled at `n` points per arc and `K = -C`.
pub fn reuleaux_pair(n: usize) -> Result<(VPolytope, VPolytope)> {
    let c = make_body(&BodySpec::new(BodyKind::ReuleauxTriangle).n(n))?;
    Ok((c.reflected(), c))
}

/// One row of the Reuleaux convergence study.
#[derive(Clone, Debug, PartialEq)]
pub struct ReuleauxRow {
    pub n: usize,
    /// `R(K - K, C)`
    pub circumradius: f64,
    /// `r(K - K, C)`
    pub inradius: f64,
    /// `D(K, C)`
    pub diameter: f64,
    /// `ω(K, C)`
    pub min_width: f64,
    /// `max |h_{K-K}(u) - 2√3|` over [`GAP_DIRECTIONS`] equally spaced unit
    /// directions: how far the sampled difference body is from the disc.
    pub support_gap: f64,
}

pub const GAP_DIRECTIONS: usize = 360;

/// `max |h_P(u) - radius|` over equally spaced unit directions.
pub fn disc_support_gap(p: &VPolytope, radius: f64, directions: usize) -> f64 {
    (0..directions)
        .map(|k| {
            let t = 2.0 * std::f64::consts::PI * k as f64 / directions as f64;
            (p.support_value(&[t.cos(), t.sin()]) - radius).abs()
        })
        .fold(0.0, f64::max)
}

impl ReuleauxRow {
    pub fn compute(n: usize) -> Result<Self> {
        let (k, c) = reuleaux_pair(n)?;
        let kk = difference_body(&k).reduced();
        Ok(Self {
            n,
            circumradius: circumradius(&kk, &c)?.value,
            inradius: inradius(&kk, &c)?.value,
            diameter: diameter(&k, &c)?.value,
            min_width: min_width(&k, &c)?.value,
            support_gap: disc_support_gap(&kk, 2.0 * s3(), GAP_DIRECTIONS),
        })
    }

    /// Absolute deviations from the exact values, in the order `R, r, D, ω`.
    pub fn errors(&self) -> [f64; 4] {
        [
            (self.circumradius - reuleaux_difference_circumradius()).abs(),
            (self.inradius - reuleaux_difference_inradius()).abs(),
            (self.diameter - REULEAUX_DIAMETER).abs(),
            (self.min_width - REULEAUX_MIN_WIDTH).abs(),
        ]
    }

    pub fn max_error(&self) -> f64 {
        self.errors().into_iter().fold(0.0, f64::max)
    }
}
