//! Reference bodies: cubes, cross-polytopes, simplices, regular polygons,
//! the inscribed Reuleaux-triangle approximation and the triangle / square
//! pair used throughout the worked examples.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{GeometryError, Result};
use crate::polytope::VPolytope;
use crate::vector::Vector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BodyKind {
    Cube,
    CrossPolytope,
    Simplex,
    Segment,
    RegularNgon,
    ReuleauxTriangle,
    PaperTriangle,
    PaperSquare,
}

impl BodyKind {
    pub const ALL: [BodyKind; 8] = [
        BodyKind::Cube,
        BodyKind::CrossPolytope,
        BodyKind::Simplex,
        BodyKind::Segment,
        BodyKind::RegularNgon,
        BodyKind::ReuleauxTriangle,
        BodyKind::PaperTriangle,
        BodyKind::PaperSquare,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BodyKind::Cube => "cube",
            BodyKind::CrossPolytope => "cross_polytope",
            BodyKind::Simplex => "simplex",
            BodyKind::Segment => "segment",
            BodyKind::RegularNgon => "regular_ngon",
            BodyKind::ReuleauxTriangle => "reuleaux_triangle",
            BodyKind::PaperTriangle => "paper_triangle",
            BodyKind::PaperSquare => "paper_square",
        }
    }

    fn planar_only(self) -> bool {
        matches!(
            self,
            BodyKind::RegularNgon
                | BodyKind::ReuleauxTriangle
                | BodyKind::PaperTriangle
                | BodyKind::PaperSquare
        )
    }

    fn curved(self) -> bool {
        matches!(self, BodyKind::RegularNgon | BodyKind::ReuleauxTriangle)
    }
}

impl fmt::Display for BodyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BodyKind {
    type Err = GeometryError;

    fn from_str(s: &str) -> Result<Self> {
        BodyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| GeometryError::InvalidSpec(format!("unknown body kind `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BodySpec {
    pub kind: BodyKind,
    pub dim: usize,
    /// Vertices of a regular polygon, or samples per arc of a Reuleaux triangle.
    pub n: usize,
    pub scale: f64,
}

impl BodySpec {
    pub fn new(kind: BodyKind) -> Self {
        Self {
            kind,
            dim: 2,
            n: 96,
            scale: 1.0,
        }
    }

    pub fn dim(mut self, dim: usize) -> Self {
        self.dim = dim;
        self
    }

    pub fn n(mut self, n: usize) -> Self {
        self.n = n;
        self
    }

    pub fn scale(mut self, scale: f64) -> Self {
        self.scale = scale;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.dim == 0 {
            return Err(GeometryError::ZeroDimension);
        }
        if !self.scale.is_finite() || self.scale <= 0.0 {
            return Err(GeometryError::NonPositiveScale(self.scale));
        }
        if self.kind.planar_only() && self.dim != 2 {
            return Err(GeometryError::InvalidSpec(format!(
                "{} is only defined in dimension 2",
                self.kind
            )));
        }
        if self.kind.curved() && self.n < 2 {
            return Err(GeometryError::InvalidSpec(format!(
                "{} needs n >= 2, got {}",
                self.kind, self.n
            )));
        }
        if self.kind == BodyKind::Cube && self.dim > 20 {
            return Err(GeometryError::InvalidSpec(
                "cube dimension too large".into(),
            ));
        }
        Ok(())
    }
}

/// Corners of the equilateral triangle `conv{(2,0), (-1,√3), (-1,-√3)}`.
pub fn triangle_corners() -> [[f64; 2]; 3] {
    let s3 = 3f64.sqrt();
    [[2.0, 0.0], [-1.0, s3], [-1.0, -s3]]
}

/// Inscribed approximation of the Reuleaux triangle over [`triangle_corners`].
///
/// Each arc has radius `2√3` (the side length) and is centered at the corner
/// opposite to it; it is sampled at `n + 1` equally spaced angles including
/// both end corners, which are stored exactly. Shared corners are kept once,
/// so the result has `3n` vertices.
pub fn reuleaux_points(n: usize) -> Vec<[f64; 2]> {
    let corners = triangle_corners();
    let radius = 2.0 * 3f64.sqrt();
    let mut out = Vec::with_capacity(3 * n);
    for k in 0..3 {
        let center = corners[k];
        let start = corners[(k + 1) % 3];
        let end = corners[(k + 2) % 3];
        let a0 = (start[1] - center[1]).atan2(start[0] - center[0]);
        let mut a1 = (end[1] - center[1]).atan2(end[0] - center[0]);
        if a1 < a0 {
            a1 += 2.0 * PI;
        }
        // the end corner is the start of the next arc
        for i in 0..n {
            if i == 0 {
                out.push(start);
            } else {
                let t = a0 + (a1 - a0) * i as f64 / n as f64;
                out.push([center[0] + radius * t.cos(), center[1] + radius * t.sin()]);
            }
        }
    }
    out
}

pub fn make_body(spec: &BodySpec) -> Result<VPolytope> {
    spec.validate()?;
    let s = spec.scale;
    let d = spec.dim;
    let rows: Vec<Vec<f64>> = match spec.kind {
        BodyKind::Cube => (0..(1usize << d))
            .map(|mask| {
                (0..d)
                    .map(|i| if mask >> i & 1 == 1 { s } else { -s })
                    .collect()
            })
            .collect(),
        BodyKind::CrossPolytope => (0..d)
            .flat_map(|i| {
                [s, -s].map(|v| {
                    let mut e = vec![0.0; d];
                    e[i] = v;
                    e
                })
            })
            .collect(),
        BodyKind::Simplex => std::iter::once(vec![0.0; d])
            .chain((0..d).map(|i| {
                let mut e = vec![0.0; d];
                e[i] = s;
                e
            }))
            .collect(),
        BodyKind::Segment => {
            let mut e = vec![0.0; d];
            e[0] = s;
            vec![vec![0.0; d], e]
        }
        BodyKind::RegularNgon => (0..spec.n)
            .map(|k| {
                let t = 2.0 * PI * k as f64 / spec.n as f64;
                vec![s * t.cos(), s * t.sin()]
            })
            .collect(),
        BodyKind::ReuleauxTriangle => reuleaux_points(spec.n)
            .into_iter()
            .map(|p| vec![s * p[0], s * p[1]])
            .collect(),
        BodyKind::PaperTriangle => triangle_corners()
            .into_iter()
            .map(|p| vec![s * p[0], s * p[1]])
            .collect(),
        BodyKind::PaperSquare => {
            let a = 3f64.sqrt();
            [[a, a], [-a, a], [-a, -a], [a, -a]]
                .into_iter()
                .map(|p| vec![s * p[0], s * p[1]])
                .collect()
        }
    };
    VPolytope::with_dim(d, rows.into_iter().map(Vector::new).collect())
}
