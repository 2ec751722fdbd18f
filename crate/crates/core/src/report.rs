//! JSON documents emitted by the command-line tool.
//!
//! Reported numbers are rounded to 9 significant digits; field order is fixed
//! by the struct layout so output is byte-stable.

use serde::Serialize;

use crate::chain::{ChainFlags, ChainReport};
use crate::functionals::FunctionalValue;
use crate::radii::{RadiiResult, Witness};

/// Rounds to 9 significant digits.
pub fn sig9(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.8e}").parse().expect("formatted float parses")
}

fn sig9_all(v: &[f64]) -> Vec<f64> {
    v.iter().copied().map(sig9).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ValueReport {
    pub value: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<f64>>,
}

impl From<&FunctionalValue> for ValueReport {
    fn from(f: &FunctionalValue) -> Self {
        Self {
            value: sig9(f.value),
            witness: f.witness.as_ref().map(|w| sig9_all(w)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CenterEntry {
    pub value: f64,
    pub center: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PairEntry {
    pub value: f64,
    pub pair: [usize; 2],
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DirectionEntry {
    pub value: f64,
    pub direction: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ChainEntry {
    pub a1: f64,
    pub a2: f64,
    pub a3: f64,
    pub a4: f64,
    pub a5: f64,
    pub a1_exact: bool,
    pub chord_ratio: Option<f64>,
    pub circumradius: f64,
    pub tol: f64,
    pub flags: ChainFlags,
    pub all_hold: bool,
}

impl From<&ChainReport> for ChainEntry {
    fn from(c: &ChainReport) -> Self {
        Self {
            a1: sig9(c.a1),
            a2: sig9(c.a2),
            a3: sig9(c.a3),
            a4: sig9(c.a4),
            a5: sig9(c.a5),
            a1_exact: c.a1_exact,
            chord_ratio: c.chord_ratio.map(sig9),
            circumradius: sig9(c.circumradius),
            tol: c.tol,
            flags: c.flags.clone(),
            all_hold: c.all_hold(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct RadiiReport {
    #[serde(rename = "R", skip_serializing_if = "Option::is_none")]
    pub circumradius: Option<CenterEntry>,
    #[serde(rename = "r", skip_serializing_if = "Option::is_none")]
    pub inradius: Option<CenterEntry>,
    #[serde(rename = "D", skip_serializing_if = "Option::is_none")]
    pub diameter: Option<PairEntry>,
    #[serde(rename = "omega", skip_serializing_if = "Option::is_none")]
    pub min_width: Option<DirectionEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chain: Option<ChainEntry>,
}

impl RadiiReport {
    /// Files a result under its quantity.
    pub fn insert(&mut self, r: &RadiiResult) {
        let value = sig9(r.value);
        match &r.witness {
            Witness::Center(x) => {
                let entry = CenterEntry {
                    value,
                    center: sig9_all(x),
                };
                match r.quantity {
                    crate::radii::Quantity::Inradius => self.inradius = Some(entry),
                    _ => self.circumradius = Some(entry),
                }
            }
            Witness::Pair(i, j) => {
                self.diameter = Some(PairEntry {
                    value,
                    pair: [*i, *j],
                })
            }
            Witness::Direction(u) => {
                self.min_width = Some(DirectionEntry {
                    value,
                    direction: sig9_all(u),
                })
            }
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nine_digits() {
        assert_eq!(sig9(2.0 / 3.0 * (3.0 + 3f64.sqrt())), 3.15470054);
        assert_eq!(sig9(0.0), 0.0);
        assert_eq!(sig9(-1.23456789123e-5), -1.23456789e-5);
        assert_eq!(sig9(2.0), 2.0);
    }

    #[test]
    fn key_order_is_fixed() {
        let mut r = RadiiReport::default();
        r.insert(&RadiiResult {
            quantity: crate::radii::Quantity::Diameter,
            value: 1.0,
            witness: Witness::Pair(0, 2),
        });
        r.insert(&RadiiResult {
            quantity: crate::radii::Quantity::Circumradius,
            value: 0.5,
            witness: Witness::Center(vec![0.5, 0.5].into()),
        });
        assert_eq!(
            r.to_json(),
            r#"{"R":{"value":0.5,"center":[0.5,0.5]},"D":{"value":1.0,"pair":[0,2]}}"#
        );
    }
}
