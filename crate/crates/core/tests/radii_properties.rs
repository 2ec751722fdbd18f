//! Structural properties of the four quantities on random instances.
//!
//! Translation invariance, homogeneity, monotonicity, additivity and nesting
//! are swept by the acceptance target; hull invariance is checked here.

mod common;

use common::props::{self, sweep};

const SEEDS: u64 = 100;

#[test]
fn hull_invariance() {
    let fails = sweep(props::hull_invariance, SEEDS);
    assert!(
        fails.is_empty(),
        "{} failures:\n{}",
        fails.len(),
        fails.join("\n")
    );
}
