//! Dense two-phase simplex solver.
//!
//! Programs are stated as `minimize c·x` subject to rows `a·x (<=|=|>=) b`
//! and a per-variable lower bound (finite or free). The solver converts to
//! standard form (shifted / split variables, non-negative right-hand sides,
//! slack, surplus and artificial columns), runs phase 1 on the sum of the
//! artificials and phase 2 on the real objective. Entering columns follow
//! Bland's smallest-index rule. The leaving row comes from a Harris ratio test
//! (largest pivot among near-minimal ratios); after a long run of degenerate
//! pivots the solver switches to Bland's leaving rule, which cannot cycle.
//!
//! Rounding drift is contained by recomputing the tableau as `B⁻¹[A | b]` from
//! the original rows at regular intervals and before accepting an optimal or
//! unbounded verdict.
//!
//! The tableau is stored densely. Every program built by this crate has at
//! most a few hundred rows, and the column count is dominated by convex
//! coefficients, so a dense tableau stays small.

use thiserror::Error;

/// Smallest tableau entry accepted as a pivot.
pub const PIVOT_TOL: f64 = 1e-9;
/// Pivot entries below this fraction of the column's largest entry are skipped.
pub const RELATIVE_PIVOT: f64 = 1e-7;
/// Pivots between recomputations of the tableau from the original rows.
const REFRESH_EVERY: usize = 32;
/// Ratio slack of the Harris test.
const HARRIS_TOL: f64 = 1e-9;
/// Consecutive degenerate pivots (beyond the row count) before switching to
/// Bland's leaving rule.
const BLAND_AFTER: usize = 50;
/// Smallest entry used to pivot a zero-level artificial out of the basis.
const DRIVE_OUT_TOL: f64 = 1e-7;
/// Reduced costs above `-OPTIMALITY_TOL` count as non-negative.
const OPTIMALITY_TOL: f64 = 1e-9;
/// Maximum constraint violation tolerated for an optimal point.
pub const FEASIBILITY_TOL: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

/// Lower bound of a decision variable.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Bound {
    Free,
    Lower(f64),
}

#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: Vec<f64>,
    pub relation: Relation,
    pub rhs: f64,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LpError {
    #[error("constraint {row} has {found} coefficients, expected {expected}")]
    Arity {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("variable index {index} out of range for {num_vars} variables")]
    VariableIndex { index: usize, num_vars: usize },
    #[error("program contains a non-finite coefficient")]
    NonFinite,
}

/// Optimal point of a linear program.
#[derive(Clone, Debug, PartialEq)]
pub struct LpSolution {
    pub x: Vec<f64>,
    pub value: f64,
    /// One multiplier per constraint: `c - Σ y_i a_i` is nonnegative on the
    /// variables with a lower bound and zero on free ones.
    pub duals: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    Optimal(LpSolution),
    Infeasible,
    Unbounded,
    /// The pivot limit was exhausted or the final point violates the rows.
    NumericalFailure,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
    NumericalFailure,
}

impl LpOutcome {
    pub fn status(&self) -> LpStatus {
        match self {
            LpOutcome::Optimal(_) => LpStatus::Optimal,
            LpOutcome::Infeasible => LpStatus::Infeasible,
            LpOutcome::Unbounded => LpStatus::Unbounded,
            LpOutcome::NumericalFailure => LpStatus::NumericalFailure,
        }
    }

    pub fn optimal(self) -> Option<LpSolution> {
        match self {
            LpOutcome::Optimal(s) => Some(s),
            _ => None,
        }
    }
}

/// A minimization program. Variables default to `x >= 0`.
#[derive(Clone, Debug)]
pub struct LinearProgram {
    objective: Vec<f64>,
    constraints: Vec<Constraint>,
    bounds: Vec<Bound>,
}

impl LinearProgram {
    pub fn minimize(objective: Vec<f64>) -> Self {
        let n = objective.len();
        Self {
            objective,
            constraints: Vec::new(),
            bounds: vec![Bound::Lower(0.0); n],
        }
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn objective(&self) -> &[f64] {
        &self.objective
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn bounds(&self) -> &[Bound] {
        &self.bounds
    }

    pub fn set_bound(&mut self, var: usize, bound: Bound) {
        self.bounds[var] = bound;
    }

    /// Adds a dense row. Arity is checked by [`LinearProgram::solve`].
    pub fn add_constraint(&mut self, coeffs: Vec<f64>, relation: Relation, rhs: f64) {
        self.constraints.push(Constraint {
            coeffs,
            relation,
            rhs,
        });
    }

    /// Adds a row given as `(variable, coefficient)` pairs; repeated indices accumulate.
    pub fn add_sparse(
        &mut self,
        terms: &[(usize, f64)],
        relation: Relation,
        rhs: f64,
    ) -> Result<(), LpError> {
        let n = self.num_vars();
        let mut coeffs = vec![0.0; n];
        for &(j, a) in terms {
            if j >= n {
                return Err(LpError::VariableIndex {
                    index: j,
                    num_vars: n,
                });
            }
            coeffs[j] += a;
        }
        self.add_constraint(coeffs, relation, rhs);
        Ok(())
    }

    /// Largest violation of any row or lower bound at `x`.
    pub fn max_violation(&self, x: &[f64]) -> f64 {
        let mut worst: f64 = 0.0;
        for c in &self.constraints {
            let lhs: f64 = c.coeffs.iter().zip(x).map(|(a, v)| a * v).sum();
            let v = match c.relation {
                Relation::Le => lhs - c.rhs,
                Relation::Ge => c.rhs - lhs,
                Relation::Eq => (lhs - c.rhs).abs(),
            };
            worst = worst.max(v);
        }
        for (b, v) in self.bounds.iter().zip(x) {
            if let Bound::Lower(l) = b {
                worst = worst.max(l - v);
            }
        }
        worst
    }

    fn validate(&self) -> Result<(), LpError> {
        let n = self.num_vars();
        if self.objective.iter().any(|v| !v.is_finite()) {
            return Err(LpError::NonFinite);
        }
        for (row, c) in self.constraints.iter().enumerate() {
            if c.coeffs.len() != n {
                return Err(LpError::Arity {
                    row,
                    expected: n,
                    found: c.coeffs.len(),
                });
            }
            if !c.rhs.is_finite() || c.coeffs.iter().any(|v| !v.is_finite()) {
                return Err(LpError::NonFinite);
            }
        }
        if self
            .bounds
            .iter()
            .any(|b| matches!(b, Bound::Lower(l) if !l.is_finite()))
        {
            return Err(LpError::NonFinite);
        }
        Ok(())
    }

    pub fn solve(&self) -> Result<LpOutcome, LpError> {
        self.validate()?;
        Ok(solve_validated(self))
    }
}

/// How an original variable maps onto standard-form columns.
#[derive(Clone, Copy)]
enum ColumnMap {
    Shifted { col: usize, lower: f64 },
    Split { pos: usize, neg: usize },
}

struct Tableau {
    rows: usize,
    /// Number of columns excluding the right-hand side.
    cols: usize,
    width: usize,
    data: Vec<f64>,
    /// Reduced-cost row; the last entry holds the negated objective value.
    cost: Vec<f64>,
    /// Objective coefficients the cost row is priced from.
    objective: Vec<f64>,
    basis: Vec<usize>,
    /// Original row index of each tableau row.
    row_ids: Vec<usize>,
    /// The rows as first assembled, before any pivot.
    original: Vec<f64>,
}

#[derive(Debug)]
enum Stop {
    Optimal,
    Unbounded,
    Limit,
    Singular,
}

/// LU factors of a square matrix with row pivoting.
struct Lu {
    k: usize,
    a: Vec<f64>,
    perm: Vec<usize>,
}

impl Lu {
    fn factor(mut a: Vec<f64>, k: usize) -> Option<Self> {
        let scale = a.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let mut perm: Vec<usize> = (0..k).collect();
        for col in 0..k {
            let piv =
                (col..k).max_by(|&i, &j| a[i * k + col].abs().total_cmp(&a[j * k + col].abs()))?;
            let p = a[piv * k + col].abs();
            if p.is_nan() || p <= 1e-12 * scale {
                return None;
            }
            if piv != col {
                for j in 0..k {
                    a.swap(piv * k + j, col * k + j);
                }
                perm.swap(piv, col);
            }
            let p = a[col * k + col];
            for i in col + 1..k {
                let f = a[i * k + col] / p;
                a[i * k + col] = f;
                if f != 0.0 {
                    for j in col + 1..k {
                        a[i * k + j] -= f * a[col * k + j];
                    }
                }
            }
        }
        Some(Self { k, a, perm })
    }

    fn solve(&self, b: &[f64]) -> Vec<f64> {
        let k = self.k;
        let mut y: Vec<f64> = self.perm.iter().map(|&p| b[p]).collect();
        for i in 0..k {
            let s: f64 = (0..i).map(|j| self.a[i * k + j] * y[j]).sum();
            y[i] -= s;
        }
        for i in (0..k).rev() {
            let s: f64 = (i + 1..k).map(|j| self.a[i * k + j] * y[j]).sum();
            y[i] = (y[i] - s) / self.a[i * k + i];
        }
        y
    }
}

impl Tableau {
    fn rhs(&self, i: usize) -> f64 {
        self.data[i * self.width + self.cols]
    }

    fn at(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.width + j]
    }

    /// Rebuilds every row as `B⁻¹` times the original rows; false if `B` is singular.
    fn reinvert(&mut self) -> bool {
        let (k, w) = (self.rows, self.width);
        let mut b = vec![0.0; k * k];
        for (r, &id) in self.row_ids.iter().enumerate() {
            for (s, &col) in self.basis.iter().enumerate() {
                b[r * k + s] = self.original[id * w + col];
            }
        }
        let Some(lu) = Lu::factor(b, k) else {
            return false;
        };
        let mut column = vec![0.0; k];
        for j in 0..w {
            for (r, &id) in self.row_ids.iter().enumerate() {
                column[r] = self.original[id * w + j];
            }
            let y = lu.solve(&column);
            for (s, v) in y.into_iter().enumerate() {
                self.data[s * w + j] = v;
            }
        }
        for (s, &col) in self.basis.iter().enumerate() {
            for r in 0..k {
                self.data[r * w + col] = if r == s { 1.0 } else { 0.0 };
            }
        }
        true
    }

    fn refresh(&mut self) -> bool {
        let ok = self.reinvert();
        self.reprice();
        ok
    }

    /// Recomputes the reduced-cost row from the objective and current rows.
    fn reprice(&mut self) {
        let w = self.width;
        let mut cost = self.objective.clone();
        cost.resize(w, 0.0);
        for i in 0..self.rows {
            let cb = self.objective.get(self.basis[i]).copied().unwrap_or(0.0);
            if cb != 0.0 {
                for (c, v) in cost.iter_mut().zip(&self.data[i * w..(i + 1) * w]) {
                    *c -= cb * v;
                }
            }
        }
        for &b in &self.basis {
            cost[b] = 0.0;
        }
        self.cost = cost;
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let w = self.width;
        let p = self.data[r * w + c];
        {
            let row = &mut self.data[r * w..(r + 1) * w];
            for v in row.iter_mut() {
                *v /= p;
            }
            row[c] = 1.0;
        }
        let (before, rest) = self.data.split_at_mut(r * w);
        let (prow, after) = rest.split_at_mut(w);
        for row in before.chunks_exact_mut(w).chain(after.chunks_exact_mut(w)) {
            let f = row[c];
            if f != 0.0 {
                for (v, pv) in row.iter_mut().zip(prow.iter()) {
                    *v -= f * pv;
                }
                row[c] = 0.0;
            }
        }
        let f = self.cost[c];
        if f != 0.0 {
            for (v, pv) in self.cost.iter_mut().zip(prow.iter()) {
                *v -= f * pv;
            }
            self.cost[c] = 0.0;
        }
        self.basis[r] = c;
    }

    /// Harris two-pass ratio test: among rows whose ratio is within
    /// `HARRIS_TOL` of the bound, take the largest pivot entry, ties to the
    /// lowest basic index. This avoids pivoting on near-zero entries.
    fn leaving_harris(&self, c: usize) -> Option<usize> {
        let floor = self.pivot_floor(c);
        let mut bound = f64::INFINITY;
        for i in 0..self.rows {
            let a = self.at(i, c);
            if a > floor {
                bound = bound.min((self.rhs(i).max(0.0) + HARRIS_TOL) / a);
            }
        }
        let mut best: Option<(usize, f64)> = None;
        for i in 0..self.rows {
            let a = self.at(i, c);
            if a <= floor || self.rhs(i).max(0.0) / a > bound {
                continue;
            }
            let better = match best {
                None => true,
                Some((bi, ba)) => a > ba || (a == ba && self.basis[i] < self.basis[bi]),
            };
            if better {
                best = Some((i, a));
            }
        }
        best.map(|(i, _)| i)
    }

    /// Smallest usable pivot in column `c`: entries far below the column's
    /// largest positive entry are treated as zero, so that a degenerate row
    /// cannot force a pivot that leaves the basis nearly singular.
    fn pivot_floor(&self, c: usize) -> f64 {
        let top = (0..self.rows).map(|i| self.at(i, c)).fold(0.0, f64::max);
        PIVOT_TOL.max(RELATIVE_PIVOT * top)
    }

    /// Bland's leaving rule: lowest basic index among minimum-ratio rows.
    fn leaving_bland(&self, c: usize) -> Option<usize> {
        let floor = self.pivot_floor(c);
        let mut leave: Option<(usize, f64)> = None;
        for i in 0..self.rows {
            let a = self.at(i, c);
            if a <= floor {
                continue;
            }
            let ratio = self.rhs(i).max(0.0) / a;
            match leave {
                None => leave = Some((i, ratio)),
                Some((bi, br)) => {
                    let slack = 1e-12 * (1.0 + br.abs());
                    if ratio < br - slack || (ratio <= br + slack && self.basis[i] < self.basis[bi])
                    {
                        leave = Some((i, ratio));
                    }
                }
            }
        }
        leave.map(|(i, _)| i)
    }

    /// Bland's entering rule (lowest-index improving column); the leaving row
    /// comes from the Harris test, or from Bland's rule after a long run of
    /// degenerate pivots so that the method cannot cycle.
    fn optimize(&mut self, allowed_cols: usize, max_pivots: usize) -> Stop {
        let mut fresh = false;
        let mut degenerate_run = 0usize;
        for step in 0..max_pivots {
            if !fresh && step % REFRESH_EVERY == 0 {
                if !self.refresh() {
                    return Stop::Singular;
                }
                fresh = true;
            }
            let Some(c) = (0..allowed_cols).find(|&j| self.cost[j] < -OPTIMALITY_TOL) else {
                if fresh {
                    return Stop::Optimal;
                }
                if !self.refresh() {
                    return Stop::Singular;
                }
                fresh = true;
                continue;
            };
            let leave = if degenerate_run > BLAND_AFTER + self.rows {
                self.leaving_bland(c)
            } else {
                self.leaving_harris(c)
            };
            match leave {
                Some(r) => {
                    if self.rhs(r) <= HARRIS_TOL {
                        degenerate_run += 1;
                    } else {
                        degenerate_run = 0;
                    }
                    self.pivot(r, c);
                    fresh = false;
                }
                None if fresh => return Stop::Unbounded,
                None => {
                    if !self.refresh() {
                        return Stop::Singular;
                    }
                    fresh = true;
                }
            }
        }
        Stop::Limit
    }

    fn remove_row(&mut self, r: usize) {
        let w = self.width;
        self.data.drain(r * w..(r + 1) * w);
        self.basis.remove(r);
        self.row_ids.remove(r);
        self.rows -= 1;
    }
}

fn solve_validated(lp: &LinearProgram) -> LpOutcome {
    let n = lp.num_vars();

    // Standard-form structural columns.
    let mut maps = Vec::with_capacity(n);
    let mut structural = 0usize;
    for b in &lp.bounds {
        match *b {
            Bound::Lower(lower) => {
                maps.push(ColumnMap::Shifted {
                    col: structural,
                    lower,
                });
                structural += 1;
            }
            Bound::Free => {
                maps.push(ColumnMap::Split {
                    pos: structural,
                    neg: structural + 1,
                });
                structural += 2;
            }
        }
    }

    // Rows with rhs >= 0 after shifting bounds.
    struct Row {
        coeffs: Vec<f64>,
        relation: Relation,
        rhs: f64,
    }
    let mut rows: Vec<Row> = Vec::with_capacity(lp.constraints.len());
    let mut flipped = Vec::with_capacity(lp.constraints.len());
    for con in &lp.constraints {
        let mut coeffs = vec![0.0; structural];
        let mut rhs = con.rhs;
        for (j, &a) in con.coeffs.iter().enumerate() {
            if a == 0.0 {
                continue;
            }
            match maps[j] {
                ColumnMap::Shifted { col, lower } => {
                    coeffs[col] = a;
                    rhs -= a * lower;
                }
                ColumnMap::Split { pos, neg } => {
                    coeffs[pos] = a;
                    coeffs[neg] = -a;
                }
            }
        }
        let mut relation = con.relation;
        flipped.push(rhs < 0.0);
        if rhs < 0.0 {
            rhs = -rhs;
            coeffs.iter_mut().for_each(|v| *v = -*v);
            relation = match relation {
                Relation::Le => Relation::Ge,
                Relation::Ge => Relation::Le,
                Relation::Eq => Relation::Eq,
            };
        }
        rows.push(Row {
            coeffs,
            relation,
            rhs,
        });
    }

    let m = rows.len();
    let n_slack = rows.iter().filter(|r| r.relation != Relation::Eq).count();
    let n_art = rows.iter().filter(|r| r.relation != Relation::Le).count();
    let art_start = structural + n_slack;
    let cols = art_start + n_art;
    let width = cols + 1;

    let mut data = vec![0.0; m * width];
    let mut basis = vec![0usize; m];
    let mut next_slack = structural;
    let mut next_art = art_start;
    // Column holding `e_i` in row `i`; its reduced cost is minus the dual.
    let mut unit = vec![0usize; m];
    for (i, row) in rows.iter().enumerate() {
        let line = &mut data[i * width..(i + 1) * width];
        line[..structural].copy_from_slice(&row.coeffs);
        line[cols] = row.rhs;
        match row.relation {
            Relation::Le => {
                line[next_slack] = 1.0;
                basis[i] = next_slack;
                unit[i] = next_slack;
                next_slack += 1;
            }
            Relation::Ge => {
                line[next_slack] = -1.0;
                next_slack += 1;
                line[next_art] = 1.0;
                basis[i] = next_art;
                unit[i] = next_art;
                next_art += 1;
            }
            Relation::Eq => {
                line[next_art] = 1.0;
                basis[i] = next_art;
                unit[i] = next_art;
                next_art += 1;
            }
        }
    }

    let original = data.clone();
    let mut tab = Tableau {
        original,
        rows: m,
        cols,
        width,
        data,
        cost: vec![0.0; width],
        objective: Vec::new(),
        basis,
        row_ids: (0..m).collect(),
    };
    let max_pivots = 50_000usize.max(50 * (m + cols));
    let rhs_scale = 1.0 + rows.iter().map(|r| r.rhs).fold(0.0, f64::max);

    // Phase 1: minimize the sum of the artificials.
    if n_art > 0 {
        tab.objective = vec![0.0; cols];
        tab.objective[art_start..].iter_mut().for_each(|c| *c = 1.0);
        tab.reprice();
        match tab.optimize(cols, max_pivots) {
            Stop::Optimal => {}
            // Phase 1 is bounded below by zero.
            Stop::Unbounded | Stop::Limit | Stop::Singular => return LpOutcome::NumericalFailure,
        }
        let infeasibility = -tab.cost[cols];
        if infeasibility > FEASIBILITY_TOL * rhs_scale {
            return LpOutcome::Infeasible;
        }
        // Drive remaining artificials out of the basis; drop redundant rows.
        let mut i = 0;
        while i < tab.rows {
            if tab.basis[i] >= art_start {
                let mut best: Option<(usize, f64)> = None;
                for j in 0..art_start {
                    let a = tab.at(i, j).abs();
                    if a > DRIVE_OUT_TOL && best.is_none_or(|(_, b)| a > b) {
                        best = Some((j, a));
                    }
                }
                match best {
                    Some((j, _)) => tab.pivot(i, j),
                    None => {
                        tab.remove_row(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
    }

    // Phase 2 on the real objective; artificial columns may no longer enter.
    let mut objective = vec![0.0; cols];
    for (j, &c) in lp.objective.iter().enumerate() {
        match maps[j] {
            ColumnMap::Shifted { col, .. } => objective[col] = c,
            ColumnMap::Split { pos, neg } => {
                objective[pos] = c;
                objective[neg] = -c;
            }
        }
    }
    tab.objective = objective;
    tab.reprice();
    match tab.optimize(art_start, max_pivots) {
        Stop::Optimal => {}
        Stop::Unbounded => return LpOutcome::Unbounded,
        Stop::Limit | Stop::Singular => return LpOutcome::NumericalFailure,
    }

    let mut y = vec![0.0; cols];
    for i in 0..tab.rows {
        y[tab.basis[i]] = tab.rhs(i).max(0.0);
    }
    let x: Vec<f64> = maps
        .iter()
        .map(|m| match *m {
            ColumnMap::Shifted { col, lower } => lower + y[col],
            ColumnMap::Split { pos, neg } => y[pos] - y[neg],
        })
        .collect();
    let violation = lp.max_violation(&x);
    if violation > FEASIBILITY_TOL * rhs_scale.max(1.0) {
        return LpOutcome::NumericalFailure;
    }
    let value = lp.objective.iter().zip(&x).map(|(c, v)| c * v).sum();
    let duals = unit
        .iter()
        .zip(&flipped)
        .map(|(&j, &f)| if f { tab.cost[j] } else { -tab.cost[j] })
        .collect();
    LpOutcome::Optimal(LpSolution { x, value, duals })
}
