//! Polynomial optimization for the inertial- and ratio-type bounds, on top
//! of a small dense two-phase simplex.
//!
//! The inertial optimizer replaces the usual big-M mixed-integer program by
//! plain enumeration: the binary vector `b` selects which distinct
//! eigenvalues may stay non-negative under `p`, and subsets are visited in
//! increasing `m·b` (multiplicity) order, so the first feasible subset is
//! the optimum. With at most a dozen distinct eigenvalues on the target
//! graphs the subset count is trivial, and the big-M conditioning problems
//! disappear entirely.

use crate::bounds::{self, BoundResult, NaReason};
use crate::spectra;
use crate::{Error, Graph, Result};

/// Strict-inequality closure used by both formulations.
pub const DEFAULT_EPSILON: f64 = 1e-6;

/// Simplex pivot tolerance.
const PIVOT_TOL: f64 = 1e-9;

/// Cap on LP feasibility solves per optimization call.
pub const DEFAULT_ENUM_CAP: usize = 1 << 20;

/// Real polynomial `a_0 + a_1 x + … + a_t x^t`.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<f64>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<f64>) -> Self {
        assert!(!coeffs.is_empty());
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: vec![0.0] }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> f64 {
        self.coeffs.get(i).copied().unwrap_or(0.0)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }
}

// ---------------------------------------------------------------------------
// LP core
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

/// Maximize `objective · x` over free variables subject to the rows.
#[derive(Clone, Debug)]
pub struct LpProblem {
    pub num_vars: usize,
    pub objective: Vec<f64>,
    pub rows: Vec<(Vec<f64>, Relation, f64)>,
}

#[derive(Clone, Debug)]
pub enum LpOutcome {
    Optimal { x: Vec<f64>, objective: f64 },
    Infeasible,
    Unbounded,
}

enum RunStatus {
    Optimal,
    Unbounded,
}

struct Tableau {
    m: usize,
    n: usize,
    // (m + 1) x (n + 1); last row is the objective, last column the rhs.
    a: Vec<Vec<f64>>,
    basis: Vec<usize>,
}

impl Tableau {
    fn set_costs(&mut self, costs: &[f64]) {
        let (m, n) = (self.m, self.n);
        for j in 0..n {
            self.a[m][j] = -costs[j];
        }
        self.a[m][n] = 0.0;
        for i in 0..m {
            let cb = costs[self.basis[i]];
            if cb != 0.0 {
                for j in 0..=n {
                    self.a[m][j] += cb * self.a[i][j];
                }
            }
        }
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let n = self.n;
        let inv = 1.0 / self.a[row][col];
        for j in 0..=n {
            self.a[row][j] *= inv;
        }
        for i in 0..=self.m {
            if i == row {
                continue;
            }
            let f = self.a[i][col];
            if f != 0.0 {
                for j in 0..=n {
                    self.a[i][j] -= f * self.a[row][j];
                }
            }
        }
        self.basis[row] = col;
    }

    /// Bland's rule throughout: smallest improving column enters, ties in
    /// the ratio test break on the smallest basis variable.
    fn run(&mut self, banned: &[bool]) -> Result<RunStatus> {
        let max_iters = 20_000 + 200 * (self.m + self.n);
        for _ in 0..max_iters {
            let Some(enter) = (0..self.n).find(|&j| !banned[j] && self.a[self.m][j] < -PIVOT_TOL)
            else {
                return Ok(RunStatus::Optimal);
            };
            let mut leave: Option<usize> = None;
            let mut best = f64::INFINITY;
            for i in 0..self.m {
                let coef = self.a[i][enter];
                if coef > PIVOT_TOL {
                    let ratio = self.a[i][self.n] / coef;
                    let better = ratio < best - PIVOT_TOL
                        || (ratio < best + PIVOT_TOL
                            && leave.is_some_and(|l| self.basis[i] < self.basis[l]));
                    if better {
                        best = ratio;
                        leave = Some(i);
                    }
                }
            }
            let Some(leave) = leave else {
                return Ok(RunStatus::Unbounded);
            };
            self.pivot(leave, enter);
        }
        Err(Error::NoConvergence)
    }
}

/// Dense two-phase simplex over free variables (split internally).
pub fn solve_lp(p: &LpProblem) -> Result<LpOutcome> {
    if p.objective.len() != p.num_vars
        || p.rows.iter().any(|(coef, _, _)| coef.len() != p.num_vars)
    {
        return Err(Error::LpDimension);
    }
    let nf = p.num_vars;
    let split = 2 * nf;
    let m = p.rows.len();

    // Column layout: y+ / y- pairs, then one slack or surplus per
    // inequality, then artificials.
    let num_slack = p.rows.iter().filter(|(_, r, _)| *r != Relation::Eq).count();
    let mut n_art = 0;
    let mut cols = split + num_slack;
    let mut rows_data: Vec<(Vec<f64>, f64, Option<usize>, Option<(usize, f64)>)> = Vec::new();
    // (free coefficients, rhs, artificial col, slack (col, sign))
    let mut slack_idx = split;
    for (coef, rel, rhs) in &p.rows {
        let flip = *rhs < 0.0;
        let sgn = if flip { -1.0 } else { 1.0 };
        let coef: Vec<f64> = coef.iter().map(|c| c * sgn).collect();
        let rhs = rhs * sgn;
        let rel = match (rel, flip) {
            (Relation::Eq, _) => Relation::Eq,
            (Relation::Le, false) | (Relation::Ge, true) => Relation::Le,
            (Relation::Le, true) | (Relation::Ge, false) => Relation::Ge,
        };
        let slack = match rel {
            Relation::Le => {
                let s = (slack_idx, 1.0);
                slack_idx += 1;
                Some(s)
            }
            Relation::Ge => {
                let s = (slack_idx, -1.0);
                slack_idx += 1;
                Some(s)
            }
            Relation::Eq => None,
        };
        let art = match rel {
            Relation::Le => None,
            _ => {
                n_art += 1;
                Some(cols + n_art - 1)
            }
        };
        rows_data.push((coef, rhs, art, slack));
    }
    cols += n_art;

    let mut tab = Tableau {
        m,
        n: cols,
        a: vec![vec![0.0; cols + 1]; m + 1],
        basis: vec![0; m],
    };
    for (i, (coef, rhs, art, slack)) in rows_data.iter().enumerate() {
        for (k, &c) in coef.iter().enumerate() {
            tab.a[i][2 * k] = c;
            tab.a[i][2 * k + 1] = -c;
        }
        if let Some((col, sign)) = slack {
            tab.a[i][*col] = *sign;
        }
        if let Some(col) = art {
            tab.a[i][*col] = 1.0;
            tab.basis[i] = *col;
        } else {
            tab.basis[i] = slack.unwrap().0;
        }
        tab.a[i][cols] = *rhs;
    }

    let banned_none = vec![false; cols];
    if n_art > 0 {
        let mut phase1 = vec![0.0; cols];
        for c in (cols - n_art)..cols {
            phase1[c] = -1.0;
        }
        tab.set_costs(&phase1);
        match tab.run(&banned_none)? {
            RunStatus::Unbounded => return Err(Error::NoConvergence),
            RunStatus::Optimal => {}
        }
        if tab.a[m][cols] < -1e-7 {
            return Ok(LpOutcome::Infeasible);
        }
        // Pivot out basic artificials; drop redundant rows.
        let art_start = cols - n_art;
        let mut i = 0;
        while i < tab.m {
            if tab.basis[i] >= art_start {
                if let Some(j) = (0..art_start).find(|&j| tab.a[i][j].abs() > PIVOT_TOL) {
                    tab.pivot(i, j);
                } else {
                    tab.a.remove(i);
                    tab.basis.remove(i);
                    tab.m -= 1;
                    continue;
                }
            }
            i += 1;
        }
    }

    let mut banned = vec![false; cols];
    for c in (cols - n_art)..cols {
        banned[c] = true;
    }
    let mut phase2 = vec![0.0; cols];
    for k in 0..nf {
        phase2[2 * k] = p.objective[k];
        phase2[2 * k + 1] = -p.objective[k];
    }
    tab.set_costs(&phase2);
    match tab.run(&banned)? {
        RunStatus::Unbounded => return Ok(LpOutcome::Unbounded),
        RunStatus::Optimal => {}
    }

    let m_now = tab.m;
    let mut y = vec![0.0; cols];
    for i in 0..m_now {
        y[tab.basis[i]] = tab.a[i][cols];
    }
    let x: Vec<f64> = (0..nf).map(|k| y[2 * k] - y[2 * k + 1]).collect();
    Ok(LpOutcome::Optimal { x, objective: tab.a[m_now][cols] })
}

/// Check an LP solution against the rows within `tol` (used by tests and
/// debug assertions).
pub fn lp_feasible(p: &LpProblem, x: &[f64], tol: f64) -> bool {
    p.rows.iter().all(|(coef, rel, rhs)| {
        let lhs: f64 = coef.iter().zip(x).map(|(c, v)| c * v).sum();
        match rel {
            Relation::Le => lhs <= rhs + tol,
            Relation::Ge => lhs >= rhs - tol,
            Relation::Eq => (lhs - rhs).abs() <= tol,
        }
    })
}

// ---------------------------------------------------------------------------
// Inertial-type optimization (enumerated MILP)
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug)]
pub struct OptimizeOptions {
    pub epsilon: f64,
    pub enum_cap: usize,
}

impl Default for OptimizeOptions {
    fn default() -> Self {
        OptimizeOptions { epsilon: DEFAULT_EPSILON, enum_cap: DEFAULT_ENUM_CAP }
    }
}

/// Distinct diagonal profiles (diag(A^0), …, diag(A^deg)) across vertices,
/// in first-seen order. One representative per profile is enough: vertices
/// with identical profiles yield identical subproblems (for walk-regular
/// graphs this collapses to a single vertex).
fn diagonal_profiles(g: &Graph, degree: usize) -> Vec<Vec<f64>> {
    let a = spectra::adjacency_matrix(g);
    let n = g.n();
    let mut per_vertex: Vec<Vec<f64>> = vec![vec![1.0]; n];
    let mut pow: Option<spectra::SymMatrix> = None;
    for _ in 1..=degree {
        pow = Some(match pow {
            None => a.clone(),
            Some(prev) => prev.matmul(&a),
        });
        let m = pow.as_ref().unwrap();
        for (v, prof) in per_vertex.iter_mut().enumerate() {
            prof.push(m.get(v, v));
        }
    }
    let mut unique: Vec<Vec<f64>> = Vec::new();
    for prof in per_vertex {
        let close = |a: &Vec<f64>, b: &Vec<f64>| {
            a.iter().zip(b).all(|(x, y)| (x - y).abs() < 1e-9)
        };
        if !unique.iter().any(|u| close(u, &prof)) {
            unique.push(prof);
        }
    }
    unique
}

/// Subsets of `{0..=d}` sorted by total multiplicity, ties lexicographic on
/// the selection vector `b_0 … b_d`.
fn subsets_by_weight(mults: &[usize]) -> Vec<u32> {
    let d1 = mults.len();
    let mut subsets: Vec<u32> = (0..(1u32 << d1)).collect();
    let weight = |mask: u32| -> usize {
        (0..d1).filter(|&j| mask >> j & 1 == 1).map(|j| mults[j]).sum()
    };
    let lex = |mask: u32| -> u32 {
        (0..d1).fold(0, |acc, j| acc << 1 | (mask >> j & 1))
    };
    subsets.sort_by_key(|&mask| (weight(mask), lex(mask)));
    subsets
}

/// Optimize the inertial-type bound on `eq_t` (polynomial degree t−1).
///
/// For each base profile `u` the binary vector `b` is enumerated in
/// increasing `m·b` order; `b_j = 0` forces `p(θ_j) ≤ −ε` while the
/// diagonal rows pin `w(p) = 0` at `u`. The first feasible subset is the
/// per-`u` optimum, and the overall bound is the minimum over `u`,
/// re-evaluated through [`bounds::inertial_bound`] so the returned pair is
/// internally consistent. Negating `p` swaps the two branches of the
/// inertial minimum, but `a ↦ −a` maps the feasibility systems onto each
/// other bijectively, so a second negated run could never improve the
/// optimum and is omitted.
pub fn optimize_inertial(
    g: &Graph,
    t: u32,
    opts: &OptimizeOptions,
) -> Result<(Polynomial, BoundResult)> {
    if t < 2 {
        return Err(Error::InvalidParams("inertial optimization needs t >= 2".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let degree = (t - 1) as usize;
    let nvars = degree + 1;
    let spectrum = spectra::eigenvalues(&spectra::adjacency_matrix(g))?;
    let ds = spectra::distinct(&spectrum);
    let thetas = ds.thetas();
    let mults = ds.mults();
    let profiles = diagonal_profiles(g, degree);
    let subsets = subsets_by_weight(mults);

    let theta_pow = |j: usize| -> Vec<f64> {
        (0..nvars).map(|i| thetas[j].powi(i as i32)).collect()
    };

    let mut best: Option<(usize, Polynomial)> = None;
    let mut solves = 0usize;
    for u_prof in &profiles {
        for &mask in &subsets {
            let weight: usize =
                (0..mults.len()).filter(|&j| mask >> j & 1 == 1).map(|j| mults[j]).sum();
            if let Some((bv, _)) = &best {
                if weight >= *bv {
                    break; // later subsets only get heavier
                }
            }
            solves += 1;
            if solves > opts.enum_cap {
                return Err(Error::InvalidParams(
                    "enumeration cap exceeded in inertial optimization".into(),
                ));
            }
            let mut rows: Vec<(Vec<f64>, Relation, f64)> = Vec::new();
            for prof in &profiles {
                rows.push((prof.clone(), Relation::Ge, 0.0));
            }
            rows.push((u_prof.clone(), Relation::Eq, 0.0));
            for j in 0..mults.len() {
                if mask >> j & 1 == 0 {
                    rows.push((theta_pow(j), Relation::Le, -opts.epsilon));
                }
            }
            let lp = LpProblem { num_vars: nvars, objective: vec![0.0; nvars], rows };
            match solve_lp(&lp)? {
                LpOutcome::Optimal { x, .. } => {
                    best = Some((weight, Polynomial::new(x)));
                    break; // first feasible subset is optimal for this u
                }
                LpOutcome::Infeasible => continue,
                LpOutcome::Unbounded => unreachable!("feasibility problem"),
            }
        }
    }

    // b = all-ones with p = 0 is always feasible, so `best` is set.
    let (_, poly) = best.expect("all-ones subset is feasible");
    let bound = bounds::inertial_bound(g, t, &poly)?;
    Ok((poly, bound))
}

/// Optimize the ratio-type bound on `eq_t` for regular connected graphs
/// (polynomial degree t−1). For every base profile and every candidate
/// minimizer θ_l the LP maximizes `p(θ_0) − p(θ_l)` under the
/// normalization `W(p) − p(θ_l) = 1`; the bound candidate is
/// `n / objective` and the best (u, l) cell wins.
pub fn optimize_ratio(
    g: &Graph,
    t: u32,
    opts: &OptimizeOptions,
) -> Result<(Polynomial, BoundResult)> {
    if t < 2 {
        return Err(Error::InvalidParams("ratio optimization needs t >= 2".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.regularity().is_none() {
        return Ok((Polynomial::zero(), BoundResult::NotApplicable(NaReason::GraphNotRegular)));
    }
    let degree = (t - 1) as usize;
    let nvars = degree + 1;
    let spectrum = spectra::eigenvalues(&spectra::adjacency_matrix(g))?;
    let ds = spectra::distinct(&spectrum);
    let thetas = ds.thetas();
    let d = ds.d();
    if d == 0 {
        return Ok((Polynomial::zero(), BoundResult::NotApplicable(NaReason::DegenerateDenominator)));
    }
    let profiles = diagonal_profiles(g, degree);
    let theta_pow = |j: usize| -> Vec<f64> {
        (0..nvars).map(|i| thetas[j].powi(i as i32)).collect()
    };

    let mut best: Option<(f64, Polynomial)> = None;
    for u_prof in &profiles {
        for l in 1..=d {
            let tl = theta_pow(l);
            let t0 = theta_pow(0);
            let mut rows: Vec<(Vec<f64>, Relation, f64)> = Vec::new();
            for prof in &profiles {
                let coef: Vec<f64> =
                    prof.iter().zip(u_prof).map(|(pv, pu)| pv - pu).collect();
                rows.push((coef, Relation::Le, 0.0));
            }
            let norm: Vec<f64> = u_prof.iter().zip(&tl).map(|(pu, tl)| pu - tl).collect();
            rows.push((norm, Relation::Eq, 1.0));
            for j in 1..=d {
                let tj = theta_pow(j);
                let dom: Vec<f64> = t0.iter().zip(&tj).map(|(a, b)| a - b).collect();
                rows.push((dom, Relation::Ge, opts.epsilon));
                let above: Vec<f64> = tj.iter().zip(&tl).map(|(a, b)| a - b).collect();
                rows.push((above, Relation::Ge, 0.0));
            }
            let objective: Vec<f64> = t0.iter().zip(&tl).map(|(a, b)| a - b).collect();
            let lp = LpProblem { num_vars: nvars, objective, rows };
            match solve_lp(&lp)? {
                LpOutcome::Optimal { x, objective } if objective > PIVOT_TOL => {
                    let candidate = g.n() as f64 / objective;
                    let better = match &best {
                        None => true,
                        Some((b, _)) => candidate < *b - 1e-12,
                    };
                    if better {
                        best = Some((candidate, Polynomial::new(x)));
                    }
                }
                _ => continue,
            }
        }
    }

    match best {
        None => Ok((Polynomial::zero(), BoundResult::NotApplicable(NaReason::DegenerateDenominator))),
        Some((_, poly)) => {
            let bound = bounds::ratio_bound(g, t, &poly)?;
            Ok((poly, bound))
        }
    }
}
