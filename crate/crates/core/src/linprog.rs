//! A small dense two-phase simplex solver for the facet subproblems of
//! the polyhedral extremal-constant enumeration. Problems here have at
//! most a few dozen variables, so a tableau method with Bland's rule is
//! entirely adequate.

use crate::error::{Error, Result};

/// Minimise `c·x` subject to `A x = b`, `x >= 0`.
pub struct StandardLp<'a> {
    pub objective: &'a [f64],
    pub constraints: &'a [Vec<f64>],
    pub rhs: &'a [f64],
}

#[derive(Clone, Debug)]
pub struct LpSolution {
    pub objective: f64,
    pub x: Vec<f64>,
}

const EPS: f64 = 1e-11;

struct Tableau {
    rows: usize,
    cols: usize,
    /// rows × (cols + 1); last column is the rhs.
    data: Vec<Vec<f64>>,
    /// cost row, length cols + 1.
    cost: Vec<f64>,
    basis: Vec<usize>,
}

impl Tableau {
    fn pivot(&mut self, row: usize, col: usize) {
        let scale = self.data[row][col];
        for v in self.data[row].iter_mut() {
            *v /= scale;
        }
        for r in 0..self.rows {
            if r != row {
                let factor = self.data[r][col];
                if factor != 0.0 {
                    for k in 0..=self.cols {
                        self.data[r][k] -= factor * self.data[row][k];
                    }
                }
            }
        }
        let factor = self.cost[col];
        if factor != 0.0 {
            for k in 0..=self.cols {
                self.cost[k] -= factor * self.data[row][k];
            }
        }
        self.basis[row] = col;
    }

    /// Bland's rule: entering = lowest-index column with negative reduced
    /// cost, leaving = lowest-index eligible basis row. Terminates on all
    /// inputs (no cycling).
    fn run(&mut self) -> Result<()> {
        for _ in 0..20_000 {
            let Some(col) = (0..self.cols).find(|&j| self.cost[j] < -EPS) else {
                return Ok(());
            };
            let mut best: Option<(usize, f64)> = None;
            for r in 0..self.rows {
                let a = self.data[r][col];
                if a > EPS {
                    let ratio = self.data[r][self.cols] / a;
                    match best {
                        Some((br, bratio)) => {
                            if ratio < bratio - EPS
                                || (ratio < bratio + EPS && self.basis[r] < self.basis[br])
                            {
                                best = Some((r, ratio));
                            }
                        }
                        None => best = Some((r, ratio)),
                    }
                }
            }
            let Some((row, _)) = best else {
                return Err(Error::Infeasible { reason: "unbounded linear program".into() });
            };
            self.pivot(row, col);
        }
        Err(Error::Infeasible { reason: "simplex iteration limit".into() })
    }
}

pub fn solve_standard(lp: &StandardLp) -> Result<LpSolution> {
    let m = lp.constraints.len();
    let n = lp.objective.len();
    for row in lp.constraints {
        if row.len() != n {
            return Err(Error::LengthMismatch { expected: n, got: row.len() });
        }
    }
    if lp.rhs.len() != m {
        return Err(Error::LengthMismatch { expected: m, got: lp.rhs.len() });
    }

    // Phase 1 with one artificial per row; flip rows to keep rhs >= 0.
    let cols = n + m;
    let mut data: Vec<Vec<f64>> = Vec::with_capacity(m);
    for r in 0..m {
        let sign = if lp.rhs[r] < 0.0 { -1.0 } else { 1.0 };
        let mut row = vec![0.0; cols + 1];
        for j in 0..n {
            row[j] = sign * lp.constraints[r][j];
        }
        row[n + r] = 1.0;
        row[cols] = sign * lp.rhs[r];
        data.push(row);
    }
    let mut cost = vec![0.0; cols + 1];
    for j in n..cols {
        cost[j] = 1.0;
    }
    let mut tab = Tableau { rows: m, cols, data, cost, basis: (n..cols).collect() };
    // Price out the artificial basis.
    for r in 0..m {
        for k in 0..=cols {
            tab.cost[k] -= tab.data[r][k];
        }
    }
    tab.run()?;
    if -tab.cost[cols] > 1e-7 {
        return Err(Error::Infeasible { reason: "no feasible point".into() });
    }
    // Drive lingering artificials out of the basis where possible.
    for r in 0..m {
        if tab.basis[r] >= n {
            if let Some(col) = (0..n).find(|&j| tab.data[r][j].abs() > EPS) {
                tab.pivot(r, col);
            }
        }
    }

    // Phase 2 on the original columns.
    let rows: Vec<Vec<f64>> = tab
        .data
        .iter()
        .map(|row| {
            let mut out = row[..n].to_vec();
            out.push(row[cols]);
            out
        })
        .collect();
    let mut cost = vec![0.0; n + 1];
    cost[..n].copy_from_slice(lp.objective);
    let mut tab2 = Tableau { rows: m, cols: n, data: rows, cost, basis: tab.basis.clone() };
    for r in 0..m {
        let j = tab2.basis[r];
        if j < n {
            let factor = tab2.cost[j];
            if factor != 0.0 {
                for k in 0..=n {
                    tab2.cost[k] -= factor * tab2.data[r][k];
                }
            }
        }
    }
    tab2.run()?;

    let mut x = vec![0.0; n];
    for r in 0..m {
        if tab2.basis[r] < n {
            x[tab2.basis[r]] = tab2.data[r][n];
        }
    }
    let objective = lp.objective.iter().zip(&x).map(|(c, v)| c * v).sum();
    Ok(LpSolution { objective, x })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_minimum() {
        // min x0 + 2 x1  s.t. x0 + x1 = 1, x >= 0 → x = (1, 0), value 1.
        let sol = solve_standard(&StandardLp {
            objective: &[1.0, 2.0],
            constraints: &[vec![1.0, 1.0]],
            rhs: &[1.0],
        })
        .unwrap();
        assert!((sol.objective - 1.0).abs() < 1e-9);
        assert!((sol.x[0] - 1.0).abs() < 1e-9);
    }

    #[test]
    fn equality_pair() {
        // min x0 + x1 + x2 s.t. x0 + x1 = 2, x1 + x2 = 1 → (1, 1, 0), value 2.
        let sol = solve_standard(&StandardLp {
            objective: &[1.0, 1.0, 1.0],
            constraints: &[vec![1.0, 1.0, 0.0], vec![0.0, 1.0, 1.0]],
            rhs: &[2.0, 1.0],
        })
        .unwrap();
        assert!((sol.objective - 2.0).abs() < 1e-9);
    }

    #[test]
    fn infeasible_detected() {
        // x0 = 1 and x0 = 2 cannot both hold.
        let out = solve_standard(&StandardLp {
            objective: &[1.0],
            constraints: &[vec![1.0], vec![1.0]],
            rhs: &[1.0, 2.0],
        });
        assert!(out.is_err());
    }

    #[test]
    fn negative_rhs_handled() {
        // min x0 s.t. -x0 + x1 = -3 → x0 = 3 when x1 = 0.
        let sol = solve_standard(&StandardLp {
            objective: &[1.0, 0.0],
            constraints: &[vec![-1.0, 1.0]],
            rhs: &[-3.0],
        })
        .unwrap();
        assert!((sol.objective - 3.0).abs() < 1e-9);
    }

    #[test]
    fn optimum_beats_random_feasible_points() {
        // min 3x0 + x1 + 4x2 s.t. x0+x1+x2 = 1, x0 + 2x2 = 0.5
        let objective = [3.0, 1.0, 4.0];
        let cons = [vec![1.0, 1.0, 1.0], vec![1.0, 0.0, 2.0]];
        let rhs = [1.0, 0.5];
        let sol = solve_standard(&StandardLp {
            objective: &objective,
            constraints: &cons,
            rhs: &rhs,
        })
        .unwrap();
        // Sample the 1-parameter feasible family x2 = t.
        for k in 0..=100 {
            let t = 0.25 * k as f64 / 100.0;
            let x0 = 0.5 - 2.0 * t;
            let x1 = 1.0 - x0 - t;
            if x0 >= 0.0 && x1 >= 0.0 {
                let value = 3.0 * x0 + x1 + 4.0 * t;
                assert!(sol.objective <= value + 1e-9);
            }
        }
    }
}
