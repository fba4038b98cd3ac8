//! Two-phase tableau simplex with Bland's rule, generic over [`Scalar`].
//!
//! Variables are nonnegative. Entering and leaving choices always take the
//! lowest eligible index, so runs are deterministic and cannot cycle.

use std::fmt;

use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Le,
    Eq,
    Ge,
}

impl fmt::Display for Sense {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sense::Le => "<=",
            Sense::Eq => "=",
            Sense::Ge => ">=",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Constraint<T> {
    pub coeffs: Vec<T>,
    pub sense: Sense,
    pub rhs: T,
}

/// `max` (or `min`) `objective · x` subject to the constraints and `x ≥ 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearProgram<T> {
    pub objective: Vec<T>,
    pub maximize: bool,
    pub constraints: Vec<Constraint<T>>,
}

impl<T: Scalar> LinearProgram<T> {
    pub fn maximize(objective: Vec<T>) -> Self {
        LinearProgram {
            objective,
            maximize: true,
            constraints: Vec::new(),
        }
    }

    pub fn minimize(objective: Vec<T>) -> Self {
        LinearProgram {
            objective,
            maximize: false,
            constraints: Vec::new(),
        }
    }

    pub fn constrain(&mut self, coeffs: Vec<T>, sense: Sense, rhs: T) -> &mut Self {
        self.constraints.push(Constraint { coeffs, sense, rhs });
        self
    }

    pub fn variables(&self) -> usize {
        self.objective.len()
    }

    /// Whether `x` satisfies every constraint and sign condition (within the
    /// scalar tolerance).
    pub fn is_feasible(&self, x: &[T]) -> bool {
        x.len() == self.variables()
            && x.iter().all(|v| !v.is_strictly_negative())
            && self.constraints.iter().all(|c| {
                let lhs = dot(&c.coeffs, x);
                let gap = lhs - c.rhs.clone();
                match c.sense {
                    Sense::Le => !gap.is_strictly_positive(),
                    Sense::Ge => !gap.is_strictly_negative(),
                    Sense::Eq => gap.is_negligible(),
                }
            })
    }

    pub fn value_at(&self, x: &[T]) -> T {
        dot(&self.objective, x)
    }
}

fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    a.iter()
        .zip(b)
        .fold(T::zero(), |acc, (p, q)| acc + p.clone() * q.clone())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Optimal,
    Infeasible,
    Unbounded,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Optimal => "optimal",
            Status::Infeasible => "infeasible",
            Status::Unbounded => "unbounded",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LPResult<T> {
    pub status: Status,
    /// Objective value at the optimum.
    pub value: Option<T>,
    /// Optimal point, empty unless optimal.
    pub solution: Vec<T>,
    /// One line per pivot.
    pub log: Vec<String>,
}

impl<T> LPResult<T> {
    pub fn is_optimal(&self) -> bool {
        self.status == Status::Optimal
    }
}

struct Tableau<T> {
    rows: Vec<Vec<T>>,
    rhs: Vec<T>,
    basis: Vec<usize>,
    names: Vec<String>,
    log: Vec<String>,
}

enum Outcome {
    Optimal,
    Unbounded,
}

impl<T: Scalar> Tableau<T> {
    fn pivot(&mut self, r: usize, e: usize, cost: &mut [T], value: &mut T, phase: u8) {
        let p = self.rows[r][e].clone();
        for v in self.rows[r].iter_mut() {
            *v = v.clone() / p.clone();
        }
        self.rhs[r] = self.rhs[r].clone() / p;
        let (pivot_row, pivot_rhs) = (self.rows[r].clone(), self.rhs[r].clone());
        for i in 0..self.rows.len() {
            if i == r {
                continue;
            }
            let f = self.rows[i][e].clone();
            if f.is_zero() {
                continue;
            }
            for (v, q) in self.rows[i].iter_mut().zip(&pivot_row) {
                *v = v.clone() - f.clone() * q.clone();
            }
            self.rhs[i] = self.rhs[i].clone() - f * pivot_rhs.clone();
        }
        let f = cost[e].clone();
        if !f.is_zero() {
            for (v, q) in cost.iter_mut().zip(&pivot_row) {
                *v = v.clone() - f.clone() * q.clone();
            }
            *value = value.clone() - f * pivot_rhs;
        }
        self.log.push(format!(
            "phase {phase}: {} enters, {} leaves, objective {}",
            self.names[e],
            self.names[self.basis[r]],
            -value.clone()
        ));
        self.basis[r] = e;
    }

    /// Maximizes with reduced costs `cost` over columns `0..active`.
    fn run(&mut self, cost: &mut [T], value: &mut T, active: usize, phase: u8) -> Outcome {
        loop {
            let Some(e) = (0..active).find(|&j| cost[j].is_strictly_positive()) else {
                return Outcome::Optimal;
            };
            let mut best: Option<(usize, T)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][e];
                if !a.is_strictly_positive() {
                    continue;
                }
                let ratio = self.rhs[i].clone() / a.clone();
                let better = match &best {
                    None => true,
                    Some((bi, br)) => {
                        ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi])
                    }
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            let Some((r, _)) = best else {
                return Outcome::Unbounded;
            };
            self.pivot(r, e, cost, value, phase);
        }
    }

    fn reduced_costs(&self, c: &[T]) -> (Vec<T>, T) {
        let mut cost = c.to_vec();
        let mut value = T::zero();
        for (i, &b) in self.basis.iter().enumerate() {
            let cb = c[b].clone();
            if cb.is_zero() {
                continue;
            }
            for (v, q) in cost.iter_mut().zip(&self.rows[i]) {
                *v = v.clone() - cb.clone() * q.clone();
            }
            value = value - cb * self.rhs[i].clone();
        }
        (cost, value)
    }
}

/// Solves `lp` exactly (for exact scalars) by the two-phase method.
pub fn simplex_solve<T: Scalar>(lp: &LinearProgram<T>) -> LPResult<T> {
    let nv = lp.variables();
    let m = lp.constraints.len();
    let slacks = lp
        .constraints
        .iter()
        .filter(|c| c.sense != Sense::Eq)
        .count();
    let cols = nv + slacks + m;
    let art0 = nv + slacks;
    let mut names: Vec<String> = (0..nv).map(|j| format!("x{j}")).collect();
    names.extend((0..slacks).map(|j| format!("s{j}")));
    names.extend((0..m).map(|j| format!("a{j}")));

    let mut rows = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let mut slack = nv;
    for (i, c) in lp.constraints.iter().enumerate() {
        let mut row = vec![T::zero(); cols];
        for (j, v) in c.coeffs.iter().enumerate().take(nv) {
            row[j] = v.clone();
        }
        if c.sense != Sense::Eq {
            row[slack] = if c.sense == Sense::Le {
                T::one()
            } else {
                -T::one()
            };
            slack += 1;
        }
        let mut b = c.rhs.clone();
        if b.is_strictly_negative() {
            row.iter_mut().for_each(|v| *v = -v.clone());
            b = -b;
        }
        row[art0 + i] = T::one();
        rows.push(row);
        rhs.push(b);
        basis.push(art0 + i);
    }
    let mut t = Tableau {
        rows,
        rhs,
        basis,
        names,
        log: Vec::new(),
    };

    // phase 1: maximize minus the sum of artificials
    let mut c1 = vec![T::zero(); cols];
    c1[art0..].iter_mut().for_each(|v| *v = -T::one());
    let (mut cost, mut value) = t.reduced_costs(&c1);
    t.run(&mut cost, &mut value, cols, 1);
    if (-value).is_strictly_negative() {
        return LPResult {
            status: Status::Infeasible,
            value: None,
            solution: Vec::new(),
            log: t.log,
        };
    }
    // drive remaining artificials out of the basis, dropping redundant rows
    let mut i = 0;
    while i < t.rows.len() {
        if t.basis[i] >= art0 {
            match (0..art0).find(|&j| !t.rows[i][j].is_negligible()) {
                Some(e) => {
                    let mut dummy = vec![T::zero(); cols];
                    let mut dv = T::zero();
                    t.pivot(i, e, &mut dummy, &mut dv, 1);
                }
                None => {
                    t.log.push(format!("phase 1: redundant row {i} dropped"));
                    t.rows.remove(i);
                    t.rhs.remove(i);
                    t.basis.remove(i);
                    continue;
                }
            }
        }
        i += 1;
    }

    let mut c2 = vec![T::zero(); cols];
    for (j, v) in lp.objective.iter().enumerate() {
        c2[j] = if lp.maximize { v.clone() } else { -v.clone() };
    }
    let (mut cost, mut value) = t.reduced_costs(&c2);
    if let Outcome::Unbounded = t.run(&mut cost, &mut value, art0, 2) {
        return LPResult {
            status: Status::Unbounded,
            value: None,
            solution: Vec::new(),
            log: t.log,
        };
    }
    let mut x = vec![T::zero(); nv];
    for (i, &b) in t.basis.iter().enumerate() {
        if b < nv {
            x[b] = t.rhs[i].clone();
        }
    }
    let opt = lp.value_at(&x);
    LPResult {
        status: Status::Optimal,
        value: Some(opt),
        solution: x,
        log: t.log,
    }
}
