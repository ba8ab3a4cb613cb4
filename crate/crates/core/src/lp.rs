//! Dense two-phase simplex over exact rationals with Bland's rule.
//!
//! Sized for the small programs this crate needs (a handful of variables,
//! at most a few hundred constraints). Bland's rule guarantees termination.

use num_traits::{One, Signed, Zero};

use crate::arith::Rat;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: Vec<Rat>,
    pub relation: Relation,
    pub rhs: Rat,
}

impl Constraint {
    pub fn new(coeffs: Vec<Rat>, relation: Relation, rhs: Rat) -> Self {
        Self {
            coeffs,
            relation,
            rhs,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    Optimal { value: Rat, point: Vec<Rat> },
    Infeasible,
    Unbounded,
}

struct Tableau {
    rows: Vec<Vec<Rat>>,
    obj: Vec<Rat>,
    basis: Vec<usize>,
    width: usize,
}

impl Tableau {
    fn rhs(&self) -> usize {
        self.width
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        for x in self.rows[r].iter_mut() {
            *x /= &p;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x -= &f * y;
            }
        }
        if !self.obj[c].is_zero() {
            let f = self.obj[c].clone();
            for (x, y) in self.obj.iter_mut().zip(&pivot_row) {
                *x -= &f * y;
            }
        }
        self.basis[r] = c;
    }

    fn set_objective(&mut self, cost: &[Rat]) {
        let mut obj: Vec<Rat> = cost.iter().map(|c| -c.clone()).collect();
        obj.resize(self.width + 1, Rat::zero());
        for (i, &b) in self.basis.iter().enumerate() {
            if obj[b].is_zero() {
                continue;
            }
            let f = obj[b].clone();
            for (x, y) in obj.iter_mut().zip(&self.rows[i]) {
                *x -= &f * y;
            }
        }
        self.obj = obj;
    }

    /// Runs to optimality over columns `< allowed`. Returns false if unbounded.
    fn optimize(&mut self, allowed: usize) -> bool {
        let rhs = self.rhs();
        loop {
            let Some(enter) = (0..allowed).find(|&j| self.obj[j].is_negative()) else {
                return true;
            };
            let mut leave: Option<(usize, Rat)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[enter].is_positive() {
                    continue;
                }
                let ratio = &row[rhs] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                Some((r, _)) => self.pivot(r, enter),
                None => return false,
            }
        }
    }
}

/// Maximizes `objective · x` subject to `constraints`; variables flagged in
/// `free` are unrestricted in sign, all others are nonnegative.
pub fn maximize(objective: &[Rat], constraints: &[Constraint], free: &[bool]) -> LpOutcome {
    let n = objective.len();
    assert_eq!(free.len(), n, "free-variable mask has wrong length");

    // Column layout: one column per nonnegative variable, two per free one,
    // then one slack per inequality, then one artificial per row.
    let mut col_of = Vec::with_capacity(n);
    let mut structural = 0;
    for &f in free {
        col_of.push(structural);
        structural += if f { 2 } else { 1 };
    }
    let slack_count = constraints.iter().filter(|c| c.relation != Relation::Eq).count();
    let m = constraints.len();
    let real = structural + slack_count;
    let width = real + m;

    let mut rows = Vec::with_capacity(m);
    let mut slack = structural;
    for (i, c) in constraints.iter().enumerate() {
        assert_eq!(c.coeffs.len(), n, "constraint has wrong arity");
        let mut row = vec![Rat::zero(); width + 1];
        for (j, a) in c.coeffs.iter().enumerate() {
            row[col_of[j]] = a.clone();
            if free[j] {
                row[col_of[j] + 1] = -a.clone();
            }
        }
        match c.relation {
            Relation::Le => {
                row[slack] = Rat::one();
                slack += 1;
            }
            Relation::Ge => {
                row[slack] = -Rat::one();
                slack += 1;
            }
            Relation::Eq => {}
        }
        row[width] = c.rhs.clone();
        if c.rhs.is_negative() {
            for x in row.iter_mut() {
                *x = -x.clone();
            }
        }
        row[real + i] = Rat::one();
        rows.push(row);
    }

    let mut t = Tableau {
        rows,
        obj: Vec::new(),
        basis: (real..real + m).collect(),
        width,
    };

    let mut phase1 = vec![Rat::zero(); width];
    for c in phase1.iter_mut().skip(real) {
        *c = -Rat::one();
    }
    t.set_objective(&phase1);
    t.optimize(width);
    if t.obj[width].is_negative() {
        return LpOutcome::Infeasible;
    }

    // Drive zero-level artificials out of the basis; drop redundant rows.
    let mut r = 0;
    while r < t.rows.len() {
        if t.basis[r] >= real {
            match (0..real).find(|&j| !t.rows[r][j].is_zero()) {
                Some(j) => t.pivot(r, j),
                None => {
                    t.rows.remove(r);
                    t.basis.remove(r);
                    continue;
                }
            }
        }
        r += 1;
    }
    for row in t.rows.iter_mut() {
        for x in row.iter_mut().take(width).skip(real) {
            *x = Rat::zero();
        }
    }

    let mut cost = vec![Rat::zero(); width];
    for (j, c) in objective.iter().enumerate() {
        cost[col_of[j]] = c.clone();
        if free[j] {
            cost[col_of[j] + 1] = -c.clone();
        }
    }
    t.set_objective(&cost);
    if !t.optimize(real) {
        return LpOutcome::Unbounded;
    }

    let mut values = vec![Rat::zero(); width];
    for (i, &b) in t.basis.iter().enumerate() {
        values[b] = t.rows[i][width].clone();
    }
    let point = (0..n)
        .map(|j| {
            let v = values[col_of[j]].clone();
            if free[j] {
                v - &values[col_of[j] + 1]
            } else {
                v
            }
        })
        .collect();
    LpOutcome::Optimal {
        value: t.obj[width].clone(),
        point,
    }
}
