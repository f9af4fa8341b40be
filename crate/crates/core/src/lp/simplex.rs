//! Dense two-phase simplex over exact rationals with Bland's least-index rule.

use num_traits::{One, Signed, Zero};

use super::{LpInstance, Rational, Relation, Sense, Sign};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpSolution {
    /// Optimal objective in the instance's own sense.
    pub objective: Rational,
    /// Optimal values, ordered like `lp.variables`.
    pub values: Vec<Rational>,
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    width: usize,
}

impl Tableau {
    fn rhs(&self, i: usize) -> &Rational {
        &self.rows[i][self.width]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for v in self.rows[r].iter_mut() {
            if !v.is_zero() {
                *v *= &inv;
            }
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Minimizes `cost · x` over columns not in `banned`. Returns false if unbounded.
    fn optimize(&mut self, cost: &[Rational], banned: &[bool]) -> bool {
        loop {
            let mut entering = None;
            for j in 0..self.width {
                if banned[j] || self.basis.contains(&j) {
                    continue;
                }
                let mut reduced = cost[j].clone();
                for (i, &b) in self.basis.iter().enumerate() {
                    if !cost[b].is_zero() && !self.rows[i][j].is_zero() {
                        reduced -= &cost[b] * &self.rows[i][j];
                    }
                }
                if reduced.is_negative() {
                    entering = Some(j);
                    break;
                }
            }
            let Some(c) = entering else { return true };
            let mut leaving: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][c];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / a;
                let better = match &leaving {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li]),
                };
                if better {
                    leaving = Some((i, ratio));
                }
            }
            let Some((r, _)) = leaving else { return false };
            self.pivot(r, c);
        }
    }
}

/// Solves `lp` exactly. Free variables are split into two nonnegative parts.
pub fn solve(lp: &LpInstance) -> Result<LpSolution> {
    // structural columns: (variable, +1 or −1)
    let mut columns: Vec<(usize, bool)> = Vec::new();
    for (i, v) in lp.variables.iter().enumerate() {
        columns.push((i, true));
        if v.sign == Sign::Free {
            columns.push((i, false));
        }
    }
    let structural = columns.len();
    let m = lp.rows.len();
    let slack_count = lp.rows.iter().filter(|r| r.relation != Relation::Eq).count();
    let artificial_start = structural + slack_count;
    let mut dense: Vec<Vec<Rational>> = Vec::with_capacity(m);
    let mut relations = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    for row in &lp.rows {
        let mut coeff = vec![Rational::zero(); lp.variables.len()];
        for (v, c) in &row.coeffs {
            coeff[*v] += c;
        }
        let mut line: Vec<Rational> = columns
            .iter()
            .map(|&(v, plus)| if plus { coeff[v].clone() } else { -coeff[v].clone() })
            .collect();
        let mut relation = row.relation;
        let mut b = row.rhs.clone();
        if b.is_negative() {
            line.iter_mut().for_each(|x| *x = -x.clone());
            b = -b;
            relation = match relation {
                Relation::Le => Relation::Ge,
                Relation::Ge => Relation::Le,
                Relation::Eq => Relation::Eq,
            };
        }
        dense.push(line);
        relations.push(relation);
        rhs.push(b);
    }
    let artificial_count = relations.iter().filter(|&&r| r != Relation::Le).count();
    let width = artificial_start + artificial_count;
    let mut rows = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let (mut next_slack, mut next_art) = (structural, artificial_start);
    for ((line, relation), b) in dense.into_iter().zip(relations).zip(rhs) {
        let mut full = line;
        full.resize(width + 1, Rational::zero());
        full[width] = b;
        match relation {
            Relation::Le => {
                full[next_slack] = Rational::one();
                basis.push(next_slack);
                next_slack += 1;
            }
            Relation::Ge => {
                full[next_slack] = -Rational::one();
                next_slack += 1;
                full[next_art] = Rational::one();
                basis.push(next_art);
                next_art += 1;
            }
            Relation::Eq => {
                full[next_art] = Rational::one();
                basis.push(next_art);
                next_art += 1;
            }
        }
        rows.push(full);
    }
    let mut t = Tableau { rows, basis, width };

    // phase 1
    let phase1: Vec<Rational> = (0..width)
        .map(|j| {
            if j >= artificial_start {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
        .collect();
    let none_banned = vec![false; width];
    t.optimize(&phase1, &none_banned);
    let infeasibility: Rational = t
        .basis
        .iter()
        .enumerate()
        .filter(|(_, &b)| b >= artificial_start)
        .map(|(i, _)| t.rhs(i).clone())
        .sum();
    if infeasibility.is_positive() {
        return Err(Error::Infeasible);
    }
    // drive zero-level artificials out of the basis; drop redundant rows
    let mut i = 0;
    while i < t.rows.len() {
        if t.basis[i] >= artificial_start {
            match (0..artificial_start).find(|&j| !t.rows[i][j].is_zero()) {
                Some(j) => t.pivot(i, j),
                None => {
                    t.rows.remove(i);
                    t.basis.remove(i);
                    continue;
                }
            }
        }
        i += 1;
    }

    // phase 2
    let flip = lp.sense == Sense::Maximize;
    let mut cost = vec![Rational::zero(); width];
    for (j, &(v, plus)) in columns.iter().enumerate() {
        let c = if plus {
            lp.objective[v].clone()
        } else {
            -lp.objective[v].clone()
        };
        cost[j] = if flip { -c } else { c };
    }
    let banned: Vec<bool> = (0..width).map(|j| j >= artificial_start).collect();
    if !t.optimize(&cost, &banned) {
        return Err(Error::Unbounded);
    }

    let mut values = vec![Rational::zero(); lp.variables.len()];
    for (i, &b) in t.basis.iter().enumerate() {
        if b < structural {
            let (v, plus) = columns[b];
            if plus {
                values[v] += t.rhs(i);
            } else {
                values[v] -= t.rhs(i);
            }
        }
    }
    Ok(LpSolution {
        objective: lp.objective_value(&values),
        values,
    })
}

#[cfg(test)]
mod tests {
    use super::super::{int, rat, Row, Variable};
    use super::*;

    fn var(label: &str, sign: Sign) -> Variable {
        Variable {
            label: label.into(),
            sign,
        }
    }

    fn row(coeffs: Vec<(usize, Rational)>, relation: Relation, rhs: Rational) -> Row {
        Row {
            id: String::new(),
            coeffs,
            relation,
            rhs,
        }
    }

    #[test]
    fn small_maximization() {
        // max 3a + 2b s.t. a + b <= 4, a + 3b <= 6, a <= 3
        let lp = LpInstance {
            sense: Sense::Maximize,
            variables: vec![var("a", Sign::NonNegative), var("b", Sign::NonNegative)],
            objective: vec![int(3), int(2)],
            rows: vec![
                row(vec![(0, int(1)), (1, int(1))], Relation::Le, int(4)),
                row(vec![(0, int(1)), (1, int(3))], Relation::Le, int(6)),
                row(vec![(0, int(1))], Relation::Le, int(3)),
            ],
        };
        let s = solve(&lp).unwrap();
        assert_eq!(s.objective, int(11));
        assert_eq!(s.values, vec![int(3), int(1)]);
    }

    #[test]
    fn equality_ge_and_free_variables() {
        // min a - f s.t. a + f = 1/2, a >= 1/3, f free  -> a = 1/3, f = 1/6
        let lp = LpInstance {
            sense: Sense::Minimize,
            variables: vec![var("a", Sign::NonNegative), var("f", Sign::Free)],
            objective: vec![int(1), int(-1)],
            rows: vec![
                row(vec![(0, int(1)), (1, int(1))], Relation::Eq, rat(1, 2)),
                row(vec![(0, int(1))], Relation::Ge, rat(1, 3)),
                row(vec![(1, int(1))], Relation::Ge, int(-5)),
            ],
        };
        // f can grow while a stays feasible? a = 1/2 - f >= 1/3 => f <= 1/6; objective 1/2 - 2f
        let s = solve(&lp).unwrap();
        assert_eq!(s.values, vec![rat(1, 3), rat(1, 6)]);
        assert_eq!(s.objective, rat(1, 6));
    }

    #[test]
    fn infeasible_and_unbounded() {
        let infeasible = LpInstance {
            sense: Sense::Minimize,
            variables: vec![var("a", Sign::NonNegative)],
            objective: vec![int(1)],
            rows: vec![row(vec![(0, int(1))], Relation::Le, int(-1))],
        };
        assert_eq!(solve(&infeasible), Err(Error::Infeasible));
        let unbounded = LpInstance {
            sense: Sense::Maximize,
            variables: vec![var("a", Sign::NonNegative)],
            objective: vec![int(1)],
            rows: vec![row(vec![(0, int(1))], Relation::Ge, int(1))],
        };
        assert_eq!(solve(&unbounded), Err(Error::Unbounded));
    }

    #[test]
    fn redundant_equalities() {
        // a + b = 2 twice; min a
        let lp = LpInstance {
            sense: Sense::Minimize,
            variables: vec![var("a", Sign::NonNegative), var("b", Sign::NonNegative)],
            objective: vec![int(1), int(0)],
            rows: vec![
                row(vec![(0, int(1)), (1, int(1))], Relation::Eq, int(2)),
                row(vec![(0, int(2)), (1, int(2))], Relation::Eq, int(4)),
            ],
        };
        let s = solve(&lp).unwrap();
        assert_eq!(s.objective, int(0));
        assert_eq!(s.values, vec![int(0), int(2)]);
    }
}
