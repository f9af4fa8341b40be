//! Exact rational linear programs for the degree-profile edge bound.
//!
//! Nothing in this module touches floating point.

mod programs;
mod simplex;

pub use programs::{
    build_dual, build_primal, certificate_dual_point, primal_point_from_profile, solve_primal_exact,
    weak_duality_bound, DualPoint,
};
pub use simplex::{solve, LpSolution};

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// `num / den` as an exact rational.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Minimize,
    Maximize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Eq,
    Ge,
    Le,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Eq => "=",
            Relation::Ge => ">=",
            Relation::Le => "<=",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    NonNegative,
    Free,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Variable {
    pub label: String,
    pub sign: Sign,
}

/// `Σ coeffs · vars  relation  rhs`; `coeffs` holds variable indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub id: String,
    pub coeffs: Vec<(usize, Rational)>,
    pub relation: Relation,
    pub rhs: Rational,
}

impl Row {
    fn lhs(&self, values: &[Rational]) -> Rational {
        self.coeffs.iter().map(|(v, c)| c * &values[*v]).sum()
    }

    fn coefficient_map(&self) -> BTreeMap<usize, Rational> {
        let mut out: BTreeMap<usize, Rational> = BTreeMap::new();
        for (v, c) in &self.coeffs {
            *out.entry(*v).or_insert_with(Rational::zero) += c;
        }
        out.retain(|_, c| !c.is_zero());
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpInstance {
    pub sense: Sense,
    pub variables: Vec<Variable>,
    pub objective: Vec<Rational>,
    pub rows: Vec<Row>,
}

/// One evaluated constraint. `slack` is `rhs − lhs` for `<=`, `lhs − rhs` for
/// `>=` and `=`; the row holds iff the slack is nonnegative (zero for `=`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowCheck {
    pub id: String,
    pub relation: Relation,
    pub lhs: Rational,
    pub rhs: Rational,
    pub slack: Rational,
    pub satisfied: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibilityReport {
    pub rows: Vec<RowCheck>,
    /// Labels of nonnegative variables assigned a negative value.
    pub sign_violations: Vec<String>,
    pub objective: Rational,
}

impl FeasibilityReport {
    pub fn feasible(&self) -> bool {
        self.sign_violations.is_empty() && self.rows.iter().all(|r| r.satisfied)
    }

    pub fn row(&self, id: &str) -> Option<&RowCheck> {
        self.rows.iter().find(|r| r.id == id)
    }

    /// One line per row: `row-id relation lhs rhs slack`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            out.push_str(&format!("{} {} {} {} {}\n", r.id, r.relation, r.lhs, r.rhs, r.slack));
        }
        out
    }
}

impl LpInstance {
    pub fn variable_index(&self, label: &str) -> Option<usize> {
        self.variables.iter().position(|v| v.label == label)
    }

    pub fn row(&self, id: &str) -> Option<&Row> {
        self.rows.iter().find(|r| r.id == id)
    }

    /// Values ordered like `self.variables`.
    pub fn values_from(&self, point: &BTreeMap<String, Rational>) -> Result<Vec<Rational>> {
        self.variables
            .iter()
            .map(|v| {
                point
                    .get(&v.label)
                    .cloned()
                    .ok_or_else(|| Error::MissingVariable(v.label.clone()))
            })
            .collect()
    }

    pub fn objective_value(&self, values: &[Rational]) -> Rational {
        self.objective.iter().zip(values).map(|(c, x)| c * x).sum()
    }

    /// Evaluates every row and sign restriction exactly at `point`.
    pub fn check_feasible(&self, point: &BTreeMap<String, Rational>) -> Result<FeasibilityReport> {
        let values = self.values_from(point)?;
        Ok(self.check_values(&values))
    }

    pub fn check_values(&self, values: &[Rational]) -> FeasibilityReport {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let lhs = r.lhs(values);
                let (slack, satisfied) = match r.relation {
                    Relation::Le => {
                        let s = &r.rhs - &lhs;
                        let ok = !s.is_negative();
                        (s, ok)
                    }
                    Relation::Ge => {
                        let s = &lhs - &r.rhs;
                        let ok = !s.is_negative();
                        (s, ok)
                    }
                    Relation::Eq => {
                        let s = &lhs - &r.rhs;
                        let ok = s.is_zero();
                        (s, ok)
                    }
                };
                RowCheck {
                    id: r.id.clone(),
                    relation: r.relation,
                    lhs,
                    rhs: r.rhs.clone(),
                    slack,
                    satisfied,
                }
            })
            .collect();
        let sign_violations = self
            .variables
            .iter()
            .zip(values)
            .filter(|(v, x)| v.sign == Sign::NonNegative && x.is_negative())
            .map(|(v, _)| v.label.clone())
            .collect();
        FeasibilityReport {
            rows,
            sign_violations,
            objective: self.objective_value(values),
        }
    }

    /// Mechanical LP dual of a minimization whose rows are `=` or `>=`.
    /// Dual variable `r` carries the id of row `r` (free for `=`, nonnegative
    /// for `>=`); dual row `v` carries the label of primal variable `v`.
    pub fn dualize(&self) -> Result<LpInstance> {
        if self.sense != Sense::Minimize {
            return Err(Error::BadParameters("dualize expects a minimization".into()));
        }
        let variables = self
            .rows
            .iter()
            .map(|r| match r.relation {
                Relation::Eq => Ok(Variable {
                    label: r.id.clone(),
                    sign: Sign::Free,
                }),
                Relation::Ge => Ok(Variable {
                    label: r.id.clone(),
                    sign: Sign::NonNegative,
                }),
                Relation::Le => Err(Error::BadParameters(format!("row {} is <=", r.id))),
            })
            .collect::<Result<Vec<_>>>()?;
        let mut columns: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); self.variables.len()];
        for (ri, r) in self.rows.iter().enumerate() {
            for (v, c) in r.coefficient_map() {
                columns[v].push((ri, c));
            }
        }
        let rows = self
            .variables
            .iter()
            .zip(columns)
            .zip(&self.objective)
            .map(|((v, coeffs), c)| Row {
                id: v.label.clone(),
                coeffs,
                relation: match v.sign {
                    Sign::NonNegative => Relation::Le,
                    Sign::Free => Relation::Eq,
                },
                rhs: c.clone(),
            })
            .collect();
        Ok(LpInstance {
            sense: Sense::Maximize,
            variables,
            objective: self.rows.iter().map(|r| r.rhs.clone()).collect(),
            rows,
        })
    }

    /// Equality up to coefficient order and explicit zeros.
    pub fn same_structure(&self, other: &LpInstance) -> bool {
        self.sense == other.sense
            && self.variables == other.variables
            && self.objective == other.objective
            && self.rows.len() == other.rows.len()
            && self.rows.iter().zip(&other.rows).all(|(a, b)| {
                a.id == b.id && a.relation == b.relation && a.rhs == b.rhs && a.coefficient_map() == b.coefficient_map()
            })
    }
}
