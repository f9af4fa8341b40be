use std::collections::BTreeMap;

use num_traits::Zero;

use super::{int, rat, solve, LpInstance, Rational, Relation, Row, Sense, Sign, Variable};
use crate::error::{Error, Result};
use crate::graph::DegreeProfile;

fn check_n(n: usize) -> Result<()> {
    if n < 8 {
        return Err(Error::NTooSmall(n));
    }
    Ok(())
}

fn n_label(i: usize) -> String {
    format!("n_{i}")
}

fn n4_label(j: usize) -> String {
    format!("n_4^{j}")
}

const N46_PRIME: &str = "n_4^6'";
const N46_DOUBLEPRIME: &str = "n_4^6''";

/// Variable order: `n_4 … n_{n−1}`, `n_4^5 … n_4^{n−1}`, `n_4^6'`, `n_4^6''`.
fn primal_labels(n: usize) -> Vec<String> {
    let mut labels: Vec<String> = (4..n).map(n_label).collect();
    labels.extend((5..n).map(n4_label));
    labels.push(N46_PRIME.into());
    labels.push(N46_DOUBLEPRIME.into());
    labels
}

struct Builder {
    index: BTreeMap<String, usize>,
    rows: Vec<Row>,
}

impl Builder {
    fn new(labels: &[String]) -> Self {
        let index = labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        Builder {
            index,
            rows: Vec::new(),
        }
    }

    fn row(&mut self, id: impl Into<String>, terms: Vec<(Rational, String)>, relation: Relation, rhs: Rational) {
        let coeffs = terms.into_iter().map(|(c, label)| (self.index[&label], c)).collect();
        self.rows.push(Row {
            id: id.into(),
            coeffs,
            relation,
            rhs,
        });
    }
}

/// The minimization over degree profiles. Rows are labelled by the dual
/// variable they pair with: `x_1 … x_4`, `y_5`, `y_6`, `y_7 … y_{n−1}`.
pub fn build_primal(n: usize) -> Result<LpInstance> {
    check_n(n)?;
    let labels = primal_labels(n);
    let mut b = Builder::new(&labels);
    let one = || int(1);
    let ni = |i: usize| n_label(i);

    b.row(
        "x_1",
        (4..n).map(|i| (one(), ni(i))).collect(),
        Relation::Eq,
        int(n as i64),
    );
    let mut split = vec![(one(), ni(4))];
    split.extend((5..n).map(|j| (int(-1), n4_label(j))));
    b.row("x_2", split, Relation::Eq, Rational::zero());
    b.row(
        "x_3",
        vec![
            (one(), n4_label(6)),
            (int(-1), N46_PRIME.into()),
            (int(-1), N46_DOUBLEPRIME.into()),
        ],
        Relation::Eq,
        Rational::zero(),
    );
    let mut degree_sum: Vec<(Rational, String)> = (5..n).map(|j| (int(j as i64), ni(j))).collect();
    degree_sum.push((int(-2), ni(4)));
    b.row("x_4", degree_sum, Relation::Ge, Rational::zero());
    b.row(
        "y_5",
        vec![(int(4), ni(5)), (int(-3), n4_label(5)), (int(-1), N46_PRIME.into())],
        Relation::Ge,
        Rational::zero(),
    );
    b.row(
        "y_6",
        vec![
            (int(6), ni(6)),
            (int(-1), N46_PRIME.into()),
            (int(-2), N46_DOUBLEPRIME.into()),
        ],
        Relation::Ge,
        Rational::zero(),
    );
    for j in 7..n {
        b.row(
            format!("y_{j}"),
            vec![(int(j as i64), ni(j)), (int(-1), n4_label(j))],
            Relation::Ge,
            Rational::zero(),
        );
    }

    let mut objective = vec![Rational::zero(); labels.len()];
    for i in 4..n {
        objective[i - 4] = rat(i as i64, 2);
    }
    let variables = labels
        .into_iter()
        .map(|label| Variable {
            label,
            sign: Sign::NonNegative,
        })
        .collect();
    Ok(LpInstance {
        sense: Sense::Minimize,
        variables,
        objective,
        rows: b.rows,
    })
}

/// The maximization `n·x_1` as displayed, one row per primal variable (rows
/// carry that variable's label).
pub fn build_dual(n: usize) -> Result<LpInstance> {
    check_n(n)?;
    let mut labels: Vec<String> = (1..=4).map(|i| format!("x_{i}")).collect();
    labels.extend((5..n).map(|j| format!("y_{j}")));
    let mut b = Builder::new(&labels);
    let x = |i: usize| format!("x_{i}");
    let y = |j: usize| format!("y_{j}");

    b.row(
        n_label(4),
        vec![(int(1), x(2)), (int(-2), x(4)), (int(1), x(1))],
        Relation::Le,
        int(2),
    );
    b.row(
        n_label(5),
        vec![(int(4), y(5)), (int(5), x(4)), (int(1), x(1))],
        Relation::Le,
        rat(5, 2),
    );
    b.row(
        n_label(6),
        vec![(int(6), y(6)), (int(6), x(4)), (int(1), x(1))],
        Relation::Le,
        int(3),
    );
    for j in 7..n {
        let jj = j as i64;
        b.row(
            n_label(j),
            vec![(int(jj), y(j)), (int(jj), x(4)), (int(1), x(1))],
            Relation::Le,
            rat(jj, 2),
        );
    }
    b.row(
        n4_label(5),
        vec![(int(-1), x(2)), (int(-3), y(5))],
        Relation::Le,
        Rational::zero(),
    );
    b.row(
        n4_label(6),
        vec![(int(-1), x(2)), (int(1), x(3))],
        Relation::Le,
        Rational::zero(),
    );
    for j in 7..n {
        b.row(
            n4_label(j),
            vec![(int(-1), x(2)), (int(-1), y(j))],
            Relation::Le,
            Rational::zero(),
        );
    }
    b.row(
        N46_PRIME,
        vec![(int(-1), y(5)), (int(-1), y(6)), (int(-1), x(3))],
        Relation::Le,
        Rational::zero(),
    );
    b.row(
        N46_DOUBLEPRIME,
        vec![(int(-2), y(6)), (int(-1), x(3))],
        Relation::Le,
        Rational::zero(),
    );

    let mut objective = vec![Rational::zero(); labels.len()];
    objective[0] = int(n as i64);
    let variables = labels
        .into_iter()
        .enumerate()
        .map(|(i, label)| Variable {
            label,
            sign: if i < 3 { Sign::Free } else { Sign::NonNegative },
        })
        .collect();
    Ok(LpInstance {
        sense: Sense::Maximize,
        variables,
        objective,
        rows: b.rows,
    })
}

/// A candidate solution of the dual program.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualPoint {
    pub x: [Rational; 4],
    /// `y_j` for `j ∈ 5..n`.
    pub y: BTreeMap<usize, Rational>,
}

impl DualPoint {
    pub fn x1(&self) -> &Rational {
        &self.x[0]
    }

    pub fn y(&self, j: usize) -> Option<&Rational> {
        self.y.get(&j)
    }

    /// Keyed by the dual program's variable labels.
    pub fn assignment(&self) -> BTreeMap<String, Rational> {
        let mut out: BTreeMap<String, Rational> = (0..4).map(|i| (format!("x_{}", i + 1), self.x[i].clone())).collect();
        out.extend(self.y.iter().map(|(j, v)| (format!("y_{j}"), v.clone())));
        out
    }
}

/// `x_1 = 11/5`, `x_2 = x_3 = −6/35`, `x_4 = 1/70`, `y_5 = 2/35`, `y_6 = 4/35`,
/// `y_j = 6/35` for `7 ≤ j ≤ n − 1`.
pub fn certificate_dual_point(n: usize) -> Result<DualPoint> {
    check_n(n)?;
    let mut y = BTreeMap::new();
    y.insert(5, rat(2, 35));
    y.insert(6, rat(4, 35));
    for j in 7..n {
        y.insert(j, rat(6, 35));
    }
    Ok(DualPoint {
        x: [rat(11, 5), rat(-6, 35), rat(-6, 35), rat(1, 70)],
        y,
    })
}

/// `n·x_1`, a lower bound on the primal optimum once `point` is dual feasible.
pub fn weak_duality_bound(n: usize, point: &DualPoint) -> Result<Rational> {
    let dual = build_dual(n)?;
    let report = dual.check_feasible(&point.assignment())?;
    if !report.feasible() {
        return Err(Error::InfeasibleCertificate);
    }
    Ok(int(n as i64) * point.x1())
}

/// Exact optimum of the primal program (rational two-phase simplex).
pub fn solve_primal_exact(n: usize) -> Result<Rational> {
    if n > 64 {
        return Err(Error::BadParameters(format!(
            "solve_primal_exact supports n <= 64, got {n}"
        )));
    }
    let primal = build_primal(n)?;
    Ok(solve(&primal)?.objective)
}

/// The primal variables read off a graph's degree profile.
pub fn primal_point_from_profile(p: &DegreeProfile) -> Result<BTreeMap<String, Rational>> {
    let n = p.order();
    check_n(n)?;
    let count = |c: usize| int(c as i64);
    let mut out: BTreeMap<String, Rational> = (4..n).map(|i| (n_label(i), count(p.n(i)))).collect();
    out.extend((5..n).map(|j| (n4_label(j), count(p.n4(j)))));
    out.insert(N46_PRIME.into(), count(p.n4_6_prime()));
    out.insert(N46_DOUBLEPRIME.into(), count(p.n4_6_doubleprime()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primal_shape() {
        let p = build_primal(8).unwrap();
        // n_4..n_7, n_4^5..n_4^7, and the two n_4^6 parts
        assert_eq!(p.variables.len(), 9);
        assert_eq!(p.rows.len(), 7);
        let i7 = p.variable_index("n_7").unwrap();
        assert_eq!(p.objective[i7], rat(7, 2));
        assert_eq!(build_primal(7), Err(Error::NTooSmall(7)));
        for n in 8..20 {
            let p = build_primal(n).unwrap();
            assert_eq!(p.variables.len(), (n - 4) + (n - 5) + 2);
            assert_eq!(p.rows.len(), 6 + (n - 7));
        }
    }

    #[test]
    fn dual_shape_and_mechanical_dualization() {
        let d = build_dual(8).unwrap();
        let r = d.row("n_7").unwrap();
        let x1 = d.variable_index("x_1").unwrap();
        let x4 = d.variable_index("x_4").unwrap();
        let y7 = d.variable_index("y_7").unwrap();
        let mut coeffs = r.coeffs.clone();
        coeffs.sort_by_key(|c| c.0);
        assert_eq!(coeffs, vec![(x1, int(1)), (x4, int(7)), (y7, int(7))]);
        assert_eq!((r.relation, r.rhs.clone()), (Relation::Le, rat(7, 2)));
        assert_eq!(d.objective[x1], int(8));
        assert!(d.objective.iter().enumerate().all(|(i, c)| i == x1 || c.is_zero()));
        for n in 8..30 {
            let mech = build_primal(n).unwrap().dualize().unwrap();
            assert!(mech.same_structure(&build_dual(n).unwrap()), "n = {n}");
        }
    }

    #[test]
    fn certificate_values() {
        let p = certificate_dual_point(12).unwrap();
        assert_eq!(p.x1(), &rat(11, 5));
        assert_eq!(p.y(6), Some(&rat(4, 35)));
        assert_eq!(p.y(9), Some(&rat(6, 35)));
        assert_eq!(p.y(12), None);
        assert_eq!(certificate_dual_point(7), Err(Error::NTooSmall(7)));
    }

    #[test]
    fn certificate_rows_at_n20() {
        let rep = build_dual(20)
            .unwrap()
            .check_feasible(&certificate_dual_point(20).unwrap().assignment())
            .unwrap();
        assert!(rep.feasible());
        assert!(rep.row("n_4").unwrap().slack.is_zero());
        assert!(rep.row("n_5").unwrap().slack.is_zero());
        assert_eq!(rep.row("n_6").unwrap().slack, rat(1, 35));
        // the j-rows read 13j/70 + 11/5 <= j/2, slack 11(j − 7)/35
        for j in 7..20 {
            assert_eq!(
                rep.row(&format!("n_{j}")).unwrap().slack,
                rat(11 * (j as i64 - 7), 35),
                "j = {j}"
            );
        }
        assert_eq!(rep.row("n_4^6''").unwrap().slack, rat(2, 35));
        assert_eq!(rep.objective, int(44));
    }

    #[test]
    fn dropping_x4_breaks_the_first_row() {
        let mut p = certificate_dual_point(20).unwrap();
        p.x[3] = Rational::zero();
        let rep = build_dual(20).unwrap().check_feasible(&p.assignment()).unwrap();
        let r = rep.row("n_4").unwrap();
        assert!(!r.satisfied);
        assert_eq!(r.lhs, rat(71, 35));
        assert_eq!(weak_duality_bound(20, &p), Err(Error::InfeasibleCertificate));
    }

    #[test]
    fn zero_point_is_feasible() {
        let zero = DualPoint {
            x: [Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero()],
            y: (5..20).map(|j| (j, Rational::zero())).collect(),
        };
        let rep = build_dual(20).unwrap().check_feasible(&zero.assignment()).unwrap();
        assert!(rep.feasible());
        assert!(rep.objective.is_zero());
    }

    #[test]
    fn bounds() {
        assert_eq!(
            weak_duality_bound(10, &certificate_dual_point(10).unwrap()),
            Ok(int(22))
        );
        assert_eq!(
            weak_duality_bound(8, &certificate_dual_point(8).unwrap()),
            Ok(rat(88, 5))
        );
        for n in 8..40 {
            let single = weak_duality_bound(n, &certificate_dual_point(n).unwrap()).unwrap();
            let double = weak_duality_bound(2 * n, &certificate_dual_point(2 * n).unwrap()).unwrap();
            assert_eq!(double, int(2) * single);
        }
    }

    #[test]
    fn primal_optimum_dominates_the_bound() {
        for n in [8, 9, 12, 16] {
            let opt = solve_primal_exact(n).unwrap();
            assert!(opt >= rat(11 * n as i64, 5), "n = {n}: {opt}");
        }
        assert!(solve_primal_exact(65).is_err());
    }

    #[test]
    fn icosahedron_profile_is_primal_feasible_with_objective_m() {
        let g = crate::constructions::fixture("icosahedron").unwrap();
        let p = DegreeProfile::of(&g);
        let point = primal_point_from_profile(&p).unwrap();
        let rep = build_primal(12).unwrap().check_feasible(&point).unwrap();
        assert!(rep.feasible());
        assert_eq!(rep.objective, int(30));
    }
}
