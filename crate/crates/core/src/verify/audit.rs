use crate::graph::{vertex_connectivity_at_least, DegreeProfile, Graph};

/// Each predicate the minimum-counterexample argument derives, evaluated on a
/// concrete graph. Most graphs fail some of them; the record is exploratory.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditRecord {
    pub order: usize,
    pub size: usize,
    pub profile: DegreeProfile,
    /// `Σ_{i≥4} n_i = n`, i.e. minimum degree at least 4.
    pub degrees_at_least_4: bool,
    /// `n_4 = Σ_j n_4^j`: every degree-4 vertex has a neighbor of degree ≥ 5.
    pub partition: bool,
    /// `Σ_{j≥5} j·n_j ≥ 2·n_4`.
    pub degree_sum_row: bool,
    /// `4·n_5 ≥ 3·n_4^5 + n_4^6'`.
    pub degree5_row: bool,
    /// `6·n_6 ≥ n_4^6' + 2·n_4^6''`.
    pub degree6_row: bool,
    /// `(j, j·n_j ≥ n_4^j)` for `7 ≤ j ≤ n − 1`.
    pub high_rows: Vec<(usize, bool)>,
    /// `(u, d_G(N_G(u)))` for every degree-4 vertex `u`.
    pub neighborhood_sums: Vec<(usize, usize)>,
    /// Every degree-4 vertex has `d_G(N_G(u)) ≥ 19`.
    pub neighborhood_sum_at_least_19: bool,
    /// Every degree-4 vertex has at most two degree-4 neighbors.
    pub at_most_two_degree4_neighbors: bool,
    /// No degree-5 vertex has only degree-4 neighbors.
    pub degree5_not_all_degree4: bool,
    pub four_connected: bool,
}

impl AuditRecord {
    /// Whether the degree profile is a feasible point of the primal program.
    pub fn primal_feasible(&self) -> bool {
        self.degrees_at_least_4
            && self.partition
            && self.degree_sum_row
            && self.degree5_row
            && self.degree6_row
            && self.high_rows.iter().all(|&(_, ok)| ok)
    }

    /// One `name holds|fails` line per predicate.
    pub fn render(&self) -> String {
        let word = |b: bool| if b { "holds" } else { "fails" };
        let mut out = format!("order {}\nsize {}\n", self.order, self.size);
        let mut line = |name: &str, b: bool| out.push_str(&format!("{name} {}\n", word(b)));
        line("min-degree-4", self.degrees_at_least_4);
        line("partition", self.partition);
        line("degree-sum", self.degree_sum_row);
        line("degree-5", self.degree5_row);
        line("degree-6", self.degree6_row);
        for &(j, ok) in &self.high_rows {
            line(&format!("degree-{j}"), ok);
        }
        line("neighborhood-sum-19", self.neighborhood_sum_at_least_19);
        line("degree-4-neighbors-at-most-2", self.at_most_two_degree4_neighbors);
        line("degree-5-not-all-degree-4", self.degree5_not_all_degree4);
        line("4-connected", self.four_connected);
        line("primal-feasible", self.primal_feasible());
        for &(u, s) in &self.neighborhood_sums {
            out.push_str(&format!("neighborhood-sum {u} {s}\n"));
        }
        out
    }
}

pub fn audit_claim_inequalities(g: &Graph) -> AuditRecord {
    let n = g.order();
    let p = DegreeProfile::of(g);
    let deg = g.degrees();
    let degree4: Vec<usize> = (0..n).filter(|&v| deg[v] == 4).collect();
    let n4_total = p.n(4);

    let weighted: usize = (5..n).map(|j| j * p.n(j)).sum();
    let high_rows = (7..n).map(|j| (j, j * p.n(j) >= p.n4(j))).collect();
    let neighborhood_sums: Vec<(usize, usize)> = degree4.iter().map(|&u| (u, g.degree_sum(g.neighbors(u)))).collect();
    let count_deg4 = |v: usize| g.neighbors(v).iter().filter(|&w| deg[w] == 4).count();

    AuditRecord {
        order: n,
        size: g.size(),
        degrees_at_least_4: p.min_degree() >= 4,
        partition: p.partition_valid(),
        degree_sum_row: weighted >= 2 * n4_total,
        degree5_row: 4 * p.n(5) >= 3 * p.n4(5) + p.n4_6_prime(),
        degree6_row: 6 * p.n(6) >= p.n4_6_prime() + 2 * p.n4_6_doubleprime(),
        high_rows,
        neighborhood_sum_at_least_19: neighborhood_sums.iter().all(|&(_, s)| s >= 19),
        neighborhood_sums,
        at_most_two_degree4_neighbors: degree4.iter().all(|&u| count_deg4(u) <= 2),
        degree5_not_all_degree4: (0..n).filter(|&v| deg[v] == 5).all(|v| count_deg4(v) < 5),
        four_connected: vertex_connectivity_at_least(g, 4),
        profile: p,
    }
}
