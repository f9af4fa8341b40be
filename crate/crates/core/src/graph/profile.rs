use super::Graph;

/// Degree counts `n_i` together with the refinement of degree-4 vertices by the
/// largest degree among their neighbors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    order: usize,
    /// `by_degree[i]` = number of vertices of degree `i`, for every `i` in `0..order`.
    by_degree: Vec<usize>,
    /// `n4_by_max[j]` = number of degree-4 vertices whose max neighbor degree is `j`.
    n4_by_max: Vec<usize>,
    n4_6_prime: usize,
    n4_6_doubleprime: usize,
    partition_valid: bool,
}

impl DegreeProfile {
    pub fn of(g: &Graph) -> Self {
        let n = g.order();
        let degrees = g.degrees();
        let mut by_degree = vec![0; n.max(1)];
        for &d in &degrees {
            by_degree[d] += 1;
        }
        let mut n4_by_max = vec![0; n.max(1)];
        let (mut prime, mut doubleprime) = (0, 0);
        let mut partition_valid = true;
        for v in (0..n).filter(|&v| degrees[v] == 4) {
            let nb = g.neighbors(v);
            let j = nb.iter().map(|w| degrees[w]).max().unwrap_or(0);
            if j < 5 {
                partition_valid = false;
                continue;
            }
            n4_by_max[j] += 1;
            if j == 6 {
                if nb.iter().filter(|&w| degrees[w] == 6).count() == 1 {
                    prime += 1;
                } else {
                    doubleprime += 1;
                }
            }
        }
        DegreeProfile {
            order: n,
            by_degree,
            n4_by_max,
            n4_6_prime: prime,
            n4_6_doubleprime: doubleprime,
            partition_valid,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `n_i`: vertices of degree exactly `i` (any `i`, zero when out of range).
    pub fn n(&self, i: usize) -> usize {
        self.by_degree.get(i).copied().unwrap_or(0)
    }

    /// `n_4^j`.
    pub fn n4(&self, j: usize) -> usize {
        self.n4_by_max.get(j).copied().unwrap_or(0)
    }

    pub fn n4_6_prime(&self) -> usize {
        self.n4_6_prime
    }

    pub fn n4_6_doubleprime(&self) -> usize {
        self.n4_6_doubleprime
    }

    /// False iff some degree-4 vertex has only neighbors of degree at most 4.
    pub fn partition_valid(&self) -> bool {
        self.partition_valid
    }

    /// `Σ_{i=4}^{n−1} n_i`.
    pub fn high_degree_count(&self) -> usize {
        (4..self.order).map(|i| self.n(i)).sum()
    }

    pub fn min_degree(&self) -> usize {
        self.by_degree.iter().position(|&c| c > 0).unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{conjecture2_family, fixture};

    #[test]
    fn octahedron_is_four_regular_without_valid_partition() {
        let p = DegreeProfile::of(&fixture("octahedron").unwrap());
        assert_eq!(p.n(4), 6);
        assert!((5..6).all(|j| p.n4(j) == 0));
        assert!(!p.partition_valid());
        assert_eq!(p.high_degree_count(), 6);
    }

    #[test]
    fn icosahedron_is_five_regular() {
        let p = DegreeProfile::of(&fixture("icosahedron").unwrap());
        assert_eq!(p.n(5), 12);
        assert!((0..12).filter(|&i| i != 5).all(|i| p.n(i) == 0));
        assert!(p.partition_valid());
    }

    #[test]
    fn g1_degrees_follow_the_edge_list() {
        // cycle u0..u5 with chords u0u2, u3u5 and a universal vertex:
        // u0 u2 u3 u5 have degree 4, u1 u4 degree 3, the universal vertex 6.
        let g = conjecture2_family(1).unwrap();
        let p = DegreeProfile::of(&g);
        assert_eq!((p.n(3), p.n(4), p.n(6)), (2, 4, 1));
        assert_eq!(p.high_degree_count(), 5);
        assert!(p.high_degree_count() < g.order());
        // each degree-4 vertex sees the universal vertex (degree 6) exactly once
        assert!(p.partition_valid());
        assert_eq!((p.n4(6), p.n4_6_prime(), p.n4_6_doubleprime()), (4, 4, 0));
    }

    #[test]
    fn profile_sums() {
        for name in [
            "k4",
            "k33",
            "prism",
            "octahedron",
            "icosahedron",
            "wheel5",
            "fig1_c",
            "fig1_d",
        ] {
            let g = fixture(name).unwrap();
            let p = DegreeProfile::of(&g);
            let by_deg: usize = (0..g.order()).map(|i| i * p.n(i)).sum();
            assert_eq!(by_deg, 2 * g.size());
            let high = (0..g.order()).filter(|&v| g.degree(v) >= 4).count();
            assert_eq!(p.high_degree_count(), high);
            assert_eq!(p.high_degree_count() == g.order(), g.min_degree() >= 4);
            if p.partition_valid() {
                let n4: usize = (5..g.order()).map(|j| p.n4(j)).sum();
                assert_eq!(n4, p.n(4));
                assert_eq!(p.n4(6), p.n4_6_prime() + p.n4_6_doubleprime());
            }
        }
    }
}
