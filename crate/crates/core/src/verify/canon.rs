use crate::graph::Graph;

/// Canonical key: the adjacency upper triangle in column-major order, one
/// integer per column `j` with row 0 as the most significant bit. Comparing
/// keys compares the bit strings lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonKey(Vec<u128>);

/// The relabelling of `g` whose bit string is minimal over all vertex
/// permutations, found by branch and bound on column prefixes. Exponential in
/// the worst case (highly symmetric graphs); intended for small orders.
pub fn canonical_form(g: &Graph) -> (Graph, CanonKey) {
    let n = g.order();
    let mut search = Search {
        g,
        n,
        perm: Vec::with_capacity(n),
        cols: Vec::with_capacity(n),
        used: vec![false; n],
        best: None,
    };
    search.descend(true);
    let (perm, key) = search.best.expect("at least one permutation");
    let mut new_label = vec![0; n];
    for (pos, &v) in perm.iter().enumerate() {
        new_label[v] = pos;
    }
    (g.permute(&new_label), CanonKey(key))
}

pub fn canonical_key(g: &Graph) -> CanonKey {
    canonical_form(g).1
}

/// Isomorphism test by canonical keys, after cheap invariant checks.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.size() != b.size() {
        return false;
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    da == db && canonical_key(a) == canonical_key(b)
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    perm: Vec<usize>,
    /// `cols[p]` is the column of position `p` (bits against positions `< p`).
    cols: Vec<u128>,
    used: Vec<bool>,
    best: Option<(Vec<usize>, Vec<u128>)>,
}

impl Search<'_> {
    /// `tight`: the current column prefix equals the best key's prefix.
    /// Returns true if the best key was replaced somewhere below.
    fn descend(&mut self, tight: bool) -> bool {
        let p = self.perm.len();
        if p == self.n {
            let replace = match &self.best {
                None => true,
                Some(_) => !tight,
            };
            if replace {
                self.best = Some((self.perm.clone(), self.cols.clone()));
            }
            return replace;
        }
        let mut tight = tight;
        let mut improved = false;
        for v in 0..self.n {
            if self.used[v] {
                continue;
            }
            let mut col = 0u128;
            for (i, &u) in self.perm.iter().enumerate() {
                if self.g.has_edge(u, v) {
                    col |= 1 << (p - 1 - i);
                }
            }
            let child_tight = match (&self.best, tight) {
                (Some((_, best)), true) => match col.cmp(&best[p]) {
                    std::cmp::Ordering::Greater => continue,
                    std::cmp::Ordering::Equal => true,
                    std::cmp::Ordering::Less => false,
                },
                _ => false,
            };
            self.used[v] = true;
            self.perm.push(v);
            self.cols.push(col);
            let replaced = self.descend(child_tight || self.best.is_none());
            self.cols.pop();
            self.perm.pop();
            self.used[v] = false;
            if replaced {
                // the best key now runs through this prefix
                tight = true;
                improved = true;
            }
        }
        improved
    }
}
