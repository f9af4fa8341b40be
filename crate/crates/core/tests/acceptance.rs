//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.
//!
//! Run with `cargo test -p forestcut --test acceptance`.

use std::collections::VecDeque;
use std::time::{Duration, Instant};

use num_traits::{Signed, Zero};

use forestcut::constructions::{
    clique_glue, conjecture2_family, cycle_diagonals_universal, fixture, k3_band_cycle, random_connected, GlueSpec,
};
use forestcut::cut::{all_minimal_forest_cuts, find_forest_cut, find_forest_cut_exhaustive};
use forestcut::graph::{vertex_connectivity_at_least, Graph, VertexSet};
use forestcut::lp::{
    build_dual, build_primal, certificate_dual_point, int, rat, solve_primal_exact, LpInstance, Rational, Relation,
};
use forestcut::planar::{self, prop1_forest_cut, PlaneTriangulation};
use forestcut::verify::{check_claim, figure1_census, isomorphic, Claim, Corpus};

type Outcome = Result<String, String>;

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

fn main() {
    let criteria = [
        Criterion {
            id: 1,
            name: "figure 1 census",
            budget: Duration::from_secs(60),
            run: figure1,
        },
        Criterion {
            id: 2,
            name: "dual certificate",
            budget: Duration::from_secs(10),
            run: dual_certificate,
        },
        Criterion {
            id: 3,
            name: "primal optimum",
            budget: Duration::from_secs(300),
            run: primal_optimum,
        },
        Criterion {
            id: 4,
            name: "claim sweeps n<=7",
            budget: Duration::from_secs(1800),
            run: sweeps,
        },
        Criterion {
            id: 5,
            name: "triangulations have no forest cut",
            budget: Duration::from_secs(300),
            run: triangulations,
        },
        Criterion {
            id: 6,
            name: "planar construction",
            budget: Duration::from_secs(300),
            run: construction,
        },
        Criterion {
            id: 7,
            name: "construction contracts",
            budget: Duration::from_secs(120),
            run: contracts,
        },
        Criterion {
            id: 8,
            name: "oracle equivalence",
            budget: Duration::from_secs(600),
            run: oracle_equivalence,
        },
    ];
    let mut failures = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > c.budget => Err(format!("{detail}; over budget {:?}", c.budget)),
            other => other,
        };
        let (status, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        if outcome.is_err() {
            failures += 1;
        }
        println!("criterion {} [{status}] {} ({:.2?}): {detail}", c.id, c.name, elapsed);
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<E: std::fmt::Debug>(err: E) -> String {
    format!("{err:?}")
}

// Independent validator: breadth-first search over an edge list.
fn is_forest_cut_bfs(g: &Graph, cut: VertexSet) -> bool {
    let n = g.order();
    let mut adj = vec![Vec::new(); n];
    for (u, v) in g.edges() {
        adj[u].push(v);
        adj[v].push(u);
    }
    let inside: Vec<bool> = (0..n).map(|v| cut.contains(v)).collect();
    let rest: Vec<usize> = (0..n).filter(|&v| !inside[v]).collect();
    let Some(&start) = rest.first() else { return false };
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if !inside[w] && !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    if rest.iter().all(|&v| seen[v]) {
        return false;
    }
    // acyclic: union-find over edges inside the cut
    let mut parent: Vec<usize> = (0..n).collect();
    fn root(p: &mut [usize], mut v: usize) -> usize {
        while p[v] != v {
            p[v] = p[p[v]];
            v = p[v];
        }
        v
    }
    for (u, v) in g.edges() {
        if inside[u] && inside[v] {
            let (a, b) = (root(&mut parent, u), root(&mut parent, v));
            if a == b {
                return false;
            }
            parent[a] = b;
        }
    }
    true
}

fn figure1() -> Outcome {
    let mut found = Vec::new();
    for (n, names) in [(6, ["fig1_a", "fig1_b"]), (7, ["fig1_c", "fig1_d"])] {
        let census = figure1_census(n).map_err(e)?;
        ensure(census.len() == 2, || {
            format!("n={n}: census has {} graphs", census.len())
        })?;
        for name in names {
            let f = fixture(name).map_err(e)?;
            let matches = census.iter().filter(|g| isomorphic(g, &f)).count();
            ensure(matches == 1, || format!("{name} matches {matches} census members"))?;
        }
        for g in &census {
            let w = find_forest_cut(g).map_err(e)?;
            ensure(w.as_ref().is_some_and(|w| is_forest_cut_bfs(g, w.cut)), || {
                format!("census graph with {} edges has no valid forest cut", g.size())
            })?;
        }
        found.push(census.len());
    }
    Ok(format!(
        "census sizes {found:?}, all isomorphic to the fixtures, all with forest cuts"
    ))
}

fn dual_certificate() -> Outcome {
    let mut failures: Vec<String> = Vec::new();
    let mut n4j_tight = true;
    for n in 8..1000 {
        let dual = build_dual(n).map_err(e)?;
        let report = dual
            .check_feasible(&certificate_dual_point(n).map_err(e)?.assignment())
            .map_err(e)?;
        ensure(report.feasible(), || format!("n={n}: certificate infeasible"))?;
        let slack = |id: &str| {
            report
                .row(id)
                .map(|r| r.slack.clone())
                .ok_or(format!("n={n}: no row {id}"))
        };
        ensure(slack("n_4")?.is_zero() && slack("n_5")?.is_zero(), || {
            format!("n={n}: rows 1-2 not tight")
        })?;
        ensure(slack("n_6")? == rat(1, 35), || {
            format!("n={n}: row 3 slack {}", slack("n_6").unwrap())
        })?;
        for row in &report.rows {
            let index = |prefix: &str| row.id.strip_prefix(prefix).and_then(|j| j.parse::<usize>().ok());
            if index("n_4^").is_some_and(|j| j >= 7) {
                n4j_tight &= row.slack.is_zero();
            } else if let Some(j) = index("n_").filter(|&j| j >= 7) {
                if !row.slack.is_zero() && failures.len() < 3 {
                    failures.push(format!("n={n} row n_{j} slack {}", row.slack));
                }
            }
        }
    }
    if failures.is_empty() {
        Ok("feasible for 8 <= n < 1000; rows n_4, n_5 and every n_j tight; row n_6 slack 1/35".into())
    } else {
        Err(format!(
            "feasible for every n, but j-rows are not all tight: {} ...; slack is 11(j-7)/35 (rows n_4^j tight: {n4j_tight})",
            failures.join(", ")
        ))
    }
}

/// Minimum over all basic feasible solutions of the standard-form program
/// `A x (=) b, x ≥ 0` (surplus columns added for `>=` rows).
fn bfs_enumeration_minimum(lp: &LpInstance) -> Option<Rational> {
    let m = lp.rows.len();
    let nv = lp.variables.len();
    let mut a: Vec<Vec<Rational>> = Vec::new();
    let mut cost: Vec<Rational> = lp.objective.clone();
    let surplus: Vec<usize> = (0..m).filter(|&i| lp.rows[i].relation != Relation::Eq).collect();
    for (i, row) in lp.rows.iter().enumerate() {
        let mut line = vec![Rational::zero(); nv + surplus.len()];
        for (v, c) in &row.coeffs {
            line[*v] += c;
        }
        if let Some(k) = surplus.iter().position(|&r| r == i) {
            line[nv + k] = match row.relation {
                Relation::Ge => int(-1),
                _ => int(1),
            };
        }
        a.push(line);
    }
    cost.resize(nv + surplus.len(), Rational::zero());
    let cols = nv + surplus.len();
    let b: Vec<Rational> = lp.rows.iter().map(|r| r.rhs.clone()).collect();
    let mut best: Option<Rational> = None;
    let mut basis: Vec<usize> = (0..m).collect();
    loop {
        if let Some(x) = solve_square(&a, &b, &basis) {
            if x.iter().all(|v| !v.is_negative()) {
                let obj: Rational = basis.iter().zip(&x).map(|(&j, v)| &cost[j] * v).sum();
                if best.as_ref().is_none_or(|b| obj < *b) {
                    best = Some(obj);
                }
            }
        }
        // next combination
        let Some(i) = (0..m).rev().find(|&i| basis[i] < cols - m + i) else {
            break;
        };
        basis[i] += 1;
        for k in i + 1..m {
            basis[k] = basis[k - 1] + 1;
        }
    }
    best
}

/// Gauss–Jordan on the columns `basis` of `a`; `None` when singular.
fn solve_square(a: &[Vec<Rational>], b: &[Rational], basis: &[usize]) -> Option<Vec<Rational>> {
    let m = b.len();
    let mut t: Vec<Vec<Rational>> = (0..m)
        .map(|i| {
            let mut r: Vec<Rational> = basis.iter().map(|&j| a[i][j].clone()).collect();
            r.push(b[i].clone());
            r
        })
        .collect();
    for c in 0..m {
        let p = (c..m).find(|&r| !t[r][c].is_zero())?;
        t.swap(c, p);
        let inv = t[c][c].recip();
        for v in t[c].iter_mut() {
            *v *= &inv;
        }
        for r in 0..m {
            if r != c && !t[r][c].is_zero() {
                let f = t[r][c].clone();
                let pivot = t[c].clone();
                for (v, pv) in t[r].iter_mut().zip(&pivot) {
                    *v -= &f * pv;
                }
            }
        }
    }
    Some(t.into_iter().map(|r| r[m].clone()).collect())
}

fn primal_optimum() -> Outcome {
    let mut values = Vec::new();
    for n in 8..=40 {
        let opt = solve_primal_exact(n).map_err(e)?;
        let bound = rat(11 * n as i64, 5);
        ensure(opt >= bound, || format!("n={n}: optimum {opt} below {bound}"))?;
        values.push(opt);
    }
    let oracle =
        bfs_enumeration_minimum(&build_primal(8).map_err(e)?).ok_or("oracle found no basic feasible solution")?;
    ensure(oracle == values[0], || {
        format!("n=8: simplex {} but basis enumeration {oracle}", values[0])
    })?;
    Ok(format!(
        "optimum >= 11n/5 for 8 <= n <= 40; n=8 optimum {oracle} matches basis enumeration"
    ))
}

fn sweeps() -> Outcome {
    let corpus = Corpus::builtin_up_to(7, 1).map_err(e)?;
    let mut lines = Vec::new();
    let mut bad = Vec::new();
    for claim in [
        Claim::Theorem2,
        Claim::ChenYu,
        Claim::Theorem1,
        Claim::Conjecture1,
        Claim::Conjecture2,
    ] {
        let one = check_claim(claim, &corpus, 1).map_err(e)?;
        let eight = check_claim(claim, &corpus, 8).map_err(e)?;
        ensure(one == eight, || {
            format!("{claim}: report differs between 1 and 8 workers")
        })?;
        if one.has_counterexamples() {
            let shown: Vec<&str> = one.counterexamples.iter().take(4).map(String::as_str).collect();
            bad.push(format!(
                "{claim} has {} counterexamples (e.g. {})",
                one.counterexamples.len(),
                shown.join(" ")
            ));
        }
        lines.push(format!("{claim} {}/{}", one.counterexamples.len(), one.hypothesis_met));
    }
    let summary = format!(
        "{} graphs; counterexamples/hypothesis met: {}",
        corpus.len(),
        lines.join(", ")
    );
    if bad.is_empty() {
        Ok(summary)
    } else {
        Err(format!("{summary}; {}", bad.join("; ")))
    }
}

fn triangulation_corpus() -> Result<Vec<(String, PlaneTriangulation)>, String> {
    let mut out = vec![
        ("octahedron".to_string(), planar::octahedron()),
        ("icosahedron".to_string(), planar::icosahedron()),
    ];
    for seed in 0..20u64 {
        let n = 4 + (seed as usize % 7);
        out.push((
            format!("stacked n={n} seed={seed}"),
            planar::random_stacked_triangulation(n, seed).map_err(e)?,
        ));
    }
    Ok(out)
}

fn triangulations() -> Outcome {
    let corpus = triangulation_corpus()?;
    for (name, t) in &corpus {
        let found = find_forest_cut_exhaustive(t.graph()).map_err(e)?;
        ensure(found.is_none(), || {
            format!("{name}: forest cut {:?}", found.unwrap().cut)
        })?;
    }
    let oct = fixture("octahedron").map_err(e)?;
    let glued = clique_glue(&oct, &oct, &GlueSpec::new(vec![0, 1, 2], vec![0, 1, 2])).map_err(e)?;
    ensure(glued.order() == 9 && glued.size() == 21, || {
        format!("glued octahedra n={} m={}", glued.order(), glued.size())
    })?;
    ensure(find_forest_cut_exhaustive(&glued).map_err(e)?.is_none(), || {
        "glued octahedra have a forest cut".into()
    })?;
    Ok(format!(
        "{} triangulations and the glued octahedra have none",
        corpus.len()
    ))
}

fn construction() -> Outcome {
    let corpus = triangulation_corpus()?;
    let mut runs = 0;
    for (name, t) in &corpus {
        for (x, y) in t.graph().edges().collect::<Vec<_>>() {
            let rooted = t.rerooted_at_edge(x, y).map_err(e)?;
            let out = prop1_forest_cut(&rooted, x, y).map_err(e)?;
            let h = t.graph().remove_edge(x, y);
            ensure(is_forest_cut_bfs(&h, out.cut), || {
                format!("{name} edge {x}{y}: {:?} is not a forest cut", out.cut)
            })?;
            runs += 1;
        }
    }
    let k3 = planar::triangle();
    for (x, y) in [(0, 1), (1, 2), (0, 2)] {
        let out = prop1_forest_cut(&k3.rerooted_at_edge(x, y).map_err(e)?, x, y).map_err(e)?;
        let z = 3 - x - y;
        ensure(out.cut == VertexSet::singleton(z), || {
            format!("K3 edge {x}{y}: {:?}", out.cut)
        })?;
    }
    Ok(format!("{runs} edge removals revalidated; K3 gives the apex"))
}

fn contracts() -> Outcome {
    let g = cycle_diagonals_universal(3).map_err(e)?;
    ensure(g.order() == 7 && g.size() == 15, || {
        format!("cdu(3): n={} m={}", g.order(), g.size())
    })?;
    ensure(vertex_connectivity_at_least(&g, 4), || "cdu(3) not 4-connected".into())?;
    let cuts = all_minimal_forest_cuts(&g).map_err(e)?;
    ensure(!cuts.is_empty() && cuts.iter().all(|s| s.contains(6)), || {
        format!("cdu(3) cuts {cuts:?}")
    })?;

    let band = k3_band_cycle(8, 4).map_err(e)?;
    let cuts = all_minimal_forest_cuts(&band).map_err(e)?;
    let small: VertexSet = [0, 1, 2].into_iter().collect();
    ensure(cuts == vec![small], || {
        format!("band(8,4) minimal forest cuts {cuts:?}")
    })?;

    for k in 1..=10 {
        let g = conjecture2_family(k).map_err(e)?;
        ensure(g.order() == 3 * k + 4 && g.size() == 7 * k + 7, || {
            format!("G_{k}: n={} m={}", g.order(), g.size())
        })?;
        ensure(vertex_connectivity_at_least(&g, 3), || format!("G_{k} not 3-connected"))?;
        for u in 0..g.order() {
            let nb = g.neighbors(u);
            ensure(g.induced_size(nb) >= nb.len(), || {
                format!("G_{k}: neighborhood of {u} is acyclic")
            })?;
        }
    }
    Ok("cdu(3), band(8,4) and G_1..G_10 meet their contracts".into())
}

fn oracle_equivalence() -> Outcome {
    let corpus = Corpus::builtin_up_to(7, 0).map_err(e)?;
    let mut random = Vec::new();
    for seed in 0..200u64 {
        let n = 3 + (seed as usize % 10);
        let p = 0.15 + 0.1 * (seed % 6) as f64;
        random.push(random_connected(n, p, seed).map_err(e)?);
    }
    let mut with_cut = 0;
    let mut total = 0;
    for g in corpus.graphs.iter().chain(&random) {
        if g.order() < 3 {
            continue;
        }
        let fast = find_forest_cut(g).map_err(e)?;
        let slow = find_forest_cut_exhaustive(g).map_err(e)?;
        ensure(fast.is_some() == slow.is_some(), || {
            format!("disagreement on graph with n={} m={}", g.order(), g.size())
        })?;
        if let Some(w) = fast {
            ensure(is_forest_cut_bfs(g, w.cut), || "invalid witness".into())?;
            with_cut += 1;
        }
        total += 1;
    }
    Ok(format!("{total} graphs agree ({with_cut} with a forest cut)"))
}
