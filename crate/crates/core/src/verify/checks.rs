use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use super::canon::canonical_form;
use super::corpus::Corpus;
use super::enumerate::enumerate_connected_graphs;
use super::threshold::Threshold;
use crate::cut::{find_forest_cut, find_independent_cut, find_independent_cut_avoiding};
use crate::error::{Error, Result};
use crate::graph::{induced_is_forest, vertex_connectivity_at_least, write_graph6, Graph};
use crate::lp::{int, rat};
use crate::par::map_ordered;

/// The statements the sweeps test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Claim {
    /// `m < 3n − 6` implies a forest cut.
    Conjecture1,
    /// `m < 11n/5 − 18/5` implies a forest cut.
    Theorem2,
    /// `m < 2n − 3` implies an independent cut.
    ChenYu,
    /// 2-connected and `m < 2n − 3`: for every `u` an independent cut avoiding `u`.
    Theorem1,
    /// 3-connected with a cycle in every neighborhood implies `m ≥ 7(n − 1)/3`.
    Conjecture2,
}

impl Claim {
    pub const ALL: [Claim; 5] = [
        Claim::Conjecture1,
        Claim::Theorem2,
        Claim::ChenYu,
        Claim::Theorem1,
        Claim::Conjecture2,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Claim::Conjecture1 => "conjecture1",
            Claim::Theorem2 => "theorem2",
            Claim::ChenYu => "chenyu",
            Claim::Theorem1 => "theorem1",
            Claim::Conjecture2 => "conjecture2",
        }
    }

    /// The edge bound appearing in the claim.
    pub fn threshold(self) -> Threshold {
        match self {
            Claim::Conjecture1 => Threshold::new(int(3), int(-6)),
            Claim::Theorem2 => Threshold::new(rat(11, 5), rat(-18, 5)),
            Claim::ChenYu | Claim::Theorem1 => Threshold::new(int(2), int(-3)),
            Claim::Conjecture2 => Threshold::new(rat(7, 3), rat(-7, 3)),
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Claim::ALL
            .into_iter()
            .find(|c| c.id() == s)
            .ok_or_else(|| Error::BadParameters(format!("unknown claim {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// The hypothesis does not apply (including orders ≤ 2).
    Skipped,
    Holds,
    Counterexample,
}

/// Evaluates `claim` on one graph. Pure; a flagged graph is flagged again on
/// every rerun.
pub fn evaluate(claim: Claim, g: &Graph) -> Result<Verdict> {
    let (n, m) = (g.order(), g.size());
    if n <= 2 {
        return Ok(Verdict::Skipped);
    }
    let dense_enough = claim.threshold().admits(m, n);
    let verdict = match claim {
        Claim::Conjecture1 | Claim::Theorem2 => {
            if !dense_enough {
                Verdict::Skipped
            } else if !g.is_connected() || find_forest_cut(g)?.is_some() {
                // a disconnected graph has the empty cut
                Verdict::Holds
            } else {
                Verdict::Counterexample
            }
        }
        Claim::ChenYu => {
            if !dense_enough {
                Verdict::Skipped
            } else if !g.is_connected() || find_independent_cut(g)?.is_some() {
                Verdict::Holds
            } else {
                Verdict::Counterexample
            }
        }
        Claim::Theorem1 => {
            if !dense_enough || !vertex_connectivity_at_least(g, 2) {
                Verdict::Skipped
            } else {
                let mut all = true;
                for u in 0..n {
                    if find_independent_cut_avoiding(g, u)?.is_none() {
                        all = false;
                        break;
                    }
                }
                if all {
                    Verdict::Holds
                } else {
                    Verdict::Counterexample
                }
            }
        }
        Claim::Conjecture2 => {
            if !conjecture2_hypothesis(g) {
                Verdict::Skipped
            } else if dense_enough {
                // m < 7(n − 1)/3
                Verdict::Counterexample
            } else {
                Verdict::Holds
            }
        }
    };
    Ok(verdict)
}

/// 3-connected and `G[N(u)]` contains a cycle for every vertex `u`.
pub fn conjecture2_hypothesis(g: &Graph) -> bool {
    vertex_connectivity_at_least(g, 3) && g.vertices().iter().all(|u| !induced_is_forest(g, g.neighbors(u)))
}

/// Outcome of sweeping one claim over a corpus.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub claim: Claim,
    pub corpus: String,
    pub scanned: usize,
    pub hypothesis_met: usize,
    /// Canonical graph6 strings, sorted and deduplicated.
    pub counterexamples: Vec<String>,
    /// Input lines of the corpus that failed to parse.
    pub malformed: usize,
    pub elapsed: Duration,
}

/// Equality ignores `elapsed`.
impl PartialEq for CheckReport {
    fn eq(&self, other: &Self) -> bool {
        self.claim == other.claim
            && self.corpus == other.corpus
            && self.scanned == other.scanned
            && self.hypothesis_met == other.hypothesis_met
            && self.counterexamples == other.counterexamples
            && self.malformed == other.malformed
    }
}

impl CheckReport {
    /// Header `claim corpus scanned counterexamples`, then one graph6 line per
    /// counterexample.
    pub fn render(&self) -> String {
        let mut out = format!(
            "{} {} {} {}\n",
            self.claim,
            self.corpus,
            self.scanned,
            self.counterexamples.len()
        );
        for g6 in &self.counterexamples {
            out.push_str(g6);
            out.push('\n');
        }
        out
    }

    pub fn has_counterexamples(&self) -> bool {
        !self.counterexamples.is_empty()
    }
}

/// Sweeps `claim` over `corpus` on `workers` threads (0 = all cores). The
/// report does not depend on the worker count.
pub fn check_claim(claim: Claim, corpus: &Corpus, workers: usize) -> Result<CheckReport> {
    let start = Instant::now();
    let verdicts = map_ordered(&corpus.graphs, workers, |g| -> Result<(Verdict, Option<String>)> {
        let v = evaluate(claim, g)?;
        let g6 = if v == Verdict::Counterexample {
            Some(canonical_graph6(g)?)
        } else {
            None
        };
        Ok((v, g6))
    });
    let mut hypothesis_met = 0;
    let mut counterexamples = Vec::new();
    for r in verdicts {
        let (v, g6) = r?;
        if v != Verdict::Skipped {
            hypothesis_met += 1;
        }
        counterexamples.extend(g6);
    }
    counterexamples.sort();
    counterexamples.dedup();
    Ok(CheckReport {
        claim,
        corpus: corpus.description.clone(),
        scanned: corpus.graphs.len(),
        hypothesis_met,
        counterexamples,
        malformed: corpus.malformed.len(),
        elapsed: start.elapsed(),
    })
}

pub fn check_conjecture1(corpus: &Corpus, workers: usize) -> Result<CheckReport> {
    check_claim(Claim::Conjecture1, corpus, workers)
}

pub fn check_theorem2(corpus: &Corpus, workers: usize) -> Result<CheckReport> {
    check_claim(Claim::Theorem2, corpus, workers)
}

pub fn check_chen_yu(corpus: &Corpus, workers: usize) -> Result<CheckReport> {
    check_claim(Claim::ChenYu, corpus, workers)
}

/// The avoiding-vertex form over the 2-connected members.
pub fn check_chen_yu_avoiding(corpus: &Corpus, workers: usize) -> Result<CheckReport> {
    check_claim(Claim::Theorem1, corpus, workers)
}

pub fn check_conjecture2(corpus: &Corpus, workers: usize) -> Result<CheckReport> {
    check_claim(Claim::Conjecture2, corpus, workers)
}

fn canonical_graph6(g: &Graph) -> Result<String> {
    write_graph6(&canonical_form(g).0)
}

/// All 3-connected graphs of order `n ∈ {6, 7}` with `m < 11n/5 − 18/5`, up to
/// isomorphism, from the built-in enumerator.
pub fn figure1_census(n: usize) -> Result<Vec<Graph>> {
    if !(6..=7).contains(&n) {
        return Err(Error::UnsupportedCensusOrder(n));
    }
    let bound = Claim::Theorem2.threshold();
    let mut graphs = enumerate_connected_graphs(n, 0)?;
    graphs.retain(|g| bound.admits(g.size(), n) && vertex_connectivity_at_least(g, 3));
    Ok(graphs)
}
