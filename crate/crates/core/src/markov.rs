//! The transition digraph of a z-oriented triangulation and its Markov chain.
//!
//! Every type I edge `{u, v}` becomes two opposite arcs and every type II edge
//! `u -> v` two parallel arcs `u -> v`; each vertex leaves along its arcs
//! uniformly. Parallel arcs are merged, so a type II edge carries probability
//! `2 / outdeg(u)` and a type I edge `1 / outdeg(u)` in each direction.
//! Probabilities are exact rationals; only [`simulate`] samples.

use std::collections::{BTreeMap, VecDeque};

use num::bigint::BigInt;
use num::integer::Integer;
use num::rational::{BigRational, Ratio};
use num::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::surface::{Triangulation, VertexId};
use crate::zigzag::{EdgeClassification, EdgeType};

pub type Probability = Ratio<i64>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MarkovError {
    #[error("chain is not irreducible")]
    NotIrreducible,
    #[error("unknown state {0}")]
    UnknownState(String),
    #[error("row of {0} does not sum to 1")]
    NotStochastic(String),
    #[error("simulation needs at least one step")]
    NoSteps,
}

impl MarkovError {
    pub fn code(&self) -> &'static str {
        match self {
            MarkovError::NotIrreducible => "NotIrreducible",
            MarkovError::UnknownState(_) => "UnknownState",
            MarkovError::NotStochastic(_) => "NotStochastic",
            MarkovError::NoSteps => "NoSteps",
        }
    }
}

/// A finite Markov chain with sparse exact transition rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionChain {
    states: Vec<String>,
    rows: Vec<Vec<(usize, Probability)>>,
    // out-degree in the doubled digraph; the common denominator of each row
    outdeg: Vec<usize>,
}

impl TransitionChain {
    /// A chain from explicit rows. Each row must sum to exactly 1.
    pub fn from_rows(states: Vec<String>, rows: Vec<Vec<(usize, Probability)>>) -> Result<Self, MarkovError> {
        assert_eq!(states.len(), rows.len(), "one row per state");
        let mut clean = Vec::with_capacity(rows.len());
        let mut outdeg = Vec::with_capacity(rows.len());
        for (i, row) in rows.into_iter().enumerate() {
            let mut merged: BTreeMap<usize, Probability> = BTreeMap::new();
            for (j, p) in row {
                if j >= states.len() {
                    return Err(MarkovError::UnknownState(j.to_string()));
                }
                *merged.entry(j).or_insert_with(Probability::zero) += p;
            }
            let row: Vec<(usize, Probability)> = merged.into_iter().filter(|(_, p)| !p.is_zero()).collect();
            let total: Probability = row.iter().map(|(_, p)| *p).sum();
            if total != Probability::one() || row.iter().any(|(_, p)| *p < Probability::zero()) {
                return Err(MarkovError::NotStochastic(states[i].clone()));
            }
            outdeg.push(row.iter().fold(1i64, |acc, (_, p)| acc.lcm(p.denom())) as usize);
            clean.push(row);
        }
        Ok(TransitionChain {
            states,
            rows: clean,
            outdeg,
        })
    }

    pub fn states(&self) -> &[String] {
        &self.states
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    /// Non-zero entries of row `i`, sorted by target.
    pub fn row(&self, i: usize) -> &[(usize, Probability)] {
        &self.rows[i]
    }

    pub fn probability(&self, i: usize, j: usize) -> Probability {
        self.rows[i]
            .binary_search_by_key(&j, |(t, _)| *t)
            .map(|k| self.rows[i][k].1)
            .unwrap_or_else(|_| Probability::zero())
    }

    /// Out-degree of state `i` in the doubled digraph.
    pub fn doubled_outdegree(&self, i: usize) -> usize {
        self.outdeg[i]
    }

    pub fn state_id(&self, name: &str) -> Option<usize> {
        self.states.iter().position(|s| s == name)
    }

    pub fn successors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[i].iter().map(|(j, _)| *j)
    }

    pub fn has_arc(&self, i: usize, j: usize) -> bool {
        self.rows[i].binary_search_by_key(&j, |(t, _)| *t).is_ok()
    }
}

/// Builds the chain of a z-oriented triangulation from its edge classification.
pub fn build_chain(tri: &Triangulation, edges: &EdgeClassification) -> TransitionChain {
    let n = tri.vertex_count();
    // weighted arcs of the doubled digraph
    let mut arcs: Vec<Vec<(VertexId, i64)>> = vec![Vec::new(); n];
    for (e, ty) in edges.types().iter().enumerate() {
        let [a, b] = tri.edges()[e];
        match *ty {
            EdgeType::I => {
                arcs[a].push((b, 1));
                arcs[b].push((a, 1));
            }
            EdgeType::II { tail, head } => arcs[tail].push((head, 2)),
        }
    }
    let mut rows = Vec::with_capacity(n);
    let mut outdeg = Vec::with_capacity(n);
    for mut out in arcs {
        out.sort_unstable();
        debug_assert!(out.windows(2).all(|w| w[0].0 != w[1].0), "parallel type II arcs");
        let d: i64 = out.iter().map(|(_, w)| w).sum();
        outdeg.push(d as usize);
        rows.push(out.into_iter().map(|(j, w)| (j, Probability::new(w, d))).collect());
    }
    TransitionChain {
        states: tri.labels().to_vec(),
        rows,
        outdeg,
    }
}

fn reach(n: usize, start: usize, next: impl Fn(usize) -> Vec<usize>) -> Vec<bool> {
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for w in next(v) {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen
}

/// Strong connectivity of the positive-probability digraph.
pub fn is_irreducible(chain: &TransitionChain) -> bool {
    let n = chain.len();
    if n == 0 {
        return false;
    }
    let forward = reach(n, 0, |v| chain.successors(v).collect());
    let mut preds = vec![Vec::new(); n];
    for i in 0..n {
        for j in chain.successors(i) {
            preds[j].push(i);
        }
    }
    let backward = reach(n, 0, |v| preds[v].clone());
    forward.iter().chain(&backward).all(|&s| s)
}

/// Common period of an irreducible chain: the gcd over all arcs `u -> v` of
/// `level(u) + 1 - level(v)` for breadth-first levels from state 0.
pub fn period(chain: &TransitionChain) -> Result<usize, MarkovError> {
    if !is_irreducible(chain) {
        return Err(MarkovError::NotIrreducible);
    }
    let n = chain.len();
    let mut level = vec![usize::MAX; n];
    level[0] = 0;
    let mut queue = VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        for w in chain.successors(v) {
            if level[w] == usize::MAX {
                level[w] = level[v] + 1;
                queue.push_back(w);
            }
        }
    }
    let mut g = 0usize;
    for u in 0..n {
        for v in chain.successors(u) {
            let diff = (level[u] as i64 + 1 - level[v] as i64).unsigned_abs() as usize;
            g = g.gcd(&diff);
        }
    }
    Ok(g)
}

pub fn is_ergodic(chain: &TransitionChain) -> bool {
    matches!(period(chain), Ok(1))
}

/// The unique stationary distribution of an irreducible chain, solved exactly.
#[allow(clippy::needless_range_loop)]
pub fn stationary(chain: &TransitionChain) -> Result<Vec<BigRational>, MarkovError> {
    if !is_irreducible(chain) {
        return Err(MarkovError::NotIrreducible);
    }
    let n = chain.len();
    let big = |p: &Probability| BigRational::new(BigInt::from(*p.numer()), BigInt::from(*p.denom()));
    // rows of (P^T - I), last equation replaced by sum(pi) = 1
    let mut m = vec![vec![BigRational::zero(); n + 1]; n];
    for i in 0..n {
        m[i][i] -= BigRational::one();
        for (j, p) in chain.row(i) {
            m[*j][i] += big(p);
        }
    }
    for x in m[n - 1].iter_mut() {
        *x = BigRational::one();
    }

    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .expect("irreducible chain has a unique stationary vector");
        m.swap(col, pivot);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x -= &factor * p;
            }
        }
    }
    Ok(m.into_iter().map(|row| row[n].clone()).collect())
}

/// Irreducibility, period, ergodicity and (when irreducible) the stationary law.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainAnalysis {
    pub irreducible: bool,
    pub period: Option<usize>,
    pub ergodic: bool,
    pub stationary: Option<Vec<BigRational>>,
}

pub fn analyze(chain: &TransitionChain, with_stationary: bool) -> ChainAnalysis {
    let period = period(chain).ok();
    let irreducible = period.is_some();
    ChainAnalysis {
        irreducible,
        period,
        ergodic: period == Some(1),
        stationary: if irreducible && with_stationary {
            stationary(chain).ok()
        } else {
            None
        },
    }
}

/// Parameters of [`simulate`]. `burn_in` defaults to ten times the state count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SimulationConfig {
    pub steps: usize,
    pub seed: u64,
    pub burn_in: Option<usize>,
}

impl SimulationConfig {
    pub fn new(steps: usize, seed: u64) -> Self {
        SimulationConfig {
            steps,
            seed,
            burn_in: None,
        }
    }

    pub fn with_burn_in(mut self, burn_in: usize) -> Self {
        self.burn_in = Some(burn_in);
        self
    }
}

fn step(chain: &TransitionChain, from: usize, rng: &mut ChaCha8Rng) -> usize {
    let row = chain.row(from);
    let d = chain.doubled_outdegree(from) as i64;
    let mut u = rng.gen_range(0..d);
    for (j, p) in row {
        let w = p.numer() * (d / p.denom());
        if u < w {
            return *j;
        }
        u -= w;
    }
    unreachable!("row sums to one")
}

/// A seeded random walk: the states visited after each of `steps` transitions.
pub fn walk(chain: &TransitionChain, start: usize, steps: usize, seed: u64) -> Result<Vec<usize>, MarkovError> {
    if start >= chain.len() {
        return Err(MarkovError::UnknownState(start.to_string()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut at = start;
    Ok((0..steps)
        .map(|_| {
            at = step(chain, at, &mut rng);
            at
        })
        .collect())
}

/// Empirical visit frequencies of a seeded walk after burn-in.
pub fn simulate(chain: &TransitionChain, start: &str, config: SimulationConfig) -> Result<Vec<f64>, MarkovError> {
    if config.steps == 0 {
        return Err(MarkovError::NoSteps);
    }
    let start = chain
        .state_id(start)
        .ok_or_else(|| MarkovError::UnknownState(start.to_string()))?;
    let burn_in = config.burn_in.unwrap_or(10 * chain.len());
    let path = walk(chain, start, burn_in + config.steps, config.seed)?;
    let mut counts = vec![0usize; chain.len()];
    for &s in &path[burn_in..] {
        counts[s] += 1;
    }
    Ok(counts.into_iter().map(|c| c as f64 / config.steps as f64).collect())
}

pub fn total_variation(p: &[f64], q: &[f64]) -> f64 {
    0.5 * p.iter().zip(q).map(|(a, b)| (a - b).abs()).sum::<f64>()
}

pub fn to_f64(x: &BigRational) -> f64 {
    use num::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

/// Always `a/b`, including integers.
pub fn rational_string<T: std::fmt::Display + Clone + Integer>(x: &Ratio<T>) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

#[derive(Debug, Clone, Serialize)]
pub struct ArcJson {
    pub v: String,
    pub p: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct RowJson {
    pub from: String,
    pub to: Vec<ArcJson>,
}

/// JSON export of a chain and its analysis.
#[derive(Debug, Clone, Serialize)]
pub struct ChainJson {
    pub states: Vec<String>,
    pub rows: Vec<RowJson>,
    pub period: Option<usize>,
    pub ergodic: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stationary: Option<BTreeMap<String, String>>,
}

impl ChainJson {
    pub fn new(chain: &TransitionChain, analysis: &ChainAnalysis) -> Self {
        let rows = (0..chain.len())
            .map(|i| RowJson {
                from: chain.states[i].clone(),
                to: chain
                    .row(i)
                    .iter()
                    .map(|(j, p)| ArcJson {
                        v: chain.states[*j].clone(),
                        p: rational_string(p),
                    })
                    .collect(),
            })
            .collect();
        ChainJson {
            states: chain.states.clone(),
            rows,
            period: analysis.period,
            ergodic: analysis.ergodic,
            stationary: analysis.stationary.as_ref().map(|pi| {
                chain
                    .states
                    .iter()
                    .cloned()
                    .zip(pi.iter().map(rational_string))
                    .collect()
            }),
        }
    }
}
