//! Maximum-family search over the compatibility graph.
//!
//! The exact solver is a bitset branch and bound for maximum cliques. At the
//! root it branches over the joker count `t` of the member with fewest
//! jokers; up to coordinate permutations and bit swaps that member is
//! `0^(d-t) *^t`, and every other member then has at least `t` jokers.

mod bitset;
mod clique;
mod graph;

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub use bitset::BitSet;
pub use graph::{
    build_graph, build_graph_with, CompatGraph, GraphOptions, DEFAULT_MAX_ADJACENCY_BYTES,
};

use crate::bounds;
use crate::constructions::{alon_product, codimension_one_family};
use crate::error::{Error, Result};
use crate::family::Family;
use crate::vector::{all_joker_vectors, distance_unchecked, JokerVector, Symbol};
use clique::{deadline, max_clique, Limits, Stop};

/// Largest dimension the exact and greedy searches enumerate.
pub const MAX_SEARCH_DIM: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchStatus {
    Optimal,
    LowerBoundOnly,
    Timeout,
}

impl SearchStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            SearchStatus::Optimal => "optimal",
            SearchStatus::LowerBoundOnly => "lower_bound_only",
            SearchStatus::Timeout => "timeout",
        }
    }
}

/// Search limits and knobs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
    /// Stop as optimal once the incumbent meets the best formula upper bound.
    pub formula_cutoff: bool,
    /// Seed the incumbent from the explicit constructions.
    pub use_constructions: bool,
    pub greedy_restarts: usize,
    pub seed: u64,
    /// `false` skips branch and bound and reports the seeded incumbent.
    pub exact: bool,
    pub max_adjacency_bytes: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            max_nodes: Some(100_000_000),
            max_time: Some(Duration::from_secs(60)),
            formula_cutoff: true,
            use_constructions: true,
            greedy_restarts: 16,
            seed: 0,
            exact: true,
            max_adjacency_bytes: DEFAULT_MAX_ADJACENCY_BYTES,
        }
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Self {
            max_nodes: None,
            max_time: None,
            ..Self::default()
        }
    }

    pub fn heuristic() -> Self {
        Self {
            exact: false,
            ..Self::default()
        }
    }

    pub fn with_nodes(mut self, n: Option<u64>) -> Self {
        self.max_nodes = n;
        self
    }

    pub fn with_time(mut self, t: Option<Duration>) -> Self {
        self.max_time = t;
        self
    }
}

#[derive(Debug, Clone)]
pub struct SearchResult {
    pub k: usize,
    pub d: usize,
    pub best_size: usize,
    pub witness: Family,
    pub status: SearchStatus,
    pub nodes_explored: u64,
    pub elapsed: Duration,
    /// Formula upper bound used as a cutoff, if any.
    pub upper_cutoff: Option<u128>,
}

fn check_search_dims(k: usize, d: usize) -> Result<()> {
    if d == 0 || k == 0 || k > d {
        return Err(Error::Domain(format!("need 1 <= k <= d, got k={k}, d={d}")));
    }
    if d > MAX_SEARCH_DIM {
        return Err(Error::Resource(format!(
            "search enumerates 3^{d} vectors; limit is d <= {MAX_SEARCH_DIM}"
        )));
    }
    Ok(())
}

fn non_trivial_vectors(d: usize) -> Result<Vec<JokerVector>> {
    let mut all = all_joker_vectors(d)?;
    all.retain(|v| v.joker_count() < d);
    Ok(all)
}

fn greedy_from_order(d: usize, k: usize, order: &[JokerVector]) -> Vec<JokerVector> {
    let mut members: Vec<JokerVector> = Vec::new();
    for v in order {
        if members.iter().all(|m| {
            let dist = distance_unchecked(m, v);
            dist >= 1 && dist <= k
        }) {
            members.push(*v);
        }
    }
    debug_assert!(members.iter().all(|m| m.len() == d));
    members
}

/// A maximal `k`-neighborly family built by scanning `{0,1,*}^d \ {*^d}` in
/// a seeded random order and keeping every compatible vector.
pub fn greedy_family(k: usize, d: usize, seed: u64) -> Result<Family> {
    check_search_dims(k, d)?;
    let mut order = non_trivial_vectors(d)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    order.shuffle(&mut rng);
    Family::validated(d, k, greedy_from_order(d, k, &order))
}

/// Best of `restarts` greedy runs with seeds `seed, seed+1, ...`.
pub fn best_greedy(k: usize, d: usize, seed: u64, restarts: usize) -> Result<Family> {
    check_search_dims(k, d)?;
    let mut order = non_trivial_vectors(d)?;
    let mut best: Vec<JokerVector> = Vec::new();
    for r in 0..restarts.max(1) as u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(r));
        order.shuffle(&mut rng);
        let f = greedy_from_order(d, k, &order);
        if f.len() > best.len() {
            best = f;
        }
    }
    Family::validated(d, k, best)
}

fn check_incumbent(k: usize, d: usize, incumbent: Option<&Family>) -> Result<()> {
    if let Some(f) = incumbent {
        if f.d() != d || f.k() != k {
            return Err(Error::Precondition(format!(
                "incumbent is for k={}, d={}, search is for k={k}, d={d}",
                f.k(),
                f.d()
            )));
        }
        if !f.is_validated() {
            return Err(Error::Precondition("incumbent must be validated".into()));
        }
    }
    Ok(())
}

fn seed_incumbent(
    k: usize,
    d: usize,
    budget: &Budget,
    incumbent: Option<&Family>,
) -> Result<Family> {
    let mut best = best_greedy(k, d, budget.seed, budget.greedy_restarts)?;
    let mut consider = |f: Family| {
        if f.len() > best.len() {
            best = f;
        }
    };
    if budget.use_constructions {
        consider(alon_product(k, d)?);
        if k + 1 == d {
            consider(codimension_one_family(d)?);
        }
    }
    if let Some(f) = incumbent {
        consider(f.clone());
    }
    Ok(best)
}

fn status_of(stop: Stop) -> SearchStatus {
    match stop {
        Stop::Exhausted | Stop::TargetReached => SearchStatus::Optimal,
        Stop::NodeLimit | Stop::TimeLimit => SearchStatus::Timeout,
    }
}

/// `0^(d-t) *^t`.
fn root_representative(d: usize, t: usize) -> Result<JokerVector> {
    let symbols: Vec<Symbol> = (0..d)
        .map(|i| if i < d - t { Symbol::Zero } else { Symbol::Joker })
        .collect();
    JokerVector::from_symbols(&symbols)
}

/// Largest `k`-neighborly family in `{0,1,*}^d`.
///
/// The incumbent starts as the best of the greedy restarts, the explicit
/// constructions and `incumbent`. With `budget.formula_cutoff` the search
/// stops as soon as the incumbent meets the best formula upper bound.
/// Budget exhaustion is reported as [`SearchStatus::Timeout`] with the
/// incumbent kept.
pub fn max_family(
    k: usize,
    d: usize,
    budget: &Budget,
    incumbent: Option<&Family>,
) -> Result<SearchResult> {
    check_search_dims(k, d)?;
    check_incumbent(k, d, incumbent)?;
    let start = Instant::now();
    let mut best = seed_incumbent(k, d, budget, incumbent)?;
    let upper = if budget.formula_cutoff {
        Some(bounds::report(k, d)?.best_upper.0)
    } else {
        None
    };
    let target = upper.map_or(usize::MAX, |u| u.min(usize::MAX as u128) as usize);
    let finish = |best: Family, status, nodes| SearchResult {
        k,
        d,
        best_size: best.len(),
        witness: best,
        status,
        nodes_explored: nodes,
        elapsed: start.elapsed(),
        upper_cutoff: upper,
    };
    if best.len() >= target {
        return Ok(finish(best, SearchStatus::Optimal, 0));
    }
    if !budget.exact {
        return Ok(finish(best, SearchStatus::LowerBoundOnly, 0));
    }

    let vectors = non_trivial_vectors(d)?;
    let limits_deadline = deadline(budget.max_time, start);
    let mut nodes = 0u64;
    let mut stop = Stop::Exhausted;
    for t in 0..d {
        let rep = root_representative(d, t)?;
        let candidates: Vec<JokerVector> = vectors
            .iter()
            .filter(|v| v.joker_count() >= t)
            .filter(|v| {
                let dist = distance_unchecked(&rep, v);
                dist >= 1 && dist <= k
            })
            .copied()
            .collect();
        // cliques through `rep` of size > best need > best - 1 candidates
        if candidates.len() < best.len() {
            continue;
        }
        let local =
            CompatGraph::from_vertices_with(k, d, candidates, budget.max_adjacency_bytes)?;
        let limits = Limits {
            max_nodes: budget.max_nodes.map(|m| m.saturating_sub(nodes)),
            deadline: limits_deadline,
        };
        let out = max_clique(
            local.adjacency(),
            best.len().saturating_sub(1),
            target.saturating_sub(1),
            &limits,
        );
        nodes += out.nodes;
        if let Some(c) = out.clique {
            let mut members = vec![rep];
            members.extend(c.into_iter().map(|i| local.vertex(i)));
            best = Family::validated(d, k, members)?;
        }
        match out.stop {
            Stop::Exhausted => {}
            s => {
                stop = s;
                break;
            }
        }
    }
    Ok(finish(best, status_of(stop), nodes))
}

/// Maximum clique of an arbitrary compatibility graph, without symmetry
/// reduction or formula cutoff.
pub fn max_family_in(graph: &CompatGraph, budget: &Budget) -> Result<SearchResult> {
    let start = Instant::now();
    let (k, d) = (graph.k(), graph.d());
    let limits = Limits {
        max_nodes: budget.max_nodes,
        deadline: deadline(budget.max_time, start),
    };
    let out = max_clique(graph.adjacency(), 0, usize::MAX, &limits);
    let members: Vec<JokerVector> = out
        .clique
        .unwrap_or_default()
        .into_iter()
        .map(|i| graph.vertex(i))
        .collect();
    let witness = Family::validated(d, k, members)?;
    Ok(SearchResult {
        k,
        d,
        best_size: witness.len(),
        witness,
        status: status_of(out.stop),
        nodes_explored: out.nodes,
        elapsed: start.elapsed(),
        upper_cutoff: None,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Evidence {
    FormulasOnly,
    Search,
}

impl Evidence {
    pub fn as_str(self) -> &'static str {
        match self {
            Evidence::FormulasOnly => "formulas-only",
            Evidence::Search => "search",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Certification {
    Certified { value: u128, evidence: Evidence },
    Gap { lower: u128, upper: u128 },
}

impl std::fmt::Display for Certification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Certification::Certified { value, evidence } => {
                write!(f, "CERTIFIED({value}, {})", evidence.as_str())
            }
            Certification::Gap { lower, upper } => write!(f, "GAP({lower}, {upper})"),
        }
    }
}

/// Closes `construction_lower <= n(k,d) <= best_upper` from the formulas if
/// possible, otherwise by budgeted exact search.
pub fn certify(k: usize, d: usize, budget: &Budget) -> Result<(Certification, Option<SearchResult>)> {
    let lower = bounds::construction_lower(k, d)?.0;
    let upper = bounds::report(k, d)?.best_upper.0;
    if lower == upper {
        return Ok((
            Certification::Certified {
                value: lower,
                evidence: Evidence::FormulasOnly,
            },
            None,
        ));
    }
    let result = match max_family(k, d, budget, None) {
        Ok(r) => r,
        Err(Error::Resource(_)) => return Ok((Certification::Gap { lower, upper }, None)),
        Err(e) => return Err(e),
    };
    let found = result.best_size as u128;
    let outcome = if result.status == SearchStatus::Optimal {
        Certification::Certified {
            value: found,
            evidence: Evidence::Search,
        }
    } else {
        Certification::Gap {
            lower: lower.max(found),
            upper,
        }
    };
    Ok((outcome, Some(result)))
}
