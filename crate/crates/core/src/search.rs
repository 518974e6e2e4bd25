//! Exact maximum transitive subtournaments.
//!
//! A witness is reported as a vertex order `w_0, w_1, …` in which every later
//! vertex dominates every earlier one, matching the strictly lower triangular
//! adjacency matrix of a transitive tournament.
//!
//! Branch and bound grows chains `c_1, c_2, …` where each new vertex is
//! dominated by every vertex already in the chain. The candidates for the
//! next vertex are the intersection of the chain members' out-neighbourhoods,
//! so every chain is transitive and every pair in it is adjacent; digraphs
//! that are not tournaments need no special handling. Each transitive set
//! corresponds to exactly one chain (its unique topological order).

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::bitset::BitSet;
use crate::bounds::best_bound;
use crate::digraph::Digraph;

/// Largest order accepted by [`max_transitive_brute`].
pub const BRUTE_FORCE_LIMIT: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("vertex {vertex} appears more than once")]
    RepeatedVertex { vertex: usize },
    #[error("vertex {vertex} out of range for {v} vertices")]
    OutOfRange { vertex: usize, v: usize },
    #[error("brute force is limited to {BRUTE_FORCE_LIMIT} vertices, got {0}")]
    TooLarge(usize),
    #[error("witness is not a transitive subtournament")]
    NotTransitive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMethod {
    Brute,
    BranchBound,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchResult {
    pub max_size: usize,
    pub witness: Vec<usize>,
    pub nodes_explored: u64,
    pub method: SearchMethod,
    /// Set when the time limit stopped the search; `max_size` is then only a
    /// lower bound.
    pub time_limited: bool,
}

fn check_vertices(g: &Digraph, order: &[usize]) -> Result<BitSet, SearchError> {
    let mut seen = BitSet::new(g.v());
    for &x in order {
        if x >= g.v() {
            return Err(SearchError::OutOfRange { vertex: x, v: g.v() });
        }
        if seen.contains(x) {
            return Err(SearchError::RepeatedVertex { vertex: x });
        }
        seen.insert(x);
    }
    Ok(seen)
}

/// Whether `order[j] → order[i]` for all `i < j`.
pub fn verify_transitive(g: &Digraph, order: &[usize]) -> Result<bool, SearchError> {
    check_vertices(g, order)?;
    Ok(order
        .iter()
        .enumerate()
        .all(|(j, &later)| order[..j].iter().all(|&earlier| g.has_edge(later, earlier))))
}

/// Order-free test: `set` induces a tournament with no directed 3-cycle.
pub fn is_transitive_set(g: &Digraph, set: &BitSet) -> bool {
    let s = set.count();
    for x in set.iter() {
        let out = g.out_neighbors(x).intersection_count(set);
        let inn = g.in_neighbors(x).intersection_count(set);
        if out + inn != s - 1 {
            return false;
        }
    }
    // a 3-cycle x → y → z → x
    for x in set.iter() {
        let back = g.in_neighbors(x).intersection(set);
        for y in g.out_neighbors(x).iter().filter(|&y| set.contains(y)) {
            if g.out_neighbors(y).intersects(&back) {
                return false;
            }
        }
    }
    true
}

/// Orders a transitive set so that later vertices dominate earlier ones.
pub fn transitive_order(g: &Digraph, set: &BitSet) -> Vec<usize> {
    let mut members: Vec<usize> = set.iter().collect();
    members.sort_by_key(|&x| (g.out_neighbors(x).intersection_count(set), x));
    members
}

/// Exhaustive search over all vertex subsets.
pub fn max_transitive_brute(g: &Digraph) -> Result<SearchResult, SearchError> {
    let v = g.v();
    if v > BRUTE_FORCE_LIMIT {
        return Err(SearchError::TooLarge(v));
    }
    let mut best = BitSet::from_indices(v, [0]);
    let mut best_size = 1;
    let mut nodes = 0u64;
    for mask in 1u64..(1 << v) {
        let size = mask.count_ones() as usize;
        if size <= best_size {
            continue;
        }
        nodes += 1;
        let set = BitSet::from_indices(v, (0..v).filter(|i| mask >> i & 1 == 1));
        if is_transitive_set(g, &set) {
            best_size = size;
            best = set;
        }
    }
    Ok(SearchResult {
        max_size: best_size,
        witness: transitive_order(g, &best),
        nodes_explored: nodes,
        method: SearchMethod::Brute,
        time_limited: false,
    })
}

#[derive(Debug, Clone, Default)]
pub struct SearchOptions {
    pub time_limit: Option<Duration>,
    /// Stop as soon as a set of this size is found.
    pub cutoff: Option<usize>,
    /// 0 or 1 runs single-threaded.
    pub threads: usize,
}

struct Shared {
    best: AtomicUsize,
    nodes: AtomicU64,
    stop: AtomicBool,
    deadline: Option<Instant>,
    cutoff: usize,
}

impl Shared {
    fn should_stop(&self) -> bool {
        self.stop.load(Ordering::Relaxed)
    }
}

struct Dfs<'a> {
    g: &'a Digraph,
    shared: &'a Shared,
    chain: Vec<usize>,
    best_chain: Vec<usize>,
    local_nodes: u64,
}

impl Dfs<'_> {
    fn expand(&mut self, cand: &BitSet) {
        self.local_nodes += 1;
        if self.local_nodes.is_multiple_of(1024) {
            self.shared.nodes.fetch_add(1024, Ordering::Relaxed);
            if let Some(d) = self.shared.deadline {
                if Instant::now() >= d {
                    self.shared.stop.store(true, Ordering::Relaxed);
                }
            }
        }
        if self.shared.should_stop() {
            return;
        }
        let len = self.chain.len();
        if len > self.shared.best.load(Ordering::Relaxed) {
            let prev = self.shared.best.fetch_max(len, Ordering::Relaxed);
            if len > prev {
                self.best_chain = self.chain.clone();
            }
            if len >= self.shared.cutoff {
                self.shared.stop.store(true, Ordering::Relaxed);
                return;
            }
        }
        for u in cand.iter() {
            if len + cand.count() <= self.shared.best.load(Ordering::Relaxed) || self.shared.should_stop() {
                return;
            }
            let next = cand.intersection(self.g.out_neighbors(u));
            // the chain plus u plus every remaining candidate
            if len + 1 + next.count() <= self.shared.best.load(Ordering::Relaxed) {
                continue;
            }
            self.chain.push(u);
            self.expand(&next);
            self.chain.pop();
        }
    }
}

/// Vertex order used for branching: descending out-degree, ties by index.
fn branching_order(g: &Digraph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.v()).collect();
    order.sort_by_key(|&x| (std::cmp::Reverse(g.out_degree(x)), x));
    order
}

/// Branch and bound with the combined spectral/polynomial upper bound as a
/// global cutoff.
pub fn max_transitive_bb(g: &Digraph, time_limit: Option<Duration>) -> SearchResult {
    let cutoff = best_bound(g).ok().map(|b| b.best as usize);
    max_transitive_bb_with(
        g,
        &SearchOptions {
            time_limit,
            cutoff,
            threads: 1,
        },
    )
}

pub fn max_transitive_bb_with(g: &Digraph, opts: &SearchOptions) -> SearchResult {
    let v = g.v();
    let order = branching_order(g);
    // relabel so bit i is the i-th vertex of the branching order
    let h = g.permuted(&order);
    let shared = Shared {
        best: AtomicUsize::new(0),
        nodes: AtomicU64::new(0),
        stop: AtomicBool::new(false),
        deadline: opts.time_limit.map(|t| Instant::now() + t),
        cutoff: opts.cutoff.unwrap_or(v).min(v),
    };

    let run_root = |root: usize| -> (Vec<usize>, u64) {
        let mut dfs = Dfs {
            g: &h,
            shared: &shared,
            chain: vec![root],
            best_chain: Vec::new(),
            local_nodes: 0,
        };
        dfs.expand(h.out_neighbors(root));
        (dfs.best_chain, dfs.local_nodes % 1024)
    };

    let mut results: Vec<(Vec<usize>, u64)> = if opts.threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
            .expect("thread pool");
        pool.install(|| (0..v).into_par_iter().map(run_root).collect())
    } else {
        (0..v).map(run_root).collect()
    };

    let nodes = shared.nodes.load(Ordering::Relaxed) + results.iter().map(|r| r.1).sum::<u64>();
    let time_limited = shared.stop.load(Ordering::Relaxed) && shared.best.load(Ordering::Relaxed) < shared.cutoff;
    results.sort_by_key(|r| std::cmp::Reverse(r.0.len()));
    let mut best = results.swap_remove(0).0;

    if opts.threads > 1 && !time_limited && !best.is_empty() {
        // the first chain of maximum size in sequential order, so that the
        // witness does not depend on scheduling
        let target = best.len();
        let seq = Shared {
            best: AtomicUsize::new(target - 1),
            nodes: AtomicU64::new(0),
            stop: AtomicBool::new(false),
            deadline: None,
            cutoff: target,
        };
        for root in 0..v {
            let mut dfs = Dfs {
                g: &h,
                shared: &seq,
                chain: vec![root],
                best_chain: Vec::new(),
                local_nodes: 0,
            };
            dfs.expand(h.out_neighbors(root));
            if dfs.best_chain.len() == target {
                best = dfs.best_chain;
                break;
            }
        }
    }

    // chain order has each vertex dominated by its successors' predecessors;
    // reverse so later vertices dominate earlier ones
    let witness: Vec<usize> = best.iter().rev().map(|&i| order[i]).collect();
    SearchResult {
        max_size: witness.len(),
        witness,
        nodes_explored: nodes,
        method: SearchMethod::BranchBound,
        time_limited,
    }
}

/// For one vertex outside the witness: how many witness vertices dominate
/// it and how many it dominates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VertexBalance {
    pub vertex: usize,
    pub dominated_by: usize,
    pub dominates: usize,
}

impl VertexBalance {
    pub fn is_balanced(&self) -> bool {
        self.dominated_by == self.dominates
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BalanceReport {
    pub vertices: Vec<VertexBalance>,
    pub all_balanced: bool,
}

/// Per outside vertex domination counts against a transitive witness; all
/// balanced is exactly the case `‖Kχ‖² = s(s²-1)/3`.
pub fn balance_check(g: &Digraph, witness: &[usize]) -> Result<BalanceReport, SearchError> {
    if !verify_transitive(g, witness)? {
        return Err(SearchError::NotTransitive);
    }
    let set = BitSet::from_indices(g.v(), witness.iter().copied());
    let vertices: Vec<VertexBalance> = (0..g.v())
        .filter(|x| !set.contains(*x))
        .map(|x| VertexBalance {
            vertex: x,
            dominated_by: g.in_neighbors(x).intersection_count(&set),
            dominates: g.out_neighbors(x).intersection_count(&set),
        })
        .collect();
    let all_balanced = vertices.iter().all(VertexBalance::is_balanced);
    Ok(BalanceReport { vertices, all_balanced })
}
