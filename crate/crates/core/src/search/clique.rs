//! Bitset branch and bound for maximum cliques with a greedy coloring bound.

use std::time::{Duration, Instant};

use super::bitset::BitSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Stop {
    Exhausted,
    TargetReached,
    NodeLimit,
    TimeLimit,
}

pub(crate) struct Limits {
    pub max_nodes: Option<u64>,
    pub deadline: Option<Instant>,
}

pub(crate) struct Outcome {
    /// Largest clique found that beats `floor`, in caller indices.
    pub clique: Option<Vec<usize>>,
    pub stop: Stop,
    pub nodes: u64,
}

struct Solver<'a> {
    adj: &'a [BitSet],
    best: usize,
    best_clique: Option<Vec<usize>>,
    target: usize,
    nodes: u64,
    limits: &'a Limits,
    stop: Option<Stop>,
}

impl Solver<'_> {
    fn expand(&mut self, clique: &mut Vec<usize>, mut cand: BitSet) {
        self.nodes += 1;
        if let Some(max) = self.limits.max_nodes {
            if self.nodes > max {
                self.stop = Some(Stop::NodeLimit);
                return;
            }
        }
        if self.nodes % 1024 == 0 {
            if let Some(deadline) = self.limits.deadline {
                if Instant::now() >= deadline {
                    self.stop = Some(Stop::TimeLimit);
                    return;
                }
            }
        }
        let (order, colors) = self.color(&cand, clique.len());
        let mut next = BitSet::new(cand.capacity());
        for idx in (0..order.len()).rev() {
            if clique.len() + colors[idx] <= self.best {
                return;
            }
            let v = order[idx];
            clique.push(v);
            cand.intersection_into(&self.adj[v], &mut next);
            if next.is_empty() {
                if clique.len() > self.best {
                    self.best = clique.len();
                    self.best_clique = Some(clique.clone());
                    if self.best >= self.target {
                        self.stop = Some(Stop::TargetReached);
                    }
                }
            } else {
                self.expand(clique, next.clone());
            }
            clique.pop();
            if self.stop.is_some() {
                return;
            }
            cand.remove(v);
        }
    }

    /// Greedy sequential coloring; returns vertices whose color could still
    /// lead to an improvement, in nondecreasing color order.
    fn color(&self, cand: &BitSet, depth: usize) -> (Vec<usize>, Vec<usize>) {
        let kmin = (self.best + 1).saturating_sub(depth).max(1);
        let mut order = Vec::new();
        let mut colors = Vec::new();
        let mut uncolored = cand.clone();
        let mut color = 1;
        while !uncolored.is_empty() {
            let mut q = uncolored.clone();
            while let Some(v) = q.first() {
                q.remove(v);
                q.difference_with(&self.adj[v]);
                uncolored.remove(v);
                if color >= kmin {
                    order.push(v);
                    colors.push(color);
                }
            }
            color += 1;
        }
        (order, colors)
    }
}

/// Degeneracy order: repeatedly peel a minimum-degree vertex. Returned with
/// the last peeled vertex first.
fn degeneracy_order(adj: &[BitSet]) -> Vec<usize> {
    let n = adj.len();
    let mut degree: Vec<usize> = adj.iter().map(BitSet::len).collect();
    let mut removed = vec![false; n];
    let mut peeled = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| degree[v])
            .expect("vertex left");
        removed[v] = true;
        peeled.push(v);
        for u in adj[v].iter() {
            if !removed[u] {
                degree[u] -= 1;
            }
        }
    }
    peeled.reverse();
    peeled
}

/// Finds a clique larger than `floor`, stopping early once one of size
/// `target` is found. `floor = 0` finds a maximum clique outright.
pub(crate) fn max_clique(adj: &[BitSet], floor: usize, target: usize, limits: &Limits) -> Outcome {
    let n = adj.len();
    if n == 0 || floor >= target {
        return Outcome {
            clique: None,
            stop: if floor >= target {
                Stop::TargetReached
            } else {
                Stop::Exhausted
            },
            nodes: 0,
        };
    }
    let order = degeneracy_order(adj);
    let mut position = vec![0; n];
    for (new, &old) in order.iter().enumerate() {
        position[old] = new;
    }
    let relabeled: Vec<BitSet> = order
        .iter()
        .map(|&old| {
            let mut s = BitSet::new(n);
            for u in adj[old].iter() {
                s.insert(position[u]);
            }
            s
        })
        .collect();
    let mut solver = Solver {
        adj: &relabeled,
        best: floor,
        best_clique: None,
        target,
        nodes: 0,
        limits,
        stop: None,
    };
    solver.expand(&mut Vec::new(), BitSet::full(n));
    Outcome {
        clique: solver
            .best_clique
            .map(|c| c.into_iter().map(|v| order[v]).collect()),
        stop: solver.stop.unwrap_or(Stop::Exhausted),
        nodes: solver.nodes,
    }
}

pub(crate) fn deadline(max_time: Option<Duration>, start: Instant) -> Option<Instant> {
    max_time.and_then(|t| start.checked_add(t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn unlimited() -> Limits {
        Limits {
            max_nodes: None,
            deadline: None,
        }
    }

    fn brute_force(adj: &[BitSet]) -> usize {
        let n = adj.len();
        let mut best = 0;
        for mask in 0u32..(1 << n) {
            let vs: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            let ok = vs
                .iter()
                .enumerate()
                .all(|(a, &u)| vs[a + 1..].iter().all(|&w| adj[u].contains(w)));
            if ok {
                best = best.max(vs.len());
            }
        }
        best
    }

    #[test]
    fn matches_brute_force_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..60 {
            let n = rng.gen_range(1..=14);
            let p: f64 = rng.gen_range(0.1..0.9);
            let mut adj = vec![BitSet::new(n); n];
            for i in 0..n {
                for j in i + 1..n {
                    if rng.gen_bool(p) {
                        adj[i].insert(j);
                        adj[j].insert(i);
                    }
                }
            }
            let out = max_clique(&adj, 0, usize::MAX, &unlimited());
            let c = out.clique.unwrap();
            assert_eq!(out.stop, Stop::Exhausted);
            assert_eq!(c.len(), brute_force(&adj));
            for (a, &u) in c.iter().enumerate() {
                for &w in &c[a + 1..] {
                    assert!(adj[u].contains(w));
                }
            }
        }
    }

    #[test]
    fn floor_target_and_node_limit() {
        let n = 6;
        let mut adj = vec![BitSet::new(n); n];
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    adj[i].insert(j);
                }
            }
        }
        assert!(max_clique(&adj, 6, 10, &unlimited()).clique.is_none());
        let hit = max_clique(&adj, 0, 6, &unlimited());
        assert_eq!(hit.stop, Stop::TargetReached);
        let limited = Limits {
            max_nodes: Some(1),
            deadline: None,
        };
        assert_eq!(max_clique(&adj, 0, 99, &limited).stop, Stop::NodeLimit);
    }
}
