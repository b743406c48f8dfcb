//! Exact search kernel shared by the vertex and edge modes.
//!
//! The domain is `0..len` (vertices or edge indices) and the group is given as
//! its non-identity permutations of the domain. Elements are assigned in order
//! of descending orbit size, label values follow restricted growth, and each
//! node keeps the permutations still consistent with the partial labeling. A
//! branch dies once some consistent permutation has all of its moved points
//! assigned; a branch succeeds once no permutation is consistent.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::SolverConfig;
use crate::error::{Error, Result};

const UNSET: u32 = u32::MAX;

/// Smallest `d` admitting a distinguishing labeling, and one such labeling.
pub(crate) fn minimize(len: usize, perms: &[Vec<u32>], config: &SolverConfig) -> Result<(usize, Vec<u32>)> {
    if perms.is_empty() {
        return Ok((1, vec![0; len]));
    }
    let mut kernel = Kernel::new(len, perms, config.node_budget);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    // A faithful action always admits the all-distinct labeling.
    for d in 2..=len.max(1) {
        if let Some(hit) = random_hit(len, perms, d, config.random_tries, &mut rng) {
            return Ok((d, hit));
        }
        if let Some(found) = kernel.solve(d)? {
            return Ok((d, found));
        }
    }
    unreachable!("all-distinct labeling breaks every non-identity permutation")
}

fn breaks_all(perms: &[Vec<u32>], labels: &[u32]) -> bool {
    perms.iter().all(|p| p.iter().enumerate().any(|(x, &y)| labels[x] != labels[y as usize]))
}

fn random_hit(len: usize, perms: &[Vec<u32>], d: usize, tries: usize, rng: &mut ChaCha8Rng) -> Option<Vec<u32>> {
    let mut labels = vec![0u32; len];
    for _ in 0..tries {
        for l in labels.iter_mut() {
            *l = rng.random_range(0..d as u32);
        }
        if breaks_all(perms, &labels) {
            return Some(labels);
        }
    }
    None
}

struct Kernel<'a> {
    perms: &'a [Vec<u32>],
    inverses: Vec<Vec<u32>>,
    order: Vec<usize>,
    pos: Vec<usize>,
    /// Number of assigned elements after which every moved point of the permutation is labeled.
    settled_at: Vec<usize>,
    labels: Vec<u32>,
    budget: u64,
    nodes: u64,
}

impl<'a> Kernel<'a> {
    fn new(len: usize, perms: &'a [Vec<u32>], budget: u64) -> Self {
        let inverses = perms
            .iter()
            .map(|p| {
                let mut inv = vec![0u32; len];
                for (x, &y) in p.iter().enumerate() {
                    inv[y as usize] = x as u32;
                }
                inv
            })
            .collect();

        let orbit_size = orbit_sizes(len, perms);
        let mut order: Vec<usize> = (0..len).collect();
        order.sort_by_key(|&x| (std::cmp::Reverse(orbit_size[x]), x));
        let mut pos = vec![0; len];
        for (k, &x) in order.iter().enumerate() {
            pos[x] = k;
        }
        let settled_at = perms
            .iter()
            .map(|p| {
                p.iter().enumerate().filter(|(x, &y)| *x != y as usize).map(|(x, _)| pos[x] + 1).max().unwrap_or(0)
            })
            .collect();
        Kernel { perms, inverses, order, pos, settled_at, labels: vec![UNSET; len], budget, nodes: 0 }
    }

    fn solve(&mut self, d: usize) -> Result<Option<Vec<u32>>> {
        self.labels.fill(UNSET);
        let all: Vec<u32> = (0..self.perms.len() as u32).collect();
        if self.descend(0, &all, 0, d as u32)? {
            for l in self.labels.iter_mut().filter(|l| **l == UNSET) {
                *l = 0;
            }
            Ok(Some(self.labels.clone()))
        } else {
            Ok(None)
        }
    }

    /// `used` is one more than the largest label assigned so far.
    fn descend(&mut self, k: usize, survivors: &[u32], used: u32, d: u32) -> Result<bool> {
        if survivors.is_empty() {
            return Ok(true);
        }
        if k == self.order.len() {
            return Ok(false);
        }
        let x = self.order[k];
        let top = (used + 1).min(d);
        let mut next = Vec::with_capacity(survivors.len());
        for l in 0..top {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::BudgetExceeded { budget: self.budget });
            }
            self.labels[x] = l;
            next.clear();
            let mut settled = false;
            for &s in survivors {
                if self.consistent(s as usize, x, k) {
                    settled |= self.settled_at[s as usize] <= k + 1;
                    next.push(s);
                }
            }
            if settled {
                continue;
            }
            if self.descend(k + 1, &next, used.max(l + 1), d)? {
                return Ok(true);
            }
        }
        self.labels[x] = UNSET;
        Ok(false)
    }

    /// Checks the constraints that became fully labeled when `x` was assigned at depth `k`.
    #[inline]
    fn consistent(&self, s: usize, x: usize, k: usize) -> bool {
        let l = self.labels[x];
        let fwd = self.perms[s][x] as usize;
        if self.pos[fwd] <= k && self.labels[fwd] != l {
            return false;
        }
        let back = self.inverses[s][x] as usize;
        !(self.pos[back] <= k && self.labels[back] != l)
    }
}

fn orbit_sizes(len: usize, perms: &[Vec<u32>]) -> Vec<usize> {
    // union-find over the generators' cycles; the full group is given so one pass suffices
    let mut parent: Vec<usize> = (0..len).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for p in perms {
        for (x, &y) in p.iter().enumerate() {
            let (a, b) = (find(&mut parent, x), find(&mut parent, y as usize));
            if a != b {
                parent[a] = b;
            }
        }
    }
    let mut size = vec![0; len];
    for x in 0..len {
        let r = find(&mut parent, x);
        size[r] += 1;
    }
    (0..len).map(|x| size[find(&mut parent, x)]).collect()
}
