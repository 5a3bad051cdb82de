//! (2,3)-pebble game for generic rigidity in the plane.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PebbleResult {
    pub rank: usize,
    pub independent: bool,
    /// Whether each edge was accepted, in input order.
    pub accepted: Vec<bool>,
}

struct PebbleGame {
    pebbles: Vec<u8>,
    out: Vec<Vec<usize>>,
}

impl PebbleGame {
    fn new(n: usize) -> Self {
        Self {
            pebbles: vec![2; n],
            out: vec![Vec::new(); n],
        }
    }

    /// Moves one free pebble onto `start` by reversing a directed path,
    /// without taking pebbles from `keep`.
    fn fetch(&mut self, start: usize, keep: usize) -> bool {
        let n = self.pebbles.len();
        let mut parent = vec![usize::MAX; n];
        parent[start] = start;
        let mut stack = vec![start];
        let mut found = None;
        while let Some(x) = stack.pop() {
            if x != start && x != keep && self.pebbles[x] > 0 {
                found = Some(x);
                break;
            }
            for &y in &self.out[x] {
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    stack.push(y);
                }
            }
        }
        let Some(mut x) = found else {
            return false;
        };
        self.pebbles[x] -= 1;
        while x != start {
            let p = parent[x];
            let pos = self.out[p].iter().position(|&y| y == x).expect("path edge");
            self.out[p].swap_remove(pos);
            self.out[x].push(p);
            x = p;
        }
        self.pebbles[start] += 1;
        true
    }

    fn try_insert(&mut self, u: usize, v: usize) -> bool {
        while self.pebbles[u] + self.pebbles[v] < 4 {
            if !(self.fetch(u, v) || self.fetch(v, u)) {
                return false;
            }
        }
        if self.pebbles[u] > 0 {
            self.pebbles[u] -= 1;
            self.out[u].push(v);
        } else {
            self.pebbles[v] -= 1;
            self.out[v].push(u);
        }
        true
    }
}

/// Rank of `edges` in the generic 2D rigidity matroid on `n` vertices.
pub fn pebble_game_rank(edges: &[(usize, usize)], n: usize) -> PebbleResult {
    let mut game = PebbleGame::new(n);
    let accepted: Vec<bool> = edges.iter().map(|&(u, v)| u != v && game.try_insert(u, v)).collect();
    let rank = accepted.iter().filter(|&&a| a).count();
    PebbleResult {
        rank,
        independent: rank == edges.len(),
        accepted,
    }
}

pub fn is_laman(edges: &[(usize, usize)], n: usize) -> bool {
    n >= 2 && edges.len() == 2 * n - 3 && pebble_game_rank(edges, n).independent
}

/// Dependent as a whole, with every single-edge deletion independent of
/// full rank `2n - 3` and still touching every vertex.
pub fn is_laman_circuit(edges: &[(usize, usize)], n: usize) -> bool {
    if n < 4 || edges.len() != 2 * n - 2 || pebble_game_rank(edges, n).independent {
        return false;
    }
    (0..edges.len()).all(|skip| {
        let rest: Vec<(usize, usize)> = edges
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != skip)
            .map(|(_, &e)| e)
            .collect();
        let mut touched = vec![false; n];
        for &(a, b) in &rest {
            touched[a] = true;
            touched[b] = true;
        }
        touched.iter().all(|&t| t) && pebble_game_rank(&rest, n).rank == 2 * n - 3
    })
}
