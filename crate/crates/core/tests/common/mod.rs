//! Brute-force oracles over plain boolean adjacency matrices. Nothing in
//! here goes through the bit-row code paths under test.

#![allow(dead_code)]

use quadtour_core::Tournament;

pub type Adj = Vec<Vec<bool>>;

pub fn adj(t: &Tournament) -> Adj {
    let n = t.n();
    let mut a = vec![vec![false; n]; n];
    for (u, v) in t.arcs() {
        a[u][v] = true;
    }
    a
}

fn out_common(a: &Adj, u: usize, v: usize) -> Vec<usize> {
    (0..a.len()).filter(|&w| a[u][w] && a[v][w]).collect()
}

fn in_common(a: &Adj, u: usize, v: usize) -> Vec<usize> {
    (0..a.len()).filter(|&w| a[w][u] && a[w][v]).collect()
}

/// First pair `u < v` with a unit out- (or in-) overlap.
pub fn first_failing(a: &Adj, out: bool) -> Option<(usize, usize, Vec<usize>)> {
    let n = a.len();
    for u in 0..n {
        for v in u + 1..n {
            let c = if out { out_common(a, u, v) } else { in_common(a, u, v) };
            if c.len() == 1 {
                return Some((u, v, c));
            }
        }
    }
    None
}

pub fn out_quad(a: &Adj) -> bool {
    first_failing(a, true).is_none()
}

pub fn in_quad(a: &Adj) -> bool {
    first_failing(a, false).is_none()
}

pub fn quad(a: &Adj) -> bool {
    out_quad(a) && in_quad(a)
}

pub fn dominates_mask(a: &Adj, mask: u32) -> bool {
    let n = a.len();
    (0..n).all(|v| {
        mask >> v & 1 == 1 || (0..n).any(|s| mask >> s & 1 == 1 && a[s][v])
    })
}

/// γ by scanning every subset.
pub fn gamma(a: &Adj) -> usize {
    let n = a.len();
    (1u32..1 << n)
        .filter(|&m| dominates_mask(a, m))
        .map(|m| m.count_ones() as usize)
        .min()
        .unwrap()
}

pub fn reachable(a: &Adj, from: usize) -> Vec<bool> {
    let n = a.len();
    let mut seen = vec![false; n];
    let mut stack = vec![from];
    seen[from] = true;
    while let Some(u) = stack.pop() {
        for v in 0..n {
            if a[u][v] && !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen
}

pub fn strongly_connected(a: &Adj) -> bool {
    (0..a.len()).all(|u| reachable(a, u).iter().all(|&r| r))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = vec![];
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Isomorphism by trying every bijection.
pub fn isomorphic(a: &Adj, b: &Adj) -> bool {
    let n = a.len();
    n == b.len()
        && permutations(n).iter().any(|p| {
            (0..n).all(|u| (0..n).all(|v| a[u][v] == b[p[u]][p[v]]))
        })
}

/// Undirected edge lists under every relabeling.
pub fn graphs_isomorphic(n: usize, e1: &[(usize, usize)], e2: &[(usize, usize)]) -> bool {
    if e1.len() != e2.len() {
        return false;
    }
    let has = |e: &[(usize, usize)], x: usize, y: usize| {
        e.contains(&(x.min(y), x.max(y)))
    };
    permutations(n)
        .iter()
        .any(|p| e1.iter().all(|&(x, y)| has(e2, p[x], p[y])))
}

/// Ordered pairs `(i, j)` of the symbol with `j - i ≡ m (mod n)`; this is
/// `|O(0) ∩ O(m)|` in the rotational tournament.
pub fn difference_count(n: usize, members: &[usize], m: usize) -> usize {
    members
        .iter()
        .flat_map(|&i| members.iter().map(move |&j| (i, j)))
        .filter(|&(i, j)| i != j && (j + n - i) % n == m)
        .count()
}
