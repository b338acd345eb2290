//! Named graph families and an exhaustive catalogue of small connected graphs.

use super::graph::Graph;
use crate::{Error, Result};

/// The path `1 - 2 - .. - n`.
pub fn path(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
    Graph::new(n, &edges)
}

/// The cycle on `[n]` with the wraparound edge `{n, 1}`; needs `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::pre(format!("a cycle needs at least 3 vertices, got {n}")));
    }
    let mut edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
    edges.push((1, n));
    Graph::new(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges)
}

/// Star with centre 1.
pub fn star(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (2..=n).map(|v| (1, v)).collect();
    Graph::new(n, &edges)
}

fn pair_index(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            pairs.push((u, v));
        }
    }
    pairs
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        let n = used.len();
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                prefix.push(v + 1);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// All permutations of `[n]` as image lists, in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    permutations(n)
}

/// One representative of every isomorphism class of connected graphs on `n`
/// vertices.
///
/// Labelled graphs are encoded as bitmasks over the pairs `{u < v}` and
/// scanned in increasing order; the first mask met in each class is its
/// representative. The whole orbit is then marked as seen. Practical up to
/// `n = 7`.
pub fn connected_graphs_up_to_iso(n: usize) -> Result<Vec<Graph>> {
    if n > 7 {
        return Err(Error::pre("isomorphism-class enumeration is limited to n <= 7"));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let pairs = pair_index(n);
    let m = pairs.len();
    let perms = permutations(n);
    let pair_pos = |u: usize, v: usize| {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        pairs.iter().position(|&p| p == (a, b)).unwrap()
    };
    // image of each pair bit under each permutation
    let images: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| pairs.iter().map(|&(u, v)| pair_pos(p[u - 1], p[v - 1])).collect())
        .collect();
    let mut seen = vec![false; 1usize << m];
    let mut out = Vec::new();
    for mask in 0..(1usize << m) {
        if seen[mask] {
            continue;
        }
        for img in &images {
            let mut t = 0usize;
            for (bit, &to) in img.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    t |= 1 << to;
                }
            }
            seen[t] = true;
        }
        let edges: Vec<_> = (0..m).filter(|b| mask >> b & 1 == 1).map(|b| pairs[b]).collect();
        let g = Graph::new(n, &edges)?;
        if g.is_connected() {
            out.push(g);
        }
    }
    Ok(out)
}

/// Every connected labelled graph on `n` vertices. Exponential; meant for `n <= 5`.
pub fn connected_labelled_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > 6 {
        return Err(Error::pre("labelled enumeration is limited to n <= 6"));
    }
    let pairs = pair_index(n);
    let mut out = Vec::new();
    for mask in 0..(1usize << pairs.len()) {
        let edges: Vec<_> = (0..pairs.len()).filter(|b| mask >> b & 1 == 1).map(|b| pairs[b]).collect();
        let g = Graph::new(n, &edges)?;
        if g.is_connected() {
            out.push(g);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts_match_known_sequence() {
        // connected unlabelled graphs: 1, 1, 2, 6, 21, 112
        let counts: Vec<usize> =
            (1..=6).map(|n| connected_graphs_up_to_iso(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn labelled_counts_match_known_sequence() {
        // connected labelled graphs: 1, 1, 4, 38, 728
        let counts: Vec<usize> = (1..=5).map(|n| connected_labelled_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 4, 38, 728]);
    }

    #[test]
    fn named_families() {
        assert_eq!(cycle(3).unwrap(), complete(3).unwrap());
        assert!(cycle(2).is_err());
        assert_eq!(path(4).unwrap().edges(), vec![(1, 2), (2, 3), (3, 4)]);
        assert_eq!(star(4).unwrap().edge_count(), 3);
        assert_eq!(all_permutations(3).len(), 6);
    }
}
