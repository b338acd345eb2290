use super::intervals::{check_cycle_cut, cycle_graph, intervals};
use crate::graphcore::VertexSet;
use crate::{Error, Result};

/// A closed window `lo ..= hi` for a v-number.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Window {
    pub lo: usize,
    pub hi: usize,
}

impl Window {
    pub fn exact(v: usize) -> Window {
        Window { lo: v, hi: v }
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, v: usize) -> bool {
        self.lo <= v && v <= self.hi
    }
}

fn check_member(n: usize, s: VertexSet) -> Result<()> {
    if s.is_empty() {
        cycle_graph(n).map(|_| ())
    } else {
        check_cycle_cut(n, s)
    }
}

/// Window for `v_{P_S}(J_{C_n})`.
///
/// `S = ∅` and `|S| = 2` give the exact value `n - 2` (0 for the triangle).
/// For `|S| >= 3` the window depends on the number of singleton intervals:
/// none gives `n - |S|`, one gives `[n - |S|, n - |S| + 1]`, two or more give
/// `[n - |C_2| - 2, n - |C_2|]`.
pub fn localized_bounds(n: usize, s: VertexSet) -> Result<Window> {
    check_member(n, s)?;
    if n == 3 {
        return Ok(Window::exact(0));
    }
    if s.len() <= 2 {
        return Ok(Window::exact(n - 2));
    }
    let d = intervals(n, s)?;
    let k = s.len();
    Ok(match d.c1.len() {
        0 => Window::exact(n - k),
        1 => Window { lo: n - k, hi: n - k + 1 },
        _ => Window { lo: n - d.c2.len() - 2, hi: n - d.c2.len() },
    })
}

/// Window for `v(J_{C_n})`, `n >= 6`: exactly `2n/3` when `3 | n`, else
/// `⌈2n/3⌉ - 1 ..= ⌈2n/3⌉`. Smaller cycles have to be computed directly.
pub fn global_bounds(n: usize) -> Result<Window> {
    if n < 6 {
        return Err(Error::pre(format!("no closed form below n = 6 (got {n}); compute directly")));
    }
    let up = (2 * n).div_ceil(3);
    Ok(if n.is_multiple_of(3) { Window::exact(up) } else { Window { lo: up - 1, hi: up } })
}

/// Least weight `|A_1| + 2|A_2|` of a transversal of `Δ_S` on `C_n`, counted
/// directly: every vertex off `S` is covered, consecutive intervals are
/// joined by a pair, and a singleton interval meets two such pairs when
/// `|S| >= 3`. The empty set gives `n - 2`.
pub fn cycle_transversal_weight(n: usize, s: VertexSet) -> Result<usize> {
    check_member(n, s)?;
    if n == 3 {
        return Ok(0);
    }
    if s.is_empty() {
        return Ok(n - 2);
    }
    let d = intervals(n, s)?;
    Ok(n - s.len() + if s.len() >= 3 { d.c1.len() } else { 0 })
}
