//! Closed-form genus and crosscap numbers of complete and complete bipartite
//! graphs, and recognition of those families.

use crate::graph::Graph;

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

pub fn kn_genus(n: usize) -> usize {
    if n < 3 {
        return 0;
    }
    ceil_div((n - 3) * n.saturating_sub(4), 12)
}

/// Crosscap number of `K_n`; `K_7` is the exception to the formula.
pub fn kn_crosscap(n: usize) -> usize {
    match n {
        0..=4 => 0,
        7 => 3,
        _ => ceil_div((n - 3) * (n - 4), 6),
    }
}

pub fn kmn_genus(m: usize, n: usize) -> usize {
    if m < 2 || n < 2 {
        return 0;
    }
    ceil_div((m - 2) * (n - 2), 4)
}

pub fn kmn_crosscap(m: usize, n: usize) -> usize {
    if m < 2 || n < 2 {
        return 0;
    }
    ceil_div((m - 2) * (n - 2), 2)
}

/// A graph recognised as a complete or complete bipartite graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Complete(usize),
    CompleteBipartite(usize, usize),
}

impl Family {
    pub fn genus(self) -> usize {
        match self {
            Family::Complete(n) => kn_genus(n),
            Family::CompleteBipartite(m, n) => kmn_genus(m, n),
        }
    }

    pub fn crosscap(self) -> usize {
        match self {
            Family::Complete(n) => kn_crosscap(n),
            Family::CompleteBipartite(m, n) => kmn_crosscap(m, n),
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Family::Complete(n) => write!(f, "K{n}"),
            Family::CompleteBipartite(m, n) => write!(f, "K{m},{n}"),
        }
    }
}

/// Recognises `K_n` and connected `K_{m,n}` (with `m <= n`).
pub fn recognize(g: &Graph) -> Option<Family> {
    let n = g.n();
    if n == 0 {
        return None;
    }
    if g.m() == n * (n - 1) / 2 {
        return Some(Family::Complete(n));
    }
    if !g.is_connected() || n < 2 {
        return None;
    }
    // 2-colour, then check every cross pair is an edge.
    let mut side = vec![u8::MAX; n];
    side[0] = 0;
    let mut stack = vec![0];
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if side[w] == u8::MAX {
                side[w] = 1 - side[u];
                stack.push(w);
            } else if side[w] == side[u] {
                return None;
            }
        }
    }
    let a = side.iter().filter(|&&s| s == 0).count();
    let b = n - a;
    (g.m() == a * b).then_some(Family::CompleteBipartite(a.min(b), a.max(b)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle};

    #[test]
    fn known_values() {
        let genus: Vec<usize> = (1..=12).map(kn_genus).collect();
        assert_eq!(genus, [0, 0, 0, 0, 1, 1, 1, 2, 3, 4, 5, 6]);
        let crosscap: Vec<usize> = (1..=10).map(kn_crosscap).collect();
        assert_eq!(crosscap, [0, 0, 0, 0, 1, 1, 3, 4, 5, 7]);
        assert_eq!(kmn_genus(3, 3), 1);
        assert_eq!(kmn_genus(3, 6), 1);
        assert_eq!(kmn_genus(4, 4), 1);
        assert_eq!(kmn_genus(5, 5), 3);
        assert_eq!(kmn_crosscap(3, 3), 1);
        assert_eq!(kmn_crosscap(4, 4), 2);
    }

    #[test]
    fn recognition() {
        assert_eq!(recognize(&complete(6)), Some(Family::Complete(6)));
        assert_eq!(
            recognize(&complete_bipartite(4, 2)),
            Some(Family::CompleteBipartite(2, 4))
        );
        assert_eq!(recognize(&cycle(4)), Some(Family::CompleteBipartite(2, 2)));
        assert_eq!(recognize(&cycle(5)), None);
        assert_eq!(Family::CompleteBipartite(3, 3).to_string(), "K3,3");
    }
}
