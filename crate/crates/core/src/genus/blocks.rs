//! Biconnected components (Tarjan's edge-stack algorithm).

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A maximal 2-connected subgraph, or a bridge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    /// Vertices of the parent graph, sorted.
    pub vertices: Vec<usize>,
    /// The block as a graph on `0..vertices.len()`, labels inherited.
    pub graph: Graph,
}

impl Block {
    pub fn is_bridge(&self) -> bool {
        self.vertices.len() == 2
    }
}

struct Tarjan<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<(usize, usize)>,
    found: Vec<Vec<usize>>,
    cut: Vec<bool>,
}

impl Tarjan<'_> {
    fn visit(&mut self, u: usize, parent: Option<usize>) {
        self.time += 1;
        self.disc[u] = self.time;
        self.low[u] = self.time;
        let mut children = 0;
        for &w in self.g.neighbors(u) {
            if self.disc[w] == 0 {
                children += 1;
                self.stack.push((u, w));
                self.visit(w, Some(u));
                self.low[u] = self.low[u].min(self.low[w]);
                if self.low[w] >= self.disc[u] {
                    if parent.is_some() || children > 1 {
                        self.cut[u] = true;
                    }
                    let mut vs = Vec::new();
                    while let Some((a, b)) = self.stack.pop() {
                        vs.push(a);
                        vs.push(b);
                        if (a, b) == (u, w) {
                            break;
                        }
                    }
                    vs.sort_unstable();
                    vs.dedup();
                    self.found.push(vs);
                }
            } else if Some(w) != parent && self.disc[w] < self.disc[u] {
                self.stack.push((u, w));
                self.low[u] = self.low[u].min(self.disc[w]);
            }
        }
    }
}

/// Blocks of a connected graph, ordered by their smallest vertex. Every
/// edge lies in exactly one block.
pub fn blocks(g: &Graph) -> Result<Vec<Block>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(decompose(g).0)
}

pub fn cut_vertices(g: &Graph) -> Vec<usize> {
    decompose(g).1
}

/// Blocks and cut vertices of any graph; isolated vertices belong to no
/// block.
pub(crate) fn decompose(g: &Graph) -> (Vec<Block>, Vec<usize>) {
    let mut t = Tarjan {
        g,
        disc: vec![0; g.n()],
        low: vec![0; g.n()],
        time: 0,
        stack: Vec::new(),
        found: Vec::new(),
        cut: vec![false; g.n()],
    };
    for v in 0..g.n() {
        if t.disc[v] == 0 {
            t.visit(v, None);
        }
    }
    let mut found = t.found;
    found.sort();
    let blocks = found
        .into_iter()
        .map(|vertices| {
            let graph = g.induced(&vertices).expect("block vertices are valid");
            Block { vertices, graph }
        })
        .collect();
    let cut = (0..g.n()).filter(|&v| t.cut[v]).collect();
    (blocks, cut)
}
