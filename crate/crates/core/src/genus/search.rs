//! Exact embedding search: edges are inserted one at a time into a growing
//! cellular map, branching over the corners that receive each new edge (and,
//! for nonorientable search, the sign of every non-tree edge).
//!
//! The Euler genus of the partial map never decreases, which bounds the
//! search. A second bound: if two endpoints of a future edge already share no
//! face, some later insertion has to merge faces, costing 2.
//!
//! Vertices are added in maximum-adjacency order from a vertex of largest
//! degree; vertices that only hang off trees are stripped first and put back
//! at the end (they do not change the genus). The cyclic order of the first
//! three darts at the start vertex is fixed, which removes mirror images.

use std::time::{Duration, Instant};

use serde::Serialize;

use super::rotation::{dart, dart_ends, rev, walk_step, RotationSystem, SignedRotationSystem};
use crate::graph::Graph;

/// Work limit for one level of the search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Budget {
    pub max_nodes: u64,
    pub max_time: Duration,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_nodes: 100_000_000,
            max_time: Duration::from_secs(600),
        }
    }
}

impl Budget {
    pub fn nodes(max_nodes: u64) -> Self {
        Budget {
            max_nodes,
            ..Budget::default()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Mode {
    /// Orientable maps with Euler genus at most the bound.
    Orientable,
    /// Nonorientable maps with Euler genus at most the bound, or orientable
    /// ones at most one below it (a crosscap can always be added).
    Nonorientable,
}

#[derive(Clone, Debug)]
pub(crate) enum Outcome {
    Found(SignedRotationSystem),
    Exhausted,
    OutOfBudget,
}

#[derive(Clone, Debug)]
pub(crate) struct LevelRun {
    pub outcome: Outcome,
    pub nodes: u64,
    pub elapsed: Duration,
}

#[derive(Clone, Copy, Debug)]
enum Step {
    /// Edge from a placed vertex to a new one.
    Pendant { edge: usize, from: usize, new: usize },
    /// Edge between two placed vertices.
    Chord { edge: usize, a: usize, b: usize },
}

struct Plan {
    start: usize,
    steps: Vec<Step>,
    /// For each step, the chords of later steps whose endpoints are both
    /// placed once the step is done.
    pending: Vec<Vec<(usize, usize)>>,
    /// Stripped tree edges `(present, new)` in reattachment order.
    deferred: Vec<(usize, usize)>,
}

fn plan(g: &Graph) -> Plan {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut alive = vec![true; n];
    let mut stripped = Vec::new();
    let mut stack: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    while let Some(x) = stack.pop() {
        if !alive[x] || deg[x] != 1 {
            continue;
        }
        let y = *g.neighbors(x).iter().find(|&&y| alive[y]).expect("degree one");
        alive[x] = false;
        deg[x] = 0;
        deg[y] -= 1;
        stripped.push((y, x));
        if deg[y] == 1 {
            stack.push(y);
        }
    }
    stripped.reverse();

    let core: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    let start = core
        .iter()
        .copied()
        .max_by_key(|&v| (deg[v], std::cmp::Reverse(v)))
        .unwrap_or(0);
    let mut placed_at = vec![usize::MAX; n];
    let mut order = vec![start];
    let mut links = vec![0usize; n];
    let mut steps = Vec::new();
    placed_at[start] = 0;
    for &w in g.neighbors(start) {
        links[w] += 1;
    }
    while order.len() < core.len() {
        let w = core
            .iter()
            .copied()
            .filter(|&v| placed_at[v] == usize::MAX)
            .max_by_key(|&v| (links[v], deg[v], std::cmp::Reverse(v)))
            .expect("unplaced core vertex");
        let mut earlier: Vec<usize> = g
            .neighbors(w)
            .iter()
            .copied()
            .filter(|&x| alive[x] && placed_at[x] != usize::MAX)
            .collect();
        earlier.sort_by_key(|&x| placed_at[x]);
        let from = earlier[0];
        placed_at[w] = steps.len();
        steps.push(Step::Pendant {
            edge: g.edge_index(from, w).expect("edge"),
            from,
            new: w,
        });
        for &x in &earlier[1..] {
            steps.push(Step::Chord {
                edge: g.edge_index(x, w).expect("edge"),
                a: w,
                b: x,
            });
        }
        order.push(w);
        for &x in g.neighbors(w) {
            links[x] += 1;
        }
    }

    // A vertex counts as placed after its pendant step.
    let placed_after = |v: usize| if v == start { 0 } else { placed_at[v] };
    let mut pending = vec![Vec::new(); steps.len()];
    for (j, step) in steps.iter().enumerate() {
        if let Step::Chord { a, b, .. } = *step {
            let ready = placed_after(a).max(placed_after(b));
            for p in pending.iter_mut().take(j).skip(ready) {
                p.push((a, b));
            }
        }
    }
    Plan {
        start,
        steps,
        pending,
        deferred: stripped,
    }
}

struct Searcher<'a> {
    g: &'a Graph,
    mode: Mode,
    bound: usize,
    plan: Plan,
    tail: Vec<usize>,
    next: Vec<usize>,
    prev: Vec<usize>,
    signs: Vec<i8>,
    deg: Vec<usize>,
    first: Vec<usize>,
    darts: Vec<usize>,
    vertices: usize,
    negative: usize,
    // face tracing scratch
    orbit: Vec<u32>,
    face_of_orbit: Vec<u32>,
    corner_face: Vec<u32>,
    mask: Vec<u128>,
    faces: usize,
    // accounting
    nodes: u64,
    budget: Budget,
    started: Instant,
    out_of_budget: bool,
    solution: Option<SignedRotationSystem>,
}

impl<'a> Searcher<'a> {
    fn new(g: &'a Graph, mode: Mode, bound: usize, budget: Budget) -> Self {
        let m = g.m();
        let (tail, _) = dart_ends(g);
        Searcher {
            g,
            mode,
            bound,
            plan: plan(g),
            tail,
            next: vec![0; 2 * m],
            prev: vec![0; 2 * m],
            signs: vec![1; m],
            deg: vec![0; g.n()],
            first: vec![usize::MAX; g.n()],
            darts: Vec::with_capacity(2 * m),
            vertices: 1,
            negative: 0,
            orbit: vec![u32::MAX; 4 * m],
            face_of_orbit: Vec::with_capacity(4 * m),
            corner_face: vec![0; 2 * m],
            mask: vec![0; g.n()],
            faces: 1,
            nodes: 0,
            budget,
            started: Instant::now(),
            out_of_budget: false,
            solution: None,
        }
    }

    fn link(&mut self, d: usize, after: Option<usize>) {
        let v = self.tail[d];
        match after {
            Some(c) => {
                let n = self.next[c];
                self.next[d] = n;
                self.prev[d] = c;
                self.prev[n] = d;
                self.next[c] = d;
            }
            None => {
                self.next[d] = d;
                self.prev[d] = d;
                self.first[v] = d;
            }
        }
        self.deg[v] += 1;
        self.darts.push(d);
    }

    fn unlink(&mut self, d: usize) {
        let v = self.tail[d];
        self.deg[v] -= 1;
        if self.deg[v] > 0 {
            let (p, n) = (self.prev[d], self.next[d]);
            self.next[p] = n;
            self.prev[n] = p;
            if self.first[v] == d {
                self.first[v] = n;
            }
        }
        let popped = self.darts.pop();
        debug_assert_eq!(popped, Some(d));
    }

    /// Corners at `v` where a new dart may go; `None` for a bare vertex.
    fn corners(&self, v: usize) -> Vec<Option<usize>> {
        if self.deg[v] == 0 {
            return vec![None];
        }
        if v == self.plan.start && self.deg[v] == 2 {
            return vec![Some(self.first[v])];
        }
        let mut out = Vec::with_capacity(self.deg[v]);
        let d0 = self.first[v];
        let mut d = d0;
        loop {
            out.push(Some(d));
            d = self.next[d];
            if d == d0 {
                break;
            }
        }
        out
    }

    fn trace(&mut self) {
        let signed = self.mode == Mode::Nonorientable;
        for &d in &self.darts {
            self.orbit[2 * d] = u32::MAX;
            self.orbit[2 * d + 1] = u32::MAX;
        }
        let mut count = 0u32;
        if !signed {
            for i in 0..self.darts.len() {
                let d = self.darts[i];
                if self.orbit[2 * d] != u32::MAX {
                    continue;
                }
                let mut x = d;
                loop {
                    self.orbit[2 * x] = count;
                    x = self.next[rev(x)];
                    if x == d {
                        break;
                    }
                }
                count += 1;
            }
            self.faces = count as usize;
            for &c in &self.darts {
                self.corner_face[c] = self.orbit[2 * rev(c)];
            }
        } else {
            self.face_of_orbit.clear();
            let mut fresh = 0u32;
            for i in 0..self.darts.len() {
                for f in 0..2 {
                    let s0 = 2 * self.darts[i] + f;
                    if self.orbit[s0] != u32::MAX {
                        continue;
                    }
                    let mut s = s0;
                    loop {
                        self.orbit[s] = count;
                        s = walk_step(&self.next, &self.prev, &self.signs, s);
                        if s == s0 {
                            break;
                        }
                    }
                    // The reverse walk gets traced later or was traced
                    // before; either way both orbits map to one face.
                    let d = s0 >> 1;
                    let flipped = (s0 & 1) ^ usize::from(self.signs[d >> 1] < 0);
                    let partner = self.orbit[(rev(d) << 1) | (flipped ^ 1)];
                    let face = if partner == u32::MAX || partner == count {
                        fresh += 1;
                        fresh - 1
                    } else {
                        self.face_of_orbit[partner as usize]
                    };
                    self.face_of_orbit.push(face);
                    count += 1;
                }
            }
            self.faces = count as usize / 2;
            for &c in &self.darts {
                let neg = usize::from(self.signs[c >> 1] < 0);
                let o = self.orbit[2 * rev(c) + neg];
                self.corner_face[c] = self.face_of_orbit[o as usize];
            }
        }
        for &d in &self.darts {
            self.mask[self.tail[d]] = 0;
        }
        for &d in &self.darts {
            let f = self.corner_face[d];
            if f < 128 {
                self.mask[self.tail[d]] |= 1u128 << f;
            } else {
                // Too many faces to track: disable the co-face bound.
                self.mask[self.tail[d]] = u128::MAX;
            }
        }
    }

    fn euler_genus(&self) -> usize {
        let e = self.darts.len() / 2;
        (2 + e as i64 - self.vertices as i64 - self.faces as i64) as usize
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes >= self.budget.max_nodes
            || (self.nodes & 0x3fff == 0 && self.started.elapsed() >= self.budget.max_time)
        {
            self.out_of_budget = true;
        }
        !self.out_of_budget
    }

    fn pending_ok(&self, i: usize) -> bool {
        self.plan.pending[i]
            .iter()
            .all(|&(a, b)| self.mask[a] & self.mask[b] != 0)
    }

    /// Depth-first search over steps `i..`; true once a solution is stored
    /// or the budget runs out.
    fn dfs(&mut self, i: usize) -> bool {
        if i == self.plan.steps.len() {
            return self.accept_leaf();
        }
        let step = self.plan.steps[i];
        let (edge, u, w) = match step {
            Step::Pendant { edge, from, new } => (edge, from, new),
            Step::Chord { edge, a, b } => (edge, a, b),
        };
        let du = dart(self.g, u, w).expect("edge");
        let dw = rev(du);
        debug_assert_eq!(du >> 1, edge);
        let cu = self.corners(u);
        let cw = self.corners(w);
        let sign_choices: &[i8] = match (step, self.mode) {
            (Step::Chord { .. }, Mode::Nonorientable) => &[1, -1],
            _ => &[1],
        };
        let mut children = Vec::with_capacity(cu.len() * cw.len() * sign_choices.len());
        for &a in &cu {
            for &b in &cw {
                let same = match (a, b) {
                    (Some(a), Some(b)) => self.corner_face[a] == self.corner_face[b],
                    _ => true,
                };
                for (k, &s) in sign_choices.iter().enumerate() {
                    children.push((u8::from(!same), k, a, b, s));
                }
            }
        }
        children.sort_by_key(|c| (c.0, c.1));
        let is_pendant = matches!(step, Step::Pendant { .. });
        for (_, _, a, b, s) in children {
            if !self.tick() {
                return true;
            }
            self.signs[edge] = s;
            if s < 0 {
                self.negative += 1;
            }
            self.link(du, a);
            self.link(dw, b);
            if is_pendant {
                self.vertices += 1;
            }
            self.trace();
            let eg = self.euler_genus();
            let viable = eg <= self.bound && (eg + 2 <= self.bound || self.pending_ok(i));
            if viable && self.dfs(i + 1) {
                return true;
            }
            if is_pendant {
                self.vertices -= 1;
            }
            self.unlink(dw);
            self.unlink(du);
            if s < 0 {
                self.negative -= 1;
            }
            self.signs[edge] = 1;
        }
        false
    }

    fn accept_leaf(&mut self) -> bool {
        let eg = self.euler_genus();
        let accepted = match self.mode {
            Mode::Orientable => eg <= self.bound,
            Mode::Nonorientable if self.negative > 0 => eg <= self.bound,
            Mode::Nonorientable => eg < self.bound && self.add_twist(),
        };
        if accepted {
            self.store_solution();
        }
        accepted
    }

    /// Twists one chord of an orientable map so that two faces merge into
    /// one, giving a nonorientable map of Euler genus one higher.
    fn add_twist(&mut self) -> bool {
        let faces = self.faces;
        for step in self.plan.steps.clone() {
            if let Step::Chord { edge, .. } = step {
                self.signs[edge] = -1;
                self.trace();
                if self.faces + 1 == faces {
                    self.negative += 1;
                    return true;
                }
                self.signs[edge] = 1;
            }
        }
        self.trace();
        false
    }

    fn store_solution(&mut self) {
        let mut next = self.next.clone();
        let mut prev = self.prev.clone();
        for &(y, x) in &self.plan.deferred {
            let dy = dart(self.g, y, x).expect("edge");
            let dx = rev(dy);
            if self.deg[y] == 0 {
                next[dy] = dy;
                prev[dy] = dy;
                self.first[y] = dy;
            } else {
                let c = self.first[y];
                let n = next[c];
                next[dy] = n;
                prev[dy] = c;
                prev[n] = dy;
                next[c] = dy;
            }
            next[dx] = dx;
            prev[dx] = dx;
            self.first[x] = dx;
            self.deg[y] += 1;
            self.deg[x] += 1;
        }
        let rotation = RotationSystem::from_dart_links(self.g, &next);
        self.solution =
            Some(SignedRotationSystem::new(self.g, rotation, self.signs.clone()).expect("search keeps signs valid"));
    }
}

/// Searches for an embedding of the connected graph `g` with Euler genus at
/// most `bound` (see [`Mode`]).
pub(crate) fn search_level(g: &Graph, mode: Mode, bound: usize, budget: Budget) -> LevelRun {
    let started = Instant::now();
    let mut s = Searcher::new(g, mode, bound, budget);
    if s.plan.steps.is_empty() {
        // A tree: the planar embedding is found at once.
        s.store_solution();
        if mode == Mode::Nonorientable && bound == 0 {
            s.solution = None;
        }
    } else {
        s.trace();
        s.dfs(0);
    }
    let outcome = match (s.solution.take(), s.out_of_budget) {
        (Some(sol), _) => Outcome::Found(sol),
        (None, true) => Outcome::OutOfBudget,
        (None, false) => Outcome::Exhausted,
    };
    LevelRun {
        outcome,
        nodes: s.nodes,
        elapsed: started.elapsed(),
    }
}

#[cfg(test)]
mod tests {
    use super::super::rotation::trace_signed_faces;
    use super::*;
    use crate::graph::{complete, complete_bipartite};

    fn found(run: &LevelRun) -> &SignedRotationSystem {
        match &run.outcome {
            Outcome::Found(s) => s,
            other => panic!("expected an embedding, got {other:?}"),
        }
    }

    #[test]
    fn k5_is_not_planar_but_toroidal() {
        let g = complete(5);
        let run = search_level(&g, Mode::Orientable, 0, Budget::default());
        assert!(matches!(run.outcome, Outcome::Exhausted));
        let run = search_level(&g, Mode::Orientable, 2, Budget::default());
        let t = trace_signed_faces(&g, found(&run)).unwrap();
        assert!(t.orientable);
        assert_eq!(t.euler_genus, 2);
    }

    #[test]
    fn k5_in_the_projective_plane() {
        let g = complete(5);
        let run = search_level(&g, Mode::Nonorientable, 1, Budget::default());
        let t = trace_signed_faces(&g, found(&run)).unwrap();
        assert!(!t.orientable);
        assert_eq!(t.euler_genus, 1);
    }

    #[test]
    fn k33_with_pendant_paths() {
        let g = complete_bipartite(3, 3);
        let mut edges = g.edges().to_vec();
        edges.extend([(0, 6), (6, 7), (7, 8)]);
        let h = Graph::from_edges(9, edges).unwrap();
        let run = search_level(&h, Mode::Orientable, 0, Budget::default());
        assert!(matches!(run.outcome, Outcome::Exhausted));
        let run = search_level(&h, Mode::Orientable, 2, Budget::default());
        let t = trace_signed_faces(&h, found(&run)).unwrap();
        assert_eq!(t.euler_genus, 2);
    }

    #[test]
    fn tiny_budget_runs_out() {
        let run = search_level(&complete(7), Mode::Orientable, 0, Budget::nodes(10));
        assert!(matches!(run.outcome, Outcome::OutOfBudget));
    }
}
