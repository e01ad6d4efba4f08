//! Rotation systems and face tracing.
//!
//! Darts are indexed from edges: for edge `e = (u, v)` with `u < v` (the
//! order of [`Graph::edges`]), dart `2e` runs `u -> v` and `2e + 1` runs
//! `v -> u`. A rotation gives, for every vertex, the cyclic order of its
//! outgoing darts.
//!
//! Faces are traced with the rule: arriving at `v` along dart `d`, leave
//! along the successor of `rev(d)` in the rotation at `v`. For signed
//! rotations the walk carries an orientation bit that flips on every edge of
//! sign `-`; while it is flipped the predecessor is used instead of the
//! successor. Every face of a signed map is traced exactly twice (once per
//! direction), so the face count is half the number of walk orbits.
//! A signed rotation whose signs can be switched to all `+` at a set of
//! vertices describes an orientable surface; otherwise a nonorientable one.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[inline]
pub(crate) fn rev(d: usize) -> usize {
    d ^ 1
}

/// Tail and head of every dart of `g`.
pub(crate) fn dart_ends(g: &Graph) -> (Vec<usize>, Vec<usize>) {
    let mut tail = vec![0; 2 * g.m()];
    let mut head = vec![0; 2 * g.m()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        tail[2 * e] = u;
        head[2 * e] = v;
        tail[2 * e + 1] = v;
        head[2 * e + 1] = u;
    }
    (tail, head)
}

pub(crate) fn dart(g: &Graph, u: usize, v: usize) -> Option<usize> {
    g.edge_index(u, v).map(|e| if u < v { 2 * e } else { 2 * e + 1 })
}

/// Cyclic order of neighbours around each vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RotationSystem {
    rot: Vec<Vec<usize>>,
}

impl RotationSystem {
    /// Checks that every vertex lists each of its neighbours exactly once.
    pub fn new(g: &Graph, rot: Vec<Vec<usize>>) -> Result<Self> {
        if rot.len() != g.n() {
            return Err(Error::InvalidRotation(format!(
                "{} vertex rotations for {} vertices",
                rot.len(),
                g.n()
            )));
        }
        for (v, r) in rot.iter().enumerate() {
            let mut sorted = r.clone();
            sorted.sort_unstable();
            if sorted != g.neighbors(v) {
                return Err(Error::InvalidRotation(format!(
                    "rotation at vertex {v} is {r:?}, neighbours are {:?}",
                    g.neighbors(v)
                )));
            }
        }
        Ok(RotationSystem { rot })
    }

    /// Rotation listing neighbours in increasing order.
    pub fn sorted(g: &Graph) -> Self {
        RotationSystem {
            rot: (0..g.n()).map(|v| g.neighbors(v).to_vec()).collect(),
        }
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rot[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rot
    }

    /// Each cyclic order rotated to start at its smallest neighbour.
    pub fn normalized(&self) -> Self {
        let rot = self
            .rot
            .iter()
            .map(|r| {
                let start = r.iter().enumerate().min_by_key(|&(_, w)| *w).map_or(0, |(i, _)| i);
                r[start..].iter().chain(&r[..start]).copied().collect()
            })
            .collect();
        RotationSystem { rot }
    }

    /// Successor/predecessor arrays over darts.
    pub(crate) fn dart_links(&self, g: &Graph) -> (Vec<usize>, Vec<usize>) {
        let mut next = vec![0; 2 * g.m()];
        let mut prev = vec![0; 2 * g.m()];
        for (v, r) in self.rot.iter().enumerate() {
            let k = r.len();
            for i in 0..k {
                let d = dart(g, v, r[i]).expect("validated rotation");
                let d2 = dart(g, v, r[(i + 1) % k]).expect("validated rotation");
                next[d] = d2;
                prev[d2] = d;
            }
        }
        (next, prev)
    }

    pub(crate) fn from_dart_links(g: &Graph, next: &[usize]) -> Self {
        let (tail, head) = dart_ends(g);
        let mut rot = vec![Vec::new(); g.n()];
        for v in 0..g.n() {
            let Some(&w0) = g.neighbors(v).first() else { continue };
            let d0 = dart(g, v, w0).expect("edge exists");
            let mut d = d0;
            loop {
                debug_assert_eq!(tail[d], v);
                rot[v].push(head[d]);
                d = next[d];
                if d == d0 {
                    break;
                }
            }
        }
        RotationSystem { rot }
    }
}

/// A rotation system with a sign per edge, indexed like [`Graph::edges`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SignedRotationSystem {
    pub rotation: RotationSystem,
    pub signs: Vec<i8>,
}

impl SignedRotationSystem {
    pub fn new(g: &Graph, rotation: RotationSystem, signs: Vec<i8>) -> Result<Self> {
        if signs.len() != g.m() {
            return Err(Error::InvalidRotation(format!(
                "{} signs for {} edges",
                signs.len(),
                g.m()
            )));
        }
        if let Some(s) = signs.iter().find(|&&s| s != 1 && s != -1) {
            return Err(Error::InvalidRotation(format!("edge sign {s} is not +1 or -1")));
        }
        Ok(SignedRotationSystem { rotation, signs })
    }

    pub fn all_positive(g: &Graph, rotation: RotationSystem) -> Self {
        SignedRotationSystem {
            rotation,
            signs: vec![1; g.m()],
        }
    }
}

/// Result of tracing the faces of a (signed) rotation system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaceTrace {
    /// One boundary walk per face, as a vertex sequence.
    pub faces: Vec<Vec<usize>>,
    pub vertices: usize,
    pub edges: usize,
    pub components: usize,
    pub orientable: bool,
    /// `2 * components - (V - E + F)`: twice the genus for orientable maps,
    /// the number of crosscaps otherwise (summed over components).
    pub euler_genus: usize,
}

impl FaceTrace {
    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertices as i64 - self.edges as i64 + self.faces.len() as i64
    }

    /// Orientable genus, when the map is orientable.
    pub fn genus(&self) -> Option<usize> {
        self.orientable.then_some(self.euler_genus / 2)
    }

    /// Number of crosscaps, when the map is nonorientable.
    pub fn crosscaps(&self) -> Option<usize> {
        (!self.orientable).then_some(self.euler_genus)
    }
}

impl fmt::Display for FaceTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = if self.orientable { "orientable" } else { "nonorientable" };
        write!(
            f,
            "{} faces, {kind}, Euler genus {}",
            self.faces.len(),
            self.euler_genus
        )
    }
}

/// Walk state `(dart, flipped)` packed as `2 * dart + flipped`.
pub(crate) fn walk_step(next: &[usize], prev: &[usize], signs: &[i8], state: usize) -> usize {
    let d = state >> 1;
    let mut flipped = state & 1;
    if signs[d >> 1] < 0 {
        flipped ^= 1;
    }
    let r = rev(d);
    let nd = if flipped == 0 { next[r] } else { prev[r] };
    (nd << 1) | flipped
}

/// Whether the signed graph can be switched to all-positive signs.
pub(crate) fn is_balanced(g: &Graph, signs: &[i8]) -> bool {
    let mut side = vec![0i8; g.n()];
    for s in 0..g.n() {
        if side[s] != 0 {
            continue;
        }
        side[s] = 1;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                let e = g.edge_index(u, w).expect("neighbour edge");
                let want = side[u] * signs[e];
                if side[w] == 0 {
                    side[w] = want;
                    stack.push(w);
                } else if side[w] != want {
                    return false;
                }
            }
        }
    }
    true
}

pub fn trace_faces(g: &Graph, rotation: &RotationSystem) -> Result<FaceTrace> {
    trace_signed_faces(g, &SignedRotationSystem::all_positive(g, rotation.clone()))
}

pub fn trace_signed_faces(g: &Graph, system: &SignedRotationSystem) -> Result<FaceTrace> {
    // Revalidate: the system may have been built against another graph.
    RotationSystem::new(g, system.rotation.rotations().to_vec())?;
    SignedRotationSystem::new(g, system.rotation.clone(), system.signs.clone())?;
    let (tail, _) = dart_ends(g);
    let (next, prev) = system.rotation.dart_links(g);
    let states = 4 * g.m();
    let mut orbit = vec![usize::MAX; states];
    let mut faces = Vec::new();
    let mut orbits = 0;
    for s0 in 0..states {
        if orbit[s0] != usize::MAX {
            continue;
        }
        let mut walk = Vec::new();
        let mut s = s0;
        loop {
            orbit[s] = orbits;
            walk.push(tail[s >> 1]);
            s = walk_step(&next, &prev, &system.signs, s);
            if s == s0 {
                break;
            }
        }
        // Keep the first-traced direction of each face; its reverse orbit
        // is reached later from a larger state.
        let reverse_of_earlier = {
            let d = s0 >> 1;
            // The reverse walk of the orbit through `s0` passes through
            // `rev(d)` in the opposite orientation.
            let flipped = (s0 & 1) ^ usize::from(system.signs[d >> 1] < 0);
            let partner = (rev(d) << 1) | (flipped ^ 1);
            orbit[partner] != usize::MAX && orbit[partner] != orbits
        };
        if !reverse_of_earlier {
            faces.push(walk);
        }
        orbits += 1;
    }
    debug_assert_eq!(orbits, 2 * faces.len());
    // An isolated vertex is a sphere with one face.
    for v in (0..g.n()).filter(|&v| g.degree(v) == 0) {
        faces.push(vec![v]);
    }
    let components = g.components().len();
    let chi = g.n() as i64 - g.m() as i64 + faces.len() as i64;
    let euler_genus = 2 * components as i64 - chi;
    debug_assert!(euler_genus >= 0);
    Ok(FaceTrace {
        faces,
        vertices: g.n(),
        edges: g.m(),
        components,
        orientable: is_balanced(g, &system.signs),
        euler_genus: euler_genus as usize,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle};

    #[test]
    fn planar_k4() {
        let g = complete(4);
        // vertex 0 in the centre of triangle 1-2-3
        let rot = RotationSystem::new(&g, vec![vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]]).unwrap();
        let t = trace_faces(&g, &rot).unwrap();
        assert_eq!(t.face_count(), 4);
        assert_eq!(t.genus(), Some(0));
        assert!(t.faces.iter().all(|f| f.len() == 3));
    }

    #[test]
    fn k4_other_rotation_is_toroidal() {
        let g = complete(4);
        let t = trace_faces(&g, &RotationSystem::sorted(&g)).unwrap();
        assert_eq!(t.euler_characteristic() % 2, 0);
        assert!(t.genus().unwrap() <= 1);
    }

    #[test]
    fn one_twisted_edge_on_a_cycle() {
        let g = cycle(4);
        let rot = RotationSystem::sorted(&g);
        let plain = trace_signed_faces(&g, &SignedRotationSystem::all_positive(&g, rot.clone())).unwrap();
        assert_eq!((plain.face_count(), plain.euler_genus), (2, 0));
        let twisted = SignedRotationSystem::new(&g, rot, vec![1, 1, 1, -1]).unwrap();
        let t = trace_signed_faces(&g, &twisted).unwrap();
        assert!(!t.orientable);
        assert_eq!((t.face_count(), t.euler_genus), (1, 1));
    }

    #[test]
    fn switching_keeps_orientability() {
        let g = cycle(4);
        // both edges at vertex 0 negative: switchable to all positive
        let signs: Vec<i8> = g.edges().iter().map(|&(u, _)| if u == 0 { -1 } else { 1 }).collect();
        let t = trace_signed_faces(
            &g,
            &SignedRotationSystem::new(&g, RotationSystem::sorted(&g), signs).unwrap(),
        )
        .unwrap();
        assert!(t.orientable);
        assert_eq!(t.euler_genus, 0);
    }

    #[test]
    fn invalid_rotations_are_rejected() {
        let g = complete(3);
        assert!(RotationSystem::new(&g, vec![vec![1], vec![0, 2], vec![0, 1]]).is_err());
        assert!(RotationSystem::new(&g, vec![vec![1, 2], vec![0, 2]]).is_err());
        assert!(SignedRotationSystem::new(&g, RotationSystem::sorted(&g), vec![1, 0, 1]).is_err());
    }
}
