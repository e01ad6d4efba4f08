//! Isomorphism testing and automorphism enumeration by backtracking over
//! images of a generating sequence.

use super::FiniteGroup;
use crate::error::{Error, Result};

/// Largest order accepted by [`is_isomorphic`] and [`automorphisms`].
pub const ISO_ORDER_CAP: usize = 144;

/// Element fingerprint: (element order, conjugacy class size).
fn fingerprints(g: &FiniteGroup) -> Vec<(usize, usize)> {
    let sizes = g.conjugacy_class_sizes();
    (0..g.order()).map(|x| (g.element_order(x), sizes[x])).collect()
}

/// Greedy generating sequence, largest element orders first.
fn generating_sequence(g: &FiniteGroup) -> Vec<usize> {
    let mut candidates: Vec<usize> = (1..g.order()).collect();
    candidates.sort_by_key(|&x| (std::cmp::Reverse(g.element_order(x)), x));
    let mut gens = Vec::new();
    let mut span = g.subgroup_generated(&[]);
    for x in candidates {
        if span.len() == g.order() {
            break;
        }
        if !span.contains(x) {
            gens.push(x);
            span = g.subgroup_generated(&gens);
        }
    }
    gens
}

struct Search<'a> {
    a: &'a FiniteGroup,
    b: &'a FiniteGroup,
    gens: Vec<usize>,
    candidates: Vec<Vec<usize>>,
    images: Vec<usize>,
}

impl Search<'_> {
    /// Extends `images` of the first `k` generators to the subgroup they
    /// generate, checking that every Cayley-graph edge is respected.
    fn extend(&self, k: usize) -> Option<Vec<usize>> {
        let (a, b) = (self.a, self.b);
        let mut map = vec![usize::MAX; a.order()];
        let mut used = vec![false; b.order()];
        map[0] = 0;
        used[0] = true;
        let mut queue = vec![0];
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            for gi in 0..k {
                let y = a.mul(x, self.gens[gi]);
                let fy = b.mul(map[x], self.images[gi]);
                if map[y] == usize::MAX {
                    if used[fy] {
                        return None;
                    }
                    map[y] = fy;
                    used[fy] = true;
                    queue.push(y);
                } else if map[y] != fy {
                    return None;
                }
            }
            i += 1;
        }
        Some(map)
    }

    fn run(&mut self, k: usize, all: bool, found: &mut Vec<Vec<usize>>) -> bool {
        if k == self.gens.len() {
            let map = self.extend(k).expect("checked at previous level");
            found.push(map);
            return !all;
        }
        for ci in 0..self.candidates[k].len() {
            self.images[k] = self.candidates[k][ci];
            if self.extend(k + 1).is_some() && self.run(k + 1, all, found) {
                return true;
            }
        }
        false
    }
}

fn search(a: &FiniteGroup, b: &FiniteGroup, all: bool) -> Result<Vec<Vec<usize>>> {
    for g in [a, b] {
        if g.order() > ISO_ORDER_CAP {
            return Err(Error::OrderCapExceeded {
                order: g.order(),
                cap: ISO_ORDER_CAP,
            });
        }
    }
    if a.order() != b.order() || a.order_spectrum() != b.order_spectrum() {
        return Ok(Vec::new());
    }
    let (fa, fb) = (fingerprints(a), fingerprints(b));
    let mut sa = fa.clone();
    let mut sb = fb.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return Ok(Vec::new());
    }
    let gens = generating_sequence(a);
    let candidates = gens
        .iter()
        .map(|&x| (0..b.order()).filter(|&y| fb[y] == fa[x]).collect())
        .collect();
    let mut s = Search {
        a,
        b,
        images: vec![0; gens.len()],
        gens,
        candidates,
    };
    let mut found = Vec::new();
    s.run(0, all, &mut found);
    Ok(found)
}

/// Decides whether two groups are isomorphic. Both orders must be at most
/// [`ISO_ORDER_CAP`].
pub fn is_isomorphic(a: &FiniteGroup, b: &FiniteGroup) -> Result<bool> {
    Ok(!search(a, b, false)?.is_empty())
}

/// Some isomorphism `a -> b` as an element map, if one exists.
pub fn find_isomorphism(a: &FiniteGroup, b: &FiniteGroup) -> Result<Option<Vec<usize>>> {
    Ok(search(a, b, false)?.into_iter().next())
}

/// Every automorphism of `g` as an element map, in lexicographic order of
/// generator images.
pub fn automorphisms(g: &FiniteGroup) -> Result<Vec<Vec<usize>>> {
    search(g, g, true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crt_and_nonabelian() {
        let z6 = FiniteGroup::cyclic(6).unwrap();
        let z2z3 = FiniteGroup::direct_product(&FiniteGroup::cyclic(2).unwrap(), &FiniteGroup::cyclic(3).unwrap());
        assert!(is_isomorphic(&z6, &z2z3).unwrap());
        let d12 = FiniteGroup::dihedral(12).unwrap();
        let z12 = FiniteGroup::cyclic(12).unwrap();
        assert!(!is_isomorphic(&d12, &z12).unwrap());
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert!(is_isomorphic(&s3, &FiniteGroup::dihedral(6).unwrap()).unwrap());
    }

    #[test]
    fn automorphism_group_orders() {
        let count = |g: &FiniteGroup| automorphisms(g).unwrap().len();
        assert_eq!(count(&FiniteGroup::cyclic(8).unwrap()), 4);
        assert_eq!(count(&FiniteGroup::symmetric(3).unwrap()), 6);
        let v4 = FiniteGroup::dihedral(4).unwrap();
        assert_eq!(count(&v4), 6);
        assert_eq!(count(&FiniteGroup::dihedral(8).unwrap()), 8);
        assert_eq!(count(&FiniteGroup::dicyclic(2).unwrap()), 24);
    }

    #[test]
    fn order_cap() {
        let big = FiniteGroup::cyclic(150).unwrap();
        assert!(matches!(
            is_isomorphic(&big, &big),
            Err(Error::OrderCapExceeded { order: 150, .. })
        ));
    }
}
