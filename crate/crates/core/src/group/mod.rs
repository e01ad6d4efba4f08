//! Finite groups stored as full multiplication tables.
//!
//! Element `0` is always the identity. Groups are immutable once built and
//! every query below is a brute-force sweep over the table, which is cheap
//! for the orders this crate deals with (at most a few hundred).

mod iso;
mod named;
mod perm;
mod product;

pub mod io;
pub mod recipe;

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

pub use iso::{automorphisms, find_isomorphism, is_isomorphic, ISO_ORDER_CAP};
pub use named::Family;
pub use perm::Perm;
pub use product::Action;

/// Default bound on the number of elements produced by [`FiniteGroup::from_generators`].
pub const DEFAULT_CLOSURE_CAP: usize = 10_000;

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u16>,
    inverses: Vec<usize>,
    orders: Vec<usize>,
    label: Option<String>,
    perms: Option<Vec<Perm>>,
}

impl FiniteGroup {
    /// Closes a set of permutations under composition.
    pub fn from_generators(degree: usize, generators: &[Perm]) -> Result<Self> {
        Self::from_generators_capped(degree, generators, DEFAULT_CLOSURE_CAP)
    }

    pub fn from_generators_capped(degree: usize, generators: &[Perm], cap: usize) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptyGeneratorList);
        }
        let cap = cap.min(u16::MAX as usize);
        let gens: Vec<Perm> = generators
            .iter()
            .map(|g| {
                if g.degree() > degree {
                    Err(Error::InvalidPermutation(format!(
                        "{g} moves points outside degree {degree}"
                    )))
                } else {
                    Ok(g.extended(degree))
                }
            })
            .collect::<Result<_>>()?;

        // BFS over the right Cayley graph. Each non-identity element records
        // the element it was reached from and the generator used.
        let mut elements = vec![Perm::identity(degree)];
        let mut index: HashMap<Perm, usize> = HashMap::new();
        index.insert(elements[0].clone(), 0);
        let mut parent: Vec<(usize, usize)> = vec![(0, 0)];
        let mut right: Vec<Vec<usize>> = Vec::new();
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            let mut row = Vec::with_capacity(gens.len());
            for (gi, g) in gens.iter().enumerate() {
                let p = elements[i].then(g);
                let j = match index.get(&p) {
                    Some(&j) => j,
                    None => {
                        let j = elements.len();
                        if j >= cap {
                            return Err(Error::ClosureCapExceeded { cap });
                        }
                        index.insert(p.clone(), j);
                        elements.push(p);
                        parent.push((i, gi));
                        queue.push_back(j);
                        j
                    }
                };
                row.push(j);
            }
            right.push(row);
        }

        // Column j of the table: i*j = (i*parent(j))*g. BFS order guarantees
        // parent(j) < j, so columns are filled left to right.
        let n = elements.len();
        let mut table = vec![0u16; n * n];
        for i in 0..n {
            table[i * n] = i as u16;
        }
        for j in 1..n {
            let (p, g) = parent[j];
            for i in 0..n {
                let ip = table[i * n + p] as usize;
                table[i * n + j] = right[ip][g] as u16;
            }
        }
        Ok(Self::assemble(n, table, Some(elements)))
    }

    /// Validates a row-major table (`table[i*order + j] = i*j`) and relabels
    /// so that the identity sits at index 0.
    pub fn from_table(order: usize, table: Vec<usize>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidTable("order must be positive".into()));
        }
        if order > u16::MAX as usize {
            return Err(Error::InvalidTable(format!("order {order} is too large")));
        }
        if table.len() != order * order {
            return Err(Error::InvalidTable(format!(
                "expected {} entries, found {}",
                order * order,
                table.len()
            )));
        }
        if let Some(&bad) = table.iter().find(|&&x| x >= order) {
            return Err(Error::InvalidTable(format!("entry {bad} is not an element")));
        }
        let at = |i: usize, j: usize| table[i * order + j];
        let identity = (0..order)
            .find(|&e| (0..order).all(|i| at(e, i) == i && at(i, e) == i))
            .ok_or_else(|| Error::InvalidTable("no identity element".into()))?;
        for i in 0..order {
            if !(0..order).any(|j| at(i, j) == identity && at(j, i) == identity) {
                return Err(Error::InvalidTable(format!("element {i} has no inverse")));
            }
        }
        for a in 0..order {
            for b in 0..order {
                let ab = at(a, b);
                for c in 0..order {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(Error::InvalidTable(format!("associativity fails for ({a}, {b}, {c})")));
                    }
                }
            }
        }
        // Swap the identity into position 0.
        let relabel = |x: usize| {
            if x == identity {
                0
            } else if x == 0 {
                identity
            } else {
                x
            }
        };
        let mut out = vec![0u16; order * order];
        for i in 0..order {
            for j in 0..order {
                out[relabel(i) * order + relabel(j)] = relabel(at(i, j)) as u16;
            }
        }
        Ok(Self::assemble(order, out, None))
    }

    fn assemble(order: usize, table: Vec<u16>, perms: Option<Vec<Perm>>) -> Self {
        let mut inverses = vec![0; order];
        for i in 0..order {
            inverses[i] = (0..order)
                .find(|&j| table[i * order + j] == 0)
                .expect("validated table has inverses");
        }
        let mut orders = vec![1; order];
        for (x, slot) in orders.iter_mut().enumerate() {
            let mut k = 1;
            let mut p = x;
            while p != 0 {
                p = table[p * order + x] as usize;
                k += 1;
            }
            *slot = k;
        }
        FiniteGroup {
            order,
            table,
            inverses,
            orders,
            label: None,
            perms,
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        let k = k % self.orders[a];
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    /// Row-major copy of the multiplication table.
    pub fn table(&self) -> Vec<usize> {
        self.table.iter().map(|&x| x as usize).collect()
    }

    /// Permutation realising element `x`, when the group was built from permutations.
    pub fn perm(&self, x: usize) -> Option<&Perm> {
        self.perms.as_ref().map(|p| &p[x])
    }

    pub fn perms(&self) -> Option<&[Perm]> {
        self.perms.as_deref()
    }

    pub fn degree(&self) -> Option<usize> {
        self.perms.as_ref().map(|p| p[0].degree())
    }

    pub(crate) fn set_perms(&mut self, perms: Option<Vec<Perm>>) {
        self.perms = perms;
    }

    pub fn check_element(&self, x: usize) -> Result<()> {
        if x < self.order {
            Ok(())
        } else {
            Err(Error::InvalidElement {
                index: x,
                order: self.order,
            })
        }
    }

    pub fn element_order(&self, x: usize) -> usize {
        self.orders[x]
    }

    pub fn element_orders(&self) -> &[usize] {
        &self.orders
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_cyclic(&self) -> bool {
        self.orders.contains(&self.order)
    }

    pub fn order_spectrum(&self) -> OrderSpectrum {
        let mut multiplicities = BTreeMap::new();
        for &k in &self.orders {
            *multiplicities.entry(k).or_insert(0) += 1;
        }
        OrderSpectrum { multiplicities }
    }

    /// `<x>` listed as sorted element indices.
    pub fn cyclic_subgroup(&self, x: usize) -> ElementSet {
        let mut members = Vec::with_capacity(self.orders[x]);
        let mut p = 0;
        loop {
            members.push(p);
            p = self.mul(p, x);
            if p == 0 {
                break;
            }
        }
        ElementSet::new(self.order, members)
    }

    /// Distinct cyclic subgroups of order `k`, ordered by their least generator.
    pub fn cyclic_subgroups_of_order(&self, k: usize) -> Vec<ElementSet> {
        let mut seen: Vec<ElementSet> = Vec::new();
        for x in 0..self.order {
            if self.orders[x] == k {
                let h = self.cyclic_subgroup(x);
                if !seen.contains(&h) {
                    seen.push(h);
                }
            }
        }
        seen
    }

    pub fn six_profile(&self) -> SixProfile {
        let subgroups = self.cyclic_subgroups_of_order(6);
        let mut pairwise = Vec::new();
        for i in 0..subgroups.len() {
            for j in i + 1..subgroups.len() {
                pairwise.push(subgroups[i].intersection(&subgroups[j]).len());
            }
        }
        let common = match subgroups.split_first() {
            None => 0,
            Some((first, rest)) => rest.iter().fold(first.clone(), |acc, h| acc.intersection(h)).len(),
        };
        SixProfile {
            count: subgroups.len(),
            pairwise_intersections: pairwise,
            common_intersection_order: common,
        }
    }

    pub fn centralizer(&self, x: usize) -> ElementSet {
        let members = (0..self.order).filter(|&g| self.mul(g, x) == self.mul(x, g)).collect();
        ElementSet::new(self.order, members)
    }

    pub fn center(&self) -> ElementSet {
        let members = (0..self.order)
            .filter(|&z| (0..self.order).all(|g| self.mul(g, z) == self.mul(z, g)))
            .collect();
        ElementSet::new(self.order, members)
    }

    /// `{ g^-1 x g : g in G }`.
    pub fn conjugacy_class(&self, x: usize) -> ElementSet {
        let members = (0..self.order).map(|g| self.mul(self.mul(self.inv(g), x), g)).collect();
        ElementSet::new(self.order, members)
    }

    pub fn conjugacy_class_sizes(&self) -> Vec<usize> {
        let mut size = vec![0; self.order];
        let mut done = vec![false; self.order];
        for x in 0..self.order {
            if done[x] {
                continue;
            }
            let class = self.conjugacy_class(x);
            for &y in class.members() {
                done[y] = true;
                size[y] = class.len();
            }
        }
        size
    }

    pub fn count_involutions(&self) -> usize {
        self.orders.iter().filter(|&&k| k == 2).count()
    }

    pub fn count_subgroups_of_prime_order(&self, p: usize) -> Result<usize> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(self.orders.iter().filter(|&&k| k == p).count() / (p - 1))
    }

    /// The subgroup generated by `gens`.
    pub fn subgroup_generated(&self, gens: &[usize]) -> ElementSet {
        let mut inside = vec![false; self.order];
        inside[0] = true;
        let mut members = vec![0];
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            for &g in gens {
                let y = self.mul(x, g);
                if !inside[y] {
                    inside[y] = true;
                    members.push(y);
                }
            }
            i += 1;
        }
        ElementSet::new(self.order, members)
    }

    pub fn is_subgroup(&self, set: &ElementSet) -> bool {
        let m = set.members();
        m.binary_search(&0).is_ok()
            && m.iter()
                .all(|&a| m.iter().all(|&b| m.binary_search(&self.mul(a, self.inv(b))).is_ok()))
    }

    /// Re-runs the full identity/inverse/associativity sweep.
    pub fn validate(&self) -> Result<()> {
        FiniteGroup::from_table(self.order, self.table()).map(|_| ())
    }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.label {
            Some(l) => write!(f, "{l} (order {})", self.order),
            None => write!(f, "group of order {}", self.order),
        }
    }
}

pub fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

pub fn euler_phi(n: usize) -> usize {
    (1..=n).filter(|&k| gcd(k, n) == 1).count()
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A sorted, duplicate-free set of elements of a group of order `parent_order`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ElementSet {
    #[serde(skip)]
    parent_order: usize,
    members: Vec<usize>,
}

impl ElementSet {
    pub fn new(parent_order: usize, mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        debug_assert!(members.last().is_none_or(|&m| m < parent_order));
        ElementSet { parent_order, members }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        let members = self.members.iter().copied().filter(|&x| other.contains(x)).collect();
        ElementSet::new(self.parent_order, members)
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        let mut members = self.members.clone();
        members.extend_from_slice(&other.members);
        ElementSet::new(self.parent_order, members)
    }

    pub fn complement(&self) -> ElementSet {
        let members = (0..self.parent_order).filter(|&x| !self.contains(x)).collect();
        ElementSet::new(self.parent_order, members)
    }
}

/// Element orders of a group with their multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct OrderSpectrum {
    multiplicities: BTreeMap<usize, usize>,
}

impl OrderSpectrum {
    pub fn from_multiplicities(multiplicities: BTreeMap<usize, usize>) -> Self {
        OrderSpectrum {
            multiplicities: multiplicities.into_iter().filter(|&(_, c)| c > 0).collect(),
        }
    }

    /// Spectrum of an arbitrary subset of elements.
    pub fn of_subset(group: &FiniteGroup, set: &ElementSet) -> Self {
        let mut multiplicities = BTreeMap::new();
        for &x in set.members() {
            *multiplicities.entry(group.element_order(x)).or_insert(0) += 1;
        }
        OrderSpectrum { multiplicities }
    }

    pub fn orders(&self) -> Vec<usize> {
        self.multiplicities.keys().copied().collect()
    }

    pub fn multiplicities(&self) -> &BTreeMap<usize, usize> {
        &self.multiplicities
    }

    pub fn count(&self, k: usize) -> usize {
        self.multiplicities.get(&k).copied().unwrap_or(0)
    }

    pub fn contains(&self, k: usize) -> bool {
        self.count(k) > 0
    }

    pub fn total(&self) -> usize {
        self.multiplicities.values().sum()
    }

    pub fn max_order(&self) -> usize {
        self.multiplicities.keys().next_back().copied().unwrap_or(0)
    }

    pub fn is_subset_of(&self, allowed: &[usize]) -> bool {
        self.multiplicities.keys().all(|k| allowed.contains(k))
    }

    /// Compact `{1,2,4,8}` rendering of the order set.
    pub fn set_string(&self) -> String {
        let parts: Vec<String> = self.orders().iter().map(|k| k.to_string()).collect();
        format!("{{{}}}", parts.join(","))
    }

    /// Parses `1:1,2:3,3:2` into a spectrum.
    pub fn parse(text: &str) -> Result<Self> {
        let mut multiplicities = BTreeMap::new();
        for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (k, c) = part
                .split_once(':')
                .ok_or_else(|| Error::InvalidParameter(format!("bad spectrum term {part:?}")))?;
            let k: usize = k
                .trim()
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("bad order {k:?}")))?;
            let c: usize = c
                .trim()
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("bad count {c:?}")))?;
            multiplicities.insert(k, c);
        }
        Ok(OrderSpectrum::from_multiplicities(multiplicities))
    }
}

impl fmt::Display for OrderSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.multiplicities.iter().map(|(k, c)| format!("{k}:{c}")).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Cyclic subgroups of order 6 and how they overlap.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SixProfile {
    pub count: usize,
    /// Intersection orders for each pair `i < j`, in lexicographic pair order.
    pub pairwise_intersections: Vec<usize>,
    pub common_intersection_order: usize,
}

impl SixProfile {
    pub fn sorted_intersections(&self) -> Vec<usize> {
        let mut v = self.pairwise_intersections.clone();
        v.sort_unstable();
        v
    }

    pub fn all_pairs(&self, order: usize) -> bool {
        self.pairwise_intersections.iter().all(|&k| k == order)
    }

    pub fn any_pair(&self, order: usize) -> bool {
        self.pairwise_intersections.contains(&order)
    }
}

impl fmt::Display for SixProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pairwise_intersections.iter().map(|k| k.to_string()).collect();
        write!(f, "({}; {})", self.count, parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> FiniteGroup {
        let gens = [
            Perm::parse_cycles(3, "(0 1 2)").unwrap(),
            Perm::parse_cycles(3, "(0 1)").unwrap(),
        ];
        FiniteGroup::from_generators(3, &gens).unwrap()
    }

    #[test]
    fn closure_of_s3() {
        let g = s3();
        assert_eq!(g.order(), 6);
        assert_eq!(g.order_spectrum().orders(), vec![1, 2, 3]);
        assert_eq!(g.element_order(0), 1);
        g.validate().unwrap();
        // table agrees with permutation composition
        for a in g.elements() {
            for b in g.elements() {
                assert_eq!(
                    g.perm(a).unwrap().then(g.perm(b).unwrap()),
                    *g.perm(g.mul(a, b)).unwrap()
                );
            }
        }
    }

    #[test]
    fn closure_cap_and_empty_generators() {
        let c = Perm::parse_cycles(8, "(0 1 2 3 4 5 6 7)").unwrap();
        assert!(matches!(
            FiniteGroup::from_generators_capped(8, &[c], 5),
            Err(Error::ClosureCapExceeded { cap: 5 })
        ));
        assert!(matches!(
            FiniteGroup::from_generators(3, &[]),
            Err(Error::EmptyGeneratorList)
        ));
    }

    #[test]
    fn s3_structure() {
        let g = s3();
        let t = (0..6).find(|&x| g.element_order(x) == 2).unwrap();
        assert_eq!(g.centralizer(t).len(), 2);
        assert_eq!(g.conjugacy_class(t).len(), 3);
        assert_eq!(g.center().len(), 1);
        assert_eq!(g.count_subgroups_of_prime_order(2).unwrap(), 3);
        assert!(matches!(g.count_subgroups_of_prime_order(4), Err(Error::NotPrime(4))));
        assert_eq!(g.six_profile().count, 0);
        assert_eq!(g.six_profile().common_intersection_order, 0);
    }

    #[test]
    fn from_table_moves_identity_to_zero() {
        // Z2 with the identity stored at index 1.
        let g = FiniteGroup::from_table(2, vec![1, 0, 0, 1]).unwrap();
        assert_eq!(g.mul(0, 1), 1);
        assert_eq!(g.mul(1, 1), 0);
    }

    #[test]
    fn from_table_rejects_non_associative() {
        // Latin square with identity 0 that is not a group (order 5 loop).
        let t = vec![
            0, 1, 2, 3, 4, //
            1, 0, 3, 4, 2, //
            2, 4, 0, 1, 3, //
            3, 2, 4, 0, 1, //
            4, 3, 1, 2, 0,
        ];
        assert!(matches!(FiniteGroup::from_table(5, t), Err(Error::InvalidTable(_))));
    }

    #[test]
    fn spectrum_parse_round_trip() {
        let s = OrderSpectrum::parse("1:1,2:3,3:2,6:6").unwrap();
        assert_eq!(s.to_string(), "1:1,2:3,3:2,6:6");
        assert_eq!(s.total(), 12);
        assert_eq!(s.set_string(), "{1,2,3,6}");
    }
}
