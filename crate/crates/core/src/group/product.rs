use std::collections::HashMap;
use std::fmt;

use super::{FiniteGroup, Perm};
use crate::error::{Error, Result};

/// How the acting group of a semidirect product acts on the normal factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Action {
    Trivial,
    /// A generator of the (cyclic) acting group inverts every element.
    Invert,
    /// A generator acts as `x -> x^r`.
    Power(usize),
    /// A generator acts by conjugation `x -> s^-1 x s` inside the symmetric
    /// group of the normal factor's permutation representation.
    Conj(Perm),
    /// Explicit image of every acting element: `maps[h][n]`.
    Maps(Vec<Vec<usize>>),
}

impl fmt::Display for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Action::Trivial => write!(f, "trivial"),
            Action::Invert => write!(f, "invert"),
            Action::Power(r) => write!(f, "power({r})"),
            Action::Conj(p) => write!(f, "conj({p})"),
            Action::Maps(_) => write!(f, "maps"),
        }
    }
}

impl FiniteGroup {
    /// `A x B` with element `(a, b)` stored at index `a * |B| + b`.
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
        let (na, nb) = (a.order(), b.order());
        let n = na * nb;
        let mut table = vec![0; n * n];
        for x in 0..n {
            let (xa, xb) = (x / nb, x % nb);
            for y in 0..n {
                let (ya, yb) = (y / nb, y % nb);
                table[x * n + y] = a.mul(xa, ya) * nb + b.mul(xb, yb);
            }
        }
        let mut g = FiniteGroup::from_table(n, table).expect("direct product of groups is a group");
        if let (Some(pa), Some(pb)) = (a.perms(), b.perms()) {
            let (da, db) = (pa[0].degree(), pb[0].degree());
            let perms = (0..n)
                .map(|x| {
                    let left = pa[x / nb].extended(da + db);
                    left.then(&pb[x % nb].shifted(da, da + db))
                })
                .collect();
            g.set_perms(Some(perms));
        }
        let label = match (a.label(), b.label()) {
            (Some(x), Some(y)) => format!("{x} x {y}"),
            _ => format!("direct product of order {n}"),
        };
        g.with_label(label)
    }

    /// `N x| H` with `(n1, h1)(n2, h2) = (n1 * phi(h1)(n2), h1 h2)`, stored at
    /// index `h * |N| + n`. The action is verified before use.
    pub fn semidirect_product(n: &FiniteGroup, h: &FiniteGroup, action: &Action) -> Result<FiniteGroup> {
        let maps = action_maps(n, h, action)?;
        verify_action(n, h, &maps)?;
        let (nn, nh) = (n.order(), h.order());
        let total = nn * nh;
        let mut table = vec![0; total * total];
        for x in 0..total {
            let (xh, xn) = (x / nn, x % nn);
            for y in 0..total {
                let (yh, yn) = (y / nn, y % nn);
                let prod_n = n.mul(xn, maps[xh][yn]);
                table[x * total + y] = h.mul(xh, yh) * nn + prod_n;
            }
        }
        let g = FiniteGroup::from_table(total, table)?;
        let label = match (n.label(), h.label()) {
            (Some(x), Some(y)) => format!("{x} : {y}"),
            _ => format!("semidirect product of order {total}"),
        };
        Ok(g.with_label(label))
    }
}

/// Expands an [`Action`] into one element map per element of `h`.
pub(crate) fn action_maps(n: &FiniteGroup, h: &FiniteGroup, action: &Action) -> Result<Vec<Vec<usize>>> {
    let identity_map: Vec<usize> = (0..n.order()).collect();
    let generator_map = match action {
        Action::Trivial => return Ok(vec![identity_map; h.order()]),
        Action::Maps(maps) => {
            if maps.len() != h.order() || maps.iter().any(|m| m.len() != n.order()) {
                return Err(Error::NotAHomomorphism("explicit action has the wrong shape".into()));
            }
            return Ok(maps.clone());
        }
        Action::Invert => (0..n.order()).map(|x| n.inv(x)).collect::<Vec<_>>(),
        Action::Power(r) => (0..n.order()).map(|x| n.pow(x, *r)).collect(),
        Action::Conj(s) => {
            let perms = n
                .perms()
                .ok_or_else(|| Error::NotAnAutomorphism("conjugation needs a permutation representation".into()))?;
            let degree = perms[0].degree();
            if s.degree() > degree {
                return Err(Error::NotAnAutomorphism(format!(
                    "{s} moves points outside degree {degree}"
                )));
            }
            let s = s.extended(degree);
            let index: HashMap<&Perm, usize> = perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
            let s_inv = s.inverse();
            perms
                .iter()
                .map(|p| {
                    let image = s_inv.then(p).then(&s);
                    index.get(&image).copied().ok_or_else(|| {
                        Error::NotAnAutomorphism(format!("conjugation by {s} does not normalise the group"))
                    })
                })
                .collect::<Result<_>>()?
        }
    };
    check_automorphism(n, &generator_map)?;
    let gen = (0..h.order())
        .find(|&x| h.element_order(x) == h.order())
        .ok_or_else(|| Error::NotAHomomorphism("generator actions need a cyclic acting group".into()))?;
    let mut maps = vec![Vec::new(); h.order()];
    let mut current = identity_map;
    let mut x = 0;
    for _ in 0..h.order() {
        maps[x] = current.clone();
        current = current.iter().map(|&y| generator_map[y]).collect();
        x = h.mul(x, gen);
    }
    // After |H| steps the generator map must have returned to the identity.
    if current.iter().enumerate().any(|(i, &y)| i != y) {
        return Err(Error::NotAHomomorphism(format!(
            "the generator's action does not have order dividing {}",
            h.order()
        )));
    }
    Ok(maps)
}

fn verify_action(n: &FiniteGroup, h: &FiniteGroup, maps: &[Vec<usize>]) -> Result<()> {
    for (hi, map) in maps.iter().enumerate() {
        check_automorphism(n, map).map_err(|e| match e {
            Error::NotAnAutomorphism(m) => Error::NotAnAutomorphism(format!("action of element {hi}: {m}")),
            other => other,
        })?;
    }
    for h1 in 0..h.order() {
        for h2 in 0..h.order() {
            let composed: Vec<usize> = (0..n.order()).map(|x| maps[h1][maps[h2][x]]).collect();
            if composed != maps[h.mul(h1, h2)] {
                return Err(Error::NotAHomomorphism(format!(
                    "phi({h1}) o phi({h2}) differs from phi({h1}*{h2})"
                )));
            }
        }
    }
    Ok(())
}

pub(crate) fn check_automorphism(n: &FiniteGroup, map: &[usize]) -> Result<()> {
    let mut hit = vec![false; n.order()];
    for &y in map {
        if y >= n.order() || hit[y] {
            return Err(Error::NotAnAutomorphism("not a bijection".into()));
        }
        hit[y] = true;
    }
    for a in 0..n.order() {
        for b in 0..n.order() {
            if map[n.mul(a, b)] != n.mul(map[a], map[b]) {
                return Err(Error::NotAnAutomorphism(format!("f({a}*{b}) != f({a})*f({b})")));
            }
        }
    }
    Ok(())
}
