use std::fmt;
use std::str::FromStr;

use super::{FiniteGroup, Perm};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `Z_n`, parameter `n`.
    Cyclic,
    /// Dihedral group, parameter is the group order `2n`.
    Dihedral,
    /// `<a, b | a^{2n}, b^2 = a^n, b a b^-1 = a^-1>`, parameter `n`, order `4n`.
    Dicyclic,
    /// `<a, b | a^{2^{k-1}}, b^2, b a b = a^{2^{k-2}-1}>`, parameter is the order `2^k >= 16`.
    Semidihedral,
    Symmetric,
    Alternating,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Cyclic => "cyclic",
            Family::Dihedral => "dihedral",
            Family::Dicyclic => "dicyclic",
            Family::Semidihedral => "semidihedral",
            Family::Symmetric => "sym",
            Family::Alternating => "alt",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "cyclic" => Family::Cyclic,
            "dihedral" => Family::Dihedral,
            "dicyclic" => Family::Dicyclic,
            "semidihedral" => Family::Semidihedral,
            "sym" | "symmetric" => Family::Symmetric,
            "alt" | "alternating" => Family::Alternating,
            other => return Err(Error::InvalidParameter(format!("unknown family {other:?}"))),
        })
    }
}

fn invalid(family: Family, parameter: usize, why: &str) -> Error {
    Error::InvalidParameter(format!("{family}({parameter}): {why}"))
}

fn cycle(degree: usize, points: impl IntoIterator<Item = usize>) -> Perm {
    let pts: Vec<usize> = points.into_iter().collect();
    Perm::from_cycles(degree, &[pts]).expect("well-formed cycle")
}

impl FiniteGroup {
    pub fn named(family: Family, parameter: usize) -> Result<Self> {
        let p = parameter;
        let group = match family {
            Family::Cyclic => {
                if p == 0 {
                    return Err(invalid(family, p, "order must be positive"));
                }
                FiniteGroup::from_generators(p, &[cycle(p, 0..p)])?.with_label(format!("Z{p}"))
            }
            Family::Dihedral => {
                if p < 2 || !p.is_multiple_of(2) {
                    return Err(invalid(family, p, "order must be even and at least 2"));
                }
                let n = p / 2;
                let g = match n {
                    1 => FiniteGroup::from_generators(2, &[cycle(2, [0, 1])])?,
                    2 => FiniteGroup::from_generators(
                        4,
                        &[
                            Perm::parse_cycles(4, "(0 1)(2 3)")?,
                            Perm::parse_cycles(4, "(0 2)(1 3)")?,
                        ],
                    )?,
                    _ => {
                        let reflection: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
                        FiniteGroup::from_generators(n, &[cycle(n, 0..n), Perm::from_images(reflection)?])?
                    }
                };
                g.with_label(format!("D{p}"))
            }
            Family::Dicyclic => {
                if p < 1 {
                    return Err(invalid(family, p, "parameter must be positive"));
                }
                let m = 2 * p;
                let label = if p.is_power_of_two() && p >= 2 {
                    format!("Q{}", 4 * p)
                } else {
                    format!("Dic{p}")
                };
                metacyclic(m, 2, m - 1, p)?.with_label(label)
            }
            Family::Semidihedral => {
                if p < 16 || !p.is_power_of_two() {
                    return Err(invalid(family, p, "order must be a power of two, at least 16"));
                }
                let m = p / 2;
                metacyclic(m, 2, m / 2 - 1, 0)?.with_label(format!("QD{p}"))
            }
            Family::Symmetric => {
                if p == 0 {
                    return Err(invalid(family, p, "degree must be positive"));
                }
                let gens = if p == 1 {
                    vec![Perm::identity(1)]
                } else {
                    vec![cycle(p, 0..p), cycle(p, [0, 1])]
                };
                FiniteGroup::from_generators(p, &gens)?.with_label(format!("S{p}"))
            }
            Family::Alternating => {
                if p == 0 {
                    return Err(invalid(family, p, "degree must be positive"));
                }
                let gens: Vec<Perm> = if p < 3 {
                    vec![Perm::identity(p)]
                } else {
                    (2..p).map(|k| cycle(p, [0, 1, k])).collect()
                };
                FiniteGroup::from_generators(p, &gens)?.with_label(format!("A{p}"))
            }
        };
        Ok(group)
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        Self::named(Family::Cyclic, n)
    }

    pub fn dihedral(order: usize) -> Result<Self> {
        Self::named(Family::Dihedral, order)
    }

    pub fn dicyclic(n: usize) -> Result<Self> {
        Self::named(Family::Dicyclic, n)
    }

    pub fn semidihedral(order: usize) -> Result<Self> {
        Self::named(Family::Semidihedral, order)
    }

    pub fn symmetric(n: usize) -> Result<Self> {
        Self::named(Family::Symmetric, n)
    }

    pub fn alternating(n: usize) -> Result<Self> {
        Self::named(Family::Alternating, n)
    }
}

/// Group on words `a^i b^j` (`0 <= i < m`, `0 <= j < s`) with `b a = a^r b`
/// and `b^s = a^t`.
fn metacyclic(m: usize, s: usize, r: usize, t: usize) -> Result<FiniteGroup> {
    let n = m * s;
    let mut rpow = vec![1 % m; s];
    for j in 1..s {
        rpow[j] = rpow[j - 1] * r % m;
    }
    let idx = |i: usize, j: usize| i * s + j;
    let mut table = vec![0; n * n];
    for i in 0..m {
        for j in 0..s {
            for k in 0..m {
                for l in 0..s {
                    // a^i b^j a^k b^l = a^{i + k r^j} b^{j+l}
                    let mut e = (i + k * rpow[j]) % m;
                    let mut f = j + l;
                    if f >= s {
                        f -= s;
                        e = (e + t) % m;
                    }
                    table[idx(i, j) * n + idx(k, l)] = idx(e, f);
                }
            }
        }
    }
    FiniteGroup::from_table(n, table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families_have_expected_orders() {
        assert_eq!(FiniteGroup::cyclic(8).unwrap().order(), 8);
        assert_eq!(FiniteGroup::dihedral(2).unwrap().order(), 2);
        assert_eq!(FiniteGroup::dihedral(4).unwrap().order(), 4);
        assert_eq!(FiniteGroup::dihedral(16).unwrap().order(), 16);
        assert_eq!(FiniteGroup::dicyclic(3).unwrap().order(), 12);
        assert_eq!(FiniteGroup::semidihedral(16).unwrap().order(), 16);
        assert_eq!(FiniteGroup::symmetric(4).unwrap().order(), 24);
        assert_eq!(FiniteGroup::alternating(5).unwrap().order(), 60);
        assert_eq!(FiniteGroup::alternating(2).unwrap().order(), 1);
    }

    #[test]
    fn parameter_checks() {
        assert!(FiniteGroup::dihedral(7).is_err());
        assert!(FiniteGroup::semidihedral(8).is_err());
        assert!(FiniteGroup::semidihedral(24).is_err());
        assert!(FiniteGroup::cyclic(0).is_err());
        assert!(FiniteGroup::dicyclic(0).is_err());
    }

    #[test]
    fn sixteen_element_families() {
        let d16 = FiniteGroup::dihedral(16).unwrap();
        assert_eq!(d16.count_involutions(), 9);
        let q16 = FiniteGroup::dicyclic(4).unwrap();
        assert_eq!(q16.count_involutions(), 1);
        assert_eq!(q16.label(), Some("Q16"));
        let qd16 = FiniteGroup::semidihedral(16).unwrap();
        assert_eq!(qd16.order_spectrum().orders(), vec![1, 2, 4, 8]);
        assert_eq!(qd16.count_involutions(), 5);
    }
}
