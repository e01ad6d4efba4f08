//! Constructor expressions for groups.
//!
//! ```text
//! recipe := cyclic(n) | dihedral(2n) | dicyclic(n) | semidihedral(2^k)
//!         | sym(n) | alt(n)
//!         | direct(recipe, recipe, ...)
//!         | semidirect(recipe, recipe, action)
//!         | perm(degree; cycles, cycles, ...)
//!         | [label]
//! action := trivial | invert | power(r) | conj(cycles)
//! ```
//!
//! `semidirect(N, H, action)` needs a cyclic `H` unless the action is
//! trivial; the action names what a generator of `H` does to `N`.

use std::fmt;
use std::str::FromStr;

use super::{Action, Family, FiniteGroup, Perm};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recipe {
    Named(Family, usize),
    Direct(Vec<Recipe>),
    Semidirect(Box<Recipe>, Box<Recipe>, Action),
    Perm { degree: usize, generators: Vec<Perm> },
    Label(String),
}

impl Recipe {
    /// Builds the group. Bracketed labels are an error here; use
    /// [`Recipe::build_with`] to resolve them.
    pub fn build(&self) -> Result<FiniteGroup> {
        self.build_with(&mut |label| Err(Error::UnknownLabel(label.to_string())))
    }

    pub fn build_with(&self, resolve: &mut dyn FnMut(&str) -> Result<FiniteGroup>) -> Result<FiniteGroup> {
        match self {
            Recipe::Named(family, n) => FiniteGroup::named(*family, *n),
            Recipe::Direct(parts) => {
                let mut iter = parts.iter();
                let first = iter
                    .next()
                    .ok_or_else(|| Error::InvalidParameter("direct() needs factors".into()))?
                    .build_with(resolve)?;
                iter.try_fold(first, |acc, r| {
                    Ok(FiniteGroup::direct_product(&acc, &r.build_with(resolve)?))
                })
            }
            Recipe::Semidirect(n, h, action) => {
                let n = n.build_with(resolve)?;
                let h = h.build_with(resolve)?;
                FiniteGroup::semidirect_product(&n, &h, action)
            }
            Recipe::Perm { degree, generators } => FiniteGroup::from_generators(*degree, generators),
            Recipe::Label(label) => resolve(label),
        }
    }

    /// Labels referenced anywhere inside the expression.
    pub fn labels(&self) -> Vec<&str> {
        match self {
            Recipe::Label(l) => vec![l.as_str()],
            Recipe::Direct(parts) => parts.iter().flat_map(|p| p.labels()).collect(),
            Recipe::Semidirect(n, h, _) => {
                let mut v = n.labels();
                v.extend(h.labels());
                v
            }
            _ => Vec::new(),
        }
    }
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Recipe::Named(family, n) => write!(f, "{family}({n})"),
            Recipe::Direct(parts) => {
                write!(f, "direct(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, ")")
            }
            Recipe::Semidirect(n, h, action) => write!(f, "semidirect({n},{h},{action})"),
            Recipe::Perm { degree, generators } => {
                write!(f, "perm({degree};")?;
                for (i, g) in generators.iter().enumerate() {
                    write!(f, "{}{g}", if i == 0 { " " } else { ", " })?;
                }
                write!(f, ")")
            }
            Recipe::Label(l) => write!(f, "{l}"),
        }
    }
}

impl FromStr for Recipe {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser { src: s, pos: 0 };
        let r = p.recipe()?;
        p.skip_ws();
        if p.pos != s.len() {
            return Err(p.error("trailing input"));
        }
        Ok(r)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, what: &str) -> Error {
        Error::parse(1, format!("{what} at column {} of {:?}", self.pos + 1, self.src))
    }

    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.rest().starts_with(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{c}'")))
        }
    }

    fn ident(&mut self) -> Result<&str> {
        self.skip_ws();
        let len = self
            .rest()
            .find(|c: char| !c.is_ascii_alphabetic())
            .unwrap_or(self.rest().len());
        if len == 0 {
            return Err(self.error("expected a name"));
        }
        let start = self.pos;
        self.pos += len;
        Ok(&self.src[start..self.pos])
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let len = self
            .rest()
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(self.rest().len());
        let n = self.rest()[..len]
            .parse()
            .map_err(|_| self.error("expected a number"))?;
        self.pos += len;
        Ok(n)
    }

    /// One permutation written as consecutive cycles, e.g. `(0 1)(2 3)`.
    fn cycles(&mut self) -> Result<Perm> {
        self.skip_ws();
        let start = self.pos;
        while self.rest().starts_with('(') {
            let close = self.rest().find(')').ok_or_else(|| self.error("unclosed cycle"))?;
            self.pos += close + 1;
            self.skip_ws();
        }
        if self.pos == start {
            return Err(self.error("expected a permutation in cycle notation"));
        }
        self.src[start..self.pos]
            .trim()
            .parse::<Perm>()
            .map_err(|e| self.error(&e.to_string()))
    }

    fn recipe(&mut self) -> Result<Recipe> {
        if self.eat('[') {
            let close = self.rest().find(']').ok_or_else(|| self.error("unclosed label"))?;
            let inner: String = self.rest()[..close].chars().filter(|c| !c.is_whitespace()).collect();
            self.pos += close + 1;
            return Ok(Recipe::Label(format!("[{inner}]")));
        }
        let name = self.ident()?.to_string();
        self.expect('(')?;
        let recipe = match name.as_str() {
            "direct" => {
                let mut parts = vec![self.recipe()?];
                while self.eat(',') {
                    parts.push(self.recipe()?);
                }
                if parts.len() < 2 {
                    return Err(self.error("direct() needs at least two factors"));
                }
                Recipe::Direct(parts)
            }
            "semidirect" => {
                let n = self.recipe()?;
                self.expect(',')?;
                let h = self.recipe()?;
                self.expect(',')?;
                let action = self.action()?;
                Recipe::Semidirect(Box::new(n), Box::new(h), action)
            }
            "perm" => {
                let degree = self.number()?;
                self.expect(';')?;
                let mut generators = vec![self.cycles()?];
                while self.eat(',') {
                    generators.push(self.cycles()?);
                }
                if let Some(g) = generators.iter().find(|g| g.degree() > degree) {
                    return Err(self.error(&format!("{g} exceeds degree {degree}")));
                }
                let generators = generators.iter().map(|g| g.extended(degree)).collect();
                Recipe::Perm { degree, generators }
            }
            family => {
                let family: Family = family
                    .parse()
                    .map_err(|_| self.error(&format!("unknown constructor {family:?}")))?;
                Recipe::Named(family, self.number()?)
            }
        };
        self.expect(')')?;
        Ok(recipe)
    }

    fn action(&mut self) -> Result<Action> {
        let name = self.ident()?.to_string();
        Ok(match name.as_str() {
            "trivial" => Action::Trivial,
            "invert" => Action::Invert,
            "power" => {
                self.expect('(')?;
                let r = self.number()?;
                self.expect(')')?;
                Action::Power(r)
            }
            "conj" => {
                self.expect('(')?;
                let p = self.cycles()?;
                self.expect(')')?;
                Action::Conj(p)
            }
            other => return Err(self.error(&format!("unknown action {other:?}"))),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_prints() {
        for text in [
            "cyclic(8)",
            "direct(cyclic(2),cyclic(6))",
            "direct(cyclic(2),cyclic(2),sym(3))",
            "semidirect(cyclic(3),cyclic(4),invert)",
            "semidirect(cyclic(8),cyclic(2),power(5))",
            "perm(7; (0 1 2)(3 4), (5 6))",
            "semidirect(perm(7; (0 1 2)(3 4), (5 6)),cyclic(2),conj((1 2)(3 5)(4 6)))",
            "[16,9]",
        ] {
            let r: Recipe = text.parse().unwrap();
            assert_eq!(r.to_string(), text);
        }
    }

    #[test]
    fn builds_groups() {
        let g = "direct(cyclic(2),cyclic(6))"
            .parse::<Recipe>()
            .unwrap()
            .build()
            .unwrap();
        assert_eq!(g.six_profile().to_string(), "(3; 3,3,3)");
        let g = "semidirect(cyclic(8),cyclic(2),power(5))"
            .parse::<Recipe>()
            .unwrap()
            .build()
            .unwrap();
        assert_eq!(g.order(), 16);
    }

    #[test]
    fn reports_errors() {
        for bad in [
            "cyclic(",
            "foo(3)",
            "direct(cyclic(2))",
            "perm(2; (0 3))",
            "cyclic(3) x",
            "semidirect(cyclic(3),cyclic(2),spin)",
        ] {
            assert!(matches!(bad.parse::<Recipe>(), Err(Error::Parse { .. })), "{bad}");
        }
        assert!(matches!(
            "[12,1]".parse::<Recipe>().unwrap().build(),
            Err(Error::UnknownLabel(_))
        ));
    }
}
