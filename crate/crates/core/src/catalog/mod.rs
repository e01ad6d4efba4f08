//! Validated catalog of small groups.
//!
//! Each entry pairs a GAP-style label with a constructor [`Recipe`] and the
//! element-order multiplicities the constructed group is expected to have.
//! Recipes are treated as claims: [`Catalog::get`] rebuilds the group and
//! rejects it if order or spectrum disagree, and [`Catalog::validate_all`]
//! additionally checks that groups of equal order are pairwise
//! non-isomorphic.
//!
//! File format, one entry per line (`#` starts a comment):
//!
//! ```text
//! [12,5] | direct(cyclic(2),cyclic(6)) | 12 | 1:1,2:3,3:2,6:6 | order12-complete,table1,table2
//! ```

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::recipe::Recipe;
use crate::group::{is_isomorphic, FiniteGroup, OrderSpectrum};

const BUILTIN: &str = include_str!("../../data/catalog.txt");

/// Groups whose power graph has orientable genus two, by GAP label.
pub const TABLE1_LABELS: [&str; 11] = [
    "[8,1]", "[12,5]", "[16,7]", "[16,8]", "[16,9]", "[18,3]", "[24,7]", "[24,8]", "[24,14]", "[36,11]", "[72,43]",
];

/// Groups with exactly three cyclic subgroups of order 6, two of which meet
/// in a subgroup of order 3, and no element order outside {1,2,3,4,6}.
pub const TABLE2_LABELS: [&str; 7] = ["[12,5]", "[18,3]", "[24,7]", "[24,8]", "[24,14]", "[36,11]", "[72,43]"];

/// Expected element-order sets for the [`TABLE2_LABELS`] rows.
pub const TABLE2_SPECTRA: [(&str, &[usize]); 7] = [
    ("[12,5]", &[1, 2, 3, 6]),
    ("[18,3]", &[1, 2, 3, 6]),
    ("[24,7]", &[1, 2, 3, 4, 6]),
    ("[24,8]", &[1, 2, 3, 4, 6]),
    ("[24,14]", &[1, 2, 3, 6]),
    ("[36,11]", &[1, 2, 3, 6]),
    ("[72,43]", &[1, 2, 3, 4, 6]),
];

/// Orders with a complete enumeration and the number of groups of each.
pub const COMPLETE_ORDERS: [(usize, usize); 3] = [(12, 5), (18, 5), (36, 14)];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub label: String,
    pub recipe: Recipe,
    pub expected_order: usize,
    pub expected_spectrum: OrderSpectrum,
    pub tags: BTreeSet<String>,
}

impl CatalogEntry {
    pub fn has_tag(&self, tag: &str) -> bool {
        self.tags.contains(tag)
    }

    fn to_line(&self) -> String {
        let tags: Vec<&str> = self.tags.iter().map(String::as_str).collect();
        format!(
            "{} | {} | {} | {} | {}",
            self.label,
            self.recipe,
            self.expected_order,
            self.expected_spectrum,
            tags.join(",")
        )
    }
}

#[derive(Debug, Default)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
    index: HashMap<String, usize>,
    built: OnceLock<Vec<std::result::Result<FiniteGroup, String>>>,
}

/// One failed check from [`Catalog::validate_all`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationFailure {
    pub label: String,
    pub reason: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct ValidationReport {
    pub entries_checked: usize,
    pub isomorphism_pairs_checked: usize,
    pub failures: Vec<ValidationFailure>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl Catalog {
    /// The catalog shipped with the crate.
    pub fn builtin() -> &'static Catalog {
        static CATALOG: OnceLock<Catalog> = OnceLock::new();
        CATALOG.get_or_init(|| Catalog::parse(BUILTIN).expect("bundled catalog parses"))
    }

    pub fn builtin_text() -> &'static str {
        BUILTIN
    }

    pub fn from_entries(entries: Vec<CatalogEntry>) -> Result<Self> {
        let mut index = HashMap::new();
        for (i, e) in entries.iter().enumerate() {
            if index.insert(e.label.clone(), i).is_some() {
                return Err(Error::InvalidParameter(format!("duplicate label {}", e.label)));
            }
        }
        Ok(Catalog {
            entries,
            index,
            built: OnceLock::new(),
        })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let fields: Vec<&str> = content.split('|').map(str::trim).collect();
            if fields.len() != 5 {
                return Err(Error::parse(line, format!("expected 5 fields, found {}", fields.len())));
            }
            let recipe: Recipe = fields[1]
                .parse()
                .map_err(|e: Error| Error::parse(line, e.to_string()))?;
            let expected_order = fields[2]
                .parse()
                .map_err(|_| Error::parse(line, format!("bad order {:?}", fields[2])))?;
            let expected_spectrum = OrderSpectrum::parse(fields[3]).map_err(|e| Error::parse(line, e.to_string()))?;
            let tags = fields[4]
                .split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(String::from)
                .collect();
            entries.push(CatalogEntry {
                label: fields[0].to_string(),
                recipe,
                expected_order,
                expected_spectrum,
                tags,
            });
        }
        Catalog::from_entries(entries)
    }

    pub fn load(path: &std::path::Path) -> Result<Self> {
        Catalog::parse(&std::fs::read_to_string(path)?)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::from("# label | recipe | order | element-order multiplicities | tags\n");
        for e in &self.entries {
            let _ = writeln!(out, "{}", e.to_line());
        }
        out
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entry(&self, label: &str) -> Result<&CatalogEntry> {
        self.index
            .get(&normalize(label))
            .map(|&i| &self.entries[i])
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn with_tag<'a>(&'a self, tag: &'a str) -> impl Iterator<Item = &'a CatalogEntry> + 'a {
        self.entries.iter().filter(move |e| e.has_tag(tag))
    }

    /// Builds and validates the group behind `label`.
    pub fn get(&self, label: &str) -> Result<FiniteGroup> {
        let i = *self
            .index
            .get(&normalize(label))
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
        match &self.built_all()[i] {
            Ok(g) => Ok(g.clone()),
            Err(reason) => Err(Error::ValidationFailed {
                label: self.entries[i].label.clone(),
                reason: reason.clone(),
            }),
        }
    }

    /// Every entry that builds and validates, in catalog order.
    pub fn groups(&self) -> Vec<(&CatalogEntry, FiniteGroup)> {
        self.entries
            .iter()
            .zip(self.built_all())
            .filter_map(|(e, g)| g.as_ref().ok().map(|g| (e, g.clone())))
            .collect()
    }

    fn built_all(&self) -> &[std::result::Result<FiniteGroup, String>] {
        self.built.get_or_init(|| {
            (0..self.entries.len())
                .into_par_iter()
                .map(|i| {
                    let mut stack = Vec::new();
                    self.build_entry(i, &mut stack).map_err(|e| e.to_string())
                })
                .collect()
        })
    }

    fn build_entry(&self, i: usize, stack: &mut Vec<usize>) -> Result<FiniteGroup> {
        if stack.contains(&i) {
            return Err(Error::InvalidParameter(format!(
                "recipe for {} refers to itself",
                self.entries[i].label
            )));
        }
        stack.push(i);
        let entry = &self.entries[i];
        let mut resolve = |label: &str| -> Result<FiniteGroup> {
            let j = *self
                .index
                .get(&normalize(label))
                .ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
            self.build_entry(j, stack)
        };
        let group = entry.recipe.build_with(&mut resolve);
        stack.pop();
        let group = group?;
        check_entry(entry, &group).map_err(|reason| Error::ValidationFailed {
            label: entry.label.clone(),
            reason,
        })?;
        Ok(group.with_label(entry.label.clone()))
    }

    /// The complete enumeration for `order` (12, 18 or 36).
    pub fn enumerate_complete(&self, order: usize) -> Result<Vec<&CatalogEntry>> {
        if !COMPLETE_ORDERS.iter().any(|&(n, _)| n == order) {
            return Err(Error::UnsupportedOrder(order));
        }
        let tag = format!("order{order}-complete");
        Ok(self.entries.iter().filter(|e| e.has_tag(&tag)).collect())
    }

    /// Groups in the complete enumerations of orders 12, 18 and 36.
    pub fn complete_groups(&self) -> Result<Vec<(&CatalogEntry, FiniteGroup)>> {
        let mut out = Vec::new();
        for (order, _) in COMPLETE_ORDERS {
            for e in self.enumerate_complete(order)? {
                out.push((e, self.get(&e.label)?));
            }
        }
        Ok(out)
    }

    /// Rebuilds every entry and collects all failures instead of stopping
    /// at the first one.
    pub fn validate_all(&self) -> ValidationReport {
        let mut report = ValidationReport {
            entries_checked: self.entries.len(),
            ..Default::default()
        };
        let fail = |label: &str, reason: String| ValidationFailure {
            label: label.to_string(),
            reason,
        };
        let mut by_order: BTreeMap<usize, Vec<(&str, FiniteGroup)>> = BTreeMap::new();
        for (entry, built) in self.entries.iter().zip(self.built_all()) {
            match built {
                Ok(g) => by_order.entry(g.order()).or_default().push((&entry.label, g.clone())),
                Err(reason) => report.failures.push(fail(&entry.label, reason.clone())),
            }
        }

        // Pairwise non-isomorphism within each order.
        let pairs: Vec<(&str, &FiniteGroup, &str, &FiniteGroup)> = by_order
            .values()
            .flat_map(|groups| {
                (0..groups.len()).flat_map(move |i| {
                    (i + 1..groups.len()).map(move |j| (groups[i].0, &groups[i].1, groups[j].0, &groups[j].1))
                })
            })
            .collect();
        report.isomorphism_pairs_checked = pairs.len();
        let iso_failures: Vec<ValidationFailure> = pairs
            .par_iter()
            .filter_map(|&(la, a, lb, b)| match is_isomorphic(a, b) {
                Ok(false) => None,
                Ok(true) => Some(fail(la, format!("isomorphic to {lb}"))),
                Err(e) => Some(fail(la, format!("isomorphism test against {lb} failed: {e}"))),
            })
            .collect();
        report.failures.extend(iso_failures);

        for (order, count) in COMPLETE_ORDERS {
            let found = self.enumerate_complete(order).map(|v| v.len()).unwrap_or(0);
            if found != count {
                report.failures.push(fail(
                    &format!("order{order}-complete"),
                    format!("expected {count} groups, found {found}"),
                ));
            }
        }
        for (tag, expected) in [("table1", &TABLE1_LABELS[..]), ("table2", &TABLE2_LABELS[..])] {
            let found: BTreeSet<&str> = self.with_tag(tag).map(|e| e.label.as_str()).collect();
            let want: BTreeSet<&str> = expected.iter().copied().collect();
            if found != want {
                report
                    .failures
                    .push(fail(tag, format!("tagged {found:?}, expected {want:?}")));
            }
        }
        report
    }
}

/// Checks a constructed group against an entry's expectations.
pub fn check_entry(entry: &CatalogEntry, group: &FiniteGroup) -> std::result::Result<(), String> {
    if group.order() != entry.expected_order {
        return Err(format!(
            "order {} differs from expected {}",
            group.order(),
            entry.expected_order
        ));
    }
    let spectrum = group.order_spectrum();
    if spectrum != entry.expected_spectrum {
        return Err(format!(
            "spectrum {spectrum} differs from expected {}",
            entry.expected_spectrum
        ));
    }
    Ok(())
}

fn normalize(label: &str) -> String {
    label.chars().filter(|c| !c.is_whitespace()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_parses_and_round_trips() {
        let cat = Catalog::builtin();
        assert!(cat.len() >= 70);
        let again = Catalog::parse(&cat.to_text()).unwrap();
        assert_eq!(again.entries(), cat.entries());
    }

    #[test]
    fn lookups() {
        let cat = Catalog::builtin();
        assert_eq!(cat.get("[16,9]").unwrap().count_involutions(), 1);
        assert_eq!(cat.get("[ 18 , 3 ]").unwrap().order(), 18);
        assert!(matches!(cat.get("[7,2]"), Err(Error::UnknownLabel(_))));
        assert!(matches!(cat.enumerate_complete(16), Err(Error::UnsupportedOrder(16))));
    }

    #[test]
    fn wrong_expectation_is_reported() {
        let text = "[6,1] | sym(3) | 6 | 1:1,2:3,3:2 | t\n[6,2] | cyclic(6) | 6 | 1:1,2:1,3:2,6:1 | t\n";
        let cat = Catalog::parse(text).unwrap();
        let report = cat.validate_all();
        assert!(cat.get("[6,1]").is_ok());
        assert!(matches!(cat.get("[6,2]"), Err(Error::ValidationFailed { .. })));
        assert!(report.failures.iter().any(|f| f.label == "[6,2]"));
    }

    #[test]
    fn self_reference_is_an_error() {
        let cat = Catalog::parse("[2,1] | direct([2,1],cyclic(1)) | 2 | 1:1,2:1 | x\n").unwrap();
        assert!(cat.get("[2,1]").is_err());
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = Catalog::parse("# header\n[2,1] | cyclic(2) | 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }
}
