//! Genus of a graph from the genera of its blocks.
//!
//! The orientable genus is additive over blocks. For the crosscap number of a
//! graph with blocks `B_1..B_n`: if every block has crosscap number
//! `2 * genus + 1`, the answer is `1 - n + sum(crosscap)`; otherwise it is
//! `2n - sum(mu)` with `mu = max(2 - 2 * genus, 2 - crosscap)`. Planar
//! blocks are dropped first: taken literally, the second rule would let a
//! pendant edge lower the crosscap number of `K7` from 3 to 2.

use super::blocks::blocks;
use super::rotation::RotationSystem;
use super::{
    crosscap_exact, genus_exact, Embedding, GenusOptions, GenusResult, LowerCertificate, Surface, UpperCertificate,
};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// `(genus, crosscap number)` of a graph from exact block values.
pub fn compose_values(blocks: &[(usize, usize)]) -> (usize, usize) {
    let blocks: Vec<(usize, usize)> = blocks.iter().copied().filter(|&b| b != (0, 0)).collect();
    if blocks.is_empty() {
        return (0, 0);
    }
    let genus = blocks.iter().map(|b| b.0).sum();
    let n = blocks.len() as i64;
    let crosscap = if blocks.iter().all(|&(g, c)| c == 2 * g + 1) {
        1 - n + blocks.iter().map(|b| b.1 as i64).sum::<i64>()
    } else {
        let mu: i64 = blocks.iter().map(|&(g, c)| (2 - 2 * g as i64).max(2 - c as i64)).sum();
        2 * n - mu
    };
    (genus, crosscap.max(0) as usize)
}

fn composed(surface: Surface, value: usize, blocks: usize) -> GenusResult {
    GenusResult {
        surface,
        lower: value,
        upper: Some(value),
        lower_certificate: LowerCertificate::BlockComposition { blocks },
        upper_certificate: Some(UpperCertificate::BlockComposition { blocks }),
        levels: Vec::new(),
    }
}

/// Composes exact `(genus, crosscap)` results of blocks; inexact input is an
/// error.
pub fn compose_blocks(results: &[(GenusResult, GenusResult)]) -> Result<(GenusResult, GenusResult)> {
    let mut values = Vec::with_capacity(results.len());
    for (o, n) in results {
        match (o.exact(), n.exact()) {
            (Some(a), Some(b)) => values.push((a, b)),
            _ => return Err(Error::InexactInput),
        }
    }
    let (genus, crosscap) = compose_values(&values);
    Ok((
        composed(Surface::Orientable, genus, results.len()),
        composed(Surface::Nonorientable, crosscap, results.len()),
    ))
}

/// Genus and crosscap number computed block by block. When every block has
/// an orientable embedding certificate they are glued into one.
pub fn genus_by_blocks(g: &Graph, options: &GenusOptions) -> Result<(GenusResult, GenusResult)> {
    let parts = blocks(g)?;
    let mut results = Vec::with_capacity(parts.len());
    for b in &parts {
        results.push((genus_exact(&b.graph, options)?, crosscap_exact(&b.graph, options)?));
    }
    let (mut orientable, nonorientable) = match compose_blocks(&results) {
        Ok(pair) => pair,
        Err(Error::InexactInput) => return Ok(bounds_only(&results)),
        Err(e) => return Err(e),
    };
    if let Some(embedding) = glue(g, &parts, &results)? {
        orientable.upper_certificate = Some(UpperCertificate::Embedding(embedding));
    }
    Ok((orientable, nonorientable))
}

/// Orientable genus alone, summed over blocks; cheaper than
/// [`genus_by_blocks`] because no crosscap search runs.
pub fn orientable_genus_by_blocks(g: &Graph, options: &GenusOptions) -> Result<GenusResult> {
    let parts = blocks(g)?;
    let mut results = Vec::with_capacity(parts.len());
    for b in &parts {
        results.push(genus_exact(&b.graph, options)?);
    }
    let n = parts.len();
    let lower = results.iter().map(|r| r.lower).sum();
    let upper: Option<usize> = results.iter().map(|r| r.upper).sum();
    let mut out = GenusResult {
        surface: Surface::Orientable,
        lower,
        upper,
        lower_certificate: LowerCertificate::BlockComposition { blocks: n },
        upper_certificate: upper.map(|_| UpperCertificate::BlockComposition { blocks: n }),
        levels: Vec::new(),
    };
    let pairs: Vec<(GenusResult, GenusResult)> = results.into_iter().map(|r| (r.clone(), r)).collect();
    if let Some(embedding) = glue(g, &parts, &pairs)? {
        out.upper_certificate = Some(UpperCertificate::Embedding(embedding));
    }
    Ok(out)
}

fn bounds_only(results: &[(GenusResult, GenusResult)]) -> (GenusResult, GenusResult) {
    let n = results.len();
    let lower: usize = results.iter().map(|r| r.0.lower).sum();
    let upper: Option<usize> = results.iter().map(|r| r.0.upper).sum();
    let orientable = GenusResult {
        surface: Surface::Orientable,
        lower,
        upper,
        lower_certificate: LowerCertificate::BlockComposition { blocks: n },
        upper_certificate: upper.map(|_| UpperCertificate::BlockComposition { blocks: n }),
        levels: Vec::new(),
    };
    // Any block is a subgraph; an orientable embedding plus a crosscap is
    // nonorientable.
    let nonorientable = GenusResult {
        surface: Surface::Nonorientable,
        lower: results.iter().map(|r| r.1.lower).max().unwrap_or(0),
        upper: upper.map(|u| 2 * u + 1),
        lower_certificate: LowerCertificate::BlockComposition { blocks: n },
        upper_certificate: upper.map(|_| UpperCertificate::BlockComposition { blocks: n }),
        levels: Vec::new(),
    };
    (orientable, nonorientable)
}

fn glue(g: &Graph, parts: &[super::Block], results: &[(GenusResult, GenusResult)]) -> Result<Option<Embedding>> {
    let mut rot = vec![Vec::new(); g.n()];
    for (b, (o, _)) in parts.iter().zip(results) {
        let Some(e) = o.embedding() else { return Ok(None) };
        for (i, r) in e.system.rotation.rotations().iter().enumerate() {
            rot[b.vertices[i]].extend(r.iter().map(|&w| b.vertices[w]));
        }
    }
    Embedding::orientable(g, RotationSystem::new(g, rot)?).map(Some)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{apex_join, complete, disjoint_union};

    #[test]
    fn composition_rule() {
        // K8 and K5 sharing a vertex
        assert_eq!(compose_values(&[(2, 4), (1, 1)]).0, 3);
        // three K5 blocks
        assert_eq!(compose_values(&[(1, 1); 3]), (3, 3));
        // two K7 blocks: both have crosscap 2g+1
        assert_eq!(compose_values(&[(1, 3), (1, 3)]), (2, 5));
        // planar blocks contribute nothing
        assert_eq!(compose_values(&[(0, 0), (0, 0), (1, 1)]), (1, 1));
        assert_eq!(compose_values(&[(1, 3), (0, 0)]), (1, 3));
        assert_eq!(compose_values(&[(0, 0), (0, 0)]), (0, 0));
    }

    #[test]
    fn pendant_edge_keeps_k7_crosscap() {
        let g = complete(7);
        let mut edges = g.edges().to_vec();
        edges.push((0, 7));
        let g = Graph::from_edges(8, edges).unwrap();
        let search = GenusOptions::default().search_only();
        assert_eq!(crosscap_exact(&g, &search).unwrap().exact(), Some(3));
        assert_eq!(genus_by_blocks(&g, &search).unwrap().1.exact(), Some(3));
    }

    #[test]
    fn orientable_only_matches_the_pair() {
        let g = apex_join(&[complete(4), complete(4), complete(4)]);
        let opts = GenusOptions::default().search_only();
        let o = orientable_genus_by_blocks(&g, &opts).unwrap();
        assert_eq!(o.exact(), Some(3));
        assert_eq!(o.embedding().unwrap().euler_genus, 6);
    }

    #[test]
    fn apex_over_three_k4() {
        let g = apex_join(&[complete(4), complete(4), complete(4)]);
        let (o, n) = genus_by_blocks(&g, &GenusOptions::default().search_only()).unwrap();
        assert_eq!((o.exact(), n.exact()), (Some(3), Some(3)));
        let e = o.embedding().expect("glued embedding");
        assert_eq!(e.euler_genus, 6);
    }

    #[test]
    fn k1_plus_k7_and_k4() {
        let g = apex_join(&[disjoint_union(&[complete(7), complete(4)])]);
        let (o, n) = genus_by_blocks(&g, &GenusOptions::default()).unwrap();
        // blocks K8 and K5
        assert_eq!((o.exact(), n.exact()), (Some(3), Some(5)));
    }

    #[test]
    fn inexact_blocks_are_rejected() {
        let mut r = genus_exact(&complete(5), &GenusOptions::default()).unwrap();
        r.upper = None;
        let c = crosscap_exact(&complete(5), &GenusOptions::default()).unwrap();
        assert!(matches!(compose_blocks(&[(r, c)]), Err(Error::InexactInput)));
    }
}
