//! Plain-text embedding certificates.
//!
//! ```text
//! embedding orientable            # or: signed
//! graph 5 10
//! v 0 e                           # optional vertex labels
//! e 0 1 +                         # one line per edge; sign only when signed
//! r 0: 1 2 3 4                    # cyclic order of neighbours
//! claim orientable 1 faces 5      # or: claim nonorientable <crosscaps> ...
//! ```
//!
//! [`verify`] rebuilds the graph, re-traces the faces and compares the
//! result with the claim.

use std::fmt::Write as _;

use serde::Serialize;

use super::rotation::{trace_signed_faces, RotationSystem, SignedRotationSystem};
use super::{Embedding, Surface};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Surface and face count stated by a certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub surface: Surface,
    /// Genus for orientable claims, crosscap number otherwise.
    pub genus: usize,
    pub faces: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub graph: Graph,
    pub system: SignedRotationSystem,
    pub signed: bool,
    pub claim: Claim,
}

pub fn claim_of(e: &Embedding) -> Claim {
    Claim {
        surface: if e.orientable {
            Surface::Orientable
        } else {
            Surface::Nonorientable
        },
        genus: e.surface_genus(),
        faces: e.faces,
    }
}

pub fn write_certificate(g: &Graph, e: &Embedding) -> String {
    let mut out = String::new();
    let kind = if e.signed { "signed" } else { "orientable" };
    writeln!(out, "embedding {kind}").unwrap();
    writeln!(out, "graph {} {}", g.n(), g.m()).unwrap();
    for v in 0..g.n() {
        if g.label(v) != v.to_string() {
            writeln!(out, "v {v} {}", g.label(v)).unwrap();
        }
    }
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        if e.signed {
            let s = if e.system.signs[i] > 0 { '+' } else { '-' };
            writeln!(out, "e {u} {v} {s}").unwrap();
        } else {
            writeln!(out, "e {u} {v}").unwrap();
        }
    }
    for (v, r) in e.system.rotation.rotations().iter().enumerate() {
        let list: Vec<String> = r.iter().map(|w| w.to_string()).collect();
        writeln!(out, "r {v}: {}", list.join(" ")).unwrap();
    }
    let c = claim_of(e);
    writeln!(out, "claim {} {} faces {}", c.surface, c.genus, c.faces).unwrap();
    out
}

fn num(line: usize, tok: Option<&str>, what: &str) -> Result<usize> {
    tok.ok_or_else(|| Error::parse(line, format!("missing {what}")))?
        .parse()
        .map_err(|_| Error::parse(line, format!("bad {what}")))
}

pub fn parse_certificate(text: &str) -> Result<Certificate> {
    let mut signed = None;
    let mut size = None;
    let mut labels: Vec<(usize, String)> = Vec::new();
    let mut edges = Vec::new();
    let mut signs = Vec::new();
    let mut rot: Vec<Option<Vec<usize>>> = Vec::new();
    let mut claim = None;
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut tok = line.split_whitespace();
        match tok.next() {
            Some("embedding") => {
                signed = Some(match tok.next() {
                    Some("orientable") => false,
                    Some("signed") => true,
                    _ => return Err(Error::parse(ln, "expected 'orientable' or 'signed'")),
                })
            }
            Some("graph") => {
                let n = num(ln, tok.next(), "vertex count")?;
                let m = num(ln, tok.next(), "edge count")?;
                rot = vec![None; n];
                size = Some((n, m));
            }
            Some("v") => {
                let v = num(ln, tok.next(), "vertex")?;
                let name = tok.next().ok_or_else(|| Error::parse(ln, "missing label"))?;
                labels.push((v, name.to_string()));
            }
            Some("e") => {
                let u = num(ln, tok.next(), "endpoint")?;
                let v = num(ln, tok.next(), "endpoint")?;
                let s = match tok.next() {
                    None | Some("+") => 1,
                    Some("-") => -1,
                    Some(t) => return Err(Error::parse(ln, format!("bad sign '{t}'"))),
                };
                edges.push((u, v));
                signs.push(((u.min(v), u.max(v)), s));
            }
            Some("r") => {
                let head = tok.next().ok_or_else(|| Error::parse(ln, "missing vertex"))?;
                let v = num(ln, head.strip_suffix(':'), "vertex")?;
                let list = tok
                    .map(|t| t.parse().map_err(|_| Error::parse(ln, format!("bad neighbour '{t}'"))))
                    .collect::<Result<Vec<usize>>>()?;
                let slot = rot
                    .get_mut(v)
                    .ok_or_else(|| Error::parse(ln, "rotation before graph line or vertex out of range"))?;
                if slot.replace(list).is_some() {
                    return Err(Error::parse(ln, format!("second rotation for vertex {v}")));
                }
            }
            Some("claim") => {
                let surface = match tok.next() {
                    Some("orientable") => Surface::Orientable,
                    Some("nonorientable") => Surface::Nonorientable,
                    _ => return Err(Error::parse(ln, "expected 'orientable' or 'nonorientable'")),
                };
                let genus = num(ln, tok.next(), "genus")?;
                if tok.next() != Some("faces") {
                    return Err(Error::parse(ln, "expected 'faces'"));
                }
                let faces = num(ln, tok.next(), "face count")?;
                claim = Some(Claim { surface, genus, faces });
            }
            Some(other) => return Err(Error::parse(ln, format!("unknown record '{other}'"))),
            None => unreachable!(),
        }
    }
    let last = text.lines().count();
    let signed = signed.ok_or_else(|| Error::parse(last, "missing 'embedding' line"))?;
    let (n, m) = size.ok_or_else(|| Error::parse(last, "missing 'graph' line"))?;
    let claim = claim.ok_or_else(|| Error::parse(last, "missing 'claim' line"))?;
    let mut graph = Graph::from_edges(n, edges)?;
    if graph.m() != m {
        return Err(Error::parse(
            last,
            format!("expected {m} distinct edges, found {}", graph.m()),
        ));
    }
    if !labels.is_empty() {
        let mut names: Vec<String> = (0..n).map(|v| v.to_string()).collect();
        for (v, name) in labels {
            *names.get_mut(v).ok_or(Error::InvalidVertex(v))? = name;
        }
        graph = graph.with_labels(names);
    }
    let rot = rot
        .into_iter()
        .enumerate()
        .map(|(v, r)| r.ok_or_else(|| Error::InvalidRotation(format!("no rotation for vertex {v}"))))
        .collect::<Result<Vec<_>>>()?;
    let rotation = RotationSystem::new(&graph, rot)?;
    let mut sign_vec = vec![1i8; graph.m()];
    for (e, s) in signs {
        sign_vec[graph.edge_index(e.0, e.1).expect("edge was added")] = s;
    }
    if !signed && sign_vec.iter().any(|&s| s < 0) {
        return Err(Error::InvalidRotation(
            "negative edge in an orientable certificate".into(),
        ));
    }
    let system = SignedRotationSystem::new(&graph, rotation, sign_vec)?;
    Ok(Certificate {
        graph,
        system,
        signed,
        claim,
    })
}

/// Outcome of re-tracing a certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub claim: Claim,
    pub traced: Claim,
    pub ok: bool,
}

impl std::fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let c = &self.traced;
        write!(
            f,
            "{}: traced {} surface of genus {} with {} faces",
            if self.ok { "OK" } else { "MISMATCH" },
            c.surface,
            c.genus,
            c.faces
        )?;
        if !self.ok {
            let c = &self.claim;
            write!(f, " (claimed {} {} with {} faces)", c.surface, c.genus, c.faces)?;
        }
        Ok(())
    }
}

pub fn verify_certificate(c: &Certificate) -> Result<VerifyReport> {
    let t = trace_signed_faces(&c.graph, &c.system)?;
    let traced = Claim {
        surface: if t.orientable {
            Surface::Orientable
        } else {
            Surface::Nonorientable
        },
        genus: if t.orientable { t.euler_genus / 2 } else { t.euler_genus },
        faces: t.face_count(),
    };
    Ok(VerifyReport {
        claim: c.claim,
        traced,
        ok: traced == c.claim,
    })
}

/// Parses and re-checks a certificate.
pub fn verify(text: &str) -> Result<VerifyReport> {
    verify_certificate(&parse_certificate(text)?)
}
