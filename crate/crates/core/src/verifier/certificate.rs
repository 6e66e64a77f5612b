use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{find_clique, find_coloring, max_clique, max_crossing_independent_set};
use crate::error::{Error, Result};
use crate::graph::{ColorPartition, MultipartiteGraph};
use crate::io::graph_digest;

/// A property asserted about a graph.
///
/// Degree claims are one-sided: `min_degree(d)` holds when `δ >= d` and
/// `max_degree(D)` when `Δ <= D`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Claim {
    KFree(usize),
    MinDegree(usize),
    MaxDegree(usize),
    Colorable(usize),
    NoCrossingIndependent(usize),
}

impl Claim {
    fn kind(&self) -> &'static str {
        match self {
            Claim::KFree(_) => "kfree",
            Claim::MinDegree(_) => "min_degree",
            Claim::MaxDegree(_) => "max_degree",
            Claim::Colorable(_) => "colorable",
            Claim::NoCrossingIndependent(_) => "no_crossing_independent",
        }
    }

    fn arg(&self) -> usize {
        match *self {
            Claim::KFree(x)
            | Claim::MinDegree(x)
            | Claim::MaxDegree(x)
            | Claim::Colorable(x)
            | Claim::NoCrossingIndependent(x) => x,
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.kind(), self.arg())
    }
}

/// Accepts `kind:value`, `kind=value` or `kind(value)`.
impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (kind, arg) = s
            .strip_suffix(')')
            .and_then(|x| x.split_once('('))
            .or_else(|| s.split_once(':'))
            .or_else(|| s.split_once('='))
            .ok_or_else(|| Error::UnknownClaim(s.to_string()))?;
        let value: usize = arg
            .trim()
            .parse()
            .map_err(|_| Error::UnknownClaim(s.to_string()))?;
        Ok(match kind.trim() {
            "kfree" => Claim::KFree(value),
            "min_degree" => Claim::MinDegree(value),
            "max_degree" => Claim::MaxDegree(value),
            "colorable" => Claim::Colorable(value),
            "no_crossing_independent" => Claim::NoCrossingIndependent(value),
            _ => return Err(Error::UnknownClaim(s.to_string())),
        })
    }
}

impl Serialize for Claim {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Claim {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Pairwise adjacent vertices.
    Clique { vertices: Vec<usize> },
    /// Colour of each vertex.
    Coloring { classes: Vec<usize> },
    /// Pairwise non-adjacent vertices from distinct parts.
    CrossingSet { vertices: Vec<usize> },
    /// A vertex attaining the extreme degree.
    Vertex { vertex: usize, degree: usize },
    /// Settled by exhaustive search; nothing to exhibit.
    Exhaustive { measured: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyCheck {
    pub claim: Claim,
    pub verdict: bool,
    pub witness: Witness,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub graph_digest: String,
    pub vertices: usize,
    pub parts: usize,
    pub edges: usize,
    pub properties: Vec<PropertyCheck>,
}

impl Certificate {
    pub fn all_hold(&self) -> bool {
        self.properties.iter().all(|p| p.verdict)
    }

    pub fn verdict(&self, claim: Claim) -> Option<bool> {
        self.properties
            .iter()
            .find(|p| p.claim == claim)
            .map(|p| p.verdict)
    }
}

pub fn certify(g: &MultipartiteGraph, claims: &[Claim]) -> Result<Certificate> {
    certify_with(g, claims, None)
}

/// Like [`certify`], with an optional known colouring. A valid colouring
/// settles `kfree` and `colorable` claims without search.
pub fn certify_with(
    g: &MultipartiteGraph,
    claims: &[Claim],
    hint: Option<&ColorPartition>,
) -> Result<Certificate> {
    let hint = hint.filter(|c| c.is_proper_for(g));
    let properties = claims.iter().map(|&c| check(g, c, hint)).collect();
    Ok(Certificate {
        graph_digest: graph_digest(g),
        vertices: g.num_vertices(),
        parts: g.num_parts(),
        edges: g.edge_count(),
        properties,
    })
}

fn check(g: &MultipartiteGraph, claim: Claim, hint: Option<&ColorPartition>) -> PropertyCheck {
    let (verdict, witness) = match claim {
        Claim::KFree(q) => match hint.filter(|c| c.colors_used() < q) {
            Some(c) => (true, coloring_witness(c)),
            None => match find_clique(g, q) {
                Some(vertices) => (false, Witness::Clique { vertices }),
                None => (
                    true,
                    Witness::Exhaustive {
                        measured: max_clique(g).len(),
                    },
                ),
            },
        },
        Claim::MinDegree(d) => {
            let v = g.min_degree_vertex();
            let degree = g.degree(v);
            (degree >= d, Witness::Vertex { vertex: v, degree })
        }
        Claim::MaxDegree(d) => {
            let v = g.max_degree_vertex();
            let degree = g.degree(v);
            (degree <= d, Witness::Vertex { vertex: v, degree })
        }
        Claim::Colorable(t) => {
            let known = hint
                .filter(|c| c.colors_used() <= t)
                .cloned()
                .or_else(|| find_coloring(g, t));
            match known {
                Some(c) => (true, coloring_witness(&c)),
                None => match find_clique(g, t + 1) {
                    Some(vertices) => (false, Witness::Clique { vertices }),
                    None => (
                        false,
                        Witness::Exhaustive {
                            measured: max_clique(g).len(),
                        },
                    ),
                },
            }
        }
        Claim::NoCrossingIndependent(s) => {
            let set = max_crossing_independent_set(g);
            if set.len() >= s {
                let mut vertices = set.vertices().to_vec();
                vertices.truncate(s);
                (false, Witness::CrossingSet { vertices })
            } else {
                (true, Witness::Exhaustive { measured: set.len() })
            }
        }
    };
    PropertyCheck {
        claim,
        verdict,
        witness,
    }
}

fn coloring_witness(c: &ColorPartition) -> Witness {
    // Compact colours to 0..used so the witness is canonical.
    let mut remap = vec![usize::MAX; c.t()];
    let mut next = 0;
    let classes = c
        .as_slice()
        .iter()
        .map(|&x| {
            if remap[x] == usize::MAX {
                remap[x] = next;
                next += 1;
            }
            remap[x]
        })
        .collect();
    Witness::Coloring { classes }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn claim_parsing() {
        assert_eq!("kfree:4".parse::<Claim>().unwrap(), Claim::KFree(4));
        assert_eq!("min_degree(63)".parse::<Claim>().unwrap(), Claim::MinDegree(63));
        assert_eq!(
            "no_crossing_independent=4".parse::<Claim>().unwrap(),
            Claim::NoCrossingIndependent(4)
        );
        assert!(matches!("bogus:3".parse::<Claim>(), Err(Error::UnknownClaim(_))));
        assert!("kfree".parse::<Claim>().is_err());
        assert_eq!(Claim::MaxDegree(3).to_string(), "max_degree:3");
    }

    #[test]
    fn complete_five_is_not_k5_free() {
        let g = MultipartiteGraph::complete(&[1; 5]).unwrap();
        let cert = certify(&g, &[Claim::KFree(5)]).unwrap();
        assert!(!cert.all_hold());
        assert_eq!(
            cert.properties[0].witness,
            Witness::Clique { vertices: vec![0, 1, 2, 3, 4] }
        );
    }

    #[test]
    fn improper_hint_is_ignored() {
        let g = MultipartiteGraph::complete(&[1; 3]).unwrap();
        let bogus = ColorPartition::new(&MultipartiteGraph::edgeless(&[1; 3]).unwrap(), vec![0; 3], 1)
            .unwrap();
        let cert = certify_with(&g, &[Claim::KFree(2), Claim::Colorable(2)], Some(&bogus)).unwrap();
        assert_eq!(cert.verdict(Claim::KFree(2)), Some(false));
        assert_eq!(cert.verdict(Claim::Colorable(2)), Some(false));
    }

    #[test]
    fn serializes_claims_as_strings() {
        let g = MultipartiteGraph::complete(&[1, 1]).unwrap();
        let cert = certify(&g, &[Claim::MinDegree(1)]).unwrap();
        let json = serde_json::to_value(&cert).unwrap();
        assert_eq!(json["properties"][0]["claim"], "min_degree:1");
        assert_eq!(json["properties"][0]["witness"]["kind"], "vertex");
        let back: Certificate = serde_json::from_value(json).unwrap();
        assert_eq!(back, cert);
    }
}
