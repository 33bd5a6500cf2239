//! 2-cells of the free 2-category on a [`TwoGraph`], in sliced form: one
//! generator per layer, whiskered on both sides.

mod elaborate;
mod exchange;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::sig::TwoGraph;

pub use elaborate::elaborate;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DiagramError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("wires {0:?} do not form a composable path")]
    NotComposable(Vec<String>),
    #[error("boundary mismatch: expected {expected}, found {found}")]
    BoundaryMismatch {
        expected: OneCellPath,
        found: OneCellPath,
    },
    #[error("zero-cell mismatch: `{left}` does not meet `{right}`")]
    ZeroCellMismatch { left: String, right: String },
    #[error("layer {index} does not match its input path {path}")]
    LayerMismatch { index: usize, path: String },
}

/// A composable list of 1-generators starting at a zero-cell.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OneCellPath {
    pub start: String,
    pub wires: Vec<String>,
}

impl OneCellPath {
    pub fn new(start: &str, wires: &[&str]) -> Self {
        OneCellPath {
            start: start.to_string(),
            wires: wires.iter().map(|w| w.to_string()).collect(),
        }
    }

    pub fn empty(start: &str) -> Self {
        OneCellPath {
            start: start.to_string(),
            wires: Vec::new(),
        }
    }

    /// Builds a path from non-empty wires, reading the start off the first wire.
    pub fn from_wires(g: &TwoGraph, wires: &[String]) -> Result<Self, DiagramError> {
        match g.path_endpoints(wires) {
            Some(Some((s, _))) => Ok(OneCellPath {
                start: s,
                wires: wires.to_vec(),
            }),
            _ => Err(DiagramError::NotComposable(wires.to_vec())),
        }
    }

    pub fn check(&self, g: &TwoGraph) -> Result<(), DiagramError> {
        let mut at = self.start.clone();
        for w in &self.wires {
            let one = g
                .one(w)
                .ok_or_else(|| DiagramError::UnknownGenerator(w.clone()))?;
            if one.source != at {
                return Err(DiagramError::NotComposable(self.wires.clone()));
            }
            at = one.target.clone();
        }
        Ok(())
    }

    /// Zero-cell sitting just before wire `offset` (or at the end).
    pub fn zero_cell_at(&self, g: &TwoGraph, offset: usize) -> String {
        if offset == 0 {
            self.start.clone()
        } else {
            g.one(&self.wires[offset - 1])
                .map(|o| o.target.clone())
                .unwrap_or_default()
        }
    }

    pub fn target(&self, g: &TwoGraph) -> String {
        self.zero_cell_at(g, self.wires.len())
    }

    pub fn len(&self) -> usize {
        self.wires.len()
    }

    pub fn is_empty(&self) -> bool {
        self.wires.is_empty()
    }
}

impl fmt::Display for OneCellPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.wires.is_empty() {
            write!(f, "id@{}", self.start)
        } else {
            write!(f, "[{}]", self.wires.join(", "))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Layer {
    pub left: Vec<String>,
    pub gen: String,
    pub right: Vec<String>,
}

impl Layer {
    pub fn offset(&self) -> usize {
        self.left.len()
    }
}

/// A 2-cell as a boundary-matched sequence of whiskered generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SlicedDiagram {
    pub domain: OneCellPath,
    pub layers: Vec<Layer>,
}

impl SlicedDiagram {
    pub fn identity(path: OneCellPath) -> Self {
        SlicedDiagram {
            domain: path,
            layers: Vec::new(),
        }
    }

    /// The diagram of a single 2-generator.
    pub fn generator(g: &TwoGraph, name: &str) -> Result<Self, DiagramError> {
        let gen = g
            .two(name)
            .ok_or_else(|| DiagramError::UnknownGenerator(name.to_string()))?;
        let (start, _) = g
            .endpoints(gen)
            .ok_or_else(|| DiagramError::NotComposable(gen.domain.clone()))?;
        Ok(SlicedDiagram {
            domain: OneCellPath {
                start,
                wires: gen.domain.clone(),
            },
            layers: vec![Layer {
                left: Vec::new(),
                gen: name.to_string(),
                right: Vec::new(),
            }],
        })
    }

    pub fn len(&self) -> usize {
        self.layers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.layers.is_empty()
    }

    /// Every path of the diagram, from the domain (index 0) to the codomain.
    pub fn paths(&self, g: &TwoGraph) -> Result<Vec<OneCellPath>, DiagramError> {
        self.domain.check(g)?;
        let mut out = vec![self.domain.clone()];
        for (index, layer) in self.layers.iter().enumerate() {
            let cur = out.last().expect("non-empty");
            let gen = g
                .two(&layer.gen)
                .ok_or_else(|| DiagramError::UnknownGenerator(layer.gen.clone()))?;
            let mismatch = || DiagramError::LayerMismatch {
                index,
                path: cur.to_string(),
            };
            let o = layer.left.len();
            let end = o + gen.domain.len();
            if end + layer.right.len() != cur.wires.len()
                || cur.wires[..o] != layer.left[..]
                || cur.wires[o..end] != gen.domain[..]
                || cur.wires[end..] != layer.right[..]
            {
                return Err(mismatch());
            }
            let (src, _) = g.endpoints(gen).ok_or_else(mismatch)?;
            if cur.zero_cell_at(g, o) != src {
                return Err(mismatch());
            }
            let mut wires = layer.left.clone();
            wires.extend(gen.codomain.iter().cloned());
            wires.extend(layer.right.iter().cloned());
            out.push(OneCellPath {
                start: cur.start.clone(),
                wires,
            });
        }
        Ok(out)
    }

    pub fn check(&self, g: &TwoGraph) -> Result<(), DiagramError> {
        self.paths(g).map(|_| ())
    }

    pub fn codomain(&self, g: &TwoGraph) -> Result<OneCellPath, DiagramError> {
        Ok(self.paths(g)?.pop().expect("non-empty"))
    }

    /// Domain and codomain.
    pub fn boundary(&self, g: &TwoGraph) -> Result<(OneCellPath, OneCellPath), DiagramError> {
        Ok((self.domain.clone(), self.codomain(g)?))
    }

    /// Wraps the diagram in extra wires on both sides.
    pub fn whisker(&self, g: &TwoGraph, left: &[String], right: &[String]) -> Result<Self, DiagramError> {
        let start = if left.is_empty() {
            self.domain.start.clone()
        } else {
            let s = OneCellPath::from_wires(g, left)?;
            if s.target(g) != self.domain.start {
                return Err(DiagramError::ZeroCellMismatch {
                    left: s.target(g),
                    right: self.domain.start.clone(),
                });
            }
            s.start
        };
        let mut domain = left.to_vec();
        domain.extend(self.domain.wires.iter().cloned());
        domain.extend(right.iter().cloned());
        let d = SlicedDiagram {
            domain: OneCellPath { start, wires: domain },
            layers: self
                .layers
                .iter()
                .map(|l| Layer {
                    left: left.iter().chain(&l.left).cloned().collect(),
                    gen: l.gen.clone(),
                    right: l.right.iter().chain(right).cloned().collect(),
                })
                .collect(),
        };
        d.check(g)?;
        Ok(d)
    }

    /// Canonical JSON form used by the CLI and by test fixtures.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&JsonDiagram::from(self)).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        let j: JsonDiagram = serde_json::from_str(s)?;
        Ok(j.into())
    }
}

#[derive(Serialize, Deserialize)]
struct JsonDiagram {
    start: String,
    domain: Vec<String>,
    layers: Vec<Layer>,
}

impl From<&SlicedDiagram> for JsonDiagram {
    fn from(d: &SlicedDiagram) -> Self {
        JsonDiagram {
            start: d.domain.start.clone(),
            domain: d.domain.wires.clone(),
            layers: d.layers.clone(),
        }
    }
}

impl From<JsonDiagram> for SlicedDiagram {
    fn from(j: JsonDiagram) -> Self {
        SlicedDiagram {
            domain: OneCellPath {
                start: j.start,
                wires: j.domain,
            },
            layers: j.layers,
        }
    }
}

impl fmt::Display for SlicedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.layers.is_empty() {
            return write!(f, "id({})", self.domain);
        }
        let parts: Vec<String> = self
            .layers
            .iter()
            .map(|l| {
                let mut s = String::new();
                for w in &l.left {
                    s.push_str(w);
                    s.push_str(" | ");
                }
                s.push_str(&l.gen);
                for w in &l.right {
                    s.push_str(" | ");
                    s.push_str(w);
                }
                s
            })
            .collect();
        f.write_str(&parts.join(" ; "))
    }
}

pub fn identity(path: OneCellPath) -> SlicedDiagram {
    SlicedDiagram::identity(path)
}

/// `d1` followed by `d2`.
pub fn compose_vertical(
    g: &TwoGraph,
    d1: &SlicedDiagram,
    d2: &SlicedDiagram,
) -> Result<SlicedDiagram, DiagramError> {
    let c1 = d1.codomain(g)?;
    d2.check(g)?;
    if c1 != d2.domain {
        return Err(DiagramError::BoundaryMismatch {
            expected: c1,
            found: d2.domain.clone(),
        });
    }
    let mut layers = d1.layers.clone();
    layers.extend(d2.layers.iter().cloned());
    Ok(SlicedDiagram {
        domain: d1.domain.clone(),
        layers,
    })
}

/// Side-by-side composition: `d1`'s layers first, then `d2`'s.
pub fn tensor_horizontal(
    g: &TwoGraph,
    d1: &SlicedDiagram,
    d2: &SlicedDiagram,
) -> Result<SlicedDiagram, DiagramError> {
    let c1 = d1.codomain(g)?;
    let c2 = d2.codomain(g)?;
    let t1 = d1.domain.target(g);
    if t1 != d2.domain.start {
        return Err(DiagramError::ZeroCellMismatch {
            left: t1,
            right: d2.domain.start.clone(),
        });
    }
    let first = whisker_raw(d1, &[], &d2.domain.wires);
    let second = whisker_raw(d2, &c1.wires, &[]);
    let mut domain = d1.domain.clone();
    domain.wires.extend(d2.domain.wires.iter().cloned());
    let mut layers = first;
    layers.extend(second);
    let out = SlicedDiagram { domain, layers };
    debug_assert_eq!(
        out.codomain(g).map(|c| c.wires),
        Ok([c1.wires, c2.wires].concat())
    );
    Ok(out)
}

fn whisker_raw(d: &SlicedDiagram, left: &[String], right: &[String]) -> Vec<Layer> {
    d.layers
        .iter()
        .map(|l| Layer {
            left: left.iter().chain(&l.left).cloned().collect(),
            gen: l.gen.clone(),
            right: l.right.iter().chain(right).cloned().collect(),
        })
        .collect()
}

/// Canonical representative of the exchange class of `d`: the
/// lexicographically least layer sequence, comparing layers by offset and
/// then by generator name.
pub fn normalize(g: &TwoGraph, d: &SlicedDiagram) -> SlicedDiagram {
    let slots = exchange::slots(g, d);
    exchange::rebuild(g, &d.domain, &exchange::normal_form(&slots))
}

/// Equality in the free 2-category.
pub fn eq_free(g: &TwoGraph, d1: &SlicedDiagram, d2: &SlicedDiagram) -> bool {
    d1.domain == d2.domain && d1.len() == d2.len() && normalize(g, d1) == normalize(g, d2)
}

/// All diagrams reachable from `d` in at most `depth` exchange moves.
pub fn exchange_oracle(g: &TwoGraph, d: &SlicedDiagram, depth: usize) -> BTreeSet<SlicedDiagram> {
    exchange::neighbourhood(&exchange::slots(g, d), depth)
        .into_iter()
        .map(|s| exchange::rebuild(g, &d.domain, &s))
        .collect()
}

/// Exchange representatives of `d` in breadth-first order, at most
/// `depth` moves away and at most `cap` of them.
pub fn exchange_representatives(
    g: &TwoGraph,
    d: &SlicedDiagram,
    depth: usize,
    cap: usize,
) -> Vec<SlicedDiagram> {
    exchange::bfs_order(&exchange::slots(g, d), depth, cap)
        .into_iter()
        .map(|s| exchange::rebuild(g, &d.domain, &s))
        .collect()
}

/// Like [`exchange_representatives`], also giving for each layer of each
/// representative its index in `d`.
pub fn exchange_representatives_tracked(
    g: &TwoGraph,
    d: &SlicedDiagram,
    depth: usize,
    cap: usize,
) -> Vec<(SlicedDiagram, Vec<usize>)> {
    exchange::bfs_tracked(&exchange::slots(g, d), depth, cap)
        .into_iter()
        .map(|(s, ids)| (exchange::rebuild(g, &d.domain, &s), ids))
        .collect()
}

#[cfg(test)]
mod tests;
