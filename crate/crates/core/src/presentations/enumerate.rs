use std::collections::BTreeSet;

use crate::diagram::{normalize, Layer, OneCellPath, SlicedDiagram};
use crate::rewrite::{bounded_eq, RewriteRule, SearchConfig, Verdict};
use crate::sig::TwoGraph;

pub const DEFAULT_MAX_LAYERS: usize = 6;
const DEFAULT_STATE_CAP: usize = 200_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("enumeration visited more than {limit} partial diagrams")]
pub struct ResourceLimit {
    pub limit: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    /// Exchange normal forms, sorted.
    pub diagrams: Vec<SlicedDiagram>,
    /// Set when the list was further merged by bounded rewriting, so two
    /// entries may still be equal beyond the search bound.
    pub up_to_bounded_search: bool,
}

pub(crate) fn extensions(g: &TwoGraph, d: &SlicedDiagram, path: &OneCellPath) -> Vec<SlicedDiagram> {
    let mut out = Vec::new();
    for gen in &g.two_generators {
        let Some((src, _)) = g.endpoints(gen) else {
            continue;
        };
        let din = gen.domain.len();
        if din > path.len() {
            continue;
        }
        for offset in 0..=path.len() - din {
            if path.wires[offset..offset + din] != gen.domain[..] || path.zero_cell_at(g, offset) != src {
                continue;
            }
            let mut e = d.clone();
            e.layers.push(Layer {
                left: path.wires[..offset].to_vec(),
                gen: gen.name.clone(),
                right: path.wires[offset + din..].to_vec(),
            });
            out.push(e);
        }
    }
    out
}

/// Every 2-cell from `dom` to `cod` with at most `max_layers` layers, one
/// per exchange class. With `rules`, classes equal under a short rewrite
/// search are merged as well.
pub fn hom_enumerate(
    g: &TwoGraph,
    rules: &[RewriteRule],
    dom: &OneCellPath,
    cod: &OneCellPath,
    max_layers: usize,
) -> Result<Enumeration, ResourceLimit> {
    hom_enumerate_capped(g, rules, dom, cod, max_layers, DEFAULT_STATE_CAP)
}

pub fn hom_enumerate_capped(
    g: &TwoGraph,
    rules: &[RewriteRule],
    dom: &OneCellPath,
    cod: &OneCellPath,
    max_layers: usize,
    state_cap: usize,
) -> Result<Enumeration, ResourceLimit> {
    let mut frontier: BTreeSet<SlicedDiagram> = BTreeSet::from([SlicedDiagram::identity(dom.clone())]);
    let mut found: BTreeSet<SlicedDiagram> = BTreeSet::new();
    let mut visited = 1usize;
    for depth in 0..=max_layers {
        let mut next = BTreeSet::new();
        for d in &frontier {
            let path = d.codomain(g).expect("extensions stay well-typed");
            if &path == cod {
                found.insert(d.clone());
            }
            if depth == max_layers {
                continue;
            }
            for e in extensions(g, d, &path) {
                if next.insert(normalize(g, &e)) {
                    visited += 1;
                    if visited > state_cap {
                        return Err(ResourceLimit { limit: state_cap });
                    }
                }
            }
        }
        frontier = next;
    }
    let mut diagrams: Vec<SlicedDiagram> = found.into_iter().collect();
    if !rules.is_empty() {
        let cfg = SearchConfig {
            depth: 4,
            state_cap: 2_000,
            ..SearchConfig::default()
        };
        let mut kept: Vec<SlicedDiagram> = Vec::new();
        for d in diagrams {
            let dup = kept.iter().any(|k| {
                matches!(
                    bounded_eq(g, k, &d, rules, &cfg, None),
                    Ok(Verdict::Equal(_))
                )
            });
            if !dup {
                kept.push(d);
            }
        }
        diagrams = kept;
    }
    Ok(Enumeration {
        diagrams,
        up_to_bounded_search: !rules.is_empty(),
    })
}
