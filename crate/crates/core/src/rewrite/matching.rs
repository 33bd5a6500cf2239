use std::collections::{BTreeMap, BTreeSet};

use super::{Occurrence, Orientation, RewriteError, RewriteRule, SearchConfig, Step};
use crate::diagram::{exchange_representatives_tracked, normalize, OneCellPath, SlicedDiagram};
use crate::sig::TwoGraph;

struct Rep {
    d: SlicedDiagram,
    paths: Vec<OneCellPath>,
    /// Index of each layer in the normal form.
    ids: Vec<usize>,
}

/// Exchange representatives of the normal form of `d`, in the fixed
/// breadth-first order every occurrence is resolved against.
fn representatives(g: &TwoGraph, d: &SlicedDiagram, cfg: &SearchConfig) -> Vec<Rep> {
    let base = normalize(g, d);
    exchange_representatives_tracked(g, &base, cfg.search_bound, cfg.representative_cap)
        .into_iter()
        .map(|(d, ids)| {
            let paths = d.paths(g).expect("representatives are well-typed");
            Rep { d, paths, ids }
        })
        .collect()
}

/// Offset at which `lhs` would sit if its first layer were `rep`'s layer `layer`.
fn candidate_offset(rep: &Rep, lhs: &SlicedDiagram, layer: usize) -> Option<usize> {
    let first = lhs.layers.first()?;
    if layer + lhs.len() > rep.d.len() || rep.d.layers[layer].gen != first.gen {
        return None;
    }
    rep.d.layers[layer].offset().checked_sub(first.offset())
}

fn matches_at(g: &TwoGraph, rep: &Rep, lhs: &SlicedDiagram, layer: usize, offset: usize) -> bool {
    if lhs.is_empty() || layer + lhs.len() > rep.d.len() {
        return false;
    }
    let ok_layers = lhs.layers.iter().enumerate().all(|(i, l)| {
        let r = &rep.d.layers[layer + i];
        r.gen == l.gen && r.offset() == offset + l.offset()
    });
    if !ok_layers {
        return false;
    }
    let path = &rep.paths[layer];
    let m = lhs.domain.len();
    if offset + m > path.len() || path.wires[offset..offset + m] != lhs.domain.wires[..] {
        return false;
    }
    path.zero_cell_at(g, offset) == lhs.domain.start
}

fn replace(rep: &Rep, lhs: &SlicedDiagram, rhs: &SlicedDiagram, layer: usize, offset: usize) -> SlicedDiagram {
    let path = &rep.paths[layer];
    let left = &path.wires[..offset];
    let right = &path.wires[offset + lhs.domain.len()..];
    let mut layers = rep.d.layers[..layer].to_vec();
    for l in &rhs.layers {
        let mut l2 = l.clone();
        l2.left = left.iter().chain(&l.left).cloned().collect();
        l2.right.extend(right.iter().cloned());
        layers.push(l2);
    }
    layers.extend(rep.d.layers[layer + lhs.len()..].iter().cloned());
    SlicedDiagram {
        domain: rep.d.domain.clone(),
        layers,
    }
}

/// Every place `rule` (in orientation `o`) matches some exchange
/// representative of `d`, sorted by layer and offset. A group of layers
/// matched in several representatives is reported once, at its position in
/// the first of them.
pub fn find_matches(
    g: &TwoGraph,
    d: &SlicedDiagram,
    rule: &RewriteRule,
    o: Orientation,
    cfg: &SearchConfig,
) -> Vec<Occurrence> {
    let (lhs, _) = rule.sides(o);
    if lhs.is_empty() || (o == Orientation::Backward && !rule.invertible) {
        return Vec::new();
    }
    let mut out = BTreeSet::new();
    let mut groups: BTreeSet<Vec<usize>> = BTreeSet::new();
    for rep in representatives(g, d, cfg) {
        for layer in 0..rep.d.len() {
            if let Some(offset) = candidate_offset(&rep, lhs, layer) {
                if matches_at(g, &rep, lhs, layer, offset) {
                    let mut group = rep.ids[layer..layer + lhs.len()].to_vec();
                    group.sort_unstable();
                    if !groups.insert(group) {
                        continue;
                    }
                    out.insert(Occurrence {
                        layer,
                        offset,
                        orientation: o,
                    });
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Replaces the occurrence in the first representative that has it and
/// returns the normal form of the result.
pub fn apply_rule(
    g: &TwoGraph,
    d: &SlicedDiagram,
    rule: &RewriteRule,
    occ: &Occurrence,
    cfg: &SearchConfig,
) -> Result<SlicedDiagram, RewriteError> {
    if occ.orientation == Orientation::Backward && !rule.invertible {
        return Err(RewriteError::NotInvertible(rule.name.clone()));
    }
    let (lhs, rhs) = rule.sides(occ.orientation);
    for rep in representatives(g, d, cfg) {
        if matches_at(g, &rep, lhs, occ.layer, occ.offset) {
            let out = normalize(g, &replace(&rep, lhs, rhs, occ.layer, occ.offset));
            debug_assert_eq!(out.boundary(g).ok(), d.boundary(g).ok());
            return Ok(out);
        }
    }
    Err(RewriteError::StaleOccurrence {
        rule: rule.name.clone(),
        layer: occ.layer,
        offset: occ.offset,
    })
}

/// All single-step rewrites of `d`, in rule order, then orientation, layer
/// and offset.
pub fn successors(
    g: &TwoGraph,
    d: &SlicedDiagram,
    rules: &[RewriteRule],
    cfg: &SearchConfig,
) -> Vec<(Step, SlicedDiagram)> {
    let mut found: BTreeMap<(usize, Orientation, usize, usize), SlicedDiagram> = BTreeMap::new();
    for rep in representatives(g, d, cfg) {
        for (ri, rule) in rules.iter().enumerate() {
            for o in rule.orientations() {
                let (lhs, rhs) = rule.sides(o);
                for layer in 0..rep.d.len() {
                    let Some(offset) = candidate_offset(&rep, lhs, layer) else {
                        continue;
                    };
                    let key = (ri, o, layer, offset);
                    if found.contains_key(&key) || !matches_at(g, &rep, lhs, layer, offset) {
                        continue;
                    }
                    found.insert(key, normalize(g, &replace(&rep, lhs, rhs, layer, offset)));
                }
            }
        }
    }
    found
        .into_iter()
        .map(|((ri, orientation, layer, offset), d)| {
            (
                Step {
                    rule: rules[ri].name.clone(),
                    layer,
                    offset,
                    orientation,
                },
                d,
            )
        })
        .collect()
}
