use std::collections::{HashMap, VecDeque};

use super::{
    apply_rule, boundary_string, successors, Occurrence, Orientation, RewriteError, RewriteRule,
    SearchConfig, Step,
};
use crate::diagram::{normalize, SlicedDiagram};
use crate::sig::TwoGraph;

/// Returns a description of a model separating the two diagrams, if any.
pub type Witness<'a> = &'a dyn Fn(&SlicedDiagram, &SlicedDiagram) -> Option<String>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Equal(Vec<Step>),
    Distinct(String),
    Unknown,
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Equal(_) => "equal",
            Verdict::Distinct(_) => "distinct",
            Verdict::Unknown => "unknown",
        }
    }
}

/// Breadth-first search for a rewrite path from `d1` to `d2`; a shortest
/// one is returned when found.
pub fn bounded_eq(
    g: &TwoGraph,
    d1: &SlicedDiagram,
    d2: &SlicedDiagram,
    rules: &[RewriteRule],
    cfg: &SearchConfig,
    witness: Option<Witness>,
) -> Result<Verdict, RewriteError> {
    let (b1, b2) = (d1.boundary(g)?, d2.boundary(g)?);
    if b1 != b2 {
        return Err(RewriteError::BoundaryMismatch(
            boundary_string(&b1),
            boundary_string(&b2),
        ));
    }
    let start = normalize(g, d1);
    let goal = normalize(g, d2);
    let mut states = vec![start.clone()];
    let mut parent: Vec<Option<(usize, Step)>> = vec![None];
    let mut index: HashMap<SlicedDiagram, usize> = HashMap::from([(start, 0)]);
    let mut queue = VecDeque::from([(0usize, 0usize)]);
    let mut hit = (states[0] == goal).then_some(0);
    while hit.is_none() {
        let Some((i, dist)) = queue.pop_front() else {
            break;
        };
        if dist == cfg.depth {
            continue;
        }
        for (step, next) in successors(g, &states[i], rules, cfg) {
            if index.contains_key(&next) {
                continue;
            }
            if states.len() >= cfg.state_cap {
                break;
            }
            let j = states.len();
            index.insert(next.clone(), j);
            let done = next == goal;
            states.push(next);
            parent.push(Some((i, step)));
            if done {
                hit = Some(j);
                break;
            }
            queue.push_back((j, dist + 1));
        }
    }
    if let Some(mut j) = hit {
        let mut steps = Vec::new();
        while let Some((p, step)) = parent[j].clone() {
            steps.push(step);
            j = p;
        }
        steps.reverse();
        return Ok(Verdict::Equal(steps));
    }
    if let Some(w) = witness {
        if let Some(reason) = w(d1, d2) {
            return Ok(Verdict::Distinct(reason));
        }
    }
    Ok(Verdict::Unknown)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("step {step}: {reason}")]
pub struct TraceError {
    pub step: usize,
    pub reason: RewriteError,
}

/// Replays `steps` from `start`. On success returns every intermediate
/// diagram, the normal form of `start` first.
pub fn validate_trace(
    g: &TwoGraph,
    start: &SlicedDiagram,
    steps: &[Step],
    rules: &[RewriteRule],
    cfg: &SearchConfig,
) -> Result<Vec<SlicedDiagram>, TraceError> {
    let mut out = vec![normalize(g, start)];
    for (k, step) in steps.iter().enumerate() {
        let fail = |reason| TraceError { step: k, reason };
        let rule = rules
            .iter()
            .find(|r| r.name == step.rule)
            .ok_or_else(|| fail(RewriteError::UnknownRule(step.rule.clone())))?;
        if step.orientation == Orientation::Backward && !rule.invertible {
            return Err(fail(RewriteError::NotInvertible(rule.name.clone())));
        }
        let occ = Occurrence {
            layer: step.layer,
            offset: step.offset,
            orientation: step.orientation,
        };
        let next = apply_rule(g, out.last().expect("non-empty"), rule, &occ, cfg).map_err(fail)?;
        out.push(next);
    }
    Ok(out)
}
