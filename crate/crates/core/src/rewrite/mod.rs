//! Rewriting sliced diagrams with directed rules, matched modulo a bounded
//! number of exchange moves.

mod kits;
mod matching;
mod search;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagram::{elaborate, DiagramError, OneCellPath, SlicedDiagram};
use crate::sig::{EquationSet, NamedDiagram, TwoGraph};

pub use kits::{kit_2adjunction, kit_adjunction, kit_cell_adjunction, kit_lax_merge, merge_boxes};
pub use matching::{apply_rule, find_matches, successors};
pub use search::{bounded_eq, validate_trace, TraceError, Verdict, Witness};

pub const DEFAULT_DEPTH: usize = 32;
pub const DEFAULT_SEARCH_BOUND: usize = 8;
/// Exchange representatives examined per diagram.
pub const DEFAULT_REPRESENTATIVE_CAP: usize = 4096;
/// Distinct diagrams visited by one equality search.
pub const DEFAULT_STATE_CAP: usize = 20_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RewriteError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("boundary mismatch: {0} vs {1}")]
    BoundaryMismatch(String, String),
    #[error("unknown rule `{0}`")]
    UnknownRule(String),
    #[error("rule `{0}` is one-way and cannot be used backward")]
    NotInvertible(String),
    #[error("no occurrence of `{rule}` at layer {layer}, offset {offset}")]
    StaleOccurrence {
        rule: String,
        layer: usize,
        offset: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Forward,
    Backward,
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::Forward => "forward",
            Orientation::Backward => "backward",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteRule {
    pub name: String,
    pub lhs: SlicedDiagram,
    pub rhs: SlicedDiagram,
    pub invertible: bool,
    pub metadata: BTreeMap<String, String>,
}

impl RewriteRule {
    pub fn new(
        g: &TwoGraph,
        name: &str,
        lhs: SlicedDiagram,
        rhs: SlicedDiagram,
        invertible: bool,
    ) -> Result<Self, RewriteError> {
        let (a, b) = (lhs.boundary(g)?, rhs.boundary(g)?);
        if a != b {
            return Err(RewriteError::BoundaryMismatch(
                format!("{} -> {}", a.0, a.1),
                format!("{} -> {}", b.0, b.1),
            ));
        }
        Ok(RewriteRule {
            name: name.to_string(),
            lhs,
            rhs,
            invertible,
            metadata: BTreeMap::new(),
        })
    }

    /// Source and target sides for the given orientation.
    pub fn sides(&self, o: Orientation) -> (&SlicedDiagram, &SlicedDiagram) {
        match o {
            Orientation::Forward => (&self.lhs, &self.rhs),
            Orientation::Backward => (&self.rhs, &self.lhs),
        }
    }

    /// Orientations this rule may be used in. A side without layers is
    /// never matched.
    pub fn orientations(&self) -> Vec<Orientation> {
        let mut out = Vec::new();
        if !self.lhs.is_empty() {
            out.push(Orientation::Forward);
        }
        if self.invertible && !self.rhs.is_empty() {
            out.push(Orientation::Backward);
        }
        out
    }

    /// The rule as an equation line of the `.collage` syntax.
    pub fn to_equation(&self) -> String {
        format!(
            "equation {} : {} = {};",
            self.name,
            side_expr(&self.lhs),
            side_expr(&self.rhs)
        )
    }
}

fn side_expr(d: &SlicedDiagram) -> String {
    if d.is_empty() {
        return if d.domain.is_empty() {
            format!("id(@{})", d.domain.start)
        } else {
            format!("id({})", d.domain.wires.join(", "))
        };
    }
    let layers: Vec<String> = d
        .layers
        .iter()
        .map(|l| {
            let parts: Vec<&str> = l
                .left
                .iter()
                .map(String::as_str)
                .chain(std::iter::once(l.gen.as_str()))
                .chain(l.right.iter().map(String::as_str))
                .collect();
            if parts.len() > 1 {
                format!("({})", parts.join(" | "))
            } else {
                parts[0].to_string()
            }
        })
        .collect();
    layers.join(" ; ")
}

/// A located rule application.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Step {
    pub rule: String,
    pub layer: usize,
    pub offset: usize,
    pub orientation: Orientation,
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} ({}) at layer {}, offset {}",
            self.rule, self.orientation, self.layer, self.offset
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Occurrence {
    pub layer: usize,
    pub offset: usize,
    pub orientation: Orientation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteTrace {
    pub start: SlicedDiagram,
    pub steps: Vec<Step>,
}

pub fn trace_to_json(steps: &[Step]) -> String {
    serde_json::to_string_pretty(steps).expect("serializable")
}

pub fn trace_from_json(s: &str) -> Result<Vec<Step>, serde_json::Error> {
    serde_json::from_str(s)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub depth: usize,
    pub search_bound: usize,
    pub representative_cap: usize,
    pub state_cap: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            depth: DEFAULT_DEPTH,
            search_bound: DEFAULT_SEARCH_BOUND,
            representative_cap: DEFAULT_REPRESENTATIVE_CAP,
            state_cap: DEFAULT_STATE_CAP,
        }
    }
}

/// Turns every equation into an invertible rule.
pub fn rules_from_equations(
    g: &TwoGraph,
    eqs: &EquationSet,
    named: &[NamedDiagram],
) -> Result<Vec<RewriteRule>, RewriteError> {
    eqs.equations
        .iter()
        .map(|e| {
            let l = elaborate(g, &e.lhs, named)?;
            let r = elaborate(g, &e.rhs, named)?;
            RewriteRule::new(g, &e.name, l, r, true)
        })
        .collect()
}

pub(crate) fn boundary_string(p: &(OneCellPath, OneCellPath)) -> String {
    format!("{} -> {}", p.0, p.1)
}

#[cfg(test)]
mod tests;
