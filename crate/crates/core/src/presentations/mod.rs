//! The three syntactic presentations: collages of bimodular graphs,
//! functor boxes and internal diagrams.

pub(crate) mod enumerate;
mod functor_box;
mod internal;
mod theory;

use std::fmt;

use crate::diagram::{elaborate, DiagramError, OneCellPath, SlicedDiagram};
use crate::sig::{BimodularGraph, DiagramExpr, Edge, NamedDiagram, TwoGraph};

pub use enumerate::{hom_enumerate, hom_enumerate_capped, Enumeration, ResourceLimit, DEFAULT_MAX_LAYERS};
pub use functor_box::{syn_functor_box, FunctorBoxPresentation};
pub use internal::{syn_internal, InternalPresentation};
pub use theory::{monoidal_graph, present, Presented, MONOIDAL_CELL};

pub const COLLAGE_LEFT: &str = "M";
pub const COLLAGE_RIGHT: &str = "N";
pub const BOX_OUTSIDE: &str = "A";
pub const BOX_INSIDE: &str = "X";
pub const TUBE_OUTSIDE: &str = "I";
pub const TUBE_INSIDE: &str = "G";

/// A 2-graph with two chosen zero-cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipointedTwoGraph {
    pub graph: TwoGraph,
    pub point_m: String,
    pub point_n: String,
}

/// An adjunction between 1-generators, `unit : id -> up ; down` and
/// `counit : down ; up -> id`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjointPair {
    pub up: String,
    pub down: String,
    pub unit: String,
    pub counit: String,
}

fn strings(xs: &[String]) -> Vec<String> {
    xs.to_vec()
}

pub fn collage_of(g: &BimodularGraph) -> BipointedTwoGraph {
    let mut t = TwoGraph {
        zero_cells: vec![COLLAGE_LEFT.into(), COLLAGE_RIGHT.into()],
        ..Default::default()
    };
    for o in &g.left_objects {
        t.add_one(o, COLLAGE_LEFT, COLLAGE_LEFT);
    }
    for o in &g.right_objects {
        t.add_one(o, COLLAGE_RIGHT, COLLAGE_RIGHT);
    }
    for o in &g.center_objects {
        t.add_one(o, COLLAGE_LEFT, COLLAGE_RIGHT);
    }
    let mut add = |es: &[Edge], at: &str| {
        for e in es {
            t.add_two_at(&e.name, &strings(&e.domain), &strings(&e.codomain), at);
        }
    };
    add(&g.left_edges, COLLAGE_LEFT);
    add(&g.right_edges, COLLAGE_RIGHT);
    add(&g.central_edges, COLLAGE_LEFT);
    BipointedTwoGraph {
        graph: t,
        point_m: COLLAGE_LEFT.into(),
        point_n: COLLAGE_RIGHT.into(),
    }
}

/// Reads a bimodular graph back off a bipointed 2-graph: the 1-generators
/// and 2-generators of its three hom-categories between the chosen cells.
pub fn chosen(b: &BipointedTwoGraph) -> BimodularGraph {
    let (m, n) = (&b.point_m, &b.point_n);
    let mut out = BimodularGraph::default();
    for o in &b.graph.one_generators {
        match (&o.source, &o.target) {
            (s, t) if s == m && t == m => out.left_objects.push(o.name.clone()),
            (s, t) if s == n && t == n => out.right_objects.push(o.name.clone()),
            (s, t) if s == m && t == n => out.center_objects.push(o.name.clone()),
            _ => {}
        }
    }
    for gen in &b.graph.two_generators {
        let e = Edge {
            name: gen.name.clone(),
            domain: gen.domain.clone(),
            codomain: gen.codomain.clone(),
        };
        match b.graph.endpoints(gen) {
            Some((s, t)) if &s == m && &t == m => out.left_edges.push(e),
            Some((s, t)) if &s == n && &t == n => out.right_edges.push(e),
            Some((s, t)) if &s == m && &t == n => out.central_edges.push(e),
            _ => {}
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TypeError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("no central wire in {0}")]
    NoCentralWire(OneCellPath),
    #[error("more than one central wire in {0}")]
    MultipleCentralWires(OneCellPath),
    #[error("wire `{wire}` is on the wrong side of the central wire in {path}")]
    MisplacedWire { wire: String, path: OneCellPath },
    #[error("central wire mismatch: `{found}` where `{expected}` is required")]
    CentralMismatch { expected: String, found: String },
}

/// One boundary split around its central wire.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralFactor {
    pub left_prefix: Vec<String>,
    pub central: String,
    pub right_suffix: Vec<String>,
}

impl fmt::Display for CentralFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {} [{}]",
            self.left_prefix.join(", "),
            self.central,
            self.right_suffix.join(", ")
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralTyping {
    pub domain: CentralFactor,
    pub codomain: CentralFactor,
}

pub fn factor_central(g: &BimodularGraph, path: &OneCellPath) -> Result<CentralFactor, TypeError> {
    let centrals: Vec<usize> = (0..path.wires.len())
        .filter(|&i| g.is_center(&path.wires[i]))
        .collect();
    let c = match centrals.as_slice() {
        [] => return Err(TypeError::NoCentralWire(path.clone())),
        [c] => *c,
        _ => return Err(TypeError::MultipleCentralWires(path.clone())),
    };
    let misplaced = |wire: &String| TypeError::MisplacedWire {
        wire: wire.clone(),
        path: path.clone(),
    };
    if let Some(w) = path.wires[..c].iter().find(|w| !g.is_left(w)) {
        return Err(misplaced(w));
    }
    if let Some(w) = path.wires[c + 1..].iter().find(|w| !g.is_right(w)) {
        return Err(misplaced(w));
    }
    Ok(CentralFactor {
        left_prefix: path.wires[..c].to_vec(),
        central: path.wires[c].clone(),
        right_suffix: path.wires[c + 1..].to_vec(),
    })
}

/// Checks that every path of `d` has exactly one central wire with only
/// left wires before it and right wires after it.
pub fn typecheck_central(d: &SlicedDiagram, g: &BimodularGraph) -> Result<CentralTyping, TypeError> {
    let c = collage_of(g);
    let paths = d.paths(&c.graph)?;
    let mut factors = Vec::with_capacity(paths.len());
    for p in &paths {
        factors.push(factor_central(g, p)?);
    }
    Ok(CentralTyping {
        domain: factors.first().cloned().expect("non-empty"),
        codomain: factors.pop().expect("non-empty"),
    })
}

/// Elaborates an expression over the collage and typechecks it. A vertical
/// composite whose central wires disagree is reported as a central mismatch.
pub fn elaborate_collage(
    g: &BimodularGraph,
    expr: &DiagramExpr,
    named: &[NamedDiagram],
) -> Result<(SlicedDiagram, CentralTyping), TypeError> {
    let c = collage_of(g);
    let d = elaborate(&c.graph, expr, named).map_err(|e| match e {
        DiagramError::BoundaryMismatch { expected, found } => {
            let central = |p: &OneCellPath| p.wires.iter().find(|w| g.is_center(w)).cloned();
            match (central(&expected), central(&found)) {
                (Some(a), Some(b)) if a != b => TypeError::CentralMismatch {
                    expected: a,
                    found: b,
                },
                _ => TypeError::Diagram(DiagramError::BoundaryMismatch { expected, found }),
            }
        }
        other => TypeError::Diagram(other),
    })?;
    let t = typecheck_central(&d, g)?;
    Ok((d, t))
}

/// Edge counts `(left, central, right)` of the graph and of the chosen
/// generators of its collage, and any edge that fails to come back.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitIsoReport {
    pub graph_counts: (usize, usize, usize),
    pub collage_counts: (usize, usize, usize),
    pub mismatches: Vec<String>,
}

impl UnitIsoReport {
    pub fn holds(&self) -> bool {
        self.mismatches.is_empty() && self.graph_counts == self.collage_counts
    }
}

impl fmt::Display for UnitIsoReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b, c) = self.graph_counts;
        let (x, y, z) = self.collage_counts;
        writeln!(f, "graph edges (left, central, right): ({a}, {b}, {c})")?;
        writeln!(f, "collage generators (left, central, right): ({x}, {y}, {z})")?;
        for m in &self.mismatches {
            writeln!(f, "mismatch: {m}")?;
        }
        Ok(())
    }
}

pub fn unit_iso_check(g: &BimodularGraph) -> UnitIsoReport {
    let back = chosen(&collage_of(g));
    let mut mismatches = Vec::new();
    let families = [
        ("left", &g.left_edges, &back.left_edges),
        ("central", &g.central_edges, &back.central_edges),
        ("right", &g.right_edges, &back.right_edges),
    ];
    for (family, ours, theirs) in families {
        for e in ours.iter() {
            if theirs.iter().filter(|x| *x == e).count() != 1 {
                mismatches.push(format!("{family} edge `{}` has no unique image", e.name));
            }
        }
        for e in theirs.iter() {
            if !ours.contains(e) {
                mismatches.push(format!("{family} generator `{}` has no preimage", e.name));
            }
        }
    }
    for (family, ours, theirs) in [
        ("left", &g.left_objects, &back.left_objects),
        ("right", &g.right_objects, &back.right_objects),
        ("center", &g.center_objects, &back.center_objects),
    ] {
        if ours != theirs {
            mismatches.push(format!("{family} objects differ"));
        }
    }
    UnitIsoReport {
        graph_counts: (g.left_edges.len(), g.central_edges.len(), g.right_edges.len()),
        collage_counts: (
            back.left_edges.len(),
            back.central_edges.len(),
            back.right_edges.len(),
        ),
        mismatches,
    }
}

#[cfg(test)]
mod tests;
