use super::{collage_of, syn_functor_box, syn_internal};
use crate::diagram::{elaborate, DiagramError, SlicedDiagram};
use crate::rewrite::{kit_lax_merge, rules_from_equations, RewriteError, RewriteRule};
use crate::sig::{DiagramExpr, Polygraph, Signature, Theory, TwoGraph};

/// The single zero-cell of a monoidal signature seen as a 2-graph.
pub const MONOIDAL_CELL: &str = "*";

/// The 2-graph and rewrite rules a theory is reasoned about in.
#[derive(Debug, Clone)]
pub struct Presented {
    pub graph: TwoGraph,
    pub rules: Vec<RewriteRule>,
}

impl Presented {
    pub fn rule(&self, name: &str) -> Option<&RewriteRule> {
        self.rules.iter().find(|r| r.name == name)
    }
}

pub fn monoidal_graph(p: &Polygraph) -> TwoGraph {
    let mut g = TwoGraph {
        zero_cells: vec![MONOIDAL_CELL.into()],
        ..Default::default()
    };
    for o in &p.objects {
        g.add_one(o, MONOIDAL_CELL, MONOIDAL_CELL);
    }
    for e in &p.edges {
        g.add_two_at(&e.name, &e.domain, &e.codomain, MONOIDAL_CELL);
    }
    g
}

/// Presentation of a theory: its syntactic 2-graph, with the structural
/// rules of that presentation followed by the theory's own equations.
pub fn present(t: &Theory) -> Result<Presented, RewriteError> {
    let (graph, mut rules) = match &t.signature {
        Signature::Monoidal(p) => (monoidal_graph(p), Vec::new()),
        Signature::Two(g) => (g.clone(), Vec::new()),
        Signature::Bimodular(g) => (collage_of(g).graph, Vec::new()),
        Signature::FunctorBox(s) => {
            let p = syn_functor_box(s);
            let mut rules = rules_from_equations(&p.graph, &p.snakes, &[])?;
            rules.extend(kit_lax_merge(&p)?);
            (p.graph, rules)
        }
        Signature::Internal(p) => {
            let p = syn_internal(p);
            (p.graph, p.rules)
        }
    };
    rules.extend(rules_from_equations(&graph, &t.equations, &t.diagrams)?);
    Ok(Presented { graph, rules })
}

impl Presented {
    pub fn elaborate(&self, t: &Theory, expr: &DiagramExpr) -> Result<SlicedDiagram, DiagramError> {
        elaborate(&self.graph, expr, &t.diagrams)
    }

    /// Elaborates the named diagram of `t`.
    pub fn diagram(&self, t: &Theory, name: &str) -> Result<SlicedDiagram, DiagramError> {
        let expr = t
            .diagram(name)
            .ok_or_else(|| DiagramError::UnknownGenerator(name.to_string()))?;
        self.elaborate(t, expr)
    }
}
