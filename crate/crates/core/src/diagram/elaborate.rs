use super::{compose_vertical, tensor_horizontal, DiagramError, OneCellPath, SlicedDiagram};
use crate::sig::{DiagramExpr, NamedDiagram, TwoGraph};

/// Turns an expression into a sliced diagram over `g`. Names resolve to
/// 2-generators first, then to wires (as identities), then to the named
/// diagrams in `named`.
pub fn elaborate(
    g: &TwoGraph,
    expr: &DiagramExpr,
    named: &[NamedDiagram],
) -> Result<SlicedDiagram, DiagramError> {
    go(g, expr, named, 0)
}

fn go(
    g: &TwoGraph,
    expr: &DiagramExpr,
    named: &[NamedDiagram],
    nesting: usize,
) -> Result<SlicedDiagram, DiagramError> {
    match expr {
        DiagramExpr::Id(ws) => Ok(SlicedDiagram::identity(OneCellPath::from_wires(g, ws)?)),
        DiagramExpr::IdAt(z) => {
            if !g.has_zero_cell(z) {
                return Err(DiagramError::UnknownGenerator(z.clone()));
            }
            Ok(SlicedDiagram::identity(OneCellPath::empty(z)))
        }
        DiagramExpr::Name(n) => {
            if g.two(n).is_some() {
                return SlicedDiagram::generator(g, n);
            }
            if g.one(n).is_some() {
                return Ok(SlicedDiagram::identity(OneCellPath::from_wires(
                    g,
                    std::slice::from_ref(n),
                )?));
            }
            // a cycle among named diagrams cannot nest deeper than their count
            match named.iter().find(|d| &d.name == n) {
                Some(d) if nesting <= named.len() => go(g, &d.expr, named, nesting + 1),
                _ => Err(DiagramError::UnknownGenerator(n.clone())),
            }
        }
        DiagramExpr::Seq(a, b) => {
            let a = go(g, a, named, nesting)?;
            let b = go(g, b, named, nesting)?;
            compose_vertical(g, &a, &b)
        }
        DiagramExpr::Tensor(a, b) => {
            let a = go(g, a, named, nesting)?;
            let b = go(g, b, named, nesting)?;
            tensor_horizontal(g, &a, &b)
        }
    }
}
