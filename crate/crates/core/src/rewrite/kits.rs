use super::{RewriteError, RewriteRule};
use crate::diagram::{compose_vertical, DiagramError, OneCellPath, SlicedDiagram};
use crate::presentations::{AdjointPair, FunctorBoxPresentation};
use crate::sig::reserved::{FUNCTOR_DOWN, FUNCTOR_UP};
use crate::sig::TwoGraph;

fn cell(g: &TwoGraph, name: &str, left: &[&str], right: &[&str]) -> Result<SlicedDiagram, DiagramError> {
    let own = |xs: &[&str]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    SlicedDiagram::generator(g, name)?.whisker(g, &own(left), &own(right))
}

fn wire(g: &TwoGraph, w: &str) -> Result<SlicedDiagram, DiagramError> {
    Ok(SlicedDiagram::identity(OneCellPath::from_wires(
        g,
        &[w.to_string()],
    )?))
}

/// Snake rules `(unit | up) ; (up | counit) -> up` and
/// `(down | unit) ; (counit | down) -> down`, named by `names`.
pub fn kit_adjunction(
    g: &TwoGraph,
    pair: &AdjointPair,
    names: [&str; 2],
) -> Result<Vec<RewriteRule>, RewriteError> {
    let (up, down) = (pair.up.as_str(), pair.down.as_str());
    let zig = compose_vertical(
        g,
        &cell(g, &pair.unit, &[], &[up])?,
        &cell(g, &pair.counit, &[up], &[])?,
    )?;
    let zag = compose_vertical(
        g,
        &cell(g, &pair.unit, &[down], &[])?,
        &cell(g, &pair.counit, &[], &[down])?,
    )?;
    Ok(vec![
        RewriteRule::new(g, names[0], zig, wire(g, up)?, true)?,
        RewriteRule::new(g, names[1], zag, wire(g, down)?, true)?,
    ])
}

/// The invertible triangle cells of a 2-adjunction, `alpha` on the down
/// wire and `beta` on the up wire. The swallowtail equations between them
/// are attached as metadata.
pub fn kit_2adjunction(
    g: &TwoGraph,
    pair: &AdjointPair,
    names: [&str; 2],
) -> Result<Vec<RewriteRule>, RewriteError> {
    let [alpha, beta] = names;
    let mut rules = kit_adjunction(g, pair, [beta, alpha])?;
    rules.reverse();
    let (n, e) = (&pair.unit, &pair.counit);
    let unit_tail = format!(
        "{n} ; ({beta} applied to {n} | {}) composed with ({} | {alpha} applied to {n}) is the identity on {n}",
        pair.down, pair.up
    );
    let counit_tail = format!(
        "({} | {alpha} applied to {e}) composed with ({beta} applied to {e} | {}) ; {e} is the identity on {e}",
        pair.down, pair.up
    );
    for r in &mut rules {
        r.metadata.insert("swallowtail.unit".into(), unit_tail.clone());
        r.metadata.insert("swallowtail.counit".into(), counit_tail.clone());
        r.metadata.insert("checked".into(), "no".into());
    }
    Ok(rules)
}

/// One-way rules for an adjunction between 2-cells `x : P -> Q` and
/// `y : Q -> P`: `counit : x ; y -> id(P)` and `unit : id(Q) -> y ; x`.
pub fn kit_cell_adjunction(
    g: &TwoGraph,
    x: &str,
    y: &str,
    names: [&str; 2],
) -> Result<Vec<RewriteRule>, RewriteError> {
    let x = SlicedDiagram::generator(g, x)?;
    let y = SlicedDiagram::generator(g, y)?;
    let xy = compose_vertical(g, &x, &y)?;
    let yx = compose_vertical(g, &y, &x)?;
    let p = SlicedDiagram::identity(x.domain.clone());
    let q = SlicedDiagram::identity(y.domain.clone());
    Ok(vec![
        RewriteRule::new(g, names[0], xy, p, false)?,
        RewriteRule::new(g, names[1], q, yx, false)?,
    ])
}

/// Rules removing a box created by the unit and immediately merged back,
/// oriented toward fewer box segments.
pub fn kit_lax_merge(p: &FunctorBoxPresentation) -> Result<Vec<RewriteRule>, RewriteError> {
    let mut rules = kit_adjunction(&p.graph, &p.pair, ["boxUnitL", "boxUnitR"])?;
    for r in &mut rules {
        r.invertible = false;
        r.metadata.insert("orientation".into(), "fewer box segments".into());
    }
    Ok(rules)
}

/// Merges the two boxes meeting at `position` of the codomain of `d`, where
/// the wires `Fdown, Fup` sit, by closing the junction with the counit.
pub fn merge_boxes(
    p: &FunctorBoxPresentation,
    d: &SlicedDiagram,
    position: usize,
) -> Result<SlicedDiagram, DiagramError> {
    let g = &p.graph;
    let cod = d.codomain(g)?;
    let junction = cod.wires.get(position..position + 2);
    if junction != Some(&[FUNCTOR_DOWN.to_string(), FUNCTOR_UP.to_string()][..]) {
        return Err(DiagramError::LayerMismatch {
            index: d.len(),
            path: cod.to_string(),
        });
    }
    let e = SlicedDiagram::generator(g, &p.pair.counit)?.whisker(
        g,
        &cod.wires[..position],
        &cod.wires[position + 2..],
    )?;
    compose_vertical(g, d, &e)
}
