use super::{comp, eval_monoidal, whisker, EvalError, Interpretation};
use crate::diagram::SlicedDiagram;
use crate::fincat::FinBimodularCategory;
use crate::presentations::{collage_of, typecheck_central};
use crate::sig::BimodularGraph;

/// Evaluates a collage diagram in the model acting on itself from both
/// sides. Left layers act through the left action, right layers through the
/// right action and central layers are carrier morphisms whiskered by both.
/// Diagrams inside one of the two regions are morphisms of its actor.
pub fn eval_collage(d: &SlicedDiagram, g: &BimodularGraph, i: &Interpretation) -> Result<usize, EvalError> {
    let v = &i.model;
    let c = collage_of(g);
    if d.domain.target(&c.graph) == d.domain.start {
        d.check(&c.graph)?;
        return eval_monoidal(d, i);
    }
    typecheck_central(d, g)?;
    let b = FinBimodularCategory::regular(v);
    let (m, n) = (&b.left.actor, &b.right.actor);
    let carrier = &b.carrier;
    // id on x ◃ (⊗ suffix)
    let central_id = |prefix: &[String], c: &str, suffix: &[String]| -> Result<usize, EvalError> {
        let inner = b.rm(carrier.id(i.obj(c)?), n.id(i.word(n, suffix)?));
        Ok(b.lm(m.id(i.word(m, prefix)?), inner))
    };
    let domain = &d.domain.wires;
    let split = domain.iter().position(|w| g.is_center(w)).expect("typechecked");
    let mut acc = central_id(&domain[..split], &domain[split], &domain[split + 1..])?;
    for layer in &d.layers {
        let name = layer.gen.as_str();
        let step = if g.left_edges.iter().any(|e| e.name == name) {
            let c = layer.right.iter().position(|w| g.is_center(w)).expect("typechecked");
            let act = whisker(m, i.word(m, &layer.left)?, i.mor(name)?, i.word(m, &layer.right[..c])?)?;
            let rest = b.rm(carrier.id(i.obj(&layer.right[c])?), n.id(i.word(n, &layer.right[c + 1..])?));
            b.lm(act, rest)
        } else if g.right_edges.iter().any(|e| e.name == name) {
            let c = layer.left.iter().position(|w| g.is_center(w)).expect("typechecked");
            let act = whisker(n, i.word(n, &layer.left[c + 1..])?, i.mor(name)?, i.word(n, &layer.right)?)?;
            let rest = b.rm(carrier.id(i.obj(&layer.left[c])?), act);
            b.lm(m.id(i.word(m, &layer.left[..c])?), rest)
        } else {
            let inner = b.rm(i.mor(name)?, n.id(i.word(n, &layer.right)?));
            b.lm(m.id(i.word(m, &layer.left)?), inner)
        };
        acc = comp(v, acc, step)?;
    }
    Ok(acc)
}
