use super::{comp, whisker, EvalError, Interpretation};
use crate::diagram::SlicedDiagram;
use crate::fincat::{FinLaxMonoidalFunctor, FinMonoidalCategory};
use crate::sig::reserved::{BOX_COUNIT, BOX_UNIT, FUNCTOR_DOWN, FUNCTOR_UP};
use crate::sig::FunctorBoxSignature;

/// Objects on one side of a layer: the outer objects (closed boxes already
/// sent through `F`) and, when the layer sits inside a box, the inner
/// objects between the layer and that box's edge.
struct Side {
    outer: usize,
    inner: Option<usize>,
}

struct Ctx<'a> {
    i: &'a Interpretation,
    f: &'a FinLaxMonoidalFunctor,
}

impl Ctx<'_> {
    fn a(&self) -> &FinMonoidalCategory {
        &self.f.target
    }

    fn x(&self) -> &FinMonoidalCategory {
        &self.f.source
    }

    /// Reads the wires on one side of a layer outward from the layer: the
    /// right side is read right to left, so there `Fdown` opens a box.
    fn side(&self, wires: &[String], rightward: bool) -> Result<Side, EvalError> {
        let (open, close) = if rightward {
            (FUNCTOR_DOWN, FUNCTOR_UP)
        } else {
            (FUNCTOR_UP, FUNCTOR_DOWN)
        };
        let bad = || EvalError::BoxNesting(format!("[{}]", wires.join(", ")));
        let (a, x) = (self.a(), self.x());
        let put = |v: &FinMonoidalCategory, acc: usize, o: usize| {
            if rightward {
                v.ot(o, acc)
            } else {
                v.ot(acc, o)
            }
        };
        let mut outer = a.unit;
        let mut pending: Option<usize> = None;
        let mut read = |w: &String| -> Result<(), EvalError> {
            if w == open {
                if pending.replace(x.unit).is_some() {
                    return Err(bad());
                }
            } else if w == close {
                let inner = pending.take().ok_or_else(bad)?;
                outer = put(a, outer, self.f.obj(inner));
            } else {
                let o = self.i.obj(w)?;
                match pending.as_mut() {
                    Some(p) => *p = put(x, *p, o),
                    None => outer = put(a, outer, o),
                }
            }
            Ok(())
        };
        if rightward {
            wires.iter().rev().try_for_each(&mut read)?;
        } else {
            wires.iter().try_for_each(&mut read)?;
        }
        Ok(Side { outer, inner: pending })
    }
}

/// Evaluates a diagram over the syntactic 2-category of a functor box
/// signature in the codomain of the functor. Box contents are evaluated in
/// the domain and carried across by `F`; new boxes use the unit `ε` and
/// merging boxes uses the laxator `μ`.
pub fn eval_functor_box(d: &SlicedDiagram, s: &FunctorBoxSignature, i: &Interpretation) -> Result<usize, EvalError> {
    let f = i
        .functor
        .as_ref()
        .ok_or_else(|| EvalError::Missing("lax functor".into()))?;
    let cx = Ctx { i, f };
    let a = cx.a();
    let whole = cx.side(&d.domain.wires, false)?;
    if whole.inner.is_some() {
        return Err(EvalError::BoxNesting(d.domain.to_string()));
    }
    let mut acc = a.id(whole.outer);
    for layer in &d.layers {
        let l = cx.side(&layer.left, false)?;
        let r = cx.side(&layer.right, true)?;
        let name = layer.gen.as_str();
        let is = |es: &[crate::sig::Edge]| es.iter().any(|e| e.name == name);
        let core = match (l.inner, r.inner) {
            (Some(xl), Some(xr)) if name == BOX_COUNIT => f.mu(xl, xr),
            (Some(xl), Some(xr)) if is(&s.box_edges) => f.mor(whisker(cx.x(), xl, i.mor(name)?, xr)?),
            (None, None) if name == BOX_UNIT => f.epsilon,
            (None, None) if is(&s.plain_edges) || is(&s.in_box_edges) || is(&s.out_box_edges) => i.mor(name)?,
            _ => return Err(EvalError::BoxNesting(format!("layer `{name}`"))),
        };
        acc = comp(a, acc, whisker(a, l.outer, core, r.outer)?)?;
    }
    Ok(acc)
}
