use super::{AdjointPair, BOX_INSIDE, BOX_OUTSIDE};
use crate::sig::reserved::{BOX_COUNIT, BOX_UNIT, FUNCTOR_DOWN, FUNCTOR_UP};
use crate::sig::{DiagramExpr, Equation, EquationSet, FunctorBoxSignature, TwoGraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctorBoxPresentation {
    pub graph: TwoGraph,
    pub pair: AdjointPair,
    pub snakes: EquationSet,
}

pub fn syn_functor_box(s: &FunctorBoxSignature) -> FunctorBoxPresentation {
    let (a, x) = (BOX_OUTSIDE, BOX_INSIDE);
    let mut g = TwoGraph {
        zero_cells: vec![a.into(), x.into()],
        ..Default::default()
    };
    for o in &s.plain_objects {
        g.add_one(o, a, a);
    }
    for o in &s.box_objects {
        g.add_one(o, x, x);
    }
    g.add_one(FUNCTOR_UP, a, x);
    g.add_one(FUNCTOR_DOWN, x, a);
    let (up, down) = (FUNCTOR_UP.to_string(), FUNCTOR_DOWN.to_string());
    g.add_two_at(BOX_UNIT, &[], &[up.clone(), down.clone()], a);
    g.add_two_at(BOX_COUNIT, &[down.clone(), up.clone()], &[], x);
    for e in &s.plain_edges {
        g.add_two_at(&e.name, &e.domain, &e.codomain, a);
    }
    for e in &s.box_edges {
        g.add_two_at(&e.name, &e.domain, &e.codomain, x);
    }
    let boxed = |ws: &[String]| {
        let mut out = vec![up.clone()];
        out.extend(ws.iter().cloned());
        out.push(down.clone());
        out
    };
    for e in &s.in_box_edges {
        g.add_two(&e.name, &e.domain, &boxed(&e.codomain));
    }
    for e in &s.out_box_edges {
        g.add_two(&e.name, &boxed(&e.domain), &e.codomain);
    }
    let n = || DiagramExpr::name(BOX_UNIT);
    let e = || DiagramExpr::name(BOX_COUNIT);
    let w = |s: &str| DiagramExpr::name(s);
    let snakes = EquationSet {
        equations: vec![
            Equation {
                name: "snakeUp".into(),
                lhs: n().tensor(w(FUNCTOR_UP)).seq(w(FUNCTOR_UP).tensor(e())),
                rhs: w(FUNCTOR_UP),
            },
            Equation {
                name: "snakeDown".into(),
                lhs: w(FUNCTOR_DOWN).tensor(n()).seq(e().tensor(w(FUNCTOR_DOWN))),
                rhs: w(FUNCTOR_DOWN),
            },
        ],
    };
    FunctorBoxPresentation {
        graph: g,
        pair: AdjointPair {
            up: FUNCTOR_UP.into(),
            down: FUNCTOR_DOWN.into(),
            unit: BOX_UNIT.into(),
            counit: BOX_COUNIT.into(),
        },
        snakes,
    }
}
