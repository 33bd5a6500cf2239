use super::*;
use crate::diagram::{normalize, OneCellPath};
use crate::fincat::{ceil4, chain3, random::rng, z2};
use crate::presentations::{present, Presented};
use crate::rewrite::{bounded_eq, SearchConfig, Verdict};
use crate::sig::{parse_document, Document};

const SHARED: &str = include_str!("../../../../corpus/shared_state.collage");
const BOXES: &str = include_str!("../../../../corpus/functor_box.collage");
const COMB: &str = include_str!("../../../../corpus/comb.collage");
const CHANNEL: &str = include_str!("../../../../corpus/channel.collage");

fn load(src: &str) -> (Document, Theory, Presented, Vec<Interpretation>) {
    let doc = parse_document(src).unwrap();
    let t = doc.theories[0].clone();
    let p = present(&t).unwrap();
    let is = interpretations_of(&doc, &t).unwrap();
    (doc, t, p, is)
}

fn eval(t: &Theory, p: &Presented, i: &Interpretation, name: &str) -> Value {
    evaluate(t, i, &p.diagram(t, name).unwrap()).unwrap()
}

fn mono(src: &str) -> (Theory, Presented) {
    let doc = parse_document(src).unwrap();
    let t = doc.theories[0].clone();
    let p = present(&t).unwrap();
    (t, p)
}

const DISJOINT: &str = "monoidal theory T {
  objects: A, B;
  edge f : A -> A;
  edge g : B -> B;
  diagram fg : (f | B) ; (A | g);
  diagram gf : (A | g) ; (f | B);
}";

#[test]
fn monoidal_identity_and_generator() {
    let (t, p) = mono(DISJOINT);
    let mut i = Interpretation::new("i", z2(), None);
    i.assign(&t.signature, "A", "*").unwrap();
    i.assign(&t.signature, "B", "*").unwrap();
    i.assign(&t.signature, "f", "1").unwrap();
    i.assign(&t.signature, "g", "1").unwrap();
    let id = SlicedDiagram::identity(OneCellPath::new(crate::presentations::MONOIDAL_CELL, &["A", "B"]));
    assert_eq!(eval_monoidal(&id, &i).unwrap(), i.model.id(0));
    let f = SlicedDiagram::generator(&p.graph, "f").unwrap();
    assert_eq!(eval_monoidal(&f, &i).unwrap(), 1);
}

#[test]
fn interleavings_agree() {
    let (t, p) = mono(DISJOINT);
    for (fv, gv) in [("0", "1"), ("1", "1"), ("1", "0")] {
        let mut i = Interpretation::new("i", z2(), None);
        for (k, v) in [("A", "*"), ("B", "*"), ("f", fv), ("g", gv)] {
            i.assign(&t.signature, k, v).unwrap();
        }
        assert_eq!(eval(&t, &p, &i, "fg"), eval(&t, &p, &i, "gf"));
    }
}

#[test]
fn missing_entry_is_reported() {
    let (t, p) = mono(DISJOINT);
    let mut i = Interpretation::new("i", z2(), None);
    i.assign(&t.signature, "A", "*").unwrap();
    i.assign(&t.signature, "B", "*").unwrap();
    i.assign(&t.signature, "f", "1").unwrap();
    let d = p.diagram(&t, "fg").unwrap();
    assert_eq!(evaluate(&t, &i, &d), Err(EvalError::Missing("g".into())));
    assert_eq!(i.missing(&t), vec!["g".to_string()]);
}

#[test]
fn boundary_mismatch_is_reported() {
    let src = "monoidal theory T { objects: A, B; edge f : A -> B; }";
    let (t, _) = mono(src);
    let mut i = Interpretation::new("i", chain3(), None);
    for (k, v) in [("A", "2"), ("B", "1"), ("f", "0.1")] {
        i.assign(&t.signature, k, v).unwrap();
    }
    assert!(matches!(
        i.check_boundaries(&t).as_slice(),
        [EvalError::Boundary { name, .. }] if name == "f"
    ));
}

#[test]
fn exchange_classes_evaluate_equal() {
    let (_, t, p, is) = load(SHARED);
    for name in ["race", "raced", "intended"] {
        let d = p.diagram(&t, name).unwrap();
        let n = normalize(&p.graph, &d);
        for i in &is {
            assert_eq!(evaluate(&t, i, &d).unwrap(), evaluate(&t, i, &n).unwrap());
        }
    }
}

#[test]
fn collage_identity_and_left_action() {
    let (_, t, p, is) = load(SHARED);
    let i = &is[0];
    let Signature::Bimodular(g) = &t.signature else { panic!() };
    let id = p.elaborate(&t, &crate::sig::DiagramExpr::name("C")).unwrap();
    assert_eq!(eval_collage(&id, g, i).unwrap(), i.model.id(0));
    let e = crate::sig::DiagramExpr::name("delS").tensor(crate::sig::DiagramExpr::name("C"));
    let d = p.elaborate(&t, &e).unwrap();
    let b = crate::fincat::FinBimodularCategory::regular(&i.model);
    assert_eq!(eval_collage(&d, g, i).unwrap(), b.lm(i.mor("delS").unwrap(), i.model.id(0)));
}

#[test]
fn shared_state_model_satisfies_equations() {
    let (_, t, p, is) = load(SHARED);
    let i = &is[0];
    for e in &t.equations.equations {
        let l = p.elaborate(&t, &e.lhs).unwrap();
        let r = p.elaborate(&t, &e.rhs).unwrap();
        assert_eq!(evaluate(&t, i, &l).unwrap(), evaluate(&t, i, &r).unwrap(), "{}", e.name);
    }
    let found = search_interpretations(&t, &z2(), 1 << 16).unwrap();
    assert!(found.iter().any(|f| f.objects == i.objects && f.morphisms == i.morphisms));
    assert_eq!(eval(&t, &p, i, "race"), eval(&t, &p, i, "raced"));
}

#[test]
fn models_witness_distinct_diagrams() {
    let (_, t, p, is) = load(SHARED);
    let w = model_witness(&t, &is);
    let race = p.diagram(&t, "race").unwrap();
    let intended = p.diagram(&t, "intended").unwrap();
    // both are 0 in the parity model
    assert_eq!(w(&race, &intended), None);
    let (_, t, p, is) = load(CHANNEL);
    let w = model_witness(&t, &is);
    let a = p.diagram(&t, "roundtrip").unwrap();
    let b = p.diagram(&t, "unchecked").unwrap();
    assert!(w(&a, &b).unwrap().contains("counting"));
    let cfg = SearchConfig {
        depth: 2,
        ..Default::default()
    };
    let v = bounded_eq(&p.graph, &a, &b, &p.rules, &cfg, Some(&w)).unwrap();
    assert!(matches!(v, Verdict::Distinct(_)));
}

#[test]
fn unit_box_is_invisible() {
    let (_, t, p, is) = load(BOXES);
    for i in &is {
        assert_eq!(eval(&t, &p, i, "padded"), eval(&t, &p, i, "plainbox"), "{}", i.name);
        assert_eq!(eval(&t, &p, i, "snake3"), eval(&t, &p, i, "plainbox"), "{}", i.name);
    }
}

#[test]
fn in_then_out_box() {
    let (_, t, p, is) = load(BOXES);
    let i = is.iter().find(|i| i.name == "parity").unwrap();
    let v = &i.model;
    let want = v.comp(i.mor("u").unwrap(), i.mor("v").unwrap()).unwrap();
    assert_eq!(eval(&t, &p, i, "through"), Value::Morphism(want));
    let f = i.functor.as_ref().unwrap();
    let inside = v
        .comp(v.comp(i.mor("u").unwrap(), f.mor(i.mor("x").unwrap())).unwrap(), i.mor("v").unwrap())
        .unwrap();
    assert_eq!(eval(&t, &p, i, "inside"), Value::Morphism(inside));
}

#[test]
fn merge_order_is_irrelevant() {
    let (_, t, p, is) = load(BOXES);
    for i in &is {
        assert_eq!(eval(&t, &p, i, "mergeLeft"), eval(&t, &p, i, "mergeRight"), "{}", i.name);
        assert!(evaluate(&t, i, &p.diagram(&t, "pairMerged").unwrap()).is_ok());
    }
}

#[test]
fn box_merge_rules_preserve_evaluation() {
    let (_, t, p, is) = load(BOXES);
    let cfg = SearchConfig {
        depth: 4,
        ..Default::default()
    };
    let d1 = p.diagram(&t, "snake3").unwrap();
    let d2 = p.diagram(&t, "plainbox").unwrap();
    let Verdict::Equal(steps) = bounded_eq(&p.graph, &d1, &d2, &p.rules, &cfg, None).unwrap() else {
        panic!("snakes reduce")
    };
    assert_eq!(steps.len(), 3);
    let r = soundness_check(&t, &p, &d1, &d2, &steps, &is).unwrap();
    assert!(r.holds());
    assert_eq!(r.verdicts.len(), 2);
}

#[test]
fn empty_trace_is_trivially_sound() {
    let (_, t, p, is) = load(BOXES);
    let d = p.diagram(&t, "mergeLeft").unwrap();
    let e = p.diagram(&t, "mergeRight").unwrap();
    let r = soundness_check(&t, &p, &d, &e, &[], &is).unwrap();
    assert!(r.holds());
}

#[test]
fn empty_internal_diagram_is_the_unit_point() {
    let (_, t, p, is) = load(COMB);
    let Signature::Internal(poly) = &t.signature else { panic!() };
    let d = SlicedDiagram::identity(OneCellPath::empty(crate::presentations::TUBE_OUTSIDE));
    let x = eval_internal(&d, poly, &is[0]).unwrap();
    assert!(x.blocks.is_empty());
    assert_eq!(x.morphism(&is[0].model), Some(is[0].model.id(0)));
    assert!(p.graph.has_zero_cell(crate::presentations::TUBE_OUTSIDE));
}

#[test]
fn closed_tube_around_a_generator() {
    let src = "internal theory T { objects: A, B; edge f : A -> B; diagram t : A_y ; (L | f | R) ; B^y; }";
    let (t, p) = mono(src);
    let Signature::Internal(poly) = &t.signature else { panic!() };
    for fv in ["0", "1"] {
        let mut i = Interpretation::new("i", z2(), None);
        for (k, v) in [("A", "*"), ("B", "*"), ("f", fv)] {
            i.assign(&t.signature, k, v).unwrap();
        }
        let x = eval_internal(&p.diagram(&t, "t").unwrap(), poly, &i).unwrap();
        assert_eq!(x.morphism(&i.model), Some(i.mor("f").unwrap()));
        assert_eq!(x.blocks.len(), 1);
    }
}

#[test]
fn comb_in_parity_is_a_sum() {
    let v = z2();
    for inst in CombInstance::all_over_delooping(&v) {
        let r = comb_eval(&inst).unwrap();
        assert!(r.agree());
        assert_eq!(r.direct, (inst.f + inst.g + inst.h) % 2);
        assert!(optic_class_check(&inst).is_ok());
    }
}

#[test]
fn comb_with_trivial_residual() {
    let v = ceil4();
    let c = &v.cat;
    let o = |s: &str| c.object(s).unwrap();
    let m = |s: &str| c.morphism(s).unwrap();
    let inst = CombInstance {
        model: v.clone(),
        objects: [o("3"), o("0"), o("2"), o("1"), o("0")],
        f: m("3.2"),
        g: m("2.1"),
        h: m("1.0"),
    };
    let r = comb_eval(&inst).unwrap();
    assert!(r.agree());
    assert_eq!(r.direct, c.comp_all(&[inst.f, inst.g, inst.h]).unwrap());
}

#[test]
fn random_poset_combs() {
    let mut r = rng(7);
    for v in [ceil4(), chain3()] {
        for _ in 0..10 {
            let inst = CombInstance::random(&v, &mut r);
            assert!(comb_eval(&inst).unwrap().agree());
            optic_class_check(&inst).unwrap();
        }
    }
}

#[test]
fn internal_snakes_evaluate_to_identity() {
    let (_, t, p, is) = load(COMB);
    for i in &is {
        assert_eq!(eval(&t, &p, i, "zig3"), eval(&t, &p, i, "opened"));
        let Value::Internal(x) = eval(&t, &p, i, "closed") else { panic!() };
        let Value::Internal(y) = eval(&t, &p, i, "direct") else { panic!() };
        assert_eq!(x, y);
    }
}
