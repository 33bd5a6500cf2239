use super::*;
use crate::diagram::{compose_vertical, eq_free};
use crate::rewrite::kit_adjunction;
use crate::sig::{parse_document, FunctorBoxSignature, Polygraph, Signature};

fn bimodular(src: &str) -> (BimodularGraph, Vec<NamedDiagram>) {
    let doc = parse_document(src).unwrap();
    let t = doc.theories.into_iter().next().unwrap();
    match t.signature {
        Signature::Bimodular(g) => (g, t.diagrams),
        _ => panic!("not bimodular"),
    }
}

const SHARED: &str = "bimodular theory Shared {
  left objects: S; right objects: T; center objects: C;
  central edge getL : C -> S, C;
  central edge putL : S, C -> C;
  central edge getR : C -> C, T;
  central edge putR : C, T -> C;
  diagram race : getL ; (S | getR) ; (putL | T) ; putR;
}";

const SEMAPHORE: &str = "bimodular theory Semaphore {
  left objects: S; right objects: T; center objects: free, locked;
  central edge getL : free -> S, locked;
  central edge putL : S, locked -> free;
  central edge getR : free -> locked, T;
  central edge putR : locked, T -> free;
  diagram race : getL ; (S | getR) ; (putL | T) ; putR;
  diagram seq : getL ; putL ; getR ; putR;
}";

#[test]
fn empty_graph_collage() {
    let c = collage_of(&BimodularGraph::default());
    assert_eq!(c.graph.zero_cells, vec!["M", "N"]);
    assert!(c.graph.one_generators.is_empty());
    assert!(c.graph.two_generators.is_empty());
}

#[test]
fn one_object_per_family() {
    let (g, _) = bimodular("bimodular theory T { left objects: a; right objects: b; center objects: c; }");
    let c = collage_of(&g);
    assert_eq!(c.graph.zero_cells.len(), 2);
    assert_eq!(c.graph.one_generators.len(), 3);
    assert!(!c
        .graph
        .one_generators
        .iter()
        .any(|o| o.source == "N" && o.target == "M"));
}

#[test]
fn central_generators_have_one_central_wire() {
    let (g, _) = bimodular(SHARED);
    let c = collage_of(&g);
    for e in &g.central_edges {
        let d = SlicedDiagram::generator(&c.graph, &e.name).unwrap();
        let t = typecheck_central(&d, &g).unwrap();
        assert_eq!(t.domain.central, "C");
        assert_eq!(t.codomain.central, "C");
    }
}

#[test]
fn race_typing() {
    let (g, named) = bimodular(SHARED);
    let race = &named[0].expr;
    let (_, t) = elaborate_collage(&g, race, &named).unwrap();
    assert_eq!(t.domain.to_string(), "[] C []");

    let (g, named) = bimodular(SEMAPHORE);
    let err = elaborate_collage(&g, &named[0].expr, &named).unwrap_err();
    assert_eq!(
        err,
        TypeError::CentralMismatch {
            expected: "locked".into(),
            found: "free".into()
        }
    );
    let (_, t) = elaborate_collage(&g, &named[1].expr, &named).unwrap();
    assert_eq!(t.codomain.central, "free");
}

#[test]
fn boundaries_without_central_wire() {
    let (g, _) = bimodular("bimodular theory T { left objects: a; right objects: b; center objects: c;
      left edge f : a -> a; }");
    let c = collage_of(&g);
    let d = SlicedDiagram::generator(&c.graph, "f").unwrap();
    assert!(matches!(typecheck_central(&d, &g), Err(TypeError::NoCentralWire(_))));
    let p = OneCellPath::new("M", &["c", "b", "b"]);
    assert!(factor_central(&g, &p).is_ok());
    let bad = OneCellPath::new("M", &["a", "b"]);
    assert!(matches!(factor_central(&g, &bad), Err(TypeError::NoCentralWire(_))));
}

#[test]
fn unit_iso_counts() {
    let (g, _) = bimodular("bimodular theory T { left objects: a; right objects: b; center objects: c;
      left edge f1 : a -> a; left edge f2 : a, a -> ();
      central edge k : a, c -> c, b;
      right edge g1 : b -> b; right edge g2 : () -> b; right edge g3 : b, b -> b; }");
    let r = unit_iso_check(&g);
    assert!(r.holds(), "{r}");
    assert_eq!(r.graph_counts, (2, 1, 3));
    assert_eq!(r.collage_counts, (2, 1, 3));
    assert!(unit_iso_check(&BimodularGraph::default()).holds());
}

#[test]
fn functor_box_boundaries() {
    let sig = FunctorBoxSignature {
        plain_objects: vec!["A".into()],
        box_objects: vec!["Y".into()],
        in_box_edges: vec![crate::sig::Edge::new("u", &["A"], &["Y"])],
        ..Default::default()
    };
    let p = syn_functor_box(&sig);
    let u = p.graph.two("u").unwrap();
    assert_eq!(u.codomain, vec!["Fup", "Y", "Fdown"]);
    let rules = kit_adjunction(&p.graph, &p.pair, ["snakeUp", "snakeDown"]).unwrap();
    for (r, wire) in rules.iter().zip(["Fup", "Fdown"]) {
        let (d, c) = r.lhs.boundary(&p.graph).unwrap();
        assert_eq!(d.wires, vec![wire]);
        assert_eq!(c.wires, vec![wire]);
    }
    let empty = syn_functor_box(&FunctorBoxSignature::default());
    assert_eq!(empty.graph.two_generators.len(), 2);
    assert_eq!(empty.snakes.len(), 2);
}

#[test]
fn internal_cells_and_rules() {
    let empty = syn_internal(&Polygraph::default());
    assert_eq!(empty.graph.two_generators.len(), 4);
    assert_eq!(empty.rules.len(), 8);
    let p = Polygraph {
        objects: vec!["A".into()],
        edges: vec![crate::sig::Edge::new("f", &["A"], &["A"])],
    };
    let ip = syn_internal(&p);
    assert!(ip.graph.two("A^y").is_some() && ip.graph.two("A_y").is_some());
    assert!(ip.rule("c.A").is_some() && ip.rule("i.A").is_some());
    for r in &ip.rules {
        assert_eq!(
            r.lhs.boundary(&ip.graph).unwrap(),
            r.rhs.boundary(&ip.graph).unwrap(),
            "{}",
            r.name
        );
    }
    let alpha1 = ip.rule("alpha1").unwrap();
    assert_eq!(alpha1.rhs.domain.wires, vec!["R"]);
    assert!(alpha1.metadata.contains_key("swallowtail.unit"));
}

#[test]
fn small_hom_sets() {
    let mut g = TwoGraph {
        zero_cells: vec!["z".into()],
        ..Default::default()
    };
    g.add_one("A", "z", "z");
    g.add_one("B", "z", "z");
    g.add_two("f", &["A".into()], &["B".into()]);
    let a = OneCellPath::new("z", &["A"]);
    let b = OneCellPath::new("z", &["B"]);
    let id = hom_enumerate(&g, &[], &a, &a, 0).unwrap();
    assert_eq!(id.diagrams, vec![SlicedDiagram::identity(a.clone())]);
    let f = hom_enumerate(&g, &[], &a, &b, 1).unwrap();
    assert_eq!(f.diagrams, vec![SlicedDiagram::generator(&g, "f").unwrap()]);
    assert!(!f.up_to_bounded_search);
    let ab = OneCellPath::new("z", &["A", "A"]);
    let bb = OneCellPath::new("z", &["B", "B"]);
    let both = hom_enumerate(&g, &[], &ab, &bb, 3).unwrap();
    assert_eq!(both.diagrams.len(), 1);
    let capped = hom_enumerate_capped(&g, &[], &ab, &bb, 3, 2);
    assert!(capped.is_err());
}

#[test]
fn semaphore_sequential_is_exchange_rigid() {
    let (g, named) = bimodular(SEMAPHORE);
    let c = collage_of(&g);
    let (d, _) = elaborate_collage(&g, &named[1].expr, &named).unwrap();
    let halves = compose_vertical(&c.graph, &d, &SlicedDiagram::identity(d.codomain(&c.graph).unwrap())).unwrap();
    assert!(eq_free(&c.graph, &d, &halves));
}
