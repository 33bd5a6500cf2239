use super::*;

fn s(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|x| x.to_string()).collect()
}

fn graph() -> TwoGraph {
    let mut g = TwoGraph {
        zero_cells: s(&["a", "b"]),
        ..Default::default()
    };
    g.add_one("x", "a", "a");
    g.add_one("y", "a", "a");
    g.add_one("p", "a", "b");
    g.add_two("f", &s(&["x"]), &s(&["y"]));
    g.add_two("h", &s(&["y"]), &s(&["x"]));
    g.add_two_at("k", &[], &[], "a");
    g.add_two_at("m", &[], &[], "a");
    g.add_two("cup", &[], &s(&["x", "x"]));
    g.add_two("cap", &s(&["x", "x"]), &[]);
    g
}

fn lay(left: &[&str], gen: &str, right: &[&str]) -> Layer {
    Layer {
        left: s(left),
        gen: gen.into(),
        right: s(right),
    }
}

#[test]
fn three_disjoint_layers_have_six_arrangements() {
    let g = graph();
    let f = SlicedDiagram::generator(&g, "f").unwrap();
    let ff = tensor_horizontal(&g, &f, &f).unwrap();
    let fff = tensor_horizontal(&g, &ff, &f).unwrap();
    assert_eq!(fff.len(), 3);
    let all = exchange_oracle(&g, &fff, 10);
    assert_eq!(all.len(), 6);
    let nf: BTreeSet<_> = all.iter().map(|d| normalize(&g, d)).collect();
    assert_eq!(nf.len(), 1);
}

#[test]
fn dependent_layers_do_not_move() {
    let g = graph();
    let f = SlicedDiagram::generator(&g, "f").unwrap();
    let h = SlicedDiagram::generator(&g, "h").unwrap();
    let fh = compose_vertical(&g, &f, &h).unwrap();
    assert_eq!(exchange_oracle(&g, &fh, 5).len(), 1);
    let hf = compose_vertical(&g, &f, &f);
    assert!(matches!(hf, Err(DiagramError::BoundaryMismatch { .. })));
}

#[test]
fn scalars_commute() {
    let g = graph();
    let k = SlicedDiagram::generator(&g, "k").unwrap();
    let m = SlicedDiagram::generator(&g, "m").unwrap();
    let km = compose_vertical(&g, &k, &m).unwrap();
    let mk = compose_vertical(&g, &m, &k).unwrap();
    assert!(eq_free(&g, &km, &mk));
    assert_eq!(normalize(&g, &mk).layers[0].gen, "k");
}

#[test]
fn cap_then_cup_slides_either_way() {
    let g = graph();
    let d = SlicedDiagram {
        domain: OneCellPath::new("a", &["y", "x", "x", "y"]),
        layers: vec![lay(&["y"], "cap", &["y"]), lay(&["y"], "cup", &["y"])],
    };
    d.check(&g).unwrap();
    let all = exchange_oracle(&g, &d, 4);
    assert_eq!(all.len(), 3);
    let nf = normalize(&g, &d);
    assert_eq!(nf.layers[0].gen, "cap");
    assert_eq!(nf.layers[0].offset(), 1);
    for other in &all {
        assert_eq!(normalize(&g, other), nf);
    }
}

#[test]
fn whiskering_checks_zero_cells() {
    let g = graph();
    let f = SlicedDiagram::generator(&g, "f").unwrap();
    assert!(f.whisker(&g, &s(&["x"]), &s(&["p"])).is_ok());
    assert!(matches!(
        f.whisker(&g, &s(&["p"]), &[]),
        Err(DiagramError::ZeroCellMismatch { .. })
    ));
}

#[test]
fn json_round_trip() {
    let g = graph();
    let d = SlicedDiagram {
        domain: OneCellPath::new("a", &["x", "p"]),
        layers: vec![lay(&[], "f", &["p"]), lay(&[], "h", &["p"])],
    };
    d.check(&g).unwrap();
    let j = d.to_json();
    assert!(j.starts_with("{\"start\":\"a\",\"domain\":[\"x\",\"p\"],\"layers\":[{\"left\":[]"));
    assert_eq!(SlicedDiagram::from_json(&j).unwrap(), d);
}

#[test]
fn bad_layers_are_reported() {
    let g = graph();
    let d = SlicedDiagram {
        domain: OneCellPath::new("a", &["x"]),
        layers: vec![lay(&[], "h", &[])],
    };
    assert!(matches!(d.check(&g), Err(DiagramError::LayerMismatch { index: 0, .. })));
    let e = SlicedDiagram {
        domain: OneCellPath::new("a", &["p"]),
        layers: vec![lay(&["p"], "k", &[])],
    };
    assert!(e.check(&g).is_err());
}
