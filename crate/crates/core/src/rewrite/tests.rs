use super::*;
use crate::diagram::{compose_vertical, eq_free, normalize, tensor_horizontal};
use crate::presentations::{syn_functor_box, FunctorBoxPresentation};
use crate::sig::{Edge, FunctorBoxSignature};

fn boxes() -> FunctorBoxPresentation {
    syn_functor_box(&FunctorBoxSignature {
        plain_objects: vec!["Z".into()],
        box_objects: vec!["Y".into()],
        plain_edges: vec![Edge::new("z", &[], &["Z"])],
        in_box_edges: vec![Edge::new("u", &["Z"], &["Y"])],
        out_box_edges: vec![Edge::new("v", &["Y"], &["Z"])],
        ..Default::default()
    })
}

fn cell(p: &FunctorBoxPresentation, name: &str, left: &[&str], right: &[&str]) -> SlicedDiagram {
    let own = |xs: &[&str]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    SlicedDiagram::generator(&p.graph, name)
        .unwrap()
        .whisker(&p.graph, &own(left), &own(right))
        .unwrap()
}

fn seq(p: &FunctorBoxPresentation, ds: &[SlicedDiagram]) -> SlicedDiagram {
    ds[1..]
        .iter()
        .fold(ds[0].clone(), |a, b| compose_vertical(&p.graph, &a, b).unwrap())
}

fn snakes(p: &FunctorBoxPresentation) -> Vec<RewriteRule> {
    kit_adjunction(&p.graph, &p.pair, ["snakeUp", "snakeDown"]).unwrap()
}

#[test]
fn snake_rewrites_to_identity() {
    let p = boxes();
    let rules = snakes(&p);
    let cfg = SearchConfig::default();
    let zig = rules[0].lhs.clone();
    let occ = find_matches(&p.graph, &zig, &rules[0], Orientation::Forward, &cfg);
    assert_eq!(occ.len(), 1);
    let out = apply_rule(&p.graph, &zig, &rules[0], &occ[0], &cfg).unwrap();
    assert_eq!(out, rules[0].rhs);
    let back = Occurrence {
        layer: 0,
        offset: 0,
        orientation: Orientation::Backward,
    };
    assert!(apply_rule(&p.graph, &out, &rules[0], &back, &cfg).is_err());
}

#[test]
fn inverse_application_restores_the_normal_form() {
    let p = boxes();
    let g = &p.graph;
    let cfg = SearchConfig::default();
    let uv = seq(&p, &[cell(&p, "u", &[], &[]), cell(&p, "v", &[], &[])]);
    let twice = compose_vertical(g, &uv, &uv).unwrap();
    let rule = RewriteRule::new(g, "twice", uv.clone(), twice, true).unwrap();
    let d = seq(&p, &[cell(&p, "z", &[], &[]), uv.clone()]);
    let occ = find_matches(g, &d, &rule, Orientation::Forward, &cfg);
    assert_eq!(occ.len(), 1);
    let grown = apply_rule(g, &d, &rule, &occ[0], &cfg).unwrap();
    assert_eq!(grown.len(), 5);
    let back = find_matches(g, &grown, &rule, Orientation::Backward, &cfg);
    assert_eq!(back.len(), 1);
    assert_eq!(apply_rule(g, &grown, &rule, &back[0], &cfg).unwrap(), normalize(g, &d));
}

#[test]
fn hidden_snake_needs_one_exchange() {
    let p = boxes();
    let rules = snakes(&p);
    let d = seq(
        &p,
        &[
            cell(&p, "n", &[], &["Fup"]),
            cell(&p, "z", &[], &["Fup", "Fdown", "Fup"]),
            cell(&p, "e", &["Z", "Fup"], &[]),
        ],
    );
    let nf = normalize(&p.graph, &d);
    assert_eq!(nf.layers[1].gen, "z");
    let at = |bound| SearchConfig {
        search_bound: bound,
        ..SearchConfig::default()
    };
    assert!(find_matches(&p.graph, &d, &rules[0], Orientation::Forward, &at(0)).is_empty());
    assert_eq!(find_matches(&p.graph, &d, &rules[0], Orientation::Forward, &at(1)).len(), 1);
    let z = cell(&p, "z", &[], &["Fup"]);
    assert!(find_matches(&p.graph, &z, &rules[0], Orientation::Forward, &at(8)).is_empty());
}

#[test]
fn equality_verdicts() {
    let p = boxes();
    let rules = snakes(&p);
    let cfg = SearchConfig::default();
    let zig = rules[1].lhs.clone();
    let id = rules[1].rhs.clone();
    assert_eq!(
        bounded_eq(&p.graph, &zig, &zig, &rules, &cfg, None).unwrap(),
        Verdict::Equal(vec![])
    );
    match bounded_eq(&p.graph, &zig, &id, &rules, &cfg, None).unwrap() {
        Verdict::Equal(steps) => assert_eq!(steps.len(), 1),
        other => panic!("{other:?}"),
    }
    let uv = seq(&p, &[cell(&p, "u", &[], &[]), cell(&p, "v", &[], &[])]);
    let zz = SlicedDiagram::identity(uv.domain.clone());
    let shallow = SearchConfig {
        depth: 1,
        ..cfg
    };
    assert_eq!(
        bounded_eq(&p.graph, &uv, &zz, &rules, &shallow, None).unwrap(),
        Verdict::Unknown
    );
    let witness = |_: &SlicedDiagram, _: &SlicedDiagram| Some("model".to_string());
    assert_eq!(
        bounded_eq(&p.graph, &uv, &zz, &rules, &shallow, Some(&witness)).unwrap(),
        Verdict::Distinct("model".into())
    );
    assert!(matches!(
        bounded_eq(&p.graph, &uv, &id, &rules, &cfg, None),
        Err(RewriteError::BoundaryMismatch(..))
    ));
}

#[test]
fn traces_replay_in_order() {
    let p = boxes();
    let rules = snakes(&p);
    let cfg = SearchConfig::default();
    let g = &p.graph;
    // two nested snakes on Fup: the inner one must go first
    let d = seq(
        &p,
        &[
            cell(&p, "n", &[], &["Fup"]),
            cell(&p, "n", &[], &["Fup", "Fdown", "Fup"]),
            cell(&p, "e", &["Fup"], &["Fdown", "Fup"]),
            cell(&p, "e", &["Fup"], &[]),
        ],
    );
    let Verdict::Equal(steps) = bounded_eq(g, &d, &rules[0].rhs, &rules, &cfg, None).unwrap() else {
        panic!("snakes did not reduce");
    };
    assert_eq!(steps.len(), 2);
    let inter = validate_trace(g, &d, &steps, &rules, &cfg).unwrap();
    assert_eq!(inter.len(), 3);
    assert_eq!(inter[2], rules[0].rhs);
    assert!(validate_trace(g, &d, &[], &rules, &cfg).is_ok());
    let json = trace_to_json(&steps);
    assert_eq!(trace_from_json(&json).unwrap(), steps);
    let mut bogus = steps.clone();
    bogus[0].layer = 3;
    assert_eq!(validate_trace(g, &d, &bogus, &rules, &cfg).unwrap_err().step, 0);
}

#[test]
fn adjacent_boxes_merge() {
    let p = boxes();
    let g = &p.graph;
    let u = SlicedDiagram::generator(g, "u").unwrap();
    let uu = tensor_horizontal(g, &u, &u).unwrap();
    let merged = merge_boxes(&p, &uu, 2).unwrap();
    assert_eq!(merged.codomain(g).unwrap().wires, vec!["Fup", "Y", "Y", "Fdown"]);
    assert!(merge_boxes(&p, &uu, 1).is_err());

    let uuu = tensor_horizontal(g, &uu, &u).unwrap();
    let left_first = merge_boxes(&p, &merge_boxes(&p, &uuu, 2).unwrap(), 3).unwrap();
    let right_first = merge_boxes(&p, &merge_boxes(&p, &uuu, 5).unwrap(), 2).unwrap();
    assert!(eq_free(g, &left_first, &right_first));

    let rules = kit_lax_merge(&p).unwrap();
    assert!(rules.iter().all(|r| !r.invertible));
    let with_unit = compose_vertical(g, &u, &cell(&p, "n", &["Fup", "Y", "Fdown"], &[])).unwrap();
    let unit_merged = merge_boxes(&p, &with_unit, 2).unwrap();
    match bounded_eq(g, &unit_merged, &u, &rules, &SearchConfig::default(), None).unwrap() {
        Verdict::Equal(steps) => {
            assert_eq!(steps.len(), 1);
            assert_eq!(steps[0].rule, "boxUnitR");
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn equations_print_back() {
    let p = boxes();
    let rules = snakes(&p);
    assert_eq!(
        rules[0].to_equation(),
        "equation snakeUp : (n | Fup) ; (Fup | e) = id(Fup);"
    );
}
