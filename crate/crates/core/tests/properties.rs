use collage::diagram::{compose_vertical, eq_free, exchange_oracle, normalize, SlicedDiagram};
use collage::oracle::{all_diagrams, test_domains, test_graph};
use collage::render::{render, Format};
use proptest::prelude::*;

/// A diagram on one of the test domains, each layer picked among the
/// one-layer extensions of the current codomain.
fn diagram(dom: usize, picks: &[usize]) -> SlicedDiagram {
    let g = test_graph();
    let doms = test_domains(&g, 2);
    let mut d = SlicedDiagram::identity(doms[dom % doms.len()].clone());
    for &k in picks {
        let cod = d.codomain(&g).unwrap();
        let next: Vec<SlicedDiagram> = all_diagrams(&g, &cod, 1).into_iter().skip(1).collect();
        if next.is_empty() {
            break;
        }
        d = compose_vertical(&g, &d, &next[k % next.len()]).unwrap();
    }
    d
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normal_forms_are_idempotent(dom in 0usize..14, picks in prop::collection::vec(0usize..16, 0..6)) {
        let g = test_graph();
        let d = diagram(dom, &picks);
        let n = normalize(&g, &d);
        prop_assert_eq!(normalize(&g, &n), n.clone());
        prop_assert!(eq_free(&g, &d, &n));
        prop_assert_eq!(n.boundary(&g).unwrap(), d.boundary(&g).unwrap());
    }

    #[test]
    fn exchange_moves_keep_the_normal_form(dom in 0usize..14, picks in prop::collection::vec(0usize..16, 0..5)) {
        let g = test_graph();
        let d = diagram(dom, &picks);
        let n = normalize(&g, &d);
        for e in exchange_oracle(&g, &d, 2) {
            prop_assert_eq!(normalize(&g, &e), n.clone());
        }
    }

    #[test]
    fn json_and_render_round_trip(dom in 0usize..14, picks in prop::collection::vec(0usize..16, 0..5)) {
        let g = test_graph();
        let d = diagram(dom, &picks);
        prop_assert_eq!(SlicedDiagram::from_json(&d.to_json()).unwrap(), d.clone());
        let svg = render(&g, &d, Format::Svg).unwrap();
        prop_assert_eq!(svg.matches("<rect").count(), d.len());
    }
}
