
use super::random::{random_category, random_profunctor, random_twisted, rng, twisted_hom};
use super::*;

fn discrete(n: usize) -> FinCategory {
    FinCategory {
        objects: (0..n).map(|i| format!("d{i}")).collect(),
        morphisms: (0..n)
            .map(|i| Morphism {
                name: format!("id{i}"),
                src: i,
                tgt: i,
            })
            .collect(),
        identity: (0..n).collect(),
        compose: (0..n).map(|i| ((i, i), i)).collect(),
    }
}

#[test]
fn builtin_models_pass() {
    for name in BUILTIN_MODELS {
        let m = builtin(name).unwrap();
        assert!(m.check().is_empty(), "{name}: {:?}", m.check());
    }
    assert!(product(&z2(), &chain3()).check().is_empty());
    assert!(z2().reversed().check().is_empty());
}

#[test]
fn corrupted_tensor_is_reported_per_triple() {
    let mut c = chain3();
    c.tensor_obj[2][1] = 1;
    let d = c.check();
    assert_eq!(d.len(), 2, "{d:?}");
    assert!(d.iter().all(|x| x.law == Law::Associativity));
    assert_eq!(d[0].detail, "(1 ⊗ 1) ⊗ 1");
}

#[test]
fn model_blocks_round_trip() {
    for m in [z2(), chain3(), cyclic(3)] {
        let back = FinMonoidalCategory::from_decl(&m.to_decl()).unwrap();
        assert_eq!(back, m);
    }
}

#[test]
fn lax_functors_and_mutations() {
    assert!(identity_functor(&z2()).check().is_empty());
    let f = ceil_half();
    assert!(f.check().is_empty(), "{:?}", f.check());
    for seed in 0..4 {
        let ms = lax_mutations(&f, seed);
        assert_eq!(ms.len(), 5);
        for (what, law, m) in ms {
            let d = m.check();
            assert!(!d.is_empty(), "{what} passed");
            assert!(d.iter().all(|x| x.law == law), "{what}: {d:?}");
        }
    }
    let mut g = identity_functor(&z2());
    g.mor_map[0] = 1;
    let d = g.check();
    assert_eq!(d.len(), 1);
    assert_eq!(d[0].law, Law::FunctorIdentity);
}

#[test]
fn coend_of_discrete_and_translation() {
    let mut p = FinProfunctor::hom(&discrete(2));
    p.sets = vec![vec![2, 0], vec![0, 3]];
    p.act_l = vec![vec![vec![0, 1], vec![]], vec![vec![], vec![0, 1, 2]]];
    p.act_r = p.act_l.clone();
    assert!(p.check().is_empty());
    let c = coend(&p).unwrap();
    assert_eq!(c.class_count(), 5);

    // the trace of a commutative monoid is the monoid itself
    let h = FinProfunctor::hom(&z2().cat);
    assert_eq!(coend(&h).unwrap().class_count(), 2);

    let mut t = h.clone();
    t.act_r = vec![vec![vec![0, 1]], vec![vec![0, 1]]];
    assert!(t.check().is_empty());
    let c = coend(&t).unwrap();
    assert_eq!(c.class_count(), 1);
    assert_eq!(c.partition, coend_brute(&t).unwrap());
    assert_eq!(c.representative(0), (0, 0));
}

#[test]
fn random_coends_match_the_closure() {
    let mut r = rng(7);
    for _ in 0..30 {
        let c = random_category(&mut r, 3, 20);
        assert!(c.check().is_empty());
        let p = random_profunctor(&mut r, &c);
        assert!(p.check().is_empty());
        assert_eq!(coend(&p).unwrap().partition, coend_brute(&p).unwrap());
    }
}

#[test]
fn composition_with_hom_is_a_unit() {
    let mut r = rng(3);
    for _ in 0..10 {
        let c = random_category(&mut r, 3, 12);
        let p = random_profunctor(&mut r, &c);
        let h = FinProfunctor::hom(&c);
        let left = compose_profunctors(&h, &p).unwrap();
        let right = compose_profunctors(&p, &h).unwrap();
        assert_eq!(left.prof.sets, p.sets);
        assert_eq!(right.prof.sets, p.sets);
        assert!(left.prof.check().is_empty());
    }
}

#[test]
fn composition_is_associative_on_counts() {
    let mut r = rng(11);
    let c = random_category(&mut r, 3, 12);
    let (p, q, s) = (
        random_profunctor(&mut r, &c),
        random_profunctor(&mut r, &c),
        random_profunctor(&mut r, &c),
    );
    let pq_s = compose_profunctors(&compose_profunctors(&p, &q).unwrap().prof, &s).unwrap();
    let p_qs = compose_profunctors(&p, &compose_profunctors(&q, &s).unwrap().prof).unwrap();
    assert_eq!(pq_s.prof.sets, p_qs.prof.sets);
}

#[test]
fn bimodular_strengths() {
    for v in [z2(), chain3(), cyclic(3)] {
        let c = FinBimodularCategory::regular(&v);
        assert!(c.check().is_empty());
        let h = hom_profunctor(&c);
        assert!(h.check_strength().is_empty(), "{:?}", h.check_strength());
    }
    let mut h = hom_profunctor(&FinBimodularCategory::regular(&z2()));
    h.t_left[0][0][0] = vec![1, 0];
    let d = h.check_strength();
    assert!(d.iter().any(|x| x.law == Law::StrengthUnit));

    let t = twisted_hom(&chain3(), &[(1, 0), (0, 2)]);
    assert!(t.check_strength().is_empty());
}

#[test]
fn pointed_composition_keeps_the_point() {
    let c = FinBimodularCategory::regular(&z2());
    let h = hom_profunctor(&c);
    let t = twisted_hom(&z2(), &[(0, 0)]);
    let (th, _) = compose_pointed_profunctors(&t, &h).unwrap();
    assert_eq!(th.prof.sets, t.prof.sets);
    assert_eq!(th.point, t.point);
    assert!(th.check_strength().is_empty());
}

#[test]
fn tensor_over_trivial_and_z2() {
    let v = discrete_cyclic(2);
    let t = twisted_hom(&v, &[(0, 0)]);
    let r = twisted_hom(&v, &[(0, 0), (1, 1)]);
    let tr = tensor_bimodular_profunctors(&t, &r).unwrap();
    assert_eq!(tr.elements.len(), 8);
    assert_eq!(tr.class_count(), 8 / 2);
    assert!(tr.diagnostics.is_empty());
    assert_eq!(tr.partition, tensor_partition_brute(&t, &r).unwrap());

    // on the one-object delooping every strength is an identity
    let t = twisted_hom(&z2(), &[(0, 0)]);
    let tr = tensor_bimodular_profunctors(&t, &t).unwrap();
    assert_eq!(tr.class_count(), 4);

    let u = FinMonoidalCategory::unit_category();
    let t = twisted_hom(&u, &[(0, 0), (0, 0)]);
    let tr = tensor_bimodular_profunctors(&t, &t).unwrap();
    assert_eq!(tr.class_count(), 4);
    assert_eq!(tr.point, Some(0));
}

#[test]
fn random_tensors_match_the_closure() {
    let mut r = rng(5);
    for v in [z2(), discrete_cyclic(2), discrete_cyclic(3), chain3()] {
        for _ in 0..5 {
            let t = random_twisted(&mut r, &v);
            let s = random_twisted(&mut r, &v);
            let tr = tensor_bimodular_profunctors(&t, &s).unwrap();
            assert!(tr.diagnostics.is_empty());
            assert_eq!(tr.partition, tensor_partition_brute(&t, &s).unwrap());
        }
    }
}

#[test]
fn kleisli_of_identities() {
    let u = identity_functor(&FinMonoidalCategory::unit_category());
    let k = kleisli_promonad(&u);
    assert_eq!(k.rtimes.object_count(), 1);
    assert_eq!(k.rtimes.class_count(0, 0), 1);
    assert!(k.rtimes.check().is_empty());

    let k = kleisli_promonad(&identity_functor(&z2()));
    assert_eq!(k.rtimes.element_count(0, 0), 4);
    assert_eq!(k.rtimes.class_count(0, 0), 2);
    assert!(k.rtimes.check().is_empty());
    assert!(k.ltimes.check().is_empty());
}

#[test]
fn kleisli_of_ceil_is_thin() {
    let k = kleisli_promonad(&ceil_half());
    assert!(k.rtimes.is_thin());
    assert!(k.rtimes.check().is_empty());
    assert!(k.ltimes.check().is_empty());
}
