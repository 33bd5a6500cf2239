use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::monoidal::{ceil4, FinMonoidalCategory};
use super::{Law, LawDiagnostic};

/// A lax monoidal functor between table models. `mu[(x, y)]` is the
/// laxator `F x ⊗ F y -> F (x ⊗ y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinLaxMonoidalFunctor {
    pub source: FinMonoidalCategory,
    pub target: FinMonoidalCategory,
    pub obj_map: Vec<usize>,
    pub mor_map: Vec<usize>,
    pub epsilon: usize,
    pub mu: BTreeMap<(usize, usize), usize>,
}

impl FinLaxMonoidalFunctor {
    pub fn obj(&self, x: usize) -> usize {
        self.obj_map[x]
    }

    pub fn mor(&self, f: usize) -> usize {
        self.mor_map[f]
    }

    pub fn mu(&self, x: usize, y: usize) -> usize {
        self.mu[&(x, y)]
    }

    /// Checks run in three stages and stop at the first stage that fails:
    /// the functor data, then the typing of ε and μ, then the equations.
    pub fn check(&self) -> Vec<LawDiagnostic> {
        let (s, t) = (&self.source.cat, &self.target.cat);
        let mut out = Vec::new();
        for f in 0..s.morphisms.len() {
            let img = self.mor(f);
            if t.src(img) != self.obj(s.src(f)) || t.tgt(img) != self.obj(s.tgt(f)) {
                out.push(LawDiagnostic::new(
                    Law::FunctorTyping,
                    format!("{} sent to {}", s.name(f), t.name(img)),
                ));
            }
        }
        for a in 0..s.objects.len() {
            let img = self.mor(s.id(a));
            let want = t.id(self.obj(a));
            if img != want && t.src(img) == self.obj(a) && t.tgt(img) == self.obj(a) {
                out.push(LawDiagnostic::new(
                    Law::FunctorIdentity,
                    format!("identity of {} sent to {}", s.objects[a], t.name(img)),
                ));
            }
        }
        if !out.is_empty() {
            return out;
        }

        let tgt = &self.target;
        if t.src(self.epsilon) != tgt.unit || t.tgt(self.epsilon) != self.obj(self.source.unit) {
            out.push(LawDiagnostic::new(
                Law::EpsilonTyping,
                format!("unitor {}", t.name(self.epsilon)),
            ));
        }
        let no = s.objects.len();
        for x in 0..no {
            for y in 0..no {
                let (ox, oy) = (&s.objects[x], &s.objects[y]);
                match self.mu.get(&(x, y)) {
                    None => out.push(LawDiagnostic::new(
                        Law::Totality,
                        format!("laxator at ({ox}, {oy}) missing"),
                    )),
                    Some(&m) => {
                        let xy = self.source.ot(x, y);
                        if t.src(m) != tgt.ot(self.obj(x), self.obj(y)) || t.tgt(m) != self.obj(xy) {
                            out.push(LawDiagnostic::new(
                                Law::MuTyping,
                                format!("laxator at ({ox}, {oy}) is {}", t.name(m)),
                            ));
                        }
                    }
                }
            }
        }
        if !out.is_empty() {
            return out;
        }

        let nm = s.morphisms.len();
        for f in 0..nm {
            for g in s.hom_from(s.tgt(f)) {
                let l = self.mor(s.comp(f, g).unwrap());
                if t.comp(self.mor(f), self.mor(g)) != Some(l) {
                    out.push(LawDiagnostic::new(
                        Law::Functoriality,
                        format!("F({} ; {})", s.name(f), s.name(g)),
                    ));
                }
            }
            for g in 0..nm {
                let (x, y) = (s.src(f), s.src(g));
                let (x2, y2) = (s.tgt(f), s.tgt(g));
                let l = tgt
                    .mt(self.mor(f), self.mor(g))
                    .and_then(|h| t.comp(h, self.mu(x2, y2)));
                let r = self
                    .source
                    .mt(f, g)
                    .and_then(|h| t.comp(self.mu(x, y), self.mor(h)));
                if l.is_none() || l != r {
                    out.push(LawDiagnostic::new(
                        Law::Naturality,
                        format!("laxator against ({}, {})", s.name(f), s.name(g)),
                    ));
                }
            }
        }
        let src = &self.source;
        for x in 0..no {
            let fx = self.obj(x);
            for y in 0..no {
                for z in 0..no {
                    let l = tgt
                        .mt(self.mu(x, y), t.id(self.obj(z)))
                        .and_then(|h| t.comp(h, self.mu(src.ot(x, y), z)));
                    let r = tgt
                        .mt(t.id(fx), self.mu(y, z))
                        .and_then(|h| t.comp(h, self.mu(x, src.ot(y, z))));
                    if l.is_none() || l != r {
                        out.push(LawDiagnostic::new(
                            Law::LaxAssociativity,
                            format!("({}, {}, {})", s.objects[x], s.objects[y], s.objects[z]),
                        ));
                    }
                }
            }
            let left = tgt
                .mt(self.epsilon, t.id(fx))
                .and_then(|h| t.comp(h, self.mu(src.unit, x)));
            if left != Some(t.id(fx)) {
                out.push(LawDiagnostic::new(Law::LeftUnitality, format!("at {}", s.objects[x])));
            }
            let right = tgt
                .mt(t.id(fx), self.epsilon)
                .and_then(|h| t.comp(h, self.mu(x, src.unit)));
            if right != Some(t.id(fx)) {
                out.push(LawDiagnostic::new(Law::RightUnitality, format!("at {}", s.objects[x])));
            }
        }
        out
    }
}

pub fn identity_functor(c: &FinMonoidalCategory) -> FinLaxMonoidalFunctor {
    let no = c.cat.objects.len();
    let mut mu = BTreeMap::new();
    for x in 0..no {
        for y in 0..no {
            mu.insert((x, y), c.id(c.ot(x, y)));
        }
    }
    FinLaxMonoidalFunctor {
        source: c.clone(),
        target: c.clone(),
        obj_map: (0..no).collect(),
        mor_map: (0..c.cat.morphisms.len()).collect(),
        epsilon: c.id(c.unit),
        mu,
    }
}

/// `x ↦ ⌈x/2⌉` on the truncated-addition poset `{0..4}` with `a -> b` iff
/// `a ≥ b`. Since `⌈x/2⌉ + ⌈y/2⌉ ≥ ⌈(x+y)/2⌉` the laxator exists.
pub fn ceil_half() -> FinLaxMonoidalFunctor {
    let c = ceil4();
    let f = |x: usize| x.div_ceil(2);
    let arrow = |a: usize, b: usize| c.cat.morphism(&format!("{a}.{b}")).expect("thin arrow");
    let no = c.cat.objects.len();
    let mor_map = c
        .cat
        .morphisms
        .iter()
        .map(|m| arrow(f(m.src), f(m.tgt)))
        .collect();
    let mut mu = BTreeMap::new();
    for x in 0..no {
        for y in 0..no {
            mu.insert((x, y), arrow(c.ot(f(x), f(y)), f(c.ot(x, y))));
        }
    }
    FinLaxMonoidalFunctor {
        epsilon: arrow(c.unit, f(c.unit)),
        obj_map: (0..no).map(f).collect(),
        mor_map,
        mu,
        source: c.clone(),
        target: c,
    }
}

/// Five single-entry corruptions of `base`, one per kind, each paired with
/// the law it must break. The entry hit by each kind is drawn from `seed`.
pub fn lax_mutations(base: &FinLaxMonoidalFunctor, seed: u64) -> Vec<(String, Law, FinLaxMonoidalFunctor)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let t = &base.target.cat;
    let s = &base.source.cat;
    let mut out = Vec::new();
    let mistyped = |src: usize, tgt: usize, rng: &mut ChaCha8Rng| {
        let c: Vec<usize> = (0..t.morphisms.len())
            .filter(|&m| t.src(m) != src || t.tgt(m) != tgt)
            .collect();
        *c.choose(rng).expect("target has more than one hom")
    };
    let keys: Vec<(usize, usize)> = base.mu.keys().copied().collect();

    let k = *keys.choose(&mut rng).unwrap();
    let mut m = base.clone();
    m.mu.remove(&k);
    out.push((format!("drop laxator at {k:?}"), Law::Totality, m));

    let k = *keys.choose(&mut rng).unwrap();
    let mut m = base.clone();
    let old = m.mu[&k];
    m.mu.insert(k, mistyped(t.src(old), t.tgt(old), &mut rng));
    out.push((format!("retarget laxator at {k:?}"), Law::MuTyping, m));

    let mut m = base.clone();
    m.epsilon = mistyped(t.src(base.epsilon), t.tgt(base.epsilon), &mut rng);
    out.push(("replace unitor".into(), Law::EpsilonTyping, m));

    let x = rng.gen_range(0..s.objects.len());
    let mut m = base.clone();
    let others: Vec<usize> = (0..t.objects.len()).filter(|&o| o != base.obj(x)).collect();
    m.obj_map[x] = *others.choose(&mut rng).unwrap();
    out.push((format!("move object {}", s.objects[x]), Law::FunctorTyping, m));

    let non_ids: Vec<usize> = (0..s.morphisms.len())
        .filter(|f| !s.identity.contains(f))
        .collect();
    let f = *non_ids.choose(&mut rng).unwrap();
    let mut m = base.clone();
    let img = base.mor(f);
    m.mor_map[f] = mistyped(t.src(img), t.tgt(img), &mut rng);
    out.push((format!("move image of {}", s.name(f)), Law::FunctorTyping, m));
    out
}


impl FinLaxMonoidalFunctor {
    /// The same functor between the reversed categories, `μ_{x,y}` read as
    /// `μ_{y,x}`.
    pub fn reversed(&self) -> Self {
        FinLaxMonoidalFunctor {
            source: self.source.reversed(),
            target: self.target.reversed(),
            obj_map: self.obj_map.clone(),
            mor_map: self.mor_map.clone(),
            epsilon: self.epsilon,
            mu: self.mu.iter().map(|(&(x, y), &m)| ((y, x), m)).collect(),
        }
    }
}
