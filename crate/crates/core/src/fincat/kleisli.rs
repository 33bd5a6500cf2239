use std::collections::{BTreeSet, HashMap};

use super::lax::FinLaxMonoidalFunctor;
use super::profunctor::Partition;
use super::{Law, LawDiagnostic};

/// Which of the two promonads: `𝔸 ⋊ 𝕏` with objects `(A, X)`, or
/// `𝕏 ⋉ 𝔸` with objects `(X, A)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Right,
    Left,
}

/// An element `(M, f, g)` with `f: A -> B ⊗ FM` and `g: M ⊗ X -> Y`.
pub type KElement = (usize, usize, usize);

#[derive(Debug, Clone)]
struct Hom {
    elements: Vec<KElement>,
    partition: Partition,
}

/// Kleisli category of one promonad. `⋉` is computed as `⋊` for the functor
/// between the reversed categories, so its elements read `(M, g, f)` with
/// `g: X ⊗ M -> Y` and `f: A -> FM ⊗ B`; internally both are stored in
/// the `⋊` layout. Objects are indexed `a * |𝕏| + x`.
#[derive(Debug, Clone)]
pub struct KleisliCategory {
    pub side: Side,
    f: FinLaxMonoidalFunctor,
    homs: Vec<Vec<Hom>>,
}

/// Both Kleisli categories of a lax monoidal functor.
#[derive(Debug, Clone)]
pub struct KleisliPair {
    pub rtimes: KleisliCategory,
    pub ltimes: KleisliCategory,
}

pub fn kleisli_promonad(f: &FinLaxMonoidalFunctor) -> KleisliPair {
    KleisliPair {
        rtimes: KleisliCategory::build(f.clone(), Side::Right),
        ltimes: KleisliCategory::build(f.reversed(), Side::Left),
    }
}

impl KleisliCategory {
    fn build(f: FinLaxMonoidalFunctor, side: Side) -> Self {
        let (xc, ac) = (&f.source, &f.target);
        let (na, nx) = (ac.cat.objects.len(), xc.cat.objects.len());
        let n = na * nx;
        let mut homs = Vec::with_capacity(n);
        for o1 in 0..n {
            let (a, x) = (o1 / nx, o1 % nx);
            let mut row = Vec::with_capacity(n);
            for o2 in 0..n {
                let (b, y) = (o2 / nx, o2 % nx);
                let mut elements = Vec::new();
                for m in 0..nx {
                    for ff in ac.cat.hom(a, ac.ot(b, f.obj(m))) {
                        for g in xc.cat.hom(xc.ot(m, x), y) {
                            elements.push((m, ff, g));
                        }
                    }
                }
                let index: HashMap<KElement, usize> = elements.iter().enumerate().map(|(k, &e)| (e, k)).collect();
                let mut pairs = Vec::new();
                for mm in 0..xc.cat.morphisms.len() {
                    let (m, m2) = (xc.cat.src(mm), xc.cat.tgt(mm));
                    let bfm = ac.mt(ac.id(b), f.mor(mm)).unwrap();
                    let mx = xc.mt(mm, xc.id(x)).unwrap();
                    for ff in ac.cat.hom(a, ac.ot(b, f.obj(m))) {
                        for g in xc.cat.hom(xc.ot(m2, x), y) {
                            let l = (m2, ac.comp(ff, bfm).unwrap(), g);
                            let r = (m, ff, xc.comp(mx, g).unwrap());
                            pairs.push((index[&l], index[&r]));
                        }
                    }
                }
                let partition = Partition::by_union_find(elements.len(), &pairs);
                row.push(Hom { elements, partition });
            }
            homs.push(row);
        }
        KleisliCategory { side, f, homs }
    }

    pub fn object_count(&self) -> usize {
        self.homs.len()
    }

    fn nx(&self) -> usize {
        self.f.source.cat.objects.len()
    }

    fn obj(&self, a: usize, x: usize) -> usize {
        a * self.nx() + x
    }

    fn split(&self, o: usize) -> (usize, usize) {
        (o / self.nx(), o % self.nx())
    }

    /// Object label, in the order of this side's pairs.
    pub fn object_name(&self, o: usize) -> String {
        let (a, x) = self.split(o);
        let (an, xn) = (&self.f.target.cat.objects[a], &self.f.source.cat.objects[x]);
        match self.side {
            Side::Right => format!("({an}, {xn})"),
            Side::Left => format!("({xn}, {an})"),
        }
    }

    pub fn class_count(&self, o1: usize, o2: usize) -> usize {
        self.homs[o1][o2].partition.len()
    }

    pub fn element_count(&self, o1: usize, o2: usize) -> usize {
        self.homs[o1][o2].elements.len()
    }

    pub fn is_thin(&self) -> bool {
        (0..self.object_count()).all(|o1| (0..self.object_count()).all(|o2| self.class_count(o1, o2) <= 1))
    }

    fn class_of(&self, o1: usize, o2: usize, e: KElement) -> usize {
        let h = &self.homs[o1][o2];
        let k = h.elements.iter().position(|&x| x == e).expect("element of the hom");
        h.partition.class_of[k]
    }

    fn members(&self, o1: usize, o2: usize, c: usize) -> impl Iterator<Item = KElement> + '_ {
        let h = &self.homs[o1][o2];
        h.partition.classes[c].iter().map(move |&k| h.elements[k])
    }

    /// Least element of a class.
    pub fn representative(&self, o1: usize, o2: usize, c: usize) -> KElement {
        let h = &self.homs[o1][o2];
        h.elements[h.partition.representative(c)]
    }

    pub fn identity(&self, o: usize) -> usize {
        let (xc, ac) = (&self.f.source, &self.f.target);
        let (a, x) = self.split(o);
        let e = (xc.unit, ac.mt(ac.id(a), self.f.epsilon).unwrap(), xc.id(x));
        self.class_of(o, o, e)
    }

    fn compose_elements(&self, o3: usize, e1: KElement, e2: KElement) -> KElement {
        let (xc, ac, f) = (&self.f.source, &self.f.target, &self.f);
        let (c, _) = self.split(o3);
        let ((m, f1, g1), (n, f2, g2)) = (e1, e2);
        let fm = ac.mt(f2, ac.id(f.obj(m))).unwrap();
        let cmu = ac.mt(ac.id(c), f.mu(n, m)).unwrap();
        let ff = ac.cat.comp_all(&[f1, fm, cmu]).unwrap();
        let ng = xc.mt(xc.id(n), g1).unwrap();
        (xc.ot(n, m), ff, xc.comp(ng, g2).unwrap())
    }

    /// Every class obtained by composing members of `c1` and `c2`.
    fn compose_all(&self, o1: usize, o2: usize, o3: usize, c1: usize, c2: usize) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for e1 in self.members(o1, o2, c1) {
            for e2 in self.members(o2, o3, c2) {
                out.insert(self.class_of(o1, o3, self.compose_elements(o3, e1, e2)));
            }
        }
        out
    }

    /// Composite of classes, through the least representatives.
    pub fn compose(&self, o1: usize, o2: usize, o3: usize, c1: usize, c2: usize) -> usize {
        let e = self.compose_elements(o3, self.representative(o1, o2, c1), self.representative(o2, o3, c2));
        self.class_of(o1, o3, e)
    }

    /// `a ▹ φ` for a morphism `a` of the acting category `𝔸` (on the left of
    /// `⋊`, on the right of `⋉`).
    pub fn act_outer(&self, a: usize, o1: usize, o2: usize, c: usize) -> (usize, usize, usize) {
        let ac = &self.f.target;
        let ((p, x), (q, y)) = (self.split(o1), self.split(o2));
        let (s, t) = (self.obj(ac.ot(ac.cat.src(a), p), x), self.obj(ac.ot(ac.cat.tgt(a), q), y));
        let (m, f, g) = self.representative(o1, o2, c);
        (s, t, self.class_of(s, t, (m, ac.mt(a, f).unwrap(), g)))
    }

    /// `φ ◃ x` for a morphism `x` of `𝕏`.
    pub fn act_inner(&self, xm: usize, o1: usize, o2: usize, c: usize) -> (usize, usize, usize) {
        let xc = &self.f.source;
        let ((p, x), (q, y)) = (self.split(o1), self.split(o2));
        let (s, t) = (self.obj(p, xc.ot(x, xc.cat.src(xm))), self.obj(q, xc.ot(y, xc.cat.tgt(xm))));
        let (m, f, g) = self.representative(o1, o2, c);
        (s, t, self.class_of(s, t, (m, f, xc.mt(g, xm).unwrap())))
    }

    /// Promonad laws on classes (with composition checked independent of
    /// representatives), then the two actions: independence of
    /// representatives, unit, associativity, functoriality and compatibility.
    pub fn check(&self) -> Vec<LawDiagnostic> {
        let n = self.object_count();
        let mut out = Vec::new();
        let mut table: HashMap<(usize, usize, usize, usize, usize), usize> = HashMap::new();
        for o1 in 0..n {
            for o2 in 0..n {
                for o3 in 0..n {
                    for c1 in 0..self.class_count(o1, o2) {
                        for c2 in 0..self.class_count(o2, o3) {
                            let all = self.compose_all(o1, o2, o3, c1, c2);
                            if all.len() != 1 {
                                out.push(LawDiagnostic::new(
                                    Law::WellDefined,
                                    format!(
                                        "composite {} -> {} -> {}",
                                        self.object_name(o1),
                                        self.object_name(o2),
                                        self.object_name(o3)
                                    ),
                                ));
                            }
                            table.insert((o1, o2, o3, c1, c2), *all.iter().next().unwrap());
                        }
                    }
                }
            }
        }
        if !out.is_empty() {
            return out;
        }
        let comp = |o1, o2, o3, c1, c2| table[&(o1, o2, o3, c1, c2)];
        for o1 in 0..n {
            for o2 in 0..n {
                for c in 0..self.class_count(o1, o2) {
                    if comp(o1, o1, o2, self.identity(o1), c) != c {
                        out.push(LawDiagnostic::new(Law::Unit, format!("left unit at {}", self.object_name(o1))));
                    }
                    if comp(o1, o2, o2, c, self.identity(o2)) != c {
                        out.push(LawDiagnostic::new(Law::Unit, format!("right unit at {}", self.object_name(o2))));
                    }
                }
            }
        }
        for o1 in 0..n {
            for o2 in 0..n {
                for o3 in 0..n {
                    for o4 in 0..n {
                        for c1 in 0..self.class_count(o1, o2) {
                            for c2 in 0..self.class_count(o2, o3) {
                                for c3 in 0..self.class_count(o3, o4) {
                                    let l = comp(o1, o3, o4, comp(o1, o2, o3, c1, c2), c3);
                                    let r = comp(o1, o2, o4, c1, comp(o2, o3, o4, c2, c3));
                                    if l != r {
                                        out.push(LawDiagnostic::new(
                                            Law::Associativity,
                                            format!("through {}", self.object_name(o2)),
                                        ));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        out.extend(self.check_actions(&comp));
        out
    }

    fn check_actions(&self, comp: &dyn Fn(usize, usize, usize, usize, usize) -> usize) -> Vec<LawDiagnostic> {
        let (xc, ac) = (&self.f.source, &self.f.target);
        let n = self.object_count();
        let mut out = Vec::new();
        for o1 in 0..n {
            for o2 in 0..n {
                for c in 0..self.class_count(o1, o2) {
                    let at = format!("{} -> {}", self.object_name(o1), self.object_name(o2));
                    for a in 0..ac.cat.morphisms.len() {
                        let (s, t, _) = self.act_outer(a, o1, o2, c);
                        let imgs: BTreeSet<usize> = self
                            .members(o1, o2, c)
                            .map(|(m, f, g)| self.class_of(s, t, (m, ac.mt(a, f).unwrap(), g)))
                            .collect();
                        if imgs.len() != 1 {
                            out.push(LawDiagnostic::new(Law::WellDefined, format!("outer action {}", ac.cat.name(a))));
                        }
                    }
                    for xm in 0..xc.cat.morphisms.len() {
                        let (s, t, _) = self.act_inner(xm, o1, o2, c);
                        let imgs: BTreeSet<usize> = self
                            .members(o1, o2, c)
                            .map(|(m, f, g)| self.class_of(s, t, (m, f, xc.mt(g, xm).unwrap())))
                            .collect();
                        if imgs.len() != 1 {
                            out.push(LawDiagnostic::new(Law::WellDefined, format!("inner action {}", xc.cat.name(xm))));
                        }
                    }
                    if self.act_outer(ac.id(ac.unit), o1, o2, c) != (o1, o2, c)
                        || self.act_inner(xc.id(xc.unit), o1, o2, c) != (o1, o2, c)
                    {
                        out.push(LawDiagnostic::new(Law::Unit, format!("actions at {at}")));
                    }
                    for a in 0..ac.cat.morphisms.len() {
                        let (s, t, c2) = self.act_outer(a, o1, o2, c);
                        for a2 in 0..ac.cat.morphisms.len() {
                            let l = self.act_outer(a2, s, t, c2);
                            let r = self.act_outer(ac.mt(a2, a).unwrap(), o1, o2, c);
                            if l != r {
                                out.push(LawDiagnostic::new(Law::Associativity, format!("outer action at {at}")));
                            }
                        }
                        for xm in 0..xc.cat.morphisms.len() {
                            let (s2, t2, c3) = self.act_inner(xm, s, t, c2);
                            let (s3, t3, c4) = self.act_inner(xm, o1, o2, c);
                            if (s2, t2, c3) != self.act_outer(a, s3, t3, c4) {
                                out.push(LawDiagnostic::new(
                                    Law::Compatibility,
                                    format!("{} ▹ - ◃ {} at {at}", ac.cat.name(a), xc.cat.name(xm)),
                                ));
                            }
                        }
                    }
                    for xm in 0..xc.cat.morphisms.len() {
                        let (s, t, c2) = self.act_inner(xm, o1, o2, c);
                        for xm2 in 0..xc.cat.morphisms.len() {
                            let l = self.act_inner(xm2, s, t, c2);
                            let r = self.act_inner(xc.mt(xm, xm2).unwrap(), o1, o2, c);
                            if l != r {
                                out.push(LawDiagnostic::new(Law::Associativity, format!("inner action at {at}")));
                            }
                        }
                    }
                }
            }
        }
        // functoriality: (a ▹ φ) ; (a' ▹ ψ) = (a ; a') ▹ (φ ; ψ), and the same inside
        for o1 in 0..n {
            for o2 in 0..n {
                for o3 in 0..n {
                    for c1 in 0..self.class_count(o1, o2) {
                        for c2 in 0..self.class_count(o2, o3) {
                            let c12 = comp(o1, o2, o3, c1, c2);
                            for a in 0..ac.cat.morphisms.len() {
                                for a2 in ac.cat.hom_from(ac.cat.tgt(a)) {
                                    let (s, t, d1) = self.act_outer(a, o1, o2, c1);
                                    let (t2, u, d2) = self.act_outer(a2, o2, o3, c2);
                                    debug_assert_eq!(t, t2);
                                    let l = comp(s, t, u, d1, d2);
                                    let r = self.act_outer(ac.comp(a, a2).unwrap(), o1, o3, c12);
                                    if (s, u, l) != r {
                                        out.push(LawDiagnostic::new(Law::Functoriality, "outer action".into()));
                                    }
                                }
                            }
                            for xm in 0..xc.cat.morphisms.len() {
                                for xm2 in xc.cat.hom_from(xc.cat.tgt(xm)) {
                                    let (s, t, d1) = self.act_inner(xm, o1, o2, c1);
                                    let (_, u, d2) = self.act_inner(xm2, o2, o3, c2);
                                    let l = comp(s, t, u, d1, d2);
                                    let r = self.act_inner(xc.comp(xm, xm2).unwrap(), o1, o3, c12);
                                    if (s, u, l) != r {
                                        out.push(LawDiagnostic::new(Law::Functoriality, "inner action".into()));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }
}
