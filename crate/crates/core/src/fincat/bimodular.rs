use std::collections::{BTreeMap, HashMap};

use super::category::FinCategory;
use super::monoidal::FinMonoidalCategory;
use super::profunctor::{compose_profunctors, Composite, FinProfunctor, Partition};
use super::{Law, LawDiagnostic, ModelError};

/// A strict action of a monoidal category on a category. For a left action
/// `act(a', act(a, x)) = act(a' ⊗ a, x)`; for a right one the product flips.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Action {
    pub actor: FinMonoidalCategory,
    /// `obj[a][x]`
    pub obj: Vec<Vec<usize>>,
    /// `(actor morphism, carrier morphism) -> carrier morphism`
    pub mor: BTreeMap<(usize, usize), usize>,
    pub right: bool,
}

impl Action {
    pub fn by_tensor(v: &FinMonoidalCategory, right: bool) -> Self {
        let n = v.cat.objects.len();
        let obj = (0..n)
            .map(|a| (0..n).map(|x| if right { v.ot(x, a) } else { v.ot(a, x) }).collect())
            .collect();
        let mut mor = BTreeMap::new();
        for a in 0..v.cat.morphisms.len() {
            for f in 0..v.cat.morphisms.len() {
                let h = if right { v.mt(f, a) } else { v.mt(a, f) };
                mor.insert((a, f), h.expect("total tensor"));
            }
        }
        Action {
            actor: v.clone(),
            obj,
            mor,
            right,
        }
    }

    /// Action of a unit category: everything fixed.
    pub fn trivial(c: &FinCategory, right: bool) -> Self {
        let actor = FinMonoidalCategory::unit_category();
        let obj = vec![(0..c.objects.len()).collect()];
        let mor = (0..c.morphisms.len()).map(|f| ((0, f), f)).collect();
        Action {
            actor,
            obj,
            mor,
            right,
        }
    }

    pub fn on_obj(&self, a: usize, x: usize) -> usize {
        self.obj[a][x]
    }

    pub fn on_mor(&self, a: usize, f: usize) -> usize {
        self.mor[&(a, f)]
    }

    /// `a` then `a2` as a single actor object.
    fn then_obj(&self, a: usize, a2: usize) -> usize {
        if self.right {
            self.actor.ot(a, a2)
        } else {
            self.actor.ot(a2, a)
        }
    }

    fn then_mor(&self, a: usize, a2: usize) -> usize {
        let r = if self.right {
            self.actor.mt(a, a2)
        } else {
            self.actor.mt(a2, a)
        };
        r.expect("total tensor")
    }

    fn check(&self, c: &FinCategory, side: &str) -> Vec<LawDiagnostic> {
        let ac = &self.actor.cat;
        let mut out = Vec::new();
        let (na, nx) = (ac.objects.len(), c.objects.len());
        for a in 0..ac.morphisms.len() {
            for f in 0..c.morphisms.len() {
                match self.mor.get(&(a, f)) {
                    None => out.push(LawDiagnostic::new(
                        Law::Totality,
                        format!("{side} action of {} on {}", ac.name(a), c.name(f)),
                    )),
                    Some(&h) => {
                        if c.src(h) != self.on_obj(ac.src(a), c.src(f)) || c.tgt(h) != self.on_obj(ac.tgt(a), c.tgt(f)) {
                            out.push(LawDiagnostic::new(
                                Law::Typing,
                                format!("{side} action of {} on {}", ac.name(a), c.name(f)),
                            ));
                        }
                    }
                }
            }
        }
        if !out.is_empty() {
            return out;
        }
        for x in 0..nx {
            if self.on_obj(self.actor.unit, x) != x {
                out.push(LawDiagnostic::new(Law::Unit, format!("{side} unit on {}", c.objects[x])));
            }
            for a in 0..na {
                if self.on_mor(ac.id(a), c.id(x)) != c.id(self.on_obj(a, x)) {
                    out.push(LawDiagnostic::new(
                        Law::Functoriality,
                        format!("{side} action on identities at ({}, {})", ac.objects[a], c.objects[x]),
                    ));
                }
                for a2 in 0..na {
                    if self.on_obj(a2, self.on_obj(a, x)) != self.on_obj(self.then_obj(a, a2), x) {
                        out.push(LawDiagnostic::new(
                            Law::Associativity,
                            format!("{side} action ({}, {}, {})", ac.objects[a], ac.objects[a2], c.objects[x]),
                        ));
                    }
                }
            }
        }
        let iu = ac.id(self.actor.unit);
        for f in 0..c.morphisms.len() {
            if self.on_mor(iu, f) != f {
                out.push(LawDiagnostic::new(Law::Unit, format!("{side} unit on {}", c.name(f))));
            }
            for a in 0..ac.morphisms.len() {
                for a2 in 0..ac.morphisms.len() {
                    if self.on_mor(a2, self.on_mor(a, f)) != self.on_mor(self.then_mor(a, a2), f) {
                        out.push(LawDiagnostic::new(
                            Law::Associativity,
                            format!("{side} action ({}, {}, {})", ac.name(a), ac.name(a2), c.name(f)),
                        ));
                    }
                }
                for a2 in ac.hom_from(ac.tgt(a)) {
                    for f2 in c.hom_from(c.tgt(f)) {
                        let l = c.comp(self.on_mor(a, f), self.on_mor(a2, f2));
                        let r = self.on_mor(ac.comp(a, a2).unwrap(), c.comp(f, f2).unwrap());
                        if l != Some(r) {
                            out.push(LawDiagnostic::new(
                                Law::Functoriality,
                                format!("{side} action ({} ; {}, {} ; {})", ac.name(a), ac.name(a2), c.name(f), c.name(f2)),
                            ));
                        }
                    }
                }
            }
        }
        out
    }
}

/// A category with a left action of `left.actor` and a right action of
/// `right.actor`, pointed at `point`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinBimodularCategory {
    pub carrier: FinCategory,
    pub left: Action,
    pub right: Action,
    pub point: usize,
}

impl FinBimodularCategory {
    /// `V` acting on itself on both sides, pointed at the unit.
    pub fn regular(v: &FinMonoidalCategory) -> Self {
        FinBimodularCategory {
            carrier: v.cat.clone(),
            left: Action::by_tensor(v, false),
            right: Action::by_tensor(v, true),
            point: v.unit,
        }
    }

    pub fn lo(&self, m: usize, x: usize) -> usize {
        self.left.on_obj(m, x)
    }

    pub fn ro(&self, x: usize, n: usize) -> usize {
        self.right.on_obj(n, x)
    }

    pub fn lm(&self, m: usize, f: usize) -> usize {
        self.left.on_mor(m, f)
    }

    pub fn rm(&self, f: usize, n: usize) -> usize {
        self.right.on_mor(n, f)
    }

    pub fn check(&self) -> Vec<LawDiagnostic> {
        let c = &self.carrier;
        let mut out = c.check();
        out.extend(self.left.check(c, "left"));
        out.extend(self.right.check(c, "right"));
        if !out.is_empty() {
            return out;
        }
        let (lc, rc) = (&self.left.actor.cat, &self.right.actor.cat);
        for x in 0..c.objects.len() {
            for m in 0..lc.objects.len() {
                for n in 0..rc.objects.len() {
                    if self.lo(m, self.ro(x, n)) != self.ro(self.lo(m, x), n) {
                        out.push(LawDiagnostic::new(
                            Law::Compatibility,
                            format!("{} ▹ {} ◃ {}", lc.objects[m], c.objects[x], rc.objects[n]),
                        ));
                    }
                }
            }
        }
        for f in 0..c.morphisms.len() {
            for m in 0..lc.morphisms.len() {
                for n in 0..rc.morphisms.len() {
                    if self.lm(m, self.rm(f, n)) != self.rm(self.lm(m, f), n) {
                        out.push(LawDiagnostic::new(
                            Law::Compatibility,
                            format!("{} ▹ {} ◃ {}", lc.name(m), c.name(f), rc.name(n)),
                        ));
                    }
                }
            }
        }
        out
    }
}

/// A profunctor between bimodular categories over the same actors, with
/// strengths `t_left[m][x][y][i] ∈ T(m ▹ x, m ▹ y)` and
/// `t_right[n][x][y][i] ∈ T(x ◃ n, y ◃ n)`, and an optional point in
/// `T(source.point, target.point)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinBimodularProfunctor {
    pub prof: FinProfunctor,
    pub source: FinBimodularCategory,
    pub target: FinBimodularCategory,
    pub t_left: Vec<Vec<Vec<Vec<usize>>>>,
    pub t_right: Vec<Vec<Vec<Vec<usize>>>>,
    pub point: Option<usize>,
}

impl FinBimodularProfunctor {
    pub fn tl(&self, m: usize, x: usize, y: usize, i: usize) -> usize {
        self.t_left[m][x][y][i]
    }

    pub fn tr(&self, n: usize, x: usize, y: usize, i: usize) -> usize {
        self.t_right[n][x][y][i]
    }

    /// Associativity, unit, compatibility and naturality of both strengths.
    pub fn check_strength(&self) -> Vec<LawDiagnostic> {
        let mut out = self.prof.check();
        if !out.is_empty() {
            return out;
        }
        let (s, t, p) = (&self.source, &self.target, &self.prof);
        let (sc, tc) = (&s.carrier, &t.carrier);
        let (mm, nn) = (&s.left.actor, &s.right.actor);
        let shape = |tab: &Vec<Vec<Vec<Vec<usize>>>>, k: usize, right: bool| {
            tab.len() == k
                && (0..k).all(|a| {
                    (0..sc.objects.len()).all(|x| {
                        (0..tc.objects.len()).all(|y| {
                            let (x2, y2) = if right {
                                (s.ro(x, a), t.ro(y, a))
                            } else {
                                (s.lo(a, x), t.lo(a, y))
                            };
                            tab[a][x][y].len() == p.size(x, y) && tab[a][x][y].iter().all(|&j| j < p.size(x2, y2))
                        })
                    })
                })
        };
        if !shape(&self.t_left, mm.cat.objects.len(), false) || !shape(&self.t_right, nn.cat.objects.len(), true) {
            out.push(LawDiagnostic::new(Law::Typing, "strength tables out of shape".into()));
            return out;
        }
        if let Some(pt) = self.point {
            if pt >= p.size(s.point, t.point) {
                out.push(LawDiagnostic::new(Law::Typing, "point out of range".into()));
                return out;
            }
        }
        for x in 0..sc.objects.len() {
            for y in 0..tc.objects.len() {
                for i in 0..p.size(x, y) {
                    let at = format!("element {i} of T({}, {})", sc.objects[x], tc.objects[y]);
                    if self.tl(mm.unit, x, y, i) != i {
                        out.push(LawDiagnostic::new(Law::StrengthUnit, format!("left, {at}")));
                    }
                    if self.tr(nn.unit, x, y, i) != i {
                        out.push(LawDiagnostic::new(Law::StrengthUnit, format!("right, {at}")));
                    }
                    for m in 0..mm.cat.objects.len() {
                        let (xm, ym, im) = (s.lo(m, x), t.lo(m, y), self.tl(m, x, y, i));
                        for m2 in 0..mm.cat.objects.len() {
                            if self.tl(m2, xm, ym, im) != self.tl(mm.ot(m2, m), x, y, i) {
                                out.push(LawDiagnostic::new(
                                    Law::StrengthAssociativity,
                                    format!("left ({}, {}), {at}", mm.cat.objects[m], mm.cat.objects[m2]),
                                ));
                            }
                        }
                        for n in 0..nn.cat.objects.len() {
                            let l = self.tr(n, xm, ym, im);
                            let r = self.tl(m, s.ro(x, n), t.ro(y, n), self.tr(n, x, y, i));
                            if l != r {
                                out.push(LawDiagnostic::new(
                                    Law::Compatibility,
                                    format!("({}, {}), {at}", mm.cat.objects[m], nn.cat.objects[n]),
                                ));
                            }
                        }
                    }
                    for n in 0..nn.cat.objects.len() {
                        let (xn, yn, inn) = (s.ro(x, n), t.ro(y, n), self.tr(n, x, y, i));
                        for n2 in 0..nn.cat.objects.len() {
                            if self.tr(n2, xn, yn, inn) != self.tr(nn.ot(n, n2), x, y, i) {
                                out.push(LawDiagnostic::new(
                                    Law::StrengthAssociativity,
                                    format!("right ({}, {}), {at}", nn.cat.objects[n], nn.cat.objects[n2]),
                                ));
                            }
                        }
                    }
                }
            }
        }
        // naturality in the two arguments and in the actor
        for x in 0..sc.objects.len() {
            for y in 0..tc.objects.len() {
                for i in 0..p.size(x, y) {
                    for f in sc.hom_to(x) {
                        let x0 = sc.src(f);
                        for m in 0..mm.cat.objects.len() {
                            let l = self.tl(m, x0, y, p.lmul(f, y, i));
                            let r = p.lmul(s.lm(mm.cat.id(m), f), t.lo(m, y), self.tl(m, x, y, i));
                            if l != r {
                                out.push(LawDiagnostic::new(
                                    Law::Naturality,
                                    format!("left strength at {} against {}", mm.cat.objects[m], sc.name(f)),
                                ));
                            }
                        }
                        for n in 0..nn.cat.objects.len() {
                            let l = self.tr(n, x0, y, p.lmul(f, y, i));
                            let r = p.lmul(s.rm(f, nn.cat.id(n)), t.ro(y, n), self.tr(n, x, y, i));
                            if l != r {
                                out.push(LawDiagnostic::new(
                                    Law::Naturality,
                                    format!("right strength at {} against {}", nn.cat.objects[n], sc.name(f)),
                                ));
                            }
                        }
                    }
                    for g in tc.hom_from(y) {
                        let y1 = tc.tgt(g);
                        for m in 0..mm.cat.objects.len() {
                            let l = self.tl(m, x, y1, p.rmul(x, i, g));
                            let r = p.rmul(s.lo(m, x), self.tl(m, x, y, i), t.lm(mm.cat.id(m), g));
                            if l != r {
                                out.push(LawDiagnostic::new(
                                    Law::Naturality,
                                    format!("left strength at {} against {}", mm.cat.objects[m], tc.name(g)),
                                ));
                            }
                        }
                        for n in 0..nn.cat.objects.len() {
                            let l = self.tr(n, x, y1, p.rmul(x, i, g));
                            let r = p.rmul(s.ro(x, n), self.tr(n, x, y, i), t.rm(g, nn.cat.id(n)));
                            if l != r {
                                out.push(LawDiagnostic::new(
                                    Law::Naturality,
                                    format!("right strength at {} against {}", nn.cat.objects[n], tc.name(g)),
                                ));
                            }
                        }
                    }
                    for a in 0..mm.cat.morphisms.len() {
                        let (m, m2) = (mm.cat.src(a), mm.cat.tgt(a));
                        let l = p.lmul(s.lm(a, sc.id(x)), t.lo(m2, y), self.tl(m2, x, y, i));
                        let r = p.rmul(s.lo(m, x), self.tl(m, x, y, i), t.lm(a, tc.id(y)));
                        if l != r {
                            out.push(LawDiagnostic::new(
                                Law::Naturality,
                                format!("left strength against {}", mm.cat.name(a)),
                            ));
                        }
                    }
                    for b in 0..nn.cat.morphisms.len() {
                        let (n, n2) = (nn.cat.src(b), nn.cat.tgt(b));
                        let l = p.lmul(s.rm(sc.id(x), b), t.ro(y, n2), self.tr(n2, x, y, i));
                        let r = p.rmul(s.ro(x, n), self.tr(n, x, y, i), t.rm(tc.id(y), b));
                        if l != r {
                            out.push(LawDiagnostic::new(
                                Law::Naturality,
                                format!("right strength against {}", nn.cat.name(b)),
                            ));
                        }
                    }
                }
            }
        }
        out
    }
}

/// Hom profunctor of a bimodular category, strengths by the actions,
/// pointed at the identity of the chosen object.
pub fn hom_profunctor(c: &FinBimodularCategory) -> FinBimodularProfunctor {
    let prof = FinProfunctor::hom(&c.carrier);
    let cat = &c.carrier;
    let n = cat.objects.len();
    let pos = |x: usize, y: usize, h: usize| cat.hom(x, y).iter().position(|&k| k == h).unwrap();
    let table = |k: usize, right: bool| -> Vec<Vec<Vec<Vec<usize>>>> {
        (0..k)
            .map(|a| {
                (0..n)
                    .map(|x| {
                        (0..n)
                            .map(|y| {
                                cat.hom(x, y)
                                    .into_iter()
                                    .map(|f| {
                                        if right {
                                            let id = c.right.actor.cat.id(a);
                                            pos(c.ro(x, a), c.ro(y, a), c.rm(f, id))
                                        } else {
                                            let id = c.left.actor.cat.id(a);
                                            pos(c.lo(a, x), c.lo(a, y), c.lm(id, f))
                                        }
                                    })
                                    .collect()
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect()
    };
    let point = Some(pos(c.point, c.point, cat.id(c.point)));
    FinBimodularProfunctor {
        t_left: table(c.left.actor.cat.objects.len(), false),
        t_right: table(c.right.actor.cat.objects.len(), true),
        prof,
        source: c.clone(),
        target: c.clone(),
        point,
    }
}

/// `T ⊗_N R` as a quotient of the disjoint union of every
/// `T(X, X') × R(Y, Y')` by `(t^N x, y) ~ (x, t_N y)`. Elements are
/// `(X, X', Y, Y', x, y)`.
#[derive(Debug, Clone)]
pub struct TensorProduct {
    pub elements: Vec<[usize; 6]>,
    pub partition: Partition,
    pub witnesses: Vec<(usize, usize)>,
    /// Outer strengths on classes: `(m, class) -> class`.
    pub t_left: BTreeMap<(usize, usize), usize>,
    pub t_right: BTreeMap<(usize, usize), usize>,
    pub point: Option<usize>,
    /// Failures of the outer strengths to respect the classes.
    pub diagnostics: Vec<LawDiagnostic>,
}

impl TensorProduct {
    pub fn class_count(&self) -> usize {
        self.partition.len()
    }
}

fn tensor_elements(t: &FinBimodularProfunctor, r: &FinBimodularProfunctor) -> Vec<[usize; 6]> {
    let mut out = Vec::new();
    for x in 0..t.source.carrier.objects.len() {
        for x2 in 0..t.target.carrier.objects.len() {
            for y in 0..r.source.carrier.objects.len() {
                for y2 in 0..r.target.carrier.objects.len() {
                    for i in 0..t.prof.size(x, x2) {
                        for j in 0..r.prof.size(y, y2) {
                            out.push([x, x2, y, y2, i, j]);
                        }
                    }
                }
            }
        }
    }
    out
}

fn check_middle(t: &FinBimodularProfunctor, r: &FinBimodularProfunctor) -> Result<(), ModelError> {
    if t.source.right.actor != r.source.left.actor || t.target.right.actor != r.target.left.actor {
        return Err(ModelError::Mismatch("the shared actor differs".into()));
    }
    if t.source.right.actor != t.target.right.actor {
        return Err(ModelError::Mismatch("right actors of the first factor differ".into()));
    }
    Ok(())
}

pub fn tensor_bimodular_profunctors(
    t: &FinBimodularProfunctor,
    r: &FinBimodularProfunctor,
) -> Result<TensorProduct, ModelError> {
    check_middle(t, r)?;
    let elements = tensor_elements(t, r);
    let index: HashMap<[usize; 6], usize> = elements.iter().enumerate().map(|(k, &e)| (e, k)).collect();
    let nn = &t.source.right.actor;
    let mut witnesses = Vec::new();
    for &[x, x2, y, y2, i, j] in &elements {
        for n in 0..nn.cat.objects.len() {
            let a = [
                t.source.ro(x, n),
                t.target.ro(x2, n),
                y,
                y2,
                t.tr(n, x, x2, i),
                j,
            ];
            let b = [
                x,
                x2,
                r.source.lo(n, y),
                r.target.lo(n, y2),
                i,
                r.tl(n, y, y2, j),
            ];
            witnesses.push((index[&a], index[&b]));
        }
    }
    let partition = Partition::by_union_find(elements.len(), &witnesses);
    let mut diagnostics = Vec::new();
    let mut t_left = BTreeMap::new();
    let mut t_right = BTreeMap::new();
    let mm = &t.source.left.actor;
    let oo = &r.source.right.actor;
    for (c, members) in partition.classes.iter().enumerate() {
        for m in 0..mm.cat.objects.len() {
            let images: Vec<usize> = members
                .iter()
                .map(|&e| {
                    let [x, x2, y, y2, i, j] = elements[e];
                    let img = [t.source.lo(m, x), t.target.lo(m, x2), y, y2, t.tl(m, x, x2, i), j];
                    partition.class_of[index[&img]]
                })
                .collect();
            if images.iter().any(|&k| k != images[0]) {
                diagnostics.push(LawDiagnostic::new(
                    Law::WellDefined,
                    format!("left strength {} on class {c}", mm.cat.objects[m]),
                ));
            }
            t_left.insert((m, c), images[0]);
        }
        for o in 0..oo.cat.objects.len() {
            let images: Vec<usize> = members
                .iter()
                .map(|&e| {
                    let [x, x2, y, y2, i, j] = elements[e];
                    let img = [x, x2, r.source.ro(y, o), r.target.ro(y2, o), i, r.tr(o, y, y2, j)];
                    partition.class_of[index[&img]]
                })
                .collect();
            if images.iter().any(|&k| k != images[0]) {
                diagnostics.push(LawDiagnostic::new(
                    Law::WellDefined,
                    format!("right strength {} on class {c}", oo.cat.objects[o]),
                ));
            }
            t_right.insert((o, c), images[0]);
        }
    }
    let point = match (t.point, r.point) {
        (Some(p), Some(q)) => {
            let e = [t.source.point, t.target.point, r.source.point, r.target.point, p, q];
            Some(partition.class_of[index[&e]])
        }
        _ => None,
    };
    Ok(TensorProduct {
        elements,
        partition,
        witnesses,
        t_left,
        t_right,
        point,
        diagnostics,
    })
}

/// The tensor partition from a pairwise test: `e1 ~ e2` when some `N` has
/// `e1 = (X ◃ N, X' ◃ N, Y, Y', t^N x, y)` and `e2 = (X, X', N ▹ Y, N ▹ Y', x, t_N y)`.
pub fn tensor_partition_brute(
    t: &FinBimodularProfunctor,
    r: &FinBimodularProfunctor,
) -> Result<Partition, ModelError> {
    check_middle(t, r)?;
    let elements = tensor_elements(t, r);
    let nn = t.source.right.actor.cat.objects.len();
    Ok(Partition::by_brute_force(elements.len(), |a, b| {
        let [ax, ax2, ay, ay2, ai, aj] = elements[a];
        let [bx, bx2, by, by2, bi, bj] = elements[b];
        (0..nn).any(|n| {
            ax == t.source.ro(bx, n)
                && ax2 == t.target.ro(bx2, n)
                && by == r.source.lo(n, ay)
                && by2 == r.target.lo(n, ay2)
                && ai == t.tr(n, bx, bx2, bi)
                && bj == r.tl(n, ay, ay2, aj)
        })
    }))
}

/// Composite of pointed bimodular profunctors `P: C -> D`, `Q: D -> E`.
/// Strengths act componentwise on representatives; the point is the class
/// of `(p, q)` over the chosen object of `D`.
pub fn compose_pointed_profunctors(
    p: &FinBimodularProfunctor,
    q: &FinBimodularProfunctor,
) -> Result<(FinBimodularProfunctor, Composite), ModelError> {
    if p.target != q.source {
        return Err(ModelError::Mismatch("middle bimodular categories differ".into()));
    }
    let comp = compose_profunctors(&p.prof, &q.prof)?;
    let (c, e) = (&p.source, &q.target);
    let (nc, ne) = (c.carrier.objects.len(), e.carrier.objects.len());
    let d = &p.target;
    let table = |k: usize, right: bool| -> Vec<Vec<Vec<Vec<usize>>>> {
        (0..k)
            .map(|a| {
                (0..nc)
                    .map(|x| {
                        (0..ne)
                            .map(|z| {
                                (0..comp.prof.size(x, z))
                                    .map(|cls| {
                                        let (y, i, j) = comp.representative(x, z, cls);
                                        if right {
                                            comp.class_of(
                                                c.ro(x, a),
                                                e.ro(z, a),
                                                d.ro(y, a),
                                                p.tr(a, x, y, i),
                                                q.tr(a, y, z, j),
                                            )
                                        } else {
                                            comp.class_of(
                                                c.lo(a, x),
                                                e.lo(a, z),
                                                d.lo(a, y),
                                                p.tl(a, x, y, i),
                                                q.tl(a, y, z, j),
                                            )
                                        }
                                    })
                                    .collect()
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect()
    };
    let point = match (p.point, q.point) {
        (Some(a), Some(b)) => Some(comp.class_of(c.point, e.point, d.point, a, b)),
        _ => None,
    };
    let out = FinBimodularProfunctor {
        prof: comp.prof.clone(),
        source: c.clone(),
        target: e.clone(),
        t_left: table(c.left.actor.cat.objects.len(), false),
        t_right: table(c.right.actor.cat.objects.len(), true),
        point,
    };
    Ok((out, comp))
}
