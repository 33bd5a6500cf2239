use rand::Rng;

use super::{comp, eval_internal, whisker, EvalError, Interpretation};
use crate::fincat::{compose_profunctors, FinMonoidalCategory, FinProfunctor};
use crate::presentations::present;
use crate::sig::{parse_document, Signature, Theory};

/// A comb `f : A -> M ⊗ B`, `h : M ⊗ C -> D` plugged with `g : B -> C`,
/// first by composition and then as an internal diagram: `f` inside a tube,
/// the tube split between `M` and `B`, `g` in the right tube, the tubes
/// joined again and `h` applied.
pub const COMB_SOURCE: &str = "internal theory Comb {
  objects: A, M, B, C, D;
  edge f : A -> M, B;
  edge g : B -> C;
  edge h : M, C -> D;
  diagram plugged : (L | f | R) ; (L | M | n2 | B | R) ; (L | M | R | L | g | R) ; (L | M | e1 | C | R) ; (L | h | R);
  diagram closed : A_y ; plugged ; D^y;
}
";

pub fn comb_theory() -> Theory {
    parse_document(COMB_SOURCE)
        .expect("comb source parses")
        .theories
        .remove(0)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombInstance {
    pub model: FinMonoidalCategory,
    /// `A, M, B, C, D`
    pub objects: [usize; 5],
    pub f: usize,
    pub g: usize,
    pub h: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CombResult {
    pub direct: usize,
    pub internal: usize,
}

impl CombResult {
    pub fn agree(&self) -> bool {
        self.direct == self.internal
    }
}

impl CombInstance {
    pub fn interpretation(&self) -> Interpretation {
        let v = &self.model;
        let mut i = Interpretation::new("comb", v.clone(), None);
        for (name, &o) in ["A", "M", "B", "C", "D"].iter().zip(&self.objects) {
            i.objects.insert(name.to_string(), o);
        }
        i.morphisms.insert("f".into(), self.f);
        i.morphisms.insert("g".into(), self.g);
        i.morphisms.insert("h".into(), self.h);
        i
    }

    /// Every comb and plug over a model with a single object.
    pub fn all_over_delooping(v: &FinMonoidalCategory) -> Vec<CombInstance> {
        assert_eq!(v.cat.objects.len(), 1, "a delooping has one object");
        let n = v.cat.morphisms.len();
        let mut out = Vec::new();
        for f in 0..n {
            for h in 0..n {
                for g in 0..n {
                    out.push(CombInstance {
                        model: v.clone(),
                        objects: [0; 5],
                        f,
                        g,
                        h,
                    });
                }
            }
        }
        out
    }

    /// A comb with well-typed parts, objects drawn until the three homs are
    /// inhabited.
    pub fn random(v: &FinMonoidalCategory, rng: &mut impl Rng) -> CombInstance {
        let n = v.cat.objects.len();
        let c = &v.cat;
        loop {
            let o: [usize; 5] = std::array::from_fn(|_| rng.gen_range(0..n));
            let [a, m, b, cc, d] = o;
            let fs = c.hom(a, v.ot(m, b));
            let gs = c.hom(b, cc);
            let hs = c.hom(v.ot(m, cc), d);
            if fs.is_empty() || gs.is_empty() || hs.is_empty() {
                continue;
            }
            return CombInstance {
                model: v.clone(),
                objects: o,
                f: fs[rng.gen_range(0..fs.len())],
                g: gs[rng.gen_range(0..gs.len())],
                h: hs[rng.gen_range(0..hs.len())],
            };
        }
    }

    /// `f ; (M ⊗ g) ; h`
    pub fn direct(&self) -> Result<usize, EvalError> {
        let v = &self.model;
        let m = self.objects[1];
        comp(v, comp(v, self.f, whisker(v, m, self.g, v.unit)?)?, self.h)
    }
}

/// Evaluates a comb both ways. The internal way evaluates the closed tube
/// and checks that the open diagram carries the same morphism.
pub fn comb_eval(inst: &CombInstance) -> Result<CombResult, EvalError> {
    let t = comb_theory();
    let i = inst.interpretation();
    if let Some(e) = i.check_boundaries(&t).into_iter().next() {
        return Err(e);
    }
    let Signature::Internal(p) = &t.signature else {
        unreachable!("the comb theory is internal")
    };
    let pres = present(&t).map_err(|e| EvalError::Unsupported(e.to_string()))?;
    let closed = eval_internal(&pres.diagram(&t, "closed")?, p, &i)?;
    let open = eval_internal(&pres.diagram(&t, "plugged")?, p, &i)?;
    let v = &inst.model;
    let internal = closed
        .morphism(v)
        .ok_or_else(|| EvalError::Unsupported("closed comb left several blocks".into()))?;
    if open.morphism(v) != Some(internal) {
        return Err(EvalError::Unsupported(format!(
            "open and closed comb disagree: {} vs {}",
            open.describe(v),
            closed.describe(v)
        )));
    }
    Ok(CombResult {
        direct: inst.direct()?,
        internal,
    })
}

/// `P(a, m) = V(a, m ⊗ b)`
fn left_optic(v: &FinMonoidalCategory, b: usize) -> FinProfunctor {
    let c = &v.cat;
    let n = c.objects.len();
    let sets = |a: usize, m: usize| c.hom(a, v.ot(m, b));
    let pos = |a: usize, m: usize, h: usize| sets(a, m).iter().position(|&x| x == h).expect("in hom");
    let idb = c.id(b);
    FinProfunctor {
        left: c.clone(),
        right: c.clone(),
        sets: (0..n).map(|a| (0..n).map(|m| sets(a, m).len()).collect()).collect(),
        act_l: (0..c.morphisms.len())
            .map(|f| {
                (0..n)
                    .map(|m| {
                        sets(c.tgt(f), m)
                            .iter()
                            .map(|&h| pos(c.src(f), m, c.comp(f, h).expect("composable")))
                            .collect()
                    })
                    .collect()
            })
            .collect(),
        act_r: (0..c.morphisms.len())
            .map(|k| {
                (0..n)
                    .map(|a| {
                        let kb = v.mt(k, idb).expect("total tensor");
                        sets(a, c.src(k))
                            .iter()
                            .map(|&h| pos(a, c.tgt(k), c.comp(h, kb).expect("composable")))
                            .collect()
                    })
                    .collect()
            })
            .collect(),
    }
}

/// `Q(m, d) = V(m ⊗ c, d)`
fn right_optic(v: &FinMonoidalCategory, cobj: usize) -> FinProfunctor {
    let c = &v.cat;
    let n = c.objects.len();
    let sets = |m: usize, d: usize| c.hom(v.ot(m, cobj), d);
    let pos = |m: usize, d: usize, h: usize| sets(m, d).iter().position(|&x| x == h).expect("in hom");
    let idc = c.id(cobj);
    FinProfunctor {
        left: c.clone(),
        right: c.clone(),
        sets: (0..n).map(|m| (0..n).map(|d| sets(m, d).len()).collect()).collect(),
        act_l: (0..c.morphisms.len())
            .map(|k| {
                (0..n)
                    .map(|d| {
                        let kc = v.mt(k, idc).expect("total tensor");
                        sets(c.tgt(k), d)
                            .iter()
                            .map(|&h| pos(c.src(k), d, c.comp(kc, h).expect("composable")))
                            .collect()
                    })
                    .collect()
            })
            .collect(),
        act_r: (0..c.morphisms.len())
            .map(|k| {
                (0..n)
                    .map(|m| {
                        sets(m, c.src(k))
                            .iter()
                            .map(|&h| pos(m, c.tgt(k), c.comp(h, k).expect("composable")))
                            .collect()
                    })
                    .collect()
            })
            .collect(),
    }
}

/// Checks that plugging `g` is constant on the classes of the coend
/// `∫^M V(A, M ⊗ B) × V(M ⊗ C, D)` and that the class of the instance's comb
/// plugs to its direct evaluation. Returns the number of classes.
pub fn optic_class_check(inst: &CombInstance) -> Result<usize, String> {
    let v = &inst.model;
    let c = &v.cat;
    let [a, m0, b, cc, d] = inst.objects;
    let comp_pq = compose_profunctors(&left_optic(v, b), &right_optic(v, cc)).map_err(|e| e.to_string())?;
    let elems = &comp_pq.elements[a][d];
    let part = &comp_pq.partitions[a][d];
    let plug = |m: usize, i: usize, j: usize| {
        let f = c.hom(a, v.ot(m, b))[i];
        let h = c.hom(v.ot(m, cc), d)[j];
        let mid = v.whisker(m, inst.g, v.unit)?;
        v.comp(v.comp(f, mid)?, h)
    };
    let mut values: Vec<Option<usize>> = vec![None; part.len()];
    for (e, &(m, i, j)) in elems.iter().enumerate() {
        let val = plug(m, i, j).ok_or("undefined composite")?;
        let class = part.class_of[e];
        match values[class] {
            None => values[class] = Some(val),
            Some(w) if w == val => {}
            Some(w) => {
                return Err(format!(
                    "class {class} plugs to both {} and {}",
                    c.name(w),
                    c.name(val)
                ))
            }
        }
    }
    let i = c.hom(a, v.ot(m0, b)).iter().position(|&x| x == inst.f).ok_or("f is ill-typed")?;
    let j = c.hom(v.ot(m0, cc), d).iter().position(|&x| x == inst.h).ok_or("h is ill-typed")?;
    let class = comp_pq.class_of(a, d, m0, i, j);
    let direct = inst.direct().map_err(|e| e.to_string())?;
    if values[class] != Some(direct) {
        return Err("the comb's class plugs to another morphism".into());
    }
    Ok(part.len())
}
