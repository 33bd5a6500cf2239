use std::collections::BTreeMap;

use super::category::{FinCategory, Morphism};
use super::{Law, LawDiagnostic, ModelError};
use crate::sig::ModelDecl;

/// A strict monoidal category given by tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinMonoidalCategory {
    pub name: String,
    pub cat: FinCategory,
    pub tensor_obj: Vec<Vec<usize>>,
    pub tensor_mor: BTreeMap<(usize, usize), usize>,
    pub unit: usize,
}

impl FinMonoidalCategory {
    pub fn ot(&self, a: usize, b: usize) -> usize {
        self.tensor_obj[a][b]
    }

    pub fn ot_all(&self, xs: &[usize]) -> usize {
        xs.iter().fold(self.unit, |acc, &x| self.ot(acc, x))
    }

    pub fn mt(&self, f: usize, g: usize) -> Option<usize> {
        self.tensor_mor.get(&(f, g)).copied()
    }

    pub fn mt_all(&self, fs: &[usize]) -> Option<usize> {
        fs.iter()
            .try_fold(self.cat.id(self.unit), |acc, &f| self.mt(acc, f))
    }

    pub fn id(&self, a: usize) -> usize {
        self.cat.id(a)
    }

    pub fn comp(&self, f: usize, g: usize) -> Option<usize> {
        self.cat.comp(f, g)
    }

    /// `id_a ⊗ f ⊗ id_b`
    pub fn whisker(&self, a: usize, f: usize, b: usize) -> Option<usize> {
        let l = self.mt(self.id(a), f)?;
        self.mt(l, self.id(b))
    }

    pub fn unit_category() -> Self {
        FinMonoidalCategory {
            name: "unit".into(),
            cat: FinCategory::unit(),
            tensor_obj: vec![vec![0]],
            tensor_mor: BTreeMap::from([((0, 0), 0)]),
            unit: 0,
        }
    }

    /// Law check in stages, stopping at the first failing one: the category,
    /// the tensor on objects, typing and totality on morphisms, then
    /// functoriality, strict associativity and unit, and interchange.
    pub fn check(&self) -> Vec<LawDiagnostic> {
        let c = &self.cat;
        let mut out = c.check();
        if !out.is_empty() {
            return out;
        }
        let no = c.objects.len();
        let nm = c.morphisms.len();
        let on = |a: usize| c.objects[a].as_str();
        for a in 0..no {
            for b in 0..no {
                for d in 0..no {
                    if self.ot(self.ot(a, b), d) != self.ot(a, self.ot(b, d)) {
                        out.push(LawDiagnostic::new(
                            Law::Associativity,
                            format!("({} ⊗ {}) ⊗ {}", on(a), on(b), on(d)),
                        ));
                    }
                }
            }
            if self.ot(self.unit, a) != a || self.ot(a, self.unit) != a {
                out.push(LawDiagnostic::new(Law::Unit, format!("unit on {}", on(a))));
            }
        }
        if !out.is_empty() {
            return out;
        }
        for f in 0..nm {
            for g in 0..nm {
                match self.mt(f, g) {
                    None => out.push(LawDiagnostic::new(
                        Law::Totality,
                        format!("tensor of {} and {}", c.name(f), c.name(g)),
                    )),
                    Some(h) => {
                        if c.src(h) != self.ot(c.src(f), c.src(g)) || c.tgt(h) != self.ot(c.tgt(f), c.tgt(g)) {
                            out.push(LawDiagnostic::new(
                                Law::Typing,
                                format!("tensor of {} and {}", c.name(f), c.name(g)),
                            ));
                        }
                    }
                }
            }
        }
        if !out.is_empty() {
            return out;
        }
        for a in 0..no {
            for b in 0..no {
                if self.mt(self.id(a), self.id(b)) != Some(self.id(self.ot(a, b))) {
                    out.push(LawDiagnostic::new(
                        Law::Functoriality,
                        format!("id {} ⊗ id {}", on(a), on(b)),
                    ));
                }
            }
        }
        let iu = self.id(self.unit);
        for f in 0..nm {
            if self.mt(iu, f) != Some(f) || self.mt(f, iu) != Some(f) {
                out.push(LawDiagnostic::new(Law::Unit, format!("unit tensor {}", c.name(f))));
            }
            for g in 0..nm {
                for h in 0..nm {
                    let l = self.mt(self.mt(f, g).unwrap(), h);
                    let r = self.mt(f, self.mt(g, h).unwrap());
                    if l != r {
                        out.push(LawDiagnostic::new(
                            Law::Associativity,
                            format!("({} ⊗ {}) ⊗ {}", c.name(f), c.name(g), c.name(h)),
                        ));
                    }
                }
            }
        }
        for f in 0..nm {
            for g in 0..nm {
                for f2 in c.hom_from(c.tgt(f)) {
                    for g2 in c.hom_from(c.tgt(g)) {
                        let l = self.comp(self.mt(f, g).unwrap(), self.mt(f2, g2).unwrap());
                        let r = self.mt(self.comp(f, f2).unwrap(), self.comp(g, g2).unwrap());
                        if l != r {
                            out.push(LawDiagnostic::new(
                                Law::Interchange,
                                format!(
                                    "({} ⊗ {}) ; ({} ⊗ {})",
                                    c.name(f),
                                    c.name(g),
                                    c.name(f2),
                                    c.name(g2)
                                ),
                            ));
                        }
                    }
                }
            }
        }
        out
    }

    /// Reads a model block. The identity of each object is the unique
    /// endomorphism that is neutral for every listed composite.
    pub fn from_decl(m: &ModelDecl) -> Result<Self, ModelError> {
        let objects = m.objects.clone();
        let obj = |n: &str| {
            objects
                .iter()
                .position(|o| o == n)
                .ok_or_else(|| ModelError::Unknown(n.to_string()))
        };
        let mut morphisms: Vec<Morphism> = Vec::new();
        for (a, b, ms) in &m.homs {
            let (a, b) = (obj(a)?, obj(b)?);
            for name in ms {
                if morphisms.iter().any(|x| &x.name == name) {
                    return Err(ModelError::Duplicate(name.clone()));
                }
                morphisms.push(Morphism {
                    name: name.clone(),
                    src: a,
                    tgt: b,
                });
            }
        }
        let mor = |n: &str| {
            morphisms
                .iter()
                .position(|x| x.name == n)
                .ok_or_else(|| ModelError::Unknown(n.to_string()))
        };
        let mut compose = BTreeMap::new();
        for (f, g, h) in &m.composes {
            compose.insert((mor(f)?, mor(g)?), mor(h)?);
        }
        let mut identity = Vec::new();
        for (a, name) in objects.iter().enumerate() {
            let cands: Vec<usize> = (0..morphisms.len())
                .filter(|&e| morphisms[e].src == a && morphisms[e].tgt == a)
                .filter(|&e| {
                    (0..morphisms.len()).all(|f| {
                        (morphisms[f].src != a || compose.get(&(e, f)) == Some(&f))
                            && (morphisms[f].tgt != a || compose.get(&(f, e)) == Some(&f))
                    })
                })
                .collect();
            match cands.as_slice() {
                [e] => identity.push(*e),
                _ => return Err(ModelError::NoIdentity(name.clone())),
            }
        }
        let unit = match &m.unit {
            Some(u) => obj(u)?,
            None => return Err(ModelError::Unknown("unit".into())),
        };
        let mut tensor_obj = vec![vec![usize::MAX; objects.len()]; objects.len()];
        let mut tensor_mor = BTreeMap::new();
        for (x, y, z) in &m.tensors {
            match (obj(x), obj(y), obj(z)) {
                (Ok(a), Ok(b), Ok(c)) => tensor_obj[a][b] = c,
                _ => {
                    tensor_mor.insert((mor(x)?, mor(y)?), mor(z)?);
                }
            }
        }
        for (a, row) in tensor_obj.iter().enumerate() {
            if let Some(b) = row.iter().position(|&c| c == usize::MAX) {
                return Err(ModelError::Missing(format!(
                    "tensor {} {}",
                    objects[a], objects[b]
                )));
            }
        }
        Ok(FinMonoidalCategory {
            name: m.name.clone(),
            cat: FinCategory {
                objects,
                morphisms,
                identity,
                compose,
            },
            tensor_obj,
            tensor_mor,
            unit,
        })
    }

    /// The model as a `model` block.
    pub fn to_decl(&self) -> ModelDecl {
        let c = &self.cat;
        let mut homs = Vec::new();
        for a in 0..c.objects.len() {
            for b in 0..c.objects.len() {
                let ms: Vec<String> = c.hom(a, b).iter().map(|&f| c.name(f).to_string()).collect();
                if !ms.is_empty() {
                    homs.push((c.objects[a].clone(), c.objects[b].clone(), ms));
                }
            }
        }
        let composes = c
            .compose
            .iter()
            .map(|(&(f, g), &h)| (c.name(f).into(), c.name(g).into(), c.name(h).into()))
            .collect();
        let mut tensors = Vec::new();
        for a in 0..c.objects.len() {
            for b in 0..c.objects.len() {
                tensors.push((
                    c.objects[a].clone(),
                    c.objects[b].clone(),
                    c.objects[self.ot(a, b)].clone(),
                ));
            }
        }
        for (&(f, g), &h) in &self.tensor_mor {
            tensors.push((c.name(f).into(), c.name(g).into(), c.name(h).into()));
        }
        ModelDecl {
            name: self.name.clone(),
            objects: c.objects.clone(),
            homs,
            composes,
            tensors,
            unit: Some(c.objects[self.unit].clone()),
        }
    }
}

/// Delooping of a finite commutative monoid given by its elements, the
/// operation table and the unit element.
pub fn delooping(name: &str, elements: &[&str], op: impl Fn(usize, usize) -> usize, unit: usize) -> FinMonoidalCategory {
    let n = elements.len();
    let morphisms = elements
        .iter()
        .map(|e| Morphism {
            name: e.to_string(),
            src: 0,
            tgt: 0,
        })
        .collect();
    let mut table = BTreeMap::new();
    for a in 0..n {
        for b in 0..n {
            table.insert((a, b), op(a, b));
        }
    }
    FinMonoidalCategory {
        name: name.into(),
        cat: FinCategory {
            objects: vec!["*".into()],
            morphisms,
            identity: vec![unit],
            compose: table.clone(),
        },
        tensor_obj: vec![vec![0]],
        tensor_mor: table,
        unit: 0,
    }
}

/// Cyclic group ℤ/k, elements named `0 .. k-1`.
pub fn cyclic(k: usize) -> FinMonoidalCategory {
    let names: Vec<String> = (0..k).map(|i| i.to_string()).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    delooping(&format!("z{k}"), &refs, |a, b| (a + b) % k, 0)
}

pub fn z2() -> FinMonoidalCategory {
    cyclic(2)
}

/// A thin category on `0 .. n-1` with an arrow `a -> b` whenever `arrow(a, b)`
/// holds, named `a.b`.
pub fn thin(
    name: &str,
    n: usize,
    arrow: impl Fn(usize, usize) -> bool,
    tensor: impl Fn(usize, usize) -> usize,
    unit: usize,
) -> FinMonoidalCategory {
    let objects: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let mut morphisms = Vec::new();
    let mut index = BTreeMap::new();
    for a in 0..n {
        for b in 0..n {
            if arrow(a, b) {
                index.insert((a, b), morphisms.len());
                morphisms.push(Morphism {
                    name: format!("{a}.{b}"),
                    src: a,
                    tgt: b,
                });
            }
        }
    }
    let identity = (0..n).map(|a| index[&(a, a)]).collect();
    let mut compose = BTreeMap::new();
    let mut tensor_mor = BTreeMap::new();
    for (&(a, b), &f) in &index {
        for (&(c, d), &g) in &index {
            if b == c {
                if let Some(&h) = index.get(&(a, d)) {
                    compose.insert((f, g), h);
                }
            }
            if let Some(&h) = index.get(&(tensor(a, c), tensor(b, d))) {
                tensor_mor.insert((f, g), h);
            }
        }
    }
    let tensor_obj = (0..n).map(|a| (0..n).map(|b| tensor(a, b)).collect()).collect();
    FinMonoidalCategory {
        name: name.into(),
        cat: FinCategory {
            objects,
            morphisms,
            identity,
            compose,
        },
        tensor_obj,
        tensor_mor,
        unit,
    }
}

/// `{0, 1, 2}` ordered by `≤`, with truncated addition.
pub fn chain3() -> FinMonoidalCategory {
    thin("chain3", 3, |a, b| a <= b, |a, b| (a + b).min(2), 0)
}

/// `{0, …, 4}` with an arrow `a -> b` iff `a ≥ b`, and truncated addition.
pub fn ceil4() -> FinMonoidalCategory {
    thin("ceil4", 5, |a, b| a >= b, |a, b| (a + b).min(4), 0)
}

/// Componentwise product of two models.
pub fn product(a: &FinMonoidalCategory, b: &FinMonoidalCategory) -> FinMonoidalCategory {
    let (ca, cb) = (&a.cat, &b.cat);
    let nb = cb.objects.len();
    let mb = cb.morphisms.len();
    let oid = |x: usize, y: usize| x * nb + y;
    let mid = |f: usize, g: usize| f * mb + g;
    let mut objects = Vec::new();
    for x in &ca.objects {
        for y in &cb.objects {
            objects.push(format!("{x}+{y}"));
        }
    }
    let mut morphisms = Vec::new();
    for f in &ca.morphisms {
        for g in &cb.morphisms {
            morphisms.push(Morphism {
                name: format!("{}+{}", f.name, g.name),
                src: oid(f.src, g.src),
                tgt: oid(f.tgt, g.tgt),
            });
        }
    }
    let mut identity = Vec::new();
    for x in 0..ca.objects.len() {
        for y in 0..nb {
            identity.push(mid(ca.id(x), cb.id(y)));
        }
    }
    let mut compose = BTreeMap::new();
    for (&(f, f2), &h) in &ca.compose {
        for (&(g, g2), &k) in &cb.compose {
            compose.insert((mid(f, g), mid(f2, g2)), mid(h, k));
        }
    }
    let mut tensor_mor = BTreeMap::new();
    for (&(f, f2), &h) in &a.tensor_mor {
        for (&(g, g2), &k) in &b.tensor_mor {
            tensor_mor.insert((mid(f, g), mid(f2, g2)), mid(h, k));
        }
    }
    let n = objects.len();
    let mut tensor_obj = vec![vec![0; n]; n];
    for x in 0..ca.objects.len() {
        for y in 0..nb {
            for x2 in 0..ca.objects.len() {
                for y2 in 0..nb {
                    tensor_obj[oid(x, y)][oid(x2, y2)] = oid(a.ot(x, x2), b.ot(y, y2));
                }
            }
        }
    }
    FinMonoidalCategory {
        name: format!("{}x{}", a.name, b.name),
        cat: FinCategory {
            objects,
            morphisms,
            identity,
            compose,
        },
        tensor_obj,
        tensor_mor,
        unit: oid(a.unit, b.unit),
    }
}

/// Built-in models by name.
pub fn builtin(name: &str) -> Option<FinMonoidalCategory> {
    match name {
        "z2" => Some(z2()),
        "z3" => Some(cyclic(3)),
        "chain3" => Some(chain3()),
        "ceil4" => Some(ceil4()),
        "unit" => Some(FinMonoidalCategory::unit_category()),
        _ => None,
    }
}

pub const BUILTIN_MODELS: [&str; 5] = ["z2", "z3", "chain3", "ceil4", "unit"];

impl FinMonoidalCategory {
    /// Same category with `a ⊗ b` read as `b ⊗ a`.
    pub fn reversed(&self) -> Self {
        let n = self.cat.objects.len();
        FinMonoidalCategory {
            name: format!("{}.rev", self.name),
            cat: self.cat.clone(),
            tensor_obj: (0..n).map(|a| (0..n).map(|b| self.ot(b, a)).collect()).collect(),
            tensor_mor: self.tensor_mor.iter().map(|(&(f, g), &h)| ((g, f), h)).collect(),
            unit: self.unit,
        }
    }
}

/// ℤ/k as a discrete monoidal category: objects `0 .. k-1`, identities
/// only, tensor by addition.
pub fn discrete_cyclic(k: usize) -> FinMonoidalCategory {
    thin(&format!("z{k}d"), k, |a, b| a == b, |a, b| (a + b) % k, 0)
}
