use serde::Serialize;

use super::category::FinCategory;
use super::unionfind::{closure_brute, UnionFind};
use super::{Law, LawDiagnostic, ModelError};

/// A profunctor `left^op × right -> Set` with finite value sets. Elements of
/// `P(a, b)` are `0 .. sets[a][b]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinProfunctor {
    pub left: FinCategory,
    pub right: FinCategory,
    pub sets: Vec<Vec<usize>>,
    /// `act_l[f][b][i]` is `f · i` for `f: a' -> a` and `i ∈ P(a, b)`.
    pub act_l: Vec<Vec<Vec<usize>>>,
    /// `act_r[g][a][i]` is `i · g` for `g: b -> b'` and `i ∈ P(a, b)`.
    pub act_r: Vec<Vec<Vec<usize>>>,
}

impl FinProfunctor {
    pub fn size(&self, a: usize, b: usize) -> usize {
        self.sets[a][b]
    }

    pub fn lmul(&self, f: usize, b: usize, i: usize) -> usize {
        self.act_l[f][b][i]
    }

    pub fn rmul(&self, a: usize, i: usize, g: usize) -> usize {
        self.act_r[g][a][i]
    }

    /// The hom profunctor of `c`.
    pub fn hom(c: &FinCategory) -> Self {
        let n = c.objects.len();
        let homs: Vec<Vec<Vec<usize>>> = (0..n).map(|a| (0..n).map(|b| c.hom(a, b)).collect()).collect();
        let pos = |a: usize, b: usize, h: usize| homs[a][b].iter().position(|&x| x == h).unwrap();
        let act_l = (0..c.morphisms.len())
            .map(|f| {
                (0..n)
                    .map(|b| {
                        homs[c.tgt(f)][b]
                            .iter()
                            .map(|&h| pos(c.src(f), b, c.comp(f, h).unwrap()))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let act_r = (0..c.morphisms.len())
            .map(|g| {
                (0..n)
                    .map(|a| {
                        homs[a][c.src(g)]
                            .iter()
                            .map(|&h| pos(a, c.tgt(g), c.comp(h, g).unwrap()))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        FinProfunctor {
            left: c.clone(),
            right: c.clone(),
            sets: (0..n).map(|a| (0..n).map(|b| homs[a][b].len()).collect()).collect(),
            act_l,
            act_r,
        }
    }

    /// Shape of the tables, unit, functoriality and that the two actions commute.
    pub fn check(&self) -> Vec<LawDiagnostic> {
        let (l, r) = (&self.left, &self.right);
        let mut out = Vec::new();
        let (nl, nr) = (l.objects.len(), r.objects.len());
        let shape_ok = self.sets.len() == nl
            && self.sets.iter().all(|row| row.len() == nr)
            && self.act_l.len() == l.morphisms.len()
            && self.act_r.len() == r.morphisms.len()
            && (0..l.morphisms.len()).all(|f| {
                (0..nr).all(|b| {
                    self.act_l[f][b].len() == self.size(l.tgt(f), b)
                        && self.act_l[f][b].iter().all(|&j| j < self.size(l.src(f), b))
                })
            })
            && (0..r.morphisms.len()).all(|g| {
                (0..nl).all(|a| {
                    self.act_r[g][a].len() == self.size(a, r.src(g))
                        && self.act_r[g][a].iter().all(|&j| j < self.size(a, r.tgt(g)))
                })
            });
        if !shape_ok {
            out.push(LawDiagnostic::new(Law::Typing, "action tables out of shape".into()));
            return out;
        }
        for a in 0..nl {
            for b in 0..nr {
                for i in 0..self.size(a, b) {
                    if self.lmul(l.id(a), b, i) != i || self.rmul(a, i, r.id(b)) != i {
                        out.push(LawDiagnostic::new(Law::Unit, format!("element {i} of P({a}, {b})")));
                    }
                    for f in l.hom_to(a) {
                        for g in r.hom_from(b) {
                            let x = self.rmul(l.src(f), self.lmul(f, b, i), g);
                            let y = self.lmul(f, r.tgt(g), self.rmul(a, i, g));
                            if x != y {
                                out.push(LawDiagnostic::new(
                                    Law::Compatibility,
                                    format!("{} · {i} · {} in P({a}, {b})", l.name(f), r.name(g)),
                                ));
                            }
                        }
                        for f2 in l.hom_to(l.src(f)) {
                            let x = self.lmul(f2, b, self.lmul(f, b, i));
                            let y = self.lmul(l.comp(f2, f).unwrap(), b, i);
                            if x != y {
                                out.push(LawDiagnostic::new(
                                    Law::Functoriality,
                                    format!("{} · {} · {i}", l.name(f2), l.name(f)),
                                ));
                            }
                        }
                    }
                    for g in r.hom_from(b) {
                        for g2 in r.hom_from(r.tgt(g)) {
                            let x = self.rmul(a, self.rmul(a, i, g), g2);
                            let y = self.rmul(a, i, r.comp(g, g2).unwrap());
                            if x != y {
                                out.push(LawDiagnostic::new(
                                    Law::Functoriality,
                                    format!("{i} · {} · {}", r.name(g), r.name(g2)),
                                ));
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

/// A partition of `0..n` into classes, each listed in increasing order and
/// the classes ordered by their least element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Partition {
    pub class_of: Vec<usize>,
    pub classes: Vec<Vec<usize>>,
}

impl Partition {
    fn from_labels(labels: &[usize]) -> Self {
        let mut class_of = vec![0; labels.len()];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut index = vec![usize::MAX; labels.len()];
        for (x, &l) in labels.iter().enumerate() {
            if index[l] == usize::MAX {
                index[l] = classes.len();
                classes.push(Vec::new());
            }
            class_of[x] = index[l];
            classes[index[l]].push(x);
        }
        Partition { class_of, classes }
    }

    pub fn by_union_find(n: usize, pairs: &[(usize, usize)]) -> Self {
        let mut uf = UnionFind::new(n);
        for &(a, b) in pairs {
            uf.union(a, b);
        }
        Self::from_labels(&uf.least_labels())
    }

    /// Tests every ordered pair against `related` and closes the result.
    pub fn by_brute_force(n: usize, related: impl Fn(usize, usize) -> bool) -> Self {
        let mut pairs = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if related(a, b) {
                    pairs.push((a, b));
                }
            }
        }
        Self::from_labels(&closure_brute(n, &pairs))
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Least member of a class.
    pub fn representative(&self, class: usize) -> usize {
        self.classes[class][0]
    }
}

/// Coend `∫^M P(M, M)`: the diagonal elements `(M, i)` and their classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoendResult {
    pub elements: Vec<(usize, usize)>,
    pub partition: Partition,
    /// Generating pairs `(m · x, x · m)` as element indices.
    pub witnesses: Vec<(usize, usize)>,
}

impl CoendResult {
    pub fn class_count(&self) -> usize {
        self.partition.len()
    }

    pub fn class_of(&self, obj: usize, i: usize) -> Option<usize> {
        let e = self.elements.iter().position(|&x| x == (obj, i))?;
        Some(self.partition.class_of[e])
    }

    pub fn representative(&self, class: usize) -> (usize, usize) {
        self.elements[self.partition.representative(class)]
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data")
    }
}

fn diagonal(p: &FinProfunctor) -> Result<Vec<(usize, usize)>, ModelError> {
    if p.left != p.right {
        return Err(ModelError::Mismatch("coend needs a single category".into()));
    }
    let n = p.left.objects.len();
    Ok((0..n).flat_map(|m| (0..p.size(m, m)).map(move |i| (m, i))).collect())
}

/// Classes of the coend by union-find over the pairs `m · x ~ x · m` for
/// `m: M -> M'` and `x ∈ P(M', M)`.
pub fn coend(p: &FinProfunctor) -> Result<CoendResult, ModelError> {
    let elements = diagonal(p)?;
    let c = &p.left;
    let idx = |m: usize, i: usize| elements.iter().position(|&e| e == (m, i)).unwrap();
    let mut witnesses = Vec::new();
    for m in 0..c.morphisms.len() {
        let (a, b) = (c.src(m), c.tgt(m));
        for x in 0..p.size(b, a) {
            witnesses.push((idx(a, p.lmul(m, a, x)), idx(b, p.rmul(b, x, m))));
        }
    }
    let partition = Partition::by_union_find(elements.len(), &witnesses);
    Ok(CoendResult {
        elements,
        partition,
        witnesses,
    })
}

/// The same partition from a pairwise test: `(a, i)` is related to `(b, j)`
/// when some `m: a -> b` and `x ∈ P(b, a)` give `m · x = i` and `x · m = j`.
pub fn coend_brute(p: &FinProfunctor) -> Result<Partition, ModelError> {
    let elements = diagonal(p)?;
    let c = &p.left;
    Ok(Partition::by_brute_force(elements.len(), |e1, e2| {
        let ((a, i), (b, j)) = (elements[e1], elements[e2]);
        c.hom(a, b)
            .into_iter()
            .any(|m| (0..p.size(b, a)).any(|x| p.lmul(m, a, x) == i && p.rmul(b, x, m) == j))
    }))
}

/// `(P ⊙ Q)(X, Z) = ∫^Y P(X, Y) × Q(Y, Z)`, with the element lists and
/// partitions per component.
#[derive(Debug, Clone)]
pub struct Composite {
    pub prof: FinProfunctor,
    /// `elements[x][z]` lists triples `(y, i, j)`.
    pub elements: Vec<Vec<Vec<(usize, usize, usize)>>>,
    pub partitions: Vec<Vec<Partition>>,
}

impl Composite {
    pub fn class_of(&self, x: usize, z: usize, y: usize, i: usize, j: usize) -> usize {
        let e = self.elements[x][z]
            .iter()
            .position(|&t| t == (y, i, j))
            .expect("element of the composite");
        self.partitions[x][z].class_of[e]
    }

    pub fn representative(&self, x: usize, z: usize, class: usize) -> (usize, usize, usize) {
        self.elements[x][z][self.partitions[x][z].representative(class)]
    }
}

pub fn compose_profunctors(p: &FinProfunctor, q: &FinProfunctor) -> Result<Composite, ModelError> {
    if p.right != q.left {
        return Err(ModelError::Mismatch("middle categories differ".into()));
    }
    let mid = &p.right;
    let (nx, ny, nz) = (p.left.objects.len(), mid.objects.len(), q.right.objects.len());
    let mut elements = vec![vec![Vec::new(); nz]; nx];
    let mut partitions = Vec::with_capacity(nx);
    for (x, row) in elements.iter_mut().enumerate() {
        let mut prow = Vec::with_capacity(nz);
        for (z, elems) in row.iter_mut().enumerate() {
            for y in 0..ny {
                for i in 0..p.size(x, y) {
                    for j in 0..q.size(y, z) {
                        elems.push((y, i, j));
                    }
                }
            }
            let pos = |t: (usize, usize, usize)| elems.iter().position(|&e| e == t).unwrap();
            let mut pairs = Vec::new();
            for d in 0..mid.morphisms.len() {
                let (y, y2) = (mid.src(d), mid.tgt(d));
                for i in 0..p.size(x, y) {
                    for j in 0..q.size(y2, z) {
                        pairs.push((pos((y2, p.rmul(x, i, d), j)), pos((y, i, q.lmul(d, z, j)))));
                    }
                }
            }
            prow.push(Partition::by_union_find(elems.len(), &pairs));
        }
        partitions.push(prow);
    }
    let sets: Vec<Vec<usize>> = partitions
        .iter()
        .map(|row| row.iter().map(Partition::len).collect())
        .collect();
    let mut c = Composite {
        prof: FinProfunctor {
            left: p.left.clone(),
            right: q.right.clone(),
            sets,
            act_l: Vec::new(),
            act_r: Vec::new(),
        },
        elements,
        partitions,
    };
    let act_l = (0..p.left.morphisms.len())
        .map(|f| {
            (0..nz)
                .map(|z| {
                    let x = p.left.tgt(f);
                    (0..c.prof.size(x, z))
                        .map(|k| {
                            let (y, i, j) = c.representative(x, z, k);
                            c.class_of(p.left.src(f), z, y, p.lmul(f, y, i), j)
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let act_r = (0..q.right.morphisms.len())
        .map(|g| {
            (0..nx)
                .map(|x| {
                    let z = q.right.src(g);
                    (0..c.prof.size(x, z))
                        .map(|k| {
                            let (y, i, j) = c.representative(x, z, k);
                            c.class_of(x, q.right.tgt(g), y, i, q.rmul(y, j, g))
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    c.prof.act_l = act_l;
    c.prof.act_r = act_r;
    Ok(c)
}
