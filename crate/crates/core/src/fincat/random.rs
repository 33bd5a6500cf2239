//! Seeded random instances for the oracles.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::bimodular::{FinBimodularCategory, FinBimodularProfunctor};
use super::category::{FinCategory, Morphism};
use super::monoidal::FinMonoidalCategory;
use super::profunctor::FinProfunctor;

pub use rand::SeedableRng;
pub type Rng8 = ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A category of functions between small finite sets: random generators
/// closed under composition. At most `max_objects` objects and
/// `max_morphisms` morphisms (retries until the closure fits).
pub fn random_category(rng: &mut impl Rng, max_objects: usize, max_morphisms: usize) -> FinCategory {
    loop {
        let n = rng.gen_range(1..=max_objects);
        let sizes: Vec<usize> = (0..n).map(|_| rng.gen_range(1..=3)).collect();
        let mut funcs: Vec<(usize, usize, Vec<usize>)> = (0..n).map(|a| (a, a, (0..sizes[a]).collect())).collect();
        for _ in 0..rng.gen_range(0..=3) {
            let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
            let f: Vec<usize> = (0..sizes[a]).map(|_| rng.gen_range(0..sizes[b])).collect();
            if !funcs.contains(&(a, b, f.clone())) {
                funcs.push((a, b, f));
            }
        }
        let mut grew = true;
        while grew && funcs.len() <= max_morphisms {
            grew = false;
            let snapshot = funcs.clone();
            for (a, b, f) in &snapshot {
                for (b2, c, g) in &snapshot {
                    if b != b2 {
                        continue;
                    }
                    let h = (*a, *c, f.iter().map(|&i| g[i]).collect::<Vec<_>>());
                    if !funcs.contains(&h) {
                        funcs.push(h);
                        grew = true;
                    }
                }
            }
        }
        if funcs.len() > max_morphisms {
            continue;
        }
        let morphisms = funcs
            .iter()
            .enumerate()
            .map(|(k, (a, b, _))| Morphism {
                name: if k < n { format!("id{k}") } else { format!("f{k}") },
                src: *a,
                tgt: *b,
            })
            .collect();
        let mut compose = BTreeMap::new();
        for (i, (a, b, f)) in funcs.iter().enumerate() {
            for (j, (b2, c, g)) in funcs.iter().enumerate() {
                if b == b2 {
                    let h = (*a, *c, f.iter().map(|&x| g[x]).collect::<Vec<_>>());
                    compose.insert((i, j), funcs.iter().position(|e| *e == h).unwrap());
                }
            }
        }
        return FinCategory {
            objects: (0..n).map(|a| format!("o{a}")).collect(),
            morphisms,
            identity: (0..n).collect(),
            compose,
        };
    }
}

const MAX_DIAGONAL: usize = 96;

/// `⊔_k Hom(-, x_k) × Hom(y_k, -)` for one to three random pairs. Extra
/// summands are dropped once the diagonal would exceed `MAX_DIAGONAL`.
pub fn random_profunctor(rng: &mut impl Rng, c: &FinCategory) -> FinProfunctor {
    let n = c.objects.len();
    let diagonal = |parts: &[(usize, usize)]| -> usize {
        (0..n)
            .map(|m| parts.iter().map(|&(x, y)| c.hom(m, x).len() * c.hom(y, m).len()).sum::<usize>())
            .sum()
    };
    // keep the diagonal small enough for the pairwise oracle
    let mut parts: Vec<(usize, usize)> = Vec::new();
    for _ in 0..rng.gen_range(1..=3) {
        let p = (rng.gen_range(0..n), rng.gen_range(0..n));
        parts.push(p);
        if parts.len() > 1 && diagonal(&parts) > MAX_DIAGONAL {
            parts.pop();
        }
    }
    // elems[a][b] lists (part, u, v) with u: a -> x, v: y -> b
    let elems: Vec<Vec<Vec<(usize, usize, usize)>>> = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    let mut out = Vec::new();
                    for (p, &(x, y)) in parts.iter().enumerate() {
                        for u in c.hom(a, x) {
                            for v in c.hom(y, b) {
                                out.push((p, u, v));
                            }
                        }
                    }
                    out
                })
                .collect()
        })
        .collect();
    let pos = |a: usize, b: usize, e: (usize, usize, usize)| elems[a][b].iter().position(|&x| x == e).unwrap();
    let act_l = (0..c.morphisms.len())
        .map(|f| {
            (0..n)
                .map(|b| {
                    elems[c.tgt(f)][b]
                        .iter()
                        .map(|&(p, u, v)| pos(c.src(f), b, (p, c.comp(f, u).unwrap(), v)))
                        .collect()
                })
                .collect()
        })
        .collect();
    let act_r = (0..c.morphisms.len())
        .map(|g| {
            (0..n)
                .map(|a| {
                    elems[a][c.src(g)]
                        .iter()
                        .map(|&(p, u, v)| pos(a, c.tgt(g), (p, u, c.comp(v, g).unwrap())))
                        .collect()
                })
                .collect()
        })
        .collect();
    FinProfunctor {
        left: c.clone(),
        right: c.clone(),
        sets: elems.iter().map(|row| row.iter().map(Vec::len).collect()).collect(),
        act_l,
        act_r,
    }
}

/// `⊔_k V(X ⊗ C_k, X' ⊗ D_k)` over the regular bimodular category of a
/// commutative `V`, with strengths by tensoring. Pointed at the first
/// element over the unit, if there is one.
pub fn twisted_hom(v: &FinMonoidalCategory, parts: &[(usize, usize)]) -> FinBimodularProfunctor {
    let c = FinBimodularCategory::regular(v);
    let cat = &v.cat;
    let n = cat.objects.len();
    let elems: Vec<Vec<Vec<(usize, usize)>>> = (0..n)
        .map(|x| {
            (0..n)
                .map(|x2| {
                    parts
                        .iter()
                        .enumerate()
                        .flat_map(|(k, &(cc, dd))| cat.hom(v.ot(x, cc), v.ot(x2, dd)).into_iter().map(move |h| (k, h)))
                        .collect()
                })
                .collect()
        })
        .collect();
    let pos = |x: usize, y: usize, e: (usize, usize)| elems[x][y].iter().position(|&t| t == e).unwrap();
    let nm = cat.morphisms.len();
    let act_l = (0..nm)
        .map(|f| {
            (0..n)
                .map(|y| {
                    elems[cat.tgt(f)][y]
                        .iter()
                        .map(|&(k, h)| {
                            let fc = v.mt(f, v.id(parts[k].0)).unwrap();
                            pos(cat.src(f), y, (k, cat.comp(fc, h).unwrap()))
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let act_r = (0..nm)
        .map(|g| {
            (0..n)
                .map(|x| {
                    elems[x][cat.src(g)]
                        .iter()
                        .map(|&(k, h)| {
                            let gd = v.mt(g, v.id(parts[k].1)).unwrap();
                            pos(x, cat.tgt(g), (k, cat.comp(h, gd).unwrap()))
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let strength = |right: bool| -> Vec<Vec<Vec<Vec<usize>>>> {
        (0..n)
            .map(|m| {
                (0..n)
                    .map(|x| {
                        (0..n)
                            .map(|y| {
                                elems[x][y]
                                    .iter()
                                    .map(|&(k, h)| {
                                        let h2 = if right {
                                            v.mt(h, v.id(m)).unwrap()
                                        } else {
                                            v.mt(v.id(m), h).unwrap()
                                        };
                                        let (x2, y2) = if right {
                                            (v.ot(x, m), v.ot(y, m))
                                        } else {
                                            (v.ot(m, x), v.ot(m, y))
                                        };
                                        pos(x2, y2, (k, h2))
                                    })
                                    .collect()
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect()
    };
    let point = if elems[v.unit][v.unit].is_empty() {
        None
    } else {
        Some(0)
    };
    FinBimodularProfunctor {
        prof: FinProfunctor {
            left: cat.clone(),
            right: cat.clone(),
            sets: elems.iter().map(|row| row.iter().map(Vec::len).collect()).collect(),
            act_l,
            act_r,
        },
        t_left: strength(false),
        t_right: strength(true),
        source: c.clone(),
        target: c,
        point,
    }
}

/// A random twisted hom with one or two summands.
pub fn random_twisted(rng: &mut impl Rng, v: &FinMonoidalCategory) -> FinBimodularProfunctor {
    let n = v.cat.objects.len();
    let objs: Vec<usize> = (0..n).collect();
    let k = rng.gen_range(1..=2);
    let parts: Vec<(usize, usize)> = (0..k)
        .map(|_| (*objs.choose(rng).unwrap(), *objs.choose(rng).unwrap()))
        .collect();
    twisted_hom(v, &parts)
}
