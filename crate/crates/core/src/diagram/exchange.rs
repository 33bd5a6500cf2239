use std::collections::{BTreeSet, HashSet, VecDeque};

use super::{Layer, OneCellPath, SlicedDiagram};
use crate::sig::TwoGraph;

/// A layer reduced to what the exchange law looks at.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct Slot {
    pub offset: usize,
    pub gen: String,
    pub din: usize,
    pub dout: usize,
}

pub(crate) fn slots(g: &TwoGraph, d: &SlicedDiagram) -> Vec<Slot> {
    d.layers
        .iter()
        .map(|l| {
            let gen = g.two(&l.gen).expect("diagram checked against its graph");
            Slot {
                offset: l.left.len(),
                gen: l.gen.clone(),
                din: gen.domain.len(),
                dout: gen.codomain.len(),
            }
        })
        .collect()
}

pub(crate) fn rebuild(g: &TwoGraph, domain: &OneCellPath, slots: &[Slot]) -> SlicedDiagram {
    let mut cur = domain.wires.clone();
    let mut layers = Vec::with_capacity(slots.len());
    for s in slots {
        let gen = g.two(&s.gen).expect("known generator");
        let left = cur[..s.offset].to_vec();
        let right = cur[s.offset + s.din..].to_vec();
        let mut next = left.clone();
        next.extend(gen.codomain.iter().cloned());
        next.extend(right.iter().cloned());
        layers.push(Layer {
            left,
            gen: s.gen.clone(),
            right,
        });
        cur = next;
    }
    SlicedDiagram {
        domain: domain.clone(),
        layers,
    }
}

/// Ways to move `b` (applied after `a`) in front of `a`. Returns the new
/// pairs `(b', a')`. Two results only when `a` outputs nothing and `b`
/// consumes nothing at the same offset.
pub(crate) fn swaps(a: &Slot, b: &Slot) -> Vec<(Slot, Slot)> {
    let mut out = Vec::new();
    if b.offset + b.din <= a.offset {
        let mut a2 = a.clone();
        a2.offset = a.offset - b.din + b.dout;
        out.push((b.clone(), a2));
    }
    if b.offset >= a.offset + a.dout {
        let mut b2 = b.clone();
        b2.offset = b.offset - a.dout + a.din;
        let pair = (b2, a.clone());
        if !out.contains(&pair) {
            out.push(pair);
        }
    }
    out
}

/// All results of moving the slot at `k` to the front by adjacent swaps.
fn bubble(seq: &[Slot], k: usize) -> Vec<Vec<Slot>> {
    let mut variants = vec![seq.to_vec()];
    for j in (0..k).rev() {
        let mut next = Vec::new();
        for v in &variants {
            for (b2, a2) in swaps(&v[j], &v[j + 1]) {
                let mut w = v.clone();
                w[j] = b2;
                w[j + 1] = a2;
                if !next.contains(&w) {
                    next.push(w);
                }
            }
        }
        if next.is_empty() {
            return next;
        }
        variants = next;
    }
    variants
}

fn key(s: &Slot) -> (usize, &str) {
    (s.offset, s.gen.as_str())
}

pub(crate) fn normal_form(seq: &[Slot]) -> Vec<Slot> {
    if seq.is_empty() {
        return Vec::new();
    }
    let mut best: Option<(usize, String)> = None;
    let mut tied: Vec<Vec<Slot>> = Vec::new();
    for k in 0..seq.len() {
        for v in bubble(seq, k) {
            let kv = (v[0].offset, v[0].gen.clone());
            match &best {
                Some(b) if kv > *b => {}
                Some(b) if kv == *b => {
                    if !tied.contains(&v) {
                        tied.push(v);
                    }
                }
                _ => {
                    best = Some(kv);
                    tied = vec![v];
                }
            }
        }
    }
    let mut rests: Vec<Vec<Slot>> = Vec::new();
    for v in &tied {
        let r = v[1..].to_vec();
        if !rests.contains(&r) {
            rests.push(r);
        }
    }
    let head = tied[0][0].clone();
    let rest = rests
        .iter()
        .map(|r| normal_form(r))
        .min_by(|x, y| {
            let kx: Vec<_> = x.iter().map(key).collect();
            let ky: Vec<_> = y.iter().map(key).collect();
            kx.cmp(&ky)
        })
        .expect("at least one candidate");
    let mut out = vec![head];
    out.extend(rest);
    out
}

pub(crate) fn bfs_order(seq: &[Slot], depth: usize, cap: usize) -> Vec<Vec<Slot>> {
    bfs_tracked(seq, depth, cap).into_iter().map(|(s, _)| s).collect()
}

/// Breadth-first exchange representatives, each with the original index of
/// every layer (as first reached).
pub(crate) fn bfs_tracked(seq: &[Slot], depth: usize, cap: usize) -> Vec<(Vec<Slot>, Vec<usize>)> {
    let mut seen: HashSet<Vec<Slot>> = HashSet::new();
    let mut order = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(seq.to_vec());
    queue.push_back((seq.to_vec(), (0..seq.len()).collect::<Vec<_>>(), 0usize));
    while let Some((s, ids, dist)) = queue.pop_front() {
        if order.len() >= cap {
            break;
        }
        if dist < depth {
            for j in 0..s.len().saturating_sub(1) {
                for (b2, a2) in swaps(&s[j], &s[j + 1]) {
                    let mut w = s.clone();
                    w[j] = b2;
                    w[j + 1] = a2;
                    if seen.insert(w.clone()) {
                        let mut v = ids.clone();
                        v.swap(j, j + 1);
                        queue.push_back((w, v, dist + 1));
                    }
                }
            }
        }
        order.push((s, ids));
    }
    order
}

pub(crate) fn neighbourhood(seq: &[Slot], depth: usize) -> BTreeSet<Vec<Slot>> {
    bfs_order(seq, depth, usize::MAX).into_iter().collect()
}
