//! Internal diagrams evaluated by chasing representatives.
//!
//! A slice of a diagram at the outside region is a row of tubes, each
//! holding a word of objects. The pointed profunctors assigned to the tube
//! cells are all built from homs of the model, so by Yoneda the point of a
//! composite is carried by a few morphisms of the model. We keep those as
//! blocks: a block is one morphism from the tensor of its sources (input
//! tubes or constants) to the tensor of its targets (live tubes or closed
//! ones). The assignment is
//!
//! - `n1 : id -> L R` is the identity of the unit into a new empty tube,
//! - `e2 : L R -> id` closes an empty tube,
//! - `A_y : id -> L A R` is the identity of `A` into a new tube,
//! - `A^y : L A R -> id` closes a tube holding `A`, keeping the constant,
//! - `n2 : id -> R L` splits a tube, keeping one block,
//! - `e1 : R L -> id` joins two adjacent tubes; if they lie in different
//!   blocks the blocks are tensored,
//! - an edge acts inside its tube by post-composition.

use serde_json::json;

use super::{comp, whisker, EvalError, Interpretation};
use crate::diagram::{OneCellPath, SlicedDiagram};
use crate::fincat::FinMonoidalCategory;
use crate::sig::reserved::{closing, opening, TUBE_CELLS, TUBE_LEFT, TUBE_RIGHT};
use crate::sig::Polygraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SourceItem {
    /// The tube at this position of the domain, with its object.
    Input(usize, usize),
    Const(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TargetItem {
    /// The tube at this position of the codomain, with its object.
    Output(usize, usize),
    Const(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InternalBlock {
    pub sources: Vec<SourceItem>,
    pub targets: Vec<TargetItem>,
    pub morphism: usize,
}

/// The point of an evaluated internal diagram, as a sorted list of blocks.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InternalValue {
    pub blocks: Vec<InternalBlock>,
}

impl InternalValue {
    /// The single morphism carried by the value, with scalar blocks
    /// tensored in. `None` if two blocks have a non-trivial boundary.
    pub fn morphism(&self, v: &FinMonoidalCategory) -> Option<usize> {
        let (scalars, rest): (Vec<&InternalBlock>, Vec<&InternalBlock>) = self
            .blocks
            .iter()
            .partition(|b| b.sources.is_empty() && b.targets.is_empty());
        let mut acc = match rest.as_slice() {
            [] => v.id(v.unit),
            [b] => b.morphism,
            _ => return None,
        };
        for s in scalars {
            acc = v.mt(acc, s.morphism)?;
        }
        Some(acc)
    }

    pub fn describe(&self, v: &FinMonoidalCategory) -> String {
        if self.blocks.is_empty() {
            return "unit point".into();
        }
        let c = &v.cat;
        let src = |s: &SourceItem| match *s {
            SourceItem::Input(k, o) => format!("in{k}:{}", c.objects[o]),
            SourceItem::Const(o) => c.objects[o].clone(),
        };
        let tgt = |t: &TargetItem| match *t {
            TargetItem::Output(k, o) => format!("out{k}:{}", c.objects[o]),
            TargetItem::Const(o) => c.objects[o].clone(),
        };
        let side = |xs: Vec<String>| if xs.is_empty() { "I".to_string() } else { xs.join(" ⊗ ") };
        self.blocks
            .iter()
            .map(|b| {
                format!(
                    "{} -> {} : {}",
                    side(b.sources.iter().map(src).collect()),
                    side(b.targets.iter().map(tgt).collect()),
                    c.name(b.morphism)
                )
            })
            .collect::<Vec<_>>()
            .join("; ")
    }

    pub fn to_json(&self, v: &FinMonoidalCategory) -> serde_json::Value {
        let c = &v.cat;
        let blocks: Vec<_> = self
            .blocks
            .iter()
            .map(|b| {
                json!({
                    "sources": b.sources.iter().map(|s| match *s {
                        SourceItem::Input(k, o) => json!({"input": k, "object": c.objects[o]}),
                        SourceItem::Const(o) => json!({"object": c.objects[o]}),
                    }).collect::<Vec<_>>(),
                    "targets": b.targets.iter().map(|t| match *t {
                        TargetItem::Output(k, o) => json!({"output": k, "object": c.objects[o]}),
                        TargetItem::Const(o) => json!({"object": c.objects[o]}),
                    }).collect::<Vec<_>>(),
                    "morphism": c.name(b.morphism),
                })
            })
            .collect();
        json!({ "blocks": blocks })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tgt {
    Live(usize),
    Closed(usize),
}

#[derive(Debug, Clone)]
struct Block {
    sources: Vec<(SourceItem, usize)>,
    targets: Vec<Tgt>,
    mor: usize,
}

#[derive(Debug, Clone)]
struct Tube {
    id: usize,
    word: Vec<String>,
    block: usize,
}

enum Loc {
    /// Between tubes, with this many tubes to the left.
    Outside(usize),
    /// Inside a tube, after this many of its wires.
    Inside(usize, usize),
}

struct State<'a> {
    i: &'a Interpretation,
    tubes: Vec<Tube>,
    blocks: Vec<Option<Block>>,
    next: usize,
}

fn locate(wires: &[String]) -> Loc {
    let (mut count, mut inside, mut local) = (0, false, 0);
    for w in wires {
        if w == TUBE_LEFT {
            count += 1;
            inside = true;
            local = 0;
        } else if w == TUBE_RIGHT {
            inside = false;
        } else {
            local += 1;
        }
    }
    if inside {
        Loc::Inside(count - 1, local)
    } else {
        Loc::Outside(count)
    }
}

fn unsupported(what: &str) -> EvalError {
    EvalError::Unsupported(what.to_string())
}

impl<'a> State<'a> {
    fn v(&self) -> &'a FinMonoidalCategory {
        &self.i.model
    }

    fn tube_obj(&self, id: usize) -> Result<usize, EvalError> {
        let t = self.tubes.iter().find(|t| t.id == id).expect("live tube");
        self.i.word(self.v(), &t.word)
    }

    fn tgt_obj(&self, t: Tgt) -> Result<usize, EvalError> {
        match t {
            Tgt::Live(id) => self.tube_obj(id),
            Tgt::Closed(o) => Ok(o),
        }
    }

    fn tensor_of(&self, ts: &[Tgt]) -> Result<usize, EvalError> {
        let v = self.v();
        let mut acc = v.unit;
        for &t in ts {
            acc = v.ot(acc, self.tgt_obj(t)?);
        }
        Ok(acc)
    }

    fn block(&self, b: usize) -> &Block {
        self.blocks[b].as_ref().expect("live block")
    }

    fn slot(&self, tube: usize) -> (usize, usize) {
        let t = &self.tubes[tube];
        let pos = self
            .block(t.block)
            .targets
            .iter()
            .position(|&x| x == Tgt::Live(t.id))
            .expect("tube in its block");
        (t.block, pos)
    }

    fn open(&mut self, at: usize, word: Vec<String>, sources: Vec<(SourceItem, usize)>, mor: usize) {
        let id = self.next;
        self.next += 1;
        self.blocks.push(Some(Block {
            sources,
            targets: vec![Tgt::Live(id)],
            mor,
        }));
        let block = self.blocks.len() - 1;
        self.tubes.insert(at, Tube { id, word, block });
    }

    fn close(&mut self, at: usize, keep: Option<usize>) {
        let (b, pos) = self.slot(at);
        let blk = self.blocks[b].as_mut().expect("live block");
        match keep {
            Some(o) => blk.targets[pos] = Tgt::Closed(o),
            None => {
                blk.targets.remove(pos);
            }
        }
        self.tubes.remove(at);
    }

    fn act(&mut self, at: usize, offset: usize, edge: &crate::sig::Edge) -> Result<(), EvalError> {
        let v = self.v();
        let (b, pos) = self.slot(at);
        let word = self.tubes[at].word.clone();
        let end = offset + edge.domain.len();
        if word.get(offset..end) != Some(&edge.domain[..]) {
            return Err(unsupported(&format!("edge `{}` does not match its tube", edge.name)));
        }
        let targets = self.block(b).targets.clone();
        let before = v.ot(self.tensor_of(&targets[..pos])?, self.i.word(v, &word[..offset])?);
        let after = v.ot(self.i.word(v, &word[end..])?, self.tensor_of(&targets[pos + 1..])?);
        let step = whisker(v, before, self.i.mor(&edge.name)?, after)?;
        let blk = self.blocks[b].as_mut().expect("live block");
        blk.mor = comp(v, blk.mor, step)?;
        let mut next = word[..offset].to_vec();
        next.extend(edge.codomain.iter().cloned());
        next.extend(word[end..].iter().cloned());
        self.tubes[at].word = next;
        Ok(())
    }

    fn split(&mut self, at: usize, offset: usize) {
        let id = self.next;
        self.next += 1;
        let (b, pos) = self.slot(at);
        let rest = self.tubes[at].word.split_off(offset);
        self.tubes.insert(
            at + 1,
            Tube {
                id,
                word: rest,
                block: b,
            },
        );
        let blk = self.blocks[b].as_mut().expect("live block");
        blk.targets.insert(pos + 1, Tgt::Live(id));
    }

    fn unit_sources(&self, b: usize) -> bool {
        self.block(b).sources.iter().all(|&(_, o)| o == self.v().unit)
    }

    fn join(&mut self, at: usize) -> Result<(), EvalError> {
        let v = self.v();
        let (b1, i) = self.slot(at);
        let (b2, j) = self.slot(at + 1);
        if b1 == b2 {
            if j != i + 1 {
                return Err(unsupported("joined tubes are not adjacent in their block"));
            }
            self.blocks[b1].as_mut().expect("live block").targets.remove(j);
        } else {
            let (x, y) = (self.block(b1).clone(), self.block(b2).clone());
            let n1 = x.targets.len();
            let mut sources = x.sources.clone();
            sources.extend(y.sources.iter().copied());
            let (mor, mut targets) = if i + 1 == n1 && j == 0 {
                let m = v
                    .mt(x.mor, y.mor)
                    .ok_or_else(|| EvalError::Composition(v.name.clone()))?;
                let mut t = x.targets.clone();
                t.extend(y.targets.iter().copied());
                (m, t)
            } else if j == 0 && self.unit_sources(b2) {
                let step = whisker(
                    v,
                    self.tensor_of(&x.targets[..=i])?,
                    y.mor,
                    self.tensor_of(&x.targets[i + 1..])?,
                )?;
                let mut t = x.targets[..=i].to_vec();
                t.extend(y.targets.iter().copied());
                t.extend(x.targets[i + 1..].iter().copied());
                (comp(v, x.mor, step)?, t)
            } else if i + 1 == n1 && self.unit_sources(b1) {
                let step = whisker(
                    v,
                    self.tensor_of(&y.targets[..j])?,
                    x.mor,
                    self.tensor_of(&y.targets[j..])?,
                )?;
                let mut t = y.targets[..j].to_vec();
                t.extend(x.targets.iter().copied());
                t.extend(y.targets[j..].iter().copied());
                (comp(v, y.mor, step)?, t)
            } else {
                return Err(unsupported("joined tubes interleave with other tubes of their blocks"));
            };
            let gone = Tgt::Live(self.tubes[at + 1].id);
            targets.retain(|&t| t != gone);
            self.blocks[b1] = Some(Block { sources, targets, mor });
            self.blocks[b2] = None;
            for t in &mut self.tubes {
                if t.block == b2 {
                    t.block = b1;
                }
            }
        }
        let rest = self.tubes.remove(at + 1).word;
        self.tubes[at].word.extend(rest);
        Ok(())
    }
}

fn tubes_of(path: &OneCellPath) -> Result<Vec<Vec<String>>, EvalError> {
    let mut out = Vec::new();
    let mut current: Option<Vec<String>> = None;
    for w in &path.wires {
        if w == TUBE_LEFT {
            current = Some(Vec::new());
        } else if w == TUBE_RIGHT {
            out.push(current.take().ok_or_else(|| unsupported("unbalanced tube"))?);
        } else {
            current
                .as_mut()
                .ok_or_else(|| unsupported("object outside a tube"))?
                .push(w.clone());
        }
    }
    if current.is_some() {
        return Err(unsupported("unbalanced tube"));
    }
    Ok(out)
}

/// Evaluates a diagram between rows of tubes to the point it determines.
pub fn eval_internal(d: &SlicedDiagram, p: &Polygraph, i: &Interpretation) -> Result<InternalValue, EvalError> {
    if d.domain.wires.first().is_some_and(|w| w != TUBE_LEFT) {
        return Err(unsupported("diagrams start and end outside the tubes"));
    }
    let v = &i.model;
    let mut st = State {
        i,
        tubes: Vec::new(),
        blocks: Vec::new(),
        next: 0,
    };
    for (k, word) in tubes_of(&d.domain)?.into_iter().enumerate() {
        let o = i.word(v, &word)?;
        let at = st.tubes.len();
        st.open(at, word, vec![(SourceItem::Input(k, o), o)], v.id(o));
    }
    let [n1, e1, n2, e2] = TUBE_CELLS;
    for layer in &d.layers {
        let g = layer.gen.as_str();
        let loc = locate(&layer.left);
        let tube = p
            .objects
            .iter()
            .find(|o| closing(o) == g || opening(o) == g);
        match (loc, g) {
            (Loc::Outside(at), _) if g == n1 => st.open(at, Vec::new(), Vec::new(), v.id(v.unit)),
            (Loc::Outside(at), _) if g == e2 => st.close(at, None),
            (Loc::Inside(at, k), _) if g == n2 => st.split(at, k),
            (Loc::Inside(at, _), _) if g == e1 => st.join(at)?,
            (Loc::Outside(at), _) if tube.is_some() => {
                let a = tube.expect("checked");
                let o = i.obj(a)?;
                if opening(a) == g {
                    st.open(at, vec![a.clone()], vec![(SourceItem::Const(o), o)], v.id(o));
                } else {
                    st.close(at, Some(o));
                }
            }
            (Loc::Inside(at, k), _) => {
                let e = p
                    .edges
                    .iter()
                    .find(|e| e.name == g)
                    .ok_or_else(|| EvalError::Missing(g.to_string()))?;
                st.act(at, k, e)?;
            }
            _ => return Err(unsupported(&format!("`{g}` outside its region"))),
        }
    }
    let position = |id: usize| st.tubes.iter().position(|t| t.id == id).expect("live tube");
    let mut blocks = Vec::new();
    for b in st.blocks.iter().flatten() {
        let targets = b
            .targets
            .iter()
            .map(|&t| {
                Ok(match t {
                    Tgt::Live(id) => TargetItem::Output(position(id), st.tube_obj(id)?),
                    Tgt::Closed(o) => TargetItem::Const(o),
                })
            })
            .collect::<Result<Vec<_>, EvalError>>()?;
        blocks.push(InternalBlock {
            sources: b.sources.iter().map(|&(s, _)| s).collect(),
            targets,
            morphism: b.mor,
        });
    }
    blocks.sort();
    Ok(InternalValue { blocks })
}
