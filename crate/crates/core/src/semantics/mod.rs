//! Evaluation of diagrams in the finite backend.

mod collage;
mod comb;
mod functor_box;
mod internal;
mod search;
mod soundness;

use std::collections::BTreeMap;

use crate::diagram::{DiagramError, SlicedDiagram};
use crate::fincat::{builtin, ceil_half, identity_functor, FinLaxMonoidalFunctor, FinMonoidalCategory, ModelError};
use crate::presentations::TypeError;
use crate::sig::{Document, Edge, InterpretationDecl, Signature, Theory};

pub use collage::eval_collage;
pub use comb::{comb_eval, comb_theory, optic_class_check, CombInstance, CombResult, COMB_SOURCE};
pub use functor_box::eval_functor_box;
pub use internal::{eval_internal, InternalBlock, InternalValue, SourceItem, TargetItem};
pub use search::search_interpretations;
pub use soundness::{model_witness, soundness_check, ModelVerdict, SoundnessError, SoundnessReport};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("no interpretation for `{0}`")]
    Missing(String),
    #[error("unknown model `{0}`")]
    UnknownModel(String),
    #[error("unknown functor `{0}`")]
    UnknownFunctor(String),
    #[error("unknown theory `{0}`")]
    UnknownTheory(String),
    #[error("`{value}` is not {what} of model `{model}`")]
    UnknownEntry {
        value: String,
        what: &'static str,
        model: String,
    },
    #[error("interpretation of `{name}` does not match its boundary: {detail}")]
    Boundary { name: String, detail: String },
    #[error("{0} theories have no semantics here")]
    Kind(&'static str),
    #[error("undefined composite in model `{0}`")]
    Composition(String),
    #[error("ill-formed box nesting in {0}")]
    BoxNesting(String),
    #[error("unsupported internal configuration: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Type(#[from] TypeError),
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// Where a generator or object of a theory is interpreted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// The model itself, or the codomain of the functor.
    Outer,
    /// The domain of the lax functor of a functor-box theory.
    Inner,
}

/// A theory's objects and generators sent to a finite model. Functor-box
/// theories also carry a lax functor whose codomain is `model`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interpretation {
    pub name: String,
    pub model: FinMonoidalCategory,
    pub functor: Option<FinLaxMonoidalFunctor>,
    pub objects: BTreeMap<String, usize>,
    pub morphisms: BTreeMap<String, usize>,
}

pub fn resolve_model(doc: &Document, name: &str) -> Result<FinMonoidalCategory, EvalError> {
    if let Some(m) = doc.model(name) {
        return Ok(FinMonoidalCategory::from_decl(m)?);
    }
    builtin(name).ok_or_else(|| EvalError::UnknownModel(name.to_string()))
}

/// `id` on any model, or `ceil_half` on `ceil4`.
pub fn builtin_functor(name: &str, model: &FinMonoidalCategory) -> Result<FinLaxMonoidalFunctor, EvalError> {
    let f = match name {
        "id" => identity_functor(model),
        "ceil_half" => ceil_half(),
        _ => return Err(EvalError::UnknownFunctor(name.to_string())),
    };
    if &f.target != model {
        return Err(EvalError::Model(ModelError::Mismatch(format!(
            "functor `{name}` does not land in `{}`",
            model.name
        ))));
    }
    Ok(f)
}

fn is_object(sig: &Signature, name: &str) -> bool {
    match sig {
        Signature::Monoidal(p) | Signature::Internal(p) => p.objects.iter().any(|o| o == name),
        Signature::Two(g) => g.one(name).is_some(),
        Signature::Bimodular(g) => g.is_left(name) || g.is_right(name) || g.is_center(name),
        Signature::FunctorBox(s) => {
            s.plain_objects.iter().any(|o| o == name) || s.box_objects.iter().any(|o| o == name)
        }
    }
}

fn side_of(sig: &Signature, name: &str) -> Side {
    match sig {
        Signature::FunctorBox(s)
            if s.box_objects.iter().any(|o| o == name) || s.box_edges.iter().any(|e| e.name == name) =>
        {
            Side::Inner
        }
        _ => Side::Outer,
    }
}

impl Interpretation {
    pub fn new(name: &str, model: FinMonoidalCategory, functor: Option<FinLaxMonoidalFunctor>) -> Self {
        Interpretation {
            name: name.to_string(),
            model,
            functor,
            objects: BTreeMap::new(),
            morphisms: BTreeMap::new(),
        }
    }

    pub fn from_decl(doc: &Document, decl: &InterpretationDecl) -> Result<Self, EvalError> {
        let theory = doc
            .theory(&decl.theory)
            .ok_or_else(|| EvalError::UnknownTheory(decl.theory.clone()))?;
        let model = resolve_model(doc, &decl.model)?;
        let functor = match &decl.functor {
            Some(f) => Some(builtin_functor(f, &model)?),
            None => None,
        };
        let mut i = Interpretation::new(&decl.name, model, functor);
        for (k, v) in &decl.assignments {
            i.assign(&theory.signature, k, v)?;
        }
        Ok(i)
    }

    /// The category a name of `sig` is interpreted in.
    pub fn category(&self, sig: &Signature, name: &str) -> &FinMonoidalCategory {
        match (side_of(sig, name), &self.functor) {
            (Side::Inner, Some(f)) => &f.source,
            _ => &self.model,
        }
    }

    pub fn inner(&self) -> &FinMonoidalCategory {
        self.functor.as_ref().map_or(&self.model, |f| &f.source)
    }

    /// Sends `key` to the object or morphism of the model named `value`.
    pub fn assign(&mut self, sig: &Signature, key: &str, value: &str) -> Result<(), EvalError> {
        let cat = self.category(sig, key);
        let unknown = |what| EvalError::UnknownEntry {
            value: value.to_string(),
            what,
            model: cat.name.clone(),
        };
        if is_object(sig, key) {
            let o = cat.cat.object(value).ok_or_else(|| unknown("an object"))?;
            self.objects.insert(key.to_string(), o);
        } else {
            let m = cat.cat.morphism(value).ok_or_else(|| unknown("a morphism"))?;
            self.morphisms.insert(key.to_string(), m);
        }
        Ok(())
    }

    pub fn obj(&self, name: &str) -> Result<usize, EvalError> {
        self.objects
            .get(name)
            .copied()
            .ok_or_else(|| EvalError::Missing(name.to_string()))
    }

    pub fn mor(&self, name: &str) -> Result<usize, EvalError> {
        self.morphisms
            .get(name)
            .copied()
            .ok_or_else(|| EvalError::Missing(name.to_string()))
    }

    /// Tensor of the interpretations of `wires` in `v`.
    pub fn word(&self, v: &FinMonoidalCategory, wires: &[String]) -> Result<usize, EvalError> {
        let mut acc = v.unit;
        for w in wires {
            acc = v.ot(acc, self.obj(w)?);
        }
        Ok(acc)
    }

    /// Every object and generator of `t` without an entry.
    pub fn missing(&self, t: &Theory) -> Vec<String> {
        let (objects, edges) = names_of(&t.signature);
        let mut out: Vec<String> = objects
            .into_iter()
            .filter(|o| !self.objects.contains_key(o))
            .collect();
        out.extend(
            edges
                .into_iter()
                .map(|e| e.name.clone())
                .filter(|e| !self.morphisms.contains_key(e)),
        );
        out
    }

    /// Generators whose interpretation has the wrong source or target.
    /// Entries with missing data are skipped.
    pub fn check_boundaries(&self, t: &Theory) -> Vec<EvalError> {
        let sig = &t.signature;
        let (_, edges) = names_of(sig);
        let mut out = Vec::new();
        for e in edges {
            let Ok(m) = self.mor(&e.name) else { continue };
            let Ok((s, tg)) = self.expected_boundary(sig, e) else { continue };
            let cat = self.category(sig, &e.name);
            let (ms, mt) = (cat.cat.src(m), cat.cat.tgt(m));
            if (ms, mt) != (s, tg) {
                out.push(EvalError::Boundary {
                    name: e.name.clone(),
                    detail: format!(
                        "{} is {} -> {}, expected {} -> {}",
                        cat.cat.name(m),
                        cat.cat.objects[ms],
                        cat.cat.objects[mt],
                        cat.cat.objects[s],
                        cat.cat.objects[tg]
                    ),
                });
            }
        }
        out
    }

    fn expected_boundary(&self, sig: &Signature, e: &Edge) -> Result<(usize, usize), EvalError> {
        if let (Signature::FunctorBox(s), Some(f)) = (sig, &self.functor) {
            let (a, x) = (&self.model, &f.source);
            if s.in_box_edges.iter().any(|x| x.name == e.name) {
                return Ok((self.word(a, &e.domain)?, f.obj(self.word(x, &e.codomain)?)));
            }
            if s.out_box_edges.iter().any(|x| x.name == e.name) {
                return Ok((f.obj(self.word(x, &e.domain)?), self.word(a, &e.codomain)?));
            }
        }
        let cat = self.category(sig, &e.name);
        Ok((self.word(cat, &e.domain)?, self.word(cat, &e.codomain)?))
    }

    pub fn mor_name(&self, f: usize) -> &str {
        self.model.cat.name(f)
    }
}

fn names_of(sig: &Signature) -> (Vec<String>, Vec<&Edge>) {
    match sig {
        Signature::Monoidal(p) | Signature::Internal(p) => (p.objects.clone(), p.edges.iter().collect()),
        Signature::Two(_) => (Vec::new(), Vec::new()),
        Signature::Bimodular(g) => {
            let mut objs = g.left_objects.clone();
            objs.extend(g.center_objects.iter().cloned());
            objs.extend(g.right_objects.iter().cloned());
            let edges = g
                .left_edges
                .iter()
                .chain(&g.central_edges)
                .chain(&g.right_edges)
                .collect();
            (objs, edges)
        }
        Signature::FunctorBox(s) => {
            let mut objs = s.plain_objects.clone();
            objs.extend(s.box_objects.iter().cloned());
            let edges = s
                .plain_edges
                .iter()
                .chain(&s.box_edges)
                .chain(&s.in_box_edges)
                .chain(&s.out_box_edges)
                .collect();
            (objs, edges)
        }
    }
}

pub(crate) fn comp(v: &FinMonoidalCategory, f: usize, g: usize) -> Result<usize, EvalError> {
    v.comp(f, g).ok_or_else(|| EvalError::Composition(v.name.clone()))
}

pub(crate) fn whisker(v: &FinMonoidalCategory, a: usize, f: usize, b: usize) -> Result<usize, EvalError> {
    v.whisker(a, f, b)
        .ok_or_else(|| EvalError::Composition(v.name.clone()))
}

/// Folds the layers of a diagram over a one-zero-cell graph: each layer is
/// `id ⊗ i(gen) ⊗ id`, composed in order.
pub fn eval_monoidal(d: &SlicedDiagram, i: &Interpretation) -> Result<usize, EvalError> {
    let v = &i.model;
    let mut acc = v.id(i.word(v, &d.domain.wires)?);
    for layer in &d.layers {
        let step = whisker(
            v,
            i.word(v, &layer.left)?,
            i.mor(&layer.gen)?,
            i.word(v, &layer.right)?,
        )?;
        acc = comp(v, acc, step)?;
    }
    Ok(acc)
}

/// Result of evaluating a diagram of some theory.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Morphism(usize),
    Internal(InternalValue),
}

impl Value {
    pub fn describe(&self, i: &Interpretation) -> String {
        match self {
            Value::Morphism(f) => {
                let c = &i.model.cat;
                format!(
                    "{} : {} -> {}",
                    c.name(*f),
                    c.objects[c.src(*f)],
                    c.objects[c.tgt(*f)]
                )
            }
            Value::Internal(x) => x.describe(&i.model),
        }
    }

    pub fn to_json(&self, i: &Interpretation) -> serde_json::Value {
        match self {
            Value::Morphism(f) => {
                let c = &i.model.cat;
                serde_json::json!({
                    "morphism": c.name(*f),
                    "source": c.objects[c.src(*f)],
                    "target": c.objects[c.tgt(*f)],
                })
            }
            Value::Internal(x) => x.to_json(&i.model),
        }
    }
}

/// Evaluates `d` by the evaluator matching the kind of `t`.
pub fn evaluate(t: &Theory, i: &Interpretation, d: &SlicedDiagram) -> Result<Value, EvalError> {
    match &t.signature {
        Signature::Monoidal(_) => eval_monoidal(d, i).map(Value::Morphism),
        Signature::Bimodular(g) => eval_collage(d, g, i).map(Value::Morphism),
        Signature::FunctorBox(s) => eval_functor_box(d, s, i).map(Value::Morphism),
        Signature::Internal(p) => eval_internal(d, p, i).map(Value::Internal),
        Signature::Two(_) => Err(EvalError::Kind("two")),
    }
}

/// Resolves every interpretation of `t` declared in `doc`.
pub fn interpretations_of(doc: &Document, t: &Theory) -> Result<Vec<Interpretation>, EvalError> {
    doc.interpretations
        .iter()
        .filter(|d| d.theory == t.name)
        .map(|d| Interpretation::from_decl(doc, d))
        .collect()
}

#[cfg(test)]
mod tests;
