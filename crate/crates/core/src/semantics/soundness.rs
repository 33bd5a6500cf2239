use super::{evaluate, EvalError, Interpretation, Value};
use crate::diagram::SlicedDiagram;
use crate::presentations::Presented;
use crate::rewrite::{validate_trace, SearchConfig, Step, TraceError};
use crate::sig::Theory;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelVerdict {
    pub interpretation: String,
    pub start: String,
    pub end: String,
    pub equal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SoundnessReport {
    pub end: SlicedDiagram,
    pub verdicts: Vec<ModelVerdict>,
}

impl SoundnessReport {
    pub fn holds(&self) -> bool {
        self.verdicts.iter().all(|v| v.equal)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SoundnessError {
    #[error(transparent)]
    Trace(#[from] TraceError),
    #[error("trace ends at {found}, not at the expected diagram")]
    WrongEnd { found: String },
    #[error("in `{interpretation}`: {error}")]
    Eval { interpretation: String, error: Box<EvalError> },
}

/// Replays `steps` from `d1`, checks they reach `d2` (up to exchange) and
/// compares the evaluations of both ends in every interpretation.
pub fn soundness_check(
    t: &Theory,
    pres: &Presented,
    d1: &SlicedDiagram,
    d2: &SlicedDiagram,
    steps: &[Step],
    interps: &[Interpretation],
) -> Result<SoundnessReport, SoundnessError> {
    let g = &pres.graph;
    let chain = validate_trace(g, d1, steps, &pres.rules, &SearchConfig::default())?;
    let end = chain.last().expect("non-empty").clone();
    if !crate::diagram::eq_free(g, &end, d2) {
        return Err(SoundnessError::WrongEnd {
            found: format!("{} layers", end.len()),
        });
    }
    let verdicts = std::thread::scope(|s| {
        let handles: Vec<_> = interps
            .iter()
            .map(|i| s.spawn(move || verdict(t, i, d1, d2)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("evaluation does not panic"))
            .collect::<Result<Vec<_>, _>>()
    })?;
    Ok(SoundnessReport { end, verdicts })
}

fn verdict(t: &Theory, i: &Interpretation, d1: &SlicedDiagram, d2: &SlicedDiagram) -> Result<ModelVerdict, SoundnessError> {
    let eval = |d| {
        evaluate(t, i, d).map_err(|error| SoundnessError::Eval {
            interpretation: i.name.clone(),
            error: Box::new(error),
        })
    };
    let (a, b): (Value, Value) = (eval(d1)?, eval(d2)?);
    Ok(ModelVerdict {
        interpretation: i.name.clone(),
        start: a.describe(i),
        end: b.describe(i),
        equal: a == b,
    })
}

/// Separating witness for the equality search: the first interpretation
/// evaluating the two diagrams differently.
pub fn model_witness<'a>(
    t: &'a Theory,
    interps: &'a [Interpretation],
) -> impl Fn(&SlicedDiagram, &SlicedDiagram) -> Option<String> + 'a {
    move |d1, d2| {
        interps.iter().find_map(|i| {
            let a = evaluate(t, i, d1).ok()?;
            let b = evaluate(t, i, d2).ok()?;
            (a != b).then(|| format!("`{}` gives {} and {}", i.name, a.describe(i), b.describe(i)))
        })
    }
}
