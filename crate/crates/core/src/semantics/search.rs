use super::{evaluate, names_of, EvalError, Interpretation};
use crate::fincat::FinMonoidalCategory;
use crate::presentations::present;
use crate::sig::Theory;

/// All interpretations of `t` in `v` (no functor) that satisfy every
/// equation of `t`, in lexicographic order of their entries. At most
/// `limit` candidate assignments are examined.
pub fn search_interpretations(
    t: &Theory,
    v: &FinMonoidalCategory,
    limit: usize,
) -> Result<Vec<Interpretation>, EvalError> {
    let pres = present(t).map_err(|e| EvalError::Unsupported(e.to_string()))?;
    let sides = t
        .equations
        .equations
        .iter()
        .map(|e| Ok((pres.elaborate(t, &e.lhs)?, pres.elaborate(t, &e.rhs)?)))
        .collect::<Result<Vec<_>, EvalError>>()?;
    let (objects, edges) = names_of(&t.signature);
    let n_obj = v.cat.objects.len();
    let mut out = Vec::new();
    let mut budget = limit;
    let mut obj_choice = vec![0usize; objects.len()];
    loop {
        let mut base = Interpretation::new("search", v.clone(), None);
        for (o, &k) in objects.iter().zip(&obj_choice) {
            base.objects.insert(o.clone(), k);
        }
        // typed candidates per edge under this object assignment
        let cands: Vec<Vec<usize>> = edges
            .iter()
            .map(|e| {
                let s = base.word(v, &e.domain).expect("objects assigned");
                let tg = base.word(v, &e.codomain).expect("objects assigned");
                v.cat.hom(s, tg)
            })
            .collect();
        if cands.iter().all(|c| !c.is_empty()) {
            let mut pick = vec![0usize; edges.len()];
            loop {
                if budget == 0 {
                    return Ok(out);
                }
                budget -= 1;
                let mut i = base.clone();
                for ((e, c), &k) in edges.iter().zip(&cands).zip(&pick) {
                    i.morphisms.insert(e.name.clone(), c[k]);
                }
                let mut ok = true;
                for (l, r) in &sides {
                    if evaluate(t, &i, l)? != evaluate(t, &i, r)? {
                        ok = false;
                        break;
                    }
                }
                if ok {
                    out.push(i);
                }
                if !advance(&mut pick, |k| cands[k].len()) {
                    break;
                }
            }
        }
        if !advance(&mut obj_choice, |_| n_obj) {
            break;
        }
    }
    Ok(out)
}

/// Odometer step, last digit fastest. False once every digit wrapped.
fn advance(digits: &mut [usize], base: impl Fn(usize) -> usize) -> bool {
    for k in (0..digits.len()).rev() {
        digits[k] += 1;
        if digits[k] < base(k) {
            return true;
        }
        digits[k] = 0;
    }
    false
}
