use super::{AdjointPair, TUBE_INSIDE, TUBE_OUTSIDE};
use crate::rewrite::{kit_2adjunction, kit_cell_adjunction, RewriteRule};
use crate::sig::reserved::{closing, opening, TUBE_CELLS, TUBE_LEFT, TUBE_RIGHT};
use crate::sig::{Polygraph, TwoGraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InternalPresentation {
    pub graph: TwoGraph,
    /// `L ⊣ R` witnessed by `n1, e1`, then `R ⊣ L` witnessed by `n2, e2`.
    pub tube_pairs: [AdjointPair; 2],
    /// Per object: the object, its closing cell and its opening cell.
    pub tubes: Vec<(String, String, String)>,
    pub rules: Vec<RewriteRule>,
}

impl InternalPresentation {
    pub fn rule(&self, name: &str) -> Option<&RewriteRule> {
        self.rules.iter().find(|r| r.name == name)
    }
}

pub fn syn_internal(p: &Polygraph) -> InternalPresentation {
    let (i, gz) = (TUBE_OUTSIDE, TUBE_INSIDE);
    let mut g = TwoGraph {
        zero_cells: vec![i.into(), gz.into()],
        ..Default::default()
    };
    for o in &p.objects {
        g.add_one(o, gz, gz);
    }
    g.add_one(TUBE_LEFT, i, gz);
    g.add_one(TUBE_RIGHT, gz, i);
    let (l, r) = (TUBE_LEFT.to_string(), TUBE_RIGHT.to_string());
    let [n1, e1, n2, e2] = TUBE_CELLS;
    g.add_two_at(n1, &[], &[l.clone(), r.clone()], i);
    g.add_two_at(e1, &[r.clone(), l.clone()], &[], gz);
    g.add_two_at(n2, &[], &[r.clone(), l.clone()], gz);
    g.add_two_at(e2, &[l.clone(), r.clone()], &[], i);
    let mut tubes = Vec::new();
    for o in &p.objects {
        let around = vec![l.clone(), o.clone(), r.clone()];
        let (up, down) = (closing(o), opening(o));
        g.add_two_at(&up, &around, &[], i);
        g.add_two_at(&down, &[], &around, i);
        tubes.push((o.clone(), up, down));
    }
    for e in &p.edges {
        g.add_two_at(&e.name, &e.domain, &e.codomain, gz);
    }
    let first = AdjointPair {
        up: l.clone(),
        down: r.clone(),
        unit: n1.into(),
        counit: e1.into(),
    };
    let second = AdjointPair {
        up: r,
        down: l,
        unit: n2.into(),
        counit: e2.into(),
    };
    let mut rules = Vec::new();
    let built = (|| {
        rules.extend(kit_2adjunction(&g, &first, ["alpha1", "beta1"])?);
        rules.extend(kit_2adjunction(&g, &second, ["alpha2", "beta2"])?);
        for (o, up, down) in &tubes {
            rules.extend(kit_cell_adjunction(
                &g,
                up,
                down,
                [&format!("c.{o}"), &format!("i.{o}")],
            )?);
        }
        rules.extend(kit_cell_adjunction(&g, n1, e2, ["ui", "vi"])?);
        rules.extend(kit_cell_adjunction(&g, e1, n2, ["vj", "uj"])?);
        Ok::<_, crate::rewrite::RewriteError>(())
    })();
    built.expect("tube cells have matching boundaries by construction");
    InternalPresentation {
        graph: g,
        tube_pairs: [first, second],
        tubes,
        rules,
    }
}
