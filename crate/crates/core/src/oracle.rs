//! Brute-force oracles run against the fast paths, shared by the test suite
//! and the `oracle` subcommand.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::diagram::{eq_free, exchange_oracle, normalize, OneCellPath, SlicedDiagram};
use crate::fincat::random::{random_category, random_profunctor, rng};
use crate::fincat::{coend, coend_brute};
use crate::presentations::enumerate::extensions;
use crate::presentations::hom_enumerate;
use crate::sig::TwoGraph;

/// Outcome of one oracle run: a summary line per group and every
/// disagreement found.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OracleReport {
    pub name: String,
    pub lines: Vec<String>,
    pub mismatches: Vec<String>,
}

impl OracleReport {
    fn new(name: &str) -> Self {
        OracleReport {
            name: name.into(),
            ..Default::default()
        }
    }

    pub fn agree(&self) -> bool {
        self.mismatches.is_empty()
    }
}

impl fmt::Display for OracleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.lines {
            writeln!(f, "{l}")?;
        }
        for m in &self.mismatches {
            writeln!(f, "mismatch: {m}")?;
        }
        write!(
            f,
            "{}: {}",
            self.name,
            if self.agree() { "agreement" } else { "DISAGREEMENT" }
        )
    }
}

fn s(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|x| x.to_string()).collect()
}

/// Two zero-cells `a, b`; wires `x, y : a -> a`, `p : a -> b`,
/// `q : b -> b`; cells `f : x -> y`, `u : () -> x` and `m : y, p -> p`.
pub fn test_graph() -> TwoGraph {
    let mut g = TwoGraph {
        zero_cells: s(&["a", "b"]),
        ..Default::default()
    };
    g.add_one("x", "a", "a");
    g.add_one("y", "a", "a");
    g.add_one("p", "a", "b");
    g.add_one("q", "b", "b");
    g.add_two("f", &s(&["x"]), &s(&["y"]));
    g.add_two_at("u", &[], &s(&["x"]), "a");
    g.add_two("m", &s(&["y", "p"]), &s(&["p"]));
    g
}

/// Every composable path of at most `max_len` wires, from each zero-cell.
pub fn test_domains(g: &TwoGraph, max_len: usize) -> Vec<OneCellPath> {
    let mut out = Vec::new();
    let mut frontier: Vec<OneCellPath> = g.zero_cells.iter().map(|z| OneCellPath::empty(z)).collect();
    for _ in 0..=max_len {
        let mut next = Vec::new();
        for p in &frontier {
            let end = p.target(g);
            for w in g.one_generators.iter().filter(|w| w.source == end) {
                let mut q = p.clone();
                q.wires.push(w.name.clone());
                next.push(q);
            }
        }
        out.append(&mut frontier);
        frontier = next;
    }
    out
}

/// Every diagram on `dom` with at most `max_layers` layers, as written
/// (not up to exchange).
pub fn all_diagrams(g: &TwoGraph, dom: &OneCellPath, max_layers: usize) -> Vec<SlicedDiagram> {
    let mut all = vec![SlicedDiagram::identity(dom.clone())];
    let mut frontier = all.clone();
    for _ in 0..max_layers {
        let mut next = Vec::new();
        for d in &frontier {
            let cod = d.codomain(g).expect("extensions stay well-typed");
            next.extend(extensions(g, d, &cod));
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all
}

/// Checks that equality up to exchange (by normal forms) coincides with
/// reachability by exchange moves, for all diagrams with at most
/// `max_layers` layers on the test domains.
pub fn exchange_suite(max_layers: usize) -> OracleReport {
    let g = test_graph();
    let mut r = OracleReport::new("exchange-bfs");
    for dom in test_domains(&g, 2) {
        let diagrams = all_diagrams(&g, &dom, max_layers);
        let mut classes: BTreeMap<SlicedDiagram, BTreeSet<SlicedDiagram>> = BTreeMap::new();
        for d in &diagrams {
            classes.entry(normalize(&g, d)).or_default().insert(d.clone());
        }
        for (nf, class) in &classes {
            let d = class.iter().next().expect("non-empty class");
            let reach = exchange_oracle(&g, d, d.len() * d.len());
            if &reach != class {
                r.mismatches.push(format!(
                    "on {dom}: class of {} has {} diagrams, {} reachable",
                    nf.to_json(),
                    class.len(),
                    reach.len()
                ));
            }
            if let Some(e) = reach.iter().find(|e| !eq_free(&g, d, e)) {
                r.mismatches.push(format!("{} reaches {} yet differs", d.to_json(), e.to_json()));
            }
        }
        r.lines.push(format!(
            "{dom}: {} diagrams, {} classes",
            diagrams.len(),
            classes.len()
        ));
    }
    r
}

/// Compares the hom-set enumeration with the classes of all written
/// diagrams, per domain and codomain.
pub fn hom_count_suite(max_layers: usize) -> OracleReport {
    let g = test_graph();
    let mut r = OracleReport::new("hom-count");
    for dom in test_domains(&g, 2) {
        let mut brute: BTreeMap<OneCellPath, BTreeSet<SlicedDiagram>> = BTreeMap::new();
        for d in all_diagrams(&g, &dom, max_layers) {
            let cod = d.codomain(&g).expect("well-typed");
            brute.entry(cod).or_default().insert(normalize(&g, &d));
        }
        for (cod, classes) in &brute {
            let fast = match hom_enumerate(&g, &[], &dom, cod, max_layers) {
                Ok(e) => e.diagrams.len(),
                Err(e) => {
                    r.mismatches.push(format!("{dom} -> {cod}: {e}"));
                    continue;
                }
            };
            if fast != classes.len() {
                r.mismatches.push(format!("{dom} -> {cod}: {fast} enumerated, {} by brute force", classes.len()));
            }
            r.lines.push(format!("{dom} -> {cod}: {fast}"));
        }
    }
    r
}

/// Coend classes by union-find against the closure of the generating
/// relation, on `count` random profunctors over categories with at most 3
/// objects and 20 morphisms.
pub fn coend_suite(seed: u64, count: usize) -> OracleReport {
    let mut rand = rng(seed);
    let mut r = OracleReport::new("coend-closure");
    for k in 0..count {
        let c = random_category(&mut rand, 3, 20);
        let p = random_profunctor(&mut rand, &c);
        match (coend(&p), coend_brute(&p)) {
            (Ok(fast), Ok(slow)) => {
                if fast.partition != slow {
                    r.mismatches.push(format!(
                        "instance {k}: {} classes by union-find, {} by closure",
                        fast.partition.len(),
                        slow.len()
                    ));
                }
                r.lines.push(format!(
                    "instance {k}: {} objects, {} morphisms, {} elements, {} classes",
                    c.objects.len(),
                    c.morphisms.len(),
                    fast.elements.len(),
                    fast.partition.len()
                ));
            }
            (Err(e), _) | (_, Err(e)) => r.mismatches.push(format!("instance {k}: {e}")),
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_agree() {
        assert!(exchange_suite(3).agree());
        assert!(hom_count_suite(2).agree());
        let c = coend_suite(1, 10);
        assert!(c.agree(), "{c}");
        assert_eq!(c.to_string(), coend_suite(1, 10).to_string());
    }

    #[test]
    fn domains_are_composable() {
        let g = test_graph();
        let ds = test_domains(&g, 2);
        assert!(ds.iter().all(|d| d.check(&g).is_ok()));
        assert!(ds.contains(&OneCellPath::new("a", &["p", "q"])));
        assert_eq!(ds.len(), 14);
    }
}
