use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::parser::reserved;
use super::*;

/// The signature invariant a diagnostic reports on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Invariant {
    DuplicateName,
    ReservedName,
    UndeclaredName,
    CentralWireMultiplicity,
    CentralWireOrder,
    LeftEdgeShape,
    RightEdgeShape,
    PlainEdgeShape,
    BoxEdgeShape,
    InBoxShape,
    OutBoxShape,
    NotComposable,
    EndpointMismatch,
    EmptyBoundaryNeedsZeroCell,
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Invariant::DuplicateName => "duplicate name",
            Invariant::ReservedName => "reserved name",
            Invariant::UndeclaredName => "undeclared name",
            Invariant::CentralWireMultiplicity => "central wire multiplicity",
            Invariant::CentralWireOrder => "central wire order",
            Invariant::LeftEdgeShape => "left edge shape",
            Invariant::RightEdgeShape => "right edge shape",
            Invariant::PlainEdgeShape => "plain edge shape",
            Invariant::BoxEdgeShape => "box edge shape",
            Invariant::InBoxShape => "in-box edge shape",
            Invariant::OutBoxShape => "out-box edge shape",
            Invariant::NotComposable => "boundary not composable",
            Invariant::EndpointMismatch => "boundary endpoint mismatch",
            Invariant::EmptyBoundaryNeedsZeroCell => "empty boundary needs a zero-cell",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Diagnostic {
    pub invariant: Invariant,
    pub item: String,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: `{}`: {}", self.invariant, self.item, self.message)
    }
}

struct Sink(BTreeSet<Diagnostic>);

impl Sink {
    fn push(&mut self, invariant: Invariant, item: &str, message: impl Into<String>) {
        self.0.insert(Diagnostic {
            invariant,
            item: item.to_string(),
            message: message.into(),
        });
    }

    fn unique<'a>(&mut self, what: &str, names: impl Iterator<Item = &'a String>) {
        let mut seen = BTreeMap::<&str, usize>::new();
        for n in names {
            *seen.entry(n.as_str()).or_default() += 1;
        }
        for (n, c) in seen {
            if c > 1 {
                self.push(
                    Invariant::DuplicateName,
                    n,
                    format!("{what} declared {c} times"),
                );
            }
        }
    }

    fn declared(&mut self, item: &str, ns: &[String], ok: impl Fn(&str) -> bool) {
        for n in ns {
            if !ok(n) {
                self.push(Invariant::UndeclaredName, item, format!("`{n}` is not declared"));
            }
        }
    }
}

/// Checks every invariant of the signature. The result is sorted, so it does
/// not depend on declaration order.
pub fn validate_signature(sig: &Signature) -> Vec<Diagnostic> {
    let mut s = Sink(BTreeSet::new());
    match sig {
        Signature::Monoidal(p) | Signature::Internal(p) => monoidal(p, &mut s),
        Signature::Two(g) => two(g, &mut s),
        Signature::Bimodular(g) => bimodular(g, &mut s),
        Signature::FunctorBox(b) => functor_box(b, &mut s),
    }
    s.0.into_iter().collect()
}

fn monoidal(p: &Polygraph, s: &mut Sink) {
    s.unique("object", p.objects.iter());
    s.unique("edge", p.edges.iter().map(|e| &e.name));
    let objs: BTreeSet<&str> = p.objects.iter().map(String::as_str).collect();
    let mut reserved_names: BTreeSet<String> = [reserved::TUBE_LEFT, reserved::TUBE_RIGHT]
        .into_iter()
        .chain(reserved::TUBE_CELLS)
        .map(str::to_string)
        .collect();
    for o in &p.objects {
        reserved_names.insert(reserved::closing(o));
        reserved_names.insert(reserved::opening(o));
    }
    for n in p.objects.iter().chain(p.edges.iter().map(|e| &e.name)) {
        if reserved_names.contains(n) {
            s.push(Invariant::ReservedName, n, "name is used by the tube presentation");
        }
    }
    for e in &p.edges {
        s.declared(&e.name, &e.domain, |n| objs.contains(n));
        s.declared(&e.name, &e.codomain, |n| objs.contains(n));
    }
}

fn two(g: &TwoGraph, s: &mut Sink) {
    s.unique("zero-cell", g.zero_cells.iter());
    s.unique(
        "generator",
        g.one_generators
            .iter()
            .map(|o| &o.name)
            .chain(g.two_generators.iter().map(|t| &t.name)),
    );
    for o in &g.one_generators {
        for z in [&o.source, &o.target] {
            if !g.has_zero_cell(z) {
                s.push(Invariant::UndeclaredName, &o.name, format!("`{z}` is not a zero-cell"));
            }
        }
    }
    for t in &g.two_generators {
        let known = |n: &str| g.one(n).is_some();
        s.declared(&t.name, &t.domain, known);
        s.declared(&t.name, &t.codomain, known);
        let d = g.path_endpoints(&t.domain);
        let c = g.path_endpoints(&t.codomain);
        match (d, c) {
            (None, _) => s.push(Invariant::NotComposable, &t.name, "domain is not a composable path"),
            (_, None) => s.push(Invariant::NotComposable, &t.name, "codomain is not a composable path"),
            (Some(Some(a)), Some(Some(b))) if a != b => s.push(
                Invariant::EndpointMismatch,
                &t.name,
                format!("domain runs {} -> {}, codomain runs {} -> {}", a.0, a.1, b.0, b.1),
            ),
            (Some(Some((x, y))), Some(None)) | (Some(None), Some(Some((x, y)))) if x != y => {
                s.push(
                    Invariant::EndpointMismatch,
                    &t.name,
                    format!("an empty side needs a loop, found {x} -> {y}"),
                )
            }
            (Some(None), Some(None)) => match &t.at {
                Some(z) if g.has_zero_cell(z) => {}
                Some(z) => s.push(Invariant::UndeclaredName, &t.name, format!("`{z}` is not a zero-cell")),
                None => s.push(
                    Invariant::EmptyBoundaryNeedsZeroCell,
                    &t.name,
                    "both sides are empty; pin the zero-cell with `@`",
                ),
            },
            _ => {}
        }
    }
}

fn bimodular(g: &BimodularGraph, s: &mut Sink) {
    s.unique(
        "object",
        g.left_objects
            .iter()
            .chain(&g.right_objects)
            .chain(&g.center_objects),
    );
    s.unique(
        "edge",
        g.left_edges
            .iter()
            .chain(&g.right_edges)
            .chain(&g.central_edges)
            .map(|e| &e.name),
    );
    for e in &g.left_edges {
        for o in e.domain.iter().chain(&e.codomain) {
            if !g.is_left(o) {
                s.push(Invariant::LeftEdgeShape, &e.name, format!("`{o}` is not a left object"));
            }
        }
    }
    for e in &g.right_edges {
        for o in e.domain.iter().chain(&e.codomain) {
            if !g.is_right(o) {
                s.push(Invariant::RightEdgeShape, &e.name, format!("`{o}` is not a right object"));
            }
        }
    }
    for e in &g.central_edges {
        for (side, ws) in [("domain", &e.domain), ("codomain", &e.codomain)] {
            let centers: Vec<usize> = ws
                .iter()
                .enumerate()
                .filter(|(_, w)| g.is_center(w))
                .map(|(i, _)| i)
                .collect();
            if centers.len() != 1 {
                s.push(
                    Invariant::CentralWireMultiplicity,
                    &e.name,
                    format!("{side} has {} center objects, expected exactly one", centers.len()),
                );
                continue;
            }
            let c = centers[0];
            let left_ok = ws[..c].iter().all(|w| g.is_left(w));
            let right_ok = ws[c + 1..].iter().all(|w| g.is_right(w));
            if !left_ok || !right_ok {
                s.push(
                    Invariant::CentralWireOrder,
                    &e.name,
                    format!("{side} must be left objects, one center object, then right objects"),
                );
            }
        }
    }
}

fn functor_box(b: &FunctorBoxSignature, s: &mut Sink) {
    s.unique("object", b.plain_objects.iter().chain(&b.box_objects));
    s.unique(
        "edge",
        b.plain_edges
            .iter()
            .chain(&b.box_edges)
            .chain(&b.in_box_edges)
            .chain(&b.out_box_edges)
            .map(|e| &e.name),
    );
    let reserved_names = [
        reserved::FUNCTOR_UP,
        reserved::FUNCTOR_DOWN,
        reserved::BOX_UNIT,
        reserved::BOX_COUNIT,
    ];
    let all_names = b
        .plain_objects
        .iter()
        .chain(&b.box_objects)
        .chain(b.plain_edges.iter().map(|e| &e.name))
        .chain(b.box_edges.iter().map(|e| &e.name))
        .chain(b.in_box_edges.iter().map(|e| &e.name))
        .chain(b.out_box_edges.iter().map(|e| &e.name));
    for n in all_names {
        if reserved_names.contains(&n.as_str()) {
            s.push(Invariant::ReservedName, n, "name is used by the box presentation");
        }
    }
    let plain = |o: &String| b.plain_objects.contains(o);
    let boxed = |o: &String| b.box_objects.contains(o);
    let mut shape = |es: &[Edge], inv: Invariant, dom_ok: &dyn Fn(&String) -> bool, cod_ok: &dyn Fn(&String) -> bool, what: (&str, &str)| {
        for e in es {
            if let Some(o) = e.domain.iter().find(|o| !dom_ok(o)) {
                s.push(inv, &e.name, format!("domain object `{o}` is not a {} object", what.0));
            }
            if let Some(o) = e.codomain.iter().find(|o| !cod_ok(o)) {
                s.push(inv, &e.name, format!("codomain object `{o}` is not a {} object", what.1));
            }
        }
    };
    shape(&b.plain_edges, Invariant::PlainEdgeShape, &plain, &plain, ("plain", "plain"));
    shape(&b.box_edges, Invariant::BoxEdgeShape, &boxed, &boxed, ("box", "box"));
    shape(&b.in_box_edges, Invariant::InBoxShape, &plain, &boxed, ("plain", "box"));
    shape(&b.out_box_edges, Invariant::OutBoxShape, &boxed, &plain, ("box", "plain"));
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_center_objects_in_domain() {
        let g = BimodularGraph {
            center_objects: vec!["C".into(), "D".into()],
            central_edges: vec![Edge::new("bad", &["C", "D"], &["C"])],
            ..Default::default()
        };
        let ds = validate_signature(&Signature::Bimodular(g));
        assert_eq!(ds.len(), 1);
        assert_eq!(ds[0].invariant, Invariant::CentralWireMultiplicity);
        assert_eq!(ds[0].invariant.to_string(), "central wire multiplicity");
        assert_eq!(ds[0].item, "bad");
    }

    #[test]
    fn in_box_edge_with_box_domain() {
        let s = FunctorBoxSignature {
            plain_objects: vec!["A".into()],
            box_objects: vec!["X".into()],
            in_box_edges: vec![Edge::new("u", &["X"], &["X"])],
            ..Default::default()
        };
        let ds = validate_signature(&Signature::FunctorBox(s));
        assert_eq!(ds.len(), 1);
        assert_eq!(ds[0].invariant, Invariant::InBoxShape);
    }

    #[test]
    fn right_object_left_of_center() {
        let g = BimodularGraph {
            left_objects: vec!["S".into()],
            right_objects: vec!["T".into()],
            center_objects: vec!["C".into()],
            central_edges: vec![Edge::new("w", &["T", "C"], &["C"])],
            ..Default::default()
        };
        let ds = validate_signature(&Signature::Bimodular(g));
        assert_eq!(ds.iter().map(|d| d.invariant).collect::<Vec<_>>(), vec![Invariant::CentralWireOrder]);
    }

    #[test]
    fn two_graph_endpoints() {
        let mut g = TwoGraph {
            zero_cells: vec!["a".into(), "b".into()],
            ..Default::default()
        };
        g.add_one("x", "a", "a");
        g.add_one("p", "a", "b");
        g.add_two("bad", &["x".into()], &["p".into()]);
        g.add_two("scalar", &[], &[]);
        let ds = validate_signature(&Signature::Two(g));
        let kinds: Vec<_> = ds.iter().map(|d| d.invariant).collect();
        assert_eq!(kinds, vec![Invariant::EndpointMismatch, Invariant::EmptyBoundaryNeedsZeroCell]);
    }

    #[test]
    fn duplicate_edges_across_families() {
        let g = BimodularGraph {
            left_objects: vec!["S".into()],
            right_objects: vec!["T".into()],
            left_edges: vec![Edge::new("f", &["S"], &["S"])],
            right_edges: vec![Edge::new("f", &["T"], &["T"])],
            ..Default::default()
        };
        let ds = validate_signature(&Signature::Bimodular(g));
        assert_eq!(ds[0].invariant, Invariant::DuplicateName);
    }
}
