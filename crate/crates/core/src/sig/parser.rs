use std::collections::BTreeSet;

use super::lexer::{lex, Tok};
use super::*;

/// Reserved generator names contributed by each presentation.
pub mod reserved {
    pub const FUNCTOR_UP: &str = "Fup";
    pub const FUNCTOR_DOWN: &str = "Fdown";
    pub const BOX_UNIT: &str = "n";
    pub const BOX_COUNIT: &str = "e";
    pub const TUBE_LEFT: &str = "L";
    pub const TUBE_RIGHT: &str = "R";
    pub const TUBE_CELLS: [&str; 4] = ["n1", "e1", "n2", "e2"];

    /// Closing cell `A^y : L A R -> id`.
    pub fn closing(object: &str) -> String {
        format!("{object}^y")
    }

    /// Opening cell `A_y : id -> L A R`.
    pub fn opening(object: &str) -> String {
        format!("{object}_y")
    }
}

/// Parses a whole `.collage` document.
pub fn parse_document(src: &str) -> Result<Document, SigError> {
    let toks = lex(src)?;
    let mut p = Parser { toks, i: 0 };
    let mut doc = Document::default();
    while *p.peek() != Tok::Eof {
        p.block(&mut doc)?;
    }
    Ok(doc)
}

/// Parses the first theory block of `src`.
pub fn parse_signature(src: &str) -> Result<(Signature, EquationSet), SigError> {
    let doc = parse_document(src)?;
    match doc.theories.into_iter().next() {
        Some(t) => Ok((t.signature, t.equations)),
        None => Err(SigError::Syntax {
            pos: Pos { line: 1, col: 1 },
            msg: "no theory block".into(),
        }),
    }
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    i: usize,
}

/// Raw boundary list with the position of each name.
type Names = Vec<(String, Pos)>;

struct RawEdge {
    family: &'static str,
    name: String,
    pos: Pos,
    domain: Names,
    codomain: Names,
    at: Option<(String, Pos)>,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.i].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.i].1
    }

    fn next(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.i].clone();
        if self.i + 1 < self.toks.len() {
            self.i += 1;
        }
        t
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, SigError> {
        Err(SigError::Syntax {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn expect(&mut self, t: Tok) -> Result<Pos, SigError> {
        if *self.peek() == t {
            Ok(self.next().1)
        } else {
            self.err(format!(
                "expected {}, found {}",
                t.describe(),
                self.peek().describe()
            ))
        }
    }

    fn ident(&mut self) -> Result<(String, Pos), SigError> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                let p = self.next().1;
                Ok((s, p))
            }
            other => self.err(format!("expected identifier, found {}", other.describe())),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<(), SigError> {
        let (s, pos) = self.ident()?;
        if s == kw {
            Ok(())
        } else {
            Err(SigError::Syntax {
                pos,
                msg: format!("expected `{kw}`, found `{s}`"),
            })
        }
    }

    /// Identifiers up to (and consuming) the next `:` or `=`.
    fn head(&mut self) -> Result<(Vec<String>, Pos, Tok), SigError> {
        let pos = self.pos();
        let mut words = Vec::new();
        loop {
            match self.peek().clone() {
                Tok::Ident(s) => {
                    self.next();
                    words.push(s);
                }
                t @ (Tok::Colon | Tok::Eq) if !words.is_empty() => {
                    self.next();
                    return Ok((words, pos, t));
                }
                other => return self.err(format!("unexpected {}", other.describe())),
            }
        }
    }

    /// Comma-separated names, `()` for the empty list, or nothing at all.
    fn names(&mut self) -> Result<Names, SigError> {
        let mut out = Vec::new();
        if *self.peek() == Tok::LParen {
            self.next();
            self.expect(Tok::RParen)?;
            return Ok(out);
        }
        if !matches!(self.peek(), Tok::Ident(_)) {
            return Ok(out);
        }
        out.push(self.ident()?);
        while *self.peek() == Tok::Comma {
            self.next();
            out.push(self.ident()?);
        }
        Ok(out)
    }

    fn block(&mut self, doc: &mut Document) -> Result<(), SigError> {
        let (kw, kw_pos) = self.ident()?;
        match kw.as_str() {
            "model" => self.model(doc),
            "interpretation" => self.interpretation(doc),
            "monoidal" | "internal" | "two" | "bimodular" | "functorbox" => {
                self.keyword("theory")?;
                self.theory(&kw, doc)
            }
            _ => Err(SigError::Syntax {
                pos: kw_pos,
                msg: format!("expected a block keyword, found `{kw}`"),
            }),
        }
    }

    fn model(&mut self, doc: &mut Document) -> Result<(), SigError> {
        let (name, pos) = self.ident()?;
        doc.positions.insert(format!("model/{name}"), pos);
        self.expect(Tok::LBrace)?;
        let mut m = ModelDecl {
            name,
            ..Default::default()
        };
        while *self.peek() != Tok::RBrace {
            let (words, pos, sep) = self.head()?;
            let w: Vec<&str> = words.iter().map(String::as_str).collect();
            match (w.as_slice(), sep) {
                (["objects"], Tok::Colon) => {
                    m.objects.extend(self.names()?.into_iter().map(|n| n.0));
                }
                (["unit"], Tok::Colon) => m.unit = Some(self.ident()?.0),
                (["hom", a, b], Tok::Eq) => {
                    self.expect(Tok::LBrace)?;
                    let ms = self.names()?.into_iter().map(|n| n.0).collect();
                    self.expect(Tok::RBrace)?;
                    m.homs.push((a.to_string(), b.to_string(), ms));
                }
                (["compose", f, g], Tok::Eq) => {
                    let h = self.ident()?.0;
                    m.composes.push((f.to_string(), g.to_string(), h));
                }
                (["tensor", x, y], Tok::Eq) => {
                    let z = self.ident()?.0;
                    m.tensors.push((x.to_string(), y.to_string(), z));
                }
                _ => {
                    return Err(SigError::Syntax {
                        pos,
                        msg: format!("unknown model item `{}`", words.join(" ")),
                    })
                }
            }
            self.expect(Tok::Semi)?;
        }
        self.expect(Tok::RBrace)?;
        doc.models.push(m);
        Ok(())
    }

    fn interpretation(&mut self, doc: &mut Document) -> Result<(), SigError> {
        let (name, pos) = self.ident()?;
        doc.positions.insert(format!("interpretation/{name}"), pos);
        self.expect(Tok::Colon)?;
        let theory = self.ident()?.0;
        self.keyword("in")?;
        let model = self.ident()?.0;
        let functor = if *self.peek() == Tok::Ident("via".into()) {
            self.next();
            Some(self.ident()?.0)
        } else {
            None
        };
        self.expect(Tok::LBrace)?;
        let mut assignments = Vec::new();
        while *self.peek() != Tok::RBrace {
            let (k, _) = self.ident()?;
            self.expect(Tok::Eq)?;
            let (v, _) = self.ident()?;
            self.expect(Tok::Semi)?;
            assignments.push((k, v));
        }
        self.expect(Tok::RBrace)?;
        doc.interpretations.push(InterpretationDecl {
            name,
            theory,
            model,
            functor,
            assignments,
        });
        Ok(())
    }

    fn edge_decl(&mut self, family: &'static str, name: &str, pos: Pos) -> Result<RawEdge, SigError> {
        let domain = self.names()?;
        self.expect(Tok::Arrow)?;
        let codomain = self.names()?;
        let at = if *self.peek() == Tok::At {
            self.next();
            Some(self.ident()?)
        } else {
            None
        };
        Ok(RawEdge {
            family,
            name: name.to_string(),
            pos,
            domain,
            codomain,
            at,
        })
    }

    fn theory(&mut self, kind: &str, doc: &mut Document) -> Result<(), SigError> {
        let (name, pos) = self.ident()?;
        doc.positions.insert(format!("theory/{name}"), pos);
        self.expect(Tok::LBrace)?;

        let mut objects: Vec<(&'static str, Names)> = Vec::new();
        let mut ones: Vec<(String, Pos, Names, Names)> = Vec::new();
        let mut edges: Vec<RawEdge> = Vec::new();
        let mut equations = Vec::new();
        let mut diagrams = Vec::new();
        let mut expr_names: Vec<(String, Pos)> = Vec::new();

        while *self.peek() != Tok::RBrace {
            let (words, hpos, sep) = self.head()?;
            if sep != Tok::Colon {
                return Err(SigError::Syntax {
                    pos: hpos,
                    msg: "expected `:`".into(),
                });
            }
            let w: Vec<&str> = words.iter().map(String::as_str).collect();
            match (kind, w.as_slice()) {
                (_, ["equation", n]) => {
                    doc.positions.insert(format!("{name}/{n}"), hpos);
                    let lhs = self.expr(&mut expr_names)?;
                    self.expect(Tok::Eq)?;
                    let rhs = self.expr(&mut expr_names)?;
                    equations.push(Equation {
                        name: n.to_string(),
                        lhs,
                        rhs,
                    });
                }
                (_, ["diagram", n]) => {
                    doc.positions.insert(format!("{name}/{n}"), hpos);
                    let expr = self.expr(&mut expr_names)?;
                    diagrams.push(NamedDiagram {
                        name: n.to_string(),
                        expr,
                    });
                }
                ("monoidal" | "internal", ["objects"]) => objects.push(("objects", self.names()?)),
                ("monoidal" | "internal", ["edge", n]) => {
                    edges.push(self.edge_decl("edge", n, hpos)?)
                }
                ("two", ["zero", "cells"]) => objects.push(("zero", self.names()?)),
                ("two", ["one", n]) => {
                    let d = self.names()?;
                    self.expect(Tok::Arrow)?;
                    let c = self.names()?;
                    ones.push((n.to_string(), hpos, d, c));
                }
                ("two", ["two", n]) => edges.push(self.edge_decl("two", n, hpos)?),
                ("bimodular", ["left", "objects"]) => objects.push(("left", self.names()?)),
                ("bimodular", ["right", "objects"]) => objects.push(("right", self.names()?)),
                ("bimodular", ["center", "objects"]) => objects.push(("center", self.names()?)),
                ("bimodular", ["left", "edge", n]) => edges.push(self.edge_decl("left", n, hpos)?),
                ("bimodular", ["right", "edge", n]) => {
                    edges.push(self.edge_decl("right", n, hpos)?)
                }
                ("bimodular", ["central", "edge", n]) => {
                    edges.push(self.edge_decl("central", n, hpos)?)
                }
                ("functorbox", ["plain", "objects"]) => objects.push(("plain", self.names()?)),
                ("functorbox", ["box", "objects"]) => objects.push(("box", self.names()?)),
                ("functorbox", ["plain", "edge", n]) => {
                    edges.push(self.edge_decl("plain", n, hpos)?)
                }
                ("functorbox", ["box", "edge", n]) => edges.push(self.edge_decl("box", n, hpos)?),
                ("functorbox", ["in", "edge", n]) => edges.push(self.edge_decl("in", n, hpos)?),
                ("functorbox", ["out", "edge", n]) => edges.push(self.edge_decl("out", n, hpos)?),
                _ => {
                    return Err(SigError::Syntax {
                        pos: hpos,
                        msg: format!("unknown {kind} theory item `{}`", words.join(" ")),
                    })
                }
            }
            self.expect(Tok::Semi)?;
        }
        self.expect(Tok::RBrace)?;

        let declared: BTreeSet<String> = objects
            .iter()
            .flat_map(|(_, ns)| ns.iter().map(|n| n.0.clone()))
            .collect();
        let check = |ns: &Names| -> Result<Vec<String>, SigError> {
            ns.iter()
                .map(|(n, p)| {
                    if declared.contains(n) {
                        Ok(n.clone())
                    } else {
                        Err(SigError::UnknownIdentifier {
                            pos: *p,
                            name: n.clone(),
                        })
                    }
                })
                .collect()
        };
        let of = |fam: &str| -> Vec<String> {
            objects
                .iter()
                .filter(|(f, _)| *f == fam)
                .flat_map(|(_, ns)| ns.iter().map(|n| n.0.clone()))
                .collect()
        };
        let mut edge_lists: BTreeMap<&'static str, Vec<Edge>> = BTreeMap::new();
        let mut two_gens = Vec::new();
        for e in &edges {
            let (domain, codomain) = if e.family == "two" {
                let raw = |ns: &Names| ns.iter().map(|n| n.0.clone()).collect::<Vec<_>>();
                (raw(&e.domain), raw(&e.codomain))
            } else {
                (check(&e.domain)?, check(&e.codomain)?)
            };
            doc.positions.insert(format!("{name}/{}", e.name), e.pos);
            if e.family == "two" {
                let at = match &e.at {
                    Some((z, p)) if !declared.contains(z) => {
                        return Err(SigError::UnknownIdentifier {
                            pos: *p,
                            name: z.clone(),
                        })
                    }
                    Some((z, p)) => {
                        if !(domain.is_empty() && codomain.is_empty()) {
                            return Err(SigError::ArityMismatch {
                                pos: *p,
                                msg: "`@` is only allowed on generators with empty boundaries"
                                    .into(),
                            });
                        }
                        Some(z.clone())
                    }
                    None => None,
                };
                two_gens.push(TwoGenerator {
                    name: e.name.clone(),
                    domain,
                    codomain,
                    at,
                });
            } else {
                if let Some((_, p)) = &e.at {
                    return Err(SigError::Syntax {
                        pos: *p,
                        msg: "`@` is only allowed in two theories".into(),
                    });
                }
                edge_lists.entry(e.family).or_default().push(Edge {
                    name: e.name.clone(),
                    domain,
                    codomain,
                });
            }
        }
        let mut take = |f: &str| edge_lists.remove(f).unwrap_or_default();

        let signature = match kind {
            "monoidal" => Signature::Monoidal(Polygraph {
                objects: of("objects"),
                edges: take("edge"),
            }),
            "internal" => Signature::Internal(Polygraph {
                objects: of("objects"),
                edges: take("edge"),
            }),
            "two" => {
                let zero = of("zero");
                let mut one_generators = Vec::new();
                for (n, p, d, c) in &ones {
                    if d.len() != 1 || c.len() != 1 {
                        return Err(SigError::ArityMismatch {
                            pos: *p,
                            msg: format!("1-generator `{n}` needs exactly one source and one target"),
                        });
                    }
                    let s = check(d)?.remove(0);
                    let t = check(c)?.remove(0);
                    doc.positions.insert(format!("{name}/{n}"), *p);
                    one_generators.push(OneGenerator {
                        name: n.clone(),
                        source: s,
                        target: t,
                    });
                }
                // 2-generator boundaries name 1-generators, not zero-cells.
                let ones_declared: BTreeSet<&str> =
                    one_generators.iter().map(|g| g.name.as_str()).collect();
                for e in &edges {
                    for (n, p) in e.domain.iter().chain(&e.codomain) {
                        if !ones_declared.contains(n.as_str()) {
                            return Err(SigError::UnknownIdentifier {
                                pos: *p,
                                name: n.clone(),
                            });
                        }
                    }
                }
                Signature::Two(TwoGraph {
                    zero_cells: zero,
                    one_generators,
                    two_generators: two_gens,
                })
            }
            "bimodular" => Signature::Bimodular(BimodularGraph {
                left_objects: of("left"),
                right_objects: of("right"),
                center_objects: of("center"),
                left_edges: take("left"),
                right_edges: take("right"),
                central_edges: take("central"),
            }),
            _ => Signature::FunctorBox(FunctorBoxSignature {
                plain_objects: of("plain"),
                box_objects: of("box"),
                plain_edges: take("plain"),
                box_edges: take("box"),
                in_box_edges: take("in"),
                out_box_edges: take("out"),
            }),
        };

        let known = known_names(&signature, diagrams.iter().map(|d| d.name.as_str()));
        for (n, p) in expr_names {
            if !known.contains(&n) {
                return Err(SigError::UnknownIdentifier { pos: p, name: n });
            }
        }
        doc.theories.push(Theory {
            name,
            signature,
            equations: EquationSet { equations },
            diagrams,
        });
        Ok(())
    }

    /// True if the tokens starting at `j` open a new item (or close the block).
    fn item_boundary(&self, j: usize) -> bool {
        let mut k = j;
        match &self.toks[k].0 {
            Tok::RBrace | Tok::Eof => return true,
            Tok::Ident(_) => {}
            _ => return false,
        }
        while matches!(self.toks[k].0, Tok::Ident(_)) {
            k += 1;
        }
        self.toks[k].0 == Tok::Colon
    }

    fn expr(&mut self, names: &mut Vec<(String, Pos)>) -> Result<DiagramExpr, SigError> {
        let mut e = self.tensor(names)?;
        while *self.peek() == Tok::Semi && !self.item_boundary(self.i + 1) {
            self.next();
            let r = self.tensor(names)?;
            e = e.seq(r);
        }
        Ok(e)
    }

    fn tensor(&mut self, names: &mut Vec<(String, Pos)>) -> Result<DiagramExpr, SigError> {
        let mut e = self.atom(names)?;
        while *self.peek() == Tok::Bar {
            self.next();
            let r = self.atom(names)?;
            e = e.tensor(r);
        }
        Ok(e)
    }

    fn atom(&mut self, names: &mut Vec<(String, Pos)>) -> Result<DiagramExpr, SigError> {
        match self.peek().clone() {
            Tok::LParen => {
                self.next();
                let e = self.expr(names)?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Tok::Ident(s) if s == "id" && self.toks[self.i + 1].0 == Tok::LParen => {
                self.next();
                self.next();
                if *self.peek() == Tok::At {
                    self.next();
                    let z = self.ident()?;
                    self.expect(Tok::RParen)?;
                    return Ok(DiagramExpr::IdAt(z.0));
                }
                let ws = self.names()?;
                if ws.is_empty() {
                    return self.err("empty identity needs a zero-cell: `id(@z)`");
                }
                self.expect(Tok::RParen)?;
                names.extend(ws.iter().cloned());
                Ok(DiagramExpr::Id(ws.into_iter().map(|w| w.0).collect()))
            }
            Tok::Ident(s) => {
                let p = self.next().1;
                names.push((s.clone(), p));
                Ok(DiagramExpr::Name(s))
            }
            other => self.err(format!("expected a diagram, found {}", other.describe())),
        }
    }
}

/// Names an expression over this signature's presentation may mention.
pub(crate) fn known_names<'a>(
    sig: &Signature,
    diagrams: impl Iterator<Item = &'a str>,
) -> BTreeSet<String> {
    let mut k: BTreeSet<String> = diagrams.map(str::to_string).collect();
    let edges = |es: &[Edge], k: &mut BTreeSet<String>| {
        k.extend(es.iter().map(|e| e.name.clone()));
    };
    match sig {
        Signature::Monoidal(p) | Signature::Internal(p) => {
            k.extend(p.objects.iter().cloned());
            for o in &p.objects {
                k.insert(reserved::closing(o));
                k.insert(reserved::opening(o));
            }
            edges(&p.edges, &mut k);
            k.insert(reserved::TUBE_LEFT.into());
            k.insert(reserved::TUBE_RIGHT.into());
            k.extend(reserved::TUBE_CELLS.iter().map(|s| s.to_string()));
        }
        Signature::Two(g) => {
            k.extend(g.one_generators.iter().map(|x| x.name.clone()));
            k.extend(g.two_generators.iter().map(|x| x.name.clone()));
        }
        Signature::Bimodular(g) => {
            k.extend(g.left_objects.iter().cloned());
            k.extend(g.right_objects.iter().cloned());
            k.extend(g.center_objects.iter().cloned());
            edges(&g.left_edges, &mut k);
            edges(&g.right_edges, &mut k);
            edges(&g.central_edges, &mut k);
        }
        Signature::FunctorBox(s) => {
            k.extend(s.plain_objects.iter().cloned());
            k.extend(s.box_objects.iter().cloned());
            edges(&s.plain_edges, &mut k);
            edges(&s.box_edges, &mut k);
            edges(&s.in_box_edges, &mut k);
            edges(&s.out_box_edges, &mut k);
            for r in [
                reserved::FUNCTOR_UP,
                reserved::FUNCTOR_DOWN,
                reserved::BOX_UNIT,
                reserved::BOX_COUNIT,
            ] {
                k.insert(r.into());
            }
        }
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_theory_block() {
        let (sig, eqs) = parse_signature("bimodular theory Empty { }").unwrap();
        assert_eq!(sig, Signature::Bimodular(BimodularGraph::default()));
        assert!(eqs.is_empty());
    }

    #[test]
    fn undeclared_object_in_boundary() {
        let src = "monoidal theory T {\n  objects: A;\n  edge f : A -> B;\n}";
        match parse_signature(src) {
            Err(SigError::UnknownIdentifier { pos, name }) => {
                assert_eq!(name, "B");
                assert_eq!(pos, Pos { line: 3, col: 17 });
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn syntax_error_has_position() {
        let err = parse_signature("monoidal theory T {\n objects A;\n}").unwrap_err();
        assert!(matches!(err, SigError::Syntax { .. }));
        assert_eq!(err.pos().line, 2);
    }

    #[test]
    fn one_generator_arity() {
        let src = "two theory T { zero cells: a, b; one x : a, b -> a; }";
        assert!(matches!(
            parse_signature(src),
            Err(SigError::ArityMismatch { .. })
        ));
    }

    #[test]
    fn expressions_split_on_item_boundaries() {
        let src = "monoidal theory T {
            objects: A;
            edge f : A -> A;
            diagram d : f ; f ; A | f;
            equation sq : f ; f = A;
        }";
        let doc = parse_document(src).unwrap();
        let t = &doc.theories[0];
        let f = || DiagramExpr::name("f");
        assert_eq!(
            t.diagram("d").unwrap(),
            &f().seq(f()).seq(DiagramExpr::name("A").tensor(f()))
        );
        assert_eq!(t.equations.equations[0].rhs, DiagramExpr::name("A"));
    }

    #[test]
    fn unknown_name_in_expression() {
        let src = "monoidal theory T { objects: A; diagram d : g; }";
        assert!(matches!(
            parse_signature(src),
            Err(SigError::UnknownIdentifier { .. })
        ));
    }

    #[test]
    fn model_and_interpretation_blocks() {
        let src = "model M { objects: o; hom o o = { id_o, x }; compose x x = id_o; tensor o o = o; unit: o; }
                   interpretation I : T in M via F { A = o; }";
        let doc = parse_document(src).unwrap();
        assert_eq!(doc.models[0].homs[0].2, vec!["id_o", "x"]);
        assert_eq!(doc.interpretations[0].functor.as_deref(), Some("F"));
    }
}
