use std::fmt::{self, Display, Formatter, Write};

use super::*;

fn list(ns: &[String]) -> String {
    if ns.is_empty() {
        "()".to_string()
    } else {
        ns.join(", ")
    }
}

impl Display for DiagramExpr {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        fn go(e: &DiagramExpr, f: &mut Formatter<'_>, ctx: u8) -> fmt::Result {
            // ctx: 0 = top / left of `;`, 1 = right of `;`, 2 = left of `|`, 3 = right of `|`
            match e {
                DiagramExpr::Id(ws) => write!(f, "id({})", ws.join(", ")),
                DiagramExpr::IdAt(z) => write!(f, "id(@{z})"),
                DiagramExpr::Name(n) => f.write_str(n),
                DiagramExpr::Seq(a, b) => {
                    let paren = ctx != 0;
                    if paren {
                        f.write_char('(')?;
                    }
                    go(a, f, 0)?;
                    f.write_str(" ; ")?;
                    go(b, f, 1)?;
                    if paren {
                        f.write_char(')')?;
                    }
                    Ok(())
                }
                DiagramExpr::Tensor(a, b) => {
                    let paren = ctx == 3;
                    if paren {
                        f.write_char('(')?;
                    }
                    go(a, f, 2)?;
                    f.write_str(" | ")?;
                    go(b, f, 3)?;
                    if paren {
                        f.write_char(')')?;
                    }
                    Ok(())
                }
            }
        }
        go(self, f, 0)
    }
}

fn edges(out: &mut String, kw: &str, es: &[Edge]) {
    for e in es {
        let _ = writeln!(
            out,
            "  {kw} {} : {} -> {};",
            e.name,
            list(&e.domain),
            list(&e.codomain)
        );
    }
}

fn objects(out: &mut String, kw: &str, os: &[String]) {
    if !os.is_empty() {
        let _ = writeln!(out, "  {kw}: {};", os.join(", "));
    }
}

impl Display for Theory {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        let _ = writeln!(out, "{} theory {} {{", self.signature.kind(), self.name);
        match &self.signature {
            Signature::Monoidal(p) | Signature::Internal(p) => {
                objects(&mut out, "objects", &p.objects);
                edges(&mut out, "edge", &p.edges);
            }
            Signature::Two(g) => {
                objects(&mut out, "zero cells", &g.zero_cells);
                for o in &g.one_generators {
                    let _ = writeln!(out, "  one {} : {} -> {};", o.name, o.source, o.target);
                }
                for t in &g.two_generators {
                    let _ = write!(
                        out,
                        "  two {} : {} -> {}",
                        t.name,
                        list(&t.domain),
                        list(&t.codomain)
                    );
                    if let Some(z) = &t.at {
                        let _ = write!(out, " @ {z}");
                    }
                    out.push_str(";\n");
                }
            }
            Signature::Bimodular(g) => {
                objects(&mut out, "left objects", &g.left_objects);
                objects(&mut out, "right objects", &g.right_objects);
                objects(&mut out, "center objects", &g.center_objects);
                edges(&mut out, "left edge", &g.left_edges);
                edges(&mut out, "right edge", &g.right_edges);
                edges(&mut out, "central edge", &g.central_edges);
            }
            Signature::FunctorBox(s) => {
                objects(&mut out, "plain objects", &s.plain_objects);
                objects(&mut out, "box objects", &s.box_objects);
                edges(&mut out, "plain edge", &s.plain_edges);
                edges(&mut out, "box edge", &s.box_edges);
                edges(&mut out, "in edge", &s.in_box_edges);
                edges(&mut out, "out edge", &s.out_box_edges);
            }
        }
        for eq in &self.equations.equations {
            let _ = writeln!(out, "  equation {} : {} = {};", eq.name, eq.lhs, eq.rhs);
        }
        for d in &self.diagrams {
            let _ = writeln!(out, "  diagram {} : {};", d.name, d.expr);
        }
        out.push_str("}\n");
        f.write_str(&out)
    }
}

impl Display for ModelDecl {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        writeln!(f, "model {} {{", self.name)?;
        if !self.objects.is_empty() {
            writeln!(f, "  objects: {};", self.objects.join(", "))?;
        }
        if let Some(u) = &self.unit {
            writeln!(f, "  unit: {u};")?;
        }
        for (a, b, ms) in &self.homs {
            writeln!(f, "  hom {a} {b} = {{ {} }};", ms.join(", "))?;
        }
        for (x, y, z) in &self.composes {
            writeln!(f, "  compose {x} {y} = {z};")?;
        }
        for (x, y, z) in &self.tensors {
            writeln!(f, "  tensor {x} {y} = {z};")?;
        }
        writeln!(f, "}}")
    }
}

impl Display for InterpretationDecl {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        write!(f, "interpretation {} : {} in {}", self.name, self.theory, self.model)?;
        if let Some(functor) = &self.functor {
            write!(f, " via {functor}")?;
        }
        writeln!(f, " {{")?;
        for (k, v) in &self.assignments {
            writeln!(f, "  {k} = {v};")?;
        }
        writeln!(f, "}}")
    }
}

impl Display for Document {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        for t in &self.theories {
            writeln!(f, "{t}")?;
        }
        for m in &self.models {
            writeln!(f, "{m}")?;
        }
        for i in &self.interpretations {
            writeln!(f, "{i}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::super::parse_document;

    #[test]
    fn nested_expressions_keep_their_shape() {
        let src = "monoidal theory T { objects: A; edge f : A -> A;
            diagram d : f ; (f ; f) | (A | f) ; id(A, A); }";
        let doc = parse_document(src).unwrap();
        let again = parse_document(&doc.to_string()).unwrap();
        assert_eq!(doc.theories, again.theories);
    }
}
