//! Static drawings of sliced diagrams: one row per layer, wires as vertical
//! tracks and regions shaded by zero-cell (the first zero-cell stays white).

use std::fmt::Write as _;

use crate::diagram::{DiagramError, OneCellPath, SlicedDiagram};
use crate::sig::TwoGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Svg,
    Dot,
    Tikz,
}

const PALETTE: [(u8, u8, u8); 6] = [
    (255, 255, 255),
    (207, 226, 243),
    (252, 229, 205),
    (217, 234, 211),
    (234, 209, 220),
    (255, 242, 204),
];

const STEP: f64 = 40.0;
const BAND: f64 = 60.0;
const TOP: f64 = 20.0;
const HALF_BOX: f64 = 6.0;

fn color(g: &TwoGraph, zero_cell: &str) -> (u8, u8, u8) {
    let k = g.zero_cells.iter().position(|z| z == zero_cell).unwrap_or(0);
    PALETTE[k % PALETTE.len()]
}

fn x(i: usize) -> f64 {
    STEP * (i as f64 + 1.0)
}

enum Shape {
    Region((u8, u8, u8), Vec<(f64, f64)>),
    Wire(Vec<(f64, f64)>),
    Box { x0: f64, y0: f64, x1: f64, y1: f64, label: String },
    Label { x: f64, y: f64, text: String },
}

struct Scene {
    width: f64,
    height: f64,
    shapes: Vec<Shape>,
}

fn strip(g: &TwoGraph, p: &OneCellPath, y0: f64, y1: f64, width: f64, out: &mut Vec<Shape>) {
    for r in 0..=p.len() {
        let left = if r == 0 { 0.0 } else { x(r - 1) };
        let right = if r == p.len() { width } else { x(r) };
        let c = color(g, &p.zero_cell_at(g, r));
        out.push(Shape::Region(c, vec![(left, y0), (right, y0), (right, y1), (left, y1)]));
    }
    for i in 0..p.len() {
        out.push(Shape::Wire(vec![(x(i), y0), (x(i), y1)]));
    }
}

fn scene(g: &TwoGraph, d: &SlicedDiagram) -> Result<Scene, DiagramError> {
    let paths = d.paths(g)?;
    let widest = paths.iter().map(|p| p.len()).max().unwrap_or(0);
    let width = x(widest) + 20.0 - STEP;
    let width = width.max(2.0 * STEP);
    let bands = d.len().max(1);
    let height = 2.0 * TOP + BAND * bands as f64;
    let mut shapes = Vec::new();
    if d.is_empty() {
        strip(g, &paths[0], TOP, TOP + BAND, width, &mut shapes);
    }
    for (k, l) in d.layers.iter().enumerate() {
        let (top, bottom) = (&paths[k], &paths[k + 1]);
        let y0 = TOP + BAND * k as f64;
        let ym = y0 + BAND / 2.0;
        let y1 = y0 + BAND;
        let (ya, yb) = (ym - HALF_BOX, ym + HALF_BOX);
        let off = l.offset();
        let din = top.len() - off - l.right.len();
        let dout = bottom.len() - off - l.right.len();
        let span = din.max(dout);
        let (bx0, bx1) = if span == 0 {
            (x(off) - 30.0, x(off) - 10.0)
        } else {
            (x(off) - 15.0, x(off + span - 1) + 15.0)
        };
        strip(g, top, y0, ya, width, &mut shapes);
        strip(g, bottom, yb, y1, width, &mut shapes);
        // middle strip: regions left of the box, then right of it
        for r in 0..=off {
            let left = if r == 0 { 0.0 } else { x(r - 1) };
            let right = if r == off { bx0 } else { x(r) };
            let c = color(g, &top.zero_cell_at(g, r));
            shapes.push(Shape::Region(c, vec![(left, ya), (right, ya), (right, yb), (left, yb)]));
        }
        let n = l.right.len();
        for j in 0..=n {
            let (lt, lb) = if j == 0 {
                (bx1, bx1)
            } else {
                (x(off + din + j - 1), x(off + dout + j - 1))
            };
            let (rt, rb) = if j == n {
                (width, width)
            } else {
                (x(off + din + j), x(off + dout + j))
            };
            let c = color(g, &top.zero_cell_at(g, off + din + j));
            shapes.push(Shape::Region(c, vec![(lt, ya), (rt, ya), (rb, yb), (lb, yb)]));
        }
        for i in 0..off {
            shapes.push(Shape::Wire(vec![(x(i), ya), (x(i), yb)]));
        }
        for j in 0..n {
            shapes.push(Shape::Wire(vec![(x(off + din + j), ya), (x(off + dout + j), yb)]));
        }
        shapes.push(Shape::Box {
            x0: bx0,
            y0: ya,
            x1: bx1,
            y1: yb,
            label: l.gen.clone(),
        });
    }
    let last = paths.last().expect("at least the domain");
    for (i, w) in paths[0].wires.iter().enumerate() {
        shapes.push(Shape::Label {
            x: x(i) + 3.0,
            y: TOP - 6.0,
            text: w.clone(),
        });
    }
    for (i, w) in last.wires.iter().enumerate() {
        shapes.push(Shape::Label {
            x: x(i) + 3.0,
            y: height - TOP + 14.0,
            text: w.clone(),
        });
    }
    Ok(Scene { width, height, shapes })
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

fn pts(ps: &[(f64, f64)]) -> String {
    ps.iter().map(|(a, b)| format!("{a:.1},{b:.1}")).collect::<Vec<_>>().join(" ")
}

fn svg(s: &Scene) -> String {
    let mut o = String::new();
    let _ = writeln!(
        o,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{:.0}" height="{:.0}" viewBox="0 0 {:.0} {:.0}">"#,
        s.width, s.height, s.width, s.height
    );
    for sh in &s.shapes {
        let _ = match sh {
            Shape::Region((r, g, b), ps) => writeln!(o, r#"<polygon points="{}" fill="rgb({r},{g},{b})"/>"#, pts(ps)),
            Shape::Wire(ps) => writeln!(o, r#"<polyline points="{}" fill="none" stroke="black"/>"#, pts(ps)),
            Shape::Box { x0, y0, x1, y1, label } => writeln!(
                o,
                r#"<rect x="{x0:.1}" y="{y0:.1}" width="{:.1}" height="{:.1}" fill="white" stroke="black"/><text x="{:.1}" y="{:.1}" font-size="10" text-anchor="middle" dominant-baseline="central">{}</text>"#,
                x1 - x0,
                y1 - y0,
                (x0 + x1) / 2.0,
                (y0 + y1) / 2.0,
                escape(label)
            ),
            Shape::Label { x, y, text } => {
                writeln!(o, r#"<text x="{x:.1}" y="{y:.1}" font-size="9">{}</text>"#, escape(text))
            }
        };
    }
    o.push_str("</svg>\n");
    o
}

fn tikz_text(s: &str) -> String {
    s.chars()
        .map(|c| match c {
            '^' => "\\textasciicircum{}".to_string(),
            '_' | '&' | '#' | '%' | '$' | '{' | '}' => format!("\\{c}"),
            _ => c.to_string(),
        })
        .collect()
}

fn tikz_pts(ps: &[(f64, f64)]) -> String {
    ps.iter().map(|(a, b)| format!("({a:.1},{b:.1})")).collect::<Vec<_>>().join(" -- ")
}

fn tikz(s: &Scene) -> String {
    let mut o = String::from("\\begin{tikzpicture}[x=0.025cm, y=-0.025cm]\n");
    for sh in &s.shapes {
        let _ = match sh {
            Shape::Region((r, g, b), ps) => writeln!(
                o,
                "\\fill[fill={{rgb,255:red,{r};green,{g};blue,{b}}}] {} -- cycle;",
                tikz_pts(ps)
            ),
            Shape::Wire(ps) => writeln!(o, "\\draw {};", tikz_pts(ps)),
            Shape::Box { x0, y0, x1, y1, label } => writeln!(
                o,
                "\\draw[fill=white] ({x0:.1},{y0:.1}) rectangle ({x1:.1},{y1:.1});\n\\node[font=\\tiny] at ({:.1},{:.1}) {{{}}};",
                (x0 + x1) / 2.0,
                (y0 + y1) / 2.0,
                tikz_text(label)
            ),
            Shape::Label { x, y, text } => {
                writeln!(o, "\\node[font=\\tiny, anchor=west] at ({x:.1},{y:.1}) {{{}}};", tikz_text(text))
            }
        };
    }
    o.push_str("\\end{tikzpicture}\n");
    o
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Generators as nodes and wires as edges, top to bottom.
fn dot(g: &TwoGraph, d: &SlicedDiagram) -> Result<String, DiagramError> {
    let paths = d.paths(g)?;
    let mut o = String::from("digraph diagram {\n  rankdir=TB;\n  node [shape=box, style=filled];\n");
    let mut sources: Vec<String> = Vec::new();
    for (i, _) in paths[0].wires.iter().enumerate() {
        let _ = writeln!(o, "  in{i} [shape=point];");
        sources.push(format!("in{i}"));
    }
    for (k, l) in d.layers.iter().enumerate() {
        let top = &paths[k];
        let bottom = &paths[k + 1];
        let off = l.offset();
        let din = top.len() - off - l.right.len();
        let dout = bottom.len() - off - l.right.len();
        let (r, gr, b) = color(g, &top.zero_cell_at(g, off));
        let _ = writeln!(
            o,
            "  l{k} [label={}, fillcolor=\"#{r:02x}{gr:02x}{b:02x}\"];",
            quote(&l.gen)
        );
        for i in 0..din {
            let _ = writeln!(o, "  {} -> l{k} [label={}];", sources[off + i], quote(&top.wires[off + i]));
        }
        let outs = (0..dout).map(|_| format!("l{k}"));
        sources.splice(off..off + din, outs);
    }
    let last = paths.last().expect("at least the domain");
    for (j, w) in last.wires.iter().enumerate() {
        let _ = writeln!(o, "  out{j} [shape=point];");
        let _ = writeln!(o, "  {} -> out{j} [label={}];", sources[j], quote(w));
    }
    o.push_str("}\n");
    Ok(o)
}

pub fn render(g: &TwoGraph, d: &SlicedDiagram, format: Format) -> Result<String, DiagramError> {
    match format {
        Format::Svg => Ok(svg(&scene(g, d)?)),
        Format::Tikz => Ok(tikz(&scene(g, d)?)),
        Format::Dot => dot(g, d),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::test_graph;

    #[test]
    fn identity_has_only_wires() {
        let g = test_graph();
        let d = SlicedDiagram::identity(OneCellPath::new("a", &["x", "p"]));
        let s = render(&g, &d, Format::Svg).unwrap();
        assert!(!s.contains("<rect"));
        assert_eq!(s.matches("<polyline").count(), 2);
        let dot = render(&g, &d, Format::Dot).unwrap();
        assert!(dot.contains("in1 -> out1 [label=\"p\"]"));
    }

    #[test]
    fn layers_are_boxes_and_outputs_follow_them() {
        let g = test_graph();
        let f = SlicedDiagram::generator(&g, "f").unwrap();
        let u = SlicedDiagram::generator(&g, "u").unwrap();
        let d = crate::diagram::compose_vertical(&g, &u, &f).unwrap();
        let s = render(&g, &d, Format::Svg).unwrap();
        assert_eq!(s.matches("<rect").count(), 2);
        let dot = render(&g, &d, Format::Dot).unwrap();
        assert!(dot.contains("l0 -> l1 [label=\"x\"]"));
        assert!(dot.contains("l1 -> out0 [label=\"y\"]"));
        let t = render(&g, &d, Format::Tikz).unwrap();
        assert!(t.starts_with("\\begin{tikzpicture}"));
        assert_eq!(t, render(&g, &d, Format::Tikz).unwrap());
    }

    #[test]
    fn second_zero_cell_is_shaded() {
        let g = test_graph();
        let d = SlicedDiagram::identity(OneCellPath::new("a", &["p"]));
        let s = render(&g, &d, Format::Svg).unwrap();
        assert!(s.contains("rgb(255,255,255)") && s.contains("rgb(207,226,243)"));
    }
}
