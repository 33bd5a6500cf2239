//! Signatures: polygraphs, 2-graphs, bimodular graphs and functor-box
//! signatures, together with the `.collage` text format they are read from.

mod lexer;
mod parser;
mod print;
mod validate;

use std::collections::BTreeMap;
use std::fmt;

pub use parser::{parse_document, parse_signature, reserved};
pub use validate::{validate_signature, Diagnostic, Invariant};

/// A source position, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SigError {
    #[error("{pos}: syntax error: {msg}")]
    Syntax { pos: Pos, msg: String },
    #[error("{pos}: unknown identifier `{name}`")]
    UnknownIdentifier { pos: Pos, name: String },
    #[error("{pos}: boundary arity mismatch: {msg}")]
    ArityMismatch { pos: Pos, msg: String },
}

impl SigError {
    pub fn pos(&self) -> Pos {
        match self {
            SigError::Syntax { pos, .. }
            | SigError::UnknownIdentifier { pos, .. }
            | SigError::ArityMismatch { pos, .. } => *pos,
        }
    }
}

/// An edge with list boundaries, shared by every signature family.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Edge {
    pub name: String,
    pub domain: Vec<String>,
    pub codomain: Vec<String>,
}

impl Edge {
    pub fn new(name: &str, domain: &[&str], codomain: &[&str]) -> Self {
        Edge {
            name: name.to_string(),
            domain: domain.iter().map(|s| s.to_string()).collect(),
            codomain: codomain.iter().map(|s| s.to_string()).collect(),
        }
    }
}

/// Generators for a monoidal category.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polygraph {
    pub objects: Vec<String>,
    pub edges: Vec<Edge>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OneGenerator {
    pub name: String,
    pub source: String,
    pub target: String,
}

/// A 2-generator. `at` pins the zero-cell of a generator whose domain and
/// codomain are both empty; otherwise it is `None`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwoGenerator {
    pub name: String,
    pub domain: Vec<String>,
    pub codomain: Vec<String>,
    pub at: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TwoGraph {
    pub zero_cells: Vec<String>,
    pub one_generators: Vec<OneGenerator>,
    pub two_generators: Vec<TwoGenerator>,
}

impl TwoGraph {
    pub fn one(&self, name: &str) -> Option<&OneGenerator> {
        self.one_generators.iter().find(|g| g.name == name)
    }

    pub fn two(&self, name: &str) -> Option<&TwoGenerator> {
        self.two_generators.iter().find(|g| g.name == name)
    }

    pub fn has_zero_cell(&self, name: &str) -> bool {
        self.zero_cells.iter().any(|z| z == name)
    }

    pub fn add_one(&mut self, name: &str, source: &str, target: &str) {
        self.one_generators.push(OneGenerator {
            name: name.to_string(),
            source: source.to_string(),
            target: target.to_string(),
        });
    }

    pub fn add_two(&mut self, name: &str, domain: &[String], codomain: &[String]) {
        self.two_generators.push(TwoGenerator {
            name: name.to_string(),
            domain: domain.to_vec(),
            codomain: codomain.to_vec(),
            at: None,
        });
    }

    pub fn add_two_at(&mut self, name: &str, domain: &[String], codomain: &[String], at: &str) {
        let at = (domain.is_empty() && codomain.is_empty()).then(|| at.to_string());
        self.two_generators.push(TwoGenerator {
            name: name.to_string(),
            domain: domain.to_vec(),
            codomain: codomain.to_vec(),
            at,
        });
    }

    /// Endpoints of a composable wire list, or `None` if a wire is unknown or
    /// two consecutive wires do not compose. Empty lists have no endpoints.
    pub fn path_endpoints(&self, wires: &[String]) -> Option<Option<(String, String)>> {
        let mut ends: Option<(String, String)> = None;
        for w in wires {
            let g = self.one(w)?;
            ends = match ends {
                None => Some((g.source.clone(), g.target.clone())),
                Some((s, t)) if t == g.source => Some((s, g.target.clone())),
                Some(_) => return None,
            };
        }
        Some(ends)
    }

    /// Source and target zero-cells of a 2-generator's boundary.
    pub fn endpoints(&self, gen: &TwoGenerator) -> Option<(String, String)> {
        if let Some(Some(e)) = self.path_endpoints(&gen.domain) {
            return Some(e);
        }
        if let Some(Some(e)) = self.path_endpoints(&gen.codomain) {
            return Some(e);
        }
        gen.at.clone().map(|z| (z.clone(), z))
    }
}

/// Generators for an (M, N)-bimodular category.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BimodularGraph {
    pub left_objects: Vec<String>,
    pub right_objects: Vec<String>,
    pub center_objects: Vec<String>,
    pub left_edges: Vec<Edge>,
    pub right_edges: Vec<Edge>,
    pub central_edges: Vec<Edge>,
}

impl BimodularGraph {
    pub fn is_left(&self, o: &str) -> bool {
        self.left_objects.iter().any(|x| x == o)
    }
    pub fn is_right(&self, o: &str) -> bool {
        self.right_objects.iter().any(|x| x == o)
    }
    pub fn is_center(&self, o: &str) -> bool {
        self.center_objects.iter().any(|x| x == o)
    }
}

/// Generators for a lax monoidal functor box.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FunctorBoxSignature {
    pub plain_objects: Vec<String>,
    pub box_objects: Vec<String>,
    pub plain_edges: Vec<Edge>,
    pub box_edges: Vec<Edge>,
    pub in_box_edges: Vec<Edge>,
    pub out_box_edges: Vec<Edge>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Signature {
    Monoidal(Polygraph),
    Two(TwoGraph),
    Bimodular(BimodularGraph),
    FunctorBox(FunctorBoxSignature),
    /// A polygraph whose diagrams are drawn inside tubes.
    Internal(Polygraph),
}

impl Signature {
    pub fn kind(&self) -> &'static str {
        match self {
            Signature::Monoidal(_) => "monoidal",
            Signature::Two(_) => "two",
            Signature::Bimodular(_) => "bimodular",
            Signature::FunctorBox(_) => "functorbox",
            Signature::Internal(_) => "internal",
        }
    }
}

/// Unelaborated diagram expression.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum DiagramExpr {
    /// Identity on a non-empty wire list.
    Id(Vec<String>),
    /// Identity on the empty path at a zero-cell.
    IdAt(String),
    /// A generator, a wire (its identity) or a named diagram.
    Name(String),
    Seq(Box<DiagramExpr>, Box<DiagramExpr>),
    Tensor(Box<DiagramExpr>, Box<DiagramExpr>),
}

impl DiagramExpr {
    pub fn name(s: &str) -> Self {
        DiagramExpr::Name(s.to_string())
    }
    pub fn seq(self, other: DiagramExpr) -> Self {
        DiagramExpr::Seq(Box::new(self), Box::new(other))
    }
    pub fn tensor(self, other: DiagramExpr) -> Self {
        DiagramExpr::Tensor(Box::new(self), Box::new(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equation {
    pub name: String,
    pub lhs: DiagramExpr,
    pub rhs: DiagramExpr,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EquationSet {
    pub equations: Vec<Equation>,
}

impl EquationSet {
    pub fn is_empty(&self) -> bool {
        self.equations.is_empty()
    }
    pub fn len(&self) -> usize {
        self.equations.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedDiagram {
    pub name: String,
    pub expr: DiagramExpr,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theory {
    pub name: String,
    pub signature: Signature,
    pub equations: EquationSet,
    pub diagrams: Vec<NamedDiagram>,
}

impl Theory {
    pub fn diagram(&self, name: &str) -> Option<&DiagramExpr> {
        self.diagrams.iter().find(|d| d.name == name).map(|d| &d.expr)
    }
}

/// A finite monoidal category given by tables.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ModelDecl {
    pub name: String,
    pub objects: Vec<String>,
    /// `hom a b = { f, g }`
    pub homs: Vec<(String, String, Vec<String>)>,
    /// `compose f g = h` (first f, then g)
    pub composes: Vec<(String, String, String)>,
    /// `tensor x y = z` on objects or morphisms.
    pub tensors: Vec<(String, String, String)>,
    pub unit: Option<String>,
}

/// Assignment of generators of a theory to data of a model.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct InterpretationDecl {
    pub name: String,
    pub theory: String,
    pub model: String,
    /// Lax functor used by functor-box theories.
    pub functor: Option<String>,
    pub assignments: Vec<(String, String)>,
}

impl InterpretationDecl {
    pub fn map(&self) -> BTreeMap<String, String> {
        self.assignments.iter().cloned().collect()
    }
}

/// A parsed `.collage` file.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Document {
    pub theories: Vec<Theory>,
    pub models: Vec<ModelDecl>,
    pub interpretations: Vec<InterpretationDecl>,
    /// Declaration positions keyed by `block/name`, for diagnostics.
    pub positions: BTreeMap<String, Pos>,
}

impl Document {
    pub fn theory(&self, name: &str) -> Option<&Theory> {
        self.theories.iter().find(|t| t.name == name)
    }
    pub fn model(&self, name: &str) -> Option<&ModelDecl> {
        self.models.iter().find(|m| m.name == name)
    }
    pub fn interpretation(&self, name: &str) -> Option<&InterpretationDecl> {
        self.interpretations.iter().find(|m| m.name == name)
    }
    /// Finds a named diagram in any theory.
    pub fn find_diagram(&self, name: &str) -> Option<(&Theory, &DiagramExpr)> {
        self.theories
            .iter()
            .find_map(|t| t.diagram(name).map(|d| (t, d)))
    }
}
