use std::collections::BTreeMap;

use super::{Law, LawDiagnostic, SizeError, MAX_MORPHISMS, MAX_OBJECTS};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Morphism {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

/// A finite category given by closed tables. Composition is diagrammatic:
/// `compose[(f, g)]` is `f` followed by `g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinCategory {
    pub objects: Vec<String>,
    pub morphisms: Vec<Morphism>,
    pub identity: Vec<usize>,
    pub compose: BTreeMap<(usize, usize), usize>,
}

impl FinCategory {
    pub fn check_size(&self) -> Result<(), SizeError> {
        if self.objects.len() > MAX_OBJECTS || self.morphisms.len() > MAX_MORPHISMS {
            return Err(SizeError {
                objects: self.objects.len(),
                morphisms: self.morphisms.len(),
            });
        }
        Ok(())
    }

    /// The category with one object and only its identity.
    pub fn unit() -> Self {
        FinCategory {
            objects: vec!["*".into()],
            morphisms: vec![Morphism {
                name: "id".into(),
                src: 0,
                tgt: 0,
            }],
            identity: vec![0],
            compose: BTreeMap::from([((0, 0), 0)]),
        }
    }

    pub fn object(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn morphism(&self, name: &str) -> Option<usize> {
        self.morphisms.iter().position(|m| m.name == name)
    }

    pub fn src(&self, f: usize) -> usize {
        self.morphisms[f].src
    }

    pub fn tgt(&self, f: usize) -> usize {
        self.morphisms[f].tgt
    }

    pub fn id(&self, a: usize) -> usize {
        self.identity[a]
    }

    pub fn name(&self, f: usize) -> &str {
        &self.morphisms[f].name
    }

    pub fn comp(&self, f: usize, g: usize) -> Option<usize> {
        self.compose.get(&(f, g)).copied()
    }

    /// Composite of a non-empty chain, `None` if some entry is missing.
    pub fn comp_all(&self, fs: &[usize]) -> Option<usize> {
        let (first, rest) = fs.split_first()?;
        rest.iter().try_fold(*first, |acc, &g| self.comp(acc, g))
    }

    pub fn hom(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.morphisms.len())
            .filter(|&f| self.morphisms[f].src == a && self.morphisms[f].tgt == b)
            .collect()
    }

    pub fn is_thin(&self) -> bool {
        let mut seen = BTreeMap::new();
        self.morphisms
            .iter()
            .all(|m| seen.insert((m.src, m.tgt), ()).is_none())
    }

    /// Totality, typing, unit and associativity of the composition table.
    pub fn check(&self) -> Vec<LawDiagnostic> {
        let mut out = Vec::new();
        let n = self.morphisms.len();
        for (a, &i) in self.identity.iter().enumerate() {
            if self.src(i) != a || self.tgt(i) != a {
                out.push(LawDiagnostic::new(Law::Typing, format!("identity of {}", self.objects[a])));
            }
        }
        for f in 0..n {
            for g in 0..n {
                if self.tgt(f) != self.src(g) {
                    continue;
                }
                match self.comp(f, g) {
                    None => out.push(LawDiagnostic::new(
                        Law::Totality,
                        format!("composite of {} and {}", self.name(f), self.name(g)),
                    )),
                    Some(h) if self.src(h) != self.src(f) || self.tgt(h) != self.tgt(g) => {
                        out.push(LawDiagnostic::new(
                            Law::Typing,
                            format!("composite of {} and {}", self.name(f), self.name(g)),
                        ))
                    }
                    _ => {}
                }
            }
            if self.comp(self.id(self.src(f)), f) != Some(f) || self.comp(f, self.id(self.tgt(f))) != Some(f) {
                out.push(LawDiagnostic::new(Law::Unit, format!("identities around {}", self.name(f))));
            }
        }
        if !out.is_empty() {
            return out;
        }
        for f in 0..n {
            for g in self.hom_from(self.tgt(f)) {
                for h in self.hom_from(self.tgt(g)) {
                    let l = self.comp(self.comp(f, g).unwrap(), h);
                    let r = self.comp(f, self.comp(g, h).unwrap());
                    if l != r {
                        out.push(LawDiagnostic::new(
                            Law::Associativity,
                            format!("({} ; {}) ; {}", self.name(f), self.name(g), self.name(h)),
                        ));
                    }
                }
            }
        }
        out
    }

    pub fn hom_from(&self, a: usize) -> Vec<usize> {
        (0..self.morphisms.len())
            .filter(|&f| self.morphisms[f].src == a)
            .collect()
    }

    pub fn hom_to(&self, b: usize) -> Vec<usize> {
        (0..self.morphisms.len())
            .filter(|&f| self.morphisms[f].tgt == b)
            .collect()
    }
}
