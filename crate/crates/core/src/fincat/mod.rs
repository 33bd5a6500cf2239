//! Finite categories given by closed tables, with exhaustive law checks.

use std::fmt;

use thiserror::Error;

mod bimodular;
mod category;
mod kleisli;
mod lax;
mod monoidal;
mod profunctor;
pub mod random;
pub mod unionfind;

pub use bimodular::{
    compose_pointed_profunctors, hom_profunctor, tensor_bimodular_profunctors, tensor_partition_brute, Action, FinBimodularCategory,
    FinBimodularProfunctor, TensorProduct,
};
pub use category::{FinCategory, Morphism};
pub use kleisli::{kleisli_promonad, KleisliCategory, KleisliPair, Side};
pub use lax::{ceil_half, identity_functor, lax_mutations, FinLaxMonoidalFunctor};
pub use monoidal::{
    builtin, ceil4, chain3, cyclic, delooping, discrete_cyclic, product, thin, z2, FinMonoidalCategory, BUILTIN_MODELS,
};
pub use profunctor::{compose_profunctors, coend, coend_brute, CoendResult, Composite, FinProfunctor, Partition};

pub const MAX_OBJECTS: usize = 64;
pub const MAX_MORPHISMS: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Law {
    Totality,
    Typing,
    Unit,
    Associativity,
    Interchange,
    Functoriality,
    FunctorIdentity,
    FunctorTyping,
    Naturality,
    MuTyping,
    EpsilonTyping,
    LaxAssociativity,
    LeftUnitality,
    RightUnitality,
    StrengthAssociativity,
    StrengthUnit,
    Compatibility,
    WellDefined,
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Law::Totality => "totality",
            Law::Typing => "typing",
            Law::Unit => "unit",
            Law::Associativity => "associativity",
            Law::Interchange => "interchange",
            Law::Functoriality => "functoriality",
            Law::FunctorIdentity => "functor identity",
            Law::FunctorTyping => "functor typing",
            Law::Naturality => "naturality",
            Law::MuTyping => "laxator typing",
            Law::EpsilonTyping => "unitor typing",
            Law::LaxAssociativity => "laxator associativity",
            Law::LeftUnitality => "left unitality",
            Law::RightUnitality => "right unitality",
            Law::StrengthAssociativity => "strength associativity",
            Law::StrengthUnit => "strength unit",
            Law::Compatibility => "compatibility",
            Law::WellDefined => "well-definedness",
        };
        f.write_str(s)
    }
}

/// One failed instance of a law, with the offending tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawDiagnostic {
    pub law: Law,
    pub detail: String,
}

impl LawDiagnostic {
    pub fn new(law: Law, detail: String) -> Self {
        LawDiagnostic { law, detail }
    }
}

impl fmt::Display for LawDiagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.law, self.detail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("model too large: {objects} objects, {morphisms} morphisms")]
pub struct SizeError {
    pub objects: usize,
    pub morphisms: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("unknown name `{0}`")]
    Unknown(String),
    #[error("duplicate morphism `{0}`")]
    Duplicate(String),
    #[error("no unique identity on `{0}`")]
    NoIdentity(String),
    #[error("missing table entry: {0}")]
    Missing(String),
    #[error(transparent)]
    Size(#[from] SizeError),
    #[error("{0}")]
    Mismatch(String),
}

#[cfg(test)]
mod tests;
