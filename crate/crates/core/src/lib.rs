//! Collages of string diagrams: free 2-categories from signatures, the
//! collage of a bimodular graph, functor boxes and internal diagrams, with a
//! finite backend of pointed bimodular profunctors to evaluate them in.

pub mod diagram;
pub mod presentations;
pub mod semantics;
pub mod rewrite;
pub mod fincat;
pub mod oracle;
pub mod render;
pub mod sig;
