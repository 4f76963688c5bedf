//! Bounded-model reasoning for SROIQ knowledge bases.
//!
//! A bounded model is an interpretation whose domain is exactly the set of
//! named individuals of the knowledge base, each individual denoting itself.
//! Under this semantics a knowledge base is compiled into a guess-and-check
//! answer set program whose answer sets correspond one-to-one (modulo the
//! auxiliary names introduced by normalization) to the bounded models.
//!
//! The pipeline is
//!
//! ```text
//! parse -> normalize (Omega) -> translate (Pi_gen + Pi_chk) -> solve -> project
//! ```
//!
//! and every stage is paired with a direct evaluator in [`oracle`] that
//! checks models against the set-theoretic semantics.
//!
//! ```
//! use bounded_dl::{parser, reasoner::Reasoner};
//!
//! let kb = parser::parse_kb("A(a). A SubClassOf some r A.").unwrap();
//! let result = Reasoner::new().check_sat(&kb).unwrap();
//! assert!(result.is_sat());
//! ```

pub mod asp;
pub mod cli;
pub mod error;
pub mod model;
pub mod normalize;
pub mod oracle;
pub mod parser;
pub mod problems;
pub mod reasoner;
pub mod translate;

pub use error::{Error, Result};
pub use model::{
    ABoxRepresentation, Axiom, BoundedInterpretation, Concept, Fact, KnowledgeBase, Role,
    Vocabulary,
};
