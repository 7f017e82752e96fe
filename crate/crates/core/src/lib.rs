pub mod catalog;
pub mod classify;
pub mod error;
pub mod homology;
pub mod module;
pub mod ring;
pub mod verify;

pub use classify::{classify, ClassificationReport};
pub use error::{Error, Result};
pub use homology::{is_strongly_gorenstein_projective, SgpVerdict, SgpWitness};
pub use module::{is_isomorphic, ModElem, Module, ModuleHom, Presentation};
pub use ring::{BuildOptions, Elem, Ideal, IdempotentDecomposition, Limits, Ring, RingSpec};
