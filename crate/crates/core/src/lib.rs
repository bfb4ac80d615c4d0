pub mod analysis;
pub mod cli;
pub mod code;
pub mod codespec;
pub mod constructions;
pub mod error;
pub mod field;
pub mod matrix;
mod nt;
pub mod poly;
pub mod text;

pub use analysis::{classify, CodeClass, CodeReport};
pub use code::{lagrange_weights, CaseTag, TgrsCode};
pub use error::{Error, Result};
pub use field::{embed, make_field, Embedding, Field, FieldElement};
pub use matrix::Matrix;
pub use poly::{gcd, Poly};
