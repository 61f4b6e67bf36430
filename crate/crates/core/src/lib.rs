//! Generators and relations for the algebra of orthogonal matrix
//! invariants: symbolic `σ_t` rings, their normal forms, the relation
//! elements `σ_{t,r}` built from a mixed quiver, and exact evaluation on
//! concrete matrix tuples.

pub mod error;
pub mod eval;
pub mod expansion;
pub mod expr;
pub mod field;
pub mod generators;
pub mod gf;
pub mod linalg;
pub mod linword;
pub mod matrix;
mod memo;
pub mod poly;
pub mod quiver;
pub mod sigma;
pub mod syntax;
pub mod word;

pub use error::{Error, Result};
pub use expr::{ArgExpr, SigmaExpr};
pub use field::{Field, FieldElement, Scalar};
pub use linword::LinWord;
pub use sigma::{normalize, SigmaGen, SigmaPoly};
pub use syntax::Alphabet;
pub use word::{Letter, NecklaceClass, Word};
