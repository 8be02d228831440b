//! Logarithmic derivations and forms of central hyperplane arrangements.
//!
//! The crate is layered: exact fields and polynomials, a Gröbner engine for
//! graded submodules, homological algebra (resolutions, Ext), and on top the
//! arrangement modules, freeness criteria, and the generating functions of
//! generic arrangements.

pub mod arrangement;
pub mod criteria;
pub mod error;
pub mod field;
pub mod groebner;
pub mod homalg;
pub mod laurent;
pub mod limits;
pub mod linalg;
pub mod module;
pub mod monomial;
pub mod oracle;
pub mod par;
pub mod poly;
pub mod report;
pub mod series;

pub use arrangement::{Arrangement, LogModule, Role};
pub use error::{Error, Result};
pub use field::{Field, FieldSpec, PrimeField, RationalField};
pub use laurent::{HilbertSeries, LaurentPoly};
pub use module::{FreeVector, GradedFreeModule};
pub use monomial::{Monomial, MonomialOrder};
pub use poly::{PolyRing, Polynomial};
