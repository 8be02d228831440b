//! Closed-form generating functions for generic arrangements and the
//! harness comparing them with computed modules.

pub mod gf;
pub mod verify;

pub use gf::{closed_form, generic_ext_series, q_rank3, ClosedForm, Expansion, GfPoly, RationalGF, DEFAULT_TRUNCATION};
pub use verify::{
    verify_deletion_restriction, verify_generic_theorem, verify_generic_theorem_with, DeletionReport, GenericCase,
    GenericReport, Sequence,
};
