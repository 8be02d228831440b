//! Presentations, minimal free resolutions and Ext modules.

pub mod ext;
pub mod presentation;
pub mod resolution;

pub use ext::{ext_module, ext_of_submodule, ext_report, is_spherical, ExtReport, SupportDim};
pub use presentation::Presentation;
pub use resolution::Resolution;
