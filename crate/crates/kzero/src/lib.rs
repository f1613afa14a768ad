//! Dataset format, certificate pipeline and report rendering for the `kzero`
//! command-line tool.

pub mod certificate;
pub mod input;
pub mod pipeline;

pub use certificate::{Certificate, Check, Provenance, Verdict};
pub use input::{Dataset, InputError};
pub use pipeline::run_certificate;
