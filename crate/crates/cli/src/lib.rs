//! File formats, certificate documents and the command implementations
//! behind the `p5free` binary.

pub mod cert;
pub mod commands;
pub mod format;

pub use cert::{Body, CertificateDoc, SCHEMA};
pub use commands::{Outcome, Status};
pub use format::{parse_graphs, write_graph, Format};
