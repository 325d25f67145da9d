//! Serialization, file formats and CLI renderings.

mod choice_spec;
mod graph;
mod rays;
mod record;
mod report;

pub use choice_spec::{choice_spec_parse, validate_choice};
pub use graph::{orthogonality_dot, orthogonality_edges};
pub use rays::{
    parse_ray_vectors, read_ray_vectors, validate_ray_vectors, OrthogonalityReport, RayVector, RayVectorFile, Violation,
};
pub use record::{KsSetRecord, Provenance};
pub use report::{certificate_json, certificate_text, tables_json, tables_text};
