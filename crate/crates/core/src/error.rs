use thiserror::Error;

pub type Result<T, E = GyroError> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum GyroError {
    #[error("element {0} lies outside the model domain")]
    Domain(String),

    #[error("invalid input: {0}")]
    Input(String),

    #[error("malformed table: {0}")]
    MalformedTable(String),

    #[error("table is not a gyrogroup: {axiom} fails at {witness}")]
    TableInvalid { axiom: String, witness: String },

    #[error("table is not associative: ({a} {b}) {c} != {a} ({b} {c})")]
    NotAssociative { a: String, b: String, c: String },

    #[error(
        "cosets do not partition the table: {element} lies in the cosets of {first} and {second}"
    )]
    NotAPartition {
        element: String,
        first: String,
        second: String,
    },

    #[error("cosets have unequal sizes {sizes:?}; fixture defect")]
    UnevenCosets { sizes: Vec<usize> },

    #[error("unknown element label {0:?}")]
    UnknownElement(String),

    #[error("{path}: {source}")]
    Json {
        path: String,
        #[source]
        source: serde_json::Error,
    },

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}
