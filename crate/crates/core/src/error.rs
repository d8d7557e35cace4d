use crate::model::Violation;
use crate::series::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// An operation was called with inputs outside its domain.
    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("descriptor failed validation:\n{}", render_violations(.0))]
    Invalid(Vec<Violation>),

    #[error("malformed JSON at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },

    #[error("schema error at `{path}`: {message}")]
    Schema { path: String, message: String },

    #[error("predegree {predegree} is not divisible by stabilizer degree {stabilizer}")]
    NonIntegralDegree { predegree: Rational, stabilizer: u32 },

    #[error("direct predegree formula inapplicable: orbit dimension is {dimension}, not 8")]
    DirectFormulaInapplicable { dimension: usize },

    #[error("empty monomial support")]
    EmptySupport,

    #[error("point not on curve: the support contains the constant term (0,0)")]
    PointNotOnCurve,

    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("invariant broken: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    /// True for failures to read or parse input, as opposed to well-formed
    /// but invalid data.
    pub fn is_parse_error(&self) -> bool {
        matches!(self, Error::Syntax { .. } | Error::Schema { .. } | Error::Io { .. })
    }

    pub(crate) fn from_json(err: serde_path_to_error::Error<serde_json::Error>) -> Self {
        let path = err.path().to_string();
        let inner = err.into_inner();
        match inner.classify() {
            serde_json::error::Category::Data => Error::Schema { path, message: inner.to_string() },
            _ => Error::Syntax { line: inner.line(), column: inner.column(), message: inner.to_string() },
        }
    }
}

fn render_violations(v: &[Violation]) -> String {
    v.iter().map(|x| format!("  {}: {}", x.path, x.message)).collect::<Vec<_>>().join("\n")
}

/// Deserialize JSON text, reporting the failing field path.
pub(crate) fn parse_json<T: serde::de::DeserializeOwned>(input: &str) -> Result<T> {
    let de = &mut serde_json::Deserializer::from_str(input);
    serde_path_to_error::deserialize(de).map_err(Error::from_json)
}

pub(crate) fn read_file(path: &std::path::Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.display().to_string(), source })
}
