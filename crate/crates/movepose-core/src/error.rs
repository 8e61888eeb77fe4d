//! Crate-wide error type.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

/// Failure modes across kernels, graphs, decoding, and evaluation.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Tensor rank or extent mismatch. Names the operation and the axis
    /// that disagrees.
    Shape {
        op: &'static str,
        axis: &'static str,
        detail: String,
    },
    /// Invalid hyperparameter combination (groups, strides, scales, ...).
    Config {
        op: &'static str,
        detail: String,
    },
    /// Forward was requested on a graph with layers that have no weights.
    UnboundWeights {
        layer_ids: Vec<String>,
    },
    /// The weight byte stream is not a valid weight file.
    WeightFormat(WeightFormatError),
    /// A tensor required by the graph is absent from the weight set.
    MissingTensor {
        name: String,
    },
    /// A weight tensor exists but its shape disagrees with the layer spec.
    WeightShape {
        name: String,
        expected: Vec<usize>,
        found: Vec<usize>,
    },
    /// Structural graph violation: cycle, dangling input, misplaced head.
    Graph {
        detail: String,
    },
    /// Ground-truth record has no labeled keypoints; OKS is undefined.
    NoLabeledKeypoints,
    /// A result record references an image id absent from the dataset.
    UnknownImageId {
        image_id: u64,
    },
    /// Empty or degenerate input payload.
    EmptyInput {
        what: &'static str,
    },
}

/// Byte-level weight-file decoding failures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeightFormatError {
    BadMagic { found: [u8; 4] },
    BadVersion { found: u32 },
    BadDtype { name: String, dtype: u8 },
    Truncated { at: &'static str },
    NameNotUtf8,
    DuplicateTensor { name: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Shape { op, axis, detail } => {
                write!(f, "{op}: dimension mismatch on axis `{axis}`: {detail}")
            }
            Error::Config { op, detail } => write!(f, "{op}: invalid configuration: {detail}"),
            Error::UnboundWeights { layer_ids } => {
                write!(f, "graph has unbound weights for layers: {layer_ids:?}")
            }
            Error::WeightFormat(e) => write!(f, "weight file: {e}"),
            Error::MissingTensor { name } => write!(f, "weight file is missing tensor `{name}`"),
            Error::WeightShape {
                name,
                expected,
                found,
            } => write!(
                f,
                "tensor `{name}` has shape {found:?}, expected {expected:?}"
            ),
            Error::Graph { detail } => write!(f, "invalid graph: {detail}"),
            Error::NoLabeledKeypoints => {
                write!(f, "annotation has no labeled keypoints; OKS undefined")
            }
            Error::UnknownImageId { image_id } => {
                write!(f, "result references unknown image id {image_id}")
            }
            Error::EmptyInput { what } => write!(f, "empty input: {what}"),
        }
    }
}

impl fmt::Display for WeightFormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightFormatError::BadMagic { found } => {
                write!(f, "bad magic {found:?}, expected `MVPW`")
            }
            WeightFormatError::BadVersion { found } => {
                write!(f, "unsupported version {found}, expected 1")
            }
            WeightFormatError::BadDtype { name, dtype } => {
                write!(f, "tensor `{name}` has unsupported dtype {dtype}, expected 0 (f32)")
            }
            WeightFormatError::Truncated { at } => write!(f, "truncated while reading {at}"),
            WeightFormatError::NameNotUtf8 => write!(f, "tensor name is not valid UTF-8"),
            WeightFormatError::DuplicateTensor { name } => {
                write!(f, "tensor `{name}` appears more than once")
            }
        }
    }
}

impl core::error::Error for Error {}
impl core::error::Error for WeightFormatError {}

impl From<WeightFormatError> for Error {
    fn from(e: WeightFormatError) -> Self {
        Error::WeightFormat(e)
    }
}
