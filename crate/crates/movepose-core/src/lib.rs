//! CPU inference engine and evaluation toolkit for the MovePose
//! pose-estimation pipeline.
//!
//! The crate is split along the pipeline stages:
//!
//! * [`tensor`] — the dense f32 tensor type and convolution parameter types
//! * [`reference`] — deliberately naive kernels used as correctness oracles
//! * [`ops`] — the optimized CPU kernels (im2col convolution, transposed
//!   convolution, bilinear upsampling, batch-norm folding, activations)
//! * [`graph`] — declarative layer graphs, the MovePose and Lite network
//!   builders, forward execution, and the FLOP / receptive-field auditor
//! * [`weights`] — the binary weight-file format (byte-level; file IO lives
//!   in the companion crate)
//! * [`decode`] — coordinate-classification and heatmap decoding, flip-test
//!   fusion, and crop-to-image coordinate mapping
//! * [`pipeline`] — per-person top-down inference orchestration
//! * [`eval`] — OKS, the COCO keypoint AP suite, and PCKh
//!
//! The crate is `no_std`-compatible (`alloc` required). Disable the default
//! `std` feature and enable `libm` to build without the standard library.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

#[cfg(all(not(feature = "std"), not(feature = "libm")))]
compile_error!("movepose-core needs either the `std` or the `libm` feature for float math");

pub mod decode;
pub mod error;
pub mod eval;
pub mod graph;
mod math;
pub mod ops;
pub mod pipeline;
pub mod reference;
pub mod rng;
pub mod tensor;
pub mod weights;

pub use error::{Error, Result};
pub use tensor::{ConvParams, DeconvParams, Tensor};
