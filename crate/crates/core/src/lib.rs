//! Multi-view and multi-latent inversion for 3D-aware generative image models.
//!
//! Given several posed target views of one subject, this crate recovers
//! latent codes (and optionally fine-tuned generator weights) that
//! re-synthesize the subject consistently from any viewing angle.
//!
//! The pieces:
//! - [`camera`]: orbit poses, look-at extrinsics, angle arithmetic, and
//!   selection of evenly spaced target frames from a posed sequence.
//! - [`generator`]: the differentiable generator abstraction plus a bundled
//!   toy volume-rendering generator (image + depth, with analytic gradients
//!   w.r.t. both latents and weights).
//! - [`losses`]: pixel, perceptual, identity and latent-regularization losses
//!   with pluggable feature extractors.
//! - [`inversion`]: single-view, multi-view and multi-latent optimization,
//!   pivotal tuning, and the three consistency regularizers.
//! - [`inference`]: view synthesis by camera-angle-dependent latent
//!   interpolation.
//! - [`metrics`]: MS-SSIM, identity similarity, rotation-sweep evaluation,
//!   depth consistency and latent-distance diagnostics.
//! - [`editing`]: PCA directions over the latent space and uniform edits of a
//!   multi-latent set.
//! - [`pipeline`]: experiment orchestration, synthetic data, checkpoints,
//!   reports, and the CLI entry points.

pub mod camera;
pub mod container;
pub mod editing;
pub mod error;
pub mod generator;
pub mod inference;
pub mod inversion;
pub mod losses;
pub mod metrics;
pub mod pipeline;
pub mod rng;

pub use error::{Error, Result};
