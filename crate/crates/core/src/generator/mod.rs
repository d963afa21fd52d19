//! Differentiable 3D-aware generator abstraction and shared latent types.
//!
//! A [`Generator`] maps latent codes to posed renders (RGB image plus depth
//! map) and exposes analytic vector-Jacobian products with respect to both
//! the latent code and the tunable generator weights, which is everything the
//! inversion engines need. The bundled [`ToyGenerator`] is a deterministic
//! volume-rendering instance sized for seconds-scale optimization loops.

pub mod toy;

pub use toy::{ToyGenerator, FAR, NEAR, WEIGHT_BIAS, WEIGHT_DECODE};

use crate::error::{Error, Result};
use crate::rng;
use ndarray::{Array1, Array2, Array3, ArrayD};
use std::collections::BTreeMap;

/// Static shape information of a generator instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneratorDims {
    pub d_z: usize,
    pub d_w: usize,
    pub num_blocks: usize,
    pub resolution: usize,
}

/// Input-space latent vector z.
#[derive(Clone, Debug, PartialEq)]
pub struct LatentZ {
    values: Array1<f64>,
}

impl LatentZ {
    pub fn new(values: Array1<f64>) -> Result<Self> {
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::Numerical("non-finite latent z".into()));
        }
        Ok(LatentZ { values })
    }

    pub fn zeros(d_z: usize) -> Self {
        LatentZ {
            values: Array1::zeros(d_z),
        }
    }

    pub fn values(&self) -> &Array1<f64> {
        &self.values
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }
}

/// Per-block style matrix w in W+, one row per generator block.
#[derive(Clone, Debug, PartialEq)]
pub struct LatentWPlus {
    styles: Array2<f64>,
}

impl LatentWPlus {
    pub fn new(styles: Array2<f64>) -> Result<Self> {
        if styles.nrows() == 0 {
            return Err(Error::ShapeMismatch("W+ needs at least one block row".into()));
        }
        if styles.iter().any(|v| !v.is_finite()) {
            return Err(Error::Numerical("non-finite W+ latent".into()));
        }
        Ok(LatentWPlus { styles })
    }

    pub fn styles(&self) -> &Array2<f64> {
        &self.styles
    }

    pub fn num_blocks(&self) -> usize {
        self.styles.nrows()
    }

    pub fn style_dim(&self) -> usize {
        self.styles.ncols()
    }

    pub fn flatten(&self) -> Array1<f64> {
        Array1::from_iter(self.styles.iter().copied())
    }

    pub fn from_flat(flat: &Array1<f64>, num_blocks: usize, style_dim: usize) -> Result<Self> {
        if flat.len() != num_blocks * style_dim {
            return Err(Error::ShapeMismatch(format!(
                "flat latent of length {} cannot fill {num_blocks}x{style_dim}",
                flat.len()
            )));
        }
        let styles = Array2::from_shape_vec((num_blocks, style_dim), flat.to_vec())
            .expect("length checked above");
        LatentWPlus::new(styles)
    }

    /// Linear interpolation `a + t (b - a)`; exact at the endpoints so that
    /// t = 0 and t = 1 return bitwise copies of the inputs.
    pub fn lerp(a: &Self, b: &Self, t: f64) -> Result<Self> {
        if a.styles.dim() != b.styles.dim() {
            return Err(Error::ShapeMismatch(format!(
                "lerp between {:?} and {:?}",
                a.styles.dim(),
                b.styles.dim()
            )));
        }
        if t == 0.0 {
            return Ok(a.clone());
        }
        if t == 1.0 {
            return Ok(b.clone());
        }
        let styles = &a.styles + &((&b.styles - &a.styles) * t);
        LatentWPlus::new(styles)
    }

    /// Squared Euclidean distance over all entries.
    pub fn squared_distance(&self, other: &Self) -> f64 {
        self.styles
            .iter()
            .zip(other.styles.iter())
            .map(|(a, b)| (a - b) * (a - b))
            .sum()
    }
}

/// Named collection of real-valued weight arrays.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct GeneratorWeights {
    arrays: BTreeMap<String, ArrayD<f64>>,
}

impl GeneratorWeights {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, name: impl Into<String>, array: ArrayD<f64>) {
        self.arrays.insert(name.into(), array);
    }

    pub fn get(&self, name: &str) -> Result<&ArrayD<f64>> {
        self.arrays
            .get(name)
            .ok_or_else(|| Error::ShapeMismatch(format!("missing weight array `{name}`")))
    }

    pub fn get_mut(&mut self, name: &str) -> Result<&mut ArrayD<f64>> {
        self.arrays
            .get_mut(name)
            .ok_or_else(|| Error::ShapeMismatch(format!("missing weight array `{name}`")))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &ArrayD<f64>)> {
        self.arrays.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn len(&self) -> usize {
        self.arrays.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrays.is_empty()
    }

    /// Same names and shapes, all entries zero.
    pub fn zeros_like(&self) -> Self {
        let arrays = self
            .arrays
            .iter()
            .map(|(k, v)| (k.clone(), ArrayD::zeros(v.raw_dim())))
            .collect();
        GeneratorWeights { arrays }
    }

    /// `self += scale * other`, matched by array name.
    pub fn axpy(&mut self, scale: f64, other: &Self) -> Result<()> {
        for (name, arr) in &mut self.arrays {
            let o = other
                .arrays
                .get(name)
                .ok_or_else(|| Error::ShapeMismatch(format!("missing weight array `{name}`")))?;
            if o.raw_dim() != arr.raw_dim() {
                return Err(Error::ShapeMismatch(format!(
                    "weight array `{name}` shape {:?} vs {:?}",
                    arr.shape(),
                    o.shape()
                )));
            }
            arr.zip_mut_with(o, |a, b| *a += scale * b);
        }
        Ok(())
    }

    pub fn all_finite(&self) -> bool {
        self.arrays.values().all(|a| a.iter().all(|v| v.is_finite()))
    }
}

/// Differentiable synthesis result.
#[derive(Clone, Debug, PartialEq)]
pub struct RenderOutput {
    /// H x W x 3 RGB values in [0, 1].
    pub image: Array3<f64>,
    /// H x W expected ray-termination depth in (near, far].
    pub depth: Array2<f64>,
}

/// Gradients returned by [`Generator::synthesize_vjp`].
#[derive(Clone, Debug)]
pub struct SynthesisGradients {
    /// Gradient with respect to the W+ style matrix.
    pub latent: Array2<f64>,
    /// Gradient with respect to the tunable weights.
    pub weights: GeneratorWeights,
}

/// The differentiable 3D-aware generator contract.
pub trait Generator: Send + Sync {
    fn dims(&self) -> GeneratorDims;

    /// (near, far) clipping planes of the renderer.
    fn depth_range(&self) -> (f64, f64);

    /// The weights the generator was constructed with.
    fn base_weights(&self) -> &GeneratorWeights;

    /// Mapping network: z to a W+ code (the same style row for every block).
    fn mapping(&self, z: &LatentZ) -> Result<LatentWPlus>;

    /// Vector-Jacobian product of [`Generator::mapping`]: given an upstream
    /// gradient of shape L x d_w, returns the gradient with respect to z.
    fn mapping_vjp(&self, z: &LatentZ, upstream: &Array2<f64>) -> Result<Array1<f64>>;

    /// Render image and depth for a latent, pose and weight set.
    fn synthesize(
        &self,
        w: &LatentWPlus,
        pose: crate::camera::CameraPose,
        weights: &GeneratorWeights,
    ) -> Result<RenderOutput>;

    /// Vector-Jacobian product of [`Generator::synthesize`] against upstream
    /// gradients for the image and the depth map.
    fn synthesize_vjp(
        &self,
        w: &LatentWPlus,
        pose: crate::camera::CameraPose,
        weights: &GeneratorWeights,
        g_image: &Array3<f64>,
        g_depth: &Array2<f64>,
    ) -> Result<SynthesisGradients>;

    /// Empirical mean of `mapping` over `num_samples` standard-normal z
    /// draws. The draws come componentwise from the ChaCha12 substream
    /// `latent-sampling` of `seed`, as Box-Muller pairs over consecutive
    /// output words, so the sequence is reproducible from the seed alone.
    fn average_latent(&self, num_samples: usize, seed: u64) -> Result<LatentWPlus> {
        if num_samples == 0 {
            return Err(Error::Config("average_latent needs num_samples >= 1".into()));
        }
        let dims = self.dims();
        let mut rng = rng::substream(seed, "latent-sampling");
        let mut acc = Array2::<f64>::zeros((dims.num_blocks, dims.d_w));
        let mut draw = vec![0.0; dims.d_z];
        for _ in 0..num_samples {
            rng::fill_standard_normal(&mut rng, &mut draw);
            let z = LatentZ::new(Array1::from_vec(draw.clone()))?;
            acc += self.mapping(&z)?.styles();
        }
        acc /= num_samples as f64;
        LatentWPlus::new(acc)
    }
}
