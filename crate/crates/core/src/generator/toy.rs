//! Deterministic toy generator: latent-decoded Gaussian density blobs
//! rendered by emission-absorption volume marching.
//!
//! The W+ rows are averaged with fixed per-row weights, linearly decoded into
//! parameters of five anisotropic blobs (center, axes, RGB albedo), and each
//! pixel marches 32 stratum-center samples between the near and far planes.
//! Depth is the transmittance-weighted expected sample depth, with leftover
//! transmittance assigned the far plane. The decode matrix and bias are the
//! tunable weights; everything is differentiable in both the latent and the
//! weights through the hand-written backward pass below.

use super::{
    Generator, GeneratorDims, GeneratorWeights, LatentWPlus, LatentZ, RenderOutput,
    SynthesisGradients,
};
use crate::camera::{CameraBasis, CameraPose};
use crate::error::{Error, Result};
use crate::rng;
use ndarray::{Array1, Array2, Array3, ArrayD};
use rand_chacha::rand_core::RngCore;
use rayon::prelude::*;

pub const D_Z: usize = 16;
pub const D_W: usize = 16;
pub const NUM_BLOCKS: usize = 4;
pub const RESOLUTION: usize = 64;
pub const NEAR: f64 = 1.7;
pub const FAR: f64 = 3.7;

/// Name of the decode matrix array inside [`GeneratorWeights`].
pub const WEIGHT_DECODE: &str = "decode_weight";
/// Name of the decode bias array inside [`GeneratorWeights`].
pub const WEIGHT_BIAS: &str = "decode_bias";

const HIDDEN: usize = 32;
const NUM_BLOBS: usize = 5;
const SAMPLES_PER_RAY: usize = 32;
const BLOB_PARAMS: usize = 9; // center xyz, axes xyz, albedo rgb
const PARAM_DIM: usize = NUM_BLOBS * BLOB_PARAMS;
const ROW_WEIGHTS: [f64; NUM_BLOCKS] = [0.4, 0.3, 0.2, 0.1];
const CENTER_RANGE: f64 = 0.55;
const AXIS_MIN: f64 = 0.06;
const AXIS_MAX: f64 = 0.55;
const DENSITY_GAIN: f64 = 14.0;
const COLOR_EPS: f64 = 1e-6;
const TRANSMITTANCE_FLOOR: f64 = 1e-8;
// A blob is skipped on a ray when its best exponent -q/2 stays below -40
// (contribution under exp(-40) ~ 4e-18, beneath gradient-check noise).
const EXP_CUTOFF: f64 = 40.0;
const STEP: f64 = (FAR - NEAR) / SAMPLES_PER_RAY as f64;
const BAND_ROWS: usize = 8;

/// Bundled desk-scale generator (d_z = 16, d_w = 16, L = 4, 64x64 output).
pub struct ToyGenerator {
    seed: u64,
    map_w1: Array2<f64>, // HIDDEN x D_Z
    map_b1: Array1<f64>,
    map_w2: Array2<f64>, // D_W x HIDDEN
    map_b2: Array1<f64>,
    base_weights: GeneratorWeights,
}

impl ToyGenerator {
    /// Build the frozen mapping network and the initial decode weights from
    /// named substreams of `seed`.
    pub fn new(seed: u64) -> Self {
        let mut rm = rng::substream(seed, "toy-mapping");
        let map_w1 = random_matrix(&mut rm, HIDDEN, D_Z, 1.0 / (D_Z as f64).sqrt());
        let map_b1 = random_vector(&mut rm, HIDDEN, 0.5);
        let map_w2 = random_matrix(&mut rm, D_W, HIDDEN, 0.35 / (HIDDEN as f64).sqrt());
        let map_b2 = random_vector(&mut rm, D_W, 0.3);

        let mut rd = rng::substream(seed, "toy-decode");
        let decode = random_matrix(&mut rd, PARAM_DIM, D_W, 1.1 / (D_W as f64).sqrt());
        let bias = random_vector(&mut rd, PARAM_DIM, 0.9);
        let mut base_weights = GeneratorWeights::new();
        base_weights.insert(WEIGHT_DECODE, decode.into_dyn());
        base_weights.insert(WEIGHT_BIAS, bias.into_dyn());

        ToyGenerator {
            seed,
            map_w1,
            map_b1,
            map_w2,
            map_b2,
            base_weights,
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    fn check_latent(&self, w: &LatentWPlus) -> Result<()> {
        if w.num_blocks() != NUM_BLOCKS || w.style_dim() != D_W {
            return Err(Error::ShapeMismatch(format!(
                "latent {}x{} does not match generator {NUM_BLOCKS}x{D_W}",
                w.num_blocks(),
                w.style_dim()
            )));
        }
        Ok(())
    }

    fn decode_blobs(&self, w: &LatentWPlus, weights: &GeneratorWeights) -> Result<Blobs> {
        self.check_latent(w)?;
        let decode = as_matrix(weights.get(WEIGHT_DECODE)?, PARAM_DIM, D_W)?;
        let bias = as_vector(weights.get(WEIGHT_BIAS)?, PARAM_DIM)?;

        let styles = w.styles();
        let mut u_bar = [0.0; D_W];
        for (l, &alpha) in ROW_WEIGHTS.iter().enumerate() {
            for (d, u) in u_bar.iter_mut().enumerate() {
                *u += alpha * styles[(l, d)];
            }
        }

        let mut p_raw = [0.0; PARAM_DIM];
        for (j, p) in p_raw.iter_mut().enumerate() {
            let mut acc = bias[j];
            for (d, u) in u_bar.iter().enumerate() {
                acc += decode[(j, d)] * u;
            }
            *p = acc;
        }

        let mut blobs = Blobs {
            u_bar,
            p_raw,
            center: [[0.0; 3]; NUM_BLOBS],
            axes: [[0.0; 3]; NUM_BLOBS],
            albedo: [[0.0; 3]; NUM_BLOBS],
        };
        for k in 0..NUM_BLOBS {
            for d in 0..3 {
                blobs.center[k][d] = CENTER_RANGE * p_raw[k * BLOB_PARAMS + d].tanh();
                blobs.axes[k][d] =
                    AXIS_MIN + (AXIS_MAX - AXIS_MIN) * sigmoid(p_raw[k * BLOB_PARAMS + 3 + d]);
                blobs.albedo[k][d] = sigmoid(p_raw[k * BLOB_PARAMS + 6 + d]);
            }
        }
        Ok(blobs)
    }
}

impl Generator for ToyGenerator {
    fn dims(&self) -> GeneratorDims {
        GeneratorDims {
            d_z: D_Z,
            d_w: D_W,
            num_blocks: NUM_BLOCKS,
            resolution: RESOLUTION,
        }
    }

    fn depth_range(&self) -> (f64, f64) {
        (NEAR, FAR)
    }

    fn base_weights(&self) -> &GeneratorWeights {
        &self.base_weights
    }

    fn mapping(&self, z: &LatentZ) -> Result<LatentWPlus> {
        if z.dim() != D_Z {
            return Err(Error::ShapeMismatch(format!(
                "latent z of dimension {} does not match generator d_z {D_Z}",
                z.dim()
            )));
        }
        let h = self.hidden_activations(z);
        let mut row = self.map_b2.clone();
        for (i, r) in row.iter_mut().enumerate() {
            for (j, hj) in h.iter().enumerate() {
                *r += self.map_w2[(i, j)] * hj;
            }
        }
        let mut styles = Array2::zeros((NUM_BLOCKS, D_W));
        for l in 0..NUM_BLOCKS {
            for d in 0..D_W {
                styles[(l, d)] = row[d];
            }
        }
        LatentWPlus::new(styles)
    }

    fn mapping_vjp(&self, z: &LatentZ, upstream: &Array2<f64>) -> Result<Array1<f64>> {
        if z.dim() != D_Z {
            return Err(Error::ShapeMismatch(format!(
                "latent z of dimension {} does not match generator d_z {D_Z}",
                z.dim()
            )));
        }
        if upstream.dim() != (NUM_BLOCKS, D_W) {
            return Err(Error::ShapeMismatch(format!(
                "upstream {:?} does not match W+ shape ({NUM_BLOCKS}, {D_W})",
                upstream.dim()
            )));
        }
        // All rows share one style vector, so row gradients add up.
        let mut g_row = [0.0; D_W];
        for l in 0..NUM_BLOCKS {
            for (d, g) in g_row.iter_mut().enumerate() {
                *g += upstream[(l, d)];
            }
        }
        let h = self.hidden_activations(z);
        let mut g_h = vec![0.0; HIDDEN];
        for (j, gh) in g_h.iter_mut().enumerate() {
            let mut acc = 0.0;
            for (i, gr) in g_row.iter().enumerate() {
                acc += self.map_w2[(i, j)] * gr;
            }
            *gh = acc * (1.0 - h[j] * h[j]);
        }
        let mut g_z = Array1::zeros(D_Z);
        for (j, gh) in g_h.iter().enumerate() {
            for d in 0..D_Z {
                g_z[d] += self.map_w1[(j, d)] * gh;
            }
        }
        Ok(g_z)
    }

    fn synthesize(
        &self,
        w: &LatentWPlus,
        pose: CameraPose,
        weights: &GeneratorWeights,
    ) -> Result<RenderOutput> {
        let blobs = self.decode_blobs(w, weights)?;
        let basis = pose.basis();
        let tan_half = (pose.fov() * 0.5).tan();

        let bands: Vec<(Vec<f64>, Vec<f64>)> = (0..RESOLUTION / BAND_ROWS)
            .into_par_iter()
            .map(|band| {
                let mut image = vec![0.0; BAND_ROWS * RESOLUTION * 3];
                let mut depth = vec![0.0; BAND_ROWS * RESOLUTION];
                for local in 0..BAND_ROWS {
                    let row = band * BAND_ROWS + local;
                    for col in 0..RESOLUTION {
                        let (o, dir) = pixel_ray(&basis, tan_half, row, col);
                        let trace = trace_ray(&blobs, o, dir);
                        let px = (local * RESOLUTION + col) * 3;
                        image[px] = trace.rgb[0];
                        image[px + 1] = trace.rgb[1];
                        image[px + 2] = trace.rgb[2];
                        depth[local * RESOLUTION + col] = trace.depth;
                    }
                }
                (image, depth)
            })
            .collect();

        let mut image = Array3::zeros((RESOLUTION, RESOLUTION, 3));
        let mut depth = Array2::zeros((RESOLUTION, RESOLUTION));
        for (band, (img_band, depth_band)) in bands.into_iter().enumerate() {
            for local in 0..BAND_ROWS {
                let row = band * BAND_ROWS + local;
                for col in 0..RESOLUTION {
                    let px = (local * RESOLUTION + col) * 3;
                    image[(row, col, 0)] = img_band[px];
                    image[(row, col, 1)] = img_band[px + 1];
                    image[(row, col, 2)] = img_band[px + 2];
                    depth[(row, col)] = depth_band[local * RESOLUTION + col];
                }
            }
        }
        Ok(RenderOutput { image, depth })
    }

    fn synthesize_vjp(
        &self,
        w: &LatentWPlus,
        pose: CameraPose,
        weights: &GeneratorWeights,
        g_image: &Array3<f64>,
        g_depth: &Array2<f64>,
    ) -> Result<SynthesisGradients> {
        if g_image.dim() != (RESOLUTION, RESOLUTION, 3) || g_depth.dim() != (RESOLUTION, RESOLUTION)
        {
            return Err(Error::ShapeMismatch(format!(
                "upstream gradients {:?}/{:?} do not match {RESOLUTION}x{RESOLUTION}",
                g_image.dim(),
                g_depth.dim()
            )));
        }
        let blobs = self.decode_blobs(w, weights)?;
        let basis = pose.basis();
        let tan_half = (pose.fov() * 0.5).tan();

        let band_grads: Vec<[f64; PARAM_DIM]> = (0..RESOLUTION / BAND_ROWS)
            .into_par_iter()
            .map(|band| {
                let mut g_act = [0.0; PARAM_DIM];
                for local in 0..BAND_ROWS {
                    let row = band * BAND_ROWS + local;
                    for col in 0..RESOLUTION {
                        let (o, dir) = pixel_ray(&basis, tan_half, row, col);
                        let g_rgb = [
                            g_image[(row, col, 0)],
                            g_image[(row, col, 1)],
                            g_image[(row, col, 2)],
                        ];
                        trace_ray_grad(&blobs, o, dir, g_rgb, g_depth[(row, col)], &mut g_act);
                    }
                }
                g_act
            })
            .collect();

        // Fixed band order keeps the reduction deterministic.
        let mut g_act = [0.0; PARAM_DIM];
        for band in band_grads {
            for (a, b) in g_act.iter_mut().zip(band.iter()) {
                *a += b;
            }
        }

        // Chain through the parameter activations.
        let mut g_p = [0.0; PARAM_DIM];
        for j in 0..PARAM_DIM {
            let p = blobs.p_raw[j];
            let dact = match j % BLOB_PARAMS {
                0..=2 => {
                    let t = p.tanh();
                    CENTER_RANGE * (1.0 - t * t)
                }
                3..=5 => {
                    let s = sigmoid(p);
                    (AXIS_MAX - AXIS_MIN) * s * (1.0 - s)
                }
                _ => {
                    let s = sigmoid(p);
                    s * (1.0 - s)
                }
            };
            g_p[j] = g_act[j] * dact;
        }

        // Linear decode backward.
        let decode = as_matrix(weights.get(WEIGHT_DECODE)?, PARAM_DIM, D_W)?;
        let mut g_decode = Array2::<f64>::zeros((PARAM_DIM, D_W));
        let mut g_bias = Array1::<f64>::zeros(PARAM_DIM);
        let mut g_ubar = [0.0; D_W];
        for j in 0..PARAM_DIM {
            g_bias[j] = g_p[j];
            for d in 0..D_W {
                g_decode[(j, d)] = g_p[j] * blobs.u_bar[d];
                g_ubar[d] += decode[(j, d)] * g_p[j];
            }
        }
        let mut g_latent = Array2::<f64>::zeros((NUM_BLOCKS, D_W));
        for (l, &alpha) in ROW_WEIGHTS.iter().enumerate() {
            for d in 0..D_W {
                g_latent[(l, d)] = alpha * g_ubar[d];
            }
        }

        let mut g_weights = GeneratorWeights::new();
        g_weights.insert(WEIGHT_DECODE, g_decode.into_dyn());
        g_weights.insert(WEIGHT_BIAS, g_bias.into_dyn());
        Ok(SynthesisGradients {
            latent: g_latent,
            weights: g_weights,
        })
    }
}

impl ToyGenerator {
    fn hidden_activations(&self, z: &LatentZ) -> Vec<f64> {
        let zv = z.values();
        (0..HIDDEN)
            .map(|j| {
                let mut acc = self.map_b1[j];
                for d in 0..D_Z {
                    acc += self.map_w1[(j, d)] * zv[d];
                }
                acc.tanh()
            })
            .collect()
    }
}

/// Decoded blob parameters plus the intermediates the backward pass reuses.
struct Blobs {
    u_bar: [f64; D_W],
    p_raw: [f64; PARAM_DIM],
    center: [[f64; 3]; NUM_BLOBS],
    axes: [[f64; 3]; NUM_BLOBS],
    albedo: [[f64; 3]; NUM_BLOBS],
}

struct RayTrace {
    any_active: bool,
    active: [bool; NUM_BLOBS],
    g: [[f64; NUM_BLOBS]; SAMPLES_PER_RAY],
    y: [f64; SAMPLES_PER_RAY],
    alpha: [f64; SAMPLES_PER_RAY],
    trans: [f64; SAMPLES_PER_RAY + 1],
    floored: [bool; SAMPLES_PER_RAY],
    color: [[f64; 3]; SAMPLES_PER_RAY],
    den: [f64; SAMPLES_PER_RAY],
    quad: [[f64; 3]; NUM_BLOBS],
    rgb: [f64; 3],
    depth: f64,
}

fn pixel_ray(basis: &CameraBasis, tan_half: f64, row: usize, col: usize) -> ([f64; 3], [f64; 3]) {
    let ndc_x = ((col as f64 + 0.5) / RESOLUTION as f64) * 2.0 - 1.0;
    let ndc_y = ((row as f64 + 0.5) / RESOLUTION as f64) * 2.0 - 1.0;
    let sx = ndc_x * tan_half;
    let sy = ndc_y * tan_half;
    let mut dir = [0.0; 3];
    for d in 0..3 {
        dir[d] = basis.right[d] * sx + basis.down[d] * sy + basis.forward[d];
    }
    let norm = (dir[0] * dir[0] + dir[1] * dir[1] + dir[2] * dir[2]).sqrt();
    for v in dir.iter_mut() {
        *v /= norm;
    }
    (basis.eye, dir)
}

fn sample_depth(s: usize) -> f64 {
    NEAR + (s as f64 + 0.5) * STEP
}

fn trace_ray(blobs: &Blobs, origin: [f64; 3], dir: [f64; 3]) -> RayTrace {
    let mut tr = RayTrace {
        any_active: false,
        active: [false; NUM_BLOBS],
        g: [[0.0; NUM_BLOBS]; SAMPLES_PER_RAY],
        y: [0.0; SAMPLES_PER_RAY],
        alpha: [0.0; SAMPLES_PER_RAY],
        trans: [1.0; SAMPLES_PER_RAY + 1],
        floored: [false; SAMPLES_PER_RAY],
        color: [[0.0; 3]; SAMPLES_PER_RAY],
        den: [COLOR_EPS; SAMPLES_PER_RAY],
        quad: [[0.0; 3]; NUM_BLOBS],
        rgb: [0.0; 3],
        depth: FAR,
    };

    // Per-blob quadratic q(t) = A t^2 + B t + C of the Mahalanobis distance
    // along the ray; blobs whose minimum exponent is negligible are skipped
    // for the whole ray.
    for k in 0..NUM_BLOBS {
        let mut a = 0.0;
        let mut b = 0.0;
        let mut c = 0.0;
        for d in 0..3 {
            let inv = 1.0 / blobs.axes[k][d];
            let u = dir[d] * inv;
            let oc = (origin[d] - blobs.center[k][d]) * inv;
            a += u * u;
            b += 2.0 * u * oc;
            c += oc * oc;
        }
        tr.quad[k] = [a, b, c];
        let t_min = (-b / (2.0 * a)).clamp(NEAR, FAR);
        let q_min = (a * t_min + b) * t_min + c;
        if 0.5 * q_min <= EXP_CUTOFF {
            tr.active[k] = true;
            tr.any_active = true;
        }
    }
    if !tr.any_active {
        return tr;
    }

    let mut depth_sum = 0.0;
    for s in 0..SAMPLES_PER_RAY {
        let t = sample_depth(s);
        let mut y = 0.0;
        let mut num = [0.0; 3];
        let mut den = COLOR_EPS;
        for k in 0..NUM_BLOBS {
            if !tr.active[k] {
                continue;
            }
            let q = (tr.quad[k][0] * t + tr.quad[k][1]) * t + tr.quad[k][2];
            let e = (-0.5 * q).exp();
            tr.g[s][k] = e;
            y += e;
            den += e;
            for d in 0..3 {
                num[d] += blobs.albedo[k][d] * e;
            }
        }
        y *= DENSITY_GAIN;
        tr.y[s] = y;
        let sigma = shifted_softplus(y);
        let alpha = -(-sigma * STEP).exp_m1();
        tr.alpha[s] = alpha;
        tr.den[s] = den;
        for d in 0..3 {
            tr.color[s][d] = num[d] / den;
        }

        let prev = tr.trans[s];
        let raw = prev * (1.0 - alpha);
        let next = if raw < TRANSMITTANCE_FLOOR {
            tr.floored[s] = true;
            TRANSMITTANCE_FLOOR
        } else {
            raw
        };
        tr.trans[s + 1] = next;
        let w_s = prev - next;
        for d in 0..3 {
            tr.rgb[d] += w_s * tr.color[s][d];
        }
        depth_sum += w_s * t;
    }
    tr.depth = (depth_sum + tr.trans[SAMPLES_PER_RAY] * FAR).min(FAR);
    tr
}

fn trace_ray_grad(
    blobs: &Blobs,
    origin: [f64; 3],
    dir: [f64; 3],
    g_rgb: [f64; 3],
    g_depth: f64,
    g_act: &mut [f64; PARAM_DIM],
) {
    let tr = trace_ray(blobs, origin, dir);
    if !tr.any_active {
        return;
    }

    let mut g_trans = [0.0; SAMPLES_PER_RAY + 1];
    for s in 0..SAMPLES_PER_RAY {
        let w_s = tr.trans[s] - tr.trans[s + 1];
        let _ = w_s;
        let g_ws = g_rgb[0] * tr.color[s][0]
            + g_rgb[1] * tr.color[s][1]
            + g_rgb[2] * tr.color[s][2]
            + g_depth * sample_depth(s);
        g_trans[s] += g_ws;
        g_trans[s + 1] -= g_ws;
    }
    g_trans[SAMPLES_PER_RAY] += g_depth * FAR;

    let mut g_quad = [[0.0; 3]; NUM_BLOBS]; // dA, dB, dC accumulators
    let mut g_albedo = [[0.0; 3]; NUM_BLOBS];
    for s in (0..SAMPLES_PER_RAY).rev() {
        let t = sample_depth(s);
        let g_alpha = if tr.floored[s] {
            0.0
        } else {
            g_trans[s] += g_trans[s + 1] * (1.0 - tr.alpha[s]);
            -tr.trans[s] * g_trans[s + 1]
        };

        let w_s = tr.trans[s] - tr.trans[s + 1];
        let den = tr.den[s];
        let g_c = [g_rgb[0] * w_s, g_rgb[1] * w_s, g_rgb[2] * w_s];
        let g_num = [g_c[0] / den, g_c[1] / den, g_c[2] / den];
        // num = color * den, so g_den = -sum(g_c * color) / den.
        let g_den = -(g_c[0] * tr.color[s][0] + g_c[1] * tr.color[s][1] + g_c[2] * tr.color[s][2])
            / den;

        let g_sigma = g_alpha * STEP * (1.0 - tr.alpha[s]);
        let g_y = g_sigma * sigmoid(tr.y[s]);

        for k in 0..NUM_BLOBS {
            if !tr.active[k] {
                continue;
            }
            let e = tr.g[s][k];
            if e == 0.0 {
                continue;
            }
            let g_e = DENSITY_GAIN * g_y
                + g_num[0] * blobs.albedo[k][0]
                + g_num[1] * blobs.albedo[k][1]
                + g_num[2] * blobs.albedo[k][2]
                + g_den;
            for d in 0..3 {
                g_albedo[k][d] += g_num[d] * e;
            }
            let g_q = -0.5 * e * g_e;
            g_quad[k][0] += g_q * t * t;
            g_quad[k][1] += g_q * t;
            g_quad[k][2] += g_q;
        }
    }

    for k in 0..NUM_BLOBS {
        if !tr.active[k] {
            continue;
        }
        let base = k * BLOB_PARAMS;
        for d in 0..3 {
            let ax = blobs.axes[k][d];
            let inv = 1.0 / ax;
            let u = dir[d];
            let oc = origin[d] - blobs.center[k][d];
            let inv2 = inv * inv;
            let inv3 = inv2 * inv;
            // A = (u/ax)^2, B = 2 u oc / ax^2, C = (oc/ax)^2 summed over d.
            let d_center = g_quad[k][1] * (-2.0 * u * inv2) + g_quad[k][2] * (-2.0 * oc * inv2);
            let d_axis = g_quad[k][0] * (-2.0 * u * u * inv3)
                + g_quad[k][1] * (-4.0 * u * oc * inv3)
                + g_quad[k][2] * (-2.0 * oc * oc * inv3);
            g_act[base + d] += d_center;
            g_act[base + 3 + d] += d_axis;
            g_act[base + 6 + d] += g_albedo[k][d];
        }
    }
}

/// softplus(y) - ln 2, exactly zero at y = 0; y is always >= 0 here.
fn shifted_softplus(y: f64) -> f64 {
    if y == 0.0 {
        0.0
    } else {
        y + (-y).exp().ln_1p() - std::f64::consts::LN_2
    }
}

fn sigmoid(x: f64) -> f64 {
    if x >= 0.0 {
        1.0 / (1.0 + (-x).exp())
    } else {
        let e = x.exp();
        e / (1.0 + e)
    }
}

fn random_matrix(rng: &mut impl RngCore, rows: usize, cols: usize, scale: f64) -> Array2<f64> {
    let mut data = vec![0.0; rows * cols];
    rng::fill_standard_normal(rng, &mut data);
    for v in data.iter_mut() {
        *v *= scale;
    }
    Array2::from_shape_vec((rows, cols), data).expect("size matches")
}

fn random_vector(rng: &mut impl RngCore, len: usize, scale: f64) -> Array1<f64> {
    let mut data = vec![0.0; len];
    rng::fill_standard_normal(rng, &mut data);
    for v in data.iter_mut() {
        *v *= scale;
    }
    Array1::from_vec(data)
}

fn as_matrix(a: &ArrayD<f64>, rows: usize, cols: usize) -> Result<ndarray::ArrayView2<'_, f64>> {
    a.view().into_dimensionality::<ndarray::Ix2>().ok().filter(|m| m.dim() == (rows, cols)).ok_or_else(|| {
        Error::ShapeMismatch(format!(
            "expected {rows}x{cols} weight array, got {:?}",
            a.shape()
        ))
    })
}

fn as_vector(a: &ArrayD<f64>, len: usize) -> Result<ndarray::ArrayView1<'_, f64>> {
    a.view().into_dimensionality::<ndarray::Ix1>().ok().filter(|v| v.len() == len).ok_or_else(|| {
        Error::ShapeMismatch(format!(
            "expected length-{len} weight array, got {:?}",
            a.shape()
        ))
    })
}

/// Hand-built weights decoding to an explicit blob list regardless of the
/// latent (decode matrix zero); used by tests that need controlled scenes.
#[doc(hidden)]
pub fn weights_for_blobs(blob_list: &[([f64; 3], [f64; 3], [f64; 3])]) -> GeneratorWeights {
    assert_eq!(blob_list.len(), NUM_BLOBS);
    let decode = Array2::<f64>::zeros((PARAM_DIM, D_W));
    let mut bias = Array1::<f64>::zeros(PARAM_DIM);
    for (k, (center, axes, albedo)) in blob_list.iter().enumerate() {
        for d in 0..3 {
            bias[k * BLOB_PARAMS + d] = (center[d] / CENTER_RANGE).atanh();
            let s = ((axes[d] - AXIS_MIN) / (AXIS_MAX - AXIS_MIN)).clamp(1e-6, 1.0 - 1e-6);
            bias[k * BLOB_PARAMS + 3 + d] = logit(s);
            bias[k * BLOB_PARAMS + 6 + d] = logit(albedo[d].clamp(1e-6, 1.0 - 1e-6));
        }
    }
    let mut w = GeneratorWeights::new();
    w.insert(WEIGHT_DECODE, decode.into_dyn());
    w.insert(WEIGHT_BIAS, bias.into_dyn());
    w
}

fn logit(p: f64) -> f64 {
    (p / (1.0 - p)).ln()
}
