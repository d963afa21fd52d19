//! Camera parameterization, pose/matrix conversion, angle arithmetic, and
//! target-frame selection from a posed sequence.
//!
//! Poses orbit the origin: `yaw` sweeps around the world +y axis (0 means
//! frontal, positive is the subject's left), `pitch` tilts above the equator,
//! `radius` is the distance to the origin. The derived extrinsic is a
//! look-at with world up = +y; camera axes follow the vision convention
//! (x right, y down, z forward into the scene), so the rotation block always
//! has determinant +1.

use crate::error::{Error, Result};
use nalgebra::Matrix4;
use ndarray::Array3;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use std::path::Path;

/// Viewpoint on the orbit sphere. Angles in radians, radius in world units.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "PoseRecord", into = "PoseRecord")]
pub struct CameraPose {
    yaw: f64,
    pitch: f64,
    radius: f64,
    fov: f64,
}

/// Plain serialization mirror of [`CameraPose`]; conversion re-validates.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct PoseRecord {
    pub yaw: f64,
    pub pitch: f64,
    pub radius: f64,
    pub fov: f64,
}

impl From<CameraPose> for PoseRecord {
    fn from(p: CameraPose) -> Self {
        PoseRecord {
            yaw: p.yaw,
            pitch: p.pitch,
            radius: p.radius,
            fov: p.fov,
        }
    }
}

impl TryFrom<PoseRecord> for CameraPose {
    type Error = Error;
    fn try_from(r: PoseRecord) -> Result<Self> {
        CameraPose::new(r.yaw, r.pitch, r.radius, r.fov)
    }
}

/// Orthonormal camera frame: `right` and `down` span the image plane,
/// `forward` points from the eye toward the origin.
#[derive(Clone, Copy, Debug)]
pub struct CameraBasis {
    pub eye: [f64; 3],
    pub right: [f64; 3],
    pub down: [f64; 3],
    pub forward: [f64; 3],
}

impl CameraPose {
    pub fn new(yaw: f64, pitch: f64, radius: f64, fov: f64) -> Result<Self> {
        if !(yaw.is_finite() && pitch.is_finite() && radius.is_finite() && fov.is_finite()) {
            return Err(Error::InvalidPose("non-finite pose parameter".into()));
        }
        if yaw.abs() >= std::f64::consts::PI {
            return Err(Error::InvalidPose(format!("|yaw| = {} >= pi", yaw.abs())));
        }
        if pitch.abs() >= std::f64::consts::FRAC_PI_2 {
            return Err(Error::InvalidPose(format!(
                "|pitch| = {} >= pi/2",
                pitch.abs()
            )));
        }
        if radius <= 0.0 {
            return Err(Error::InvalidPose(format!("radius = {radius} <= 0")));
        }
        if fov <= 0.0 || fov >= std::f64::consts::PI {
            return Err(Error::InvalidPose(format!("fov = {fov} outside (0, pi)")));
        }
        Ok(CameraPose {
            yaw,
            pitch,
            radius,
            fov,
        })
    }

    pub fn yaw(&self) -> f64 {
        self.yaw
    }

    pub fn pitch(&self) -> f64 {
        self.pitch
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn fov(&self) -> f64 {
        self.fov
    }

    /// Same orbit point with a different yaw.
    pub fn with_yaw(&self, yaw: f64) -> Result<Self> {
        CameraPose::new(yaw, self.pitch, self.radius, self.fov)
    }

    /// Camera position in world coordinates.
    pub fn eye(&self) -> [f64; 3] {
        let (sy, cy) = self.yaw.sin_cos();
        let (sp, cp) = self.pitch.sin_cos();
        [
            self.radius * sy * cp,
            self.radius * sp,
            self.radius * cy * cp,
        ]
    }

    /// Unit vector from the eye toward the origin.
    pub fn view_direction(&self) -> [f64; 3] {
        let (sy, cy) = self.yaw.sin_cos();
        let (sp, cp) = self.pitch.sin_cos();
        [-sy * cp, -sp, -cy * cp]
    }

    /// Orthonormal frame of the camera (look-at with world up = +y).
    pub fn basis(&self) -> CameraBasis {
        let eye = self.eye();
        let forward = self.view_direction();
        // right = normalize(forward x up); never degenerate since |pitch| < pi/2.
        let right = normalize(cross(forward, [0.0, 1.0, 0.0]));
        let down = cross(forward, right);
        CameraBasis {
            eye,
            right,
            down,
            forward,
        }
    }

    /// Camera-to-world extrinsic: columns are right/down/forward, the last
    /// column is the eye position.
    pub fn extrinsic(&self) -> Matrix4<f64> {
        let b = self.basis();
        Matrix4::new(
            b.right[0], b.down[0], b.forward[0], b.eye[0], //
            b.right[1], b.down[1], b.forward[1], b.eye[1], //
            b.right[2], b.down[2], b.forward[2], b.eye[2], //
            0.0, 0.0, 0.0, 1.0,
        )
    }

    /// Great-circle angle between the two view directions, in [0, pi].
    pub fn angle_between(&self, other: &CameraPose) -> f64 {
        let d = dot(self.view_direction(), other.view_direction());
        d.clamp(-1.0, 1.0).acos()
    }
}

/// Free-function form of [`CameraPose::extrinsic`].
pub fn pose_to_extrinsic(pose: &CameraPose) -> Matrix4<f64> {
    pose.extrinsic()
}

/// Free-function form of [`CameraPose::angle_between`].
pub fn angle_between(a: &CameraPose, b: &CameraPose) -> f64 {
    a.angle_between(b)
}

/// Normalized position of `c` between anchors `c1` and `c2`: 0 at `c1`, 1 at
/// `c2`, clamped to [0, 1]. Errors when the anchors' view directions are
/// closer than 1e-9 rad.
pub fn angle_fraction(c: &CameraPose, c1: &CameraPose, c2: &CameraPose) -> Result<f64> {
    let span = c1.angle_between(c2);
    if span < 1e-9 {
        return Err(Error::DegenerateAnchors { separation: span });
    }
    Ok((c1.angle_between(c) / span).clamp(0.0, 1.0))
}

/// One frame of a posed sequence: image values in [0, 1], H and W >= 16.
#[derive(Clone, Debug)]
pub struct PosedFrame {
    image: Array3<f64>,
    pose: CameraPose,
    frame_index: usize,
}

impl PosedFrame {
    pub fn new(image: Array3<f64>, pose: CameraPose, frame_index: usize) -> Result<Self> {
        let (h, w, c) = image.dim();
        if c != 3 {
            return Err(Error::InvalidFrame(format!("expected 3 channels, got {c}")));
        }
        if h < 16 || w < 16 {
            return Err(Error::InvalidFrame(format!("{h}x{w} below 16x16 minimum")));
        }
        if image.iter().any(|v| !v.is_finite() || *v < 0.0 || *v > 1.0) {
            return Err(Error::InvalidFrame(
                "pixel values must be finite and in [0, 1]".into(),
            ));
        }
        Ok(PosedFrame {
            image,
            pose,
            frame_index,
        })
    }

    pub fn image(&self) -> &Array3<f64> {
        &self.image
    }

    pub fn pose(&self) -> CameraPose {
        self.pose
    }

    pub fn frame_index(&self) -> usize {
        self.frame_index
    }

    pub fn into_image(self) -> Array3<f64> {
        self.image
    }
}

/// Select `n` frames whose yaws are closest to `n` directions evenly spaced
/// over [min yaw, max yaw] (the mid-range yaw when `n` is 1). Each direction
/// takes the nearest frame not already assigned, ties preferring the lower
/// frame index. The result is sorted by yaw.
pub fn select_target_frames(frames: &[PosedFrame], n: usize) -> Result<Vec<PosedFrame>> {
    let picked = select_target_indices(frames, n)?;
    Ok(picked.into_iter().map(|i| frames[i].clone()).collect())
}

/// Index form of [`select_target_frames`]; indices refer to `frames` and are
/// ordered by the selected frames' yaw.
pub fn select_target_indices(frames: &[PosedFrame], n: usize) -> Result<Vec<usize>> {
    if n == 0 {
        return Err(Error::Config("cannot select zero target frames".into()));
    }
    if frames.len() < n {
        return Err(Error::InsufficientFrames {
            requested: n,
            available: frames.len(),
        });
    }
    let mut pool: Vec<usize> = (0..frames.len()).collect();
    pool.sort_by(|&a, &b| {
        let ka = (frames[a].pose.yaw(), frames[a].frame_index);
        let kb = (frames[b].pose.yaw(), frames[b].frame_index);
        ka.partial_cmp(&kb).unwrap()
    });
    let yaw_min = frames[pool[0]].pose.yaw();
    let yaw_max = frames[*pool.last().unwrap()].pose.yaw();

    let directions: Vec<f64> = if n == 1 {
        vec![0.5 * (yaw_min + yaw_max)]
    } else {
        (0..n)
            .map(|i| yaw_min + (yaw_max - yaw_min) * i as f64 / (n - 1) as f64)
            .collect()
    };

    let mut chosen = Vec::with_capacity(n);
    for dir in directions {
        let (slot, _) = pool
            .iter()
            .enumerate()
            .min_by(|(_, &a), (_, &b)| {
                let ka = ((frames[a].pose.yaw() - dir).abs(), frames[a].frame_index);
                let kb = ((frames[b].pose.yaw() - dir).abs(), frames[b].frame_index);
                ka.partial_cmp(&kb).unwrap()
            })
            .expect("pool is non-empty while n <= frames.len()");
        chosen.push(pool.remove(slot));
    }
    chosen.sort_by(|&a, &b| {
        let ka = (frames[a].pose.yaw(), frames[a].frame_index);
        let kb = (frames[b].pose.yaw(), frames[b].frame_index);
        ka.partial_cmp(&kb).unwrap()
    });
    Ok(chosen)
}

/// Write a camera-parameter file: one `key=value` record per line with keys
/// `frame_index`, `yaw`, `pitch`, `radius`, `fov`.
pub fn write_camera_file(path: &Path, poses: &[(usize, CameraPose)]) -> Result<()> {
    let mut out = String::new();
    for (idx, pose) in poses {
        writeln!(
            out,
            "frame_index={} yaw={} pitch={} radius={} fov={}",
            idx,
            pose.yaw(),
            pose.pitch(),
            pose.radius(),
            pose.fov()
        )
        .expect("string write");
    }
    std::fs::write(path, out)?;
    Ok(())
}

/// Read a camera-parameter file written by [`write_camera_file`].
pub fn read_camera_file(path: &Path) -> Result<Vec<(usize, CameraPose)>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Data(format!("{}: {e}", path.display())))?;
    let mut records = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut frame_index = None;
        let mut yaw = None;
        let mut pitch = None;
        let mut radius = None;
        let mut fov = None;
        for field in line.split_whitespace() {
            let (key, value) = field.split_once('=').ok_or_else(|| {
                Error::Data(format!(
                    "{}:{}: field `{field}` is not key=value",
                    path.display(),
                    lineno + 1
                ))
            })?;
            let bad = |e: &dyn std::fmt::Display| {
                Error::Data(format!(
                    "{}:{}: bad value for {key}: {e}",
                    path.display(),
                    lineno + 1
                ))
            };
            match key {
                "frame_index" => frame_index = Some(value.parse::<usize>().map_err(|e| bad(&e))?),
                "yaw" => yaw = Some(value.parse::<f64>().map_err(|e| bad(&e))?),
                "pitch" => pitch = Some(value.parse::<f64>().map_err(|e| bad(&e))?),
                "radius" => radius = Some(value.parse::<f64>().map_err(|e| bad(&e))?),
                "fov" => fov = Some(value.parse::<f64>().map_err(|e| bad(&e))?),
                other => {
                    return Err(Error::Data(format!(
                        "{}:{}: unknown key `{other}`",
                        path.display(),
                        lineno + 1
                    )))
                }
            }
        }
        let missing = |name: &str| {
            Error::Data(format!(
                "{}:{}: missing key `{name}`",
                path.display(),
                lineno + 1
            ))
        };
        let pose = CameraPose::new(
            yaw.ok_or_else(|| missing("yaw"))?,
            pitch.ok_or_else(|| missing("pitch"))?,
            radius.ok_or_else(|| missing("radius"))?,
            fov.ok_or_else(|| missing("fov"))?,
        )?;
        records.push((frame_index.ok_or_else(|| missing("frame_index"))?, pose));
    }
    Ok(records)
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn normalize(v: [f64; 3]) -> [f64; 3] {
    let n = dot(v, v).sqrt();
    [v[0] / n, v[1] / n, v[2] / n]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng;
    use approx::assert_abs_diff_eq;
    use nalgebra::Matrix3;

    fn pose(yaw: f64, pitch: f64) -> CameraPose {
        CameraPose::new(yaw, pitch, 2.7, 0.7).unwrap()
    }

    #[test]
    fn rejects_invalid_poses() {
        assert!(CameraPose::new(3.2, 0.0, 2.7, 0.7).is_err());
        assert!(CameraPose::new(0.0, 1.6, 2.7, 0.7).is_err());
        assert!(CameraPose::new(0.0, 0.0, 0.0, 0.7).is_err());
        assert!(CameraPose::new(0.0, 0.0, 2.7, 3.2).is_err());
        assert!(CameraPose::new(f64::NAN, 0.0, 2.7, 0.7).is_err());
    }

    #[test]
    fn frontal_pose_sits_on_positive_z() {
        let m = pose(0.0, 0.0).extrinsic();
        assert_abs_diff_eq!(m[(0, 3)], 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(m[(1, 3)], 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(m[(2, 3)], 2.7, epsilon = 1e-15);
        // Forward column points back at the origin.
        assert_abs_diff_eq!(m[(2, 2)], -1.0, epsilon = 1e-15);
    }

    #[test]
    fn quarter_turn_sits_on_positive_x() {
        let eye = pose(std::f64::consts::FRAC_PI_2, 0.0).eye();
        assert_abs_diff_eq!(eye[0], 2.7, epsilon = 1e-12);
        assert_abs_diff_eq!(eye[1], 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(eye[2], 0.0, epsilon = 1e-12);
    }

    // Oracle: the cross-product look-at must agree with the rotation-product
    // construction R_y(yaw) * R_x(-pitch) applied to the frontal frame.
    #[test]
    fn extrinsic_matches_rotation_product_construction() {
        let p = pose(0.3, 0.1);
        let m = p.extrinsic();
        let (sy, cy) = p.yaw().sin_cos();
        let (sp, cp) = p.pitch().sin_cos();
        let ry = Matrix3::new(cy, 0.0, sy, 0.0, 1.0, 0.0, -sy, 0.0, cy);
        let rx_neg = Matrix3::new(1.0, 0.0, 0.0, 0.0, cp, sp, 0.0, -sp, cp);
        let frontal = Matrix3::new(1.0, 0.0, 0.0, 0.0, -1.0, 0.0, 0.0, 0.0, -1.0);
        let expected = ry * rx_neg * frontal;
        for r in 0..3 {
            for c in 0..3 {
                assert_abs_diff_eq!(m[(r, c)], expected[(r, c)], epsilon = 1e-12);
            }
        }
        let eye = p.eye();
        for r in 0..3 {
            assert_abs_diff_eq!(m[(r, 3)], eye[r], epsilon = 1e-12);
        }
    }

    #[test]
    fn rotation_block_is_orthonormal_for_random_poses() {
        let mut rng = rng::substream(11, "camera-orthonormal");
        for _ in 0..1000 {
            let yaw = (rng::uniform_open_closed(&mut rng) - 0.5) * 2.0 * 3.1;
            let pitch = (rng::uniform_open_closed(&mut rng) - 0.5) * 2.0 * 1.5;
            let radius = 0.5 + 4.0 * rng::uniform_open_closed(&mut rng);
            let p = CameraPose::new(yaw, pitch, radius, 0.7).unwrap();
            let m = p.extrinsic();
            let r = m.fixed_view::<3, 3>(0, 0);
            let gram = r.transpose() * r;
            let mut max_dev: f64 = 0.0;
            for i in 0..3 {
                for j in 0..3 {
                    let target = if i == j { 1.0 } else { 0.0 };
                    max_dev = max_dev.max((gram[(i, j)] - target).abs());
                }
            }
            assert!(max_dev < 1e-9, "gram deviation {max_dev}");
            assert!((r.determinant() - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn angle_between_identical_poses_is_zero() {
        let p = pose(0.4, -0.2);
        assert_eq!(p.angle_between(&p), 0.0);
    }

    #[test]
    fn angle_between_planar_quarter_turn() {
        let a = pose(-std::f64::consts::FRAC_PI_4, 0.0);
        let b = pose(std::f64::consts::FRAC_PI_4, 0.0);
        assert_abs_diff_eq!(
            a.angle_between(&b),
            std::f64::consts::FRAC_PI_2,
            epsilon = 1e-12
        );
    }

    // Oracle: explicit unit-vector dot product.
    #[test]
    fn angle_between_matches_unit_vector_dot() {
        let a = pose(0.2, 0.1);
        let b = pose(-0.3, 0.0);
        let va = a.view_direction();
        let vb = b.view_direction();
        let expected = dot(va, vb).clamp(-1.0, 1.0).acos();
        assert_abs_diff_eq!(a.angle_between(&b), expected, epsilon = 1e-12);
        assert_abs_diff_eq!(a.angle_between(&b), b.angle_between(&a), epsilon = 1e-15);
    }

    #[test]
    fn angle_fraction_anchors_map_to_zero_and_one() {
        let c1 = pose(-0.4, 0.05);
        let c2 = pose(0.5, -0.1);
        assert_eq!(angle_fraction(&c1, &c1, &c2).unwrap(), 0.0);
        assert_eq!(angle_fraction(&c2, &c1, &c2).unwrap(), 1.0);
    }

    #[test]
    fn angle_fraction_midpoint_in_yaw_is_half() {
        let c1 = pose(-0.3, 0.1);
        let c2 = pose(0.3, 0.1);
        let mid = pose(0.0, 0.1);
        assert_abs_diff_eq!(angle_fraction(&mid, &c1, &c2).unwrap(), 0.5, epsilon = 1e-9);
    }

    // Oracle: planar fraction (0.1 - (-0.4)) / 0.8 = 0.625.
    #[test]
    fn angle_fraction_planar_value() {
        let c1 = pose(-0.4, 0.0);
        let c2 = pose(0.4, 0.0);
        let c = pose(0.1, 0.0);
        assert_abs_diff_eq!(angle_fraction(&c, &c1, &c2).unwrap(), 0.625, epsilon = 1e-12);
    }

    #[test]
    fn angle_fraction_rejects_degenerate_anchors() {
        let c1 = pose(0.2, 0.1);
        let err = angle_fraction(&c1, &c1, &c1).unwrap_err();
        assert!(matches!(err, Error::DegenerateAnchors { .. }));
    }

    fn frame_at(yaw_deg: f64, idx: usize) -> PosedFrame {
        let img = Array3::zeros((16, 16, 3));
        PosedFrame::new(img, pose(yaw_deg.to_radians(), 0.0), idx).unwrap()
    }

    #[test]
    fn selects_endpoints_and_midpoint() {
        let frames: Vec<_> = [-40.0, -20.0, 0.0, 20.0, 40.0]
            .iter()
            .enumerate()
            .map(|(i, &y)| frame_at(y, i))
            .collect();
        let picked = select_target_indices(&frames, 3).unwrap();
        assert_eq!(picked, vec![0, 2, 4]);
    }

    #[test]
    fn single_selection_takes_mid_range_frame() {
        let frames: Vec<_> = [-40.0, -10.0, 5.0, 40.0]
            .iter()
            .enumerate()
            .map(|(i, &y)| frame_at(y, i))
            .collect();
        let picked = select_target_indices(&frames, 1).unwrap();
        // Mid-range direction is 0 degrees; nearest frame is at 5.
        assert_eq!(picked, vec![2]);
    }

    #[test]
    fn selection_rejects_oversized_requests() {
        let frames = vec![frame_at(0.0, 0)];
        assert!(matches!(
            select_target_frames(&frames, 2),
            Err(Error::InsufficientFrames { .. })
        ));
    }

    #[test]
    fn equidistant_tie_prefers_lower_frame_index() {
        // Directions for n=2 are the endpoints; both frames at +-10 are
        // equidistant from nothing, so build an explicit tie at 0.
        let frames = vec![frame_at(-10.0, 7), frame_at(10.0, 3)];
        let picked = select_target_indices(&frames, 1).unwrap();
        // Both are 10 degrees from the mid-range direction; index 3 wins.
        assert_eq!(frames[picked[0]].frame_index(), 3);
    }

    #[test]
    fn collisions_fall_back_to_next_nearest_unassigned() {
        // Three directions over [-40, 40]: -40, 0, 40. The frame at 1 degree
        // is nearest to 0; the 39-degree frame must then take direction 40
        // even though 39 is also nearest to ... (collision case: two near 0).
        let frames = vec![
            frame_at(-40.0, 0),
            frame_at(1.0, 1),
            frame_at(2.0, 2),
            frame_at(39.0, 3),
        ];
        let picked = select_target_indices(&frames, 4).unwrap();
        assert_eq!(picked, vec![0, 1, 2, 3]);
    }

    // Oracle: exhaustive nearest search per direction on a jittered sweep.
    #[test]
    fn dense_jittered_selection_stays_near_ideal_directions() {
        let mut rng = rng::substream(5, "frame-jitter");
        let count = 200;
        let mut frames = Vec::with_capacity(count);
        for i in 0..count {
            let base = -45.0 + 90.0 * i as f64 / (count - 1) as f64;
            let jitter = (rng::uniform_open_closed(&mut rng) - 0.5) * 0.3;
            frames.push(frame_at(base + jitter, i));
        }
        let n = 7;
        let picked = select_target_indices(&frames, n).unwrap();
        let yaw_min = frames.iter().map(|f| f.pose().yaw()).fold(f64::MAX, f64::min);
        let yaw_max = frames.iter().map(|f| f.pose().yaw()).fold(f64::MIN, f64::max);
        let spacing = (yaw_max - yaw_min) / (count - 1) as f64;
        for (j, &idx) in picked.iter().enumerate() {
            let ideal = yaw_min + (yaw_max - yaw_min) * j as f64 / (n - 1) as f64;
            let nearest = frames
                .iter()
                .map(|f| (f.pose().yaw() - ideal).abs())
                .fold(f64::MAX, f64::min);
            let got = (frames[idx].pose().yaw() - ideal).abs();
            // Nearest frame may have been taken by a neighboring direction;
            // allow at most half the local frame spacing beyond optimal.
            assert!(
                got <= nearest + 0.5 * spacing,
                "direction {j}: got {got}, nearest {nearest}"
            );
        }
    }

    #[test]
    fn selection_is_permutation_invariant() {
        let mut rng = rng::substream(9, "frame-perm");
        let mut frames: Vec<_> = (0..40)
            .map(|i| {
                let yaw = -40.0 + 80.0 * i as f64 / 39.0;
                frame_at(yaw + (rng::uniform_open_closed(&mut rng) - 0.5), i)
            })
            .collect();
        let baseline: Vec<usize> = select_target_frames(&frames, 5)
            .unwrap()
            .iter()
            .map(|f| f.frame_index())
            .collect();
        // Deterministic shuffle.
        for i in (1..frames.len()).rev() {
            let j = rng::uniform_index(&mut rng, i + 1);
            frames.swap(i, j);
        }
        let shuffled: Vec<usize> = select_target_frames(&frames, 5)
            .unwrap()
            .iter()
            .map(|f| f.frame_index())
            .collect();
        assert_eq!(baseline, shuffled);
    }

    #[test]
    fn camera_file_round_trips() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cameras.txt");
        let poses: Vec<(usize, CameraPose)> = (0..5)
            .map(|i| (i, pose(-0.4 + 0.2 * i as f64, 0.01 * i as f64)))
            .collect();
        write_camera_file(&path, &poses).unwrap();
        let read = read_camera_file(&path).unwrap();
        assert_eq!(poses.len(), read.len());
        for ((ia, pa), (ib, pb)) in poses.iter().zip(read.iter()) {
            assert_eq!(ia, ib);
            assert_eq!(pa, pb);
        }
    }

    #[test]
    fn camera_file_rejects_malformed_lines() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cameras.txt");
        std::fs::write(&path, "frame_index=0 yaw=oops pitch=0 radius=2.7 fov=0.7\n").unwrap();
        assert!(matches!(read_camera_file(&path), Err(Error::Data(_))));
    }
}
