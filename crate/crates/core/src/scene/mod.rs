//! Dynamic scenes as seen from one observer: objects, regions, and
//! time-stamped pose observations, plus synthetic two-observer generation
//! and visual perturbation.

mod document;
mod generate;

pub use document::{PoolDocument, SceneDocument, ScenePairDocument};
pub use generate::{generate_scene_pair, GenerationConfig, TrajectoryStyle};

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::geom::{Containment, Point, Pose, Quad, BOUNDARY_EPS};

/// Identifier of an object within a scene (shared across observers of the
/// same world via the ground truth naming).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ObjectId(pub String);

impl ObjectId {
    pub fn new(s: impl Into<String>) -> Self {
        ObjectId(s.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for ObjectId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ObjectClass {
    Block,
    Box,
    Robot,
    Region,
}

impl ObjectClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            ObjectClass::Block => "block",
            ObjectClass::Box => "box",
            ObjectClass::Robot => "robot",
            ObjectClass::Region => "region",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "block" => Some(ObjectClass::Block),
            "box" => Some(ObjectClass::Box),
            "robot" => Some(ObjectClass::Robot),
            "region" => Some(ObjectClass::Region),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ColorCategory {
    Red,
    Green,
    Blue,
    Yellow,
}

impl ColorCategory {
    pub const ALL: [ColorCategory; 4] = [
        ColorCategory::Red,
        ColorCategory::Green,
        ColorCategory::Blue,
        ColorCategory::Yellow,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            ColorCategory::Red => "red",
            ColorCategory::Green => "green",
            ColorCategory::Blue => "blue",
            ColorCategory::Yellow => "yellow",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "red" => Some(ColorCategory::Red),
            "green" => Some(ColorCategory::Green),
            "blue" => Some(ColorCategory::Blue),
            "yellow" => Some(ColorCategory::Yellow),
            _ => None,
        }
    }

    /// Channel prototype (luma, blue chroma, red chroma), each in [0, 255].
    pub fn prototype(&self) -> RawColor {
        match self {
            ColorCategory::Red => RawColor::new(76.0, 85.0, 255.0),
            ColorCategory::Green => RawColor::new(150.0, 44.0, 21.0),
            ColorCategory::Blue => RawColor::new(29.0, 255.0, 107.0),
            ColorCategory::Yellow => RawColor::new(226.0, 1.0, 149.0),
        }
    }

    /// Nearest category by chroma distance (luma is ignored).
    pub fn classify(raw: RawColor) -> ColorCategory {
        let mut best = ColorCategory::Red;
        let mut best_d = f64::INFINITY;
        for c in ColorCategory::ALL {
            let p = c.prototype();
            let d = (p.cb - raw.cb).powi(2) + (p.cr - raw.cr).powi(2);
            if d < best_d {
                best_d = d;
                best = c;
            }
        }
        best
    }
}

/// Raw luma/chroma triple as delivered by a color camera.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RawColor {
    pub y: f64,
    pub cb: f64,
    pub cr: f64,
}

impl RawColor {
    pub const fn new(y: f64, cb: f64, cr: f64) -> Self {
        RawColor { y, cb, cr }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SceneObject {
    pub id: ObjectId,
    pub class: ObjectClass,
    pub color: ColorCategory,
    pub raw_color: RawColor,
    /// Width and height in meters. For regions this is the bounding box of
    /// the quadrangle.
    pub width: f64,
    pub height: f64,
}

/// A static region of interest: a strictly convex counterclockwise
/// quadrangle in the observer frame.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Region {
    pub id: ObjectId,
    pub quad: Quad,
}

/// One observed pose. Orientation is present for robots and boxes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ObservedPose {
    pub position: Point,
    pub theta: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ObservationFrame {
    /// Seconds; strictly increasing across a scene.
    pub timestamp: f64,
    pub poses: BTreeMap<ObjectId, ObservedPose>,
}

/// One observer's view of a dynamic scene. The observer is the coordinate
/// origin with orientation 0.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Scene {
    pub observer: ObjectId,
    /// Pose of the other robot in this observer's frame (one fixed estimate
    /// per scene).
    pub peer_pose: Pose,
    pub objects: BTreeMap<ObjectId, SceneObject>,
    pub regions: BTreeMap<ObjectId, Region>,
    pub frames: Vec<ObservationFrame>,
}

impl Scene {
    /// The unique moving block of the scene, if present.
    pub fn moving_block(&self) -> Option<&SceneObject> {
        self.objects
            .values()
            .find(|o| o.class == ObjectClass::Block)
    }

    /// Time-ordered observations (timestamp, position) of an object.
    pub fn observations_of<'a>(
        &'a self,
        id: &'a ObjectId,
    ) -> impl Iterator<Item = (f64, Point)> + 'a {
        self.frames.iter().filter_map(move |f| {
            f.poses.get(id).map(|p| (f.timestamp, p.position))
        })
    }

    /// Latest observed pose of an object at or before the final frame.
    pub fn last_pose_of(&self, id: &ObjectId) -> Option<ObservedPose> {
        self.frames.iter().rev().find_map(|f| f.poses.get(id).copied())
    }

    pub fn first_pose_of(&self, id: &ObjectId) -> Option<ObservedPose> {
        self.frames.iter().find_map(|f| f.poses.get(id).copied())
    }

    /// Diameter of the scene: the largest pairwise distance between any
    /// observed object positions and region corners. Used to normalize
    /// proximal relations.
    pub fn diameter(&self) -> f64 {
        let mut pts: Vec<Point> = Vec::new();
        pts.push(Point::new(0.0, 0.0));
        pts.push(self.peer_pose.position);
        for r in self.regions.values() {
            pts.extend_from_slice(&r.quad.corners);
        }
        for f in &self.frames {
            for p in f.poses.values() {
                pts.push(p.position);
            }
        }
        let mut best: f64 = 0.0;
        // Bounding box diagonal is enough here and avoids the quadratic scan.
        let (mut xmin, mut xmax, mut ymin, mut ymax) =
            (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
        for p in &pts {
            xmin = xmin.min(p.x);
            xmax = xmax.max(p.x);
            ymin = ymin.min(p.y);
            ymax = ymax.max(p.y);
        }
        if xmin.is_finite() {
            best = Point::new(xmax - xmin, ymax - ymin).norm();
        }
        best.max(1e-6)
    }

    fn validate(&self) -> Result<(), SceneError> {
        let mut prev = f64::NEG_INFINITY;
        for f in &self.frames {
            if f.timestamp <= prev {
                return Err(SceneError::NonMonotoneTimestamps {
                    at: f.timestamp,
                });
            }
            prev = f.timestamp;
            for id in f.poses.keys() {
                if !self.objects.contains_key(id) && !self.regions.contains_key(id) {
                    return Err(SceneError::UnknownObjectInFrame { id: id.clone() });
                }
            }
        }
        for o in self.objects.values() {
            if o.class != ObjectClass::Region && (o.width <= 0.0 || o.height <= 0.0) {
                return Err(SceneError::NonPositiveExtent { id: o.id.clone() });
            }
        }
        Ok(())
    }
}

/// Both observers' scenes plus the world-frame ground truth they were
/// generated from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScenePair {
    pub scene_a: Scene,
    pub scene_b: Scene,
    pub ground_truth: GroundTruth,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroundTruth {
    pub observer_a: Pose,
    pub observer_b: Pose,
    pub objects: BTreeMap<ObjectId, SceneObject>,
    /// Region quadrangles in the world frame.
    pub regions: BTreeMap<ObjectId, Quad>,
    /// Box and robot world poses.
    pub static_poses: BTreeMap<ObjectId, Pose>,
    /// Block trajectory in the world frame: (timestamp, position).
    pub trajectory: Vec<(f64, Point)>,
}

#[derive(Debug, thiserror::Error)]
pub enum SceneError {
    #[error("malformed scene document: {0}")]
    Malformed(String),
    #[error("timestamps are not strictly increasing (at t={at})")]
    NonMonotoneTimestamps { at: f64 },
    #[error("region {id} corners are not a strictly convex quadrangle")]
    NonConvexRegion { id: ObjectId },
    #[error("unknown object class `{class}`")]
    UnknownObjectClass { class: String },
    #[error("unknown color `{color}`")]
    UnknownColor { color: String },
    #[error("duplicate object id {id}")]
    DuplicateId { id: ObjectId },
    #[error("frame references unknown object {id}")]
    UnknownObjectInFrame { id: ObjectId },
    #[error("object {id} has non-positive extent")]
    NonPositiveExtent { id: ObjectId },
    #[error("infeasible generation config: {0}")]
    InfeasibleConfig(String),
}

/// Parse and validate a single scene document (JSON text).
pub fn load_scene(text: &str) -> Result<Scene, SceneError> {
    let doc: SceneDocument = serde_json::from_str(text)
        .map_err(|e| SceneError::Malformed(e.to_string()))?;
    doc.into_scene()
}

/// Remove the moving block's observation from each frame independently with
/// probability `rate`. Frame timestamps and all other observations are kept.
pub fn drop_frames(scene: &Scene, rate: f64, seed: u64) -> Scene {
    assert!((0.0..=1.0).contains(&rate), "rate must be in [0, 1]");
    let mut out = scene.clone();
    if rate == 0.0 {
        return out;
    }
    let block = match scene.moving_block() {
        Some(b) => b.id.clone(),
        None => return out,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for frame in &mut out.frames {
        if rng.gen::<f64>() < rate {
            frame.poses.remove(&block);
        }
    }
    out
}

/// Classify a point against a convex region with a boundary band of
/// [`BOUNDARY_EPS`].
pub fn point_in_region(p: Point, r: &Region) -> Containment {
    r.quad.contains(p, BOUNDARY_EPS)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn square_region(id: &str, cx: f64, cy: f64, half: f64) -> Region {
        Region {
            id: ObjectId::new(id),
            quad: Quad::new([
                Point::new(cx - half, cy - half),
                Point::new(cx + half, cy - half),
                Point::new(cx + half, cy + half),
                Point::new(cx - half, cy + half),
            ])
            .unwrap(),
        }
    }

    #[test]
    fn color_classification_recovers_prototypes() {
        for c in ColorCategory::ALL {
            let mut raw = c.prototype();
            raw.cb += 8.0;
            raw.cr -= 5.0;
            assert_eq!(ColorCategory::classify(raw), c);
        }
    }

    #[test]
    fn point_in_region_cases() {
        let r = square_region("reg-1", 0.5, 0.5, 0.5);
        assert_eq!(
            point_in_region(Point::new(0.5, 0.5), &r),
            Containment::Inside
        );
        assert_eq!(
            point_in_region(Point::new(10.0, 10.0), &r),
            Containment::Outside
        );
        assert_eq!(
            point_in_region(Point::new(0.5, 0.0), &r),
            Containment::Boundary
        );
    }

    #[test]
    fn drop_frames_identity_at_zero() {
        let pair = generate_scene_pair(&GenerationConfig::default(), 7).unwrap();
        let dropped = drop_frames(&pair.scene_a, 0.0, 3);
        assert_eq!(dropped, pair.scene_a);
    }

    #[test]
    fn drop_frames_full_rate_removes_all_block_observations() {
        let pair = generate_scene_pair(&GenerationConfig::default(), 7).unwrap();
        let dropped = drop_frames(&pair.scene_a, 1.0, 3);
        let block = dropped.moving_block().unwrap().id.clone();
        assert_eq!(dropped.observations_of(&block).count(), 0);
        assert_eq!(dropped.frames.len(), pair.scene_a.frames.len());
    }

    #[test]
    fn drop_frames_expected_removal_rate() {
        let pair = generate_scene_pair(&GenerationConfig::default(), 11).unwrap();
        let block = pair.scene_a.moving_block().unwrap().id.clone();
        let total = pair.scene_a.observations_of(&block).count();
        let mut removed = 0usize;
        let trials = 200;
        for seed in 0..trials {
            let d = drop_frames(&pair.scene_a, 0.75, seed);
            removed += total - d.observations_of(&block).count();
        }
        let mean = removed as f64 / trials as f64 / total as f64;
        assert!((mean - 0.75).abs() < 0.03, "mean removal rate {mean}");
    }

    #[test]
    fn drop_frames_preserves_retained_coordinates() {
        let pair = generate_scene_pair(&GenerationConfig::default(), 5).unwrap();
        let d = drop_frames(&pair.scene_a, 0.4, 9);
        for (orig, kept) in pair.scene_a.frames.iter().zip(&d.frames) {
            assert_eq!(orig.timestamp, kept.timestamp);
            for (id, pose) in &kept.poses {
                assert_eq!(orig.poses.get(id), Some(pose));
            }
        }
    }
}
