//! On-disk scene documents.
//!
//! A scene document is a JSON object with the fixed top-level keys
//! `observer`, `peer_pose`, `objects`, `regions` and `frames`. Units are
//! meters, radians and seconds. Region corners given in clockwise order are
//! normalized to counterclockwise on load.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::geom::{Point, Pose, Quad};

use super::{
    ColorCategory, ObjectClass, ObjectId, ObservationFrame, ObservedPose, Region, Scene,
    SceneError, SceneObject, ScenePair,
};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SceneDocument {
    pub observer: String,
    pub peer_pose: PoseDoc,
    pub objects: Vec<ObjectDoc>,
    pub regions: Vec<RegionDoc>,
    pub frames: Vec<FrameDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PoseDoc {
    pub x: f64,
    pub y: f64,
    pub theta: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ObjectDoc {
    pub id: String,
    pub class: String,
    pub color: String,
    pub width: f64,
    pub height: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RegionDoc {
    pub id: String,
    pub color: String,
    pub corners: Vec<[f64; 2]>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FrameDoc {
    pub t: f64,
    pub poses: BTreeMap<String, PoseEntryDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PoseEntryDoc {
    pub x: f64,
    pub y: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theta: Option<f64>,
}

impl SceneDocument {
    pub fn into_scene(self) -> Result<Scene, SceneError> {
        let mut objects = BTreeMap::new();
        let mut regions = BTreeMap::new();

        for o in &self.objects {
            let id = ObjectId::new(&o.id);
            let class = ObjectClass::parse(&o.class).ok_or_else(|| {
                SceneError::UnknownObjectClass {
                    class: o.class.clone(),
                }
            })?;
            let color = ColorCategory::parse(&o.color).ok_or_else(|| {
                SceneError::UnknownColor {
                    color: o.color.clone(),
                }
            })?;
            let obj = SceneObject {
                id: id.clone(),
                class,
                color,
                raw_color: color.prototype(),
                width: o.width,
                height: o.height,
            };
            if objects.insert(id.clone(), obj).is_some() {
                return Err(SceneError::DuplicateId { id });
            }
        }

        for r in &self.regions {
            let id = ObjectId::new(&r.id);
            if r.corners.len() != 4 {
                return Err(SceneError::NonConvexRegion { id });
            }
            let pts = [
                Point::new(r.corners[0][0], r.corners[0][1]),
                Point::new(r.corners[1][0], r.corners[1][1]),
                Point::new(r.corners[2][0], r.corners[2][1]),
                Point::new(r.corners[3][0], r.corners[3][1]),
            ];
            let quad = Quad::new(pts)
                .map_err(|_| SceneError::NonConvexRegion { id: id.clone() })?;
            let color = ColorCategory::parse(&r.color).ok_or_else(|| {
                SceneError::UnknownColor {
                    color: r.color.clone(),
                }
            })?;
            if objects.contains_key(&id) || regions.contains_key(&id) {
                return Err(SceneError::DuplicateId { id });
            }
            let (w, h) = bbox_extent(&quad);
            objects.insert(
                id.clone(),
                SceneObject {
                    id: id.clone(),
                    class: ObjectClass::Region,
                    color,
                    raw_color: color.prototype(),
                    width: w,
                    height: h,
                },
            );
            regions.insert(id.clone(), Region { id, quad });
        }

        let frames = self
            .frames
            .iter()
            .map(|f| ObservationFrame {
                timestamp: f.t,
                poses: f
                    .poses
                    .iter()
                    .map(|(id, p)| {
                        (
                            ObjectId::new(id),
                            ObservedPose {
                                position: Point::new(p.x, p.y),
                                theta: p.theta,
                            },
                        )
                    })
                    .collect(),
            })
            .collect();

        let scene = Scene {
            observer: ObjectId::new(&self.observer),
            peer_pose: Pose::new(self.peer_pose.x, self.peer_pose.y, self.peer_pose.theta),
            objects,
            regions,
            frames,
        };
        scene.validate()?;
        Ok(scene)
    }

    pub fn from_scene(scene: &Scene) -> SceneDocument {
        SceneDocument {
            observer: scene.observer.0.clone(),
            peer_pose: PoseDoc {
                x: scene.peer_pose.position.x,
                y: scene.peer_pose.position.y,
                theta: scene.peer_pose.theta,
            },
            objects: scene
                .objects
                .values()
                .filter(|o| o.class != ObjectClass::Region)
                .map(|o| ObjectDoc {
                    id: o.id.0.clone(),
                    class: o.class.as_str().to_string(),
                    color: o.color.as_str().to_string(),
                    width: o.width,
                    height: o.height,
                })
                .collect(),
            regions: scene
                .regions
                .values()
                .map(|r| RegionDoc {
                    id: r.id.0.clone(),
                    color: scene
                        .objects
                        .get(&r.id)
                        .map(|o| o.color.as_str().to_string())
                        .unwrap_or_else(|| "red".to_string()),
                    corners: r.quad.corners.iter().map(|p| [p.x, p.y]).collect(),
                })
                .collect(),
            frames: scene
                .frames
                .iter()
                .map(|f| FrameDoc {
                    t: f.timestamp,
                    poses: f
                        .poses
                        .iter()
                        .map(|(id, p)| {
                            (
                                id.0.clone(),
                                PoseEntryDoc {
                                    x: p.position.x,
                                    y: p.position.y,
                                    theta: p.theta,
                                },
                            )
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}

/// A scene-pair document: both observers' documents plus the generator's
/// ground truth (kept for analysis and tests; not visible to the agents).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScenePairDocument {
    pub scene_a: SceneDocument,
    pub scene_b: SceneDocument,
    pub ground_truth: super::GroundTruth,
}

impl ScenePairDocument {
    pub fn from_pair(pair: &ScenePair) -> Self {
        ScenePairDocument {
            scene_a: SceneDocument::from_scene(&pair.scene_a),
            scene_b: SceneDocument::from_scene(&pair.scene_b),
            ground_truth: pair.ground_truth.clone(),
        }
    }

    pub fn into_pair(self) -> Result<ScenePair, SceneError> {
        Ok(ScenePair {
            scene_a: self.scene_a.into_scene()?,
            scene_b: self.scene_b.into_scene()?,
            ground_truth: self.ground_truth,
        })
    }
}

/// A pool of scene pairs stored as one JSON document.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PoolDocument {
    pub pairs: Vec<ScenePairDocument>,
}

fn bbox_extent(quad: &Quad) -> (f64, f64) {
    let xs = quad.corners.iter().map(|p| p.x);
    let ys = quad.corners.iter().map(|p| p.y);
    let (xmin, xmax) = min_max(xs);
    let (ymin, ymax) = min_max(ys);
    (xmax - xmin, ymax - ymin)
}

fn min_max(vals: impl Iterator<Item = f64>) -> (f64, f64) {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for v in vals {
        lo = lo.min(v);
        hi = hi.max(v);
    }
    (lo, hi)
}

#[cfg(test)]
mod tests {
    use super::super::load_scene;
    use super::*;

    fn minimal_doc() -> serde_json::Value {
        serde_json::json!({
            "observer": "robot-a",
            "peer_pose": {"x": 3.0, "y": 0.0, "theta": 3.14159},
            "objects": [
                {"id": "block-1", "class": "block", "color": "green", "width": 0.05, "height": 0.05},
                {"id": "robot-a", "class": "robot", "color": "blue", "width": 0.3, "height": 0.3},
                {"id": "robot-b", "class": "robot", "color": "blue", "width": 0.3, "height": 0.3}
            ],
            "regions": [
                {"id": "reg-1", "color": "red", "corners": [[1.0, -0.2], [1.4, -0.2], [1.4, 0.2], [1.0, 0.2]]},
                {"id": "reg-2", "color": "blue", "corners": [[1.8, -0.2], [2.2, -0.2], [2.2, 0.2], [1.8, 0.2]]}
            ],
            "frames": [
                {"t": 0.0, "poses": {"block-1": {"x": 0.5, "y": 0.0},
                                     "robot-a": {"x": 0.0, "y": 0.0, "theta": 0.0},
                                     "robot-b": {"x": 3.0, "y": 0.0, "theta": 3.14159}}},
                {"t": 0.0333, "poses": {"block-1": {"x": 0.55, "y": 0.0},
                                        "robot-a": {"x": 0.0, "y": 0.0, "theta": 0.0},
                                        "robot-b": {"x": 3.0, "y": 0.0, "theta": 3.14159}}}
            ]
        })
    }

    #[test]
    fn loads_minimal_document() {
        let scene = load_scene(&minimal_doc().to_string()).unwrap();
        assert_eq!(scene.objects.len(), 5);
        assert_eq!(scene.regions.len(), 2);
        assert_eq!(scene.frames.len(), 2);
        assert_eq!(
            scene.moving_block().unwrap().color,
            ColorCategory::Green
        );
    }

    #[test]
    fn rejects_non_monotone_timestamps() {
        let mut doc = minimal_doc();
        doc["frames"][1]["t"] = serde_json::json!(0.0);
        let err = load_scene(&doc.to_string()).unwrap_err();
        assert!(matches!(err, SceneError::NonMonotoneTimestamps { .. }));
    }

    #[test]
    fn clockwise_region_corners_are_normalized() {
        let mut doc = minimal_doc();
        doc["regions"][0]["corners"] =
            serde_json::json!([[1.0, 0.2], [1.4, 0.2], [1.4, -0.2], [1.0, -0.2]]);
        let scene = load_scene(&doc.to_string()).unwrap();
        let quad = &scene.regions[&ObjectId::new("reg-1")].quad;
        assert!(quad.area() > 0.0);
    }

    #[test]
    fn rejects_unknown_class() {
        let mut doc = minimal_doc();
        doc["objects"][0]["class"] = serde_json::json!("pyramid");
        let err = load_scene(&doc.to_string()).unwrap_err();
        assert!(matches!(err, SceneError::UnknownObjectClass { .. }));
    }

    #[test]
    fn rejects_degenerate_region() {
        let mut doc = minimal_doc();
        doc["regions"][0]["corners"] =
            serde_json::json!([[1.0, 0.0], [1.4, 0.0], [1.8, 0.0], [2.2, 0.0]]);
        let err = load_scene(&doc.to_string()).unwrap_err();
        assert!(matches!(err, SceneError::NonConvexRegion { .. }));
    }

    #[test]
    fn document_round_trip() {
        let scene = load_scene(&minimal_doc().to_string()).unwrap();
        let text = serde_json::to_string(&SceneDocument::from_scene(&scene)).unwrap();
        let again = load_scene(&text).unwrap();
        assert_eq!(scene, again);
    }
}
