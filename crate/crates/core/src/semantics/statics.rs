//! Static spatial relation grounding.
//!
//! Projective categories (left, right, front, back) are angular cones with
//! a 90-degree half-width: a target is accepted when the cosine similarity
//! between the landmark-to-target direction and the category axis is
//! positive. Proximal categories (near, far) compare the landmark distance
//! to the scene diameter.

use serde::{Deserialize, Serialize};

use crate::geom::{Point, Pose};

/// Distance-to-diameter ratio below which a target counts as near.
pub const NEAR_RATIO: f64 = 0.35;
/// Ratio above which a target counts as far.
pub const FAR_RATIO: f64 = 0.45;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StaticRelation {
    Left,
    Right,
    Front,
    Back,
    Near,
    Far,
}

impl StaticRelation {
    pub const ALL: [StaticRelation; 6] = [
        StaticRelation::Left,
        StaticRelation::Right,
        StaticRelation::Front,
        StaticRelation::Back,
        StaticRelation::Near,
        StaticRelation::Far,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            StaticRelation::Left => "left",
            StaticRelation::Right => "right",
            StaticRelation::Front => "front",
            StaticRelation::Back => "back",
            StaticRelation::Near => "near",
            StaticRelation::Far => "far",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|r| r.as_str() == s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FrameOfReference {
    /// Axes anchored at the landmark, oriented by the viewer-to-landmark
    /// direction.
    Relative,
    /// Axes from the landmark's own orientation.
    Intrinsic,
    /// Axes of the observer's coordinate frame.
    Absolute,
}

impl FrameOfReference {
    pub fn as_str(&self) -> &'static str {
        match self {
            FrameOfReference::Relative => "relative",
            FrameOfReference::Intrinsic => "intrinsic",
            FrameOfReference::Absolute => "absolute",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "relative" => Some(FrameOfReference::Relative),
            "intrinsic" => Some(FrameOfReference::Intrinsic),
            "absolute" => Some(FrameOfReference::Absolute),
            _ => None,
        }
    }
}

/// Position plus optional heading of a landmark object.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LandmarkGeometry {
    pub position: Point,
    pub theta: Option<f64>,
}

impl From<Pose> for LandmarkGeometry {
    fn from(p: Pose) -> Self {
        LandmarkGeometry {
            position: p.position,
            theta: Some(p.theta),
        }
    }
}

/// Does `relation` hold for `target`, located against `landmark` under the
/// given frame from the viewpoint of `viewer`?
pub fn static_relation_holds(
    relation: StaticRelation,
    frame: FrameOfReference,
    target: Point,
    landmark: &LandmarkGeometry,
    viewer: Pose,
    scene_diameter: f64,
) -> bool {
    match relation {
        StaticRelation::Near | StaticRelation::Far => {
            let ratio = target.dist(landmark.position) / scene_diameter.max(1e-9);
            match relation {
                StaticRelation::Near => ratio < NEAR_RATIO,
                StaticRelation::Far => ratio > FAR_RATIO,
                _ => unreachable!(),
            }
        }
        _ => {
            let front = match frame_front_axis(frame, landmark, viewer) {
                Some(a) => a,
                None => return false,
            };
            let axis = match relation {
                StaticRelation::Front => front,
                StaticRelation::Back => front.scale(-1.0),
                StaticRelation::Left => front.rotated(std::f64::consts::FRAC_PI_2),
                StaticRelation::Right => front.rotated(-std::f64::consts::FRAC_PI_2),
                _ => unreachable!(),
            };
            let v = match target.sub(landmark.position).normalized() {
                Some(v) => v,
                // Target coincides with the landmark: no direction.
                None => return false,
            };
            v.dot(axis) > 0.0
        }
    }
}

fn frame_front_axis(
    frame: FrameOfReference,
    landmark: &LandmarkGeometry,
    viewer: Pose,
) -> Option<Point> {
    match frame {
        FrameOfReference::Relative => {
            match landmark.position.sub(viewer.position).normalized() {
                Some(dir) => Some(dir),
                // Landmark at the viewer itself: use the viewer's heading.
                None => Some(Point::new(viewer.theta.cos(), viewer.theta.sin())),
            }
        }
        FrameOfReference::Intrinsic => landmark
            .theta
            .map(|t| Point::new(t.cos(), t.sin())),
        FrameOfReference::Absolute => Some(Point::new(1.0, 0.0)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relative_left_right() {
        // Viewer at origin looking at a landmark straight ahead on +x.
        let viewer = Pose::new(0.0, 0.0, 0.0);
        let lm = LandmarkGeometry {
            position: Point::new(2.0, 0.0),
            theta: None,
        };
        let left_target = Point::new(2.0, 0.5);
        let right_target = Point::new(2.0, -0.5);
        assert!(static_relation_holds(
            StaticRelation::Left,
            FrameOfReference::Relative,
            left_target,
            &lm,
            viewer,
            4.0
        ));
        assert!(static_relation_holds(
            StaticRelation::Right,
            FrameOfReference::Relative,
            right_target,
            &lm,
            viewer,
            4.0
        ));
        assert!(!static_relation_holds(
            StaticRelation::Left,
            FrameOfReference::Relative,
            right_target,
            &lm,
            viewer,
            4.0
        ));
        // Front continues away from the viewer; back is between them.
        assert!(static_relation_holds(
            StaticRelation::Front,
            FrameOfReference::Relative,
            Point::new(3.0, 0.0),
            &lm,
            viewer,
            4.0
        ));
        assert!(static_relation_holds(
            StaticRelation::Back,
            FrameOfReference::Relative,
            Point::new(1.0, 0.0),
            &lm,
            viewer,
            4.0
        ));
    }

    #[test]
    fn lenient_cones_overlap_at_diagonals() {
        let viewer = Pose::new(0.0, 0.0, 0.0);
        let lm = LandmarkGeometry {
            position: Point::new(2.0, 0.0),
            theta: None,
        };
        // 45 degrees off axis: both left and front accept.
        let diagonal = Point::new(2.5, 0.5);
        for rel in [StaticRelation::Left, StaticRelation::Front] {
            assert!(static_relation_holds(
                rel,
                FrameOfReference::Relative,
                diagonal,
                &lm,
                viewer,
                4.0
            ));
        }
    }

    #[test]
    fn intrinsic_uses_landmark_heading() {
        let viewer = Pose::new(0.0, 0.0, 0.0);
        // Landmark facing +y: its left is -x.
        let lm = LandmarkGeometry {
            position: Point::new(1.0, 0.0),
            theta: Some(std::f64::consts::FRAC_PI_2),
        };
        assert!(static_relation_holds(
            StaticRelation::Left,
            FrameOfReference::Intrinsic,
            Point::new(0.0, 0.0),
            &lm,
            viewer,
            4.0
        ));
        // Without a heading the intrinsic frame is inapplicable.
        let lm_no_theta = LandmarkGeometry {
            position: Point::new(1.0, 0.0),
            theta: None,
        };
        assert!(!static_relation_holds(
            StaticRelation::Left,
            FrameOfReference::Intrinsic,
            Point::new(0.0, 0.0),
            &lm_no_theta,
            viewer,
            4.0
        ));
    }

    #[test]
    fn proximal_thresholds() {
        let viewer = Pose::new(0.0, 0.0, 0.0);
        let lm = LandmarkGeometry {
            position: Point::new(0.0, 0.0),
            theta: None,
        };
        let diameter = 10.0;
        assert!(static_relation_holds(
            StaticRelation::Near,
            FrameOfReference::Relative,
            Point::new(1.0, 0.0),
            &lm,
            viewer,
            diameter
        ));
        assert!(static_relation_holds(
            StaticRelation::Far,
            FrameOfReference::Relative,
            Point::new(8.0, 0.0),
            &lm,
            viewer,
            diameter
        ));
        // The band between the thresholds is neither near nor far.
        let between = Point::new(4.0, 0.0);
        assert!(!static_relation_holds(
            StaticRelation::Near,
            FrameOfReference::Relative,
            between,
            &lm,
            viewer,
            diameter
        ));
        assert!(!static_relation_holds(
            StaticRelation::Far,
            FrameOfReference::Relative,
            between,
            &lm,
            viewer,
            diameter
        ));
    }
}
