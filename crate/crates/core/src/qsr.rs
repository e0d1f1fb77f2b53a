//! Qualitative spatial and temporal relations.
//!
//! Topology (point-in-region and region-region RCC8), orientation (the LR
//! calculus over oriented lines), Allen interval relations, and the
//! segmentation of per-frame relations into maximal intervals (fluents).

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::geom::{boundary_distance, convex_separation, Containment, Point, Quad};
use crate::scene::{ObjectClass, ObjectId, Region, Scene};

/// Tolerance for Allen endpoint equality: half the nominal 30 fps frame
/// spacing, so intervals derived from adjacent fluent segments meet.
pub const DEFAULT_TEMPORAL_EPS: f64 = 1.0 / 60.0;

/// Geometric tolerance for RCC8 boundary coincidence.
pub const RCC8_EPS: f64 = 1e-9;

/// Point-against-region topology. Boundary contact collapses to outside.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TopologyValue {
    Inside,
    Outside,
}

impl TopologyValue {
    pub fn as_str(&self) -> &'static str {
        match self {
            TopologyValue::Inside => "inside",
            TopologyValue::Outside => "outside",
        }
    }
}

/// The eight jointly exhaustive, pairwise disjoint region-region relations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Rcc8Relation {
    /// Disconnected.
    Dc,
    /// Externally connected (boundaries touch, interiors disjoint).
    Ec,
    /// Partial overlap.
    Po,
    /// Equal.
    Eq,
    /// Tangential proper part.
    Tpp,
    /// Non-tangential proper part.
    Ntpp,
    /// Converse of Tpp.
    TppInv,
    /// Converse of Ntpp.
    NtppInv,
}

impl Rcc8Relation {
    pub fn converse(self) -> Rcc8Relation {
        match self {
            Rcc8Relation::Tpp => Rcc8Relation::TppInv,
            Rcc8Relation::TppInv => Rcc8Relation::Tpp,
            Rcc8Relation::Ntpp => Rcc8Relation::NtppInv,
            Rcc8Relation::NtppInv => Rcc8Relation::Ntpp,
            other => other,
        }
    }
}

/// LR calculus value: the position of a target relative to the oriented
/// line through origin and reference.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum OrientationValue {
    /// Left of the oriented line.
    Left,
    /// Right of the oriented line.
    Right,
    /// On the line, strictly between origin and reference.
    Inline,
    /// At the origin.
    Start,
    /// At the reference.
    End,
    /// On the line, beyond the reference.
    Front,
    /// On the line, behind the origin.
    Back,
}

impl OrientationValue {
    pub fn as_str(&self) -> &'static str {
        match self {
            OrientationValue::Left => "l",
            OrientationValue::Right => "r",
            OrientationValue::Inline => "i",
            OrientationValue::Start => "s",
            OrientationValue::End => "e",
            OrientationValue::Front => "f",
            OrientationValue::Back => "b",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TimeInterval {
    pub start: f64,
    pub end: f64,
}

impl TimeInterval {
    pub const fn new(start: f64, end: f64) -> Self {
        TimeInterval { start, end }
    }

    pub fn is_proper(&self) -> bool {
        self.start < self.end
    }

    pub fn duration(&self) -> f64 {
        self.end - self.start
    }
}

impl fmt::Display for TimeInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:.3}, {:.3}]", self.start, self.end)
    }
}

/// Allen's thirteen interval relations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AllenRelation {
    Before,
    After,
    During,
    Contains,
    Starts,
    StartedBy,
    Finishes,
    FinishedBy,
    Overlaps,
    OverlappedBy,
    Meets,
    MetBy,
    Equal,
}

impl AllenRelation {
    pub const ALL: [AllenRelation; 13] = [
        AllenRelation::Before,
        AllenRelation::After,
        AllenRelation::During,
        AllenRelation::Contains,
        AllenRelation::Starts,
        AllenRelation::StartedBy,
        AllenRelation::Finishes,
        AllenRelation::FinishedBy,
        AllenRelation::Overlaps,
        AllenRelation::OverlappedBy,
        AllenRelation::Meets,
        AllenRelation::MetBy,
        AllenRelation::Equal,
    ];

    pub fn converse(self) -> AllenRelation {
        match self {
            AllenRelation::Before => AllenRelation::After,
            AllenRelation::After => AllenRelation::Before,
            AllenRelation::During => AllenRelation::Contains,
            AllenRelation::Contains => AllenRelation::During,
            AllenRelation::Starts => AllenRelation::StartedBy,
            AllenRelation::StartedBy => AllenRelation::Starts,
            AllenRelation::Finishes => AllenRelation::FinishedBy,
            AllenRelation::FinishedBy => AllenRelation::Finishes,
            AllenRelation::Overlaps => AllenRelation::OverlappedBy,
            AllenRelation::OverlappedBy => AllenRelation::Overlaps,
            AllenRelation::Meets => AllenRelation::MetBy,
            AllenRelation::MetBy => AllenRelation::Meets,
            AllenRelation::Equal => AllenRelation::Equal,
        }
    }
}

/// Point-region topology per the fluent value set: boundary contact maps
/// to outside.
pub fn topology_at(p: Point, r: &Region) -> TopologyValue {
    match crate::scene::point_in_region(p, r) {
        Containment::Inside => TopologyValue::Inside,
        Containment::Boundary | Containment::Outside => TopologyValue::Outside,
    }
}

/// Classify two convex quadrangles into their RCC8 relation.
pub fn rcc8(a: &Quad, b: &Quad) -> Rcc8Relation {
    let eps = RCC8_EPS;
    let a_in_b = a
        .corners
        .iter()
        .all(|p| b.contains(*p, eps) != Containment::Outside);
    let b_in_a = b
        .corners
        .iter()
        .all(|p| a.contains(*p, eps) != Containment::Outside);
    if a_in_b && b_in_a {
        return Rcc8Relation::Eq;
    }
    if a_in_b {
        return if boundary_distance(a, b) <= eps {
            Rcc8Relation::Tpp
        } else {
            Rcc8Relation::Ntpp
        };
    }
    if b_in_a {
        return if boundary_distance(a, b) <= eps {
            Rcc8Relation::TppInv
        } else {
            Rcc8Relation::NtppInv
        };
    }
    let sep = convex_separation(a, b);
    if sep > eps {
        Rcc8Relation::Dc
    } else if sep >= -eps {
        Rcc8Relation::Ec
    } else {
        Rcc8Relation::Po
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum QsrError {
    #[error("LR orientation is undefined when origin equals reference")]
    DegenerateOrientationLine,
}

/// LR calculus classification of `target` against the oriented line from
/// `origin` through `reference`.
pub fn lr_orientation(
    origin: Point,
    reference: Point,
    target: Point,
) -> Result<OrientationValue, QsrError> {
    let dir = reference.sub(origin);
    let len = dir.norm();
    if len < 1e-12 {
        return Err(QsrError::DegenerateOrientationLine);
    }
    let rel = target.sub(origin);
    // Perpendicular distance from the line decides left/right.
    let perp = dir.cross(rel) / len;
    if perp > 1e-9 {
        return Ok(OrientationValue::Left);
    }
    if perp < -1e-9 {
        return Ok(OrientationValue::Right);
    }
    // Collinear: the projection parameter places the target on the line.
    let t = rel.dot(dir) / (len * len);
    let t_eps = 1e-9 / len;
    Ok(if t.abs() <= t_eps {
        OrientationValue::Start
    } else if (t - 1.0).abs() <= t_eps {
        OrientationValue::End
    } else if t < 0.0 {
        OrientationValue::Back
    } else if t < 1.0 {
        OrientationValue::Inline
    } else {
        OrientationValue::Front
    })
}

/// Allen relation with the default endpoint tolerance.
pub fn allen(i1: TimeInterval, i2: TimeInterval) -> AllenRelation {
    allen_with_tolerance(i1, i2, DEFAULT_TEMPORAL_EPS)
}

/// Allen relation with endpoint equality judged at `eps`.
pub fn allen_with_tolerance(i1: TimeInterval, i2: TimeInterval, eps: f64) -> AllenRelation {
    let es = cmp_eps(i1.end, i2.start, eps);
    if es == Ordering::Less {
        return AllenRelation::Before;
    }
    if es == Ordering::Equal {
        return AllenRelation::Meets;
    }
    let se = cmp_eps(i1.start, i2.end, eps);
    if se == Ordering::Greater {
        return AllenRelation::After;
    }
    if se == Ordering::Equal {
        return AllenRelation::MetBy;
    }
    let ss = cmp_eps(i1.start, i2.start, eps);
    let ee = cmp_eps(i1.end, i2.end, eps);
    match (ss, ee) {
        (Ordering::Equal, Ordering::Equal) => AllenRelation::Equal,
        (Ordering::Equal, Ordering::Less) => AllenRelation::Starts,
        (Ordering::Equal, Ordering::Greater) => AllenRelation::StartedBy,
        (Ordering::Greater, Ordering::Equal) => AllenRelation::Finishes,
        (Ordering::Less, Ordering::Equal) => AllenRelation::FinishedBy,
        (Ordering::Less, Ordering::Less) => AllenRelation::Overlaps,
        (Ordering::Greater, Ordering::Greater) => AllenRelation::OverlappedBy,
        (Ordering::Less, Ordering::Greater) => AllenRelation::Contains,
        (Ordering::Greater, Ordering::Less) => AllenRelation::During,
    }
}

fn cmp_eps(a: f64, b: f64, eps: f64) -> Ordering {
    if (a - b).abs() <= eps {
        Ordering::Equal
    } else if a < b {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FluentKind {
    Topology,
    Orientation,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum QualValue {
    Topology(TopologyValue),
    Orientation(OrientationValue),
}

impl fmt::Display for QualValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QualValue::Topology(v) => f.write_str(v.as_str()),
            QualValue::Orientation(v) => f.write_str(v.as_str()),
        }
    }
}

/// One maximal run of a qualitative value.
///
/// `interval` spans the bridged extent of the run: interior boundaries sit
/// at the midpoint of the observation gap where the value changed, so
/// adjacent segments meet exactly. `first_observed`/`last_observed` retain
/// the raw endpoints for event timing.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FluentSegment {
    pub value: QualValue,
    pub interval: TimeInterval,
    pub first_observed: f64,
    pub last_observed: f64,
}

/// Maximal intervals over which one qualitative relation holds between a
/// subject and a landmark.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FluentTrack {
    pub subject: ObjectId,
    /// For orientation tracks, the robot whose position anchors the
    /// oriented line. Topology tracks have no origin.
    pub origin: Option<ObjectId>,
    pub landmark: ObjectId,
    pub kind: FluentKind,
    pub segments: Vec<FluentSegment>,
}

impl fmt::Display for FluentTrack {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.kind, &self.origin) {
            (FluentKind::Topology, _) => {
                write!(f, "topology({}, {}):", self.subject, self.landmark)?
            }
            (FluentKind::Orientation, Some(origin)) => write!(
                f,
                "orientation({}, {}->{}):",
                self.subject, origin, self.landmark
            )?,
            (FluentKind::Orientation, None) => {
                write!(f, "orientation({}, ?->{}):", self.subject, self.landmark)?
            }
        }
        for seg in &self.segments {
            write!(
                f,
                " {}@[{:.3},{:.3}]",
                seg.value, seg.interval.start, seg.interval.end
            )?;
        }
        Ok(())
    }
}

/// Segment the observed per-frame relations of a scene into fluent tracks.
///
/// Topology is tracked for the moving block against every region;
/// orientation for the block against every (robot origin, robot-or-box
/// landmark) pair. Missing observations are bridged: a value persists
/// until an observation contradicts it.
pub fn extract_fluents(scene: &Scene) -> Vec<FluentTrack> {
    let block = match scene.moving_block() {
        Some(b) => b.id.clone(),
        None => return Vec::new(),
    };

    let mut tracks = Vec::new();

    for region in scene.regions.values() {
        let observations: Vec<(f64, QualValue)> = scene
            .observations_of(&block)
            .map(|(t, p)| (t, QualValue::Topology(topology_at(p, region))))
            .collect();
        let segments = segment_runs(&observations);
        if !segments.is_empty() {
            tracks.push(FluentTrack {
                subject: block.clone(),
                origin: None,
                landmark: region.id.clone(),
                kind: FluentKind::Topology,
                segments,
            });
        }
    }

    let robots: Vec<&ObjectId> = scene
        .objects
        .values()
        .filter(|o| o.class == ObjectClass::Robot)
        .map(|o| &o.id)
        .collect();
    let landmarks: Vec<&ObjectId> = scene
        .objects
        .values()
        .filter(|o| matches!(o.class, ObjectClass::Robot | ObjectClass::Box))
        .map(|o| &o.id)
        .collect();

    for origin in &robots {
        for landmark in &landmarks {
            if origin == landmark {
                continue;
            }
            let mut observations = Vec::new();
            for frame in &scene.frames {
                let (Some(block_pose), Some(origin_pose), Some(landmark_pose)) = (
                    frame.poses.get(&block),
                    frame.poses.get(*origin),
                    frame.poses.get(*landmark),
                ) else {
                    continue;
                };
                if let Ok(v) = lr_orientation(
                    origin_pose.position,
                    landmark_pose.position,
                    block_pose.position,
                ) {
                    observations.push((frame.timestamp, QualValue::Orientation(v)));
                }
            }
            let segments = segment_runs(&observations);
            if !segments.is_empty() {
                tracks.push(FluentTrack {
                    subject: block.clone(),
                    origin: Some((*origin).clone()),
                    landmark: (*landmark).clone(),
                    kind: FluentKind::Orientation,
                    segments,
                });
            }
        }
    }

    tracks
}

/// Collapse a time-ordered observation stream into maximal same-value runs
/// with gap bridging at run boundaries.
fn segment_runs(observations: &[(f64, QualValue)]) -> Vec<FluentSegment> {
    let mut runs: Vec<(QualValue, f64, f64)> = Vec::new();
    for (t, v) in observations {
        match runs.last_mut() {
            Some((value, _, last)) if value == v => *last = *t,
            _ => runs.push((*v, *t, *t)),
        }
    }
    let n = runs.len();
    runs.iter()
        .enumerate()
        .map(|(i, (value, first, last))| {
            let start = if i == 0 {
                *first
            } else {
                (runs[i - 1].2 + *first) / 2.0
            };
            let end = if i + 1 == n {
                *last
            } else {
                (*last + runs[i + 1].1) / 2.0
            };
            FluentSegment {
                value: *value,
                interval: TimeInterval::new(start, end),
                first_observed: *first,
                last_observed: *last,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Pose;
    use crate::scene::{
        drop_frames, generate_scene_pair, ColorCategory, GenerationConfig, ObservationFrame,
        ObservedPose, RawColor, SceneObject,
    };
    use std::collections::BTreeMap;

    fn quad(points: [(f64, f64); 4]) -> Quad {
        Quad::new(points.map(|(x, y)| Point::new(x, y))).unwrap()
    }

    #[test]
    fn topology_boundary_collapses_to_outside() {
        let region = Region {
            id: ObjectId::new("reg-1"),
            quad: quad([(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]),
        };
        assert_eq!(
            topology_at(Point::new(0.5, 0.5), &region),
            TopologyValue::Inside
        );
        assert_eq!(
            topology_at(Point::new(9.0, 0.5), &region),
            TopologyValue::Outside
        );
        assert_eq!(
            topology_at(Point::new(0.5, 1.0), &region),
            TopologyValue::Outside
        );
    }

    #[test]
    fn rcc8_base_cases() {
        let unit = quad([(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]);
        assert_eq!(rcc8(&unit, &unit), Rcc8Relation::Eq);

        let far = quad([(5.0, 0.0), (6.0, 0.0), (6.0, 1.0), (5.0, 1.0)]);
        assert_eq!(rcc8(&unit, &far), Rcc8Relation::Dc);

        let touching = quad([(1.0, 0.0), (2.0, 0.0), (2.0, 1.0), (1.0, 1.0)]);
        assert_eq!(rcc8(&unit, &touching), Rcc8Relation::Ec);

        let overlapping = quad([(0.5, 0.5), (1.5, 0.5), (1.5, 1.5), (0.5, 1.5)]);
        assert_eq!(rcc8(&unit, &overlapping), Rcc8Relation::Po);

        let inner = quad([(0.25, 0.25), (0.75, 0.25), (0.75, 0.75), (0.25, 0.75)]);
        assert_eq!(rcc8(&inner, &unit), Rcc8Relation::Ntpp);
        assert_eq!(rcc8(&unit, &inner), Rcc8Relation::NtppInv);

        let tangent_inner = quad([(0.0, 0.25), (0.5, 0.25), (0.5, 0.75), (0.0, 0.75)]);
        assert_eq!(rcc8(&tangent_inner, &unit), Rcc8Relation::Tpp);
        assert_eq!(rcc8(&unit, &tangent_inner), Rcc8Relation::TppInv);
    }

    #[test]
    fn lr_orientation_all_values_reachable() {
        let o = Point::new(0.0, 0.0);
        let r = Point::new(1.0, 0.0);
        let cases = [
            (Point::new(0.0, 1.0), OrientationValue::Left),
            (Point::new(0.0, -1.0), OrientationValue::Right),
            (Point::new(0.5, 0.0), OrientationValue::Inline),
            (Point::new(0.0, 0.0), OrientationValue::Start),
            (Point::new(1.0, 0.0), OrientationValue::End),
            (Point::new(2.0, 0.0), OrientationValue::Front),
            (Point::new(-1.0, 0.0), OrientationValue::Back),
        ];
        for (target, expect) in cases {
            assert_eq!(lr_orientation(o, r, target), Ok(expect), "{target:?}");
        }
        assert_eq!(
            lr_orientation(o, o, r),
            Err(QsrError::DegenerateOrientationLine)
        );
    }

    #[test]
    fn allen_spec_examples() {
        let i = TimeInterval::new;
        assert_eq!(allen(i(1.0, 3.0), i(3.0, 5.0)), AllenRelation::Meets);
        assert_eq!(allen(i(1.0, 5.0), i(2.0, 3.0)), AllenRelation::Contains);
        assert_eq!(allen(i(2.0, 3.0), i(1.0, 5.0)), AllenRelation::During);
    }

    #[test]
    fn allen_exhaustive_unique_and_converse() {
        let mut intervals = Vec::new();
        for s in 0..6 {
            for e in (s + 1)..=6 {
                intervals.push(TimeInterval::new(s as f64, e as f64));
            }
        }
        for &i1 in &intervals {
            for &i2 in &intervals {
                let r = allen(i1, i2);
                let count = AllenRelation::ALL
                    .iter()
                    .filter(|&&c| c == r)
                    .count();
                assert_eq!(count, 1);
                assert_eq!(allen(i2, i1), r.converse(), "{i1} vs {i2}");
            }
        }
    }

    fn synthetic_topology_scene(points: &[(f64, f64, f64)]) -> Scene {
        let block = ObjectId::new("block-1");
        let region = Region {
            id: ObjectId::new("reg-1"),
            quad: quad([(1.0, -0.5), (2.0, -0.5), (2.0, 0.5), (1.0, 0.5)]),
        };
        let mut objects = BTreeMap::new();
        objects.insert(
            block.clone(),
            SceneObject {
                id: block.clone(),
                class: ObjectClass::Block,
                color: ColorCategory::Green,
                raw_color: RawColor::new(150.0, 44.0, 21.0),
                width: 0.05,
                height: 0.05,
            },
        );
        objects.insert(
            region.id.clone(),
            SceneObject {
                id: region.id.clone(),
                class: ObjectClass::Region,
                color: ColorCategory::Red,
                raw_color: ColorCategory::Red.prototype(),
                width: 1.0,
                height: 1.0,
            },
        );
        let mut regions = BTreeMap::new();
        regions.insert(region.id.clone(), region);
        let frames = points
            .iter()
            .map(|(t, x, y)| {
                let mut poses = BTreeMap::new();
                poses.insert(
                    block.clone(),
                    ObservedPose {
                        position: Point::new(*x, *y),
                        theta: None,
                    },
                );
                ObservationFrame {
                    timestamp: *t,
                    poses,
                }
            })
            .collect();
        Scene {
            observer: ObjectId::new("robot-a"),
            peer_pose: Pose::new(3.0, 0.0, std::f64::consts::PI),
            objects,
            regions,
            frames,
        }
    }

    #[test]
    fn fluent_segments_for_a_crossing() {
        let scene = synthetic_topology_scene(&[
            (0.0, 0.0, 0.0),
            (0.1, 0.5, 0.0),
            (0.2, 1.5, 0.0),
            (0.3, 1.8, 0.0),
            (0.4, 2.5, 0.0),
            (0.5, 3.0, 0.0),
        ]);
        let tracks = extract_fluents(&scene);
        assert_eq!(tracks.len(), 1);
        let values: Vec<QualValue> = tracks[0].segments.iter().map(|s| s.value).collect();
        assert_eq!(
            values,
            vec![
                QualValue::Topology(TopologyValue::Outside),
                QualValue::Topology(TopologyValue::Inside),
                QualValue::Topology(TopologyValue::Outside),
            ]
        );
        // Adjacent segments meet exactly.
        for pair in tracks[0].segments.windows(2) {
            assert_eq!(
                allen(pair[0].interval, pair[1].interval),
                AllenRelation::Meets
            );
        }
        // Raw observation endpoints are retained.
        assert_eq!(tracks[0].segments[0].last_observed, 0.1);
        assert_eq!(tracks[0].segments[1].first_observed, 0.2);
    }

    #[test]
    fn static_block_yields_single_segment() {
        let scene = synthetic_topology_scene(&[(0.0, 0.0, 0.0), (0.1, 0.0, 0.0), (0.2, 0.0, 0.0)]);
        let tracks = extract_fluents(&scene);
        assert_eq!(tracks[0].segments.len(), 1);
        assert_eq!(
            tracks[0].segments[0].value,
            QualValue::Topology(TopologyValue::Outside)
        );
    }

    #[test]
    fn no_block_observations_yield_empty_tracks() {
        let scene = synthetic_topology_scene(&[]);
        assert!(extract_fluents(&scene).is_empty());
    }

    /// True when, after dropping, every same-value run of the undropped
    /// observation stream still has at least one surviving observation.
    fn runs_preserved(full: &Scene, dropped: &Scene) -> bool {
        let block = full.moving_block().unwrap().id.clone();
        let kept: std::collections::BTreeSet<u64> = dropped
            .observations_of(&block)
            .map(|(t, _)| t.to_bits())
            .collect();
        for region in full.regions.values() {
            let obs: Vec<(f64, TopologyValue)> = full
                .observations_of(&block)
                .map(|(t, p)| (t, topology_at(p, region)))
                .collect();
            let mut run_start = 0;
            for i in 0..=obs.len() {
                let run_ends = i == obs.len() || obs[i].1 != obs[run_start].1;
                if run_ends {
                    let survived = obs[run_start..i]
                        .iter()
                        .any(|(t, _)| kept.contains(&t.to_bits()));
                    if !survived {
                        return false;
                    }
                    run_start = i;
                }
            }
        }
        true
    }

    #[test]
    fn value_sequence_invariant_under_frame_drops() {
        let pair = generate_scene_pair(&GenerationConfig::noiseless(), 21).unwrap();
        let reference: Vec<Vec<QualValue>> = extract_fluents(&pair.scene_a)
            .into_iter()
            .filter(|t| t.kind == FluentKind::Topology)
            .map(|t| t.segments.iter().map(|s| s.value).collect())
            .collect();
        let mut qualifying = 0;
        for seed in 0..10u64 {
            let dropped = drop_frames(&pair.scene_a, 0.5, seed);
            if !runs_preserved(&pair.scene_a, &dropped) {
                continue;
            }
            qualifying += 1;
            let tracks: Vec<Vec<QualValue>> = extract_fluents(&dropped)
                .into_iter()
                .filter(|t| t.kind == FluentKind::Topology)
                .map(|t| t.segments.iter().map(|s| s.value).collect())
                .collect();
            assert_eq!(tracks, reference, "seed {seed}");
        }
        assert!(qualifying > 0, "no qualifying drop seed at rate 0.5");
    }
}
