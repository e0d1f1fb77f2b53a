//! Grounded spatial language engine.
//!
//! Agents observe 2-D dynamic scenes, abstract them into qualitative
//! spatial relations and movement events, conceptualize semantic programs
//! that describe or discriminate scene aspects, render and parse English
//! phrases with a bidirectional construction grammar, and play
//! speaker-hearer interaction games whose success is measured under visual
//! and linguistic perturbations.

pub mod events;
pub mod geom;
pub mod qsr;
pub mod scene;

pub use events::{
    apply_effects, compatible, detect_events, poss_at, possible_extensions, validate_run,
    EventKind, MovementEvent, MovementSequence, Provenance, SpatialState,
};
pub use geom::{Containment, Point, Pose, Quad};
pub use qsr::{
    allen, allen_with_tolerance, extract_fluents, lr_orientation, rcc8, topology_at,
    AllenRelation, FluentKind, FluentSegment, FluentTrack, OrientationValue, QualValue,
    Rcc8Relation, TimeInterval, TopologyValue,
};
pub use scene::{
    drop_frames, generate_scene_pair, load_scene, point_in_region, ColorCategory,
    GenerationConfig, ObjectClass, ObjectId, ObservationFrame, ObservedPose, PoolDocument,
    RawColor, Region, Scene, SceneDocument, SceneError, SceneObject, ScenePair,
    ScenePairDocument,
};
