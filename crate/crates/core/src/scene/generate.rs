//! Synthetic two-observer scene generation.
//!
//! One world-frame ground truth (robot poses, regions, a box, a block
//! trajectory) is rendered into each observer's frame by rigid transform,
//! then perturbed with independent observation noise plus a single fixed
//! peer-pose estimation error per scene. The whole pipeline is a pure
//! function of (config, seed).

use std::collections::BTreeMap;
use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::geom::{boundary_distance, Containment, Point, Pose, Quad};

use super::{
    ColorCategory, GroundTruth, ObjectClass, ObjectId, ObservationFrame, ObservedPose, RawColor,
    Region, Scene, SceneError, SceneObject, ScenePair,
};

/// Placement area for regions, the box and the block trajectory, in the
/// world frame (robot-a near the origin looking toward +x).
const WORK_X: (f64, f64) = (0.85, 2.15);
const WORK_Y: (f64, f64) = (-0.75, 0.75);

/// Fraction of frames spent resting at the final trajectory point.
const DWELL_FRACTION: f64 = 0.15;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TrajectoryStyle {
    /// Enter and exit every visited region cleanly.
    Crossing,
    /// End a transition within noise distance of a region edge, so the two
    /// observers may disagree about whether it happened.
    Grazing,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default)]
pub struct GenerationConfig {
    pub regions_min: usize,
    pub regions_max: usize,
    pub frames_min: usize,
    pub frames_max: usize,
    pub frame_rate: f64,
    /// Std of the i.i.d. Gaussian position noise per observation, meters.
    pub noise_std: f64,
    /// Std of the per-scene peer position estimation error, meters.
    pub peer_position_noise_std: f64,
    /// Std of the per-scene peer orientation estimation error, radians.
    pub peer_angle_noise_std: f64,
    /// Std of the per-object chroma deviation from the color prototype.
    pub color_noise_std: f64,
    pub include_box: bool,
    /// Fraction of scenes generated with a grazing trajectory.
    pub grazing_fraction: f64,
}

impl Default for GenerationConfig {
    fn default() -> Self {
        GenerationConfig {
            regions_min: 2,
            regions_max: 3,
            frames_min: 60,
            frames_max: 240,
            frame_rate: 30.0,
            noise_std: 0.01,
            peer_position_noise_std: 0.01,
            peer_angle_noise_std: 0.01,
            color_noise_std: 4.0,
            include_box: true,
            grazing_fraction: 0.0,
        }
    }
}

impl GenerationConfig {
    /// All deviation sources switched off; both observers see the same
    /// world up to an exact rigid transform.
    pub fn noiseless() -> Self {
        GenerationConfig {
            noise_std: 0.0,
            peer_position_noise_std: 0.0,
            peer_angle_noise_std: 0.0,
            color_noise_std: 0.0,
            ..GenerationConfig::default()
        }
    }

    /// A pool biased toward scenes where the observers extract different
    /// movement events.
    pub fn misaligned() -> Self {
        GenerationConfig {
            noise_std: 0.02,
            grazing_fraction: 0.85,
            ..GenerationConfig::default()
        }
    }
}

/// Generate both observers' scenes from one sampled ground truth.
pub fn generate_scene_pair(
    config: &GenerationConfig,
    seed: u64,
) -> Result<ScenePair, SceneError> {
    if config.regions_min == 0 {
        return Err(SceneError::InfeasibleConfig(
            "at least one region is required for a crossing trajectory".into(),
        ));
    }
    if config.regions_max > ColorCategory::ALL.len() {
        return Err(SceneError::InfeasibleConfig(
            "regions must have pairwise distinct colors; at most 4 supported".into(),
        ));
    }
    if config.regions_min > config.regions_max || config.frames_min > config.frames_max {
        return Err(SceneError::InfeasibleConfig("empty sampling range".into()));
    }
    if config.frames_min < 8 {
        return Err(SceneError::InfeasibleConfig(
            "too few frames for a movement trajectory".into(),
        ));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    // Robot layout: a near the origin, b across the workspace facing back.
    let pose_a = Pose::new(0.0, 0.0, uniform(&mut rng, -0.15, 0.15));
    let pose_b = Pose::new(
        3.0 + uniform(&mut rng, -0.3, 0.3),
        uniform(&mut rng, -0.4, 0.4),
        PI + uniform(&mut rng, -0.15, 0.15),
    );

    let n_regions =
        rng.gen_range(config.regions_min..=config.regions_max);
    let regions = place_regions(&mut rng, n_regions)?;

    let mut colors: Vec<ColorCategory> = ColorCategory::ALL.to_vec();
    shuffle(&mut rng, &mut colors);
    let region_colors: Vec<ColorCategory> = colors.iter().copied().take(n_regions).collect();
    let block_color = colors[rng.gen_range(0..colors.len())];
    let box_color = colors[rng.gen_range(0..colors.len())];

    let box_pose = if config.include_box {
        Some(place_box(&mut rng, &regions)?)
    } else {
        None
    };

    let style = if rng.gen::<f64>() < config.grazing_fraction {
        TrajectoryStyle::Grazing
    } else {
        TrajectoryStyle::Crossing
    };
    let waypoints = plan_trajectory(&mut rng, &regions, style, config.noise_std)?;

    let n_frames = rng.gen_range(config.frames_min..=config.frames_max);
    let trajectory = sample_trajectory(&waypoints, n_frames, config.frame_rate);

    // Ground-truth object table (world frame, prototype colors).
    let mut objects = BTreeMap::new();
    let mut gt_regions = BTreeMap::new();
    let mut static_poses = BTreeMap::new();

    let block_id = ObjectId::new("block-1");
    objects.insert(
        block_id.clone(),
        object(&block_id, ObjectClass::Block, block_color, 0.05, 0.05),
    );
    for (i, quad) in regions.iter().enumerate() {
        let id = ObjectId::new(format!("reg-{}", i + 1));
        let (w, h) = extent(quad);
        objects.insert(
            id.clone(),
            object(&id, ObjectClass::Region, region_colors[i], w, h),
        );
        gt_regions.insert(id, quad.clone());
    }
    for (id, pose) in [("robot-a", pose_a), ("robot-b", pose_b)] {
        let id = ObjectId::new(id);
        objects.insert(
            id.clone(),
            object(&id, ObjectClass::Robot, ColorCategory::Blue, 0.3, 0.3),
        );
        static_poses.insert(id, pose);
    }
    if let Some(pose) = box_pose {
        let id = ObjectId::new("box-1");
        objects.insert(
            id.clone(),
            object(&id, ObjectClass::Box, box_color, 0.15, 0.15),
        );
        static_poses.insert(id, pose);
    }

    let ground_truth = GroundTruth {
        observer_a: pose_a,
        observer_b: pose_b,
        objects,
        regions: gt_regions,
        static_poses,
        trajectory,
    };

    // Independent noise streams so the ground truth draw order stays fixed.
    let seed_a = rng.gen::<u64>();
    let seed_b = rng.gen::<u64>();
    let scene_a = observe(&ground_truth, "robot-a", "robot-b", config, seed_a);
    let scene_b = observe(&ground_truth, "robot-b", "robot-a", config, seed_b);

    Ok(ScenePair {
        scene_a,
        scene_b,
        ground_truth,
    })
}

fn object(
    id: &ObjectId,
    class: ObjectClass,
    color: ColorCategory,
    width: f64,
    height: f64,
) -> SceneObject {
    SceneObject {
        id: id.clone(),
        class,
        color,
        raw_color: color.prototype(),
        width,
        height,
    }
}

fn place_regions(rng: &mut ChaCha8Rng, n: usize) -> Result<Vec<Quad>, SceneError> {
    // Retry whole layouts: a bad early placement can make the rest
    // unplaceable even though the config is fine.
    for _layout in 0..200 {
        if let Some(placed) = try_place_regions(rng, n) {
            return Ok(placed);
        }
    }
    Err(SceneError::InfeasibleConfig(
        "could not place non-overlapping regions in the workspace".into(),
    ))
}

fn try_place_regions(rng: &mut ChaCha8Rng, n: usize) -> Option<Vec<Quad>> {
    let mut placed: Vec<Quad> = Vec::new();
    for _ in 0..n {
        let mut ok = false;
        for _try in 0..200 {
            let hx = uniform(rng, 0.16, 0.26);
            let hy = uniform(rng, 0.16, 0.26);
            let cx = uniform(rng, WORK_X.0 + hx + 0.05, WORK_X.1 - hx - 0.05);
            let cy = uniform(rng, WORK_Y.0 + hy + 0.05, WORK_Y.1 - hy - 0.05);
            let rot = uniform(rng, -0.3, 0.3);
            let jitter = 0.03;
            let base = [
                Point::new(-hx, -hy),
                Point::new(hx, -hy),
                Point::new(hx, hy),
                Point::new(-hx, hy),
            ];
            let mut corners = [Point::new(0.0, 0.0); 4];
            for (i, b) in base.iter().enumerate() {
                let j = Point::new(
                    uniform(rng, -jitter, jitter),
                    uniform(rng, -jitter, jitter),
                );
                corners[i] = b.add(j).rotated(rot).add(Point::new(cx, cy));
            }
            let quad = match Quad::new(corners) {
                Ok(q) => q,
                Err(_) => continue,
            };
            if placed
                .iter()
                .all(|other| boundary_distance(&quad, other) > 0.10)
            {
                placed.push(quad);
                ok = true;
                break;
            }
        }
        if !ok {
            return None;
        }
    }
    Some(placed)
}

fn place_box(rng: &mut ChaCha8Rng, regions: &[Quad]) -> Result<Pose, SceneError> {
    for _ in 0..2000 {
        let p = Point::new(
            uniform(rng, WORK_X.0, WORK_X.1),
            uniform(rng, WORK_Y.0, WORK_Y.1),
        );
        let clear = regions.iter().all(|q| {
            q.contains(p, 0.10) == Containment::Outside
        });
        if clear {
            return Ok(Pose {
                position: p,
                theta: uniform(rng, -PI, PI),
            });
        }
    }
    Err(SceneError::InfeasibleConfig(
        "no free spot for the box".into(),
    ))
}

/// Pick waypoints for the block. Crossing trajectories enter and exit each
/// visited region through its centroid; grazing trajectories end a
/// transition within noise distance of an edge.
fn plan_trajectory(
    rng: &mut ChaCha8Rng,
    regions: &[Quad],
    style: TrajectoryStyle,
    noise_std: f64,
) -> Result<Vec<Point>, SceneError> {
    let start = sample_outside_point(rng, regions, 0.12)?;
    let mut order: Vec<usize> = (0..regions.len()).collect();
    shuffle(rng, &mut order);

    let mut waypoints = vec![start];
    match style {
        TrajectoryStyle::Crossing => {
            let visits = order.iter().take(2.min(regions.len())).copied();
            for idx in visits {
                waypoints.push(regions[idx].centroid());
            }
            let exit = sample_outside_point(rng, regions, 0.15)?;
            waypoints.push(exit);
            // Occasionally finish inside a further region so the sequence
            // ends with a bare entry.
            if regions.len() >= 3 && rng.gen::<f64>() < 0.35 {
                waypoints.push(regions[order[2]].centroid());
            }
        }
        TrajectoryStyle::Grazing => {
            let target = order[0];
            let quad = &regions[target];
            waypoints.push(quad.centroid());
            // Leave through an edge midpoint and stop just past it. The
            // offset is on the order of the observation noise, so the two
            // observers can disagree about whether the block ever left.
            let (a, b) = quad
                .edges()
                .nth(rng.gen_range(0..4))
                .expect("quadrangle has 4 edges");
            let mid = a.add(b.sub(a).scale(0.5));
            let outward = mid
                .sub(quad.centroid())
                .normalized()
                .unwrap_or(Point::new(1.0, 0.0));
            let margin = (noise_std * uniform(rng, 0.2, 1.2)).max(0.002);
            waypoints.push(mid.add(outward.scale(margin)));
        }
    }
    Ok(waypoints)
}

fn sample_outside_point(
    rng: &mut ChaCha8Rng,
    regions: &[Quad],
    margin: f64,
) -> Result<Point, SceneError> {
    for _ in 0..2000 {
        let p = Point::new(
            uniform(rng, WORK_X.0, WORK_X.1),
            uniform(rng, WORK_Y.0, WORK_Y.1),
        );
        if regions.iter().all(|q| {
            q.contains(p, margin) == Containment::Outside
        }) {
            return Ok(p);
        }
    }
    Err(SceneError::InfeasibleConfig(
        "regions leave no free space for the trajectory".into(),
    ))
}

/// Arc-length parameterized sweep over the waypoint polyline followed by a
/// short rest at the final point.
fn sample_trajectory(waypoints: &[Point], n_frames: usize, frame_rate: f64) -> Vec<(f64, Point)> {
    let mut cumulative = vec![0.0];
    for w in waypoints.windows(2) {
        let last = *cumulative.last().expect("non-empty");
        cumulative.push(last + w[0].dist(w[1]));
    }
    let total = *cumulative.last().expect("non-empty");
    let move_frames = ((n_frames as f64) * (1.0 - DWELL_FRACTION)).round().max(2.0) as usize;

    let mut out = Vec::with_capacity(n_frames);
    for i in 0..n_frames {
        let t = i as f64 / frame_rate;
        let pos = if i >= move_frames || total <= 0.0 {
            waypoints[waypoints.len() - 1]
        } else {
            let s = total * (i as f64 / (move_frames - 1) as f64);
            point_at_arc_length(waypoints, &cumulative, s)
        };
        out.push((t, pos));
    }
    out
}

fn point_at_arc_length(waypoints: &[Point], cumulative: &[f64], s: f64) -> Point {
    for i in 1..cumulative.len() {
        if s <= cumulative[i] {
            let seg = cumulative[i] - cumulative[i - 1];
            let f = if seg <= 0.0 {
                0.0
            } else {
                (s - cumulative[i - 1]) / seg
            };
            return waypoints[i - 1].add(waypoints[i].sub(waypoints[i - 1]).scale(f));
        }
    }
    waypoints[waypoints.len() - 1]
}

/// Render the ground truth into one observer's frame with observation noise.
fn observe(
    gt: &GroundTruth,
    self_id: &str,
    peer_id: &str,
    config: &GenerationConfig,
    noise_seed: u64,
) -> Scene {
    let mut rng = ChaCha8Rng::seed_from_u64(noise_seed);
    let self_id = ObjectId::new(self_id);
    let peer_id = ObjectId::new(peer_id);
    let own_pose = gt.static_poses[&self_id];

    let mut objects = BTreeMap::new();
    for (id, obj) in &gt.objects {
        let mut o = obj.clone();
        o.raw_color = RawColor::new(
            o.raw_color.y,
            o.raw_color.cb + gauss(&mut rng, config.color_noise_std),
            o.raw_color.cr + gauss(&mut rng, config.color_noise_std),
        );
        objects.insert(id.clone(), o);
    }

    let mut regions = BTreeMap::new();
    for (id, quad) in &gt.regions {
        let local = quad.map(|p| own_pose.parent_to_local(p));
        let mut noisy = local.clone();
        for _attempt in 0..50 {
            let candidate = local.map(|p| {
                p.add(Point::new(
                    gauss(&mut rng, config.noise_std),
                    gauss(&mut rng, config.noise_std),
                ))
            });
            if let Ok(q) = Quad::new(candidate.corners) {
                noisy = q;
                break;
            }
        }
        regions.insert(
            id.clone(),
            Region {
                id: id.clone(),
                quad: noisy,
            },
        );
    }

    let true_peer = own_pose.pose_to_local(gt.static_poses[&peer_id]);
    let peer_pose = Pose {
        position: true_peer.position.add(Point::new(
            gauss(&mut rng, config.peer_position_noise_std),
            gauss(&mut rng, config.peer_position_noise_std),
        )),
        theta: true_peer.theta + gauss(&mut rng, config.peer_angle_noise_std),
    };

    let block_id = ObjectId::new("block-1");
    let mut frames = Vec::with_capacity(gt.trajectory.len());
    for (t, world_pos) in &gt.trajectory {
        let mut poses = BTreeMap::new();
        poses.insert(
            self_id.clone(),
            ObservedPose {
                position: Point::new(0.0, 0.0),
                theta: Some(0.0),
            },
        );
        poses.insert(
            peer_id.clone(),
            ObservedPose {
                position: true_peer.position.add(Point::new(
                    gauss(&mut rng, config.noise_std),
                    gauss(&mut rng, config.noise_std),
                )),
                theta: Some(true_peer.theta + gauss(&mut rng, config.peer_angle_noise_std)),
            },
        );
        for (id, pose) in &gt.static_poses {
            if *id == self_id || *id == peer_id {
                continue;
            }
            let local = own_pose.pose_to_local(*pose);
            poses.insert(
                id.clone(),
                ObservedPose {
                    position: local.position.add(Point::new(
                        gauss(&mut rng, config.noise_std),
                        gauss(&mut rng, config.noise_std),
                    )),
                    theta: Some(local.theta + gauss(&mut rng, config.peer_angle_noise_std)),
                },
            );
        }
        poses.insert(
            block_id.clone(),
            ObservedPose {
                position: own_pose.parent_to_local(*world_pos).add(Point::new(
                    gauss(&mut rng, config.noise_std),
                    gauss(&mut rng, config.noise_std),
                )),
                theta: None,
            },
        );
        frames.push(ObservationFrame {
            timestamp: *t,
            poses,
        });
    }

    Scene {
        observer: self_id,
        peer_pose,
        objects,
        regions,
        frames,
    }
}

fn extent(quad: &Quad) -> (f64, f64) {
    let mut xmin = f64::INFINITY;
    let mut xmax = f64::NEG_INFINITY;
    let mut ymin = f64::INFINITY;
    let mut ymax = f64::NEG_INFINITY;
    for p in &quad.corners {
        xmin = xmin.min(p.x);
        xmax = xmax.max(p.x);
        ymin = ymin.min(p.y);
        ymax = ymax.max(p.y);
    }
    (xmax - xmin, ymax - ymin)
}

fn uniform(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    lo + (hi - lo) * rng.gen::<f64>()
}

/// Box-Muller draw; avoids pulling in a distributions crate.
fn gauss(rng: &mut ChaCha8Rng, std: f64) -> f64 {
    if std == 0.0 {
        return 0.0;
    }
    let u1: f64 = rng.gen::<f64>().max(1e-300);
    let u2: f64 = rng.gen::<f64>();
    std * (-2.0 * u1.ln()).sqrt() * (2.0 * PI * u2).cos()
}

fn shuffle<T>(rng: &mut ChaCha8Rng, items: &mut [T]) {
    for i in (1..items.len()).rev() {
        let j = rng.gen_range(0..=i);
        items.swap(i, j);
    }
}
