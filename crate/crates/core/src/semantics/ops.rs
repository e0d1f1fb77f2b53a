//! Constraint-propagation evaluation of semantic programs.
//!
//! Each cognitive operation fires once its required arguments are bound,
//! in any dataflow direction its bound/unbound argument pattern permits.
//! Operations that enumerate (event selection) branch the binding
//! environment; all consistent total environments are returned.

use std::collections::BTreeMap;

use crate::events::{compatible, detect_events, EventKind, MovementEvent, MovementSequence,
    Provenance, SpatialState};
use crate::geom::{Point, Pose};
use crate::qsr::{extract_fluents, FluentTrack, TimeInterval};
use crate::scene::{ColorCategory, ObjectClass, ObjectId, Scene};

use super::program::{EntityKind, Node, Operation, SemanticEntity, SemanticProgram, Variable};
use super::statics::{static_relation_holds, FrameOfReference, LandmarkGeometry, StaticRelation};

/// A grounded value flowing between cognitive operations.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    /// The full perceptual context (object and event source).
    Context,
    Objects(Vec<ObjectId>),
    Object(ObjectId),
    Events(Vec<MovementEvent>),
    Event(MovementEvent),
    Entity(SemanticEntity),
    Location(Point),
    Path(Vec<Point>),
    Truth(bool),
}

/// Who "me" and "you" denote in this context, as robot object ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerspectiveTable {
    pub me: ObjectId,
    pub you: ObjectId,
}

/// Whether missing events may be hypothesized during evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReasoningMode {
    /// Only directly observed events count.
    Direct,
    /// Events reachable by precondition/effect chains up to `depth` count.
    Hypothetical { depth: usize },
}

/// Budgets for program search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchConfig {
    /// Maximum operation count of a conceptualized program.
    pub node_budget: usize,
    /// Maximum operations inserted while completing a partial program.
    pub completion_budget: usize,
    /// Restrict the sentence space to one preposition and two noun phrases.
    pub simple_sentences: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            node_budget: 12,
            completion_budget: 4,
            simple_sentences: true,
        }
    }
}

/// Everything a program is evaluated against: one observer's scene and its
/// derived qualitative layers.
#[derive(Debug, Clone)]
pub struct EvaluationContext {
    pub scene: Scene,
    pub fluents: Vec<FluentTrack>,
    pub movement: MovementSequence,
    pub final_state: SpatialState,
    pub perspective: PerspectiveTable,
    pub reasoning: ReasoningMode,
    pub search: SearchConfig,
    diameter: f64,
}

impl EvaluationContext {
    pub fn new(
        scene: Scene,
        perspective: PerspectiveTable,
        reasoning: ReasoningMode,
        search: SearchConfig,
    ) -> Self {
        let fluents = extract_fluents(&scene);
        let movement = detect_events(&fluents, &scene);
        let final_state = SpatialState::at_end(&fluents);
        let diameter = scene.diameter();
        EvaluationContext {
            scene,
            fluents,
            movement,
            final_state,
            perspective,
            reasoning,
            search,
            diameter,
        }
    }

    pub fn diameter(&self) -> f64 {
        self.diameter
    }

    /// The robot object id opposite the observer.
    pub fn peer_robot(&self) -> Option<ObjectId> {
        self.scene
            .objects
            .values()
            .find(|o| o.class == ObjectClass::Robot && o.id != self.scene.observer)
            .map(|o| o.id.clone())
    }

    pub fn resolve_reference(&self, symbol: &str) -> Option<ObjectId> {
        match symbol {
            "me" => Some(self.perspective.me.clone()),
            "you" => Some(self.perspective.you.clone()),
            _ => None,
        }
    }

    /// Full pose of a robot in the observer frame.
    pub fn robot_pose(&self, id: &ObjectId) -> Option<Pose> {
        if *id == self.scene.observer {
            return Some(Pose::new(0.0, 0.0, 0.0));
        }
        if Some(id.clone()) == self.peer_robot() {
            return Some(self.scene.peer_pose);
        }
        None
    }

    pub fn landmark_geometry(&self, id: &ObjectId) -> Option<LandmarkGeometry> {
        if let Some(pose) = self.robot_pose(id) {
            return Some(pose.into());
        }
        self.scene.last_pose_of(id).map(|p| LandmarkGeometry {
            position: p.position,
            theta: p.theta,
        })
    }

    fn objects_from(&self, value: &Value) -> Option<Vec<ObjectId>> {
        match value {
            Value::Context => Some(self.scene.objects.keys().cloned().collect()),
            Value::Objects(ids) => Some(ids.clone()),
            _ => None,
        }
    }

    fn events_from(&self, value: &Value) -> Option<Vec<MovementEvent>> {
        match value {
            Value::Context => Some(self.movement.events().to_vec()),
            Value::Events(evs) => Some(evs.clone()),
            _ => None,
        }
    }

    fn observations(&self, id: &ObjectId) -> Vec<(f64, Point)> {
        self.scene.observations_of(id).collect()
    }

    fn nearest_observation(&self, id: &ObjectId, t: f64) -> Option<Point> {
        self.observations(id)
            .into_iter()
            .min_by(|(ta, _), (tb, _)| {
                (ta - t)
                    .abs()
                    .total_cmp(&(tb - t).abs())
                    .then(ta.total_cmp(tb))
            })
            .map(|(_, p)| p)
    }
}

/// One consistent total binding of a program's variables.
#[derive(Debug, Clone, PartialEq)]
pub struct EvaluationResult {
    pub consistent: bool,
    pub bindings: BTreeMap<Variable, Value>,
    /// Ranking score in [0, 1]; direct evaluation scores 1, completions
    /// score the fraction of content the parsed input contributed.
    pub score: f64,
}

impl EvaluationResult {
    pub fn value_of(&self, var: &Variable) -> Option<&Value> {
        self.bindings.get(var)
    }
}

type Env = BTreeMap<Variable, Value>;

enum Fire {
    /// Required inputs not bound yet.
    NotReady,
    /// Inputs bound but the constraint fails: this environment dies.
    Fail,
    Branches(Vec<Env>),
}

/// Evaluate a complete program against a context.
pub fn evaluate(program: &SemanticProgram, ctx: &EvaluationContext) -> Vec<EvaluationResult> {
    evaluate_with(program, ctx, &BTreeMap::new())
}

/// Evaluate with some variables pre-bound (used by tests and by partial
/// interpretation to check direction independence).
pub fn evaluate_with(
    program: &SemanticProgram,
    ctx: &EvaluationContext,
    initial: &Env,
) -> Vec<EvaluationResult> {
    evaluate_with_reasoning(program, ctx, initial, ctx.reasoning)
}

/// Evaluate while overriding the context's reasoning mode. Description
/// construction must stay grounded in observed events even when the same
/// context later interprets with hypothetical reasoning.
pub fn evaluate_with_reasoning(
    program: &SemanticProgram,
    ctx: &EvaluationContext,
    initial: &Env,
    reasoning: ReasoningMode,
) -> Vec<EvaluationResult> {
    if !program.is_complete() {
        return Vec::new();
    }
    let mut env = initial.clone();
    for b in &program.binds {
        let entity = match SemanticEntity::new(b.kind, b.symbol.clone()) {
            Ok(e) => e,
            Err(_) => return Vec::new(),
        };
        let value = Value::Entity(entity);
        match env.get(&b.var) {
            Some(existing) if *existing != value => return Vec::new(),
            _ => {
                env.insert(b.var.clone(), value);
            }
        }
    }
    let remaining: Vec<usize> = (0..program.nodes.len()).collect();
    solve(program, &remaining, env, ctx, reasoning)
        .into_iter()
        .map(|bindings| EvaluationResult {
            consistent: true,
            bindings,
            score: 1.0,
        })
        .collect()
}

fn solve(
    program: &SemanticProgram,
    remaining: &[usize],
    env: Env,
    ctx: &EvaluationContext,
    reasoning: ReasoningMode,
) -> Vec<Env> {
    if remaining.is_empty() {
        return vec![env];
    }
    for (pos, &node_idx) in remaining.iter().enumerate() {
        match try_fire(&program.nodes[node_idx], &env, ctx, reasoning) {
            Fire::NotReady => continue,
            Fire::Fail => return Vec::new(),
            Fire::Branches(envs) => {
                let rest: Vec<usize> = remaining
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != pos)
                    .map(|(_, v)| *v)
                    .collect();
                let mut out = Vec::new();
                for e in envs {
                    out.extend(solve(program, &rest, e, ctx, reasoning));
                }
                return out;
            }
        }
    }
    // No operation had an applicable direction: evaluation failure.
    Vec::new()
}

fn try_fire(node: &Node, env: &Env, ctx: &EvaluationContext, reasoning: ReasoningMode) -> Fire {
    match node.op {
        Operation::GetContext => {
            let [out] = args1(node);
            bind_or_check(env, out, Value::Context)
        }
        Operation::FilterByClass => {
            let [out, input, class] = args3(node);
            let (Some(input), Some(class)) = (env.get(input), env.get(class)) else {
                return Fire::NotReady;
            };
            let Some(ids) = ctx.objects_from(input) else {
                return Fire::NotReady;
            };
            let Value::Entity(e) = class else {
                return Fire::NotReady;
            };
            let Some(wanted) = ObjectClass::parse(&e.symbol) else {
                return Fire::Fail;
            };
            let filtered: Vec<ObjectId> = ids
                .into_iter()
                .filter(|id| {
                    ctx.scene
                        .objects
                        .get(id)
                        .is_some_and(|o| o.class == wanted)
                })
                .collect();
            bind_or_check(env, out, Value::Objects(filtered))
        }
        Operation::FilterByColor => {
            let [out, input, color] = args3(node);
            let (Some(input), Some(color)) = (env.get(input), env.get(color)) else {
                return Fire::NotReady;
            };
            let Some(ids) = ctx.objects_from(input) else {
                return Fire::NotReady;
            };
            let Value::Entity(e) = color else {
                return Fire::NotReady;
            };
            let Some(wanted) = ColorCategory::parse(&e.symbol) else {
                return Fire::Fail;
            };
            let filtered: Vec<ObjectId> = ids
                .into_iter()
                .filter(|id| {
                    ctx.scene
                        .objects
                        .get(id)
                        .is_some_and(|o| ColorCategory::classify(o.raw_color) == wanted)
                })
                .collect();
            bind_or_check(env, out, Value::Objects(filtered))
        }
        Operation::UniqueEntity => {
            let [out, input] = args2(node);
            let Some(input) = env.get(input) else {
                return Fire::NotReady;
            };
            let Some(ids) = ctx.objects_from(input) else {
                return Fire::NotReady;
            };
            if ids.len() != 1 {
                return Fire::Fail;
            }
            bind_or_check(env, out, Value::Object(ids[0].clone()))
        }
        Operation::SelectEvent => {
            let [out, source, undergoer] = args3(node);
            let (Some(source), Some(undergoer)) = (env.get(source), env.get(undergoer)) else {
                return Fire::NotReady;
            };
            let Some(events) = ctx.events_from(source) else {
                return Fire::NotReady;
            };
            let Value::Object(u) = undergoer else {
                return Fire::NotReady;
            };
            let candidates: Vec<MovementEvent> = events
                .into_iter()
                .filter(|e| &e.undergoer == u)
                .collect();
            if candidates.is_empty() {
                return Fire::Fail;
            }
            match env.get(out) {
                Some(Value::Event(bound)) => {
                    if candidates.iter().any(|c| c == bound) {
                        Fire::Branches(vec![env.clone()])
                    } else {
                        Fire::Fail
                    }
                }
                Some(_) => Fire::Fail,
                None => Fire::Branches(
                    candidates
                        .into_iter()
                        .map(|c| {
                            let mut e = env.clone();
                            e.insert(out.clone(), Value::Event(c));
                            e
                        })
                        .collect(),
                ),
            }
        }
        Operation::ApplyPath => {
            let [out, event] = args2(node);
            let Some(Value::Event(ev)) = env.get(event) else {
                return not_ready_or_fail(env, event);
            };
            let path: Vec<Point> = ctx
                .observations(&ev.undergoer)
                .into_iter()
                .filter(|(t, _)| *t >= ev.interval.start && *t <= ev.interval.end)
                .map(|(_, p)| p)
                .collect();
            bind_or_check(env, out, Value::Path(path))
        }
        Operation::ApplySource => {
            let [out, event] = args2(node);
            let Some(Value::Event(ev)) = env.get(event) else {
                return not_ready_or_fail(env, event);
            };
            match ctx.nearest_observation(&ev.undergoer, ev.interval.start) {
                Some(p) => bind_or_check(env, out, Value::Location(p)),
                None => Fire::Fail,
            }
        }
        Operation::ApplyGoal => {
            let [out, event] = args2(node);
            let Some(Value::Event(ev)) = env.get(event) else {
                return not_ready_or_fail(env, event);
            };
            match ctx.nearest_observation(&ev.undergoer, ev.interval.end) {
                Some(p) => bind_or_check(env, out, Value::Location(p)),
                None => Fire::Fail,
            }
        }
        Operation::ApplyDynamicSpatialRelation => {
            let [out, source, relation, landmark] = args4(node);
            let (Some(source_v), Some(relation), Some(landmark)) =
                (env.get(source), env.get(relation), env.get(landmark))
            else {
                return Fire::NotReady;
            };
            let Some(events) = ctx.events_from(source_v) else {
                return Fire::NotReady;
            };
            let Value::Entity(rel) = relation else {
                return Fire::NotReady;
            };
            let Value::Object(lm) = landmark else {
                return Fire::NotReady;
            };
            let Some(kind) = dynamic_relation_kind(&rel.symbol) else {
                return Fire::Fail;
            };
            let mut matching: Vec<MovementEvent> = events
                .into_iter()
                .filter(|e| e.kind == kind && &e.landmark == lm)
                .collect();
            // Reasoning about possible events: accept a description the
            // observed sequence could still be extended to.
            if matching.is_empty() && *source_v == Value::Context {
                if let ReasoningMode::Hypothetical { depth } = ctx.reasoning {
                    if let Some(block) = ctx.scene.moving_block() {
                        let hypothesis = MovementEvent {
                            kind,
                            undergoer: block.id.clone(),
                            landmark: lm.clone(),
                            interval: TimeInterval::new(0.0, 1.0),
                            provenance: Provenance::Hypothesized,
                        };
                        if compatible(&hypothesis, &ctx.movement, &ctx.final_state, depth) {
                            matching.push(hypothesis);
                        }
                    }
                }
            }
            bind_or_check(env, out, Value::Events(matching))
        }
        Operation::ApplyStaticSpatialRelation => {
            let [out, location, relation, landmark, frame, perspective] = args6(node);
            let (Some(location), Some(relation), Some(landmark), Some(frame), Some(persp)) = (
                env.get(location),
                env.get(relation),
                env.get(landmark),
                env.get(frame),
                env.get(perspective),
            ) else {
                return Fire::NotReady;
            };
            let Value::Location(target) = location else {
                return Fire::NotReady;
            };
            let Value::Entity(rel) = relation else {
                return Fire::NotReady;
            };
            let Some(rel) = StaticRelation::parse(&rel.symbol) else {
                return Fire::Fail;
            };
            let Value::Entity(frame) = frame else {
                return Fire::NotReady;
            };
            let Some(frame) = FrameOfReference::parse(&frame.symbol) else {
                return Fire::Fail;
            };
            let lm_id = match landmark {
                Value::Object(id) => id.clone(),
                Value::Entity(e) if e.kind == EntityKind::LandmarkReference => {
                    match ctx.resolve_reference(&e.symbol) {
                        Some(id) => id,
                        None => return Fire::Fail,
                    }
                }
                _ => return Fire::NotReady,
            };
            let Value::Entity(persp) = persp else {
                return Fire::NotReady;
            };
            let viewer_id = match ctx.resolve_reference(&persp.symbol) {
                Some(id) => id,
                None => return Fire::Fail,
            };
            let Some(lm_geom) = ctx.landmark_geometry(&lm_id) else {
                return Fire::Fail;
            };
            let Some(viewer) = ctx.robot_pose(&viewer_id) else {
                return Fire::Fail;
            };
            if static_relation_holds(rel, frame, *target, &lm_geom, viewer, ctx.diameter) {
                bind_or_check(env, out, Value::Truth(true))
            } else {
                Fire::Fail
            }
        }
    }
}

fn dynamic_relation_kind(symbol: &str) -> Option<EventKind> {
    match symbol {
        "into" => Some(EventKind::MovesInto),
        "out-of" => Some(EventKind::MovesOutOf),
        "across" => Some(EventKind::MovesAcross),
        "along" => Some(EventKind::MovesAlong),
        _ => None,
    }
}

fn bind_or_check(env: &Env, var: &Variable, value: Value) -> Fire {
    match env.get(var) {
        Some(existing) if *existing == value => Fire::Branches(vec![env.clone()]),
        Some(_) => Fire::Fail,
        None => {
            let mut e = env.clone();
            e.insert(var.clone(), value);
            Fire::Branches(vec![e])
        }
    }
}

/// Distinguish "argument not bound yet" from "bound to the wrong type".
fn not_ready_or_fail(env: &Env, var: &Variable) -> Fire {
    if env.contains_key(var) {
        Fire::Fail
    } else {
        Fire::NotReady
    }
}

fn args1(node: &Node) -> [&Variable; 1] {
    [&node.args[0]]
}

fn args2(node: &Node) -> [&Variable; 2] {
    [&node.args[0], &node.args[1]]
}

fn args3(node: &Node) -> [&Variable; 3] {
    [&node.args[0], &node.args[1], &node.args[2]]
}

fn args4(node: &Node) -> [&Variable; 4] {
    [&node.args[0], &node.args[1], &node.args[2], &node.args[3]]
}

fn args6(node: &Node) -> [&Variable; 6] {
    [
        &node.args[0],
        &node.args[1],
        &node.args[2],
        &node.args[3],
        &node.args[4],
        &node.args[5],
    ]
}
