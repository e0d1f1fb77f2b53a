//! Semantic programs: networks of cognitive operations and bind statements
//! linked by shared variables.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Variable(pub String);

impl Variable {
    pub fn new(name: impl Into<String>) -> Self {
        let name = name.into();
        debug_assert!(name.starts_with('?'), "variables start with ?");
        Variable(name)
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EntityKind {
    ObjectClass,
    ColorCategory,
    DynamicSpatialRelation,
    StaticSpatialRelation,
    FrameOfReference,
    EventProfile,
    LandmarkReference,
}

impl EntityKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            EntityKind::ObjectClass => "object-class",
            EntityKind::ColorCategory => "color-category",
            EntityKind::DynamicSpatialRelation => "dynamic-spatial-relation",
            EntityKind::StaticSpatialRelation => "static-spatial-relation",
            EntityKind::FrameOfReference => "frame-of-reference",
            EntityKind::EventProfile => "event-profile",
            EntityKind::LandmarkReference => "landmark-reference",
        }
    }

    /// The closed symbol inventory of this entity kind.
    pub fn inventory(&self) -> &'static [&'static str] {
        match self {
            EntityKind::ObjectClass => &["block", "box", "robot", "region"],
            EntityKind::ColorCategory => &["red", "green", "blue", "yellow"],
            EntityKind::DynamicSpatialRelation => &["across", "into", "out-of", "along"],
            EntityKind::StaticSpatialRelation => {
                &["left", "right", "front", "back", "near", "far"]
            }
            EntityKind::FrameOfReference => &["relative", "intrinsic", "absolute"],
            EntityKind::EventProfile => &["path", "source", "goal"],
            EntityKind::LandmarkReference => &["me", "you"],
        }
    }
}

/// A categorical value that cognitive operations work with.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SemanticEntity {
    pub kind: EntityKind,
    pub symbol: String,
}

impl SemanticEntity {
    pub fn new(kind: EntityKind, symbol: impl Into<String>) -> Result<Self, ProgramError> {
        let symbol = symbol.into();
        if !kind.inventory().contains(&symbol.as_str()) {
            return Err(ProgramError::UnknownSymbol { kind, symbol });
        }
        Ok(SemanticEntity { kind, symbol })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Operation {
    GetContext,
    FilterByClass,
    FilterByColor,
    ApplyPath,
    ApplySource,
    ApplyGoal,
    ApplyDynamicSpatialRelation,
    ApplyStaticSpatialRelation,
    SelectEvent,
    UniqueEntity,
}

impl Operation {
    pub fn as_str(&self) -> &'static str {
        match self {
            Operation::GetContext => "get-context",
            Operation::FilterByClass => "filter-by-class",
            Operation::FilterByColor => "filter-by-color",
            Operation::ApplyPath => "apply-path",
            Operation::ApplySource => "apply-source",
            Operation::ApplyGoal => "apply-goal",
            Operation::ApplyDynamicSpatialRelation => "apply-dynamic-spatial-relation",
            Operation::ApplyStaticSpatialRelation => "apply-static-spatial-relation",
            Operation::SelectEvent => "select-event",
            Operation::UniqueEntity => "unique-entity",
        }
    }
}

/// One cognitive-operation application.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Node {
    pub op: Operation,
    pub args: Vec<Variable>,
}

impl Node {
    pub fn new(op: Operation, args: &[&Variable]) -> Self {
        Node {
            op,
            args: args.iter().map(|v| (*v).clone()).collect(),
        }
    }
}

/// A bind statement introducing a semantic entity under a variable.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bind {
    pub kind: EntityKind,
    pub var: Variable,
    pub symbol: String,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ProgramError {
    #[error("symbol `{symbol}` is not in the {kind:?} inventory")]
    UnknownSymbol { kind: EntityKind, symbol: String },
}

/// The meaning representation: operations plus binds over shared variables.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SemanticProgram {
    pub nodes: Vec<Node>,
    pub binds: Vec<Bind>,
}

impl SemanticProgram {
    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty() && self.binds.is_empty()
    }

    pub fn piece_count(&self) -> usize {
        self.nodes.len() + self.binds.len()
    }

    /// Search cost used by conceptualization.
    pub fn cost(&self) -> f64 {
        self.nodes.len() as f64 + 0.1 * self.binds.len() as f64
    }

    pub fn variables(&self) -> BTreeSet<Variable> {
        let mut vars = BTreeSet::new();
        for n in &self.nodes {
            vars.extend(n.args.iter().cloned());
        }
        for b in &self.binds {
            vars.insert(b.var.clone());
        }
        vars
    }

    /// A complete program has at least one operation, a connected
    /// variable-sharing graph, and no unused bind.
    pub fn is_complete(&self) -> bool {
        if self.nodes.is_empty() {
            return false;
        }
        for b in &self.binds {
            if !self.nodes.iter().any(|n| n.args.contains(&b.var)) {
                return false;
            }
        }
        self.is_connected()
    }

    /// Connectivity of the piece graph: pieces are nodes/binds, joined when
    /// they share a variable.
    pub fn is_connected(&self) -> bool {
        let total = self.piece_count();
        if total <= 1 {
            return true;
        }
        let piece_vars: Vec<BTreeSet<&Variable>> = self
            .nodes
            .iter()
            .map(|n| n.args.iter().collect::<BTreeSet<_>>())
            .chain(self.binds.iter().map(|b| {
                let mut s = BTreeSet::new();
                s.insert(&b.var);
                s
            }))
            .collect();
        let mut visited = vec![false; total];
        let mut stack = vec![0usize];
        visited[0] = true;
        let mut seen = 1;
        while let Some(i) = stack.pop() {
            for j in 0..total {
                if !visited[j] && !piece_vars[i].is_disjoint(&piece_vars[j]) {
                    visited[j] = true;
                    seen += 1;
                    stack.push(j);
                }
            }
        }
        seen == total
    }

    /// The variable designating the program's topic: the selected event if
    /// any, else the unique entity, else the output of the last operation.
    pub fn topic_variable(&self) -> Option<&Variable> {
        if let Some(n) = self.nodes.iter().find(|n| n.op == Operation::SelectEvent) {
            return n.args.first();
        }
        if let Some(n) = self.nodes.iter().find(|n| n.op == Operation::UniqueEntity) {
            return n.args.first();
        }
        self.nodes.last().and_then(|n| n.args.first())
    }

    /// Structurally canonical form: pieces are sorted by a variable-name
    /// independent key and variables renamed in first-occurrence order, so
    /// two programs equal up to renaming serialize identically.
    pub fn canonical(&self) -> SemanticProgram {
        let colors = self.stable_variable_colors();
        let mut nodes = self.nodes.clone();
        nodes.sort_by_key(|n| {
            (
                n.op,
                n.args
                    .iter()
                    .map(|v| colors[v].clone())
                    .collect::<Vec<_>>(),
            )
        });
        let mut binds = self.binds.clone();
        binds.sort_by_key(|b| (b.kind, b.symbol.clone(), colors[&b.var].clone()));

        let mut rename: BTreeMap<Variable, Variable> = BTreeMap::new();
        let mut fresh = 0usize;
        let mut renamed = |v: &Variable, map: &mut BTreeMap<Variable, Variable>| {
            map.entry(v.clone())
                .or_insert_with(|| {
                    let name = Variable(format!("?v{fresh}"));
                    fresh += 1;
                    name
                })
                .clone()
        };
        let nodes = nodes
            .iter()
            .map(|n| Node {
                op: n.op,
                args: n.args.iter().map(|v| renamed(v, &mut rename)).collect(),
            })
            .collect();
        let binds = binds
            .iter()
            .map(|b| Bind {
                kind: b.kind,
                var: renamed(&b.var, &mut rename),
                symbol: b.symbol.clone(),
            })
            .collect();
        SemanticProgram { nodes, binds }
    }

    /// Equality up to variable renaming.
    pub fn equivalent(&self, other: &SemanticProgram) -> bool {
        self.canonical() == other.canonical()
    }

    /// Color refinement over the variable-sharing structure. Three rounds
    /// are enough to separate every variable role in the sentence space
    /// this engine generates.
    fn stable_variable_colors(&self) -> BTreeMap<Variable, String> {
        let vars = self.variables();
        let mut colors: BTreeMap<Variable, String> = vars
            .iter()
            .map(|v| {
                let mut tags: Vec<String> = self
                    .binds
                    .iter()
                    .filter(|b| &b.var == v)
                    .map(|b| format!("{}:{}", b.kind.as_str(), b.symbol))
                    .collect();
                tags.sort();
                (v.clone(), tags.join(","))
            })
            .collect();
        for _ in 0..3 {
            let mut next = BTreeMap::new();
            for v in &vars {
                let mut sig: Vec<String> = Vec::new();
                for n in &self.nodes {
                    for (pos, arg) in n.args.iter().enumerate() {
                        if arg == v {
                            let others: Vec<&str> = n
                                .args
                                .iter()
                                .map(|a| colors[a].as_str())
                                .collect();
                            sig.push(format!(
                                "{}#{}[{}]",
                                n.op.as_str(),
                                pos,
                                others.join("|")
                            ));
                        }
                    }
                }
                sig.sort();
                next.insert(v.clone(), format!("{}&{}", colors[v], sig.join(";")));
            }
            colors = next;
        }
        colors
    }
}

impl fmt::Display for SemanticProgram {
    /// S-expression rendering: one bind or node per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.binds {
            writeln!(f, "(bind {} {} {})", b.kind.as_str(), b.var, b.symbol)?;
        }
        for n in &self.nodes {
            write!(f, "({}", n.op.as_str())?;
            for a in &n.args {
                write!(f, " {a}")?;
            }
            writeln!(f, ")")?;
        }
        Ok(())
    }
}
