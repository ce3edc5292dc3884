//! Extended Dynkin diagrams as attributed graphs, and their canonical JSON form.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::family::{Family, FamilySpec, Parity};

pub type NodeId = u32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    White,
    Grey,
    Black,
}

impl Color {
    pub fn is_dark(self) -> bool {
        self != Color::White
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Node {
    pub id: NodeId,
    pub parity: Parity,
    pub color: Color,
    #[serde(rename = "a")]
    pub a_label: u32,
}

impl Node {
    pub fn new(id: NodeId, color: Color, a_label: u32) -> Self {
        let parity = if color == Color::White { Parity::Even } else { Parity::Odd };
        Node { id, parity, color, a_label }
    }

    pub fn is_even(&self) -> bool {
        self.parity == Parity::Even
    }
}

/// Which endpoint of a multiple edge is the longer root.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Longer {
    None,
    U,
    V,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: NodeId,
    pub v: NodeId,
    pub multiplicity: u8,
    pub longer: Longer,
}

impl Edge {
    pub fn single(u: NodeId, v: NodeId) -> Self {
        Edge { u, v, multiplicity: 1, longer: Longer::None }
    }

    /// A multiple edge whose longer endpoint is `long`.
    pub fn multiple(u: NodeId, v: NodeId, multiplicity: u8, long: NodeId) -> Self {
        let longer = if long == u { Longer::U } else { Longer::V };
        Edge { u, v, multiplicity, longer }
    }

    pub fn longer_id(&self) -> Option<NodeId> {
        match self.longer {
            Longer::None => None,
            Longer::U => Some(self.u),
            Longer::V => Some(self.v),
        }
    }

    pub fn other(&self, id: NodeId) -> NodeId {
        if id == self.u {
            self.v
        } else {
            self.u
        }
    }

    /// Same edge with `u < v`.
    fn normalized(&self) -> Edge {
        if self.u <= self.v {
            self.clone()
        } else {
            let longer = match self.longer {
                Longer::None => Longer::None,
                Longer::U => Longer::V,
                Longer::V => Longer::U,
            };
            Edge { u: self.v, v: self.u, multiplicity: self.multiplicity, longer }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    spec: FamilySpec,
    nodes: Vec<Node>,
    edges: Vec<Edge>,
    lowest: NodeId,
    adjacency: Vec<Vec<usize>>,
}

impl Diagram {
    /// Assembles a diagram and checks the structural invariants: consecutive
    /// ids from 1, a connected simple graph, consistent colors and parities,
    /// at least one dark vertex, positive labels without common factor.
    pub fn new(spec: FamilySpec, mut nodes: Vec<Node>, edges: Vec<Edge>, lowest: NodeId) -> Result<Self> {
        let bad = |why: String| Err(Error::InvalidDiagram(why));
        nodes.sort_by_key(|n| n.id);
        for (k, node) in nodes.iter().enumerate() {
            if node.id as usize != k + 1 {
                return bad(format!("node ids must be 1..={}, found {}", nodes.len(), node.id));
            }
            let dark_ok = match node.color {
                Color::White => node.parity == Parity::Even,
                Color::Grey | Color::Black => node.parity == Parity::Odd,
            };
            if !dark_ok {
                return bad(format!("node {} has color {:?} but parity {}", node.id, node.color, node.parity));
            }
            if node.a_label == 0 {
                return bad(format!("node {} has a non-positive label", node.id));
            }
        }
        if nodes.is_empty() {
            return bad("diagram has no nodes".into());
        }
        let count = nodes.len() as NodeId;
        if lowest < 1 || lowest > count {
            return bad(format!("lowest root {lowest} is not a node"));
        }

        let mut edges: Vec<Edge> = edges.iter().map(Edge::normalized).collect();
        edges.sort_by_key(|e| (e.u, e.v));
        let mut adjacency = vec![Vec::new(); nodes.len()];
        for (k, e) in edges.iter().enumerate() {
            if e.u == e.v {
                return bad(format!("loop at node {}", e.u));
            }
            if e.u < 1 || e.v > count {
                return bad(format!("edge ({},{}) references a missing node", e.u, e.v));
            }
            if k > 0 && (edges[k - 1].u, edges[k - 1].v) == (e.u, e.v) {
                return bad(format!("duplicate edge ({},{})", e.u, e.v));
            }
            if !(1..=4).contains(&e.multiplicity) {
                return bad(format!("edge ({},{}) has multiplicity {}", e.u, e.v, e.multiplicity));
            }
            match (e.multiplicity, e.longer) {
                (1, Longer::None) => {}
                (1, _) => return bad(format!("single edge ({},{}) names a longer end", e.u, e.v)),
                (_, Longer::None) => return bad(format!("multiple edge ({},{}) lacks a longer end", e.u, e.v)),
                _ => {}
            }
            adjacency[(e.u - 1) as usize].push(k);
            adjacency[(e.v - 1) as usize].push(k);
        }

        let diagram = Diagram { spec, nodes, edges, lowest, adjacency };
        if !diagram.is_connected() {
            return bad("diagram is not connected".into());
        }
        if diagram.dark_count() == 0 {
            return bad("diagram has no dark vertex".into());
        }
        let gcd = diagram.nodes.iter().fold(0u32, |g, n| g.gcd(&n.a_label));
        if gcd != 1 {
            return bad(format!("a-labels share the factor {gcd}"));
        }
        Ok(diagram)
    }

    pub fn spec(&self) -> &FamilySpec {
        &self.spec
    }

    pub fn family(&self) -> Family {
        self.spec.family
    }

    pub fn parity_rule(&self) -> Parity {
        self.spec.parity_rule
    }

    /// Same diagram with a different admissibility rule.
    pub fn with_parity_rule(mut self, rule: Parity) -> Self {
        self.spec.parity_rule = rule;
        self
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn lowest(&self) -> NodeId {
        self.lowest
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn ids(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.nodes.iter().map(|n| n.id)
    }

    pub fn contains(&self, id: NodeId) -> bool {
        id >= 1 && id as usize <= self.nodes.len()
    }

    pub fn node(&self, id: NodeId) -> Result<&Node> {
        if self.contains(id) {
            Ok(&self.nodes[(id - 1) as usize])
        } else {
            Err(Error::UnknownVertex(id))
        }
    }

    /// Edges incident to `id`. Panics on an unknown id.
    pub fn incident(&self, id: NodeId) -> impl Iterator<Item = &Edge> + '_ {
        self.adjacency[(id - 1) as usize].iter().map(move |&k| &self.edges[k])
    }

    pub fn neighbors(&self, id: NodeId) -> impl Iterator<Item = NodeId> + '_ {
        self.incident(id).map(move |e| e.other(id))
    }

    pub fn edge_between(&self, a: NodeId, b: NodeId) -> Option<&Edge> {
        if !self.contains(a) || !self.contains(b) {
            return None;
        }
        self.incident(a).find(|e| e.other(a) == b)
    }

    pub fn even_ids(&self) -> Vec<NodeId> {
        self.nodes.iter().filter(|n| n.is_even()).map(|n| n.id).collect()
    }

    pub fn dark_count(&self) -> usize {
        self.nodes.iter().filter(|n| n.color.is_dark()).count()
    }

    /// Connected components of the subgraph induced on `keep`, each sorted.
    pub fn components_of(&self, keep: impl Fn(&Node) -> bool) -> Vec<Vec<NodeId>> {
        let mut seen = vec![false; self.nodes.len()];
        let mut components = Vec::new();
        for start in &self.nodes {
            if seen[(start.id - 1) as usize] || !keep(start) {
                continue;
            }
            let mut component = Vec::new();
            let mut queue = VecDeque::from([start.id]);
            seen[(start.id - 1) as usize] = true;
            while let Some(id) = queue.pop_front() {
                component.push(id);
                for next in self.neighbors(id) {
                    let k = (next - 1) as usize;
                    if !seen[k] && keep(&self.nodes[k]) {
                        seen[k] = true;
                        queue.push_back(next);
                    }
                }
            }
            component.sort_unstable();
            components.push(component);
        }
        components
    }

    fn is_connected(&self) -> bool {
        self.components_of(|_| true).len() == 1
    }

    /// Canonical, byte-stable JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&DiagramJson::from(self)).expect("diagram serialization cannot fail")
    }

    pub fn to_json_value(&self) -> Value {
        serde_json::to_value(DiagramJson::from(self)).expect("diagram serialization cannot fail")
    }

    /// Parses canonical JSON. The admissibility rule is the family default.
    pub fn from_json(text: &str) -> Result<Self> {
        let wire: DiagramJson = serde_json::from_str(text)?;
        wire.try_into()
    }

    pub fn from_json_value(value: Value) -> Result<Self> {
        let wire: DiagramJson = serde_json::from_value(value)?;
        wire.try_into()
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeJson {
    u: NodeId,
    v: NodeId,
    mult: u8,
    longer: Option<NodeId>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DiagramJson {
    family: Family,
    params: BTreeMap<String, Value>,
    nodes: Vec<Node>,
    edges: Vec<EdgeJson>,
    lowest: NodeId,
}

impl From<&Diagram> for DiagramJson {
    fn from(d: &Diagram) -> Self {
        DiagramJson {
            family: d.spec.family,
            params: d.spec.params_json(),
            nodes: d.nodes.clone(),
            edges: d
                .edges
                .iter()
                .map(|e| EdgeJson { u: e.u, v: e.v, mult: e.multiplicity, longer: e.longer_id() })
                .collect(),
            lowest: d.lowest,
        }
    }
}

impl TryFrom<DiagramJson> for Diagram {
    type Error = Error;

    fn try_from(wire: DiagramJson) -> Result<Self> {
        let spec = FamilySpec::from_params_json(wire.family, &wire.params)?;
        let mut edges = Vec::with_capacity(wire.edges.len());
        for e in wire.edges {
            let longer = match e.longer {
                None => Longer::None,
                Some(x) if x == e.u => Longer::U,
                Some(x) if x == e.v => Longer::V,
                Some(x) => {
                    return Err(Error::InvalidDiagram(format!(
                        "edge ({},{}) names {x} as its longer end",
                        e.u, e.v
                    )))
                }
            };
            edges.push(Edge { u: e.u, v: e.v, multiplicity: e.mult, longer });
        }
        let ids: BTreeSet<NodeId> = wire.nodes.iter().map(|n| n.id).collect();
        if ids.len() != wire.nodes.len() {
            return Err(Error::InvalidDiagram("duplicate node id".into()));
        }
        Diagram::new(spec, wire.nodes, edges, wire.lowest)
    }
}
