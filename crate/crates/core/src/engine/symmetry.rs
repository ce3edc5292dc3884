use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagram::{Color, Diagram, NodeId};
use crate::engine::circling::Circling;
use crate::error::{Error, Result};
use crate::family::Parity;
use crate::iso::{for_each_isomorphism, LabeledGraph};

/// Permutation of the vertex ids, `perm[k - 1]` being the image of `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symmetry {
    perm: Vec<NodeId>,
    fixes_lowest: bool,
}

#[derive(Serialize, Deserialize)]
struct SymmetryJson {
    perm: Vec<NodeId>,
    cycles: String,
    fixes_lowest: bool,
}

impl Symmetry {
    pub fn identity(diagram: &Diagram) -> Self {
        Symmetry { perm: diagram.ids().collect(), fixes_lowest: true }
    }

    /// Checks that `perm` preserves parity, color, labels and edges.
    pub fn from_perm(diagram: &Diagram, perm: Vec<NodeId>) -> Result<Self> {
        let n = diagram.len();
        let mut seen = vec![false; n];
        if perm.len() != n {
            return Err(Error::InvalidParams(format!("permutation has {} entries, diagram has {n} vertices", perm.len())));
        }
        for &p in &perm {
            if p == 0 || p as usize > n || seen[p as usize - 1] {
                return Err(Error::InvalidParams(format!("{perm:?} is not a permutation of 1..={n}")));
            }
            seen[p as usize - 1] = true;
        }
        let s = Symmetry { fixes_lowest: perm[diagram.lowest() as usize - 1] == diagram.lowest(), perm };
        for node in diagram.nodes() {
            let image = diagram.node(s.apply(node.id))?;
            if (node.parity, node.color, node.a_label) != (image.parity, image.color, image.a_label) {
                return Err(Error::InvalidParams(format!("vertex {} and its image {} differ", node.id, image.id)));
            }
        }
        for e in diagram.edges() {
            let (u, v) = (s.apply(e.u), s.apply(e.v));
            let ok = diagram.edge_between(u, v).is_some_and(|f| {
                f.multiplicity == e.multiplicity && f.longer_id() == e.longer_id().map(|l| s.apply(l))
            });
            if !ok {
                return Err(Error::InvalidParams(format!("edge {}-{} is not preserved", e.u, e.v)));
            }
        }
        Ok(s)
    }

    pub fn perm(&self) -> &[NodeId] {
        &self.perm
    }

    pub fn apply(&self, id: NodeId) -> NodeId {
        self.perm[id as usize - 1]
    }

    pub fn apply_circling(&self, c: &Circling) -> Circling {
        c.ids().map(|id| self.apply(id)).collect()
    }

    /// Whether the lowest root is mapped to itself.
    pub fn fixes_lowest(&self) -> bool {
        self.fixes_lowest
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(k, &p)| p as usize == k + 1)
    }

    pub fn inverse(&self) -> Symmetry {
        let mut perm = vec![0; self.perm.len()];
        for (k, &p) in self.perm.iter().enumerate() {
            perm[p as usize - 1] = k as NodeId + 1;
        }
        Symmetry { perm, fixes_lowest: self.fixes_lowest }
    }

    /// Disjoint cycle notation, fixed points omitted; `"()"` for the identity.
    pub fn cycles(&self) -> String {
        let mut seen = vec![false; self.perm.len()];
        let mut out = String::new();
        for start in 1..=self.perm.len() as NodeId {
            if seen[start as usize - 1] || self.apply(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start as usize - 1] = true;
            let mut at = self.apply(start);
            while at != start {
                seen[at as usize - 1] = true;
                cycle.push(at);
                at = self.apply(at);
            }
            let body: Vec<String> = cycle.iter().map(NodeId::to_string).collect();
            out.push_str(&format!("({})", body.join(" ")));
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(SymmetryJson { perm: self.perm.clone(), cycles: self.cycles(), fixes_lowest: self.fixes_lowest })
            .expect("symmetry serialization cannot fail")
    }
}

impl Serialize for Symmetry {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SymmetryJson { perm: self.perm.clone(), cycles: self.cycles(), fixes_lowest: self.fixes_lowest }.serialize(serializer)
    }
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycles())
    }
}

fn labeled_graph(diagram: &Diagram) -> LabeledGraph<(Parity, Color, u32)> {
    let keys = diagram.nodes().iter().map(|n| (n.parity, n.color, n.a_label)).collect();
    let mut g = LabeledGraph::new(keys);
    for e in diagram.edges() {
        let longer = e.longer_id().map(|l| l as usize - 1);
        g.connect(e.u as usize - 1, e.v as usize - 1, e.multiplicity, longer);
    }
    g
}

/// All automorphisms of the decorated diagram, identity first, then in
/// lexicographic order of their permutations.
pub fn automorphisms(diagram: &Diagram) -> Vec<Symmetry> {
    let g = labeled_graph(diagram);
    let mut out = Vec::new();
    for_each_isomorphism(&g, &g, |map| {
        let perm: Vec<NodeId> = map.iter().map(|&w| w as NodeId + 1).collect();
        let fixes_lowest = perm[diagram.lowest() as usize - 1] == diagram.lowest();
        out.push(Symmetry { perm, fixes_lowest });
        true
    });
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::build_preferred_diagram;
    use crate::family::FamilySpec;

    fn build(spec: FamilySpec) -> Diagram {
        build_preferred_diagram(&spec).unwrap()
    }

    #[test]
    fn d53_fork_swap() {
        let d = build(FamilySpec::d(5, 3).unwrap());
        let auts = automorphisms(&d);
        assert_eq!(auts.len(), 2);
        assert!(auts[0].is_identity());
        assert_eq!(auts[1].cycles(), "(1 2)");
        assert!(auts[1].fixes_lowest());
        assert_eq!(auts[1].apply_circling(&Circling::from([2, 4, 9])), Circling::from([1, 4, 9]));
    }

    #[test]
    fn sl32_reflection() {
        let d = build(FamilySpec::sl(3, 2).unwrap());
        let auts = automorphisms(&d);
        assert_eq!(auts.len(), 2);
        assert_eq!(auts[1].cycles(), "(1 3)(4 7)(5 6)");
        assert!(!auts[1].fixes_lowest());
        assert_eq!(auts[1].inverse(), auts[1]);
    }

    #[test]
    fn every_automorphism_passes_the_check() {
        for spec in [FamilySpec::sl(4, 3).unwrap(), FamilySpec::d(4, 2).unwrap(), FamilySpec::f4(), FamilySpec::g3()] {
            let d = build(spec);
            for s in automorphisms(&d) {
                assert_eq!(Symmetry::from_perm(&d, s.perm().to_vec()).unwrap(), s);
            }
        }
    }

    #[test]
    fn from_perm_rejects() {
        let d = build(FamilySpec::d(5, 3).unwrap());
        let mut p: Vec<NodeId> = d.ids().collect();
        p.swap(7, 8);
        assert!(Symmetry::from_perm(&d, p).is_err());
        assert!(Symmetry::from_perm(&d, vec![1, 1, 3, 4, 5, 6, 7, 8, 9]).is_err());
        assert!(Symmetry::from_perm(&d, vec![1]).is_err());
    }

    #[test]
    fn json_shape() {
        let d = build(FamilySpec::d(5, 3).unwrap());
        let s = &automorphisms(&d)[1];
        assert_eq!(
            serde_json::to_string(s).unwrap(),
            r#"{"perm":[2,1,3,4,5,6,7,8,9],"cycles":"(1 2)","fixes_lowest":true}"#
        );
    }
}
