use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagram::{Diagram, NodeId};
use crate::error::{Error, Result};
use crate::family::Parity;

/// Set of circled even vertices. Odd vertices are always non-compact and are
/// never circled.
///
/// Circlings are ordered by size first, then lexicographically by their
/// sorted id lists; the minimum of an orbit under this order is its
/// representative.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Circling {
    circled: BTreeSet<NodeId>,
}

impl Circling {
    pub fn empty() -> Self {
        Circling::default()
    }

    pub fn ids(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.circled.iter().copied()
    }

    pub fn to_vec(&self) -> Vec<NodeId> {
        self.ids().collect()
    }

    pub fn contains(&self, id: NodeId) -> bool {
        self.circled.contains(&id)
    }

    pub fn len(&self) -> usize {
        self.circled.len()
    }

    pub fn is_empty(&self) -> bool {
        self.circled.is_empty()
    }

    pub(crate) fn toggle(&mut self, id: NodeId) {
        if !self.circled.remove(&id) {
            self.circled.insert(id);
        }
    }

    /// Every id must name an even vertex of `diagram`.
    pub fn validate(&self, diagram: &Diagram) -> Result<()> {
        for id in self.ids() {
            let node = diagram
                .node(id)
                .map_err(|_| Error::InvalidCircling(format!("vertex {id} is not in the diagram")))?;
            if !node.is_even() {
                return Err(Error::InvalidCircling(format!("vertex {id} is odd and cannot be circled")));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("circling serialization cannot fail")
    }

    /// Parses `"2,4,9"`; the empty string is the empty circling.
    pub fn parse_list(text: &str) -> Result<Self> {
        let mut circled = BTreeSet::new();
        for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let id = part
                .parse::<NodeId>()
                .map_err(|_| Error::InvalidCircling(format!("not a vertex id: {part:?}")))?;
            circled.insert(id);
        }
        Ok(Circling { circled })
    }
}

impl FromIterator<NodeId> for Circling {
    fn from_iter<I: IntoIterator<Item = NodeId>>(iter: I) -> Self {
        Circling { circled: iter.into_iter().collect() }
    }
}

impl<const N: usize> From<[NodeId; N]> for Circling {
    fn from(ids: [NodeId; N]) -> Self {
        ids.into_iter().collect()
    }
}

impl Ord for Circling {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.circled.iter().cmp(other.circled.iter()))
    }
}

impl PartialOrd for Circling {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Circling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, id) in self.ids().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{id}")?;
        }
        f.write_str("}")
    }
}

/// Sum of the a-labels of the circled vertices, not counting the lowest
/// root.
pub fn label_sum(diagram: &Diagram, c: &Circling) -> Result<u64> {
    c.validate(diagram)?;
    let mut sum = 0u64;
    for id in c.ids().filter(|&id| id != diagram.lowest()) {
        sum += u64::from(diagram.node(id)?.a_label);
    }
    Ok(sum)
}

/// Whether the circling corresponds to a real form: the a-label sum over the
/// circled simple roots has the parity the family requires.
pub fn is_admissible(diagram: &Diagram, c: &Circling) -> Result<bool> {
    Ok(Parity::of(label_sum(diagram, c)? as i64) == diagram.parity_rule())
}

/// Fails with `NotAdmissible` unless the circling is admissible.
pub fn require_admissible(diagram: &Diagram, c: &Circling) -> Result<()> {
    if is_admissible(diagram, c)? {
        Ok(())
    } else {
        Err(Error::NotAdmissible(c.to_vec()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::build_preferred_diagram;
    use crate::family::FamilySpec;

    #[test]
    fn order_is_size_then_lex() {
        let mut v = vec![Circling::from([2, 3]), Circling::from([1, 5]), Circling::from([9]), Circling::empty()];
        v.sort();
        assert_eq!(v, vec![Circling::empty(), Circling::from([9]), Circling::from([1, 5]), Circling::from([2, 3])]);
    }

    #[test]
    fn json_is_sorted() {
        let c = Circling::parse_list("9, 2,4").unwrap();
        assert_eq!(c.to_json(), r#"{"circled":[2,4,9]}"#);
        let back: Circling = serde_json::from_str(r#"{"circled":[9,4,2]}"#).unwrap();
        assert_eq!(back, c);
        assert_eq!(Circling::parse_list("").unwrap(), Circling::empty());
        assert!(Circling::parse_list("1,x").is_err());
    }

    #[test]
    fn validation() {
        let d = build_preferred_diagram(&FamilySpec::d(5, 3).unwrap()).unwrap();
        assert!(Circling::from([2, 4, 9]).validate(&d).is_ok());
        assert!(matches!(Circling::from([6]).validate(&d), Err(Error::InvalidCircling(_))));
        assert!(matches!(Circling::from([10]).validate(&d), Err(Error::InvalidCircling(_))));
        assert!(matches!(is_admissible(&d, &Circling::from([6])), Err(Error::InvalidCircling(_))));
    }

    #[test]
    fn admissibility_examples() {
        let d42 = build_preferred_diagram(&FamilySpec::d(4, 2).unwrap()).unwrap();
        // the drawn circling: vertex 4 (label 2) and the lowest root
        assert!(!is_admissible(&d42, &Circling::from([4, 7])).unwrap());
        assert!(!is_admissible(&d42, &Circling::empty()).unwrap());
        assert!(is_admissible(&d42, &Circling::from([1])).unwrap());

        let sl = build_preferred_diagram(&FamilySpec::sl(3, 2).unwrap()).unwrap();
        assert!(is_admissible(&sl, &Circling::from([3, 5])).unwrap());
        assert!(is_admissible(&sl, &Circling::empty()).unwrap());
        assert!(!is_admissible(&sl, &Circling::from([2, 3, 5])).unwrap());

        let d53 = build_preferred_diagram(&FamilySpec::d(5, 3).unwrap()).unwrap();
        for c in [[2, 4, 9], [1, 4, 9]] {
            assert!(is_admissible(&d53, &Circling::from(c)).unwrap());
        }
        assert!(is_admissible(&d53, &Circling::from([1, 9])).unwrap());
    }

    #[test]
    fn parity_rule_override() {
        let sl = build_preferred_diagram(&FamilySpec::sl(3, 2).unwrap()).unwrap().with_parity_rule(Parity::Odd);
        assert!(is_admissible(&sl, &Circling::from([2, 3, 5])).unwrap());
        assert!(!is_admissible(&sl, &Circling::from([3, 5])).unwrap());
    }
}
